//! Exact elements of cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored as the unique reduced residue modulo the N-th
//! cyclotomic polynomial `Φ_N`: a vector of `deg Φ_N = φ(N)` rational
//! coefficients in the basis `1, ζ, ζ², …`. A residue whose non-constant
//! coefficients all vanish is demoted to conductor 1, so rational values
//! have exactly one representation regardless of how they were produced,
//! and mixed-conductor arithmetic is permitted exactly when one operand
//! is rational.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactError;

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The N-th cyclotomic polynomial as a monic integer polynomial,
/// coefficients ascending, length `φ(N) + 1`.
///
/// Computed by exact division: `Φ_N = (x^N − 1) / Π_{d|N, d<N} Φ_d`.
/// Results are cached for the life of the process.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    assert!(n >= 1, "conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let poly = compute_cyclotomic(n);
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(n, Arc::clone(&arc));
    arc
}

fn compute_cyclotomic(n: u32) -> Vec<BigInt> {
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = int_poly_exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(b.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let dq = rem.len() - 1 - db;
    let mut quot = vec![BigInt::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let c = std::mem::take(&mut rem[i + db]);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().take(db).enumerate() {
            let t = &c * bj;
            rem[i + j] -= t;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact cyclotomic division");
    quot
}

fn phi_deg(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// An exact element of `Q(ζ_N)` where `ζ_N = e^{2πi/N}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycRat {
    conductor: u32,
    /// Reduced residue mod `Φ_N`, ascending powers of ζ, length `φ(N)`.
    coeffs: Vec<Rat>,
}

impl CycRat {
    /// The embedding of a rational number (conductor 1).
    pub fn rational(r: Rat) -> Self {
        CycRat { conductor: 1, coeffs: vec![r] }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(rat_i64(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Self::rational(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// The primitive N-th root of unity `ζ_N`.
    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// `ζ_N^k`, with `k` taken modulo N (negative exponents allowed).
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rat::zero(); n as usize];
        v[k] = Rat::one();
        Self::reduce(n, v)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The rational value, if the residue is in fact rational.
    pub fn to_rational(&self) -> Result<Rat, ExactError> {
        if self.conductor == 1 {
            Ok(self.coeffs[0].clone())
        } else {
            Err(ExactError::NotRational(self.clone()))
        }
    }

    /// The integer value, if the residue is a rational integer.
    pub fn to_integer(&self) -> Result<BigInt, ExactError> {
        let r = self.to_rational()?;
        if r.denom().is_one() {
            Ok(r.numer().clone())
        } else {
            Err(ExactError::NotInteger(r))
        }
    }

    /// Reduce an arbitrary coefficient vector (any length) mod `Φ_N` and
    /// demote to conductor 1 when the result is rational.
    fn reduce(n: u32, mut v: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let d = phi.len() - 1;
        if v.len() < d {
            v.resize(d, Rat::zero());
        }
        for i in (d..v.len()).rev() {
            let c = std::mem::replace(&mut v[i], Rat::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().take(d).enumerate() {
                if !pj.is_zero() {
                    let t = &c * Rat::from_integer(pj.clone());
                    v[i - d + j] -= t;
                }
            }
        }
        v.truncate(d);
        Self::normalized(n, v)
    }

    fn normalized(n: u32, mut v: Vec<Rat>) -> Self {
        if n != 1 && v[1..].iter().all(|c| c.is_zero()) {
            v.truncate(1);
            CycRat { conductor: 1, coeffs: v }
        } else {
            CycRat { conductor: n, coeffs: v }
        }
    }

    /// Embed a rational value into conductor `n`.
    fn promoted(&self, n: u32) -> Self {
        debug_assert_eq!(self.conductor, 1);
        let mut v = vec![Rat::zero(); phi_deg(n)];
        v[0] = self.coeffs[0].clone();
        CycRat { conductor: n, coeffs: v }
    }

    fn common(a: &Self, b: &Self) -> Result<(Self, Self), ExactError> {
        if a.conductor == b.conductor {
            Ok((a.clone(), b.clone()))
        } else if a.conductor == 1 {
            Ok((a.promoted(b.conductor), b.clone()))
        } else if b.conductor == 1 {
            Ok((a.clone(), b.promoted(a.conductor)))
        } else {
            Err(ExactError::ConductorMismatch { left: a.conductor, right: b.conductor })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let (a, mut b) = Self::common(self, other)?;
        for (bi, ai) in b.coeffs.iter_mut().zip(&a.coeffs) {
            *bi += ai;
        }
        Ok(Self::normalized(a.conductor, b.coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&(-other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        // Rational operands scale coefficient-wise; no reduction needed.
        if self.conductor == 1 {
            return Ok(other.scaled(&self.coeffs[0]));
        }
        if other.conductor == 1 {
            return Ok(self.scaled(&other.coeffs[0]));
        }
        if self.conductor != other.conductor {
            return Err(ExactError::ConductorMismatch {
                left: self.conductor,
                right: other.conductor,
            });
        }
        let n = self.conductor;
        let mut v = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Ok(Self::reduce(n, v))
    }

    fn scaled(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let v = self.coeffs.iter().map(|c| c * r).collect();
        CycRat { conductor: self.conductor, coeffs: v }
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`. An involution fixing rationals.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let mut v = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let j = (n as usize - i) % n as usize;
                v[j] += c;
            }
        }
        Self::reduce(n, v)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// residue and `Φ_N`.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::rational(self.coeffs[0].recip()));
        }
        let phi: Vec<Rat> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let (g, s) = rat_poly_half_ext_gcd(&self.coeffs, &phi);
        // gcd(residue, Φ_N) is a nonzero constant.
        debug_assert_eq!(rat_poly_deg(&g), Some(0));
        let ginv = g[0].recip();
        let inv: Vec<Rat> = s.iter().map(|c| c * &ginv).collect();
        Ok(Self::reduce(self.conductor, inv))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_mul(&other.inv()?)
    }

    /// Parse either a rational (`-3/2`) or the extended cyclotomic scalar
    /// syntax `cyc(N): c0,c1,...`.
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cyc(") {
            let (n_str, tail) = rest
                .split_once(')')
                .ok_or_else(|| ExactError::Parse(format!("malformed cyclotomic scalar {s:?}")))?;
            let n: u32 = n_str
                .trim()
                .parse()
                .map_err(|_| ExactError::Parse(format!("bad conductor in {s:?}")))?;
            if n == 0 {
                return Err(ExactError::Parse("conductor must be positive".into()));
            }
            let tail = tail.trim_start().strip_prefix(':').ok_or_else(|| {
                ExactError::Parse(format!("expected ':' after conductor in {s:?}"))
            })?;
            let coeffs = tail
                .split(',')
                .map(|t| parse_rat(t.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.is_empty() {
                return Err(ExactError::Parse("empty coefficient list".into()));
            }
            Ok(Self::reduce(n, coeffs))
        } else {
            Ok(Self::rational(parse_rat(s)?))
        }
    }
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let bad = || ExactError::Parse(format!("bad rational {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ExactError::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.trim().parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(n))
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "{}", fmt_rat(&self.coeffs[0]))
        } else {
            let list: Vec<String> = self.coeffs.iter().map(fmt_rat).collect();
            write!(f, "cyc({}):{}", self.conductor, list.join(","))
        }
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&CycRat> for &CycRat {
            type Output = CycRat;
            fn $method(self, rhs: &CycRat) -> CycRat {
                self.$try(rhs).expect("cyclotomic conductor mismatch")
            }
        }
        impl std::ops::$trait for CycRat {
            type Output = CycRat;
            fn $method(self, rhs: CycRat) -> CycRat {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        CycRat {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        -&self
    }
}

// --- rational polynomial helpers (dense, ascending) used for inversion ---

fn rat_poly_deg(a: &[Rat]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn rat_poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = rat_poly_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    let mut quot = vec![Rat::zero(); a.len().max(db + 1) - db];
    while let Some(da) = rat_poly_deg(&rem) {
        if da < db {
            break;
        }
        let c = &rem[da] / &lead;
        for j in 0..=db {
            let t = &c * &b[j];
            rem[da - db + j] -= t;
        }
        quot[da - db] = c;
    }
    (quot, rem)
}

/// Half extended gcd: returns `(g, s)` with `s·a ≡ g (mod b)` and
/// `g = gcd(a, b)` up to a scalar.
fn rat_poly_half_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![Rat::one()];
    let mut s1 = vec![Rat::zero()];
    while rat_poly_deg(&r1).is_some() {
        let (q, r) = rat_poly_divrem(&r0, &r1);
        let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn rat_poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn rat_poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rat::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta5(k: i64) -> CycRat {
        CycRat::zeta_pow(5, k)
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        let to_i64 = |v: &Arc<Vec<BigInt>>| -> Vec<i64> {
            v.iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn primitive_fifth_roots_sum_to_minus_one() {
        // ζ + conj(ζ) + ζ² + conj(ζ²) = −1
        let z = zeta5(1);
        let z2 = zeta5(2);
        let sum = &(&z + &z.conj()) + &(&z2 + &z2.conj());
        assert_eq!(sum, CycRat::integer(-1));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycRat::zeta(4);
        assert_eq!(&i * &i, CycRat::integer(-1));
    }

    #[test]
    fn golden_ratio_product() {
        // (ζ+ζ⁴)(ζ²+ζ³) in Q(ζ_5); brute-force oracle: expand the four
        // products of roots and reduce.
        let lhs = &(&zeta5(1) + &zeta5(4)) * &(&zeta5(2) + &zeta5(3));
        let mut oracle = CycRat::zero();
        for a in [1i64, 4] {
            for b in [2i64, 3] {
                oracle = &oracle + &zeta5(a + b);
            }
        }
        assert_eq!(lhs, oracle);
        assert_eq!(lhs, CycRat::integer(-1));
    }

    #[test]
    fn trace_of_zeta5_is_rational() {
        let sum = &(&zeta5(1) + &zeta5(2)) + &(&zeta5(3) + &zeta5(4));
        assert_eq!(sum.to_rational().unwrap(), rat_i64(-1));
        assert!(sum.is_rational());
    }

    #[test]
    fn rational_embedding_and_not_rational() {
        let x = CycRat::from_ratio(3, 2);
        assert_eq!(x.to_rational().unwrap(), Rat::new(BigInt::from(3), BigInt::from(2)));
        let err = zeta5(1).to_rational().unwrap_err();
        assert!(matches!(err, ExactError::NotRational(_)));
    }

    #[test]
    fn conductor_mismatch_is_an_error() {
        let a = CycRat::zeta(5);
        let b = CycRat::zeta(7);
        assert!(matches!(
            a.try_add(&b),
            Err(ExactError::ConductorMismatch { left: 5, right: 7 })
        ));
        // but rationals coerce
        assert_eq!(a.try_mul(&CycRat::integer(0)).unwrap(), CycRat::zero());
    }

    #[test]
    fn conjugation_is_an_involution_fixing_rationals() {
        let x = &zeta5(1) + &CycRat::from_ratio(1, 3);
        assert_eq!(x.conj().conj(), x);
        let r = CycRat::from_ratio(-7, 4);
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn inverse_of_unit() {
        let x = &CycRat::one() + &zeta5(1); // 1 + ζ_5
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, CycRat::one());
        assert!(CycRat::zero().inv().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5", "-3/2", "cyc(5):0,1,0,0", "cyc(12):1/2,0,-1,0"] {
            let v = CycRat::parse(s).unwrap();
            let again = CycRat::parse(&v.to_string()).unwrap();
            assert_eq!(v, again);
        }
        assert!(CycRat::parse("cyc(0):1").is_err());
        assert!(CycRat::parse("x").is_err());
    }

    #[test]
    fn zeta_powers_wrap_and_demote() {
        assert_eq!(CycRat::zeta_pow(5, 5), CycRat::one());
        assert_eq!(CycRat::zeta_pow(5, -1), CycRat::zeta_pow(5, 4));
        assert_eq!(CycRat::zeta(2), CycRat::integer(-1));
        assert_eq!(CycRat::zeta(1), CycRat::one());
    }
}
