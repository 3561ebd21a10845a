//! Polynomials in `u = v²` with cyclotomic-rational coefficients.
//!
//! Canonical form: coefficients ascending in `u` with no trailing zero;
//! the zero polynomial is the empty sequence, and its degree is `None`
//! rather than a number. Entries of Ψ live in `Z[v²]`, so the degree in
//! `v` of a nonzero polynomial is twice its degree in `u`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::parse_rat;
use super::{CycRat, ExactError, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyU {
    coeffs: Vec<CycRat>,
}

impl PolyU {
    pub fn zero() -> Self {
        PolyU { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(CycRat::one())
    }

    pub fn constant(c: CycRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · u^k`.
    pub fn monomial(k: usize, c: CycRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![CycRat::zero(); k + 1];
        v[k] = c;
        PolyU { coeffs: v }
    }

    /// `u^k`.
    pub fn unit_monomial(k: usize) -> Self {
        Self::monomial(k, CycRat::one())
    }

    pub fn from_coeffs(mut coeffs: Vec<CycRat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        PolyU { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| CycRat::integer(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[CycRat] {
        &self.coeffs
    }

    /// Coefficient of `u^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> CycRat {
        self.coeffs.get(k).cloned().unwrap_or_else(CycRat::zero)
    }

    /// Degree in `u`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree in `v = u^{1/2}`; always even.
    pub fn v_degree(&self) -> Option<usize> {
        self.degree().map(|d| 2 * d)
    }

    pub fn leading(&self) -> Option<&CycRat> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> CycRat {
        self.coeff(0)
    }

    /// `(leading coefficient, degree in v, constant term)` with the two
    /// coefficients reported as rationals.
    pub fn leading_and_constant(&self) -> Result<(Rat, usize, Rat), ExactError> {
        let lead = self.leading().ok_or(ExactError::ZeroPolynomial)?;
        Ok((
            lead.to_rational()?,
            self.v_degree().unwrap(),
            self.constant_term().to_rational()?,
        ))
    }

    pub fn scale(&self, c: &CycRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![CycRat::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        PolyU { coeffs: v }
    }

    pub fn divrem(&self, b: &Self) -> Result<(Self, Self), ExactError> {
        let db = b.degree().ok_or(ExactError::DivisionByZero)?;
        let lead_inv = b.coeffs[db].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycRat::zero(); rem.len().max(db + 1) - db];
        while rem.len() > db || (rem.len() == db + 1 && db == 0) {
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= db {
                break;
            }
            let da = rem.len() - 1;
            let c = &rem[da] * &lead_inv;
            for j in 0..=db {
                let t = &c * &b.coeffs[j];
                let entry = &rem[da - db + j] - &t;
                rem[da - db + j] = entry;
            }
            quot[da - db] = c;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact division; a nonzero remainder is an error carrying the
    /// remainder, since in this pipeline it falsifies an identity.
    pub fn exact_div(&self, b: &Self) -> Result<Self, ExactError> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::InexactDivision { remainder: r })
        }
    }

    /// Monic gcd. Polynomials with rational coefficients (the common
    /// case in the Ψ pipeline) go through a primitive pseudo-remainder
    /// sequence over the integers, which keeps coefficients small;
    /// genuinely cyclotomic coefficients fall back to the Euclidean
    /// algorithm over the field.
    pub fn gcd(&self, other: &Self) -> Self {
        if let Some(g) = self.int_primitive_gcd(other) {
            return g;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.into_monic()
    }

    fn rational_coeffs(&self) -> Option<Vec<Rat>> {
        self.coeffs.iter().map(|c| c.to_rational().ok()).collect()
    }

    /// gcd via primitive pseudo-remainder sequences over Z; `None` when
    /// either polynomial has a non-rational coefficient.
    fn int_primitive_gcd(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            let g = if self.is_zero() { other } else { self };
            return g.rational_coeffs().map(|_| g.clone().into_monic());
        }
        let mut a = int_primitive_part(self.rational_coeffs()?);
        let mut b = int_primitive_part(other.rational_coeffs()?);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive_part_bigint(r);
        }
        // normalize monic over Q
        let lead = Rat::from_integer(a.last().unwrap().clone());
        Some(Self::from_coeffs(
            a.into_iter()
                .map(|c| CycRat::rational(Rat::from_integer(c) / &lead))
                .collect(),
        ))
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// All coefficients as rational integers; the `Z[v²]` integrality
    /// check applied to every final Ψ entry.
    pub fn to_integer_coeffs(&self) -> Result<Vec<BigInt>, ExactError> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(|c| match c.to_rational() {
            Ok(r) => r.is_negative(),
            Err(_) => false,
        })
    }

    /// Parse the comma-separated ascending coefficient form, e.g.
    /// `1,0,1` = 1 + u². Rational coefficients (`-1/2`) are accepted.
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        let coeffs = s
            .split(',')
            .map(|t| Ok(CycRat::rational(parse_rat(t.trim())?)))
            .collect::<Result<Vec<_>, ExactError>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// Clear denominators and strip the integer content; ascending, trimmed,
/// positive leading coefficient.
fn int_primitive_part(coeffs: Vec<Rat>) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in &coeffs {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    int_primitive_part_bigint(ints)
}

fn int_primitive_part_bigint(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    while ints.last().map(|c| c.is_zero()).unwrap_or(false) {
        ints.pop();
    }
    if ints.is_empty() {
        return ints;
    }
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.clone());
        if content.is_one() {
            break;
        }
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for c in &mut ints {
            *c = &*c / &content;
        }
    }
    ints
}

/// Pseudo-remainder of primitive integer polynomials: scale the dividend
/// by `lc(b)^{deg a - deg b + 1}` so every division step is integral.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        if rem.last().unwrap().is_zero() {
            rem.pop();
            continue;
        }
        let da = rem.len() - 1;
        let c = rem.pop().unwrap();
        for r in rem.iter_mut() {
            *r = &*r * &lead;
        }
        for j in 0..db {
            rem[da - db + j] -= &c * &b[j];
        }
    }
    rem
}

impl fmt::Display for PolyU {
    /// The coefficient-list text form used in files and CLI output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for PolyU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly[{self}]")
    }
}

impl std::ops::Add<&PolyU> for &PolyU {
    type Output = PolyU;
    fn add(self, rhs: &PolyU) -> PolyU {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        PolyU::from_coeffs(v)
    }
}

impl std::ops::Sub<&PolyU> for &PolyU {
    type Output = PolyU;
    fn sub(self, rhs: &PolyU) -> PolyU {
        self + &(-rhs)
    }
}

impl std::ops::Mul<&PolyU> for &PolyU {
    type Output = PolyU;
    fn mul(self, rhs: &PolyU) -> PolyU {
        if self.is_zero() || rhs.is_zero() {
            return PolyU::zero();
        }
        let mut v = vec![CycRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let t = a * b;
                    v[i + j] = &v[i + j] + &t;
                }
            }
        }
        PolyU::from_coeffs(v)
    }
}

impl std::ops::Neg for &PolyU {
    type Output = PolyU;
    fn neg(self) -> PolyU {
        PolyU { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for PolyU {
            type Output = PolyU;
            fn $method(self, rhs: PolyU) -> PolyU {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::ops::Neg for PolyU {
    type Output = PolyU;
    fn neg(self) -> PolyU {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(coeffs: &[i64]) -> PolyU {
        PolyU::from_int_coeffs(coeffs)
    }

    #[test]
    fn product_difference_of_squares() {
        // (u−1)(u+1) = u²−1
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn cancellation_trims_to_canonical_form() {
        // (u²+1) + (−u²) = 1
        let s = &p(&[1, 0, 1]) + &p(&[0, 0, -1]);
        assert_eq!(s, p(&[1]));
        assert_eq!(s.degree(), Some(0));
    }

    #[test]
    fn dihedral_h_polynomial() {
        // (u^p−1)(u²−1) for p = 7
        let mut up = vec![-1i64, 0, 0, 0, 0, 0, 0, 1];
        let h = &p(&up) * &p(&[-1, 0, 1]);
        assert_eq!(h.degree(), Some(9));
        assert_eq!(h.coeff(0), CycRat::integer(1));
        // same via shift: u^p − 1 built by monomials
        up[7] = 1;
        let alt = &(&PolyU::unit_monomial(7) - &PolyU::one())
            * &(&PolyU::unit_monomial(2) - &PolyU::one());
        assert_eq!(h, alt);
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        // (u⁴−1)/(u²−1) = u²+1
        assert_eq!(
            p(&[-1, 0, 0, 0, 1]).exact_div(&p(&[-1, 0, 1])).unwrap(),
            p(&[1, 0, 1])
        );
        let err = p(&[1, 1]).exact_div(&p(&[0, 1])).unwrap_err();
        assert!(matches!(err, ExactError::InexactDivision { .. }));
        assert!(matches!(
            p(&[1]).exact_div(&PolyU::zero()),
            Err(ExactError::DivisionByZero)
        ));
    }

    #[test]
    fn leading_and_constant_reports_v_degree() {
        // u³+u → (1, 6, 0)
        let (lead, vdeg, cst) = p(&[0, 1, 0, 1]).leading_and_constant().unwrap();
        assert_eq!((lead, vdeg, cst), (Rat::from_integer(1.into()), 6, Rat::zero()));
        // −2u⁶ → (−2, 12, 0)
        let (lead, vdeg, _) = p(&[0, 0, 0, 0, 0, 0, -2]).leading_and_constant().unwrap();
        assert_eq!((lead, vdeg), (Rat::from_integer((-2).into()), 12));
        // v^14 + v^10 = u⁷+u⁵ → (1, 14, 0)
        let (lead, vdeg, _) =
            p(&[0, 0, 0, 0, 0, 1, 0, 1]).leading_and_constant().unwrap();
        assert_eq!((lead, vdeg), (Rat::from_integer(1.into()), 14));
        assert!(PolyU::zero().leading_and_constant().is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let g = (&p(&[-1, 1]) * &p(&[2, 2])).gcd(&(&p(&[-1, 1]) * &p(&[3, 0, 3])));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["1,0,1", "0", "-2", "0,0,0,-2", "1/2,0,-3"] {
            let q = PolyU::parse(s).unwrap();
            assert_eq!(PolyU::parse(&q.to_string()).unwrap(), q);
        }
    }

    #[test]
    fn integer_view() {
        assert!(p(&[1, -2, 3]).to_integer_coeffs().is_ok());
        let half = PolyU::constant(CycRat::from_ratio(1, 2));
        assert!(matches!(
            half.to_integer_coeffs(),
            Err(ExactError::NotInteger(_))
        ));
    }
}
