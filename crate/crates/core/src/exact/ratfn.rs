//! Normalized rational functions in `u = v²`.
//!
//! Invariant: the pair is gcd-reduced and the denominator is monic, so a
//! rational function that is actually a polynomial has denominator 1.

use std::fmt;

use super::{ExactError, PolyU};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFnU {
    num: PolyU,
    den: PolyU,
}

impl RatFnU {
    pub fn new(num: PolyU, den: PolyU) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFnU { num, den: PolyU::one() });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        // make the denominator monic, folding the scalar into the numerator
        let lead_inv = den.leading().unwrap().inv()?;
        Ok(RatFnU { num: num.scale(&lead_inv), den: den.scale(&lead_inv) })
    }

    pub fn from_poly(p: PolyU) -> Self {
        RatFnU { num: p, den: PolyU::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyU::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &PolyU {
        &self.num
    }

    pub fn den(&self) -> &PolyU {
        &self.den
    }

    /// The polynomial value, if the reduced denominator is 1.
    pub fn as_poly(&self) -> Option<&PolyU> {
        if self.den == PolyU::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        // combine over the lcm of the denominators to limit degree growth
        let g = self.den.gcd(&other.den);
        let self_cofactor = other.den.exact_div(&g)?;
        let other_cofactor = self.den.exact_div(&g)?;
        Self::new(
            &(&self.num * &self_cofactor) + &(&other.num * &other_cofactor),
            &self.den * &self_cofactor,
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn mul_poly(&self, p: &PolyU) -> Result<Self, ExactError> {
        Self::new(&self.num * p, self.den.clone())
    }
}

impl fmt::Display for RatFnU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_poly() {
            write!(f, "{p}")
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFnU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> PolyU {
        PolyU::from_int_coeffs(coeffs)
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (u²−1)/(2u−2) reduces to (u+1)/2 with denominator scaled to 1
        let f = RatFnU::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(f.den(), &PolyU::one());
        assert_eq!(f.num().to_string(), "1/2,1/2");
        // a genuinely non-polynomial quotient keeps a monic denominator
        let g = RatFnU::new(p(&[1]), p(&[-2, 2])).unwrap();
        assert_eq!(g.den(), &p(&[-1, 1]));
        assert!(g.as_poly().is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFnU::new(p(&[1]), PolyU::zero()),
            Err(ExactError::DivisionByZero)
        ));
    }

    #[test]
    fn sum_with_common_denominator_cancels() {
        let h = &p(&[-1, 0, 1]) * &p(&[-1, 0, 0, 1]); // (u²−1)(u³−1)
        let a = RatFnU::new(p(&[0, 1]), h.clone()).unwrap();
        let b = RatFnU::new(&h - &p(&[0, 1]), h).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.as_poly().unwrap(), &PolyU::one());
    }
}
