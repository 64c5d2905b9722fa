use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;
use crate::error::{Error, Result};

/// Element of the rational function field `Q(q)`.
///
/// Stored as `num / den` with `den` monic and `gcd(num, den) = 1`, so two
/// values are equal exactly when their fields are equal. Negative powers of
/// `q` are carried by the denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc {
            num: QPoly::from_int(c),
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    /// `q^e` for any integer `e`.
    pub fn q_power(e: i64) -> Self {
        if e >= 0 {
            RatFunc {
                num: QPoly::q_pow(e as usize),
                den: QPoly::one(),
            }
        } else {
            RatFunc {
                num: QPoly::one(),
                den: QPoly::q_pow((-e) as usize),
            }
        }
    }

    /// `c * q^e`.
    pub fn term(c: i64, e: i64) -> Self {
        Self::q_power(e).scale_int(c)
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let (num, den) = if den.is_monomial() {
            let k = num.valuation().unwrap().min(den.valuation().unwrap());
            (num.shift_down(k), den.shift_down(k))
        } else {
            let g = num.gcd(&den);
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial (denominator a power of `q`).
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    /// If the value is `c * q^e`, returns `(c, e)`.
    pub fn as_term(&self) -> Option<(BigRational, i64)> {
        if !self.num.is_monomial() || !self.den.is_monomial() {
            return None;
        }
        let e = self.num.valuation().unwrap() as i64 - self.den.valuation().unwrap() as i64;
        Some((self.num.leading().unwrap().clone(), e))
    }

    /// If the value is exactly `q^e`, returns `e`.
    pub fn as_q_power(&self) -> Option<i64> {
        match self.as_term() {
            Some((c, e)) if c.is_one() => Some(e),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_monomial() && other.den.is_monomial() {
            let a = self.den.degree().unwrap();
            let b = other.den.degree().unwrap();
            let k = a.max(b);
            let num = self.num.shift_up(k - a).add(&other.num.shift_up(k - b));
            return Self::canonical(num, QPoly::q_pow(k));
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc {
                num: self.num.mul(&other.num),
                den: QPoly::one(),
            };
        }
        if self.den.is_monomial() && other.den.is_monomial() {
            let k = self.den.degree().unwrap() + other.den.degree().unwrap();
            return Self::canonical(self.num.mul(&other.num), QPoly::q_pow(k));
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).mul(&other.num.exact_div(&g2));
        let den = self.den.exact_div(&g2).mul(&other.den.exact_div(&g1));
        Self::canonical(num, den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul(&Self::from_int(c))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitutes `q = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let one = BigRational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval(&one) / d)
    }

    /// Substitutes a rational value for `q`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(c))
    }

    fn term_count(p: &QPoly) -> usize {
        p.coeffs().iter().filter(|c| !c.is_zero()).count()
    }

    /// True when the rendering is a single signed term, so it can be used
    /// as a coefficient without parentheses.
    pub fn is_single_term(&self) -> bool {
        self.as_term().is_some()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monomial() {
            let offset = self.den.degree().unwrap() as i64;
            return self.num.fmt_with_offset(f, offset);
        }
        if Self::term_count(&self.num) > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        f.write_str("/")?;
        if Self::term_count(&self.den) > 1 {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::add(&self, &rhs)
    }
}

impl std::ops::Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::add(self, rhs)
    }
}

impl std::ops::Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::sub(self, rhs)
    }
}

impl std::ops::Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q_power(1)
    }

    fn qinv() -> RatFunc {
        RatFunc::q_power(-1)
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        let d = q().sub(&qinv());
        let inv = d.inv().unwrap();
        // q / (q^2 - 1)
        let expected = RatFunc::new(QPoly::q_pow(1), QPoly::q_pow(2).sub(&QPoly::one())).unwrap();
        assert_eq!(inv, expected);
        assert_eq!(inv.to_string(), "q/(q^2 - 1)");
    }

    #[test]
    fn product_of_symmetric_factors() {
        let a = q().add(&qinv());
        let b = q().sub(&qinv());
        let expected = RatFunc::q_power(2).sub(&RatFunc::q_power(-2));
        assert_eq!(a.mul(&b), expected);
        assert_eq!(expected.to_string(), "q^2 - q^-2");
    }

    #[test]
    fn rendering_laurent() {
        assert_eq!(q().add(&qinv()).to_string(), "q + q^-1");
        assert_eq!(RatFunc::term(-1, -1).to_string(), "-q^-1");
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert_eq!(RatFunc::from_int(3).to_string(), "3");
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
        assert!(RatFunc::new(QPoly::one(), QPoly::zero()).is_err());
    }

    #[test]
    fn pole_at_one() {
        let d = q().sub(&RatFunc::one()).inv().unwrap();
        assert_eq!(d.eval_at_one(), Err(Error::PoleAtOne));
    }

    #[test]
    fn term_extraction() {
        assert_eq!(RatFunc::q_power(-3).as_q_power(), Some(-3));
        assert_eq!(RatFunc::term(-1, 2).as_q_power(), None);
        assert_eq!(q().add(&RatFunc::one()).as_term(), None);
    }
}
