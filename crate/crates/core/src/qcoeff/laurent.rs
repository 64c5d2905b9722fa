use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(BigRational::one(), 0)
    }

    pub fn term(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn q_power(e: i64) -> Self {
        Self::term(BigRational::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, e: i64, c: BigRational) {
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let Some((&lo, _)) = self.terms.first_key_value() else {
            return RatFunc::zero();
        };
        let shift = (-lo).max(0);
        let hi = *self.terms.last_key_value().unwrap().0;
        let mut coeffs = vec![BigRational::zero(); (hi + shift) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(e + shift) as usize] = c.clone();
        }
        RatFunc::new(QPoly::from_coeffs(coeffs), QPoly::q_pow(shift as usize))
            .expect("power of q is nonzero")
    }

    /// Converts back from `Q(q)`; fails unless the denominator is a power of `q`.
    pub fn from_ratfunc(r: &RatFunc) -> Result<Self> {
        if !r.is_laurent() {
            return Err(Error::Domain(format!("{r} is not a Laurent polynomial")));
        }
        let den = r.denominator();
        let shift = den.degree().unwrap() as i64;
        let scale = den.leading().unwrap().recip();
        let mut out = Self::zero();
        for (i, c) in r.numerator().coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.insert_add(i as i64 - shift, c * &scale);
            }
        }
        Ok(out)
    }

    pub fn from_int(c: i64) -> Self {
        Self::term(BigRational::from_integer(BigInt::from(c)), 0)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ratfunc().fmt(f)
    }
}
