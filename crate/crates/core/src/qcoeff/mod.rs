//! Exact arithmetic over `Q(q)`: Laurent polynomials, rational functions,
//! quantum integers and Gaussian binomials.

mod laurent;
mod poly;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use poly::QPoly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Symmetric quantum integer `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
pub fn qint(n: u32, d: u32) -> Result<LaurentPoly> {
    if n == 0 || d == 0 {
        return Err(Error::Domain(format!("qint needs n, d >= 1 (got n={n}, d={d})")));
    }
    let (n, d) = (n as i64, d as i64);
    let mut out = LaurentPoly::zero();
    for t in 0..n {
        out = out.add(&LaurentPoly::q_power(d * (n - 1 - 2 * t)));
    }
    Ok(out)
}

/// `[n]_{q^d}!`, with `[0]! = 1`.
pub fn qfactorial(n: u32, d: u32) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for i in 1..=n {
        acc = acc.mul(&qint(i, d)?);
    }
    Ok(acc)
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)` in `q^d`, computed by exact division.
pub fn gauss_binom(n: i64, k: i64, d: u32) -> Result<LaurentPoly> {
    if k < 0 || k > n || d == 0 {
        return Err(Error::Domain(format!(
            "gauss_binom needs 0 <= k <= n and d >= 1 (got n={n}, k={k}, d={d})"
        )));
    }
    let (n, k) = (n as u32, k as u32);
    let top = qfactorial(n, d)?.to_ratfunc();
    let bottom = qfactorial(k, d)?.mul(&qfactorial(n - k, d)?).to_ratfunc();
    LaurentPoly::from_ratfunc(&top.div(&bottom)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(c))
    }

    /// Oracle: the defining quotient evaluated in Q(q).
    fn qint_by_division(n: i64, d: i64) -> RatFunc {
        let num = RatFunc::q_power(d * n).sub(&RatFunc::q_power(-d * n));
        let den = RatFunc::q_power(d).sub(&RatFunc::q_power(-d));
        num.div(&den).unwrap()
    }

    /// Oracle: symmetric q-Pascal recurrence.
    fn binom_by_pascal(n: i64, k: i64) -> LaurentPoly {
        if k == 0 || k == n {
            return LaurentPoly::one();
        }
        binom_by_pascal(n - 1, k)
            .mul(&LaurentPoly::q_power(k))
            .add(&binom_by_pascal(n - 1, k - 1).mul(&LaurentPoly::q_power(-(n - k))))
    }

    #[test]
    fn qint_examples() {
        assert_eq!(qint(1, 1).unwrap(), LaurentPoly::one());
        assert_eq!(
            qint(2, 1).unwrap(),
            LaurentPoly::q_power(1).add(&LaurentPoly::q_power(-1))
        );
        let three = LaurentPoly::q_power(2)
            .add(&LaurentPoly::one())
            .add(&LaurentPoly::q_power(-2));
        assert_eq!(qint(3, 1).unwrap(), three);
        for n in 1..7 {
            for d in 1..3 {
                assert_eq!(qint(n, d).unwrap().to_ratfunc(), qint_by_division(n as i64, d as i64));
            }
        }
        assert!(qint(0, 1).is_err());
    }

    #[test]
    fn gauss_binom_examples() {
        for n in 0..6 {
            assert_eq!(gauss_binom(n, 0, 1).unwrap(), LaurentPoly::one());
        }
        assert_eq!(gauss_binom(2, 1, 1).unwrap(), qint(2, 1).unwrap());
        assert_eq!(gauss_binom(4, 2, 1).unwrap().eval_at_one(), int(6));
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(gauss_binom(n, k, 1).unwrap(), binom_by_pascal(n, k));
            }
        }
        assert!(gauss_binom(3, 4, 1).is_err());
        assert!(gauss_binom(3, -1, 1).is_err());
    }

    #[test]
    fn eval_at_one_of_qint() {
        assert_eq!(qint(3, 1).unwrap().to_ratfunc().eval_at_one().unwrap(), int(3));
        for n in 1..6 {
            for m in 1..6 {
                let p = qint(n, 1).unwrap().mul(&qint(m, 1).unwrap());
                assert_eq!(p.eval_at_one(), int((n * m) as i64));
            }
        }
    }
}
