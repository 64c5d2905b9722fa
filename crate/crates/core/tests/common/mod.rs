#![allow(dead_code)]

use qprime_core::qcoeff::{QPoly, RatFunc};
use qprime_core::qmatrix::{word_product, QMElement, Shape};
use rand::Rng;

pub fn small_poly<R: Rng>(rng: &mut R, max_deg: usize) -> QPoly {
    let d = rng.gen_range(0..=max_deg);
    let coeffs = (0..=d)
        .map(|_| num_rational::BigRational::from_integer(rng.gen_range(-3i64..=3).into()))
        .collect();
    QPoly::from_coeffs(coeffs)
}

/// A random element of `Q(q)`, possibly zero.
pub fn ratfunc<R: Rng>(rng: &mut R) -> RatFunc {
    let num = small_poly(rng, 3);
    let mut den = small_poly(rng, 2);
    while den.is_zero() {
        den = small_poly(rng, 2);
    }
    let shift = rng.gen_range(-2i64..=2);
    RatFunc::new(num, den).unwrap().mul(&RatFunc::q_power(shift))
}

/// A random nonzero Laurent monomial coefficient `±c q^e`.
pub fn coeff<R: Rng>(rng: &mut R) -> RatFunc {
    let c = rng.gen_range(1i64..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    RatFunc::term(c, rng.gen_range(-2i64..=2))
}

/// A sum of up to three products of generators, written in random
/// (generally non-normal) order, each of degree at most `max_deg`.
pub fn element<R: Rng>(rng: &mut R, shape: Shape, max_deg: usize) -> QMElement {
    let mut out = QMElement::zero(shape);
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(0..=max_deg);
        let letters: Vec<(usize, usize)> = (0..d)
            .map(|_| (rng.gen_range(1..=shape.m), rng.gen_range(1..=shape.n)))
            .collect();
        out.add_scaled(&word_product(shape, &letters).unwrap(), &coeff(rng));
    }
    out
}
