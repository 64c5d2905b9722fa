//! Groebner bases for left and two-sided ideals of `R_q[M_{m,n}]`.
//!
//! The algebra is a solvable polynomial ring for the order of
//! [`Monomial`], so left Buchberger completion applies with left
//! S-polynomials. Two-sided ideals are handled by additionally closing the
//! basis under right multiplication by every generator. No pair is ever
//! discarded by the coprime-leading-monomial criterion, which does not hold
//! in this setting.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcoeff::RatFunc;
use crate::qmatrix::{Monomial, QMElement, Shape};

/// Name of the monomial order used everywhere in this crate.
pub const ORDER_TAG: &str = "deglex(x_mn > ... > x_11)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Left,
    TwoSided,
}

/// Default degree guard `2 (m + n)`.
pub fn default_degree_guard(shape: Shape) -> u32 {
    2 * (shape.m + shape.n) as u32
}

/// Reduced, monic Groebner basis sorted by leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    shape: Shape,
    kind: IdealKind,
    elements: Vec<QMElement>,
    pairs_processed: usize,
    max_degree: u32,
}

/// JSON form of a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub order: String,
    pub kind: IdealKind,
    pub m: usize,
    pub n: usize,
    pub elements: Vec<String>,
    pub pairs_processed: usize,
    pub max_degree: u32,
}

impl GroebnerBasis {
    /// The basis of the zero ideal.
    pub fn empty(shape: Shape, kind: IdealKind) -> Self {
        GroebnerBasis {
            shape,
            kind,
            elements: Vec::new(),
            pairs_processed: 0,
            max_degree: 0,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn elements(&self) -> &[QMElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Whether the two bases span the same ideal (reduced bases are unique).
    pub fn same_ideal(&self, other: &Self) -> bool {
        self.elements == other.elements
    }

    pub fn to_record(&self) -> BasisRecord {
        BasisRecord {
            order: ORDER_TAG.to_string(),
            kind: self.kind,
            m: self.shape.m,
            n: self.shape.n,
            elements: self.elements.iter().map(|g| g.to_string()).collect(),
            pairs_processed: self.pairs_processed,
            max_degree: self.max_degree,
        }
    }

    /// Rebuilds a basis from its JSON form, checking that the stored
    /// elements are already reduced.
    pub fn from_record(rec: &BasisRecord) -> Result<Self> {
        let shape = Shape::new(rec.m, rec.n)?;
        let elements = rec
            .elements
            .iter()
            .map(|s| crate::parse::parse_element(shape, s))
            .collect::<Result<Vec<_>>>()?;
        let gb = GroebnerBasis {
            shape,
            kind: rec.kind,
            elements,
            pairs_processed: rec.pairs_processed,
            max_degree: rec.max_degree,
        };
        if reduce_basis(shape, gb.elements.clone()) != gb.elements {
            return Err(Error::Parse("stored basis is not reduced".into()));
        }
        Ok(gb)
    }
}

/// Normal form of `u` modulo the left ideal spanned by `reducers`.
///
/// The first reducer (in slice order) whose leading monomial divides the
/// current leading term is used.
pub fn reduce(u: &QMElement, reducers: &[QMElement]) -> QMElement {
    let shape = u.shape();
    if reducers.is_empty() || u.is_zero() {
        return u.clone();
    }
    let lms: Vec<&Monomial> = reducers.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let mut work = u.clone();
    let mut rem = Vec::new();
    while let Some((lm, lc)) = work.pop_leading() {
        match lms.iter().position(|g| g.divides(&lm)) {
            Some(idx) => {
                let g = &reducers[idx];
                let shifted = g.left_mul_monomial(&lms[idx].quotient_of(&lm));
                let (top, ct) = shifted.leading().unwrap();
                debug_assert_eq!(top, &lm);
                let factor = lc.div(ct).expect("nonzero leading coefficient").neg();
                // the leading terms cancel; add the rest
                let mut rest = shifted;
                rest.pop_leading();
                work.add_scaled(&rest, &factor);
            }
            None => rem.push((lm, lc)),
        }
    }
    QMElement::from_terms(shape, rem)
}

/// Normal form with respect to a complete basis.
pub fn normal_form(u: &QMElement, gb: &GroebnerBasis) -> QMElement {
    assert_eq!(u.shape(), gb.shape, "element and basis live in different algebras");
    reduce(u, &gb.elements)
}

/// `u` lies in the ideal iff its normal form vanishes.
pub fn membership(u: &QMElement, gb: &GroebnerBasis) -> bool {
    normal_form(u, gb).is_zero()
}

/// Growth degree of the standard monomials: the largest set of variables
/// containing the support of no leading monomial.
pub fn gk_dim_quotient(gb: &GroebnerBasis) -> Result<usize> {
    let nv = gb.shape.nvars();
    if nv > 24 {
        return Err(Error::ResourceLimit(format!("{nv} variables")));
    }
    let masks: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    if masks.contains(&0) {
        // unit ideal
        return Ok(0);
    }
    let mut best = 0;
    for s in 0u32..(1u32 << nv) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    Ok(best)
}

fn left_spoly(shape: Shape, f: &QMElement, g: &QMElement) -> QMElement {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let l = lf.lcm(lg);
    let a = f.left_mul_monomial(&lf.quotient_of(&l));
    let b = g.left_mul_monomial(&lg.quotient_of(&l));
    let ca = a.leading().unwrap().1.inv().unwrap();
    let cb = b.leading().unwrap().1.inv().unwrap();
    let mut s = a.scale(&ca);
    s.add_scaled(&b, &cb.neg());
    debug_assert_eq!(s.shape(), shape);
    s
}

/// Minimalises, tail-reduces and sorts a Groebner basis.
fn reduce_basis(shape: Shape, mut elems: Vec<QMElement>) -> Vec<QMElement> {
    elems.retain(|g| !g.is_zero());
    elems.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<QMElement> = Vec::new();
    for g in elems {
        let lm = g.leading_monomial().unwrap();
        if minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<QMElement> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce(&minimal[i], &others).monic();
        debug_assert_eq!(r.leading_monomial(), minimal[i].leading_monomial());
        out.push(r);
    }
    debug_assert!(out.iter().all(|g| g.shape() == shape));
    out
}

/// Incremental Buchberger completion. Generators can be added in stages;
/// every completed stage is a valid Groebner basis of the ideal generated so
/// far.
#[derive(Clone, Debug)]
pub struct GroebnerBuilder {
    shape: Shape,
    kind: IdealKind,
    guard: u32,
    basis: Vec<QMElement>,
    pairs: BinaryHeap<Reverse<(Monomial, u64, usize, usize)>>,
    right_closed: usize,
    seq: u64,
    pairs_processed: usize,
    max_degree: u32,
}

impl GroebnerBuilder {
    pub fn new(shape: Shape, kind: IdealKind, degree_guard: u32) -> Self {
        GroebnerBuilder {
            shape,
            kind,
            guard: degree_guard,
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            right_closed: 0,
            seq: 0,
            pairs_processed: 0,
            max_degree: 0,
        }
    }

    fn guard_error(&self, reached: u32) -> Error {
        Error::GuardExceeded {
            guard: self.guard,
            reached,
            basis_len: self.basis.len(),
            pairs: self.pairs_processed,
        }
    }

    /// Current (unreduced) basis; a Groebner basis after each `add`.
    pub fn current(&self) -> &[QMElement] {
        &self.basis
    }

    fn insert(&mut self, r: QMElement) -> Result<()> {
        let r = r.monic();
        let d = r.degree().unwrap();
        if d > self.guard {
            return Err(self.guard_error(d));
        }
        self.max_degree = self.max_degree.max(d);
        let lm = r.leading_monomial().unwrap().clone();
        let idx = self.basis.len();
        for (j, g) in self.basis.iter().enumerate() {
            let l = g.leading_monomial().unwrap().lcm(&lm);
            self.pairs.push(Reverse((l, self.seq, j, idx)));
            self.seq += 1;
        }
        self.basis.push(r);
        Ok(())
    }

    /// Adds generators and completes.
    pub fn add(&mut self, gens: &[QMElement]) -> Result<()> {
        for g in gens {
            assert_eq!(g.shape(), self.shape, "generator from a different algebra");
            let r = reduce(g, &self.basis);
            if !r.is_zero() {
                self.insert(r)?;
            }
        }
        self.complete()
    }

    fn complete(&mut self) -> Result<()> {
        loop {
            while let Some(Reverse((l, _, i, j))) = self.pairs.pop() {
                if l.degree() > self.guard {
                    let reached = l.degree();
                    self.pairs.push(Reverse((l, 0, i, j)));
                    return Err(self.guard_error(reached));
                }
                let s = left_spoly(self.shape, &self.basis[i], &self.basis[j]);
                self.pairs_processed += 1;
                let r = reduce(&s, &self.basis);
                if !r.is_zero() {
                    self.insert(r)?;
                }
            }
            if self.kind == IdealKind::Left || self.right_closed == self.basis.len() {
                return Ok(());
            }
            let upto = self.basis.len();
            for idx in self.right_closed..upto {
                for v in 0..self.shape.nvars() {
                    let prod = self.basis[idx].right_mul_monomial(&Monomial::var(self.shape.nvars(), v));
                    let r = reduce(&prod, &self.basis);
                    if !r.is_zero() {
                        self.insert(r)?;
                    }
                }
            }
            self.right_closed = upto;
        }
    }

    /// Reduced basis of everything added so far.
    pub fn basis(&self) -> GroebnerBasis {
        GroebnerBasis {
            shape: self.shape,
            kind: self.kind,
            elements: reduce_basis(self.shape, self.basis.clone()),
            pairs_processed: self.pairs_processed,
            max_degree: self.max_degree,
        }
    }
}

fn common_shape(gens: &[QMElement]) -> Result<Option<Shape>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    let shape = first.shape();
    if gens.iter().any(|g| g.shape() != shape) {
        return Err(Error::SizeMismatch("generators from different algebras".into()));
    }
    Ok(Some(shape))
}

/// Left Groebner basis of the left ideal generated by `gens`.
pub fn left_groebner(shape: Shape, gens: &[QMElement], degree_guard: u32) -> Result<GroebnerBasis> {
    if let Some(s) = common_shape(gens)? {
        if s != shape {
            return Err(Error::SizeMismatch("generator shape".into()));
        }
    }
    let mut b = GroebnerBuilder::new(shape, IdealKind::Left, degree_guard);
    b.add(gens)?;
    Ok(b.basis())
}

/// Left Groebner basis of the two-sided ideal generated by `gens`.
pub fn two_sided_groebner(shape: Shape, gens: &[QMElement], degree_guard: u32) -> Result<GroebnerBasis> {
    if let Some(s) = common_shape(gens)? {
        if s != shape {
            return Err(Error::SizeMismatch("generator shape".into()));
        }
    }
    let mut b = GroebnerBuilder::new(shape, IdealKind::TwoSided, degree_guard);
    b.add(gens)?;
    Ok(b.basis())
}

/// Checks the defining invariants of a completed basis against the
/// generators it was built from. Returns a description of the first failure.
pub fn check_basis(gb: &GroebnerBasis, gens: &[QMElement]) -> std::result::Result<(), String> {
    for (i, g) in gb.elements.iter().enumerate() {
        if !g.leading().is_some_and(|(_, c)| c.is_one()) {
            return Err(format!("element {i} is not monic"));
        }
        for (j, h) in gb.elements.iter().enumerate() {
            if i != j && h.leading_monomial().unwrap().divides(g.leading_monomial().unwrap()) {
                return Err(format!("leading monomial of {j} divides that of {i}"));
            }
        }
    }
    for g in gens {
        if !membership(g, gb) {
            return Err(format!("generator {g} does not reduce to zero"));
        }
    }
    for (i, f) in gb.elements.iter().enumerate() {
        for g in &gb.elements[i + 1..] {
            let s = left_spoly(gb.shape, f, g);
            if !membership(&s, gb) {
                return Err(format!("S-polynomial of {f} and {g} does not reduce to zero"));
            }
        }
    }
    if gb.kind == IdealKind::TwoSided {
        let nv = gb.shape.nvars();
        for g in &gb.elements {
            for v in 0..nv {
                let x = Monomial::var(nv, v);
                if !membership(&g.right_mul_monomial(&x), gb) || !membership(&g.left_mul_monomial(&x), gb) {
                    return Err(format!("{g} times generator {v} escapes the ideal"));
                }
            }
        }
    }
    Ok(())
}

/// Scalar `c` with `a = c * b`, if one exists.
pub fn proportionality(a: &QMElement, b: &QMElement) -> Option<RatFunc> {
    if a.is_zero() && b.is_zero() {
        return Some(RatFunc::one());
    }
    let (la, ca) = a.leading()?;
    let (lb, cb) = b.leading()?;
    if la != lb || a.len() != b.len() {
        return None;
    }
    let c = ca.div(cb).ok()?;
    (a.sub(&b.scale(&c))).is_zero().then_some(c)
}
