//! The quantum matrix algebra `R_q[M_{m,n}]` in PBW normal form.
//!
//! Generators `x_{ij}` are numbered row-major, `x_{11} < x_{12} < ... < x_{mn}`,
//! and a normal monomial is the ordered product `x_{11}^{a_11} ... x_{mn}^{a_mn}`.
//! Products are straightened by the four defining relation families, written
//! here with the larger generator on the left:
//!
//! * same column, `i < l`: `x_{lj} x_{ij} = q^{-1} x_{ij} x_{lj}`
//! * same row, `j < k`: `x_{ik} x_{ij} = q^{-1} x_{ij} x_{ik}`
//! * `i < l`, `j > k`: `x_{lk} x_{ij} = x_{ij} x_{lk}`
//! * `i < l`, `j < k`: `x_{lk} x_{ij} = x_{ij} x_{lk} - (q - q^{-1}) x_{ik} x_{lj}`

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::lattice::{deg_x, RootElt};
use crate::qcoeff::RatFunc;
use crate::weyl::Permutation;

/// Matrix size `m x n` of the ambient algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain(format!("matrix size {m}x{n}")));
        }
        if m * n > u16::MAX as usize {
            return Err(Error::Domain(format!("matrix size {m}x{n} too large")));
        }
        Ok(Shape { m, n })
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    /// 0-based index of `x_{ij}` (1-based `i`, `j`).
    pub fn var(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > self.m || j == 0 || j > self.n {
            return Err(Error::IndexOutOfRange(format!("x_{{{i},{j}}} in {}x{}", self.m, self.n)));
        }
        Ok((i - 1) * self.n + (j - 1))
    }

    /// 1-based `(i, j)` of a variable index.
    pub fn pos(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }

    pub fn var_name(&self, v: usize) -> String {
        let (i, j) = self.pos(v);
        if self.m <= 9 && self.n <= 9 {
            format!("x{i}{j}")
        } else {
            format!("x{i}_{j}")
        }
    }
}

/// Exponent vector of a PBW monomial.
///
/// Ordered by total degree, then by the exponent of the largest variable
/// (`x_{mn}`), then the next largest, down to `x_{11}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Box<[u16]>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[v] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            deg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Monomial {
            deg: other.deg - self.deg,
            exps: other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::from_exps(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// Commutative product of exponent vectors.
    pub fn times(&self, other: &Self) -> Self {
        Monomial {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    fn with_var_added(&self, v: usize, delta: i32) -> Self {
        let mut exps = self.exps.clone();
        exps[v] = (exps[v] as i32 + delta) as u16;
        Monomial {
            deg: (self.deg as i32 + delta) as u32,
            exps,
        }
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)
    }

    /// Variables in ascending order, repeated by multiplicity.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.deg as usize);
        for (v, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                out.push(v);
            }
        }
        out
    }

    pub fn render(&self, shape: Shape) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (v, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(shape.var_name(v)),
                _ => parts.push(format!("{}^{}", shape.var_name(v), e)),
            }
        }
        parts.join(" ")
    }
}

type Terms = Vec<(Monomial, RatFunc)>;

/// `x_w x_v` for `w > v`, as normal-ordered pairs `(first, second)` with coefficients.
pub fn swap_rule(shape: Shape, w: usize, v: usize) -> Vec<((usize, usize), RatFunc)> {
    debug_assert!(w > v);
    let (l, k) = shape.pos(w);
    let (i, j) = shape.pos(v);
    if j == k {
        // same column, i < l
        vec![((v, w), RatFunc::q_power(-1))]
    } else if i == l {
        // same row, j < k
        vec![((v, w), RatFunc::q_power(-1))]
    } else if j > k {
        vec![((v, w), RatFunc::one())]
    } else {
        let qq = RatFunc::q_power(1).sub(&RatFunc::q_power(-1));
        let ik = shape.var(i, k).unwrap();
        let lj = shape.var(l, j).unwrap();
        vec![((v, w), RatFunc::one()), ((ik, lj), qq.neg())]
    }
}

thread_local! {
    static VAR_CACHE: RefCell<HashMap<(Shape, Monomial, usize), Rc<Terms>>> = RefCell::new(HashMap::new());
}

/// Drops the per-thread multiplication memo.
pub fn clear_mul_cache() {
    VAR_CACHE.with(|c| c.borrow_mut().clear());
}

fn accumulate(map: &mut BTreeMap<Monomial, RatFunc>, mono: Monomial, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match map.entry(mono) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Normal form of `a * x_v`.
fn mul_mono_var(shape: Shape, a: &Monomial, v: usize) -> Rc<Terms> {
    match a.max_var() {
        None => return Rc::new(vec![(Monomial::var(shape.nvars(), v), RatFunc::one())]),
        Some(w) if w <= v => return Rc::new(vec![(a.with_var_added(v, 1), RatFunc::one())]),
        _ => {}
    }
    let key = (shape, a.clone(), v);
    if let Some(hit) = VAR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let w = a.max_var().unwrap();
    let rest = a.with_var_added(w, -1);
    let mut acc = BTreeMap::new();
    for ((p, s), c) in swap_rule(shape, w, v) {
        for (t, ct) in mul_mono_var(shape, &rest, p).iter() {
            let cpt = c.mul(ct);
            for (t2, ct2) in mul_mono_var(shape, t, s).iter() {
                accumulate(&mut acc, t2.clone(), cpt.mul(ct2));
            }
        }
    }
    let out: Rc<Terms> = Rc::new(acc.into_iter().collect());
    VAR_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// Normal form of the product of two normal monomials.
pub fn mul_monomials(shape: Shape, a: &Monomial, b: &Monomial) -> Vec<(Monomial, RatFunc)> {
    let mut cur: Vec<(Monomial, RatFunc)> = vec![(a.clone(), RatFunc::one())];
    for v in b.letters() {
        let mut next = BTreeMap::new();
        for (t, c) in &cur {
            for (t2, c2) in mul_mono_var(shape, t, v).iter() {
                accumulate(&mut next, t2.clone(), c.mul(c2));
            }
        }
        cur = next.into_iter().collect();
    }
    cur
}

/// Result of a grading query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading<T> {
    Zero,
    Homogeneous(T),
    /// Two terms with different degrees.
    Inhomogeneous { first: String, second: String },
}

impl<T> Grading<T> {
    pub fn homogeneous(self) -> Option<T> {
        match self {
            Grading::Homogeneous(t) => Some(t),
            _ => None,
        }
    }
}

/// Element of `R_q[M_{m,n}]`: a map from normal monomials to coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMElement {
    shape: Shape,
    terms: BTreeMap<Monomial, RatFunc>,
}

impl QMElement {
    pub fn zero(shape: Shape) -> Self {
        QMElement {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(shape: Shape, c: RatFunc) -> Self {
        Self::monomial(shape, Monomial::one(shape.nvars()), c)
    }

    pub fn one(shape: Shape) -> Self {
        Self::constant(shape, RatFunc::one())
    }

    pub fn monomial(shape: Shape, mono: Monomial, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        QMElement { shape, terms }
    }

    /// The generator `x_{ij}` (1-based).
    pub fn var(shape: Shape, i: usize, j: usize) -> Result<Self> {
        let v = shape.var(i, j)?;
        Ok(Self::monomial(shape, Monomial::var(shape.nvars(), v), RatFunc::one()))
    }

    pub fn var_index(shape: Shape, v: usize) -> Self {
        Self::monomial(shape, Monomial::var(shape.nvars(), v), RatFunc::one())
    }

    pub fn from_terms(shape: Shape, terms: impl IntoIterator<Item = (Monomial, RatFunc)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.exps().len(), shape.nvars(), "monomial arity");
            accumulate(&mut map, m, c);
        }
        QMElement { shape, terms: map }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &RatFunc)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// If the element is a scalar, its value.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!(self.shape, other.shape, "elements of different algebras");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QMElement {
            shape: self.shape,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.shape);
        }
        if c.is_one() {
            return self.clone();
        }
        QMElement {
            shape: self.shape,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        self.check_shape(other);
        for (m, x) in &other.terms {
            accumulate(&mut self.terms, m.clone(), x.mul(c));
        }
    }

    /// Normal form of `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut acc = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let cab = ca.mul(cb);
                for (t, c) in mul_monomials(self.shape, ma, mb) {
                    accumulate(&mut acc, t, c.mul(&cab));
                }
            }
        }
        QMElement {
            shape: self.shape,
            terms: acc,
        }
    }

    /// Normal form of `mono * self`.
    pub fn left_mul_monomial(&self, mono: &Monomial) -> Self {
        if mono.is_one() {
            return self.clone();
        }
        let mut acc = BTreeMap::new();
        for (mb, cb) in &self.terms {
            for (t, c) in mul_monomials(self.shape, mono, mb) {
                accumulate(&mut acc, t, c.mul(cb));
            }
        }
        QMElement {
            shape: self.shape,
            terms: acc,
        }
    }

    /// Normal form of `self * mono`.
    pub fn right_mul_monomial(&self, mono: &Monomial) -> Self {
        if mono.is_one() {
            return self.clone();
        }
        let mut acc = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (t, c) in mul_monomials(self.shape, ma, mono) {
                accumulate(&mut acc, t, c.mul(ca));
            }
        }
        QMElement {
            shape: self.shape,
            terms: acc,
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, RatFunc)> {
        self.terms.pop_last()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.shape);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
        }
    }

    /// Torus weight `x_{ij} -> e_i - e_{m+j}` in `Z^{m+n}`.
    pub fn torus_weight(&self) -> Grading<Vec<i64>> {
        self.grading(|mono| monomial_torus_weight(self.shape, mono))
    }

    /// Root-lattice degree obtained by summing `deg_x` over the exponent vector.
    pub fn q_degree(&self) -> Grading<RootElt> {
        self.grading(|mono| monomial_q_degree(self.shape, mono))
    }

    fn grading<T: PartialEq>(&self, f: impl Fn(&Monomial) -> T) -> Grading<T> {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Grading::Zero;
        };
        let d = f(first);
        for m in iter {
            if f(m) != d {
                return Grading::Inhomogeneous {
                    first: first.render(self.shape),
                    second: m.render(self.shape),
                };
            }
        }
        Grading::Homogeneous(d)
    }
}

pub fn monomial_torus_weight(shape: Shape, mono: &Monomial) -> Vec<i64> {
    let mut wt = vec![0i64; shape.m + shape.n];
    for v in mono.support() {
        let e = mono.exps()[v] as i64;
        let (i, j) = shape.pos(v);
        wt[i - 1] += e;
        wt[shape.m + j - 1] -= e;
    }
    wt
}

pub fn monomial_q_degree(shape: Shape, mono: &Monomial) -> RootElt {
    let mut out = RootElt::zero(shape.m + shape.n - 1);
    for v in mono.support() {
        let e = mono.exps()[v] as i64;
        let (i, j) = shape.pos(v);
        let d = deg_x(i, j, shape.m, shape.n).expect("valid variable");
        for (o, x) in out.0.iter_mut().zip(&d.0) {
            *o += e * x;
        }
    }
    out
}

impl fmt::Display for QMElement {
    /// Terms in descending monomial order, e.g. `x11 x22 - q x12 x21`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mono, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = match c.as_term() {
                Some((lc, _)) if lc < num_rational::BigRational::from_integer(0.into()) => (true, c.neg()),
                _ => (false, c.clone()),
            };
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let coeff = if body.is_single_term() {
                body.to_string()
            } else {
                format!("({body})")
            };
            match (mono.is_one(), body.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&mono.render(self.shape))?,
                (false, false) => write!(f, "{coeff} {}", mono.render(self.shape))?,
            }
        }
        Ok(())
    }
}

/// Which of the two defining sums of a quantum minor to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorVariant {
    /// `sum_w (-q)^{l(w)} x_{j_1 j'_{w(1)}} ... x_{j_k j'_{w(k)}}`
    First,
    /// `sum_w (-q)^{-l(w)} x_{j_{w(k)} j'_k} ... x_{j_{w(1)} j'_1}`
    Second,
}

fn check_index_set(set: &[usize], bound: usize, what: &str) -> Result<()> {
    if set.is_empty() {
        return Err(Error::SizeMismatch(format!("empty {what} set")));
    }
    if set.windows(2).any(|p| p[0] >= p[1]) || set[0] == 0 || *set.last().unwrap() > bound {
        return Err(Error::Domain(format!("{what} {set:?} is not a sorted subset of [1,{bound}]")));
    }
    Ok(())
}

/// Product of generators in the given order.
pub fn word_product(shape: Shape, letters: &[(usize, usize)]) -> Result<QMElement> {
    let mut terms: Vec<(Monomial, RatFunc)> = vec![(Monomial::one(shape.nvars()), RatFunc::one())];
    for &(i, j) in letters {
        let v = shape.var(i, j)?;
        let mut next = BTreeMap::new();
        for (t, c) in &terms {
            for (t2, c2) in mul_mono_var(shape, t, v).iter() {
                accumulate(&mut next, t2.clone(), c.mul(c2));
            }
        }
        terms = next.into_iter().collect();
    }
    Ok(QMElement::from_terms(shape, terms))
}

/// Quantum minor on the given rows and columns.
pub fn quantum_minor(shape: Shape, rows: &[usize], cols: &[usize], variant: MinorVariant) -> Result<QMElement> {
    check_index_set(rows, shape.m, "row")?;
    check_index_set(cols, shape.n, "column")?;
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch(format!("{} rows vs {} columns", rows.len(), cols.len())));
    }
    let k = rows.len();
    let mut out = QMElement::zero(shape);
    for w in Permutation::all(k) {
        let len = w.length() as i64;
        let (letters, coeff): (Vec<(usize, usize)>, RatFunc) = match variant {
            MinorVariant::First => (
                (1..=k).map(|t| (rows[t - 1], cols[w.apply(t) - 1])).collect(),
                RatFunc::term(if len % 2 == 0 { 1 } else { -1 }, len),
            ),
            MinorVariant::Second => (
                (1..=k).rev().map(|t| (rows[w.apply(t) - 1], cols[t - 1])).collect(),
                RatFunc::term(if len % 2 == 0 { 1 } else { -1 }, -len),
            ),
        };
        out.add_scaled(&word_product(shape, &letters)?, &coeff);
    }
    Ok(out)
}

/// Checks that every straightening rule replaces a monomial by strictly
/// smaller ones.
pub fn check_order_admissibility(shape: Shape) -> Result<()> {
    let nv = shape.nvars();
    for w in 0..nv {
        for v in 0..w {
            let replaced = Monomial::var(nv, w).times(&Monomial::var(nv, v));
            for ((a, b), _) in swap_rule(shape, w, v) {
                let mono = Monomial::var(nv, a).times(&Monomial::var(nv, b));
                let is_main = (a, b) == (v, w);
                if !is_main && mono >= replaced {
                    return Err(Error::Precondition(format!(
                        "rule for {} {} produces non-smaller monomial {}",
                        shape.var_name(w),
                        shape.var_name(v),
                        mono.render(shape)
                    )));
                }
                if a > b {
                    return Err(Error::Precondition("rewrite output not normal-ordered".into()));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s22() -> Shape {
        Shape::new(2, 2).unwrap()
    }

    fn x(shape: Shape, i: usize, j: usize) -> QMElement {
        QMElement::var(shape, i, j).unwrap()
    }

    fn qq() -> RatFunc {
        RatFunc::q_power(1).sub(&RatFunc::q_power(-1))
    }

    #[test]
    fn straightening_examples() {
        let s = s22();
        let p = x(s, 1, 2).mul(&x(s, 1, 1));
        assert_eq!(p, x(s, 1, 1).mul(&x(s, 1, 2)).scale(&RatFunc::q_power(-1)));
        assert_eq!(p.to_string(), "q^-1 x11 x12");

        let p = x(s, 2, 2).mul(&x(s, 1, 1));
        let expected = x(s, 1, 1)
            .mul(&x(s, 2, 2))
            .sub(&x(s, 1, 2).mul(&x(s, 2, 1)).scale(&qq()));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x11 x22 + (-q + q^-1) x12 x21");

        let sq = x(s, 1, 1).mul(&x(s, 1, 1));
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.leading_monomial().unwrap().exps(), &[2, 0, 0, 0]);
    }

    #[test]
    fn defining_relations_hold() {
        for (m, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let s = Shape::new(m, n).unwrap();
            for i in 1..=m {
                for l in 1..=m {
                    for j in 1..=n {
                        for k in 1..=n {
                            let a = x(s, i, j);
                            let b = x(s, l, k);
                            let lhs = a.mul(&b);
                            let rhs = b.mul(&a);
                            let rel = if i == l && j < k || j == k && i < l {
                                lhs.sub(&rhs.scale(&RatFunc::q_power(1)))
                            } else if i < l && j > k {
                                lhs.sub(&rhs)
                            } else if i < l && j < k {
                                lhs.sub(&rhs).sub(&x(s, i, k).mul(&x(s, l, j)).scale(&qq()))
                            } else {
                                continue;
                            };
                            assert!(rel.is_zero(), "relation for x{i}{j} x{l}{k}: {rel}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn order_is_admissible() {
        for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 3), (1, 4), (4, 4)] {
            check_order_admissibility(Shape::new(m, n).unwrap()).unwrap();
        }
    }

    #[test]
    fn minor_examples() {
        let s = s22();
        assert_eq!(quantum_minor(s, &[1], &[1], MinorVariant::First).unwrap(), x(s, 1, 1));
        let det = quantum_minor(s, &[1, 2], &[1, 2], MinorVariant::First).unwrap();
        let expected = x(s, 1, 1)
            .mul(&x(s, 2, 2))
            .sub(&x(s, 1, 2).mul(&x(s, 2, 1)).scale(&RatFunc::q_power(1)));
        assert_eq!(det, expected);
        assert_eq!(det.to_string(), "x11 x22 - q x12 x21");
        let second = quantum_minor(s, &[1, 2], &[1, 2], MinorVariant::Second).unwrap();
        assert_eq!(second, det);
        assert!(quantum_minor(s, &[1, 2], &[1], MinorVariant::First).is_err());
        assert!(quantum_minor(s, &[], &[], MinorVariant::First).is_err());
        assert!(quantum_minor(s, &[1, 3], &[1, 2], MinorVariant::First).is_err());
    }

    #[test]
    fn gradings() {
        let s = s22();
        assert_eq!(x(s, 1, 2).torus_weight(), Grading::Homogeneous(vec![1, 0, 0, -1]));
        let det = quantum_minor(s, &[1, 2], &[1, 2], MinorVariant::First).unwrap();
        assert_eq!(det.torus_weight(), Grading::Homogeneous(vec![1, 1, -1, -1]));
        assert!(matches!(x(s, 1, 1).add(&x(s, 1, 2)).torus_weight(), Grading::Inhomogeneous { .. }));
        assert_eq!(x(s, 1, 1).q_degree(), Grading::Homogeneous(RootElt(vec![0, -1, 0])));
        let d = RootElt(vec![-1, -2, -1]);
        assert_eq!(x(s, 1, 1).mul(&x(s, 2, 2)).q_degree(), Grading::Homogeneous(d.clone()));
        assert_eq!(det.q_degree(), Grading::Homogeneous(d));
        assert_eq!(QMElement::zero(s).q_degree(), Grading::Zero);
    }

    #[test]
    fn monomial_order() {
        let nv = 4;
        let a = Monomial::from_exps(vec![1, 0, 0, 1]); // x11 x22
        let b = Monomial::from_exps(vec![0, 1, 1, 0]); // x12 x21
        assert!(a > b);
        assert!(Monomial::var(nv, 3) > Monomial::var(nv, 0));
        assert!(Monomial::from_exps(vec![2, 0, 0, 0]) > Monomial::var(nv, 3));
    }
}
