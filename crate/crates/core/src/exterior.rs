//! The quantum exterior algebra on `v_1, ..., v_N` with `v_i v_j = -q v_j v_i`
//! for `j < i` and `v_i^2 = 0`, viewed as a `U_q(sl_N)`-module algebra.
//!
//! Degree-`k` vectors live on the basis `v_J`, `J` a sorted `k`-subset of
//! `[1, N]`. Operators compose with the rightmost factor acting first.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::qcoeff::{qfactorial, RatFunc};
use crate::weyl::{bruhat_leq, coxeter_cm, sorted_leq, Permutation};

/// Element of the exterior algebra, supported on sorted subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtVector {
    n: usize,
    terms: BTreeMap<Vec<usize>, RatFunc>,
}

impl ExtVector {
    pub fn zero(n: usize) -> Self {
        ExtVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `v_J`.
    pub fn basis(n: usize, set: &[usize]) -> Result<Self> {
        check_subset(n, set)?;
        let mut v = Self::zero(n);
        v.terms.insert(set.to_vec(), RatFunc::one());
        Ok(v)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, set: &[usize]) -> RatFunc {
        self.terms.get(set).cloned().unwrap_or_else(RatFunc::zero)
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

    /// Common cardinality of the support, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Vec::len)
    }

    pub fn support(&self) -> Vec<Vec<usize>> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, set: Vec<usize>, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.degree().is_none_or(|d| d == set.len()), "mixed degrees");
        match self.terms.get_mut(&set) {
            Some(x) => {
                *x = x.add(c);
                if x.is_zero() {
                    self.terms.remove(&set);
                }
            }
            None => {
                self.terms.insert(set, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        for (s, x) in &other.terms {
            self.add_term(s.clone(), &x.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &RatFunc::from_int(-1));
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// `Some(c)` if `self = c v_J`.
    pub fn as_multiple_of(&self, set: &[usize]) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(set).cloned(),
            _ => None,
        }
    }

    fn coords(&self, basis: &BTreeMap<Vec<usize>, usize>) -> Vector {
        let mut v = vec![RatFunc::zero(); basis.len()];
        for (s, c) in &self.terms {
            v[basis[s]] = c.clone();
        }
        v
    }
}

impl fmt::Display for ExtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (s, c)) in self.terms.iter().enumerate() {
            let set = s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let (neg, mag) = match c.as_term() {
                Some((r, _)) if r < num_rational::BigRational::from_integer(0.into()) => (true, c.neg()),
                _ => (false, c.clone()),
            };
            if idx > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "v{{{set}}}")?;
            } else if mag.is_single_term() {
                write!(f, "{mag} · v{{{set}}}")?;
            } else {
                write!(f, "({mag}) · v{{{set}}}")?;
            }
        }
        Ok(())
    }
}

fn check_subset(n: usize, set: &[usize]) -> Result<()> {
    if set.windows(2).any(|p| p[0] >= p[1]) || set.first() == Some(&0) || set.last().is_some_and(|&x| x > n) {
        return Err(Error::Domain(format!("{set:?} is not a sorted subset of [1,{n}]")));
    }
    Ok(())
}

/// All `k`-subsets of `[1, n]` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Sorts a word of generators: each adjacent inversion costs `-q`, a
/// repeated letter gives zero.
pub fn ext_normal_form(n: usize, word: &[usize]) -> Result<ExtVector> {
    if let Some(&bad) = word.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::IndexOutOfRange(format!("v_{bad} with N = {n}")));
    }
    let mut w = word.to_vec();
    let mut swaps = 0i64;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] == w[j + 1] {
                return Ok(ExtVector::zero(n));
            }
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return Ok(ExtVector::zero(n));
    }
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    let mut v = ExtVector::zero(n);
    v.add_term(w, &RatFunc::term(sign, swaps));
    Ok(v)
}

/// Chevalley generators of `U_q(sl_N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `X_i^+`
    E(usize),
    /// `X_i^-`
    F(usize),
    /// `K_i`
    K(usize),
    /// `K_i^{-1}`
    KInv(usize),
}

impl Generator {
    fn index(self) -> usize {
        match self {
            Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::KInv(i) => i,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "X{i}+"),
            Generator::F(i) => write!(f, "X{i}-"),
            Generator::K(i) => write!(f, "K{i}"),
            Generator::KInv(i) => write!(f, "K{i}^-1"),
        }
    }
}

/// Exponent of `K_i` on a single letter `v_j`.
fn k_letter(i: usize, j: usize) -> i64 {
    (j == i) as i64 - (j == i + 1) as i64
}

/// `<wt(v_J), alpha_i^vee>`.
pub fn k_exponent(i: usize, set: &[usize]) -> i64 {
    set.iter().map(|&j| k_letter(i, j)).sum()
}

fn act_on_basis(g: Generator, n: usize, set: &[usize], out: &mut ExtVector, c: &RatFunc) -> Result<()> {
    match g {
        Generator::K(i) => out.add_term(set.to_vec(), &c.mul(&RatFunc::q_power(k_exponent(i, set)))),
        Generator::KInv(i) => out.add_term(set.to_vec(), &c.mul(&RatFunc::q_power(-k_exponent(i, set)))),
        // X^+(ab) = X^+(a) b + K(a) X^+(b)
        Generator::E(i) => {
            if let Some(t) = set.iter().position(|&j| j == i + 1) {
                let e: i64 = set[..t].iter().map(|&j| k_letter(i, j)).sum();
                let mut word = set.to_vec();
                word[t] = i;
                out.add_scaled(&ext_normal_form(n, &word)?, &c.mul(&RatFunc::q_power(e)));
            }
        }
        // X^-(ab) = X^-(a) K^{-1}(b) + a X^-(b)
        Generator::F(i) => {
            if let Some(t) = set.iter().position(|&j| j == i) {
                let e: i64 = set[t + 1..].iter().map(|&j| -k_letter(i, j)).sum();
                let mut word = set.to_vec();
                word[t] = i + 1;
                out.add_scaled(&ext_normal_form(n, &word)?, &c.mul(&RatFunc::q_power(e)));
            }
        }
    }
    Ok(())
}

/// Action of a Chevalley generator, extended to products by the coproduct.
pub fn act_generator(g: Generator, v: &ExtVector) -> Result<ExtVector> {
    let n = v.n;
    let i = g.index();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("generator index {i} for sl_{n}")));
    }
    let mut out = ExtVector::zero(n);
    for (s, c) in &v.terms {
        act_on_basis(g, n, s, &mut out, c)?;
    }
    Ok(out)
}

/// Divided power `g^p / [p]!` for `g` one of `X_i^{+-}`.
pub fn divided_power(g: Generator, p: u32, v: &ExtVector) -> Result<ExtVector> {
    let mut cur = v.clone();
    for _ in 0..p {
        if cur.is_zero() {
            return Ok(cur);
        }
        cur = act_generator(g, &cur)?;
    }
    let fact = qfactorial(p, 1)?.to_ratfunc();
    Ok(cur.scale(&fact.inv()?))
}

fn braid_on_basis(i: usize, v: &ExtVector, set: &[usize]) -> Result<ExtVector> {
    let c = k_exponent(i, set);
    let mut out = ExtVector::zero(v.n);
    let mut np = 0u32;
    loop {
        let vn = divided_power(Generator::E(i), np, v)?;
        if vn.is_zero() {
            break;
        }
        let mut m = (np as i64 + c).max(0) as u32;
        loop {
            let vm = divided_power(Generator::F(i), m, &vn)?;
            if vm.is_zero() {
                break;
            }
            let l = m as i64 - np as i64 - c;
            debug_assert!(l >= 0);
            let vl = divided_power(Generator::E(i), l as u32, &vm)?;
            let sign = if m.is_multiple_of(2) { 1 } else { -1 };
            out.add_scaled(&vl, &RatFunc::term(sign, m as i64 - l * np as i64));
            m += 1;
        }
        np += 1;
    }
    Ok(out)
}

/// Lusztig braid operator `T_i`, applied weight component by weight
/// component (every basis vector is a weight vector).
pub fn braid_t(i: usize, v: &ExtVector) -> Result<ExtVector> {
    if i == 0 || i >= v.n {
        return Err(Error::IndexOutOfRange(format!("braid letter {i} for N = {}", v.n)));
    }
    let mut out = ExtVector::zero(v.n);
    for (s, c) in &v.terms {
        let b = ExtVector::basis(v.n, s)?;
        out.add_scaled(&braid_on_basis(i, &b, s)?, c);
    }
    Ok(out)
}

/// `T_{i_1} ... T_{i_l} v` for a reduced word, rightmost letter first.
pub fn braid_tw_word(word: &[usize], v: &ExtVector) -> Result<ExtVector> {
    let w = Permutation::from_word(v.n, word)?;
    if w.length() != word.len() {
        return Err(Error::Precondition(format!("word {word:?} is not reduced")));
    }
    let mut cur = v.clone();
    for &i in word.iter().rev() {
        cur = braid_t(i, &cur)?;
    }
    Ok(cur)
}

/// `T_w v`, using the canonical reduced word of `w`.
pub fn braid_tw(w: &Permutation, v: &ExtVector) -> Result<ExtVector> {
    if w.size() != v.n {
        return Err(Error::SizeMismatch(format!("S_{} acting on N = {}", w.size(), v.n)));
    }
    braid_tw_word(&w.reduced_word(), v)
}

/// A linear operator on the degree-`k` component, stored by the images of
/// the basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOperator {
    n: usize,
    k: usize,
    label: String,
    columns: Vec<ExtVector>,
}

/// Dense form of an operator for debugging output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseMatrix {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub basis: Vec<Vec<usize>>,
    pub rows: Vec<Vec<String>>,
}

impl LinOperator {
    pub fn from_fn(n: usize, k: usize, label: impl Into<String>, f: impl Fn(&ExtVector) -> Result<ExtVector>) -> Result<Self> {
        if k > n {
            return Err(Error::Domain(format!("degree {k} > N = {n}")));
        }
        let columns = subsets(n, k)
            .iter()
            .map(|s| f(&ExtVector::basis(n, s)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinOperator {
            n,
            k,
            label: label.into(),
            columns,
        })
    }

    pub fn generator(g: Generator, n: usize, k: usize) -> Result<Self> {
        Self::from_fn(n, k, g.to_string(), |v| act_generator(g, v))
    }

    pub fn identity(n: usize, k: usize) -> Result<Self> {
        Self::from_fn(n, k, "1", |v| Ok(v.clone()))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn apply(&self, v: &ExtVector) -> Result<ExtVector> {
        if v.n != self.n || v.degree().is_some_and(|d| d != self.k) {
            return Err(Error::SizeMismatch(format!("vector outside the degree-{} component", self.k)));
        }
        let index = basis_index(self.n, self.k);
        let mut out = ExtVector::zero(self.n);
        for (s, c) in &v.terms {
            out.add_scaled(&self.columns[index[s]], c);
        }
        Ok(out)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let columns = other
            .columns
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinOperator {
            n: self.n,
            k: self.k,
            label: format!("({})({})", self.label, other.label),
            columns,
        })
    }

    pub fn add_scaled(&self, other: &Self, c: &RatFunc) -> Self {
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut x = a.clone();
                x.add_scaled(b, c);
                x
            })
            .collect();
        LinOperator {
            n: self.n,
            k: self.k,
            label: format!("{} + ({c}) {}", self.label, other.label),
            columns,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &RatFunc::from_int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        LinOperator {
            n: self.n,
            k: self.k,
            label: format!("({c}) {}", self.label),
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(ExtVector::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        subsets(self.n, self.k)
            .iter()
            .zip(&self.columns)
            .all(|(s, c)| c.terms.keys().all(|t| t == s))
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let basis = subsets(self.n, self.k);
        let rows = basis
            .iter()
            .map(|r| self.columns.iter().map(|c| c.coeff(r).to_string()).collect())
            .collect();
        DenseMatrix {
            label: self.label.clone(),
            n: self.n,
            k: self.k,
            basis,
            rows,
        }
    }
}

fn basis_index(n: usize, k: usize) -> BTreeMap<Vec<usize>, usize> {
    subsets(n, k).into_iter().enumerate().map(|(i, s)| (s, i)).collect()
}

/// The operator `tau(Y_ij)` on the degree-`k` component:
/// `tau Y_{i,i+1} = X_i^+` and
/// `tau Y_ij = (tau Y_{j-1,j})(tau Y_{i,j-1}) - q^{-1} (tau Y_{i,j-1})(tau Y_{j-1,j})`.
pub fn tau_rootvector(i: usize, j: usize, n: usize, k: usize) -> Result<LinOperator> {
    if i == 0 || i >= j || j > n {
        return Err(Error::IndexOutOfRange(format!("root vector ({i},{j}) for N = {n}")));
    }
    if j == i + 1 {
        return Ok(LinOperator::generator(Generator::E(i), n, k)?.with_label(format!("tauY{i}{j}")));
    }
    let a = tau_rootvector(j - 1, j, n, k)?;
    let b = tau_rootvector(i, j - 1, n, k)?;
    let ab = a.compose(&b)?;
    let ba = b.compose(&a)?;
    Ok(ab.add_scaled(&ba, &RatFunc::term(-1, -1)).with_label(format!("tauY{i}{j}")))
}

/// The closed-form value of `tau(Y_ij) v_I`.
pub fn tau_rootvector_formula(i: usize, j: usize, n: usize, set: &[usize]) -> Result<ExtVector> {
    check_subset(n, set)?;
    if !set.contains(&j) || set.contains(&i) {
        return Ok(ExtVector::zero(n));
    }
    let between = set.iter().filter(|&&x| x > i && x < j).count() as i64;
    let e = i as i64 - j as i64 + between + 1;
    let mut target: Vec<usize> = set.iter().copied().filter(|&x| x != j).collect();
    target.push(i);
    target.sort_unstable();
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut v = ExtVector::zero(n);
    v.add_term(target, &RatFunc::term(sign, e));
    Ok(v)
}

/// Smallest subspace containing `start` and stable under the given generators;
/// returned as the set of basis subsets `J` with `v_J` in it.
fn closure(start: ExtVector, gens: &[Generator], k: usize) -> Result<Subspace> {
    let n = start.n;
    let index = basis_index(n, k);
    let mut span = Subspace::zero(index.len());
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        if v.is_zero() {
            continue;
        }
        let coords = v.coords(&index);
        if span.contains(&coords) {
            continue;
        }
        let mut basis = span.basis().to_vec();
        basis.push(coords);
        span = Subspace::span(index.len(), basis)?;
        for &g in gens {
            queue.push(act_generator(g, &v)?);
        }
    }
    Ok(span)
}

fn coordinate_subsets(span: &Subspace, n: usize, k: usize) -> Vec<Vec<usize>> {
    let all = subsets(n, k);
    all.iter()
        .enumerate()
        .filter(|(idx, _)| {
            let mut e = vec![RatFunc::zero(); all.len()];
            e[*idx] = RatFunc::one();
            span.contains(&e)
        })
        .map(|(_, s)| s.clone())
        .collect()
}

fn raising(n: usize) -> Vec<Generator> {
    (1..n).map(Generator::E).collect()
}

fn lowering(n: usize) -> Vec<Generator> {
    (1..n).map(Generator::F).collect()
}

fn check_degree(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::Domain(format!("degree {k} outside [1, {}]", n.saturating_sub(1))));
    }
    Ok(())
}

fn demazure_space(w: &Permutation, k: usize) -> Result<Subspace> {
    let n = w.size();
    check_degree(n, k)?;
    let top: Vec<usize> = (1..=k).collect();
    let start = braid_tw(w, &ExtVector::basis(n, &top)?)?;
    closure(start, &raising(n), k)
}

/// Basis subsets of the Demazure module `U_+ T_w v_{[1,k]}`, computed by
/// closing the extreme vector under the raising operators.
pub fn demazure_span(w: &Permutation, k: usize) -> Result<Vec<Vec<usize>>> {
    let span = demazure_space(w, k)?;
    let out = coordinate_subsets(&span, w.size(), k);
    debug_assert_eq!(out.len(), span.rank());
    Ok(out)
}

/// `{J : J <= w([1,k])}`.
pub fn demazure_span_combinatorial(w: &Permutation, k: usize) -> Result<Vec<Vec<usize>>> {
    let n = w.size();
    check_degree(n, k)?;
    let top = w.prefix_set(k)?;
    Ok(subsets(n, k).into_iter().filter(|j| sorted_leq(j, &top)).collect())
}

/// Both sides of the orthogonality criterion for the dual vector `eta_J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerpOutcome {
    /// `eta_J` annihilates `V_w(omega_k) ∩ U_- T_y v_{[1,k]}` (linear algebra).
    pub orthogonal: bool,
    /// `J` is not `>= y([1,k])` (combinatorics).
    pub combinatorial: bool,
}

impl PerpOutcome {
    pub fn agree(&self) -> bool {
        self.orthogonal == self.combinatorial
    }
}

pub fn perp_test(set: &[usize], y: &Permutation, w: &Permutation, k: usize) -> Result<PerpOutcome> {
    let n = w.size();
    check_degree(n, k)?;
    check_subset(n, set)?;
    if set.len() != k {
        return Err(Error::Precondition(format!("|J| = {} but k = {k}", set.len())));
    }
    if !sorted_leq(set, &w.prefix_set(k)?) {
        return Err(Error::Precondition(format!("{set:?} is not <= w([1,{k}])")));
    }
    if !bruhat_leq(y, w)? {
        return Err(Error::NotBelow {
            y: y.one_line(),
            w: w.one_line(),
            reason: crate::weyl::explain_not_below(y, w).unwrap_or_default(),
        });
    }
    let top: Vec<usize> = (1..=k).collect();
    let demazure = demazure_space(w, k)?;
    let lower = closure(braid_tw(y, &ExtVector::basis(n, &top)?)?, &lowering(n), k)?;
    let meet = demazure.intersect(&lower)?;
    let idx = basis_index(n, k)[set];
    let orthogonal = meet.basis().iter().all(|v| v[idx].is_zero());
    let combinatorial = !sorted_leq(&y.prefix_set(k)?, set);
    Ok(PerpOutcome {
        orthogonal,
        combinatorial,
    })
}

/// Runs the exterior-algebra checks on `N = m + n` with `w = c^m`: the
/// root-vector coefficient formula, the braid law on extreme vectors, the
/// Demazure spans for every `w'` in `S_N`, and the orthogonality criterion
/// for every `y <= c^m`.
pub fn verify_exterior(m: usize, n: usize) -> Result<Certificate> {
    let start = Instant::now();
    let total = m + n;
    let mut cert = Certificate::new("exterior", m, n, None);
    if total > 6 {
        return Err(Error::ResourceLimit(format!("exterior suite limited to N <= 6, got {total}")));
    }
    let mut count = 0usize;
    for k in 0..=total {
        for i in 1..total {
            for j in i + 1..=total {
                let op = tau_rootvector(i, j, total, k)?;
                for set in subsets(total, k) {
                    let got = op.apply(&ExtVector::basis(total, &set)?)?;
                    let want = tau_rootvector_formula(i, j, total, &set)?;
                    count += 1;
                    if got != want {
                        cert.fail(format!("tauY{i}{j} v{set:?}"), format!("{got} != {want}"));
                    }
                }
            }
        }
    }
    cert.witness("root-vector coefficients checked", count);

    let mut count = 0usize;
    for w in Permutation::all(total) {
        for k in 1..total {
            let top: Vec<usize> = (1..=k).collect();
            let img = braid_tw(&w, &ExtVector::basis(total, &top)?)?;
            let target = w.prefix_set(k)?;
            if !img.as_multiple_of(&target).is_some_and(|c| !c.is_zero()) {
                cert.fail(format!("T_{w} v[1..{k}]"), &img);
            }
            let span = demazure_span(&w, k)?;
            if span != demazure_span_combinatorial(&w, k)? {
                cert.fail(format!("Demazure span w={w} k={k}"), format!("{span:?}"));
            }
            count += 1;
        }
    }
    cert.witness("extreme vectors and Demazure spans checked", count);

    let (cm, _) = coxeter_cm(m, n)?;
    let mut count = 0usize;
    for y in crate::weyl::bruhat_interval(&cm) {
        for k in 1..total {
            let top = cm.prefix_set(k)?;
            for set in subsets(total, k).into_iter().filter(|j| sorted_leq(j, &top)) {
                let out = perp_test(&set, &y, &cm, k)?;
                count += 1;
                if !out.agree() {
                    cert.fail(format!("orthogonality y={y} k={k} J={set:?}"), format!("{out:?}"));
                }
            }
        }
    }
    cert.witness("orthogonality cases checked", count);
    cert.stamp(start);
    Ok(cert)
}
