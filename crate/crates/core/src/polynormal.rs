//! Generating sequences of the torus-invariant prime ideals of
//! `R_q[M_{m,n}]` and the verifiers built on them.
//!
//! The primes are indexed by `y <= c^m` in `S_{m+n}`. For such `y` the
//! index sets are `Υ(y) = {J : J <= c^m([1,k]), J not >= y([1,k])}` and
//! each `J` contributes the quantum minor `Δ^q(J)`.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, ScalarCheck};
use crate::error::{Error, Result};
use crate::exterior::subsets;
use crate::groebner::{
    default_degree_guard, gk_dim_quotient, left_groebner, membership, normal_form, proportionality, reduce,
    two_sided_groebner, GroebnerBasis, GroebnerBuilder, IdealKind,
};
use crate::lattice::{deg_x, pairing, weyl_action, wt_eta, Weight};
use crate::parallel::{par_map, Jobs};
use crate::qmatrix::{quantum_minor, Grading, MinorVariant, QMElement, Shape};
use crate::weyl::{bruhat_interval_with, bruhat_leq, coxeter_cm, cover_relations, explain_not_below, sorted_leq, Permutation};

pub use crate::certificate::Status;

/// An index set `J` with the rows and columns of its minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorIndex {
    pub set: Vec<usize>,
    pub k: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorIndex {
    pub fn set_string(&self) -> String {
        let inner = self.set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("{{{inner}}}")
    }

    /// `Δ^q(J)`; the empty minor is `1`.
    pub fn minor(&self, shape: Shape) -> Result<QMElement> {
        if self.rows.is_empty() {
            return Ok(QMElement::one(shape));
        }
        quantum_minor(shape, &self.rows, &self.cols, MinorVariant::First)
    }
}

/// Knobs shared by the verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub degree_guard: u32,
    pub dedup: bool,
}

impl VerifyOptions {
    pub fn for_shape(shape: Shape) -> Self {
        VerifyOptions {
            degree_guard: default_degree_guard(shape),
            dedup: false,
        }
    }
}

/// Componentwise `J <= J'` for sorted sets of equal size.
pub fn subset_leq(a: &[usize], b: &[usize]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(format!("|J| = {} vs |J'| = {}", a.len(), b.len())));
    }
    Ok(sorted_leq(a, b))
}

fn top(m: usize, n: usize) -> Result<Permutation> {
    Ok(coxeter_cm(m, n)?.0)
}

fn check_below(y: &Permutation, w: &Permutation) -> Result<()> {
    if y.size() != w.size() {
        return Err(Error::SizeMismatch(format!("y in S_{} but c^m in S_{}", y.size(), w.size())));
    }
    if !bruhat_leq(y, w)? {
        return Err(Error::NotBelow {
            y: y.one_line(),
            w: w.one_line(),
            reason: explain_not_below(y, w).unwrap_or_default(),
        });
    }
    Ok(())
}

/// `Υ(y)` sorted by `(|J|, lex)`.
pub fn upsilon(y: &Permutation, m: usize, n: usize) -> Result<Vec<Vec<usize>>> {
    let cm = top(m, n)?;
    check_below(y, &cm)?;
    let total = m + n;
    let mut out = Vec::new();
    for k in 1..total {
        let c = cm.prefix_set(k)?;
        let ys = y.prefix_set(k)?;
        out.extend(subsets(total, k).into_iter().filter(|j| sorted_leq(j, &c) && !sorted_leq(&ys, j)));
    }
    Ok(out)
}

/// Rows and columns of `Δ^q(J)`: rows `w°(p_1(J) \ p_1(c^m[1,k]))` with
/// `w°(i) = m+1-i`, columns `(p_2(c^m[1,k]) \ p_2(J)) - m`.
pub fn delta_index(set: &[usize], m: usize, n: usize) -> Result<MinorIndex> {
    let total = m + n;
    let k = set.len();
    if k == 0 || k >= total {
        return Err(Error::Precondition(format!("|J| = {k} outside [1, {}]", total - 1)));
    }
    if set.windows(2).any(|p| p[0] >= p[1]) || set[0] == 0 || set[k - 1] > total {
        return Err(Error::Domain(format!("{set:?} is not a sorted subset of [1,{total}]")));
    }
    let c = top(m, n)?.prefix_set(k)?;
    if !sorted_leq(set, &c) {
        return Err(Error::Precondition(format!("{set:?} is not <= c^m([1,{k}]) = {c:?}")));
    }
    let mut rows: Vec<usize> = set
        .iter()
        .filter(|&&j| j <= m && !c.contains(&j))
        .map(|&j| m + 1 - j)
        .collect();
    rows.sort_unstable();
    let cols: Vec<usize> = c.iter().filter(|&&j| j > m && !set.contains(&j)).map(|&j| j - m).collect();
    if rows.len() != cols.len() {
        return Err(Error::Domain(format!("{set:?} gives {} rows and {} columns", rows.len(), cols.len())));
    }
    Ok(MinorIndex {
        set: set.to_vec(),
        k,
        rows,
        cols,
    })
}

/// The minors `Δ^q(J)`, `J` in `Υ(y)`, in `(|J|, lex)` order. With `dedup`
/// an exact repeat of an earlier minor is dropped.
pub fn generating_sequence(y: &Permutation, m: usize, n: usize, dedup: bool) -> Result<Vec<(MinorIndex, QMElement)>> {
    let shape = Shape::new(m, n)?;
    let mut out: Vec<(MinorIndex, QMElement)> = Vec::new();
    for set in upsilon(y, m, n)? {
        let idx = delta_index(&set, m, n)?;
        let u = idx.minor(shape)?;
        if dedup && out.iter().any(|(_, v)| *v == u) {
            continue;
        }
        out.push((idx, u));
    }
    Ok(out)
}

/// Predicted exponent `e` in `Δ^q(J) x_ab = q^e x_ab Δ^q(J)`:
/// `<Wt(η_J) - c^m(ω_k), deg x_ab>`.
pub fn predicted_scalar(set: &[usize], a: usize, b: usize, m: usize, n: usize) -> Result<i64> {
    let k = set.len();
    let cm = top(m, n)?;
    let mu = &wt_eta(set, m, n)? - &weyl_action(&cm, &Weight::fundamental(m + n - 1, k)?)?;
    pairing(&mu, &deg_x(a, b, m, n)?)
}

/// Predicted exponent for the separating minor `Δ^q(y_1([1,k]))` modulo
/// `I(y_1)`: `<-y_1(ω_k) - c^m(ω_k), deg x_ab>`.
pub fn separation_scalar(y1: &Permutation, k: usize, a: usize, b: usize, m: usize, n: usize) -> Result<i64> {
    let cm = top(m, n)?;
    let om = Weight::fundamental(m + n - 1, k)?;
    let mu = &(-&weyl_action(y1, &om)?) - &weyl_action(&cm, &om)?;
    pairing(&mu, &deg_x(a, b, m, n)?)
}

/// The two-sided ideal `I(y)` as a reduced Groebner basis.
pub fn ideal_basis(y: &Permutation, m: usize, n: usize, opts: VerifyOptions) -> Result<GroebnerBasis> {
    let shape = Shape::new(m, n)?;
    let gens: Vec<QMElement> = generating_sequence(y, m, n, opts.dedup)?.into_iter().map(|(_, u)| u).collect();
    two_sided_groebner(shape, &gens, opts.degree_guard)
}

/// Outcome of commuting `u` past `x` modulo a basis.
struct Commutation {
    observed: Option<i64>,
    vacuous: bool,
    residual: QMElement,
}

fn commute_mod(u: &QMElement, x: &QMElement, basis: &[QMElement], predicted: i64) -> Commutation {
    let ux = reduce(&u.mul(x), basis);
    let xu = reduce(&x.mul(u), basis);
    let vacuous = ux.is_zero() && xu.is_zero();
    let observed = if vacuous {
        None
    } else {
        proportionality(&ux, &xu).and_then(|c| c.as_q_power())
    };
    let residual = ux.sub(&xu.scale(&crate::qcoeff::RatFunc::q_power(predicted)));
    Commutation {
        observed,
        vacuous,
        residual,
    }
}

fn guarded(mut cert: Certificate, start: Instant, res: Result<()>) -> Result<Certificate> {
    match res {
        Ok(()) => {}
        Err(e @ Error::GuardExceeded { .. }) => cert.guard(e),
        Err(e) => return Err(e),
    }
    cert.stamp(start);
    Ok(cert)
}

/// Checks that the minors of `y`, in order, form a normal generating
/// sequence: each is homogeneous for the root-lattice grading and
/// `q`-commutes with every generator modulo the two-sided ideal of its
/// predecessors, with the exponent given by [`predicted_scalar`]. Also
/// checks that the left and two-sided ideals generated by the sequence
/// coincide.
pub fn verify_polynormal(y: &Permutation, m: usize, n: usize, opts: VerifyOptions) -> Result<Certificate> {
    let start = Instant::now();
    let shape = Shape::new(m, n)?;
    let mut cert = Certificate::new("polynormal", m, n, Some(y.one_line()));
    let seq = generating_sequence(y, m, n, opts.dedup)?;
    let res = (|| {
        let mut builder = GroebnerBuilder::new(shape, IdealKind::TwoSided, opts.degree_guard);
        for (pos, (idx, u)) in seq.iter().enumerate() {
            let label = format!("u{} = Δ{}", pos + 1, idx.set_string());
            cert.witness(&label, u);
            if let Grading::Inhomogeneous { first, second } = u.q_degree() {
                cert.fail(format!("{label} not homogeneous"), format!("{first} vs {second}"));
            }
            for a in 1..=m {
                for b in 1..=n {
                    let x = QMElement::var(shape, a, b)?;
                    let predicted = predicted_scalar(&idx.set, a, b, m, n)?;
                    let c = commute_mod(u, &x, builder.current(), predicted);
                    let check = ScalarCheck {
                        element: format!("u{}", pos + 1),
                        generator: shape.var_name(shape.var(a, b)?),
                        predicted,
                        observed: c.observed,
                        vacuous: c.vacuous,
                    };
                    if !c.residual.is_zero() {
                        cert.fail(format!("u{} x{a}{b} - q^{predicted} x{a}{b} u{} remainder", pos + 1, pos + 1), &c.residual);
                    } else if !check.matches() {
                        cert.fail(format!("u{} vs x{a}{b} exponent", pos + 1), format!("{:?}", check.observed));
                    }
                    cert.predicted_vs_observed_scalars.push(check);
                }
            }
            builder.add(std::slice::from_ref(u))?;
        }
        let two = builder.basis();
        let gens: Vec<QMElement> = seq.iter().map(|(_, u)| u.clone()).collect();
        let left = left_groebner(shape, &gens, opts.degree_guard)?;
        if !left.same_ideal(&two) {
            cert.fail("left ideal differs from two-sided ideal", format!("{} vs {} elements", left.len(), two.len()));
        }
        cert.witness("basis size", two.len());
        Ok(())
    })();
    guarded(cert, start, res)
}

/// [`verify_polynormal`] for every `y <= c^m`, in interval order.
pub fn verify_polynormal_all(m: usize, n: usize, opts: VerifyOptions, jobs: Jobs) -> Result<Vec<Certificate>> {
    let interval = bruhat_interval_with(&top(m, n)?, jobs);
    par_map(&interval, jobs, |y| verify_polynormal(y, m, n, opts)).into_iter().collect()
}

fn interval_bases(m: usize, n: usize, opts: VerifyOptions, jobs: Jobs) -> Result<(Vec<Permutation>, Vec<Result<GroebnerBasis>>)> {
    let interval = bruhat_interval_with(&top(m, n)?, jobs);
    let bases = par_map(&interval, jobs, |y| ideal_basis(y, m, n, opts));
    Ok((interval, bases))
}

/// Checks that ideal inclusion on `{I(y) : y <= c^m}` is the Bruhat order.
pub fn verify_poset(m: usize, n: usize, opts: VerifyOptions, jobs: Jobs) -> Result<Certificate> {
    let start = Instant::now();
    let mut cert = Certificate::new("poset", m, n, None);
    let res = (|| {
        let (interval, bases) = interval_bases(m, n, opts, jobs)?;
        let bases = bases.into_iter().collect::<Result<Vec<_>>>()?;
        let gens: Vec<Vec<QMElement>> = interval
            .iter()
            .map(|y| Ok(generating_sequence(y, m, n, opts.dedup)?.into_iter().map(|(_, u)| u).collect()))
            .collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..interval.len())
            .flat_map(|i| (0..interval.len()).map(move |j| (i, j)))
            .collect();
        let cells = par_map(&pairs, jobs, |&(i, j)| -> Result<(bool, bool)> {
            let incl = gens[i].iter().all(|g| membership(g, &bases[j]));
            Ok((incl, bruhat_leq(&interval[i], &interval[j])?))
        });
        let width = interval.len();
        let mut rows = vec![String::with_capacity(width); width];
        for (&(i, j), cell) in pairs.iter().zip(cells) {
            let (incl, leq) = cell?;
            rows[i].push(if incl { '1' } else { '0' });
            if incl != leq {
                cert.fail(
                    format!("I({}) ⊆ I({})", interval[i], interval[j]),
                    format!("inclusion {incl}, bruhat {leq}"),
                );
            }
        }
        for (y, row) in interval.iter().zip(rows) {
            cert.witness(format!("row {y}"), row);
        }
        Ok(())
    })();
    guarded(cert, start, res)
}

/// Checks `GKdim(R/I(y)) = mn - l(y)` for every `y <= c^m`.
pub fn verify_heights(m: usize, n: usize, opts: VerifyOptions, jobs: Jobs) -> Result<Certificate> {
    let start = Instant::now();
    let mut cert = Certificate::new("heights", m, n, None);
    let res = (|| {
        let (interval, bases) = interval_bases(m, n, opts, jobs)?;
        for (y, gb) in interval.iter().zip(bases) {
            let gk = gk_dim_quotient(&gb?)?;
            let expected = m * n - y.length();
            if gk == expected {
                cert.witness(format!("GKdim R/I({y})"), gk);
            } else {
                cert.fail(format!("GKdim R/I({y})"), format!("{gk}, expected {expected}"));
            }
        }
        Ok(())
    })();
    guarded(cert, start, res)
}

/// A normal element separating `I(y1) ⊂ I(y2)`.
#[derive(Clone, Debug)]
pub struct Separation {
    pub k: usize,
    pub set: Vec<usize>,
    pub minor: QMElement,
    pub certificate: Certificate,
}

/// For `y1 < y2 <= c^m`: the first `k` with `y1([1,k]) != y2([1,k])` and the
/// minor `Δ^q(y1([1,k]))`, certified to lie in `I(y2)`, not in `I(y1)`, and
/// to `q`-commute with every generator modulo `I(y1)`.
pub fn separating_minor(y1: &Permutation, y2: &Permutation, m: usize, n: usize, opts: VerifyOptions) -> Result<Separation> {
    let start = Instant::now();
    let shape = Shape::new(m, n)?;
    let cm = top(m, n)?;
    check_below(y2, &cm)?;
    if y1 == y2 || !bruhat_leq(y1, y2)? {
        return Err(Error::Precondition(format!("{y1} is not strictly below {y2}")));
    }
    let k = (1..m + n)
        .find(|&k| y1.prefix_set(k).ok() != y2.prefix_set(k).ok())
        .expect("distinct permutations differ on some prefix");
    let set = y1.prefix_set(k)?;
    let minor = delta_index(&set, m, n)?.minor(shape)?;
    let mut cert = Certificate::new("separation", m, n, Some(format!("{y1}<{y2}")));
    cert.witness("k", k);
    cert.witness("J", format!("{set:?}"));
    cert.witness("minor", &minor);
    let res = (|| {
        let big = ideal_basis(y2, m, n, opts)?;
        let small = ideal_basis(y1, m, n, opts)?;
        if !membership(&minor, &big) {
            cert.fail("not in I(y2)", normal_form(&minor, &big));
        }
        let rem = normal_form(&minor, &small);
        if rem.is_zero() {
            cert.fail("in I(y1)", "normal form 0");
        }
        for a in 1..=m {
            for b in 1..=n {
                let x = QMElement::var(shape, a, b)?;
                let predicted = separation_scalar(y1, k, a, b, m, n)?;
                let c = commute_mod(&minor, &x, small.elements(), predicted);
                let check = ScalarCheck {
                    element: "minor".into(),
                    generator: shape.var_name(shape.var(a, b)?),
                    predicted,
                    observed: c.observed,
                    vacuous: c.vacuous,
                };
                if c.observed.is_none() && !c.vacuous {
                    cert.fail(format!("not q-normal against x{a}{b}"), &c.residual);
                } else if !check.matches() {
                    cert.fail(format!("exponent against x{a}{b}"), format!("{:?} vs {predicted}", check.observed));
                }
                cert.predicted_vs_observed_scalars.push(check);
            }
        }
        Ok(())
    })();
    let certificate = guarded(cert, start, res)?;
    Ok(Separation {
        k,
        set,
        minor,
        certificate,
    })
}

/// [`separating_minor`] for every Bruhat cover `y1 ⋖ y2` below `c^m`.
pub fn verify_separation(m: usize, n: usize, opts: VerifyOptions, jobs: Jobs) -> Result<Vec<Certificate>> {
    let interval = bruhat_interval_with(&top(m, n)?, jobs);
    let covers = cover_relations(&interval);
    par_map(&covers, jobs, |&(i, j)| {
        separating_minor(&interval[i], &interval[j], m, n, opts).map(|s| s.certificate)
    })
    .into_iter()
    .collect()
}

/// One row of the prime census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub y: String,
    pub length: usize,
    pub upsilon_size: usize,
    pub minors: Vec<String>,
}

/// All `y <= c^m` with `l(y)`, `|Υ(y)|` and the minors of `Υ(y)`.
pub fn list_primes(m: usize, n: usize, jobs: Jobs) -> Result<Vec<PrimeRow>> {
    let interval = bruhat_interval_with(&top(m, n)?, jobs);
    par_map(&interval, jobs, |y| {
        let seq = generating_sequence(y, m, n, false)?;
        Ok(PrimeRow {
            y: y.one_line(),
            length: y.length(),
            upsilon_size: seq.len(),
            minors: seq.iter().map(|(_, u)| u.to_string()).collect(),
        })
    })
    .into_iter()
    .collect()
}

/// The poset of torus-invariant primes as a DOT digraph; edges are Bruhat
/// covers pointing upwards.
pub fn poset_dot(m: usize, n: usize) -> Result<String> {
    let interval = bruhat_interval_with(&top(m, n)?, Jobs::Sequential);
    let mut out = String::new();
    writeln!(out, "digraph tprimes_{m}x{n} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, y) in interval.iter().enumerate() {
        let size = upsilon(y, m, n)?.len();
        writeln!(out, "  n{i} [label=\"{y}\\nl={}\\n|Υ|={size}\"];", y.length()).unwrap();
    }
    for (i, j) in cover_relations(&interval) {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
