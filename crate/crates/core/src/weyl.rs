//! Symmetric-group machinery: lengths, reduced words, Bruhat order, the
//! permutation `c^m` and Bruhat interval enumeration.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parallel::{par_map, Jobs};

/// A permutation of `[1, N]` in one-line notation.
///
/// Products compose right to left: `(u * v)(k) = u(v(k))`, so a word
/// `s_{i_1} ... s_{i_l}` applies `s_{i_l}` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("too large: {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of [1,{n}]")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// Simple transposition `s_i` swapping `i` and `i+1` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s_{i} in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// Longest element `k -> n+1-k`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).rev().collect(),
        }
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.compose(&Self::simple(n, i)?);
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `w(k)` for 1-indexed `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `self * other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images }
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word, built by peeling off right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (0..w.size().saturating_sub(1)).find(|&i| w.images[i] > w.images[i + 1]) {
            w.images.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// Sorted `{w(1), ..., w(k)}`.
    pub fn prefix_set(&self, k: usize) -> Result<Vec<usize>> {
        if k == 0 || k > self.size() {
            return Err(Error::IndexOutOfRange(format!("prefix {k} of S_{}", self.size())));
        }
        let mut s: Vec<usize> = self.images[..k].iter().map(|&x| x as usize).collect();
        s.sort_unstable();
        Ok(s)
    }

    /// Comma-separated one-line notation, e.g. `3,4,1,2`.
    pub fn one_line(&self) -> String {
        self.to_string()
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(cur: &mut Vec<usize>, start: usize, out: &mut Vec<Permutation>) {
    if start == cur.len() {
        out.push(Permutation {
            images: cur.iter().map(|&x| x as u8).collect(),
        });
        return;
    }
    for i in start..cur.len() {
        cur.swap(start, i);
        permute(cur, start + 1, out);
        cur.swap(start, i);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

/// `c^m` in `S_{m+n}` (`k -> k+m` mod `m+n`) with the reduced word
/// `(s_m ... s_1)(s_{m+1} ... s_2) ... (s_{m+n-1} ... s_n)`.
pub fn coxeter_cm(m: usize, n: usize) -> Result<(Permutation, Vec<usize>)> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("c^m needs m, n >= 1 (got {m}, {n})")));
    }
    let total = m + n;
    let images = (1..=total).map(|k| (k - 1 + m) % total + 1).collect();
    let perm = Permutation::new(images)?;
    let mut word = Vec::with_capacity(m * n);
    for block in 0..n {
        for i in (block + 1..=block + m).rev() {
            word.push(i);
        }
    }
    Ok((perm, word))
}

/// Componentwise comparison of two sorted index sets of equal size.
pub fn sorted_leq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Bruhat comparison `y <= w` by the tableau criterion.
pub fn bruhat_leq(y: &Permutation, w: &Permutation) -> Result<bool> {
    if y.size() != w.size() {
        return Err(Error::SizeMismatch(format!("S_{} vs S_{}", y.size(), w.size())));
    }
    Ok(bruhat_witness(y, w).is_none())
}

/// The first prefix length `k` at which the tableau criterion fails.
pub fn bruhat_witness(y: &Permutation, w: &Permutation) -> Option<usize> {
    let n = y.size();
    let mut ys: Vec<u8> = Vec::with_capacity(n);
    let mut ws: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n.saturating_sub(1) {
        insert_sorted(&mut ys, y.images[k]);
        insert_sorted(&mut ws, w.images[k]);
        if ys.iter().zip(&ws).any(|(a, b)| a > b) {
            return Some(k + 1);
        }
    }
    None
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let pos = v.partition_point(|&e| e < x);
    v.insert(pos, x);
}

/// Human-readable reason why `y` is not below `w`, if it is not.
pub fn explain_not_below(y: &Permutation, w: &Permutation) -> Option<String> {
    let k = bruhat_witness(y, w)?;
    let ys = y.prefix_set(k).ok()?;
    let ws = w.prefix_set(k).ok()?;
    Some(format!("at k={k}, sorted y([1,k]) = {ys:?} is not entrywise <= sorted w([1,k]) = {ws:?}"))
}

fn sort_interval(v: &mut [Permutation]) {
    v.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
}

/// Enumerates `{y : y <= w}`, ordered by length then one-line notation.
pub fn bruhat_interval(w: &Permutation) -> Vec<Permutation> {
    bruhat_interval_with(w, Jobs::Sequential)
}

pub fn bruhat_interval_with(w: &Permutation, jobs: Jobs) -> Vec<Permutation> {
    let n = w.size();
    let mut out = if n <= 7 {
        let all = Permutation::all(n);
        let keep = par_map(&all, jobs, |y| bruhat_witness(y, w).is_none());
        all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(y, _)| y).collect()
    } else {
        subword_closure(w)
    };
    sort_interval(&mut out);
    out
}

/// Lower interval by closing under deletion of letters from a reduced word.
fn subword_closure(w: &Permutation) -> Vec<Permutation> {
    let n = w.size();
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut stack = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(u) = stack.pop() {
        // every element covered by u is u*t for a transposition t with length drop 1
        for a in 1..=n {
            for b in a + 1..=n {
                if u.apply(a) > u.apply(b) {
                    let mut v = u.clone();
                    v.images.swap(a - 1, b - 1);
                    if v.length() + 1 == u.length() && seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Hasse diagram edges `(i, j)` of an interval listed in `bruhat_interval` order.
pub fn cover_relations(interval: &[Permutation]) -> Vec<(usize, usize)> {
    let index: HashMap<&Permutation, usize> = interval.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let len = interval.len();
    let leq: Vec<Vec<bool>> = interval
        .iter()
        .map(|a| interval.iter().map(|b| bruhat_witness(a, b).is_none()).collect())
        .collect();
    let mut covers = Vec::new();
    for i in 0..len {
        for j in 0..len {
            if i == j || !leq[i][j] {
                continue;
            }
            let between = (0..len).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !between {
                covers.push((i, j));
            }
        }
    }
    debug_assert!(covers.iter().all(|(i, j)| index[&interval[*i]] == *i && index[&interval[*j]] == *j));
    covers
}

/// Outcome of checking that an interval is graded by length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIntervalReport {
    pub size: usize,
    pub covers: usize,
    pub max_chain_length: usize,
    /// Covers `(lower, upper)` whose lengths do not differ by one.
    pub violations: Vec<(Permutation, Permutation)>,
}

impl GradedIntervalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every cover in `[e, w]` raises length by one, so all
/// maximal chains from `e` to `y` have length `l(y)`.
pub fn verify_graded_interval(w: &Permutation, max_size: usize) -> Result<GradedIntervalReport> {
    let interval = bruhat_interval(w);
    if interval.len() > max_size {
        return Err(Error::ResourceLimit(format!(
            "interval below {w} has {} elements (limit {max_size})",
            interval.len()
        )));
    }
    let covers = cover_relations(&interval);
    let violations = covers
        .iter()
        .filter(|(i, j)| interval[*j].length() != interval[*i].length() + 1)
        .map(|(i, j)| (interval[*i].clone(), interval[*j].clone()))
        .collect();
    // longest chain e -> w; the interval is sorted by length, hence topologically
    let mut best = vec![0usize; interval.len()];
    for j in 0..interval.len() {
        for &(i, jj) in &covers {
            if jj == j {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    let top = interval.iter().position(|p| p == w).unwrap_or(0);
    Ok(GradedIntervalReport {
        size: interval.len(),
        covers: covers.len(),
        max_chain_length: best[top],
        violations,
    })
}
