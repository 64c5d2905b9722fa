//! Type-A weight and root lattice arithmetic.
//!
//! Weights are stored in the fundamental-weight basis and roots in the
//! simple-root basis. In type A every `d_i = 1`, so `<omega_i, alpha_j>` is
//! the Kronecker delta and the pairing of a weight with a root is the plain
//! dot product of coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootElt(pub Vec<i64>);

/// Type-A Cartan entry `c_{ij}` (1-indexed).
pub fn cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// Fundamental weight `omega_i`.
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange(format!("omega_{i} in rank {rank}")));
        }
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Ok(Weight(v))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize) -> Self {
        let li = self.0[i - 1];
        let mut out = self.0.clone();
        for (j, c) in out.iter_mut().enumerate() {
            *c -= li * cartan(i, j + 1);
        }
        Weight(out)
    }
}

impl RootElt {
    pub fn zero(rank: usize) -> Self {
        RootElt(vec![0; rank])
    }

    /// Simple root `alpha_i`.
    pub fn simple(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange(format!("alpha_{i} in rank {rank}")));
        }
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Ok(RootElt(v))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Image in the weight lattice: `alpha_j = sum_i c_{ij} omega_i`.
    pub fn to_weight(&self) -> Weight {
        let r = self.rank();
        Weight(
            (1..=r)
                .map(|i| (1..=r).map(|j| cartan(i, j) * self.0[j - 1]).sum())
                .collect(),
        )
    }

    pub fn reflect(&self, i: usize) -> Self {
        let r = self.rank();
        let pair: i64 = (1..=r).map(|j| self.0[j - 1] * cartan(j, i)).sum();
        let mut out = self.0.clone();
        out[i - 1] -= pair;
        RootElt(out)
    }
}

macro_rules! lattice_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                assert_eq!(self.0.len(), o.0.len(), "rank mismatch");
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                assert_eq!(self.0.len(), o.0.len(), "rank mismatch");
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("[")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    };
}

lattice_ops!(Weight);
lattice_ops!(RootElt);

/// `<lambda, gamma>`.
pub fn pairing(lambda: &Weight, gamma: &RootElt) -> Result<i64> {
    if lambda.rank() != gamma.rank() {
        return Err(Error::RankMismatch {
            left: lambda.rank(),
            right: gamma.rank(),
        });
    }
    Ok(lambda.0.iter().zip(&gamma.0).map(|(a, b)| a * b).sum())
}

/// `<gamma, delta>` for two roots.
pub fn root_pairing(gamma: &RootElt, delta: &RootElt) -> Result<i64> {
    pairing(&gamma.to_weight(), delta)
}

fn check_rank(w: &Permutation, rank: usize) -> Result<()> {
    if w.size() != rank + 1 {
        return Err(Error::RankMismatch {
            left: w.size() - 1,
            right: rank,
        });
    }
    Ok(())
}

/// `w(lambda)` computed along the reduced word of `w`, rightmost letter first.
pub fn weyl_action(w: &Permutation, lambda: &Weight) -> Result<Weight> {
    weyl_action_word(&w.reduced_word(), lambda, w.size())
}

/// Action of the product of a word of simple reflections, rightmost first.
pub fn weyl_action_word(word: &[usize], lambda: &Weight, n: usize) -> Result<Weight> {
    if lambda.rank() + 1 != n {
        return Err(Error::RankMismatch {
            left: n - 1,
            right: lambda.rank(),
        });
    }
    let mut out = lambda.clone();
    for &i in word.iter().rev() {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s_{i} in S_{n}")));
        }
        out = out.reflect(i);
    }
    Ok(out)
}

/// `w(gamma)` for a root-lattice element.
pub fn weyl_action_root(w: &Permutation, gamma: &RootElt) -> Result<RootElt> {
    check_rank(w, gamma.rank())?;
    let mut out = gamma.clone();
    for &i in w.reduced_word().iter().rev() {
        out = out.reflect(i);
    }
    Ok(out)
}

/// Weight of the dual Demazure vector `eta_J`:
/// `-omega_k + sum_{i=1}^{k} (alpha_i + ... + alpha_{j_i - 1})`.
pub fn wt_eta(set: &[usize], m: usize, n: usize) -> Result<Weight> {
    let total = m + n;
    let rank = total - 1;
    let k = set.len();
    if k == 0 {
        return Err(Error::Domain("wt_eta of the empty set".into()));
    }
    if k > rank {
        return Err(Error::Domain(format!("|J| = {k} exceeds rank {rank}")));
    }
    if set.windows(2).any(|p| p[0] >= p[1]) || set[0] == 0 || set[k - 1] > total {
        return Err(Error::Domain(format!("{set:?} is not a sorted subset of [1,{total}]")));
    }
    let mut roots = RootElt::zero(rank);
    for (idx, &j) in set.iter().enumerate() {
        let i = idx + 1;
        for t in i..j {
            roots.0[t - 1] += 1;
        }
    }
    Ok(&roots.to_weight() - &Weight::fundamental(rank, k)?)
}

/// Degree of `x_{ij}` in the root lattice:
/// `-(alpha_{m-i+1} + ... + alpha_{m+j-1})`.
pub fn deg_x(i: usize, j: usize, m: usize, n: usize) -> Result<RootElt> {
    if i == 0 || i > m || j == 0 || j > n {
        return Err(Error::IndexOutOfRange(format!("x_{{{i}{j}}} in {m}x{n}")));
    }
    let mut out = RootElt::zero(m + n - 1);
    for t in (m - i + 1)..=(m + j - 1) {
        out.0[t - 1] = -1;
    }
    Ok(out)
}

/// Exponent of `q` by which `mu` in `P` rescales a degree-`gamma` element.
pub fn pact_exponent(mu: &Weight, gamma: &RootElt) -> Result<i64> {
    pairing(mu, gamma)
}
