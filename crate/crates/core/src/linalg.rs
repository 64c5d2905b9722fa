//! Exact linear algebra over `Q(q)`: reduced row echelon forms, spans,
//! membership, null spaces and intersections of subspaces of `Q(q)^d`.

use crate::error::{Error, Result};
use crate::qcoeff::RatFunc;

pub type Vector = Vec<RatFunc>;

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `Q(q)^dim` stored by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut rows: Vec<Vector> = Vec::new();
        for v in vectors {
            if v.len() != dim {
                return Err(Error::SizeMismatch(format!("vector of length {} in Q(q)^{dim}", v.len())));
            }
            rows.push(v);
        }
        let pivots = rref(&mut rows);
        Ok(Subspace {
            dim,
            basis: rows,
            pivots,
        })
    }

    /// The span of the standard basis vectors with the given indices.
    pub fn coordinate(dim: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vecs = indices
            .into_iter()
            .map(|i| {
                if i >= dim {
                    return Err(Error::IndexOutOfRange(format!("coordinate {i} of Q(q)^{dim}")));
                }
                let mut v = vec![RatFunc::zero(); dim];
                v[i] = RatFunc::one();
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::span(dim, vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Reduces `v` against the echelon basis.
    pub fn residue(&self, v: &[RatFunc]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[RatFunc]) -> bool {
        v.len() == self.dim && self.residue(v).iter().all(RatFunc::is_zero)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Intersection by the Zassenhaus construction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch(format!("Q(q)^{} vs Q(q)^{}", self.dim, other.dim)));
        }
        let d = self.dim;
        let mut rows: Vec<Vector> = Vec::with_capacity(self.rank() + other.rank());
        for a in &self.basis {
            let mut r = a.clone();
            r.extend(a.iter().cloned());
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(RatFunc::zero(), d));
            rows.push(r);
        }
        rref(&mut rows);
        let meet = rows
            .into_iter()
            .filter(|r| r[..d].iter().all(RatFunc::is_zero))
            .map(|r| r[d..].to_vec());
        Subspace::span(d, meet)
    }
}

/// Basis of `{x : M x = 0}` for a matrix given by rows of equal width.
pub fn nullspace(matrix: &[Vector], width: usize) -> Result<Vec<Vector>> {
    if matrix.iter().any(|r| r.len() != width) {
        return Err(Error::SizeMismatch("ragged matrix".into()));
    }
    let mut rows = matrix.to_vec();
    let pivots = rref(&mut rows);
    let mut out = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![RatFunc::zero(); width];
        v[free] = RatFunc::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = row[free].neg();
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> RatFunc {
        RatFunc::q_power(e)
    }

    fn int(c: i64) -> RatFunc {
        RatFunc::from_int(c)
    }

    #[test]
    fn rank_and_membership() {
        let a = vec![int(1), q(1), int(0)];
        let b = vec![q(1), q(2), int(0)];
        let c = vec![int(0), int(1), q(-1)];
        let s = Subspace::span(3, [a.clone(), b, c.clone()]).unwrap();
        assert_eq!(s.rank(), 2);
        let combo: Vector = a.iter().zip(&c).map(|(x, y)| x.add(&y.mul(&q(3)))).collect();
        assert!(s.contains(&combo));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
    }

    #[test]
    fn intersection_of_planes() {
        let s = Subspace::coordinate(3, [0, 1]).unwrap();
        let t = Subspace::span(3, [vec![int(1), int(0), int(1)], vec![int(0), q(1), int(0)]]).unwrap();
        let m = s.intersect(&t).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.contains(&[int(0), int(1), int(0)]));
        assert_eq!(s.intersect(&Subspace::zero(3)).unwrap().rank(), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = vec![vec![int(1), q(1), q(2)], vec![q(-1), int(1), q(1)]];
        let ns = nullspace(&m, 3).unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot = row.iter().zip(v).fold(RatFunc::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
                assert!(dot.is_zero());
            }
        }
    }
}
