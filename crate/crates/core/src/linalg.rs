//! Exact linear algebra over `Q`: a sparse semi-echelon basis and a dense affine solver.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ring::Q;

pub type SparseVec = BTreeMap<usize, Q>;

/// Rows kept with distinct leading columns, each normalized to a leading 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    /// Reduce `v` modulo the span; the result has no pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let c = v.remove(&p).unwrap();
            for (k, a) in self.rows[&p].iter().skip(1) {
                let e = v.entry(*k).or_insert_with(Q::zero);
                *e -= &c * a;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            cursor = p + 1;
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already dependent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else { return false };
        let inv = lead.recip();
        let row: SparseVec = r.iter().map(|(k, a)| (*k, a * &inv)).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Result of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub x: Vec<Q>,
    /// Columns left undetermined by the system, with the value chosen for each.
    pub free: Vec<usize>,
}

/// Solves `A x = b` where `A` is given row-wise; free columns are set by `free_value`.
/// Returns `None` when the system is inconsistent.
pub fn solve_affine<F: Fn(usize) -> Q>(a: &[Vec<Q>], b: &[Q], ncols: usize, free_value: F) -> Option<AffineSolution> {
    // augmented rows, column `ncols` carries b
    let mut rows: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .filter(|(r, bi)| !bi.is_zero() || r.iter().any(|x| !x.is_zero()))
        .map(|(r, bi)| {
            let mut v = r.clone();
            v.resize(ncols, Q::zero());
            v.push(bi.clone());
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(p) = (r0..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r0, p);
        let inv = rows[r0][c].recip();
        for x in rows[r0].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r0].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r0 && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r0 += 1;
        if r0 == rows.len() {
            break;
        }
    }
    if rows[r0..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut x = vec![Q::zero(); ncols];
    for &c in &free {
        x[c] = free_value(c);
    }
    for (i, &c) in pivots.iter().enumerate() {
        let mut v = rows[i][ncols].clone();
        for &f in &free {
            v -= &rows[i][f] * &x[f];
        }
        x[c] = v;
    }
    debug_assert!(pivots.iter().enumerate().all(|(i, &c)| rows[i][c].is_one()));
    Some(AffineSolution { x, free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn sv(e: &[(usize, i64)]) -> SparseVec {
        e.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&sv(&[(0, 1), (1, 1)])));
        assert!(e.insert(&sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&sv(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&sv(&[(0, 2), (1, 4), (2, 2)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn affine_with_free_column() {
        // x0 + x1 = 3, 2x0 + 2x1 = 6
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        let s = solve_affine(&a, &[q(3), q(6)], 2, |_| q(5)).unwrap();
        assert_eq!(s.free, vec![1]);
        assert_eq!(s.x, vec![q(-2), q(5)]);
        assert!(solve_affine(&a, &[q(3), q(7)], 2, |_| q(0)).is_none());
    }

    #[test]
    fn empty_system() {
        let s = solve_affine(&[], &[], 2, |c| q(c as i64)).unwrap();
        assert_eq!(s.x, vec![q(0), q(1)]);
    }
}
