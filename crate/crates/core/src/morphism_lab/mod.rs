//! Matrix-valued morphisms `ϖ`, `ρ` (de Rham) and `ϖ̲`, `ρ̲` (Betti), and their comparison through `a5`.

pub mod betti;
pub mod compare;
pub mod derham;
pub mod suites;

use std::fmt;

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::ring::{Ring, Truncated, Q};

pub use betti::{lemma65_closed_form, rho_bar, rho_bar_tilde, varpi_bar, varpi_bar_elem, BettiRho};
pub use compare::{compute_kappa_u_v, compute_p, expm1_over, Comparison, LemmaCheck};
pub use suites::{main_theorem_check, SuiteFailure, SuiteReport};
pub use derham::{lemma53_closed_form, rho, rho_tilde, varpi, varpi_by_decomposition, DeRhamRho};

/// A 3x3 matrix over a ring.
#[derive(Clone, PartialEq)]
pub struct Mat3<R>(pub [[R; 3]; 3]);

impl<R: fmt::Display> fmt::Display for Mat3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            writeln!(f, "[ {} | {} | {} ]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Mat3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<R: Ring> Mat3<R> {
    pub fn from_fn<F: FnMut(usize, usize) -> R>(mut f: F) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn diag(d: &R) -> Self {
        let z = d.zero_like();
        Self::from_fn(|i, j| if i == j { d.clone() } else { z.clone() })
    }

    pub fn identity(one: &R) -> Self {
        Self::diag(one)
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.0[i][j]
    }

    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, mut f: F) -> Mat3<S> {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(&self.0[i][j]))))
    }

    /// `s . M`, entries multiplied on the left.
    pub fn left_scalar(&self, s: &R) -> Self {
        self.map(|x| s.times(x))
    }

    pub fn right_scalar(&self, s: &R) -> Self {
        self.map(|x| x.times(s))
    }

    /// `M X M^{-1}` given `M^{-1}`.
    pub fn conj(&self, inv: &Self, x: &Self) -> Self {
        self.times(x).times(inv)
    }
}

impl<R: Truncated> Mat3<R> {
    /// Inverse when the constant-term matrix is invertible over `Q`; the rest is nilpotent modulo the cap.
    pub fn inv(&self) -> Result<Self> {
        let c = constant_inverse(&self.map_q(|x| x.constant()))?;
        let one = self.0[0][0].one_like();
        let cinv = Mat3::from_fn(|i, j| one.scale(&c[i][j]));
        // M = C (1 + N) with N = C^{-1} M - 1 of positive valuation
        let n = cinv.times(self).minus(&Mat3::identity(&one));
        let mut term = Mat3::identity(&one);
        let mut acc = term.clone();
        for _ in 0..self.0[0][0].cap() {
            term = term.times(&n).negate();
            acc = acc.plus(&term);
        }
        Ok(acc.times(&cinv))
    }

    fn map_q<F: FnMut(&R) -> Q>(&self, mut f: F) -> [[Q; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| f(&self.0[i][j])))
    }
}

fn constant_inverse(m: &[[Q; 3]; 3]) -> Result<[[Q; 3]; 3]> {
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    let det = (0..3).fold(Q::zero(), |a, j| a + &m[0][j] * cof(0, j));
    if det.is_zero() {
        return Err(AlgebraError::NotInvertible("matrix with singular constant term".into()));
    }
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i) / &det)))
}

impl<R: Ring> Ring for Mat3<R> {
    fn zero_like(&self) -> Self {
        let z = self.0[0][0].zero_like();
        Self::from_fn(|_, _| z.clone())
    }

    fn one_like(&self) -> Self {
        Self::identity(&self.0[0][0].one_like())
    }

    fn plus(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].plus(&o.0[i][j]))
    }

    fn times(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = self.0[i][0].times(&o.0[0][j]);
            for k in 1..3 {
                if !self.0[i][k].is_zero() && !o.0[k][j].is_zero() {
                    acc = acc.plus(&self.0[i][k].times(&o.0[k][j]));
                }
            }
            acc
        })
    }

    fn scale(&self, c: &Q) -> Self {
        self.map(|x| x.scale(c))
    }

    fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }
}

/// A 1x3 row vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Row<R>(pub [R; 3]);

/// A 3x1 column vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Col<R>(pub [R; 3]);

impl<R: Ring> Row<R> {
    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, f: F) -> Row<S> {
        Row(self.0.each_ref().map(f))
    }

    pub fn times_mat(&self, m: &Mat3<R>) -> Row<R> {
        Row(std::array::from_fn(|j| {
            (0..3).fold(self.0[0].zero_like(), |a, k| a.plus(&self.0[k].times(&m.0[k][j])))
        }))
    }

    pub fn dot(&self, c: &Col<R>) -> R {
        (0..3).fold(self.0[0].zero_like(), |a, k| a.plus(&self.0[k].times(&c.0[k])))
    }

    /// `row . M . col`.
    pub fn sandwich(&self, m: &Mat3<R>, c: &Col<R>) -> R {
        self.times_mat(m).dot(c)
    }
}

impl<R: Ring> Col<R> {
    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, f: F) -> Col<S> {
        Col(self.0.each_ref().map(f))
    }

    pub fn outer(&self, r: &Row<R>) -> Mat3<R> {
        Mat3::from_fn(|i, j| self.0[i].times(&r.0[j]))
    }

    pub fn left_mat(m: &Mat3<R>, c: &Col<R>) -> Col<R> {
        Col(std::array::from_fn(|i| (0..3).fold(c.0[0].zero_like(), |a, k| a.plus(&m.0[i][k].times(&c.0[k])))))
    }
}

/// Helper for constant matrices in tests and dumps.
pub fn scalar_entry<R: Ring>(one: &R, n: i64) -> R {
    if n == 1 {
        one.clone()
    } else {
        one.scale(&Q::from_integer(n.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;
    use crate::series::TruncSeries;

    #[test]
    fn unipotent_inverse() {
        let e0 = TruncSeries::e0(4);
        let one = e0.one_like();
        let z = e0.zero_like();
        let m = Mat3([[one.scale(&q(2)), e0.clone(), z.clone()], [z.clone(), one.clone(), e0.clone()], [e0.clone(), z.clone(), one.clone()]]);
        let inv = m.inv().unwrap();
        assert_eq!(m.times(&inv), Mat3::identity(&one));
        assert_eq!(inv.times(&m), Mat3::identity(&one));
        assert!(Mat3::diag(&z).inv().is_err());
    }
}
