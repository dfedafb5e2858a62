//! `ϖ : U(p5) -> M3(U(p5))` and `ρ = M3(pr12) o ϖ o ℓ : U(f2) -> M3(U(f2)^{(x)2})`.

use num_traits::One;

use super::{Col, Mat3, Row};
use crate::braid_lie::{SmashElem, Tag};
use crate::error::Result;
use crate::ring::{Ring, Truncated};
use crate::series::{Alphabet, TensorSeries, TruncSeries, Word};

/// Rows of `ϖ(p)` read off from `e_{i5} p = Σ_j a_ij(p) e_{j5}`.
///
/// Exact only through degree `cap - 1`, since the product `e_{i5} p` loses the top degree.
pub fn varpi_by_decomposition(p: &SmashElem) -> Result<Mat3<SmashElem>> {
    let rows: Vec<[SmashElem; 3]> = (0..3u8)
        .map(|i| SmashElem::ideal(Tag::P5, p.cap(), i).times(p).decompose_right_e5())
        .collect::<Result<_>>()?;
    Ok(Mat3(rows.try_into().unwrap()))
}

/// `ϖ` on the generators `e23, e12, e15, e25, e35`, in that order.
pub fn varpi_generators(cap: usize) -> [Mat3<SmashElem>; 5] {
    let names = ["e23", "e12", "e15", "e25", "e35"];
    names.map(|n| {
        let g = SmashElem::generator(Tag::P5, cap + 1, n).unwrap();
        varpi_by_decomposition(&g).unwrap().map(|x| x.with_cap(cap))
    })
}

/// `ϖ(p)`, exact through the cap of `p`.
pub fn varpi(p: &SmashElem) -> Mat3<SmashElem> {
    let [q0, q1, i0, i1, i2] = varpi_generators(p.cap());
    let one = Mat3::identity(&SmashElem::one(Tag::P5, p.cap()));
    p.eval(&[q0, q1], &[i0, i1, i2], None, &one)
}

/// `row = (e1, -f1, 0)` and `col = (1, -1, 0)^T` with `e = e (x) 1`, `f = 1 (x) e`.
pub fn row_col(cap: usize) -> (Row<TensorSeries>, Col<TensorSeries>) {
    let one = TensorSeries::one(&Alphabet::e(), cap);
    let z = one.zero_like();
    (Row([TensorSeries::e(cap, 1), TensorSeries::f(cap, 1).negate(), z.clone()]), Col([one.clone(), one.negate(), z]))
}

/// `ρ` as an algebra morphism, with generator images precomputed.
#[derive(Clone, Debug)]
pub struct DeRhamRho {
    pub cap: usize,
    images: [Mat3<TensorSeries>; 2],
    row: Row<TensorSeries>,
    col: Col<TensorSeries>,
}

impl DeRhamRho {
    pub fn new(cap: usize) -> Self {
        let [q0, q1, ..] = varpi_generators(cap);
        let pr = |m: &Mat3<SmashElem>| m.map(|x| x.pr12().unwrap());
        let (row, col) = row_col(cap);
        DeRhamRho { cap, images: [pr(&q0), pr(&q1)], row, col }
    }

    pub fn generator_images(&self) -> &[Mat3<TensorSeries>; 2] {
        &self.images
    }

    pub fn row(&self) -> &Row<TensorSeries> {
        &self.row
    }

    pub fn col(&self) -> &Col<TensorSeries> {
        &self.col
    }

    pub fn rho(&self, f: &TruncSeries) -> Mat3<TensorSeries> {
        let one = Mat3::identity(&TensorSeries::one(&Alphabet::e(), self.cap));
        f.eval(&self.images, &one)
    }

    /// `ρ̃(f) = row ρ(f) col`.
    pub fn rho_tilde(&self, f: &TruncSeries) -> TensorSeries {
        self.row.sandwich(&self.rho(f), &self.col)
    }
}

pub fn rho(f: &TruncSeries) -> Mat3<TensorSeries> {
    DeRhamRho::new(f.cap()).rho(f)
}

pub fn rho_tilde(f: &TruncSeries) -> TensorSeries {
    DeRhamRho::new(f.cap()).rho_tilde(f)
}

/// `e1 e0^n + f1 f0^n - Σ_{i<n} e1 e0^i (x) f1 f0^{n-1-i}`.
pub fn lemma53_closed_form(n: usize, cap: usize) -> TensorSeries {
    let w = |k: usize| -> Word { std::iter::once(1).chain(std::iter::repeat_n(0, k)).collect() };
    let e = Alphabet::e();
    let mut t = TensorSeries::zero(&e, cap);
    let mut add = |u: Word, v: Word, c: crate::Q| {
        if u.len() + v.len() <= cap {
            t = t.plus(&TensorSeries::monomial(&e, cap, u, v, c));
        }
    };
    add(w(n), vec![], crate::Q::one());
    add(vec![], w(n), crate::Q::one());
    for i in 0..n {
        add(w(i), w(n - 1 - i), -crate::Q::one());
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;
    use crate::w_algebras::delta_star_lr;

    fn g(n: &str, cap: usize) -> SmashElem {
        SmashElem::generator(Tag::P5, cap, n).unwrap()
    }

    #[test]
    fn varpi_e12_matches_display() {
        let c = 4;
        let m = varpi(&g("e12", c));
        let z = SmashElem::zero(Tag::P5, c);
        let want = Mat3([
            [g("e12", c).plus(&g("e25", c)), g("e15", c).negate(), z.clone()],
            [g("e25", c).negate(), g("e12", c).plus(&g("e15", c)), z.clone()],
            [z.clone(), z.clone(), g("e12", c)],
        ]);
        assert_eq!(m, want);
        let want23 = Mat3([
            [g("e23", c), z.clone(), z.clone()],
            [z.clone(), g("e23", c).plus(&g("e35", c)), g("e25", c).negate()],
            [z.clone(), g("e35", c).negate(), g("e23", c).plus(&g("e25", c))],
        ]);
        assert_eq!(varpi(&g("e23", c)), want23);
        assert_eq!(varpi(&SmashElem::one(Tag::P5, c)), Mat3::identity(&SmashElem::one(Tag::P5, c)));
    }

    #[test]
    fn generator_eval_agrees_with_decomposition() {
        let c = 4;
        let p = g("e12", c).times(&g("e35", c)).plus(&g("e23", c).times(&g("e15", c)).times(&g("e25", c)).scale(&q(3)));
        let direct = varpi_by_decomposition(&p.with_cap(c + 1)).unwrap().map(|x| x.with_cap(c));
        assert_eq!(varpi(&p), direct);
    }

    #[test]
    fn rho_e1_is_col_row_and_rho_e0_matches_display() {
        let c = 4;
        let r = DeRhamRho::new(c);
        let e1 = TruncSeries::e1(c);
        assert_eq!(r.rho(&e1), r.col().outer(r.row()));
        let t = |i: u8| TensorSeries::e(c, i);
        let f = |i: u8| TensorSeries::f(c, i);
        let z = t(0).zero_like();
        let want = Mat3([
            [t(0), z.clone(), z.clone()],
            [z.clone(), t(1).negate().plus(&f(0)), t(1).negate()],
            [z.clone(), t(0).plus(&t(1)).minus(&f(0)), t(0).plus(&t(1))],
        ]);
        assert_eq!(r.rho(&TruncSeries::e0(c)), want);
    }

    #[test]
    fn rho_tilde_closed_form_and_harmonic_coproduct() {
        let c = 7;
        let r = DeRhamRho::new(c);
        let e0 = TruncSeries::e0(c);
        let mut p = e0.one_like();
        for n in 0..c {
            assert_eq!(r.rho_tilde(&p), lemma53_closed_form(n, c), "n = {n}");
            let w = p.times(&TruncSeries::e1(c));
            assert_eq!(r.rho_tilde(&p), delta_star_lr(&w).unwrap(), "n = {n}");
            p = p.times(&e0);
        }
    }
}
