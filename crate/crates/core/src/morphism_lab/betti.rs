//! `ϖ̲ : kP5* -> M3(kP5*)` and `ρ̲ = M3(pr̲12) o ϖ̲ o ℓ̲ : kF2 -> M3(kF2^{(x)2})`.

use super::{Col, Mat3, Row};
use crate::freegrp::{Gens, Group, GroupAlgF, GroupWord, Pair, TensorF2};
use crate::ring::Ring;
use crate::sphere_braid::{ell_underline, pr12_underline, theta_conj_word, P5Alg, P5Elem};
use crate::w_algebras::extended_range;

fn f3_alg(a: &GroupAlgF) -> P5Alg {
    a.map_basis(&P5Elem::identity(), P5Elem::from_f3)
}

/// `ϖ̲(g)` for a group element `g = ℓ(f) w`, from `g^{-1} x_{i5} g = W x_{i5} W^{-1}`.
pub fn varpi_bar_elem(g: &P5Elem) -> Mat3<P5Alg> {
    let id = P5Elem::identity();
    let zero = P5Alg::zero(&id);
    let mut m = Mat3::diag(&zero);
    for i in 0..3 {
        let w = g.w.inv().mul(&theta_conj_word(&g.f, i));
        let gw = g.mul(&P5Elem::from_f3(&w));
        let x = P5Elem::from_f3(&GroupWord::gen(Gens::F3, i));
        // gW (x_i5 - 1)
        let lead = P5Alg::from_group(&gw.mul(&x)).minus(&P5Alg::from_group(&gw));
        let fox = GroupAlgF::fox_word(&w.inv());
        for (j, fj) in fox.iter().enumerate() {
            m.0[i][j] = lead.times(&f3_alg(fj));
        }
        m.0[i][i] = m.0[i][i].plus(&P5Alg::from_group(&gw));
    }
    m
}

pub fn varpi_bar(a: &P5Alg) -> Mat3<P5Alg> {
    let zero = Mat3::diag(&P5Alg::zero(&P5Elem::identity()));
    a.map_linear(&zero, varpi_bar_elem)
}

fn t_one() -> TensorF2 {
    let id = GroupWord::identity(Gens::F2);
    TensorF2::one(&Pair(id.clone(), id))
}

fn x1_pair(left: bool, k: i64) -> TensorF2 {
    let id = GroupWord::identity(Gens::F2);
    let x = GroupWord::gen_pow(Gens::F2, 1, k);
    TensorF2::from_group(&if left { Pair(x, id) } else { Pair(id, x) })
}

/// `row̲ = (X1 - 1, 1 - Y1, 0)`, `col̲ = (Y1, -1, 0)^T` with `X1 = X1 (x) 1`, `Y1 = 1 (x) X1`.
pub fn row_col_bar() -> (Row<TensorF2>, Col<TensorF2>) {
    let one = t_one();
    let z = one.zero_like();
    let (x1, y1) = (x1_pair(true, 1), x1_pair(false, 1));
    (Row([x1.minus(&one), one.minus(&y1), z.clone()]), Col([y1, one.negate(), z]))
}

/// `ρ̲` as an algebra morphism, with images of `X0^{±1}, X1^{±1}` precomputed.
#[derive(Clone, Debug)]
pub struct BettiRho {
    images: [Mat3<TensorF2>; 2],
    inverses: [Mat3<TensorF2>; 2],
    row: Row<TensorF2>,
    col: Col<TensorF2>,
}

impl Default for BettiRho {
    fn default() -> Self {
        Self::new()
    }
}

impl BettiRho {
    pub fn new() -> Self {
        let at = |i: usize, k: i64| {
            let g = P5Elem::from_f2(&GroupWord::gen_pow(Gens::F2, i, k));
            varpi_bar_elem(&g).map(pr12_underline)
        };
        let (row, col) = row_col_bar();
        BettiRho { images: [at(0, 1), at(1, 1)], inverses: [at(0, -1), at(1, -1)], row, col }
    }

    pub fn row(&self) -> &Row<TensorF2> {
        &self.row
    }

    pub fn col(&self) -> &Col<TensorF2> {
        &self.col
    }

    pub fn rho(&self, f: &GroupAlgF) -> Mat3<TensorF2> {
        f.eval_with_inverses(&self.images, &self.inverses)
    }

    pub fn rho_tilde(&self, f: &GroupAlgF) -> TensorF2 {
        self.row.sandwich(&self.rho(f), &self.col)
    }
}

/// `ρ̲` straight from its definition, without the generator cache.
pub fn rho_bar(f: &GroupAlgF) -> Mat3<TensorF2> {
    varpi_bar(&ell_underline(f)).map(pr12_underline)
}

pub fn rho_bar_tilde(f: &GroupAlgF) -> TensorF2 {
    let (row, col) = row_col_bar();
    row.sandwich(&rho_bar(f), &col)
}

/// `(X1-1)X0^k (x) 1 + 1 (x) (1-X1^{-1})X0^k X1 - Σ_{i=1}^{k-1} (X1-1)X0^i (x) (1-X1^{-1})X0^{k-i}X1`,
/// the sum taken with the signed convention for reversed ranges.
pub fn lemma65_closed_form(k: i32) -> TensorF2 {
    let id = GroupWord::identity(Gens::F2);
    let x0 = |n: i32| GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 0, n as i64));
    let x1 = |n: i64| GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 1, n));
    let one = GroupAlgF::one(&id);
    let left = |n: i32| x1(1).minus(&one).times(&x0(n));
    let right = |n: i32| one.minus(&x1(-1)).times(&x0(n)).times(&x1(1));
    let mut t = TensorF2::tensor(&left(k), &one).plus(&TensorF2::tensor(&one, &right(k)));
    for (i, s) in extended_range(1, k - 1) {
        t = t.minus(&TensorF2::tensor(&left(i), &right(k - i)).scale(&s));
    }
    t
}

/// `ρ̲̃(X0^k X1^{-1}) = ρ̲̃(X0^k) (X1^{-1} (x) X1^{-1})`.
pub fn lemma65_closed_form_x1inv(k: i32) -> TensorF2 {
    let x = GroupWord::gen_pow(Gens::F2, 1, -1);
    lemma65_closed_form(k).times(&TensorF2::from_group(&Pair(x.clone(), x)))
}

/// `Y1^{-1} t Y1`.
pub fn ad_y1_inv(t: &TensorF2) -> TensorF2 {
    x1_pair(false, -1).times(t).times(&x1_pair(false, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::w_algebras::WlB;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p5(s: &str) -> P5Alg {
        P5Alg::from_group(&P5Elem::parse(s).unwrap())
    }

    #[test]
    fn varpi_bar_x12_matches_display() {
        let m = varpi_bar_elem(&P5Elem::xij(1, 2).unwrap());
        let pre = p5("[X1 | x15.x25]");
        let a = |s: &str| p5(&format!("[1 | {s}]"));
        let one = a("1");
        let z = one.zero_like();
        let want = Mat3([
            [pre.times(&one.minus(&a("x15.x25^-1.x15^-1")).plus(&a("x25^-1.x15^-1"))), pre.times(&one.minus(&a("x15"))).times(&a("x25^-1")), z.clone()],
            [pre.times(&a("x25^-1").minus(&one)).times(&a("x15^-1")), p5("[X1 | x15]"), z.clone()],
            [z.clone(), z.clone(), p5("[X1 | 1]")],
        ]);
        assert_eq!(m, want);
        assert_eq!(varpi_bar_elem(&P5Elem::identity()), Mat3::identity(&p5("[1 | 1]")));
    }

    #[test]
    fn varpi_bar_defining_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let g = P5Elem::random(4, &mut rng);
            let m = varpi_bar_elem(&g);
            let gp = P5Alg::from_group(&g);
            for i in 0..3 {
                let xm1 = |k: usize| P5Alg::minus_one(&P5Elem::from_f3(&GroupWord::gen(Gens::F3, k)));
                let lhs = xm1(i).times(&gp);
                let rhs = (0..3).fold(gp.zero_like(), |acc, j| acc.plus(&m.0[i][j].times(&xm1(j))));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rho_bar_x1m1_is_col_row() {
        let r = BettiRho::new();
        let f = GroupAlgF::parse(Gens::F2, "X1 - 1").unwrap();
        assert_eq!(r.rho(&f), r.col().outer(r.row()));
        assert_eq!(rho_bar(&f), r.rho(&f));
    }

    #[test]
    fn closed_forms_and_diagram() {
        let r = BettiRho::new();
        for k in -5..=5 {
            let x0k = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 0, k as i64));
            assert_eq!(r.rho_tilde(&x0k), lemma65_closed_form(k), "k = {k}");
            let x1i = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 1, -1));
            let f = x0k.times(&x1i);
            assert_eq!(r.rho_tilde(&f), lemma65_closed_form_x1inv(k), "k = {k}");
            for f in [x0k.clone(), f] {
                let w = f.times(&GroupAlgF::parse(Gens::F2, "X1 - 1").unwrap());
                assert_eq!(r.rho_tilde(&f), ad_y1_inv(&WlB::new(w).unwrap().delta_sharp_lr()), "k = {k}");
            }
        }
    }
}
