//! `a_(mu,phi)`: `QF2 -> U(f2)` and its five-strand extension `a5_(mu,phi)`: `QP5* -> U(p5)`.

use crate::braid_lie::{SmashElem, Tag};
use crate::error::{AlgebraError, Result};
use crate::freegrp::{GroupAlgF, GroupWord};
use crate::ring::{exp_t, inv_t, qf, Ring, Truncated, Q};
use crate::series::TruncSeries;
use crate::sphere_braid::{P5Alg, P5Elem};
use crate::w_algebras::{in_wl_dr, in_wr_dr, is_wlb};

/// `X0 -> phi e^{mu e0} phi^{-1}`, `X1 -> e^{mu e1}`.
#[derive(Clone, Debug)]
pub struct AMap {
    pub mu: Q,
    images: [TruncSeries; 2],
    inverses: [TruncSeries; 2],
}

impl AMap {
    pub fn new(mu: &Q, phi: &TruncSeries) -> Result<Self> {
        let cap = phi.cap();
        let phi_inv = phi.inv()?;
        let (e0, e1) = (TruncSeries::e0(cap), TruncSeries::e1(cap));
        let x0 = |s: &Q| phi.times(&e0.scale(s).exp().unwrap()).times(&phi_inv);
        let neg = -mu;
        Ok(AMap {
            mu: mu.clone(),
            images: [x0(mu), e1.scale(mu).exp()?],
            inverses: [x0(&neg), e1.scale(&neg).exp()?],
        })
    }

    pub fn generator_images(&self) -> &[TruncSeries; 2] {
        &self.images
    }

    pub fn word(&self, w: &GroupWord) -> TruncSeries {
        self.apply(&GroupAlgF::word(w))
    }

    pub fn apply(&self, a: &GroupAlgF) -> TruncSeries {
        a.eval_with_inverses(&self.images, &self.inverses)
    }

    /// Restriction `W_l^B -> W_l^DR`.
    pub fn apply_l(&self, a: &GroupAlgF) -> Result<TruncSeries> {
        if !is_wlb(a) {
            return Err(AlgebraError::NotInSubalgebra("W_l^B"));
        }
        let out = self.apply(a);
        if !in_wl_dr(&out) {
            return Err(AlgebraError::Invariant("image left W_l^DR".into()));
        }
        Ok(out)
    }

    /// Restriction `W_r^B -> W_r^DR`; `W_r^B` is the image of `W_l^B` under `g -> g^{-1}`.
    pub fn apply_r(&self, a: &GroupAlgF) -> Result<TruncSeries> {
        if !is_wlb(&a.inverse_elements()) {
            return Err(AlgebraError::NotInSubalgebra("W_r^B"));
        }
        let out = self.apply(a);
        if !in_wr_dr(&out) {
            return Err(AlgebraError::Invariant("image left W_r^DR".into()));
        }
        Ok(out)
    }
}

/// `a5(l(f) w) = l(a(f)) a5(w)`, with `a5` on `x15, x25, x35` given by twisted exponentials.
#[derive(Clone, Debug)]
pub struct A5Map {
    pub a: AMap,
    quot: [SmashElem; 2],
    quot_inv: [SmashElem; 2],
    ideal: [SmashElem; 3],
    ideal_inv: [SmashElem; 3],
}

impl A5Map {
    pub fn new(mu: &Q, phi: &TruncSeries) -> Result<Self> {
        let a = AMap::new(mu, phi)?;
        let cap = phi.cap();
        let g = |n: &str| SmashElem::generator(Tag::P5, cap, n).unwrap();
        let one = SmashElem::one(Tag::P5, cap);
        let ph = |x: &SmashElem, y: &SmashElem| phi.eval(&[x.clone(), y.clone()], &one);
        let ex = |x: &SmashElem, s: &Q| exp_t(&x.scale(s)).unwrap();
        let (e15, e25, e35, e45, e125, e345) = (g("e15"), g("e25"), g("e35"), g("e45"), g("e125"), g("e345"));
        let half = mu * qf(1, 2);
        let p45 = inv_t(&ph(&e45, &e125))?;
        let conj = [
            p45.times(&inv_t(&ph(&e345, &e15))?),
            p45.times(&ex(&e345, &half)).times(&inv_t(&ph(&e345, &e25))?),
            ex(&e45, &half).times(&ph(&e35, &e45)),
        ];
        let gens = [e15, e25, e35];
        let mut ideal = Vec::new();
        let mut ideal_inv = Vec::new();
        for (c, e) in conj.iter().zip(&gens) {
            let ci = inv_t(c)?;
            ideal.push(c.times(&ex(e, mu)).times(&ci));
            ideal_inv.push(c.times(&ex(e, &-mu)).times(&ci));
        }
        let lift = |s: &TruncSeries| SmashElem::ell(s);
        let quot = [lift(&a.images[0]), lift(&a.images[1])];
        let quot_inv = [lift(&a.inverses[0]), lift(&a.inverses[1])];
        Ok(A5Map {
            a,
            quot,
            quot_inv,
            ideal: ideal.try_into().unwrap(),
            ideal_inv: ideal_inv.try_into().unwrap(),
        })
    }

    /// Images of `x15, x25, x35`.
    pub fn ideal_images(&self) -> &[SmashElem; 3] {
        &self.ideal
    }

    pub fn element(&self, g: &P5Elem) -> SmashElem {
        let f = GroupAlgF::word(&g.f).eval_with_inverses(&self.quot, &self.quot_inv);
        let w = GroupAlgF::word(&g.w).eval_with_inverses(&self.ideal, &self.ideal_inv);
        f.times(&w)
    }

    pub fn apply(&self, a: &P5Alg) -> SmashElem {
        let zero = self.quot[0].zero_like();
        a.map_linear(&zero, |g| self.element(g))
    }
}

/// `c_i` with `pr_i o a5 = Ad(c_i) o a o pr_i` for `i = 1, 2, 5`.
pub fn pr_conjugator(i: usize, mu: &Q, phi: &TruncSeries) -> Result<TruncSeries> {
    let cap = phi.cap();
    let (e0, e1, ei) = (TruncSeries::e0(cap), TruncSeries::e1(cap), TruncSeries::e_inf(cap));
    let one = TruncSeries::e_one(cap);
    match i {
        1 => phi.eval(&[e0, e1], &one).inv(),
        2 => Ok(phi.eval(&[ei, e1.clone()], &one).inv()?.times(&e1.scale(&(mu * qf(1, 2))).exp()?)),
        5 => Ok(one),
        _ => Err(AlgebraError::Precondition(format!("no projection pr{i}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associator::Associator;
    use crate::freegrp::{Gens, Group};
    use crate::ring::q;
    use crate::sphere_braid::{p5_alg, pr_underline, TABLE_COLUMNS};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup(cap: usize) -> A5Map {
        let a = Associator::solve(&q(1), cap).unwrap();
        A5Map::new(&a.mu, &a.phi).unwrap()
    }

    #[test]
    fn a_restricts_to_w_algebras() {
        let a = setup(4).a;
        let l = GroupAlgF::parse(Gens::F2, "X0.X1 - X0").unwrap();
        assert!(a.apply_l(&l).is_ok());
        assert!(a.apply_l(&GroupAlgF::parse(Gens::F2, "X1.X0 - X1").unwrap()).is_err());
        let r = GroupAlgF::parse(Gens::F2, "X1.X0 - X0").unwrap();
        assert!(a.apply_r(&r).is_ok());
    }

    #[test]
    fn a5_is_multiplicative_and_extends_ell() {
        let m = setup(4);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..6 {
            let g = P5Elem::random(3, &mut rng);
            let h = P5Elem::random(3, &mut rng);
            assert_eq!(m.element(&g.mul(&h)), m.element(&g).times(&m.element(&h)));
        }
        let f = GroupWord::parse(Gens::F2, "X0^2.X1^-1").unwrap();
        assert_eq!(m.element(&P5Elem::from_f2(&f)), SmashElem::ell(&m.a.word(&f)));
    }

    #[test]
    fn ideal_images_are_ideal_units() {
        let m = setup(4);
        for x in m.ideal_images() {
            let y = x.minus(&x.one_like());
            assert!(y.f3_component().is_some());
        }
    }

    #[test]
    fn projections_agree_up_to_conjugation() {
        let a = Associator::solve(&q(1), 4).unwrap();
        let m = A5Map::new(&a.mu, &a.phi).unwrap();
        for i in [1, 2, 5] {
            let c = pr_conjugator(i, &a.mu, &a.phi).unwrap();
            let ci = c.inv().unwrap();
            for (x, y) in TABLE_COLUMNS {
                let g = p5_alg(&P5Elem::xij(x, y).unwrap());
                let rhs = c.times(&m.a.apply(&pr_underline(i, &g).unwrap())).times(&ci);
                assert_eq!(m.apply(&g).pr(i).unwrap(), rhs, "pr{i} on x{x}{y}");
            }
        }
    }
}
