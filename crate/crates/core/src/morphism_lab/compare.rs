//! The comparison data `P`, `κ`, `u`, `v` attached to `(μ, Φ)` and the identities relating
//! the Betti and de Rham matrix morphisms through `a` and `a5`.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use super::betti::{row_col_bar, BettiRho};
use super::derham::{varpi, DeRhamRho};
use super::{Col, Mat3, Row};
use crate::associator::{A5Map, AMap};
use crate::braid_lie::SmashElem;
use crate::error::{AlgebraError, Result};
use crate::freegrp::{GroupAlgF, TensorF2};
use crate::racinet::gamma_of;
use crate::ring::{factorial, inv_t, Ring, Truncated, Q};
use crate::series::{Alphabet, TensorSeries, TruncSeries, UniSeries};
use crate::sphere_braid::{pr12_underline, P5Alg};
use crate::w_algebras::{delta_star_lr, XiLetter, XiPoly};

/// One side-by-side identity; `ok` iff `lhs == rhs` exactly.
#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub name: String,
    pub ok: bool,
    pub lhs: String,
    pub rhs: String,
}

impl LemmaCheck {
    pub fn compare<T: PartialEq + fmt::Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        let ok = lhs == rhs;
        let (l, r) = if ok { (String::new(), String::new()) } else { (lhs.to_string(), rhs.to_string()) };
        LemmaCheck { name: name.into(), ok, lhs: l, rhs: r }
    }
}

impl<R: fmt::Display> fmt::Display for Row<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "( {} , {} , {} )", self.0[0], self.0[1], self.0[2])
    }
}

impl<R: fmt::Display> fmt::Display for Col<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "( {} , {} , {} )^T", self.0[0], self.0[1], self.0[2])
    }
}

/// `(e^{μx} - 1) / x` as a univariate series.
pub fn expm1_over(mu: &Q, cap: usize) -> UniSeries {
    let cs: Vec<Q> = (0..=cap).map(|n| mu.pow(n as i32 + 1) / factorial(n + 1)).collect();
    UniSeries::from_coeffs(cap, &cs)
}

/// Everything needed to compare both sides for a fixed `(μ, Φ)` at the cap of `Φ`.
pub struct Comparison {
    pub mu: Q,
    pub cap: usize,
    pub phi: TruncSeries,
    pub a5: A5Map,
    p: Mat3<SmashElem>,
    p_inv: Mat3<SmashElem>,
    pbar: Mat3<TensorSeries>,
    kappa: TensorSeries,
    u: TensorSeries,
    v: TensorSeries,
    expm1: TensorSeries,
    gamma_ratio: TensorSeries,
    legs: [Vec<TensorSeries>; 4],
    derham: DeRhamRho,
    betti: BettiRho,
}

impl Comparison {
    pub fn new(mu: &Q, phi: &TruncSeries) -> Result<Self> {
        if mu.is_zero() {
            return Err(AlgebraError::Precondition("μ must be invertible".into()));
        }
        let n = phi.cap();
        let a5 = A5Map::new(mu, phi)?;
        let p = compute_p(mu, phi)?;
        let p_inv = p.inv()?;
        let pbar = p.map(|x| x.pr12().unwrap());

        let e = Alphabet::e();
        let (e0, e1, f0, f1) = (TensorSeries::e(n, 0), TensorSeries::e(n, 1), TensorSeries::f(n, 0), TensorSeries::f(n, 1));
        let one = TensorSeries::one(&e, n);
        let finf = f0.plus(&f1).negate();
        let half = mu / Q::from_integer(2.into());
        let kappa = crate::ring::exp_t(&f1.scale(&-half))?
            .times(&phi.eval(&[e0, e1.clone()], &one))
            .times(&phi.eval(&[finf, f1.clone()], &one));
        let g = gamma_of(phi)?;
        let ge = g.eval_at(&e1)?;
        let gf = g.eval_at(&f1)?;
        let ef = e1.plus(&f1);
        let gef = g.eval_at(&ef)?;
        let expm1 = expm1_over(mu, n).eval_at(&ef)?;
        let gamma_ratio = gef.times(&inv_t(&ge.times(&gf))?);
        let emf = crate::ring::exp_t(&f1.scale(mu))?;
        let v = emf.times(&inv_t(&gamma_ratio)?).scale(&mu.recip());
        let u = inv_t(&emf)?.times(&gamma_ratio).times(&expm1).scale(mu);

        let a = &a5.a;
        let img = a.generator_images();
        let inv: Vec<TruncSeries> = img.iter().map(|x| x.inv().unwrap()).collect();
        let legs = [
            img.iter().map(TensorSeries::left).collect(),
            inv.iter().map(TensorSeries::left).collect(),
            img.iter().map(TensorSeries::right).collect(),
            inv.iter().map(TensorSeries::right).collect(),
        ];
        Ok(Comparison {
            mu: mu.clone(),
            cap: n,
            phi: phi.clone(),
            a5,
            p,
            p_inv,
            pbar,
            kappa,
            u,
            v,
            expm1,
            gamma_ratio,
            legs,
            derham: DeRhamRho::new(n),
            betti: BettiRho::new(),
        })
    }

    pub fn a(&self) -> &AMap {
        &self.a5.a
    }

    /// `P` with `a5(x_{i5} - 1) = Σ_j P_ij e_{j5}`.
    pub fn p(&self) -> &Mat3<SmashElem> {
        &self.p
    }

    pub fn pbar(&self) -> &Mat3<TensorSeries> {
        &self.pbar
    }

    /// `κ = e^{-(μ/2) f1} Φ(e0, e1) Φ(f∞, f1)`.
    pub fn kappa(&self) -> &TensorSeries {
        &self.kappa
    }

    /// `u = μ e^{-μ f1} Γ(e1+f1)/(Γ(e1)Γ(f1)) (e^{μ(e1+f1)} - 1)/(e1+f1)`.
    pub fn u(&self) -> &TensorSeries {
        &self.u
    }

    /// `v = μ^{-1} e^{μ f1} Γ(e1)Γ(f1)/Γ(e1+f1)`.
    pub fn v(&self) -> &TensorSeries {
        &self.v
    }

    /// `(e^{μ(e1+f1)} - 1)/(e1+f1)`.
    pub fn expm1(&self) -> &TensorSeries {
        &self.expm1
    }

    /// The conjugating scalar of the main diagram.
    pub fn cd_scalar(&self) -> TensorSeries {
        self.expm1.times(&self.gamma_ratio)
    }

    pub fn derham(&self) -> &DeRhamRho {
        &self.derham
    }

    pub fn betti(&self) -> &BettiRho {
        &self.betti
    }

    /// `a (x) a` on `kF2^{(x)2}`.
    pub fn a_tensor(&self, t: &TensorF2) -> TensorSeries {
        let [l, li, r, ri] = &self.legs;
        t.eval_legs(l, li, r, ri)
    }

    fn kp(&self) -> Mat3<TensorSeries> {
        self.pbar.left_scalar(&self.kappa)
    }

    /// `κ(p̄11 - p̄12)v = e^{μ f1}`, `κ(p̄21 - p̄22)v = -1`, `p̄31 - p̄32 = 0`.
    pub fn lemma89(&self) -> Vec<LemmaCheck> {
        let d = |i: usize| self.pbar.0[i][0].minus(&self.pbar.0[i][1]);
        let one = self.kappa.one_like();
        let emf = crate::ring::exp_t(&TensorSeries::f(self.cap, 1).scale(&self.mu)).unwrap();
        vec![
            LemmaCheck::compare("kappa(p11-p12)v", &self.kappa.times(&d(0)).times(&self.v), &emf),
            LemmaCheck::compare("kappa(p21-p22)v", &self.kappa.times(&d(1)).times(&self.v), &one.negate()),
            LemmaCheck::compare("p31-p32", &d(2), &one.zero_like()),
        ]
    }

    /// `a^{(x)2}(col̲) = κ P̄ col v` and `a^{(x)2}(row̲) = u row (κ P̄)^{-1}`.
    pub fn row_col(&self) -> Result<Vec<LemmaCheck>> {
        let (rb, cb) = row_col_bar();
        let (r, c) = (self.derham.row(), self.derham.col());
        let col_l = cb.map(|x| self.a_tensor(x));
        let col_r = Col::left_mat(&self.kp(), c).map(|x| x.times(&self.v));
        let row_l = rb.map(|x| self.a_tensor(x));
        let row_r = r.times_mat(&self.kp().inv()?).map(|x| self.u.times(x));
        let n = self.cap;
        let one = TensorSeries::one(&Alphabet::e(), n);
        let ex = |t: TensorSeries| crate::ring::exp_t(&t.scale(&self.mu)).unwrap();
        let col_closed = Col([ex(TensorSeries::f(n, 1)), one.negate(), one.zero_like()]);
        let row_closed = Row([ex(TensorSeries::e(n, 1)).minus(&one), one.minus(&ex(TensorSeries::f(n, 1))), one.zero_like()]);
        Ok(vec![
            LemmaCheck::compare("col", &col_l, &col_r),
            LemmaCheck::compare("col closed form", &col_l, &col_closed),
            LemmaCheck::compare("row", &row_l, &row_r),
            LemmaCheck::compare("row closed form", &row_l, &row_closed),
            LemmaCheck::compare("v u", &self.v.times(&self.u), &self.expm1),
        ])
    }

    /// `ρ(e^{μ e1} - 1) = ((e^{μ(e1+f1)} - 1)/(e1+f1)) col row`.
    pub fn lemma86(&self) -> LemmaCheck {
        let e1 = TruncSeries::e1(self.cap);
        let x = e1.scale(&self.mu).exp().unwrap().minus(&e1.one_like());
        let lhs = self.derham.rho(&x);
        let rhs = self.derham.col().outer(self.derham.row()).left_scalar(&self.expm1);
        LemmaCheck::compare("rho(e^{mu e1}-1)", &lhs, &rhs)
    }

    /// `M3(a5)(ϖ̲(p)) = P ϖ(a5 p) P^{-1}`.
    pub fn lemma84(&self, p: &P5Alg) -> LemmaCheck {
        let lhs = super::betti::varpi_bar(p).map(|x| self.a5.apply(x));
        let rhs = self.p.conj(&self.p_inv, &varpi(&self.a5.apply(p)));
        LemmaCheck::compare(format!("lemma84 at {p}"), &lhs, &rhs)
    }

    /// `a^{(x)2}(pr̲12(p)) = κ pr12(a5 p) κ^{-1}`.
    pub fn lemma83(&self, p: &P5Alg) -> LemmaCheck {
        let lhs = self.a_tensor(&pr12_underline(p));
        let k_inv = inv_t(&self.kappa).unwrap();
        let rhs = self.kappa.times(&self.a5.apply(p).pr12().unwrap()).times(&k_inv);
        LemmaCheck::compare(format!("lemma83 at {p}"), &lhs, &rhs)
    }

    /// `M3(a^{(x)2})(ρ̲(f)) = (κ P̄) ρ(a f) (κ P̄)^{-1}`.
    pub fn rho_compat(&self, f: &GroupAlgF) -> LemmaCheck {
        let lhs = self.betti.rho(f).map(|x| self.a_tensor(x));
        let kp = self.kp();
        let rhs = kp.conj(&kp.inv().unwrap(), &self.derham.rho(&self.a().apply(f)));
        LemmaCheck::compare(format!("rho compatibility at {f}"), &lhs, &rhs)
    }

    /// Both sides of the main diagram on `w ∈ W_l^B`:
    /// `(a^r)^{(x)2} Δ♯^{l,r}(w)` against `Ad(s) Δ⋆^{l,r}(a^l(w))`.
    pub fn cd_sides(&self, w: &XiPoly, s: &TensorSeries, s_inv: &TensorSeries) -> Result<(TensorSeries, TensorSeries)> {
        let mut memo: HashMap<XiLetter, TruncSeries> = HashMap::new();
        let one = TruncSeries::e_one(self.cap);
        let mut leg = |word: &[XiLetter]| -> TruncSeries {
            word.iter().fold(one.clone(), |acc, l| {
                let v = memo.entry(*l).or_insert_with(|| self.a().apply(&l.ad_value()));
                acc.times(v)
            })
        };
        let mut lhs = TensorSeries::zero(&Alphabet::e(), self.cap);
        for ((a, b), c) in w.delta_sharp().terms() {
            lhs = lhs.plus(&TensorSeries::outer(&leg(a), &leg(b)).scale(c));
        }
        let aw = self.a().apply_l(&w.to_group_alg())?;
        let rhs = s.times(&delta_star_lr(&aw)?).times(s_inv);
        Ok((lhs, rhs))
    }
}

/// `P`, computed one degree higher and truncated, since splitting off a right factor `e_{j5}`
/// lowers the degree by one.
pub fn compute_p(mu: &Q, phi: &TruncSeries) -> Result<Mat3<SmashElem>> {
    let n = phi.cap();
    let a5 = A5Map::new(mu, &phi.with_cap(n + 1))?;
    let rows: Vec<[SmashElem; 3]> = a5
        .ideal_images()
        .iter()
        .map(|x| {
            let parts = x.minus(&x.one_like()).decompose_right_e5()?;
            if parts.iter().any(|p| p.f3_component().is_none()) {
                return Err(AlgebraError::NotInSubalgebra("U(f3)"));
            }
            Ok(parts.map(|p| p.with_cap(n)))
        })
        .collect::<Result<_>>()?;
    Ok(Mat3(rows.try_into().unwrap()))
}

/// `κ`, `u`, `v` for `(μ, Φ)`.
pub fn compute_kappa_u_v(mu: &Q, phi: &TruncSeries) -> Result<(TensorSeries, TensorSeries, TensorSeries)> {
    let c = Comparison::new(mu, phi)?;
    Ok((c.kappa, c.u, c.v))
}

/// `P ≡ μ Id` modulo positive degree.
pub fn p_is_mu_identity(p: &Mat3<SmashElem>, mu: &Q) -> bool {
    (0..3).all(|i| (0..3).all(|j| p.0[i][j].constant() == if i == j { mu.clone() } else { Q::zero() }))
}
