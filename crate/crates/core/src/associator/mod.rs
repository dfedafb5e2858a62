//! Rational associators solved degree by degree, their residuals and `Gamma`-function identities,
//! and the comparison maps into the de Rham side.

mod comparison;
pub mod lyndon;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid_lie::{Mono, SmashElem, Tag};
use crate::error::{AlgebraError, Result};
use crate::linalg::solve_affine;
use crate::racinet::gamma_of;
use crate::ring::{factorial, fmt_q, inv_t, parse_q, q, qf, Ring, Truncated, Q};
use crate::series::{Alphabet, SeriesJson, TensorSeries, TruncSeries, UniSeries, Word};

pub use comparison::{pr_conjugator, A5Map, AMap};
use lyndon::{lyndon_eval, lyndon_text, lyndon_words};

/// Value chosen for an underdetermined Lyndon coordinate of `log(phi)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeParam {
    pub degree: usize,
    pub lyndon: String,
    pub value: String,
}

/// Requested values of free coordinates, keyed by degree and Lyndon word (`"00111"`); missing ones are 0.
pub type FreeChoice = BTreeMap<usize, BTreeMap<String, Q>>;

#[derive(Clone, Debug, PartialEq)]
pub struct Associator {
    pub mu: Q,
    pub degree: usize,
    pub phi: TruncSeries,
    pub free_params: Vec<FreeParam>,
}

/// The four defect series, `lhs - rhs` of each defining equation.
#[derive(Clone, Debug)]
pub struct Residuals {
    pub pentagon: SmashElem,
    pub hexagon1: TruncSeries,
    pub hexagon2: TruncSeries,
    pub cycle: TruncSeries,
}

impl Residuals {
    pub fn all_zero(&self) -> bool {
        self.pentagon.is_zero() && self.hexagon1.is_zero() && self.hexagon2.is_zero() && self.cycle.is_zero()
    }

    /// Lowest degree with a nonzero residual in each equation.
    pub fn first_degrees(&self) -> [(&'static str, Option<usize>); 4] {
        [
            ("pentagon", self.pentagon.valuation()),
            ("hexagon", self.hexagon1.valuation()),
            ("hexagon_mirror", self.hexagon2.valuation()),
            ("two_cycle", self.cycle.valuation()),
        ]
    }
}

struct Args {
    e: [TruncSeries; 3],
    pent: [(SmashElem, SmashElem); 5],
}

impl Args {
    fn new(cap: usize) -> Self {
        let t = |n: &str| SmashElem::generator(Tag::T4, cap, n).unwrap();
        let (t12, t13, t23, t24, t34) = (t("t12"), t("t13"), t("t23"), t("t24"), t("t34"));
        Args {
            e: [TruncSeries::e0(cap), TruncSeries::e1(cap), TruncSeries::e_inf(cap)],
            pent: [
                (t12.clone(), &t23 + &t24),
                (&t13 + &t23, t34.clone()),
                (t23.clone(), t34.clone()),
                (&t12 + &t13, &t24 + &t34),
                (t12, t23),
            ],
        }
    }
}

fn eval2<R: Ring>(phi: &TruncSeries, a: &R, b: &R) -> R {
    phi.eval(&[a.clone(), b.clone()], &a.one_like())
}

fn half_exp(x: &TruncSeries, mu: &Q, sign: i64) -> TruncSeries {
    x.scale(&(mu * qf(sign, 2))).exp().unwrap()
}

/// `e^{s mu e0/2} Phi(einf,e0) e^{s mu einf/2} Phi(e1,einf) e^{s mu e1/2} Phi(e0,e1) - 1`.
fn hexagon(phi: &TruncSeries, mu: &Q, sign: i64, e: &[TruncSeries; 3]) -> TruncSeries {
    let [e0, e1, ei] = e;
    let prod = half_exp(e0, mu, sign)
        .times(&eval2(phi, ei, e0))
        .times(&half_exp(ei, mu, sign))
        .times(&eval2(phi, e1, ei))
        .times(&half_exp(e1, mu, sign))
        .times(&eval2(phi, e0, e1));
    prod.minus(&prod.one_like())
}

fn cycle(phi: &TruncSeries, e: &[TruncSeries; 3]) -> TruncSeries {
    let p = eval2(phi, &e[1], &e[0]).times(&eval2(phi, &e[0], &e[1]));
    p.minus(&p.one_like())
}

fn pentagon(phi: &TruncSeries, pent: &[(SmashElem, SmashElem); 5]) -> SmashElem {
    let v: Vec<SmashElem> = pent.par_iter().map(|(a, b)| eval2(phi, a, b)).collect();
    v[0].times(&v[1]).minus(&v[2].times(&v[3]).times(&v[4]))
}

/// `lhs - rhs` for the pentagon, both hexagons and the 2-cycle, through the cap of `phi`.
pub fn residuals(phi: &TruncSeries, mu: &Q) -> Residuals {
    let args = Args::new(phi.cap());
    Residuals {
        pentagon: pentagon(phi, &args.pent),
        hexagon1: hexagon(phi, mu, 1, &args.e),
        hexagon2: hexagon(phi, mu, -1, &args.e),
        cycle: cycle(phi, &args.e),
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum RowKey {
    Cycle(Word),
    Hexagon(Word),
    Pentagon(Mono),
}

fn degree_rows(cyc: &TruncSeries, hex: &TruncSeries, pent: &SmashElem, d: usize) -> BTreeMap<RowKey, Q> {
    let mut out = BTreeMap::new();
    for (w, c) in cyc.homogeneous(d).terms() {
        out.insert(RowKey::Cycle(w.clone()), c.clone());
    }
    for (w, c) in hex.homogeneous(d).terms() {
        out.insert(RowKey::Hexagon(w.clone()), c.clone());
    }
    for (m, c) in pent.homogeneous(d).terms() {
        out.insert(RowKey::Pentagon(m.clone()), c.clone());
    }
    out
}

/// Solves for `log(phi)` in Lyndon coordinates, one degree at a time.
pub fn solve_associator(mu: &Q, degree: usize, choice: &FreeChoice) -> Result<Associator> {
    let e = Alphabet::e();
    let mut psi = TruncSeries::zero(&e, degree);
    let mut free_params = Vec::new();
    for d in 2..=degree {
        let args = Args::new(d);
        let phi = psi.with_cap(d).exp()?;
        let base = degree_rows(&cycle(&phi, &args.e), &hexagon(&phi, mu, 1, &args.e), &pentagon(&phi, &args.pent), d);
        let words = lyndon_words(d);
        // the degree-d coordinates enter each equation linearly through their own bracket
        let cols: Vec<BTreeMap<RowKey, Q>> = words
            .par_iter()
            .map(|w| {
                let l = |a: &TruncSeries, b: &TruncSeries| lyndon_eval(w, a, b);
                let [e0, e1, ei] = &args.e;
                let cyc = l(e1, e0).plus(&l(e0, e1));
                let hex = l(ei, e0).plus(&l(e1, ei)).plus(&l(e0, e1));
                let p: Vec<SmashElem> = args.pent.iter().map(|(a, b)| lyndon_eval(w, a, b)).collect();
                let pent = p[0].plus(&p[1]).minus(&p[2]).minus(&p[3]).minus(&p[4]);
                degree_rows(&cyc, &hex, &pent, d)
            })
            .collect();
        let mut keys: Vec<RowKey> = base.keys().cloned().collect();
        for c in &cols {
            keys.extend(c.keys().cloned());
        }
        keys.sort();
        keys.dedup();
        let a: Vec<Vec<Q>> = keys.iter().map(|k| cols.iter().map(|c| c.get(k).cloned().unwrap_or_else(Q::zero)).collect()).collect();
        let b: Vec<Q> = keys.iter().map(|k| -base.get(k).cloned().unwrap_or_else(Q::zero)).collect();
        let texts: Vec<String> = words.iter().map(|w| lyndon_text(w)).collect();
        let requested = choice.get(&d);
        let sol = solve_affine(&a, &b, words.len(), |i| {
            requested.and_then(|m| m.get(&texts[i])).cloned().unwrap_or_else(Q::zero)
        })
        .ok_or(AlgebraError::Inconsistent { degree: d })?;
        for &i in &sol.free {
            free_params.push(FreeParam { degree: d, lyndon: texts[i].clone(), value: fmt_q(&sol.x[i]) });
        }
        for (w, x) in words.iter().zip(&sol.x) {
            if !x.is_zero() {
                psi = psi.plus(&lyndon_eval(w, &TruncSeries::e0(degree), &TruncSeries::e1(degree)).scale(x));
            }
        }
        if d == 2 {
            let want = mu * mu * qf(1, 24);
            if psi.get(&[0, 1]) != want {
                return Err(AlgebraError::Invariant(format!("degree-2 coefficient {} differs from mu^2/24", fmt_q(&psi.get(&[0, 1])))));
            }
        }
    }
    Ok(Associator { mu: mu.clone(), degree, phi: psi.exp()?, free_params })
}

impl Associator {
    pub fn solve(mu: &Q, degree: usize) -> Result<Self> {
        solve_associator(mu, degree, &FreeChoice::new())
    }

    pub fn residuals(&self) -> Residuals {
        residuals(&self.phi, &self.mu)
    }

    pub fn gamma(&self) -> UniSeries {
        gamma_of(&self.phi).expect("two-letter series")
    }

    pub fn to_json(&self) -> AssociatorJson {
        AssociatorJson { mu: fmt_q(&self.mu), series: self.phi.to_json(), free_param_record: self.free_params.clone() }
    }

    pub fn from_json(j: &AssociatorJson) -> Result<Self> {
        let phi = TruncSeries::from_json(&j.series)?;
        if phi.alphabet().len() != 2 {
            return Err(AlgebraError::AlphabetMismatch(j.series.alphabet.join(","), "e0,e1".into()));
        }
        Ok(Associator { mu: parse_q(&j.mu)?, degree: j.series.degree, phi, free_params: j.free_param_record.clone() })
    }
}

/// Export format: `{"mu":..,"alphabet":..,"degree":..,"terms":..,"free_param_record":..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociatorJson {
    pub mu: String,
    #[serde(flatten)]
    pub series: SeriesJson,
    #[serde(default)]
    pub free_param_record: Vec<FreeParam>,
}

/// `mu t / (e^{mu t/2} - e^{-mu t/2})`, expanded as the inverse of `sinh(x)/x` at `x = mu t/2`.
pub fn gamma_product_target(mu: &Q, cap: usize) -> UniSeries {
    let half = mu * qf(1, 2);
    let mut c = vec![Q::zero(); cap + 1];
    let mut p = Q::one();
    for k in 0..=cap / 2 {
        c[2 * k] = &p / factorial(2 * k + 1);
        p = &p * &half * &half;
    }
    UniSeries::from_coeffs(cap, &c).inv().expect("constant term 1")
}

/// Both sides of the two `Gamma_Phi` identities.
#[derive(Clone, Debug)]
pub struct GammaReport {
    /// `(1 + phi_1 e1)^ab` over `k[[ebar0 (x) 1, 1 (x) ebar1]]`.
    pub abelian_lhs: TensorSeries,
    pub abelian_rhs: TensorSeries,
    pub product: UniSeries,
    pub product_target: UniSeries,
}

impl GammaReport {
    pub fn abelian_ok(&self) -> bool {
        self.abelian_lhs == self.abelian_rhs
    }

    pub fn product_ok(&self) -> bool {
        self.product == self.product_target
    }
}

pub fn gamma_phi_identities(phi: &TruncSeries, mu: &Q) -> Result<GammaReport> {
    let cap = phi.cap();
    let e = phi.alphabet().clone();
    let tail = phi.map_words(&e, |w| if w.last() == Some(&0) { None } else { Some((w.clone(), Q::one())) });
    let lhs = tail.abelianize();
    let g = gamma_of(phi)?;
    let t = Alphabet::t();
    let x = TruncSeries::letter(&t, cap, 0).negate();
    let a = TensorSeries::left(&x);
    let b = TensorSeries::right(&x);
    let rhs = g.eval_at(&a)?.times(&g.eval_at(&b)?).times(&inv_t(&g.eval_at(&a.plus(&b))?)?);
    let product = g.times(&g.scale_arg(&q(-1)));
    Ok(GammaReport { abelian_lhs: lhs, abelian_rhs: rhs, product, product_target: gamma_product_target(mu, cap) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_zero_gives_one() {
        let a = Associator::solve(&q(0), 4).unwrap();
        assert_eq!(a.phi, TruncSeries::e_one(4));
    }

    #[test]
    fn degree_two_and_residuals() {
        let a = Associator::solve(&q(1), 4).unwrap();
        assert_eq!(a.phi.homogeneous(2), TruncSeries::parse(&Alphabet::e(), 4, "1/24*e0.e1 - 1/24*e1.e0").unwrap());
        let r = a.residuals();
        assert!(r.all_zero(), "{:?}", r.first_degrees());
        assert!(a.phi.is_grouplike());
        assert_eq!(a.free_params.len(), 1);
        assert_eq!(a.free_params[0].degree, 3);
    }

    #[test]
    fn trivial_residuals() {
        assert!(residuals(&TruncSeries::e_one(4), &q(0)).all_zero());
        // products of [e0,e1] first disturb the pentagon in degree 4
        let bad = TruncSeries::parse(&Alphabet::e(), 4, "e0.e1 - e1.e0").unwrap().exp().unwrap();
        let r = residuals(&bad, &q(1));
        assert_eq!(r.pentagon.valuation(), Some(4));
        assert_eq!(r.hexagon1.valuation(), Some(2));
        assert!(r.cycle.is_zero());
    }

    #[test]
    fn gamma_identities_hold() {
        let a = Associator::solve(&q(1), 5).unwrap();
        let r = gamma_phi_identities(&a.phi, &a.mu).unwrap();
        assert!(r.abelian_ok());
        assert!(r.product_ok());
        assert_eq!(r.product.coeff(2), qf(-1, 24));
        assert_eq!(r.abelian_lhs.get(&[0], &[0]), qf(1, 24));
    }

    #[test]
    fn solved_associator_is_in_dmr() {
        for mu in [q(1), qf(-2, 3)] {
            let a = Associator::solve(&mu, 5).unwrap();
            assert!(crate::racinet::dmr_check(&a.phi, &mu).unwrap().all_ok());
        }
    }

    #[test]
    fn free_parameter_choice_is_recorded() {
        let mut choice = FreeChoice::new();
        choice.entry(3).or_default().insert("011".into(), q(5));
        let a = solve_associator(&q(1), 4, &choice).unwrap();
        assert!(a.residuals().all_zero());
        assert_eq!(a.free_params[0], FreeParam { degree: 3, lyndon: "011".into(), value: "5".into() });
        assert_ne!(a.phi, Associator::solve(&q(1), 4).unwrap().phi);
    }

    #[test]
    fn json_round_trip() {
        let a = Associator::solve(&qf(1, 2), 4).unwrap();
        let s = serde_json::to_string(&a.to_json()).unwrap();
        let b = Associator::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
