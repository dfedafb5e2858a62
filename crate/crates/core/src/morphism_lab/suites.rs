//! Named check suites over spanning sets, with JSON reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::betti::{ad_y1_inv, lemma65_closed_form, lemma65_closed_form_x1inv, BettiRho};
use super::compare::{p_is_mu_identity, Comparison, LemmaCheck};
use super::derham::{lemma53_closed_form, DeRhamRho};
use crate::error::{AlgebraError, Result};
use crate::freegrp::{Gens, GroupAlgF, GroupWord};
use crate::racinet::dmr_check;
use crate::ring::{fmt_q, inv_t, Ring, Q};
use crate::series::TruncSeries;
use crate::sphere_braid::{p5_alg, P5Alg, P5Elem, TABLE_COLUMNS};
use crate::w_algebras::{delta_star_lr, xi_monomials, WlB, XiPoly};

const MAX_SHOWN: usize = 600;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SuiteFailure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub degree: usize,
    pub mu: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<SuiteFailure>,
}

fn clip(s: String) -> String {
    if s.chars().count() <= MAX_SHOWN {
        s
    } else {
        s.chars().take(MAX_SHOWN).chain("…".chars()).collect()
    }
}

impl SuiteReport {
    pub fn new(suite: &str, degree: usize, mu: &Q) -> Self {
        SuiteReport { suite: suite.into(), degree, mu: fmt_q(mu), passed: true, checked: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, input: impl Into<String>, ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(SuiteFailure { input: input.into(), lhs: clip(lhs()), rhs: clip(rhs()) });
        }
    }

    pub fn compare<T: PartialEq + std::fmt::Display>(&mut self, input: impl Into<String>, lhs: &T, rhs: &T) {
        self.record(input, lhs == rhs, || lhs.to_string(), || rhs.to_string());
    }

    pub fn lemma(&mut self, input: &str, c: LemmaCheck) {
        let name = if input.is_empty() { c.name.clone() } else { format!("{input}: {}", c.name) };
        self.record(name, c.ok, || c.lhs, || c.rhs);
    }

    /// A failure that is not a comparison, e.g. a violated precondition.
    pub fn fail(&mut self, input: impl Into<String>, why: impl Into<String>) {
        self.record(input, false, || why.into(), String::new);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `ρ̃(e0^n)` against the closed form and against `Δ⋆^{l,r}(e0^n e1)`, for `n < N`.
pub fn diagram59(n: usize, mu: &Q) -> SuiteReport {
    let mut rep = SuiteReport::new("diagram59", n, mu);
    let r = DeRhamRho::new(n);
    let e0 = TruncSeries::e0(n);
    let mut p = e0.one_like();
    for k in 0..n {
        let lhs = r.rho_tilde(&p);
        rep.compare(format!("closed form e0^{k}"), &lhs, &lemma53_closed_form(k, n));
        rep.compare(format!("e0^{k}"), &lhs, &delta_star_lr(&p.times(&TruncSeries::e1(n))).unwrap());
        p = p.times(&e0);
    }
    rep
}

/// `ρ̲̃(f)` against the closed forms and against `Ad(Y1^{-1}) Δ♯^{l,r}(f (X1 - 1))`, for
/// `f = X0^k, X0^k X1^{-1}`, `|k| <= 5`.
pub fn diagram71(n: usize, mu: &Q) -> SuiteReport {
    let mut rep = SuiteReport::new("diagram71", n, mu);
    let r = BettiRho::new();
    let x1m1 = GroupAlgF::parse(Gens::F2, "X1 - 1").unwrap();
    let x1i = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 1, -1));
    for k in -5..=5 {
        let x0k = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 0, k as i64));
        let fs = [(format!("X0^{k}"), x0k.clone(), lemma65_closed_form(k)), (format!("X0^{k}.X1^-1"), x0k.times(&x1i), lemma65_closed_form_x1inv(k))];
        for (name, f, closed) in fs {
            let lhs = r.rho_tilde(&f);
            rep.compare(format!("closed form {name}"), &lhs, &closed);
            let rhs = ad_y1_inv(&WlB::new(f.times(&x1m1)).unwrap().delta_sharp_lr());
            rep.compare(name, &lhs, &rhs);
        }
    }
    rep
}

/// Sample elements of `kP5*`: the ten generators, then seeded random products and sums.
pub fn p5_samples(seed: u64, count: usize) -> Vec<P5Alg> {
    let mut out: Vec<P5Alg> = TABLE_COLUMNS.iter().map(|&(i, j)| p5_alg(&P5Elem::xij(i, j).unwrap())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let g = P5Elem::random(3, &mut rng);
        let h = P5Elem::random(2, &mut rng);
        let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
        out.push(p5_alg(&g).plus(&p5_alg(&h).scale(&c)));
    }
    out
}

/// `M3(a⁵) ϖ̲(p) = P ϖ(a⁵ p) P⁻¹` on `kP5*` samples, with the `pr12` and `ρ` compatibilities that follow.
pub fn lemma84(c: &Comparison, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lemma84", c.cap, &c.mu);
    rep.record("P = mu Id mod degree 1", p_is_mu_identity(c.p(), &c.mu), || c.p().to_string(), || format!("{} Id", fmt_q(&c.mu)));
    let samples = p5_samples(seed, 6);
    let checks: Vec<(LemmaCheck, LemmaCheck)> = samples.par_iter().map(|p| (c.lemma84(p), c.lemma83(p))).collect();
    for (a, b) in checks {
        rep.lemma("", a);
        rep.lemma("", b);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut fs: Vec<GroupAlgF> = ["X0", "X1", "X0^-1", "X1^-1"].iter().map(|s| GroupAlgF::parse(Gens::F2, s).unwrap()).collect();
    for _ in 0..4 {
        fs.push(GroupAlgF::word(&GroupWord::random(Gens::F2, 4, &mut rng)));
    }
    for f in &fs {
        rep.lemma("", c.rho_compat(f));
    }
    rep
}

pub fn lemma86(c: &Comparison) -> SuiteReport {
    let mut rep = SuiteReport::new("lemma86", c.cap, &c.mu);
    rep.lemma("", c.lemma86());
    rep
}

pub fn lemma89(c: &Comparison) -> SuiteReport {
    let mut rep = SuiteReport::new("lemma89", c.cap, &c.mu);
    for l in c.lemma89() {
        rep.lemma("", l);
    }
    rep
}

pub fn rowcol(c: &Comparison) -> SuiteReport {
    let mut rep = SuiteReport::new("rowcol", c.cap, &c.mu);
    match c.row_col() {
        Ok(v) => v.into_iter().for_each(|l| rep.lemma("", l)),
        Err(e) => rep.fail("(kappa Pbar)^-1", e.to_string()),
    }
    rep
}

fn xi_label(lab: &[(i8, u32)]) -> String {
    if lab.is_empty() {
        return "1".into();
    }
    lab.iter().map(|(e, n)| format!("xi({},0|{n})", if *e > 0 { "+" } else { "-" })).collect::<Vec<_>>().join(".")
}

/// The main diagram on every `ξ(±,0|n_1)···ξ(±,0|n_k)` with `Σ n_i <= N`.
pub fn cd(c: &Comparison) -> SuiteReport {
    let mut rep = SuiteReport::new("cd", c.cap, &c.mu);
    let s = c.cd_scalar();
    let s_inv = match inv_t(&s) {
        Ok(x) => x,
        Err(e) => {
            rep.fail("scalar", e.to_string());
            return rep;
        }
    };
    let monos: Vec<(Vec<(i8, u32)>, XiPoly)> = xi_monomials(c.cap as u32, &[1, -1]);
    let results: Vec<_> = monos.par_iter().map(|(lab, w)| (xi_label(lab), c.cd_sides(w, &s, &s_inv))).collect();
    for (lab, r) in results {
        match r {
            Ok((l, r)) => rep.compare(lab, &l, &r),
            Err(e) => rep.fail(lab, e.to_string()),
        }
    }
    rep
}

/// The main theorem at the cap of `Φ`: requires `Φ ∈ DMR_μ` and `μ ≠ 0`, then runs [`cd`].
pub fn main_theorem_check(mu: &Q, phi: &TruncSeries) -> Result<SuiteReport> {
    if mu == &Q::from_integer(0.into()) {
        return Err(AlgebraError::Precondition("μ must be invertible".into()));
    }
    let dmr = dmr_check(phi, mu)?;
    if !dmr.all_ok() {
        return Err(AlgebraError::Precondition("Φ fails the DMR conditions at this truncation".into()));
    }
    let c = Comparison::new(mu, phi)?;
    let mut rep = cd(&c);
    rep.suite = "main-theorem".into();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associator::Associator;
    use crate::ring::q;

    #[test]
    fn reports_pass_at_low_degree() {
        let a = Associator::solve(&q(1), 4).unwrap();
        let c = Comparison::new(&a.mu, &a.phi).unwrap();
        for r in [diagram59(5, &a.mu), diagram71(4, &a.mu), lemma86(&c), lemma89(&c), rowcol(&c), lemma84(&c, 1), cd(&c)] {
            assert!(r.passed, "{}", r.to_json());
            assert!(r.checked > 0);
        }
        let j: serde_json::Value = serde_json::from_str(&cd(&c).to_json()).unwrap();
        assert_eq!(j["suite"], "cd");
        assert_eq!(j["mu"], "1");
    }

    #[test]
    fn perturbed_associator_breaks_the_diagram() {
        // a degree-3 change reaches the diagram through [δ, e0] in degree 4 and a further bracket
        let a = Associator::solve(&q(1), 5).unwrap();
        let mut phi = a.phi.clone();
        phi.add_term(vec![0, 0, 1], q(1));
        let c = Comparison::new(&a.mu, &phi).unwrap();
        let r = cd(&c);
        assert!(!r.passed);
        assert!(!r.failures.is_empty());
        assert!(main_theorem_check(&q(1), &phi).is_err());
        assert!(main_theorem_check(&q(0), &a.phi).is_err());
    }
}
