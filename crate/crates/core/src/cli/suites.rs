//! The suite registry behind `verify`.

use std::sync::OnceLock;

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::associator::lyndon::{lyndon_eval, lyndon_words};
use crate::associator::{gamma_phi_identities, solve_associator, Associator, FreeChoice};
use crate::braid_lie::oracle::QuotientOracle;
use crate::braid_lie::{pbw_dim, SmashElem, Tag};
use crate::error::Result;
use crate::freegrp::{Gens, Group, GroupAlgF, GroupWord};
use crate::morphism_lab::suites::{self as lab, SuiteReport};
use crate::morphism_lab::{rho, varpi, varpi_bar, BettiRho, Comparison};
use crate::racinet::{circledast, circledast_inv, dmr_check, stabilizer_check, theta, Check};
use crate::ring::{fmt_q, q, qf, Ring, Q};
use crate::series::TruncSeries;
use crate::sphere_braid::{expected_pr_table, p5_alg, pr_table, presentation_relators, theta_act, P5Alg, P5Elem};
use crate::w_algebras::{gr_class, gr_tensor, xi_monomials};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    AssocResiduals,
    Gamma,
    Dmr,
    Diagram59,
    Diagram71,
    Lemma84,
    Lemma86,
    Lemma89,
    Rowcol,
    Cd,
    MainTheorem,
    PresentationP5,
    Fox,
    Pbw,
    GrSharpStar,
    Stabilizer,
    Properties,
    All,
}

impl SuiteName {
    pub fn label(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    /// Every concrete suite, in report order.
    pub fn each() -> Vec<SuiteName> {
        SuiteName::value_variants().iter().copied().filter(|s| *s != SuiteName::All).collect()
    }
}

/// Shared inputs; the associator and comparison data are built on first use.
pub struct Context {
    pub degree: usize,
    pub mu: Q,
    pub seed: u64,
    assoc: OnceLock<Associator>,
    comparison: OnceLock<Comparison>,
}

impl Context {
    pub fn new(degree: usize, mu: Q, seed: u64, assoc: Option<Associator>) -> Self {
        let cell = OnceLock::new();
        if let Some(a) = assoc {
            let _ = cell.set(a);
        }
        Context { degree, mu, seed, assoc: cell, comparison: OnceLock::new() }
    }

    pub fn associator(&self) -> Result<&Associator> {
        if let Some(a) = self.assoc.get() {
            return Ok(a);
        }
        let a = Associator::solve(&self.mu, self.degree)?;
        Ok(self.assoc.get_or_init(|| a))
    }

    pub fn comparison(&self) -> Result<&Comparison> {
        if let Some(c) = self.comparison.get() {
            return Ok(c);
        }
        let a = self.associator()?;
        let c = Comparison::new(&a.mu, &a.phi)?;
        Ok(self.comparison.get_or_init(|| c))
    }

    fn report(&self, name: SuiteName) -> SuiteReport {
        SuiteReport::new(&name.label(), self.degree, &self.mu)
    }
}

fn check_into(rep: &mut SuiteReport, name: &str, c: &Check) {
    let detail = || c.first_failure.as_ref().map(|f| format!("degree {}, {}: {}", f.degree, f.word, f.detail)).unwrap_or_default();
    rep.record(name, c.ok, detail, String::new);
}

/// Runs one suite; errors inside a suite become a failure entry.
pub fn run(name: SuiteName, ctx: &Context) -> Vec<SuiteReport> {
    if name == SuiteName::All {
        return SuiteName::each().into_iter().flat_map(|s| run(s, ctx)).collect();
    }
    let out = match name {
        SuiteName::AssocResiduals => assoc_residuals(ctx),
        SuiteName::Gamma => gamma(ctx),
        SuiteName::Dmr => dmr(ctx),
        SuiteName::Diagram59 => Ok(lab::diagram59(ctx.degree, &ctx.mu)),
        SuiteName::Diagram71 => Ok(lab::diagram71(ctx.degree, &ctx.mu)),
        SuiteName::Lemma84 => ctx.comparison().map(|c| lab::lemma84(c, ctx.seed)),
        SuiteName::Lemma86 => ctx.comparison().map(lab::lemma86),
        SuiteName::Lemma89 => ctx.comparison().map(lab::lemma89),
        SuiteName::Rowcol => ctx.comparison().map(lab::rowcol),
        SuiteName::Cd => ctx.comparison().map(lab::cd),
        SuiteName::MainTheorem => ctx.associator().and_then(|a| lab::main_theorem_check(&a.mu, &a.phi)),
        SuiteName::PresentationP5 => Ok(presentation_p5(ctx)),
        SuiteName::Fox => Ok(fox(ctx)),
        SuiteName::Pbw => Ok(pbw(ctx)),
        SuiteName::GrSharpStar => Ok(gr_sharp_star(ctx)),
        SuiteName::Stabilizer => stabilizer(ctx),
        SuiteName::Properties => properties(ctx),
        SuiteName::All => unreachable!(),
    };
    let rep = out.unwrap_or_else(|e| {
        let mut r = ctx.report(name);
        r.fail("setup", e.to_string());
        r
    });
    vec![rep]
}

fn assoc_residuals(ctx: &Context) -> Result<SuiteReport> {
    let mut rep = ctx.report(SuiteName::AssocResiduals);
    let a = ctx.associator()?;
    for (name, d) in a.residuals().first_degrees() {
        rep.record(name, d.is_none(), || format!("nonzero in degree {}", d.unwrap()), || "0".into());
    }
    if a.degree >= 1 {
        rep.compare("degree-1 part", &a.phi.homogeneous(1), &a.phi.homogeneous(1).zero_like());
    }
    if a.degree >= 2 {
        let want = &a.mu * &a.mu * qf(1, 24);
        let got = a.phi.get(&[0, 1]);
        rep.record("coefficient of e0.e1", got == want, || fmt_q(&got), || fmt_q(&want));
    }
    Ok(rep)
}

fn gamma(ctx: &Context) -> Result<SuiteReport> {
    let mut rep = ctx.report(SuiteName::Gamma);
    let a = ctx.associator()?;
    let g = gamma_phi_identities(&a.phi, &a.mu)?;
    rep.compare("Gamma(t) Gamma(-t)", &g.product, &g.product_target);
    rep.compare("abelianized tail", &g.abelian_lhs, &g.abelian_rhs);
    Ok(rep)
}

fn dmr(ctx: &Context) -> Result<SuiteReport> {
    let mut rep = ctx.report(SuiteName::Dmr);
    let a = ctx.associator()?;
    let d = dmr_check(&a.phi, &a.mu)?;
    for (name, c) in [
        ("group-like", &d.lie_grouplike),
        ("harmonic group-like", &d.delta_star_grouplike),
        ("coefficient of x0", &d.coeff_x0),
        ("coefficient of x1", &d.coeff_x1),
        ("coefficient of x0.x1", &d.coeff_x0x1),
    ] {
        check_into(&mut rep, name, c);
    }
    Ok(rep)
}

fn presentation_p5(ctx: &Context) -> SuiteReport {
    let mut rep = ctx.report(SuiteName::PresentationP5);
    for (name, r) in presentation_relators() {
        rep.record(name, r.is_identity(), || r.to_string(), || "1".into());
    }
    let table = pr_table();
    for ((i, got), (j, want)) in table.iter().zip(expected_pr_table()) {
        assert_eq!(*i, j);
        let got: Vec<String> = got.iter().map(|w| w.to_string()).collect();
        rep.record(format!("pr{i} row"), got == want, || got.join(" "), || want.join(" "));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for _ in 0..100 {
        let g = GroupWord::random(Gens::F2, 4, &mut rng);
        let h = GroupWord::random(Gens::F2, 4, &mut rng);
        let w = GroupWord::random(Gens::F3, 4, &mut rng);
        let lhs = theta_act(&g.mul(&h), &w);
        let rhs = theta_act(&h, &theta_act(&g, &w));
        rep.compare(format!("theta composition at ({g}, {h}, {w})"), &lhs, &rhs);
        let (a, b, c) = (P5Elem::random(3, &mut rng), P5Elem::random(3, &mut rng), P5Elem::random(3, &mut rng));
        rep.compare(format!("associativity at ({a}, {b}, {c})"), &a.mul(&b).mul(&c), &a.mul(&b.mul(&c)));
    }
    rep
}

fn fox(ctx: &Context) -> SuiteReport {
    let mut rep = ctx.report(SuiteName::Fox);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for gens in [Gens::F2, Gens::F3] {
        for _ in 0..100 {
            let w = GroupWord::random(gens, 12, &mut rng);
            let lhs = GroupAlgF::fox_recompose(&GroupAlgF::fox_word(&w));
            let rhs = GroupAlgF::minus_one(&w);
            rep.compare(format!("{w}"), &lhs, &rhs);
        }
    }
    rep
}

fn pbw(ctx: &Context) -> SuiteReport {
    let mut rep = ctx.report(SuiteName::Pbw);
    for d in 0..=ctx.degree {
        let p5 = SmashElem::basis(Tag::P5, d).len() as u64;
        let want = 3u64.pow(d as u32 + 1) - 2u64.pow(d as u32 + 1);
        rep.record(format!("dim U(p5)_{d}"), p5 == want && pbw_dim(Tag::P5, d) == want, || p5.to_string(), || want.to_string());
        let t4 = SmashElem::basis(Tag::T4, d).len() as u64;
        rep.record(format!("dim U(t4)_{d}"), t4 == pbw_dim(Tag::T4, d), || t4.to_string(), || pbw_dim(Tag::T4, d).to_string());
    }
    let cap = ctx.degree.min(4);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for tag in [Tag::P5, Tag::T4] {
        let o = QuotientOracle::new(tag, cap);
        for d in 0..=cap {
            let (got, want) = (o.dim(d) as u64, pbw_dim(tag, d));
            rep.record(format!("{tag:?} quotient dimension {d}"), got == want, || got.to_string(), || want.to_string());
        }
        for k in 0..100 {
            let a = random_smash(tag, cap, &mut rng);
            let b = random_smash(tag, cap, &mut rng);
            let ok = o.is_zero(&o.lift(&a.times(&b)).minus(&o.lift(&a).times(&o.lift(&b))));
            rep.record(format!("{tag:?} product sample {k}"), ok, || format!("{a} * {b}"), String::new);
        }
    }
    rep
}

fn random_smash<R: rand::Rng>(tag: Tag, cap: usize, rng: &mut R) -> SmashElem {
    let names = SmashElem::all_generator_names(tag);
    let mut acc = SmashElem::zero(tag, cap);
    for _ in 0..3 {
        let len = rng.gen_range(1..=2);
        let mut m = SmashElem::one(tag, cap);
        for _ in 0..len {
            m = m.times(&SmashElem::generator(tag, cap, names[rng.gen_range(0..names.len())]).unwrap());
        }
        acc = acc.plus(&m.scale(&q(rng.gen_range(-2i64..=2))));
    }
    acc
}

fn gr_sharp_star(ctx: &Context) -> SuiteReport {
    let mut rep = ctx.report(SuiteName::GrSharpStar);
    let monos = xi_monomials(ctx.degree as u32, &[1, -1]);
    let results: Vec<_> = monos
        .par_iter()
        .map(|(lab, m)| {
            let n = lab.iter().map(|x| x.1 as usize).sum::<usize>();
            let lhs = gr_tensor(&m.delta_sharp().to_group(), n);
            let rhs = gr_class(&m.to_group_alg(), n).map(|y| y.delta_star().with_cap(n));
            (format!("{lab:?}"), lhs, rhs)
        })
        .collect();
    for (lab, l, r) in results {
        match (l, r) {
            (Ok(l), Ok(r)) => rep.compare(lab, &l, &r),
            (l, r) => rep.fail(lab, format!("{:?} / {:?}", l.err(), r.err())),
        }
    }
    rep
}

/// Two associators differing in a degree-3 free coordinate lie in one torsor; their quotient
/// must stabilize the harmonic coproduct.
fn stabilizer(ctx: &Context) -> Result<SuiteReport> {
    let mut rep = ctx.report(SuiteName::Stabilizer);
    let a = ctx.associator()?;
    let mut choice = FreeChoice::new();
    choice.entry(3).or_default().insert("011".into(), q(1));
    let b = solve_associator(&a.mu, a.degree, &choice)?;
    rep.record("perturbed associator differs", b.phi != a.phi || a.degree < 3, String::new, String::new);
    let g = circledast(&b.phi, &circledast_inv(&a.phi)?)?;
    check_into(&mut rep, "Phi' (*) Phi^(*-1) stabilizes", &stabilizer_check(&g)?);
    rep.record("perturbed associator residuals", b.residuals().all_zero(), || "nonzero".into(), || "0".into());
    Ok(rep)
}

/// `exp` of a random Lie series without constant term, built from Lyndon brackets of length <= 3.
pub fn random_grouplike<R: rand::Rng>(cap: usize, rng: &mut R) -> TruncSeries {
    let (e0, e1) = (TruncSeries::e0(cap), TruncSeries::e1(cap));
    let mut lie = e0.zero_like();
    for n in 1..=cap.min(3) {
        for w in lyndon_words(n) {
            let c = rng.gen_range(-2i64..=2);
            if c != 0 {
                lie = lie.plus(&lyndon_eval(&w, &e0, &e1).scale(&q(c)));
            }
        }
    }
    lie.exp().expect("no constant term")
}

fn random_p5_alg<R: rand::Rng>(rng: &mut R) -> P5Alg {
    let a = p5_alg(&P5Elem::random(2, rng));
    a.plus(&p5_alg(&P5Elem::random(2, rng)).scale(&q(rng.gen_range(-2i64..=2))))
}

fn random_f2_alg<R: rand::Rng>(rng: &mut R) -> GroupAlgF {
    let a = GroupAlgF::word(&GroupWord::random(Gens::F2, 3, rng));
    a.plus(&GroupAlgF::word(&GroupWord::random(Gens::F2, 3, rng)).scale(&q(rng.gen_range(-2i64..=2))))
}

fn random_series<R: rand::Rng>(cap: usize, rng: &mut R) -> TruncSeries {
    let (e0, e1) = (TruncSeries::e0(cap), TruncSeries::e1(cap));
    let mut s = e0.one_like().scale(&q(rng.gen_range(-1i64..=1)));
    for _ in 0..3 {
        let len = rng.gen_range(1..=2);
        let m = (0..len).fold(e0.one_like(), |m, _| m.times(if rng.gen_bool(0.5) { &e0 } else { &e1 }));
        s = s.plus(&m.scale(&q(rng.gen_range(-2i64..=2))));
    }
    s
}

/// Seeded random checks: circledast associativity, Theta a group morphism, and
/// multiplicativity of the four matrix morphisms; `PROPERTY_CASES` each.
pub const PROPERTY_CASES: usize = 100;

fn properties(ctx: &Context) -> Result<SuiteReport> {
    let mut rep = ctx.report(SuiteName::Properties);
    let cap = ctx.degree.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let series_cases: Vec<[TruncSeries; 3]> =
        (0..PROPERTY_CASES).map(|_| [random_grouplike(cap, &mut rng), random_grouplike(cap, &mut rng), random_grouplike(cap, &mut rng)]).collect();
    let series_results: Vec<Result<(TruncSeries, TruncSeries, TruncSeries, TruncSeries)>> = series_cases
        .par_iter()
        .map(|[g, h, k]| {
            let gh = circledast(g, h)?;
            let assoc = (circledast(&gh, k)?, circledast(g, &circledast(h, k)?)?);
            let th = (theta(&gh)?, circledast(&theta(g)?, &theta(h)?)?);
            Ok((assoc.0, assoc.1, th.0, th.1))
        })
        .collect();
    for (i, r) in series_results.into_iter().enumerate() {
        match r {
            Ok((a, b, c, d)) => {
                rep.compare(format!("circledast associativity, case {i}"), &a, &b);
                rep.compare(format!("Theta morphism, case {i}"), &c, &d);
            }
            Err(e) => rep.fail(format!("case {i}"), e.to_string()),
        }
    }
    let smash: Vec<(SmashElem, SmashElem)> = (0..PROPERTY_CASES).map(|_| (random_smash(Tag::P5, cap, &mut rng), random_smash(Tag::P5, cap, &mut rng))).collect();
    let res: Vec<_> = smash.par_iter().map(|(a, b)| (varpi(&a.times(b)), varpi(a).times(&varpi(b)))).collect();
    for (i, (l, r)) in res.iter().enumerate() {
        rep.compare(format!("varpi multiplicative, case {i}"), l, r);
    }
    let de_rham: Vec<(TruncSeries, TruncSeries)> = (0..PROPERTY_CASES).map(|_| (random_series(cap, &mut rng), random_series(cap, &mut rng))).collect();
    let res: Vec<_> = de_rham.par_iter().map(|(a, b)| (rho(&a.times(b)), rho(a).times(&rho(b)))).collect();
    for (i, (l, r)) in res.iter().enumerate() {
        rep.compare(format!("rho multiplicative, case {i}"), l, r);
    }
    let p5: Vec<(P5Alg, P5Alg)> = (0..PROPERTY_CASES).map(|_| (random_p5_alg(&mut rng), random_p5_alg(&mut rng))).collect();
    let res: Vec<_> = p5.par_iter().map(|(a, b)| (varpi_bar(&a.times(b)), varpi_bar(a).times(&varpi_bar(b)))).collect();
    for (i, (l, r)) in res.iter().enumerate() {
        rep.compare(format!("varpi-bar multiplicative, case {i}"), l, r);
    }
    let betti = BettiRho::new();
    let f2: Vec<(GroupAlgF, GroupAlgF)> = (0..PROPERTY_CASES).map(|_| (random_f2_alg(&mut rng), random_f2_alg(&mut rng))).collect();
    let res: Vec<_> = f2.par_iter().map(|(a, b)| (betti.rho(&a.times(b)), betti.rho(a).times(&betti.rho(b)))).collect();
    for (i, (l, r)) in res.iter().enumerate() {
        rep.compare(format!("rho-bar multiplicative, case {i}"), l, r);
    }
    Ok(rep)
}
