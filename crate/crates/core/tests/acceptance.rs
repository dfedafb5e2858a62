//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! Runs at the default degree 6 with μ = 1 unless `DSCOP_DEGREE` says otherwise.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dscop::braid_lie::{SmashElem, Tag};
use dscop::cli::suites::{run, Context, SuiteName};
use dscop::morphism_lab::suites::{diagram59, diagram71, SuiteReport};
use dscop::morphism_lab::{varpi, varpi_bar_elem, DeRhamRho, Mat3};
use dscop::sphere_braid::{P5Alg, P5Elem};
use dscop::{q, Ring, TensorSeries, TruncSeries};

const SOLVE_BUDGET: Duration = Duration::from_secs(120);
const MAIN_THEOREM_BUDGET: Duration = Duration::from_secs(300);

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let bad: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures.iter().map(move |f| format!("{}: {}", r.suite, f.input)))
        .collect();
    let ok = reports.iter().all(|r| r.passed);
    let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
    let detail = if ok {
        format!("{} checks [{}]", checked, names.join(", "))
    } else {
        format!("{} of {} failed, first {}", bad.len(), checked, bad.first().cloned().unwrap_or_else(|| "setup".into()))
    };
    Outcome { ok, detail }
}

fn suites(ctx: &Context, names: &[SuiteName]) -> Vec<SuiteReport> {
    names.iter().flat_map(|n| run(*n, ctx)).collect()
}

fn timed(o: Outcome, took: Duration, budget: Duration, what: &str) -> Outcome {
    let within = took <= budget;
    Outcome { ok: o.ok && within, detail: format!("{}; {what} {:.1}s (budget {}s)", o.detail, took.as_secs_f64(), budget.as_secs()) }
}

fn displayed_matrices() -> Outcome {
    let c = 4;
    let g = |n: &str| SmashElem::generator(Tag::P5, c, n).unwrap();
    let z = SmashElem::zero(Tag::P5, c);
    let varpi_e12 = Mat3([
        [g("e12").plus(&g("e25")), g("e15").negate(), z.clone()],
        [g("e25").negate(), g("e12").plus(&g("e15")), z.clone()],
        [z.clone(), z.clone(), g("e12")],
    ]);
    let t = |i: u8| TensorSeries::e(c, i);
    let f = |i: u8| TensorSeries::f(c, i);
    let tz = t(0).zero_like();
    let rho_e0 = Mat3([
        [t(0), tz.clone(), tz.clone()],
        [tz.clone(), t(1).negate().plus(&f(0)), t(1).negate()],
        [tz.clone(), t(0).plus(&t(1)).minus(&f(0)), t(0).plus(&t(1))],
    ]);
    let p5 = |s: &str| P5Alg::from_group(&P5Elem::parse(s).unwrap());
    let a = |s: &str| p5(&format!("[1 | {s}]"));
    let pre = p5("[X1 | x15.x25]");
    let one = a("1");
    let pz = one.zero_like();
    let varpi_bar_x12 = Mat3([
        [pre.times(&one.minus(&a("x15.x25^-1.x15^-1")).plus(&a("x25^-1.x15^-1"))), pre.times(&one.minus(&a("x15"))).times(&a("x25^-1")), pz.clone()],
        [pre.times(&a("x25^-1").minus(&one)).times(&a("x15^-1")), p5("[X1 | x15]"), pz.clone()],
        [pz.clone(), pz.clone(), p5("[X1 | 1]")],
    ]);
    let checks = [
        ("varpi(e12)", varpi(&g("e12")) == varpi_e12),
        ("rho(e0)", DeRhamRho::new(c).rho(&TruncSeries::e0(c)) == rho_e0),
        ("varpi-bar(x12)", varpi_bar_elem(&P5Elem::xij(1, 2).unwrap()) == varpi_bar_x12),
    ];
    let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { "3 displays".into() } else { format!("mismatch: {}", bad.join(", ")) } }
}

fn and(a: Outcome, b: Outcome) -> Outcome {
    Outcome { ok: a.ok && b.ok, detail: format!("{}; {}", a.detail, b.detail) }
}

fn main() -> ExitCode {
    let degree = std::env::var("DSCOP_DEGREE").ok().and_then(|s| s.parse().ok()).unwrap_or(6);
    let mu = q(1);
    let ctx = Context::new(degree, mu.clone(), 0, None);
    let mut all_ok = true;
    let mut report = |n: usize, name: &str, o: Outcome| {
        all_ok &= o.ok;
        println!("criterion {n} {:<34} {} ({})", name, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    };

    let t = Instant::now();
    let solved = ctx.associator().map(|_| ());
    let took = t.elapsed();
    let o = match solved {
        Ok(()) => from_reports(&suites(&ctx, &[SuiteName::AssocResiduals])),
        Err(e) => Outcome { ok: false, detail: e.to_string() },
    };
    report(1, "associator residuals and e0.e1", timed(o, took, SOLVE_BUDGET, "solve"));

    report(2, "Gamma identities", from_reports(&suites(&ctx, &[SuiteName::Gamma])));
    report(3, "DMR inclusion", from_reports(&suites(&ctx, &[SuiteName::Dmr])));

    let t = Instant::now();
    let o = from_reports(&suites(&ctx, &[SuiteName::MainTheorem]));
    report(4, "main theorem (CD)", timed(o, t.elapsed(), MAIN_THEOREM_BUDGET, "check"));

    report(5, "gr of Betti coproduct", from_reports(&suites(&ctx, &[SuiteName::GrSharpStar])));
    report(6, "closed forms", from_reports(&[diagram59(9, &mu), diagram71(degree, &mu)]));

    let o = and(displayed_matrices(), from_reports(&suites(&ctx, &[SuiteName::Lemma86, SuiteName::Lemma89, SuiteName::Rowcol])));
    report(7, "matrix lemmas", o);

    let o = from_reports(&suites(&ctx, &[SuiteName::Properties, SuiteName::Fox, SuiteName::PresentationP5, SuiteName::Pbw]));
    report(8, "structural properties", o);

    report(9, "stabilizer / torsor", from_reports(&suites(&ctx, &[SuiteName::Stabilizer])));

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
