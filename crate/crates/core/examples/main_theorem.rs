//! Solve an associator at degree N and check that the main diagram commutes on every
//! ξ-monomial of weight at most N.
//!
//! `cargo run --release --example main_theorem -- 6`

use std::time::Instant;

use dscop::associator::Associator;
use dscop::morphism_lab::main_theorem_check;
use dscop::q;

fn main() -> dscop::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let t = Instant::now();
    let a = Associator::solve(&q(1), n)?;
    println!("solved degree {n} in {:.1?}", t.elapsed());
    let t = Instant::now();
    let rep = main_theorem_check(&a.mu, &a.phi)?;
    println!("diagram checked on {} monomials in {:.1?}: {}", rep.checked, t.elapsed(), if rep.passed { "commutes" } else { "FAILS" });
    for f in rep.failures.iter().take(3) {
        println!("  first failure at {}", f.input);
    }
    Ok(())
}
