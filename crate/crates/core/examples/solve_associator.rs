//! Solve the associator equations at a given μ and degree, then print Φ, its Γ-function and
//! the residuals of the defining equations.
//!
//! `cargo run --release --example solve_associator -- 1 5`

use dscop::associator::Associator;
use dscop::ring::{fmt_q, parse_q};

fn main() -> dscop::Result<()> {
    let mut args = std::env::args().skip(1);
    let mu = parse_q(&args.next().unwrap_or_else(|| "1".into()))?;
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let a = Associator::solve(&mu, n)?;
    println!("mu = {}, degree {n}", fmt_q(&mu));
    println!("Phi = {}", a.phi);
    println!("Gamma = {}", a.gamma());
    for (name, d) in a.residuals().first_degrees() {
        match d {
            None => println!("{name}: zero through degree {n}"),
            Some(d) => println!("{name}: nonzero in degree {d}"),
        }
    }
    Ok(())
}
