//! An associator satisfies the double shuffle conditions, and the ⊛-quotient of two
//! associators with the same μ stabilizes the harmonic coproduct.

use dscop::associator::{solve_associator, Associator, FreeChoice};
use dscop::q;
use dscop::racinet::{circledast, circledast_inv, dmr_check, stabilizer_check};

fn main() -> dscop::Result<()> {
    let n = 5;
    let a = Associator::solve(&q(1), n)?;
    let report = dmr_check(&a.phi, &a.mu)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    let mut choice = FreeChoice::new();
    choice.entry(3).or_default().insert("011".into(), q(1));
    let b = solve_associator(&a.mu, n, &choice)?;
    let g = circledast(&b.phi, &circledast_inv(&a.phi)?)?;
    println!("g = {g}");
    println!("g stabilizes the harmonic coproduct: {}", stabilizer_check(&g)?.ok);
    Ok(())
}
