//! The matrix morphisms of the comparison: displayed values, closed forms, and the scalar
//! identities relating the two sides at a solved associator.

use dscop::associator::Associator;
use dscop::braid_lie::{SmashElem, Tag};
use dscop::morphism_lab::{lemma53_closed_form, rho, rho_tilde, varpi, varpi_bar_elem, BettiRho, Comparison};
use dscop::freegrp::{Gens, GroupAlgF, GroupWord};
use dscop::sphere_braid::P5Elem;
use dscop::{q, Ring, TruncSeries};

fn main() -> dscop::Result<()> {
    let cap = 3;
    println!("varpi(e12) =\n{}", varpi(&SmashElem::generator(Tag::P5, cap, "e12")?));
    println!("rho(e0) =\n{}", rho(&TruncSeries::e0(cap)));
    println!("varpi-bar(x12) =\n{}", varpi_bar_elem(&P5Elem::xij(1, 2)?));

    let e0 = TruncSeries::e0(cap);
    let e02 = e0.times(&e0);
    println!("rho~(e0^2) = {}", rho_tilde(&e02));
    println!("closed form = {}", lemma53_closed_form(2, cap));
    let x0 = GroupAlgF::word(&GroupWord::gen_pow(Gens::F2, 0, 2));
    println!("rho-bar~(X0^2) = {}", BettiRho::new().rho_tilde(&x0));

    let a = Associator::solve(&q(1), 4)?;
    let c = Comparison::new(&a.mu, &a.phi)?;
    println!("kappa = {}", c.kappa());
    for l in c.lemma89().into_iter().chain([c.lemma86()]).chain(c.row_col()?) {
        println!("{:<24} {}", l.name, if l.ok { "holds" } else { "FAILS" });
    }
    Ok(())
}
