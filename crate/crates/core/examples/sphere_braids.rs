//! The semidirect model of the sphere braid group: defining relations, the projection table,
//! and Fox decomposition in the free group.

use dscop::freegrp::{Gens, Group, GroupAlgF, GroupWord};
use dscop::sphere_braid::{pr_table, presentation_relators, P5Elem, TABLE_COLUMNS};

fn main() -> dscop::Result<()> {
    for (name, r) in presentation_relators() {
        println!("{name}: {}", if r.is_identity() { "holds" } else { "FAILS" });
    }
    for (i, row) in pr_table() {
        let cells: Vec<String> = TABLE_COLUMNS.iter().zip(row).map(|((a, b), w)| format!("x{a}{b}->{w}")).collect();
        println!("pr{i}: {}", cells.join("  "));
    }
    let g = P5Elem::parse("[X0.X1 | x15^-1.x25]")?;
    let h = P5Elem::xij(3, 4)?;
    println!("{g} * {h} = {}", g.mul(&h));

    let w = GroupWord::parse(Gens::F3, "x15.x25^-1.x35^2")?;
    for (i, d) in GroupAlgF::fox_word(&w).iter().enumerate() {
        println!("d_{i}({w}) = {d}");
    }
    Ok(())
}
