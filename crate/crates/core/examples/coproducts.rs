//! The harmonic coproduct on `k<Y>` and its Betti counterpart on `W_l^B`, compared through the
//! associated graded.

use dscop::w_algebras::{gr_class, gr_tensor, xi, YSeries};
use dscop::Ring;

fn main() -> dscop::Result<()> {
    let cap = 4;
    let y = YSeries::parse(cap, "y2.y1")?;
    println!("Delta_*({y}) = {}", y.delta_star());

    let m = xi(1, 1, 2).times(&xi(1, 0, 1));
    let n = 3;
    let betti = m.delta_sharp().to_group();
    println!("Delta_#(xi(+,1|2) xi(+,0|1)) has {} terms", betti.len());
    let gr = gr_class(&m.to_group_alg(), n)?;
    println!("graded class: {gr}");
    println!("gr Delta_#  = {}", gr_tensor(&betti, n)?);
    println!("Delta_* gr  = {}", gr.delta_star().with_cap(n));
    Ok(())
}
