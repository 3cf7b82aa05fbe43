//! `q^{r-1} = 1`: quotient, standard form, arrow table, connectivity and fiber map.

use daha::repstructure::qlattice::{q_spec, quotient_lattice};
use daha::weights::Weight;

fn main() -> daha::Result<()> {
    let s = q_spec(4, 4, 0)?;
    let rep = quotient_lattice(&Weight(vec![-3, 0, -9, 13]), 4, &s)?;
    println!("quotient {}  standard {}  fiber {}", rep.quot, rep.std, rep.fiber);
    for a in &rep.arrows {
        println!("  s{}: {} {} (quotient {})", a.i, a.arrow.symbol(), a.target, a.target_quot);
    }
    let ms: Vec<_> = rep.milestones.iter().map(|m| m.to_string()).collect();
    println!("milestones {}", ms.join(" <-> "));
    println!("{} moves, connected {}", rep.path.len(), rep.connected);
    Ok(())
}
