//! Replays the irreducibility chain for `t^{k+1} q^{r-1} t_n t_0 = 1` at n = 2 and prints
//! each arrow with its multiplier at `s = 0`.

use daha::repstructure::chains::{verify_arrow_chain, ChainKind, ChainSpec};

fn main() -> daha::Result<()> {
    let kind = std::env::args().nth(1).map_or(Ok(ChainKind::AaIrr), |a| ChainKind::parse(&a))?;
    let cert = verify_arrow_chain(&ChainSpec::new(kind, 2, 2, 0)?)?;
    println!("{}  ({})", cert.chain, cert.spec);
    for seg in &cert.segments {
        println!("{} {} {}", seg.from.lambda, if seg.backward.is_some() { "<->" } else { "->" }, seg.to.lambda);
        for st in seg.forward.iter().flatten() {
            println!("    phi_{}: {} -> {}  c = {}", st.i, st.source.lambda, st.target.lambda, st.c_at_s);
        }
    }
    println!("ok: {}  arrows: {}", cert.ok(), cert.steps());
    Ok(())
}
