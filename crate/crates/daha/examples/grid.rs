//! The `ab`, `ac`, `ad` subrepresentations at n = 2, i = 1, r = 2: the set S, its
//! zeta certificates and the intertwiners that leave it.

use daha::repstructure::grid::{GridCase, GridSpec};

fn main() -> daha::Result<()> {
    for case in [GridCase::Ab, GridCase::Ac, GridCase::Ad] {
        let g = GridSpec::new(case, 2, 1, 2, true, 0)?;
        println!("{}", g.spec);
        let s: Vec<_> = g.s_set_basis(1).iter().map(|l| l.to_string()).collect();
        println!("  S in box 1: {}", s.join(" "));
        let certs = g.zeta_certificates(2, false)?;
        println!("  zeta certificates: {}/{}", certs.iter().filter(|z| z.ok).count(), certs.len());
        for c in g.closure(1)?.iter().filter(|c| c.vanishes) {
            println!("  phi_{} E{} = 0 at s=0", c.j, c.lambda);
        }
    }
    Ok(())
}
