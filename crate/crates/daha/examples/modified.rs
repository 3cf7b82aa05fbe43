//! Modified polynomials at `t^2 q = 1`, n = 4: the three steps from (0,1,0,1).

use daha::modified::{arrow, check_generalized_eigen, mod_step, ModPoly};
use daha::params::{spec_branch, Family};
use daha::weights::Weight;

fn main() -> daha::Result<()> {
    let s = spec_branch(4, Family::Tq { k: 1, r: 2 }, 0)?;
    println!("s = {}", s);
    let mut p = ModPoly::plain(Weight(vec![0, 1, 0, 1]), &s);
    for i in [3, 1, 2] {
        let st = mod_step(i, &p)?;
        p = st.target;
        println!("s{}: {:?} case, {}  generalized eigenvector: {}", i, st.case, p, check_generalized_eigen(&p));
    }
    let two = spec_branch(2, Family::Tq { k: 1, r: 2 }, 0)?;
    let a = arrow(1, &ModPoly::plain(Weight(vec![1, 0]), &two))?;
    println!("bar phi_1 on E(1,0) at n=2: {}", a.to_json());
    Ok(())
}
