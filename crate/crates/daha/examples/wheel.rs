//! Wheel conditions at `t^2 q = 1`: admissible basis, the level-one product, and a
//! polynomial outside the ideal.

use daha::koornwinder::compute_e;
use daha::modified::specialize_laurent;
use daha::polyrep::XLaurent;
use daha::repstructure::wheel::{admissible_report, level1_product, wheel_check, wheel_check_direct, wheel_violation, WheelSpec};
use daha::weights::Weight;

fn main() -> daha::Result<()> {
    let w = WheelSpec::new(2, 1, 2, 1, 0)?;
    for e in admissible_report(&w, 1)? {
        println!("{}", e.to_json());
    }
    let p = specialize_laurent(&level1_product(2, 1, 2)?, &w.spec)?;
    let e10 = specialize_laurent(&compute_e(&Weight(vec![1, 0]), false).body, &w.spec)?;
    println!("level-one product = E(1,0) at s=0: {}", p == e10);
    println!("grid check {}  direct check {}", wheel_check(&p, &w), wheel_check_direct(&p, &w));
    let one = specialize_laurent(&XLaurent::one(2), &w.spec)?;
    println!("1 violates the condition at {:?}", wheel_violation(&one, &w));
    Ok(())
}
