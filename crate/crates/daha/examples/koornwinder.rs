//! Non-symmetric Koornwinder polynomials: build `E_lambda`, check its eigenvalues, and
//! compare the evaluation formula with direct evaluation.

use daha::koornwinder::{chi0_star, compute_e, duality_check};
use daha::polyrep::chi_eval;
use daha::weights::Weight;

fn main() {
    let l = Weight(vec![0, -1]);
    let e = compute_e(&l, false);
    println!("E{} = {}", l, e.body);
    println!("monic {}  triangular {}  eigenvector {}", e.is_monic(), e.is_triangular(), e.is_eigen());
    let direct = chi_eval(&Weight::zero(2), &e.body, true);
    println!("chi*_0 formula = direct evaluation: {}", chi0_star(&l) == direct);
    println!("duality at ((0,-1), (1,0)): {}", duality_check(&l, &Weight(vec![1, 0])));
}
