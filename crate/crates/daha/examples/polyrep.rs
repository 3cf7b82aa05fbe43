//! The polynomial representation: Noumi operators and the algebra relations they satisfy.

use daha::polyrep::{apply, random_laurent, relation_suite, y_op, Op, XLaurent};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let x1 = XLaurent::x(2, 1, 1);
    println!("T0 x1 = {}", apply(Op::T(0, 1), &x1));
    println!("Y1 1  = {}", y_op(1, &XLaurent::one(2)));

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let f = random_laurent(&mut rng, 3, 3, 2, true);
    println!("f = {}", f);
    for (name, ok) in relation_suite(&f) {
        println!("  {:<60} {}", name, if ok { "ok" } else { "FAILS" });
    }
}
