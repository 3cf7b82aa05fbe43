use daha::params::{gen, named, ParamScalar};
use daha::polyrep::{apply_word, random_laurent, relation_suite, u_n_op, y_op, Op, XLaurent};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn half(g: usize, e: i32) -> ParamScalar {
    ParamScalar::gen_half(g, e)
}

fn inputs(n: usize, count: usize) -> Vec<XLaurent> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..count).map(|_| random_laurent(&mut rng, n, 3, 2, true)).collect()
}

fn suite(n: usize) {
    for (k, f) in inputs(n, 20).iter().enumerate() {
        for (name, ok) in relation_suite(f) {
            assert!(ok, "input {} at n = {}: {} fails", k, n, name);
        }
    }
}

#[test]
fn relations_n2() {
    suite(2);
}

#[test]
fn relations_n3() {
    suite(3);
}

#[test]
fn relation_suite_detects_a_wrong_parameter() {
    // the quadratic relation with t in place of t_0 must fail for T_0
    let f = &inputs(2, 1)[0];
    let tau = half(gen::T, 1);
    let a = daha::polyrep::noumi_t(0, 1, f).add(&f.scale(&tau.inv()));
    let quad = daha::polyrep::noumi_t(0, 1, &a).sub(&a.scale(&tau));
    assert!(!quad.is_zero());
}

#[test]
fn y_commute_and_u_relation() {
    for f in inputs(2, 2) {
        let a = y_op(1, &y_op(2, &f));
        let b = y_op(2, &y_op(1, &f));
        assert_eq!(a, b);
        // q^{-1} Y_1^{-1} U_n^{-1} = U_n Y_1 + q^{-1/2}(u_0^{1/2} - u_0^{-1/2})
        let lhs = apply_word(&[Op::Y(1, -1), Op::U(-1)], &f).scale(&named::q().inv());
        let rhs = u_n_op(1, &y_op(1, &f)).add(&f.scale(&half(gen::Q, -1).mul(&named::half_diff(gen::U0))));
        assert_eq!(lhs, rhs);
    }
}
