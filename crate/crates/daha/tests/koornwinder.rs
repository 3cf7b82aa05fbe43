use daha::koornwinder::*;
use daha::params::{gen, ParamScalar};
use daha::polyrep::{chi_eval, noumi_t};
use daha::weights::{box_weights, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(v: &[i32]) -> Weight {
    Weight(v.to_vec())
}

fn dominant_upto(n: usize, size: i32) -> Vec<Weight> {
    box_weights(n, size).into_iter().filter(|l| l.is_dominant() && l.0.iter().sum::<i32>() <= size).collect()
}

/// Descent path that always takes the largest index.
fn other_word(l: &Weight) -> Vec<usize> {
    let mut cur = l.clone();
    let mut rev = Vec::new();
    while !cur.is_zero() {
        let i = (0..=cur.n()).rev().find(|&i| cur.branch_sign(i) > 0).unwrap();
        rev.push(i);
        cur = cur.dot(i);
    }
    rev.reverse();
    rev
}

#[test]
fn eigen_monic_triangular_n2() {
    for l in box_weights(2, 2) {
        let e = compute_e(&l, false);
        assert!(e.is_monic(), "{:?}", l);
        assert!(e.is_triangular(), "{:?}", l);
        assert!(e.is_eigen(), "{:?}", l);
    }
}

#[test]
fn eigen_n3() {
    for l in box_weights(3, 1) {
        let e = compute_e(&l, false);
        assert!(e.is_monic() && e.is_triangular() && e.is_eigen(), "{:?}", l);
    }
}

#[test]
fn dual_is_eigen_for_dual_operators() {
    for l in box_weights(2, 1) {
        assert!(compute_e(&l, true).is_eigen(), "{:?}", l);
    }
}

#[test]
fn c_monomial_when_nonpositive() {
    for l in box_weights(2, 2) {
        for i in 0..=2 {
            if l.branch_sign(i) <= 0 {
                let c = c_coeff(i, &l);
                if l.branch_sign(i) == 0 {
                    assert!(c.is_zero());
                } else {
                    let (k, _) = c.as_monomial().expect("monomial");
                    assert_eq!(k, daha::params::rat(1));
                }
            }
        }
    }
}

#[test]
fn n_vanishes_iff_fixed() {
    for l in box_weights(2, 2) {
        for i in 0..=2 {
            assert!(!d_at(i, 1, &l).is_zero());
            assert_eq!(n_at(i, 1, &l).is_zero(), l.dot(i) == l, "{:?} {}", l, i);
        }
    }
}

#[test]
fn c_consistency() {
    for (n, m) in [(2usize, 2i32), (3, 1)] {
        for l in box_weights(n, m) {
            let e = compute_e(&l, false).body;
            for i in 0..=n {
                let lhs = phi_apply(i, &l, &e);
                let rhs = compute_e(&l.dot(i), false).body.scale(&c_coeff(i, &l));
                assert!(lhs.eq_poly(&rhs), "{:?} i={}", l, i);
            }
        }
    }
}

#[test]
fn word_independence() {
    for l in box_weights(2, 2).into_iter().chain(box_weights(3, 1)) {
        let a = l.reduced_word();
        let b = other_word(&l);
        assert_eq!(a.len(), b.len());
        let ea = compute_e_along(&l, &a).unwrap();
        let eb = compute_e_along(&l, &b).unwrap();
        assert!(ea.eq_poly(&eb), "{:?}", l);
    }
}

#[test]
fn t_prime_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..12 {
        let l = w(&[rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        let e = compute_e(&l, false).body;
        for i in 1..=2 {
            let g = if i == 2 { gen::TN } else { gen::T };
            let lhs = noumi_t(i, 1, &e).sub(&e.scale(&ParamScalar::gen_half(g, 1)));
            let rhs = phi_apply(i, &l, &e).sub(&e.scale(&n_at(i, 1, &l).div(&d_at(i, 1, &l))));
            assert!(lhs.eq_poly(&rhs), "{:?} {}", l, i);
        }
    }
}

#[test]
fn chi0_closed_matches_recurrence() {
    for n in 1..=3 {
        for l in dominant_upto(n, 4) {
            assert_eq!(chi0_star_closed(&l).unwrap(), chi0_recurrence(&l), "{:?}", l);
        }
    }
    assert!(chi0_star_closed(&w(&[0, 1])).is_err());
}

#[test]
fn chi0_matches_direct_evaluation() {
    for l in box_weights(2, 2) {
        let direct = chi_eval(&Weight::zero(2), &compute_e(&l, false).body, true);
        assert_eq!(chi0_star(&l), direct, "{:?}", l);
        assert_eq!(chi0_recurrence(&l), direct, "{:?}", l);
    }
}

#[test]
fn chi0_ratio_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..15 {
        let l = w(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]);
        for i in 0..=2 {
            if l.dot(i) == l {
                continue;
            }
            let lhs = chi0_star(&l.dot(i)).div(&chi0_star(&l)).mul(&c_coeff(i, &l));
            assert_eq!(lhs, n_at(i, 1, &l).div(&d_at(i, 1, &l)), "{:?} {}", l, i);
        }
    }
}

#[test]
fn duality() {
    assert!(duality_check(&w(&[0, 0]), &w(&[0, 0])));
    assert!(duality_check(&w(&[1, 0]), &w(&[0, -1])));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let l = w(&[rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        let m = w(&[rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        assert!(duality_check(&l, &m), "{:?} {:?}", l, m);
    }
}
