use daha::koornwinder::{chi0_star, compute_e};
use daha::modified::specialize_laurent;
use daha::params::zeta_scalar;
use daha::polyrep::{apply, random_laurent, Op, XLaurent};
use daha::repstructure::chains::{ChainKind, ChainSpec};
use daha::repstructure::grid::{GridCase, GridSpec};
use daha::repstructure::qlattice::*;
use daha::repstructure::wheel::*;
use daha::weights::{box_weights, Partition, Weight};
use daha::DahaError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(v: &[i32]) -> Weight {
    Weight(v.to_vec())
}

fn wheel22() -> WheelSpec {
    WheelSpec::new(2, 1, 2, 1, 0).unwrap()
}

#[test]
fn admissible_elements_satisfy_wheel_condition() {
    let ws = wheel22();
    let rep = admissible_report(&ws, 2).unwrap();
    assert_eq!(rep.len(), 9);
    for e in rep {
        assert!(e.ok(2, 2), "{}", e.to_json());
    }
}

#[test]
fn zeta_formula_matches_evaluation_everywhere() {
    let ws = wheel22();
    for l in box_weights(2, 2) {
        let z = zeta_scalar(&chi0_star(&l), &ws.spec).unwrap();
        assert_eq!(wheel_zeta_formula(&l, 1, 2), z, "{:?}", l);
    }
}

#[test]
fn neighborhoods_reduce_to_nonnegative_representative() {
    for l in box_weights(3, 2) {
        for (a, b) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            assert_eq!(l.neighborhoods(a, b), neighborhoods_nonneg(&l.lambda_zero(), a, b), "{:?} ({}, {})", l, a, b);
        }
    }
}

#[test]
fn level_one_product_is_e10() {
    let ws = wheel22();
    let p = specialize_laurent(&level1_product(2, 1, 2).unwrap(), &ws.spec).unwrap();
    let e = specialize_laurent(&compute_e(&w(&[1, 0]), false).body, &ws.spec).unwrap();
    assert_eq!(p, e);
    assert!(wheel_check(&p, &ws));
    assert!(wheel_check_direct(&p, &ws));
}

#[test]
fn constant_is_not_in_wheel_ideal() {
    let ws = wheel22();
    let one = specialize_laurent(&XLaurent::one(2), &ws.spec).unwrap();
    assert_eq!(wheel_violation(&one, &ws), Some(w(&[-2, -2])));
    assert!(!wheel_check_direct(&one, &ws));
}

#[test]
fn ideal_closed_under_t() {
    let ws = wheel22();
    for l in admissible_basis(2, 2, 1, 2) {
        let e = compute_e(&l, false).body;
        for i in 0..=2 {
            let f = specialize_laurent(&apply(Op::T(i, 1), &e), &ws.spec).unwrap();
            assert!(wheel_check(&f, &ws), "T{} E{:?}", i, l);
        }
    }
}

#[test]
fn grid_and_direct_checkers_agree_n3() {
    let ws = WheelSpec::new(3, 1, 2, 1, 0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let g = random_laurent(&mut rng, 3, 3, 1, false);
    let f = level1_product(3, 1, 3).unwrap().mul(&g);
    let sf = specialize_laurent(&f, &ws.spec).unwrap();
    assert!(wheel_check(&sf, &ws));
    assert!(wheel_check_direct(&sf, &ws));
    let sg = specialize_laurent(&g, &ws.spec).unwrap();
    assert!(!wheel_check(&sg, &ws));
    assert!(!wheel_check_direct(&sg, &ws));
}

#[test]
fn wheel_spec_ranges() {
    assert!(matches!(WheelSpec::new(2, 0, 2, 1, 0), Err(DahaError::Param(_))));
    assert!(matches!(WheelSpec::new(2, 1, 2, 2, 0), Err(DahaError::Param(_))));
    assert!(matches!(level1_product(3, 1, 2), Err(DahaError::Param(_))));
    assert_eq!(level1_weight(2, 2), w(&[1, 0, 1, 0]));
}

fn grid(case: GridCase) -> GridSpec {
    GridSpec::new(case, 2, 1, 2, true, 0).unwrap()
}

#[test]
fn s_basis_vanishes_on_complement() {
    for case in [GridCase::Ab, GridCase::Ac, GridCase::Ad] {
        let g = grid(case);
        for l in g.s_set_basis(2) {
            let f = specialize_laurent(&compute_e(&l, false).body, &g.spec).unwrap();
            assert_eq!(g.violation(&f).unwrap(), None, "{:?} {:?}", case, l);
        }
        let one = specialize_laurent(&XLaurent::one(2), &g.spec).unwrap();
        assert!(!g.grid_member(&one).unwrap());
    }
}

#[test]
fn zeta_certificates_and_closure() {
    for case in [GridCase::Ab, GridCase::Ac, GridCase::Ad] {
        let g = grid(case);
        assert!(g.zeta_certificates(3, false).unwrap().iter().all(|z| z.ok), "{:?}", case);
        assert!(g.closure(2).unwrap().iter().all(|c| c.ok()), "{:?}", case);
        assert_eq!(g.fibers_are_singletons(3), None);
    }
}

#[test]
fn printed_sign_condition_differs_for_ac_ad() {
    for case in [GridCase::Ac, GridCase::Ad] {
        let g = grid(case);
        let bad: Vec<_> = g.zeta_certificates(2, true).unwrap().into_iter().filter(|z| !z.ok).map(|z| z.lambda).collect();
        assert_eq!(bad, vec![w(&[-1, 1]), w(&[0, 1]), w(&[1, -1]), w(&[1, 0]), w(&[1, 1])]);
        // phi_n never vanishes on the boundary; phi_0 does exactly where the set is left
        assert!(g.phi_n_boundary(2).unwrap().iter().all(|c| !c.vanishes));
        assert!(g.phi_0_boundary(2).unwrap().iter().all(|c| c.ok()));
    }
    assert!(grid(GridCase::Ab).zeta_certificates(3, true).unwrap().iter().all(|z| z.ok));
}

#[test]
fn minus_branch_is_unsupported() {
    let g = GridSpec::new(GridCase::Ac, 2, 1, 2, false, 0).unwrap();
    let one = specialize_laurent(&XLaurent::one(2), &g.spec).unwrap();
    assert!(matches!(g.grid_member(&one), Err(DahaError::Precondition(_))));
}

#[test]
fn quotient_example() {
    let s = q_spec(4, 4, 0).unwrap();
    let rep = quotient_lattice(&w(&[-3, 0, -9, 13]), 4, &s).unwrap();
    assert_eq!(rep.order, vec![4, 3, 1, 2]);
    assert_eq!(rep.p, vec![1, 2, 0, 0]);
    assert_eq!(rep.quot, Partition(vec![3, 2, 0, 0]));
    assert_eq!(rep.std, w(&[9, 6, 0, 0]));
    assert_eq!(rep.fiber, w(&[-3, 0, -3, 4]));
    assert!(rep.fiber_ok && rep.connected);
    for m in [w(&[8, 2, 0, 13]), w(&[12, 8, 2, 0])] {
        assert!(rep.milestones.contains(&m), "{:?}", m);
    }
    for (i, row) in rep.arrows.iter().enumerate() {
        assert!(row.consistent(), "s{}", i);
        assert_eq!(row.arrow, QArrow::Both, "s{}", i);
    }
}

#[test]
fn classification_sweeps() {
    for (n, r, window) in [(2, 3, 4), (3, 3, 2)] {
        let s = q_spec(n, r, 0).unwrap();
        let bad = q_arrows_sweep(n, r, window, &s).unwrap();
        assert!(bad.is_empty(), "{:?}", bad.iter().map(|b| b.to_json()).collect::<Vec<_>>());
    }
}

#[test]
fn inclusions_follow_fundamental_weight_order() {
    let s = q_spec(2, 3, 0).unwrap();
    assert!(inclusion_mismatches(2, 3, 4, &s).unwrap().is_empty());
    assert!(!varpi_geq(&Partition(vec![2, 0]), &Partition(vec![1, 1])));
    assert!(!varpi_geq(&Partition(vec![1, 1]), &Partition(vec![2, 0])));
}

#[test]
fn fibers_have_distinct_eigenvalues() {
    let s = q_spec(2, 3, 0).unwrap();
    assert_eq!(fiber_collision(2, 3, 6, &s), None);
}

#[test]
fn chain_arguments() {
    assert!(ChainKind::parse("tq").is_err());
    assert_eq!(ChainKind::parse("aa-irr").unwrap(), ChainKind::AaIrr);
    assert!(matches!(ChainSpec::new(ChainKind::TqIrr, 3, 2, 0), Err(DahaError::Param(_))));
    let c = ChainSpec::new(ChainKind::AaIrr, 2, 2, 0).unwrap();
    assert_eq!(c.k, -1);
    assert_eq!(c.links.len(), 6);
}
