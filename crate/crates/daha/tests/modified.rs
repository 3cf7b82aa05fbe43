use daha::modified::*;
use daha::params::{catalog, rat, spec_branch, specialize, Family, ParamMonomial, ParamScalar, SpecPoly};
use daha::weights::{box_weights, Weight};

fn w(v: &[i32]) -> Weight {
    Weight(v.to_vec())
}

/// A factor of `t^2 q - 1`.
fn t2q(n: usize) -> SpecPoly {
    spec_branch(n, Family::Tq { k: 1, r: 2 }, 0).unwrap()
}

#[test]
fn binomial_quotient_at_root() {
    let s = spec_branch(2, Family::Tq { k: 1, r: 2 }, 1).unwrap();
    assert_eq!(s.order(), 2);
    let z2 = s.v.scale(2);
    let c = ParamScalar::binomial(z2.scale(2)).div(&ParamScalar::binomial(z2));
    let v = specialize(&c, &s).unwrap();
    assert_eq!(v.as_monomial().unwrap().0.as_rat(), Some(rat(2)));
    assert_eq!(v.as_monomial().unwrap().1, ParamMonomial::ONE);
}

#[test]
fn n_ratio_is_one_when_nonvanishing() {
    let s = t2q(2);
    let l = w(&[1, 0]);
    for mu in eigen_fiber(&l, &s, 3) {
        if mu.dot(1) != mu && !daha::params::vanishes_at(&daha::koornwinder::n_at(1, 1, &l), &s) {
            assert_eq!(n_ratio(1, &mu, &l, &s).unwrap(), rat(1));
        }
    }
}

#[test]
fn three_step_chain_n4() {
    let s = t2q(4);
    let l = w(&[0, 1, 0, 1]);
    let e = ModPoly::plain(l.clone(), &s);
    assert!(e.is_specializable());

    let st3 = mod_step(3, &e).unwrap();
    assert_eq!(st3.case, StepCase::Degenerate);
    assert_eq!(st3.multiplier, ParamScalar::gen_half(daha::params::gen::T, 1));
    assert_eq!(st3.target.lambda, w(&[0, 1, 1, 0]));
    assert_eq!(st3.target.mt, vec![(rat(-1), l.clone())]);
    assert!(st3.target.is_specializable());

    let st1 = mod_step(1, &st3.target).unwrap();
    assert_eq!(st1.case, StepCase::Degenerate);
    assert_eq!(st1.target.lambda, w(&[1, 0, 1, 0]));
    let mut expect = vec![(rat(-1), w(&[0, 1, 1, 0])), (rat(-1), w(&[1, 0, 0, 1])), (rat(1), l.clone())];
    expect.sort_by(|a, b| a.1.cmp(&b.1));
    assert_eq!(st1.target.mt, expect);
    assert!(st1.target.is_specializable());

    let st2 = mod_step(2, &st1.target).unwrap();
    assert_eq!(st2.case, StepCase::Regular);
    assert_eq!(st2.target.lambda, w(&[1, 1, 0, 0]));
    assert_eq!(st2.target.mt, vec![(rat(-1), w(&[0, 0, 1, 1]))]);
    assert!(st2.target.is_specializable());
}

#[test]
fn strict_generalized_eigenvector() {
    let s = t2q(4);
    let e = ModPoly::plain(w(&[0, 1, 0, 1]), &s);
    let p = mod_step(3, &e).unwrap().target;
    assert!(check_generalized_eigen_with(&p, 2));
    assert!(!check_generalized_eigen_with(&p, 1));
    assert!(check_generalized_eigen(&ModPoly::plain(w(&[0, 1, 0, 1]), &s)));
}

#[test]
fn basis_elements_n2_catalog() {
    for s in catalog(2, 2) {
        let mut leads = Vec::new();
        for l in box_weights(2, 1) {
            let p = build_basis_element(&l, &s).unwrap_or_else(|e| panic!("{} {:?}: {}", s, l, e));
            assert!(p.is_triangular(), "{} {}", s, p);
            let sp = p.specialized().unwrap_or_else(|e| panic!("{} {}: {}", s, p, e));
            assert!(sp[&l.0].is_one());
            assert!(check_generalized_eigen(&p), "{} {}", s, p);
            if p.mt.is_empty() {
                assert!(ModPoly::plain(l.clone(), &s).is_specializable());
            }
            leads.push(l);
        }
        leads.dedup();
        assert_eq!(leads.len(), 9);
    }
}

#[test]
fn no_arrow_across_wheel_border() {
    // k + 1 = 2, r - 1 = 1 at n = 2: (1,0) is admissible, s_1 . (1,0) = (0,1) is not
    let s = t2q(2);
    let a = arrow(1, &ModPoly::plain(w(&[1, 0]), &s)).unwrap();
    assert!(!a.is_arrow(), "{:?}", a.to_json());
}

#[test]
fn good_arrow_carries_data() {
    let s = t2q(2);
    let src = ModPoly::plain(w(&[0, 0]), &s);
    let a = arrow(0, &src).unwrap();
    match a {
        Arrow::Yes(r) => {
            assert_eq!(r.target.lambda, w(&[-1, 0]));
            assert_eq!(r.hypothesis, Hypothesis::Good);
        }
        Arrow::No { reason, .. } => panic!("{}", reason),
    }
}
