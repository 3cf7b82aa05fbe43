use daha::params::{catalog, rat, specialize, zeta_scalar, ParamMonomial, ParamScalar, SpecPoly, NGEN};
use daha::polyrep::{noumi_t, relation_suite, XLaurent};
use daha::weights::Weight;
use proptest::prelude::*;

fn specs() -> Vec<SpecPoly> {
    catalog(2, 3)
}

fn mono() -> impl Strategy<Value = ParamMonomial> {
    prop::array::uniform6(-3i32..=3).prop_map(ParamMonomial)
}

/// `c x^m prod (x^{b_j} - 1)`; a `None` exponent stands for a power of the binomial's own `v`.
#[derive(Clone, Debug)]
struct Shape {
    c: i64,
    m: [i32; NGEN],
    factors: Vec<(Option<(usize, i32)>, i32)>,
}

fn shape() -> impl Strategy<Value = Shape> {
    let factor = (prop::option::of((0..NGEN, 1i32..=3)), 1i32..=3);
    (1i64..=5, prop::array::uniform6(-2i32..=2), prop::collection::vec(factor, 0..=2)).prop_map(|(c, m, factors)| Shape { c, m, factors })
}

fn build(sh: &Shape, s: &SpecPoly) -> ParamScalar {
    let mut out = ParamScalar::monomial(rat(sh.c), ParamMonomial(sh.m));
    for (f, k) in &sh.factors {
        let b = match f {
            Some((g, e)) => ParamMonomial::half(*g, *e),
            None => s.v.scale(*k),
        };
        out = out.mul(&ParamScalar::binomial(b));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zeta_is_additive(idx in 0usize..1000, a in shape(), b in shape()) {
        let all = specs();
        let s = &all[idx % all.len()];
        let (x, y) = (build(&a, s), build(&b, s));
        prop_assert_eq!(zeta_scalar(&x.mul(&y), s).unwrap(), zeta_scalar(&x, s).unwrap() + zeta_scalar(&y, s).unwrap());
        prop_assert_eq!(zeta_scalar(&x.inv(), s).unwrap(), -zeta_scalar(&x, s).unwrap());
    }

    #[test]
    fn specialize_is_a_homomorphism(idx in 0usize..1000, a in shape(), b in shape()) {
        let all = specs();
        let s = &all[idx % all.len()];
        let (x, y) = (build(&a, s), build(&b, s));
        let (sx, sy) = (specialize(&x, s).unwrap(), specialize(&y, s).unwrap());
        prop_assert_eq!(specialize(&x.mul(&y), s).unwrap(), sx.mul(&sy));
        let sum = x.add(&y);
        if !sum.is_zero() {
            prop_assert_eq!(specialize(&sum, s).unwrap(), sx.add(&sy));
        }
    }

    #[test]
    fn monomials_specializing_to_one_are_powers(idx in 0usize..1000, k in -6i32..=6, u in mono(), shift in any::<bool>()) {
        let all = specs();
        let s = &all[idx % all.len()];
        let z = if shift { s.v.scale(k) + u } else { s.v.scale(k) };
        let one = specialize(&ParamScalar::mono(z), s).unwrap().is_one();
        let ord = s.order() as i32;
        let power = (-40..=40).any(|j: i32| j % ord == 0 && z == s.v.scale(j));
        prop_assert_eq!(one, power);
    }

    #[test]
    fn monomial_group_laws(a in mono(), b in mono()) {
        prop_assert_eq!(a + b - b, a);
        prop_assert_eq!(a + (-a), ParamMonomial::ONE);
        prop_assert_eq!(a.dual().dual(), a);
        prop_assert_eq!((a + b).dual(), a.dual() + b.dual());
    }

    #[test]
    fn dual_is_an_involution(a in shape()) {
        let s = &specs()[0];
        let x = build(&a, s);
        prop_assert_eq!(x.dual().dual(), x.clone());
        prop_assert_eq!(x.mul(&x.inv()), ParamScalar::one());
    }

    #[test]
    fn dot_action_is_involutive(v in prop::collection::vec(-5i32..=5, 2..=4), i in 0usize..5) {
        let l = Weight(v);
        let i = i % (l.n() + 1);
        prop_assert_eq!(l.dot(i).dot(i), l);
    }

    #[test]
    fn reduced_word_reaches_lambda(v in prop::collection::vec(-4i32..=4, 2..=4)) {
        let l = Weight(v);
        let word = l.reduced_word();
        let end = word.iter().fold(Weight::zero(l.n()), |a, &i| a.dot(i));
        prop_assert_eq!(end, l);
    }

    #[test]
    fn weight_data_is_consistent(v in prop::collection::vec(-6i32..=6, 2..=4)) {
        let l = Weight(v);
        let d = l.data();
        prop_assert!(Weight(d.plus.0.clone()).is_dominant());
        let mut abs: Vec<i32> = l.0.iter().map(|x| x.abs()).collect();
        abs.sort_by(|a, b| b.cmp(a));
        prop_assert_eq!(&d.plus.0, &abs);
        prop_assert!(l.lambda_zero().0.iter().all(|&x| x >= 0));
        let mut a = l.lambda_zero().0;
        a.sort_by(|x, y| y.cmp(x));
        prop_assert_eq!(a, abs);
    }

    #[test]
    fn quotient_data(v in prop::collection::vec(-9i32..=9, 2..=4), r in 2i32..=4) {
        let l = Weight(v);
        let (q, std) = l.quotient(r);
        prop_assert!(q.0.windows(2).all(|w| w[0] >= w[1]) && q.0.iter().all(|&x| x >= 0));
        prop_assert!(std.is_dominant());
        prop_assert_eq!(std.quotient(r).0, q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn operator_relations_n2(terms in prop::collection::vec((prop::collection::vec(-2i32..=2, 2), 1i64..=4, mono()), 1..=3)) {
        let f = XLaurent::from_terms(2, terms.into_iter().map(|(e, c, m)| (e, ParamScalar::monomial(rat(c), m))));
        for i in 0..=2 {
            prop_assert_eq!(noumi_t(i, 1, &noumi_t(i, -1, &f)), f.clone());
        }
        for (name, ok) in relation_suite(&f) {
            prop_assert!(ok, "{}", name);
        }
    }
}
