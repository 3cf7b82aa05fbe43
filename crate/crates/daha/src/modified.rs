//! Modified polynomials at a specialization `s`: the data `mt(lambda)`, the rationals
//! `n_{mu lambda}`, `d_{lambda mu}`, the action of modified intertwiners, and arrows.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{DahaError, Result};
use crate::koornwinder::{c_coeff, chi0_star, compute_e, d_at, n_at};
use crate::params::{gen, named, rat, specialize, vanishes_at, zeta_scalar, ParamMonomial, ParamScalar, Rat, SpecPoly, SpecValue};
use crate::polyrep::{y_op, Accum, XLaurent};
use crate::weights::{precedes, Weight};

/// A Laurent polynomial over the specialized field.
pub type SpecLaurent = BTreeMap<Vec<i32>, SpecValue>;

/// `E_lambda + sum m (chi*_0(E_lambda)/chi*_0(E_mu)) E_mu` at a fixed specialization.
#[derive(Clone, Debug)]
pub struct ModPoly {
    pub lambda: Weight,
    /// Sorted by weight, merged, no zero entries.
    pub mt: Vec<(Rat, Weight)>,
    pub spec: SpecPoly,
}

fn normalize_mt(entries: impl IntoIterator<Item = (Rat, Weight)>) -> Vec<(Rat, Weight)> {
    let mut acc: BTreeMap<Weight, Rat> = BTreeMap::new();
    for (m, w) in entries {
        *acc.entry(w).or_insert_with(Rat::zero) += m;
    }
    acc.into_iter().filter(|(_, m)| !m.is_zero()).map(|(w, m)| (m, w)).collect()
}

impl ModPoly {
    pub fn plain(lambda: Weight, spec: &SpecPoly) -> Self {
        ModPoly { lambda, mt: Vec::new(), spec: spec.clone() }
    }

    pub fn new(lambda: Weight, mt: Vec<(Rat, Weight)>, spec: &SpecPoly) -> Result<Self> {
        let mt = normalize_mt(mt);
        for (_, mu) in &mt {
            if *mu == lambda {
                return Err(DahaError::Precondition(format!("{:?} appears in its own modification data", lambda.0)));
            }
            if !same_eigenvalue(&lambda, mu, spec) {
                return Err(DahaError::Precondition(format!(
                    "y({:?}) and y({:?}) differ at s = 0",
                    lambda.0, mu.0
                )));
            }
        }
        Ok(ModPoly { lambda, mt, spec: spec.clone() })
    }

    pub fn m(&self, mu: &Weight) -> Rat {
        self.mt.iter().find(|(_, w)| w == mu).map(|(m, _)| m.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn is_triangular(&self) -> bool {
        self.mt.iter().all(|(_, mu)| precedes(mu, &self.lambda))
    }

    /// Coefficients in the basis `{E_mu}`, leading term first.
    pub fn coefficients(&self) -> Vec<(Weight, ParamScalar)> {
        let top = chi0_star(&self.lambda);
        let mut out = vec![(self.lambda.clone(), ParamScalar::one())];
        for (m, mu) in &self.mt {
            out.push((mu.clone(), top.div(&chi0_star(mu)).scale_rat(m)));
        }
        out
    }

    pub fn expansion(&self) -> XLaurent {
        combine(self.lambda.n(), &self.coefficients())
    }

    pub fn specialized(&self) -> Result<SpecLaurent> {
        specialize_laurent(&self.expansion(), &self.spec)
    }

    pub fn is_specializable(&self) -> bool {
        self.specialized().is_ok()
    }

    pub fn mt_json(&self) -> Value {
        Value::Array(self.mt.iter().map(|(m, w)| json!([m.to_string(), w.0])).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({"lambda": self.lambda.0, "mt": self.mt_json()})
    }
}

/// `r` in `m*r*E_mu` is the ratio `chi*_0(E_lambda)/chi*_0(E_mu)` carried by each term.
impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{:?}", self.lambda.0)?;
        for (m, mu) in &self.mt {
            let sign = if m.is_negative() { "-" } else { "+" };
            let a = m.abs();
            if a.is_one() {
                write!(f, " {} r*E{:?}", sign, mu.0)?;
            } else {
                write!(f, " {} {}*r*E{:?}", sign, a, mu.0)?;
            }
        }
        Ok(())
    }
}

/// `sum c_mu E_mu` as a Laurent polynomial over `K`.
pub fn combine(n: usize, coeffs: &[(Weight, ParamScalar)]) -> XLaurent {
    let mut acc = Accum::new(n);
    for (mu, c) in coeffs {
        acc.push_poly(&compute_e(mu, false).body, Some(c));
    }
    acc.finish()
}

/// Coefficient-wise `|_{s=0}`; fails on the first pole.
pub fn specialize_laurent(f: &XLaurent, s: &SpecPoly) -> Result<SpecLaurent> {
    let mut out = SpecLaurent::new();
    for (e, c) in f.terms() {
        let v = specialize(c, s)?;
        if !v.is_zero() {
            out.insert(e.clone(), v);
        }
    }
    Ok(out)
}

/// `y(lambda)|_{s=0} = y(mu)|_{s=0}`, decided on exponent vectors.
pub fn same_eigenvalue(lambda: &Weight, mu: &Weight, s: &SpecPoly) -> bool {
    let a = lambda.y_monomials(false);
    let b = mu.y_monomials(false);
    a.iter().zip(&b).all(|(x, y)| s.same_monomial(*x, *y))
}

/// Weights in the box `|mu_i| <= window` sharing the specialized eigenvalue of `lambda`.
pub fn eigen_fiber(lambda: &Weight, s: &SpecPoly, window: i32) -> Vec<Weight> {
    crate::weights::box_weights(lambda.n(), window).into_iter().filter(|mu| same_eigenvalue(lambda, mu, s)).collect()
}

/// Binomials `eps x^u - 1` whose product is `D_i` or `N_i` at `lambda` up to a
/// `lambda`-independent constant.
fn binomials(i: usize, lambda: &Weight, numerator: bool) -> Vec<(i32, ParamMonomial)> {
    let n = lambda.n();
    let y = lambda.y_monomials(false);
    let mono = |c: ParamScalar| c.as_monomial().expect("named parameters are monomials");
    // x - w  ~  (sign(w)) (x / |w|) - 1
    let shifted = |x: ParamMonomial, w: ParamScalar| {
        let (k, m) = mono(w);
        (if k.is_negative() { -1 } else { 1 }, x - m)
    };
    match (i, numerator) {
        (0, false) => vec![(1, ParamMonomial::half(gen::Q, 2) + y[0].scale(2))],
        (0, true) => {
            let z = ParamMonomial::half(gen::Q, 1) + y[0];
            let qh = ParamScalar::gen_half(gen::Q, 1);
            vec![shifted(z, qh.mul(&named::c_prime())), shifted(z, qh.mul(&named::d_prime()))]
        }
        (_, false) if i == n => vec![(1, y[n - 1].scale(-2))],
        (_, true) if i == n => {
            let z = -y[n - 1];
            vec![shifted(z, named::a_prime()), shifted(z, named::b_prime())]
        }
        (_, false) => vec![(1, y[i] - y[i - 1])],
        (_, true) => vec![(1, ParamMonomial::half(gen::T, 2) + y[i] - y[i - 1])],
    }
}

/// Multiple `k` with `eps x^u = (x^v)^k` and `eps omega^k = 1`, when the binomial vanishes at `s`.
fn vanishing_multiple(eps: i32, u: ParamMonomial, s: &SpecPoly) -> Option<i64> {
    let (root, rest) = s.reduce_monomial(u);
    if rest != ParamMonomial::ONE {
        return None;
    }
    let val = if eps < 0 { root.to_cyc().neg() } else { root.to_cyc() };
    if val == crate::params::CycNumber::one() {
        Some(u.dot(&s.f))
    } else {
        None
    }
}

/// `X(mu)/X(lambda)|_{s=0}` from the exponent multiples of the vanishing binomials.
fn ratio_by_exponents(i: usize, mu: &Weight, lambda: &Weight, numerator: bool, s: &SpecPoly) -> Result<Rat> {
    let fm = binomials(i, mu, numerator);
    let fl = binomials(i, lambda, numerator);
    let mut out = Rat::one();
    for ((em, um), (el, ul)) in fm.into_iter().zip(fl) {
        match (vanishing_multiple(em, um, s), vanishing_multiple(el, ul, s)) {
            (None, None) => {}
            (Some(a), Some(b)) if b != 0 => out *= Rat::new(a.into(), b.into()),
            _ => {
                return Err(DahaError::Invariant(format!(
                    "binomial factors of {:?} and {:?} disagree at s = 0",
                    mu.0, lambda.0
                )))
            }
        }
    }
    Ok(out)
}

fn as_rational(v: &SpecValue) -> Option<Rat> {
    v.as_constant()?.as_rat()
}

fn ratio(i: usize, mu: &Weight, lambda: &Weight, numerator: bool, s: &SpecPoly) -> Result<Rat> {
    let pre = |w: &Weight| w.dot(i) != *w && same_eigenvalue(mu, lambda, s);
    if !pre(mu) || !pre(lambda) {
        return Err(DahaError::Precondition(format!(
            "ratio needs s_{} to move {:?} and {:?} and equal eigenvalues at s = 0",
            i, mu.0, lambda.0
        )));
    }
    let f = |w: &Weight| if numerator { n_at(i, 1, w) } else { d_at(i, 1, w) };
    let direct = specialize(&f(mu).div(&f(lambda)), s)?;
    let direct = as_rational(&direct)
        .ok_or_else(|| DahaError::Invariant(format!("ratio at {:?}, {:?} is not rational: {}", mu.0, lambda.0, direct)))?;
    let short = ratio_by_exponents(i, mu, lambda, numerator, s)?;
    if direct != short {
        return Err(DahaError::Invariant(format!("ratio paths disagree: {} vs {}", direct, short)));
    }
    Ok(direct)
}

/// `n_{mu lambda} = N_i(mu)/N_i(lambda)|_{s=0}`.
pub fn n_ratio(i: usize, mu: &Weight, lambda: &Weight, s: &SpecPoly) -> Result<Rat> {
    ratio(i, mu, lambda, true, s)
}

/// `d_{lambda mu} = D_i(lambda)/D_i(mu)|_{s=0}`.
pub fn d_ratio(i: usize, lambda: &Weight, mu: &Weight, s: &SpecPoly) -> Result<Rat> {
    ratio(i, lambda, mu, false, s)
}

/// Which branch of the recurrence was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum StepCase {
    /// `D_i(lambda)|_{s=0} != 0`
    Regular,
    /// `D_i(lambda)|_{s=0} = 0`
    Degenerate,
    /// `lambda = s_i . lambda`, acting through a modification term
    Fixed,
}

#[derive(Clone, Debug)]
pub struct Step {
    pub target: ModPoly,
    /// `bar phi_i bar E_source = multiplier * bar E_target` over `K`.
    pub multiplier: ParamScalar,
    pub case: StepCase,
}

/// `bar phi_i` on a modified polynomial with `lambda != s_i . lambda`.
pub fn mod_step(i: usize, p: &ModPoly) -> Result<Step> {
    let lambda = &p.lambda;
    let s = &p.spec;
    if lambda.dot(i) == *lambda {
        return Err(DahaError::Precondition(format!(
            "s_{} fixes {:?}; use mod_step_fixed with a modification term",
            i, lambda.0
        )));
    }
    let moving: Vec<&(Rat, Weight)> = p.mt.iter().filter(|(_, mu)| mu.dot(i) != *mu).collect();
    let target_weight = lambda.dot(i);
    let degenerate = vanishes_at(&d_at(i, 1, lambda), s);
    let mut mt = Vec::new();
    if degenerate {
        mt.push((rat(-1), lambda.clone()));
        for (m, mu) in moving {
            let d = d_ratio(i, lambda, mu, s)?;
            mt.push((&d * m, mu.dot(i)));
            mt.push((-(&d * m), mu.clone()));
        }
    } else {
        for (m, mu) in moving {
            mt.push((n_ratio(i, mu, lambda, s)? * m, mu.dot(i)));
        }
    }
    let target = ModPoly::new(target_weight, mt, s)?;
    let case = if degenerate { StepCase::Degenerate } else { StepCase::Regular };
    Ok(Step { target, multiplier: c_coeff(i, lambda), case })
}

/// `bar phi_i(nu, S_i)` on a modified polynomial with `lambda = s_i . lambda`.
pub fn mod_step_fixed(i: usize, p: &ModPoly, nu: &Weight) -> Result<Step> {
    let lambda = &p.lambda;
    let s = &p.spec;
    if lambda.dot(i) != *lambda {
        return Err(DahaError::Precondition(format!("s_{} moves {:?}", i, lambda.0)));
    }
    if vanishes_at(&d_at(i, 1, lambda), s) {
        return Err(DahaError::Invariant(format!("D_{} vanishes at the fixed weight {:?}", i, lambda.0)));
    }
    let m_nu = p.m(nu);
    if m_nu.is_zero() || nu.dot(i) == *nu {
        return Err(DahaError::Precondition(format!("{:?} is not a moving modification term", nu.0)));
    }
    let mut mt = Vec::new();
    for (m, mu) in p.mt.iter().filter(|(_, mu)| mu.dot(i) != *mu && mu != nu) {
        mt.push((n_ratio(i, mu, nu, s)? * m / &m_nu, mu.dot(i)));
    }
    let target = ModPoly::new(nu.dot(i), mt, s)?;
    let multiplier = c_coeff(i, nu).mul(&chi0_star(lambda).div(&chi0_star(nu))).scale_rat(&m_nu);
    Ok(Step { target, multiplier, case: StepCase::Fixed })
}

/// `bar E_lambda` along the reduced word from `0`.
pub fn build_basis_element(lambda: &Weight, s: &SpecPoly) -> Result<ModPoly> {
    let mut p = ModPoly::plain(Weight::zero(lambda.n()), s);
    for j in lambda.reduced_word() {
        p = mod_step(j, &p)?.target;
    }
    Ok(p)
}

/// Follows an explicit word from a given modified polynomial (cases (i), (ii) only).
pub fn walk(p: &ModPoly, word: &[usize]) -> Result<Vec<Step>> {
    let mut out: Vec<Step> = Vec::new();
    let mut cur = p.clone();
    for &j in word {
        let st = mod_step(j, &cur)?;
        cur = st.target.clone();
        out.push(st);
    }
    Ok(out)
}

/// `(Y_i - y(lambda)_i)^N` kills the specialized expansion for every `i`, `N = 1 + |mt|`.
pub fn check_generalized_eigen(p: &ModPoly) -> bool {
    check_generalized_eigen_with(p, 1 + p.mt.len())
}

pub fn check_generalized_eigen_with(p: &ModPoly, power: usize) -> bool {
    let f = p.expansion();
    let y = p.lambda.y_eigenvalue(false);
    (1..=p.lambda.n()).all(|i| {
        let mut g = f.clone();
        for _ in 0..power {
            g = y_op(i, &g).sub(&g.scale(&y[i - 1]));
        }
        g.terms().values().all(|c| vanishes_at(c, &p.spec))
    })
}

/// Which proposition's hypotheses a candidate arrow satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Hypothesis {
    /// `zeta(N_i) = zeta(D_i) = zeta(c_i) = 0` at the source
    Good,
    /// plain source `s_i . lambda` going to `mu` through a pole of `E_lambda`
    OneToOne,
    /// source `(lambda, (-1, mu))` with `s_i` fixing `lambda`
    TwoToOne,
    /// none of the above; decided by direct computation
    Direct,
}

#[derive(Clone, Debug)]
pub struct ArrowResult {
    pub i: usize,
    pub source: ModPoly,
    pub target: ModPoly,
    /// The multiplier over `K` when the recurrence provides it.
    pub c: Option<ParamScalar>,
    /// `c|_{s=0}`, nonzero.
    pub c_spec: SpecValue,
    pub hypothesis: Hypothesis,
}

#[derive(Clone, Debug)]
pub enum Arrow {
    Yes(Box<ArrowResult>),
    No { i: usize, reason: String },
}

impl Arrow {
    pub fn is_arrow(&self) -> bool {
        matches!(self, Arrow::Yes(_))
    }

    pub fn target(&self) -> Option<&ModPoly> {
        match self {
            Arrow::Yes(a) => Some(&a.target),
            Arrow::No { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Arrow::Yes(a) => json!({
                "arrow": true,
                "i": a.i,
                "source": a.source.to_json(),
                "target": a.target.to_json(),
                "c": a.c.as_ref().map(|c| c.to_string()),
                "c_at_s": a.c_spec.to_string(),
                "hypothesis": a.hypothesis,
            }),
            Arrow::No { i, reason } => json!({"arrow": false, "i": i, "reason": reason}),
        }
    }
}

fn zeta_of(c: &ParamScalar, s: &SpecPoly) -> Option<i32> {
    zeta_scalar(c, s).ok()
}

fn classify(i: usize, p: &ModPoly) -> Hypothesis {
    let s = &p.spec;
    let l = &p.lambda;
    let z = |c: ParamScalar| zeta_of(&c, s);
    if l.dot(i) != *l && z(n_at(i, 1, l)) == Some(0) && z(d_at(i, 1, l)) == Some(0) && z(c_coeff(i, l)) == Some(0) {
        return Hypothesis::Good;
    }
    let chi_gap = |a: &Weight, b: &Weight| Some(z(chi0_star(a))? - z(chi0_star(b))?);
    if p.mt.is_empty()
        && l.branch_sign(i) > 0
        && z(c_coeff(i, l)) == Some(1)
        && z(n_at(i, 1, l)) == Some(0)
        && z(d_at(i, 1, l)) == Some(0)
    {
        return Hypothesis::OneToOne;
    }
    if l.dot(i) == *l && p.mt.len() == 1 && p.mt[0].0 == rat(-1) {
        let mu = &p.mt[0].1;
        if mu.branch_sign(i) > 0
            && z(d_at(i, 1, l)) == Some(0)
            && chi_gap(l, mu) == Some(-1)
            && z(c_coeff(i, mu)) == Some(1)
        {
            return Hypothesis::TwoToOne;
        }
    }
    Hypothesis::Direct
}

fn sv_eq(a: &SpecLaurent, b: &SpecLaurent, c: &SpecValue) -> bool {
    let keys: std::collections::BTreeSet<&Vec<i32>> = a.keys().chain(b.keys()).collect();
    let zero = SpecValue::zero();
    keys.into_iter().all(|k| *a.get(k).unwrap_or(&zero) == b.get(k).unwrap_or(&zero).mul(c))
}

/// Maximal monomials of a specialized polynomial under `precedes`.
fn maximal(f: &SpecLaurent) -> Vec<Weight> {
    let ws: Vec<Weight> = f.keys().map(|e| Weight(e.clone())).collect();
    ws.iter().filter(|a| !ws.iter().any(|b| precedes(a, b))).cloned().collect()
}

/// Decides `(source) -> (target)` under `bar phi_i`, computing the image exactly.
pub fn arrow(i: usize, source: &ModPoly) -> Result<Arrow> {
    let s = &source.spec;
    if source.specialized().is_err() {
        return Err(DahaError::Precondition(format!("source {} has a pole at s = 0", source)));
    }
    let hypothesis = classify(i, source);
    let steps: Vec<Step> = if source.lambda.dot(i) != source.lambda {
        vec![mod_step(i, source)?]
    } else {
        let nus: Vec<Weight> = source.mt.iter().filter(|(_, mu)| mu.dot(i) != *mu).map(|(_, mu)| mu.clone()).collect();
        if nus.is_empty() {
            return Ok(Arrow::No { i, reason: format!("s_{} fixes {:?} and no modification term moves", i, source.lambda.0) });
        }
        nus.iter().map(|nu| mod_step_fixed(i, source, nu)).collect::<Result<_>>()?
    };
    let mut reason = String::new();
    for st in steps {
        let image: Vec<(Weight, ParamScalar)> =
            st.target.coefficients().into_iter().map(|(w, c)| (w, c.mul(&st.multiplier))).collect();
        if zeta_of(&st.multiplier, s) == Some(0) {
            if let Ok(_t) = st.target.specialized() {
                let c_spec = specialize(&st.multiplier, s)?;
                return Ok(Arrow::Yes(Box::new(ArrowResult {
                    i,
                    source: source.clone(),
                    target: st.target,
                    c: Some(st.multiplier),
                    c_spec,
                    hypothesis,
                })));
            }
        }
        let img = specialize_laurent(&combine(source.lambda.n(), &image), s)
            .map_err(|_| DahaError::Invariant(format!("image of {} under phi_{} has a pole", source, i)))?;
        if img.is_empty() {
            reason = format!("phi_{} kills {} at s = 0", i, source);
            continue;
        }
        let tops = maximal(&img);
        if tops.len() != 1 {
            reason = format!("image has {} maximal monomials", tops.len());
            continue;
        }
        let top = &tops[0];
        let plain = ModPoly::plain(top.clone(), s);
        let Ok(tspec) = plain.specialized() else {
            reason = format!("E{:?} has a pole at s = 0", top.0);
            continue;
        };
        let c_spec = img[&top.0].clone();
        if sv_eq(&img, &tspec, &c_spec) {
            return Ok(Arrow::Yes(Box::new(ArrowResult { i, source: source.clone(), target: plain, c: None, c_spec, hypothesis })));
        }
        reason = format!("image is not a multiple of E{:?} at s = 0", top.0);
    }
    Ok(Arrow::No { i, reason })
}
