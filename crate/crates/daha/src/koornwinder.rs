//! Non-symmetric Koornwinder polynomials, built from `E_0 = 1` by the intertwiners.

use std::num::NonZeroUsize;
use std::sync::{Arc, Mutex, OnceLock};

use lru::LruCache;
use serde_json::{json, Value};

use crate::error::{DahaError, Result};
use crate::params::{gen, named, ParamScalar};
use crate::polyrep::{chi_eval, noumi_t, y_op, XLaurent};
use crate::weights::{precedes, Weight};

/// Environment variable bounding the number of memoized polynomials.
pub const MEMO_ENV: &str = "DAHA_MEMO_CAPACITY";
const DEFAULT_CAPACITY: usize = 4096;

#[derive(Clone, Debug)]
pub struct KoornwinderPoly {
    pub lambda: Weight,
    pub body: XLaurent,
    pub dual: bool,
}

impl KoornwinderPoly {
    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn is_monic(&self) -> bool {
        self.body.coeff(&self.lambda.0).is_one()
    }

    /// Every monomial other than `x^lambda` lies strictly below `lambda`.
    pub fn is_triangular(&self) -> bool {
        self.body.support().all(|e| *e == self.lambda.0 || precedes(&Weight(e.clone()), &self.lambda))
    }

    /// `Y_i E = y(lambda)_i E` for every `i`, checked exactly.
    pub fn is_eigen(&self) -> bool {
        let f = if self.dual { self.body.dual() } else { self.body.clone() };
        let y = self.lambda.y_eigenvalue(false);
        (1..=self.n()).all(|i| y_op(i, &f).eq_poly(&f.scale(&y[i - 1])))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.0,
            "dual": self.dual,
            "terms": self.body.to_json(),
        })
    }
}

fn memo() -> &'static Mutex<LruCache<Weight, Arc<XLaurent>>> {
    static MEMO: OnceLock<Mutex<LruCache<Weight, Arc<XLaurent>>>> = OnceLock::new();
    MEMO.get_or_init(|| {
        let cap = std::env::var(MEMO_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CAPACITY);
        Mutex::new(LruCache::new(NonZeroUsize::new(cap.max(1)).unwrap()))
    })
}

fn y_at(lambda: &Weight) -> Vec<ParamScalar> {
    lambda.y_eigenvalue(false)
}

fn q_half(e: i32) -> ParamScalar {
    ParamScalar::gen_half(gen::Q, e)
}

fn check_index(i: usize, lambda: &Weight) {
    assert!(i <= lambda.n(), "index {} out of range for n = {}", i, lambda.n());
}

/// `D_i(Y^{dir alpha_i})` evaluated at `y(lambda)`.
pub fn d_at(i: usize, dir: i32, lambda: &Weight) -> ParamScalar {
    check_index(i, lambda);
    let n = lambda.n();
    let y = y_at(lambda);
    let one = ParamScalar::one();
    match i {
        0 => named::q().pow(dir).mul(&y[0].pow(2 * dir)).sub(&one),
        _ if i == n => y[n - 1].pow(-2 * dir).sub(&one),
        _ => y[i].pow(dir).mul(&y[i - 1].pow(-dir)).sub(&one),
    }
}

/// `N_i(Y^{dir alpha_i})` evaluated at `y(lambda)`.
pub fn n_at(i: usize, dir: i32, lambda: &Weight) -> ParamScalar {
    check_index(i, lambda);
    let n = lambda.n();
    let y = y_at(lambda);
    match i {
        0 => {
            let z = q_half(dir).mul(&y[0].pow(dir));
            let c = q_half(1).mul(&named::c_prime());
            let d = q_half(1).mul(&named::d_prime());
            ParamScalar::gen_half(gen::UN, 1).mul(&z.sub(&c)).mul(&z.sub(&d))
        }
        _ if i == n => {
            let z = y[n - 1].pow(-dir);
            ParamScalar::gen_half(gen::TN, 1).mul(&z.sub(&named::a_prime())).mul(&z.sub(&named::b_prime()))
        }
        _ => {
            let z = y[i].pow(dir).mul(&y[i - 1].pow(-dir));
            ParamScalar::gen_half(gen::T, 1).mul(&z.sub(&named::t().inv()))
        }
    }
}

/// `phi_i^2` on the eigenspace of `lambda`.
pub fn phi_squared(i: usize, lambda: &Weight) -> ParamScalar {
    n_at(i, 1, lambda).mul(&n_at(i, -1, lambda)).div(&d_at(i, 1, lambda).mul(&d_at(i, -1, lambda)))
}

/// `c_{i,lambda}` with `phi_i E_lambda = c_{i,lambda} E_{s_i . lambda}`.
pub fn c_coeff(i: usize, lambda: &Weight) -> ParamScalar {
    check_index(i, lambda);
    let n = lambda.n();
    if i == 0 {
        let rho1 = lambda.rho()[0];
        let t = ParamScalar::gen_half(gen::T, 2 * rho1);
        return if lambda.0[0] >= 0 {
            ParamScalar::gen_half(gen::T0, 1).div(&t).div(&named::a_star())
        } else {
            // forced by c_{0,lambda} c_{0,s_0 lambda} = phi_0^2, since rho(s_0 lambda)_1 = -rho(lambda)_1
            ParamScalar::gen_half(gen::T0, -1).div(&t).mul(&named::a_star()).mul(&phi_squared(0, lambda))
        };
    }
    let g = if i == n { gen::TN } else { gen::T };
    match lambda.pairing(i).signum() {
        -1 => ParamScalar::gen_half(g, 1),
        0 => ParamScalar::zero(),
        _ => ParamScalar::gen_half(g, -1).mul(&phi_squared(i, lambda)),
    }
}

/// Scalar part of `phi_i` on the eigenspace of `lambda`.
fn phi_scalar(i: usize, lambda: &Weight) -> ParamScalar {
    let n = lambda.n();
    let y = y_at(lambda);
    let num = match i {
        0 => named::half_diff(gen::UN).add(&named::half_diff(gen::U0).mul(&q_half(1)).mul(&y[0])),
        _ if i == n => named::half_diff(gen::TN).add(&named::half_diff(gen::T0).mul(&y[n - 1].inv())),
        _ => named::half_diff(gen::T),
    };
    num.div(&d_at(i, 1, lambda))
}

/// `phi_i f` for `f` in the `Y`-eigenspace of `lambda`.
///
/// `U_n = X_1^{-1} T_0 Y_1^{-1}` collapses to `y(lambda)_1^{-1} x_1^{-1} T_0` there.
pub fn phi_apply(i: usize, lambda: &Weight, f: &XLaurent) -> XLaurent {
    check_index(i, lambda);
    let head = if i == 0 {
        let y1 = &y_at(lambda)[0];
        let mut e = vec![0; f.n()];
        e[0] = -1;
        noumi_t(0, 1, f).shift(&e).scale(&y1.inv())
    } else {
        noumi_t(i, 1, f)
    };
    head.add(&f.scale(&phi_scalar(i, lambda)))
}

fn build(lambda: &Weight) -> Arc<XLaurent> {
    if let Some(e) = memo().lock().unwrap().get(lambda) {
        return e.clone();
    }
    let out = if lambda.is_zero() {
        Arc::new(XLaurent::one(lambda.n()))
    } else {
        let word = lambda.reduced_word();
        let j = *word.last().unwrap();
        let mu = lambda.dot(j);
        let prev = build(&mu);
        let c = c_coeff(j, &mu);
        Arc::new(phi_apply(j, &mu, &prev).scale(&c.inv()))
    };
    memo().lock().unwrap().put(lambda.clone(), out.clone());
    out
}

/// `E_lambda`, or `E*_lambda` when `dual`.
pub fn compute_e(lambda: &Weight, dual: bool) -> KoornwinderPoly {
    let e = build(lambda);
    let body = if dual { e.dual() } else { (*e).clone() };
    KoornwinderPoly { lambda: lambda.clone(), body, dual }
}

/// `E_lambda` along an explicit word `j_1, .., j_l` (applied in that order from `0`).
pub fn compute_e_along(lambda: &Weight, word: &[usize]) -> Result<XLaurent> {
    let n = lambda.n();
    let mut mu = Weight::zero(n);
    let mut f = XLaurent::one(n);
    for &j in word {
        if j > n {
            return Err(DahaError::Precondition(format!("letter {} out of range", j)));
        }
        let c = c_coeff(j, &mu);
        if c.is_zero() {
            return Err(DahaError::Precondition(format!("s_{} fixes {:?}", j, mu.0)));
        }
        f = phi_apply(j, &mu, &f).scale(&c.inv());
        mu = mu.dot(j);
    }
    if mu != *lambda {
        return Err(DahaError::Precondition(format!("word ends at {:?}, not {:?}", mu.0, lambda.0)));
    }
    Ok(f)
}

/// `(x; q)_m` with `q` replaced by `step`.
fn pochhammer(x: &ParamScalar, step: &ParamScalar, m: i32) -> ParamScalar {
    let one = ParamScalar::one();
    let mut out = ParamScalar::one();
    let mut cur = x.clone();
    for _ in 0..m {
        out = out.mul(&one.sub(&cur));
        cur = cur.mul(step);
    }
    out
}

/// Closed evaluation formula for `chi*_0(E_lambda)`, `lambda` dominant.
pub fn chi0_star_closed(lambda: &Weight) -> Result<ParamScalar> {
    if !lambda.is_dominant() {
        return Err(DahaError::Precondition(format!("{:?} is not dominant", lambda.0)));
    }
    let n = lambda.n() as i32;
    let l = &lambda.0;
    let q = named::q();
    let q2 = q.pow(2);
    let t = named::t();
    let a2 = named::a_star().pow(2);
    let mut out = ParamScalar::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (li, lj) = (l[i as usize - 1], l[j as usize - 1]);
            let d = li - lj;
            out = out
                .mul(&t.pow(-d))
                .mul(&pochhammer(&t.pow(j - i + 1).mul(&q), &q, d))
                .div(&pochhammer(&t.pow(j - i).mul(&q), &q, d));
            let s = li + lj;
            let base = t.pow(2 * n - i - j).mul(&a2).mul(&q);
            out = out
                .mul(&t.pow(-s))
                .mul(&pochhammer(&base.mul(&t), &q, s))
                .div(&pochhammer(&base, &q, s));
        }
    }
    for i in 1..=n {
        let li = l[i as usize - 1];
        let tn = t.pow(n - i);
        let a = named::a_star();
        let num = [
            tn.mul(&a2).mul(&q),
            tn.mul(&a).mul(&named::b_star()).mul(&q),
            tn.mul(&a).mul(&named::c_star()),
            tn.mul(&a).mul(&named::d_star()),
        ];
        let t2 = t.pow(2 * (n - i)).mul(&a2);
        out = out.mul(&named::a().pow(-li)).mul(&tn.pow(li));
        for x in &num {
            out = out.mul(&pochhammer(x, &q, li));
        }
        out = out.div(&pochhammer(&q2.mul(&t2), &q2, li)).div(&pochhammer(&q.mul(&t2), &q2, li));
    }
    Ok(out)
}

/// `chi*_0(E_{s_i . lambda}) / chi*_0(E_lambda)` for a step with `s_i . lambda` above `lambda`.
fn up_ratio(i: usize, lambda: &Weight) -> ParamScalar {
    let n = lambda.n();
    let nd = n_at(i, 1, lambda).div(&d_at(i, 1, lambda));
    match i {
        0 => {
            let rho1 = lambda.rho()[0];
            ParamScalar::gen_half(gen::T0, -1).mul(&ParamScalar::gen_half(gen::T, 2 * rho1)).mul(&named::a_star()).mul(&nd)
        }
        _ if i == n => ParamScalar::gen_half(gen::TN, -1).mul(&nd),
        _ => ParamScalar::gen_half(gen::T, -1).mul(&nd),
    }
}

/// `chi*_0(E_lambda)` by walking the recurrences up from `0` along the reduced word.
pub fn chi0_recurrence(lambda: &Weight) -> ParamScalar {
    let mut mu = Weight::zero(lambda.n());
    let mut out = ParamScalar::one();
    for j in lambda.reduced_word() {
        out = out.mul(&up_ratio(j, &mu));
        mu = mu.dot(j);
    }
    out
}

/// `chi*_0(E_lambda)`: closed form at `lambda^+`, then down to `lambda` by finite reflections.
pub fn chi0_star(lambda: &Weight) -> ParamScalar {
    let n = lambda.n();
    let mut path = Vec::new();
    let mut cur = lambda.clone();
    while !cur.is_dominant() {
        let i = (1..=n).find(|&i| cur.pairing(i) < 0).expect("non-dominant weights have a finite descent");
        path.push(cur.clone());
        cur = cur.dot(i);
    }
    let mut out = chi0_star_closed(&cur).expect("walk ends at a dominant weight");
    for mu in path.iter().rev() {
        let i = (1..=n).find(|&i| mu.pairing(i) < 0 && mu.dot(i) == cur).unwrap();
        out = out.div(&up_ratio(i, mu));
        cur = mu.clone();
    }
    out
}

/// `chi*_mu(E_lambda) chi_0(E*_mu) = chi_lambda(E*_mu) chi*_0(E_lambda)`.
pub fn duality_check(lambda: &Weight, mu: &Weight) -> bool {
    let e = compute_e(lambda, false).body;
    let es = compute_e(mu, true).body;
    let zero = Weight::zero(lambda.n());
    let lhs = chi_eval(mu, &e, true).mul(&chi_eval(&zero, &es, false));
    let rhs = chi_eval(lambda, &es, false).mul(&chi_eval(&zero, &e, true));
    lhs == rhs
}

/// The constant of `E_{-e_1}`, in closed form.
pub fn e_minus_e1_constant(n: usize) -> ParamScalar {
    let t = ParamScalar::gen_half(gen::T, 2 * (n as i32 - 1));
    let ta = t.mul(&named::a_star());
    let num = named::half_diff(gen::UN).add(&named::half_diff(gen::U0).mul(&q_half(1)).mul(&ta));
    let den = named::q().mul(&ta.pow(2)).sub(&ParamScalar::one());
    ParamScalar::gen_half(gen::T0, -1).mul(&ta).mul(&num).div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn e_minus_e1() {
        for n in 1..=3 {
            let mut lam = vec![0; n];
            lam[0] = -1;
            let e = compute_e(&w(&lam), false);
            assert_eq!(e.body.len(), 2);
            assert!(e.is_monic());
            assert_eq!(e.body.coeff(&vec![0; n]), e_minus_e1_constant(n));
            assert!(e.is_eigen());
        }
    }

    #[test]
    fn eigen_small() {
        for l in crate::weights::box_weights(2, 1) {
            let e = compute_e(&l, false);
            assert!(e.is_monic() && e.is_triangular(), "{:?}", l);
            assert!(e.is_eigen(), "{:?}", l);
        }
    }

    #[test]
    fn d_at_zero() {
        let d = d_at(0, 1, &w(&[0, 0]));
        let expect = named::q().mul(&named::t().pow(2)).mul(&named::a_star().pow(2)).sub(&ParamScalar::one());
        assert_eq!(d, expect);
        assert!(n_at(1, 1, &w(&[1, 1])).is_zero());
    }
}
