//! Coset decomposition of parameter polynomials along a primitive direction `v`.
//!
//! With a functional `f` satisfying `f(v) = 1` the exponent lattice splits as
//! `Z v (+) ker f`, so a polynomial is a Laurent polynomial in `y = x^v` with
//! coefficients indexed by cosets `u - f(u) v`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;

use super::cyclotomic::{cyclotomic_poly, rat, upoly_divrem, CycNumber, Rat, RootOfUnity};
use super::monomial::{ParamMonomial, NGEN};
use super::poly::{Coeff, CycPoly, ParamPoly, Poly};

pub type Functional = [i64; NGEN];

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Integer functional `f` with `f(v) = 1`; `v` must be primitive.
pub fn bezout(v: &ParamMonomial) -> Functional {
    static CACHE: OnceLock<Mutex<HashMap<ParamMonomial, Functional>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(v) {
        return *f;
    }
    let mut f = [0i64; NGEN];
    let mut g = 0i64;
    for k in 0..NGEN {
        let x = v.0[k] as i64;
        if x == 0 {
            continue;
        }
        if g == 0 {
            g = x;
            f[k] = 1;
            continue;
        }
        let (g2, s, t) = ext_gcd(g, x);
        for fk in f.iter_mut() {
            *fk *= s;
        }
        f[k] = t;
        g = g2;
    }
    assert!(g == 1 || g == -1, "direction {:?} is not primitive", v.0);
    if g == -1 {
        for fk in f.iter_mut() {
            *fk = -*fk;
        }
    }
    debug_assert_eq!(v.dot(&f), 1);
    cache.lock().unwrap().insert(*v, f);
    f
}

/// Splits `p` into cosets: key `u - f(u) v` maps to the univariate terms `(f(u), c)`.
pub fn coset_split<C: Coeff>(p: &Poly<C>, v: &ParamMonomial, f: &Functional) -> BTreeMap<ParamMonomial, Vec<(i64, C)>> {
    let mut out: BTreeMap<ParamMonomial, Vec<(i64, C)>> = BTreeMap::new();
    for (u, c) in p.terms() {
        let e = u.dot(f);
        let key = *u - v.scale(e as i32);
        out.entry(key).or_default().push((e, c.clone()));
    }
    out
}

/// Dense ascending coefficients and the exponent of the first one.
fn densify<C: Coeff>(terms: &[(i64, C)]) -> (i64, Vec<C>) {
    let lo = terms.iter().map(|t| t.0).min().unwrap();
    let hi = terms.iter().map(|t| t.0).max().unwrap();
    let mut d = vec![C::czero(); (hi - lo + 1) as usize];
    for (e, c) in terms {
        let slot = &mut d[(e - lo) as usize];
        *slot = slot.cadd(c);
    }
    (lo, d)
}

fn phi_rat(d: u32) -> Vec<Rat> {
    cyclotomic_poly(d).iter().map(|&x| rat(x)).collect()
}

/// Exact quotient `p / Phi_d(x^w)`, or `None` if the division leaves a remainder.
pub fn div_cyclotomic(p: &ParamPoly, w: &ParamMonomial, d: u32) -> Option<ParamPoly> {
    if p.is_zero() {
        return Some(ParamPoly::zero());
    }
    let f = bezout(w);
    let phi = phi_rat(d);
    let mut out = Vec::new();
    for (key, terms) in coset_split(p, w, &f) {
        let (lo, dense) = densify(&terms);
        if dense.len() < phi.len() {
            return None;
        }
        let (q, r) = upoly_divrem(&dense, &phi);
        if !r.is_empty() {
            return None;
        }
        for (j, c) in q.into_iter().enumerate() {
            if !c.is_zero() {
                out.push((key + w.scale((lo + j as i64) as i32), c));
            }
        }
    }
    Some(ParamPoly::from_terms(out))
}

/// Expansion of `Phi_d(x^w)` as a parameter polynomial.
pub fn cyclotomic_in(w: &ParamMonomial, d: u32) -> ParamPoly {
    ParamPoly::from_terms(
        cyclotomic_poly(d)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (w.scale(j as i32), rat(c))),
    )
}

/// Multiplicity of the root `omega` in a univariate rational polynomial (via `Phi_ord`).
fn rat_root_multiplicity(dense: &[Rat], order: u32) -> u32 {
    let phi = phi_rat(order);
    let mut cur = dense.to_vec();
    let mut m = 0;
    loop {
        while cur.last().is_some_and(|x| x.is_zero()) {
            cur.pop();
        }
        if cur.len() < phi.len() {
            return m;
        }
        let (q, r) = upoly_divrem(&cur, &phi);
        if !r.is_empty() {
            return m;
        }
        cur = q;
        m += 1;
    }
}

/// Synthetic division by `y - w`; returns quotient and remainder.
fn synth_div(dense: &[CycNumber], w: &CycNumber) -> (Vec<CycNumber>, CycNumber) {
    if dense.is_empty() {
        return (vec![], CycNumber::zero());
    }
    let m = dense.len() - 1;
    let mut q = vec![CycNumber::zero(); m];
    let mut carry = dense[m].clone();
    for k in (0..m).rev() {
        q[k] = carry.clone();
        carry = dense[k].add(&w.mul(&carry));
    }
    (q, carry)
}

fn horner(dense: &[CycNumber], w: &CycNumber) -> CycNumber {
    let mut acc = CycNumber::zero();
    for c in dense.iter().rev() {
        acc = acc.mul(w).add(c);
    }
    acc
}

fn cyc_root_multiplicity(dense: &[CycNumber], w: &CycNumber) -> u32 {
    let mut cur = dense.to_vec();
    let mut m = 0;
    loop {
        if cur.iter().all(|c| c.is_zero()) {
            // zero coset never occurs for nonzero input
            return u32::MAX;
        }
        let (q, r) = synth_div(&cur, w);
        if !r.is_zero() {
            return m;
        }
        cur = q;
        m += 1;
    }
}

/// Order of vanishing of a nonzero polynomial along `x^v = omega`.
pub fn vanishing_order<C: Coeff>(p: &Poly<C>, v: &ParamMonomial, omega: RootOfUnity) -> u32 {
    assert!(!p.is_zero(), "order of the zero polynomial is undefined");
    let f = bezout(v);
    let w = omega.to_cyc();
    let mut best = u32::MAX;
    for (_, terms) in coset_split(p, v, &f) {
        let (_, dense) = densify(&terms);
        let m = if dense.iter().all(|c| c.to_cyc().is_rational()) {
            let r: Vec<Rat> = dense.iter().map(|c| c.to_cyc().as_rat().unwrap()).collect();
            rat_root_multiplicity(&r, omega.order())
        } else {
            let cd: Vec<CycNumber> = dense.iter().map(|c| c.to_cyc()).collect();
            cyc_root_multiplicity(&cd, &w)
        };
        best = best.min(m);
        if best == 0 {
            break;
        }
    }
    best
}

/// Image of `p / (x^v - omega)^z` modulo `x^v - omega`, as a polynomial on `ker f`.
///
/// Panics if `(x^v - omega)^z` does not divide `p`.
pub fn reduce_at(p: &Poly<impl Coeff>, v: &ParamMonomial, omega: RootOfUnity, z: u32) -> CycPoly {
    let f = bezout(v);
    let w = omega.to_cyc();
    let mut out = Vec::new();
    for (key, terms) in coset_split(p, v, &f) {
        let (lo, dense) = densify(&terms);
        let mut cur: Vec<CycNumber> = dense.iter().map(|c| c.to_cyc()).collect();
        for _ in 0..z {
            let (q, r) = synth_div(&cur, &w);
            assert!(r.is_zero(), "specialization divisor does not divide");
            cur = q;
        }
        let val = horner(&cur, &w).mul(&omega.pow(lo).to_cyc());
        if !val.is_zero() {
            out.push((key, val));
        }
    }
    CycPoly::from_terms(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::monomial::gen;

    #[test]
    fn bezout_is_dual() {
        let v = ParamMonomial([3, 5, 0, -2, 0, 0]);
        let f = bezout(&v);
        assert_eq!(v.dot(&f), 1);
    }

    #[test]
    fn divide_by_phi() {
        let y = ParamMonomial::half(gen::Q, 1);
        let p = ParamPoly::binomial_minus_one(y.scale(6));
        let q = div_cyclotomic(&p, &y, 3).unwrap();
        assert_eq!(q.mul(&cyclotomic_in(&y, 3)), p);
        assert!(div_cyclotomic(&p, &y, 4).is_none());
    }

    #[test]
    fn orders() {
        let y = ParamMonomial([1, 2, 0, 0, 0, 0]);
        let p = ParamPoly::binomial_minus_one(y.scale(2));
        assert_eq!(vanishing_order(&p, &y, RootOfUnity::one()), 1);
        assert_eq!(vanishing_order(&p.pow(3), &y, RootOfUnity::new(1, 2)), 3);
        let other = ParamPoly::binomial_minus_one(ParamMonomial([2, 1, 0, 0, 0, 0]));
        assert_eq!(vanishing_order(&other, &y, RootOfUnity::one()), 0);
    }
}
