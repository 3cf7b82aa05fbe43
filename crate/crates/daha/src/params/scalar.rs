//! Elements of the parameter field: rational functions in the six half-power generators.
//!
//! A scalar is stored as `coef * x^mono * prod Phi_d(x^w)^e * num / den`. Every binomial
//! `x^u - x^v` is split into cyclotomic factors on construction, so the products of
//! binomials that dominate this theory never need multivariate gcds. `num` and `den`
//! hold whatever does not factor this way; both are scaled so their greatest term is `1`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::{euler_phi, rat, Rat};
use super::lattice::{cyclotomic_in, div_cyclotomic};
use super::monomial::{gen, ParamMonomial};
use super::poly::ParamPoly;

/// `Phi_d(x^w)` with `w` primitive and its first nonzero entry positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cyclo {
    pub w: ParamMonomial,
    pub d: u32,
}

impl Cyclo {
    pub fn expand(&self) -> ParamPoly {
        cyclotomic_in(&self.w, self.d)
    }
}

#[derive(Clone, Debug)]
pub struct ParamScalar {
    coef: Rat,
    mono: ParamMonomial,
    factors: Vec<(Cyclo, i32)>,
    num: ParamPoly,
    den: ParamPoly,
}

fn divisors(h: u32) -> impl Iterator<Item = u32> {
    (1..=h).filter(move |d| h % d == 0)
}

/// Pulls the greatest term out of `p`, leaving a polynomial whose greatest term is `1`.
fn split_lead(p: &ParamPoly) -> (Rat, ParamMonomial, ParamPoly) {
    let (m, c) = p.leading().expect("nonzero polynomial").clone();
    let inv = Rat::one() / &c;
    (c, m, p.scale(&inv, -m))
}

/// Cyclotomic factorization of `1 + c x^u` for `c = +-1`, as `x^shift * prod Phi`.
fn binomial_factors(u: ParamMonomial, c: &Rat) -> Option<(ParamMonomial, Vec<(Cyclo, i32)>)> {
    let plus = c.is_one();
    if !plus && *c != -Rat::one() {
        return None;
    }
    // u is below the leading exponent 0, so its first nonzero entry is negative:
    // 1 + c x^u = x^u (y^h + c) with y = x^w, w = -u / h
    debug_assert!(u.leading_sign() < 0);
    let h = u.gcd_content().unsigned_abs();
    let w = ParamMonomial(u.0.map(|x| -x / h as i32));
    let shift = u;
    let fs = if plus {
        divisors(2 * h).filter(|d| h % d != 0).map(|d| (Cyclo { w, d }, 1)).collect()
    } else {
        divisors(h).map(|d| (Cyclo { w, d }, 1)).collect()
    };
    Some((shift, fs))
}

fn merge_factors(a: &[(Cyclo, i32)], b: &[(Cyclo, i32)], sb: i32) -> Vec<(Cyclo, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = if i == a.len() {
            std::cmp::Ordering::Greater
        } else if j == b.len() {
            std::cmp::Ordering::Less
        } else {
            a[i].0.cmp(&b[j].0)
        };
        match ord {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, sb * b[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[i].1 + sb * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            coef: Rat::zero(),
            mono: ParamMonomial::ONE,
            factors: Vec::new(),
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::monomial(c, ParamMonomial::ONE)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(rat(k))
    }

    pub fn monomial(c: Rat, m: ParamMonomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamScalar { coef: c, mono: m, factors: Vec::new(), num: ParamPoly::one(), den: ParamPoly::one() }
    }

    /// The monic monomial `x^m`.
    pub fn mono(m: ParamMonomial) -> Self {
        Self::monomial(Rat::one(), m)
    }

    /// `g^{e/2}` for a single generator.
    pub fn gen_half(g: usize, e: i32) -> Self {
        Self::mono(ParamMonomial::half(g, e))
    }

    pub fn from_poly(p: &ParamPoly) -> Self {
        Self::from_fraction(p, &ParamPoly::one())
    }

    pub fn from_fraction(num: &ParamPoly, den: &ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        ParamScalar {
            coef: Rat::one(),
            mono: ParamMonomial::ONE,
            factors: Vec::new(),
            num: num.clone(),
            den: den.clone(),
        }
        .normalized()
    }

    /// `x^m - 1`.
    pub fn binomial(m: ParamMonomial) -> Self {
        Self::mono(m).sub(&Self::one())
    }

    /// `x^a - x^b` with monic monomials, the shape of every `D` and `N` factor.
    pub fn mono_diff(a: &ParamScalar, b: &ParamScalar) -> Self {
        a.sub(b)
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coef.is_one()
            && self.mono.is_one()
            && self.factors.is_empty()
            && self.num.is_one()
            && self.den.is_one()
    }

    pub fn coef(&self) -> &Rat {
        &self.coef
    }

    pub fn mono_part(&self) -> ParamMonomial {
        self.mono
    }

    pub fn factors(&self) -> &[(Cyclo, i32)] {
        &self.factors
    }

    pub fn num_part(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den_part(&self) -> &ParamPoly {
        &self.den
    }

    /// `Some((c, m))` when the scalar is `c x^m`.
    pub fn as_monomial(&self) -> Option<(Rat, ParamMonomial)> {
        if self.is_zero() {
            return None;
        }
        if self.factors.is_empty() && self.num.is_one() && self.den.is_one() {
            Some((self.coef.clone(), self.mono))
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if self.coef.is_zero() || self.num.is_zero() {
            return Self::zero();
        }
        loop {
            let mut changed = false;
            for part in 0..2 {
                let p = if part == 0 { &self.num } else { &self.den };
                if p.is_one() {
                    continue;
                }
                let (c, m, rest) = split_lead(p);
                let sgn = if part == 0 { 1 } else { -1 };
                if part == 0 {
                    self.coef *= &c;
                    self.mono = self.mono + m;
                } else {
                    self.coef /= &c;
                    self.mono = self.mono - m;
                }
                let mut rest = rest;
                if rest.len() == 2 {
                    let (u, cu) = rest.terms()[0].clone();
                    if let Some((shift, fs)) = binomial_factors(u, &cu) {
                        self.mono = self.mono + shift.scale(sgn);
                        let fs: Vec<_> = fs.into_iter().map(|(f, e)| (f, e * sgn)).collect();
                        self.factors = merge_factors(&self.factors, &fs, 1);
                        rest = ParamPoly::one();
                        changed = true;
                    }
                }
                if part == 0 {
                    self.num = rest;
                } else {
                    self.den = rest;
                }
            }
            // cancel cyclotomic factors against the unfactored parts
            for k in 0..self.factors.len() {
                let (cy, e) = self.factors[k];
                let target = if e < 0 { &mut self.num } else { &mut self.den };
                if target.is_one() {
                    continue;
                }
                let mut left = e.abs();
                while left > 0 {
                    match div_cyclotomic(target, &cy.w, cy.d) {
                        Some(q) => {
                            *target = q;
                            left -= 1;
                            changed = true;
                        }
                        None => break,
                    }
                }
                self.factors[k].1 = e.signum() * left;
            }
            self.factors.retain(|f| f.1 != 0);
            if !changed {
                break;
            }
        }
        if self.num == self.den {
            self.num = ParamPoly::one();
            self.den = ParamPoly::one();
        }
        self
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let out = ParamScalar {
            coef: &self.coef * &o.coef,
            mono: self.mono + o.mono,
            factors: merge_factors(&self.factors, &o.factors, 1),
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        };
        if out.num.is_one() && out.den.is_one() {
            out
        } else {
            out.normalized()
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let out = ParamScalar {
            coef: Rat::one() / &self.coef,
            mono: -self.mono,
            factors: self.factors.iter().map(|&(c, e)| (c, -e)).collect(),
            num: self.den.clone(),
            den: self.num.clone(),
        };
        if out.den.is_one() {
            out
        } else {
            out.normalized()
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.coef = -out.coef;
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.coef *= c;
        out
    }

    pub fn mul_monomial(&self, m: ParamMonomial) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.mono = out.mono + m;
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        // common part: componentwise minimum of factor exponents
        let mut common = Vec::new();
        let mut ra = ParamPoly::one();
        let mut rb = ParamPoly::one();
        let (fa, fb) = (&self.factors, &o.factors);
        let (mut i, mut j) = (0, 0);
        while i < fa.len() || j < fb.len() {
            let (cy, ea, eb) = if i == fa.len() {
                j += 1;
                (fb[j - 1].0, 0, fb[j - 1].1)
            } else if j == fb.len() {
                i += 1;
                (fa[i - 1].0, fa[i - 1].1, 0)
            } else {
                match fa[i].0.cmp(&fb[j].0) {
                    std::cmp::Ordering::Less => {
                        i += 1;
                        (fa[i - 1].0, fa[i - 1].1, 0)
                    }
                    std::cmp::Ordering::Greater => {
                        j += 1;
                        (fb[j - 1].0, 0, fb[j - 1].1)
                    }
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (fa[i - 1].0, fa[i - 1].1, fb[j - 1].1)
                    }
                }
            };
            let e = ea.min(eb);
            if e != 0 {
                common.push((cy, e));
            }
            if ea > e {
                ra = ra.mul(&cy.expand().pow((ea - e) as u32));
            }
            if eb > e {
                rb = rb.mul(&cy.expand().pow((eb - e) as u32));
            }
        }
        let base = self.mono;
        let mut ta = ra.mul(&self.num).scale(&self.coef, ParamMonomial::ONE);
        let mut tb = rb.mul(&o.num).scale(&o.coef, o.mono - base);
        let den = if self.den == o.den {
            self.den.clone()
        } else {
            ta = ta.mul(&o.den);
            tb = tb.mul(&self.den);
            self.den.mul(&o.den)
        };
        let num = ta.add(&tb);
        if num.is_zero() {
            return Self::zero();
        }
        ParamScalar { coef: Rat::one(), mono: base, factors: common, num, den }.normalized()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Sum of many scalars over one common denominator.
    pub fn sum<I: IntoIterator<Item = ParamScalar>>(items: I) -> Self {
        let items: Vec<ParamScalar> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items.into_iter().next().unwrap(),
            2 => return items[0].add(&items[1]),
            _ => {}
        }
        if items.iter().any(|x| x.den != items[0].den) {
            return items.iter().fold(Self::zero(), |acc, x| acc.add(x));
        }
        let mut emin: std::collections::BTreeMap<Cyclo, i32> = std::collections::BTreeMap::new();
        for x in &items {
            for (cy, e) in &x.factors {
                let slot = emin.entry(*cy).or_insert(0);
                *slot = (*slot).min(*e);
            }
        }
        for (cy, slot) in emin.iter_mut() {
            for x in &items {
                let e = x.factors.binary_search_by(|f| f.0.cmp(cy)).map(|k| x.factors[k].1).unwrap_or(0);
                *slot = (*slot).min(e);
            }
        }
        let mut cache: std::collections::HashMap<(Cyclo, i32), ParamPoly> = std::collections::HashMap::new();
        let base = items[0].mono;
        let mut terms = Vec::new();
        for x in &items {
            let mut p = x.num.scale(&x.coef, x.mono - base);
            for (cy, e) in &x.factors {
                let k = e - emin[cy];
                if k > 0 {
                    let f = cache.entry((*cy, k)).or_insert_with(|| cy.expand().pow(k as u32));
                    p = p.mul(f);
                }
            }
            for (cy, m) in &emin {
                if x.factors.binary_search_by(|f| f.0.cmp(cy)).is_err() && *m < 0 {
                    let f = cache.entry((*cy, -m)).or_insert_with(|| cy.expand().pow((-m) as u32));
                    p = p.mul(f);
                }
            }
            terms.extend(p.into_terms());
        }
        let num = ParamPoly::from_terms(terms);
        if num.is_zero() {
            return Self::zero();
        }
        let factors = emin.into_iter().filter(|(_, e)| *e != 0).collect();
        ParamScalar { coef: Rat::one(), mono: base, factors, num, den: items[0].den.clone() }.normalized()
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        if e == 0 {
            return Self::one();
        }
        if let Some((c, m)) = self.as_monomial() {
            return Self::monomial(num_traits::pow(c, e as usize), m.scale(e));
        }
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Expanded numerator and denominator, `self = num / den`.
    pub fn to_fraction(&self) -> (ParamPoly, ParamPoly) {
        if self.is_zero() {
            return (ParamPoly::zero(), ParamPoly::one());
        }
        let mut num = self.num.scale(&self.coef, self.mono);
        let mut den = self.den.clone();
        for (cy, e) in &self.factors {
            let p = cy.expand().pow(e.unsigned_abs());
            if *e > 0 {
                num = num.mul(&p);
            } else {
                den = den.mul(&p);
            }
        }
        (num, den)
    }

    /// Applies a unimodular relabelling of generators given on monomials.
    fn map_lattice(&self, f: impl Fn(ParamMonomial) -> ParamMonomial) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = ParamScalar {
            coef: self.coef.clone(),
            mono: f(self.mono),
            factors: Vec::new(),
            num: self.num.map_monomials(&f),
            den: self.den.map_monomials(&f),
        };
        let mut fs = Vec::new();
        for &(cy, e) in &self.factors {
            let w = f(cy.w);
            if w.leading_sign() > 0 {
                fs.push((Cyclo { w, d: cy.d }, e));
            } else {
                // Phi_d(y^{-1}) = y^{-phi(d)} Phi_d(y) for d >= 2, Phi_1(y^{-1}) = -y^{-1} Phi_1(y)
                let w = -w;
                let deg = euler_phi(cy.d) as i32;
                out.mono = out.mono - w.scale(deg * e);
                if cy.d == 1 && e % 2 != 0 {
                    out.coef = -out.coef;
                }
                fs.push((Cyclo { w, d: cy.d }, e));
            }
        }
        fs.sort_by(|a, b| a.0.cmp(&b.0));
        out.factors = fs;
        out.normalized()
    }

    /// Image under the swap `t_0^{1/2} <-> u_n^{1/2}`.
    pub fn dual(&self) -> Self {
        self.map_lattice(|m| m.dual())
    }

    pub fn eq_scalar(&self, o: &Self) -> bool {
        if self.coef == o.coef
            && self.mono == o.mono
            && self.factors == o.factors
            && self.num == o.num
            && self.den == o.den
        {
            return true;
        }
        self.sub(o).is_zero()
    }
}

impl PartialEq for ParamScalar {
    fn eq(&self, o: &Self) -> bool {
        self.eq_scalar(o)
    }
}

impl Eq for ParamScalar {}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rat> for ParamScalar {
    fn from(c: Rat) -> Self {
        Self::from_rat(c)
    }
}

impl From<ParamMonomial> for ParamScalar {
    fn from(m: ParamMonomial) -> Self {
        Self::mono(m)
    }
}

macro_rules! named {
    ($name:ident, $sign:expr, $v:expr, $doc:expr) => {
        #[doc = $doc]
        pub fn $name() -> ParamScalar {
            ParamScalar::monomial(rat($sign), ParamMonomial($v))
        }
    };
}

/// The derived parameters, as scalars.
pub mod named {
    use super::*;
    named!(a, 1, [0, 0, 1, 0, 1, 0], "`a = t_n^{1/2} u_n^{1/2}`");
    named!(b, -1, [0, 0, 1, 0, -1, 0], "`b = -t_n^{1/2} u_n^{-1/2}`");
    named!(c, 1, [1, 0, 0, 1, 0, 1], "`c = q^{1/2} t_0^{1/2} u_0^{1/2}`");
    named!(d, -1, [1, 0, 0, 1, 0, -1], "`d = -q^{1/2} t_0^{1/2} u_0^{-1/2}`");
    named!(a_prime, 1, [0, 0, -1, -1, 0, 0], "`a' = t_n^{-1/2} t_0^{-1/2}`");
    named!(b_prime, -1, [0, 0, -1, 1, 0, 0], "`b' = -t_n^{-1/2} t_0^{1/2}`");
    named!(c_prime, 1, [-1, 0, 0, 0, -1, -1], "`c' = q^{-1/2} u_n^{-1/2} u_0^{-1/2}`");
    named!(d_prime, -1, [-1, 0, 0, 0, -1, 1], "`d' = -q^{-1/2} u_n^{-1/2} u_0^{1/2}`");
    named!(a_star, 1, [0, 0, 1, 1, 0, 0], "`a* = t_n^{1/2} t_0^{1/2}`");
    named!(b_star, -1, [0, 0, 1, -1, 0, 0], "`b* = -t_n^{1/2} t_0^{-1/2}`");
    named!(c_star, 1, [1, 0, 0, 0, 1, 1], "`c* = q^{1/2} u_n^{1/2} u_0^{1/2}`");
    named!(d_star, -1, [1, 0, 0, 0, 1, -1], "`d* = -q^{1/2} u_n^{1/2} u_0^{-1/2}`");

    pub fn q() -> ParamScalar {
        ParamScalar::gen_half(gen::Q, 2)
    }
    pub fn t() -> ParamScalar {
        ParamScalar::gen_half(gen::T, 2)
    }
    /// `g^{1/2} - g^{-1/2}` for a generator index.
    pub fn half_diff(g: usize) -> ParamScalar {
        ParamScalar::gen_half(g, 1).sub(&ParamScalar::gen_half(g, -1))
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let neg = self.coef.is_negative();
        let c = self.coef.abs();
        if !c.is_one() {
            parts.push(c.to_string());
        }
        if !self.mono.is_one() {
            parts.push(self.mono.to_string());
        }
        let mut dens: Vec<String> = Vec::new();
        for (cy, e) in &self.factors {
            let s = format!("({})", cy.expand());
            let s = if e.abs() == 1 { s } else { format!("{}^{}", s, e.abs()) };
            if *e > 0 {
                parts.push(s);
            } else {
                dens.push(s);
            }
        }
        if !self.num.is_one() {
            parts.push(format!("({})", self.num));
        }
        if !self.den.is_one() {
            dens.push(format!("({})", self.den));
        }
        if neg {
            write!(f, "-")?;
        }
        if parts.is_empty() {
            write!(f, "1")?;
        } else {
            write!(f, "{}", parts.join("*"))?;
        }
        if !dens.is_empty() {
            write!(f, "/{}", if dens.len() == 1 { dens[0].clone() } else { format!("({})", dens.join("*")) })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn binomials_factor() {
        let y = ParamMonomial([0, 2, 0, 0, 0, 0]);
        let s = ParamScalar::binomial(y.scale(3));
        assert!(s.num_part().is_one());
        // t^3 - 1 in t^{1/2}: Phi_1 Phi_2 Phi_3 Phi_6
        assert_eq!(s.factors().len(), 4);
        let back = s.to_fraction().0;
        assert_eq!(back, ParamPoly::binomial_minus_one(y.scale(3)));
        let r = s.div(&ParamScalar::binomial(y));
        assert_eq!(r.factors().len(), 2);
    }

    #[test]
    fn sum_cancels() {
        let q = q();
        let one = ParamScalar::one();
        let x = one.div(&q.sub(&one));
        let y = one.div(&q.add(&one));
        let lhs = x.sub(&y);
        let rhs = ParamScalar::from_int(2).div(&q.mul(&q).sub(&one));
        assert_eq!(lhs, rhs);
        let z = ParamScalar::sum([x.clone(), y.neg(), rhs.neg(), one.clone()]);
        assert!(z.is_one());
    }

    #[test]
    fn duals_and_inverses() {
        assert_eq!(a_star().dual(), a());
        assert_eq!(a_prime(), a_star().inv());
        assert_eq!(b_prime(), b_star().inv());
        assert_eq!(c_prime(), c_star().inv());
        assert_eq!(d_prime(), d_star().inv());
        let s = ParamScalar::binomial(ParamMonomial([0, 0, 0, 1, -1, 0]));
        assert_eq!(s.dual().dual(), s);
        assert_eq!(s.dual().to_fraction().0, ParamPoly::binomial_minus_one(ParamMonomial([0, 0, 0, -1, 1, 0])));
    }
}
