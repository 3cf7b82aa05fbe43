//! Specialization binomials `s = x^v - omega`, orders of vanishing and the reduction `|_{s=0}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cyclotomic::{CycNumber, RootOfUnity};
use super::lattice::{bezout, reduce_at, vanishing_order, Functional};
use super::monomial::ParamMonomial;
use super::poly::{CycPoly, ParamPoly, Poly};
use super::scalar::ParamScalar;
use crate::error::{DahaError, Result};

/// The five families of special parameter values.
///
/// `Tq { k, r }` is `t^{(k+1)/m} q^{(r-1)/m} - omega_m`, `k = -1` being the pure `q` case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Tq { k: i32, r: i32 },
    Aa { k: i32, r: i32 },
    Ab { i: i32, r: i32, plus: bool },
    Ac { i: i32, r: i32, plus: bool },
    Ad { i: i32, r: i32, plus: bool },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Tq { .. } => "tq",
            Family::Aa { .. } => "aa",
            Family::Ab { .. } => "ab",
            Family::Ac { .. } => "ac",
            Family::Ad { .. } => "ad",
        }
    }

    pub fn r(&self) -> i32 {
        match *self {
            Family::Tq { r, .. } | Family::Aa { r, .. } => r,
            Family::Ab { r, .. } | Family::Ac { r, .. } | Family::Ad { r, .. } => r,
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        let n = n as i32;
        let r = self.r();
        if r < 2 {
            return Err(DahaError::Param(format!("{}: need r-1 >= 1, got r = {}", self.name(), r)));
        }
        let ok = match *self {
            Family::Tq { k, .. } => (0..=n).contains(&(k + 1)),
            Family::Aa { k, .. } => (0..=2 * n - 2).contains(&(k + 1)),
            Family::Ab { i, .. } | Family::Ac { i, .. } | Family::Ad { i, .. } => (1..=n).contains(&i),
        };
        if ok {
            Ok(())
        } else {
            Err(DahaError::Param(format!("{:?} out of range for n = {}", self, n)))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sg = |p: bool| if p { "+" } else { "-" };
        match *self {
            Family::Tq { k, r } => write!(f, "tq(k={},r={})", k, r),
            Family::Aa { k, r } => write!(f, "aa(k={},r={})", k, r),
            Family::Ab { i, r, plus } => write!(f, "ab{}(i={},r={})", sg(plus), i, r),
            Family::Ac { i, r, plus } => write!(f, "ac{}(i={},r={})", sg(plus), i, r),
            Family::Ad { i, r, plus } => write!(f, "ad{}(i={},r={})", sg(plus), i, r),
        }
    }
}

/// One irreducible factor `x^v - omega` of a family polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecPoly {
    pub family: Family,
    pub n: usize,
    pub v: ParamMonomial,
    pub omega: RootOfUnity,
    pub branch: usize,
    pub f: Functional,
}

fn gcd(a: i32, b: i32) -> i32 {
    num_integer::Integer::gcd(&a, &b)
}

/// All irreducible factors `x^v - omega` of the family polynomial at rank `n`,
/// ordered by the argument of `omega`.
pub fn spec_factors(n: usize, family: Family) -> Result<Vec<SpecPoly>> {
    family.check(n)?;
    let ni = n as i32;
    // (v, roots as (j, N) with omega = e^{2 pi i j / N})
    let (v, roots): ([i32; 6], Vec<RootOfUnity>) = match family {
        Family::Tq { k, r } => {
            let m = gcd(k + 1, r - 1);
            let v = [(r - 1) / m, (k + 1) / m, 0, 0, 0, 0];
            // x^{2v} = omega_m for primitive omega_m, so x^v ranges over beta with beta^2 primitive m-th
            let roots = (0..2 * m)
                .map(|j| RootOfUnity::new(j as i64, 2 * m as u32))
                .filter(|b| b.pow(2).order() == m as u32)
                .collect();
            (v, roots)
        }
        Family::Aa { k, r } => ([r - 1, k + 1, 1, 1, 0, 0], vec![RootOfUnity::one(), RootOfUnity::new(1, 2)]),
        Family::Ab { i, r, plus } => {
            let v = if plus { [r - 1, ni - i, 1, 0, 0, 0] } else { [r - 1, ni - i, 0, 1, 0, 0] };
            (v, vec![RootOfUnity::new(1, 4), RootOfUnity::new(3, 4)])
        }
        Family::Ac { i, r, plus } => {
            let e = if plus { 1 } else { -1 };
            ([2 * r - 3, 2 * (ni - i), 1, 1, e, e], vec![RootOfUnity::one()])
        }
        Family::Ad { i, r, plus } => {
            let e = if plus { 1 } else { -1 };
            ([2 * r - 3, 2 * (ni - i), 1, 1, e, -e], vec![RootOfUnity::new(1, 2)])
        }
    };
    let mut v = ParamMonomial(v);
    let mut roots = roots;
    if v.leading_sign() < 0 {
        v = -v;
        roots = roots.into_iter().map(|w| w.inv()).collect();
    }
    roots.sort_by(|a, b| a.turn().cmp(&b.turn()));
    let f = bezout(&v);
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(branch, omega)| SpecPoly { family, n, v, omega, branch, f })
        .collect())
}

/// Selects one branch of a family.
pub fn spec_branch(n: usize, family: Family, branch: usize) -> Result<SpecPoly> {
    let all = spec_factors(n, family)?;
    let len = all.len();
    all.into_iter()
        .nth(branch)
        .ok_or_else(|| DahaError::Param(format!("{} has {} branches, asked for {}", family, len, branch)))
}

/// Every branch of every family at rank `n` with `2 <= r <= r_max`.
pub fn catalog(n: usize, r_max: i32) -> Vec<SpecPoly> {
    let ni = n as i32;
    let mut fams = Vec::new();
    for r in 2..=r_max {
        fams.extend((-1..ni).map(|k| Family::Tq { k, r }));
        fams.extend((-1..2 * ni - 2).map(|k| Family::Aa { k, r }));
        for i in 1..=ni {
            for plus in [true, false] {
                fams.extend([Family::Ab { i, r, plus }, Family::Ac { i, r, plus }, Family::Ad { i, r, plus }]);
            }
        }
    }
    fams.into_iter().flat_map(|f| spec_factors(n, f).unwrap_or_default()).collect()
}

impl SpecPoly {
    /// `x^v - omega` with its family tag.
    pub fn from_parts(family: Family, n: usize, v: ParamMonomial, omega: RootOfUnity) -> Self {
        SpecPoly { family, n, v, omega, branch: 0, f: bezout(&v) }
    }

    /// The binomial itself, with cyclotomic coefficients.
    pub fn as_poly(&self) -> CycPoly {
        CycPoly::from_terms([(self.v, CycNumber::one()), (ParamMonomial::ONE, self.omega.to_cyc().neg())])
    }

    pub fn order(&self) -> u32 {
        self.omega.order()
    }

    /// Image of `x^u`: `omega^{f(u)} x^{u - f(u) v}`.
    pub fn reduce_monomial(&self, u: ParamMonomial) -> (RootOfUnity, ParamMonomial) {
        let e = u.dot(&self.f);
        (self.omega.pow(e), u - self.v.scale(e as i32))
    }

    /// Whether two monomials agree after specialization.
    pub fn same_monomial(&self, a: ParamMonomial, b: ParamMonomial) -> bool {
        self.reduce_monomial(a) == self.reduce_monomial(b)
    }
}

impl fmt::Display for SpecPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.omega.to_string();
        match w.strip_prefix('-') {
            Some(rest) => write!(f, "{} + {}  [{} branch {}]", self.v, rest, self.family, self.branch),
            None => write!(f, "{} - {}  [{} branch {}]", self.v, w, self.family, self.branch),
        }
    }
}

/// Largest `m` with `s^m | a`.
pub fn zeta<C: super::poly::Coeff>(a: &Poly<C>, s: &SpecPoly) -> Result<u32> {
    if a.is_zero() {
        return Err(DahaError::UndefinedOrder);
    }
    Ok(vanishing_order(a, &s.v, s.omega))
}

/// Order of zero (positive) or pole (negative) of a scalar along `s`.
pub fn zeta_scalar(c: &ParamScalar, s: &SpecPoly) -> Result<i32> {
    if c.is_zero() {
        return Err(DahaError::UndefinedOrder);
    }
    let ord = s.order();
    let mut z: i32 = c.factors().iter().filter(|(cy, _)| cy.w == s.v && cy.d == ord).map(|(_, e)| *e).sum();
    if !c.num_part().is_one() {
        z += vanishing_order(c.num_part(), &s.v, s.omega) as i32;
    }
    if !c.den_part().is_one() {
        z -= vanishing_order(c.den_part(), &s.v, s.omega) as i32;
    }
    Ok(z)
}

/// True when `c|_{s=0} = 0`, i.e. `c = 0` or `zeta(c) >= 1`.
pub fn vanishes_at(c: &ParamScalar, s: &SpecPoly) -> bool {
    c.is_zero() || zeta_scalar(c, s).unwrap() > 0
}

/// An element of the specialized field: a quotient of polynomials on `ker f`
/// with cyclotomic coefficients.
#[derive(Clone, Debug)]
pub struct SpecValue {
    pub num: CycPoly,
    pub den: CycPoly,
}

impl SpecValue {
    pub fn zero() -> Self {
        SpecValue { num: CycPoly::zero(), den: CycPoly::one() }
    }

    pub fn one() -> Self {
        SpecValue { num: CycPoly::one(), den: CycPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn mul(&self, o: &Self) -> Self {
        SpecValue { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return SpecValue { num: self.num.add(&o.num), den: self.den.clone() };
        }
        SpecValue { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }
    }

    pub fn neg(&self) -> Self {
        SpecValue { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// The value as a constant, when it is one.
    pub fn as_constant(&self) -> Option<CycNumber> {
        if self.num.is_zero() {
            return Some(CycNumber::zero());
        }
        let (mn, cn) = self.num.leading()?;
        let (md, cd) = self.den.leading()?;
        if mn != md {
            return None;
        }
        let r = cn.div(cd)?;
        (self.num == self.den.scale(&r, ParamMonomial::ONE)).then_some(r)
    }

    /// A single monomial `c x^m` when the value is one.
    pub fn as_monomial(&self) -> Option<(CycNumber, ParamMonomial)> {
        let (cn, mn) = self.num.as_monomial()?;
        let (cd, md) = self.den.as_monomial()?;
        Some((cn.div(&cd)?, mn - md))
    }
}

impl PartialEq for SpecValue {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn reduce_poly(p: &ParamPoly, s: &SpecPoly, z: u32) -> CycPoly {
    if p.is_one() {
        return CycPoly::one();
    }
    reduce_at(p, &s.v, s.omega, z)
}

/// `c|_{s=0}`; zero when `zeta(c) > 0`, an error when `c` has a pole along `s`.
pub fn specialize(c: &ParamScalar, s: &SpecPoly) -> Result<SpecValue> {
    if c.is_zero() {
        return Ok(SpecValue::zero());
    }
    let z = zeta_scalar(c, s)?;
    if z < 0 {
        return Err(DahaError::Pole { zeta: z });
    }
    if z > 0 {
        return Ok(SpecValue::zero());
    }
    let ord = s.order();
    let (root, m) = s.reduce_monomial(c.mono_part());
    let lead = root.to_cyc().mul(&super::poly::Coeff::to_cyc(c.coef()));
    let mut num = CycPoly::monomial(lead, m);
    let mut den = CycPoly::one();
    for (cy, e) in c.factors() {
        let vanishing = cy.w == s.v && cy.d == ord;
        let r = reduce_at(&cy.expand(), &s.v, s.omega, vanishing as u32).pow(e.unsigned_abs());
        if *e > 0 {
            num = num.mul(&r);
        } else {
            den = den.mul(&r);
        }
    }
    let zn = if c.num_part().is_one() { 0 } else { vanishing_order(c.num_part(), &s.v, s.omega) };
    let zd = if c.den_part().is_one() { 0 } else { vanishing_order(c.den_part(), &s.v, s.omega) };
    num = num.mul(&reduce_poly(c.num_part(), s, zn));
    den = den.mul(&reduce_poly(c.den_part(), s, zd));
    Ok(SpecValue { num, den })
}

/// `specialize` applied to a polynomial with cyclotomic coefficients and no pole.
pub fn specialize_poly<C: super::poly::Coeff>(p: &Poly<C>, s: &SpecPoly) -> CycPoly {
    reduce_at(p, &s.v, s.omega, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::cyclotomic::rat;
    use crate::params::monomial::gen;

    fn tq(k: i32, r: i32, n: usize) -> Vec<SpecPoly> {
        spec_factors(n, Family::Tq { k, r }).unwrap()
    }

    #[test]
    fn factor_shapes() {
        let f = tq(1, 2, 2);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].v, ParamMonomial([1, 2, 0, 0, 0, 0]));
        assert_eq!(f[0].omega, RootOfUnity::one());
        assert_eq!(f[1].omega, RootOfUnity::new(1, 2));
        let q = tq(-1, 2, 2);
        assert_eq!(q.len(), 2);
        assert_eq!(q[0].v, ParamMonomial([1, 0, 0, 0, 0, 0]));
        let ab = spec_factors(2, Family::Ab { i: 2, r: 2, plus: true }).unwrap();
        assert_eq!(ab.len(), 2);
        assert_eq!(ab[0].v, ParamMonomial([1, 0, 1, 0, 0, 0]));
        assert_eq!(ab[0].omega.order(), 4);
        assert!(spec_factors(2, Family::Tq { k: 2, r: 2 }).is_err());
    }

    #[test]
    fn zeta_examples() {
        let s = &tq(1, 2, 2)[0];
        let t2q = ParamMonomial([2, 4, 0, 0, 0, 0]);
        let p = ParamScalar::binomial(t2q);
        assert_eq!(zeta_scalar(&p, s).unwrap(), 1);
        let tq2 = ParamScalar::binomial(ParamMonomial([4, 2, 0, 0, 0, 0]));
        assert_eq!(zeta_scalar(&p.div(&tq2), s).unwrap(), 1);
        assert_eq!(zeta_scalar(&p.inv(), s).unwrap(), -1);
        let qs = &tq(-1, 2, 2)[0];
        let onepq = ParamScalar::one().add(&ParamScalar::gen_half(gen::Q, 2));
        assert_eq!(zeta_scalar(&onepq, qs).unwrap(), 0);
        assert_eq!(specialize(&onepq, qs).unwrap(), SpecValue { num: CycPoly::constant(CycNumber::from_int(2)), den: CycPoly::one() });
        assert!(specialize(&ParamScalar::mono(t2q), s).unwrap().is_one());
        assert!(specialize(&p.div(&p), s).unwrap().is_one());
        assert!(specialize(&p.inv(), s).is_err());
    }

    #[test]
    fn ratio_of_binomials() {
        // (z^{2l} - 1)/(z^l - 1) -> 2 at a root of order l
        let s = &tq(2, 4, 3)[0];
        let l = s.order() as i32;
        let a = ParamScalar::binomial(s.v.scale(2 * l));
        let b = ParamScalar::binomial(s.v.scale(l));
        let v = specialize(&a.div(&b), s).unwrap();
        assert_eq!(v.as_monomial().unwrap().0, CycNumber::from_rat(rat(2)));
    }
}
