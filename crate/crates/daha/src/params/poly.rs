//! Sparse Laurent polynomials in the six half-power parameters.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::cyclotomic::{rat, CycNumber, Rat};
use super::monomial::ParamMonomial;

/// Coefficient field of a parameter polynomial.
pub trait Coeff: Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static {
    fn czero() -> Self;
    fn cone() -> Self;
    fn from_i64(k: i64) -> Self;
    fn is_czero(&self) -> bool;
    fn cadd(&self, o: &Self) -> Self;
    fn csub(&self, o: &Self) -> Self;
    fn cmul(&self, o: &Self) -> Self;
    fn cneg(&self) -> Self;
    fn to_cyc(&self) -> CycNumber;
    /// True when printing needs no parentheses and the value is a negative rational.
    fn is_neg_rat(&self) -> bool {
        false
    }
}

impl Coeff for Rat {
    fn czero() -> Self {
        Rat::zero()
    }
    fn cone() -> Self {
        Rat::one()
    }
    fn from_i64(k: i64) -> Self {
        rat(k)
    }
    fn is_czero(&self) -> bool {
        self.is_zero()
    }
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn csub(&self, o: &Self) -> Self {
        self - o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }
    fn to_cyc(&self) -> CycNumber {
        CycNumber::from_rat(self.clone())
    }
    fn is_neg_rat(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for CycNumber {
    fn czero() -> Self {
        CycNumber::zero()
    }
    fn cone() -> Self {
        CycNumber::one()
    }
    fn from_i64(k: i64) -> Self {
        CycNumber::from_int(k)
    }
    fn is_czero(&self) -> bool {
        self.is_zero()
    }
    fn cadd(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn csub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn cmul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn cneg(&self) -> Self {
        self.neg()
    }
    fn to_cyc(&self) -> CycNumber {
        self.clone()
    }
    fn is_neg_rat(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_negative())
    }
}

/// Sparse Laurent polynomial: terms sorted by monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff> {
    terms: Vec<(ParamMonomial, C)>,
}

/// Element of the parameter ring with rational coefficients.
pub type ParamPoly = Poly<Rat>;
/// Parameter polynomial with cyclotomic coefficients.
pub type CycPoly = Poly<CycNumber>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::cone())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, ParamMonomial::ONE)
    }

    pub fn monomial(c: C, m: ParamMonomial) -> Self {
        if c.is_czero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (ParamMonomial, C)>>(it: I) -> Self {
        let mut map: HashMap<ParamMonomial, C> = HashMap::new();
        for (m, c) in it {
            match map.get_mut(&m) {
                Some(x) => *x = x.cadd(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<ParamMonomial, C>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_czero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(ParamMonomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(ParamMonomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == C::cone()
    }

    /// Term with the greatest monomial.
    pub fn leading(&self) -> Option<&(ParamMonomial, C)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: &ParamMonomial) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::czero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a, b) = (&self.terms[i], &o.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a.1.cadd(&b.1);
                    if !c.is_czero() {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.cneg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Multiplies by `c * x^m`.
    pub fn scale(&self, c: &C, m: ParamMonomial) -> Self {
        if c.is_czero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(u, d)| (*u + m, d.cmul(c))).collect() }
    }

    pub fn mul_monomial(&self, m: ParamMonomial) -> Self {
        Poly { terms: self.terms.iter().map(|(u, d)| (*u + m, d.clone())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            return self.scale(&o.terms[0].1, o.terms[0].0);
        }
        if self.terms.len() == 1 {
            return o.scale(&self.terms[0].1, self.terms[0].0);
        }
        let mut map: HashMap<ParamMonomial, C> = HashMap::with_capacity(self.len() * o.len());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let m = *a + *b;
                let p = x.cmul(y);
                match map.get_mut(&m) {
                    Some(z) => *z = z.cadd(&p),
                    None => {
                        map.insert(m, p);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Applies a lattice map to every exponent vector.
    pub fn map_monomials(&self, f: impl Fn(ParamMonomial) -> ParamMonomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn to_cyc(&self) -> CycPoly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.to_cyc())).collect() }
    }

    /// Returns the single term if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(C, ParamMonomial)> {
        if self.terms.len() == 1 {
            Some((self.terms[0].1.clone(), self.terms[0].0))
        } else {
            None
        }
    }
}

impl ParamPoly {
    /// Binomial `x^m - 1`.
    pub fn binomial_minus_one(m: ParamMonomial) -> Self {
        Self::from_terms([(m, Rat::one()), (ParamMonomial::ONE, -Rat::one())])
    }

    pub fn from_int(k: i64) -> Self {
        Self::constant(rat(k))
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_neg_rat();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let cabs = if neg { c.cneg() } else { c.clone() };
            let unit = cabs == C::cone();
            match (m.is_one(), unit) {
                (true, _) => write!(f, "{}", cabs)?,
                (false, true) => write!(f, "{}", m)?,
                (false, false) => write!(f, "{}*{}", cabs, m)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::monomial::gen;

    #[test]
    fn ring_ops() {
        let q = ParamMonomial::half(gen::Q, 2);
        let a = ParamPoly::binomial_minus_one(q);
        let b = ParamPoly::from_terms([(q, rat(1)), (ParamMonomial::ONE, rat(1))]);
        let p = a.mul(&b);
        let expect = ParamPoly::binomial_minus_one(q.scale(2));
        assert_eq!(p, expect);
        assert!(p.sub(&expect).is_zero());
        assert_eq!(a.pow(2), a.mul(&a));
    }
}
