//! The polynomial representation: Laurent polynomials in `x_1..x_n` over the parameter
//! field, the affine Weyl action, the Noumi operators and the operators `Y_i`, `U_n`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::params::json::{scalar_from_json, scalar_to_json};
use crate::params::{gen, named, rat, ParamMonomial, ParamPoly, ParamScalar};
use crate::weights::Weight;
use crate::{DahaError, Result};

/// A Laurent polynomial in `x_1, .., x_n` with coefficients in the parameter field.
#[derive(Clone, Debug)]
pub struct XLaurent {
    n: usize,
    terms: BTreeMap<Vec<i32>, ParamScalar>,
}

/// Collects contributions per monomial and sums each group once.
pub struct Accum {
    n: usize,
    parts: BTreeMap<Vec<i32>, Vec<ParamScalar>>,
}

impl Accum {
    pub fn new(n: usize) -> Self {
        Accum { n, parts: BTreeMap::new() }
    }

    pub fn push(&mut self, e: Vec<i32>, c: ParamScalar) {
        if !c.is_zero() {
            self.parts.entry(e).or_default().push(c);
        }
    }

    pub fn push_poly(&mut self, f: &XLaurent, scale: Option<&ParamScalar>) {
        for (e, c) in &f.terms {
            let c = match scale {
                Some(s) => c.mul(s),
                None => c.clone(),
            };
            self.push(e.clone(), c);
        }
    }

    pub fn finish(self) -> XLaurent {
        let mut terms = BTreeMap::new();
        for (e, cs) in self.parts {
            let c = ParamScalar::sum(cs);
            if !c.is_zero() {
                terms.insert(e, c);
            }
        }
        XLaurent { n: self.n, terms }
    }
}

fn shifted(e: &[i32], i: usize, di: i32, j: Option<(usize, i32)>) -> Vec<i32> {
    let mut v = e.to_vec();
    v[i] += di;
    if let Some((j, dj)) = j {
        v[j] += dj;
    }
    v
}

/// `(w^{-d} - 1) / (1 - w)` as a list of `(power of w, coefficient)`.
fn geometric(d: i32) -> Vec<(i32, i64)> {
    if d > 0 {
        (1..=d).map(|k| (-k, 1)).collect()
    } else {
        (0..-d).map(|k| (k, -1)).collect()
    }
}

impl XLaurent {
    pub fn zero(n: usize) -> Self {
        XLaurent { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], ParamScalar::one())
    }

    pub fn constant(n: usize, c: ParamScalar) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(e: Vec<i32>, c: ParamScalar) -> Self {
        let n = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        XLaurent { n, terms }
    }

    /// `x^lambda`.
    pub fn x_pow(lambda: &Weight) -> Self {
        Self::monomial(lambda.0.clone(), ParamScalar::one())
    }

    /// `x_i^{e}` (1-based `i`).
    pub fn x(n: usize, i: usize, e: i32) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = e;
        Self::monomial(v, ParamScalar::one())
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Vec<i32>, ParamScalar)>) -> Self {
        let mut acc = Accum::new(n);
        for (e, c) in it {
            assert_eq!(e.len(), n);
            acc.push(e, c);
        }
        acc.finish()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, ParamScalar> {
        &self.terms
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

    pub fn coeff(&self, e: &[i32]) -> ParamScalar {
        self.terms.get(e).cloned().unwrap_or_else(ParamScalar::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.terms.keys()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut acc = Accum::new(self.n);
        acc.push_poly(self, None);
        acc.push_poly(o, None);
        acc.finish()
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        XLaurent { n: self.n, terms }
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: &[i32]) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone())).collect();
        XLaurent { n: self.n, terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc = Accum::new(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                acc.push(a.iter().zip(b).map(|(p, q)| p + q).collect(), x.mul(y));
            }
        }
        acc.finish()
    }

    /// Exact equality in the parameter field.
    pub fn eq_poly(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }

    /// Parameter swap `t_0^{1/2} <-> u_n^{1/2}` applied to the coefficients.
    pub fn dual(&self) -> Self {
        self.map_coeffs(|c| c.dual())
    }

    /// Affine Weyl action, `x^delta = q`.
    pub fn weyl_act(&self, i: usize) -> Self {
        let n = self.n;
        let mut acc = Accum::new(n);
        for (e, c) in &self.terms {
            let mut v = e.clone();
            let mut c = c.clone();
            match i {
                0 => {
                    c = c.mul_monomial(ParamMonomial::half(gen::Q, 2 * v[0]));
                    v[0] = -v[0];
                }
                _ if i == n => v[n - 1] = -v[n - 1],
                _ => v.swap(i - 1, i),
            }
            acc.push(v, c);
        }
        acc.finish()
    }

    /// Substitutes `x_i -> m_i` for parameter monomials `m_i`.
    pub fn eval_monomials(&self, m: &[ParamMonomial]) -> ParamScalar {
        ParamScalar::sum(self.terms.iter().map(|(e, c)| {
            let mut u = ParamMonomial::ONE;
            for (k, &ek) in e.iter().enumerate() {
                u = u + m[k].scale(ek);
            }
            c.mul_monomial(u)
        }))
    }

    /// Greatest exponent span over the variables.
    pub fn degree_span(&self) -> i32 {
        let mut span = 0;
        for i in 0..self.n {
            let lo = self.terms.keys().map(|e| e[i]).min().unwrap_or(0);
            let hi = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            span = span.max(hi - lo);
        }
        span
    }

    pub fn max_abs_exponent(&self) -> i32 {
        self.terms.keys().flat_map(|e| e.iter().map(|x| x.abs())).max().unwrap_or(0)
    }

    /// Monomials in graded reverse-lexicographic order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i32>, &ParamScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| grevlex(b, a));
        v
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.sorted_terms().into_iter().map(|(e, c)| json!([e, scalar_to_json(c)])).collect())
    }

    pub fn from_json(n: usize, v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| DahaError::Parse("polynomial must be an array".into()))?;
        let mut terms = Vec::new();
        for t in arr {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| DahaError::Parse("term".into()))?;
            let e: Vec<i32> = serde_json::from_value(pair[0].clone()).map_err(|e| DahaError::Parse(e.to_string()))?;
            if e.len() != n {
                return Err(DahaError::Parse("exponent length".into()));
            }
            terms.push((e, scalar_from_json(&pair[1])?));
        }
        Ok(Self::from_terms(n, terms))
    }
}

/// Graded reverse-lexicographic comparison on total degree, ties broken by vector order.
pub fn grevlex(a: &[i32], b: &[i32]) -> std::cmp::Ordering {
    let da: i32 = a.iter().sum();
    let db: i32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for k in (0..a.len()).rev() {
            if a[k] != b[k] {
                return b[k].cmp(&a[k]);
            }
        }
        std::cmp::Ordering::Equal
    })
    .then_with(|| a.cmp(b))
}

impl PartialEq for XLaurent {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.eq_poly(o)
    }
}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, "\n  + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "[{}]*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A letter of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    /// `T_i^{+-1}`
    T(usize, i32),
    /// Multiplication by `x_i^{+-1}`
    X(usize, i32),
    /// `Y_i^{+-1}`
    Y(usize, i32),
    /// `U_n^{+-1}`
    U(i32),
    /// Weyl reflection `s_i`
    S(usize),
}

/// Per-monomial pieces of `T_i^{+-1} x^mu`: `(shift of mu, coefficient)`.
fn t_image(n: usize, i: usize, sign: i32, e: &[i32]) -> Vec<(Vec<i32>, ParamPoly)> {
    let half = |g: usize, k: i32| ParamPoly::monomial(rat(1), ParamMonomial::half(g, k));
    let (g, lead) = match i {
        0 => (gen::T0, half(gen::T0, sign)),
        _ if i == n => (gen::TN, half(gen::TN, sign)),
        _ => (gen::T, half(gen::T, sign)),
    };
    let pre = half(g, -1);
    let mut out = vec![(e.to_vec(), lead)];
    match i {
        0 => {
            // w = q x_1^{-2}; prefactor (1 - c/x_1)(1 - d/x_1) = 1 - (c+d) x_1^{-1} + cd x_1^{-2}
            let cd_sum = named::c().add(&named::d()).to_fraction().0;
            let cd_prod = named::c().mul(&named::d()).to_fraction().0;
            for (k, s) in geometric(-e[0]) {
                let qk = ParamPoly::monomial(rat(s), ParamMonomial::half(gen::Q, 2 * k)).mul(&pre);
                out.push((shifted(e, 0, -2 * k, None), qk.clone()));
                out.push((shifted(e, 0, -2 * k - 1, None), qk.mul(&cd_sum).neg()));
                out.push((shifted(e, 0, -2 * k - 2, None), qk.mul(&cd_prod)));
            }
        }
        _ if i == n => {
            // w = x_n^2; prefactor (1 - a x_n)(1 - b x_n)
            let ab_sum = named::a().add(&named::b()).to_fraction().0;
            let ab_prod = named::a().mul(&named::b()).to_fraction().0;
            for (k, s) in geometric(e[n - 1]) {
                let c = pre.scale(&rat(s), ParamMonomial::ONE);
                out.push((shifted(e, n - 1, 2 * k, None), c.clone()));
                out.push((shifted(e, n - 1, 2 * k + 1, None), c.mul(&ab_sum).neg()));
                out.push((shifted(e, n - 1, 2 * k + 2, None), c.mul(&ab_prod)));
            }
        }
        _ => {
            // z = x_i / x_{i+1}; prefactor 1 - t z
            let t = ParamPoly::monomial(rat(1), ParamMonomial::half(gen::T, 2));
            for (k, s) in geometric(e[i - 1] - e[i]) {
                let c = pre.scale(&rat(s), ParamMonomial::ONE);
                out.push((shifted(e, i - 1, k, Some((i, -k))), c.clone()));
                out.push((shifted(e, i - 1, k + 1, Some((i, -k - 1))), c.mul(&t).neg()));
            }
        }
    }
    out
}

/// `T_i^{sign} f` in the Noumi representation.
pub fn noumi_t(i: usize, sign: i32, f: &XLaurent) -> XLaurent {
    let n = f.n;
    assert!(i <= n && (sign == 1 || sign == -1));
    let mut acc = Accum::new(n);
    for (e, c) in &f.terms {
        for (v, p) in t_image(n, i, sign, e) {
            if !p.is_zero() {
                acc.push(v, c.mul(&ParamScalar::from_poly(&p)));
            }
        }
    }
    acc.finish()
}

/// The word of `Y_i^{sign}`, applied right to left.
pub fn y_word(n: usize, i: usize, sign: i32) -> Vec<Op> {
    let mut w: Vec<Op> = Vec::new();
    for j in i..n {
        w.push(Op::T(j, 1));
    }
    w.push(Op::T(n, 1));
    for j in (1..n).rev() {
        w.push(Op::T(j, 1));
    }
    w.push(Op::T(0, 1));
    for j in 1..i {
        w.push(Op::T(j, -1));
    }
    if sign < 0 {
        w.reverse();
        for op in w.iter_mut() {
            if let Op::T(j, s) = *op {
                *op = Op::T(j, -s);
            }
        }
    }
    w
}

/// Applies an operator word; the last letter acts first.
pub fn apply_word(word: &[Op], f: &XLaurent) -> XLaurent {
    word.iter().rev().fold(f.clone(), |g, op| apply(*op, &g))
}

pub fn apply(op: Op, f: &XLaurent) -> XLaurent {
    let n = f.n;
    match op {
        Op::T(i, s) => noumi_t(i, s, f),
        Op::X(i, s) => f.shift(&XLaurent::x(n, i, s).terms.keys().next().unwrap().clone()),
        Op::Y(i, s) => apply_word(&y_word(n, i, s), f),
        Op::U(s) => u_n_op(s, f),
        Op::S(i) => f.weyl_act(i),
    }
}

pub fn y_op(i: usize, f: &XLaurent) -> XLaurent {
    apply_word(&y_word(f.n, i, 1), f)
}

/// `U_n = X_1^{-1} T_0 Y_1^{-1}` and its inverse `Y_1 T_0^{-1} X_1`.
pub fn u_n_op(sign: i32, f: &XLaurent) -> XLaurent {
    if sign > 0 {
        apply_word(&[Op::X(1, -1), Op::T(0, 1), Op::Y(1, -1)], f)
    } else {
        apply_word(&[Op::Y(1, 1), Op::T(0, -1), Op::X(1, 1)], f)
    }
}

/// `chi_lambda(f) = f(y(lambda)^{-1})`, or with dual eigenvalues.
pub fn chi_eval(lambda: &Weight, f: &XLaurent, dual: bool) -> ParamScalar {
    let m: Vec<ParamMonomial> = lambda.y_monomials(dual).into_iter().map(|m| -m).collect();
    f.eval_monomials(&m)
}

/// The quadratic, inverse, braid and `X`-`T` relations of the algebra, each checked on `f`.
pub fn relation_suite(f: &XLaurent) -> Vec<(String, bool)> {
    let n = f.n;
    let mut out = Vec::new();
    let w = |word: &[Op]| apply_word(word, f);
    for i in 0..=n {
        let g = match i {
            0 => gen::T0,
            _ if i == n => gen::TN,
            _ => gen::T,
        };
        let tau = ParamScalar::gen_half(g, 1);
        let a = noumi_t(i, 1, f).add(&f.scale(&tau.inv()));
        let quad = noumi_t(i, 1, &a).sub(&a.scale(&tau));
        out.push((format!("quadratic T{}", i), quad.is_zero()));
        out.push((format!("inverse T{}", i), noumi_t(i, -1, &noumi_t(i, 1, f)) == *f));
    }
    let t = |i: usize| Op::T(i, 1);
    out.push(("braid T0 T1".into(), w(&[t(0), t(1), t(0), t(1)]) == w(&[t(1), t(0), t(1), t(0)])));
    out.push((format!("braid T{} T{}", n - 1, n), w(&[t(n - 1), t(n), t(n - 1), t(n)]) == w(&[t(n), t(n - 1), t(n), t(n - 1)])));
    for i in 1..n.saturating_sub(1) {
        out.push((format!("braid T{} T{}", i, i + 1), w(&[t(i), t(i + 1), t(i)]) == w(&[t(i + 1), t(i), t(i + 1)])));
    }
    for i in 0..=n {
        for j in i + 2..=n {
            out.push((format!("commute T{} T{}", i, j), w(&[t(i), t(j)]) == w(&[t(j), t(i)])));
        }
    }
    for i in 1..n {
        out.push((format!("T{0} X{0} T{0} = X{1}", i, i + 1), w(&[t(i), Op::X(i, 1), t(i)]) == w(&[Op::X(i + 1, 1)])));
    }
    for i in 0..=n {
        for j in 1..=n {
            let touches = match i {
                0 => j == 1,
                _ if i == n => j == n,
                _ => j == i || j == i + 1,
            };
            if !touches {
                out.push((format!("commute T{} X{}", i, j), w(&[t(i), Op::X(j, 1)]) == w(&[Op::X(j, 1), t(i)])));
            }
        }
    }
    let lhs = w(&[Op::X(n, -1), Op::T(n, -1)]);
    let rhs = w(&[t(n), Op::X(n, 1)]).add(&f.scale(&named::half_diff(gen::UN)));
    out.push((format!("X{0}^-1 T{0}^-1 = T{0} X{0} + (un^1/2 - un^-1/2)", n), lhs == rhs));
    let lhs = w(&[Op::T(0, -1), Op::X(1, 1)]).scale(&ParamScalar::gen_half(gen::Q, -1));
    let rhs = w(&[Op::X(1, -1), t(0)]).scale(&ParamScalar::gen_half(gen::Q, 1)).add(&f.scale(&named::half_diff(gen::U0)));
    out.push(("q^-1/2 T0^-1 X1 = q^1/2 X1^-1 T0 + (u0^1/2 - u0^-1/2)".into(), lhs == rhs));
    out
}

/// Random Laurent polynomial with small integer coefficients and exponents, for tests.
pub fn random_laurent<R: rand::Rng>(rng: &mut R, n: usize, terms: usize, deg: i32, with_params: bool) -> XLaurent {
    let mut out = Vec::new();
    for _ in 0..terms {
        let e: Vec<i32> = (0..n).map(|_| rng.gen_range(-deg..=deg)).collect();
        let mut c = ParamScalar::from_int(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
        if with_params {
            let mut m = [0i32; 6];
            m[rng.gen_range(0..6)] = rng.gen_range(-2..=2);
            c = c.mul_monomial(ParamMonomial(m));
        }
        out.push((e, c));
    }
    XLaurent::from_terms(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_examples() {
        let x1 = XLaurent::x(2, 1, 1);
        let expect = XLaurent::monomial(vec![-1, 0], named::q());
        assert_eq!(x1.weyl_act(0), expect);
        assert_eq!(XLaurent::x(2, 2, -1).weyl_act(2), XLaurent::x(2, 2, 1));
        let x12 = XLaurent::monomial(vec![1, 1], ParamScalar::one());
        assert_eq!(x12.weyl_act(1), x12);
    }

    #[test]
    fn t_on_constants() {
        let one = XLaurent::one(3);
        assert_eq!(noumi_t(1, 1, &one), XLaurent::constant(3, ParamScalar::gen_half(gen::T, 1)));
        assert_eq!(noumi_t(3, -1, &one), XLaurent::constant(3, ParamScalar::gen_half(gen::TN, -1)));
    }

    #[test]
    fn inverse_and_quadratic() {
        let f = XLaurent::from_terms(
            2,
            [
                (vec![2, -1], ParamScalar::from_int(3)),
                (vec![-1, 1], named::q()),
                (vec![0, 0], ParamScalar::one()),
            ],
        );
        for i in 0..=2 {
            let g = noumi_t(i, -1, &noumi_t(i, 1, &f));
            assert_eq!(g, f, "T_{} inverse", i);
        }
        let th = ParamScalar::gen_half(gen::T, 1);
        let lhs = noumi_t(1, 1, &f).sub(&f.scale(&th));
        let res = noumi_t(1, 1, &lhs).add(&lhs.scale(&th.inv()));
        assert!(res.is_zero());
    }

    #[test]
    fn y_on_one() {
        let one = XLaurent::one(2);
        let y = y_op(1, &one);
        let expect = ParamScalar::gen_half(gen::T, 2).mul(&named::a_star());
        assert_eq!(y, XLaurent::constant(2, expect));
    }
}
