//! Wheel conditions at `t^{k+1} q^{r-1} = 1` and the ideal spanned by admissible `E_lambda`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{chi_star_at, degree_span, spec_monomial, GridSet, SpecSum};
use crate::error::{DahaError, Result};
use crate::modified::{specialize_laurent, SpecLaurent};
use crate::params::{gen, spec_branch, Family, ParamMonomial, ParamScalar, SpecPoly};
use crate::polyrep::XLaurent;
use crate::weights::{box_weights, Weight};

/// `m` disjoint wheels of length `k + 1` carrying total `q`-power `r - 1`.
#[derive(Clone, Debug)]
pub struct WheelSpec {
    /// `k + 1`
    pub len: usize,
    /// `r - 1`
    pub q_power: i32,
    pub wheels: usize,
    pub spec: SpecPoly,
}

impl WheelSpec {
    pub fn new(n: usize, k: i32, r: i32, wheels: usize, branch: usize) -> Result<Self> {
        let spec = spec_branch(n, Family::Tq { k, r }, branch)?;
        Self::from_spec(spec, wheels)
    }

    pub fn from_spec(spec: SpecPoly, wheels: usize) -> Result<Self> {
        let Family::Tq { k, r } = spec.family else {
            return Err(DahaError::Param(format!("wheel conditions need the tq family, got {}", spec.family)));
        };
        let len = (k + 1) as usize;
        if k + 1 < 2 || len > spec.n {
            return Err(DahaError::Param(format!("need n >= k+1 >= 2, got n = {}, k+1 = {}", spec.n, k + 1)));
        }
        if wheels == 0 || wheels * len > spec.n {
            return Err(DahaError::Param(format!("{} disjoint wheels of length {} do not fit in n = {}", wheels, len, spec.n)));
        }
        Ok(WheelSpec { len, q_power: r - 1, wheels, spec })
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn k(&self) -> i32 {
        self.len as i32 - 1
    }

    pub fn r(&self) -> i32 {
        self.q_power + 1
    }

    pub fn count(&self, mu: &Weight) -> usize {
        mu.neighborhoods(self.len, self.q_power)
    }

    /// Evaluation window for `f`: degree spread plus one full turn of a wheel.
    pub fn window(&self, f: &SpecLaurent) -> i32 {
        degree_span(f) + self.q_power * self.len as i32
    }

    /// Weights in the window with exactly `wheels` neighborhoods.
    pub fn grid(&self, window: i32) -> GridSet {
        let points = box_weights(self.n(), window).into_iter().filter(|mu| self.count(mu) == self.wheels).collect();
        GridSet { label: format!("#(mu) = {}", self.wheels), window, points }
    }
}

/// First `mu` in the window with `#(mu) = m` and `chi*_mu(f)|_{s=0} != 0`.
pub fn wheel_violation(f: &SpecLaurent, w: &WheelSpec) -> Option<Weight> {
    if f.is_empty() {
        return None;
    }
    w.grid(w.window(f)).points.into_iter().find(|mu| !chi_star_at(mu, f, &w.spec).is_zero())
}

/// The wheel condition in its grid form.
pub fn wheel_check(f: &SpecLaurent, w: &WheelSpec) -> bool {
    wheel_violation(f, w).is_none()
}

/// `wheel_check` on a polynomial over `K`; fails if a coefficient has a pole.
pub fn wheel_check_poly(f: &XLaurent, w: &WheelSpec) -> Result<bool> {
    Ok(wheel_check(&specialize_laurent(f, &w.spec)?, w))
}

/// One closed cycle `sigma_1 i_1 -> .. -> sigma_{k+1} i_{k+1} -> sigma_1 i_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wheel {
    /// 0-based indices, the first one smallest.
    pub idx: Vec<usize>,
    pub sig: Vec<i32>,
    /// `q`-power of the arrow leaving each vertex.
    pub p: Vec<i32>,
}

fn arrow_allowed(p: i32, s1: i32, s2: i32, i1: usize, i2: usize) -> bool {
    if p < 0 {
        return false;
    }
    if p > 0 {
        return true;
    }
    match (s1 > 0, s2 > 0) {
        (true, true) => i1 < i2,
        (true, false) => true,
        (false, false) => i1 > i2,
        (false, true) => false,
    }
}

fn compositions(total: i32, parts: usize) -> Vec<Vec<i32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn arrangements(pool: &[usize], len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (pos, &i) in pool.iter().enumerate() {
        let mut rest = pool.to_vec();
        rest.remove(pos);
        for mut tail in arrangements(&rest, len - 1) {
            tail.insert(0, i);
            out.push(tail);
        }
    }
    out
}

/// All wheels on `n` vertices, one representative per rotation.
pub fn all_wheels(n: usize, len: usize, q_power: i32) -> Vec<Wheel> {
    let mut out = Vec::new();
    for first in 0..n {
        let pool: Vec<usize> = (first + 1..n).collect();
        for tail in arrangements(&pool, len - 1) {
            let mut idx = vec![first];
            idx.extend(tail);
            for mask in 0..(1u32 << len) {
                let sig: Vec<i32> = (0..len).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect();
                for p in compositions(q_power, len) {
                    let ok = (0..len).all(|m| {
                        let m2 = (m + 1) % len;
                        arrow_allowed(p[m], sig[m], sig[m2], idx[m], idx[m2])
                    });
                    if ok {
                        out.push(Wheel { idx: idx.clone(), sig: sig.clone(), p });
                    }
                }
            }
        }
    }
    out
}

fn disjoint_families(all: &[Wheel], count: usize, start: usize, used: &mut Vec<bool>, cur: &mut Vec<Wheel>, out: &mut Vec<Vec<Wheel>>) {
    if cur.len() == count {
        out.push(cur.clone());
        return;
    }
    for (pos, w) in all.iter().enumerate().skip(start) {
        if w.idx.iter().any(|&i| used[i]) {
            continue;
        }
        for &i in &w.idx {
            used[i] = true;
        }
        cur.push(w.clone());
        disjoint_families(all, count, pos + 1, used, cur, out);
        cur.pop();
        for &i in &w.idx {
            used[i] = false;
        }
    }
}

/// `f` restricted to the given wheels, as a Laurent polynomial in the free `x_j` and one
/// variable per wheel.
pub fn substitute(f: &SpecLaurent, wheels: &[Wheel], s: &SpecPoly) -> BTreeMap<Vec<i32>, crate::params::SpecValue> {
    let n = f.keys().next().map_or(0, |e| e.len());
    // vertex -> (wheel, parameter monomial of z^sigma / w, sigma)
    let mut role: Vec<Option<(usize, ParamMonomial, i32)>> = vec![None; n];
    for (j, w) in wheels.iter().enumerate() {
        let mut qp = 0;
        for (l, &i) in w.idx.iter().enumerate() {
            let m = ParamMonomial::half(gen::T, 2 * l as i32) + ParamMonomial::half(gen::Q, 2 * qp);
            role[i] = Some((j, m, w.sig[l]));
            qp += w.p[l];
        }
    }
    let mut acc: BTreeMap<Vec<i32>, SpecSum> = BTreeMap::new();
    for (e, c) in f {
        let mut key = vec![0; n + wheels.len()];
        let mut m = ParamMonomial::ONE;
        for (i, &k) in e.iter().enumerate() {
            match role[i] {
                Some((j, base, sg)) => {
                    key[n + j] += sg * k;
                    m = m + base.scale(sg * k);
                }
                None => key[i] = k,
            }
        }
        acc.entry(key).or_default().push(c.mul(&spec_monomial(s, m)));
    }
    acc.into_iter().map(|(k, v)| (k, v.total())).filter(|(_, v)| !v.is_zero()).collect()
}

/// The wheel condition by direct substitution over every family of disjoint wheels.
pub fn wheel_check_direct(f: &SpecLaurent, w: &WheelSpec) -> bool {
    if f.is_empty() {
        return true;
    }
    let all = all_wheels(w.n(), w.len, w.q_power);
    let mut fams = Vec::new();
    disjoint_families(&all, w.wheels, 0, &mut vec![false; w.n()], &mut Vec::new(), &mut fams);
    fams.iter().all(|fam| substitute(f, fam, &w.spec).is_empty())
}

/// Admissible weights in the box `|lambda_i| <= window`.
pub fn admissible_basis(n: usize, window: i32, k: i32, r: i32) -> Vec<Weight> {
    box_weights(n, window).into_iter().filter(|l| l.is_admissible((k + 1) as usize, r - 1)).collect()
}

/// Neighborhood count of a nonnegative vector, with all signs `+`.
pub fn neighborhoods_nonneg(l: &Weight, a: usize, b: i32) -> usize {
    let n = l.n();
    let v = &l.0;
    assert!(v.iter().all(|&x| x >= 0), "expects a nonnegative vector");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| v[j].cmp(&v[i]).then(i.cmp(&j)));
    let mut rho = vec![0i32; n];
    for (rank, &i) in order.iter().enumerate() {
        rho[i] = (n - 1 - rank) as i32;
    }
    let mut count = 0;
    for i in 0..n {
        for j in 0..n {
            let gap = v[i] - v[j];
            if rho[i] - rho[j] == a as i32 - 1 && (gap < b || (gap == b && i > j)) {
                count += 1;
            }
        }
    }
    count
}

/// `floor(n/(k+1)) - sum_m #((k+1)m, (r-1)m) + sum_m #((k+1)m + 1, (r-1)m)`.
///
/// Neighborhoods of type `(a, b)` need `a <= n`, which bounds `m`.
pub fn wheel_zeta_formula(l: &Weight, k: i32, r: i32) -> i32 {
    let n = l.n() as i32;
    let a = k + 1;
    let b = r - 1;
    let mut z = n / a;
    let mut m = 1;
    while a * m <= n {
        z -= l.neighborhoods((a * m) as usize, b * m) as i32;
        if a * m < n {
            z += l.neighborhoods((a * m + 1) as usize, b * m) as i32;
        }
        m += 1;
    }
    z
}

/// `(m-1, .., 1, 0)` repeated `k` times.
pub fn level1_weight(k: usize, m: usize) -> Weight {
    Weight((0..k).flat_map(|_| (0..m as i32).rev()).collect())
}

/// `prod_l prod_{m(l-1) < i < j <= ml} (x_i - t^{-1} x_j)(1 - t^l q / (x_i x_j))`.
pub fn level1_product(n: usize, k: usize, m: usize) -> Result<XLaurent> {
    if k == 0 || m == 0 || n != k * m {
        return Err(DahaError::Param(format!("level-one product needs n = k m, got n = {}, k = {}, m = {}", n, k, m)));
    }
    let t_inv = ParamScalar::gen_half(gen::T, -2);
    let mut out = XLaurent::one(n);
    for l in 1..=k {
        let tlq = ParamScalar::mono(ParamMonomial::half(gen::T, 2 * l as i32) + ParamMonomial::half(gen::Q, 2));
        for i in m * (l - 1) + 1..=m * l {
            for j in i + 1..=m * l {
                let a = XLaurent::x(n, i, 1).sub(&XLaurent::x(n, j, 1).scale(&t_inv));
                let mut e = vec![0; n];
                e[i - 1] = -1;
                e[j - 1] = -1;
                let b = XLaurent::one(n).sub(&XLaurent::monomial(e, tlq.clone()));
                out = out.mul(&a).mul(&b);
            }
        }
    }
    Ok(out)
}

/// Per-weight facts about the ideal spanned by admissible `E_lambda`.
#[derive(Clone, Debug)]
pub struct AdmissibleEntry {
    pub lambda: Weight,
    pub zeta_chi0: i32,
    pub formula: i32,
    pub wheel: bool,
}

/// Checks each admissible `lambda` in the window: `E_lambda` specializes, passes the wheel
/// condition, and `zeta(chi*_0(E_lambda)) = floor(n/(k+1))`.
pub fn admissible_report(w: &WheelSpec, window: i32) -> Result<Vec<AdmissibleEntry>> {
    let mut out = Vec::new();
    for l in admissible_basis(w.n(), window, w.k(), w.r()) {
        let e = crate::koornwinder::compute_e(&l, false).body;
        let f = specialize_laurent(&e, &w.spec)?;
        let zeta_chi0 = crate::params::zeta_scalar(&crate::koornwinder::chi0_star(&l), &w.spec)?;
        out.push(AdmissibleEntry { formula: wheel_zeta_formula(&l, w.k(), w.r()), lambda: l, zeta_chi0, wheel: wheel_check(&f, w) });
    }
    Ok(out)
}

impl AdmissibleEntry {
    pub fn ok(&self, n: usize, len: usize) -> bool {
        self.wheel && self.zeta_chi0 == (n / len) as i32 && self.formula == self.zeta_chi0
    }

    pub fn to_json(&self) -> Value {
        json!({"lambda": self.lambda.0, "zeta_chi0": self.zeta_chi0, "formula": self.formula, "wheel": self.wheel})
    }
}
