//! The polynomial representation at `q` a root of unity: `(r-1)`-quotients, the arrow
//! classification, connectivity to `lambda^std` and the fiber map.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde_json::{json, Value};

use crate::error::{DahaError, Result};
use crate::koornwinder::c_coeff;
use crate::params::{spec_branch, zeta_scalar, Family, SpecPoly};
use crate::weights::{box_weights, Partition, Weight};

/// A factor of `q^{r-1} = 1` with `q^{1/2}` a root of unity.
pub fn q_spec(n: usize, r: i32, branch: usize) -> Result<SpecPoly> {
    spec_branch(n, Family::Tq { k: -1, r }, branch)
}

/// Arrow type between `lambda` and `s_i . lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QArrow {
    Forward,
    Backward,
    Both,
    Fixed,
}

impl QArrow {
    pub fn symbol(self) -> &'static str {
        match self {
            QArrow::Forward => "->",
            QArrow::Backward => "<-",
            QArrow::Both => "<->",
            QArrow::Fixed => "fixed",
        }
    }
}

/// `c_{i,lambda}|_{s=0} = 0`.
fn c_vanishes(i: usize, l: &Weight, s: &SpecPoly) -> Result<bool> {
    let z = zeta_scalar(&c_coeff(i, l), s)?;
    if z < 0 {
        return Err(DahaError::Invariant(format!("c_{{{},{:?}}} has a pole at {}", i, l.0, s)));
    }
    Ok(z > 0)
}

/// `d` as a multiple of a fundamental weight: `Some(+-j)` for `+-varpi_j`, `Some(0)` for zero.
fn varpi_index(d: &[i32]) -> Option<i32> {
    if d.iter().all(|&x| x == 0) {
        return Some(0);
    }
    let sign = d[0].signum();
    let j = d.iter().take_while(|&&x| x == sign).count();
    if j > 0 && d[j..].iter().all(|&x| x == 0) {
        Some(sign * j as i32)
    } else {
        None
    }
}

/// One row of the arrow table.
#[derive(Clone, Debug)]
pub struct QStep {
    pub i: usize,
    pub target: Weight,
    pub arrow: QArrow,
    /// `c_{i,lambda}|_{s=0} = 0`
    pub c_zero: bool,
    /// `c_{i,s_i lambda}|_{s=0} = 0`
    pub c_back_zero: bool,
    pub target_quot: Partition,
    /// `+-j` when the quotient moves by `+-varpi_j`, `0` when it is kept.
    pub shift: Option<i32>,
}

impl QStep {
    /// The arrow type agrees with the change of quotient.
    pub fn consistent(&self) -> bool {
        match (self.arrow, self.shift) {
            (QArrow::Fixed, _) => true,
            (QArrow::Forward, Some(j)) => j > 0,
            (QArrow::Backward, Some(j)) => j < 0,
            (QArrow::Both, Some(j)) => j == 0,
            _ => false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "i": self.i,
            "target": self.target.0,
            "arrow": self.arrow.symbol(),
            "c_zero": self.c_zero,
            "c_back_zero": self.c_back_zero,
            "target_quot": self.target_quot.0,
            "varpi_shift": self.shift,
            "consistent": self.consistent(),
        })
    }
}

pub fn q_classify(i: usize, l: &Weight, r: i32, s: &SpecPoly) -> Result<QStep> {
    let target = l.dot(i);
    let (quot, _) = l.quotient(r);
    let (target_quot, _) = target.quotient(r);
    let d: Vec<i32> = target_quot.0.iter().zip(&quot.0).map(|(a, b)| a - b).collect();
    let shift = varpi_index(&d);
    if target == *l {
        return Ok(QStep { i, target, arrow: QArrow::Fixed, c_zero: false, c_back_zero: false, target_quot, shift });
    }
    let c_zero = c_vanishes(i, l, s)?;
    let c_back_zero = c_vanishes(i, &target, s)?;
    let arrow = match (c_zero, c_back_zero) {
        (false, false) => QArrow::Both,
        (false, true) => QArrow::Forward,
        (true, false) => QArrow::Backward,
        (true, true) => return Err(DahaError::Invariant(format!("both c-coefficients vanish at {:?}, i = {}", l.0, i))),
    };
    Ok(QStep { i, target, arrow, c_zero, c_back_zero, target_quot, shift })
}

/// Move negative entries to the front: `(-lambda_{i_l} - 1, .., -lambda_{i_1} - 1, nonnegative entries)`.
pub fn step_nonnegative(l: &Weight) -> Weight {
    let mut v: Vec<i32> = l.0.iter().rev().filter(|&&x| x < 0).map(|x| -x - 1).collect();
    v.extend(l.0.iter().copied().filter(|&x| x >= 0));
    Weight(v)
}

fn is_partition(v: &[i32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1]) && v.last().map_or(true, |&x| x >= 0)
}

/// One rotation towards a dominant weight, for `lambda` with nonnegative entries.
pub fn step_dominant(l: &Weight) -> Weight {
    let n = l.n();
    let order: Vec<usize> = l.dominant_order().into_iter().map(|j| j + 1).collect();
    let mut ell = n;
    while ell > 0 && order[ell - 1] == ell {
        ell -= 1;
    }
    // order[ell..] is the identity tail; order[ell - 1] is the first index out of place
    let il = order[ell - 1];
    let v = &l.0;
    let mut out: Vec<i32> = (il..ell).map(|j| v[j] - 1).collect();
    out.extend(&v[..il]);
    out.extend(&v[ell..]);
    Weight(out)
}

/// Subtract one from `lambda_1, .., lambda_l`, `l` the last position differing from `std`.
pub fn step_standard(l: &Weight, std: &Weight) -> Weight {
    let ell = (0..l.n()).rev().find(|&j| l.0[j] != std.0[j]).expect("already standard");
    let mut v = l.0.clone();
    for x in &mut v[..=ell] {
        *x -= 1;
    }
    Weight(v)
}

/// The milestones of the connectivity argument, ending at `lambda^std`.
pub fn q_milestones(l: &Weight, r: i32) -> Vec<Weight> {
    let (_, std) = l.quotient(r);
    let mut out = vec![l.clone()];
    let mut cur = step_nonnegative(l);
    if cur != *l {
        out.push(cur.clone());
    }
    while !is_partition(&cur.0) {
        cur = step_dominant(&cur);
        out.push(cur.clone());
    }
    while cur != std {
        cur = step_standard(&cur, &std);
        out.push(cur.clone());
    }
    out
}

/// A shortest path of quotient-preserving dot moves from `a` to `b`.
pub fn q_connect(a: &Weight, b: &Weight, r: i32) -> Option<Vec<(usize, Weight)>> {
    let n = a.n();
    let quot = a.quotient(r).0;
    if b.quotient(r).0 != quot {
        return None;
    }
    let bound = (r - 1) * (quot.0[0] + n as i32 + 1) + 1;
    let mut prev: HashMap<Weight, (usize, Weight)> = HashMap::new();
    let mut queue = VecDeque::from([a.clone()]);
    let mut seen = BTreeSet::from([a.clone()]);
    while let Some(cur) = queue.pop_front() {
        if cur == *b {
            let mut path = Vec::new();
            let mut x = cur;
            while let Some((i, p)) = prev.get(&x) {
                path.push((*i, x.clone()));
                x = p.clone();
            }
            path.reverse();
            return Some(path);
        }
        for i in 0..=n {
            let next = cur.dot(i);
            if next.max_abs() > bound || seen.contains(&next) || next.quotient(r).0 != quot {
                continue;
            }
            seen.insert(next.clone());
            prev.insert(next.clone(), (i, cur.clone()));
            queue.push_back(next);
        }
    }
    None
}

/// `lambda'_{i_m} = lambda_{i_m} - sgn(lambda_{i_m}) std_m`.
pub fn fiber_map(l: &Weight, r: i32) -> Weight {
    let (_, std) = l.quotient(r);
    let mut v = l.0.clone();
    for (m, &j) in l.dominant_order().iter().enumerate() {
        let sg = if l.0[j] < 0 { -1 } else { 1 };
        v[j] -= sg * std.0[m];
    }
    Weight(v)
}

/// Specialized `y(lambda)` as a comparable key.
pub fn y_key(l: &Weight, s: &SpecPoly) -> Vec<String> {
    l.y_monomials(false)
        .into_iter()
        .map(|m| {
            let (root, red) = s.reduce_monomial(m);
            format!("{}|{:?}", root, red.0)
        })
        .collect()
}

/// Full report for one weight.
#[derive(Clone, Debug)]
pub struct QReport {
    pub lambda: Weight,
    pub r: i32,
    pub order: Vec<usize>,
    pub p: Vec<i32>,
    pub quot: Partition,
    pub std: Weight,
    pub arrows: Vec<QStep>,
    pub milestones: Vec<Weight>,
    /// Every move from `lambda` to `lambda^std`, each one checked to be `<->`.
    pub path: Vec<(usize, Weight, QArrow)>,
    pub connected: bool,
    pub fiber: Weight,
    pub fiber_ok: bool,
}

impl QReport {
    pub fn ok(&self) -> bool {
        self.arrows.iter().all(QStep::consistent) && self.connected && self.fiber_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.0,
            "r": self.r,
            "order": self.order,
            "p": self.p,
            "quot": self.quot.0,
            "std": self.std.0,
            "arrows": self.arrows.iter().map(QStep::to_json).collect::<Vec<_>>(),
            "milestones": self.milestones.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
            "path": self.path.iter().map(|(i, w, a)| json!({"i": i, "to": w.0, "arrow": a.symbol()})).collect::<Vec<_>>(),
            "connected": self.connected,
            "fiber": self.fiber.0,
            "fiber_ok": self.fiber_ok,
            "ok": self.ok(),
        })
    }
}

pub fn quotient_lattice(l: &Weight, r: i32, s: &SpecPoly) -> Result<QReport> {
    let n = l.n();
    if r < 2 {
        return Err(DahaError::Param("need r - 1 >= 1".into()));
    }
    let (quot, std) = l.quotient(r);
    let mut p: Vec<i32> = quot.0.windows(2).map(|w| w[0] - w[1]).collect();
    p.push(*quot.0.last().unwrap());
    let arrows = (0..=n).map(|i| q_classify(i, l, r, s)).collect::<Result<Vec<_>>>()?;
    let milestones = q_milestones(l, r);
    let mut path = Vec::new();
    let mut connected = milestones.last() == Some(&std);
    for w in milestones.windows(2) {
        let Some(seg) = q_connect(&w[0], &w[1], r) else {
            connected = false;
            break;
        };
        let mut cur = w[0].clone();
        for (i, next) in seg {
            let a = q_classify(i, &cur, r, s)?.arrow;
            connected &= a == QArrow::Both;
            path.push((i, next.clone(), a));
            cur = next;
        }
    }
    let fiber = fiber_map(l, r);
    let fiber_ok = fiber.quotient(r).0.0.iter().all(|&x| x == 0) && y_key(&fiber, s) == y_key(l, s);
    Ok(QReport {
        lambda: l.clone(),
        r,
        order: l.dominant_order().into_iter().map(|j| j + 1).collect(),
        p,
        quot,
        std,
        arrows,
        milestones,
        path,
        connected,
        fiber,
        fiber_ok,
    })
}

/// Rows of the arrow table in the box whose type disagrees with the quotient change.
pub fn q_arrows_sweep(n: usize, r: i32, window: i32, s: &SpecPoly) -> Result<Vec<QStep>> {
    let mut bad = Vec::new();
    for l in box_weights(n, window) {
        for i in 0..=n {
            let st = q_classify(i, &l, r, s)?;
            if !st.consistent() {
                bad.push(st);
            }
        }
    }
    Ok(bad)
}

/// `mu - nu` is a nonnegative combination of fundamental weights.
pub fn varpi_geq(mu: &Partition, nu: &Partition) -> bool {
    let d: Vec<i32> = mu.0.iter().zip(&nu.0).map(|(a, b)| a - b).collect();
    is_partition(&d)
}

/// Partitions with at most `n` parts and size at most `size`.
pub fn partitions_up_to(n: usize, size: i32) -> Vec<Partition> {
    fn rec(n: usize, max: i32, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Partition>) {
        if cur.len() == n {
            out.push(Partition(cur.clone()));
            return;
        }
        for x in 0..=max.min(left) {
            cur.push(x);
            rec(n, x, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, size, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Quotients reachable from `E_{mu^std}` by intertwiners that do not vanish at `s = 0`.
pub fn reachable_quotients(mu: &Partition, r: i32, s: &SpecPoly, bound: i32) -> Result<BTreeSet<Partition>> {
    let n = mu.0.len();
    let start = Weight(mu.0.iter().map(|x| x * (r - 1)).collect());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = BTreeSet::new();
    while let Some(cur) = queue.pop_front() {
        out.insert(cur.quotient(r).0);
        for i in 0..=n {
            let next = cur.dot(i);
            if next == cur || next.max_abs() > bound || seen.contains(&next) || c_vanishes(i, &cur, s)? {
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(out)
}

/// Pairs `(mu, nu)` where `V_{>=mu} in V_{>=nu}` disagrees with `mu >= nu`.
///
/// `V_{>=mu}` is generated by `E_{mu^std}`, so the inclusion holds iff `mu` is reachable
/// from `nu^std`.
pub fn inclusion_mismatches(n: usize, r: i32, size: i32, s: &SpecPoly) -> Result<Vec<(Partition, Partition)>> {
    let parts = partitions_up_to(n, size);
    let bound = (r - 1) * (size + n as i32 + 2);
    let mut reach = BTreeMap::new();
    for nu in &parts {
        reach.insert(nu.clone(), reachable_quotients(nu, r, s, bound)?);
    }
    let mut bad = Vec::new();
    for mu in &parts {
        for nu in &parts {
            if reach[nu].contains(mu) != varpi_geq(mu, nu) {
                bad.push((mu.clone(), nu.clone()));
            }
        }
    }
    Ok(bad)
}

/// Two distinct weights of one quotient sharing `y|_{s=0}`, if any.
pub fn fiber_collision(n: usize, r: i32, window: i32, s: &SpecPoly) -> Option<(Weight, Weight)> {
    let mut seen: HashMap<(Partition, Vec<String>), Weight> = HashMap::new();
    for l in box_weights(n, window) {
        let key = (l.quotient(r).0, y_key(&l, s));
        if let Some(other) = seen.insert(key, l.clone()) {
            return Some((other, l));
        }
    }
    None
}
