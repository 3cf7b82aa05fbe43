//! Combinatorics on `Z^n`: dominant representatives, signed permutations, the dot
//! action of the affine Weyl group, orderings, eigenvalues and `(r-1)`-quotients.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::params::{gen, ParamMonomial, ParamScalar};

/// A weight `lambda` in `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i32>);

/// Element of `W_0` as a permutation of `{+-1, .., +-n}`; entry `i` is `w(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedPerm(pub Vec<i32>);

/// Weakly decreasing nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(pub Vec<i32>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i32).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `w v`, where `w e_i = sgn(w(i)) e_{|w(i)|}`.
    pub fn act(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0; v.len()];
        for (i, &wi) in self.0.iter().enumerate() {
            out[wi.unsigned_abs() as usize - 1] = wi.signum() * v[i];
        }
        out
    }

    /// Number of positive roots `e_i - e_j, e_i + e_j (i < j), e_i` sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.n();
        let img = |i: usize| (self.0[i].unsigned_abs() as usize - 1, self.0[i].signum());
        let positive = |terms: &[(usize, i32)]| {
            let mut t = terms.to_vec();
            t.sort();
            t[0].1 > 0
        };
        let mut len = 0;
        for i in 0..n {
            let (pi, si) = img(i);
            if si < 0 {
                len += 1;
            }
            for j in i + 1..n {
                let (pj, sj) = img(j);
                if !positive(&[(pi, si), (pj, -sj)]) {
                    len += 1;
                }
                if !positive(&[(pi, si), (pj, sj)]) {
                    len += 1;
                }
            }
        }
        len
    }

    /// All `2^n n!` elements.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut perms: Vec<Vec<i32>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n as i32 {
                    if !p.iter().any(|x| x.abs() == v) {
                        for s in [1, -1] {
                            let mut q = p.clone();
                            q.push(s * v);
                            next.push(q);
                        }
                    }
                }
            }
            perms = next;
        }
        perms.into_iter().map(SignedPerm).collect()
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Cached data of a weight: `lambda^+`, `w_lambda^+`, `rho(lambda)` and `sigma(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub plus: Partition,
    pub w: SignedPerm,
    pub rho: Vec<i32>,
    pub sigma: Vec<i32>,
}

impl Weight {
    pub fn new(v: Vec<i32>) -> Self {
        Weight(v)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `e_i` (1-based), negated when `sign < 0`.
    pub fn unit(n: usize, i: usize, sign: i32) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = sign;
        Weight(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn max_abs(&self) -> i32 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn sigma(&self) -> Vec<i32> {
        self.0.iter().map(|&x| if x < 0 { -1 } else { 1 }).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().map_or(true, |&x| x >= 0)
    }

    /// Positions of `lambda` (0-based) in the order of the entries of `lambda^+`:
    /// by `|lambda_j|` descending, then positive entries left to right, then negative
    /// entries right to left. This is the shortest `w` with `w lambda^+ = lambda`.
    pub fn dominant_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.n()).collect();
        let v = &self.0;
        idx.sort_by(|&a, &b| {
            let (x, y) = (v[a], v[b]);
            y.abs().cmp(&x.abs()).then_with(|| {
                let (sa, sb) = (x < 0, y < 0);
                sa.cmp(&sb).then_with(|| if sa { b.cmp(&a) } else { a.cmp(&b) })
            })
        });
        idx
    }

    pub fn data(&self) -> WeightData {
        let n = self.n();
        let order = self.dominant_order();
        let sigma = self.sigma();
        let mut plus = vec![0; n];
        let mut w = vec![0; n];
        let mut rho = vec![0; n];
        for (m, &j) in order.iter().enumerate() {
            plus[m] = self.0[j].abs();
            w[m] = sigma[j] * (j as i32 + 1);
            rho[j] = sigma[j] * (n - 1 - m) as i32;
        }
        WeightData { plus: Partition(plus), w: SignedPerm(w), rho, sigma }
    }

    pub fn plus(&self) -> Weight {
        Weight(self.data().plus.0)
    }

    pub fn rho(&self) -> Vec<i32> {
        self.data().rho
    }

    /// Dot action of `s_i`, `0 <= i <= n`.
    pub fn dot(&self, i: usize) -> Weight {
        let n = self.n();
        assert!(i <= n, "s_{} out of range for n = {}", i, n);
        let mut v = self.0.clone();
        match i {
            0 => v[0] = -1 - v[0],
            _ if i == n => v[n - 1] = -v[n - 1],
            _ => v.swap(i - 1, i),
        }
        Weight(v)
    }

    /// Dot action of a word applied right to left (`word[0]` acts last).
    pub fn dot_word(&self, word: &[usize]) -> Weight {
        word.iter().rev().fold(self.clone(), |l, &i| l.dot(i))
    }

    /// `<lambda, alpha_i>` with `alpha_n = 2 e_n` and `alpha_0 = delta - 2 e_1`.
    pub fn pairing(&self, i: usize) -> i32 {
        let n = self.n();
        match i {
            0 => -2 * self.0[0],
            _ if i == n => 2 * self.0[n - 1],
            _ => self.0[i - 1] - self.0[i],
        }
    }

    /// Sign deciding the branch of `c_{i,lambda}`: `+1` for the rational-function case,
    /// `0` when `s_i` fixes `lambda`, `-1` for the monomial case.
    pub fn branch_sign(&self, i: usize) -> i32 {
        if i == 0 {
            if self.0[0] < 0 {
                1
            } else {
                -1
            }
        } else {
            self.pairing(i).signum()
        }
    }

    /// `y(lambda)_i` (or `y*(lambda)_i` when `dual`) as monic monomials.
    pub fn y_monomials(&self, dual: bool) -> Vec<ParamMonomial> {
        let d = self.data();
        let a = if dual { ParamMonomial([0, 0, 1, 0, 1, 0]) } else { ParamMonomial([0, 0, 1, 1, 0, 0]) };
        (0..self.n())
            .map(|i| ParamMonomial::half(gen::Q, 2 * self.0[i]) + ParamMonomial::half(gen::T, 2 * d.rho[i]) + a.scale(d.sigma[i]))
            .collect()
    }

    pub fn y_eigenvalue(&self, dual: bool) -> Vec<ParamScalar> {
        self.y_monomials(dual).into_iter().map(ParamScalar::mono).collect()
    }

    /// Shortest-word path from `0` to `lambda`, returned as `j_1, .., j_l` in order of application.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut cur = self.clone();
        let mut rev = Vec::new();
        while !cur.is_zero() {
            let i = (0..=n).find(|&i| cur.branch_sign(i) > 0).expect("a descent exists for nonzero weights");
            let next = cur.dot(i);
            debug_assert!(precedes(&next, &cur));
            rev.push(i);
            cur = next;
        }
        rev.reverse();
        rev
    }

    /// `lambda^0`: image of the shortest `w` with `w lambda` in `Z_{>=0}^n`.
    ///
    /// Nonnegative entries keep their relative order and come first; the negated
    /// negative entries follow in reverse order.
    pub fn lambda_zero(&self) -> Weight {
        let mut out: Vec<i32> = self.0.iter().copied().filter(|&x| x >= 0).collect();
        out.extend(self.0.iter().rev().filter(|&&x| x < 0).map(|x| -x));
        Weight(out)
    }

    /// Number of `(a, b)`-neighborhoods.
    pub fn neighborhoods(&self, a: usize, b: i32) -> usize {
        let d = self.data();
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in 0..n {
                if d.rho[i].abs() - d.rho[j].abs() != a as i32 - 1 {
                    continue;
                }
                let gap = self.0[i].abs() - self.0[j].abs();
                if gap > b {
                    continue;
                }
                if gap == b && !beta_case(d.sigma[i], d.sigma[j], i, j) {
                    continue;
                }
                count += 1;
            }
        }
        count
    }

    pub fn is_admissible(&self, a: usize, b: i32) -> bool {
        self.neighborhoods(a, b) == 0
    }

    /// The `(r-1)`-quotient and `lambda^std`.
    pub fn quotient(&self, r: i32) -> (Partition, Weight) {
        assert!(r >= 2, "need r - 1 >= 1");
        let n = self.n();
        let order = self.dominant_order();
        let sigma = self.sigma();
        let mut p = vec![0i32; n];
        for m in 0..n {
            let im = order[m];
            let (vm, sm) = (self.0[im].abs(), sigma[im]);
            let (inext, vn, sn) = if m + 1 < n { (order[m + 1], self.0[order[m + 1]].abs(), sigma[order[m + 1]]) } else { (n, 0, 1) };
            let beta = beta_case(sm, sn, im, inext) as i32;
            p[m] = (vm - vn - beta).div_euclid(r - 1);
        }
        let mut quot = vec![0i32; n];
        let mut acc = 0;
        for m in (0..n).rev() {
            acc += p[m];
            quot[m] = acc;
        }
        let std = Weight(quot.iter().map(|x| x * (r - 1)).collect());
        (Partition(quot), std)
    }
}

/// The sign/order cases shared by neighborhoods and quotients:
/// `(+,+)` with `i > j`, `(-,-)` with `i < j`, or `(-,+)`.
fn beta_case(si: i32, sj: i32, i: usize, j: usize) -> bool {
    match (si > 0, sj > 0) {
        (true, true) => i > j,
        (false, false) => i < j,
        (false, true) => true,
        (true, false) => false,
    }
}

/// `lambda >= mu`: `lambda - mu` is a nonnegative combination of simple coroots.
pub fn geq(lambda: &Weight, mu: &Weight) -> bool {
    let mut acc = 0;
    for (a, b) in lambda.0.iter().zip(&mu.0) {
        acc += a - b;
        if acc < 0 {
            return false;
        }
    }
    true
}

/// `mu` strictly below `lambda` in the order used for triangularity.
pub fn precedes(mu: &Weight, lambda: &Weight) -> bool {
    mu != lambda && preceq(lambda, mu)
}

/// True iff `mu <= lambda` (`lambda^+ > mu^+`, or equal and `lambda >= mu`).
pub fn preceq(lambda: &Weight, mu: &Weight) -> bool {
    let (lp, mp) = (lambda.plus(), mu.plus());
    if lp == mp {
        geq(lambda, mu)
    } else {
        geq(&lp, &mp)
    }
}

/// All weights with `|lambda_i| <= m`.
pub fn box_weights(n: usize, m: i32) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            for x in -m..=m {
                let mut w: Vec<i32> = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out.into_iter().map(Weight).collect()
}

/// Breadth-first distances under the dot action from `0`, restricted to `|lambda_i| <= bound`.
pub fn dot_distances(n: usize, bound: i32) -> HashMap<Weight, usize> {
    let mut dist = HashMap::new();
    let start = Weight::zero(n);
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(l) = queue.pop_front() {
        let d = dist[&l];
        for i in 0..=n {
            let m = l.dot(i);
            if m.max_abs() <= bound && !dist.contains_key(&m) {
                dist.insert(m.clone(), d + 1);
                queue.push_back(m);
            }
        }
    }
    dist
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Weight(self.0.clone()))
    }
}

impl std::str::FromStr for Weight {
    type Err = crate::DahaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        t.split(',')
            .map(|x| x.trim().parse::<i32>().map_err(|e| crate::DahaError::Parse(format!("weight '{}': {}", s, e))))
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn shortest_element_matches_brute_force() {
        for n in 1..=3 {
            let all = SignedPerm::all(n);
            for l in box_weights(n, 2) {
                let lp = l.plus();
                let best = all.iter().filter(|p| p.act(&lp.0) == l.0).min_by_key(|p| p.length()).unwrap();
                let d = l.data();
                assert_eq!(d.w.act(&lp.0), l.0);
                assert_eq!(d.w.length(), best.length(), "{}", l);
                assert_eq!(&d.w, best, "{}", l);
            }
        }
    }

    #[test]
    fn lambda_zero_matches_bfs() {
        for n in 1..=3 {
            let all = SignedPerm::all(n);
            for l in box_weights(n, 2) {
                let best = all
                    .iter()
                    .filter(|p| p.act(&l.0).iter().all(|&x| x >= 0))
                    .min_by_key(|p| p.length())
                    .unwrap();
                assert_eq!(l.lambda_zero().0, best.act(&l.0), "{}", l);
            }
        }
        assert_eq!(w(&[0, -1]).lambda_zero(), w(&[0, 1]));
    }

    #[test]
    fn dot_examples() {
        assert_eq!(w(&[0, 1, 0, 1]).dot(0), w(&[-1, 1, 0, 1]));
        assert_eq!(w(&[0, 1, 0, 1]).dot(3), w(&[0, 1, 1, 0]));
        assert_eq!(w(&[0, 1, 1, 0]).dot(4), w(&[0, 1, 1, 0]));
    }

    #[test]
    fn quotient_example() {
        let l = w(&[-3, 0, -9, 13]);
        let order: Vec<usize> = l.dominant_order().iter().map(|x| x + 1).collect();
        assert_eq!(order, vec![4, 3, 1, 2]);
        let (q, std) = l.quotient(4);
        assert_eq!(q.0, vec![3, 2, 0, 0]);
        assert_eq!(std.0, vec![9, 6, 0, 0]);
    }

    #[test]
    fn order_examples() {
        assert!(preceq(&w(&[1, 0]), &w(&[0, 1])));
        assert!(precedes(&w(&[0, -1]), &w(&[1, 0])));
        assert!(!precedes(&w(&[1, 0]), &w(&[0, -1])));
    }

    #[test]
    fn words_are_valid_and_minimal() {
        let dist = dot_distances(2, 6);
        for l in box_weights(2, 2) {
            let word = l.reduced_word();
            let mut cur = Weight::zero(2);
            for &j in &word {
                cur = cur.dot(j);
                assert!(cur.branch_sign(j) > 0);
            }
            assert_eq!(cur, l);
            assert_eq!(word.len(), dist[&l], "{}", l);
        }
    }

    #[test]
    fn zero_weight_neighborhoods() {
        for n in 2..=4 {
            for a in 2..=n {
                assert_eq!(Weight::zero(n).neighborhoods(a, 1), n - a + 1);
            }
        }
    }
}
