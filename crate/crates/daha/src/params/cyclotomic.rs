//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out as usize
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(n: u32) -> std::sync::Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, std::sync::Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic index must be positive");
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = int_div_exact(&num, &den);
        }
    }
    let arc = std::sync::Arc::new(num);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

fn int_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let nd = r.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = r[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                r[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Degree of `Phi_n`.
pub fn cyclotomic_degree(n: u32) -> usize {
    euler_phi(n)
}

/// A root of unity `exp(2 pi i j / n)` with `0 <= j < n`, `gcd(j, n) = 1` unless `j = 0, n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct RootOfUnity {
    pub j: u32,
    pub n: u32,
}

impl RootOfUnity {
    pub fn new(j: i64, n: u32) -> Self {
        let nn = n as i64;
        let j = j.rem_euclid(nn);
        let g = j.gcd(&nn).max(1);
        if j == 0 {
            return RootOfUnity { j: 0, n: 1 };
        }
        RootOfUnity { j: (j / g) as u32, n: (nn / g) as u32 }
    }

    pub fn one() -> Self {
        RootOfUnity { j: 0, n: 1 }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn pow(&self, e: i64) -> Self {
        RootOfUnity::new(self.j as i64 * e, self.n)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Argument as a fraction of a full turn, in `[0, 1)`.
    pub fn turn(&self) -> Rat {
        rat_frac(self.j as i64, self.n as i64)
    }

    pub fn to_cyc(&self) -> CycNumber {
        CycNumber::zeta_pow(self.n, self.j as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.j, self.n) {
            (0, _) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (j, n) => write!(f, "e(2pi*{}/{})", j, n),
        }
    }
}

/// Element of `Q(zeta_n)` stored as a polynomial in `zeta_n` of degree `< phi(n)`.
///
/// The modulus is kept minimal in the cheap case: a purely rational value always has `n = 1`.
#[derive(Clone, Debug)]
pub struct CycNumber {
    n: u32,
    c: Vec<Rat>,
}

impl CycNumber {
    pub fn from_rat(r: Rat) -> Self {
        if r.is_zero() {
            CycNumber { n: 1, c: vec![] }
        } else {
            CycNumber { n: 1, c: vec![r] }
        }
    }

    pub fn zero() -> Self {
        CycNumber { n: 1, c: vec![] }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(rat(k))
    }

    /// `zeta_n^e`.
    pub fn zeta_pow(n: u32, e: i64) -> Self {
        let e = e.rem_euclid(n as i64) as usize;
        let mut c = vec![Rat::zero(); e + 1];
        c[e] = Rat::one();
        Self::reduced(n, c)
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn from_coeffs(n: u32, c: Vec<Rat>) -> Self {
        Self::reduced(n, c)
    }

    fn reduced(n: u32, mut c: Vec<Rat>) -> Self {
        let phi = cyclotomic_poly(n);
        let d = phi.len() - 1;
        if c.len() > d {
            for k in (d..c.len()).rev() {
                let top = std::mem::take(&mut c[k]);
                if top.is_zero() {
                    continue;
                }
                for (j, &pj) in phi.iter().enumerate().take(d) {
                    if pj != 0 {
                        c[k - d + j] -= &top * BigInt::from(pj);
                    }
                }
            }
            c.truncate(d);
        }
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let mut out = CycNumber { n, c };
        out.shrink();
        out
    }

    fn shrink(&mut self) {
        if self.n != 1 && self.c.len() <= 1 {
            self.n = 1;
        }
    }

    /// Re-expresses `self` in `Q(zeta_l)` where `self.n | l`.
    fn lift(&self, l: u32) -> Vec<Rat> {
        if self.n == l {
            return self.c.clone();
        }
        let step = (l / self.n) as usize;
        let mut c = vec![Rat::zero(); (self.c.len().max(1) - 1) * step + 1];
        for (j, x) in self.c.iter().enumerate() {
            c[j * step] = x.clone();
        }
        // a collapsed (rational) result is still a valid coefficient vector mod Phi_l
        Self::reduced(l, c).c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self.c.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.n == 1 && o.n == 1 {
            return Self::from_rat(self.c.first().cloned().unwrap_or_default() + o.c.first().cloned().unwrap_or_default());
        }
        let l = self.n.lcm(&o.n);
        let a = self.lift(l);
        let b = o.lift(l);
        let mut c = vec![Rat::zero(); a.len().max(b.len())];
        for (j, x) in a.into_iter().enumerate() {
            c[j] += x;
        }
        for (j, x) in b.into_iter().enumerate() {
            c[j] += x;
        }
        Self::reduced(l, c)
    }

    pub fn neg(&self) -> Self {
        CycNumber { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.n == 1 {
            return self.scale(&o.c[0]);
        }
        if self.n == 1 {
            return o.scale(&self.c[0]);
        }
        let l = self.n.lcm(&o.n);
        let a = self.lift(l);
        let b = o.lift(l);
        let mut c = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::reduced(l, c)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycNumber { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo `Phi_n`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(Self::from_rat(self.c[0].recip()));
        }
        let phi: Vec<Rat> = cyclotomic_poly(self.n).iter().map(|&x| rat(x)).collect();
        let (g, s) = upoly_xgcd_left(&self.c, &phi);
        // g is a nonzero constant because Phi_n is irreducible
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        Some(Self::reduced(self.n, s.into_iter().map(|x| x * &ginv).collect()))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, o: &Self) -> bool {
        if self.n == o.n {
            return self.c == o.c;
        }
        self.sub(o).is_zero()
    }
}

impl Eq for CycNumber {}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        if self.n == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        write!(f, "(")?;
        for (j, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if x.is_negative() { " - " } else { " + " })?;
            } else if x.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = x.abs();
            match j {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    write!(f, "z{}", self.n)?;
                    if j > 1 {
                        write!(f, "^{}", j)?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

fn trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

/// Dense univariate division with remainder over `Q`; `den` must be nonzero.
pub fn upoly_divrem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = num.to_vec();
    trim(&mut r);
    let mut d = den.to_vec();
    trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    if r.len() < d.len() {
        return (vec![], r);
    }
    let dl = d.len() - 1;
    let lead_inv = d[dl].recip();
    let mut q = vec![Rat::zero(); r.len() - dl];
    for k in (0..q.len()).rev() {
        let c = &r[k + dl] * &lead_inv;
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn upoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(&mut c);
    c
}

fn upoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut c = vec![Rat::zero(); a.len().max(b.len())];
    for (j, x) in a.iter().enumerate() {
        c[j] += x;
    }
    for (j, x) in b.iter().enumerate() {
        c[j] -= x;
    }
    trim(&mut c);
    c
}

/// Returns `(g, s)` with `s*a = g (mod b)`.
fn upoly_xgcd_left(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Rat::one()], vec![]);
    while !r1.is_empty() {
        let (q, r) = upoly_divrem(&r0, &r1);
        let s2 = upoly_sub(&s0, &upoly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_degree(12), 4);
    }

    #[test]
    fn roots_multiply() {
        let i = CycNumber::zeta_pow(4, 1);
        assert_eq!(i.mul(&i), CycNumber::from_int(-1));
        let w = CycNumber::zeta_pow(3, 1);
        let sum = CycNumber::one().add(&w).add(&w.mul(&w));
        assert!(sum.is_zero());
        // zeta_6 = -zeta_3^2
        assert_eq!(CycNumber::zeta_pow(6, 1), w.mul(&w).neg());
    }

    #[test]
    fn inverse_roundtrip() {
        let x = CycNumber::from_coeffs(5, vec![rat(2), rat(-1), rat_frac(1, 3)]);
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), CycNumber::one());
    }

    #[test]
    fn root_normalization() {
        assert_eq!(RootOfUnity::new(2, 4), RootOfUnity { j: 1, n: 2 });
        assert_eq!(RootOfUnity::new(-1, 4), RootOfUnity { j: 3, n: 4 });
        assert_eq!(RootOfUnity::new(4, 4), RootOfUnity::one());
    }
}
