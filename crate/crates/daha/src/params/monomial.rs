use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Number of half-power generators.
pub const NGEN: usize = 6;

/// Display names of the half-power generators, in storage order.
pub const GEN_NAMES: [&str; NGEN] = ["q", "t", "tn", "t0", "un", "u0"];

/// Index of each generator inside a [`ParamMonomial`].
pub mod gen {
    pub const Q: usize = 0;
    pub const T: usize = 1;
    pub const TN: usize = 2;
    pub const T0: usize = 3;
    pub const UN: usize = 4;
    pub const U0: usize = 5;
}

/// Monic Laurent monomial in `q^{1/2}, t^{1/2}, t_n^{1/2}, t_0^{1/2}, u_n^{1/2}, u_0^{1/2}`.
///
/// Entry `k` is the exponent of the `k`-th half-power generator, so `t = [0, 2, 0, 0, 0, 0]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamMonomial(pub [i32; NGEN]);

impl ParamMonomial {
    pub const ONE: ParamMonomial = ParamMonomial([0; NGEN]);

    /// `g^{e/2}` for the generator with index `g`.
    pub fn half(g: usize, e: i32) -> Self {
        let mut m = [0; NGEN];
        m[g] = e;
        ParamMonomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NGEN]
    }

    pub fn scale(&self, k: i32) -> Self {
        ParamMonomial(self.0.map(|x| x * k))
    }

    pub fn dot(&self, f: &[i64; NGEN]) -> i64 {
        self.0.iter().zip(f).map(|(&a, &b)| a as i64 * b).sum()
    }

    /// Swap of `t_0^{1/2}` and `u_n^{1/2}` (the dual parameters).
    pub fn dual(&self) -> Self {
        let mut m = self.0;
        m.swap(gen::T0, gen::UN);
        ParamMonomial(m)
    }

    pub fn gcd_content(&self) -> i32 {
        self.0.iter().fold(0i32, |g, &x| num_integer::Integer::gcd(&g, &x))
    }

    /// First nonzero entry, if any.
    pub fn leading_sign(&self) -> i32 {
        self.0.iter().find(|&&x| x != 0).map(|x| x.signum()).unwrap_or(0)
    }
}

impl Add for ParamMonomial {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut m = self.0;
        for k in 0..NGEN {
            m[k] += o.0[k];
        }
        ParamMonomial(m)
    }
}

impl Sub for ParamMonomial {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut m = self.0;
        for k in 0..NGEN {
            m[k] -= o.0[k];
        }
        ParamMonomial(m)
    }
}

impl Neg for ParamMonomial {
    type Output = Self;
    fn neg(self) -> Self {
        ParamMonomial(self.0.map(|x| -x))
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", GEN_NAMES[k])?;
            if e % 2 == 0 {
                if e != 2 {
                    write!(f, "^{}", e / 2)?;
                }
            } else if e == 1 {
                write!(f, "^(1/2)")?;
            } else {
                write!(f, "^({}/2)", e)?;
            }
        }
        Ok(())
    }
}
