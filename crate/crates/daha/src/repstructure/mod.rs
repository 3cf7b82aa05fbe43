//! Structure of the polynomial representation at special parameters: wheel ideals,
//! the `ab`/`ac`/`ad` subrepresentations, the lattice at `q` a root of unity, and
//! replayable arrow chains.

pub mod chains;
pub mod grid;
pub mod qlattice;
pub mod wheel;

pub use chains::{verify_arrow_chain, Certificate, ChainKind, ChainSpec};
pub use grid::{GridCase, GridSpec};
pub use qlattice::{fiber_map, q_spec, quotient_lattice, QArrow, QReport};
pub use wheel::{admissible_basis, level1_product, wheel_check, wheel_check_direct, WheelSpec};

use serde_json::{json, Value};

use crate::modified::SpecLaurent;
use crate::params::{CycPoly, ParamMonomial, SpecPoly, SpecValue};
use crate::weights::Weight;

/// `x^m |_{s=0}` as an element of the specialized field.
pub fn spec_monomial(s: &SpecPoly, m: ParamMonomial) -> SpecValue {
    let (root, red) = s.reduce_monomial(m);
    SpecValue { num: CycPoly::monomial(root.to_cyc(), red), den: CycPoly::one() }
}

/// Sums specialized values, adding numerators over equal denominators first.
#[derive(Default)]
pub struct SpecSum {
    parts: Vec<(CycPoly, CycPoly)>,
}

impl SpecSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: SpecValue) {
        if v.is_zero() {
            return;
        }
        match self.parts.iter_mut().find(|(d, _)| *d == v.den) {
            Some((_, num)) => *num = num.add(&v.num),
            None => self.parts.push((v.den, v.num)),
        }
    }

    pub fn total(self) -> SpecValue {
        self.parts.into_iter().fold(SpecValue::zero(), |acc, (den, num)| acc.add(&SpecValue { num, den }))
    }

    pub fn is_zero(self) -> bool {
        self.total().is_zero()
    }
}

/// `f(x)` at `x_i = X^{point_i}`, all at `s = 0`.
pub fn eval_at(f: &SpecLaurent, point: &[ParamMonomial], s: &SpecPoly) -> SpecValue {
    let mut acc = SpecSum::new();
    for (e, c) in f {
        let m = e.iter().zip(point).fold(ParamMonomial::ONE, |a, (&k, p)| a + p.scale(k));
        acc.push(c.mul(&spec_monomial(s, m)));
    }
    acc.total()
}

/// The evaluation point of `chi*_mu`: `x = y*(mu)^{-1}`.
pub fn dual_point(mu: &Weight) -> Vec<ParamMonomial> {
    mu.y_monomials(true).into_iter().map(|m| -m).collect()
}

/// `chi*_mu(f)|_{s=0}`.
pub fn chi_star_at(mu: &Weight, f: &SpecLaurent, s: &SpecPoly) -> SpecValue {
    eval_at(f, &dual_point(mu), s)
}

/// Largest per-variable spread of exponents in the support.
pub fn degree_span(f: &SpecLaurent) -> i32 {
    let Some(first) = f.keys().next() else { return 0 };
    (0..first.len())
        .map(|i| {
            let lo = f.keys().map(|e| e[i]).min().unwrap();
            let hi = f.keys().map(|e| e[i]).max().unwrap();
            hi - lo
        })
        .max()
        .unwrap_or(0)
}

/// A finite set of weights used as evaluation points.
#[derive(Clone, Debug)]
pub struct GridSet {
    pub label: String,
    pub window: i32,
    pub points: Vec<Weight>,
}

impl GridSet {
    /// Number of distinct points `(chi*_nu(x_1), .., chi*_nu(x_n))|_{s=0}`.
    pub fn distinct_points(&self, s: &SpecPoly) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        for nu in &self.points {
            let key: Vec<String> = dual_point(nu)
                .into_iter()
                .map(|m| {
                    let (root, red) = s.reduce_monomial(m);
                    format!("{}|{:?}", root, red.0)
                })
                .collect();
            seen.insert(key);
        }
        seen.len()
    }

    pub fn to_json(&self) -> Value {
        json!({"label": self.label, "window": self.window, "size": self.points.len()})
    }
}

pub fn laurent_json(f: &SpecLaurent) -> Value {
    Value::Array(f.iter().map(|(e, c)| json!([e, c.to_string()])).collect())
}
