//! Subrepresentations for the `ab`, `ac` and `ad` specializations, tested on evaluation grids.

use serde_json::{json, Value};

use super::{chi_star_at, degree_span, GridSet};
use crate::error::{DahaError, Result};
use crate::koornwinder::{chi0_star, compute_e, phi_apply};
use crate::modified::{eigen_fiber, specialize_laurent, SpecLaurent};
use crate::params::{spec_branch, zeta_scalar, Family, SpecPoly};
use crate::weights::{box_weights, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridCase {
    Ab,
    Ac,
    Ad,
}

impl GridCase {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "ab" => Ok(GridCase::Ab),
            "ac" => Ok(GridCase::Ac),
            "ad" => Ok(GridCase::Ad),
            _ => Err(DahaError::Parse(format!("unknown case '{}', expected ab|ac|ad", s))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridCase::Ab => "ab",
            GridCase::Ac => "ac",
            GridCase::Ad => "ad",
        }
    }

    /// Sign of `sigma` required at `lambda^+_i = r - 1` in the printed definition of `S`.
    pub fn printed_sign(self) -> i32 {
        match self {
            GridCase::Ab => 1,
            GridCase::Ac | GridCase::Ad => -1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GridSpec {
    pub case: GridCase,
    pub plus: bool,
    pub i: usize,
    pub r: i32,
    pub spec: SpecPoly,
}

impl GridSpec {
    pub fn new(case: GridCase, n: usize, i: usize, r: i32, plus: bool, branch: usize) -> Result<Self> {
        let ii = i as i32;
        let family = match case {
            GridCase::Ab => Family::Ab { i: ii, r, plus },
            GridCase::Ac => Family::Ac { i: ii, r, plus },
            GridCase::Ad => Family::Ad { i: ii, r, plus },
        };
        let spec = spec_branch(n, family, branch)?;
        Ok(GridSpec { case, plus, i, r, spec })
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    /// `lambda^+_i` and the sign of the coordinate of `lambda` carrying it.
    fn carried(&self, l: &Weight) -> (i32, i32) {
        let d = l.data();
        let wi = d.w.0[self.i - 1];
        (d.plus.0[self.i - 1], wi.signum())
    }

    /// Membership in `S`.
    ///
    /// For `ab` the sign condition at `lambda^+_i = r - 1` is read at the coordinate carrying
    /// `lambda^+_i`. For `ac` and `ad` no sign condition is imposed: the set closed under the
    /// intertwiners is `lambda^+_i >= r - 1`.
    pub fn in_s(&self, l: &Weight) -> bool {
        let (p, sg) = self.carried(l);
        match self.case {
            GridCase::Ab => p > self.r - 1 || (p == self.r - 1 && sg > 0),
            GridCase::Ac | GridCase::Ad => p >= self.r - 1,
        }
    }

    /// Membership in `S` with the printed sign condition for every case.
    pub fn in_s_printed(&self, l: &Weight) -> bool {
        let (p, sg) = self.carried(l);
        p > self.r - 1 || (p == self.r - 1 && sg == self.case.printed_sign())
    }

    fn check_plus(&self) -> Result<()> {
        if self.plus {
            Ok(())
        } else {
            Err(DahaError::Precondition(format!("{}: characterization is unsupported on the minus branch", self.spec.family)))
        }
    }

    /// `S` inside the box `|lambda_i| <= window`.
    pub fn s_set_basis(&self, window: i32) -> Vec<Weight> {
        box_weights(self.n(), window).into_iter().filter(|l| self.in_s(l)).collect()
    }

    /// Complement of `S` in the box, as evaluation points.
    pub fn complement(&self, window: i32) -> GridSet {
        let points = box_weights(self.n(), window).into_iter().filter(|l| !self.in_s(l)).collect();
        GridSet { label: "mu not in S".into(), window, points }
    }

    /// First `mu` outside `S` with `chi*_mu(f)|_{s=0} != 0`, in the window `deg-span(f) + r`.
    pub fn violation(&self, f: &SpecLaurent) -> Result<Option<Weight>> {
        self.check_plus()?;
        if f.is_empty() {
            return Ok(None);
        }
        let window = degree_span(f) + self.r;
        Ok(self.complement(window).points.into_iter().find(|mu| !chi_star_at(mu, f, &self.spec).is_zero()))
    }

    /// Membership of `f` in the subrepresentation spanned by `S`.
    pub fn grid_member(&self, f: &SpecLaurent) -> Result<bool> {
        Ok(self.violation(f)?.is_none())
    }

    /// `zeta(chi*_0(E_lambda)) = 1` for `lambda in S` and `zeta(chi_0(E*_mu)) = 0` outside.
    pub fn zeta_certificates(&self, window: i32, printed: bool) -> Result<Vec<ZetaCert>> {
        self.check_plus()?;
        let mut out = Vec::new();
        for l in box_weights(self.n(), window) {
            let inside = if printed { self.in_s_printed(&l) } else { self.in_s(&l) };
            let c = chi0_star(&l);
            let zeta = if inside { zeta_scalar(&c, &self.spec)? } else { zeta_scalar(&c.dual(), &self.spec)? };
            out.push(ZetaCert { ok: zeta == inside as i32, lambda: l, inside, zeta });
        }
        Ok(out)
    }

    /// Every `phi_j E_lambda` with `lambda in S` and `s_j . lambda` outside `S` vanishes at
    /// `s = 0`, and no other nontrivial `phi_j E_lambda` in the window does.
    pub fn closure(&self, window: i32) -> Result<Vec<PhiCheck>> {
        let n = self.n();
        let mut out = Vec::new();
        for l in box_weights(n, window) {
            let e = compute_e(&l, false).body;
            for j in 0..=n {
                let target = l.dot(j);
                if target == l {
                    continue;
                }
                let vanishes = specialize_laurent(&phi_apply(j, &l, &e), &self.spec)?.is_empty();
                let expect = self.in_s(&l) && !self.in_s(&target);
                out.push(PhiCheck { j, lambda: l.clone(), target, vanishes, expect });
            }
        }
        Ok(out)
    }

    /// `phi_n E_lambda|_{s=0}` at `lambda_n = +-(r-1)`, `rho(lambda)_n = +-(n-i)`.
    ///
    /// The printed statement: zero for the `+` sign, nonzero for `-`.
    pub fn phi_n_boundary(&self, window: i32) -> Result<Vec<PhiCheck>> {
        let n = self.n();
        let mut out = Vec::new();
        for l in box_weights(n, window.max(self.r - 1)) {
            let ln = l.0[n - 1];
            let rho = l.data().rho[n - 1];
            if ln.abs() != self.r - 1 || rho != ln.signum() * (n - self.i) as i32 {
                continue;
            }
            let e = compute_e(&l, false).body;
            let vanishes = specialize_laurent(&phi_apply(n, &l, &e), &self.spec)?.is_empty();
            out.push(PhiCheck { j: n, target: l.dot(n), expect: ln > 0, lambda: l, vanishes });
        }
        Ok(out)
    }

    /// `phi_0 E_lambda|_{s=0}` at `lambda_1 = -(r-1)`, `rho(lambda)_1 = -(n-i)` (zero) and at
    /// `lambda_1 = -r` (nonzero).
    pub fn phi_0_boundary(&self, window: i32) -> Result<Vec<PhiCheck>> {
        let n = self.n();
        let mut out = Vec::new();
        for l in box_weights(n, window.max(self.r)) {
            let l1 = l.0[0];
            let rho = l.data().rho[0];
            if !(l1 == -(self.r - 1) || l1 == -self.r) || rho != -((n - self.i) as i32) {
                continue;
            }
            let e = compute_e(&l, false).body;
            let vanishes = specialize_laurent(&phi_apply(0, &l, &e), &self.spec)?.is_empty();
            out.push(PhiCheck { j: 0, target: l.dot(0), expect: l1 == -(self.r - 1), lambda: l, vanishes });
        }
        Ok(out)
    }

    /// No two weights in the window share the specialized `Y`-eigenvalue.
    pub fn fibers_are_singletons(&self, window: i32) -> Option<Weight> {
        box_weights(self.n(), window).into_iter().find(|l| eigen_fiber(l, &self.spec, window) != vec![l.clone()])
    }
}

#[derive(Clone, Debug)]
pub struct ZetaCert {
    pub lambda: Weight,
    pub inside: bool,
    pub zeta: i32,
    pub ok: bool,
}

impl ZetaCert {
    pub fn to_json(&self) -> Value {
        json!({"lambda": self.lambda.0, "in_s": self.inside, "zeta": self.zeta, "ok": self.ok})
    }
}

#[derive(Clone, Debug)]
pub struct PhiCheck {
    pub j: usize,
    pub lambda: Weight,
    pub target: Weight,
    pub vanishes: bool,
    pub expect: bool,
}

impl PhiCheck {
    pub fn ok(&self) -> bool {
        self.vanishes == self.expect
    }

    pub fn to_json(&self) -> Value {
        json!({"i": self.j, "lambda": self.lambda.0, "target": self.target.0, "vanishes": self.vanishes, "expected": self.expect})
    }
}
