//! The acceptance checks, one function per criterion, shared by the test suite and the CLI.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::koornwinder::{chi0_recurrence, chi0_star, chi0_star_closed, compute_e, duality_check};
use crate::modified::{build_basis_element, check_generalized_eigen, mod_step, specialize_laurent, ModPoly, StepCase};
use crate::params::{rat, spec_branch, specialize, zeta_scalar, Family, ParamMonomial, ParamScalar, SpecPoly, NGEN};
use crate::polyrep::{apply, chi_eval, random_laurent, relation_suite, Op, XLaurent};
use crate::repstructure::chains::{verify_arrow_chain, ChainKind, ChainSpec};
use crate::repstructure::grid::{GridCase, GridSpec};
use crate::repstructure::qlattice::{q_arrows_sweep, q_spec, quotient_lattice, QArrow};
use crate::repstructure::wheel::{admissible_basis, admissible_report, level1_product, wheel_check, WheelSpec};
use crate::weights::{box_weights, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Reduced sizes, a few seconds per criterion.
    Quick,
    /// The sizes of the acceptance suite.
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "quick" => Some(Level::Quick),
            "full" => Some(Level::Full),
            _ => None,
        }
    }

    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub ok: bool,
    pub detail: Vec<String>,
    pub secs: f64,
}

impl Check {
    pub fn line(&self) -> String {
        format!("criterion {:>2} {:<28} {}  ({:.1}s)", self.id, self.name, if self.ok { "PASS" } else { "FAIL" }, self.secs)
    }

    pub fn to_json(&self) -> Value {
        json!({"id": self.id, "name": self.name, "ok": self.ok, "detail": self.detail, "secs": self.secs})
    }
}

pub const NAMES: [&str; 11] = [
    "hecke relations",
    "eigenstructure",
    "evaluation formula",
    "duality",
    "specialization kernel",
    "modified chain n=4",
    "basis elements",
    "wheel ideal",
    "ab/ac/ad subrepresentations",
    "q root of unity",
    "irreducibility chains",
];

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub level: Level,
    pub seed: u64,
    /// Rank of the relation and eigenvector checks at the quick level.
    pub rank: usize,
}

impl Settings {
    pub fn full(seed: u64) -> Self {
        Settings { level: Level::Full, seed, rank: 2 }
    }
}

/// Runs one criterion, `1..=11`. Errors inside a check count as failures.
pub fn run(id: usize, cfg: &Settings) -> Check {
    let (level, seed) = (cfg.level, cfg.seed);
    let start = Instant::now();
    let mut detail = Vec::new();
    let res = match id {
        1 => hecke(level, seed, cfg.rank, &mut detail),
        2 => eigen(level, cfg.rank, &mut detail),
        3 => evaluation(level, &mut detail),
        4 => duality(level, seed, &mut detail),
        5 => kernel(level, seed, &mut detail),
        6 => modified_chain(&mut detail),
        7 => basis(level, &mut detail),
        8 => wheel(level, &mut detail),
        9 => grid(level, &mut detail),
        10 => qroot(level, &mut detail),
        11 => chains(level, &mut detail),
        _ => Ok(false),
    };
    let ok = res.unwrap_or_else(|e| {
        detail.push(format!("error: {}", e));
        false
    });
    Check { id, name: NAMES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"), ok, detail, secs: start.elapsed().as_secs_f64() }
}

pub fn run_all(cfg: &Settings) -> Vec<Check> {
    (1..=11).map(|id| run(id, cfg)).collect()
}

fn hecke(level: Level, seed: u64, rank: usize, detail: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    let count = level.pick(5, 20);
    for n in level.pick(vec![rank], vec![2, 3]) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checked = 0;
        for k in 0..count {
            let f = random_laurent(&mut rng, n, 3, 2, true);
            for (name, good) in relation_suite(&f) {
                checked += 1;
                if !good {
                    ok = false;
                    detail.push(format!("n={} input {}: {} fails", n, k, name));
                }
            }
        }
        detail.push(format!("n={}: {} relation instances on {} inputs", n, checked, count));
    }
    Ok(ok)
}

fn eigen(level: Level, rank: usize, detail: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    for (n, m) in level.pick(vec![(rank, 1)], vec![(2, 2), (3, 1)]) {
        let ws = box_weights(n, m);
        for l in &ws {
            let e = compute_e(l, false);
            let (a, b, c) = (e.is_monic(), e.is_triangular(), e.is_eigen());
            if !(a && b && c) {
                ok = false;
                detail.push(format!("{:?}: monic {} triangular {} eigen {}", l.0, a, b, c));
            }
        }
        detail.push(format!("n={} box {}: {} weights", n, m, ws.len()));
    }
    Ok(ok)
}

fn evaluation(level: Level, detail: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    let size = level.pick(2, 4);
    let mut count = 0;
    for n in 2..=3 {
        for l in box_weights(n, size).into_iter().filter(|l| l.is_dominant() && l.0.iter().sum::<i32>() <= size) {
            count += 1;
            if chi0_star_closed(&l)? != chi0_recurrence(&l) {
                ok = false;
                detail.push(format!("closed != recurrence at {:?}", l.0));
            }
        }
    }
    detail.push(format!("closed = recurrence on {} dominant weights", count));
    let ws = box_weights(2, level.pick(1, 2));
    for l in &ws {
        let direct = chi_eval(&Weight::zero(2), &compute_e(l, false).body, true);
        if chi0_star(l) != direct {
            ok = false;
            detail.push(format!("formula != direct evaluation at {:?}", l.0));
        }
    }
    detail.push(format!("direct evaluation agrees on {} weights at n=2", ws.len()));
    Ok(ok)
}

fn duality(level: Level, seed: u64, detail: &mut Vec<String>) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let count = level.pick(10, 50);
    for _ in 0..count {
        let l = Weight(vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        let m = Weight(vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        if !duality_check(&l, &m) {
            ok = false;
            detail.push(format!("fails at lambda {:?}, mu {:?}", l.0, m.0));
        }
    }
    detail.push(format!("{} random pairs", count));
    Ok(ok)
}

/// One representative specialization per family at `n`.
pub fn representatives(n: usize) -> Result<Vec<SpecPoly>> {
    [
        Family::Tq { k: 1, r: 2 },
        Family::Aa { k: 0, r: 2 },
        Family::Ab { i: 1, r: 2, plus: true },
        Family::Ac { i: 1, r: 2, plus: true },
        Family::Ad { i: 1, r: 2, plus: true },
    ]
    .into_iter()
    .map(|f| spec_branch(n, f, 0))
    .collect()
}

/// A random product of units and binomials `x^m - 1`, some of them vanishing along `s`.
pub fn random_scalar<R: Rng>(rng: &mut R, s: &SpecPoly) -> ParamScalar {
    let mut m = [0i32; NGEN];
    for e in m.iter_mut() {
        *e = rng.gen_range(-2..=2);
    }
    let mut c = ParamScalar::monomial(rat(rng.gen_range(1..=4)), ParamMonomial(m));
    for _ in 0..rng.gen_range(0..=2) {
        let b = if rng.gen_bool(0.4) {
            s.v.scale(rng.gen_range(1..=3))
        } else {
            let mut u = [0i32; NGEN];
            u[rng.gen_range(0..NGEN)] = rng.gen_range(1..=3);
            ParamMonomial(u)
        };
        c = c.mul(&ParamScalar::binomial(b));
    }
    c
}

/// `zeta(ab) = zeta(a) + zeta(b)`, `specialize` respects products and sums of pole-free
/// scalars, and a monomial specializing to `1` is a power of `z^l`.
pub fn kernel_properties<R: Rng>(rng: &mut R, s: &SpecPoly, samples: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for _ in 0..samples {
        let a = random_scalar(rng, s);
        let b = random_scalar(rng, s);
        let (za, zb, zab) = (zeta_scalar(&a, s)?, zeta_scalar(&b, s)?, zeta_scalar(&a.mul(&b), s)?);
        if za + zb != zab {
            bad.push(format!("{}: zeta({}) + zeta({}) != zeta of product", s, a, b));
        }
        let (sa, sb) = (specialize(&a, s)?, specialize(&b, s)?);
        if specialize(&a.mul(&b), s)? != sa.mul(&sb) {
            bad.push(format!("{}: specialize not multiplicative on {}, {}", s, a, b));
        }
        let sum = a.add(&b);
        if !sum.is_zero() && specialize(&sum, s)? != sa.add(&sb) {
            bad.push(format!("{}: specialize not additive on {}, {}", s, a, b));
        }
    }
    let l = s.order() as i32;
    for k in -3..=3 {
        for _ in 0..samples.div_ceil(4) {
            let mut u = [0i32; NGEN];
            if rng.gen_bool(0.5) {
                u[rng.gen_range(0..NGEN)] = rng.gen_range(-2..=2);
            }
            let z = s.v.scale(k) + ParamMonomial(u);
            let one = specialize(&ParamScalar::mono(z), s)?.is_one();
            let expected = (-8..=8).any(|j: i32| j % l == 0 && z == s.v.scale(j));
            if one != expected {
                bad.push(format!("{}: x^{} specializes to 1: {}, expected {}", s, z, one, expected));
            }
        }
    }
    Ok(bad)
}

fn kernel(level: Level, seed: u64, detail: &mut Vec<String>) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = Vec::new();
    for r in 2..=3 {
        let mut fams: Vec<Family> = (-1..2).map(|k| Family::Tq { k, r }).collect();
        fams.extend((-1..2).map(|k| Family::Aa { k, r }));
        for i in 1..=2 {
            for plus in [true, false] {
                fams.extend([Family::Ab { i, r, plus }, Family::Ac { i, r, plus }, Family::Ad { i, r, plus }]);
            }
        }
        for f in fams {
            specs.extend(crate::params::spec_factors(2, f)?);
        }
    }
    let samples = level.pick(4, 12);
    let mut ok = true;
    for s in &specs {
        let bad = kernel_properties(&mut rng, s, samples)?;
        ok &= bad.is_empty();
        detail.extend(bad);
    }
    detail.push(format!("{} specializations at n=2, {} samples each", specs.len(), samples));
    Ok(ok)
}

fn modified_chain(detail: &mut Vec<String>) -> Result<bool> {
    let s = spec_branch(4, Family::Tq { k: 1, r: 2 }, 0)?;
    let l = Weight(vec![0, 1, 0, 1]);
    let w = |v: &[i32]| Weight(v.to_vec());
    let mut ok = true;
    let mut expect = |name: &str, good: bool| {
        if !good {
            detail.push(format!("{} fails", name));
        }
        ok &= good;
    };
    let ys = |x: &Weight| x.y_eigenvalue(false).iter().map(|c| specialize(c, &s)).collect::<Result<Vec<_>>>();
    expect("y((0,1,0,1)) = y((0,1,1,0)) at s=0", ys(&l)? == ys(&w(&[0, 1, 1, 0]))?);
    let e = ModPoly::plain(l.clone(), &s);
    let st3 = mod_step(3, &e)?;
    expect("s3: degenerate case", st3.case == StepCase::Degenerate);
    expect("s3: target (0,1,1,0)", st3.target.lambda == w(&[0, 1, 1, 0]));
    expect("s3: mt = {-1 (0,1,0,1)}", st3.target.mt == vec![(rat(-1), l.clone())]);
    let st1 = mod_step(1, &st3.target)?;
    let mut mt1 = vec![(rat(-1), w(&[0, 1, 1, 0])), (rat(-1), w(&[1, 0, 0, 1])), (rat(1), l.clone())];
    mt1.sort_by(|a, b| a.1.cmp(&b.1));
    expect("s1 s3: target (1,0,1,0)", st1.target.lambda == w(&[1, 0, 1, 0]));
    expect("s1 s3: mt = {-1 (0,1,1,0), -1 (1,0,0,1), +1 (0,1,0,1)}", st1.target.mt == mt1);
    let st2 = mod_step(2, &st1.target)?;
    expect("s2 s1 s3: target (1,1,0,0)", st2.target.lambda == w(&[1, 1, 0, 0]));
    expect("s2 s1 s3: mt = {-1 (0,0,1,1)}", st2.target.mt == vec![(rat(-1), w(&[0, 0, 1, 1]))]);
    for p in [&st3.target, &st1.target, &st2.target] {
        expect(&format!("{:?} specializable", p.lambda.0), p.is_specializable());
        expect(&format!("{:?} generalized eigenvector", p.lambda.0), check_generalized_eigen(p));
    }
    detail.push(format!("mt(s3): {}", st3.target.mt_json()));
    detail.push(format!("mt(s1 s3): {}", st1.target.mt_json()));
    detail.push(format!("mt(s2 s1 s3): {}", st2.target.mt_json()));
    Ok(ok)
}

fn basis(level: Level, detail: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    let window = level.pick(1, 2);
    for s in representatives(2)? {
        let mut count = 0;
        let mut leads = Vec::new();
        for l in box_weights(2, window) {
            let p = match build_basis_element(&l, &s) {
                Ok(p) => p,
                Err(e) => {
                    ok = false;
                    detail.push(format!("{} {:?}: {}", s.family, l.0, e));
                    continue;
                }
            };
            let monic = p.specialized().map(|sp| sp.get(&l.0).is_some_and(|c| c.is_one())).unwrap_or(false);
            if !(monic && p.is_triangular()) {
                ok = false;
                detail.push(format!("{} {:?}: monic {} triangular {}", s.family, l.0, monic, p.is_triangular()));
            }
            leads.push(p.lambda.clone());
            count += 1;
        }
        let total = leads.len();
        leads.sort();
        leads.dedup();
        if leads.len() != total {
            ok = false;
            detail.push(format!("{}: repeated leading terms", s.family));
        }
        detail.push(format!("{}: {} basis elements", s.family, count));
    }
    Ok(ok)
}

fn wheel(level: Level, detail: &mut Vec<String>) -> Result<bool> {
    let w = WheelSpec::new(2, 1, 2, 1, 0)?;
    let window = level.pick(1, 2);
    let mut ok = true;
    let report = admissible_report(&w, window)?;
    for e in &report {
        if !e.ok(2, w.len) {
            ok = false;
            detail.push(format!("admissible {}", e.to_json()));
        }
    }
    detail.push(format!("{} admissible weights pass wheel check and zeta = 1", report.len()));
    let prod = specialize_laurent(&level1_product(2, 1, 2)?, &w.spec)?;
    let e10 = specialize_laurent(&compute_e(&Weight(vec![1, 0]), false).body, &w.spec)?;
    if prod != e10 {
        ok = false;
        detail.push("level-one product != E_(1,0) at s=0".into());
    }
    if wheel_check(&specialize_laurent(&XLaurent::one(2), &w.spec)?, &w) {
        ok = false;
        detail.push("control: 1 passes the wheel check".into());
    }
    let mut closed = 0;
    for l in admissible_basis(2, window, w.k(), w.r()) {
        let e = compute_e(&l, false).body;
        for i in 0..=2 {
            let f = specialize_laurent(&apply(Op::T(i, 1), &e), &w.spec)?;
            if !wheel_check(&f, &w) {
                ok = false;
                detail.push(format!("T{} E_{:?} leaves the wheel ideal", i, l.0));
            }
            closed += 1;
        }
    }
    detail.push(format!("closure: {} images T_i E_lambda checked", closed));
    Ok(ok)
}

fn grid(level: Level, detail: &mut Vec<String>) -> Result<bool> {
    let window = level.pick(1, 2);
    let mut ok = true;
    for case in [GridCase::Ab, GridCase::Ac, GridCase::Ad] {
        let g = GridSpec::new(case, 2, 1, 2, true, 0)?;
        let name = case.name();
        let mut members = 0;
        for l in g.s_set_basis(window) {
            let f = specialize_laurent(&compute_e(&l, false).body, &g.spec)?;
            if let Some(mu) = g.violation(&f)? {
                ok = false;
                detail.push(format!("{}: E_{:?} nonzero at {:?}", name, l.0, mu.0));
            } else {
                members += 1;
            }
        }
        detail.push(format!("{}: {} S-basis polynomials vanish on the complement grid", name, members));
        if g.grid_member(&specialize_laurent(&XLaurent::one(2), &g.spec)?)? {
            ok = false;
            detail.push(format!("{}: control 1 passes", name));
        }
        let printed = g.zeta_certificates(window + 1, true)?;
        let bad: Vec<_> = printed.iter().filter(|z| !z.ok).map(|z| z.lambda.0.clone()).collect();
        if !bad.is_empty() {
            ok = false;
            detail.push(format!("{}: zeta certificates with the printed S fail at {:?}", name, bad));
        }
        let corrected = g.zeta_certificates(window + 1, false)?;
        detail.push(format!(
            "{}: zeta certificates with S = {{lambda^+_i >= r-1}}{}: {}/{} pass (informational)",
            name,
            if case == GridCase::Ab { " and carried sign +" } else { "" },
            corrected.iter().filter(|z| z.ok).count(),
            corrected.len()
        ));
        for c in g.phi_n_boundary(window)? {
            if !c.ok() {
                ok = false;
                detail.push(format!("{}: phi_n E_{:?} vanishes {}, expected {}", name, c.lambda.0, c.vanishes, c.expect));
            }
        }
        let bad0 = g.phi_0_boundary(window)?.into_iter().filter(|c| !c.ok()).count();
        let badc = g.closure(window)?.into_iter().filter(|c| !c.ok()).count();
        detail.push(format!("{}: phi_0 boundary mismatches {}, closure mismatches {} (informational)", name, bad0, badc));
        if let Some(l) = g.fibers_are_singletons(window + 1) {
            ok = false;
            detail.push(format!("{}: eigenvalue fiber of {:?} is not a singleton", name, l.0));
        }
    }
    Ok(ok)
}

fn qroot(level: Level, detail: &mut Vec<String>) -> Result<bool> {
    let s = q_spec(4, 4, 0)?;
    let l = Weight(vec![-3, 0, -9, 13]);
    let rep = quotient_lattice(&l, 4, &s)?;
    let mut ok = true;
    let mut expect = |name: String, good: bool| {
        if !good {
            detail.push(format!("{} not reproduced", name));
        }
        ok &= good;
    };
    expect("quotient (3,2,0,0)".into(), rep.quot.0 == vec![3, 2, 0, 0]);
    expect("p (1,2,0,0)".into(), rep.p == vec![1, 2, 0, 0]);
    expect("standard form (9,6,0,0)".into(), rep.std.0 == vec![9, 6, 0, 0]);
    expect("fiber map (-3,0,-3,4)".into(), rep.fiber.0 == vec![-3, 0, -3, 4] && rep.fiber_ok);
    let chain = [vec![-3, 0, -9, 13], vec![8, 2, 0, 13], vec![12, 8, 2, 0], vec![9, 6, 0, 0]];
    let mut it = rep.milestones.iter();
    let through = chain.iter().all(|c| it.any(|m| m.0 == *c));
    expect("connectivity (-3,0,-9,13) <-> (8,2,0,13) <-> (12,8,2,0) <-> (9,6,0,0)".into(), through && rep.connected);
    let table = [
        (0, QArrow::Both, vec![2, 0, -9, 13], None),
        (1, QArrow::Forward, vec![0, -3, -9, 13], Some(vec![4, 3, 1, 0])),
        (2, QArrow::Both, vec![-3, -9, 0, 13], None),
        (3, QArrow::Both, vec![-3, 0, 13, -9], None),
        (4, QArrow::Both, vec![-3, 0, -9, -13], None),
    ];
    for (i, arrow, target, quot) in table {
        let row = &rep.arrows[i];
        let good = row.arrow == arrow && row.target.0 == target && quot.as_ref().map_or(true, |q| row.target_quot.0 == *q);
        expect(
            format!("s{} row: {:?} {} {:?} (computed {} quotient {:?})", i, l.0, arrow.symbol(), target, row.arrow.symbol(), row.target_quot.0),
            good,
        );
    }
    let (window, r) = (level.pick(2, 4), 3);
    let bad = q_arrows_sweep(2, r, window, &q_spec(2, r, 0)?)?;
    expect(format!("classification sweep n=2 r-1=2 box {} ({} mismatches)", window, bad.len()), bad.is_empty());
    detail.push(format!("arrow table: {}", rep.arrows.iter().map(|a| format!("s{} {}", a.i, a.arrow.symbol())).collect::<Vec<_>>().join(", ")));
    Ok(ok)
}

fn chains(level: Level, detail: &mut Vec<String>) -> Result<bool> {
    let kinds = level.pick(vec![ChainKind::AaIrr], vec![ChainKind::TqIrr, ChainKind::AaIrr]);
    let mut ok = true;
    for kind in kinds {
        let cert = verify_arrow_chain(&ChainSpec::new(kind, 2, 2, 0)?)?;
        detail.push(format!("{}: {} arrows, all multipliers nonzero at s=0: {}", kind.name(), cert.steps(), cert.ok()));
        if let Some(f) = cert.failure() {
            detail.push(format!("{}: link not realized: {}", kind.name(), f));
        }
        ok &= cert.ok();
    }
    Ok(ok)
}
