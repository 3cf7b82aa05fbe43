//! Replayable chains of arrows between modified polynomials.
//!
//! A chain is a list of milestones joined by `->` or `<->`. Each link is realized by a
//! breadth-first search over single arrows `bar phi_i`, and every arrow on the way is
//! recorded with its multiplier.

use std::collections::{HashSet, VecDeque};

use serde_json::{json, Value};

use crate::error::{DahaError, Result};
use crate::modified::{arrow, Arrow, ArrowResult, ModPoly};
use crate::params::{rat, spec_branch, zeta_scalar, Family, Rat, SpecPoly};
use crate::weights::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// `t^{k+1} q^{r-1} = 1` with `k = 0`
    TqIrr,
    /// `t^{k+1} q^{r-1} t_n t_0 = +-1` at the smallest `k`
    AaIrr,
}

impl ChainKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "tq-irr" => Ok(ChainKind::TqIrr),
            "aa-irr" => Ok(ChainKind::AaIrr),
            _ => Err(DahaError::Parse(format!("unknown chain '{}', expected tq-irr|aa-irr", s))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChainKind::TqIrr => "tq-irr",
            ChainKind::AaIrr => "aa-irr",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Link {
    Forward,
    Both,
}

impl Link {
    fn symbol(self) -> &'static str {
        match self {
            Link::Forward => "->",
            Link::Both => "<->",
        }
    }
}

/// A weight with its modification terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub lambda: Weight,
    pub mt: Vec<(Rat, Weight)>,
}

impl Node {
    pub fn plain(v: &[i32]) -> Self {
        Node { lambda: Weight(v.to_vec()), mt: Vec::new() }
    }

    pub fn with(v: &[i32], mt: &[(i64, &[i32])]) -> Self {
        let mut mt: Vec<(Rat, Weight)> = mt.iter().map(|(m, w)| (rat(*m), Weight(w.to_vec()))).collect();
        mt.sort_by(|a, b| a.1.cmp(&b.1));
        Node { lambda: Weight(v.to_vec()), mt }
    }

    fn of(p: &ModPoly) -> Self {
        Node { lambda: p.lambda.clone(), mt: p.mt.clone() }
    }

    fn build(&self, s: &SpecPoly) -> Result<ModPoly> {
        ModPoly::new(self.lambda.clone(), self.mt.clone(), s)
    }

    pub fn to_json(&self) -> Value {
        json!({"lambda": self.lambda.0, "mt": self.mt.iter().map(|(m, w)| json!([m.to_string(), w.0])).collect::<Vec<_>>()})
    }
}

#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub kind: ChainKind,
    pub n: usize,
    pub k: i32,
    pub r: i32,
    pub branch: usize,
    pub spec: SpecPoly,
    pub start: Node,
    pub links: Vec<(Link, Node)>,
    /// Search depth per link.
    pub depth: usize,
}

impl ChainSpec {
    /// The chain for `tq^{r-1} = 1` at `n = 2`, `r - 1 = 1`, starting from a large weight
    /// through the specific element `(2(n-1)(r-1), 0)`.
    pub fn tq_irr(n: usize, r: i32, branch: usize) -> Result<Self> {
        if n != 2 || r != 2 {
            return Err(DahaError::Param(format!("tq-irr chain is instantiated at n = 2, r - 1 = 1 only, got n = {}, r - 1 = {}", n, r - 1)));
        }
        let spec = spec_branch(n, Family::Tq { k: 0, r }, branch)?;
        let links = vec![
            (Link::Both, Node::plain(&[2, 0])),
            (Link::Forward, Node::plain(&[1, 1])),
            (Link::Both, Node::plain(&[0, 1])),
            (Link::Forward, Node::with(&[1, 0], &[(-1, &[0, 1])])),
            (Link::Forward, Node::plain(&[0, -1])),
            (Link::Both, Node::plain(&[0, 0])),
        ];
        Ok(ChainSpec { kind: ChainKind::TqIrr, n, k: 0, r, branch, spec, start: Node::plain(&[3, 0]), links, depth: 6 })
    }

    /// The chain for `t^{k+1} q^{r-1} t_n t_0 = +-1` at `n = 2`, `k + 1 = 0`, `r - 1 = 1`.
    pub fn aa_irr(n: usize, k: i32, r: i32, branch: usize) -> Result<Self> {
        if n != 2 || k != -1 || r != 2 {
            return Err(DahaError::Param(format!(
                "aa-irr chain is instantiated at n = 2, k + 1 = 0, r - 1 = 1 only, got n = {}, k + 1 = {}, r - 1 = {}",
                n,
                k + 1,
                r - 1
            )));
        }
        let spec = spec_branch(n, Family::Aa { k, r }, branch)?;
        let links = vec![
            (Link::Both, Node::plain(&[1, 1])),
            (Link::Forward, Node::plain(&[1, 0])),
            (Link::Forward, Node::with(&[1, -1], &[(-1, &[1, 0])])),
            (Link::Both, Node::with(&[-1, -1], &[(-1, &[0, -1])])),
            (Link::Forward, Node::plain(&[-1, 0])),
            (Link::Both, Node::plain(&[0, 0])),
        ];
        Ok(ChainSpec { kind: ChainKind::AaIrr, n, k, r, branch, spec, start: Node::plain(&[2, 1]), links, depth: 6 })
    }

    pub fn new(kind: ChainKind, n: usize, r: i32, branch: usize) -> Result<Self> {
        match kind {
            ChainKind::TqIrr => Self::tq_irr(n, r, branch),
            ChainKind::AaIrr => Self::aa_irr(n, -1, r, branch),
        }
    }
}

/// One verified arrow.
#[derive(Clone, Debug)]
pub struct StepCert {
    pub i: usize,
    pub source: Node,
    pub target: Node,
    pub c: Option<String>,
    pub c_at_s: String,
    pub c_nonzero: bool,
    /// `zeta` of the multiplier when it is known over `K`.
    pub zeta: Option<i32>,
    pub hypothesis: String,
}

impl StepCert {
    fn from(a: &ArrowResult) -> Self {
        StepCert {
            i: a.i,
            source: Node::of(&a.source),
            target: Node::of(&a.target),
            zeta: a.c.as_ref().and_then(|c| zeta_scalar(c, &a.source.spec).ok()),
            c: a.c.as_ref().map(|c| c.to_string()),
            c_at_s: a.c_spec.to_string(),
            c_nonzero: !a.c_spec.is_zero(),
            hypothesis: format!("{:?}", a.hypothesis),
        }
    }

    pub fn ok(&self) -> bool {
        self.zeta.map_or(true, |z| z == 0) && self.c_nonzero
    }

    pub fn to_json(&self) -> Value {
        json!({
            "i": self.i,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "c": self.c,
            "c_at_s": self.c_at_s,
            "zeta": self.zeta,
            "hypothesis": self.hypothesis,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Segment {
    pub from: Node,
    pub to: Node,
    pub link: Link,
    pub forward: Option<Vec<StepCert>>,
    pub backward: Option<Vec<StepCert>>,
}

impl Segment {
    pub fn ok(&self) -> bool {
        let good = |p: &Option<Vec<StepCert>>| p.as_ref().is_some_and(|v| v.iter().all(StepCert::ok));
        good(&self.forward) && (self.link == Link::Forward || good(&self.backward))
    }

    pub fn to_json(&self) -> Value {
        let path = |p: &Option<Vec<StepCert>>| p.as_ref().map(|v| v.iter().map(StepCert::to_json).collect::<Vec<_>>());
        json!({
            "from": self.from.to_json(),
            "to": self.to.to_json(),
            "relation": self.link.symbol(),
            "forward": path(&self.forward),
            "backward": path(&self.backward),
            "ok": self.ok(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub chain: String,
    pub spec: String,
    pub segments: Vec<Segment>,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.segments.iter().all(Segment::ok)
    }

    /// The first link that could not be realized.
    pub fn failure(&self) -> Option<String> {
        self.segments.iter().find(|s| !s.ok()).map(|s| {
            format!("{} {} {}", s.from.to_json(), s.link.symbol(), s.to.to_json())
        })
    }

    pub fn steps(&self) -> usize {
        self.segments.iter().map(|s| s.forward.as_ref().map_or(0, Vec::len) + s.backward.as_ref().map_or(0, Vec::len)).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "chain": self.chain,
            "spec": self.spec,
            "ok": self.ok(),
            "steps": self.steps(),
            "failure": self.failure(),
            "segments": self.segments.iter().map(Segment::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Shortest sequence of arrows from `from` to `to`, at most `depth` long.
pub fn find_path(from: &Node, to: &Node, s: &SpecPoly, depth: usize) -> Result<Option<Vec<StepCert>>> {
    let n = from.lambda.n();
    let start = from.build(s)?;
    let mut seen = HashSet::from([from.clone()]);
    let mut queue = VecDeque::from([(start, Vec::<StepCert>::new())]);
    while let Some((cur, path)) = queue.pop_front() {
        if Node::of(&cur) == *to {
            return Ok(Some(path));
        }
        if path.len() >= depth {
            continue;
        }
        for i in 0..=n {
            // the recurrence does not cover every source; such edges are not arrows
            let Ok(Arrow::Yes(a)) = arrow(i, &cur) else { continue };
            let node = Node::of(&a.target);
            if !seen.insert(node) {
                continue;
            }
            let mut next = path.clone();
            next.push(StepCert::from(&a));
            queue.push_back((a.target.clone(), next));
        }
    }
    Ok(None)
}

pub fn verify_arrow_chain(c: &ChainSpec) -> Result<Certificate> {
    let mut segments = Vec::new();
    let mut cur = c.start.clone();
    for (link, next) in &c.links {
        let forward = find_path(&cur, next, &c.spec, c.depth)?;
        let backward = if *link == Link::Both { find_path(next, &cur, &c.spec, c.depth)? } else { None };
        segments.push(Segment { from: cur.clone(), to: next.clone(), link: *link, forward, backward });
        cur = next.clone();
    }
    Ok(Certificate { chain: c.kind.name().into(), spec: c.spec.to_string(), segments })
}

/// `lambda <-> (2(n-1)(r-1), 0, .., 0)` for each `lambda` given.
pub fn specific_connectivity(lambdas: &[Weight], r: i32, s: &SpecPoly, depth: usize) -> Result<Vec<Segment>> {
    let n = s.n;
    let mut v = vec![0; n];
    v[0] = 2 * (n as i32 - 1) * (r - 1);
    let target = Node::plain(&v);
    let mut out = Vec::new();
    for l in lambdas {
        let from = Node::plain(&l.0);
        let forward = find_path(&from, &target, s, depth)?;
        let backward = find_path(&target, &from, s, depth)?;
        out.push(Segment { from, to: target.clone(), link: Link::Both, forward, backward });
    }
    Ok(out)
}
