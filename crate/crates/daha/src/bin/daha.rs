//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails or a computation hits a pole or
//! unsupported case, 2 on usage errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use daha::koornwinder::{chi0_star, compute_e, duality_check, MEMO_ENV};
use daha::modified::{arrow, build_basis_element, specialize_laurent, Arrow};
use daha::params::{catalog, spec_branch, Family, SpecPoly};
use daha::repstructure::chains::{verify_arrow_chain, ChainKind, ChainSpec};
use daha::repstructure::grid::{GridCase, GridSpec};
use daha::repstructure::qlattice::{q_arrows_sweep, q_spec, quotient_lattice};
use daha::repstructure::wheel::{admissible_report, level1_product, wheel_check, wheel_check_direct, WheelSpec};
use daha::repstructure::laurent_json;
use daha::verify::{self, Level, Settings};
use daha::weights::{box_weights, Weight};
use daha::DahaError;

#[derive(Parser)]
#[command(name = "daha", version, about = "Non-symmetric Koornwinder polynomials and their specializations")]
struct Cli {
    /// Output format. Defaults to pretty, except `structure` which defaults to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// key=value file providing defaults for format, seed and memo (memo cache capacity).
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generic-parameter polynomials
    #[command(subcommand)]
    Koornwinder(KCmd),
    /// Modified polynomials at a specialization
    #[command(subcommand)]
    Modified(MCmd),
    /// Subrepresentations and certificates
    #[command(subcommand)]
    Structure(SCmd),
    /// Acceptance checks
    #[command(subcommand)]
    Verify(VCmd),
    /// Specializations and weight data
    #[command(subcommand)]
    Params(PCmd),
}

#[derive(Subcommand)]
enum KCmd {
    /// E_lambda
    #[command(name = "E")]
    E {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        dual: bool,
    },
    /// chi*_0(E_lambda)
    Chi0 {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The duality identity for one pair
    Duality {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// tq | aa | ab | ac | ad
    #[arg(long, default_value = "tq")]
    family: String,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i32,
    #[arg(long, default_value_t = 2)]
    r: i32,
    #[arg(long, default_value_t = 1)]
    i: i32,
    /// Use the minus sign of ab/ac/ad.
    #[arg(long)]
    minus: bool,
    #[arg(long, default_value_t = 0)]
    branch: usize,
}

impl SpecArgs {
    fn family(&self) -> Result<Family, DahaError> {
        let (i, r, plus) = (self.i, self.r, !self.minus);
        Ok(match self.family.as_str() {
            "tq" => Family::Tq { k: self.k, r },
            "aa" => Family::Aa { k: self.k, r },
            "ab" => Family::Ab { i, r, plus },
            "ac" => Family::Ac { i, r, plus },
            "ad" => Family::Ad { i, r, plus },
            f => return Err(DahaError::Parse(format!("unknown family '{}', expected tq|aa|ab|ac|ad", f))),
        })
    }

    fn spec(&self, n: usize) -> Result<SpecPoly, DahaError> {
        spec_branch(n, self.family()?, self.branch)
    }
}

#[derive(Subcommand)]
enum MCmd {
    /// The basis element bar E_lambda
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Whether bar phi_i carries bar E_lambda to a unit multiple of another basis element
    Arrow {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Intertwiner index 0..=n
        #[arg(long = "index")]
        index: usize,
        #[command(flatten)]
        spec: SpecArgs,
    },
}

#[derive(Subcommand)]
enum SCmd {
    /// Wheel condition for E_lambda or for the level-one product
    WheelCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: i32,
        #[arg(long, default_value_t = 2)]
        r: i32,
        #[arg(long, default_value_t = 1)]
        wheels: usize,
        #[arg(long, default_value_t = 0)]
        branch: usize,
        /// Checks E_lambda; without it the level-one product (n = k + 1 times m) is checked.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Basis of the subrepresentation in a window, with certificates
    Basis {
        /// tq | ab | ac | ad | q
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        window: i32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, default_value_t = 2)]
        r: i32,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long)]
        minus: bool,
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
    /// The lattice of subrepresentations at q^{r-1} = 1
    Lattice {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i32,
        /// Report for one weight.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Sweep the arrow classification over the box.
        #[arg(long)]
        window: Option<i32>,
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
    /// Replay an irreducibility chain
    Certify {
        /// tq-irr | aa-irr
        #[arg(long)]
        chain: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: i32,
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
}

#[derive(Subcommand)]
enum VCmd {
    /// Every acceptance criterion
    All {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// quick | full
        #[arg(long, default_value = "quick")]
        level: String,
        /// Comma-separated subset of criteria
        #[arg(long)]
        only: Option<String>,
    },
    /// The algebra relations on random inputs
    Relations {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum PCmd {
    /// All specializations at rank n
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r_max: i32,
    },
    /// The irreducible factors of one family
    Spec {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Weight data: dominant form, rho, sigma, eigenvalues, quotient
    Weight {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        r: Option<i32>,
    },
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<DahaError> for Failure {
    fn from(e: DahaError) -> Self {
        match e {
            DahaError::Param(_) | DahaError::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verify(e.to_string()),
        }
    }
}

type Out = Result<(Value, Option<String>, bool), Failure>;

fn parse_weight(s: &str, n: Option<usize>) -> Result<Weight, Failure> {
    let v: Vec<i32> = s
        .split(',')
        .map(|x| x.trim().parse::<i32>().map_err(|_| Failure::Usage(format!("bad weight '{}'", s))))
        .collect::<Result<_, _>>()?;
    if let Some(n) = n {
        if v.len() != n {
            return Err(Failure::Usage(format!("weight {:?} has {} entries, expected n = {}", v, v.len(), n)));
        }
    }
    if v.len() < 2 {
        return Err(Failure::Usage("need n >= 2".into()));
    }
    Ok(Weight(v))
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage("need n >= 2".into()));
    }
    Ok(())
}

fn koornwinder(cmd: KCmd) -> Out {
    match cmd {
        KCmd::E { n, lambda, dual } => {
            let l = parse_weight(&lambda, Some(n))?;
            let e = compute_e(&l, dual);
            Ok((e.to_json(), Some(e.body.to_string()), true))
        }
        KCmd::Chi0 { n, lambda } => {
            let l = parse_weight(&lambda, Some(n))?;
            let c = chi0_star(&l);
            Ok((json!({"lambda": l.0, "chi0_star": c.to_string()}), Some(c.to_string()), true))
        }
        KCmd::Duality { n, lambda, mu } => {
            let (l, m) = (parse_weight(&lambda, Some(n))?, parse_weight(&mu, Some(n))?);
            let ok = duality_check(&l, &m);
            Ok((json!({"lambda": l.0, "mu": m.0, "holds": ok}), Some(format!("duality {}", if ok { "holds" } else { "FAILS" })), ok))
        }
    }
}

fn modified(cmd: MCmd) -> Out {
    match cmd {
        MCmd::Build { n, lambda, spec } => {
            let l = parse_weight(&lambda, Some(n))?;
            let s = spec.spec(n)?;
            let p = build_basis_element(&l, &s)?;
            let sp = p.specialized()?;
            let j = json!({"spec": s.to_string(), "element": p.to_json(), "at_s": laurent_json(&sp)});
            Ok((j, Some(format!("{}\nat s=0: {} terms", p, sp.len())), true))
        }
        MCmd::Arrow { n, lambda, index, spec } => {
            if index > n {
                return Err(Failure::Usage(format!("index {} out of range 0..={}", index, n)));
            }
            let l = parse_weight(&lambda, Some(n))?;
            let s = spec.spec(n)?;
            let p = build_basis_element(&l, &s)?;
            let a = arrow(index, &p)?;
            let text = match &a {
                Arrow::Yes(r) => format!("{} -> {}  (c at s=0: {}, {:?})", r.source, r.target, r.c_spec, r.hypothesis),
                Arrow::No { reason, .. } => format!("no arrow: {}", reason),
            };
            Ok((a.to_json(), Some(text), true))
        }
    }
}

/// One line per top-level key, values in compact JSON.
fn pretty_default(v: &Value) -> Option<String> {
    let obj = v.as_object()?;
    Some(obj.iter().map(|(k, x)| format!("{}: {}", k, x)).collect::<Vec<_>>().join("\n"))
}

fn structure(cmd: SCmd) -> Out {
    match cmd {
        SCmd::WheelCheck { n, k, r, wheels, branch, lambda } => {
            let w = WheelSpec::new(n, k, r, wheels, branch)?;
            let (label, f) = match lambda {
                Some(l) => {
                    let l = parse_weight(&l, Some(n))?;
                    (format!("E{:?}", l.0), compute_e(&l, false).body)
                }
                None => {
                    let len = (k + 1) as usize;
                    if n % len != 0 {
                        return Err(Failure::Usage(format!("level-one product needs k + 1 | n, got n = {}, k + 1 = {}", n, len)));
                    }
                    ("level-one product".to_string(), level1_product(n, n / len, len)?)
                }
            };
            let sp = specialize_laurent(&f, &w.spec)?;
            let grid = wheel_check(&sp, &w);
            let direct = wheel_check_direct(&sp, &w);
            let j = json!({"spec": w.spec.to_string(), "polynomial": label, "window": w.window(&sp), "wheel_check": grid, "direct": direct});
            Ok((j.clone(), pretty_default(&j), true))
        }
        SCmd::Basis { case, n, window, k, r, i, minus, branch } => {
            check_n(n)?;
            let j = match case.as_str() {
                "tq" => {
                    let w = WheelSpec::new(n, k, r, 1, branch)?;
                    let rep = admissible_report(&w, window)?;
                    let ok = rep.iter().all(|e| e.ok(n, w.len));
                    json!({"case": "tq", "spec": w.spec.to_string(), "window": window, "basis": rep.iter().map(|e| e.to_json()).collect::<Vec<_>>(), "ok": ok})
                }
                "ab" | "ac" | "ad" => {
                    let g = GridSpec::new(GridCase::parse(&case)?, n, i, r, !minus, branch)?;
                    let certs = g.zeta_certificates(window, false)?;
                    let ok = certs.iter().all(|z| z.ok);
                    json!({
                        "case": case,
                        "spec": g.spec.to_string(),
                        "window": window,
                        "basis": g.s_set_basis(window).iter().map(|l| l.0.clone()).collect::<Vec<_>>(),
                        "zeta_certificates": certs.iter().map(|z| z.to_json()).collect::<Vec<_>>(),
                        "ok": ok,
                    })
                }
                "q" => {
                    let rows: Vec<Value> = box_weights(n, window)
                        .into_iter()
                        .map(|l| {
                            let (q, std) = l.quotient(r);
                            json!({"lambda": l.0, "quot": q.0, "std": std.0})
                        })
                        .collect();
                    json!({"case": "q", "r": r, "window": window, "weights": rows, "ok": true})
                }
                c => return Err(Failure::Usage(format!("unknown case '{}', expected tq|ab|ac|ad|q", c))),
            };
            let ok = j["ok"].as_bool().unwrap_or(false);
            Ok((j.clone(), pretty_default(&j), ok))
        }
        SCmd::Lattice { n, r, lambda, window, branch } => {
            check_n(n)?;
            if r < 2 {
                return Err(Failure::Usage("need r - 1 >= 1".into()));
            }
            if lambda.is_none() && window.is_none() {
                return Err(Failure::Usage("lattice needs --lambda or --window".into()));
            }
            let s = q_spec(n, r, branch)?;
            let mut out = json!({"spec": s.to_string()});
            let mut ok = true;
            if let Some(l) = lambda {
                let rep = quotient_lattice(&parse_weight(&l, Some(n))?, r, &s)?;
                ok &= rep.ok();
                out = rep.to_json();
            }
            if let Some(w) = window {
                let bad = q_arrows_sweep(n, r, w, &s)?;
                ok &= bad.is_empty();
                out["sweep"] = json!({"window": w, "inconsistent": bad.iter().map(|b| b.to_json()).collect::<Vec<_>>()});
            }
            Ok((out.clone(), pretty_default(&out), ok))
        }
        SCmd::Certify { chain, n, r, branch } => {
            let c = ChainSpec::new(ChainKind::parse(&chain)?, n, r, branch)?;
            let cert = verify_arrow_chain(&c)?;
            let j = cert.to_json();
            Ok((j.clone(), pretty_default(&j), cert.ok()))
        }
    }
}

fn verify_cmd(cmd: VCmd, seed: u64) -> Out {
    match cmd {
        VCmd::All { n, level, only } => {
            check_n(n)?;
            let level = Level::parse(&level).ok_or_else(|| Failure::Usage(format!("unknown level '{}', expected quick|full", level)))?;
            let ids: Vec<usize> = match only {
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().ok().filter(|i| (1..=11).contains(i)).ok_or_else(|| Failure::Usage(format!("bad criterion '{}'", x))))
                    .collect::<Result<_, _>>()?,
                None => (1..=11).collect(),
            };
            let cfg = Settings { level, seed, rank: n };
            let checks: Vec<_> = ids.iter().map(|&id| verify::run(id, &cfg)).collect();
            let ok = checks.iter().all(|c| c.ok);
            let mut text = String::new();
            for c in &checks {
                text.push_str(&c.line());
                text.push('\n');
                for d in &c.detail {
                    text.push_str(&format!("      {}\n", d));
                }
            }
            text.push_str(if ok { "all criteria pass" } else { "some criteria fail" });
            let j = json!({"level": format!("{:?}", level).to_lowercase(), "seed": seed, "ok": ok, "criteria": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>()});
            Ok((j, Some(text), ok))
        }
        VCmd::Relations { n, count } => {
            check_n(n)?;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut failures = Vec::new();
            let mut total = 0;
            for k in 0..count {
                let f = daha::polyrep::random_laurent(&mut rng, n, 3, 2, true);
                for (name, good) in daha::polyrep::relation_suite(&f) {
                    total += 1;
                    if !good {
                        failures.push(format!("input {}: {}", k, name));
                    }
                }
            }
            let ok = failures.is_empty();
            let j = json!({"n": n, "inputs": count, "checked": total, "failures": failures, "ok": ok});
            Ok((j, Some(format!("{} relation instances on {} inputs, {} failures", total, count, failures.len())), ok))
        }
    }
}

fn params(cmd: PCmd) -> Out {
    match cmd {
        PCmd::Catalog { n, r_max } => {
            check_n(n)?;
            let specs = catalog(n, r_max);
            let text = specs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n");
            Ok((json!(specs.iter().map(daha::params::json::spec_to_json).collect::<Vec<_>>()), Some(text), true))
        }
        PCmd::Spec { n, spec } => {
            check_n(n)?;
            let fam = spec.family()?;
            let specs = daha::params::spec_factors(n, fam)?;
            let text = specs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n");
            Ok((json!(specs.iter().map(daha::params::json::spec_to_json).collect::<Vec<_>>()), Some(text), true))
        }
        PCmd::Weight { lambda, r } => {
            let l = parse_weight(&lambda, None)?;
            let d = l.data();
            let y: Vec<String> = l.y_monomials(false).iter().map(|m| m.to_string()).collect();
            let mut j = json!({
                "lambda": l.0,
                "plus": d.plus.0,
                "w": d.w.0,
                "rho": d.rho,
                "sigma": d.sigma,
                "y": y,
                "reduced_word": l.reduced_word(),
            });
            if let Some(r) = r {
                if r < 2 {
                    return Err(Failure::Usage("need r - 1 >= 1".into()));
                }
                let (q, std) = l.quotient(r);
                j["quot"] = json!(q.0);
                j["std"] = json!(std.0);
            }
            Ok((j.clone(), pretty_default(&j), true))
        }
    }
}

/// `key=value` lines; `#` starts a comment.
fn read_config(path: &str) -> Result<Vec<(String, String)>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read config {}: {}", path, e)))?;
    let mut out = Vec::new();
    for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
        let (k, v) = line.split_once('=').ok_or_else(|| Failure::Usage(format!("config line '{}' is not key=value", line)))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut format = cli.format;
    let mut seed = cli.seed;
    if let Some(path) = &cli.config {
        for (k, v) in read_config(path)? {
            match k.as_str() {
                "format" if format.is_none() => {
                    format = Some(Format::from_str(&v, true).map_err(|_| Failure::Usage(format!("bad format '{}'", v)))?)
                }
                "seed" if seed.is_none() => seed = Some(v.parse().map_err(|_| Failure::Usage(format!("bad seed '{}'", v)))?),
                "memo" => std::env::set_var(MEMO_ENV, &v),
                "format" | "seed" => {}
                _ => return Err(Failure::Usage(format!("unknown config key '{}'", k))),
            }
        }
    }
    let seed = seed.unwrap_or(0);
    let structure_cmd = matches!(cli.cmd, Cmd::Structure(_));
    let format = format.unwrap_or(if structure_cmd { Format::Json } else { Format::Pretty });
    let (json, text, ok) = match cli.cmd {
        Cmd::Koornwinder(c) => koornwinder(c),
        Cmd::Modified(c) => modified(c),
        Cmd::Structure(c) => structure(c),
        Cmd::Verify(c) => verify_cmd(c, seed),
        Cmd::Params(c) => params(c),
    }?;
    let body = match (format, text) {
        (Format::Pretty, Some(t)) => t,
        _ => json.to_string(),
    };
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout(), "{}", body);
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify("verification failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Verify(m)) => {
            eprintln!("{}", m);
            ExitCode::from(1)
        }
    }
}
