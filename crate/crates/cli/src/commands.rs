//! Verb dispatch. `run` never exits the process; it returns the exit code
//! and the primary output so the binary and the tests share one path.

use crate::config::{Format, RunConfig};
use crate::parse::{parse_with_degree, ParseError};
use crate::suites::{self, is_budget, Status, SuiteOptions, SuiteReport, UnknownSuite};
use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use homology::{ext_dims, invariant_i, invariant_p, InvariantValue};
use modkit::structure::{composition_factors, semisimple_multiplicities, socle_layers};
use partitions::Partition;
use polyrep::{FunctorExpr, Rep, Single};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser, Debug)]
#[command(name = "polyfun", version, about = "Strict polynomial functors over prime fields")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Characteristic (default 2; suites choose their own primes when omitted).
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Evaluation dimension (default: the total degree).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Frobenius twist exponent for invariants.
    #[arg(long, global = true, default_value_t = 1)]
    pub r: usize,
    /// Search cap for invariants (default 2(p^r-1)+d).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Largest projective term allowed in a resolution.
    #[arg(long = "max-dim", global = true)]
    pub max_dim: Option<usize>,
    /// Largest degree for symmetric-group resolutions and the internal tensor evaluator.
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<usize>,
    /// Wall-clock budget per suite, in seconds.
    #[arg(long = "time-budget", global = true)]
    pub time_budget: Option<u64>,
    /// Resolution cache and report directory [env: POLYREP_CACHE].
    #[arg(long = "cache-dir", global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
    /// Seed for the randomised isomorphism search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    I,
    P,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Construct a functor and print its serialisation.
    Build {
        #[arg(long)]
        expr: String,
    },
    /// Dimension of Hom between two functors.
    Hom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Dimensions of Ext^k for k ≤ kmax.
    Ext {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
    },
    /// The simple functor L_λ.
    Simple {
        #[arg(long)]
        partition: String,
    },
    /// Socle layers with their composition factors.
    SocleSeries {
        #[arg(long)]
        expr: String,
    },
    /// Composition factors with multiplicities.
    Factors {
        #[arg(long)]
        expr: String,
    },
    /// The invariants i(F,r) or p(F,r).
    Invariant {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        expr: String,
    },
    /// Evaluate at the multilinear weight: a symmetric group module.
    Schur {
        #[arg(long)]
        expr: String,
    },
    /// The Mullineux conjugate of a p-regular partition.
    Mullineux {
        #[arg(long)]
        partition: String,
    },
    /// Internal tensor product.
    Intern {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// Reproduce a published table as CSV.
    Table {
        #[arg(long)]
        suite: String,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct Usage(pub String);

impl GlobalArgs {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            p: self.p,
            n: self.n,
            r: self.r,
            cap: self.cap,
            max_dim: self.max_dim,
            max_degree: self.max_degree,
            time_budget: self.time_budget.map(Duration::from_secs),
            cache_dir: self
                .cache_dir
                .clone()
                .or_else(|| std::env::var_os("POLYREP_CACHE").map(PathBuf::from))
                .filter(|d| !d.as_os_str().is_empty()),
            format: if self.json {
                Format::Json
            } else if self.csv {
                Format::Csv
            } else {
                Format::Text
            },
            seed: self.seed,
            quiet: self.quiet,
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let cfg = cli.global.config();
    match dispatch(&cli.verb, &cfg) {
        Ok((code, stdout)) => Output { code, stdout, stderr: String::new() },
        Err(e) => Output { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn error_code(e: &anyhow::Error) -> i32 {
    if e.downcast_ref::<ParseError>().is_some() || e.downcast_ref::<Usage>().is_some() || e.downcast_ref::<UnknownSuite>().is_some() {
        3
    } else if is_budget(e) {
        2
    } else if format!("{e:#}").contains("assertion failed") {
        1
    } else {
        // invalid input rejected by the library (context too small, not restricted, ...)
        3
    }
}

fn expr(text: &str, cfg: &RunConfig) -> Result<(FunctorExpr, usize)> {
    Ok(parse_with_degree(text, cfg.prime() as usize)?)
}

fn build_one(text: &str, cfg: &RunConfig) -> Result<Rep<Single>> {
    let (e, d) = expr(text, cfg)?;
    build_in(&e, cfg.context(d)?)
}

fn build_in(e: &FunctorExpr, g: Single) -> Result<Rep<Single>> {
    Ok(modkit::build(e, g)?)
}

/// Two expressions in a common context (n defaults to the larger degree).
fn build_pair(a: &str, b: &str, cfg: &RunConfig) -> Result<(Rep<Single>, Rep<Single>)> {
    let ((ea, da), (eb, db)) = (expr(a, cfg)?, expr(b, cfg)?);
    let g = cfg.context(da.max(db))?;
    Ok((build_in(&ea, g)?, build_in(&eb, g)?))
}

fn partition(text: &str) -> Result<Partition> {
    let parts = text
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| Usage(format!("bad part '{s}' in partition '{text}'"))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| Usage(format!("'{text}': {e}")).into())
}

fn show(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

/// The serialisation as a JSON object with the same content.
pub fn polyrep_json(text: &str) -> Value {
    let mut lines = text.lines();
    let header: serde_json::Map<String, Value> = lines
        .next()
        .unwrap_or_default()
        .split_whitespace()
        .skip(2)
        .filter_map(|kv| kv.split_once('='))
        .map(|(k, v)| (k.to_string(), json!(v.parse::<u64>().unwrap_or(0))))
        .collect();
    let entries: Vec<Value> = lines
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().map(|kv| kv.split_once('=').map_or("", |x| x.1)).collect();
            let e: Vec<u64> = f[0].split(',').filter_map(|x| x.parse().ok()).collect();
            json!({"E": e, "r": f[1].parse::<u64>().unwrap_or(0), "c": f[2].parse::<u64>().unwrap_or(0), "v": f[3].parse::<u64>().unwrap_or(0)})
        })
        .collect();
    let mut obj = header;
    obj.insert("format".into(), json!("POLYREP v1"));
    obj.insert("entries".into(), json!(entries));
    Value::Object(obj)
}

fn emit_module(m: &Rep<Single>, cfg: &RunConfig) -> String {
    let text = polyrep::serial::serialize(m);
    match cfg.format {
        Format::Json => show(&polyrep_json(&text)),
        _ => text,
    }
}

fn factors_json(f: &modkit::structure::Factors) -> Value {
    json!(f)
}

fn factors_text(f: &modkit::structure::Factors) -> String {
    f.iter().map(|(k, v)| if *v == 1 { k.clone() } else { format!("{v}{k}") }).collect::<Vec<_>>().join(" + ")
}

fn invariant_json(v: InvariantValue) -> Value {
    match v {
        InvariantValue::Finite(k) => json!(k),
        InvariantValue::Infinite => json!("inf"),
        InvariantValue::AtLeast(k) => json!({ "at_least": k }),
    }
}

fn dispatch(verb: &Verb, cfg: &RunConfig) -> Result<(i32, String)> {
    Ok(match verb {
        Verb::Build { expr: e } => (0, emit_module(&build_one(e, cfg)?, cfg)),
        Verb::Hom { from, to } => {
            let (a, b) = build_pair(from, to, cfg)?;
            let d = modkit::hom(&a, &b).dim();
            let out = match cfg.format {
                Format::Json => show(&json!({"from": from, "to": to, "p": cfg.prime(), "n": a.grading().n, "dim": d})),
                _ => format!("{d}\n"),
            };
            (0, out)
        }
        Verb::Ext { from, to, kmax } => {
            let (a, b) = build_pair(from, to, cfg)?;
            let dims = ext_dims(&a, &b, *kmax, &cfg.resolve())?;
            let out = match cfg.format {
                Format::Json => show(&json!({"from": from, "to": to, "p": cfg.prime(), "n": a.grading().n, "ext": dims})),
                Format::Csv => {
                    let mut s = String::from("k,dim\n");
                    for (k, d) in dims.iter().enumerate() {
                        s += &format!("{k},{d}\n");
                    }
                    s
                }
                Format::Text => dims.iter().enumerate().map(|(k, d)| format!("Ext^{k} = {d}\n")).collect(),
            };
            (0, out)
        }
        Verb::Simple { partition: text } => {
            let l = partition(text)?;
            let g = cfg.context(l.weight())?;
            let s = modkit::simple(g, &l)?;
            let ch: Vec<(Vec<usize>, usize)> =
                s.rep.character().into_iter().filter(|(_, d)| *d > 0).map(|(w, d)| (w.to_vec(), d)).collect();
            let out = match cfg.format {
                Format::Json => show(&json!({"partition": l.parts(), "p": cfg.prime(), "n": g.n, "dim": s.rep.dim(), "character": ch})),
                _ => {
                    let mut t = format!("L{l} p={} n={} dim={}\n", cfg.prime(), g.n, s.rep.dim());
                    for (w, d) in ch {
                        t += &format!("  {w:?}: {d}\n");
                    }
                    t
                }
            };
            (0, out)
        }
        Verb::SocleSeries { expr: e } => {
            let m = build_one(e, cfg)?;
            let layers = socle_layers(&m)?.iter().map(semisimple_multiplicities).collect::<modkit::Result<Vec<_>>>()?;
            let out = match cfg.format {
                Format::Json => show(&json!({"expr": e, "layers": layers.iter().map(factors_json).collect::<Vec<_>>()})),
                _ => layers.iter().enumerate().map(|(i, f)| format!("{}: {}\n", i + 1, factors_text(f))).collect(),
            };
            (0, out)
        }
        Verb::Factors { expr: e } => {
            let m = build_one(e, cfg)?;
            let f = composition_factors(&m)?;
            let out = match cfg.format {
                Format::Json => show(&json!({"expr": e, "factors": factors_json(&f)})),
                _ => f.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
            };
            (0, out)
        }
        Verb::Invariant { kind, expr: e } => {
            let m = build_one(e, cfg)?;
            let o = cfg.invariant();
            let v = match kind {
                Kind::I => invariant_i(&m, cfg.r, &o)?,
                Kind::P => invariant_p(&m, cfg.r, &o)?,
            };
            let code = if matches!(v, InvariantValue::AtLeast(_)) { 2 } else { 0 };
            (code, show(&json!({ "value": invariant_json(v) })))
        }
        Verb::Schur { expr: e } => {
            let u = symbridge::schur_functor(&build_one(e, cfg)?)?;
            let out = match cfg.format {
                Format::Json => show(&serde_json::to_value(symbridge::serial::to_json(&u))?),
                _ => symbridge::serial::to_text(&u),
            };
            (0, out)
        }
        Verb::Mullineux { partition: text } => {
            let l = partition(text)?;
            let m = symbridge::mullineux(cfg.field()?, &l)?;
            let out = match cfg.format {
                Format::Json => show(&json!({"partition": l.parts(), "p": cfg.prime(), "mullineux": m.parts()})),
                _ => format!("{}\n", m.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
            };
            (0, out)
        }
        Verb::Intern { left, right } => {
            let (a, b) = build_pair(left, right, cfg)?;
            let t = match cfg.max_degree {
                Some(d) => daytensor::internal_general_with(&a, &b, d)?,
                None => daytensor::internal_general(&a, &b)?,
            };
            (0, emit_module(&t, cfg))
        }
        Verb::Verify { suite, dmax } => {
            let opts = SuiteOptions { dmax: *dmax };
            let reports = if suite == "all" {
                suites::run_all(cfg, &opts)?
            } else {
                vec![suites::run_suite(suite, cfg, &opts)?]
            };
            for r in &reports {
                persist_report(cfg, r)?;
            }
            let status = reports.iter().map(|r| r.status).max().unwrap_or(Status::Inconclusive);
            (status.exit_code(), render_reports(&reports, cfg.format)?)
        }
        Verb::Table { suite } => {
            if suite != "prop65" && suite != "prop65-table" {
                bail!(Usage(format!("unknown table '{suite}' (available: prop65)")));
            }
            if cfg.p.is_some_and(|p| p != 2) || cfg.n.is_some_and(|n| n != 4) {
                bail!(Usage("the prop65 table is pinned to p=2, n=4".into()));
            }
            let vals = suites::prop65_values(cfg)?;
            let inconclusive = vals.iter().flatten().any(|v| matches!(v, InvariantValue::AtLeast(_)));
            let out = match cfg.format {
                Format::Json => {
                    let cols: Vec<Value> = suites::PROP65_COLUMNS
                        .iter()
                        .zip(&vals)
                        .map(|(e, v)| json!({"F": e, "i1": invariant_json(v[0]), "i2": invariant_json(v[1])}))
                        .collect();
                    show(&json!({"p": 2, "n": 4, "columns": cols}))
                }
                _ => table_csv(&vals)?,
            };
            (if inconclusive { 2 } else { 0 }, out)
        }
    })
}

/// The table in the published row/column order.
pub fn table_csv(vals: &[[InvariantValue; 2]]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["r".to_string()];
    header.extend(suites::PROP65_COLUMNS.iter().map(|s| s.to_string()));
    w.write_record(&header)?;
    for r in 0..2 {
        let mut row = vec![(r + 1).to_string()];
        row.extend(vals.iter().map(|v| v[r].to_string()));
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?)
}

pub fn render_reports(reports: &[SuiteReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            if reports.len() == 1 {
                pretty(&serde_json::to_value(&reports[0])?)
            } else {
                pretty(&serde_json::to_value(reports)?)
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "instance", "status", "detail"])?;
            for r in reports {
                for i in &r.instances {
                    w.write_record([r.suite.as_str(), i.name.as_str(), i.status.word(), i.detail.as_str()])?;
                }
            }
            String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s += &format!(
                    "{} {}: {} pass, {} fail, {} inconclusive\n",
                    r.status.word(),
                    r.suite,
                    r.count(Status::Pass),
                    r.count(Status::Fail),
                    r.count(Status::Inconclusive)
                );
                for i in &r.instances {
                    s += &format!("  {:<12} {}: {}\n", i.status.word(), i.name, i.detail);
                    if let Some(a) = &i.artifact {
                        for line in a.lines() {
                            s += &format!("    {line}\n");
                        }
                    }
                }
            }
            s
        }
    })
}

/// `<cache-dir>/reports/<suite>.json`, replaced atomically.
fn persist_report(cfg: &RunConfig, r: &SuiteReport) -> Result<()> {
    let Some(dir) = &cfg.cache_dir else { return Ok(()) };
    let dir = dir.join("reports");
    std::fs::create_dir_all(&dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
    tmp.write_all(pretty(&serde_json::to_value(r)?).as_bytes())?;
    let name = match cfg.p {
        Some(p) => format!("{}-p{p}.json", r.suite),
        None => format!("{}.json", r.suite),
    };
    tmp.persist(dir.join(name))?;
    Ok(())
}
