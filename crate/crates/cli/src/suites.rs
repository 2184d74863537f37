//! The verification-suite registry.
//!
//! Every suite expands to a list of independent instances, runs them in a
//! worker pool and reports pass/fail/inconclusive per instance, in a fixed
//! order. Objects built along the way are recorded so that the `properties`
//! suite can re-check the comodule laws on all of them.

use crate::config::RunConfig;
use crate::parse::parse;
use anyhow::{anyhow, bail, Context, Result};
use bifun::{check_kunneth, check_product, verify_steinberg_type, Bi, BiRep};
use exactfield::FieldSpec;
use homology::verify::{
    check_duality, check_sum_min, check_tensor_min, verify_connectedness, verify_cup_deg01, verify_lmses,
    verify_shift_ptitlm, CupReport,
};
use homology::{ext_dims, invariant_i, resolve, InvariantValue};
use modkit::iso::iso_test_with;
use modkit::maps::{map_coordinates, twist_map};
use modkit::structure::{composition_factors, composition_factors_by_character, composition_factors_radical};
use modkit::{hom, HomMap};
use partitions::{enumerate_partitions, pow, Partition};
use polyrep::check::{check_comodule, CheckMode};
use polyrep::{dual, Rep, Single};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    pub fn word(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Fail => "FAIL",
        }
    }

    /// Process exit code for a run ending in this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub name: String,
    pub status: Status,
    pub detail: String,
    /// A DOT graph or similar attachment.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: Status,
    pub instances: Vec<Instance>,
}

impl SuiteReport {
    pub fn new(suite: &str, instances: Vec<Instance>) -> Self {
        let status = if instances.is_empty() {
            Status::Inconclusive
        } else {
            instances.iter().map(|i| i.status).max().unwrap()
        };
        SuiteReport { suite: suite.to_string(), status, instances }
    }

    pub fn count(&self, s: Status) -> usize {
        self.instances.iter().filter(|i| i.status == s).count()
    }

    pub fn not_passing(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| i.status != Status::Pass)
    }
}

pub const SUITES: &[&str] = &[
    "prop65-table",
    "prop61-closed-forms",
    "steinberg",
    "clausen-james",
    "tenspres",
    "cup-deg01",
    "connectedness",
    "prop-op",
    "lmses",
    "ptitlm",
    "socle-steinberg",
    "subfunctor-lattice",
    "diagrams",
    "appA",
    "kn-schur",
    "internal-calcul",
    "stein-internal",
    "kronecker-schur",
    "twist-deg01",
    "properties",
];

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Largest degree for the suites that range over degrees.
    pub dmax: Option<usize>,
}

pub fn run_suite(name: &str, cfg: &RunConfig, opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let instances = match name {
        "prop65-table" => prop65_table(cfg)?,
        "prop61-closed-forms" => closed_forms(cfg)?,
        "steinberg" => steinberg(cfg, opts)?,
        "clausen-james" => clausen_james(cfg, opts)?,
        "tenspres" => tenspres(cfg)?,
        "cup-deg01" => cup_deg01(cfg)?,
        "connectedness" => connectedness(cfg)?,
        "prop-op" => prop_op(cfg)?,
        "lmses" => lmses(cfg)?,
        "ptitlm" => ptitlm(cfg)?,
        "socle-steinberg" => socle_steinberg(cfg)?,
        "subfunctor-lattice" => lattices(cfg, false)?,
        "diagrams" => lattices(cfg, true)?,
        "appA" => appendix_a(cfg)?,
        "kn-schur" => kn_schur(cfg)?,
        "internal-calcul" => internal_calcul(cfg)?,
        "stein-internal" => stein_internal(cfg)?,
        "kronecker-schur" => kronecker_schur(cfg)?,
        "twist-deg01" => twist_deg01(cfg)?,
        "properties" => properties(cfg)?,
        other => bail!(UnknownSuite(other.to_string())),
    };
    cfg.note(format!("{name}: {} instances in {:.1}s", instances.len(), start.elapsed().as_secs_f64()));
    Ok(SuiteReport::new(name, instances))
}

#[derive(Debug, thiserror::Error)]
#[error("unknown suite '{0}'")]
pub struct UnknownSuite(pub String);

// ------------------------------------------------------------------ running

type Job<T> = Box<dyn FnOnce() -> Result<T> + Send>;

struct Task<T> {
    name: String,
    job: Job<T>,
}

fn task<T>(name: impl Into<String>, job: impl FnOnce() -> Result<T> + Send + 'static) -> Task<T> {
    Task { name: name.into(), job: Box::new(job) }
}

/// Whether an error means "ran out of budget" rather than "wrong".
pub fn is_budget(e: &anyhow::Error) -> bool {
    let s = format!("{e:#}");
    s.contains("budget exceeded") || s.contains("inconclusive")
}

/// Run the jobs in the worker pool; results come back in input order.
fn run_jobs<T: Send>(cfg: &RunConfig, tasks: Vec<Task<T>>) -> Vec<(String, Result<T>)> {
    let deadline = cfg.deadline();
    tasks
        .into_par_iter()
        .map(|t| {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return (t.name, Err(anyhow!("budget exceeded: time budget exhausted")));
            }
            let res = (t.job)();
            (t.name, res)
        })
        .collect()
}

fn error_instance(name: String, e: &anyhow::Error) -> Instance {
    let status = if is_budget(e) { Status::Inconclusive } else { Status::Fail };
    Instance { name, status, detail: format!("error: {e:#}"), artifact: None }
}

fn run_checks(cfg: &RunConfig, tasks: Vec<Task<(bool, String)>>) -> Vec<Instance> {
    run_jobs(cfg, tasks)
        .into_iter()
        .map(|(name, r)| match r {
            Ok((ok, detail)) => Instance { name, status: if ok { Status::Pass } else { Status::Fail }, detail, artifact: None },
            Err(e) => error_instance(name, &e),
        })
        .collect()
}

fn aggregate(name: &str, ok: bool, detail: String) -> Instance {
    Instance { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail, artifact: None }
}

// ------------------------------------------------------------------ objects

static TRACKED: Mutex<BTreeMap<String, Rep<Single>>> = Mutex::new(BTreeMap::new());
static TRACKED_BI: Mutex<BTreeMap<String, BiRep>> = Mutex::new(BTreeMap::new());

fn fingerprint<G: polyrep::Grading>(m: &Rep<G>) -> String {
    format!("{} p={} {:?} {:?}", m.label(), m.field().p(), m.degree(), m.character())
}

/// Record an object for the property checks.
pub fn track(m: &Rep<Single>) -> Rep<Single> {
    let key = format!("n={} {}", m.grading().n, fingerprint(m));
    TRACKED.lock().unwrap().entry(key).or_insert_with(|| m.clone());
    m.clone()
}

fn track_bi(m: &BiRep) {
    TRACKED_BI.lock().unwrap().entry(fingerprint(m)).or_insert_with(|| m.clone());
}

/// Number of objects recorded so far (functors, bifunctors).
pub fn tracked_counts() -> (usize, usize) {
    (TRACKED.lock().unwrap().len(), TRACKED_BI.lock().unwrap().len())
}

pub fn ctx(p: u32, n: usize) -> Result<Single> {
    Ok(Single::new(FieldSpec::new(p)?, n))
}

/// Build an expression in a given context and record it.
pub fn obj(expr: &str, g: Single) -> Result<Rep<Single>> {
    let e = parse(expr)?;
    Ok(track(&modkit::build(&e, g)?))
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn iso(cfg: &RunConfig, a: &Rep<Single>, b: &Rep<Single>) -> Result<bool> {
    match iso_test_with(a, b, cfg.iso()) {
        modkit::IsoResult::Iso => Ok(true),
        modkit::IsoResult::NotIso => Ok(false),
        modkit::IsoResult::Inconclusive => bail!("isomorphism test inconclusive for {} / {}", a.label(), b.label()),
    }
}

fn primes(cfg: &RunConfig, default: &[u32]) -> Vec<u32> {
    match cfg.p {
        Some(p) => vec![p],
        None => default.to_vec(),
    }
}

// ------------------------------------------------------------------ table

/// Column order of the published table.
pub const PROP65_COLUMNS: [&str; 9] =
    ["Div[4]", "W[3,1]", "W[2,2]", "W[2,1,1]", "Wedge[4]", "C[2,1,1]", "C[2,2]", "C[3,1]", "Sym[4]"];
pub const PROP65_EXPECTED: [[usize; 9]; 2] = [[2, 2, 2, 1, 1, 1, 0, 0, 0], [6, 5, 4, 4, 2, 2, 1, 1, 0]];

/// `i(F, r)` for the table's functors, `r = 1, 2`, at `p = 2`, `n = 4`.
pub fn prop65_values(cfg: &RunConfig) -> Result<Vec<[InvariantValue; 2]>> {
    let g = ctx(2, 4)?;
    obj("T(4,1)", g)?;
    obj("T(4,2)", g)?;
    let mut tasks = Vec::new();
    for e in PROP65_COLUMNS {
        for r in [1, 2] {
            let o = cfg.invariant();
            tasks.push(task(format!("{e},{r}"), move || Ok(invariant_i(&obj(e, g)?, r, &o)?)));
        }
    }
    let vals = run_jobs(cfg, tasks).into_iter().map(|(_, v)| v).collect::<Result<Vec<_>>>()?;
    Ok(vals.chunks(2).map(|c| [c[0], c[1]]).collect())
}

fn prop65_table(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let vals = prop65_values(cfg)?;
    let mut out = Vec::new();
    for r in 0..2 {
        for (j, e) in PROP65_COLUMNS.iter().enumerate() {
            let (got, want) = (vals[j][r], PROP65_EXPECTED[r][j]);
            out.push(Instance {
                name: format!("i({e},{})", r + 1),
                status: match got {
                    InvariantValue::Finite(k) if k == want => Status::Pass,
                    InvariantValue::AtLeast(k) if k <= want => Status::Inconclusive,
                    _ => Status::Fail,
                },
                detail: format!("computed {got}, expected {want}"),
                artifact: None,
            });
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------ invariants

fn closed_forms(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let mut tasks = Vec::new();
    for (p, d, r) in [(2u32, 2usize, 1usize), (2, 4, 1), (2, 4, 2), (3, 3, 1)] {
        if cfg.p.is_some_and(|q| q != p) {
            continue;
        }
        let q = pow(p as usize, r);
        for (f, want) in [("Sym", 0), ("Wedge", q - 1), ("Div", 2 * (q - 1))] {
            let o = cfg.invariant();
            tasks.push(task(format!("i({f}[{d}],{r}) p={p}"), move || {
                let v = invariant_i(&obj(&format!("{f}[{d}]"), ctx(p, d)?)?, r, &o)?;
                Ok((v == InvariantValue::Finite(want), format!("computed {v}, expected {want}")))
            }));
        }
    }
    Ok(run_checks(cfg, tasks))
}

fn prop_op(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let g = ctx(2, 4)?;
    let mut tasks = Vec::new();
    let show = |c: homology::verify::OpCheck| (c.ok(), format!("{}: {} vs {}", c.rule, c.lhs, c.rhs));
    let mut duals: Vec<(&str, usize)> = PROP65_COLUMNS.iter().map(|e| (*e, 1)).collect();
    duals.extend([("Sym[4]", 2), ("Wedge[4]", 2), ("Div[4]", 2)]);
    for (e, r) in duals {
        let o = cfg.invariant();
        tasks.push(task(format!("p({e},{r}) = i(Dual({e}),{r})"), move || Ok(show(check_duality(&obj(e, g)?, r, &o)?))));
    }
    let deg2 = ["Sym[2]", "Wedge[2]", "Div[2]"];
    for (i, a) in deg2.iter().enumerate() {
        for b in &deg2[i..] {
            let (a, b, o) = (*a, *b, cfg.invariant());
            tasks.push(task(format!("i({a} * {b},1) = min"), move || {
                Ok(show(check_tensor_min(&obj(a, g)?, &obj(b, g)?, 1, &o)?))
            }));
        }
    }
    for (a, b) in [("Wedge[4]", "Div[4]"), ("Sym[4]", "W[3,1]"), ("C[2,2]", "Wedge[4]")] {
        let o = cfg.invariant();
        tasks.push(task(format!("i({a} + {b},1) = min"), move || Ok(show(check_sum_min(&obj(a, g)?, &obj(b, g)?, 1, &o)?))));
    }
    Ok(run_checks(cfg, tasks))
}

// ------------------------------------------------------------------ simples

fn steinberg(cfg: &RunConfig, opts: &SuiteOptions) -> Result<Vec<Instance>> {
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3]) {
        let dmax = opts.dmax.unwrap_or(if p == 2 { 5 } else { 4 });
        for d in 1..=dmax {
            for l in enumerate_partitions(d, d) {
                let n = cfg.n.unwrap_or(d);
                tasks.push(task(format!("L{l} p={p}"), move || {
                    let g = ctx(p, n)?;
                    track(&modkit::simple(g, &l)?.rep);
                    track(&modkit::checks::steinberg_product(g, &l)?);
                    let ok = modkit::checks::steinberg_check(g, &l)?;
                    Ok((ok, format!("n={n}: L{l} vs twisted product of p-adic pieces: {}", if ok { "iso" } else { "not iso" })))
                }));
            }
        }
    }
    Ok(run_checks(cfg, tasks))
}

fn clausen_james(cfg: &RunConfig, opts: &SuiteOptions) -> Result<Vec<Instance>> {
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3]) {
        for d in 1..=opts.dmax.unwrap_or(5) {
            tasks.push(task(format!("d={d} p={p}"), move || {
                let g = ctx(p, d)?;
                track(&polyrep::tensor_power(g, d));
                for l in enumerate_partitions(d, d) {
                    track(&modkit::simple(g, &l)?.rep);
                }
                let rows = modkit::checks::clausen_james_check(g, d)?;
                let bad: Vec<String> = rows.iter().filter(|r| !r.ok()).map(|r| format!("L{}", r.lambda)).collect();
                let detail = format!(
                    "{} simples; restricted: {}; mismatches: {}",
                    rows.len(),
                    rows.iter().filter(|r| r.restricted).count(),
                    if bad.is_empty() { "none".into() } else { bad.join(" ") }
                );
                Ok((bad.is_empty(), detail))
            }));
        }
    }
    Ok(run_checks(cfg, tasks))
}

fn tenspres(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let cases: [(u32, &[usize], &[usize]); 9] = [
        (2, &[1], &[1]),
        (2, &[1], &[1, 1]),
        (2, &[1, 1], &[1, 1]),
        (2, &[1], &[2, 1]),
        (3, &[1], &[1]),
        (3, &[2], &[1]),
        (3, &[1, 1], &[2]),
        (3, &[2], &[2]),
        (3, &[2, 1], &[1]),
    ];
    let mut tasks = Vec::new();
    for (p, a, b) in cases {
        if cfg.p.is_some_and(|q| q != p) {
            continue;
        }
        let (l, m) = (part(a), part(b));
        tasks.push(task(format!("L{l} * L{m} p={p}"), move || {
            let g = ctx(p, l.weight() + m.weight())?;
            let t = polyrep::tensor(&track(&modkit::simple(g, &l)?.rep), &track(&modkit::simple(g, &m)?.rep));
            let e = hom(&track(&t), &t).dim();
            Ok((e >= 2, format!("dim End = {e}")))
        }));
    }
    Ok(run_checks(cfg, tasks))
}

// ------------------------------------------------------------------ cup products

/// The sample `(F, G, X, Y)` at `p = 2`, `n = 4`, `r = 1`.
pub fn cup_sample() -> Vec<[&'static str; 4]> {
    let deg2 = ["Sym[2]", "Wedge[2]", "Div[2]", "Pow[2]", "Tw(Nat,1)"];
    let mut out = Vec::new();
    for f in deg2 {
        for g in deg2 {
            out.push([f, g, "Nat", "Nat"]);
        }
    }
    for x in ["Sym[2]", "Wedge[2]", "Div[2]"] {
        for y in ["Sym[2]", "Wedge[2]", "Div[2]"] {
            out.push(["Sym[0]", "Sym[0]", x, y]);
        }
    }
    for g in ["Sym[2]", "Wedge[2]", "Div[2]", "Tw(Nat,1)"] {
        out.push(["Sym[0]", g, "Nat", "Sym[0]"]);
    }
    for f in ["Sym[2]", "Wedge[2]", "Div[2]", "Tw(Nat,1)"] {
        out.push([f, "Sym[0]", "Sym[0]", "Nat"]);
    }
    out
}

fn cup_deg01(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let g = ctx(2, 4)?;
    let tasks: Vec<Task<CupReport>> = cup_sample()
        .into_iter()
        .map(|q| {
            let o = cfg.resolve();
            task(format!("({}, {}, {}, {})", q[0], q[1], q[2], q[3]), move || {
                let m: Vec<Rep<Single>> = q.iter().map(|e| obj(e, g)).collect::<Result<_>>()?;
                track(&polyrep::tensor(&m[0], &polyrep::twist(&m[2], 1)));
                track(&polyrep::tensor(&m[1], &polyrep::twist(&m[3], 1)));
                Ok(verify_cup_deg01(&m[0], &m[1], &m[2], &m[3], 1, &o)?)
            })
        })
        .collect();
    let mut out = Vec::new();
    let (mut holds, mut violates, mut strict) = (0, 0, Vec::new());
    for (name, r) in run_jobs(cfg, tasks) {
        match r {
            Ok(c) => {
                let condition = c.c1 || c.c2;
                if condition {
                    holds += 1;
                } else {
                    violates += 1;
                    if c.strict() || c.ext1_total > c.ext1_expected() {
                        strict.push(name.clone());
                    }
                }
                let detail = format!(
                    "C1={} C2={}; Hom: {}x{} -> {} (rank {}); Ext1: {} -> {}",
                    c.c1, c.c2, c.hom_fg, c.hom_xy, c.hom_total, c.cup_rank, c.ext1_expected(), c.ext1_total
                );
                out.push(aggregate(&name, if condition { c.ok() } else { c.injective() }, detail));
            }
            Err(e) => out.push(error_instance(name, &e)),
        }
    }
    out.push(aggregate("sample: C1 or C2", holds >= 20, format!("{holds} quadruples (need 20)")));
    out.push(aggregate("sample: neither", violates >= 5, format!("{violates} quadruples (need 5)")));
    out.push(aggregate(
        "strict inequality observed",
        !strict.is_empty(),
        if strict.is_empty() { "none".into() } else { strict.join("; ") },
    ));
    Ok(out)
}

fn connectedness(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let cases = [
        ("Sym[4]", "Sym[4]", "Sym[0]", "Sym[0]", 3),
        ("Wedge[2]", "Wedge[2]", "Nat", "Nat", 2),
        ("Div[2]", "Div[2]", "Nat", "Nat", 2),
    ];
    let g = ctx(2, 4)?;
    let tasks = cases
        .into_iter()
        .map(|(f, h, x, y, kmax)| {
            let o = cfg.invariant();
            task(format!("({f}, {h}, {x}, {y}) k<{kmax}"), move || {
                let c = verify_connectedness(&obj(f, g)?, &obj(h, g)?, &obj(x, g)?, &obj(y, g)?, 1, kmax, &o)?;
                let rows: Vec<String> = c.rows.iter().map(|r| format!("k={}: {} vs {}", r.k, r.total, r.product)).collect();
                Ok((c.ok(), format!("bound {:?}; {}", c.bound, rows.join(", "))))
            })
        })
        .collect();
    Ok(run_checks(cfg, tasks))
}

fn lmses(cfg: &RunConfig) -> Result<Vec<Instance>> {
    if cfg.p.is_some_and(|p| p != 2) {
        return Ok(vec![]);
    }
    let g = ctx(2, 4)?;
    for e in ["Wedge[4]", "Wedge[3] * Wedge[1]", "C[2,1,1]", "C[3,1]", "Sym[3] * Sym[1]", "Sym[4]", "C[2,2]", "Sym[2] * Sym[2]"] {
        obj(e, g)?;
    }
    let reps = verify_lmses(g)?;
    Ok(reps
        .iter()
        .enumerate()
        .map(|(i, r)| aggregate(&format!("sequence {}", i + 1), r.ok(), format!("{r:?}")))
        .collect())
}

fn ptitlm(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let cases: [(usize, &[usize], &[usize]); 3] = [(4, &[2, 2], &[2, 1]), (4, &[1, 1, 1, 1], &[0, 0, 1]), (3, &[2, 1], &[3])];
    let tasks = cases
        .into_iter()
        .map(|(n, l, t)| {
            let (l, t, o) = (part(l), t.to_vec(), cfg.resolve());
            task(format!("S{l} vs W{} at T{t:?}", l.conjugate()), move || {
                let g = ctx(2, n)?;
                track(&modkit::build::twisted_tensor(g, &t));
                track(&modkit::costandard(g, &l)?);
                track(&modkit::weyl(g, &l.conjugate())?);
                let r = verify_shift_ptitlm(g, &l, &t, 3, &o)?;
                Ok((r.ok(), format!("shift {}; rows {:?}; below shift {:?}", r.shift, r.rows, r.below_shift)))
            })
        })
        .collect();
    Ok(run_checks(cfg, tasks))
}

fn twist_deg01(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let g = ctx(2, 4)?;
    let pairs = [("Sym[2]", "Div[2]"), ("Wedge[2]", "Sym[2]"), ("Div[2]", "Sym[2]"), ("Nat", "Nat"), ("Pow[2]", "Sym[2]")];
    let tasks = pairs
        .into_iter()
        .map(|(a, b)| {
            let o = cfg.resolve();
            task(format!("({a}, {b})"), move || {
                let (x, y) = (obj(a, g)?, obj(b, g)?);
                let before = ext_dims(&x, &y, 1, &o)?;
                let after = ext_dims(&track(&polyrep::twist(&x, 1)), &track(&polyrep::twist(&y, 1)), 1, &o)?;
                Ok((before == after, format!("Ext^0,1 {before:?} -> {after:?}")))
            })
        })
        .collect();
    Ok(run_checks(cfg, tasks))
}

// ------------------------------------------------------------------ bifunctors

/// `(p, n, F, G)` with `F` having restricted composition factors.
const SOCLE_PAIRS: [(u32, usize, &str, &str); 7] = [
    (2, 3, "Wedge[2]", "Sym[2]"),
    (2, 3, "Nat", "Sym[2]"),
    (2, 3, "Nat", "Div[2]"),
    (2, 3, "Wedge[2]", "Div[2]"),
    (2, 3, "L[2,1]", "Nat"),
    (2, 3, "Wedge[3]", "Pow[2]"),
    (3, 2, "Sym[2]", "Sym[2]"),
];

fn socle_steinberg(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let tasks = SOCLE_PAIRS
        .into_iter()
        .filter(|c| cfg.p.is_none_or(|q| q == c.0))
        .map(|(p, n, f, h)| {
            task(format!("{f} * Tw({h},1) p={p}"), move || {
                let g = ctx(p, n)?;
                let (a, b) = (obj(f, g)?, obj(h, g)?);
                track(&polyrep::tensor(&a, &polyrep::twist(&b, 1)));
                let r = verify_steinberg_type(&a, &b, 1)?;
                Ok((
                    r.phi_iso && r.hom_ok() && r.socle_ok(),
                    format!(
                        "collapse iso {}; hom samples {}/{}; socle lengths {:?}; layers match {:?}",
                        r.phi_iso,
                        r.hom_samples.iter().filter(|s| s.bi == s.single).count(),
                        r.hom_samples.len(),
                        r.socle_lengths,
                        r.socle_layers_iso
                    ),
                ))
            })
        })
        .collect();
    Ok(run_checks(cfg, tasks))
}

const LATTICE_CASES: [(u32, usize, &str, &str); 7] = [
    (2, 2, "Nat", "Sym[2]"),
    (2, 2, "Nat", "Div[2]"),
    (2, 2, "Wedge[2]", "Sym[2]"),
    (2, 3, "Wedge[3]", "Sym[3]"),
    (3, 2, "Wedge[2]", "Sym[3]"),
    (2, 2, "Nat", "Sym[4]"),
    (2, 2, "Nat", "Div[4]"),
];

fn lattices(cfg: &RunConfig, diagrams: bool) -> Result<Vec<Instance>> {
    let tasks: Vec<Task<(bool, String, Option<String>)>> = LATTICE_CASES
        .into_iter()
        .filter(|c| cfg.p.is_none_or(|q| q == c.0))
        .map(|(p, n, f, h)| {
            task(format!("{f} * Tw({h},1) p={p} n={n}"), move || {
                let g = ctx(p, n)?;
                let (a, b) = (obj(f, g)?, obj(h, g)?);
                let dim = track(&polyrep::tensor(&a, &polyrep::twist(&b, 1))).dim();
                let r = verify_steinberg_type(&a, &b, 1)?;
                if diagrams {
                    let d = r.diagram.as_ref().ok_or_else(|| anyhow!("no diagram: not multiplicity-free or too large"))?;
                    let edges: Vec<String> = d.computed.edges.iter().map(|(x, y)| format!("{x} -> {y}")).collect();
                    let detail = format!("{} vertices; edges: {}", d.computed.vertices.len(), edges.join("; "));
                    Ok((d.matches(), detail, Some(d.dot.clone())))
                } else {
                    let l = r.lattice.as_ref().ok_or_else(|| anyhow!("no lattice: not multiplicity-free or too large"))?;
                    let detail = format!("dim {dim}; {} submodules; predicted {}", l.size, l.predicted);
                    Ok((l.matches && dim <= 12, detail, None))
                }
            })
        })
        .collect();
    Ok(run_jobs(cfg, tasks)
        .into_iter()
        .map(|(name, r)| match r {
            Ok((ok, detail, artifact)) => Instance { artifact, ..aggregate(&name, ok, detail) },
            Err(e) => error_instance(name, &e),
        })
        .collect())
}

fn appendix_a(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let pairs: [(u32, usize, &str, &str); 6] = [
        (2, 2, "Nat", "Sym[2]"),
        (2, 2, "Sym[2]", "Div[2]"),
        (2, 2, "Wedge[2]", "Nat"),
        (2, 2, "Div[2]", "Div[2]"),
        (3, 2, "Sym[2]", "Nat"),
        (3, 2, "Sym[3]", "Nat"),
    ];
    let quads: [(u32, usize, [&str; 4]); 5] = [
        (2, 2, ["Sym[2]", "Nat", "Div[2]", "Nat"]),
        (2, 2, ["Div[2]", "Nat", "Sym[2]", "Nat"]),
        (2, 2, ["Nat", "Sym[2]", "Nat", "Div[2]"]),
        (2, 2, ["Wedge[2]", "Nat", "Wedge[2]", "Nat"]),
        (2, 2, ["Div[2]", "Sym[2]", "Sym[2]", "Div[2]"]),
    ];
    let mut tasks = Vec::new();
    for (p, n, a, b) in pairs {
        if cfg.p.is_some_and(|q| q != p) {
            continue;
        }
        tasks.push(task(format!("{a} ⊠ {b} p={p}"), move || {
            let g = ctx(p, n)?;
            let (x, y) = (obj(a, g)?, obj(b, g)?);
            track_bi(&bifun::boxtimes(&x, &y)?);
            let c = check_product(&x, &y)?;
            Ok((c.ok(), format!("socle {}; head {}; series {}; lattice {:?}", c.socle, c.head, c.series, c.lattice)))
        }));
    }
    for (p, n, q) in quads {
        if cfg.p.is_some_and(|x| x != p) {
            continue;
        }
        tasks.push(task(format!("Ext({} ⊠ {}, {} ⊠ {}) p={p}", q[0], q[1], q[2], q[3]), move || {
            let g = ctx(p, n)?;
            let m: Vec<Rep<Single>> = q.iter().map(|e| obj(e, g)).collect::<Result<_>>()?;
            track_bi(&bifun::boxtimes(&m[0], &m[1])?);
            track_bi(&bifun::boxtimes(&m[2], &m[3])?);
            let c = check_kunneth(&m[0], &m[1], &m[2], &m[3])?;
            Ok((c.ok(), format!("Ext^0,1 {:?}, predicted {:?}", c.bi, c.predicted)))
        }));
    }
    Ok(run_checks(cfg, tasks))
}

// ------------------------------------------------------------------ symmetric groups

fn kn_schur(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let inv = cfg.invariant();
    let g = ctx(2, 4)?;
    let (f, h) = (obj("Sym[4]", g)?, obj("Div[4]", g)?);
    match symbridge::verify_kn(&f, &h, 3, &inv, &cfg.sym()) {
        Ok(rep) => {
            for row in &rep.rows {
                out.push(aggregate(
                    &format!("Ext^{}(Sym[4], Div[4])", row.k),
                    row.ok(),
                    format!("functors {}, symmetric group {}, expect {:?}", row.ext_p, row.ext_sym, row.expect),
                ));
            }
            out.push(aggregate(
                "window covers k < 3",
                rep.bound.is_some_and(|b| b >= 3) && rep.rows.len() >= 3,
                format!("p(F,1) = {}, i(G,1) = {}, bound {:?}", rep.p_f, rep.i_g, rep.bound),
            ));
        }
        Err(e) => out.push(error_instance("Ext(Sym[4], Div[4])".into(), &e.into())),
    }
    let boundary = |name: &str, r: symbridge::Result<symbridge::BoundaryCase>| match r {
        Ok(c) => aggregate(name, c.ok(), format!("{}: degree {}, {} vs {} ({})", c.label, c.k, c.ext_p, c.ext_sym, c.failure)),
        Err(e) => error_instance(name.into(), &e.into()),
    };
    out.push(boundary("Div[2] vs Q[2] p=2", symbridge::gamma_q_case(ctx(2, 2)?, &inv, &cfg.sym())));
    out.push(boundary("Div[3] vs Q[3] p=3", symbridge::gamma_q_case(ctx(3, 3)?, &inv, &cfg.sym())));
    out.push(boundary("T(2,1) vs Wedge[2] p=2", symbridge::big_t_case(&obj("Wedge[2]", ctx(2, 2)?)?, &inv)));
    Ok(out)
}

/// `f_d(F ⊗̲ G) ≅ f_d F ⊗ f_d G`.
fn kronecker_ok(f: &Rep<Single>, g: &Rep<Single>, t: &Rep<Single>) -> Result<bool> {
    use symbridge::{kronecker, schur_functor, sym_iso};
    let lhs = schur_functor(t)?;
    let rhs = kronecker(&schur_functor(f)?, &schur_functor(g)?)?;
    Ok(sym_iso(&lhs, &rhs)?)
}

fn internal(cfg: &RunConfig, f: &Rep<Single>, g: &Rep<Single>) -> Result<Rep<Single>> {
    let t = match cfg.max_degree {
        Some(m) => daytensor::internal_general_with(f, g, m)?,
        None => daytensor::internal_general(f, g)?,
    };
    Ok(track(&t))
}

fn internal_calcul(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let g = ctx(3, 3)?;
    let mut tasks: Vec<Task<(bool, String)>> = Vec::new();
    for (a, b, want) in [("Q[3]", "Wedge[3]", "Wedge[3]"), ("Wedge[3]", "Wedge[3]", "Sym[3]"), ("Div[3]", "Sym[3]", "Sym[3]"), ("Div[3]", "L[2,1]", "L[2,1]")] {
        let c = cfg.clone();
        tasks.push(task(format!("{a} (x) {b} = {want}"), move || {
            let (x, y, w) = (obj(a, g)?, obj(b, g)?, obj(want, g)?);
            let t = internal(&c, &x, &y)?;
            let (i, k) = (iso(&c, &t, &w)?, kronecker_ok(&x, &y, &t)?);
            Ok((i && k, format!("iso {i}; Kronecker {k}")))
        }));
    }
    let c = cfg.clone();
    tasks.push(task("wedge formula: Q[3] (x) Wedge[3]", move || {
        let q = obj("Q[3]", g)?;
        let ok = iso(&c, &track(&daytensor::internal_with_wedge(&q)?), &obj("Wedge[3]", g)?)?;
        Ok((ok, format!("iso {ok}")))
    }));
    let c = cfg.clone();
    tasks.push(task("Q formula: Wedge[3] (x) Q[3]", move || {
        let (w, q) = (obj("Wedge[3]", g)?, obj("Q[3]", g)?);
        let ok = iso(&c, &track(&daytensor::internal_with_q(&w)?), &internal(&c, &w, &q)?)?;
        Ok((ok, format!("iso {ok}")))
    }));
    for mu in [part(&[2, 1]), part(&[1, 1, 1])] {
        let c = cfg.clone();
        tasks.push(task(format!("L{mu} (x) Wedge[3] = L(m{mu}) (x) Q[3]"), move || {
            let m = symbridge::mullineux(g.f, &mu)?;
            let lmu = track(&modkit::simple(g, &mu)?.rep);
            let lmm = track(&modkit::simple(g, &m)?.rep);
            let (w, q) = (obj("Wedge[3]", g)?, obj("Q[3]", g)?);
            let (a, b) = (internal(&c, &lmu, &w)?, internal(&c, &lmm, &q)?);
            let i = iso(&c, &a, &b)?;
            let k = kronecker_ok(&lmu, &w, &a)? && kronecker_ok(&lmm, &q, &b)?;
            Ok((i && k, format!("Mullineux image L{m}; iso {i}; Kronecker {k}")))
        }));
    }
    Ok(run_checks(cfg, tasks))
}

fn stein_internal(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let cases: [(u32, &[usize], &[usize]); 6] =
        [(2, &[1, 1], &[2]), (2, &[2], &[2]), (2, &[1, 1], &[1, 1]), (2, &[2, 1], &[3]), (3, &[2, 1], &[2, 1]), (3, &[3], &[2, 1])];
    let tasks = cases
        .into_iter()
        .filter(|c| cfg.p.is_none_or(|q| q == c.0))
        .map(|(p, a, b)| {
            let (l, m, c) = (part(a), part(b), cfg.clone());
            task(format!("L{l} (x) L{m} p={p}"), move || {
                let g = ctx(p, l.weight())?;
                let r = daytensor::verify_stein_internal(g, &l, &m)?;
                let (x, y) = (track(&modkit::simple(g, &l)?.rep), track(&modkit::simple(g, &m)?.rep));
                let t = internal(&c, &x, &y)?;
                let k = kronecker_ok(&x, &y, &t)?;
                let levels: Vec<String> = r.levels.iter().map(|(a, b)| format!("({a},{b})")).collect();
                Ok((
                    r.ok() && k && t.dim() == r.dim,
                    format!("levels {}; matching {}; dim {}; iso {}; Kronecker {k}", levels.join(" "), r.matching, r.dim, r.iso),
                ))
            })
        })
        .collect();
    Ok(run_checks(cfg, tasks))
}

fn kronecker_schur(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let mods = ["Sym[3]", "Wedge[3]", "Div[3]", "L[2,1]", "Q[3]"];
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3]) {
        for a in mods {
            for b in mods {
                let c = cfg.clone();
                tasks.push(task(format!("{a} (x) {b} p={p}"), move || {
                    let g = ctx(p, 3)?;
                    let (x, y) = (obj(a, g)?, obj(b, g)?);
                    let t = internal(&c, &x, &y)?;
                    let k = kronecker_ok(&x, &y, &t)?;
                    Ok((k, format!("dim {}; Kronecker {k}", t.dim())))
                }));
            }
        }
    }
    Ok(run_checks(cfg, tasks))
}

// ------------------------------------------------------------------ properties

fn coords(m: &Arc<HomMap<Single>>) -> Vec<u8> {
    map_coordinates(&**m)
}

/// Comodule laws, Jordan–Hölder agreement, resolution exactness, duality
/// involution and twist functoriality for one object.
pub fn object_properties(cfg: &RunConfig, m: &Rep<Single>) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let chk = check_comodule(m, CheckMode::Generators);
    if !chk.ok() {
        bad.push(format!("comodule laws: {:?}", chk.failures));
    }
    let (a, b, c) = (composition_factors(m)?, composition_factors_by_character(m)?, composition_factors_radical(m)?);
    if a != b || a != c {
        bad.push(format!("factors disagree: socle {a:?}, character {b:?}, radical {c:?}"));
    }
    if !resolve(m, 2, cfg.resolve())?.is_exact() {
        bad.push("resolution not exact".into());
    }
    if !iso(cfg, &dual(&dual(m)), m)? {
        bad.push("double dual not isomorphic".into());
    }
    let ends = hom(m, m);
    let id = HomMap::identity(m);
    if coords(&twist_map(&id, 1)) != coords(&HomMap::identity(&polyrep::twist(m, 1))) {
        bad.push("twist does not preserve the identity".into());
    }
    let k = ends.dim().min(3);
    for i in 0..k {
        for j in 0..k {
            let (f, g) = (ends.map(i), ends.map(j));
            if coords(&twist_map(&f.then(&g), 1)) != coords(&twist_map(&f, 1).then(&twist_map(&g, 1))) {
                bad.push(format!("twist not functorial on endomorphisms {i},{j}"));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("dim {}; {} factors; End dim {}", m.dim(), a.values().sum::<usize>(), ends.dim())
    } else {
        bad.join("; ")
    };
    Ok((bad.is_empty(), detail))
}

fn bi_properties(cfg: &RunConfig, m: &BiRep) -> Result<(bool, String)> {
    let chk = check_comodule(m, CheckMode::Generators);
    let dd = iso_test_with(&dual(&dual(m)), m, cfg.iso()).is_iso();
    let (a, b) = (composition_factors(m)?, composition_factors_by_character(m)?);
    let ok = chk.ok() && dd && a == b;
    Ok((ok, format!("comodule laws {}; double dual {dd}; factors agree {}", chk.ok(), a == b)))
}

fn properties(cfg: &RunConfig) -> Result<Vec<Instance>> {
    let objs: Vec<(String, Rep<Single>)> = TRACKED.lock().unwrap().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let bis: Vec<(String, Rep<Bi>)> = TRACKED_BI.lock().unwrap().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    let mut tasks: Vec<Task<(bool, String)>> = Vec::new();
    for (k, m) in objs {
        let c = cfg.clone();
        let name = k.split(" [").next().unwrap_or(&k).to_string();
        tasks.push(task(name, move || object_properties(&c, &m)));
    }
    for (k, m) in bis {
        let c = cfg.clone();
        let name = k.split(" [").next().unwrap_or(&k).to_string();
        tasks.push(task(name, move || bi_properties(&c, &m)));
    }
    Ok(run_checks(cfg, tasks))
}

/// Run every suite except `properties`, then `properties` over everything built.
pub fn run_all(cfg: &RunConfig, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, cfg, opts).with_context(|| format!("suite {s}"))).collect()
}
