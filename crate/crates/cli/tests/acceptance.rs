//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//! Exits non-zero if any criterion fails.

use cli::suites::{self, run_suite, tracked_counts, Status, SuiteOptions, SuiteReport};
use cli::RunConfig;
use std::time::Instant;

struct Verdict {
    ok: bool,
    summary: String,
    problems: Vec<String>,
}

fn suite(name: &str, cfg: &RunConfig) -> SuiteReport {
    match run_suite(name, cfg, &SuiteOptions::default()) {
        Ok(r) => r,
        Err(e) => SuiteReport::new(
            name,
            vec![suites::Instance { name: "suite".into(), status: Status::Fail, detail: format!("error: {e:#}"), artifact: None }],
        ),
    }
}

/// All named suites pass, each with at least the given number of passing instances.
fn all_pass(cfg: &RunConfig, wanted: &[(&str, usize)]) -> Verdict {
    let mut ok = true;
    let mut summary = Vec::new();
    let mut problems = Vec::new();
    for &(name, min) in wanted {
        let r = suite(name, cfg);
        let passed = r.count(Status::Pass);
        ok &= r.status == Status::Pass && passed >= min;
        summary.push(format!("{name} {passed}/{}", r.instances.len()));
        if passed < min {
            problems.push(format!("{name}: {passed} passing instances, need {min}"));
        }
        for i in r.not_passing() {
            problems.push(format!("{name}: {} {}: {}", i.status.word(), i.name, i.detail));
        }
    }
    Verdict { ok, summary: summary.join(", "), problems }
}

fn has_pass(r: &SuiteReport, name: &str) -> bool {
    r.instances.iter().any(|i| i.name == name && i.status == Status::Pass)
}

fn criterion_7(cfg: &RunConfig) -> Verdict {
    let mut v = all_pass(cfg, &[("internal-calcul", 8), ("stein-internal", 6), ("kronecker-schur", 50)]);
    let calc = suite("internal-calcul", cfg);
    let stein = suite("stein-internal", cfg);
    for (r, name) in [
        (&calc, "Q[3] (x) Wedge[3] = Wedge[3]"),
        (&calc, "Wedge[3] (x) Wedge[3] = Sym[3]"),
        (&stein, "L(1,1) (x) L(2) p=2"),
    ] {
        if !has_pass(r, name) {
            v.ok = false;
            v.problems.push(format!("required instance '{name}' did not pass"));
        }
    }
    v
}

fn criterion_12(cfg: &RunConfig) -> Verdict {
    let (single, bi) = tracked_counts();
    let mut v = all_pass(cfg, &[("properties", 1)]);
    v.summary = format!("{} ({single} functors, {bi} bifunctors)", v.summary);
    v.ok &= single + bi > 0;
    v
}

fn main() {
    let cfg = RunConfig { cache_dir: None, ..RunConfig::default() };
    type Check = Box<dyn Fn(&RunConfig) -> Verdict>;
    let criteria: Vec<(&str, Check)> = vec![
        ("table reproduction i(F,1), i(F,2)", Box::new(|c| all_pass(c, &[("prop65-table", 18)]))),
        ("closed forms for Sym, Wedge, Div", Box::new(|c| all_pass(c, &[("prop61-closed-forms", 12)]))),
        ("duality and min rules", Box::new(|c| all_pass(c, &[("prop-op", 10)]))),
        ("Steinberg tensor product", Box::new(|c| all_pass(c, &[("steinberg", 29)]))),
        ("Clausen-James", Box::new(|c| all_pass(c, &[("clausen-james", 10)]))),
        ("cup products in degrees 0 and 1", Box::new(|c| all_pass(c, &[("cup-deg01", 28)]))),
        ("internal tensor products", Box::new(criterion_7)),
        ("Steinberg-type socles and lattices", Box::new(|c| all_pass(c, &[("socle-steinberg", 5), ("subfunctor-lattice", 3)]))),
        ("Schur functor connectedness", Box::new(|c| all_pass(c, &[("kn-schur", 8)]))),
        ("exterior products and Kunneth", Box::new(|c| all_pass(c, &[("appA", 10)]))),
        ("short exact sequences and shift", Box::new(|c| all_pass(c, &[("lmses", 3), ("ptitlm", 3)]))),
        ("property suites on every object", Box::new(criterion_12)),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check(&cfg);
        let word = if v.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {word} {title}: {} [{:.1}s]", i + 1, v.summary, start.elapsed().as_secs_f64());
        for p in &v.problems {
            println!("    {p}");
        }
        failed += usize::from(!v.ok);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
