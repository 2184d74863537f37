use cli::{parse, parse_with_degree, run};
use partitions::Partition;
use polyrep::FunctorExpr;
use proptest::prelude::*;
use serde_json::Value;
use std::process::Command;

fn ok(args: &[&str]) -> String {
    let mut v = vec!["polyfun"];
    v.extend_from_slice(args);
    let out = run(v);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    let mut v = vec!["polyfun"];
    v.extend_from_slice(args);
    run(v).code
}

#[test]
fn parser_examples() {
    let (e, d) = parse_with_degree("Tw(Wedge[2],1) * Nat", 2).unwrap();
    assert_eq!(d, 5);
    assert_eq!(e, FunctorExpr::tensor(FunctorExpr::twist(FunctorExpr::Wedge(2), 1), FunctorExpr::Nat));
    assert_eq!(parse("L[2,1]").unwrap(), FunctorExpr::Simple(Partition::new(vec![2, 1]).unwrap()));
    assert_eq!(parse("Sym[").unwrap_err().column, 5);
    // at p = 3 the twist triples the degree
    assert_eq!(parse_with_degree("Tw(Wedge[2],1) * Nat", 3).unwrap().1, 7);
    // '*' binds tighter than '+', both associate to the left
    let e = parse("Nat * Nat + Sym[2] + Div[2]").unwrap();
    let want = FunctorExpr::sum(
        FunctorExpr::sum(FunctorExpr::tensor(FunctorExpr::Nat, FunctorExpr::Nat), FunctorExpr::Sym(2)),
        FunctorExpr::Div(2),
    );
    assert_eq!(e, want);
    assert!(parse_with_degree("Nat + Sym[2]", 2).is_err());
}

fn leaf() -> impl Strategy<Value = FunctorExpr> {
    let part = prop::collection::vec(1usize..4, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    });
    prop_oneof![
        (0usize..6).prop_map(FunctorExpr::Sym),
        (0usize..6).prop_map(FunctorExpr::Wedge),
        (0usize..6).prop_map(FunctorExpr::Div),
        (0usize..6).prop_map(FunctorExpr::TensorPower),
        (0usize..6).prop_map(FunctorExpr::Q),
        Just(FunctorExpr::Nat),
        part.clone().prop_map(FunctorExpr::Simple),
        part.clone().prop_map(FunctorExpr::Weyl),
        part.prop_map(FunctorExpr::SchurMod),
        (0usize..6, 0usize..3).prop_map(|(d, r)| FunctorExpr::BigT(d, r)),
        (0usize..6, 0usize..3).prop_map(|(d, r)| FunctorExpr::BigL(d, r)),
    ]
}

fn expr() -> impl Strategy<Value = FunctorExpr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FunctorExpr::tensor(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FunctorExpr::sum(a, b)),
            inner.clone().prop_map(FunctorExpr::dual),
            (inner, 0usize..3).prop_map(|(a, r)| FunctorExpr::twist(a, r)),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e.clone());
        prop_assert_eq!(parse(&text).unwrap().to_string(), text);
    }

    #[test]
    fn errors_point_inside_the_input(s in "[A-Za-z\\[\\]\\(\\),*+0-9 ]{0,16}") {
        if let Err(e) = parse(&s) {
            prop_assert!(e.column >= 1 && e.column <= s.chars().count() + 1);
        }
    }
}

#[test]
fn invariant_verb() {
    let out = ok(&["invariant", "--kind", "i", "--expr", "Wedge[4]", "--p", "2", "--r", "1"]);
    assert_eq!(out.trim(), r#"{"value":1}"#);
    let out = ok(&["invariant", "--kind", "p", "--expr", "Sym[4]", "--r", "1"]);
    assert_eq!(out.trim(), r#"{"value":2}"#);
    // degree below p^r: the invariant is infinite
    let out = ok(&["invariant", "--kind", "i", "--expr", "Sym[3]", "--r", "2"]);
    assert_eq!(out.trim(), r#"{"value":"inf"}"#);
    // a cap below the answer is inconclusive
    let mut v = vec!["polyfun", "invariant", "--kind", "i", "--expr", "Div[4]", "--cap", "1"];
    let o = run(v.drain(..));
    assert_eq!((o.code, o.stdout.trim()), (2, r#"{"value":{"at_least":2}}"#));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(code(&["invariant", "--kind", "i", "--expr", "Sym["]), 3);
    assert_eq!(code(&["frobnicate"]), 3);
    assert_eq!(code(&["verify", "no-such-suite"]), 3);
    assert_eq!(code(&["table", "--suite", "prop65", "--p", "3"]), 3);
    assert_eq!(code(&["simple", "--partition", "1,2"]), 3);
    let out = run(["polyfun", "build", "--expr", "Sym[2] Nat"]);
    assert!(out.stderr.contains("column 8"), "{}", out.stderr);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn small_verbs() {
    assert_eq!(ok(&["hom", "--from", "Sym[2]", "--to", "Div[2]"]).trim(), "1");
    // the verb is plumbing over the library call
    let g = polyrep::Single::new(exactfield::FieldSpec::new(2).unwrap(), 2);
    let want = homology::ext_dims(&polyrep::sym(g, 2), &polyrep::div(g, 2), 2, &Default::default()).unwrap();
    let text: String = want.iter().enumerate().map(|(k, d)| format!("Ext^{k} = {d}\n")).collect();
    assert_eq!(ok(&["ext", "--from", "Sym[2]", "--to", "Div[2]", "--kmax", "2"]), text);
    let f: Value = serde_json::from_str(&ok(&["factors", "--expr", "Sym[2]", "--json"])).unwrap();
    assert_eq!(f["factors"]["L[2]"], 1);
    assert_eq!(f["factors"]["L[1,1]"], 1);
    // S² at p = 2: socle I^(1) = L[2], head Λ² = L[1,1]
    assert_eq!(ok(&["socle-series", "--expr", "Sym[2]"]), "1: L[2]\n2: L[1,1]\n");
    assert_eq!(ok(&["mullineux", "--partition", "2,1", "--p", "3"]).trim(), "1,1,1");
    // L(2,1) at n = 3 is the adjoint module of GL_3, simple away from characteristic 3: dim 8
    let s: Value = serde_json::from_str(&ok(&["simple", "--partition", "2,1", "--json"])).unwrap();
    assert_eq!(s["dim"], 8);
    // f_2 Λ² is the sign representation: dimension 1
    assert!(ok(&["schur", "--expr", "Wedge[2]", "--p", "3"]).contains("dim=1"));
}

#[test]
fn build_and_intern_serialise() {
    let text = ok(&["build", "--expr", "Sym[2]"]);
    assert!(text.starts_with("POLYREP v1 p=2 n=2 d=2 dim=3\n"), "{text}");
    let m = polyrep::serial::deserialize(&text, None).unwrap();
    assert_eq!(m.dim(), 3);
    let j: Value = serde_json::from_str(&ok(&["build", "--expr", "Sym[2]", "--json"])).unwrap();
    assert_eq!(j["dim"], 3);
    assert_eq!(j["entries"].as_array().unwrap().len(), text.lines().count() - 1);
    // Γ³ is the unit for the internal tensor product
    let a = ok(&["intern", "--left", "Div[3]", "--right", "Wedge[3]", "--p", "3"]);
    let b = ok(&["build", "--expr", "Wedge[3]", "--p", "3"]);
    assert_eq!(
        polyrep::serial::deserialize(&a, None).unwrap().character(),
        polyrep::serial::deserialize(&b, None).unwrap().character()
    );
}

#[test]
fn table_is_deterministic_and_cached_runs_agree() {
    // separate processes, so that nothing is shared through the in-memory memo
    let bin = env!("CARGO_BIN_EXE_polyfun");
    let dir = tempfile::tempdir().unwrap();
    let table = |cache: Option<&std::path::Path>| {
        let mut c = Command::new(bin);
        c.args(["table", "--suite", "prop65"]);
        match cache {
            Some(d) => c.env("POLYREP_CACHE", d),
            None => c.env_remove("POLYREP_CACHE"),
        };
        let out = c.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        String::from_utf8(out.stdout).unwrap()
    };
    let cold = table(Some(dir.path()));
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0, "resolutions were cached");
    let warm = table(Some(dir.path()));
    assert_eq!(cold, warm);
    assert_eq!(cold, table(None));
    let lines: Vec<&str> = cold.lines().collect();
    assert_eq!(lines[0], r#"r,Div[4],"W[3,1]","W[2,2]","W[2,1,1]",Wedge[4],"C[2,1,1]","C[2,2]","C[3,1]",Sym[4]"#);
    assert_eq!(lines[1], "1,2,2,2,1,1,1,0,0,0");
    assert_eq!(lines.len(), 3);
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = run(["polyfun", "verify", "steinberg", "--p", "2", "--dmax", "5", "--json", "--cache-dir", d]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let j: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(j["status"], "pass");
    assert_eq!(j["instances"].as_array().unwrap().len(), 18);
    let saved = std::fs::read_to_string(dir.path().join("reports/steinberg-p2.json")).unwrap();
    assert_eq!(saved, out.stdout);
    let csv = ok(&["verify", "lmses", "--csv"]);
    assert!(csv.starts_with("suite,instance,status,detail\n"));
    assert_eq!(csv.lines().count(), 4);
    // a suite with an instance off by one fails with exit code 1
    assert_eq!(code(&["verify", "prop65-table"]), 1);
    assert_eq!(code(&["verify", "prop65-table", "--time-budget", "0"]), 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polyfun");
    let out = Command::new(bin).args(["invariant", "--kind", "i", "--expr", "Wedge[4]"]).env("POLYREP_CACHE", "").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"value":1}"#);
    let out = Command::new(bin).args(["build", "--expr", "Sym["]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 5"));
}
