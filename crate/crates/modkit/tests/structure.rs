use exactfield::FieldSpec;
use modkit::checks::{clausen_james_check, steinberg_check, tenspres_check};
use modkit::iso::{iso_test, IsoResult};
use modkit::structure::{composition_factors_by_character, composition_factors_radical, socle_layers};
use modkit::*;
use partitions::Partition;
use polyrep::{div, dual, sym, tensor_power, twist, wedge, nat, Single, check::{check_comodule, CheckMode}};

fn ctx(p: u32, n: usize) -> Single {
    Single::new(FieldSpec::new(p).unwrap(), n)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn factorial(d: usize) -> usize {
    (1..=d).product()
}

#[test]
fn end_of_tensor_power_is_group_algebra() {
    // End(⊗^d) ≅ k S_d when n ≥ d
    for p in [2, 3] {
        for d in 1..=3 {
            let g = ctx(p, d);
            let t = tensor_power(g, d);
            assert_eq!(hom(&t, &t).dim(), factorial(d), "p={p} d={d}");
        }
    }
}

#[test]
fn hom_between_basic_functors() {
    let g = ctx(2, 2);
    // Hom(Γ^d, F) ≅ F(k) is one-dimensional; S² → Γ² only through Λ²
    let (gam, s) = (div(g, 2), sym(g, 2));
    assert_eq!(hom(&gam, &s).dim(), 1);
    assert_eq!(hom(&s, &gam).dim(), 1);
    assert_eq!(hom(&wedge(g, 2), &s).dim(), 0);
    assert_eq!(hom(&wedge(g, 2), &gam).dim(), 1);
    let g3 = ctx(3, 2);
    assert_eq!(hom(&div(g3, 2), &sym(g3, 2)).dim(), 1);
}

#[test]
fn simple_dimensions() {
    // W(2,1) at n=3 has dim 8; at p=3 it has L(1,1,1) (dim 1) below its top
    let g = ctx(2, 3);
    assert_eq!(simple(g, &part(&[2, 1])).unwrap().rep.dim(), 8);
    assert_eq!(simple(g, &part(&[2])).unwrap().rep.dim(), 3);
    assert_eq!(simple(g, &part(&[1, 1])).unwrap().rep.dim(), 3);
    assert_eq!(simple(g, &part(&[3])).unwrap().rep.dim(), 9); // N ⊗ N^(1)
    let g = ctx(3, 3);
    assert_eq!(simple(g, &part(&[2, 1])).unwrap().rep.dim(), 7);
    assert_eq!(simple(g, &part(&[3])).unwrap().rep.dim(), 3);
    assert_eq!(simple(g, &part(&[2])).unwrap().rep.dim(), 6);
}

#[test]
fn simples_pass_comodule_checks() {
    for (p, n, d) in [(2, 3, 3), (3, 3, 3), (2, 4, 4)] {
        let g = ctx(p, n);
        let ss = simples_of_degree(g, d).unwrap();
        assert_eq!(ss.len(), partitions::enumerate_partitions(d, n).len());
        for s in &ss {
            assert!(check_comodule(&s.rep, CheckMode::Generators).ok(), "{}", s.lambda);
            assert_eq!(hom(&s.rep, &s.rep).dim(), 1);
        }
        // pairwise non-isomorphic
        for (i, a) in ss.iter().enumerate() {
            for b in &ss[i + 1..] {
                assert_eq!(hom(&a.rep, &b.rep).dim(), 0);
            }
        }
    }
}

#[test]
fn socle_series_of_divided_square() {
    let g = ctx(2, 2);
    let gam = div(g, 2);
    let ser = socle_series(&gam).unwrap();
    assert_eq!(ser.len(), 2);
    let s1 = ser[0].as_rep("soc");
    assert_eq!(iso_test(&s1, &wedge(g, 2)), IsoResult::Iso);
    assert!(ser[1].is_whole());
    let f = composition_factors(&sym(g, 2)).unwrap();
    assert_eq!(f.len(), 2);
    assert_eq!(f.get("L[2]"), Some(&1));
    assert_eq!(f.get("L[1,1]"), Some(&1));
}

#[test]
fn iso_examples() {
    let g = ctx(2, 4);
    let m = sym(g, 2);
    assert_eq!(iso_test(&m, &m), IsoResult::Iso);
    assert_eq!(iso_test(&m, &div(g, 2)), IsoResult::NotIso);
    let l31 = simple(g, &part(&[3, 1])).unwrap();
    let other = polyrep::tensor(&wedge(g, 2), &twist(&nat(g), 1));
    assert_eq!(iso_test(&l31.rep, &other), IsoResult::Iso);
}

#[test]
fn jordan_holder_three_ways() {
    for (p, n, d) in [(2, 3, 3), (3, 3, 3), (2, 4, 4)] {
        let g = ctx(p, n);
        for m in [sym(g, d), div(g, d), tensor_power(g, d.min(3))] {
            let a = composition_factors(&m).unwrap();
            let b = composition_factors_radical(&m).unwrap();
            let c = composition_factors_by_character(&m).unwrap();
            assert_eq!(a, b, "{}", m.label());
            assert_eq!(a, c, "{}", m.label());
            let total: usize = socle_layers(&m).unwrap().iter().map(|l| l.dim()).sum();
            assert_eq!(total, m.dim());
        }
    }
}

#[test]
fn duality_swaps_socle_and_head() {
    let g = ctx(2, 3);
    for m in [sym(g, 3), div(g, 3), tensor_power(g, 2)] {
        let h = head(&dual(&m)).unwrap();
        let s = dual(&socle(&m).unwrap().as_rep("soc"));
        assert_eq!(iso_test(&h, &s), IsoResult::Iso, "{}", m.label());
    }
}

#[test]
fn simplicity_criteria_agree() {
    for (p, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let g = ctx(p, d);
        for m in [sym(g, d), div(g, d), wedge(g, d), tensor_power(g, d)] {
            let a = is_simple(&m).unwrap();
            let b = iso_test(&m, &dual(&m)).is_iso() && hom(&m, &m).dim() == 1;
            let c = socle(&m).unwrap().is_whole();
            assert_eq!(a, b, "{}", m.label());
            assert!(!a || c, "{}", m.label());
        }
    }
}

#[test]
fn steinberg_and_clausen_james_small() {
    let g = ctx(2, 3);
    for d in 1..=3 {
        for l in partitions::enumerate_partitions(d, 3) {
            assert!(steinberg_check(g, &l).unwrap(), "{l}");
        }
    }
    let rows = clausen_james_check(g, 3).unwrap();
    for r in &rows {
        assert!(r.ok(), "{}", r.lambda);
        assert_eq!(r.hom_nonzero, r.lambda != part(&[3]));
    }
    let g = ctx(2, 4);
    assert!(tenspres_check(g, &part(&[1, 1]), &part(&[1, 1])).unwrap() >= 2);
}

#[test]
fn build_expressions() {
    use polyrep::FunctorExpr as E;
    let g = ctx(2, 2);
    let t = build(&E::BigT(2, 1), g).unwrap();
    // only the tuple (0,1) has Σ_{i<1} p^i d_i < 2, so T(2,1) = I^(1)
    assert_eq!(t.dim(), 2);
    let l = build(&E::BigL(2, 1), g).unwrap();
    assert_eq!(l.dim(), 2);
    let e = E::Sum(Box::new(E::Sym(2)), Box::new(E::Wedge(1)));
    assert!(build(&e, g).is_err());
}
