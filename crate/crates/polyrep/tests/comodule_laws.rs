use exactfield::{ExactMatrix, FieldSpec};
use polyrep::check::{check_comodule, check_intertwiner, CheckMode};
use polyrep::grading::Grading;
use polyrep::*;
use std::sync::Arc;

fn ctx(p: u32, n: usize) -> Single {
    Single::new(FieldSpec::new(p).unwrap(), n)
}

fn assert_laws(m: &Rep<Single>, mode: CheckMode) {
    let r = check_comodule(m, mode);
    assert!(r.ok(), "{}: {:?}", m.label(), r.failures);
}

fn same_blocks(a: &Rep<Single>, b: &Rep<Single>) -> bool {
    let g = a.grading();
    let ws = g.all_weights(a.degree());
    if ws.iter().any(|w| a.wdim(w) != b.wdim(w)) {
        return false;
    }
    ws.iter().all(|x| ws.iter().all(|y| g.tables(x, y).iter().all(|k| *a.block(k) == *b.block(k))))
}

#[test]
fn basic_functors_satisfy_all_pair_laws() {
    // The ⊗^d blocks are computed by counting word pairings, independently
    // of the product structure constants; the all-pairs check therefore
    // validates the product formula itself.
    for (p, n, d) in [(2, 2, 3), (2, 3, 3), (3, 2, 3), (3, 3, 2), (2, 2, 4)] {
        let g = ctx(p, n);
        for m in [sym(g, d), div(g, d), wedge(g, d.min(n)), tensor_power(g, d), q_trunc(g, d)] {
            assert_laws(&m, CheckMode::Full);
        }
    }
}

#[test]
fn constructions_satisfy_laws() {
    let g = ctx(2, 3);
    let a = tensor(&wedge(g, 2), &nat(g));
    assert_laws(&a, CheckMode::Generators);
    assert_laws(&twist(&sym(g, 2), 1), CheckMode::Full);
    assert_laws(&dual(&tensor_power(g, 3)), CheckMode::Generators);
    assert_laws(&direct_sum(vec![sym(g, 3), div(g, 3)]), CheckMode::Generators);
    let f = g.f;
    assert_laws(&coinvariants_sd(g, &SymRep::regular(f, 3)).unwrap(), CheckMode::Generators);
    assert_laws(&invariants_sd(g, &SymRep::trivial(f, 3)).unwrap(), CheckMode::Generators);
    let g3 = ctx(3, 3);
    assert_laws(&coinvariants_sd(g3, &SymRep::sign(g3.f, 3)).unwrap(), CheckMode::Full);
    assert_laws(&projective(&g, 3, &Weight::new(&[2, 1, 0])), CheckMode::Generators);
}

#[test]
fn generator_mode_detects_a_broken_module() {
    // Flip one off-diagonal block sign of Λ² at p = 3: counit holds,
    // multiplicativity must fail.
    let g = ctx(3, 2);
    let w = wedge(g, 2);
    let mut src = ExplicitSource { f: g.f, g, wdims: Default::default(), blocks: Default::default() };
    for x in g.all_weights(2) {
        src.wdims.insert(x.clone(), w.wdim(&x));
    }
    for (k, b) in w.nonzero_blocks() {
        src.blocks.insert(k, (*b).clone());
    }
    let bad = Key::from_matrix(2, &[0, 1, 1, 0]);
    src.blocks.insert(bad, ExactMatrix::identity(g.f, 1));
    let m = Comod::new(g, 2, "broken", Arc::new(src));
    assert!(!check_comodule(&m, CheckMode::Generators).ok());
}

#[test]
fn dimension_formulas() {
    let g = ctx(2, 4);
    for d in 0..=4usize {
        let binom = |a: usize, b: usize| -> usize { (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1)) };
        assert_eq!(sym(g, d).dim(), binom(4 + d - 1, d));
        assert_eq!(div(g, d).dim(), binom(4 + d - 1, d));
        assert_eq!(wedge(g, d).dim(), binom(4, d));
        assert_eq!(tensor_power(g, d).dim(), 4usize.pow(d as u32));
        let m = tensor_power(g, d);
        let total: usize = g.all_weights(d).iter().map(|w| m.wdim(w)).sum();
        assert_eq!(total, m.dim());
    }
}

#[test]
fn dual_is_an_involution_and_twists_compose() {
    let g = ctx(2, 2);
    let m = tensor(&sym(g, 2), &wedge(g, 2));
    assert!(same_blocks(&dual(&dual(&m)), &m));
    let n = nat(g);
    assert!(same_blocks(&twist(&twist(&n, 1), 1), &twist(&n, 2)));
    assert!(same_blocks(&twist(&n, 0), &n));
    // twist commutes with tensor and dual, as coefficient tensors
    let (a, b) = (sym(g, 1), wedge(g, 2));
    assert!(same_blocks(&twist(&tensor(&a, &b), 1), &tensor(&twist(&a, 1), &twist(&b, 1))));
    assert!(same_blocks(&dual(&twist(&m, 1)), &twist(&dual(&m), 1)));
}

#[test]
fn divided_power_inclusion_is_an_intertwiner() {
    for (p, n, d) in [(2, 3, 3), (3, 2, 4), (5, 3, 3)] {
        let g = ctx(p, n);
        let (gam, t) = (div(g, d), tensor_power(g, d));
        let phi = |w: &Weight| ExactMatrix::from_columns(g.f, t.wdim(w), &[basic::div_inclusion(w)]);
        check_intertwiner(&gam, &t, &phi).unwrap();
        // the all-ones map out of S^d is not a map out of the divided power
        // when p ≤ d (S^d and Γ^d have different actions there)
        if (p as usize) <= d {
            assert!(check_intertwiner(&sym(g, d), &t, &phi).is_err());
        }
    }
}

#[test]
fn gamma_projective_matches_tensor_of_divided_powers() {
    // S·ξ_λ has the same character as Γ^{λ_1} ⊗ Γ^{λ_2} and its block at the
    // key diag gives the identity; its product-formula blocks satisfy the laws.
    let g = ctx(3, 3);
    for lam in [[3, 0, 0], [2, 1, 0], [1, 1, 1]] {
        let lw = Weight::new(&lam);
        let p = projective(&g, 3, &lw);
        let gam = tensor_many(g, lam.iter().map(|&a| div(g, a)).collect());
        for w in g.all_weights(3) {
            assert_eq!(p.wdim(&w), gam.wdim(&w));
        }
        assert_laws(&p, CheckMode::Full);
    }
}

#[test]
fn serialization_round_trips_constructed_modules() {
    let g = ctx(3, 2);
    for m in [tensor(&sym(g, 2), &wedge(g, 2)), twist(&nat(g), 1), coinvariants_sd(g, &SymRep::trivial(g.f, 2)).unwrap()] {
        let s = serial::serialize(&m);
        let back = serial::deserialize(&s, Some(g)).unwrap();
        assert_eq!(serial::serialize(&back), s);
        assert_laws(&back, CheckMode::Generators);
    }
}
