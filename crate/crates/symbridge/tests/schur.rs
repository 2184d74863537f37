use exactfield::{Echelon, FieldSpec};
use homology::verify::{sym_mult, wedge_comult};
use homology::{InvariantOptions, InvariantValue};
use partitions::{enumerate_partitions, is_pr_restricted, Partition};
use polyrep::{coinvariants_sd, div, invariants_sd, q_trunc, sym, tensor_power, wedge, Single, SymRep};
use symbridge::group::{all_actions, orbit_span};
use symbridge::*;

fn ctx(p: u32, n: usize) -> Single {
    Single::new(FieldSpec::new(p).unwrap(), n)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Brute force: simple iff every nonzero vector generates the whole module.
fn simple_by_orbits(u: &SymRep) -> bool {
    let (p, n) = (u.field().p() as u64, u.dim());
    assert!(p.pow(n as u32) <= 1 << 14, "too large for brute force");
    if n == 0 {
        return false;
    }
    let mut v = vec![0u8; n];
    for _ in 1..p.pow(n as u32) {
        for x in v.iter_mut() {
            *x += 1;
            if (*x as u64) < p {
                break;
            }
            *x = 0;
        }
        if orbit_span(u, &[v.clone()]).rank() < n {
            return false;
        }
    }
    true
}

#[test]
fn schur_functor_examples() {
    for p in [2, 3] {
        let g = ctx(p, 3);
        let f = g.f;
        let t = schur_functor(&tensor_power(g, 3)).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(sym_iso(&t, &SymRep::regular(f, 3)).unwrap());
        assert_eq!(schur_functor(&sym(g, 3)).unwrap(), SymRep::trivial(f, 3));
        assert_eq!(schur_functor(&wedge(g, 3)).unwrap(), SymRep::sign(f, 3));
    }
    // a larger context changes nothing
    let f4 = schur_functor(&tensor_power(ctx(2, 4), 3)).unwrap();
    assert!(sym_iso(&f4, &SymRep::regular(FieldSpec::new(2).unwrap(), 3)).unwrap());
    assert!(matches!(schur_functor(&sym(ctx(2, 2), 3)), Err(SymError::ContextTooSmall { need: 3, have: 2 })));
}

#[test]
fn schur_functor_on_maps_is_functorial() {
    for p in [2, 3] {
        let g = ctx(p, 3);
        // Λ² → ⊗² → S² is zero, and stays zero after f_2
        let a = schur_functor_on_maps(&wedge_comult(g, 1, 1)).unwrap();
        let b = schur_functor_on_maps(&sym_mult(g, 1, 1)).unwrap();
        assert!(b.mul(&a).is_zero());
        // each restricted map intertwines the actions
        let (fa, fm, fs) = (
            schur_functor(&wedge(g, 2)).unwrap(),
            schur_functor(&tensor_power(g, 2)).unwrap(),
            schur_functor(&sym(g, 2)).unwrap(),
        );
        assert_eq!(a.mul(fa.gen(0)), fm.gen(0).mul(&a));
        assert_eq!(b.mul(fm.gen(0)), fs.gen(0).mul(&b));
    }
}

#[test]
fn schur_functor_is_exact() {
    // 0 → Λ² → ⊗² → S² → 0 is exact in every characteristic, and so is its image
    for p in [2, 3, 5] {
        let g = ctx(p, 2);
        let a = schur_functor_on_maps(&wedge_comult(g, 1, 1)).unwrap();
        let b = schur_functor_on_maps(&sym_mult(g, 1, 1)).unwrap();
        assert_eq!(a.rank(), a.cols(), "injective");
        assert_eq!(b.rank(), b.rows(), "surjective");
        assert_eq!(a.rank() + b.rank(), a.rows(), "exact in the middle");
        assert!(b.mul(&a).is_zero());
    }
    // 0 → Q² → Γ² → I^(1) → 0 at p = 2: dimensions add up after f_2
    let g = ctx(2, 2);
    let n = |m: &polyrep::Rep<Single>| schur_functor(m).unwrap().dim();
    let frob = modkit::build(&polyrep::FunctorExpr::BigT(2, 1), g).unwrap();
    assert_eq!(n(&frob), 0);
    assert_eq!(n(&div(g, 2)), n(&q_trunc(g, 2)) + n(&frob));
}

#[test]
fn kronecker_and_sign_twist() {
    for p in [2, 3] {
        let f = FieldSpec::new(p).unwrap();
        assert_eq!(sign_twist(&SymRep::sign(f, 3)), SymRep::trivial(f, 3));
        let v = sym_simple(f, &part(&[2, 1])).unwrap();
        let reg = SymRep::regular(f, 3);
        let mut sum = reg.clone();
        for _ in 1..v.dim() {
            sum = sym_sum(&sum, &reg).unwrap();
        }
        assert!(sym_iso(&kronecker(&reg, &v).unwrap(), &sum).unwrap());
    }
    let f2 = FieldSpec::new(2).unwrap();
    let r = SymRep::regular(f2, 3);
    assert_eq!(sign_twist(&r), r);
    assert!(matches!(kronecker(&r, &SymRep::trivial(f2, 2)), Err(SymError::DegreeMismatch(3, 2))));
}

#[test]
fn hom_and_ext_examples() {
    let f2 = FieldSpec::new(2).unwrap();
    let t2 = SymRep::trivial(f2, 2);
    assert_eq!(sym_hom(&t2, &t2).unwrap(), 1);
    // kS_2 = k[x]/(x²) over F_2: the periodic resolution gives a line in every degree
    let opts = SymExtOptions::default();
    assert_eq!(sym_ext_dims(&t2, &t2, 4, &opts).unwrap(), vec![1; 5]);
    // coprime characteristic: semisimple group algebra
    let f5 = FieldSpec::new(5).unwrap();
    for (_, s) in sym_simples(f5, 3).unwrap() {
        for (_, t) in sym_simples(f5, 3).unwrap() {
            let e = sym_ext_dims(&s, &t, 2, &opts).unwrap();
            assert_eq!(&e[1..], &[0, 0]);
        }
    }
    // Ext^0 agrees with the intertwiner solver
    for p in [2, 3] {
        let f = FieldSpec::new(p).unwrap();
        let mods = [SymRep::regular(f, 3), SymRep::trivial(f, 3), SymRep::sign(f, 3), sym_simple(f, &part(&[2, 1])).unwrap()];
        for a in &mods {
            for b in &mods {
                assert_eq!(sym_ext_dims(a, b, 0, &opts).unwrap()[0], sym_hom(a, b).unwrap());
            }
        }
    }
    // the functor side is zero but the group side is not
    let g = ctx(2, 2);
    let fg = schur_functor(&div(g, 2)).unwrap();
    let fq = schur_functor(&q_trunc(g, 2)).unwrap();
    assert_eq!(sym_hom(&fg, &fq).unwrap(), 1);
    assert_eq!(modkit::hom(&div(g, 2), &q_trunc(g, 2)).dim(), 0);
}

#[test]
fn group_actions_respect_composition() {
    let f = FieldSpec::new(3).unwrap();
    let v = sym_simple(f, &part(&[3, 1])).unwrap();
    let acts = all_actions(&v);
    let perms = polyrep::symrep::permutations(4);
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let comp: Vec<u8> = pb.iter().map(|&x| pa[x as usize]).collect();
            let c = perms.iter().position(|q| *q == comp).unwrap();
            assert_eq!(acts[c], acts[a].mul(&acts[b]));
        }
    }
}

#[test]
fn adjunction_units() {
    for p in [2, 3] {
        let f = FieldSpec::new(p).unwrap();
        for d in 2..=4 {
            let g = ctx(p, d);
            let mut vs: Vec<SymRep> = sym_simples(f, d).unwrap().into_iter().map(|(_, s)| s).collect();
            vs.push(SymRep::regular(f, d));
            for v in vs {
                let l = schur_functor(&coinvariants_sd(g, &v).unwrap()).unwrap();
                let r = schur_functor(&invariants_sd(g, &v).unwrap()).unwrap();
                assert!(sym_iso(&l, &v).unwrap(), "f ℓ V ≇ V (p={p}, d={d}, dim={})", v.dim());
                assert!(sym_iso(&r, &v).unwrap(), "f r V ≇ V (p={p}, d={d}, dim={})", v.dim());
            }
        }
    }
}

#[test]
fn simples_from_the_functor_side() {
    for p in [2, 3] {
        let f = FieldSpec::new(p).unwrap();
        for d in 1..=4 {
            let g = ctx(p, d);
            let simples = sym_simples(f, d).unwrap();
            for (i, (l, s)) in simples.iter().enumerate() {
                assert!(simple_by_orbits(s), "f(L{l}) not simple");
                assert!(is_sym_simple(s).unwrap());
                for (m, t) in &simples[i + 1..] {
                    assert!(!sym_iso(s, t).unwrap(), "f(L{l}) ≅ f(L{m})");
                }
            }
            for lam in enumerate_partitions(d, d) {
                if !is_pr_restricted(&lam, p as usize, 1) {
                    let s = modkit::simple(g, &lam).unwrap();
                    assert_eq!(schur_functor(&s.rep).unwrap().dim(), 0, "f(L{lam}) ≠ 0");
                }
            }
        }
    }
    let f3 = FieldSpec::new(3).unwrap();
    assert!(!is_sym_simple(&SymRep::regular(f3, 3)).unwrap());
}

#[test]
fn mullineux_map() {
    let f2 = FieldSpec::new(2).unwrap();
    let f3 = FieldSpec::new(3).unwrap();
    for d in 1..=4 {
        for (l, _) in sym_simples(f2, d).unwrap() {
            assert_eq!(mullineux(f2, &l).unwrap(), l);
        }
        for (l, _) in sym_simples(f3, d).unwrap() {
            let m = mullineux(f3, &l).unwrap();
            assert_eq!(mullineux(f3, &m).unwrap(), l, "not an involution at {l}");
        }
    }
    assert_eq!(mullineux(f3, &part(&[2, 1])).unwrap(), part(&[1, 1, 1]));
    assert_eq!(mullineux(f3, &part(&[1, 1, 1])).unwrap(), part(&[2, 1]));
    // (2,1) is the highest weight of Q³
    let g = ctx(3, 3);
    assert!(modkit::iso_test(&q_trunc(g, 3), &modkit::simple(g, &part(&[2, 1])).unwrap().rep).is_iso());
    assert!(matches!(mullineux(f3, &part(&[3])), Err(SymError::NotRestricted(_))));
}

#[test]
fn kronecker_products_of_simples_are_not_simple() {
    for (p, d) in [(3u32, 3usize), (3, 4), (2, 4)] {
        let f = FieldSpec::new(p).unwrap();
        let big: Vec<(Partition, SymRep)> = sym_simples(f, d).unwrap().into_iter().filter(|(_, s)| s.dim() >= 2).collect();
        let mut checked = 0;
        for (l, s) in &big {
            for (m, t) in &big {
                let k = kronecker(s, t).unwrap();
                assert!(!is_sym_simple(&k).unwrap(), "f(L{l}) ⊗ f(L{m}) simple");
                checked += 1;
            }
        }
        println!("p={p} d={d}: {checked} products of simples of dim >= 2 checked{}", if checked == 0 { " (vacuous)" } else { "" });
        if (p, d) == (3, 3) {
            assert_eq!(checked, 0);
        }
    }
}

#[test]
fn ext_comparison_sym4_div4() {
    let g = ctx(2, 4);
    let inv = InvariantOptions::default();
    let rep = verify_kn(&sym(g, 4), &div(g, 4), 3, &inv, &SymExtOptions::default()).unwrap();
    assert_eq!(rep.p_f, InvariantValue::Finite(2));
    assert_eq!(rep.i_g, InvariantValue::Finite(2));
    assert_eq!(rep.bound, Some(3));
    for r in &rep.rows {
        println!("k={} P={} S={} {:?}", r.k, r.ext_p, r.ext_sym, r.expect);
    }
    assert!(rep.ok());
    assert_eq!(rep.rows.iter().filter(|r| r.expect == KnExpect::Equal).count(), 3);
    assert_eq!(rep.rows[3].expect, KnExpect::AtMost);
}

#[test]
fn ext_comparison_small_pairs() {
    let inv = InvariantOptions::default();
    for p in [2, 3] {
        let g = ctx(p, 3);
        let mods = [sym(g, 3), div(g, 3), wedge(g, 3), tensor_power(g, 3)];
        for a in &mods {
            for b in &mods {
                let rep = verify_kn(a, b, 2, &inv, &SymExtOptions::default()).unwrap();
                assert!(rep.ok(), "{} / {}: {:?}", a.label(), b.label(), rep.rows);
            }
        }
    }
}

#[test]
fn boundary_counterexamples() {
    let inv = InvariantOptions::default();
    let c = gamma_q_case(ctx(2, 2), &inv, &SymExtOptions::default()).unwrap();
    assert_eq!((c.k, c.ext_p, c.ext_sym), (0, 0, 1));
    assert!(c.ok());
    let c3 = gamma_q_case(ctx(3, 3), &inv, &SymExtOptions::default()).unwrap();
    assert_eq!((c3.k, c3.ext_p, c3.ext_sym), (0, 0, 1));

    let g = ctx(2, 2);
    let c = big_t_case(&wedge(g, 2), &inv).unwrap();
    assert_eq!(c.k, 1);
    assert!(c.ext_p > 0 && c.ext_sym == 0, "{c:?}");
    assert!(c.ok());
}

#[test]
fn orbit_spans() {
    let f = FieldSpec::new(2).unwrap();
    let r = SymRep::regular(f, 3);
    let e = orbit_span(&r, &[exactfield::vector::unit(6, 0)]);
    assert_eq!(e.rank(), 6);
    let ones = vec![1u8; 6];
    assert_eq!(orbit_span(&r, &[ones]).rank(), 1);
    let _ = Echelon::new(f, 1);
}
