use exactfield::FieldSpec;
use homology::*;
use modkit::{costandard, weyl};
use partitions::Partition;
use polyrep::{div, dual, nat, sym, tensor_power, twist, wedge, Single};

fn ctx(p: u32, n: usize) -> Single {
    Single::new(FieldSpec::new(p).unwrap(), n)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn ext_small_examples() {
    let g = ctx(2, 2);
    let i1 = twist(&nat(g), 1);
    let l2 = wedge(g, 2);
    assert_eq!(ext(&i1, &l2, 0).unwrap(), 0);
    assert_eq!(ext(&i1, &l2, 1).unwrap(), 1);
    // Ext^0 = Hom
    for (a, b) in [(sym(g, 2), div(g, 2)), (div(g, 2), sym(g, 2)), (tensor_power(g, 2), tensor_power(g, 2))] {
        assert_eq!(ext(&a, &b, 0).unwrap(), modkit::hom(&a, &b).dim());
    }
}

#[test]
fn closed_forms_small() {
    let o = InvariantOptions::default();
    for (p, d, r) in [(2, 2, 1), (2, 4, 1), (3, 3, 1)] {
        let g = ctx(p, d);
        let q = partitions::pow(p as usize, r);
        assert_eq!(invariant_i(&sym(g, d), r, &o).unwrap(), InvariantValue::Finite(0));
        assert_eq!(invariant_i(&wedge(g, d), r, &o).unwrap(), InvariantValue::Finite(q - 1));
        assert_eq!(invariant_i(&div(g, d), r, &o).unwrap(), InvariantValue::Finite(2 * (q - 1)));
    }
}

#[test]
fn table_row_one() {
    let g = ctx(2, 4);
    let o = InvariantOptions::default();
    let t = std::time::Instant::now();
    let mods = vec![
        div(g, 4),
        weyl(g, &part(&[3, 1])).unwrap(),
        weyl(g, &part(&[2, 2])).unwrap(),
        weyl(g, &part(&[2, 1, 1])).unwrap(),
        wedge(g, 4),
        costandard(g, &part(&[2, 1, 1])).unwrap(),
        costandard(g, &part(&[2, 2])).unwrap(),
        costandard(g, &part(&[3, 1])).unwrap(),
        sym(g, 4),
    ];
    for r in [1, 2] {
        let v: Vec<String> = mods.iter().map(|m| invariant_i(m, r, &o).unwrap().to_string()).collect();
        eprintln!("r={r}: {v:?} ({:?})", t.elapsed());
    }
    let _ = dual(&sym(g, 1));
}
