use exactfield::{Echelon, ExactMatrix, FieldSpec, Subspace};
use proptest::prelude::*;

fn matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = (u32, usize, usize, Vec<u8>)> {
    (prop_oneof![Just(2u32), Just(3), Just(5), Just(7)], 1..=max_r, 1..=max_c).prop_flat_map(|(p, r, c)| {
        (Just(p), Just(r), Just(c), proptest::collection::vec(0u8..p as u8, r * c))
    })
}

fn build(p: u32, r: usize, c: usize, data: &[u8]) -> ExactMatrix {
    let rows: Vec<Vec<u8>> = data.chunks(c).map(|x| x.to_vec()).collect();
    ExactMatrix::from_row_vecs(FieldSpec::new(p).unwrap(), c, &rows[..r])
}

proptest! {
    #[test]
    fn rank_nullity((p, r, c, data) in matrix(8, 8)) {
        let m = build(p, r, c, &data);
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), c);
        for k in m.kernel_basis() {
            prop_assert!(m.mul_vec(&k).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rref_idempotent((p, r, c, data) in matrix(8, 8)) {
        let m = build(p, r, c, &data);
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn solve_consistent_rhs((p, r, c, data) in matrix(7, 7), seed in proptest::collection::vec(0u8..7, 7)) {
        let m = build(p, r, c, &data);
        let x0: Vec<u8> = seed[..c].iter().map(|&v| v % p as u8).collect();
        let b = m.mul_vec(&x0);
        let sol = m.solve(&b).unwrap();
        let x = sol.particular.expect("b is in the column space");
        prop_assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn echelon_rank_matches((p, r, c, data) in matrix(8, 8)) {
        let m = build(p, r, c, &data);
        let e = Echelon::from_rows(m.field(), c, m.row_vecs());
        prop_assert_eq!(e.rank(), m.rank());
    }

    #[test]
    fn grassmann_formula((p, r, c, data) in matrix(6, 6), (_, r2, _, data2) in matrix(6, 6)) {
        let f = FieldSpec::new(p).unwrap();
        let u = Subspace::span(f, c, data.chunks(c).take(r).map(|x| x.to_vec())).unwrap();
        let rows2: Vec<Vec<u8>> = data2.iter().map(|&x| x % p as u8).collect::<Vec<_>>()
            .chunks(c).filter(|x| x.len() == c).take(r2).map(|x| x.to_vec()).collect();
        let v = Subspace::span(f, c, rows2).unwrap();
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&v).unwrap());
    }
}
