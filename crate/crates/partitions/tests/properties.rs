use partitions::*;

fn corpus() -> Vec<Partition> {
    (0..=12).flat_map(|d| enumerate_partitions(d, d)).collect()
}

#[test]
fn recomposition_and_restrictedness() {
    for p in [2usize, 3, 5] {
        for lam in corpus() {
            let levels = p_adic_decomposition(&lam, p);
            let mut acc = Partition::empty();
            for (i, l) in levels.iter().enumerate() {
                assert!(is_pr_restricted(l, p, 1));
                acc = acc.add(&l.scale(pow(p, i)));
            }
            assert_eq!(acc, lam);
        }
    }
}

#[test]
fn conjugation_is_involutive() {
    for lam in corpus() {
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(lam.conjugate().weight(), lam.weight());
    }
}

/// p^r-restricted iff the p-adic levels at index >= r all vanish.
#[test]
fn restrictedness_matches_levels() {
    for p in [2usize, 3] {
        for r in 0..3 {
            for lam in corpus() {
                let levels = p_adic_decomposition(&lam, p);
                let high_zero = levels.iter().skip(r).all(|l| l.is_empty());
                assert_eq!(is_pr_restricted(&lam, p, r), high_zero, "{lam} p={p} r={r}");
            }
        }
    }
}

/// Brute-force oracle for the T(d,r) index set.
#[test]
fn t_index_against_brute_force() {
    for p in [2usize, 3] {
        for d in 0..=9 {
            for r in 0..3 {
                let got: Vec<Vec<usize>> = enumerate_t_index(d, p, r).into_iter().map(|t| t.entries).collect();
                let mut want = Vec::new();
                for a in 0..=d {
                    for b in 0..=d {
                        for c in 0..=d {
                            for e in 0..=d {
                                let v = [a, b, c, e];
                                let tot: usize = v.iter().enumerate().map(|(i, x)| x * pow(p, i)).sum();
                                let low: usize = v.iter().enumerate().take(r).map(|(i, x)| x * pow(p, i)).sum();
                                if tot == d && low < d {
                                    let mut t = v.to_vec();
                                    while t.last() == Some(&0) {
                                        t.pop();
                                    }
                                    want.push(t);
                                }
                            }
                        }
                    }
                }
                want.sort_by(|a, b| b.cmp(a));
                assert_eq!(got, want, "d={d} p={p} r={r}");
                assert_eq!(got.is_empty(), d < pow(p, r) || d == 0);
            }
        }
    }
}
