//! Evaluating a functor on a larger space.
//!
//! For `n ≥ d` a degree-`d` comodule `G` at dimension `n` determines `G` at
//! every dimension `N`: a weight `ν` of `GL_N` has at most `d` nonzero
//! entries, and `G(k^N)_ν` is identified with `G(k^n)_{c(ν)}`, where `c`
//! packs the support of `ν` into the first coordinates in order. Blocks are
//! transported along order-preserving coordinate embeddings.

use exactfield::ExactMatrix;
use polyrep::{Key, Rep, Single, Weight};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub struct Extension {
    g: Rep<Single>,
    n: usize,
    big: usize,
    blocks: RwLock<HashMap<Key, Arc<ExactMatrix>>>,
}

fn support(w: &[usize]) -> Vec<usize> {
    (0..w.len()).filter(|&i| w[i] > 0).collect()
}

impl Extension {
    /// Requires `n ≥ deg G`.
    pub fn new(g: &Rep<Single>, big: usize) -> Self {
        let n = g.grading().n;
        assert!(n >= g.degree(), "extension needs n >= degree");
        Extension { g: g.clone(), n, big, blocks: Default::default() }
    }

    pub fn rep(&self) -> &Rep<Single> {
        &self.g
    }

    pub fn dimension(&self) -> usize {
        self.big
    }

    /// The packed weight `c(ν)` at dimension `n`.
    pub fn packed(&self, nu: &[usize]) -> Weight {
        let mut v: Vec<usize> = nu.iter().copied().filter(|&x| x > 0).collect();
        v.resize(self.n, 0);
        Weight::new(&v)
    }

    pub fn wdim(&self, nu: &[usize]) -> usize {
        self.g.wdim(&self.packed(nu))
    }

    /// `coeff[K]` for a key at dimension `N`, in packed coordinates.
    pub fn block(&self, k: &Key) -> Arc<ExactMatrix> {
        if let Some(b) = self.blocks.read().unwrap().get(k) {
            return b.clone();
        }
        let b = Arc::new(self.compute(k));
        self.blocks.write().unwrap().insert(k.clone(), b.clone());
        b
    }

    fn compute(&self, k: &Key) -> ExactMatrix {
        let big = self.big;
        let cells: Vec<(usize, usize)> = k.0.iter().map(|&c| (c as usize / big, c as usize % big)).collect();
        let nu_in = k.colsum(big).to_vec();
        let nu_out = k.rowsum(big).to_vec();
        let (cs, mut rs) = (support(&nu_in), support(&nu_out));
        let mut cells = cells;
        let mut union: Vec<usize> = cs.iter().chain(&rs).copied().collect();
        union.sort_unstable();
        union.dedup();
        if union.len() > self.n {
            // move the rows next to the columns along an order-preserving
            // bijection; in packed coordinates this changes nothing
            let target: Vec<usize> = if rs.len() <= cs.len() {
                cs[..rs.len()].to_vec()
            } else {
                let mut t = cs.clone();
                t.extend((0..big).filter(|i| !cs.contains(i)).take(rs.len() - cs.len()));
                t.sort_unstable();
                t
            };
            let pos: HashMap<usize, usize> = rs.iter().zip(&target).map(|(&a, &b)| (a, b)).collect();
            cells = cells.into_iter().map(|(r, c)| (pos[&r], c)).collect();
            rs = target;
            union = cs.iter().chain(&rs).copied().collect();
            union.sort_unstable();
            union.dedup();
        }
        let n = self.n;
        let iota: HashMap<usize, usize> = union.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let inner = Key::from_cells(cells.iter().map(|&(r, c)| (iota[&r] * n + iota[&c]) as u16).collect());
        let mid = self.g.block(&inner);
        // packed → ι-placed for the source weight, ι-placed → packed for the target
        let relabel = |supp: &[usize], w: &[usize], to_packed: bool| {
            let mut cells = Vec::new();
            for (rank, &s) in supp.iter().enumerate() {
                let (row, col) = if to_packed { (rank, iota[&s]) } else { (iota[&s], rank) };
                for _ in 0..w[s] {
                    cells.push((row * n + col) as u16);
                }
            }
            self.g.block(&Key::from_cells(cells))
        };
        let nu_out_moved: Vec<usize> = {
            let mut v = vec![0; big];
            for &(r, _) in &cells {
                v[r] += 1;
            }
            v
        };
        let t_in = relabel(&cs, &nu_in, false);
        let t_out = relabel(&rs, &nu_out_moved, true);
        t_out.mul(&mid).mul(&t_in)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactfield::FieldSpec;
    use polyrep::{sym, wedge, Grading};

    /// The extension of a basic functor agrees with building it at the
    /// larger dimension, up to the packing isomorphism on weight spaces:
    /// compare ranks of composable block products.
    #[test]
    fn diagonal_keys_are_identities() {
        let g = Single::new(FieldSpec::new(2).unwrap(), 2);
        let e = Extension::new(&wedge(g, 2), 4);
        let k = Key::diag(&Weight::new(&[0, 1, 0, 1]));
        assert!(e.block(&k).is_identity());
        assert_eq!(e.wdim(&[1, 0, 0, 1]), 1);
        assert_eq!(e.wdim(&[2, 0, 0, 0]), 0);
    }

    #[test]
    fn matches_direct_construction_on_symmetric_powers() {
        // S^d has one-dimensional weight spaces with monomial basis, so blocks
        // are determined by the coalgebra and must agree entrywise
        let f = FieldSpec::new(3).unwrap();
        let small = sym(Single::new(f, 2), 2);
        let big = sym(Single::new(f, 4), 2);
        let e = Extension::new(&small, 4);
        for a in big.grading().all_weights(2) {
            for b in big.grading().all_weights(2) {
                for k in big.grading().tables(&a, &b).iter() {
                    assert_eq!(*e.block(k), *big.block(k), "key {k:?}");
                }
            }
        }
    }
}
