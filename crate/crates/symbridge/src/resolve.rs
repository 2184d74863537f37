//! Ext over kS_d from free resolutions.
//!
//! Free modules `(kS_d)^m` are stored as coordinate vectors of length
//! `m·d!`, block `i` holding the coefficients of `e_σ` (lex order) in the
//! `i`-th copy; permutations act by permuting coordinates.

use crate::group::all_actions;
use crate::{Result, SymError};
use exactfield::{Echelon, ExactMatrix, FieldSpec};
use polyrep::symrep::permutations;
use polyrep::SymRep;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct SymExtOptions {
    /// Largest `d` accepted.
    pub max_degree: usize,
    /// Largest free module (in total dimension) built during a resolution.
    pub max_dim: usize,
    pub seed: u64,
}

impl Default for SymExtOptions {
    fn default() -> Self {
        SymExtOptions { max_degree: 5, max_dim: 6000, seed: 0x5d }
    }
}

/// The group structure: `mul[a][b] = index of σ_a ∘ σ_b`.
struct Group {
    order: usize,
    mul: Vec<Vec<usize>>,
}

impl Group {
    fn new(d: usize) -> Self {
        let perms = permutations(d);
        let idx: HashMap<&Vec<u8>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx[&b.iter().map(|&x| a[x as usize]).collect::<Vec<u8>>()]).collect())
            .collect();
        Group { order: perms.len(), mul }
    }

    /// `σ_a · x` for `x` in a free module.
    fn act(&self, a: usize, x: &[u8]) -> Vec<u8> {
        let mut y = vec![0u8; x.len()];
        for (blk, yb) in x.chunks(self.order).zip(y.chunks_mut(self.order)) {
            for (b, &c) in blk.iter().enumerate() {
                yb[self.mul[a][b]] = c;
            }
        }
        y
    }
}

/// One stage: the images of the free generators of `P_k` in `P_{k−1}`
/// (or in `U` for `k = 0`).
#[derive(Clone, Debug)]
pub struct FreeStage {
    pub images: Vec<Vec<u8>>,
}

/// A free resolution `… → (kS_d)^{m_1} → (kS_d)^{m_0} → U`.
pub struct SymResolution {
    u: SymRep,
    group: Group,
    stages: Vec<FreeStage>,
    /// Basis of the kernel of the last stage's map.
    kernel: Vec<Vec<u8>>,
    opts: SymExtOptions,
    rng: ChaCha8Rng,
}

impl SymResolution {
    pub fn new(u: &SymRep, opts: SymExtOptions) -> Result<Self> {
        if u.degree() > opts.max_degree {
            return Err(SymError::BudgetExceeded(format!("d = {} exceeds the cap {}", u.degree(), opts.max_degree)));
        }
        let kernel = (0..u.dim()).map(|i| exactfield::vector::unit(u.dim(), i)).collect();
        let rng = ChaCha8Rng::seed_from_u64(opts.seed);
        Ok(SymResolution { u: u.clone(), group: Group::new(u.degree()), stages: vec![], kernel, opts, rng })
    }

    pub fn stages(&self) -> &[FreeStage] {
        &self.stages
    }

    /// Ranks `m_k` of the free modules built so far.
    pub fn ranks(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.images.len()).collect()
    }

    fn field(&self) -> FieldSpec {
        self.u.field()
    }

    /// `σ · x` in the module the kernel lives in.
    fn act_in_target(&self, actions: &Option<Vec<ExactMatrix>>, a: usize, x: &[u8]) -> Vec<u8> {
        match actions {
            Some(acts) => acts[a].mul_vec(x),
            None => self.group.act(a, x),
        }
    }

    /// Irredundant generators of the current kernel: random kernel elements
    /// are added while they enlarge the generated submodule, then each is
    /// dropped if the others still generate.
    fn kernel_generators(&mut self, actions: &Option<Vec<ExactMatrix>>) -> Vec<Vec<u8>> {
        let f = self.field();
        let p = f.p() as u64;
        let target = self.kernel.len();
        if target == 0 {
            return vec![];
        }
        let width = self.kernel[0].len();
        let span_of = |this: &Self, gens: &[Vec<u8>]| {
            let mut e = Echelon::new(f, width);
            for x in gens {
                for a in 0..this.group.order {
                    e.insert(this.act_in_target(actions, a, x));
                    if e.rank() == target {
                        return e;
                    }
                }
            }
            e
        };
        let mut gens: Vec<Vec<u8>> = Vec::new();
        let mut ech = Echelon::new(f, width);
        let mut misses = 0;
        while ech.rank() < target {
            let mut x = vec![0u8; width];
            if misses < 8 {
                for b in &self.kernel {
                    let c = self.rng.random_range(0..p) as u8;
                    exactfield::vector::axpy(f, &mut x, c, b);
                }
            } else {
                // fall back to a basis vector outside the current span
                x = self.kernel.iter().find(|b| !ech.contains(b)).unwrap().clone();
            }
            if ech.contains(&x) {
                misses += 1;
                continue;
            }
            misses = 0;
            for a in 0..self.group.order {
                ech.insert(self.act_in_target(actions, a, &x));
            }
            gens.push(x);
        }
        let mut i = 0;
        while gens.len() > 1 && i < gens.len() {
            let rest: Vec<Vec<u8>> = gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            if span_of(self, &rest).rank() == target {
                gens = rest;
            } else {
                i += 1;
            }
        }
        gens
    }

    /// Build stages until there are `len` of them.
    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        let f = self.field();
        while self.stages.len() < len {
            let actions = if self.stages.is_empty() { Some(all_actions(&self.u)) } else { None };
            let gens = self.kernel_generators(&actions);
            let order = self.group.order;
            let src_dim = gens.len() * order;
            if src_dim > self.opts.max_dim {
                return Err(SymError::BudgetExceeded(format!("free module of dimension {src_dim} at stage {}", self.stages.len())));
            }
            let tgt_dim = if self.stages.is_empty() { self.u.dim() } else { self.stages.last().unwrap().images.len() * order };
            let mut cols = Vec::with_capacity(src_dim);
            for x in &gens {
                for a in 0..order {
                    cols.push(self.act_in_target(&actions, a, x));
                }
            }
            self.kernel = if src_dim == 0 {
                vec![]
            } else {
                ExactMatrix::from_columns(f, tgt_dim, &cols).kernel_basis()
            };
            self.stages.push(FreeStage { images: gens });
        }
        Ok(())
    }

    /// The coboundary `Hom(P_k, V) → Hom(P_{k+1}, V)`, with `Hom(kS_d, V) ≅ V`
    /// via evaluation at the identity.
    fn coboundary(&self, v_actions: &[ExactMatrix], vdim: usize, k: usize) -> ExactMatrix {
        let f = self.field();
        let order = self.group.order;
        let (mk, mk1) = (self.stages[k].images.len(), self.stages[k + 1].images.len());
        let mut m = ExactMatrix::zeros(f, mk1 * vdim, mk * vdim);
        for (j, x) in self.stages[k + 1].images.iter().enumerate() {
            for i in 0..mk {
                let mut blk = ExactMatrix::zeros(f, vdim, vdim);
                for (a, &c) in x[i * order..(i + 1) * order].iter().enumerate() {
                    if c != 0 {
                        blk.add_scaled(c, &v_actions[a]);
                    }
                }
                m.add_block(j * vdim, i * vdim, &blk);
            }
        }
        m
    }
}

/// `dim Ext^k_{kS_d}(U, V)` for `k ≤ kmax`.
pub fn sym_ext_dims(u: &SymRep, v: &SymRep, kmax: usize, opts: &SymExtOptions) -> Result<Vec<usize>> {
    crate::group::sym_hom(u, v)?; // degree/field checks
    let mut res = SymResolution::new(u, opts.clone())?;
    res.extend_to(kmax + 2)?;
    let acts = all_actions(v);
    let vdim = v.dim();
    let ranks: Vec<usize> = (0..=kmax).map(|k| res.coboundary(&acts, vdim, k).rank()).collect();
    Ok((0..=kmax)
        .map(|k| {
            let c = res.stages[k].images.len() * vdim;
            c - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }
        })
        .collect())
}

pub fn sym_ext(u: &SymRep, v: &SymRep, k: usize) -> Result<usize> {
    Ok(sym_ext_dims(u, v, k, &SymExtOptions::default())?[k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_table_is_associative_with_identity() {
        let g = Group::new(3);
        let id = 0; // lex-first permutation is the identity
        for a in 0..6 {
            assert_eq!(g.mul[id][a], a);
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(g.mul[g.mul[a][b]][c], g.mul[a][g.mul[b][c]]);
                }
            }
        }
    }

    #[test]
    fn regular_module_is_free() {
        let f = FieldSpec::new(2).unwrap();
        let r = SymRep::regular(f, 3);
        let t = SymRep::trivial(f, 3);
        let dims = sym_ext_dims(&r, &t, 3, &SymExtOptions::default()).unwrap();
        assert_eq!(dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn degree_cap() {
        let f = FieldSpec::new(2).unwrap();
        let t = SymRep::trivial(f, 3);
        let opts = SymExtOptions { max_degree: 2, ..Default::default() };
        assert!(matches!(sym_ext_dims(&t, &t, 1, &opts), Err(SymError::BudgetExceeded(_))));
    }
}
