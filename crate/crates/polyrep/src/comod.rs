//! The comodule container: a lazily evaluated family of coefficient blocks.

use crate::grading::Grading;
use exactfield::{ExactMatrix, FieldSpec};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// Something that can produce weight-space dimensions and coefficient blocks.
///
/// `block(E)` must be a `wdim(rowsum E) × wdim(colsum E)` matrix.
pub trait Source<G: Grading>: Send + Sync {
    fn wdim(&self, w: &G::W) -> usize;
    fn block(&self, k: &G::K) -> ExactMatrix;
}

/// A comodule over the degree-`deg` coefficient coalgebra, in a
/// weight-adapted basis.
pub struct Comod<G: Grading> {
    g: G,
    deg: G::D,
    label: String,
    src: Arc<dyn Source<G>>,
    wdims: RwLock<HashMap<G::W, usize>>,
    blocks: RwLock<HashMap<G::K, Arc<ExactMatrix>>>,
}

pub type Rep<G> = Arc<Comod<G>>;

impl<G: Grading> fmt::Debug for Comod<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Comod({}, deg {:?})", self.label, self.deg)
    }
}

impl<G: Grading> Comod<G> {
    pub fn new(g: G, deg: G::D, label: impl Into<String>, src: Arc<dyn Source<G>>) -> Rep<G> {
        Arc::new(Comod { g, deg, label: label.into(), src, wdims: Default::default(), blocks: Default::default() })
    }

    pub fn grading(&self) -> &G {
        &self.g
    }
    pub fn degree(&self) -> G::D {
        self.deg
    }
    pub fn field(&self) -> FieldSpec {
        self.g.field()
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Dimension of the weight space `w`.
    pub fn wdim(&self, w: &G::W) -> usize {
        if let Some(&d) = self.wdims.read().unwrap().get(w) {
            return d;
        }
        let d = self.src.wdim(w);
        self.wdims.write().unwrap().insert(w.clone(), d);
        d
    }

    /// The coefficient block `coeff[E]` restricted to weight spaces.
    pub fn block(&self, k: &G::K) -> Arc<ExactMatrix> {
        if let Some(b) = self.blocks.read().unwrap().get(k) {
            return b.clone();
        }
        let (out, inp) = (self.g.rowsum(k), self.g.colsum(k));
        let (r, c) = (self.wdim(&out), self.wdim(&inp));
        let b = if r == 0 || c == 0 {
            ExactMatrix::zeros(self.field(), r, c)
        } else {
            let b = self.src.block(k);
            assert_eq!((b.rows(), b.cols()), (r, c), "block shape for {:?} in {}", k, self.label);
            b
        };
        let b = Arc::new(b);
        self.blocks.write().unwrap().insert(k.clone(), b.clone());
        b
    }

    /// Apply `coeff[E]` to a vector of weight `colsum E`.
    pub fn act(&self, k: &G::K, v: &[u8]) -> Vec<u8> {
        self.block(k).mul_vec(v)
    }

    /// Drop cached blocks (weight dimensions are kept).
    pub fn clear_cache(&self) {
        self.blocks.write().unwrap().clear();
    }

    pub fn dim(&self) -> usize {
        self.g
            .dominant_weights(self.deg)
            .iter()
            .map(|w| self.g.orbit_size(w) * self.wdim(w))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.g.dominant_weights(self.deg).iter().all(|w| self.wdim(w) == 0)
    }

    /// Dominant weights with nonzero weight space.
    pub fn dominant_support(&self) -> Vec<G::W> {
        self.g.dominant_weights(self.deg).into_iter().filter(|w| self.wdim(w) > 0).collect()
    }

    /// All weights with nonzero weight space, canonical order.
    pub fn support(&self) -> Vec<G::W> {
        self.g.all_weights(self.deg).into_iter().filter(|w| self.wdim(&self.g.dominant_rep(w)) > 0).collect()
    }

    /// Offsets of each weight space in the flat basis (canonical weight order).
    pub fn layout(&self) -> Vec<(G::W, usize, usize)> {
        let mut off = 0;
        let mut out = Vec::new();
        for w in self.g.all_weights(self.deg) {
            let d = self.wdim(&w);
            if d > 0 {
                out.push((w, off, d));
                off += d;
            }
        }
        out
    }

    /// Character: dimensions at dominant weights.
    pub fn character(&self) -> Vec<(G::W, usize)> {
        self.g.dominant_weights(self.deg).into_iter().map(|w| (w.clone(), self.wdim(&w))).collect()
    }

    /// Every key together with its nonzero block, in canonical key order.
    pub fn nonzero_blocks(&self) -> Vec<(G::K, Arc<ExactMatrix>)> {
        let ws: Vec<G::W> = self.layout().into_iter().map(|(w, _, _)| w).collect();
        let mut out = Vec::new();
        for a in &ws {
            for b in &ws {
                for k in self.g.tables(a, b).iter() {
                    let bl = self.block(k);
                    if !bl.is_zero() {
                        out.push((k.clone(), bl));
                    }
                }
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }
}

/// A source given by explicit per-weight dimensions and explicit blocks;
/// absent blocks are zero.
pub struct ExplicitSource<G: Grading> {
    pub f: FieldSpec,
    pub g: G,
    pub wdims: HashMap<G::W, usize>,
    pub blocks: HashMap<G::K, ExactMatrix>,
}

impl<G: Grading> Source<G> for ExplicitSource<G> {
    fn wdim(&self, w: &G::W) -> usize {
        self.wdims.get(w).copied().unwrap_or(0)
    }
    fn block(&self, k: &G::K) -> ExactMatrix {
        match self.blocks.get(k) {
            Some(b) => b.clone(),
            None => ExactMatrix::zeros(self.f, self.wdim(&self.g.rowsum(k)), self.wdim(&self.g.colsum(k))),
        }
    }
}
