//! Functorial constructions on module maps: tensor products, twists, duals
//! and direct sums.

use crate::homs::HomMap;
use exactfield::ExactMatrix;
use polyrep::{direct_sum, dual, tensor_with_source, twist, Grading, Rep, Single};
use std::sync::Arc;

pub type Map = Arc<HomMap<Single>>;

/// `f ⊗ g : A ⊗ B → C ⊗ D`.
pub fn tensor_map(f: &Map, g: &Map) -> Map {
    let ctx = *f.source().grading();
    let (src, ss) = tensor_with_source(ctx, vec![f.source().clone(), g.source().clone()]);
    let (tgt, ts) = tensor_with_source(ctx, vec![f.target().clone(), g.target().clone()]);
    let (f, g) = (f.clone(), g.clone());
    let field = ctx.f;
    HomMap::per_weight(
        &src,
        &tgt,
        Arc::new(move |w| {
            let (ls, lt) = (ss.layout(w), ts.layout(w));
            let mut m = ExactMatrix::zeros(field, lt.dim, ls.dim);
            for slot in &ls.slots {
                let Some(&t) = lt.index.get(&slot.weights) else { continue };
                let b = f.at(&slot.weights[0]).kron(&g.at(&slot.weights[1]));
                m.add_block(lt.slots[t].offset, slot.offset, &b);
            }
            m
        }),
    )
}

/// `g^{(r)}`: the same matrices on rescaled weight spaces.
pub fn twist_map(g: &Map, r: usize) -> Map {
    if r == 0 {
        return g.clone();
    }
    let (src, tgt) = (twist(g.source(), r), twist(g.target(), r));
    let q = partitions::pow(src.field().p() as usize, r);
    let g = g.clone();
    let (s2, t2) = (src.clone(), tgt.clone());
    HomMap::per_weight(
        &src,
        &tgt,
        Arc::new(move |w| match w.div_exact(q) {
            Some(v) => (*g.at(&v)).clone(),
            None => ExactMatrix::zeros(s2.field(), t2.wdim(w), s2.wdim(w)),
        }),
    )
}

/// `f^♯ : N^♯ → M^♯` (transpose on each weight space).
pub fn dual_map<G: Grading>(f: &Arc<HomMap<G>>) -> Arc<HomMap<G>> {
    let (src, tgt) = (dual(f.target()), dual(f.source()));
    let f = f.clone();
    HomMap::per_weight(&src, &tgt, Arc::new(move |w| f.at(w).transpose()))
}

/// `(f_1, …, f_k) : M → N_1 ⊕ … ⊕ N_k`.
pub fn stack_maps<G: Grading>(src: &Rep<G>, maps: Vec<Arc<HomMap<G>>>) -> Arc<HomMap<G>> {
    let tgt = direct_sum(maps.iter().map(|m| m.target().clone()).collect());
    HomMap::per_weight(
        src,
        &tgt,
        Arc::new(move |w| {
            let mut acc: Option<ExactMatrix> = None;
            for m in &maps {
                let b = (*m.at(w)).clone();
                acc = Some(match acc {
                    None => b,
                    Some(a) => a.vstack(&b),
                });
            }
            acc.expect("at least one map")
        }),
    )
}

/// Flatten a map into one vector of its dominant-weight matrices, for
/// linear-independence tests (a map is determined by its dominant weights).
pub fn map_coordinates<G: Grading>(f: &HomMap<G>) -> Vec<u8> {
    let g = f.source().grading();
    let mut out = Vec::new();
    for w in g.dominant_weights(f.source().degree()) {
        for row in f.at(&w).row_vecs() {
            out.extend(row);
        }
    }
    out
}
