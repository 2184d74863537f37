//! Generators and presentations of comodules.
//!
//! A generator is a weight vector at a dominant weight. The submodule
//! generated by weight vectors `v_i` (weights `w_i`) has weight space
//! `Σ_i span{coeff[E] v_i : E ∈ Mat(μ, w_i)}` at `μ`; every submodule is
//! determined by its dominant weight spaces (permutation matrices act
//! through the coefficient blocks), so only dominant weights are needed.

use exactfield::{Echelon, ExactMatrix};
use polyrep::{Grading, Rep};

/// A generator: its weight and its coordinates in that weight space.
pub type Gen<G> = (<G as Grading>::W, Vec<u8>);

/// Echelon form of the generated span at weight `mu`.
pub fn generated_span<G: Grading>(amb: &Rep<G>, gens: &[Gen<G>], mu: &G::W) -> Echelon {
    let g = amb.grading();
    let mut ech = Echelon::new(amb.field(), amb.wdim(mu));
    if ech.width() == 0 {
        return ech;
    }
    for (w, v) in gens {
        for k in g.tables(mu, w).iter() {
            ech.insert(amb.act(k, v));
            if ech.is_full() {
                return ech;
            }
        }
    }
    ech
}

/// A generating set of the submodule whose dominant weight spaces are
/// spanned by `space(μ)` (which must be action-stable): greedy in
/// lexicographically descending weight order, then pruned in reverse order.
pub fn greedy_generators<G: Grading>(amb: &Rep<G>, space: &dyn Fn(&G::W) -> Vec<Vec<u8>>) -> Vec<Gen<G>> {
    let g = amb.grading();
    let mut gens: Vec<Gen<G>> = Vec::new();
    for mu in g.dominant_weights(amb.degree()) {
        if amb.wdim(&mu) == 0 {
            continue;
        }
        let target = space(&mu);
        if target.is_empty() {
            continue;
        }
        let mut ech = generated_span(amb, &gens, &mu);
        for v in target {
            if ech.contains(&v) {
                continue;
            }
            for k in g.tables(&mu, &mu).iter() {
                ech.insert(amb.act(k, &v));
            }
            gens.push((mu.clone(), v));
        }
    }
    prune(amb, gens)
}

fn prune<G: Grading>(amb: &Rep<G>, mut gens: Vec<Gen<G>>) -> Vec<Gen<G>> {
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let g = gens.remove(i);
        if !generated_span(amb, &gens, &g.0).contains(&g.1) {
            gens.insert(i, g);
        }
    }
    gens
}

/// Generators of a whole module.
pub fn module_generators<G: Grading>(m: &Rep<G>) -> Vec<Gen<G>> {
    greedy_generators(m, &|mu: &G::W| {
        let d = m.wdim(mu);
        (0..d).map(|i| exactfield::vector::unit(d, i)).collect()
    })
}

/// Relations of a presentation at one dominant weight: the kernel of the
/// evaluation map `(i, E) ↦ coeff[E] g_i`.
#[derive(Clone, Debug)]
pub struct RelBlock<G: Grading> {
    pub mu: G::W,
    pub cols: Vec<(usize, G::K)>,
    pub rels: Vec<Vec<u8>>,
}

/// `M = ⊕ S·ξ_{w_i} / (relations)`.
#[derive(Clone)]
pub struct Presentation<G: Grading> {
    pub module: Rep<G>,
    pub gens: Vec<Gen<G>>,
    pub rels: Vec<RelBlock<G>>,
}

/// Columns `coeff[E] g_i` for all `(i, E)` with `E ∈ Mat(μ, w_i)`.
pub fn evaluation_columns<G: Grading>(m: &Rep<G>, gens: &[Gen<G>], mu: &G::W) -> (Vec<(usize, G::K)>, ExactMatrix) {
    let g = m.grading();
    let mut cols = Vec::new();
    let mut vecs = Vec::new();
    for (i, (w, v)) in gens.iter().enumerate() {
        for k in g.tables(mu, w).iter() {
            cols.push((i, k.clone()));
            vecs.push(m.act(k, v));
        }
    }
    (cols, ExactMatrix::from_columns(m.field(), m.wdim(mu), &vecs))
}

pub fn present_with<G: Grading>(m: &Rep<G>, gens: Vec<Gen<G>>) -> Presentation<G> {
    let g = m.grading();
    let mut rels = Vec::new();
    for mu in g.dominant_weights(m.degree()) {
        let (cols, c) = evaluation_columns(m, &gens, &mu);
        if cols.is_empty() {
            continue;
        }
        let r = c.kernel_basis();
        if !r.is_empty() {
            rels.push(RelBlock { mu, cols, rels: r });
        }
    }
    Presentation { module: m.clone(), gens, rels }
}

pub fn present<G: Grading>(m: &Rep<G>) -> Presentation<G> {
    present_with(m, module_generators(m))
}

impl<G: Grading> Presentation<G> {
    /// Solve for `Hom(M, N)`: tuples `(n_i)` with `n_i ∈ N_{w_i}` killing
    /// every relation. Returns a basis, each element the list of images.
    pub fn hom_basis(&self, n: &Rep<G>) -> Vec<Vec<Vec<u8>>> {
        let f = n.field();
        let dims: Vec<usize> = self.gens.iter().map(|(w, _)| n.wdim(w)).collect();
        let mut offs = Vec::with_capacity(dims.len());
        let mut total = 0;
        for d in &dims {
            offs.push(total);
            total += d;
        }
        if total == 0 {
            return vec![];
        }
        let mut eqs = Echelon::new(f, total);
        for rb in &self.rels {
            let dn = n.wdim(&rb.mu);
            if dn == 0 {
                continue;
            }
            let blocks: Vec<_> = rb.cols.iter().map(|(_, k)| n.block(k)).collect();
            for r in &rb.rels {
                let mut rows = vec![vec![0u8; total]; dn];
                for (c, &coef) in r.iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let i = rb.cols[c].0;
                    let b = &blocks[c];
                    for (t, row) in rows.iter_mut().enumerate() {
                        let src = b.row(t);
                        exactfield::vector::axpy(f, &mut row[offs[i]..offs[i] + dims[i]], coef, src);
                    }
                }
                for row in rows {
                    if !exactfield::vector::is_zero(&row) {
                        eqs.insert(row);
                        if eqs.is_full() {
                            return vec![];
                        }
                    }
                }
            }
        }
        let m = ExactMatrix::from_row_vecs(f, total, &eqs.rref_rows());
        m.kernel_basis().into_iter().map(|x| offs.iter().zip(&dims).map(|(&o, &d)| x[o..o + d].to_vec()).collect()).collect()
    }
}
