//! Verification of the comodule axioms.
//!
//! With a weight-adapted basis the weight projectors are `coeff[diag μ]`
//! placed on the diagonal, so the projector laws reduce to the counit check
//! `block(diag μ) = I` together with Weyl symmetry of weight dimensions.
//! Coassociativity is checked as multiplicativity of `E ↦ coeff[E]` with
//! respect to the product of the dual algebra. Checking it for all pairs
//! `(F, E)` with `F` running over a generating set (the diagonal keys and
//! [`Grading::generator_keys`]) already implies it for all pairs, because
//! every basis element is a linear combination of products of generators and
//! the counit holds.

use crate::comod::Rep;
use crate::grading::Grading;
use exactfield::ExactMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Generators × all keys (complete, see module docs).
    Generators,
    /// All pairs of keys.
    Full,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub counit: bool,
    pub weights: bool,
    pub coassoc: bool,
    pub products_checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.counit && self.weights && self.coassoc
    }
}

pub fn check_comodule<G: Grading>(m: &Rep<G>, mode: CheckMode) -> CheckReport {
    let g = m.grading();
    let mut rep = CheckReport { counit: true, weights: true, coassoc: true, ..Default::default() };
    let all = g.all_weights(m.degree());
    for w in &all {
        let d = m.wdim(w);
        if d != m.wdim(&g.dominant_rep(w)) {
            rep.weights = false;
            rep.failures.push(format!("weight {w:?} breaks Weyl symmetry"));
        }
        if d > 0 && !m.block(&g.diag(w)).is_identity() {
            rep.counit = false;
            rep.failures.push(format!("counit fails at {w:?}"));
        }
    }
    let support: Vec<G::W> = all.iter().filter(|w| m.wdim(w) > 0).cloned().collect();
    let firsts: Vec<G::K> = match mode {
        CheckMode::Generators => {
            let mut v: Vec<G::K> = support.iter().map(|w| g.diag(w)).collect();
            v.extend(g.generator_keys(m.degree()));
            v
        }
        CheckMode::Full => support.iter().flat_map(|a| all.iter().flat_map(move |b| g.tables(a, b).to_vec())).collect(),
    };
    'outer: for fk in &firsts {
        let (mid, out) = (g.colsum(fk), g.rowsum(fk));
        if m.wdim(&out) == 0 {
            continue;
        }
        // a zero middle space still constrains the blocks: the product must vanish
        let bf = m.block(fk);
        for lam in &support {
            for ek in g.tables(&mid, lam).iter() {
                let lhs = bf.mul(&m.block(ek));
                let mut rhs = ExactMatrix::zeros(m.field(), lhs.rows(), lhs.cols());
                for (gk, c) in g.product(fk, ek).iter() {
                    rhs.add_scaled(*c, &m.block(gk));
                }
                rep.products_checked += 1;
                if lhs != rhs {
                    rep.coassoc = false;
                    rep.failures.push(format!("coassociativity fails at {fk:?} · {ek:?}"));
                    if rep.failures.len() > 8 {
                        break 'outer;
                    }
                }
            }
        }
    }
    rep
}

/// Check that per-weight maps `φ_μ: M_μ → N_μ` commute with the action.
/// Generators suffice: a map commuting with generating elements commutes
/// with the whole algebra.
pub fn check_intertwiner<G: Grading>(
    m: &Rep<G>, n: &Rep<G>, phi: &dyn Fn(&G::W) -> ExactMatrix,
) -> Result<(), String> {
    let g = m.grading();
    let d = m.degree();
    for k in g.generator_keys(d) {
        let (o, i) = (g.rowsum(&k), g.colsum(&k));
        if m.wdim(&i) == 0 && n.wdim(&o) == 0 {
            continue;
        }
        let lhs = n.block(&k).mul(&phi(&i));
        let rhs = phi(&o).mul(&m.block(&k));
        if lhs != rhs {
            return Err(format!("map does not commute with {k:?}"));
        }
    }
    Ok(())
}
