//! The Schur functor `f_d`: the weight space `(1,…,1,0,…,0)` with `s_i`
//! acting through the permutation matrix of `(i+1, i+2)`.

use crate::{Result, SymError};
use exactfield::ExactMatrix;
use modkit::HomMap;
use polyrep::{Key, Rep, Single, SymRep, Weight};

/// The weight `(1^d, 0^{n−d})`.
pub fn multilinear_weight(n: usize, d: usize) -> Weight {
    let v: Vec<usize> = (0..n).map(|i| usize::from(i < d)).collect();
    Weight::new(&v)
}

/// The exponent matrix of the permutation matrix of `s_{i+1}` on the first
/// `d` coordinates (entry `(σ(j), j)` for `j < d`).
pub fn transposition_key(n: usize, d: usize, i: usize) -> Key {
    let cells = (0..d)
        .map(|j| {
            let row = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            (row * n + j) as u16
        })
        .collect();
    Key::from_cells(cells)
}

fn check_context(m: &Rep<Single>) -> Result<()> {
    let (n, d) = (m.grading().n, m.degree());
    if n < d {
        return Err(SymError::ContextTooSmall { need: d, have: n });
    }
    Ok(())
}

/// `f_d(M)`.
pub fn schur_functor(m: &Rep<Single>) -> Result<SymRep> {
    check_context(m)?;
    let g = m.grading();
    let (n, d) = (g.n, m.degree());
    let w = multilinear_weight(n, d);
    let dim = m.wdim(&w);
    let gens = (0..d.saturating_sub(1)).map(|i| (*m.block(&transposition_key(n, d, i))).clone()).collect();
    Ok(SymRep::new(m.field(), d, dim, gens)?)
}

/// `f_d(φ)`: the restriction of a module map to the multilinear weight space.
pub fn schur_functor_on_maps(phi: &HomMap<Single>) -> Result<ExactMatrix> {
    check_context(phi.source())?;
    let g = phi.source().grading();
    Ok((*phi.at(&multilinear_weight(g.n, phi.source().degree()))).clone())
}
