//! Homogeneous polynomial representations of GL_n over a prime field,
//! realised as comodules over the degree-`d` coefficient coalgebra of `n×n`
//! matrices.
//!
//! The comodule structure is stored as blocks: `coeff[E]` for an exponent
//! matrix `E` maps the weight space `colsum(E)` to `rowsum(E)`. Blocks are
//! produced lazily by a [`Source`] and memoised, so large modules are never
//! materialised unless serialised or fully checked.

pub mod basic;
pub mod check;
pub mod comod;
pub mod expr;
pub mod grading;
pub mod ops;
pub mod serial;
pub mod symrep;

pub use basic::{build_basic, constant, div, nat, q_trunc, sym, tensor_power, wedge, zero_module, BasicKind};
pub use comod::{Comod, ExplicitSource, Rep, Source};
pub use expr::FunctorExpr;
pub use grading::{Grading, Key, Single, Weight};
pub use ops::{direct_sum, dual, projective, subquotient, tensor, tensor_many, tensor_with_source, twist, SpanFn};
pub use symrep::{coinvariants_sd, invariants_sd, SymRep};

/// The evaluation context: the prime field and the dimension `n`.
pub type RepContext = Single;
/// A one-variable comodule.
pub type PolyRep = Comod<Single>;

#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("context too small: need n >= {need}, have n = {have}")]
    ContextTooSmall { need: usize, have: usize },
    #[error("bad weight {0}")]
    BadWeight(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid symmetric group module: {0}")]
    BadSymRep(String),
    #[error(transparent)]
    LinAlg(#[from] exactfield::LinAlgError),
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Basis of the weight space `μ` as vectors in the flat basis (the image of
/// the projector `coeff[diag μ]`).
pub fn weight_space(m: &PolyRep, mu: &[usize]) -> Result<Vec<Vec<u8>>> {
    let g = m.grading();
    if mu.len() != g.n || mu.iter().sum::<usize>() != m.degree() {
        return Err(PolyError::BadWeight(format!("{mu:?}")));
    }
    let w = Weight::new(mu);
    let dim = m.dim();
    let layout = m.layout();
    let Some((_, off, d)) = layout.into_iter().find(|(x, _, _)| *x == w) else { return Ok(vec![]) };
    Ok((0..d).map(|i| exactfield::vector::unit(dim, off + i)).collect())
}
