//! Module-theoretic toolkit for polynomial representations: hom spaces,
//! submodules and quotients, simple/Weyl/costandard modules, socles and
//! radicals, Loewy series, composition factors and isomorphism tests.
//!
//! Everything except the construction of simples is generic over the
//! [`polyrep::Grading`], so the same code serves bifunctors.

pub mod build;
pub mod checks;
pub mod homs;
pub mod iso;
pub mod maps;
pub mod present;
pub mod simples;
pub mod structure;
pub mod submod;

pub use build::build;
pub use homs::{hom, HomMap, HomSpace};
pub use iso::{iso_test, IsoResult};
pub use present::{present, Presentation};
pub use simples::{costandard, simple, simples_of_degree, weyl, SimpleModule};
pub use structure::{
    composition_factors, head, is_simple, radical, socle, socle_series, HasSimples, SimpleData,
};
pub use submod::Submodule;

#[derive(Debug, thiserror::Error)]
pub enum ModError {
    #[error("context too small: need n >= {need}, have n = {have}")]
    ContextTooSmall { need: usize, have: usize },
    #[error("context mismatch")]
    ContextMismatch,
    #[error("subspace is not action-stable")]
    NotStable,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("internal assertion failed: {0}")]
    Assert(String),
    #[error(transparent)]
    Poly(#[from] polyrep::PolyError),
}

pub type Result<T> = std::result::Result<T, ModError>;

/// `Hom(M, N)` with a context check.
pub fn try_hom<G: polyrep::Grading>(m: &polyrep::Rep<G>, n: &polyrep::Rep<G>) -> Result<HomSpace<G>> {
    if m.grading() != n.grading() {
        return Err(ModError::ContextMismatch);
    }
    Ok(hom(m, n))
}

/// Kernel, image and quotient constructions with stability checks.
pub fn quotient<G: polyrep::Grading>(u: &Submodule<G>) -> Result<polyrep::Rep<G>> {
    if !u.is_stable() {
        return Err(ModError::NotStable);
    }
    Ok(u.quotient(format!("{}/U", u.ambient().label())).0)
}
