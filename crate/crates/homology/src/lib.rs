//! Homological algebra for polynomial representations: projective
//! resolutions by the `Γ^λ`, Ext groups, the invariants `p(F,r)` and
//! `i(F,r)`, and checks of cup-product connectedness statements.

pub mod ext;
pub mod invariants;
pub mod resolution;
pub mod verify;

pub use ext::{ext, ext_dims, ExtComplex};
pub use invariants::{invariant_i, invariant_p, DetectionTarget, InvariantOptions, InvariantValue};
pub use resolution::{gamma_cover, resolve, CoverKind, GammaProjective, Resolution, ResolveOptions};

#[derive(Debug, thiserror::Error)]
pub enum HomologyError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("cover failure: {0}")]
    CoverFailure(String),
    #[error("assertion failed: {0}")]
    AssertFailure(String),
    #[error(transparent)]
    Mod(#[from] modkit::ModError),
    #[error(transparent)]
    Poly(#[from] polyrep::PolyError),
}

pub type Result<T> = std::result::Result<T, HomologyError>;
