//! The symmetric group side: kS_d-modules, the Schur functor, Kronecker
//! products and sign twists, Ext over kS_d, the Mullineux map and the
//! comparison of Ext groups through the Schur functor.

pub mod group;
pub mod kn;
pub mod mullineux;
pub mod resolve;
pub mod schur;
pub mod serial;

pub use group::{hom_basis, kronecker, sign_twist, sym_dual, sym_hom, sym_iso, sym_sub, sym_sum};
pub use kn::{big_t_case, gamma_q_case, verify_kn, BoundaryCase, KnExpect, KnReport, KnRow};
pub use mullineux::{is_sym_simple, mullineux, sym_simple, sym_simples};
pub use polyrep::SymRep;
pub use resolve::{sym_ext, sym_ext_dims, SymExtOptions, SymResolution};
pub use schur::{multilinear_weight, schur_functor, schur_functor_on_maps};

use partitions::Partition;

#[derive(Debug, thiserror::Error)]
pub enum SymError {
    #[error("context too small: need n >= {need}, have n = {have}")]
    ContextTooSmall { need: usize, have: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("modules over different fields")]
    FieldMismatch,
    #[error("subspace is not stable under the group")]
    NotStable,
    #[error("partition {0} is not p-restricted")]
    NotRestricted(Partition),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("isomorphism test inconclusive")]
    Inconclusive,
    #[error("format error: {0}")]
    Format(String),
    #[error("assertion failed: {0}")]
    Assert(String),
    #[error(transparent)]
    Poly(#[from] polyrep::PolyError),
    #[error(transparent)]
    Mod(#[from] modkit::ModError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
}

pub type Result<T> = std::result::Result<T, SymError>;
