//! Strict polynomial bifunctors as bicomodules over `S(n,d) ⊗ S(m,e)`:
//! exterior products `⊠`, restriction along `⊕`, the collapse
//! `Φ(B)(V) = B(V, V^(r))`, submodule lattices and Alperin diagrams, and
//! structure checks for Steinberg-type tensor products.

pub mod grading;
pub mod lattice;
pub mod ops;
pub mod verify;

pub use grading::{Bi, BiKey, BiRep, BiWeight};
pub use lattice::{alperin_diagram, Diagram, Lattice};
pub use ops::{boxplus, boxtimes, delta, phi};
pub use verify::{
    check_kunneth, check_product, verify_appendix_a, verify_steinberg_type, AppendixAReport, SteinbergReport,
};

use partitions::Partition;

#[derive(Debug, thiserror::Error)]
pub enum BiError {
    #[error("evaluation contexts do not match")]
    ContextMismatch,
    #[error("modules are defined over different fields")]
    FieldMismatch,
    #[error("composition factor L{0:?} is not restricted")]
    NotRestricted(Partition),
    #[error("{0} is not multiplicity-free")]
    NotMultiplicityFree(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Poly(#[from] polyrep::PolyError),
    #[error(transparent)]
    Mod(#[from] modkit::ModError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
}

pub type Result<T> = std::result::Result<T, BiError>;
