//! Internal tensor products of strict polynomial functors: a general
//! evaluator, closed formulas for `⊗^d`, `Λ^d`, `Q^d`, and the behaviour on
//! simples.

pub mod extend;
pub mod formulas;
pub mod internal;
pub mod presentation;
pub mod stein;

pub use extend::Extension;
pub use formulas::{internal_with_q, internal_with_tensorpower, internal_with_wedge};
pub use internal::{internal_general, internal_general_with, DEFAULT_MAX_DEGREE};
pub use presentation::{gamma_presentation, GammaPresentation};
pub use stein::{verify_stein_internal, SteinReport};

use partitions::Partition;

#[derive(Debug, thiserror::Error)]
pub enum DayError {
    #[error("context too small: need n >= {need}, have n = {have}")]
    ContextTooSmall { need: usize, have: usize },
    #[error("modules live in different contexts")]
    ContextMismatch,
    #[error("this formula needs an odd characteristic")]
    OddCharRequired,
    #[error("the head contains L{0}, which is not p-restricted")]
    HeadNotRestricted(Partition),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Poly(#[from] polyrep::PolyError),
    #[error(transparent)]
    Mod(#[from] modkit::ModError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
    #[error(transparent)]
    Sym(#[from] symbridge::SymError),
}

pub type Result<T> = std::result::Result<T, DayError>;
