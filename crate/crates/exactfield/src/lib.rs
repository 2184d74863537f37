//! Exact linear algebra over prime fields `F_p`.
//!
//! Everything downstream (comodule coefficients, intertwiner systems,
//! resolutions) bottoms out in the matrices defined here. Matrices are
//! immutable-by-convention values; every elimination uses the same
//! deterministic pivot rule (scan columns left to right, take the lowest
//! row index with a nonzero entry), so results are reproducible bit for bit.

mod echelon;
mod field;
mod matrix;
mod subspace;

pub use echelon::Echelon;
pub use field::FieldSpec;
pub use matrix::{ExactMatrix, Solution};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
}

pub type Result<T> = std::result::Result<T, LinAlgError>;

/// Dense vector helpers shared by the matrix and echelon code.
pub mod vector {
    use crate::FieldSpec;

    /// `y += c * x`
    #[inline]
    pub fn axpy(f: FieldSpec, y: &mut [u8], c: u8, x: &[u8]) {
        debug_assert_eq!(y.len(), x.len());
        if c == 0 {
            return;
        }
        if f.p() == 2 {
            for (a, b) in y.iter_mut().zip(x) {
                *a ^= *b;
            }
            return;
        }
        let p = f.p() as u16;
        let c = c as u16;
        for (a, &b) in y.iter_mut().zip(x) {
            if b != 0 {
                *a = ((*a as u16 + c * b as u16) % p) as u8;
            }
        }
    }

    #[inline]
    pub fn scale(f: FieldSpec, y: &mut [u8], c: u8) {
        if c == 1 {
            return;
        }
        for a in y.iter_mut() {
            *a = f.mul(*a, c);
        }
    }

    pub fn is_zero(v: &[u8]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    pub fn dot(f: FieldSpec, a: &[u8], b: &[u8]) -> u8 {
        let p = f.p() as u64;
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc += x as u64 * y as u64;
        }
        (acc % p) as u8
    }

    pub fn unit(len: usize, i: usize) -> Vec<u8> {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    }

    /// Index of the first nonzero entry.
    pub fn leading(v: &[u8]) -> Option<usize> {
        v.iter().position(|&x| x != 0)
    }
}
