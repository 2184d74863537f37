use crate::{Echelon, ExactMatrix, FieldSpec, LinAlgError, Result};

/// A subspace of `F_p^ambient`, stored by its canonical (RREF) basis, so that
/// equal subspaces compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    f: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(f: FieldSpec, ambient: usize) -> Self {
        Subspace { f, ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(f: FieldSpec, ambient: usize) -> Self {
        Self::span(f, ambient, (0..ambient).map(|i| crate::vector::unit(ambient, i))).unwrap()
    }

    pub fn span<I: IntoIterator<Item = Vec<u8>>>(f: FieldSpec, ambient: usize, vectors: I) -> Result<Self> {
        let mut e = Echelon::new(f, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(LinAlgError::DimensionMismatch { expected: ambient, got: v.len() });
            }
            e.insert(v);
            if e.is_full() {
                break;
            }
        }
        let basis = e.rref_rows();
        let pivots = basis.iter().map(|r| crate::vector::leading(r).unwrap()).collect();
        Ok(Subspace { f, ambient, basis, pivots })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }
    pub fn field(&self) -> FieldSpec {
        self.f
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(self.f, self.ambient, &self.basis)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u8]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    /// (For an RREF basis these are just the entries of `v` at the pivots.)
    pub fn coordinates(&self, v: &[u8]) -> Result<Option<Vec<u8>>> {
        if v.len() != self.ambient {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        let c: Vec<u8> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut w = v.to_vec();
        for (b, &a) in self.basis.iter().zip(&c) {
            crate::vector::axpy(self.f, &mut w, self.f.neg(a), b);
        }
        Ok(crate::vector::is_zero(&w).then_some(c))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::span(self.f, self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Intersection via the kernel of the stacked system `[U | -V]`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.f, self.ambient));
        }
        let u = self.basis_matrix();
        let v = other.basis_matrix().scaled(self.f.neg(1));
        let ker = u.hstack(&v).kernel_basis();
        let vecs = ker.into_iter().map(|k| u.mul_vec(&k[..self.dim()]));
        Self::span(self.f, self.ambient, vecs)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Standard basis vectors completing this subspace to the ambient space.
    pub fn complement(&self) -> Vec<Vec<u8>> {
        let mut is_piv = vec![false; self.ambient];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_piv[c]).map(|c| crate::vector::unit(self.ambient, c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    #[test]
    fn self_intersection() {
        let u = Subspace::span(f2(), 3, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(u.intersection(&u).unwrap(), u);
    }

    #[test]
    fn complementary_coordinates() {
        let u = Subspace::span(f2(), 2, vec![vec![1, 0]]).unwrap();
        let v = Subspace::span(f2(), 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(u.intersection(&v).unwrap().dim(), 0);
        assert_eq!(u.sum(&v).unwrap(), Subspace::full(f2(), 2));
    }

    #[test]
    fn nested_sum() {
        let u = Subspace::span(f2(), 3, vec![vec![1, 1, 0]]).unwrap();
        let v = Subspace::span(f2(), 3, vec![vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(u.sum(&v).unwrap(), v);
        assert!(u.is_subspace_of(&v).unwrap());
        assert!(u.sum(&Subspace::zero(f2(), 2)).is_err());
    }
}
