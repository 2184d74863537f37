use crate::vector::{axpy, scale};
use crate::{FieldSpec, LinAlgError, Result};
use std::fmt;

/// A matrix over `F_p`.
///
/// Storage is dense row-major (one byte per entry); the public view is the
/// sparse one: [`ExactMatrix::entries`] yields the nonzero `(row, col, value)`
/// triples in `(row, col)` order, and [`ExactMatrix::from_entries`] builds from
/// such triples. The weight-graded blocks handled downstream are small, so a
/// dense layout is both simpler and faster than a true sparse one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    f: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of [`ExactMatrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// A particular solution, or `None` when the system is inconsistent.
    pub particular: Option<Vec<u8>>,
    /// Basis of the homogeneous solution space.
    pub kernel: Vec<Vec<u8>>,
}

impl ExactMatrix {
    pub fn zeros(f: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix { f, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(f: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from integer rows (reduced mod p). All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(f: FieldSpec, rows: &[R]) -> Self {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut m = Self::zeros(f, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "jagged rows");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = f.reduce(x);
            }
        }
        m
    }

    /// Build from already-reduced row vectors.
    pub fn from_row_vecs(f: FieldSpec, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "jagged rows");
            data.extend_from_slice(r);
        }
        ExactMatrix { f, rows: rows.len(), cols, data }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(f: FieldSpec, rows: usize, cols: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(f, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    /// Build from sparse triples. Values are reduced mod p; duplicates add up.
    pub fn from_entries<I>(f: FieldSpec, rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut m = Self::zeros(f, rows, cols);
        for (r, c, v) in entries {
            if r >= rows {
                return Err(LinAlgError::DimensionMismatch { expected: rows, got: r });
            }
            if c >= cols {
                return Err(LinAlgError::DimensionMismatch { expected: cols, got: c });
            }
            let x = &mut m.data[r * cols + c];
            *x = f.add(*x, f.reduce(v));
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.f
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!(v < self.f.p() as u8);
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u8) {
        let x = &mut self.data[r * self.cols + c];
        *x = self.f.add(*x, v);
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u8] {
        let c = self.cols;
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Nonzero entries in canonical `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.data.iter().enumerate().filter(|(_, &v)| v != 0).map(move |(k, &v)| (k / self.cols, k % self.cols, v))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.f != other.f {
            return Err(LinAlgError::FieldMismatch(self.f.p(), other.f.p()));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.f, self.rows, other.cols);
        for i in 0..self.rows {
            let (orow, _) = (i * other.cols, ());
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                axpy(self.f, &mut out.data[orow..orow + other.cols], a, src);
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix product shape")
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        let p = self.f.p() as u64;
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = 0u64;
                for (&a, &b) in row.iter().zip(v) {
                    acc += a as u64 * b as u64;
                }
                (acc % p) as u8
            })
            .collect()
    }

    /// `y += self * v`
    pub fn mul_vec_acc(&self, v: &[u8], y: &mut [u8]) {
        assert_eq!(v.len(), self.cols);
        assert_eq!(y.len(), self.rows);
        for (k, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..self.rows {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    y[i] = self.f.add(y[i], self.f.mul(a, c));
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        let mut out = self.clone();
        axpy(self.f, &mut out.data, 1, &other.data);
        out
    }

    pub fn add_scaled(&mut self, c: u8, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        axpy(self.f, &mut self.data, c, &other.data);
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(self.f.neg(1), other);
        out
    }

    pub fn scaled(&self, c: u8) -> Self {
        let mut out = self.clone();
        scale(self.f, &mut out.data, c);
        out
    }

    /// Kronecker product: `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(self.f, r, c);
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                out.data[(i * other.rows + k) * c + j * other.cols + l] = self.f.mul(a, b);
            }
        }
        out
    }

    /// Add `m` into the block whose top-left corner is `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, m: &Self) {
        assert!(r0 + m.rows <= self.rows && c0 + m.cols <= self.cols, "block out of range");
        for i in 0..m.rows {
            let dst = (r0 + i) * self.cols + c0;
            axpy(self.f, &mut self.data[dst..dst + m.cols], 1, m.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(self.f, rows, cols);
        for i in 0..rows {
            out.row_mut(i).copy_from_slice(&self.row(r0 + i)[c0..c0 + cols]);
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack rows");
        let mut out = Self::zeros(self.f, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        ExactMatrix { f: self.f, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(self.f, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + k] = self.get(i, j);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<u8>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_row_vecs(self.f, self.cols, &rows)
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.f;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            scale(f, &mut self.data[r * cols..(r + 1) * cols], inv);
            let pivot_row: Vec<u8> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let a = self.data[i * cols + c];
                if a != 0 {
                    axpy(f, &mut self.data[i * cols + c..(i + 1) * cols], f.neg(a), &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        crate::Echelon::from_rows(self.f, self.cols, self.row_vecs().into_iter()).rank()
    }

    /// Basis of the right null space, in canonical free-variable form: one
    /// vector per non-pivot column `f`, with a 1 in position `f`.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Solve `self * x = b`.
    pub fn solve(&self, b: &[u8]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let bm = Self::from_columns(self.f, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&bm);
        let (r, pivots) = aug.rref();
        let kernel = {
            let (ra, pa) = self.rref();
            kernel_from_rref(&ra, &pa)
        };
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution { particular: None, kernel });
        }
        let mut x = vec![0u8; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r.get(i, self.cols);
        }
        Ok(Solution { particular: Some(x), kernel })
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.f, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Indices of a maximal set of linearly independent columns (lowest indices first).
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Basis of the column space, as column vectors picked from `self`.
    pub fn column_space(&self) -> Vec<Vec<u8>> {
        self.pivot_columns().into_iter().map(|c| self.column(c)).collect()
    }
}

fn kernel_from_rref(r: &ExactMatrix, pivots: &[usize]) -> Vec<Vec<u8>> {
    let f = r.field();
    let mut is_pivot = vec![false; r.cols()];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..r.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u8; r.cols()];
        v[free] = 1;
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(r.get(i, free));
        }
        out.push(v);
    }
    out
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.f)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn rref_duplicate_rows() {
        let m = ExactMatrix::from_rows(f(2), &[[1, 1], [1, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0]);
        assert_eq!(r, ExactMatrix::from_rows(f(2), &[[1, 1], [0, 0]]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = ExactMatrix::identity(f(3), 3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let z = ExactMatrix::zeros(f(2), 2, 5);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(f(5), 4).kernel_basis().is_empty());
        let z = ExactMatrix::zeros(f(2), 1, 3);
        assert_eq!(z.kernel_basis(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let m = ExactMatrix::from_rows(f(2), &[[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let m = ExactMatrix::from_rows(f(2), &[[1, 1]]);
        let s = m.solve(&[1]).unwrap();
        assert_eq!(s.particular, Some(vec![1, 0]));
        assert_eq!(s.kernel, vec![vec![1, 1]]);
        let z = ExactMatrix::zeros(f(3), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap().particular, None);
        let id = ExactMatrix::identity(f(7), 3);
        assert_eq!(id.solve(&[3, 4, 6]).unwrap().particular, Some(vec![3, 4, 6]));
        assert!(id.solve(&[1]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ExactMatrix::from_rows(f(5), &[[1, 2], [3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(ExactMatrix::from_rows(f(2), &[[1, 1], [1, 1]]).inverse().is_none());
    }

    #[test]
    fn kron_shape() {
        let a = ExactMatrix::from_rows(f(3), &[[1, 2], [0, 1]]);
        let b = ExactMatrix::identity(f(3), 2);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k.get(0, 2), 2);
        assert_eq!(k.get(1, 3), 2);
        assert_eq!(k.get(2, 0), 0);
    }

    #[test]
    fn entries_are_canonical() {
        let m = ExactMatrix::from_entries(f(3), 2, 2, [(1, 0, 2), (0, 1, 1), (0, 1, 3)]).unwrap();
        let e: Vec<_> = m.entries().collect();
        assert_eq!(e, vec![(0, 1, 1), (1, 0, 2)]);
    }
}
