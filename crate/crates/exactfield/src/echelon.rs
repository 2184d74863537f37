use crate::vector::{axpy, is_zero, leading, scale};
use crate::FieldSpec;

/// Incremental row echelon form.
///
/// Rows are inserted one at a time; each stored row is normalised to have a
/// leading 1 and is reduced against all previously stored pivots. Reduction of
/// a query vector walks the rows in insertion order, which clears every pivot
/// column (a later row never has a nonzero entry in an earlier pivot column).
///
/// With tracking enabled, every stored row also remembers which combination of
/// the *inserted* vectors produced it, so membership queries can return
/// coordinates.
#[derive(Clone, Debug)]
pub struct Echelon {
    f: FieldSpec,
    width: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
    tracking: bool,
    combos: Vec<Vec<u8>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(f: FieldSpec, width: usize) -> Self {
        Echelon { f, width, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![None; width], tracking: false, combos: Vec::new(), inserted: 0 }
    }

    pub fn with_tracking(f: FieldSpec, width: usize) -> Self {
        Echelon { tracking: true, ..Self::new(f, width) }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<u8>>>(f: FieldSpec, width: usize, rows: I) -> Self {
        let mut e = Self::new(f, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> FieldSpec {
        self.f
    }
    pub fn width(&self) -> usize {
        self.width
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }
    /// Number of vectors offered to [`Echelon::insert`] so far.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduce `v` in place against the stored rows. When tracking, returns the
    /// combination `c` of inserted vectors with `v_original - v_reduced = Σ c_i u_i`.
    pub fn reduce(&self, v: &mut [u8]) -> Option<Vec<u8>> {
        assert_eq!(v.len(), self.width, "echelon width");
        let mut combo = self.tracking.then(|| vec![0u8; self.inserted]);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let a = v[pc];
            if a != 0 {
                axpy(self.f, v, self.f.neg(a), row);
                if let Some(c) = combo.as_mut() {
                    let src = &self.combos[self.pivot_row[pc].unwrap()];
                    axpy(self.f, &mut c[..src.len()], a, src);
                }
            }
        }
        combo
    }

    /// Insert a row; returns `true` if it was independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<u8>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let combo = self.reduce(&mut v);
        let Some(lead) = leading(&v) else {
            if self.tracking {
                for c in self.combos.iter_mut() {
                    c.resize(self.inserted, 0);
                }
            }
            return false;
        };
        let inv = self.f.inv(v[lead]);
        scale(self.f, &mut v, inv);
        if self.tracking {
            // stored = inv * (u_idx - combo)
            let mut c = combo.unwrap();
            c.resize(self.inserted, 0);
            for x in c.iter_mut() {
                *x = self.f.neg(*x);
            }
            c[idx] = 1;
            scale(self.f, &mut c, inv);
            for old in self.combos.iter_mut() {
                old.resize(self.inserted, 0);
            }
            self.combos.push(c);
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.pivots.push(lead);
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Coordinates of `v` with respect to the inserted vectors (tracking only).
    /// Returns `None` if `v` is not in the span.
    pub fn express(&self, v: &[u8]) -> Option<Vec<u8>> {
        assert!(self.tracking, "express requires a tracking echelon");
        let mut w = v.to_vec();
        let c = self.reduce(&mut w).unwrap();
        is_zero(&w).then_some(c)
    }

    /// Fully reduced basis (RREF rows), sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<Vec<u8>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vec<u8>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivs: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for i in (0..rows.len()).rev() {
            let (head, tail) = rows.split_at_mut(i);
            let pr = &tail[0];
            for r in head.iter_mut() {
                let a = r[pivs[i]];
                if a != 0 {
                    axpy(self.f, r, self.f.neg(a), pr);
                }
            }
        }
        rows
    }

    /// Standard basis vectors at the non-pivot columns: a complement of the span.
    pub fn complement(&self) -> Vec<Vec<u8>> {
        (0..self.width).filter(|&c| self.pivot_row[c].is_none()).map(|c| crate::vector::unit(self.width, c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracking_expresses_combinations() {
        let f = FieldSpec::new(3).unwrap();
        let mut e = Echelon::with_tracking(f, 3);
        assert!(e.insert(vec![1, 2, 0]));
        assert!(e.insert(vec![0, 1, 1]));
        assert!(!e.insert(vec![1, 0, 1])); // = u0 + u1 mod 3? (1,3,1) = (1,0,1)
        let c = e.express(&[2, 0, 2]).unwrap();
        // check the combination
        let mut acc = vec![0u8; 3];
        let vs = [vec![1u8, 2, 0], vec![0, 1, 1], vec![1, 0, 1]];
        for (k, v) in vs.iter().enumerate() {
            axpy(f, &mut acc, c[k], v);
        }
        assert_eq!(acc, vec![2, 0, 2]);
        assert!(e.express(&[0, 0, 1]).is_none());
    }
}
