//! Modules over the symmetric group algebra kS_d, given by the images of the
//! adjacent transpositions, and the functors ℓ_d and r_d from kS_d-modules
//! to polynomial functors.

use crate::basic::{constant, tensor_power};
use crate::comod::Rep;
use crate::grading::{Single, Weight};
use crate::ops::{subquotient, tensor, SpanFn};
use crate::{PolyError, Result};
use exactfield::{ExactMatrix, FieldSpec};
use std::sync::Arc;

/// A kS_d-module: `gens[i]` is the action of `s_{i+1} = (i+1, i+2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRep {
    f: FieldSpec,
    d: usize,
    dim: usize,
    gens: Vec<ExactMatrix>,
}

impl SymRep {
    /// Validates the Coxeter relations.
    pub fn new(f: FieldSpec, d: usize, dim: usize, gens: Vec<ExactMatrix>) -> Result<Self> {
        if gens.len() != d.saturating_sub(1) {
            return Err(PolyError::BadSymRep(format!("expected {} generators, got {}", d.saturating_sub(1), gens.len())));
        }
        for (i, s) in gens.iter().enumerate() {
            if s.rows() != dim || s.cols() != dim || s.field() != f {
                return Err(PolyError::BadSymRep(format!("generator {i} has wrong shape")));
            }
            if !s.mul(s).is_identity() {
                return Err(PolyError::BadSymRep(format!("s_{} is not an involution", i + 1)));
            }
            for (j, t) in gens.iter().enumerate().skip(i + 1) {
                let ok = if j == i + 1 { s.mul(t).mul(s) == t.mul(s).mul(t) } else { s.mul(t) == t.mul(s) };
                if !ok {
                    return Err(PolyError::BadSymRep(format!("relation between s_{} and s_{} fails", i + 1, j + 1)));
                }
            }
        }
        Ok(SymRep { f, d, dim, gens })
    }

    pub fn field(&self) -> FieldSpec {
        self.f
    }
    pub fn degree(&self) -> usize {
        self.d
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn gens(&self) -> &[ExactMatrix] {
        &self.gens
    }
    pub fn gen(&self, i: usize) -> &ExactMatrix {
        &self.gens[i]
    }

    pub fn trivial(f: FieldSpec, d: usize) -> Self {
        let one = ExactMatrix::identity(f, 1);
        SymRep::new(f, d, 1, vec![one; d.saturating_sub(1)]).unwrap()
    }

    pub fn sign(f: FieldSpec, d: usize) -> Self {
        let m = ExactMatrix::identity(f, 1).scaled(f.neg(1));
        SymRep::new(f, d, 1, vec![m; d.saturating_sub(1)]).unwrap()
    }

    /// The left regular module on permutations in one-line notation (lex order).
    pub fn regular(f: FieldSpec, d: usize) -> Self {
        let perms = permutations(d);
        let idx: std::collections::HashMap<&Vec<u8>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let gens = (0..d.saturating_sub(1))
            .map(|i| {
                let mut m = ExactMatrix::zeros(f, perms.len(), perms.len());
                for (c, p) in perms.iter().enumerate() {
                    // s_i ∘ σ swaps the values i, i+1
                    let q: Vec<u8> = p
                        .iter()
                        .map(|&x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x })
                        .collect();
                    m.set(idx[&q], c, 1);
                }
                m
            })
            .collect();
        SymRep::new(f, d, perms.len(), gens).unwrap()
    }

    /// Action of the permutation given by a word in the generators (applied right to left).
    pub fn word_action(&self, word: &[usize]) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.f, self.dim);
        for &i in word.iter().rev() {
            m = self.gens[i].mul(&m);
        }
        m
    }
}

/// All permutations of `0..d` in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; d];
    fn rec(d: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in 0..d {
            if !used[i] {
                used[i] = true;
                cur.push(i as u8);
                rec(d, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(d, &mut cur, &mut used, &mut out);
    out
}

fn ambient(g: Single, v: &SymRep) -> Result<Rep<Single>> {
    if g.f != v.f {
        return Err(PolyError::ContextMismatch("field of the kS_d-module".into()));
    }
    if g.n < v.d {
        return Err(PolyError::ContextTooSmall { need: v.d, have: g.n });
    }
    let t = tensor_power(g, v.d);
    let c = constant(g, v.dim);
    Ok(tensor(&t, &c))
}

/// The matrices of `x ⊗ v ↦ (x·s_i) ⊗ v` and `x ⊗ v ↦ x ⊗ s_i v` on the
/// weight space `w` of ⊗^d ⊗ V (basis: word index × dim V).
fn place_and_module_actions(w: &Weight, v: &SymRep, i: usize) -> (ExactMatrix, ExactMatrix) {
    let words = crate::basic::words_of_content(w);
    let m = v.dim;
    let dim = words.words.len() * m;
    let mut place = ExactMatrix::zeros(v.f, dim, dim);
    let mut module = ExactMatrix::zeros(v.f, dim, dim);
    for (a, word) in words.words.iter().enumerate() {
        let mut sw = word.clone();
        sw.swap(i, i + 1);
        let b = words.index[&sw];
        for k in 0..m {
            place.set(b * m + k, a * m + k, 1);
            for l in 0..m {
                let c = v.gens[i].get(l, k);
                if c != 0 {
                    module.set(a * m + l, a * m + k, c);
                }
            }
        }
    }
    (place, module)
}

/// ℓ_d(V) = ⊗^d ⊗_{kS_d} V, with S_d acting on the right by place permutations.
pub fn coinvariants_sd(g: Single, v: &SymRep) -> Result<Rep<Single>> {
    let amb = ambient(g, v)?;
    let vv = v.clone();
    let lower: SpanFn<Single> = Arc::new(move |w: &Weight| {
        let mut out = Vec::new();
        for i in 0..vv.d.saturating_sub(1) {
            let (pl, md) = place_and_module_actions(w, &vv, i);
            out.extend(pl.sub(&md).columns());
        }
        out
    });
    Ok(subquotient(&amb, crate::ops::span_all(&amb), lower, format!("l_{}(V)", v.d)))
}

/// r_d(V) = (⊗^d ⊗ V)^{S_d} for the diagonal action.
pub fn invariants_sd(g: Single, v: &SymRep) -> Result<Rep<Single>> {
    let amb = ambient(g, v)?;
    let vv = v.clone();
    let upper: SpanFn<Single> = Arc::new(move |w: &Weight| {
        let dim = crate::basic::words_of_content(w).words.len() * vv.dim;
        let mut stacked = ExactMatrix::zeros(vv.f, 0, dim);
        for i in 0..vv.d.saturating_sub(1) {
            let (pl, md) = place_and_module_actions(w, &vv, i);
            let a = pl.mul(&md).sub(&ExactMatrix::identity(vv.f, dim));
            stacked = stacked.vstack(&a);
        }
        stacked.kernel_basis()
    });
    Ok(subquotient(&amb, upper, crate::ops::span_zero::<Single>(), format!("r_{}(V)", v.d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::*;

    fn ctx(p: u32, n: usize) -> Single {
        Single::new(FieldSpec::new(p).unwrap(), n)
    }

    #[test]
    fn regular_module_relations() {
        let f = FieldSpec::new(3).unwrap();
        let r = SymRep::regular(f, 4);
        assert_eq!(r.dim(), 24);
        assert!(SymRep::new(f, 3, 1, vec![ExactMatrix::identity(f, 1).scaled(2), ExactMatrix::identity(f, 1)]).is_err());
    }

    #[test]
    fn adjoint_dimensions() {
        let g = ctx(3, 3);
        let f = g.f;
        // ℓ_d(trivial) ≅ S^d, r_d(trivial) ≅ Γ^d, both of dimension C(n+d-1, d)
        assert_eq!(coinvariants_sd(g, &SymRep::trivial(f, 3)).unwrap().dim(), sym(g, 3).dim());
        assert_eq!(invariants_sd(g, &SymRep::trivial(f, 3)).unwrap().dim(), div(g, 3).dim());
        // sign in odd characteristic gives Λ^d
        assert_eq!(coinvariants_sd(g, &SymRep::sign(f, 3)).unwrap().dim(), 1);
        assert_eq!(invariants_sd(g, &SymRep::sign(f, 3)).unwrap().dim(), 1);
        // regular module gives ⊗^d
        assert_eq!(coinvariants_sd(g, &SymRep::regular(f, 3)).unwrap().dim(), 27);
        assert!(matches!(coinvariants_sd(ctx(3, 2), &SymRep::trivial(f, 3)), Err(PolyError::ContextTooSmall { .. })));
    }
}
