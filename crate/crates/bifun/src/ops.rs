//! Exterior products, the twist-collapse functor `Φ(B)(V) = B(V, V^(r))`,
//! sum-diagonal restriction `F_⊞(V, W) = F(V ⊕ W)` and diagonal evaluation.

use crate::grading::{Bi, BiKey, BiRep, BiWeight};
use crate::{BiError, Result};
use exactfield::ExactMatrix;
use partitions::compositions;
use polyrep::{Comod, Grading, Key, Rep, Single, Source, Weight};
use std::collections::HashMap;
use std::sync::Arc;

struct BoxSource {
    a: Rep<Single>,
    b: Rep<Single>,
}

impl Source<Bi> for BoxSource {
    fn wdim(&self, w: &BiWeight) -> usize {
        self.a.wdim(&w.0) * self.b.wdim(&w.1)
    }
    fn block(&self, k: &BiKey) -> ExactMatrix {
        self.a.block(&k.0).kron(&self.b.block(&k.1))
    }
}

/// `M ⊠ N`: `coeff[(E, E')] = coeff_M[E] ⊗ coeff_N[E']`. The basis of the
/// weight space `(a, b)` is `u_i ⊗ v_j` at index `i·dim N_b + j`.
pub fn boxtimes(m: &Rep<Single>, n: &Rep<Single>) -> Result<BiRep> {
    if m.field() != n.field() {
        return Err(BiError::FieldMismatch);
    }
    Ok(boxtimes_unchecked(m, n))
}

pub(crate) fn boxtimes_unchecked(m: &Rep<Single>, n: &Rep<Single>) -> BiRep {
    let g = Bi::new(m.field(), m.grading().n, n.grading().n);
    let label = format!("{}⊠{}", m.label(), n.label());
    Comod::new(g, (m.degree(), n.degree()), label, Arc::new(BoxSource { a: m.clone(), b: n.clone() }))
}

/// The weight spaces of `Φ(B)` are `⊕_{a + p^r b = ν} B_{(a,b)}`.
pub struct PhiSource {
    b: BiRep,
    q: usize,
    n: usize,
}

impl PhiSource {
    /// The bi-weights making up the weight `ν`, with offsets and dimensions,
    /// in canonical order of the second component.
    pub fn components(&self, nu: &Weight) -> Vec<(BiWeight, usize, usize)> {
        let (_, e) = self.b.degree();
        let nu = nu.to_vec();
        let mut out = Vec::new();
        let mut off = 0;
        for bv in compositions(e, self.n) {
            let Some(a): Option<Vec<usize>> = nu.iter().zip(&bv).map(|(&x, &y)| x.checked_sub(self.q * y)).collect() else {
                continue;
            };
            let w = (Weight::new(&a), Weight::new(&bv));
            let d = self.b.wdim(&w);
            if d > 0 {
                out.push((w, off, d));
                off += d;
            }
        }
        out
    }

    /// Decompositions `K = E + p^r E'` with `E'` of the second degree.
    fn splits(&self, k: &Key) -> Vec<BiKey> {
        let n = self.n;
        let km = k.to_matrix(n);
        let bounds: Vec<usize> = km.iter().map(|&x| x / self.q).collect();
        let mut out = Vec::new();
        let mut cur = vec![0; km.len()];
        fn rec(i: usize, rem: usize, bounds: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == bounds.len() {
                if rem == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let tail: usize = bounds[i + 1..].iter().sum();
            for x in rem.saturating_sub(tail)..=bounds[i].min(rem) {
                cur[i] = x;
                rec(i + 1, rem - x, bounds, cur, out);
            }
            cur[i] = 0;
        }
        let mut raw = Vec::new();
        rec(0, self.b.degree().1, &bounds, &mut cur, &mut raw);
        for ep in raw {
            let e: Vec<usize> = km.iter().zip(&ep).map(|(&x, &y)| x - self.q * y).collect();
            out.push((Key::from_matrix(n, &e), Key::from_matrix(n, &ep)));
        }
        out
    }
}

impl Source<Single> for PhiSource {
    fn wdim(&self, w: &Weight) -> usize {
        self.components(w).iter().map(|c| c.2).sum()
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        let rows = self.components(&k.rowsum(self.n));
        let cols = self.components(&k.colsum(self.n));
        let ri: HashMap<BiWeight, usize> = rows.iter().map(|(w, o, _)| (w.clone(), *o)).collect();
        let ci: HashMap<BiWeight, usize> = cols.iter().map(|(w, o, _)| (w.clone(), *o)).collect();
        let (r, c) = (rows.iter().map(|x| x.2).sum(), cols.iter().map(|x| x.2).sum());
        let mut out = ExactMatrix::zeros(self.b.field(), r, c);
        let g = self.b.grading();
        for bk in self.splits(k) {
            let (Some(&ro), Some(&co)) = (ri.get(&g.rowsum(&bk)), ci.get(&g.colsum(&bk))) else {
                continue;
            };
            out.add_block(ro, co, &self.b.block(&bk));
        }
        out
    }
}

/// `Φ(B)(V) = B(V, V^(r))`, of degree `d + p^r e`.
pub fn phi(b: &BiRep, r: usize) -> Result<Rep<Single>> {
    Ok(phi_with_source(b, r)?.0)
}

pub fn phi_with_source(b: &BiRep, r: usize) -> Result<(Rep<Single>, Arc<PhiSource>)> {
    let g = *b.grading();
    if g.n != g.m {
        return Err(BiError::ContextMismatch);
    }
    let q = (g.f.p() as usize).pow(r as u32);
    let (d, e) = b.degree();
    let src = Arc::new(PhiSource { b: b.clone(), q, n: g.n });
    let label = if r == 0 { format!("Δ({})", b.label()) } else { format!("Φ{r}({})", b.label()) };
    Ok((Comod::new(g.left(), d + q * e, label, src.clone()), src))
}

/// Diagonal evaluation `B_Δ(V) = B(V, V)`.
pub fn delta(b: &BiRep) -> Result<Rep<Single>> {
    phi(b, 0)
}

struct BoxplusSource {
    f: Rep<Single>,
    n: usize,
    m: usize,
}

impl Source<Bi> for BoxplusSource {
    fn wdim(&self, w: &BiWeight) -> usize {
        let mut v = w.0.to_vec();
        v.extend(w.1.to_vec());
        self.f.wdim(&Weight::new(&v))
    }
    /// The coefficient of `x^E(g) x^E'(h)` in `ρ_F(diag(g, h))`.
    fn block(&self, k: &BiKey) -> ExactMatrix {
        let (n, m) = (self.n, self.m);
        let big = n + m;
        let mut dense = vec![0; big * big];
        let (a, b) = (k.0.to_matrix(n), k.1.to_matrix(m));
        for i in 0..n {
            for j in 0..n {
                dense[i * big + j] = a[i * n + j];
            }
        }
        for i in 0..m {
            for j in 0..m {
                dense[(n + i) * big + n + j] = b[i * m + j];
            }
        }
        self.f.block(&Key::from_matrix(big, &dense)).as_ref().clone()
    }
}

/// The bidegree components of `F_⊞ = F(− ⊕ −)` for `F` evaluated at
/// `k^{n+m}`: entry `i` has bidegree `(i, d − i)`.
pub fn boxplus(f: &Rep<Single>, n: usize, m: usize) -> Result<Vec<BiRep>> {
    if f.grading().n != n + m || n == 0 || m == 0 {
        return Err(BiError::ContextMismatch);
    }
    let g = Bi::new(f.field(), n, m);
    let d = f.degree();
    Ok((0..=d)
        .map(|i| {
            let src = Arc::new(BoxplusSource { f: f.clone(), n, m });
            Comod::new(g, (i, d - i), format!("{}⊞[{},{}]", f.label(), i, d - i), src as Arc<dyn Source<Bi>>)
        })
        .collect())
}

/// The vector `u ⊗ v` in the basis of `M ⊠ N` at one bi-weight.
pub fn kron_vec(f: exactfield::FieldSpec, u: &[u8], v: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for &x in u {
        for &y in v {
            out.push(f.mul(x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactfield::FieldSpec;
    use polyrep::{nat, sym, tensor, wedge};

    #[test]
    fn box_dims() {
        let g = Single::new(FieldSpec::new(2).unwrap(), 3);
        let b = boxtimes(&wedge(g, 2), &nat(g)).unwrap();
        assert_eq!(b.dim(), 9);
        assert_eq!(b.degree(), (2, 1));
    }

    #[test]
    fn delta_of_box_is_tensor() {
        let g = Single::new(FieldSpec::new(3).unwrap(), 2);
        let (a, b) = (sym(g, 2), nat(g));
        let d = delta(&boxtimes(&a, &b).unwrap()).unwrap();
        let t = tensor(&a, &b);
        for w in g.all_weights(3) {
            assert_eq!(d.wdim(&w), t.wdim(&w));
        }
        assert!(modkit::iso_test(&d, &t).is_iso());
    }

    #[test]
    fn phi_needs_square_context() {
        let f = FieldSpec::new(2).unwrap();
        let b = boxtimes(&nat(Single::new(f, 2)), &nat(Single::new(f, 3))).unwrap();
        assert!(matches!(phi(&b, 1), Err(BiError::ContextMismatch)));
    }
}
