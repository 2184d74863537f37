//! Action-stable subspaces and their quotients.

use crate::homs::HomMap;
use crate::present::Gen;
use exactfield::{Echelon, ExactMatrix};
use polyrep::ops::{span_generated, subquotient, subquotient_with_source, SpanFn, SubquotientSource};
use polyrep::{Grading, Rep};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

struct Inner<G: Grading> {
    amb: Rep<G>,
    span: SpanFn<G>,
    cache: RwLock<HashMap<G::W, Arc<Vec<Vec<u8>>>>>,
}

/// A submodule of `ambient`, described by per-weight spanning sets.
#[derive(Clone)]
pub struct Submodule<G: Grading>(Arc<Inner<G>>);

impl<G: Grading> Submodule<G> {
    pub fn from_span(amb: &Rep<G>, span: SpanFn<G>) -> Self {
        Submodule(Arc::new(Inner { amb: amb.clone(), span, cache: Default::default() }))
    }

    pub fn generated(amb: &Rep<G>, gens: Vec<Gen<G>>) -> Self {
        Self::from_span(amb, span_generated(amb, gens))
    }

    pub fn whole(amb: &Rep<G>) -> Self {
        Self::from_span(amb, polyrep::ops::span_all(amb))
    }

    pub fn zero(amb: &Rep<G>) -> Self {
        Self::from_span(amb, polyrep::ops::span_zero::<G>())
    }

    pub fn image(phi: &Arc<HomMap<G>>) -> Self {
        if let Some((gens, images)) = phi.generator_images() {
            let g: Vec<Gen<G>> = gens.iter().zip(images).map(|((w, _), v)| (w.clone(), v.clone())).collect();
            return Self::generated(phi.target(), g);
        }
        let p = phi.clone();
        Self::from_span(phi.target(), Arc::new(move |w| p.at(w).column_space()))
    }

    pub fn kernel(phi: &Arc<HomMap<G>>) -> Self {
        let p = phi.clone();
        Self::from_span(phi.source(), Arc::new(move |w| p.at(w).kernel_basis()))
    }

    pub fn ambient(&self) -> &Rep<G> {
        &self.0.amb
    }

    /// Reduced echelon basis of the weight space `w`.
    pub fn at(&self, w: &G::W) -> Arc<Vec<Vec<u8>>> {
        if let Some(b) = self.0.cache.read().unwrap().get(w) {
            return b.clone();
        }
        let d = self.0.amb.wdim(w);
        let b = if d == 0 {
            vec![]
        } else {
            let mut e = Echelon::new(self.0.amb.field(), d);
            for v in (self.0.span)(w) {
                e.insert(v);
                if e.is_full() {
                    break;
                }
            }
            e.rref_rows()
        };
        let b = Arc::new(b);
        self.0.cache.write().unwrap().insert(w.clone(), b.clone());
        b
    }

    pub fn wdim(&self, w: &G::W) -> usize {
        self.at(w).len()
    }

    pub fn dim(&self) -> usize {
        let g = self.0.amb.grading();
        g.dominant_weights(self.0.amb.degree()).iter().map(|w| g.orbit_size(w) * self.wdim(w)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.0.amb.dim()
    }

    /// A span function reading the cached bases.
    pub fn span(&self) -> SpanFn<G> {
        let s = self.clone();
        Arc::new(move |w| s.at(w).to_vec())
    }

    pub fn contains(&self, other: &Submodule<G>) -> bool {
        let g = self.0.amb.grading();
        g.dominant_weights(self.0.amb.degree()).iter().all(|w| {
            let mine = self.at(w);
            let e = Echelon::from_rows(self.0.amb.field(), self.0.amb.wdim(w), mine.iter().cloned());
            other.at(w).iter().all(|v| e.contains(v))
        })
    }

    pub fn same_as(&self, other: &Submodule<G>) -> bool {
        let g = self.0.amb.grading();
        g.dominant_weights(self.0.amb.degree()).iter().all(|w| self.at(w) == other.at(w))
    }

    pub fn sum(&self, other: &Submodule<G>) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::from_span(&self.0.amb, Arc::new(move |w| {
            let mut v = a.at(w).to_vec();
            v.extend(b.at(w).iter().cloned());
            v
        }))
    }

    pub fn intersection(&self, other: &Submodule<G>) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let f = self.0.amb.field();
        let amb = self.0.amb.clone();
        Self::from_span(&self.0.amb, Arc::new(move |w| {
            let d = amb.wdim(w);
            let (x, y) = (a.at(w), b.at(w));
            if x.is_empty() || y.is_empty() {
                return vec![];
            }
            // kernel of [X | -Y]
            let mut cols: Vec<Vec<u8>> = x.to_vec();
            cols.extend(y.iter().map(|v| v.iter().map(|&c| f.neg(c)).collect::<Vec<u8>>()));
            let m = ExactMatrix::from_columns(f, d, &cols);
            let xm = ExactMatrix::from_columns(f, d, &x);
            m.kernel_basis().into_iter().map(|k| xm.mul_vec(&k[..x.len()])).collect()
        }))
    }

    /// The submodule as a module in its own right.
    pub fn as_rep(&self, label: impl Into<String>) -> Rep<G> {
        subquotient(&self.0.amb, self.span(), polyrep::ops::span_zero::<G>(), label)
    }

    pub fn as_rep_with_source(&self, label: impl Into<String>) -> (Rep<G>, Arc<SubquotientSource<G>>) {
        subquotient_with_source(&self.0.amb, self.span(), polyrep::ops::span_zero::<G>(), label)
    }

    /// `ambient / self` with its source (for lifting submodules back).
    pub fn quotient(&self, label: impl Into<String>) -> (Rep<G>, Arc<SubquotientSource<G>>) {
        subquotient_with_source(&self.0.amb, polyrep::ops::span_all(&self.0.amb), self.span(), label)
    }

    /// `self / lower` for a submodule `lower ⊆ self`.
    pub fn over(&self, lower: &Submodule<G>, label: impl Into<String>) -> Rep<G> {
        subquotient(&self.0.amb, self.span(), lower.span(), label)
    }

    /// Preimage in the ambient module of a submodule of a quotient `ambient/U`.
    pub fn lift(q: &Arc<SubquotientSource<G>>, sub: &Submodule<G>) -> Self {
        let (q, sub) = (q.clone(), sub.clone());
        let amb = q.ambient().clone();
        Self::from_span(&amb, Arc::new(move |w| {
            let d = q.weight_data(w);
            let mut out = d.lower.clone();
            for v in sub.at(w).iter() {
                out.push(d.basis.mul_vec(v));
            }
            out
        }))
    }

    /// Push a submodule of `self.as_rep_with_source()` forward into the ambient module.
    pub fn push_forward(src: &Arc<SubquotientSource<G>>, sub: &Submodule<G>) -> Self {
        let (q, sub) = (src.clone(), sub.clone());
        let amb = q.ambient().clone();
        Self::from_span(&amb, Arc::new(move |w| {
            let d = q.weight_data(w);
            sub.at(w).iter().map(|v| d.basis.mul_vec(v)).collect()
        }))
    }

    /// Verify action stability on the generating keys.
    pub fn is_stable(&self) -> bool {
        let amb = &self.0.amb;
        let g = amb.grading();
        let f = amb.field();
        for k in g.generator_keys(amb.degree()) {
            let (o, i) = (g.rowsum(&k), g.colsum(&k));
            if amb.wdim(&o) == 0 {
                continue;
            }
            let e = Echelon::from_rows(f, amb.wdim(&o), self.at(&o).iter().cloned());
            for v in self.at(&i).iter() {
                if !e.contains(&amb.act(&k, v)) {
                    return false;
                }
            }
        }
        true
    }
}
