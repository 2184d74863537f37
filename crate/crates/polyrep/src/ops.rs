//! Operations on comodules: tensor products, Frobenius twists, duals, direct
//! sums, subquotients and the projectives Γ^λ realised as left ideals.

use crate::comod::{Comod, Rep, Source};
use crate::grading::{Grading, Key, Single, Weight};
use exactfield::{Echelon, ExactMatrix};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

// ---------------------------------------------------------------- tensor

/// Layout of a tensor-product weight space: factor weights, offset, factor dims.
#[derive(Clone, Debug)]
pub struct TensorSlot {
    pub weights: Vec<Weight>,
    pub offset: usize,
    pub dims: Vec<usize>,
}

pub struct TensorLayout {
    pub slots: Vec<TensorSlot>,
    pub index: HashMap<Vec<Weight>, usize>,
    pub dim: usize,
}

/// n-ary tensor product of one-variable comodules.
pub struct TensorSource {
    g: Single,
    factors: Vec<Rep<Single>>,
    layouts: Mutex<HashMap<Weight, Arc<TensorLayout>>>,
}

impl TensorSource {
    pub fn new(g: Single, factors: Vec<Rep<Single>>) -> Arc<Self> {
        for f in &factors {
            assert_eq!(f.grading(), &g, "tensor factors live over different contexts");
        }
        Arc::new(TensorSource { g, factors, layouts: Default::default() })
    }

    pub fn factors(&self) -> &[Rep<Single>] {
        &self.factors
    }

    pub fn layout(&self, mu: &Weight) -> Arc<TensorLayout> {
        if let Some(l) = self.layouts.lock().unwrap().get(mu) {
            return l.clone();
        }
        let mut slots = Vec::new();
        let mut cur: Vec<Weight> = Vec::new();
        let mut off = 0usize;
        self.enum_slots(0, mu.clone(), &mut cur, &mut slots, &mut off);
        let index = slots.iter().enumerate().map(|(i, s): (usize, &TensorSlot)| (s.weights.clone(), i)).collect();
        let l = Arc::new(TensorLayout { slots, index, dim: off });
        self.layouts.lock().unwrap().insert(mu.clone(), l.clone());
        l
    }

    fn enum_slots(&self, c: usize, rem: Weight, cur: &mut Vec<Weight>, out: &mut Vec<TensorSlot>, off: &mut usize) {
        if c == self.factors.len() {
            if rem.total() != 0 {
                return;
            }
            let dims: Vec<usize> = cur.iter().zip(&self.factors).map(|(w, f)| f.wdim(w)).collect();
            let size: usize = dims.iter().product();
            if size > 0 {
                out.push(TensorSlot { weights: cur.clone(), offset: *off, dims });
                *off += size;
            }
            return;
        }
        let d = self.factors[c].degree();
        for w in self.g.all_weights(d) {
            let Some(r2) = rem.checked_sub(&w) else { continue };
            if self.factors[c].wdim(&w) == 0 {
                continue;
            }
            cur.push(w);
            self.enum_slots(c + 1, r2, cur, out, off);
            cur.pop();
        }
    }
}

/// All ways of writing the multiset `runs` as an ordered sum of sub-multisets
/// of the given sizes.
pub(crate) fn split_key(runs: &[(u16, usize)], sizes: &[usize]) -> Vec<Vec<Key>> {
    let mut out = Vec::new();
    let mut rem: Vec<usize> = runs.iter().map(|r| r.1).collect();
    let mut cur: Vec<Key> = Vec::new();
    fn pick(
        runs: &[(u16, usize)], sizes: &[usize], rem: &mut Vec<usize>, cur: &mut Vec<Key>, out: &mut Vec<Vec<Key>>,
    ) {
        let c = cur.len();
        if c == sizes.len() {
            out.push(cur.clone());
            return;
        }
        if c + 1 == sizes.len() {
            let mut cells = Vec::new();
            for (t, &(cell, _)) in runs.iter().enumerate() {
                for _ in 0..rem[t] {
                    cells.push(cell);
                }
            }
            if cells.len() == sizes[c] {
                cur.push(Key(cells.into()));
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut take = vec![0usize; runs.len()];
        fn sub(
            t: usize, need: usize, runs: &[(u16, usize)], sizes: &[usize], rem: &mut Vec<usize>, take: &mut Vec<usize>,
            cur: &mut Vec<Key>, out: &mut Vec<Vec<Key>>,
        ) {
            if t == runs.len() {
                if need != 0 {
                    return;
                }
                let mut cells = Vec::new();
                for (u, &(cell, _)) in runs.iter().enumerate() {
                    for _ in 0..take[u] {
                        cells.push(cell);
                    }
                }
                for u in 0..runs.len() {
                    rem[u] -= take[u];
                }
                cur.push(Key(cells.into()));
                pick(runs, sizes, rem, cur, out);
                cur.pop();
                for u in 0..runs.len() {
                    rem[u] += take[u];
                }
                return;
            }
            let avail: usize = rem[t..].iter().sum();
            if avail < need {
                return;
            }
            for x in 0..=rem[t].min(need) {
                take[t] = x;
                sub(t + 1, need - x, runs, sizes, rem, take, cur, out);
            }
            take[t] = 0;
        }
        sub(0, sizes[c], runs, sizes, rem, &mut take, cur, out);
    }
    pick(runs, sizes, &mut rem, &mut cur, &mut out);
    out
}

impl Source<Single> for TensorSource {
    fn wdim(&self, w: &Weight) -> usize {
        self.layout(w).dim
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        let n = self.g.n;
        let (lo, li) = (self.layout(&k.rowsum(n)), self.layout(&k.colsum(n)));
        let mut m = ExactMatrix::zeros(self.g.f, lo.dim, li.dim);
        let sizes: Vec<usize> = self.factors.iter().map(|f| f.degree()).collect();
        'split: for parts in split_key(&k.runs(), &sizes) {
            let outs: Vec<Weight> = parts.iter().map(|e| e.rowsum(n)).collect();
            let ins: Vec<Weight> = parts.iter().map(|e| e.colsum(n)).collect();
            let (Some(&so), Some(&si)) = (lo.index.get(&outs), li.index.get(&ins)) else { continue };
            let mut acc: Option<ExactMatrix> = None;
            for (f, e) in self.factors.iter().zip(&parts) {
                let b = f.block(e);
                if b.is_zero() {
                    continue 'split;
                }
                acc = Some(match acc {
                    None => (*b).clone(),
                    Some(a) => a.kron(&b),
                });
            }
            let acc = acc.unwrap_or_else(|| ExactMatrix::identity(self.g.f, 1));
            m.add_block(lo.slots[so].offset, li.slots[si].offset, &acc);
        }
        m
    }
}

/// Tensor product of several one-variable comodules (degree 0 for an empty list).
pub fn tensor_many(g: Single, factors: Vec<Rep<Single>>) -> Rep<Single> {
    if factors.is_empty() {
        return crate::basic::constant(g, 1);
    }
    let deg = factors.iter().map(|f| f.degree()).sum();
    let label = factors.iter().map(|f| f.label().to_string()).collect::<Vec<_>>().join(" * ");
    Comod::new(g, deg, label, TensorSource::new(g, factors))
}

/// Like [`tensor_many`], also returning the source for access to layouts.
pub fn tensor_with_source(g: Single, factors: Vec<Rep<Single>>) -> (Rep<Single>, Arc<TensorSource>) {
    let deg = factors.iter().map(|f| f.degree()).sum();
    let label = factors.iter().map(|f| f.label().to_string()).collect::<Vec<_>>().join(" * ");
    let src = TensorSource::new(g, factors);
    (Comod::new(g, deg, label, src.clone()), src)
}

pub fn tensor(a: &Rep<Single>, b: &Rep<Single>) -> Rep<Single> {
    tensor_many(*a.grading(), vec![a.clone(), b.clone()])
}

// ---------------------------------------------------------------- twist

struct TwistSource {
    inner: Rep<Single>,
    q: usize,
}
impl Source<Single> for TwistSource {
    fn wdim(&self, w: &Weight) -> usize {
        w.div_exact(self.q).map_or(0, |v| self.inner.wdim(&v))
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        let n = self.inner.grading().n;
        match k.div_exact(self.q) {
            Some(e) => (*self.inner.block(&e)).clone(),
            None => ExactMatrix::zeros(self.inner.field(), self.wdim(&k.rowsum(n)), self.wdim(&k.colsum(n))),
        }
    }
}

/// Frobenius twist `M^{(r)}`: substitute `x_ij ↦ x_ij^{p^r}`.
pub fn twist(m: &Rep<Single>, r: usize) -> Rep<Single> {
    if r == 0 {
        return m.clone();
    }
    let q = partitions::pow(m.field().p() as usize, r);
    Comod::new(*m.grading(), m.degree() * q, format!("Tw({},{r})", m.label()), Arc::new(TwistSource { inner: m.clone(), q }))
}

// ---------------------------------------------------------------- dual

struct DualSource<G: Grading> {
    inner: Rep<G>,
}
impl<G: Grading> Source<G> for DualSource<G> {
    fn wdim(&self, w: &G::W) -> usize {
        self.inner.wdim(w)
    }
    fn block(&self, k: &G::K) -> ExactMatrix {
        self.inner.block(&self.inner.grading().transpose(k)).transpose()
    }
}

/// Contravariant duality: `coeff♯[E] = coeff[Eᵀ]ᵀ`.
pub fn dual<G: Grading>(m: &Rep<G>) -> Rep<G> {
    Comod::new(m.grading().clone(), m.degree(), format!("Dual({})", m.label()), Arc::new(DualSource { inner: m.clone() }))
}

// ---------------------------------------------------------------- sums

pub struct SumSource<G: Grading> {
    parts: Vec<Rep<G>>,
}
impl<G: Grading> SumSource<G> {
    pub fn parts(&self) -> &[Rep<G>] {
        &self.parts
    }
    /// Offset of each summand inside the weight space `w`.
    pub fn offsets(&self, w: &G::W) -> Vec<usize> {
        let mut o = 0;
        self.parts
            .iter()
            .map(|p| {
                let x = o;
                o += p.wdim(w);
                x
            })
            .collect()
    }
}
impl<G: Grading> Source<G> for SumSource<G> {
    fn wdim(&self, w: &G::W) -> usize {
        self.parts.iter().map(|p| p.wdim(w)).sum()
    }
    fn block(&self, k: &G::K) -> ExactMatrix {
        let g = self.parts[0].grading();
        let (o, i) = (g.rowsum(k), g.colsum(k));
        let mut m = ExactMatrix::zeros(g.field(), self.wdim(&o), self.wdim(&i));
        let (oo, oi) = (self.offsets(&o), self.offsets(&i));
        for (t, p) in self.parts.iter().enumerate() {
            let b = p.block(k);
            if b.rows() > 0 && b.cols() > 0 {
                m.add_block(oo[t], oi[t], &b);
            }
        }
        m
    }
}

/// Direct sum of comodules of the same degree.
pub fn direct_sum<G: Grading>(parts: Vec<Rep<G>>) -> Rep<G> {
    assert!(!parts.is_empty(), "empty direct sum needs an explicit degree");
    let deg = parts[0].degree();
    for p in &parts {
        assert_eq!(p.degree(), deg, "direct sum of modules of different degrees");
        assert_eq!(p.grading(), parts[0].grading(), "direct sum across contexts");
    }
    let g = parts[0].grading().clone();
    let label = parts.iter().map(|f| f.label().to_string()).collect::<Vec<_>>().join(" + ");
    Comod::new(g, deg, label, Arc::new(SumSource { parts }))
}

// ---------------------------------------------------------------- subquotients

/// A per-weight spanning set, in ambient coordinates.
pub type SpanFn<G> = Arc<dyn Fn(&<G as Grading>::W) -> Vec<Vec<u8>> + Send + Sync>;

pub fn span_all<G: Grading>(amb: &Rep<G>) -> SpanFn<G> {
    let amb = amb.clone();
    Arc::new(move |w| {
        let d = amb.wdim(w);
        (0..d).map(|i| exactfield::vector::unit(d, i)).collect()
    })
}

pub fn span_zero<G: Grading>() -> SpanFn<G> {
    Arc::new(|_| Vec::new())
}

/// Weight-space data of a subquotient `W/U`.
pub struct SqWeight {
    /// Ambient vectors forming a basis of `W_μ` modulo `U_μ` (as columns).
    pub basis: ExactMatrix,
    /// Left inverse: coordinates modulo `U` of any vector of `W_μ`.
    pub extract: ExactMatrix,
    /// Basis of `U_μ` (ambient coordinates).
    pub lower: Vec<Vec<u8>>,
}

pub struct SubquotientSource<G: Grading> {
    amb: Rep<G>,
    upper: SpanFn<G>,
    lower: SpanFn<G>,
    cache: Mutex<HashMap<G::W, Arc<SqWeight>>>,
}

impl<G: Grading> SubquotientSource<G> {
    pub fn ambient(&self) -> &Rep<G> {
        &self.amb
    }

    pub fn weight_data(&self, w: &G::W) -> Arc<SqWeight> {
        if let Some(d) = self.cache.lock().unwrap().get(w) {
            return d.clone();
        }
        let f = self.amb.field();
        let ad = self.amb.wdim(w);
        let mut ech = Echelon::new(f, ad);
        let mut lower = Vec::new();
        for u in (self.lower)(w) {
            if ech.insert(u.clone()) {
                lower.push(u);
            }
        }
        let mut q = Vec::new();
        for v in (self.upper)(w) {
            if ech.insert(v.clone()) {
                q.push(v);
            }
        }
        let k = q.len();
        let basis = ExactMatrix::from_columns(f, ad, &q);
        let extract = if k == 0 {
            ExactMatrix::zeros(f, 0, ad)
        } else {
            let mut cols = q.clone();
            cols.extend(lower.iter().cloned());
            let m = ExactMatrix::from_columns(f, ad, &cols);
            let rows = m.transpose().pivot_columns();
            let inv = m.select_rows(&rows).inverse().expect("independent columns");
            let mut x = ExactMatrix::zeros(f, k, ad);
            for i in 0..k {
                for (t, &r) in rows.iter().enumerate() {
                    x.set(i, r, inv.get(i, t));
                }
            }
            x
        };
        let d = Arc::new(SqWeight { basis, extract, lower });
        self.cache.lock().unwrap().insert(w.clone(), d.clone());
        d
    }
}

impl<G: Grading> Source<G> for SubquotientSource<G> {
    fn wdim(&self, w: &G::W) -> usize {
        self.weight_data(w).basis.cols()
    }
    fn block(&self, k: &G::K) -> ExactMatrix {
        let g = self.amb.grading();
        let (o, i) = (self.weight_data(&g.rowsum(k)), self.weight_data(&g.colsum(k)));
        o.extract.mul(&self.amb.block(k)).mul(&i.basis)
    }
}

/// The subquotient `W/U` of `amb`, where `upper` and `lower` span
/// action-stable subspaces `U ⊆ W`. Stability is the caller's contract;
/// [`crate::check`] verifies the result.
pub fn subquotient_with_source<G: Grading>(
    amb: &Rep<G>, upper: SpanFn<G>, lower: SpanFn<G>, label: impl Into<String>,
) -> (Rep<G>, Arc<SubquotientSource<G>>) {
    let src = Arc::new(SubquotientSource { amb: amb.clone(), upper, lower, cache: Default::default() });
    let rep = Comod::new(amb.grading().clone(), amb.degree(), label, src.clone());
    (rep, src)
}

pub fn subquotient<G: Grading>(amb: &Rep<G>, upper: SpanFn<G>, lower: SpanFn<G>, label: impl Into<String>) -> Rep<G> {
    subquotient_with_source(amb, upper, lower, label).0
}

/// Span of the submodule generated by weight vectors `(weight, vector)`.
pub fn span_generated<G: Grading>(amb: &Rep<G>, gens: Vec<(G::W, Vec<u8>)>) -> SpanFn<G> {
    let amb = amb.clone();
    Arc::new(move |w| {
        let g = amb.grading();
        let mut out = Vec::new();
        for (wt, v) in &gens {
            for k in g.tables(w, wt).iter() {
                let x = amb.act(k, v);
                if !exactfield::vector::is_zero(&x) {
                    out.push(x);
                }
            }
        }
        out
    })
}

// ---------------------------------------------------------------- projectives

/// The projective `S·ξ_λ` (≅ Γ^λ), with basis `{ξ_E : colsum E = λ}`.
pub struct ProjectiveSource<G: Grading> {
    g: G,
    lambda: G::W,
    index: Mutex<HashMap<G::W, Arc<HashMap<G::K, usize>>>>,
}

impl<G: Grading> ProjectiveSource<G> {
    pub fn new(g: G, lambda: G::W) -> Self {
        ProjectiveSource { g, lambda, index: Default::default() }
    }
    pub fn lambda(&self) -> &G::W {
        &self.lambda
    }
    pub fn index(&self, mu: &G::W) -> Arc<HashMap<G::K, usize>> {
        if let Some(i) = self.index.lock().unwrap().get(mu) {
            return i.clone();
        }
        let t = self.g.tables(mu, &self.lambda);
        let m: Arc<HashMap<G::K, usize>> = Arc::new(t.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect());
        self.index.lock().unwrap().insert(mu.clone(), m.clone());
        m
    }
}

impl<G: Grading> Source<G> for ProjectiveSource<G> {
    fn wdim(&self, w: &G::W) -> usize {
        self.g.tables(w, &self.lambda).len()
    }
    fn block(&self, k: &G::K) -> ExactMatrix {
        let (o, i) = (self.g.rowsum(k), self.g.colsum(k));
        let ti = self.g.tables(&i, &self.lambda);
        let io = self.index(&o);
        let f = self.g.field();
        let mut m = ExactMatrix::zeros(f, io.len(), ti.len());
        for (c, e) in ti.iter().enumerate() {
            for (gk, coef) in self.g.product(k, e).iter() {
                m.add_at(io[gk], c, *coef);
            }
        }
        m
    }
}

/// The projective module `S·ξ_λ`; `Hom(S·ξ_λ, N) ≅ N_λ`.
pub fn projective<G: Grading>(g: &G, deg: G::D, lambda: &G::W) -> Rep<G> {
    let label = format!("P{}", g.weight_string(lambda));
    Comod::new(g.clone(), deg, label, Arc::new(ProjectiveSource::new(g.clone(), lambda.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::*;
    use exactfield::FieldSpec;

    fn ctx(p: u32, n: usize) -> Single {
        Single::new(FieldSpec::new(p).unwrap(), n)
    }

    #[test]
    fn split_counts() {
        let k = Key::from_cells(vec![0, 0, 1]);
        let s = split_key(&k.runs(), &[1, 2]);
        assert_eq!(s.len(), 2);
        let s = split_key(&k.runs(), &[1, 1, 1]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn tensor_dims() {
        let g = ctx(2, 3);
        let t = tensor(&wedge(g, 2), &nat(g));
        assert_eq!(t.dim(), 9);
        assert_eq!(t.degree(), 3);
        let u = tensor(&sym(g, 2), &constant(g, 1));
        assert_eq!(u.dim(), 6);
    }

    #[test]
    fn twist_and_dual_dims() {
        let g = ctx(2, 2);
        let t = twist(&nat(g), 1);
        assert_eq!((t.dim(), t.degree()), (2, 2));
        let tt = twist(&twist(&nat(g), 1), 1);
        assert_eq!(tt.degree(), 4);
        let d = dual(&sym(g, 3));
        assert_eq!(d.dim(), 4);
    }

    #[test]
    fn projective_dims_match_gamma() {
        // S·ξ_λ ≅ Γ^{λ_1} ⊗ … ⊗ Γ^{λ_n}
        let g = ctx(2, 3);
        let lam = Weight::new(&[2, 1, 0]);
        let p = projective(&g, 3, &lam);
        let gam = tensor(&div(g, 2), &div(g, 1));
        assert_eq!(p.dim(), gam.dim());
        for w in g.all_weights(3) {
            assert_eq!(p.wdim(&w), gam.wdim(&w));
        }
    }
}
