//! The basic functors: S^a, Λ^a, Γ^a, ⊗^a, the constants and the truncated
//! symmetric powers Q^a.
//!
//! Canonical bases: monomials (S, Γ, Q) and subsets (Λ) are determined by
//! their weight, so those weight spaces are one-dimensional; ⊗^a uses words in
//! lexicographic order inside each weight space. The divided power basis
//! vector of weight μ is the orbit sum of the words of content μ, which makes
//! the inclusion Γ^a ⊂ ⊗^a explicit (see [`div_inclusion`]).

use crate::grading::Grading;
use crate::comod::{Comod, Rep, Source};
use crate::grading::{factorial, Key, Single, Weight};
use exactfield::{ExactMatrix, FieldSpec};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Which basic functor to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicKind {
    Sym,
    Wedge,
    Div,
    TensorPower,
    Nat,
}

fn ratio_mod(f: FieldSpec, num: u64, den: u64) -> u8 {
    debug_assert_eq!(num % den, 0);
    ((num / den) % f.p() as u64) as u8
}

struct SymSource {
    g: Single,
    a: usize,
}
impl Source<Single> for SymSource {
    fn wdim(&self, w: &Weight) -> usize {
        usize::from(w.total() == self.a)
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        // x^λ ↦ Π_j (Σ_i g_ij x_i)^{λ_j}: coefficient Π_j λ_j! / Π E_ij!
        let n = self.g.n;
        let m = k.to_matrix(n);
        let lam = k.colsum(n);
        let num: u64 = lam.0.iter().map(|&x| factorial(x as usize)).product();
        let den: u64 = m.iter().map(|&x| factorial(x)).product();
        ExactMatrix::from_row_vecs(self.g.f, 1, &[vec![ratio_mod(self.g.f, num, den)]])
    }
}

struct DivSource {
    g: Single,
    a: usize,
}
impl Source<Single> for DivSource {
    fn wdim(&self, w: &Weight) -> usize {
        usize::from(w.total() == self.a)
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        // orbit sums: coefficient Π_i μ_i! / Π E_ij!
        let n = self.g.n;
        let m = k.to_matrix(n);
        let mu = k.rowsum(n);
        let num: u64 = mu.0.iter().map(|&x| factorial(x as usize)).product();
        let den: u64 = m.iter().map(|&x| factorial(x)).product();
        ExactMatrix::from_row_vecs(self.g.f, 1, &[vec![ratio_mod(self.g.f, num, den)]])
    }
}

/// Truncated symmetric power: S^a modulo monomials with an exponent ≥ p.
struct QSource {
    g: Single,
    a: usize,
}
impl Source<Single> for QSource {
    fn wdim(&self, w: &Weight) -> usize {
        usize::from(w.total() == self.a && w.0.iter().all(|&x| (x as u32) < self.g.f.p()))
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        SymSource { g: self.g, a: self.a }.block(k)
    }
}

pub(crate) fn perm_sign_is_odd(seq: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

struct WedgeSource {
    g: Single,
    a: usize,
}
impl Source<Single> for WedgeSource {
    fn wdim(&self, w: &Weight) -> usize {
        usize::from(w.total() == self.a && w.0.iter().all(|&x| x <= 1))
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        let n = self.g.n;
        let f = self.g.f;
        let runs = k.runs();
        if runs.iter().any(|&(_, m)| m > 1) {
            return ExactMatrix::zeros(f, 1, 1);
        }
        let out_set: Vec<usize> = (0..n).filter(|&i| k.rowsum(n).0[i] == 1).collect();
        // cells sorted by (i, j); reorder by column j to read off σ
        let mut pairs: Vec<(usize, usize)> = runs.iter().map(|&(c, _)| (c as usize % n, c as usize / n)).collect();
        pairs.sort_unstable();
        let seq: Vec<usize> = pairs.iter().map(|&(_, i)| out_set.iter().position(|&x| x == i).unwrap()).collect();
        let v = if perm_sign_is_odd(&seq) { f.neg(1) } else { 1 };
        ExactMatrix::from_row_vecs(f, 1, &[vec![v]])
    }
}

/// Words of content `w` in lexicographic order, with their index.
pub struct WordTable {
    pub words: Vec<Vec<u8>>,
    pub index: HashMap<Vec<u8>, usize>,
}

pub fn words_of_content(w: &Weight) -> WordTable {
    let a = w.total();
    let mut words = Vec::new();
    let mut cur = Vec::with_capacity(a);
    let mut rem = w.to_vec();
    fn rec(a: usize, cur: &mut Vec<u8>, rem: &mut Vec<usize>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(a, cur, rem, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    rec(a, &mut cur, &mut rem, &mut words);
    let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    WordTable { words, index }
}

/// ⊗^a on words.
pub struct PowSource {
    g: Single,
    a: usize,
    tables: Mutex<HashMap<Weight, Arc<WordTable>>>,
}

impl PowSource {
    pub fn new(g: Single, a: usize) -> Self {
        PowSource { g, a, tables: Default::default() }
    }
    pub fn words(&self, w: &Weight) -> Arc<WordTable> {
        if let Some(t) = self.tables.lock().unwrap().get(w) {
            return t.clone();
        }
        let t = Arc::new(words_of_content(w));
        self.tables.lock().unwrap().insert(w.clone(), t.clone());
        t
    }
}

impl Source<Single> for PowSource {
    fn wdim(&self, w: &Weight) -> usize {
        if w.total() != self.a {
            return 0;
        }
        crate::grading::multinomial(&w.to_vec()) as usize
    }
    fn block(&self, k: &Key) -> ExactMatrix {
        let n = self.g.n;
        let (mu, lam) = (k.rowsum(n), k.colsum(n));
        let (wo, wi) = (self.words(&mu), self.words(&lam));
        let mut m = ExactMatrix::zeros(self.g.f, wo.words.len(), wi.words.len());
        let mut rem = k.to_matrix(n);
        let mut cur = Vec::with_capacity(self.a);
        fn rec(
            n: usize, j: &[u8], rem: &mut Vec<usize>, cur: &mut Vec<u8>, col: usize, wo: &WordTable, m: &mut ExactMatrix,
        ) {
            let pos = cur.len();
            if pos == j.len() {
                m.add_at(wo.index[cur.as_slice()], col, 1);
                return;
            }
            let jj = j[pos] as usize;
            for i in 0..n {
                if rem[i * n + jj] > 0 {
                    rem[i * n + jj] -= 1;
                    cur.push(i as u8);
                    rec(n, j, rem, cur, col, wo, m);
                    cur.pop();
                    rem[i * n + jj] += 1;
                }
            }
        }
        for (col, j) in wi.words.iter().enumerate() {
            rec(n, j, &mut rem, &mut cur, col, &wo, &mut m);
        }
        m
    }
}

/// The constant module k^m in degree 0.
struct ConstSource {
    f: FieldSpec,
    m: usize,
}
impl Source<Single> for ConstSource {
    fn wdim(&self, w: &Weight) -> usize {
        if w.total() == 0 {
            self.m
        } else {
            0
        }
    }
    fn block(&self, _k: &Key) -> ExactMatrix {
        ExactMatrix::identity(self.f, self.m)
    }
}

pub fn sym(g: Single, a: usize) -> Rep<Single> {
    Comod::new(g, a, format!("Sym[{a}]"), Arc::new(SymSource { g, a }))
}
pub fn div(g: Single, a: usize) -> Rep<Single> {
    Comod::new(g, a, format!("Div[{a}]"), Arc::new(DivSource { g, a }))
}
pub fn wedge(g: Single, a: usize) -> Rep<Single> {
    Comod::new(g, a, format!("Wedge[{a}]"), Arc::new(WedgeSource { g, a }))
}
pub fn tensor_power(g: Single, a: usize) -> Rep<Single> {
    Comod::new(g, a, format!("Pow[{a}]"), Arc::new(PowSource::new(g, a)))
}
pub fn nat(g: Single) -> Rep<Single> {
    Comod::new(g, 1, "Nat", Arc::new(SymSource { g, a: 1 }))
}
/// Q^a: the quotient of S^a by the monomials having an exponent ≥ p.
pub fn q_trunc(g: Single, a: usize) -> Rep<Single> {
    Comod::new(g, a, format!("Q[{a}]"), Arc::new(QSource { g, a }))
}
/// The degree-0 module k^m (k for m = 1).
pub fn constant(g: Single, m: usize) -> Rep<Single> {
    let label = if m == 1 { "k".to_string() } else { format!("k^{m}") };
    Comod::new(g, 0, label, Arc::new(ConstSource { f: g.f, m }))
}

/// The zero module of degree `d`.
pub fn zero_module<G: Grading>(g: G, d: G::D) -> Rep<G> {
    let src = crate::comod::ExplicitSource { f: g.field(), g: g.clone(), wdims: HashMap::new(), blocks: HashMap::new() };
    Comod::new(g, d, "0", Arc::new(src))
}

pub fn build_basic(kind: BasicKind, a: usize, g: Single) -> Rep<Single> {
    match kind {
        BasicKind::Sym => sym(g, a),
        BasicKind::Wedge => wedge(g, a),
        BasicKind::Div => div(g, a),
        BasicKind::TensorPower => tensor_power(g, a),
        BasicKind::Nat => {
            assert_eq!(a, 1, "Nat has degree 1");
            nat(g)
        }
    }
}

/// The inclusion Γ^a → ⊗^a at weight `w`: the orbit-sum column vector.
pub fn div_inclusion(w: &Weight) -> Vec<u8> {
    let t = words_of_content(w);
    vec![1; t.words.len()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u8, n: usize) -> Single {
        Single::new(FieldSpec::new(p as u32).unwrap(), n)
    }

    #[test]
    fn dimensions() {
        let g = ctx(2, 2);
        assert_eq!(sym(g, 2).dim(), 3);
        assert_eq!(wedge(g, 2).dim(), 1);
        assert_eq!(div(g, 0).dim(), 1);
        let g3 = ctx(3, 3);
        assert_eq!(tensor_power(g3, 3).dim(), 27);
        assert_eq!(sym(g3, 3).dim(), 10);
        assert_eq!(wedge(g3, 2).dim(), 3);
        assert_eq!(q_trunc(g3, 3).dim(), 10 - 3);
    }

    #[test]
    fn weight_spaces() {
        let g = ctx(2, 3);
        let t = tensor_power(g, 3);
        assert_eq!(t.wdim(&Weight::new(&[1, 1, 1])), 6);
        let s = sym(ctx(2, 2), 2);
        for w in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(s.wdim(&Weight::new(&w)), 1);
        }
        assert_eq!(wedge(ctx(2, 2), 2).wdim(&Weight::new(&[1, 1])), 1);
    }

    #[test]
    fn sym_block_is_binomial() {
        // x_1^2 ↦ (g11 x1 + g21 x2)^2 has coefficient 2 on g11 g21
        let g = ctx(3, 2);
        let s = sym(g, 2);
        let k = Key::from_matrix(2, &[1, 0, 1, 0]);
        assert_eq!(s.block(&k).get(0, 0), 2);
    }

    #[test]
    fn pow_block_counts_pairings() {
        let g = ctx(5, 2);
        let t = tensor_power(g, 2);
        // E = [[1,1],[0,0]]: e1⊗e2 ↦ e1⊗e1 with coefficient g11 g12
        let k = Key::from_matrix(2, &[1, 1, 0, 0]);
        let b = t.block(&k);
        assert_eq!((b.rows(), b.cols()), (1, 2));
        assert_eq!(b.row(0), &[1, 1]);
    }
}
