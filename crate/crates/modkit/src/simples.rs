//! Weyl, costandard and simple modules.
//!
//! Tensor positions are routed by the Young diagram of λ filled `0..d` row
//! by row. Costandard: `∇_λ = im(Λ^{λ'} → ⊗^d → S^λ)` (antisymmetrise each
//! column, multiply each row). Weyl: `Δ_λ = im(Γ^λ → ⊗^d → Λ^{λ'})`
//! (symmetrise each row, wedge each column). `L_λ` is the image of the
//! generator of the one-dimensional space `Hom(Δ_λ, ∇_λ)`.

use crate::homs::HomSpace;
use crate::present::{present_with, Presentation};
use crate::{ModError, Result};
use exactfield::{ExactMatrix, FieldSpec};
use partitions::Partition;
use polyrep::ops::{span_generated, subquotient, SpanFn, TensorSource};
use polyrep::{constant, div, sym, wedge, Comod, Rep, Single, Weight};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A simple module together with its highest weight and a presentation on
/// its highest weight vector.
pub struct SimpleModule {
    pub lambda: Partition,
    pub hw: Weight,
    pub rep: Rep<Single>,
    pub pres: Presentation<Single>,
}

impl std::fmt::Debug for SimpleModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L{}", self.lambda)
    }
}

fn tensor_with_source(g: Single, factors: Vec<Rep<Single>>, label: String) -> (Rep<Single>, Arc<TensorSource>) {
    let deg = factors.iter().map(|f| f.degree()).sum();
    let src = TensorSource::new(g, factors);
    (Comod::new(g, deg, label, src.clone()), src)
}

fn check_len(g: Single, lambda: &Partition) -> Result<()> {
    if lambda.len() > g.n {
        return Err(ModError::ContextTooSmall { need: lambda.len(), have: g.n });
    }
    Ok(())
}

/// Weight vector (length n) of a set or multiset of letters.
fn content(n: usize, letters: impl Iterator<Item = usize>) -> Weight {
    let mut v = vec![0usize; n];
    for l in letters {
        v[l] += 1;
    }
    Weight::new(&v)
}

fn sign_of_sort(letters: &mut [usize]) -> Option<bool> {
    // bubble sort counting swaps; None on a repeated letter
    let mut odd = false;
    for i in 0..letters.len() {
        for j in 0..letters.len() - 1 - i {
            if letters[j] > letters[j + 1] {
                letters.swap(j, j + 1);
                odd = !odd;
            } else if letters[j] == letters[j + 1] {
                return None;
            }
        }
    }
    if letters.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

/// All arrangements (distinct orderings) of a multiset given by a content vector.
fn arrangements(content: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = content.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    let mut rem = content.to_vec();
    fn rec(total: usize, cur: &mut Vec<usize>, rem: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i);
                rec(total, cur, rem, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    rec(total, &mut cur, &mut rem, &mut out);
    out
}

/// The composite `Λ^{λ'} → ⊗^d → S^λ` at weight `mu`, as columns.
fn nabla_map(g: Single, lambda: &Partition, src: &TensorSource, tgt: &TensorSource, mu: &Weight) -> Vec<Vec<u8>> {
    let f = g.f;
    let conj = lambda.conjugate();
    let (ls, lt) = (src.layout(mu), tgt.layout(mu));
    let rows = lambda.len();
    let mut cols = Vec::with_capacity(ls.slots.len());
    for slot in &ls.slots {
        let mut out = vec![0u8; lt.dim];
        // column c holds the subset given by its weight, in increasing order
        let sets: Vec<Vec<usize>> = slot.weights.iter().map(|w| (0..g.n).filter(|&i| w.0[i] == 1).collect()).collect();
        let mut row_content = vec![vec![0usize; g.n]; rows];
        fn rec(
            c: usize, sets: &[Vec<usize>], row_content: &mut Vec<Vec<usize>>, odd: bool, f: FieldSpec,
            lt: &polyrep::ops::TensorLayout, out: &mut Vec<u8>,
        ) {
            if c == sets.len() {
                let key: Vec<Weight> = row_content.iter().map(|v| Weight::new(v)).collect();
                let idx = lt.slots[lt.index[&key]].offset;
                out[idx] = f.add(out[idx], if odd { f.neg(1) } else { 1 });
                return;
            }
            for perm in permutations_of(&sets[c]) {
                let (pm, podd) = perm;
                for (r, &l) in pm.iter().enumerate() {
                    row_content[r][l] += 1;
                }
                rec(c + 1, sets, row_content, odd ^ podd, f, lt, out);
                for (r, &l) in pm.iter().enumerate() {
                    row_content[r][l] -= 1;
                }
            }
        }
        debug_assert_eq!(sets.len(), conj.len());
        rec(0, &sets, &mut row_content, false, f, &lt, &mut out);
        cols.push(out);
    }
    cols
}

/// Permutations of a list of distinct items with their parity.
fn permutations_of(items: &[usize]) -> Vec<(Vec<usize>, bool)> {
    polyrep::symrep::permutations(items.len())
        .into_iter()
        .map(|p| {
            let idx: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            let mut tmp = idx.clone();
            let odd = sign_of_sort(&mut tmp).unwrap();
            (idx.iter().map(|&i| items[i]).collect(), odd)
        })
        .collect()
}

/// The composite `Γ^λ → ⊗^d → Λ^{λ'}` at weight `mu`, as columns.
fn delta_map(g: Single, lambda: &Partition, src: &TensorSource, tgt: &TensorSource, mu: &Weight) -> Vec<Vec<u8>> {
    let f = g.f;
    let conj = lambda.conjugate();
    let (ls, lt) = (src.layout(mu), tgt.layout(mu));
    let mut cols = Vec::with_capacity(ls.slots.len());
    for slot in &ls.slots {
        let mut out = vec![0u8; lt.dim];
        let words: Vec<Vec<Vec<usize>>> = slot.weights.iter().map(|w| arrangements(&w.to_vec())).collect();
        let mut grid: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
        fn rec(
            r: usize, words: &[Vec<Vec<usize>>], grid: &mut Vec<Vec<usize>>, conj: &Partition, n: usize, f: FieldSpec,
            lt: &polyrep::ops::TensorLayout, out: &mut Vec<u8>,
        ) {
            if r == words.len() {
                let mut odd = false;
                let mut key = Vec::with_capacity(conj.len());
                for c in 0..conj.len() {
                    let mut col: Vec<usize> = (0..conj.part(c)).map(|rr| grid[rr][c]).collect();
                    match sign_of_sort(&mut col) {
                        None => return,
                        Some(o) => odd ^= o,
                    }
                    key.push(content(n, col.into_iter()));
                }
                let idx = lt.slots[lt.index[&key]].offset;
                out[idx] = f.add(out[idx], if odd { f.neg(1) } else { 1 });
                return;
            }
            for w in &words[r] {
                grid[r] = w.clone();
                rec(r + 1, words, grid, conj, n, f, lt, out);
            }
        }
        rec(0, &words, &mut grid, &conj, g.n, f, &lt, &mut out);
        cols.push(out);
    }
    cols
}

struct Abw {
    /// S^λ (rows) and Λ^{λ'} (columns), Γ^λ (rows)
    s: (Rep<Single>, Arc<TensorSource>),
    l: (Rep<Single>, Arc<TensorSource>),
    gam: (Rep<Single>, Arc<TensorSource>),
}

fn abw(g: Single, lambda: &Partition) -> Abw {
    let conj = lambda.conjugate();
    let s = tensor_with_source(g, lambda.parts().iter().map(|&a| sym(g, a)).collect(), format!("S^{lambda}"));
    let l = tensor_with_source(g, conj.parts().iter().map(|&a| wedge(g, a)).collect(), format!("Wedge^{conj}"));
    let gam = tensor_with_source(g, lambda.parts().iter().map(|&a| div(g, a)).collect(), format!("Div^{lambda}"));
    Abw { s, l, gam }
}

/// The costandard module ∇_λ (written C[λ] / S_λ), as a submodule of S^λ.
pub fn costandard(g: Single, lambda: &Partition) -> Result<Rep<Single>> {
    check_len(g, lambda)?;
    if lambda.weight() == 0 {
        return Ok(constant(g, 1));
    }
    let a = abw(g, lambda);
    let (lam, ls, ss) = (lambda.clone(), a.l.1.clone(), a.s.1.clone());
    let span: SpanFn<Single> = Arc::new(move |w| nabla_map(g, &lam, &ls, &ss, w));
    Ok(subquotient(&a.s.0, span, polyrep::ops::span_zero::<Single>(), format!("C[{}]", parts_str(lambda))))
}

/// The Weyl module Δ_λ (written W[λ]), as a submodule of Λ^{λ'}.
pub fn weyl(g: Single, lambda: &Partition) -> Result<Rep<Single>> {
    check_len(g, lambda)?;
    if lambda.weight() == 0 {
        return Ok(constant(g, 1));
    }
    let a = abw(g, lambda);
    let (lam, gs, ls) = (lambda.clone(), a.gam.1.clone(), a.l.1.clone());
    let span: SpanFn<Single> = Arc::new(move |w| delta_map(g, &lam, &gs, &ls, w));
    Ok(subquotient(&a.l.0, span, polyrep::ops::span_zero::<Single>(), format!("W[{}]", parts_str(lambda))))
}

pub(crate) fn parts_str(l: &Partition) -> String {
    l.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn build_simple(g: Single, lambda: &Partition) -> Result<SimpleModule> {
    let hw = Weight::new(&lambda.padded(g.n));
    if lambda.weight() == 0 {
        let rep = constant(g, 1);
        let pres = present_with(&rep, vec![(hw.clone(), vec![1])]);
        return Ok(SimpleModule { lambda: lambda.clone(), hw, rep, pres });
    }
    let nabla = costandard(g, lambda)?;
    let delta = weyl(g, lambda)?;
    if delta.wdim(&hw) != 1 || nabla.wdim(&hw) != 1 {
        return Err(ModError::Assert(format!("highest weight space of Δ/∇ for {lambda} is not one-dimensional")));
    }
    let dp = present_with(&delta, vec![(hw.clone(), vec![1])]);
    let hs = HomSpace::from_presentation(&dp, &nabla);
    if hs.dim() != 1 {
        return Err(ModError::Assert(format!("dim Hom(Δ, ∇) = {} for {lambda}", hs.dim())));
    }
    // The image is generated by the image of the highest weight vector;
    // flatten it into S^λ so that L_λ is a single subquotient level.
    let a = abw(g, lambda);
    let nab_basis = {
        let lam = lambda.clone();
        let (ls, ss) = (a.l.1.clone(), a.s.1.clone());
        let cols = nabla_map(g, &lam, &ls, &ss, &hw);
        let e = exactfield::Echelon::from_rows(g.f, a.s.0.wdim(&hw), cols);
        e.rref_rows()
    };
    let img = hs.images(0)[0].clone();
    debug_assert_eq!(nab_basis.len(), 1);
    let mut v = vec![0u8; a.s.0.wdim(&hw)];
    exactfield::vector::axpy(g.f, &mut v, img[0], &nab_basis[0]);
    let rep = subquotient(&a.s.0, span_generated(&a.s.0, vec![(hw.clone(), v)]), polyrep::ops::span_zero::<Single>(), format!("L[{}]", parts_str(lambda)));
    let pres = present_with(&rep, vec![(hw.clone(), vec![1])]);
    Ok(SimpleModule { lambda: lambda.clone(), hw, rep, pres })
}

type SimpleCache = Mutex<HashMap<(u32, usize, Partition), Arc<SimpleModule>>>;

fn cache() -> &'static SimpleCache {
    static C: OnceLock<SimpleCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// The simple module L_λ (memoised per context).
pub fn simple(g: Single, lambda: &Partition) -> Result<Arc<SimpleModule>> {
    check_len(g, lambda)?;
    let key = (g.f.p(), g.n, lambda.clone());
    if let Some(s) = cache().lock().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let s = Arc::new(build_simple(g, lambda)?);
    cache().lock().unwrap().insert(key, s.clone());
    Ok(s)
}

/// All simples of degree `d` (requires `n ≥ d`), in descending lexicographic order.
pub fn simples_of_degree(g: Single, d: usize) -> Result<Vec<Arc<SimpleModule>>> {
    if g.n < d {
        return Err(ModError::ContextTooSmall { need: d, have: g.n });
    }
    partitions::enumerate_partitions(d, g.n).iter().map(|l| simple(g, l)).collect()
}

/// Simples with at most `n` parts (all simples that are nonzero at this `n`).
pub fn simples_up_to_n(g: Single, d: usize) -> Result<Vec<Arc<SimpleModule>>> {
    partitions::enumerate_partitions(d, g.n).iter().map(|l| simple(g, l)).collect()
}

/// The matrix of a weight-space inclusion, for tests: columns of ∇_λ inside S^λ.
pub fn costandard_in_sym(g: Single, lambda: &Partition, mu: &Weight) -> ExactMatrix {
    let a = abw(g, lambda);
    let cols = nabla_map(g, lambda, &a.l.1, &a.s.1, mu);
    ExactMatrix::from_columns(g.f, a.s.0.wdim(mu), &cols)
}
