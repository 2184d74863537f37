//! The general evaluator for the internal tensor product.
//!
//! For `n ≥ d`, `F ≅ Γ^{d,k^n} ⊗_{S(n,d)} F(k^n)` and
//! `Γ^{d,V} ⊗̲ G ≅ G(Hom(V, −))`, so by right exactness
//!
//! ```text
//! (F ⊗̲ G)(X) = G(Hom(k^n, X)) ⊗_{S(n,d)} F(k^n).
//! ```
//!
//! `G(Hom(k^n, X))` is `G(X ⊗ Y)` with `Y = k^n`, the Schur algebra acting on
//! the right through `Y` (`ξ_E` acts as the `Y`-coefficient of `E^T`).
//! Weight spaces split as `⊕_λ H_{α,λ} ⊗ F_λ` and the tensor relations come
//! from the algebra generators.

use crate::extend::Extension;
use crate::{DayError, Result};
use exactfield::ExactMatrix;
use polyrep::grading::contingency_tables;
use polyrep::ops::{span_all, subquotient};
use polyrep::{zero_module, Comod, Grading, Key, Rep, Single, Source, Weight};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Default degree cap for the general evaluator.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// `G(X ⊗ Y)` as a `GL(X) × GL(Y)` comodule, `X = Y = k^n`, index
/// `(x, y) ↦ x·n + y`.
struct TensorSubstitution {
    ext: Extension,
    n: usize,
    /// Components `ν` of `H_{α,λ}` with offsets.
    comps: RwLock<HashMap<(Weight, Weight), Arc<Vec<(Vec<usize>, usize, usize)>>>>,
}

impl TensorSubstitution {
    fn new(g: &Rep<Single>) -> Self {
        let n = g.grading().n;
        TensorSubstitution { ext: Extension::new(g, n * n), n, comps: Default::default() }
    }

    fn components(&self, alpha: &Weight, lambda: &Weight) -> Arc<Vec<(Vec<usize>, usize, usize)>> {
        let key = (alpha.clone(), lambda.clone());
        if let Some(c) = self.comps.read().unwrap().get(&key) {
            return c.clone();
        }
        let mut off = 0;
        let mut out = Vec::new();
        for nu in contingency_tables(&alpha.to_vec(), &lambda.to_vec()) {
            let d = self.ext.wdim(&nu);
            if d > 0 {
                out.push((nu, off, d));
                off += d;
            }
        }
        let out = Arc::new(out);
        self.comps.write().unwrap().insert(key, out.clone());
        out
    }

    fn dim(&self, alpha: &Weight, lambda: &Weight) -> usize {
        self.components(alpha, lambda).iter().map(|c| c.2).sum()
    }

    /// The coefficient of a key acting on one tensor variable.
    /// `on_x`: `E` acts on `X` (fixed `Y`-weight `fixed`), otherwise on `Y`
    /// (fixed `X`-weight).
    fn block(&self, e: &Key, fixed: &Weight, on_x: bool) -> ExactMatrix {
        let n = self.n;
        let big = n * n;
        let (w_out, w_in) = (e.rowsum(n), e.colsum(n));
        let (a_in, l_in, a_out, l_out) =
            if on_x { (w_in.clone(), fixed.clone(), w_out.clone(), fixed.clone()) } else { (fixed.clone(), w_in.clone(), fixed.clone(), w_out.clone()) };
        let src = self.components(&a_in, &l_in);
        let tgt = self.components(&a_out, &l_out);
        let f = self.ext_field();
        let mut m = ExactMatrix::zeros(f, tgt.iter().map(|c| c.2).sum(), src.iter().map(|c| c.2).sum());
        let em = e.to_matrix(n);
        let idx = |x: usize, y: usize| x * n + y;
        for (nu, so, _) in src.iter() {
            for (nu2, to, _) in tgt.iter() {
                // split E along the fixed variable: one piece per slice
                let slices: Vec<Vec<Vec<usize>>> = (0..n)
                    .map(|s| {
                        let (col, row): (Vec<usize>, Vec<usize>) = if on_x {
                            ((0..n).map(|x| nu[idx(x, s)]).collect(), (0..n).map(|x| nu2[idx(x, s)]).collect())
                        } else {
                            ((0..n).map(|y| nu[idx(s, y)]).collect(), (0..n).map(|y| nu2[idx(s, y)]).collect())
                        };
                        contingency_tables(&row, &col)
                    })
                    .collect();
                let mut choice = vec![0usize; n];
                let mut acc = vec![0usize; n * n];
                self.split(&slices, 0, &mut choice, &mut acc, &em, &mut |ch| {
                    let mut cells = Vec::new();
                    for (s, &c) in ch.iter().enumerate() {
                        let piece = &slices[s][c];
                        for a in 0..n {
                            for b in 0..n {
                                let (r, col) = if on_x { (idx(a, s), idx(b, s)) } else { (idx(s, a), idx(s, b)) };
                                for _ in 0..piece[a * n + b] {
                                    cells.push((r * big + col) as u16);
                                }
                            }
                        }
                    }
                    let blk = self.ext.block(&Key::from_cells(cells));
                    m.add_block(*to, *so, &blk);
                });
            }
        }
        m
    }

    fn split(
        &self,
        slices: &[Vec<Vec<usize>>],
        s: usize,
        choice: &mut Vec<usize>,
        acc: &mut Vec<usize>,
        target: &[usize],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if s == slices.len() {
            if acc.as_slice() == target {
                emit(choice);
            }
            return;
        }
        for (i, piece) in slices[s].iter().enumerate() {
            if piece.iter().zip(acc.iter()).zip(target).any(|((p, a), t)| p + a > *t) {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(piece) {
                *a += p;
            }
            choice[s] = i;
            self.split(slices, s + 1, choice, acc, target, emit);
            for (a, p) in acc.iter_mut().zip(piece) {
                *a -= p;
            }
        }
    }

    fn ext_field(&self) -> exactfield::FieldSpec {
        self.ext_rep().field()
    }

    fn ext_rep(&self) -> &Rep<Single> {
        self.ext.rep()
    }
}

/// The ambient `⊕_λ H_{α,λ} ⊗ F_λ` with the `X`-coaction.
struct AmbientSource {
    h: Arc<TensorSubstitution>,
    f: Rep<Single>,
    lambdas: Vec<Weight>,
}

impl AmbientSource {
    fn offsets(&self, alpha: &Weight) -> Vec<(usize, usize, usize)> {
        // (offset, dim H, dim F) per λ
        let mut off = 0;
        self.lambdas
            .iter()
            .map(|l| {
                let (a, b) = (self.h.dim(alpha, l), self.f.wdim(l));
                let o = off;
                off += a * b;
                (o, a, b)
            })
            .collect()
    }
}

impl Source<Single> for AmbientSource {
    fn wdim(&self, w: &Weight) -> usize {
        self.lambdas.iter().map(|l| self.h.dim(w, l) * self.f.wdim(l)).sum()
    }

    fn block(&self, k: &Key) -> ExactMatrix {
        let n = self.h.n;
        let (out, inp) = (k.rowsum(n), k.colsum(n));
        let (oo, oi) = (self.offsets(&out), self.offsets(&inp));
        let fs = self.f.field();
        let mut m = ExactMatrix::zeros(fs, self.wdim(&out), self.wdim(&inp));
        for (i, l) in self.lambdas.iter().enumerate() {
            let fd = oi[i].2;
            if fd == 0 || oi[i].1 == 0 || oo[i].1 == 0 {
                continue;
            }
            let hb = self.h.block(k, l, true);
            m.add_block(oo[i].0, oi[i].0, &hb.kron(&ExactMatrix::identity(fs, fd)));
        }
        m
    }
}

/// `F ⊗̲ G`. Zero when the degrees differ.
pub fn internal_general(f: &Rep<Single>, g: &Rep<Single>) -> Result<Rep<Single>> {
    internal_general_with(f, g, DEFAULT_MAX_DEGREE)
}

pub fn internal_general_with(f: &Rep<Single>, g: &Rep<Single>, max_degree: usize) -> Result<Rep<Single>> {
    let ctx = *f.grading();
    if ctx != *g.grading() {
        return Err(DayError::ContextMismatch);
    }
    let label = format!("({}) (x) ({})", f.label(), g.label());
    if f.degree() != g.degree() {
        return Ok(zero_module(ctx, f.degree()));
    }
    let d = f.degree();
    if ctx.n < d {
        return Err(DayError::ContextTooSmall { need: d, have: ctx.n });
    }
    if d > max_degree {
        return Err(DayError::BudgetExceeded(format!("degree {d} exceeds the cap {max_degree}")));
    }
    let h = Arc::new(TensorSubstitution::new(g));
    let lambdas: Vec<Weight> = ctx.all_weights(d).into_iter().filter(|l| f.wdim(l) > 0).collect();
    let amb_src = Arc::new(AmbientSource { h: h.clone(), f: f.clone(), lambdas });
    let amb = Comod::new(ctx, d, format!("amb {label}"), amb_src.clone());
    let gens = ctx.generator_keys(d);
    let src = amb_src.clone();
    let ff = f.clone();
    let lower = Arc::new(move |alpha: &Weight| {
        let fs = ff.field();
        let offs = src.offsets(alpha);
        let total = src.wdim(alpha);
        let pos: HashMap<&Weight, usize> = src.lambdas.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut rels = Vec::new();
        for e in &gens {
            let (lo, li) = (e.rowsum(ctx.n), e.colsum(ctx.n));
            // f ranges over F_λ; when F_λ' = 0 only the first term survives
            let Some(&ii) = pos.get(&li) else { continue };
            let io = pos.get(&lo).copied();
            let (hi, fi) = (offs[ii].1, offs[ii].2);
            let ho = src.h.dim(alpha, &lo);
            let fo = io.map_or(0, |i| offs[i].2);
            if ho == 0 {
                continue;
            }
            // h ∈ H_{α,λ'}, f ∈ F_λ:  (h·ξ_E) ⊗ f − h ⊗ (ξ_E f)
            let hy = src.h.block(&e.transpose(ctx.n), alpha, false); // H_{α,λ'} → H_{α,λ}
            let fe = ff.block(e); // F_λ → F_λ'
            for a in 0..ho {
                for b in 0..fi {
                    let mut v = vec![0u8; total];
                    for c in 0..hi {
                        let x = hy.get(c, a);
                        if x != 0 {
                            v[offs[ii].0 + c * fi + b] = x;
                        }
                    }
                    for c in 0..fo {
                        let x = fe.get(c, b);
                        if x != 0 {
                            let at = offs[io.unwrap()].0 + a * fo + c;
                            v[at] = fs.sub(v[at], x);
                        }
                    }
                    rels.push(v);
                }
            }
        }
        rels
    });
    Ok(subquotient(&amb, span_all(&amb), lower, label))
}
