//! Ext groups as the cohomology of `Hom(P_•, N)`, using
//! `Hom(Γ^λ, N) ≅ N_λ`.

use crate::resolution::{shared_resolution, Resolution, ResolveOptions, SharedResolution};
use crate::Result;
use exactfield::ExactMatrix;
use polyrep::{Grading, Rep};

/// The cochain complex `Hom(P_•, N)` of a shared resolution, with ranks of
/// its differentials memoised.
pub struct ExtComplex<G: Grading> {
    res: SharedResolution<G>,
    n: Rep<G>,
    ranks: Vec<usize>,
}

/// The coboundary `Hom(P_k, N) → Hom(P_{k+1}, N)` (precomposition with
/// `∂_{k+1}`), in the bases `⊕_i N_{λ_{k,i}}` and `⊕_j N_{λ_{k+1,j}}`.
pub fn coboundary<G: Grading>(res: &Resolution<G>, n: &Rep<G>, k: usize) -> ExactMatrix {
    let g = n.grading();
    let (src, dst) = (&res.stage(k).gens, &res.stage(k + 1).gens);
    let cdims: Vec<usize> = src.iter().map(|(w, _)| n.wdim(w)).collect();
    let rdims: Vec<usize> = dst.iter().map(|(w, _)| n.wdim(w)).collect();
    let mut m = ExactMatrix::zeros(n.field(), rdims.iter().sum(), cdims.iter().sum());
    let mut roff = 0;
    for (j, (mu, v)) in dst.iter().enumerate() {
        if rdims[j] > 0 {
            let (mut voff, mut coff) = (0, 0);
            for (i, (lam, _)) in src.iter().enumerate() {
                let t = g.tables(mu, lam);
                if cdims[i] > 0 {
                    for (s, key) in t.iter().enumerate() {
                        let c = v[voff + s];
                        if c != 0 {
                            let b = n.block(key);
                            let mut b = (*b).clone();
                            if c != 1 {
                                b = b.scaled(c);
                            }
                            m.add_block(roff, coff, &b);
                        }
                    }
                }
                voff += t.len();
                coff += cdims[i];
            }
        }
        roff += rdims[j];
    }
    m
}

impl<G: Grading> ExtComplex<G> {
    pub fn new(res: SharedResolution<G>, n: &Rep<G>) -> Self {
        ExtComplex { res, n: n.clone(), ranks: Vec::new() }
    }

    /// Using the process-wide resolution of `m`.
    pub fn for_modules(m: &Rep<G>, n: &Rep<G>, opts: &ResolveOptions) -> Self {
        Self::new(shared_resolution(m, opts), n)
    }

    fn rank(&mut self, k: usize) -> Result<usize> {
        while self.ranks.len() <= k {
            let i = self.ranks.len();
            let mut res = self.res.lock().unwrap();
            res.extend_to(i + 1)?;
            let r = coboundary(&res, &self.n, i).rank();
            self.ranks.push(r);
        }
        Ok(self.ranks[k])
    }

    fn cochain_dim(&self, k: usize) -> usize {
        let res = self.res.lock().unwrap();
        res.stage(k).gens.iter().map(|(w, _)| self.n.wdim(w)).sum()
    }

    /// `dim Ext^k(M, N)`.
    pub fn dim(&mut self, k: usize) -> Result<usize> {
        let m = self.res.lock().unwrap().target().clone();
        if m.degree() != self.n.degree() {
            return Ok(0);
        }
        let rk = self.rank(k)?;
        let prev = if k == 0 { 0 } else { self.rank(k - 1)? };
        Ok(self.cochain_dim(k) - rk - prev)
    }

    /// `dim Ext^0..=kmax`.
    pub fn dims(&mut self, kmax: usize) -> Result<Vec<usize>> {
        (0..=kmax).map(|k| self.dim(k)).collect()
    }
}

/// `dim Ext^k(M, N)`.
pub fn ext<G: Grading>(m: &Rep<G>, n: &Rep<G>, k: usize) -> Result<usize> {
    ExtComplex::for_modules(m, n, &ResolveOptions::default()).dim(k)
}

/// `[dim Ext^0, …, dim Ext^kmax]`.
pub fn ext_dims<G: Grading>(m: &Rep<G>, n: &Rep<G>, kmax: usize, opts: &ResolveOptions) -> Result<Vec<usize>> {
    ExtComplex::for_modules(m, n, opts).dims(kmax)
}
