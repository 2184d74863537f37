//! Simple kS_d-modules via the Schur functor, and the Mullineux map defined
//! by `f_d(L_{m(μ)}) ≅ f_d(L_μ) ⊗ sign`.

use crate::group::{sym_hom, sign_twist, sym_iso};
use crate::schur::schur_functor;
use crate::{Result, SymError};
use exactfield::FieldSpec;
use modkit::simple;
use partitions::{enumerate_partitions, is_pr_restricted, Partition};
use polyrep::{Single, SymRep};

/// `f_d(L_λ)` computed in the context `n = d`.
pub fn sym_simple(f: FieldSpec, lambda: &Partition) -> Result<SymRep> {
    let d = lambda.weight();
    let g = Single::new(f, d.max(1));
    schur_functor(&simple(g, lambda)?.rep)
}

/// The simple kS_d-modules `f_d(L_λ)`, λ ⊢ d p-restricted, in descending
/// lexicographic order of λ.
pub fn sym_simples(f: FieldSpec, d: usize) -> Result<Vec<(Partition, SymRep)>> {
    let p = f.p() as usize;
    enumerate_partitions(d, d)
        .into_iter()
        .filter(|l| is_pr_restricted(l, p, 1))
        .map(|l| sym_simple(f, &l).map(|s| (l, s)))
        .collect()
}

/// Is `u` simple? Compared against the complete list of simples of the same
/// degree: a nonzero map from a simple of equal dimension is an isomorphism.
pub fn is_sym_simple(u: &SymRep) -> Result<bool> {
    if u.dim() == 0 {
        return Ok(false);
    }
    for (_, s) in sym_simples(u.field(), u.degree())? {
        if s.dim() == u.dim() && sym_hom(&s, u)? > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn mullineux(f: FieldSpec, mu: &Partition) -> Result<Partition> {
    let p = f.p() as usize;
    if !is_pr_restricted(mu, p, 1) {
        return Err(SymError::NotRestricted(mu.clone()));
    }
    let target = sign_twist(&sym_simple(f, mu)?);
    for (nu, s) in sym_simples(f, mu.weight())? {
        if sym_iso(&s, &target)? {
            return Ok(nu);
        }
    }
    Err(SymError::Assert(format!("no simple isomorphic to the sign twist of f(L{mu})")))
}
