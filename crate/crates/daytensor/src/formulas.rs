//! Closed formulas for internal tensor products with `⊗^d`, `Λ^d` and `Q^d`.

use crate::{DayError, Result};
use homology::verify::head_partitions;
use partitions::is_pr_restricted;
use polyrep::{coinvariants_sd, constant, tensor, tensor_power, Grading, Rep, Single};
use symbridge::{schur_functor, sign_twist};

/// `F ⊗̲ ⊗^d ≅ ⊗^d ⊗ f_d(F)`, the second factor a multiplicity space.
pub fn internal_with_tensorpower(f: &Rep<Single>) -> Result<Rep<Single>> {
    let g = *f.grading();
    let v = schur_functor(f)?;
    Ok(tensor(&tensor_power(g, f.degree()), &constant(g, v.dim())))
}

/// `F ⊗̲ Λ^d ≅ ⊗^d ⊗_{S_d} (sign ⊗ f_d(F))`, `p` odd.
pub fn internal_with_wedge(f: &Rep<Single>) -> Result<Rep<Single>> {
    let g = *f.grading();
    if g.f.p() == 2 {
        return Err(DayError::OddCharRequired);
    }
    let v = sign_twist(&schur_functor(f)?);
    Ok(coinvariants_sd(g, &v)?)
}

/// `F ⊗̲ Q^d ≅ ⊗^d ⊗_{S_d} f_d(F)` when the head of `F` is p-restricted.
pub fn internal_with_q(f: &Rep<Single>) -> Result<Rep<Single>> {
    let g = *f.grading();
    let p = g.field().p() as usize;
    if let Some(bad) = head_partitions(f)?.into_iter().find(|l| !is_pr_restricted(l, p, 1)) {
        return Err(DayError::HeadNotRestricted(bad));
    }
    Ok(coinvariants_sd(g, &schur_functor(f)?)?)
}
