//! Building modules from functor expressions.

use crate::simples::{costandard, simple, weyl};
use crate::{ModError, Result};
use partitions::{enumerate_t_index, is_pr_restricted, Partition};
use polyrep::{
    direct_sum, div, dual, nat, q_trunc, sym, tensor, tensor_many, tensor_power, twist, wedge, zero_module, FunctorExpr,
    Rep, Single,
};

/// `T^{(d_0,…,d_k)} = ⊗^{d_0} ⊗ (⊗^{d_1})^{(1)} ⊗ … ⊗ (⊗^{d_k})^{(k)}`.
pub fn twisted_tensor(g: Single, tuple: &[usize]) -> Rep<Single> {
    let factors: Vec<Rep<Single>> =
        tuple.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, &d)| twist(&tensor_power(g, d), i)).collect();
    tensor_many(g, factors)
}

/// The summands of T(d, r), with their index tuples.
pub fn big_t_summands(g: Single, d: usize, r: usize) -> Vec<(Vec<usize>, Rep<Single>)> {
    enumerate_t_index(d, g.f.p() as usize, r)
        .into_iter()
        .map(|t| {
            let v = t.entries.clone();
            let m = twisted_tensor(g, &v);
            (v, m)
        })
        .collect()
}

/// The partitions λ ⊢ d with at most n parts that are not p^r-restricted.
pub fn big_l_index(g: Single, d: usize, r: usize) -> Vec<Partition> {
    partitions::enumerate_partitions(d, g.n).into_iter().filter(|l| !is_pr_restricted(l, g.f.p() as usize, r)).collect()
}

pub fn build(e: &FunctorExpr, g: Single) -> Result<Rep<Single>> {
    use FunctorExpr::*;
    let p = g.f.p() as usize;
    Ok(match e {
        Sym(a) => sym(g, *a),
        Wedge(a) => wedge(g, *a),
        Div(a) => div(g, *a),
        TensorPower(a) => tensor_power(g, *a),
        Nat => nat(g),
        Q(a) => q_trunc(g, *a),
        Simple(l) => simple(g, l)?.rep.clone(),
        Weyl(l) => weyl(g, l)?,
        SchurMod(l) => costandard(g, l)?,
        Twist(x, r) => twist(&build(x, g)?, *r),
        Tensor(a, b) => tensor(&build(a, g)?, &build(b, g)?),
        Dual(x) => dual(&build(x, g)?),
        Sum(a, b) => {
            let (x, y) = (build(a, g)?, build(b, g)?);
            if x.degree() != y.degree() {
                return Err(ModError::DegreeMismatch(x.degree(), y.degree()));
            }
            direct_sum(vec![x, y])
        }
        BigT(d, r) => {
            let parts: Vec<_> = big_t_summands(g, *d, *r).into_iter().map(|x| x.1).collect();
            if parts.is_empty() {
                zero_module(g, *d)
            } else {
                direct_sum(parts)
            }
        }
        BigL(d, r) => {
            let parts: Vec<Rep<Single>> =
                big_l_index(g, *d, *r).iter().map(|l| simple(g, l).map(|s| s.rep.clone())).collect::<Result<_>>()?;
            if parts.is_empty() {
                zero_module(g, *d)
            } else {
                direct_sum(parts)
            }
        }
    })
    .map(|m| {
        debug_assert_eq!(Some(m.degree()), e.degree(p));
        m
    })
}
