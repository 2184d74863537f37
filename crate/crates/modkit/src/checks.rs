//! Structural checks on simple modules: the Steinberg tensor product
//! theorem, the Clausen–James criterion and non-simplicity of tensor
//! products of restricted simples.

use crate::homs::hom;
use crate::simples::{simple, simples_of_degree};
use crate::structure::SimpleData;
use crate::Result;
use partitions::{is_pr_restricted, p_adic_decomposition, Partition};
use polyrep::{constant, tensor, tensor_many, tensor_power, twist, Rep, Single};

fn as_data(s: &crate::simples::SimpleModule) -> SimpleData<Single> {
    SimpleData { label: format!("L{}", s.lambda), hw: s.hw.clone(), rep: s.rep.clone(), pres: s.pres.clone() }
}

/// `⊗_i L_{λ^i}^{(i)}` over the p-adic levels of λ.
pub fn steinberg_product(g: Single, lambda: &Partition) -> Result<Rep<Single>> {
    let levels = p_adic_decomposition(lambda, g.f.p() as usize);
    let mut factors = Vec::new();
    for (i, l) in levels.iter().enumerate() {
        if l.weight() > 0 {
            factors.push(twist(&simple(g, l)?.rep, i));
        }
    }
    Ok(if factors.is_empty() { constant(g, 1) } else { tensor_many(g, factors) })
}

/// `L_λ ≅ ⊗_i L_{λ^i}^{(i)}`.
pub fn steinberg_check(g: Single, lambda: &Partition) -> Result<bool> {
    let l = simple(g, lambda)?;
    let prod = steinberg_product(g, lambda)?;
    Ok(crate::iso::iso_to_simple(&as_data(&l), &prod))
}

#[derive(Clone, Debug)]
pub struct ClausenJamesRow {
    pub lambda: Partition,
    pub hom_nonzero: bool,
    pub restricted: bool,
}

impl ClausenJamesRow {
    pub fn ok(&self) -> bool {
        self.hom_nonzero == self.restricted
    }
}

/// For every λ ⊢ d: `Hom(⊗^d, L_λ) ≠ 0 ⇔ λ is p-restricted`.
pub fn clausen_james_check(g: Single, d: usize) -> Result<Vec<ClausenJamesRow>> {
    let t = tensor_power(g, d);
    let p = g.f.p() as usize;
    simples_of_degree(g, d)?
        .iter()
        .map(|s| {
            Ok(ClausenJamesRow {
                lambda: s.lambda.clone(),
                hom_nonzero: hom(&t, &s.rep).dim() > 0,
                restricted: is_pr_restricted(&s.lambda, p, 1),
            })
        })
        .collect()
}

/// `dim End(L_λ ⊗ L_μ)`; at least 2 for p-restricted nonconstant simples.
pub fn tenspres_check(g: Single, lambda: &Partition, mu: &Partition) -> Result<usize> {
    let t = tensor(&simple(g, lambda)?.rep, &simple(g, mu)?.rep);
    Ok(hom(&t, &t).dim())
}
