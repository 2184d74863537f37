//! The internal tensor product of simples through p-adic levels.

use crate::internal::internal_general;
use crate::Result;
use modkit::{iso_test, simple};
use partitions::{p_adic_decomposition, Partition};
use polyrep::{tensor_many, twist, Rep, Single};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct SteinReport {
    pub lambda: Partition,
    pub mu: Partition,
    /// Levels `(λ^i, μ^i)`.
    pub levels: Vec<(Partition, Partition)>,
    /// Whether `|λ^i| = |μ^i|` at every level.
    pub matching: bool,
    pub dim: usize,
    /// Dimension of `⊗_i (L_{λ^i} ⊗̲ L_{μ^i})^{(i)}` when the levels match.
    pub predicted_dim: Option<usize>,
    pub iso: bool,
}

impl SteinReport {
    pub fn ok(&self) -> bool {
        if self.matching {
            self.dim > 0 && self.iso
        } else {
            self.dim == 0
        }
    }
}

pub fn verify_stein_internal(g: Single, lambda: &Partition, mu: &Partition) -> Result<SteinReport> {
    let p = g.f.p() as usize;
    let (mut a, mut b) = (p_adic_decomposition(lambda, p), p_adic_decomposition(mu, p));
    let len = a.len().max(b.len());
    a.resize(len, Partition::empty());
    b.resize(len, Partition::empty());
    let levels: Vec<(Partition, Partition)> = a.into_iter().zip(b).collect();
    let matching = levels.iter().all(|(x, y)| x.weight() == y.weight());
    let lhs = internal_general(&simple(g, lambda)?.rep, &simple(g, mu)?.rep)?;
    let mut report =
        SteinReport { lambda: lambda.clone(), mu: mu.clone(), levels: levels.clone(), matching, dim: lhs.dim(), predicted_dim: None, iso: false };
    if matching {
        let mut factors: Vec<Rep<Single>> = Vec::new();
        for (i, (x, y)) in levels.iter().enumerate() {
            if x.weight() == 0 {
                continue;
            }
            let t = internal_general(&simple(g, x)?.rep, &simple(g, y)?.rep)?;
            factors.push(twist(&t, i));
        }
        let rhs = tensor_many(g, factors);
        report.predicted_dim = Some(rhs.dim());
        report.iso = iso_test(&lhs, &rhs).is_iso();
    }
    Ok(report)
}
