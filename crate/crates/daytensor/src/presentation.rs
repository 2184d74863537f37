//! Presentations by sums of the projectives `Γ^λ`.

use crate::Result;
use homology::{resolve, GammaProjective, ResolveOptions};
use polyrep::{Grading, Rep, Single, Weight};

/// `P1 → P0 → module → 0`.
pub struct GammaPresentation {
    pub module: Rep<Single>,
    pub p0: GammaProjective<Single>,
    pub p1: GammaProjective<Single>,
    pub dim_p0: usize,
    /// Rank of `P1 → P0` (total, over all weights).
    pub relation_rank: usize,
}

impl GammaPresentation {
    /// `dim module = dim P0 − rank(P1 → P0)`.
    pub fn consistent(&self) -> bool {
        self.module.dim() + self.relation_rank == self.dim_p0
    }
}

pub fn gamma_presentation(m: &Rep<Single>) -> Result<GammaPresentation> {
    let res = resolve(m, 2, ResolveOptions::default())?;
    let g = *m.grading();
    let dominant: Vec<Weight> = g.dominant_weights(m.degree());
    let relation_rank = res.checks()[1].ranks.iter().zip(&dominant).map(|(r, w)| r * g.orbit_size(w)).sum();
    Ok(GammaPresentation {
        module: m.clone(),
        p0: res.stage(0).projective(),
        p1: res.stage(1).projective(),
        dim_p0: res.stage(0).dim(),
        relation_rank,
    })
}
