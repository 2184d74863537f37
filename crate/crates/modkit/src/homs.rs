//! Module maps and hom spaces.

use crate::present::{evaluation_columns, present, Gen, Presentation};
use exactfield::ExactMatrix;
use polyrep::{Grading, Rep};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

type WeightFn<G> = Arc<dyn Fn(&<G as Grading>::W) -> ExactMatrix + Send + Sync>;

enum MapImpl<G: Grading> {
    /// Determined by the images of generators of the source.
    Gens { gens: Arc<Vec<Gen<G>>>, images: Vec<Vec<u8>> },
    /// Given weight by weight.
    PerWeight(WeightFn<G>),
}

/// A module map `M → N`, evaluated lazily on weight spaces.
pub struct HomMap<G: Grading> {
    src: Rep<G>,
    tgt: Rep<G>,
    imp: MapImpl<G>,
    cache: RwLock<HashMap<G::W, Arc<ExactMatrix>>>,
}

impl<G: Grading> HomMap<G> {
    pub fn from_images(src: &Rep<G>, tgt: &Rep<G>, gens: Arc<Vec<Gen<G>>>, images: Vec<Vec<u8>>) -> Arc<Self> {
        Arc::new(HomMap { src: src.clone(), tgt: tgt.clone(), imp: MapImpl::Gens { gens, images }, cache: Default::default() })
    }

    /// A map given by per-weight matrices; the caller is responsible for
    /// equivariance (see [`polyrep::check::check_intertwiner`]).
    pub fn per_weight(src: &Rep<G>, tgt: &Rep<G>, f: WeightFn<G>) -> Arc<Self> {
        Arc::new(HomMap { src: src.clone(), tgt: tgt.clone(), imp: MapImpl::PerWeight(f), cache: Default::default() })
    }

    pub fn identity(m: &Rep<G>) -> Arc<Self> {
        let mm = m.clone();
        Self::per_weight(m, m, Arc::new(move |w| ExactMatrix::identity(mm.field(), mm.wdim(w))))
    }

    pub fn source(&self) -> &Rep<G> {
        &self.src
    }
    pub fn target(&self) -> &Rep<G> {
        &self.tgt
    }

    /// Images of the source generators, when the map is given that way.
    pub fn generator_images(&self) -> Option<(&Arc<Vec<Gen<G>>>, &[Vec<u8>])> {
        match &self.imp {
            MapImpl::Gens { gens, images } => Some((gens, images)),
            MapImpl::PerWeight(_) => None,
        }
    }

    /// The matrix `M_w → N_w`.
    pub fn at(&self, w: &G::W) -> Arc<ExactMatrix> {
        if let Some(m) = self.cache.read().unwrap().get(w) {
            return m.clone();
        }
        let f = self.src.field();
        let (ds, dt) = (self.src.wdim(w), self.tgt.wdim(w));
        let m = if ds == 0 || dt == 0 {
            ExactMatrix::zeros(f, dt, ds)
        } else {
            match &self.imp {
                MapImpl::PerWeight(h) => h(w),
                MapImpl::Gens { gens, images } => {
                    let (cols, c) = evaluation_columns(&self.src, gens, w);
                    let piv = c.pivot_columns();
                    assert_eq!(piv.len(), ds, "generators do not span the weight space");
                    let x = c.select_columns(&piv).inverse().expect("pivot columns are independent");
                    let dcols: Vec<Vec<u8>> = piv.iter().map(|&j| {
                        let (i, k) = &cols[j];
                        self.tgt.act(k, &images[*i])
                    }).collect();
                    ExactMatrix::from_columns(f, dt, &dcols).mul(&x)
                }
            }
        };
        let m = Arc::new(m);
        self.cache.write().unwrap().insert(w.clone(), m.clone());
        m
    }

    /// Total rank (Weyl-symmetric sum over dominant weights).
    pub fn rank(&self) -> usize {
        let g = self.src.grading();
        g.dominant_weights(self.src.degree()).iter().map(|w| g.orbit_size(w) * self.at(w).rank()).sum()
    }

    pub fn is_zero(&self) -> bool {
        let g = self.src.grading();
        g.dominant_weights(self.src.degree()).iter().all(|w| self.at(w).is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.src.dim() == self.tgt.dim() && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(self: &Arc<Self>, other: &Arc<HomMap<G>>) -> Arc<HomMap<G>> {
        let (a, b) = (self.clone(), other.clone());
        HomMap::per_weight(&self.src, &other.tgt, Arc::new(move |w| b.at(w).mul(&a.at(w))))
    }

    /// Check equivariance on the generating keys.
    pub fn verify(&self) -> Result<(), String> {
        polyrep::check::check_intertwiner(&self.src, &self.tgt, &|w| (*self.at(w)).clone())
    }
}

/// `Hom(M, N)` with an explicit basis.
pub struct HomSpace<G: Grading> {
    pub src: Rep<G>,
    pub tgt: Rep<G>,
    gens: Arc<Vec<Gen<G>>>,
    basis: Vec<Vec<Vec<u8>>>,
}

impl<G: Grading> HomSpace<G> {
    pub fn from_presentation(p: &Presentation<G>, n: &Rep<G>) -> Self {
        let basis = if p.module.degree() == n.degree() { p.hom_basis(n) } else { vec![] };
        HomSpace { src: p.module.clone(), tgt: n.clone(), gens: Arc::new(p.gens.clone()), basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &Arc<Vec<Gen<G>>> {
        &self.gens
    }

    /// Images of the source generators under the `i`-th basis element.
    pub fn images(&self, i: usize) -> &[Vec<u8>] {
        &self.basis[i]
    }

    pub fn map(&self, i: usize) -> Arc<HomMap<G>> {
        HomMap::from_images(&self.src, &self.tgt, self.gens.clone(), self.basis[i].clone())
    }

    /// `Σ c_i φ_i`.
    pub fn combination(&self, coeffs: &[u8]) -> Arc<HomMap<G>> {
        let f = self.tgt.field();
        let mut images: Vec<Vec<u8>> = self.gens.iter().map(|(w, _)| vec![0u8; self.tgt.wdim(w)]).collect();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (img, v) in images.iter_mut().zip(b) {
                exactfield::vector::axpy(f, img, *c, v);
            }
        }
        HomMap::from_images(&self.src, &self.tgt, self.gens.clone(), images)
    }
}

/// `Hom(M, N)`; the zero space if the degrees differ.
pub fn hom<G: Grading>(m: &Rep<G>, n: &Rep<G>) -> HomSpace<G> {
    assert_eq!(m.grading(), n.grading(), "hom across different contexts");
    if m.degree() != n.degree() {
        return HomSpace { src: m.clone(), tgt: n.clone(), gens: Arc::new(vec![]), basis: vec![] };
    }
    HomSpace::from_presentation(&present(m), n)
}
