//! Socles, radicals, heads, Loewy series and composition factors.

use crate::homs::HomSpace;
use crate::present::{Gen, Presentation};
use crate::submod::Submodule;
use crate::Result;
use exactfield::ExactMatrix;
use polyrep::ops::dual;
use polyrep::{Grading, Rep};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A simple module with a presentation on a single highest weight vector.
pub struct SimpleData<G: Grading> {
    pub label: String,
    pub hw: G::W,
    pub rep: Rep<G>,
    pub pres: Presentation<G>,
}

/// Gradings whose simple modules of each degree are available.
pub trait HasSimples: Grading {
    /// All simple modules of degree `d`, highest weights in descending order.
    fn simples(&self, d: Self::D) -> Result<Vec<Arc<SimpleData<Self>>>>;
}

impl HasSimples for polyrep::Single {
    fn simples(&self, d: usize) -> Result<Vec<Arc<SimpleData<Self>>>> {
        crate::simples::simples_up_to_n(*self, d).map(|v| {
            v.into_iter()
                .map(|s| {
                    Arc::new(SimpleData {
                        label: format!("L[{}]", crate::simples::parts_str(&s.lambda)),
                        hw: s.hw.clone(),
                        rep: s.rep.clone(),
                        pres: s.pres.clone(),
                    })
                })
                .collect()
        })
    }
}

/// `dim Hom(L, M)` for a simple `L`.
pub fn hom_from_simple<G: Grading>(s: &SimpleData<G>, m: &Rep<G>) -> HomSpace<G> {
    HomSpace::from_presentation(&s.pres, m)
}

/// The socle: the sum of the images of all maps from simples.
pub fn socle<G: HasSimples>(m: &Rep<G>) -> Result<Submodule<G>> {
    let mut gens: Vec<Gen<G>> = Vec::new();
    for s in m.grading().simples(m.degree())? {
        let hs = hom_from_simple(&s, m);
        for i in 0..hs.dim() {
            for ((w, _), v) in hs.generators().iter().zip(hs.images(i)) {
                gens.push((w.clone(), v.clone()));
            }
        }
    }
    Ok(Submodule::generated(m, gens))
}

/// The radical: the annihilator of the socle of the dual.
pub fn radical<G: HasSimples>(m: &Rep<G>) -> Result<Submodule<G>> {
    let sd = socle(&dual(m))?;
    let f = m.field();
    let mm = m.clone();
    Ok(Submodule::from_span(m, Arc::new(move |w| {
        let d = mm.wdim(w);
        let u = sd.at(w);
        if u.is_empty() {
            return (0..d).map(|i| exactfield::vector::unit(d, i)).collect();
        }
        ExactMatrix::from_row_vecs(f, d, &u).kernel_basis()
    })))
}

pub fn head<G: HasSimples>(m: &Rep<G>) -> Result<Rep<G>> {
    Ok(radical(m)?.quotient(format!("Head({})", m.label())).0)
}

/// Ascending socle series `0 ⊂ S_1 ⊂ … ⊂ S_k = M` (the zero term omitted).
pub fn socle_series<G: HasSimples>(m: &Rep<G>) -> Result<Vec<Submodule<G>>> {
    let mut out: Vec<Submodule<G>> = Vec::new();
    let total = m.dim();
    let mut cur = socle(m)?;
    loop {
        let d = cur.dim();
        out.push(cur.clone());
        if d == total {
            return Ok(out);
        }
        let (q, src) = cur.quotient("quot");
        let s = socle(&q)?;
        if s.is_zero() {
            return Err(crate::ModError::Assert("nonzero module with zero socle".into()));
        }
        cur = Submodule::lift(&src, &s);
    }
}

/// Descending radical series `M = R_0 ⊃ R_1 ⊃ … ⊃ R_k = 0` (M and 0 included).
pub fn radical_series<G: HasSimples>(m: &Rep<G>) -> Result<Vec<Submodule<G>>> {
    let mut out = vec![Submodule::whole(m)];
    loop {
        let last = out.last().unwrap().clone();
        if last.is_zero() {
            return Ok(out);
        }
        let (r, src) = last.as_rep_with_source("layer");
        let rr = radical(&r)?;
        let next = Submodule::push_forward(&src, &rr);
        if next.dim() == last.dim() {
            return Err(crate::ModError::Assert("radical did not shrink".into()));
        }
        out.push(next);
    }
}

/// Multiset of simple labels, with multiplicities.
pub type Factors = BTreeMap<String, usize>;

/// Multiplicities of simples in a semisimple module, via `dim Hom(L, M)`
/// (valid because every simple has a one-dimensional endomorphism ring).
pub fn semisimple_multiplicities<G: HasSimples>(m: &Rep<G>) -> Result<Factors> {
    let mut out = Factors::new();
    for s in m.grading().simples(m.degree())? {
        let k = hom_from_simple(&s, m).dim();
        if k > 0 {
            out.insert(s.label.clone(), k);
        }
    }
    Ok(out)
}

/// Layers of the socle series, as modules.
pub fn socle_layers<G: HasSimples>(m: &Rep<G>) -> Result<Vec<Rep<G>>> {
    let series = socle_series(m)?;
    let mut prev = Submodule::zero(m);
    let mut out = Vec::new();
    for s in series {
        out.push(s.over(&prev, "layer"));
        prev = s;
    }
    Ok(out)
}

fn add_factors(acc: &mut Factors, f: Factors) {
    for (k, v) in f {
        *acc.entry(k).or_default() += v;
    }
}

/// Composition factors read off the socle series.
pub fn composition_factors<G: HasSimples>(m: &Rep<G>) -> Result<Factors> {
    let mut acc = Factors::new();
    for layer in socle_layers(m)? {
        add_factors(&mut acc, semisimple_multiplicities(&layer)?);
    }
    Ok(acc)
}

/// Composition factors read off the radical series.
pub fn composition_factors_radical<G: HasSimples>(m: &Rep<G>) -> Result<Factors> {
    let series = radical_series(m)?;
    let mut acc = Factors::new();
    for w in series.windows(2) {
        add_factors(&mut acc, semisimple_multiplicities(&w[0].over(&w[1], "layer"))?);
    }
    Ok(acc)
}

/// Composition factors from the character alone (peeling off highest weights).
pub fn composition_factors_by_character<G: HasSimples>(m: &Rep<G>) -> Result<Factors> {
    let g = m.grading();
    let simples = g.simples(m.degree())?;
    let mut ch: BTreeMap<G::W, i64> = m.character().into_iter().map(|(w, d)| (w, d as i64)).collect();
    let mut acc = Factors::new();
    for w in g.dominant_weights(m.degree()) {
        let c = ch[&w];
        if c < 0 {
            return Err(crate::ModError::Assert(format!("negative character remainder at {w:?}")));
        }
        if c == 0 {
            continue;
        }
        let s = simples
            .iter()
            .find(|s| s.hw == w)
            .ok_or_else(|| crate::ModError::Assert(format!("no simple with highest weight {w:?}")))?;
        for (x, d) in s.rep.character() {
            *ch.get_mut(&x).unwrap() -= c * d as i64;
        }
        acc.insert(s.label.clone(), c as usize);
    }
    Ok(acc)
}

/// `socle(M) = M` with a single simple constituent (`socle(M) = M` alone
/// only says `M` is semisimple).
pub fn is_simple<G: HasSimples>(m: &Rep<G>) -> Result<bool> {
    if m.is_zero() || !socle(m)?.is_whole() {
        return Ok(false);
    }
    Ok(semisimple_multiplicities(m)?.values().sum::<usize>() == 1)
}

/// Labels of the simples in the socle.
pub fn socle_labels<G: HasSimples>(m: &Rep<G>) -> Result<Vec<String>> {
    Ok(semisimple_multiplicities(&socle(m)?.as_rep("soc"))?.into_keys().collect())
}

pub fn head_labels<G: HasSimples>(m: &Rep<G>) -> Result<Vec<String>> {
    Ok(semisimple_multiplicities(&head(m)?)?.into_keys().collect())
}
