//! Projective resolutions by sums of the projectives `S·ξ_λ ≅ Γ^λ`.
//!
//! Stage `k` of a resolution of `M` is a list of generators `(λ_j, v_j)` with
//! `v_j` a weight vector of `P_{k-1}` (of `M` for `k = 0`); then
//! `P_k = ⊕_j Γ^{λ_j}` and `∂_k(ξ_{λ_j}) = v_j`. The generators of stage
//! `k+1` cover the kernel of `∂_k`, computed at dominant weights.

use crate::{HomologyError, Result};
use exactfield::Echelon;
use modkit::present::{evaluation_columns, greedy_generators, Gen};
use polyrep::{direct_sum, projective, Grading, Rep};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::any::Any;
use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

/// How syzygies are covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoverKind {
    /// Greedy weight-vector generators at dominant weights, pruned.
    Greedy,
    /// Every basis vector of every dominant weight space (canonical, large).
    AllWeights,
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub cover: CoverKind,
    /// Give up when a term `P_k` exceeds this dimension.
    pub max_dim: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            cover: CoverKind::Greedy,
            max_dim: None,
            cache_dir: std::env::var_os("POLYREP_CACHE").filter(|v| !v.is_empty()).map(PathBuf::from),
        }
    }
}

/// `⊕ (Γ^λ)^{m_λ}`, recorded by weight and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaProjective<G: Grading> {
    pub summands: Vec<(G::W, usize)>,
}

impl<G: Grading> GammaProjective<G> {
    pub fn from_weights<'a>(ws: impl IntoIterator<Item = &'a G::W>) -> Self {
        let mut m: BTreeMap<G::W, usize> = BTreeMap::new();
        for w in ws {
            *m.entry(w.clone()).or_default() += 1;
        }
        GammaProjective { summands: m.into_iter().rev().collect() }
    }
    pub fn rank(&self) -> usize {
        self.summands.iter().map(|s| s.1).sum()
    }
}

pub struct Stage<G: Grading> {
    pub gens: Vec<Gen<G>>,
    /// `P_k`, or `None` when it is zero.
    pub module: Option<Rep<G>>,
}

impl<G: Grading> Stage<G> {
    pub fn projective(&self) -> GammaProjective<G> {
        GammaProjective::from_weights(self.gens.iter().map(|g| &g.0))
    }
    pub fn dim(&self) -> usize {
        self.module.as_ref().map_or(0, |m| m.dim())
    }
}

/// Rank bookkeeping at one stage: for each dominant weight, the dimension
/// of the space to be covered and the rank of `∂_k` there.
#[derive(Clone, Debug, Default)]
pub struct StageCheck {
    pub cover_dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl StageCheck {
    pub fn exact(&self) -> bool {
        self.cover_dims == self.ranks
    }
}

pub struct Resolution<G: Grading> {
    target: Rep<G>,
    opts: ResolveOptions,
    stages: Vec<Stage<G>>,
    checks: Vec<StageCheck>,
    /// Kernel of the last computed differential, at dominant weights.
    kernel: BTreeMap<G::W, Vec<Vec<u8>>>,
    key: String,
}

/// Content hash of a module: degree, weight dimensions and the blocks of the
/// multiplicative generators (which determine every other block).
pub fn fingerprint<G: Grading>(m: &Rep<G>) -> String {
    let g = m.grading();
    let mut h = Sha256::new();
    h.update(format!("{g:?}|{:?}|", m.degree()).as_bytes());
    for w in g.all_weights(m.degree()) {
        h.update(format!("{w:?}:{};", m.wdim(&w)).as_bytes());
    }
    for k in g.generator_keys(m.degree()) {
        let b = m.block(&k);
        if b.is_zero() {
            continue;
        }
        h.update(format!("{k:?}=").as_bytes());
        for row in b.row_vecs() {
            h.update(&row);
        }
    }
    hex::encode(h.finalize())
}

#[derive(Serialize, Deserialize)]
struct CachedStage {
    weights: Vec<usize>,
    vectors: Vec<Vec<u8>>,
}

impl<G: Grading> Resolution<G> {
    pub fn new(target: &Rep<G>, opts: ResolveOptions) -> Self {
        let key = format!("{}-{:?}", &fingerprint(target)[..24], opts.cover).to_lowercase();
        Resolution { target: target.clone(), opts, stages: Vec::new(), checks: Vec::new(), kernel: BTreeMap::new(), key }
    }

    pub fn target(&self) -> &Rep<G> {
        &self.target
    }
    pub fn stages(&self) -> &[Stage<G>] {
        &self.stages
    }
    pub fn stage(&self, k: usize) -> &Stage<G> {
        &self.stages[k]
    }
    pub fn len(&self) -> usize {
        self.stages.len()
    }
    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }
    pub fn checks(&self) -> &[StageCheck] {
        &self.checks
    }
    /// `im ∂_{k+1} = ker ∂_k` (and `∂_0` onto `M`) at every computed stage.
    pub fn is_exact(&self) -> bool {
        self.checks.iter().all(|c| c.exact())
    }

    fn codomain(&self, k: usize) -> Option<Rep<G>> {
        if k == 0 {
            Some(self.target.clone())
        } else {
            self.stages[k - 1].module.clone()
        }
    }

    fn cache_path(&self, k: usize) -> Option<PathBuf> {
        let p = self.target.field().p();
        self.opts.cache_dir.as_ref().map(|d| d.join(format!("res-p{p}-{}-s{k}.json", self.key)))
    }

    fn load(&self, k: usize, cod: &Rep<G>) -> Option<Vec<Gen<G>>> {
        let text = std::fs::read_to_string(self.cache_path(k)?).ok()?;
        let c: CachedStage = serde_json::from_str(&text).ok()?;
        let all = cod.grading().all_weights(cod.degree());
        let mut gens = Vec::with_capacity(c.weights.len());
        for (i, v) in c.weights.into_iter().zip(c.vectors) {
            let w = all.get(i)?.clone();
            if v.len() != cod.wdim(&w) {
                return None;
            }
            gens.push((w, v));
        }
        Some(gens)
    }

    fn store(&self, k: usize, cod: &Rep<G>, gens: &[Gen<G>]) {
        let Some(path) = self.cache_path(k) else { return };
        let all = cod.grading().all_weights(cod.degree());
        let pos: HashMap<&G::W, usize> = all.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let c = CachedStage {
            weights: gens.iter().map(|g| pos[&g.0]).collect(),
            vectors: gens.iter().map(|g| g.1.clone()).collect(),
        };
        // Best effort: a failed cache write only costs recomputation.
        let dir = path.parent().unwrap();
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
        if let Ok(mut tmp) = tempfile::NamedTempFile::new_in(dir) {
            use std::io::Write;
            if tmp.write_all(serde_json::to_string(&c).unwrap().as_bytes()).is_ok() {
                let _ = tmp.persist(&path);
            }
        }
    }

    fn cover(&self, cod: &Rep<G>, space: &BTreeMap<G::W, Vec<Vec<u8>>>) -> Vec<Gen<G>> {
        match self.opts.cover {
            CoverKind::Greedy => {
                greedy_generators(cod, &|mu: &G::W| space.get(mu).cloned().unwrap_or_default())
            }
            CoverKind::AllWeights => space
                .iter()
                .flat_map(|(w, vs)| vs.iter().map(move |v| (w.clone(), v.clone())))
                .collect(),
        }
    }

    /// Compute stages until `P_len` exists.
    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.stages.len() <= len {
            self.next_stage()?;
        }
        Ok(())
    }

    fn next_stage(&mut self) -> Result<()> {
        let k = self.stages.len();
        let Some(cod) = self.codomain(k) else {
            self.stages.push(Stage { gens: Vec::new(), module: None });
            self.checks.push(StageCheck::default());
            return Ok(());
        };
        let g = cod.grading().clone();
        let dominant = g.dominant_weights(cod.degree());
        // the space to cover: all of M, or the previous kernel
        let space: BTreeMap<G::W, Vec<Vec<u8>>> = if k == 0 {
            dominant
                .iter()
                .map(|w| {
                    let d = cod.wdim(w);
                    (w.clone(), (0..d).map(|i| exactfield::vector::unit(d, i)).collect())
                })
                .collect()
        } else {
            std::mem::take(&mut self.kernel)
        };
        let gens = match self.load(k, &cod) {
            Some(gs) => gs,
            None => {
                let gs = self.cover(&cod, &space);
                self.store(k, &cod, &gs);
                gs
            }
        };
        let module = if gens.is_empty() {
            None
        } else {
            let parts: Vec<Rep<G>> = gens.iter().map(|(w, _)| projective(&g, cod.degree(), w)).collect();
            Some(direct_sum(parts))
        };
        if let (Some(m), Some(cap)) = (&module, self.opts.max_dim) {
            if m.dim() > cap {
                return Err(HomologyError::BudgetExceeded(format!(
                    "stage {k} of the resolution of {} has dimension {} > {cap}",
                    self.target.label(),
                    m.dim()
                )));
            }
        }
        let mut check = StageCheck::default();
        let mut kernel = BTreeMap::new();
        for mu in &dominant {
            let want = space.get(mu).map_or(0, |v| v.len());
            let (cols, e) = evaluation_columns(&cod, &gens, mu);
            let rank = if cols.is_empty() { 0 } else { e.rank() };
            check.cover_dims.push(want);
            check.ranks.push(rank);
            if !cols.is_empty() {
                let ker = e.kernel_basis();
                if !ker.is_empty() {
                    kernel.insert(mu.clone(), ker);
                }
            }
        }
        if !check.exact() {
            return Err(HomologyError::CoverFailure(format!("stage {k} of {} is not exact", self.target.label())));
        }
        self.kernel = kernel;
        self.stages.push(Stage { gens, module });
        self.checks.push(check);
        Ok(())
    }
}

/// Resolve `m` through stage `len`.
pub fn resolve<G: Grading>(m: &Rep<G>, len: usize, opts: ResolveOptions) -> Result<Resolution<G>> {
    let mut r = Resolution::new(m, opts);
    r.extend_to(len)?;
    Ok(r)
}

pub type SharedResolution<G> = Arc<Mutex<Resolution<G>>>;

type Memo = Mutex<HashMap<String, Arc<dyn Any + Send + Sync>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// A process-wide shared resolution of `m` (keyed by content and cover kind),
/// extended on demand.
pub fn shared_resolution<G: Grading>(m: &Rep<G>, opts: &ResolveOptions) -> SharedResolution<G> {
    let key = format!("{}-{:?}-{:?}", fingerprint(m), opts.cover, opts.max_dim);
    let mut memo = memo().lock().unwrap();
    if let Some(r) = memo.get(&key).and_then(|a| a.clone().downcast::<Mutex<Resolution<G>>>().ok()) {
        return r;
    }
    let r = Arc::new(Mutex::new(Resolution::new(m, opts.clone())));
    memo.insert(key, r.clone());
    r
}

/// Generators of `m` whose images span its head: at each dominant weight
/// (descending), basis vectors not in the radical plus the part generated
/// so far. The count at `λ` is the multiplicity of `L_λ` in the head.
pub fn head_generators<G: modkit::HasSimples>(m: &Rep<G>) -> Result<Vec<Gen<G>>> {
    let rad = modkit::radical(m)?;
    let g = m.grading();
    let mut gens: Vec<Gen<G>> = Vec::new();
    for mu in g.dominant_weights(m.degree()) {
        let d = m.wdim(&mu);
        if d == 0 {
            continue;
        }
        let mut ech: Echelon = modkit::present::generated_span(m, &gens, &mu);
        for v in rad.at(&mu).iter() {
            ech.insert(v.clone());
        }
        for i in 0..d {
            let v = exactfield::vector::unit(d, i);
            if ech.contains(&v) {
                continue;
            }
            for k in g.tables(&mu, &mu).iter() {
                ech.insert(m.act(k, &v));
            }
            gens.push((mu.clone(), v));
        }
    }
    Ok(gens)
}

/// A projective cover `P → M` indexed by the head of `M`, with the
/// surjection given on the generators `ξ_λ`.
pub fn gamma_cover<G: modkit::HasSimples>(m: &Rep<G>) -> Result<(GammaProjective<G>, Arc<modkit::HomMap<G>>)> {
    let gens = head_generators(m)?;
    let g = m.grading();
    let p = if gens.is_empty() {
        polyrep::zero_module(g.clone(), m.degree())
    } else {
        direct_sum(gens.iter().map(|(w, _)| projective(g, m.degree(), w)).collect())
    };
    let pg: Vec<Gen<G>> = gens
        .iter()
        .enumerate()
        .map(|(i, (w, _))| {
            // ξ_{λ_i} sits in summand i at the position of the diagonal table
            let mut v = vec![0u8; p.wdim(w)];
            let mut off = 0;
            for (j, (wj, _)) in gens.iter().enumerate() {
                let t = g.tables(w, wj);
                if j == i {
                    let pos = t.iter().position(|k| *k == g.diag(w)).expect("diagonal table");
                    v[off + pos] = 1;
                }
                off += t.len();
            }
            (w.clone(), v)
        })
        .collect();
    let images = gens.iter().map(|x| x.1.clone()).collect();
    let map = modkit::HomMap::from_images(&p, m, Arc::new(pg), images);
    if !map.is_surjective() {
        return Err(HomologyError::CoverFailure(format!("cover of {} is not surjective", m.label())));
    }
    Ok((GammaProjective::from_weights(gens.iter().map(|g| &g.0)), map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyrep::{nat, sym, wedge, Single};

    fn ctx(p: u32, n: usize) -> Single {
        Single::new(exactfield::FieldSpec::new(p).unwrap(), n)
    }

    #[test]
    fn fingerprint_separates_modules() {
        let g = ctx(2, 2);
        assert_eq!(fingerprint(&sym(g, 2)), fingerprint(&sym(g, 2)));
        assert_ne!(fingerprint(&sym(g, 2)), fingerprint(&polyrep::div(g, 2)));
        assert_ne!(fingerprint(&sym(g, 2)), fingerprint(&sym(ctx(3, 2), 2)));
    }

    #[test]
    fn budget_is_enforced() {
        let g = ctx(2, 2);
        let o = ResolveOptions { max_dim: Some(2), cache_dir: None, ..Default::default() };
        assert!(matches!(resolve(&wedge(g, 2), 2, o), Err(HomologyError::BudgetExceeded(_))));
    }

    #[test]
    fn projective_bookkeeping() {
        let g = ctx(2, 2);
        let r = resolve(&nat(g), 2, ResolveOptions { cache_dir: None, ..Default::default() }).unwrap();
        assert_eq!(r.stage(0).projective().rank(), 1);
        assert!(r.stage(1).gens.is_empty() && r.stage(1).module.is_none());
        assert!(r.is_exact());
    }
}
