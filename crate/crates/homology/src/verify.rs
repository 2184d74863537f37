//! Checks of the cup-product and connectedness statements, of the shift
//! identity between Schur and Weyl functors, and of the characteristic-two
//! short exact sequences in degree four.

use crate::ext::ExtComplex;
use crate::invariants::{invariant_i, invariant_p, InvariantOptions, InvariantValue};
use crate::resolution::ResolveOptions;
use crate::{HomologyError, Result};
use exactfield::{ExactMatrix, Echelon};
use modkit::maps::{map_coordinates, stack_maps, tensor_map, twist_map};
use modkit::{costandard, hom, iso_test, simples_of_degree, weyl, HomMap, Submodule};
use partitions::{is_pr_restricted, pow, Partition};
use polyrep::{sym, tensor, tensor_with_source, twist, wedge, Rep, Single, Weight};
use serde::Serialize;
use std::sync::Arc;

fn ext_dim(m: &Rep<Single>, n: &Rep<Single>, k: usize, opts: &ResolveOptions) -> Result<usize> {
    ExtComplex::for_modules(m, n, opts).dim(k)
}

/// Highest weights of the simples in the head of `m`.
pub fn head_partitions(m: &Rep<Single>) -> Result<Vec<Partition>> {
    if m.degree() == 0 {
        return Ok(if m.is_zero() { vec![] } else { vec![Partition::empty()] });
    }
    let ss = simples_of_degree(*m.grading(), m.degree())?;
    Ok(ss.iter().filter(|s| hom(m, &s.rep).dim() > 0).map(|s| s.lambda.clone()).collect())
}

/// Highest weights of the simples in the socle of `m`.
pub fn socle_partitions(m: &Rep<Single>) -> Result<Vec<Partition>> {
    if m.degree() == 0 {
        return Ok(if m.is_zero() { vec![] } else { vec![Partition::empty()] });
    }
    let ss = simples_of_degree(*m.grading(), m.degree())?;
    Ok(ss.iter().filter(|s| hom(&s.rep, m).dim() > 0).map(|s| s.lambda.clone()).collect())
}

fn all_restricted(ls: &[Partition], p: usize, r: usize) -> bool {
    ls.iter().all(|l| is_pr_restricted(l, p, r))
}

#[derive(Clone, Debug, Serialize)]
pub struct CupReport {
    pub labels: [String; 4],
    pub r: usize,
    pub c1: bool,
    pub c2: bool,
    pub hom_fg: usize,
    pub hom_xy: usize,
    pub hom_total: usize,
    /// Rank of the family `f_a ⊗ g_b^{(r)}` inside `Hom(F⊗X^{(r)}, G⊗Y^{(r)})`.
    pub cup_rank: usize,
    pub ext1_fg: usize,
    pub ext1_xy: usize,
    pub ext1_total: usize,
}

impl CupReport {
    pub fn injective(&self) -> bool {
        self.cup_rank == self.hom_fg * self.hom_xy && self.ext1_total >= self.ext1_expected()
    }
    pub fn ext1_expected(&self) -> usize {
        self.hom_fg * self.ext1_xy + self.ext1_fg * self.hom_xy
    }
    /// Degree 0 is strictly smaller than the target.
    pub fn strict(&self) -> bool {
        self.hom_total > self.hom_fg * self.hom_xy
    }
    pub fn ok(&self) -> bool {
        self.injective()
            && (!(self.c1 || self.c2) || self.hom_total == self.hom_fg * self.hom_xy)
            && (!(self.c1 && self.c2) || self.ext1_total == self.ext1_expected())
    }
}

/// Degree 0 and 1 cup products `Ext^*(F,G) ⊗ Ext^*(X,Y) → Ext^*(F⊗X^{(r)}, G⊗Y^{(r)})`.
pub fn verify_cup_deg01(
    f: &Rep<Single>,
    g: &Rep<Single>,
    x: &Rep<Single>,
    y: &Rep<Single>,
    r: usize,
    opts: &ResolveOptions,
) -> Result<CupReport> {
    let ctx = *f.grading();
    let p = ctx.f.p() as usize;
    let q = pow(p, r);
    if f.degree() + q * x.degree() != g.degree() + q * y.degree() {
        return Err(HomologyError::AssertFailure("source and target degrees differ".into()));
    }
    let (src, tgt) = (tensor(f, &twist(x, r)), tensor(g, &twist(y, r)));
    // C1 ⇔ deg F ≤ deg G and i(G,r) > 0; C2 ⇔ deg F ≥ deg G and p(F,r) > 0.
    // i(G,r) > 0 iff Soc(G) is p^r-restricted, p(F,r) > 0 iff Head(F) is.
    let c1 = f.degree() <= g.degree() && all_restricted(&socle_partitions(g)?, p, r);
    let c2 = f.degree() >= g.degree() && all_restricted(&head_partitions(f)?, p, r);
    let (hfg, hxy) = (hom(f, g), hom(x, y));
    let mut ech: Option<Echelon> = None;
    for a in 0..hfg.dim() {
        for b in 0..hxy.dim() {
            let m = tensor_map(&hfg.map(a), &twist_map(&hxy.map(b), r));
            let v = map_coordinates(&*m);
            let e = ech.get_or_insert_with(|| Echelon::new(ctx.f, v.len()));
            e.insert(v);
        }
    }
    Ok(CupReport {
        labels: [f.label().into(), g.label().into(), x.label().into(), y.label().into()],
        r,
        c1,
        c2,
        hom_fg: hfg.dim(),
        hom_xy: hxy.dim(),
        hom_total: hom(&src, &tgt).dim(),
        cup_rank: ech.map_or(0, |e| e.rank()),
        ext1_fg: ext_dim(f, g, 1, opts)?,
        ext1_xy: ext_dim(x, y, 1, opts)?,
        ext1_total: ext_dim(&src, &tgt, 1, opts)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnRow {
    pub k: usize,
    pub total: usize,
    pub product: usize,
    pub iso_expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnReport {
    /// Degrees below this bound must be isomorphisms (`None`: no bound).
    pub bound: Option<usize>,
    pub rows: Vec<ConnRow>,
}

impl ConnReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| if r.iso_expected { r.total == r.product } else { r.total >= r.product })
    }
}

fn lower_bound(v: InvariantValue) -> Option<usize> {
    match v {
        InvariantValue::Finite(k) | InvariantValue::AtLeast(k) => Some(k),
        InvariantValue::Infinite => None,
    }
}

/// `Ext^k(F⊗X^{(r)}, G⊗Y^{(r)})` against `⊕_{a+b=k} Ext^a(F,G) ⊗ Ext^b(X^{(r)},Y^{(r)})`
/// for `k < kmax`; equality is required below the theorem's bound.
pub fn verify_connectedness(
    f: &Rep<Single>,
    g: &Rep<Single>,
    x: &Rep<Single>,
    y: &Rep<Single>,
    r: usize,
    kmax: usize,
    opts: &InvariantOptions,
) -> Result<ConnReport> {
    use std::cmp::Ordering::*;
    let bound = match f.degree().cmp(&g.degree()) {
        Less => lower_bound(invariant_i(g, r, opts)?),
        Greater => lower_bound(invariant_p(f, r, opts)?),
        Equal => match (lower_bound(invariant_p(f, r, opts)?), lower_bound(invariant_i(g, r, opts)?)) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        },
    };
    let (xr, yr) = (twist(x, r), twist(y, r));
    let (src, tgt) = (tensor(f, &xr), tensor(g, &yr));
    let ro = &opts.resolve;
    let mut efg = ExtComplex::for_modules(f, g, ro);
    let mut exy = ExtComplex::for_modules(&xr, &yr, ro);
    let mut etot = ExtComplex::for_modules(&src, &tgt, ro);
    let mut rows = Vec::new();
    for k in 0..kmax {
        let mut product = 0;
        for a in 0..=k {
            let e = efg.dim(a)?;
            if e > 0 {
                product += e * exy.dim(k - a)?;
            }
        }
        rows.push(ConnRow { k, total: etot.dim(k)?, product, iso_expected: bound.is_none_or(|b| k < b) });
    }
    Ok(ConnReport { bound, rows })
}

/// `s = Σ_{i≥1} d_i (p^i − 1)`.
pub fn ptitlm_shift(p: usize, tuple: &[usize]) -> usize {
    tuple.iter().enumerate().skip(1).map(|(i, d)| d * (pow(p, i) - 1)).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    pub shift: usize,
    /// `(k, dim Ext^k(T, S_λ), dim Ext^{k+s}(T, W_{λ'}))`.
    pub rows: Vec<(usize, usize, usize)>,
    /// `dim Ext^k(T, W_{λ'})` for `k < min(s, window)`; all must vanish.
    pub below_shift: Vec<usize>,
}

impl ShiftReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.1 == r.2) && self.below_shift.iter().all(|&d| d == 0)
    }
}

/// `Ext^k(T^{(d_0,…)}, S_λ) ≅ Ext^{k+s}(T^{(d_0,…)}, W_{λ'})` for `k < window`.
pub fn verify_shift_ptitlm(
    g: Single,
    lambda: &Partition,
    tuple: &[usize],
    window: usize,
    opts: &ResolveOptions,
) -> Result<ShiftReport> {
    let p = g.f.p() as usize;
    let s = ptitlm_shift(p, tuple);
    let t = modkit::build::twisted_tensor(g, tuple);
    let (nabla, delta) = (costandard(g, lambda)?, weyl(g, &lambda.conjugate())?);
    let mut a = ExtComplex::for_modules(&t, &nabla, opts);
    let mut b = ExtComplex::for_modules(&t, &delta, opts);
    let mut rows = Vec::new();
    for k in 0..window {
        rows.push((k, a.dim(k)?, b.dim(k + s)?));
    }
    let below_shift = (0..s.min(window)).map(|k| b.dim(k)).collect::<Result<_>>()?;
    Ok(ShiftReport { shift: s, rows, below_shift })
}

// ------------------------------------------------------------ explicit maps

type Map = Arc<HomMap<Single>>;

/// Comultiplication `Λ^{a+b} → Λ^a ⊗ Λ^b`.
pub fn wedge_comult(g: Single, a: usize, b: usize) -> Map {
    let src = wedge(g, a + b);
    let (tgt, ts) = tensor_with_source(g, vec![wedge(g, a), wedge(g, b)]);
    let f = g.f;
    let s2 = src.clone();
    HomMap::per_weight(
        &src,
        &tgt,
        Arc::new(move |w: &Weight| {
            let l = ts.layout(w);
            let mut m = ExactMatrix::zeros(f, l.dim, s2.wdim(w));
            if s2.wdim(w) == 0 {
                return m;
            }
            let set: Vec<usize> = (0..w.n()).filter(|&i| w.to_vec()[i] == 1).collect();
            for slot in &l.slots {
                // x_S = ± x_A ∧ x_B: the sign of the shuffle putting A before B
                let bset: Vec<usize> = (0..w.n()).filter(|&i| slot.weights[1].to_vec()[i] == 1).collect();
                let inv: usize = bset.iter().map(|&j| set.iter().filter(|&&i| i > j && !bset.contains(&i)).count()).sum();
                m.set(slot.offset, 0, if inv % 2 == 0 { 1 } else { f.neg(1) });
            }
            m
        }),
    )
}

/// Multiplication `S^a ⊗ S^b → S^{a+b}`.
pub fn sym_mult(g: Single, a: usize, b: usize) -> Map {
    let (src, ss) = tensor_with_source(g, vec![sym(g, a), sym(g, b)]);
    let tgt = sym(g, a + b);
    let f = g.f;
    HomMap::per_weight(
        &src,
        &tgt,
        Arc::new(move |w: &Weight| {
            let l = ss.layout(w);
            let mut m = ExactMatrix::zeros(f, 1, l.dim);
            for slot in &l.slots {
                m.set(0, slot.offset, 1);
            }
            m
        }),
    )
}

/// `φ : S^2 ⊗ S^2 → S^3 ⊗ S^1`, `x^a ⊗ x^b ↦ Σ_i b_i x^{a+b−e_i} ⊗ x_i`
/// (comultiplication `S^2 → S^1 ⊗ S^1` on the right factor, then
/// multiplication into the left factor).
pub fn phi_22(g: Single) -> Map {
    let (src, ss) = tensor_with_source(g, vec![sym(g, 2), sym(g, 2)]);
    let (tgt, ts) = tensor_with_source(g, vec![sym(g, 3), sym(g, 1)]);
    let f = g.f;
    HomMap::per_weight(
        &src,
        &tgt,
        Arc::new(move |w: &Weight| {
            let (ls, lt) = (ss.layout(w), ts.layout(w));
            let mut m = ExactMatrix::zeros(f, lt.dim, ls.dim);
            for slot in &ls.slots {
                let b = slot.weights[1].to_vec();
                for (i, &bi) in b.iter().enumerate() {
                    if bi == 0 {
                        continue;
                    }
                    let e = Weight::new(&(0..b.len()).map(|j| usize::from(j == i)).collect::<Vec<_>>());
                    let left = w.checked_sub(&e).expect("weight contains e_i");
                    let t = lt.index[&vec![left, e]];
                    m.add_at(lt.slots[t].offset, slot.offset, (bi % f.p() as usize) as u8);
                }
            }
            m
        }),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct SesReport {
    pub name: String,
    pub dims: [usize; 3],
    pub injective: bool,
    pub exact_middle: bool,
    pub surjective: bool,
    pub end_identified: bool,
}

impl SesReport {
    pub fn ok(&self) -> bool {
        self.injective && self.exact_middle && self.surjective && self.end_identified
    }
}

/// The three characteristic-two sequences
/// `0→Λ⁴→Λ³⊗Λ¹→S_{(2,1,1)}→0`, `0→S_{(3,1)}→S³⊗S¹→S⁴→0`,
/// `0→S_{(2,2)}→S²⊗S²→S_{(3,1)}⊕S⁴→0`, built from (co)multiplications.
pub fn verify_lmses(g: Single) -> Result<Vec<SesReport>> {
    if g.f.p() != 2 {
        return Err(HomologyError::AssertFailure("the sequences are specific to p = 2".into()));
    }
    if g.n < 4 {
        return Err(HomologyError::Mod(modkit::ModError::ContextTooSmall { need: 4, have: g.n }));
    }
    let part = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let mut out = Vec::new();

    // (1) cokernel of the comultiplication
    let c = wedge_comult(g, 3, 1);
    c.verify().map_err(HomologyError::AssertFailure)?;
    let s211 = costandard(g, &part(&[2, 1, 1]))?;
    let (coker, _) = Submodule::image(&c).quotient("coker");
    out.push(SesReport {
        name: "0 -> Wedge[4] -> Wedge[3]*Wedge[1] -> C[2,1,1] -> 0".into(),
        dims: [c.source().dim(), c.target().dim(), s211.dim()],
        injective: c.is_injective(),
        exact_middle: c.rank() + s211.dim() == c.target().dim(),
        surjective: true,
        end_identified: iso_test(&coker, &s211).is_iso(),
    });

    // (2) kernel of the multiplication
    let mu = sym_mult(g, 3, 1);
    mu.verify().map_err(HomologyError::AssertFailure)?;
    let s31 = costandard(g, &part(&[3, 1]))?;
    let ker = Submodule::kernel(&mu).as_rep("ker");
    out.push(SesReport {
        name: "0 -> C[3,1] -> Sym[3]*Sym[1] -> Sym[4] -> 0".into(),
        dims: [s31.dim(), mu.source().dim(), mu.target().dim()],
        injective: true,
        exact_middle: ker.dim() == s31.dim(),
        surjective: mu.is_surjective(),
        end_identified: iso_test(&ker, &s31).is_iso(),
    });

    // (3) (φ, mult) : S²⊗S² → S³⊗S¹ ⊕ S⁴, with image S_{(3,1)} ⊕ S⁴
    let phi = phi_22(g);
    phi.verify().map_err(HomologyError::AssertFailure)?;
    let m22 = sym_mult(g, 2, 2);
    let both = stack_maps(phi.source(), vec![phi.clone(), m22.clone()]);
    let mphi = phi.then(&sym_mult(g, 3, 1));
    let s22 = costandard(g, &part(&[2, 2]))?;
    let ker = Submodule::kernel(&both).as_rep("ker");
    let image_phi = Submodule::image(&phi).as_rep("im");
    out.push(SesReport {
        name: "0 -> C[2,2] -> Sym[2]*Sym[2] -> C[3,1] + Sym[4] -> 0".into(),
        dims: [s22.dim(), both.source().dim(), s31.dim() + m22.target().dim()],
        injective: true,
        exact_middle: ker.dim() == s22.dim() && iso_test(&ker, &s22).is_iso(),
        surjective: mphi.is_zero() && both.rank() == s31.dim() + m22.target().dim() && m22.is_surjective(),
        end_identified: iso_test(&image_phi, &s31).is_iso(),
    });
    Ok(out)
}

/// One instance of an identity between invariants.
#[derive(Clone, Debug, Serialize)]
pub struct OpCheck {
    pub rule: String,
    pub lhs: InvariantValue,
    pub rhs: InvariantValue,
}

impl OpCheck {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `i(F⊗G, r) = min(i(F,r), i(G,r))`.
pub fn check_tensor_min(f: &Rep<Single>, g: &Rep<Single>, r: usize, opts: &InvariantOptions) -> Result<OpCheck> {
    let lhs = invariant_i(&tensor(f, g), r, opts)?;
    let (a, b) = (invariant_i(f, r, opts)?, invariant_i(g, r, opts)?);
    let rhs = a.min(b).unwrap_or(InvariantValue::AtLeast(0));
    Ok(OpCheck { rule: format!("i({} * {}) = min", f.label(), g.label()), lhs, rhs })
}

/// `i(F⊕G, r) = min(i(F,r), i(G,r))`.
pub fn check_sum_min(f: &Rep<Single>, g: &Rep<Single>, r: usize, opts: &InvariantOptions) -> Result<OpCheck> {
    let lhs = invariant_i(&polyrep::direct_sum(vec![f.clone(), g.clone()]), r, opts)?;
    let (a, b) = (invariant_i(f, r, opts)?, invariant_i(g, r, opts)?);
    let rhs = a.min(b).unwrap_or(InvariantValue::AtLeast(0));
    Ok(OpCheck { rule: format!("i({} + {}) = min", f.label(), g.label()), lhs, rhs })
}

/// `p(F, r) = i(F^♯, r)`.
pub fn check_duality(f: &Rep<Single>, r: usize, opts: &InvariantOptions) -> Result<OpCheck> {
    Ok(OpCheck {
        rule: format!("p({}) = i(Dual({}))", f.label(), f.label()),
        lhs: invariant_p(f, r, opts)?,
        rhs: invariant_i(&polyrep::dual(f), r, opts)?,
    })
}

/// `i(F, r) = i(F^{(s)}, r+s)`.
pub fn check_twist_shift(f: &Rep<Single>, r: usize, s: usize, opts: &InvariantOptions) -> Result<OpCheck> {
    Ok(OpCheck {
        rule: format!("i({}, {r}) = i(Tw({},{s}), {})", f.label(), f.label(), r + s),
        lhs: invariant_i(f, r, opts)?,
        rhs: invariant_i(&twist(f, s), r + s, opts)?,
    })
}
