//! Structure checks for Steinberg-type tensor products `F ⊗ G^(r)` and for
//! exterior products of bicomodules.

use crate::grading::{Bi, BiRep};
use crate::lattice::{alperin_diagram, is_multiplicity_free, Canon, Diagram, Lattice};
use crate::ops::{boxtimes, kron_vec, phi_with_source};
use crate::{BiError, Result};
use homology::{ext_dims, ResolveOptions};
use modkit::structure::{composition_factors_by_character, socle_layers};
use modkit::{head, hom, iso_test, socle};
use partitions::{is_pr_restricted, Partition};
use polyrep::{direct_sum, tensor, twist, Grading, Rep, Single};

/// Parts of a simple's label `L[a,b,…]`.
pub fn label_parts(label: &str) -> Vec<usize> {
    let inner = label.trim_start_matches("L[").trim_end_matches(']');
    inner.split(',').filter(|s| !s.is_empty()).map(|s| s.parse().expect("simple label")).collect()
}

fn parts_string(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Label of `L_a ⊗ L_b^(r) = L_{a + p^r b}`.
pub fn steinberg_label(a: &str, b: &str, q: usize) -> String {
    let (x, y) = (label_parts(a), label_parts(b));
    let len = x.len().max(y.len());
    let v: Vec<usize> = (0..len).map(|i| x.get(i).copied().unwrap_or(0) + q * y.get(i).copied().unwrap_or(0)).collect();
    format!("L[{}]", parts_string(&v))
}

/// The composition factors of `f`, all of which must be `p^r`-restricted.
pub fn check_restricted(f: &Rep<Single>, r: usize) -> Result<()> {
    let p = f.field().p() as usize;
    for l in composition_factors_by_character(f)?.keys() {
        let lam = Partition::from_unsorted(label_parts(l));
        if !is_pr_restricted(&lam, p, r) {
            return Err(BiError::NotRestricted(lam));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct HomSample {
    pub source: String,
    pub target: String,
    pub bi: usize,
    pub single: usize,
}

#[derive(Clone, Debug)]
pub struct LatticeCheck {
    pub size: usize,
    pub predicted: usize,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct DiagramCheck {
    pub computed: Diagram,
    pub predicted: Diagram,
    /// The predicted diagram with vertices named `L(λ)⊗L(μ)^(r)`.
    pub dot: String,
}

impl DiagramCheck {
    pub fn matches(&self) -> bool {
        self.computed == self.predicted
    }
}

#[derive(Clone, Debug)]
pub struct SteinbergReport {
    pub f: String,
    pub g: String,
    pub r: usize,
    /// `Φ(F ⊠ G) ≅ F ⊗ G^(r)`.
    pub phi_iso: bool,
    pub hom_samples: Vec<HomSample>,
    pub socle_lengths: (usize, usize),
    pub socle_layers_iso: Vec<bool>,
    /// Present only for multiplicity-free instances within the vector cap.
    pub lattice: Option<LatticeCheck>,
    pub diagram: Option<DiagramCheck>,
}

impl SteinbergReport {
    pub fn hom_ok(&self) -> bool {
        self.hom_samples.iter().all(|h| h.bi == h.single)
    }
    pub fn socle_ok(&self) -> bool {
        self.socle_lengths.0 == self.socle_lengths.1 && self.socle_layers_iso.iter().all(|&b| b)
    }
    pub fn ok(&self) -> bool {
        self.phi_iso
            && self.hom_ok()
            && self.socle_ok()
            && self.lattice.as_ref().is_none_or(|l| l.matches)
            && self.diagram.as_ref().is_none_or(|d| d.matches())
    }
}

fn socle_sub(m: &Rep<Single>) -> Result<Rep<Single>> {
    Ok(socle(m)?.as_rep(format!("soc {}", m.label())))
}

/// Check the structure of `F ⊗ G^(r)` against `F ⊠ G` (both evaluated at
/// the same `kⁿ`).
pub fn verify_steinberg_type(f: &Rep<Single>, g: &Rep<Single>, r: usize) -> Result<SteinbergReport> {
    if f.grading() != g.grading() {
        return Err(BiError::ContextMismatch);
    }
    check_restricted(f, r)?;
    let q = (f.field().p() as usize).pow(r as u32);
    let m = tensor(f, &twist(g, r));
    let b = boxtimes(f, g)?;
    let (pm, src) = phi_with_source(&b, r)?;
    let phi_iso = iso_test(&pm, &m).is_iso();

    // (a) Hom between exterior products against Hom after collapsing.
    let lefts = [f.clone(), socle_sub(f)?, head(f)?];
    let rights = [g.clone(), socle_sub(g)?, head(g)?];
    let objs: Vec<(Rep<Single>, Rep<Single>)> =
        vec![(lefts[0].clone(), rights[0].clone()), (lefts[1].clone(), rights[0].clone()), (lefts[0].clone(), rights[1].clone()), (lefts[2].clone(), rights[2].clone())];
    let mut hom_samples = Vec::new();
    for (a, x) in &objs {
        for (c, y) in &objs {
            let bi = hom(&boxtimes(a, x)?, &boxtimes(c, y)?).dim();
            let single = hom(&tensor(a, &twist(x, r)), &tensor(c, &twist(y, r))).dim();
            hom_samples.push(HomSample { source: format!("{}⊠{}", a.label(), x.label()), target: format!("{}⊠{}", c.label(), y.label()), bi, single });
        }
    }

    // (b) Socle layers.
    let (lm, lf, lg) = (socle_layers(&m)?, socle_layers(f)?, socle_layers(g)?);
    let want = lf.len() + lg.len() - 1;
    let mut socle_layers_iso = Vec::new();
    if lm.len() == want {
        for (k, layer) in lm.iter().enumerate() {
            let parts: Vec<Rep<Single>> = (0..=k)
                .filter(|&i| i < lf.len() && k - i < lg.len())
                .map(|i| tensor(&lf[i], &twist(&lg[k - i], r)))
                .collect();
            socle_layers_iso.push(iso_test(layer, &direct_sum(parts)).is_iso());
        }
    }

    // (c), (d) Lattice and diagram, when small and multiplicity-free.
    let (mut lattice, mut diagram) = (None, None);
    let small = (f.field().p() as f64).powi(m.dim() as i32) <= crate::lattice::MAX_VECTORS;
    if small && is_multiplicity_free(&m)? {
        let lat = Lattice::enumerate(&pm)?;
        let (lat_f, lat_g) = (Lattice::enumerate(f)?, Lattice::enumerate(g)?);
        let subs_f: Vec<_> = lat_f.members.iter().map(|c| lat_f.submodule(c)).collect();
        let subs_g: Vec<_> = lat_g.members.iter().map(|c| lat_g.submodule(c)).collect();
        let fld = f.field();
        let mut products: Vec<Canon> = Vec::new();
        for u in &subs_f {
            for v in &subs_g {
                let rows = lat
                    .support
                    .iter()
                    .map(|nu| {
                        let total = pm.wdim(nu);
                        let mut out = Vec::new();
                        for ((a, bw), off, _) in src.components(nu) {
                            for x in u.at(&a).iter() {
                                for y in v.at(&bw).iter() {
                                    let mut vec = vec![0u8; total];
                                    let t = kron_vec(fld, x, y);
                                    vec[off..off + t.len()].copy_from_slice(&t);
                                    out.push(vec);
                                }
                            }
                        }
                        out
                    })
                    .collect();
                products.push(lat.normalise(rows));
            }
        }
        let predicted = lat.sum_closure(products);
        lattice = Some(LatticeCheck { size: lat.len(), predicted: predicted.len(), matches: predicted == lat.members });

        let (df, dg) = (alperin_diagram(&lat_f)?, alperin_diagram(&lat_g)?);
        let computed = alperin_diagram(&lat)?;
        let predicted = df.product(&dg, |a, b| steinberg_label(a, b, q));
        let pretty = df.product(&dg, |a, b| format!("L({})⊗L({})^({r})", parts_string(&label_parts(a)), parts_string(&label_parts(b))));
        diagram = Some(DiagramCheck { computed, predicted, dot: pretty.to_dot() });
    }

    Ok(SteinbergReport {
        f: f.label().to_string(),
        g: g.label().to_string(),
        r,
        phi_iso,
        hom_samples,
        socle_lengths: (lm.len(), want),
        socle_layers_iso,
        lattice,
        diagram,
    })
}

/// Checks on one exterior product `M ⊠ N`.
#[derive(Clone, Debug)]
pub struct ProductCheck {
    pub label: String,
    /// `Soc(M ⊠ N) = Soc M ⊠ Soc N` as subspaces.
    pub socle: bool,
    /// `Head(M ⊠ N) ≅ Head M ⊠ Head N`.
    pub head: bool,
    /// Socle layers of `M ⊠ N` against `⊕_{i+j=k} layer_i M ⊠ layer_j N`.
    pub series: bool,
    /// Every submodule is a sum of products `U ⊠ V` (small instances only).
    pub lattice: Option<bool>,
}

impl ProductCheck {
    pub fn ok(&self) -> bool {
        self.socle && self.head && self.series && self.lattice.unwrap_or(true)
    }
}

fn kron_rows(f: exactfield::FieldSpec, us: &[Vec<u8>], vs: &[Vec<u8>]) -> Vec<Vec<u8>> {
    us.iter().flat_map(|u| vs.iter().map(move |v| kron_vec(f, u, v))).collect()
}

fn product_canon(lat: &Lattice<Bi>, u: &modkit::Submodule<Single>, v: &modkit::Submodule<Single>) -> Canon {
    let f = lat.amb.field();
    let rows = lat
        .support
        .iter()
        .map(|(a, b)| kron_rows(f, &u.at(a), &v.at(b)))
        .collect();
    lat.normalise(rows)
}

pub fn check_product(m: &Rep<Single>, n: &Rep<Single>) -> Result<ProductCheck> {
    let b = boxtimes(m, n)?;
    let g = *b.grading();
    let amb_canon = |s: &modkit::Submodule<Bi>| -> Canon { g.dominant_weights(b.degree()).iter().map(|w| s.at(w).as_ref().clone()).collect() };

    let sb = socle(&b)?;
    let (sm, sn) = (socle(m)?, socle(n)?);
    let f = b.field();
    let want: Canon = g
        .dominant_weights(b.degree())
        .iter()
        .map(|(x, y)| {
            let rows = kron_rows(f, &sm.at(x), &sn.at(y));
            exactfield::Echelon::from_rows(f, b.wdim(&(x.clone(), y.clone())), rows).rref_rows()
        })
        .collect();
    let socle_ok = amb_canon(&sb) == want;

    let head_ok = iso_test(&head(&b)?, &boxtimes(&head(m)?, &head(n)?)?).is_iso();

    let (lb, lm, ln) = (socle_layers(&b)?, socle_layers(m)?, socle_layers(n)?);
    let mut series = lb.len() + 1 == lm.len() + ln.len();
    if series {
        for (k, layer) in lb.iter().enumerate() {
            let parts: Vec<BiRep> = (0..=k)
                .filter(|&i| i < lm.len() && k - i < ln.len())
                .map(|i| boxtimes(&lm[i], &ln[k - i]))
                .collect::<Result<_>>()?;
            series &= iso_test(layer, &direct_sum(parts)).is_iso();
        }
    }

    let lattice = if (f.p() as f64).powi(b.dim() as i32) <= crate::lattice::MAX_VECTORS {
        let lat = Lattice::enumerate(&b)?;
        let (lat_m, lat_n) = (Lattice::enumerate(m)?, Lattice::enumerate(n)?);
        let mut products = Vec::new();
        for u in &lat_m.members {
            for v in &lat_n.members {
                products.push(product_canon(&lat, &lat_m.submodule(u), &lat_n.submodule(v)));
            }
        }
        Some(lat.sum_closure(products) == lat.members)
    } else {
        None
    };

    Ok(ProductCheck { label: b.label().to_string(), socle: socle_ok, head: head_ok, series, lattice })
}

/// `Ext^{0,1}` between exterior products against the Künneth prediction.
#[derive(Clone, Debug)]
pub struct KunnethCheck {
    pub label: String,
    pub bi: Vec<usize>,
    pub predicted: Vec<usize>,
}

impl KunnethCheck {
    pub fn ok(&self) -> bool {
        self.bi == self.predicted
    }
}

fn opts() -> ResolveOptions {
    ResolveOptions { cache_dir: None, ..Default::default() }
}

pub fn check_kunneth(m: &Rep<Single>, x: &Rep<Single>, n: &Rep<Single>, y: &Rep<Single>) -> Result<KunnethCheck> {
    let o = opts();
    let bi = ext_dims(&boxtimes(m, x)?, &boxtimes(n, y)?, 1, &o)?;
    let a = ext_dims(m, n, 1, &o)?;
    let c = ext_dims(x, y, 1, &o)?;
    let predicted = vec![a[0] * c[0], a[1] * c[0] + a[0] * c[1]];
    Ok(KunnethCheck { label: format!("({}⊠{}, {}⊠{})", m.label(), x.label(), n.label(), y.label()), bi, predicted })
}

#[derive(Clone, Debug, Default)]
pub struct AppendixAReport {
    pub products: Vec<ProductCheck>,
    pub kunneth: Vec<KunnethCheck>,
}

impl AppendixAReport {
    pub fn ok(&self) -> bool {
        self.products.iter().all(|c| c.ok()) && self.kunneth.iter().all(|c| c.ok())
    }
    pub fn instances(&self) -> usize {
        self.products.len() + self.kunneth.len()
    }
}

pub type KunnethSample = (Rep<Single>, Rep<Single>, Rep<Single>, Rep<Single>);

pub fn verify_appendix_a(pairs: &[(Rep<Single>, Rep<Single>)], quads: &[KunnethSample]) -> Result<AppendixAReport> {
    let mut rep = AppendixAReport::default();
    for (m, n) in pairs {
        rep.products.push(check_product(m, n)?);
    }
    for (m, x, n, y) in quads {
        rep.kunneth.push(check_kunneth(m, x, n, y)?);
    }
    Ok(rep)
}

/// `L_λ ⊠ L_μ` is simple; a product with a non-simple factor is not.
pub fn simplicity_transport(m: &Rep<Single>, n: &Rep<Single>) -> Result<(bool, bool)> {
    let both = modkit::is_simple(m)? && modkit::is_simple(n)?;
    let b = boxtimes(m, n)?;
    Ok((both, modkit::is_simple(&b)?))
}
