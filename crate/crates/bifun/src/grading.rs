//! The two-variable grading: `GL_n × GL_m`, with weights, keys and tables
//! taken componentwise. The coefficient algebra is `S(n,d) ⊗ S(m,e)`.

use exactfield::FieldSpec;
use modkit::{present::present_with, HasSimples, SimpleData};
use polyrep::{Comod, Grading, Key, Single, Weight};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A bicomodule: a bifunctor evaluated at `(kⁿ, kᵐ)`.
pub type BiRep = polyrep::Rep<Bi>;
pub type BiWeight = (Weight, Weight);
pub type BiKey = (Key, Key);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bi {
    pub f: FieldSpec,
    pub n: usize,
    pub m: usize,
}

impl Bi {
    pub fn new(f: FieldSpec, n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "evaluation dimensions must be positive");
        Bi { f, n, m }
    }

    pub fn left(&self) -> Single {
        Single::new(self.f, self.n)
    }

    pub fn right(&self) -> Single {
        Single::new(self.f, self.m)
    }
}

type TableCache = Mutex<HashMap<(usize, usize, BiWeight, BiWeight), Arc<Vec<BiKey>>>>;
type ProductCache = Mutex<HashMap<(u32, usize, usize, BiKey, BiKey), Arc<Vec<(BiKey, u8)>>>>;

fn table_cache() -> &'static TableCache {
    static C: OnceLock<TableCache> = OnceLock::new();
    C.get_or_init(Default::default)
}
fn product_cache() -> &'static ProductCache {
    static C: OnceLock<ProductCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

impl Grading for Bi {
    type W = BiWeight;
    type K = BiKey;
    type D = (usize, usize);

    fn field(&self) -> FieldSpec {
        self.f
    }
    fn all_weights(&self, (d, e): (usize, usize)) -> Vec<BiWeight> {
        let rs = self.right().all_weights(e);
        self.left().all_weights(d).into_iter().flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }
    fn dominant_weights(&self, (d, e): (usize, usize)) -> Vec<BiWeight> {
        let rs = self.right().dominant_weights(e);
        self.left().dominant_weights(d).into_iter().flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }
    fn orbit_size(&self, w: &BiWeight) -> usize {
        w.0.orbit_size() * w.1.orbit_size()
    }
    fn is_dominant(&self, w: &BiWeight) -> bool {
        w.0.is_dominant() && w.1.is_dominant()
    }
    fn dominant_rep(&self, w: &BiWeight) -> BiWeight {
        (w.0.sorted_desc(), w.1.sorted_desc())
    }
    fn rowsum(&self, k: &BiKey) -> BiWeight {
        (k.0.rowsum(self.n), k.1.rowsum(self.m))
    }
    fn colsum(&self, k: &BiKey) -> BiWeight {
        (k.0.colsum(self.n), k.1.colsum(self.m))
    }
    fn diag(&self, w: &BiWeight) -> BiKey {
        (Key::diag(&w.0), Key::diag(&w.1))
    }
    fn transpose(&self, k: &BiKey) -> BiKey {
        (k.0.transpose(self.n), k.1.transpose(self.m))
    }
    fn tables(&self, out: &BiWeight, inp: &BiWeight) -> Arc<Vec<BiKey>> {
        let ck = (self.n, self.m, out.clone(), inp.clone());
        if let Some(v) = table_cache().lock().unwrap().get(&ck) {
            return v.clone();
        }
        let l = self.left().tables(&out.0, &inp.0);
        let r = self.right().tables(&out.1, &inp.1);
        let v: Arc<Vec<BiKey>> = Arc::new(l.iter().flat_map(|a| r.iter().map(move |b| (a.clone(), b.clone()))).collect());
        table_cache().lock().unwrap().insert(ck, v.clone());
        v
    }
    /// `(ξ_F ⊗ ξ_F')(ξ_E ⊗ ξ_E') = ξ_Fξ_E ⊗ ξ_F'ξ_E'`.
    fn product(&self, f: &BiKey, e: &BiKey) -> Arc<Vec<(BiKey, u8)>> {
        let ck = (self.f.p(), self.n, self.m, f.clone(), e.clone());
        if let Some(v) = product_cache().lock().unwrap().get(&ck) {
            return v.clone();
        }
        let l = self.left().product(&f.0, &e.0);
        let r = self.right().product(&f.1, &e.1);
        let mut out = Vec::with_capacity(l.len() * r.len());
        for (a, x) in l.iter() {
            for (b, y) in r.iter() {
                let c = self.f.mul(*x, *y);
                if c != 0 {
                    out.push(((a.clone(), b.clone()), c));
                }
            }
        }
        let v = Arc::new(out);
        product_cache().lock().unwrap().insert(ck, v.clone());
        v
    }
    /// Generators of one side paired with the weight idempotents of the other.
    fn generator_keys(&self, (d, e): (usize, usize)) -> Vec<BiKey> {
        let (l, r) = (self.left(), self.right());
        let mut out = Vec::new();
        for k in l.generator_keys(d) {
            for w in r.all_weights(e) {
                out.push((k.clone(), Key::diag(&w)));
            }
        }
        for k in r.generator_keys(e) {
            for w in l.all_weights(d) {
                out.push((Key::diag(&w), k.clone()));
            }
        }
        out
    }
    fn weight_string(&self, w: &BiWeight) -> String {
        format!("{}|{}", w.0, w.1)
    }
}

/// The simple bicomodules are the `L_λ ⊠ L_μ`.
impl HasSimples for Bi {
    fn simples(&self, (d, e): (usize, usize)) -> modkit::Result<Vec<Arc<SimpleData<Self>>>> {
        let ls = modkit::simples::simples_up_to_n(self.left(), d)?;
        let rs = modkit::simples::simples_up_to_n(self.right(), e)?;
        let mut out = Vec::new();
        for a in &ls {
            for b in &rs {
                let rep = crate::ops::boxtimes_unchecked(&a.rep, &b.rep);
                let hw = (a.hw.clone(), b.hw.clone());
                let dim = rep.wdim(&hw);
                if dim != 1 {
                    return Err(modkit::ModError::Assert(format!("highest weight space of dimension {dim}")));
                }
                let pres = present_with(&rep, vec![(hw.clone(), vec![1])]);
                out.push(Arc::new(SimpleData { label: simple_label(&a.lambda, &b.lambda), hw, rep, pres }));
            }
        }
        Ok(out)
    }
}

pub fn simple_label(l: &partitions::Partition, m: &partitions::Partition) -> String {
    let s = |p: &partitions::Partition| p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    format!("L[{}]⊠L[{}]", s(l), s(m))
}

/// A bicomodule with no nonzero weight spaces.
pub fn zero_bi(g: Bi, deg: (usize, usize)) -> BiRep {
    Comod::new(
        g,
        deg,
        "0",
        Arc::new(polyrep::ExplicitSource { f: g.f, g, wdims: HashMap::new(), blocks: HashMap::new() }),
    )
}
