//! Weights, exponent keys and the combinatorics of the coefficient coalgebra.
//!
//! A degree-`d` comodule over the polynomial functions on `n×n` matrices is
//! described by matrices `coeff[E]`, one per exponent matrix `E` (entry sum
//! `d`). In a weight-adapted basis `coeff[E]` maps the weight space
//! `colsum(E)` to the weight space `rowsum(E)`, so it is stored as a block.
//!
//! [`Grading`] abstracts over the one-variable case ([`Single`]) and the
//! two-variable (bifunctor) case, so that the module toolkit and the
//! resolution code can be written once.

use exactfield::FieldSpec;
use smallvec::SmallVec;
use std::collections::HashMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// A weight: a composition of the degree into `n` parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub SmallVec<[u8; 8]>);

/// An exponent matrix, stored as the sorted multiset of its cells
/// `i*n + j` (`i` = output/row index, `j` = input/column index).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key(pub SmallVec<[u16; 8]>);

impl Weight {
    pub fn new(v: &[usize]) -> Self {
        Weight(v.iter().map(|&x| u8::try_from(x).expect("weight entry too large")).collect())
    }
    pub fn zero(n: usize) -> Self {
        Weight(SmallVec::from_elem(0, n))
    }
    pub fn n(&self) -> usize {
        self.0.len()
    }
    pub fn total(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }
    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }
    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    pub fn checked_sub(&self, o: &Weight) -> Option<Weight> {
        let mut v = SmallVec::new();
        for (a, b) in self.0.iter().zip(&o.0) {
            v.push(a.checked_sub(*b)?);
        }
        Some(Weight(v))
    }
    pub fn scale(&self, q: usize) -> Weight {
        Weight(self.0.iter().map(|&a| u8::try_from(a as usize * q).expect("weight overflow")).collect())
    }
    pub fn div_exact(&self, q: usize) -> Option<Weight> {
        if self.0.iter().all(|&a| a as usize % q == 0) {
            Some(Weight(self.0.iter().map(|&a| (a as usize / q) as u8).collect()))
        } else {
            None
        }
    }
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
    pub fn sorted_desc(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }
    /// Number of distinct permutations of the entries.
    pub fn orbit_size(&self) -> usize {
        let mut counts: HashMap<u8, usize> = HashMap::new();
        for &x in &self.0 {
            *counts.entry(x).or_default() += 1;
        }
        let mut r = factorial(self.n()) as usize;
        for c in counts.values() {
            r /= factorial(*c) as usize;
        }
        r
    }
    pub fn as_partition(&self) -> partitions::Partition {
        partitions::Partition::from_unsorted(self.to_vec())
    }
}

impl Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}
impl Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Key {
    pub fn from_cells(mut cells: Vec<u16>) -> Self {
        cells.sort_unstable();
        Key(cells.into())
    }
    pub fn empty() -> Self {
        Key(SmallVec::new())
    }
    /// From a dense row-major `n×n` exponent matrix.
    pub fn from_matrix(n: usize, m: &[usize]) -> Self {
        assert_eq!(m.len(), n * n);
        let mut cells = SmallVec::new();
        for (c, &e) in m.iter().enumerate() {
            for _ in 0..e {
                cells.push(c as u16);
            }
        }
        Key(cells)
    }
    pub fn degree(&self) -> usize {
        self.0.len()
    }
    pub fn to_matrix(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n * n];
        for &c in &self.0 {
            m[c as usize] += 1;
        }
        m
    }
    /// Distinct cells with multiplicities.
    pub fn runs(&self) -> Vec<(u16, usize)> {
        let mut out: Vec<(u16, usize)> = Vec::new();
        for &c in &self.0 {
            match out.last_mut() {
                Some((cc, k)) if *cc == c => *k += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
    pub fn rowsum(&self, n: usize) -> Weight {
        let mut w = Weight::zero(n);
        for &c in &self.0 {
            w.0[c as usize / n] += 1;
        }
        w
    }
    pub fn colsum(&self, n: usize) -> Weight {
        let mut w = Weight::zero(n);
        for &c in &self.0 {
            w.0[c as usize % n] += 1;
        }
        w
    }
    pub fn add(&self, o: &Key) -> Key {
        let mut v: SmallVec<[u16; 8]> = self.0.iter().chain(o.0.iter()).copied().collect();
        v.sort_unstable();
        Key(v)
    }
    pub fn scale(&self, q: usize) -> Key {
        let mut v = SmallVec::new();
        for &c in &self.0 {
            for _ in 0..q {
                v.push(c);
            }
        }
        Key(v)
    }
    pub fn div_exact(&self, q: usize) -> Option<Key> {
        let mut v = SmallVec::new();
        for (c, k) in self.runs() {
            if k % q != 0 {
                return None;
            }
            for _ in 0..k / q {
                v.push(c);
            }
        }
        Some(Key(v))
    }
    pub fn transpose(&self, n: usize) -> Key {
        let v: Vec<u16> = self.0.iter().map(|&c| ((c as usize % n) * n + c as usize / n) as u16).collect();
        Key::from_cells(v)
    }
    pub fn diag(w: &Weight) -> Key {
        let n = w.n();
        let mut v = SmallVec::new();
        for (i, &k) in w.0.iter().enumerate() {
            for _ in 0..k {
                v.push((i * n + i) as u16);
            }
        }
        Key(v)
    }
    pub fn is_diagonal(&self, n: usize) -> bool {
        self.0.iter().all(|&c| c as usize / n == c as usize % n)
    }
    /// Flattened exponent vector, the order used for serialisation.
    pub fn exponents(&self, n: usize) -> Vec<usize> {
        self.to_matrix(n)
    }
}

impl Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key{:?}", self.0.as_slice())
    }
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

pub fn multinomial(parts: &[usize]) -> u64 {
    let tot: usize = parts.iter().sum();
    let mut r = factorial(tot);
    for &x in parts {
        r /= factorial(x);
    }
    r
}

/// Grading data shared by all comodules of a given kind.
pub trait Grading: Clone + Debug + PartialEq + Send + Sync + 'static {
    type W: Clone + Ord + Hash + Debug + Send + Sync + 'static;
    type K: Clone + Ord + Hash + Debug + Send + Sync + 'static;
    type D: Clone + Copy + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn field(&self) -> FieldSpec;
    /// Every weight of the given degree, in canonical order.
    fn all_weights(&self, d: Self::D) -> Vec<Self::W>;
    /// Dominant weights, in lexicographically descending order.
    fn dominant_weights(&self, d: Self::D) -> Vec<Self::W>;
    fn orbit_size(&self, w: &Self::W) -> usize;
    fn is_dominant(&self, w: &Self::W) -> bool;
    /// The dominant weight in the Weyl orbit of `w`.
    fn dominant_rep(&self, w: &Self::W) -> Self::W;
    fn rowsum(&self, k: &Self::K) -> Self::W;
    fn colsum(&self, k: &Self::K) -> Self::W;
    fn diag(&self, w: &Self::W) -> Self::K;
    fn transpose(&self, k: &Self::K) -> Self::K;
    /// Keys `E` with `rowsum(E) = out` and `colsum(E) = inp`, canonical order.
    fn tables(&self, out: &Self::W, inp: &Self::W) -> Arc<Vec<Self::K>>;
    /// Structure constants of the dual algebra: `ξ_F ξ_E = Σ c_G ξ_G`,
    /// equivalently `coeff[F]·coeff[E] = Σ c_G coeff[G]` on any comodule.
    fn product(&self, f: &Self::K, e: &Self::K) -> Arc<Vec<(Self::K, u8)>>;
    /// Keys whose coefficient matrices generate the dual algebra together with
    /// the diagonal keys.
    fn generator_keys(&self, d: Self::D) -> Vec<Self::K>;
    fn weight_string(&self, w: &Self::W) -> String;
}

/// The one-variable grading: GL_n over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Single {
    pub f: FieldSpec,
    pub n: usize,
}

impl Single {
    pub fn new(f: FieldSpec, n: usize) -> Self {
        assert!(n >= 1, "evaluation dimension must be positive");
        Single { f, n }
    }
}

type TableCache = Mutex<HashMap<(usize, Weight, Weight), Arc<Vec<Key>>>>;
type ProductCache = Mutex<HashMap<(u32, usize, Key, Key), Arc<Vec<(Key, u8)>>>>;

fn table_cache() -> &'static TableCache {
    static C: OnceLock<TableCache> = OnceLock::new();
    C.get_or_init(Default::default)
}
fn product_cache() -> &'static ProductCache {
    static C: OnceLock<ProductCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// All nonnegative integer matrices with the given row and column sums,
/// row-major, each returned as a dense vector.
pub fn contingency_tables(rows: &[usize], cols: &[usize]) -> Vec<Vec<usize>> {
    let (nr, nc) = (rows.len(), cols.len());
    let mut out = Vec::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    let mut m = vec![0usize; nr * nc];
    let mut colrem = cols.to_vec();
    fn fill_row(
        i: usize, j: usize, rowrem: usize, nr: usize, nc: usize, rows: &[usize], colrem: &mut Vec<usize>,
        m: &mut Vec<usize>, out: &mut Vec<Vec<usize>>,
    ) {
        if i == nr {
            if colrem.iter().all(|&c| c == 0) {
                out.push(m.clone());
            }
            return;
        }
        if j + 1 == nc {
            if rowrem <= colrem[j] {
                m[i * nc + j] = rowrem;
                colrem[j] -= rowrem;
                let next = if i + 1 < nr { rows[i + 1] } else { 0 };
                fill_row(i + 1, 0, next, nr, nc, rows, colrem, m, out);
                colrem[j] += rowrem;
                m[i * nc + j] = 0;
            }
            return;
        }
        let hi = rowrem.min(colrem[j]);
        for x in (0..=hi).rev() {
            m[i * nc + j] = x;
            colrem[j] -= x;
            fill_row(i, j + 1, rowrem - x, nr, nc, rows, colrem, m, out);
            colrem[j] += x;
        }
        m[i * nc + j] = 0;
    }
    if nr == 0 || nc == 0 {
        if rows.iter().all(|&x| x == 0) && cols.iter().all(|&x| x == 0) {
            out.push(m);
        }
        return out;
    }
    fill_row(0, 0, rows[0], nr, nc, rows, &mut colrem, &mut m, &mut out);
    out
}

impl Single {
    fn product_uncached(&self, f: &Key, e: &Key) -> Vec<(Key, u8)> {
        let n = self.n;
        let fm = f.to_matrix(n);
        let em = e.to_matrix(n);
        // middle index a: T^(a) has row sums F[·][a] and column sums E[a][·]
        let mut per_a: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
        for a in 0..n {
            let rs: Vec<usize> = (0..n).map(|i| fm[i * n + a]).collect();
            let cs: Vec<usize> = (0..n).map(|j| em[a * n + j]).collect();
            let ts = contingency_tables(&rs, &cs);
            if ts.is_empty() {
                return vec![];
            }
            per_a.push(ts);
        }
        let mut acc: HashMap<Vec<usize>, u64> = HashMap::new();
        let p = self.f.p() as u64;
        let mut idx = vec![0usize; n];
        loop {
            let mut g = vec![0usize; n * n];
            let mut denom_ok = 1u64;
            for a in 0..n {
                let t = &per_a[a][idx[a]];
                for c in 0..n * n {
                    g[c] += t[c];
                    denom_ok *= factorial(t[c]);
                }
            }
            let mut num = 1u64;
            for &x in &g {
                num *= factorial(x);
            }
            let coef = (num / denom_ok) % p;
            if coef != 0 {
                let e = acc.entry(g).or_insert(0);
                *e = (*e + coef) % p;
            }
            // odometer
            let mut a = 0;
            loop {
                if a == n {
                    let mut out: Vec<(Key, u8)> =
                        acc.into_iter().filter(|(_, c)| *c != 0).map(|(g, c)| (Key::from_matrix(n, &g), c as u8)).collect();
                    out.sort();
                    return out;
                }
                idx[a] += 1;
                if idx[a] < per_a[a].len() {
                    break;
                }
                idx[a] = 0;
                a += 1;
            }
        }
    }
}

impl Grading for Single {
    type W = Weight;
    type K = Key;
    type D = usize;

    fn field(&self) -> FieldSpec {
        self.f
    }
    fn all_weights(&self, d: usize) -> Vec<Weight> {
        partitions::compositions(d, self.n).iter().map(|c| Weight::new(c)).collect()
    }
    fn dominant_weights(&self, d: usize) -> Vec<Weight> {
        partitions::enumerate_partitions(d, self.n).iter().map(|l| Weight::new(&l.padded(self.n))).collect()
    }
    fn orbit_size(&self, w: &Weight) -> usize {
        w.orbit_size()
    }
    fn is_dominant(&self, w: &Weight) -> bool {
        w.is_dominant()
    }
    fn dominant_rep(&self, w: &Weight) -> Weight {
        w.sorted_desc()
    }
    fn rowsum(&self, k: &Key) -> Weight {
        k.rowsum(self.n)
    }
    fn colsum(&self, k: &Key) -> Weight {
        k.colsum(self.n)
    }
    fn diag(&self, w: &Weight) -> Key {
        Key::diag(w)
    }
    fn transpose(&self, k: &Key) -> Key {
        k.transpose(self.n)
    }
    fn tables(&self, out: &Weight, inp: &Weight) -> Arc<Vec<Key>> {
        let ck = (self.n, out.clone(), inp.clone());
        if let Some(v) = table_cache().lock().unwrap().get(&ck) {
            return v.clone();
        }
        let ts = contingency_tables(&out.to_vec(), &inp.to_vec());
        let v: Arc<Vec<Key>> = Arc::new(ts.iter().map(|m| Key::from_matrix(self.n, m)).collect());
        table_cache().lock().unwrap().insert(ck, v.clone());
        v
    }
    fn product(&self, f: &Key, e: &Key) -> Arc<Vec<(Key, u8)>> {
        let ck = (self.f.p(), self.n, f.clone(), e.clone());
        if let Some(v) = product_cache().lock().unwrap().get(&ck) {
            return v.clone();
        }
        let v = Arc::new(self.product_uncached(f, e));
        product_cache().lock().unwrap().insert(ck, v.clone());
        v
    }
    fn generator_keys(&self, d: usize) -> Vec<Key> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(1) {
            for (a, b) in [(i, i + 1), (i + 1, i)] {
                for k in 1..=d {
                    for nu in partitions::compositions(d - k, n) {
                        let mut m = vec![0; n * n];
                        for (t, &x) in nu.iter().enumerate() {
                            m[t * n + t] = x;
                        }
                        m[a * n + b] += k;
                        out.push(Key::from_matrix(n, &m));
                    }
                }
            }
        }
        out
    }
    fn weight_string(&self, w: &Weight) -> String {
        w.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_counts() {
        // 2x2 tables with margins (1,1),(1,1): the two permutation matrices
        assert_eq!(contingency_tables(&[1, 1], &[1, 1]).len(), 2);
        assert_eq!(contingency_tables(&[2, 0], &[1, 1]), vec![vec![1, 1, 0, 0]]);
        assert!(contingency_tables(&[2], &[1]).is_empty());
        // total number of keys of degree 4 at n = 4 is C(19,4)
        let g = Single::new(FieldSpec::new(2).unwrap(), 4);
        let ws = g.all_weights(4);
        let total: usize = ws.iter().flat_map(|a| ws.iter().map(move |b| (a, b))).map(|(a, b)| g.tables(a, b).len()).sum();
        assert_eq!(total, 3876);
    }

    #[test]
    fn product_of_idempotents() {
        let g = Single::new(FieldSpec::new(3).unwrap(), 2);
        let w = Weight::new(&[1, 1]);
        let d = Key::diag(&w);
        assert_eq!(*g.product(&d, &d), vec![(d.clone(), 1)]);
        let w2 = Weight::new(&[2, 0]);
        assert!(g.product(&Key::diag(&w2), &d).is_empty());
    }

    #[test]
    fn key_transforms() {
        let k = Key::from_matrix(2, &[1, 2, 0, 1]);
        assert_eq!(k.rowsum(2), Weight::new(&[3, 1]));
        assert_eq!(k.colsum(2), Weight::new(&[1, 3]));
        assert_eq!(k.transpose(2).to_matrix(2), vec![1, 0, 2, 1]);
        assert_eq!(k.scale(2).div_exact(2), Some(k.clone()));
        assert_eq!(k.div_exact(2), None);
        assert_eq!(Weight::new(&[2, 1, 1]).orbit_size(), 3);
    }
}
