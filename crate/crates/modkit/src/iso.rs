//! Isomorphism testing by searching the hom space for an invertible element.

use crate::homs::{hom, HomSpace};
use crate::structure::SimpleData;
use polyrep::{Grading, Rep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoResult {
    Iso,
    NotIso,
    Inconclusive,
}

impl IsoResult {
    pub fn is_iso(self) -> bool {
        self == IsoResult::Iso
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    pub seed: u64,
    pub random_tries: usize,
    /// Exhaustive search is attempted when `p^{dim Hom}` is at most this.
    pub exhaustive_limit: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { seed: 0x5eed, random_tries: 64, exhaustive_limit: 1 << 20 }
    }
}

pub fn iso_test<G: Grading>(m: &Rep<G>, n: &Rep<G>) -> IsoResult {
    iso_test_with(m, n, IsoOptions::default())
}

fn same_character<G: Grading>(m: &Rep<G>, n: &Rep<G>) -> bool {
    m.degree() == n.degree() && m.character() == n.character()
}

pub fn iso_test_with<G: Grading>(m: &Rep<G>, n: &Rep<G>, opts: IsoOptions) -> IsoResult {
    if m.grading() != n.grading() || !same_character(m, n) {
        return IsoResult::NotIso;
    }
    if m.is_zero() {
        return IsoResult::Iso;
    }
    let hs = hom(m, n);
    search(&hs, opts)
}

/// Search a hom space between modules of equal character for an isomorphism.
pub fn search<G: Grading>(hs: &HomSpace<G>, opts: IsoOptions) -> IsoResult {
    let h = hs.dim();
    if h == 0 {
        return IsoResult::NotIso;
    }
    for i in 0..h {
        if hs.map(i).is_iso() {
            return IsoResult::Iso;
        }
    }
    let p = hs.tgt.field().p() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_tries {
        let c: Vec<u8> = (0..h).map(|_| rng.random_range(0..p) as u8).collect();
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        if hs.combination(&c).is_iso() {
            return IsoResult::Iso;
        }
    }
    let total = (h as u32).checked_mul(64 - p.leading_zeros()).map(|_| p.checked_pow(h as u32));
    match total.flatten() {
        Some(t) if t <= opts.exhaustive_limit => {
            let mut c = vec![0u8; h];
            for _ in 1..t {
                // odometer increment
                for x in c.iter_mut() {
                    *x += 1;
                    if (*x as u64) < p {
                        break;
                    }
                    *x = 0;
                }
                if hs.combination(&c).is_iso() {
                    return IsoResult::Iso;
                }
            }
            IsoResult::NotIso
        }
        _ => IsoResult::Inconclusive,
    }
}

/// For a simple `L`: `L ≅ N` iff the dimensions agree and `Hom(L, N) ≠ 0`.
pub fn iso_to_simple<G: Grading>(s: &SimpleData<G>, n: &Rep<G>) -> bool {
    s.rep.degree() == n.degree() && s.rep.character() == n.character() && crate::structure::hom_from_simple(s, n).dim() > 0
}
