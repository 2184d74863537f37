//! The invariants `i(F, r)` and `p(F, r)`: the first degree in which
//! `Ext^*(T(d,r), F)`, resp. `Ext^*(F, T(d,r))`, is nonzero. `L(d,r)` may
//! replace `T(d,r)`; both detection objects give the same answer.

use crate::ext::ExtComplex;
use crate::resolution::ResolveOptions;
use crate::{HomologyError, Result};
use modkit::build::{big_l_index, big_t_summands};
use modkit::simple;
use partitions::pow;
use polyrep::{Rep, Single};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum InvariantValue {
    Finite(usize),
    Infinite,
    /// Nothing nonzero up to the cap (or the budget ran out first).
    AtLeast(usize),
}

impl InvariantValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            InvariantValue::Finite(k) => Some(k),
            _ => None,
        }
    }
    /// `min` for values known exactly; `None` when undecidable from bounds.
    pub fn min(self, other: Self) -> Option<Self> {
        use InvariantValue::*;
        match (self, other) {
            (Infinite, x) | (x, Infinite) => Some(x),
            (Finite(a), Finite(b)) => Some(Finite(a.min(b))),
            (Finite(a), AtLeast(b)) | (AtLeast(b), Finite(a)) => (a < b).then_some(Finite(a)),
            (AtLeast(a), AtLeast(b)) => Some(AtLeast(a.min(b))),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Finite(k) => write!(f, "{k}"),
            InvariantValue::Infinite => write!(f, "inf"),
            InvariantValue::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// Which detection object to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetectionTarget {
    /// `T(d,r)`, the sum of twisted tensor powers.
    Tensor,
    /// `L(d,r)`, the sum of the non-`p^r`-restricted simples.
    Simple,
}

#[derive(Clone, Debug)]
pub struct InvariantOptions {
    pub cap: Option<usize>,
    pub target: DetectionTarget,
    pub resolve: ResolveOptions,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions { cap: None, target: DetectionTarget::Tensor, resolve: ResolveOptions::default() }
    }
}

/// Default search cap `2(p^r − 1) + d`.
pub fn default_cap(p: usize, r: usize, d: usize) -> usize {
    2 * (pow(p, r) - 1) + d
}

/// The summands of the detection object of degree `d`.
pub fn detection_modules(g: Single, d: usize, r: usize, target: DetectionTarget) -> Result<Vec<Rep<Single>>> {
    Ok(match target {
        DetectionTarget::Tensor => big_t_summands(g, d, r).into_iter().map(|x| x.1).collect(),
        DetectionTarget::Simple => {
            big_l_index(g, d, r).iter().map(|l| simple(g, l).map(|s| s.rep.clone())).collect::<modkit::Result<_>>()?
        }
    })
}

fn search(
    f: &Rep<Single>,
    r: usize,
    opts: &InvariantOptions,
    make: &dyn Fn(&Rep<Single>) -> ExtComplex<polyrep::Single>,
) -> Result<InvariantValue> {
    let g = *f.grading();
    let (p, d) = (g.f.p() as usize, f.degree());
    if d < pow(p, r) {
        return Ok(InvariantValue::Infinite);
    }
    if f.is_zero() {
        return Ok(InvariantValue::Infinite);
    }
    if g.n < d {
        return Err(HomologyError::Mod(modkit::ModError::ContextTooSmall { need: d, have: g.n }));
    }
    let targets = detection_modules(g, d, r, opts.target)?;
    let mut cx: Vec<ExtComplex<Single>> = targets.iter().map(make).collect();
    let cap = opts.cap.unwrap_or_else(|| default_cap(p, r, d));
    for k in 0..=cap {
        for c in cx.iter_mut() {
            match c.dim(k) {
                Ok(0) => {}
                Ok(_) => return Ok(InvariantValue::Finite(k)),
                Err(HomologyError::BudgetExceeded(_)) => return Ok(InvariantValue::AtLeast(k)),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(InvariantValue::AtLeast(cap + 1))
}

/// `i(F, r)`: least `k` with `Ext^k(T(d,r), F) ≠ 0` (or `L(d,r)`).
pub fn invariant_i(f: &Rep<Single>, r: usize, opts: &InvariantOptions) -> Result<InvariantValue> {
    search(f, r, opts, &|t| ExtComplex::for_modules(t, f, &opts.resolve))
}

/// `p(F, r)`: least `k` with `Ext^k(F, T(d,r)) ≠ 0` (or `L(d,r)`).
pub fn invariant_p(f: &Rep<Single>, r: usize, opts: &InvariantOptions) -> Result<InvariantValue> {
    search(f, r, opts, &|t| ExtComplex::for_modules(f, t, &opts.resolve))
}

#[cfg(test)]
mod tests {
    use super::*;
    use InvariantValue::*;

    #[test]
    fn min_rules() {
        assert_eq!(Finite(2).min(Infinite), Some(Finite(2)));
        assert_eq!(Finite(2).min(AtLeast(3)), Some(Finite(2)));
        assert_eq!(Finite(3).min(AtLeast(3)), None);
        assert_eq!(Infinite.min(Infinite), Some(Infinite));
    }

    #[test]
    fn caps_and_display() {
        assert_eq!(default_cap(2, 2, 4), 10);
        assert_eq!(default_cap(3, 1, 3), 7);
        assert_eq!(AtLeast(5).to_string(), ">=5");
        assert_eq!(serde_json::to_string(&Finite(1)).unwrap(), r#"{"kind":"finite","value":1}"#);
    }

    #[test]
    fn infinite_below_p_power() {
        let g = Single::new(exactfield::FieldSpec::new(2).unwrap(), 3);
        let o = InvariantOptions::default();
        assert_eq!(invariant_i(&polyrep::sym(g, 3), 2, &o).unwrap(), Infinite);
        assert_eq!(detection_modules(g, 3, 2, DetectionTarget::Tensor).unwrap().len(), 0);
    }
}
