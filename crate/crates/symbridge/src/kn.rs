//! Comparison of Ext groups on the two sides of the Schur functor.

use crate::resolve::{sym_ext_dims, SymExtOptions};
use crate::schur::schur_functor;
use crate::Result;
use homology::{ext_dims, invariant_i, invariant_p, InvariantOptions, InvariantValue};
use polyrep::{Rep, Single};
use serde::Serialize;

/// What the comparison predicts in a given degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KnExpect {
    Equal,
    AtMost,
    Unconstrained,
}

#[derive(Clone, Debug, Serialize)]
pub struct KnRow {
    pub k: usize,
    pub ext_p: usize,
    pub ext_sym: usize,
    pub expect: KnExpect,
}

impl KnRow {
    pub fn ok(&self) -> bool {
        match self.expect {
            KnExpect::Equal => self.ext_p == self.ext_sym,
            KnExpect::AtMost => self.ext_p <= self.ext_sym,
            KnExpect::Unconstrained => true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KnReport {
    pub p_f: InvariantValue,
    pub i_g: InvariantValue,
    /// `p(F,1) + i(G,1) − 1`; `None` when infinite. A lower estimate when an
    /// invariant is only known as a lower bound, in which case the boundary
    /// degree is not checked.
    pub bound: Option<i64>,
    pub bound_exact: bool,
    pub rows: Vec<KnRow>,
}

impl KnReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(KnRow::ok)
    }
}

fn lower(v: InvariantValue) -> Option<i64> {
    match v {
        InvariantValue::Finite(k) | InvariantValue::AtLeast(k) => Some(k as i64),
        InvariantValue::Infinite => None,
    }
}

/// Compare `Ext^k_P(F, G)` with `Ext^k_{kS_d}(f_d F, f_d G)` for `k ≤ kmax`.
pub fn verify_kn(
    f: &Rep<Single>,
    g: &Rep<Single>,
    kmax: usize,
    inv: &InvariantOptions,
    sym_opts: &SymExtOptions,
) -> Result<KnReport> {
    let p_f = invariant_p(f, 1, inv)?;
    let i_g = invariant_i(g, 1, inv)?;
    let bound = match (lower(p_f), lower(i_g)) {
        (Some(a), Some(b)) => Some(a + b - 1),
        _ => None,
    };
    let bound_exact = matches!(p_f, InvariantValue::Finite(_) | InvariantValue::Infinite)
        && matches!(i_g, InvariantValue::Finite(_) | InvariantValue::Infinite);
    let ep = ext_dims(f, g, kmax, &inv.resolve)?;
    let es = sym_ext_dims(&schur_functor(f)?, &schur_functor(g)?, kmax, sym_opts)?;
    let rows = (0..=kmax)
        .map(|k| {
            let expect = match bound {
                None => KnExpect::Equal,
                Some(b) if (k as i64) < b => KnExpect::Equal,
                Some(b) if k as i64 == b && bound_exact => KnExpect::AtMost,
                _ => KnExpect::Unconstrained,
            };
            KnRow { k, ext_p: ep[k], ext_sym: es[k], expect }
        })
        .collect();
    Ok(KnReport { p_f, i_g, bound, bound_exact, rows })
}

/// One of the boundary cases showing the comparison range cannot be widened.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryCase {
    pub label: String,
    pub k: usize,
    pub ext_p: usize,
    pub ext_sym: usize,
    /// Failure mode that was predicted: `"not_iso"` or `"not_injective"`.
    pub failure: String,
}

impl BoundaryCase {
    pub fn ok(&self) -> bool {
        match self.failure.as_str() {
            "not_iso" => self.ext_p != self.ext_sym,
            _ => self.ext_p > 0 && self.ext_sym == 0,
        }
    }
}

/// `(Γ^p, Q^p)` at degree 0: no maps of functors, but `f_p` of both is trivial.
pub fn gamma_q_case(g: Single, inv: &InvariantOptions, sym_opts: &SymExtOptions) -> Result<BoundaryCase> {
    let p = g.f.p() as usize;
    let (gam, q) = (polyrep::div(g, p), polyrep::q_trunc(g, p));
    let k = match invariant_i(&q, 1, inv)? {
        InvariantValue::Finite(i) if i > 0 => i - 1,
        other => return Err(crate::SymError::Assert(format!("i(Q^p,1) = {other}"))),
    };
    let ext_p = ext_dims(&gam, &q, k, &inv.resolve)?[k];
    let ext_sym = sym_ext_dims(&schur_functor(&gam)?, &schur_functor(&q)?, k, sym_opts)?[k];
    Ok(BoundaryCase { label: format!("Div[{p}], Q[{p}]"), k, ext_p, ext_sym, failure: "not_iso".into() })
}

/// `(T(d,1), G)` in degree `i(G,1)`: `f_d(T(d,1)) = 0` while the functor
/// side is nonzero.
pub fn big_t_case(g: &Rep<Single>, inv: &InvariantOptions) -> Result<BoundaryCase> {
    let ctx = g.grading().clone();
    let d = g.degree();
    let t = modkit::build(&polyrep::FunctorExpr::BigT(d, 1), ctx)?;
    let k = match invariant_i(g, 1, inv)? {
        InvariantValue::Finite(i) => i,
        other => return Err(crate::SymError::Assert(format!("i(G,1) = {other}"))),
    };
    let ext_p = ext_dims(&t, g, k, &inv.resolve)?[k];
    let ft = schur_functor(&t)?;
    let ext_sym = if ft.dim() == 0 { 0 } else { sym_ext_dims(&ft, &schur_functor(g)?, k, &SymExtOptions::default())?[k] };
    Ok(BoundaryCase { label: format!("T({d},1), {}", g.label()), k, ext_p, ext_sym, failure: "not_injective".into() })
}
