//! Abstract syntax of functor expressions.

use partitions::{Partition, pow};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FunctorExpr {
    Sym(usize),
    Wedge(usize),
    Div(usize),
    TensorPower(usize),
    Nat,
    /// The simple functor L_λ.
    Simple(Partition),
    /// The Weyl functor Δ_λ (W_λ).
    Weyl(Partition),
    /// The costandard (Schur) functor ∇_λ (S_λ).
    SchurMod(Partition),
    /// Truncated symmetric power Q^a.
    Q(usize),
    Twist(Box<FunctorExpr>, usize),
    Tensor(Box<FunctorExpr>, Box<FunctorExpr>),
    Sum(Box<FunctorExpr>, Box<FunctorExpr>),
    Dual(Box<FunctorExpr>),
    /// T(d, r): the sum of twisted tensor products indexed by the T-index set.
    BigT(usize, usize),
    /// L(d, r): the sum of the simples L_λ, λ ⊢ d, that are not p^r-restricted.
    BigL(usize, usize),
}

impl FunctorExpr {
    /// Total degree; `None` for a sum of summands of different degrees.
    pub fn degree(&self, p: usize) -> Option<usize> {
        use FunctorExpr::*;
        Some(match self {
            Sym(a) | Wedge(a) | Div(a) | TensorPower(a) | Q(a) => *a,
            Nat => 1,
            Simple(l) | Weyl(l) | SchurMod(l) => l.weight(),
            Twist(e, r) => e.degree(p)? * pow(p, *r),
            Tensor(a, b) => a.degree(p)? + b.degree(p)?,
            Sum(a, b) => {
                let (x, y) = (a.degree(p)?, b.degree(p)?);
                if x != y {
                    return None;
                }
                x
            }
            Dual(e) => e.degree(p)?,
            BigT(d, _) | BigL(d, _) => *d,
        })
    }

    pub fn tensor(a: FunctorExpr, b: FunctorExpr) -> Self {
        FunctorExpr::Tensor(Box::new(a), Box::new(b))
    }
    pub fn sum(a: FunctorExpr, b: FunctorExpr) -> Self {
        FunctorExpr::Sum(Box::new(a), Box::new(b))
    }
    pub fn twist(a: FunctorExpr, r: usize) -> Self {
        FunctorExpr::Twist(Box::new(a), r)
    }
    pub fn dual(a: FunctorExpr) -> Self {
        FunctorExpr::Dual(Box::new(a))
    }
}

fn parts(l: &Partition) -> String {
    l.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FunctorExpr {
    /// Canonical form: `*` binds tighter than `+`, both left-associative;
    /// parentheses only where needed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FunctorExpr::*;
        match self {
            Sym(a) => write!(f, "Sym[{a}]"),
            Wedge(a) => write!(f, "Wedge[{a}]"),
            Div(a) => write!(f, "Div[{a}]"),
            TensorPower(a) => write!(f, "Pow[{a}]"),
            Nat => write!(f, "Nat"),
            Simple(l) => write!(f, "L[{}]", parts(l)),
            Weyl(l) => write!(f, "W[{}]", parts(l)),
            SchurMod(l) => write!(f, "C[{}]", parts(l)),
            Q(a) => write!(f, "Q[{a}]"),
            Twist(e, r) => write!(f, "Tw({e},{r})"),
            Dual(e) => write!(f, "Dual({e})"),
            BigT(d, r) => write!(f, "T({d},{r})"),
            BigL(d, r) => write!(f, "Lsum({d},{r})"),
            Sum(a, b) => match **b {
                Sum(..) => write!(f, "{a} + ({b})"),
                _ => write!(f, "{a} + {b}"),
            },
            Tensor(a, b) => {
                match **a {
                    Sum(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                write!(f, " * ")?;
                match **b {
                    Sum(..) | Tensor(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let e = FunctorExpr::tensor(FunctorExpr::twist(FunctorExpr::Wedge(2), 1), FunctorExpr::Nat);
        assert_eq!(e.degree(2), Some(5));
        assert_eq!(e.to_string(), "Tw(Wedge[2],1) * Nat");
        assert_eq!(FunctorExpr::sum(FunctorExpr::Nat, FunctorExpr::Sym(2)).degree(2), None);
    }
}
