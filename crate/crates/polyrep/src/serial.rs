//! Canonical text serialisation of one-variable comodules.
//!
//! ```text
//! POLYREP v1 p=<p> n=<n> d=<d> dim=<dim>
//! E=<n² exponents, comma separated> r=<row> c=<col> v=<value>
//! ```
//! Entry lines are sorted by (exponent vector, row, col). Rows and columns
//! index the flat basis, which lists weight spaces in canonical weight order.

use crate::comod::{Comod, ExplicitSource, Rep};
use crate::grading::{Grading, Key, Single, Weight};
use crate::{PolyError, Result};
use exactfield::{ExactMatrix, FieldSpec};
use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

pub fn serialize(m: &Rep<Single>) -> String {
    let g = m.grading();
    let layout = m.layout();
    let offs: HashMap<Weight, usize> = layout.iter().map(|(w, o, _)| (w.clone(), *o)).collect();
    let dim: usize = layout.iter().map(|x| x.2).sum();
    let mut entries: Vec<(Vec<usize>, usize, usize, u8)> = Vec::new();
    for (k, b) in m.nonzero_blocks() {
        let (ro, co) = (offs[&k.rowsum(g.n)], offs[&k.colsum(g.n)]);
        let ex = k.exponents(g.n);
        for (r, c, v) in b.entries() {
            entries.push((ex.clone(), ro + r, co + c, v));
        }
    }
    entries.sort();
    let mut s = format!("POLYREP v1 p={} n={} d={} dim={}\n", g.f.p(), g.n, m.degree(), dim);
    for (ex, r, c, v) in entries {
        let e: Vec<String> = ex.iter().map(|x| x.to_string()).collect();
        writeln!(s, "E={} r={r} c={c} v={v}", e.join(",")).unwrap();
    }
    s
}

fn field<'a>(tok: Option<&'a str>, name: &str) -> Result<&'a str> {
    let t = tok.ok_or_else(|| PolyError::Format(format!("missing field {name}")))?;
    t.strip_prefix(name).and_then(|r| r.strip_prefix('=')).ok_or_else(|| PolyError::Format(format!("expected {name}=, got {t}")))
}

fn num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| PolyError::Format(format!("bad number {s:?}")))
}

/// Parse a serialised module. If `ctx` is given, `p` and `n` must match it.
pub fn deserialize(text: &str, ctx: Option<Single>) -> Result<Rep<Single>> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| PolyError::Format("empty stream".into()))?;
    let mut h = header.split_whitespace();
    if h.next() != Some("POLYREP") || h.next() != Some("v1") {
        return Err(PolyError::Format("bad header".into()));
    }
    let p = num(field(h.next(), "p")?)?;
    let n = num(field(h.next(), "n")?)?;
    let d = num(field(h.next(), "d")?)?;
    let dim = num(field(h.next(), "dim")?)?;
    if h.next().is_some() {
        return Err(PolyError::Format("trailing header fields".into()));
    }
    let f = FieldSpec::new(p as u32).map_err(|e| PolyError::Format(e.to_string()))?;
    if n == 0 {
        return Err(PolyError::Format("n must be positive".into()));
    }
    if let Some(c) = ctx {
        if c.f != f || c.n != n {
            return Err(PolyError::ContextMismatch(format!("stream has p={p} n={n}, context has p={} n={}", c.f.p(), c.n)));
        }
    }
    let g = Single::new(f, n);
    let mut entries: Vec<(Vec<usize>, usize, usize, u8)> = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let mut t = line.split_whitespace();
        let ex: Vec<usize> = field(t.next(), "E")?.split(',').map(num).collect::<Result<_>>()?;
        let r = num(field(t.next(), "r")?)?;
        let c = num(field(t.next(), "c")?)?;
        let v = num(field(t.next(), "v")?)?;
        if t.next().is_some() || ex.len() != n * n || ex.iter().sum::<usize>() != d || r >= dim || c >= dim || v == 0 || v >= p {
            return Err(PolyError::Format(format!("bad entry line {line:?}")));
        }
        entries.push((ex, r, c, v as u8));
    }
    if entries.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PolyError::Format("entries not strictly sorted".into()));
    }
    // weights of basis vectors from the counit
    let mut wt: Vec<Option<Weight>> = vec![None; dim];
    for (ex, r, c, v) in &entries {
        let k = Key::from_matrix(n, ex);
        if k.is_diagonal(n) {
            if r != c || *v != 1 || wt[*r].is_some() {
                return Err(PolyError::Format("basis is not weight-adapted".into()));
            }
            wt[*r] = Some(k.rowsum(n));
        }
    }
    let wt: Vec<Weight> = wt.into_iter().collect::<Option<_>>().ok_or_else(|| PolyError::Format("counit incomplete".into()))?;
    let mut wdims: HashMap<Weight, usize> = HashMap::new();
    let mut local = vec![0usize; dim];
    let order: HashMap<Weight, usize> = g.all_weights(d).into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    for i in 0..dim {
        if i > 0 && order[&wt[i - 1]] > order[&wt[i]] {
            return Err(PolyError::Format("basis not in canonical weight order".into()));
        }
        let e = wdims.entry(wt[i].clone()).or_insert(0);
        local[i] = *e;
        *e += 1;
    }
    let mut blocks: HashMap<Key, ExactMatrix> = HashMap::new();
    for (ex, r, c, v) in &entries {
        let k = Key::from_matrix(n, ex);
        let (o, i) = (k.rowsum(n), k.colsum(n));
        if wt[*r] != o || wt[*c] != i {
            return Err(PolyError::Format(format!("entry {ex:?} does not respect weights")));
        }
        blocks.entry(k).or_insert_with(|| ExactMatrix::zeros(f, wdims[&o], wdims[&i])).set(local[*r], local[*c], *v);
    }
    let src = ExplicitSource { f, g, wdims, blocks };
    Ok(Comod::new(g, d, "deserialized", Arc::new(src)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::*;

    #[test]
    fn roundtrip_sym3() {
        let g = Single::new(FieldSpec::new(2).unwrap(), 3);
        let s = serialize(&sym(g, 3));
        let back = deserialize(&s, Some(g)).unwrap();
        assert_eq!(serialize(&back), s);
        assert!(s.starts_with("POLYREP v1 p=2 n=3 d=3 dim=10\n"));
    }

    #[test]
    fn truncated_and_mismatch() {
        let g = Single::new(FieldSpec::new(3).unwrap(), 2);
        let s = serialize(&wedge(g, 2));
        let cut = &s[..s.len() - 4];
        assert!(matches!(deserialize(cut, None), Err(PolyError::Format(_))));
        assert!(matches!(deserialize("POLYREP v1 p=3", None), Err(PolyError::Format(_))));
        let other = Single::new(FieldSpec::new(2).unwrap(), 2);
        assert!(matches!(deserialize(&s, Some(other)), Err(PolyError::ContextMismatch(_))));
    }
}
