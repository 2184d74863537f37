//! Text and JSON forms of kS_d-modules.
//!
//! ```text
//! SYMREP v1 p=3 d=3 dim=2
//! s 1
//! 0 1 1
//! 1 0 1
//! s 2
//! ...
//! ```
//! Each generator block lists its nonzero entries as `row col value`.

use crate::{Result, SymError};
use exactfield::{ExactMatrix, FieldSpec};
use polyrep::SymRep;
use serde::{Deserialize, Serialize};

pub fn to_text(u: &SymRep) -> String {
    let mut s = format!("SYMREP v1 p={} d={} dim={}\n", u.field().p(), u.degree(), u.dim());
    for (i, g) in u.gens().iter().enumerate() {
        s.push_str(&format!("s {}\n", i + 1));
        for (r, c, v) in g.entries() {
            s.push_str(&format!("{r} {c} {v}\n"));
        }
    }
    s
}

fn header_field(tok: Option<&str>, key: &str) -> Result<usize> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| SymError::Format(format!("expected {key}=<int> in header")))
}

pub fn from_text(text: &str) -> Result<SymRep> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| SymError::Format("empty input".into()))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("SYMREP") || toks.next() != Some("v1") {
        return Err(SymError::Format("missing `SYMREP v1` header".into()));
    }
    let p = header_field(toks.next(), "p")?;
    let d = header_field(toks.next(), "d")?;
    let dim = header_field(toks.next(), "dim")?;
    let f = FieldSpec::new(p as u32).map_err(|e| SymError::Format(e.to_string()))?;
    let mut gens: Vec<ExactMatrix> = Vec::new();
    for line in lines {
        let t: Vec<&str> = line.split_whitespace().collect();
        match t.as_slice() {
            ["s", i] => {
                let i: usize = i.parse().map_err(|_| SymError::Format(format!("bad generator line `{line}`")))?;
                if i != gens.len() + 1 {
                    return Err(SymError::Format(format!("generator s {i} out of order")));
                }
                gens.push(ExactMatrix::zeros(f, dim, dim));
            }
            [r, c, v] => {
                let parse = |x: &str| x.parse::<i64>().map_err(|_| SymError::Format(format!("bad entry `{line}`")));
                let (r, c, v) = (parse(r)?, parse(c)?, parse(v)?);
                let m = gens.last_mut().ok_or_else(|| SymError::Format("entry before any generator".into()))?;
                if r < 0 || c < 0 || r as usize >= dim || c as usize >= dim {
                    return Err(SymError::Format(format!("entry out of range `{line}`")));
                }
                m.set(r as usize, c as usize, f.reduce(v));
            }
            _ => return Err(SymError::Format(format!("unrecognised line `{line}`"))),
        }
    }
    Ok(SymRep::new(f, d, dim, gens)?)
}

/// JSON mirror of the text format.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SymRepJson {
    pub p: u32,
    pub d: usize,
    pub dim: usize,
    /// Per generator, the nonzero entries `[row, col, value]`.
    pub gens: Vec<Vec<(usize, usize, u8)>>,
}

pub fn to_json(u: &SymRep) -> SymRepJson {
    SymRepJson {
        p: u.field().p(),
        d: u.degree(),
        dim: u.dim(),
        gens: u.gens().iter().map(|g| g.entries().collect()).collect(),
    }
}

pub fn from_json(j: &SymRepJson) -> Result<SymRep> {
    let f = FieldSpec::new(j.p).map_err(|e| SymError::Format(e.to_string()))?;
    let gens = j
        .gens
        .iter()
        .map(|es| {
            ExactMatrix::from_entries(f, j.dim, j.dim, es.iter().map(|&(r, c, v)| (r, c, v as i64)))
                .map_err(|e| SymError::Format(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymRep::new(f, j.d, j.dim, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_round_trip() {
        let f = FieldSpec::new(3).unwrap();
        for u in [SymRep::regular(f, 3), SymRep::sign(f, 4), SymRep::trivial(f, 1)] {
            assert_eq!(from_text(&to_text(&u)).unwrap(), u);
            let s = serde_json::to_string(&to_json(&u)).unwrap();
            assert_eq!(from_json(&serde_json::from_str(&s).unwrap()).unwrap(), u);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_text("SYMREP v2 p=2 d=2 dim=1").is_err());
        assert!(from_text("SYMREP v1 p=2 d=2 dim=1\ns 1\n3 0 1").is_err());
        // s_1 = 0 is not an involution
        assert!(from_text("SYMREP v1 p=3 d=2 dim=1\ns 1\n").is_err());
    }
}
