//! Submodule lattices by cyclic closure, and Alperin diagrams of
//! multiplicity-free modules.
//!
//! A submodule is recorded by its dominant weight spaces (reduced echelon
//! rows), which determine it. Every vector generates the same submodule as
//! its weight components together, so the cyclic submodules of weight
//! vectors at dominant weights already generate the lattice under sums.

use crate::{BiError, Result};
use exactfield::{Echelon, FieldSpec};
use modkit::present::generated_span;
use modkit::structure::composition_factors_by_character;
use modkit::{HasSimples, Submodule};
use polyrep::{Grading, Rep};
use std::collections::{BTreeMap, BTreeSet};

/// Dominant weight spaces of a submodule, aligned with [`Lattice::support`].
pub type Canon = Vec<Vec<Vec<u8>>>;

/// Instances are capped at `p^dim ≤ 2^12` vectors.
pub const MAX_VECTORS: f64 = 4096.0;

pub struct Lattice<G: Grading> {
    pub amb: Rep<G>,
    pub support: Vec<G::W>,
    /// Every submodule, by increasing dimension.
    pub members: Vec<Canon>,
}

fn projective_points(f: FieldSpec, d: usize) -> Vec<Vec<u8>> {
    let p = f.p() as u8;
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        let total = (p as usize).pow(free as u32);
        for mut x in 0..total {
            let mut v = vec![0u8; d];
            v[lead] = 1;
            for t in v.iter_mut().skip(lead + 1) {
                *t = (x % p as usize) as u8;
                x /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

impl<G: Grading> Lattice<G> {
    /// Enumerate every submodule of `amb`.
    pub fn enumerate(amb: &Rep<G>) -> Result<Self> {
        let f = amb.field();
        let dim = amb.dim();
        if (f.p() as f64).powi(dim as i32) > MAX_VECTORS {
            return Err(BiError::BudgetExceeded(format!("{}: {}^{} vectors", amb.label(), f.p(), dim)));
        }
        let support = amb.dominant_support();
        let mut cyclic = BTreeSet::new();
        for mu in &support {
            for v in projective_points(f, amb.wdim(mu)) {
                let gens = [(mu.clone(), v)];
                cyclic.insert(support.iter().map(|nu| generated_span(amb, &gens, nu).rref_rows()).collect::<Canon>());
            }
        }
        let lat = Lattice { amb: amb.clone(), support, members: vec![] };
        let members = lat.sum_closure(cyclic.into_iter().collect());
        Ok(Lattice { members, ..lat })
    }

    pub fn zero(&self) -> Canon {
        vec![vec![]; self.support.len()]
    }

    pub fn sum(&self, a: &Canon, b: &Canon) -> Canon {
        let f = self.amb.field();
        self.support
            .iter()
            .enumerate()
            .map(|(i, w)| Echelon::from_rows(f, self.amb.wdim(w), a[i].iter().chain(&b[i]).cloned()).rref_rows())
            .collect()
    }

    pub fn canon_of(&self, s: &Submodule<G>) -> Canon {
        self.support.iter().map(|w| s.at(w).as_ref().clone()).collect()
    }

    /// Canonical form from arbitrary spanning rows at each dominant weight.
    pub fn normalise(&self, rows: Vec<Vec<Vec<u8>>>) -> Canon {
        let f = self.amb.field();
        self.support.iter().zip(rows).map(|(w, r)| Echelon::from_rows(f, self.amb.wdim(w), r).rref_rows()).collect()
    }

    /// All sums of the given submodules (including the empty sum), sorted by
    /// dimension.
    pub fn sum_closure(&self, gens: Vec<Canon>) -> Vec<Canon> {
        let mut all: BTreeSet<Canon> = BTreeSet::new();
        all.insert(self.zero());
        let mut frontier: Vec<Canon> = vec![self.zero()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for c in &gens {
                    let s = self.sum(x, c);
                    if all.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        let mut v: Vec<Canon> = all.into_iter().collect();
        v.sort_by_key(|c| (self.dim_of(c), c.clone()));
        v
    }

    pub fn dim_of(&self, c: &Canon) -> usize {
        let g = self.amb.grading();
        self.support.iter().zip(c).map(|(w, r)| g.orbit_size(w) * r.len()).sum()
    }

    pub fn submodule(&self, c: &Canon) -> Submodule<G> {
        let gens = self.support.iter().zip(c).flat_map(|(w, rows)| rows.iter().map(move |r| (w.clone(), r.clone()))).collect();
        Submodule::generated(&self.amb, gens)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &Canon) -> bool {
        self.members.binary_search_by_key(&(self.dim_of(c), c.clone()), |m| (self.dim_of(m), m.clone())).is_ok()
    }
}

/// An Alperin diagram: composition factors, with an edge `S -> T` when `T`
/// lies directly below `S` (arrows point from the head towards the radical).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub vertices: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl Diagram {
    /// DOT edge list; isolated vertices are listed on their own.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for v in &self.vertices {
            if !self.edges.iter().any(|(a, b)| a == v || b == v) {
                s.push_str(&format!("  \"{v}\";\n"));
            }
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push('}');
        s
    }

    /// Vertex set `V × V'`; edges move along an edge in exactly one coordinate.
    pub fn product(&self, other: &Diagram, name: impl Fn(&str, &str) -> String) -> Diagram {
        let mut d = Diagram { vertices: BTreeSet::new(), edges: BTreeSet::new() };
        for a in &self.vertices {
            for b in &other.vertices {
                d.vertices.insert(name(a, b));
            }
        }
        for (a, a2) in &self.edges {
            for b in &other.vertices {
                d.edges.insert((name(a, b), name(a2, b)));
            }
        }
        for (b, b2) in &other.edges {
            for a in &self.vertices {
                d.edges.insert((name(a, b), name(a, b2)));
            }
        }
        d
    }

    pub fn rename(&self, name: impl Fn(&str) -> String) -> Diagram {
        Diagram {
            vertices: self.vertices.iter().map(|v| name(v)).collect(),
            edges: self.edges.iter().map(|(a, b)| (name(a), name(b))).collect(),
        }
    }
}

/// Whether every composition factor occurs once.
pub fn is_multiplicity_free<G: HasSimples>(m: &Rep<G>) -> Result<bool> {
    Ok(composition_factors_by_character(m)?.values().all(|&c| c == 1))
}

/// The diagram of a multiplicity-free module, read off its lattice: `T` is
/// below `S` when `T` is a factor of the smallest submodule having `S` as a
/// factor; edges are the covering relations.
pub fn alperin_diagram<G: HasSimples>(lat: &Lattice<G>) -> Result<Diagram> {
    let whole = composition_factors_by_character(&lat.amb)?;
    if whole.values().any(|&c| c != 1) {
        return Err(BiError::NotMultiplicityFree(lat.amb.label().to_string()));
    }
    let factors: Vec<BTreeSet<String>> = lat
        .members
        .iter()
        .map(|c| Ok(composition_factors_by_character(&lat.submodule(c).as_rep("U"))?.into_keys().collect()))
        .collect::<Result<_>>()?;
    let mut below: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for s in whole.keys() {
        // members are sorted by dimension, so the first hit is the smallest
        let i = factors.iter().position(|fs| fs.contains(s)).expect("the whole module is a member");
        let mut b = factors[i].clone();
        b.remove(s);
        below.insert(s.clone(), b);
    }
    let mut edges = BTreeSet::new();
    for (s, bs) in &below {
        for t in bs {
            if !bs.iter().any(|r| r != t && below[r].contains(t)) {
                edges.insert((s.clone(), t.clone()));
            }
        }
    }
    Ok(Diagram { vertices: whole.into_keys().collect(), edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        let f = FieldSpec::new(3).unwrap();
        // (p^d - 1)/(p - 1)
        assert_eq!(projective_points(f, 3).len(), 13);
        assert_eq!(projective_points(f, 0).len(), 0);
    }

    #[test]
    fn product_of_chains() {
        let chain = |a: &str, b: &str| Diagram {
            vertices: [a.to_string(), b.to_string()].into(),
            edges: [(a.to_string(), b.to_string())].into(),
        };
        let p = chain("x", "y").product(&chain("u", "v"), |a, b| format!("{a}{b}"));
        assert_eq!(p.vertices.len(), 4);
        let want: BTreeSet<(String, String)> =
            [("xu", "yu"), ("xv", "yv"), ("xu", "xv"), ("yu", "yv")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(p.edges, want);
        assert!(p.to_dot().contains("\"xu\" -> \"xv\";"));
    }
}
