//! Integer partitions and tuples: restrictedness, boundedness, p-adic
//! decompositions, and the index sets of the detection objects `T(d,r)`.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A partition, normalised: positive, weakly decreasing parts.
/// The empty list is the zero partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A composition (order matters, zeros allowed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tuple {
    pub entries: Vec<usize>,
}

pub fn pow(p: usize, r: usize) -> usize {
    p.checked_pow(r as u32).expect("p^r overflow")
}

impl Partition {
    /// Trailing zeros are dropped; any other zero or increase is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the input; handy for building from a weight.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts).unwrap()
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.parts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (panics if longer).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.len() <= n, "partition {self} has more than {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Self {
        let m = self.part(0);
        let parts = (0..m).map(|j| self.parts.iter().filter(|&&x| x > j).count()).collect();
        Partition { parts }
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.len().max(other.len());
        Partition { parts: (0..k).map(|i| self.part(i) + other.part(i)).collect() }
    }

    pub fn scale(&self, q: usize) -> Self {
        Self::new(self.parts.iter().map(|x| x * q).collect()).unwrap()
    }

    /// Dominance order: `self ⊵ other`. Only meaningful for equal weights.
    pub fn dominates(&self, other: &Self) -> bool {
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..k {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Compare in dominance order (`None` if incomparable).
    pub fn dominance_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.dominates(other), other.dominates(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            _ => None,
        }
    }

    /// Descending lexicographic comparison key (larger partitions first).
    pub fn lex_desc_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"a,b,c"`, optionally wrapped in parentheses; `""`/`"()"`/`"0"` is empty.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| PartitionError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Tuple {
    pub fn new(entries: Vec<usize>) -> Self {
        Tuple { entries }
    }
    pub fn trimmed(mut self) -> Self {
        while self.entries.last() == Some(&0) {
            self.entries.pop();
        }
        self
    }
    pub fn get(&self, i: usize) -> usize {
        self.entries.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `λ_last < p^r` and every consecutive difference `< p^r`.
pub fn is_pr_restricted(lambda: &Partition, p: usize, r: usize) -> bool {
    let q = pow(p, r);
    let ps = lambda.parts();
    match ps.last() {
        None => true,
        Some(&last) => last < q && ps.windows(2).all(|w| w[0] - w[1] < q),
    }
}

/// Every entry `< p^r`.
pub fn is_pr_bounded(t: &Tuple, p: usize, r: usize) -> bool {
    let q = pow(p, r);
    t.entries.iter().all(|&x| x < q)
}

/// `λ = Σ p^i λ^i` with every `λ^i` p-restricted. Works on the difference
/// sequence: `λ_j - λ_{j+1}` is split into its base-p digits level by level.
pub fn p_adic_decomposition(lambda: &Partition, p: usize) -> Vec<Partition> {
    let mut levels = Vec::new();
    let mut rest = lambda.clone();
    while !rest.is_empty() {
        let ps = rest.parts();
        let diffs: Vec<usize> = (0..ps.len()).map(|j| ps[j] - rest.part(j + 1)).collect();
        let low = suffix_sums(&diffs.iter().map(|d| d % p).collect::<Vec<_>>());
        let high = suffix_sums(&diffs.iter().map(|d| d / p).collect::<Vec<_>>());
        levels.push(Partition::new(low).unwrap());
        rest = Partition::new(high).unwrap();
    }
    if levels.is_empty() {
        levels.push(Partition::empty());
    }
    // recomposition and restrictedness are asserted rather than trusted
    let mut acc = Partition::empty();
    for (i, l) in levels.iter().enumerate() {
        assert!(is_pr_restricted(l, p, 1), "level {i} of {lambda} is not restricted");
        acc = acc.add(&l.scale(pow(p, i)));
    }
    assert_eq!(&acc, lambda, "p-adic recomposition failed");
    levels
}

fn suffix_sums(v: &[usize]) -> Vec<usize> {
    let mut out = vec![0; v.len()];
    let mut acc = 0;
    for i in (0..v.len()).rev() {
        acc += v[i];
        out[i] = acc;
    }
    out
}

/// Tuples `(d_0,…,d_k)` with `Σ p^i d_i = d` and `Σ_{i<r} p^i d_i < d`,
/// trailing zeros trimmed, in descending lexicographic order.
pub fn enumerate_t_index(d: usize, p: usize, r: usize) -> Vec<Tuple> {
    let mut out = Vec::new();
    let mut maxlev = 0;
    while pow(p, maxlev + 1) <= d {
        maxlev += 1;
    }
    let mut cur = vec![0; maxlev + 1];
    fn rec(level: usize, rem: usize, p: usize, r: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Tuple>) {
        if level == 0 {
            cur[0] = rem;
            let low: usize = (0..r.min(cur.len())).map(|i| cur[i] * pow(p, i)).sum();
            if low < d {
                out.push(Tuple::new(cur.clone()).trimmed());
            }
            return;
        }
        let q = pow(p, level);
        for k in 0..=rem / q {
            cur[level] = k;
            rec(level - 1, rem - k * q, p, r, d, cur, out);
        }
        cur[level] = 0;
    }
    if d == 0 {
        return out;
    }
    rec(maxlev, d, p, r, d, &mut cur, &mut out);
    out.sort_by(|a, b| b.entries.cmp(&a.entries));
    out
}

/// Partitions of `d` with at most `max_parts` parts, descending lexicographic.
pub fn enumerate_partitions(d: usize, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, maxpart: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (1..=maxpart.min(rem)).rev() {
            cur.push(x);
            rec(rem - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(d, d, max_parts, &mut cur, &mut out);
    out
}

/// Compositions of `d` into exactly `n` nonnegative parts, lexicographically
/// descending (so `(d,0,…,0)` comes first).
pub fn compositions(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for x in (0..=rem).rev() {
            cur[i] = x;
            rec(i + 1, rem - x, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn restrictedness() {
        assert!(is_pr_restricted(&pt("2,1"), 2, 1));
        assert!(!is_pr_restricted(&pt("3,1"), 2, 1));
        assert!(is_pr_restricted(&pt(""), 2, 1));
        assert!(is_pr_restricted(&pt("0"), 5, 3));
        assert!(!is_pr_restricted(&pt("4"), 2, 2));
        assert!(is_pr_restricted(&pt("3,1"), 2, 2));
    }

    #[test]
    fn boundedness() {
        assert!(is_pr_bounded(&Tuple::new(vec![1, 0, 1]), 2, 1));
        assert!(!is_pr_bounded(&Tuple::new(vec![2, 1]), 2, 1));
        assert!(is_pr_bounded(&Tuple::new(vec![0, 0]), 3, 0));
        assert!(!is_pr_bounded(&Tuple::new(vec![0, 1]), 3, 0));
    }

    #[test]
    fn decompositions() {
        assert_eq!(p_adic_decomposition(&pt("3,1"), 2), vec![pt("1,1"), pt("1")]);
        assert_eq!(p_adic_decomposition(&pt("2,1"), 2), vec![pt("2,1")]);
        assert_eq!(p_adic_decomposition(&pt("4,2"), 2), vec![pt(""), pt("2,1")]);
        assert_eq!(p_adic_decomposition(&pt(""), 3), vec![pt("")]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(pt("3,1").conjugate(), pt("2,1,1"));
        assert_eq!(pt("1,1,1").conjugate(), pt("3"));
        assert_eq!(pt("").conjugate(), pt(""));
    }

    #[test]
    fn t_index() {
        let t: Vec<Vec<usize>> = enumerate_t_index(4, 2, 1).into_iter().map(|t| t.entries).collect();
        assert_eq!(t, vec![vec![2, 1], vec![0, 2], vec![0, 0, 1]]);
        let t: Vec<Vec<usize>> = enumerate_t_index(4, 2, 2).into_iter().map(|t| t.entries).collect();
        assert_eq!(t, vec![vec![0, 0, 1]]);
        assert!(enumerate_t_index(1, 2, 1).is_empty());
        assert!(enumerate_t_index(3, 2, 2).is_empty());
    }

    #[test]
    fn partition_lists() {
        assert_eq!(enumerate_partitions(3, 3), vec![pt("3"), pt("2,1"), pt("1,1,1")]);
        assert_eq!(enumerate_partitions(0, 2), vec![pt("")]);
        assert_eq!(enumerate_partitions(4, 2), vec![pt("4"), pt("3,1"), pt("2,2")]);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn dominance() {
        assert!(pt("3,1").dominates(&pt("2,2")));
        assert_eq!(pt("3,1,1,1").dominance_cmp(&pt("2,2,2")), None);
    }
}
