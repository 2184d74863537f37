//! Run configuration shared by every verb.

use anyhow::{bail, Result};
use exactfield::FieldSpec;
use homology::{InvariantOptions, ResolveOptions};
use modkit::iso::IsoOptions;
use polyrep::Single;
use std::path::PathBuf;
use std::time::{Duration, Instant};
use symbridge::SymExtOptions;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// `None`: the verb's default (2 for single computations; suites pick their own).
    pub p: Option<u32>,
    /// Evaluation dimension; defaults to the total degree.
    pub n: Option<usize>,
    pub r: usize,
    /// Search cap for invariants; `None` means `2(p^r − 1) + d`.
    pub cap: Option<usize>,
    pub max_dim: Option<usize>,
    /// Degree limit for the internal tensor evaluator.
    pub max_degree: Option<usize>,
    /// Wall-clock budget for a suite; instances not started in time are inconclusive.
    pub time_budget: Option<Duration>,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub quiet: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            p: None,
            n: None,
            r: 1,
            cap: None,
            max_dim: None,
            max_degree: None,
            time_budget: None,
            cache_dir: None,
            format: Format::Text,
            seed: 0,
            quiet: true,
        }
    }
}

impl RunConfig {
    pub fn prime(&self) -> u32 {
        self.p.unwrap_or(2)
    }

    pub fn field(&self) -> Result<FieldSpec> {
        Ok(FieldSpec::new(self.prime())?)
    }

    /// The context `S(n, d)` for an object of total degree `d`.
    pub fn context(&self, degree: usize) -> Result<Single> {
        let n = self.n.unwrap_or(degree.max(1));
        if n == 0 {
            bail!("n must be positive");
        }
        if n < degree && !self.quiet {
            eprintln!("warning: n = {n} is below the degree {degree}; the functor is not faithfully represented");
        }
        Ok(Single::new(self.field()?, n))
    }

    pub fn resolve(&self) -> ResolveOptions {
        ResolveOptions { max_dim: self.max_dim, cache_dir: self.cache_dir.clone(), ..Default::default() }
    }

    pub fn invariant(&self) -> InvariantOptions {
        InvariantOptions { cap: self.cap, resolve: self.resolve(), ..Default::default() }
    }

    pub fn sym(&self) -> SymExtOptions {
        let d = SymExtOptions::default();
        SymExtOptions {
            max_degree: self.max_degree.unwrap_or(d.max_degree),
            max_dim: self.max_dim.unwrap_or(d.max_dim),
            seed: d.seed ^ self.seed,
        }
    }

    pub fn iso(&self) -> IsoOptions {
        let d = IsoOptions::default();
        IsoOptions { seed: d.seed ^ self.seed, ..d }
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.time_budget.map(|b| Instant::now() + b)
    }

    pub fn note(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }
}
