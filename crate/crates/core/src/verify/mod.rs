//! Seeded verification suites and their JSON reports.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::DEFAULT_DEGREE;
use crate::tolerance::Tolerances;

mod algebra;
mod diameters;
pub mod generators;
mod growth;
mod quaternion;
mod schwarz;
mod series;
mod zeros;

pub use zeros::zeros_cases;

pub const SUITES: [&str; 7] = ["algebra", "series", "schwarz", "quaternion", "diameters", "zeros", "growth"];
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub degree: usize,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub suites: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            degree: DEFAULT_DEGREE,
            samples: DEFAULT_SAMPLES,
            tolerances: Tolerances::default(),
            suites: vec!["all".into()],
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::BadParameter("samples must be at least 1".into()));
        }
        if self.degree == 0 {
            return Err(Error::BadParameter("degree must be at least 1".into()));
        }
        let t = &self.tolerances;
        if [t.alg, t.series, t.sample].iter().any(|x| !(*x > 0.0 && x.is_finite())) {
            return Err(Error::BadParameter("tolerances must be positive".into()));
        }
        Ok(())
    }

    /// RNG for sample `k` of `case`, independent of evaluation order.
    pub fn rng(&self, case: &str, k: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(sub_seed(self.seed, case, k))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    /// Signed; negative means the check is violated.
    pub margin: f64,
    pub details: String,
}

impl Case {
    pub fn new(name: impl Into<String>, margin: f64, details: impl Into<String>) -> Self {
        let margin = if margin.is_nan() { f64::MIN } else { margin.clamp(f64::MIN, f64::MAX) };
        Case {
            name: name.into(),
            pass: margin >= 0.0,
            margin,
            details: details.into(),
        }
    }

    /// Passes when `err <= tol`.
    pub fn within(name: impl Into<String>, err: f64, tol: f64) -> Self {
        Case::new(name, tol - err, format!("max error {err:.3e}, tolerance {tol:.1e}"))
    }

    pub fn failed(name: impl Into<String>, e: &Error) -> Self {
        Case::new(name, f64::MIN, format!("error: {e}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Report {
    fn new(suite: &str, mut cases: Vec<Case>) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            suite: suite.into(),
            pass: cases.iter().all(|c| c.pass),
            cases,
            runtime_ms: None,
        }
    }

    pub fn case(&self, name: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.name == name)
    }
}

/// Runs one suite, or every suite for `"all"`.  `runtime_ms` is left empty so
/// that reports are reproducible byte for byte.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    if name == "all" {
        let mut cases = Vec::new();
        for s in SUITES {
            for mut c in run_one(s, cfg)? {
                c.name = format!("{s}/{}", c.name);
                cases.push(c);
            }
        }
        return Ok(Report::new("all", cases));
    }
    Ok(Report::new(name, run_one(name, cfg)?))
}

fn run_one(name: &str, cfg: &SuiteConfig) -> Result<Vec<Case>> {
    Ok(match name {
        "algebra" => algebra::run(cfg),
        "series" => series::run(cfg),
        "schwarz" => schwarz::run(cfg),
        "quaternion" => quaternion::run(cfg),
        "diameters" => diameters::run(cfg),
        "zeros" => zeros::run(cfg),
        "growth" => growth::run(cfg),
        other => return Err(Error::UnknownSuite(other.into())),
    })
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Counter-based sub-seed for sample `k` of `case`.
pub fn sub_seed(seed: u64, case: &str, k: u64) -> u64 {
    splitmix64(splitmix64(seed ^ fnv1a(case)) ^ k)
}

/// Largest value of `f` over `n` seeded samples; errors and NaN count as
/// infinite.
pub(crate) fn worst<F>(cfg: &SuiteConfig, case: &str, n: usize, f: F) -> f64
where
    F: Fn(&mut ChaCha8Rng) -> Result<f64> + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|k| match f(&mut cfg.rng(case, k as u64)) {
            Ok(v) if !v.is_nan() => v,
            _ => f64::INFINITY,
        })
        .reduce(|| 0.0, f64::max)
}

/// Smallest value of `f` over `n` seeded samples; errors and NaN count as
/// minus infinity.
pub(crate) fn lowest<F>(cfg: &SuiteConfig, case: &str, n: usize, f: F) -> f64
where
    F: Fn(&mut ChaCha8Rng) -> Result<f64> + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|k| match f(&mut cfg.rng(case, k as u64)) {
            Ok(v) if !v.is_nan() => v,
            _ => f64::NEG_INFINITY,
        })
        .reduce(|| f64::INFINITY, f64::min)
}
