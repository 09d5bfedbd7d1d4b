use super::{Case, SuiteConfig};
use crate::algebra::{Octonion, UnitImaginary};
use crate::error::Result;
use crate::series::{RegularRational, SliceSeries};
use crate::zeros::{contour_count, ContourSpec, DEFAULT_NODES, GUARD};

const STABILITY_TOL: f64 = 1e-6;

/// The counting examples: function, contour `(x0, y0, delta)` and count.
pub fn zeros_cases() -> Vec<(&'static str, RegularRational, (f64, f64, f64), u64)> {
    let s = |c: Vec<Octonion>| -> RegularRational { SliceSeries::new(c).into() };
    let one = Octonion::ONE;
    vec![
        ("q_minus_e1", s(vec![-Octonion::basis(1), one]), (0.0, 1.0, 0.3), 2),
        ("one", s(vec![one]), (0.0, 1.0, 0.3), 0),
        ("q_squared_plus_one", s(vec![one, Octonion::ZERO, one]), (0.0, 1.0, 0.3), 4),
        ("q_minus_half", s(vec![Octonion::real(-0.5), one]), (0.5, 0.0, 0.2), 2),
    ]
}

fn check(cfg: &SuiteConfig, name: &str, f: &RegularRational, (x0, y0, delta): (f64, f64, f64), expected: u64) -> Result<Case> {
    let mut rng = cfg.rng(name, 0);
    let (i1, i2) = (UnitImaginary::basis(2), UnitImaginary::sample(&mut rng));
    let spec = ContourSpec::new(x0, y0, delta, i1, DEFAULT_NODES)?;
    let a = contour_count(f, &spec)?;
    let b = contour_count(f, &ContourSpec { i: i2, ..spec.clone() })?;
    let half = contour_count(f, &ContourSpec { m: DEFAULT_NODES / 2, ..spec })?;
    let slice_gap = (a.raw - b.raw).norm();
    let halving = (a.raw - half.raw).norm();
    let exact = a.count == expected && b.count == expected;
    let margin = if exact {
        (GUARD - a.guard).min(STABILITY_TOL - slice_gap).min(STABILITY_TOL - halving)
    } else {
        -1.0
    };
    Ok(Case::new(
        name,
        margin,
        format!(
            "count {} (expected {expected}), guard {:.1e}, slice gap {slice_gap:.1e}, halving {halving:.1e}",
            a.count, a.guard
        ),
    ))
}

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    zeros_cases()
        .into_iter()
        .map(|(name, f, c, expected)| check(cfg, name, &f, c, expected).unwrap_or_else(|e| Case::failed(name, &e)))
        .collect()
}
