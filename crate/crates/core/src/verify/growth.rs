use rand::Rng;

use super::{lowest, worst, Case, SuiteConfig};
use crate::algebra::{sample, Octonion, SampleTarget, UnitImaginary};
use crate::error::Result;
use crate::geometry::{extremum_scan, growth_distortion_check, quarter_covering, GridSpec};
use crate::series::{construct, Family, RegularRational, SliceSeries};

pub const KOEBE_RADII: [f64; 3] = [0.3, 0.6, 0.9];
const EQUALITY_TOL: f64 = 1e-9;
const QUARTER: f64 = 0.249;

fn koebe(i: UnitImaginary, theta: f64) -> Result<RegularRational> {
    construct(&Family::Koebe { i, theta })
}

/// Relative error of the equalities at `w = r` (upper bounds) and `w = -r`
/// (lower bounds) of the Koebe function with `theta = 0`.
pub fn koebe_equality_error(i: UnitImaginary, r: f64) -> Result<f64> {
    let k = koebe(i, 0.0)?;
    let up = growth_distortion_check(&k, &Octonion::real(r))?;
    let down = growth_distortion_check(&k, &Octonion::real(-r))?;
    let rel = |m: f64, v: f64| m.abs() / v.max(1.0);
    Ok([
        rel(up.margins[1], up.modulus),
        rel(up.margins[3], up.derivative),
        rel(up.margins[5], up.log_quotient),
        rel(down.margins[0], down.modulus),
        rel(down.margins[2], down.derivative),
        rel(down.margins[4], down.log_quotient),
    ]
    .into_iter()
    .fold(0.0, f64::max))
}

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    let err = worst(cfg, "koebe_equality", KOEBE_RADII.len(), |rng| {
        let mut e: f64 = 0.0;
        for r in KOEBE_RADII {
            e = e.max(koebe_equality_error(UnitImaginary::sample(rng), r)?);
        }
        Ok(e)
    });
    cases.push(Case::within("koebe_equality", err, EQUALITY_TOL));

    let m = lowest(cfg, "koebe_bounds", cfg.samples, |rng| {
        let k = koebe(UnitImaginary::sample(rng), rng.random_range(0.0..std::f64::consts::TAU))?;
        let w = sample(rng, SampleTarget::Ball) * 0.99;
        let r = growth_distortion_check(&k, &w)?;
        let scale = [r.modulus, r.modulus, r.derivative, r.derivative, r.log_quotient, r.log_quotient];
        Ok(r.margins.iter().zip(scale).map(|(m, s)| m / s.max(1.0)).fold(f64::INFINITY, f64::min))
    });
    cases.push(Case::new("koebe_bounds", m + EQUALITY_TOL, format!("min relative margin {m:.3e}")));

    let i = UnitImaginary::basis(1);
    cases.push(match koebe(i, 0.0) {
        Ok(k) => {
            let c = quarter_covering(&k, &i, 0.999, 4096);
            Case::new("quarter_covering", c.min_modulus - QUARTER, format!("min |f| = {:.6} on |w| = 0.999", c.min_modulus))
        }
        Err(e) => Case::failed("quarter_covering", &e),
    });

    let scans: [(&str, RegularRational); 3] = [
        ("extremum_zero", SliceSeries::new(vec![Octonion::real(-0.5), Octonion::ONE]).into()),
        ("extremum_constant", SliceSeries::constant(Octonion::basis(2)).into()),
        (
            "extremum_monotone",
            SliceSeries::new(vec![Octonion::ZERO, Octonion::basis(3), Octonion::ONE]).into(),
        ),
    ];
    for (name, f) in scans {
        cases.push(match extremum_scan(&f, &GridSpec::standard(0.9)) {
            Ok(r) => Case::new(
                name,
                if r.pass { 0.0 } else { -1.0 },
                format!(
                    "constant {}, monotone {}, {} real-axis minima, {} off-axis minima",
                    r.constant,
                    r.shell_max_monotone,
                    r.real_axis_minima.len(),
                    r.off_axis_minima
                ),
            ),
            Err(e) => Case::failed(name, &e),
        });
    }
    cases
}
