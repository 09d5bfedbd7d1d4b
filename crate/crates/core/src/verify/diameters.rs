use super::generators::random_series;
use super::{lowest, worst, Case, SuiteConfig};
use crate::algebra::{sample, Octonion, SampleTarget};
use crate::geometry::{cauchy_estimate_check, diameters, landau_toeplitz_check, DiameterKind, DirectionSet};
use crate::series::SliceSeries;

pub const RADII: [f64; 3] = [0.25, 0.5, 0.75];
const AFFINE_MAPS: usize = 4;
const CAUCHY_TOL: f64 = 0.02;

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    let dirs = DirectionSet::standard();
    let mut cases = Vec::new();

    let err = worst(cfg, "landau_toeplitz_affine", AFFINE_MAPS, |rng| {
        let f = SliceSeries::new(vec![sample(rng, SampleTarget::Algebra), sample(rng, SampleTarget::Sphere)]);
        let mut e: f64 = 0.0;
        for r in RADII {
            let d = diameters(&f, r, DiameterKind::Regular, &dirs)?;
            e = e.max((d.value - 2.0 * r).abs() / (2.0 * r));
        }
        Ok(e)
    });
    cases.push(Case::within("landau_toeplitz_affine", err, cfg.tolerances.sample));

    for (name, kind) in [("landau_toeplitz_regular", DiameterKind::Regular), ("landau_toeplitz_slice", DiameterKind::Slice)] {
        let m = lowest(cfg, name, AFFINE_MAPS, |rng| {
            let f = random_series(rng, 3, 0.5);
            let r = landau_toeplitz_check(&f, &RADII, kind, &dirs)?;
            Ok(r.bound_margin
                .min(r.monotonicity_margin + 1e-3)
                .min(1.0 + 1e-9 - r.derivative_at_zero))
        });
        cases.push(Case::new(name, m, format!("min slack {m:.3e}")));
    }

    cases.push(match cauchy_estimate_check(&SliceSeries::monomial(2, Octonion::basis(1)), 2, &dirs) {
        Ok(c) => Case::new(
            "cauchy_equality",
            (CAUCHY_TOL * c.rhs - c.margin.abs()).min(c.n_samples as f64 - 1e4),
            format!("|a2| = {}, diam/2 = {:.6}, {} samples", c.lhs, c.rhs, c.n_samples),
        ),
        Err(e) => Case::failed("cauchy_equality", &e),
    });
    let cubic = SliceSeries::new(vec![Octonion::ZERO, Octonion::ONE, Octonion::ZERO, Octonion::real(0.1)]);
    cases.push(match cauchy_estimate_check(&cubic, 3, &dirs) {
        Ok(c) => Case::new("cauchy_strict", c.margin, format!("|a3| = {}, diam/2 = {:.6}", c.lhs, c.rhs)),
        Err(e) => Case::failed("cauchy_strict", &e),
    });
    cases
}
