use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::generators::contact_self_map;
use super::{lowest, worst, Case, SuiteConfig};
use crate::algebra::{sample, Octonion, SampleTarget, UnitImaginary};
use crate::error::Result;
use crate::geometry::{boundary_modulus_derivative, modulus_inequality_check};
use crate::series::{construct, Family, Regular, RegularRational};

/// Battery size for constructed self-maps.
pub const SELF_MAPS: usize = 200;
const PAPER_TOL: f64 = 1e-9;
const FD_TOL: f64 = 1e-3;
const MARGIN_TOL: f64 = 1e-8;

pub fn example_3_3() -> Result<RegularRational> {
    construct(&Family::Example33 {
        i: UnitImaginary::basis(1),
        j: UnitImaginary::basis(2),
    })
}

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    match example_3_3_errors() {
        Ok([fp, r2, delta, fd]) => {
            cases.push(Case::within("example_3_3_derivative", fp, PAPER_TOL));
            cases.push(Case::within("example_3_3_second_remainder", r2, PAPER_TOL));
            cases.push(Case::within("example_3_3_delta", delta, PAPER_TOL));
            cases.push(Case::within("example_3_3_finite_difference", fd, FD_TOL));
        }
        Err(e) => cases.push(Case::failed("example_3_3_delta", &e)),
    }

    let m = lowest(cfg, "boundary_schwarz", SELF_MAPS, |rng| {
        let s = contact_self_map(rng);
        let r = boundary_modulus_derivative(&s.f, &s.xi)?;
        Ok((r.delta - r.lower_bound_eq11 + MARGIN_TOL).min(MARGIN_TOL - r.imag_residual))
    });
    cases.push(Case::new("boundary_schwarz", m, format!("min slack over {SELF_MAPS} maps {m:.3e}")));

    let err = worst(cfg, "boundary_finite_difference", SELF_MAPS, |rng| {
        let s = contact_self_map(rng);
        let r = boundary_modulus_derivative(&s.f, &s.xi)?;
        // One-sided truncation error grows like step * delta^2 / 2.
        Ok((r.delta - r.fd_crosscheck).abs() / r.delta.max(1.0))
    });
    cases.push(Case::within("boundary_finite_difference", err, FD_TOL));

    let alphas = [-1.0, -0.5, 0.0, 0.5];
    let err = worst(cfg, "extremal_equality", 4 * alphas.len(), |rng| {
        let a = alphas[rng.random_range(0..alphas.len())];
        let xi = boundary_point(rng);
        let f = construct(&Family::Extremal { a, xi })?;
        let r = boundary_modulus_derivative(&f, &xi)?;
        let bound = r.fixed_point_bound.unwrap_or(f64::INFINITY);
        Ok((r.delta - bound).abs().max(r.imag_residual))
    });
    cases.push(Case::within("extremal_equality", err, MARGIN_TOL));

    let m = lowest(cfg, "modulus_inequality", cfg.samples, |rng| {
        let s = contact_self_map(rng);
        let w = sample(rng, SampleTarget::Ball) * 0.95;
        modulus_inequality_check(&s.f, &w)
    });
    cases.push(Case::new("modulus_inequality", m + PAPER_TOL, format!("min margin {m:.3e}")));
    cases
}

/// A boundary point with imaginary part bounded away from zero.
fn boundary_point(rng: &mut ChaCha8Rng) -> Octonion {
    loop {
        let xi = sample(rng, SampleTarget::Sphere);
        if xi.im().norm() > 0.1 {
            return xi;
        }
    }
}

/// Errors against the closed values of the worked example at `J`.
fn example_3_3_errors() -> Result<[f64; 4]> {
    let f = example_3_3()?;
    let (i, j) = (Octonion::basis(1), Octonion::basis(2));
    let fp = f.derivative_at(&j)? - (Octonion::real(2.0) - i * j) * (4.0 / 3.0);
    let r2 = f.second_remainder(&j)? - (i - j * 2.0) * (2.0 / 3.0);
    let r = boundary_modulus_derivative(&f, &j)?;
    Ok([
        fp.norm(),
        r2.norm(),
        (r.delta - 8.0 / 3.0).abs().max(r.imag_residual),
        (r.fd_crosscheck - 8.0 / 3.0).abs(),
    ])
}
