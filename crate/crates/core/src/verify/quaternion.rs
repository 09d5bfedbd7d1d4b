use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::generators::{boundary_quaternion, quaternion_in_ball, quaternionic_self_map, random_quaternion, unit_quaternion};
use super::{lowest, worst, Case, SuiteConfig};
use crate::algebra::Octonion;
use crate::error::Result;
use crate::geometry::{camshaft_search, inner_boundary_estimate, julia_check, pointwise_star_check, quaternionic_bounds, t_transform};
use crate::series::{construct, Family, RegularRational, SliceSeries};

pub const JULIA_MAPS: usize = 100;
const POINTWISE_TOL: f64 = 1e-9;
const IDENTITY_TOL: f64 = 1e-10;
const EXACT_TOL: f64 = 1e-12;
const MARGIN_TOL: f64 = 1e-8;
const CAMSHAFT_THRESHOLD: f64 = 1e-3;

fn quaternionic_poly(rng: &mut ChaCha8Rng, degree: usize) -> RegularRational {
    SliceSeries::new((0..=degree).map(|_| random_quaternion(rng)).collect()).into()
}

fn size(f: &RegularRational) -> f64 {
    f.num().coeffs().iter().map(|a| a.norm()).sum()
}

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    let n = cfg.samples;
    let mut cases = Vec::new();

    let err = worst(cfg, "pointwise_star", n, |rng| {
        let (f, g) = (quaternionic_poly(rng, 3), quaternionic_poly(rng, 3));
        let q = quaternion_in_ball(rng, 0.95);
        let r = pointwise_star_check(&f, &g, &q)?;
        let s = 1.0 + size(&f) * size(&g);
        Ok((r.pointwise_deviation / s).max(r.inner_error / s).max(r.modulus_error))
    });
    cases.push(Case::within("pointwise_star", err, POINTWISE_TOL));

    let mut rng = cfg.rng("camshaft", 0);
    cases.push(match camshaft_search(&mut rng, 1000, CAMSHAFT_THRESHOLD) {
        Some(w) => {
            let r = &w.report;
            let slack = (IDENTITY_TOL - r.inner_error).min(IDENTITY_TOL - r.modulus_error);
            Case::new(
                "camshaft",
                slack.min(r.pointwise_deviation - CAMSHAFT_THRESHOLD),
                format!(
                    "deviation {:.3e}, inner error {:.1e}, modulus error {:.1e}",
                    r.pointwise_deviation, r.inner_error, r.modulus_error
                ),
            )
        }
        None => Case::new("camshaft", -CAMSHAFT_THRESHOLD, "no witness found"),
    });

    cases.push(match sharp_vs_osserman() {
        Ok(e) => Case::within("sharp_vs_osserman", e, EXACT_TOL),
        Err(e) => Case::failed("sharp_vs_osserman", &e),
    });

    let m = lowest(cfg, "sharp_bounds", JULIA_MAPS, |rng| {
        let s = quaternionic_self_map(rng);
        let r = quaternionic_bounds(&s.f, &s.xi)?;
        let sharp = r.sharp_bound.unwrap_or(f64::INFINITY);
        let oss = r.osserman_bound.unwrap_or(f64::INFINITY);
        let vanishing = r.vanishing.map_or(f64::INFINITY, |v| r.delta - v.bound);
        // Each term is a slack: nonnegative when its check passes.
        Ok((r.delta - sharp + MARGIN_TOL)
            .min(sharp - oss + EXACT_TOL)
            .min(vanishing + MARGIN_TOL)
            .min(MARGIN_TOL - r.imag_residual))
    });
    cases.push(Case::new("sharp_bounds", m, format!("min slack {m:.3e}")));

    let err = worst(cfg, "julia_mobius_equality", 50, |rng| {
        let f = construct(&Family::Mobius { u: quaternion_in_ball(rng, 0.8), v: unit_quaternion(rng) })?;
        let xi = boundary_quaternion(rng);
        let alpha = quaternionic_bounds(&f, &xi)?.delta;
        let eta = f.eval(&xi)?;
        let q = quaternion_in_ball(rng, 0.9);
        Ok(julia_check(&f, &xi, &eta, alpha, &q)?.margin.abs())
    });
    cases.push(Case::within("julia_mobius_equality", err, POINTWISE_TOL));

    let m = lowest(cfg, "julia_battery", JULIA_MAPS, |rng| {
        let s = quaternionic_self_map(rng);
        let alpha = quaternionic_bounds(&s.f, &s.xi)?.delta;
        let eta = s.f.eval(&s.xi)?;
        let q = quaternion_in_ball(rng, 0.9);
        let r = julia_check(&s.f, &s.xi, &eta, alpha, &q)?;
        Ok(r.margin / (1.0 + r.rhs.abs()))
    });
    cases.push(Case::new("julia_battery", m + MARGIN_TOL, format!("min relative margin {m:.3e}")));

    cases.push(match julia_square() {
        Ok(e) => Case::within("julia_square", e, EXACT_TOL),
        Err(e) => Case::failed("julia_square", &e),
    });

    let err = worst(cfg, "t_transform_round_trip", n, |rng| {
        let f = quaternionic_poly(rng, 3);
        let q = quaternion_in_ball(rng, 0.95);
        let t = t_transform(&f, &q)?;
        let back = t_transform(&f.regular_conjugate(), &t)?;
        Ok(back.max_abs_diff(&q).max((t.norm() - q.norm()).abs()).max((t.re() - q.re()).abs()))
    });
    cases.push(Case::within("t_transform_round_trip", err, IDENTITY_TOL));

    let err = worst(cfg, "inner_estimate_extremal", 50, |rng| {
        let delta = rng.random_range(1.0..4.0);
        let (xi, c) = (boundary_quaternion(rng), unit_quaternion(rng));
        let f = construct(&Family::InnerExtremal { delta, xi, c })?;
        let r = inner_boundary_estimate(&f, &xi, rng.random_range(-0.9..0.9))?;
        Ok(r.margin.abs())
    });
    cases.push(Case::within("inner_estimate_extremal", err, POINTWISE_TOL));

    let m = lowest(cfg, "inner_estimate_battery", JULIA_MAPS, |rng| {
        let s = quaternionic_self_map(rng);
        let r = inner_boundary_estimate(&s.f, &s.xi, rng.random_range(-0.9..0.9))?;
        Ok((r.margin + POINTWISE_TOL).min(r.second_margin / (1.0 + r.second_bound.abs()) + MARGIN_TOL))
    });
    cases.push(Case::new("inner_estimate_battery", m, format!("min margin after tolerance {m:.3e}")));
    cases
}

/// Max error of `delta = 3`, sharp `= 3`, Osserman `= 1/3` for the real
/// Moebius map with `a = 1/2` at `xi = 1`.
fn sharp_vs_osserman() -> Result<f64> {
    let f = construct(&Family::Mobius { u: Octonion::real(0.5), v: Octonion::ONE })?;
    let r = quaternionic_bounds(&f, &Octonion::ONE)?;
    let sharp = r.sharp_bound.unwrap_or(f64::NAN);
    let oss = r.osserman_bound.unwrap_or(f64::NAN);
    Ok((r.delta - 3.0).abs().max((sharp - 3.0).abs()).max((oss - 1.0 / 3.0).abs()))
}

/// `q^2` at `xi = eta = 1`, `alpha = 2`, `q = 1/2`: lhs 5/3, rhs 3/2.
fn julia_square() -> Result<f64> {
    let f: RegularRational = SliceSeries::monomial(2, Octonion::ONE).into();
    let r = julia_check(&f, &Octonion::ONE, &Octonion::ONE, 2.0, &Octonion::real(0.5))?;
    Ok((r.lhs - 5.0 / 3.0).abs().max((r.rhs - 1.5).abs()))
}
