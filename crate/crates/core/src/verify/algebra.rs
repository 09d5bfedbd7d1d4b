use rand_chacha::ChaCha8Rng;

use super::{worst, Case, SuiteConfig};
use crate::algebra::{associator, cayley_dickson_mul, sample, Octonion, SampleTarget};
use crate::error::Result;

/// Tolerance for the weak associativity laws.
const IDENTITY_TOL: f64 = 1e-10;

fn g(rng: &mut ChaCha8Rng) -> Octonion {
    sample(rng, SampleTarget::Algebra)
}

fn triple(rng: &mut ChaCha8Rng) -> (Octonion, Octonion, Octonion) {
    (g(rng), g(rng), g(rng))
}

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    let n = cfg.samples;
    let tol = cfg.tolerances.alg;
    let mut cases = Vec::new();

    let mismatches = (0..8)
        .flat_map(|a| (0..8).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let (x, y) = (Octonion::basis(a), Octonion::basis(b));
            x * y != cayley_dickson_mul(&x, &y)
        })
        .count();
    cases.push(Case::new(
        "table_vs_cayley_dickson_basis",
        -(mismatches as f64),
        format!("{mismatches} of 64 basis products differ"),
    ));

    let err = worst(cfg, "table_vs_cayley_dickson_random", n, |rng| {
        let (a, b) = (g(rng), g(rng));
        Ok((a * b - cayley_dickson_mul(&a, &b)).norm() / (a.norm() * b.norm()))
    });
    cases.push(Case::within("table_vs_cayley_dickson_random", err, tol));

    let err = worst(cfg, "moufang", n, |rng| {
        let (u, v, w) = triple(rng);
        let s = u.norm_sqr() * v.norm() * w.norm();
        let e1 = ((u * v) * u) * w - u * (v * (u * w));
        let e2 = w * ((u * v) * u) - ((w * u) * v) * u;
        let e3 = (u * (v * w)) * u - (u * v) * (w * u);
        Ok(e1.norm().max(e2.norm()).max(e3.norm()) / s)
    });
    cases.push(Case::within("moufang", err, IDENTITY_TOL));

    let err = worst(cfg, "alternativity", n, |rng| {
        let (u, v, w) = triple(rng);
        let s = u.norm() * v.norm() * w.norm();
        let a = associator(&u, &v, &w);
        let parts = [
            associator(&u, &u, &v).norm() / (u.norm_sqr() * v.norm()),
            associator(&u, &v, &v).norm() / (u.norm() * v.norm_sqr()),
            (a + associator(&v, &u, &w)).norm() / s,
            (a + associator(&u, &w, &v)).norm() / s,
            (a + associator(&w, &v, &u)).norm() / s,
        ];
        Ok(parts.into_iter().fold(0.0, f64::max))
    });
    cases.push(Case::within("alternativity", err, IDENTITY_TOL));

    let err = worst(cfg, "associator_real_free", n, |rng| {
        let (u, v, w) = triple(rng);
        let a = associator(&u, &v, &w);
        Ok((a.re().abs() / (u.norm() * v.norm() * w.norm()))
            .max(u.inner(&a).abs() / (u.norm_sqr() * v.norm() * w.norm())))
    });
    cases.push(Case::within("associator_real_free", err, IDENTITY_TOL));

    let err = worst(cfg, "unitary_multipliers", n, |rng| {
        let alpha = sample(rng, SampleTarget::Sphere);
        let (w, z) = (g(rng), g(rng));
        let s = w.norm() * z.norm();
        let l = ((alpha * w).inner(&(alpha * z)) - w.inner(&z)).abs();
        let r = ((w * alpha).inner(&(z * alpha)) - w.inner(&z)).abs();
        Ok(l.max(r) / s)
    });
    cases.push(Case::within("unitary_multipliers", err, tol));

    let err = worst(cfg, "norm_multiplicative", n, |rng| {
        let (z, w) = (g(rng), g(rng));
        Ok(((z * w).norm() - z.norm() * w.norm()).abs() / (z.norm() * w.norm()))
    });
    cases.push(Case::within("norm_multiplicative", err, tol));

    let err = worst(cfg, "inverse", n, |rng| -> Result<f64> {
        let w = g(rng);
        let inv = w.inverse()?;
        Ok((w * inv - Octonion::ONE).norm().max((inv * w - Octonion::ONE).norm()))
    });
    cases.push(Case::within("inverse", err, tol));
    cases
}
