use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::generators::{random_series, slice_series};
use super::{worst, Case, SuiteConfig};
use crate::algebra::{sample, Frame, Octonion, SampleTarget, UnitImaginary};
use crate::geometry::convex_combination_check;
use crate::series::{poly, representation_eval, split, splitting_star, RegularRational, SliceSeries};

const DECAY: f64 = 0.7;
/// Tolerance for the pointwise identities of the representation formula.
const FORMULA_TOL: f64 = 1e-9;

fn size(f: &SliceSeries) -> f64 {
    f.coeffs().iter().map(|a| a.norm()).sum()
}

fn pair(rng: &mut ChaCha8Rng, degree: usize) -> (SliceSeries, SliceSeries) {
    (random_series(rng, degree, DECAY), random_series(rng, degree, DECAY))
}

/// A series with a dominant constant term, so that its reciprocal has
/// moderate Taylor coefficients.
fn invertible(rng: &mut ChaCha8Rng, degree: usize) -> SliceSeries {
    let f = random_series(rng, degree, DECAY);
    let mut c = f.coeffs().to_vec();
    c[0] = sample(rng, SampleTarget::Sphere) * 3.0;
    SliceSeries::new(c)
}

fn disc_point(rng: &mut ChaCha8Rng, r: f64) -> Complex64 {
    Complex64::from_polar(r * rng.random::<f64>().sqrt(), std::f64::consts::TAU * rng.random::<f64>())
}

pub(super) fn run(cfg: &SuiteConfig) -> Vec<Case> {
    let n = cfg.samples;
    let deg = cfg.degree;
    let tol = cfg.tolerances.series;
    let mut cases = Vec::new();

    let err = worst(cfg, "conjugate_of_product", n, |rng| {
        let (f, g) = pair(rng, deg);
        let lhs = f.star(&g).regular_conjugate();
        let rhs = g.regular_conjugate().star(&f.regular_conjugate());
        Ok(lhs.max_abs_diff(&rhs) / (1.0 + size(&f) * size(&g)))
    });
    cases.push(Case::within("conjugate_of_product", err, tol));

    let err = worst(cfg, "symmetrization_of_product", n, |rng| {
        let (f, g) = pair(rng, deg);
        let (fg, _) = f.star(&g).symmetrization();
        let prod = poly::mul(&f.symmetrization().0, &g.symmetrization().0);
        let scale = size(&f).powi(2) * size(&g).powi(2);
        let d = poly::sub(&fg, &prod).iter().fold(0.0f64, |m, x| m.max(x.abs()));
        Ok(d / (1.0 + scale))
    });
    cases.push(Case::within("symmetrization_of_product", err, tol));

    let err = worst(cfg, "reciprocal_inverts", n, |rng| {
        let f = invertible(rng, deg);
        let r = f.reciprocal_series(deg)?;
        let one = SliceSeries::constant(Octonion::ONE);
        let left = r.star(&f).truncate(deg).0.max_abs_diff(&one);
        let right = f.star(&r).truncate(deg).0.max_abs_diff(&one);
        Ok(left.max(right) / (1.0 + size(&r) * size(&f)))
    });
    cases.push(Case::within("reciprocal_inverts", err, tol));

    let err = worst(cfg, "reciprocal_of_product", n, |rng| {
        let (f, g) = (invertible(rng, deg), invertible(rng, deg));
        let lhs = f.star(&g).reciprocal_series(deg)?;
        let (fr, gr) = (f.reciprocal_series(deg)?, g.reciprocal_series(deg)?);
        let rhs = gr.star(&fr).truncate(deg).0;
        Ok(lhs.max_abs_diff(&rhs) / (1.0 + size(&fr) * size(&gr)))
    });
    cases.push(Case::within("reciprocal_of_product", err, tol));

    let err = worst(cfg, "splitting_vs_convolution", n, |rng| {
        let (f, g) = pair(rng, deg);
        let i = UnitImaginary::sample(rng);
        let frame = Frame::complete(i, sample(rng, SampleTarget::Algebra), sample(rng, SampleTarget::Algebra))?;
        let z = disc_point(rng, 0.9);
        let via_split = splitting_star(&split(&f, &frame)?, &split(&g, &frame)?, z);
        let direct = f.star(&g).eval_in_slice(&i, z);
        Ok(via_split.max_abs_diff(&direct) / (1.0 + size(&f) * size(&g)))
    });
    cases.push(Case::within("splitting_vs_convolution", err, tol));

    let err = worst(cfg, "real_point_product", n, |rng| {
        let (f, g) = pair(rng, deg);
        let x = Octonion::real(rng.random_range(-0.9..0.9));
        let d = f.star(&g).eval(&x).max_abs_diff(&(f.eval(&x) * g.eval(&x)));
        Ok(d / (1.0 + size(&f) * size(&g)))
    });
    cases.push(Case::within("real_point_product", err, tol));

    let err = worst(cfg, "representation_formula", n, |rng| {
        let f = random_series(rng, deg, DECAY);
        let (i, j) = (UnitImaginary::sample(rng), UnitImaginary::sample(rng));
        let z = disc_point(rng, 0.9);
        let got = representation_eval(&f.eval_in_slice(&i, z), &f.eval_in_slice(&i, z.conj()), &i, &j);
        Ok(got.max_abs_diff(&f.eval_in_slice(&j, z)) / (1.0 + size(&f)))
    });
    cases.push(Case::within("representation_formula", err, FORMULA_TOL));

    let err = worst(cfg, "convex_combination", n, |rng| {
        let (i, j) = (UnitImaginary::sample(rng), UnitImaginary::sample(rng));
        let f: RegularRational = slice_series(rng, &i, 6).into();
        let z = disc_point(rng, 0.9);
        let c = convex_combination_check(&f, z.re, z.im, &i, &j)?;
        Ok(c.error / (1.0 + c.lhs))
    });
    cases.push(Case::within("convex_combination", err, FORMULA_TOL));
    cases
}
