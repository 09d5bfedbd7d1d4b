use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{imaginary_unit_of, sample, Frame, Octonion, SampleTarget, UnitImaginary};
use crate::error::{Error, Result};
use crate::series::{
    assemble, slice_coordinates, star_values, ComponentEvaluator, RegularRational, SliceSeries,
};
use crate::tolerance::{ALG_TOL, POLE};

/// A frame whose first unit is the imaginary unit of `w`.
pub fn frame_for(w: &Octonion) -> Frame {
    let i = imaginary_unit_of(w);
    Frame::complete(i, Octonion::basis(2), Octonion::basis(4)).expect("completion falls back to basis vectors")
}

/// `f * g` at `w`, evaluated from split-component values in the slice of `w`
/// instead of expanding the product of numerators.
pub fn star_eval(f: &RegularRational, g: &RegularRational, w: &Octonion) -> Result<Octonion> {
    let frame = frame_for(w);
    let (_, z) = slice_coordinates(w);
    let ef = ComponentEvaluator::new(f, &frame)?;
    let eg = ComponentEvaluator::new(g, &frame)?;
    let h = star_values(&ef.values(z)?, &ef.values(z.conj())?, &eg.values(z)?, &eg.values(z.conj())?);
    Ok(assemble(&frame, &h))
}

/// Relative agreement of two sides of an identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub error: f64,
}

/// `|f(x+yJ)|^2` against `(1+<I,J>)/2 |f(x+yI)|^2 + (1-<I,J>)/2 |f(x-yI)|^2`
/// for `f` mapping `C_I` into itself.
pub fn convex_combination_check(
    f: &RegularRational,
    x: f64,
    y: f64,
    i: &UnitImaginary,
    j: &UnitImaginary,
) -> Result<IdentityCheck> {
    let iv = i.value();
    for a in f.num().coeffs() {
        let off = *a - Octonion::real(a.re()) - iv * a.inner(&iv);
        if off.norm() > ALG_TOL {
            return Err(Error::HypothesisViolated(format!(
                "coefficient {a} leaves the slice by {:e}",
                off.norm()
            )));
        }
    }
    let c = iv.inner(&j.value());
    let lhs = f.eval(&j.point(x, y))?.norm_sqr();
    let rhs = 0.5 * (1.0 + c) * f.eval(&i.point(x, y))?.norm_sqr()
        + 0.5 * (1.0 - c) * f.eval(&i.point(x, -y))?.norm_sqr();
    Ok(IdentityCheck {
        lhs,
        rhs,
        error: (lhs - rhs).abs(),
    })
}

/// Deviations in the pointwise descriptions of `f * g` and `f^{-*}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointwiseStarReport {
    pub quaternionic: bool,
    /// `|f*g(w) - f(w) g(f(w)^-1 w f(w))|`; zero up to rounding for
    /// quaternionic input.
    pub pointwise_deviation: f64,
    /// `|<I_w, f*g(w)> - <I_w, f(w) g(f(w)^-1 w f(w))>|`.
    pub inner_error: f64,
    /// `| |f^{-*}(w)| - 1/|f(f^c(w)^-1 w f^c(w))| |`.
    pub modulus_error: f64,
}

pub fn pointwise_star_check(f: &RegularRational, g: &RegularRational, w: &Octonion) -> Result<PointwiseStarReport> {
    let fw = f.eval(w)?;
    if fw.norm() <= ALG_TOL {
        return Err(Error::ZeroAtPoint);
    }
    let fg = f.star(g).eval(w)?;
    let moved = fw.inverse()? * *w * fw;
    let pointwise = fw * g.eval(&moved)?;
    let iw = imaginary_unit_of(w).value();

    let fc = f.regular_conjugate().eval(w)?;
    if fc.norm() <= POLE {
        return Err(Error::ZeroOfSymmetrization);
    }
    let recip = f.reciprocal().eval(w)?.norm();
    let t = fc.inverse()? * *w * fc;
    let modulus = 1.0 / f.eval(&t)?.norm();

    Ok(PointwiseStarReport {
        quaternionic: f.is_quaternionic(ALG_TOL) && g.is_quaternionic(ALG_TOL) && w.is_quaternionic(ALG_TOL),
        pointwise_deviation: (fg - pointwise).norm(),
        inner_error: (iw.inner(&fg) - iw.inner(&pointwise)).abs(),
        modulus_error: (recip - modulus).abs(),
    })
}

/// A point where the quaternionic pointwise formula for `f * g` fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CamshaftWitness {
    pub f: SliceSeries,
    pub g: SliceSeries,
    pub w: Octonion,
    pub report: PointwiseStarReport,
}

/// Random search for a point with pointwise deviation above `threshold`.
///
/// `f` and `w` are drawn from a random quaternion subalgebra and `g` is
/// linear with generic octonionic coefficients.  The reciprocal modulus
/// identity needs `f` and `w` to associate; the pointwise product formula
/// still fails because of `g`.
pub fn camshaft_search<R: Rng + ?Sized>(rng: &mut R, attempts: usize, threshold: f64) -> Option<CamshaftWitness> {
    for _ in 0..attempts {
        let Ok(i) = UnitImaginary::normalize(sample(rng, SampleTarget::UnitImaginary).im()) else {
            continue;
        };
        let hint = sample(rng, SampleTarget::UnitImaginary);
        let Ok(frame) = Frame::complete(i, hint, Octonion::basis(4)) else {
            continue;
        };
        let b = frame.basis();
        let mut in_h = |scale: f64| -> Octonion {
            let c = sample(rng, SampleTarget::Algebra);
            (b[0] * c.0[0] + b[1] * c.0[1] + b[2] * c.0[2] + b[3] * c.0[3]) * scale
        };
        let f = SliceSeries::new(vec![in_h(1.0), in_h(1.0)]);
        let w = in_h(0.3);
        let g = SliceSeries::new(vec![sample(rng, SampleTarget::Algebra), sample(rng, SampleTarget::Algebra)]);
        let (fr, gr) = (f.clone().into(), g.clone().into());
        if let Ok(report) = pointwise_star_check(&fr, &gr, &w) {
            if report.pointwise_deviation > threshold {
                return Some(CamshaftWitness { f, g, w, report });
            }
        }
    }
    None
}

/// `T_f(q) = f^c(q)^-1 q f^c(q)` for quaternionic `f`.
pub fn t_transform(f: &RegularRational, q: &Octonion) -> Result<Octonion> {
    if !f.is_quaternionic(ALG_TOL) || !q.is_quaternionic(ALG_TOL) {
        return Err(Error::NonQuaternionic);
    }
    let fc = f.regular_conjugate().eval(q)?;
    if fc.norm() <= POLE {
        return Err(Error::ZeroOfSymmetrization);
    }
    Ok(fc.inverse()? * *q * fc)
}

/// `(w f') * f^{-*}` at `w`, from split components: the components of `f^{-*}`
/// are those of `f^c` divided by the value of `f^s`.
pub fn log_quotient_eval(f: &RegularRational, w: &Octonion) -> Result<Octonion> {
    let frame = frame_for(w);
    let (_, z) = slice_coordinates(w);
    let ef = ComponentEvaluator::new(f, &frame)?;
    let ec = ComponentEvaluator::new(&f.regular_conjugate(), &frame)?;
    let at = |z: Complex64| -> Result<([Complex64; 4], [Complex64; 4])> {
        let fz = ef.values(z)?;
        let fzb = ef.values(z.conj())?;
        let cz = ec.values(z)?;
        let czb = ec.values(z.conj())?;
        let s = star_values(&fz, &fzb, &cz, &czb)[0];
        if s.norm() <= POLE {
            return Err(Error::ZeroOfSymmetrization);
        }
        let a = ef.derivatives(z)?.map(|c| z * c);
        Ok((a, cz.map(|c| c / s)))
    };
    let (a, b) = at(z)?;
    let (ab, bb) = at(z.conj())?;
    Ok(assemble(&frame, &star_values(&a, &ab, &b, &bb)))
}
