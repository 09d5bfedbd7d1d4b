//! Zero spheres counted through the logarithmic derivative of the
//! symmetrization.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::UnitImaginary;
use crate::error::{Error, Result};
use crate::series::{poly, RegularRational, SliceSeries};
use crate::tolerance::POLE;

/// Smallest admissible `|f^s|` on the contour nodes.
pub const CONTOUR_CLEARANCE: f64 = 1e-8;
/// Largest admissible distance of the integral from an integer.
pub const GUARD: f64 = 0.05;
pub const DEFAULT_NODES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub x0: f64,
    pub y0: f64,
    pub delta: f64,
    pub i: UnitImaginary,
    pub m: usize,
}

impl ContourSpec {
    pub fn new(x0: f64, y0: f64, delta: f64, i: UnitImaginary, m: usize) -> Result<Self> {
        let spec = ContourSpec { x0, y0, delta, i, m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::BadParameter(s));
        if !(self.x0.is_finite() && self.y0.is_finite() && self.delta.is_finite()) {
            return bad("non-finite contour data".into());
        }
        if self.y0 < 0.0 {
            return bad(format!("y0 = {} is negative", self.y0));
        }
        if self.delta <= 0.0 {
            return bad(format!("delta = {} is not positive", self.delta));
        }
        if self.y0 > 0.0 && self.delta >= self.y0 {
            return bad(format!("delta = {} must be below y0 = {}", self.delta, self.y0));
        }
        if self.m < 64 {
            return bad(format!("m = {} is below 64", self.m));
        }
        Ok(())
    }

    /// Circle centres in `C_I`: one on the real axis, or a conjugate pair.
    pub fn centres(&self) -> Vec<Complex64> {
        if self.y0 == 0.0 {
            vec![Complex64::new(self.x0, 0.0)]
        } else {
            vec![Complex64::new(self.x0, self.y0), Complex64::new(self.x0, -self.y0)]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountResult {
    pub raw: Complex64,
    pub count: u64,
    pub guard: f64,
}

/// `L_f = (f^s)' / f^s`, as `((n^s)' d - 2 d' n^s) / (n^s d)` for `f = d^-1 n`.
pub fn log_derivative(f: &RegularRational) -> Result<RegularRational> {
    let (ns, _) = f.num().symmetrization();
    let ns = poly::trim(ns);
    if ns.iter().all(|c| *c == 0.0) {
        return Err(Error::IdenticallyZero);
    }
    let d = f.den();
    let num = poly::sub(&poly::mul(&poly::derivative(&ns), d), &poly::scale(&poly::mul(&poly::derivative(d), &ns), 2.0));
    let mut factors = vec![ns];
    factors.extend(f.factors().iter().cloned());
    Ok(RegularRational::with_factors(SliceSeries::from_real(&poly::trim(num)), factors))
}

fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let (a, b) = v.split_at(v.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// `(1 / 2 pi I) * contour integral of L_f` over the boundary of the
/// neighbourhood described by `spec`, by the trapezoid rule in `C_I`.
pub fn contour_count(f: &RegularRational, spec: &ContourSpec) -> Result<CountResult> {
    spec.validate()?;
    let l = log_derivative(f)?;
    let (ns, _) = f.num().symmetrization();
    let i = spec.i;
    let iv = i.value();
    let m = spec.m;
    let mut terms = Vec::with_capacity(m * (1 + (spec.y0 > 0.0) as usize));
    for c in spec.centres() {
        let nodes: Vec<Result<(Complex64, f64)>> = (0..m)
            .into_par_iter()
            .map(|k| {
                let e = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
                let z = c + e * spec.delta;
                let d = f.eval_den(z);
                if d.norm() <= POLE {
                    return Err(Error::PoleAtPoint(d.norm()));
                }
                let fs = poly::eval_complex(&ns, z).norm() / d.norm_sqr();
                let v = l.eval_in_slice(&i, z).map_err(|_| Error::ZeroOnContour(fs))?;
                // dz / (2 pi I) = delta e^{I theta} dtheta / (2 pi).
                let term = Complex64::new(v.re(), iv.inner(&v)) * e * (spec.delta / m as f64);
                Ok((term, fs))
            })
            .collect();
        for node in nodes {
            let (term, fs) = node?;
            if fs < CONTOUR_CLEARANCE {
                return Err(Error::ZeroOnContour(fs));
            }
            terms.push(term);
        }
    }
    let raw = pairwise_sum(&terms);
    let rounded = raw.re.round();
    let guard = (raw - Complex64::new(rounded, 0.0)).norm();
    if guard >= GUARD {
        return Err(Error::NonIntegerCount { raw: raw.re, guard });
    }
    if rounded < 0.0 {
        return Err(Error::HypothesisViolated(format!("net count {rounded}: poles outnumber zeros")));
    }
    Ok(CountResult { raw, count: rounded as u64, guard })
}
