use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{poly, RegularRational, SliceSeries};
use crate::algebra::{Frame, Octonion};
use crate::error::{Error, Result};
use crate::tolerance::POLE;

/// Holomorphic components of `f` on `C_I` with
/// `f(z) = F1(z) + F2(z) J + (F3(z) + conj(F4(z)) J) K`.
///
/// Each component is a list of complex coefficients, read as `x + y I`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitComponents {
    pub frame: Frame,
    pub components: [Vec<Complex64>; 4],
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
}

impl SplitComponents {
    pub fn eval_components(&self, z: Complex64) -> [Complex64; 4] {
        [0, 1, 2, 3].map(|k| horner(&self.components[k], z))
    }

    /// Component `k` (0-based) as a series with coefficients in `C_I`.
    pub fn component_series(&self, k: usize) -> SliceSeries {
        let i = self.frame.i;
        SliceSeries::new(self.components[k].iter().map(|c| i.point(c.re, c.im)).collect())
    }

    pub fn recombine(&self, z: Complex64) -> Octonion {
        assemble(&self.frame, &self.eval_components(z))
    }
}

/// `F1 + F2 J + (F3 + conj(F4) J) K` for values in `C_I`.
pub fn assemble(frame: &Frame, f: &[Complex64; 4]) -> Octonion {
    let i = frame.i;
    let (j, k) = (frame.j.value(), frame.k.value());
    let c = |z: Complex64| i.point(z.re, z.im);
    c(f[0]) + c(f[1]) * j + (c(f[2]) + c(f[3].conj()) * j) * k
}

/// Inverse of [`assemble`] for a single octonion.
pub fn decompose(frame: &Frame, a: &Octonion) -> [Complex64; 4] {
    let b = frame.basis();
    let c: Vec<f64> = b.iter().map(|e| a.inner(e)).collect();
    [
        Complex64::new(c[0], c[1]),
        Complex64::new(c[2], c[3]),
        Complex64::new(c[4], c[5]),
        Complex64::new(c[6], -c[7]),
    ]
}

/// Per-coefficient splitting of `f` relative to `frame`.
pub fn split(f: &SliceSeries, frame: &Frame) -> Result<SplitComponents> {
    let frame = Frame::new(frame.i, frame.j, frame.k)?;
    let mut components: [Vec<Complex64>; 4] = Default::default();
    for a in f.coeffs() {
        let d = decompose(&frame, a);
        for k in 0..4 {
            components[k].push(d[k]);
        }
    }
    Ok(SplitComponents { frame, components })
}

/// The regular product `f * g` at `z in C_I` computed from the split components.
pub fn splitting_star(f: &SplitComponents, g: &SplitComponents, z: Complex64) -> Octonion {
    let h = star_values(
        &f.eval_components(z),
        &f.eval_components(z.conj()),
        &g.eval_components(z),
        &g.eval_components(z.conj()),
    );
    assemble(&f.frame, &h)
}

/// Components of `f * g` at `z` from the components of `f` and `g` at `z`
/// and `conj(z)`.
pub fn star_values(
    fz: &[Complex64; 4],
    fzbar: &[Complex64; 4],
    gz: &[Complex64; 4],
    gzbar: &[Complex64; 4],
) -> [Complex64; 4] {
    let fb = fzbar.map(|c| c.conj());
    let gb = gzbar.map(|c| c.conj());
    [
        fz[0] * gz[0] - fz[1] * gb[1] - fz[2] * gb[2] - fz[3] * gb[3],
        fz[0] * gz[1] + fz[1] * gb[0] + fb[2] * gb[3] - fb[3] * gb[2],
        fz[0] * gz[2] - fb[1] * gb[3] + fz[2] * gb[0] + fb[3] * gb[1],
        fz[0] * gz[3] + fb[1] * gb[2] - fb[2] * gb[1] + fz[3] * gb[0],
    ]
}

/// Pointwise values of the split components of a rational `d^-1 n`,
/// `F_k = d^-1 N_k`, and of their derivatives.
#[derive(Debug, Clone)]
pub struct ComponentEvaluator {
    num: SplitComponents,
    num_prime: SplitComponents,
    factors: Vec<Vec<f64>>,
}

impl ComponentEvaluator {
    pub fn new(f: &RegularRational, frame: &Frame) -> Result<Self> {
        Ok(ComponentEvaluator {
            num: split(f.num(), frame)?,
            num_prime: split(&f.num().derivative(1), frame)?,
            factors: f.factors().to_vec(),
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.num.frame
    }

    /// `(1/d(z), d'(z)/d(z))`.
    fn den_terms(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let mut d = Complex64::new(1.0, 0.0);
        let mut log = Complex64::new(0.0, 0.0);
        for p in &self.factors {
            let v = poly::eval_complex(p, z);
            d *= v;
            log += poly::eval_complex(&poly::derivative(p), z) / v;
        }
        if d.norm() <= POLE {
            return Err(Error::PoleAtPoint(d.norm()));
        }
        Ok((d.inv(), log))
    }

    pub fn values(&self, z: Complex64) -> Result<[Complex64; 4]> {
        let (inv, _) = self.den_terms(z)?;
        Ok(self.num.eval_components(z).map(|c| inv * c))
    }

    pub fn derivatives(&self, z: Complex64) -> Result<[Complex64; 4]> {
        let (inv, log) = self.den_terms(z)?;
        let n = self.num.eval_components(z);
        let np = self.num_prime.eval_components(z);
        Ok([0, 1, 2, 3].map(|k| inv * (np[k] - log * n[k])))
    }
}
