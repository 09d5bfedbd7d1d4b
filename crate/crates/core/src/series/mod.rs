//! Truncated slice-regular power series `f(w) = sum w^n a_n` and real-denominator
//! regular rationals.

mod construct;
pub mod poly;
mod rational;
mod split;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{imaginary_unit_of, Octonion, UnitImaginary};
use crate::error::{Error, Result};
use crate::tolerance::{ALG_TOL, REAL_POINT};

pub use construct::{construct, Family};
pub use rational::RegularRational;
pub use split::{assemble, decompose, split, splitting_star, star_values, ComponentEvaluator, SplitComponents};

/// Default truncation degree for series expansions.
pub const DEFAULT_DEGREE: usize = 64;

/// Coordinates of `w` in its slice: `w = z.re + z.im I` with `z.im >= 0`.
pub fn slice_coordinates(w: &Octonion) -> (UnitImaginary, Complex64) {
    let i = imaginary_unit_of(w);
    (i, Complex64::new(w.re(), w.im().norm()))
}

/// The point of `C_I` corresponding to `z`.
pub fn slice_point(i: &UnitImaginary, z: Complex64) -> Octonion {
    i.point(z.re, z.im)
}

/// Operations shared by every slice-regular representation.
pub trait Regular: Sized {
    fn eval(&self, w: &Octonion) -> Result<Octonion>;

    /// The slice derivative as a function of the same kind.
    fn slice_derivative(&self) -> Self;

    /// `R_xi f`, the unique regular function with `f(w) - f(xi) = (w - xi) * R_xi f(w)`.
    fn remainder(&self, xi: &Octonion) -> Result<Self>;

    fn derivative_at(&self, w: &Octonion) -> Result<Octonion> {
        self.slice_derivative().eval(w)
    }

    /// `(2 Im xi)^-1 (f(xi) - f(conj xi))`.
    fn sphere_derivative(&self, xi: &Octonion) -> Result<Octonion> {
        let im = xi.im();
        if im.norm() < REAL_POINT {
            return Err(Error::RealPoint);
        }
        let d = self.eval(xi)? - self.eval(&xi.conj())?;
        Ok((im * 2.0).inverse()? * d)
    }

    /// `R_xi f(conj xi)`; equals the sphere derivative off the real axis and
    /// `f'(xi)` on it.
    fn remainder_at_conjugate(&self, xi: &Octonion) -> Result<Octonion> {
        self.remainder(xi)?.eval(&xi.conj())
    }

    /// `R_{conj xi} R_xi f(xi)`.
    fn second_remainder(&self, xi: &Octonion) -> Result<Octonion> {
        self.remainder(xi)?.remainder(&xi.conj())?.eval(xi)
    }

    /// Derivative of `t -> f(xi + t v)` at `t = 0`.
    fn directional_derivative(&self, xi: &Octonion, v: &Octonion) -> Result<Octonion> {
        let r1 = self.remainder(xi)?;
        let ds = r1.eval(&xi.conj())?;
        let r2 = r1.remainder(&xi.conj())?.eval(xi)?;
        Ok(*v * ds + (*xi * *v - *v * xi.conj()) * r2)
    }
}

/// A polynomial `sum_{n<=N} w^n a_n` with right octonion coefficients.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct SliceSeries {
    coeffs: Vec<Octonion>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    degree: usize,
    coeffs: Vec<Octonion>,
}

impl TryFrom<SeriesRepr> for SliceSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != r.degree + 1 {
            return Err(Error::Parse(format!(
                "degree {} does not match {} coefficients",
                r.degree,
                r.coeffs.len()
            )));
        }
        Ok(SliceSeries { coeffs: r.coeffs })
    }
}

impl From<SliceSeries> for SeriesRepr {
    fn from(f: SliceSeries) -> Self {
        SeriesRepr {
            degree: f.degree(),
            coeffs: f.coeffs,
        }
    }
}

impl std::fmt::Debug for SliceSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl SliceSeries {
    /// An empty list is read as the zero series.
    pub fn new(coeffs: Vec<Octonion>) -> Self {
        if coeffs.is_empty() {
            return Self::zero();
        }
        SliceSeries { coeffs }
    }

    pub fn zero() -> Self {
        SliceSeries {
            coeffs: vec![Octonion::ZERO],
        }
    }

    pub fn constant(c: Octonion) -> Self {
        SliceSeries { coeffs: vec![c] }
    }

    /// `w^n a`.
    pub fn monomial(n: usize, a: Octonion) -> Self {
        let mut coeffs = vec![Octonion::ZERO; n + 1];
        coeffs[n] = a;
        SliceSeries { coeffs }
    }

    pub fn identity() -> Self {
        Self::monomial(1, Octonion::ONE)
    }

    pub fn from_real(p: &[f64]) -> Self {
        Self::new(p.iter().map(|&x| Octonion::real(x)).collect())
    }

    pub fn coeffs(&self) -> &[Octonion] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Octonion {
        self.coeffs.get(n).copied().unwrap_or(Octonion::ZERO)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(Octonion::is_finite)
    }

    pub fn is_quaternionic(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|a| a.is_quaternionic(tol))
    }

    /// Largest componentwise difference, padding the shorter series with zeros.
    pub fn max_abs_diff(&self, other: &SliceSeries) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| self.coeff(k).max_abs_diff(&other.coeff(k)))
            .fold(0.0, f64::max)
    }

    /// Index of the first coefficient with norm above `tol`, if any.
    pub fn vanishing_order(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().position(|a| a.norm() > tol)
    }

    /// `(sum Re(z^n) a_n, sum Im(z^n) a_n)` so that `f(x + yI) = A + I B`.
    pub(crate) fn slice_parts(&self, z: Complex64) -> (Octonion, Octonion) {
        let mut p = Complex64::new(1.0, 0.0);
        let mut a = Octonion::ZERO;
        let mut b = Octonion::ZERO;
        for c in &self.coeffs {
            a += *c * p.re;
            b += *c * p.im;
            p *= z;
        }
        (a, b)
    }

    /// Evaluation at `x + yI`.
    pub fn eval_in_slice(&self, i: &UnitImaginary, z: Complex64) -> Octonion {
        let (a, b) = self.slice_parts(z);
        a + i.value() * b
    }

    pub fn eval(&self, w: &Octonion) -> Octonion {
        let (i, z) = slice_coordinates(w);
        self.eval_in_slice(&i, z)
    }

    pub fn add(&self, other: &SliceSeries) -> SliceSeries {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &SliceSeries) -> SliceSeries {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, s: f64) -> SliceSeries {
        Self::new(self.coeffs.iter().map(|a| *a * s).collect())
    }

    /// `f * c` for a constant `c`: coefficients `a_n c`.
    pub fn right_mul(&self, c: &Octonion) -> SliceSeries {
        Self::new(self.coeffs.iter().map(|a| *a * *c).collect())
    }

    /// `c * f` for a constant `c`: coefficients `c a_n`.
    pub fn left_mul(&self, c: &Octonion) -> SliceSeries {
        Self::new(self.coeffs.iter().map(|a| *c * *a).collect())
    }

    /// `w^k * f`.
    pub fn shift(&self, k: usize) -> SliceSeries {
        let mut coeffs = vec![Octonion::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Product with a real polynomial, which is slice preserving.
    pub fn mul_real(&self, p: &[f64]) -> SliceSeries {
        let mut c = vec![Octonion::ZERO; self.coeffs.len() + p.len().max(1) - 1];
        for (k, x) in p.iter().enumerate() {
            for (j, a) in self.coeffs.iter().enumerate() {
                c[k + j] += *a * *x;
            }
        }
        Self::new(c)
    }

    /// Keeps the coefficients of degree at most `n`; the flag reports whether
    /// nonzero terms were dropped.
    pub fn truncate(&self, n: usize) -> (SliceSeries, bool) {
        let dropped = self.coeffs.iter().skip(n + 1).any(|a| *a != Octonion::ZERO);
        let coeffs = self.coeffs.iter().take(n + 1).copied().collect();
        (Self::new(coeffs), dropped)
    }

    /// Drops trailing exactly-zero coefficients.
    pub fn trimmed(&self) -> SliceSeries {
        let mut c = self.coeffs.clone();
        while c.len() > 1 && c[c.len() - 1] == Octonion::ZERO {
            c.pop();
        }
        Self::new(c)
    }

    /// The regular product, `c_n = sum_k a_k b_{n-k}`, of full degree.
    pub fn star(&self, other: &SliceSeries) -> SliceSeries {
        let mut c = vec![Octonion::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[k + j] += *a * *b;
            }
        }
        Self::new(c)
    }

    pub fn regular_conjugate(&self) -> SliceSeries {
        Self::new(self.coeffs.iter().map(Octonion::conj).collect())
    }

    /// Real coefficients of `f * f^c` and the largest imaginary residue
    /// relative to the magnitude of the contributing products.
    pub fn symmetrization(&self) -> (Vec<f64>, f64) {
        let s = self.star(&self.regular_conjugate());
        let n = self.coeffs.len();
        let mut residue: f64 = 0.0;
        let real = s
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let scale: f64 = (k.saturating_sub(n - 1)..=k.min(n - 1))
                    .map(|j| self.coeffs[j].norm() * self.coeffs[k - j].norm())
                    .sum();
                residue = residue.max(c.im().norm() / (1.0 + scale));
                c.re()
            })
            .collect();
        (real, residue)
    }

    /// `f^s = f * f^c`, coerced to exactly real coefficients.
    pub fn symmetrize(&self) -> SliceSeries {
        let (real, residue) = self.symmetrization();
        debug_assert!(residue < 1e-13, "symmetrization residue {residue:e}");
        Self::from_real(&real)
    }

    /// `f^{-*} = (f^s)^-1 f^c` as a rational.
    pub fn reciprocal(&self) -> RegularRational {
        RegularRational::from_series(self.clone()).reciprocal()
    }

    /// Degree-`n` Taylor expansion of `f^{-*}`.
    pub fn reciprocal_series(&self, n: usize) -> Result<SliceSeries> {
        if self.coeff(0).norm() <= ALG_TOL {
            return Err(Error::ZeroConstantTerm);
        }
        self.reciprocal().taylor(n)
    }

    /// The `order`-th slice derivative.
    pub fn derivative(&self, order: usize) -> SliceSeries {
        if order > self.degree() {
            return Self::zero();
        }
        let coeffs = (order..self.coeffs.len())
            .map(|k| {
                let f: f64 = ((k - order + 1)..=k).map(|j| j as f64).product();
                self.coeffs[k] * f
            })
            .collect();
        Self::new(coeffs)
    }

    /// Synthetic division by `w - xi`; returns `R_xi f` and the residual
    /// `|a_0 - f(xi) + xi b_0|`.
    pub fn remainder_with_residual(&self, xi: &Octonion) -> (SliceSeries, f64) {
        let n = self.degree();
        if n == 0 {
            return (Self::zero(), 0.0);
        }
        let mut b = vec![Octonion::ZERO; n];
        b[n - 1] = self.coeffs[n];
        for k in (1..n).rev() {
            b[k - 1] = self.coeffs[k] + *xi * b[k];
        }
        let residual = (self.coeffs[0] - self.eval(xi) + *xi * b[0]).norm();
        (Self::new(b), residual)
    }

    /// `f_u(w) = sum w^n u^n a_n` for `|u| <= 1`.
    pub fn compose_with_unit(&self, u: &Octonion) -> Result<SliceSeries> {
        if u.norm() > 1.0 + ALG_TOL {
            return Err(Error::BadParameter(format!("|u| = {} exceeds 1", u.norm())));
        }
        let mut p = Octonion::ONE;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(p * *a);
            p = p * *u;
        }
        Ok(Self::new(coeffs))
    }
}

impl Regular for SliceSeries {
    fn eval(&self, w: &Octonion) -> Result<Octonion> {
        Ok(SliceSeries::eval(self, w))
    }

    fn slice_derivative(&self) -> Self {
        self.derivative(1)
    }

    fn remainder(&self, xi: &Octonion) -> Result<Self> {
        Ok(self.remainder_with_residual(xi).0)
    }
}

/// Value at `x + yJ` recovered from the values `f(z)` and `f(conj z)` on the
/// slice `C_I`, where `z = x + yI`.
pub fn representation_eval(
    f_z: &Octonion,
    f_zbar: &Octonion,
    i: &UnitImaginary,
    j: &UnitImaginary,
) -> Octonion {
    let sum = (*f_z + *f_zbar) * 0.5;
    let diff = *f_z - *f_zbar;
    sum - j.value() * (i.value() * diff) * 0.5
}

#[cfg(test)]
mod tests;
