use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{poly, slice_coordinates, Regular, SliceSeries};
use crate::algebra::{Octonion, UnitImaginary};
use crate::error::{Error, Result};
use crate::tolerance::POLE;

/// `den(w)^-1 num(w)` with a real polynomial `den`.
///
/// The denominator is also kept as a list of factors whose product is `den`;
/// evaluating the factors separately avoids the cancellation of the expanded
/// form near repeated roots.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct RegularRational {
    num: SliceSeries,
    den: Vec<f64>,
    factors: Vec<Vec<f64>>,
}

impl PartialEq for RegularRational {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: SliceSeries,
    den: Vec<f64>,
}

impl TryFrom<RationalRepr> for RegularRational {
    type Error = Error;

    fn try_from(r: RationalRepr) -> Result<Self> {
        RegularRational::new(r.num, r.den).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<RegularRational> for RationalRepr {
    fn from(f: RegularRational) -> Self {
        RationalRepr { num: f.num, den: f.den }
    }
}

impl From<SliceSeries> for RegularRational {
    fn from(f: SliceSeries) -> Self {
        RegularRational::from_series(f)
    }
}

impl RegularRational {
    pub fn new(num: SliceSeries, den: Vec<f64>) -> Result<Self> {
        if den.iter().any(|x| !x.is_finite()) || !num.is_finite() {
            return Err(Error::BadParameter("non-finite coefficient".into()));
        }
        if den.iter().all(|x| *x == 0.0) {
            return Err(Error::BadParameter("zero denominator".into()));
        }
        let den = poly::trim(den);
        Ok(RegularRational { num, factors: vec![den.clone()], den })
    }

    pub(crate) fn with_factors(num: SliceSeries, factors: Vec<Vec<f64>>) -> Self {
        let factors: Vec<Vec<f64>> = factors.into_iter().filter(|p| p != &[1.0]).collect();
        let den = poly::trim(factors.iter().fold(vec![1.0], |acc, p| poly::mul(&acc, p)));
        RegularRational { num, den, factors }
    }

    pub(crate) fn trimmed(&self) -> RegularRational {
        RegularRational { num: self.num.trimmed(), den: self.den.clone(), factors: self.factors.clone() }
    }

    fn factors_times(&self, other: &RegularRational) -> Vec<Vec<f64>> {
        self.factors.iter().chain(&other.factors).cloned().collect()
    }

    pub fn from_series(f: SliceSeries) -> Self {
        RegularRational { num: f, den: vec![1.0], factors: Vec::new() }
    }

    pub fn num(&self) -> &SliceSeries {
        &self.num
    }

    pub fn den(&self) -> &[f64] {
        &self.den
    }

    pub(crate) fn factors(&self) -> &[Vec<f64>] {
        &self.factors
    }

    pub fn is_quaternionic(&self, tol: f64) -> bool {
        self.num.is_quaternionic(tol)
    }

    pub fn eval_den(&self, z: Complex64) -> Complex64 {
        self.factors
            .iter()
            .map(|p| poly::eval_complex(p, z))
            .product()
    }

    pub fn eval_in_slice(&self, i: &UnitImaginary, z: Complex64) -> Result<Octonion> {
        let d = self.eval_den(z);
        if d.norm() <= POLE {
            return Err(Error::PoleAtPoint(d.norm()));
        }
        let inv = d.inv();
        Ok(i.point(inv.re, inv.im) * self.num.eval_in_slice(i, z))
    }

    /// `(n1 d2 + n2 d1) / (d1 d2)`.
    pub fn add(&self, other: &RegularRational) -> RegularRational {
        if self.den == other.den {
            return RegularRational {
                num: self.num.add(&other.num),
                ..self.clone()
            };
        }
        RegularRational::with_factors(
            self.num.mul_real(&other.den).add(&other.num.mul_real(&self.den)),
            self.factors_times(other),
        )
    }

    pub fn sub(&self, other: &RegularRational) -> RegularRational {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> RegularRational {
        RegularRational {
            num: self.num.scale(s),
            ..self.clone()
        }
    }

    /// `f * c` for a constant `c`.
    pub fn right_mul(&self, c: &Octonion) -> RegularRational {
        RegularRational {
            num: self.num.right_mul(c),
            ..self.clone()
        }
    }

    /// `w^k * f`.
    pub fn shift(&self, k: usize) -> RegularRational {
        RegularRational {
            num: self.num.shift(k),
            ..self.clone()
        }
    }

    /// The real denominator commutes through the regular product.
    pub fn star(&self, other: &RegularRational) -> RegularRational {
        RegularRational::with_factors(self.num.star(&other.num), self.factors_times(other))
    }

    pub fn regular_conjugate(&self) -> RegularRational {
        RegularRational {
            num: self.num.regular_conjugate(),
            ..self.clone()
        }
    }

    /// `f^s` as a real rational `(num^s, den^2)`.
    pub fn symmetrization(&self) -> (Vec<f64>, Vec<f64>) {
        (self.num.symmetrization().0, poly::mul(&self.den, &self.den))
    }

    /// `(d^-1 n)^{-*} = (n^s)^-1 (d n^c)`.
    pub fn reciprocal(&self) -> RegularRational {
        let (ns, _) = self.num.symmetrization();
        RegularRational::with_factors(
            self.num.regular_conjugate().mul_real(&self.den),
            vec![poly::trim(ns)],
        )
    }

    /// `(d n' - d' n) / d^2`.
    pub fn derivative(&self) -> RegularRational {
        let dn = self.num.derivative(1).mul_real(&self.den);
        let nd = self.num.mul_real(&poly::derivative(&self.den));
        RegularRational::with_factors(dn.sub(&nd), self.factors_times(self))
    }

    /// Degree-`n` Taylor expansion at the origin.
    pub fn taylor(&self, n: usize) -> Result<SliceSeries> {
        let inv = poly::inverse_series(&self.den, n)?;
        Ok(self.num.mul_real(&inv).truncate(n).0)
    }

    /// Returns `R_xi f` and the synthetic-division residual.
    pub fn remainder_with_residual(&self, xi: &Octonion) -> Result<(RegularRational, f64)> {
        let value = self.eval(xi)?;
        let shifted = self.num.sub(&SliceSeries::from_real(&self.den).right_mul(&value));
        let (q, residual) = shifted.remainder_with_residual(xi);
        Ok((
            RegularRational {
                num: q,
                ..self.clone()
            },
            residual,
        ))
    }

    pub fn eval(&self, w: &Octonion) -> Result<Octonion> {
        let (i, z) = slice_coordinates(w);
        self.eval_in_slice(&i, z)
    }
}

impl Regular for RegularRational {
    fn eval(&self, w: &Octonion) -> Result<Octonion> {
        RegularRational::eval(self, w)
    }

    fn slice_derivative(&self) -> Self {
        self.derivative()
    }

    /// `d^-1 (n' - (d'/d) n)` with `d'/d` summed over the factors.
    fn derivative_at(&self, w: &Octonion) -> Result<Octonion> {
        let (i, z) = slice_coordinates(w);
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
        let c = |x: Complex64| i.point(x.re, x.im);
        let n = self.num.eval_in_slice(&i, z);
        let np = self.num.derivative(1).eval_in_slice(&i, z);
        Ok(c(d.inv()) * (np - c(log) * n))
    }

    fn remainder(&self, xi: &Octonion) -> Result<Self> {
        Ok(self.remainder_with_residual(xi)?.0)
    }
}
