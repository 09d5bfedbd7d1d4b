//! Octonion arithmetic and the quaternion subalgebra.
//!
//! An [`Octonion`] is stored as eight real components in the basis
//! `{1, e1, ..., e7}`. Quaternions are octonions with components `4..8`
//! equal to zero; the product restricted to them is the Hamilton product on
//! `{1, e1, e2, e3 = e1 e2}`.

mod cayley_dickson;
mod sample;
mod table;
mod units;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::ZERO_DIVISOR;

pub use cayley_dickson::cayley_dickson_mul;
pub use sample::{sample, SampleTarget};
pub use table::{psi, MulTable, FANO_TRIPLES, TABLE};
pub use units::{imaginary_unit_of, Frame, UnitImaginary};

/// An element of the octonions.
///
/// Serialized as a JSON array of eight numbers in basis order `[1, e1, ..., e7]`.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 8]", into = "[f64; 8]")]
pub struct Octonion(pub [f64; 8]);

impl TryFrom<[f64; 8]> for Octonion {
    type Error = Error;

    fn try_from(c: [f64; 8]) -> Result<Self> {
        if c.iter().all(|x| x.is_finite()) {
            Ok(Octonion(c))
        } else {
            Err(Error::Parse("octonion components must be finite".into()))
        }
    }
}

impl From<Octonion> for [f64; 8] {
    fn from(w: Octonion) -> Self {
        w.0
    }
}

impl From<f64> for Octonion {
    fn from(x: f64) -> Self {
        Octonion::real(x)
    }
}

/// Conjugate, norm, real and imaginary parts of an octonion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Involutions {
    pub conj: Octonion,
    pub norm: f64,
    pub re: f64,
    pub im: Octonion,
}

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub const fn new(c: [f64; 8]) -> Self {
        Octonion(c)
    }

    pub const fn real(x: f64) -> Self {
        Octonion([x, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    }

    /// Basis element `e_k` (`e_0 = 1`).
    pub fn basis(k: usize) -> Self {
        assert!(k < 8, "basis index {k} out of range");
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Octonion(c)
    }

    /// A quaternion `a + b e1 + c e2 + d e3`.
    pub const fn quaternion(a: f64, b: f64, c: f64, d: f64) -> Self {
        Octonion([a, b, c, d, 0.0, 0.0, 0.0, 0.0])
    }

    pub fn components(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    pub fn im(&self) -> Octonion {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    pub fn conj(&self) -> Octonion {
        let mut c = self.0;
        for x in &mut c[1..] {
            *x = -*x;
        }
        Octonion(c)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn involutions(&self) -> Involutions {
        Involutions {
            conj: self.conj(),
            norm: self.norm(),
            re: self.re(),
            im: self.im(),
        }
    }

    /// Euclidean inner product `Re(z conj(w))` on `R^8`.
    pub fn inner(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// `conj(w) / |w|^2`.
    pub fn inverse(&self) -> Result<Octonion> {
        let n = self.norm_sqr();
        if n.sqrt() < ZERO_DIVISOR {
            return Err(Error::ZeroDivisor(n.sqrt()));
        }
        Ok(self.conj() / n)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.im().norm() <= tol
    }

    /// Components `4..8` vanish within `tol`.
    pub fn is_quaternionic(&self, tol: f64) -> bool {
        self.0[4..].iter().all(|x| x.abs() <= tol)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Largest componentwise distance.
    pub fn max_abs_diff(&self, other: &Octonion) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `w^n` by repeated multiplication (powers of one element associate).
    pub fn powi(&self, n: u32) -> Octonion {
        let mut out = Octonion::ONE;
        for _ in 0..n {
            out = out * *self;
        }
        out
    }
}

/// `[u, v, w] = (uv)w - u(vw)`.
pub fn associator(u: &Octonion, v: &Octonion, w: &Octonion) -> Octonion {
    (*u * *v) * *w - *u * (*v * *w)
}

/// `[u, v] = uv - vu`.
pub fn bracket(u: &Octonion, v: &Octonion) -> Octonion {
    *u * *v - *v * *u
}

/// `u ^ v = [u, v] / 2`.
pub fn wedge(u: &Octonion, v: &Octonion) -> Octonion {
    bracket(u, v) * 0.5
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for i in 0..8 {
            let a = self.0[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..8 {
                let s = TABLE.sign[i][j] as f64;
                out[TABLE.index[i][j]] += s * a * rhs.0[j];
            }
        }
        Octonion(out)
    }
}

impl MulAssign for Octonion {
    fn mul_assign(&mut self, rhs: Octonion) {
        *self = *self * rhs;
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: f64) -> Octonion {
        let mut c = self.0;
        for x in &mut c {
            *x *= rhs;
        }
        Octonion(c)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        rhs * self
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;

    fn div(self, rhs: f64) -> Octonion {
        self * (1.0 / rhs)
    }
}

impl Add for Octonion {
    type Output = Octonion;

    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0.iter()) {
            *x += y;
        }
        Octonion(c)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;

    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0.iter()) {
            *x -= y;
        }
        Octonion(c)
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Neg for Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        self * -1.0
    }
}

impl std::iter::Sum for Octonion {
    fn sum<I: Iterator<Item = Octonion>>(iter: I) -> Octonion {
        iter.fold(Octonion::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({:?})", self.0)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0[0])?;
        for k in 1..8 {
            let x = self.0[k];
            if x != 0.0 {
                let sign = if x < 0.0 { '-' } else { '+' };
                write!(f, " {sign} {}e{k}", x.abs())?;
            }
        }
        Ok(())
    }
}
