use serde::{Deserialize, Serialize};

use super::Octonion;
use crate::error::{Error, Result};
use crate::tolerance::{ALG_TOL, REAL_POINT};

/// A purely imaginary unit octonion, an element of the 6-sphere `w^2 = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Octonion", into = "Octonion")]
pub struct UnitImaginary(Octonion);

impl UnitImaginary {
    /// Checks `Re = 0` and `|value| = 1` within `1e-12`.
    pub fn new(value: Octonion) -> Result<Self> {
        if value.re().abs() > ALG_TOL || (value.norm() - 1.0).abs() > ALG_TOL {
            return Err(Error::BadParameter(format!(
                "{value} is not a unit imaginary octonion"
            )));
        }
        Ok(UnitImaginary(value))
    }

    /// Normalizes the imaginary part of `w`.
    pub fn normalize(w: Octonion) -> Result<Self> {
        let im = w.im();
        let n = im.norm();
        if n <= REAL_POINT {
            return Err(Error::RealPoint);
        }
        Ok(UnitImaginary(im / n))
    }

    /// `e_k` for `k` in `1..8`.
    pub fn basis(k: usize) -> Self {
        assert!((1..8).contains(&k), "imaginary basis index {k} out of range");
        UnitImaginary(Octonion::basis(k))
    }

    pub fn value(&self) -> Octonion {
        self.0
    }

    /// The point `x + y I` of the slice `C_I`.
    pub fn point(&self, x: f64, y: f64) -> Octonion {
        Octonion::real(x) + self.0 * y
    }
}

impl TryFrom<Octonion> for UnitImaginary {
    type Error = Error;

    fn try_from(w: Octonion) -> Result<Self> {
        UnitImaginary::new(w)
    }
}

impl From<UnitImaginary> for Octonion {
    fn from(u: UnitImaginary) -> Octonion {
        u.0
    }
}

/// `Im(w)/|Im(w)|`, or `e1` for (numerically) real `w`.
pub fn imaginary_unit_of(w: &Octonion) -> UnitImaginary {
    UnitImaginary::normalize(*w).unwrap_or(UnitImaginary(Octonion::basis(1)))
}

/// Imaginary units `I, J, K` with `I, J, IJ, K` mutually perpendicular.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub i: UnitImaginary,
    pub j: UnitImaginary,
    pub k: UnitImaginary,
}

impl Frame {
    pub fn new(i: UnitImaginary, j: UnitImaginary, k: UnitImaginary) -> Result<Self> {
        let (a, b, c) = (i.value(), j.value(), k.value());
        let ab = a * b;
        let pairs = [
            ("I,J", a.inner(&b)),
            ("I,K", a.inner(&c)),
            ("J,K", b.inner(&c)),
            ("IJ,K", ab.inner(&c)),
            ("I,IJ", a.inner(&ab)),
            ("J,IJ", b.inner(&ab)),
        ];
        for (name, v) in pairs {
            if v.abs() >= ALG_TOL {
                return Err(Error::BadFrame(format!("<{name}> = {v:e}")));
            }
        }
        Ok(Frame { i, j, k })
    }

    /// `(e1, e2, e4)`.
    pub fn standard() -> Self {
        Frame {
            i: UnitImaginary::basis(1),
            j: UnitImaginary::basis(2),
            k: UnitImaginary::basis(4),
        }
    }

    /// Completes `i` to a frame using `j_hint` and `k_hint` as seeds for
    /// Gram-Schmidt. Falls back to basis vectors when a hint is degenerate.
    pub fn complete(i: UnitImaginary, j_hint: Octonion, k_hint: Octonion) -> Result<Self> {
        let a = i.value();
        let j = orthonormalize(j_hint, &[Octonion::ONE, a])
            .or_else(|| (1..8).find_map(|n| orthonormalize(Octonion::basis(n), &[Octonion::ONE, a])))
            .ok_or_else(|| Error::BadFrame("cannot complete J".into()))?;
        let ab = a * j;
        let span = [Octonion::ONE, a, j, ab];
        let k = orthonormalize(k_hint, &span)
            .or_else(|| (1..8).find_map(|n| orthonormalize(Octonion::basis(n), &span)))
            .ok_or_else(|| Error::BadFrame("cannot complete K".into()))?;
        Frame::new(i, UnitImaginary::new(j)?, UnitImaginary::new(k)?)
    }

    /// The orthonormal basis `{1, I, J, IJ, K, IK, JK, (IJ)K}`.
    pub fn basis(&self) -> [Octonion; 8] {
        let (a, b, c) = (self.i.value(), self.j.value(), self.k.value());
        [Octonion::ONE, a, b, a * b, c, a * c, b * c, (a * b) * c]
    }
}

fn orthonormalize(v: Octonion, against: &[Octonion]) -> Option<Octonion> {
    let mut w = v;
    // Two passes keep the residual inner products at rounding level.
    for _ in 0..2 {
        for u in against {
            w -= *u * w.inner(u);
        }
    }
    let n = w.norm();
    (n > 1e-6).then(|| w / n)
}
