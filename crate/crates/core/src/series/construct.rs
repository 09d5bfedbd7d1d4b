use serde::{Deserialize, Serialize};

use super::{RegularRational, SliceSeries};
use crate::algebra::{Octonion, UnitImaginary};
use crate::error::{Error, Result};
use crate::tolerance::ALG_TOL;

/// Named closed-form regular functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `w (1 - w a conj(xi))^{-*} * (w conj(xi) - a)`, `a in [-1, 1)`, `|xi| = 1`.
    Extremal { a: f64, xi: Octonion },
    /// `(1 - w conj(u))^{-*} * (w - u) v`, `|u| < 1`, `|v| = 1`.
    Mobius { u: Octonion, v: Octonion },
    /// `w (1 - w e^{I theta})^{-*2}`.
    Koebe { i: UnitImaginary, theta: f64 },
    /// `w^n u`, `|u| = 1`.
    MonomialRotation { n: usize, u: Octonion },
    /// `(w (1 + w I/2)^{-*} * (I/2 - w)) * J` for perpendicular `I, J`.
    Example33 { i: UnitImaginary, j: UnitImaginary },
    /// `(w (delta - 1) - xi (delta + 1))^{-*} * (xi (delta - 1) - w (delta + 1)) c`,
    /// `delta >= 1`, `|xi| = |c| = 1`.
    InnerExtremal { delta: f64, xi: Octonion, c: Octonion },
}

fn unit(name: &str, x: &Octonion) -> Result<()> {
    if (x.norm() - 1.0).abs() > ALG_TOL {
        return Err(Error::BadParameter(format!("|{name}| = {} is not 1", x.norm())));
    }
    Ok(())
}

fn linear(a0: Octonion, a1: Octonion) -> SliceSeries {
    SliceSeries::new(vec![a0, a1])
}

pub fn construct(family: &Family) -> Result<RegularRational> {
    build(family).map(|r| r.trimmed())
}

fn build(family: &Family) -> Result<RegularRational> {
    match family {
        Family::Extremal { a, xi } => {
            if !(-1.0..1.0).contains(a) {
                return Err(Error::BadParameter(format!("a = {a} outside [-1, 1)")));
            }
            unit("xi", xi)?;
            if *a == -1.0 {
                // Both factors are 1 + w conj(xi); their quotient cancels.
                return Ok(SliceSeries::identity().into());
            }
            let xb = xi.conj();
            let left = linear(Octonion::ONE, -(xb * *a));
            let right = linear(Octonion::real(-a), xb);
            Ok(left.reciprocal().star(&right.into()).shift(1))
        }
        Family::Mobius { u, v } => {
            if u.norm() >= 1.0 {
                return Err(Error::BadParameter(format!("|u| = {} is not < 1", u.norm())));
            }
            unit("v", v)?;
            let left = linear(Octonion::ONE, -u.conj());
            let right = linear(-(*u * *v), *v);
            Ok(left.reciprocal().star(&right.into()))
        }
        Family::Koebe { i, theta } => {
            let c = i.point(theta.cos(), theta.sin());
            let r = linear(Octonion::ONE, -c).reciprocal();
            Ok(r.star(&r).shift(1))
        }
        Family::MonomialRotation { n, u } => {
            unit("u", u)?;
            Ok(SliceSeries::monomial(*n, *u).into())
        }
        Family::Example33 { i, j } => {
            if i.value().inner(&j.value()).abs() > ALG_TOL {
                return Err(Error::BadParameter("I and J are not perpendicular".into()));
            }
            let iv = i.value();
            let phi = linear(Octonion::ONE, iv * 0.5)
                .reciprocal()
                .star(&linear(iv * 0.5, -Octonion::ONE).into())
                .shift(1);
            Ok(phi.right_mul(&j.value()))
        }
        Family::InnerExtremal { delta, xi, c } => {
            if !(*delta >= 1.0 && delta.is_finite()) {
                return Err(Error::BadParameter(format!("delta = {delta} is not >= 1")));
            }
            unit("xi", xi)?;
            unit("c", c)?;
            let (m, p) = (delta - 1.0, delta + 1.0);
            let left = linear(-(*xi * p), Octonion::real(m));
            let right = linear(*xi * m, Octonion::real(-p)).right_mul(c);
            Ok(left.reciprocal().star(&right.into()))
        }
    }
}
