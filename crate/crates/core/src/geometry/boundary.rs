use serde::{Deserialize, Serialize};

use crate::algebra::{associator, bracket, Octonion};
use crate::error::{Error, Result};
use crate::series::{Regular, RegularRational, SliceSeries};
use crate::tolerance::{ALG_TOL, CONTACT};

/// Boundary quantities at a contact point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    /// The real value of the boundary derivative of `|f|` (octonionic
    /// formula) or of the quaternionic `delta`.
    pub delta: f64,
    /// The full octonion whose real part is `delta`.
    pub raw: Octonion,
    pub imag_residual: f64,
    /// `|1 - <f(0), f(xi)>|^2 / (1 - |f(0)|^2)`.
    pub lower_bound_eq11: f64,
    /// `2 / (1 + Re f'(0))`, when `f(0) = 0` and `f(xi) = xi`.
    pub fixed_point_bound: Option<f64>,
    pub sharp_bound: Option<f64>,
    /// `2 |f(xi) - f(0)|^2 / (1 - |f(0)|^2 + |f'(0)|)`.
    pub modulus_bound: Option<f64>,
    pub osserman_bound: Option<f64>,
    pub vanishing: Option<VanishingBound>,
    /// `(|f(xi)| - |f(t xi)|) / (1 - t)` with `t = 1 - 1e-4`.
    pub fd_crosscheck: f64,
}

/// Lower bound for `delta` when `f` vanishes to order `n >= 1` at the origin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VanishingBound {
    pub order: usize,
    pub bound: f64,
    /// Set when `f(xi) = xi^n a_n`, i.e. `f(q) = q^n u`, where the bound is `n`.
    pub extremal: bool,
}

const FD_STEP: f64 = 1e-4;

struct Contact {
    f_xi: Octonion,
    f0: Octonion,
    fd: f64,
}

fn contact(f: &RegularRational, xi: &Octonion) -> Result<Contact> {
    if (xi.norm() - 1.0).abs() > ALG_TOL {
        return Err(Error::BadParameter(format!("|xi| = {} is not 1", xi.norm())));
    }
    let f_xi = f.eval(xi)?;
    if (f_xi.norm() - 1.0).abs() > CONTACT {
        return Err(Error::NotContactPoint(f_xi.norm()));
    }
    let f0 = f.eval(&Octonion::ZERO)?;
    if f0.norm() >= 1.0 {
        return Err(Error::HypothesisViolated(format!("|f(0)| = {} is not < 1", f0.norm())));
    }
    let t = 1.0 - FD_STEP;
    let fd = (f_xi.norm() - f.eval(&(*xi * t))?.norm()) / FD_STEP;
    Ok(Contact { f_xi, f0, fd })
}

fn lower_bound(c: &Contact) -> f64 {
    (1.0 - c.f0.inner(&c.f_xi)).powi(2) / (1.0 - c.f0.norm_sqr())
}

/// `conj(xi) (f(xi) conj f'(xi) + [conj xi, f(xi) conj R2] + 2 [xi, f(xi), R2])`
/// with `R2 = R_{conj xi} R_xi f(xi)`.
pub fn boundary_modulus_derivative(f: &RegularRational, xi: &Octonion) -> Result<BoundaryReport> {
    let c = contact(f, xi)?;
    let fp = f.derivative_at(xi)?;
    let r2 = f.second_remainder(xi)?;
    let xb = xi.conj();
    let inner = c.f_xi * fp.conj()
        + bracket(&xb, &(c.f_xi * r2.conj()))
        + associator(xi, &c.f_xi, &r2) * 2.0;
    let raw = xb * inner;
    let fixed_point_bound = (c.f0.norm() <= ALG_TOL && c.f_xi.max_abs_diff(xi) <= CONTACT)
        .then(|| f.derivative_at(&Octonion::ZERO))
        .transpose()?
        .map(|d| 2.0 / (1.0 + d.re()));
    Ok(BoundaryReport {
        delta: raw.re(),
        raw,
        imag_residual: raw.im().norm(),
        lower_bound_eq11: lower_bound(&c),
        fixed_point_bound,
        sharp_bound: None,
        modulus_bound: None,
        osserman_bound: None,
        vanishing: None,
        fd_crosscheck: c.fd,
    })
}

/// The quaternionic `delta`, the sharp bound built on
/// `S = Re(f'(0) (f(xi) - f(0))^-1 xi (1 - f(0) conj f(xi))^-1)` and the
/// Osserman-type bounds.
pub fn quaternionic_bounds(f: &RegularRational, xi: &Octonion) -> Result<BoundaryReport> {
    if !f.is_quaternionic(ALG_TOL) || !xi.is_quaternionic(ALG_TOL) {
        return Err(Error::NonQuaternionic);
    }
    let c = contact(f, xi)?;
    let fp = f.derivative_at(xi)?;
    let r2 = f.second_remainder(xi)?;
    let xb = xi.conj();
    let raw = xb * (c.f_xi * fp.conj() + bracket(&xb, &(c.f_xi * r2.conj())));

    let d0 = f.derivative_at(&Octonion::ZERO)?;
    let gap = c.f_xi - c.f0;
    let one_minus = 1.0 - c.f0.norm_sqr();
    let s = (d0 * gap.inverse()? * *xi * (Octonion::ONE - c.f0 * c.f_xi.conj()).inverse()?).re();
    let sharp = 2.0 / (s + one_minus / gap.norm_sqr());
    let modulus = 2.0 * gap.norm_sqr() / (one_minus + d0.norm());
    let osserman = 2.0 * (1.0 - c.f0.norm()).powi(2) / (one_minus + d0.norm());

    Ok(BoundaryReport {
        delta: raw.re(),
        raw,
        imag_residual: raw.im().norm(),
        lower_bound_eq11: lower_bound(&c),
        fixed_point_bound: None,
        sharp_bound: Some(sharp),
        modulus_bound: Some(modulus),
        osserman_bound: Some(osserman),
        vanishing: vanishing_bound(f, xi, &c.f_xi)?,
        fd_crosscheck: c.fd,
    })
}

/// Applies the sharp bound to `g = q^-n f`, for which `g(0) = a_n`,
/// `g'(0) = a_{n+1}` and `g(xi) = xi^-n f(xi)`.
fn vanishing_bound(f: &RegularRational, xi: &Octonion, f_xi: &Octonion) -> Result<Option<VanishingBound>> {
    const MAX_ORDER: usize = 16;
    let taylor = f.taylor(MAX_ORDER + 1)?;
    let order = match taylor.vanishing_order(ALG_TOL) {
        Some(0) | None => return Ok(None),
        Some(n) if n > MAX_ORDER => return Ok(None),
        Some(n) => n,
    };
    let an = taylor.coeff(order);
    let an1 = taylor.coeff(order + 1);
    let g_xi = xi.powi(order as u32).inverse()? * *f_xi;
    let gap = g_xi - an;
    if gap.norm() <= CONTACT {
        return Ok(Some(VanishingBound {
            order,
            bound: order as f64,
            extremal: true,
        }));
    }
    let t = (an1 * gap.inverse()? * *xi * (Octonion::ONE - an * g_xi.conj()).inverse()?).re();
    let bound = order as f64 + 2.0 / (t + (1.0 - an.norm_sqr()) / gap.norm_sqr());
    Ok(Some(VanishingBound {
        order,
        bound,
        extremal: false,
    }))
}

/// Both sides of Julia's inequality at `q`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JuliaReport {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
}

/// `(1 - f conj(eta))^{-*} * (1 + f conj(eta))` as `(P^s)^-1 (P^c * Q)` with
/// `P = d - n conj(eta)` and `Q = d + n conj(eta)`.
pub fn cayley_quotient(f: &RegularRational, eta: &Octonion) -> RegularRational {
    let d = SliceSeries::from_real(f.den());
    let ne = f.num().right_mul(&eta.conj());
    let p = d.sub(&ne);
    let q = d.add(&ne);
    let (ps, _) = p.symmetrization();
    RegularRational::new(p.regular_conjugate().star(&q), ps)
        .expect("symmetrization of a nonzero polynomial")
}

pub fn julia_check(
    f: &RegularRational,
    xi: &Octonion,
    eta: &Octonion,
    alpha: f64,
    q: &Octonion,
) -> Result<JuliaReport> {
    if !(alpha > 0.0) {
        return Err(Error::BadParameter(format!("alpha = {alpha} is not > 0")));
    }
    let lhs = cayley_quotient(f, eta).eval(q)?.re();
    let id = RegularRational::from_series(SliceSeries::identity());
    let rhs = cayley_quotient(&id, xi).eval(q)?.re() / alpha;
    let margin = lhs - rhs;
    Ok(JuliaReport {
        lhs,
        rhs,
        margin,
        holds: margin >= -1e-9,
    })
}

/// The radial inner-product estimate and its second-derivative corollary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InnerEstimate {
    pub delta: f64,
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
    pub second_value: f64,
    pub second_bound: f64,
    pub second_margin: f64,
}

pub fn inner_boundary_estimate(f: &RegularRational, xi: &Octonion, t: f64) -> Result<InnerEstimate> {
    if !(-1.0 < t && t < 1.0) {
        return Err(Error::BadParameter(format!("t = {t} outside (-1, 1)")));
    }
    let delta = quaternionic_bounds(f, xi)?.delta;
    let f_xi = f.eval(xi)?;
    let value = f.eval(&(*xi * t))?.inner(&f_xi);
    let bound = ((delta + 1.0) * t - (delta - 1.0)) / ((delta + 1.0) - (delta - 1.0) * t);
    let f2 = f.derivative().derivative_at(xi)?;
    let second_value = ((*xi * *xi) * f2).inner(&f_xi);
    let second_bound = delta * (delta - 1.0);
    Ok(InnerEstimate {
        delta,
        value,
        bound,
        margin: value - bound,
        second_value,
        second_bound,
        second_margin: second_value - second_bound,
    })
}

/// `(1 - |f(w)|^2)/(1 - |w|^2) - |1 - <f(0), f(w)>|^2 / (1 - |f(0)|^2)`.
pub fn modulus_inequality_check(f: &RegularRational, w: &Octonion) -> Result<f64> {
    if w.norm() >= 1.0 {
        return Err(Error::BadParameter(format!("|w| = {} is not < 1", w.norm())));
    }
    let fw = f.eval(w)?;
    let f0 = f.eval(&Octonion::ZERO)?;
    Ok((1.0 - fw.norm_sqr()) / (1.0 - w.norm_sqr())
        - (1.0 - f0.inner(&fw)).powi(2) / (1.0 - f0.norm_sqr()))
}
