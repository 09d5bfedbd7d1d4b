//! Random inputs for the suites: series, quaternions and self-maps of the
//! unit ball with a prescribed contact point.

use rand::Rng;

use crate::algebra::{sample, Octonion, SampleTarget, UnitImaginary};
use crate::series::{construct, Family, RegularRational, SliceSeries};

/// Gaussian coefficients damped by `decay^n`.
pub fn random_series<R: Rng + ?Sized>(rng: &mut R, degree: usize, decay: f64) -> SliceSeries {
    let mut s = 1.0;
    let mut c = Vec::with_capacity(degree + 1);
    for _ in 0..=degree {
        c.push(sample(rng, SampleTarget::Algebra) * s);
        s *= decay;
    }
    SliceSeries::new(c)
}

/// Series whose coefficients lie in `C_I`.
pub fn slice_series<R: Rng + ?Sized>(rng: &mut R, i: &UnitImaginary, degree: usize) -> SliceSeries {
    let c = (0..=degree)
        .map(|n| {
            let s = 0.7f64.powi(n as i32);
            i.point(s * gaussian(rng), s * gaussian(rng))
        })
        .collect();
    SliceSeries::new(c)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    sample(rng, SampleTarget::Algebra).0[0]
}

pub fn random_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    let mut c = sample(rng, SampleTarget::Algebra).0;
    c[4..].fill(0.0);
    Octonion(c)
}

/// Uniform on the unit sphere of the quaternions.
pub fn unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    loop {
        let q = random_quaternion(rng);
        if q.norm() > 1e-6 {
            return q / q.norm();
        }
    }
}

/// Uniform in the quaternion ball of radius `r`.
pub fn quaternion_in_ball<R: Rng + ?Sized>(rng: &mut R, r: f64) -> Octonion {
    let t: f64 = rng.random();
    unit_quaternion(rng) * (r * t.powf(0.25))
}

/// A non-real unit quaternion.
pub fn boundary_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    loop {
        let q = unit_quaternion(rng);
        if q.im().norm() > 0.1 {
            return q;
        }
    }
}

/// A self-map of the ball together with a boundary point where `|f| = 1`.
#[derive(Debug, Clone)]
pub struct SelfMap {
    pub f: RegularRational,
    pub xi: Octonion,
}

/// `w^n B(w) u` with `B` a product of Blaschke factors whose zeros lie in
/// `C_I`, `u` a unit octonion and `xi` a boundary point of `C_I`.  On `C_I`
/// the map is a finite Blaschke product times `u`, so `|f(xi)| = 1`.
pub fn contact_self_map<R: Rng + ?Sized>(rng: &mut R) -> SelfMap {
    let i = UnitImaginary::sample(rng);
    let n = rng.random_range(0..3usize);
    let k = rng.random_range(usize::from(n == 0)..3usize);
    let mut f: RegularRational = SliceSeries::monomial(n, Octonion::ONE).into();
    for _ in 0..k {
        let r = 0.6 * rng.random::<f64>().sqrt();
        let t = std::f64::consts::TAU * rng.random::<f64>();
        let a = i.point(r * t.cos(), r * t.sin());
        let factor = construct(&Family::Mobius { u: a, v: Octonion::ONE }).expect("|a| < 1");
        f = f.star(&factor);
    }
    let u = sample(rng, SampleTarget::Sphere);
    let t = std::f64::consts::PI * (0.05 + 0.9 * rng.random::<f64>());
    SelfMap {
        f: f.right_mul(&u),
        xi: i.point(t.cos(), t.sin()),
    }
}

/// A regular product of one to three quaternionic Moebius maps, possibly
/// times `q^n`, with a random boundary point.
pub fn quaternionic_self_map<R: Rng + ?Sized>(rng: &mut R) -> SelfMap {
    let n = rng.random_range(0..2usize);
    let k = rng.random_range(1..4usize);
    let mut f: RegularRational = SliceSeries::monomial(n, Octonion::ONE).into();
    for _ in 0..k {
        let u = quaternion_in_ball(rng, 0.6);
        let v = unit_quaternion(rng);
        f = f.star(&construct(&Family::Mobius { u, v }).expect("|u| < 1"));
    }
    SelfMap {
        f,
        xi: boundary_quaternion(rng),
    }
}
