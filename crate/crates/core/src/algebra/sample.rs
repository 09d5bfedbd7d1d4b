use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{Octonion, UnitImaginary};

/// Region sampled by [`sample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleTarget {
    /// Uniform on the open unit ball of `R^8`.
    Ball,
    /// Uniform on the unit sphere `|w| = 1`.
    Sphere,
    /// Uniform on the 6-sphere of unit imaginary octonions.
    UnitImaginary,
    /// Isotropic standard Gaussian components.
    Algebra,
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

fn direction<R: Rng + ?Sized>(rng: &mut R, skip_real: bool) -> Octonion {
    loop {
        let mut c = [0.0; 8];
        for (k, x) in c.iter_mut().enumerate() {
            *x = if skip_real && k == 0 { 0.0 } else { gaussian(rng) };
        }
        let w = Octonion(c);
        let n = w.norm();
        if n > 1e-6 {
            return w / n;
        }
    }
}

/// Draws an octonion from `target`; deterministic for a given RNG state.
pub fn sample<R: Rng + ?Sized>(rng: &mut R, target: SampleTarget) -> Octonion {
    match target {
        SampleTarget::Ball => {
            let d = direction(rng, false);
            let u: f64 = rng.random();
            d * u.powf(1.0 / 8.0)
        }
        SampleTarget::Sphere => direction(rng, false),
        SampleTarget::UnitImaginary => direction(rng, true),
        SampleTarget::Algebra => {
            let mut c = [0.0; 8];
            for x in &mut c {
                *x = gaussian(rng);
            }
            Octonion(c)
        }
    }
}

impl UnitImaginary {
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        UnitImaginary::normalize(direction(rng, true)).expect("direction has unit imaginary part")
    }
}
