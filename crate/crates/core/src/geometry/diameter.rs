use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{imaginary_unit_of, Octonion, UnitImaginary};
use crate::error::{Error, Result};
use crate::series::{slice_coordinates, SliceSeries};
use crate::tolerance::SAMPLE_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterKind {
    Regular,
    Slice,
    Euclidean,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiameterEstimate {
    pub kind: DiameterKind,
    pub r: f64,
    pub value: f64,
    /// Number of distances compared.
    pub n_samples: usize,
}

/// Deterministic sample directions on the unit sphere of `R^8`.
#[derive(Debug, Clone)]
pub struct DirectionSet {
    /// Multipliers `u, v` for the regular diameter.
    pub units: Vec<Octonion>,
    /// Boundary directions for `w`.
    pub points: Vec<Octonion>,
    /// Nodes per slice circle.
    pub circle: usize,
}

fn max_pairwise(points: &[Octonion]) -> (f64, usize) {
    let n = points.len();
    let best = (0..n)
        .into_par_iter()
        .map(|a| {
            let pa = points[a];
            points[a + 1..]
                .iter()
                .map(|pb| (pa - *pb).norm_sqr())
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    (best.sqrt(), n * n.saturating_sub(1) / 2)
}

/// Frac parts of multiples of square roots of primes, mapped to Gaussian
/// vectors pairwise with Box-Muller and normalized.
pub fn low_discrepancy_sphere(n: usize) -> Vec<Octonion> {
    const PRIMES: [f64; 8] = [2.0, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0];
    let alpha = PRIMES.map(f64::sqrt);
    (1..=n)
        .map(|k| {
            let u = alpha.map(|a| (k as f64 * a).fract());
            let mut c = [0.0; 8];
            for p in 0..4 {
                let r = (-2.0 * u[2 * p].max(1e-300).ln()).sqrt();
                let t = 2.0 * PI * u[2 * p + 1];
                c[2 * p] = r * t.cos();
                c[2 * p + 1] = r * t.sin();
            }
            let w = Octonion::new(c);
            w / w.norm()
        })
        .collect()
}

fn signed_basis() -> Vec<Octonion> {
    (0..8).flat_map(|k| [Octonion::basis(k), -Octonion::basis(k)]).collect()
}

impl DirectionSet {
    /// 512 low-discrepancy directions plus the 16 signed basis vectors as
    /// multipliers; the basis vectors and the first 64 low-discrepancy
    /// directions as boundary points; 64 nodes per slice circle.
    pub fn standard() -> Self {
        let ld = low_discrepancy_sphere(512);
        let mut units = signed_basis();
        units.extend_from_slice(&ld);
        let mut points = signed_basis();
        points.extend_from_slice(&ld[..64]);
        DirectionSet { units, points, circle: 64 }
    }

    /// Unit imaginaries spanned by the sample points.
    fn slices(&self) -> Vec<UnitImaginary> {
        let mut out: Vec<UnitImaginary> = (1..8).map(UnitImaginary::basis).collect();
        for p in &self.points {
            if let Ok(i) = UnitImaginary::normalize(*p) {
                if !out.iter().any(|q| q.value().max_abs_diff(&i.value()) < 1e-9) {
                    out.push(i);
                }
            }
        }
        out
    }

    fn circle_nodes(&self, i: &UnitImaginary, r: f64) -> Vec<Octonion> {
        (0..self.circle)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / self.circle as f64;
                i.point(r * t.cos(), r * t.sin())
            })
            .collect()
    }

    /// Boundary points of `rB`: the scaled directions and, for each, the
    /// circle of radius `r` in its slice.
    fn boundary(&self, r: f64) -> Vec<Octonion> {
        let mut out: Vec<Octonion> = self.points.iter().map(|p| *p * r).collect();
        for p in &self.points {
            out.extend(self.circle_nodes(&imaginary_unit_of(p), r));
        }
        out
    }
}

fn regular_diameter(f: &SliceSeries, r: f64, dirs: &DirectionSet) -> Result<(f64, usize)> {
    let composed: Vec<SliceSeries> = dirs
        .units
        .iter()
        .map(|u| f.compose_with_unit(u))
        .collect::<Result<_>>()?;
    let results: Vec<(f64, usize)> = dirs
        .points
        .par_iter()
        .map(|p| {
            let w = *p * r;
            let (i, z) = slice_coordinates(&w);
            // Units of C_{I_w}: there f_u(w) = f(uw), so the slice circle
            // through w is covered as well.
            let mut values: Vec<Octonion> = composed.iter().map(|g| g.eval_in_slice(&i, z)).collect();
            for u in dirs.circle_nodes(&i, 1.0) {
                values.push(f.eval(&(u * w)));
            }
            max_pairwise(&values)
        })
        .collect();
    Ok(results
        .into_iter()
        .fold((0.0, 0), |(m, n), (v, k)| (m.max(v), n + k)))
}

fn slice_diameter(f: &SliceSeries, r: f64, dirs: &DirectionSet) -> (f64, usize) {
    let circle = dirs.circle * 2;
    dirs.slices()
        .par_iter()
        .map(|i| {
            let nodes: Vec<Octonion> = (0..circle)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / circle as f64;
                    f.eval(&i.point(r * t.cos(), r * t.sin()))
                })
                .collect();
            max_pairwise(&nodes)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((0.0, 0), |(m, n), (v, k)| (m.max(v), n + k))
}

/// Sampled diameter of `f(rB)` of the requested kind; `r = 1` is allowed for
/// polynomials. All kinds sample the boundary only, which the maximum
/// principle justifies.
pub fn diameters(f: &SliceSeries, r: f64, kind: DiameterKind, dirs: &DirectionSet) -> Result<DiameterEstimate> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::BadParameter(format!("r = {r} outside (0, 1]")));
    }
    let (value, n_samples) = match kind {
        DiameterKind::Regular => regular_diameter(f, r, dirs)?,
        DiameterKind::Slice => slice_diameter(f, r, dirs),
        DiameterKind::Euclidean => {
            let images: Vec<Octonion> = dirs.boundary(r).iter().map(|w| f.eval(w)).collect();
            max_pairwise(&images)
        }
    };
    Ok(DiameterEstimate { kind, r, value, n_samples })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LandauToeplitzReport {
    /// Factor applied so that the sampled `d(f(B))` equals 2.
    pub scale: f64,
    pub estimates: Vec<DiameterEstimate>,
    /// `min_r (2r + SAMPLE_TOL - d(f(rB)))`.
    pub bound_margin: f64,
    /// Smallest increment of `d(f(rB)) / 2r` between consecutive radii.
    pub monotonicity_margin: f64,
    pub derivative_at_zero: f64,
    pub pass: bool,
}

/// Checks `d(f(rB)) <= 2r`, monotonicity of `d(f(rB))/2r` and `|f'(0)| <= 1`
/// after rescaling `f` to unit-normalized diameter. `kind` selects the
/// regular or the slice diameter.
pub fn landau_toeplitz_check(
    f: &SliceSeries,
    r_grid: &[f64],
    kind: DiameterKind,
    dirs: &DirectionSet,
) -> Result<LandauToeplitzReport> {
    let full = diameters(f, 1.0, kind, dirs)?.value;
    if full <= 0.0 {
        return Err(Error::HypothesisViolated("constant function".into()));
    }
    let scale = 2.0 / full;
    let g = f.scale(scale);
    let estimates: Vec<DiameterEstimate> = r_grid
        .iter()
        .map(|&r| diameters(&g, r, kind, dirs))
        .collect::<Result<_>>()?;
    let bound_margin = estimates
        .iter()
        .map(|e| 2.0 * e.r + SAMPLE_TOL - e.value)
        .fold(f64::INFINITY, f64::min);
    let ratios: Vec<f64> = estimates.iter().map(|e| e.value / (2.0 * e.r)).collect();
    let monotonicity_margin = ratios
        .windows(2)
        .map(|p| p[1] - p[0])
        .fold(f64::INFINITY, f64::min);
    let derivative_at_zero = g.coeff(1).norm();
    let pass = bound_margin >= 0.0
        && monotonicity_margin >= -1e-3
        && derivative_at_zero <= 1.0 + 1e-9;
    Ok(LandauToeplitzReport {
        scale,
        estimates,
        bound_margin,
        monotonicity_margin,
        derivative_at_zero,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CauchyEstimate {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub n_samples: usize,
}

/// `|a_n|` against half the sampled Euclidean diameter of `f(B)`.
pub fn cauchy_estimate_check(f: &SliceSeries, n: usize, dirs: &DirectionSet) -> Result<CauchyEstimate> {
    let d = diameters(f, 1.0, DiameterKind::Euclidean, dirs)?;
    let lhs = f.coeff(n).norm();
    let rhs = d.value / 2.0;
    Ok(CauchyEstimate {
        lhs,
        rhs,
        margin: rhs - lhs,
        n_samples: d.n_samples,
    })
}
