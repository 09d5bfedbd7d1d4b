use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::identities::log_quotient_eval;
use crate::algebra::{Octonion, UnitImaginary};
use crate::error::{Error, Result};
use crate::series::{Regular, RegularRational};
use crate::tolerance::ALG_TOL;

/// Signed margins of the six growth and distortion inequalities at `w`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub modulus: f64,
    pub derivative: f64,
    pub log_quotient: f64,
    /// Lower and upper margins, in the order `|f|`, `|f'|`, `|w f' * f^{-*}|`.
    pub margins: [f64; 6],
}

impl GrowthReport {
    pub fn min_margin(&self) -> f64 {
        self.margins.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn growth_distortion_check(f: &RegularRational, w: &Octonion) -> Result<GrowthReport> {
    let r = w.norm();
    if r >= 1.0 {
        return Err(Error::BadParameter(format!("|w| = {r} is not < 1")));
    }
    let f0 = f.eval(&Octonion::ZERO)?;
    let d0 = f.derivative_at(&Octonion::ZERO)?;
    if f0.norm() > ALG_TOL || d0.max_abs_diff(&Octonion::ONE) > ALG_TOL {
        return Err(Error::HypothesisViolated("f(0) = 0 and f'(0) = 1 required".into()));
    }
    let modulus = f.eval(w)?.norm();
    let derivative = f.derivative_at(w)?.norm();
    // The quotient extends to the origin with value f'(0) f'(0)^-1 = 1.
    let log_quotient = if r <= ALG_TOL {
        1.0
    } else {
        log_quotient_eval(f, w)?.norm()
    };
    let (p, m) = (1.0 + r, 1.0 - r);
    Ok(GrowthReport {
        modulus,
        derivative,
        log_quotient,
        margins: [
            modulus - r / (p * p),
            r / (m * m) - modulus,
            derivative - m / (p * p * p),
            p / (m * m * m) - derivative,
            log_quotient - m / p,
            p / m - log_quotient,
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub radius: f64,
    pub min_modulus: f64,
    pub nodes: usize,
    /// Nodes skipped because they sit on a pole of the denominator.
    pub poles: usize,
}

/// Minimum of `|f|` on the circle `|z| = radius` of `C_I`, midpoint nodes.
pub fn quarter_covering(f: &RegularRational, i: &UnitImaginary, radius: f64, nodes: usize) -> CoveringReport {
    let mut min_modulus = f64::INFINITY;
    let mut poles = 0;
    for k in 0..nodes {
        let t = 2.0 * PI * (k as f64 + 0.5) / nodes as f64;
        match f.eval(&i.point(radius * t.cos(), radius * t.sin())) {
            Ok(v) => min_modulus = min_modulus.min(v.norm()),
            Err(_) => poles += 1,
        }
    }
    CoveringReport { radius, min_modulus, nodes, poles }
}

/// Polar grid for [`extremum_scan`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub radius: f64,
    pub shells: usize,
    pub angles: usize,
    pub slices: Vec<UnitImaginary>,
}

impl GridSpec {
    pub fn standard(radius: f64) -> Self {
        GridSpec {
            radius,
            shells: 40,
            angles: 96,
            slices: (1..8).map(UnitImaginary::basis).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridMinimum {
    pub point: Octonion,
    pub value: f64,
    /// `10 * step * max |f'|`.
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremumReport {
    pub constant: bool,
    /// Every slice has nondecreasing shell maxima.
    pub shell_max_monotone: bool,
    /// Interior minima within one grid step of the real axis.
    pub real_axis_minima: Vec<GridMinimum>,
    /// Interior minima elsewhere, not certified.
    pub off_axis_minima: usize,
    pub pass: bool,
}

/// Scans `|f|` on polar grids of several slices.
pub fn extremum_scan(f: &RegularRational, grid: &GridSpec) -> Result<ExtremumReport> {
    if grid.shells < 3 || grid.angles < 8 || !(grid.radius > 0.0 && grid.radius < 1.0) {
        return Err(Error::BadParameter("grid too coarse or radius outside (0, 1)".into()));
    }
    let step = grid.radius / grid.shells as f64;
    let df = f.derivative();
    let mut global = (f64::INFINITY, 0.0f64);
    let mut max_deriv: f64 = 0.0;
    let mut monotone = true;
    let mut candidates = Vec::new();
    let mut off_axis = 0;

    for i in &grid.slices {
        let point = |s: usize, a: usize| {
            let r = step * s as f64;
            let t = 2.0 * PI * a as f64 / grid.angles as f64;
            i.point(r * t.cos(), r * t.sin())
        };
        let mut values = vec![vec![0.0; grid.angles]; grid.shells + 1];
        for s in 0..=grid.shells {
            for a in 0..grid.angles {
                let w = point(s, a);
                let v = f.eval(&w)?.norm();
                values[s][a] = v;
                global = (global.0.min(v), global.1.max(v));
                max_deriv = max_deriv.max(df.eval(&w)?.norm());
            }
        }
        let shell_max: Vec<f64> = values.iter().map(|row| row.iter().copied().fold(0.0, f64::max)).collect();
        if shell_max.windows(2).any(|p| p[1] < p[0] * (1.0 - 1e-12) - 1e-15) {
            monotone = false;
        }
        for s in 1..grid.shells {
            for a in 0..grid.angles {
                let v = values[s][a];
                let prev = (a + grid.angles - 1) % grid.angles;
                let next = (a + 1) % grid.angles;
                let neighbours = [
                    values[s - 1][prev], values[s - 1][a], values[s - 1][next],
                    values[s][prev], values[s][next],
                    values[s + 1][prev], values[s + 1][a], values[s + 1][next],
                ];
                if neighbours.iter().all(|n| v < *n) {
                    let w = point(s, a);
                    if w.im().norm() <= step {
                        candidates.push((w, v));
                    } else {
                        off_axis += 1;
                    }
                }
            }
        }
    }
    let constant = global.1 - global.0 <= ALG_TOL * (1.0 + global.1);
    let bound = 10.0 * step * max_deriv;
    let real_axis_minima: Vec<GridMinimum> = if constant {
        Vec::new()
    } else {
        candidates
            .into_iter()
            .map(|(point, value)| GridMinimum { point, value, bound })
            .collect()
    };
    let pass = constant || (monotone && real_axis_minima.iter().all(|m| m.value <= m.bound));
    Ok(ExtremumReport {
        constant,
        shell_max_monotone: monotone,
        real_axis_minima,
        off_axis_minima: off_axis,
        pass,
    })
}
