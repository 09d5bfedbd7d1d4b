//! Real-coefficient polynomials, stored lowest degree first.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub fn trim(mut p: Vec<f64>) -> Vec<f64> {
    while p.len() > 1 && p[p.len() - 1] == 0.0 {
        p.pop();
    }
    if p.is_empty() {
        p.push(0.0);
    }
    p
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0.0) + b.get(k).copied().unwrap_or(0.0))
        .collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0.0) - b.get(k).copied().unwrap_or(0.0))
        .collect()
}

pub fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return vec![0.0];
    }
    let mut c = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub fn derivative(a: &[f64]) -> Vec<f64> {
    if a.len() <= 1 {
        return vec![0.0];
    }
    a.iter().enumerate().skip(1).map(|(k, x)| k as f64 * x).collect()
}

pub fn eval_real(a: &[f64], x: f64) -> f64 {
    a.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

pub fn eval_complex(a: &[f64], z: Complex64) -> Complex64 {
    a.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// First `n + 1` Taylor coefficients of `1 / a`.
pub fn inverse_series(a: &[f64], n: usize) -> Result<Vec<f64>> {
    let a0 = a.first().copied().unwrap_or(0.0);
    if a0.abs() <= crate::tolerance::REAL_POINT {
        return Err(Error::ZeroConstantTerm);
    }
    let mut b = vec![0.0; n + 1];
    b[0] = 1.0 / a0;
    for k in 1..=n {
        let s: f64 = (1..=k.min(a.len() - 1)).map(|j| a[j] * b[k - j]).sum();
        b[k] = -s / a0;
    }
    Ok(b)
}

/// `sum |a_k| r^k`, an upper bound for `|a(w)|` on `|w| = r`.
pub fn abs_sum(a: &[f64], r: f64) -> f64 {
    a.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
}
