//! Quadrature rules on the circle and the disk.
//!
//! Angular means use the trapezoid rule, which is spectrally accurate for
//! smooth periodic integrands. The nodes are offset by a quarter step so the
//! grid never contains the points `±1, ±i` (and hence no root of unity of
//! order 1, 2 or 4). Radial integrals over `[0, 1]` use Gauss–Legendre nodes.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_ANGULAR_NODES: usize = 64;
pub const MIN_RADIAL_NODES: usize = 16;

/// Fraction of a step by which the angular grid is shifted off `θ = 0`.
pub const GRID_OFFSET: f64 = 0.25;

/// How a measure is evaluated: from roots (closed form) or by quadrature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExactForm,
    Oracle,
}

/// Node counts for tensor (radial × angular) quadrature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub angular_nodes: usize,
    pub radial_nodes: usize,
    pub mode: Mode,
}

impl QuadratureConfig {
    pub fn new(angular_nodes: usize, radial_nodes: usize) -> Result<Self> {
        Self::with_mode(angular_nodes, radial_nodes, Mode::Oracle)
    }

    pub fn with_mode(angular_nodes: usize, radial_nodes: usize, mode: Mode) -> Result<Self> {
        if angular_nodes < MIN_ANGULAR_NODES {
            return Err(Error::InvalidInput(format!(
                "angular_nodes must be >= {MIN_ANGULAR_NODES}, got {angular_nodes}"
            )));
        }
        if radial_nodes < MIN_RADIAL_NODES {
            return Err(Error::InvalidInput(format!(
                "radial_nodes must be >= {MIN_RADIAL_NODES}, got {radial_nodes}"
            )));
        }
        Ok(Self {
            angular_nodes,
            radial_nodes,
            mode,
        })
    }
}

impl Default for QuadratureConfig {
    /// The reference configuration `(512, 64)` in oracle mode.
    fn default() -> Self {
        Self {
            angular_nodes: 512,
            radial_nodes: 64,
            mode: Mode::Oracle,
        }
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// three-term Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi's initial approximation to the i-th largest root
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre rule mapped to `[0, 1]`; weights sum to 1.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    (
        x.iter().map(|t| 0.5 * (t + 1.0)).collect(),
        w.iter().map(|t| 0.5 * t).collect(),
    )
}

/// Angular nodes `2π (j + offset) / n`.
pub fn angles(n: usize, offset: f64) -> Vec<f64> {
    (0..n).map(|j| TAU * (j as f64 + offset) / n as f64).collect()
}

/// Unit-modulus points `e^{iθ_j}` on the offset grid.
pub fn unit_points(n: usize, offset: f64) -> Vec<Complex64> {
    angles(n, offset)
        .into_iter()
        .map(|t| Complex64::from_polar(1.0, t))
        .collect()
}

/// Radial nodes and weights for area means over the unit disk: GL nodes `r_i`
/// with weights `2 r_i w_i`, so that `∑ weight_i f(r_i) ≈ (1/π)∬ f dA` for
/// radial `f`.
pub fn disk_radial_rule(n: usize) -> Vec<(f64, f64)> {
    let (r, w) = gauss_legendre_unit(n);
    r.into_iter().zip(w).map(|(r, w)| (r, 2.0 * r * w)).collect()
}

/// Runs `attempt(offset)` on the standard grid and, if it reports a node that
/// hit an exact zero (`None`), once more on the grid rotated by half a step.
pub fn with_rotation<T>(mut attempt: impl FnMut(f64) -> Option<T>) -> Result<T> {
    attempt(GRID_OFFSET)
        .or_else(|| attempt(GRID_OFFSET + 0.5))
        .ok_or(Error::SingularNode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        for n in [1usize, 2, 5, 16, 64] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for deg in 0..(2 * n).min(40) {
                let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((q - exact).abs() < 1e-13, "n={n} deg={deg} q={q}");
            }
        }
    }

    #[test]
    fn gauss_legendre_nodes_are_sorted_and_interior() {
        let (x, _) = gauss_legendre(64);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        assert!(x[0] > -1.0 && x[63] < 1.0);
    }

    #[test]
    fn disk_rule_integrates_radial_monomials() {
        // (1/π)∬ |z|^{2k} dA = 1/(k+1)
        let rule = disk_radial_rule(16);
        for k in 0..10 {
            let q: f64 = rule.iter().map(|(r, w)| w * r.powi(2 * k)).sum();
            assert!((q - 1.0 / (k as f64 + 1.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn offset_grid_avoids_real_and_imaginary_axes() {
        for z in unit_points(512, GRID_OFFSET) {
            assert!(z.re.abs() > 1e-3 && z.im.abs() > 1e-3);
        }
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(63, 64).is_err());
        assert!(QuadratureConfig::new(64, 15).is_err());
        let c = QuadratureConfig::new(64, 16).unwrap();
        assert_eq!(c.mode, Mode::Oracle);
        assert_eq!(QuadratureConfig::default().angular_nodes, 512);
    }

    #[test]
    fn rotation_retries_once() {
        let mut calls = 0;
        let r: Result<f64> = with_rotation(|off| {
            calls += 1;
            (off > 0.5).then_some(off)
        });
        assert_eq!(r.unwrap(), 0.75);
        assert_eq!(calls, 2);
        assert_eq!(with_rotation(|_| None::<f64>), Err(Error::SingularNode));
    }
}
