//! Mahler's measure and the areal measure, from roots and by quadrature.
//!
//! For `P(z) = a_n ∏ (z − z_j)`:
//!
//! * `M(P)   = |a_n| ∏_{|z_j|>1} |z_j|` (Jensen's formula), and
//! * `‖P‖₀   = M(P) · exp(½ ∑_{|z_j|<1} (|z_j|² − 1))`.
//!
//! Both are accumulated in log scale so that degree-10³ families neither
//! overflow nor underflow. The oracles integrate `log|P|` directly and never
//! look at the roots.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::quadrature::{disk_radial_rule, unit_points, with_rotation, QuadratureConfig};
use crate::roots::{find_roots, RootSet};

/// Relative tolerance used for the bound checks in [`MeasureReport`].
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// `log M(P)` from a root set.
pub fn log_mahler_measure(r: &RootSet) -> f64 {
    r.leading().norm().ln() + r.moduli().filter(|&m| m > 1.0).map(f64::ln).sum::<f64>()
}

/// `log ‖P‖₀` from a root set.
pub fn log_areal_measure(r: &RootSet) -> f64 {
    log_mahler_measure(r) + 0.5 * r.moduli().filter(|&m| m < 1.0).map(|m| m * m - 1.0).sum::<f64>()
}

/// Mahler's measure `|a_n| ∏_{|z_j|>1} |z_j|`.
pub fn mahler_measure(r: &RootSet) -> f64 {
    log_mahler_measure(r).exp()
}

/// Areal measure `M(P) exp(½ ∑_{|z_j|<1} (|z_j|² − 1))`.
pub fn areal_measure(r: &RootSet) -> f64 {
    log_areal_measure(r).exp()
}

fn nonzero(p: &ComplexPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// Mean of `log|P|` over `n` offset points of the circle of radius `radius`;
/// `None` if a node hits an exact zero.
fn circle_log_mean(p: &ComplexPoly, radius: f64, nodes: &[Complex64]) -> Option<f64> {
    let mut sum = 0.0;
    for &u in nodes {
        let v = p.evaluate(u * radius).norm();
        if v == 0.0 {
            return None;
        }
        sum += v.ln();
    }
    Some(sum / nodes.len() as f64)
}

/// `log` of [`mahler_oracle`].
pub fn log_mahler_oracle(p: &ComplexPoly, cfg: &QuadratureConfig) -> Result<f64> {
    nonzero(p)?;
    with_rotation(|offset| circle_log_mean(p, 1.0, &unit_points(cfg.angular_nodes, offset)))
}

/// Root-free Mahler measure: exp of the trapezoid mean of `log|P|` on `|z| = 1`.
pub fn mahler_oracle(p: &ComplexPoly, cfg: &QuadratureConfig) -> Result<f64> {
    log_mahler_oracle(p, cfg).map(f64::exp)
}

/// `log` of [`areal_oracle`].
pub fn log_areal_oracle(p: &ComplexPoly, cfg: &QuadratureConfig) -> Result<f64> {
    nonzero(p)?;
    let rule = disk_radial_rule(cfg.radial_nodes);
    with_rotation(|offset| {
        let pts = unit_points(cfg.angular_nodes, offset);
        let mut total = 0.0;
        for &(r, w) in &rule {
            total += w * circle_log_mean(p, r, &pts)?;
        }
        Some(total)
    })
}

/// Root-free areal measure: Gauss–Legendre in `r` (weight `2r`) times the
/// trapezoid mean in `θ` of `log|P(re^{iθ})|`.
pub fn areal_oracle(p: &ComplexPoly, cfg: &QuadratureConfig) -> Result<f64> {
    log_areal_oracle(p, cfg).map(f64::exp)
}

fn check_exponent(function: &'static str, exponent: f64) -> Result<()> {
    if exponent > 0.0 && exponent.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError {
            function,
            value: exponent,
        })
    }
}

/// `(∑ w_i v_i^s)^{1/s}` computed with the largest value factored out.
fn weighted_power_mean(values: &[(f64, f64)], s: f64) -> f64 {
    let top = values.iter().map(|&(_, v)| v).fold(0.0, f64::max);
    if top == 0.0 {
        return 0.0;
    }
    let sum: f64 = values.iter().map(|&(w, v)| w * (v / top).powf(s)).sum();
    top * sum.powf(1.0 / s)
}

/// Bergman norm `((1/π) ∬_𝔻 |P|^s dA)^{1/s}` by the disk tensor rule.
pub fn bergman_p_norm(p: &ComplexPoly, exponent: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_exponent("bergman_p_norm", exponent)?;
    let pts = unit_points(cfg.angular_nodes, crate::quadrature::GRID_OFFSET);
    let n = pts.len() as f64;
    let mut values = Vec::with_capacity(cfg.radial_nodes * pts.len());
    for (r, w) in disk_radial_rule(cfg.radial_nodes) {
        values.extend(pts.iter().map(|&u| (w / n, p.evaluate(u * r).norm())));
    }
    Ok(weighted_power_mean(&values, exponent))
}

/// Hardy norm `((1/2π) ∫ |P(e^{iθ})|^s dθ)^{1/s}` by the trapezoid rule.
pub fn hardy_p_norm(p: &ComplexPoly, exponent: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_exponent("hardy_p_norm", exponent)?;
    let pts = unit_points(cfg.angular_nodes, crate::quadrature::GRID_OFFSET);
    let w = 1.0 / pts.len() as f64;
    let values: Vec<(f64, f64)> = pts.iter().map(|&u| (w, p.evaluate(u).norm())).collect();
    Ok(weighted_power_mean(&values, exponent))
}

/// The penalty `g(x) = e^{(x²−1)/2} / x`, minimal (= 1) exactly at `x = 1`.
///
/// A root of modulus `x < 1` of an integer polynomial multiplies the areal
/// measure's lower bound by `g(x) > 1`.
pub fn modulus_penalty(x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok((0.5 * (x * x - 1.0)).exp() / x)
    } else {
        Err(Error::DomainError {
            function: "modulus_penalty",
            value: x,
        })
    }
}

/// Which of the bounds `‖P‖₀ ≤ M(P)`, `‖P‖₀ ≥ |a₀|`, `‖P‖₀ ≥ e^{−n/2} M(P)` hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsOk {
    pub upper_ok: bool,
    pub a0_ok: bool,
    pub lower_ok: bool,
}

impl BoundsOk {
    pub fn all(&self) -> bool {
        self.upper_ok && self.a0_ok && self.lower_ok
    }
}

/// Both measures of one polynomial plus the sandwich checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub degree: usize,
    pub mahler: f64,
    pub areal: f64,
    pub ratio: f64,
    pub bounds: BoundsOk,
    /// True when no root lies in the open unit disk, so that `‖P‖₀ = M(P)`
    /// equals `|a₀|` exactly.
    pub no_interior_roots: bool,
}

/// Closed-form measures and bound checks for `p`.
pub fn measure_report(p: &ComplexPoly) -> Result<MeasureReport> {
    nonzero(p)?;
    let roots = find_roots(p)?;
    Ok(measure_report_from_roots(p, &roots))
}

/// As [`measure_report`], with roots already computed.
pub fn measure_report_from_roots(p: &ComplexPoly, roots: &RootSet) -> MeasureReport {
    let n = p.degree();
    let log_m = log_mahler_measure(roots);
    let log_a = log_areal_measure(roots);
    let log_a0 = p.coeff(0).norm().ln();
    // compare in log scale: log(1 + tol) ≈ tol
    let tol = BOUND_TOLERANCE;
    MeasureReport {
        degree: n,
        mahler: log_m.exp(),
        areal: log_a.exp(),
        ratio: (log_a - log_m).exp(),
        bounds: BoundsOk {
            upper_ok: log_a <= log_m + tol,
            a0_ok: log_a >= log_a0 - tol,
            lower_ok: log_a >= log_m - 0.5 * n as f64 - tol,
        },
        no_interior_roots: roots.moduli().all(|m| m >= 1.0),
    }
}
