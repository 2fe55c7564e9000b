//! Simultaneous root finding by Aberth–Ehrlich iteration.
//!
//! Roots at the origin are stripped from the coefficient array before the
//! iteration starts. Polynomials with exact integer coefficients (degree up to
//! [`EXACT_SQUAREFREE_MAX_DEGREE`]) are first split into squarefree factors
//! over `Z[z]`, so repeated roots are reported with their exact multiplicity
//! instead of as an ill-conditioned cluster.
//!
//! Starting points come from the Newton polygon of `log|a_k|`: each edge of the
//! upper convex hull fixes a radius and a number of guesses on that circle.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::resultant::squarefree_decomposition;

pub const MAX_ITERATIONS: usize = 500;

/// Integer polynomials up to this degree go through the exact squarefree split.
pub const EXACT_SQUAREFREE_MAX_DEGREE: usize = 64;

const ANGLE_OFFSET: f64 = 0.7;

/// Leading coefficient and root multiset of a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    leading: Complex64,
    roots: Vec<Complex64>,
    residuals: Vec<f64>,
}

impl RootSet {
    /// A root set with known roots and zero residuals.
    pub fn from_parts(leading: Complex64, roots: Vec<Complex64>) -> Self {
        let residuals = vec![0.0; roots.len()];
        Self {
            leading,
            roots,
            residuals,
        }
    }

    pub fn leading(&self) -> Complex64 {
        self.leading
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    /// Per-root residual `|P(z_j)| / max(1, |z_j|)^n`; for roots outside the
    /// unit disk this is the residual of the reversed polynomial at `1/z_j`.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn moduli(&self) -> impl Iterator<Item = f64> + '_ {
        self.roots.iter().map(|z| z.norm())
    }

    /// `a_n prod (z - z_j)`
    pub fn reconstruct(&self) -> ComplexPoly {
        ComplexPoly::from_roots(self.leading, &self.roots)
    }
}

/// Acceptable residual for a root of `p`: `1e-12 (1 + max|a_k|) * max|a_k|`.
pub fn root_tolerance(p: &ComplexPoly) -> f64 {
    let a = p.max_abs_coeff();
    1e-12 * (1.0 + a) * a
}

/// All roots of `p` with multiplicity.
///
/// A constant polynomial yields an empty root multiset.
pub fn find_roots(p: &ComplexPoly) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let origin = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = ComplexPoly::new(p.coeffs()[origin..].to_vec());

    let mut roots = vec![Complex64::zero(); origin];
    if stripped.degree() > 0 {
        let exact = (stripped.degree() <= EXACT_SQUAREFREE_MAX_DEGREE)
            .then(|| stripped.to_int_poly())
            .flatten();
        match exact {
            Some(int_poly) => {
                for (factor, mult) in squarefree_decomposition(&int_poly) {
                    let found = aberth(&factor.to_complex())?;
                    for z in found {
                        roots.extend(std::iter::repeat_n(z, mult));
                    }
                }
            }
            None => roots.extend(aberth(&stripped)?),
        }
    }

    let tol = root_tolerance(p);
    let n = p.degree();
    let residuals: Vec<f64> = roots.iter().map(|&z| scaled_residual(p, z, n)).collect();
    // written so that a NaN residual also fails
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if let Some(worst) = residuals.iter().copied().find(|r| !(*r <= tol)) {
        return Err(Error::NonConvergence {
            iterations: MAX_ITERATIONS,
            residual: worst,
        });
    }
    Ok(RootSet {
        leading: p.leading(),
        roots,
        residuals,
    })
}

fn scaled_residual(p: &ComplexPoly, z: Complex64, n: usize) -> f64 {
    if z.norm() <= 1.0 {
        p.evaluate(z).norm()
    } else {
        p.reversed_eval(z.inv(), n).norm()
    }
}

impl ComplexPoly {
    /// `z^n p(1/z)` evaluated at `w`, with `n >= degree` the nominal degree.
    fn reversed_eval(&self, w: Complex64, n: usize) -> Complex64 {
        let shift = n - self.degree();
        let body = self.coeffs().iter().fold(Complex64::zero(), |acc, &c| acc * w + c);
        body * w.powu(shift as u32)
    }
}

/// Newton correction `p(z)/p'(z)` and whether `|p(z)|` is already at the
/// rounding level. Uses the reversed polynomial outside the unit disk.
fn newton_step(p: &ComplexPoly, rev: &ComplexPoly, z: Complex64) -> (Complex64, bool) {
    let d = p.degree() as f64;
    let eps = f64::EPSILON;
    let r = z.norm();
    if r <= 1.0 {
        let (v, dv) = p.evaluate_with_derivative(z);
        let small = v.norm() <= 4.0 * d * eps * p.abs_sum_at(r);
        (v / dv, small || v.is_zero())
    } else {
        let w = z.inv();
        let (v, dv) = rev.evaluate_with_derivative(w);
        let small = v.norm() <= 4.0 * d * eps * rev.abs_sum_at(w.norm());
        // p(z) = z^n r(w), p'(z) = z^(n-1) (n r(w) - w r'(w))
        (z / (d - w * dv / v), small || v.is_zero())
    }
}

/// Newton-polygon starting points.
pub(crate) fn initial_guesses(p: &ComplexPoly) -> Vec<Complex64> {
    let n = p.degree();
    let pts: Vec<(usize, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.norm().ln()))
        .collect();
    // upper hull, monotone chain
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (k1, l1) = hull[hull.len() - 2];
            let (k2, l2) = hull[hull.len() - 1];
            let cross = (k2 as f64 - k1 as f64) * (pt.1 - l1) - (l2 - l1) * (pt.0 as f64 - k1 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut guesses = Vec::with_capacity(n);
    for (i, edge) in hull.windows(2).enumerate() {
        let (k0, l0) = edge[0];
        let (k1, l1) = edge[1];
        let m = k1 - k0;
        let radius = ((l0 - l1) / m as f64).exp();
        for j in 0..m {
            let angle = TAU * j as f64 / m as f64 + TAU * i as f64 / n as f64 + ANGLE_OFFSET;
            guesses.push(Complex64::from_polar(radius, angle));
        }
    }
    guesses
}

/// Aberth–Ehrlich iteration on a polynomial with nonzero constant term.
fn aberth(p: &ComplexPoly) -> Result<Vec<Complex64>> {
    let n = p.degree();
    debug_assert!(!p.coeff(0).is_zero());
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![-p.coeff(0) / p.coeff(1)]),
        _ => {}
    }
    let rev = p.reversed();
    let mut z = aberth_iterate(initial_guesses(p), |z| newton_step(p, &rev, z))?;
    // one Newton polish step, kept only when it lowers the residual
    for zi in z.iter_mut() {
        let before = scaled_residual(p, *zi, n);
        let (ratio, _) = newton_step(p, &rev, *zi);
        let candidate = *zi - ratio;
        if candidate.re.is_finite() && candidate.im.is_finite() && scaled_residual(p, candidate, n) < before {
            *zi = candidate;
        }
    }
    Ok(z)
}

/// Gauss–Seidel Aberth–Ehrlich iteration from `initial`, where `step(z)`
/// returns the Newton correction `f(z)/f'(z)` and whether `|f(z)|` is already
/// at the rounding level (which freezes that approximation).
fn aberth_iterate(mut z: Vec<Complex64>, step: impl Fn(Complex64) -> (Complex64, bool)) -> Result<Vec<Complex64>> {
    let n = z.len();
    let mut done = vec![false; n];
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS && done.iter().any(|d| !d) {
        iterations += 1;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (ratio, small) = step(z[i]);
            if small {
                done[i] = true;
                continue;
            }
            let zi = z[i];
            let sum: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| (zi - zj).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                done[i] = true;
                continue;
            }
            z[i] = zi - w;
            if w.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
    }
    if z.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::NonConvergence {
            iterations,
            residual: f64::INFINITY,
        });
    }
    Ok(z)
}

/// Zeros of an analytic function with exactly `initial.len()` zeros, located
/// by Aberth iteration through a caller-supplied evaluator.
///
/// `eval(z)` returns `(f(z), f'(z), e(z))` where `e(z)` bounds the rounding
/// error of the computed `f(z)`. This is for polynomials that have a stable
/// closed-form evaluation but an ill-conditioned monomial expansion, such as
/// `((1+z)^n − 1)/z`, whose coefficients reach `C(n, n/2)`.
pub fn find_zeros_with(
    initial: Vec<Complex64>,
    eval: impl Fn(Complex64) -> (Complex64, Complex64, f64),
) -> Result<Vec<Complex64>> {
    let zeros = aberth_iterate(initial, |z| {
        let (v, dv, err) = eval(z);
        (v / dv, v.norm() <= err || v.is_zero())
    })?;
    let worst = zeros
        .iter()
        .map(|&z| {
            let (v, _, err) = eval(z);
            v.norm() / err.max(f64::MIN_POSITIVE)
        })
        .fold(0.0, f64::max);
    // accept residuals up to a modest multiple of the rounding bound
    if worst > 64.0 {
        return Err(Error::NonConvergence {
            iterations: MAX_ITERATIONS,
            residual: worst,
        });
    }
    Ok(zeros)
}
