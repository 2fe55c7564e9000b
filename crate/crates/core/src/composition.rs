//! Szegő composition and the inequalities it carries.
//!
//! For `Λ(z) = ∑ λ_k C(n,k) z^k` and `P(z) = ∑ a_k z^k`, both regarded as
//! elements of the degree-`n` space, the composition is `ΛP(z) = ∑ λ_k a_k z^k`.
//! The nominal degree `n` is always explicit because `λ_k` depends on it.

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{log_areal_measure, log_mahler_measure};
use crate::poly::ComplexPoly;
use crate::roots::{find_roots, find_zeros_with, initial_guesses, RootSet};

/// Default relative tolerance of an [`InequalityCheck`].
pub const INEQUALITY_TOLERANCE: f64 = 1e-9;

/// Binomial coefficient `C(n, k)` computed exactly, then rounded to `f64`.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc.to_f64().unwrap_or(f64::INFINITY)
}

/// The outcome of checking `lhs ≤ rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`
    pub slack: f64,
    pub holds: bool,
    pub tolerance: f64,
}

impl InequalityCheck {
    /// `holds ⟺ rhs − lhs ≥ −tol · max(1, rhs)` with the default tolerance.
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Self::with_tolerance(lhs, rhs, INEQUALITY_TOLERANCE)
    }

    pub fn with_tolerance(lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let slack = rhs - lhs;
        Self {
            lhs,
            rhs,
            slack,
            holds: slack >= -tolerance * rhs.max(1.0),
            tolerance,
        }
    }

    /// Slack relative to `max(1, rhs)`, the quantity compared against the tolerance.
    pub fn relative_slack(&self) -> f64 {
        self.slack / self.rhs.max(1.0)
    }
}

/// A Szegő multiplier `λ_k = [z^k]Λ / C(n,k)` of nominal degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SzegoMultiplier {
    lambda_poly: ComplexPoly,
    n: usize,
    multipliers: Vec<Complex64>,
}

impl SzegoMultiplier {
    pub fn new(lambda_poly: ComplexPoly, n: usize) -> Result<Self> {
        if lambda_poly.degree() > n {
            return Err(Error::DegreeMismatch {
                degree: lambda_poly.degree(),
                nominal: n,
            });
        }
        let multipliers = (0..=n).map(|k| lambda_poly.coeff(k) / binomial(n, k)).collect();
        Ok(Self {
            lambda_poly,
            n,
            multipliers,
        })
    }

    /// `(1 + z)^n`, whose composition is the identity.
    pub fn identity(n: usize) -> Self {
        let c = (0..=n).map(|k| Complex64::new(binomial(n, k), 0.0)).collect();
        Self::new(ComplexPoly::new(c), n).expect("degree n")
    }

    /// `n z (1 + z)^{n−1}`, whose composition is `z P'(z)`.
    pub fn z_derivative(n: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        if n >= 1 {
            for k in 0..n {
                c[k + 1] = Complex64::new(n as f64 * binomial(n - 1, k), 0.0);
            }
        }
        Self::new(ComplexPoly::new(c), n).expect("degree n")
    }

    /// `C(n,k) z^k`, whose composition picks out `a_k z^k`.
    pub fn coefficient_selector(n: usize, k: usize) -> Result<Self> {
        Self::new(ComplexPoly::monomial(Complex64::new(binomial(n, k), 0.0), k), n)
    }

    pub fn lambda_poly(&self) -> &ComplexPoly {
        &self.lambda_poly
    }

    pub fn nominal_degree(&self) -> usize {
        self.n
    }

    pub fn multipliers(&self) -> &[Complex64] {
        &self.multipliers
    }

    /// `∑ λ_k C(n,k) z^k`; reproduces `lambda_poly` up to rounding.
    pub fn recover_poly(&self) -> ComplexPoly {
        ComplexPoly::new(
            self.multipliers
                .iter()
                .enumerate()
                .map(|(k, l)| l * binomial(self.n, k))
                .collect(),
        )
    }
}

/// `ΛP(z) = ∑ λ_k a_k z^k` in the degree-`n` space.
pub fn szego_compose(lam: &SzegoMultiplier, p: &ComplexPoly, n: usize) -> Result<ComplexPoly> {
    if lam.n != n {
        return Err(Error::DegreeMismatch {
            degree: lam.n,
            nominal: n,
        });
    }
    if p.degree() > n {
        return Err(Error::DegreeMismatch {
            degree: p.degree(),
            nominal: n,
        });
    }
    Ok(ComplexPoly::new(
        (0..=n).map(|k| lam.multipliers[k] * p.coeff(k)).collect(),
    ))
}

fn log_mahler(p: &ComplexPoly) -> Result<f64> {
    if p.is_zero() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(log_mahler_measure(&find_roots(p)?))
}

fn log_areal(p: &ComplexPoly) -> Result<f64> {
    if p.is_zero() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(log_areal_measure(&find_roots(p)?))
}

/// `M(ΛP) ≤ M(Λ) M(P)`.
pub fn check_debruijn_springer(lam: &SzegoMultiplier, p: &ComplexPoly, n: usize) -> Result<InequalityCheck> {
    let composed = szego_compose(lam, p, n)?;
    let lhs = log_mahler(&composed)?.exp();
    let rhs = (log_mahler(&lam.lambda_poly)? + log_mahler(p)?).exp();
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `‖ΛP‖₀ ≤ M(Λ) ‖P‖₀`.
pub fn check_areal_composition(lam: &SzegoMultiplier, p: &ComplexPoly, n: usize) -> Result<InequalityCheck> {
    let composed = szego_compose(lam, p, n)?;
    let lhs = log_areal(&composed)?.exp();
    let rhs = (log_mahler(&lam.lambda_poly)? + log_areal(p)?).exp();
    Ok(InequalityCheck::new(lhs, rhs))
}

/// The two derivative estimates for a polynomial of degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivativeBounds {
    /// `‖z P'‖₀ ≤ n ‖P‖₀`
    pub z_derivative: InequalityCheck,
    /// `‖P'‖₀ ≤ √e · n · ‖P‖₀`
    pub derivative: InequalityCheck,
}

pub fn derivative_bounds(p: &ComplexPoly) -> Result<DerivativeBounds> {
    let n = p.degree();
    if p.is_zero() || n == 0 {
        return Err(Error::InvalidInput("derivative bounds need degree >= 1".into()));
    }
    let dp = p.derivative();
    let log_p = log_areal(p)?;
    let log_dp = log_areal(&dp)?;
    let nn = (n as f64).ln();
    Ok(DerivativeBounds {
        // z P' has one extra root at the origin: a factor e^{-1/2}
        z_derivative: InequalityCheck::new((log_dp - 0.5).exp(), (nn + log_p).exp()),
        derivative: InequalityCheck::new(log_dp.exp(), (0.5 + nn + log_p).exp()),
    })
}

/// Coefficient estimates at index `k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientBound {
    pub k: usize,
    /// `|a_k| ≤ e^{k/2} C(n,k) ‖P‖₀`
    pub areal: InequalityCheck,
    /// `|a_k| ≤ C(n,k) M(P)`
    pub mahler: InequalityCheck,
}

pub fn coefficient_bounds(p: &ComplexPoly) -> Result<Vec<CoefficientBound>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.degree();
    let roots = find_roots(p)?;
    let (log_a, log_m) = (log_areal_measure(&roots), log_mahler_measure(&roots));
    Ok((0..=n)
        .map(|k| {
            let ak = p.coeff(k).norm();
            let lb = binomial(n, k).ln();
            CoefficientBound {
                k,
                areal: InequalityCheck::new(ak, (0.5 * k as f64 + lb + log_a).exp()),
                mahler: InequalityCheck::new(ak, (lb + log_m).exp()),
            }
        })
        .collect())
}

/// `Λ_{n−1}(z) = ((1+z)^n − 1) / (n z)`.
pub fn antiderivative_lambda(n: usize) -> ComplexPoly {
    ComplexPoly::new(
        (0..n)
            .map(|k| Complex64::new(binomial(n, k + 1) / n as f64, 0.0))
            .collect(),
    )
}

/// `M(Λ_{n−1})` from numerically computed roots of `Λ_{n−1}`.
///
/// The monomial expansion of `Λ_{n−1}` is too ill-conditioned for double
/// precision once `n` exceeds about 20 (evaluation error grows like
/// `ε·3^n/n` near `z = −2`), so the Aberth iteration evaluates
/// `((1+z)^n − 1)/(nz)` in that closed form instead. The roots are still found
/// by iteration, independently of the sine-product formula.
pub fn lambda_measure_from_roots(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be >= 1".into()));
    }
    let lambda = antiderivative_lambda(n);
    if n == 1 {
        return Ok(lambda.coeff(0).norm());
    }
    let nf = n as f64;
    let eval = |z: Complex64| {
        let w = z + 1.0;
        let wn1 = w.powu(n as u32 - 1);
        let q = wn1 * w - 1.0;
        let f = q / (z * nf);
        let df = (wn1 * nf * z - q) / (z * z * nf);
        let err = 4.0 * nf * f64::EPSILON * (wn1.norm() * w.norm() + 1.0) / (nf * z.norm());
        (f, df, err)
    };
    let zeros = find_zeros_with(initial_guesses(&lambda), eval)?;
    Ok(log_mahler_measure(&RootSet::from_parts(lambda.leading(), zeros)).exp())
}

/// `M(Λ_{n−1}) = (1/n) ∏_{n/6 < k < 5n/6} 2 sin(kπ/n)`, strict integer bounds.
///
/// The roots of `(1+z)^n − 1` are `ω^k − 1` with `|ω^k − 1| = 2 sin(kπ/n)`,
/// which exceeds 1 exactly when `n/6 < k < 5n/6`. At the endpoints (when
/// `6 | n`) the factor is exactly 1, so the strict reading loses nothing.
pub fn lambda_measure_product(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be >= 1".into()));
    }
    let log: f64 = (1..n)
        .filter(|&k| 6 * k > n && 6 * k < 5 * n)
        .map(|k| (2.0 * (k as f64 * std::f64::consts::PI / n as f64).sin()).ln())
        .sum();
    Ok((log - (n as f64).ln()).exp())
}

/// `M(P − P(0)) ≤ M(Λ_{n−1}) M(P')` with both evaluations of `M(Λ_{n−1})`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AntiderivativeCheck {
    pub check: InequalityCheck,
    pub lambda_from_roots: f64,
    pub lambda_from_product: f64,
    /// `|roots − product| ≤ 1e-8 · product`
    pub evaluations_agree: bool,
}

/// Agreement tolerance between the two evaluations of `M(Λ_{n−1})`.
pub const LAMBDA_AGREEMENT: f64 = 1e-8;

pub fn antiderivative_bound(p: &ComplexPoly) -> Result<AntiderivativeCheck> {
    let n = p.degree();
    if p.is_zero() || n == 0 {
        return Err(Error::InvalidInput("antiderivative bound needs degree >= 1".into()));
    }
    let by_roots = lambda_measure_from_roots(n)?;
    let by_product = lambda_measure_product(n)?;
    let mut shifted = p.coeffs().to_vec();
    shifted[0] = Complex64::new(0.0, 0.0);
    let lhs = log_mahler(&ComplexPoly::new(shifted))?.exp();
    let rhs = by_product * log_mahler(&p.derivative())?.exp();
    Ok(AntiderivativeCheck {
        check: InequalityCheck::new(lhs, rhs),
        lambda_from_roots: by_roots,
        lambda_from_product: by_product,
        evaluations_agree: (by_roots - by_product).abs() <= LAMBDA_AGREEMENT * by_product,
    })
}
