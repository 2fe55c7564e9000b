//! Approximation by integer-coefficient partial sums.
//!
//! In the Bergman spaces `A^p`, `1 < p < ∞`, the partial sums `S_N` of an
//! integer power series converge to it. In the Hardy spaces they cannot
//! converge unless the series is a polynomial: consecutive distinct integer
//! polynomials differ by at least 1 in every `H^p` norm, because
//! `‖P − Q‖_{H^p} ≥ |a_k|` for any coefficient `a_k ≠ 0` of `P − Q`.
//!
//! The series `f` is handled through an exact truncation `f_T` with
//! `T ≥ 4N`. The stream supplies a certified bound on `‖f − f_T‖_p`.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{bergman_p_norm, hardy_p_norm};
use crate::poly::{ComplexPoly, IntPoly};
use crate::quadrature::QuadratureConfig;

/// Tolerance of the Hardy gap lower bound `‖P_n − P_{n−1}‖_{H^p} ≥ 1`.
pub const HARDY_GAP_TOLERANCE: f64 = 1e-6;

/// Default table sizes.
pub const DEFAULT_N_LIST: [usize; 6] = [4, 8, 16, 32, 64, 128];

/// Minimum truncation factor `T / N`.
pub const TRUNCATION_FACTOR: usize = 4;

/// Angular nodes per unit of degree when integrating a polynomial of degree `T`.
const NODES_PER_DEGREE: usize = 4;

/// Exact integer Taylor coefficients of a power series `f`.
#[derive(Clone, Debug, PartialEq)]
pub enum CoefficientStream {
    /// `1/(1 − z) = Σ z^k`; in `A^p` exactly for `p < 2`.
    Ones,
    /// The lacunary series `Σ_{m ≥ 0} z^{m²}`; certified in `A^p` for `p ≤ 2`.
    Gap,
    /// A polynomial: zero tail in every norm.
    Polynomial(IntPoly),
    /// `Σ ratioᵏ zᵏ`; for `|ratio| ≥ 2` this is not analytic in the disk,
    /// so no tail is ever certified. Useful for Hardy gaps of partial sums.
    Geometric(i64),
}

impl CoefficientStream {
    /// Parses `ones`, `gap`, `geometric:<r>` or `file:<path>` (integer
    /// coefficients a0, a1, … separated by commas, whitespace or newlines;
    /// `#` starts a comment).
    pub fn parse(spec: &str) -> Result<Self> {
        match spec {
            "ones" => Ok(Self::Ones),
            "gap" => Ok(Self::Gap),
            _ => {
                if let Some(path) = spec.strip_prefix("file:") {
                    Self::from_file(path)
                } else if let Some(r) = spec.strip_prefix("geometric:") {
                    r.trim()
                        .parse()
                        .map(Self::Geometric)
                        .map_err(|_| Error::Parse(format!("bad ratio '{r}'")))
                } else {
                    Err(Error::Parse(format!(
                        "unknown stream '{spec}' (expected ones, gap, geometric:<r> or file:<path>)"
                    )))
                }
            }
        }
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        // entries may be separated by commas, whitespace or newlines; '#' starts a comment
        let entries: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or_default())
            .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
            .filter(|e| !e.is_empty())
            .collect();
        let p: IntPoly = entries.join(",").parse()?;
        Ok(Self::Polynomial(p))
    }

    /// The `k`-th Taylor coefficient, exactly.
    pub fn coefficient(&self, k: usize) -> BigInt {
        match self {
            Self::Ones => BigInt::one(),
            Self::Gap => {
                let m = k.isqrt();
                if m * m == k {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Self::Polynomial(p) => p.coeff(k),
            Self::Geometric(r) => BigInt::from(*r).pow(k as u32),
        }
    }

    /// The partial sum `S_N` (degree ≤ `n`), an integer polynomial.
    pub fn truncate(&self, n: usize) -> IntPoly {
        IntPoly::new((0..=n).map(|k| self.coefficient(k)).collect())
    }

    /// Certified upper bound on `‖f − f_T‖_{A^p}` with `f_T = S_T`.
    pub fn tail_bound(&self, truncation: usize, exponent: f64) -> Result<f64> {
        let uncertified = Err(Error::TailNotCertified { exponent });
        match self {
            Self::Polynomial(p) => Ok(coefficient_l1_tail(p, truncation)),
            Self::Ones if exponent > 0.0 && exponent < 2.0 => Ok(ones_tail_bound(truncation, exponent)),
            Self::Gap if exponent > 0.0 && exponent <= 2.0 => Ok(gap_tail_bound(truncation)),
            _ => uncertified,
        }
    }

    /// Upper bound on `sup_{|z| ≤ ρ} |f(z) − f_T(z)|` for `ρ < 1`.
    pub fn tail_sup_bound(&self, truncation: usize, radius: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&radius) {
            return Err(Error::DomainError {
                function: "tail_sup_bound",
                value: radius,
            });
        }
        match self {
            Self::Polynomial(p) => Ok(coefficient_l1_tail(p, truncation)),
            // coefficients bounded by 1
            Self::Ones | Self::Gap => Ok(radius.powi(truncation as i32 + 1) / (1.0 - radius)),
            Self::Geometric(r) => {
                let q = radius * (*r as f64).abs();
                if q < 1.0 {
                    Ok(q.powi(truncation as i32 + 1) / (1.0 - q))
                } else {
                    Err(Error::TailNotCertified {
                        exponent: f64::INFINITY,
                    })
                }
            }
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CoefficientStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ones => write!(f, "ones"),
            Self::Gap => write!(f, "gap"),
            Self::Polynomial(p) => write!(f, "poly[{p}]"),
            Self::Geometric(r) => write!(f, "geometric:{r}"),
        }
    }
}

/// `‖z^{T+1}/(1 − z)‖_{A^p}` for `p < 2` by Hölder with exponents `s = γ/p`,
/// `s' = s/(s − 1)`:
///
/// `‖·‖_p^p ≤ (2/(a s' + 2))^{1/s'} · (2^{3−γ}/(2 − γ))^{1/s}`, `a = (T + 1)p`,
///
/// using `(1/π)∫_𝔻 |z|^b dA = 2/(b + 2)` and
/// `(1/π)∫_𝔻 |1 − z|^{−γ} dA ≤ (1/π)∫_{|w|<2} |w|^{−γ} dA = 2^{3−γ}/(2 − γ)`.
/// Minimized over a grid of `γ ∈ (p, 2)`.
fn ones_tail_bound(truncation: usize, p: f64) -> f64 {
    let a = (truncation as f64 + 1.0) * p;
    let log_bound = |gamma: f64| {
        let s = gamma / p;
        let s_conj = s / (s - 1.0);
        (2.0 / (a * s_conj + 2.0)).ln() / s_conj + ((3.0 - gamma) * 2f64.ln() - (2.0 - gamma).ln()) / s
    };
    let steps = 1000;
    let best = (1..steps)
        .map(|i| log_bound(p + (2.0 - p) * i as f64 / steps as f64))
        .fold(f64::INFINITY, f64::min);
    (best / p).exp()
}

/// `Σ_{k>T} |a_k|`, which bounds the tail of a polynomial in every norm on
/// the closed disk; zero once `T ≥ deg p`.
fn coefficient_l1_tail(p: &IntPoly, truncation: usize) -> f64 {
    p.coeffs()
        .iter()
        .skip(truncation + 1)
        .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, |acc, c| acc + c) // an empty f64 `sum` is -0.0
}

/// `‖Σ_{m² > T} z^{m²}‖_{A^p} ≤ ‖·‖_{A²}` for `p ≤ 2` (normalized measure), and
/// `‖Σ c_k z^k‖²_{A²} = Σ |c_k|²/(k + 1) ≤ Σ_{m ≥ m₀} 1/m² ≤ 1/(m₀ − 1)`,
/// `m₀` the least `m` with `m² > T`.
fn gap_tail_bound(truncation: usize) -> f64 {
    let m0 = truncation.isqrt() + 1;
    (1.0 / (m0 as f64 - 1.0).max(0.5)).sqrt()
}

fn check_bergman_exponent(exponent: f64) -> Result<()> {
    if exponent > 1.0 && exponent.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError {
            function: "bergman_distance",
            value: exponent,
        })
    }
}

/// Raises the angular node count to `4(degree + 1)`.
fn config_for_degree(cfg: &QuadratureConfig, degree: usize) -> QuadratureConfig {
    let mut c = *cfg;
    c.angular_nodes = c.angular_nodes.max(NODES_PER_DEGREE * (degree + 1));
    c
}

/// `Σ_{lo < k ≤ hi} c_k z^k` as a complex polynomial.
fn coefficient_block(f: &CoefficientStream, lo: usize, hi: usize) -> ComplexPoly {
    let coeffs = (0..=hi)
        .map(|k| {
            if k > lo {
                Complex64::new(f.coefficient(k).to_f64().unwrap_or(f64::NAN), 0.0)
            } else {
                Complex64::zero()
            }
        })
        .collect();
    ComplexPoly::new(coeffs)
}

/// `‖f_T − S_N‖_{A^p}` together with the certified bound on `‖f − f_T‖_{A^p}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BergmanDistance {
    pub n: usize,
    pub truncation: usize,
    pub value: f64,
    pub tail_bound: f64,
}

/// `‖f_T − S_N‖_{A^p}` by disk quadrature (angular nodes raised to
/// `4(T + 1)` if needed).
pub fn bergman_distance(
    f: &CoefficientStream,
    n: usize,
    truncation: usize,
    exponent: f64,
    cfg: &QuadratureConfig,
) -> Result<BergmanDistance> {
    check_bergman_exponent(exponent)?;
    if truncation < TRUNCATION_FACTOR * n {
        return Err(Error::InvalidInput(format!(
            "truncation {truncation} must be >= {TRUNCATION_FACTOR}·N = {}",
            TRUNCATION_FACTOR * n
        )));
    }
    let tail_bound = f.tail_bound(truncation, exponent)?;
    let diff = coefficient_block(f, n, truncation);
    let value = if diff.is_zero() {
        0.0
    } else {
        bergman_p_norm(&diff, exponent, &config_for_degree(cfg, truncation))?
    };
    Ok(BergmanDistance {
        n,
        truncation,
        value,
        tail_bound,
    })
}

/// `‖P_n − P_{n−1}‖_{H^p}` for each consecutive pair of `seq`.
pub fn hardy_gap(seq: &[IntPoly], exponent: f64, cfg: &QuadratureConfig) -> Result<Vec<f64>> {
    seq.windows(2)
        .map(|w| {
            let d = &w[1] - &w[0];
            if d.is_zero() {
                Ok(0.0)
            } else {
                hardy_p_norm(&d.to_complex(), exponent, &config_for_degree(cfg, d.degree()))
            }
        })
        .collect()
}

/// True when every gap between distinct consecutive polynomials is at least
/// `1 − HARDY_GAP_TOLERANCE`.
pub fn hardy_gaps_hold(seq: &[IntPoly], gaps: &[f64]) -> bool {
    seq.windows(2)
        .zip(gaps)
        .all(|(w, &g)| w[0] == w[1] || g >= 1.0 - HARDY_GAP_TOLERANCE)
}

/// One row of the approximation table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxRow {
    pub n: usize,
    pub truncation: usize,
    /// `‖f_T − S_N‖_{A^p}`.
    pub bergman_distance: f64,
    /// Certified bound on `‖f − f_T‖_{A^p}`.
    pub tail_bound: f64,
    /// `‖f_T − S_N‖_{H^p}`: grows with `T` when `f ∉ H^p`.
    pub hardy_distance: f64,
    /// `‖S_N − S_{N−1}‖_{H^p} = |c_N|`.
    pub hardy_gap: f64,
}

/// Rows `(N, Bergman distance, Hardy distance, Hardy gap)` for each `N`,
/// all against the single truncation `T = 4·max(N)`.
pub fn integer_approx_table(
    f: &CoefficientStream,
    exponent: f64,
    n_list: &[usize],
    cfg: &QuadratureConfig,
) -> Result<Vec<ApproxRow>> {
    check_bergman_exponent(exponent)?;
    let truncation = TRUNCATION_FACTOR * n_list.iter().copied().max().unwrap_or(0);
    n_list
        .par_iter()
        .map(|&n| {
            let b = bergman_distance(f, n, truncation, exponent, cfg)?;
            let diff = coefficient_block(f, n, truncation);
            let hardy_distance = if diff.is_zero() {
                0.0
            } else {
                hardy_p_norm(&diff, exponent, &config_for_degree(cfg, truncation))?
            };
            let gap = if n == 0 {
                f.coefficient(0).abs().to_f64().unwrap_or(f64::INFINITY)
            } else {
                hardy_gap(&[f.truncate(n - 1), f.truncate(n)], exponent, cfg)?[0]
            };
            Ok(ApproxRow {
                n,
                truncation,
                bergman_distance: b.value,
                tail_bound: b.tail_bound,
                hardy_distance,
                hardy_gap: gap,
            })
        })
        .collect()
}

/// Upper bound on `sup_{|z| ≤ radius} |f − S_N|`, from `grid_points` points
/// of a polar grid plus the certified tail of `f − f_T`, `T = 4N + 64`.
pub fn uniform_error(f: &CoefficientStream, n: usize, radius: f64, grid_points: usize) -> Result<f64> {
    let truncation = TRUNCATION_FACTOR * n + 64;
    let tail = f.tail_sup_bound(truncation, radius)?;
    let diff = coefficient_block(f, n, truncation);
    let rings = (grid_points as f64).sqrt().ceil() as usize;
    let per_ring = grid_points.div_ceil(rings);
    let grid_max = (1..=rings)
        .flat_map(|i| {
            let r = radius * i as f64 / rings as f64;
            (0..per_ring).map(move |j| Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / per_ring as f64))
        })
        .map(|z| diff.evaluate(z).norm())
        .fold(0.0, f64::max);
    Ok(grid_max + tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::new(256, 64).unwrap()
    }

    #[test]
    fn streams_have_exact_integer_coefficients() {
        assert_eq!(CoefficientStream::Ones.truncate(3), IntPoly::from_i64s(&[1, 1, 1, 1]));
        assert_eq!(
            CoefficientStream::Gap.truncate(9),
            IntPoly::from_i64s(&[1, 1, 0, 0, 1, 0, 0, 0, 0, 1])
        );
        assert_eq!(CoefficientStream::Geometric(2).coefficient(70), BigInt::from(2).pow(70));
        let s = CoefficientStream::parse("geometric:-3").unwrap();
        assert_eq!(s.coefficient(3), BigInt::from(-27));
        assert!(CoefficientStream::parse("sines").is_err());
    }

    #[test]
    fn file_stream_reads_integer_polynomial() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.txt");
        std::fs::write(&path, "1,-2,0,3\n").unwrap();
        let s = CoefficientStream::parse(&format!("file:{}", path.display())).unwrap();
        assert_eq!(s, CoefficientStream::Polynomial(IntPoly::from_i64s(&[1, -2, 0, 3])));
        assert!(CoefficientStream::parse("file:/nonexistent/x").is_err());
    }

    #[test]
    fn tail_certificates() {
        assert!(matches!(
            CoefficientStream::Ones.tail_bound(64, 2.0),
            Err(Error::TailNotCertified { .. })
        ));
        assert!(matches!(
            CoefficientStream::Geometric(2).tail_bound(64, 1.5),
            Err(Error::TailNotCertified { .. })
        ));
        let b = CoefficientStream::Ones.tail_bound(512, 1.5).unwrap();
        assert!(b.is_finite() && b > 0.0);
        // larger truncation, smaller bound
        assert!(CoefficientStream::Ones.tail_bound(4096, 1.5).unwrap() < b);
        let g = CoefficientStream::Gap.tail_bound(100, 1.5).unwrap();
        assert!((g - (1.0f64 / 10.0).sqrt()).abs() < 1e-15);
        let p = CoefficientStream::Polynomial(IntPoly::from_i64s(&[1, 2, 3]));
        assert_eq!(p.tail_bound(2, 5.0).unwrap(), 0.0);
    }

    #[test]
    fn ones_tail_bound_dominates_quadrature() {
        // ‖z^{T+1}/(1−z)‖_p ≥ ‖Σ_{T<k≤T'} z^k‖_p is not comparable termwise,
        // so check against a long truncation instead.
        let t = 32;
        let bound = ones_tail_bound(t, 1.5);
        let long = coefficient_block(&CoefficientStream::Ones, t, 16 * t);
        let v = bergman_p_norm(&long, 1.5, &config_for_degree(&cfg(), 16 * t)).unwrap();
        assert!(v <= bound, "{v} > {bound}");
    }

    #[test]
    fn bergman_distance_decreases_for_ones() {
        let f = CoefficientStream::Ones;
        let mut prev = f64::INFINITY;
        for n in [8, 16, 32, 64] {
            let d = bergman_distance(&f, n, 256, 1.5, &cfg()).unwrap();
            assert!(d.value < prev, "N = {n}: {} !< {prev}", d.value);
            prev = d.value;
        }
        assert!(matches!(
            bergman_distance(&f, 8, 31, 1.5, &cfg()),
            Err(Error::InvalidInput(_))
        ));
        assert!(bergman_distance(&f, 8, 32, 1.0, &cfg()).is_err());
    }

    #[test]
    fn bergman_distance_of_polynomial_vanishes() {
        let f = CoefficientStream::Polynomial(IntPoly::from_i64s(&[3, 0, -1, 2, 0, 7]));
        for n in 5..8 {
            assert_eq!(bergman_distance(&f, n, 4 * n, 1.5, &cfg()).unwrap().value, 0.0);
        }
        assert!(bergman_distance(&f, 4, 16, 1.5, &cfg()).unwrap().value > 0.0);
    }

    /// `‖f_T − 1‖_{3/2}` for `f = 1/(1 − z)`, `T = 512`, default configuration.
    /// Doubling the angular or radial nodes moves it by less than `10⁻⁵`.
    const N0_REGRESSION: f64 = 1.322_193_909_878_585_5;

    #[test]
    fn bergman_distance_n0_regression() {
        let d = bergman_distance(&CoefficientStream::Ones, 0, 512, 1.5, &QuadratureConfig::default()).unwrap();
        assert!((d.value - N0_REGRESSION).abs() < 1e-12, "{}", d.value);
        let fine = QuadratureConfig::new(8 * 513, 128).unwrap();
        let d = bergman_distance(&CoefficientStream::Ones, 0, 512, 1.5, &fine).unwrap();
        assert!((d.value - N0_REGRESSION).abs() < 1e-5, "{}", d.value);
    }

    #[test]
    fn hardy_gap_examples() {
        let ones: Vec<IntPoly> = (0..20).map(|n| CoefficientStream::Ones.truncate(n)).collect();
        for g in hardy_gap(&ones, 2.0, &cfg()).unwrap() {
            assert!((g - 1.0).abs() < 1e-12);
        }
        let p = IntPoly::from_i64s(&[1, 2]);
        assert_eq!(hardy_gap(&[p.clone(), p], 1.5, &cfg()).unwrap(), vec![0.0]);
        let geo: Vec<IntPoly> = (0..12).map(|n| CoefficientStream::Geometric(2).truncate(n)).collect();
        for (n, g) in hardy_gap(&geo, 2.0, &cfg()).unwrap().into_iter().enumerate() {
            let expect = 2f64.powi(n as i32 + 1);
            assert!((g - expect).abs() < 1e-12 * expect);
        }
        for exponent in [0.5, 1.0, 1.5, 3.0] {
            let gaps = hardy_gap(&ones, exponent, &cfg()).unwrap();
            assert!(hardy_gaps_hold(&ones, &gaps));
        }
    }

    #[test]
    fn table_shows_the_dichotomy() {
        let rows = integer_approx_table(&CoefficientStream::Ones, 1.5, &[4, 8, 16, 32], &cfg()).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].bergman_distance < w[0].bergman_distance);
        }
        for r in &rows {
            assert!((r.hardy_gap - 1.0).abs() < 1e-9);
            assert!(r.hardy_distance > 1.0);
        }
        // strictly decreasing when a square lies in (N_prev, N], equal otherwise
        let gap = integer_approx_table(&CoefficientStream::Gap, 1.5, &[4, 8, 9, 16, 32], &cfg()).unwrap();
        for w in gap.windows(2) {
            let square_between = (w[0].n + 1..=w[1].n).any(|k| k.isqrt().pow(2) == k);
            if square_between {
                assert!(w[1].bergman_distance < w[0].bergman_distance);
            } else {
                assert_eq!(w[1].bergman_distance, w[0].bergman_distance);
            }
        }
        let poly = CoefficientStream::Polynomial(IntPoly::from_i64s(&[1, 1, 1]));
        let rows = integer_approx_table(&poly, 1.5, &[1, 2, 3], &cfg()).unwrap();
        assert!(rows[0].bergman_distance > 0.0 && rows[0].hardy_distance > 0.0);
        assert_eq!((rows[1].bergman_distance, rows[1].hardy_distance), (0.0, 0.0));
    }

    #[test]
    fn uniform_convergence_on_smaller_disk() {
        for f in [CoefficientStream::Ones, CoefficientStream::Gap] {
            let errs: Vec<f64> = [4, 16, 64, 256]
                .iter()
                .map(|&n| uniform_error(&f, n, 0.9, 1000).unwrap())
                .collect();
            assert!(errs.windows(2).all(|w| w[1] < w[0]), "{f}: {errs:?}");
            assert!(errs[3] < 1e-10, "{f}: {errs:?}");
        }
        // closed form check for the ones stream
        let z = Complex64::new(0.5, 0.7);
        let s = CoefficientStream::Ones.truncate(200).to_complex().evaluate(z);
        assert!((s - 1.0 / (1.0 - z)).norm() < 1e-12);
        assert!(uniform_error(&CoefficientStream::Geometric(2), 4, 0.9, 1000).is_err());
        let p = CoefficientStream::Polynomial(IntPoly::from_i64s(&[1, 5, 1]));
        assert_eq!(uniform_error(&p, 2, 0.9, 1000).unwrap(), 0.0);
    }
}
