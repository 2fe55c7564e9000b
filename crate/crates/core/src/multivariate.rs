//! Multivariate Mahler and areal measures.
//!
//! * [`mv_mahler`]: tensor trapezoid rule on the torus `𝕋^d`, `d ≤ 3`.
//! * [`mv_areal_quadrature`]: tensor (Gauss–Legendre × trapezoid) rule on the
//!   polydisk, `d ≤ 2`.
//! * [`mv_mahler_fiber`], [`mv_areal_fiber`]: for `d = 2`, the exact
//!   one-variable closed form in `z₁` for every quadrature node in `z₂`.
//! * [`mv_areal_mc`]: Monte Carlo over the polydisk for any `d`, with
//!   reproducible ChaCha streams.
//!
//! Each variable's angular grid gets its own offset so that products of
//! grids do not line up with zero sets such as `z₁ = −z₂`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composition::InequalityCheck;
use crate::error::{Error, Result};
use crate::measures::{log_areal_measure, log_mahler_measure};
use crate::poly::{format_complex, parse_complex, ComplexPoly};
use crate::quadrature::{disk_radial_rule, unit_points, QuadratureConfig, GRID_OFFSET};
use crate::roots::find_roots;

/// Largest `d` for the torus tensor rule.
pub const MAX_TORUS_DIMENSION: usize = 3;

/// Largest `d` for the polydisk tensor rule.
pub const MAX_DISK_DIMENSION: usize = 2;

/// Tolerance of the sandwich checks on quadrature values.
pub const MV_TOLERANCE: f64 = 1e-3;

/// Number of independent Monte Carlo streams.
pub const MC_STREAMS: u64 = 16;

/// Minimum Monte Carlo sample count.
pub const MIN_MC_SAMPLES: usize = 1000;

/// Per-variable shift of the angular grid offset (fractional part of the
/// golden ratio), keeping different variables' grids out of phase.
const DIMENSION_SHIFT: f64 = 0.381_966_011_250_105;

/// Default trapezoid nodes per variable on the torus. A zero set meeting
/// the torus makes the trapezoid error `O(log 2 / N)` per factor, so
/// `N = 1024` keeps such cases under `10⁻³`.
pub const DEFAULT_TORUS_NODES: usize = 1024;

/// Polydisk tensor configuration used when none is given; `(128, 32)` per
/// variable keeps the two-variable grid at about 1.7·10⁷ points.
pub fn default_mv_config() -> QuadratureConfig {
    QuadratureConfig::new(128, 32).expect("valid")
}

/// Sparse polynomial in `d` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    d: usize,
    terms: BTreeMap<Vec<u32>, Complex64>,
}

impl MultiPoly {
    /// Builds a polynomial, summing repeated exponents and dropping zeros.
    pub fn new(d: usize, terms: impl IntoIterator<Item = (Vec<u32>, Complex64)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("number of variables must be >= 1".into()));
        }
        let mut map: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
        for (k, c) in terms {
            if k.len() != d {
                return Err(Error::InvalidInput(format!(
                    "exponent vector {k:?} has length {}, expected {d}",
                    k.len()
                )));
            }
            *map.entry(k).or_insert_with(Complex64::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { d, terms: map })
    }

    /// Convenience constructor from real coefficients.
    pub fn from_real(d: usize, terms: &[(&[u32], f64)]) -> Result<Self> {
        Self::new(d, terms.iter().map(|(k, c)| (k.to_vec(), Complex64::new(*c, 0.0))))
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Complex64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|k| k.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn constant_term(&self) -> Complex64 {
        self.terms
            .get(&vec![0; self.d])
            .copied()
            .unwrap_or_else(Complex64::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.iter().all(|&e| e == 0))
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(k, c)| k.iter().zip(z).fold(*c, |acc, (&e, &zi)| acc * zi.powu(e)))
            .sum()
    }

    /// The univariate polynomial in `z₁` obtained by fixing `z₂, …, z_d = rest`.
    pub fn univariate_in_first(&self, rest: &[Complex64]) -> ComplexPoly {
        assert_eq!(rest.len(), self.d - 1);
        let deg = self.terms.keys().map(|k| k[0] as usize).max().unwrap_or(0);
        let mut c = vec![Complex64::zero(); deg + 1];
        for (k, a) in &self.terms {
            let w = k[1..].iter().zip(rest).fold(*a, |acc, (&e, &zi)| acc * zi.powu(e));
            c[k[0] as usize] += w;
        }
        ComplexPoly::new(c)
    }

    /// Fixes the last variable, giving a polynomial in `d − 1` variables.
    fn fix_last(&self, value: Complex64) -> MultiPoly {
        let mut map: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
        for (k, a) in &self.terms {
            let (head, last) = k.split_at(self.d - 1);
            *map.entry(head.to_vec()).or_insert_with(Complex64::zero) += a * value.powu(last[0]);
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly {
            d: self.d - 1,
            terms: map,
        }
    }
}

impl fmt::Display for MultiPoly {
    /// One `k1 … kd : coefficient` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in &self.terms {
            let ks: Vec<String> = k.iter().map(u32::to_string).collect();
            writeln!(f, "{} : {}", ks.join(" "), format_complex(*c))?;
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses lines `k1 k2 … kd : re[+imi]`; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut d = None;
        let mut terms = Vec::new();
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: expected 'k1 ... kd : coeff'", lineno + 1)))?;
            let k: Vec<u32> = lhs
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("line {}: bad exponent '{t}'", lineno + 1)))
                })
                .collect::<Result<_>>()?;
            if k.is_empty() {
                return Err(Error::Parse(format!("line {}: no exponents", lineno + 1)));
            }
            match d {
                None => d = Some(k.len()),
                Some(d) if d != k.len() => {
                    return Err(Error::Parse(format!(
                        "line {}: {} exponents, expected {d}",
                        lineno + 1,
                        k.len()
                    )))
                }
                _ => {}
            }
            let c = parse_complex(rhs.trim()).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            terms.push((k, c));
        }
        let d = d.ok_or_else(|| Error::Parse("no terms".into()))?;
        MultiPoly::new(d, terms)
    }
}

fn nonzero(p: &MultiPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// Offset of variable `i`'s angular grid.
fn dimension_offset(base: f64, i: usize) -> f64 {
    (base + i as f64 * DIMENSION_SHIFT).rem_euclid(1.0)
}

/// Weighted nodes for one variable: the torus (trapezoid) or the disk
/// (Gauss–Legendre in `r` with weight `2r`, trapezoid in `θ`).
fn torus_nodes(n: usize, offset: f64) -> Vec<(Complex64, f64)> {
    let w = 1.0 / n as f64;
    unit_points(n, offset).into_iter().map(|u| (u, w)).collect()
}

fn disk_nodes(cfg: &QuadratureConfig, offset: f64) -> Vec<(Complex64, f64)> {
    let pts = unit_points(cfg.angular_nodes, offset);
    let wa = 1.0 / pts.len() as f64;
    disk_radial_rule(cfg.radial_nodes)
        .into_iter()
        .flat_map(|(r, wr)| pts.iter().map(move |&u| (u * r, wr * wa)))
        .collect()
}

/// Tensor mean of `log|p|` with `nodes[i]` the rule for variable `i`.
/// `None` signals an exact zero at a node.
fn tensor_log_mean(p: &MultiPoly, nodes: &[Vec<(Complex64, f64)>]) -> Option<f64> {
    if p.is_zero() {
        return None;
    }
    if p.d == 1 {
        let q = p.univariate_in_first(&[]);
        let mut s = 0.0;
        for &(z, w) in &nodes[0] {
            let v = q.evaluate(z).norm();
            if v == 0.0 {
                return None;
            }
            s += w * v.ln();
        }
        return Some(s);
    }
    let last = &nodes[p.d - 1];
    let inner = &nodes[..p.d - 1];
    let parts: Option<Vec<f64>> = last
        .par_iter()
        .map(|&(z, w)| tensor_log_mean(&p.fix_last(z), inner).map(|v| w * v))
        .collect();
    parts.map(|v| v.iter().sum())
}

fn with_dimension_rotation<T>(mut attempt: impl FnMut(f64) -> Option<T>) -> Result<T> {
    attempt(GRID_OFFSET)
        .or_else(|| attempt(GRID_OFFSET + 0.5))
        .ok_or(Error::SingularNode)
}

/// `M(P)` by the tensor trapezoid rule on `𝕋^d` with `angular_nodes` per variable.
pub fn mv_mahler(p: &MultiPoly, angular_nodes: usize) -> Result<f64> {
    nonzero(p)?;
    if p.d > MAX_TORUS_DIMENSION {
        return Err(Error::InvalidInput(format!(
            "torus quadrature supports d <= {MAX_TORUS_DIMENSION}, got {}",
            p.d
        )));
    }
    if angular_nodes < crate::quadrature::MIN_ANGULAR_NODES {
        return Err(Error::InvalidInput(format!(
            "angular_nodes must be >= 64, got {angular_nodes}"
        )));
    }
    with_dimension_rotation(|base| {
        let nodes: Vec<_> = (0..p.d)
            .map(|i| torus_nodes(angular_nodes, dimension_offset(base, i)))
            .collect();
        tensor_log_mean(p, &nodes)
    })
    .map(f64::exp)
}

/// `‖P‖₀` by the tensor (Gauss–Legendre × trapezoid)^d rule on the polydisk.
pub fn mv_areal_quadrature(p: &MultiPoly, cfg: &QuadratureConfig) -> Result<f64> {
    nonzero(p)?;
    if p.d > MAX_DISK_DIMENSION {
        return Err(Error::InvalidInput(format!(
            "polydisk quadrature supports d <= {MAX_DISK_DIMENSION}, got {}; use Monte Carlo",
            p.d
        )));
    }
    with_dimension_rotation(|base| {
        let nodes: Vec<_> = (0..p.d).map(|i| disk_nodes(cfg, dimension_offset(base, i))).collect();
        tensor_log_mean(p, &nodes)
    })
    .map(f64::exp)
}

/// Outer quadrature over `z₂` of an exact one-variable log-measure in `z₁`.
fn fiber_mean(
    p: &MultiPoly,
    outer: Vec<(Complex64, f64)>,
    inner: fn(&crate::roots::RootSet) -> f64,
) -> Option<Result<f64>> {
    let parts: Vec<Option<Result<f64>>> = outer
        .par_iter()
        .map(|&(z2, w)| {
            let q = p.univariate_in_first(&[z2]);
            if q.is_zero() {
                return None;
            }
            Some(find_roots(&q).map(|r| w * inner(&r)))
        })
        .collect();
    let mut total = 0.0;
    for part in parts {
        match part? {
            Ok(v) => total += v,
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(total))
}

fn check_two_variables(p: &MultiPoly) -> Result<()> {
    nonzero(p)?;
    if p.d != 2 {
        return Err(Error::InvalidInput(format!("fiber route needs d = 2, got {}", p.d)));
    }
    Ok(())
}

/// `M(P)` for `d = 2`: exact `log M` of `z₁ ↦ P(z₁, z₂)` at each trapezoid node `z₂`.
pub fn mv_mahler_fiber(p: &MultiPoly, angular_nodes: usize) -> Result<f64> {
    check_two_variables(p)?;
    let r = with_dimension_rotation(|base| {
        fiber_mean(
            p,
            torus_nodes(angular_nodes, dimension_offset(base, 1)),
            log_mahler_measure,
        )
    })?;
    r.map(f64::exp)
}

/// `‖P‖₀` for `d = 2`: exact `log ‖·‖₀` of `z₁ ↦ P(z₁, z₂)` at each disk node `z₂`.
pub fn mv_areal_fiber(p: &MultiPoly, cfg: &QuadratureConfig) -> Result<f64> {
    check_two_variables(p)?;
    let r =
        with_dimension_rotation(|base| fiber_mean(p, disk_nodes(cfg, dimension_offset(base, 1)), log_areal_measure))?;
    r.map(f64::exp)
}

/// Monte Carlo estimate of `‖P‖₀`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub value: f64,
    /// Delta-method standard error `value · sd(log|P|) / √samples`.
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
    /// Samples that hit `log 0` and were redrawn.
    pub redrawn: u64,
}

/// Running mean and sum of squared deviations (Welford), mergeable (Chan et al.).
#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let n = (self.count + other.count) as f64;
        let delta = other.mean - self.mean;
        Moments {
            count: self.count + other.count,
            mean: self.mean + delta * other.count as f64 / n,
            m2: self.m2 + other.m2 + delta * delta * self.count as f64 * other.count as f64 / n,
        }
    }
}

/// A point uniform (by area) in the unit disk: `r = √u`, `θ` uniform.
fn disk_sample(rng: &mut ChaCha20Rng) -> Complex64 {
    let u: f64 = rng.random();
    let t: f64 = rng.random();
    Complex64::from_polar(u.sqrt(), std::f64::consts::TAU * t)
}

/// `exp` of the sample mean of `log|P|` over independent uniform points in
/// each disk. The work is split into [`MC_STREAMS`] ChaCha streams keyed by
/// `(seed, stream)`, so the result does not depend on the thread count.
pub fn mv_areal_mc(p: &MultiPoly, samples: usize, seed: u64) -> Result<MCEstimate> {
    nonzero(p)?;
    if samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidInput(format!(
            "need at least {MIN_MC_SAMPLES} samples, got {samples}"
        )));
    }
    if p.is_constant() {
        return Ok(MCEstimate {
            value: p.constant_term().norm(),
            std_error: 0.0,
            samples,
            seed,
            redrawn: 0,
        });
    }
    let d = p.d;
    let per_stream = |s: u64| {
        let base = samples as u64 / MC_STREAMS;
        base + u64::from(s < samples as u64 % MC_STREAMS)
    };
    let results: Vec<(Moments, u64)> = (0..MC_STREAMS)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            rng.set_stream(s);
            let mut m = Moments::default();
            let mut redrawn = 0;
            let mut z = vec![Complex64::zero(); d];
            for _ in 0..per_stream(s) {
                loop {
                    for zi in z.iter_mut() {
                        *zi = disk_sample(&mut rng);
                    }
                    let v = p.evaluate(&z).norm();
                    if v > 0.0 {
                        m.push(v.ln());
                        break;
                    }
                    redrawn += 1;
                }
            }
            (m, redrawn)
        })
        .collect();
    let (m, redrawn) = results
        .into_iter()
        .fold((Moments::default(), 0), |(acc, r), (m, k)| (acc.merge(m), r + k));
    let n = m.count as f64;
    let var = if m.count > 1 { m.m2 / (n - 1.0) } else { 0.0 };
    let value = m.mean.exp();
    Ok(MCEstimate {
        value,
        std_error: value * (var / n).sqrt(),
        samples,
        seed,
        redrawn,
    })
}

/// The common value of both measures when the constant term dominates:
/// `|a₀| ≥ ∑_{k≠0} |a_k|` implies `‖P‖₀ = M(P) = |a₀|`.
pub fn dominance_value(p: &MultiPoly) -> Option<f64> {
    let a0 = p.constant_term().norm();
    let rest: f64 = p
        .terms
        .iter()
        .filter(|(k, _)| k.iter().any(|&e| e > 0))
        .map(|(_, c)| c.norm())
        .sum();
    (a0 > 0.0 && a0 >= rest).then_some(a0)
}

/// Both sides of `e^{−n/2} M(P) ≤ ‖P‖₀ ≤ M(P)` from quadrature values.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MvBounds {
    pub mahler: f64,
    pub areal: f64,
    pub lower: InequalityCheck,
    pub upper: InequalityCheck,
}

/// How the measures in [`mv_bounds_check`] are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MvRoute {
    /// Exact closed form (`d = 1`) or the fiber route (`d = 2`).
    Fiber,
    /// Full tensor quadrature.
    Tensor,
}

/// Grids and route for [`mv_bounds_check_with`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MvBoundsOptions {
    pub disk: QuadratureConfig,
    pub torus_nodes: usize,
    pub route: MvRoute,
}

impl Default for MvBoundsOptions {
    fn default() -> Self {
        Self {
            disk: default_mv_config(),
            torus_nodes: DEFAULT_TORUS_NODES,
            route: MvRoute::Fiber,
        }
    }
}

/// [`mv_bounds_check_with`] with the default grids and the fiber route.
pub fn mv_bounds_check(p: &MultiPoly) -> Result<MvBounds> {
    mv_bounds_check_with(p, &MvBoundsOptions::default())
}

pub fn mv_bounds_check_with(p: &MultiPoly, opts: &MvBoundsOptions) -> Result<MvBounds> {
    nonzero(p)?;
    let (mahler, areal) = match (p.d, opts.route) {
        (1, MvRoute::Fiber) => {
            let r = find_roots(&p.univariate_in_first(&[]))?;
            (log_mahler_measure(&r).exp(), log_areal_measure(&r).exp())
        }
        (2, MvRoute::Fiber) => (mv_mahler_fiber(p, opts.torus_nodes)?, mv_areal_fiber(p, &opts.disk)?),
        (d, MvRoute::Tensor) if d <= MAX_DISK_DIMENSION => {
            (mv_mahler(p, opts.torus_nodes)?, mv_areal_quadrature(p, &opts.disk)?)
        }
        (d, _) => {
            return Err(Error::InvalidInput(format!(
                "bounds check needs d <= {MAX_DISK_DIMENSION}, got {d}"
            )))
        }
    };
    let n = p.total_degree() as f64;
    Ok(MvBounds {
        mahler,
        areal,
        lower: InequalityCheck::with_tolerance((-0.5 * n).exp() * mahler, areal, MV_TOLERANCE),
        upper: InequalityCheck::with_tolerance(areal, mahler, MV_TOLERANCE),
    })
}
