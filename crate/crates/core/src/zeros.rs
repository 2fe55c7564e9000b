//! Zero-distribution diagnostics: moduli, angular equidistribution, truncated
//! logarithmic energy, family scans and the discriminant energy identity.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::BuiltinFamily;
use crate::error::{Error, Result};
use crate::measures::{log_areal_measure, log_mahler_measure};
use crate::poly::{ComplexPoly, IntPoly};
use crate::resultant::discriminant;
use crate::roots::{find_roots, RootSet};

/// Default truncation levels `M` of the logarithmic kernel.
pub const DEFAULT_CUTOFFS: [f64; 4] = [1.0, 5.0, 10.0, 20.0];

/// Default radii at which the fraction of roots in `|z| < r` is reported.
pub const DEFAULT_RADII: [f64; 7] = [0.5, 0.9, 0.99, 1.0, 1.01, 1.1, 2.0];

/// Relative tolerance of the discriminant identity check.
pub const IDENTITY_TOLERANCE: f64 = 1e-4;

/// Summary statistics of a root multiset.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroStats {
    pub n: usize,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// `(r, fraction of roots with |z| < r)`, increasing in `r`
    pub inside_fraction: Vec<(f64, f64)>,
    pub angular_discrepancy: f64,
    /// `(M, truncated energy)`, increasing in `M`
    pub energy_truncated: Vec<(f64, f64)>,
}

/// Fraction of the roots in the open disk of radius `radius`.
pub fn inside_fraction(roots: &RootSet, radius: f64) -> f64 {
    let n = roots.degree();
    if n == 0 {
        return 0.0;
    }
    roots.moduli().filter(|&m| m < radius).count() as f64 / n as f64
}

/// Angles of the roots as fractions of a full turn in `[0, 1)`, sorted.
fn sorted_turns(roots: &[num_complex::Complex64]) -> Vec<f64> {
    let mut t: Vec<f64> = roots
        .iter()
        .map(|z| {
            let u = z.arg().rem_euclid(TAU) / TAU;
            if u >= 1.0 {
                0.0
            } else {
                u
            }
        })
        .collect();
    t.sort_by(f64::total_cmp);
    t
}

/// `sup` over arcs `I` of `|ν_n(I) − |I|/2π|` for the angular marginal of the
/// root counting measure.
///
/// The supremum is attained on arcs whose endpoints are root angles, which
/// gives Kuiper's statistic `D⁺ + D⁻` on the sorted normalized angles
/// (`O(n log n)`). Roots at the origin are assigned angle 0.
pub fn angular_discrepancy(roots: &[num_complex::Complex64]) -> f64 {
    let n = roots.len();
    if n == 0 {
        return 0.0;
    }
    let t = sorted_turns(roots);
    let nf = n as f64;
    let mut d_plus = f64::NEG_INFINITY;
    let mut d_minus = f64::NEG_INFINITY;
    for (j, &tj) in t.iter().enumerate() {
        d_plus = d_plus.max((j + 1) as f64 / nf - tj);
        d_minus = d_minus.max(tj - j as f64 / nf);
    }
    (d_plus + d_minus).clamp(0.0, 1.0)
}

/// `(1/n²) ∑_{j≠k} min(log 1/|z_j − z_k|, M) + M/n`.
///
/// The diagonal `j = k` contributes `M` each (the kernel truncated at a
/// coincident pair), which is the `M/n` term. Coincident distinct indices are
/// truncated at `M` as well, so multiple roots are allowed.
pub fn energy_truncated(roots: &[num_complex::Complex64], cutoff: f64) -> f64 {
    let n = roots.len();
    if n == 0 {
        return 0.0;
    }
    let mut sum = 0.0;
    for j in 0..n {
        for k in (j + 1)..n {
            let d = (roots[j] - roots[k]).norm();
            let kernel = if d == 0.0 { cutoff } else { (-d.ln()).min(cutoff) };
            sum += 2.0 * kernel;
        }
    }
    let nf = n as f64;
    sum / (nf * nf) + cutoff / nf
}

/// All statistics of a root set, with energies at the given cutoffs.
pub fn zero_stats(roots: &RootSet, cutoffs: &[f64]) -> ZeroStats {
    zero_stats_with_radii(roots, cutoffs, &DEFAULT_RADII)
}

pub fn zero_stats_with_radii(roots: &RootSet, cutoffs: &[f64], radii: &[f64]) -> ZeroStats {
    let mut radii = radii.to_vec();
    radii.sort_by(f64::total_cmp);
    let mut cutoffs = cutoffs.to_vec();
    cutoffs.sort_by(f64::total_cmp);
    let (min_modulus, max_modulus) = roots
        .moduli()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), m| (lo.min(m), hi.max(m)));
    let min_modulus = if roots.degree() == 0 { 0.0 } else { min_modulus };
    ZeroStats {
        n: roots.degree(),
        min_modulus,
        max_modulus,
        inside_fraction: radii.iter().map(|&r| (r, inside_fraction(roots, r))).collect(),
        angular_discrepancy: angular_discrepancy(roots.roots()),
        energy_truncated: cutoffs
            .iter()
            .map(|&m| (m, energy_truncated(roots.roots(), m)))
            .collect(),
    }
}

/// A sequence of polynomials indexed by `n`.
#[derive(Clone)]
pub enum Family {
    Builtin(BuiltinFamily),
    /// A user-supplied generator `n ↦ P_n`.
    Custom {
        name: String,
        generator: Arc<dyn Fn(usize) -> ComplexPoly + Send + Sync>,
    },
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Builtin(b) => write!(f, "Builtin({b:?})"),
            Family::Custom { name, .. } => write!(f, "Custom({name})"),
        }
    }
}

impl Family {
    pub fn custom(name: impl Into<String>, generator: impl Fn(usize) -> ComplexPoly + Send + Sync + 'static) -> Self {
        Family::Custom {
            name: name.into(),
            generator: Arc::new(generator),
        }
    }

    pub fn member(&self, n: usize) -> ComplexPoly {
        match self {
            Family::Builtin(b) => b.poly(n).to_complex(),
            Family::Custom { generator, .. } => generator(n),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Family::Builtin(b) => b.name(),
            Family::Custom { name, .. } => name,
        }
    }
}

/// One row of a family scan. The `*_root` columns are the measures raised to
/// the power `1/degree`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub n: usize,
    pub degree: usize,
    pub mahler_root: f64,
    pub areal_root: f64,
    pub min_modulus: f64,
    pub max_modulus: f64,
    pub angular_discrepancy: f64,
}

/// Per-`n` diagnostics of a family, computed in parallel over `n`.
pub fn family_scan(family: &Family, n_values: &[usize]) -> Result<Vec<ScanRow>> {
    n_values
        .par_iter()
        .map(|&n| {
            let p = family.member(n);
            let roots = find_roots(&p)?;
            let degree = roots.degree();
            if degree == 0 {
                return Err(Error::InvalidInput(format!("family member {n} is constant")));
            }
            let inv = 1.0 / degree as f64;
            let stats = zero_stats(&roots, &[]);
            Ok(ScanRow {
                n,
                degree,
                mahler_root: (log_mahler_measure(&roots) * inv).exp(),
                areal_root: (log_areal_measure(&roots) * inv).exp(),
                min_modulus: stats.min_modulus,
                max_modulus: stats.max_modulus,
                angular_discrepancy: stats.angular_discrepancy,
            })
        })
        .collect()
}

/// `log|x|` for an arbitrarily large nonzero integer.
pub fn log_abs_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.abs().to_f64().expect("fits in f64").ln()
    } else {
        let shift = bits - 64;
        let top: BigInt = x.abs() >> shift;
        top.to_f64().expect("64-bit").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// The discriminant identity `log 1/|Δ| = −(2n−2) log|a_n| + ∑_{j≠k} log 1/|z_j − z_k|`
/// checked numerically, and the energy bound it yields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantEnergy {
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    pub disc: BigInt,
    /// `log|Δ|`, exact up to the final rounding
    pub log_abs_disc: f64,
    /// `∑_{j≠k} log 1/|z_j − z_k|` from computed roots
    pub pair_sum: f64,
    /// `(2n−2) log|a_n| − pair_sum`, the root-based value of `log|Δ|`
    pub log_abs_disc_from_roots: f64,
    /// Whether the two evaluations of `log|Δ|` agree to `1e-4 · max(1, |log|Δ||)`.
    pub identity_ok: bool,
    /// `|Δ| ≥ 1`, i.e. `log 1/|Δ| ≤ 0`
    pub disc_at_least_one: bool,
    /// `(1/n²) log(|a_n|^{2n−2} / |Δ|)`
    pub energy_bound: f64,
}

fn serialize_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn deserialize_bigint<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

pub fn discriminant_energy_bound(p: &IntPoly) -> Result<DiscriminantEnergy> {
    let n = p.degree();
    if p.is_zero() || n < 2 {
        return Err(Error::InvalidInput(format!("need degree >= 2, got {n}")));
    }
    let disc = discriminant(p)?;
    if disc.is_zero() {
        return Err(Error::MultipleRoot);
    }
    let roots = find_roots(&p.to_complex())?;
    let z = roots.roots();
    let mut pair_sum = 0.0;
    for j in 0..n {
        for k in (j + 1)..n {
            pair_sum -= 2.0 * (z[j] - z[k]).norm().ln();
        }
    }
    let log_an = log_abs_bigint(&p.leading());
    let log_abs_disc = log_abs_bigint(&disc);
    let from_roots = (2 * n - 2) as f64 * log_an - pair_sum;
    let nf = n as f64;
    Ok(DiscriminantEnergy {
        identity_ok: (from_roots - log_abs_disc).abs() <= IDENTITY_TOLERANCE * log_abs_disc.abs().max(1.0),
        disc_at_least_one: log_abs_disc >= 0.0,
        energy_bound: ((2 * n - 2) as f64 * log_an - log_abs_disc) / (nf * nf),
        disc,
        log_abs_disc,
        pair_sum,
        log_abs_disc_from_roots: from_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn unity(n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
            .collect()
    }

    /// Brute force over all arcs whose endpoints are root angles, both closed
    /// (for `ν(I) − |I|`) and open (for `|I| − ν(I)`), plus the full circle.
    fn discrepancy_oracle(roots: &[Complex64]) -> f64 {
        let t = sorted_turns(roots);
        let n = t.len();
        let nf = n as f64;
        let mut best: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let len = (t[j] - t[i]).rem_euclid(1.0);
                let in_closed = |x: f64| (x - t[i]).rem_euclid(1.0) <= len;
                let in_open = |x: f64| {
                    let u = (x - t[i]).rem_euclid(1.0);
                    u > 0.0 && u < len
                };
                let closed = t.iter().filter(|&&x| in_closed(x)).count() as f64 / nf;
                best = best.max(closed - len);
                // open arc from t_i to t_j; when i == j it is the whole circle
                // minus the point, of length 1
                let (open, olen) = if i == j || len == 0.0 {
                    (t.iter().filter(|&&x| x != t[i]).count() as f64 / nf, 1.0)
                } else {
                    (t.iter().filter(|&&x| in_open(x)).count() as f64 / nf, len)
                };
                best = best.max(olen - open);
            }
        }
        best.min(1.0)
    }

    #[test]
    fn discrepancy_examples() {
        let rs = find_roots(&ComplexPoly::from_real(&[-1., 0., 0., 0., 4.])).unwrap();
        let s = zero_stats(&rs, &DEFAULT_CUTOFFS);
        assert!(s.angular_discrepancy <= 0.25 + 1e-12);
        let rho = 4f64.powf(-0.25);
        assert!((s.min_modulus - rho).abs() < 1e-14 && (s.max_modulus - rho).abs() < 1e-14);

        assert!(angular_discrepancy(&unity(64)) <= 1.0 / 64.0 + 1e-12);

        let rs = find_roots(&ComplexPoly::from_real(&[0.855, -1.85, 1.0])).unwrap();
        assert!(angular_discrepancy(rs.roots()) > 0.99);
    }

    #[test]
    fn roots_of_unity_discrepancy_up_to_512() {
        for n in 1..=512 {
            assert!(angular_discrepancy(&unity(n)) <= 1.0 / n as f64 + 1e-12, "n={n}");
        }
    }

    #[test]
    fn energy_of_roots_of_unity() {
        for n in [8usize, 64] {
            let e = energy_truncated(&unity(n), 10.0);
            let exact = -(n as f64).ln() / n as f64 + 10.0 / n as f64;
            assert!((e - exact).abs() < 1e-12, "n={n}: {e} vs {exact}");
        }
        assert!(energy_truncated(&unity(64), 10.0).abs() < 0.1);
    }

    #[test]
    fn inside_fraction_is_monotone() {
        let rs = find_roots(&ComplexPoly::from_real(&[0.1, -1.0, 0.3, 2.0, 0.5])).unwrap();
        let s = zero_stats(&rs, &DEFAULT_CUTOFFS);
        for w in s.inside_fraction.windows(2) {
            assert!(w[0].1 <= w[1].1);
        }
        assert!(s.min_modulus <= s.max_modulus);
        assert!((0.0..=1.0).contains(&s.angular_discrepancy));
    }

    #[test]
    fn family_scan_examples() {
        let fam = Family::Builtin(BuiltinFamily::NznMinus1);
        let rows = family_scan(&fam, &[10, 100, 1000]).unwrap();
        let r = &rows[1];
        let rho = 100f64.powf(-0.01);
        assert!((r.min_modulus - rho).abs() < 1e-8 && (r.max_modulus - rho).abs() < 1e-8);
        assert!((rho - 0.9550).abs() < 1e-4);
        for w in rows.windows(2) {
            assert!(w[1].areal_root < w[0].areal_root && w[1].areal_root >= 1.0);
        }
        assert!((rows[2].areal_root - 1.0).abs() < 1e-3);

        // all real roots in [−2, −1]: areal^{1/n} stays near 4/e
        let custom = Family::custom("real-interval", |n| {
            let mut p = ComplexPoly::from_real(&[1.0]);
            for j in 1..=n {
                p = p.multiply(&ComplexPoly::from_real(&[1.0 + j as f64 / (n + 1) as f64, 1.0]));
            }
            p
        });
        for row in family_scan(&custom, &[4, 8, 12]).unwrap() {
            assert!(row.areal_root > 1.3, "{row:?}");
        }
    }

    #[test]
    fn nzn_root_moduli_up_to_200() {
        let fam = Family::Builtin(BuiltinFamily::NznMinus1);
        let ns: Vec<usize> = (2..=200).collect();
        for row in family_scan(&fam, &ns).unwrap() {
            let rho = (row.n as f64).powf(-1.0 / row.n as f64);
            assert!((row.min_modulus - rho).abs() <= 1e-8 && (row.max_modulus - rho).abs() <= 1e-8);
        }
    }

    #[test]
    fn discriminant_energy_examples() {
        let d = discriminant_energy_bound(&IntPoly::from_i64s(&[1, 1, 1])).unwrap();
        assert_eq!(d.disc, BigInt::from(-3));
        assert!(d.identity_ok && d.disc_at_least_one);

        let d = discriminant_energy_bound(&IntPoly::from_i64s(&[-2, 0, 1])).unwrap();
        assert_eq!(d.disc, BigInt::from(8));
        assert!((d.pair_sum + 8f64.ln()).abs() < 1e-12);
        assert!(d.identity_ok);

        assert_eq!(
            discriminant_energy_bound(&IntPoly::from_i64s(&[1, -2, 1])),
            Err(Error::MultipleRoot)
        );
    }

    #[test]
    fn log_of_huge_integers() {
        let x: BigInt = BigInt::from(3).pow(2000);
        assert!((log_abs_bigint(&x) - 2000.0 * 3f64.ln()).abs() < 1e-9);
        assert!((log_abs_bigint(&BigInt::from(-8)) - 8f64.ln()).abs() < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn discrepancy_matches_brute_force(
            pts in prop::collection::vec((0.1f64..2.0, 0.0f64..TAU), 1..24),
            snap in any::<bool>(),
        ) {
            // optionally snap angles to a coarse grid to create ties
            let roots: Vec<Complex64> = pts
                .iter()
                .map(|&(r, a)| {
                    let a = if snap { (a * 4.0 / TAU).floor() * TAU / 4.0 } else { a };
                    Complex64::from_polar(r, a)
                })
                .collect();
            let fast = angular_discrepancy(&roots);
            let slow = discrepancy_oracle(&roots);
            prop_assert!((fast - slow).abs() < 1e-12, "fast {} slow {}", fast, slow);
        }

        #[test]
        fn energy_truncation_monotone(
            pts in prop::collection::vec((0.1f64..2.0, 0.0f64..TAU), 2..20),
            m1 in 0.5f64..10.0, dm in 0.0f64..10.0,
        ) {
            let roots: Vec<Complex64> = pts.iter().map(|&(r, a)| Complex64::from_polar(r, a)).collect();
            let n = roots.len() as f64;
            let m2 = m1 + dm;
            let (e1, e2) = (energy_truncated(&roots, m1), energy_truncated(&roots, m2));
            prop_assert!(e1 <= e2 + (m2 - m1) / n + 1e-12);
        }

        #[test]
        fn discriminant_identity_on_squarefree_polys(
            c in prop::collection::vec(-5i64..=5, 3..=9)
        ) {
            let p = IntPoly::from_i64s(&c);
            prop_assume!(p.degree() >= 2 && crate::resultant::is_squarefree(&p));
            let d = discriminant_energy_bound(&p).unwrap();
            prop_assert!(d.identity_ok, "{:?}", d);
            prop_assert!(d.disc_at_least_one);
        }
    }
}
