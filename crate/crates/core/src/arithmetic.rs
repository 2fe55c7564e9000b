//! Integer polynomials: Kronecker classification, minimal-measure search and
//! the two explicit families with closed-form measures.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{log_areal_measure, log_mahler_measure};
use crate::poly::{ComplexPoly, IntPoly};
use crate::roots::find_roots;
use num_complex::Complex64;

/// A root this far inside the unit circle counts as an interior root.
pub const INTERIOR_TOLERANCE: f64 = 1e-8;

/// Tolerance for declaring a computed measure equal to 1.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// Default cap on the number of enumerated polynomials in [`lehmer_search`].
pub const DEFAULT_SEARCH_CAP: u128 = 100_000_000;

/// Largest degree accepted by [`lehmer_search`].
pub const MAX_SEARCH_DEGREE: usize = 12;

/// Largest height accepted by [`lehmer_search`].
pub const MAX_SEARCH_HEIGHT: i64 = 2;

/// Euler's totient.
pub fn euler_phi(m: usize) -> usize {
    let (mut n, mut phi, mut p) = (m, m, 2);
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// The cyclotomic polynomials `Φ_m` with `φ(m) ≤ max_degree`.
///
/// Since `φ(m) ≥ √(m/2)`, every such `m` satisfies `m ≤ 2·max_degree²`, so the
/// table is complete once all `m` up to that bound are scanned.
#[derive(Clone, Debug)]
pub struct CyclotomicTable {
    max_degree: usize,
    entries: Vec<(usize, IntPoly)>,
}

impl CyclotomicTable {
    pub fn new(max_degree: usize) -> Self {
        let bound = (2 * max_degree * max_degree).max(2);
        // every divisor d of m has φ(d) ≤ φ(m), so the table is closed under
        // the divisors needed to build each entry
        let mut built: Vec<Option<IntPoly>> = vec![None; bound + 1];
        let mut entries = Vec::new();
        for m in (1..=bound).filter(|&m| euler_phi(m) <= max_degree) {
            let mut q = IntPoly::x_pow_minus_one(m);
            for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
                let phi_d = built[d].as_ref().expect("divisor built earlier");
                q = q.div_exact(phi_d).expect("Φ_d divides z^m − 1");
            }
            built[m] = Some(q.clone());
            entries.push((m, q));
        }
        Self { max_degree, entries }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `(m, Φ_m)` pairs in increasing `m`.
    pub fn entries(&self) -> &[(usize, IntPoly)] {
        &self.entries
    }
}

/// The `m`-th cyclotomic polynomial, `(z^m − 1) / ∏_{d|m, d<m} Φ_d`.
pub fn cyclotomic_poly(m: usize) -> IntPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut q = IntPoly::x_pow_minus_one(m);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        q = q.div_exact(&cyclotomic_poly(d)).expect("Φ_d divides z^m − 1");
    }
    q
}

/// Whether `p = ±∏ Φ_{m_i}` (repetition allowed), decided by exact division.
///
/// A product of cyclotomic polynomials of degree `n` only involves `Φ_m` with
/// `φ(m) ≤ n`, hence `m ≤ 2n²`. Each such factor is divided out as often as it
/// divides; `p` is cyclotomic iff the cofactor left over is `±1`.
pub fn is_cyclotomic(p: &IntPoly) -> bool {
    is_cyclotomic_with(&CyclotomicTable::new(p.degree()), p)
}

/// [`is_cyclotomic`] with a precomputed table (which must cover `deg p`).
pub fn is_cyclotomic_with(table: &CyclotomicTable, p: &IntPoly) -> bool {
    let n = p.degree();
    assert!(n <= table.max_degree, "table does not cover degree {n}");
    if p.is_zero() || n == 0 || !p.leading().abs().is_one() || !p.constant_term().abs().is_one() {
        return false;
    }
    let mut rest = p.clone();
    for (_, phi) in table.entries() {
        if phi.degree() > rest.degree() {
            continue;
        }
        while let Some((q, r)) = rest.div_rem(phi) {
            if !r.is_zero() {
                break;
            }
            rest = q;
            if rest.degree() < phi.degree() {
                break;
            }
        }
        if rest.degree() == 0 {
            break;
        }
    }
    rest.degree() == 0 && rest.constant_term().abs().is_one()
}

/// Which case of the Kronecker/areal dichotomy a polynomial falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Cyclotomic,
    NoRootsInDisk,
    HasInteriorRoots,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    pub areal_is_one: bool,
    pub mahler_is_one: bool,
    /// A root of modulus `< 1 − 1e-8` when `kind` is `HasInteriorRoots`.
    pub witness: Option<Complex64>,
    pub mahler: f64,
    pub areal: f64,
}

/// Classifies an integer polynomial with `a₀ ≠ 0`.
///
/// * Some root with `|z| < 1 − 1e-8`: `HasInteriorRoots`; the areal measure
///   then exceeds 1, because each such root contributes a penalty factor
///   `g(|z|) > 1` to the lower bound.
/// * All roots in `|z| ≤ 1 + 1e-8` and `p` a product of cyclotomics:
///   `Cyclotomic`, both measures exactly 1.
/// * Otherwise `NoRootsInDisk`: `‖P‖₀ = M(P) = |a₀|`, which is 1 iff `|a₀| = 1`.
pub fn classify(p: &IntPoly) -> Result<Classification> {
    classify_with(&CyclotomicTable::new(p.degree()), p)
}

/// [`classify`] with a precomputed cyclotomic table.
pub fn classify_with(table: &CyclotomicTable, p: &IntPoly) -> Result<Classification> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::InvalidInput("classify needs a nonzero constant term".into()));
    }
    let roots = find_roots(&p.to_complex())?;
    let mahler = log_mahler_measure(&roots).exp();
    let areal = log_areal_measure(&roots).exp();
    let witness = roots
        .roots()
        .iter()
        .copied()
        .filter(|z| z.norm() < 1.0 - INTERIOR_TOLERANCE)
        .min_by(|a, b| a.norm().total_cmp(&b.norm()));
    let c = if let Some(w) = witness {
        Classification {
            kind: Kind::HasInteriorRoots,
            areal_is_one: false,
            mahler_is_one: (mahler - 1.0).abs() <= UNIT_TOLERANCE,
            witness: Some(w),
            mahler,
            areal,
        }
    } else if roots.moduli().all(|m| m <= 1.0 + INTERIOR_TOLERANCE) && is_cyclotomic_with(table, p) {
        Classification {
            kind: Kind::Cyclotomic,
            areal_is_one: true,
            mahler_is_one: true,
            witness: None,
            mahler,
            areal,
        }
    } else {
        let unit = p.constant_term().abs().is_one();
        Classification {
            kind: Kind::NoRootsInDisk,
            areal_is_one: unit,
            mahler_is_one: unit,
            witness: None,
            mahler,
            areal,
        }
    };
    Ok(c)
}

/// One enumerated polynomial with both measures.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchRecord {
    pub poly: IntPoly,
    pub mahler: f64,
    pub areal: f64,
    pub is_cyclotomic: bool,
}

/// Bounds of a [`lehmer_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_degree: usize,
    pub height: i64,
    /// Enumeration size above which the search refuses to run.
    pub cap: u128,
}

impl SearchOptions {
    pub fn new(max_degree: usize, height: i64) -> Self {
        Self {
            max_degree,
            height,
            cap: DEFAULT_SEARCH_CAP,
        }
    }
}

/// Number of integer polynomials with `1 ≤ deg ≤ max_degree`, `|a_k| ≤ height`,
/// `a₀ ≠ 0`, before symmetry reduction.
pub fn enumeration_size(max_degree: usize, height: i64) -> u128 {
    let h = height as u128;
    (1..=max_degree)
        .map(|d| (2 * h) * (2 * h) * (2 * h + 1).pow(d as u32 - 1))
        .sum()
}

/// Coefficient vector number `index` of degree `d` with `a_d > 0`, `a₀ ≠ 0`.
fn decode(index: u64, d: usize, h: i64) -> Vec<i64> {
    let mut c = vec![0i64; d + 1];
    let mut i = index;
    let nonzero = |k: u64| {
        let k = k as i64; // 0..2h-1 → -h..-1, 1..h
        if k < h {
            k - h
        } else {
            k - h + 1
        }
    };
    let base0 = 2 * h as u64;
    c[0] = nonzero(i % base0);
    i /= base0;
    for ck in c.iter_mut().take(d).skip(1) {
        let b = 2 * h as u64 + 1;
        *ck = (i % b) as i64 - h;
        i /= b;
    }
    c[d] = (i as i64) + 1; // leading in 1..=h
    c
}

/// Representative of the orbit of `c` under `p ↔ −p` and `p(z) ↔ p(−z)`,
/// both of which preserve `|a_n|` and every root modulus, hence both measures.
fn is_canonical(c: &[i64]) -> bool {
    let d = c.len() - 1;
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    // p(−z), renormalized to a positive leading coefficient
    let partner: Vec<i64> = c
        .iter()
        .enumerate()
        .map(|(k, &a)| if k % 2 == 0 { a * sign } else { -a * sign })
        .collect();
    c >= partner.as_slice()
}

/// Exhaustive search over integer polynomials of degree `1..=max_degree` and
/// height `≤ height` with `a₀ ≠ 0`, reduced by the symmetries `p ↔ −p` and
/// `p(z) ↔ p(−z)`. Records come back sorted by areal measure (then Mahler
/// measure, then coefficients).
pub fn lehmer_search(opts: SearchOptions) -> Result<Vec<SearchRecord>> {
    if opts.max_degree == 0 || opts.max_degree > MAX_SEARCH_DEGREE {
        return Err(Error::InvalidInput(format!(
            "max_degree must be in 1..={MAX_SEARCH_DEGREE}, got {}",
            opts.max_degree
        )));
    }
    if opts.height < 1 || opts.height > MAX_SEARCH_HEIGHT {
        return Err(Error::InvalidInput(format!(
            "height must be in 1..={MAX_SEARCH_HEIGHT}, got {}",
            opts.height
        )));
    }
    let size = enumeration_size(opts.max_degree, opts.height);
    if size > opts.cap {
        return Err(Error::BudgetExceeded { size, cap: opts.cap });
    }
    let table = CyclotomicTable::new(opts.max_degree);
    let h = opts.height;
    let mut records: Vec<SearchRecord> = Vec::new();
    for d in 1..=opts.max_degree {
        let count = 2 * h as u64 * h as u64 * (2 * h as u64 + 1).pow(d as u32 - 1);
        let block: Result<Vec<Option<SearchRecord>>> = (0..count)
            .into_par_iter()
            .map(|i| {
                let c = decode(i, d, h);
                if !is_canonical(&c) {
                    return Ok(None);
                }
                let poly = IntPoly::from_i64s(&c);
                let roots = find_roots(&poly.to_complex())?;
                Ok(Some(SearchRecord {
                    is_cyclotomic: is_cyclotomic_with(&table, &poly),
                    mahler: log_mahler_measure(&roots).exp(),
                    areal: log_areal_measure(&roots).exp(),
                    poly,
                }))
            })
            .collect();
        records.extend(block?.into_iter().flatten());
    }
    records.par_sort_by(|a, b| {
        a.areal
            .total_cmp(&b.areal)
            .then(a.mahler.total_cmp(&b.mahler))
            .then_with(|| a.poly.coeffs().cmp(b.poly.coeffs()))
    });
    Ok(records)
}

/// The `k` non-cyclotomic records of smallest Mahler measure.
pub fn minimal_non_cyclotomic(records: &[SearchRecord], k: usize) -> Vec<SearchRecord> {
    let mut v: Vec<SearchRecord> = records.iter().filter(|r| !r.is_cyclotomic).cloned().collect();
    v.sort_by(|a, b| {
        a.mahler
            .total_cmp(&b.mahler)
            .then(a.areal.total_cmp(&b.areal))
            .then_with(|| a.poly.coeffs().cmp(b.poly.coeffs()))
    });
    v.truncate(k);
    v
}

/// The explicit families with closed-form measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuiltinFamily {
    /// `n z^n − 1`
    NznMinus1,
    /// `z^{2n} + n z^n + 1`
    Reciprocal,
}

impl BuiltinFamily {
    pub fn poly(self, n: usize) -> IntPoly {
        match self {
            BuiltinFamily::NznMinus1 => {
                let mut c = vec![BigInt::zero(); n + 1];
                c[0] = -BigInt::one();
                c[n] = BigInt::from(n);
                IntPoly::new(c)
            }
            BuiltinFamily::Reciprocal => {
                let mut c = vec![BigInt::zero(); 2 * n + 1];
                c[0] = BigInt::one();
                c[n] = BigInt::from(n);
                c[2 * n] = BigInt::one();
                IntPoly::new(c)
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BuiltinFamily::NznMinus1 => "nzn_minus_1",
            BuiltinFamily::Reciprocal => "reciprocal",
        }
    }
}

/// Both measures of a family member, stored in log scale as well.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyValues {
    pub n: usize,
    pub mahler: f64,
    pub areal: f64,
    pub log_mahler: f64,
    pub log_areal: f64,
}

impl FamilyValues {
    fn from_logs(n: usize, log_mahler: f64, log_areal: f64) -> Self {
        Self {
            n,
            mahler: log_mahler.exp(),
            areal: log_areal.exp(),
            log_mahler,
            log_areal,
        }
    }
}

/// Closed-form measures:
///
/// * `n z^n − 1`: `M = n`, `‖P‖₀ = n exp(n(n^{−2/n} − 1)/2)`;
/// * `z^{2n} + n z^n + 1`: `M = (n + √(n²−4))/2` and, with
///   `ρ = (n − √(n²−4))/2`, `‖P‖₀ = M exp((n/2)(ρ^{2/n} − 1))`.
pub fn family_values(family: BuiltinFamily, n: usize) -> Result<FamilyValues> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("family index must be >= 2, got {n}")));
    }
    let nf = n as f64;
    Ok(match family {
        BuiltinFamily::NznMinus1 => {
            let log_m = nf.ln();
            let log_a = log_m + 0.5 * nf * (-2.0 * nf.ln() / nf).exp_m1();
            FamilyValues::from_logs(n, log_m, log_a)
        }
        BuiltinFamily::Reciprocal => {
            let s = (nf * nf - 4.0).sqrt();
            let big = 0.5 * (nf + s);
            // ρ = 1/big without cancellation
            let log_rho = -big.ln();
            let log_a = big.ln() + 0.5 * nf * (2.0 * log_rho / nf).exp_m1();
            FamilyValues::from_logs(n, big.ln(), log_a)
        }
    })
}

/// The same values computed from the roots of the family member.
pub fn family_values_from_roots(family: BuiltinFamily, n: usize) -> Result<FamilyValues> {
    let roots = find_roots(&family.poly(n).to_complex())?;
    Ok(FamilyValues::from_logs(
        n,
        log_mahler_measure(&roots),
        log_areal_measure(&roots),
    ))
}

/// Converts a small integer polynomial for display or JSON.
pub fn int_coeffs(p: &IntPoly) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.to_i64().unwrap_or(i64::MAX)).collect()
}

/// The complex polynomial of a built-in family member.
pub fn family_complex_poly(family: BuiltinFamily, n: usize) -> ComplexPoly {
    family.poly(n).to_complex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::mahler_oracle;
    use crate::quadrature::QuadratureConfig;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn lehmer() -> IntPoly {
        ip(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    #[test]
    fn totient_and_cyclotomic_polys() {
        assert_eq!(
            (1..=12).map(euler_phi).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        );
        assert_eq!(cyclotomic_poly(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ip(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ip(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(8), ip(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), ip(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of modulus 2
        assert_eq!(cyclotomic_poly(105).height(), BigInt::from(2));
        for m in 1..=30 {
            assert_eq!(cyclotomic_poly(m).degree(), euler_phi(m));
        }
    }

    #[test]
    fn table_is_complete() {
        let t = CyclotomicTable::new(8);
        let ms: Vec<usize> = t.entries().iter().map(|(m, _)| *m).collect();
        let expected: Vec<usize> = (1..=128).filter(|&m| euler_phi(m) <= 8).collect();
        assert_eq!(ms, expected);
        for (m, phi) in t.entries() {
            assert_eq!(*phi, cyclotomic_poly(*m));
        }
    }

    #[test]
    fn is_cyclotomic_examples() {
        assert!(is_cyclotomic(&ip(&[1, 1, 1])));
        assert!(!is_cyclotomic(&lehmer()));
        assert!(!is_cyclotomic(&ip(&[-2, 1])));
        // repeated and signed products
        assert!(is_cyclotomic(&ip(&[1, -1, -1, 1])));
        assert!(is_cyclotomic(&ip(&[-1, 0, 0, 0, -1])));
        assert!(is_cyclotomic(&(&cyclotomic_poly(7) * &cyclotomic_poly(9))));
        // all roots on the circle but not monic
        assert!(!is_cyclotomic(&ip(&[2, 1, 2])));
        assert!(!is_cyclotomic(&ip(&[1, -1, -1])));
        // agrees with "divides z^m − 1" on squarefree monic inputs
        for m in 1..=12 {
            assert!(is_cyclotomic(&IntPoly::x_pow_minus_one(m)));
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(&ip(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.kind, Kind::Cyclotomic);
        assert!(c.areal_is_one && c.mahler_is_one);

        let c = classify(&ip(&[-1, -1, 1])).unwrap();
        assert_eq!(c.kind, Kind::HasInteriorRoots);
        assert!(!c.areal_is_one);
        let w = c.witness.unwrap();
        assert!((w.norm() - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);

        let c = classify(&ip(&[-3, 0, 1])).unwrap();
        assert_eq!(c.kind, Kind::NoRootsInDisk);
        assert!((c.areal - 3.0).abs() < 1e-12 && (c.mahler - 3.0).abs() < 1e-12);
        assert!(!c.areal_is_one);

        assert!(classify(&ip(&[0, 1])).is_err());
    }

    #[test]
    fn cyclotomic_polys_classify_as_cyclotomic() {
        for m in 1..=30 {
            let c = classify(&cyclotomic_poly(m)).unwrap();
            assert_eq!(c.kind, Kind::Cyclotomic, "Φ_{m}");
            assert!((c.areal - 1.0).abs() <= UNIT_TOLERANCE);
            assert!((c.mahler - 1.0).abs() <= UNIT_TOLERANCE);
        }
    }

    #[test]
    fn decode_enumerates_each_vector_once() {
        let h = 2;
        for d in 1..=3 {
            let count = 2 * h as u64 * h as u64 * (2 * h as u64 + 1).pow(d as u32 - 1);
            let mut seen: Vec<Vec<i64>> = (0..count).map(|i| decode(i, d, h)).collect();
            for c in &seen {
                assert!(c[0] != 0 && c[d] > 0 && c.iter().all(|a| a.abs() <= h));
            }
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len() as u64, count);
        }
        assert_eq!(enumeration_size(2, 1), 4 + 12);
    }

    #[test]
    fn symmetry_keeps_exactly_one_per_orbit() {
        // z − 1 and z + 1 form one orbit under z ↦ −z (after sign normalization)
        assert_ne!(is_canonical(&[-1, 1]), is_canonical(&[1, 1]));
        // z² + 1 is its own partner
        assert!(is_canonical(&[1, 0, 1]));
        assert!(is_canonical(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
    }

    #[test]
    fn search_guards() {
        assert!(matches!(
            lehmer_search(SearchOptions::new(13, 1)),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            lehmer_search(SearchOptions::new(4, 3)),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            lehmer_search(SearchOptions::new(12, 2)),
            Err(Error::BudgetExceeded { .. })
        ));
        let mut o = SearchOptions::new(3, 1);
        o.cap = 10;
        assert!(matches!(
            lehmer_search(o),
            Err(Error::BudgetExceeded { size: 52, cap: 10 })
        ));
    }

    #[test]
    fn degree_two_search_matches_brute_force() {
        let records = lehmer_search(SearchOptions::new(2, 1)).unwrap();
        for w in records.windows(2) {
            assert!(w[0].areal <= w[1].areal);
        }
        let best = minimal_non_cyclotomic(&records, 1)[0].mahler;
        // brute force without symmetry reduction, measures by quadrature
        let cfg = QuadratureConfig::default();
        let mut oracle_best = f64::INFINITY;
        for a0 in [-1i64, 1] {
            for a1 in -1..=1 {
                for a2 in -1..=1 {
                    let p = ip(&[a0, a1, a2]);
                    if p.degree() == 0 || is_cyclotomic(&p) {
                        continue;
                    }
                    oracle_best = oracle_best.min(mahler_oracle(&p.to_complex(), &cfg).unwrap());
                }
            }
        }
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((best - golden).abs() < 1e-12);
        assert!((oracle_best - golden).abs() < 1e-3);
    }

    #[test]
    fn search_records_satisfy_bounds_and_kronecker() {
        let records = lehmer_search(SearchOptions::new(6, 1)).unwrap();
        for r in &records {
            assert!(r.areal >= 1.0 - UNIT_TOLERANCE);
            assert!(r.mahler >= r.areal * (1.0 - 1e-12));
            let areal_one = (r.areal - 1.0).abs() <= UNIT_TOLERANCE;
            assert_eq!(areal_one, r.is_cyclotomic, "{}", r.poly);
        }
    }

    #[test]
    fn family_value_examples() {
        let v = family_values(BuiltinFamily::NznMinus1, 2).unwrap();
        assert!((v.mahler - 2.0).abs() < 1e-15);
        assert!((v.areal - 2.0 * (-0.5f64).exp()).abs() < 1e-15);

        let v = family_values(BuiltinFamily::Reciprocal, 3).unwrap();
        assert!((v.mahler - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);

        let v = family_values(BuiltinFamily::NznMinus1, 10_000).unwrap();
        assert!((v.areal - 1.0).abs() < 1e-2);
        assert!(family_values(BuiltinFamily::NznMinus1, 1).is_err());
    }

    #[test]
    fn family_values_match_roots() {
        for fam in [BuiltinFamily::NznMinus1, BuiltinFamily::Reciprocal] {
            for n in [2usize, 3, 5, 10, 37, 100] {
                let a = family_values(fam, n).unwrap();
                let b = family_values_from_roots(fam, n).unwrap();
                assert!((a.mahler - b.mahler).abs() <= 1e-8 * a.mahler, "{fam:?} {n}");
                assert!((a.areal - b.areal).abs() <= 1e-8 * a.areal, "{fam:?} {n}");
            }
        }
    }

    #[test]
    fn nzn_areal_tends_to_one_at_rate() {
        for n in (10..=1000).step_by(7) {
            let v = family_values(BuiltinFamily::NznMinus1, n).unwrap();
            let ln = (n as f64).ln();
            assert!(v.log_areal.abs() <= 5.0 * ln * ln / n as f64, "n={n}");
        }
    }
}
