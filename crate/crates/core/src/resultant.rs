//! Exact resultants, discriminants and gcds over `Z[z]`.
//!
//! The resultant uses the subresultant pseudo-remainder sequence, which keeps
//! every intermediate polynomial in `Z[z]` with controlled coefficient growth.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

fn pow(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

fn divide_all(p: &IntPoly, d: &BigInt) -> IntPoly {
    IntPoly::new(p.coeffs().iter().map(|c| c / d).collect())
}

/// Resultant of `a` and `b` over the integers.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = BigInt::one();
    if a.degree() < b.degree() {
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.degree() == 0 {
        return sign * pow(&b.leading(), a.degree());
    }

    let ca = a.content();
    let cb = b.content();
    let scale = pow(&ca, b.degree()) * pow(&cb, a.degree());
    a = divide_all(&a, &ca);
    b = divide_all(&b, &cb);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree() - b.degree();
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        b = divide_all(&r, &(&g * pow(&h, delta)));
        g = a.leading();
        if delta > 0 {
            h = pow(&g, delta) / pow(&h, delta - 1);
        }
        if b.degree() == 0 {
            break;
        }
    }
    let n = a.degree();
    let last = pow(&b.leading(), n) / pow(&h, n - 1);
    sign * scale * last
}

/// Discriminant `a_n^(2n-2) prod_{j<k} (z_j - z_k)^2`, computed as
/// `(-1)^(n(n-1)/2) Res(p, p') / a_n`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt> {
    let n = p.degree();
    if p.is_zero() || n < 2 {
        return Err(Error::InvalidInput(format!("discriminant needs degree >= 2, got {n}")));
    }
    let res = resultant(p, &p.derivative());
    let d = res / p.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// gcd over `Q[z]`, returned primitive with positive leading coefficient.
pub fn primitive_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

/// Squarefree decomposition `f = c * prod q_i^i`; returns the nonconstant
/// `(q_i, i)`, each `q_i` primitive and squarefree.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    if f.is_zero() || f.degree() == 0 {
        return Vec::new();
    }
    let mut chain = vec![f.primitive_part()];
    while chain.last().is_some_and(|p| p.degree() > 0) {
        let last = chain.last().unwrap();
        let g = primitive_gcd(last, &last.derivative());
        chain.push(g);
    }
    // s_i collects the factors of multiplicity >= i
    let s: Vec<IntPoly> = chain
        .windows(2)
        .map(|w| {
            w[0].div_exact(&w[1])
                .expect("gcd divides its argument")
                .primitive_part()
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..s.len() {
        let q = match s.get(i + 1) {
            Some(next) => s[i].div_exact(next).expect("nested squarefree parts"),
            None => s[i].clone(),
        };
        if q.degree() > 0 {
            out.push((q.primitive_part(), i + 1));
        }
    }
    out
}

pub fn is_squarefree(f: &IntPoly) -> bool {
    f.degree() < 2 || primitive_gcd(f, &f.derivative()).degree() == 0
}

/// Sign of an integer as `-1`, `0` or `1`.
pub fn signum(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Sylvester matrix determinant by fraction-free (Bareiss) elimination.
    fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let (m, n) = (a.degree(), b.degree());
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (k, c) in a.coeffs().iter().rev().enumerate() {
                mat[row][row + k] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in b.coeffs().iter().rev().enumerate() {
                mat[n + row][row + k] = c.clone();
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size {
            if mat[k][k].is_zero() {
                let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                mat.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = v / &prev;
                }
            }
            prev = mat[k][k].clone();
        }
        sign * mat[size - 1][size - 1].clone()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&ip(&[1, 1, 1])).unwrap(), BigInt::from(-3));
        assert_eq!(discriminant(&ip(&[-2, 0, 1])).unwrap(), BigInt::from(8));
        assert_eq!(discriminant(&ip(&[1, -2, 1])).unwrap(), BigInt::zero());
        assert!(discriminant(&ip(&[1, 1])).is_err());
    }

    #[test]
    fn discriminant_of_cubic_matches_formula() {
        // z^3 + p z + q has discriminant -4p^3 - 27q^2
        for (p, q) in [(-1i64, 1i64), (2, -3), (0, 5), (-7, 0)] {
            let d = discriminant(&ip(&[q, p, 0, 1])).unwrap();
            assert_eq!(d, BigInt::from(-4 * p * p * p - 27 * q * q));
        }
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(z - a, z - b) = b - a ... with sign convention a_m^n prod g(roots f)
        assert_eq!(resultant(&ip(&[-2, 1]), &ip(&[-5, 1])), BigInt::from(-3));
        assert_eq!(resultant(&ip(&[-2, 1]), &ip(&[7])), BigInt::from(7));
        assert_eq!(resultant(&ip(&[1, 0, 1]), &ip(&[3])), BigInt::from(9));
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (z-1)^2 (z+1)
        let f = ip(&[1, -1, -1, 1]);
        let d = squarefree_decomposition(&f);
        assert_eq!(d, vec![(ip(&[1, 1]), 1), (ip(&[-1, 1]), 2)]);
        // (1+z)^8
        let mut g = IntPoly::one();
        for _ in 0..8 {
            g = &g * &ip(&[1, 1]);
        }
        assert_eq!(squarefree_decomposition(&g), vec![(ip(&[1, 1]), 8)]);
        // 3 (z^2+z+1)^2 z
        let h = &(&ip(&[0, 3]) * &ip(&[1, 1, 1])) * &ip(&[1, 1, 1]);
        assert_eq!(
            squarefree_decomposition(&h),
            vec![(ip(&[0, 1]), 1), (ip(&[1, 1, 1]), 2)]
        );
        assert!(is_squarefree(&ip(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])));
        assert!(!is_squarefree(&f));
    }

    #[test]
    fn gcd_examples() {
        let a = &ip(&[-1, 1]) * &ip(&[2, 0, 1]);
        let b = &ip(&[-1, 1]) * &ip(&[3, 1]);
        assert_eq!(primitive_gcd(&a, &b), ip(&[-1, 1]));
        assert_eq!(primitive_gcd(&ip(&[2, 4]), &ip(&[0, 0, 6])).degree(), 0);
    }

    fn small_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
            .prop_map(|v| IntPoly::from_i64s(&v))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn subresultant_matches_sylvester_determinant(a in small_poly(6, 9), b in small_poly(6, 9)) {
            prop_assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b));
        }

        #[test]
        fn discriminant_matches_root_product(p in small_poly(8, 5)) {
            prop_assume!(p.degree() >= 2);
            let d = discriminant(&p).unwrap();
            let rs = crate::roots::find_roots(&p.to_complex()).unwrap();
            let z = rs.roots();
            let n = z.len();
            let mut log_mag = (2 * n - 2) as f64 * rs.leading().norm().ln();
            for j in 0..n {
                for k in j + 1..n {
                    log_mag += 2.0 * (z[j] - z[k]).norm().ln();
                }
            }
            if d.is_zero() {
                // a repeated root shows up as a (near-)coincident pair
                prop_assert!(log_mag < -10.0 || !log_mag.is_finite());
            } else {
                let exact = d.abs().to_f64().unwrap().ln();
                let numeric = log_mag.exp();
                let rel = (numeric - d.abs().to_f64().unwrap()).abs() / d.abs().to_f64().unwrap();
                prop_assert!(rel <= 1e-4, "disc {} exact log {} numeric log {}", d, exact, log_mag);
            }
        }
    }
}
