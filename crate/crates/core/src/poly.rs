//! Dense univariate polynomials with complex (`ComplexPoly`) and exact integer
//! (`IntPoly`) coefficients, stored in ascending degree order.
//!
//! Both types keep a normalized representation: trailing zero coefficients are
//! stripped, so a nonzero polynomial always has a nonzero last coefficient and
//! the zero polynomial is the empty coefficient vector.
//!
//! The text format shared by the command line is a comma-separated list of
//! coefficients `a0,a1,...,an`; complex entries are written `re`, `re+imi`,
//! `re-imi` or `imi`. `"-1,0,0,0,4"` is `4z^4 - 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest integer magnitude that converts to `f64` without rounding.
const EXACT_F64_INT: f64 = 9_007_199_254_740_992.0;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The monic polynomial with the given roots.
    pub fn from_roots(leading: Complex64, roots: &[Complex64]) -> Self {
        let mut coeffs = vec![leading];
        for &r in roots {
            let mut next = vec![Complex64::zero(); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
    }

    /// Value of `p(z)` and `p'(z)` in one Horner pass.
    pub fn evaluate_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `sum |a_k| r^k`, the magnitude scale of Horner rounding at modulus `r`.
    pub fn abs_sum_at(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn multiply(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Complex64::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// `z^n p(1/z)` with `n = degree`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().copied().collect())
    }

    /// Exact integer copy when every coefficient is a real integer of magnitude
    /// at most 2^53.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| {
                let exact = c.im == 0.0 && c.re.fract() == 0.0 && c.re.abs() <= EXACT_F64_INT;
                exact.then(|| BigInt::from(c.re as i64))
            })
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }
}

impl Add for &ComplexPoly {
    type Output = ComplexPoly;

    fn add(self, rhs: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ComplexPoly {
    type Output = ComplexPoly;

    fn sub(self, rhs: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &ComplexPoly {
    type Output = ComplexPoly;

    fn mul(self, rhs: &ComplexPoly) -> ComplexPoly {
        self.multiply(rhs)
    }
}

impl fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|&c| format_complex(c)).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ComplexPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = split_entries(s)?
            .into_iter()
            .map(parse_complex)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

/// Univariate polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `z^m - 1`
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[m] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn to_complex(&self) -> ComplexPoly {
        ComplexPoly::new(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(-z)`
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `z^n p(1/z)`
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Largest coefficient magnitude.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero polynomial");
        if self.coeffs.len() < divisor.coeffs.len() {
            return self.clone();
        }
        let dd = divisor.degree();
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut steps = self.degree() - dd + 1;
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let t = rem[top].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + j] -= &t * dc;
            }
            steps -= 1;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        let mut r = Self::new(rem);
        if steps > 0 {
            r = r.scale(&num_traits::pow(lc, steps));
        }
        r
    }

    /// Quotient when `divisor` divides `self` exactly in Z[z], otherwise `None`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Long division over the integers. Returns `None` when some quotient
    /// coefficient is not integral.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < divisor.coeffs.len() {
            return Some((Self::zero(), self.clone()));
        }
        let dd = divisor.degree();
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = split_entries(s)?
            .into_iter()
            .map(|e| {
                e.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("not an integer coefficient: {e:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

fn split_entries(s: &str) -> Result<Vec<String>> {
    let cleaned = s.replace('\u{2212}', "-");
    if cleaned.trim().is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    cleaned
        .split(',')
        .map(|e| {
            let e: String = e.chars().filter(|c| !c.is_whitespace()).collect();
            if e.is_empty() {
                Err(Error::Parse(format!("empty coefficient in {s:?}")))
            } else {
                Ok(e)
            }
        })
        .collect()
}

/// Parses `re`, `re+imi`, `re-imi`, `imi`, `i`, `-i`.
pub fn parse_complex(entry: impl AsRef<str>) -> Result<Complex64> {
    let s: String = entry
        .as_ref()
        .replace('\u{2212}', "-")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let bad = || Error::Parse(format!("not a complex coefficient: {s:?}"));
    let real = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let imag = |t: &str| match t {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => t.parse::<f64>().map_err(|_| bad()),
    };
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(real(&s)?, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(real(&body[..k])?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

pub fn format_complex(c: Complex64) -> String {
    // adding +0.0 turns -0.0 into 0.0
    let c = Complex64::new(c.re + 0.0, c.im + 0.0);
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.im < 0.0 {
        format!("{}{}i", c.re, c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn lehmer() -> ComplexPoly {
        ComplexPoly::from_real(&[1., 1., 0., -1., -1., -1., -1., -1., 0., 1., 1.])
    }

    #[test]
    fn evaluate_examples() {
        let p = ComplexPoly::from_real(&[-2., 0., 1.]);
        assert_eq!(p.evaluate(c(0., 0.)), c(-2., 0.));
        assert_eq!(lehmer().evaluate(c(1., 0.)), c(-1., 0.));
        let q = ComplexPoly::from_real(&[1., 3.]);
        assert_eq!(q.evaluate(c(0., 1.)), c(1., 3.));
        assert_eq!(ComplexPoly::zero().evaluate(c(3., 1.)), c(0., 0.));
    }

    #[test]
    fn multiply_examples() {
        let a = ComplexPoly::from_real(&[-1., 1.]);
        let b = ComplexPoly::from_real(&[1., 1.]);
        assert_eq!(a.multiply(&b), ComplexPoly::from_real(&[-1., 0., 1.]));
        let z = ComplexPoly::from_real(&[0., 1.]);
        assert_eq!(&z * &z, ComplexPoly::from_real(&[0., 0., 1.]));
        let p = ComplexPoly::from_real(&[1., 2.]);
        let q = ComplexPoly::from_real(&[-1., 3.]);
        assert_eq!(p.multiply(&q), ComplexPoly::from_real(&[-1., 1., 6.]));
    }

    #[test]
    fn derivative_examples() {
        let z2 = ComplexPoly::monomial(c(1., 0.), 2);
        assert_eq!(z2.derivative(), ComplexPoly::from_real(&[0., 2.]));
        let mut v = vec![0.0; 11];
        v[10] = 1.0;
        v[1] = 1.0;
        let mut w = vec![0.0; 10];
        w[9] = 10.0;
        w[0] = 1.0;
        assert_eq!(ComplexPoly::from_real(&v).derivative(), ComplexPoly::from_real(&w));
        assert!(ComplexPoly::from_real(&[5.]).derivative().is_zero());
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let p = ComplexPoly::from_real(&[1., 2., 0., 0.]);
        assert_eq!(p.degree(), 1);
        assert!(ComplexPoly::from_real(&[0., 0.]).is_zero());
        assert_eq!(IntPoly::from_i64s(&[3, 0, 0]).degree(), 0);
    }

    #[test]
    fn parse_text_format() {
        let p: ComplexPoly = "-1,0,0,0,4".parse().unwrap();
        assert_eq!(p, ComplexPoly::from_real(&[-1., 0., 0., 0., 4.]));
        let p: ComplexPoly = "\u{2212}1, 2.5+3i, -1e-3-2i, i, -i, 4i".parse().unwrap();
        assert_eq!(
            p.coeffs(),
            &[c(-1., 0.), c(2.5, 3.), c(-1e-3, -2.), c(0., 1.), c(0., -1.), c(0., 4.)]
        );
        let q: ComplexPoly = "1e-2+2e+1i".parse().unwrap();
        assert_eq!(q.coeffs(), &[c(0.01, 20.)]);
        assert!("".parse::<ComplexPoly>().is_err());
        assert!("1,,2".parse::<ComplexPoly>().is_err());
        assert!("1,x".parse::<ComplexPoly>().is_err());
        let ip: IntPoly = "-1,0,123456789012345678901234567890".parse().unwrap();
        assert_eq!(ip.leading().to_string(), "123456789012345678901234567890");
        assert!("1.5".parse::<IntPoly>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let p: ComplexPoly = "1,-2.5+3i,0.25-1i".parse().unwrap();
        assert_eq!(p.to_string().parse::<ComplexPoly>().unwrap(), p);
        let ip = IntPoly::from_i64s(&[1, -1, 0, 7]);
        assert_eq!(ip.to_string(), "1,-1,0,7");
    }

    #[test]
    fn int_division_and_pseudo_remainder() {
        let f = IntPoly::x_pow_minus_one(6);
        let g = IntPoly::from_i64s(&[1, 1, 1]);
        let q = f.div_exact(&g).unwrap();
        assert_eq!(&q * &g, f);
        assert!(IntPoly::from_i64s(&[1, 0, 1])
            .div_exact(&IntPoly::from_i64s(&[0, 2]))
            .is_none());
        // lc(d)^(2) * (z^2 + 1) mod (2z + 1) = 4 * (1/4 + 1) = 5
        let r = IntPoly::from_i64s(&[1, 0, 1]).pseudo_rem(&IntPoly::from_i64s(&[1, 2]));
        assert_eq!(r, IntPoly::from_i64s(&[5]));
    }

    #[test]
    fn content_and_primitive_part() {
        let p = IntPoly::from_i64s(&[6, -4, -2]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive_part(), IntPoly::from_i64s(&[-3, 2, 1]));
    }

    #[test]
    fn from_roots_reconstructs() {
        let p = ComplexPoly::from_roots(c(2., 0.), &[c(1., 0.), c(-1., 0.)]);
        assert_eq!(p, ComplexPoly::from_real(&[-2., 0., 2.]));
    }

    #[test]
    fn to_int_poly_requires_exact_integers() {
        assert!(ComplexPoly::from_real(&[1., 2.]).to_int_poly().is_some());
        assert!(ComplexPoly::from_real(&[1., 2.5]).to_int_poly().is_none());
        assert!(ComplexPoly::new(vec![c(1., 1.)]).to_int_poly().is_none());
    }
}
