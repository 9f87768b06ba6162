//! Integer polynomials in `z` and rational generating functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients in ascending powers of `z`, trailing zeros trimmed. JSON is
/// a list of decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw.iter().map(|c| c.parse().map_err(serde::de::Error::custom)).collect::<std::result::Result<_, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `c z^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        Self::new(v)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + to_f64(c))
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::new(self.coeffs.iter().map(|c| c * &k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

fn to_f64(c: &BigInt) -> f64 {
    c.to_string().parse().unwrap_or(f64::NAN)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// `numerator / denominator` as a formal power series in `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGF {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RationalGF {
    /// Fails when the denominator has a zero constant term.
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::NoninvertibleConstantTerm);
        }
        Ok(RationalGF { numerator, denominator })
    }

    /// Multiplies the numerator by a polynomial.
    pub fn times_poly(&self, p: &IntPolynomial) -> RationalGF {
        RationalGF { numerator: &self.numerator * p, denominator: self.denominator.clone() }
    }

    /// Sum; equal denominators are kept as they are rather than squared.
    pub fn plus(&self, other: &RationalGF) -> RationalGF {
        if self.denominator == other.denominator {
            return RationalGF {
                numerator: &self.numerator + &other.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalGF {
            numerator: &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn times(&self, other: &RationalGF) -> RationalGF {
        RationalGF {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }

    /// First `terms + 1` coefficients, which must be integers.
    pub fn series(&self, terms: usize) -> Result<Vec<BigInt>> {
        gf_series(self, terms)
    }

    /// Whether both represent the same power series (cross-multiplication).
    pub fn same_series(&self, other: &RationalGF) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Taylor coefficients `a_0..=a_terms` of `g`, exact and rational, from the
/// recurrence `d_0 a_k = p_k - sum_{i>=1} d_i a_{k-i}`.
pub fn gf_series_rational(g: &RationalGF, terms: usize) -> Result<Vec<BigRational>> {
    let d0 = g.denominator.coeff(0);
    if d0.is_zero() {
        return Err(Error::NoninvertibleConstantTerm);
    }
    let d0 = BigRational::from_integer(d0);
    let mut out: Vec<BigRational> = Vec::with_capacity(terms + 1);
    for k in 0..=terms {
        let mut acc = BigRational::from_integer(g.numerator.coeff(k));
        for (i, di) in g.denominator.coeffs().iter().enumerate().skip(1).take(k) {
            acc -= BigRational::from_integer(di.clone()) * &out[k - i];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}

/// Integer Taylor coefficients of `g`. Errors with
/// [`Error::NonIntegralSeries`] if any of the requested coefficients is not an
/// integer (possible only when the denominator's constant term is not ±1).
pub fn gf_series(g: &RationalGF, terms: usize) -> Result<Vec<BigInt>> {
    let d0 = g.denominator.coeff(0);
    if d0.is_zero() {
        return Err(Error::NoninvertibleConstantTerm);
    }
    if d0.abs().is_one() {
        // Pure integer recurrence.
        let mut out: Vec<BigInt> = Vec::with_capacity(terms + 1);
        for k in 0..=terms {
            let mut acc = g.numerator.coeff(k);
            for (i, di) in g.denominator.coeffs().iter().enumerate().skip(1).take(k) {
                acc -= di * &out[k - i];
            }
            out.push(acc * &d0);
        }
        return Ok(out);
    }
    gf_series_rational(g, terms)?
        .into_iter()
        .enumerate()
        .map(|(k, q)| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::NonIntegralSeries { index: k, value: q.to_string() })
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn arithmetic_and_display() {
        let p = IntPolynomial::from_i64(&[1, -2]);
        let q = IntPolynomial::from_i64(&[0, 3, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!((&p * &q).to_string(), "3z - 6z^2");
        assert_eq!((&p - &p), IntPolynomial::zero());
        assert_eq!(p.pow(2), IntPolynomial::from_i64(&[1, -4, 4]));
        assert_eq!(IntPolynomial::from_i64(&[-1, 0, 1]).to_string(), "-1 + z^2");
        assert!((p.eval(0.25) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn geometric_series() {
        let g = RationalGF::new(IntPolynomial::one(), IntPolynomial::from_i64(&[1, -2])).unwrap();
        assert_eq!(ints(&gf_series(&g, 3).unwrap()), [1, 2, 4, 8]);
        let neg = RationalGF::new(IntPolynomial::one(), IntPolynomial::from_i64(&[-1, 1])).unwrap();
        assert_eq!(ints(&gf_series(&neg, 2).unwrap()), [-1, -1, -1]);
    }

    #[test]
    fn non_integral_and_noninvertible() {
        let half = RationalGF::new(IntPolynomial::one(), IntPolynomial::from_i64(&[2, -1])).unwrap();
        assert!(matches!(gf_series(&half, 2), Err(Error::NonIntegralSeries { index: 0, .. })));
        let q = gf_series_rational(&half, 1).unwrap();
        assert_eq!(q[1].to_string(), "1/4");
        let two = RationalGF::new(IntPolynomial::from_i64(&[2]), IntPolynomial::from_i64(&[2, -2])).unwrap();
        assert_eq!(ints(&gf_series(&two, 2).unwrap()), [1, 1, 1]);
        assert_eq!(
            RationalGF::new(IntPolynomial::one(), IntPolynomial::from_i64(&[0, 1])),
            Err(Error::NoninvertibleConstantTerm)
        );
    }

    #[test]
    fn sums_share_equal_denominators() {
        let d = IntPolynomial::from_i64(&[1, -1]);
        let a = RationalGF::new(IntPolynomial::one(), d.clone()).unwrap();
        assert_eq!(a.plus(&a).denominator, d);
        let b = RationalGF::new(IntPolynomial::one(), IntPolynomial::from_i64(&[1, 1])).unwrap();
        let s = a.plus(&b);
        assert_eq!(ints(&s.series(3).unwrap()), [2, 0, 2, 0]);
        assert!(a.times(&a).same_series(&a.times_poly(&IntPolynomial::one()).times(&a)));
    }
}
