//! The product formula for domino tilings of an even-sided rectangle.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Estimate of the number of domino tilings of `R(2m, 2n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KasteleynCount {
    pub m: u32,
    pub n: u32,
    /// Natural log of the product, accumulated term by term in `f64`.
    pub ln_value: f64,
    /// `exp(ln_value)`; may overflow to infinity for very large boards.
    pub value: f64,
    /// The product evaluated with 512-bit floats, rounded to the nearest integer.
    #[serde(with = "crate::analytics::decimal")]
    pub rounded: BigUint,
}

const PRECISION: usize = 512;

/// `4^{mn} prod_{j<=m} prod_{k<=n} (cos^2(j pi/(2m+1)) + cos^2(k pi/(2n+1)))`,
/// which counts domino tilings of `R(2m, 2n)`.
pub fn kasteleyn_count(m: u32, n: u32) -> KasteleynCount {
    let pi = std::f64::consts::PI;
    let terms: Vec<f64> = (1..=m)
        .flat_map(|j| (1..=n).map(move |k| (j, k)))
        .map(|(j, k)| {
            let a = (j as f64 * pi / (2 * m + 1) as f64).cos();
            let b = (k as f64 * pi / (2 * n + 1) as f64).cos();
            (a * a + b * b).ln()
        })
        .collect();
    let ln_value = (m as f64) * (n as f64) * 4f64.ln() + pairwise_sum(&terms);
    KasteleynCount { m, n, ln_value, value: ln_value.exp(), rounded: exact_rounded(m, n) }
}

fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => pairwise_sum(&xs[..n / 2]) + pairwise_sum(&xs[n / 2..]),
    }
}

fn exact_rounded(m: u32, n: u32) -> BigUint {
    let rm = RoundingMode::ToEven;
    let p = PRECISION;
    let mut cc = Consts::new().expect("constant cache");
    let pi = cc.pi(p, rm);
    let cos_sq = |i: u32, d: u32, cc: &mut Consts| {
        let x = pi.mul(&BigFloat::from_u32(i, p), p, rm).div(&BigFloat::from_u32(d, p), p, rm);
        let c = x.cos(p, rm, cc);
        c.mul(&c, p, rm)
    };
    let rows: Vec<BigFloat> = (1..=m).map(|j| cos_sq(j, 2 * m + 1, &mut cc)).collect();
    let cols: Vec<BigFloat> = (1..=n).map(|k| cos_sq(k, 2 * n + 1, &mut cc)).collect();
    let mut prod = BigFloat::from_u32(1, p);
    for a in &rows {
        for b in &cols {
            // 4 (a + b) per factor absorbs the 4^{mn} prefactor.
            let f = a.add(b, p, rm).mul(&BigFloat::from_u32(4, p), p, rm);
            prod = prod.mul(&f, p, rm);
        }
    }
    let half = BigFloat::from_f64(0.5, p);
    to_biguint(&prod.add(&half, p, rm).floor())
}

/// Converts a nonnegative integral float.
fn to_biguint(x: &BigFloat) -> BigUint {
    if x.is_zero() {
        return BigUint::default();
    }
    let (words, _, sign, exp, _) = x.as_raw_parts().expect("finite value");
    assert_eq!(sign, Sign::Pos, "product of positive factors");
    let mantissa = BigUint::from_slice(
        &words.iter().flat_map(|&w| [w as u32, (w >> 32) as u32]).collect::<Vec<u32>>(),
    );
    let bits = 64 * words.len() as i64;
    let shift = exp as i64 - bits;
    if shift >= 0 {
        mantissa << shift as u64
    } else {
        mantissa >> (-shift) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_boards() {
        let k = kasteleyn_count(1, 1);
        assert_eq!(k.rounded, BigUint::from(2u32));
        assert!((k.value - 2.0).abs() < 1e-12);
        assert_eq!(kasteleyn_count(2, 2).rounded, BigUint::from(36u32));
        assert_eq!(kasteleyn_count(4, 4).rounded, BigUint::from(12988816u32));
        assert_eq!(kasteleyn_count(0, 3).rounded, BigUint::from(1u32));
    }

    #[test]
    fn beyond_double_precision() {
        let k = kasteleyn_count(6, 6);
        assert_eq!(k.rounded.to_string(), "53060477521960000");
        let rel = (k.value - 53060477521960000.0).abs() / 53060477521960000.0;
        assert!(rel < 1e-9);
    }
}
