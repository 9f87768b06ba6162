//! Growth constant of width-4 tiling counts.

use serde::{Deserialize, Serialize};

/// Largest real root of `λ^3 - 10λ^2 + 22λ + 4`, the reciprocal of the
/// smallest root of the denominator of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthConstant {
    pub value: f64,
    /// Cubic coefficients, leading first.
    pub cubic: [f64; 4],
}

pub const CUBIC: [f64; 4] = [1.0, -10.0, 22.0, 4.0];

/// Reference digits of the constant.
pub const REFERENCE_DIGITS: &str = "6.54560770847481152029";

impl GrowthConstant {
    pub fn residual(&self) -> f64 {
        cubic_at(self.value).0.abs()
    }
}

fn cubic_at(x: f64) -> (f64, f64) {
    let [a, b, c, d] = CUBIC;
    (((a * x + b) * x + c) * x + d, (3.0 * a * x + 2.0 * b) * x + c)
}

/// Newton's method from 10; the cubic is convex to the right of its largest
/// root, so the iteration decreases monotonically onto it.
pub fn growth_constant() -> GrowthConstant {
    let mut x = 10.0_f64;
    for _ in 0..100 {
        let (f, df) = cubic_at(x);
        let step = f / df;
        x -= step;
        if step.abs() < 1e-12 {
            break;
        }
    }
    GrowthConstant { value: x, cubic: CUBIC }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_and_residual() {
        let g = growth_constant();
        let reference: f64 = REFERENCE_DIGITS.parse().unwrap();
        assert!((g.value - reference).abs() < 5e-13, "{}", g.value);
        assert!(g.residual() < 1e-9);
        assert_eq!(format!("{:.12}", g.value), format!("{reference:.12}"));
    }
}
