//! Closed forms for two-row boards with one missing domino.

use num_bigint::BigUint;

/// Tilings of `R(2, 3t+1)` minus a vertical domino: `(t+1) 2^t`.
pub fn t2_vertical(t: u32) -> BigUint {
    BigUint::from(t + 1) << t
}

/// Tilings of `R(2, 3t+1)` minus a horizontal domino: `t 2^t`.
pub fn t2_horizontal(t: u32) -> BigUint {
    BigUint::from(t) << t
}

/// All tromino tilings of `R(2, 3t+1)` with one domino removed anywhere:
/// `(2t+1) 2^t`.
pub fn t2_count_formula(t: u32) -> BigUint {
    BigUint::from(2 * t + 1) << t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(t2_count_formula(1), BigUint::from(6u32));
        assert_eq!(t2_vertical(1), BigUint::from(4u32));
        assert_eq!(t2_horizontal(1), BigUint::from(2u32));
        assert_eq!(t2_count_formula(2), BigUint::from(20u32));
        assert_eq!(t2_count_formula(10), BigUint::from(21504u32));
        for t in 1..40 {
            assert_eq!(t2_vertical(t) + t2_horizontal(t), t2_count_formula(t));
        }
    }
}
