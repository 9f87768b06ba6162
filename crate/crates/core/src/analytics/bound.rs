//! Upper bound on mixed tilings through coloured domino tilings.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::board::Rect;
use crate::enumerate::{count_domino, count_tromino_plus_one_domino};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub m: u32,
    pub n: u32,
    /// `(4mn - 2) / 3`.
    pub exponent: u64,
    #[serde(with = "crate::analytics::decimal")]
    pub domino_wide: BigUint,
    #[serde(with = "crate::analytics::decimal")]
    pub domino_tall: BigUint,
    #[serde(with = "crate::analytics::decimal")]
    pub bound: BigUint,
}

/// `2^{(4mn-2)/3} * min(N_D(m, 2n), N_D(2m, n))` with exact domino counts.
pub fn upper_bound_detail(m: u32, n: u32) -> Result<UpperBound> {
    let area = m as u64 * n as u64;
    if area < 2 || !(area - 2).is_multiple_of(3) {
        return Err(Error::Area(format!("3 does not divide {m}·{n} − 2")));
    }
    let exponent = (4 * area - 2) / 3;
    let domino_wide = count_domino(Rect::new(m, 2 * n)?)?;
    let domino_tall = count_domino(Rect::new(2 * m, n)?)?;
    let bound = domino_wide.clone().min(domino_tall.clone()) << exponent;
    Ok(UpperBound { m, n, exponent, domino_wide, domino_tall, bound })
}

pub fn upper_bound_domino_deficient(m: u32, n: u32) -> Result<BigUint> {
    Ok(upper_bound_detail(m, n)?.bound)
}

/// The bound next to the exact count of mixed tilings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundComparison {
    #[serde(flatten)]
    pub bound: UpperBound,
    #[serde(with = "crate::analytics::decimal")]
    pub count: BigUint,
    pub holds: bool,
    /// `bound - count` when the bound holds.
    #[serde(with = "crate::analytics::decimal_opt")]
    pub margin: Option<BigUint>,
}

pub fn compare_bound(m: u32, n: u32) -> Result<BoundComparison> {
    let bound = upper_bound_detail(m, n)?;
    let count = count_tromino_plus_one_domino(Rect::new(m, n)?)?;
    let holds = count <= bound.bound;
    let margin = holds.then(|| &bound.bound - &count);
    Ok(BoundComparison { bound, count, holds, margin })
}
