//! Exact tiling counts (big integers throughout) and small-board enumeration.

mod interface;
mod profile;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use interface::{count_interface, count_profile, count_rows, interface_board, InterfaceKind};
pub use profile::WIDTH_CAP;

use crate::board::{DeficientBoard, Rect, Tiling};
use crate::construct::search::{self, DEFAULT_CELL_CAP};
use crate::error::{Error, Result};

pub type BigCount = BigUint;

/// Which tiles a count or search may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TileMix {
    #[serde(rename = "tromino")]
    Tromino,
    /// Trominoes plus exactly one domino.
    #[serde(rename = "tromino+1domino")]
    TrominoPlusOneDomino,
    #[serde(rename = "domino")]
    Domino,
}

impl std::str::FromStr for TileMix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tromino" => Ok(TileMix::Tromino),
            "tromino+1domino" => Ok(TileMix::TrominoPlusOneDomino),
            "domino" => Ok(TileMix::Domino),
            other => Err(Error::BadInput(format!("unknown tile mix {other:?}"))),
        }
    }
}

/// Number of right-tromino tilings of the board.
pub fn count_tromino(b: &DeficientBoard) -> Result<BigCount> {
    profile::count(b, TileMix::Tromino)
}

/// Number of tilings of the full rectangle by trominoes and exactly one domino.
pub fn count_tromino_plus_one_domino(r: Rect) -> Result<BigCount> {
    require_domino_area(r)?;
    profile::count(&DeficientBoard::full(r), TileMix::TrominoPlusOneDomino)
}

/// Same quantity as [`count_tromino_plus_one_domino`], computed as a sum of
/// tromino counts over every position of the removed domino.
pub fn count_tromino_plus_one_domino_by_sum(r: Rect) -> Result<BigCount> {
    require_domino_area(r)?;
    let mut total = BigUint::default();
    for d in r.dominoes() {
        total += count_tromino(&DeficientBoard::new(r, d)?)?;
    }
    Ok(total)
}

/// The outer sum split by domino orientation: `(vertical, horizontal)`.
pub fn count_by_domino_orientation(r: Rect) -> Result<(BigCount, BigCount)> {
    require_domino_area(r)?;
    let (mut v, mut h) = (BigUint::default(), BigUint::default());
    for d in r.dominoes() {
        let n = count_tromino(&DeficientBoard::new(r, d)?)?;
        if d[0].col == d[1].col {
            v += n;
        } else {
            h += n;
        }
    }
    Ok((v, h))
}

/// Number of domino tilings of the rectangle.
pub fn count_domino(r: Rect) -> Result<BigCount> {
    profile::count(&DeficientBoard::full(r), TileMix::Domino)
}

/// Counts tilings of an arbitrary board with an arbitrary tile mix.
pub fn count_with(b: &DeficientBoard, mix: TileMix) -> Result<BigCount> {
    profile::count(b, mix)
}

/// All tromino tilings of the board in deterministic search order.
pub fn enumerate_tilings(b: &DeficientBoard, limit: Option<usize>) -> Result<Vec<Tiling>> {
    search::enumerate_with(b, TileMix::Tromino, limit, DEFAULT_CELL_CAP)
}

pub fn enumerate_tilings_with(
    b: &DeficientBoard,
    mix: TileMix,
    limit: Option<usize>,
    cap: u64,
) -> Result<Vec<Tiling>> {
    search::enumerate_with(b, mix, limit, cap)
}

fn require_domino_area(r: Rect) -> Result<()> {
    if r.area() < 2 || !(r.area() - 2).is_multiple_of(3) {
        return Err(Error::Area(format!("3 does not divide {}·{} − 2", r.rows, r.cols)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(m: u32, n: u32) -> Rect {
        Rect::new(m, n).unwrap()
    }

    #[test]
    fn mixed_requires_area() {
        assert!(matches!(count_tromino_plus_one_domino(rect(3, 3)), Err(Error::Area(_))));
        assert!(matches!(count_tromino_plus_one_domino_by_sum(rect(2, 3)), Err(Error::Area(_))));
    }

    #[test]
    fn outer_sum_agrees_with_flag() {
        for (m, n) in [(2, 4), (2, 7), (4, 5), (5, 4), (4, 8), (5, 7), (7, 5)] {
            let r = rect(m, n);
            assert_eq!(count_tromino_plus_one_domino(r).unwrap(), count_tromino_plus_one_domino_by_sum(r).unwrap());
        }
    }

    #[test]
    fn orientation_split_for_two_rows() {
        let (v, h) = count_by_domino_orientation(rect(2, 7)).unwrap();
        assert_eq!((v, h), (BigUint::from(12u32), BigUint::from(8u32)));
    }

    #[test]
    fn enumeration_matches_count() {
        for (m, n, missing) in [(2, 4, vec![(1, 1), (2, 1)]), (4, 5, vec![(2, 3), (3, 3)]), (4, 6, vec![])] {
            let b = DeficientBoard::with_missing(m, n, &missing).unwrap();
            assert_eq!(
                BigUint::from(enumerate_tilings(&b, None).unwrap().len()),
                count_tromino(&b).unwrap()
            );
        }
        let b = DeficientBoard::with_missing(4, 5, &[(2, 3), (3, 3)]).unwrap();
        assert!(enumerate_tilings(&b, None).unwrap().is_empty());
    }

    #[test]
    fn tile_mix_parse() {
        assert_eq!("tromino+1domino".parse::<TileMix>().unwrap(), TileMix::TrominoPlusOneDomino);
        assert!("pentomino".parse::<TileMix>().is_err());
    }
}
