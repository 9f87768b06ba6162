//! Width-4 interface regions used by the generating-function analysis.
//!
//! Each kind is a 4-row region whose row `r` spans columns `1..=3t + e_r`,
//! for a fixed offset profile `e`. The straight interface is the plain
//! `4 x 3t` rectangle; the two jogged profiles were selected from the
//! monotone candidates by matching their count sequences against the known
//! series (see `tests/interfaces.rs`).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::board::Cell;
use crate::enumerate::{profile, TileMix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum InterfaceKind {
    Straight,
    DeepJog,
    ShallowJog,
}

impl InterfaceKind {
    pub const ALL: [InterfaceKind; 3] =
        [InterfaceKind::Straight, InterfaceKind::DeepJog, InterfaceKind::ShallowJog];

    /// Row-length offsets relative to `3t`, top row first.
    pub fn profile(self) -> [i64; 4] {
        match self {
            InterfaceKind::Straight => [0, 0, 0, 0],
            InterfaceKind::DeepJog => [-1, -1, 1, 1],
            InterfaceKind::ShallowJog => [1, 1, 2, 2],
        }
    }
}

/// Row lengths of the region for a profile at parameter `t`, or `None` when a
/// row would have negative length.
pub fn interface_board(profile: [i64; 4], t: u32) -> Option<[u32; 4]> {
    let mut lens = [0u32; 4];
    for (l, e) in lens.iter_mut().zip(profile) {
        *l = u32::try_from(3 * t as i64 + e).ok()?;
    }
    Some(lens)
}

/// Tromino tilings of a left-justified 4-row region with the given row lengths.
pub fn count_rows(lens: [u32; 4]) -> BigUint {
    let width = lens.iter().copied().max().unwrap_or(0);
    if width == 0 {
        return BigUint::one();
    }
    let blocked: Vec<Cell> = (1..=4u32)
        .flat_map(|r| (lens[r as usize - 1] + 1..=width).map(move |c| Cell::new(r, c)))
        .collect();
    profile::count_region(4, width, &blocked, TileMix::Tromino).expect("height 4 is within the cap")
}

/// Tromino tilings of an arbitrary offset profile at parameter `t`.
pub fn count_profile(profile: [i64; 4], t: u32) -> BigUint {
    interface_board(profile, t).map(count_rows).unwrap_or_else(BigUint::zero)
}

/// Tromino tilings of the interface region of the given kind.
pub fn count_interface(kind: InterfaceKind, t: u32) -> BigUint {
    count_profile(kind.profile(), t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(kind: InterfaceKind) -> Vec<u64> {
        (0..6).map(|t| count_interface(kind, t).try_into().unwrap()).collect()
    }

    #[test]
    fn straight_is_the_rectangle() {
        assert_eq!(seq(InterfaceKind::Straight), [1, 4, 18, 88, 468, 2672]);
    }

    #[test]
    fn jogs() {
        assert_eq!(seq(InterfaceKind::DeepJog), [0, 1, 8, 58, 400, 2692]);
        assert_eq!(seq(InterfaceKind::ShallowJog), [0, 2, 20, 156, 1112, 7608]);
    }
}
