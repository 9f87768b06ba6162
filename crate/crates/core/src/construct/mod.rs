//! Explicit tilings: full rectangles, window decompositions over the base-case
//! table, and the exact-cover oracle.

pub mod base_cases;
pub mod full;
pub mod search;
mod window;

use serde::{Deserialize, Serialize};

use crate::board::{Cell, DeficientBoard, Rect, SymmetryOp, Tiling};
use crate::characterize::{classify, decide, Family, Verdict};
use crate::error::{Error, Result};

pub use full::tile_full_rect;
pub use search::{solve_exact, solve_exact_with};
use window::Catalog;

/// How one region of a decomposition was tiled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepRule {
    /// A grid of 3x2 (or 2x3) blocks.
    FullRectEq1,
    /// Part of a (6k) x odd rectangle: a gridded block beside a 3-column strip.
    FullRectEq2,
    /// Gridded part of a (9+6t) x odd rectangle.
    FullRectEq3,
    /// The special 9x5 tiling inside a (9+6t) x odd rectangle.
    R9x5Special,
    /// A base case used at its natural position.
    BaseCase { id: String },
    /// A base case moved by a row/column offset because the natural window
    /// held a locally bad position.
    ShiftRepair { id: String, drow: i64, dcol: i64 },
    /// A larger base case formed by joining a removed block to the window.
    JoinRepair { id: String, rows: u32, cols: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionStep {
    /// Top-left cell of the region.
    pub origin: Cell,
    pub rect: Rect,
    #[serde(flatten)]
    pub rule: StepRule,
}

impl DecompositionStep {
    fn transformed(&self, frame: Rect, op: SymmetryOp) -> DecompositionStep {
        let far = Cell::new(self.origin.row + self.rect.rows - 1, self.origin.col + self.rect.cols - 1);
        let (a, b) = (op.cell(frame, self.origin), op.cell(frame, far));
        let origin = Cell::new(a.row.min(b.row), a.col.min(b.col));
        DecompositionStep { origin, rect: op.rect(self.rect), rule: self.rule.clone() }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rect.cells().map(|c| Cell::new(c.row + self.origin.row - 1, c.col + self.origin.col - 1))
    }
}

/// A tiling together with the decomposition that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub tiling: Tiling,
    pub steps: Vec<DecompositionStep>,
}

impl Construction {
    fn empty(board: DeficientBoard) -> Self {
        Construction { tiling: Tiling::new(board, Vec::new()), steps: Vec::new() }
    }

    pub fn transformed(&self, op: SymmetryOp) -> Construction {
        let frame = self.tiling.board.rect();
        Construction {
            tiling: op.tiling(&self.tiling),
            steps: self.steps.iter().map(|s| s.transformed(frame, op)).collect(),
        }
    }

    /// Copies another construction's placements and steps, translated so its
    /// top-left cell lands on `origin`.
    fn absorb(&mut self, other: &Construction, origin: Cell) {
        let (dr, dc) = (origin.row - 1, origin.col - 1);
        self.tiling.placements.extend(other.tiling.placements.iter().map(|p| p.translated(dr, dc)));
        self.steps.extend(other.steps.iter().map(|s| DecompositionStep {
            origin: Cell::new(s.origin.row + dr, s.origin.col + dc),
            ..s.clone()
        }));
    }

    /// Whether the step regions cover every cell of the rectangle exactly once.
    pub fn steps_partition(&self) -> bool {
        let r = self.tiling.board.rect();
        let mut seen = vec![false; r.area() as usize];
        for c in self.steps.iter().flat_map(|s| s.cells()) {
            if !r.contains(c) {
                return false;
            }
            let i = ((c.row - 1) * r.cols + c.col - 1) as usize;
            if std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Tiled(Construction),
    Untileable(Verdict),
}

const ONE_DEFICIENT: Catalog = Catalog {
    primary: &[
        (2, 2),
        (4, 4),
        (4, 7),
        (7, 4),
        (7, 7),
        (4, 10),
        (10, 4),
        (7, 10),
        (10, 7),
        (10, 10),
        (8, 8),
        (8, 11),
        (11, 8),
        (11, 11),
    ],
    join: &[],
};
const TWO_ROW: Catalog = Catalog { primary: &[(2, 1), (2, 4)], join: &[] };
const FOUR_BY_FIVE: Catalog = Catalog { primary: &[(4, 5)], join: &[] };
const FOUR_ROW: Catalog = Catalog { primary: &[(4, 8)], join: &[(4, 11)] };
const FIVE_BY_SEVEN: Catalog = Catalog { primary: &[(5, 7)], join: &[] };
const FIVE_ROW: Catalog = Catalog { primary: &[(5, 10), (5, 13)], join: &[(5, 16)] };
const LARGE: Catalog = Catalog {
    primary: &[(7, 8), (7, 11), (10, 8)],
    join: &[(7, 14), (13, 8), (13, 11), (16, 8)],
};
const DOG_EARED: Catalog = Catalog { primary: &[(4, 5), (5, 4), (7, 5), (5, 7)], join: &[] };

/// Builds a tiling for every board that [`decide`] accepts; otherwise returns
/// the negative verdict.
pub fn construct_tiling(b: &DeficientBoard) -> Result<Outcome> {
    let verdict = decide(b)?;
    if !verdict.tileable {
        return Ok(Outcome::Untileable(verdict));
    }
    let c = classify(b)?;
    let nb = &c.board;
    let built = match c.family {
        Family::Empty => {
            let mut e = Construction::empty(nb.clone());
            let id = base_cases::board_id(nb);
            e.steps.push(DecompositionStep { origin: Cell::new(1, 1), rect: nb.rect(), rule: StepRule::BaseCase { id } });
            Some(e)
        }
        Family::Hopeless => None,
        Family::FullRect => Some(full::full_construction(nb.rect())?),
        Family::OneDeficient => window::tile_by_window(nb, &ONE_DEFICIENT)?,
        Family::TwoRow => window::tile_by_window(nb, &TWO_ROW)?,
        Family::FourByFive => window::tile_by_window(nb, &FOUR_BY_FIVE)?,
        Family::FourRow => window::tile_by_window(nb, &FOUR_ROW)?,
        Family::FiveBySeven => window::tile_by_window(nb, &FIVE_BY_SEVEN)?,
        Family::FiveRow => window::tile_by_window(nb, &FIVE_ROW)?,
        Family::Large => window::tile_by_window(nb, &LARGE)?,
        Family::FourColumn => window::tile_by_bands(nb)?,
    };
    let built = built.ok_or_else(|| Error::MissingBaseCase(b.to_string()))?;
    Ok(Outcome::Tiled(built.transformed(c.op)))
}

/// The corner a dog-eared deficiency sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DominoOrientation {
    Horizontal,
    Vertical,
}

/// The board `R(m, n)` with a domino removed from the given corner.
pub fn dog_eared_board(m: u32, n: u32, corner: Corner, orientation: DominoOrientation) -> Result<DeficientBoard> {
    let r = Rect::new(m, n)?;
    let second = match orientation {
        DominoOrientation::Horizontal => (1, 2),
        DominoOrientation::Vertical => (2, 1),
    };
    let top_left = DeficientBoard::with_missing(m, n, &[(1, 1), second])?;
    let op = match corner {
        Corner::TopLeft => SymmetryOp::Identity,
        Corner::TopRight => SymmetryOp::FlipH,
        Corner::BottomLeft => SymmetryOp::FlipV,
        Corner::BottomRight => SymmetryOp::Rot180,
    };
    debug_assert_eq!(op.rect(r), r);
    Ok(op.board(&top_left))
}

/// Tiles a rectangle with a domino missing from a corner, by stripping full
/// rectangles down to a 4x5 or 7x5 (or transposed) corner window.
pub fn tile_dog_eared(m: u32, n: u32, corner: Corner, orientation: DominoOrientation) -> Result<Construction> {
    if m < 4 || n < 4 || (m as u64 * n as u64) % 3 != 2 {
        return Err(Error::BadShape(format!(
            "a corner domino needs both sides at least 4 and 3 | mn − 2, got R({m},{n})"
        )));
    }
    let b = dog_eared_board(m, n, corner, orientation)?;
    window::tile_by_window(&b, &DOG_EARED)?.ok_or_else(|| Error::MissingBaseCase(b.to_string()))
}

/// Tiles a `(3t+8) x 4` board with two separated missing cells.
pub fn tile_nx4_two_deficient(b: &DeficientBoard) -> Result<Outcome> {
    let shape_ok = b.cols() == 4 && b.rows() >= 8 && b.rows() % 3 == 2;
    if !shape_ok || b.missing().len() != 2 || b.is_domino_deficient() {
        return Err(Error::BadShape(format!("{b} is not a (3t+8) x 4 board with two separated holes")));
    }
    construct_tiling(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(m: u32, n: u32, missing: &[(u32, u32)]) -> DeficientBoard {
        DeficientBoard::with_missing(m, n, missing).unwrap()
    }

    fn built(b: &DeficientBoard) -> Construction {
        match construct_tiling(b).unwrap() {
            Outcome::Tiled(c) => {
                assert!(c.tiling.validate().ok, "{b}");
                assert!(c.steps_partition(), "{b}: {:?}", c.steps);
                assert_eq!(&c.tiling.board, b);
                c
            }
            Outcome::Untileable(v) => panic!("{b} untileable: {v:?}"),
        }
    }

    #[test]
    fn examples() {
        let c = built(&board(13, 11, &[(8, 1), (8, 2)]));
        assert!(c.tiling.placements.len() == (13 * 11 - 2) / 3);
        let c = built(&board(4, 14, &[(2, 6), (3, 6)]));
        assert!(c.steps.iter().any(|s| matches!(s.rule, StepRule::JoinRepair { rows: 4, cols: 11, .. })));
        let c = built(&board(100, 104, &[(50, 50), (50, 51)]));
        assert_eq!(c.tiling.placements.len(), (100 * 104 - 2) / 3);
        built(&board(11, 4, &[(1, 1), (9, 4)]));
        built(&board(1, 2, &[(1, 1), (1, 2)]));
        built(&board(2, 7, &[(1, 5), (1, 6)]));
    }

    #[test]
    fn untileable_carries_verdict() {
        let out = construct_tiling(&board(7, 8, &[(2, 1), (2, 2)])).unwrap();
        assert!(matches!(out, Outcome::Untileable(Verdict { tileable: false, .. })));
    }

    #[test]
    fn dog_eared() {
        for (m, n) in [(4, 5), (5, 4), (7, 11), (10, 11), (4, 8), (5, 7), (5, 10), (7, 8), (8, 10), (13, 14)] {
            for corner in [Corner::TopLeft, Corner::TopRight, Corner::BottomLeft, Corner::BottomRight] {
                for o in [DominoOrientation::Horizontal, DominoOrientation::Vertical] {
                    let c = tile_dog_eared(m, n, corner, o).unwrap();
                    assert!(c.tiling.validate().ok);
                    assert!(c.steps_partition());
                }
            }
        }
        let c = tile_dog_eared(4, 5, Corner::TopRight, DominoOrientation::Horizontal).unwrap();
        assert_eq!(c.tiling.placements.len(), 6);
        assert!(tile_dog_eared(2, 4, Corner::TopLeft, DominoOrientation::Vertical).is_err());
    }

    #[test]
    fn deterministic() {
        let b = board(40, 41, &[(17, 9), (18, 9)]);
        assert_eq!(construct_tiling(&b).unwrap(), construct_tiling(&b).unwrap());
    }
}
