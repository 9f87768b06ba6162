//! Broken-profile dynamic programming over a column-major cell sweep.
//!
//! The board is swept one cell at a time in column-major order over a strip of
//! height `h <= 16`. The state is a bitmask over the `h + 2` cells starting at
//! the current one (bit 0 = current cell) recording which of them are already
//! covered, plus one flag bit recording whether the single permitted domino
//! has been spent. Tiles are always placed so that the current cell is their
//! first cell in sweep order, which bounds every placement inside the window.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::board::{Cell, DeficientBoard, SymmetryOp};
use crate::enumerate::TileMix;
use crate::error::{Error, Result};

pub const WIDTH_CAP: u32 = 16;

/// Offsets `(drow, dcol)` relative to the first cell in column-major order.
const TROMINO_SHAPES: [[(i32, i32); 3]; 4] = [
    [(0, 0), (1, 0), (0, 1)],
    [(0, 0), (0, 1), (1, 1)],
    [(0, 0), (1, 0), (1, 1)],
    [(0, 0), (0, 1), (-1, 1)],
];
const DOMINO_SHAPES: [[(i32, i32); 2]; 2] = [[(0, 0), (1, 0)], [(0, 0), (0, 1)]];

/// Counts tilings of the board by the given tile mix.
pub fn count(b: &DeficientBoard, mix: TileMix) -> Result<BigUint> {
    let work = if b.rows() <= WIDTH_CAP {
        b.clone()
    } else if b.cols() <= WIDTH_CAP {
        SymmetryOp::Transpose.board(b)
    } else {
        return Err(Error::WidthCap { rows: b.rows(), cols: b.cols(), cap: WIDTH_CAP });
    };
    Ok(Sweep::new(&work).run(mix))
}

/// Counts tilings of an arbitrary sub-region of a `rows x cols` frame given by
/// its blocked cells (1-indexed). Used for regions with more than two holes.
pub(crate) fn count_region(rows: u32, cols: u32, blocked: &[Cell], mix: TileMix) -> Result<BigUint> {
    if rows > WIDTH_CAP {
        return Err(Error::WidthCap { rows, cols, cap: WIDTH_CAP });
    }
    let (h, w) = (rows as usize, cols as usize);
    let mut sweep = Sweep { h, w, blocked: vec![false; h * w] };
    for c in blocked {
        sweep.blocked[(c.col as usize - 1) * h + c.row as usize - 1] = true;
    }
    Ok(sweep.run(mix))
}

struct Sweep {
    h: usize,
    w: usize,
    /// Column-major missing-cell flags.
    blocked: Vec<bool>,
}

struct Move {
    /// Bits (relative to the current cell) the tile covers.
    bits: u32,
    domino: bool,
}

impl Sweep {
    fn new(b: &DeficientBoard) -> Self {
        let (h, w) = (b.rows() as usize, b.cols() as usize);
        let mut blocked = vec![false; h * w];
        for c in b.missing() {
            blocked[(c.col as usize - 1) * h + c.row as usize - 1] = true;
        }
        Sweep { h, w, blocked }
    }

    fn is_blocked(&self, idx: usize) -> bool {
        idx < self.blocked.len() && self.blocked[idx]
    }

    /// Tiles that may be anchored at sweep index `idx`, ignoring occupancy.
    fn moves_at(&self, idx: usize, mix: TileMix) -> Vec<Move> {
        let (r, c) = ((idx % self.h) as i32, (idx / self.h) as i32);
        let fits = |&(dr, dc): &(i32, i32)| {
            let (rr, cc) = (r + dr, c + dc);
            rr >= 0 && rr < self.h as i32 && cc < self.w as i32
        };
        let bits = |cells: &[(i32, i32)]| {
            cells.iter().fold(0u32, |acc, &(dr, dc)| acc | 1 << (dr + dc * self.h as i32))
        };
        let mut out = Vec::new();
        if mix != TileMix::Domino {
            for s in TROMINO_SHAPES.iter().filter(|s| s.iter().all(fits)) {
                out.push(Move { bits: bits(s), domino: false });
            }
        }
        if mix != TileMix::Tromino {
            for s in DOMINO_SHAPES.iter().filter(|s| s.iter().all(fits)) {
                out.push(Move { bits: bits(s), domino: mix == TileMix::TrominoPlusOneDomino });
            }
        }
        out
    }

    fn run(&self, mix: TileMix) -> BigUint {
        let window = self.h + 2;
        let flag = 1u32 << window;
        let n = self.h * self.w;
        let initial = (0..window).filter(|&i| self.is_blocked(i)).fold(0u32, |m, i| m | 1 << i);
        let mut states: HashMap<u32, BigUint> = HashMap::from([(initial, BigUint::one())]);
        for idx in 0..n {
            let moves = self.moves_at(idx, mix);
            let incoming = if self.is_blocked(idx + window) { 1 << (window - 1) } else { 0 };
            let mut next: HashMap<u32, BigUint> = HashMap::with_capacity(states.len() * 2);
            let mut push = |state: u32, ways: &BigUint| {
                let shifted = ((state & (flag - 1)) >> 1) | incoming | (state & flag);
                *next.entry(shifted).or_insert_with(BigUint::zero) += ways;
            };
            for (&state, ways) in &states {
                if state & 1 != 0 {
                    push(state, ways);
                    continue;
                }
                for m in &moves {
                    if state & m.bits != 0 || (m.domino && state & flag != 0) {
                        continue;
                    }
                    push(state | m.bits | if m.domino { flag } else { 0 }, ways);
                }
            }
            states = next;
        }
        let want = if mix == TileMix::TrominoPlusOneDomino { flag } else { 0 };
        states.remove(&want).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: u32, n: u32, missing: &[(u32, u32)], mix: TileMix) -> u64 {
        let b = DeficientBoard::with_missing(m, n, missing).unwrap();
        count(&b, mix).unwrap().try_into().unwrap()
    }

    #[test]
    fn tromino_counts() {
        assert_eq!(c(2, 6, &[], TileMix::Tromino), 4);
        assert_eq!(c(3, 3, &[], TileMix::Tromino), 0);
        assert_eq!(c(4, 3, &[], TileMix::Tromino), 4);
        assert_eq!(c(2, 3, &[], TileMix::Tromino), 2);
        assert_eq!(c(1, 2, &[(1, 1), (1, 2)], TileMix::Tromino), 1);
    }

    #[test]
    fn domino_counts() {
        assert_eq!(c(2, 2, &[], TileMix::Domino), 2);
        assert_eq!(c(1, 3, &[], TileMix::Domino), 0);
        assert_eq!(c(4, 4, &[], TileMix::Domino), 36);
        assert_eq!(c(8, 8, &[], TileMix::Domino), 12988816);
    }

    #[test]
    fn mixed_counts() {
        assert_eq!(c(2, 4, &[], TileMix::TrominoPlusOneDomino), 6);
        assert_eq!(c(2, 7, &[], TileMix::TrominoPlusOneDomino), 20);
        assert_eq!(c(4, 5, &[], TileMix::TrominoPlusOneDomino), 64);
    }

    #[test]
    fn width_cap() {
        let b = DeficientBoard::full(crate::board::Rect::new(17, 17).unwrap());
        assert!(matches!(count(&b, TileMix::Domino), Err(Error::WidthCap { .. })));
        let tall = DeficientBoard::full(crate::board::Rect::new(30, 2).unwrap());
        assert_eq!(count(&tall, TileMix::Tromino).unwrap(), BigUint::from(1u32 << 10));
    }
}
