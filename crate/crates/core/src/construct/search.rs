//! Exact-cover depth-first search: the independent oracle behind the
//! characterization tables, the base-case data and small-board enumeration.
//!
//! The search always extends the row-major first uncovered cell and tries tile
//! kinds in a fixed order, so results are deterministic. States that are known
//! to have no completion are memoised; the state after filling every cell up to
//! `p` is captured exactly by the occupancy of the `cols + 2` cells from `p`
//! onwards, because no placement anchored at `p` reaches further.

use std::collections::HashSet;

use crate::board::{DeficientBoard, Placement, PlacementKind, SymmetryOp, Tiling};
use crate::enumerate::TileMix;
use crate::error::{Error, Result};

pub const DEFAULT_CELL_CAP: u64 = 176;

/// Widest frame the 128-bit memo key supports.
const MAX_KEY_WIDTH: u32 = 126;

const KIND_ORDER: [PlacementKind; 6] = [
    PlacementKind::TrominoNe,
    PlacementKind::TrominoNw,
    PlacementKind::TrominoSe,
    PlacementKind::TrominoSw,
    PlacementKind::DominoH,
    PlacementKind::DominoV,
];

/// Finds one tromino tiling of the board, or proves there is none.
pub fn solve_exact(b: &DeficientBoard) -> Result<Option<Tiling>> {
    solve_exact_with(b, TileMix::Tromino, DEFAULT_CELL_CAP)
}

pub fn solve_exact_with(b: &DeficientBoard, mix: TileMix, cap: u64) -> Result<Option<Tiling>> {
    Ok(enumerate_with(b, mix, Some(1), cap)?.pop())
}

/// Lists tilings in search order, stopping after `limit` if given.
pub fn enumerate_with(
    b: &DeficientBoard,
    mix: TileMix,
    limit: Option<usize>,
    cap: u64,
) -> Result<Vec<Tiling>> {
    if b.rect().area() > cap {
        return Err(Error::CapExceeded { cells: b.rect().area(), cap });
    }
    let transposed = b.cols() > MAX_KEY_WIDTH;
    let work = if transposed { SymmetryOp::Transpose.board(b) } else { b.clone() };
    let mut engine = Engine::new(&work, mix, limit);
    if engine.feasible() {
        engine.dfs(0, false);
    }
    let frame = work.rect();
    Ok(engine
        .found
        .into_iter()
        .map(|placements| {
            let t = Tiling::new(work.clone(), placements);
            if transposed {
                SymmetryOp::Transpose.tiling(&t)
            } else {
                t
            }
        })
        .inspect(|t| debug_assert!(t.validate().ok, "search produced an invalid tiling on {frame}"))
        .collect())
}

struct Engine {
    rows: usize,
    cols: usize,
    filled: Vec<bool>,
    mix: TileMix,
    limit: Option<usize>,
    stack: Vec<Placement>,
    found: Vec<Vec<Placement>>,
    dead: HashSet<(u32, u128, bool)>,
}

impl Engine {
    fn new(b: &DeficientBoard, mix: TileMix, limit: Option<usize>) -> Self {
        Engine {
            rows: b.rows() as usize,
            cols: b.cols() as usize,
            filled: b.blocked_grid(),
            mix,
            limit,
            stack: Vec::new(),
            found: Vec::new(),
            dead: HashSet::new(),
        }
    }

    fn feasible(&self) -> bool {
        let open = self.filled.iter().filter(|&&f| !f).count();
        match self.mix {
            TileMix::Tromino => open % 3 == 0,
            TileMix::TrominoPlusOneDomino => open >= 2 && (open - 2) % 3 == 0,
            TileMix::Domino => open % 2 == 0,
        }
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn key(&self, p: usize, domino_used: bool) -> (u32, u128, bool) {
        let end = (p + self.cols + 2).min(self.filled.len());
        let mut mask = 0u128;
        for (i, &f) in self.filled[p..end].iter().enumerate() {
            if f {
                mask |= 1 << i;
            }
        }
        (p as u32, mask, domino_used)
    }

    /// Cells (as flat indices) of a kind placed so that it covers `p` as its
    /// row-major first cell, with the anchor it would have.
    fn shape(&self, p: usize, kind: PlacementKind) -> Option<([usize; 3], usize, (usize, usize))> {
        let (r, c) = (p / self.cols, p % self.cols);
        let w = self.cols;
        let below = r + 1 < self.rows;
        let right = c + 1 < w;
        match kind {
            PlacementKind::TrominoNe if below && right => Some(([p, p + w, p + w + 1], 3, (r, c))),
            PlacementKind::TrominoNw if below && c >= 1 => {
                Some(([p, p + w - 1, p + w], 3, (r, c - 1)))
            }
            PlacementKind::TrominoSe if below && right => Some(([p, p + 1, p + w], 3, (r, c))),
            PlacementKind::TrominoSw if below && right => Some(([p, p + 1, p + w + 1], 3, (r, c))),
            PlacementKind::DominoH if right => Some(([p, p + 1, 0], 2, (r, c))),
            PlacementKind::DominoV if below => Some(([p, p + w, 0], 2, (r, c))),
            _ => None,
        }
    }

    fn allowed(&self, kind: PlacementKind, domino_used: bool) -> bool {
        match self.mix {
            TileMix::Tromino => kind.is_tromino(),
            TileMix::TrominoPlusOneDomino => kind.is_tromino() || !domino_used,
            TileMix::Domino => kind.is_domino(),
        }
    }

    /// Returns whether any completion was found below this state.
    fn dfs(&mut self, mut p: usize, domino_used: bool) -> bool {
        while p < self.filled.len() && self.filled[p] {
            p += 1;
        }
        if p == self.filled.len() {
            let complete = self.mix != TileMix::TrominoPlusOneDomino || domino_used;
            if complete {
                self.found.push(self.stack.clone());
            }
            return complete;
        }
        let key = self.key(p, domino_used);
        if self.dead.contains(&key) {
            return false;
        }
        let mut any = false;
        for kind in KIND_ORDER {
            if !self.allowed(kind, domino_used) {
                continue;
            }
            let Some((cells, len, (ar, ac))) = self.shape(p, kind) else { continue };
            let cells = &cells[..len];
            if cells.iter().any(|&i| self.filled[i]) {
                continue;
            }
            for &i in cells {
                self.filled[i] = true;
            }
            self.stack.push(Placement::at(kind, ar as u32 + 1, ac as u32 + 1));
            any |= self.dfs(p + 1, domino_used || kind.is_domino());
            self.stack.pop();
            for &i in cells {
                self.filled[i] = false;
            }
            if self.done() {
                return true;
            }
        }
        if !any {
            self.dead.insert(key);
        }
        any
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(m: u32, n: u32, missing: &[(u32, u32)]) -> DeficientBoard {
        DeficientBoard::with_missing(m, n, missing).unwrap()
    }

    #[test]
    fn small_rectangles() {
        assert!(solve_exact(&board(3, 3, &[])).unwrap().is_none());
        let t = solve_exact(&board(2, 3, &[])).unwrap().unwrap();
        assert!(t.validate().ok);
        assert_eq!(t.placements.len(), 2);
        assert!(solve_exact(&board(3, 5, &[])).unwrap().is_none());
        assert!(solve_exact(&board(9, 5, &[])).unwrap().is_some());
    }

    #[test]
    fn enumeration_of_2x3() {
        let all = enumerate_with(&board(2, 3, &[]), TileMix::Tromino, None, DEFAULT_CELL_CAP).unwrap();
        assert_eq!(all.len(), 2);
        assert_ne!(all[0].canonical(), all[1].canonical());
    }

    #[test]
    fn deterministic() {
        let b = board(7, 8, &[(4, 4), (4, 5)]);
        assert_eq!(solve_exact(&b).unwrap(), solve_exact(&b).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let err = solve_exact_with(&board(14, 14, &[]), TileMix::Tromino, 100).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cells: 196, cap: 100 });
    }

    #[test]
    fn mixed_and_domino_modes() {
        let n = |b: &DeficientBoard, mix| enumerate_with(b, mix, None, 64).unwrap().len();
        assert_eq!(n(&board(2, 4, &[]), TileMix::TrominoPlusOneDomino), 6);
        assert_eq!(n(&board(2, 7, &[]), TileMix::TrominoPlusOneDomino), 20);
        assert_eq!(n(&board(4, 4, &[]), TileMix::Domino), 36);
        for t in enumerate_with(&board(2, 7, &[]), TileMix::TrominoPlusOneDomino, None, 64).unwrap()
        {
            assert!(t.validate().ok);
            assert_eq!(t.placements.iter().filter(|p| p.kind.is_domino()).count(), 1);
        }
    }

    #[test]
    fn wide_boards_are_transposed_internally() {
        let b = board(2, 130, &[(1, 1), (2, 1)]);
        let t = solve_exact_with(&b, TileMix::Tromino, 1000).unwrap().unwrap();
        assert!(t.validate().ok);
    }
}
