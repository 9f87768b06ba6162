//! Tilings of full rectangles from 2x3 blocks and one special 9x5 piece.

use crate::board::{Cell, DeficientBoard, Placement, PlacementKind, Rect, SymmetryOp, Tiling};
use crate::characterize::full_rect_tileable;
use crate::construct::{base_cases, Construction, DecompositionStep, StepRule};
use crate::error::{Error, Result};

/// Tiles a full rectangle. Rectangles divisible into 3x2 or 2x3 blocks are
/// gridded directly; a (6k) x odd rectangle is split into a gridded part and a
/// 3-column strip; a (9+6t) x odd rectangle additionally needs the 9x5 piece.
pub fn tile_full_rect(r: Rect) -> Result<Tiling> {
    Ok(full_construction(r)?.tiling)
}

pub fn full_construction(r: Rect) -> Result<Construction> {
    let mut c = Construction::empty(DeficientBoard::full(r));
    push_full(&mut c, Cell::new(1, 1), r.rows, r.cols)?;
    Ok(c)
}

/// Appends a tiling of the `rows x cols` block whose top-left cell is
/// `origin`. Zero-sized blocks are skipped.
pub(crate) fn push_full(c: &mut Construction, origin: Cell, rows: u32, cols: u32) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Ok(());
    }
    if !full_rect_tileable(rows, cols) {
        return Err(Error::UntileableRect { rows, cols });
    }
    let grid = (rows.is_multiple_of(3) && cols.is_multiple_of(2)) || (rows.is_multiple_of(2) && cols.is_multiple_of(3));
    if grid {
        return push_grid(c, origin, rows, cols, StepRule::FullRectEq1);
    }
    let (a, b, transposed) = if rows.is_multiple_of(3) {
        (rows, cols, false)
    } else {
        (cols, rows, true)
    };
    // Canonical orientation: `a` rows (a multiple of 3), `b` columns (odd, ≥ 5).
    let mut local = Construction::empty(DeficientBoard::full(Rect::new(a, b)?));
    let at = |r: u32, c: u32| Cell::new(r, c);
    if a % 6 == 0 {
        push_grid(&mut local, at(1, 1), a, b - 3, StepRule::FullRectEq2)?;
        push_grid(&mut local, at(1, b - 2), a, 3, StepRule::FullRectEq2)?;
    } else {
        let six_t = a - 9;
        let two_k = b - 5;
        push_grid(&mut local, at(1, 1), a, two_k, StepRule::FullRectEq3)?;
        push_nine_by_five(&mut local, at(1, two_k + 1))?;
        push_grid(&mut local, at(10, two_k + 1), six_t, 2, StepRule::FullRectEq3)?;
        push_grid(&mut local, at(10, two_k + 3), six_t, 3, StepRule::FullRectEq3)?;
    }
    if transposed {
        local = local.transformed(SymmetryOp::Transpose);
    }
    c.absorb(&local, origin);
    Ok(())
}

/// Grids a block with 3x2 tiles (rows divisible by 3, even columns) or 2x3
/// tiles (even rows, columns divisible by 3).
fn push_grid(c: &mut Construction, origin: Cell, rows: u32, cols: u32, rule: StepRule) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Ok(());
    }
    let (r0, c0) = (origin.row, origin.col);
    if rows.is_multiple_of(3) && cols.is_multiple_of(2) {
        for i in (0..rows).step_by(3) {
            for j in (0..cols).step_by(2) {
                c.tiling.placements.push(Placement::at(PlacementKind::TrominoSe, r0 + i, c0 + j));
                c.tiling.placements.push(Placement::at(PlacementKind::TrominoNw, r0 + i + 1, c0 + j));
            }
        }
    } else if rows.is_multiple_of(2) && cols.is_multiple_of(3) {
        for i in (0..rows).step_by(2) {
            for j in (0..cols).step_by(3) {
                c.tiling.placements.push(Placement::at(PlacementKind::TrominoNe, r0 + i, c0 + j));
                c.tiling.placements.push(Placement::at(PlacementKind::TrominoSw, r0 + i, c0 + j + 1));
            }
        }
    } else {
        return Err(Error::UntileableRect { rows, cols });
    }
    c.steps.push(DecompositionStep { origin, rect: Rect::new(rows, cols)?, rule });
    Ok(())
}

fn push_nine_by_five(c: &mut Construction, origin: Cell) -> Result<()> {
    let board = DeficientBoard::full(Rect::new(9, 5)?);
    let (t, _) = base_cases::lookup(&board)
        .ok_or_else(|| Error::MissingBaseCase(base_cases::board_id(&board)))?;
    let (dr, dc) = (origin.row - 1, origin.col - 1);
    c.tiling.placements.extend(t.placements.iter().map(|p| p.translated(dr, dc)));
    c.steps.push(DecompositionStep { origin, rect: board.rect(), rule: StepRule::R9x5Special });
    Ok(())
}
