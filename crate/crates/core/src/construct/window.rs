//! Window decompositions.
//!
//! A board with its missing cells clustered is split into one small base
//! window that contains every missing cell, plus up to four full rectangles:
//! full-width slabs above and below the window and blocks to its left and
//! right. The window is tiled from the base-case table, the rest by
//! [`push_full`]. Trying the window at a different offset is exactly an
//! hquad/vquad shift of the base case; trying a larger catalogued window is a
//! join of a removed block.

use crate::board::{Cell, DeficientBoard, Rect};
use crate::characterize::full_rect_tileable;
use crate::construct::full::push_full;
use crate::construct::{base_cases, Construction, DecompositionStep, StepRule};
use crate::error::Result;

/// Window shapes (rows, cols) for one family, in preference order.
pub(crate) struct Catalog {
    pub primary: &'static [(u32, u32)],
    pub join: &'static [(u32, u32)],
}

fn complement_ok(m: u32, n: u32, r0: u32, c0: u32, h: u32, w: u32) -> bool {
    full_rect_tileable(r0 - 1, n)
        && full_rect_tileable(m + 1 - r0 - h, n)
        && full_rect_tileable(h, c0 - 1)
        && full_rect_tileable(h, n + 1 - c0 - w)
}

/// Offsets `r0` at which a window of height `h` fits and covers rows `lo..=hi`.
fn offsets(extent: u32, h: u32, lo: u32, hi: u32) -> std::ops::RangeInclusive<u32> {
    let first = (hi + 1).saturating_sub(h).max(1);
    let last = lo.min(extent + 1 - h);
    first..=last
}

/// Tiles `b` with the first catalogued window that works, or returns `None`.
pub(crate) fn tile_by_window(b: &DeficientBoard, cat: &Catalog) -> Result<Option<Construction>> {
    let (m, n) = (b.rows(), b.cols());
    let miss = b.missing();
    let (rlo, rhi) = (miss.iter().map(|c| c.row).min(), miss.iter().map(|c| c.row).max());
    let (clo, chi) = (miss.iter().map(|c| c.col).min(), miss.iter().map(|c| c.col).max());
    let (Some(rlo), Some(rhi), Some(clo), Some(chi)) = (rlo, rhi, clo, chi) else {
        return Ok(None);
    };
    let mut natural: Option<((u32, u32), (u32, u32))> = None;
    let shapes = cat.primary.iter().map(|&s| (s, false)).chain(cat.join.iter().map(|&s| (s, true)));
    for ((h, w), is_join) in shapes {
        if h > m || w > n || rhi + 1 - rlo > h || chi + 1 - clo > w {
            continue;
        }
        for r0 in offsets(m, h, rlo, rhi) {
            for c0 in offsets(n, w, clo, chi) {
                if !complement_ok(m, n, r0, c0, h, w) {
                    continue;
                }
                if natural.is_none() && !is_join {
                    natural = Some(((h, w), (r0, c0)));
                }
                let local: Vec<Cell> =
                    miss.iter().map(|c| Cell::new(c.row + 1 - r0, c.col + 1 - c0)).collect();
                let window = DeficientBoard::new(Rect::new(h, w)?, local)?;
                let Some((tiling, id)) = base_cases::lookup(&window) else { continue };
                let rule = match natural {
                    _ if is_join => StepRule::JoinRepair { id, rows: h, cols: w },
                    Some((shape, (nr, nc))) if shape == (h, w) && (nr, nc) != (r0, c0) => {
                        StepRule::ShiftRepair {
                            id,
                            drow: r0 as i64 - nr as i64,
                            dcol: c0 as i64 - nc as i64,
                        }
                    }
                    _ => StepRule::BaseCase { id },
                };
                let mut c = Construction::empty(b.clone());
                let origin = Cell::new(r0, c0);
                let (dr, dc) = (r0 - 1, c0 - 1);
                c.tiling.placements.extend(tiling.placements.iter().map(|p| p.translated(dr, dc)));
                c.steps.push(DecompositionStep { origin, rect: Rect::new(h, w)?, rule });
                push_full(&mut c, Cell::new(1, 1), r0 - 1, n)?;
                push_full(&mut c, Cell::new(r0 + h, 1), m + 1 - r0 - h, n)?;
                push_full(&mut c, Cell::new(r0, 1), h, c0 - 1)?;
                push_full(&mut c, Cell::new(r0, c0 + w), h, n + 1 - c0 - w)?;
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Tiles an `m x 4` board with two separated missing cells by cutting it into
/// horizontal bands: full 3-row slabs, 4- or 7-row windows holding one missing
/// cell, or one 8-row window (11-row when joined) holding both.
pub(crate) fn tile_by_bands(b: &DeficientBoard) -> Result<Option<Construction>> {
    let (m, n) = (b.rows(), b.cols());
    let mut failed = vec![false; m as usize + 1];
    let mut plan = Vec::new();
    if !bands(b, 0, &mut failed, &mut plan) {
        return Ok(None);
    }
    let mut c = Construction::empty(b.clone());
    let mut top = 1;
    for band in plan {
        match band {
            Band::Slab(h) => push_full(&mut c, Cell::new(top, 1), h, n)?,
            Band::Window(h, is_join) => {
                let window = window_board(b, top, h)?;
                let (tiling, id) = base_cases::lookup(&window).expect("band was checked");
                c.tiling.placements.extend(tiling.placements.iter().map(|p| p.translated(top - 1, 0)));
                let rule = if is_join {
                    StepRule::JoinRepair { id, rows: h, cols: n }
                } else {
                    StepRule::BaseCase { id }
                };
                c.steps.push(DecompositionStep { origin: Cell::new(top, 1), rect: Rect::new(h, n)?, rule });
            }
        }
        top += match band {
            Band::Slab(h) | Band::Window(h, _) => h,
        };
    }
    debug_assert_eq!(top, m + 1);
    Ok(Some(c))
}

#[derive(Clone, Copy, Debug)]
enum Band {
    Slab(u32),
    Window(u32, bool),
}

fn window_board(b: &DeficientBoard, top: u32, h: u32) -> Result<DeficientBoard> {
    let local = b
        .missing()
        .iter()
        .filter(|c| (top..top + h).contains(&c.row))
        .map(|c| Cell::new(c.row + 1 - top, c.col));
    DeficientBoard::new(Rect::new(h, b.cols())?, local)
}

fn bands(b: &DeficientBoard, done: u32, failed: &mut [bool], plan: &mut Vec<Band>) -> bool {
    let m = b.rows();
    if done == m {
        return true;
    }
    if failed[done as usize] {
        return false;
    }
    let inside = |h: u32| b.missing().iter().filter(|c| c.row > done && c.row <= done + h).count();
    let options = [
        (3, 0, Band::Slab(3)),
        (4, 1, Band::Window(4, false)),
        (7, 1, Band::Window(7, false)),
        (8, 2, Band::Window(8, false)),
        (11, 2, Band::Window(11, true)),
    ];
    for (h, holes, band) in options {
        if done + h > m || inside(h) != holes {
            continue;
        }
        if holes > 0 {
            let Ok(window) = window_board(b, done + 1, h) else { continue };
            if base_cases::lookup(&window).is_none() {
                continue;
            }
        } else if !full_rect_tileable(h, b.cols()) {
            continue;
        }
        plan.push(band);
        if bands(b, done + h, failed, plan) {
            return true;
        }
        plan.pop();
    }
    failed[done as usize] = true;
    false
}
