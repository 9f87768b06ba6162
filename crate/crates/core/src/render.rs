//! ASCII and SVG pictures of tilings.

use std::fmt::Write as _;

use crate::board::Tiling;

/// Side of one cell in SVG user units.
pub const SVG_CELL: u32 = 24;

fn owners(t: &Tiling) -> Vec<Vec<Option<usize>>> {
    let r = t.board.rect();
    let mut grid = vec![vec![None; r.cols as usize]; r.rows as usize];
    for (i, p) in t.placements.iter().enumerate() {
        for c in p.covered_cells() {
            if r.contains(c) {
                grid[c.row as usize - 1][c.col as usize - 1] = Some(i);
            }
        }
    }
    grid
}

/// One line per row: placement `i` is drawn with letter `i mod 26`, missing
/// cells with `.`, uncovered cells with `?`.
pub fn render_ascii(t: &Tiling) -> String {
    let mut out = String::new();
    for (r, row) in owners(t).iter().enumerate() {
        for (c, owner) in row.iter().enumerate() {
            let cell = crate::board::Cell::new(r as u32 + 1, c as u32 + 1);
            let ch = match owner {
                _ if t.board.is_missing(cell) => '.',
                Some(i) => (b'a' + (*i % 26) as u8) as char,
                None => '?',
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

fn fill(i: usize) -> String {
    // Golden-angle hue steps keep neighbouring placements apart.
    let hue = (i as f64 * 137.508) % 360.0;
    format!("hsl({hue:.1},65%,72%)")
}

/// One `rect.cell` per covered cell, filled by placement, plus a dot on each
/// missing cell.
pub fn render_svg(t: &Tiling) -> String {
    let r = t.board.rect();
    let (w, h) = (r.cols * SVG_CELL, r.rows * SVG_CELL);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    for (row, cells) in owners(t).iter().enumerate() {
        for (col, owner) in cells.iter().enumerate() {
            let (x, y) = (col as u32 * SVG_CELL, row as u32 * SVG_CELL);
            let cell = crate::board::Cell::new(row as u32 + 1, col as u32 + 1);
            if t.board.is_missing(cell) {
                let half = SVG_CELL / 2;
                let _ = writeln!(
                    out,
                    r#"  <circle class="missing" cx="{}" cy="{}" r="3" fill="black"/>"#,
                    x + half,
                    y + half
                );
                continue;
            }
            let Some(i) = owner else { continue };
            let _ = writeln!(
                out,
                r#"  <rect class="cell" x="{x}" y="{y}" width="{SVG_CELL}" height="{SVG_CELL}" fill="{}" stroke="black" stroke-width="1" data-placement="{i}"/>"#,
                fill(*i)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{DeficientBoard, Placement, PlacementKind, Rect};

    fn two_by_three() -> Tiling {
        Tiling::new(
            DeficientBoard::full(Rect::new(2, 3).unwrap()),
            vec![Placement::at(PlacementKind::TrominoNe, 1, 1), Placement::at(PlacementKind::TrominoSw, 1, 2)],
        )
    }

    #[test]
    fn ascii() {
        assert_eq!(render_ascii(&two_by_three()), "abb\naab\n");
        let b = DeficientBoard::with_missing(1, 2, &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(render_ascii(&Tiling::new(b, vec![])), "..\n");
    }

    #[test]
    fn svg_counts_cells() {
        let svg = render_svg(&two_by_three());
        assert_eq!(svg.matches(r#"class="cell""#).count(), 6);
        let b = DeficientBoard::with_missing(2, 4, &[(1, 1), (2, 1)]).unwrap();
        let t = crate::construct::solve_exact(&b).unwrap().unwrap();
        let svg = render_svg(&t);
        assert_eq!(svg.matches(r#"class="cell""#).count(), 6);
        assert_eq!(svg.matches(r#"class="missing""#).count(), 2);
        assert_eq!(svg, render_svg(&t));
    }
}
