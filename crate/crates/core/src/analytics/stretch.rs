//! Monodic tilings and the stretch map into coloured domino tilings.
//!
//! Each tromino splits into a directed domino and a monomino: the domino runs
//! from one arm into the elbow cell, and the monomino is the cell a quarter
//! turn clockwise (to the right) of the arrowhead. Exactly one of the two arms
//! satisfies that, so the split is a bijection on tromino orientations. The
//! extra domino of a mixed tiling, or the missing domino of a deficient board,
//! stays undirected.
//!
//! Colouring makes monominoes blue and dominoes red; stretching doubles one
//! axis, so every cell becomes a domino along that axis except that a domino
//! lying across the axis becomes two parallel dominoes across it. Red pieces
//! keep the arrow of the domino they came from: colours alone do not separate
//! tromino tilings (the six mixed tilings of `R(2,4)` give four uncoloured
//! images), the arrows are what make the map one-to-one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::board::{Cell, DeficientBoard, Direction, Placement, PlacementKind, Rect, SymmetryOp, Tiling};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Colour {
    Red,
    Blue,
}

/// The doubled axis: `H` doubles the number of columns, `V` the rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    H,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColouredDomino {
    #[serde(flatten)]
    pub placement: Placement,
    pub colour: Colour,
}

/// A domino tiling of a full rectangle with a colour on every domino. The
/// dominoes are kept sorted, so equal tilings compare and hash equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColouredDominoTiling {
    pub rect: Rect,
    pub dominoes: Vec<ColouredDomino>,
}

impl ColouredDominoTiling {
    pub fn new(rect: Rect, mut dominoes: Vec<ColouredDomino>) -> Self {
        dominoes.sort();
        ColouredDominoTiling { rect, dominoes }
    }

    /// The uncoloured tiling, for validation and rendering.
    pub fn tiling(&self) -> Tiling {
        Tiling::new(DeficientBoard::full(self.rect), self.dominoes.iter().map(|d| d.placement).collect())
    }

    fn transposed(&self) -> ColouredDominoTiling {
        let t = SymmetryOp::Transpose;
        ColouredDominoTiling::new(
            t.rect(self.rect),
            self.dominoes
                .iter()
                .map(|d| ColouredDomino { placement: t.placement(self.rect, &d.placement), colour: d.colour })
                .collect(),
        )
    }
}

/// Splits one tromino into its directed domino and monomino.
fn split_tromino(p: &Placement) -> (Placement, Placement) {
    let cells = p.covered_cells();
    let elbow = *cells
        .iter()
        .find(|c| cells.iter().filter(|o| o.is_adjacent(**c)).count() == 2)
        .expect("a tromino has an elbow");
    let arms: Vec<Cell> = cells.iter().copied().filter(|&c| c != elbow).collect();
    for (i, &tail) in arms.iter().enumerate() {
        let d = Direction::from_step(elbow.row as i64 - tail.row as i64, elbow.col as i64 - tail.col as i64)
            .expect("arms touch the elbow");
        let (dr, dc) = d.clockwise().step();
        if elbow.offset(dr, dc) == Some(arms[1 - i]) {
            let domino = Placement::from_cells(&[tail, elbow]).expect("two adjacent cells").with_direction(d);
            return (domino, Placement::new(PlacementKind::Monomino, arms[1 - i]));
        }
    }
    unreachable!("one arm is always clockwise of the other")
}

/// Converts a tiling by trominoes and at most one domino (on the full
/// rectangle), or a tromino tiling of a rectangle minus a domino, into its
/// directed monodic tiling of the full rectangle.
pub fn monodic_form(t: &Tiling) -> Result<Tiling> {
    let rect = t.board.rect();
    let mut out = Vec::with_capacity(t.placements.len() * 2 + 1);
    let mut undirected = 0;
    match t.board.missing() {
        [] => {}
        [a, b] if a.is_adjacent(*b) => {
            out.push(Placement::from_cells(&[*a, *b]).expect("adjacent cells"));
            undirected += 1;
        }
        _ => return Err(Error::BadInput(format!("{} is neither full nor missing a domino", t.board))),
    }
    for p in &t.placements {
        if p.kind.is_tromino() {
            let (d, m) = split_tromino(p);
            out.push(d);
            out.push(m);
        } else if p.kind.is_domino() {
            out.push(Placement { direction: None, ..*p });
            undirected += 1;
        } else {
            return Err(Error::BadInput(format!("{} is not a tromino or domino", p.kind.name())));
        }
    }
    if undirected > 1 {
        return Err(Error::BadInput("more than one domino".into()));
    }
    let monodic = Tiling::new(DeficientBoard::full(rect), out);
    if !monodic.validate().ok {
        return Err(Error::BadInput("placements do not tile the rectangle".into()));
    }
    Ok(monodic)
}

/// Reattaches each directed domino's monomino (the inverse of
/// [`monodic_form`] on full-rectangle mixed tilings).
pub fn tromino_form(monodic: &Tiling) -> Result<Tiling> {
    let monos: BTreeSet<Cell> = monodic
        .placements
        .iter()
        .filter(|p| p.kind == PlacementKind::Monomino)
        .map(|p| p.anchor)
        .collect();
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for p in &monodic.placements {
        match (p.kind, p.direction) {
            (PlacementKind::Monomino, _) => {}
            (k, Some(d)) if k.is_domino() => {
                let cells = p.covered_cells();
                let (dr, dc) = d.step();
                let head = *cells
                    .iter()
                    .find(|c| c.offset(-dr, -dc).is_some_and(|t| cells.contains(&t)))
                    .ok_or_else(|| Error::BadInput("arrow does not run along its domino".into()))?;
                let (rr, rc) = d.clockwise().step();
                let m = head
                    .offset(rr, rc)
                    .filter(|m| monos.contains(m) && used.insert(*m))
                    .ok_or_else(|| Error::BadInput(format!("no free monomino right of the arrow at {head}")))?;
                let mut all = cells;
                all.push(m);
                out.push(Placement::from_cells(&all).expect("an L"));
            }
            (k, None) if k.is_domino() => out.push(*p),
            _ => return Err(Error::BadInput(format!("unexpected {}", p.kind.name()))),
        }
    }
    if used.len() != monos.len() {
        return Err(Error::BadInput("unattached monomino".into()));
    }
    Ok(Tiling::new(monodic.board.clone(), out))
}

fn colour_of(p: &Placement) -> Colour {
    if p.kind == PlacementKind::Monomino {
        Colour::Blue
    } else {
        Colour::Red
    }
}

fn stretch_h(monodic: &Tiling) -> ColouredDominoTiling {
    let r = monodic.board.rect();
    let mut out = Vec::new();
    let h = |row: u32, col: u32| Placement::at(PlacementKind::DominoH, row, 2 * col - 1);
    for p in &monodic.placements {
        let colour = colour_of(p);
        let a = p.anchor;
        let placements: Vec<Placement> = match p.kind {
            PlacementKind::DominoV => vec![
                Placement::at(PlacementKind::DominoV, a.row, 2 * a.col - 1),
                Placement::at(PlacementKind::DominoV, a.row, 2 * a.col),
            ],
            _ => p.covered_cells().iter().map(|c| h(c.row, c.col)).collect(),
        };
        out.extend(placements.into_iter().map(|placement| ColouredDomino {
            placement: Placement { direction: p.direction, ..placement },
            colour,
        }));
    }
    ColouredDominoTiling::new(Rect { rows: r.rows, cols: 2 * r.cols }, out)
}

/// Colours and stretches a monodic tiling; red pieces inherit arrows.
pub fn stretch_monodic(monodic: &Tiling, axis: Axis) -> ColouredDominoTiling {
    match axis {
        Axis::H => stretch_h(monodic),
        Axis::V => stretch_h(&SymmetryOp::Transpose.tiling(monodic)).transposed(),
    }
}

/// Tromino tiling (with at most one domino) to coloured domino tiling of the
/// rectangle doubled along `axis`.
pub fn stretch_map(t: &Tiling, axis: Axis) -> Result<ColouredDominoTiling> {
    Ok(stretch_monodic(&monodic_form(t)?, axis))
}

fn unstretch_h(c: &ColouredDominoTiling) -> Result<Tiling> {
    let r = c.rect;
    if !r.cols.is_multiple_of(2) {
        return Err(Error::NotInImage(format!("odd stretched length {}", r.cols)));
    }
    let rect = Rect::new(r.rows, r.cols / 2)?;
    let reject = |why: String| Err(Error::NotInImage(why));
    if !c.tiling().validate().ok {
        return reject("not a domino tiling of the rectangle".into());
    }
    let mut out = Vec::new();
    // Red cells of the compressed board covered by stretched horizontal dominoes.
    let mut red_h: Vec<Vec<Option<Option<Direction>>>> = vec![vec![None; rect.cols as usize + 2]; rect.rows as usize + 1];
    let mut vertical: std::collections::BTreeMap<(u32, u32), Option<Direction>> = Default::default();
    for d in &c.dominoes {
        let a = d.placement.anchor;
        match (d.placement.kind, d.colour) {
            (PlacementKind::DominoH, colour) => {
                if a.col % 2 == 0 {
                    return reject(format!("horizontal domino at {a} straddles two source cells"));
                }
                let src = Cell::new(a.row, a.col.div_ceil(2));
                match colour {
                    Colour::Blue if d.placement.direction.is_some() => {
                        return reject(format!("blue domino at {a} carries an arrow"))
                    }
                    Colour::Blue => out.push(Placement::new(PlacementKind::Monomino, src)),
                    Colour::Red => red_h[src.row as usize][src.col as usize] = Some(d.placement.direction),
                }
            }
            (PlacementKind::DominoV, Colour::Blue) => return reject(format!("blue domino at {a} lies across the axis")),
            (PlacementKind::DominoV, Colour::Red) => {
                vertical.insert((a.row, a.col), d.placement.direction);
            }
            (k, _) => return reject(format!("{} is not a domino", k.name())),
        }
    }
    for (&(row, col), &dir) in &vertical {
        let twin = if col % 2 == 1 { col + 1 } else { col - 1 };
        if vertical.get(&(row, twin)) != Some(&dir) {
            return reject(format!("red vertical domino at ({row},{col}) has no matching twin"));
        }
        if col % 2 == 1 {
            out.push(Placement { direction: dir, ..Placement::at(PlacementKind::DominoV, row, col.div_ceil(2)) });
        }
    }
    for (row, cells) in red_h.iter().enumerate().skip(1) {
        let mut col = 1;
        while col <= rect.cols as usize {
            let Some(dir) = cells[col] else {
                col += 1;
                continue;
            };
            if cells[col + 1] == Some(dir) {
                out.push(Placement { direction: dir, ..Placement::at(PlacementKind::DominoH, row as u32, col as u32) });
                col += 2;
            } else {
                return reject(format!("red run in row {row} cannot be paired at column {col}"));
            }
        }
    }
    out.sort();
    Ok(Tiling::new(DeficientBoard::full(rect), out))
}

/// Compresses a coloured domino tiling along `axis`: the cell in position
/// `j` of the doubled axis goes to `⌈j/2⌉`. Returns the monodic tiling (with
/// whatever arrows the red pieces carry), or `NotInImage` when no monodic
/// tiling stretches to the input.
pub fn unstretch(c: &ColouredDominoTiling, axis: Axis) -> Result<Tiling> {
    match axis {
        Axis::H => unstretch_h(c),
        Axis::V => {
            let t = unstretch_h(&c.transposed())?;
            let mut back = SymmetryOp::Transpose.tiling(&t);
            back.placements.sort();
            Ok(back)
        }
    }
}

/// Drops every arrow.
pub fn undirected(monodic: &Tiling) -> Tiling {
    let placements = monodic.placements.iter().map(|p| Placement { direction: None, ..*p }).collect();
    sorted(&Tiling::new(monodic.board.clone(), placements))
}

fn sorted(t: &Tiling) -> Tiling {
    let mut placements = t.placements.clone();
    placements.sort();
    Tiling::new(t.board.clone(), placements)
}

impl ColouredDominoTiling {
    /// The same tiling with every arrow dropped.
    pub fn undirected(&self) -> ColouredDominoTiling {
        ColouredDominoTiling::new(
            self.rect,
            self.dominoes
                .iter()
                .map(|d| ColouredDomino { placement: Placement { direction: None, ..d.placement }, colour: d.colour })
                .collect(),
        )
    }
}
