//! Boards, placements, symmetries and the tiling validator.
//!
//! Coordinates are 1-indexed `(row, col)` measured from the top-left corner.
//! Everything here is an immutable value; operations return new values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }

    /// Offsets the cell, returning `None` when a coordinate would drop below 1.
    pub fn offset(self, drow: i64, dcol: i64) -> Option<Cell> {
        let row = self.row as i64 + drow;
        let col = self.col as i64 + dcol;
        (row >= 1 && col >= 1).then(|| Cell::new(row as u32, col as u32))
    }
}

impl From<[u32; 2]> for Cell {
    fn from([row, col]: [u32; 2]) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [u32; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl From<(u32, u32)> for Cell {
    fn from((row, col): (u32, u32)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (u32, u32) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub rows: u32,
    pub cols: u32,
}

impl Rect {
    pub fn new(rows: u32, cols: u32) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyRect { rows, cols });
        }
        Ok(Rect { rows, cols })
    }

    pub fn area(self) -> u64 {
        self.rows as u64 * self.cols as u64
    }

    pub fn contains(self, c: Cell) -> bool {
        (1..=self.rows).contains(&c.row) && (1..=self.cols).contains(&c.col)
    }

    pub fn transposed(self) -> Rect {
        Rect { rows: self.cols, cols: self.rows }
    }

    /// All cells in row-major order.
    pub fn cells(self) -> impl Iterator<Item = Cell> {
        (1..=self.rows).flat_map(move |r| (1..=self.cols).map(move |c| Cell::new(r, c)))
    }

    /// Every domino position, horizontal before vertical at each anchor.
    pub fn dominoes(self) -> impl Iterator<Item = [Cell; 2]> {
        self.cells().flat_map(move |c| {
            let h = (c.col < self.cols).then(|| [c, Cell::new(c.row, c.col + 1)]);
            let v = (c.row < self.rows).then(|| [c, Cell::new(c.row + 1, c.col)]);
            h.into_iter().chain(v)
        })
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({},{})", self.rows, self.cols)
    }
}

/// A rectangle with zero, one or two cells removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BoardJson", into = "BoardJson")]
pub struct DeficientBoard {
    rect: Rect,
    missing: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct BoardJson {
    rows: u32,
    cols: u32,
    #[serde(default)]
    missing: Vec<Cell>,
}

impl TryFrom<BoardJson> for DeficientBoard {
    type Error = Error;
    fn try_from(j: BoardJson) -> Result<Self> {
        DeficientBoard::new(Rect::new(j.rows, j.cols)?, j.missing)
    }
}

impl From<DeficientBoard> for BoardJson {
    fn from(b: DeficientBoard) -> Self {
        BoardJson { rows: b.rect.rows, cols: b.rect.cols, missing: b.missing }
    }
}

impl DeficientBoard {
    pub fn new(rect: Rect, missing: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut missing: Vec<Cell> = missing.into_iter().collect();
        if missing.len() > 2 {
            return Err(Error::TooManyMissing(missing.len()));
        }
        for &c in &missing {
            if !rect.contains(c) {
                return Err(Error::CellOutOfBounds {
                    row: c.row,
                    col: c.col,
                    rows: rect.rows,
                    cols: rect.cols,
                });
            }
        }
        missing.sort();
        if missing.len() == 2 && missing[0] == missing[1] {
            return Err(Error::DuplicateMissing { row: missing[0].row, col: missing[0].col });
        }
        Ok(DeficientBoard { rect, missing })
    }

    pub fn full(rect: Rect) -> Self {
        DeficientBoard { rect, missing: Vec::new() }
    }

    /// Shorthand used throughout the tests: `R(rows, cols)` minus the given cells.
    pub fn with_missing(rows: u32, cols: u32, missing: &[(u32, u32)]) -> Result<Self> {
        DeficientBoard::new(Rect::new(rows, cols)?, missing.iter().map(|&c| Cell::from(c)))
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn rows(&self) -> u32 {
        self.rect.rows
    }

    pub fn cols(&self) -> u32 {
        self.rect.cols
    }

    /// Missing cells in row-major order.
    pub fn missing(&self) -> &[Cell] {
        &self.missing
    }

    pub fn is_missing(&self, c: Cell) -> bool {
        self.missing.contains(&c)
    }

    pub fn is_domino_deficient(&self) -> bool {
        self.missing.len() == 2 && self.missing[0].is_adjacent(self.missing[1])
    }

    /// Number of cells left to cover.
    pub fn open_area(&self) -> u64 {
        self.rect.area() - self.missing.len() as u64
    }

    pub fn area_ok(&self) -> bool {
        self.open_area().is_multiple_of(3)
    }

    /// Row-major 0-based occupancy grid; `true` marks a missing cell.
    pub(crate) fn blocked_grid(&self) -> Vec<bool> {
        let cols = self.rect.cols as usize;
        let mut g = vec![false; self.rect.area() as usize];
        for c in &self.missing {
            g[(c.row as usize - 1) * cols + c.col as usize - 1] = true;
        }
        g
    }
}

impl fmt::Display for DeficientBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rect)?;
        if !self.missing.is_empty() {
            write!(f, " minus {{")?;
            for (i, c) in self.missing.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Tile shapes. Tromino orientations are named by the corner of the 2x2
/// bounding box that the L leaves uncovered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PlacementKind {
    TrominoNe,
    TrominoNw,
    TrominoSe,
    TrominoSw,
    DominoH,
    DominoV,
    Monomino,
}

impl PlacementKind {
    pub const TROMINOES: [PlacementKind; 4] = [
        PlacementKind::TrominoNe,
        PlacementKind::TrominoNw,
        PlacementKind::TrominoSe,
        PlacementKind::TrominoSw,
    ];

    pub fn is_tromino(self) -> bool {
        matches!(
            self,
            PlacementKind::TrominoNe
                | PlacementKind::TrominoNw
                | PlacementKind::TrominoSe
                | PlacementKind::TrominoSw
        )
    }

    pub fn is_domino(self) -> bool {
        matches!(self, PlacementKind::DominoH | PlacementKind::DominoV)
    }

    pub fn size(self) -> usize {
        match self {
            PlacementKind::Monomino => 1,
            PlacementKind::DominoH | PlacementKind::DominoV => 2,
            _ => 3,
        }
    }

    /// Cell offsets from the anchor (top-left of the bounding box), row-major.
    pub fn offsets(self) -> &'static [(u32, u32)] {
        match self {
            PlacementKind::TrominoNe => &[(0, 0), (1, 0), (1, 1)],
            PlacementKind::TrominoNw => &[(0, 1), (1, 0), (1, 1)],
            PlacementKind::TrominoSe => &[(0, 0), (0, 1), (1, 0)],
            PlacementKind::TrominoSw => &[(0, 0), (0, 1), (1, 1)],
            PlacementKind::DominoH => &[(0, 0), (0, 1)],
            PlacementKind::DominoV => &[(0, 0), (1, 0)],
            PlacementKind::Monomino => &[(0, 0)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PlacementKind::TrominoNe => "TROMINO_NE",
            PlacementKind::TrominoNw => "TROMINO_NW",
            PlacementKind::TrominoSe => "TROMINO_SE",
            PlacementKind::TrominoSw => "TROMINO_SW",
            PlacementKind::DominoH => "DOMINO_H",
            PlacementKind::DominoV => "DOMINO_V",
            PlacementKind::Monomino => "MONOMINO",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    N,
    S,
    E,
    W,
}

impl Direction {
    /// Unit step as `(drow, dcol)`.
    pub fn step(self) -> (i64, i64) {
        match self {
            Direction::N => (-1, 0),
            Direction::S => (1, 0),
            Direction::E => (0, 1),
            Direction::W => (0, -1),
        }
    }

    pub fn from_step(drow: i64, dcol: i64) -> Option<Direction> {
        match (drow, dcol) {
            (-1, 0) => Some(Direction::N),
            (1, 0) => Some(Direction::S),
            (0, 1) => Some(Direction::E),
            (0, -1) => Some(Direction::W),
            _ => None,
        }
    }

    /// The direction a quarter turn clockwise (rows grow downward).
    pub fn clockwise(self) -> Direction {
        match self {
            Direction::N => Direction::E,
            Direction::E => Direction::S,
            Direction::S => Direction::W,
            Direction::W => Direction::N,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub kind: PlacementKind,
    pub anchor: Cell,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Direction>,
}

impl Placement {
    pub const fn new(kind: PlacementKind, anchor: Cell) -> Self {
        Placement { kind, anchor, direction: None }
    }

    pub fn at(kind: PlacementKind, row: u32, col: u32) -> Self {
        Placement::new(kind, Cell::new(row, col))
    }

    pub fn with_direction(mut self, d: Direction) -> Self {
        self.direction = Some(d);
        self
    }

    /// Cells covered by the placement, row-major.
    pub fn covered_cells(&self) -> Vec<Cell> {
        self.kind
            .offsets()
            .iter()
            .map(|&(dr, dc)| Cell::new(self.anchor.row + dr, self.anchor.col + dc))
            .collect()
    }

    /// Recognises a tile from the cells it covers.
    pub fn from_cells(cells: &[Cell]) -> Option<Placement> {
        let top = cells.iter().map(|c| c.row).min()?;
        let left = cells.iter().map(|c| c.col).min()?;
        let mut rel: Vec<(u32, u32)> = cells.iter().map(|c| (c.row - top, c.col - left)).collect();
        rel.sort();
        rel.dedup();
        if rel.len() != cells.len() {
            return None;
        }
        [
            PlacementKind::TrominoNe,
            PlacementKind::TrominoNw,
            PlacementKind::TrominoSe,
            PlacementKind::TrominoSw,
            PlacementKind::DominoH,
            PlacementKind::DominoV,
            PlacementKind::Monomino,
        ]
        .into_iter()
        .find(|k| k.offsets() == rel.as_slice())
        .map(|k| Placement::new(k, Cell::new(top, left)))
    }

    pub fn translated(&self, drow: u32, dcol: u32) -> Placement {
        Placement {
            anchor: Cell::new(self.anchor.row + drow, self.anchor.col + dcol),
            ..*self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    pub board: DeficientBoard,
    pub placements: Vec<Placement>,
}

impl Tiling {
    pub fn new(board: DeficientBoard, placements: Vec<Placement>) -> Self {
        Tiling { board, placements }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_tiling(self)
    }

    pub fn tromino_count(&self) -> usize {
        self.placements.iter().filter(|p| p.kind.is_tromino()).count()
    }

    /// The same tiling with placements sorted, for order-insensitive comparison.
    pub fn canonical(&self) -> Tiling {
        let mut placements = self.placements.clone();
        placements.sort();
        Tiling { board: self.board.clone(), placements }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "cell", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Violation {
    Overlap(Cell),
    OutOfBounds(Cell),
    Uncovered(Cell),
    CoversMissing(Cell),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    fn fail(v: Violation) -> Self {
        ValidationReport { ok: false, violation: Some(v) }
    }
}

/// Checks that the placements exactly partition the board minus its missing cells.
/// Placements are scanned in order; the first offending cell is reported.
pub fn validate_tiling(t: &Tiling) -> ValidationReport {
    const FREE: u8 = 0;
    const MISSING: u8 = 1;
    const COVERED: u8 = 2;
    let rect = t.board.rect();
    let cols = rect.cols as usize;
    let mut grid: Vec<u8> =
        t.board.blocked_grid().into_iter().map(|b| if b { MISSING } else { FREE }).collect();
    for p in &t.placements {
        for c in p.covered_cells() {
            if !rect.contains(c) {
                return ValidationReport::fail(Violation::OutOfBounds(c));
            }
            let slot = &mut grid[(c.row as usize - 1) * cols + c.col as usize - 1];
            match *slot {
                MISSING => return ValidationReport::fail(Violation::CoversMissing(c)),
                COVERED => return ValidationReport::fail(Violation::Overlap(c)),
                _ => *slot = COVERED,
            }
        }
    }
    if let Some(i) = grid.iter().position(|&s| s == FREE) {
        let c = Cell::new((i / cols) as u32 + 1, (i % cols) as u32 + 1);
        return ValidationReport::fail(Violation::Uncovered(c));
    }
    ValidationReport { ok: true, violation: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SymmetryOp {
    Identity,
    /// Reflection across the vertical axis (columns reversed).
    FlipH,
    /// Reflection across the horizontal axis (rows reversed).
    FlipV,
    Rot180,
    Transpose,
}

impl SymmetryOp {
    pub const ALL: [SymmetryOp; 5] = [
        SymmetryOp::Identity,
        SymmetryOp::FlipH,
        SymmetryOp::FlipV,
        SymmetryOp::Rot180,
        SymmetryOp::Transpose,
    ];

    /// The symmetries that keep a rectangle's shape for any dimensions.
    pub const RECT_GROUP: [SymmetryOp; 4] =
        [SymmetryOp::Identity, SymmetryOp::FlipH, SymmetryOp::FlipV, SymmetryOp::Rot180];

    /// Every listed op is its own inverse.
    pub fn inverse(self) -> SymmetryOp {
        self
    }

    pub fn rect(self, r: Rect) -> Rect {
        match self {
            SymmetryOp::Transpose => r.transposed(),
            _ => r,
        }
    }

    /// Maps a cell of `frame` to its image in `self.rect(frame)`.
    pub fn cell(self, frame: Rect, c: Cell) -> Cell {
        let flip_r = |r: u32| frame.rows + 1 - r;
        let flip_c = |k: u32| frame.cols + 1 - k;
        match self {
            SymmetryOp::Identity => c,
            SymmetryOp::FlipH => Cell::new(c.row, flip_c(c.col)),
            SymmetryOp::FlipV => Cell::new(flip_r(c.row), c.col),
            SymmetryOp::Rot180 => Cell::new(flip_r(c.row), flip_c(c.col)),
            SymmetryOp::Transpose => Cell::new(c.col, c.row),
        }
    }

    pub fn direction(self, d: Direction) -> Direction {
        use Direction::*;
        match (self, d) {
            (SymmetryOp::Identity, d) => d,
            (SymmetryOp::FlipH, E) => W,
            (SymmetryOp::FlipH, W) => E,
            (SymmetryOp::FlipH, d) => d,
            (SymmetryOp::FlipV, N) => S,
            (SymmetryOp::FlipV, S) => N,
            (SymmetryOp::FlipV, d) => d,
            (SymmetryOp::Rot180, N) => S,
            (SymmetryOp::Rot180, S) => N,
            (SymmetryOp::Rot180, E) => W,
            (SymmetryOp::Rot180, W) => E,
            (SymmetryOp::Transpose, N) => W,
            (SymmetryOp::Transpose, W) => N,
            (SymmetryOp::Transpose, S) => E,
            (SymmetryOp::Transpose, E) => S,
        }
    }

    pub fn board(self, b: &DeficientBoard) -> DeficientBoard {
        let frame = b.rect();
        let missing = b.missing().iter().map(|&c| self.cell(frame, c));
        DeficientBoard::new(self.rect(frame), missing).expect("symmetry preserves board validity")
    }

    pub fn placement(self, frame: Rect, p: &Placement) -> Placement {
        let cells: Vec<Cell> = p.covered_cells().into_iter().map(|c| self.cell(frame, c)).collect();
        let mut q = Placement::from_cells(&cells).expect("symmetry preserves tile shapes");
        q.direction = p.direction.map(|d| self.direction(d));
        q
    }

    pub fn tiling(self, t: &Tiling) -> Tiling {
        let frame = t.board.rect();
        Tiling {
            board: self.board(&t.board),
            placements: t.placements.iter().map(|p| self.placement(frame, p)).collect(),
        }
    }
}

pub fn apply_symmetry(b: &DeficientBoard, s: SymmetryOp) -> DeficientBoard {
    s.board(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HSide {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VSide {
    Top,
    Bottom,
}

/// Detaches `k` columns from `side` and reattaches an equal block on the
/// opposite side, moving the deficiency by `k` columns relative to the frame.
pub fn hquad_shift(b: &DeficientBoard, k: u32, side: HSide) -> Result<DeficientBoard> {
    if k > b.cols() {
        return Err(Error::BadShape(format!("cannot detach {k} columns from {}", b.rect())));
    }
    let mut moved = Vec::with_capacity(b.missing().len());
    for &c in b.missing() {
        let detached = match side {
            HSide::Left => c.col <= k,
            HSide::Right => c.col > b.cols() - k,
        };
        if detached {
            return Err(Error::ShiftThroughDeficiency { row: c.row, col: c.col });
        }
        moved.push(match side {
            HSide::Left => Cell::new(c.row, c.col - k),
            HSide::Right => Cell::new(c.row, c.col + k),
        });
    }
    DeficientBoard::new(b.rect(), moved)
}

/// Row analogue of [`hquad_shift`].
pub fn vquad_shift(b: &DeficientBoard, k: u32, side: VSide) -> Result<DeficientBoard> {
    let t = SymmetryOp::Transpose;
    let hside = match side {
        VSide::Top => HSide::Left,
        VSide::Bottom => HSide::Right,
    };
    let shifted = hquad_shift(&t.board(b), k, hside).map_err(|e| match e {
        Error::ShiftThroughDeficiency { row, col } => {
            Error::ShiftThroughDeficiency { row: col, col: row }
        }
        Error::BadShape(_) => {
            Error::BadShape(format!("cannot detach {k} rows from {}", b.rect()))
        }
        other => other,
    })?;
    Ok(t.board(&shifted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(v: &[(u32, u32)]) -> Vec<Cell> {
        v.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn covered_cells_examples() {
        assert_eq!(Placement::at(PlacementKind::Monomino, 1, 1).covered_cells(), cells(&[(1, 1)]));
        assert_eq!(
            Placement::at(PlacementKind::DominoH, 2, 3).covered_cells(),
            cells(&[(2, 3), (2, 4)])
        );
        assert_eq!(
            Placement::at(PlacementKind::TrominoSe, 1, 1).covered_cells(),
            cells(&[(1, 1), (1, 2), (2, 1)])
        );
    }

    #[test]
    fn from_cells_inverts_covered_cells() {
        for kind in PlacementKind::TROMINOES
            .into_iter()
            .chain([PlacementKind::DominoH, PlacementKind::DominoV, PlacementKind::Monomino])
        {
            let p = Placement::at(kind, 3, 4);
            let mut cs = p.covered_cells();
            cs.reverse();
            assert_eq!(Placement::from_cells(&cs), Some(p));
        }
        assert_eq!(Placement::from_cells(&cells(&[(1, 1), (1, 3)])), None);
    }

    fn two_tromino_2x3() -> Tiling {
        Tiling::new(
            DeficientBoard::full(Rect::new(2, 3).unwrap()),
            vec![
                Placement::at(PlacementKind::TrominoNe, 1, 1),
                Placement::at(PlacementKind::TrominoSw, 1, 2),
            ],
        )
    }

    #[test]
    fn validator_accepts_and_rejects() {
        let t = two_tromino_2x3();
        assert!(validate_tiling(&t).ok);

        let mut short = t.clone();
        short.placements.pop();
        assert!(matches!(validate_tiling(&short).violation, Some(Violation::Uncovered(_))));

        let dup = Tiling::new(
            t.board.clone(),
            vec![
                Placement::at(PlacementKind::TrominoSe, 1, 1),
                Placement::at(PlacementKind::TrominoSe, 1, 1),
            ],
        );
        assert_eq!(validate_tiling(&dup).violation, Some(Violation::Overlap(Cell::new(1, 1))));

        let oob = Tiling::new(t.board.clone(), vec![Placement::at(PlacementKind::DominoV, 2, 1)]);
        assert_eq!(validate_tiling(&oob).violation, Some(Violation::OutOfBounds(Cell::new(3, 1))));

        let b = DeficientBoard::with_missing(2, 3, &[(1, 1)]).unwrap();
        let cm = Tiling::new(b, vec![Placement::at(PlacementKind::Monomino, 1, 1)]);
        assert_eq!(validate_tiling(&cm).violation, Some(Violation::CoversMissing(Cell::new(1, 1))));
    }

    #[test]
    fn board_construction_errors() {
        assert!(matches!(
            DeficientBoard::with_missing(3, 3, &[(4, 1)]),
            Err(Error::CellOutOfBounds { .. })
        ));
        assert!(matches!(
            DeficientBoard::with_missing(3, 3, &[(1, 1), (1, 1)]),
            Err(Error::DuplicateMissing { .. })
        ));
        assert!(matches!(
            DeficientBoard::with_missing(3, 3, &[(1, 1), (1, 2), (1, 3)]),
            Err(Error::TooManyMissing(3))
        ));
        assert!(Rect::new(0, 3).is_err());
        let b = DeficientBoard::with_missing(4, 5, &[(1, 2), (1, 1)]).unwrap();
        assert_eq!(b.missing(), &cells(&[(1, 1), (1, 2)])[..]);
        assert!(b.is_domino_deficient());
        assert!(b.area_ok());
    }

    #[test]
    fn symmetry_examples() {
        let b = DeficientBoard::with_missing(7, 8, &[(2, 1), (2, 2)]).unwrap();
        assert_eq!(
            SymmetryOp::FlipH.board(&b),
            DeficientBoard::with_missing(7, 8, &[(2, 7), (2, 8)]).unwrap()
        );
        assert_eq!(SymmetryOp::Identity.board(&b), b);
        let b = DeficientBoard::with_missing(4, 8, &[(2, 3), (3, 3)]).unwrap();
        assert_eq!(
            SymmetryOp::Transpose.board(&b),
            DeficientBoard::with_missing(8, 4, &[(3, 2), (3, 3)]).unwrap()
        );
    }

    #[test]
    fn flips_compose_to_rotation() {
        let r = Rect::new(5, 7).unwrap();
        for c in r.cells() {
            let two = SymmetryOp::FlipV.cell(r, SymmetryOp::FlipH.cell(r, c));
            assert_eq!(two, SymmetryOp::Rot180.cell(r, c));
        }
    }

    #[test]
    fn shift_examples() {
        let b = DeficientBoard::with_missing(4, 8, &[(2, 3), (2, 4)]).unwrap();
        assert_eq!(
            hquad_shift(&b, 3, HSide::Right).unwrap(),
            DeficientBoard::with_missing(4, 8, &[(2, 6), (2, 7)]).unwrap()
        );
        assert_eq!(hquad_shift(&b, 0, HSide::Left).unwrap(), b);
        assert!(matches!(
            hquad_shift(&b, 3, HSide::Left),
            Err(Error::ShiftThroughDeficiency { row: 2, col: 3 })
        ));
        let b = DeficientBoard::with_missing(4, 8, &[(2, 3), (3, 3)]).unwrap();
        assert_eq!(
            hquad_shift(&b, 3, HSide::Right).unwrap(),
            DeficientBoard::with_missing(4, 8, &[(2, 6), (3, 6)]).unwrap()
        );

        // (3,4)-vquad shift on R(5,4)
        let b = DeficientBoard::with_missing(5, 4, &[(1, 2), (2, 2)]).unwrap();
        assert_eq!(
            vquad_shift(&b, 3, VSide::Bottom).unwrap(),
            DeficientBoard::with_missing(5, 4, &[(4, 2), (5, 2)]).unwrap()
        );
        assert_eq!(vquad_shift(&b, 0, VSide::Top).unwrap(), b);
        let b = DeficientBoard::with_missing(10, 8, &[(2, 3), (2, 4)]).unwrap();
        assert_eq!(
            vquad_shift(&b, 6, VSide::Bottom).unwrap(),
            DeficientBoard::with_missing(10, 8, &[(8, 3), (8, 4)]).unwrap()
        );
        assert!(matches!(
            vquad_shift(&b, 9, VSide::Top),
            Err(Error::ShiftThroughDeficiency { row: 2, col: 3 })
        ));
    }

    #[test]
    fn board_json_shape() {
        let b = DeficientBoard::with_missing(4, 5, &[(2, 3), (3, 3)]).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"rows":4,"cols":5,"missing":[[2,3],[3,3]]}"#);
        let back: DeficientBoard = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<DeficientBoard>(r#"{"rows":2,"cols":2,"missing":[[3,3]]}"#)
            .is_err());
    }

    #[test]
    fn tiling_json_shape() {
        let t = two_tromino_2x3();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.contains(r#"{"kind":"TROMINO_NE","anchor":[1,1]}"#), "{s}");
        let back: Tiling = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
