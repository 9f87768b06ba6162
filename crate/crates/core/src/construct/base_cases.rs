//! Precomputed tilings of the small base rectangles used by the constructor.
//!
//! Every entry was produced by the exact-cover search and is stored once per
//! orbit under the rectangle's symmetries (identity, both flips, half turn).
//! The data file is regenerated with `TROMINO_REGEN=1 cargo test -p tromino
//! --test base_cases`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::board::{Cell, DeficientBoard, Placement, PlacementKind, Rect, SymmetryOp, Tiling};
use crate::construct::search::solve_exact;
use crate::error::{Error, Result};

const DATA: &str = include_str!("../../data/base_cases.txt");

/// Which cells are missing from a catalog rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeficiencyClass {
    Full,
    One,
    Domino,
    /// Two cells that do not share an edge.
    Separated,
}

impl DeficiencyClass {
    fn tag(self) -> char {
        match self {
            DeficiencyClass::Full => 'F',
            DeficiencyClass::One => 'O',
            DeficiencyClass::Domino => 'D',
            DeficiencyClass::Separated => 'S',
        }
    }

    fn of(b: &DeficientBoard) -> DeficiencyClass {
        match b.missing().len() {
            0 => DeficiencyClass::Full,
            1 => DeficiencyClass::One,
            _ if b.is_domino_deficient() => DeficiencyClass::Domino,
            _ => DeficiencyClass::Separated,
        }
    }

    /// Every choice of missing cells of this class inside `r`.
    fn positions(self, r: Rect) -> Vec<Vec<Cell>> {
        match self {
            DeficiencyClass::Full => vec![Vec::new()],
            DeficiencyClass::One => r.cells().map(|c| vec![c]).collect(),
            DeficiencyClass::Domino => r.dominoes().map(|d| d.to_vec()).collect(),
            DeficiencyClass::Separated => {
                let cells: Vec<Cell> = r.cells().collect();
                let mut out = Vec::new();
                for (i, &a) in cells.iter().enumerate() {
                    for &b in &cells[i + 1..] {
                        if !a.is_adjacent(b) {
                            out.push(vec![a, b]);
                        }
                    }
                }
                out
            }
        }
    }
}

/// Rectangles (rows, cols) and deficiency classes covered by the table.
pub const CATALOG: &[(u32, u32, DeficiencyClass)] = &[
    (9, 5, DeficiencyClass::Full),
    (2, 2, DeficiencyClass::One),
    (4, 4, DeficiencyClass::One),
    (4, 7, DeficiencyClass::One),
    (4, 10, DeficiencyClass::One),
    (7, 7, DeficiencyClass::One),
    (7, 10, DeficiencyClass::One),
    (10, 10, DeficiencyClass::One),
    (8, 8, DeficiencyClass::One),
    (8, 11, DeficiencyClass::One),
    (11, 11, DeficiencyClass::One),
    (2, 4, DeficiencyClass::Domino),
    (4, 5, DeficiencyClass::Domino),
    (4, 8, DeficiencyClass::Domino),
    (4, 11, DeficiencyClass::Domino),
    (5, 7, DeficiencyClass::Domino),
    (5, 10, DeficiencyClass::Domino),
    (5, 13, DeficiencyClass::Domino),
    (5, 16, DeficiencyClass::Domino),
    (7, 5, DeficiencyClass::Domino),
    (7, 8, DeficiencyClass::Domino),
    (7, 11, DeficiencyClass::Domino),
    (7, 14, DeficiencyClass::Domino),
    (10, 8, DeficiencyClass::Domino),
    (13, 8, DeficiencyClass::Domino),
    (13, 11, DeficiencyClass::Domino),
    (16, 8, DeficiencyClass::Domino),
    (8, 4, DeficiencyClass::Separated),
    (11, 4, DeficiencyClass::Separated),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCaseEntry {
    pub board: DeficientBoard,
    pub tiling: Tiling,
}

impl BaseCaseEntry {
    /// Short identifier such as `R(7,8)[2.1,2.2]`.
    pub fn id(&self) -> String {
        board_id(&self.board)
    }
}

pub fn board_id(b: &DeficientBoard) -> String {
    let cells: Vec<String> = b.missing().iter().map(|c| format!("{}.{}", c.row, c.col)).collect();
    format!("R({},{})[{}]", b.rows(), b.cols(), cells.join(","))
}

/// The committed table, in file order.
pub fn base_case_table() -> &'static [BaseCaseEntry] {
    &store().entries
}

/// A tiling of `b` from the table, found up to symmetry; also accepts boards
/// whose transpose is catalogued. Boards with nothing left to cover get the
/// empty tiling. Returns the entry id used.
pub fn lookup(b: &DeficientBoard) -> Option<(Tiling, String)> {
    if b.open_area() == 0 {
        return Some((Tiling::new(b.clone(), Vec::new()), board_id(b)));
    }
    let s = store();
    let direct = |b: &DeficientBoard| {
        SymmetryOp::RECT_GROUP.iter().find_map(|&op| {
            let image = op.board(b);
            s.index.get(&key(&image)).map(|&i| {
                let e = &s.entries[i];
                (op.inverse().tiling(&e.tiling), e.id())
            })
        })
    };
    direct(b).or_else(|| {
        let t = SymmetryOp::Transpose;
        direct(&t.board(b)).map(|(tiling, id)| (t.tiling(&tiling), id))
    })
}

/// Whether the table knows the shape at all (in either orientation), which
/// distinguishes "position is bad" from "shape not catalogued".
pub fn has_shape(rows: u32, cols: u32, class: DeficiencyClass) -> bool {
    CATALOG.iter().any(|&(r, c, k)| k == class && ((r, c) == (rows, cols) || (c, r) == (rows, cols)))
}

struct Store {
    entries: Vec<BaseCaseEntry>,
    index: HashMap<(u32, u32, Vec<Cell>), usize>,
}

fn key(b: &DeficientBoard) -> (u32, u32, Vec<Cell>) {
    (b.rows(), b.cols(), b.missing().to_vec())
}

fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(|| {
        let entries = parse_table(DATA).expect("committed base-case table parses");
        let index = entries.iter().enumerate().map(|(i, e)| (key(&e.board), i)).collect();
        Store { entries, index }
    })
}

/// Smallest image of the missing-cell set under the rectangle symmetries.
fn canonical_missing(r: Rect, missing: &[Cell]) -> Vec<Cell> {
    SymmetryOp::RECT_GROUP
        .iter()
        .map(|&op| {
            let mut v: Vec<Cell> = missing.iter().map(|&c| op.cell(r, c)).collect();
            v.sort();
            v
        })
        .min()
        .expect("group is non-empty")
}

/// Rebuilds the table from scratch with the exact-cover search.
pub fn generate() -> Result<Vec<BaseCaseEntry>> {
    let mut out = Vec::new();
    for &(rows, cols, class) in CATALOG {
        let r = Rect::new(rows, cols)?;
        let mut seen = BTreeSet::new();
        for missing in class.positions(r) {
            let canon = canonical_missing(r, &missing);
            if !seen.insert(canon.clone()) {
                continue;
            }
            let board = DeficientBoard::new(r, canon)?;
            if let Some(tiling) = solve_exact(&board)? {
                out.push(BaseCaseEntry { board, tiling });
            }
        }
    }
    Ok(out)
}

fn kind_code(k: PlacementKind) -> &'static str {
    match k {
        PlacementKind::TrominoNe => "ne",
        PlacementKind::TrominoNw => "nw",
        PlacementKind::TrominoSe => "se",
        PlacementKind::TrominoSw => "sw",
        PlacementKind::DominoH => "dh",
        PlacementKind::DominoV => "dv",
        PlacementKind::Monomino => "mo",
    }
}

fn parse_kind(s: &str) -> Option<PlacementKind> {
    Some(match s {
        "ne" => PlacementKind::TrominoNe,
        "nw" => PlacementKind::TrominoNw,
        "se" => PlacementKind::TrominoSe,
        "sw" => PlacementKind::TrominoSw,
        "dh" => PlacementKind::DominoH,
        "dv" => PlacementKind::DominoV,
        "mo" => PlacementKind::Monomino,
        _ => return None,
    })
}

/// Serializes entries, one per line: `D 7 8 2.1 2.2 : ne1.1 sw1.2 ...`.
pub fn render_table(entries: &[BaseCaseEntry]) -> String {
    let mut s = String::from(
        "# Base-case tilings found by exact-cover search; one line per symmetry orbit.\n\
         # class rows cols missing... : placements (kind + row.col of the bounding-box corner)\n",
    );
    for e in entries {
        let b = &e.board;
        write!(s, "{} {} {}", DeficiencyClass::of(b).tag(), b.rows(), b.cols()).unwrap();
        for c in b.missing() {
            write!(s, " {}.{}", c.row, c.col).unwrap();
        }
        s.push_str(" :");
        for p in &e.tiling.placements {
            write!(s, " {}{}.{}", kind_code(p.kind), p.anchor.row, p.anchor.col).unwrap();
        }
        s.push('\n');
    }
    s
}

fn parse_cell(tok: &str) -> Option<Cell> {
    let (r, c) = tok.split_once('.')?;
    Some(Cell::new(r.parse().ok()?, c.parse().ok()?))
}

pub fn parse_table(text: &str) -> Result<Vec<BaseCaseEntry>> {
    let bad = |line: usize, what: &str| Error::BadInput(format!("base-case line {line}: {what}"));
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, body) = line.split_once(':').ok_or_else(|| bad(i + 1, "missing ':'"))?;
        let mut head = head.split_whitespace();
        let _class = head.next().ok_or_else(|| bad(i + 1, "missing class"))?;
        let mut dim = || -> Result<u32> {
            head.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(i + 1, "bad dimension"))
        };
        let (rows, cols) = (dim()?, dim()?);
        let missing = head
            .map(|t| parse_cell(t).ok_or_else(|| bad(i + 1, "bad cell")))
            .collect::<Result<Vec<_>>>()?;
        let board = DeficientBoard::new(Rect::new(rows, cols)?, missing)?;
        let placements = body
            .split_whitespace()
            .map(|t| {
                let kind = t.get(..2).and_then(parse_kind);
                let anchor = t.get(2..).and_then(parse_cell);
                kind.zip(anchor).map(|(k, a)| Placement::new(k, a)).ok_or_else(|| bad(i + 1, t))
            })
            .collect::<Result<Vec<_>>>()?;
        let tiling = Tiling::new(board.clone(), placements);
        if !tiling.validate().ok {
            return Err(bad(i + 1, "tiling does not validate"));
        }
        out.push(BaseCaseEntry { board, tiling });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_validates_and_is_in_catalog() {
        let table = base_case_table();
        let shapes: BTreeSet<(u32, u32)> = table.iter().map(|e| (e.board.rows(), e.board.cols())).collect();
        assert!(shapes.len() >= 16);
        for e in table {
            assert!(e.tiling.validate().ok, "{}", e.id());
            let class = DeficiencyClass::of(&e.board);
            assert!(has_shape(e.board.rows(), e.board.cols(), class), "{}", e.id());
        }
    }

    #[test]
    fn lookup_applies_symmetry() {
        let b = DeficientBoard::with_missing(16, 8, &[(7, 2), (8, 2)]).unwrap();
        let (t, _) = lookup(&b).expect("catalogued");
        assert_eq!(t.board, b);
        assert!(t.validate().ok);
        let tb = DeficientBoard::with_missing(8, 13, &[(2, 1), (3, 1)]).unwrap();
        let (t, _) = lookup(&tb).expect("transposed shape is found");
        assert!(t.validate().ok);
    }

    #[test]
    fn bad_positions_are_absent() {
        let b = DeficientBoard::with_missing(7, 8, &[(2, 1), (2, 2)]).unwrap();
        assert!(lookup(&b).is_none());
    }

    #[test]
    fn round_trip_text() {
        let table = base_case_table();
        assert_eq!(parse_table(&render_table(table)).unwrap(), table);
    }
}
