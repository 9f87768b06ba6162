//! Constant-time tileability decisions.
//!
//! Every supported board is classified into a shape family, normalized by at
//! most a transpose, and checked against that family's bad-pair table. Area
//! and degenerate-dimension checks always run first.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::board::{Cell, DeficientBoard, Rect, SymmetryOp};
use crate::error::{Error, Result};

/// Two missing cells that make the board untileable, stated in `frame`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BadPair {
    pub cells: [Cell; 2],
    pub frame: Rect,
}

impl BadPair {
    pub fn new(frame: Rect, a: (u32, u32), b: (u32, u32)) -> Self {
        let (a, b) = (Cell::from(a), Cell::from(b));
        BadPair { cells: if a <= b { [a, b] } else { [b, a] }, frame }
    }

    pub fn is_adjacent(&self) -> bool {
        self.cells[0].is_adjacent(self.cells[1])
    }

    pub fn transformed(&self, op: SymmetryOp) -> BadPair {
        let [a, b] = self.cells.map(|c| op.cell(self.frame, c));
        BadPair::new(op.rect(self.frame), (a.row, a.col), (b.row, b.col))
    }
}

/// Which characterization established a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    EmptyRegion,
    FullRectangle,
    DeficientRectangle,
    TwoRow,
    FourByFive,
    FourRow,
    FiveBySeven,
    FiveRow,
    LargeRectangle,
    FourColumnTwoDeficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    /// The missing cells form a bad pair. `pair` is in input coordinates and
    /// `symmetry` is the normalization applied before the table lookup.
    BadPair { pair: [Cell; 2], symmetry: SymmetryOp, rule: Rule },
    /// Three does not divide the number of remaining cells.
    Area,
    /// The area condition holds but no tromino fits (a side of length 1, or a
    /// 3 x odd rectangle).
    NoFit,
    Positive { rule: Rule },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub tileable: bool,
    pub reason: Reason,
}

impl Verdict {
    fn yes(rule: Rule) -> Self {
        Verdict { tileable: true, reason: Reason::Positive { rule } }
    }

    fn no(reason: Reason) -> Self {
        Verdict { tileable: false, reason }
    }
}

/// Shape family of a board after normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Nothing left to tile.
    Empty,
    /// Area fails, or a side of length 1 leaves uncoverable cells.
    Hopeless,
    FullRect,
    OneDeficient,
    /// `2 x n`, n ≡ 1 (mod 3).
    TwoRow,
    FourByFive,
    /// `4 x n`, n ≡ 2 (mod 3), n ≥ 8.
    FourRow,
    FiveBySeven,
    /// `5 x n`, n ≡ 1 (mod 3), n ≥ 10.
    FiveRow,
    /// Both sides at least 7, rows ≡ 1 (mod 3).
    Large,
    /// `m x 4`, m ≡ 2 (mod 3), m ≥ 8, two non-adjacent missing cells.
    FourColumn,
}

/// A board together with the transpose (or identity) that brings it into its
/// family's canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classified {
    pub family: Family,
    pub op: SymmetryOp,
    pub board: DeficientBoard,
}

pub fn classify(b: &DeficientBoard) -> Result<Classified> {
    let (m, n) = (b.rows(), b.cols());
    let keep = |family| Classified { family, op: SymmetryOp::Identity, board: b.clone() };
    let flip = |family| Classified {
        family,
        op: SymmetryOp::Transpose,
        board: SymmetryOp::Transpose.board(b),
    };
    let oriented = |family, rows_first: bool| if rows_first { keep(family) } else { flip(family) };

    if b.open_area() == 0 {
        return Ok(keep(Family::Empty));
    }
    if !b.area_ok() || m.min(n) == 1 {
        return Ok(keep(Family::Hopeless));
    }
    let unsupported = |why: &str| Err(Error::UnsupportedShape(format!("{b}: {why}")));
    match b.missing().len() {
        0 => Ok(keep(Family::FullRect)),
        1 => {
            let (lo, hi) = (m.min(n), m.max(n));
            if lo == 5 {
                unsupported("one missing cell with a side of length 5")
            } else if lo == 2 && hi > 2 {
                unsupported("one missing cell with exactly one side of length 2")
            } else {
                Ok(oriented(Family::OneDeficient, m <= n))
            }
        }
        _ if !b.is_domino_deficient() => {
            let m_rows = n == 4 && m >= 8 && m % 3 == 2;
            let m_cols = m == 4 && n >= 8 && n % 3 == 2;
            if m_rows || m_cols {
                Ok(oriented(Family::FourColumn, m_rows))
            } else {
                unsupported("two separated missing cells outside the (3t+8) x 4 family")
            }
        }
        _ => Ok(match m.min(n) {
            2 => oriented(Family::TwoRow, m == 2),
            4 if m.max(n) == 5 => oriented(Family::FourByFive, m == 4),
            4 => oriented(Family::FourRow, m == 4),
            5 if m.max(n) == 7 => oriented(Family::FiveBySeven, m == 5),
            5 => oriented(Family::FiveRow, m == 5),
            _ => oriented(Family::Large, m % 3 == 1),
        }),
    }
}

/// Decides whether the board has a right-tromino tiling.
pub fn decide(b: &DeficientBoard) -> Result<Verdict> {
    let c = classify(b)?;
    let nb = &c.board;
    let (m, n) = (nb.rows(), nb.cols());
    let lookup = |set: Vec<BadPair>, rule: Rule| -> Verdict {
        let missing = [nb.missing()[0], nb.missing()[1]];
        if set.iter().any(|p| p.cells == missing) {
            let pair = [b.missing()[0], b.missing()[1]];
            Verdict::no(Reason::BadPair { pair, symmetry: c.op, rule })
        } else {
            Verdict::yes(rule)
        }
    };
    Ok(match c.family {
        Family::Empty => Verdict::yes(Rule::EmptyRegion),
        Family::Hopeless if !b.area_ok() => Verdict::no(Reason::Area),
        Family::Hopeless => Verdict::no(Reason::NoFit),
        Family::FullRect if full_rect_tileable(m, n) => Verdict::yes(Rule::FullRectangle),
        Family::FullRect => Verdict::no(Reason::NoFit),
        Family::OneDeficient => Verdict::yes(Rule::DeficientRectangle),
        Family::TwoRow => lookup(bad_pairs_2xn(n)?, Rule::TwoRow),
        Family::FourByFive => lookup(bad_pairs_4x5(), Rule::FourByFive),
        Family::FourRow => lookup(bad_pairs_4xn(n)?, Rule::FourRow),
        Family::FiveBySeven => lookup(bad_pairs_5x7(), Rule::FiveBySeven),
        Family::FiveRow => lookup(bad_pairs_5xn(n)?, Rule::FiveRow),
        Family::Large => lookup(bad_pairs_general(m, n)?, Rule::LargeRectangle),
        Family::FourColumn => lookup(bad_pairs_nx4_general(m)?, Rule::FourColumnTwoDeficient),
    })
}

/// Whether a full `m x n` rectangle has a tromino tiling: both sides at least
/// 2, area divisible by 3, and not 3 x odd. The empty rectangle counts as tiled.
pub fn full_rect_tileable(m: u32, n: u32) -> bool {
    if m == 0 || n == 0 {
        return true;
    }
    let (lo, hi) = (m.min(n), m.max(n));
    lo >= 2 && (m as u64 * n as u64).is_multiple_of(3) && !(lo == 3 && hi % 2 == 1)
}

fn rect(m: u32, n: u32) -> Rect {
    Rect::new(m, n).expect("table frames are non-empty")
}

fn shape_error(what: &str, m: u32, n: u32) -> Error {
    Error::BadShape(format!("{what} does not apply to R({m},{n})"))
}

/// Whether removing the domino `d` from `R(2, n)` leaves a tileable region.
pub fn two_row_domino_ok(n: u32, d: [Cell; 2]) -> Result<bool> {
    if n < 4 || n % 3 != 1 {
        return Err(shape_error("the two-row rule", 2, n));
    }
    let [a, b] = if d[0] <= d[1] { d } else { [d[1], d[0]] };
    if !a.is_adjacent(b) || b.row > 2 || b.col > n {
        return Err(Error::BadInput(format!("{a},{b} is not a domino of R(2,{n})")));
    }
    Ok(if a.col == b.col { a.col % 3 == 1 } else { a.col % 3 == 2 })
}

/// Every bad domino position of `R(2, n)`.
pub fn bad_pairs_2xn(n: u32) -> Result<Vec<BadPair>> {
    let frame = rect(2, n);
    let mut out = Vec::new();
    for d in frame.dominoes() {
        if !two_row_domino_ok(n, d)? {
            out.push(BadPair::new(frame, d[0].into(), d[1].into()));
        }
    }
    Ok(out)
}

/// Bad pairs of `R(4, n)` for n ≡ 2 (mod 3), n ≥ 8 (14 pairs).
pub fn bad_pairs_4xn(n: u32) -> Result<Vec<BadPair>> {
    if n < 8 || n % 3 != 2 {
        return Err(shape_error("the four-row table", 4, n));
    }
    let f = rect(4, n);
    let p = |a, b| BadPair::new(f, a, b);
    Ok(vec![
        p((2, 1), (2, 2)),
        p((1, 2), (2, 2)),
        p((2, n - 1), (2, n)),
        p((1, n - 1), (2, n - 1)),
        p((3, 1), (3, 2)),
        p((3, 2), (4, 2)),
        p((3, n - 1), (3, n)),
        p((3, n - 1), (4, n - 1)),
        p((2, 3), (3, 3)),
        p((2, n - 2), (3, n - 2)),
        p((2, 3), (2, 4)),
        p((2, n - 3), (2, n - 2)),
        p((3, 3), (3, 4)),
        p((3, n - 3), (3, n - 2)),
    ])
}

/// A seven-pair short list of `R(4,5)` bad pairs.
/// This list is incomplete; see [`bad_pairs_4x5`].
pub fn bad_pairs_4x5_short_list() -> Vec<BadPair> {
    let f = rect(4, 5);
    let p = |a, b| BadPair::new(f, a, b);
    vec![
        p((2, 2), (2, 3)),
        p((2, 3), (2, 4)),
        p((3, 2), (3, 3)),
        p((3, 3), (3, 4)),
        p((1, 3), (2, 3)),
        p((3, 3), (4, 3)),
        p((2, 3), (3, 3)),
    ]
}

/// All 15 bad pairs of `R(4,5)`, as found by exhaustive search: the seven
/// stated ones plus eight more near the corners.
pub fn bad_pairs_4x5() -> Vec<BadPair> {
    let f = rect(4, 5);
    let p = |a, b| BadPair::new(f, a, b);
    let mut out = bad_pairs_4x5_short_list();
    out.extend([
        p((1, 2), (2, 2)),
        p((1, 4), (2, 4)),
        p((2, 1), (2, 2)),
        p((2, 4), (2, 5)),
        p((3, 1), (3, 2)),
        p((3, 2), (4, 2)),
        p((3, 4), (3, 5)),
        p((3, 4), (4, 4)),
    ]);
    out
}

/// The 26 bad pairs of `R(5,7)`: every horizontal domino in an even row, every
/// vertical domino in an even column, and two more in the middle row.
pub fn bad_pairs_5x7() -> Vec<BadPair> {
    let f = rect(5, 7);
    let mut out: Vec<BadPair> = f
        .dominoes()
        .filter(|[a, b]| {
            let horizontal = a.row == b.row;
            (horizontal && a.row % 2 == 0) || (!horizontal && a.col % 2 == 0)
        })
        .map(|[a, b]| BadPair::new(f, a.into(), b.into()))
        .collect();
    out.push(BadPair::new(f, (3, 2), (3, 3)));
    out.push(BadPair::new(f, (3, 5), (3, 6)));
    out
}

/// Bad pairs of `R(5, n)` for n ≡ 1 (mod 3), n ≥ 10 (18 pairs).
pub fn bad_pairs_5xn(n: u32) -> Result<Vec<BadPair>> {
    if n < 10 || n % 3 != 1 {
        return Err(shape_error("the five-row table", 5, n));
    }
    let f = rect(5, n);
    let p = |a, b| BadPair::new(f, a, b);
    Ok(vec![
        p((2, 1), (2, 2)),
        p((2, n - 1), (2, n)),
        p((4, 1), (4, 2)),
        p((4, n - 1), (4, n)),
        p((1, 2), (2, 2)),
        p((1, n - 1), (2, n - 1)),
        p((4, 2), (5, 2)),
        p((4, n - 1), (5, n - 1)),
        p((2, 3), (2, 4)),
        p((2, n - 3), (2, n - 2)),
        p((4, 3), (4, 4)),
        p((4, n - 3), (4, n - 2)),
        p((2, 2), (3, 2)),
        p((3, 2), (4, 2)),
        p((2, n - 1), (3, n - 1)),
        p((3, n - 1), (4, n - 1)),
        p((3, 2), (3, 3)),
        p((3, n - 2), (3, n - 1)),
    ])
}

/// Bad pairs of `R(m, n)` for m ∈ {7, 10}, n ≡ 2 (mod 3), n ≥ 8. For m = 7
/// this is the listed table; for m = 10 the pairs in the top three rows are
/// kept and reflected about the horizontal midline.
pub fn bad_pairs_7or10xn(m: u32, n: u32) -> Result<Vec<BadPair>> {
    if !(m == 7 || m == 10) || n < 8 || n % 3 != 2 {
        return Err(shape_error("the seven/ten-row table", m, n));
    }
    let f7 = rect(7, n);
    let p = |a, b| BadPair::new(f7, a, b);
    let seven = vec![
        p((2, 1), (2, 2)),
        p((6, 1), (6, 2)),
        p((2, n - 1), (2, n)),
        p((6, n - 1), (6, n)),
        p((1, 2), (2, 2)),
        p((6, 2), (7, 2)),
        p((1, n - 1), (2, n - 1)),
        p((6, n - 1), (7, n - 1)),
        p((2, 3), (2, 4)),
        p((2, n - 3), (2, n - 2)),
        p((6, 3), (6, 4)),
        p((6, n - 3), (6, n - 2)),
        p((3, 2), (4, 2)),
        p((4, 2), (5, 2)),
        p((3, n - 1), (4, n - 1)),
        p((4, n - 1), (5, n - 1)),
    ];
    if m == 7 {
        return Ok(seven);
    }
    let f = rect(m, n);
    let top: Vec<BadPair> = seven
        .iter()
        .filter(|bp| bp.cells[0].row < 4)
        .map(|bp| BadPair { cells: bp.cells, frame: f })
        .collect();
    let mut out = top.clone();
    out.extend(top.iter().map(|bp| bp.transformed(SymmetryOp::FlipV)));
    Ok(out)
}

/// The 16 bad pairs of `R(m, n)` with m, n ≥ 7 and 3 | (mn − 2): four pairs
/// near the top-left corner and their images under the rectangle's symmetries.
pub fn bad_pairs_general(m: u32, n: u32) -> Result<Vec<BadPair>> {
    if m < 7 || n < 7 || (m as u64 * n as u64) % 3 != 2 {
        return Err(shape_error("the large-rectangle table", m, n));
    }
    let f = rect(m, n);
    let seeds = [
        BadPair::new(f, (2, 1), (2, 2)),
        BadPair::new(f, (1, 2), (2, 2)),
        BadPair::new(f, (2, 3), (2, 4)),
        BadPair::new(f, (3, 2), (4, 2)),
    ];
    Ok(SymmetryOp::RECT_GROUP
        .iter()
        .flat_map(|&op| seeds.iter().map(move |s| s.transformed(op)))
        .collect())
}

/// Separated (non-adjacent) bad pairs of `R(8,4)`, found by exhaustive search.
const EIGHT_BY_FOUR_SEPARATED: [((u32, u32), (u32, u32)); 32] = [
    ((1, 1), (2, 2)),
    ((1, 2), (2, 1)),
    ((1, 2), (3, 3)),
    ((1, 3), (2, 4)),
    ((1, 3), (3, 2)),
    ((1, 4), (2, 3)),
    ((2, 1), (3, 3)),
    ((2, 2), (3, 3)),
    ((2, 3), (3, 2)),
    ((2, 4), (3, 2)),
    ((3, 2), (4, 1)),
    ((3, 2), (4, 3)),
    ((3, 2), (4, 4)),
    ((3, 3), (4, 1)),
    ((3, 3), (4, 2)),
    ((3, 3), (4, 4)),
    ((5, 1), (6, 2)),
    ((5, 1), (6, 3)),
    ((5, 2), (6, 3)),
    ((5, 3), (6, 2)),
    ((5, 4), (6, 2)),
    ((5, 4), (6, 3)),
    ((6, 2), (7, 3)),
    ((6, 2), (7, 4)),
    ((6, 2), (8, 3)),
    ((6, 3), (7, 1)),
    ((6, 3), (7, 2)),
    ((6, 3), (8, 2)),
    ((7, 1), (8, 2)),
    ((7, 2), (8, 1)),
    ((7, 3), (8, 4)),
    ((7, 4), (8, 3)),
];

/// All bad pairs (adjacent or not) of `R(m, 4)` with m ≡ 2 (mod 3), m ≥ 8.
/// The adjacent ones are the four-row pairs transposed; the separated ones
/// are the `R(8,4)` pairs, with those in the lower half moved down to the
/// bottom of the taller board.
pub fn bad_pairs_nx4_general(m: u32) -> Result<Vec<BadPair>> {
    if m < 8 || m % 3 != 2 {
        return Err(shape_error("the four-column table", m, 4));
    }
    let f = rect(m, 4);
    let mut out: Vec<BadPair> =
        bad_pairs_4xn(m)?.iter().map(|bp| bp.transformed(SymmetryOp::Transpose)).collect();
    for &((r1, c1), (r2, c2)) in &EIGHT_BY_FOUR_SEPARATED {
        let shift = if r1 >= 5 { m - 8 } else { 0 };
        out.push(BadPair::new(f, (r1 + shift, c1), (r2 + shift, c2)));
    }
    Ok(out)
}

/// The applicable bad-pair set for a domino-deficient (or, for m x 4 boards,
/// 2-deficient) `R(m, n)`, stated in the caller's orientation.
pub fn bad_pairs(m: u32, n: u32) -> Result<Vec<BadPair>> {
    let frame = Rect::new(m, n)?;
    if (m as u64 * n as u64) % 3 != 2 {
        return Err(Error::Area(format!("3 does not divide {m}·{n} − 2")));
    }
    let (lo, hi) = (m.min(n), m.max(n));
    let canonical_rows_first;
    let set = match lo {
        1 => return Ok(Vec::new()),
        2 => {
            canonical_rows_first = m == 2;
            bad_pairs_2xn(hi)?
        }
        4 if hi == 5 => {
            canonical_rows_first = m == 4;
            bad_pairs_4x5()
        }
        4 => {
            // The four-column view also carries the separated pairs.
            canonical_rows_first = n == 4;
            bad_pairs_nx4_general(hi)?
        }
        5 if hi == 7 => {
            canonical_rows_first = m == 5;
            bad_pairs_5x7()
        }
        5 => {
            canonical_rows_first = m == 5;
            bad_pairs_5xn(hi)?
        }
        _ => {
            canonical_rows_first = m % 3 == 1;
            let (cm, cn) = if canonical_rows_first { (m, n) } else { (n, m) };
            bad_pairs_general(cm, cn)?
        }
    };
    let mut out: Vec<BadPair> = if canonical_rows_first {
        set
    } else {
        set.iter().map(|bp| bp.transformed(SymmetryOp::Transpose)).collect()
    };
    debug_assert!(out.iter().all(|bp| bp.frame == frame));
    out.sort();
    Ok(out)
}

/// Sorted, de-duplicated copy of a pair list, convenient for set comparisons.
pub fn pair_set(pairs: &[BadPair]) -> BTreeSet<[Cell; 2]> {
    pairs.iter().map(|bp| bp.cells).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(m: u32, n: u32, missing: &[(u32, u32)]) -> DeficientBoard {
        DeficientBoard::with_missing(m, n, missing).unwrap()
    }

    fn tileable(m: u32, n: u32, missing: &[(u32, u32)]) -> bool {
        decide(&board(m, n, missing)).unwrap().tileable
    }

    fn has(set: &[BadPair], a: (u32, u32), b: (u32, u32)) -> bool {
        let want = BadPair::new(set[0].frame, a, b);
        set.contains(&want)
    }

    #[test]
    fn decide_examples() {
        let v = decide(&board(7, 8, &[(2, 1), (2, 2)])).unwrap();
        assert!(!v.tileable);
        assert!(matches!(v.reason, Reason::BadPair { .. }));
        assert!(tileable(7, 8, &[(4, 4), (4, 5)]));
        assert!(!tileable(2, 4, &[(1, 2), (2, 2)]));
        assert!(tileable(1, 2, &[(1, 1), (1, 2)]));
        assert_eq!(decide(&board(3, 3, &[(1, 1)])).unwrap().reason, Reason::Area);
        assert_eq!(decide(&board(1, 5, &[(1, 1), (1, 2)])).unwrap().reason, Reason::NoFit);
        assert_eq!(decide(&board(3, 5, &[])).unwrap().reason, Reason::NoFit);
    }

    #[test]
    fn two_row_rule() {
        let d = |a: (u32, u32), b: (u32, u32)| [Cell::from(a), Cell::from(b)];
        assert!(two_row_domino_ok(4, d((1, 1), (2, 1))).unwrap());
        assert!(!two_row_domino_ok(4, d((1, 2), (2, 2))).unwrap());
        assert!(two_row_domino_ok(4, d((1, 2), (1, 3))).unwrap());
        assert!(matches!(two_row_domino_ok(5, d((1, 1), (2, 1))), Err(Error::BadShape(_))));
    }

    #[test]
    fn table_sizes_and_members() {
        let q = bad_pairs_4xn(8).unwrap();
        assert_eq!(pair_set(&q).len(), 14);
        assert!(has(&q, (2, 3), (3, 3)) && has(&q, (2, 6), (3, 6)));
        let q11 = bad_pairs_4xn(11).unwrap();
        assert!(has(&q11, (2, 10), (2, 11)) && !has(&q11, (2, 9), (2, 10)));
        assert_eq!(pair_set(&bad_pairs_4x5_short_list()).len(), 7);
        let f = bad_pairs_4x5();
        assert_eq!(pair_set(&f).len(), 15);
        assert!(has(&f, (2, 3), (3, 3)));
        assert!(!has(&f, (1, 1), (1, 2)));
        let s = bad_pairs_5x7();
        assert_eq!(pair_set(&s).len(), 26);
        assert!(has(&s, (3, 2), (3, 3)) && !has(&s, (1, 1), (2, 1)));
        let p = bad_pairs_5xn(10).unwrap();
        assert_eq!(pair_set(&p).len(), 18);
        assert!(has(&p, (3, 2), (3, 3)) && has(&p, (3, 8), (3, 9)));
        let p13 = bad_pairs_5xn(13).unwrap();
        assert!(has(&p13, (2, 10), (2, 11)) && !has(&p13, (2, 11), (2, 12)));
        let l = bad_pairs_7or10xn(7, 8).unwrap();
        assert_eq!(pair_set(&l).len(), 16);
        assert!(has(&l, (4, 2), (5, 2)));
        let g = bad_pairs_general(7, 8).unwrap();
        assert!(has(&g, (6, 7), (6, 8)));
        assert_eq!(pair_set(&bad_pairs_general(13, 11).unwrap()).len(), 16);
        assert_eq!(pair_set(&bad_pairs_nx4_general(8).unwrap()).len(), 46);
    }

    #[test]
    fn overlapping_tables_agree() {
        for n in [8, 11, 14, 17, 20] {
            for m in [7, 10] {
                assert_eq!(
                    pair_set(&bad_pairs_general(m, n).unwrap()),
                    pair_set(&bad_pairs_7or10xn(m, n).unwrap()),
                    "{m}x{n}"
                );
            }
        }
    }

    #[test]
    fn tables_are_symmetric() {
        let mut tables = vec![bad_pairs_4x5(), bad_pairs_5x7(), bad_pairs_nx4_general(8).unwrap()];
        for n in [8, 11, 14] {
            tables.push(bad_pairs_4xn(n).unwrap());
            tables.push(bad_pairs_general(7, n).unwrap());
            tables.push(bad_pairs_general(10, n).unwrap());
        }
        for n in [10, 13] {
            tables.push(bad_pairs_5xn(n).unwrap());
        }
        for n in [4, 7, 10] {
            tables.push(bad_pairs_2xn(n).unwrap());
        }
        for t in tables {
            let set = pair_set(&t);
            for op in SymmetryOp::RECT_GROUP {
                let image: BTreeSet<_> = t.iter().map(|bp| bp.transformed(op).cells).collect();
                assert_eq!(image, set, "{op:?} on {}", t[0].frame);
            }
        }
    }

    #[test]
    fn transpose_coherence() {
        for (m, n) in [(2, 7), (4, 8), (4, 5), (5, 7), (5, 10), (7, 8), (10, 11)] {
            for d in Rect::new(m, n).unwrap().dominoes() {
                let b = DeficientBoard::new(Rect::new(m, n).unwrap(), d).unwrap();
                let t = SymmetryOp::Transpose.board(&b);
                assert_eq!(decide(&b).unwrap().tileable, decide(&t).unwrap().tileable);
            }
        }
    }

    #[test]
    fn unsupported_shapes() {
        assert!(matches!(decide(&board(5, 5, &[(1, 1)])), Err(Error::UnsupportedShape(_))));
        assert!(matches!(decide(&board(7, 8, &[(1, 1), (3, 3)])), Err(Error::UnsupportedShape(_))));
        assert!(decide(&board(8, 4, &[(1, 1), (3, 3)])).is_ok());
        assert!(decide(&board(4, 8, &[(1, 1), (3, 3)])).is_ok());
        // area failures are reported even for unsupported shapes
        assert_eq!(decide(&board(5, 5, &[(1, 1), (3, 3)])).unwrap().reason, Reason::Area);
    }

    #[test]
    fn bad_pairs_dispatch_respects_orientation() {
        let a = bad_pairs(8, 7).unwrap();
        let b: BTreeSet<_> = bad_pairs(7, 8)
            .unwrap()
            .iter()
            .map(|bp| bp.transformed(SymmetryOp::Transpose).cells)
            .collect();
        assert_eq!(pair_set(&a), b);
        assert!(matches!(bad_pairs(3, 3), Err(Error::Area(_))));
    }

    #[test]
    fn verdict_json() {
        let v = decide(&board(7, 8, &[(2, 1), (2, 2)])).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"tileable":false,"reason":{"kind":"BAD_PAIR","pair":[[2,1],[2,2]],"symmetry":"IDENTITY","rule":"LARGE_RECTANGLE"}}"#
        );
    }
}
