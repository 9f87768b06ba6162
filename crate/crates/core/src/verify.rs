//! The verification suite: every characterization table, count and formula
//! checked against an independent computation, reported check by check.
//!
//! The first twelve checks are the acceptance gate; [`run_verify`] adds the
//! remaining invariants.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analytics::gf::{f_harness, interface_sequence, interface_gfs, Conclusion};
use crate::analytics::growth::{growth_constant, REFERENCE_DIGITS};
use crate::analytics::stretch::{stretch_map, Axis};
use crate::analytics::{
    compare_bound, gf_series, kasteleyn_count, t2_count_formula, t2_horizontal, t2_vertical,
};
use crate::board::{Cell, DeficientBoard, Rect, SymmetryOp};
use crate::characterize::{self, decide, pair_set};
use crate::construct::search::{enumerate_with, solve_exact, DEFAULT_CELL_CAP};
use crate::construct::{construct_tiling, Outcome};
use crate::enumerate::{
    count_by_domino_orientation, count_domino, count_tromino, count_tromino_plus_one_domino,
    count_tromino_plus_one_domino_by_sum, InterfaceKind, TileMix,
};
use crate::error::Result;

/// One verified statement: `lhs` and `rhs` are the two sides compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub criterion: Option<u8>,
    pub scope: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn new(id: &str, scope: impl Into<String>, lhs: impl ToString, rhs: impl ToString, pass: bool) -> Check {
        Check {
            id: id.to_string(),
            criterion: None,
            scope: scope.into(),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: None,
        }
    }

    fn equal<T: PartialEq + ToString>(id: &str, scope: impl Into<String>, lhs: T, rhs: T) -> Check {
        let pass = lhs == rhs;
        Check::new(id, scope, lhs, rhs, pass)
    }

    fn note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    fn failed(id: &str, scope: impl Into<String>, err: impl ToString) -> Check {
        Check::new(id, scope, "error", err.to_string(), false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn from_checks(checks: Vec<Check>) -> VerifyReport {
        let passed = checks.iter().filter(|c| c.pass).count();
        VerifyReport { ok: passed == checks.len(), passed, failed: checks.len() - passed, checks }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Random boards handed to the constructor.
    pub random_boards: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { random_boards: 1000, seed: 0x7e57 }
    }
}

fn rect(m: u32, n: u32) -> Rect {
    Rect::new(m, n).expect("positive dimensions")
}

/// Result of comparing [`decide`] with the exact-cover search on a list of boards.
struct Agreement {
    total: usize,
    disagreements: Vec<String>,
    bad: BTreeSet<[Cell; 2]>,
}

fn agreement(boards: impl IntoIterator<Item = DeficientBoard>) -> Result<Agreement> {
    let mut a = Agreement { total: 0, disagreements: Vec::new(), bad: BTreeSet::new() };
    for b in boards {
        a.total += 1;
        let oracle = solve_exact(&b)?.is_some();
        if decide(&b)?.tileable != oracle {
            a.disagreements.push(b.to_string());
        }
        if !oracle && b.missing().len() == 2 {
            a.bad.insert([b.missing()[0], b.missing()[1]]);
        }
    }
    Ok(a)
}

fn domino_boards(m: u32, n: u32) -> impl Iterator<Item = DeficientBoard> {
    let frame = rect(m, n);
    frame.dominoes().map(move |d| DeficientBoard::new(frame, d).expect("domino inside frame"))
}

fn pair_boards(m: u32, n: u32) -> impl Iterator<Item = DeficientBoard> {
    let frame = rect(m, n);
    let cells: Vec<Cell> = frame.cells().collect();
    let pairs: Vec<[Cell; 2]> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| cells[i + 1..].iter().map(move |&b| [a, b]))
        .collect();
    pairs.into_iter().map(move |p| DeficientBoard::new(frame, p).expect("cells inside frame"))
}

fn agreement_check(id: &str, shapes: &[(u32, u32)], bad_sizes: Option<usize>) -> Check {
    let mut total = 0;
    let mut disagreements = Vec::new();
    let mut sizes = Vec::new();
    for &(m, n) in shapes {
        match agreement(domino_boards(m, n)) {
            Ok(a) => {
                total += a.total;
                disagreements.extend(a.disagreements);
                sizes.push(format!("{m}x{n}:{}", a.bad.len()));
                if let Some(k) = bad_sizes {
                    if a.bad.len() != k {
                        disagreements.push(format!("R({m},{n}) has {} bad pairs, expected {k}", a.bad.len()));
                    }
                }
            }
            Err(e) => return Check::failed(id, format!("{shapes:?}"), e),
        }
    }
    let scope = shapes.iter().map(|(m, n)| format!("R({m},{n})")).collect::<Vec<_>>().join(", ");
    let c = Check::new(
        id,
        scope,
        format!("{} of {total} positions agree", total - disagreements.len()),
        format!("{total} positions; bad pairs {}", sizes.join(" ")),
        disagreements.is_empty(),
    );
    match disagreements.first() {
        Some(d) => c.note(format!("first disagreement: {d}")),
        None => c,
    }
}

/// Criterion 1: Two-row boards: decide against search on every domino, both orientations.
pub fn two_row_characterization(_: &VerifyOptions) -> Check {
    let shapes: Vec<(u32, u32)> = [4, 7, 10, 13].iter().flat_map(|&n| [(2, n), (n, 2)]).collect();
    agreement_check("two_row_characterization", &shapes, None)
}

/// Criterion 2: `(2t+1) 2^t` mixed tilings of `R(2, 3t+1)`, with its two components.
pub fn two_row_closed_form(_: &VerifyOptions) -> Check {
    let mut bad = Vec::new();
    for t in 1..=10u32 {
        let r = rect(2, 3 * t + 1);
        let total = count_tromino_plus_one_domino(r);
        let split = count_by_domino_orientation(r);
        match (total, split) {
            (Ok(total), Ok((v, h))) => {
                if total != t2_count_formula(t) || v != t2_vertical(t) || h != t2_horizontal(t) {
                    bad.push(format!("t={t}: DP {total} = {v} + {h}"));
                }
            }
            (Err(e), _) | (_, Err(e)) => return Check::failed("two_row_closed_form", "1 <= t <= 10", e),
        }
    }
    Check::new(
        "two_row_closed_form",
        "R(2,3t+1), 1 <= t <= 10",
        "DP counts (total, vertical, horizontal)",
        "(2t+1)2^t, (t+1)2^t, t 2^t",
        bad.is_empty(),
    )
    .note(if bad.is_empty() { "all ten equal".into() } else { bad.join("; ") })
}

/// Criterion 3: Four-row boards, with exactly 14 bad pairs on `R(4,8)`.
pub fn four_row_characterization(_: &VerifyOptions) -> Check {
    agreement_check("four_row_characterization", &[(4, 8), (4, 11), (4, 14)], Some(14))
}

fn to_strings(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Criterion 4: Series of `G` against DP counts of `R(4, 3t)`.
pub fn straight_interface_series(_: &VerifyOptions) -> Check {
    let (g, _, _) = interface_gfs();
    let series = match gf_series(&g, 6) {
        Ok(s) => s,
        Err(e) => return Check::failed("straight_interface_series", "t <= 6", e),
    };
    let mut dp = vec![BigInt::from(1)];
    for t in 1..=6u32 {
        match count_tromino(&DeficientBoard::full(rect(4, 3 * t))) {
            Ok(c) => dp.push(BigInt::from(c)),
            Err(e) => return Check::failed("straight_interface_series", "t <= 6", e),
        }
    }
    let head_ok = series[..3] == [1, 4, 18].map(BigInt::from);
    Check::new("straight_interface_series", "R(4,3t), 0 <= t <= 6", to_strings(&series), to_strings(&dp), series == dp && head_ok)
}

/// Criterion 5: Every form of `F` against DP counts; passes when the harness reaches an
/// explicit conclusion (an exact match or a structured discrepancy report).
pub fn mixed_width_four_harness(_: &VerifyOptions) -> Check {
    let report = match f_harness(6) {
        Ok(r) => r,
        Err(e) => return Check::failed("mixed_width_four_harness", "t <= 6", e),
    };
    let consistent = match &report.conclusion {
        Conclusion::ExactMatch { form, convention } => report
            .forms
            .iter()
            .any(|f| &f.form == form && f.conventions.iter().any(|c| c.convention == *convention && c.exact_match)),
        Conclusion::Discrepancy { summary } => {
            !summary.is_empty()
                && report.forms.iter().all(|f| f.conventions.iter().all(|c| !c.exact_match && !c.mismatches.is_empty()))
        }
    };
    let status = match &report.conclusion {
        Conclusion::ExactMatch { .. } => "EXACT_MATCH".to_string(),
        Conclusion::Discrepancy { summary } => format!("DISCREPANCY: {summary}"),
    };
    let components: Vec<String> = report
        .components
        .iter()
        .map(|c| {
            let hits: Vec<String> = c
                .conventions
                .iter()
                .filter(|r| r.exact_match)
                .map(|r| format!("{:?}", r.convention))
                .collect();
            format!("{} matches DP under [{}]", c.form, hits.join(","))
        })
        .collect();
    Check::new(
        "mixed_width_four_harness",
        "R(4,3t+2) minus a domino, t <= 6, both index conventions",
        status,
        format!("DP {}", report.dp_total.join(" ")),
        consistent,
    )
    .note(components.join("; "))
}

/// Criterion 6: Five-row boards; `R(5,10)` has exactly the tabulated 18 bad pairs.
pub fn five_row_characterization(_: &VerifyOptions) -> Check {
    let mut c = agreement_check("five_row_characterization", &[(5, 7), (5, 10), (5, 13)], None);
    let table = match characterize::bad_pairs_5xn(10) {
        Ok(t) => pair_set(&t),
        Err(e) => return Check::failed("five_row_characterization", "R(5,10)", e),
    };
    match agreement(domino_boards(5, 10)) {
        Ok(a) => {
            let same = a.bad == table && table.len() == 18;
            c.pass &= same;
            c.rhs = format!("{}; R(5,10) oracle bad set {} table ({} pairs)", c.rhs, if same { "equals" } else { "differs from" }, table.len());
        }
        Err(e) => return Check::failed("five_row_characterization", "R(5,10)", e),
    }
    c
}

/// Random domino-deficient boards that decide accepts, up to `R(61, 62)`.
pub fn random_tileable_boards(n: usize, seed: u64) -> Vec<DeficientBoard> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (m, k) = (rng.gen_range(2..=61u32), rng.gen_range(2..=62u32));
        if (m * k) % 3 != 2 {
            continue;
        }
        let frame = rect(m, k);
        let (r, c) = (rng.gen_range(1..=m), rng.gen_range(1..=k));
        let other = match rng.gen_bool(0.5) {
            true if c < k => Cell::new(r, c + 1),
            _ if r < m => Cell::new(r + 1, c),
            _ => continue,
        };
        let b = DeficientBoard::new(frame, [Cell::new(r, c), other]).expect("cells inside frame");
        if decide(&b).is_ok_and(|v| v.tileable) {
            out.push(b);
        }
    }
    out
}

/// Criterion 7: Large boards: exhaustive agreement on three shapes, then construction on
/// random boards.
pub fn large_rectangles(opts: &VerifyOptions) -> Check {
    let mut c = agreement_check("large_rectangles", &[(7, 8), (7, 11), (10, 8)], Some(16));
    let boards = random_tileable_boards(opts.random_boards, opts.seed);
    let mut failures = Vec::new();
    for b in &boards {
        match construct_tiling(b) {
            Ok(Outcome::Tiled(t)) if t.tiling.validate().ok && t.steps_partition() => {}
            Ok(_) => failures.push(b.to_string()),
            Err(e) => failures.push(format!("{b}: {e}")),
        }
    }
    c.pass &= failures.is_empty();
    c.lhs = format!("{}; {} of {} random boards tiled cleanly", c.lhs, boards.len() - failures.len(), boards.len());
    c.rhs = format!("{}; {} random boards up to R(61,62)", c.rhs, boards.len());
    if let Some(f) = failures.first() {
        c = c.note(format!("first construction failure: {f}"));
    }
    c
}

/// Criterion 8: All pairs of `R(8,4)` against the table, and decide on all pairs of `R(11,4)`.
pub fn four_column_two_deficient(_: &VerifyOptions) -> Check {
    let id = "four_column_two_deficient";
    let (eight, eleven) = match (agreement(pair_boards(8, 4)), agreement(pair_boards(11, 4))) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Check::failed(id, "R(8,4), R(11,4)", e),
    };
    let table = match characterize::bad_pairs_nx4_general(8) {
        Ok(t) => pair_set(&t),
        Err(e) => return Check::failed(id, "R(8,4)", e),
    };
    let separated = |s: &BTreeSet<[Cell; 2]>| s.iter().filter(|p| !p[0].is_adjacent(p[1])).count();
    let pass = eight.bad == table && eight.disagreements.is_empty() && eleven.disagreements.is_empty();
    Check::new(
        id,
        "R(8,4) all pairs, R(11,4) all pairs",
        format!(
            "R(8,4): {} pairs tested, oracle bad {} ({} separated); R(11,4): {} of {} agree",
            eight.total,
            eight.bad.len(),
            separated(&eight.bad),
            eleven.total - eleven.disagreements.len(),
            eleven.total
        ),
        format!("table bad {} ({} separated)", table.len(), separated(&table)),
        pass,
    )
}

/// Criterion 9: Growth constant to 12 decimals, cubic residual below 1e-9.
pub fn growth_constant_digits(_: &VerifyOptions) -> Check {
    let g = growth_constant();
    let reference: f64 = REFERENCE_DIGITS.parse().expect("literal");
    let pass = format!("{:.12}", g.value) == format!("{reference:.12}") && g.residual() < 1e-9;
    Check::new("growth_constant_digits", "Newton from 10", format!("{:.15} (residual {:.1e})", g.value, g.residual()), REFERENCE_DIGITS, pass)
}

/// Criterion 10: The product formula against DP domino counts for even boards up to 12x12.
pub fn kasteleyn_vs_dp(_: &VerifyOptions) -> Check {
    let mut worst = 0f64;
    let mut bad = Vec::new();
    let mut boards = 0;
    for m in 1..=6u32 {
        for n in 1..=6u32 {
            let dp = match count_domino(rect(2 * m, 2 * n)) {
                Ok(d) => d,
                Err(e) => return Check::failed("kasteleyn_vs_dp", "2m, 2n <= 12", e),
            };
            let k = kasteleyn_count(m, n);
            let dp_f: f64 = dp.to_string().parse().expect("decimal");
            let rel = (k.value - dp_f).abs() / dp_f;
            worst = worst.max(rel);
            boards += 1;
            if k.rounded != dp || rel >= 1e-9 {
                bad.push(format!("R({},{}): {} vs {dp}", 2 * m, 2 * n, k.rounded));
            }
        }
    }
    Check::new(
        "kasteleyn_vs_dp",
        "all R(2m,2n) with 2m, 2n <= 12",
        format!("{boards} boards exact after rounding: {}", bad.is_empty()),
        format!("max relative error {worst:.2e} < 1e-9"),
        bad.is_empty() && worst < 1e-9,
    )
}

/// Criterion 11: The upper bound holds on every admissible `(m, n)` with `m, n <= 8`.
pub fn upper_bound_holds(_: &VerifyOptions) -> Check {
    let mut tested = 0;
    let mut violations = Vec::new();
    let mut tightest: Option<(f64, String)> = None;
    for m in 1..=8u32 {
        for n in 1..=8u32 {
            if m * n < 2 || (m * n - 2) % 3 != 0 {
                continue;
            }
            match compare_bound(m, n) {
                Ok(c) => {
                    tested += 1;
                    if !c.holds {
                        violations.push(format!("R({m},{n}): {} > {}", c.count, c.bound.bound));
                    }
                    let ratio = big_ratio(&c.count, &c.bound.bound);
                    if tightest.as_ref().is_none_or(|(r, _)| ratio > *r) {
                        tightest = Some((ratio, format!("R({m},{n})")));
                    }
                }
                Err(e) => return Check::failed("upper_bound_holds", format!("R({m},{n})"), e),
            }
        }
    }
    let (ratio, at) = tightest.unwrap_or((0.0, "-".into()));
    Check::new(
        "upper_bound_holds",
        "m, n <= 8, 3 | mn - 2",
        format!("{tested} pairs, {} violations", violations.len()),
        format!("largest count/bound ratio {ratio:.3e} at {at}"),
        violations.is_empty() && tested > 0,
    )
}

fn big_ratio(a: &BigUint, b: &BigUint) -> f64 {
    let (la, lb) = (a.bits() as i64, b.bits() as i64);
    let shift = (la.max(lb) - 60).max(0) as u64;
    let (x, y) = (a >> shift, b >> shift);
    let f = |v: BigUint| v.to_string().parse::<f64>().unwrap_or(f64::NAN);
    f(x) / f(y)
}

/// Criterion 12: The stretch map is one-to-one on the mixed tilings of three boards.
pub fn stretch_injective(_: &VerifyOptions) -> Check {
    let mut parts = Vec::new();
    let mut pass = true;
    for (m, n) in [(2u32, 4u32), (2, 7), (4, 5)] {
        let board = DeficientBoard::full(rect(m, n));
        let tilings = match enumerate_with(&board, TileMix::TrominoPlusOneDomino, None, DEFAULT_CELL_CAP) {
            Ok(t) => t,
            Err(e) => return Check::failed("stretch_injective", format!("R({m},{n})"), e),
        };
        let count = count_tromino_plus_one_domino(rect(m, n)).map(|c| c.to_string()).unwrap_or_default();
        pass &= tilings.len().to_string() == count;
        for axis in [Axis::H, Axis::V] {
            let images: std::result::Result<HashSet<_>, _> = tilings.iter().map(|t| stretch_map(t, axis)).collect();
            match images {
                Ok(images) => {
                    pass &= images.len() == tilings.len();
                    parts.push(format!("R({m},{n}) {axis:?}: {}/{}", images.len(), tilings.len()));
                }
                Err(e) => return Check::failed("stretch_injective", format!("R({m},{n})"), e),
            }
        }
    }
    Check::new("stretch_injective", "R(2,4), R(2,7), R(4,5), both axes", "distinct images / tilings", parts.join(", "), pass)
}

pub type CheckFn = fn(&VerifyOptions) -> Check;

/// The acceptance gate, in order.
pub const ACCEPTANCE: [(u8, CheckFn); 12] = [
    (1, two_row_characterization),
    (2, two_row_closed_form),
    (3, four_row_characterization),
    (4, straight_interface_series),
    (5, mixed_width_four_harness),
    (6, five_row_characterization),
    (7, large_rectangles),
    (8, four_column_two_deficient),
    (9, growth_constant_digits),
    (10, kasteleyn_vs_dp),
    (11, upper_bound_holds),
    (12, stretch_injective),
];

pub fn acceptance_checks(opts: &VerifyOptions) -> Vec<Check> {
    ACCEPTANCE
        .iter()
        .map(|&(k, f)| Check { criterion: Some(k), ..f(opts) })
        .collect()
}

/// Invariants beyond the acceptance gate.
pub fn invariant_checks() -> Vec<Check> {
    let mut out = Vec::new();

    // Transpose coherence and symmetry closure of the tables.
    let mut incoherent = 0;
    let mut boards = 0;
    for (m, n) in [(4, 8), (5, 10), (7, 8), (10, 11), (2, 13), (8, 4)] {
        for b in domino_boards(m, n) {
            boards += 1;
            let t = SymmetryOp::Transpose.board(&b);
            let same = matches!((decide(&b), decide(&t)), (Ok(x), Ok(y)) if x.tileable == y.tileable);
            incoherent += usize::from(!same);
        }
    }
    out.push(Check::equal("decide_transpose_coherent", format!("{boards} domino boards"), incoherent, 0));

    let mut open = Vec::new();
    for (m, n) in [(2, 7), (4, 5), (4, 11), (5, 7), (5, 13), (7, 11), (10, 14), (13, 8), (8, 4), (14, 4)] {
        let Ok(set) = characterize::bad_pairs(m, n) else {
            open.push(format!("R({m},{n}) has no table"));
            continue;
        };
        let s = pair_set(&set);
        for op in SymmetryOp::RECT_GROUP {
            if set.iter().any(|p| !s.contains(&p.transformed(op).cells)) {
                open.push(format!("R({m},{n}) under {op:?}"));
            }
        }
    }
    out.push(Check::new("bad_pairs_symmetry_closed", "ten shapes x four symmetries", format!("{} open", open.len()), "0 open", open.is_empty()));

    let mut mismatched = Vec::new();
    for n in [8, 11, 14, 17, 20] {
        let same = matches!(
            (characterize::bad_pairs_general(7, n), characterize::bad_pairs_7or10xn(7, n)),
            (Ok(a), Ok(b)) if pair_set(&a) == pair_set(&b)
        );
        if !same {
            mismatched.push(n);
        }
    }
    out.push(Check::new("seven_row_tables_agree", "R(7,n), n = 8..20", format!("{mismatched:?}"), "[]", mismatched.is_empty()));

    // Convolution identity for vertical dominoes on two rows.
    let two = |k: u32| count_tromino(&DeficientBoard::full(rect(2, 3 * k.max(1)))).map(|c| if k == 0 { BigUint::from(1u32) } else { c });
    let mut conv_ok = true;
    for t in 1..=8u32 {
        let sum: Result<BigUint> = (0..=t).map(|k| Ok(two(k)? * two(t - k)?)).sum();
        conv_ok &= sum.is_ok_and(|s| s == t2_vertical(t));
    }
    out.push(Check::new("two_row_convolution", "1 <= t <= 8", "sum_k T(2,3k) T(2,3(t-k))", "(t+1) 2^t", conv_ok));

    // Mixed count: DP flag against the outer sum over domino positions.
    let mut rects = 0;
    let mut diffs = Vec::new();
    for m in 1..=16u32 {
        for n in m..=80 / m {
            if m * n < 2 || (m * n - 2) % 3 != 0 {
                continue;
            }
            rects += 1;
            let (a, b) = (count_tromino_plus_one_domino(rect(m, n)), count_tromino_plus_one_domino_by_sum(rect(m, n)));
            if !matches!((&a, &b), (Ok(x), Ok(y)) if x == y) {
                diffs.push(format!("R({m},{n})"));
            }
        }
    }
    out.push(Check::new("mixed_count_decomposition", format!("{rects} rectangles, area <= 80"), format!("{} differ", diffs.len()), "0 differ", diffs.is_empty()));

    // Enumeration against counting on small boards.
    let mut small = 0;
    let mut disagree = Vec::new();
    for m in 2..=6u32 {
        for n in m..=36 / m {
            let frame = rect(m, n);
            let mut boards: Vec<DeficientBoard> = vec![DeficientBoard::full(frame)];
            if (m * n) % 3 == 2 {
                boards.extend(domino_boards(m, n).step_by(3));
            }
            for b in boards {
                small += 1;
                let listed = crate::enumerate::enumerate_tilings(&b, None).map(|v| v.len().to_string());
                let counted = count_tromino(&b).map(|c| c.to_string());
                if !matches!((&listed, &counted), (Ok(x), Ok(y)) if x == y) {
                    disagree.push(b.to_string());
                }
            }
        }
    }
    out.push(Check::new("enumeration_matches_count", format!("{small} boards, area <= 36"), format!("{} disagree", disagree.len()), "0 disagree", disagree.is_empty()));

    // Counts are invariant under every symmetry (the DP sweeps a different axis after a transpose).
    let mut asym = Vec::new();
    for (m, n, miss) in [(4, 5, [(1, 1), (1, 2)]), (5, 7, [(3, 3), (3, 4)]), (7, 8, [(4, 1), (5, 1)]), (10, 11, [(2, 5), (2, 6)])] {
        let b = DeficientBoard::with_missing(m, n, &miss).expect("valid board");
        let base = count_tromino(&b).ok();
        for op in SymmetryOp::ALL {
            if count_tromino(&op.board(&b)).ok() != base {
                asym.push(format!("{b} under {op:?}"));
            }
        }
    }
    out.push(Check::new("count_symmetry_invariant", "four boards x five symmetries", format!("{} differ", asym.len()), "0 differ", asym.is_empty()));

    // Positivity of the DP count agrees with decide.
    let mut pos = 0;
    let mut pos_bad = Vec::new();
    for (m, n) in [(2, 10), (4, 8), (4, 11), (5, 7), (5, 10), (7, 8), (8, 10)] {
        for b in domino_boards(m, n) {
            pos += 1;
            let agree = matches!((count_tromino(&b), decide(&b)), (Ok(c), Ok(v)) if (c > BigUint::default()) == v.tileable);
            if !agree {
                pos_bad.push(b.to_string());
            }
        }
    }
    out.push(Check::new("count_positive_iff_tileable", format!("{pos} domino boards"), format!("{} disagree", pos_bad.len()), "0 disagree", pos_bad.is_empty()));

    // Jogged interfaces against their generating functions.
    let (_, g1, g2) = interface_gfs();
    for (name, gf, kind) in [("deep_jog_series", g1, InterfaceKind::DeepJog), ("shallow_jog_series", g2, InterfaceKind::ShallowJog)] {
        let series = gf_series(&gf, 6).unwrap_or_default();
        out.push(Check::equal(name, "0 <= t <= 6", to_strings(&series), to_strings(&interface_sequence(kind, 6))));
    }

    // Growth: consecutive straight-interface ratios approach the constant, and
    // the mixed counts stay within a bounded band of t λ^t.
    let lambda = growth_constant().value;
    let n10 = interface_sequence(InterfaceKind::Straight, 10);
    let ratio = big_ratio(&n10[10].magnitude().clone(), &n10[9].magnitude().clone());
    out.push(Check::new("straight_ratio_approaches_growth", "N(10)/N(9)", format!("{ratio:.6}"), format!("{lambda:.6} within 1%"), (ratio / lambda - 1.0).abs() < 0.01));

    let mut band = Vec::new();
    for t in 4..=10u32 {
        if let Ok(c) = count_tromino_plus_one_domino(rect(4, 3 * t + 2)) {
            let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
            band.push(c / (t as f64 * lambda.powi(t as i32)));
        }
    }
    let (lo, hi) = band.iter().fold((f64::MAX, 0f64), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    out.push(
        Check::new("mixed_width_four_band", "T(4,3t+2)/(t λ^t), 4 <= t <= 10", format!("[{lo:.4}, {hi:.4}]"), "max/min < 2", band.len() == 7 && hi / lo < 2.0)
            .note(band.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(" ")),
    );
    out
}

/// Acceptance checks followed by the remaining invariants.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let mut checks = acceptance_checks(opts);
    checks.extend(invariant_checks());
    VerifyReport::from_checks(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        let opts = VerifyOptions { random_boards: 5, seed: 1 };
        for f in [two_row_closed_form, straight_interface_series, growth_constant_digits, kasteleyn_vs_dp] {
            let c = f(&opts);
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn random_boards_are_tileable_and_deterministic() {
        let a = random_tileable_boards(20, 3);
        assert_eq!(a, random_tileable_boards(20, 3));
        assert!(a.iter().all(|b| b.is_domino_deficient() && b.rows() <= 61 && b.cols() <= 62));
    }
}
