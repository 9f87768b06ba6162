//! Randomised invariants over boards, tilings, counts and series.

use num_bigint::BigInt;
use proptest::prelude::*;
use tromino::analytics::{gf_series, IntPolynomial, RationalGF};
use tromino::board::{hquad_shift, HSide};
use tromino::characterize::decide;
use tromino::construct::search::solve_exact;
use tromino::construct::{construct_tiling, Outcome};
use tromino::enumerate::count_tromino;
use tromino::{Cell, DeficientBoard, Rect, SymmetryOp, Tiling};

/// A domino-deficient board with `3 | mn - 2`, sides in the given range.
fn domino_board(max_side: u32) -> impl Strategy<Value = DeficientBoard> {
    (2..=max_side, 2..=max_side)
        .prop_filter("area residue", |(m, n)| (m * n) % 3 == 2)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 1..=m, 1..=n, any::<bool>()))
        .prop_filter_map("domino inside", |(m, n, r, c, horizontal)| {
            let other = if horizontal { Cell::new(r, c + 1) } else { Cell::new(r + 1, c) };
            DeficientBoard::new(Rect::new(m, n).ok()?, [Cell::new(r, c), other]).ok()
        })
}

fn symmetry() -> impl Strategy<Value = SymmetryOp> {
    prop::sample::select(SymmetryOp::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetries_are_involutions(b in domino_board(20), op in symmetry()) {
        prop_assert_eq!(op.board(&op.board(&b)), b.clone());
        prop_assert_eq!(op.inverse(), op);
    }

    #[test]
    fn constructed_tilings_survive_symmetry(b in domino_board(30), op in symmetry()) {
        if let Outcome::Tiled(c) = construct_tiling(&b).unwrap() {
            let moved: Tiling = op.tiling(&c.tiling);
            prop_assert!(moved.validate().ok);
            prop_assert_eq!(&moved.board, &op.board(&b));
            prop_assert_eq!(op.tiling(&moved).canonical(), c.tiling.canonical());
        }
    }

    #[test]
    fn decide_matches_search_and_is_symmetric(b in domino_board(11), op in symmetry()) {
        let verdict = decide(&b).unwrap();
        prop_assert_eq!(verdict.tileable, solve_exact(&b).unwrap().is_some());
        prop_assert_eq!(decide(&op.board(&b)).unwrap().tileable, verdict.tileable);
    }

    #[test]
    fn counts_are_symmetric_and_positive_iff_tileable(b in domino_board(9), op in symmetry()) {
        let n = count_tromino(&b).unwrap();
        prop_assert_eq!(count_tromino(&op.board(&b)).unwrap(), n.clone());
        prop_assert_eq!(n > 0u32.into(), decide(&b).unwrap().tileable);
    }

    #[test]
    fn board_json_round_trips(b in domino_board(40)) {
        let json = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<DeficientBoard>(&json).unwrap(), b);
    }

    #[test]
    fn shifts_keep_the_frame(b in domino_board(20), k in 1u32..4) {
        if let Ok(s) = hquad_shift(&b, k, HSide::Left) {
            prop_assert_eq!(s.rect(), b.rect());
            prop_assert!(s.missing().iter().zip(b.missing()).all(|(x, y)| x.col + k == y.col && x.row == y.row));
        }
    }

    #[test]
    fn series_of_products_convolve(
        a in prop::collection::vec(-5i64..=5, 1..4),
        b in prop::collection::vec(-5i64..=5, 1..4),
    ) {
        let d = IntPolynomial::from_i64(&[1, -3, 1]);
        let f = RationalGF::new(IntPolynomial::from_i64(&a), d.clone()).unwrap();
        let g = RationalGF::new(IntPolynomial::from_i64(&b), d).unwrap();
        let (sf, sg, sfg) = (gf_series(&f, 8).unwrap(), gf_series(&g, 8).unwrap(), gf_series(&f.times(&g), 8).unwrap());
        for k in 0..=8 {
            let conv: BigInt = (0..=k).map(|i| &sf[i] * &sg[k - i]).sum();
            prop_assert_eq!(&sfg[k], &conv);
        }
    }
}
