//! Worked examples for counting and enumeration.

use num_bigint::BigUint;
use tromino::enumerate::{
    count_domino, count_interface, count_tromino, count_tromino_plus_one_domino, enumerate_tilings, InterfaceKind,
};
use tromino::{DeficientBoard, Error, Rect};

fn full(m: u32, n: u32) -> DeficientBoard {
    DeficientBoard::full(Rect::new(m, n).unwrap())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

#[test]
fn tromino_counts() {
    assert_eq!(count_tromino(&full(2, 6)).unwrap(), big(4));
    assert_eq!(count_tromino(&full(3, 3)).unwrap(), big(0));
    assert_eq!(count_tromino(&full(4, 3)).unwrap(), big(4));
    assert_eq!(count_tromino(&full(3, 4)).unwrap(), big(4));
}

#[test]
fn mixed_and_domino_counts() {
    let r = |m, n| Rect::new(m, n).unwrap();
    assert_eq!(count_tromino_plus_one_domino(r(2, 4)).unwrap(), big(6));
    assert_eq!(count_tromino_plus_one_domino(r(2, 7)).unwrap(), big(20));
    assert_eq!(count_tromino_plus_one_domino(r(4, 5)).unwrap(), big(64));
    assert_eq!(count_domino(r(2, 2)).unwrap(), big(2));
    assert_eq!(count_domino(r(1, 3)).unwrap(), big(0));
    assert_eq!(count_domino(r(4, 4)).unwrap(), big(36));
    assert!(matches!(count_tromino_plus_one_domino(r(3, 3)), Err(Error::Area(_))));
}

#[test]
fn interface_counts() {
    assert_eq!(count_interface(InterfaceKind::Straight, 0), big(1));
    assert_eq!(count_interface(InterfaceKind::Straight, 2), big(18));
    assert_eq!(count_interface(InterfaceKind::DeepJog, 1), big(1));
    assert_eq!(count_interface(InterfaceKind::ShallowJog, 1), big(2));
}

#[test]
fn width_cap() {
    let err = count_tromino(&full(17, 18)).unwrap_err();
    assert!(matches!(err, Error::WidthCap { rows: 17, cols: 18, .. }));
    // One small side is enough, whichever it is.
    assert_eq!(count_tromino(&full(60, 2)).unwrap(), big(1 << 20));
}

#[test]
fn enumeration() {
    assert_eq!(enumerate_tilings(&full(2, 3), None).unwrap().len(), 2);
    let b = DeficientBoard::with_missing(2, 4, &[(1, 1), (2, 1)]).unwrap();
    let all = enumerate_tilings(&b, None).unwrap();
    assert_eq!(BigUint::from(all.len()), count_tromino(&b).unwrap());
    assert!(all.iter().all(|t| t.validate().ok));
    let bad = DeficientBoard::with_missing(4, 5, &[(2, 3), (3, 3)]).unwrap();
    assert!(enumerate_tilings(&bad, None).unwrap().is_empty());
    assert_eq!(enumerate_tilings(&full(6, 6), Some(5)).unwrap().len(), 5);
    let big_board = full(15, 15);
    assert!(matches!(enumerate_tilings(&big_board, None), Err(Error::CapExceeded { .. })));
}
