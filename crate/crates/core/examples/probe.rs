use std::collections::HashSet;
use tromino::analytics::{f_harness, stretch::{stretch_map, Axis}};
use tromino::enumerate::{enumerate_tilings_with, TileMix};
use tromino::{DeficientBoard, Rect};
fn main() {
    println!("{}", serde_json::to_string_pretty(&f_harness(6).unwrap()).unwrap());
    for (m, n) in [(2, 4), (2, 7), (4, 5)] {
        let ts = enumerate_tilings_with(&DeficientBoard::full(Rect::new(m, n).unwrap()), TileMix::TrominoPlusOneDomino, None, 100).unwrap();
        for ax in [Axis::H, Axis::V] {
            let s: HashSet<_> = ts.iter().map(|t| stretch_map(t, ax).unwrap()).collect();
            println!("{m}x{n} {ax:?}: {} tilings, {} images", ts.len(), s.len());
        }
    }
}
