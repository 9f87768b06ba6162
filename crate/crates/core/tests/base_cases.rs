//! The committed base-case table must match a fresh exact-cover run.
//! Set `TROMINO_REGEN=1` to rewrite the data file instead.

use tromino::construct::base_cases::{base_case_table, generate, render_table};

#[test]
fn committed_table_matches_regeneration() {
    let fresh = render_table(&generate().unwrap());
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/base_cases.txt");
    if std::env::var_os("TROMINO_REGEN").is_some() {
        std::fs::write(path, &fresh).unwrap();
        return;
    }
    let committed = std::fs::read_to_string(path).unwrap();
    assert!(committed == fresh, "base-case table is stale; rerun with TROMINO_REGEN=1");
    assert_eq!(render_table(base_case_table()), committed);
}
