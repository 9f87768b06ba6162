//! Generating functions for width-4 tilings.
//!
//! `G`, `G1`, `G2` count tromino tilings of 4-row regions ending in a
//! straight, deep-jog or shallow-jog interface. The mixed (one missing domino)
//! generating functions are assembled from them, split by the orientation of
//! the missing domino: `G_V` (vertical) and `G_H` (horizontal), with
//! `F = G_V + G_H`. `F` exists both as a combination of
//! `G, G1, G2` and as a closed rational function; all forms are kept so the
//! harness below can compare each against the profile DP, which is treated as
//! ground truth.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::analytics::poly::{gf_series, IntPolynomial, RationalGF};
use crate::board::Rect;
use crate::enumerate::{count_by_domino_orientation, count_interface, InterfaceKind};
use crate::error::Result;

/// `1 - 10z + 22z^2 + 4z^3`.
pub fn interface_denominator() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, -10, 22, 4])
}

fn over_d(num: &[i64]) -> RationalGF {
    RationalGF::new(IntPolynomial::from_i64(num), interface_denominator()).expect("constant term is 1")
}

/// `(G, G1, G2)`.
pub fn interface_gfs() -> (RationalGF, RationalGF, RationalGF) {
    (over_d(&[1, -6]), over_d(&[0, 1, -2]), over_d(&[0, 2]))
}

fn z(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(coeffs)
}

/// `G_V = 12z G2 G + 8 G1 G + 6z G2^2 + 2 G^2`.
pub fn g_vertical() -> RationalGF {
    let (g, g1, g2) = interface_gfs();
    g2.times(&g)
        .times_poly(&z(&[0, 12]))
        .plus(&g1.times(&g).times_poly(&z(&[8])))
        .plus(&g2.times(&g2).times_poly(&z(&[0, 6])))
        .plus(&g.times(&g).times_poly(&z(&[2])))
}

/// `G_H = 4(1+2z) G^2 + 4z(1+6z) G2^2 + 32z G1 G2 + 28z G G2 + 16z G G1`.
pub fn g_horizontal() -> RationalGF {
    let (g, g1, g2) = interface_gfs();
    g.times(&g)
        .times_poly(&z(&[4, 8]))
        .plus(&g2.times(&g2).times_poly(&z(&[0, 4, 24])))
        .plus(&g1.times(&g2).times_poly(&z(&[0, 32])))
        .plus(&g.times(&g2).times_poly(&z(&[0, 28])))
        .plus(&g.times(&g1).times_poly(&z(&[0, 16])))
}

/// `F` expanded as a sum of products:
/// `6G^2 + 10z G2^2 + 32z G1 G2 + 24z^2 G2^2 + 40z G G2 + 16z G G1 + 8z G^2 + 8 G G1`.
pub fn f_expanded() -> RationalGF {
    let (g, g1, g2) = interface_gfs();
    let gg = g.times(&g);
    let g2g2 = g2.times(&g2);
    gg.times_poly(&z(&[6, 8]))
        .plus(&g2g2.times_poly(&z(&[0, 10, 24])))
        .plus(&g1.times(&g2).times_poly(&z(&[0, 32])))
        .plus(&g.times(&g2).times_poly(&z(&[0, 40])))
        .plus(&g.times(&g1).times_poly(&z(&[8, 16])))
}

/// The closed form `(6 - 56z + 152z^2 - 120z^3 + 160z^4) / D^2`.
pub fn f_closed_form() -> RationalGF {
    RationalGF::new(z(&[6, -56, 152, -120, 160]), interface_denominator().pow(2)).expect("constant term is 1")
}

/// `(G_V, G_H, F)` with `F = G_V + G_H` assembled symbolically.
pub fn derived_gfs() -> (RationalGF, RationalGF, RationalGF) {
    let (v, h) = (g_vertical(), g_horizontal());
    let f = v.plus(&h);
    (v, h, f)
}

/// Looks up a generating function by its CLI name.
pub fn named_gf(name: &str) -> Option<RationalGF> {
    let (g, g1, g2) = interface_gfs();
    Some(match name.to_ascii_uppercase().as_str() {
        "G" => g,
        "G1" => g1,
        "G2" => g2,
        "GV" | "G_V" => g_vertical(),
        "GH" | "G_H" => g_horizontal(),
        "F" | "F_CLOSED_FORM" => f_closed_form(),
        "F_EXPANDED" => f_expanded(),
        "F_SUM" => derived_gfs().2,
        _ => return None,
    })
}

pub const GF_NAMES: [&str; 8] = ["G", "G1", "G2", "GV", "GH", "F", "F_EXPANDED", "F_SUM"];

/// Which width a series coefficient is compared with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IndexConvention {
    /// `z^t` counts `R(4, 3t+2)`, `t >= 0`.
    Offset0,
    /// `z^t` counts `R(4, 3t+5)`: the constant term is the first board with a
    /// positive `t` in `R(4, 3t+2)`.
    Offset1,
}

impl IndexConvention {
    pub fn cols(self, t: usize) -> u32 {
        3 * t as u32 + if self == IndexConvention::Offset0 { 2 } else { 5 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub t: usize,
    pub cols: u32,
    pub series: String,
    pub dp: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionResult {
    pub convention: IndexConvention,
    pub exact_match: bool,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormResult {
    pub form: String,
    pub gf: String,
    pub series: Vec<String>,
    pub conventions: Vec<ConventionResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    ExactMatch { form: String, convention: IndexConvention },
    Discrepancy { summary: String },
}

/// Outcome of comparing the `F` forms with DP counts of `R(4, 3t+2)` minus a
/// domino (and the `G_V`/`G_H` components with the per-orientation counts).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FHarnessReport {
    pub terms: usize,
    /// DP totals for `R(4, 3t+2)`, `t = 0..=terms+1`.
    pub dp_total: Vec<String>,
    pub dp_vertical: Vec<String>,
    pub dp_horizontal: Vec<String>,
    pub forms: Vec<FormResult>,
    pub components: Vec<FormResult>,
    /// Whether the closed form and the sum-of-products form agree as series.
    pub closed_form_equals_expansion: bool,
    pub conclusion: Conclusion,
}

fn compare(form: &str, gf: &RationalGF, dp: &[BigInt], terms: usize, conventions: &[IndexConvention]) -> Result<FormResult> {
    let series = gf_series(gf, terms)?;
    let conventions = conventions
        .iter()
        .map(|&convention| {
            let shift = usize::from(convention == IndexConvention::Offset1);
            let mismatches: Vec<Mismatch> = series
                .iter()
                .enumerate()
                .filter(|&(t, s)| s != &dp[t + shift])
                .map(|(t, s)| Mismatch {
                    t,
                    cols: convention.cols(t),
                    series: s.to_string(),
                    dp: dp[t + shift].to_string(),
                })
                .collect();
            ConventionResult { convention, exact_match: mismatches.is_empty(), mismatches }
        })
        .collect();
    Ok(FormResult {
        form: form.to_string(),
        gf: gf.to_string(),
        series: series.iter().map(ToString::to_string).collect(),
        conventions,
    })
}

/// Compares every form of `F` with the DP for coefficients `0..=terms`.
pub fn f_harness(terms: usize) -> Result<FHarnessReport> {
    let (mut total, mut vertical, mut horizontal) = (Vec::new(), Vec::new(), Vec::new());
    for t in 0..=terms + 1 {
        let (v, h) = count_by_domino_orientation(Rect::new(4, 3 * t as u32 + 2)?)?;
        total.push(BigInt::from(&v + &h));
        vertical.push(BigInt::from(v));
        horizontal.push(BigInt::from(h));
    }
    let both = [IndexConvention::Offset0, IndexConvention::Offset1];
    let (gv, gh, sum) = derived_gfs();
    let forms = vec![
        compare("CLOSED_FORM", &f_closed_form(), &total, terms, &both)?,
        compare("EXPANDED_PRODUCTS", &f_expanded(), &total, terms, &both)?,
        compare("G_V_PLUS_G_H", &sum, &total, terms, &both)?,
    ];
    let components = vec![
        compare("G_V", &gv, &vertical, terms, &both)?,
        compare("G_H", &gh, &horizontal, terms, &both)?,
    ];
    let matched = forms
        .iter()
        .flat_map(|f| f.conventions.iter().map(move |c| (f, c)))
        .find(|(_, c)| c.exact_match);
    let conclusion = match matched {
        Some((f, c)) => Conclusion::ExactMatch { form: f.form.clone(), convention: c.convention },
        None => {
            let closest = forms
                .iter()
                .flat_map(|f| f.conventions.iter().map(move |c| (f, c)))
                .min_by_key(|(_, c)| c.mismatches.first().map_or(usize::MAX, |m| usize::MAX - m.t))
                .expect("forms are nonempty");
            let first = &closest.1.mismatches[0];
            Conclusion::Discrepancy {
                summary: format!(
                    "no form matches under either convention; closest is {} under {:?}, first differing at t={} (R(4,{})): series {} vs DP {}",
                    closest.0.form, closest.1.convention, first.t, first.cols, first.series, first.dp
                ),
            }
        }
    };
    Ok(FHarnessReport {
        terms,
        dp_total: total.iter().map(ToString::to_string).collect(),
        dp_vertical: vertical.iter().map(ToString::to_string).collect(),
        dp_horizontal: horizontal.iter().map(ToString::to_string).collect(),
        forms,
        components,
        closed_form_equals_expansion: f_closed_form().same_series(&f_expanded()),
        conclusion,
    })
}

/// DP sequence for an interface kind, `t = 0..=terms`.
pub fn interface_sequence(kind: InterfaceKind, terms: usize) -> Vec<BigInt> {
    (0..=terms as u32).map(|t| BigInt::from(count_interface(kind, t))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn interface_gf_series() {
        let (g, g1, g2) = interface_gfs();
        assert_eq!(ints(&gf_series(&g, 5).unwrap()), [1, 4, 18, 88, 468, 2672]);
        assert_eq!(ints(&gf_series(&g1, 5).unwrap()), [0, 1, 8, 58, 400, 2692]);
        assert_eq!(ints(&gf_series(&g2, 5).unwrap()), [0, 2, 20, 156, 1112, 7608]);
    }

    #[test]
    fn interface_gfs_match_dp() {
        let (g, g1, g2) = interface_gfs();
        for (gf, kind) in [(g, InterfaceKind::Straight), (g1, InterfaceKind::DeepJog), (g2, InterfaceKind::ShallowJog)] {
            assert_eq!(gf_series(&gf, 6).unwrap(), interface_sequence(kind, 6), "{kind:?}");
        }
    }

    #[test]
    fn derived_denominators() {
        let (v, h, f) = derived_gfs();
        let d2 = interface_denominator().pow(2);
        assert_eq!(v.denominator, d2);
        assert_eq!(h.denominator, d2);
        assert_eq!(f.denominator, d2);
        assert!(f.same_series(&f_expanded()));
        assert_eq!(ints(&gf_series(&f_closed_form(), 1).unwrap()), [6, 64]);
    }

    #[test]
    fn harness_reports() {
        let r = f_harness(4).unwrap();
        assert_eq!(r.dp_total[..3], ["6", "64", "548"]);
        assert_eq!(r.forms.len(), 3);
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["conclusion"]["status"].is_string());
    }

    #[test]
    fn names() {
        for n in GF_NAMES {
            assert!(named_gf(n).is_some(), "{n}");
        }
        assert!(named_gf("nope").is_none());
    }
}
