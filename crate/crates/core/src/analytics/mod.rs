//! Closed forms, generating functions, asymptotics and bounds.

pub mod bound;
pub mod formulas;
pub mod gf;
pub mod growth;
pub mod kasteleyn;
pub mod poly;
pub mod stretch;

pub use bound::{compare_bound, upper_bound_detail, upper_bound_domino_deficient, BoundComparison, UpperBound};
pub use formulas::{t2_count_formula, t2_horizontal, t2_vertical};
pub use gf::{derived_gfs, f_harness, f_closed_form, interface_gfs, FHarnessReport};
pub use growth::{growth_constant, GrowthConstant};
pub use kasteleyn::{kasteleyn_count, KasteleynCount};
pub use poly::{gf_series, gf_series_rational, IntPolynomial, RationalGF};
pub use stretch::{stretch_map, unstretch, Axis, Colour, ColouredDominoTiling};

/// Big integers as decimal strings in JSON.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) mod decimal_opt {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}
