//! Serialisation helpers shared by report records.

use num_rational::Ratio;
use serde::Serializer;

use crate::perm::Perm;

/// Exact rationals are written as `"p/q"`.
pub fn ratio_string<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

pub fn format_ratio(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Cycle notation for a list of permutations.
pub fn cycles(perms: &[Perm]) -> Vec<String> {
    perms.iter().map(Perm::to_string).collect()
}
