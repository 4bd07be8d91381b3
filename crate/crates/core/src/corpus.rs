//! Named groups used by the verification suites.
//!
//! A spec is `builtin:<id>`, a path to a `.grp` file, or a product
//! expression `direct(<spec>,<spec>)` / `wreath(<spec>,<spec>)`. Builtins
//! are validated on every load: order and structural flags are recomputed.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::grp::parse_group;
use crate::limits::Limits;
use crate::perm::Perm;
use crate::products::{direct_product, wreath_product, WreathFrame};
use crate::structure::{is_nilpotent, is_simple, is_solvable, socle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Builtin,
    File,
    ProductExpression,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub solvable: bool,
    pub nilpotent: bool,
    pub simple: bool,
    /// Id of the socle when the group is almost simple.
    pub socle: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSpec {
    pub id: String,
    pub source: Source,
    pub degree: usize,
    pub expected_order: u128,
    pub expected: Flags,
}

const PGL29: &str = include_str!("../data/PGL29.grp");
const M10: &str = include_str!("../data/M10.grp");
const AUT_A6: &str = include_str!("../data/AutA6.grp");

fn perm(text: &str, degree: usize) -> Perm {
    Perm::parse(text, degree).expect("builtin generator")
}

fn gens(degree: usize, list: &[&str]) -> Group {
    Group::new(degree, list.iter().map(|s| perm(s, degree)).collect()).expect("builtin group")
}

/// Dihedral group of order `2n` on `n` points.
pub fn dihedral(n: usize) -> Group {
    let rot: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    Group::new(n, vec![Perm::from_images(rot).unwrap(), Perm::from_images(refl).unwrap()]).unwrap()
}

/// `SL(2, p)` acting on the non-zero row vectors of `F_p^2`.
pub fn special_linear_2(p: u32) -> Group {
    let vectors: Vec<(u32, u32)> = (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[u32; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = ((x * m[0][0] + y * m[1][0]) % p, (x * m[0][1] + y * m[1][1]) % p);
                vectors.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    Group::new(vectors.len(), vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])]).unwrap()
}

fn from_text(id: &str, text: &str) -> Group {
    parse_group(text).unwrap_or_else(|e| panic!("shipped data for {id} is malformed: {e}"))
}

fn flags(solvable: bool, nilpotent: bool, simple: bool, socle: Option<&str>) -> Flags {
    Flags { solvable, nilpotent, simple, socle: socle.map(str::to_string) }
}

fn nilpotent() -> Flags {
    flags(true, true, false, None)
}

fn solvable() -> Flags {
    flags(true, false, false, None)
}

fn almost_simple(socle: &str, simple: bool) -> Flags {
    flags(false, false, simple, Some(socle))
}

/// Builds an unvalidated builtin together with its expected order and flags.
fn builtin_raw(id: &str) -> Option<(Group, u128, Flags)> {
    if let Some(n) = id.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        if (2..=24).contains(&n) {
            let simple = crate::arith::is_prime(n as u64);
            return Some((Group::cyclic(n), n as u128, flags(true, true, simple, None)));
        }
    }
    if let Some(n) = id.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) {
        if (3..=12).contains(&n) {
            let two_group = n.is_power_of_two();
            let f = if two_group { nilpotent() } else { solvable() };
            return Some((dihedral(n), 2 * n as u128, f));
        }
    }
    let limits = Limits::default();
    let out = match id {
        "C2r" => (gens(2, &["(1,2)"]), 2, flags(true, true, true, None)),
        "C2xC6" => (direct_product(&Group::cyclic(2), &Group::cyclic(6), &limits).ok()?, 12, nilpotent()),
        "C2xC2xC2" => {
            let c2 = Group::cyclic(2);
            let c22 = direct_product(&c2, &c2, &limits).ok()?;
            (direct_product(&c22, &c2, &limits).ok()?, 8, nilpotent())
        }
        "Q8" => (gens(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]), 8, nilpotent()),
        // Heisenberg group: (a, b) -> (a + 1, b) and (a, b) -> (a, b + a) on F_3^2,
        // point (a, b) numbered 3a + b + 1.
        "E27a" => (gens(9, &["(1,4,7)(2,5,8)(3,6,9)", "(4,5,6)(7,9,8)"]), 27, nilpotent()),
        // C9 ⋊ C3: t -> t + 1 and t -> 4t on Z/9.
        "E27b" => (gens(9, &["(1,2,3,4,5,6,7,8,9)", "(2,5,8)(3,9,6)"]), 27, nilpotent()),
        "S3" => (Group::symmetric(3), 6, solvable()),
        "S4" => (Group::symmetric(4), 24, solvable()),
        "A4" => (Group::alternating(4), 12, solvable()),
        "SL23" => (special_linear_2(3), 24, solvable()),
        "F20" => (gens(5, &["(1,2,3,4,5)", "(2,3,5,4)"]), 20, solvable()),
        "A5" => (Group::alternating(5), 60, almost_simple("A5", true)),
        "S5" => (Group::symmetric(5), 120, almost_simple("A5", false)),
        "SL25" => (special_linear_2(5), 120, flags(false, false, false, None)),
        "A6" => (Group::alternating(6), 360, almost_simple("A6", true)),
        "S6" => (Group::symmetric(6), 720, almost_simple("A6", false)),
        "PGL29" => (from_text(id, PGL29), 720, almost_simple("A6", false)),
        "M10" => (from_text(id, M10), 720, almost_simple("A6", false)),
        "AutA6" => (from_text(id, AUT_A6), 1440, almost_simple("A6", false)),
        "A7" => (Group::alternating(7), 2520, almost_simple("A7", true)),
        "S7" => (Group::symmetric(7), 5040, almost_simple("A7", false)),
        "A8" => (Group::alternating(8), 20160, almost_simple("A8", true)),
        "S8" => (Group::symmetric(8), 40320, almost_simple("A8", false)),
        "A5xA5" => {
            let a5 = Group::alternating(5);
            (direct_product(&a5, &a5, &limits).ok()?, 3600, flags(false, false, false, None))
        }
        "A5wrC2" => (wreath_product(&Group::alternating(5), &gens(2, &["(1,2)"]), &limits).ok()?.0, 7200, flags(false, false, false, None)),
        _ => return None,
    };
    Some(out)
}

/// Every builtin id in manifest order.
pub fn builtin_ids() -> Vec<String> {
    let mut ids: Vec<String> = (2..=24).map(|n| format!("C{n}")).collect();
    ids.extend(["C2r", "C2xC6", "C2xC2xC2", "Q8"].map(String::from));
    ids.extend((3..=12).map(|n| format!("D{n}")));
    ids.extend(
        [
            "E27a", "E27b", "S3", "S4", "A4", "SL23", "F20", "S5", "A5", "SL25", "A6", "S6", "PGL29", "M10", "AutA6", "A7", "S7",
            "A8", "S8", "A5xA5", "A5wrC2",
        ]
        .map(String::from),
    );
    ids
}

/// The full named corpus.
pub fn corpus_manifest() -> Vec<GroupSpec> {
    builtin_ids()
        .into_iter()
        .map(|id| {
            let (g, order, expected) = builtin_raw(&id).expect("manifest ids are builtins");
            let source = if ["PGL29", "M10", "AutA6"].contains(&id.as_str()) { Source::File } else { Source::Builtin };
            GroupSpec { id, source, degree: g.degree(), expected_order: order, expected }
        })
        .collect()
}

/// Flags recomputed from the group itself. `socle` holds the id of the
/// expected socle when the computed socle matches it.
pub fn computed_flags(g: &Group, expected_socle: Option<&str>, limits: &Limits) -> Result<Flags> {
    let simple = is_simple(g, limits)?;
    let socle_id = match expected_socle {
        None => None,
        Some(sid) => {
            let (s, s_order, _) = builtin_raw(sid).ok_or_else(|| Error::UnknownGroup(sid.to_string()))?;
            let soc = socle(g, limits)?;
            let matches = soc.order() == s_order && !soc.is_abelian() && is_simple(&soc, limits)? && s.order() == s_order;
            matches.then(|| sid.to_string())
        }
    };
    Ok(Flags { solvable: is_solvable(g), nilpotent: is_nilpotent(g), simple, socle: socle_id })
}

fn validate(id: &str, g: &Group, order: u128, expected: &Flags, limits: &Limits) -> Result<()> {
    let fail = |reason: String| Err(Error::Validation { id: id.to_string(), reason });
    if g.order() != order {
        return fail(format!("order {} differs from expected {order}", g.order()));
    }
    let got = computed_flags(g, expected.socle.as_deref(), limits)?;
    if got != *expected {
        return fail(format!("flags {got:?} differ from expected {expected:?}"));
    }
    if expected.socle.as_deref() == Some("A6") {
        let derived = g.derived_subgroup();
        if derived.order() != 360 || !is_simple(&derived, limits)? {
            return fail("derived subgroup is not A6".into());
        }
    }
    Ok(())
}

fn cache() -> &'static Mutex<HashMap<String, Group>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Group>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A validated builtin. Validated groups are kept for the life of the process.
pub fn builtin(id: &str, limits: &Limits) -> Result<Group> {
    if let Some(g) = cache().lock().expect("corpus cache").get(id) {
        return Ok(g.clone());
    }
    let (g, order, expected) = builtin_raw(id).ok_or_else(|| Error::UnknownGroup(id.to_string()))?;
    validate(id, &g, order, &expected, limits)?;
    cache().lock().expect("corpus cache").insert(id.to_string(), g.clone());
    Ok(g)
}

/// `Aut(S)` as a permutation group on the points of `S`, for the socles the
/// corpus knows.
pub fn automorphism_group(socle_id: &str, limits: &Limits) -> Result<Option<Group>> {
    let id = match socle_id {
        "A5" => "S5",
        "A6" => "AutA6",
        "A7" => "S7",
        "A8" => "S8",
        _ => return Ok(None),
    };
    builtin(id, limits).map(Some)
}

/// Splits `name(a,b)` at its top-level comma.
fn split_call<'a>(spec: &'a str, name: &str) -> Option<Result<(&'a str, &'a str)>> {
    let inner = spec.strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(Ok((inner[..i].trim(), inner[i + 1..].trim()))),
            _ => {}
        }
        if depth < 0 {
            break;
        }
    }
    Some(Err(Error::Parse { text: spec.to_string(), reason: "expected two comma-separated arguments".into() }))
}

/// Loads a group from a spec string.
pub fn load_group(spec: &str, limits: &Limits) -> Result<Group> {
    let spec = spec.trim();
    if let Some(id) = spec.strip_prefix("builtin:") {
        return builtin(id.trim(), limits);
    }
    if let Some(args) = split_call(spec, "direct") {
        let (a, b) = args?;
        return direct_product(&load_group(a, limits)?, &load_group(b, limits)?, limits);
    }
    if let Some(args) = split_call(spec, "wreath") {
        let (a, b) = args?;
        return Ok(wreath_product(&load_group(a, limits)?, &load_group(b, limits)?, limits)?.0);
    }
    if spec.ends_with(".grp") || Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
        return parse_group(&text);
    }
    if builtin_raw(spec).is_some() {
        return builtin(spec, limits);
    }
    Err(Error::UnknownGroup(spec.to_string()))
}

/// Loads a subgroup spec: `gens:(1,2,3);(1,2)` lists generators on `degree`
/// points, anything else goes through [`load_group`].
pub fn load_subgroup(spec: &str, degree: usize, limits: &Limits) -> Result<Group> {
    let spec = spec.trim();
    if let Some(list) = spec.strip_prefix("gens:") {
        let gens = list
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| Perm::parse(t, degree))
            .collect::<Result<Vec<_>>>()?;
        return Group::new(degree, gens);
    }
    let g = load_group(spec, limits)?;
    if g.degree() != degree {
        return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
    }
    Ok(g)
}

/// The block structure of a group spec: `wreath(A, B)` gives `|B|`-point
/// blocks of size `deg A`, any other group a single block.
pub fn load_with_frame(spec: &str, limits: &Limits) -> Result<(Group, WreathFrame)> {
    if let Some(args) = split_call(spec.trim(), "wreath") {
        let (a, b) = args?;
        return wreath_product(&load_group(a, limits)?, &load_group(b, limits)?, limits);
    }
    let g = load_group(spec, limits)?;
    let frame = WreathFrame::new(1, g.degree());
    Ok((g, frame))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let limits = Limits::default();
        let s5 = load_group("builtin:S5", &limits).unwrap();
        assert_eq!((s5.degree(), s5.order()), (5, 120));
        let aut = load_group("builtin:AutA6", &limits).unwrap();
        assert_eq!((aut.degree(), aut.order()), (10, 1440));
        assert_eq!(aut.derived_subgroup().order(), 360);
        let w = load_group("wreath(builtin:A5, builtin:C2r)", &limits).unwrap();
        assert_eq!((w.degree(), w.order()), (10, 7200));
        let d = load_group("direct(builtin:C2, direct(builtin:C3, builtin:C5))", &limits).unwrap();
        assert_eq!(d.order(), 30);
        assert!(matches!(load_group("builtin:C1", &limits), Err(Error::UnknownGroup(_))));
        assert!(load_group("wreath(builtin:A5)", &limits).is_err());
        let h = load_subgroup("gens:(1,2,3); (1,2)", 5, &limits).unwrap();
        assert_eq!((h.degree(), h.order()), (5, 6));
        assert!(load_subgroup("builtin:S4", 5, &limits).is_err());
        let (w, frame) = load_with_frame("wreath(builtin:A5, builtin:C2r)", &limits).unwrap();
        assert_eq!((w.order(), frame.blocks, frame.inner_degree), (7200, 2, 5));
        assert_eq!(load_with_frame("S5", &limits).unwrap().1.blocks, 1);
    }

    #[test]
    fn small_builtins_validate() {
        let limits = Limits::default();
        for spec in corpus_manifest().iter().filter(|s| s.expected_order <= 1440) {
            builtin(&spec.id, &limits).unwrap_or_else(|e| panic!("{}: {e}", spec.id));
        }
        let m = corpus_manifest();
        assert!(m.iter().any(|s| s.id == "A5" && s.expected.simple));
        assert!(m.iter().any(|s| s.id == "PGL29" && s.expected.socle.as_deref() == Some("A6")));
    }
}
