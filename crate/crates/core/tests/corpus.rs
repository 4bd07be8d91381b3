//! Named groups: orders, flags and the distinctions between the index-2
//! overgroups of A6.

use std::collections::BTreeMap;

use genex_core::corpus::{builtin, computed_flags, corpus_manifest, load_group};
use genex_core::grp::{parse_group, serialize_group};
use genex_core::oracle::closure;
use genex_core::{Error, Group, Limits};

fn order_statistics(g: &Group) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for x in closure(g.degree(), g.generators()) {
        *m.entry(x.order()).or_default() += 1;
    }
    m
}

#[test]
fn manifest_orders_and_flags() {
    let limits = Limits::default();
    let m = corpus_manifest();
    assert!(m.iter().all(|s| s.id != "C1"));
    for spec in m.iter().filter(|s| s.expected_order <= 1440) {
        let g = builtin(&spec.id, &limits).unwrap();
        assert_eq!(closure(g.degree(), g.generators()).len() as u128, spec.expected_order, "{}", spec.id);
        assert_eq!(computed_flags(&g, spec.expected.socle.as_deref(), &limits).unwrap(), spec.expected, "{}", spec.id);
    }
}

#[test]
fn overgroups_of_a6_are_distinct() {
    let limits = Limits::default();
    let stats: Vec<_> = ["S6", "PGL29", "M10"]
        .iter()
        .map(|id| {
            let g = builtin(id, &limits).unwrap();
            assert_eq!(g.order(), 720);
            assert_eq!(g.derived_subgroup().order(), 360);
            order_statistics(&g)
        })
        .collect();
    assert_ne!(stats[0], stats[1]);
    assert_ne!(stats[0], stats[2]);
    assert_ne!(stats[1], stats[2]);
    // M10 has no involutions outside A6; PGL(2,9) has elements of order 10.
    assert_eq!(stats[2][&2], 45);
    assert!(stats[1].contains_key(&10) && !stats[2].contains_key(&10));
    let aut = builtin("AutA6", &limits).unwrap();
    assert_eq!(aut.order(), 1440);
    for id in ["PGL29", "M10"] {
        assert!(builtin(id, &limits).unwrap().is_subgroup_of(&aut), "{id}");
    }
}

#[test]
fn extraspecial_27() {
    let limits = Limits::default();
    let exp = |id: &str| order_statistics(&builtin(id, &limits).unwrap()).keys().copied().max().unwrap();
    assert_eq!(exp("E27a"), 3);
    assert_eq!(exp("E27b"), 9);
    for id in ["E27a", "E27b"] {
        let g = builtin(id, &limits).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.derived_subgroup().order(), 3);
    }
}

#[test]
fn loader_round_trip() {
    let limits = Limits::default();
    for id in ["S5", "Q8", "AutA6", "A5wrC2"] {
        let g = builtin(id, &limits).unwrap();
        let back = parse_group(&serialize_group(&g)).unwrap();
        assert!(back.same_as(&g), "{id}");
    }
    let dir = std::env::temp_dir().join(format!("genex-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s4.grp");
    std::fs::write(&path, "degree: 4\ngen: (1,2,3,4)\ngen: (1,2)\n").unwrap();
    assert_eq!(load_group(path.to_str().unwrap(), &limits).unwrap().order(), 24);
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(matches!(load_group("builtin:Nope", &limits), Err(Error::UnknownGroup(_))));
    assert!(matches!(load_group("missing.grp", &limits), Err(Error::Io(_))));
}
