//! Flexibility and good pairs, checked against the definitions on explicit
//! element lists.

use std::collections::{BTreeSet, HashSet};

use genex_core::arith::{prime_divisors, r_part};
use genex_core::corpus::{automorphism_group, builtin};
use genex_core::flexibility::{
    coset_order_profiles, flexible_subgroup_search, is_flexible, maximal_flexibility, semi_order_leq, GoodPairContext,
    is_good_pair,
};
use genex_core::lattice::all_subgroups;
use genex_core::oracle::closure;
use genex_core::{Group, Limits, Perm};
use proptest::prelude::*;

fn p(s: &str, n: usize) -> Perm {
    Perm::parse(s, n).unwrap()
}

/// The three conditions, read literally: `H ∩ S != S`, `HS = K`, and some
/// prime `r` such that every `h` has an `s` in `H ∩ S` changing `|h|_r`.
fn flexible_oracle(k: &Group, s: &Group, h: &Group) -> bool {
    let hs: Vec<Perm> = closure(h.degree(), h.generators());
    let core: Vec<Perm> = hs.iter().filter(|x| s.has(x)).cloned().collect();
    if core.len() as u128 == s.order() {
        return false;
    }
    let mut joint = h.generators().to_vec();
    joint.extend(s.generators().iter().cloned());
    if closure(k.degree(), &joint).len() as u128 != k.order() {
        return false;
    }
    prime_divisors(k.order()).into_iter().any(|r| {
        hs.iter().all(|x| {
            let target = r_part(x.order(), r);
            core.iter().any(|c| r_part(x.mul(c).order(), r) != target)
        })
    })
}

#[test]
fn maximal_subgroups_against_definition() {
    let limits = Limits::default();
    for (kid, sid) in [("A5", "A5"), ("S5", "A5"), ("S6", "A6"), ("PGL29", "A6"), ("M10", "A6"), ("AutA6", "A6")] {
        let k = builtin(kid, &limits).unwrap();
        let s = if kid == sid { k.clone() } else { k.derived_subgroup() };
        assert_eq!(s.order(), builtin(sid, &limits).unwrap().order());
        let lattice = all_subgroups(&k, &limits).unwrap();
        for m in maximal_flexibility(&k, &s, &limits).unwrap() {
            let h = &lattice.class(m.class).group;
            let expected = !m.contains_socle && flexible_oracle(&k, &s, h);
            let got = m.report.as_ref().is_some_and(|r| r.verdict);
            assert_eq!(got, expected, "{kid} class {} of order {}", m.class, m.order);
        }
    }
}

#[test]
fn affine_maximal_of_s5_is_not_flexible() {
    let limits = Limits::default();
    let s5 = Group::symmetric(5);
    let a5 = Group::alternating(5);
    let f20 = Group::new(5, vec![p("(1,2,3,4,5)", 5), p("(2,3,5,4)", 5)]).unwrap();
    assert_eq!(f20.order(), 20);
    let rep = is_flexible(&s5, &a5, &f20, &limits).unwrap();
    assert!(rep.proper_in_socle && rep.supplements);
    assert!(!rep.verdict);
    assert!(!flexible_oracle(&s5, &a5, &f20));
    // Every element outside A5 has order 4, so no product hs moves its r-part.
    let odd: BTreeSet<u64> = closure(5, f20.generators()).iter().filter(|x| !a5.has(x)).map(Perm::order).collect();
    assert_eq!(odd, BTreeSet::from([4]));
    let core = f20.intersection(&a5, &limits).unwrap();
    let fam: Vec<BTreeSet<u64>> = coset_order_profiles(&f20, &core, &limits).unwrap().into_iter().map(|c| c.orders).collect();
    assert_eq!(fam, vec![BTreeSet::from([4])]);
    // It is maximal in S5.
    let lattice = all_subgroups(&s5, &limits).unwrap();
    let (i, _) = lattice.locate(&f20).unwrap();
    assert!(lattice.class(i).maximal);
    // Inside A5 the same group meets the socle in D10, which is flexible there.
    let d10 = f20.intersection(&a5, &limits).unwrap();
    assert!(is_flexible(&a5, &a5, &d10, &limits).unwrap().verdict);
}

#[test]
fn aut_a6_families() {
    let limits = Limits::default();
    let k = builtin("AutA6", &limits).unwrap();
    let s = k.derived_subgroup().derived_subgroup();
    assert_eq!(s.order(), 360);
    let mut non_flexible = Vec::new();
    for m in maximal_flexibility(&k, &s, &limits).unwrap() {
        if let Some(r) = m.report.filter(|r| !r.verdict) {
            let core = r.h.intersection(&s, &limits).unwrap();
            let fam: BTreeSet<BTreeSet<u64>> =
                coset_order_profiles(&r.h, &core, &limits).unwrap().into_iter().map(|c| c.orders).collect();
            // Same family straight from the element list.
            let elems = closure(10, r.h.generators());
            let mut direct = BTreeSet::new();
            for g in elems.iter().filter(|x| !s.has(x)) {
                direct.insert(elems.iter().filter(|c| s.has(c)).map(|c| g.mul(c).order()).collect::<BTreeSet<u64>>());
            }
            assert_eq!(fam, direct);
            non_flexible.push((m.order, fam));
        }
    }
    non_flexible.sort();
    let set = |v: &[&[u64]]| v.iter().map(|o| o.iter().copied().collect()).collect::<BTreeSet<BTreeSet<u64>>>();
    assert_eq!(
        non_flexible,
        vec![(40, set(&[&[2, 10], &[4]])), (144, set(&[&[2, 6], &[4], &[8]]))]
    );
}

#[test]
fn flexible_subgroups_exist() {
    let limits = Limits::default();
    for kid in ["A5", "S5", "A6", "S6", "PGL29", "M10", "AutA6"] {
        let k = builtin(kid, &limits).unwrap();
        let mut s = k.clone();
        while s.derived_subgroup().order() != s.order() {
            s = s.derived_subgroup();
        }
        let (h, rep) = flexible_subgroup_search(&k, &s, &limits).unwrap().unwrap_or_else(|| panic!("{kid}"));
        assert!(rep.verdict);
        assert!(flexible_oracle(&k, &s, &h), "{kid}");
    }
}

#[test]
fn good_pairs() {
    let limits = Limits::default();
    let a5 = Group::alternating(5);
    let aut = automorphism_group("A5", &limits).unwrap();
    let a = p("(1,2,3,4,5)", 5);
    let b = p("(1,2,3)", 5);
    assert_eq!(closure(5, &[a.clone(), b.clone()]).len(), 60);
    let one = GoodPairContext::new(vec![a.clone()], vec![vec![0]], b.clone(), a5.clone(), aut.clone()).unwrap();
    assert!(is_good_pair(&one, &limits).unwrap());
    // a_2 = a_1^(1,2)(3,4) is conjugate in S5, so the pair is not good.
    let t = p("(1,2)(3,4)", 5);
    let two =
        GoodPairContext::new(vec![a.clone(), a.conjugate_by(&t)], vec![vec![0], vec![1]], b.clone(), a5.clone(), aut.clone())
            .unwrap();
    assert!(!is_good_pair(&two, &limits).unwrap());
    // A 3-cycle is not conjugate to a 5-cycle under any automorphism.
    let three = GoodPairContext::new(vec![a, b.clone()], vec![vec![0], vec![1]], b, a5, aut).unwrap();
    assert!(is_good_pair(&three, &limits).unwrap());
}

fn s5_element() -> impl Strategy<Value = Perm> {
    Just((0..5u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn semi_order_is_total_and_transitive(a in s5_element(), b in s5_element(), c in s5_element(), r in prop::sample::select(vec![2u64, 3, 5])) {
        let le = |x: &Perm, y: &Perm| semi_order_leq(x, y, r).unwrap();
        prop_assert!(le(&a, &b) || le(&b, &a));
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c));
        }
        prop_assert!(le(&a, &a));
    }
}

#[test]
fn verdict_ignores_prime_order() {
    use genex_core::flexibility::is_flexible_with_primes;
    let limits = Limits::default();
    let k = builtin("AutA6", &limits).unwrap();
    let s = k.derived_subgroup().derived_subgroup();
    let lattice = all_subgroups(&k, &limits).unwrap();
    let seen: HashSet<bool> = lattice
        .maximal_classes()
        .filter(|(_, c)| !s.is_subgroup_of(&c.group))
        .map(|(_, c)| {
            let fwd = is_flexible_with_primes(&k, &s, &c.group, &[2, 3, 5], &limits).unwrap().verdict;
            let rev = is_flexible_with_primes(&k, &s, &c.group, &[5, 3, 2], &limits).unwrap().verdict;
            assert_eq!(fwd, rev);
            fwd
        })
        .collect();
    assert_eq!(seen.len(), 2);
}
