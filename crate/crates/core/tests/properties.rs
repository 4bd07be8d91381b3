//! Randomised algebraic invariants.

use genex_core::oracle::closure;
use genex_core::{Group, Perm};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_group_axioms(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.pow(a.order() as i64), Perm::identity(7));
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
        for x in 0..7u32 {
            prop_assert_eq!(a.mul(&b).apply(x), b.apply(a.apply(x)));
        }
        prop_assert_eq!(Perm::parse(&a.to_string(), 7).unwrap(), a);
    }

    #[test]
    fn chain_order_and_membership(a in perm(6), b in perm(6), x in perm(6)) {
        let g = Group::new(6, vec![a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(factorial(6) % g.order(), 0);
        let elems = closure(6, &[a.clone(), b.clone()]);
        prop_assert_eq!(g.order(), elems.len() as u128);
        prop_assert_eq!(g.has(&x), elems.contains(&x));
        prop_assert!(g.has(&a.mul(&b).inverse()));
        let d = g.derived_subgroup();
        prop_assert!(d.is_normal_in(&g));
        prop_assert_eq!(g.order() % d.order(), 0);
    }
}
