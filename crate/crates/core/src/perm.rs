//! Permutations in image form.
//!
//! Points are stored 0-based; everything that crosses the text boundary
//! (cycle notation, `.grp` files, reports) is 1-based. Products act on the
//! right: `a.mul(&b)` maps `x` to `(x^a)^b`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let p = p as usize;
            if p >= n {
                return Err(Error::PointOutOfRange { point: p as u64 + 1, degree: n });
            }
            if seen[p] {
                return Err(Error::RepeatedPoint(p as u32 + 1));
            }
            seen[p] = true;
        }
        Ok(Perm { images })
    }

    pub fn from_images_one_based(images: &[u32]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &p in images {
            if p == 0 || p as usize > images.len() {
                return Err(Error::PointOutOfRange { point: p as u64, degree: images.len() });
            }
            v.push(p - 1);
        }
        Self::from_images(v)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p as usize >= degree {
                    return Err(Error::PointOutOfRange { point: p as u64 + 1, degree });
                }
                if used[p as usize] {
                    return Err(Error::RepeatedPoint(p + 1));
                }
                used[p as usize] = true;
                images[p as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)` or `()`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
            if !rest.starts_with('(') {
                return Err(err("expected '('"));
            }
            let body = &rest[1..body_end];
            rest = &rest[body_end + 1..];
            if body.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                if tok.is_empty() {
                    return Err(err("empty point"));
                }
                let p: u64 = tok.parse().map_err(|_| err("non-numeric point"))?;
                if p == 0 || p > degree as u64 {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                cycle.push((p - 1) as u32);
            }
            cycles.push(cycle);
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self` followed by `other`.
    #[inline]
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&p| other.images[p as usize]).collect() }
    }

    pub fn mul_assign_right(&mut self, other: &Perm) {
        for p in self.images.iter_mut() {
            *p = other.images[*p as usize];
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        let mut out = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            out[other.images[i] as usize] = other.images[p as usize];
        }
        Perm { images: out }
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// All cycles including fixed points.
    pub fn all_cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted multiset of cycle lengths (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.all_cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.images.iter().enumerate().filter(|(i, &p)| *i as u32 == p).map(|(i, _)| i as u32)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.fixed_points().next().is_some()
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|(i, &p)| *i as u32 != p).map(|(i, _)| i as u32)
    }

    /// Restriction to the points `offset..offset+len`, which must be invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Option<Perm> {
        let mut images = Vec::with_capacity(len);
        for i in offset..offset + len {
            let p = self.images[i] as usize;
            if p < offset || p >= offset + len {
                return None;
            }
            images.push((p - offset) as u32);
        }
        Some(Perm { images })
    }

    /// Places `self` on points `offset..offset+degree` of a larger set.
    pub fn embed(&self, offset: usize, total: usize) -> Perm {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &p) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + p;
        }
        Perm { images }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert!(Perm::parse("()", 4).unwrap().is_identity());
        assert_eq!(Perm::parse("(1,2,3)", 5).unwrap().images_one_based(), vec![2, 3, 1, 4, 5]);
        assert_eq!(Perm::parse("(1,2)(3,4)", 4).unwrap().images_one_based(), vec![2, 1, 4, 3]);
        assert_eq!(Perm::parse(" (1, 2) ( 3,4 ) ", 4).unwrap().images_one_based(), vec![2, 1, 4, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Perm::parse("(1,2", 4), Err(Error::Parse { .. })));
        assert!(matches!(Perm::parse("1,2)", 4), Err(Error::Parse { .. })));
        assert!(matches!(Perm::parse("(1,a)", 4), Err(Error::Parse { .. })));
        assert!(matches!(Perm::parse("(1,,2)", 4), Err(Error::Parse { .. })));
        assert!(matches!(Perm::parse("(1,5)", 4), Err(Error::PointOutOfRange { point: 5, .. })));
        assert!(matches!(Perm::parse("(0,1)", 4), Err(Error::PointOutOfRange { .. })));
        assert!(matches!(Perm::parse("(1,2)(2,3)", 4), Err(Error::RepeatedPoint(2))));
        assert!(matches!(Perm::parse("(1,2,1)", 4), Err(Error::RepeatedPoint(1))));
    }

    #[test]
    fn display_round_trip() {
        let p = Perm::parse("(2,5,3)(4,6)", 7).unwrap();
        assert_eq!(p.to_string(), "(2,5,3)(4,6)");
        assert_eq!(Perm::parse(&p.to_string(), 7).unwrap(), p);
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn right_action_product() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&b).to_string(), "(1,3,2)");
    }

    #[test]
    fn order_and_powers() {
        let g = Perm::parse("(1,2,3,4)(5,6,7)", 7).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.pow(12).is_identity());
        assert_eq!(g.pow(-1), g.inverse());
        assert_eq!(g.pow(5).mul(&g.pow(7)), Perm::identity(7));
        assert_eq!(g.cycle_type(), vec![3, 4]);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = Perm::parse("(1,2,3)", 4).unwrap();
        let t = Perm::parse("(1,4)", 4).unwrap();
        assert_eq!(g.conjugate_by(&t), t.inverse().mul(&g).mul(&t));
        assert_eq!(g.conjugate_by(&t).to_string(), "(2,3,4)");
    }

    #[test]
    fn restrict_and_embed() {
        let g = Perm::parse("(1,2)", 2).unwrap();
        let e = g.embed(3, 6);
        assert_eq!(e.to_string(), "(4,5)");
        assert_eq!(e.restrict(3, 2).unwrap(), g);
        assert!(Perm::parse("(1,4)", 6).unwrap().restrict(0, 3).is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Perm> {
            Just((0..n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Perm::from_images(v).unwrap())
        }

        proptest! {
            #[test]
            fn inverse_gives_identity(p in perm(9)) {
                prop_assert!(p.mul(&p.inverse()).is_identity());
                prop_assert!(p.inverse().mul(&p).is_identity());
            }

            #[test]
            fn cycle_notation_round_trips(p in perm(9)) {
                prop_assert_eq!(Perm::parse(&p.to_string(), 9).unwrap(), p);
            }

            #[test]
            fn associativity(a in perm(6), b in perm(6), c in perm(6)) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }
        }
    }
}
