//! Element tables: every element of a group gets a dense index, so that
//! subgroups become bitsets and products become table lookups.

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::arith::splitmix64;
use crate::bitset::Bitset;
use crate::chain::StabChain;
use crate::group::Group;
use crate::perm::Perm;

/// Groups up to this order get a full multiplication table.
pub const TABLE_LIMIT: usize = 4096;

pub struct Enumeration {
    degree: usize,
    elems: Vec<Perm>,
    index: FxHashMap<Perm, u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    gen_idx: Vec<u32>,
    table: Option<Vec<u16>>,
    classes: OnceLock<(Vec<Vec<u32>>, Vec<u32>)>,
}

impl Enumeration {
    /// Elements are listed breadth-first from the identity along the
    /// generators, so index 0 is the identity and the order is deterministic.
    pub(crate) fn build(group: &Group) -> Self {
        let degree = group.degree();
        let n = group.order() as usize;
        let gens: Vec<Perm> = group.generators().iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut elems = Vec::with_capacity(n);
        let mut index = FxHashMap::default();
        index.reserve(n);
        let mut parent: Vec<(u32, u32)> = Vec::with_capacity(n);
        let id = Perm::identity(degree);
        index.insert(id.clone(), 0);
        elems.push(id);
        parent.push((0, u32::MAX));
        let mut gen_cols: Vec<Vec<u32>> = vec![vec![u32::MAX; n]; gens.len()];
        let mut k = 0;
        while k < elems.len() {
            for (s, g) in gens.iter().enumerate() {
                let e = elems[k].mul(g);
                let j = match index.get(&e) {
                    Some(&j) => j,
                    None => {
                        let j = elems.len() as u32;
                        index.insert(e.clone(), j);
                        elems.push(e);
                        parent.push((k as u32, s as u32));
                        j
                    }
                };
                gen_cols[s][k] = j;
            }
            k += 1;
        }
        assert_eq!(elems.len(), n, "enumeration disagrees with chain order");
        let inverse: Vec<u32> = elems.iter().map(|e| index[&e.inverse()]).collect();
        let orders: Vec<u32> = elems.iter().map(|e| e.order() as u32).collect();
        let gen_idx: Vec<u32> = gens.iter().map(|g| index[g]).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            // x * e_j = (x * e_parent(j)) * g_s(j), filled column by column in BFS order.
            let mut t = vec![0u16; n * n];
            for x in 0..n {
                t[x * n] = x as u16;
            }
            for j in 1..n {
                let (pj, s) = parent[j];
                let col = &gen_cols[s as usize];
                for x in 0..n {
                    let v = t[x * n + pj as usize];
                    t[x * n + j] = col[v as usize] as u16;
                }
            }
            t
        });
        Enumeration { degree, elems, index, inverse, orders, gen_idx, table, classes: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    #[inline]
    pub fn element(&self, i: u32) -> &Perm {
        &self.elems[i as usize]
    }

    pub fn index_of(&self, g: &Perm) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.gen_idx
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elems.len() + b as usize] as u32,
            None => self.index[&self.elems[a as usize].mul(&self.elems[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    #[inline]
    pub fn order_of(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `t^-1 a t`.
    #[inline]
    pub fn conj(&self, a: u32, t: u32) -> u32 {
        self.mul(self.mul(self.inv(t), a), t)
    }

    pub fn full(&self) -> Bitset {
        Bitset::full(self.len())
    }

    pub fn trivial(&self) -> Bitset {
        Bitset::from_indices(self.len(), [0])
    }

    /// Extends the subgroup `sub` (generated by `sub_gens`) by `extra`, using
    /// right cosets of `sub` (Dimino's method).
    pub fn extend(&self, sub: &Bitset, sub_gens: &[u32], extra: &[u32]) -> Bitset {
        let fresh: Vec<u32> = extra.iter().copied().filter(|&x| !sub.contains(x)).collect();
        if fresh.is_empty() {
            return sub.clone();
        }
        if self.table.is_none() {
            // Cheap order check before walking cosets element by element.
            let perms: Vec<Perm> =
                sub_gens.iter().chain(fresh.iter()).map(|&i| self.elems[i as usize].clone()).collect();
            if StabChain::new(self.degree, &perms).order() == self.len() as u128 {
                return self.full();
            }
        }
        let members: Vec<u32> = sub.iter().collect();
        let gens: Vec<u32> = sub_gens.iter().chain(fresh.iter()).copied().collect();
        let mut out = sub.clone();
        let mut reps: Vec<u32> = vec![0];
        let mut k = 0;
        while k < reps.len() {
            let r = reps[k];
            for &s in &gens {
                let e = self.mul(r, s);
                if !out.contains(e) {
                    reps.push(e);
                    for &p in &members {
                        out.insert(self.mul(p, e));
                    }
                }
            }
            k += 1;
        }
        out
    }

    pub fn closure(&self, gens: &[u32]) -> Bitset {
        let mut sub = self.trivial();
        let mut sub_gens: Vec<u32> = Vec::new();
        for &g in gens {
            if !sub.contains(g) {
                sub = self.extend(&sub, &sub_gens, &[g]);
                sub_gens.push(g);
            }
        }
        sub
    }

    /// Whether the elements generate the whole group.
    pub fn generates(&self, gens: &[u32]) -> bool {
        let n = self.len();
        match &self.table {
            Some(_) => {
                let mut seen = Bitset::new(n);
                seen.insert(0);
                let mut queue = vec![0u32];
                let mut k = 0;
                while k < queue.len() {
                    let x = queue[k];
                    for &g in gens {
                        let y = self.mul(x, g);
                        if seen.insert(y) {
                            queue.push(y);
                            if queue.len() == n {
                                return true;
                            }
                        }
                    }
                    k += 1;
                }
                queue.len() == n
            }
            None => {
                let perms: Vec<Perm> = gens.iter().map(|&i| self.elems[i as usize].clone()).collect();
                StabChain::new(self.degree, &perms).order() == n as u128
            }
        }
    }

    /// Order of the subgroup generated by the given elements.
    pub fn subgroup_order(&self, gens: &[u32]) -> u128 {
        match &self.table {
            Some(_) => self.closure(gens).count() as u128,
            None => {
                let perms: Vec<Perm> = gens.iter().map(|&i| self.elems[i as usize].clone()).collect();
                StabChain::new(self.degree, &perms).order()
            }
        }
    }

    /// Bitset of the elements of a subgroup given as a group.
    pub fn subgroup_bits(&self, sub: &Group) -> Bitset {
        let gens: Vec<u32> = sub.generators().iter().filter_map(|g| self.index_of(g)).collect();
        self.closure(&gens)
    }

    pub fn cyclic(&self, a: u32) -> Bitset {
        let mut b = Bitset::new(self.len());
        let mut x = 0;
        loop {
            b.insert(x);
            x = self.mul(x, a);
            if x == 0 {
                return b;
            }
        }
    }

    /// Group object for a subgroup given by element indices that generate it.
    pub fn group_of(&self, gens: &[u32]) -> Group {
        let perms: Vec<Perm> = gens.iter().map(|&i| self.elems[i as usize].clone()).collect();
        Group::new(self.degree, perms).expect("same degree")
    }

    /// Generators for a subgroup given as a bitset, chosen greedily by index.
    pub fn generators_of(&self, sub: &Bitset) -> Vec<u32> {
        let mut cur = self.trivial();
        let mut gens = Vec::new();
        let target = sub.count();
        // Prefer high-order elements so that few generators suffice.
        let mut cands: Vec<u32> = sub.iter().collect();
        cands.sort_by_key(|&i| (std::cmp::Reverse(self.order_of(i)), i));
        for x in cands {
            if cur.count() == target {
                break;
            }
            if !cur.contains(x) {
                cur = self.extend(&cur, &gens, &[x]);
                gens.push(x);
            }
        }
        gens
    }

    /// Conjugation action of the element `t` on indices.
    pub fn conjugation_map(&self, t: u32) -> Vec<u32> {
        let ti = self.inv(t);
        (0..self.len() as u32).map(|a| self.mul(self.mul(ti, a), t)).collect()
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> &[Vec<u32>] {
        &self.class_data().0
    }

    /// Index into [`Enumeration::conjugacy_classes`] of the class of `a`.
    pub fn class_of(&self, a: u32) -> u32 {
        self.class_data().1[a as usize]
    }

    fn class_data(&self) -> &(Vec<Vec<u32>>, Vec<u32>) {
        self.classes.get_or_init(|| {
            let maps: Vec<Vec<u32>> = self.gen_idx.iter().map(|&g| self.conjugation_map(g)).collect();
            let n = self.len();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n as u32 {
                if class_of[start as usize] != u32::MAX {
                    continue;
                }
                let cid = classes.len() as u32;
                class_of[start as usize] = cid;
                let mut members = vec![start];
                let mut k = 0;
                while k < members.len() {
                    let a = members[k];
                    for m in &maps {
                        let b = m[a as usize];
                        if class_of[b as usize] == u32::MAX {
                            class_of[b as usize] = cid;
                            members.push(b);
                        }
                    }
                    k += 1;
                }
                members.sort_unstable();
                classes.push(members);
            }
            (classes, class_of)
        })
    }

    /// Whether a set of elements is closed under conjugation by the group.
    pub fn is_conjugation_closed(&self, set: &Bitset) -> bool {
        self.gen_idx.iter().all(|&g| set.iter().all(|a| set.contains(self.conj(a, g))))
    }

    /// Order-independent 64-bit fingerprint of an element set.
    pub fn set_hash(&self, set: &Bitset) -> u64 {
        set.iter().fold(0u64, |acc, i| acc.wrapping_add(element_key(i)))
    }
}

#[inline]
pub(crate) fn element_key(i: u32) -> u64 {
    splitmix64(i as u64 ^ 0x005E_ED0F_6E4E)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;

    #[test]
    fn table_matches_perm_products() {
        let s4 = Group::symmetric(4);
        let e = s4.enumeration(&Limits::default()).unwrap();
        assert!(e.has_table());
        assert_eq!(e.len(), 24);
        assert!(e.element(0).is_identity());
        for a in 0..24 {
            for b in 0..24 {
                let prod = e.element(a).mul(e.element(b));
                assert_eq!(e.index_of(&prod), Some(e.mul(a, b)));
            }
            assert_eq!(e.mul(a, e.inv(a)), 0);
        }
    }

    #[test]
    fn closure_and_generation() {
        let s4 = Group::symmetric(4);
        let e = s4.enumeration(&Limits::default()).unwrap();
        let idx = |s: &str| e.index_of(&Perm::parse(s, 4).unwrap()).unwrap();
        let v4 = e.closure(&[idx("(1,2)(3,4)"), idx("(1,3)(2,4)")]);
        assert_eq!(v4.count(), 4);
        assert!(e.generates(&[idx("(1,2,3,4)"), idx("(1,2)")]));
        assert!(!e.generates(&[idx("(1,2,3,4)"), idx("(1,3)")]));
        let gens = e.generators_of(&v4);
        assert_eq!(e.closure(&gens), v4);
    }

    #[test]
    fn classes_of_s4() {
        let s4 = Group::symmetric(4);
        let e = s4.enumeration(&Limits::default()).unwrap();
        let mut sizes: Vec<usize> = e.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn large_group_without_table() {
        let s7 = Group::symmetric(7);
        let e = s7.enumeration(&Limits::default()).unwrap();
        assert!(!e.has_table());
        let idx = |s: &str| e.index_of(&Perm::parse(s, 7).unwrap()).unwrap();
        assert!(e.generates(&[idx("(1,2,3,4,5,6,7)"), idx("(1,2)")]));
        let sub = e.closure(&[idx("(1,2,3,4,5)"), idx("(1,2)")]);
        assert_eq!(sub.count(), 120);
    }
}
