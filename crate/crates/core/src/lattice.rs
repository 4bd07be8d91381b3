//! Conjugacy classes of subgroups.
//!
//! Classes are built bottom-up: every non-trivial subgroup `J` has a maximal
//! subgroup `U` and an element `z` of prime-power order with `z` outside `U`,
//! `z^p` inside `U` and `J = <U, z>`. Each class representative is extended
//! by such elements, taken up to conjugation by its normaliser, and the
//! resulting subgroups are identified through a table of element-set hashes
//! of all conjugates.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::arith::prime_power_base;
use crate::bitset::Bitset;
use crate::chain::StabChain;
use crate::enumeration::{element_key, Enumeration};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::Perm;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub group: Group,
    pub order: u128,
    pub class_size: usize,
    pub maximal: bool,
    /// Smallest element-set hash over the class; used for canonical ordering.
    pub fingerprint: u64,
    bits: Bitset,
    gens: Vec<u32>,
    normalizer_gens: Vec<u32>,
}

impl SubgroupClass {
    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    /// Element indices generating the representative.
    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    pub fn normalizer_order(&self, group_order: u128) -> u128 {
        group_order / self.class_size as u128
    }

    pub fn normalizer_generator_indices(&self) -> &[u32] {
        &self.normalizer_gens
    }
}

/// Subgroup classes of a group, sorted by order then fingerprint. When built
/// with an order bound below `|G|/2`, only classes up to that order are
/// present, although the maximality flags of those present remain exact.
pub struct SubgroupLattice {
    group: Group,
    enumeration: Arc<Enumeration>,
    classes: Vec<SubgroupClass>,
    order_bound: u128,
    index: FxHashMap<u64, (u32, u32)>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group_order", &self.group.order())
            .field("classes", &self.classes.len())
            .field("order_bound", &self.order_bound)
            .finish()
    }
}

/// Full lattice of `g`, cached on the group. Requires `|g| <= limits.max_order`.
pub fn all_subgroups(g: &Group, limits: &Limits) -> Result<Arc<SubgroupLattice>> {
    limits.check_order(g.order())?;
    if let Some(l) = g.cached_lattice() {
        return Ok(l);
    }
    let lattice = SubgroupLattice::build(g, g.order(), limits)?;
    Ok(g.store_lattice(lattice))
}

/// Classes of subgroups of order at most `order_bound`, with exact
/// maximality flags. Not cached; for groups beyond the lattice bound.
pub fn subgroup_classes_up_to(g: &Group, order_bound: u128, limits: &Limits) -> Result<SubgroupLattice> {
    if order_bound >= g.order() {
        if let Some(l) = g.cached_lattice() {
            return Ok(l.as_ref().clone_shallow());
        }
    }
    SubgroupLattice::build(g, order_bound.min(g.order()), limits)
}

struct Orbit {
    members: Vec<Vec<u32>>,
    hashes: Vec<u64>,
    transversal: Vec<u32>,
}

fn hash_members(members: &[u32]) -> u64 {
    members.iter().fold(0u64, |acc, &i| acc.wrapping_add(element_key(i)))
}

/// Conjugates of a subgroup (sorted element list) under the generator maps,
/// with a conjugating element for each.
fn conjugation_orbit(e: &Enumeration, gen_idx: &[u32], gen_maps: &[Vec<u32>], start: Vec<u32>) -> Result<Orbit> {
    let mut lookup: FxHashMap<u64, usize> = FxHashMap::default();
    let h = hash_members(&start);
    lookup.insert(h, 0);
    let mut orbit = Orbit { members: vec![start], hashes: vec![h], transversal: vec![0] };
    let mut k = 0;
    while k < orbit.members.len() {
        for (s, map) in gen_maps.iter().enumerate() {
            let mut img: Vec<u32> = orbit.members[k].iter().map(|&a| map[a as usize]).collect();
            img.sort_unstable();
            let h = hash_members(&img);
            match lookup.get(&h) {
                Some(&j) => {
                    if orbit.members[j] != img {
                        return Err(Error::Engine("element-set hash collision between conjugates".into()));
                    }
                }
                None => {
                    lookup.insert(h, orbit.members.len());
                    orbit.transversal.push(e.mul(orbit.transversal[k], gen_idx[s]));
                    orbit.members.push(img);
                    orbit.hashes.push(h);
                }
            }
        }
        k += 1;
    }
    Ok(orbit)
}

impl SubgroupLattice {
    fn clone_shallow(&self) -> SubgroupLattice {
        SubgroupLattice {
            group: self.group.clone(),
            enumeration: self.enumeration.clone(),
            classes: self.classes.clone(),
            order_bound: self.order_bound,
            index: self.index.clone(),
        }
    }

    fn build(g: &Group, order_bound: u128, limits: &Limits) -> Result<Self> {
        let e = g.enumeration(limits)?;
        let n = e.len();
        let gen_idx: Vec<u32> = e.generator_indices().to_vec();
        let gen_maps: Vec<Vec<u32>> = gen_idx.iter().map(|&t| e.conjugation_map(t)).collect();
        let zuppos: Vec<(u32, u32)> = (1..n as u32)
            .filter_map(|z| prime_power_base(e.order_of(z) as u64).map(|p| (z, e.pow(z, p))))
            .collect();

        let mut b = Builder { e: &e, gen_idx: &gen_idx, gen_maps: &gen_maps, classes: Vec::new(), index: FxHashMap::default() };
        b.add_class(e.trivial(), Vec::new())?;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((1u128, 0usize)));
        while let Some(Reverse((order, c))) = heap.pop() {
            if order == n as u128 {
                continue;
            }
            let (bits, ugens, ngens, uchain) = {
                let cl = &b.classes[c];
                (cl.bits.clone(), cl.gens.clone(), cl.normalizer_gens.clone(), cl.group.chain().clone())
            };
            // Candidate extensions, one per normaliser orbit (smallest index first).
            let mut seen = Bitset::new(n);
            let mut reps = Vec::new();
            for &(z, zp) in &zuppos {
                if bits.contains(z) || !bits.contains(zp) || seen.contains(z) {
                    continue;
                }
                reps.push(z);
                seen.insert(z);
                let mut stack = vec![z];
                while let Some(x) = stack.pop() {
                    for &t in &ngens {
                        let y = e.conj(x, t);
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    }
                }
            }
            let orders: Vec<u128> = reps
                .par_iter()
                .map(|&z| {
                    let mut ch = uchain.clone();
                    ch.add_generator(e.element(z));
                    ch.order()
                })
                .collect();
            let mut maximal = true;
            let mut found: Vec<(u128, usize, u32)> = Vec::new();
            for (&z, &jo) in reps.iter().zip(&orders) {
                if jo == n as u128 {
                    continue;
                }
                maximal = false;
                if jo > order_bound {
                    continue;
                }
                let known = found.iter().any(|&(fo, k, t)| {
                    fo == jo && b.classes[k].bits.contains(e.conj(z, e.inv(t)))
                });
                if known {
                    continue;
                }
                let jbits = e.extend(&bits, &ugens, &[z]);
                let mut jgens = ugens.clone();
                jgens.push(z);
                let (k, t, fresh) = b.identify(jbits, jgens)?;
                if fresh {
                    heap.push(Reverse((b.classes[k].order, k)));
                }
                found.push((jo, k, t));
            }
            b.classes[c].maximal = maximal;
        }
        if n > 1 && order_bound >= n as u128 {
            b.identify(e.full(), gen_idx.clone())?;
        }

        let Builder { mut classes, index, .. } = b;
        let mut perm: Vec<usize> = (0..classes.len()).collect();
        perm.sort_by_key(|&i| (classes[i].order, classes[i].fingerprint, i));
        let mut new_id = vec![0u32; classes.len()];
        for (pos, &old) in perm.iter().enumerate() {
            new_id[old] = pos as u32;
        }
        let index = index.into_iter().map(|(h, (c, t))| (h, (new_id[c as usize], t))).collect();
        let mut slots: Vec<Option<SubgroupClass>> = classes.drain(..).map(Some).collect();
        let classes = perm.iter().map(|&i| slots[i].take().expect("each class once")).collect();
        Ok(SubgroupLattice { group: g.clone(), enumeration: e, classes, order_bound, index })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn enumeration(&self) -> &Arc<Enumeration> {
        &self.enumeration
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    /// Largest subgroup order enumerated.
    pub fn order_bound(&self) -> u128 {
        self.order_bound
    }

    /// Whether every subgroup class is present.
    pub fn is_complete(&self) -> bool {
        self.order_bound >= self.group.order()
    }

    /// Whether every proper subgroup class is present, so the maximal classes are all known.
    pub fn has_all_maximal(&self) -> bool {
        2 * self.order_bound >= self.group.order()
    }

    pub fn groups(&self) -> Vec<Group> {
        self.classes.iter().map(|c| c.group.clone()).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.class_size).collect()
    }

    pub fn maximality_flags(&self) -> Vec<bool> {
        self.classes.iter().map(|c| c.maximal).collect()
    }

    pub fn maximal_classes(&self) -> impl Iterator<Item = (usize, &SubgroupClass)> {
        self.classes.iter().enumerate().filter(|(_, c)| c.maximal)
    }

    /// Normal subgroups (classes of size one), in lattice order.
    pub fn normal_classes(&self) -> impl Iterator<Item = (usize, &SubgroupClass)> {
        self.classes.iter().enumerate().filter(|(_, c)| c.class_size == 1)
    }

    /// Total number of subgroups in the enumerated classes.
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    fn orbit(&self, i: usize) -> Orbit {
        let e = &self.enumeration;
        let gen_idx = e.generator_indices();
        let maps: Vec<Vec<u32>> = gen_idx.iter().map(|&t| e.conjugation_map(t)).collect();
        let start: Vec<u32> = self.classes[i].bits.iter().collect();
        conjugation_orbit(e, gen_idx, &maps, start).expect("orbit was computed during construction")
    }

    /// Element sets of every conjugate of class `i`, the representative first.
    pub fn conjugates(&self, i: usize) -> Vec<Bitset> {
        let n = self.enumeration.len();
        self.orbit(i).members.into_iter().map(|m| Bitset::from_indices(n, m)).collect()
    }

    /// Conjugating elements `t` with `rep^t` running over the class.
    pub fn conjugators(&self, i: usize) -> Vec<Perm> {
        self.orbit(i).transversal.into_iter().map(|t| self.enumeration.element(t).clone()).collect()
    }

    /// Class of a subgroup given by its element set, with a conjugator from the representative.
    pub fn locate_bits(&self, bits: &Bitset) -> Option<(usize, Perm)> {
        let e = &self.enumeration;
        let (c, t) = *self.index.get(&e.set_hash(bits))?;
        let cl = &self.classes[c as usize];
        if cl.order != bits.count() as u128 {
            return None;
        }
        let ti = e.inv(t);
        bits.iter().all(|x| cl.bits.contains(e.conj(x, ti))).then(|| (c as usize, e.element(t).clone()))
    }

    /// Class of a subgroup of the lattice's group.
    pub fn locate(&self, sub: &Group) -> Option<(usize, Perm)> {
        if !sub.is_subgroup_of(&self.group) {
            return None;
        }
        self.locate_bits(&self.enumeration.subgroup_bits(sub))
    }

    /// Whether some conjugate of class `i` is contained in the representative of class `j`.
    pub fn below(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.classes[i], &self.classes[j]);
        if a.order > b.order || b.order % a.order != 0 {
            return false;
        }
        self.conjugates(i).iter().any(|c| c.is_subset(&b.bits))
    }

    /// Intersection of all maximal subgroups.
    pub fn frattini_bits(&self) -> Result<Bitset> {
        if !self.has_all_maximal() {
            return Err(Error::Precondition("Frattini subgroup needs every maximal class".into()));
        }
        let mut acc = self.enumeration.full();
        for (i, _) in self.maximal_classes() {
            for c in self.conjugates(i) {
                acc.intersect_with(&c);
            }
        }
        Ok(acc)
    }
}

struct Builder<'a> {
    e: &'a Enumeration,
    gen_idx: &'a [u32],
    gen_maps: &'a [Vec<u32>],
    classes: Vec<SubgroupClass>,
    index: FxHashMap<u64, (u32, u32)>,
}

impl Builder<'_> {
    /// Finds the class of a subgroup, creating it if new. Returns the class,
    /// a conjugator from its representative, and whether it was created.
    fn identify(&mut self, bits: Bitset, gens: Vec<u32>) -> Result<(usize, u32, bool)> {
        let e = self.e;
        let h = e.set_hash(&bits);
        if let Some(&(c, t)) = self.index.get(&h) {
            let cl = &self.classes[c as usize];
            let ti = e.inv(t);
            if cl.order != bits.count() as u128 || !gens.iter().all(|&x| cl.bits.contains(e.conj(x, ti))) {
                return Err(Error::Engine("element-set hash collision between subgroups".into()));
            }
            return Ok((c as usize, t, false));
        }
        let c = self.add_class(bits, gens)?;
        Ok((c, 0, true))
    }

    fn add_class(&mut self, bits: Bitset, gens: Vec<u32>) -> Result<usize> {
        let e = self.e;
        let n = e.len() as u128;
        let id = self.classes.len();
        let orbit = conjugation_orbit(e, self.gen_idx, self.gen_maps, bits.iter().collect())?;
        for (h, &t) in orbit.hashes.iter().zip(&orbit.transversal) {
            if self.index.insert(*h, (id as u32, t)).is_some() {
                return Err(Error::Engine("element-set hash collision across classes".into()));
            }
        }
        // Normaliser from Schreier generators of the conjugation action.
        let class_size = orbit.members.len();
        let target = n / class_size as u128;
        let mut chain = StabChain::new(e.degree(), &[]);
        let mut ngens = Vec::new();
        let pos: FxHashMap<u64, usize> = orbit.hashes.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        'outer: for (i, member) in orbit.members.iter().enumerate() {
            if chain.order() == target {
                break;
            }
            for (s, map) in self.gen_maps.iter().enumerate() {
                let h = member.iter().fold(0u64, |acc, &a| acc.wrapping_add(element_key(map[a as usize])));
                let j = pos[&h];
                let sg = e.mul(e.mul(orbit.transversal[i], self.gen_idx[s]), e.inv(orbit.transversal[j]));
                if chain.add_generator(e.element(sg)) {
                    ngens.push(sg);
                    if chain.order() == target {
                        break 'outer;
                    }
                }
            }
        }
        if chain.order() != target {
            return Err(Error::Engine("normaliser order disagrees with class size".into()));
        }
        let order = bits.count() as u128;
        let perms: Vec<Perm> = gens.iter().map(|&i| e.element(i).clone()).collect();
        let group = Group::new(e.degree(), perms)?;
        let fingerprint = *orbit.hashes.iter().min().expect("non-empty orbit");
        self.classes.push(SubgroupClass {
            group,
            order,
            class_size,
            maximal: false,
            fingerprint,
            bits,
            gens,
            normalizer_gens: ngens,
        });
        Ok(id)
    }
}

/// Frattini subgroup: the intersection of all maximal subgroups.
pub fn frattini(g: &Group, limits: &Limits) -> Result<Group> {
    let lattice = all_subgroups(g, limits)?;
    let bits = lattice.frattini_bits()?;
    let e = lattice.enumeration();
    Ok(e.group_of(&e.generators_of(&bits)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn q8() -> Group {
        Group::new(8, vec![p("(1,2,3,4)(5,6,7,8)", 8), p("(1,5,3,7)(2,8,4,6)", 8)]).unwrap()
    }

    fn orders(l: &SubgroupLattice) -> Vec<u128> {
        l.classes().iter().map(|c| c.order).collect()
    }

    fn maximal_orders(l: &SubgroupLattice) -> Vec<u128> {
        let mut v: Vec<u128> = l.maximal_classes().map(|(_, c)| c.order).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn q8_classes() {
        let l = all_subgroups(&q8(), &Limits::default()).unwrap();
        assert_eq!(orders(&l), vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(maximal_orders(&l), vec![4, 4, 4]);
        assert_eq!(l.subgroup_count(), 6);
    }

    #[test]
    fn cyclic_six() {
        let l = all_subgroups(&Group::cyclic(6), &Limits::default()).unwrap();
        assert_eq!(orders(&l), vec![1, 2, 3, 6]);
        assert_eq!(maximal_orders(&l), vec![2, 3]);
    }

    #[test]
    fn s4_classes() {
        let l = all_subgroups(&Group::symmetric(4), &Limits::default()).unwrap();
        assert_eq!(l.len(), 11);
        assert_eq!(l.subgroup_count(), 30);
        assert_eq!(maximal_orders(&l), vec![6, 8, 12]);
    }

    #[test]
    fn a5_and_s5_counts() {
        let l = all_subgroups(&Group::alternating(5), &Limits::default()).unwrap();
        assert_eq!(l.len(), 9);
        assert_eq!(l.subgroup_count(), 59);
        assert_eq!(maximal_orders(&l), vec![6, 10, 12]);
        let l = all_subgroups(&Group::symmetric(5), &Limits::default()).unwrap();
        assert_eq!(l.len(), 19);
        assert_eq!(l.subgroup_count(), 156);
        assert_eq!(maximal_orders(&l), vec![12, 20, 24, 60]);
    }

    #[test]
    fn frattini_examples() {
        let limits = Limits::default();
        assert!(frattini(&Group::symmetric(4), &limits).unwrap().is_trivial());
        assert_eq!(frattini(&q8(), &limits).unwrap().order(), 2);
        assert_eq!(frattini(&Group::cyclic(4), &limits).unwrap().order(), 2);
        assert!(frattini(&Group::trivial(3), &limits).unwrap().is_trivial());
    }

    #[test]
    fn locate_conjugates() {
        let s4 = Group::symmetric(4);
        let l = all_subgroups(&s4, &Limits::default()).unwrap();
        let h = Group::new(4, vec![p("(2,4)", 4), p("(1,2,3,4)", 4)]).unwrap();
        let (c, t) = l.locate(&h).unwrap();
        assert_eq!(l.class(c).order, 8);
        assert!(l.class(c).group.conjugate(&t).same_as(&h));
    }

    #[test]
    fn bound_errors_and_partial() {
        let limits = Limits::default();
        assert!(matches!(all_subgroups(&Group::symmetric(7), &limits), Err(Error::BoundExceeded { .. })));
        let part = subgroup_classes_up_to(&Group::symmetric(5), 30, &limits).unwrap();
        assert!(part.classes().iter().all(|c| c.order <= 30));
        assert!(!part.has_all_maximal());
        assert_eq!(maximal_orders(&part), vec![12, 20, 24]);
    }
}
