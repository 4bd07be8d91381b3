//! Permutation groups given by generators, backed by a stabilizer chain.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::limits::Limits;
use crate::perm::Perm;

/// An immutable permutation group. Cloning is cheap and the value is safe to
/// share between threads; derived data (element tables, subgroup lattice) is
/// computed at most once.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

struct GroupData {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    enumeration: OnceLock<Arc<Enumeration>>,
    lattice: OnceLock<Arc<SubgroupLattice>>,
}

impl Group {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let chain = StabChain::new(degree, &gens);
        Ok(Self::from_parts(degree, gens, chain))
    }

    /// Group from a non-empty generator list; the degree is taken from the first generator.
    pub fn from_generators(gens: Vec<Perm>) -> Result<Self> {
        let degree = gens.first().map(Perm::degree).ok_or_else(|| {
            Error::Precondition("an empty generator list needs an explicit degree".into())
        })?;
        Self::new(degree, gens)
    }

    pub(crate) fn from_parts(degree: usize, gens: Vec<Perm>, chain: StabChain) -> Self {
        Group(Arc::new(GroupData {
            degree,
            gens,
            chain,
            enumeration: OnceLock::new(),
            lattice: OnceLock::new(),
        }))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[(0..n as u32).collect()]).unwrap());
            gens.push(Perm::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        Self::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            for k in 2..n as u32 {
                gens.push(Perm::from_cycles(n, &[vec![0, 1, k]]).unwrap());
            }
        }
        Self::new(n, gens).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 { vec![Perm::from_cycles(n, &[(0..n as u32).collect()]).unwrap()] } else { vec![] };
        Self::new(n.max(1), gens).unwrap()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    #[inline]
    pub fn generators(&self) -> &[Perm] {
        &self.0.gens
    }

    #[inline]
    pub fn order(&self) -> u128 {
        self.0.chain.order()
    }

    pub fn chain(&self) -> &StabChain {
        &self.0.chain
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: g.degree() });
        }
        Ok(self.0.chain.contains(g))
    }

    #[inline]
    pub fn has(&self, g: &Perm) -> bool {
        self.0.chain.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.has(g))
    }

    /// Equality as sets of permutations.
    pub fn same_as(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_normal_in(&self, other: &Group) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators()
                .iter()
                .all(|t| self.generators().iter().all(|g| self.has(&g.conjugate_by(t))))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    pub fn join(&self, other: &Group) -> Result<Group> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        Group::new(self.degree(), gens)
    }

    pub fn with_generators(&self, extra: &[Perm]) -> Result<Group> {
        let mut gens = self.generators().to_vec();
        gens.extend(extra.iter().cloned());
        Group::new(self.degree(), gens)
    }

    pub fn conjugate(&self, t: &Perm) -> Group {
        let gens = self.generators().iter().map(|g| g.conjugate_by(t)).collect();
        Group::new(self.degree(), gens).unwrap()
    }

    /// Smallest subgroup containing `gens` that is normalised by `self`.
    pub fn normal_closure(&self, gens: &[Perm]) -> Group {
        let degree = self.degree();
        let mut chain = StabChain::new(degree, &[]);
        let mut kept: Vec<Perm> = Vec::new();
        let mut queue: Vec<Perm> = gens.to_vec();
        while let Some(x) = queue.pop() {
            if chain.add_generator(&x) {
                for t in self.generators() {
                    queue.push(x.conjugate_by(t));
                }
                kept.push(x);
            }
        }
        Group::from_parts(degree, kept, chain)
    }

    /// Commutator subgroup `[self, other]` (normal closure in the join).
    pub fn commutator_with(&self, other: &Group) -> Result<Group> {
        let joined = self.join(other)?;
        let comms: Vec<Perm> = self
            .generators()
            .iter()
            .flat_map(|a| other.generators().iter().map(move |b| a.commutator(b)))
            .filter(|c| !c.is_identity())
            .collect();
        Ok(joined.normal_closure(&comms))
    }

    pub fn derived_subgroup(&self) -> Group {
        self.commutator_with(self).expect("same degree")
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start as u32];
            let mut k = 0;
            while k < orbit.len() {
                let p = orbit[k];
                for g in self.generators() {
                    let q = g.apply(p) as usize;
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q as u32);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree() <= 1 || self.orbits().len() == 1
    }

    /// Cached element table; fails if the group is larger than `limits.max_elements`.
    pub fn enumeration(&self, limits: &Limits) -> Result<Arc<Enumeration>> {
        if let Some(e) = self.0.enumeration.get() {
            return Ok(e.clone());
        }
        limits.check_elements(self.order())?;
        Ok(self.0.enumeration.get_or_init(|| Arc::new(Enumeration::build(self))).clone())
    }

    pub(crate) fn cached_lattice(&self) -> Option<Arc<SubgroupLattice>> {
        self.0.lattice.get().cloned()
    }

    pub(crate) fn store_lattice(&self, lattice: SubgroupLattice) -> Arc<SubgroupLattice> {
        self.0.lattice.get_or_init(|| Arc::new(lattice)).clone()
    }

    pub fn elements(&self, limits: &Limits) -> Result<Vec<Perm>> {
        Ok(self.enumeration(limits)?.elements().to_vec())
    }

    /// Group generated by a set of member permutations, keeping only those that enlarge it.
    pub fn generated_by(degree: usize, elems: impl IntoIterator<Item = Perm>) -> Group {
        let mut chain = StabChain::new(degree, &[]);
        let mut kept = Vec::new();
        for e in elems {
            if chain.add_generator(&e) {
                kept.push(e);
            }
        }
        Group::from_parts(degree, kept, chain)
    }

    pub fn intersection(&self, other: &Group, limits: &Limits) -> Result<Group> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        let (small, big) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        if small.is_subgroup_of(big) {
            return Ok(small.clone());
        }
        let elems = small.enumeration(limits)?;
        Ok(Group::generated_by(self.degree(), elems.elements().iter().filter(|e| big.has(e)).cloned()))
    }

    /// Order-then-generators summary used in reports.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        format!("<{}> (order {}, degree {})", gens.join(", "), self.order(), self.degree())
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group{}", self.describe())
    }
}
