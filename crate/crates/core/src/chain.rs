//! Stabilizer chains via deterministic incremental Schreier–Sims.
//!
//! Transversals are stored as Schreier vectors so that actions on many
//! points (coset actions) stay linear in the degree per level. New base
//! points are always the smallest point moved by the residue that forces
//! the new level, so chains depend only on the generator sequence.

use crate::perm::Perm;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    inv_gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// Generator index reaching each point from its parent; NONE outside the orbit.
    label: Vec<u32>,
    /// Orbit position of each point; NONE outside the orbit.
    pos: Vec<u32>,
    /// Per orbit point, how many generators have had their Schreier generator verified.
    done: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut label = vec![NONE; degree];
        let mut pos = vec![NONE; degree];
        label[base as usize] = ROOT;
        pos[base as usize] = 0;
        Level { base, gens: Vec::new(), inv_gens: Vec::new(), orbit: vec![base], label, pos, done: vec![0] }
    }

    fn push_gen(&mut self, g: Perm) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        let s_new = (self.gens.len() - 1) as u32;
        let old_len = self.orbit.len();
        for idx in 0..old_len {
            let q = self.gens[s_new as usize].apply(self.orbit[idx]);
            if self.label[q as usize] == NONE {
                self.label[q as usize] = s_new;
                self.pos[q as usize] = self.orbit.len() as u32;
                self.orbit.push(q);
            }
        }
        let mut idx = old_len;
        while idx < self.orbit.len() {
            let p = self.orbit[idx];
            for s in 0..self.gens.len() {
                let q = self.gens[s].apply(p);
                if self.label[q as usize] == NONE {
                    self.label[q as usize] = s as u32;
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                }
            }
            idx += 1;
        }
        self.done.resize(self.orbit.len(), 0);
    }

    /// Coset representative `u` with `base^u = p`.
    fn transversal(&self, p: u32, degree: usize) -> Perm {
        let mut path = Vec::new();
        let mut q = p;
        while q != self.base {
            let s = self.label[q as usize];
            debug_assert!(s != NONE && s != ROOT);
            path.push(s as usize);
            q = self.inv_gens[s as usize].apply(q);
        }
        let mut u = Perm::identity(degree);
        for &s in path.iter().rev() {
            u.mul_assign_right(&self.gens[s]);
        }
        u
    }

    /// Multiplies `g` on the right by `u_p^{-1}` where `p = base^g`, so that `g` fixes the base.
    fn strip(&self, g: &mut Perm) -> bool {
        loop {
            let p = g.apply(self.base);
            if p == self.base {
                return true;
            }
            let s = self.label[p as usize];
            if s == NONE {
                return false;
            }
            g.mul_assign_right(&self.inv_gens[s as usize]);
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        Self::with_base_prefix(degree, &[], gens)
    }

    /// Chain whose base starts with `prefix` (possibly with redundant levels),
    /// so that pointwise stabilisers of prefix points are read off directly.
    pub fn with_base_prefix(degree: usize, prefix: &[u32], gens: &[Perm]) -> Self {
        let mut chain = StabChain { degree, levels: prefix.iter().map(|&b| Level::new(degree, b)).collect() };
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Sifts `g` from `start`; returns the residue and the level where sifting stopped.
    fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            if !self.levels[i].strip(&mut h) {
                return (h, i);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift_from(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Adds a generator; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Perm) -> bool {
        assert_eq!(g.degree(), self.degree, "generator degree mismatch");
        let (h, j) = self.sift_from(g, 0);
        if j == self.levels.len() && h.is_identity() {
            return false;
        }
        self.insert_strong(h, 0, j);
        self.complete(j);
        true
    }

    fn insert_strong(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = h.first_moved_point().expect("residue must be non-trivial");
            self.levels.push(Level::new(self.degree, b));
        }
        for level in &mut self.levels[from..=to] {
            level.push_gen(h.clone());
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start.min(self.levels.len().saturating_sub(1)) as isize;
        while i >= 0 {
            match self.find_bad_schreier(i as usize) {
                Some((h, j)) => {
                    self.insert_strong(h, i as usize + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_bad_schreier(&mut self, i: usize) -> Option<(Perm, usize)> {
        let degree = self.degree;
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            while (self.levels[i].done[k] as usize) < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let s = level.done[k] as usize;
                let p = level.orbit[k];
                let mut sg = level.transversal(p, degree);
                sg.mul_assign_right(&level.gens[s]);
                let back = level.strip(&mut sg);
                debug_assert!(back);
                self.levels[i].done[k] += 1;
                if sg.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(&sg, i + 1);
                if !(j == self.levels.len() && h.is_identity()) {
                    return Some((h, j));
                }
            }
            k += 1;
        }
        None
    }

    /// Strips `g` through the first `depth` levels; the residue fixes those base points.
    pub fn strip_prefix(&self, g: &Perm, depth: usize) -> Option<Perm> {
        let mut h = g.clone();
        for level in self.levels.iter().take(depth) {
            if !level.strip(&mut h) {
                return None;
            }
        }
        Some(h)
    }

    /// The chain of the pointwise stabiliser of the first `k` base points.
    pub fn stabilizer_chain(&self, k: usize) -> StabChain {
        let levels = self.levels[k.min(self.levels.len())..].to_vec();
        StabChain { degree: self.degree, levels }
    }

    /// Orbit-position coordinates of `g` (one per level), if `g` is a member.
    pub fn coordinates(&self, g: &Perm) -> Option<Vec<u32>> {
        let mut h = g.clone();
        let mut out = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let p = h.apply(level.base);
            let pos = level.pos[p as usize];
            if pos == NONE {
                return None;
            }
            out.push(pos);
            level.strip(&mut h);
        }
        h.is_identity().then_some(out)
    }

    /// Explicit coset representatives per level, indexed by orbit position.
    pub fn transversals(&self) -> Vec<Vec<Perm>> {
        self.levels
            .iter()
            .map(|l| l.orbit.iter().map(|&p| l.transversal(p, self.degree)).collect())
            .collect()
    }

    /// All elements, as products `u_k ... u_1 u_0` of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let trans = self.transversals();
        let mut elems = vec![Perm::identity(self.degree)];
        for level in trans.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.len());
            for e in &elems {
                for u in level {
                    next.push(e.mul(u));
                }
            }
            elems = next;
        }
        elems
    }

    pub fn orbit_of_base(&self, level: usize) -> &[u32] {
        &self.levels[level].orbit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8usize {
            let cyc: Vec<u32> = (0..n as u32).collect();
            let g1 = Perm::from_cycles(n, &[cyc]).unwrap();
            let g2 = Perm::from_cycles(n, &[vec![0, 1]]).unwrap();
            let chain = StabChain::new(n, &[g1, g2]);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), fact);
        }
    }

    #[test]
    fn base_is_smallest_moved_point() {
        let chain = StabChain::new(6, &[p("(3,4,5)", 6), p("(4,5,6)", 6)]);
        assert_eq!(chain.base()[0], 2);
        assert_eq!(chain.order(), 12);
    }

    #[test]
    fn membership_and_coordinates() {
        let chain = StabChain::new(5, &[p("(1,2,3,4,5)", 5), p("(3,4,5)", 5)]);
        assert_eq!(chain.order(), 60);
        assert!(chain.contains(&p("(1,2,3)", 5)));
        assert!(!chain.contains(&p("(1,2)", 5)));
        let elems = chain.elements();
        assert_eq!(elems.len(), 60);
        let mut seen = std::collections::HashSet::new();
        for e in &elems {
            assert!(chain.contains(e));
            assert!(seen.insert(chain.coordinates(e).unwrap()));
        }
    }

    #[test]
    fn base_prefix_gives_pointwise_stabilizer() {
        // S4 on 4 points; stabiliser of points 3 and 4 (0-based 2,3) is <(1,2)>.
        let chain = StabChain::with_base_prefix(4, &[2, 3], &[p("(1,2,3,4)", 4), p("(1,2)", 4)]);
        assert_eq!(chain.order(), 24);
        let stab = chain.stabilizer_chain(2);
        assert_eq!(stab.order(), 2);
        assert!(stab.contains(&p("(1,2)", 4)));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(3, &[Perm::identity(3)]);
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Perm::identity(3)));
        assert_eq!(chain.elements().len(), 1);
    }
}
