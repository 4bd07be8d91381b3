//! Slow reference computations that share nothing with the stabilizer
//! chain, the enumeration or the lattice code. Used to cross-check them.

use std::collections::{HashMap, HashSet};

use crate::perm::Perm;

/// Elements of `<gens>` by breadth-first closure under right multiplication.
pub fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = out[i].mul(g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// A group as a plain multiplication table.
pub struct TableGroup {
    pub elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: Vec<Vec<usize>>,
}

impl TableGroup {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let elements = closure(degree, gens);
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = elements.iter().map(|a| elements.iter().map(|b| index[&a.mul(b)]).collect()).collect();
        TableGroup { elements, index, table }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Subgroup generated by `set`, as a sorted index list.
    pub fn span(&self, set: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let id = self.index[&self.elements[0]];
        seen[id] = true;
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for &g in set {
                let y = self.table[out[i]][g];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Every subgroup with a generating list, found by adjoining single
    /// elements starting from the trivial subgroup.
    pub fn subgroups_with_generators(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let trivial = self.span(&[]);
        seen.insert(trivial.clone());
        let mut queue = vec![(trivial, Vec::new())];
        let mut i = 0;
        while i < queue.len() {
            let (h, hgens) = queue[i].clone();
            for x in 0..self.len() {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = hgens.clone();
                gens.push(x);
                let k = self.span(&gens);
                if seen.insert(k.clone()) {
                    queue.push((k, gens));
                }
            }
            i += 1;
        }
        queue.sort_by_key(|(h, _)| h.len());
        queue
    }

    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        self.subgroups_with_generators().into_iter().map(|(h, _)| h).collect()
    }

    /// Elements `x` such that `<H, x> = G` forces `H = G` for every subgroup `H`.
    pub fn non_generators(&self) -> Vec<usize> {
        let n = self.len();
        let proper: Vec<Vec<usize>> =
            self.subgroups_with_generators().into_iter().filter(|(h, _)| h.len() < n).map(|(_, g)| g).collect();
        (0..n)
            .filter(|&x| {
                proper.iter().all(|hgens| {
                    let mut gens = hgens.clone();
                    gens.push(x);
                    self.span(&gens).len() < n
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_by_hand() {
        let gens = [Perm::parse("(1,2,3)", 3).unwrap(), Perm::parse("(1,2)", 3).unwrap()];
        let t = TableGroup::new(3, &gens);
        assert_eq!(t.len(), 6);
        assert_eq!(t.subgroups().len(), 6);
        assert_eq!(t.non_generators().len(), 1);
    }
}
