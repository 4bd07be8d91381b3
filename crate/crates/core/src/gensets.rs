//! Generating tuples: `d(G)`, the `D_H(G)` statistics, generation density
//! over socle corrections, and the replacement search in wreath products.

use std::sync::Mutex;

use num_rational::Ratio;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::bitset::Bitset;
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hom::quotient;
use crate::lattice::all_subgroups;
use crate::limits::Limits;
use crate::perm::Perm;
use crate::products::WreathFrame;
use crate::structure::{classify_maximal, minimal_normal_subgroups, MaximalSubgroupReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.nodes += o.nodes;
        self.pruned += o.pruned;
    }
}

/// Result of an exhaustive tuple search over element indices.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub witness: Option<Vec<u32>>,
    pub stats: SearchStats,
}

struct Dfs<'a> {
    e: &'a Enumeration,
    pools: &'a [Bitset],
    pool_min: Vec<u32>,
    /// `<pool_i, ..., pool_last>` when that is a proper subgroup.
    reach: Vec<Option<(Bitset, Vec<u32>)>>,
    failed: Vec<FxHashMap<u64, Vec<Bitset>>>,
    stats: SearchStats,
}

impl<'a> Dfs<'a> {
    fn new(e: &'a Enumeration, pools: &'a [Bitset]) -> Self {
        let len = pools.len();
        let pool_min = pools.iter().map(|p| p.first().expect("pools checked non-empty")).collect();
        let mut reach = vec![None; len];
        let mut acc = e.trivial();
        let mut acc_gens: Vec<u32> = Vec::new();
        for i in (0..len).rev() {
            for x in pools[i].iter() {
                if !acc.contains(x) {
                    acc = e.extend(&acc, &acc_gens, &[x]);
                    acc_gens.push(x);
                }
            }
            if !acc.is_full() {
                reach[i] = Some((acc.clone(), acc_gens.clone()));
            }
        }
        Dfs { e, pools, pool_min, reach, failed: vec![FxHashMap::default(); len + 1], stats: SearchStats::default() }
    }

    fn run(&mut self, depth: usize, p: &Bitset, pgens: &mut Vec<u32>, tuple: &mut Vec<u32>) -> bool {
        self.stats.nodes += 1;
        let len = self.pools.len();
        if p.is_full() {
            tuple.extend_from_slice(&self.pool_min[depth..]);
            return true;
        }
        if depth == len {
            return false;
        }
        if let Some((r, rg)) = &self.reach[depth] {
            if !self.e.extend(r, rg, pgens).is_full() {
                self.stats.pruned += 1;
                return false;
            }
        }
        let h = self.e.set_hash(p);
        if self.failed[depth].get(&h).is_some_and(|v| v.contains(p)) {
            self.stats.pruned += 1;
            return false;
        }
        let mut dominated = Bitset::new(self.e.len());
        let mut any = false;
        let pool = &self.pools[depth];
        for x in pool.iter() {
            if p.contains(x) {
                continue;
            }
            any = true;
            if dominated.contains(x) {
                self.stats.pruned += 1;
                continue;
            }
            let q = self.e.extend(p, pgens, &[x]);
            tuple.push(x);
            pgens.push(x);
            if self.run(depth + 1, &q, pgens, tuple) {
                return true;
            }
            tuple.pop();
            pgens.pop();
            dominated.union_with(&q);
        }
        if !any {
            tuple.push(self.pool_min[depth]);
            if self.run(depth + 1, p, pgens, tuple) {
                return true;
            }
            tuple.pop();
        }
        self.failed[depth].entry(h).or_default().push(p.clone());
        false
    }
}

/// Searches for `(x_1..x_k)` with `x_i` in `pools[i]` generating the whole
/// group. Exhaustive: `None` certifies that no such tuple exists.
///
/// The first slot runs over one element per cyclic subgroup (per conjugacy
/// class when every pool is closed under conjugation), skipping elements
/// whose cyclic subgroup lies in a larger candidate's. The remaining slots
/// are depth-first with two prunings: an element inside an already failed
/// extension is skipped, and subgroups that already failed at a depth are
/// remembered. The witness is the first success in candidate order.
pub fn search_tuple(e: &Enumeration, pools: &[Bitset]) -> SearchOutcome {
    let n = e.len();
    if pools.is_empty() {
        return SearchOutcome { witness: (n == 1).then(Vec::new), stats: SearchStats { nodes: 1, pruned: 0 } };
    }
    let closed = pools.iter().all(|p| e.is_conjugation_closed(p));
    let pool0 = &pools[0];
    let mut seen_cyclic = Bitset::new(n);
    let mut dominated = Bitset::new(n);
    let mut dominated_class = Bitset::new(if closed { e.conjugacy_classes().len() } else { 0 });
    let mut cands: Vec<(u32, Bitset)> = Vec::new();
    let mut reps: Vec<u32> = if closed {
        e.conjugacy_classes().iter().filter_map(|c| c.iter().copied().find(|&x| pool0.contains(x))).collect()
    } else {
        pool0.iter().collect()
    };
    reps.retain(|&x| x != 0);
    // Larger cyclic subgroups first so that domination marks are in place.
    reps.sort_by_key(|&x| (std::cmp::Reverse(e.order_of(x)), x));
    for x in reps {
        if seen_cyclic.contains(x) || dominated.contains(x) || (closed && dominated_class.contains(e.class_of(x))) {
            continue;
        }
        let c = e.cyclic(x);
        for y in c.iter() {
            if e.order_of(y) < e.order_of(x) {
                dominated.insert(y);
                if closed {
                    dominated_class.insert(e.class_of(y));
                }
            } else {
                seen_cyclic.insert(y);
            }
        }
        cands.push((x, c));
    }
    cands.sort_by_key(|(x, _)| *x);
    if cands.is_empty() {
        let mut dfs = Dfs::new(e, pools);
        let mut tuple = Vec::new();
        let found = dfs.run(0, &e.trivial(), &mut Vec::new(), &mut tuple);
        return SearchOutcome { witness: found.then_some(tuple), stats: dfs.stats };
    }
    let per_cand: Mutex<Vec<Option<SearchStats>>> = Mutex::new(vec![None; cands.len()]);
    let found = cands.par_iter().enumerate().find_map_first(|(k, (x, c))| {
        let mut dfs = Dfs::new(e, pools);
        let mut tuple = vec![*x];
        let ok = dfs.run(1, c, &mut vec![*x], &mut tuple);
        per_cand.lock().expect("stats lock")[k] = Some(dfs.stats);
        ok.then_some((k, tuple))
    });
    let per_cand = per_cand.into_inner().expect("stats lock");
    let last = found.as_ref().map_or(cands.len() - 1, |(k, _)| *k);
    let mut stats = SearchStats { nodes: 1, pruned: 0 };
    for s in per_cand[..=last].iter() {
        stats += s.expect("candidates before the first success are all searched");
    }
    SearchOutcome { witness: found.map(|(_, t)| t), stats }
}

fn perms_to_bits(e: &Enumeration, pool: &[Perm]) -> Result<Bitset> {
    let mut b = Bitset::new(e.len());
    for g in pool {
        let i = e.index_of(g).ok_or_else(|| Error::Precondition(format!("pool element {g} is not in the group")))?;
        b.insert(i);
    }
    Ok(b)
}

/// Generating tuple with entry `i` drawn from `pools[i]`, if one exists.
pub fn exists_generating_tuple(g: &Group, pools: &[Vec<Perm>], limits: &Limits) -> Result<Option<Vec<Perm>>> {
    if pools.iter().any(Vec::is_empty) {
        return Err(Error::Precondition("empty element pool".into()));
    }
    let e = g.enumeration(limits)?;
    let bits = pools.iter().map(|p| perms_to_bits(&e, p)).collect::<Result<Vec<_>>>()?;
    let out = search_tuple(&e, &bits);
    Ok(out.witness.map(|w| w.into_iter().map(|i| e.element(i).clone()).collect()))
}

#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub d: usize,
    pub witness: Vec<Perm>,
    pub stats: SearchStats,
}

/// `d(G)`: the least `k` admitting a generating `k`-tuple, with the failed
/// `(k-1)`-search as certificate.
pub fn min_generators(g: &Group, limits: &Limits) -> Result<GenerationReport> {
    let e = g.enumeration(limits)?;
    let mut stats = SearchStats::default();
    for k in 0.. {
        let pools = vec![e.full(); k];
        let out = search_tuple(&e, &pools);
        stats += out.stats;
        if let Some(w) = out.witness {
            let witness: Vec<Perm> = w.into_iter().map(|i| e.element(i).clone()).collect();
            let check = Group::new(g.degree(), witness.clone())?;
            if check.order() != g.order() {
                return Err(Error::Engine("generating witness failed re-verification".into()));
            }
            return Ok(GenerationReport { d: k, witness, stats });
        }
    }
    unreachable!("the loop returns once k reaches the generator count")
}

pub fn d_of(g: &Group, limits: &Limits) -> Result<usize> {
    Ok(min_generators(g, limits)?.d)
}

/// `d(G/N)`, computed on the coset-action image.
pub fn d_of_quotient(g: &Group, n: &Group, limits: &Limits) -> Result<usize> {
    let act = quotient(g, n, limits)?;
    d_of(&act.image, limits)
}

#[derive(Clone, Debug)]
pub struct DReport {
    pub subgroup: Group,
    pub d: usize,
    pub value: usize,
    /// Generating `d`-tuple whose first `value` entries lie in the subgroup.
    pub witness: Vec<Perm>,
    pub stats: SearchStats,
}

/// `D_H(G)`: the most entries of a generating `d(G)`-tuple that can lie in `H`.
pub fn d_metric(g: &Group, h: &Group, limits: &Limits) -> Result<DReport> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("D_H(G) needs H <= G".into()));
    }
    let e = g.enumeration(limits)?;
    let d = min_generators(g, limits)?.d;
    let hbits = e.subgroup_bits(h);
    let mut stats = SearchStats::default();
    for k in (0..=d).rev() {
        let mut pools = vec![hbits.clone(); k];
        pools.extend(std::iter::repeat_n(e.full(), d - k));
        let out = search_tuple(&e, &pools);
        stats += out.stats;
        if let Some(w) = out.witness {
            let witness = w.into_iter().map(|i| e.element(i).clone()).collect();
            return Ok(DReport { subgroup: h.clone(), d, value: k, witness, stats });
        }
    }
    Err(Error::Engine("no generating d(G)-tuple found".into()))
}

#[derive(Clone, Debug)]
pub struct DMinReport {
    pub value: usize,
    pub d: usize,
    /// `(lattice class, D_M(G))` for each maximal class.
    pub per_class: Vec<(usize, usize)>,
    pub worst: DReport,
    pub worst_maximal: MaximalSubgroupReport,
}

/// `D(G)`: the minimum of `D_M(G)` over maximal subgroups, one per class.
pub fn d_min(g: &Group, limits: &Limits) -> Result<DMinReport> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let lattice = all_subgroups(g, limits)?;
    let mut best: Option<(usize, DReport)> = None;
    let mut per_class = Vec::new();
    for (i, c) in lattice.maximal_classes() {
        let r = d_metric(g, &c.group, limits)?;
        per_class.push((i, r.value));
        if best.as_ref().is_none_or(|(_, b)| r.value < b.value) {
            best = Some((i, r));
        }
    }
    let (_, worst) = best.expect("a non-trivial group has a maximal subgroup");
    let worst_maximal = classify_maximal(g, &worst.subgroup, limits)?;
    Ok(DMinReport { value: worst.value, d: worst.d, per_class, worst, worst_maximal })
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub lifts: Vec<Perm>,
    pub favorable: u64,
    pub total: u64,
    #[serde(serialize_with = "crate::report::ratio_string")]
    pub ratio: Ratio<u64>,
}

/// Exact count of `(n_1..n_d)` in `N^d` with `<l_1 n_1, ..., l_d n_d> = G`,
/// where `N` is the non-abelian socle of the monolithic group `G`.
pub fn generation_density(g: &Group, n: &Group, lifts: &[Perm], limits: &Limits) -> Result<DensityReport> {
    let mins = minimal_normal_subgroups(g, limits)?;
    if mins.len() != 1 || !mins[0].same_as(n) {
        return Err(Error::Precondition("N must be the unique minimal normal subgroup".into()));
    }
    if n.is_abelian() {
        return Err(Error::Precondition("the socle must be non-abelian".into()));
    }
    let mut joint = n.generators().to_vec();
    joint.extend(lifts.iter().cloned());
    if Group::new(g.degree(), joint)?.order() != g.order() {
        return Err(Error::Precondition("the lifts do not generate G modulo N".into()));
    }
    let d = lifts.len() as u32;
    let nn = n.order();
    let total = nn.checked_pow(d).unwrap_or(u128::MAX);
    Limits::check("socle tuples", limits.max_tests, total)?;
    let e = g.enumeration(limits)?;
    let nidx: Vec<u32> = e.subgroup_bits(n).iter().collect();
    let lidx: Vec<u32> = lifts
        .iter()
        .map(|l| e.index_of(l).ok_or_else(|| Error::Precondition(format!("lift {l} is not in G"))))
        .collect::<Result<_>>()?;
    let favorable: u64 = if d == 0 {
        u64::from(e.len() == 1)
    } else {
        (0..nidx.len())
            .into_par_iter()
            .map(|first| {
                let mut choice = vec![0usize; d as usize];
                choice[0] = first;
                let mut count = 0u64;
                let mut tuple = vec![0u32; d as usize];
                loop {
                    for (k, &c) in choice.iter().enumerate() {
                        tuple[k] = e.mul(lidx[k], nidx[c]);
                    }
                    if e.generates(&tuple) {
                        count += 1;
                    }
                    // Odometer over coordinates 1..d.
                    let mut k = d as usize - 1;
                    loop {
                        if k == 0 {
                            return count;
                        }
                        choice[k] += 1;
                        if choice[k] < nidx.len() {
                            break;
                        }
                        choice[k] = 0;
                        k -= 1;
                    }
                }
            })
            .sum()
    };
    let total = total as u64;
    Ok(DensityReport { lifts: lifts.to_vec(), favorable, total, ratio: Ratio::new(favorable, total) })
}

/// Which hypothesis of the replacement lemma a pair `(g_1, g_2)` satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReplacementHypothesis {
    FirstHasFixedPoint,
    SecondHasFixedPoint,
    DifferencesFixedPointFree,
}

/// Checks the three hypotheses on top projections. For the third, `i` runs
/// over `1..=|g_2 pi|` in `(g_1^-1 g_2^i) pi` and over `1..=|g_1 pi|` in
/// `(g_2^-1 g_1^i) pi`.
pub fn replacement_hypothesis(t1: &Perm, t2: &Perm) -> Option<ReplacementHypothesis> {
    if t1.has_fixed_point() {
        return Some(ReplacementHypothesis::FirstHasFixedPoint);
    }
    if t2.has_fixed_point() {
        return Some(ReplacementHypothesis::SecondHasFixedPoint);
    }
    let free = |a: &Perm, b: &Perm| (1..=b.order() as i64).all(|i| !a.inverse().mul(&b.pow(i)).has_fixed_point());
    (free(t1, t2) && free(t2, t1)).then_some(ReplacementHypothesis::DifferencesFixedPointFree)
}

#[derive(Clone, Debug)]
pub struct ReplacementOutcome {
    pub hypothesis: ReplacementHypothesis,
    /// `(v_1, v_2)` with `<v_1 g_1, v_2 g_2, g_3, ...> = G` and `v_1 g_1` in `H~`.
    pub found: Option<(Perm, Perm)>,
    pub candidates_v1: usize,
    pub tests: u64,
}

/// Whether every base coordinate of `flat` lies in `h` (membership in `H~`).
pub fn in_h_tilde(frame: &WreathFrame, flat: &Perm, h: &Group) -> Result<bool> {
    if h.degree() != frame.inner_degree {
        return Err(Error::DegreeMismatch { expected: frame.inner_degree, found: h.degree() });
    }
    let w = frame
        .decompose(flat)
        .ok_or_else(|| Error::Precondition(format!("{flat} does not preserve the wreath blocks")))?;
    Ok(w.base.iter().all(|a| h.has(a)))
}

/// Exhaustive search for the socle corrections of the replacement lemma.
/// `v_1` runs over `{v in N : v g_1 in H~}` and `v_2` over `N`, both in
/// enumeration order; the first success is returned.
pub fn replacement_search(
    g: &Group,
    n: &Group,
    gens: &[Perm],
    frame: &WreathFrame,
    h: &Group,
    limits: &Limits,
) -> Result<ReplacementOutcome> {
    if gens.len() < 2 {
        return Err(Error::Precondition("the replacement lemma needs at least two elements".into()));
    }
    if frame.degree() != g.degree() {
        return Err(Error::DegreeMismatch { expected: frame.degree(), found: g.degree() });
    }
    let mins = minimal_normal_subgroups(g, limits)?;
    if mins.len() != 1 || !mins[0].same_as(n) || n.is_abelian() {
        return Err(Error::Precondition("G must be monolithic with non-abelian socle N".into()));
    }
    let mut joint = n.generators().to_vec();
    joint.extend(gens.iter().cloned());
    if Group::new(g.degree(), joint)?.order() != g.order() {
        return Err(Error::Precondition("the elements do not generate G modulo N".into()));
    }
    let top = |x: &Perm| {
        frame.top_of(x).ok_or_else(|| Error::Precondition(format!("{x} does not preserve the wreath blocks")))
    };
    let (t1, t2) = (top(&gens[0])?, top(&gens[1])?);
    let hypothesis = replacement_hypothesis(&t1, &t2).ok_or_else(|| {
        Error::Precondition(
            "no hypothesis holds: g1 pi and g2 pi are fixed-point-free and some difference has a fixed point".into(),
        )
    })?;
    let e = g.enumeration(limits)?;
    let nidx: Vec<u32> = e.subgroup_bits(n).iter().collect();
    let rest: Vec<u32> = gens[2..]
        .iter()
        .map(|x| e.index_of(x).ok_or_else(|| Error::Precondition(format!("{x} is not in G"))))
        .collect::<Result<_>>()?;
    let g1 = e.index_of(&gens[0]).ok_or_else(|| Error::Precondition("g1 is not in G".into()))?;
    let g2 = e.index_of(&gens[1]).ok_or_else(|| Error::Precondition("g2 is not in G".into()))?;
    let mut v1s = Vec::new();
    for &v in &nidx {
        if in_h_tilde(frame, e.element(e.mul(v, g1)), h)? {
            v1s.push(v);
        }
    }
    // Tests are counted up to the winner so the figure does not depend on scheduling.
    let found = v1s.par_iter().enumerate().find_map_first(|(k, &v1)| {
        let a = e.mul(v1, g1);
        let mut tuple = vec![a, 0];
        tuple.extend_from_slice(&rest);
        for (j, &v2) in nidx.iter().enumerate() {
            tuple[1] = e.mul(v2, g2);
            if e.generates(&tuple) {
                return Some((k, j, v1, v2));
            }
        }
        None
    });
    let tests = match found {
        Some((k, j, _, _)) => (k * nidx.len() + j + 1) as u64,
        None => (v1s.len() * nidx.len()) as u64,
    };
    Ok(ReplacementOutcome {
        hypothesis,
        found: found.map(|(_, _, a, b)| (e.element(a).clone(), e.element(b).clone())),
        candidates_v1: v1s.len(),
        tests,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::direct_product;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn d_examples() {
        let limits = Limits::default();
        assert_eq!(d_of(&Group::cyclic(6), &limits).unwrap(), 1);
        let c2 = Group::cyclic(2);
        let c2c2 = direct_product(&c2, &c2, &limits).unwrap();
        let c2c2c2 = direct_product(&c2c2, &c2, &limits).unwrap();
        assert_eq!(d_of(&c2c2c2, &limits).unwrap(), 3);
        assert_eq!(d_of(&Group::alternating(5), &limits).unwrap(), 2);
        assert_eq!(d_of(&Group::trivial(3), &limits).unwrap(), 0);
    }

    #[test]
    fn pools() {
        let limits = Limits::default();
        let s4 = Group::symmetric(4);
        let elems = s4.elements(&limits).unwrap();
        let four: Vec<Perm> = elems.iter().filter(|x| x.order() == 4).cloned().collect();
        let transp: Vec<Perm> = elems.iter().filter(|x| x.cycle_type() == vec![1, 1, 2]).cloned().collect();
        let w = exists_generating_tuple(&s4, &[four, transp], &limits).unwrap().unwrap();
        assert_eq!(Group::new(4, w).unwrap().order(), 24);
        let id = vec![Perm::identity(4)];
        assert!(exists_generating_tuple(&s4, &[id.clone(), id], &limits).unwrap().is_none());
        assert!(exists_generating_tuple(&s4, &[vec![]], &limits).is_err());
    }

    #[test]
    fn d_metric_examples() {
        let limits = Limits::default();
        let s4 = Group::symmetric(4);
        let s3 = Group::new(4, vec![p("(1,2)", 4), p("(1,2,3)", 4)]).unwrap();
        let r = d_metric(&s4, &s3, &limits).unwrap();
        assert_eq!((r.d, r.value), (2, 1));
        assert!(s3.has(&r.witness[0]));
        let c2 = Group::cyclic(2);
        let v = direct_product(&c2, &c2, &limits).unwrap();
        let m = Group::new(4, vec![p("(1,2)", 4)]).unwrap();
        assert_eq!(d_metric(&v, &m, &limits).unwrap().value, 1);
        assert!(d_metric(&s4, &Group::trivial(5), &limits).is_err());
    }

    #[test]
    fn d_min_examples() {
        let limits = Limits::default();
        assert_eq!(d_min(&Group::symmetric(4), &limits).unwrap().value, 1);
        assert_eq!(d_min(&Group::alternating(5), &limits).unwrap().value, 1);
        assert_eq!(d_min(&Group::cyclic(7), &limits).unwrap().value, 0);
    }

    #[test]
    fn density_s5() {
        let limits = Limits::default();
        let s5 = Group::symmetric(5);
        let a5 = Group::alternating(5);
        let r = generation_density(&s5, &a5, &[p("(1,2)", 5), Perm::identity(5)], &limits).unwrap();
        assert_eq!(r.total, 3600);
        assert!(r.ratio >= Ratio::new(53, 90));
        let bad = generation_density(&s5, &a5, &[p("(1,2,3)", 5), p("(1,2,3)", 5)], &limits);
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }

    #[test]
    fn hypotheses() {
        let id2 = Perm::identity(2);
        let sw = p("(1,2)", 2);
        assert_eq!(replacement_hypothesis(&id2, &sw), Some(ReplacementHypothesis::FirstHasFixedPoint));
        assert_eq!(replacement_hypothesis(&sw, &id2), Some(ReplacementHypothesis::SecondHasFixedPoint));
        // (1,2)^-1 (1,2)^2 = (1,2) is fixed-point-free but (1,2)^-1 (1,2)^1 = 1 is not.
        assert_eq!(replacement_hypothesis(&sw, &sw), None);
        let c = p("(1,2,3)", 3);
        let c2 = p("(1,3,2)", 3);
        assert_eq!(replacement_hypothesis(&c, &c2), None);
    }

    #[test]
    fn replacement_in_s5() {
        let limits = Limits::default();
        let s5 = Group::symmetric(5);
        let a5 = Group::alternating(5);
        let h = Group::new(5, vec![p("(1,2)", 5), p("(1,2,3,4)", 5)]).unwrap();
        let frame = WreathFrame::new(1, 5);
        let gens = [p("(1,2)", 5), p("(1,2,3)", 5)];
        let out = replacement_search(&s5, &a5, &gens, &frame, &h, &limits).unwrap();
        let (v1, v2) = out.found.unwrap();
        let a = v1.mul(&gens[0]);
        assert!(h.has(&a));
        assert_eq!(Group::new(5, vec![a, v2.mul(&gens[1])]).unwrap().order(), 120);
    }
}
