//! Normal structure: series, nilpotency, minimal normal subgroups, socle,
//! primitivity and the classification of maximal subgroups.

use serde::Serialize;

use crate::arith::{prime_divisors, prime_power_base, r_part};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hom::coset_action;
use crate::lattice::all_subgroups;
use crate::limits::Limits;
use crate::perm::Perm;

/// `G, G', G'', ...` up to the first repeated term.
pub fn derived_series(g: &Group) -> Vec<Group> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = last.derived_subgroup();
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).last().expect("non-empty").is_trivial()
}

/// `G = g_1 >= [g_1, G] >= ...` up to the first repeated term.
pub fn lower_central_series(g: &Group) -> Vec<Group> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = last.commutator_with(g).expect("same degree");
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent_by_lcs(g: &Group) -> bool {
    lower_central_series(g).last().expect("non-empty").is_trivial()
}

/// Nilpotency via normal Sylow subgroups: for every prime `p` the number of
/// `p`-elements equals `|G|_p`. Groups too large to enumerate fall back to
/// the lower central series.
pub fn is_nilpotent(g: &Group) -> bool {
    let limits = Limits::default();
    let Ok(e) = g.enumeration(&limits) else {
        return is_nilpotent_by_lcs(g);
    };
    let order = g.order();
    prime_divisors(order).into_iter().all(|p| {
        let sylow = r_part(order as u64, p) as usize;
        let count = (0..e.len() as u32).filter(|&i| r_part(e.order_of(i) as u64, p) == e.order_of(i) as u64).count();
        count == sylow
    })
}

pub fn is_abelian(g: &Group) -> bool {
    g.is_abelian()
}

pub fn is_cyclic(g: &Group) -> bool {
    if !g.is_abelian() {
        return false;
    }
    // Abelian: the exponent is the lcm of the generator orders.
    let exponent = g.generators().iter().fold(1u128, |acc, x| num_integer::lcm(acc, x.order() as u128));
    exponent == g.order()
}

pub fn center(g: &Group, limits: &Limits) -> Result<Group> {
    let e = g.enumeration(limits)?;
    let gens = g.generators();
    Ok(Group::generated_by(
        g.degree(),
        e.elements().iter().filter(|x| gens.iter().all(|t| x.mul(t) == t.mul(x))).cloned(),
    ))
}

/// Normal subgroups `N` of `g` with `k < N` that are minimal with this
/// property (preimages of the minimal normal subgroups of `g / k`).
pub fn minimal_normal_over(g: &Group, k: &Group, limits: &Limits) -> Result<Vec<Group>> {
    if !k.is_normal_in(g) {
        return Err(Error::NotNormal("base subgroup must be normal".into()));
    }
    if k.order() == g.order() {
        return Ok(Vec::new());
    }
    let e = g.enumeration(limits)?;
    let kbits = e.subgroup_bits(k);
    let mut candidates: Vec<Group> = Vec::new();
    for class in e.conjugacy_classes() {
        let x = class[0];
        let Some(p) = prime_power_base(e.order_of(x) as u64) else { continue };
        if kbits.contains(x) || !kbits.contains(e.pow(x, p)) {
            continue;
        }
        let mut gens = k.generators().to_vec();
        gens.push(e.element(x).clone());
        let n = g.normal_closure(&gens);
        if !candidates.iter().any(|c| c.same_as(&n)) {
            candidates.push(n);
        }
    }
    let minimal: Vec<Group> = candidates
        .iter()
        .filter(|n| !candidates.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by_key(|n| n.order());
    Ok(minimal)
}

pub fn minimal_normal_subgroups(g: &Group, limits: &Limits) -> Result<Vec<Group>> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    minimal_normal_over(g, &Group::trivial(g.degree()), limits)
}

pub fn socle(g: &Group, limits: &Limits) -> Result<Group> {
    let mins = minimal_normal_subgroups(g, limits)?;
    let gens: Vec<Perm> = mins.iter().flat_map(|m| m.generators().iter().cloned()).collect();
    Ok(Group::generated_by(g.degree(), gens))
}

/// Unique minimal normal subgroup, if there is exactly one.
pub fn monolith(g: &Group, limits: &Limits) -> Result<Option<Group>> {
    let mut mins = minimal_normal_subgroups(g, limits)?;
    Ok((mins.len() == 1).then(|| mins.remove(0)))
}

pub fn is_simple(g: &Group, limits: &Limits) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    let mins = minimal_normal_subgroups(g, limits)?;
    Ok(mins.len() == 1 && mins[0].order() == g.order())
}

/// Largest normal nilpotent subgroup, read off the subgroup lattice.
pub fn fitting_subgroup(g: &Group, limits: &Limits) -> Result<Group> {
    let lattice = all_subgroups(g, limits)?;
    let best = lattice
        .normal_classes()
        .filter(|(_, c)| is_nilpotent(&c.group))
        .max_by_key(|(_, c)| c.order)
        .map(|(_, c)| c.group.clone())
        .expect("trivial subgroup is normal and nilpotent");
    Ok(best)
}

/// Transitive with no non-trivial block system, decided by computing the
/// finest block containing `{0, b}` for every point `b`.
pub fn is_primitive(g: &Group) -> bool {
    let n = g.degree();
    if !g.is_transitive() {
        return false;
    }
    if n <= 2 {
        return true;
    }
    (1..n as u32).all(|b| minimal_block(g, b).len() == n)
}

/// Finest block of imprimitivity containing points 0 and `b`.
pub fn minimal_block(g: &Group, b: u32) -> Vec<u32> {
    let n = g.degree();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let up = parent[parent[x as usize] as usize];
            parent[x as usize] = up;
            x = up;
        }
        x
    }
    let mut queue = vec![(0u32, b)];
    parent[b as usize] = 0;
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (u, v) = (find(&mut parent, s.apply(x)), find(&mut parent, s.apply(y)));
            if u != v {
                let (lo, hi) = if u < v { (u, v) } else { (v, u) };
                parent[hi as usize] = lo;
                queue.push((lo, hi));
            }
        }
    }
    (0..n as u32).filter(|&x| find(&mut parent, x) == 0).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntersectionShape {
    Coordinate,
    Diagonal,
    Trivial,
    NotApplicable,
}

impl std::fmt::Display for IntersectionShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IntersectionShape::Coordinate => "coordinate",
            IntersectionShape::Diagonal => "diagonal",
            IntersectionShape::Trivial => "trivial",
            IntersectionShape::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug)]
pub struct MaximalSubgroupReport {
    pub subgroup: Group,
    /// `M_G`, the largest normal subgroup of `G` inside `M`.
    pub core: Group,
    pub quotient_order: u128,
    /// `G/M_G` acting on the cosets of `M`.
    pub quotient: Group,
    pub primitive_type: u8,
    pub intersection_shape: IntersectionShape,
    /// Number of simple factors of the socle of `G/M_G` (non-abelian case only).
    pub socle_factors: usize,
    /// Preimage in `G` of the socle of `G/M_G`.
    pub socle_preimage: Group,
}

pub fn classify_maximal(g: &Group, m: &Group, limits: &Limits) -> Result<MaximalSubgroupReport> {
    if !m.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("subgroup is not contained in the group".into()));
    }
    if m.order() == g.order() {
        return Err(Error::NotMaximal("the whole group is not a maximal subgroup".into()));
    }
    let act = coset_action(g, m, limits)?;
    if !is_primitive(&act.image) {
        return Err(Error::NotMaximal(format!("coset action of {} is imprimitive", m.describe())));
    }
    let core = act.hom.kernel().clone();
    let mins = minimal_normal_over(g, &core, limits)?;
    let abelian = |n: &Group| n.derived_subgroup().is_subgroup_of(&core);
    let non_abelian: Vec<&Group> = mins.iter().filter(|n| !abelian(n)).collect();
    let socle_gens: Vec<Perm> = mins.iter().flat_map(|n| n.generators().iter().cloned()).collect();
    let socle_preimage = Group::generated_by(g.degree(), socle_gens.into_iter().chain(core.generators().iter().cloned()));
    let (primitive_type, shape, factors) = if mins.iter().any(abelian) {
        (1, IntersectionShape::NotApplicable, 0)
    } else if non_abelian.len() >= 2 {
        (3, IntersectionShape::NotApplicable, 0)
    } else {
        let n = non_abelian[0];
        let (shape, k) = intersection_shape(m, n, &core, limits)?;
        (2, shape, k)
    };
    Ok(MaximalSubgroupReport {
        subgroup: m.clone(),
        quotient_order: g.order() / core.order(),
        core,
        quotient: act.image,
        primitive_type,
        intersection_shape: shape,
        socle_factors: factors,
        socle_preimage,
    })
}

/// Shape of `(M ∩ N)/K` inside `N/K = T_1 x ... x T_k`.
fn intersection_shape(m: &Group, n: &Group, k: &Group, limits: &Limits) -> Result<(IntersectionShape, usize)> {
    let d = m.intersection(n, limits)?;
    let factors = minimal_normal_over(n, k, limits)?;
    let kk = factors.len();
    if d.order() == k.order() {
        return Ok((IntersectionShape::Trivial, kk));
    }
    let t_order = factors[0].order() / k.order();
    let mut all_full = true;
    let mut all_proper = true;
    let mut product = 1u128;
    for (i, t) in factors.iter().enumerate() {
        let meet = d.intersection(t, limits)?;
        product *= meet.order() / k.order();
        if meet.order() == t.order() {
            all_proper = false;
        }
        let others: Vec<Perm> = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .flat_map(|(_, f)| f.generators().iter().cloned())
            .chain(k.generators().iter().cloned())
            .collect();
        let c = Group::generated_by(n.degree(), others.clone());
        let dc = Group::generated_by(n.degree(), others.into_iter().chain(d.generators().iter().cloned()));
        if dc.order() / c.order() != t_order {
            all_full = false;
        }
    }
    if kk >= 2 && all_full && all_proper {
        return Ok((IntersectionShape::Diagonal, kk));
    }
    if product == d.order() / k.order() {
        return Ok((IntersectionShape::Coordinate, kk));
    }
    Err(Error::Engine(format!(
        "intersection with the socle is neither trivial, coordinate nor diagonal ({} of {} factors)",
        d.order() / k.order(),
        kk
    )))
}
