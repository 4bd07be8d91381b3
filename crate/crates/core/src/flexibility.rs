//! Flexible subgroups of almost simple groups, the semi-ordering on `S_n`,
//! membership in `H~` and good pairs.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arith::{is_prime, prime_divisors, r_part};
use crate::bitset::Bitset;
use crate::enumeration::Enumeration;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::all_subgroups;
use crate::limits::Limits;
use crate::perm::Perm;
use crate::products::{WreathElement, WreathFrame};

/// `σ1 ≤ σ2` iff `|σ1|_r < |σ2|_r`, or the `r`-parts agree and `|σ1| ≤ |σ2|`.
pub fn semi_order_leq(s1: &Perm, s2: &Perm, r: u64) -> Result<bool> {
    if !is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    Ok(semi_key(s1.order(), r) <= semi_key(s2.order(), r))
}

fn semi_key(order: u64, r: u64) -> (u64, u64) {
    (r_part(order, r), order)
}

#[derive(Clone, Debug)]
pub struct FlexibilityReport {
    pub k: Group,
    pub s: Group,
    pub h: Group,
    pub verdict: bool,
    /// `H ∩ S != S`.
    pub proper_in_socle: bool,
    /// `HS = K`.
    pub supplements: bool,
    pub witness_prime: Option<u64>,
    /// An element of `H` defeating the last prime tried, with the primes tried.
    pub failure: Option<(Perm, Vec<u64>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CosetOrderProfile {
    pub coset: Perm,
    pub orders: BTreeSet<u64>,
}

/// Cosets of `core` in `h` as index lists into the enumeration of `h`,
/// the trivial coset first.
struct Cosets {
    e: std::sync::Arc<Enumeration>,
    cosets: Vec<Vec<u32>>,
}

impl Cosets {
    fn new(h: &Group, core: &Bitset, e: std::sync::Arc<Enumeration>) -> Self {
        let core_elems: Vec<u32> = core.iter().collect();
        let mut seen = Bitset::new(e.len());
        let mut cosets = Vec::new();
        for x in 0..e.len() as u32 {
            if seen.contains(x) {
                continue;
            }
            let coset: Vec<u32> = core_elems.iter().map(|&s| e.mul(x, s)).collect();
            for &y in &coset {
                seen.insert(y);
            }
            cosets.push(coset);
        }
        debug_assert_eq!(cosets.len() as u128 * core_elems.len() as u128, h.order());
        Cosets { e, cosets }
    }

    fn orders(&self, coset: &[u32]) -> Vec<u64> {
        coset.iter().map(|&x| self.e.order_of(x) as u64).collect()
    }

    /// First coset whose elements all share one `r`-part of their order.
    fn defeating(&self, r: u64) -> Option<u32> {
        self.cosets.iter().find_map(|c| {
            let parts: BTreeSet<u64> = self.orders(c).into_iter().map(|o| r_part(o, r)).collect();
            (parts.len() < 2).then_some(c[0])
        })
    }
}

fn socle_bits(e: &Enumeration, s: &Group) -> Bitset {
    let mut bits = Bitset::new(e.len());
    for (i, x) in e.elements().iter().enumerate() {
        if s.has(x) {
            bits.insert(i as u32);
        }
    }
    bits
}

/// Checks the three flexibility conditions, trying the primes dividing `|K|`
/// in increasing order.
pub fn is_flexible(k: &Group, s: &Group, h: &Group, limits: &Limits) -> Result<FlexibilityReport> {
    let primes = prime_divisors(k.order());
    is_flexible_with_primes(k, s, h, &primes, limits)
}

/// As [`is_flexible`] with an explicit prime order.
pub fn is_flexible_with_primes(k: &Group, s: &Group, h: &Group, primes: &[u64], limits: &Limits) -> Result<FlexibilityReport> {
    if !s.is_subgroup_of(k) || !s.is_normal_in(k) {
        return Err(Error::NotNormal("S is not a normal subgroup of K".into()));
    }
    if !h.is_subgroup_of(k) {
        return Err(Error::NotSubgroup("H is not a subgroup of K".into()));
    }
    let e = h.enumeration(limits)?;
    let core = socle_bits(&e, s);
    let core_order = core.count() as u128;
    let proper_in_socle = core_order < s.order();
    let supplements = h.order() * s.order() / core_order == k.order();
    let mut report = FlexibilityReport {
        k: k.clone(),
        s: s.clone(),
        h: h.clone(),
        verdict: false,
        proper_in_socle,
        supplements,
        witness_prime: None,
        failure: None,
    };
    if !proper_in_socle || !supplements {
        return Ok(report);
    }
    let cosets = Cosets::new(h, &core, e.clone());
    let mut tried = Vec::new();
    let mut last = None;
    for &r in primes {
        tried.push(r);
        match cosets.defeating(r) {
            None => {
                report.verdict = true;
                report.witness_prime = Some(r);
                return Ok(report);
            }
            Some(x) => last = Some(e.element(x).clone()),
        }
    }
    report.failure = last.map(|x| (x, tried));
    Ok(report)
}

/// Distinct order sets `{|x| : x in g·core}` over the non-trivial cosets.
pub fn coset_order_profiles(h: &Group, core: &Group, limits: &Limits) -> Result<Vec<CosetOrderProfile>> {
    if !core.is_subgroup_of(h) || !core.is_normal_in(h) {
        return Err(Error::NotNormal("core is not a normal subgroup of H".into()));
    }
    let e = h.enumeration(limits)?;
    let bits = e.subgroup_bits(core);
    let cosets = Cosets::new(h, &bits, e.clone());
    let mut out: Vec<CosetOrderProfile> = Vec::new();
    for c in &cosets.cosets[1..] {
        let orders: BTreeSet<u64> = cosets.orders(c).into_iter().collect();
        if !out.iter().any(|p| p.orders == orders) {
            out.push(CosetOrderProfile { coset: e.element(c[0]).clone(), orders });
        }
    }
    out.sort_by(|a, b| a.orders.cmp(&b.orders));
    Ok(out)
}

/// Flexibility of one maximal class of `K`.
#[derive(Clone, Debug)]
pub struct MaximalFlexibility {
    pub class: usize,
    pub order: u128,
    pub contains_socle: bool,
    pub report: Option<FlexibilityReport>,
}

/// Every maximal class of `K` with its flexibility verdict. Classes
/// containing `S` get no report.
pub fn maximal_flexibility(k: &Group, s: &Group, limits: &Limits) -> Result<Vec<MaximalFlexibility>> {
    let lattice = all_subgroups(k, limits)?;
    let maximal: Vec<usize> = lattice.maximal_classes().map(|(i, _)| i).collect();
    maximal
        .par_iter()
        .map(|&i| {
            let h = &lattice.class(i).group;
            let contains_socle = s.is_subgroup_of(h);
            let report = if contains_socle { None } else { Some(is_flexible(k, s, h, limits)?) };
            Ok(MaximalFlexibility { class: i, order: h.order(), contains_socle, report })
        })
        .collect()
}

/// First flexible subgroup in lattice order: maximal classes first, then
/// every other proper class.
pub fn flexible_subgroup_search(k: &Group, s: &Group, limits: &Limits) -> Result<Option<(Group, FlexibilityReport)>> {
    let lattice = all_subgroups(k, limits)?;
    let order: Vec<usize> = lattice
        .maximal_classes()
        .map(|(i, _)| i)
        .chain((0..lattice.len()).filter(|&i| !lattice.class(i).maximal && lattice.class(i).order < k.order()))
        .collect();
    let found = order.par_iter().find_map_first(|&i| {
        let h = &lattice.class(i).group;
        match is_flexible(k, s, h, limits) {
            Ok(r) if r.verdict => Some(Ok((h.clone(), r))),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    found.transpose()
}

/// Whether every base coordinate of `w` lies in `H`.
pub fn h_tilde_contains(frame: &WreathFrame, w: &WreathElement, h: &Group) -> Result<bool> {
    if h.degree() != frame.inner_degree {
        return Err(Error::DegreeMismatch { expected: frame.inner_degree, found: h.degree() });
    }
    if w.base.len() != frame.blocks || w.base.iter().any(|a| a.degree() != frame.inner_degree) {
        return Err(Error::DegreeMismatch { expected: frame.inner_degree, found: w.base.first().map_or(0, Perm::degree) });
    }
    Ok(w.base.iter().all(|a| h.has(a)))
}

/// Data of a candidate good pair: the cycle products `a_i` along the cycles
/// of `ρ` (ordered by the semi-ordering), and `b`.
#[derive(Clone, Debug)]
pub struct GoodPairContext {
    pub a: Vec<Perm>,
    pub b: Perm,
    /// Cycles of `ρ`, 0-based, each starting at its smallest point.
    pub rho_cycles: Vec<Vec<u32>>,
    /// Cycles of `σ` meeting the support of `ρ_1`, in semi-order.
    pub sigma_cycles: Vec<Vec<u32>>,
    pub s: Group,
    pub aut_s: Option<Group>,
}

fn ordered_cycles(p: &Perm, r: u64) -> Vec<Vec<u32>> {
    let mut cycles = p.all_cycles();
    cycles.sort_by_key(|c| (semi_key(c.len() as u64, r), c[0]));
    cycles
}

fn power_coordinate(frame: &WreathFrame, flat: &Perm, e: u64, at: u32) -> Result<Perm> {
    let w = frame
        .decompose(&flat.pow(e as i64))
        .ok_or_else(|| Error::Precondition(format!("{flat} does not preserve the wreath blocks")))?;
    Ok(w.base[at as usize].clone())
}

impl GoodPairContext {
    /// Direct construction from the cycle products.
    pub fn new(a: Vec<Perm>, rho_cycles: Vec<Vec<u32>>, b: Perm, s: Group, aut_s: Option<Group>) -> Result<Self> {
        if a.len() != rho_cycles.len() || a.is_empty() {
            return Err(Error::Precondition("one cycle product per cycle of ρ is needed".into()));
        }
        Ok(GoodPairContext { a, b, rho_cycles, sigma_cycles: Vec::new(), s, aut_s })
    }

    /// Builds the context from decorated elements `x g_1` and `y g_2` of a
    /// wreath product. `a_i` is the `m_{i,1}` coordinate of `(x g_1)^{|ρ_i|}`
    /// and `b` the `m` coordinate of `(y g_2)^{|σ_j|}` for the cycle `σ_j`
    /// of `σ` through `m`.
    pub fn from_wreath(
        frame: &WreathFrame,
        xg1: &Perm,
        yg2: &Perm,
        r: u64,
        s: Group,
        aut_s: Option<Group>,
    ) -> Result<Self> {
        if !is_prime(r) {
            return Err(Error::NotPrime(r));
        }
        let rho = frame.top_of(xg1).ok_or_else(|| Error::Precondition("x g_1 does not preserve the blocks".into()))?;
        let sigma = frame.top_of(yg2).ok_or_else(|| Error::Precondition("y g_2 does not preserve the blocks".into()))?;
        let rho_cycles = ordered_cycles(&rho, r);
        let a = rho_cycles
            .iter()
            .map(|c| power_coordinate(frame, xg1, c.len() as u64, c[0]))
            .collect::<Result<Vec<_>>>()?;
        let m = rho_cycles[0][0];
        let sigma_cycles: Vec<Vec<u32>> = ordered_cycles(&sigma, r)
            .into_iter()
            .filter(|c| c.iter().any(|p| rho_cycles[0].contains(p)))
            .collect();
        let through_m = sigma_cycles.iter().find(|c| c.contains(&m)).expect("every point lies on a cycle");
        let b = power_coordinate(frame, yg2, through_m.len() as u64, m)?;
        Ok(GoodPairContext { a, b, rho_cycles, sigma_cycles, s, aut_s })
    }
}

/// Whether `x` is conjugate to `y` under `aut`, decided by matching
/// fingerprints and then an exhaustive search for a conjugator.
fn aut_conjugate(aut: &Enumeration, x: &Perm, y: &Perm) -> bool {
    if x.order() != y.order() || x.cycle_type() != y.cycle_type() {
        return false;
    }
    aut.elements().par_iter().any(|t| x.conjugate_by(t) == *y)
}

/// `(1)` `<a_1, b>` contains `S`; `(2)` for each `i >= 2`, with
/// `L = lcm(|ρ_1|, ..., |ρ_i|)`, `a_i^{L/|ρ_i|}` is not `Aut(S)`-conjugate
/// to `a_1^{L/|ρ_1|}`.
pub fn is_good_pair(ctx: &GoodPairContext, limits: &Limits) -> Result<bool> {
    let aut = ctx.aut_s.as_ref().ok_or_else(|| Error::Precondition("Aut(S) is not available for this socle".into()))?;
    if !ctx.s.is_subgroup_of(aut) {
        return Err(Error::Precondition("S is not contained in the supplied Aut(S)".into()));
    }
    let degree = ctx.s.degree();
    let ab = Group::new(degree, vec![ctx.a[0].clone(), ctx.b.clone()])?;
    if !ctx.s.is_subgroup_of(&ab) {
        return Ok(false);
    }
    if ctx.a.len() == 1 {
        return Ok(true);
    }
    let e = aut.enumeration(limits)?;
    let len1 = ctx.rho_cycles[0].len() as u64;
    let mut l = len1;
    for (ai, ci) in ctx.a.iter().zip(&ctx.rho_cycles).skip(1) {
        let li = ci.len() as u64;
        l = num_integer::lcm(l, li);
        let lhs = ai.pow((l / li) as i64);
        let rhs = ctx.a[0].pow((l / len1) as i64);
        if aut_conjugate(&e, &lhs, &rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn semi_order_examples() {
        assert!(semi_order_leq(&p("(1,2,3)", 5), &p("(1,2)", 5), 2).unwrap());
        let x = p("(1,2)(3,4,5)", 5);
        let y = p("(1,2)", 5);
        assert!(!semi_order_leq(&x, &y, 2).unwrap());
        assert!(semi_order_leq(&y, &x, 2).unwrap());
        assert!(semi_order_leq(&x, &x, 3).unwrap());
        assert!(semi_order_leq(&x, &y, 4).is_err());
    }

    #[test]
    fn point_stabilizer_in_s5() {
        let limits = Limits::default();
        let k = Group::symmetric(5);
        let s = Group::alternating(5);
        let h = Group::new(5, vec![p("(1,2,3,4)", 5), p("(1,2)", 5)]).unwrap();
        let r = is_flexible(&k, &s, &h, &limits).unwrap();
        assert!(r.verdict);
        assert!(r.witness_prime.is_some());
        let rev = is_flexible_with_primes(&k, &s, &h, &[5, 3, 2], &limits).unwrap();
        assert_eq!(rev.verdict, r.verdict);
        // A5 itself contains the socle.
        assert!(!is_flexible(&k, &s, &s, &limits).unwrap().verdict);
        assert!(is_flexible(&s, &Group::new(5, vec![p("(1,2,3,4)", 5), p("(1,2)", 5)]).unwrap(), &s, &limits).is_err());
    }

    #[test]
    fn search_in_s5() {
        let limits = Limits::default();
        let (h, r) = flexible_subgroup_search(&Group::symmetric(5), &Group::alternating(5), &limits).unwrap().unwrap();
        assert!(r.verdict);
        assert!(h.order() < 120);
    }

    #[test]
    fn trivial_profiles() {
        let limits = Limits::default();
        let a4 = Group::alternating(4);
        assert!(coset_order_profiles(&a4, &a4, &limits).unwrap().is_empty());
        let s4 = Group::symmetric(4);
        let prof = coset_order_profiles(&s4, &a4, &limits).unwrap();
        assert_eq!(prof.len(), 1);
        assert_eq!(prof[0].orders, BTreeSet::from([2, 4]));
    }

    #[test]
    fn degenerate_good_pair() {
        let limits = Limits::default();
        let a5 = Group::alternating(5);
        let s5 = Group::symmetric(5);
        let a = p("(1,2,3,4,5)", 5);
        let b = p("(1,2,3)", 5);
        let ctx = GoodPairContext::new(vec![a], vec![vec![0]], b, a5.clone(), Some(s5.clone())).unwrap();
        assert!(is_good_pair(&ctx, &limits).unwrap());
        let id = Perm::identity(5);
        let ctx = GoodPairContext::new(vec![id.clone()], vec![vec![0]], id.clone(), a5.clone(), Some(s5)).unwrap();
        assert!(!is_good_pair(&ctx, &limits).unwrap());
        let ctx = GoodPairContext::new(vec![id.clone()], vec![vec![0]], id, a5, None).unwrap();
        assert!(is_good_pair(&ctx, &limits).is_err());
    }
}
