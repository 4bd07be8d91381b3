//! The minimal-generating-set exchange (MGSE) property.
//!
//! `G` fails MGSE exactly when some `(d-1)`-tuple `u` has a completion
//! `z` with `<u, z> = G` while some generating `d`-tuple avoids every such
//! completion. With `E(u) = {z : <u, z> = G}`, the pair `x = (u, z)` and
//! `y` with all entries outside `E(u)` is then a counterexample at the last
//! position.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime, prime_power_base};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::gensets::{min_generators, search_tuple};
use crate::group::Group;
use crate::hom::quotient;
use crate::lattice::{all_subgroups, frattini};
use crate::limits::Limits;
use crate::linalg::{intertwiner, Matrix};
use crate::perm::Perm;
use crate::structure::{fitting_subgroup, is_cyclic, is_solvable, minimal_normal_subgroups};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MgseMethod {
    Bruteforce,
    Optimized,
    Classification,
}

impl std::fmt::Display for MgseMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MgseMethod::Bruteforce => "bruteforce",
            MgseMethod::Optimized => "optimized",
            MgseMethod::Classification => "classification",
        })
    }
}

/// Generating tuples `x`, `y` such that replacing `x[index]` by any entry of
/// `y` never generates. `index` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub x: Vec<Perm>,
    pub index: usize,
    pub y: Vec<Perm>,
}

#[derive(Clone, Debug)]
pub struct MgseVerdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    pub method: MgseMethod,
    pub d: usize,
}

fn generates(g: &Group, tuple: &[Perm]) -> Result<bool> {
    Ok(Group::new(g.degree(), tuple.to_vec())?.order() == g.order())
}

/// Re-checks a counterexample with fresh stabilizer chains.
pub fn verify_counterexample(g: &Group, c: &Counterexample) -> Result<bool> {
    if c.x.len() != c.y.len() || c.index >= c.x.len() {
        return Ok(false);
    }
    if !generates(g, &c.x)? || !generates(g, &c.y)? {
        return Ok(false);
    }
    for yj in &c.y {
        let mut t = c.x.clone();
        t[c.index] = yj.clone();
        if generates(g, &t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive oracle over all `(d-1)`-tuples `u`: `E(u)` is computed by
/// testing every `z`, and generating `d`-tuples inside `G \ E(u)` are
/// looked for by plain enumeration. Needs `|G|^d` within the brute-force bound.
pub fn mgse_bruteforce(g: &Group, limits: &Limits) -> Result<MgseVerdict> {
    let d = min_generators(g, limits)?.d;
    let order = g.order();
    let work = order.checked_pow(d as u32).unwrap_or(u128::MAX);
    Limits::check("brute-force tuples |G|^d", limits.max_bruteforce_tuples, work)?;
    let verdict = |c: Option<Counterexample>| MgseVerdict { holds: c.is_none(), counterexample: c, method: MgseMethod::Bruteforce, d };
    if d <= 1 {
        return Ok(verdict(None));
    }
    let e = g.enumeration(limits)?;
    let n = e.len();
    let prefixes = n.pow(d as u32 - 1);
    let decode = |mut code: usize, len: usize| -> Vec<u32> {
        let mut v = Vec::with_capacity(len);
        for _ in 0..len {
            v.push((code % n) as u32);
            code /= n;
        }
        v
    };
    let found = (0..prefixes).into_par_iter().find_map_first(|code| {
        let u = decode(code, d - 1);
        let mut probe = u.clone();
        probe.push(0);
        let mut good = Bitset::new(n);
        for z in 0..n as u32 {
            probe[d - 1] = z;
            if e.generates(&probe) {
                good.insert(z);
            }
        }
        let z = good.first()?;
        let bad: Vec<u32> = good.complement().iter().collect();
        // All d-tuples over the bad elements.
        let m = bad.len();
        let mut idx = vec![0usize; d];
        let mut y = vec![0u32; d];
        loop {
            for k in 0..d {
                y[k] = bad[idx[k]];
            }
            if e.generates(&y) {
                let mut x = u.clone();
                x.push(z);
                return Some((x, y.clone()));
            }
            let mut k = 0;
            loop {
                if k == d {
                    return None;
                }
                idx[k] += 1;
                if idx[k] < m {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    });
    let c = found.map(|(x, y)| Counterexample {
        x: x.into_iter().map(|i| e.element(i).clone()).collect(),
        index: d - 1,
        y: y.into_iter().map(|i| e.element(i).clone()).collect(),
    });
    Ok(verdict(c))
}

/// Decision through the subgroup lattice: for each class of
/// `(d-1)`-generated subgroups `R`, `Bad(R)` is the union of the maximal
/// subgroups containing `R`. MGSE fails iff for some `R` the set `Bad(R)` is
/// proper (so `R` extends to a generating tuple) and contains a generating
/// `d`-tuple. Classes are scanned in lattice order.
pub fn mgse_decide(g: &Group, limits: &Limits) -> Result<MgseVerdict> {
    let d = min_generators(g, limits)?.d;
    let verdict = |c: Option<Counterexample>| MgseVerdict { holds: c.is_none(), counterexample: c, method: MgseMethod::Optimized, d };
    if d <= 1 {
        return Ok(verdict(None));
    }
    let lattice = all_subgroups(g, limits)?;
    let e = lattice.enumeration().clone();
    let maximal: Vec<Bitset> = lattice.maximal_classes().flat_map(|(i, _)| lattice.conjugates(i)).collect();
    let classes: Vec<usize> = (0..lattice.len()).filter(|&i| lattice.class(i).order < g.order()).collect();
    let found = classes.par_iter().find_map_first(|&i| -> Option<Result<Counterexample>> {
        let class = lattice.class(i);
        let mut bad = Bitset::new(e.len());
        for m in &maximal {
            if class.bits().is_subset(m) {
                bad.union_with(m);
            }
        }
        if bad.is_full() {
            return None;
        }
        let rgens = match small_generating_set(&class.group, d - 1, limits) {
            Ok(Some(r)) => r,
            Ok(None) => return None,
            Err(err) => return Some(Err(err)),
        };
        let out = search_tuple(&e, &vec![bad.clone(); d]);
        let y = out.witness?;
        let z = bad.complement().first().expect("bad set is proper");
        let mut x = rgens;
        x.resize(d - 1, g.identity());
        x.push(e.element(z).clone());
        Some(Ok(Counterexample { x, index: d - 1, y: y.into_iter().map(|i| e.element(i).clone()).collect() }))
    });
    let c = found.transpose()?;
    Ok(verdict(c))
}

/// A generating set of `r` with at most `k` elements, if `d(r) <= k`.
fn small_generating_set(r: &Group, k: usize, limits: &Limits) -> Result<Option<Vec<Perm>>> {
    let nontrivial: Vec<Perm> = r.generators().iter().filter(|x| !x.is_identity()).cloned().collect();
    if nontrivial.len() <= k {
        return Ok(Some(nontrivial));
    }
    let rep = min_generators(r, limits)?;
    Ok((rep.d <= k).then_some(rep.witness))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolvableBranch {
    Cyclic,
    PGroup,
    FrattiniSemidirect,
    None,
}

impl std::fmt::Display for SolvableBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolvableBranch::Cyclic => "cyclic",
            SolvableBranch::PGroup => "p-group",
            SolvableBranch::FrattiniSemidirect => "frattini-semidirect",
            SolvableBranch::None => "none",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolvableCharacterization {
    pub applies: bool,
    pub branch: SolvableBranch,
    /// Order of the complement `H`.
    pub p: Option<u64>,
    /// Characteristic of the module `V`.
    pub q: Option<u64>,
    /// `dim V` over `F_q`.
    pub rank: Option<u32>,
    /// Whether `H` also acts faithfully on a single minimal normal subgroup.
    pub faithful_on_single: Option<bool>,
    /// Why the semidirect branch does not apply.
    pub reason: Option<String>,
}

impl SolvableCharacterization {
    fn simple(branch: SolvableBranch) -> Self {
        SolvableCharacterization {
            applies: branch != SolvableBranch::None,
            branch,
            p: None,
            q: None,
            rank: None,
            faithful_on_single: None,
            reason: None,
        }
    }

    fn none(reason: impl Into<String>) -> Self {
        SolvableCharacterization { reason: Some(reason.into()), ..Self::simple(SolvableBranch::None) }
    }
}

/// Basis and coordinate map of an elementary abelian `q`-group.
struct VectorSpace {
    basis: Vec<Perm>,
    coords: rustc_hash::FxHashMap<Perm, Vec<u32>>,
}

impl VectorSpace {
    fn new(n: &Group, q: u32) -> Self {
        let degree = n.degree();
        let mut basis: Vec<Perm> = Vec::new();
        let mut coords = rustc_hash::FxHashMap::default();
        coords.insert(Perm::identity(degree), Vec::new());
        for g in n.generators() {
            if coords.contains_key(g) {
                continue;
            }
            // Extend the span by g: every old vector times g^c.
            let old: Vec<(Perm, Vec<u32>)> = coords.drain().collect();
            let mut power = Perm::identity(degree);
            for c in 0..q {
                for (v, co) in &old {
                    let mut co = co.clone();
                    co.push(c);
                    coords.insert(v.mul(&power), co);
                }
                power = power.mul(g);
            }
            basis.push(g.clone());
        }
        let k = basis.len();
        for co in coords.values_mut() {
            co.resize(k, 0);
        }
        VectorSpace { basis, coords }
    }

    /// Matrix of conjugation by `h`, acting on row vectors.
    fn action(&self, h: &Perm, q: u32) -> Result<Matrix> {
        let rows: Vec<Vec<u32>> = self
            .basis
            .iter()
            .map(|b| self.coords.get(&b.conjugate_by(h)).cloned())
            .collect::<Option<_>>()
            .ok_or_else(|| Error::NotNormal("subgroup not invariant under the complement".into()))?;
        Matrix::from_rows(q, &rows)
    }
}

/// The structural side of the solvable characterization of MGSE.
pub fn solvable_characterization(g: &Group, limits: &Limits) -> Result<SolvableCharacterization> {
    if !is_solvable(g) {
        return Err(Error::Precondition("the characterization applies to solvable groups".into()));
    }
    if is_cyclic(g) {
        return Ok(SolvableCharacterization::simple(SolvableBranch::Cyclic));
    }
    if prime_power_base(g.order() as u64).is_some() {
        return Ok(SolvableCharacterization::simple(SolvableBranch::PGroup));
    }
    let phi = frattini(g, limits)?;
    let qact = quotient(g, &phi, limits)?;
    let quot = qact.image;
    let v = fitting_subgroup(&quot, limits)?;
    if !v.is_abelian() {
        return Ok(SolvableCharacterization::none("Fitting subgroup of G/Frat(G) is not abelian"));
    }
    let Some(q) = prime_power_base(v.order() as u64) else {
        return Ok(SolvableCharacterization::none("Fitting subgroup of G/Frat(G) is not a q-group"));
    };
    if v.generators().iter().any(|x| x.order() != q) {
        return Ok(SolvableCharacterization::none("Fitting subgroup of G/Frat(G) is not elementary abelian"));
    }
    let index = quot.order() / v.order();
    if !is_prime(index as u64) {
        return Ok(SolvableCharacterization::none(format!("|Q/F(Q)| = {index} is not prime")));
    }
    let p = index as u64;
    let e = quot.enumeration(limits)?;
    let vbits = e.subgroup_bits(&v);
    let h = (0..e.len() as u32)
        .find(|&x| !vbits.contains(x) && e.order_of(x) as u64 == p)
        .map(|x| e.element(x).clone())
        .ok_or_else(|| Error::Engine("no complement of prime order".into()))?;
    let q32 = q as u32;
    let rank = VectorSpace::new(&v, q32).basis.len() as u32;
    let acts_on = |n: &Group| -> Result<bool> { Ok(n.generators().iter().any(|x| x.conjugate_by(&h) != *x)) };
    if !acts_on(&v)? {
        return Ok(SolvableCharacterization::none("the complement centralizes the Fitting subgroup"));
    }
    let mins = minimal_normal_subgroups(&quot, limits)?;
    let spaces: Vec<VectorSpace> = mins.iter().map(|n| VectorSpace::new(n, q32)).collect();
    let first = spaces[0].action(&h, q32)?;
    for s in &spaces[1..] {
        let a = s.action(&h, q32)?;
        if a.rows != first.rows || intertwiner(&first, &a)?.is_none() {
            return Ok(SolvableCharacterization::none("minimal normal subgroups are not isomorphic modules"));
        }
    }
    let faithful_on_single = acts_on(&mins[0])?;
    Ok(SolvableCharacterization {
        applies: true,
        branch: SolvableBranch::FrattiniSemidirect,
        p: Some(p),
        q: Some(q),
        rank: Some(rank),
        faithful_on_single: Some(faithful_on_single),
        reason: None,
    })
}

/// Verdict implied by the characterization.
pub fn mgse_by_classification(g: &Group, limits: &Limits) -> Result<MgseVerdict> {
    let c = solvable_characterization(g, limits)?;
    let d = min_generators(g, limits)?.d;
    Ok(MgseVerdict { holds: c.applies, counterexample: None, method: MgseMethod::Classification, d })
}
