//! Homomorphisms between permutation groups and coset actions.

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::Perm;

/// A homomorphism given by the images of the source generators.
///
/// Evaluation and kernels go through the graph group
/// `{(g, g^phi)}` acting on the disjoint union of both point sets.
#[derive(Clone)]
pub struct Homomorphism {
    source: Group,
    target: Group,
    images: Vec<Perm>,
    by_source: OnceLock<StabChain>,
    kernel: OnceLock<Group>,
}

fn graph_element(a: &Perm, b: &Perm) -> Perm {
    let da = a.degree() as u32;
    let mut images: Vec<u32> = a.images().to_vec();
    images.extend(b.images().iter().map(|&p| p + da));
    Perm::from_images_unchecked(images)
}

impl Homomorphism {
    /// Checks that the generator assignment extends to a well-defined homomorphism.
    pub fn new(source: Group, target: Group, images: Vec<Perm>) -> Result<Self> {
        if images.len() != source.generators().len() {
            return Err(Error::Precondition("one image per source generator required".into()));
        }
        for img in &images {
            if !target.contains(img)? {
                return Err(Error::Precondition(format!("image {img} is not in the target group")));
            }
        }
        let hom = Self::new_unchecked(source, target, images);
        if hom.graph_chain().order() != hom.source.order() {
            return Err(Error::Precondition("generator images do not define a homomorphism".into()));
        }
        Ok(hom)
    }

    pub(crate) fn new_unchecked(source: Group, target: Group, images: Vec<Perm>) -> Self {
        Homomorphism { source, target, images, by_source: OnceLock::new(), kernel: OnceLock::new() }
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.images
    }

    fn graph_gens(&self) -> Vec<Perm> {
        self.source.generators().iter().zip(&self.images).map(|(a, b)| graph_element(a, b)).collect()
    }

    fn graph_chain(&self) -> &StabChain {
        self.by_source.get_or_init(|| {
            let ds = self.source.degree();
            let dt = self.target.degree();
            let prefix: Vec<u32> = (0..ds as u32).collect();
            StabChain::with_base_prefix(ds + dt, &prefix, &self.graph_gens())
        })
    }

    /// Image of a source element.
    pub fn apply(&self, g: &Perm) -> Result<Perm> {
        if !self.source.contains(g)? {
            return Err(Error::NotSubgroup(format!("{g} is not in the source group")));
        }
        let ds = self.source.degree();
        let dt = self.target.degree();
        let chain = self.graph_chain();
        // Sift (g, 1) through the source-point levels; the residue is (1, phi(g)^-1).
        let probe = graph_element(g, &Perm::identity(dt));
        let residue = chain.strip_prefix(&probe, ds).expect("member of the graph group");
        let t = residue.restrict(ds, dt).expect("residue preserves the target block");
        Ok(t.inverse())
    }

    pub fn image_of(&self, sub: &Group) -> Result<Group> {
        let imgs = sub.generators().iter().map(|g| self.apply(g)).collect::<Result<Vec<_>>>()?;
        Group::new(self.target.degree(), imgs)
    }

    pub fn image(&self) -> Group {
        Group::new(self.target.degree(), self.images.clone()).expect("degree checked")
    }

    pub fn kernel(&self) -> &Group {
        self.kernel.get_or_init(|| {
            let ds = self.source.degree();
            let dt = self.target.degree();
            let prefix: Vec<u32> = (ds as u32..(ds + dt) as u32).collect();
            let chain = StabChain::with_base_prefix(ds + dt, &prefix, &self.graph_gens());
            let stab = chain.stabilizer_chain(dt);
            let gens: Vec<Perm> =
                stab.strong_generators().iter().map(|g| g.restrict(0, ds).expect("source block")).collect();
            Group::generated_by(ds, gens)
        })
    }
}

/// Action of `group` on the right cosets of `sub` by right multiplication.
pub struct CosetAction {
    pub image: Group,
    pub hom: Homomorphism,
    /// Canonical representative of each coset; coset 0 is `sub` itself.
    pub representatives: Vec<Perm>,
}

/// Canonical element of the right coset `sub * x`: the member whose images
/// of the base points of `sub` are lexicographically least.
pub struct CosetCanonizer<'a> {
    chain: &'a StabChain,
    transversals: Vec<Vec<Perm>>,
}

impl<'a> CosetCanonizer<'a> {
    pub fn new(chain: &'a StabChain) -> Self {
        CosetCanonizer { chain, transversals: chain.transversals() }
    }

    pub fn canonical(&self, x: &Perm) -> Perm {
        let mut y = x.clone();
        for (level, reps) in self.transversals.iter().enumerate() {
            let orbit = self.chain.orbit_of_base(level);
            let best = (0..orbit.len()).min_by_key(|&k| y.apply(orbit[k])).expect("non-empty orbit");
            y = reps[best].mul(&y);
        }
        y
    }
}

pub fn coset_action(group: &Group, sub: &Group, limits: &Limits) -> Result<CosetAction> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("coset action needs a subgroup".into()));
    }
    let index = group.order() / sub.order();
    limits.check_degree(index as usize)?;
    let canonizer = CosetCanonizer::new(sub.chain());
    let canon = |x: &Perm| canonizer.canonical(x);
    let start = canon(&group.identity());
    let mut reps = vec![start.clone()];
    let mut lookup: FxHashMap<Perm, u32> = FxHashMap::default();
    lookup.insert(start, 0);
    let gens = group.generators();
    let mut action: Vec<Vec<u32>> = vec![Vec::with_capacity(index as usize); gens.len()];
    let mut k = 0;
    while k < reps.len() {
        for (s, g) in gens.iter().enumerate() {
            let c = canon(&reps[k].mul(g));
            let j = match lookup.get(&c) {
                Some(&j) => j,
                None => {
                    let j = reps.len() as u32;
                    lookup.insert(c.clone(), j);
                    reps.push(c);
                    j
                }
            };
            action[s].push(j);
        }
        k += 1;
    }
    if reps.len() as u128 != index {
        return Err(Error::Engine(format!("coset enumeration found {} cosets, expected {index}", reps.len())));
    }
    let images: Vec<Perm> = action.into_iter().map(Perm::from_images_unchecked).collect();
    let image = Group::new(index as usize, images.clone())?;
    let hom = Homomorphism::new_unchecked(group.clone(), image.clone(), images);
    Ok(CosetAction { image, hom, representatives: reps })
}

/// Quotient by a normal subgroup, realised as the regular action on cosets.
pub fn quotient(group: &Group, normal: &Group, limits: &Limits) -> Result<CosetAction> {
    if !normal.is_normal_in(group) {
        return Err(Error::NotNormal("quotient needs a normal subgroup".into()));
    }
    coset_action(group, normal, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn s4_on_point_stabilizer_cosets() {
        let s4 = Group::symmetric(4);
        let s3 = Group::new(4, vec![p("(1,2)", 4), p("(1,2,3)", 4)]).unwrap();
        let act = coset_action(&s4, &s3, &Limits::default()).unwrap();
        assert_eq!(act.image.degree(), 4);
        assert_eq!(act.image.order(), 24);
        assert!(act.hom.kernel().is_trivial());
    }

    #[test]
    fn s4_on_a4_cosets_is_sign() {
        let s4 = Group::symmetric(4);
        let act = coset_action(&s4, &Group::alternating(4), &Limits::default()).unwrap();
        assert_eq!(act.image.order(), 2);
        assert_eq!(act.hom.kernel().order(), 12);
        assert_eq!(act.hom.apply(&p("(1,2)", 4)).unwrap().to_string(), "(1,2)");
        assert!(act.hom.apply(&p("(1,2,3)", 4)).unwrap().is_identity());
    }

    #[test]
    fn q8_mod_center() {
        // Q8 acting regularly on 8 points.
        let i = p("(1,2,3,4)(5,6,7,8)", 8);
        let j = p("(1,5,3,7)(2,8,4,6)", 8);
        let q8 = Group::new(8, vec![i.clone(), j]).unwrap();
        assert_eq!(q8.order(), 8);
        let center = Group::new(8, vec![i.pow(2)]).unwrap();
        let act = quotient(&q8, &center, &Limits::default()).unwrap();
        assert_eq!(act.image.order(), 4);
        assert!(act.image.is_abelian());
        assert!(act.image.generators().iter().all(|g| g.pow(2).is_identity()));
        assert!(act.hom.kernel().same_as(&center));
    }

    #[test]
    fn bound_and_containment_errors() {
        let s4 = Group::symmetric(4);
        let s5 = Group::symmetric(5);
        assert!(matches!(
            coset_action(&s4, &Group::trivial(5), &Limits::default()),
            Err(Error::NotSubgroup(_))
        ));
        let tight = Limits { max_degree: 10, ..Limits::default() };
        assert!(matches!(coset_action(&s5, &Group::trivial(5), &tight), Err(Error::BoundExceeded { .. })));
        let _ = s4;
    }

    #[test]
    fn homomorphism_validation() {
        let s3 = Group::symmetric(3);
        let c2 = Group::cyclic(2);
        let sign = Homomorphism::new(s3.clone(), c2.clone(), vec![Perm::identity(2), p("(1,2)", 2)]).unwrap();
        assert_eq!(sign.kernel().order(), 3);
        // Sending the 3-cycle to the involution is not a homomorphism.
        assert!(Homomorphism::new(s3, c2, vec![p("(1,2)", 2), p("(1,2)", 2)]).is_err());
    }
}
