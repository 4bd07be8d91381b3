//! Direct products and imprimitive wreath products.

use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::perm::Perm;

/// `A x B` acting on the disjoint union of the two point sets (A first).
pub fn direct_product(a: &Group, b: &Group, limits: &Limits) -> Result<Group> {
    let total = a.degree() + b.degree();
    limits.check_degree(total)?;
    let mut gens: Vec<Perm> = a.generators().iter().map(|g| g.embed(0, total)).collect();
    gens.extend(b.generators().iter().map(|g| g.embed(a.degree(), total)));
    Group::new(total, gens)
}

/// Coordinates of the imprimitive action of `inner wr top`: block `i`
/// occupies points `i*m .. (i+1)*m`, and `(alpha_1..alpha_n) sigma` sends
/// point `(i, x)` to `(i^sigma, x^alpha_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WreathFrame {
    /// Number of blocks.
    pub blocks: usize,
    /// Inner degree.
    pub inner_degree: usize,
}

/// An element of `inner wr S_n` in both decomposed and flat form. Equality
/// and hashing use the flat permutation.
#[derive(Clone, Debug)]
pub struct WreathElement {
    pub base: Vec<Perm>,
    pub top: Perm,
    pub flat: Perm,
}

impl PartialEq for WreathElement {
    fn eq(&self, other: &Self) -> bool {
        self.flat == other.flat
    }
}

impl Eq for WreathElement {}

impl Hash for WreathElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.flat.hash(state);
    }
}

impl WreathFrame {
    pub fn new(blocks: usize, inner_degree: usize) -> Self {
        WreathFrame { blocks, inner_degree }
    }

    pub fn degree(&self) -> usize {
        self.blocks * self.inner_degree
    }

    pub fn compose(&self, base: &[Perm], top: &Perm) -> Result<WreathElement> {
        let (n, m) = (self.blocks, self.inner_degree);
        if base.len() != n || top.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, found: base.len().max(top.degree()) });
        }
        let mut images = vec![0u32; n * m];
        for (i, alpha) in base.iter().enumerate() {
            if alpha.degree() != m {
                return Err(Error::DegreeMismatch { expected: m, found: alpha.degree() });
            }
            let target = top.apply(i as u32) as usize;
            for x in 0..m {
                images[i * m + x] = (target * m) as u32 + alpha.apply(x as u32);
            }
        }
        Ok(WreathElement { base: base.to_vec(), top: top.clone(), flat: Perm::from_images_unchecked(images) })
    }

    /// Inverse of [`WreathFrame::compose`]; `None` if `flat` does not preserve the blocks.
    pub fn decompose(&self, flat: &Perm) -> Option<WreathElement> {
        let (n, m) = (self.blocks, self.inner_degree);
        if flat.degree() != n * m {
            return None;
        }
        let mut top = Vec::with_capacity(n);
        let mut base = Vec::with_capacity(n);
        for i in 0..n {
            let target = flat.apply((i * m) as u32) as usize / m;
            let mut images = Vec::with_capacity(m);
            for x in 0..m {
                let q = flat.apply((i * m + x) as u32) as usize;
                if q / m != target {
                    return None;
                }
                images.push((q % m) as u32);
            }
            top.push(target as u32);
            base.push(Perm::from_images(images).ok()?);
        }
        let top = Perm::from_images(top).ok()?;
        Some(WreathElement { base, top, flat: flat.clone() })
    }

    /// Top component only.
    pub fn top_of(&self, flat: &Perm) -> Option<Perm> {
        self.decompose(flat).map(|w| w.top)
    }
}

/// `inner wr top` in its imprimitive action, together with its frame.
pub fn wreath_product(inner: &Group, top: &Group, limits: &Limits) -> Result<(Group, WreathFrame)> {
    let n = top.degree();
    let m = inner.degree();
    let frame = WreathFrame::new(n, m);
    limits.check_degree(frame.degree())?;
    let id_inner = Perm::identity(m);
    let id_top = Perm::identity(n);
    let mut gens = Vec::new();
    // Inner generators in the first coordinate of each top orbit suffice.
    for orbit in top.orbits() {
        let i = orbit[0] as usize;
        for g in inner.generators() {
            let mut base = vec![id_inner.clone(); n];
            base[i] = g.clone();
            gens.push(frame.compose(&base, &id_top)?.flat);
        }
    }
    for t in top.generators() {
        gens.push(frame.compose(&vec![id_inner.clone(); n], t)?.flat);
    }
    let group = Group::new(frame.degree(), gens)?;
    Ok((group, frame))
}
