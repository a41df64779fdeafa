//! Homomorphisms between finite groups, recorded element-by-element.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{closure_members, Subgroup};

/// A total map between two finite groups, validated as a homomorphism on
/// construction.
#[derive(Clone)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<u32>,
}

impl GroupHom {
    /// Build and validate. Sources of order at most 2048 are checked against
    /// the full multiplication table; larger sources are checked on a
    /// generating set, i.e. `f(x g) = f(x) f(g)` for every `x` and every
    /// generator `g`, which proves the full property by induction on word
    /// length (every element of a finite group is a positive word in any
    /// generating set).
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<u32>,
    ) -> Result<GroupHom> {
        let h = GroupHom {
            source,
            target,
            images,
        };
        if h.source.order() <= 2048 {
            h.validate_full()?;
        } else {
            h.validate_on_generators()?;
        }
        Ok(h)
    }

    /// Build with the exhaustive all-pairs check regardless of size.
    pub fn new_fully_checked(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<u32>,
    ) -> Result<GroupHom> {
        let h = GroupHom {
            source,
            target,
            images,
        };
        h.validate_full()?;
        Ok(h)
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.order() as u32).collect(),
        }
    }

    /// The inner automorphism `x -> a x a^{-1}`.
    pub fn inner(g: &Arc<FiniteGroup>, a: u32) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.order() as u32).map(|x| g.conj(a, x)).collect(),
        }
    }

    /// The map sending everything to the identity.
    pub fn constant(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            images: vec![0; source.order()],
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline(always)]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn validate_full(&self) -> Result<()> {
        self.validate_shape()?;
        let n = self.source.order() as u32;
        for x in 0..n {
            let fx = self.images[x as usize];
            for y in 0..n {
                if self.images[self.source.mul(x, y) as usize]
                    != self.target.mul(fx, self.images[y as usize])
                {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(())
    }

    pub fn validate_on_generators(&self) -> Result<()> {
        self.validate_shape()?;
        let gens = self.source.generating_set();
        if closure_members(&self.source, &gens).len() != self.source.order() {
            return Err(Error::InternalInconsistency(
                "recorded generating set does not generate".into(),
            ));
        }
        let n = self.source.order() as u32;
        for x in 0..n {
            let fx = self.images[x as usize];
            for &g in &gens {
                if self.images[self.source.mul(x, g) as usize]
                    != self.target.mul(fx, self.images[g as usize])
                {
                    return Err(Error::NotAHomomorphism { x, y: g });
                }
            }
        }
        Ok(())
    }

    fn validate_shape(&self) -> Result<()> {
        if self.images.len() != self.source.order() {
            return Err(Error::InternalInconsistency(
                "image table length differs from source order".into(),
            ));
        }
        if self.images[0] != FiniteGroup::IDENTITY {
            return Err(Error::NotAHomomorphism { x: 0, y: 0 });
        }
        if self
            .images
            .iter()
            .any(|&y| y as usize >= self.target.order())
        {
            return Err(Error::InternalInconsistency(
                "image index out of range".into(),
            ));
        }
        Ok(())
    }

    /// Composition "apply self, then next".
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if !self.target.same_table(&next.source) {
            return Err(Error::Config(
                "composition requires matching middle group".into(),
            ));
        }
        let images = self.images.iter().map(|&y| next.apply(y)).collect();
        Ok(GroupHom {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        })
    }

    pub fn same_map(&self, other: &GroupHom) -> bool {
        self.images == other.images
    }

    pub fn is_identity_map(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        for &y in &self.images {
            if seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        let mut count = 0;
        for &y in &self.images {
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
            }
        }
        count == self.target.order()
    }

    /// For bijective maps, the inverse homomorphism.
    pub fn inverse_map(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::Config("map is not bijective".into()));
        }
        let mut images = vec![0u32; self.target.order()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Ok(GroupHom {
            source: self.target.clone(),
            target: self.source.clone(),
            images,
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<u32> = (0..self.source.order() as u32)
            .filter(|&x| self.apply(x) == FiniteGroup::IDENTITY)
            .collect();
        Subgroup::from_members(self.source.clone(), members)
    }

    pub fn image(&self) -> Subgroup {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.images {
            seen[y as usize] = true;
        }
        let members: Vec<u32> = (0..self.target.order() as u32)
            .filter(|&y| seen[y as usize])
            .collect();
        Subgroup::from_members(self.target.clone(), members)
    }
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom({} -> {})",
            self.source.label(),
            self.target.label()
        )
    }
}

/// Extend a map on a generating set to the unique homomorphism, by word
/// decomposition during a breadth-first closure. Errors if the elements do
/// not generate the source or if the extension is inconsistent; the result
/// is validated against the full multiplication table before returning.
pub fn hom_from_images(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    gen_images: &[(u32, u32)],
) -> Result<GroupHom> {
    let n = source.order();
    let mut images = vec![u32::MAX; n];
    images[0] = 0;
    let mut list = vec![0u32];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        i += 1;
        for &(g, k) in gen_images {
            assert!((g as usize) < n, "generator index out of range");
            assert!((k as usize) < target.order(), "image index out of range");
            let y = source.mul(x, g);
            let fy = target.mul(images[x as usize], k);
            if images[y as usize] == u32::MAX {
                images[y as usize] = fy;
                list.push(y);
            } else if images[y as usize] != fy {
                return Err(Error::NotAHomomorphism { x, y: g });
            }
        }
    }
    if list.len() != n {
        return Err(Error::NotGenerating {
            reached: list.len(),
            order: n,
        });
    }
    GroupHom::new_fully_checked(source.clone(), target.clone(), images)
}

/// Kernel and image of a homomorphism.
pub fn hom_kernel_image(f: &GroupHom) -> (Subgroup, Subgroup) {
    (f.kernel(), f.image())
}

/// All homomorphisms from `source` to `target`, by backtracking over images
/// of a small generating set with incremental closure checking. Candidate
/// images are restricted to elements whose order divides the generator's
/// order. Results are sorted by image table, so the order is deterministic.
pub fn enumerate_homs(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
) -> Vec<GroupHom> {
    let gens = source.greedy_generating_set();
    let mut out = Vec::new();
    let mut assignment: Vec<(u32, u32)> = Vec::new();
    backtrack_homs(source, target, &gens, &mut assignment, &mut out);
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

/// All surjective homomorphisms from `source` onto `target`.
pub fn enumerate_surjections(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
) -> Vec<GroupHom> {
    enumerate_homs(source, target)
        .into_iter()
        .filter(|h| h.is_surjective())
        .collect()
}

fn backtrack_homs(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    gens: &[u32],
    assignment: &mut Vec<(u32, u32)>,
    out: &mut Vec<GroupHom>,
) {
    if assignment.len() == gens.len() {
        // Empty generating set means the trivial source group.
        if gens.is_empty() {
            out.push(GroupHom::constant(source, target));
            return;
        }
        if let Some(images) = extend_partial(source, target, assignment) {
            if images.iter().all(|&x| x != u32::MAX) {
                out.push(GroupHom {
                    source: source.clone(),
                    target: target.clone(),
                    images,
                });
            }
        }
        return;
    }
    let g = gens[assignment.len()];
    let g_order = source.element_order(g);
    for k in 0..target.order() as u32 {
        if g_order % target.element_order(k) != 0 {
            continue;
        }
        assignment.push((g, k));
        if extend_partial(source, target, assignment).is_some() {
            backtrack_homs(source, target, gens, assignment, out);
        }
        assignment.pop();
    }
}

/// Propagate a partial generator assignment over the closure of the assigned
/// generators. Returns the partial image table, or `None` on conflict. Every
/// product `x * g` with `x` in the closure and `g` assigned is checked, so a
/// total conflict-free table is a genuine homomorphism.
fn extend_partial(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    assignment: &[(u32, u32)],
) -> Option<Vec<u32>> {
    let n = source.order();
    let mut images = vec![u32::MAX; n];
    images[0] = 0;
    let mut list = vec![0u32];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        i += 1;
        for &(g, k) in assignment {
            let y = source.mul(x, g);
            let fy = target.mul(images[x as usize], k);
            if images[y as usize] == u32::MAX {
                images[y as usize] = fy;
                list.push(y);
            } else if images[y as usize] != fy {
                return None;
            }
        }
    }
    Some(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn identity_hom_from_generator_images() {
        let s3 = symmetric(3);
        let f = hom_from_images(&s3, &s3, &[(1, 1), (2, 2)]).unwrap();
        assert!(f.is_identity_map());
        assert!(f.kernel().is_trivial());
        assert_eq!(f.image().order(), 6);
    }

    #[test]
    fn reduction_mod_two() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let f = hom_from_images(&c4, &c2, &[(1, 1)]).unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.images(), &[0, 1, 0, 1]);
    }

    #[test]
    fn sign_homomorphism_of_s3() {
        let s3 = symmetric(3);
        let c2 = cyclic(2);
        let sign = hom_from_images(&s3, &c2, &[(1, 1), (2, 1)]).unwrap();
        let (ker, img) = hom_kernel_image(&sign);
        assert_eq!(ker.members(), &[0, 3, 4]);
        assert_eq!(img.order(), 2);
        assert!(ker.is_normal());
    }

    #[test]
    fn constant_hom_has_full_kernel() {
        let s3 = symmetric(3);
        let c2 = cyclic(2);
        let f = GroupHom::constant(&s3, &c2);
        assert_eq!(f.kernel().order(), 6);
        assert_eq!(f.image().order(), 1);
    }

    #[test]
    fn non_generating_seed_is_rejected() {
        let s3 = symmetric(3);
        let err = hom_from_images(&s3, &cyclic(2), &[(3, 0)]);
        assert!(matches!(err, Err(Error::NotGenerating { reached: 3, .. })));
    }

    #[test]
    fn relation_violation_is_rejected() {
        // A transposition cannot map to an element of order 3.
        let s3 = symmetric(3);
        let c3 = cyclic(3);
        let err = hom_from_images(&s3, &c3, &[(1, 1), (2, 1)]);
        assert!(matches!(err, Err(Error::NotAHomomorphism { .. })));
    }

    #[test]
    fn composition_respects_order() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let f = hom_from_images(&c4, &c2, &[(1, 1)]).unwrap();
        let g = GroupHom::identity(&c2);
        assert!(f.then(&g).unwrap().same_map(&f));
    }

    #[test]
    fn enumerate_homs_c4_to_c2() {
        // Trivial map and reduction mod 2.
        let homs = enumerate_homs(&cyclic(4), &cyclic(2));
        assert_eq!(homs.len(), 2);
        assert_eq!(enumerate_surjections(&cyclic(4), &cyclic(2)).len(), 1);
    }

    #[test]
    fn enumerate_surjections_s3_to_c2() {
        // Only the sign map.
        let s = enumerate_surjections(&symmetric(3), &cyclic(2));
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kernel().order(), 3);
    }

    #[test]
    fn inner_automorphism_is_valid() {
        let s3 = symmetric(3);
        let f = GroupHom::inner(&s3, 1);
        f.validate_full().unwrap();
        assert!(f.is_bijective());
    }
}
