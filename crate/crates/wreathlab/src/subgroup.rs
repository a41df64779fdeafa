//! Subgroups, closures, centers, conjugacy classes, commutator subgroups,
//! and quotient groups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Table};
use crate::hom::GroupHom;

/// A subgroup of a parent group, stored as a sorted set of element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<u32>,
}

impl Subgroup {
    /// Wrap a member set without re-closing it. Callers must pass a subgroup;
    /// the cheap invariants (identity present, indices in range) are checked.
    pub fn from_members(parent: Arc<FiniteGroup>, mut members: Vec<u32>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        assert!(
            members.first() == Some(&FiniteGroup::IDENTITY),
            "a subgroup contains the identity"
        );
        assert!(
            members.last().map_or(false, |&m| (m as usize) < parent.order()),
            "member index out of range"
        );
        Subgroup { parent, members }
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Subgroup {
        Subgroup {
            parent,
            members: vec![0],
        }
    }

    pub fn whole(parent: Arc<FiniteGroup>) -> Subgroup {
        let members = (0..parent.order() as u32).collect();
        Subgroup { parent, members }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Membership bitmap over the parent's element set.
    pub fn bitmap(&self) -> Vec<bool> {
        let mut b = vec![false; self.parent.order()];
        for &m in &self.members {
            b[m as usize] = true;
        }
        b
    }

    /// Set equality of members (parents must be the same table).
    pub fn same_members(&self, other: &Subgroup) -> bool {
        self.members == other.members
    }

    /// Closed under multiplication and inverses, and Lagrange divisibility.
    pub fn check_closed(&self) -> Result<()> {
        let bm = self.bitmap();
        for &a in &self.members {
            if !bm[self.parent.inv(a) as usize] {
                return Err(Error::InternalInconsistency(format!(
                    "subgroup not closed under inverse at {a}"
                )));
            }
            for &b in &self.members {
                if !bm[self.parent.mul(a, b) as usize] {
                    return Err(Error::InternalInconsistency(format!(
                        "subgroup not closed under product at ({a}, {b})"
                    )));
                }
            }
        }
        if self.parent.order() % self.members.len() != 0 {
            return Err(Error::InternalInconsistency(
                "subgroup order does not divide group order".into(),
            ));
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// A pair `(g, m)` with `g m g^{-1}` outside the subgroup, if one exists.
    /// Conjugation is tested over a generating set of the parent, which
    /// suffices: elements preserving the subgroup by conjugation form a
    /// subgroup themselves.
    pub fn normality_witness(&self) -> Option<(u32, u32)> {
        let bm = self.bitmap();
        for g in self.parent.generating_set() {
            for &m in &self.members {
                if !bm[self.parent.conj(g, m) as usize] {
                    return Some((g, m));
                }
            }
        }
        None
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.members.len(),
            self.parent.label()
        )
    }
}

/// Member list of the subgroup generated by `seeds`, via breadth-first
/// closure. In a finite group the sub-semigroup generated by a set is
/// already a subgroup, so right-multiplication by the seeds from the
/// identity reaches every member (inverses come for free from finite
/// element orders).
pub fn closure_members(g: &FiniteGroup, seeds: &[u32]) -> Vec<u32> {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut list: Vec<u32> = vec![0];
    let mut gens: Vec<u32> = seeds.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        i += 1;
        for &s in &gens {
            let y = g.mul(x, s);
            if !member[y as usize] {
                member[y as usize] = true;
                list.push(y);
            }
        }
    }
    list.sort_unstable();
    list
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_closure(g: &Arc<FiniteGroup>, seeds: &[u32]) -> Subgroup {
    assert!(
        seeds.iter().all(|&s| (s as usize) < g.order()),
        "seed index out of range"
    );
    Subgroup {
        parent: g.clone(),
        members: closure_members(g, seeds),
    }
}

/// Smallest normal subgroup containing `seeds`: the subgroup generated by
/// all conjugates of the seeds.
pub fn normal_closure(g: &Arc<FiniteGroup>, seeds: &[u32]) -> Subgroup {
    assert!(
        seeds.iter().all(|&s| (s as usize) < g.order()),
        "seed index out of range"
    );
    let mut conj = vec![false; g.order()];
    let mut conj_list: Vec<u32> = Vec::new();
    for &s in seeds {
        for x in 0..g.order() as u32 {
            let c = g.conj(x, s);
            if !conj[c as usize] {
                conj[c as usize] = true;
                conj_list.push(c);
            }
        }
    }
    subgroup_closure(g, &conj_list)
}

/// Brute-force center: all elements commuting with everything.
pub fn center(g: &Arc<FiniteGroup>) -> Subgroup {
    let mut members = Vec::new();
    'outer: for x in 0..g.order() as u32 {
        for y in 0..g.order() as u32 {
            if g.mul(x, y) != g.mul(y, x) {
                continue 'outer;
            }
        }
        members.push(x);
    }
    Subgroup {
        parent: g.clone(),
        members,
    }
}

/// Conjugacy classes as a partition; blocks are sorted internally and listed
/// by least member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n as u32 {
        if seen[x as usize] {
            continue;
        }
        let mut block = Vec::new();
        let mut in_block = vec![false; n];
        for z in 0..n as u32 {
            let c = g.conj(z, x);
            if !in_block[c as usize] {
                in_block[c as usize] = true;
                block.push(c);
            }
        }
        block.sort_unstable();
        for &m in &block {
            seen[m as usize] = true;
        }
        classes.push(block);
    }
    classes
}

/// Class index of every element, aligned with [`conjugacy_classes`].
pub fn class_ids(classes: &[Vec<u32>], order: usize) -> Vec<u32> {
    let mut ids = vec![0u32; order];
    for (i, c) in classes.iter().enumerate() {
        for &m in c {
            ids[m as usize] = i as u32;
        }
    }
    ids
}

/// The commutator subgroup: the normal closure of all commutators. For
/// groups with a known generating set only generator commutators are seeded;
/// their normal closure is the same subgroup, since a quotient is abelian
/// exactly when the generator images commute.
pub fn commutator_subgroup(g: &Arc<FiniteGroup>) -> Subgroup {
    let mut seeds: Vec<u32> = Vec::new();
    let mut seen = vec![false; g.order()];
    if g.order() <= 512 && g.generators().is_none() {
        for x in 0..g.order() as u32 {
            for y in 0..g.order() as u32 {
                let c = g.commutator(x, y);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    seeds.push(c);
                }
            }
        }
    } else {
        let gens = g.generating_set();
        for &x in &gens {
            for &y in &gens {
                let c = g.commutator(x, y);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    seeds.push(c);
                }
            }
        }
    }
    normal_closure(g, &seeds)
}

/// Quotient group by a normal subgroup, with cosets labeled by their least
/// member (the coset of the identity is index 0). Returns the quotient and
/// the canonical projection.
pub fn quotient(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
) -> Result<(Arc<FiniteGroup>, GroupHom)> {
    assert!(
        std::ptr::eq(&**n.parent(), &**g) || n.parent().same_table(g),
        "subgroup belongs to a different group"
    );
    if let Some((conjugator, member)) = n.normality_witness() {
        return Err(Error::NotNormal { conjugator, member });
    }
    let order = g.order();
    let q_order = order / n.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<u32> = Vec::with_capacity(q_order);
    for x in 0..order as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &m in n.members() {
            coset_of[g.mul(x, m) as usize] = id;
        }
    }
    debug_assert_eq!(reps.len(), q_order);
    let table = Table::build_by_rows(q_order, |a, row| {
        let ra = reps[a];
        for (b, slot) in row.iter_mut().enumerate() {
            *slot = coset_of[g.mul(ra, reps[b]) as usize];
        }
    });
    let gens = g.generators().map(|gs| {
        let mut qs: Vec<u32> = gs.iter().map(|&x| coset_of[x as usize]).collect();
        qs.sort_unstable();
        qs.dedup();
        qs.retain(|&x| x != 0);
        qs
    });
    let q = Arc::new(FiniteGroup::from_table(
        format!("{}/N{}", g.label(), n.order()),
        q_order,
        table,
        gens,
    )?);
    let proj = GroupHom::new(g.clone(), q.clone(), coset_of)?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, symmetric};

    #[test]
    fn transposition_generates_order_two() {
        let s3 = symmetric(3);
        // rank 2 is the one-line vector 102, i.e. the transposition (0 1).
        let h = subgroup_closure(&s3, &[2]);
        assert_eq!(h.order(), 2);
        h.check_closed().unwrap();
    }

    #[test]
    fn two_transpositions_generate_s3() {
        let s3 = symmetric(3);
        let h = subgroup_closure(&s3, &[1, 2]);
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn empty_seeds_give_trivial_subgroup() {
        let s3 = symmetric(3);
        let h = subgroup_closure(&s3, &[]);
        assert_eq!(h.members(), &[0]);
    }

    #[test]
    fn normal_closure_of_transposition_is_s3() {
        let s3 = symmetric(3);
        assert_eq!(normal_closure(&s3, &[2]).order(), 6);
    }

    #[test]
    fn normal_closure_of_three_cycle_is_a3() {
        let s3 = symmetric(3);
        let a3 = normal_closure(&s3, &[3]);
        assert_eq!(a3.order(), 3);
        assert_eq!(a3.members(), &[0, 3, 4]);
        assert!(a3.is_normal());
    }

    #[test]
    fn normal_closure_in_abelian_group_is_cyclic() {
        let c12 = cyclic(12);
        for g in 0..12 {
            let ncl = normal_closure(&c12, &[g]);
            let cyc = subgroup_closure(&c12, &[g]);
            assert!(ncl.same_members(&cyc));
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let s4 = symmetric(4);
        let a = subgroup_closure(&s4, &[1]);
        let again = subgroup_closure(&s4, a.members());
        assert!(a.same_members(&again));
        let b = subgroup_closure(&s4, &[1, 6]);
        assert!(a.members().iter().all(|m| b.contains(*m)));
        // Normal closure dominates plain closure.
        let nc = normal_closure(&s4, &[1]);
        assert!(a.members().iter().all(|m| nc.contains(*m)));
    }

    #[test]
    fn center_of_s3_is_trivial() {
        assert_eq!(center(&symmetric(3)).order(), 1);
    }

    #[test]
    fn center_of_cyclic_is_everything() {
        assert_eq!(center(&cyclic(4)).order(), 4);
    }

    #[test]
    fn center_of_c2_times_s3_is_the_c2_factor() {
        let g = direct_product(&cyclic(2), &symmetric(3));
        let z = center(&g);
        assert_eq!(z.order(), 2);
        assert_eq!(z.members(), &[0, 6]);
    }

    #[test]
    fn class_sizes_of_s3() {
        let classes = conjugacy_classes(&symmetric(3));
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(classes[0], vec![0]);
    }

    #[test]
    fn cyclic_groups_have_singleton_classes() {
        let classes = conjugacy_classes(&cyclic(5));
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn s4_has_five_classes() {
        assert_eq!(conjugacy_classes(&symmetric(4)).len(), 5);
    }

    #[test]
    fn commutator_subgroup_of_s3_is_a3() {
        let s3 = symmetric(3);
        let d = commutator_subgroup(&s3);
        assert_eq!(d.members(), &[0, 3, 4]);
    }

    #[test]
    fn commutator_subgroup_of_abelian_is_trivial() {
        let g = direct_product(&cyclic(4), &cyclic(6));
        assert!(commutator_subgroup(&g).is_trivial());
    }

    #[test]
    fn commutator_subgroup_of_s4_is_a4() {
        let s4 = symmetric(4);
        let d = commutator_subgroup(&s4);
        assert_eq!(d.order(), 12);
        assert!(d.is_normal());
    }

    #[test]
    fn quotient_s3_by_a3_has_order_two() {
        let s3 = symmetric(3);
        let a3 = normal_closure(&s3, &[3]);
        let (q, proj) = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj.kernel().members(), a3.members());
        assert!(proj.is_surjective());
    }

    #[test]
    fn quotient_by_trivial_subgroup_is_the_same_table() {
        let g = direct_product(&cyclic(2), &symmetric(3));
        let (q, _) = quotient(&g, &Subgroup::trivial(g.clone())).unwrap();
        assert!(q.same_table(&g));
    }

    #[test]
    fn quotient_rejects_non_normal_subgroups() {
        let s3 = symmetric(3);
        let h = subgroup_closure(&s3, &[2]);
        assert!(matches!(quotient(&s3, &h), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn lagrange_counts_hold() {
        let s4 = symmetric(4);
        let n = commutator_subgroup(&s4);
        let (q, _) = quotient(&s4, &n).unwrap();
        assert_eq!(q.order() * n.order(), s4.order());
    }
}
