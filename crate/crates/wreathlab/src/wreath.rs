//! The permutational wreath construction `H^n x| G` and its canonical maps.
//!
//! Given finite groups `H`, `G` and a homomorphism `sigma: G -> S_n`, the
//! wreath pullback is the semidirect product of `H^n` by `G`, where `G`
//! permutes coordinates through `sigma`:
//!
//! ```text
//!   (h, g) * (k, x) = (h . (g k), g x)      with (g k)_i = k[sigma(g)(i)]
//! ```
//!
//! The coordinate action reads the source coordinate through `sigma(g)`
//! directly (no inverse). Together with the apply-left-factor-first product
//! on `S_n` fixed in [`crate::perm`], this is a left action; flipping either
//! convention alone breaks associativity, which is the classic off-by-inverse
//! trap in wreath code.
//!
//! Element numbering: an element `(h, g)` with coordinates `c_1..c_n` is the
//! index `c_1 + c_2 |H| + ... + c_n |H|^{n-1} + g |H|^n` - coordinates
//! little-endian, base element most significant.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{direct_power, FiniteGroup, Table};
use crate::hom::GroupHom;
use crate::perm;
use crate::subgroup::Subgroup;

/// Decoded wreath element: `n` coordinates in `H` plus a base element of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    pub coords: Vec<u32>,
    pub base: u32,
}

/// A wreath pullback with its ingredients and canonical validated maps.
pub struct WreathGroup {
    group: Arc<FiniteGroup>,
    h: Arc<FiniteGroup>,
    g: Arc<FiniteGroup>,
    n: usize,
    sigma: GroupHom,
    pi: GroupHom,
    embed_base: GroupHom,
    embed_top: GroupHom,
    /// One-line permutation of coordinates for each element of `G`.
    action: Vec<Vec<u32>>,
}

impl WreathGroup {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coefficient_group(&self) -> &Arc<FiniteGroup> {
        &self.h
    }

    pub fn base_group(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn copies(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &GroupHom {
        &self.sigma
    }

    /// Projection onto `G`.
    pub fn pi(&self) -> &GroupHom {
        &self.pi
    }

    /// Embedding of `H^n` (the direct power group, big-endian indexing) as
    /// the kernel of the projection.
    pub fn embed_base(&self) -> &GroupHom {
        &self.embed_base
    }

    /// The section `g -> (1, g)` of the projection.
    pub fn embed_top(&self) -> &GroupHom {
        &self.embed_top
    }

    pub fn coordinate_count(&self) -> usize {
        self.n
    }

    fn hn(&self) -> usize {
        self.h.order().pow(self.n as u32)
    }

    pub fn decode(&self, idx: u32) -> WreathElement {
        let ho = self.h.order();
        let mut rest = idx as usize;
        let mut coords = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            coords.push((rest % ho) as u32);
            rest /= ho;
        }
        WreathElement {
            coords,
            base: rest as u32,
        }
    }

    pub fn encode(&self, e: &WreathElement) -> u32 {
        assert_eq!(e.coords.len(), self.n);
        let ho = self.h.order();
        let mut idx = e.base as usize;
        for &c in e.coords.iter().rev() {
            debug_assert!((c as usize) < ho);
            idx = idx * ho + c as usize;
        }
        idx as u32
    }

    /// Index of the embedded coordinate tuple `(coords, identity)`.
    pub fn encode_base_tuple(&self, coords: &[u32]) -> u32 {
        self.encode(&WreathElement {
            coords: coords.to_vec(),
            base: 0,
        })
    }

    /// Whether an element lies in the embedded copy of `H^n`.
    pub fn in_base(&self, idx: u32) -> bool {
        (idx as usize) < self.hn()
    }

    /// The embedded copy of `H^n` as a subgroup (the kernel of `pi`).
    pub fn base_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.group.clone(), (0..self.hn() as u32).collect())
    }

    /// Preimage of a subgroup of `G` under the projection.
    pub fn preimage_of(&self, members_of_g: &[u32]) -> Subgroup {
        let hn = self.hn() as u32;
        let mut members = Vec::with_capacity(members_of_g.len() * self.hn());
        for &b in members_of_g {
            for c in 0..hn {
                members.push(b * hn + c);
            }
        }
        Subgroup::from_members(self.group.clone(), members)
    }
}

impl std::fmt::Debug for WreathGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "WreathGroup({} wr {}, n = {}, order {})",
            self.h.label(),
            self.g.label(),
            self.n,
            self.group.order()
        )
    }
}

/// Number of points `n` with `n! = order`, if any.
fn points_of_symmetric(order: usize) -> Option<usize> {
    let mut n = 1;
    loop {
        match perm::factorial(n) {
            Some(f) if f == order => return Some(n),
            Some(f) if f < order => n += 1,
            _ => return None,
        }
    }
}

/// Build `H^n x| G` for `sigma: G -> S_n`. The target of `sigma` must be the
/// canonical symmetric group on `n >= 2` points; `sigma` need not be
/// surjective (theorem checkers test surjectivity separately and flag it).
pub fn build_wreath_pullback(
    h: &Arc<FiniteGroup>,
    g: &Arc<FiniteGroup>,
    sigma: &GroupHom,
    max_order: usize,
) -> Result<WreathGroup> {
    if !sigma.source().same_table(g) {
        return Err(Error::Config("sigma must be defined on the base group".into()));
    }
    let n = points_of_symmetric(sigma.target().order())
        .filter(|&n| sigma.target().same_table(&crate::group::symmetric(n)))
        .ok_or_else(|| {
            Error::Config("sigma must land in a canonical symmetric group".into())
        })?;
    if n < 2 {
        return Err(Error::Config("wreath pullbacks need n >= 2".into()));
    }
    let ho = h.order();
    let mut hn: u128 = 1;
    for _ in 0..n {
        hn = hn.saturating_mul(ho as u128);
    }
    let order128 = hn.saturating_mul(g.order() as u128);
    if order128 > max_order as u128 {
        return Err(Error::OrderOverflow {
            order: order128,
            cap: max_order,
        });
    }
    let order = order128 as usize;
    let hn = hn as usize;

    // One-line coordinate permutation per base element.
    let action: Vec<Vec<u32>> = (0..g.order() as u32)
        .map(|b| perm::lex_unrank(n, sigma.apply(b) as usize))
        .collect();

    // Decoded coordinates of every index, reused across rows.
    let mut coords = vec![0u32; order * n];
    let mut bases = vec![0u32; order];
    for idx in 0..order {
        let mut rest = idx;
        for i in 0..n {
            coords[idx * n + i] = (rest % ho) as u32;
            rest /= ho;
        }
        bases[idx] = rest as u32;
    }

    let table = Table::build_by_rows(order, |x, row| {
        let cx = &coords[x * n..x * n + n];
        let bx = bases[x];
        let px = &action[bx as usize];
        let mut buf = vec![0u32; n];
        for (y, slot) in row.iter_mut().enumerate() {
            let cy = &coords[y * n..y * n + n];
            // (h . (g k), g x): coordinate i of g k is k[sigma(g)(i)].
            for i in 0..n {
                buf[i] = h.mul(cx[i], cy[px[i] as usize]);
            }
            let base = g.mul(bx, bases[y]);
            let mut idx = base as usize;
            for &c in buf.iter().rev() {
                idx = idx * ho + c as usize;
            }
            *slot = idx as u32;
        }
    });

    // (h, g)^{-1} = (g^{-1} . h^{-1}, g^{-1}).
    let mut inv = vec![0u32; order];
    for x in 0..order {
        let cx = &coords[x * n..x * n + n];
        let bx = bases[x];
        let bi = g.inv(bx);
        let pi_inv = &action[bi as usize];
        let mut idx = bi as usize;
        for i in (0..n).rev() {
            idx = idx * ho + h.inv(cx[pi_inv[i] as usize]) as usize;
        }
        inv[x] = idx as u32;
    }

    // Generators: every coordinate copy of the H generators plus the top
    // copy of the G generators. Coordinate copies in every slot keep this
    // correct even when sigma is far from surjective.
    let h_gens = h.generating_set();
    let g_gens = g.generating_set();
    let mut gens = Vec::new();
    for i in 0..n {
        for &hg in &h_gens {
            gens.push(hg as u32 * (ho as u32).pow(i as u32));
        }
    }
    for &gg in &g_gens {
        gens.push(gg * hn as u32);
    }

    let label = format!("{} wr {}", h.label(), g.label());
    let group = Arc::new(FiniteGroup::with_inverses(
        label, order, table, inv, Some(gens),
    )?);

    let pi = GroupHom::new(
        group.clone(),
        g.clone(),
        (0..order).map(|x| bases[x]).collect(),
    )?;
    let hpow = direct_power(h, n);
    // The direct power indexes coordinates big-endian; translate.
    let embed_base_images: Vec<u32> = (0..hpow.order())
        .map(|mut x| {
            let mut c = vec![0u32; n];
            for i in (0..n).rev() {
                c[i] = (x % ho) as u32;
                x /= ho;
            }
            let mut idx = 0usize;
            for &ci in c.iter().rev() {
                idx = idx * ho + ci as usize;
            }
            idx as u32
        })
        .collect();
    let embed_base = GroupHom::new(hpow, group.clone(), embed_base_images)?;
    let embed_top = GroupHom::new(
        g.clone(),
        group.clone(),
        (0..g.order() as u32).map(|b| b * hn as u32).collect(),
    )?;

    let w = WreathGroup {
        group,
        h: h.clone(),
        g: g.clone(),
        n,
        sigma: sigma.clone(),
        pi,
        embed_base,
        embed_top,
        action,
    };
    w.check_canonical_maps()?;
    Ok(w)
}

impl WreathGroup {
    /// The structural identities promised by the construction: `pi` splits
    /// through the top embedding, kills the base embedding, and has the base
    /// copy as its exact kernel, which meets the top copy trivially.
    fn check_canonical_maps(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::InternalInconsistency(msg.into()));
        if !self.embed_top.then(&self.pi)?.is_identity_map() {
            return fail("projection does not split the top embedding");
        }
        if self
            .embed_base
            .images()
            .iter()
            .any(|&w| self.pi.apply(w) != 0)
        {
            return fail("projection does not kill the base embedding");
        }
        let kernel = self.pi.kernel();
        let base = self.embed_base.image();
        if !kernel.same_members(&base) {
            return fail("kernel of the projection is not the embedded base");
        }
        let top = self.embed_top.image();
        let meet: Vec<u32> = top
            .members()
            .iter()
            .copied()
            .filter(|&x| base.contains(x))
            .collect();
        if meet != vec![0] {
            return fail("base and top embeddings meet beyond the identity");
        }
        Ok(())
    }

    /// Apply the coordinate action of a base element to a tuple.
    pub fn act(&self, b: u32, coords: &[u32]) -> Vec<u32> {
        let p = &self.action[b as usize];
        (0..self.n).map(|i| coords[p[i] as usize]).collect()
    }

    /// Whether `sigma` is onto the symmetric group.
    pub fn sigma_surjective(&self) -> bool {
        self.sigma.is_surjective()
    }
}

/// Fixed points of the coordinate action inside the embedded `H^n`. When
/// `sigma` is surjective this is exactly the diagonal `{(h, ..., h)}`, and
/// that equality is asserted.
pub fn diagonal_fixed_subgroup(w: &WreathGroup) -> Subgroup {
    let ho = w.h.order();
    let mut members = Vec::new();
    let mut coords = vec![0u32; w.n];
    'tuples: for t in 0..w.hn() as u32 {
        let mut rest = t as usize;
        for c in coords.iter_mut() {
            *c = (rest % ho) as u32;
            rest /= ho;
        }
        // The action of b depends only on sigma(b); checking every base
        // element is affordable at these orders and needs no dedup pass.
        for b in 0..w.g.order() as u32 {
            let p = &w.action[b as usize];
            for i in 0..w.n {
                if coords[p[i] as usize] != coords[i] {
                    continue 'tuples;
                }
            }
        }
        members.push(t);
    }
    let sub = Subgroup::from_members(w.group.clone(), members);
    if w.sigma_surjective() {
        let diagonal: Vec<u32> = (0..ho as u32)
            .map(|x| w.encode_base_tuple(&vec![x; w.n]))
            .collect();
        let mut sorted = diagonal;
        sorted.sort_unstable();
        assert_eq!(
            sub.members(),
            &sorted[..],
            "fixed points of a surjective action must be the diagonal"
        );
    }
    sub
}

/// The subgroup of `G x (H wr S_n)` of pairs whose two projections to `S_n`
/// agree, built by filtering pairs and re-indexing them as a group of order
/// `|H|^n * |G|`.
pub fn fiber_product(
    g: &Arc<FiniteGroup>,
    sigma: &GroupHom,
    h: &Arc<FiniteGroup>,
    n: usize,
    max_order: usize,
) -> Result<Arc<FiniteGroup>> {
    let (fiber, _, _) = fiber_product_with_members(g, sigma, h, n, max_order)?;
    Ok(fiber)
}

/// Fiber product plus the pair list `(g, w)` per member index and the inner
/// classical wreath group it was filtered from.
pub fn fiber_product_with_members(
    g: &Arc<FiniteGroup>,
    sigma: &GroupHom,
    h: &Arc<FiniteGroup>,
    n: usize,
    max_order: usize,
) -> Result<(Arc<FiniteGroup>, Vec<(u32, u32)>, WreathGroup)> {
    if !sigma.source().same_table(g) {
        return Err(Error::Config("sigma must be defined on the base group".into()));
    }
    let sn = crate::group::symmetric(n);
    if !sigma.target().same_table(&sn) {
        return Err(Error::Config(
            "sigma must land in the canonical symmetric group".into(),
        ));
    }
    let id_sn = GroupHom::identity(&sn);
    let classical = build_wreath_pullback(h, &sn, &id_sn, max_order)?;
    let hn = h.order().pow(n as u32);
    let order128 = hn as u128 * g.order() as u128;
    if order128 > max_order as u128 {
        return Err(Error::OrderOverflow {
            order: order128,
            cap: max_order,
        });
    }

    // Members: pairs (g, w) with sigma(g) = pi(w), ordered by (g, w); the
    // identity pair (0, 0) lands at index 0.
    let mut members: Vec<(u32, u32)> = Vec::with_capacity(order128 as usize);
    let wr = classical.group();
    for b in 0..g.order() as u32 {
        let want = sigma.apply(b);
        for x in 0..wr.order() as u32 {
            if classical.pi().apply(x) == want {
                members.push((b, x));
            }
        }
    }
    let mut position = vec![u32::MAX; g.order() * wr.order()];
    for (i, &(b, x)) in members.iter().enumerate() {
        position[b as usize * wr.order() + x as usize] = i as u32;
    }
    let order = members.len();
    let table = Table::build_by_rows(order, |i, row| {
        let (ba, xa) = members[i];
        for (j, slot) in row.iter_mut().enumerate() {
            let (bb, xb) = members[j];
            let b = g.mul(ba, bb);
            let x = wr.mul(xa, xb);
            *slot = position[b as usize * wr.order() + x as usize];
        }
    });
    let mut gens = Vec::new();
    for &gg in &g.generating_set() {
        let x = classical.embed_top().apply(sigma.apply(gg));
        gens.push(position[gg as usize * wr.order() + x as usize]);
    }
    for &hx in classical.group().generating_set().iter() {
        if classical.in_base(hx) {
            gens.push(position[hx as usize]);
        }
    }
    let fiber = Arc::new(FiniteGroup::from_table(
        format!("fiber({}, {} wr S{})", g.label(), h.label(), n),
        order,
        table,
        Some(gens),
    )?);
    Ok((fiber, members, classical))
}

/// The map `(h, g) -> (g, (h, sigma(g)))` from a wreath pullback onto the
/// fiber product, validated as a homomorphism and asserted bijective.
pub fn pullback_isomorphism(w: &WreathGroup) -> Result<GroupHom> {
    let (fiber, members, classical) = fiber_product_with_members(
        &w.g,
        &w.sigma,
        &w.h,
        w.n,
        usize::MAX,
    )?;
    let mut position =
        vec![u32::MAX; w.g.order() * classical.group().order()];
    for (i, &(b, x)) in members.iter().enumerate() {
        position[b as usize * classical.group().order() + x as usize] = i as u32;
    }
    let images: Vec<u32> = (0..w.group.order() as u32)
        .map(|idx| {
            let e = w.decode(idx);
            let inner = classical.encode(&WreathElement {
                coords: e.coords.clone(),
                base: w.sigma.apply(e.base),
            });
            position[e.base as usize * classical.group().order() + inner as usize]
        })
        .collect();
    if images.iter().any(|&i| i == u32::MAX) {
        return Err(Error::InternalInconsistency(
            "pullback map hit a pair outside the fiber".into(),
        ));
    }
    let phi = GroupHom::new_fully_checked(w.group.clone(), fiber, images)
        .map_err(|e| Error::InternalInconsistency(format!("pullback map: {e}")))?;
    if !phi.is_bijective() {
        return Err(Error::InternalInconsistency(
            "pullback map is not bijective".into(),
        ));
    }
    Ok(phi)
}

/// Induced map `(h, g) -> (h, f(g))` for `f: G1 -> G2` compatible with the
/// two sigmas. An isomorphism `f` induces an isomorphism of wreath groups.
pub fn base_change_map(w1: &WreathGroup, w2: &WreathGroup, f: &GroupHom) -> Result<GroupHom> {
    if !w1.h.same_table(&w2.h) || w1.n != w2.n {
        return Err(Error::MismatchedBase(
            "coefficient groups or coordinate counts differ".into(),
        ));
    }
    if !f.source().same_table(&w1.g) || !f.target().same_table(&w2.g) {
        return Err(Error::Config("map does not connect the two base groups".into()));
    }
    for b in 0..w1.g.order() as u32 {
        if w2.sigma.apply(f.apply(b)) != w1.sigma.apply(b) {
            return Err(Error::TriangleViolation { witness: b });
        }
    }
    let hn = w1.hn() as u32;
    let images: Vec<u32> = (0..w1.group.order() as u32)
        .map(|idx| {
            let coords_part = idx % hn;
            let base = idx / hn;
            f.apply(base) * hn + coords_part
        })
        .collect();
    GroupHom::new(w1.group.clone(), w2.group.clone(), images)
}

/// Induced map `(h_1..h_n, g) -> (phi(h_1)..phi(h_n), g)` for a coefficient
/// homomorphism `phi: H1 -> H2` between pullbacks over the same `(G, sigma)`.
pub fn coefficient_map(w1: &WreathGroup, w2: &WreathGroup, phi: &GroupHom) -> Result<GroupHom> {
    if !w1.g.same_table(&w2.g) || w1.n != w2.n || !w1.sigma.same_map(&w2.sigma) {
        return Err(Error::MismatchedBase(
            "base groups or sigmas differ".into(),
        ));
    }
    if !phi.source().same_table(&w1.h) || !phi.target().same_table(&w2.h) {
        return Err(Error::Config(
            "map does not connect the two coefficient groups".into(),
        ));
    }
    let images: Vec<u32> = (0..w1.group.order() as u32)
        .map(|idx| {
            let e = w1.decode(idx);
            let coords: Vec<u32> = e.coords.iter().map(|&c| phi.apply(c)).collect();
            w2.encode(&WreathElement {
                coords,
                base: e.base,
            })
        })
        .collect();
    GroupHom::new(w1.group.clone(), w2.group.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, symmetric, DEFAULT_MAX_ORDER};
    use crate::hom::hom_from_images;

    pub(crate) fn identity_wreath(
        h: &Arc<FiniteGroup>,
        n: usize,
    ) -> WreathGroup {
        let sn = symmetric(n);
        let id = GroupHom::identity(&sn);
        build_wreath_pullback(h, &sn, &id, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn order_of_c2_wr_s3_is_48() {
        let w = identity_wreath(&cyclic(2), 3);
        assert_eq!(w.group().order(), 48);
        assert_eq!(w.copies(), 3);
    }

    #[test]
    fn trivial_coefficients_reproduce_the_base_table() {
        let s3 = symmetric(3);
        let id = GroupHom::identity(&s3);
        let w = build_wreath_pullback(&cyclic(1), &s3, &id, DEFAULT_MAX_ORDER).unwrap();
        assert!(w.group().same_table(&s3));
    }

    #[test]
    fn hand_evaluated_product_in_c2_wr_s2() {
        let w = identity_wreath(&cyclic(2), 2);
        // ((1,0), s) has coords index 1 and base 1 -> element 1*4 + 1 = 5.
        // Its square is ((1,0) + (0,1), e) = ((1,1), e) -> element 3.
        assert_eq!(w.group().mul(5, 5), 3);
        let e = w.decode(5);
        assert_eq!(e.coords, vec![1, 0]);
        assert_eq!(e.base, 1);
    }

    #[test]
    fn multiplication_matches_componentwise_formula() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let h = symmetric(3);
        let w = identity_wreath(&h, 3);
        let order = w.group().order() as u32;
        for _ in 0..2000 {
            let x = rng.gen_range(0..order);
            let y = rng.gen_range(0..order);
            let ex = w.decode(x);
            let ey = w.decode(y);
            let moved = w.act(ex.base, &ey.coords);
            let coords: Vec<u32> = (0..3)
                .map(|i| h.mul(ex.coords[i], moved[i]))
                .collect();
            let expect = w.encode(&WreathElement {
                coords,
                base: w.base_group().mul(ex.base, ey.base),
            });
            assert_eq!(w.group().mul(x, y), expect);
        }
    }

    #[test]
    fn diagonal_fixed_points_for_c3_wr_s2() {
        let w = identity_wreath(&cyclic(3), 2);
        let fixed = diagonal_fixed_subgroup(&w);
        assert_eq!(fixed.members(), &[0, 4, 8]);
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let c2 = cyclic(2);
        let s2 = symmetric(2);
        let sigma = GroupHom::constant(&c2, &s2);
        let w = build_wreath_pullback(&c2, &c2, &sigma, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(diagonal_fixed_subgroup(&w).order(), 4);
    }

    #[test]
    fn diagonal_for_c2_wr_s3() {
        let w = identity_wreath(&cyclic(2), 3);
        assert_eq!(diagonal_fixed_subgroup(&w).order(), 2);
    }

    #[test]
    fn fiber_orders_match_the_count() {
        let s3 = symmetric(3);
        let id = GroupHom::identity(&s3);
        let f = fiber_product(&s3, &id, &cyclic(2), 3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(f.order(), 48);
        let f3 = fiber_product(&s3, &id, &cyclic(3), 3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(f3.order(), 162);
    }

    #[test]
    fn fiber_over_an_isomorphism_to_s2() {
        let c2 = cyclic(2);
        let s2 = symmetric(2);
        let sigma = hom_from_images(&c2, &s2, &[(1, 1)]).unwrap();
        let f = fiber_product(&c2, &sigma, &cyclic(2), 2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(f.order(), 8);
    }

    #[test]
    fn pullback_map_is_a_bijective_homomorphism() {
        let w = identity_wreath(&cyclic(2), 3);
        let phi = pullback_isomorphism(&w).unwrap();
        assert!(phi.is_bijective());
        assert_eq!(phi.target().order(), 48);
    }

    #[test]
    fn pullback_map_with_trivial_coefficients_is_the_sigma_graph() {
        let s3 = symmetric(3);
        let id = GroupHom::identity(&s3);
        let w = build_wreath_pullback(&cyclic(1), &s3, &id, DEFAULT_MAX_ORDER).unwrap();
        let phi = pullback_isomorphism(&w).unwrap();
        assert!(phi.is_bijective());
        assert_eq!(phi.target().order(), 6);
    }

    #[test]
    fn base_change_identity_is_identity() {
        let w = identity_wreath(&cyclic(2), 3);
        let f = GroupHom::identity(w.base_group());
        let m = base_change_map(&w, &w, &f).unwrap();
        assert!(m.is_identity_map());
    }

    #[test]
    fn base_change_along_a_projection_has_kernel_c2() {
        let s3 = symmetric(3);
        let g1 = direct_product(&cyclic(2), &s3);
        let proj_images: Vec<u32> = (0..12).map(|x| x % 6).collect();
        let f = GroupHom::new(g1.clone(), s3.clone(), proj_images).unwrap();
        let sigma1 = f.then(&GroupHom::identity(&s3)).unwrap();
        let w1 =
            build_wreath_pullback(&cyclic(2), &g1, &sigma1, DEFAULT_MAX_ORDER).unwrap();
        let w2 = identity_wreath(&cyclic(2), 3);
        let m = base_change_map(&w1, &w2, &f).unwrap();
        assert!(m.is_surjective());
        assert_eq!(m.kernel().order(), 2);
    }

    #[test]
    fn base_change_rejects_incompatible_maps() {
        let w = identity_wreath(&cyclic(2), 3);
        // Conjugation by a transposition does not commute with the identity
        // sigma, so the triangle condition fails.
        let f = GroupHom::inner(w.base_group(), 1);
        assert!(matches!(
            base_change_map(&w, &w, &f),
            Err(Error::TriangleViolation { .. })
        ));
    }

    #[test]
    fn coefficient_map_reduction_is_surjective() {
        let w1 = identity_wreath(&cyclic(4), 2);
        let w2 = identity_wreath(&cyclic(2), 2);
        let phi = hom_from_images(&cyclic(4), &cyclic(2), &[(1, 1)]).unwrap();
        let m = coefficient_map(&w1, &w2, &phi).unwrap();
        assert_eq!(w1.group().order(), 32);
        assert_eq!(m.image().order(), 8);
        assert!(m.is_surjective());
    }

    #[test]
    fn coefficient_map_identity_is_identity() {
        let w = identity_wreath(&cyclic(3), 2);
        let phi = GroupHom::identity(&cyclic(3));
        assert!(coefficient_map(&w, &w, &phi).unwrap().is_identity_map());
    }

    #[test]
    fn trivial_coefficient_map_collapses_to_the_top_copy() {
        let w1 = identity_wreath(&cyclic(2), 2);
        let w2 = identity_wreath(&cyclic(1), 2);
        let phi = GroupHom::constant(&cyclic(2), &cyclic(1));
        let m = coefficient_map(&w1, &w2, &phi).unwrap();
        assert_eq!(m.image().order(), w1.base_group().order());
    }

    #[test]
    fn exact_sequence_kernel_is_the_base() {
        for (h, n) in [(cyclic(2), 3), (cyclic(3), 2)] {
            let w = identity_wreath(&h, n);
            assert!(w.pi().kernel().same_members(&w.embed_base().image()));
        }
    }
}
