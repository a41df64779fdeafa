//! Finite groups as explicit multiplication tables.
//!
//! Every group here is a set of element indices `0..order` with the identity
//! pinned at index 0, a flat row-major multiplication table, and an inverse
//! table. Atomic constructors (cyclic, symmetric, direct products and powers)
//! fix deterministic element numberings so that indices are reproducible
//! across runs:
//!
//! * `cyclic(m)`: element `i` is the residue `i`;
//! * `symmetric(n)`: element `i` is the `i`-th permutation of `{0..n-1}` in
//!   lexicographic one-line order (identity first), and the product `x*y`
//!   means "apply `x` first, then `y`" (see [`crate::perm`]);
//! * products and powers: mixed-radix index with the leftmost factor most
//!   significant.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm;

/// Default cap on constructed group orders. The multiplication table is the
/// square of this, so the cap is a memory bound more than anything else.
pub const DEFAULT_MAX_ORDER: usize = 100_000;

/// Flat row-major multiplication table. Orders that fit in 16 bits are stored
/// as `u16` to halve the footprint of large tables; the public API always
/// speaks `u32`.
#[derive(Clone)]
pub enum Table {
    U16(Vec<u16>),
    U32(Vec<u32>),
}

impl Table {
    /// Fill a table row by row. `fill(x, row)` must write the products
    /// `x * y` for `y = 0..order` into `row`.
    pub fn build_by_rows(order: usize, mut fill: impl FnMut(usize, &mut [u32])) -> Table {
        let mut row = vec![0u32; order];
        if order <= (u16::MAX as usize) + 1 {
            let mut data = vec![0u16; order * order];
            for x in 0..order {
                fill(x, &mut row);
                let dst = &mut data[x * order..(x + 1) * order];
                for (d, &v) in dst.iter_mut().zip(row.iter()) {
                    *d = v as u16;
                }
            }
            Table::U16(data)
        } else {
            let mut data = vec![0u32; order * order];
            for x in 0..order {
                fill(x, &mut row);
                data[x * order..(x + 1) * order].copy_from_slice(&row);
            }
            Table::U32(data)
        }
    }

    pub fn from_flat(order: usize, flat: Vec<u32>) -> Table {
        assert_eq!(flat.len(), order * order);
        Table::build_by_rows(order, |x, row| {
            row.copy_from_slice(&flat[x * order..(x + 1) * order])
        })
    }

    #[inline(always)]
    fn get(&self, idx: usize) -> u32 {
        match self {
            Table::U16(v) => v[idx] as u32,
            Table::U32(v) => v[idx],
        }
    }

    fn len(&self) -> usize {
        match self {
            Table::U16(v) => v.len(),
            Table::U32(v) => v.len(),
        }
    }
}

/// A finite group on element indices `0..order`, identity at 0.
pub struct FiniteGroup {
    order: usize,
    table: Table,
    inv: Vec<u32>,
    label: String,
    generators: Option<Vec<u32>>,
}

impl FiniteGroup {
    pub const IDENTITY: u32 = 0;

    /// Build from a multiplication table, computing inverses by row scan and
    /// validating the group axioms (see [`FiniteGroup::validate`]).
    pub fn from_table(
        label: impl Into<String>,
        order: usize,
        table: Table,
        generators: Option<Vec<u32>>,
    ) -> Result<FiniteGroup> {
        assert!(order > 0, "groups are non-empty");
        assert_eq!(table.len(), order * order);
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            for y in 0..order {
                if table.get(x * order + y) == 0 {
                    inv[x] = y as u32;
                    break;
                }
            }
            if inv[x] == u32::MAX {
                return Err(Error::InternalInconsistency(format!(
                    "element {x} has no inverse"
                )));
            }
        }
        Self::with_inverses(label, order, table, inv, generators)
    }

    /// Like [`FiniteGroup::from_table`] but with a precomputed inverse table,
    /// for constructions where the inverse has a direct formula.
    pub fn with_inverses(
        label: impl Into<String>,
        order: usize,
        table: Table,
        inv: Vec<u32>,
        generators: Option<Vec<u32>>,
    ) -> Result<FiniteGroup> {
        let g = FiniteGroup {
            order,
            table,
            inv,
            label: label.into(),
            generators,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline(always)]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table.get(x as usize * self.order + y as usize)
    }

    #[inline(always)]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    /// Conjugate: `g x g^{-1}`.
    #[inline(always)]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Commutator `[x, y] = x y x^{-1} y^{-1}`.
    #[inline(always)]
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> Option<&[u32]> {
        self.generators.as_deref()
    }

    /// Row-major flat copy of the multiplication table.
    pub fn table_flat(&self) -> Vec<u32> {
        (0..self.order * self.order)
            .map(|i| self.table.get(i))
            .collect()
    }

    pub fn power(&self, x: u32, k: usize) -> u32 {
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != Self::IDENTITY {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        for x in 1..self.order as u32 {
            for y in (x + 1)..self.order as u32 {
                if self.mul(x, y) != self.mul(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Structural equality: same order and identical multiplication table.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.order != other.order {
            return false;
        }
        (0..self.order * self.order).all(|i| self.table.get(i) == other.table.get(i))
    }

    /// Verify the group axioms: identity row/column, two-sided inverses,
    /// every row and column a permutation, associativity. Exhaustive for
    /// order <= 64; for larger groups the Latin-square check samples 512
    /// rows and columns and associativity is checked on 10 000 random
    /// triples (seeded, hence reproducible).
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n as u32 {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InternalInconsistency(format!(
                    "identity law fails at {x}"
                )));
            }
            let ix = self.inv(x);
            if ix as usize >= n || self.mul(x, ix) != 0 || self.mul(ix, x) != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "inverse law fails at {x}"
                )));
            }
        }
        if let Some(gens) = &self.generators {
            if gens.iter().any(|&g| g as usize >= n) {
                return Err(Error::InternalInconsistency(
                    "generator index out of range".into(),
                ));
            }
        }
        if n <= 64 {
            for x in 0..n as u32 {
                self.check_row_latin(x)?;
                self.check_col_latin(x)?;
            }
            for x in 0..n as u32 {
                for y in 0..n as u32 {
                    for z in 0..n as u32 {
                        self.check_assoc(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ab1e);
            let samples = 512.min(n);
            for _ in 0..samples {
                self.check_row_latin(rng.gen_range(0..n) as u32)?;
                self.check_col_latin(rng.gen_range(0..n) as u32)?;
            }
            for _ in 0..10_000 {
                let x = rng.gen_range(0..n) as u32;
                let y = rng.gen_range(0..n) as u32;
                let z = rng.gen_range(0..n) as u32;
                self.check_assoc(x, y, z)?;
            }
        }
        Ok(())
    }

    fn check_row_latin(&self, x: u32) -> Result<()> {
        let n = self.order;
        let mut seen = vec![false; n];
        for y in 0..n as u32 {
            let p = self.mul(x, y) as usize;
            if p >= n || seen[p] {
                return Err(Error::InternalInconsistency(format!(
                    "row {x} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(())
    }

    fn check_col_latin(&self, y: u32) -> Result<()> {
        let n = self.order;
        let mut seen = vec![false; n];
        for x in 0..n as u32 {
            let p = self.mul(x, y) as usize;
            if p >= n || seen[p] {
                return Err(Error::InternalInconsistency(format!(
                    "column {y} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(())
    }

    fn check_assoc(&self, x: u32, y: u32, z: u32) -> Result<()> {
        if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
            return Err(Error::InternalInconsistency(format!(
                "associativity fails on ({x}, {y}, {z})"
            )));
        }
        Ok(())
    }

    /// A generating set: the recorded one if present, otherwise a greedy one.
    ///
    /// The greedy search repeatedly adds the element whose closure gain is
    /// largest (ties to the least index), which tends to produce the short
    /// generating tuples wanted by backtracking searches.
    pub fn generating_set(&self) -> Vec<u32> {
        if let Some(g) = &self.generators {
            return g.clone();
        }
        self.greedy_generating_set()
    }

    pub fn greedy_generating_set(&self) -> Vec<u32> {
        let n = self.order;
        let mut gens: Vec<u32> = Vec::new();
        let mut closure = vec![false; n];
        closure[0] = true;
        let mut closed = 1usize;
        while closed < n {
            // Pick the candidate with the largest closure gain.
            let mut best: Option<(usize, u32)> = None;
            for cand in 1..n as u32 {
                if closure[cand as usize] {
                    continue;
                }
                gens.push(cand);
                let size = self.closure_size(&gens);
                gens.pop();
                if best.map_or(true, |(b, _)| size > b) {
                    best = Some((size, cand));
                    if size == n {
                        break;
                    }
                }
            }
            let (_, chosen) = best.expect("proper subgroup closure misses some element");
            gens.push(chosen);
            let members = crate::subgroup::closure_members(self, &gens);
            closed = members.len();
            closure = vec![false; n];
            for m in members {
                closure[m as usize] = true;
            }
        }
        gens
    }

    fn closure_size(&self, seeds: &[u32]) -> usize {
        crate::subgroup::closure_members(self, seeds).len()
    }

    /// Transport of structure along a relabeling `rho` with `rho[0] = 0`:
    /// the result has `mul'(rho x, rho y) = rho(mul(x, y))`, i.e. it is the
    /// same abstract group with permuted element indices.
    pub fn transport(&self, rho: &[u32]) -> Result<FiniteGroup> {
        if rho.len() != self.order || !perm::is_permutation(rho) || rho[0] != 0 {
            return Err(Error::Config(
                "relabeling must be a permutation of the element set fixing 0".into(),
            ));
        }
        let inv_rho = perm::invert(rho);
        let table = Table::build_by_rows(self.order, |x, row| {
            let ox = inv_rho[x];
            for (y, slot) in row.iter_mut().enumerate() {
                let oy = inv_rho[y];
                *slot = rho[self.mul(ox, oy) as usize];
            }
        });
        let gens = self
            .generators
            .clone()
            .map(|gs| gs.into_iter().map(|g| rho[g as usize]).collect());
        FiniteGroup::from_table(format!("{}~", self.label), self.order, table, gens)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

fn check_cap(order: u128, cap: usize) -> Result<usize> {
    if order == 0 {
        return Err(Error::Config("group order must be positive".into()));
    }
    if order > cap as u128 {
        return Err(Error::OrderOverflow { order, cap });
    }
    Ok(order as usize)
}

/// Cyclic group of order `m`; element `i` is the residue `i`.
pub fn cyclic(m: usize) -> Arc<FiniteGroup> {
    try_cyclic(m, DEFAULT_MAX_ORDER).expect("cyclic group within default cap")
}

pub fn try_cyclic(m: usize, cap: usize) -> Result<Arc<FiniteGroup>> {
    let m = check_cap(m as u128, cap)?;
    let table = Table::build_by_rows(m, |x, row| {
        for (y, slot) in row.iter_mut().enumerate() {
            *slot = ((x + y) % m) as u32;
        }
    });
    let inv = (0..m).map(|x| ((m - x) % m) as u32).collect();
    let gens = if m > 1 { vec![1] } else { vec![] };
    Ok(Arc::new(FiniteGroup::with_inverses(
        format!("C{m}"),
        m,
        table,
        inv,
        Some(gens),
    )?))
}

/// Symmetric group on `n` points under the lexicographic numbering, with
/// the apply-left-factor-first product convention.
pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    try_symmetric(n, DEFAULT_MAX_ORDER).expect("symmetric group within default cap")
}

pub fn try_symmetric(n: usize, cap: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::Config("symmetric groups need n >= 1".into()));
    }
    let order = perm::factorial(n).ok_or(Error::OrderOverflow {
        order: u128::MAX,
        cap,
    })?;
    let order = check_cap(order as u128, cap)?;
    let perms: Vec<Vec<u32>> = (0..order).map(|r| perm::lex_unrank(n, r)).collect();
    let table = Table::build_by_rows(order, |x, row| {
        for (y, slot) in row.iter_mut().enumerate() {
            *slot = perm::lex_rank(&perm::compose(&perms[x], &perms[y])) as u32;
        }
    });
    let inv = (0..order)
        .map(|x| perm::lex_rank(&perm::invert(&perms[x])) as u32)
        .collect();
    let gens = (0..n.saturating_sub(1))
        .map(|i| perm::lex_rank(&perm::transposition(n, i, i + 1)) as u32)
        .collect();
    Ok(Arc::new(FiniteGroup::with_inverses(
        format!("S{n}"),
        order,
        table,
        inv,
        Some(gens),
    )?))
}

/// Direct product `A x B`; index is `i_a * |B| + i_b` (leftmost factor most
/// significant).
pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
    try_direct_product(a, b, DEFAULT_MAX_ORDER).expect("product within default cap")
}

pub fn try_direct_product(
    a: &Arc<FiniteGroup>,
    b: &Arc<FiniteGroup>,
    cap: usize,
) -> Result<Arc<FiniteGroup>> {
    let order = check_cap(a.order() as u128 * b.order() as u128, cap)?;
    let bo = b.order();
    let table = Table::build_by_rows(order, |x, row| {
        let (xa, xb) = ((x / bo) as u32, (x % bo) as u32);
        for (y, slot) in row.iter_mut().enumerate() {
            let (ya, yb) = ((y / bo) as u32, (y % bo) as u32);
            *slot = a.mul(xa, ya) * bo as u32 + b.mul(xb, yb);
        }
    });
    let inv = (0..order)
        .map(|x| {
            let (xa, xb) = ((x / bo) as u32, (x % bo) as u32);
            a.inv(xa) * bo as u32 + b.inv(xb)
        })
        .collect();
    let mut gens = Vec::new();
    if let Some(ga) = a.generators() {
        gens.extend(ga.iter().map(|&g| g * bo as u32));
    }
    if let Some(gb) = b.generators() {
        gens.extend(gb.iter().copied());
    }
    let gens = if a.generators().is_some() && b.generators().is_some() {
        Some(gens)
    } else {
        None
    };
    Ok(Arc::new(FiniteGroup::with_inverses(
        format!("{}*{}", a.label(), b.label()),
        order,
        table,
        inv,
        gens,
    )?))
}

/// Direct power `H^k`; index is mixed-radix over the coordinates with the
/// leftmost coordinate most significant.
pub fn direct_power(h: &Arc<FiniteGroup>, k: usize) -> Arc<FiniteGroup> {
    try_direct_power(h, k, DEFAULT_MAX_ORDER).expect("power within default cap")
}

pub fn try_direct_power(h: &Arc<FiniteGroup>, k: usize, cap: usize) -> Result<Arc<FiniteGroup>> {
    if k == 0 {
        return Err(Error::Config("direct powers need exponent >= 1".into()));
    }
    let mut order: u128 = 1;
    for _ in 0..k {
        order = order.saturating_mul(h.order() as u128);
    }
    let order = check_cap(order, cap)?;
    let ho = h.order();
    let decode = |mut x: usize| -> Vec<u32> {
        let mut c = vec![0u32; k];
        for i in (0..k).rev() {
            c[i] = (x % ho) as u32;
            x /= ho;
        }
        c
    };
    let coords: Vec<Vec<u32>> = (0..order).map(decode).collect();
    let encode = |c: &[u32]| -> u32 {
        let mut x = 0usize;
        for &ci in c {
            x = x * ho + ci as usize;
        }
        x as u32
    };
    let table = Table::build_by_rows(order, |x, row| {
        let cx = &coords[x];
        let mut buf = vec![0u32; k];
        for (y, slot) in row.iter_mut().enumerate() {
            let cy = &coords[y];
            for i in 0..k {
                buf[i] = h.mul(cx[i], cy[i]);
            }
            *slot = encode(&buf);
        }
    });
    let inv = (0..order)
        .map(|x| {
            let ci: Vec<u32> = coords[x].iter().map(|&c| h.inv(c)).collect();
            encode(&ci)
        })
        .collect();
    let base_label = if h.label().contains('*') || h.label().contains('^') {
        format!("({})", h.label())
    } else {
        h.label().to_string()
    };
    let gens = h.generators().map(|gh| {
        let mut gs = Vec::new();
        for i in 0..k {
            for &g in gh {
                let mut c = vec![0u32; k];
                c[i] = g;
                gs.push(encode(&c));
            }
        }
        gs
    });
    Ok(Arc::new(FiniteGroup::with_inverses(
        format!("{base_label}^{k}"),
        order,
        table,
        inv,
        gens,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three_has_order_six() {
        let s3 = symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.label(), "S3");
        s3.validate().unwrap();
    }

    #[test]
    fn cyclic_one_is_trivial() {
        let c1 = cyclic(1);
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.mul(0, 0), 0);
    }

    #[test]
    fn power_of_c2_has_exponent_two() {
        let g = direct_power(&cyclic(2), 3);
        assert_eq!(g.order(), 8);
        for x in 0..8 {
            assert_eq!(g.mul(x, x), 0);
        }
        assert!(g.is_abelian());
    }

    #[test]
    fn product_index_is_mixed_radix() {
        let g = direct_product(&cyclic(2), &symmetric(3));
        assert_eq!(g.order(), 12);
        // (1, id) sits at index 1 * 6 + 0.
        assert_eq!(g.mul(6, 6), 0);
        assert_eq!(g.element_order(6), 2);
    }

    #[test]
    fn symmetric_product_convention_is_left_then_right() {
        let s3 = symmetric(3);
        // ranks: 1 = (1 2), 2 = (0 1); apply (0 1) then (1 2) maps 0 to 2.
        let prod = s3.mul(2, 1);
        let p = perm::lex_unrank(3, prod as usize);
        assert_eq!(p[0], 2);
    }

    #[test]
    fn element_orders_in_s4() {
        let s4 = symmetric(4);
        let mut orders: Vec<usize> = (0..24).map(|x| s4.element_order(x)).collect();
        orders.sort_unstable();
        assert_eq!(orders[0], 1);
        assert_eq!(orders[23], 4);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 9);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 8);
    }

    #[test]
    fn greedy_generators_generate() {
        for g in [symmetric(4), cyclic(12), direct_product(&cyclic(2), &cyclic(2))] {
            let gens = g.greedy_generating_set();
            assert_eq!(crate::subgroup::closure_members(&g, &gens).len(), g.order());
        }
    }

    #[test]
    fn transport_preserves_structure() {
        let g = symmetric(3);
        let rho = vec![0, 3, 4, 1, 5, 2];
        let t = g.transport(&rho).unwrap();
        t.validate().unwrap();
        assert_eq!(t.mul(rho[1], rho[2]), rho[g.mul(1, 2) as usize]);
    }

    #[test]
    fn order_cap_is_enforced() {
        assert!(matches!(
            try_cyclic(10, 5),
            Err(Error::OrderOverflow { .. })
        ));
        assert!(try_symmetric(9, DEFAULT_MAX_ORDER).is_err());
    }
}
