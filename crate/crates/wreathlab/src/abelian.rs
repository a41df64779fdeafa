//! Abelian invariants: the invariant-factor decomposition of a finite
//! abelian group.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{commutator_subgroup, quotient, subgroup_closure};

/// Invariant factors `d_1 | d_2 | ...` (each > 1) plus a free rank; finite
/// groups always have free rank 0, presentations may not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianInvariants {
    pub fn finite(torsion: Vec<i64>) -> AbelianInvariants {
        AbelianInvariants {
            free_rank: 0,
            torsion,
        }
    }

    pub fn check_divisibility_chain(&self) -> bool {
        self.torsion.iter().all(|&d| d > 1)
            && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }

    /// Invariants of the direct sum of two groups given by invariants.
    /// Computed by merging the primary decompositions.
    pub fn direct_sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        let mut primary: Vec<(i64, u32)> = Vec::new();
        for &d in self.torsion.iter().chain(other.torsion.iter()) {
            primary.extend(factor_into_prime_powers(d));
        }
        // Bucket prime powers per prime, largest first; the k-th invariant
        // factor from the top is the product of each prime's k-th largest
        // power.
        let mut by_prime: std::collections::BTreeMap<i64, Vec<u32>> = Default::default();
        for (p, e) in primary {
            by_prime.entry(p).or_default().push(e);
        }
        let depth = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
        let mut factors_desc = vec![1i64; depth];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                factors_desc[i] *= p.pow(e);
            }
        }
        factors_desc.reverse();
        AbelianInvariants {
            free_rank: self.free_rank + other.free_rank,
            torsion: factors_desc,
        }
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "free_rank={} torsion={:?}", self.free_rank, self.torsion)
    }
}

fn factor_into_prime_powers(mut d: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2i64;
    while p * p <= d {
        if d % p == 0 {
            let mut e = 0;
            while d % p == 0 {
                d /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

/// Invariant factors of a finite abelian group, by repeatedly splitting off
/// a cyclic summand of maximal order: any element of maximal order generates
/// a direct summand, and the quotient carries the remaining factors.
pub fn abelian_invariants(g: &Arc<FiniteGroup>) -> Result<AbelianInvariants> {
    for x in 1..g.order() as u32 {
        for y in (x + 1)..g.order() as u32 {
            if g.mul(x, y) != g.mul(y, x) {
                return Err(Error::NotAbelian { x, y });
            }
        }
    }
    let mut current = g.clone();
    let mut factors_desc: Vec<i64> = Vec::new();
    while current.order() > 1 {
        let mut best = (1usize, 0u32);
        for x in 0..current.order() as u32 {
            let o = current.element_order(x);
            if o > best.0 {
                best = (o, x);
            }
        }
        factors_desc.push(best.0 as i64);
        let cyc = subgroup_closure(&current, &[best.1]);
        let (q, _) = quotient(&current, &cyc)?;
        current = q;
    }
    factors_desc.reverse();
    let inv = AbelianInvariants::finite(factors_desc);
    debug_assert!(inv.check_divisibility_chain());
    Ok(inv)
}

/// Invariants of the abelianization of an arbitrary finite group.
pub fn abelianization_invariants(g: &Arc<FiniteGroup>) -> Result<AbelianInvariants> {
    let derived = commutator_subgroup(g);
    let (ab, _) = quotient(g, &derived)?;
    abelian_invariants(&ab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, symmetric};

    #[test]
    fn cyclic_six_is_one_factor() {
        assert_eq!(
            abelian_invariants(&cyclic(6)).unwrap(),
            AbelianInvariants::finite(vec![6])
        );
    }

    #[test]
    fn c2_times_c4_keeps_both_factors() {
        let g = direct_product(&cyclic(2), &cyclic(4));
        assert_eq!(
            abelian_invariants(&g).unwrap(),
            AbelianInvariants::finite(vec![2, 4])
        );
    }

    #[test]
    fn coprime_factors_merge() {
        let g = direct_product(&cyclic(2), &cyclic(3));
        assert_eq!(
            abelian_invariants(&g).unwrap(),
            AbelianInvariants::finite(vec![6])
        );
    }

    #[test]
    fn non_abelian_input_is_rejected() {
        assert!(matches!(
            abelian_invariants(&symmetric(3)),
            Err(Error::NotAbelian { .. })
        ));
    }

    #[test]
    fn abelianization_of_s3() {
        assert_eq!(
            abelianization_invariants(&symmetric(3)).unwrap(),
            AbelianInvariants::finite(vec![2])
        );
    }

    #[test]
    fn invariants_are_relabeling_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = direct_product(&cyclic(2), &cyclic(4));
        let base = abelian_invariants(&g).unwrap();
        for _ in 0..20 {
            let mut rho: Vec<u32> = (1..g.order() as u32).collect();
            rho.shuffle(&mut rng);
            rho.insert(0, 0);
            let t = std::sync::Arc::new(g.transport(&rho).unwrap());
            assert_eq!(abelian_invariants(&t).unwrap(), base);
        }
    }

    #[test]
    fn direct_sum_canonicalizes() {
        let a = AbelianInvariants::finite(vec![2]);
        let b = AbelianInvariants::finite(vec![2, 4]);
        let s = a.direct_sum(&b);
        assert_eq!(s.torsion, vec![2, 2, 4]);
        let c = AbelianInvariants::finite(vec![2]);
        let d = AbelianInvariants::finite(vec![3]);
        assert_eq!(c.direct_sum(&d).torsion, vec![6]);
        assert!(s.check_divisibility_chain());
    }
}
