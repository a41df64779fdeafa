//! Permutations of `{0..n-1}` in one-line notation.
//!
//! Symmetric-group elements are numbered by the lexicographic rank of their
//! one-line vector, so the identity is always element 0.
//!
//! Products are taken left-to-right: `compose(a, b)` is the permutation
//! "apply `a` first, then `b`". This convention makes the coordinate action
//! `(g . k)_i = k[sigma(g)(i)]` used by the wreath construction a genuine
//! left action, which is why it is fixed here once and for all.

/// Identity permutation on `n` points.
pub fn identity(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

/// Apply `first`, then `second`: the result maps `i` to `second[first[i]]`.
pub fn compose(first: &[u32], second: &[u32]) -> Vec<u32> {
    debug_assert_eq!(first.len(), second.len());
    first.iter().map(|&i| second[i as usize]).collect()
}

/// Inverse permutation.
pub fn invert(p: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; p.len()];
    for (i, &pi) in p.iter().enumerate() {
        out[pi as usize] = i as u32;
    }
    out
}

pub fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &pi)| pi as usize == i)
}

/// Transposition swapping `i` and `j` on `n` points.
pub fn transposition(n: usize, i: usize, j: usize) -> Vec<u32> {
    let mut p = identity(n);
    p.swap(i, j);
    p
}

/// `n!` with overflow checking.
pub fn factorial(n: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for k in 2..=n {
        acc = acc.checked_mul(k)?;
    }
    Some(acc)
}

/// Lexicographic rank of a one-line permutation vector (identity ranks 0).
pub fn lex_rank(p: &[u32]) -> usize {
    let n = p.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller_later = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank += smaller_later * factorial(n - 1 - i).expect("rank overflow");
    }
    rank
}

/// Permutation of `{0..n-1}` with the given lexicographic rank.
pub fn lex_unrank(n: usize, mut rank: usize) -> Vec<u32> {
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i).expect("rank overflow");
        let idx = rank / f;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// True if `p` is a valid permutation vector of its length.
pub fn is_permutation(p: &[u32]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        if (x as usize) >= n || seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip() {
        for n in 1..=6 {
            let total = factorial(n).unwrap();
            for r in 0..total {
                let p = lex_unrank(n, r);
                assert!(is_permutation(&p));
                assert_eq!(lex_rank(&p), r);
            }
        }
    }

    #[test]
    fn identity_is_rank_zero() {
        for n in 1..=5 {
            assert_eq!(lex_rank(&identity(n)), 0);
            assert!(is_identity(&lex_unrank(n, 0)));
        }
    }

    #[test]
    fn lex_order_on_three_points() {
        // 012 < 021 < 102 < 120 < 201 < 210
        let expected = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        for (r, want) in expected.iter().enumerate() {
            assert_eq!(&lex_unrank(3, r), want);
        }
    }

    #[test]
    fn compose_applies_left_factor_first() {
        // a = (0 1), b = (1 2): apply a then b sends 0 -> 1 -> 2.
        let a = transposition(3, 0, 1);
        let b = transposition(3, 1, 2);
        let ab = compose(&a, &b);
        assert_eq!(ab[0], 2);
        assert_eq!(compose(&a, &invert(&a)), identity(3));
    }
}
