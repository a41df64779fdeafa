use thiserror::Error;

/// Errors surfaced by group construction, homomorphism building, and the
/// integer-matrix kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderOverflow { order: u128, cap: usize },

    #[error("subgroup is not normal: conjugating by element {conjugator} moves {member} outside")]
    NotNormal { conjugator: u32, member: u32 },

    #[error("group is not abelian: elements {x} and {y} do not commute")]
    NotAbelian { x: u32, y: u32 },

    #[error("elements do not generate the group: reached {reached} of {order}")]
    NotGenerating { reached: usize, order: usize },

    #[error("map is not a homomorphism: images disagree on the product of {x} and {y}")]
    NotAHomomorphism { x: u32, y: u32 },

    #[error("map is not surjective onto the target")]
    NotSurjective,

    #[error("sigma compatibility violated: sigma2(f(g)) differs from sigma1(g) at g = {witness}")]
    TriangleViolation { witness: u32 },

    #[error("wreath groups are not over the same base data: {0}")]
    MismatchedBase(String),

    #[error("subgroup is not invariant under the map: element {member} maps outside")]
    NotInvariant { member: u32 },

    #[error("group order {order} exceeds the automorphism-enumeration cap of {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("integer overflow during exact matrix arithmetic")]
    Overflow,

    #[error("relator {relator} does not evaluate to the identity permutation")]
    PermutationInconsistent { relator: usize },

    #[error("unsupported presentation kind: {0}")]
    UnsupportedKind(String),

    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
