//! Finite-group laboratory for permutational wreath products.
//!
//! The crate constructs wreath products `H^n x| G` of finite groups, where a
//! homomorphism `sigma: G -> S_n` permutes the coordinates of `H^n`, and
//! cross-checks their structure (center, abelianization, abelian-normal
//! radical, splitting over the permutation kernel, pullback description,
//! twisted-conjugacy counts) by independent brute force over explicit
//! multiplication tables. A separate presentation layer computes
//! abelianizations of braid-type presentations through integer Smith normal
//! form and builds framed variants of those presentations.
//!
//! Element-numbering conventions are fixed and documented in [`group`]; the
//! coordinate-action convention is documented in [`wreath`].

pub mod abelian;
pub mod error;
pub mod expr;
pub mod group;
pub mod hom;
pub mod lattice;
pub mod perm;
pub mod presentation;
pub mod report;
pub mod snf;
pub mod structure;
pub mod subgroup;
pub mod twisted;
pub mod wreath;

pub use abelian::{abelian_invariants, abelianization_invariants, AbelianInvariants};
pub use error::{Error, Result};
pub use group::{
    cyclic, direct_power, direct_product, symmetric, FiniteGroup, DEFAULT_MAX_ORDER,
};
pub use hom::{enumerate_surjections, hom_from_images, hom_kernel_image, GroupHom};
pub use subgroup::{
    center, commutator_subgroup, conjugacy_classes, normal_closure, quotient,
    subgroup_closure, Subgroup,
};
pub use wreath::{
    base_change_map, build_wreath_pullback, coefficient_map, diagonal_fixed_subgroup,
    fiber_product, pullback_isomorphism, WreathGroup,
};
