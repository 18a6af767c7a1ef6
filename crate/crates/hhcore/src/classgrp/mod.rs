//! Classical forms and groups: membership, similitudes, pseudoreflections and
//! invariant-subspace geometry.

pub mod form;
pub mod gens;
pub mod member;
pub mod subspace;

pub use form::{parse_group_id, standard_form, Eps, Family, FormKind, FormSpace, GroupSpec};
pub use gens::{generators, group_order};
pub use member::{in_group, is_pseudoreflection, preserves_form};
pub use subspace::{
    invariant_totally_singular_subspace, orthogonal_irreducible_decomposition, Decomposition,
};
