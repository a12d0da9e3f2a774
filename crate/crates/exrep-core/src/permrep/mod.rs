//! Finite permutation groups (S4, A5, dihedral, cyclic) with exact character
//! theory: conjugacy classes, character tables over Q(√5), induction,
//! restriction, inner products and subgroup enumeration.
//!
//! Everything is deterministic: canonical representatives are always the
//! lexicographically least permutation or element list.

use alloc::string::String;
use core::fmt;

mod chars;
mod group;
mod perm;
mod quad;
mod subgroups;

pub use chars::{
    character_table, decompose, induce, inner_product, render_character_table, restrict,
    ClassFunction, A5_CHI5, CHI3A, CHI3B, CHI4, CHI5, CHI_BOX, CHI_PERP, CHI_PERP_SGN, ETA, SGN,
    TRIV,
};
pub(crate) use chars::two_cos_2pi;
pub use group::{build_group, ConjugacyClass, GroupKind, GroupTag, PermGroup};
pub use perm::{Perm, MAX_DEGREE};
pub use quad::QuadValue;
pub use subgroups::{
    all_subgroup_classes, cyclic_index_two_subgroups, dihedral_subgroups, SubgroupEmbedding,
    SubgroupTag,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermRepError {
    /// An element list that is not closed under the group operations.
    NotAGroup,
    /// A containment requirement (H ⊆ G) failed.
    NotASubgroup,
    /// A class function was paired with a group it was not built on.
    GroupMismatch,
    /// Decomposition produced a non-integral or negative multiplicity.
    NotACharacter,
    /// The requested computation leaves the exactly-representable domain.
    UnsupportedInstance { what: String },
}

impl fmt::Display for PermRepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermRepError::NotAGroup => write!(f, "element list is not a group"),
            PermRepError::NotASubgroup => write!(f, "not a subgroup of the ambient group"),
            PermRepError::GroupMismatch => {
                write!(f, "class function does not belong to this group")
            }
            PermRepError::NotACharacter => {
                write!(f, "class function is not a character (non-integral multiplicity)")
            }
            PermRepError::UnsupportedInstance { what } => write!(f, "unsupported instance: {}", what),
        }
    }
}
