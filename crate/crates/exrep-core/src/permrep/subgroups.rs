//! Subgroup enumeration up to conjugacy.
//!
//! Subgroups are generated exhaustively from all element subsets of size at
//! most two, which is complete for S4 and A5 (every subgroup of either is
//! 2-generated) and in particular for all dihedral and cyclic subgroups.

use alloc::string::String;
use alloc::vec::Vec;

use super::group::{subgroup_conjugacy_classes, GroupKind, PermGroup};
use super::perm::Perm;
use super::PermRepError;

/// Structural classification of an embedded subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupTag {
    /// Cyclic of order d.
    Cyclic(u32),
    /// Dihedral of order 2d (d = 2 is the Klein four group).
    Dihedral(u32),
    Other,
}

impl SubgroupTag {
    pub fn describe(&self) -> String {
        match self {
            SubgroupTag::Cyclic(d) => alloc::format!("Z/{}", d),
            SubgroupTag::Dihedral(d) => alloc::format!("D{}", 2 * d),
            SubgroupTag::Other => String::from("other"),
        }
    }
}

/// One conjugacy class of subgroups, represented by its lexicographically
/// least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupEmbedding {
    /// Sorted element list of the representative subgroup.
    pub elements: Vec<Perm>,
    pub tag: SubgroupTag,
    /// Whether the subgroup is normal in the ambient group (equivalently,
    /// its conjugacy class is a singleton).
    pub normal: bool,
    /// Index of this class in the enumeration it came from.
    pub class_id: usize,
}

impl SubgroupEmbedding {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The subgroup as a full group value (conjugacy classes recomputed).
    pub fn group(&self, degree: usize) -> PermGroup {
        PermGroup::from_elements(degree, self.elements.clone())
            .expect("embedding elements form a group")
    }

    pub fn describe(&self) -> String {
        if self.normal {
            alloc::format!("{} (normal)", self.tag.describe())
        } else {
            self.tag.describe()
        }
    }
}

fn classify(ambient: &PermGroup, elements: &[Perm]) -> SubgroupTag {
    let sub = PermGroup::from_elements(ambient.degree(), elements.to_vec())
        .expect("closure output is a group");
    match sub.kind() {
        GroupKind::Trivial => SubgroupTag::Cyclic(1),
        GroupKind::Cyclic(d) => SubgroupTag::Cyclic(d),
        GroupKind::Dihedral(d) => SubgroupTag::Dihedral(d),
        _ => SubgroupTag::Other,
    }
}

fn embeddings_from_classes(
    ambient: &PermGroup,
    subgroups: Vec<Vec<Perm>>,
) -> Vec<SubgroupEmbedding> {
    let classes = subgroup_conjugacy_classes(ambient, &subgroups);
    let mut embeddings: Vec<SubgroupEmbedding> = classes
        .into_iter()
        .map(|class| {
            let representative = class[0].clone();
            let tag = classify(ambient, &representative);
            SubgroupEmbedding {
                tag,
                normal: class.len() == 1,
                class_id: 0,
                elements: representative,
            }
        })
        .collect();
    // Deterministic class order: by size, normal subgroups first within a
    // size, then lexicographically.
    embeddings.sort_by(|a, b| {
        (a.order(), !a.normal, &a.elements).cmp(&(b.order(), !b.normal, &b.elements))
    });
    for (i, e) in embeddings.iter_mut().enumerate() {
        e.class_id = i;
    }
    embeddings
}

/// All non-cyclic dihedral subgroups of the ambient group, one embedding per
/// conjugacy class.
pub fn dihedral_subgroups(ambient: &PermGroup) -> Vec<SubgroupEmbedding> {
    let dihedral: Vec<Vec<Perm>> = ambient
        .subgroups_from_pairs()
        .into_iter()
        .filter(|s| matches!(classify(ambient, s), SubgroupTag::Dihedral(_)))
        .collect();
    embeddings_from_classes(ambient, dihedral)
}

/// Every subgroup of the ambient group up to conjugacy (complete for groups
/// whose subgroups are all 2-generated, in particular S4 and A5).
pub fn all_subgroup_classes(ambient: &PermGroup) -> Vec<SubgroupEmbedding> {
    let subs = ambient.subgroups_from_pairs();
    embeddings_from_classes(ambient, subs)
}

/// Cyclic subgroups of index two inside a dihedral embedding, sorted; these
/// are the inertia candidates. A dihedral group of order 2d has exactly one
/// for d ≥ 3 and three for the Klein four group.
pub fn cyclic_index_two_subgroups(
    ambient_degree: usize,
    dihedral: &SubgroupEmbedding,
) -> Result<Vec<Vec<Perm>>, PermRepError> {
    let d = match dihedral.tag {
        SubgroupTag::Dihedral(d) => d as usize,
        _ => {
            return Err(PermRepError::UnsupportedInstance {
                what: String::from("inertia candidates require a dihedral subgroup"),
            })
        }
    };
    let group = dihedral.group(ambient_degree);
    let mut found: Vec<Vec<Perm>> = Vec::new();
    for g in group.elements() {
        if g.order() as usize != d {
            continue;
        }
        let mut cyc: Vec<Perm> = (0..d as i64).map(|j| g.pow(j)).collect();
        cyc.sort_unstable();
        if !found.contains(&cyc) {
            found.push(cyc);
        }
    }
    found.sort_unstable();
    Ok(found)
}
