//! Admissible decomposition/inertia pairs (G, D, I) and the exclusion of
//! dihedral and A4 projective images.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{canonical_generator, check_odd_prime, LocusError, ProjectiveTag};
use crate::permrep::{
    build_group, cyclic_index_two_subgroups, dihedral_subgroups, GroupKind, Perm, PermGroup,
    SubgroupEmbedding, SubgroupTag,
};

/// Why a candidate (D, I) pair was excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectionReason {
    /// |I| = d is odd, but the quadratic subfield is ramified at p, forcing
    /// the inertia order to be even.
    InertiaOddOrder,
    /// I lies inside the unique index-two subgroup, so the quadratic
    /// subfield would be unramified at p — impossible, since it is the only
    /// quadratic field ramified nowhere else.
    InertiaInsideUniqueIndexTwo,
    /// D normal makes its fixed field Galois and ramified at p, forcing a
    /// divisibility on d that fails. Encoded for completeness: this is how
    /// A4 dies, and no S4/A5 candidate ever reaches it.
    NormalDecompositionDivisibility,
}

impl RejectionReason {
    pub fn message(&self) -> &'static str {
        match self {
            RejectionReason::InertiaOddOrder => {
                "inertia order odd vs ramified quadratic subfield"
            }
            RejectionReason::InertiaInsideUniqueIndexTwo => {
                "inertia inside the unique index-two subgroup: quadratic subfield would be \
                 unramified at p"
            }
            RejectionReason::NormalDecompositionDivisibility => {
                "normal decomposition group: Galois fixed field ramified at p forces a \
                 divisibility on d that fails"
            }
        }
    }
}

/// An embedding (G, D, I): the projective global image, a dihedral
/// decomposition subgroup D of order 2d and its cyclic inertia subgroup I
/// of order d, with the admissibility analysis attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionDatum {
    pub global: ProjectiveTag,
    pub decomposition: SubgroupEmbedding,
    /// Sorted elements of I.
    pub inertia_elements: Vec<Perm>,
    pub d: u64,
    pub admissible: bool,
    pub rejection: Option<RejectionReason>,
}

impl DecompositionDatum {
    /// The inertia subgroup's canonical generator.
    pub fn inertia_generator(&self) -> Perm {
        canonical_generator(&self.inertia_elements, self.d)
    }

    pub fn inertia_label(&self) -> String {
        alloc::format!("Z/{}", self.d)
    }

    pub fn decomposition_label(&self) -> String {
        self.decomposition.tag.describe()
    }

    pub fn describe(&self) -> PairDescription {
        PairDescription {
            global: self.global,
            decomposition: self.decomposition_label(),
            decomposition_normal: self.decomposition.normal,
            inertia: self.inertia_label(),
            inertia_generator: self.inertia_generator().cycle_string(),
            d: self.d,
            admissible: self.admissible,
            rejection: self.rejection.map(|r| String::from(r.message())),
            matches_d: None,
        }
    }

    pub fn describe_with_d_match(&self, d: u64) -> PairDescription {
        let mut desc = self.describe();
        desc.matches_d = Some(self.d == d);
        desc
    }
}

/// Serialisable summary of a decomposition pair.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PairDescription {
    pub global: ProjectiveTag,
    pub decomposition: String,
    pub decomposition_normal: bool,
    pub inertia: String,
    pub inertia_generator: String,
    pub d: u64,
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejection: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_d: Option<bool>,
}

/// The unique index-two subgroup when there is exactly one (for S4 this is
/// the even permutations), found by exhaustive enumeration.
fn unique_index_two_subgroup(group: &PermGroup) -> Option<Vec<Perm>> {
    let half = group.order() / 2;
    let mut found: Vec<Vec<Perm>> = group
        .subgroups_from_pairs()
        .into_iter()
        .filter(|s| s.len() == half)
        .collect();
    if found.len() == 1 {
        found.pop()
    } else {
        None
    }
}

/// All candidate (D, I) pairs up to simultaneous conjugacy, each analysed
/// against the admissibility constraints, ordered deterministically.
pub fn gdi_candidates(tag: ProjectiveTag) -> Vec<DecompositionDatum> {
    let group = tag.build();
    let index_two = unique_index_two_subgroup(&group);

    // Enumerate (D, I) with D a dihedral subgroup class representative and
    // I one of its cyclic index-two subgroups, then merge pairs that are
    // simultaneously conjugate.
    let mut raw: Vec<(SubgroupEmbedding, Vec<Perm>)> = Vec::new();
    for demb in dihedral_subgroups(&group) {
        for inertia in
            cyclic_index_two_subgroups(group.degree(), &demb).expect("dihedral embedding")
        {
            raw.push((demb.clone(), inertia));
        }
    }
    let mut seen_orbit_reps: BTreeSet<(Vec<Perm>, Vec<Perm>)> = BTreeSet::new();
    let mut candidates: Vec<DecompositionDatum> = Vec::new();
    for (demb, inertia) in raw {
        let orbit_rep = pair_orbit_representative(&group, &demb.elements, &inertia);
        if !seen_orbit_reps.insert(orbit_rep) {
            continue;
        }
        let d = inertia.len() as u64;
        let mut rejection = None;
        if index_two.is_some() {
            if d % 2 != 0 {
                rejection = Some(RejectionReason::InertiaOddOrder);
            } else if let Some(plus) = &index_two {
                let inside = inertia.iter().all(|g| plus.binary_search(g).is_ok());
                if inside {
                    rejection = Some(RejectionReason::InertiaInsideUniqueIndexTwo);
                }
            }
        }
        if rejection.is_none() && demb.normal {
            rejection = Some(RejectionReason::NormalDecompositionDivisibility);
        }
        candidates.push(DecompositionDatum {
            global: tag,
            admissible: rejection.is_none(),
            rejection,
            d,
            decomposition: demb,
            inertia_elements: inertia,
        });
    }
    candidates.sort_by(|a, b| {
        (a.decomposition.class_id, &a.inertia_elements)
            .cmp(&(b.decomposition.class_id, &b.inertia_elements))
    });
    candidates
}

/// Lexicographically least (D, I) pair in the simultaneous conjugacy orbit.
fn pair_orbit_representative(
    group: &PermGroup,
    d_elements: &[Perm],
    inertia: &[Perm],
) -> (Vec<Perm>, Vec<Perm>) {
    let mut best: Option<(Vec<Perm>, Vec<Perm>)> = None;
    for g in group.elements() {
        let mut dd: Vec<Perm> = d_elements.iter().map(|h| h.conjugate_by(g)).collect();
        let mut ii: Vec<Perm> = inertia.iter().map(|h| h.conjugate_by(g)).collect();
        dd.sort_unstable();
        ii.sort_unstable();
        let cand = (dd, ii);
        if best.as_ref().map(|b| cand < *b).unwrap_or(true) {
            best = Some(cand);
        }
    }
    best.expect("group has elements")
}

/// The admissible pairs only — exactly the classification's list:
/// S4 gives (non-normal D4, transposition) and (D8, Z/4); A5 gives
/// (D4, Z/2), (D6, Z/3) and (D10, Z/5).
pub fn gdi_admissible_pairs(tag: ProjectiveTag) -> Vec<DecompositionDatum> {
    gdi_candidates(tag)
        .into_iter()
        .filter(|c| c.admissible)
        .collect()
}

/// A machine-checked group fact supporting an exclusion argument.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GroupFact {
    pub statement: String,
    pub verified: bool,
}

/// One excluded projective image type with its supporting facts.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ExclusionFact {
    pub candidate: String,
    pub argument: String,
    pub facts: Vec<GroupFact>,
}

/// The surviving projective image types with the exclusion trace.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ProjectiveOptions {
    pub survivors: Vec<ProjectiveTag>,
    pub exclusions: Vec<ExclusionFact>,
}

/// Starting from the exhaustive list {dihedral, A4, S4, A5} of projective
/// images with order prime to p, excludes the dihedral case (index-two
/// subgroup count parity against the even inertia order) and A4 (its only
/// dihedral subgroup is the normal Klein group, and normality forces a
/// divisibility on d that d = 2 fails). Each excluded case carries group
/// facts verified by brute force.
pub fn exceptional_projective_options(p: u64) -> Result<ProjectiveOptions, LocusError> {
    check_odd_prime(p)?;

    let mut dihedral_facts = Vec::new();
    for n in 2u32..=5 {
        let g = build_group(crate::permrep::GroupTag::Dihedral(n))?;
        let count = g.index_two_subgroup_count();
        let expected = if n % 2 == 1 { 1 } else { 3 };
        dihedral_facts.push(GroupFact {
            statement: alloc::format!("D{} has {} index-two subgroup(s)", 2 * n, count),
            verified: count == expected,
        });
    }

    let a4 = a4_group();
    let a4_dihedrals = dihedral_subgroups(&a4);
    let a4_fact_unique = a4_dihedrals.len() == 1
        && a4_dihedrals[0].normal
        && a4_dihedrals[0].tag == SubgroupTag::Dihedral(2);
    let a4_facts = alloc::vec![GroupFact {
        statement: String::from(
            "the only non-cyclic dihedral subgroup of A4 is the normal Klein four group"
        ),
        verified: a4_fact_unique,
    }];

    Ok(ProjectiveOptions {
        survivors: alloc::vec![ProjectiveTag::S4, ProjectiveTag::A5],
        exclusions: alloc::vec![
            ExclusionFact {
                candidate: String::from("dihedral"),
                argument: String::from(
                    "a dihedral global image D_2n needs a unique index-two subgroup (only one \
                     quadratic field is ramified nowhere else), forcing n odd; but the inertia \
                     order d is even and divides n",
                ),
                facts: dihedral_facts,
            },
            ExclusionFact {
                candidate: String::from("A4"),
                argument: String::from(
                    "the decomposition group would be the normal Klein subgroup with d = 2; \
                     normality makes its degree-3 fixed field Galois and ramified at p, forcing \
                     3 | d",
                ),
                facts: a4_facts,
            },
        ],
    })
}

/// A4 as the even permutations of S4.
pub(crate) fn a4_group() -> PermGroup {
    let s4 = build_group(crate::permrep::GroupTag::S4).expect("S4 builds");
    let evens: Vec<Perm> = s4
        .elements()
        .iter()
        .copied()
        .filter(|g| g.is_even())
        .collect();
    let a4 = PermGroup::from_elements(4, evens).expect("even permutations form A4");
    debug_assert_eq!(a4.kind(), GroupKind::A4);
    a4
}
