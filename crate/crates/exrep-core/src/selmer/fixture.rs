//! Class-number fixtures and the nicely-exceptional predicate.
//!
//! Class numbers of the subfields of L are never computed here — they enter
//! as cited data. The one derivation performed is the lifting rule: when
//! p ∤ [L : E] (automatic, since p ∤ |G|) and p divides h(E), p divides
//! h(L); contrapositively, h(L) coprime to p makes every subfield entry
//! derivable as coprime-to-p.

use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::is_prime;
use crate::locus::ProjectiveTag;
use crate::permrep::{build_group, GroupTag, Perm, PermGroup};

use super::SelmerError;

/// A class number entry: either a known positive integer or explicitly
/// unknown (never assumed).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(untagged)]
pub enum ClassNumber {
    Known(u64),
    Text(String),
}

impl ClassNumber {
    pub fn known(&self) -> Option<u64> {
        match self {
            ClassNumber::Known(h) => Some(*h),
            ClassNumber::Text(_) => None,
        }
    }
}

/// One subfield record of a fixture.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FixtureEntry {
    /// A label from the fixed subgroup lattice, e.g. "L", "L^S3", "L^Z4".
    pub label: String,
    /// Degree over Q; must equal |G| / |H| for the labelled subgroup H.
    pub degree: u32,
    pub class_number: ClassNumber,
    /// Where the number comes from (citation or derivation note).
    pub source: String,
}

/// Class-number data for the fixed field of one residual representation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassGroupFixture {
    pub p: u64,
    pub group: ProjectiveTag,
    pub entries: Vec<FixtureEntry>,
}

fn s4_subgroup(label: &str) -> Option<Vec<Perm>> {
    let s4 = build_group(GroupTag::S4).expect("S4 builds");
    let by_gens = |gens: &[Perm]| -> Vec<Perm> {
        PermGroup::from_generators(4, gens.to_vec()).elements().to_vec()
    };
    match label {
        "L" => Some(alloc::vec![Perm::identity()]),
        "L^S3" => Some(by_gens(&[
            Perm::from_cycles(&[&[0, 1]]).unwrap(),
            Perm::from_cycles(&[&[0, 1, 2]]).unwrap(),
        ])),
        "L^Z4" => Some(by_gens(&[Perm::from_cycles(&[&[0, 1, 2, 3]]).unwrap()])),
        "L^A4" => Some(
            s4.elements()
                .iter()
                .copied()
                .filter(|g| g.is_even())
                .collect(),
        ),
        "L^D8" => Some(by_gens(&[
            Perm::from_cycles(&[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(&[&[0, 2]]).unwrap(),
        ])),
        _ => None,
    }
}

fn a5_subgroup(label: &str) -> Option<Vec<Perm>> {
    let a5 = build_group(GroupTag::A5).expect("A5 builds");
    let by_gens = |gens: &[Perm]| -> Vec<Perm> {
        PermGroup::from_generators(5, gens.to_vec()).elements().to_vec()
    };
    match label {
        "L" => Some(alloc::vec![Perm::identity()]),
        "L^A4" => Some(
            a5.elements()
                .iter()
                .copied()
                .filter(|g| g.apply(4) == 4)
                .collect(),
        ),
        "L^Z5" => Some(by_gens(&[Perm::from_cycles(&[&[0, 1, 2, 3, 4]]).unwrap()])),
        "L^D10" => Some(by_gens(&[
            Perm::from_cycles(&[&[0, 1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(&[&[1, 4], &[2, 3]]).unwrap(),
        ])),
        _ => None,
    }
}

/// The subgroup of G fixing the labelled subfield, as sorted elements.
pub(crate) fn lattice_subgroup(tag: ProjectiveTag, label: &str) -> Option<Vec<Perm>> {
    let mut elements = match tag {
        ProjectiveTag::S4 => s4_subgroup(label)?,
        ProjectiveTag::A5 => a5_subgroup(label)?,
    };
    elements.sort_unstable();
    Some(elements)
}

/// All labels of the lattice for a group tag.
pub fn lattice_labels(tag: ProjectiveTag) -> &'static [&'static str] {
    match tag {
        ProjectiveTag::S4 => &["L", "L^S3", "L^Z4", "L^A4", "L^D8"],
        ProjectiveTag::A5 => &["L", "L^A4", "L^Z5", "L^D10"],
    }
}

/// The subfields whose class numbers the nicely-exceptional definition
/// actually requires.
pub fn required_labels(tag: ProjectiveTag) -> &'static [&'static str] {
    match tag {
        ProjectiveTag::S4 => &["L^S3", "L^Z4"],
        ProjectiveTag::A5 => &["L^A4", "L^Z5"],
    }
}

/// How the coprimality of one required subfield was established.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RequirementWitness {
    pub label: String,
    /// The class number when known directly; absent when coprimality was
    /// derived from h(L) without knowing the value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_number: Option<u64>,
    pub source: String,
}

/// The three-valued nicely-exceptional verdict. Silence is never treated as
/// vanishing: missing data yields `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum NicelyExceptionalVerdict {
    Yes { witnesses: Vec<RequirementWitness> },
    No { failing: Vec<String> },
    Unknown { missing: Vec<String> },
}

impl ClassGroupFixture {
    /// Schema validation: p an odd prime coprime to |G|, labels from the
    /// lattice, degrees matching the index computation, class numbers
    /// positive, and no entry contradicting the lifting rule.
    pub fn validate(&self) -> Result<(), SelmerError> {
        if !is_prime(self.p) || self.p == 2 {
            return Err(SelmerError::MalformedFixture {
                why: alloc::format!("p = {} must be an odd prime", self.p),
            });
        }
        if self.group.group_order() % self.p == 0 {
            return Err(SelmerError::MalformedFixture {
                why: alloc::format!(
                    "p = {} divides |{}|: the representation would not be exceptional",
                    self.p,
                    self.group
                ),
            });
        }
        let group_order = self.group.group_order();
        let mut seen: Vec<&str> = Vec::new();
        for entry in &self.entries {
            let subgroup = lattice_subgroup(self.group, &entry.label).ok_or_else(|| {
                SelmerError::MalformedFixture {
                    why: alloc::format!(
                        "label '{}' is not in the {} subfield lattice",
                        entry.label,
                        self.group
                    ),
                }
            })?;
            let expected_degree = group_order / subgroup.len() as u64;
            if entry.degree as u64 != expected_degree {
                return Err(SelmerError::MalformedFixture {
                    why: alloc::format!(
                        "entry '{}' has degree {}, expected {}",
                        entry.label,
                        entry.degree,
                        expected_degree
                    ),
                });
            }
            if seen.contains(&entry.label.as_str()) {
                return Err(SelmerError::MalformedFixture {
                    why: alloc::format!("duplicate entry for '{}'", entry.label),
                });
            }
            seen.push(&entry.label);
            match &entry.class_number {
                ClassNumber::Known(0) => {
                    return Err(SelmerError::MalformedFixture {
                        why: alloc::format!("entry '{}' has class number 0", entry.label),
                    })
                }
                ClassNumber::Text(t) if t != "unknown" => {
                    return Err(SelmerError::MalformedFixture {
                        why: alloc::format!(
                            "entry '{}' has class number text '{}'; only \"unknown\" is allowed",
                            entry.label,
                            t
                        ),
                    })
                }
                _ => {}
            }
        }
        // Lifting-rule consistency: h(L) coprime to p forces every subfield
        // class number coprime to p.
        if let Some(h_l) = self.entry("L").and_then(|e| e.class_number.known()) {
            if h_l % self.p != 0 {
                for entry in &self.entries {
                    if let Some(h) = entry.class_number.known() {
                        if h % self.p == 0 {
                            return Err(SelmerError::InconsistentFixture {
                                why: alloc::format!(
                                    "h(L) = {} is coprime to p = {}, but '{}' records a class \
                                     number divisible by p; the lifting rule p | h(E) ⇒ p | h(L) \
                                     is violated",
                                    h_l, self.p, entry.label
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn entry(&self, label: &str) -> Option<&FixtureEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// Whether the mod-p class module of L itself is known to vanish, i.e.
    /// h(L) is recorded and coprime to p.
    pub fn class_module_vanishes(&self) -> Option<bool> {
        self.entry("L")
            .and_then(|e| e.class_number.known())
            .map(|h| h % self.p != 0)
    }

    /// The nicely-exceptional predicate: every required subfield's class
    /// number present (directly or via the h(L) lifting rule) and coprime
    /// to p. Missing data gives `Unknown`, never an assumption.
    pub fn nicely_exceptional(&self) -> Result<NicelyExceptionalVerdict, SelmerError> {
        self.validate()?;
        let h_l_coprime = self.class_module_vanishes().unwrap_or(false);
        let mut witnesses = Vec::new();
        let mut failing = Vec::new();
        let mut missing = Vec::new();
        for &label in required_labels(self.group) {
            match self.entry(label).map(|e| (&e.class_number, &e.source)) {
                Some((ClassNumber::Known(h), source)) => {
                    if h % self.p == 0 {
                        failing.push(String::from(label));
                    } else {
                        witnesses.push(RequirementWitness {
                            label: String::from(label),
                            class_number: Some(*h),
                            source: source.clone(),
                        });
                    }
                }
                Some((ClassNumber::Text(_), _)) | None => {
                    if h_l_coprime {
                        witnesses.push(RequirementWitness {
                            label: String::from(label),
                            class_number: None,
                            source: String::from("derived: p ∤ [L:E] lifting from h(L)"),
                        });
                    } else {
                        missing.push(String::from(label));
                    }
                }
            }
        }
        if !failing.is_empty() {
            Ok(NicelyExceptionalVerdict::No { failing })
        } else if !missing.is_empty() {
            Ok(NicelyExceptionalVerdict::Unknown { missing })
        } else {
            Ok(NicelyExceptionalVerdict::Yes { witnesses })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn entry(label: &str, degree: u32, h: ClassNumber) -> FixtureEntry {
        FixtureEntry {
            label: String::from(label),
            degree,
            class_number: h,
            source: String::from("test"),
        }
    }

    fn fixture(p: u64, group: ProjectiveTag, entries: Vec<FixtureEntry>) -> ClassGroupFixture {
        ClassGroupFixture { p, group, entries }
    }

    #[test]
    fn lattice_subgroup_orders() {
        for (label, order) in [("L", 1), ("L^S3", 6), ("L^Z4", 4), ("L^A4", 12), ("L^D8", 8)] {
            let sub = lattice_subgroup(ProjectiveTag::S4, label).unwrap();
            assert_eq!(sub.len(), order, "{}", label);
        }
        for (label, order) in [("L", 1), ("L^A4", 12), ("L^Z5", 5), ("L^D10", 10)] {
            let sub = lattice_subgroup(ProjectiveTag::A5, label).unwrap();
            assert_eq!(sub.len(), order, "{}", label);
        }
        assert!(lattice_subgroup(ProjectiveTag::A5, "L^S3").is_none());
    }

    #[test]
    fn derivation_from_whole_field() {
        // h(L) = 1 coprime to 59: both required subfields derive.
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L", 24, ClassNumber::Known(1))],
        );
        match f.nicely_exceptional().unwrap() {
            NicelyExceptionalVerdict::Yes { witnesses } => {
                assert_eq!(witnesses.len(), 2);
                assert!(witnesses.iter().all(|w| w.source.starts_with("derived")));
                assert!(witnesses.iter().all(|w| w.class_number.is_none()));
            }
            other => panic!("expected Yes, got {:?}", other),
        }
    }

    #[test]
    fn direct_divisibility_fails() {
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L^S3", 4, ClassNumber::Known(59))],
        );
        assert_eq!(
            f.nicely_exceptional().unwrap(),
            NicelyExceptionalVerdict::No {
                failing: vec![String::from("L^S3")]
            }
        );
    }

    #[test]
    fn empty_fixture_is_unknown() {
        let f = fixture(59, ProjectiveTag::S4, vec![]);
        assert_eq!(
            f.nicely_exceptional().unwrap(),
            NicelyExceptionalVerdict::Unknown {
                missing: vec![String::from("L^S3"), String::from("L^Z4")]
            }
        );
    }

    #[test]
    fn monotone_under_consistent_additions() {
        let base = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L", 24, ClassNumber::Known(1))],
        );
        assert!(matches!(
            base.nicely_exceptional().unwrap(),
            NicelyExceptionalVerdict::Yes { .. }
        ));
        let mut extended = base.clone();
        extended
            .entries
            .push(entry("L^Z4", 6, ClassNumber::Known(2)));
        extended
            .entries
            .push(entry("L^D8", 3, ClassNumber::Known(1)));
        assert!(matches!(
            extended.nicely_exceptional().unwrap(),
            NicelyExceptionalVerdict::Yes { .. }
        ));
    }

    #[test]
    fn inconsistent_fixture_is_an_error() {
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![
                entry("L", 24, ClassNumber::Known(1)),
                entry("L^S3", 4, ClassNumber::Known(59)),
            ],
        );
        assert!(matches!(
            f.nicely_exceptional(),
            Err(SelmerError::InconsistentFixture { .. })
        ));
    }

    #[test]
    fn malformed_fixtures_are_rejected() {
        // Unknown label.
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L^Q8", 3, ClassNumber::Known(1))],
        );
        assert!(matches!(
            f.validate(),
            Err(SelmerError::MalformedFixture { .. })
        ));
        // Degree mismatch.
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L^S3", 5, ClassNumber::Known(1))],
        );
        assert!(matches!(
            f.validate(),
            Err(SelmerError::MalformedFixture { .. })
        ));
        // p divides |S4|: not exceptional.
        let f = fixture(3, ProjectiveTag::S4, vec![]);
        assert!(matches!(
            f.validate(),
            Err(SelmerError::MalformedFixture { .. })
        ));
        // Unknown marker must be the literal string.
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L", 24, ClassNumber::Text(String::from("tbd")))],
        );
        assert!(matches!(
            f.validate(),
            Err(SelmerError::MalformedFixture { .. })
        ));
    }

    #[test]
    fn explicit_unknown_marker_is_accepted() {
        let f = fixture(
            59,
            ProjectiveTag::S4,
            vec![entry("L^S3", 4, ClassNumber::Text(String::from("unknown")))],
        );
        assert!(f.validate().is_ok());
        assert!(matches!(
            f.nicely_exceptional().unwrap(),
            NicelyExceptionalVerdict::Unknown { .. }
        ));
    }
}
