//! Fully enumerated permutation groups with conjugacy data.
//!
//! Groups here are tiny (|G| ≤ 120), so everything — closure, conjugacy
//! classes, subgroup enumeration, structure detection — is brute force over
//! the element list. Canonical representatives are always the
//! lexicographically least permutation, which makes every output
//! deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::perm::Perm;
use super::PermRepError;

/// Constructor tags for the groups this crate works with. `Dihedral(d)` is
/// the dihedral group of order 2d; `Cyclic(d)` has order d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GroupTag {
    S4,
    A5,
    Dihedral(u32),
    Cyclic(u32),
}

impl GroupTag {
    pub fn describe(&self) -> String {
        match self {
            GroupTag::S4 => String::from("S4"),
            GroupTag::A5 => String::from("A5"),
            GroupTag::Dihedral(d) => alloc::format!("D{}", 2 * d),
            GroupTag::Cyclic(d) => alloc::format!("Z/{}", d),
        }
    }
}

/// Structure of an enumerated (sub)group, detected by brute force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Trivial,
    Cyclic(u32),
    /// Dihedral of order 2d, d ≥ 2 (d = 2 is the Klein four group).
    Dihedral(u32),
    A4,
    S4,
    A5,
    Other,
}

/// A conjugacy class; `members` is sorted so `members[0]` is the
/// lexicographically least element and serves as the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub members: Vec<Perm>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> &Perm {
        &self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A fully enumerated permutation group on ≤ 5 points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    classes: Vec<ConjugacyClass>,
    fingerprint: u64,
}

impl PermGroup {
    /// Closes the generators under composition and inverse, then computes
    /// conjugacy classes.
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Self {
        let mut elements: BTreeSet<Perm> = BTreeSet::new();
        elements.insert(Perm::identity());
        let mut frontier: Vec<Perm> = alloc::vec![Perm::identity()];
        while let Some(g) = frontier.pop() {
            for gen in &generators {
                for candidate in [g.compose(gen), gen.compose(&g)] {
                    if elements.insert(candidate) {
                        frontier.push(candidate);
                    }
                }
            }
        }
        // A finite set closed under left/right multiplication by generators
        // and containing the identity is automatically closed under inverse.
        let elements: Vec<Perm> = elements.into_iter().collect();
        Self::from_sorted_elements(degree, generators, elements)
    }

    /// Wraps an explicit element list, verifying it is a group.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Result<Self, PermRepError> {
        elements.sort_unstable();
        elements.dedup();
        let set: BTreeSet<Perm> = elements.iter().copied().collect();
        if !set.contains(&Perm::identity()) {
            return Err(PermRepError::NotAGroup);
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(PermRepError::NotAGroup);
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(PermRepError::NotAGroup);
                }
            }
        }
        let generators = elements.clone();
        Ok(Self::from_sorted_elements(degree, generators, elements))
    }

    fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let classes = conjugacy_classes(&elements);
        let fingerprint = fingerprint_elements(&elements);
        PermGroup {
            degree,
            generators,
            elements,
            classes,
            fingerprint,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the conjugacy class containing `g`.
    pub fn class_of(&self, g: &Perm) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.members.binary_search(g).is_ok())
    }

    /// Cheap identity used to detect when a class function is paired with
    /// the wrong group.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn is_subgroup_of(&self, ambient: &PermGroup) -> bool {
        self.elements.iter().all(|g| ambient.contains(g))
    }

    /// Whether the subgroup `sub` (given by its elements) is normal in self.
    pub fn is_normal_subgroup(&self, sub: &[Perm]) -> bool {
        let set: BTreeSet<Perm> = sub.iter().copied().collect();
        self.elements
            .iter()
            .all(|g| sub.iter().all(|h| set.contains(&h.conjugate_by(g))))
    }

    /// Detects the structure of the group by brute force. Among subgroups of
    /// S5 the non-cyclic, non-dihedral orders 12, 24, 60 pin down A4, S4, A5.
    pub fn kind(&self) -> GroupKind {
        let n = self.order();
        if n == 1 {
            return GroupKind::Trivial;
        }
        if self.kind_is_cyclic() {
            return GroupKind::Cyclic(n as u32);
        }
        if n % 2 == 0 && self.dihedral_axis().is_some() {
            return GroupKind::Dihedral((n / 2) as u32);
        }
        match n {
            12 => GroupKind::A4,
            24 => GroupKind::S4,
            60 => GroupKind::A5,
            _ => GroupKind::Other,
        }
    }

    /// For a dihedral group of order 2d this returns a cyclic subgroup of
    /// order d that is inverted by every element outside it. `None` when the
    /// group is cyclic or not dihedral. For the Klein four group (d = 2) the
    /// three choices are all valid; the one generated by the least
    /// non-identity element is returned.
    pub fn dihedral_axis(&self) -> Option<Vec<Perm>> {
        let n = self.order();
        if n % 2 != 0 || n < 4 || self.kind_is_cyclic() {
            return None;
        }
        let d = n / 2;
        // Candidate rotation subgroups: cyclic of order d.
        for g in &self.elements {
            if g.order() as usize != d {
                continue;
            }
            let rotations: BTreeSet<Perm> = (0..d as i64).map(|j| g.pow(j)).collect();
            let inverted = self
                .elements
                .iter()
                .filter(|s| !rotations.contains(s))
                .all(|s| {
                    rotations
                        .iter()
                        .all(|r| r.conjugate_by(s) == r.inverse())
                });
            if inverted {
                return Some(rotations.into_iter().collect());
            }
        }
        None
    }

    fn kind_is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements.iter().any(|g| g.order() as usize == n)
    }

    /// All distinct subgroups generated by at most two elements, as sorted
    /// element lists. For S4 and A5 (and everything below them) this is all
    /// subgroups, since each is 2-generated.
    pub fn subgroups_from_pairs(&self) -> Vec<Vec<Perm>> {
        let mut seen: BTreeSet<Vec<Perm>> = BTreeSet::new();
        for a in &self.elements {
            for b in &self.elements {
                let sub = close_pair(*a, *b);
                seen.insert(sub);
            }
        }
        seen.into_iter().collect()
    }

    /// Number of index-two subgroups, by exhaustive pair generation.
    pub fn index_two_subgroup_count(&self) -> usize {
        let half = self.order() / 2;
        if self.order() % 2 != 0 {
            return 0;
        }
        self.subgroups_from_pairs()
            .into_iter()
            .filter(|s| s.len() == half)
            .count()
    }

    /// Certifies the forbidden square-centraliser configuration is absent:
    /// returns true iff there are `h` in the group and `x` in `inertia` with
    /// `h²x ≠ xh²`.
    pub fn square_centralizer_check(&self, inertia: &[Perm]) -> Result<bool, PermRepError> {
        if inertia.iter().any(|x| !self.contains(x)) {
            return Err(PermRepError::NotASubgroup);
        }
        Ok(self.elements.iter().any(|h| {
            let h2 = h.compose(h);
            inertia
                .iter()
                .any(|x| h2.compose(x) != x.compose(&h2))
        }))
    }
}

/// Closure of `{a, b}` under composition, as a sorted element list.
pub(crate) fn close_pair(a: Perm, b: Perm) -> Vec<Perm> {
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert(Perm::identity());
    let mut frontier = alloc::vec![Perm::identity()];
    while let Some(g) = frontier.pop() {
        for gen in [a, b] {
            let next = g.compose(&gen);
            if set.insert(next) {
                frontier.push(next);
            }
        }
    }
    set.into_iter().collect()
}

fn conjugacy_classes(elements: &[Perm]) -> Vec<ConjugacyClass> {
    let mut remaining: BTreeSet<Perm> = elements.iter().copied().collect();
    let mut classes = Vec::new();
    while let Some(&seed) = remaining.iter().next() {
        let members: BTreeSet<Perm> = elements.iter().map(|g| seed.conjugate_by(g)).collect();
        for m in &members {
            remaining.remove(m);
        }
        classes.push(ConjugacyClass {
            members: members.into_iter().collect(),
        });
    }
    // BTreeSet iteration took seeds in lex order, so classes are already
    // ordered by their least member; assert rather than re-sort.
    debug_assert!(classes
        .windows(2)
        .all(|w| w[0].representative() < w[1].representative()));
    classes
}

fn fingerprint_elements(elements: &[Perm]) -> u64 {
    // FNV-1a over the image bytes of the sorted element list.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for e in elements {
        for p in 0..5 {
            h ^= e.apply(p) as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
    }
    h
}

/// Builds one of the supported groups as a concrete permutation group.
///
/// Degrees: S4 acts on 4 points, A5 on 5, `Dihedral(d)` on the d-gon
/// (the Klein four group, d = 2, acts on 4 points), `Cyclic(d)` on d points.
/// Only d ≤ 5 fits on five points.
pub fn build_group(tag: GroupTag) -> Result<PermGroup, PermRepError> {
    match tag {
        GroupTag::S4 => {
            let t = Perm::from_cycles(&[&[0, 1]]).unwrap();
            let c = Perm::from_cycles(&[&[0, 1, 2, 3]]).unwrap();
            Ok(PermGroup::from_generators(4, alloc::vec![t, c]))
        }
        GroupTag::A5 => {
            let c3 = Perm::from_cycles(&[&[0, 1, 2]]).unwrap();
            let c5 = Perm::from_cycles(&[&[0, 1, 2, 3, 4]]).unwrap();
            Ok(PermGroup::from_generators(5, alloc::vec![c3, c5]))
        }
        GroupTag::Dihedral(d) => match d {
            0 => Err(PermRepError::UnsupportedInstance {
                what: String::from("dihedral group needs d >= 1"),
            }),
            1 => {
                let s = Perm::from_cycles(&[&[0, 1]]).unwrap();
                Ok(PermGroup::from_generators(2, alloc::vec![s]))
            }
            2 => {
                let a = Perm::from_cycles(&[&[0, 1]]).unwrap();
                let b = Perm::from_cycles(&[&[2, 3]]).unwrap();
                Ok(PermGroup::from_generators(4, alloc::vec![a, b]))
            }
            3..=5 => {
                let d = d as usize;
                let mut rot = [0u8, 1, 2, 3, 4];
                for i in 0..d {
                    rot[i] = ((i + 1) % d) as u8;
                }
                let mut refl = [0u8, 1, 2, 3, 4];
                for i in 0..d {
                    refl[i] = ((d - i) % d) as u8;
                }
                let r = Perm::from_images(rot).unwrap();
                let s = Perm::from_images(refl).unwrap();
                Ok(PermGroup::from_generators(d, alloc::vec![r, s]))
            }
            _ => Err(PermRepError::UnsupportedInstance {
                what: alloc::format!("dihedral group of order {} needs more than 5 points", 2 * d),
            }),
        },
        GroupTag::Cyclic(d) => match d {
            0 => Err(PermRepError::UnsupportedInstance {
                what: String::from("cyclic group needs d >= 1"),
            }),
            1 => Ok(PermGroup::from_generators(1, Vec::new())),
            2..=5 => {
                let d = d as usize;
                let mut rot = [0u8, 1, 2, 3, 4];
                for i in 0..d {
                    rot[i] = ((i + 1) % d) as u8;
                }
                Ok(PermGroup::from_generators(
                    d,
                    alloc::vec![Perm::from_images(rot).unwrap()],
                ))
            }
            _ => Err(PermRepError::UnsupportedInstance {
                what: alloc::format!("cyclic group of order {} needs more than 5 points", d),
            }),
        },
    }
}

/// Conjugacy-class partition of a set of subgroups (each a sorted element
/// list) under the ambient group. Classes and their members are ordered
/// lexicographically, so `classes[i][0]` is a canonical representative.
pub(crate) fn subgroup_conjugacy_classes(
    ambient: &PermGroup,
    subgroups: &[Vec<Perm>],
) -> Vec<Vec<Vec<Perm>>> {
    let index: BTreeMap<&Vec<Perm>, usize> =
        subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut assigned = alloc::vec![false; subgroups.len()];
    let mut classes = Vec::new();
    for (i, sub) in subgroups.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut orbit: BTreeSet<Vec<Perm>> = BTreeSet::new();
        for g in ambient.elements() {
            let mut image: Vec<Perm> = sub.iter().map(|h| h.conjugate_by(g)).collect();
            image.sort_unstable();
            orbit.insert(image);
        }
        for member in &orbit {
            if let Some(&j) = index.get(member) {
                assigned[j] = true;
            }
        }
        classes.push(orbit.into_iter().collect::<Vec<_>>());
    }
    classes
}
