//! Exact character theory: tables, induction, restriction, inner products
//! and decomposition into irreducibles.
//!
//! Tables are available for every group whose irreducible characters have
//! values in Q(√5): S4, A5, the dihedral groups D4..D10 and the cyclic
//! groups of order ≤ 2. Asking for a table of Z/3, Z/4, Z/5 or A4 (values in
//! cyclotomic fields) is an `UnsupportedInstance` error; induction and inner
//! products still work against such subgroups because they only need the
//! class-function values, not a table.

use alloc::string::String;
use alloc::vec::Vec;

use super::group::{GroupKind, PermGroup};
use super::perm::Perm;
use super::quad::QuadValue;
use super::PermRepError;

// Irreducible-character labels for S4. `CHI5` is the unique two-dimensional
// character; `CHI_PERP` is the orthogonal complement of the trivial
// character in the defining four-point representation.
pub const TRIV: &str = "triv";
pub const SGN: &str = "sgn";
pub const CHI5: &str = "chi5";
pub const CHI_PERP: &str = "chi_perp";
pub const CHI_PERP_SGN: &str = "chi_perp_sgn";

// A5 labels: the two golden-ratio three-dimensional characters, the
// four-dimensional and the five-dimensional one.
pub const CHI3A: &str = "chi3a";
pub const CHI3B: &str = "chi3b";
pub const CHI4: &str = "chi4";
pub const A5_CHI5: &str = "chi5";

// Dihedral labels. `ETA` is the character with kernel the rotation
// subgroup; `CHI_BOX` is the unique two-dimensional character of D8.
pub const ETA: &str = "eta";
pub const CHI_BOX: &str = "chi_box";

/// An exact class function: one Q(√5) value per conjugacy class, in the
/// class order of its group. The fingerprint ties the function to the group
/// it was built on so that cross-group arithmetic is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub label: Option<String>,
    values: Vec<QuadValue>,
    group_fingerprint: u64,
}

impl ClassFunction {
    pub fn new(group: &PermGroup, values: Vec<QuadValue>, label: Option<String>) -> Self {
        assert_eq!(
            values.len(),
            group.class_count(),
            "one value per conjugacy class"
        );
        ClassFunction {
            label,
            values,
            group_fingerprint: group.fingerprint(),
        }
    }

    pub fn values(&self) -> &[QuadValue] {
        &self.values
    }

    pub fn value(&self, class_index: usize) -> QuadValue {
        self.values[class_index]
    }

    /// Value at the identity.
    pub fn degree(&self, group: &PermGroup) -> QuadValue {
        let id_class = group
            .class_of(&Perm::identity())
            .expect("identity is in some class");
        self.values[id_class]
    }

    pub fn matches_group(&self, group: &PermGroup) -> bool {
        self.group_fingerprint == group.fingerprint() && self.values.len() == group.class_count()
    }

    fn check_group(&self, group: &PermGroup) -> Result<(), PermRepError> {
        if self.matches_group(group) {
            Ok(())
        } else {
            Err(PermRepError::GroupMismatch)
        }
    }

    /// Pointwise sum (same group).
    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, PermRepError> {
        if self.group_fingerprint != other.group_fingerprint
            || self.values.len() != other.values.len()
        {
            return Err(PermRepError::GroupMismatch);
        }
        Ok(ClassFunction {
            label: None,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a + *b)
                .collect(),
            group_fingerprint: self.group_fingerprint,
        })
    }

    pub fn relabel(mut self, label: &str) -> ClassFunction {
        self.label = Some(String::from(label));
        self
    }
}

/// Complete list of irreducible characters with exact values.
pub fn character_table(group: &PermGroup) -> Result<Vec<ClassFunction>, PermRepError> {
    match group.kind() {
        GroupKind::Trivial => Ok(alloc::vec![ClassFunction::new(
            group,
            alloc::vec![QuadValue::one()],
            Some(String::from(TRIV)),
        )]),
        GroupKind::Cyclic(2) => {
            let values: Vec<QuadValue> = group
                .classes()
                .iter()
                .map(|c| {
                    if c.representative().is_identity() {
                        QuadValue::one()
                    } else {
                        QuadValue::from_int(-1)
                    }
                })
                .collect();
            Ok(alloc::vec![
                ClassFunction::new(
                    group,
                    alloc::vec![QuadValue::one(); 2],
                    Some(String::from(TRIV))
                ),
                ClassFunction::new(group, values, Some(String::from(SGN))),
            ])
        }
        GroupKind::Cyclic(d) => Err(PermRepError::UnsupportedInstance {
            what: alloc::format!("character values of Z/{} lie outside Q(√5)", d),
        }),
        GroupKind::Dihedral(d) if (2..=5).contains(&d) => dihedral_table(group, d),
        GroupKind::Dihedral(d) => Err(PermRepError::UnsupportedInstance {
            what: alloc::format!("character values of D{} lie outside Q(√5)", 2 * d),
        }),
        GroupKind::S4 => Ok(s4_table(group)),
        GroupKind::A5 => Ok(a5_table(group)),
        GroupKind::A4 => Err(PermRepError::UnsupportedInstance {
            what: String::from("character values of A4 lie outside Q(√5)"),
        }),
        GroupKind::Other => Err(PermRepError::UnsupportedInstance {
            what: String::from("no character table for this group structure"),
        }),
    }
}

fn s4_table(group: &PermGroup) -> Vec<ClassFunction> {
    // Row values indexed by cycle type: [e, (ab), (ab)(cd), (abc), (abcd)].
    let rows: [(&str, [i64; 5]); 5] = [
        (TRIV, [1, 1, 1, 1, 1]),
        (SGN, [1, -1, 1, 1, -1]),
        (CHI5, [2, 0, 2, -1, 0]),
        (CHI_PERP, [3, 1, -1, 0, -1]),
        (CHI_PERP_SGN, [3, -1, -1, 0, 1]),
    ];
    let type_index = |rep: &Perm| -> usize {
        match rep.cycle_type().as_slice() {
            [] => 0,
            [2] => 1,
            [2, 2] => 2,
            [3] => 3,
            [4] => 4,
            other => unreachable!("impossible S4 cycle type {:?}", other),
        }
    };
    rows.iter()
        .map(|(label, vals)| {
            let values = group
                .classes()
                .iter()
                .map(|c| QuadValue::from_int(vals[type_index(c.representative())]))
                .collect();
            ClassFunction::new(group, values, Some(String::from(*label)))
        })
        .collect()
}

fn a5_table(group: &PermGroup) -> Vec<ClassFunction> {
    // The two five-cycle classes are separated by which one contains the
    // standard five-cycle (1 2 3 4 5); that class is "5a".
    let std_five = Perm::from_cycles(&[&[0, 1, 2, 3, 4]]).unwrap();
    let five_a = group.class_of(&std_five).expect("A5 contains (1 2 3 4 5)");
    let phi = QuadValue::golden();
    let phi_bar = QuadValue::golden_conj();

    let class_value = |rep_class: usize, rep: &Perm, label: &str| -> QuadValue {
        let t = rep.cycle_type();
        match (label, t.as_slice()) {
            (TRIV, _) => QuadValue::one(),
            (CHI3A, []) => QuadValue::from_int(3),
            (CHI3A, [2, 2]) => QuadValue::from_int(-1),
            (CHI3A, [3]) => QuadValue::zero(),
            (CHI3A, [5]) => {
                if rep_class == five_a {
                    phi
                } else {
                    phi_bar
                }
            }
            (CHI3B, []) => QuadValue::from_int(3),
            (CHI3B, [2, 2]) => QuadValue::from_int(-1),
            (CHI3B, [3]) => QuadValue::zero(),
            (CHI3B, [5]) => {
                if rep_class == five_a {
                    phi_bar
                } else {
                    phi
                }
            }
            (CHI4, []) => QuadValue::from_int(4),
            (CHI4, [2, 2]) => QuadValue::zero(),
            (CHI4, [3]) => QuadValue::one(),
            (CHI4, [5]) => QuadValue::from_int(-1),
            (A5_CHI5, []) => QuadValue::from_int(5),
            (A5_CHI5, [2, 2]) => QuadValue::one(),
            (A5_CHI5, [3]) => QuadValue::from_int(-1),
            (A5_CHI5, [5]) => QuadValue::zero(),
            other => unreachable!("impossible A5 class/label {:?}", other),
        }
    };

    [TRIV, CHI3A, CHI3B, CHI4, A5_CHI5]
        .iter()
        .map(|label| {
            let values = group
                .classes()
                .iter()
                .enumerate()
                .map(|(i, c)| class_value(i, c.representative(), label))
                .collect();
            ClassFunction::new(group, values, Some(String::from(*label)))
        })
        .collect()
}

/// Exact `2cos(2πt/d)` for the d needed here (values in Z or Z[(1+√5)/2]).
pub(crate) fn two_cos_2pi(t: u32, d: u32) -> QuadValue {
    let t = t % d;
    match (d, t.min(d - t)) {
        (_, 0) => QuadValue::from_int(2),
        (2, 1) => QuadValue::from_int(-2),
        (3, 1) => QuadValue::from_int(-1),
        (4, 1) => QuadValue::zero(),
        (4, 2) => QuadValue::from_int(-2),
        (5, 1) => QuadValue::from_parts(-1, 1, 2),
        (5, 2) => QuadValue::from_parts(-1, -1, 2),
        _ => unreachable!("2cos(2π·{}/{}) not representable in Q(√5)", t, d),
    }
}

/// Per-class structural data for a dihedral group: either the rotation
/// exponent (w.r.t. the canonical generator) or a reflection parity.
enum DihedralClassShape {
    Rotation(u32),
    Reflection(u32),
}

fn dihedral_shapes(group: &PermGroup, d: u32) -> (Perm, Vec<DihedralClassShape>) {
    let rotations = group.dihedral_axis().expect("dihedral group has an axis");
    let generator = *rotations
        .iter()
        .find(|g| g.order() == d)
        .expect("rotation subgroup is cyclic of order d");
    let base_reflection = *group
        .elements()
        .iter()
        .find(|g| rotations.binary_search(g).is_err())
        .expect("non-rotation element exists");
    let exponent_of = |target: &Perm, base: &Perm| -> Option<u32> {
        let mut acc = *base;
        for j in 0..d {
            if acc == *target {
                return Some(j);
            }
            acc = acc.compose(&generator);
        }
        None
    };
    let shapes = group
        .classes()
        .iter()
        .map(|c| {
            let rep = c.representative();
            if rotations.binary_search(rep).is_ok() {
                DihedralClassShape::Rotation(
                    exponent_of(rep, &Perm::identity()).expect("rotation is a generator power"),
                )
            } else {
                DihedralClassShape::Reflection(
                    exponent_of(rep, &base_reflection).expect("reflection in base coset") % 2,
                )
            }
        })
        .collect();
    (generator, shapes)
}

fn dihedral_table(group: &PermGroup, d: u32) -> Result<Vec<ClassFunction>, PermRepError> {
    if d == 2 {
        return Ok(klein_table(group));
    }
    let (_gen, shapes) = dihedral_shapes(group, d);
    let mut rows: Vec<ClassFunction> = Vec::new();

    let one_dim = |rot: &dyn Fn(u32) -> i64, refl: &dyn Fn(u32) -> i64| -> Vec<QuadValue> {
        shapes
            .iter()
            .map(|s| match s {
                DihedralClassShape::Rotation(j) => QuadValue::from_int(rot(*j)),
                DihedralClassShape::Reflection(par) => QuadValue::from_int(refl(*par)),
            })
            .collect()
    };

    rows.push(ClassFunction::new(
        group,
        one_dim(&|_| 1, &|_| 1),
        Some(String::from(TRIV)),
    ));
    rows.push(ClassFunction::new(
        group,
        one_dim(&|_| 1, &|_| -1),
        Some(String::from(ETA)),
    ));
    if d % 2 == 0 {
        let sign = |j: u32| if j % 2 == 0 { 1 } else { -1 };
        rows.push(ClassFunction::new(
            group,
            one_dim(&sign, &|par| sign(par)),
            Some(String::from("psi")),
        ));
        rows.push(ClassFunction::new(
            group,
            one_dim(&sign, &|par| -sign(par)),
            Some(String::from("psi_eta")),
        ));
    }
    let two_dim_count = if d % 2 == 0 { d / 2 - 1 } else { (d - 1) / 2 };
    for m in 1..=two_dim_count {
        let values = shapes
            .iter()
            .map(|s| match s {
                DihedralClassShape::Rotation(j) => two_cos_2pi(m * j, d),
                DihedralClassShape::Reflection(_) => QuadValue::zero(),
            })
            .collect();
        let label = if d == 4 {
            String::from(CHI_BOX)
        } else {
            alloc::format!("w{}", m)
        };
        rows.push(ClassFunction::new(group, values, Some(label)));
    }
    Ok(rows)
}

fn klein_table(group: &PermGroup) -> Vec<ClassFunction> {
    // All four classes are singletons; the three nontrivial characters are
    // indexed by which involution (in lex order) they are trivial on.
    let involutions: Vec<Perm> = group
        .elements()
        .iter()
        .copied()
        .filter(|g| !g.is_identity())
        .collect();
    let mut rows = alloc::vec![ClassFunction::new(
        group,
        alloc::vec![QuadValue::one(); 4],
        Some(String::from(TRIV)),
    )];
    for (i, kernel_gen) in involutions.iter().enumerate() {
        let values = group
            .classes()
            .iter()
            .map(|c| {
                let rep = c.representative();
                if rep.is_identity() || rep == kernel_gen {
                    QuadValue::one()
                } else {
                    QuadValue::from_int(-1)
                }
            })
            .collect();
        rows.push(ClassFunction::new(
            group,
            values,
            Some(alloc::format!("chi{}", i + 1)),
        ));
    }
    rows
}

/// Frobenius induction: `Ind χ(g) = (1/|H|) Σ_{x∈G, x⁻¹gx∈H} χ(x⁻¹gx)`.
pub fn induce(
    chi: &ClassFunction,
    sub: &PermGroup,
    ambient: &PermGroup,
) -> Result<ClassFunction, PermRepError> {
    chi.check_group(sub)?;
    if !sub.is_subgroup_of(ambient) {
        return Err(PermRepError::NotASubgroup);
    }
    let values = ambient
        .classes()
        .iter()
        .map(|class| {
            let g = class.representative();
            let mut acc = QuadValue::zero();
            for x in ambient.elements() {
                let conj = g.conjugate_by(&x.inverse());
                if let Some(idx) = sub.class_of(&conj) {
                    acc += chi.value(idx);
                }
            }
            acc.div_rational(sub.order() as i64)
        })
        .collect();
    Ok(ClassFunction::new(ambient, values, None))
}

/// Restriction along a subgroup inclusion; values are copied by membership.
pub fn restrict(
    chi: &ClassFunction,
    ambient: &PermGroup,
    sub: &PermGroup,
) -> Result<ClassFunction, PermRepError> {
    chi.check_group(ambient)?;
    if !sub.is_subgroup_of(ambient) {
        return Err(PermRepError::NotASubgroup);
    }
    let values = sub
        .classes()
        .iter()
        .map(|class| {
            let idx = ambient
                .class_of(class.representative())
                .expect("subgroup element lies in an ambient class");
            chi.value(idx)
        })
        .collect();
    Ok(ClassFunction::new(sub, values, chi.label.clone()))
}

/// Class-weighted inner product `(1/|G|) Σ_c |c| χ(c) ψ(c)`. All character
/// values here are real, so no conjugation is involved.
pub fn inner_product(
    chi: &ClassFunction,
    psi: &ClassFunction,
    group: &PermGroup,
) -> Result<QuadValue, PermRepError> {
    chi.check_group(group)?;
    psi.check_group(group)?;
    let mut acc = QuadValue::zero();
    for (i, class) in group.classes().iter().enumerate() {
        acc += QuadValue::from_int(class.size() as i64) * chi.value(i) * psi.value(i);
    }
    Ok(acc.div_rational(group.order() as i64))
}

/// Decomposition into irreducibles as `(label, multiplicity)` pairs in table
/// order, zero multiplicities omitted. Fails with `NotACharacter` when some
/// multiplicity is not a non-negative integer or the multiset does not
/// reconstruct the input.
pub fn decompose(
    chi: &ClassFunction,
    group: &PermGroup,
) -> Result<Vec<(String, u32)>, PermRepError> {
    chi.check_group(group)?;
    let table = character_table(group)?;
    let mut result = Vec::new();
    let mut reconstruction = alloc::vec![QuadValue::zero(); group.class_count()];
    for irr in &table {
        let m = inner_product(chi, irr, group)?;
        let m_int = m.as_integer().ok_or(PermRepError::NotACharacter)?;
        if m_int < 0 {
            return Err(PermRepError::NotACharacter);
        }
        if m_int > 0 {
            result.push((
                irr.label.clone().unwrap_or_else(|| String::from("?")),
                m_int as u32,
            ));
            for (slot, v) in reconstruction.iter_mut().zip(irr.values()) {
                *slot += QuadValue::from_int(m_int) * *v;
            }
        }
    }
    if reconstruction != chi.values() {
        return Err(PermRepError::NotACharacter);
    }
    Ok(result)
}

/// Plain-text character table: classes across the top (representative and
/// size), one aligned row per irreducible.
pub fn render_character_table(group: &PermGroup, table: &[ClassFunction]) -> String {
    let mut headers: Vec<String> = alloc::vec![String::from("class")];
    headers.extend(
        group
            .classes()
            .iter()
            .map(|c| c.representative().cycle_string()),
    );
    let mut size_row: Vec<String> = alloc::vec![String::from("size")];
    size_row.extend(group.classes().iter().map(|c| alloc::format!("{}", c.size())));
    let mut rows: Vec<Vec<String>> = alloc::vec![headers, size_row];
    for chi in table {
        let mut row = alloc::vec![chi.label.clone().unwrap_or_else(|| String::from("?"))];
        row.extend(chi.values().iter().map(|v| alloc::format!("{}", v)));
        rows.push(row);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                out.push_str(cell);
                for _ in 0..pad {
                    out.push(' ');
                }
            } else {
                for _ in 0..pad {
                    out.push(' ');
                }
                out.push_str(cell);
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permrep::group::{build_group, GroupTag};
    use alloc::vec;

    fn s4() -> PermGroup {
        build_group(GroupTag::S4).unwrap()
    }

    fn a5() -> PermGroup {
        build_group(GroupTag::A5).unwrap()
    }

    /// The subgroup generated by the transposition (1 2), inside S4.
    fn transposition_subgroup() -> PermGroup {
        PermGroup::from_generators(4, vec![Perm::from_cycles(&[&[0, 1]]).unwrap()])
    }

    fn d8_in_s4() -> PermGroup {
        PermGroup::from_generators(
            4,
            vec![
                Perm::from_cycles(&[&[0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(&[&[0, 2]]).unwrap(),
            ],
        )
    }

    fn degrees(group: &PermGroup, table: &[ClassFunction]) -> alloc::vec::Vec<i64> {
        let mut d: alloc::vec::Vec<i64> = table
            .iter()
            .map(|chi| chi.degree(group).as_integer().unwrap())
            .collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn s4_table_shape_and_orthogonality() {
        let g = s4();
        let table = character_table(&g).unwrap();
        assert_eq!(degrees(&g, &table), vec![1, 1, 2, 3, 3]);
        for (i, chi) in table.iter().enumerate() {
            for (j, psi) in table.iter().enumerate() {
                let expected = QuadValue::from_int((i == j) as i64);
                assert_eq!(inner_product(chi, psi, &g).unwrap(), expected);
            }
        }
    }

    #[test]
    fn a5_table_shape_and_orthogonality() {
        let g = a5();
        let table = character_table(&g).unwrap();
        assert_eq!(degrees(&g, &table), vec![1, 3, 3, 4, 5]);
        for (i, chi) in table.iter().enumerate() {
            for (j, psi) in table.iter().enumerate() {
                let expected = QuadValue::from_int((i == j) as i64);
                assert_eq!(inner_product(chi, psi, &g).unwrap(), expected);
            }
        }
        // The two 3-dimensional characters take the golden values on the
        // five-cycles.
        let chi3a = table.iter().find(|c| c.label.as_deref() == Some(CHI3A)).unwrap();
        let has_phi = chi3a.values().iter().any(|v| *v == QuadValue::golden());
        let has_phi_bar = chi3a
            .values()
            .iter()
            .any(|v| *v == QuadValue::golden_conj());
        assert!(has_phi && has_phi_bar);
    }

    #[test]
    fn dihedral_tables() {
        for d in 2u32..=5 {
            let g = build_group(GroupTag::Dihedral(d)).unwrap();
            let table = character_table(&g).unwrap();
            assert_eq!(table.len(), g.class_count());
            for (i, chi) in table.iter().enumerate() {
                for (j, psi) in table.iter().enumerate() {
                    let expected = QuadValue::from_int((i == j) as i64);
                    assert_eq!(inner_product(chi, psi, &g).unwrap(), expected, "d={}", d);
                }
            }
        }
        // D8 has a unique two-dimensional character.
        let d8 = build_group(GroupTag::Dihedral(4)).unwrap();
        let table = character_table(&d8).unwrap();
        let two_dims: alloc::vec::Vec<_> = table
            .iter()
            .filter(|c| c.degree(&d8) == QuadValue::from_int(2))
            .collect();
        assert_eq!(two_dims.len(), 1);
        assert_eq!(two_dims[0].label.as_deref(), Some(CHI_BOX));
    }

    #[test]
    fn cyclic_tables() {
        let c2 = build_group(GroupTag::Cyclic(2)).unwrap();
        let table = character_table(&c2).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table[1].label.as_deref(), Some(SGN));
        assert!(table[1].values().contains(&QuadValue::from_int(-1)));
        // Values of Z/3 live in Q(ω), not Q(√5).
        let c3 = build_group(GroupTag::Cyclic(3)).unwrap();
        assert!(matches!(
            character_table(&c3),
            Err(PermRepError::UnsupportedInstance { .. })
        ));
    }

    #[test]
    fn induction_from_a_transposition() {
        let g = s4();
        let i = transposition_subgroup();
        let sgn_i = character_table(&i).unwrap().pop().unwrap();
        let induced = induce(&sgn_i, &i, &g).unwrap();
        assert_eq!(induced.degree(&g), QuadValue::from_int(12));
        let parts = decompose(&induced, &g).unwrap();
        assert_eq!(
            parts,
            vec![
                (String::from(SGN), 1),
                (String::from(CHI5), 1),
                (String::from(CHI_PERP), 1),
                (String::from(CHI_PERP_SGN), 2),
            ]
        );
        // Multiplicity of chi_perp ⊗ sgn read off directly.
        let table = character_table(&g).unwrap();
        let cps = table
            .iter()
            .find(|c| c.label.as_deref() == Some(CHI_PERP_SGN))
            .unwrap();
        assert_eq!(
            inner_product(&induced, cps, &g).unwrap(),
            QuadValue::from_int(2)
        );
    }

    #[test]
    fn induction_of_chi_box_from_d8() {
        let g = s4();
        let d8 = d8_in_s4();
        let table = character_table(&d8).unwrap();
        let chi_box = table
            .iter()
            .find(|c| c.label.as_deref() == Some(CHI_BOX))
            .unwrap();
        let induced = induce(chi_box, &d8, &g).unwrap();
        let parts = decompose(&induced, &g).unwrap();
        assert_eq!(
            parts,
            vec![
                (String::from(CHI_PERP), 1),
                (String::from(CHI_PERP_SGN), 1),
            ]
        );
    }

    #[test]
    fn induction_identity_case() {
        let g = s4();
        let triv = character_table(&g).unwrap().swap_remove(0);
        let induced = induce(&triv, &g, &g).unwrap();
        assert_eq!(induced.values(), triv.values());
    }

    #[test]
    fn restriction_examples() {
        let g = s4();
        let table = character_table(&g).unwrap();
        let sgn = &table[1];
        let i = transposition_subgroup();
        let restricted = restrict(sgn, &g, &i).unwrap();
        // The sign of a transposition is -1.
        assert!(restricted.values().contains(&QuadValue::from_int(-1)));

        // Res of the two-dimensional character to A4 has values 2, 2, -1,
        // -1 on the classes of shapes e, (2,2), 3, 3.
        let a4 = PermGroup::from_elements(
            4,
            g.elements().iter().copied().filter(|p| p.is_even()).collect(),
        )
        .unwrap();
        let chi5 = table
            .iter()
            .find(|c| c.label.as_deref() == Some(CHI5))
            .unwrap();
        let res = restrict(chi5, &g, &a4).unwrap();
        for (idx, class) in a4.classes().iter().enumerate() {
            let expected = match class.representative().cycle_type().as_slice() {
                [] | [2, 2] => 2,
                [3] => -1,
                other => unreachable!("A4 class {:?}", other),
            };
            assert_eq!(res.value(idx), QuadValue::from_int(expected));
        }

        let triv = &table[0];
        let res_triv = restrict(triv, &g, &i).unwrap();
        assert!(res_triv.values().iter().all(|v| *v == QuadValue::one()));
    }

    #[test]
    fn inner_product_examples() {
        let g = s4();
        let table = character_table(&g).unwrap();
        let triv = &table[0];
        let sgn = &table[1];
        assert_eq!(inner_product(triv, sgn, &g).unwrap(), QuadValue::zero());
        let chi_perp = table
            .iter()
            .find(|c| c.label.as_deref() == Some(CHI_PERP))
            .unwrap();
        assert_eq!(
            inner_product(chi_perp, chi_perp, &g).unwrap(),
            QuadValue::one()
        );
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let g = s4();
        let table = character_table(&g).unwrap();
        let double_triv = table[0].add(&table[0]).unwrap();
        assert_eq!(
            decompose(&double_triv, &g).unwrap(),
            vec![(String::from(TRIV), 2)]
        );
        let mut values = alloc::vec![QuadValue::zero(); g.class_count()];
        values[0] = QuadValue::one();
        let not_char = ClassFunction::new(&g, values, None);
        assert_eq!(
            decompose(&not_char, &g),
            Err(PermRepError::NotACharacter)
        );
    }

    #[test]
    fn cross_group_arithmetic_is_rejected() {
        let g = s4();
        let h = a5();
        let chi = character_table(&g).unwrap().swap_remove(0);
        let psi = character_table(&h).unwrap().swap_remove(0);
        assert_eq!(
            inner_product(&chi, &psi, &g),
            Err(PermRepError::GroupMismatch)
        );
        // Non-subgroup containment is caught too.
        assert_eq!(induce(&psi, &h, &g), Err(PermRepError::NotASubgroup));
    }

    #[test]
    fn transitivity_of_induction() {
        // I = <(1 2)> inside the non-normal Klein group D = <(1 2), (3 4)>
        // inside S4: inducing in stages agrees with inducing directly.
        let g = s4();
        let i = transposition_subgroup();
        let d = PermGroup::from_generators(
            4,
            vec![
                Perm::from_cycles(&[&[0, 1]]).unwrap(),
                Perm::from_cycles(&[&[2, 3]]).unwrap(),
            ],
        );
        let sgn_i = character_table(&i).unwrap().pop().unwrap();
        let staged = induce(&induce(&sgn_i, &i, &d).unwrap(), &d, &g).unwrap();
        let direct = induce(&sgn_i, &i, &g).unwrap();
        assert_eq!(staged.values(), direct.values());
    }

    #[test]
    fn index_two_irreducibility_criterion() {
        // For H of index 2 and a 1-dimensional character χ of H, Ind χ is
        // irreducible iff χ differs from its conjugate by the outer coset.
        let d8 = d8_in_s4();
        // The Klein subgroup {e, r², s, r²s} of D8, with r = (1 2 3 4) and
        // s = (1 3).
        let s = Perm::from_cycles(&[&[0, 2]]).unwrap();
        let r2 = Perm::from_cycles(&[&[0, 2], &[1, 3]]).unwrap();
        let klein = PermGroup::from_elements(
            4,
            vec![Perm::identity(), s, r2, s.compose(&r2)],
        )
        .unwrap();
        assert_eq!(klein.order(), 4);
        assert!(klein.is_subgroup_of(&d8));
        let outer = d8
            .elements()
            .iter()
            .find(|g| !klein.contains(g))
            .copied()
            .unwrap();
        for chi in character_table(&klein).unwrap() {
            let induced = induce(&chi, &klein, &d8).unwrap();
            let norm = inner_product(&induced, &induced, &d8).unwrap();
            let conjugated_values: alloc::vec::Vec<QuadValue> = klein
                .classes()
                .iter()
                .map(|c| {
                    let moved = c.representative().conjugate_by(&outer);
                    chi.value(klein.class_of(&moved).unwrap())
                })
                .collect();
            let fixed_by_outer = conjugated_values == chi.values();
            if fixed_by_outer {
                assert_ne!(norm, QuadValue::one(), "{:?}", chi.label);
            } else {
                assert_eq!(norm, QuadValue::one(), "{:?}", chi.label);
            }
        }
    }

    #[test]
    fn render_contains_classes_and_labels() {
        let g = s4();
        let table = character_table(&g).unwrap();
        let text = render_character_table(&g, &table);
        assert!(text.contains("class"));
        assert!(text.contains("size"));
        assert!(text.contains("chi_perp"));
        assert!(text.contains("(1 2 3 4)"));
    }
}
