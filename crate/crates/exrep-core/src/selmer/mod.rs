//! The finite character-theoretic shadow of the vanishing argument:
//! W and ad⁰ as characters of the decomposition group, Hom_D(C, W)
//! dimensions via Frobenius reciprocity (computed on both sides of the
//! reciprocity isomorphism and compared), class-number fixtures, the nicely
//! exceptional predicate and the vanishing verdict combinator.
//!
//! No Galois cohomology is computed anywhere; every cohomological statement
//! enters either as a finite group-theoretic certificate or as a fixture.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::locus::{gdi_admissible_pairs, DecompositionDatum, LocusError, ProjectiveTag};
use crate::permrep::{
    character_table, decompose, induce, inner_product, restrict, ClassFunction, Perm, PermGroup,
    PermRepError, QuadValue,
};

mod fixture;

pub use fixture::{
    lattice_labels, required_labels, ClassGroupFixture, ClassNumber, FixtureEntry,
    NicelyExceptionalVerdict, RequirementWitness,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelmerError {
    /// Asked for local characters of a pair the enumeration rejected.
    InadmissiblePair { reason: String },
    /// Fixture / class-module data attached to the wrong group.
    GroupMismatch,
    /// Fixture violates its schema (unknown label, wrong degree, p | |G|).
    MalformedFixture { why: String },
    /// Fixture contradicts the subfield lifting rule.
    InconsistentFixture { why: String },
    /// A class-module character references an unknown irreducible label.
    UnknownCharacterLabel { label: String },
    PermRep(PermRepError),
    Locus(LocusError),
}

impl fmt::Display for SelmerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelmerError::InadmissiblePair { reason } => {
                write!(f, "inadmissible decomposition pair: {}", reason)
            }
            SelmerError::GroupMismatch => write!(f, "data belongs to a different group"),
            SelmerError::MalformedFixture { why } => write!(f, "malformed fixture: {}", why),
            SelmerError::InconsistentFixture { why } => {
                write!(f, "inconsistent fixture: {}", why)
            }
            SelmerError::UnknownCharacterLabel { label } => {
                write!(f, "unknown irreducible character label '{}'", label)
            }
            SelmerError::PermRep(e) => write!(f, "{}", e),
            SelmerError::Locus(e) => write!(f, "{}", e),
        }
    }
}

impl From<PermRepError> for SelmerError {
    fn from(e: PermRepError) -> Self {
        SelmerError::PermRep(e)
    }
}

impl From<LocusError> for SelmerError {
    fn from(e: LocusError) -> Self {
        SelmerError::Locus(e)
    }
}

/// Metadata tags for the Selmer conditions; no cohomology is computed, the
/// tags only document which condition a statement refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SelmerConditionTag {
    L,
    M,
    N,
    Sigma,
}

impl SelmerConditionTag {
    pub fn description(&self) -> &'static str {
        match self {
            SelmerConditionTag::L => {
                "classes unramified at all finite places and vanishing at places dividing p"
            }
            SelmerConditionTag::M => "classes unramified at all finite places",
            SelmerConditionTag::N => {
                "classes unramified away from places dividing p and infinity"
            }
            SelmerConditionTag::Sigma => {
                "classes unramified outside p whose restriction at p lands in the eta line"
            }
        }
    }
}

/// The characters of the decomposition group attached to an admissible
/// pair: W = Ind_I^D(order-d character), the quadratic character eta with
/// kernel I, and ad⁰ = eta + W.
#[derive(Clone, Debug)]
pub struct LocalCharacters {
    pub decomposition_group: PermGroup,
    pub w: ClassFunction,
    pub eta: ClassFunction,
    pub ad0: ClassFunction,
}

/// Rotation exponent of an element of I w.r.t. the canonical generator.
fn inertia_exponent(gen: &Perm, target: &Perm, d: u64) -> Option<u32> {
    let mut acc = Perm::identity();
    for j in 0..d as u32 {
        if acc == *target {
            return Some(j);
        }
        acc = acc.compose(gen);
    }
    None
}

fn admissible_d_group(datum: &DecompositionDatum) -> Result<PermGroup, SelmerError> {
    if !datum.admissible {
        return Err(SelmerError::InadmissiblePair {
            reason: datum
                .rejection
                .map(|r| String::from(r.message()))
                .unwrap_or_else(|| String::from("rejected by the pair enumeration")),
        });
    }
    let degree = datum.global.build().degree();
    Ok(PermGroup::from_elements(
        degree,
        datum.decomposition.elements.clone(),
    )?)
}

/// The class function `g ↦ tr(g̃)·tr(g̃⁻¹) - 1` on D, for a 2×2 lift g̃ of
/// the projective action: a determinant-one lift of a rotation g = r^j has
/// `tr(g̃)·tr(g̃⁻¹) = tr(g̃)² = tr(g̃²) + 2` by Cayley–Hamilton, with g̃²
/// lifting the rotation of angle 2πj/d, and reflection lifts are
/// traceless. This is the direct route to the ad⁰ character, against which
/// the η + W decomposition is checked.
pub fn lift_trace_ad0(
    datum: &DecompositionDatum,
) -> Result<(PermGroup, ClassFunction), SelmerError> {
    let d_group = admissible_d_group(datum)?;
    let generator = datum.inertia_generator();
    let in_inertia = |g: &Perm| datum.inertia_elements.binary_search(g).is_ok();
    let values = d_group
        .classes()
        .iter()
        .map(|class| {
            let rep = class.representative();
            if in_inertia(rep) {
                let j = inertia_exponent(&generator, rep, datum.d)
                    .expect("inertia element is a generator power");
                crate::permrep::two_cos_2pi(j, datum.d as u32) + QuadValue::one()
            } else {
                QuadValue::from_int(-1)
            }
        })
        .collect();
    Ok((
        d_group.clone(),
        ClassFunction::new(&d_group, values, Some(String::from("ad0_trace"))),
    ))
}

/// Builds W, eta and ad⁰ on the decomposition group of an admissible pair.
///
/// W is induced from the faithful order-d character of I; its values are
/// `2cos(2πj/d)` on the rotation classes (exactly representable in Q(√5)
/// for d ≤ 5, even though the inducing character itself is not real) and 0
/// off I. The identity `ad⁰ = eta + W` is cross-checked against
/// [`lift_trace_ad0`].
pub fn local_characters(datum: &DecompositionDatum) -> Result<LocalCharacters, SelmerError> {
    let d_group = admissible_d_group(datum)?;
    let d = datum.d;
    let generator = datum.inertia_generator();
    let in_inertia = |g: &Perm| datum.inertia_elements.binary_search(g).is_ok();

    let mut w_values = Vec::with_capacity(d_group.class_count());
    let mut eta_values = Vec::with_capacity(d_group.class_count());
    for class in d_group.classes() {
        let rep = class.representative();
        if in_inertia(rep) {
            let j = inertia_exponent(&generator, rep, d)
                .expect("inertia element is a generator power");
            w_values.push(crate::permrep::two_cos_2pi(j, d as u32));
            eta_values.push(QuadValue::one());
        } else {
            w_values.push(QuadValue::zero());
            eta_values.push(QuadValue::from_int(-1));
        }
    }
    let w = ClassFunction::new(&d_group, w_values, Some(String::from("w")));
    let eta = ClassFunction::new(&d_group, eta_values, Some(String::from("eta")));
    let ad0 = w.add(&eta)?.relabel("ad0");
    let (_, trace) = lift_trace_ad0(datum)?;
    assert_eq!(
        ad0.values(),
        trace.values(),
        "ad0 disagrees with the lift trace formula"
    );
    assert_eq!(ad0.degree(&d_group), QuadValue::from_int(3));
    Ok(LocalCharacters {
        decomposition_group: d_group,
        w,
        eta,
        ad0,
    })
}

/// The 2-dimensional character of W on D.
pub fn w_character(datum: &DecompositionDatum) -> Result<(PermGroup, ClassFunction), SelmerError> {
    let lc = local_characters(datum)?;
    Ok((lc.decomposition_group, lc.w))
}

/// The trace-zero adjoint character `eta + W` on D.
pub fn ad0_character(
    datum: &DecompositionDatum,
) -> Result<(PermGroup, ClassFunction), SelmerError> {
    let lc = local_characters(datum)?;
    Ok((lc.decomposition_group, lc.ad0))
}

/// Decomposition on D with pair-aware labels: the character with kernel I
/// is `eta`; for the Klein four group, the two characters nontrivial on I
/// are `rho1` and `rho2` (the abstract table cannot name them without
/// knowing I).
pub fn decompose_on_decomposition_group(
    datum: &DecompositionDatum,
    d_group: &PermGroup,
    chi: &ClassFunction,
) -> Result<Vec<(String, u32)>, SelmerError> {
    let table = character_table(d_group)?;
    let in_inertia = |g: &Perm| datum.inertia_elements.binary_search(g).is_ok();
    let trivial_on_inertia = |row: &ClassFunction| {
        d_group.classes().iter().enumerate().all(|(i, c)| {
            !in_inertia(c.representative()) || row.value(i) == QuadValue::one()
        })
    };
    let mut rho_counter = 0;
    let mut labels: Vec<String> = Vec::new();
    for row in &table {
        let degree = row.degree(d_group);
        let default = row.label.clone().unwrap_or_else(|| String::from("?"));
        let label = if degree == QuadValue::one() {
            if default == "triv" {
                default
            } else if trivial_on_inertia(row) {
                String::from("eta")
            } else if datum.d == 2 {
                rho_counter += 1;
                alloc::format!("rho{}", rho_counter)
            } else {
                default
            }
        } else {
            default
        };
        labels.push(label);
    }
    let mut out = Vec::new();
    for (row, label) in table.iter().zip(labels) {
        let m = inner_product(chi, row, d_group)?;
        let m_int = m.as_integer().ok_or(PermRepError::NotACharacter)?;
        if m_int < 0 {
            return Err(SelmerError::PermRep(PermRepError::NotACharacter));
        }
        if m_int > 0 {
            out.push((label, m_int as u32));
        }
    }
    Ok(out)
}

/// The character of the mod-p class module C, given by irreducible
/// multiplicities on the global group — or the trivial-zero module when
/// p does not divide h(L).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClassModuleCharacter {
    pub group: ProjectiveTag,
    pub kind: ClassModuleKind,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ClassModuleKind {
    /// C = 0 (p does not divide the class number of L).
    TrivialZero,
    /// Multiplicity of each irreducible label in C ⊗ k.
    Multiplicities(Vec<(String, u32)>),
}

impl ClassModuleCharacter {
    pub fn trivial_zero(group: ProjectiveTag) -> Self {
        ClassModuleCharacter {
            group,
            kind: ClassModuleKind::TrivialZero,
        }
    }

    pub fn with_multiplicities(group: ProjectiveTag, mults: Vec<(String, u32)>) -> Self {
        ClassModuleCharacter {
            group,
            kind: ClassModuleKind::Multiplicities(mults),
        }
    }

    /// Realises the character as a class function on the global group.
    fn class_function(&self, global: &PermGroup) -> Result<Option<ClassFunction>, SelmerError> {
        match &self.kind {
            ClassModuleKind::TrivialZero => Ok(None),
            ClassModuleKind::Multiplicities(mults) => {
                let table = character_table(global)?;
                let mut acc = ClassFunction::new(
                    global,
                    alloc::vec![QuadValue::zero(); global.class_count()],
                    None,
                );
                for (label, mult) in mults {
                    let row = table
                        .iter()
                        .find(|r| r.label.as_deref() == Some(label.as_str()))
                        .ok_or_else(|| SelmerError::UnknownCharacterLabel {
                            label: label.clone(),
                        })?;
                    let mut scaled = acc.clone();
                    for _ in 0..*mult {
                        scaled = scaled.add(row)?;
                    }
                    acc = scaled;
                }
                Ok(Some(acc))
            }
        }
    }
}

/// dim Hom_D(C, W), computed both as ⟨Res_D χ_C, χ_W⟩_D and as
/// ⟨χ_C, Ind_D^G χ_W⟩_G and asserted equal (Frobenius reciprocity is the
/// engine and its two sides are evaluated independently).
pub fn hom_dimension(
    c: &ClassModuleCharacter,
    datum: &DecompositionDatum,
) -> Result<u32, SelmerError> {
    if c.group != datum.global {
        return Err(SelmerError::GroupMismatch);
    }
    let global = datum.global.build();
    let Some(chi_c) = c.class_function(&global)? else {
        return Ok(0);
    };
    let lc = local_characters(datum)?;
    let restricted = restrict(&chi_c, &global, &lc.decomposition_group)?;
    let via_restriction = inner_product(&restricted, &lc.w, &lc.decomposition_group)?;
    let induced = induce(&lc.w, &lc.decomposition_group, &global)?;
    let via_induction = inner_product(&chi_c, &induced, &global)?;
    assert_eq!(
        via_restriction, via_induction,
        "Frobenius reciprocity failed"
    );
    let dim = via_restriction
        .as_integer()
        .ok_or(PermRepError::NotACharacter)?;
    if dim < 0 {
        return Err(SelmerError::PermRep(PermRepError::NotACharacter));
    }
    Ok(dim as u32)
}

/// Decomposition of Ind_D^G W into global irreducibles.
pub fn induced_w_decomposition(
    datum: &DecompositionDatum,
) -> Result<Vec<(String, u32)>, SelmerError> {
    let global = datum.global.build();
    let lc = local_characters(datum)?;
    let induced = induce(&lc.w, &lc.decomposition_group, &global)?;
    Ok(decompose(&induced, &global)?)
}

/// One constituent-to-subfield rule: why the named irreducible cannot
/// appear in C when p is coprime to the named subfield's class number.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConstituentRule {
    pub character: String,
    pub subfield: String,
    /// The subgroup has nonzero fixed vectors in this character — verified
    /// by averaging the character over the subgroup.
    pub fixed_space_dim: u32,
    /// True when no fixture entry is needed at all: the quadratic field's
    /// class number is smaller than p unconditionally.
    pub unconditional: bool,
    /// Coprimality for this subfield already follows from the named one
    /// (field containment).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implied_by: Option<String>,
}

/// The constituent-to-subfield map: for each nontrivial irreducible that
/// can appear in Ind_D^G W, the subfield whose class number controls it.
pub fn subfield_constituent_map(tag: ProjectiveTag) -> Vec<ConstituentRule> {
    let global = tag.build();
    let table = character_table(&global).expect("S4/A5 tables exist");
    let rules: &[(&str, &str, bool, Option<&str>)] = match tag {
        ProjectiveTag::S4 => &[
            ("sgn", "L^A4", true, None),
            ("chi_perp", "L^S3", false, None),
            ("chi_perp_sgn", "L^Z4", false, None),
            ("chi5", "L^D8", false, Some("L^Z4")),
        ],
        ProjectiveTag::A5 => &[
            ("chi3a", "L^Z5", false, None),
            ("chi3b", "L^Z5", false, None),
            ("chi4", "L^A4", false, None),
            ("chi5", "L^Z5", false, None),
        ],
    };
    rules
        .iter()
        .map(|(character, subfield, unconditional, implied_by)| {
            let chi = table
                .iter()
                .find(|r| r.label.as_deref() == Some(*character))
                .expect("rule names a table row");
            let subgroup = fixture::lattice_subgroup(tag, subfield)
                .expect("rule names a lattice subfield");
            let dim = fixed_space_dimension(&global, chi, &subgroup);
            assert!(dim >= 1, "constituent rule needs a fixed vector");
            ConstituentRule {
                character: String::from(*character),
                subfield: String::from(*subfield),
                fixed_space_dim: dim,
                unconditional: *unconditional,
                implied_by: implied_by.map(String::from),
            }
        })
        .collect()
}

/// dim of the H-fixed subspace of the character chi of G: the average of
/// chi over the elements of H. Works for any subgroup, table or not.
fn fixed_space_dimension(global: &PermGroup, chi: &ClassFunction, subgroup: &[Perm]) -> u32 {
    let mut acc = QuadValue::zero();
    for h in subgroup {
        let idx = global.class_of(h).expect("subgroup element in a class");
        acc += chi.value(idx);
    }
    acc.div_rational(subgroup.len() as i64)
        .as_integer()
        .expect("fixed-space dimension is a non-negative integer") as u32
}

/// Status of condition (1): the eta line is not globally stable, certified
/// by the square-centraliser check on every admissible pair.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Cond1Certificate {
    pub certified: bool,
    pub checked_pairs: Vec<String>,
    pub description: String,
}

/// Status of condition (2): injectivity of the localisation on the
/// W-component, reduced to Hom_D(C, W) = 0.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Cond2Status {
    Holds { hom_dimension: u32, via: String },
    Unresolved { why: String },
}

/// The vanishing verdict for the tangent space and the resulting
/// classification statement.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VanishingVerdict {
    pub cond1: Cond1Certificate,
    pub cond2: Cond2Status,
    pub nicely_exceptional: String,
    pub tangent_vanishes: bool,
    pub theorem2: String,
}

pub const THEOREM2_POSITIVE: &str = "every locally induced lift has finite image up to twist";

/// Combines the certificate for condition (1), the nicely-exceptional
/// analysis and the Hom dimension into the final vanishing verdict.
///
/// A `true` nicely-exceptional verdict entitles C = trivial-zero; an
/// explicit class-module character, when supplied, is used instead. The
/// verdict is only positive when both conditions hold; missing data
/// propagates to an inconclusive verdict, never to a silent assumption.
pub fn theorem2_verdict(
    fixture: &ClassGroupFixture,
    datum: &DecompositionDatum,
    class_module: Option<&ClassModuleCharacter>,
) -> Result<VanishingVerdict, SelmerError> {
    if fixture.group != datum.global {
        return Err(SelmerError::GroupMismatch);
    }
    fixture.validate()?;

    // Condition (1): on every admissible (G, I), some square fails to
    // centralise I.
    let global = datum.global.build();
    let mut checked_pairs = Vec::new();
    let mut certified = true;
    for pair in gdi_admissible_pairs(datum.global) {
        let ok = global
            .square_centralizer_check(&pair.inertia_elements)
            .map_err(SelmerError::PermRep)?;
        checked_pairs.push(alloc::format!(
            "({}, {}, {}): {}",
            pair.global,
            pair.decomposition_label(),
            pair.inertia_label(),
            if ok { "witness found" } else { "NO WITNESS" }
        ));
        certified &= ok;
    }
    let cond1 = Cond1Certificate {
        certified,
        checked_pairs,
        description: String::from(
            "a cohomology class restricting into the eta line would force eta to be globally \
             stable; some group element's square fails to centralise the inertia subgroup, so \
             the line is not stable and the class vanishes",
        ),
    };

    let ne = fixture.nicely_exceptional()?;
    let (cond2, ne_string) = match &ne {
        NicelyExceptionalVerdict::Yes { .. } => {
            let trivial = ClassModuleCharacter::trivial_zero(datum.global);
            let effective = class_module.unwrap_or(&trivial);
            let hom = hom_dimension(effective, datum)?;
            let via = match &effective.kind {
                ClassModuleKind::TrivialZero => String::from(
                    "nicely exceptional entitles C = 0 on the W-isotypic side",
                ),
                ClassModuleKind::Multiplicities(_) => {
                    String::from("explicit class-module character")
                }
            };
            let cond2 = if hom == 0 {
                Cond2Status::Holds {
                    hom_dimension: 0,
                    via,
                }
            } else {
                Cond2Status::Unresolved {
                    why: alloc::format!(
                        "Hom_D(C, W) has dimension {}; injectivity of the localisation is not \
                         established",
                        hom
                    ),
                }
            };
            (cond2, String::from("yes"))
        }
        NicelyExceptionalVerdict::No { failing } => (
            Cond2Status::Unresolved {
                why: alloc::format!(
                    "nicely-exceptional hypothesis fails: p divides the class number of {}",
                    failing.join(", ")
                ),
            },
            String::from("no"),
        ),
        NicelyExceptionalVerdict::Unknown { missing } => (
            Cond2Status::Unresolved {
                why: alloc::format!("missing class-number data for {}", missing.join(", ")),
            },
            String::from("unknown"),
        ),
    };

    let tangent_vanishes = cond1.certified && matches!(cond2, Cond2Status::Holds { .. });
    let theorem2 = if tangent_vanishes {
        String::from(THEOREM2_POSITIVE)
    } else {
        match &ne {
            NicelyExceptionalVerdict::No { .. } => {
                String::from("inconclusive (hypothesis fails)")
            }
            NicelyExceptionalVerdict::Unknown { .. } => {
                String::from("inconclusive (missing class-number data)")
            }
            NicelyExceptionalVerdict::Yes { .. } => String::from("inconclusive"),
        }
    };
    Ok(VanishingVerdict {
        cond1,
        cond2,
        nicely_exceptional: ne_string,
        tangent_vanishes,
        theorem2,
    })
}
