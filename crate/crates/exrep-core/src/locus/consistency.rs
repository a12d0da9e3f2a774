//! The projective-image consistency statistic.
//!
//! For a 2×2 Frobenius class with trace a and determinant δ, the value
//! u = a²/δ determines the order of its projective image: u = ζ + ζ⁻¹ + 2
//! for ζ a primitive root of unity of that order. Membership of every
//! computed u_ℓ in the value set of a group type is *consistent-with*
//! evidence for that type, never proof — the statistic is reported as raw
//! data.

use alloc::vec::Vec;

use crate::qseries::fp::{inv_mod, pow_mod, Fp2, Pair};
use crate::qseries::{EigenSystem, FqValue};

/// `u = ζ + ζ⁻¹ + 2` for a primitive root of unity of the given projective
/// order, when the value is a rational integer: 1→4, 2→0, 3→1, 4→2, 6→3.
/// Order 5 gives the two roots of u² - 3u + 1 instead (`None` here).
pub fn projective_order_u(order: u32) -> Option<i64> {
    match order {
        1 => Some(4),
        2 => Some(0),
        3 => Some(1),
        4 => Some(2),
        6 => Some(3),
        _ => None,
    }
}

/// Summary of the u-statistic over the primes of one eigensystem.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConsistencySummary {
    pub prime_bound: u64,
    pub primes_tested: usize,
    /// Distinct u_ℓ values attained, sorted; coordinates are w.r.t. the
    /// recorded non-residue basis when outside F_p.
    pub u_values: Vec<FqValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonresidue: Option<u64>,
    /// All u_ℓ lie in {0, 1, 2, 4} — projective orders of S4 elements.
    pub s4_consistent: bool,
    /// All u_ℓ lie in {0, 1, 4} ∪ roots of u² - 3u + 1 — orders of A5
    /// elements.
    pub a5_consistent: bool,
    /// At most half the tested primes have u_ℓ outside {0, 4}: the crude
    /// density shadow of a dihedral image, where reflections (u = 0) fill
    /// half the group. Raw data, not proof.
    pub dihedral_consistent: bool,
}

/// Computes `u_ℓ = a_ℓ² · ℓ^{-(k-1)}` for every recorded prime ℓ ≤ the
/// bound, ℓ ≠ p, and reports which image types the value set is consistent
/// with.
pub fn projective_consistency(system: &EigenSystem, ell_bound: u64) -> ConsistencySummary {
    let p = system.prime;
    let k = system.weight;
    let ctx = Fp2::new(p);
    debug_assert!(system.nonresidue.map(|r| r == ctx.r).unwrap_or(true));

    let mut u_values: Vec<FqValue> = Vec::new();
    let mut tested = 0usize;
    for &(ell, a) in system.eigenvalues() {
        if ell > ell_bound || ell == p {
            continue;
        }
        tested += 1;
        let det_inv = ctx.embed(inv_mod(pow_mod(ell % p, k - 1, p), p));
        let a2 = ctx.mul(a.pair(), a.pair());
        let u = FqValue::from_pair(ctx.mul(a2, det_inv));
        if !u_values.contains(&u) {
            u_values.push(u);
        }
    }
    u_values.sort_unstable_by_key(|v| (v.c1, v.c0));

    let integer_set = |vals: &[i64]| -> Vec<Pair> {
        vals.iter().map(|&v| ctx.embed(v.rem_euclid(p as i64) as u64)).collect()
    };
    let s4_set = integer_set(&[4, 0, 1, 2]);
    let mut a5_set = integer_set(&[4, 0, 1]);
    // Roots of u² - 3u + 1: (3 ± √5)/2 in F_p or F_{p²}.
    let sqrt5 = ctx.sqrt_of_base(5 % p);
    let half = ctx.embed(inv_mod(2 % p, p));
    let three = ctx.embed(3 % p);
    a5_set.push(ctx.mul(ctx.add(three, sqrt5), half));
    a5_set.push(ctx.mul(ctx.sub(three, sqrt5), half));

    let s4_consistent = u_values.iter().all(|u| s4_set.contains(&u.pair()));
    let a5_consistent = u_values.iter().all(|u| a5_set.contains(&u.pair()));

    let special = integer_set(&[0, 4]);
    let mut outside_special = 0usize;
    for &(ell, a) in system.eigenvalues() {
        if ell > ell_bound || ell == p {
            continue;
        }
        let det_inv = ctx.embed(inv_mod(pow_mod(ell % p, k - 1, p), p));
        let u = ctx.mul(ctx.mul(a.pair(), a.pair()), det_inv);
        if !special.contains(&u) {
            outside_special += 1;
        }
    }
    let dihedral_consistent = outside_special * 2 <= tested;

    ConsistencySummary {
        prime_bound: ell_bound,
        primes_tested: tested,
        u_values,
        nonresidue: system.nonresidue,
        s4_consistent,
        a5_consistent,
        dihedral_consistent,
    }
}
