//! Cross-cutting q-series properties: the independent eta-product oracle,
//! the Hatada congruence, multiplicativity of eigenform coefficients, and
//! algebraic laws of the truncated-series arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;

use exrep_core::arith::primes_up_to;
use exrep_core::qseries::{delta, dim_cusp, eisenstein, victor_miller_basis, QExpansion};

/// Independent oracle: expand q·Π(1-qⁿ)²⁴ with naive i128 polynomial
/// arithmetic, no series machinery involved.
fn delta_oracle(precision: usize) -> Vec<i128> {
    let inner = precision - 1;
    let mut poly: Vec<i128> = vec![0; inner];
    poly[0] = 1;
    for n in 1..inner {
        for _ in 0..24 {
            let mut next = poly.clone();
            for (i, c) in poly.iter().enumerate() {
                if i + n < inner {
                    next[i + n] -= c;
                }
            }
            poly = next;
        }
    }
    let mut shifted = vec![0i128];
    shifted.extend(poly);
    shifted
}

#[test]
fn delta_matches_brute_force_eta_product() {
    for precision in [3usize, 8, 20, 40] {
        let expected = delta_oracle(precision);
        let d = delta(precision).unwrap();
        let got: Vec<BigInt> = d.coefficients().to_vec();
        let expected_big: Vec<BigInt> = expected.iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(got, expected_big, "precision {}", precision);
    }
    // The frozen small cases.
    let oracle3 = delta_oracle(3);
    assert_eq!(oracle3, vec![0, 1, -24]);
    let oracle8 = delta_oracle(8);
    assert_eq!(oracle8, vec![0, 1, -24, 252, -1472, 4830, -6048, -16744]);
}

/// The six weights with a one-dimensional cusp space; the basis element is
/// the normalised eigenform and its coefficients are the eigenvalues.
const DIM_ONE_WEIGHTS: [u64; 6] = [12, 16, 18, 20, 22, 26];

fn eigenform(k: u64, precision: usize) -> QExpansion {
    let basis = victor_miller_basis(k, precision).unwrap();
    assert_eq!(basis.len(), 1, "dim S_{} = 1", k);
    basis.into_iter().next().unwrap()
}

#[test]
fn hatada_congruence_for_integral_eigenvalues() {
    // a_p ≡ 1 + p (mod 8) for every odd prime p ≤ 50 and every weight with
    // an integral eigenform.
    let primes: Vec<u64> = primes_up_to(50).into_iter().skip(1).collect();
    for &k in &DIM_ONE_WEIGHTS {
        let f = eigenform(k, 48);
        for &p in &primes {
            let ap = f.coefficient(p as usize).unwrap();
            let diff = ap - BigInt::from(1 + p);
            assert!(
                (&diff % BigInt::from(8)) == BigInt::from(0),
                "a_{}({}) = {} vs 1+p = {}",
                p,
                k,
                ap,
                1 + p
            );
        }
    }
}

#[test]
fn eigenform_coefficients_are_multiplicative() {
    // a_{mn} = a_m · a_n for coprime m, n ≤ 50, read from the basis element
    // itself. The shared Δ, E4, E6 are computed once at full precision.
    let precision = 50 * 49 + 1;
    let delta1 = delta(precision).unwrap();
    let e4 = eisenstein(4, precision).unwrap();
    let e6 = eisenstein(6, precision).unwrap();
    for &k in &DIM_ONE_WEIGHTS {
        let rem = k - 12;
        let b = if rem % 4 == 0 { 0 } else { 1u32 };
        let a = ((rem - 6 * b as u64) / 4) as u32;
        let mut f = delta1.clone();
        if a > 0 {
            f = f.mul(&e4.pow(a).unwrap()).unwrap();
        }
        if b > 0 {
            f = f.mul(&e6).unwrap();
        }
        // The direct product agrees with the echelon basis element.
        let reference = eigenform(k, 40);
        assert_eq!(
            &f.coefficients()[..40],
            reference.coefficients(),
            "weight {}",
            k
        );
        assert_eq!(f.coefficient(1).unwrap(), &BigInt::from(1));
        for m in 2u64..=50 {
            for n in (m + 1)..=50 {
                if num_integer::gcd(m, n) != 1 {
                    continue;
                }
                let lhs = f.coefficient((m * n) as usize).unwrap();
                let rhs = f.coefficient(m as usize).unwrap() * f.coefficient(n as usize).unwrap();
                assert_eq!(lhs, &rhs, "a_{}·a_{} at weight {}", m, n, k);
            }
        }
    }
}

#[test]
fn hecke_commutativity_exact_in_dimension_two_and_three() {
    use exrep_core::qseries::hecke_matrix;
    for (k, p, q) in [(24u64, 2u64, 3u64), (24, 3, 5), (28, 2, 5), (36, 2, 3)] {
        let dim = dim_cusp(k);
        assert!(dim >= 2);
        let basis = victor_miller_basis(k, dim * q as usize + 1).unwrap();
        let tp = hecke_matrix(k, p, &basis).unwrap();
        let tq = hecke_matrix(k, q, &basis).unwrap();
        assert_eq!(tp.matmul(&tq).unwrap(), tq.matmul(&tp).unwrap());
    }
}

fn series_strategy() -> impl Strategy<Value = QExpansion> {
    proptest::collection::vec(-1000i64..1000, 1..16).prop_map(|cs| {
        QExpansion::new(0, cs.into_iter().map(BigInt::from).collect())
    })
}

proptest! {
    #[test]
    fn multiplication_commutes(a in series_strategy(), b in series_strategy()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn multiplication_associates(
        a in series_strategy(),
        b in series_strategy(),
        c in series_strategy()
    ) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_distributes(
        a in series_strategy(),
        b in series_strategy(),
        c in series_strategy()
    ) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(
        a in series_strategy(),
        b in series_strategy(),
        p in prop::sample::select(vec![3u64, 5, 7, 59, 101])
    ) {
        let prod = a.mul(&b).unwrap().reduce_mod(p);
        let prod_reduced = a.reduce_mod(p).mul(&b.reduce_mod(p)).unwrap();
        prop_assert_eq!(prod, prod_reduced);
        let sum = a.add(&b).unwrap().reduce_mod(p);
        let sum_reduced = a.reduce_mod(p).add(&b.reduce_mod(p)).unwrap();
        prop_assert_eq!(sum, sum_reduced);
    }
}
