//! Eisenstein series, Δ and the echelonised integral basis of cusp forms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::bernoulli;
use super::series::QExpansion;
use super::QSeriesError;

/// dim M_k for level one and even k ≥ 0.
pub fn dim_modular(k: u64) -> usize {
    if k % 2 != 0 {
        return 0;
    }
    let q = (k / 12) as usize;
    if k % 12 == 2 {
        q
    } else {
        q + 1
    }
}

/// dim S_k for level one and even k; zero below weight 12.
pub fn dim_cusp(k: u64) -> usize {
    if k % 2 != 0 || k < 4 {
        return 0;
    }
    dim_modular(k).saturating_sub(1)
}

/// Divisor power sum `σ_e(n) = Σ_{d|n} d^e`.
fn sigma(n: u64, e: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(e as u32);
            let other = n / d;
            if other != d {
                acc += BigInt::from(other).pow(e as u32);
            }
        }
        d += 1;
    }
    acc
}

/// The normalised Eisenstein series `E_k = 1 - (2k/B_k) Σ σ_{k-1}(n) qⁿ`
/// truncated at `precision` coefficients.
///
/// The coefficient `-2k/B_k` is computed with exact Bernoulli rationals and
/// the final series must be integral; weights where it is not (first at
/// k = 12) are reported as `NonIntegralSeries` rather than rounded.
pub fn eisenstein(k: u64, precision: usize) -> Result<QExpansion, QSeriesError> {
    if k < 4 || k % 2 != 0 {
        return Err(QSeriesError::InvalidWeight { weight: k as i64 });
    }
    if precision < 1 {
        return Err(QSeriesError::InvalidPrecision {
            given: precision,
            minimum: 1,
        });
    }
    let factor = -BigRational::from_integer(BigInt::from(2 * k)) / bernoulli(k);
    let mut coeffs = Vec::with_capacity(precision);
    coeffs.push(BigInt::one());
    for n in 1..precision as u64 {
        let c = &factor * BigRational::from_integer(sigma(n, k - 1));
        if !c.is_integer() {
            return Err(QSeriesError::NonIntegralSeries { weight: k });
        }
        coeffs.push(c.to_integer());
    }
    Ok(QExpansion::new(k, coeffs))
}

/// The discriminant cusp form `Δ = q·Π_{n≥1}(1-qⁿ)²⁴`, weight 12.
pub fn delta(precision: usize) -> Result<QExpansion, QSeriesError> {
    if precision < 2 {
        return Err(QSeriesError::InvalidPrecision {
            given: precision,
            minimum: 2,
        });
    }
    // Euler product Π(1-qⁿ) to precision-1, then the 24th power and a shift
    // by q. Each sparse factor multiplication is a shifted subtraction.
    let inner = precision - 1;
    let mut euler: Vec<BigInt> = alloc::vec![BigInt::zero(); inner];
    euler[0] = BigInt::one();
    for n in 1..inner {
        for i in (n..inner).rev() {
            let t = core::mem::take(&mut euler[i]) - &euler[i - n];
            euler[i] = t;
        }
    }
    let eta24 = QExpansion::new(0, euler).pow(24)?;
    let mut coeffs = Vec::with_capacity(precision);
    coeffs.push(BigInt::zero());
    coeffs.extend(eta24.coefficients().iter().cloned());
    Ok(QExpansion::new(12, coeffs))
}

/// The echelonised integral basis `f_1, .., f_d` of S_k: `f_i = q^i +
/// O(q^{d+1})` with integer coefficients, built from `Δ^i E_4^a E_6^b` and
/// integral row reduction. Weights with no cusp forms give an empty list.
pub fn victor_miller_basis(k: u64, precision: usize) -> Result<Vec<QExpansion>, QSeriesError> {
    if k % 2 != 0 {
        return Err(QSeriesError::InvalidWeight { weight: k as i64 });
    }
    let d = dim_cusp(k);
    if d == 0 {
        return Ok(Vec::new());
    }
    if precision <= d {
        return Err(QSeriesError::InsufficientPrecision {
            required: d + 1,
            available: precision,
        });
    }
    let e4 = eisenstein(4, precision)?;
    let e6 = eisenstein(6, precision)?;
    let delta1 = delta(precision)?;

    let mut basis: Vec<QExpansion> = Vec::with_capacity(d);
    let mut delta_power = delta1.clone();
    for i in 1..=d as u64 {
        // Write k - 12i = 4a + 6b with b ∈ {0, 1}.
        let rem = k - 12 * i;
        let b = if rem % 4 == 0 { 0 } else { 1 };
        let a = (rem - 6 * b) / 4;
        let mut f = delta_power.clone();
        if a > 0 {
            f = f.mul(&e4.pow(a as u32)?)?;
        }
        if b > 0 {
            f = f.mul(&e6)?;
        }
        debug_assert_eq!(f.weight(), k);
        basis.push(f);
        if (i as usize) < d {
            delta_power = delta_power.mul(&delta1)?;
        }
    }

    // The coefficient matrix on q^1..q^d is unitriangular, so clearing the
    // upper part needs only integral subtractions.
    for i in (0..d).rev() {
        for j in (i + 1)..d {
            let c = basis[i]
                .coefficient(j + 1)
                .expect("precision exceeds the cusp dimension")
                .clone();
            if !c.is_zero() {
                let scaled = basis[j].scalar_mul(&c);
                basis[i] = basis[i].sub(&scaled)?;
            }
        }
    }

    for (i, f) in basis.iter().enumerate() {
        debug_assert!(f.is_cusp());
        debug_assert!(f.coefficient(i + 1).map(|c| c.is_one()).unwrap_or(false));
        debug_assert!((1..=d)
            .filter(|&j| j != i + 1)
            .all(|j| f.coefficient(j).map(|c| c.is_zero()).unwrap_or(false)));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn dimension_formulas() {
        let dims: Vec<usize> = (0..=26).step_by(2).map(dim_cusp).collect();
        assert_eq!(dims, vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1]);
        assert_eq!(dim_cusp(24), 2);
        assert_eq!(dim_cusp(28), 2);
        assert_eq!(dim_modular(12), 2);
        assert_eq!(dim_modular(0), 1);
    }

    #[test]
    fn eisenstein_small_weights() {
        // (4, 3) -> 1 + 240q + 2160q²: σ₃(2) = 9.
        let e4 = eisenstein(4, 3).unwrap();
        assert_eq!(e4.coefficients(), ints(&[1, 240, 2160]).as_slice());
        // (6, 3) -> 1 - 504q - 16632q²: σ₅(2) = 33.
        let e6 = eisenstein(6, 3).unwrap();
        assert_eq!(e6.coefficients(), ints(&[1, -504, -16632]).as_slice());
        // Constant term of any E_k is 1.
        let e4_short = eisenstein(4, 1).unwrap();
        assert_eq!(e4_short.coefficients(), ints(&[1]).as_slice());
    }

    #[test]
    fn eisenstein_rejects_bad_weights() {
        assert_eq!(
            eisenstein(5, 3),
            Err(QSeriesError::InvalidWeight { weight: 5 })
        );
        assert_eq!(
            eisenstein(2, 3),
            Err(QSeriesError::InvalidWeight { weight: 2 })
        );
        // 2·12/B_12 is not an integer (numerator 691).
        assert_eq!(
            eisenstein(12, 3),
            Err(QSeriesError::NonIntegralSeries { weight: 12 })
        );
    }

    #[test]
    fn delta_expansion() {
        let d = delta(8).unwrap();
        assert_eq!(
            d.coefficients(),
            ints(&[0, 1, -24, 252, -1472, 4830, -6048, -16744]).as_slice()
        );
        assert!(d.is_cusp());
        assert_eq!(d.weight(), 12);
        assert_eq!(delta(3).unwrap().coefficients(), ints(&[0, 1, -24]).as_slice());
    }

    #[test]
    fn delta_matches_eisenstein_expression() {
        // Δ = (E₄³ - E₆²)/1728 at every tested precision.
        for precision in [2usize, 5, 17, 40] {
            let e4 = eisenstein(4, precision).unwrap();
            let e6 = eisenstein(6, precision).unwrap();
            let num = e4.pow(3).unwrap().sub(&e6.pow(2).unwrap()).unwrap();
            let scaled: Vec<BigInt> = num
                .coefficients()
                .iter()
                .map(|c| {
                    let (q, r) = num_integer::Integer::div_rem(c, &BigInt::from(1728));
                    assert!(r.is_zero());
                    q
                })
                .collect();
            assert_eq!(delta(precision).unwrap().coefficients(), scaled.as_slice());
        }
    }

    #[test]
    fn victor_miller_examples() {
        // Weight 16: Δ·E₄ = q + 216q² - 3348q³ + 13888q⁴ + ...
        let b16 = victor_miller_basis(16, 5).unwrap();
        assert_eq!(b16.len(), 1);
        assert_eq!(
            b16[0].coefficients(),
            ints(&[0, 1, 216, -3348, 13888]).as_slice()
        );
        // Weight 12: the basis element is Δ.
        let b12 = victor_miller_basis(12, 3).unwrap();
        assert_eq!(b12.len(), 1);
        assert_eq!(b12[0].coefficients(), ints(&[0, 1, -24]).as_slice());
        // Weight 10: no cusp forms.
        assert!(victor_miller_basis(10, 20).unwrap().is_empty());
    }

    #[test]
    fn victor_miller_echelon_property() {
        for k in [24u64, 28, 36, 48] {
            let d = dim_cusp(k);
            let basis = victor_miller_basis(k, d + 10).unwrap();
            assert_eq!(basis.len(), d);
            for (i, f) in basis.iter().enumerate() {
                for j in 1..=d {
                    let expected = if j == i + 1 { 1 } else { 0 };
                    assert_eq!(f.coefficient(j).unwrap(), &BigInt::from(expected));
                }
            }
        }
    }

    #[test]
    fn victor_miller_insufficient_precision() {
        assert_eq!(
            victor_miller_basis(24, 2),
            Err(QSeriesError::InsufficientPrecision {
                required: 3,
                available: 2
            })
        );
    }
}
