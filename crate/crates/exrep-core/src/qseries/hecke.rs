//! Integer matrices of Hecke operators on the Victor–Miller cusp basis.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::basis::{dim_cusp, victor_miller_basis};
use super::series::QExpansion;
use super::QSeriesError;
use crate::arith::is_prime;

/// The matrix of T_p on the Victor–Miller basis of S_k, with exact integer
/// entries. Column i holds the coordinates of T_p f_{i+1}, read off the
/// coefficient indices 1..dim (valid because the basis is echelonised).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeMatrix {
    weight: u64,
    prime: u64,
    dim: usize,
    entries: Vec<Vec<BigInt>>, // entries[row][col]
}

impl HeckeMatrix {
    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Exact integer matrix product (the two operators must act on the same
    /// space).
    pub fn matmul(&self, other: &HeckeMatrix) -> Result<Vec<Vec<BigInt>>, QSeriesError> {
        if self.weight != other.weight || self.dim != other.dim {
            return Err(QSeriesError::WeightMismatch);
        }
        let n = self.dim;
        let mut out = alloc::vec![alloc::vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    acc += &self.entries[i][l] * &other.entries[l][j];
                }
                out[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Entries reduced into `[0, p)`.
    pub fn reduce_mod(&self, p: u64) -> Vec<Vec<u64>> {
        let pb = BigInt::from(p);
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        let mut r = c % &pb;
                        if r.is_negative() {
                            r += &pb;
                        }
                        u64::try_from(r).expect("residue fits u64")
                    })
                    .collect()
            })
            .collect()
    }

    /// Determinant mod p by Gaussian elimination over F_p.
    pub fn det_mod(&self, p: u64) -> u64 {
        let mut m = self.reduce_mod(p);
        let n = self.dim;
        let mulp = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let mut det: u64 = 1;
        for col in 0..n {
            let pivot = match (col..n).find(|&r| m[r][col] != 0) {
                Some(r) => r,
                None => return 0,
            };
            if pivot != col {
                m.swap(pivot, col);
                det = (p - det) % p;
            }
            det = mulp(det, m[col][col]);
            let inv = crate::qseries::fp::inv_mod(m[col][col], p);
            for r in (col + 1)..n {
                if m[r][col] == 0 {
                    continue;
                }
                let factor = mulp(m[r][col], inv);
                for c in col..n {
                    let sub = mulp(factor, m[col][c]);
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        det
    }

    /// Monic characteristic polynomial over Z, coefficients in ascending
    /// degree order, by the Faddeev–LeVerrier recurrence (all divisions are
    /// exact).
    pub fn char_poly(&self) -> Vec<BigInt> {
        let n = self.dim;
        let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        if n == 0 {
            return coeffs;
        }
        let mut aux = self.entries.clone();
        for step in 1..=n {
            let mut trace = BigInt::zero();
            for i in 0..n {
                trace += &aux[i][i];
            }
            let c = -trace / BigInt::from(step as u64);
            coeffs[n - step] = c.clone();
            if step == n {
                break;
            }
            // aux <- M (aux + c I)
            let mut shifted = aux;
            for i in 0..n {
                shifted[i][i] += &c;
            }
            let mut next = alloc::vec![alloc::vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigInt::zero();
                    for l in 0..n {
                        acc += &self.entries[i][l] * &shifted[l][j];
                    }
                    next[i][j] = acc;
                }
            }
            aux = next;
        }
        coeffs
    }
}

/// The matrix of T_p on the given Victor–Miller basis of S_k, from the
/// coefficient rule `b_n = a_{pn} + p^{k-1} a_{n/p}`.
///
/// Requires every basis element to carry at least `p·dim + 1` coefficients.
pub fn hecke_matrix(
    k: u64,
    p: u64,
    basis: &[QExpansion],
) -> Result<HeckeMatrix, QSeriesError> {
    if !is_prime(p) {
        return Err(QSeriesError::NotPrime { n: p });
    }
    let dim = basis.len();
    debug_assert_eq!(dim, dim_cusp(k));
    let required = (p as usize) * dim + 1;
    for f in basis {
        if f.precision() < required {
            return Err(QSeriesError::InsufficientPrecision {
                required,
                available: f.precision(),
            });
        }
    }
    let p_pow = BigInt::from(p).pow((k - 1) as u32);
    let mut entries = alloc::vec![alloc::vec![BigInt::zero(); dim]; dim];
    for (col, f) in basis.iter().enumerate() {
        for row in 0..dim {
            let n = (row + 1) as u64;
            let mut b = f
                .coefficient((p * n) as usize)
                .expect("precision check covers p·dim")
                .clone();
            if n % p == 0 {
                b += &p_pow
                    * f.coefficient((n / p) as usize)
                        .expect("n/p below precision");
            }
            entries[row][col] = b;
        }
    }
    Ok(HeckeMatrix {
        weight: k,
        prime: p,
        dim,
        entries,
    })
}

/// Builds the basis at exactly the precision `hecke_matrix` needs.
pub fn hecke_matrix_auto(k: u64, p: u64) -> Result<HeckeMatrix, QSeriesError> {
    if !is_prime(p) {
        return Err(QSeriesError::NotPrime { n: p });
    }
    let dim = dim_cusp(k);
    let precision = (p as usize) * dim + 1;
    let basis = victor_miller_basis(k, precision.max(dim + 1))?;
    hecke_matrix(k, p, &basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_of_two() {
        let m = hecke_matrix_auto(12, 2).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.entry(0, 0), &BigInt::from(-24));
    }

    #[test]
    fn weight_sixteen_mod_59() {
        let m = hecke_matrix_auto(16, 59).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.reduce_mod(59), alloc::vec![alloc::vec![0]]);
    }

    #[test]
    fn one_by_one_matrices_commute() {
        let t2 = hecke_matrix_auto(12, 2).unwrap();
        let t3 = hecke_matrix_auto(12, 3).unwrap();
        assert_eq!(t2.matmul(&t3).unwrap(), t3.matmul(&t2).unwrap());
    }

    #[test]
    fn commutativity_in_dimension_two() {
        // k = 24 is the first weight with a two-dimensional cusp space.
        let basis = victor_miller_basis(24, 2 * 5 + 1).unwrap();
        let t2 = hecke_matrix(24, 2, &basis).unwrap();
        let t3 = hecke_matrix(24, 3, &basis).unwrap();
        let t5 = hecke_matrix(24, 5, &basis).unwrap();
        assert_eq!(t2.matmul(&t3).unwrap(), t3.matmul(&t2).unwrap());
        assert_eq!(t2.matmul(&t5).unwrap(), t5.matmul(&t2).unwrap());
        assert_eq!(t3.matmul(&t5).unwrap(), t5.matmul(&t3).unwrap());
        // tr T_2 = τ'(2) sums over the two eigenforms; the matrix itself is
        // not diagonal, so commutativity is a real constraint.
        assert_ne!(t2.entry(0, 1), &BigInt::zero());
    }

    #[test]
    fn precision_error_names_required_bound() {
        let basis = victor_miller_basis(12, 5).unwrap();
        assert_eq!(
            hecke_matrix(12, 7, &basis),
            Err(QSeriesError::InsufficientPrecision {
                required: 8,
                available: 5
            })
        );
    }

    #[test]
    fn char_poly_of_t2_weight_24() {
        let m = hecke_matrix_auto(24, 2).unwrap();
        let poly = m.char_poly();
        // x² - 1080x - 20468736, the classical weight-24 Hecke polynomial.
        assert_eq!(
            poly,
            alloc::vec![
                BigInt::from(-20468736i64),
                BigInt::from(-1080),
                BigInt::from(1)
            ]
        );
    }
}
