//! Truncated power series in q with exact integer coefficients, optionally
//! reduced modulo a prime.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::QSeriesError;

/// A truncated q-expansion `Σ_{n<N} a_n qⁿ` of a form of known weight.
///
/// `coeffs` always has exactly `precision` entries. When `modulus` is set,
/// every coefficient is reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    weight: u64,
    precision: usize,
    coeffs: Vec<BigInt>,
    modulus: Option<u64>,
}

impl QExpansion {
    pub fn new(weight: u64, coeffs: Vec<BigInt>) -> Self {
        QExpansion {
            weight,
            precision: coeffs.len(),
            coeffs,
            modulus: None,
        }
    }

    /// The constant series 1 of the given weight.
    pub fn one(weight: u64, precision: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); precision];
        if precision > 0 {
            coeffs[0] = BigInt::from(1);
        }
        QExpansion::new(weight, coeffs)
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    /// Coefficient of qⁿ; `None` beyond the precision.
    pub fn coefficient(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_cusp(&self) -> bool {
        self.precision > 0 && self.coeffs[0].is_zero()
    }

    /// Drops coefficients beyond `precision`.
    pub fn truncate(mut self, precision: usize) -> Self {
        if precision < self.precision {
            self.coeffs.truncate(precision);
            self.precision = precision;
        }
        self
    }

    fn check_modulus(&self, other: &QExpansion) -> Result<(), QSeriesError> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(QSeriesError::ModulusMismatch)
        }
    }

    fn reduce_coeff(c: BigInt, p: u64) -> BigInt {
        let p = BigInt::from(p);
        let r = c % &p;
        if r.is_negative() {
            r + p
        } else {
            r
        }
    }

    /// Reduction modulo a prime; coefficients land in `[0, p)`.
    pub fn reduce_mod(&self, p: u64) -> QExpansion {
        QExpansion {
            weight: self.weight,
            precision: self.precision,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Self::reduce_coeff(c.clone(), p))
                .collect(),
            modulus: Some(p),
        }
    }

    /// Sum; requires equal weights and moduli, truncates to the smaller
    /// precision.
    pub fn add(&self, other: &QExpansion) -> Result<QExpansion, QSeriesError> {
        self.check_modulus(other)?;
        if self.weight != other.weight {
            return Err(QSeriesError::WeightMismatch);
        }
        let precision = self.precision.min(other.precision);
        let mut coeffs: Vec<BigInt> = (0..precision)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        if let Some(p) = self.modulus {
            for c in &mut coeffs {
                *c = Self::reduce_coeff(core::mem::take(c), p);
            }
        }
        Ok(QExpansion {
            weight: self.weight,
            precision,
            coeffs,
            modulus: self.modulus,
        })
    }

    pub fn sub(&self, other: &QExpansion) -> Result<QExpansion, QSeriesError> {
        self.add(&other.scalar_mul(&BigInt::from(-1)))
    }

    pub fn scalar_mul(&self, s: &BigInt) -> QExpansion {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().map(|c| c * s).collect();
        if let Some(p) = self.modulus {
            for c in &mut coeffs {
                *c = Self::reduce_coeff(core::mem::take(c), p);
            }
        }
        QExpansion {
            weight: self.weight,
            precision: self.precision,
            coeffs,
            modulus: self.modulus,
        }
    }

    /// Product; weights add, precision truncates to the smaller input.
    pub fn mul(&self, other: &QExpansion) -> Result<QExpansion, QSeriesError> {
        self.check_modulus(other)?;
        let precision = self.precision.min(other.precision);
        let mut coeffs = alloc::vec![BigInt::zero(); precision];
        for (i, a) in self.coeffs.iter().take(precision).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(precision - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        if let Some(p) = self.modulus {
            for c in &mut coeffs {
                *c = Self::reduce_coeff(core::mem::take(c), p);
            }
        }
        Ok(QExpansion {
            weight: self.weight + other.weight,
            precision,
            coeffs,
            modulus: self.modulus,
        })
    }

    /// Power by binary exponentiation; `e = 0` gives the constant 1.
    pub fn pow(&self, e: u32) -> Result<QExpansion, QSeriesError> {
        let mut result = QExpansion {
            modulus: self.modulus,
            ..QExpansion::one(0, self.precision)
        };
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Multiplication by q: coefficients shift up one slot, the precision is
    /// preserved and the top coefficient falls off.
    pub fn mul_by_q(&self) -> QExpansion {
        let mut coeffs = Vec::with_capacity(self.precision);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().take(self.precision - 1).cloned());
        QExpansion {
            weight: self.weight,
            precision: self.precision,
            coeffs,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*q", c)?,
                _ => write!(f, "{}*q^{}", c, n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(weight: u64, coeffs: &[i64]) -> QExpansion {
        QExpansion::new(weight, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn multiplication_truncates_to_min_precision() {
        let a = series(0, &[1, 1, 1, 1]);
        let b = series(0, &[1, -1]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.precision(), 2);
        assert_eq!(prod.coefficients(), &[BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn weights_add_under_multiplication() {
        let a = series(4, &[1, 240]);
        let b = series(6, &[1, -504]);
        assert_eq!(a.mul(&b).unwrap().weight(), 10);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn modulus_mismatch_is_rejected() {
        let a = series(0, &[1, 2, 3]);
        let b = a.reduce_mod(5);
        assert_eq!(a.mul(&b), Err(QSeriesError::ModulusMismatch));
        assert_eq!(
            b.coefficients(),
            &[BigInt::from(1), BigInt::from(2), BigInt::from(3)]
        );
    }

    #[test]
    fn reduction_maps_into_canonical_range() {
        let a = series(0, &[-1, 7, -12]);
        let r = a.reduce_mod(5);
        assert_eq!(
            r.coefficients(),
            &[BigInt::from(4), BigInt::from(2), BigInt::from(3)]
        );
    }

    #[test]
    fn mul_by_q_shifts() {
        let a = series(12, &[1, -24, 252]);
        let s = a.mul_by_q();
        assert_eq!(s.precision(), 3);
        assert_eq!(
            s.coefficients(),
            &[BigInt::from(0), BigInt::from(1), BigInt::from(-24)]
        );
        assert!(s.is_cusp());
    }
}
