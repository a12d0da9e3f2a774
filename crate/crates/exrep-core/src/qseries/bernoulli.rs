//! Exact Bernoulli numbers, needed for the Eisenstein normalisation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The Bernoulli number B_m (convention B_1 = -1/2), via the defining
/// recurrence `Σ_{j≤m} C(m+1, j)·B_j = [m = 0]`.
pub fn bernoulli(m: u64) -> BigRational {
    let m = m as usize;
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(n+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            // C(n+1, j+1) from C(n+1, j)
            binom = binom * BigInt::from((n + 1 - j) as u64) / BigInt::from((j + 1) as u64);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from((n + 1) as u64)));
    }
    b.pop().expect("recurrence filled the table")
}
