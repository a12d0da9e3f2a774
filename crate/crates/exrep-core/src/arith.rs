//! Small shared integer utilities.

use alloc::vec::Vec;

/// Deterministic primality by trial division; fine at desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// 2-adic valuation of a positive integer.
pub fn v2(mut n: u64) -> u32 {
    assert!(n > 0, "v2 of zero is infinite");
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    v
}

/// All primes ≤ bound, by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let bound = bound as usize;
    let mut composite = alloc::vec![false; bound + 1];
    let mut primes = Vec::new();
    for n in 2..=bound {
        if composite[n] {
            continue;
        }
        primes.push(n as u64);
        let mut m = n * n;
        while m <= bound {
            composite[m] = true;
            m += n;
        }
    }
    primes
}
