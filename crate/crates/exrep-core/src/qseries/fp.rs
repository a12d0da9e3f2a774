//! Arithmetic in F_p and in F_{p²} = F_p[x]/(x² - r) for the least positive
//! quadratic non-residue r.

/// `(a * b) mod p` without overflow for p < 2^63.
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime p (Fermat).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero mod {}", p);
    pow_mod(a, p - 2, p)
}

/// Least positive quadratic non-residue mod an odd prime.
pub fn least_nonresidue(p: u64) -> u64 {
    debug_assert!(p > 2);
    (2..p)
        .find(|&r| pow_mod(r, (p - 1) / 2, p) == p - 1)
        .expect("an odd prime has a non-residue below p")
}

/// The quadratic extension F_{p²} = F_p[x]/(x² - r); elements are
/// coordinate pairs (c0, c1) meaning c0 + c1·x.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp2 {
    pub p: u64,
    pub r: u64,
}

/// An element of F_p or F_{p²} as a coordinate pair; c1 = 0 for prime-field
/// values.
pub type Pair = [u64; 2];

impl Fp2 {
    pub fn new(p: u64) -> Fp2 {
        Fp2 {
            p,
            r: least_nonresidue(p),
        }
    }

    pub fn zero(&self) -> Pair {
        [0, 0]
    }

    pub fn one(&self) -> Pair {
        [1 % self.p, 0]
    }

    pub fn embed(&self, a: u64) -> Pair {
        [a % self.p, 0]
    }

    pub fn add(&self, a: Pair, b: Pair) -> Pair {
        [add_mod(a[0], b[0], self.p), add_mod(a[1], b[1], self.p)]
    }

    pub fn sub(&self, a: Pair, b: Pair) -> Pair {
        [sub_mod(a[0], b[0], self.p), sub_mod(a[1], b[1], self.p)]
    }

    pub fn neg(&self, a: Pair) -> Pair {
        self.sub(self.zero(), a)
    }

    pub fn mul(&self, a: Pair, b: Pair) -> Pair {
        let p = self.p;
        // (a0 + a1 x)(b0 + b1 x) = a0b0 + r·a1b1 + (a0b1 + a1b0) x
        let c0 = add_mod(
            mul_mod(a[0], b[0], p),
            mul_mod(self.r, mul_mod(a[1], b[1], p), p),
            p,
        );
        let c1 = add_mod(mul_mod(a[0], b[1], p), mul_mod(a[1], b[0], p), p);
        [c0, c1]
    }

    /// Field norm `a0² - r·a1²` down to F_p.
    pub fn norm(&self, a: Pair) -> u64 {
        sub_mod(
            mul_mod(a[0], a[0], self.p),
            mul_mod(self.r, mul_mod(a[1], a[1], self.p), self.p),
            self.p,
        )
    }

    pub fn inv(&self, a: Pair) -> Pair {
        let n_inv = inv_mod(self.norm(a), self.p);
        [
            mul_mod(a[0], n_inv, self.p),
            mul_mod(sub_mod(0, a[1], self.p), n_inv, self.p),
        ]
    }

    pub fn pow(&self, mut base: Pair, mut exp: u64) -> Pair {
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: Pair) -> bool {
        a == [0, 0]
    }

    pub fn in_prime_field(&self, a: Pair) -> bool {
        a[1] == 0
    }

    /// A square root of the prime-field element `a`, if one exists in
    /// F_{p²} (it always does): either in F_p or a pure multiple of x.
    pub fn sqrt_of_base(&self, a: u64) -> Pair {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return [0, 0];
        }
        if pow_mod(a, (p - 1) / 2, p) == 1 {
            let s = (1..p)
                .find(|&s| mul_mod(s, s, p) == a)
                .expect("residue has a root");
            [s, 0]
        } else {
            // a = r·s² for some s, so √a = s·x.
            let target = mul_mod(a, inv_mod(self.r, p), p);
            let s = (1..p)
                .find(|&s| mul_mod(s, s, p) == target)
                .expect("a/r is a residue when a is not");
            [0, s]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonresidues() {
        assert_eq!(least_nonresidue(3), 2);
        assert_eq!(least_nonresidue(7), 3);
        assert_eq!(least_nonresidue(59), 2);
    }

    #[test]
    fn fp2_is_a_field() {
        let f = Fp2::new(7);
        // x² = r.
        assert_eq!(f.mul([0, 1], [0, 1]), [f.r, 0]);
        for c0 in 0..7 {
            for c1 in 0..7 {
                let a = [c0, c1];
                if f.is_zero(a) {
                    continue;
                }
                assert_eq!(f.mul(a, f.inv(a)), f.one());
            }
        }
    }

    #[test]
    fn frobenius_has_order_two() {
        let f = Fp2::new(11);
        let a = [3u64, 5u64];
        let frob = f.pow(a, 11);
        assert_ne!(frob, a);
        assert_eq!(f.pow(frob, 11), a);
    }

    #[test]
    fn square_roots() {
        let f = Fp2::new(59);
        for a in 0..59u64 {
            let s = f.sqrt_of_base(a);
            assert_eq!(f.mul(s, s), [a, 0]);
        }
    }
}
