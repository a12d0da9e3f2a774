//! Permutations of at most five points.
//!
//! Every group in this crate acts on {0, .., 4}; a permutation is stored as
//! its image array, which makes lexicographic comparison (used everywhere to
//! pick canonical representatives) the derived `Ord`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// All permutation groups here act on at most this many points.
pub const MAX_DEGREE: usize = 5;

/// A permutation of {0, .., MAX_DEGREE-1}, stored as the image array:
/// `images[i]` is where point `i` goes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: [u8; MAX_DEGREE],
}

impl Perm {
    pub fn identity() -> Self {
        Perm {
            images: [0, 1, 2, 3, 4],
        }
    }

    /// Builds a permutation from an image array. Returns `None` if the array
    /// is not a bijection of {0, .., 4}.
    pub fn from_images(images: [u8; MAX_DEGREE]) -> Option<Self> {
        let mut seen = [false; MAX_DEGREE];
        for &i in &images {
            let i = i as usize;
            if i >= MAX_DEGREE || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm { images })
    }

    /// Builds a permutation from disjoint cycles over 0-based points, e.g.
    /// `&[&[0, 1]]` is the transposition (0 1).
    pub fn from_cycles(cycles: &[&[u8]]) -> Option<Self> {
        let mut images = [0u8, 1, 2, 3, 4];
        let mut moved = [false; MAX_DEGREE];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if from >= MAX_DEGREE || to as usize >= MAX_DEGREE || moved[from] {
                    return None;
                }
                moved[from] = true;
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn apply(&self, point: u8) -> u8 {
        self.images[point as usize]
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..MAX_DEGREE {
            images[i] = self.images[other.images[i] as usize];
        }
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..MAX_DEGREE {
            images[self.images[i] as usize] = i as u8;
        }
        Perm { images }
    }

    /// Conjugate of `self` by `g`, i.e. `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity()
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        let mut n = 1;
        let mut acc = *self;
        while !acc.is_identity() {
            acc = acc.compose(self);
            n += 1;
        }
        n
    }

    /// Power `self^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { *self };
        let mut acc = Perm::identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Cycle lengths ≥ 2, sorted descending. The identity yields `[]`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; MAX_DEGREE];
        let mut lens = Vec::new();
        for start in 0..MAX_DEGREE {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            loop {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur] as usize;
                if cur == start {
                    break;
                }
            }
            if len >= 2 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        transpositions % 2 == 0
    }

    /// Cycle notation over 1-based points, e.g. `(1 2)(3 4)`; `e` for the
    /// identity.
    pub fn cycle_string(&self) -> String {
        use core::fmt::Write;
        let mut seen = [false; MAX_DEGREE];
        let mut out = String::new();
        for start in 0..MAX_DEGREE {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut cur = start;
            let mut first = true;
            loop {
                seen[cur] = true;
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{}", cur + 1);
                first = false;
                cur = self.images[cur] as usize;
                if cur == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::from_cycles(&[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(&[&[1, 2]]).unwrap();
        // (a ∘ b)(1) = a(2) = 2, (b ∘ a)(1) = b(0) = 0.
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(b.compose(&a).apply(1), 0);
    }

    #[test]
    fn inverse_and_order() {
        let c = Perm::from_cycles(&[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(c.pow(4), Perm::identity());
    }

    #[test]
    fn parity_and_cycle_type() {
        let t = Perm::from_cycles(&[&[0, 1]]).unwrap();
        let dt = Perm::from_cycles(&[&[0, 1], &[2, 3]]).unwrap();
        let five = Perm::from_cycles(&[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(!t.is_even());
        assert!(dt.is_even());
        assert!(five.is_even());
        assert_eq!(dt.cycle_type(), alloc::vec![2, 2]);
    }

    #[test]
    fn cycle_string_is_one_based() {
        let t = Perm::from_cycles(&[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(t.cycle_string(), "(1 2)(3 4)");
        assert_eq!(Perm::identity().cycle_string(), "e");
    }
}
