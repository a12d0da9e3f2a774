//! Exact elements of Q(√5), the smallest field containing every character
//! value that occurs for S4, A5 and their dihedral subgroups.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

type Rat = Ratio<i64>;

/// An exact value `a + b·√5` with rational `a`, `b`.
///
/// All S4 and dihedral character values are rational (`b = 0`); the two
/// three-dimensional characters of A5 take the golden-ratio values
/// `(1 ± √5)/2` on the five-cycles.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadValue {
    a: Rat,
    b: Rat,
}

impl QuadValue {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadValue { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QuadValue {
            a: Rat::from_integer(n),
            b: Rat::zero(),
        }
    }

    /// `(p + q·√5) / den` with integer inputs.
    pub fn from_parts(p: i64, q: i64, den: i64) -> Self {
        QuadValue {
            a: Rat::new(p, den),
            b: Rat::new(q, den),
        }
    }

    pub fn zero() -> Self {
        QuadValue::from_int(0)
    }

    pub fn one() -> Self {
        QuadValue::from_int(1)
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn golden() -> Self {
        QuadValue::from_parts(1, 1, 2)
    }

    /// The conjugate golden ratio `(1 - √5)/2`.
    pub fn golden_conj() -> Self {
        QuadValue::from_parts(1, -1, 2)
    }

    pub fn rational_part(&self) -> Rat {
        self.a
    }

    pub fn surd_part(&self) -> Rat {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Returns the value as an integer when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// Galois conjugate `a - b·√5`.
    pub fn conjugate(&self) -> Self {
        QuadValue {
            a: self.a,
            b: -self.b,
        }
    }

    /// Division by a nonzero rational (used for the 1/|G| inner-product
    /// normalisation).
    pub fn div_rational(&self, den: i64) -> Self {
        assert!(den != 0, "division by zero rational");
        let d = Rat::from_integer(den);
        QuadValue {
            a: self.a / d,
            b: self.b / d,
        }
    }
}

impl Add for QuadValue {
    type Output = QuadValue;
    fn add(self, rhs: QuadValue) -> QuadValue {
        QuadValue {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl AddAssign for QuadValue {
    fn add_assign(&mut self, rhs: QuadValue) {
        *self = *self + rhs;
    }
}

impl Sub for QuadValue {
    type Output = QuadValue;
    fn sub(self, rhs: QuadValue) -> QuadValue {
        QuadValue {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Mul for QuadValue {
    type Output = QuadValue;
    fn mul(self, rhs: QuadValue) -> QuadValue {
        // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        let five = Rat::from_integer(5);
        QuadValue {
            a: self.a * rhs.a + five * self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl Neg for QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        QuadValue {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat(f: &mut fmt::Formatter<'_>, r: Rat) -> fmt::Result {
            if r.is_integer() {
                write!(f, "{}", r.to_integer())
            } else {
                write!(f, "{}/{}", r.numer(), r.denom())
            }
        }
        if self.b.is_zero() {
            return rat(f, self.a);
        }
        // Common small denominators render as (p ± q√5)/den.
        let den = *self.a.denom() * *self.b.denom()
            / num_integer::gcd(*self.a.denom(), *self.b.denom());
        let p = self.a.numer() * (den / self.a.denom());
        let q = self.b.numer() * (den / self.b.denom());
        let surd = if q == 1 {
            alloc::string::String::from("√5")
        } else if q == -1 {
            alloc::string::String::from("-√5")
        } else {
            alloc::format!("{}√5", q)
        };
        if den == 1 {
            if p == 0 {
                write!(f, "{}", surd)
            } else if q.is_negative() {
                write!(f, "{}{}", p, surd)
            } else {
                write!(f, "{}+{}", p, surd)
            }
        } else if p == 0 {
            write!(f, "{}/{}", surd, den)
        } else if q.is_negative() {
            write!(f, "({}{})/{}", p, surd, den)
        } else {
            write!(f, "({}+{})/{}", p, surd, den)
        }
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
