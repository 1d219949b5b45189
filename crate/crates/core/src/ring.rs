//! Elements of the two supported rings: the integers and the quadratic
//! order Z[sqrt(-5)], whose elements are written `a + b*sqrt(-5)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `d` in `Z[sqrt(d)]` for the quadratic backend.
pub const D: i64 = -5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Z,
    ZSqrtMinus5,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Z => "Z",
            Ring::ZSqrtMinus5 => "ZSqrt-5",
        }
    }

    pub fn parse(s: &str) -> Option<Ring> {
        match s {
            "Z" => Some(Ring::Z),
            "ZSqrt-5" | "Z[sqrt(-5)]" => Some(Ring::ZSqrtMinus5),
            _ => None,
        }
    }

    pub fn check_same(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self, other))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact ring element `a + b*sqrt(-5)`; `b` is always zero over `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    ring: Ring,
    a: BigInt,
    b: BigInt,
}

impl RingElem {
    pub fn int(a: impl Into<BigInt>) -> Self {
        RingElem { ring: Ring::Z, a: a.into(), b: BigInt::zero() }
    }

    pub fn quad(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RingElem { ring: Ring::ZSqrtMinus5, a: a.into(), b: b.into() }
    }

    /// Builds an element of `ring`; fails if a nonzero `b` is given for `Z`.
    pub fn new(ring: Ring, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let b = b.into();
        if ring == Ring::Z && !b.is_zero() {
            return Err(Error::Malformed("integer element with nonzero sqrt(-5) part".into()));
        }
        Ok(RingElem { ring, a: a.into(), b })
    }

    /// Embeds an integer into `ring`.
    pub fn from_int(ring: Ring, a: impl Into<BigInt>) -> Self {
        RingElem { ring, a: a.into(), b: BigInt::zero() }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_int(ring, 1)
    }

    /// `sqrt(-5)` itself.
    pub fn root() -> Self {
        Self::quad(0, 1)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a^2 + 5 b^2`. Over `Z` this is `a^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(D) * &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        RingElem { ring: self.ring, a: self.a.clone(), b: -&self.b }
    }

    /// Units are exactly `1` and `-1` in both rings.
    pub fn is_unit(&self) -> bool {
        self.b.is_zero() && self.a.abs().is_one()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(other.ring)?;
        Ok(self * other)
    }

    /// Exact quotient `self / other` when it lies in the ring.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let n = other.norm();
        let num = self * &other.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        if ra.is_zero() && rb.is_zero() {
            Some(RingElem { ring: self.ring, a: qa, b: qb })
        } else {
            None
        }
    }

    /// Scales both coordinates by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        RingElem { ring: self.ring, a: &self.a * k, b: &self.b * k }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt(-5)", self.b)
        } else if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(-5)", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*sqrt(-5)", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in add");
        RingElem { ring: self.ring, a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in sub");
        RingElem { ring: self.ring, a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in mul");
        // (a + b r)(c + d r) = ac + D bd + (ad + bc) r
        let a = &self.a * &rhs.a + BigInt::from(D) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        RingElem { ring: self.ring, a, b }
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { ring: self.ring, a: -&self.a, b: -&self.b }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}
