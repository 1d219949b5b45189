//! Integral and fractional ideals of `Z` and `Z[sqrt(-5)]`, and ideal classes.
//!
//! Over `Z` an ideal is stored as its nonnegative generator. Over
//! `Z[sqrt(-5)]` a nonzero ideal is a rank-2 sublattice of `Z^2` (coordinates
//! `(u, v)` for `u + v*sqrt(-5)`) stored in row Hermite normal form
//!
//! ```text
//! [ a 0 ]
//! [ b c ]     a > 0, c > 0, 0 <= b < a
//! ```
//!
//! so structural equality is ideal equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem, D};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Basis {
    Zero,
    Int(BigInt),
    Hnf { a: BigInt, b: BigInt, c: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    ring: Ring,
    basis: Basis,
}

/// Row HNF of an integer lattice in `Z^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LatticeHnf {
    Zero,
    /// Lattice of rank one; never an ideal of the quadratic order.
    Degenerate,
    Full { a: BigInt, b: BigInt, c: BigInt },
}

fn egcd(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = x.extended_gcd(y);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub(crate) fn lattice_hnf<'a>(vectors: impl IntoIterator<Item = (&'a BigInt, &'a BigInt)>) -> LatticeHnf {
    // `w` carries the gcd of all second coordinates; `h` the gcd of the
    // horizontal sublattice.
    let mut wu = BigInt::zero();
    let mut wv = BigInt::zero();
    let mut h = BigInt::zero();
    for (u, v) in vectors {
        if v.is_zero() {
            h = h.gcd(u);
        } else if wv.is_zero() {
            if v.is_negative() {
                wu = -u;
                wv = -v;
            } else {
                wu = u.clone();
                wv = v.clone();
            }
        } else {
            let (g, s, t) = egcd(&wv, v);
            let horizontal = (v / &g) * &wu - (&wv / &g) * u;
            h = h.gcd(&horizontal);
            wu = s * &wu + t * u;
            wv = g;
        }
    }
    match (h.is_zero(), wv.is_zero()) {
        (true, true) => LatticeHnf::Zero,
        (false, false) => {
            let b = wu.mod_floor(&h);
            LatticeHnf::Full { a: h, b, c: wv }
        }
        _ => LatticeHnf::Degenerate,
    }
}

impl Ideal {
    pub fn zero(ring: Ring) -> Self {
        Ideal { ring, basis: Basis::Zero }
    }

    pub fn unit(ring: Ring) -> Self {
        Self::from_int(ring, 1)
    }

    /// The principal ideal `(k)` for an integer `k`.
    pub fn from_int(ring: Ring, k: impl Into<BigInt>) -> Self {
        let k = k.into().abs();
        if k.is_zero() {
            return Self::zero(ring);
        }
        match ring {
            Ring::Z => Ideal { ring, basis: Basis::Int(k) },
            Ring::ZSqrtMinus5 => Ideal {
                ring,
                basis: Basis::Hnf { a: k.clone(), b: BigInt::zero(), c: k },
            },
        }
    }

    pub fn principal(x: &RingElem) -> Self {
        Self::from_generators(std::slice::from_ref(x)).expect("one generator")
    }

    /// Builds an ideal directly from HNF rows `[[a, 0], [b, c]]`, checking
    /// canonical form and closure under multiplication by `sqrt(-5)`.
    pub fn from_hnf(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if !a.is_positive() || !c.is_positive() || b.is_negative() || b >= a {
            return Err(Error::Malformed(format!("[[{a}, 0], [{b}, {c}]] is not in canonical HNF")));
        }
        let ideal = Ideal { ring: Ring::ZSqrtMinus5, basis: Basis::Hnf { a, b, c } };
        let closed = ideal.z_basis().iter().all(|x| ideal.contains(&(x * &RingElem::root())));
        if !closed {
            return Err(Error::Malformed("lattice is not closed under sqrt(-5)".into()));
        }
        Ok(ideal)
    }

    /// The ideal generated by `elems`.
    pub fn from_generators(elems: &[RingElem]) -> Result<Self> {
        let first = elems.first().ok_or(Error::EmptyGenerators)?;
        let ring = first.ring();
        for e in elems {
            ring.check_same(e.ring())?;
        }
        match ring {
            Ring::Z => {
                let g = elems.iter().fold(BigInt::zero(), |g, e| g.gcd(e.a()));
                Ok(Self::from_int(Ring::Z, g))
            }
            Ring::ZSqrtMinus5 => {
                let mut vecs = Vec::with_capacity(2 * elems.len());
                for e in elems {
                    // e * sqrt(-5) = D b + a sqrt(-5)
                    vecs.push((e.a().clone(), e.b().clone()));
                    vecs.push((e.b() * D, e.a().clone()));
                }
                Ok(Self::from_lattice(&vecs))
            }
        }
    }

    fn from_lattice(vecs: &[(BigInt, BigInt)]) -> Self {
        match lattice_hnf(vecs.iter().map(|(u, v)| (u, v))) {
            LatticeHnf::Zero => Self::zero(Ring::ZSqrtMinus5),
            LatticeHnf::Full { a, b, c } => Ideal { ring: Ring::ZSqrtMinus5, basis: Basis::Hnf { a, b, c } },
            LatticeHnf::Degenerate => unreachable!("an ideal lattice has rank 0 or 2"),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.basis, Basis::Zero)
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Generator over `Z` (0 for the zero ideal); `None` for the quadratic ring.
    pub fn int_generator(&self) -> Option<BigInt> {
        match &self.basis {
            Basis::Int(g) => Some(g.clone()),
            Basis::Zero if self.ring == Ring::Z => Some(BigInt::zero()),
            _ => None,
        }
    }

    /// HNF rows `[[a, 0], [b, c]]`, or `None` for the zero ideal and for `Z`.
    pub fn hnf(&self) -> Option<[[BigInt; 2]; 2]> {
        match &self.basis {
            Basis::Hnf { a, b, c } => Some([[a.clone(), BigInt::zero()], [b.clone(), c.clone()]]),
            _ => None,
        }
    }

    /// Index in the ring; 0 for the zero ideal.
    pub fn norm(&self) -> BigInt {
        match &self.basis {
            Basis::Zero => BigInt::zero(),
            Basis::Int(g) => g.clone(),
            Basis::Hnf { a, c, .. } => a * c,
        }
    }

    /// A `Z`-basis (one element over `Z`, two over the quadratic order).
    pub fn z_basis(&self) -> Vec<RingElem> {
        match &self.basis {
            Basis::Zero => vec![RingElem::zero(self.ring)],
            Basis::Int(g) => vec![RingElem::int(g.clone())],
            Basis::Hnf { a, b, c } => vec![RingElem::quad(a.clone(), 0), RingElem::quad(b.clone(), c.clone())],
        }
    }

    pub fn contains(&self, x: &RingElem) -> bool {
        assert_eq!(self.ring, x.ring(), "ring mismatch in membership test");
        match &self.basis {
            Basis::Zero => x.is_zero(),
            Basis::Int(g) => x.a().is_multiple_of(g),
            Basis::Hnf { a, b, c } => {
                if !x.b().is_multiple_of(c) {
                    return false;
                }
                let t = x.b() / c;
                (x.a() - t * b).is_multiple_of(a)
            }
        }
    }

    pub fn mul(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring));
        }
        let mut gens = Vec::with_capacity(4);
        for x in self.z_basis() {
            for y in other.z_basis() {
                gens.push(&x * &y);
            }
        }
        Self::from_generators(&gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(other.ring)?;
        let mut gens = self.z_basis();
        gens.extend(other.z_basis());
        Self::from_generators(&gens)
    }

    /// `self | other`, i.e. `other ⊆ self`. The zero ideal divides only itself.
    pub fn divides(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(other.ring)?;
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.z_basis().iter().all(|y| self.contains(y)))
    }

    /// Product of a list of ideals; the unit ideal for an empty list.
    pub fn product<'a>(ring: Ring, ideals: impl IntoIterator<Item = &'a Ideal>) -> Result<Ideal> {
        ideals.into_iter().try_fold(Self::unit(ring), |acc, x| acc.mul(x))
    }

    /// Image under `sqrt(-5) -> -sqrt(-5)`; the identity over `Z`.
    pub fn conj(&self) -> Ideal {
        match &self.basis {
            Basis::Hnf { .. } => {
                let gens: Vec<_> = self.z_basis().iter().map(RingElem::conj).collect();
                Self::from_generators(&gens).expect("nonempty")
            }
            _ => self.clone(),
        }
    }

    /// Largest positive integer `g` with `self ⊆ gO`; 0 for the zero ideal.
    pub fn content(&self) -> BigInt {
        match &self.basis {
            Basis::Zero => BigInt::zero(),
            Basis::Int(g) => g.clone(),
            Basis::Hnf { a, b, c } => a.gcd(b).gcd(c),
        }
    }

    /// `k * self` for a positive integer `k`.
    pub fn scale_int(&self, k: &BigInt) -> Ideal {
        assert!(k.is_positive());
        let basis = match &self.basis {
            Basis::Zero => Basis::Zero,
            Basis::Int(g) => Basis::Int(g * k),
            Basis::Hnf { a, b, c } => Basis::Hnf { a: a * k, b: b * k, c: c * k },
        };
        Ideal { ring: self.ring, basis }
    }

    /// `self / k`, provided `k` divides the content.
    fn div_int(&self, k: &BigInt) -> Ideal {
        debug_assert!(self.content().is_multiple_of(k));
        let basis = match &self.basis {
            Basis::Zero => Basis::Zero,
            Basis::Int(g) => Basis::Int(g / k),
            Basis::Hnf { a, b, c } => Basis::Hnf { a: a / k, b: b / k, c: c / k },
        };
        Ideal { ring: self.ring, basis }
    }

    /// `self * divisor^{-1}` when that quotient is integral.
    pub fn div_exact(&self, divisor: &Ideal) -> Result<Option<Ideal>> {
        let q = FracIdeal::from_ideal(self.clone())
            .and_then(|x| x.mul(&FracIdeal::from_ideal(divisor.clone())?.inverse()))
            .map(|q| q.into_integral());
        match q {
            Ok(q) => Ok(q),
            // 0 * divisor^{-1} = 0
            Err(Error::ZeroIdeal) if self.is_zero() && !divisor.is_zero() => Ok(Some(self.clone())),
            Err(e) => Err(e),
        }
    }

    /// A generator if the ideal is principal. The zero ideal is generated by 0.
    ///
    /// Over the quadratic order every element of norm `N(self)` is tried; an
    /// element of the ideal with the same norm generates it.
    pub fn principal_generator(&self) -> Option<RingElem> {
        match &self.basis {
            Basis::Zero => Some(RingElem::zero(self.ring)),
            Basis::Int(g) => Some(RingElem::int(g.clone())),
            Basis::Hnf { .. } => {
                let n = self.norm();
                let neg_d = BigInt::from(-D);
                let mut b = BigInt::zero();
                while &neg_d * &b * &b <= n {
                    let rest = &n - &neg_d * &b * &b;
                    let s = rest.sqrt();
                    if &s * &s == rest {
                        for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            let x = RingElem::quad(&s * sa, &b * sb);
                            if self.contains(&x) {
                                debug_assert_eq!(Ideal::principal(&x), *self);
                                return Some(x);
                            }
                        }
                    }
                    b += 1;
                }
                None
            }
        }
    }

    pub fn is_principal(&self) -> bool {
        self.principal_generator().is_some()
    }

    pub fn class(&self) -> Result<IdealClass> {
        IdealClass::of(self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.basis {
            Basis::Zero => write!(f, "(0)"),
            Basis::Int(g) => write!(f, "({g})"),
            Basis::Hnf { a, b, c } => {
                write!(f, "({a}, {})", RingElem::quad(b.clone(), c.clone()))
            }
        }
    }
}

/// A fractional ideal `num / den` with `num` nonzero and `den > 0`, kept
/// reduced so that no integer `> 1` divides both `den` and the content of `num`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    num: Ideal,
    den: BigInt,
}

impl FracIdeal {
    pub fn new(num: Ideal, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if num.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !den.is_positive() {
            return Err(Error::Malformed("denominator must be positive".into()));
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_ideal(num: Ideal) -> Result<Self> {
        Self::new(num, 1)
    }

    fn reduced(num: Ideal, den: BigInt) -> Self {
        let g = num.content().gcd(&den);
        if g.is_one() {
            FracIdeal { num, den }
        } else {
            FracIdeal { num: num.div_int(&g), den: den / g }
        }
    }

    pub fn num(&self) -> &Ideal {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn ring(&self) -> Ring {
        self.num.ring
    }

    pub fn mul(&self, other: &FracIdeal) -> Result<FracIdeal> {
        let num = self.num.mul(&other.num)?;
        Ok(Self::reduced(num, &self.den * &other.den))
    }

    pub fn sum(&self, other: &FracIdeal) -> Result<FracIdeal> {
        let num = self.num.scale_int(&other.den).sum(&other.num.scale_int(&self.den))?;
        Ok(Self::reduced(num, &self.den * &other.den))
    }

    /// `self | other`, i.e. `other * self^{-1}` is integral.
    pub fn divides(&self, other: &FracIdeal) -> Result<bool> {
        // other/e ⊆ self/d  <=>  d*other ⊆ e*self
        self.num.scale_int(&other.den).divides(&other.num.scale_int(&self.den))
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn into_integral(self) -> Option<Ideal> {
        self.is_integral().then_some(self.num)
    }

    /// Over the quadratic order `(num/den)^{-1} = den * conj(num) / N(num)`,
    /// using `X * conj(X) = (N(X))`; over `Z` it is `(den) / g`.
    pub fn inverse(&self) -> FracIdeal {
        match self.num.int_generator() {
            Some(g) => Self::reduced(Ideal::from_int(Ring::Z, self.den.clone()), g),
            None => Self::reduced(self.num.conj().scale_int(&self.den), self.num.norm()),
        }
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Class of a nonzero ideal. `Z` has trivial class group; `Z[sqrt(-5)]` has
/// class group of order two, so a class is one bit.
#[derive(Debug, Clone)]
pub struct IdealClass {
    representative: Ideal,
    principal: bool,
}

impl IdealClass {
    pub fn of(ideal: &Ideal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(IdealClass { representative: ideal.clone(), principal: ideal.is_principal() })
    }

    pub fn principal_class(ring: Ring) -> Self {
        IdealClass { representative: Ideal::unit(ring), principal: true }
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    pub fn representative(&self) -> &Ideal {
        &self.representative
    }

    pub fn ring(&self) -> Ring {
        self.representative.ring
    }

    pub fn mul(&self, other: &IdealClass) -> Result<IdealClass> {
        Ok(IdealClass {
            representative: self.representative.mul(&other.representative)?,
            // order-2 group: non-principal * non-principal = principal
            principal: self.principal == other.principal,
        })
    }

    pub fn label(&self) -> &'static str {
        if self.principal {
            "principal"
        } else {
            "non-principal"
        }
    }
}

impl PartialEq for IdealClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring() == other.ring() && self.principal == other.principal
    }
}

impl Eq for IdealClass {}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> RingElem {
        RingElem::quad(a, b)
    }

    fn int(k: i64) -> Ideal {
        Ideal::from_int(Ring::Z, k)
    }

    fn p2() -> Ideal {
        Ideal::from_generators(&[q(2, 0), q(1, 1)]).unwrap()
    }

    fn big(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn integer_generators() {
        let x = Ideal::from_generators(&[RingElem::int(4), RingElem::int(-6)]).unwrap();
        assert_eq!(x, int(2));
        let z = Ideal::from_generators(&[RingElem::int(0), RingElem::int(0)]).unwrap();
        assert!(z.is_zero());
        assert_eq!(Ideal::from_generators(&[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn ramified_prime_over_two() {
        let p = p2();
        assert_eq!(p.hnf().unwrap(), [[big(2), big(0)], [big(1), big(1)]]);
        assert_eq!(p.norm(), big(2));
        assert_eq!(p.mul(&p).unwrap(), Ideal::from_int(Ring::ZSqrtMinus5, 2));
    }

    #[test]
    fn sums_and_products_over_z() {
        assert_eq!(int(2).mul(&int(3)).unwrap(), int(6));
        assert_eq!(int(4).sum(&int(6)).unwrap(), int(2));
        assert_eq!(int(4).sum(&Ideal::zero(Ring::Z)).unwrap(), int(4));
        let p = p2();
        assert_eq!(p.mul(&Ideal::unit(Ring::ZSqrtMinus5)).unwrap(), p);
    }

    #[test]
    fn sum_of_principal_ideals_gives_prime() {
        let two = Ideal::principal(&q(2, 0));
        let other = Ideal::principal(&q(1, 1));
        assert_eq!(two.sum(&other).unwrap(), p2());
    }

    #[test]
    fn divisibility() {
        assert!(int(2).divides(&int(6)).unwrap());
        assert!(!int(4).divides(&int(6)).unwrap());
        assert!(p2().divides(&Ideal::from_int(Ring::ZSqrtMinus5, 2)).unwrap());
        assert!(!Ideal::from_int(Ring::ZSqrtMinus5, 2).divides(&p2()).unwrap());
        let z = Ideal::zero(Ring::Z);
        assert!(z.divides(&z).unwrap());
        assert!(!z.divides(&int(3)).unwrap());
        assert!(int(3).divides(&z).unwrap());
    }

    #[test]
    fn fractional_arithmetic() {
        let x = FracIdeal::new(int(2), 1).unwrap();
        let y = FracIdeal::new(int(3), 2).unwrap();
        let prod = x.mul(&y).unwrap();
        assert_eq!(prod, FracIdeal::new(int(3), 1).unwrap());
        assert!(prod.is_integral());

        let s = FracIdeal::new(int(4), 2).unwrap().sum(&FracIdeal::new(int(6), 2).unwrap()).unwrap();
        assert_eq!(s, FracIdeal::from_ideal(int(1)).unwrap());

        let one = FracIdeal::from_ideal(int(1)).unwrap();
        assert!(one.divides(&FracIdeal::from_ideal(int(35)).unwrap()).unwrap());
        assert!(FracIdeal::new(Ideal::zero(Ring::Z), 1).is_err());
    }

    #[test]
    fn inverse_of_prime() {
        let p = FracIdeal::from_ideal(p2()).unwrap();
        let inv = p.inverse();
        assert_eq!(*inv.den(), big(2));
        let one = p.mul(&inv).unwrap();
        assert_eq!(one, FracIdeal::from_ideal(Ideal::unit(Ring::ZSqrtMinus5)).unwrap());
    }

    #[test]
    fn exact_quotients() {
        let two = Ideal::from_int(Ring::ZSqrtMinus5, 2);
        assert_eq!(two.div_exact(&p2()).unwrap(), Some(p2()));
        assert_eq!(p2().div_exact(&two).unwrap(), None);
        assert_eq!(int(12).div_exact(&int(4)).unwrap(), Some(int(3)));
    }

    #[test]
    fn principality() {
        assert_eq!(int(6).principal_generator(), Some(RingElem::int(6)));
        assert_eq!(p2().principal_generator(), None);
        let two = p2().mul(&p2()).unwrap();
        let g = two.principal_generator().unwrap();
        assert_eq!(g.norm(), big(4));
        assert_eq!(Ideal::principal(&g), two);
        assert!(Ideal::zero(Ring::ZSqrtMinus5).is_principal());
    }

    #[test]
    fn classes() {
        let p = p2().class().unwrap();
        assert!(!p.is_principal());
        assert!(p.mul(&p).unwrap().is_principal());
        assert!(p2().mul(&p2()).unwrap().class().unwrap().is_principal());
        assert!(Ideal::principal(&q(3, 7)).class().unwrap().is_principal());
        assert!(Ideal::zero(Ring::Z).class().is_err());
    }

    #[test]
    fn hnf_validation() {
        assert_eq!(Ideal::from_hnf(big(2), big(1), big(1)).unwrap(), p2());
        // (3, 0; 0, 1) is not closed: sqrt(-5) * sqrt(-5) = -5 is not in it.
        assert!(Ideal::from_hnf(big(3), big(0), big(1)).is_err());
        assert!(Ideal::from_hnf(big(2), big(2), big(1)).is_err());
    }
}
