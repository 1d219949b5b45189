//! Determinantal and elementary divisors, rank and column class.

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealClass};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// The determinantal divisors `d_1, .., d_n` of one matrix together with the
/// elementary divisors `e_k = d_k d_{k-1}^{-1}` (with `d_0 = (1)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorChain {
    ring: Ring,
    d: Vec<Ideal>,
    e: Vec<Ideal>,
}

impl DivisorChain {
    /// Chain from determinantal divisors. Fails unless every `e_k` is integral.
    pub fn from_determinantal(ring: Ring, d: Vec<Ideal>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        let mut e = Vec::with_capacity(d.len());
        let mut prev = Ideal::unit(ring);
        for (k, dk) in d.iter().enumerate() {
            ring.check_same(dk.ring())?;
            let ek = if dk.is_zero() {
                Ideal::zero(ring)
            } else if prev.is_zero() {
                return Err(Error::InvalidChain(format!("d_{} is nonzero after a zero divisor", k + 1)));
            } else {
                dk.div_exact(&prev)?
                    .ok_or_else(|| Error::InvalidChain(format!("d_{} does not divide d_{}", k, k + 1)))?
            };
            e.push(ek);
            prev = dk.clone();
        }
        Ok(DivisorChain { ring, d, e })
    }

    /// Chain from elementary divisors: `d_k = e_1 ⋯ e_k`.
    pub fn from_elementary(ring: Ring, e: Vec<Ideal>) -> Result<Self> {
        if e.is_empty() {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        let mut d = Vec::with_capacity(e.len());
        let mut acc = Ideal::unit(ring);
        for ek in &e {
            acc = acc.mul(ek)?;
            d.push(acc.clone());
        }
        Ok(DivisorChain { ring, d, e })
    }

    /// Integer chain from determinantal divisor values.
    pub fn from_ints(d: &[i64]) -> Result<Self> {
        Self::from_determinantal(Ring::Z, d.iter().map(|&x| Ideal::from_int(Ring::Z, x)).collect())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// `d_k` with the conventions `d_k = (1)` for `k <= 0` and `(0)` for `k > n`.
    pub fn d(&self, k: isize) -> Ideal {
        if k <= 0 {
            Ideal::unit(self.ring)
        } else {
            self.d.get(k as usize - 1).cloned().unwrap_or_else(|| Ideal::zero(self.ring))
        }
    }

    pub fn determinantal(&self) -> &[Ideal] {
        &self.d
    }

    pub fn elementary(&self) -> &[Ideal] {
        &self.e
    }

    pub fn last(&self) -> &Ideal {
        self.d.last().expect("nonempty")
    }

    pub fn has_zero(&self) -> bool {
        self.d.iter().any(Ideal::is_zero)
    }

    /// Elementwise product `d_k(self) * d_k(other)`.
    pub fn product(&self, other: &DivisorChain) -> Result<DivisorChain> {
        self.ring.check_same(other.ring)?;
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        let d = self.d.iter().zip(&other.d).map(|(x, y)| x.mul(y)).collect::<Result<Vec<_>>>()?;
        Self::from_determinantal(self.ring, d)
    }
}

/// `d_k(M)`: the ideal generated by all k×k minors.
pub fn det_divisor(m: &Matrix, k: isize) -> Result<Ideal> {
    let ring = m.ring();
    if k <= 0 {
        return Ok(Ideal::unit(ring));
    }
    let k = k as usize;
    if k > m.n() || k > m.rank() {
        return Ok(Ideal::zero(ring));
    }
    let c = m.compound(k)?;
    Ideal::from_generators(c.entries())
}

/// `e_k(M) = d_k(M) d_{k-1}(M)^{-1}`, or `(0)` when `d_k(M) = (0)`.
pub fn elem_divisor(m: &Matrix, k: isize) -> Result<Ideal> {
    let dk = det_divisor(m, k)?;
    if dk.is_zero() {
        return Ok(dk);
    }
    let prev = det_divisor(m, k - 1)?;
    dk.div_exact(&prev)?
        .ok_or_else(|| Error::InvalidChain(format!("d_{} does not divide d_{k}", k - 1)))
}

/// Largest `r` with a nonzero r×r minor.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Ideal class of the gcd of a nonzero column of the `rank(M)`-th compound.
/// Panics if two nonzero columns disagree.
pub fn column_class(m: &Matrix) -> Result<IdealClass> {
    let r = m.rank();
    if r == 0 {
        return Err(Error::ZeroMatrix);
    }
    let c = m.compound(r)?;
    let mut class: Option<IdealClass> = None;
    for j in 0..c.n() {
        let col: Vec<_> = (0..c.n()).map(|i| c.get(i, j).clone()).collect();
        if col.iter().all(|x| x.is_zero()) {
            continue;
        }
        let cl = Ideal::from_generators(&col)?.class()?;
        match &class {
            None => class = Some(cl),
            Some(prev) => assert_eq!(*prev, cl, "column class depends on the chosen column"),
        }
    }
    Ok(class.expect("rank >= 1 gives a nonzero column"))
}

/// All determinantal and elementary divisors of `m`.
pub fn divisor_chain(m: &Matrix) -> Result<DivisorChain> {
    let d = (1..=m.n() as isize).map(|k| det_divisor(m, k)).collect::<Result<Vec<_>>>()?;
    DivisorChain::from_determinantal(m.ring(), d)
}
