//! Dense square matrices over a ring backend, determinants, and compounds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};

/// Largest dimension for which cofactor expansion is run over `Z[sqrt(-5)]`.
pub const QUAD_DET_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    n: usize,
    entries: Vec<RingElem>,
}

impl Matrix {
    pub fn from_rows(ring: Ring, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            for x in row {
                ring.check_same(x.ring())?;
                entries.push(x);
            }
        }
        Ok(Matrix { ring, n, entries })
    }

    /// Integer matrix from rows of `i64`.
    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(Ring::Z, N, |i, j| RingElem::int(rows[i][j]))
    }

    /// Quadratic-ring matrix from rows of `(a, b)` coordinate pairs.
    pub fn from_quads<const N: usize>(rows: [[(i64, i64); N]; N]) -> Self {
        Self::from_fn(Ring::ZSqrtMinus5, N, |i, j| RingElem::quad(rows[i][j].0, rows[i][j].1))
    }

    pub fn from_fn(ring: Ring, n: usize, mut f: impl FnMut(usize, usize) -> RingElem) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let x = f(i, j);
                assert_eq!(x.ring(), ring);
                entries.push(x);
            }
        }
        Matrix { ring, n, entries }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::from_fn(ring, n, |i, j| RingElem::from_int(ring, (i == j) as i64))
    }

    pub fn zero(ring: Ring, n: usize) -> Self {
        Self::from_fn(ring, n, |_, _| RingElem::zero(ring))
    }

    pub fn diagonal(ring: Ring, diag: &[RingElem]) -> Self {
        Self::from_fn(ring, diag.len(), |i, j| if i == j { diag[i].clone() } else { RingElem::zero(ring) })
    }

    /// Block-diagonal matrix assembled from square blocks.
    pub fn block_diag(blocks: &[Matrix]) -> Result<Self> {
        let first = blocks.first().ok_or_else(|| Error::Malformed("no blocks".into()))?;
        let ring = first.ring;
        for b in blocks {
            ring.check_same(b.ring)?;
        }
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zero(ring, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.n;
        }
        Ok(m)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RingElem) {
        assert_eq!(x.ring(), self.ring);
        self.entries[i * self.n + j] = x;
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<RingElem>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElem::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.ring.check_same(other.ring)?;
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let zero = RingElem::zero(self.ring);
        Ok(Self::from_fn(self.ring, n, |i, j| {
            (0..n).fold(zero.clone(), |acc, k| &acc + &(self.get(i, k) * other.get(k, j)))
        }))
    }

    /// Submatrix on the given (0-based) row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        assert_eq!(rows.len(), cols.len());
        Self::from_fn(self.ring, rows.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn det(&self) -> Result<RingElem> {
        match self.ring {
            Ring::Z => Ok(bareiss_det(self.entries.clone(), self.n)),
            Ring::ZSqrtMinus5 => {
                if self.n > QUAD_DET_CAP {
                    return Err(Error::DimensionCap { n: self.n, cap: QUAD_DET_CAP });
                }
                Ok(cofactor_det(self))
            }
        }
    }

    /// Member of `I_n`: nonzero determinant.
    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(!self.det()?.is_zero())
    }

    /// Member of `U_n`: determinant `±1`.
    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.det()?.is_unit())
    }

    /// Rank over the fraction field, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        let n = self.n;
        let mut rank = 0;
        let mut prev = RingElem::one(self.ring);
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            let pivot = pivot_row[col].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    let t = &(&pivot * &*x) - &(&factor * p);
                    *x = t.div_exact(&prev).expect("fraction-free step divides exactly");
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// The k-th compound: all k×k minors, rows and columns indexed by
    /// [`subsets`] in lexicographic order.
    pub fn compound(&self, k: usize) -> Result<Matrix> {
        let idx = subsets(self.n, k)?;
        let m = idx.len();
        let mut entries = Vec::with_capacity(m * m);
        for rs in &idx {
            for cs in &idx {
                entries.push(self.submatrix(rs, cs).det()?);
            }
        }
        Ok(Matrix { ring: self.ring, n: m, entries })
    }

    /// Inverse of a unimodular matrix via the adjugate.
    pub fn unimodular_inverse(&self) -> Result<Matrix> {
        let det = self.det()?;
        if !det.is_unit() {
            return Err(Error::Precondition("matrix is not unimodular".into()));
        }
        if self.n == 1 {
            return Ok(Matrix { ring: self.ring, n: 1, entries: vec![det] });
        }
        let n = self.n;
        let mut inv = Self::zero(self.ring, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let mut cof = self.submatrix(&rows, &cols).det()?;
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                // det = ±1, so dividing by det is multiplying by it
                inv.set(i, j, &cof * &det);
            }
        }
        Ok(inv)
    }

    /// Largest absolute value among all coordinates of all entries.
    pub fn max_coordinate(&self) -> BigInt {
        use num_traits::Signed;
        self.entries
            .iter()
            .flat_map(|x| [x.a().abs(), x.b().abs()])
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All k-subsets of `{0, .., n-1}` as sorted index vectors, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange { k, n });
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance the rightmost index that still has room
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return Ok(out);
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn bareiss_det(mut a: Vec<RingElem>, n: usize) -> RingElem {
    let ring = a[0].ring();
    let mut sign = false;
    let mut prev = RingElem::one(ring);
    for k in 0..n {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return RingElem::zero(ring);
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            sign = !sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&pivot * &a[i * n + j]) - &(&a[i * n + k] * &a[k * n + j]);
                a[i * n + j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn cofactor_det(m: &Matrix) -> RingElem {
    fn rec(m: &Matrix, rows: &[usize], cols: &mut Vec<usize>) -> RingElem {
        let ring = m.ring;
        if rows.is_empty() {
            return RingElem::one(ring);
        }
        let r = rows[0];
        let mut acc = RingElem::zero(ring);
        for pos in 0..cols.len() {
            let c = cols[pos];
            let x = m.get(r, c);
            if x.is_zero() {
                continue;
            }
            cols.remove(pos);
            let minor = rec(m, &rows[1..], cols);
            cols.insert(pos, c);
            let term = x * &minor;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let rows: Vec<usize> = (0..m.n).collect();
    rec(m, &rows, &mut rows.clone())
}
