//! Smith normal form over `Z` with unimodular certificates, equivalence of
//! matrices, and the 2×2 block normal form of `diag(A, 0)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealClass};
use crate::invariants::{column_class, det_divisor, divisor_chain};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElem};

/// `P * A * Q = D` with `P`, `Q` unimodular and `D` diagonal,
/// `D[0][0] | D[1][1] | ...`, all diagonal entries nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub p: Matrix,
    pub d: Matrix,
    pub q: Matrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.n()).map(|i| self.d.get(i, i).a().clone()).collect()
    }

    /// Checks `P A Q = D`, unimodularity and the divisibility chain exactly.
    pub fn verify(&self, a: &Matrix) -> Result<bool> {
        let lhs = self.p.mul(a)?.mul(&self.q)?;
        if lhs != self.d || !self.p.is_unimodular()? || !self.q.is_unimodular()? {
            return Ok(false);
        }
        let n = self.d.n();
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.d.get(i, j).is_zero() {
                    return Ok(false);
                }
            }
        }
        let diag = self.diagonal();
        let chain = diag.iter().all(|x| !x.is_negative())
            && diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) });
        Ok(chain)
    }
}

type Rows = Vec<Vec<BigInt>>;

fn to_rows(m: &Matrix) -> Rows {
    m.rows().into_iter().map(|r| r.into_iter().map(|x| x.a().clone()).collect()).collect()
}

fn from_rows(rows: &Rows) -> Matrix {
    Matrix::from_fn(Ring::Z, rows.len(), |i, j| RingElem::int(rows[i][j].clone()))
}

fn identity_rows(n: usize) -> Rows {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

/// `row[dst] += k * row[src]`
fn add_row(m: &mut Rows, dst: usize, src: usize, k: &BigInt) {
    for c in 0..m[dst].len() {
        let t = k * &m[src][c];
        m[dst][c] += t;
    }
}

/// `col[dst] += k * col[src]`
fn add_col(m: &mut Rows, dst: usize, src: usize, k: &BigInt) {
    for row in m.iter_mut() {
        let t = k * &row[src];
        row[dst] += t;
    }
}

fn swap_cols(m: &mut Rows, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

pub fn smith_normal_form(a: &Matrix) -> Result<SmithDecomposition> {
    Ring::Z.check_same(a.ring())?;
    let n = a.n();
    let mut m = to_rows(a);
    let mut p = identity_rows(n);
    let mut q = identity_rows(n);

    'outer: for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pos = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| m[i][j].abs().cmp(&m[k][l].abs()));
            let Some((pi, pj)) = pos else {
                break 'outer;
            };
            m.swap(t, pi);
            p.swap(t, pi);
            swap_cols(&mut m, t, pj);
            swap_cols(&mut q, t, pj);

            let mut clean = true;
            for i in t + 1..n {
                let k = -(&m[i][t] / &m[t][t]);
                if !k.is_zero() {
                    add_row(&mut m, i, t, &k);
                    add_row(&mut p, i, t, &k);
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..n {
                let k = -(&m[t][j] / &m[t][t]);
                if !k.is_zero() {
                    add_col(&mut m, j, t, &k);
                    add_col(&mut q, j, t, &k);
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    add_row(&mut m, t, i, &one);
                    add_row(&mut p, t, i, &one);
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut().chain(p[t].iter_mut()) {
                *x = -&*x;
            }
        }
    }

    Ok(SmithDecomposition { p: from_rows(&p), d: from_rows(&m), q: from_rows(&q) })
}

pub fn is_unimodular(m: &Matrix) -> Result<bool> {
    m.is_unimodular()
}

/// `true` iff `B = P A Q` for some unimodular `P`, `Q`: equal determinantal
/// divisors and, for nonzero matrices, equal column classes.
pub fn equivalent(a: &Matrix, b: &Matrix) -> Result<bool> {
    a.ring().check_same(b.ring())?;
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    if divisor_chain(a)? != divisor_chain(b)? {
        return Ok(false);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(a.is_zero() && b.is_zero());
    }
    Ok(column_class(a)? == column_class(b)?)
}

/// Unimodular `(P, Q)` with `B = P A Q`, or `None` if the matrices are not
/// equivalent. Integer matrices only.
pub fn transform_certificate(a: &Matrix, b: &Matrix) -> Result<Option<(Matrix, Matrix)>> {
    Ring::Z.check_same(a.ring())?;
    Ring::Z.check_same(b.ring())?;
    if !equivalent(a, b)? {
        return Ok(None);
    }
    let sa = smith_normal_form(a)?;
    let sb = smith_normal_form(b)?;
    debug_assert_eq!(sa.d, sb.d);
    // Pa A Qa = D = Pb B Qb
    let p = sb.p.unimodular_inverse()?.mul(&sa.p)?;
    let q = sa.q.mul(&sb.q.unimodular_inverse()?)?;
    if p.mul(a)?.mul(&q)? != *b {
        return Err(Error::Precondition("certificate failed verification".into()));
    }
    Ok(Some((p, q)))
}

/// `P * diag(A, 0) * Q = blockdiag(A_1, .., A_n)` over `Z`, each block of
/// shape `[[e_k, 0], [0, 0]]` with `e_k` the k-th elementary divisor of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockNormalForm {
    pub blocks: Vec<Matrix>,
    pub p: Matrix,
    pub q: Matrix,
}

impl BlockNormalForm {
    pub fn assembled(&self) -> Result<Matrix> {
        Matrix::block_diag(&self.blocks)
    }
}

/// `diag(A, 0)` of size `2n`.
pub fn pad_with_zero(a: &Matrix) -> Matrix {
    let n = a.n();
    Matrix::from_fn(a.ring(), 2 * n, |i, j| {
        if i < n && j < n {
            a.get(i, j).clone()
        } else {
            RingElem::zero(a.ring())
        }
    })
}

pub fn block_normal_form(a: &Matrix) -> Result<BlockNormalForm> {
    Ring::Z.check_same(a.ring())?;
    if !a.is_nonsingular()? {
        return Err(Error::Singular);
    }
    let n = a.n();
    let snf = smith_normal_form(a)?;
    let one = Matrix::identity(Ring::Z, n);
    let p1 = Matrix::block_diag(&[snf.p.clone(), one.clone()])?;
    let q1 = Matrix::block_diag(&[snf.q.clone(), one])?;
    // row/column k of diag(D, 0) goes to 2k, the padding row n+k to 2k+1
    let target = |i: usize| if i < n { 2 * i } else { 2 * (i - n) + 1 };
    let perm = Matrix::from_fn(Ring::Z, 2 * n, |i, j| RingElem::int((target(j) == i) as i64));
    let p = perm.mul(&p1)?;
    let q = q1.mul(&perm.transpose())?;
    let blocks: Vec<Matrix> = snf
        .diagonal()
        .into_iter()
        .map(|e| Matrix::from_fn(Ring::Z, 2, |i, j| RingElem::int(if i == 0 && j == 0 { e.clone() } else { BigInt::zero() })))
        .collect();
    let form = BlockNormalForm { blocks, p, q };
    if form.p.mul(&pad_with_zero(a))?.mul(&form.q)? != form.assembled()? {
        return Err(Error::Precondition("block normal form failed verification".into()));
    }
    Ok(form)
}

/// Outcome of checking, for a block-diagonal matrix of rank-one 2×2 blocks,
/// that `e_k(A) = d_1(A_k)` and that the column class of `A` is the product
/// of the blocks' column classes.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub elementary: Vec<Ideal>,
    pub block_divisors: Vec<Ideal>,
    pub elementary_match: Vec<bool>,
    pub class: IdealClass,
    pub block_class_product: IdealClass,
    pub class_match: bool,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.class_match && self.elementary_match.iter().all(|&b| b)
    }
}

pub fn verify_block_lemma(blocks: &[Matrix]) -> Result<LemmaReport> {
    let first = blocks.first().ok_or_else(|| Error::Precondition("no blocks".into()))?;
    let ring = first.ring();
    let mut block_divisors = Vec::with_capacity(blocks.len());
    let mut product = IdealClass::principal_class(ring);
    for (k, b) in blocks.iter().enumerate() {
        ring.check_same(b.ring())?;
        if b.n() != 2 || b.rank() != 1 {
            return Err(Error::Precondition(format!("block {} is not a rank-one 2x2 matrix", k + 1)));
        }
        let d1 = det_divisor(b, 1)?;
        if let Some(prev) = block_divisors.last() {
            if !Ideal::divides(prev, &d1)? {
                return Err(Error::Precondition(format!("d_1 of block {k} does not divide d_1 of block {}", k + 1)));
            }
        }
        product = product.mul(&column_class(b)?)?;
        block_divisors.push(d1);
    }
    let a = Matrix::block_diag(blocks)?;
    let chain = divisor_chain(&a)?;
    let elementary = chain.elementary()[..blocks.len()].to_vec();
    let elementary_match = elementary.iter().zip(&block_divisors).map(|(x, y)| x == y).collect();
    let class = column_class(&a)?;
    let class_match = class == product;
    Ok(LemmaReport { elementary, block_divisors, elementary_match, class, block_class_product: product, class_match })
}
