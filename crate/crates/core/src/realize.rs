//! Realizability of divisor triples: given determinantal divisor lists
//! `a`, `b`, `c`, decide whether there are nonsingular `A`, `B` with
//! `d(A) = a`, `d(B) = b` and `d(AB) = c`, and build witnesses where possible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants::{divisor_chain, DivisorChain};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElem};

/// Coordinate bounds tried, in order, by the quadratic-ring searches.
pub const SEARCH_RADII: [i64; 5] = [3, 6, 12, 24, 48];

/// Upper limit on candidate tuples examined at a single search radius.
pub const SEARCH_BUDGET: u128 = 200_000_000;

/// Three determinantal divisor lists of equal length over one ring, all
/// entries nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    ring: Ring,
    a: Vec<Ideal>,
    b: Vec<Ideal>,
    c: Vec<Ideal>,
}

impl Triple {
    pub fn new(ring: Ring, a: Vec<Ideal>, b: Vec<Ideal>, c: Vec<Ideal>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        for list in [&b, &c] {
            if list.len() != n {
                return Err(Error::DimensionMismatch(n, list.len()));
            }
        }
        for x in a.iter().chain(&b).chain(&c) {
            ring.check_same(x.ring())?;
            if x.is_zero() {
                return Err(Error::InvalidChain("zero ideal in a triple".into()));
            }
        }
        Ok(Triple { ring, a, b, c })
    }

    pub fn from_chains(a: &DivisorChain, b: &DivisorChain, c: &DivisorChain) -> Result<Self> {
        Self::new(a.ring(), a.determinantal().to_vec(), b.determinantal().to_vec(), c.determinantal().to_vec())
    }

    /// Integer triple from generator values.
    pub fn from_ints(a: &[i64], b: &[i64], c: &[i64]) -> Result<Self> {
        let f = |v: &[i64]| v.iter().map(|&x| Ideal::from_int(Ring::Z, x)).collect();
        Self::new(Ring::Z, f(a), f(b), f(c))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Ideal] {
        &self.a
    }

    pub fn b(&self) -> &[Ideal] {
        &self.b
    }

    pub fn c(&self) -> &[Ideal] {
        &self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    NotRealizable,
    Realizable,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::NotRealizable => "NotRealizable",
            Outcome::Realizable => "Realizable",
            Outcome::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Number (1..=6) of the necessary condition that failed.
    pub violated: Option<u8>,
    pub witness: Option<(Matrix, Matrix)>,
    pub rationale: &'static str,
}

impl Verdict {
    fn rejected(condition: u8, rationale: &'static str) -> Self {
        Verdict { outcome: Outcome::NotRealizable, violated: Some(condition), witness: None, rationale }
    }

    fn realized(a: Matrix, b: Matrix, rationale: &'static str) -> Self {
        Verdict { outcome: Outcome::Realizable, violated: None, witness: Some((a, b)), rationale }
    }

    fn unknown(rationale: &'static str) -> Self {
        Verdict { outcome: Outcome::Unknown, violated: None, witness: None, rationale }
    }
}

/// `x^2 | y z` in integral form.
fn square_divides(x: &Ideal, y: &Ideal, z: &Ideal) -> Result<bool> {
    x.mul(x)?.divides(&y.mul(z)?)
}

/// First failing single-chain condition on determinantal divisors `d`:
/// 1 if `d_n` is not principal, 2 if `d_1^2 ∤ d_2`, 3 if
/// `d_{k-1}^2 ∤ d_k d_{k-2}` for some `k >= 3`.
pub fn chain_violation(d: &[Ideal]) -> Result<Option<u8>> {
    let Some(last) = d.last() else {
        return Err(Error::InvalidChain("empty chain".into()));
    };
    if !last.is_principal() {
        return Ok(Some(1));
    }
    let ring = last.ring();
    let unit = Ideal::unit(ring);
    if d.len() >= 2 && !square_divides(&d[0], &d[1], &unit)? {
        return Ok(Some(2));
    }
    for k in 2..d.len() {
        if !square_divides(&d[k - 1], &d[k], &d[k - 2])? {
            return Ok(Some(3));
        }
    }
    Ok(None)
}

/// `true` iff the chain belongs to some matrix: `e_k | e_{k+1}` for all `k`
/// and `e_1 ⋯ e_n = d_n` is principal.
pub fn check_chain(c: &DivisorChain) -> Result<bool> {
    if c.has_zero() {
        return Ok(false);
    }
    Ok(chain_violation(c.determinantal())?.is_none())
}

fn generator(x: &Ideal) -> RingElem {
    x.principal_generator().expect("principal ideal")
}

/// A matrix whose elementary divisors are `e`. Over `Z` this is
/// `diag(e_1, .., e_n)`; over `Z[sqrt(-5)]` only `n <= 2` is supported.
pub fn construct_from_elementary(ring: Ring, e: &[Ideal]) -> Result<Matrix> {
    let chain = DivisorChain::from_elementary(ring, e.to_vec())?;
    if !check_chain(&chain)? {
        return Err(Error::InvalidChain("elementary divisors do not form a realizable chain".into()));
    }
    if e.iter().all(Ideal::is_principal) {
        let diag: Vec<RingElem> = e.iter().map(generator).collect();
        return Ok(Matrix::diagonal(ring, &diag));
    }
    // over Z everything is principal, so only the quadratic ring gets here
    if e.len() > 2 {
        return Err(Error::Unsupported(format!("construction over {ring} for n = {}", e.len())));
    }
    search_quadratic(&chain, |_| Ok(true))
}

/// Lexicographically first 2×2 quadratic matrix (over the element order
/// below) with divisor chain `target` that also satisfies `accept`.
fn search_quadratic(target: &DivisorChain, mut accept: impl FnMut(&Matrix) -> Result<bool>) -> Result<Matrix> {
    let e1 = &target.elementary()[0];
    let d2 = target.d(2);
    let d2_norm = d2.norm().to_i128().ok_or_else(|| Error::Unsupported("norm too large for search".into()))?;
    for &r in &SEARCH_RADII {
        let mut elems: Vec<(i64, i64)> = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                if e1.contains(&RingElem::quad(a, b)) {
                    elems.push((a, b));
                }
            }
        }
        // small coordinates first, so early radii are found again in order
        elems.sort_by_key(|&(a, b)| (a.abs().max(b.abs()), a.abs() + b.abs(), -a, -b));
        let count = (elems.len() as u128).pow(4);
        if count > SEARCH_BUDGET {
            return Err(Error::SearchExhausted(r));
        }
        for &x in &elems {
            for &y in &elems {
                for &z in &elems {
                    for &w in &elems {
                        // det = xw - yz, with (p + q r)(s + t r) = ps - 5qt + (pt + qs) r
                        let da = (x.0 * w.0 - 5 * x.1 * w.1) - (y.0 * z.0 - 5 * y.1 * z.1);
                        let db = (x.0 * w.1 + x.1 * w.0) - (y.0 * z.1 + y.1 * z.0);
                        let norm = (da as i128) * (da as i128) + 5 * (db as i128) * (db as i128);
                        if norm != d2_norm || !d2.contains(&RingElem::quad(da, db)) {
                            continue;
                        }
                        let m = Matrix::from_quads([[x, y], [z, w]]);
                        if divisor_chain(&m)? == *target && accept(&m)? {
                            return Ok(m);
                        }
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted(*SEARCH_RADII.last().unwrap()))
}

/// Witnesses `(A, B)` with `d(A) = a`, `d(B) = b` and `d(AB) = a * b`.
pub fn realize_product_equal(a: &DivisorChain, b: &DivisorChain) -> Result<(Matrix, Matrix)> {
    a.ring().check_same(b.ring())?;
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(a.n(), b.n()));
    }
    for c in [a, b] {
        if !check_chain(c)? {
            return Err(Error::InvalidChain("chain is not realizable by a single matrix".into()));
        }
    }
    let ring = a.ring();
    let target = a.product(b)?;
    let ma = construct_from_elementary(ring, a.elementary())?;
    let mb = construct_from_elementary(ring, b.elementary())?;
    if divisor_chain(&ma.mul(&mb)?)? == target {
        return Ok((ma, mb));
    }
    // Only reachable over Z[sqrt(-5)] with non-principal elementary divisors.
    if a.n() > 2 {
        return Err(Error::Unsupported(format!("product construction over {ring} for n = {}", a.n())));
    }
    let mb = search_quadratic(b, |m| Ok(divisor_chain(&ma.mul(m)?)? == target))?;
    Ok((ma, mb))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum N2Decision {
    Realized { a: Matrix, b: Matrix },
    /// Number (1..=3) of the failed 2×2 condition.
    Rejected { condition: u8 },
}

/// Complete decision for `n = 2` over `Z`, with the explicit witnesses
/// `A = [[a1 d, a1], [a2/a1, 0]]`, `B = diag(b1, b2/b1)`, `d = c1/(a1 b1)`.
pub fn realize_n2(a: [&Ideal; 2], b: [&Ideal; 2], c: [&Ideal; 2]) -> Result<N2Decision> {
    let g = |x: &Ideal| -> Result<BigInt> {
        Ring::Z.check_same(x.ring())?;
        x.int_generator().filter(|v| !v.is_zero()).ok_or(Error::ZeroIdeal)
    };
    let (a1, a2, b1, b2, c1, c2) = (g(a[0])?, g(a[1])?, g(b[0])?, g(b[1])?, g(c[0])?, g(c[1])?);
    let rejected = |condition| Ok(N2Decision::Rejected { condition });

    if !a2.is_multiple_of(&(&a1 * &a1)) || !b2.is_multiple_of(&(&b1 * &b1)) || !c2.is_multiple_of(&(&c1 * &c1)) {
        return rejected(1);
    }
    if &a2 * &b2 != c2 {
        return rejected(2);
    }
    let ab1 = &a1 * &b1;
    let spread = (&a2 / (&a1 * &a1)).gcd(&(&b2 / (&b1 * &b1)));
    if !c1.is_multiple_of(&ab1) || !(&ab1 * &spread).is_multiple_of(&c1) {
        return rejected(3);
    }
    let d = &c1 / &ab1;
    let int = RingElem::int;
    let ma = Matrix::from_rows(Ring::Z, vec![vec![int(&a1 * &d), int(a1.clone())], vec![int(&a2 / &a1), RingElem::zero(Ring::Z)]])?;
    let mb = Matrix::diagonal(Ring::Z, &[int(b1.clone()), int(&b2 / &b1)]);

    let chain_a = divisor_chain(&ma)?;
    // a1 | a2/a1 makes a1 the gcd of the entries of A
    assert_eq!(chain_a.d(1), *a[0]);
    let same = |chain: &DivisorChain, want: [&Ideal; 2]| chain.determinantal().iter().eq(want);
    let ok = same(&chain_a, a) && same(&divisor_chain(&mb)?, b) && same(&divisor_chain(&ma.mul(&mb)?)?, c);
    if !ok {
        return Err(Error::Precondition("2x2 witness failed verification".into()));
    }
    Ok(N2Decision::Realized { a: ma, b: mb })
}

/// Decide realizability: necessary conditions first, then the sufficient
/// branches. `Unknown` is returned when neither settles the triple.
pub fn check_triple(t: &Triple) -> Result<Verdict> {
    let n = t.n();
    let ring = t.ring;
    let (a, b, c) = (&t.a, &t.b, &t.c);

    if !(a[n - 1].is_principal() && b[n - 1].is_principal() && c[n - 1].is_principal()) {
        return Ok(Verdict::rejected(1, "last determinantal divisor not principal"));
    }
    for list in [a, b, c] {
        match chain_violation(list)? {
            Some(2) => return Ok(Verdict::rejected(2, "d_1^2 does not divide d_2")),
            Some(3) => return Ok(Verdict::rejected(3, "d_{k-1}^2 d_{k-2}^{-1} does not divide d_k")),
            _ => {}
        }
    }
    if a[n - 1].mul(&b[n - 1])? != c[n - 1] {
        return Ok(Verdict::rejected(4, "determinant is not multiplicative"));
    }
    for k in 0..n - 1 {
        if !a[k].mul(&b[k])?.divides(&c[k])? {
            return Ok(Verdict::rejected(5, "a_k b_k does not divide c_k"));
        }
    }
    for k in 1..n {
        // c_k a_{n-k} b_{n-k} | a_{n-k} a_k b_n + b_{n-k} b_k a_n
        let (ak, bk, ck) = (&a[k - 1], &b[k - 1], &c[k - 1]);
        let (ank, bnk) = (&a[n - k - 1], &b[n - k - 1]);
        let lhs = ck.mul(ank)?.mul(bnk)?;
        let rhs = ank.mul(ak)?.mul(&b[n - 1])?.sum(&bnk.mul(bk)?.mul(&a[n - 1])?)?;
        if !lhs.divides(&rhs)? {
            return Ok(Verdict::rejected(6, "c_k exceeds the upper bound"));
        }
    }

    let product_equal = (0..n).map(|k| Ok(a[k].mul(&b[k])? == c[k])).collect::<Result<Vec<bool>>>()?;
    if product_equal.iter().all(|&x| x) {
        let ca = DivisorChain::from_determinantal(ring, a.clone())?;
        let cb = DivisorChain::from_determinantal(ring, b.clone())?;
        return match realize_product_equal(&ca, &cb) {
            Ok((ma, mb)) => Ok(Verdict::realized(ma, mb, "c = a b")),
            Err(Error::Unsupported(_)) | Err(Error::SearchExhausted(_)) => {
                Ok(Verdict::unknown("c = a b is realizable but no witness was constructed"))
            }
            Err(e) => Err(e),
        };
    }
    if n == 2 && ring == Ring::Z {
        return match realize_n2([&a[0], &a[1]], [&b[0], &b[1]], [&c[0], &c[1]])? {
            N2Decision::Realized { a, b } => Ok(Verdict::realized(a, b, "2x2 over a PID")),
            N2Decision::Rejected { condition } => Err(Error::Precondition(format!(
                "2x2 condition ({condition}) failed after the necessary conditions held"
            ))),
        };
    }
    Ok(Verdict::unknown("necessary conditions hold; no sufficient criterion applies"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(k: i64) -> Ideal {
        Ideal::from_int(Ring::Z, k)
    }

    fn p2() -> Ideal {
        Ideal::from_generators(&[RingElem::quad(2, 0), RingElem::quad(1, 1)]).unwrap()
    }

    fn qi(k: i64) -> Ideal {
        Ideal::from_int(Ring::ZSqrtMinus5, k)
    }

    #[test]
    fn integer_chains() {
        assert!(check_chain(&DivisorChain::from_ints(&[1, 2]).unwrap()).unwrap());
        assert!(!check_chain(&DivisorChain::from_ints(&[2, 2]).unwrap()).unwrap());
        assert!(check_chain(&DivisorChain::from_ints(&[1, 2, 12]).unwrap()).unwrap());
        // e = (1, 2, 3): 2 does not divide 3
        assert!(!check_chain(&DivisorChain::from_ints(&[1, 2, 6]).unwrap()).unwrap());
    }

    #[test]
    fn quadratic_chains() {
        let r = Ring::ZSqrtMinus5;
        assert!(check_chain(&DivisorChain::from_elementary(r, vec![p2(), p2()]).unwrap()).unwrap());
        assert!(!check_chain(&DivisorChain::from_elementary(r, vec![Ideal::unit(r), p2()]).unwrap()).unwrap());
        // e = (p, p^2) has product p^3, in the class of p
        let p_sq = p2().mul(&p2()).unwrap();
        assert!(!check_chain(&DivisorChain::from_elementary(r, vec![p2(), p_sq]).unwrap()).unwrap());
    }

    #[test]
    fn diagonal_constructions() {
        assert_eq!(
            construct_from_elementary(Ring::Z, &[zi(2), zi(4)]).unwrap(),
            Matrix::from_ints([[2, 0], [0, 4]])
        );
        assert_eq!(construct_from_elementary(Ring::Z, &vec![zi(1); 3]).unwrap(), Matrix::identity(Ring::Z, 3));
        assert!(construct_from_elementary(Ring::Z, &[zi(2), zi(3)]).is_err());
    }

    #[test]
    fn searched_construction_over_quadratic_ring() {
        let m = construct_from_elementary(Ring::ZSqrtMinus5, &[p2(), p2()]).unwrap();
        let chain = divisor_chain(&m).unwrap();
        assert_eq!(chain.elementary(), &[p2(), p2()]);
        assert_eq!(m.det().unwrap().norm(), BigInt::from(4));
        let three = Ring::ZSqrtMinus5;
        assert!(construct_from_elementary(three, &[p2(), p2(), qi(2)]).is_err());
    }

    #[test]
    fn product_equal_over_z() {
        let a = DivisorChain::from_ints(&[1, 2]).unwrap();
        let (ma, mb) = realize_product_equal(&a, &a).unwrap();
        assert_eq!(ma, Matrix::from_ints([[1, 0], [0, 2]]));
        assert_eq!(divisor_chain(&ma.mul(&mb).unwrap()).unwrap(), DivisorChain::from_ints(&[1, 4]).unwrap());

        let a = DivisorChain::from_ints(&[2, 8]).unwrap();
        let b = DivisorChain::from_ints(&[1, 3]).unwrap();
        let (ma, mb) = realize_product_equal(&a, &b).unwrap();
        assert_eq!(divisor_chain(&ma.mul(&mb).unwrap()).unwrap(), DivisorChain::from_ints(&[2, 24]).unwrap());
    }

    #[test]
    fn product_equal_over_quadratic_ring() {
        let r = Ring::ZSqrtMinus5;
        let a = DivisorChain::from_elementary(r, vec![p2(), p2()]).unwrap();
        let one = DivisorChain::from_elementary(r, vec![Ideal::unit(r), Ideal::unit(r)]).unwrap();
        let (ma, mb) = realize_product_equal(&a, &one).unwrap();
        assert_eq!(mb, Matrix::identity(r, 2));
        assert_eq!(divisor_chain(&ma.mul(&mb).unwrap()).unwrap(), a);

        let (ma, mb) = realize_product_equal(&a, &a).unwrap();
        assert_eq!(divisor_chain(&ma.mul(&mb).unwrap()).unwrap(), a.product(&a).unwrap());
    }

    #[test]
    fn explicit_two_by_two_witnesses() {
        let t = |v: &[i64]| v.iter().map(|&x| zi(x)).collect::<Vec<_>>();
        let (a, b, c) = (t(&[1, 2]), t(&[1, 2]), t(&[2, 4]));
        let N2Decision::Realized { a: ma, b: mb } = realize_n2([&a[0], &a[1]], [&b[0], &b[1]], [&c[0], &c[1]]).unwrap()
        else {
            panic!("expected a witness");
        };
        assert_eq!(ma, Matrix::from_ints([[2, 1], [2, 0]]));
        assert_eq!(mb, Matrix::from_ints([[1, 0], [0, 2]]));
        assert_eq!(ma.mul(&mb).unwrap(), Matrix::from_ints([[2, 2], [2, 0]]));

        let one = t(&[1, 1]);
        let N2Decision::Realized { a: ma, b: mb } =
            realize_n2([&one[0], &one[1]], [&one[0], &one[1]], [&one[0], &one[1]]).unwrap()
        else {
            panic!("expected a witness");
        };
        assert_eq!(ma, Matrix::from_ints([[1, 1], [1, 0]]));
        assert_eq!(mb, Matrix::identity(Ring::Z, 2));

        let (a, b, c) = (t(&[2, 4]), t(&[1, 1]), t(&[1, 4]));
        assert_eq!(
            realize_n2([&a[0], &a[1]], [&b[0], &b[1]], [&c[0], &c[1]]).unwrap(),
            N2Decision::Rejected { condition: 3 }
        );
    }

    #[test]
    fn triple_verdicts() {
        let v = check_triple(&Triple::from_ints(&[1, 2], &[1, 2], &[2, 4]).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::Realizable);
        assert_eq!(v.witness, Some((Matrix::from_ints([[2, 1], [2, 0]]), Matrix::from_ints([[1, 0], [0, 2]]))));

        let v = check_triple(&Triple::from_ints(&[1, 2], &[1, 2], &[4, 4]).unwrap()).unwrap();
        assert_eq!((v.outcome, v.violated), (Outcome::NotRealizable, Some(2)));

        let v = check_triple(&Triple::from_ints(&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::Realizable);
        let id = Matrix::identity(Ring::Z, 3);
        assert_eq!(v.witness, Some((id.clone(), id)));

        let v = check_triple(&Triple::from_ints(&[1, 2], &[1, 2], &[1, 4]).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::Realizable);
        let d = Matrix::from_ints([[1, 0], [0, 2]]);
        assert_eq!(v.witness, Some((d.clone(), d)));
    }

    type Case = (&'static [i64], &'static [i64], &'static [i64], u8);

    #[test]
    fn each_necessary_condition_fires() {
        let cases: [Case; 4] = [
            (&[1, 2], &[1, 2], &[1, 5], 4),
            (&[2, 4], &[1, 1], &[1, 4], 5),
            (&[1, 1, 1], &[1, 1, 1], &[1, 1, 2], 4),
            (&[1, 2, 6], &[1, 1, 1], &[1, 2, 6], 3),
        ];
        for (a, b, c, cond) in cases {
            let v = check_triple(&Triple::from_ints(a, b, c).unwrap()).unwrap();
            assert_eq!(v.violated, Some(cond), "{a:?} {b:?} {c:?}");
        }
        let v = check_triple(&Triple::from_ints(&[1, 4], &[1, 4], &[8, 16]).unwrap()).unwrap();
        assert_eq!(v.violated, Some(2));
        // c_1 a_1 b_1 = 2 must divide a_1 a_1 b_2 + b_1 b_1 a_2 = (4) + (9) = (1)
        let v = check_triple(&Triple::from_ints(&[1, 9], &[1, 4], &[2, 36]).unwrap()).unwrap();
        assert_eq!(v.violated, Some(6));
    }

    #[test]
    fn non_principal_determinant_is_condition_one() {
        let r = Ring::ZSqrtMinus5;
        let t = Triple::new(r, vec![p2()], vec![Ideal::unit(r)], vec![p2()]).unwrap();
        assert_eq!(check_triple(&t).unwrap().violated, Some(1));
    }

    #[test]
    fn open_case_is_unknown() {
        // n = 3, necessary conditions hold but c != a b
        let v = check_triple(&Triple::from_ints(&[1, 2, 4], &[1, 2, 4], &[2, 4, 16]).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::Unknown);
    }

    #[test]
    fn malformed_triples() {
        assert!(Triple::from_ints(&[1, 2], &[1], &[1, 2]).is_err());
        assert!(Triple::from_ints(&[1, 0], &[1, 1], &[1, 0]).is_err());
    }
}
