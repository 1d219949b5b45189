use detdiv::json::{chain_from_json, chain_to_json, ideal_from_json, ideal_to_json, matrix_from_json, matrix_to_json};
use detdiv::realize::{check_triple, Outcome, Triple};
use detdiv::smith::{equivalent, smith_normal_form};
use detdiv::{column_class, divisor_chain, FracIdeal, Ideal, IdealClass, Matrix, Ring, RingElem};
use num_bigint::BigInt;
use proptest::prelude::*;

fn elem(ring: Ring, bound: i64) -> impl Strategy<Value = RingElem> {
    let b = if ring == Ring::Z { 0..=0 } else { -bound..=bound };
    (-bound..=bound, b).prop_map(move |(x, y)| RingElem::new(ring, x, y).unwrap())
}

fn nonzero_elem(ring: Ring, bound: i64) -> impl Strategy<Value = RingElem> {
    elem(ring, bound).prop_filter("nonzero", |x| !x.is_zero())
}

fn matrix(ring: Ring, n: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(elem(ring, bound), n * n).prop_map(move |xs| {
        Matrix::from_rows(ring, xs.chunks(n).map(<[RingElem]>::to_vec).collect()).unwrap()
    })
}

fn nonsingular(ring: Ring, n: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    matrix(ring, n, bound).prop_filter("nonsingular", |m| m.is_nonsingular().unwrap())
}

fn int_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4).prop_flat_map(|n| matrix(Ring::Z, n, 9))
}

fn quad_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=3).prop_flat_map(|n| matrix(Ring::ZSqrtMinus5, n, 3))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    prop_oneof![int_matrix(), quad_matrix()]
}

fn same_size_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    prop_oneof![
        (1usize..=4).prop_flat_map(|n| (matrix(Ring::Z, n, 9), matrix(Ring::Z, n, 9))),
        (1usize..=3).prop_flat_map(|n| (matrix(Ring::ZSqrtMinus5, n, 3), matrix(Ring::ZSqrtMinus5, n, 3))),
    ]
}

/// Product of elementary row operations `row_i += c row_j` and swaps.
fn unimodular(ring: Ring, n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((0..n, 0..n, elem(ring, 2), any::<bool>()), 0..8).prop_map(move |ops| {
        let mut rows = Matrix::identity(ring, n).rows();
        for (i, j, c, swap) in ops {
            if i == j {
                continue;
            }
            if swap {
                rows.swap(i, j);
            } else {
                let source = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(&source) {
                    *x = &*x + &(&c * y);
                }
            }
        }
        Matrix::from_rows(ring, rows).unwrap()
    })
}

fn with_unimodulars() -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    prop_oneof![
        (1usize..=4).prop_flat_map(|n| (matrix(Ring::Z, n, 9), unimodular(Ring::Z, n), unimodular(Ring::Z, n))),
        (1usize..=3).prop_flat_map(|n| (
            matrix(Ring::ZSqrtMinus5, n, 3),
            unimodular(Ring::ZSqrtMinus5, n),
            unimodular(Ring::ZSqrtMinus5, n)
        )),
    ]
}

fn quad_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(nonzero_elem(Ring::ZSqrtMinus5, 6), 1..=3)
        .prop_map(|gens| Ideal::from_generators(&gens).unwrap())
}

fn any_ideal() -> impl Strategy<Value = Ideal> {
    prop_oneof![
        prop::collection::vec(nonzero_elem(Ring::Z, 60), 1..=3).prop_map(|g| Ideal::from_generators(&g).unwrap()),
        quad_ideal(),
    ]
}

fn ideal_pair() -> impl Strategy<Value = (Ideal, Ideal)> {
    prop_oneof![
        (1i64..60, 1i64..60).prop_map(|(x, y)| (Ideal::from_int(Ring::Z, x), Ideal::from_int(Ring::Z, y))),
        (quad_ideal(), quad_ideal()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn element_norm_is_multiplicative(x in elem(Ring::ZSqrtMinus5, 50), y in elem(Ring::ZSqrtMinus5, 50)) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(&x * &x.conj(), RingElem::from_int(Ring::ZSqrtMinus5, x.norm()));
    }

    #[test]
    fn ideal_norm_is_multiplicative((x, y) in ideal_pair()) {
        prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
    }

    #[test]
    fn hnf_is_canonical(gens in prop::collection::vec(nonzero_elem(Ring::ZSqrtMinus5, 6), 1..=4), extra in elem(Ring::ZSqrtMinus5, 3)) {
        let x = Ideal::from_generators(&gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(&Ideal::from_generators(&rev).unwrap(), &x);
        let mut more = gens.clone();
        more.push(&gens[0] * &extra);
        prop_assert_eq!(&Ideal::from_generators(&more).unwrap(), &x);
        for g in &gens {
            prop_assert!(x.contains(g));
        }
        let [[a, z], [b, c]] = x.hnf().unwrap();
        prop_assert_eq!(&Ideal::from_hnf(a, b, c).unwrap(), &x);
        prop_assert!(z == BigInt::from(0));
    }

    #[test]
    fn sum_is_gcd_and_product_divides((x, y) in ideal_pair()) {
        let s = x.sum(&y).unwrap();
        let p = x.mul(&y).unwrap();
        prop_assert!(s.divides(&x).unwrap() && s.divides(&y).unwrap());
        prop_assert!(x.divides(&p).unwrap() && y.divides(&p).unwrap());
        prop_assert_eq!(x.divides(&y).unwrap(), x.sum(&y).unwrap() == x);
        prop_assert_eq!(p.div_exact(&x).unwrap(), Some(y.clone()));
    }

    #[test]
    fn class_law_is_xor((x, y) in ideal_pair()) {
        let product = IdealClass::of(&x.mul(&y).unwrap()).unwrap();
        let law = IdealClass::of(&x).unwrap().mul(&IdealClass::of(&y).unwrap()).unwrap();
        prop_assert_eq!(product.is_principal(), law.is_principal());
        prop_assert_eq!(product.is_principal(), x.is_principal() == y.is_principal());
    }

    #[test]
    fn fractional_reduction_and_inverse(x in any_ideal(), k in 1i64..30) {
        let f = FracIdeal::new(x.scale_int(&BigInt::from(k)), k).unwrap();
        prop_assert_eq!(&f, &FracIdeal::from_ideal(x.clone()).unwrap());
        let one = FracIdeal::from_ideal(Ideal::unit(x.ring())).unwrap();
        prop_assert_eq!(f.mul(&f.inverse()).unwrap(), one);
        prop_assert_eq!(f.inverse().inverse(), f);
    }

    #[test]
    fn cauchy_binet((a, b) in same_size_pair(), k in 1usize..=4) {
        prop_assume!(k <= a.n());
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.compound(k).unwrap(), a.compound(k).unwrap().mul(&b.compound(k).unwrap()).unwrap());
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn divisors_invariant_under_unimodular_action((a, u, v) in with_unimodulars()) {
        prop_assert!(u.is_unimodular().unwrap() && v.is_unimodular().unwrap());
        let b = u.mul(&a).unwrap().mul(&v).unwrap();
        prop_assert_eq!(divisor_chain(&b).unwrap(), divisor_chain(&a).unwrap());
        if !a.is_zero() {
            prop_assert_eq!(column_class(&b).unwrap(), column_class(&a).unwrap());
        }
        prop_assert!(equivalent(&a, &b).unwrap());
        prop_assert!(equivalent(&b, &a).unwrap());
    }

    #[test]
    fn product_divisor_bounds((a, b) in same_size_pair()) {
        prop_assume!(a.is_nonsingular().unwrap() && b.is_nonsingular().unwrap());
        let n = a.n() as isize;
        let (ca, cb, cc) = (divisor_chain(&a).unwrap(), divisor_chain(&b).unwrap(), divisor_chain(&a.mul(&b).unwrap()).unwrap());
        for k in 1..=n {
            prop_assert!(ca.d(k).mul(&cb.d(k)).unwrap().divides(&cc.d(k)).unwrap());
            let lhs = ca.d(n - k).mul(&cb.d(n - k)).unwrap().mul(&cc.d(k)).unwrap();
            let rhs = ca.d(n - k).mul(&ca.d(k)).unwrap().mul(&cb.d(n)).unwrap()
                .sum(&cb.d(n - k).mul(&cb.d(k)).unwrap().mul(&ca.d(n)).unwrap()).unwrap();
            prop_assert!(lhs.divides(&rhs).unwrap());
        }
    }

    #[test]
    fn products_are_never_rejected((a, b) in same_size_pair()) {
        prop_assume!(a.n() <= 3 && a.is_nonsingular().unwrap() && b.is_nonsingular().unwrap());
        let ab = a.mul(&b).unwrap();
        let t = Triple::from_chains(&divisor_chain(&a).unwrap(), &divisor_chain(&b).unwrap(), &divisor_chain(&ab).unwrap()).unwrap();
        let v = check_triple(&t).unwrap();
        prop_assert_ne!(v.outcome, Outcome::NotRealizable);
        if a.n() == 2 && a.ring() == Ring::Z {
            prop_assert_eq!(v.outcome, Outcome::Realizable);
        }
        if let Some((wa, wb)) = v.witness {
            prop_assert_eq!(divisor_chain(&wa).unwrap().determinantal().to_vec(), t.a().to_vec());
            prop_assert_eq!(divisor_chain(&wb).unwrap().determinantal().to_vec(), t.b().to_vec());
            prop_assert_eq!(divisor_chain(&wa.mul(&wb).unwrap()).unwrap().determinantal().to_vec(), t.c().to_vec());
        }
    }

    #[test]
    fn smith_certificates(a in int_matrix()) {
        let s = smith_normal_form(&a).unwrap();
        prop_assert!(s.verify(&a).unwrap());
        prop_assert_eq!(s.p.mul(&a).unwrap().mul(&s.q).unwrap(), s.d.clone());
        prop_assert!(s.p.is_unimodular().unwrap() && s.q.is_unimodular().unwrap());
        let diag = s.diagonal();
        let zero = BigInt::from(0);
        for w in diag.windows(2) {
            let divides = if w[0] == zero { w[1] == zero } else { &w[1] % &w[0] == zero };
            prop_assert!(divides);
        }
        let mut prefix = BigInt::from(1);
        for (k, x) in diag.iter().enumerate() {
            prop_assert!(*x >= zero);
            prefix *= x;
            prop_assert_eq!(detdiv::det_divisor(&a, k as isize + 1).unwrap(), Ideal::from_int(Ring::Z, prefix.clone()));
        }
    }

    #[test]
    fn equivalence_is_transitive(a in (1usize..=3).prop_flat_map(|n| (nonsingular(Ring::Z, n, 6), unimodular(Ring::Z, n), unimodular(Ring::Z, n), unimodular(Ring::Z, n)))) {
        let (a, u, v, w) = a;
        let b = u.mul(&a).unwrap().mul(&v).unwrap();
        let c = w.mul(&b).unwrap();
        prop_assert!(equivalent(&a, &a).unwrap());
        prop_assert!(equivalent(&a, &b).unwrap() && equivalent(&b, &c).unwrap() && equivalent(&a, &c).unwrap());
    }

    #[test]
    fn json_round_trip(m in any_matrix()) {
        let v = matrix_to_json(&m);
        prop_assert_eq!(&matrix_from_json(&v).unwrap(), &m);
        let chain = divisor_chain(&m).unwrap();
        prop_assert_eq!(&chain_from_json(&chain_to_json(&chain)).unwrap(), &chain);
        for d in chain.determinantal() {
            prop_assert_eq!(&ideal_from_json(m.ring(), &ideal_to_json(d)).unwrap(), d);
        }
    }
}
