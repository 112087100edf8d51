//! Randomised properties: polynomial ring axioms, q-binomial identities, and
//! round trips of the JSON format and the bijections on sampled objects.

use num_bigint::BigInt;
use proptest::prelude::*;
use qtcomb::bijections::{dyck_to_poly, poly_to_dyck, sweep, sweep_inv, zeta, zeta_inv};
use qtcomb::dyck::{enumerate_dd_filtered, DdFilter};
use qtcomb::polyomino::enumerate_rp;
use qtcomb::{qbinom, DeltaObject, DyckFlavor, PolyFlavor, QtPoly};

fn poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec((0u32..5, 0u32..5, -20i64..20), 0..6).prop_map(|terms| {
        let mut p = QtPoly::zero();
        for (qe, te, c) in terms {
            p.add_term(qe, te, BigInt::from(c));
        }
        p
    })
}

fn binomial(n: i64, k: i64) -> BigInt {
    let mut value = BigInt::from(1);
    for i in 0..k {
        value = value * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    value
}

proptest! {
    #[test]
    fn addition_is_a_commutative_group(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &QtPoly::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_and_distributive(
        a in poly(), b in poly(), c in poly()
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &QtPoly::one(), a.clone());
        prop_assert!((&a * &QtPoly::zero()).is_zero());
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn polynomial_json_round_trips(a in poly()) {
        let text = a.to_json();
        prop_assert_eq!(QtPoly::from_json(&text).unwrap(), a);
    }

    #[test]
    fn shifting_is_multiplication_by_a_monomial(a in poly(), qs in 0u32..4, ts in 0u32..4) {
        prop_assert_eq!(a.shifted(qs, ts), &a * &QtPoly::monomial(qs, ts, 1));
        prop_assert_eq!(a.swap_variables().swap_variables(), a);
    }

    #[test]
    fn q_pascal_recurrence(n in 1i64..14, k in 0i64..14) {
        // [n, k] = [n-1, k-1] + q^k [n-1, k]
        let lhs = qbinom(n, k);
        let rhs = &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shifted(k.max(0) as u32, 0);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_binomials_are_symmetric_and_specialize(n in 0i64..16, k in 0i64..16) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        prop_assert_eq!(qbinom(n, k).eval_at_one(), binomial(n, k));
    }

    #[test]
    fn sampled_ddd_objects_round_trip(
        m in 0usize..3, n in 0usize..5, pick in any::<prop::sample::Index>()
    ) {
        let objects: Vec<_> =
            enumerate_dd_filtered(m, n, DdFilter::default(), DyckFlavor::Ddd).collect();
        prop_assume!(!objects.is_empty());
        let d = pick.get(&objects);

        let text = DeltaObject::Dyck(d.clone()).to_json();
        prop_assert_eq!(DeltaObject::from_json(&text).unwrap().into_dyck().unwrap(), d.clone());

        let swept = sweep(d).unwrap();
        prop_assert_eq!(swept.flavor(), DyckFlavor::DdbTriangle);
        prop_assert_eq!(&sweep_inv(&swept).unwrap(), d);

        if n > 0 {
            let p = dyck_to_poly(d).unwrap();
            prop_assert_eq!(&poly_to_dyck(&p).unwrap(), d);
        }
    }

    #[test]
    fn sampled_polyominoes_round_trip(
        m in 0usize..4, n in 0usize..4, k in 0usize..3, j in 0usize..3,
        pick in any::<prop::sample::Index>()
    ) {
        let objects = enumerate_rp(m, None, n, k, j, PolyFlavor::Circ);
        prop_assume!(!objects.is_empty());
        let p = pick.get(&objects);

        let text = DeltaObject::Polyomino(p.clone()).to_json();
        prop_assert_eq!(
            DeltaObject::from_json(&text).unwrap().into_polyomino().unwrap(),
            p.clone()
        );

        let star = zeta(p).unwrap();
        prop_assert_eq!(star.flavor(), PolyFlavor::Star);
        prop_assert_eq!(&zeta_inv(&star).unwrap(), p);
        let dyck = poly_to_dyck(&star).unwrap();
        prop_assert_eq!(dyck_to_poly(&dyck).unwrap(), star);
    }
}

#[test]
fn malformed_json_is_rejected_without_panicking() {
    for text in [
        "",
        "{}",
        "[]",
        r#"{"kind":"dyck"}"#,
        r#"{"kind":"dyck","flavor":"ddd","area_word":[1]}"#,
        r#"{"kind":"dyck","flavor":"ddd","area_word":[0,1],"zval":[1]}"#,
        r#"{"kind":"dyck","flavor":"tri","area_word":[0]}"#,
        r#"{"kind":"polyomino","flavor":"star","word":[[1,false]]}"#,
        r#"{"kind":"polyomino","flavor":"star","word":[[0,false]],"extra":1}"#,
    ] {
        assert!(DeltaObject::from_json(text).is_err(), "{text}");
    }
}
