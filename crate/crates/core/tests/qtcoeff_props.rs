use macqt_core::qtcoeff::{QtPoly, QtScalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec((-6i64..=6, 0u32..4, 0u32..4), 0..5).prop_map(QtPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = QtPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar() -> impl Strategy<Value = QtScalar> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| QtScalar::normalize(n, d).unwrap())
}

fn point() -> impl Strategy<Value = (BigRational, BigRational)> {
    ((-9i64..=9, 1i64..=5), (-9i64..=9, 1i64..=5)).prop_map(|((a, b), (c, d))| {
        (
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalisation_ignores_common_factors(n in poly(), d in nonzero_poly(), c in nonzero_poly()) {
        let a = QtScalar::normalize(n.clone(), d.clone()).unwrap();
        let b = QtScalar::normalize(n.mul(&c), d.mul(&c)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn evaluation_commutes_with_field_operations(a in scalar(), b in scalar(), (q0, t0) in point()) {
        let (Ok(va), Ok(vb)) = (a.evaluate(&q0, &t0), b.evaluate(&q0, &t0)) else { return Ok(()) };
        if let Ok(v) = (&a + &b).evaluate(&q0, &t0) { prop_assert_eq!(v, &va + &vb); }
        if let Ok(v) = (&a - &b).evaluate(&q0, &t0) { prop_assert_eq!(v, &va - &vb); }
        if let Ok(v) = (&a * &b).evaluate(&q0, &t0) { prop_assert_eq!(v, &va * &vb); }
        if let Ok(v) = a.neg().evaluate(&q0, &t0) { prop_assert_eq!(v, -va.clone()); }
        if !b.is_zero() {
            if let Ok(v) = (&a / &b).evaluate(&q0, &t0) {
                if vb != BigRational::from_integer(0.into()) { prop_assert_eq!(v, &va / &vb); }
            }
        }
    }

    #[test]
    fn arithmetic_results_are_canonical(a in scalar(), b in scalar()) {
        for x in [&a + &b, &a * &b, &a - &b] {
            let again = QtScalar::normalize(x.numerator().clone(), x.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &x);
        }
    }

    #[test]
    fn power_substitutions_compose(a in scalar(), j in 1u32..4, k in 1u32..4) {
        prop_assert_eq!(a.substitute_powers(k).substitute_powers(j), a.substitute_powers(j * k));
    }

    #[test]
    fn inverting_variables_is_an_involution(a in scalar()) {
        prop_assert_eq!(a.invert_variables().invert_variables(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<QtScalar>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QtScalar>(&j).unwrap(), a);
    }
}
