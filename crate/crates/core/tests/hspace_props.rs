use macqt_core::hspace::{from_hbasis, to_hbasis, HExp};
use macqt_core::qtcoeff::QtScalar;
use macqt_core::Partition;
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = QtScalar> {
    (-3i64..=3, 0i64..2, 0i64..2).prop_map(|(c, i, j)| QtScalar::monomial(c, i, j))
}

fn hexp(max_n: usize) -> impl Strategy<Value = HExp> {
    let shapes: Vec<Partition> = (0..=max_n).flat_map(Partition::all).collect();
    prop::collection::vec((prop::sample::select(shapes), coefficient()), 0..4)
        .prop_map(HExp::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn monomial_round_trip(f in hexp(4)) {
        prop_assert_eq!(to_hbasis(&from_hbasis(&f)), f);
    }

    #[test]
    fn nabla_powers_compose(f in hexp(4), a in -2i64..=2, b in -2i64..=2) {
        prop_assert_eq!(f.nabla(a).nabla(b), f.nabla(a + b));
    }

    #[test]
    fn skew_and_multiply_match_the_classical_side(f in hexp(3)) {
        let classical = from_hbasis(&f);
        prop_assert_eq!(from_hbasis(&f.mul_e1()), classical.mul_e1());
        prop_assert_eq!(from_hbasis(&f.skew_e1()), classical.skew_e1());
        // h_2^perp = (p_1^perp p_1^perp + p_2^perp) / 2.
        let half = QtScalar::from(2).inv().unwrap();
        let h2_perp = classical.skew_p(1).skew_p(1).add(&classical.skew_p(2)).scale(&half);
        prop_assert_eq!(f.skew_hk(2), to_hbasis(&h2_perp));
    }

    #[test]
    fn lowering_is_star_adjoint_to_raising(f in hexp(3), g in hexp(3), m in 0i64..=2) {
        let lhs = from_hbasis(&f.q_m_neg1(m)).star_product(&from_hbasis(&g));
        let rhs = from_hbasis(&f).star_product(&from_hbasis(&g.q_m1(m)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_and_json_round_trip(f in hexp(4)) {
        prop_assert_eq!(f.to_string().parse::<HExp>().unwrap(), f.clone());
        let json: HExp = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(json, f);
    }
}
