use proptest::prelude::*;
use rota_baxter::algebra::Algebra;
use rota_baxter::constraint::{classify, Constraint};
use rota_baxter::divided_power::{dp_d, dp_mul, DPElement, DividedPower};
use rota_baxter::scalar::{int, ratio, ScalarPoly};

fn dp_element(modulus: Option<usize>) -> impl Strategy<Value = DPElement> {
    prop::collection::vec(-5i64..=5, 0..6).prop_map(move |c| DPElement::from_ints(modulus, &c))
}

fn weight() -> impl Strategy<Value = rota_baxter::scalar::Scalar> {
    prop_oneof![Just(int(0)), Just(int(1)), Just(int(-2)), Just(ratio(3, 5))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_product_distributes(a in dp_element(Some(5)), b in dp_element(Some(5)), c in dp_element(Some(5)), w in weight()) {
        let left = dp_mul(&a, &b.try_add(&c).unwrap(), &w).unwrap();
        let right = dp_mul(&a, &b, &w).unwrap().try_add(&dp_mul(&a, &c, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn d_satisfies_weighted_leibniz(a in dp_element(None), b in dp_element(None), w in weight()) {
        let dp = DividedPower::full(w.clone());
        let lhs = dp_d(&dp.mul(&a, &b));
        let rhs = dp.sum([
            dp.mul(&dp_d(&a), &b),
            dp.mul(&a, &dp_d(&b)),
            dp.scale(&w, &dp.mul(&dp_d(&a), &dp_d(&b))),
        ]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn element_text_round_trips(a in dp_element(Some(4))) {
        let q = DividedPower::quotient(4, int(0));
        prop_assert_eq!(q.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn omega_k_is_inside_omega_zero(phi in prop::collection::vec(-2i64..=2, 0..3), psi in prop::collection::vec(-2i64..=2, 0..3)) {
        let omega = Constraint::new(ScalarPoly::from_ints(&phi), ScalarPoly::from_ints(&psi));
        let v = classify(&omega);
        prop_assert!(!v.in_omegak || v.in_omega0);
    }
}
