//! Ring axioms and structural laws for the quarter-grid Laurent polynomials,
//! checked on randomly generated inputs.

use jlint_core::{rat, QuarterLaurent, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    ((-9i64..=9), (1i64..=8)).prop_map(|(n, d)| rat(n, d))
}

fn quarter_laurent() -> impl Strategy<Value = QuarterLaurent> {
    prop::collection::vec(((-40i64..=40), small_rational()), 0..=6)
        .prop_map(|terms| terms.into_iter().collect())
}

fn nonzero_laurent() -> impl Strategy<Value = QuarterLaurent> {
    quarter_laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn integer_grid_laurent() -> impl Strategy<Value = QuarterLaurent> {
    prop::collection::vec(((-10i64..=10), small_rational()), 0..=6)
        .prop_map(|terms| terms.into_iter().map(|(k, c)| (4 * k, c)).collect())
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(
        p in quarter_laurent(), q in quarter_laurent(), r in quarter_laurent()
    ) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        p in quarter_laurent(), q in quarter_laurent(), r in quarter_laurent()
    ) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes_over_addition(
        p in quarter_laurent(), q in quarter_laurent(), r in quarter_laurent()
    ) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn additive_inverse_and_identities(p in quarter_laurent()) {
        prop_assert_eq!(&p + &(-&p), QuarterLaurent::zero());
        prop_assert_eq!(&p + &QuarterLaurent::zero(), p.clone());
        prop_assert_eq!(&p * &QuarterLaurent::one(), p.clone());
        prop_assert!((&p * &QuarterLaurent::zero()).is_zero());
    }

    #[test]
    fn pow_matches_repeated_multiplication(p in quarter_laurent()) {
        prop_assert_eq!(p.pow(1), p.clone());
        prop_assert_eq!(p.pow(2), &p * &p);
        prop_assert_eq!(p.pow(3), &(&p * &p) * &p);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        p in quarter_laurent(), d in nonzero_laurent()
    ) {
        let product = &p * &d;
        prop_assert_eq!(product.div_exact(&d).unwrap(), p);
    }

    #[test]
    fn display_and_parse_round_trip(p in quarter_laurent()) {
        let rendered = p.to_string();
        let parsed: QuarterLaurent = rendered.parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn variable_inversion_is_an_involution_and_multiplicative(
        p in quarter_laurent(), q in quarter_laurent()
    ) {
        prop_assert_eq!(p.invert_variable().invert_variable(), p.clone());
        prop_assert_eq!(
            (&p * &q).invert_variable(),
            &p.invert_variable() * &q.invert_variable()
        );
    }

    #[test]
    fn degrees_add_under_multiplication(
        p in nonzero_laurent(), q in nonzero_laurent()
    ) {
        let product = &p * &q;
        prop_assert_eq!(product.max_index(), Some(p.max_index().unwrap() + q.max_index().unwrap()));
        prop_assert_eq!(product.min_index(), Some(p.min_index().unwrap() + q.min_index().unwrap()));
    }

    #[test]
    fn integer_grid_is_closed_under_product(
        p in integer_grid_laurent(), q in integer_grid_laurent()
    ) {
        prop_assert!(p.is_integer_grid());
        prop_assert!((&p * &q).is_integer_grid());
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(
        p in quarter_laurent(), q in quarter_laurent()
    ) {
        prop_assert_eq!((&p + &q).evaluate_at_one(), p.evaluate_at_one() + q.evaluate_at_one());
        prop_assert_eq!((&p * &q).evaluate_at_one(), p.evaluate_at_one() * q.evaluate_at_one());
    }
}
