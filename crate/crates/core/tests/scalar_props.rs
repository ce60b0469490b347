use proptest::prelude::*;

use hopfstar::scalar::{Scalar, Sign};

const ORDERS: [u32; 6] = [1, 3, 4, 5, 8, 12];

/// Integer combination of powers of ζ_n, with the terms recorded so the
/// value can be evaluated in floating point.
fn element() -> impl Strategy<Value = (Scalar, Vec<(u32, i64, i64)>)> {
    let term = (prop::sample::select(ORDERS.to_vec()), 0i64..12, -4i64..=4);
    prop::collection::vec(term, 1..4).prop_map(|terms| {
        let s = terms.iter().fold(Scalar::zero(), |acc, &(n, k, c)| {
            &acc + &(&Scalar::zeta(n, k) * &Scalar::from_int(c))
        });
        (s, terms)
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    element().prop_map(|(s, _)| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn addition_and_multiplication_commute(a in scalar(), b in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn associativity_and_distributivity(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_elements_are_invertible(a in scalar()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn text_form_round_trips(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn sign_agrees_with_floating_point((a, terms) in element()) {
        // a + ā is real; its value is 2 Σ c cos(2πk/n).
        let real = &a + &a.conj();
        let approx: f64 = terms
            .iter()
            .map(|&(n, k, c)| 2.0 * c as f64 * (std::f64::consts::TAU * k as f64 / n as f64).cos())
            .sum();
        let sign = real.sign().unwrap();
        if approx.abs() > 1e-9 {
            let expected = if approx > 0.0 { Sign::Positive } else { Sign::Negative };
            prop_assert_eq!(sign, expected);
        } else {
            prop_assert_eq!(sign, Sign::Zero);
        }
    }
}

#[test]
fn golden_ratio_sign_needs_refinement() {
    // ζ5 + ζ5⁻¹ = (√5 - 1)/2 > 0, and ζ5² + ζ5⁻² = -(√5 + 1)/2 < 0.
    let a = &Scalar::zeta(5, 1) + &Scalar::zeta(5, 4);
    let b = &Scalar::zeta(5, 2) + &Scalar::zeta(5, 3);
    assert_eq!(a.sign().unwrap(), Sign::Positive);
    assert_eq!(b.sign().unwrap(), Sign::Negative);
    assert!((&(&a + &b) + &Scalar::one()).is_zero());
}

#[test]
fn non_real_sign_is_an_error() {
    assert!(Scalar::i().sign().is_err());
}
