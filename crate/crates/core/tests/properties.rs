use eala::lie_torus::form;
use eala::torus::Degree;
use eala::{form_e, EalaElement, LieTorusElement, Matrix2, Scalar, Theta, TorusElement};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(n, d, r)| Scalar::frac(n, d) + Scalar::from_int(r) * Scalar::sqrt2())
}

fn torus() -> impl Strategy<Value = TorusElement> {
    prop::collection::vec(((-2i32..=2, -2i32..=2), scalar()), 0..4)
        .prop_map(|terms| TorusElement::from_terms(terms.into_iter().map(|((a, b), c)| (Degree::new(a, b), c))))
}

fn matrix() -> impl Strategy<Value = Matrix2> {
    (torus(), torus(), torus(), torus()).prop_map(|(a, b, c, d)| Matrix2::new(a, b, c, d))
}

/// x11 arbitrary, x22 = -x11 plus anything with no (even,even) part.
fn lie() -> impl Strategy<Value = LieTorusElement> {
    (torus(), torus(), torus(), torus()).prop_map(|(a, b, c, junk)| {
        let d = -&a + (&junk - &junk.even_even_part());
        LieTorusElement::new(Matrix2::new(a, b, c, d)).expect("trace criterion holds by construction")
    })
}

fn eala_element() -> impl Strategy<Value = EalaElement> {
    (lie(), scalar(), scalar()).prop_map(|(l, c, d)| EalaElement::new(l, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn scalar_text_round_trip(x in scalar()) {
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn torus_ring_axioms(x in torus(), y in torus(), z in torus()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y).conjugate(), &(&y.conjugate() * &x.conjugate()));
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
    }

    #[test]
    fn torus_text_round_trip(x in torus()) {
        prop_assert_eq!(x.to_string().parse::<TorusElement>().unwrap(), x);
    }

    #[test]
    fn commutators_have_no_even_even_part(x in torus(), y in torus()) {
        prop_assert!(x.commutator(&y).even_even_part().is_zero());
    }

    #[test]
    fn gl2_brackets_lie_in_sl2(x in matrix(), y in matrix()) {
        prop_assert!(LieTorusElement::new(x.bracket(&y)).is_ok());
    }

    #[test]
    fn lie_jacobi(x in lie(), y in lie(), z in lie()) {
        let j = x.bracket(&y.bracket(&z)) + y.bracket(&z.bracket(&x)) + z.bracket(&x.bracket(&y));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn form_symmetric_and_invariant(x in lie(), y in lie(), z in lie()) {
        prop_assert_eq!(form(&x, &y), form(&y, &x));
        prop_assert_eq!(form(&x.bracket(&y), &z), form(&x, &y.bracket(&z)));
    }

    #[test]
    fn cocycle_identities(x in lie(), y in lie(), z in lie()) {
        let t = Theta::default();
        prop_assert_eq!(t.cocycle(&x, &y), -t.cocycle(&y, &x));
        let cyc = t.cocycle(&x.bracket(&y), &z) + t.cocycle(&y.bracket(&z), &x) + t.cocycle(&z.bracket(&x), &y);
        prop_assert!(cyc.is_zero());
    }

    #[test]
    fn eala_jacobi_and_form(x in eala_element(), y in eala_element(), z in eala_element()) {
        let t = Theta::default();
        let j = &(&t.bracket(&x, &t.bracket(&y, &z)) + &t.bracket(&y, &t.bracket(&z, &x))) + &t.bracket(&z, &t.bracket(&x, &y));
        prop_assert!(j.is_zero());
        prop_assert_eq!(form_e(&t.bracket(&x, &y), &z), form_e(&x, &t.bracket(&y, &z)));
        prop_assert!(t.bracket(&x, &y).in_core());
    }

    #[test]
    fn eala_text_round_trip(x in eala_element()) {
        prop_assert_eq!(x.to_string().parse::<EalaElement>().unwrap(), x);
    }
}
