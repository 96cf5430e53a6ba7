//! Randomized invariants over small random elements.

use proptest::prelude::*;
use suq2::exterior::{d_alg, masks_of_degree};
use suq2::{act_left, AlgElement, Form, Monomial, Pbw, Scalar, UqElement};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3, -3i64..=3, any::<bool>()).prop_map(|(n, d, k, imag)| {
        let x = Scalar::from_ratio(n, d) * Scalar::s_pow(k) + Scalar::from_int(1);
        if imag {
            x * Scalar::i()
        } else {
            x
        }
    })
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

fn alg(max_deg: u32) -> impl Strategy<Value = AlgElement> {
    let monos = Monomial::up_to_degree(max_deg);
    prop::collection::vec((0..monos.len(), scalar()), 1..3)
        .prop_map(move |t| AlgElement::from_terms(t.into_iter().map(|(i, c)| (monos[i], c))))
}

fn uq() -> impl Strategy<Value = UqElement> {
    prop::collection::vec((0u32..2, -1i32..=1, 0u32..2, scalar()), 1..3).prop_map(|t| {
        let mut u = UqElement::zero();
        for (f, k, e, c) in t {
            u.add_term(Pbw { f, k, e }, c);
        }
        u
    })
}

fn form(k: u32) -> impl Strategy<Value = Form> {
    let masks = masks_of_degree(k);
    prop::collection::vec((0..masks.len(), alg(1)), 1..3).prop_map(move |t| {
        let mut f = Form::zero();
        for (i, x) in t {
            f.add_term(masks[i], x);
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scalar_field_axioms(x in scalar(), y in nonzero_scalar(), z in scalar()) {
        prop_assert_eq!((&x * &y) * z.clone(), x.clone() * (&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        prop_assert_eq!(x.div(&y).unwrap() * y.clone(), x.clone());
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn algebra_product_is_associative(x in alg(2), y in alg(1), z in alg(1)) {
        prop_assert_eq!((&x * &y) * z.clone(), x * (&y * &z));
    }

    #[test]
    fn star_is_an_antilinear_antihomomorphism(x in alg(2), y in alg(1), c in scalar()) {
        prop_assert_eq!((&x * &y).star(), y.star() * x.star());
        prop_assert_eq!(x.scale(&c).star(), x.star().scale(&c.conj()));
        prop_assert_eq!(x.star().star(), x);
    }

    #[test]
    fn coproduct_is_multiplicative(x in alg(1), y in alg(1)) {
        prop_assert_eq!((&x * &y).coproduct(), x.coproduct().mul(&y.coproduct()));
    }

    #[test]
    fn antipode_is_antimultiplicative(x in alg(1), y in alg(1)) {
        prop_assert_eq!((&x * &y).antipode(), y.antipode() * x.antipode());
    }

    #[test]
    fn envelope_is_associative_and_acts(g in uq(), h in uq(), x in alg(1)) {
        let k = UqElement::e() + UqElement::k();
        prop_assert_eq!((&g * &h) * k.clone(), g.clone() * (&h * &k));
        prop_assert_eq!(act_left(&(&g * &h), &x), act_left(&g, &act_left(&h, &x)));
    }

    #[test]
    fn differential_squares_to_zero(x in alg(2), f in form(1), g in form(2)) {
        prop_assert!(d_alg(&x).d().is_zero());
        prop_assert!(f.d().d().is_zero());
        prop_assert!(g.d().d().is_zero());
    }

    #[test]
    fn graded_leibniz_rule(f in form(1), g in form(1), x in alg(1)) {
        prop_assert_eq!(f.wedge(&g).d(), f.d().wedge(&g) - f.wedge(&g.d()));
        prop_assert_eq!(d_alg(&x).wedge(&f).d(), -d_alg(&x).wedge(&f.d()));
    }

    #[test]
    fn wedge_is_associative(f in form(1), g in form(1), h in form(1)) {
        prop_assert_eq!(f.wedge(&g).wedge(&h), f.wedge(&g.wedge(&h)));
    }
}
