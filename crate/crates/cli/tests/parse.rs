use proptest::prelude::*;
use suq2::{AlgElement, ContractionParams, Form, Monomial, Pbw, Scalar, UqElement};
use suq2_cli::parse::{parse_expr, parse_scalar, ParseError, Sort, Value};

fn alg(text: &str) -> AlgElement {
    match parse_expr(text).unwrap() {
        Value::Alg(x) => x,
        v => panic!("{} parsed as {}", text, v.sort()),
    }
}

#[test]
fn relation_renders_as_zero() {
    let v = parse_expr("a*c - q c a").unwrap();
    assert_eq!(v.sort(), Sort::Alg);
    assert!(v.is_zero());
    assert_eq!(v.to_string(), "0");
}

#[test]
fn qnum_sugar() {
    assert_eq!(parse_scalar("[2]_q").unwrap(), parse_scalar("s^2 + s^-2").unwrap());
    assert_eq!(parse_scalar("[2]_q").unwrap(), parse_scalar("q + q^-1").unwrap());
    assert_eq!(parse_scalar("[1/2]_q").unwrap(), Scalar::qnum(suq2::Half(1)));
    assert_eq!(parse_scalar("[0]_q").unwrap(), Scalar::zero());
    assert!(matches!(parse_scalar("[s]_q"), Err(ParseError::Invalid { pos: 0, .. })));
}

#[test]
fn wedge_square_vanishes() {
    let v = parse_expr("w- ^ w-").unwrap();
    assert_eq!(v, Value::Form(Form::zero()));
    assert!(parse_expr("w+^w+").unwrap().is_zero());
    assert!(!parse_expr("w-^w+").unwrap().is_zero());
}

#[test]
fn adjoint_versus_product() {
    assert_eq!(alg("a*"), AlgElement::astar());
    assert_eq!(alg("a* + c*"), AlgElement::astar() + AlgElement::cstar());
    assert_eq!(alg("a*c"), AlgElement::a() * AlgElement::c());
    assert_eq!(alg("(a*)(c*)"), AlgElement::astar() * AlgElement::cstar());
    assert_eq!(alg("as cs"), AlgElement::astar() * AlgElement::cstar());
    assert_eq!(alg("a*a + c*c"), AlgElement::a().pow(2) + AlgElement::c().pow(2));
    assert_eq!(alg("as a + cs c"), AlgElement::one());
}

#[test]
fn precedence() {
    // juxtaposition binds tighter than the wedge, which binds tighter than +
    let lhs = parse_expr("a w- ^ w+ + w0").unwrap();
    let rhs = Form::omega(suq2::Idx::Minus).wedge(&Form::omega(suq2::Idx::Plus)).left_mul(&AlgElement::a()) + Form::omega(suq2::Idx::Zero);
    assert_eq!(lhs, Value::Form(rhs));
    assert_eq!(parse_scalar("-s^2").unwrap(), -Scalar::q());
    assert_eq!(parse_scalar("2/3 s").unwrap(), Scalar::from_ratio(2, 3) * Scalar::s());
    match parse_expr("K^-1 K").unwrap() {
        Value::Uq(u) => assert_eq!(u, UqElement::one()),
        v => panic!("{}", v.sort()),
    }
}

#[test]
fn error_positions() {
    assert_eq!(
        parse_expr("a + E"),
        Err(ParseError::MixedSort { pos: 2, left: Sort::Alg, right: Sort::Uq })
    );
    assert!(matches!(parse_expr("a * (c"), Err(ParseError::Syntax { pos: 6, .. })));
    assert!(matches!(parse_expr("a + $"), Err(ParseError::Syntax { pos: 4, .. })));
    assert!(matches!(parse_expr(""), Err(ParseError::Syntax { pos: 0, .. })));
    assert_eq!(parse_expr("2 x"), Err(ParseError::UnknownIdent { pos: 2, name: "x".into() }));
    assert!(matches!(parse_expr("E ^ w-"), Err(ParseError::MixedSort { pos: 2, .. })));
    assert!(matches!(parse_expr("1/0"), Err(ParseError::Invalid { pos: 1, .. })));
    assert!(matches!(parse_scalar("a"), Err(ParseError::MixedSort { .. })));
}

#[test]
fn registered_roots_parse_by_name() {
    let p = ContractionParams::dirac_point().unwrap();
    let x = (Scalar::i() * p.m_scalar() + Scalar::q()) * p.m_scalar();
    let back = parse_scalar(&x.to_string()).unwrap();
    assert_eq!(back, x);
}

// ---------------------------------------------------------------------------
// round trip: parse ∘ render = id

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -4i64..=4, 1i64..=3, any::<bool>(), -2i64..=2).prop_map(|(n, k, d, imag, shift)| {
        let mut x = Scalar::from_ratio(n, d) * Scalar::s_pow(k) + Scalar::from_int(shift);
        if imag {
            x = x * Scalar::i() + Scalar::one();
        }
        if shift == 2 {
            x = x.div(&(Scalar::q() + Scalar::one())).unwrap();
        }
        x
    })
}

fn alg_element() -> impl Strategy<Value = AlgElement> {
    let monos = Monomial::up_to_degree(3);
    prop::collection::vec((0..monos.len(), scalar()), 0..4).prop_map(move |terms| {
        AlgElement::from_terms(terms.into_iter().map(|(i, c)| (monos[i], c)))
    })
}

fn uq_element() -> impl Strategy<Value = UqElement> {
    prop::collection::vec((0u32..3, -2i32..=2, 0u32..3, scalar()), 0..4).prop_map(|terms| {
        let mut u = UqElement::zero();
        for (f, k, e, c) in terms {
            u.add_term(Pbw { f, k, e }, c);
        }
        u
    })
}

fn form() -> impl Strategy<Value = Form> {
    prop::collection::vec((0u8..16, alg_element()), 0..3).prop_map(|terms| {
        let mut f = Form::zero();
        for (m, x) in terms {
            f.add_term(m, x);
        }
        f
    })
}

fn round_trips(v: Value) -> Result<(), TestCaseError> {
    let text = v.to_string();
    let back = parse_expr(&text).map_err(|e| TestCaseError::fail(format!("{:?} on {}", e, text)))?;
    prop_assert!(back.same_as(&v), "{} came back as {}", text, back);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn scalars_round_trip(x in scalar()) {
        round_trips(Value::Scalar(x))?;
    }

    #[test]
    fn algebra_elements_round_trip(x in alg_element()) {
        round_trips(Value::Alg(x))?;
    }

    #[test]
    fn envelope_elements_round_trip(x in uq_element()) {
        round_trips(Value::Uq(x))?;
    }

    #[test]
    fn forms_round_trip(x in form()) {
        round_trips(Value::Form(x))?;
    }
}
