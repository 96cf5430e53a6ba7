use super::*;
use crate::envelope::{act_left, right_tangent, tangent};
use crate::exterior::{d_basis, RightForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use Idx::*;

fn mono(apow: i32, ec: u32, ecs: u32) -> AlgElement {
    AlgElement::monomial(Monomial { apow, ec, ecs })
}

fn hodge() -> SphereHodge {
    SphereHodge::new(ContractionParams::derive(Scalar::one(), Scalar::one()).unwrap()).unwrap()
}

fn hodges() -> Vec<SphereHodge> {
    vec![hodge(), SphereHodge::new(ContractionParams::dirac_point().unwrap()).unwrap()]
}

fn sf(f: Form) -> SphereForm {
    as_sphere_form(f).unwrap()
}

fn lact(a: Idx, x: &AlgElement) -> AlgElement {
    act_left(&tangent(a), x)
}

fn ract(a: Idx, x: &AlgElement) -> AlgElement {
    act_left(&right_tangent(a), x)
}

fn w(word: &[Idx]) -> Form {
    Form::word(word)
}

/// `ω_I y` as a left form.
fn rw(word: &[Idx], y: &AlgElement) -> Form {
    w(word).right_mul(y)
}

/// Elements of `L_n` spanned by monomials of degree at most `deg`.
fn graded_monomials(n: i64, deg: u32) -> Vec<AlgElement> {
    Monomial::up_to_degree(deg).into_iter().filter(|m| m.grade() == n).map(AlgElement::monomial).collect()
}

fn random_graded(rng: &mut ChaCha8Rng, n: i64, deg: u32) -> AlgElement {
    let monos = graded_monomials(n, deg);
    let mut x = AlgElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        x = x + monos[rng.gen_range(0..monos.len())].scale(&(Scalar::from_int(rng.gen_range(1..=3)) + Scalar::q_pow(rng.gen_range(-1..=1))));
    }
    x
}

fn random_sphere_form(rng: &mut ChaCha8Rng, k: u32) -> SphereForm {
    let mut f = Form::zero();
    for m in sphere_slots(k) {
        let n = slot_grade(m).unwrap();
        f = f + Form::term(m, random_graded(rng, n, 3));
    }
    sf(f)
}

#[test]
fn grading_checks() {
    let cs2 = mono(0, 0, 2);
    assert!(as_sphere_form(Form::term(M_PLUS, cs2)).is_ok());
    assert_eq!(
        as_sphere_form(Form::term(M_ZERO, AlgElement::a())),
        Err(SphereError::WrongGrade { mask: M_ZERO, expected: 0 })
    );
    assert!(as_sphere_form(Form::term(M_MINUS_PLUS, mono(0, 1, 1))).is_ok());
    assert_eq!(as_sphere_form(Form::omega(Z)), Err(SphereError::ForeignSlot(0b0100)));
    // ω_0∧ω_+ lands on the ω_+∧ω_0 slot with a sign
    assert!(as_sphere_form(w(&[Zero, Plus]).left_mul(&mono(0, 0, 2))).is_ok());
}

#[test]
fn differential_on_functions() {
    let ccs = mono(0, 1, 1);
    let d = d_sphere(&sf(Form::from_alg(ccs.clone()))).unwrap();
    let expected = Form::term(M_MINUS, lact(Minus, &ccs)) + Form::term(M_PLUS, lact(Plus, &ccs)) + Form::term(M_ZERO, lact(Zero, &ccs));
    assert_eq!(d.form(), &expected);
    assert!(lact(Z, &ccs).is_zero());
    // right-handed form of the same differential
    let right = rw(&[Minus], &ract(Minus, &ccs)) + rw(&[Plus], &ract(Plus, &ccs)) + rw(&[Zero], &ract(Zero, &ccs));
    assert_eq!(d.form(), &right);
    assert!(d_sphere(&sf(Form::from_alg(AlgElement::one()))).unwrap().form().is_zero());
}

#[test]
fn sphere_complex_is_closed() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..12 {
        let k = i % 4;
        let theta = random_sphere_form(&mut rng, k);
        let d = d_sphere(&theta).unwrap();
        if k == 3 {
            assert!(d.form().is_zero());
        }
        assert!(d_sphere(&d).unwrap().form().is_zero());
    }
}

#[test]
fn exterior_derivative_left_identities() {
    let dw0 = d_basis(M_ZERO);
    for phi in graded_monomials(-2, 3) {
        let d = Form::term(M_MINUS, phi.clone()).d();
        let e = w(&[Plus, Minus]).left_mul(&lact(Plus, &phi)) + w(&[Zero, Minus]).left_mul(&lact(Zero, &phi));
        assert_eq!(d, e);
        let d = Form::term(M_MINUS_ZERO, phi.clone()).d();
        assert_eq!(d, w(&[Plus, Minus, Zero]).left_mul(&lact(Plus, &phi)));
    }
    for phi in graded_monomials(2, 3) {
        let d = Form::term(M_PLUS, phi.clone()).d();
        let e = w(&[Minus, Plus]).left_mul(&lact(Minus, &phi)) + w(&[Zero, Plus]).left_mul(&lact(Zero, &phi));
        assert_eq!(d, e);
        let d = w(&[Zero, Plus]).left_mul(&phi).d();
        assert_eq!(d, w(&[Minus, Zero, Plus]).left_mul(&lact(Minus, &phi)));
    }
    for phi in graded_monomials(0, 2) {
        let d = Form::term(M_ZERO, phi.clone()).d();
        // the middle term sits on ω_+∧ω_0
        let e = w(&[Minus, Zero]).left_mul(&lact(Minus, &phi)) + w(&[Plus, Zero]).left_mul(&lact(Plus, &phi)) + dw0.left_mul(&phi);
        assert_eq!(d, e);
        if !lact(Plus, &phi).is_zero() {
            let typo = w(&[Minus, Zero]).left_mul(&(lact(Minus, &phi) + lact(Plus, &phi))) + dw0.left_mul(&phi);
            assert_ne!(d, typo);
        }
        let d = Form::term(M_MINUS_PLUS, phi.clone()).d();
        assert_eq!(d, w(&[Zero, Minus, Plus]).left_mul(&lact(Zero, &phi)));
        assert!(Form::term(M_TOP3, phi.clone()).d().is_zero());
    }
}

#[test]
fn exterior_derivative_right_identities() {
    let dw0 = d_basis(M_ZERO);
    for phi in graded_monomials(-2, 3) {
        let d = rw(&[Minus], &phi).d();
        let e = -(rw(&[Minus, Plus], &ract(Plus, &phi)) + rw(&[Minus, Zero], &ract(Zero, &phi)));
        assert_eq!(d, e);
        assert_eq!(rw(&[Minus, Zero], &phi).d(), rw(&[Minus, Zero, Plus], &ract(Plus, &phi)));
    }
    for phi in graded_monomials(2, 3) {
        let d = rw(&[Plus], &phi).d();
        let e = -(rw(&[Plus, Minus], &ract(Minus, &phi)) + rw(&[Plus, Zero], &ract(Zero, &phi)));
        assert_eq!(d, e);
        assert_eq!(rw(&[Zero, Plus], &phi).d(), rw(&[Zero, Plus, Minus], &ract(Minus, &phi)));
    }
    for phi in graded_monomials(0, 2) {
        let d = rw(&[Zero], &phi).d();
        let e = dw0.right_mul(&phi) - rw(&[Zero, Minus], &ract(Minus, &phi)) - rw(&[Zero, Plus], &ract(Plus, &phi));
        assert_eq!(d, e);
        assert_eq!(rw(&[Minus, Plus], &phi).d(), rw(&[Minus, Plus, Zero], &ract(Zero, &phi)));
    }
}

#[test]
fn volume_is_central_on_the_sphere() {
    let h = hodge();
    let mu = h.volume().into_form();
    for f in graded_monomials(0, 4) {
        assert_eq!(mu.left_mul(&f), mu.right_mul(&f));
    }
    let ccs = mono(0, 1, 1);
    let expected = (Scalar::one() + Scalar::q_pow(2)).inv().unwrap();
    assert_eq!(h.integral(&sf(mu.left_mul(&ccs))).unwrap(), expected);
    assert!(h.integral(&sf(Form::omega(Zero))).unwrap().is_zero());
    assert!(h.integral(&h.volume()).unwrap().is_one());
}

#[test]
fn mcheck_normalization() {
    for h in hodges() {
        let m = h.mcheck_scalar();
        assert_eq!(&m * &m * h.det_check.clone(), Scalar::one());
        assert!(h.det_check.as_rational_function().is_some());
        let one = sf(Form::from_alg(AlgElement::one()));
        assert_eq!(h.lhodge(&one), h.volume());
        assert_eq!(h.rhodge(&one), h.volume());
        assert_eq!(h.lhodge(&h.lhodge(&one)), one);
        assert_eq!(h.rhodge(&h.rhodge(&one)), one);
        assert!(h.volume_bracket().is_one());
    }
}

#[test]
fn hodge_table_examples() {
    let h = hodge();
    let (mc, p) = (h.mcheck_scalar(), &h.params);
    let phi = mono(0, 2, 0);
    let got = h.lhodge(&sf(Form::term(M_MINUS, phi.clone())));
    assert_eq!(got.form(), &w(&[Minus, Zero]).left_mul(&phi).scale(&(&mc * &p.alpha)));
    let got = h.rhodge(&sf(rw(&[Minus], &phi)));
    assert_eq!(got.form(), &rw(&[Minus, Zero], &phi).scale(&(&mc * &(Scalar::q_pow(2) * p.alpha.clone()))));
    let got = h.lhodge(&sf(Form::omega(Zero)));
    assert_eq!(got.form(), &w(&[Minus, Plus]).scale(&-(&mc * &p.nu)));
    // shared lines of the two tables
    for m in [M_ZERO, M_MINUS_PLUS] {
        let t = sf(Form::basis(m));
        assert_eq!(h.lhodge(&t), h.rhodge(&t));
    }
}

#[test]
fn hodge_squares_are_diagonal() {
    for h in hodges() {
        for k in 0..=3 {
            for t in witness_family(k, 2) {
                let (m, x) = t.form().terms().next().map(|(m, x)| (*m, x.clone())).unwrap();
                let left = Form::basis(m).left_mul(&x);
                let right = Form::basis(m).right_mul(&x);
                let l2 = h.lhodge(&h.lhodge(&sf(left.clone()))).into_form();
                let r2 = h.rhodge(&h.rhodge(&sf(right.clone()))).into_form();
                let (lm, _) = x.terms().next().unwrap();
                let cl = l2.coeff(m).coeff(lm);
                assert!(!cl.is_zero());
                assert_eq!(l2, left.scale(&cl), "slot {:#06b}", m);
                let cr = to_right(&r2).coeff(m).coeff(lm);
                assert!(!cr.is_zero());
                assert_eq!(r2, right.scale(&cr), "slot {:#06b}", m);
            }
        }
    }
}

#[test]
fn sphere_linearity() {
    let h = hodge();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..20 {
        let f = random_graded(&mut rng, 0, 2);
        let theta = random_sphere_form(&mut rng, (i % 4) as u32);
        let ft = sf(theta.form().left_mul(&f));
        assert_eq!(h.lhodge(&ft).into_form(), h.lhodge(&theta).form().left_mul(&f));
        let tf = sf(theta.form().right_mul(&f));
        assert_eq!(h.rhodge(&tf).into_form(), h.rhodge(&theta).form().right_mul(&f));
    }
}

#[test]
fn hodge_inner_product_identity_on_witnesses() {
    for h in hodges() {
        for k in 0..=3 {
            let fam = witness_family(k, 2);
            for t1 in &fam {
                for t2 in &fam {
                    assert!(h.verify_les(t1, t2).unwrap(), "k = {}", k);
                }
            }
        }
    }
}

#[test]
fn hodge_inner_product_identity_on_random_forms() {
    let h = hodge();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in 0..12 {
        let k = (i % 4) as u32;
        let t1 = random_sphere_form(&mut rng, k);
        let t2 = random_sphere_form(&mut rng, k);
        assert!(h.verify_les(&t1, &t2).unwrap(), "sample {}", i);
    }
    let t1 = random_sphere_form(&mut rng, 1);
    let t2 = random_sphere_form(&mut rng, 2);
    assert_eq!(h.verify_les(&t1, &t2), Err(SphereError::DegreeMismatch));
}

#[test]
fn inner_product_identity_pins_the_operator() {
    // Rescaling any single slot of Ľ breaks the identity on the witness family.
    let h = hodge();
    for k in 0..=3 {
        let fam = witness_family(k, 2);
        for m in sphere_slots(k) {
            let perturbed = |t: &SphereForm| {
                let mut out = h.lhodge(t).into_form();
                out = out + h.lhodge(&sf(Form::term(m, t.form().coeff(m)))).into_form();
                out
            };
            let broken = fam.iter().any(|t1| {
                fam.iter().any(|t2| {
                    let lhs = h.integral(&sf(t1.form().conj().wedge(&perturbed(t2)))).unwrap();
                    lhs != h.params.inner_l(t1.form(), t2.form()).unwrap()
                })
            });
            assert!(broken, "slot {:#06b}", m);
        }
    }
}

#[test]
fn nondegeneracy() {
    for k in 0..=3 {
        assert!(nondegeneracy_witness(k, 2));
    }
    let phi = mono(0, 2, 0);
    let psi = mono(0, 0, 2);
    let theta = Form::term(M_MINUS_ZERO, phi.clone());
    let prod = Form::term(M_PLUS, psi.clone()).wedge(&theta);
    assert_eq!(prod, w(&[Plus, Minus, Zero]).left_mul(&psi.mul_ref(&phi)));
    assert!(!prod.is_zero());
    let theta = Form::term(M_MINUS, phi);
    assert!(!Form::term(M_PLUS_ZERO, psi).wedge(&theta).is_zero());
}

#[test]
fn right_coefficients_keep_grades() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..=3 {
        let theta = random_sphere_form(&mut rng, k);
        let r: RightForm = to_right(theta.form());
        for (m, y) in r.terms() {
            assert!(y.is_in_ln(slot_grade(*m).unwrap()));
        }
    }
}
