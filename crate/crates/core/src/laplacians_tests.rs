use super::*;
use crate::algebra::Monomial;
use crate::envelope::{action_eigen, casimir, phi_basis, EigenOp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> ContractionParams {
    ContractionParams::derive(Scalar::one(), Scalar::one()).unwrap()
}

fn sides() -> [Side; 2] {
    [Side::Left, Side::Right]
}

fn qn(j: i64) -> Scalar {
    Scalar::qnum(Half::from_int(j))
}

#[test]
fn su_dual_path_on_monomials() {
    for p in [params(), ContractionParams::dirac_point().unwrap()] {
        for m in Monomial::up_to_degree(3) {
            let x = AlgElement::monomial(m);
            for side in sides() {
                let hodge = box_su(side, &x, &p).unwrap();
                assert_eq!(hodge, box_closed(side, Space::Su, &x, &p), "{:?} {:?}", side, m);
            }
        }
    }
    let p = params();
    assert!(box_su(Side::Left, &AlgElement::one(), &p).unwrap().is_zero());
}

#[test]
fn su_laplacian_preserves_grades() {
    let p = params();
    for n in [-2, -1, 1, 2] {
        for m in Monomial::up_to_degree(3).into_iter().filter(|m| m.grade() == n) {
            let x = AlgElement::monomial(m);
            for side in sides() {
                assert!(box_su(side, &x, &p).unwrap().is_in_ln(n));
            }
        }
    }
}

#[test]
fn su_laplacian_on_phi_basis() {
    // Independent oracle: the closed-form eigenvalues of the tangent vectors on φ_{n,J,l}.
    let p = params();
    let q2 = Scalar::q_pow(2);
    for (n, j2) in [(0, 2), (1, 1), (-1, 1), (2, 2), (-2, 2), (1, 3), (0, 4)] {
        let j = Half(j2);
        let e = |op| action_eigen(op, n, j);
        let lz = e(EigenOp::Lz);
        let lambda = p.alpha.clone() * (e(EigenOp::LplusLminus) + &q2 * &e(EigenOp::LminusLplus))
            + p.nu.clone() * e(EigenOp::L0).pow(2)
            + p.gamma.clone() * lz.pow(2)
            + Scalar::from_int(2) * p.eps.clone() * e(EigenOp::L0) * lz;
        for l in 0..=j2 {
            let phi = phi_basis(n, j, l).unwrap();
            assert_eq!(box_su(Side::Left, &phi, &p).unwrap(), phi.scale(&lambda), "n={} 2J={} l={}", n, j2, l);
        }
    }
}

#[test]
fn sphere_dual_path_and_spectrum() {
    let h = SphereHodge::new(params()).unwrap();
    let p = &h.params;
    for j in 0..=2u32 {
        let want = spectrum_s2(j, p);
        for l in 0..=(2 * j as i64) {
            let phi = phi_basis(0, Half::from_int(j as i64), l).unwrap();
            for side in sides() {
                let got = box_s2(side, &phi, &h).unwrap();
                assert_eq!(got, phi.scale(&want), "J={} l={} {:?}", j, l, side);
                assert_eq!(got, box_closed(side, Space::S2, &phi, p));
                assert_eq!(got, box_su(side, &phi, p).unwrap());
            }
        }
    }
    assert!(box_s2(Side::Left, &AlgElement::one(), &h).unwrap().is_zero());
    assert_eq!(box_s2(Side::Left, &AlgElement::a(), &h), Err(LaplaceError::NotInL0));
}

#[test]
fn sphere_laplacian_on_c_cstar() {
    // cc* = Σ x_{J,l} φ_{0,J,l}; check term-wise eigenvalues.
    let h = SphereHodge::new(params()).unwrap();
    let ccs = AlgElement::c() * AlgElement::cstar();
    let got = box_s2(Side::Left, &ccs, &h).unwrap();
    let basis: Vec<(u32, AlgElement)> = [(0, 0), (1, 0), (1, 1), (1, 2)]
        .into_iter()
        .map(|(j, l)| (j, phi_basis(0, Half::from_int(j as i64), l).unwrap()))
        .collect();
    let monos = Monomial::up_to_degree(2);
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|(_, b)| monos.iter().map(|m| b.coeff(m)).collect()).collect();
    let target: Vec<Scalar> = monos.iter().map(|m| ccs.coeff(m)).collect();
    let x = crate::linalg::solve_in_span(&cols, &target).expect("cc* lies in the J ≤ 1 span");
    let mut expected = AlgElement::zero();
    for ((j, b), c) in basis.iter().zip(&x) {
        expected = expected + b.scale(&(c.clone() * spectrum_s2(*j, &h.params)));
    }
    assert!(x[1..].iter().any(|c| !c.is_zero()));
    assert_eq!(got, expected);
}

#[test]
fn sphere_laplacians_coincide() {
    let h = SphereHodge::new(params()).unwrap();
    let monos: Vec<Monomial> = Monomial::up_to_degree(4).into_iter().filter(|m| m.grade() == 0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let mut f = AlgElement::zero();
        for _ in 0..2 {
            f.add_term(monos[rng.gen_range(0..monos.len())], Scalar::from_int(rng.gen_range(1..=4)));
        }
        assert_eq!(box_s2(Side::Left, &f, &h).unwrap(), box_s2(Side::Right, &f, &h).unwrap());
    }
}

#[test]
fn casimir_form_on_sphere() {
    // □ = 2qα L_0 + ν L_0² and L_0 = C_q + 1/4 − [1/2]² on the φ_{0,J,l}.
    let p = params();
    let l0 = crate::envelope::tangent(Idx::Zero);
    let shift = casimir() + UqElement::from_scalar(Scalar::from_ratio(1, 4) - Scalar::qnum(Half(1)).pow(2));
    let op = l0.scale(&(Scalar::from_int(2) * Scalar::q() * p.alpha.clone())) + (l0.clone() * l0.clone()).scale(&p.nu);
    for j in 0..=2i64 {
        for l in 0..=2 * j {
            let phi = phi_basis(0, Half::from_int(j), l).unwrap();
            assert_eq!(act_left(&shift, &phi), act_left(&l0, &phi));
            for side in sides() {
                assert_eq!(box_closed(side, Space::S2, &phi, &p), act_left(&op, &phi));
            }
        }
    }
}

#[test]
fn spectrum_values() {
    let p = params();
    assert!(spectrum_s2(0, &p).is_zero());
    let two = qn(2);
    let j1 = Scalar::from_int(2) * Scalar::q() * p.alpha.clone() * two.clone() + p.nu.clone() * two.pow(2);
    assert_eq!(spectrum_s2(1, &p), j1);
    let x = qn(2) * qn(3);
    let j2 = Scalar::from_int(2) * Scalar::q() * p.alpha.clone() * x.clone() + p.nu.clone() * x.pow(2);
    assert_eq!(spectrum_s2(2, &p), j2);
    let t = spectrum_table(3, &p.alpha, &p.nu);
    assert_eq!(t.iter().map(|r| r.2).collect::<Vec<_>>(), vec![1, 3, 5, 7]);
}

#[test]
fn dirac_parameters() {
    let alpha = Scalar::q_pow(-1).div(&Scalar::from_int(2)).unwrap();
    let check = dirac_param_check(&alpha, &dirac_nu(), d2_assumed, 4);
    assert!(check.matches());
    assert_eq!(check.shifted[0], Scalar::qnum(Half(1)).pow(2));
    // [J][J+1] = [J+1/2]² − [1/2]², so ν = 0 reproduces the undeformed square [J+1/2]²
    let plain = dirac_param_check(&alpha, &Scalar::zero(), |j| Scalar::qnum(Half(2 * j as i64 + 1)).pow(2), 4);
    assert!(plain.matches());
    // and the assumed D² spectrum is not [J+1/2]²
    assert_eq!(dirac_param_check(&alpha, &dirac_nu(), |j| Scalar::qnum(Half(2 * j as i64 + 1)).pow(2), 4).first_mismatch, Some(1));
    let generic = dirac_param_check(&Scalar::one(), &Scalar::one(), d2_assumed, 4);
    assert_eq!(generic.first_mismatch, Some(1));
}
