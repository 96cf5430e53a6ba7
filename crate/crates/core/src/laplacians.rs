//! Laplacians on `SU_q(2)` and on the sphere, both as Hodge compositions and as
//! closed-form elements of `U_q(su(2))`, together with the sphere spectrum.

use crate::algebra::AlgElement;
use crate::envelope::{act_left, right_tangent, tangent, Idx, Side, UqElement};
use crate::exterior::{d_alg, Form};
use crate::hodge::{ContractionParams, HodgeError};
use crate::scalars::{Half, Scalar};
use crate::sphere::{as_sphere_form, d_sphere, SphereError, SphereHodge};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaplaceError {
    #[error("argument is not in L_0")]
    NotInL0,
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Su,
    S2,
}

fn vector(side: Side, a: Idx) -> UqElement {
    match side {
        Side::Left => tangent(a),
        Side::Right => right_tangent(a),
    }
}

/// Closed form of the Laplacian as an element of `U_q(su(2))`.
///
/// On `SU_q(2)` this is `α(X_+X_- + q²X_-X_+) + νX_0² + γX_z² + 2εX_0X_z` with `X = L`, and
/// `α(q²R_+R_- + R_-R_+) + …` on the right. On the sphere the `z` terms drop.
pub fn closed_form(side: Side, space: Space, p: &ContractionParams) -> UqElement {
    let v = |a| vector(side, a);
    let q2 = Scalar::q_pow(2);
    let (pm, mp) = (v(Idx::Plus) * v(Idx::Minus), v(Idx::Minus) * v(Idx::Plus));
    let ladder = match side {
        Side::Left => pm + mp.scale(&q2),
        Side::Right => pm.scale(&q2) + mp,
    };
    let mut out = ladder.scale(&p.alpha) + (v(Idx::Zero) * v(Idx::Zero)).scale(&p.nu);
    if space == Space::Su {
        out = out + (v(Idx::Z) * v(Idx::Z)).scale(&p.gamma) + (v(Idx::Zero) * v(Idx::Z)).scale(&(Scalar::from_int(2) * p.eps.clone()));
    }
    out
}

/// `−★ d ★ d x` with the left or right extension of `★`.
pub fn box_su(side: Side, x: &AlgElement, p: &ContractionParams) -> Result<AlgElement, LaplaceError> {
    let star = |f: &Form| match side {
        Side::Left => p.star_l(f),
        Side::Right => p.star_r(f),
    };
    let out = star(&star(&d_alg(x))?.d())?;
    Ok(-out.coeff(0))
}

/// `−Ľ d Ľ d f` (or the `Ř` version) for `f ∈ A(S²_q)`.
pub fn box_s2(side: Side, f: &AlgElement, h: &SphereHodge) -> Result<AlgElement, LaplaceError> {
    if !f.is_in_ln(0) {
        return Err(LaplaceError::NotInL0);
    }
    let hodge = |t| match side {
        Side::Left => h.lhodge(t),
        Side::Right => h.rhodge(t),
    };
    let f = as_sphere_form(Form::from_alg(f.clone()))?;
    let out = hodge(&d_sphere(&hodge(&d_sphere(&f)?))?);
    Ok(-out.form().coeff(0))
}

/// Apply the closed form through the left action.
pub fn box_closed(side: Side, space: Space, x: &AlgElement, p: &ContractionParams) -> AlgElement {
    act_left(&closed_form(side, space, p), x)
}

/// `2qα[J][J+1] + ν[J]²[J+1]²`
pub fn spectrum_s2_with(j: u32, alpha: &Scalar, nu: &Scalar) -> Scalar {
    let x = Scalar::qnum(Half::from_int(j as i64)) * Scalar::qnum(Half::from_int(j as i64 + 1));
    Scalar::from_int(2) * Scalar::q() * alpha.clone() * x.clone() + nu.clone() * x.pow(2)
}

pub fn spectrum_s2(j: u32, p: &ContractionParams) -> Scalar {
    spectrum_s2_with(j, &p.alpha, &p.nu)
}

/// Eigenvalues for `J = 0..=j_max`, each with multiplicity `2J+1`.
pub fn spectrum_table(j_max: u32, alpha: &Scalar, nu: &Scalar) -> Vec<(u32, Scalar, u32)> {
    (0..=j_max).into_par_iter().map(|j| (j, spectrum_s2_with(j, alpha, nu), 2 * j + 1)).collect()
}

/// The `D²` spectrum taken as an input assumption: the closed form that makes
/// `spec(□) = spec(D² − [1/2]²)` hold at `2qα = 1`, `ν = q⁻²(q−q⁻¹)⁴`.
pub fn d2_assumed(j: u32) -> Scalar {
    let alpha = Scalar::q_pow(-1).div(&Scalar::from_int(2)).expect("nonzero");
    let nu = dirac_nu();
    spectrum_s2_with(j, &alpha, &nu) + Scalar::qnum(Half(1)).pow(2)
}

pub fn dirac_nu() -> Scalar {
    Scalar::q_pow(-2) * Scalar::qdiff().pow(4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracCheck {
    /// `spec(□) + [1/2]²` for `J = 0..=j_max`.
    pub shifted: Vec<Scalar>,
    /// First `J` where the comparison fails.
    pub first_mismatch: Option<u32>,
}

impl DiracCheck {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare `spec(□) + [1/2]²` at `(α, ν)` against a `D²` closed form for `J = 0..=j_max`.
pub fn dirac_param_check(alpha: &Scalar, nu: &Scalar, d2: impl Fn(u32) -> Scalar, j_max: u32) -> DiracCheck {
    let half2 = Scalar::qnum(Half(1)).pow(2);
    let shifted: Vec<Scalar> = (0..=j_max).map(|j| spectrum_s2_with(j, alpha, nu) + half2.clone()).collect();
    let first_mismatch = shifted.iter().zip(0..).find(|(v, j)| **v != d2(*j)).map(|(_, j)| j);
    DiracCheck { shifted, first_mismatch }
}

#[cfg(test)]
#[path = "laplacians_tests.rs"]
mod tests;
