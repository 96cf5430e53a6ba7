//! The restricted three-dimensional calculus on the Podleś sphere: grading checks, the
//! sphere volume form and integral, and the left/right sphere Hodge operators.

use crate::algebra::{AlgElement, Monomial};
use crate::envelope::Idx;
use crate::exterior::{to_right, Form, Mask};
use crate::hodge::{ContractionParams, HodgeError};
use crate::scalars::{fresh_root, RootId, Scalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphereError {
    #[error("basis slot {0:#06b} does not belong to the sphere calculus")]
    ForeignSlot(Mask),
    #[error("coefficient on slot {mask:#06b} is not in L_{expected}")]
    WrongGrade { mask: Mask, expected: i64 },
    #[error("det Γ̌ vanishes")]
    DegenerateDet,
    #[error("forms have different degrees")]
    DegreeMismatch,
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

use Idx::{Minus, Plus, Zero};

pub const M_MINUS: Mask = 0b0001;
pub const M_PLUS: Mask = 0b0010;
pub const M_ZERO: Mask = 0b1000;
/// `ω_-∧ω_0`
pub const M_MINUS_ZERO: Mask = 0b1001;
/// `ω_-∧ω_+`
pub const M_MINUS_PLUS: Mask = 0b0011;
/// `ω_+∧ω_0 = −ω_0∧ω_+`
pub const M_PLUS_ZERO: Mask = 0b1010;
/// `ω_-∧ω_+∧ω_0`
pub const M_TOP3: Mask = 0b1011;

/// The `L_n` a left coefficient on `mask` must lie in, if the slot belongs to `Ω(S²_q)`.
/// Right coefficients obey the same pattern.
pub fn slot_grade(mask: Mask) -> Option<i64> {
    match mask {
        0 | M_ZERO | M_MINUS_PLUS | M_TOP3 => Some(0),
        M_MINUS | M_MINUS_ZERO => Some(-2),
        M_PLUS | M_PLUS_ZERO => Some(2),
        _ => None,
    }
}

/// All sphere slots of degree `k`.
pub fn sphere_slots(k: u32) -> Vec<Mask> {
    match k {
        0 => vec![0],
        1 => vec![M_MINUS, M_PLUS, M_ZERO],
        2 => vec![M_MINUS_ZERO, M_MINUS_PLUS, M_PLUS_ZERO],
        3 => vec![M_TOP3],
        _ => vec![],
    }
}

/// A form on `SU_q(2)` certified to lie in `Ω(S²_q)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SphereForm(Form);

impl SphereForm {
    pub fn zero() -> Self {
        SphereForm(Form::zero())
    }

    pub fn form(&self) -> &Form {
        &self.0
    }

    pub fn into_form(self) -> Form {
        self.0
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.degree()
    }
}

/// Accept `theta` iff every left coefficient has the grade its slot mandates.
pub fn as_sphere_form(theta: Form) -> Result<SphereForm, SphereError> {
    for (m, x) in theta.terms() {
        let n = slot_grade(*m).ok_or(SphereError::ForeignSlot(*m))?;
        if !x.is_in_ln(n) {
            return Err(SphereError::WrongGrade { mask: *m, expected: n });
        }
    }
    Ok(SphereForm(theta))
}

/// The ambient differential, re-validated on the way out.
pub fn d_sphere(theta: &SphereForm) -> Result<SphereForm, SphereError> {
    as_sphere_form(theta.0.d())
}

/// `∫ y ω_-∧ω_+∧ω_0 = h(y)/m̌`, zero below degree three.
fn integral_with(theta: &SphereForm, mcheck: &Scalar) -> Result<Scalar, SphereError> {
    let h = theta.0.coeff(M_TOP3).haar();
    Ok(h.div(mcheck).map_err(HodgeError::from)?)
}

/// Sphere Hodge data derived from a contraction map on `SU_q(2)`.
#[derive(Clone, Debug)]
pub struct SphereHodge {
    pub params: ContractionParams,
    pub det_check: Scalar,
    pub mcheck: RootId,
    /// `{ω_-∧ω_0, ω_-∧ω_0}`, `{ω_+∧ω_0, ω_+∧ω_0}`, `{ω_-∧ω_+, ω_-∧ω_+}`, `{μ̌, μ̌}`
    brackets: [Scalar; 4],
}

impl SphereHodge {
    pub fn new(params: ContractionParams) -> Result<Self, SphereError> {
        let chi_z = Form::word(&[Minus, Plus, Zero]);
        let lambda = Scalar::from_int(2) * (Scalar::one() + Scalar::q_pow(2) + Scalar::q_pow(-2));
        let det_check = params.contract_scalar(&chi_z, &chi_z)?.div(&lambda).map_err(HodgeError::from)?;
        if det_check.is_zero() {
            return Err(SphereError::DegenerateDet);
        }
        let square = det_check.inv().map_err(HodgeError::from)?.as_gauss().ok_or(HodgeError::NotReal("det Γ̌"))?;
        let mcheck = fresh_root("mc", square).map_err(HodgeError::from)?;
        let mu = chi_z.scale(&Scalar::root(mcheck));
        let br = |f: &Form| params.bracket(f, f);
        let brackets = [
            br(&Form::basis(M_MINUS_ZERO))?,
            br(&Form::basis(M_PLUS_ZERO))?,
            br(&Form::basis(M_MINUS_PLUS))?,
            br(&mu)?,
        ];
        Ok(SphereHodge { params, det_check, mcheck, brackets })
    }

    pub fn mcheck_scalar(&self) -> Scalar {
        Scalar::root(self.mcheck)
    }

    /// `μ̌ = m̌ ω_-∧ω_+∧ω_0`
    pub fn volume(&self) -> SphereForm {
        SphereForm(Form::basis(M_TOP3).scale(&self.mcheck_scalar()))
    }

    /// `{μ̌, μ̌}`
    pub fn volume_bracket(&self) -> &Scalar {
        &self.brackets[3]
    }

    pub fn integral(&self, theta: &SphereForm) -> Result<Scalar, SphereError> {
        integral_with(theta, &self.mcheck_scalar())
    }

    /// Image of a basis slot under `Ľ` (`left = true`) or `Ř`.
    fn slot_image(&self, mask: Mask, left: bool) -> Form {
        let p = &self.params;
        let mc = self.mcheck_scalar();
        let (q2, qm2) = (Scalar::q_pow(2), Scalar::q_pow(-2));
        let [b_m0, b_p0, b_mp, b_mu] = &self.brackets;
        let (coeff, target) = match mask {
            0 => (mc, M_TOP3),
            M_TOP3 => (b_mu.div(&mc).expect("m̌ ≠ 0"), 0),
            M_MINUS if left => (&mc * &p.alpha, M_MINUS_ZERO),
            M_MINUS => (&mc * &(&q2 * &p.alpha), M_MINUS_ZERO),
            // ω_0∧ω_+ is −1 times the stored slot ω_+∧ω_0
            M_PLUS if left => (-(&mc * &(&q2 * &p.alpha)), M_PLUS_ZERO),
            M_PLUS => (-(&mc * &p.alpha), M_PLUS_ZERO),
            M_ZERO => (-(&mc * &p.nu), M_MINUS_PLUS),
            M_MINUS_ZERO if left => (&mc * b_m0, M_MINUS),
            M_MINUS_ZERO => (&mc * &(&q2 * b_m0), M_MINUS),
            M_PLUS_ZERO if left => (-(&mc * b_p0), M_PLUS),
            M_PLUS_ZERO => (-(&mc * &(&qm2 * b_p0)), M_PLUS),
            M_MINUS_PLUS => (-(&mc * b_mp), M_ZERO),
            _ => unreachable!("validated sphere slot"),
        };
        Form::basis(target).scale(&coeff)
    }

    /// Left `A(S²_q)`-linear Hodge operator `Ľ`.
    pub fn lhodge(&self, theta: &SphereForm) -> SphereForm {
        let mut out = Form::zero();
        for (m, x) in theta.0.terms() {
            out = out + self.slot_image(*m, true).left_mul(x);
        }
        SphereForm(out)
    }

    /// Right `A(S²_q)`-linear Hodge operator `Ř`.
    pub fn rhodge(&self, theta: &SphereForm) -> SphereForm {
        let mut out = Form::zero();
        for (m, y) in to_right(&theta.0).terms() {
            out = out + self.slot_image(*m, false).right_mul(y);
        }
        SphereForm(out)
    }

    /// Both identities `∫ θ*∧Ľθ' = <θ,θ'>^L` and `∫ θ*∧Řθ' = <θ,θ'>^R`.
    pub fn verify_les(&self, theta: &SphereForm, theta2: &SphereForm) -> Result<bool, SphereError> {
        if theta.degree().zip(theta2.degree()).is_some_and(|(a, b)| a != b) {
            return Err(SphereError::DegreeMismatch);
        }
        let lhs = |img: SphereForm| self.integral(&SphereForm(theta.0.conj().wedge(&img.0)));
        let left = lhs(self.lhodge(theta2))? == self.params.inner_l(&theta.0, &theta2.0)?;
        let right = lhs(self.rhodge(theta2))? == self.params.inner_r(&theta.0, &theta2.0)?;
        Ok(left && right)
    }
}

/// Monomial witnesses `x ω_I` for every degree-`k` slot with `deg x ≤ max_deg`.
pub fn witness_family(k: u32, max_deg: u32) -> Vec<SphereForm> {
    let monos = Monomial::up_to_degree(max_deg);
    let mut out = Vec::new();
    for m in sphere_slots(k) {
        let n = slot_grade(m).expect("sphere slot");
        for mono in monos.iter().filter(|x| x.grade() == n) {
            out.push(SphereForm(Form::term(m, AlgElement::monomial(*mono))));
        }
    }
    out
}

/// Non-degeneracy on the witness family: every nonzero degree-`k` witness has a
/// complementary witness with nonzero wedge product.
pub fn nondegeneracy_witness(k: u32, max_deg: u32) -> bool {
    if k > 3 {
        return true;
    }
    let partners = witness_family(3 - k, max_deg);
    witness_family(k, max_deg).iter().all(|theta| partners.iter().any(|t2| !t2.0.wedge(&theta.0).is_zero()))
}

#[cfg(test)]
#[path = "sphere_tests.rs"]
mod tests;
