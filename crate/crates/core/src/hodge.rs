//! Contraction maps on invariant forms, the invariant Hodge operator and its
//! left/right extensions, Haar-state inner products and the integral.

use crate::algebra::AlgElement;
use crate::envelope::Idx;
use crate::exterior::{
    antisymmetrize, form_tensor, mask_degree, masks_of_degree, named_basis, tensor_form, to_right, Form, InvTensor, Mask, NamedForm,
    TOP,
};
use crate::linalg;
use crate::scalars::{fresh_root, Complex, RootId, Scalar, ScalarError};
use num_rational::BigRational;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("ν vanishes, so γ cannot be solved for (ε must be nonzero)")]
    NuZero,
    #[error("det Γ vanishes")]
    DetZero,
    #[error("parameter `{0}` must be a real root-free scalar")]
    NotReal(&'static str),
    #[error("form is not left-invariant")]
    NotInvariant,
    #[error("form is not homogeneous")]
    Inhomogeneous,
    #[error("contraction result is not an exterior form")]
    NotAForm,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Parameters of a hermitian, real contraction map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionParams {
    pub alpha: Scalar,
    pub eps: Scalar,
    pub nu: Scalar,
    pub gamma: Scalar,
    pub det_gamma: Scalar,
    pub m: RootId,
}

impl ContractionParams {
    /// Solve the two reality constraints for `ν` and `γ`.
    pub fn derive(alpha: Scalar, eps: Scalar) -> Result<Self, HodgeError> {
        for (name, x) in [("alpha", &alpha), ("eps", &eps)] {
            if x.as_rational_function().is_none() {
                return Err(HodgeError::NotReal(name));
            }
        }
        let two = Scalar::from_int(2);
        let nu = -((Scalar::q_pow(2) - Scalar::q_pow(-2)) * eps.clone()).div(&two)?;
        if nu.is_zero() {
            return Err(HodgeError::NuZero);
        }
        let num = &two * &eps.pow(2) + Scalar::qdiff().pow(2) * (&two * &Scalar::q_pow(2) * alpha.pow(2) + eps.pow(2));
        let gamma = num.div(&(&two * &nu))?;
        let det_gamma = det_gamma_of(&alpha, &eps, &nu, &gamma);
        if det_gamma.is_zero() {
            return Err(HodgeError::DetZero);
        }
        let square = det_gamma.inv()?.as_gauss().expect("root-free by construction");
        let m = fresh_root("m", square)?;
        Ok(ContractionParams { alpha, eps, nu, gamma, det_gamma, m })
    }

    /// `α = 1/(2q)`, `ν = q⁻²(q−q⁻¹)⁴`, `ε` solved from the first constraint.
    pub fn dirac_point() -> Result<Self, HodgeError> {
        let alpha = Scalar::q_pow(-1).div(&Scalar::from_int(2))?;
        let nu = Scalar::q_pow(-2) * Scalar::qdiff().pow(4);
        let eps = -(Scalar::from_int(2) * nu).div(&(Scalar::q_pow(2) - Scalar::q_pow(-2)))?;
        Self::derive(alpha, eps)
    }

    pub fn m_scalar(&self) -> Scalar {
        Scalar::root(self.m)
    }

    /// `Γ(ω_a, ω_b)`
    pub fn gamma1(&self, a: Idx, b: Idx) -> Scalar {
        gamma_entry(&self.alpha, &self.eps, &self.nu, &self.gamma, a, b)
    }

    /// Both reality constraints, checked exactly.
    pub fn constraints_hold(&self) -> bool {
        let two = Scalar::from_int(2);
        let c1 = &two * &self.nu + (Scalar::q_pow(2) - Scalar::q_pow(-2)) * self.eps.clone();
        let c2 = &two * &(self.eps.pow(2) - &self.gamma * &self.nu)
            + Scalar::qdiff().pow(2) * (&two * &Scalar::q_pow(2) * self.alpha.pow(2) + self.eps.pow(2));
        c1.is_zero() && c2.is_zero()
    }

    /// Orientation audit: `det Γ > 0` at a sample point `s0`.
    pub fn det_positive_at(&self, s0: &BigRational) -> Result<bool, HodgeError> {
        let Complex { re, im } = self.det_gamma.eval(s0)?;
        Ok(im == BigRational::from_integer(0.into()) && re > BigRational::from_integer(0.into()))
    }

    /// The volume form `μ = i m ω_-∧ω_+∧ω_0∧ω_z`.
    pub fn volume(&self) -> Form {
        Form::word(&[Idx::Minus, Idx::Plus, Idx::Zero, Idx::Z]).scale(&(Scalar::i() * self.m_scalar()))
    }

    /// Coefficient `v` with `μ = v ω_-∧ω_+∧ω_z∧ω_0`.
    pub fn volume_coeff(&self) -> Scalar {
        self.volume().coeff(TOP).as_scalar().expect("invariant")
    }
}

fn gamma_entry(alpha: &Scalar, eps: &Scalar, nu: &Scalar, gamma: &Scalar, a: Idx, b: Idx) -> Scalar {
    use Idx::*;
    match (a, b) {
        (Minus, Minus) => alpha.clone(),
        (Plus, Plus) => Scalar::q_pow(2) * alpha.clone(),
        (Zero, Z) | (Z, Zero) => eps.clone(),
        (Zero, Zero) => nu.clone(),
        (Z, Z) => gamma.clone(),
        _ => Scalar::zero(),
    }
}

type GammaMatrix = [[Scalar; 4]; 4];

fn gamma_matrix(alpha: &Scalar, eps: &Scalar, nu: &Scalar, gamma: &Scalar) -> GammaMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| gamma_entry(alpha, eps, nu, gamma, Idx::WEDGE[i], Idx::WEDGE[j])))
}

/// Leg-wise contraction of the first `x.rank()` legs of `y`; antilinear in `x`.
fn gamma_tensor(g: &GammaMatrix, x: &InvTensor, y: &InvTensor) -> InvTensor {
    let k = x.rank();
    let rest = y.rank() - k;
    let block = 4usize.pow(rest as u32);
    let mut out = InvTensor::zero(rest);
    let mut acc = vec![Scalar::zero(); block];
    for (ui, xu) in x.entries().iter().enumerate() {
        if xu.is_zero() {
            continue;
        }
        let u = InvTensor::word_of(k, ui);
        let xc = xu.conj();
        // enumerate partner words w with Π Γ(u_j, w_j) ≠ 0
        let mut partners: Vec<(usize, Scalar)> = vec![(0, xc)];
        for uj in &u {
            let mut next = Vec::new();
            for (w, c) in &partners {
                for (bi, gv) in g[uj.wedge_pos()].iter().enumerate() {
                    if !gv.is_zero() {
                        next.push((w * 4 + bi, c * gv));
                    }
                }
            }
            partners = next;
        }
        for (w, c) in partners {
            for (r, slot) in acc.iter_mut().enumerate() {
                let yv = &y.entries()[w * block + r];
                if !yv.is_zero() {
                    *slot += &c * yv;
                }
            }
        }
    }
    for (r, v) in acc.into_iter().enumerate() {
        if !v.is_zero() {
            out = out.add(&InvTensor::basis(&InvTensor::word_of(rest, r)).scale(&v));
        }
    }
    out
}

fn homogeneous_invariant(f: &Form) -> Result<(BTreeMap<Mask, Scalar>, u32), HodgeError> {
    let coeffs = f.invariant_coeffs().ok_or(HodgeError::NotInvariant)?;
    let k = match f.degree() {
        Some(k) => k,
        None if f.is_zero() => 0,
        None => return Err(HodgeError::Inhomogeneous),
    };
    Ok((coeffs, k))
}

fn det_gamma_of(alpha: &Scalar, eps: &Scalar, nu: &Scalar, gamma: &Scalar) -> Scalar {
    let g = gamma_matrix(alpha, eps, nu, gamma);
    let top = form_tensor(&BTreeMap::from([(TOP, Scalar::one())]), 4);
    let full = gamma_tensor(&g, &top, &top);
    // ω_-∧ω_+∧ω_0∧ω_z = -ω_-∧ω_+∧ω_z∧ω_0; the sign squares away
    full.entries()[0].div(&top_eigenvalue()).expect("nonzero eigenvalue")
}

/// Antisymmetrizer eigenvalue on the top form.
pub fn top_eigenvalue() -> Scalar {
    named_basis().into_iter().find(|n| n.name == "mu").expect("mu is named").eigenvalue
}

/// Eigenvalue of the antisymmetrizer on an invariant homogeneous form, if it is an eigenvector.
pub fn eigenvalue_of(f: &Form) -> Option<Scalar> {
    let (coeffs, k) = homogeneous_invariant(f).ok()?;
    if k < 2 {
        return (!f.is_zero()).then(Scalar::one);
    }
    let t = form_tensor(&coeffs, k);
    let at = antisymmetrize(&t);
    let (i, v) = t.entries().iter().enumerate().find(|(_, v)| !v.is_zero())?;
    let lambda = at.entries()[i].div(v).ok()?;
    (at == t.scale(&lambda)).then_some(lambda)
}

impl ContractionParams {
    fn matrix(&self) -> GammaMatrix {
        gamma_matrix(&self.alpha, &self.eps, &self.nu, &self.gamma)
    }

    /// `Γ(ξ, η)` for invariant forms with `deg ξ ≤ deg η`; antilinear in `ξ`.
    pub fn contract(&self, xi: &Form, eta: &Form) -> Result<Form, HodgeError> {
        let (cx, kx) = homogeneous_invariant(xi)?;
        let (cy, ky) = homogeneous_invariant(eta)?;
        if xi.is_zero() || eta.is_zero() || kx > ky {
            return Ok(Form::zero());
        }
        let t = gamma_tensor(&self.matrix(), &form_tensor(&cx, kx), &form_tensor(&cy, ky));
        let coeffs = tensor_form(&t).ok_or(HodgeError::NotAForm)?;
        Ok(Form::from_invariant(&coeffs))
    }

    /// `Γ(ξ, η)` for forms of equal degree, as a scalar.
    pub fn contract_scalar(&self, xi: &Form, eta: &Form) -> Result<Scalar, HodgeError> {
        Ok(self.contract(xi, eta)?.coeff(0).as_scalar().unwrap_or_default())
    }

    /// Invariant Hodge operator `★ξ = λ_ξ⁻¹ Γ(ξ, μ)*`, extended linearly from the eigenbasis.
    pub fn star_inv(&self, xi: &Form) -> Result<Form, HodgeError> {
        let (coeffs, k) = homogeneous_invariant(xi)?;
        if xi.is_zero() {
            return Ok(Form::zero());
        }
        let mu = self.volume();
        let mut out = Form::zero();
        for (nf, c) in expand_in_eigenbasis(&coeffs, k) {
            let g = self.contract(&nf.form(), &mu)?.conj();
            out = out + g.scale(&c.div(&nf.eigenvalue)?);
        }
        Ok(out)
    }

    /// `★^L(x ω) = x ★(ω)`
    pub fn star_l(&self, theta: &Form) -> Result<Form, HodgeError> {
        let mut out = Form::zero();
        for (m, x) in theta.terms() {
            out = out + self.star_inv(&Form::basis(*m))?.left_mul(x);
        }
        Ok(out)
    }

    /// `★^R(ω x) = ★(ω) x`
    pub fn star_r(&self, theta: &Form) -> Result<Form, HodgeError> {
        let mut out = Form::zero();
        for (m, y) in to_right(theta).terms() {
            out = out + self.star_inv(&Form::basis(*m))?.right_mul(y);
        }
        Ok(out)
    }

    /// `{ξ, ξ'}` defined by `{ξ, ξ'} μ = ξ* ∧ ★ξ'`.
    pub fn bracket(&self, xi: &Form, xi2: &Form) -> Result<Scalar, HodgeError> {
        let top = xi.conj().wedge(&self.star_inv(xi2)?);
        let c = top.coeff(TOP).as_scalar().ok_or(HodgeError::NotInvariant)?;
        Ok(c.div(&self.volume_coeff())?)
    }

    /// `∫ x μ = h(x)`, zero below the top degree.
    pub fn integral(&self, theta: &Form) -> Result<Scalar, HodgeError> {
        let h = theta.coeff(TOP).haar();
        Ok(h.div(&self.volume_coeff())?)
    }

    /// `<x ω, x' ω'>^L = h(x* x') {ω, ω'}`
    pub fn inner_l(&self, eta: &Form, eta2: &Form) -> Result<Scalar, HodgeError> {
        let mut acc = Scalar::zero();
        for (i, x) in eta.terms() {
            for (j, y) in eta2.terms() {
                if mask_degree(*i) != mask_degree(*j) {
                    continue;
                }
                let h = (x.star() * y.clone()).haar();
                if !h.is_zero() {
                    acc += h * self.bracket(&Form::basis(*i), &Form::basis(*j))?;
                }
            }
        }
        Ok(acc)
    }

    /// `<ω x, ω' x'>^R = h(x* x') {ω, ω'}`
    pub fn inner_r(&self, eta: &Form, eta2: &Form) -> Result<Scalar, HodgeError> {
        let (r1, r2) = (to_right(eta), to_right(eta2));
        let mut acc = Scalar::zero();
        for (i, x) in r1.terms() {
            for (j, y) in r2.terms() {
                if mask_degree(*i) != mask_degree(*j) {
                    continue;
                }
                let h = (x.star() * y.clone()).haar();
                if !h.is_zero() {
                    acc += h * self.bracket(&Form::basis(*i), &Form::basis(*j))?;
                }
            }
        }
        Ok(acc)
    }

    /// Matrix of ★ from degree `k` to degree `4 − k` on ordered monomials: `rows[i][j]` is the
    /// coefficient of the `j`-th output monomial in `★` of the `i`-th input monomial.
    pub fn star_matrix(&self, k: u32) -> Result<Vec<Vec<Scalar>>, HodgeError> {
        let outs = masks_of_degree(4 - k);
        masks_of_degree(k)
            .into_iter()
            .map(|m| {
                let s = self.star_inv(&Form::basis(m))?;
                Ok(outs.iter().map(|o| s.coeff(*o).as_scalar().unwrap_or_default()).collect())
            })
            .collect()
    }
}

/// Coefficients of an invariant degree-`k` form in the named eigenbasis.
pub fn expand_in_eigenbasis(coeffs: &BTreeMap<Mask, Scalar>, k: u32) -> Vec<(NamedForm, Scalar)> {
    let basis: Vec<NamedForm> = named_basis().into_iter().filter(|n| n.degree() == k).collect();
    let masks = masks_of_degree(k);
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|n| masks.iter().map(|m| n.coeffs.get(m).cloned().unwrap_or_default()).collect()).collect();
    let target: Vec<Scalar> = masks.iter().map(|m| coeffs.get(m).cloned().unwrap_or_default()).collect();
    let x = linalg::solve_in_span(&cols, &target).expect("named forms span each degree");
    basis.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect()
}

/// Left coefficient of `θ` on the top monomial.
pub fn top_coeff(theta: &Form) -> AlgElement {
    theta.coeff(TOP)
}

#[cfg(test)]
#[path = "hodge_tests.rs"]
mod tests;
