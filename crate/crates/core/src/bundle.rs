//! The quantum principal U(1)-bundle over the Podleś sphere and its line bundles:
//! the 1D calculus on U(1), vertical projections and connection forms, kets and
//! projectors, gauge potentials, covariant derivatives, curvature and gauged Laplacians.

use crate::algebra::{AlgElement, AlgTensor, Monomial};
use crate::envelope::{act_left, right_tangent, tangent, Idx, UqElement};
use crate::exterior::{d_alg, lambda1, Form};
use crate::hodge::HodgeError;
use crate::scalars::{fresh_root, Half, Scalar, ScalarError};
use crate::sphere::{as_sphere_form, SphereError, SphereHodge};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("element is not in L_{0}")]
    NotInLn(i64),
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

// ---------------------------------------------------------------------------
// A(U(1))

/// Laurent polynomial in `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct U1Element(BTreeMap<i64, Scalar>);

impl U1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::z_pow(0)
    }

    pub fn z_pow(j: i64) -> Self {
        Self::term(j, Scalar::one())
    }

    pub fn term(j: i64, x: Scalar) -> Self {
        let mut u = Self::zero();
        u.add_term(j, x);
        u
    }

    pub fn add_term(&mut self, j: i64, x: Scalar) {
        let v = self.0.entry(j).or_default();
        *v += &x;
        if v.is_zero() {
            self.0.remove(&j);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.0.iter()
    }

    pub fn coeff(&self, j: i64) -> Scalar {
        self.0.get(&j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        let mut u = Self::zero();
        for (j, c) in &self.0 {
            u.add_term(*j, c * x);
        }
        u
    }

    pub fn counit(&self) -> Scalar {
        self.0.values().fold(Scalar::zero(), |acc, c| acc + c.clone())
    }

    pub fn antipode(&self) -> Self {
        U1Element(self.0.iter().map(|(j, c)| (-j, c.clone())).collect())
    }

    /// `z^j ↦ z^j ⊗ z^j`, as a list of legs.
    pub fn coproduct(&self) -> Vec<(Scalar, i64, i64)> {
        self.0.iter().map(|(j, c)| (c.clone(), *j, *j)).collect()
    }

    /// `K^m ▷ z^j = q^{-mj/2} z^j`
    fn k_act(&self, m: i64) -> Self {
        U1Element(self.0.iter().map(|(j, c)| (*j, c * &Scalar::s_pow(-m * j))).collect())
    }

    /// `X ▷ u` with `X = L_z = (K⁻² − 1)/(q − q⁻¹)`.
    pub fn x_act(&self) -> Self {
        (self.k_act(-2) - self.clone()).scale(&Scalar::qdiff().inv().expect("nonzero"))
    }

    /// Class in `ker ε / Q`, as the multiple of `[z − 1]`; `None` off `ker ε`.
    pub fn class(&self) -> Option<Scalar> {
        if !self.counit().is_zero() {
            return None;
        }
        // z^j − 1 telescopes into φ(k) = z^k(z − 1), each of class q^k
        let mut acc = Scalar::zero();
        for (j, c) in &self.0 {
            let sum = match j.signum() {
                1 => (0..*j).map(Scalar::q_pow).fold(Scalar::zero(), |a, b| a + b),
                -1 => -(*j..0).map(Scalar::q_pow).fold(Scalar::zero(), |a, b| a + b),
                _ => Scalar::zero(),
            };
            acc += &(c * &sum);
        }
        Some(acc)
    }
}

impl Add for U1Element {
    type Output = U1Element;
    fn add(mut self, o: U1Element) -> U1Element {
        for (j, c) in o.0 {
            self.add_term(j, c);
        }
        self
    }
}

impl Neg for U1Element {
    type Output = U1Element;
    fn neg(self) -> U1Element {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Sub for U1Element {
    type Output = U1Element;
    fn sub(self, o: U1Element) -> U1Element {
        self + (-o)
    }
}

impl Mul for &U1Element {
    type Output = U1Element;
    fn mul(self, o: &U1Element) -> U1Element {
        let mut u = U1Element::zero();
        for (i, a) in &self.0 {
            for (j, b) in &o.0 {
                u.add_term(i + j, a * b);
            }
        }
        u
    }
}

/// Class of `φ(j) = z^j(z − 1)`: `q^j [z − 1]`.
pub fn q_ideal_proj(j: i64) -> Scalar {
    (&U1Element::z_pow(j + 1) - &U1Element::z_pow(j)).class().expect("in ker ε")
}

impl Sub for &U1Element {
    type Output = U1Element;
    fn sub(self, o: &U1Element) -> U1Element {
        self.clone() - o.clone()
    }
}

/// A 1-form `u θ` on U(1), coefficient on the left.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct U1Form(pub U1Element);

impl U1Form {
    /// `(u θ) v = u (θ v)` with `θ z^j = q^j z^j θ`.
    pub fn right_mul(&self, v: &U1Element) -> U1Form {
        let shifted = U1Element(v.0.iter().map(|(j, c)| (*j, c * &Scalar::q_pow(*j))).collect());
        U1Form(&self.0 * &shifted)
    }

    pub fn left_mul(&self, v: &U1Element) -> U1Form {
        U1Form(v * &self.0)
    }
}

impl Add for U1Form {
    type Output = U1Form;
    fn add(self, o: U1Form) -> U1Form {
        U1Form(self.0 + o.0)
    }
}

/// `du = (X ▷ u) θ`
pub fn u1_d(u: &U1Element) -> U1Form {
    U1Form(u.x_act())
}

// ---------------------------------------------------------------------------
// Hopf projection and coaction

/// Hopf projection `π(a) = z`, `π(a*) = z*`, `π(c) = π(c*) = 0`.
pub fn pi_proj(x: &AlgElement) -> U1Element {
    let mut u = U1Element::zero();
    for (m, c) in x.terms() {
        if m.ec == 0 && m.ecs == 0 {
            u.add_term(m.apow as i64, c.clone());
        }
    }
    u
}

/// `δ_R = (id ⊗ π)Δ`, as `z`-power ↦ left leg.
pub fn coact(x: &AlgElement) -> BTreeMap<i64, AlgElement> {
    let mut out: BTreeMap<i64, AlgElement> = BTreeMap::new();
    for ((l, r), c) in x.coproduct().terms() {
        for (j, zc) in pi_proj(&AlgElement::monomial(*r)).terms() {
            let e = out.entry(*j).or_default();
            e.add_term(*l, c * zc);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `x δy = x ⊗ y − xy ⊗ 1` in the universal calculus.
pub fn universal(x: &AlgElement, y: &AlgElement) -> AlgTensor {
    AlgTensor::simple(x, y).sub(&AlgTensor::simple(&x.mul_ref(y), &AlgElement::one()))
}

/// Image of a universal form in `Ω¹(SU_q(2))`: `x ⊗ y ↦ x dy`.
pub fn universal_to_form(t: &AlgTensor) -> Form {
    let mut f = Form::zero();
    for ((l, r), c) in t.terms() {
        f = f + d_alg(&AlgElement::monomial(*r)).left_mul(&AlgElement::term(*l, c.clone()));
    }
    f
}

/// Canonical map `χ = (m ⊗ id)(id ⊗ δ_R)`, as `z`-power ↦ element of `A`.
pub fn chi(t: &AlgTensor) -> BTreeMap<i64, AlgElement> {
    let mut out: BTreeMap<i64, AlgElement> = BTreeMap::new();
    for ((l, r), c) in t.terms() {
        let left = AlgElement::term(*l, c.clone());
        for (j, y) in coact(&AlgElement::monomial(*r)) {
            let e = out.entry(j).or_default();
            *e = e.add_ref(&left.mul_ref(&y));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Universal representatives of the invariant 1-forms.
pub fn universal_rep(a: Idx) -> AlgTensor {
    let (ga, gas, gc, gcs) = (AlgElement::a(), AlgElement::astar(), AlgElement::c(), AlgElement::cstar());
    let q = Scalar::q();
    let q2 = Scalar::q_pow(2);
    let u = universal;
    match a {
        Idx::Plus => u(&ga, &gc).sub(&u(&gc, &ga).scale(&q)),
        Idx::Minus => u(&gcs, &gas).sub(&u(&gas, &gcs).scale(&q)),
        Idx::Z => u(&gas, &ga).add(&u(&gcs, &gc)).sub(&u(&ga, &gas).add(&u(&gc, &gcs).scale(&q2))),
        Idx::Zero => {
            let inner = u(&gas, &ga).add(&u(&gcs, &gc)).add(&u(&ga, &gas).add(&u(&gc, &gcs).scale(&q2)).scale(&q));
            let norm = ((Scalar::one() + q) * lambda1()).inv().expect("nonzero");
            inner.scale(&norm)
        }
    }
}

/// `∼(ω_a)` as the multiple of `1 ⊗ [z − 1]`, computed through `χ` and the class map.
pub fn tilde(a: Idx) -> Scalar {
    let image = chi(&universal_rep(a));
    let mut u = U1Element::zero();
    for (j, x) in &image {
        let c = x.as_scalar().expect("χ of an invariant form has scalar left leg");
        u.add_term(*j, c);
    }
    u.class().expect("χ lands in A ⊗ ker ε")
}

// ---------------------------------------------------------------------------
// Connections

/// Vertical projection `Π(Σ x_a ω_a) = x_z (ω_z + a)`.
pub fn vertical_proj(a_form: &Form, theta: &Form) -> Form {
    let xz = theta.coeff(1 << Idx::Z.wedge_pos());
    (Form::omega(Idx::Z) + a_form.clone()).left_mul(&xz)
}

/// `σ̃(1 ⊗ [z^j(z − 1)])`: the class is `q^j [z − 1]`, and `σ̃(1 ⊗ [z − 1]) = (1 + q⁻¹)⁻¹(ω_z + a)`
/// so that `Π(ω_z) = σ̃(∼ω_z) = ω_z + a`.
pub fn sigma_tilde(j: i64, a_form: &Form) -> Form {
    let norm = (Scalar::one() + Scalar::q_pow(-1)).inv().expect("nonzero");
    (Form::omega(Idx::Z) + a_form.clone()).scale(&(q_ideal_proj(j) * norm))
}

/// `ω(z^n) = q^{n/2}[n/2](ω_z + a)`
pub fn connection_form(n: i64, a_form: &Form) -> Form {
    (Form::omega(Idx::Z) + a_form.clone()).scale(&(Scalar::s_pow(n) * Scalar::qnum(Half(n))))
}

/// `𝔇φ = dφ − φ ω(z^{−n})` for `φ ∈ L_n`.
pub fn cov_d_total(phi: &AlgElement, n: i64, a_form: &Form) -> Result<Form, BundleError> {
    if !phi.is_in_ln(n) {
        return Err(BundleError::NotInLn(n));
    }
    Ok(d_alg(phi) - connection_form(-n, a_form).left_mul(phi))
}

// ---------------------------------------------------------------------------
// Line bundles

/// `|Ψ^(n)>` with entries `√α_{n,μ} c^{|n|−μ} a^μ` (`n ≤ 0`) or `√β_{n,μ} c*^μ a*^{n−μ}` (`n ≥ 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ket {
    pub n: i64,
    pub entries: Vec<AlgElement>,
}

fn q2(k: i64) -> Scalar {
    Scalar::q_pow(2 * k)
}

/// Normalization squares `α_{n,μ}` or `β_{n,μ}`.
pub fn ket_square(n: i64, mu: i64) -> Scalar {
    let one = Scalar::one();
    let ratio = |num: Scalar, den: Scalar| num.div(&den).expect("nonzero q-factor");
    if n <= 0 {
        let m = n.abs();
        (0..m - mu).fold(one.clone(), |acc, j| acc * ratio(&one - &q2(m - j), &one - &q2(j + 1)))
    } else {
        (0..mu).fold(q2(mu), |acc, j| acc * ratio(&one - &q2(-(n - j)), &one - &q2(-(j + 1))))
    }
}

/// One registered root per ket entry, even when the square is an exact `s`-power, so that
/// every projector entry carries the even root monomial `r_μ r_ν`.
fn sqrt_scalar(name: &str, x: &Scalar) -> Result<Scalar, BundleError> {
    let g = x.as_gauss().ok_or(HodgeError::NotReal("ket normalization"))?;
    Ok(Scalar::root(fresh_root(name, g)?))
}

pub fn ket(n: i64) -> Result<Ket, BundleError> {
    let m = n.abs();
    let mut entries = Vec::with_capacity(m as usize + 1);
    for mu in 0..=m {
        let tag = if n < 0 { format!("rm{}_{}", m, mu) } else { format!("rp{}_{}", m, mu) };
        let r = sqrt_scalar(&tag, &ket_square(n, mu))?;
        let mono = if n <= 0 {
            AlgElement::c().pow((m - mu) as u32) * AlgElement::a().pow(mu as u32)
        } else {
            AlgElement::cstar().pow(mu as u32) * AlgElement::astar().pow((n - mu) as u32)
        };
        entries.push(mono.scale(&r));
    }
    Ok(Ket { n, entries })
}

impl Ket {
    /// `<Ψ|Ψ> = Σ Ψ_μ* Ψ_μ`
    pub fn norm(&self) -> AlgElement {
        self.entries.iter().fold(AlgElement::zero(), |acc, e| acc + e.star() * e.clone())
    }

    /// `p_{μν} = Ψ_μ Ψ_ν*`
    pub fn projector(&self) -> Vec<Vec<AlgElement>> {
        self.entries.iter().map(|x| self.entries.iter().map(|y| x.mul_ref(&y.star())).collect()).collect()
    }

    /// `<Ψ|dΨ> = Σ Ψ_μ* dΨ_μ`
    pub fn bra_d_ket(&self) -> Form {
        self.entries.iter().fold(Form::zero(), |acc, e| acc + d_alg(e).left_mul(&e.star()))
    }

    /// `<σ_φ| = φ <Ψ|`
    pub fn bra_of(&self, phi: &AlgElement) -> Vec<Form> {
        self.entries.iter().map(|e| Form::from_alg(phi.mul_ref(&e.star()))).collect()
    }

    /// `<σ|Ψ>`: forms times the ket entries on the right.
    pub fn contract(&self, row: &[Form]) -> Form {
        row.iter().zip(&self.entries).fold(Form::zero(), |acc, (f, e)| acc + f.right_mul(e))
    }
}

/// Matrix product of square matrices over `A`.
pub fn mat_mul(x: &[Vec<AlgElement>], y: &[Vec<AlgElement>]) -> Vec<Vec<AlgElement>> {
    let k = y.len();
    x.iter()
        .map(|row| (0..k).map(|j| (0..k).fold(AlgElement::zero(), |acc, l| acc + row[l].mul_ref(&y[l][j]))).collect())
        .collect()
}

/// Conjugate transpose.
pub fn dagger(x: &[Vec<AlgElement>]) -> Vec<Vec<AlgElement>> {
    let k = x.len();
    (0..k).map(|i| (0..k).map(|j| x[j][i].star()).collect()).collect()
}

/// Gauge data for `a^(n) = sgauge ω_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeData {
    pub n: i64,
    pub sgauge: Scalar,
    pub xi: Scalar,
    pub lambda: Scalar,
}

/// `ξ_n = −q^{−n/2}[n/2]`
pub fn xi_n(n: i64) -> Scalar {
    -(Scalar::s_pow(-n) * Scalar::qnum(Half(n)))
}

/// `λ_n = [|n|/2][|n|/2 + 1]`
pub fn lambda_n(n: i64) -> Scalar {
    let m = n.abs();
    Scalar::qnum(Half(m)) * Scalar::qnum(Half(m + 2))
}

/// `[|n|/2][1 − |n|/2]`
pub fn shift_n(n: i64) -> Scalar {
    let m = n.abs();
    Scalar::qnum(Half(m)) * Scalar::qnum(Half(2 - m))
}

/// Gauge value at which the gauged Laplacian factorizes through the sphere one: `[|n|/2][1 − |n|/2]`.
pub fn sgauge_critical(n: i64) -> Scalar {
    shift_n(n)
}

/// `q^n [|n|/2][1 − |n|/2]`, the critical value in the `s q^{-n}` parametrization.
pub fn sgauge_critical_scaled(n: i64) -> Scalar {
    Scalar::q_pow(n) * shift_n(n)
}

impl GaugeData {
    pub fn new(n: i64, sgauge: Scalar) -> Self {
        GaugeData { n, sgauge, xi: xi_n(n), lambda: lambda_n(n) }
    }

    /// `ϖ = ξ_n ω_z + (λ_n − sgauge) ω_0`
    pub fn varpi(&self) -> Form {
        Form::omega(Idx::Z).scale(&self.xi) + Form::omega(Idx::Zero).scale(&(&self.lambda - &self.sgauge))
    }

    pub fn a_form(&self) -> Form {
        Form::omega(Idx::Zero).scale(&self.sgauge)
    }

    /// `dϖ + ϖ∧ϖ`
    pub fn curvature_form(&self) -> Form {
        let w = self.varpi();
        w.d() + w.wedge(&w)
    }

    /// Coefficient `c` with `dϖ + ϖ∧ϖ = c ω_+∧ω_-`; the curvature is `F = −c |Ψ>ω_+∧ω_-<Ψ|`.
    pub fn curvature(&self) -> Scalar {
        let unit = Form::word(&[Idx::Plus, Idx::Minus]);
        let (m, u) = unit.terms().next().map(|(m, u)| (*m, u.as_scalar().expect("invariant"))).expect("nonzero");
        let f = self.curvature_form();
        debug_assert!(f.terms().all(|(k, _)| *k == m));
        f.coeff(m).as_scalar().unwrap_or_default().div(&u).expect("nonzero")
    }

    /// `Dφ = dφ − φ ϖ` for `φ ∈ L_n`.
    pub fn cov_d(&self, phi: &AlgElement) -> Result<Form, BundleError> {
        if !phi.is_in_ln(self.n) {
            return Err(BundleError::NotInLn(self.n));
        }
        Ok(d_alg(phi) - self.varpi().left_mul(phi))
    }

    /// `∇<σ| = (d<σ|) p + (−1)^k <σ| A` on a row of `k`-forms.
    fn nabla(&self, ket: &Ket, p: &[Vec<AlgElement>], row: &[Form], k: u32) -> Vec<Form> {
        let drow: Vec<Form> = row.iter().map(Form::d).collect();
        let sign = if k.is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
        let gauge = ket.contract(row).wedge(&self.a_form()).scale(&sign);
        (0..row.len())
            .map(|mu| {
                let proj = drow.iter().zip(p).fold(Form::zero(), |acc, (f, prow)| acc + f.right_mul(&prow[mu]));
                proj + gauge.right_mul(&ket.entries[mu].star())
            })
            .collect()
    }

    /// `□φ = −(★^ℛ∇★^ℛ∇ <σ_φ|)|Ψ>` with `★^ℛ` acting as `Ř` on the form factor.
    pub fn gauged_laplacian(&self, phi: &AlgElement, h: &SphereHodge) -> Result<AlgElement, BundleError> {
        if !phi.is_in_ln(self.n) {
            return Err(BundleError::NotInLn(self.n));
        }
        let ket = ket(self.n)?;
        let p = ket.projector();
        let star = |row: Vec<Form>| -> Result<Vec<Form>, BundleError> {
            row.into_iter().map(|f| Ok(h.rhodge(&as_sphere_form(f)?).into_form())).collect()
        };
        let row = ket.bra_of(phi);
        let row = star(self.nabla(&ket, &p, &row, 0))?;
        let row = star(self.nabla(&ket, &p, &row, 2))?;
        Ok(-ket.contract(&row).coeff(0))
    }

    /// `q^{−2n}{α(q²R_+R_- + R_-R_+) + ν(R_0 + sgauge − [|n|/2][1−|n|/2])²}`, the action of
    /// [`GaugeData::gauged_laplacian`] on `L_n`.
    pub fn laplacian_closed_form(&self, alpha: &Scalar, nu: &Scalar) -> UqElement {
        gauged_closed_form(self.n, &self.sgauge, alpha, nu)
    }

    /// Same shape with the gauge entering as `sgauge q^{−n}`. Agrees with the composition
    /// only after `sgauge ↦ q^n sgauge`, so for `n ≠ 0` it is a different operator.
    pub fn laplacian_closed_form_scaled(&self, alpha: &Scalar, nu: &Scalar) -> UqElement {
        gauged_closed_form(self.n, &(&self.sgauge * &Scalar::q_pow(-self.n)), alpha, nu)
    }
}

fn gauged_closed_form(n: i64, s: &Scalar, alpha: &Scalar, nu: &Scalar) -> UqElement {
    let r = right_tangent;
    let ladder = (r(Idx::Plus) * r(Idx::Minus)).scale(&Scalar::q_pow(2)) + r(Idx::Minus) * r(Idx::Plus);
    let r0 = r(Idx::Zero) + UqElement::from_scalar(s - &shift_n(n));
    (ladder.scale(alpha) + (r0.clone() * r0).scale(nu)).scale(&Scalar::q_pow(-2 * n))
}

/// `(2qα L_0 K² + ν L_0²) K⁻⁴ − qα (q+q⁻¹)(K−K⁻¹)²/(q−q⁻¹)² K⁻²`
pub fn laplacian_operator_form(alpha: &Scalar, nu: &Scalar) -> UqElement {
    let l0 = tangent(Idx::Zero);
    let k = UqElement::k_pow;
    let two_q_alpha = Scalar::from_int(2) * Scalar::q() * alpha.clone();
    let main = ((l0.clone() * k(2)).scale(&two_q_alpha) + (l0.clone() * l0).scale(nu)) * k(-4);
    let kk = k(1) - k(-1);
    let coeff = Scalar::q() * alpha.clone() * (Scalar::q() + Scalar::q_pow(-1)) * Scalar::qdiff().pow(2).inv().expect("nonzero");
    main - (kk.clone() * kk * k(-2)).scale(&coeff)
}

/// `(X ▷ <σ|)|Ψ>` for a vector `X`, entrywise on `<σ_φ|`.
pub fn act_on_bra(x: &UqElement, ket: &Ket, phi: &AlgElement) -> AlgElement {
    ket.entries.iter().fold(AlgElement::zero(), |acc, e| acc + act_left(x, &phi.mul_ref(&e.star())).mul_ref(e))
}

/// Monomials `x` with `x ∈ L_n` up to a degree.
pub fn graded_monomials(n: i64, deg: u32) -> Vec<AlgElement> {
    Monomial::up_to_degree(deg).into_iter().filter(|m| m.grade() == n).map(AlgElement::monomial).collect()
}

#[cfg(test)]
#[path = "bundle_tests.rs"]
mod tests;
