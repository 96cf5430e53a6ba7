//! U_q(su(2)) in the PBW basis `F^i K^m E^j`, its Hopf structure, the
//! canonical left and right actions on A(SU_q(2)), the dual pairing, and the
//! quantum tangent vectors of the 4D+ calculus.

use crate::algebra::{alg_ops, AlgElement, AlgebraError, Gen, Monomial};
use crate::scalars::{Half, Scalar};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

/// PBW monomial `F^f K^k E^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pbw {
    pub f: u32,
    pub k: i32,
    pub e: u32,
}

impl Pbw {
    pub const ONE: Pbw = Pbw { f: 0, k: 0, e: 0 };

    pub fn degree(&self) -> u32 {
        self.f + self.e + self.k.unsigned_abs()
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: &str, p: i64| match p {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, p)),
        };
        push("F", self.f as i64);
        push("K", self.k as i64);
        push("E", self.e as i64);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Element of U_q(su(2)).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UqElement {
    terms: BTreeMap<Pbw, Scalar>,
}

impl fmt::Debug for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({})*{}", c, m)).collect();
        f.write_str(&parts.join(" + "))
    }
}

// E^j F^k in PBW form, shared across threads.
static EF_CACHE: Lazy<RwLock<HashMap<(u32, u32), UqElement>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// `E^j F^k` rewritten to PBW order.
fn e_pow_f_pow(j: u32, k: u32) -> UqElement {
    if j == 0 || k == 0 {
        return UqElement::monomial(Pbw { f: k, k: 0, e: j });
    }
    if let Some(v) = EF_CACHE.read().unwrap().get(&(j, k)) {
        return v.clone();
    }
    // E^j F^k = (E^{j-1} F^k) E + (E^{j-1} F^{k-1}) P_k(K), with
    // P_k = sum_{r<k} (q^{-2r} K^2 - q^{2r} K^-2) / (q - q^-1)
    let inv_qd = Scalar::qdiff().inv().expect("q - 1/q is invertible");
    let mut p = UqElement::zero();
    for r in 0..k as i64 {
        p.add_term(Pbw { k: 2, ..Pbw::ONE }, &Scalar::q_pow(-2 * r) * &inv_qd);
        p.add_term(Pbw { k: -2, ..Pbw::ONE }, -(&Scalar::q_pow(2 * r) * &inv_qd));
    }
    let first = e_pow_f_pow(j - 1, k).mul_ref(&UqElement::e());
    let second = e_pow_f_pow(j - 1, k - 1).mul_ref(&p);
    let out = first + second;
    EF_CACHE.write().unwrap().insert((j, k), out.clone());
    out
}

/// Product of two PBW monomials.
pub fn pbw_product(m1: Pbw, m2: Pbw) -> Vec<(Pbw, Scalar)> {
    if m1.e == 0 || m2.f == 0 {
        // K^m F^i = q^{-mi} F^i K^m and E^j K^n = q^{-jn} K^n E^j
        let x = Scalar::q_pow(-(m1.k as i64) * m2.f as i64 - m1.e as i64 * m2.k as i64);
        return vec![(Pbw { f: m1.f + m2.f, k: m1.k + m2.k, e: m1.e + m2.e }, x)];
    }
    let mid = e_pow_f_pow(m1.e, m2.f);
    let mut out = Vec::with_capacity(mid.terms.len());
    for (p, c) in &mid.terms {
        let x = Scalar::q_pow(-(m1.k as i64) * p.f as i64 - p.e as i64 * m2.k as i64);
        out.push((Pbw { f: m1.f + p.f, k: m1.k + p.k + m2.k, e: p.e + m2.e }, c * &x));
    }
    out
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Pbw::ONE)
    }

    pub fn from_scalar(x: Scalar) -> Self {
        let mut u = Self::zero();
        u.add_term(Pbw::ONE, x);
        u
    }

    pub fn monomial(m: Pbw) -> Self {
        let mut u = Self::zero();
        u.add_term(m, Scalar::one());
        u
    }

    pub fn e() -> Self {
        Self::monomial(Pbw { e: 1, ..Pbw::ONE })
    }

    pub fn f() -> Self {
        Self::monomial(Pbw { f: 1, ..Pbw::ONE })
    }

    /// `K^m`
    pub fn k_pow(m: i32) -> Self {
        Self::monomial(Pbw { k: m, ..Pbw::ONE })
    }

    pub fn k() -> Self {
        Self::k_pow(1)
    }

    pub fn add_term(&mut self, m: Pbw, x: Scalar) {
        if x.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &x;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, x);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pbw, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Pbw) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, c * x);
        }
        r
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn neg_ref(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                for (m, x) in pbw_product(*m1, *m2) {
                    r.add_term(m, &c * &x);
                }
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul_ref(self))
    }

    fn map_monomials(&self, on: impl Fn(Pbw) -> UqElement) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r = r + on(*m).scale(c);
        }
        r
    }

    pub fn counit(&self) -> Scalar {
        let mut s = Scalar::zero();
        for (m, c) in &self.terms {
            if m.f == 0 && m.e == 0 {
                s += c;
            }
        }
        s
    }

    /// Anti-multiplicative antipode: `S(K) = K^-1`, `S(E) = -qE`, `S(F) = -q^-1 F`.
    pub fn antipode(&self) -> Self {
        self.map_monomials(|m| {
            let e = UqElement::e().scale(&-Scalar::q()).pow(m.e);
            let f = UqElement::f().scale(&-Scalar::q_pow(-1)).pow(m.f);
            e.mul_ref(&UqElement::k_pow(-m.k)).mul_ref(&f)
        })
    }

    /// Inverse antipode: `S^-1(E) = -q^-1 E`, `S^-1(F) = -qF`.
    pub fn antipode_inv(&self) -> Self {
        self.map_monomials(|m| {
            let e = UqElement::e().scale(&-Scalar::q_pow(-1)).pow(m.e);
            let f = UqElement::f().scale(&-Scalar::q()).pow(m.f);
            e.mul_ref(&UqElement::k_pow(-m.k)).mul_ref(&f)
        })
    }

    /// Antilinear anti-involution with `K* = K`, `E* = F`.
    pub fn star(&self) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            r.add_term(Pbw { f: m.e, k: m.k, e: m.f }, c.conj());
        }
        r
    }

    pub fn coproduct(&self) -> UqTensor {
        let mut r = UqTensor::zero();
        for (m, c) in &self.terms {
            let mut t = UqTensor::unit();
            for _ in 0..m.f {
                t = t.mul(&UqTensor::coproduct_f());
            }
            t = t.mul(&UqTensor::simple(&UqElement::k_pow(m.k), &UqElement::k_pow(m.k)));
            for _ in 0..m.e {
                t = t.mul(&UqTensor::coproduct_e());
            }
            r = r.add(&t.scale(c));
        }
        r
    }
}

alg_ops!(UqElement);

/// Element of U ⊗ U.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct UqTensor {
    terms: BTreeMap<(Pbw, Pbw), Scalar>,
}

impl UqTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::simple(&UqElement::one(), &UqElement::one())
    }

    pub fn simple(x: &UqElement, y: &UqElement) -> Self {
        let mut t = Self::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                t.add_term(*m1, *m2, c1 * c2);
            }
        }
        t
    }

    fn coproduct_e() -> Self {
        Self::simple(&UqElement::e(), &UqElement::k()).add(&Self::simple(&UqElement::k_pow(-1), &UqElement::e()))
    }

    fn coproduct_f() -> Self {
        Self::simple(&UqElement::f(), &UqElement::k()).add(&Self::simple(&UqElement::k_pow(-1), &UqElement::f()))
    }

    pub fn add_term(&mut self, l: Pbw, r: Pbw, x: Scalar) {
        if x.is_zero() {
            return;
        }
        let k = (l, r);
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += &x;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, x);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Pbw, Pbw), &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((l, m), c) in &o.terms {
            r.add_term(*l, *m, c.clone());
        }
        r
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        let mut r = Self::zero();
        for ((l, m), c) in &self.terms {
            r.add_term(*l, *m, c * x);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &o.terms {
                let c = c1 * c2;
                for (lm, lx) in pbw_product(*l1, *l2) {
                    for (rm, rx) in pbw_product(*r1, *r2) {
                        r.add_term(lm, rm, &c * &(&lx * &rx));
                    }
                }
            }
        }
        r
    }
}

/// Quantum Casimir `(qK^2 - 2 + q^-1 K^-2)/(q - q^-1)^2 + FE - 1/4`.
pub fn casimir() -> UqElement {
    let d2 = Scalar::qdiff().pow(2).inv().expect("nonzero");
    let mut u = UqElement::zero();
    u.add_term(Pbw { k: 2, ..Pbw::ONE }, &Scalar::q() * &d2);
    u.add_term(Pbw { k: -2, ..Pbw::ONE }, &Scalar::q_pow(-1) * &d2);
    u.add_term(Pbw::ONE, &Scalar::from_int(-2) * &d2 - Scalar::from_ratio(1, 4));
    u.add_term(Pbw { f: 1, k: 0, e: 1 }, Scalar::one());
    u
}

// ---------------------------------------------------------------------------
// Actions

/// Which action of U_q(su(2)) on A(SU_q(2)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

fn qn(s: u32) -> Scalar {
    Scalar::qnum(Half::from_int(s as i64))
}

fn gpow(g: Gen, s: u32) -> AlgElement {
    AlgElement::gen(g).pow(s)
}

/// Grade read by `K` on each side: `K ▷ x = q^{g/2} x`, `x ◁ K = q^{g'/2} x`.
fn k_grade(side: Side, m: &Monomial) -> i64 {
    let (ec, ecs) = (m.ec as i64, m.ecs as i64);
    match side {
        Side::Left => -(m.apow as i64) - ec + ecs,
        Side::Right => -(m.apow as i64) + ec - ecs,
    }
}

/// `E` or `F` acting on a pure power `g^s` (tables of the canonical actions).
fn raise_lower_on_power(side: Side, is_e: bool, g: Gen, s: u32) -> AlgElement {
    if s == 0 {
        return AlgElement::zero();
    }
    let si = s as i64;
    let c = |sp: i64| Scalar::s_pow(sp) * qn(s);
    use Gen::*;
    match (side, is_e, g) {
        (Side::Left, true, A) => (gpow(A, s - 1) * AlgElement::cstar()).scale(&-c(3 - si)),
        (Side::Left, true, C) => (gpow(C, s - 1) * AlgElement::astar()).scale(&c(1 - si)),
        (Side::Left, false, AStar) => (AlgElement::c() * gpow(AStar, s - 1)).scale(&c(1 - si)),
        (Side::Left, false, CStar) => (AlgElement::a() * gpow(CStar, s - 1)).scale(&-c(-1 - si)),
        (Side::Right, true, AStar) => (AlgElement::cstar() * gpow(AStar, s - 1)).scale(&-c(3 - si)),
        (Side::Right, true, C) => (gpow(C, s - 1) * AlgElement::a()).scale(&c(si - 1)),
        (Side::Right, false, A) => (AlgElement::c() * gpow(A, s - 1)).scale(&c(si - 1)),
        (Side::Right, false, CStar) => (AlgElement::astar() * gpow(CStar, s - 1)).scale(&-c(si - 3)),
        _ => AlgElement::zero(),
    }
}

static GEN_ACTION_CACHE: Lazy<RwLock<HashMap<(Side, bool, Monomial), AlgElement>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `E` or `F` on a normal-ordered monomial, through the twisted Leibniz rule
/// of `ΔE = E⊗K + K^-1⊗E` (same shape for `F`).
fn raise_lower_on_monomial(side: Side, is_e: bool, m: Monomial) -> AlgElement {
    if let Some(v) = GEN_ACTION_CACHE.read().unwrap().get(&(side, is_e, m)) {
        return v.clone();
    }
    let factors: Vec<(Gen, u32)> = [
        (if m.apow >= 0 { Gen::A } else { Gen::AStar }, m.apow.unsigned_abs()),
        (Gen::C, m.ec),
        (Gen::CStar, m.ecs),
    ]
    .into_iter()
    .filter(|(_, p)| *p > 0)
    .collect();
    let k_on = |g: Gen, p: u32, sign: i64| {
        let mono = AlgElement::gen(g).pow(p);
        let grade = k_grade(side, &Monomial::gen(g)) * p as i64;
        mono.scale(&Scalar::s_pow(sign * grade))
    };
    let mut out = AlgElement::zero();
    for (i, &(g, p)) in factors.iter().enumerate() {
        let hit = raise_lower_on_power(side, is_e, g, p);
        if hit.is_zero() {
            continue;
        }
        let mut term = AlgElement::one();
        for (j, &(g2, p2)) in factors.iter().enumerate() {
            term = match j.cmp(&i) {
                std::cmp::Ordering::Less => term * k_on(g2, p2, -1),
                std::cmp::Ordering::Equal => term * hit.clone(),
                std::cmp::Ordering::Greater => term * k_on(g2, p2, 1),
            };
        }
        out = out + term;
    }
    GEN_ACTION_CACHE.write().unwrap().insert((side, is_e, m), out.clone());
    out
}

fn raise_lower(side: Side, is_e: bool, x: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (m, c) in x.terms() {
        out = out + raise_lower_on_monomial(side, is_e, *m).scale(c);
    }
    out
}

fn k_act(side: Side, kpow: i32, x: &AlgElement) -> AlgElement {
    if kpow == 0 {
        return x.clone();
    }
    AlgElement::from_terms(x.terms().map(|(m, c)| (*m, c * &Scalar::s_pow(kpow as i64 * k_grade(side, m)))))
}

/// Left action `h ▷ x`.
pub fn act_left(h: &UqElement, x: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (m, c) in h.terms() {
        // F^i K^k E^j ▷ x = F^i ▷ (K^k ▷ (E^j ▷ x))
        let mut y = x.clone();
        for _ in 0..m.e {
            y = raise_lower(Side::Left, true, &y);
        }
        y = k_act(Side::Left, m.k, &y);
        for _ in 0..m.f {
            y = raise_lower(Side::Left, false, &y);
        }
        out = out + y.scale(c);
    }
    out
}

/// Right action `x ◁ h`.
pub fn act_right(x: &AlgElement, h: &UqElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (m, c) in h.terms() {
        let mut y = x.clone();
        for _ in 0..m.f {
            y = raise_lower(Side::Right, false, &y);
        }
        y = k_act(Side::Right, m.k, &y);
        for _ in 0..m.e {
            y = raise_lower(Side::Right, true, &y);
        }
        out = out + y.scale(c);
    }
    out
}

/// Dual pairing `<h, x> = ε(h ▷ x)`.
pub fn pair(h: &UqElement, x: &AlgElement) -> Scalar {
    act_left(h, x).counit()
}

/// `φ_{n,J,l} = (c^{J-n/2} a*^{J+n/2}) ◁ E^l`.
pub fn phi_basis(n: i64, j: Half, l: i64) -> Result<AlgElement, AlgebraError> {
    let bad = || AlgebraError::BadLabels { n, j: j.to_string(), l };
    let cpow = j.twice() - n;
    let apow = j.twice() + n;
    if cpow < 0 || apow < 0 || cpow % 2 != 0 || l < 0 || l > j.twice() {
        return Err(bad());
    }
    let seed = AlgElement::c().pow((cpow / 2) as u32) * AlgElement::astar().pow((apow / 2) as u32);
    Ok(act_right(&seed, &UqElement::e().pow(l as u32)))
}

// ---------------------------------------------------------------------------
// Quantum tangent space

/// Index of the invariant basis `ω_-, ω_+, ω_z, ω_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Idx {
    Minus,
    Plus,
    Z,
    Zero,
}

impl Idx {
    /// Order used for wedge monomials.
    pub const WEDGE: [Idx; 4] = [Idx::Minus, Idx::Plus, Idx::Z, Idx::Zero];
    /// Order used by the `f_ab` and `J_ab` matrices.
    pub const MATRIX: [Idx; 4] = [Idx::Minus, Idx::Z, Idx::Plus, Idx::Zero];

    pub fn wedge_pos(self) -> usize {
        self as usize
    }

    pub fn matrix_pos(self) -> usize {
        match self {
            Idx::Minus => 0,
            Idx::Z => 1,
            Idx::Plus => 2,
            Idx::Zero => 3,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Idx::Minus => "-",
            Idx::Plus => "+",
            Idx::Z => "z",
            Idx::Zero => "0",
        }
    }
}

impl fmt::Display for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn k2_combo(c_plus: Scalar, c_minus: Scalar, c_one: Scalar) -> UqElement {
    let mut u = UqElement::zero();
    u.add_term(Pbw { k: 2, ..Pbw::ONE }, c_plus);
    u.add_term(Pbw { k: -2, ..Pbw::ONE }, c_minus);
    u.add_term(Pbw::ONE, c_one);
    u
}

/// `L_0` in its `FE` form.
pub fn l0_fe_form() -> UqElement {
    let d2 = Scalar::qdiff().pow(2).inv().expect("nonzero");
    let (q, qi) = (Scalar::q(), Scalar::q_pow(-1));
    k2_combo(&q * &d2, &qi * &d2, -(&(&q + &qi) * &d2)) + UqElement::f() * UqElement::e()
}

/// `L_0` in its `EF` form.
pub fn l0_ef_form() -> UqElement {
    let d2 = Scalar::qdiff().pow(2).inv().expect("nonzero");
    let (q, qi) = (Scalar::q(), Scalar::q_pow(-1));
    k2_combo(&qi * &d2, &q * &d2, -(&(&q + &qi) * &d2)) + UqElement::e() * UqElement::f()
}

static TANGENTS: Lazy<Vec<UqElement>> = Lazy::new(|| Idx::WEDGE.iter().map(|a| build_tangent(*a)).collect());
static RIGHT_TANGENTS: Lazy<Vec<UqElement>> =
    Lazy::new(|| Idx::WEDGE.iter().map(|a| -build_tangent(*a).antipode_inv()).collect());
static F_MATRIX: Lazy<Vec<Vec<UqElement>>> =
    Lazy::new(|| Idx::WEDGE.iter().map(|a| Idx::WEDGE.iter().map(|b| build_f_entry(*a, *b)).collect()).collect());
static F_MATRIX_SINV: Lazy<Vec<Vec<UqElement>>> =
    Lazy::new(|| F_MATRIX.iter().map(|row| row.iter().map(|f| f.antipode_inv()).collect()).collect());

/// Left-invariant tangent vector `L_a`, dual to `ω_a`.
pub fn tangent(a: Idx) -> UqElement {
    TANGENTS[a.wedge_pos()].clone()
}

fn build_tangent(a: Idx) -> UqElement {
    let kinv = UqElement::k_pow(-1);
    match a {
        Idx::Minus => (UqElement::f() * kinv).scale(&Scalar::s()),
        Idx::Plus => (UqElement::e() * kinv).scale(&Scalar::s_pow(-1)),
        Idx::Z => {
            let d = Scalar::qdiff().inv().expect("nonzero");
            k2_combo(Scalar::zero(), d.clone(), -d)
        }
        Idx::Zero => l0_fe_form(),
    }
}

/// Right vector `R_a = -S^{-1}(L_a)`.
pub fn right_tangent(a: Idx) -> UqElement {
    RIGHT_TANGENTS[a.wedge_pos()].clone()
}

/// The matrix `f_ab` with `ΔL_b = 1⊗L_b + Σ_a L_a⊗f_ab`.
pub fn f_entry(a: Idx, b: Idx) -> &'static UqElement {
    &F_MATRIX[a.wedge_pos()][b.wedge_pos()]
}

/// `S^{-1}(f_ab)`, which moves coefficients across `ω_a` from the left.
pub fn f_entry_sinv(a: Idx, b: Idx) -> &'static UqElement {
    &F_MATRIX_SINV[a.wedge_pos()][b.wedge_pos()]
}

fn build_f_entry(a: Idx, b: Idx) -> UqElement {
    use Idx::*;
    let qd = Scalar::qdiff();
    let (e, f, k, kinv) = (UqElement::e(), UqElement::f(), UqElement::k(), UqElement::k_pow(-1));
    match (a, b) {
        (Minus, Minus) | (Plus, Plus) => UqElement::one(),
        (Minus, Zero) => (k * e).scale(&Scalar::s_pow(-1)),
        (Z, Minus) => (f * kinv).scale(&(&qd * &Scalar::s())),
        (Z, Z) => UqElement::k_pow(-2),
        (Z, Plus) => (e * kinv).scale(&(&qd * &Scalar::s_pow(-1))),
        (Z, Zero) => {
            let d2 = qd.pow(2).inv().expect("nonzero");
            let qi = Scalar::q_pow(-1);
            (f * e + k2_combo(-(&qi * &d2), &qi * &d2, Scalar::zero())).scale(&qd)
        }
        (Plus, Zero) => (f * k).scale(&Scalar::s_pow(-1)),
        (Zero, Zero) => UqElement::k_pow(2),
        _ => UqElement::zero(),
    }
}

/// Closed-form eigenvalues of the tangent vectors on `φ_{n,J,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenOp {
    LplusLminus,
    LminusLplus,
    Lz,
    L0,
}

pub fn action_eigen(op: EigenOp, n: i64, j: Half) -> Scalar {
    let hn = Half(n);
    let qh = |x: Half| Scalar::qnum(x);
    match op {
        EigenOp::LminusLplus => Scalar::q_pow(-1 - n) * qh(j.sub(hn)) * qh(j.add(Half(2)).add(hn)),
        EigenOp::LplusLminus => Scalar::q_pow(1 - n) * qh(j.add(hn)) * qh(j.add(Half(2)).sub(hn)),
        EigenOp::Lz => -(Scalar::s_pow(-n) * qh(hn)),
        EigenOp::L0 => qh(j) * qh(j.add(Half(2))),
    }
}

/// The operator behind an [`EigenOp`].
pub fn eigen_operator(op: EigenOp) -> UqElement {
    match op {
        EigenOp::LplusLminus => tangent(Idx::Plus) * tangent(Idx::Minus),
        EigenOp::LminusLplus => tangent(Idx::Minus) * tangent(Idx::Plus),
        EigenOp::Lz => tangent(Idx::Z),
        EigenOp::L0 => tangent(Idx::Zero),
    }
}

#[cfg(test)]
#[path = "envelope_tests.rs"]
mod tests;
