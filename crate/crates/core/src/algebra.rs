//! The Hopf *-algebra A(SU_q(2)) generated by `a, c` with
//! `ac = qca`, `ac* = qc*a`, `cc* = c*c`, `a*a + c*c = aa* + q^2 cc* = 1`.
//!
//! Elements are kept in the normal form `a^k c^m c*^n` or `a*^k c^m c*^n`.

use crate::scalars::{RationalFunction, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element is not homogeneous for the K-grading")]
    Inhomogeneous,
    #[error("monomial cannot carry both a and a* powers")]
    MixedAPowers,
    #[error("invalid basis labels n={n}, J={j}, l={l}")]
    BadLabels { n: i64, j: String, l: i64 },
}

/// The four generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    AStar,
    C,
    CStar,
}

/// Normal-ordered monomial. `apow > 0` is `a^apow`, `apow < 0` is `a*^{-apow}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub apow: i32,
    pub ec: u32,
    pub ecs: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { apow: 0, ec: 0, ecs: 0 };

    pub fn new(e_a: u32, e_astar: u32, e_c: u32, e_cstar: u32) -> Result<Self, AlgebraError> {
        if e_a > 0 && e_astar > 0 {
            return Err(AlgebraError::MixedAPowers);
        }
        Ok(Monomial { apow: e_a as i32 - e_astar as i32, ec: e_c, ecs: e_cstar })
    }

    pub fn gen(g: Gen) -> Self {
        match g {
            Gen::A => Monomial { apow: 1, ..Self::ONE },
            Gen::AStar => Monomial { apow: -1, ..Self::ONE },
            Gen::C => Monomial { ec: 1, ..Self::ONE },
            Gen::CStar => Monomial { ecs: 1, ..Self::ONE },
        }
    }

    pub fn e_a(&self) -> u32 {
        self.apow.max(0) as u32
    }

    pub fn e_astar(&self) -> u32 {
        (-self.apow).max(0) as u32
    }

    pub fn degree(&self) -> u32 {
        self.apow.unsigned_abs() + self.ec + self.ecs
    }

    /// K-grade `n` with `K ▷ x = q^{n/2} x`.
    pub fn grade(&self) -> i64 {
        -(self.apow as i64) - self.ec as i64 + self.ecs as i64
    }

    /// Generator word spelling this monomial left to right.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::new();
        let g = if self.apow >= 0 { Gen::A } else { Gen::AStar };
        w.extend(std::iter::repeat_n(g, self.apow.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(Gen::C, self.ec as usize));
        w.extend(std::iter::repeat_n(Gen::CStar, self.ecs as usize));
        w
    }

    /// All monomials of total degree at most `d`.
    pub fn up_to_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for k in -(d as i32)..=(d as i32) {
            for ec in 0..=d {
                for ecs in 0..=d {
                    let m = Monomial { apow: k, ec, ecs };
                    if m.degree() <= d {
                        out.push(m);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let push = |parts: &mut Vec<String>, name: &str, e: u32| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        };
        push(&mut parts, "a", self.e_a());
        push(&mut parts, "as", self.e_astar());
        push(&mut parts, "c", self.ec);
        push(&mut parts, "cs", self.ecs);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// `(1 - q^{2j} z)` products, as coefficient lists in `z = cc*`.
fn zeta_product(factors: impl Iterator<Item = i64>) -> Vec<Scalar> {
    let mut p = vec![Scalar::one()];
    for j in factors {
        let f = -Scalar::q_pow(2 * j);
        let mut next = vec![Scalar::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] = &next[i] + c;
            next[i + 1] = &next[i + 1] + &(c * &f);
        }
        p = next;
    }
    p
}

/// Product of two normal-ordered monomials.
pub fn monomial_product(m1: Monomial, m2: Monomial) -> Vec<(Monomial, Scalar)> {
    let p2 = m2.apow as i64;
    // c^m c*^n a^p = q^{-(m+n)p} a^p c^m c*^n (also for negative p, i.e. a*)
    let pre = -((m1.ec + m1.ecs) as i64) * p2;
    let ec = m1.ec + m2.ec;
    let ecs = m1.ecs + m2.ecs;
    let (k, l) = (m1.apow as i64, p2);
    let mut out = Vec::new();
    let mut emit = |apow: i64, zeta: Vec<Scalar>, zshift: i64| {
        // zeta polynomial sits right of the a-power; `zshift` is the factor q^{zshift * j}
        for (j, c) in zeta.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = c * Scalar::q_pow(pre + zshift * j as i64);
            out.push((Monomial { apow: apow as i32, ec: ec + j as u32, ecs: ecs + j as u32 }, coef));
        }
    };
    if k == 0 || l == 0 || (k > 0) == (l > 0) {
        emit(k + l, vec![Scalar::one()], 0);
    } else if k > 0 {
        // a^k a*^L
        let big_l = -l;
        if k <= big_l {
            // P_k(z) a*^{L-k}, then z^j a*^r = q^{2rj} a*^r z^j
            let r = big_l - k;
            emit(-r, zeta_product(1..=k), 2 * r);
        } else {
            emit(k - big_l, zeta_product(1..=big_l), 0);
        }
    } else {
        // a*^K a^l
        let big_k = -k;
        if big_k <= l {
            // Q_K(z) a^{l-K}, then z^j a^r = q^{-2rj} a^r z^j
            let r = l - big_k;
            emit(r, zeta_product((0..big_k).map(|j| -j)), -2 * r);
        } else {
            emit(-(big_k - l), zeta_product((0..l).map(|j| -j)), 0);
        }
    }
    out
}

/// Element of A(SU_q(2)).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl AlgElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }

    pub fn from_scalar(x: Scalar) -> Self {
        Self::term(Monomial::ONE, x)
    }

    pub fn term(m: Monomial, x: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !x.is_zero() {
            terms.insert(m, x);
        }
        AlgElement { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::monomial(Monomial::gen(g))
    }

    pub fn a() -> Self {
        Self::gen(Gen::A)
    }

    pub fn astar() -> Self {
        Self::gen(Gen::AStar)
    }

    pub fn c() -> Self {
        Self::gen(Gen::C)
    }

    pub fn cstar() -> Self {
        Self::gen(Gen::CStar)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut e = Self::zero();
        for (m, x) in it {
            e.add_term(m, x);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, x: Scalar) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Scalar value if the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        AlgElement { terms: self.terms.iter().map(|(m, c)| (*m, c * x)).filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn scale_rf(&self, r: &RationalFunction) -> Self {
        AlgElement { terms: self.terms.iter().map(|(m, c)| (*m, c.scale(r))).filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
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
        AlgElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                for (m, x) in monomial_product(*m1, *m2) {
                    r.add_term(m, &c * &x);
                }
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Apply a multiplicative map given on generators, for each monomial in normal order.
    fn map_multiplicative(&self, on_gen: impl Fn(Gen) -> AlgElement, anti: bool) -> Self {
        let mut cache: BTreeMap<Gen, AlgElement> = BTreeMap::new();
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let mut word = m.word();
            if anti {
                word.reverse();
            }
            let mut acc = Self::one();
            for g in word {
                let img = cache.entry(g).or_insert_with(|| on_gen(g)).clone();
                acc = acc.mul_ref(&img);
            }
            r = r.add_ref(&acc.scale(c));
        }
        r
    }

    /// Antilinear anti-multiplicative involution.
    pub fn star(&self) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            // (a^k c^m c*^n)^* = c^n c*^m a*^k
            let mono = AlgElement::monomial(Monomial { apow: 0, ec: m.ecs, ecs: m.ec });
            let apart = AlgElement::monomial(Monomial { apow: -m.apow, ec: 0, ecs: 0 });
            r = r.add_ref(&mono.mul_ref(&apart).scale(&c.conj()));
        }
        r
    }

    pub fn antipode(&self) -> Self {
        self.map_multiplicative(
            |g| match g {
                Gen::A => AlgElement::astar(),
                Gen::AStar => AlgElement::a(),
                Gen::C => AlgElement::c().scale(&-Scalar::q()),
                Gen::CStar => AlgElement::cstar().scale(&-Scalar::q_pow(-1)),
            },
            true,
        )
    }

    pub fn counit(&self) -> Scalar {
        let mut r = Scalar::zero();
        for (m, c) in &self.terms {
            if m.ec == 0 && m.ecs == 0 {
                r += c;
            }
        }
        r
    }

    /// Haar state: `h((cc*)^k) = 1/(1 + q^2 + ... + q^{2k})`, zero on other monomials.
    pub fn haar(&self) -> Scalar {
        let mut r = Scalar::zero();
        for (m, c) in &self.terms {
            if m.apow == 0 && m.ec == m.ecs {
                r += c * &haar_diag(m.ec);
            }
        }
        r
    }

    pub fn coproduct(&self) -> AlgTensor {
        let mut r = AlgTensor::zero();
        for (m, c) in &self.terms {
            let mut acc = AlgTensor::unit();
            let g = if m.apow >= 0 { Gen::A } else { Gen::AStar };
            for _ in 0..m.apow.unsigned_abs() {
                acc = acc.mul(&AlgTensor::coproduct_gen(g));
            }
            for _ in 0..m.ec {
                acc = acc.mul(&AlgTensor::coproduct_gen(Gen::C));
            }
            for _ in 0..m.ecs {
                acc = acc.mul(&AlgTensor::coproduct_gen(Gen::CStar));
            }
            r = r.add(&acc.scale(c));
        }
        r
    }

    /// K-grade of a homogeneous element (0 for the zero element).
    pub fn grade(&self) -> Result<i64, AlgebraError> {
        let mut it = self.terms.keys().map(|m| m.grade());
        let Some(first) = it.next() else { return Ok(0) };
        if it.all(|g| g == first) {
            Ok(first)
        } else {
            Err(AlgebraError::Inhomogeneous)
        }
    }

    pub fn is_in_ln(&self, n: i64) -> bool {
        self.terms.keys().all(|m| m.grade() == n)
    }

    /// Split into K-homogeneous parts.
    pub fn graded_parts(&self) -> BTreeMap<i64, AlgElement> {
        let mut out: BTreeMap<i64, AlgElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.grade()).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// `true` if every coefficient has an even number of root symbols.
    pub fn is_root_even(&self) -> bool {
        self.terms.values().all(|c| c.is_root_even())
    }

    pub fn is_root_free(&self) -> bool {
        self.terms.values().all(|c| c.is_root_free())
    }
}

/// `1/(1 + q^2 + ... + q^{2k})`
pub fn haar_diag(k: u32) -> Scalar {
    let mut s = Scalar::zero();
    for j in 0..=k as i64 {
        s += Scalar::q_pow(2 * j);
    }
    s.inv().expect("nonzero")
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono = *m != Monomial::ONE;
            if c.is_one() && mono {
                write!(f, "{}", m)?;
            } else if mono {
                write!(f, "({})*{}", c, m)?;
            } else {
                write!(f, "({})", c)?;
            }
        }
        Ok(())
    }
}

macro_rules! alg_ops {
    ($t:ty) => {
        impl Add<&$t> for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                self.add_ref(o)
            }
        }
        impl Add<$t> for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                self.add_ref(&o)
            }
        }
        impl Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                self.sub_ref(o)
            }
        }
        impl Sub<$t> for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                self.sub_ref(&o)
            }
        }
        impl Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                self.mul_ref(o)
            }
        }
        impl Mul<$t> for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                self.mul_ref(&o)
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
}
pub(crate) use alg_ops;

alg_ops!(AlgElement);

/// Element of A ⊗ A, both legs normal-ordered.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgTensor {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl fmt::Debug for AlgTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, r), c)| format!("({})*{} ⊗ {}", c, l, r)).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl AlgTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::simple(&AlgElement::one(), &AlgElement::one())
    }

    /// `x ⊗ y`
    pub fn simple(x: &AlgElement, y: &AlgElement) -> Self {
        let mut t = Self::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                t.add_term(*m1, *m2, c1 * c2);
            }
        }
        t
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, x: Scalar) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((l, m), c) in &o.terms {
            r.add_term(*l, *m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        let mut r = Self::zero();
        for ((l, m), c) in &self.terms {
            r.add_term(*l, *m, c * x);
        }
        r
    }

    /// Leg-wise product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &o.terms {
                let c = c1 * c2;
                let left = monomial_product(*l1, *l2);
                let right = monomial_product(*r1, *r2);
                for (lm, lx) in &left {
                    for (rm, rx) in &right {
                        r.add_term(*lm, *rm, &c * &(lx * rx));
                    }
                }
            }
        }
        r
    }

    pub fn coproduct_gen(g: Gen) -> Self {
        let (a, ast, c, cst) = (AlgElement::a(), AlgElement::astar(), AlgElement::c(), AlgElement::cstar());
        let q = Scalar::q();
        match g {
            // Δa = a⊗a − q c*⊗c, Δc = c⊗a + a*⊗c and their conjugates
            Gen::A => Self::simple(&a, &a).sub(&Self::simple(&cst, &c).scale(&q)),
            Gen::AStar => Self::simple(&ast, &ast).sub(&Self::simple(&c, &cst).scale(&q)),
            Gen::C => Self::simple(&c, &a).add(&Self::simple(&ast, &c)),
            Gen::CStar => Self::simple(&cst, &ast).add(&Self::simple(&a, &cst)),
        }
    }

    /// Apply linear maps to each leg and multiply back into A.
    pub fn contract(&self, f: impl Fn(&AlgElement) -> AlgElement, g: impl Fn(&AlgElement) -> AlgElement) -> AlgElement {
        let mut r = AlgElement::zero();
        for ((l, m), c) in &self.terms {
            let x = f(&AlgElement::monomial(*l)) * g(&AlgElement::monomial(*m));
            r = r + x.scale(c);
        }
        r
    }

    /// Apply linear maps to each leg, staying in A ⊗ A.
    pub fn map_legs(&self, f: impl Fn(&AlgElement) -> AlgElement, g: impl Fn(&AlgElement) -> AlgElement) -> AlgTensor {
        let mut r = AlgTensor::zero();
        for ((l, m), c) in &self.terms {
            let t = AlgTensor::simple(&f(&AlgElement::monomial(*l)), &g(&AlgElement::monomial(*m)));
            r = r.add(&t.scale(c));
        }
        r
    }

    /// `(id ⊗ φ)` for a scalar functional, giving an element of A.
    pub fn apply_right(&self, phi: impl Fn(&Monomial) -> Scalar) -> AlgElement {
        let mut r = AlgElement::zero();
        for ((l, m), c) in &self.terms {
            r.add_term(*l, c * &phi(m));
        }
        r
    }

    /// `(φ ⊗ id)` for a scalar functional.
    pub fn apply_left(&self, phi: impl Fn(&Monomial) -> Scalar) -> AlgElement {
        let mut r = AlgElement::zero();
        for ((l, m), c) in &self.terms {
            r.add_term(*m, c * &phi(l));
        }
        r
    }
}

#[cfg(test)]
#[path = "algebra_tests.rs"]
mod tests;
