//! Exterior algebra of the 4D+ bicovariant calculus on SU_q(2).
//!
//! A [`Form`] is stored with coefficients on the left of ordered wedge
//! monomials in `ω_-, ω_+, ω_z, ω_0` (that order). Monomials are bit masks,
//! bit `i` standing for `Idx::WEDGE[i]`.

use crate::algebra::{alg_ops, AlgElement, Gen, Monomial};
use crate::envelope::{act_left, f_entry, f_entry_sinv, pair, right_tangent, tangent, Idx};
use crate::linalg;
use crate::scalars::{Half, Scalar};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

/// Ordered wedge monomial as a bit mask.
pub type Mask = u8;

pub const TOP: Mask = 0b1111;

pub fn mask_of(word: &[Idx]) -> Option<Mask> {
    let mut m = 0u8;
    for i in word {
        let bit = 1 << i.wedge_pos();
        if m & bit != 0 {
            return None;
        }
        m |= bit;
    }
    Some(m)
}

pub fn mask_indices(mask: Mask) -> Vec<Idx> {
    Idx::WEDGE.iter().copied().filter(|i| mask & (1 << i.wedge_pos()) != 0).collect()
}

pub fn mask_degree(mask: Mask) -> u32 {
    mask.count_ones()
}

/// All masks of degree `k`, in increasing numeric order.
pub fn masks_of_degree(k: u32) -> Vec<Mask> {
    (0..16u8).filter(|m| m.count_ones() == k).collect()
}

pub fn mask_name(mask: Mask) -> String {
    if mask == 0 {
        return "1".into();
    }
    mask_indices(mask).iter().map(|i| format!("w{}", i)).collect::<Vec<_>>().join("^")
}

static WORD_CACHE: Lazy<RwLock<HashMap<Vec<Idx>, Vec<(Mask, Scalar)>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Reduce a product `ω_{w1} ∧ … ∧ ω_{wk}` to ordered monomials.
pub fn normalize_word(word: &[Idx]) -> Vec<(Mask, Scalar)> {
    if let Some(m) = mask_of(word) {
        if word.windows(2).all(|p| p[0] < p[1]) {
            return vec![(m, Scalar::one())];
        }
    }
    if let Some(v) = WORD_CACHE.read().unwrap().get(word) {
        return v.clone();
    }
    use Idx::*;
    let q2 = Scalar::q_pow(2);
    let qi2 = Scalar::q_pow(-2);
    let mut acc: BTreeMap<Mask, Scalar> = BTreeMap::new();
    let mut todo = vec![(word.to_vec(), Scalar::one())];
    while let Some((w, c)) = todo.pop() {
        let Some(i) = w.windows(2).position(|p| p[0] >= p[1]) else {
            let m = mask_of(&w).expect("ordered word has distinct letters");
            *acc.entry(m).or_default() += c;
            continue;
        };
        let splice = |mid: &[Idx]| {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&w[i + 2..]);
            v
        };
        match (w[i], w[i + 1]) {
            (a, b) if a == b && a != Z => {}
            (Z, Z) => todo.push((splice(&[Minus, Plus]), -(&c * &(&q2 - &qi2)))),
            (Plus, Minus) => todo.push((splice(&[Minus, Plus]), -c)),
            (Z, Minus) => todo.push((splice(&[Minus, Z]), -(&c * &qi2))),
            (Z, Plus) => todo.push((splice(&[Plus, Z]), -(&c * &q2))),
            (Zero, Minus) => todo.push((splice(&[Minus, Zero]), -c)),
            (Zero, Plus) => todo.push((splice(&[Plus, Zero]), -c)),
            (Zero, Z) => {
                todo.push((splice(&[Z, Zero]), -c.clone()));
                todo.push((splice(&[Minus, Plus]), &c * &Scalar::qdiff().pow(2)));
            }
            _ => unreachable!("pair is in order"),
        }
    }
    let out: Vec<(Mask, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    WORD_CACHE.write().unwrap().insert(word.to_vec(), out.clone());
    out
}

/// Element of Ω(SU_q(2)), possibly of mixed degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Form {
    terms: BTreeMap<Mask, AlgElement>,
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, x)| format!("({}) {}", x, mask_name(*m))).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_alg(x: AlgElement) -> Self {
        Self::term(0, x)
    }

    pub fn term(mask: Mask, x: AlgElement) -> Self {
        let mut f = Self::zero();
        f.add_term(mask, x);
        f
    }

    pub fn basis(mask: Mask) -> Self {
        Self::term(mask, AlgElement::one())
    }

    pub fn omega(a: Idx) -> Self {
        Self::basis(1 << a.wedge_pos())
    }

    /// `ω_{w1} ∧ … ∧ ω_{wk}` in normal form.
    pub fn word(w: &[Idx]) -> Self {
        let mut f = Self::zero();
        for (m, c) in normalize_word(w) {
            f.add_term(m, AlgElement::from_scalar(c));
        }
        f
    }

    /// The volume form `ω_- ∧ ω_+ ∧ ω_z ∧ ω_0`.
    pub fn mu() -> Self {
        Self::basis(TOP)
    }

    pub fn add_term(&mut self, mask: Mask, x: AlgElement) {
        if x.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(v) => {
                *v = &*v + &x;
                if v.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, x);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mask, &AlgElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mask: Mask) -> AlgElement {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| mask_degree(*m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn part(&self, k: u32) -> Form {
        Form { terms: self.terms.iter().filter(|(m, _)| mask_degree(**m) == k).map(|(m, x)| (*m, x.clone())).collect() }
    }

    /// Scalar coefficients, if every coefficient is a constant (left-invariant form).
    pub fn invariant_coeffs(&self) -> Option<BTreeMap<Mask, Scalar>> {
        self.terms.iter().map(|(m, x)| x.as_scalar().map(|c| (*m, c))).collect()
    }

    pub fn from_invariant(coeffs: &BTreeMap<Mask, Scalar>) -> Form {
        let mut f = Form::zero();
        for (m, c) in coeffs {
            f.add_term(*m, AlgElement::from_scalar(c.clone()));
        }
        f
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        let mut r = Self::zero();
        for (m, y) in &self.terms {
            r.add_term(*m, y.scale(x));
        }
        r
    }

    pub fn map_coeffs(&self, f: impl Fn(&AlgElement) -> AlgElement) -> Self {
        let mut r = Self::zero();
        for (m, y) in &self.terms {
            r.add_term(*m, f(y));
        }
        r
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, x) in &o.terms {
            r.add_term(*m, x.clone());
        }
        r
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, x) in &o.terms {
            r.add_term(*m, -x);
        }
        r
    }

    pub fn neg_ref(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    /// `x · θ`
    pub fn left_mul(&self, x: &AlgElement) -> Self {
        self.map_coeffs(|y| x * y)
    }

    /// `θ · x`, moved back to left coefficients.
    pub fn right_mul(&self, x: &AlgElement) -> Self {
        let mut r = Self::zero();
        for (m, y) in &self.terms {
            r = r + omega_times(*m, x).left_mul(y);
        }
        r
    }

    /// Wedge product.
    pub fn mul_ref(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (i, x) in &self.terms {
            for (j, y) in &o.terms {
                for (b, z) in omega_times(*i, y).terms {
                    let mut w = mask_indices(b);
                    w.extend(mask_indices(*j));
                    for (m, c) in normalize_word(&w) {
                        r.add_term(m, (x * &z).scale(&c));
                    }
                }
            }
        }
        r
    }

    pub fn wedge(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }

    /// Exterior derivative.
    pub fn d(&self) -> Self {
        let mut r = Self::zero();
        for (m, x) in &self.terms {
            r = r + d_alg(x).wedge(&Form::basis(*m)) + d_basis(*m).left_mul(x);
        }
        r
    }

    /// The antilinear involution with `ω_-* = -ω_+`, `ω_z* = -ω_z`, `ω_0* = -ω_0`.
    pub fn conj(&self) -> Self {
        let mut r = Self::zero();
        for (m, x) in &self.terms {
            let idx = mask_indices(*m);
            let k = idx.len() as i64;
            // (ω_1 ∧ … ∧ ω_k)* = (-1)^{k(k-1)/2} ω_k* ∧ … ∧ ω_1*, each ω* carrying a sign -1
            let sign = if (k * (k - 1) / 2 + k) % 2 == 0 { 1 } else { -1 };
            let w: Vec<Idx> = idx.iter().rev().map(|i| star_index(*i)).collect();
            let xs = x.star();
            for (b, c) in normalize_word(&w) {
                r = r + omega_times(b, &xs).scale(&(&c * &Scalar::from_int(sign)));
            }
        }
        r
    }
}

alg_ops!(Form);

fn star_index(i: Idx) -> Idx {
    match i {
        Idx::Minus => Idx::Plus,
        Idx::Plus => Idx::Minus,
        o => o,
    }
}

static OMEGA_TIMES_CACHE: Lazy<RwLock<HashMap<(Mask, Monomial), Form>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn omega_times_monomial(mask: Mask, y: Monomial) -> Form {
    if let Some(v) = OMEGA_TIMES_CACHE.read().unwrap().get(&(mask, y)) {
        return v.clone();
    }
    // ω_{i1} … ω_{ik} y: move y leftwards one factor at a time with ω_a y = Σ_b (f_ab ▷ y) ω_b
    let mut state: BTreeMap<Vec<Idx>, AlgElement> = BTreeMap::new();
    state.insert(vec![], AlgElement::monomial(y));
    for i in mask_indices(mask).into_iter().rev() {
        let mut next: BTreeMap<Vec<Idx>, AlgElement> = BTreeMap::new();
        for (suffix, z) in &state {
            for b in Idx::WEDGE {
                let f = f_entry(i, b);
                if f.is_zero() {
                    continue;
                }
                let w = act_left(f, z);
                if w.is_zero() {
                    continue;
                }
                let mut key = vec![b];
                key.extend_from_slice(suffix);
                let e = next.entry(key).or_default();
                *e = &*e + &w;
            }
        }
        state = next;
    }
    let mut out = Form::zero();
    for (w, z) in state {
        for (m, c) in normalize_word(&w) {
            out.add_term(m, z.scale(&c));
        }
    }
    OMEGA_TIMES_CACHE.write().unwrap().insert((mask, y), out.clone());
    out
}

/// `ω_I · y` with left coefficients.
pub fn omega_times(mask: Mask, y: &AlgElement) -> Form {
    let mut r = Form::zero();
    for (m, c) in y.terms() {
        r = r + omega_times_monomial(mask, *m).scale(c);
    }
    r
}

/// `ω_a · x`
pub fn move_right(a: Idx, x: &AlgElement) -> Form {
    omega_times(1 << a.wedge_pos(), x)
}

/// Form written with coefficients on the right: `Σ ω_I y_I`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct RightForm {
    terms: BTreeMap<Mask, AlgElement>,
}

impl RightForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(mask: Mask, y: AlgElement) -> Self {
        let mut r = Self::zero();
        r.add_term(mask, y);
        r
    }

    pub fn add_term(&mut self, mask: Mask, y: AlgElement) {
        if y.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_default();
        *e = &*e + &y;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mask, &AlgElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mask: Mask) -> AlgElement {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn map_coeffs(&self, f: impl Fn(&AlgElement) -> AlgElement) -> Self {
        let mut r = Self::zero();
        for (m, y) in &self.terms {
            r.add_term(*m, f(y));
        }
        r
    }

    pub fn to_left(&self) -> Form {
        let mut r = Form::zero();
        for (m, y) in &self.terms {
            r = r + omega_times(*m, y);
        }
        r
    }
}

static TO_RIGHT_CACHE: Lazy<RwLock<HashMap<(Mask, Monomial), RightForm>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn to_right_monomial(mask: Mask, x: Monomial) -> RightForm {
    if let Some(v) = TO_RIGHT_CACHE.read().unwrap().get(&(mask, x)) {
        return v.clone();
    }
    // x ω_a = Σ_b ω_b (S^{-1}(f_ab) ▷ x), applied factor by factor from the left
    let mut state: BTreeMap<Vec<Idx>, AlgElement> = BTreeMap::new();
    state.insert(vec![], AlgElement::monomial(x));
    for i in mask_indices(mask) {
        let mut next: BTreeMap<Vec<Idx>, AlgElement> = BTreeMap::new();
        for (prefix, z) in &state {
            for b in Idx::WEDGE {
                let g = f_entry_sinv(i, b);
                if g.is_zero() {
                    continue;
                }
                let w = act_left(g, z);
                if w.is_zero() {
                    continue;
                }
                let mut key = prefix.clone();
                key.push(b);
                let e = next.entry(key).or_default();
                *e = &*e + &w;
            }
        }
        state = next;
    }
    let mut out = RightForm::zero();
    for (w, z) in state {
        for (m, c) in normalize_word(&w) {
            out.add_term(m, z.scale(&c));
        }
    }
    TO_RIGHT_CACHE.write().unwrap().insert((mask, x), out.clone());
    out
}

/// Rewrite a form with right coefficients.
pub fn to_right(f: &Form) -> RightForm {
    let mut out = RightForm::zero();
    for (mask, x) in f.terms() {
        for (m, c) in x.terms() {
            for (b, y) in to_right_monomial(*mask, *m).terms() {
                out.add_term(*b, y.scale(c));
            }
        }
    }
    out
}

/// `dx = Σ_a (L_a ▷ x) ω_a`
pub fn d_alg(x: &AlgElement) -> Form {
    let mut f = Form::zero();
    for a in Idx::WEDGE {
        f.add_term(1 << a.wedge_pos(), act_left(&tangent(a), x));
    }
    f
}

/// `dx = Σ_a ω_a (R_a ▷ x)`, in right-coefficient form.
pub fn d_alg_right(x: &AlgElement) -> RightForm {
    let mut f = RightForm::zero();
    for a in Idx::WEDGE {
        f.add_term(1 << a.wedge_pos(), act_left(&right_tangent(a), x));
    }
    f
}

/// `λ_1 = [1/2][3/2]`
pub fn lambda1() -> Scalar {
    Scalar::qnum(Half(1)) * Scalar::qnum(Half(3))
}

/// The invariant 1-forms written as `Σ coeff · x dy` for generators `x, y`.
pub fn omega_as_differentials(a: Idx) -> Vec<(Scalar, Gen, Gen)> {
    use Gen::*;
    let q = Scalar::q();
    match a {
        Idx::Minus => vec![(Scalar::one(), CStar, AStar), (-q, AStar, CStar)],
        Idx::Plus => vec![(Scalar::one(), A, C), (-q, C, A)],
        Idx::Z => vec![
            (Scalar::one(), AStar, A),
            (Scalar::one(), CStar, C),
            (-Scalar::one(), A, AStar),
            (-Scalar::q_pow(2), C, CStar),
        ],
        Idx::Zero => {
            let n = ((Scalar::one() + q.clone()) * lambda1()).inv().expect("nonzero");
            vec![
                (n.clone(), AStar, A),
                (n.clone(), CStar, C),
                (&n * &q, A, AStar),
                (&n * &Scalar::q_pow(3), C, CStar),
            ]
        }
    }
}

static D_OMEGA: Lazy<Vec<Form>> = Lazy::new(|| {
    Idx::WEDGE
        .iter()
        .map(|a| {
            let mut f = Form::zero();
            for (c, x, y) in omega_as_differentials(*a) {
                let dx = d_alg(&AlgElement::gen(x));
                let dy = d_alg(&AlgElement::gen(y));
                f = f + dx.wedge(&dy).scale(&c);
            }
            f
        })
        .collect()
});

/// `dω_a`, derived by differentiating the expressions of `ω_a` through `d` on functions.
pub fn d_omega(a: Idx) -> Form {
    D_OMEGA[a.wedge_pos()].clone()
}

static D_BASIS: Lazy<Vec<Form>> = Lazy::new(|| {
    let mut out = vec![Form::zero(); 16];
    for m in 1..16u8 {
        let idx = mask_indices(m);
        let first = Form::omega(idx[0]);
        let rest_mask = m & !(1 << idx[0].wedge_pos());
        // d(ω_1 ∧ ρ) = dω_1 ∧ ρ - ω_1 ∧ dρ, with ρ of lower degree already known
        let rest = Form::basis(rest_mask);
        out[m as usize] = d_omega(idx[0]).wedge(&rest) - first.wedge(&out[rest_mask as usize]);
    }
    out
});

/// `d` of an ordered basis monomial.
pub fn d_basis(mask: Mask) -> Form {
    D_BASIS[mask as usize].clone()
}

// ---------------------------------------------------------------------------
// Tensors over the invariant basis, braiding and antisymmetrizers

/// Element of `(Ω¹_inv)^{⊗k}` as a dense coordinate vector; leg 0 is most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvTensor {
    k: usize,
    v: Vec<Scalar>,
}

impl InvTensor {
    pub fn zero(k: usize) -> Self {
        InvTensor { k, v: vec![Scalar::zero(); 4usize.pow(k as u32)] }
    }

    pub fn basis(word: &[Idx]) -> Self {
        let mut t = Self::zero(word.len());
        t.v[Self::index(word)] = Scalar::one();
        t
    }

    pub fn index(word: &[Idx]) -> usize {
        word.iter().fold(0, |acc, i| acc * 4 + i.wedge_pos())
    }

    pub fn word_of(k: usize, mut idx: usize) -> Vec<Idx> {
        let mut w = vec![Idx::Minus; k];
        for j in (0..k).rev() {
            w[j] = Idx::WEDGE[idx % 4];
            idx /= 4;
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.v
    }

    pub fn get(&self, word: &[Idx]) -> &Scalar {
        &self.v[Self::index(word)]
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        InvTensor { k: self.k, v: self.v.iter().zip(&o.v).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        InvTensor { k: self.k, v: self.v.iter().zip(&o.v).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, x: &Scalar) -> Self {
        InvTensor { k: self.k, v: self.v.iter().map(|a| a * x).collect() }
    }

    pub fn conj_coeffs(&self) -> Self {
        InvTensor { k: self.k, v: self.v.iter().map(|a| a.conj()).collect() }
    }
}

/// 16×16 braiding matrix: `m[in][out]` with `in = 4·pos(a) + pos(b)` for `ω_a ⊗ ω_b`.
pub type BraidMatrix = Vec<Vec<Scalar>>;

/// The braiding σ as tabulated for the 4D+ calculus.
pub fn braid_table() -> BraidMatrix {
    use Idx::*;
    let q2 = Scalar::q_pow(2);
    let qi2 = Scalar::q_pow(-2);
    let one = Scalar::one();
    let qd2 = Scalar::qdiff().pow(2);
    let q2mqi2 = &q2 - &qi2;
    let rows: Vec<((Idx, Idx), Vec<(Scalar, Idx, Idx)>)> = vec![
        ((Minus, Minus), vec![(one.clone(), Minus, Minus)]),
        ((Plus, Plus), vec![(one.clone(), Plus, Plus)]),
        ((Zero, Zero), vec![(one.clone(), Zero, Zero)]),
        (
            (Z, Z),
            vec![(one.clone(), Z, Z), (q2mqi2.clone(), Z, Zero), (q2mqi2.clone(), Minus, Plus), (-q2mqi2, Plus, Minus)],
        ),
        ((Minus, Plus), vec![(one.clone(), Plus, Minus), (-one.clone(), Z, Zero)]),
        ((Plus, Minus), vec![(one.clone(), Minus, Plus), (one.clone(), Z, Zero)]),
        ((Minus, Z), vec![(one.clone(), Z, Minus), (&one + &q2, Minus, Zero)]),
        ((Z, Minus), vec![(&one - &qi2, Z, Minus), (qi2.clone(), Minus, Z), (-(&one + &qi2), Minus, Zero)]),
        ((Minus, Zero), vec![(one.clone(), Zero, Minus), (&one - &q2, Minus, Zero)]),
        ((Zero, Minus), vec![(q2.clone(), Minus, Zero)]),
        ((Z, Plus), vec![(q2.clone(), Plus, Z), (&one - &q2, Z, Plus), (&one + &q2, Plus, Zero)]),
        ((Plus, Z), vec![(one.clone(), Z, Plus), (-(&one + &qi2), Plus, Zero)]),
        ((Z, Zero), vec![(one.clone(), Zero, Z), (qd2.clone(), Plus, Minus), (-qd2.clone(), Minus, Plus), (-qd2, Z, Zero)]),
        ((Zero, Z), vec![(one.clone(), Z, Zero)]),
        ((Plus, Zero), vec![(one.clone(), Zero, Plus), (&one - &qi2, Plus, Zero)]),
        ((Zero, Plus), vec![(qi2, Plus, Zero)]),
    ];
    let mut m = vec![vec![Scalar::zero(); 16]; 16];
    for ((a, b), outs) in rows {
        let i = InvTensor::index(&[a, b]);
        for (c, n, k) in outs {
            m[i][InvTensor::index(&[n, k])] += c;
        }
    }
    m
}

/// Right coaction matrix entry `J_{first,second}` (`Δ_R ω_a = Σ_b ω_b ⊗ J_ba`).
pub fn coaction_entry(first: Idx, second: Idx) -> AlgElement {
    use Idx::*;
    let (a, ast, c, cst) = (AlgElement::a(), AlgElement::astar(), AlgElement::c(), AlgElement::cstar());
    let q = Scalar::q();
    let q2 = Scalar::q_pow(2);
    let one = Scalar::one();
    match (first, second) {
        (Minus, Minus) => ast.pow(2),
        (Minus, Z) => (&ast * &c).scale(&(&one + &q2)),
        (Minus, Plus) => c.pow(2).scale(&-q.clone()),
        (Minus, Zero) => (&ast * &c).scale(&(&one - &q2)),
        (Z, Minus) => (&ast * &cst).scale(&-q.clone()),
        (Z, Z) => &a * &ast - &c * &cst,
        (Z, Plus) => -(&a * &c),
        (Z, Zero) => (&c * &cst).scale(&(&q2 - &one)),
        (Plus, Minus) => cst.pow(2).scale(&-q.clone()),
        (Plus, Z) => (&a * &cst).scale(&(&q + &Scalar::q_pow(-1))),
        (Plus, Plus) => a.pow(2),
        (Plus, Zero) => (&a * &cst).scale(&(&Scalar::q_pow(-1) - &q)),
        (Zero, Zero) => AlgElement::one(),
        (Zero, _) => AlgElement::zero(),
    }
}

/// The braiding computed from `σ_ab^{nk} = <f_ak, J_nb>`.
pub fn braid_from_pairing() -> BraidMatrix {
    let mut m = vec![vec![Scalar::zero(); 16]; 16];
    for a in Idx::WEDGE {
        for b in Idx::WEDGE {
            for n in Idx::WEDGE {
                for k in Idx::WEDGE {
                    let v = pair(f_entry(a, k), &coaction_entry(n, b));
                    m[InvTensor::index(&[a, b])][InvTensor::index(&[n, k])] = v;
                }
            }
        }
    }
    m
}

static BRAID: Lazy<BraidMatrix> = Lazy::new(braid_table);

/// σ acting on legs `i, i+1`.
pub fn apply_sigma(t: &InvTensor, i: usize) -> InvTensor {
    assert!(i + 1 < t.k, "braid position out of range");
    let mut out = InvTensor::zero(t.k);
    let low = 4usize.pow((t.k - i - 2) as u32);
    for (idx, x) in t.v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let pair_idx = (idx / low) % 16;
        let base = idx - pair_idx * low;
        for (o, c) in BRAID[pair_idx].iter().enumerate() {
            if !c.is_zero() {
                out.v[base + o * low] += x * c;
            }
        }
    }
    out
}

/// `𝔄^{(k)} = Σ_{π ∈ S_k} sgn(π) σ_{T(π)}`, the braid lift taken along reduced words.
pub fn antisymmetrize(t: &InvTensor) -> InvTensor {
    let k = t.k;
    if k < 2 {
        return t.clone();
    }
    // breadth-first over permutations by length; each step s_i π with ℓ(s_i π) = ℓ(π) + 1
    let id: Vec<usize> = (0..k).collect();
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut layer = vec![(id, t.clone())];
    let mut total = t.clone();
    let mut sign = Scalar::one();
    while !layer.is_empty() {
        sign = -sign;
        let mut next = Vec::new();
        for (perm, v) in &layer {
            for i in 0..k - 1 {
                // left multiplication by s_i raises length iff it does not create an inversion already present
                let (pi, pj) = (perm.iter().position(|&x| x == i).unwrap(), perm.iter().position(|&x| x == i + 1).unwrap());
                if pi > pj {
                    continue;
                }
                let mut np = perm.clone();
                np.swap(pi, pj);
                if seen.contains_key(&np) {
                    continue;
                }
                seen.insert(np.clone(), ());
                let nv = apply_sigma(v, i);
                total = total.add(&nv.scale(&sign));
                next.push((np, nv));
            }
        }
        layer = next;
    }
    total
}

/// `𝔄^{(k)}` through the recursion `𝔄^{(k)} = (1 ⊗ 𝔄^{(k-1)}) · Σ_i (-1)^i σ_1 ⋯ σ_i`.
pub fn antisymmetrize_recursive(t: &InvTensor) -> InvTensor {
    let k = t.k;
    if k < 2 {
        return t.clone();
    }
    let mut shuffled = InvTensor::zero(k);
    let mut cur = t.clone();
    for i in 0..k {
        if i > 0 {
            // σ_1 ⋯ σ_i: the rightmost factor acts first
            cur = t.clone();
            for j in (0..i).rev() {
                cur = apply_sigma(&cur, j);
            }
        }
        let sign = Scalar::from_int(if i % 2 == 0 { 1 } else { -1 });
        shuffled = shuffled.add(&cur.scale(&sign));
    }
    let block = 4usize.pow((k - 1) as u32);
    let mut out = InvTensor::zero(k);
    for lead in 0..4 {
        let tail = InvTensor { k: k - 1, v: shuffled.v[lead * block..(lead + 1) * block].to_vec() };
        if tail.is_zero() {
            continue;
        }
        let r = antisymmetrize_recursive(&tail);
        out.v[lead * block..(lead + 1) * block].clone_from_slice(&r.v);
    }
    out
}

static ANTISYM_BASIS: Lazy<Vec<InvTensor>> = Lazy::new(|| {
    (0..16u8).map(|m| antisymmetrize(&InvTensor::basis(&mask_indices(m)))).collect()
});

/// Tensor representative `𝔄^{(k)}(e_I)` of the ordered monomial `ω_I`.
pub fn mask_tensor(mask: Mask) -> InvTensor {
    ANTISYM_BASIS[mask as usize].clone()
}

/// Tensor representative of a homogeneous invariant form.
pub fn form_tensor(coeffs: &BTreeMap<Mask, Scalar>, k: u32) -> InvTensor {
    let mut t = InvTensor::zero(k as usize);
    for (m, c) in coeffs {
        assert_eq!(mask_degree(*m), k, "inhomogeneous form");
        t = t.add(&mask_tensor(*m).scale(c));
    }
    t
}

/// Inverse of [`form_tensor`] on the range of `𝔄^{(k)}`.
pub fn tensor_form(t: &InvTensor) -> Option<BTreeMap<Mask, Scalar>> {
    let masks = masks_of_degree(t.k as u32);
    let cols: Vec<Vec<Scalar>> = masks.iter().map(|m| mask_tensor(*m).v).collect();
    let x = linalg::solve_in_span(&cols, &t.v)?;
    Some(masks.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect())
}

/// Full matrix of `𝔄^{(k)}` as columns.
pub fn antisymmetrizer_columns(k: usize) -> Vec<Vec<Scalar>> {
    (0..4usize.pow(k as u32)).map(|i| antisymmetrize(&InvTensor::basis(&InvTensor::word_of(k, i))).v).collect()
}

pub fn antisymmetrizer_rank(k: usize) -> usize {
    linalg::rank(&antisymmetrizer_columns(k))
}

// ---------------------------------------------------------------------------
// Named invariant bases

/// An invariant basis form together with its antisymmetrizer eigenvalue.
#[derive(Clone, Debug)]
pub struct NamedForm {
    pub name: &'static str,
    pub coeffs: BTreeMap<Mask, Scalar>,
    pub eigenvalue: Scalar,
}

impl NamedForm {
    pub fn form(&self) -> Form {
        Form::from_invariant(&self.coeffs)
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().next().map(|m| mask_degree(*m)).unwrap_or(0)
    }
}

fn invariant_of(f: &Form) -> BTreeMap<Mask, Scalar> {
    f.invariant_coeffs().expect("named basis forms are invariant")
}

/// The eigenbasis of the antisymmetrizers in every degree.
pub fn named_basis() -> Vec<NamedForm> {
    use Idx::*;
    let w = |a: Idx, b: Idx| Form::word(&[a, b]);
    let w3 = |a: Idx, b: Idx, c: Idx| Form::word(&[a, b, c]);
    let one = Scalar::one();
    let q2 = Scalar::q_pow(2);
    let qi2 = Scalar::q_pow(-2);
    let up = &one + &q2;
    let down = &one + &qi2;
    let chi = Scalar::from_int(2) * (&one + &q2 + qi2.clone());
    // 2(q^2 + 1 + q^-2)(q + q^-1)^2
    let top = chi.clone() * (Scalar::q() + Scalar::q_pow(-1)).pow(2);
    let mut out = vec![NamedForm { name: "1", coeffs: invariant_of(&Form::basis(0)), eigenvalue: one.clone() }];
    for (name, a) in [("w-", Minus), ("w+", Plus), ("wz", Z), ("w0", Zero)] {
        out.push(NamedForm { name, coeffs: invariant_of(&Form::omega(a)), eigenvalue: one.clone() });
    }
    let two: Vec<(&'static str, Form, Scalar)> = vec![
        ("phi0", w(Minus, Zero), up.clone()),
        ("phiz", w(Minus, Zero) + w(Minus, Z).scale(&(&one - &qi2)), down.clone()),
        ("psi0", w(Plus, Zero), down.clone()),
        ("psiz", w(Plus, Zero) - w(Plus, Z).scale(&(&one - &q2)), up.clone()),
        ("psi+", w(Zero, Z) + w(Minus, Plus).scale(&(&one - &q2)), up),
        ("psi-", w(Zero, Z) + w(Minus, Plus).scale(&(&one - &qi2)), down),
    ];
    for (name, f, ev) in two {
        out.push(NamedForm { name, coeffs: invariant_of(&f), eigenvalue: ev });
    }
    let three = [
        ("chi-", w3(Plus, Zero, Z)),
        ("chi+", w3(Minus, Zero, Z)),
        ("chi0", w3(Minus, Plus, Z)),
        ("chiz", w3(Minus, Plus, Zero)),
    ];
    for (name, f) in three {
        out.push(NamedForm { name, coeffs: invariant_of(&f), eigenvalue: chi.clone() });
    }
    out.push(NamedForm { name: "mu", coeffs: invariant_of(&Form::mu()), eigenvalue: top });
    out
}

pub fn named(name: &str) -> Option<NamedForm> {
    named_basis().into_iter().find(|n| n.name == name)
}

#[cfg(test)]
#[path = "exterior_tests.rs"]
mod tests;
