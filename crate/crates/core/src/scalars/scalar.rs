//! Scalars: Q(s)[i] extended by registered formal square roots.

use super::gauss::GaussScalar;
use super::ratfunc::RationalFunction;
use super::roots::{root_name, root_square, RootId};
use super::{qnum, Half, ScalarError};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Square-free product of root symbols, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RootSet(Vec<RootId>);

impl RootSet {
    pub fn empty() -> Self {
        RootSet(Vec::new())
    }

    pub fn single(r: RootId) -> Self {
        RootSet(vec![r])
    }

    pub fn ids(&self) -> &[RootId] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Product of two root monomials: symmetric difference plus the shared roots.
    fn product(&self, o: &RootSet) -> (RootSet, Vec<RootId>) {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        let mut shared = Vec::new();
        while i < self.0.len() || j < o.0.len() {
            match (self.0.get(i), o.0.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    shared.push(*a);
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    out.push(*a);
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(*a);
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        (RootSet(out), shared)
    }
}

/// Finite sum of `GaussScalar * (root monomial)` terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(RootSet, GaussScalar)>,
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<RationalFunction> for Scalar {
    fn from(r: RationalFunction) -> Self {
        GaussScalar::from(r).into()
    }
}

impl From<GaussScalar> for Scalar {
    fn from(g: GaussScalar) -> Self {
        if g.is_zero() {
            Scalar::zero()
        } else {
            Scalar { terms: vec![(RootSet::empty(), g)] }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// Exact complex rational value produced by [`Scalar::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: BigRational,
    pub im: BigRational,
}

impl Complex {
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunction::from_int(n).into()
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        RationalFunction::from_ratio(n, d).into()
    }

    pub fn from_rational(r: BigRational) -> Self {
        RationalFunction::from_rational(r).into()
    }

    pub fn s() -> Self {
        Self::s_pow(1)
    }

    pub fn q() -> Self {
        Self::s_pow(2)
    }

    pub fn s_pow(k: i64) -> Self {
        RationalFunction::s_pow(k).into()
    }

    pub fn q_pow(k: i64) -> Self {
        RationalFunction::s_pow(2 * k).into()
    }

    /// `q - q^{-1}`
    pub fn qdiff() -> Self {
        RationalFunction::laurent(-2, &[-1, 0, 0, 0, 1]).into()
    }

    /// q-number `[x]` for a half-integer `x`.
    pub fn qnum(x: Half) -> Self {
        qnum(x).into()
    }

    /// `[n]` for an integer `n`.
    pub fn qint(n: i64) -> Self {
        qnum(Half::from_int(n)).into()
    }

    pub fn i() -> Self {
        GaussScalar::i().into()
    }

    pub fn root(r: RootId) -> Self {
        Scalar { terms: vec![(RootSet::single(r), GaussScalar::one())] }
    }

    pub fn terms(&self) -> &[(RootSet, GaussScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_empty() && self.terms[0].1.is_one()
    }

    /// The root-free part, if there are no root terms.
    pub fn as_gauss(&self) -> Option<GaussScalar> {
        match self.terms.as_slice() {
            [] => Some(GaussScalar::zero()),
            [(r, g)] if r.is_empty() => Some(g.clone()),
            _ => None,
        }
    }

    /// The value as a real rational function, if it is one.
    pub fn as_rational_function(&self) -> Option<RationalFunction> {
        self.as_gauss().filter(|g| g.is_real()).map(|g| g.re)
    }

    /// `true` when every term carries an even number of root symbols.
    pub fn is_root_even(&self) -> bool {
        self.terms.iter().all(|(r, _)| r.len() % 2 == 0)
    }

    pub fn is_root_free(&self) -> bool {
        self.terms.iter().all(|(r, _)| r.is_empty())
    }

    fn from_map(m: BTreeMap<RootSet, GaussScalar>) -> Self {
        Scalar { terms: m.into_iter().filter(|(_, g)| !g.is_zero()).collect() }
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 && self.terms[0].0 == o.terms[0].0 {
            let g = self.terms[0].1.add(&o.terms[0].1);
            if g.is_zero() {
                return Scalar::zero();
            }
            return Scalar { terms: vec![(self.terms[0].0.clone(), g)] };
        }
        let mut m: BTreeMap<RootSet, GaussScalar> = self.terms.iter().cloned().collect();
        for (r, g) in &o.terms {
            let e = m.entry(r.clone()).or_default();
            *e = e.add(g);
        }
        Self::from_map(m)
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(r, g)| (r.clone(), g.neg())).collect() }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 && self.terms[0].0.is_empty() {
            return Scalar { terms: vec![(o.terms[0].0.clone(), self.terms[0].1.mul(&o.terms[0].1))] };
        }
        let mut m: BTreeMap<RootSet, GaussScalar> = BTreeMap::new();
        for (r1, g1) in &self.terms {
            for (r2, g2) in &o.terms {
                let (r, shared) = r1.product(r2);
                let mut g = g1.mul(g2);
                for id in shared {
                    g = g.mul(&root_square(id));
                }
                let e = m.entry(r).or_default();
                *e = e.add(&g);
            }
        }
        Self::from_map(m)
    }

    /// Multiply by a rational function.
    pub fn scale(&self, r: &RationalFunction) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, g)| (k.clone(), g.scale(r))).collect() }
    }

    /// Complex conjugation: `i -> -i`, roots and `s` fixed.
    pub fn conj(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(r, g)| (r.clone(), g.conj())).collect() }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self.terms.as_slice() {
            [] => Err(ScalarError::DivisionByZero),
            [(r, g)] => {
                // (g * prod rho)^{-1} = g^{-1} * prod (rho / square(rho))
                let mut acc = g.inv()?;
                for id in r.ids() {
                    acc = acc.mul(&root_square(*id).inv()?);
                }
                Ok(Scalar { terms: vec![(r.clone(), acc)] })
            }
            _ => self.inv_general(),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul_ref(&o.inv()?))
    }

    /// Solve `x * y = 1` in the finite-dimensional algebra spanned by the roots in the support.
    fn inv_general(&self) -> Result<Scalar, ScalarError> {
        let mut ids: Vec<RootId> = self.terms.iter().flat_map(|(r, _)| r.ids().iter().copied()).collect();
        ids.sort();
        ids.dedup();
        let n = 1usize << ids.len();
        let basis: Vec<RootSet> = (0..n)
            .map(|mask| RootSet(ids.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, id)| *id).collect()))
            .collect();
        let index: BTreeMap<RootSet, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        // Column j of the matrix is self * basis[j].
        let mut mat = vec![vec![GaussScalar::zero(); n + 1]; n];
        for (j, b) in basis.iter().enumerate() {
            let prod = self.mul_ref(&Scalar { terms: vec![(b.clone(), GaussScalar::one())] });
            for (r, g) in prod.terms {
                mat[index[&r]][j] = g;
            }
        }
        mat[index[&RootSet::empty()]][n] = GaussScalar::one();
        let sol = solve_gauss(mat).ok_or(ScalarError::NotInvertible)?;
        let mut m = BTreeMap::new();
        for (b, g) in basis.into_iter().zip(sol) {
            m.insert(b, g);
        }
        Ok(Self::from_map(m))
    }

    /// Exact evaluation at `s = s0` with numeric values for the root symbols.
    pub fn specialize(&self, s0: &BigRational, roots: &BTreeMap<String, BigRational>) -> Result<Complex, ScalarError> {
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        for (r, g) in &self.terms {
            let mut factor = BigRational::one();
            for id in r.ids() {
                let name = root_name(*id);
                let v = roots.get(&name).ok_or_else(|| ScalarError::MissingRootValue(name.clone()))?;
                let sq = root_square(*id);
                let sq_re = sq.re.eval(s0)?;
                let sq_im = sq.im.eval(s0)?;
                if !sq_im.is_zero() || (v * v) != sq_re {
                    return Err(ScalarError::InconsistentRoot(name));
                }
                factor *= v;
            }
            re += g.re.eval(s0)? * &factor;
            im += g.im.eval(s0)? * &factor;
        }
        Ok(Complex { re, im })
    }

    /// Evaluate a root-free scalar at `s = s0`.
    pub fn eval(&self, s0: &BigRational) -> Result<Complex, ScalarError> {
        self.specialize(s0, &BTreeMap::new())
    }
}

/// Gauss–Jordan elimination on an augmented `n x (n+1)` matrix over Q(s)[i].
fn solve_gauss(mut m: Vec<Vec<GaussScalar>>) -> Option<Vec<GaussScalar>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inv().ok()?;
        for k in col..=n {
            m[col][k] = m[col][k].mul(&inv);
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let t = f.mul(&m[col][k]);
                    m[r][k] = m[r][k].sub(&t);
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (r, g)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let names: Vec<String> = r.ids().iter().map(|id| root_name(*id)).collect();
            if r.is_empty() {
                if self.terms.len() == 1 {
                    write!(f, "{}", g)?;
                } else {
                    write!(f, "({})", g)?;
                }
            } else if g.is_one() {
                f.write_str(&names.join("*"))?;
            } else {
                write!(f, "({})*{}", g, names.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
    };
}

impl Scalar {
    fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_ref(o);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = self.add_ref(&o);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.sub_ref(o);
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self = self.sub_ref(&o);
    }
}

