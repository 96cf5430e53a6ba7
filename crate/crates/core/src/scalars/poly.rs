//! Dense univariate polynomials in `s` over arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial with coefficient `c[i]` on `s^i`. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<BigRational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.c.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(r: BigRational) -> Self {
        Self::from_coeffs(vec![r])
    }

    /// `r * s^k`
    pub fn monomial(r: BigRational, k: usize) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = r;
        Poly { c }
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigRational> {
        self.c.last()
    }

    /// Lowest power of `s` with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    /// `Some(k)` if the polynomial is exactly `s^k`.
    pub fn as_pure_power(&self) -> Option<usize> {
        let d = self.degree()?;
        if self.c[d].is_one() && self.order() == Some(d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            c.push(v);
        }
        Self::from_coeffs(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, r: &BigRational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Multiply by `s^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Drop the coefficients below `s^k` and divide by `s^k`.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly { c: self.c.iter().skip(k).cloned().collect() }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        if let Some(k) = d.as_pure_power() {
            let lo = Poly::from_coeffs(self.c.iter().take(k).cloned().collect());
            return (self.shift_down(k.min(self.c.len())), lo);
        }
        let inv_lc = d.c[dd].recip();
        let mut r = self.c.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &inv_lc;
            for j in 0..=dd {
                if !d.c[j].is_zero() {
                    let t = &f * &d.c[j];
                    r[i - dd + j] -= t;
                }
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Exact division; panics (debug) if there is a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.lc() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (gcd(0,0) = 0).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        if let Some(k) = b.as_pure_power() {
            return Poly::monomial(BigRational::one(), k.min(a.order().unwrap()));
        }
        if let Some(k) = a.as_pure_power() {
            return Poly::monomial(BigRational::one(), k.min(b.order().unwrap()));
        }
        // Pull out common powers of s first; the remaining gcd is then s-free.
        let k = a.order().unwrap().min(b.order().unwrap());
        let mut x = a.shift_down(a.order().unwrap()).monic();
        let mut y = b.shift_down(b.order().unwrap()).monic();
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r.monic();
        }
        x.monic().shift_up(k)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Leading coefficient sign, used for canonical sign choices.
    pub fn lc_is_negative(&self) -> bool {
        self.lc().is_some_and(|l| l.is_negative())
    }
}
