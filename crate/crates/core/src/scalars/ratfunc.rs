//! The field Q(s) of rational functions in `s = q^{1/2}`.

use super::poly::Poly;
use super::ScalarError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// A reduced fraction `num/den` with monic `den` and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        RationalFunction { num: Poly::constant(r), den: Poly::one() }
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunction { num: Poly::monomial(BigRational::one(), k as usize), den: Poly::one() }
        } else {
            RationalFunction { num: Poly::one(), den: Poly::monomial(BigRational::one(), (-k) as usize) }
        }
    }

    /// `q^k = s^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::s_pow(2 * k)
    }

    /// Laurent polynomial `sum c_i s^{lo + i}`.
    pub fn laurent(lo: i64, coeffs: &[i64]) -> Self {
        let p = Poly::from_i64s(coeffs);
        if lo >= 0 {
            Self::from_parts_unchecked(p.shift_up(lo as usize), Poly::one())
        } else {
            Self::new(p, Poly::monomial(BigRational::one(), (-lo) as usize)).expect("nonzero")
        }
    }

    /// Build and reduce `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn from_parts_unchecked(num: Poly, den: Poly) -> Self {
        RationalFunction { num, den }
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        if let Some(l) = d.lc() {
            if !l.is_one() {
                let inv = l.recip();
                n = n.scale(&inv);
                d = d.scale(&inv);
            }
        }
        RationalFunction { num: n, den: d }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant value, if the function is a rational number.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        let g = Poly::gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g);
        let d2 = o.den.div_exact(&g);
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = d1.mul(&o.den);
        if g.is_one() {
            // Already coprime: gcd(n1 d2 + n2 d1, d1 d2) = 1 when dens are coprime.
            let l = den.lc().unwrap().recip();
            return RationalFunction { num: num.scale(&l), den: den.scale(&l) };
        }
        Self::reduce(num, den)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1) };
        let d2 = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1) };
        let n2 = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2) };
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let l = den.lc().unwrap().clone();
        if l.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = l.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(r), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation at `s = s0`.
    pub fn eval(&self, s0: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(s0);
        if d.is_zero() {
            return Err(ScalarError::Pole(s0.to_string()));
        }
        Ok(self.num.eval(s0) / d)
    }

    fn render_poly(p: &Poly, shift: i64, out: &mut String) {
        let mut first = true;
        for (i, c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = i as i64 - shift;
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let coef = if a.denom().is_one() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            match (a.is_one(), e) {
                (_, 0) => out.push_str(&coef),
                (true, 1) => out.push('s'),
                (true, _) => out.push_str(&format!("s^{}", e)),
                (false, 1) => out.push_str(&format!("{}*s", coef)),
                (false, _) => out.push_str(&format!("{}*s^{}", coef, e)),
            }
        }
        if first {
            out.push('0');
        }
    }

    /// `true` if the value is a single term, so no brackets are needed in products.
    pub fn is_atomic(&self) -> bool {
        self.den.as_pure_power().is_some() && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if let Some(k) = self.den.as_pure_power() {
            Self::render_poly(&self.num, k as i64, &mut out);
        } else {
            out.push('(');
            Self::render_poly(&self.num, 0, &mut out);
            out.push_str(")/(");
            Self::render_poly(&self.den, 0, &mut out);
            out.push(')');
        }
        f.write_str(&out)
    }
}
