//! Gaussian extension Q(s)[i].

use super::ratfunc::RationalFunction;
use super::ScalarError;
use std::fmt;

/// `re + i*im` with `i^2 = -1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussScalar {
    pub re: RationalFunction,
    pub im: RationalFunction,
}

impl fmt::Debug for GaussScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<RationalFunction> for GaussScalar {
    fn from(re: RationalFunction) -> Self {
        GaussScalar { re, im: RationalFunction::zero() }
    }
}

impl GaussScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        RationalFunction::one().into()
    }

    pub fn i() -> Self {
        GaussScalar { re: RationalFunction::zero(), im: RationalFunction::one() }
    }

    pub fn new(re: RationalFunction, im: RationalFunction) -> Self {
        GaussScalar { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussScalar { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussScalar { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        GaussScalar { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return self.re.mul(&o.re).into();
        }
        GaussScalar {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, r: &RationalFunction) -> Self {
        GaussScalar { re: self.re.mul(r), im: self.im.mul(r) }
    }

    pub fn conj(&self) -> Self {
        GaussScalar { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.im.is_zero() {
            return Ok(self.re.inv()?.into());
        }
        let n = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let ni = n.inv()?;
        Ok(GaussScalar { re: self.re.mul(&ni), im: self.im.neg().mul(&ni) })
    }
}

impl fmt::Display for GaussScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            (false, false) => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}
