//! Exact coefficient tower: Q(s) with `s = q^{1/2}`, the Gaussian extension by `i`,
//! and formal square roots registered by name.

mod gauss;
mod poly;
mod ratfunc;
mod roots;
mod scalar;

pub use gauss::GaussScalar;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use roots::{fresh_root, lookup_root, register_root, registry_snapshot, root_name, root_square, RootId, RootRegistry};
pub use scalar::{Complex, RootSet, Scalar};

use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("pole at s = {0}")]
    Pole(String),
    #[error("root value for `{0}` does not square to its defining value")]
    InconsistentRoot(String),
    #[error("no value supplied for root `{0}`")]
    MissingRootValue(String),
    #[error("root `{0}` is already registered with a different square")]
    DuplicateRoot(String),
    #[error("root `{0}` would have a zero square")]
    ZeroSquare(String),
    #[error("`{0}` is not a usable root name")]
    BadRootName(String),
}

/// A half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(pub i64);

impl Half {
    pub fn from_int(n: i64) -> Self {
        Half(2 * n)
    }

    /// Twice the value.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }

    pub fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    /// Integer value, if integral.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `[x] = (q^x - q^{-x})/(q - q^{-1})` with `q = s^2`.
pub fn qnum(x: Half) -> RationalFunction {
    let h = x.twice();
    if h == 0 {
        return RationalFunction::zero();
    }
    if h < 0 {
        return qnum(Half(-h)).neg();
    }
    // (s^h - s^-h)/(s^2 - s^-2) = s^{2-h} (s^{2h} - 1)/(s^4 - 1)
    let one = BigRational::one();
    let num = Poly::monomial(one.clone(), 2 * h as usize).sub(&Poly::one());
    let den = Poly::monomial(one, 4).sub(&Poly::one());
    let base = RationalFunction::new(num, den).expect("nonzero denominator");
    base.mul(&RationalFunction::s_pow(2 - h))
}
