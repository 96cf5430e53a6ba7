//! Exact symbolic engine for the 4D+ bicovariant differential calculus on the quantum
//! group SU_q(2) and its restriction to the standard Podleś sphere.
//!
//! All coefficients live in Q(s)[i] with `s = q^{1/2}`, extended by formal square roots,
//! so every identity is checked by exact equality.

pub mod algebra;
pub mod bundle;
pub mod envelope;
pub mod exterior;
pub mod hodge;
pub mod laplacians;
pub mod linalg;
pub mod scalars;
pub mod sphere;

pub use scalars::{qnum, Complex, GaussScalar, Half, RationalFunction, Scalar, ScalarError};
pub use algebra::{AlgElement, AlgTensor, AlgebraError, Gen, Monomial};
pub use envelope::{act_left, act_right, pair, phi_basis, Idx, Pbw, Side, UqElement, UqTensor};
pub use exterior::{Form, InvTensor, Mask, NamedForm, RightForm};
pub use hodge::{ContractionParams, HodgeError};
pub use sphere::{SphereError, SphereForm, SphereHodge};
pub use laplacians::{DiracCheck, LaplaceError, Space};
pub use bundle::{BundleError, GaugeData, Ket, U1Element, U1Form};
