//! Exact symbolic engine for torus GIT quotients of Richardson varieties
//! in the Grassmannian G(r, n) with n = qr + 1.
//!
//! The crate is organized around the objects that appear in the quotient
//! computation:
//!
//! * [`weyl`] — index combinatorics on I(r, n): Bruhat order, the weight-sign
//!   predicates that single out the extremal coset representatives, and the
//!   one-line constructions for them.
//! * [`tableau`] — rectangular standard Young tableaux, torus invariance,
//!   enumeration of the invariant section basis, and the sequence-family
//!   bijection.
//! * [`poly`] — sparse multivariate polynomials over the Deodhar chart
//!   coordinates with arbitrary-precision integer coefficients.
//! * [`deodhar`] — the explicit chart matrix, Plücker restrictions, and the
//!   common/non-common factorization certificates.
//! * [`quotient`] — the homogeneous quotient coordinates, algebraic
//!   independence certification, and identification with a product of
//!   projective spaces.

pub mod deodhar;
pub mod error;
pub mod poly;
pub mod quotient;
pub mod rng;
pub mod tableau;
pub mod weyl;

pub use error::Error;
pub use weyl::{GrassmannianContext, ParamM, PluckerIndex};
