//! Exact computer algebra for an extended affine Lie algebra of nullity 2
//! built on the quaternion torus, and a verifier for a pair of
//! non-conjugate maximal abelian diagonalizable subalgebras (MADs) in it.
//!
//! Layers, bottom up:
//!
//! * [`scalar`]: exact arithmetic in Q(sqrt 2);
//! * [`torus`]: the quaternion torus `Q` over Laurent polynomials;
//! * [`matrix`]: `gl_2(Q)`, `sl_2(Q)` and the sl2 membership criterion;
//! * [`lie_torus`]: root/degree grading of `sl_2(Q)` and its invariant form;
//! * [`eala`]: the algebra `E = L (+) C (+) D`, its cocycle, bracket, form and
//!   standard MAD;
//! * [`counterexample`]: the section of `m`, the involution `S`, and the
//!   checks around it;
//! * [`verify`]: seeded verification suites and report output.

pub mod counterexample;
pub mod eala;
pub mod error;
pub mod lie_torus;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod torus;
pub mod verify;

pub use eala::{form_e, EalaElement, StandardMad, Theta};
pub use error::{AlgebraError, Result};
pub use matrix::{is_in_sl2, LieTorusElement, Matrix2};
pub use scalar::{Rational, Scalar};
pub use torus::{Degree, TorusElement};
