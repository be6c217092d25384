//! The idempotent `p = q m`, the involution `S = 2p - I`, and the spectral
//! checks on `ad S`.

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::lie_torus::graded_basis;
use crate::matrix::{is_in_sl2, LieTorusElement, Matrix2};
use crate::scalar::Scalar;
use crate::verify::report::VerificationReport;

use super::section::{one_plus_i, one_plus_j, Section};

/// Matrix of `p = q m`: `[[a(1+i), -a(1+j)], [b(1+i), -b(1+j)]]`.
pub fn build_projection(section: &Section) -> Matrix2 {
    let (pi, pj) = (one_plus_i(), one_plus_j());
    let (a, b) = (section.a(), section.b());
    Matrix2::new(a * &pi, -(a * &pj), b * &pi, -(b * &pj))
}

/// The matrix of the involution `s`: `-1` on `W = ker m`, `+1` on the image of
/// the section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SElement {
    matrix: LieTorusElement,
}

impl SElement {
    pub fn matrix(&self) -> &LieTorusElement {
        &self.matrix
    }

    /// Build `S = 2p - I` from an idempotent `p`.
    pub fn from_projection(p: &Matrix2) -> Result<Self> {
        if &(p * p) != p {
            return Err(AlgebraError::InvalidParameter(format!("projection is not idempotent: {p}")));
        }
        let s = p.scale(&Scalar::from_int(2)) - Matrix2::identity();
        if !is_in_sl2(&s) {
            return Err(AlgebraError::NotInSl2(s.to_string()));
        }
        debug_assert_eq!(&s * &s, Matrix2::identity());
        Ok(SElement { matrix: LieTorusElement::new(s)? })
    }

    /// Wrap an arbitrary involution in `sl_2(Q)`, e.g. `diag(1, -1)`.
    pub fn from_involution(m: Matrix2) -> Result<Self> {
        if &m * &m != Matrix2::identity() {
            return Err(AlgebraError::InvalidParameter(format!("not an involution: {m}")));
        }
        Ok(SElement { matrix: LieTorusElement::new(m)? })
    }

    /// `ad S (x) = [S, x]`.
    pub fn ad(&self, x: &LieTorusElement) -> LieTorusElement {
        self.matrix.bracket(x)
    }

    /// `(ad S)(ad S - 2)(ad S + 2) x = (ad S)^3 x - 4 (ad S) x`.
    pub fn cubic(&self, x: &LieTorusElement) -> LieTorusElement {
        let a1 = self.ad(x);
        let a3 = self.ad(&self.ad(&a1));
        a3 - a1.scale(&Scalar::from_int(4))
    }

    /// The components `(P_0 x, P_2 x, P_-2 x)` of `x` in the eigenspaces of
    /// `ad S`, from the Lagrange projectors of `t(t-2)(t+2)`:
    /// `P_0 = 1 - A^2/4`, `P_2 = (A^2 + 2A)/8`, `P_-2 = (A^2 - 2A)/8`.
    pub fn eigen_decomposition(&self, x: &LieTorusElement) -> Result<EigenParts> {
        let a1 = self.ad(x);
        let a2 = self.ad(&a1);
        let a3 = self.ad(&a2);
        if !(&a3 - &a1.scale(&Scalar::from_int(4))).is_zero() {
            return Err(AlgebraError::CubicFailed(x.to_string()));
        }
        let eighth = Scalar::frac(1, 8);
        let quarter = Scalar::frac(1, 4);
        let twice_a1 = a1.scale(&Scalar::from_int(2));
        let zero = x - &a2.scale(&quarter);
        let plus = (&a2 + &twice_a1).scale(&eighth);
        let minus = (&a2 - &twice_a1).scale(&eighth);
        let parts = EigenParts { zero, plus, minus };
        for (lambda, part) in parts.labelled() {
            if self.ad(part) != part.scale(&Scalar::from_int(lambda.into())) {
                return Err(AlgebraError::CubicFailed(x.to_string()));
            }
        }
        Ok(parts)
    }

    /// `P_lambda x` for `lambda` in `{0, 2, -2}`.
    pub fn eigenprojection(&self, lambda: i32, x: &LieTorusElement) -> Result<LieTorusElement> {
        let parts = self.eigen_decomposition(x)?;
        match lambda {
            0 => Ok(parts.zero),
            2 => Ok(parts.plus),
            -2 => Ok(parts.minus),
            other => Err(AlgebraError::BadRootIndex(other)),
        }
    }
}

/// Eigencomponents of an element under `ad S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenParts {
    pub zero: LieTorusElement,
    pub plus: LieTorusElement,
    pub minus: LieTorusElement,
}

impl EigenParts {
    /// `(eigenvalue, component)` pairs in the order 0, 2, -2.
    pub fn labelled(&self) -> [(i32, &LieTorusElement); 3] {
        [(0, &self.zero), (2, &self.plus), (-2, &self.minus)]
    }

    pub fn sum(&self) -> LieTorusElement {
        &(&self.zero + &self.plus) + &self.minus
    }
}

/// Sweep the cubic annihilation identity over the graded basis of the box.
pub fn ad_cubic_check(s: &SElement, radius: i32) -> VerificationReport {
    let basis = graded_basis(radius);
    let witness = basis.par_iter().find_first(|b| !s.cubic(&b.element).is_zero()).map(|b| b.element.to_string());
    VerificationReport::from_witness("spectrum.ad_cubic", radius, basis.len() as u64, witness)
}
