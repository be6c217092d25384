//! The element `y = [S, d_theta]`, its eigen-decomposition, the corrected
//! derivation `d' = d_theta - y_2/2 + y_-2/2`, and the cocycle identity that
//! makes `S` diagonalizable on the core.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::eala::{EalaElement, Theta};
use crate::error::{AlgebraError, Result};
use crate::lie_torus::{degree_component, graded_basis};
use crate::matrix::LieTorusElement;
use crate::scalar::Scalar;
use crate::verify::report::VerificationReport;

use super::involution::SElement;

/// `y = y_0 + y_2 + y_-2` with `y_lambda` in the `lambda`-eigenspace of `ad S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDecomposition {
    pub y: LieTorusElement,
    pub y0: LieTorusElement,
    pub y2: LieTorusElement,
    pub ym2: LieTorusElement,
}

/// Compute `y = [S, d_theta]_E = -d_theta(S)` and split it. Fails with
/// [`AlgebraError::Y0NonZero`] if the 0-component survives.
pub fn compute_y(s: &SElement, theta: &Theta) -> Result<YDecomposition> {
    for d in s.matrix().matrix().support() {
        s.eigen_decomposition(&degree_component(s.matrix(), d))?;
    }
    let bracket = theta.bracket(&EalaElement::from_l(s.matrix().clone()), &EalaElement::derivation());
    debug_assert!(bracket.c.is_zero() && bracket.d.is_zero());
    let y = bracket.l;
    let parts = s.eigen_decomposition(&y)?;
    if !parts.zero.is_zero() {
        return Err(AlgebraError::Y0NonZero(parts.zero.to_string()));
    }
    Ok(YDecomposition { y, y0: parts.zero, y2: parts.plus, ym2: parts.minus })
}

/// `d' = d_theta - y_2/2 + y_-2/2`, commuting with `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPrime {
    element: EalaElement,
}

impl DPrime {
    pub fn element(&self) -> &EalaElement {
        &self.element
    }
}

/// `S` as an element of `E`.
pub fn s_in_e(s: &SElement) -> EalaElement {
    EalaElement::from_l(s.matrix().clone())
}

/// Build `d'` and check `[S, d']_E = 0` in all three components.
pub fn build_d_prime(s: &SElement, yd: &YDecomposition, theta: &Theta) -> Result<DPrime> {
    let half = Scalar::frac(1, 2);
    let l = &yd.ym2.scale(&half) - &yd.y2.scale(&half);
    let element = EalaElement::new(l, Scalar::zero(), num_traits::One::one());
    let b = theta.bracket(&s_in_e(s), &element);
    if !b.is_zero() {
        return Err(AlgebraError::DPrimeBracketNonZero(b.to_string()));
    }
    Ok(DPrime { element })
}

/// `sigma(S, y_-2 - y_2)`, the central term in `[S, d']`.
pub fn central_term(s: &SElement, yd: &YDecomposition, theta: &Theta) -> Scalar {
    theta.cocycle(s.matrix(), &(&yd.ym2 - &yd.y2))
}

/// Pairwise brackets among `S`, `c`, `d'` vanish.
pub fn abelian_seed_check(s: &SElement, dp: &DPrime, theta: &Theta) -> VerificationReport {
    let seed = [s_in_e(s), EalaElement::central(), dp.element().clone()];
    let mut witness = None;
    let mut cases = 0;
    for i in 0..seed.len() {
        for j in i..seed.len() {
            cases += 1;
            let b = theta.bracket(&seed[i], &seed[j]);
            if witness.is_none() && !b.is_zero() {
                witness = Some(format!("{} ; {}", seed[i], seed[j]));
            }
        }
    }
    VerificationReport::from_witness("lemmas.abelian_seed", 0, cases, witness)
}

/// An eigenvector of `ad S` with its eigenvalue.
#[derive(Clone, Debug)]
pub struct Eigenvector {
    pub eigenvalue: i32,
    pub vector: LieTorusElement,
}

/// Nonzero eigencomponents of every graded basis element in the box.
pub fn eigenvectors_in_box(s: &SElement, radius: i32) -> Result<Vec<Eigenvector>> {
    let per_element: Vec<Result<Vec<Eigenvector>>> = graded_basis(radius)
        .par_iter()
        .map(|b| {
            let parts = s.eigen_decomposition(&b.element)?;
            Ok(parts
                .labelled()
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(eigenvalue, v)| Eigenvector { eigenvalue, vector: v.clone() })
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for r in per_element {
        out.extend(r?);
    }
    Ok(out)
}

/// `sigma(S, [l_alpha, l_beta]) = (alpha + beta) sigma(l_alpha, l_beta)`.
pub fn lemma1_identity_holds(s: &SElement, theta: &Theta, x: &Eigenvector, y: &Eigenvector) -> bool {
    let lhs = theta.cocycle(s.matrix(), &x.vector.bracket(&y.vector));
    let rhs = Scalar::from_int((x.eigenvalue + y.eigenvalue).into()) * theta.cocycle(&x.vector, &y.vector);
    lhs == rhs
}

/// Check the identity on `samples` seeded random pairs of eigenvectors
/// obtained from the graded basis of the box.
pub fn lemma1_cocycle_check(
    s: &SElement,
    theta: &Theta,
    radius: i32,
    samples: u64,
    rng: &mut ChaCha8Rng,
) -> VerificationReport {
    const ID: &str = "lemmas.lemma1";
    let vectors = match eigenvectors_in_box(s, radius) {
        Ok(v) => v,
        Err(e) => return VerificationReport::fail(ID, radius, 0, e.to_string()),
    };
    if vectors.is_empty() {
        return VerificationReport::pass(ID, radius, 0);
    }
    let pairs: Vec<(&Eigenvector, &Eigenvector)> = (0..samples)
        .map(|_| (vectors.choose(rng).expect("nonempty"), vectors.choose(rng).expect("nonempty")))
        .collect();
    let witness = pairs
        .par_iter()
        .find_first(|(x, y)| !lemma1_identity_holds(s, theta, x, y))
        .map(|(x, y)| format!("{} ; {}", x.vector, y.vector));
    VerificationReport::from_witness(ID, radius, samples, witness)
}

/// Deterministic generator for a named check.
pub fn check_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
