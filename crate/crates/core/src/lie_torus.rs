//! The double grading of `sl_2(Q)` by root and degree, and its invariant form.
//!
//! Root 2 lives in the upper-right entry, root -2 in the lower-left, root 0 on
//! the diagonal. For a degree `(a, b)` with monomial `m = i^a j^b` the graded
//! pieces are spanned by
//!
//! * root 0: `diag(m, -m)`, plus `diag(m, m)` unless both exponents are even;
//! * root 2: `E12(m)`;
//! * root -2: `E21(m)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::linalg::determinant;
use crate::matrix::{LieTorusElement, Matrix2};
use crate::scalar::Scalar;
use crate::torus::{Degree, TorusElement};

pub const ROOTS: [i32; 3] = [-2, 0, 2];

/// Index `(root, degree)` of a graded piece of `sl_2(Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedIndex {
    pub degree: Degree,
    pub root: i32,
}

impl GradedIndex {
    pub fn new(root: i32, degree: Degree) -> Result<Self> {
        check_root(root)?;
        Ok(GradedIndex { degree, root })
    }

    /// The index of the partner piece in the form pairing.
    pub fn dual(self) -> Result<Self> {
        Ok(GradedIndex { degree: self.degree.checked_neg()?, root: -self.root })
    }
}

impl fmt::Display for GradedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.degree, self.root)
    }
}

fn check_root(root: i32) -> Result<()> {
    if ROOTS.contains(&root) {
        Ok(())
    } else {
        Err(AlgebraError::BadRootIndex(root))
    }
}

/// The root-`root` part of `x`.
pub fn root_component(x: &LieTorusElement, root: i32) -> Result<LieTorusElement> {
    check_root(root)?;
    let m = x.matrix();
    let keep = |r: usize, c: usize| match root {
        2 => (r, c) == (0, 1),
        -2 => (r, c) == (1, 0),
        _ => r == c,
    };
    let mut out = Matrix2::zero();
    for ((r, c), e) in m.entries() {
        if keep(r, c) {
            *out.entry_mut(r, c) = e.clone();
        }
    }
    // off-diagonal parts have zero trace; the diagonal part has the full trace
    Ok(LieTorusElement::new_unchecked(out))
}

/// Entrywise restriction of `x` to the degree `degree`.
pub fn degree_component(x: &LieTorusElement, degree: Degree) -> LieTorusElement {
    LieTorusElement::new_unchecked(x.matrix().degree_part(degree))
}

/// The form `(x11 y11 + x12 y21 + x21 y12 + x22 y22)_0` on matrices.
pub fn matrix_form(x: &Matrix2, y: &Matrix2) -> Scalar {
    let pc = |p: &TorusElement, q: &TorusElement| p.product_component(q, Degree::ZERO);
    let mut s = pc(x.entry(0, 0), y.entry(0, 0));
    s += &pc(x.entry(0, 1), y.entry(1, 0));
    s += &pc(x.entry(1, 0), y.entry(0, 1));
    s += &pc(x.entry(1, 1), y.entry(1, 1));
    s
}

/// The symmetric invariant form on `sl_2(Q)`.
pub fn form(x: &LieTorusElement, y: &LieTorusElement) -> Scalar {
    matrix_form(x.matrix(), y.matrix())
}

/// Basis of the graded piece with the given index, in the fixed order
/// (`diag(m,-m)` before `diag(m,m)` for root 0).
pub fn slice_basis(index: GradedIndex) -> Vec<LieTorusElement> {
    let m = TorusElement::monomial(index.degree, Scalar::one());
    let mats = match index.root {
        2 => vec![Matrix2::unit(0, 1, m)],
        -2 => vec![Matrix2::unit(1, 0, m)],
        _ => {
            let mut v = vec![Matrix2::diag(m.clone(), -&m)];
            if !index.degree.is_even_even() {
                v.push(Matrix2::diag(m.clone(), m));
            }
            v
        }
    };
    mats.into_iter().map(LieTorusElement::new_unchecked).collect()
}

/// A graded basis element together with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub index: GradedIndex,
    pub element: LieTorusElement,
}

/// The graded basis of `sl_2(Q)` over all degrees in the box, ordered by
/// degree (lexicographic) and then root.
pub fn graded_basis(radius: i32) -> Vec<BasisElement> {
    let mut out = Vec::new();
    for degree in Degree::box_degrees(radius) {
        for root in ROOTS {
            let index = GradedIndex { degree, root };
            out.extend(slice_basis(index).into_iter().map(|element| BasisElement { index, element }));
        }
    }
    out
}

/// One row of a slice-nondegeneracy report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramRow {
    pub index: GradedIndex,
    pub dim: usize,
    pub determinant: Scalar,
}

impl fmt::Display for GramRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.index.degree, self.index.root, self.dim, self.determinant)
    }
}

/// Gram matrix of the form pairing the piece `index` with its dual piece.
pub fn slice_gram(index: GradedIndex) -> Result<GramRow> {
    let left = slice_basis(index);
    let right = slice_basis(index.dual()?);
    if left.len() != right.len() {
        return Ok(GramRow { index, dim: left.len(), determinant: Scalar::zero() });
    }
    let gram: Vec<Vec<Scalar>> = left.iter().map(|x| right.iter().map(|y| form(x, y)).collect()).collect();
    Ok(GramRow { index, dim: left.len(), determinant: determinant(&gram) })
}
