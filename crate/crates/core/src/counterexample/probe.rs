//! Bounded search for a single generator of `W = ker m`.
//!
//! `W` is projective of rank one and not free, so no finite box can contain
//! one column generating every kernel column of that box; the probe looks for
//! such a column anyway and reports `not-falsified` when none exists.
//!
//! The search is exact. In `Q` the extreme exponents of a product are the
//! sums of those of the factors, so the widths of the bounding box of a first
//! coordinate add under right multiplication. A generator `g` of the box
//! kernel `K` therefore has, at the same time, the least x-width and the least
//! y-width of any nonzero element of `K`, and any element of `K` reaching both
//! minima is `g` times a unit monomial, hence also a generator. So it suffices
//! to compute the two minimal widths, look for an element reaching both, and
//! test that single candidate with a linear system.

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::linalg::{Coordinates, SpanSolver, SparseVec};
use crate::matrix::Matrix2;
use crate::scalar::Scalar;
use crate::torus::{Degree, TorusElement, MAX_BOX_RADIUS};
use crate::verify::report::{Status, VerificationReport};

use super::section::{one_plus_i, one_plus_j};

/// A column `(u, v)` of `V = Q (+) Q`.
pub type Column = [TorusElement; 2];

/// Inclusive exponent bounds `(a_min, a_max, b_min, b_max)`.
pub type Rect = (i32, i32, i32, i32);

fn in_rect(d: Degree, r: Rect) -> bool {
    (r.0..=r.1).contains(&d.a) && (r.2..=r.3).contains(&d.b)
}

/// Basis of the kernel columns with both coordinates supported in the box and,
/// when `first_rect` is given, the first coordinate supported in that
/// rectangle.
pub fn kernel_basis(radius: i32, first_rect: Option<Rect>) -> Result<Vec<Column>> {
    if !(0..=MAX_BOX_RADIUS).contains(&radius) {
        return Err(AlgebraError::DegreeOverflow);
    }
    let degrees = Degree::box_degrees(radius);
    let mut coords = Coordinates::new();
    let mut solver = SpanSolver::new();
    let mut unknowns = Vec::new();
    for (slot, factor) in [(0usize, one_plus_i()), (1, -one_plus_j())] {
        for &d in &degrees {
            if slot == 0 && first_rect.is_some_and(|r| !in_rect(d, r)) {
                continue;
            }
            let image = &factor * &TorusElement::monomial(d, Scalar::one());
            solver.push(image.terms().map(|(e, c)| (coords.index_of(*e), c.clone())).collect());
            unknowns.push((slot, d));
        }
    }
    Ok(solver
        .relations()
        .iter()
        .map(|rel| {
            let mut col = [TorusElement::zero(), TorusElement::zero()];
            for (&g, c) in rel {
                let (slot, d) = unknowns[g];
                col[slot].add_term(d, c);
            }
            col
        })
        .collect())
}

fn vectorize(coords: &mut Coordinates<(usize, Degree)>, col: &Column) -> SparseVec {
    let mut v = SparseVec::new();
    for (slot, e) in col.iter().enumerate() {
        for (d, c) in e.terms() {
            v.insert(coords.index_of((slot, *d)), c.clone());
        }
    }
    v
}

/// Whether every column in `targets` equals `g q` for some `q` supported in
/// the box of radius `q_radius`.
pub fn generates(g: &Column, targets: &[Column], q_radius: i32) -> bool {
    let mut coords = Coordinates::new();
    let mut solver = SpanSolver::membership_only();
    for d in Degree::box_degrees(q_radius) {
        let q = TorusElement::monomial(d, Scalar::one());
        solver.push(vectorize(&mut coords, &[&g[0] * &q, &g[1] * &q]));
    }
    targets.iter().all(|t| {
        let mut v = SparseVec::new();
        for (slot, e) in t.iter().enumerate() {
            for (d, c) in e.terms() {
                // a coordinate never produced by the multiples of g is fatal
                let Some(k) = coords.get(&(slot, *d)) else { return false };
                v.insert(k, c.clone());
            }
        }
        solver.contains(&v)
    })
}

/// Detailed outcome of the probe at one box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeResult {
    pub radius: i32,
    pub kernel_dim: usize,
    /// Least x- and y-widths of first coordinates of nonzero kernel columns.
    pub min_widths: Option<(i32, i32)>,
    /// A kernel column reaching both minimal widths, if one exists.
    pub candidate: Option<Column>,
    /// Set when the candidate generates the whole box kernel.
    pub generator: Option<Column>,
}

impl ProbeResult {
    pub fn status(&self) -> Status {
        if self.generator.is_some() {
            Status::Fail
        } else {
            Status::NotFalsified
        }
    }
}

fn rects(radius: i32, wx: i32, wy: i32) -> impl Iterator<Item = Rect> {
    (-radius..=radius - wx).flat_map(move |a0| (-radius..=radius - wy).map(move |b0| (a0, a0 + wx, b0, b0 + wy)))
}

fn min_width(radius: i32, horizontal: bool) -> Result<Option<i32>> {
    for w in 0..=2 * radius {
        let (wx, wy) = if horizontal { (w, 2 * radius) } else { (2 * radius, w) };
        for r in rects(radius, wx, wy) {
            if !kernel_basis(radius, Some(r))?.is_empty() {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Search the box of the given radius for a single generator of its kernel.
pub fn probe(radius: i32) -> Result<ProbeResult> {
    let kernel = kernel_basis(radius, None)?;
    let mut result =
        ProbeResult { radius, kernel_dim: kernel.len(), min_widths: None, candidate: None, generator: None };
    if kernel.is_empty() {
        return Ok(result);
    }
    let (Some(wx), Some(wy)) = (min_width(radius, true)?, min_width(radius, false)?) else {
        return Ok(result);
    };
    result.min_widths = Some((wx, wy));
    for r in rects(radius, wx, wy) {
        if let Some(candidate) = kernel_basis(radius, Some(r))?.into_iter().next() {
            if generates(&candidate, &kernel, 2 * radius) {
                result.generator = Some(candidate.clone());
            }
            result.candidate = Some(candidate);
            break;
        }
    }
    Ok(result)
}

/// A column rendered as the first column of a matrix, for report witnesses.
pub fn column_text(col: &Column) -> String {
    Matrix2::new(col[0].clone(), TorusElement::zero(), col[1].clone(), TorusElement::zero()).to_string()
}

/// Report form of [`probe`]: `not-falsified` unless a generator is found.
pub fn nonfreeness_probe(radius: i32) -> Result<VerificationReport> {
    let r = probe(radius)?;
    let mut report = VerificationReport::pass("probe.nonfreeness", radius, r.kernel_dim as u64);
    match &r.generator {
        Some(g) => {
            report.status = Status::Fail;
            report.witness = Some(column_text(g));
        }
        None => report.status = Status::NotFalsified,
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::section::apply_m;

    #[test]
    fn kernel_dimensions() {
        let dims: Vec<usize> = (0..=2).map(|r| kernel_basis(r, None).unwrap().len()).collect();
        assert_eq!(dims, vec![0, 3, 15]);
        for col in kernel_basis(2, None).unwrap() {
            assert!(apply_m(&col).is_zero());
            assert!(!col[0].is_zero() && !col[1].is_zero());
        }
    }

    #[test]
    fn box_zero_has_no_kernel() {
        let r = probe(0).unwrap();
        assert_eq!(r.kernel_dim, 0);
        assert_eq!(r.status(), Status::NotFalsified);
    }

    #[test]
    fn small_boxes_not_falsified() {
        for radius in 1..=2 {
            let r = probe(radius).unwrap();
            assert_eq!(r.status(), Status::NotFalsified, "{r:?}");
            assert_eq!(r.min_widths, Some((0, 1)));
            assert!(r.candidate.is_none());
        }
    }

    #[test]
    fn generation_test_detects_right_multiples() {
        let g: Column =
            [&(TorusElement::one() - TorusElement::iota()) * &one_plus_j(), TorusElement::one() - TorusElement::t1()];
        let q = TorusElement::unit_monomial(-1, 0) + TorusElement::unit_monomial(0, 1).scale(&Scalar::from_int(3));
        let gq: Column = [&g[0] * &q, &g[1] * &q];
        assert!(generates(&g, &[gq.clone(), g.clone()], 1));
        assert!(!generates(&g, &[gq], 0));
        let other: Column =
            [TorusElement::one() - TorusElement::t2(), &(TorusElement::one() - TorusElement::jota()) * &one_plus_i()];
        assert!(apply_m(&other).is_zero());
        assert!(!generates(&g, &[other], 3));
    }

    #[test]
    fn report_status() {
        let r = nonfreeness_probe(1).unwrap();
        assert_eq!(r.status, Status::NotFalsified);
        assert_eq!(r.samples, 3);
        assert!(nonfreeness_probe(-1).is_err());
    }
}
