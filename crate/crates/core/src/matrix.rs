//! 2x2 matrices over the quaternion torus, acting on the right module
//! `V = Q (+) Q` of columns by left multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::linalg::{Coordinates, SpanSolver, SparseVec};
use crate::scalar::Scalar;
use crate::torus::{split_top_level, Degree, TorusElement, MAX_BOX_RADIUS};

/// Element of `gl_2(Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matrix2 {
    entries: [[TorusElement; 2]; 2],
}

impl Matrix2 {
    pub fn new(x11: TorusElement, x12: TorusElement, x21: TorusElement, x22: TorusElement) -> Self {
        Matrix2 { entries: [[x11, x12], [x21, x22]] }
    }

    pub fn identity() -> Self {
        Self::diag(TorusElement::one(), TorusElement::one())
    }

    pub fn diag(x: TorusElement, y: TorusElement) -> Self {
        Self::new(x, TorusElement::zero(), TorusElement::zero(), y)
    }

    /// The matrix with `x` in position `(row, col)` (zero-based) and zeros elsewhere.
    pub fn unit(row: usize, col: usize, x: TorusElement) -> Self {
        let mut m = Matrix2::zero();
        m.entries[row][col] = x;
        m
    }

    /// `diag(1, -1)`.
    pub fn h() -> Self {
        Self::diag(TorusElement::one(), -TorusElement::one())
    }

    pub fn entry(&self, row: usize, col: usize) -> &TorusElement {
        &self.entries[row][col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut TorusElement {
        &mut self.entries[row][col]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &TorusElement)> {
        (0..2).flat_map(move |r| (0..2).map(move |c| ((r, c), &self.entries[r][c])))
    }

    pub fn map_entries(&self, f: impl Fn(&TorusElement) -> TorusElement) -> Matrix2 {
        Matrix2 {
            entries: [
                [f(&self.entries[0][0]), f(&self.entries[0][1])],
                [f(&self.entries[1][0]), f(&self.entries[1][1])],
            ],
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix2 {
        self.map_entries(|x| x.scale(s))
    }

    pub fn trace(&self) -> TorusElement {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn checked_mul(&self, rhs: &Matrix2) -> Result<Matrix2> {
        let e = |r: usize, c: usize| -> Result<TorusElement> {
            Ok(self.entries[r][0].checked_mul(&rhs.entries[0][c])?
                + self.entries[r][1].checked_mul(&rhs.entries[1][c])?)
        };
        Ok(Matrix2 { entries: [[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]] })
    }

    /// `xy - yx`.
    pub fn bracket(&self, rhs: &Matrix2) -> Matrix2 {
        self * rhs - rhs * self
    }

    /// Apply to the column `(u, v)`.
    pub fn apply(&self, column: &[TorusElement; 2]) -> [TorusElement; 2] {
        let row = |r: usize| &self.entries[r][0] * &column[0] + &self.entries[r][1] * &column[1];
        [row(0), row(1)]
    }

    /// All degrees occurring in any entry.
    pub fn support(&self) -> impl Iterator<Item = Degree> + '_ {
        self.entries().flat_map(|(_, x)| x.support())
    }

    /// Entrywise restriction to one degree.
    pub fn degree_part(&self, degree: Degree) -> Matrix2 {
        self.map_entries(|x| x.homogeneous_part(degree))
    }
}

/// Membership in `sl_2(Q) = [gl_2(Q), gl_2(Q)]`: the trace has no
/// (even, even) component, because `[Q, Q]` is exactly the span of the
/// monomials of non-(even, even) degree.
pub fn is_in_sl2(x: &Matrix2) -> bool {
    x.trace().even_even_part().is_zero()
}

/// Monomial matrix units `E_rc(i^a j^b)` with degrees in the box.
pub fn monomial_matrices(radius: i32) -> Vec<Matrix2> {
    let mut out = Vec::new();
    for d in Degree::box_degrees(radius) {
        for r in 0..2 {
            for c in 0..2 {
                out.push(Matrix2::unit(r, c, TorusElement::monomial(d, Scalar::one())));
            }
        }
    }
    out
}

/// The span of all brackets of monomial matrices with degrees in a box,
/// assembled by brute force. Independent of the trace criterion.
#[derive(Debug, Clone)]
pub struct CommutatorSpan {
    radius: i32,
    coords: Coordinates<(usize, Degree)>,
    span: SpanSolver,
}

impl CommutatorSpan {
    pub fn new(radius: i32) -> Result<Self> {
        if !(0..=MAX_BOX_RADIUS).contains(&radius) {
            return Err(AlgebraError::DegreeOverflow);
        }
        let units = monomial_matrices(radius);
        let mut coords = Coordinates::new();
        let mut span = SpanSolver::membership_only();
        for (k, x) in units.iter().enumerate() {
            for y in &units[k + 1..] {
                let v = Self::vectorize(&mut coords, &x.bracket(y));
                if !v.is_empty() {
                    span.push(v);
                }
            }
        }
        Ok(CommutatorSpan { radius, coords, span })
    }

    fn vectorize(coords: &mut Coordinates<(usize, Degree)>, x: &Matrix2) -> SparseVec {
        let mut v = SparseVec::new();
        for ((r, c), e) in x.entries() {
            for (d, s) in e.terms() {
                v.insert(coords.index_of((2 * r + c, *d)), s.clone());
            }
        }
        v
    }

    pub fn radius(&self) -> i32 {
        self.radius
    }

    pub fn dimension(&self) -> usize {
        self.span.rank()
    }

    /// Whether `x` is a linear combination of the brackets.
    pub fn contains(&self, x: &Matrix2) -> bool {
        let mut v = SparseVec::new();
        for ((r, c), e) in x.entries() {
            for (d, s) in e.terms() {
                match self.coords.get(&(2 * r + c, *d)) {
                    Some(i) => {
                        v.insert(i, s.clone());
                    }
                    None => return false,
                }
            }
        }
        self.span.contains(&v)
    }
}

/// One-shot form of [`CommutatorSpan::contains`].
pub fn sl2_membership_bruteforce(x: &Matrix2, radius: i32) -> Result<bool> {
    Ok(CommutatorSpan::new(radius)?.contains(x))
}

impl Zero for Matrix2 {
    fn zero() -> Self {
        Matrix2::default()
    }

    fn is_zero(&self) -> bool {
        self.entries().all(|(_, x)| x.is_zero())
    }
}

impl<'a> Add<&'a Matrix2> for &'a Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: &Matrix2) -> Matrix2 {
        let e = |r: usize, c: usize| &self.entries[r][c] + &rhs.entries[r][c];
        Matrix2 { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }
}

impl<'a> Sub<&'a Matrix2> for &'a Matrix2 {
    type Output = Matrix2;
    fn sub(self, rhs: &Matrix2) -> Matrix2 {
        let e = |r: usize, c: usize| &self.entries[r][c] - &rhs.entries[r][c];
        Matrix2 { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }
}

impl<'a> Mul<&'a Matrix2> for &'a Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: &Matrix2) -> Matrix2 {
        self.checked_mul(rhs).expect("degree overflow in matrix product")
    }
}

impl Neg for &Matrix2 {
    type Output = Matrix2;
    fn neg(self) -> Matrix2 {
        self.map_entries(|x| -x)
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;
    fn neg(self) -> Matrix2 {
        -&self
    }
}

macro_rules! forward_matrix {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Matrix2> for Matrix2 {
            type Output = Matrix2;
            fn $m(self, rhs: Matrix2) -> Matrix2 { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Matrix2> for Matrix2 {
            type Output = Matrix2;
            fn $m(self, rhs: &Matrix2) -> Matrix2 { (&self).$m(rhs) }
        }
        impl<'a> $tr<Matrix2> for &'a Matrix2 {
            type Output = Matrix2;
            fn $m(self, rhs: Matrix2) -> Matrix2 { self.$m(&rhs) }
        }
    )*};
}
forward_matrix!(Add add, Sub sub, Mul mul);

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

impl FromStr for Matrix2 {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || AlgebraError::Parse(format!("bad matrix {s:?}"));
        let inner = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let rows = split_top_level(inner, ", ");
        if rows.len() != 2 {
            return Err(bad());
        }
        let mut cells = Vec::with_capacity(4);
        for row in rows {
            let row = row.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
            let entries = split_top_level(row, ", ");
            if entries.len() != 2 {
                return Err(bad());
            }
            for e in entries {
                cells.push(e.parse::<TorusElement>()?);
            }
        }
        let mut it = cells.into_iter();
        let mut next = || it.next().expect("four cells");
        Ok(Matrix2::new(next(), next(), next(), next()))
    }
}

/// Element of the Lie torus `sl_2(Q)`: a matrix passing [`is_in_sl2`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LieTorusElement(Matrix2);

impl LieTorusElement {
    pub fn new(m: Matrix2) -> Result<Self> {
        if is_in_sl2(&m) {
            Ok(LieTorusElement(m))
        } else {
            Err(AlgebraError::NotInSl2(m.to_string()))
        }
    }

    /// Caller guarantees the trace criterion (e.g. the matrix is a bracket).
    pub(crate) fn new_unchecked(m: Matrix2) -> Self {
        debug_assert!(is_in_sl2(&m), "not in sl2: {m}");
        LieTorusElement(m)
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix2 {
        self.0
    }

    pub fn bracket(&self, rhs: &LieTorusElement) -> LieTorusElement {
        LieTorusElement(self.0.bracket(&rhs.0))
    }

    pub fn scale(&self, s: &Scalar) -> LieTorusElement {
        LieTorusElement(self.0.scale(s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn zero() -> Self {
        LieTorusElement(Matrix2::zero())
    }
}

impl<'a> Add<&'a LieTorusElement> for &'a LieTorusElement {
    type Output = LieTorusElement;
    fn add(self, rhs: &LieTorusElement) -> LieTorusElement {
        LieTorusElement(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a LieTorusElement> for &'a LieTorusElement {
    type Output = LieTorusElement;
    fn sub(self, rhs: &LieTorusElement) -> LieTorusElement {
        LieTorusElement(&self.0 - &rhs.0)
    }
}

impl Add for LieTorusElement {
    type Output = LieTorusElement;
    fn add(self, rhs: LieTorusElement) -> LieTorusElement {
        &self + &rhs
    }
}

impl Sub for LieTorusElement {
    type Output = LieTorusElement;
    fn sub(self, rhs: LieTorusElement) -> LieTorusElement {
        &self - &rhs
    }
}

impl Neg for &LieTorusElement {
    type Output = LieTorusElement;
    fn neg(self) -> LieTorusElement {
        LieTorusElement(-&self.0)
    }
}

impl Neg for LieTorusElement {
    type Output = LieTorusElement;
    fn neg(self) -> LieTorusElement {
        -&self
    }
}

impl TryFrom<Matrix2> for LieTorusElement {
    type Error = AlgebraError;
    fn try_from(m: Matrix2) -> Result<Self> {
        LieTorusElement::new(m)
    }
}

impl fmt::Display for LieTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for LieTorusElement {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        LieTorusElement::new(s.parse()?)
    }
}
