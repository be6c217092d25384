//! The quaternion torus: the Z^2-graded algebra generated over Q(sqrt 2) by
//! `i`, `j` and their inverses, subject to `i^2 = t1`, `j^2 = t2`, `ij = -ji`.
//!
//! Each graded component is one-dimensional, spanned by the monomial
//! `i^a j^b`. The Laurent ring in `t1 = i^2`, `t2 = j^2` is the subalgebra of
//! (even, even) degrees; it is not modelled separately.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// Largest degree-box radius accepted by the box-driven searches.
pub const MAX_BOX_RADIUS: i32 = 4096;

/// Exponent pair `(a, b)` of the monomial `i^a j^b`. Ordered lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Degree {
    pub a: i32,
    pub b: i32,
}

impl Degree {
    pub const ZERO: Degree = Degree { a: 0, b: 0 };

    pub const fn new(a: i32, b: i32) -> Self {
        Degree { a, b }
    }

    pub fn checked_add(self, other: Degree) -> Result<Degree> {
        Ok(Degree {
            a: self.a.checked_add(other.a).ok_or(AlgebraError::DegreeOverflow)?,
            b: self.b.checked_add(other.b).ok_or(AlgebraError::DegreeOverflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<Degree> {
        Ok(Degree {
            a: self.a.checked_neg().ok_or(AlgebraError::DegreeOverflow)?,
            b: self.b.checked_neg().ok_or(AlgebraError::DegreeOverflow)?,
        })
    }

    /// Both exponents even, i.e. the degree of a central monomial.
    pub fn is_even_even(self) -> bool {
        self.a % 2 == 0 && self.b % 2 == 0
    }

    pub fn in_box(self, radius: i32) -> bool {
        self.a.abs() <= radius && self.b.abs() <= radius
    }

    /// All degrees in `[-radius, radius]^2`, in lexicographic order.
    pub fn box_degrees(radius: i32) -> Vec<Degree> {
        let r = radius.max(-1);
        (-r..=r).flat_map(|a| (-r..=r).map(move |b| Degree::new(a, b))).collect()
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Sign of `(i^a j^b)(i^c j^d) = sign * i^(a+c) j^(b+d)`, namely `(-1)^(bc)`.
pub fn monomial_sign(left: Degree, right: Degree) -> bool {
    left.b & right.a & 1 == 1
}

/// An element of the quaternion torus: a finitely supported map from degrees
/// to scalars. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TorusElement {
    terms: BTreeMap<Degree, Scalar>,
}

impl TorusElement {
    pub fn monomial(degree: Degree, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        TorusElement { terms }
    }

    /// The unit-coefficient monomial `i^a j^b`.
    pub fn unit_monomial(a: i32, b: i32) -> Self {
        Self::monomial(Degree::new(a, b), Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Degree::ZERO, c)
    }

    pub fn iota() -> Self {
        Self::unit_monomial(1, 0)
    }

    pub fn jota() -> Self {
        Self::unit_monomial(0, 1)
    }

    pub fn t1() -> Self {
        Self::unit_monomial(2, 0)
    }

    pub fn t2() -> Self {
        Self::unit_monomial(0, 2)
    }

    pub fn from_terms<I: IntoIterator<Item = (Degree, Scalar)>>(terms: I) -> Self {
        let mut x = TorusElement::zero();
        for (d, c) in terms {
            x.add_term(d, &c);
        }
        x
    }

    pub fn add_term(&mut self, degree: Degree, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&degree) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&degree);
                }
            }
            None => {
                self.terms.insert(degree, coeff.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Degree, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn support(&self) -> impl Iterator<Item = Degree> + '_ {
        self.terms.keys().copied()
    }

    /// Coefficient at `degree`, zero when absent.
    pub fn component(&self, degree: Degree) -> Scalar {
        self.terms.get(&degree).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The homogeneous part of degree `degree`.
    pub fn homogeneous_part(&self, degree: Degree) -> TorusElement {
        Self::monomial(degree, self.component(degree))
    }

    pub fn even_even_part(&self) -> TorusElement {
        TorusElement {
            terms: self.terms.iter().filter(|(d, _)| d.is_even_even()).map(|(d, c)| (*d, c.clone())).collect(),
        }
    }

    /// The involution `x + yi + zj + wij -> x - yi - zj - wij` (R-linear):
    /// fixes (even, even) monomials and negates all others.
    pub fn conjugate(&self) -> TorusElement {
        TorusElement {
            terms: self.terms.iter().map(|(d, c)| (*d, if d.is_even_even() { c.clone() } else { -c })).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> TorusElement {
        if s.is_zero() {
            return TorusElement::zero();
        }
        TorusElement { terms: self.terms.iter().map(|(d, c)| (*d, c * s)).collect() }
    }

    pub fn checked_mul(&self, rhs: &TorusElement) -> Result<TorusElement> {
        let mut out = TorusElement::zero();
        for (&l, x) in &self.terms {
            for (&r, y) in &rhs.terms {
                let d = l.checked_add(r)?;
                let c = x * y;
                if monomial_sign(l, r) {
                    out.add_term(d, &-c);
                } else {
                    out.add_term(d, &c);
                }
            }
        }
        Ok(out)
    }

    /// The coefficient of `target` in `self * rhs`, without forming the product.
    pub fn product_component(&self, rhs: &TorusElement, target: Degree) -> Scalar {
        let mut out = Scalar::zero();
        for (&l, x) in &self.terms {
            let Some(r) = target.a.checked_sub(l.a).zip(target.b.checked_sub(l.b)) else {
                continue;
            };
            let r = Degree::new(r.0, r.1);
            if let Some(y) = rhs.terms.get(&r) {
                let c = x * y;
                if monomial_sign(l, r) {
                    out -= &c;
                } else {
                    out += &c;
                }
            }
        }
        out
    }

    /// Two-sided inverse of a nonzero single-term element.
    pub fn invert_monomial(&self) -> Result<TorusElement> {
        if self.terms.len() != 1 {
            return Err(AlgebraError::NonInvertible);
        }
        let (&d, c) = self.terms.iter().next().expect("one term");
        let inv_deg = d.checked_neg()?;
        // (i^a j^b)(i^-a j^-b) = (-1)^(ab)
        let mut coeff = c.inverse()?;
        if d.a & d.b & 1 == 1 {
            coeff = -coeff;
        }
        Ok(TorusElement::monomial(inv_deg, coeff))
    }

    /// Lexicographic bounding data of the support: `(min a, max a, min b, max b)`.
    pub fn bounding_box(&self) -> Option<(i32, i32, i32, i32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let init = (first.a, first.a, first.b, first.b);
        Some(self.terms.keys().fold(init, |(a0, a1, b0, b1), d| (a0.min(d.a), a1.max(d.a), b0.min(d.b), b1.max(d.b))))
    }

    pub fn commutator(&self, rhs: &TorusElement) -> TorusElement {
        self * rhs - rhs * self
    }
}

/// Degrees of all nonzero commutators `[i^a j^b, i^c j^d]` with both factors
/// in the box of the given radius. Each such commutator is a single term, so
/// this set spans the brute-force commutator space.
pub fn commutator_degrees(radius: i32) -> BTreeSet<Degree> {
    let degs = Degree::box_degrees(radius);
    let mut out = BTreeSet::new();
    for &x in &degs {
        let mx = TorusElement::monomial(x, Scalar::one());
        for &y in &degs {
            let my = TorusElement::monomial(y, Scalar::one());
            out.extend(mx.commutator(&my).support());
        }
    }
    out
}

impl Zero for TorusElement {
    fn zero() -> Self {
        TorusElement { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TorusElement {
    fn one() -> Self {
        TorusElement::constant(Scalar::one())
    }
}

impl AddAssign<&TorusElement> for TorusElement {
    fn add_assign(&mut self, rhs: &TorusElement) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, c);
        }
    }
}

impl SubAssign<&TorusElement> for TorusElement {
    fn sub_assign(&mut self, rhs: &TorusElement) {
        for (d, c) in &rhs.terms {
            self.add_term(*d, &-c);
        }
    }
}

impl<'a> Add<&'a TorusElement> for &'a TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a TorusElement> for &'a TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a TorusElement> for &'a TorusElement {
    type Output = TorusElement;
    /// Panics on degree overflow; see [`TorusElement::checked_mul`].
    fn mul(self, rhs: &TorusElement) -> TorusElement {
        self.checked_mul(rhs).expect("degree overflow in torus product")
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        TorusElement { terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect() }
    }
}

impl Neg for TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        -&self
    }
}

macro_rules! forward_torus {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<TorusElement> for TorusElement {
            type Output = TorusElement;
            fn $m(self, rhs: TorusElement) -> TorusElement { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a TorusElement> for TorusElement {
            type Output = TorusElement;
            fn $m(self, rhs: &TorusElement) -> TorusElement { (&self).$m(rhs) }
        }
        impl<'a> $tr<TorusElement> for &'a TorusElement {
            type Output = TorusElement;
            fn $m(self, rhs: TorusElement) -> TorusElement { self.$m(&rhs) }
        }
    )*};
}
forward_torus!(Add add, Sub sub, Mul mul);

/// Canonical text: terms in lexicographic degree order, each
/// `<scalar>*i^<a>*j^<b>` (the degree-zero term is the bare scalar), joined by
/// `" + "`; the zero element is `0`.
impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *d == Degree::ZERO {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*i^{}*j^{}", d.a, d.b)?;
            }
        }
        Ok(())
    }
}

/// Split on `sep` occurrences that sit outside parentheses and brackets.
pub(crate) fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            parts.push(&s[start..i]);
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for TorusElement {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(TorusElement::zero());
        }
        let bad = || AlgebraError::Parse(format!("bad torus element {s:?}"));
        let mut out = TorusElement::zero();
        for term in split_top_level(s, " + ") {
            let term = term.trim();
            let (coeff, degree) = match term.rfind("*i^") {
                Some(pos) => {
                    let (a, b) = term[pos + 3..].split_once("*j^").ok_or_else(bad)?;
                    let a: i32 = a.parse().map_err(|_| bad())?;
                    let b: i32 = b.parse().map_err(|_| bad())?;
                    (&term[..pos], Degree::new(a, b))
                }
                None => (term, Degree::ZERO),
            };
            out.add_term(degree, &coeff.parse::<Scalar>()?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i32, b: i32) -> TorusElement {
        TorusElement::unit_monomial(a, b)
    }

    #[test]
    fn defining_relations() {
        let (i, j) = (TorusElement::iota(), TorusElement::jota());
        assert_eq!(&i * &j, m(1, 1));
        assert_eq!(&j * &i, -m(1, 1));
        assert_eq!(&i * &i, TorusElement::t1());
        assert_eq!(&j * &j, TorusElement::t2());
        assert!((&i * &j + &j * &i).is_zero());
    }

    #[test]
    fn square_of_ij_by_rewriting() {
        // (ij)(ij) = i(ji)j = -i(ij)j = -(ii)(jj) = -t1 t2
        let ij = m(1, 1);
        let expected = TorusElement::monomial(Degree::new(2, 2), Scalar::from_int(-1));
        assert_eq!(&ij * &ij, expected);
        assert_eq!(-(TorusElement::t1() * TorusElement::t2()), expected);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(TorusElement::iota().conjugate(), -TorusElement::iota());
        assert_eq!(TorusElement::t1().conjugate(), TorusElement::t1());
        assert_eq!(m(1, 1).conjugate(), -m(1, 1));
    }

    #[test]
    fn monomial_inverses() {
        let inv = TorusElement::iota().invert_monomial().unwrap();
        assert_eq!(inv, m(-1, 0));
        assert_eq!(TorusElement::one().invert_monomial().unwrap(), TorusElement::one());
        let sum = TorusElement::iota() + TorusElement::jota();
        assert_eq!(sum.invert_monomial(), Err(AlgebraError::NonInvertible));
        assert_eq!(TorusElement::zero().invert_monomial(), Err(AlgebraError::NonInvertible));
        for d in Degree::box_degrees(3) {
            let x = TorusElement::monomial(d, Scalar::frac(-2, 3));
            let y = x.invert_monomial().unwrap();
            assert_eq!(&x * &y, TorusElement::one(), "{d}");
            assert_eq!(&y * &x, TorusElement::one(), "{d}");
        }
    }

    #[test]
    fn components() {
        let x = TorusElement::t1() + TorusElement::iota().scale(&Scalar::from_int(2));
        assert_eq!(x.component(Degree::new(2, 0)), Scalar::one());
        assert_eq!(TorusElement::t1().component(Degree::ZERO), Scalar::zero());
        assert_eq!(TorusElement::zero().component(Degree::new(5, -1)), Scalar::zero());
    }

    #[test]
    fn even_even_restriction() {
        assert_eq!((TorusElement::t1() + TorusElement::iota()).even_even_part(), TorusElement::t1());
        assert!(m(1, 1).even_even_part().is_zero());
        let x = TorusElement::monomial(Degree::new(2, -2), Scalar::from_int(3));
        assert_eq!(x.even_even_part(), x);
    }

    #[test]
    fn associativity_on_monomials() {
        let degs = Degree::box_degrees(3);
        for &x in &degs {
            for &y in &degs {
                let xy = &m(x.a, x.b) * &m(y.a, y.b);
                for &z in &degs {
                    let mz = m(z.a, z.b);
                    assert_eq!(&xy * &mz, &m(x.a, x.b) * &(&m(y.a, y.b) * &mz));
                }
            }
        }
    }

    #[test]
    fn center_is_even_even() {
        let (i, j) = (TorusElement::iota(), TorusElement::jota());
        for d in Degree::box_degrees(3) {
            let x = m(d.a, d.b);
            let central = x.commutator(&i).is_zero() && x.commutator(&j).is_zero();
            assert_eq!(central, d.is_even_even(), "{d}");
        }
    }

    #[test]
    fn commutator_span_is_odd_part() {
        for radius in 1..=3 {
            let span = commutator_degrees(radius);
            assert!(span.iter().all(|d| !d.is_even_even()));
            let expected: BTreeSet<_> = Degree::box_degrees(radius).into_iter().filter(|d| !d.is_even_even()).collect();
            let within: BTreeSet<_> = span.into_iter().filter(|d| d.in_box(radius)).collect();
            assert_eq!(within, expected, "radius {radius}");
        }
    }

    #[test]
    fn product_component_matches_product() {
        let x = TorusElement::from_terms([
            (Degree::new(1, 0), Scalar::from_int(2)),
            (Degree::new(-1, 1), Scalar::frac(1, 3)),
            (Degree::new(0, -1), Scalar::sqrt2()),
        ]);
        let y = TorusElement::from_terms([
            (Degree::new(-1, 0), Scalar::from_int(5)),
            (Degree::new(1, -1), Scalar::from_int(-1)),
            (Degree::new(1, 0), Scalar::one()),
        ]);
        let xy = &x * &y;
        for d in Degree::box_degrees(2) {
            assert_eq!(x.product_component(&y, d), xy.component(d), "{d}");
        }
    }

    #[test]
    fn overflow_is_detected() {
        let big = TorusElement::unit_monomial(i32::MAX, 0);
        assert_eq!(big.checked_mul(&TorusElement::iota()), Err(AlgebraError::DegreeOverflow));
        let low = TorusElement::unit_monomial(i32::MIN, 0);
        assert_eq!(low.invert_monomial(), Err(AlgebraError::DegreeOverflow));
    }

    #[test]
    fn text_round_trip() {
        let x = TorusElement::from_terms([
            (Degree::new(-1, 0), Scalar::frac(1, 2)),
            (Degree::ZERO, Scalar::one() - Scalar::sqrt2()),
            (Degree::new(2, 1), Scalar::from_int(-3)),
        ]);
        let text = x.to_string();
        assert_eq!(text, "1/2*i^-1*j^0 + (1 + -1*rt2) + -3*i^2*j^1");
        assert_eq!(text.parse::<TorusElement>().unwrap(), x);
        assert_eq!("0".parse::<TorusElement>().unwrap(), TorusElement::zero());
        assert!("1*i^x*j^0".parse::<TorusElement>().is_err());
    }
}
