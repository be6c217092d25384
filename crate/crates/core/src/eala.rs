//! The extended affine Lie algebra `E = L (+) C (+) D` over `L = sl_2(Q)`.
//!
//! `D = k d_theta` is spanned by the degree derivation of a functional
//! `theta` on the degree lattice, and `C = D*` is spanned by the dual
//! functional `c` with `c(d_theta) = 1`. Both are one-dimensional, so an
//! element of `E` is stored as `l + gamma c + delta d_theta`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::lie_torus::form;
use crate::matrix::{LieTorusElement, Matrix2};
use crate::scalar::Scalar;
use crate::torus::{split_top_level, Degree, TorusElement};

/// A functional `theta` on `Z^2` with `theta(1,0) = 1` and irrational
/// `theta(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    value_e1: Scalar,
    value_e2: Scalar,
}

impl Theta {
    /// `theta(0,1) = value_e2`, which must have a nonzero `sqrt 2` part.
    pub fn new(value_e2: Scalar) -> Result<Self> {
        if value_e2.is_rational() {
            return Err(AlgebraError::InvalidParameter(format!("theta(0,1) = {value_e2} must be irrational")));
        }
        Ok(Theta { value_e1: Scalar::one(), value_e2 })
    }

    pub fn value_e1(&self) -> &Scalar {
        &self.value_e1
    }

    pub fn value_e2(&self) -> &Scalar {
        &self.value_e2
    }

    /// `theta(a, b) = a theta(1,0) + b theta(0,1)`.
    pub fn value(&self, d: Degree) -> Scalar {
        &self.value_e1 * &Scalar::from_int(d.a.into()) + &self.value_e2 * &Scalar::from_int(d.b.into())
    }

    fn derive_torus(&self, x: &TorusElement) -> TorusElement {
        TorusElement::from_terms(x.terms().map(|(d, c)| (*d, c * &self.value(*d))))
    }

    pub fn derive_matrix(&self, x: &Matrix2) -> Matrix2 {
        x.map_entries(|e| self.derive_torus(e))
    }

    /// The degree derivation: scales the degree-`lambda` part by `theta(lambda)`.
    pub fn derive(&self, x: &LieTorusElement) -> LieTorusElement {
        // theta(0,0) = 0 kills the (0,0) trace part, so the trace stays odd
        LieTorusElement::new_unchecked(self.derive_matrix(x.matrix()))
    }

    /// The central cocycle `sigma(x, y)`, evaluated on `d_theta`:
    /// `(d_theta(x) | y)`.
    pub fn cocycle(&self, x: &LieTorusElement, y: &LieTorusElement) -> Scalar {
        form(&self.derive(x), y)
    }

    /// The bracket of `E`:
    /// `[l1 + c1 + d1, l2 + c2 + d2] = ([l1,l2] + d1(l2) - d2(l1)) + sigma(l1,l2)`.
    pub fn bracket(&self, x: &EalaElement, y: &EalaElement) -> EalaElement {
        let mut l = x.l.bracket(&y.l);
        if !x.d.is_zero() {
            l = l + self.derive(&y.l).scale(&x.d);
        }
        if !y.d.is_zero() {
            l = l - self.derive(&x.l).scale(&y.d);
        }
        EalaElement { l, c: self.cocycle(&x.l, &y.l), d: Scalar::zero() }
    }
}

impl Default for Theta {
    fn default() -> Self {
        Theta { value_e1: Scalar::one(), value_e2: Scalar::sqrt2() }
    }
}

/// `l + c * c_basis + d * d_theta`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EalaElement {
    pub l: LieTorusElement,
    pub c: Scalar,
    pub d: Scalar,
}

impl EalaElement {
    pub fn new(l: LieTorusElement, c: Scalar, d: Scalar) -> Self {
        EalaElement { l, c, d }
    }

    pub fn from_l(l: LieTorusElement) -> Self {
        EalaElement { l, c: Scalar::zero(), d: Scalar::zero() }
    }

    /// The central basis element `c`.
    pub fn central() -> Self {
        EalaElement { l: LieTorusElement::zero(), c: Scalar::one(), d: Scalar::zero() }
    }

    /// The derivation `d_theta`.
    pub fn derivation() -> Self {
        EalaElement { l: LieTorusElement::zero(), c: Scalar::zero(), d: Scalar::one() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.l.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        EalaElement { l: self.l.scale(s), c: &self.c * s, d: &self.d * s }
    }

    /// Membership in the core `L (+) C`.
    pub fn in_core(&self) -> bool {
        self.d.is_zero()
    }
}

/// `(l1,l2) + c1(d2) + c2(d1)`.
pub fn form_e(x: &EalaElement, y: &EalaElement) -> Scalar {
    form(&x.l, &y.l) + &x.c * &y.d + &y.c * &x.d
}

impl<'a> Add<&'a EalaElement> for &'a EalaElement {
    type Output = EalaElement;
    fn add(self, rhs: &EalaElement) -> EalaElement {
        EalaElement { l: &self.l + &rhs.l, c: &self.c + &rhs.c, d: &self.d + &rhs.d }
    }
}

impl<'a> Sub<&'a EalaElement> for &'a EalaElement {
    type Output = EalaElement;
    fn sub(self, rhs: &EalaElement) -> EalaElement {
        EalaElement { l: &self.l - &rhs.l, c: &self.c - &rhs.c, d: &self.d - &rhs.d }
    }
}

impl Add for EalaElement {
    type Output = EalaElement;
    fn add(self, rhs: EalaElement) -> EalaElement {
        &self + &rhs
    }
}

impl Sub for EalaElement {
    type Output = EalaElement;
    fn sub(self, rhs: EalaElement) -> EalaElement {
        &self - &rhs
    }
}

impl Neg for &EalaElement {
    type Output = EalaElement;
    fn neg(self) -> EalaElement {
        EalaElement { l: -&self.l, c: -&self.c, d: -&self.d }
    }
}

impl fmt::Display for EalaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (+) {}*c (+) {}*d", self.l, self.c, self.d)
    }
}

impl FromStr for EalaElement {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || AlgebraError::Parse(format!("bad EALA element {s:?}"));
        let parts = split_top_level(s.trim(), " (+) ");
        let [l, c, d] = parts.as_slice() else { return Err(bad()) };
        let c = c.trim().strip_suffix("*c").ok_or_else(bad)?;
        let d = d.trim().strip_suffix("*d").ok_or_else(bad)?;
        Ok(EalaElement { l: l.parse()?, c: c.parse()?, d: d.parse()? })
    }
}

/// The standard MAD `k P (+) C (+) D` with `P = a diag(1, -1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMad {
    generator_scale: Scalar,
}

impl StandardMad {
    pub fn new(generator_scale: Scalar) -> Result<Self> {
        if generator_scale.is_zero() {
            return Err(AlgebraError::InvalidParameter("MAD generator scale must be nonzero".into()));
        }
        Ok(StandardMad { generator_scale })
    }

    pub fn generator_scale(&self) -> &Scalar {
        &self.generator_scale
    }

    /// `P = a diag(1, -1)`.
    pub fn p(&self) -> LieTorusElement {
        LieTorusElement::new_unchecked(Matrix2::h().scale(&self.generator_scale))
    }

    /// Spanning set `P, c, d_theta` of the MAD as elements of `E`.
    pub fn spanning_set(&self) -> [EalaElement; 3] {
        [EalaElement::from_l(self.p()), EalaElement::central(), EalaElement::derivation()]
    }

    /// The pair `(alpha, beta)` with `[P, x] = alpha x` and `d_theta(x) = beta x`.
    pub fn eigenvalues(&self, theta: &Theta, x: &LieTorusElement) -> Result<(Scalar, Scalar)> {
        let alpha = eigenvalue_of(x, &self.p().bracket(x))?;
        let beta = eigenvalue_of(x, &theta.derive(x))?;
        Ok((alpha, beta))
    }
}

impl Default for StandardMad {
    fn default() -> Self {
        StandardMad { generator_scale: Scalar::one() }
    }
}

/// The scalar `s` with `image = s x`, if there is one.
pub fn eigenvalue_of(x: &LieTorusElement, image: &LieTorusElement) -> Result<Scalar> {
    let ((r, c), e) = x.matrix().entries().find(|(_, e)| !e.is_zero()).ok_or(AlgebraError::NotAnEigenvector)?;
    let (d, coeff) = e.terms().next().expect("nonzero entry");
    let s = &image.matrix().entry(r, c).component(*d) / coeff;
    if x.scale(&s) == *image {
        Ok(s)
    } else {
        Err(AlgebraError::NotAnEigenvector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie(m: Matrix2) -> LieTorusElement {
        LieTorusElement::new(m).unwrap()
    }

    fn e12(x: TorusElement) -> LieTorusElement {
        lie(Matrix2::unit(0, 1, x))
    }

    fn e21(x: TorusElement) -> LieTorusElement {
        lie(Matrix2::unit(1, 0, x))
    }

    #[test]
    fn theta_validation() {
        assert!(Theta::new(Scalar::from_int(3)).is_err());
        let t = Theta::new(Scalar::sqrt2() + Scalar::one()).unwrap();
        assert_eq!(t.value(Degree::new(2, 1)), Scalar::from_int(3) + Scalar::sqrt2());
    }

    #[test]
    fn derivation_examples() {
        let t = Theta::default();
        let x = e12(TorusElement::iota());
        assert_eq!(t.derive(&x), x);
        let y = e12(TorusElement::jota());
        assert_eq!(t.derive(&y), y.scale(&Scalar::sqrt2()));
        assert!(t.derive(&lie(Matrix2::h())).is_zero());
    }

    #[test]
    fn cocycle_examples() {
        let t = Theta::default();
        let x = lie(Matrix2::new(
            TorusElement::iota(),
            TorusElement::unit_monomial(-1, 2),
            TorusElement::unit_monomial(1, -2),
            TorusElement::jota() - TorusElement::iota(),
        ));
        assert!(t.cocycle(&x, &x).is_zero());
        // iota^-1 * t1 = iota, and iota * iota = t1 has no degree-zero part
        let inv_t1 = &TorusElement::iota().invert_monomial().unwrap() * &TorusElement::t1();
        assert_eq!(inv_t1, TorusElement::iota());
        assert_eq!(t.cocycle(&e12(TorusElement::iota()), &e21(inv_t1)), Scalar::zero());
        let inv = TorusElement::iota().invert_monomial().unwrap();
        assert_eq!(t.cocycle(&e12(TorusElement::iota()), &e21(inv)), Scalar::one());
        assert!(t.cocycle(&lie(Matrix2::h()), &x).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let t = Theta::default();
        let x = EalaElement::from_l(e12(TorusElement::iota()));
        let b = t.bracket(&EalaElement::derivation(), &x);
        assert_eq!(b, x);
        let y = EalaElement::new(e21(TorusElement::jota()), Scalar::from_int(4), Scalar::frac(1, 2));
        assert!(t.bracket(&EalaElement::central(), &y).is_zero());
        assert!(t.bracket(&y, &y).is_zero());
    }

    #[test]
    fn form_examples() {
        assert_eq!(form_e(&EalaElement::central(), &EalaElement::derivation()), Scalar::one());
        assert!(form_e(&EalaElement::central(), &EalaElement::central()).is_zero());
        let a = e12(TorusElement::one());
        let b = e21(TorusElement::one());
        assert_eq!(form_e(&EalaElement::from_l(a.clone()), &EalaElement::from_l(b.clone())), form(&a, &b));
    }

    #[test]
    fn standard_mad_eigenvalues() {
        let t = Theta::default();
        let mad = StandardMad::default();
        let m = TorusElement::unit_monomial(1, 3);
        let (alpha, beta) = mad.eigenvalues(&t, &e12(m.clone())).unwrap();
        assert_eq!(alpha, Scalar::from_int(2));
        assert_eq!(beta, t.value(Degree::new(1, 3)));
        let h = lie(Matrix2::diag(m.clone(), -&m));
        assert_eq!(mad.eigenvalues(&t, &h).unwrap(), (Scalar::zero(), t.value(Degree::new(1, 3))));
        let mad3 = StandardMad::new(Scalar::from_int(3)).unwrap();
        assert_eq!(mad3.eigenvalues(&t, &e12(TorusElement::one())).unwrap(), (Scalar::from_int(6), Scalar::zero()));
        let mixed = e12(TorusElement::iota() + TorusElement::jota());
        assert_eq!(mad.eigenvalues(&t, &mixed), Err(AlgebraError::NotAnEigenvector));
        assert!(StandardMad::new(Scalar::zero()).is_err());
    }

    #[test]
    fn text_round_trip() {
        let x = EalaElement::new(e21(TorusElement::jota()), Scalar::sqrt2(), Scalar::frac(-1, 2));
        let s = x.to_string();
        assert_eq!(s, "[[0, 0], [1*i^0*j^1, 0]] (+) (0 + 1*rt2)*c (+) -1/2*d");
        assert_eq!(s.parse::<EalaElement>().unwrap(), x);
    }
}
