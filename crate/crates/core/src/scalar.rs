//! Exact arithmetic in the real quadratic field Q(sqrt 2).
//!
//! Every coefficient in the crate is a [`Scalar`]. The field is large enough to
//! hold an irrational value of the degree functional while keeping equality
//! decidable.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// An element `rational + radical * sqrt(2)` of Q(sqrt 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    rational: Rational,
    radical: Rational,
}

impl Scalar {
    pub fn new(rational: Rational, radical: Rational) -> Self {
        Scalar { rational, radical }
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar { rational: r, radical: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom` as a rational scalar. Panics if `denom` is zero.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn sqrt2() -> Self {
        Scalar { rational: Rational::zero(), radical: Rational::one() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn radical_part(&self) -> &Rational {
        &self.radical
    }

    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    /// Galois conjugate `a - b sqrt 2`.
    pub fn galois_conjugate(&self) -> Self {
        Scalar { rational: self.rational.clone(), radical: -&self.radical }
    }

    /// Field norm `a^2 - 2 b^2`; zero only for the zero scalar.
    pub fn norm(&self) -> Rational {
        let two = Rational::from_integer(BigInt::from(2));
        &self.rational * &self.rational - two * &self.radical * &self.radical
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar { rational: &self.rational / &n, radical: -&self.radical / &n })
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { rational: Rational::zero(), radical: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar { rational: Rational::one(), radical: Rational::zero() }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { rational: &self.rational + &rhs.rational, radical: &self.radical + &rhs.radical }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { rational: &self.rational - &rhs.rational, radical: &self.radical - &rhs.radical }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
        if self.radical.is_zero() && rhs.radical.is_zero() {
            return Scalar::from_rational(&self.rational * &rhs.rational);
        }
        let two = Rational::from_integer(BigInt::from(2));
        Scalar {
            rational: &self.rational * &rhs.rational + two * &self.radical * &rhs.radical,
            radical: &self.rational * &rhs.radical + &self.radical * &rhs.rational,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::inverse`] for the checked form.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inverse().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rational: -&self.rational, radical: -&self.radical }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.rational += &rhs.rational;
        self.radical += &rhs.radical;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.rational -= &rhs.rational;
        self.radical -= &rhs.radical;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text: `p/q` (or `p` for integers) when rational, otherwise
/// `(p/q + r/s*rt2)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            write_rational(f, &self.rational)
        } else {
            f.write_str("(")?;
            write_rational(f, &self.rational)?;
            f.write_str(" + ")?;
            write_rational(f, &self.radical)?;
            f.write_str("*rt2)")
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (rat, rad) = inner.split_once(" + ").ok_or_else(|| AlgebraError::Parse(format!("bad scalar {s:?}")))?;
            let rad =
                rad.trim().strip_suffix("*rt2").ok_or_else(|| AlgebraError::Parse(format!("missing *rt2 in {s:?}")))?;
            Ok(Scalar::new(parse_rational(rat)?, parse_rational(rad)?))
        } else {
            parse_rational(t).map(Scalar::from_rational)
        }
    }
}
