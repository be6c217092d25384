//! Seeded random elements for the identity checks. Degrees are uniform in
//! the box, coefficients come from a fixed palette of small rationals.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::eala::EalaElement;
use crate::lie_torus::{slice_basis, GradedIndex, ROOTS};
use crate::matrix::{LieTorusElement, Matrix2};
use crate::scalar::Scalar;
use crate::torus::{Degree, TorusElement};

const PALETTE: [(i64, i64); 8] = [(-2, 1), (-1, 1), (-1, 2), (1, 3), (1, 2), (1, 1), (2, 1), (3, 1)];

pub struct Sampler<'a> {
    rng: &'a mut ChaCha8Rng,
    radius: i32,
    max_terms: usize,
}

impl<'a> Sampler<'a> {
    pub fn new(rng: &'a mut ChaCha8Rng, radius: i32) -> Self {
        Sampler { rng, radius: radius.max(0), max_terms: 3 }
    }

    pub fn coefficient(&mut self) -> Scalar {
        let (n, d) = *PALETTE.choose(self.rng).expect("palette");
        Scalar::frac(n, d)
    }

    pub fn degree(&mut self) -> Degree {
        let r = self.radius;
        Degree::new(self.rng.gen_range(-r..=r), self.rng.gen_range(-r..=r))
    }

    fn term_count(&mut self) -> usize {
        self.rng.gen_range(1..=self.max_terms)
    }

    pub fn torus(&mut self) -> TorusElement {
        let n = self.term_count();
        TorusElement::from_terms((0..n).map(|_| (self.degree(), self.coefficient())))
    }

    pub fn matrix(&mut self) -> Matrix2 {
        let n = self.term_count();
        let mut m = Matrix2::default();
        for _ in 0..n {
            let (r, c) = (self.rng.gen_range(0..2), self.rng.gen_range(0..2));
            let t = TorusElement::monomial(self.degree(), self.coefficient());
            *m.entry_mut(r, c) += &t;
        }
        m
    }

    /// Sum of scaled graded basis elements of `sl_2(Q)`.
    pub fn lie(&mut self) -> LieTorusElement {
        let n = self.term_count();
        let mut x = LieTorusElement::zero();
        for _ in 0..n {
            let index = GradedIndex { degree: self.degree(), root: *ROOTS.choose(self.rng).expect("roots") };
            let basis = slice_basis(index);
            let b = basis.choose(self.rng).expect("nonempty slice");
            x = x + b.scale(&self.coefficient());
        }
        x
    }

    pub fn eala(&mut self) -> EalaElement {
        let l = self.lie();
        EalaElement::new(l, self.coefficient(), self.coefficient())
    }
}
