//! A section of the split epimorphism `m(u, v) = (1+i)u - (1+j)v` from
//! `V = Q (+) Q` onto `Q`.
//!
//! A section is determined by `q(1) = (a, b)` with `(1+i)a - (1+j)b = 1`.
//! The solver looks for `a`, `b` supported in a degree box by exact linear
//! algebra, and among all solutions in the smallest feasible box returns the
//! one of minimal support (ties: lexicographically least support, listing the
//! unknowns of `a` before those of `b`). A minimal-support solution is unique
//! on its support, so no coefficient tie-break is ever needed.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::linalg::{Coordinates, SpanSolver, SparseVec};
use crate::scalar::Scalar;
use crate::torus::{Degree, TorusElement, MAX_BOX_RADIUS};

/// The committed section fixture, validated by its residual on load.
pub const SECTION_FIXTURE: &str = include_str!("../../fixtures/section.txt");

/// Default location of the fixture file in the source tree.
pub fn default_fixture_path() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/section.txt"))
}

/// `1 + i`.
pub fn one_plus_i() -> TorusElement {
    TorusElement::one() + TorusElement::iota()
}

/// `1 + j`.
pub fn one_plus_j() -> TorusElement {
    TorusElement::one() + TorusElement::jota()
}

/// The map `m(u, v) = (1+i)u - (1+j)v`.
pub fn apply_m(column: &[TorusElement; 2]) -> TorusElement {
    &one_plus_i() * &column[0] - &one_plus_j() * &column[1]
}

/// The section `x -> (a x, b x)` of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    a: TorusElement,
    b: TorusElement,
}

impl Section {
    /// Checks `(1+i)a - (1+j)b = 1` exactly.
    pub fn new(a: TorusElement, b: TorusElement) -> Result<Self> {
        let s = Section { a, b };
        let r = s.residual();
        if r.is_zero() {
            Ok(s)
        } else {
            Err(AlgebraError::InvalidParameter(format!("not a section of m, residual {r}")))
        }
    }

    pub fn a(&self) -> &TorusElement {
        &self.a
    }

    pub fn b(&self) -> &TorusElement {
        &self.b
    }

    /// `(1+i)a - (1+j)b - 1`.
    pub fn residual(&self) -> TorusElement {
        apply_m(&[self.a.clone(), self.b.clone()]) - TorusElement::one()
    }

    pub fn apply(&self, x: &TorusElement) -> [TorusElement; 2] {
        [&self.a * x, &self.b * x]
    }

    pub fn support_size(&self) -> usize {
        self.a.num_terms() + self.b.num_terms()
    }

    /// Smallest radius of a box containing both supports.
    pub fn radius(&self) -> i32 {
        self.a.support().chain(self.b.support()).map(|d| d.a.abs().max(d.b.abs())).max().unwrap_or(0)
    }

    /// Fixture text: the two torus elements plus a residual attestation.
    pub fn to_fixture(&self, found_at_radius: i32) -> String {
        let mut s = String::new();
        writeln!(s, "# section x -> (a x, b x) of m(u, v) = (1+i)u - (1+j)v").unwrap();
        writeln!(s, "radius {found_at_radius}").unwrap();
        writeln!(s, "a {}", self.a).unwrap();
        writeln!(s, "b {}", self.b).unwrap();
        writeln!(s, "residual {}", self.residual()).unwrap();
        s
    }

    /// Parse fixture text. Returns the section and the recorded radius.
    pub fn from_fixture(text: &str) -> Result<(Section, i32)> {
        let bad = |m: &str| AlgebraError::Parse(format!("section fixture: {m}"));
        let (mut radius, mut a, mut b, mut residual) = (None, None, None, None);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, value) = line.split_once(' ').ok_or_else(|| bad(line))?;
            match key {
                "radius" => radius = Some(value.trim().parse::<i32>().map_err(|_| bad(line))?),
                "a" => a = Some(value.parse::<TorusElement>()?),
                "b" => b = Some(value.parse::<TorusElement>()?),
                "residual" => residual = Some(value.parse::<TorusElement>()?),
                _ => return Err(bad(line)),
            }
        }
        let residual = residual.ok_or_else(|| bad("missing residual line"))?;
        if !residual.is_zero() {
            return Err(bad("attested residual is not zero"));
        }
        let section = Section::new(a.ok_or_else(|| bad("missing a"))?, b.ok_or_else(|| bad("missing b"))?)?;
        Ok((section, radius.ok_or_else(|| bad("missing radius"))?))
    }

    /// The committed fixture.
    pub fn fixture() -> Result<(Section, i32)> {
        Self::from_fixture(SECTION_FIXTURE)
    }
}

/// The linear system for `(a, b)` in a box: one column per unknown
/// coefficient, in the order `a` at each box degree, then `b`.
struct SectionSystem {
    unknowns: Vec<(usize, Degree)>,
    columns: Vec<SparseVec>,
    target: SparseVec,
}

impl SectionSystem {
    fn new(radius: i32) -> Self {
        let degrees = Degree::box_degrees(radius);
        let mut coords = Coordinates::new();
        let mut unknowns = Vec::new();
        let mut columns = Vec::new();
        for (slot, factor) in [(0usize, one_plus_i()), (1, -one_plus_j())] {
            for &d in &degrees {
                let image = &factor * &TorusElement::monomial(d, Scalar::one());
                let col = image.terms().map(|(e, c)| (coords.index_of(*e), c.clone())).collect();
                unknowns.push((slot, d));
                columns.push(col);
            }
        }
        let target = SparseVec::from([(coords.index_of(Degree::ZERO), Scalar::one())]);
        SectionSystem { unknowns, columns, target }
    }

    /// Unique solution supported exactly on `support`, if any.
    fn solve_on(&self, support: &[usize]) -> Option<Vec<Scalar>> {
        let mut solver = SpanSolver::new();
        for &u in support {
            if !solver.push(self.columns[u].clone()) {
                // dependent columns: solutions on this support are not unique
                return None;
            }
        }
        let x = solver.express(&self.target)?;
        let values: Vec<Scalar> = (0..support.len()).map(|k| x.get(&k).cloned().unwrap_or_else(Scalar::zero)).collect();
        values.iter().all(|v| !v.is_zero()).then_some(values)
    }

    fn feasible(&self) -> bool {
        let mut solver = SpanSolver::membership_only();
        for c in &self.columns {
            solver.push(c.clone());
        }
        solver.contains(&self.target)
    }

    fn section_from(&self, support: &[usize], values: &[Scalar]) -> Result<Section> {
        let mut ab = [TorusElement::zero(), TorusElement::zero()];
        for (&u, v) in support.iter().zip(values) {
            let (slot, d) = self.unknowns[u];
            ab[slot].add_term(d, v);
        }
        let [a, b] = ab;
        Section::new(a, b)
    }
}

/// Advance `idx` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimal-support section with supports in `[-radius, radius]^2`.
pub fn solve_section(radius: i32) -> Result<Section> {
    if radius < 0 {
        return Err(AlgebraError::BoxExhausted(radius));
    }
    if radius > MAX_BOX_RADIUS {
        return Err(AlgebraError::DegreeOverflow);
    }
    let system = SectionSystem::new(radius);
    if !system.feasible() {
        return Err(AlgebraError::BoxExhausted(radius));
    }
    let n = system.columns.len();
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if let Some(values) = system.solve_on(&idx) {
                return system.section_from(&idx, &values);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("a feasible system has a minimal-support solution")
}

/// Grow the box from `start` until a section exists. Returns the section and
/// the first feasible radius.
pub fn solve_section_escalating(start: i32, max_radius: i32) -> Result<(Section, i32)> {
    let mut last = AlgebraError::BoxExhausted(start);
    for r in start.max(0)..=max_radius {
        match solve_section(r) {
            Ok(s) => return Ok((s, r)),
            Err(e @ AlgebraError::BoxExhausted(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}
