//! The non-standard MAD: an involution `S` of `V = Q (+) Q` whose `-1`
//! eigenspace is the non-free kernel of `m(u, v) = (1+i)u - (1+j)v`.

pub mod involution;
pub mod lemmas;
pub mod probe;
pub mod section;

pub use involution::{ad_cubic_check, build_projection, EigenParts, SElement};
pub use lemmas::{
    abelian_seed_check, build_d_prime, central_term, compute_y, lemma1_cocycle_check, DPrime, YDecomposition,
};
pub use probe::{nonfreeness_probe, probe, ProbeResult};
pub use section::{apply_m, solve_section, solve_section_escalating, Section};

use crate::error::Result;
use crate::matrix::Matrix2;

/// A section of `m` with the objects built from it.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub section: Section,
    /// Smallest box radius in which the solver found a section.
    pub section_radius: i32,
    pub projection: Matrix2,
    pub s: SElement,
}

impl Counterexample {
    pub fn from_section(section: Section, section_radius: i32) -> Result<Self> {
        let projection = build_projection(&section);
        let s = SElement::from_projection(&projection)?;
        Ok(Counterexample { section, section_radius, projection, s })
    }

    /// Built from the committed section fixture.
    pub fn from_fixture() -> Result<Self> {
        let (section, radius) = Section::fixture()?;
        Self::from_section(section, radius)
    }
}
