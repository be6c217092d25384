//! The registry of checks and the suite runner.
//!
//! Checks run in registry order, which is also the dependency order
//! (section before spectrum before lemmas). Every randomized check draws from
//! its own ChaCha stream, keyed by the check's registry position, so a
//! report does not depend on which other suites were selected.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::counterexample::lemmas::check_rng;
use crate::counterexample::probe::{column_text, kernel_basis};
use crate::counterexample::{self as cx, apply_m, Counterexample, Section, YDecomposition};
use crate::eala::{form_e, EalaElement, StandardMad, Theta};
use crate::error::AlgebraError;
use crate::lie_torus::{form, graded_basis, slice_basis, slice_gram, GradedIndex, ROOTS};
use crate::linalg::determinant;
use crate::matrix::{is_in_sl2, monomial_matrices, CommutatorSpan, Matrix2};
use crate::scalar::Scalar;
use crate::torus::{commutator_degrees, Degree, TorusElement, MAX_BOX_RADIUS};

use super::report::{Status, VerificationReport};
use super::sample::Sampler;

/// Largest box radius searched when escalating the section solver.
pub const SECTION_SEARCH_LIMIT: i32 = 6;

/// Largest radius used by the brute-force sl2 oracle; its cost is quartic in
/// the number of box degrees.
pub const SL2_ORACLE_RADIUS: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Torus,
    Matrix,
    Form,
    Cocycle,
    Jacobi,
    Section,
    Spectrum,
    Lemmas,
    Probe,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Torus,
        Suite::Matrix,
        Suite::Form,
        Suite::Cocycle,
        Suite::Jacobi,
        Suite::Section,
        Suite::Spectrum,
        Suite::Lemmas,
        Suite::Probe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Torus => "torus",
            Suite::Matrix => "matrix",
            Suite::Form => "form",
            Suite::Cocycle => "cocycle",
            Suite::Jacobi => "jacobi",
            Suite::Section => "section",
            Suite::Spectrum => "spectrum",
            Suite::Lemmas => "lemmas",
            Suite::Probe => "probe",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError(format!("unknown suite {s:?}")))
    }
}

/// Expand a list of suite names (`all` selects every suite).
pub fn parse_selection<S: AsRef<str>>(names: &[S]) -> Result<BTreeSet<Suite>, ConfigError> {
    if names.is_empty() {
        return Err(ConfigError("no suite selected".into()));
    }
    let mut out = BTreeSet::new();
    for n in names {
        match n.as_ref() {
            "all" => out.extend(Suite::ALL),
            other => {
                out.insert(other.parse()?);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("configuration error: {0}")]
pub struct ConfigError(pub String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub box_radius: i32,
    pub samples: u64,
    pub seed: u64,
    /// Record wall-clock durations. Off by default so reports are byte-stable.
    pub record_timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { box_radius: 3, samples: 1000, seed: 0, record_timing: false }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(0..=MAX_BOX_RADIUS).contains(&self.box_radius) {
            return Err(ConfigError(format!("box must be in 0..={MAX_BOX_RADIUS}, got {}", self.box_radius)));
        }
        if self.samples < 1 {
            return Err(ConfigError("samples must be at least 1".into()));
        }
        Ok(())
    }
}

type CheckFn = fn(&Context, &mut ChaCha8Rng) -> Vec<VerificationReport>;

/// One registered check: id, owning suite, and the operation it runs.
pub struct CheckSpec {
    pub id: &'static str,
    pub suite: Suite,
    pub description: &'static str,
    run: CheckFn,
}

macro_rules! check {
    ($id:literal, $suite:ident, $desc:literal, $f:ident) => {
        CheckSpec { id: $id, suite: Suite::$suite, description: $desc, run: $f }
    };
}

pub static REGISTRY: &[CheckSpec] = &[
    check!("torus.relations", Torus, "i^2 = t1, j^2 = t2, ij = -ji", torus_relations),
    check!("torus.associativity", Torus, "associativity on all monomial triples in the box", torus_associativity),
    check!("torus.conjugation", Torus, "conjugation is an involutive anti-automorphism", torus_conjugation),
    check!("torus.center", Torus, "[Q,Q] is the span of non-(even,even) monomials", torus_center),
    check!("matrix.sl2_oracle", Matrix, "trace criterion agrees with brute-force commutator span", matrix_sl2_oracle),
    check!("matrix.jacobi", Matrix, "Jacobi identity for the matrix bracket", matrix_jacobi),
    check!("matrix.trace_commutator", Matrix, "traces of commutators lie in [Q,Q]", matrix_trace_commutator),
    check!("form.dimensions", Form, "dimensions of the graded pieces", form_dimensions),
    check!("form.symmetry", Form, "(x,y) = (y,x)", form_symmetry),
    check!("form.invariance", Form, "([x,y],z) = (x,[y,z])", form_invariance),
    check!("form.graded", Form, "graded orthogonality on basis pairs", form_graded),
    check!("form.nondegenerate", Form, "slice Gram determinants are nonzero", form_nondegenerate),
    check!("cocycle.antisymmetry", Cocycle, "sigma(x,y) = -sigma(y,x)", cocycle_antisymmetry),
    check!("cocycle.identity", Cocycle, "cyclic 2-cocycle identity", cocycle_identity),
    check!("cocycle.form_e", Cocycle, "form on E is symmetric, invariant, nondegenerate on C+D", cocycle_form_e),
    check!("cocycle.core", Cocycle, "brackets land in the core L+C", cocycle_core),
    check!("jacobi.bracket_e", Jacobi, "Jacobi identity for the bracket of E", jacobi_bracket_e),
    check!("section.box0_infeasible", Section, "no section supported in degree (0,0)", section_box0),
    check!("section.solve", Section, "section found by escalating the box; exact residual", section_solve),
    check!("section.fixture", Section, "committed section fixture matches the solver", section_fixture),
    check!("spectrum.projection", Spectrum, "p^2 = p, m p = m, p kills ker m", spectrum_projection),
    check!("spectrum.involution", Spectrum, "S^2 = I, S in sl2, S = -1 on ker m", spectrum_involution),
    check!("spectrum.ad_cubic", Spectrum, "(ad S)(ad S - 2)(ad S + 2) = 0 on the basis", spectrum_ad_cubic),
    check!("spectrum.eigenprojections", Spectrum, "eigenprojections partition the identity", spectrum_projectors),
    check!(
        "spectrum.standard_mad",
        Spectrum,
        "basis elements are eigenvectors of the standard MAD",
        spectrum_standard_mad
    ),
    check!("lemmas.y0", Lemmas, "the 0-component of [S, d_theta] vanishes", lemmas_y0),
    check!("lemmas.d_prime", Lemmas, "[S, d'] = 0 in all components", lemmas_d_prime),
    check!("lemmas.central_term", Lemmas, "sigma(S, y_-2 - y_2) = 0", lemmas_central_term),
    check!("lemmas.abelian_seed", Lemmas, "S, c, d' commute pairwise", lemmas_abelian_seed),
    check!("lemmas.lemma1", Lemmas, "sigma(S,[a,b]) = (alpha+beta) sigma(a,b) on eigenvectors", lemmas_lemma1),
    check!("probe.nonfreeness", Probe, "no single column generates ker m in the box", probe_nonfreeness),
];

/// Shared state for one run: parameters and the lazily built counterexample.
pub struct Context {
    pub config: SuiteConfig,
    pub theta: Theta,
    pub mad: StandardMad,
    counterexample: OnceLock<Result<Counterexample, String>>,
    y: OnceLock<Result<YDecomposition, String>>,
}

/// Witness text for an error: the element it carries when there is one.
fn error_witness(e: &AlgebraError) -> String {
    match e {
        AlgebraError::NotInSl2(s)
        | AlgebraError::CubicFailed(s)
        | AlgebraError::Y0NonZero(s)
        | AlgebraError::DPrimeBracketNonZero(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Context {
    pub fn new(config: SuiteConfig) -> Self {
        Context {
            config,
            theta: Theta::default(),
            mad: StandardMad::default(),
            counterexample: OnceLock::new(),
            y: OnceLock::new(),
        }
    }

    fn radius(&self) -> i32 {
        self.config.box_radius
    }

    fn samples(&self) -> u64 {
        self.config.samples
    }

    fn sampler<'r>(&self, rng: &'r mut ChaCha8Rng) -> Sampler<'r> {
        Sampler::new(rng, self.radius())
    }

    pub fn counterexample(&self) -> Result<&Counterexample, String> {
        self.counterexample
            .get_or_init(|| Counterexample::from_fixture().map_err(|e| error_witness(&e)))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn y(&self) -> Result<&YDecomposition, String> {
        self.y
            .get_or_init(|| {
                let c = self.counterexample()?;
                cx::compute_y(&c.s, &self.theta).map_err(|e| error_witness(&e))
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Run `test` on `samples` drawn inputs; the witness is the first failure.
fn sampled<T: Send + Sync>(
    id: &str,
    ctx: &Context,
    rng: &mut ChaCha8Rng,
    draw: impl Fn(&mut Sampler<'_>) -> T,
    test: impl Fn(&T) -> bool + Sync,
    show: impl Fn(&T) -> String,
) -> Vec<VerificationReport> {
    let mut sampler = ctx.sampler(rng);
    let inputs: Vec<T> = (0..ctx.samples()).map(|_| draw(&mut sampler)).collect();
    let witness = inputs.par_iter().find_first(|x| !test(x)).map(show);
    vec![VerificationReport::from_witness(id, ctx.radius(), ctx.samples(), witness)]
}

fn single(id: &str, radius: i32, samples: u64, witness: Option<String>) -> Vec<VerificationReport> {
    vec![VerificationReport::from_witness(id, radius, samples, witness)]
}

fn join<T: fmt::Display>(items: &[&T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ; ")
}

// ---- torus -------------------------------------------------------------

fn torus_relations(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let (i, j) = (TorusElement::iota(), TorusElement::jota());
    let checks =
        [(&i * &i, TorusElement::t1()), (&j * &j, TorusElement::t2()), (&i * &j + &j * &i, TorusElement::zero())];
    let witness = checks.iter().find(|(l, r)| l != r).map(|(l, r)| (l - r).to_string());
    single("torus.relations", ctx.radius(), checks.len() as u64, witness)
}

fn torus_associativity(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let monos: Vec<TorusElement> =
        Degree::box_degrees(ctx.radius()).into_iter().map(|d| TorusElement::monomial(d, Scalar::one())).collect();
    let n = monos.len() as u64;
    let witness = monos.par_iter().find_map_first(|x| {
        monos.iter().find_map(|y| {
            let xy = x * y;
            monos.iter().find(|z| &xy * *z != x * &(y * *z)).map(|z| join(&[x, y, z]))
        })
    });
    single("torus.associativity", ctx.radius(), n * n * n, witness)
}

fn torus_conjugation(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    sampled(
        "torus.conjugation",
        ctx,
        rng,
        |s| (s.torus(), s.torus()),
        |(x, y)| (x * y).conjugate() == &y.conjugate() * &x.conjugate() && x.conjugate().conjugate() == *x,
        |(x, y)| join(&[x, y]),
    )
}

fn torus_center(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let r = ctx.radius();
    let (i, j) = (TorusElement::iota(), TorusElement::jota());
    let degrees = Degree::box_degrees(r);
    let mut witness = degrees.iter().find_map(|&d| {
        let x = TorusElement::monomial(d, Scalar::one());
        let central = x.commutator(&i).is_zero() && x.commutator(&j).is_zero();
        (central != d.is_even_even()).then(|| x.to_string())
    });
    if witness.is_none() {
        let span = commutator_degrees(r);
        let bad_even = span.iter().find(|d| d.is_even_even());
        let missing = degrees.iter().find(|d| !d.is_even_even() && !span.contains(d));
        witness = bad_even.or(missing).map(|d| TorusElement::monomial(*d, Scalar::one()).to_string());
    }
    let n = degrees.len() as u64;
    single("torus.center", r, n * n, witness)
}

// ---- matrix ------------------------------------------------------------

fn matrix_sl2_oracle(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let r = ctx.radius().min(SL2_ORACLE_RADIUS);
    let span = match CommutatorSpan::new(r) {
        Ok(s) => s,
        Err(e) => return single("matrix.sl2_oracle", r, 0, Some(e.to_string())),
    };
    let units = monomial_matrices(r);
    let witness = units.par_iter().find_first(|x| is_in_sl2(x) != span.contains(x)).map(|x| x.to_string());
    single("matrix.sl2_oracle", r, units.len() as u64, witness)
}

fn matrix_jacobi(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    sampled(
        "matrix.jacobi",
        ctx,
        rng,
        |s| (s.matrix(), s.matrix(), s.matrix()),
        |(x, y, z)| (x.bracket(&y.bracket(z)) + y.bracket(&z.bracket(x)) + z.bracket(&x.bracket(y))).is_zero(),
        |(x, y, z)| join(&[x, y, z]),
    )
}

fn matrix_trace_commutator(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    sampled(
        "matrix.trace_commutator",
        ctx,
        rng,
        |s| (s.matrix(), s.matrix()),
        |(x, y)| {
            let t = (x * y).trace() - (y * x).trace();
            t.even_even_part().is_zero() && is_in_sl2(&x.bracket(y))
        },
        |(x, y)| join(&[x, y]),
    )
}

// ---- form --------------------------------------------------------------

fn form_dimensions(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let degrees = Degree::box_degrees(ctx.radius());
    let witness = degrees.iter().find_map(|&d| {
        let expected = |root: i32| if root == 0 && !d.is_even_even() { 2 } else { 1 };
        ROOTS
            .into_iter()
            .find(|&root| slice_basis(GradedIndex { degree: d, root }).len() != expected(root))
            .map(|root| format!("{}", GradedIndex { degree: d, root }))
    });
    single("form.dimensions", ctx.radius(), (degrees.len() * ROOTS.len()) as u64, witness)
}

fn form_symmetry(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    sampled(
        "form.symmetry",
        ctx,
        rng,
        |s| (s.lie(), s.lie()),
        |(x, y)| form(x, y) == form(y, x),
        |(x, y)| join(&[x, y]),
    )
}

fn form_invariance(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    sampled(
        "form.invariance",
        ctx,
        rng,
        |s| (s.lie(), s.lie(), s.lie()),
        |(x, y, z)| form(&x.bracket(y), z) == form(x, &y.bracket(z)),
        |(x, y, z)| join(&[x, y, z]),
    )
}

fn form_graded(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let basis = graded_basis(ctx.radius());
    let n = basis.len() as u64;
    let witness = basis.par_iter().find_map_first(|x| {
        basis.iter().find_map(|y| {
            let dual = x.index.degree.a + y.index.degree.a == 0
                && x.index.degree.b + y.index.degree.b == 0
                && x.index.root + y.index.root == 0;
            (!dual && !form(&x.element, &y.element).is_zero()).then(|| join(&[&x.element, &y.element]))
        })
    });
    single("form.graded", ctx.radius(), n * n, witness)
}

fn form_nondegenerate(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let mut cases = 0;
    let mut witness = None;
    for degree in Degree::box_degrees(ctx.radius()) {
        for root in ROOTS {
            cases += 1;
            let row = slice_gram(GradedIndex { degree, root });
            match row {
                Ok(row) if !row.determinant.is_zero() => {}
                Ok(row) => {
                    witness.get_or_insert_with(|| slice_basis(row.index)[0].to_string());
                }
                Err(e) => {
                    witness.get_or_insert_with(|| e.to_string());
                }
            }
        }
    }
    single("form.nondegenerate", ctx.radius(), cases, witness)
}

// ---- cocycle -----------------------------------------------------------

fn cocycle_antisymmetry(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let t = &ctx.theta;
    sampled(
        "cocycle.antisymmetry",
        ctx,
        rng,
        |s| (s.lie(), s.lie()),
        |(x, y)| t.cocycle(x, y) == -t.cocycle(y, x) && t.cocycle(x, x).is_zero(),
        |(x, y)| join(&[x, y]),
    )
}

fn cocycle_identity(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let t = &ctx.theta;
    sampled(
        "cocycle.identity",
        ctx,
        rng,
        |s| (s.lie(), s.lie(), s.lie()),
        |(x, y, z)| (t.cocycle(&x.bracket(y), z) + t.cocycle(&y.bracket(z), x) + t.cocycle(&z.bracket(x), y)).is_zero(),
        |(x, y, z)| join(&[x, y, z]),
    )
}

fn cocycle_form_e(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let t = &ctx.theta;
    let gram = [EalaElement::central(), EalaElement::derivation()];
    let gram: Vec<Vec<Scalar>> = gram.iter().map(|x| gram.iter().map(|y| form_e(x, y)).collect()).collect();
    if determinant(&gram).is_zero() {
        return single("cocycle.form_e", ctx.radius(), 0, Some(EalaElement::central().to_string()));
    }
    sampled(
        "cocycle.form_e",
        ctx,
        rng,
        |s| (s.eala(), s.eala(), s.eala()),
        |(x, y, z)| form_e(x, y) == form_e(y, x) && form_e(&t.bracket(x, y), z) == form_e(x, &t.bracket(y, z)),
        |(x, y, z)| join(&[x, y, z]),
    )
}

fn cocycle_core(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let t = &ctx.theta;
    sampled(
        "cocycle.core",
        ctx,
        rng,
        |s| (s.eala(), s.eala()),
        |(x, y)| {
            let core = |e: &EalaElement| EalaElement::new(e.l.clone(), e.c.clone(), Scalar::zero());
            t.bracket(x, y).in_core() && t.bracket(&core(x), &core(y)).in_core()
        },
        |(x, y)| join(&[x, y]),
    )
}

fn jacobi_bracket_e(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let t = &ctx.theta;
    sampled(
        "jacobi.bracket_e",
        ctx,
        rng,
        |s| (s.eala(), s.eala(), s.eala()),
        |(x, y, z)| {
            let a = t.bracket(x, &t.bracket(y, z));
            let b = t.bracket(y, &t.bracket(z, x));
            let c = t.bracket(z, &t.bracket(x, y));
            (&(&a + &b) + &c).is_zero()
        },
        |(x, y, z)| join(&[x, y, z]),
    )
}

// ---- section -----------------------------------------------------------

fn section_box0(_: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let witness = match cx::solve_section(0) {
        Err(AlgebraError::BoxExhausted(0)) => None,
        Ok(s) => Some(column_text(&[s.a().clone(), s.b().clone()])),
        Err(e) => Some(e.to_string()),
    };
    single("section.box0_infeasible", 0, 1, witness)
}

fn section_solve(_: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    match cx::solve_section_escalating(0, SECTION_SEARCH_LIMIT) {
        Ok((s, r)) => {
            let res = s.residual();
            let witness = (!res.is_zero()).then(|| res.to_string());
            single("section.solve", r, s.support_size() as u64, witness)
        }
        Err(e) => single("section.solve", SECTION_SEARCH_LIMIT, 0, Some(e.to_string())),
    }
}

fn section_fixture(_: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let (fixture, r) = match Section::fixture() {
        Ok(f) => f,
        Err(e) => return single("section.fixture", 0, 0, Some(e.to_string())),
    };
    let witness = match cx::solve_section_escalating(0, SECTION_SEARCH_LIMIT) {
        Ok(found) if found == (fixture.clone(), r) => None,
        Ok((s, _)) => Some(column_text(&[s.a().clone(), s.b().clone()])),
        Err(e) => Some(e.to_string()),
    };
    single("section.fixture", r, 1, witness)
}

// ---- spectrum ----------------------------------------------------------

fn with_counterexample(
    id: &str,
    ctx: &Context,
    f: impl FnOnce(&Counterexample) -> (u64, Option<String>),
) -> Vec<VerificationReport> {
    match ctx.counterexample() {
        Ok(c) => {
            let (n, w) = f(c);
            single(id, ctx.radius(), n, w)
        }
        Err(w) => single(id, ctx.radius(), 0, Some(w)),
    }
}

fn spectrum_projection(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    with_counterexample("spectrum.projection", ctx, |c| {
        let p = &c.projection;
        if &(p * p) != p {
            return (1, Some(p.to_string()));
        }
        let basis = [[TorusElement::one(), TorusElement::zero()], [TorusElement::zero(), TorusElement::one()]];
        if let Some(col) = basis.iter().find(|col| apply_m(&p.apply(col)) != apply_m(col)) {
            return (2, Some(column_text(col)));
        }
        let kernel = kernel_basis(ctx.radius(), None).unwrap_or_default();
        let bad = kernel.iter().find(|w| p.apply(w).iter().any(|e| !e.is_zero()));
        let n = 3 + kernel.len() as u64;
        (n, bad.map(column_text))
    })
}

fn spectrum_involution(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    with_counterexample("spectrum.involution", ctx, |c| {
        let s = c.s.matrix().matrix();
        if s * s != Matrix2::identity() || !is_in_sl2(s) {
            return (1, Some(s.to_string()));
        }
        let kernel = kernel_basis(ctx.radius(), None).unwrap_or_default();
        let neg = |w: &[TorusElement; 2]| [-&w[0], -&w[1]];
        let bad_kernel = kernel.iter().find(|w| s.apply(w) != neg(w)).map(column_text);
        let images: Vec<[TorusElement; 2]> = Degree::box_degrees(ctx.radius())
            .into_iter()
            .map(|d| c.section.apply(&TorusElement::monomial(d, Scalar::one())))
            .collect();
        let bad_image = images.iter().find(|u| &s.apply(u) != *u).map(column_text);
        ((1 + kernel.len() + images.len()) as u64, bad_kernel.or(bad_image))
    })
}

fn spectrum_ad_cubic(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    match ctx.counterexample() {
        Ok(c) => vec![cx::ad_cubic_check(&c.s, ctx.radius())],
        Err(w) => single("spectrum.ad_cubic", ctx.radius(), 0, Some(w)),
    }
}

fn spectrum_projectors(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    with_counterexample("spectrum.eigenprojections", ctx, |c| {
        let basis = graded_basis(ctx.radius());
        let witness = basis
            .par_iter()
            .find_first(|b| {
                let Ok(parts) = c.s.eigen_decomposition(&b.element) else { return true };
                if parts.sum() != b.element {
                    return true;
                }
                // each part is fixed by its own projector and killed by the others
                parts.labelled().iter().any(|(lambda, part)| {
                    let Ok(again) = c.s.eigen_decomposition(part) else { return true };
                    again.labelled().iter().any(|(mu, q)| if mu == lambda { q != part } else { !q.is_zero() })
                })
            })
            .map(|b| b.element.to_string());
        (basis.len() as u64, witness)
    })
}

fn spectrum_standard_mad(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let basis = graded_basis(ctx.radius());
    let a = ctx.mad.generator_scale();
    let witness = basis
        .par_iter()
        .find_first(|b| {
            let expected = (a * &Scalar::from_int(b.index.root.into()), ctx.theta.value(b.index.degree));
            ctx.mad.eigenvalues(&ctx.theta, &b.element).map_or(true, |got| got != expected)
        })
        .map(|b| b.element.to_string());
    // c is central and d_theta acts through theta, so the whole MAD acts diagonally
    let witness = witness.or_else(|| {
        ctx.mad.spanning_set().iter().enumerate().find_map(|(k, h)| {
            ctx.mad.spanning_set()[k..].iter().find(|g| !ctx.theta.bracket(h, g).is_zero()).map(|g| join(&[h, g]))
        })
    });
    single("spectrum.standard_mad", ctx.radius(), basis.len() as u64, witness)
}

// ---- lemmas ------------------------------------------------------------

fn lemmas_y0(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let witness = match ctx.y() {
        Ok(yd) => (!yd.y0.is_zero()).then(|| yd.y0.to_string()),
        Err(w) => Some(w),
    };
    single("lemmas.y0", ctx.radius(), 1, witness)
}

fn lemmas_d_prime(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let witness = (|| {
        let c = ctx.counterexample()?;
        let yd = ctx.y()?;
        cx::build_d_prime(&c.s, yd, &ctx.theta).map(|_| ()).map_err(|e| error_witness(&e))
    })()
    .err();
    single("lemmas.d_prime", ctx.radius(), 1, witness)
}

fn lemmas_central_term(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let witness = (|| {
        let c = ctx.counterexample()?;
        let yd = ctx.y()?;
        let v = cx::central_term(&c.s, yd, &ctx.theta);
        if v.is_zero() {
            Ok(())
        } else {
            Err((&yd.ym2 - &yd.y2).to_string())
        }
    })()
    .err();
    single("lemmas.central_term", ctx.radius(), 1, witness)
}

fn lemmas_abelian_seed(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    let built = (|| {
        let c = ctx.counterexample()?;
        let yd = ctx.y()?;
        let dp = cx::build_d_prime(&c.s, yd, &ctx.theta).map_err(|e| error_witness(&e))?;
        Ok::<_, String>(cx::abelian_seed_check(&c.s, &dp, &ctx.theta))
    })();
    match built {
        Ok(mut r) => {
            r.box_radius = ctx.radius();
            vec![r]
        }
        Err(w) => single("lemmas.abelian_seed", ctx.radius(), 0, Some(w)),
    }
}

fn lemmas_lemma1(ctx: &Context, rng: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    match ctx.counterexample() {
        Ok(c) => vec![cx::lemma1_cocycle_check(&c.s, &ctx.theta, ctx.radius(), ctx.samples(), rng)],
        Err(w) => single("lemmas.lemma1", ctx.radius(), 0, Some(w)),
    }
}

// ---- probe -------------------------------------------------------------

fn probe_nonfreeness(ctx: &Context, _: &mut ChaCha8Rng) -> Vec<VerificationReport> {
    (0..=ctx.radius())
        .map(|r| {
            cx::nonfreeness_probe(r)
                .unwrap_or_else(|e| VerificationReport::fail("probe.nonfreeness", r, 0, e.to_string()))
        })
        .collect()
}

/// Run the selected suites. Reports come back in registry order.
pub fn run_suite(config: &SuiteConfig, selection: &BTreeSet<Suite>) -> Result<Vec<VerificationReport>, ConfigError> {
    config.validate()?;
    let ctx = Context::new(config.clone());
    let mut out = Vec::new();
    for (stream, spec) in REGISTRY.iter().enumerate() {
        if !selection.contains(&spec.suite) {
            continue;
        }
        let mut rng = check_rng(config.seed, stream as u64);
        let start = Instant::now();
        let mut reports = (spec.run)(&ctx, &mut rng);
        let elapsed = if config.record_timing { start.elapsed().as_millis() as u64 } else { 0 };
        for r in &mut reports {
            debug_assert_eq!(r.check_id, spec.id);
            debug_assert!(r.status != Status::Fail || r.witness.is_some());
            r.seed = config.seed;
            r.duration_ms = elapsed;
        }
        out.extend(reports);
    }
    Ok(out)
}

/// True when no report failed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| !r.is_failure())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_unique_and_ordered_by_suite() {
        let ids: BTreeSet<_> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
        assert!(REGISTRY.windows(2).all(|w| w[0].suite <= w[1].suite));
        for c in REGISTRY {
            assert!(c.id.starts_with(c.suite.name()), "{}", c.id);
            assert!(!c.description.is_empty());
        }
    }

    #[test]
    fn selection_parsing() {
        assert_eq!(parse_selection(&["all"]).unwrap().len(), 9);
        assert_eq!(parse_selection(&["torus", "probe"]).unwrap().len(), 2);
        assert!(parse_selection(&["nope"]).is_err());
        assert!(parse_selection::<&str>(&[]).is_err());
    }

    #[test]
    fn config_validation() {
        let bad = SuiteConfig { box_radius: -1, ..Default::default() };
        assert!(run_suite(&bad, &parse_selection(&["torus"]).unwrap()).is_err());
        let bad = SuiteConfig { samples: 0, ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn section_suite_at_box_zero() {
        let cfg = SuiteConfig { box_radius: 0, samples: 1, ..Default::default() };
        let reports = run_suite(&cfg, &parse_selection(&["section"]).unwrap()).unwrap();
        let solve = reports.iter().find(|r| r.check_id == "section.solve").unwrap();
        assert_eq!(solve.status, Status::Pass);
        assert_eq!(solve.box_radius, 1);
        assert!(all_passed(&reports));
    }
}
