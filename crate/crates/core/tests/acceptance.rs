//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use eala::verify::{parse_selection, run_suite, Status, SuiteConfig, VerificationReport};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(suites: &[&str]) -> Vec<VerificationReport> {
    let selection: BTreeSet<_> = parse_selection(suites).expect("known suites");
    run_suite(&SuiteConfig::default(), &selection).expect("default config is valid")
}

fn find<'a>(reports: &'a [VerificationReport], id: &str) -> Vec<&'a VerificationReport> {
    reports.iter().filter(|r| r.check_id == id).collect()
}

/// All named checks present and passing; the detail lists any that are not.
fn all_pass(reports: &[VerificationReport], ids: &[&str]) -> Outcome {
    let bad: Vec<String> = ids
        .iter()
        .filter(|id| {
            let found = find(reports, id);
            found.is_empty() || found.iter().any(|r| r.status != Status::Pass)
        })
        .map(|id| id.to_string())
        .collect();
    if bad.is_empty() {
        outcome(true, format!("{} checks pass", ids.len()))
    } else {
        outcome(false, format!("not passing: {}", bad.join(", ")))
    }
}

fn min_samples(reports: &[VerificationReport], ids: &[&str], n: u64) -> bool {
    ids.iter().all(|id| find(reports, id).iter().all(|r| r.samples >= n))
}

fn criterion_1(r: &[VerificationReport]) -> Outcome {
    let o = all_pass(r, &["torus.relations", "torus.associativity"]);
    let exhaustive = find(r, "torus.associativity").iter().all(|x| x.box_radius == 3 && x.samples == 49 * 49 * 49);
    outcome(o.ok && exhaustive, o.detail)
}

fn criterion_2(r: &[VerificationReport]) -> Outcome {
    let o = all_pass(r, &["matrix.sl2_oracle"]);
    let boxed = find(r, "matrix.sl2_oracle").iter().all(|x| x.box_radius == 2 && x.samples == 4 * 25);
    outcome(o.ok && boxed, o.detail)
}

fn criterion_3(r: &[VerificationReport]) -> Outcome {
    let o = all_pass(r, &["form.symmetry", "form.invariance", "form.graded", "form.nondegenerate"]);
    outcome(o.ok && min_samples(r, &["form.symmetry", "form.invariance"], 1000), o.detail)
}

fn criterion_4(r: &[VerificationReport]) -> Outcome {
    let ids = ["cocycle.antisymmetry", "cocycle.identity", "jacobi.bracket_e"];
    let o = all_pass(r, &ids);
    outcome(o.ok && min_samples(r, &ids, 1000), o.detail)
}

fn criterion_5(r: &[VerificationReport]) -> Outcome {
    let o = all_pass(r, &["section.box0_infeasible", "section.solve", "section.fixture"]);
    let minimal = find(r, "section.solve").first().map(|x| x.box_radius);
    outcome(o.ok && minimal == Some(1), format!("{}; minimal feasible box {:?}", o.detail, minimal))
}

fn criterion_6(r: &[VerificationReport]) -> Outcome {
    all_pass(r, &["spectrum.projection", "spectrum.involution", "spectrum.ad_cubic", "spectrum.eigenprojections"])
}

fn criterion_7(r: &[VerificationReport]) -> Outcome {
    let o =
        all_pass(r, &["lemmas.y0", "lemmas.d_prime", "lemmas.central_term", "lemmas.abelian_seed", "lemmas.lemma1"]);
    outcome(o.ok && min_samples(r, &["lemmas.lemma1"], 200), o.detail)
}

fn criterion_8(r: &[VerificationReport]) -> Outcome {
    all_pass(r, &["spectrum.standard_mad"])
}

fn criterion_9(r: &[VerificationReport]) -> Outcome {
    let probes = find(r, "probe.nonfreeness");
    let boxes: Vec<i32> = probes.iter().map(|x| x.box_radius).collect();
    let ok = boxes == [0, 1, 2, 3] && probes.iter().all(|x| x.status == Status::NotFalsified);
    outcome(ok, format!("boxes {boxes:?} not-falsified"))
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["all", "--seed", "12345", "--format", "json"])
            .output()
            .expect("verify runs")
    };
    let (a, b) = (run(), run());
    let ok = a.status.success() && b.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    outcome(ok, format!("{} bytes per run", a.stdout.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let reports = run(&["all"]);
    let results = [
        ("torus relations and associativity", criterion_1(&reports)),
        ("sl2 criterion matches commutator-span oracle", criterion_2(&reports)),
        ("form symmetric, invariant, graded, nondegenerate", criterion_3(&reports)),
        ("cocycle identities and Jacobi on E", criterion_4(&reports)),
        ("section solver and box-0 infeasibility", criterion_5(&reports)),
        ("projection, involution and ad S cubic", criterion_6(&reports)),
        ("lemma chain", criterion_7(&reports)),
        ("standard MAD diagonalizes the basis", criterion_8(&reports)),
        ("non-freeness probe", criterion_9(&reports)),
        ("deterministic JSON reports", criterion_10()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2}: {name} ({})", i + 1, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", results.len() - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
