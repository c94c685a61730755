//! Acceptance suite: one test per exit criterion, each printing a pass/fail
//! line. Every comparison is exact (rational or series equality at a declared
//! bound); the only tolerances are in the floating-point limit checks, pinned
//! here at 1e-2 on the default grid.

use std::time::{Duration, Instant};

use finhyp::exact::rational;
use finhyp::harness::{
    default_config, emit_limit_report, emit_report, redact_timing, run_all, run_identity,
    run_limits, Identity, ReportFormat, VerificationReport, DEFAULT_GRID, DEFAULT_TOL,
};
use finhyp::hyperfun::{finite_gauss_sides, finite_pfaff_sides, thg_int_rhs, trunc_pfq_bracket, HyperParams};
use finhyp::ozgen::{prop54_sides, reconstruct_p, symmetry_check, toz_special_sides};
use finhyp::polylog::ak_congruence_sides;
use finhyp::polylog::Index;
use finhyp::{Rational, ResidueClass};

fn criterion(number: u32, description: &str, pass: bool) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {number:>2} [{verdict}]: {description}");
    assert!(pass, "criterion {number} failed: {description}");
}

fn run_default(identity: Identity) -> Vec<VerificationReport> {
    run_identity(identity.id(), &default_config(identity)).expect("identity runs")
}

fn all_equal(reports: &[VerificationReport]) -> bool {
    !reports.is_empty() && reports.iter().all(|r| r.equal)
}

#[test]
fn criterion_01_mzv_discretization_exhaustive() {
    let started = Instant::now();
    let reports = run_default(Identity::Msw);
    let elapsed = started.elapsed();
    // All 63 indices of weight <= 6 (admissible or not), every N in 1..=12.
    let pass = reports.len() == 63 * 12 && all_equal(&reports) && elapsed < Duration::from_secs(30);
    criterion(
        1,
        "series = discretization for multiple zeta sums, weight <= 6, N <= 12, exact, < 30 s",
        pass,
    );
}

#[test]
fn criterion_02_weighted_discretization_randomized() {
    let started = Instant::now();
    let reports = run_default(Identity::Hms);
    let elapsed = started.elapsed();
    // 15 indices of weight <= 4, 20 seeded weight vectors each.
    let pass = reports.len() == 15 * 20 && all_equal(&reports) && elapsed < Duration::from_secs(60);
    criterion(
        2,
        "weighted series = discretization, weight <= 4, N <= 8, 20 seeded vectors per index, exact, < 60 s",
        pass,
    );
}

#[test]
fn criterion_03_beta_closed_form_and_multivariate() {
    let beta = run_default(Identity::DiscBeta);
    let multi = run_default(Identity::MultivarBeta);
    let pass = beta.len() == 100
        && all_equal(&beta)
        && multi.len() == 3 * 30
        && all_equal(&multi)
        && multi.iter().any(|r| r.params["d"] == "2")
        && multi.iter().any(|r| r.params["d"] == "4");
    criterion(
        3,
        "truncated beta = discretized sum (N <= 20, 100 trials) and d in {2,3,4} (N <= 8), exact",
        pass,
    );
}

#[test]
fn criterion_04_integral_representations() {
    let t1f0 = run_default(Identity::T1f0);
    let gen = run_default(Identity::GenThgInt);
    let gauss_form = run_default(Identity::ThgInt);

    // Pinned derived instance: both sides 5/4.
    let (a, b, c, z) = (rational(1, 2), Rational::one(), Rational::from(2), rational(1, 2));
    let rhs = thg_int_rhs(&a, &b, &c, &z, 1).expect("pole-free");
    let lhs = trunc_pfq_bracket(
        &HyperParams::new(vec![a, b], vec![c], z, 1).expect("z nonzero"),
    )
    .expect("pole-free");
    let pinned = lhs == rational(5, 4) && rhs == rational(5, 4);

    let pass = t1f0.len() == 50
        && all_equal(&t1f0)
        && gen.len() == 4 * 50
        && all_equal(&gen)
        && gauss_form.len() == 50
        && all_equal(&gauss_form)
        && pinned;
    criterion(
        4,
        "binomial closed form, parameter-raising and Euler-integral analogues, >= 50 trials each, exact",
        pass,
    );
}

#[test]
fn criterion_05_summation_and_transformation_identities() {
    let gauss = run_default(Identity::FiniteGauss);
    let pfaff = run_default(Identity::FinitePfaff);
    let euler = run_default(Identity::FiniteEuler);
    let transform = run_default(Identity::Transform3f2);
    let chain = run_default(Identity::ChainSum);

    let (gl, gr) =
        finite_gauss_sides(&rational(1, 2), &rational(1, 2), &Rational::from(2), 1).unwrap();
    let (pl, pr) = finite_pfaff_sides(
        &rational(1, 2),
        &rational(1, 2),
        &Rational::one(),
        &rational(1, 2),
        1,
    )
    .unwrap();
    let pinned = gl == rational(9, 8)
        && gr == rational(9, 8)
        && pl == rational(5, 4)
        && pr == rational(5, 4);

    let pass = [&gauss, &pfaff, &euler, &transform, &chain]
        .iter()
        .all(|r| r.len() >= 50 && all_equal(r))
        && pinned;
    criterion(
        5,
        "finite Gauss summation, Pfaff/Euler transformations, 3F2 transformation and chain sum, >= 50 trials each, exact",
        pass,
    );
}

#[test]
fn criterion_06_generating_function_three_ways() {
    let started = Instant::now();
    let reports = run_default(Identity::TozThreeway);
    let elapsed = started.elapsed();
    // 5 x 4 grid points; z = 2 at even N makes N/z integral (3 rejections).
    let rejected: u64 = reports.iter().map(|r| r.rejected).sum();
    let pass = reports.len() == 17
        && rejected == 3
        && all_equal(&reports)
        && reports.iter().all(|r| r.params["divisible"] == "true")
        && elapsed < Duration::from_secs(120);
    criterion(
        6,
        "three generating-function expressions agree and the numerator divides exactly, N in 2..=6, degree 6, < 2 min",
        pass,
    );
}

#[test]
fn criterion_07_specialized_generating_function() {
    let reports = run_default(Identity::TozSpecial);
    let (s1, _, _) = toz_special_sides(3, 6).expect("computable");
    let pass = reports.len() == 5
        && all_equal(&reports)
        && s1.constant_term() == rational(5, 4);
    criterion(
        7,
        "specialized product and exponential expressions agree with the direct sum; constant term is the truncated zeta(2)",
        pass,
    );
}

#[test]
fn criterion_08_coefficient_identity_and_symmetry() {
    let prop = run_default(Identity::Prop54);
    let sym = run_default(Identity::Symmetry);

    let (al, ar) = prop54_sides(3, 1, 1, 3).unwrap();
    let (bl, br) = prop54_sides(3, 2, 1, 3).unwrap();
    let (sl, sr) = symmetry_check(3, 1, 1, 3).unwrap();
    let pinned = [al, ar, bl, br, sl, sr].iter().all(|v| *v == rational(9, 8));

    let pass = prop.len() == 34 * 5 && all_equal(&prop) && sym.len() == 34 * 7 && all_equal(&sym) && pinned;
    criterion(
        8,
        "coefficient = extended-index sum (k <= 7, N <= 6) and the q -> k-q symmetry (N <= 8), exact",
        pass,
    );
}

#[test]
fn criterion_09_zeta_polynomial_reconstruction() {
    let reports = run_default(Identity::ReconstructP);
    let p211 = reconstruct_p(2, 1, 1, &[2, 3, 4, 5, 6, 7, 8]).expect("reconstructs");
    let pass = all_equal(&reports)
        && reports.len() == 22 * 7
        && p211.canonical_text() == "Z2";
    criterion(
        9,
        "N-independent polynomials in truncated zeta values reproduce every direct sum, k <= 6, N in 2..=8",
        pass,
    );
}

#[test]
fn criterion_10_congruence_at_prime_cutoff() {
    let reports = run_default(Identity::AkCongruence);
    let (left, right) = ak_congruence_sides(&Index::new(vec![1]), 2, 5).unwrap();
    let pinned = left == ResidueClass::new(1, 5) && right == ResidueClass::new(1, 5);
    let pass = all_equal(&reports) && reports.len() >= 150 && pinned;
    criterion(
        10,
        "Arakawa-Kaneko congruence, weight <= 4, l <= 3, p in {5,7,11,13}, exact residues",
        pass,
    );
}

#[test]
fn criterion_11_float_limits() {
    let started = Instant::now();
    let reports = run_limits(&DEFAULT_GRID, DEFAULT_TOL);
    let elapsed = started.elapsed();
    let pass = reports.len() == 11
        && reports.iter().all(|r| r.pass)
        && reports
            .iter()
            .all(|r| r.samples.last().expect("samples").err <= 1e-2)
        && elapsed < Duration::from_secs(5);
    criterion(
        11,
        "limit checks: error <= 1e-2 at N = 10^4, non-increasing over N in {10^2, 10^3, 10^4}, < 5 s",
        pass,
    );
}

#[test]
fn criterion_12_suite_determinism() {
    let (mut first, first_limits) = run_all(42).expect("suite runs");
    let (mut second, second_limits) = run_all(42).expect("suite runs");
    redact_timing(&mut first);
    redact_timing(&mut second);
    let reports_match =
        emit_report(&first, ReportFormat::Json) == emit_report(&second, ReportFormat::Json);
    let limits_match = emit_limit_report(&first_limits, ReportFormat::Json)
        == emit_limit_report(&second_limits, ReportFormat::Json);
    let pass = reports_match && limits_match && !first.is_empty();
    criterion(
        12,
        "running the full suite twice with seed 42 yields byte-identical JSON reports",
        pass,
    );
}
