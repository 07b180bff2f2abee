mod common;

use rota_baxter::algebra::Algebra;
use rota_baxter::constraint::{classify, Constraint};
use rota_baxter::divided_power::{DPElement, DividedPower};
use rota_baxter::scalar::{int, ratio, ScalarPoly};
use rota_baxter::verifier::{
    dispatch_weight_zero, dispatch_weighted, emit_report, exit_code, grid_constraints,
    run_counterexample_suite, run_law_suite, run_positive_suite, strip_timing, CaseId, CaseSpec,
    Format, LawOptions, Orientation, PositiveOptions, Recipe, ReproOptions,
};

fn oracle(spec: &CaseSpec) -> DPElement {
    let base = DividedPower::quotient(spec.modulus, spec.weight.clone());
    let series = |r: Recipe| match r {
        Recipe::Identity => common::delta(&base, 0, base.one()),
        Recipe::Delta { index, basis } => common::delta(&base, index, base.z(basis)),
    };
    let d = common::rb_defect(&base, &spec.constraint, &spec.weight, &series(spec.f), &series(spec.g), spec.index);
    match spec.orientation {
        Orientation::ProductMinusOperator => d,
        Orientation::OperatorMinusProduct => d.scale(&int(-1)),
    }
}

fn poly(c: &[i64]) -> ScalarPoly {
    ScalarPoly::from_ints(c)
}

#[test]
fn weight_zero_cases_agree_with_the_oracle() {
    let mut seen = std::collections::BTreeSet::new();
    for omega in grid_constraints(&[-1, 2], 3) {
        if let Ok(spec) = dispatch_weight_zero(&omega) {
            let computed = spec.compute().unwrap();
            assert_eq!(computed, oracle(&spec), "{} {omega}", spec.id);
            assert_eq!(computed, spec.expected, "{} {omega}", spec.id);
            assert!(!computed.is_zero());
            seen.insert(spec.id);
        }
    }
    for id in CaseId::ALL.iter().filter(|c| !c.is_weighted()) {
        assert!(seen.contains(id), "{id} not reached");
    }
}

#[test]
fn worked_closed_forms() {
    let z = |m: usize, i: usize, c: i64| DPElement::term(Some(m), i, int(c));
    // (i): r=3, s=2, a3=2, b2=-1 gives a_r^2 b_s^(r-1) = 4
    let spec = dispatch_weight_zero(&Constraint::new(poly(&[0, 0, 0, 2]), poly(&[0, 0, -1]))).unwrap();
    assert_eq!(spec.id, CaseId::I);
    assert_eq!(spec.compute().unwrap(), z(1, 0, 4));
    // (viii): φ = 3, ψ = 2 gives -2b0 z2
    let spec = dispatch_weight_zero(&Constraint::new(poly(&[3]), poly(&[2]))).unwrap();
    assert_eq!(spec.id, CaseId::VIII);
    assert_eq!(spec.compute().unwrap(), z(3, 2, -4));
    // (iv) with r=2, b1=-1: the geometric sum vanishes
    let spec = dispatch_weight_zero(&Constraint::new(poly(&[0, 0, 1]), poly(&[0, -1]))).unwrap();
    assert_eq!(spec.id, CaseId::IV);
    assert_eq!(spec.compute().unwrap(), z(1, 0, 2));
    assert_eq!(oracle(&spec), z(1, 0, 2));
}

#[test]
fn weighted_cases_agree_with_the_oracle() {
    for w in [int(1), int(-2), ratio(3, 5)] {
        for a0 in -2..=3 {
            let spec = dispatch_weighted(&Constraint::xy_minus_const(int(a0)), &w).unwrap();
            let want = DPElement::term(Some(spec.modulus), 0, &w * int(a0) * int(a0 - 1));
            assert_eq!(spec.compute().unwrap(), want);
            assert_eq!(oracle(&spec), want);
        }
        for b0 in -2..=3 {
            let spec = dispatch_weighted(&Constraint::xy_minus_b0y_yx(int(b0)), &w).unwrap();
            let want = DPElement::term(Some(spec.modulus), 1, &w * &w * int(b0));
            assert_eq!(spec.compute().unwrap(), want);
            assert_eq!(oracle(&spec), want);
        }
    }
    assert!(dispatch_weighted(&Constraint::fftc(), &int(0)).is_err());
}

#[test]
fn members_of_omega_zero_are_skipped() {
    for omega in [Constraint::xy(), Constraint::fftc(), Constraint::commutator(), Constraint::xy_minus_b0y_yx(int(2))] {
        assert!(classify(&omega).in_omega0);
        assert!(dispatch_weight_zero(&omega).is_err());
    }
}

#[test]
fn small_repro_run() {
    let opts = ReproOptions { grid: vec![-1, 1], max_degree: 2, ..Default::default() };
    let report = run_counterexample_suite(&opts).unwrap();
    assert!(!report.entries.is_empty());
    assert!(report.entries.iter().all(|e| e.matched));
    assert_eq!(report.zero_expected, 0);
    assert!(report.skipped.iter().any(|(case, _)| case == "W-a0"));
    assert_eq!(exit_code(&report.entries), 0);

    let opts = ReproOptions { weight: ratio(3, 5), cases: vec![CaseId::WA0], ..Default::default() };
    let report = run_counterexample_suite(&opts).unwrap();
    assert!(report.entries.iter().all(|e| e.matched && e.case == "W-a0"));
    assert_eq!(report.zero_expected, 2);
}

#[test]
fn positive_suite_for_the_fftc() {
    let mut opts = PositiveOptions::new(Constraint::fftc(), 5);
    opts.trials = 5;
    opts.order = 5;
    opts.extension_pairs = 3;
    let entries = run_positive_suite(&opts).unwrap();
    assert!(entries.iter().all(|e| e.matched), "{}", emit_report(&entries, Format::Text));
    let mut opts = PositiveOptions::new(Constraint::fftc(), 5);
    opts.seed = None;
    assert!(run_positive_suite(&opts).is_err());
}

#[test]
fn positive_suite_flags_a_predicted_failure() {
    let mut opts = PositiveOptions::new(Constraint::xy_minus_const(int(5)), 6);
    opts.weights = vec![int(1)];
    opts.trials = 3;
    opts.order = 4;
    opts.extension_pairs = 3;
    let entries = run_positive_suite(&opts).unwrap();
    let recipe: Vec<_> = entries.iter().filter(|e| e.case == "W-a0").collect();
    assert_eq!(recipe.len(), 1);
    assert!(recipe[0].matched);
    assert_eq!(recipe[0].computed, "20·z0");
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let mut opts = LawOptions::new(17);
        opts.samples = 3;
        opts.degree_cap = 2;
        let mut entries = run_law_suite(&opts).unwrap();
        strip_timing(&mut entries);
        emit_report(&entries, Format::Json)
    };
    let a = run();
    assert_eq!(a, run());
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["match"], serde_json::Value::Bool(true));
        assert!(v.get("elapsed_ms").is_some());
    }
}
