//! The classification, counterexample, positive, and structure-law suites.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::cases::{dispatch_weight_zero, dispatch_weighted, CaseId, CaseSpec, Skip};
use super::report::{sort_entries, ReportEntry};
use crate::algebra::{check_diff_axiom, Algebra, Based, LinearOperator, Sample};
use crate::constraint::{classify, Constraint, Verdict};
use crate::divided_power::DividedPower;
use crate::error::{parse_error, Error, Result};
use crate::free_rb::{
    map_slots, monad_mu, monad_mu_word, outer_unit, vartheta, Extension, FreeRb,
};
use crate::hurwitz::{
    check_cover_relation, delta, delta_row, epsilon, rb_defect_series, CoverOperator, Hurwitz,
    Series,
};
use crate::scalar::{int, ratio, Scalar, ScalarPoly};

/// The default weights: zero, a unit, a negative integer, a proper fraction.
pub fn default_weights() -> Vec<Scalar> {
    vec![int(0), int(1), int(-2), ratio(3, 5)]
}

/// The default coefficient grid.
pub const DEFAULT_GRID: [i64; 4] = [-2, -1, 1, 2];

/// `classify` together with the predictions it implies.
#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub constraint: Constraint,
    pub verdict: Verdict,
}

impl ClassifyReport {
    /// Covers of weight-0 Rota-Baxter operators stay Rota-Baxter.
    pub fn predicts_weight_zero(&self) -> bool {
        self.verdict.in_omega0
    }

    /// Covers stay Rota-Baxter at every weight.
    pub fn predicts_all_weights(&self) -> bool {
        self.verdict.in_omegak
    }
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.verdict;
        let yes = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "constraint: {}", self.constraint)?;
        writeln!(f, "in T: yes")?;
        writeln!(f, "in Ω₀: {}", yes(v.in_omega0))?;
        writeln!(f, "in Ω_k: {}", yes(v.in_omegak))?;
        writeln!(
            f,
            "normal form: {}",
            serde_json::to_string(&v.normal_form).expect("serializable")
        )?;
        writeln!(
            f,
            "cover of every weight-0 Rota-Baxter operator is Rota-Baxter: {}",
            yes(self.predicts_weight_zero())
        )?;
        write!(
            f,
            "cover of every Rota-Baxter operator of every weight λ is Rota-Baxter: {}",
            yes(self.predicts_all_weights())
        )
    }
}

pub fn run_classify(phi: &str, psi: &str) -> Result<ClassifyReport> {
    let constraint = Constraint::parse(phi, psi)?;
    let verdict = classify(&constraint);
    Ok(ClassifyReport { constraint, verdict })
}

/// Every polynomial of degree at most `max_degree` whose coefficients all lie
/// in `grid`, plus the zero polynomial.
pub fn grid_polys(grid: &[i64], max_degree: usize) -> Vec<ScalarPoly> {
    let mut vectors: Vec<Vec<i64>> = vec![vec![]];
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..=max_degree {
        let next: Vec<Vec<i64>> = layer
            .iter()
            .flat_map(|v| {
                grid.iter().map(move |c| {
                    let mut w = v.clone();
                    w.push(*c);
                    w
                })
            })
            .collect();
        vectors.extend(next.iter().cloned());
        layer = next;
    }
    let mut polys: Vec<ScalarPoly> = vectors.iter().map(|v| ScalarPoly::from_ints(v)).collect();
    polys.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    polys.dedup();
    polys
}

/// All `(φ, ψ)` pairs from [`grid_polys`].
pub fn grid_constraints(grid: &[i64], max_degree: usize) -> Vec<Constraint> {
    let polys = grid_polys(grid, max_degree);
    polys
        .iter()
        .flat_map(|phi| polys.iter().map(move |psi| Constraint::new(phi.clone(), psi.clone())))
        .collect()
}

#[derive(Clone, Debug)]
pub struct ReproOptions {
    pub cases: Vec<CaseId>,
    pub weight: Scalar,
    pub grid: Vec<i64>,
    pub max_degree: usize,
}

impl Default for ReproOptions {
    fn default() -> Self {
        Self {
            cases: CaseId::ALL.to_vec(),
            weight: int(0),
            grid: DEFAULT_GRID.to_vec(),
            max_degree: 3,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReproReport {
    pub entries: Vec<ReportEntry>,
    /// Per case or constraint, why nothing was run.
    pub skipped: Vec<(String, String)>,
    /// Number of entries whose expected defect is zero.
    pub zero_expected: usize,
}

pub(crate) fn case_entry(spec: &CaseSpec, seed: Option<u64>) -> Result<ReportEntry> {
    let start = Instant::now();
    let computed = spec.compute()?;
    Ok(ReportEntry {
        case: spec.id.as_str().to_string(),
        constraint: spec.constraint.to_string(),
        weight: spec.weight.to_string(),
        computed: computed.to_string(),
        expected: format!("{} = {}", spec.formula, spec.expected),
        matched: computed == spec.expected,
        seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Instantiates every selected case over the grid and compares each
/// computed defect with its closed form.
pub fn run_counterexample_suite(opts: &ReproOptions) -> Result<ReproReport> {
    let mut report = ReproReport::default();
    let weighted = !opts.weight.is_zero();
    for id in &opts.cases {
        if id.is_weighted() != weighted {
            let need = if id.is_weighted() { "λ ≠ 0" } else { "λ = 0" };
            report
                .skipped
                .push((id.to_string(), format!("case {id} needs {need}")));
        }
    }
    let specs: Vec<std::result::Result<CaseSpec, (Constraint, Skip)>> = if weighted {
        let mut values: Vec<i64> = opts.grid.iter().copied().chain([0]).collect();
        values.sort_unstable();
        values.dedup();
        let mut omegas: Vec<Constraint> =
            values.iter().map(|a| Constraint::xy_minus_const(int(*a))).collect();
        omegas.extend(values.iter().map(|b| Constraint::xy_minus_b0y_yx(int(*b))));
        omegas
            .into_iter()
            .map(|w| dispatch_weighted(&w, &opts.weight).map_err(|s| (w, s)))
            .collect()
    } else {
        grid_constraints(&opts.grid, opts.max_degree)
            .into_iter()
            .map(|w| dispatch_weight_zero(&w).map_err(|s| (w, s)))
            .collect()
    };
    let mut chosen = Vec::new();
    for s in specs {
        match s {
            Ok(spec) if opts.cases.contains(&spec.id) => chosen.push(spec),
            Ok(_) => {}
            Err((w, skip)) => report.skipped.push((w.to_string(), skip.reason)),
        }
    }
    for id in &opts.cases {
        if id.is_weighted() == weighted && !chosen.iter().any(|s| s.id == *id) {
            report.skipped.push((
                id.to_string(),
                format!("no constraint in the grid satisfies the hypotheses of case {id}"),
            ));
        }
    }
    report.zero_expected = chosen.iter().filter(|s| s.expected.is_zero()).count();
    let mut entries = chosen
        .par_iter()
        .map(|spec| case_entry(spec, None))
        .collect::<Result<Vec<_>>>()?;
    sort_entries(&mut entries);
    report.entries = entries;
    Ok(report)
}

/// Which carrier the positive suite samples from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSelector {
    /// `Ш(k)/I_m` with `P̄`, for each listed `m`.
    Quotients(Vec<usize>),
    /// The full `Ш(k)` with `P`, sampled with support below 6.
    Full,
    /// `Ш(Ш(k)/I_m)` with `P_A`.
    FreeOverQuotient(usize),
}

impl Default for AlgebraSelector {
    fn default() -> Self {
        AlgebraSelector::Quotients((1..=5).collect())
    }
}

impl FromStr for AlgebraSelector {
    type Err = Error;

    /// `dp:m`, `dp:all` (m = 1..5), `dp:inf`, or `free:dp:m`.
    fn from_str(s: &str) -> Result<Self> {
        let modulus = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(m) if m > 0 => Ok(m),
                _ => Err(parse_error("algebra", s, "modulus must be a positive integer")),
            }
        };
        if let Some(rest) = s.strip_prefix("free:dp:") {
            return Ok(AlgebraSelector::FreeOverQuotient(modulus(rest)?));
        }
        match s.strip_prefix("dp:") {
            Some("all") => Ok(AlgebraSelector::default()),
            Some("inf") => Ok(AlgebraSelector::Full),
            Some(rest) => Ok(AlgebraSelector::Quotients(vec![modulus(rest)?])),
            None => Err(parse_error("algebra", s, "expected dp:<m>, dp:all, dp:inf or free:dp:<m>")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PositiveOptions {
    pub constraint: Constraint,
    pub weights: Vec<Scalar>,
    pub order: usize,
    pub trials: usize,
    pub seed: Option<u64>,
    pub algebra: AlgebraSelector,
    /// Pairs for the extension-side differential check; 0 skips it.
    pub extension_pairs: usize,
}

impl PositiveOptions {
    pub fn new(constraint: Constraint, seed: u64) -> Self {
        Self {
            constraint,
            weights: default_weights(),
            order: 8,
            trials: 50,
            seed: Some(seed),
            algebra: AlgebraSelector::default(),
            extension_pairs: 10,
        }
    }
}

/// What random trials over one carrier found.
#[derive(Clone, Debug, Default)]
pub struct TrialOutcome {
    /// `(trial, n, defect)` of the first nonzero defect.
    pub defect: Option<(usize, usize, String)>,
    /// `(trial, n)` of the first cover-relation failure.
    pub relation_failure: Option<(usize, usize)>,
}

/// Random pairs over `base` with operator `p`: looks for a nonzero
/// `rb_defect` at `n ≤ order` and re-checks the cover relation.
pub fn cover_trials<A: Sample>(
    p: &LinearOperator<A>,
    omega: &Constraint,
    weight: &Scalar,
    trials: usize,
    order: usize,
    rng: &mut dyn RngCore,
) -> Result<TrialOutcome> {
    let ring = Hurwitz::new(p.carrier().clone(), weight.clone());
    let base = ring.base().clone();
    let cover = CoverOperator::new(p.clone(), omega.clone(), weight.clone());
    let mut out = TrialOutcome::default();
    for t in 0..trials {
        let f = ring.sample(rng);
        let g = ring.sample(rng);
        if out.defect.is_none() {
            let d = rb_defect_series(&cover, &f, &g)?;
            if let Some(n) = (0..=order).find(|n| !base.is_zero(&d.component(*n))) {
                out.defect = Some((t, n, base.render(&d.component(n))));
            }
        }
        if out.relation_failure.is_none() {
            if let Some(w) = check_cover_relation(&cover, &f, order)?.witness() {
                out.relation_failure = Some((t, w.sample_index));
            }
        }
    }
    Ok(out)
}

fn job_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn predicted(verdict: &Verdict, weight: &Scalar) -> bool {
    if weight.is_zero() {
        verdict.in_omega0
    } else {
        verdict.in_omegak
    }
}

/// Random-trial evidence for the cover and extension sides of one constraint.
///
/// Where the classification predicts failure, the random entries are
/// informational and the recipe entry carries the verdict.
pub fn run_positive_suite(opts: &PositiveOptions) -> Result<Vec<ReportEntry>> {
    let seed = opts.seed.ok_or(Error::MissingSeed)?;
    let omega = &opts.constraint;
    let verdict = classify(omega);
    let carriers: Vec<(String, Option<usize>, bool)> = match &opts.algebra {
        AlgebraSelector::Quotients(ms) => {
            ms.iter().map(|m| (format!("dp:{m}"), Some(*m), false)).collect()
        }
        AlgebraSelector::Full => vec![("dp:inf".to_string(), None, false)],
        AlgebraSelector::FreeOverQuotient(m) => vec![(format!("free:dp:{m}"), Some(*m), true)],
    };
    let mut jobs = Vec::new();
    for (wi, w) in opts.weights.iter().enumerate() {
        for (ci, c) in carriers.iter().enumerate() {
            jobs.push((wi * carriers.len() + ci, w.clone(), c.clone()));
        }
    }
    let mut entries: Vec<ReportEntry> = jobs
        .par_iter()
        .map(|(stream, w, (label, m, free))| {
            let start = Instant::now();
            let mut rng = job_rng(seed, *stream as u64);
            let dp = match m {
                Some(m) => DividedPower::quotient(*m, w.clone()),
                None => DividedPower::full(w.clone()),
            };
            let outcome = if *free {
                let ring = FreeRb::new(dp, w.clone());
                cover_trials(&ring.rota_baxter_operator(), omega, w, opts.trials, opts.order, &mut rng)?
            } else {
                cover_trials(&dp.rota_baxter_operator(), omega, w, opts.trials, opts.order, &mut rng)?
            };
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let expect_zero = predicted(&verdict, w);
            let computed = match &outcome.defect {
                None => "0".to_string(),
                Some((t, n, d)) => format!("n={n}: {d} (trial {t})"),
            };
            let rb = ReportEntry {
                case: format!("cover-rb {label}"),
                constraint: omega.to_string(),
                weight: w.to_string(),
                computed,
                expected: if expect_zero { "0" } else { "nonzero (informational)" }.to_string(),
                matched: !expect_zero || outcome.defect.is_none(),
                seed: Some(seed),
                elapsed_ms,
            };
            let rel = ReportEntry {
                case: format!("cover-relation {label}"),
                constraint: omega.to_string(),
                weight: w.to_string(),
                computed: match outcome.relation_failure {
                    None => "pass".into(),
                    Some((t, n)) => format!("fail at n={n} (trial {t})"),
                },
                expected: "pass".into(),
                matched: outcome.relation_failure.is_none(),
                seed: Some(seed),
                elapsed_ms: 0,
            };
            Ok(vec![rb, rel])
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    for (wi, w) in opts.weights.iter().enumerate() {
        if !predicted(&verdict, w) {
            let spec = if w.is_zero() {
                dispatch_weight_zero(omega).ok()
            } else {
                dispatch_weighted(omega, w).ok()
            };
            if let Some(spec) = spec {
                let mut e = case_entry(&spec, Some(seed))?;
                e.matched = e.matched && !spec.expected.is_zero();
                entries.push(e);
            }
        }
        if opts.extension_pairs > 0 {
            let stream = (opts.weights.len() * carriers.len() + wi) as u64;
            entries.push(extension_entry(omega, w, opts.extension_pairs, seed, stream, predicted(&verdict, w))?);
        }
    }
    Ok(entries)
}

/// The extension `d̃` of `d` on `Ш(Ш(k))` against the weight-λ differential axiom.
pub fn extension_entry(
    omega: &Constraint,
    weight: &Scalar,
    pairs: usize,
    seed: u64,
    stream: u64,
    expect_pass: bool,
) -> Result<ReportEntry> {
    let start = Instant::now();
    let mut rng = job_rng(seed, stream);
    let base = DividedPower::full(weight.clone());
    let ring = FreeRb::new(base.clone(), weight.clone());
    let ext = Extension::new(ring.clone(), base.derivation(), omega.clone())?;
    let samples: Vec<_> = (0..pairs)
        .map(|_| (ring.sample(&mut rng), ring.sample(&mut rng)))
        .collect();
    let outcome = check_diff_axiom(&ext.as_operator(), weight, &samples)?;
    Ok(ReportEntry {
        case: "extension-diff free:dp:inf".into(),
        constraint: omega.to_string(),
        weight: weight.to_string(),
        computed: match outcome.witness() {
            None => "pass".into(),
            Some(w) => format!("fail: {}", ring.render(&w.defect)),
        },
        expected: if expect_pass { "pass" } else { "informational" }.into(),
        matched: !expect_pass || outcome.passed(),
        seed: Some(seed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Predicted and observed behaviour of one constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Consistency {
    pub constraint: String,
    pub predicted_weight_zero: bool,
    pub observed_weight_zero: bool,
    pub predicted_all_weights: bool,
    pub observed_all_weights: bool,
}

impl Consistency {
    pub fn agrees(&self) -> bool {
        self.predicted_weight_zero == self.observed_weight_zero
            && self.predicted_all_weights == self.observed_all_weights
    }
}

/// Observes whether covers stay Rota-Baxter, independently of `classify`:
/// a recipe with a nonzero defect is a failure, and otherwise a short random
/// suite over `Ш(k)/I_m`, `m ≤ 5`, must find only zero defects.
pub fn consistency(omega: &Constraint, seed: u64, trials: usize, order: usize) -> Result<Consistency> {
    let verdict = classify(omega);
    let mut rng = job_rng(seed, 0);
    let random_ok = |w: &Scalar, rng: &mut ChaCha8Rng| -> Result<bool> {
        for m in 1..=5 {
            let dp = DividedPower::quotient(m, w.clone());
            let out = cover_trials(&dp.rota_baxter_operator(), omega, w, trials, order, rng)?;
            if out.defect.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let observed_weight_zero = match dispatch_weight_zero(omega) {
        Ok(spec) => spec.compute()?.is_zero(),
        Err(_) => random_ok(&int(0), &mut rng)?,
    };
    let mut observed_all_weights = observed_weight_zero;
    if observed_all_weights {
        for w in default_weights().iter().filter(|w| !w.is_zero()) {
            let recipe_zero = match dispatch_weighted(omega, w) {
                Ok(spec) => spec.compute()?.is_zero(),
                Err(_) => true,
            };
            if !recipe_zero || !random_ok(w, &mut rng)? {
                observed_all_weights = false;
                break;
            }
        }
    }
    Ok(Consistency {
        constraint: omega.to_string(),
        predicted_weight_zero: verdict.in_omega0,
        observed_weight_zero,
        predicted_all_weights: verdict.in_omegak,
        observed_all_weights,
    })
}

/// Runs [`consistency`] over the grid and the named members of Ω₀ and Ω_k.
pub fn consistency_grid(grid: &[i64], max_degree: usize, seed: u64) -> Result<Vec<Consistency>> {
    let mut omegas = grid_constraints(grid, max_degree);
    for a0 in [-2, 0, 1, 5] {
        omegas.push(Constraint::xy_minus_const(int(a0)));
    }
    for b0 in [-1, 0, 2] {
        omegas.push(Constraint::xy_minus_b0y_yx(int(b0)));
    }
    omegas
        .par_iter()
        .map(|w| consistency(w, seed, 3, 4))
        .collect()
}

#[derive(Clone, Debug)]
pub struct LawOptions {
    pub seed: u64,
    /// Longest sampled tensor word.
    pub degree_cap: usize,
    pub samples: usize,
}

impl LawOptions {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            degree_cap: 3,
            samples: 20,
        }
    }
}

fn law_entry(name: &str, weight: &Scalar, failure: Option<String>, seed: u64, start: Instant) -> ReportEntry {
    ReportEntry {
        case: name.into(),
        constraint: "-".into(),
        weight: weight.to_string(),
        matched: failure.is_none(),
        computed: failure.unwrap_or_else(|| "pass".into()),
        expected: "pass".into(),
        seed: Some(seed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Monad, comonad, `θ` and `ϑ` laws on seeded random inputs.
pub fn run_law_suite(opts: &LawOptions) -> Result<Vec<ReportEntry>> {
    if opts.degree_cap == 0 {
        return Err(Error::InvalidArgument("degree cap must be at least 1".into()));
    }
    let weights = default_weights();
    let jobs: Vec<(usize, Scalar)> = weights.into_iter().enumerate().collect();
    let entries: Vec<Vec<ReportEntry>> = jobs
        .par_iter()
        .map(|(i, w)| laws_at_weight(opts, w, *i as u64))
        .collect::<Result<_>>()?;
    let mut entries: Vec<ReportEntry> = entries.into_iter().flatten().collect();
    entries.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(entries)
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, check: impl Fn(&T) -> Option<String>) -> Option<String> {
    items.into_iter().enumerate().find_map(|(i, t)| check(&t).map(|m| format!("sample {i}: {m}")))
}

fn laws_at_weight(opts: &LawOptions, w: &Scalar, stream: u64) -> Result<Vec<ReportEntry>> {
    let seed = opts.seed;
    let mut rng = job_rng(seed, 100 + stream);
    let cap = opts.degree_cap;
    let nested_cap = cap.min(2);
    let k = opts.samples;
    let mut out = Vec::new();

    // Monad laws on Ш(Ш(k)/I_3).
    let dp3 = DividedPower::quotient(3, w.clone());
    let inner = FreeRb::new(dp3.clone(), w.clone());
    let outer = FreeRb::new(inner.clone(), w.clone());
    let start = Instant::now();
    let us: Vec<_> = (0..k).map(|_| inner.sample_with(&mut rng, 4, cap)).collect();
    let fail = first_failure(&us, |u| {
        (monad_mu(&inner, &outer_unit(u)) != **u).then(|| inner.render(u))
    });
    out.push(law_entry("monad-unit-outer", w, fail, seed, start));
    let start = Instant::now();
    let fail = first_failure(&us, |u| {
        let lifted = map_slots(&outer, u, |b| inner.unit_embed(&dp3.basis_element(b)));
        (monad_mu(&inner, &lifted) != **u).then(|| inner.render(u))
    });
    out.push(law_entry("monad-unit-inner", w, fail, seed, start));
    let start = Instant::now();
    let dp2 = DividedPower::quotient(2, w.clone());
    let inner2 = FreeRb::new(dp2, w.clone());
    let outer2 = FreeRb::new(inner2.clone(), w.clone());
    let outer3 = FreeRb::new(outer2.clone(), w.clone());
    let xs: Vec<_> = (0..k.min(8))
        .map(|_| outer3.sample_with(&mut rng, 2, nested_cap))
        .collect();
    let fail = first_failure(&xs, |x| {
        let left = monad_mu(&inner2, &monad_mu(&outer2, x));
        let right = monad_mu(&inner2, &map_slots(&outer2, x, |slot| monad_mu_word(&inner2, slot)));
        (left != right).then(|| outer3.render(x))
    });
    out.push(law_entry("monad-assoc", w, fail, seed, start));

    // ϑ on (Ш(k)/I_3, P̄).
    let p = dp3.rota_baxter_operator();
    let start = Instant::now();
    let fail = first_failure(&us, |u| {
        (vartheta(&p, &inner.free_p(u)) != p.apply(&vartheta(&p, u))).then(|| inner.render(u))
    });
    out.push(law_entry("vartheta-commutes-with-P", w, fail, seed, start));
    let start = Instant::now();
    let vs: Vec<_> = (0..k).map(|_| inner.sample_with(&mut rng, 4, cap)).collect();
    let fail = first_failure(us.iter().zip(&vs), |(u, v)| {
        let lhs = vartheta(&p, &inner.mul(u, v));
        let rhs = dp3.mul(&vartheta(&p, u), &vartheta(&p, v));
        (lhs != rhs).then(|| format!("{} and {}", inner.render(u), inner.render(v)))
    });
    out.push(law_entry("vartheta-multiplicative", w, fail, seed, start));

    // Comonad identities and ε on Hurwitz series over Ш(k)/I_4.
    let h = Hurwitz::new(DividedPower::quotient(4, w.clone()), w.clone());
    let fs: Vec<Series<DividedPower>> = (0..k).map(|_| h.sample(&mut rng)).collect();
    let start = Instant::now();
    let fail = first_failure(&fs, |f| {
        (0..=6)
            .find(|n| delta(f, 0, *n) != f.component(*n) || epsilon(&delta_row(f, *n)) != f.component(*n))
            .map(|n| format!("n={n}"))
    });
    out.push(law_entry("comonad-counit", w, fail, seed, start));
    let start = Instant::now();
    let fail = first_failure(&fs, |f| {
        for m1 in 0..=4 {
            for m2 in 0..=4 {
                for n in 0..=4 {
                    let nested = delta(&delta_row(f, m1), m2, n);
                    let other = delta(&delta_row(&delta_row(f, m2), m1), 0, n);
                    if nested != f.component(m1 + m2 + n) || other != nested {
                        return Some(format!("m1={m1} m2={m2} n={n}"));
                    }
                }
            }
        }
        None
    });
    out.push(law_entry("comonad-coassoc", w, fail, seed, start));
    let start = Instant::now();
    let base4 = h.base().clone();
    let fail = first_failure(fs.windows(2), |pair| {
        let fg = pair[0].try_mul(&pair[1]).ok()?;
        (epsilon(&fg) != base4.mul(&epsilon(&pair[0]), &epsilon(&pair[1]))).then(|| "ε(fg)".into())
    });
    out.push(law_entry("counit-multiplicative", w, fail, seed, start));

    // θ on the full Ш(k) with its weight-λ derivation.
    let full = DividedPower::full(w.clone());
    let d = full.derivation();
    let hf = Hurwitz::new(full.clone(), w.clone());
    let start = Instant::now();
    let pairs: Vec<_> = (0..k).map(|_| (full.sample(&mut rng), full.sample(&mut rng))).collect();
    let fail = first_failure(&pairs, |(u, v)| {
        let tu = Series::theta(&hf, &d, u.clone());
        let tv = Series::theta(&hf, &d, v.clone());
        let prod = tu.try_mul(&tv).ok()?;
        let tuv = Series::theta(&hf, &d, full.mul(u, v));
        (0..=5)
            .find(|n| prod.component(*n) != tuv.component(*n))
            .map(|n| format!("n={n}"))
    });
    out.push(law_entry("theta-multiplicative", w, fail, seed, start));
    Ok(out)
}
