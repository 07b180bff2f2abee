//! Reproduction of the classification: counterexample recipes with their
//! closed-form defects, randomized positive suites, structure-map laws, and
//! report rendering.

pub mod cases;
pub mod report;
pub mod suites;

pub use cases::{dispatch_weight_zero, dispatch_weighted, CaseId, CaseSpec, Orientation, Recipe, Skip};
pub use report::{emit_report, exit_code, sort_entries, strip_timing, Format, ReportEntry};
pub use suites::{
    consistency, consistency_grid, cover_trials, default_weights, extension_entry, grid_constraints,
    grid_polys, run_classify, run_counterexample_suite, run_law_suite, run_positive_suite,
    AlgebraSelector, ClassifyReport, Consistency, LawOptions, PositiveOptions, ReproOptions,
    ReproReport, TrialOutcome, DEFAULT_GRID,
};
