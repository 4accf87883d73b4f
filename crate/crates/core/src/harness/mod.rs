//! Built-in problems, experiment configuration, runners and CSV output.

mod config;
mod output;
mod problems;
mod run;

pub use config::{config_file_args, num, Cli, ExperimentConfig, Solver, Split};
pub use output::{
    decay_body, header, strip_header, summary_body, write_report, DECAY_COLUMNS, SUMMARY_COLUMNS,
};
pub use problems::{builtin_problem, PROBLEM_NAMES};
pub use run::{
    exact_levels, run_experiment, run_single, setup, sweep, trajectory_error, DecayRow,
    ExperimentReport, RunResult, RunSpec, RunSummary, METHOD1_RATE_BUDGET, METHOD2_RATE_BUDGET,
};
