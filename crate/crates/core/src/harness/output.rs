use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use super::config::{num, ExperimentConfig};
use super::run::{DecayRow, ExperimentReport, RunSummary};
use crate::error::{Error, Result};

pub const SUMMARY_COLUMNS: &str =
    "run_id,delta_cells,dt,T,P,scheme,solver,contraction,linf_error,observed_order,iters_used";
pub const DECAY_COLUMNS: &str = "run_id,iteration,time_level,interface,raw_update,normalized_error";

const CONVENTIONS: &[(&str, &str)] = &[
    (
        "contraction",
        "per-iteration rate, square root of the geometric mean of e[k+2]/e[k] over k = 2..K-3, averaged over seeds",
    ),
    (
        "linf_error",
        "max over the nodes of every subdomain, overlaps included; 1D: over levels 1..M divided by max |exact|; 2D: at t = T",
    ),
    ("interface", "stopping group: one per side in 1D, one per subdomain edge in 2D"),
    ("normalized_error", "interface error divided by its value at iteration 0"),
    (
        "initial_guess",
        "method2 and rate studies: uniform (0,1) ChaCha8 traces; method1: previous-level traces (etd1) or predictor (etd2)",
    ),
    (
        "rate_budget",
        "error_equation: 20 iterations at the first level (method1), 60 iterations (method2) unless fixed-iters is set",
    ),
];

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// Header lines (`# key: value`) shared by every output file.
pub fn header(cfg: &ExperimentConfig, wall: Option<Duration>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# schwarz-etd: {}", env!("CARGO_PKG_VERSION"));
    for (k, v) in cfg.echo() {
        let _ = writeln!(s, "# {k}: {v}");
    }
    for (k, v) in CONVENTIONS {
        let _ = writeln!(s, "# convention.{k}: {v}");
    }
    if let Some(w) = wall {
        let _ = writeln!(s, "# wall_time_seconds: {:.3}", w.as_secs_f64());
    }
    s
}

pub fn summary_body(runs: &[RunSummary]) -> String {
    let rows = runs.iter().map(|r| {
        vec![
            r.run_id.clone(),
            r.delta_cells.to_string(),
            num(r.dt),
            num(r.horizon),
            r.split.to_string(),
            r.scheme.to_string(),
            r.solver.to_string(),
            opt(r.contraction),
            opt(r.linf_error),
            opt(r.observed_order),
            r.iters_used.to_string(),
        ]
    });
    table(SUMMARY_COLUMNS, rows)
}

pub fn decay_body(rows: &[DecayRow]) -> String {
    let rows = rows.iter().map(|r| {
        vec![
            r.run_id.clone(),
            r.iteration.to_string(),
            r.time_level.to_string(),
            r.interface.to_string(),
            opt(r.raw_update),
            opt(r.normalized_error),
        ]
    });
    table(DECAY_COLUMNS, rows)
}

fn table(columns: &str, rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut put = |rec: &[String]| w.write_record(rec).expect("writing to memory");
    put(&columns.split(',').map(String::from).collect::<Vec<_>>());
    for r in rows {
        put(&r);
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

/// Strips `#` header lines, leaving the deterministic CSV body.
pub fn strip_header(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

/// Writes `summary.csv` and one `decay_<run_id>.csv` per run into `cfg.out`.
pub fn write_report(cfg: &ExperimentConfig, report: &ExperimentReport, wall: Option<Duration>) -> Result<Vec<PathBuf>> {
    let dir = &cfg.out;
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let head = header(cfg, wall);
    let mut written = Vec::new();
    let summaries: Vec<RunSummary> = report.runs.iter().map(|r| r.summary.clone()).collect();
    let path = dir.join("summary.csv");
    write(&path, &head, &summary_body(&summaries))?;
    written.push(path);
    for run in &report.runs {
        let path = dir.join(format!("decay_{}.csv", run.summary.run_id));
        write(&path, &head, &decay_body(&run.decay))?;
        written.push(path);
    }
    Ok(written)
}

fn write(path: &Path, head: &str, body: &str) -> Result<()> {
    fs::write(path, format!("{head}{body}")).map_err(|e| io(path, e))
}

fn io(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}
