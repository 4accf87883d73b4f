use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Parser;

use crate::error::{Error, Result};
use crate::geometry::OverlapConvention;
use crate::steppers::Scheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    Mono,
    Method1,
    Method2,
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solver::Mono => "mono",
            Solver::Method1 => "method1",
            Solver::Method2 => "method2",
        })
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mono" => Ok(Solver::Mono),
            "method1" => Ok(Solver::Method1),
            "method2" => Ok(Solver::Method2),
            other => Err(Error::Unknown {
                kind: "solver",
                name: other.to_string(),
            }),
        }
    }
}

/// `P` subdomains in 1D or `P×Q` rectangles in 2D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub px: usize,
    pub py: usize,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.py == 1 {
            write!(f, "{}", self.px)
        } else {
            write!(f, "{}x{}", self.px, self.py)
        }
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("bad subdomain count `{s}` (expected P or PxQ)"));
        let mut parts = s.split('x').map(|p| p.trim().parse::<usize>().map_err(|_| bad()));
        let px = parts.next().ok_or_else(bad)??;
        let py = match parts.next() {
            Some(q) => q?,
            None => 1,
        };
        if parts.next().is_some() || px == 0 || py == 0 {
            return Err(bad());
        }
        Ok(Split { px, py })
    }
}

/// Command-line flags. Sweepable flags take comma-separated lists.
#[derive(Debug, Clone, Parser)]
#[command(
    name = "schwarz-etd",
    version,
    about = "Localized ETD1/ETD2 with overlapping Schwarz iterations: experiment runner",
    args_override_self = true
)]
pub struct Cli {
    /// Plain-text `key = value` file; flags given on the command line win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// error_equation, analytic_1d or analytic_2d.
    #[arg(long)]
    pub problem: Option<String>,
    /// mono, method1 or method2.
    #[arg(long)]
    pub solver: Option<String>,
    /// etd1 and/or etd2 (comma list).
    #[arg(long)]
    pub scheme: Option<String>,
    /// Interior points (x direction in 2D).
    #[arg(long)]
    pub n: Option<usize>,
    /// Interior points in y (2D only; defaults to n).
    #[arg(long)]
    pub ny: Option<usize>,
    /// Time step(s) (comma list).
    #[arg(long)]
    pub dt: Option<String>,
    /// Final time(s) (comma list).
    #[arg(long = "T")]
    pub horizon: Option<String>,
    /// P or PxQ (comma list).
    #[arg(long)]
    pub subdomains: Option<String>,
    /// Overlap in cells (comma list).
    #[arg(long = "overlap-cells")]
    pub overlap_cells: Option<String>,
    /// half or full (2D only).
    #[arg(long = "overlap-convention")]
    pub overlap_convention: Option<String>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long = "max-iters")]
    pub max_iters: Option<usize>,
    /// Run exactly this many Schwarz iterations.
    #[arg(long = "fixed-iters")]
    pub fixed_iters: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random guesses averaged in rate summaries.
    #[arg(long)]
    pub seeds: Option<usize>,
    /// Waveform-relaxation window length in steps.
    #[arg(long = "window-steps")]
    pub window_steps: Option<usize>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Fully resolved experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub problem: String,
    pub solver: Solver,
    pub schemes: Vec<Scheme>,
    pub n: usize,
    pub ny: Option<usize>,
    pub dts: Vec<f64>,
    pub horizons: Vec<f64>,
    pub subdomains: Vec<Split>,
    pub overlap_cells: Vec<usize>,
    pub overlap_convention: OverlapConvention,
    pub tol: Option<f64>,
    pub max_iters: usize,
    pub fixed_iters: Option<usize>,
    pub seed: u64,
    pub seeds: usize,
    pub window_steps: Option<usize>,
    pub out: PathBuf,
}

impl ExperimentConfig {
    /// Defaults for a problem: the grids and steps of its reference experiment.
    pub fn for_problem(problem: &str) -> Result<Self> {
        let (n, dt, horizon, split, cells) = match problem {
            "error_equation" => (255, 0.01, 1.0, Split { px: 2, py: 1 }, 8),
            "analytic_1d" => (511, 1.0 / 40.0, 0.25, Split { px: 2, py: 1 }, 16),
            "analytic_2d" => (127, 0.5 / 128.0, 0.5, Split { px: 2, py: 2 }, 9),
            other => {
                return Err(Error::Unknown {
                    kind: "problem",
                    name: other.to_string(),
                })
            }
        };
        Ok(Self {
            problem: problem.to_string(),
            solver: Solver::Method2,
            schemes: vec![Scheme::Etd1],
            n,
            ny: None,
            dts: vec![dt],
            horizons: vec![horizon],
            subdomains: vec![split],
            overlap_cells: vec![cells],
            overlap_convention: OverlapConvention::Full,
            tol: None,
            max_iters: 10_000,
            fixed_iters: None,
            seed: 0,
            seeds: 5,
            window_steps: None,
            out: PathBuf::from("out"),
        })
    }

    /// Parses command-line arguments (including the program name).
    pub fn from_args<I, T>(args: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
        let first = Cli::try_parse_from(&args).map_err(|e| Error::Config(e.to_string()))?;
        let cli = match &first.config {
            Some(path) => {
                let mut merged = vec![args.first().cloned().unwrap_or_default()];
                merged.extend(config_file_args(path)?);
                merged.extend(args.iter().skip(1).cloned());
                Cli::try_parse_from(merged).map_err(|e| Error::Config(e.to_string()))?
            }
            None => first,
        };
        Self::from_cli(&cli)
    }

    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let problem = cli.problem.clone().unwrap_or_else(|| "error_equation".into());
        let mut c = Self::for_problem(&problem)?;
        if let Some(s) = &cli.solver {
            c.solver = s.parse()?;
        }
        if let Some(s) = &cli.scheme {
            c.schemes = parse_list(s)?;
        }
        if let Some(n) = cli.n {
            c.n = n;
        }
        c.ny = cli.ny.or(c.ny);
        if let Some(s) = &cli.horizon {
            c.horizons = parse_list(s)?;
            if cli.dt.is_none() && c.problem == "analytic_2d" {
                c.dts = vec![c.horizons[0] / 128.0];
            }
        }
        if let Some(s) = &cli.dt {
            c.dts = parse_list(s)?;
        }
        if let Some(s) = &cli.subdomains {
            c.subdomains = parse_list(s)?;
        }
        if let Some(s) = &cli.overlap_cells {
            c.overlap_cells = parse_list(s)?;
        }
        if let Some(s) = &cli.overlap_convention {
            c.overlap_convention = s.parse()?;
        }
        c.tol = cli.tol.or(c.tol);
        c.max_iters = cli.max_iters.unwrap_or(c.max_iters);
        c.fixed_iters = cli.fixed_iters.or(c.fixed_iters);
        c.seed = cli.seed.unwrap_or(c.seed);
        c.seeds = cli.seeds.unwrap_or(c.seeds);
        c.window_steps = cli.window_steps.or(c.window_steps);
        if let Some(out) = &cli.out {
            c.out = out.clone();
        }
        c.validate()?;
        Ok(c)
    }

    pub fn is_2d(&self) -> bool {
        self.problem == "analytic_2d"
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Config(m));
        if self.schemes.is_empty() || self.dts.is_empty() || self.horizons.is_empty() {
            return fail("scheme, dt and T lists must be non-empty".into());
        }
        if self.subdomains.is_empty() || self.overlap_cells.is_empty() {
            return fail("subdomain and overlap lists must be non-empty".into());
        }
        if self.dts.iter().chain(&self.horizons).any(|&x| !(x > 0.0 && x.is_finite())) {
            return fail("dt and T must be positive".into());
        }
        if let Some(t) = self.tol {
            if t.is_nan() || t <= 0.0 {
                return fail(format!("tol must be positive, got {t}"));
            }
        }
        if self.seeds == 0 || self.max_iters == 0 || self.fixed_iters == Some(0) {
            return fail("seeds, max-iters and fixed-iters must be at least 1".into());
        }
        if self.window_steps == Some(0) {
            return fail("window-steps must be at least 1".into());
        }
        if !self.is_2d() && (self.ny.is_some() || self.subdomains.iter().any(|s| s.py != 1)) {
            return fail(format!("problem {} is 1D: ny and PxQ splits do not apply", self.problem));
        }
        Ok(())
    }

    /// `key: value` lines echoing every field, in a fixed order.
    pub fn echo(&self) -> Vec<(String, String)> {
        let list = |v: Vec<String>| v.join(",");
        vec![
            ("problem".into(), self.problem.clone()),
            ("solver".into(), self.solver.to_string()),
            ("scheme".into(), list(self.schemes.iter().map(|s| s.to_string()).collect())),
            ("n".into(), self.n.to_string()),
            ("ny".into(), self.ny.map_or("-".into(), |v| v.to_string())),
            ("dt".into(), list(self.dts.iter().map(|d| num(*d)).collect())),
            ("T".into(), list(self.horizons.iter().map(|d| num(*d)).collect())),
            ("subdomains".into(), list(self.subdomains.iter().map(|s| s.to_string()).collect())),
            ("overlap-cells".into(), list(self.overlap_cells.iter().map(|c| c.to_string()).collect())),
            ("overlap-convention".into(), self.overlap_convention.to_string()),
            ("tol".into(), self.tol.map_or("scheme default".into(), num)),
            ("max-iters".into(), self.max_iters.to_string()),
            ("fixed-iters".into(), self.fixed_iters.map_or("-".into(), |v| v.to_string())),
            ("seed".into(), self.seed.to_string()),
            ("seeds".into(), self.seeds.to_string()),
            ("window-steps".into(), self.window_steps.map_or("-".into(), |v| v.to_string())),
            ("out".into(), self.out.display().to_string()),
        ]
    }
}

/// Numbers in CSV output: 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>>
where
    T::Err: fmt::Display,
{
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<T>()
                .map_err(|e| Error::Config(format!("cannot parse `{p}`: {e}")))
        })
        .collect()
}

/// Turns `key = value` lines into `--key value` arguments. `#` starts a comment.
pub fn config_file_args(path: &Path) -> Result<Vec<OsString>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("{}:{}: expected `key = value`", path.display(), i + 1))
        })?;
        let key = key.trim().replace('_', "-");
        if key == "config" {
            return Err(Error::Config("config files cannot include other config files".into()));
        }
        out.push(OsString::from(format!("--{key}")));
        out.push(OsString::from(value.trim()));
    }
    Ok(out)
}
