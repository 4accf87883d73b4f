//! Waveform relaxation (Method 2) on the error equation: the interface error
//! decays at a rate close to the continuous contraction factor.

use schwarz_etd::analysis::per_iteration_rate;
use schwarz_etd::geometry::{decompose_1d, make_grid_1d, Mesh};
use schwarz_etd::harness::builtin_problem;
use schwarz_etd::schwarz::{method2_solve, random_trace_guess, theoretical_rate, SolverConfig, TraceSet};
use schwarz_etd::steppers::{Scheme, Subdomains, TimeGrid};

fn main() -> schwarz_etd::Result<()> {
    let problem = builtin_problem("error_equation")?;
    let grid = make_grid_1d(2.0, 255)?;
    let decomposition = decompose_1d(&grid, 2, 4)?;
    let pair = decomposition.interfaces[0];
    let time = TimeGrid::from_dt(1.0, 0.01)?;
    let sys = Subdomains::new(&problem, Mesh::from_grid(&grid), decomposition.layout, time)?;

    let levels = time.steps + 1;
    let guess = random_trace_guess(&sys.layout, levels, 7);
    let zero = TraceSet::zeros(levels, &sys.slot_counts());
    let config = SolverConfig::new(Scheme::Etd2).fixed(40);
    let out = method2_solve(&sys, &config, &guess, Some(&zero))?;
    let log = &out.logs[0];

    for (k, e) in log.normalized_errors().iter().enumerate().step_by(5) {
        println!("iteration {k:>2}: normalized interface error {e:.3e}");
    }
    println!(
        "measured rate {:.4}, continuous κ {:.4}",
        per_iteration_rate(&log.max_errors())?,
        theoretical_rate(pair.alpha, pair.beta)?
    );
    Ok(())
}
