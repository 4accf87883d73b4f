//! Continuous contraction factors, the short-time erfc bound, and rates
//! measured from Schwarz iterations on the error equation.

use schwarz_etd::harness::{run_single, RunSpec, Solver};
use schwarz_etd::geometry::OverlapConvention;
use schwarz_etd::schwarz::{superlinear_bound, theoretical_rate};
use schwarz_etd::steppers::Scheme;

fn main() -> schwarz_etd::Result<()> {
    let h = 2.0 / 256.0;
    println!("cells  κ       Method1/ETD1  Method2/ETD1  one-step erfc bound (k = 1, t = Δt)");
    for cells in [1usize, 2, 4, 8] {
        let delta = cells as f64 * h;
        let (alpha, beta) = ((1.0 - delta) / 2.0, (1.0 + delta) / 2.0);
        let mut rates = Vec::new();
        for solver in [Solver::Method1, Solver::Method2] {
            let spec = RunSpec {
                id: format!("c{cells}"),
                problem: "error_equation".into(),
                solver,
                scheme: Scheme::Etd1,
                n: 255,
                ny: None,
                dt: 0.01,
                horizon: 1.0,
                split: "2".parse()?,
                overlap_cells: cells,
                convention: OverlapConvention::Full,
                tol: None,
                max_iters: 10_000,
                fixed_iters: None,
                seed: 0,
                seeds: 5,
                window_steps: None,
            };
            rates.push(run_single(&spec)?.summary.contraction.unwrap_or(f64::NAN));
        }
        println!(
            "{cells:>5}  {:.4}  {:>12.4}  {:>12.4}  {:.3e}",
            theoretical_rate(alpha, beta)?,
            rates[0],
            rates[1],
            superlinear_bound(1, alpha, beta, 2.0, 1.0, 0.01)?
        );
    }
    Ok(())
}
