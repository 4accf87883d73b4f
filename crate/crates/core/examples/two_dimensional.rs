//! The 2D analytic problem on P×P overlapping squares with ETD2.

use schwarz_etd::geometry::{decompose_2d, Layout, Mesh, OverlapConvention};
use schwarz_etd::harness::{builtin_problem, exact_levels};
use schwarz_etd::schwarz::{method1_solve, method2_solve, random_trace_guess, SolverConfig};
use schwarz_etd::steppers::{Scheme, Subdomains, TimeGrid};
use schwarz_etd::analysis::subdomain_norms;

fn main() -> schwarz_etd::Result<()> {
    let problem = builtin_problem("analytic_2d")?;
    let n = 127;
    let mesh = Mesh::new(&problem, [n, n])?;
    let time = TimeGrid::new(problem.horizon, 128)?;

    let mono = Subdomains::new(&problem, mesh, Layout::single(2, [n, n]), time)?;
    let exact = exact_levels(&problem, &mono).expect("analytic problem");
    let (tr, _) = method1_solve(&mono, &SolverConfig::new(Scheme::Etd2), None)?;
    let at_t = |tr: &schwarz_etd::steppers::Trajectory| -> schwarz_etd::Result<f64> {
        Ok(subdomain_norms(&tr.pieces, &tr.offsets, &exact)?.final_error())
    };
    println!("monodomain: error at t = T {:.4e}", at_t(&tr)?);

    for p in [2, 3] {
        let layout = decompose_2d(n, n, p, p, 9, OverlapConvention::Half)?.layout;
        let sys = Subdomains::new(&problem, mesh, layout, time)?;
        let (tr, _) = method1_solve(&sys, &SolverConfig::new(Scheme::Etd2).fixed(p), None)?;
        println!("{p}x{p}, Method 1 with {p} iterations per step: {:.4e}", at_t(&tr)?);
        let guess = random_trace_guess(&sys.layout, time.steps + 1, 0);
        for k in [p, 7 * p] {
            let out = method2_solve(&sys, &SolverConfig::new(Scheme::Etd2).fixed(k), &guess, None)?;
            println!("{p}x{p}, Method 2 with {k} iterations: {:.4e}", at_t(&out.trajectory)?);
        }
    }
    Ok(())
}
