use std::process::ExitCode;
use std::time::Instant;

use schwarz_etd::harness::{run_experiment, write_report, ExperimentConfig};

fn main() -> ExitCode {
    let cfg = match ExperimentConfig::from_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let result = run_experiment(&cfg).and_then(|r| {
        let files = write_report(&cfg, &r, Some(start.elapsed()))?;
        Ok((r, files))
    });
    match result {
        Ok((report, files)) => {
            for run in &report.runs {
                let s = &run.summary;
                println!(
                    "{} {} {} dt={} T={} P={} cells={} contraction={} error={} iters={}",
                    s.run_id,
                    s.solver,
                    s.scheme,
                    s.dt,
                    s.horizon,
                    s.split,
                    s.delta_cells,
                    s.contraction.map_or("-".into(), |x| format!("{x:.4}")),
                    s.linf_error.map_or("-".into(), |x| format!("{x:.4e}")),
                    s.iters_used
                );
            }
            println!("wrote {} files to {}", files.len(), cfg.out.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
