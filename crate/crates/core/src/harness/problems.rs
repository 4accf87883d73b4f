use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{ProblemSpec, SpaceTimeFn};

pub const PROBLEM_NAMES: [&str; 3] = ["error_equation", "analytic_1d", "analytic_2d"];

/// Built-in problems.
///
/// * `error_equation`: all data zero on `[0, 2]`, `T = 1`.
/// * `analytic_1d`: `u = e^{π²t}·sin(π(x − 1/4))` on `[−1, 1]`, `T = 0.25`.
/// * `analytic_2d`: `u = e^{−4t}·sin(x − 1/4)·sin(2(y − 1/8))` on `[0, π]²`,
///   `T = 0.5`, with `f = u`.
pub fn builtin_problem(name: &str) -> Result<ProblemSpec> {
    let zero: SpaceTimeFn = Arc::new(|_, _| 0.0);
    match name {
        "error_equation" => ProblemSpec::new(
            1.0,
            vec![0.0],
            vec![2.0],
            1.0,
            zero.clone(),
            zero.clone(),
            Arc::new(|_| 0.0),
        )
        .map(|p| p.with_exact(zero)),
        "analytic_1d" => {
            let exact: SpaceTimeFn =
                Arc::new(|x, t| (PI * PI * t).exp() * (PI * (x[0] - 0.25)).sin());
            let e = exact.clone();
            ProblemSpec::new(
                1.0,
                vec![-1.0],
                vec![2.0],
                0.25,
                Arc::new(|x, t| 2.0 * PI * PI * (PI * PI * t).exp() * (PI * (x[0] - 0.25)).sin()),
                exact.clone(),
                Arc::new(move |x| e(x, 0.0)),
            )
            .map(|p| p.with_exact(exact))
        }
        "analytic_2d" => {
            let exact: SpaceTimeFn = Arc::new(|x, t| {
                (-4.0 * t).exp() * (x[0] - 0.25).sin() * (2.0 * (x[1] - 0.125)).sin()
            });
            let e = exact.clone();
            ProblemSpec::new(
                1.0,
                vec![0.0, 0.0],
                vec![PI, PI],
                0.5,
                exact.clone(),
                exact.clone(),
                Arc::new(move |x| e(x, 0.0)),
            )
            .map(|p| p.with_exact(exact))
        }
        other => Err(Error::Unknown {
            kind: "problem",
            name: other.to_string(),
        }),
    }
}
