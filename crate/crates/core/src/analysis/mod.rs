//! Discrete norms, error reports, contraction and order estimates.

use ndarray::Array2;

use crate::error::{check_len, invalid, Error, Result};

/// Max-norm errors of a field history against a reference history.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    /// `max_j |u_m(j) − r_m(j)|` for every level in the history.
    pub linf_space: Vec<f64>,
    /// Max over levels `1..` of `linf_space` (level 0 is the initial data).
    pub linf_spacetime: f64,
    /// Max over the same levels and nodes of `|r_m(j)|`.
    pub reference_max: f64,
}

impl ErrorReport {
    /// Space-time error divided by the space-time max of the reference.
    pub fn relative(&self) -> f64 {
        if self.reference_max > 0.0 {
            self.linf_spacetime / self.reference_max
        } else {
            self.linf_spacetime
        }
    }

    /// Error at the last level.
    pub fn final_error(&self) -> f64 {
        self.linf_space.last().copied().unwrap_or(0.0)
    }
}

/// Discrete max norms of `fields − reference`, level by level.
pub fn linf_norms(fields: &[Array2<f64>], reference: &[Array2<f64>]) -> Result<ErrorReport> {
    check_len(reference.len(), fields.len())?;
    let mut linf_space = Vec::with_capacity(fields.len());
    let mut linf_spacetime: f64 = 0.0;
    let mut reference_max: f64 = 0.0;
    for (m, (u, r)) in fields.iter().zip(reference).enumerate() {
        if u.dim() != r.dim() {
            return Err(Error::DimensionMismatch {
                expected: r.len(),
                actual: u.len(),
            });
        }
        let mut e: f64 = 0.0;
        let mut rm: f64 = 0.0;
        for (&a, &b) in u.iter().zip(r.iter()) {
            if a.is_nan() || b.is_nan() {
                return Err(Error::NonFinite("linf_norms input"));
            }
            e = e.max((a - b).abs());
            rm = rm.max(b.abs());
        }
        linf_space.push(e);
        if m > 0 || fields.len() == 1 {
            linf_spacetime = linf_spacetime.max(e);
            reference_max = reference_max.max(rm);
        }
    }
    Ok(ErrorReport {
        linf_space,
        linf_spacetime,
        reference_max,
    })
}

/// Max-norm errors of every subdomain's own state, overlaps included.
///
/// `pieces[m][s]` starts at zero-based global index `offsets[s]` of
/// `reference[m]`. Each level's error is the max over all subdomains.
pub fn subdomain_norms(
    pieces: &[Vec<Array2<f64>>],
    offsets: &[[usize; 2]],
    reference: &[Array2<f64>],
) -> Result<ErrorReport> {
    check_len(reference.len(), pieces.len())?;
    let mut linf_space = Vec::with_capacity(pieces.len());
    let mut linf_spacetime: f64 = 0.0;
    let mut reference_max: f64 = 0.0;
    for (m, (level, r)) in pieces.iter().zip(reference).enumerate() {
        check_len(offsets.len(), level.len())?;
        let mut e: f64 = 0.0;
        for (u, &[ox, oy]) in level.iter().zip(offsets) {
            let (nx, ny) = u.dim();
            if ox + nx > r.nrows() || oy + ny > r.ncols() {
                return Err(Error::DimensionMismatch {
                    expected: r.len(),
                    actual: (ox + nx) * (oy + ny),
                });
            }
            for ((i, j), &a) in u.indexed_iter() {
                let b = r[[ox + i, oy + j]];
                if a.is_nan() || b.is_nan() {
                    return Err(Error::NonFinite("subdomain_norms input"));
                }
                e = e.max((a - b).abs());
            }
        }
        linf_space.push(e);
        if m > 0 || pieces.len() == 1 {
            linf_spacetime = linf_spacetime.max(e);
            reference_max = r.iter().fold(reference_max, |acc, &b| acc.max(b.abs()));
        }
    }
    Ok(ErrorReport {
        linf_space,
        linf_spacetime,
        reference_max,
    })
}

/// Smallest decay curve `estimate_contraction` accepts.
pub const MIN_DECAY_LEN: usize = 6;

/// Two-step contraction factor of a decay curve `e_0, e_1, …, e_{K}`.
///
/// Returns the geometric mean of `e_{k+2}/e_k` for `k = 2 ..= K − 3`, which
/// drops the two warm-up iterates and the final one. A geometric sequence
/// `r^k` gives `r²`.
pub fn estimate_contraction(decay: &[f64]) -> Result<f64> {
    if decay.len() < MIN_DECAY_LEN {
        return Err(invalid(
            "decay",
            format!("need at least {MIN_DECAY_LEN} entries, got {}", decay.len()),
        ));
    }
    if decay.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
        return Err(invalid("decay", "entries must be positive and finite"));
    }
    let last = decay.len() - 1;
    let logs: Vec<f64> = (2..last - 2)
        .map(|k| (decay[k + 2] / decay[k]).ln())
        .collect();
    Ok((logs.iter().sum::<f64>() / logs.len() as f64).exp())
}

/// Per-iteration rate, the square root of the two-step factor.
pub fn per_iteration_rate(decay: &[f64]) -> Result<f64> {
    estimate_contraction(decay).map(f64::sqrt)
}

/// `log2(e_{i−1}/e_i)` for successive halvings of the step.
pub fn observed_order(errors: &[f64], dts: &[f64]) -> Result<Vec<f64>> {
    check_len(errors.len(), dts.len())?;
    if errors.len() < 2 {
        return Err(invalid("errors", "need at least two refinement levels"));
    }
    for w in dts.windows(2) {
        if ((w[0] / w[1]) - 2.0).abs() > 1e-9 {
            return Err(invalid("dts", "steps must halve from one level to the next"));
        }
    }
    Ok(errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn identical_fields() {
        let f = vec![array![[1.0], [2.0]], array![[3.0], [-4.0]]];
        let r = linf_norms(&f, &f).unwrap();
        assert_eq!(r.linf_spacetime, 0.0);
        assert_eq!(r.reference_max, 4.0);
    }

    #[test]
    fn single_perturbation() {
        let r = vec![Array2::zeros((3, 3)), Array2::zeros((3, 3))];
        let mut f = r.clone();
        f[1][[2, 1]] = 1e-3;
        assert_eq!(linf_norms(&f, &r).unwrap().linf_spacetime, 1e-3);
        f[0][[0, 0]] = f64::NAN;
        assert!(linf_norms(&f, &r).is_err());
    }

    #[test]
    fn geometric_decay() {
        let d: Vec<f64> = (0..20).map(|k| 0.5f64.powi(k)).collect();
        assert!((estimate_contraction(&d).unwrap() - 0.25).abs() < 1e-12);
        assert!((per_iteration_rate(&d).unwrap() - 0.5).abs() < 1e-12);
        assert!(estimate_contraction(&d[..5]).is_err());
        assert!(estimate_contraction(&[1.0, 0.5, 0.0, 0.1, 0.1, 0.1]).is_err());
    }

    #[test]
    fn orders() {
        let r = observed_order(&[1.0, 0.5, 0.25], &[0.1, 0.05, 0.025]).unwrap();
        assert_eq!(r, vec![1.0, 1.0]);
        let r = observed_order(&[1.0, 0.25, 0.0625], &[0.1, 0.05, 0.025]).unwrap();
        assert_eq!(r, vec![2.0, 2.0]);
        assert!(observed_order(&[1.0], &[0.1, 0.05]).is_err());
    }
}
