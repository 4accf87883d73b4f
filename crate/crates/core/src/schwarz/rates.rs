use crate::error::{invalid, Result};

/// `κ(α, β) = α(1 − β) / (β(1 − α))`, the two-subdomain contraction factor.
pub fn theoretical_rate(alpha: f64, beta: f64) -> Result<f64> {
    if !(0.0 < alpha && alpha < beta && beta < 1.0) {
        return Err(invalid(
            "alpha/beta",
            format!("need 0 < alpha < beta < 1, got alpha = {alpha}, beta = {beta}"),
        ));
    }
    Ok(alpha * (1.0 - beta) / (beta * (1.0 - alpha)))
}

/// `erfc(k(β − α)L / (2√(νt)))`, the superlinear waveform-relaxation bound.
pub fn superlinear_bound(k: usize, alpha: f64, beta: f64, length: f64, nu: f64, t: f64) -> Result<f64> {
    if !(0.0 < alpha && alpha < beta && beta < 1.0) {
        return Err(invalid("alpha/beta", "need 0 < alpha < beta < 1"));
    }
    if !(t > 0.0 && nu > 0.0 && length > 0.0) {
        return Err(invalid("t", "t, nu and L must be positive"));
    }
    let arg = k as f64 * (beta - alpha) * length / (2.0 * (nu * t).sqrt());
    Ok(libm::erfc(arg))
}
