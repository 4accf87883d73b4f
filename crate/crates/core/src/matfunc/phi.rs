//! Scalar φ-functions.
//!
//! `φ0(z) = e^z`, `φ1(z) = (e^z − 1)/z`, `φ2(z) = (e^z − 1 − z)/z²`, continued
//! to `z = 0` by their Taylor series. Near the origin the closed forms cancel
//! catastrophically, so `|z| < TAYLOR_SWITCH` goes through a truncated series.

use crate::error::{Error, Result};

/// Below this magnitude the truncated Taylor series is used.
pub const TAYLOR_SWITCH: f64 = 1e-2;

/// Number of Taylor terms kept; the first dropped term is below `1e-24 / 12!`.
const TAYLOR_TERMS: usize = 12;

/// Order of a φ-function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiOrder {
    Exp,
    Phi1,
    Phi2,
}

impl PhiOrder {
    pub fn index(self) -> usize {
        match self {
            PhiOrder::Exp => 0,
            PhiOrder::Phi1 => 1,
            PhiOrder::Phi2 => 2,
        }
    }

    pub fn eval(self, z: f64) -> f64 {
        if z.abs() < TAYLOR_SWITCH {
            return taylor(self.index(), z);
        }
        match self {
            PhiOrder::Exp => z.exp(),
            PhiOrder::Phi1 => z.exp_m1() / z,
            PhiOrder::Phi2 => (z.exp_m1() - z) / (z * z),
        }
    }
}

impl TryFrom<usize> for PhiOrder {
    type Error = Error;

    fn try_from(k: usize) -> Result<Self> {
        match k {
            0 => Ok(PhiOrder::Exp),
            1 => Ok(PhiOrder::Phi1),
            2 => Ok(PhiOrder::Phi2),
            other => Err(Error::PhiOrder(other)),
        }
    }
}

/// `φ_k(z)` for `k ∈ {0, 1, 2}`.
pub fn phi(k: usize, z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::NonFinite("phi argument"));
    }
    Ok(PhiOrder::try_from(k)?.eval(z))
}

// φ_k(z) = Σ_j z^j / (j + k)!
fn taylor(k: usize, z: f64) -> f64 {
    let mut inv_fact = 1.0;
    for i in 2..=k {
        inv_fact /= i as f64;
    }
    let mut coeffs = [0.0; TAYLOR_TERMS];
    let mut c = inv_fact;
    for (j, slot) in coeffs.iter_mut().enumerate() {
        *slot = c;
        c /= (j + k + 1) as f64;
    }
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c)
}
