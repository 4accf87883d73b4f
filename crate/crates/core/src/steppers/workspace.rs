use std::fmt;
use std::str::FromStr;

use ndarray::{Array2, ArrayView2, Zip};

use crate::error::{check_len, invalid, Error, Result};
use crate::matfunc::{
    spectral_factorization, DirichletLaplacian1D, DirichletLaplacian2D, PhiOrder, SineBasis,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Etd1,
    Etd2,
}

impl Scheme {
    /// Default Schwarz tolerance for converged multidomain solutions.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Scheme::Etd1 => 1e-4,
            Scheme::Etd2 => 1e-6,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Etd1 => "etd1",
            Scheme::Etd2 => "etd2",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "etd1" => Ok(Scheme::Etd1),
            "etd2" => Ok(Scheme::Etd2),
            other => Err(Error::Unknown {
                kind: "scheme",
                name: other.to_string(),
            }),
        }
    }
}

/// `0 = t_0 < … < t_M = T` with `dt = T/M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub horizon: f64,
    pub steps: usize,
    pub dt: f64,
}

impl TimeGrid {
    pub fn new(horizon: f64, steps: usize) -> Result<Self> {
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(invalid("T", format!("must be positive, got {horizon}")));
        }
        if steps == 0 {
            return Err(invalid("M", "need at least one step"));
        }
        Ok(Self {
            horizon,
            steps,
            dt: horizon / steps as f64,
        })
    }

    /// Grid with step `dt`; `T/dt` must be an integer to 1e-9 relative.
    pub fn from_dt(horizon: f64, dt: f64) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(invalid("dt", format!("must be positive, got {dt}")));
        }
        let m = (horizon / dt).round();
        if m < 1.0 || ((m * dt - horizon) / horizon).abs() > 1e-9 {
            return Err(invalid("dt", format!("T = {horizon} is not a multiple of dt = {dt}")));
        }
        Self::new(horizon, m as usize)
    }

    pub fn time(&self, m: usize) -> f64 {
        if m == self.steps {
            self.horizon
        } else {
            m as f64 * self.dt
        }
    }
}

/// Sine transforms and cached φ multipliers for one (sub)domain and step size.
///
/// Fields are `nx × ny` arrays; 1D fields are `n × 1`.
#[derive(Debug, Clone)]
pub struct StepWorkspace {
    sx: SineBasis,
    sy: Option<SineBasis>,
    dt: f64,
    exp: Array2<f64>,
    phi1: Array2<f64>,
    phi2: Array2<f64>,
}

impl StepWorkspace {
    pub fn new_1d(op: &DirichletLaplacian1D, dt: f64) -> Result<Self> {
        check_step(dt)?;
        let fact = spectral_factorization(op);
        let lam = fact.eigenvalues();
        let grid = |order: PhiOrder, scale: f64| {
            Array2::from_shape_fn((lam.len(), 1), |(i, _)| scale * order.eval(dt * lam[i]))
        };
        Ok(Self {
            exp: grid(PhiOrder::Exp, 1.0),
            phi1: grid(PhiOrder::Phi1, dt),
            phi2: grid(PhiOrder::Phi2, dt),
            sx: fact.basis().clone(),
            sy: None,
            dt,
        })
    }

    pub fn new_2d(op: &DirichletLaplacian2D, dt: f64) -> Result<Self> {
        check_step(dt)?;
        let fx = spectral_factorization(&op.ax);
        let fy = spectral_factorization(&op.ay);
        let (lx, ly) = (fx.eigenvalues(), fy.eigenvalues());
        let grid = |order: PhiOrder, scale: f64| {
            Array2::from_shape_fn((lx.len(), ly.len()), |(i, j)| {
                scale * order.eval(dt * (lx[i] + ly[j]))
            })
        };
        Ok(Self {
            exp: grid(PhiOrder::Exp, 1.0),
            phi1: grid(PhiOrder::Phi1, dt),
            phi2: grid(PhiOrder::Phi2, dt),
            sx: fx.basis().clone(),
            sy: Some(fy.basis().clone()),
            dt,
        })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn shape(&self) -> [usize; 2] {
        [self.sx.len(), self.sy.as_ref().map_or(1, SineBasis::len)]
    }

    pub fn len(&self) -> usize {
        let [a, b] = self.shape();
        a * b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn basis_x(&self) -> &SineBasis {
        &self.sx
    }

    pub fn basis_y(&self) -> Option<&SineBasis> {
        self.sy.as_ref()
    }

    /// Cached multipliers `e^{dtλ}`, `dt·φ1(dtλ)`, `dt·φ2(dtλ)` on the eigenvalue grid.
    pub fn multipliers(&self) -> [&Array2<f64>; 3] {
        [&self.exp, &self.phi1, &self.phi2]
    }

    /// Sine transform; it is its own inverse.
    pub fn transform(&self, v: &ArrayView2<'_, f64>) -> Array2<f64> {
        let left = self.sx.matrix().dot(v);
        match &self.sy {
            Some(sy) => left.dot(&sy.matrix()),
            None => left,
        }
    }

    /// One step in coefficient space. ETD1 uses only `f_next`; ETD2 adds
    /// `dt·φ2·(f_next − f_now)` to the `f_now` predictor.
    pub fn advance(
        &self,
        scheme: Scheme,
        c: &Array2<f64>,
        f_now: &Array2<f64>,
        f_next: &Array2<f64>,
    ) -> Array2<f64> {
        let mut out = &self.exp * c;
        match scheme {
            Scheme::Etd1 => {
                Zip::from(&mut out)
                    .and(&self.phi1)
                    .and(f_next)
                    .for_each(|o, &p, &f| *o += p * f);
            }
            Scheme::Etd2 => {
                Zip::from(&mut out)
                    .and(&self.phi1)
                    .and(&self.phi2)
                    .and(f_now)
                    .and(f_next)
                    .for_each(|o, &p1, &p2, &f0, &f1| *o += p1 * f0 + p2 * (f1 - f0));
            }
        }
        out
    }

    /// `e^{dtA}c + dt·φ1(dtA)·f_now` in coefficient space.
    pub fn predictor(&self, c: &Array2<f64>, f_now: &Array2<f64>) -> Array2<f64> {
        self.advance(Scheme::Etd1, c, f_now, f_now)
    }

    fn field(&self, v: &[f64], name: &'static str) -> Result<Array2<f64>> {
        check_len(self.len(), v.len())?;
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite(name));
        }
        Ok(Array2::from_shape_vec(self.shape(), v.to_vec()).expect("shape checked"))
    }
}

fn check_step(dt: f64) -> Result<()> {
    if dt > 0.0 && dt.is_finite() {
        Ok(())
    } else {
        Err(invalid("dt", format!("must be positive, got {dt}")))
    }
}

/// Exponential Euler: `e^{dtA}u + dt·φ1(dtA)·F(t_{m+1})`.
///
/// 2D states are flattened row-major (`p = i·ny + j`).
pub fn etd1_step(ws: &StepWorkspace, u: &[f64], forcing_next: &[f64]) -> Result<Vec<f64>> {
    let c = ws.transform(&ws.field(u, "state")?.view());
    let f = ws.transform(&ws.field(forcing_next, "forcing")?.view());
    let out = ws.advance(Scheme::Etd1, &c, &f, &f);
    Ok(ws.transform(&out.view()).into_iter().collect())
}

/// ETD2: the ETD1 step with `F(t_m)` plus `dt·φ2(dtA)·(F(t_{m+1}) − F(t_m))`.
pub fn etd2_step(
    ws: &StepWorkspace,
    u: &[f64],
    forcing_now: &[f64],
    forcing_next: &[f64],
) -> Result<Vec<f64>> {
    let c = ws.transform(&ws.field(u, "state")?.view());
    let f0 = ws.transform(&ws.field(forcing_now, "forcing")?.view());
    let f1 = ws.transform(&ws.field(forcing_next, "forcing")?.view());
    let out = ws.advance(Scheme::Etd2, &c, &f0, &f1);
    Ok(ws.transform(&out.view()).into_iter().collect())
}
