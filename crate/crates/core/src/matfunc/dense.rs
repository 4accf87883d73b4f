//! Dense matrix exponential by scaling and squaring with a [13/13] Padé
//! approximant. Used as an independent reference for the spectral kernels,
//! not on any solver path.

use nalgebra::DMatrix;
use ndarray::{Array2, ArrayView2, Axis};

use crate::error::{invalid, Error, Result};

const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371_920_351_148_152;

/// `e^M` for a square matrix `M`.
pub fn expm_dense(m: &ArrayView2<'_, f64>) -> Result<Array2<f64>> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(invalid(
            "m",
            format!("matrix must be square, got {}x{}", n, m.ncols()),
        ));
    }
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("expm_dense input"));
    }
    let norm1 = one_norm(m);
    let squarings = if norm1 > THETA13 {
        (norm1 / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let a = m.mapv(|x| x / 2f64.powi(squarings));
    let ident = Array2::<f64>::eye(n);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a4.dot(&a2);
    let b = &PADE13;

    let u_inner = &a6 * b[13] + &a4 * b[11] + &a2 * b[9];
    let u = a.dot(&(a6.dot(&u_inner) + &a6 * b[7] + &a4 * b[5] + &a2 * b[3] + &ident * b[1]));
    let v_inner = &a6 * b[12] + &a4 * b[10] + &a2 * b[8];
    let v = a6.dot(&v_inner) + &a6 * b[6] + &a4 * b[4] + &a2 * b[2] + &ident * b[0];

    let mut r = solve(&(&v - &u).view(), &(&v + &u).view())?;
    for _ in 0..squarings {
        r = r.dot(&r);
    }
    Ok(r)
}

/// Solves `A·X = B` with a pivoted LU factorization.
pub fn solve(a: &ArrayView2<'_, f64>, b: &ArrayView2<'_, f64>) -> Result<Array2<f64>> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: b.nrows(),
        });
    }
    let lu = DMatrix::from_fn(n, n, |i, j| a[[i, j]]).lu();
    let rhs = DMatrix::from_fn(n, b.ncols(), |i, j| b[[i, j]]);
    let x = lu.solve(&rhs).ok_or(Error::IllConditioned(f64::INFINITY))?;
    Ok(Array2::from_shape_fn((n, b.ncols()), |(i, j)| x[(i, j)]))
}

/// Maximum absolute column sum.
pub fn one_norm(m: &ArrayView2<'_, f64>) -> f64 {
    m.axis_iter(Axis(1))
        .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn zero_matrix_gives_identity() {
        let z = Array2::<f64>::zeros((3, 3));
        let e = expm_dense(&z.view()).unwrap();
        assert_eq!(e, Array2::eye(3));
    }

    #[test]
    fn diagonal_case() {
        let d = array![[-1.0, 0.0], [0.0, -2.0]];
        let e = expm_dense(&d.view()).unwrap();
        assert!((e[[0, 0]] - (-1f64).exp()).abs() < 1e-15);
        assert!((e[[1, 1]] - (-2f64).exp()).abs() < 1e-15);
        assert!(e[[0, 1]].abs() < 1e-16 && e[[1, 0]].abs() < 1e-16);
    }

    #[test]
    fn symmetric_two_by_two() {
        // eigenpairs: -1 with (1,1)/√2, -3 with (1,-1)/√2
        let a = array![[-2.0, 1.0], [1.0, -2.0]];
        let e = expm_dense(&a.view()).unwrap();
        let (p, q) = ((-1f64).exp(), (-3f64).exp());
        let want = array![[p + q, p - q], [p - q, p + q]] * 0.5;
        for (x, y) in e.iter().zip(want.iter()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_square() {
        let a = Array2::<f64>::zeros((2, 3));
        assert!(expm_dense(&a.view()).is_err());
    }

    #[test]
    fn solve_small_system() {
        let a = array![[0.0, 2.0], [3.0, 1.0]];
        let b = array![[4.0], [5.0]];
        let x = solve(&a.view(), &b.view()).unwrap();
        assert!((x[[0, 0]] - 1.0).abs() < 1e-15);
        assert!((x[[1, 0]] - 2.0).abs() < 1e-15);
    }
}
