//! Dense numerical kernels: a cyclic Jacobi eigensolver for symmetric
//! matrices and SVD-based rank, kernel and least-squares helpers.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

pub(crate) fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

pub(crate) fn symmetry_gap(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let mut gap = 0.0_f64;
    for i in 0..n {
        for j in (i + 1)..n {
            gap = gap.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    gap
}

fn offdiagonal_frobenius(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[(i, j)] * m[(i, j)];
            }
        }
    }
    sum.sqrt()
}

const MAX_JACOBI_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization of a symmetric matrix.
///
/// Sweeps rotate away every off-diagonal pair (p, q) in a fixed order until
/// the off-diagonal Frobenius norm drops below `offdiag_rel_tol` times the
/// Frobenius norm of the input. Returns unsorted eigenvalues and the
/// accumulated rotation matrix whose columns are the eigenvectors.
pub(crate) fn jacobi_eigen(
    matrix: &DMatrix<f64>,
    offdiag_rel_tol: f64,
) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = matrix.nrows();
    let mut a = matrix.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    if n <= 1 {
        return Ok((a.diagonal().iter().copied().collect(), v));
    }
    let scale = a.norm();
    if scale == 0.0 {
        return Ok((vec![0.0; n], v));
    }
    let target = offdiag_rel_tol * scale;

    for _ in 0..MAX_JACOBI_SWEEPS {
        if offdiagonal_frobenius(&a) <= target {
            return Ok((a.diagonal().iter().copied().collect(), v));
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                // For very large |theta| the direct formula underflows; use
                // the first-order tangent instead.
                let t = if theta.abs() > 1e150 {
                    1.0 / (2.0 * theta)
                } else {
                    let sign = if theta < 0.0 { -1.0 } else { 1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a[(p, p)];
                let aqq = a[(q, q)];
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[(i, p)];
                        let aiq = a[(i, q)];
                        let nip = aip - s * (aiq + tau * aip);
                        let niq = aiq + s * (aip - tau * aiq);
                        a[(i, p)] = nip;
                        a[(p, i)] = nip;
                        a[(i, q)] = niq;
                        a[(q, i)] = niq;
                    }
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip - s * (viq + tau * vip);
                    v[(i, q)] = viq + s * (vip - tau * viq);
                }
            }
        }
    }
    if offdiagonal_frobenius(&a) <= target {
        return Ok((a.diagonal().iter().copied().collect(), v));
    }
    Err(Error::Convergence(format!(
        "off-diagonal norm {:.3e} above target {:.3e} after {} sweeps",
        offdiagonal_frobenius(&a),
        target,
        MAX_JACOBI_SWEEPS
    )))
}

/// Singular values in descending order.
pub(crate) fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Singular values of a complex matrix in descending order.
pub(crate) fn singular_values_complex(m: &DMatrix<Complex<f64>>) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Numerical kernel of `m`.
///
/// Returns the singular values of `m` (descending, padded with exact zeros
/// when the matrix has fewer rows than columns) and an orthonormal kernel
/// basis ordered from the most reliable kernel direction (smallest singular
/// value) outward. A direction belongs to the kernel when its singular value
/// is at most `rel_tol` times the largest one.
pub(crate) fn kernel(m: &DMatrix<f64>, rel_tol: f64) -> (Vec<f64>, Vec<DVector<f64>>) {
    let rows = m.nrows();
    let cols = m.ncols();
    // Pad wide matrices with zero rows so the SVD carries a full set of
    // right singular vectors.
    let padded = if rows < cols {
        let mut p = DMatrix::<f64>::zeros(cols, cols);
        p.view_mut((0, 0), (rows, cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("svd requested with right vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].partial_cmp(&svd.singular_values[i]).unwrap());

    let mut values: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    while values.len() < cols {
        values.push(0.0);
    }
    let sigma_max = values.first().copied().unwrap_or(0.0);
    let threshold = rel_tol * sigma_max;
    let rank = values.iter().take_while(|&&s| s > threshold).count();

    let mut basis = Vec::new();
    for idx in (rank..cols).rev() {
        // Indices beyond the computed singular values only exist for wide,
        // unpadded inputs; padding above rules that out.
        let row = order[idx];
        basis.push(v_t.row(row).transpose());
    }
    (values, basis)
}

/// Minimum-norm least-squares solution of `a x = b` via the SVD.
pub(crate) fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>, rank_rel: f64) -> DVector<f64> {
    let svd = a.clone().svd(true, true);
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    svd.solve(b, rank_rel * sigma_max)
        .expect("svd computed with both factors")
}
