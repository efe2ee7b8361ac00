//! Dense symmetric eigendecomposition, sparse spectral synthesis and the
//! unnormalized DFT matrix.
//!
//! The recovery pipelines never need any of this: eigenvalues and local
//! components are computed from samples alone. The module exists so that
//! tests and callers can synthesize ground-truth signals, match recovered
//! eigenvalues back to basis indices, and cross-check results.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::{GraphSignal, Vertex};
use crate::linalg;
use crate::tolerance::Tolerances;

/// Ascending eigenvalues with orthonormal eigenvectors of a symmetric matrix.
///
/// Ordering and signs are canonical: eigenvalues ascend, ties are broken by
/// the lexicographic order of the sign-normalized eigenvectors, and each
/// eigenvector's first entry of significant magnitude is positive. Two calls
/// on the same matrix produce identical bits.
#[derive(Debug, Clone)]
pub struct SpectralBasis {
    eigenvalues: Vec<f64>,
    vectors: DMatrix<f64>,
}

impl SpectralBasis {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvalue for the 1-based index `j`.
    pub fn eigenvalue(&self, j: usize) -> f64 {
        self.eigenvalues[j - 1]
    }

    /// Eigenvector `u_j` for the 1-based index `j`.
    pub fn vector(&self, j: usize) -> DVector<f64> {
        self.vectors.column(j - 1).into_owned()
    }

    /// Entry `u_j(v)`, both indices 1-based.
    pub fn value(&self, j: usize, v: Vertex) -> f64 {
        self.vectors[(v - 1, j - 1)]
    }

    /// The full eigenvector matrix `U` (columns ascending by eigenvalue).
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.vectors
    }

    /// Restriction `U_{W,S}`: rows at 1-based vertices `w`, columns at
    /// 1-based indices `s`.
    pub fn restrict(&self, rows: &[Vertex], cols: &[usize]) -> DMatrix<f64> {
        DMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.vectors[(rows[i] - 1, cols[j] - 1)]
        })
    }

    /// Restriction `U_W` to the rows at 1-based vertices `w`.
    pub fn restrict_rows(&self, rows: &[Vertex]) -> DMatrix<f64> {
        DMatrix::from_fn(rows.len(), self.dim(), |i, j| {
            self.vectors[(rows[i] - 1, j)]
        })
    }
}

fn normalize_sign(column: &mut DVector<f64>, threshold: f64) {
    if let Some(first) = column.iter().find(|x| x.abs() > threshold) {
        if *first < 0.0 {
            column.neg_mut();
        }
    }
}

fn lex_less(a: &DVector<f64>, b: &DVector<f64>) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

/// Eigendecompose a symmetric matrix with the cyclic Jacobi iteration.
///
/// The result satisfies `M u_j = lambda_j u_j` and `U^T U = I` to the
/// configured residual; violation is reported as a convergence error.
pub fn eigendecompose(matrix: &DMatrix<f64>, tol: &Tolerances) -> Result<SpectralBasis> {
    if matrix.nrows() != matrix.ncols() {
        return Err(Error::NotSquare {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
        });
    }
    let gap = linalg::symmetry_gap(matrix);
    let scale = linalg::max_abs(matrix).max(1.0);
    if gap > tol.symmetry * scale {
        return Err(Error::NotSymmetric(gap));
    }

    let (raw_values, raw_vectors) = linalg::jacobi_eigen(matrix, tol.jacobi_offdiagonal)?;
    let n = raw_values.len();
    let mut columns: Vec<(f64, DVector<f64>)> = (0..n)
        .map(|j| {
            let mut col = raw_vectors.column(j).into_owned();
            normalize_sign(&mut col, tol.sign_convention);
            (raw_values[j], col)
        })
        .collect();
    columns.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    // Break ordering ties between (numerically) equal eigenvalues by the
    // lexicographic order of the normalized eigenvectors.
    let tie = tol.symmetry * scale;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (columns[end].0 - columns[end - 1].0).abs() <= tie {
            end += 1;
        }
        columns[start..end].sort_by(|a, b| {
            if lex_less(&a.1, &b.1) {
                std::cmp::Ordering::Less
            } else if lex_less(&b.1, &a.1) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        start = end;
    }

    let eigenvalues: Vec<f64> = columns.iter().map(|(v, _)| *v).collect();
    let vectors = DMatrix::from_columns(&columns.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>());

    // Residual and orthonormality checks.
    let mut residual = matrix * &vectors;
    for (j, &lambda) in eigenvalues.iter().enumerate() {
        let mut col = residual.column_mut(j);
        col.axpy(-lambda, &vectors.column(j), 1.0);
    }
    let res = linalg::max_abs(&residual);
    if res > tol.eigen_residual * scale {
        return Err(Error::Convergence(format!(
            "eigenpair residual {res:.3e} exceeds {:.3e}",
            tol.eigen_residual * scale
        )));
    }
    let gram_gap = linalg::max_abs(&(vectors.transpose() * &vectors - DMatrix::identity(n, n)));
    if gram_gap > tol.eigen_residual {
        return Err(Error::Convergence(format!(
            "orthonormality defect {gram_gap:.3e}"
        )));
    }

    Ok(SpectralBasis { eigenvalues, vectors })
}

/// An s-sparse spectral signal: support indices (1-based, ascending) with
/// nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSpectralSignal {
    support: Vec<usize>,
    coefficients: Vec<f64>,
}

impl SparseSpectralSignal {
    pub fn new(support: Vec<usize>, coefficients: Vec<f64>) -> Result<Self> {
        if support.len() != coefficients.len() {
            return Err(Error::SupportLengthMismatch {
                support: support.len(),
                coefficients: coefficients.len(),
            });
        }
        let mut pairs: Vec<(usize, f64)> = support.into_iter().zip(coefficients).collect();
        pairs.sort_by_key(|&(j, _)| j);
        for window in pairs.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::DuplicateSupport(window[0].0));
            }
        }
        for &(j, beta) in &pairs {
            if j == 0 {
                return Err(Error::SupportOutOfRange { index: 0, n: 0 });
            }
            if beta == 0.0 {
                return Err(Error::ZeroCoefficient(j));
            }
        }
        let (support, coefficients) = pairs.into_iter().unzip();
        Ok(Self { support, coefficients })
    }

    pub fn empty() -> Self {
        Self {
            support: Vec::new(),
            coefficients: Vec::new(),
        }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn sparsity(&self) -> usize {
        self.support.len()
    }
}

/// Synthesize `f = sum_j beta_j u_j` from a basis and a sparse spectrum.
pub fn synthesize(basis: &SpectralBasis, signal: &SparseSpectralSignal) -> Result<GraphSignal> {
    let n = basis.dim();
    let mut f = DVector::<f64>::zeros(n);
    for (&j, &beta) in signal.support().iter().zip(signal.coefficients()) {
        if j < 1 || j > n {
            return Err(Error::SupportOutOfRange { index: j, n });
        }
        f.axpy(beta, &basis.vectors.column(j - 1), 1.0);
    }
    Ok(GraphSignal::from_values(f.iter().copied().collect()))
}

/// Unnormalized DFT matrix with entries `exp(2 pi i k j / n)`,
/// `k, j = 0..n-1`.
pub fn dft_matrix(n: usize) -> DMatrix<Complex<f64>> {
    DMatrix::from_fn(n, n, |k, j| {
        let angle = 2.0 * std::f64::consts::PI * ((k * j) % n) as f64 / n as f64;
        Complex::from_polar(1.0, angle)
    })
}
