//! Recovery of a sparse spectral signal from samples in one neighbourhood.
//!
//! The pipeline follows the operator form of Prony's method: powers of the
//! Laplacian evaluated at a fixed vertex form an exponential sum in the
//! active eigenvalues, so the moments `g(k) = (L^k f)(v)` fill a Hankel
//! matrix whose kernel vector is a monic polynomial with exactly the active
//! eigenvalues as roots. Companion-matrix eigenvalues extract the roots and
//! shifted-operator products evaluate the local eigencomponents.
//!
//! Everything works ring-locally: an s-sparse signal needs samples on
//! `N(v, 2s-1)` only, and components come out on `N(v, s)`.
//!
//! Sign convention: with `L = D - A` one application reads
//! `(L f)(v) = sum_{w ~ v} (f(v) - f(w))`. The one-sparse special case is
//! therefore `lambda = (1/f(v)) * sum_{w ~ v} (f(v) - f(w))`; statements of
//! this formula sometimes appear with the opposite sign, which belongs to
//! the Laplacian `A - D` and is not used here.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result, Stage};
use crate::graph::{Graph, Vertex};
use crate::linalg;
use crate::operator::{self, LocalOperator};
use crate::spectral::SpectralBasis;
use crate::tolerance::Tolerances;

/// Moments `g(k) = (L^k f)(v)` at a fixed base vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    base: Vertex,
    values: Vec<f64>,
}

impl MomentSequence {
    pub fn new(base: Vertex, values: Vec<f64>) -> Self {
        Self { base, values }
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    /// `g(0), g(1), ..., g(K)`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// One recovered eigencomponent: the values of `beta_j u_j` on the valid
/// local domain. Keys are 1-based vertex labels for graph recoveries and
/// canonical face indices for simplicial ones.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalComponent {
    pub eigenvalue: f64,
    pub values: BTreeMap<usize, f64>,
}

/// Recovered eigenvalues matched to basis indices: one cluster of candidate
/// indices per eigenvalue (several indices signal a multiple eigenvalue).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportMatch {
    pub clusters: Vec<Vec<usize>>,
}

impl SupportMatch {
    /// The support set when every cluster is a singleton.
    pub fn plain(&self) -> Option<Vec<usize>> {
        if self.clusters.iter().all(|c| c.len() == 1) {
            let mut s: Vec<usize> = self.clusters.iter().map(|c| c[0]).collect();
            s.sort_unstable();
            Some(s)
        } else {
            None
        }
    }

    /// All matched indices, ascending.
    pub fn all_indices(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.clusters.iter().flatten().copied().collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// Numerical evidence accumulated along the pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    /// Singular values of the (stacked) Hankel matrix, descending.
    pub hankel_singular_values: Vec<f64>,
    /// Detected number of active eigenvalues after rank shrinking.
    pub effective_sparsity: usize,
    /// Largest imaginary part discarded from a companion-matrix root.
    pub max_imag_residue: f64,
    /// Number of roots merged by clustering (multiple-eigenvalue path).
    pub merged_roots: usize,
    /// Max deviation of the component sum from the samples on the valid
    /// domain; `None` when no components were computed.
    pub component_residual: Option<f64>,
}

/// Result of a recovery run.
#[derive(Debug, Clone, PartialEq)]
pub struct RecoveryResult {
    /// Recovered eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Filled by [`RecoveryResult::match_against`]; recovery itself never
    /// needs a basis.
    pub matched_support: Option<SupportMatch>,
    /// Per-eigenvalue local components (empty for eigenvalue-only modes).
    pub components: Vec<LocalComponent>,
    pub diagnostics: Diagnostics,
}

impl RecoveryResult {
    /// Match the recovered eigenvalues against a ground-truth basis.
    pub fn match_against(&mut self, basis: &SpectralBasis, window: f64) -> Result<&SupportMatch> {
        let m = match_support(&self.eigenvalues, basis, window)?;
        self.matched_support = Some(m);
        Ok(self.matched_support.as_ref().unwrap())
    }

    pub(crate) fn empty() -> Self {
        Self {
            eigenvalues: Vec::new(),
            matched_support: None,
            components: Vec::new(),
            diagnostics: Diagnostics {
                hankel_singular_values: Vec::new(),
                effective_sparsity: 0,
                max_imag_residue: 0.0,
                merged_roots: 0,
                component_residual: Some(0.0),
            },
        }
    }
}

/// Monic kernel polynomial of a Hankel matrix, with rank diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct PronyPolynomial {
    /// Coefficients in ascending powers; the last one is exactly 1.
    pub coefficients: Vec<f64>,
    /// Numerical rank of the input (the detected sparsity).
    pub effective_sparsity: usize,
    /// Singular values of the input matrix, descending.
    pub singular_values: Vec<f64>,
}

impl PronyPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

/// Real roots of a monic polynomial with their companion-matrix residue.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    /// Roots, ascending.
    pub roots: Vec<f64>,
    /// Largest |Im| encountered before discarding imaginary parts.
    pub max_imag_residue: f64,
}

// ---------------------------------------------------------------------------
// graph-facing operations
// ---------------------------------------------------------------------------

fn samples_to_ids(g: &Graph, samples: &BTreeMap<Vertex, f64>) -> Result<BTreeMap<usize, f64>> {
    samples
        .iter()
        .map(|(&v, &x)| Ok((g.id(v)?, x)))
        .collect()
}

/// Compute `g(k) = (L^k f)(v)` for `k = 0..=kmax` from samples on
/// `N(v, kmax)`, by k-fold ring-local application of `L = D - A`.
pub fn local_moments(
    g: &Graph,
    samples: &BTreeMap<Vertex, f64>,
    v: Vertex,
    kmax: usize,
) -> Result<MomentSequence> {
    let op = operator::GraphOp::new(g);
    let ids = samples_to_ids(g, samples)?;
    let values = operator::local_moments_op(&op, &ids, g.id(v)?, kmax)
        .map_err(|missing| missing_vertices(&missing))?;
    Ok(MomentSequence::new(v, values))
}

fn missing_vertices(ids: &[usize]) -> Error {
    Error::MissingSamples(ids.iter().map(|i| (i + 1).to_string()).collect())
}

/// The `s x (s+1)` Hankel matrix `H_{k,l} = g(k+l)`.
pub fn hankel(moments: &MomentSequence, s: usize) -> Result<DMatrix<f64>> {
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    if moments.len() < 2 * s {
        return Err(Error::InsufficientMoments {
            needed: 2 * s,
            got: moments.len(),
        });
    }
    Ok(hankel_block(moments.values(), s))
}

pub(crate) fn hankel_block(g: &[f64], s: usize) -> DMatrix<f64> {
    DMatrix::from_fn(s, s + 1, |k, l| g[k + l])
}

/// Singular values (descending) and kernel basis (most reliable direction
/// first) of a Hankel block.
pub(crate) fn hankel_kernel(
    h: &DMatrix<f64>,
    tol: &Tolerances,
) -> (Vec<f64>, Vec<DVector<f64>>) {
    let (mut svals, basis) = linalg::kernel(h, tol.rank_rel);
    svals.truncate(h.nrows().min(h.ncols()));
    (svals, basis)
}

/// Normalize a kernel vector so its last coordinate is exactly 1.
pub(crate) fn monic_from_kernel(vector: &DVector<f64>, tol: &Tolerances) -> Result<Vec<f64>> {
    let last = vector[vector.len() - 1];
    let scale = vector.amax();
    if last.abs() <= tol.monic_coordinate * scale {
        return Err(Error::MonicCoordinate(last));
    }
    let mut p: Vec<f64> = vector.iter().map(|x| x / last).collect();
    *p.last_mut().unwrap() = 1.0;
    Ok(p)
}

/// Monic vector in the numerical null space of a Hankel matrix.
///
/// When the numerical rank is below the requested sparsity the matrix is
/// shrunk to its leading `r x (r+1)` block and a degree-`r` polynomial is
/// returned; `effective_sparsity` records the detected rank. A rank of zero
/// yields the empty polynomial (all moments vanish).
pub fn prony_polynomial(h: &DMatrix<f64>, tol: &Tolerances) -> Result<PronyPolynomial> {
    let s = h.nrows();
    if h.ncols() != s + 1 {
        return Err(Error::NotSquare {
            rows: s,
            cols: h.ncols(),
        });
    }
    let (svals, kernel) = hankel_kernel(h, tol);
    if kernel.is_empty() {
        return Err(Error::NoKernel(svals.last().copied().unwrap_or(0.0)));
    }
    let rank = s + 1 - kernel.len();
    if rank == 0 {
        return Ok(PronyPolynomial {
            coefficients: Vec::new(),
            effective_sparsity: 0,
            singular_values: svals,
        });
    }
    if rank == s {
        let coefficients = monic_from_kernel(&kernel[0], tol)?;
        return Ok(PronyPolynomial {
            coefficients,
            effective_sparsity: s,
            singular_values: svals,
        });
    }
    // Overestimated sparsity: the leading principal block of a rank-r
    // Hankel built from an r-term exponential sum is r x (r+1) with a
    // one-dimensional kernel.
    let sub = h.view((0, 0), (rank, rank + 1)).into_owned();
    let (_, sub_kernel) = hankel_kernel(&sub, tol);
    let mut best_err = None;
    for vector in &sub_kernel {
        match monic_from_kernel(vector, tol) {
            Ok(coefficients) => {
                return Ok(PronyPolynomial {
                    coefficients,
                    effective_sparsity: rank,
                    singular_values: svals,
                })
            }
            Err(e) => best_err = Some(e),
        }
    }
    Err(best_err.unwrap_or(Error::NoKernel(0.0)))
}

/// Roots of a monic polynomial via its companion matrix.
///
/// Imaginary parts up to `root_imag * (1 + |Re|)` are discarded; a larger
/// one signals a model violation and is returned as an error.
pub fn polynomial_roots(monic: &[f64], tol: &Tolerances) -> Result<RootSet> {
    let degree = monic.len().saturating_sub(1);
    if degree == 0 {
        return Err(Error::EmptyPolynomial);
    }
    let companion = DMatrix::from_fn(degree, degree, |i, j| {
        if j == degree - 1 {
            -monic[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eigen = companion.complex_eigenvalues();
    let mut max_imag = 0.0_f64;
    let mut roots = Vec::with_capacity(degree);
    for z in eigen.iter() {
        if z.im.abs() > tol.root_imag * (1.0 + z.re.abs()) {
            return Err(Error::ComplexRoot { re: z.re, im: z.im });
        }
        max_imag = max_imag.max(z.im.abs());
        roots.push(z.re);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(RootSet {
        roots,
        max_imag_residue: max_imag,
    })
}

/// Merge roots closer than `root_cluster * (1 + max|root|)`; the mean of a
/// merged group stands in for the multiple eigenvalue.
pub(crate) fn cluster_roots(roots: &[f64], tol: &Tolerances) -> (Vec<f64>, usize) {
    if roots.is_empty() {
        return (Vec::new(), 0);
    }
    let scale = 1.0 + roots.iter().fold(0.0_f64, |m, r| m.max(r.abs()));
    let gap = tol.root_cluster * scale;
    let mut clustered = Vec::new();
    let mut group = vec![roots[0]];
    for &r in &roots[1..] {
        if r - group.last().unwrap() <= gap {
            group.push(r);
        } else {
            clustered.push(group.iter().sum::<f64>() / group.len() as f64);
            group = vec![r];
        }
    }
    clustered.push(group.iter().sum::<f64>() / group.len() as f64);
    let merged = roots.len() - clustered.len();
    (clustered, merged)
}

pub(crate) fn components_op(
    op: &dyn LocalOperator,
    samples: &BTreeMap<usize, f64>,
    center: usize,
    eigenvalues: &[f64],
    out_radius: usize,
    tol: &Tolerances,
) -> Result<Vec<LocalComponent>, ComponentsError> {
    let scale = 1.0 + eigenvalues.iter().fold(0.0_f64, |m, r| m.max(r.abs()));
    let mut components = Vec::with_capacity(eigenvalues.len());
    for (j, &lambda) in eigenvalues.iter().enumerate() {
        let mut shifts = Vec::with_capacity(eigenvalues.len() - 1);
        let mut denominator = 1.0;
        for (k, &mu) in eigenvalues.iter().enumerate() {
            if k == j {
                continue;
            }
            if (lambda - mu).abs() <= tol.root_cluster * scale {
                return Err(ComponentsError::Collision { a: lambda, b: mu });
            }
            shifts.push(mu);
            denominator *= lambda - mu;
        }
        let values = operator::shifted_product_op(op, samples, center, &shifts, denominator, out_radius)
            .map_err(ComponentsError::Missing)?;
        components.push(LocalComponent {
            eigenvalue: lambda,
            values,
        });
    }
    Ok(components)
}

pub(crate) enum ComponentsError {
    Collision { a: f64, b: f64 },
    Missing(Vec<usize>),
}

impl ComponentsError {
    fn into_error(self, label: &dyn Fn(usize) -> String) -> Error {
        match self {
            ComponentsError::Collision { a, b } => Error::EigenvalueCollision { a, b },
            ComponentsError::Missing(ids) => {
                Error::MissingSamples(ids.iter().map(|&i| label(i)).collect())
            }
        }
    }
}

/// Evaluate the shifted-operator products of the recovery formula: for each
/// recovered eigenvalue, `prod_{k != j} (L - lambda_k I) / (lambda_j -
/// lambda_k)` applied to the samples, on `N(v, m)` with `m` the number of
/// eigenvalues. The eigenvalues must be pairwise distinct.
pub fn local_components(
    g: &Graph,
    samples: &BTreeMap<Vertex, f64>,
    v: Vertex,
    eigenvalues: &[f64],
    tol: &Tolerances,
) -> Result<Vec<LocalComponent>> {
    let op = operator::GraphOp::new(g);
    let ids = samples_to_ids(g, samples)?;
    components_op(&op, &ids, g.id(v)?, eigenvalues, eigenvalues.len(), tol)
        .map(relabel_components)
        .map_err(|e| e.into_error(&|i| (i + 1).to_string()))
}

fn relabel_components(components: Vec<LocalComponent>) -> Vec<LocalComponent> {
    components
        .into_iter()
        .map(|c| LocalComponent {
            eigenvalue: c.eigenvalue,
            values: c.values.into_iter().map(|(i, x)| (i + 1, x)).collect(),
        })
        .collect()
}

/// Full one-neighbourhood recovery (moments, Hankel kernel, companion
/// roots, local components) for an s-sparse signal sampled on `N(v, 2s-1)`.
pub fn recover_one_neighbourhood(
    g: &Graph,
    v: Vertex,
    s: usize,
    samples: &BTreeMap<Vertex, f64>,
    tol: &Tolerances,
) -> Result<RecoveryResult> {
    let op = operator::GraphOp::new(g);
    let ids = samples_to_ids(g, samples)?;
    let mut result = recover_one_op(&op, g.id(v)?, s, &ids, tol, &|i| (i + 1).to_string())?;
    result.components = relabel_components(result.components);
    Ok(result)
}

pub(crate) fn recover_one_op(
    op: &dyn LocalOperator,
    center: usize,
    s: usize,
    samples: &BTreeMap<usize, f64>,
    tol: &Tolerances,
    label: &dyn Fn(usize) -> String,
) -> Result<RecoveryResult> {
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    let kmax = 2 * s - 1;
    let g = operator::local_moments_op(op, samples, center, kmax)
        .map_err(|ids| {
            Error::MissingSamples(ids.iter().map(|&i| label(i)).collect()).at_stage(Stage::Moments)
        })?;
    let h = hankel_block(&g, s);
    let polynomial =
        prony_polynomial(&h, tol).map_err(|e| e.at_stage(Stage::KernelPolynomial))?;

    if polynomial.effective_sparsity == 0 {
        return Ok(RecoveryResult {
            eigenvalues: Vec::new(),
            matched_support: None,
            components: Vec::new(),
            diagnostics: Diagnostics {
                hankel_singular_values: polynomial.singular_values,
                effective_sparsity: 0,
                max_imag_residue: 0.0,
                merged_roots: 0,
                component_residual: None,
            },
        });
    }

    let roots = polynomial_roots(&polynomial.coefficients, tol)
        .map_err(|e| e.at_stage(Stage::Roots))?;
    let (eigenvalues, merged_roots) = cluster_roots(&roots.roots, tol);

    let components = components_op(op, samples, center, &eigenvalues, s, tol)
        .map_err(|e| e.into_error(label).at_stage(Stage::Components))?;

    // Consistency of the recovered decomposition with the samples on the
    // valid domain.
    let mut residual = 0.0_f64;
    for &i in &operator::ball(op, center, s) {
        let total: f64 = components.iter().map(|c| c.values[&i]).sum();
        residual = residual.max((total - samples[&i]).abs());
    }

    Ok(RecoveryResult {
        eigenvalues,
        matched_support: None,
        components,
        diagnostics: Diagnostics {
            hankel_singular_values: polynomial.singular_values,
            effective_sparsity: polynomial.effective_sparsity,
            max_imag_residue: roots.max_imag_residue,
            merged_roots,
            component_residual: Some(residual),
        },
    })
}

/// Map recovered eigenvalues back to basis indices: every index whose
/// eigenvalue lies within `window` of the recovered value joins the cluster.
pub fn match_support(
    eigenvalues: &[f64],
    basis: &SpectralBasis,
    window: f64,
) -> Result<SupportMatch> {
    let mut clusters = Vec::with_capacity(eigenvalues.len());
    for &lambda in eigenvalues {
        let cluster: Vec<usize> = (1..=basis.dim())
            .filter(|&j| (basis.eigenvalue(j) - lambda).abs() <= window)
            .collect();
        if cluster.is_empty() {
            return Err(Error::NoSupportMatch {
                eigenvalue: lambda,
                tol: window,
            });
        }
        clusters.push(cluster);
    }
    Ok(SupportMatch { clusters })
}
