//! Eigenvalue recovery from several smaller neighbourhoods.
//!
//! Instead of one `(2s-1)`-neighbourhood, moments are collected around
//! several anchor vertices with individual radii and stacked into one tall
//! Hankel matrix. The stacked matrix factorizes as `B * C` with `C` the
//! `(s+1)`-column Vandermonde matrix in the active eigenvalues, so its
//! kernel is the Prony polynomial exactly when the coefficient matrix `B`
//! has full column rank. Only eigenvalues are recovered in this mode.

use std::collections::BTreeSet;

use nalgebra::DMatrix;

use std::collections::BTreeMap;

use crate::error::{Error, Result, Stage};
use crate::graph::{Graph, Vertex};
use crate::linalg;
use crate::operator::{self, LocalOperator};
use crate::prony::{
    cluster_roots, hankel_kernel, monic_from_kernel, polynomial_roots, Diagnostics,
    MomentSequence, RecoveryResult,
};
use crate::spectral::{SparseSpectralSignal, SpectralBasis};
use crate::tolerance::Tolerances;

/// Anchor vertices with per-anchor radii; the recovery samples
/// `W = union of N(v_i, s - 1 + r_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnapshotPlan {
    anchors: Vec<(Vertex, usize)>,
}

impl SnapshotPlan {
    pub fn new(anchors: Vec<(Vertex, usize)>) -> Result<Self> {
        if anchors.is_empty() {
            return Err(Error::EmptyPlan);
        }
        let mut seen = BTreeSet::new();
        for &(v, r) in &anchors {
            if r == 0 {
                return Err(Error::RadiusZero(v.to_string()));
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateAnchor(v.to_string()));
            }
        }
        Ok(Self { anchors })
    }

    pub fn anchors(&self) -> &[(Vertex, usize)] {
        &self.anchors
    }

    /// `r = r_1 + ... + r_t`, the row count of the stacked Hankel matrix.
    pub fn total_radius(&self) -> usize {
        self.anchors.iter().map(|&(_, r)| r).sum()
    }
}

/// The sampling set `W = union of N(v_i, s - 1 + r_i)`, ascending.
pub fn required_samples(g: &Graph, plan: &SnapshotPlan, s: usize) -> Result<Vec<Vertex>> {
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    let mut union = BTreeSet::new();
    for &(v, r) in plan.anchors() {
        union.extend(g.neighbourhood(v, s - 1 + r)?);
    }
    Ok(union.into_iter().collect())
}

/// Per-anchor moment sequences `g_i(k)`, `k = 0..=s-1+r_i`.
pub fn anchor_moments(
    g: &Graph,
    plan: &SnapshotPlan,
    s: usize,
    samples: &BTreeMap<Vertex, f64>,
) -> Result<Vec<MomentSequence>> {
    plan.anchors()
        .iter()
        .map(|&(v, r)| crate::prony::local_moments(g, samples, v, s - 1 + r))
        .collect()
}

/// Stack the per-anchor Hankel blocks: anchor `i` contributes rows
/// `(g_i(l), ..., g_i(l+s))` for `l = 0..r_i-1`, in plan order.
pub fn stacked_hankel(
    moments: &[MomentSequence],
    plan: &SnapshotPlan,
    s: usize,
) -> Result<DMatrix<f64>> {
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    let r = plan.total_radius();
    let mut h = DMatrix::<f64>::zeros(r, s + 1);
    let mut row = 0;
    for (m, &(_, radius)) in moments.iter().zip(plan.anchors()) {
        if m.len() < s + radius {
            return Err(Error::InsufficientMoments {
                needed: s + radius,
                got: m.len(),
            });
        }
        for l in 0..radius {
            for c in 0..=s {
                h[(row, c)] = m.values()[l + c];
            }
            row += 1;
        }
    }
    Ok(h)
}

pub(crate) fn recover_multi_op(
    op: &dyn LocalOperator,
    anchors: &[(usize, usize)],
    s: usize,
    samples: &BTreeMap<usize, f64>,
    tol: &Tolerances,
    label: &dyn Fn(usize) -> String,
) -> Result<RecoveryResult> {
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    let r: usize = anchors.iter().map(|&(_, radius)| radius).sum();
    let mut h = DMatrix::<f64>::zeros(r, s + 1);
    let mut row = 0;
    for &(center, radius) in anchors {
        let g = operator::local_moments_op(op, samples, center, s - 1 + radius).map_err(|ids| {
            Error::MissingSamples(ids.iter().map(|&i| label(i)).collect()).at_stage(Stage::Moments)
        })?;
        for l in 0..radius {
            for c in 0..=s {
                h[(row, c)] = g[l + c];
            }
            row += 1;
        }
    }
    eigenvalues_from_stacked(&h, tol)
}

/// Extract eigenvalues from a stacked Hankel matrix, requiring a
/// one-dimensional numerical kernel.
pub(crate) fn eigenvalues_from_stacked(
    h: &DMatrix<f64>,
    tol: &Tolerances,
) -> Result<RecoveryResult> {
    let (svals, kernel) = hankel_kernel(h, tol);
    match kernel.len() {
        0 => {
            return Err(
                Error::NoKernel(svals.last().copied().unwrap_or(0.0))
                    .at_stage(Stage::KernelPolynomial),
            )
        }
        1 => {}
        dim => {
            return Err(Error::RankDeficient {
                kernel_dim: dim,
                singular_values: svals,
            })
        }
    }
    let monic =
        monic_from_kernel(&kernel[0], tol).map_err(|e| e.at_stage(Stage::KernelPolynomial))?;
    let roots = polynomial_roots(&monic, tol).map_err(|e| e.at_stage(Stage::Roots))?;
    let (eigenvalues, merged_roots) = cluster_roots(&roots.roots, tol);
    Ok(RecoveryResult {
        diagnostics: Diagnostics {
            hankel_singular_values: svals,
            effective_sparsity: eigenvalues.len(),
            max_imag_residue: roots.max_imag_residue,
            merged_roots,
            component_residual: None,
        },
        eigenvalues,
        matched_support: None,
        components: Vec::new(),
    })
}

/// Recover the active eigenvalues of an s-sparse signal from samples on the
/// plan's sampling set. Succeeds exactly when the coefficient matrix `B` has
/// full column rank; a higher-dimensional kernel is reported as a
/// rank-deficiency error carrying the singular values.
pub fn recover_multi(
    g: &Graph,
    plan: &SnapshotPlan,
    s: usize,
    samples: &BTreeMap<Vertex, f64>,
    tol: &Tolerances,
) -> Result<RecoveryResult> {
    let op = operator::GraphOp::new(g);
    let ids: BTreeMap<usize, f64> = samples
        .iter()
        .map(|(&v, &x)| Ok::<_, Error>((g.id(v)?, x)))
        .collect::<Result<_>>()?;
    let anchors: Vec<(usize, usize)> = plan
        .anchors()
        .iter()
        .map(|&(v, r)| Ok::<_, Error>((g.id(v)?, r)))
        .collect::<Result<_>>()?;
    recover_multi_op(&op, &anchors, s, &ids, tol, &|i| (i + 1).to_string())
}

/// The coefficient matrix `B`: anchor block `i` holds rows
/// `lambda_j^k alpha_{i,j}` for `k = 0..r_i-1` with
/// `alpha_{i,j} = beta_j u_j(v_i)`. Ground truth required; diagnostic only.
pub fn coefficient_matrix_b(
    basis: &SpectralBasis,
    signal: &SparseSpectralSignal,
    plan: &SnapshotPlan,
) -> Result<DMatrix<f64>> {
    let n = basis.dim();
    for &j in signal.support() {
        if j < 1 || j > n {
            return Err(Error::SupportOutOfRange { index: j, n });
        }
    }
    let s = signal.sparsity();
    let r = plan.total_radius();
    let mut b = DMatrix::<f64>::zeros(r, s);
    let mut row = 0;
    for &(v, radius) in plan.anchors() {
        if v < 1 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        for k in 0..radius {
            for (col, (&j, &beta)) in signal
                .support()
                .iter()
                .zip(signal.coefficients())
                .enumerate()
            {
                let alpha = beta * basis.value(j, v);
                b[(row, col)] = basis.eigenvalue(j).powi(k as i32) * alpha;
            }
            row += 1;
        }
    }
    Ok(b)
}

/// Full-column-rank certificate for a coefficient matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankCertificate {
    pub full_rank: bool,
    pub smallest_singular_value: f64,
    pub largest_singular_value: f64,
}

/// Decide whether `b` has full column rank: the smallest of its column-count
/// singular values must exceed `rank_rel` times the largest.
pub fn rank_certificate(b: &DMatrix<f64>, tol: &Tolerances) -> RankCertificate {
    let cols = b.ncols();
    let svals = linalg::singular_values(b);
    let largest = svals.first().copied().unwrap_or(0.0);
    let smallest = if b.nrows() < cols {
        0.0
    } else {
        svals.last().copied().unwrap_or(0.0)
    };
    RankCertificate {
        full_rank: smallest > tol.rank_rel * largest && largest > 0.0,
        smallest_singular_value: smallest,
        largest_singular_value: largest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::prony::{hankel, local_moments, recover_one_neighbourhood};
    use crate::spectral::{eigendecompose, synthesize};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn vandermonde_rows(nodes: &[f64], cols: usize) -> DMatrix<f64> {
        DMatrix::from_fn(nodes.len(), cols, |i, k| nodes[i].powi(k as i32))
    }

    #[test]
    fn plan_validation() {
        assert!(matches!(SnapshotPlan::new(vec![]), Err(Error::EmptyPlan)));
        assert!(matches!(
            SnapshotPlan::new(vec![(1, 0)]),
            Err(Error::RadiusZero(_))
        ));
        assert!(matches!(
            SnapshotPlan::new(vec![(1, 1), (1, 2)]),
            Err(Error::DuplicateAnchor(_))
        ));
        let plan = SnapshotPlan::new(vec![(1, 3), (2, 2), (3, 1)]).unwrap();
        assert_eq!(plan.total_radius(), 6);
    }

    #[test]
    fn path_sampling_set_from_the_six_sparse_plan() {
        let g = graph::path(12).unwrap();
        let plan = SnapshotPlan::new(vec![(1, 3), (2, 2), (3, 1)]).unwrap();
        let w = required_samples(&g, &plan, 6).unwrap();
        assert_eq!(w, (1..=9).collect::<Vec<_>>());
        // fewer samples than the 2s = 12 any decoder would need
        assert!(w.len() < 12);
    }

    #[test]
    fn single_anchor_needs_the_one_neighbourhood_set() {
        let g = graph::circle(11).unwrap();
        let s = 2;
        let plan = SnapshotPlan::new(vec![(4, s)]).unwrap();
        assert_eq!(
            required_samples(&g, &plan, s).unwrap(),
            g.neighbourhood(4, 2 * s - 1).unwrap()
        );
    }

    #[test]
    fn corollary_plan_uses_s_neighbourhoods() {
        let g = graph::path(15).unwrap();
        let s = 3;
        let plan = SnapshotPlan::new(vec![(2, 1), (7, 1), (11, 1)]).unwrap();
        let mut expected = BTreeSet::new();
        for v in [2, 7, 11] {
            expected.extend(g.neighbourhood(v, s).unwrap());
        }
        assert_eq!(
            required_samples(&g, &plan, s).unwrap(),
            expected.into_iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn single_anchor_stack_is_the_plain_hankel() {
        let g = graph::path(20).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        let sig = SparseSpectralSignal::new(vec![3, 15], vec![1.0, 0.2]).unwrap();
        let f = synthesize(&basis, &sig).unwrap();
        let s = 2;
        let plan = SnapshotPlan::new(vec![(1, s)]).unwrap();
        let samples = f.samples_on(&required_samples(&g, &plan, s).unwrap());
        let moments = anchor_moments(&g, &plan, s, &samples).unwrap();
        let stacked = stacked_hankel(&moments, &plan, s).unwrap();
        let plain = hankel(&local_moments(&g, &samples, 1, 2 * s - 1).unwrap(), s).unwrap();
        assert_eq!(stacked, plain);
    }

    #[test]
    fn stacked_hankel_factorizes_as_b_times_c() {
        let g = graph::circle(12).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        let sig = SparseSpectralSignal::new(vec![1, 12], vec![1.2, -0.4]).unwrap();
        let f = synthesize(&basis, &sig).unwrap();
        let s = 2;
        let plan = SnapshotPlan::new(vec![(3, 2), (8, 1)]).unwrap();
        let samples = f.samples_on(&required_samples(&g, &plan, s).unwrap());
        let moments = anchor_moments(&g, &plan, s, &samples).unwrap();
        let stacked = stacked_hankel(&moments, &plan, s).unwrap();

        let b = coefficient_matrix_b(&basis, &sig, &plan).unwrap();
        let lambdas: Vec<f64> = sig.support().iter().map(|&j| basis.eigenvalue(j)).collect();
        let c = vandermonde_rows(&lambdas, s + 1);
        let product = b * c;
        for (x, y) in stacked.iter().zip(product.iter()) {
            assert!((x - y).abs() < 1e-10, "{x} vs {y}");
        }
    }

    fn umbrella_counterexample() -> (graph::Graph, SpectralBasis, SparseSpectralSignal, SnapshotPlan)
    {
        let n = 8;
        let g = graph::umbrella(n).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        // any support works for the singularity; pick indices whose
        // eigenvectors do not vanish on the pendant so B has rank exactly 2
        let support: Vec<usize> = (1..=n)
            .filter(|&j| basis.value(j, n).abs() > 1e-3)
            .take(3)
            .collect();
        assert_eq!(support.len(), 3);
        let sig = SparseSpectralSignal::new(support, vec![1.0, 1.0, 1.0]).unwrap();
        let plan = SnapshotPlan::new(vec![(n, 2), (n - 1, 1)]).unwrap();
        (g, basis, sig, plan)
    }

    #[test]
    fn umbrella_coefficient_matrix_is_singular() {
        let (_, basis, sig, plan) = umbrella_counterexample();
        let b = coefficient_matrix_b(&basis, &sig, &plan).unwrap();
        // lambda_j alpha_{n,j} = alpha_{n,j} - alpha_{n-1,j}: the middle row
        // is the difference of the outer ones
        for col in 0..3 {
            assert!((b[(1, col)] - (b[(0, col)] - b[(2, col)])).abs() < 1e-10);
        }
        let cert = rank_certificate(&b, &tol());
        assert!(!cert.full_rank);
        assert!(cert.smallest_singular_value < 1e-10 * cert.largest_singular_value);
    }

    #[test]
    fn umbrella_recovery_reports_rank_deficiency() {
        let (g, basis, sig, plan) = umbrella_counterexample();
        let f = synthesize(&basis, &sig).unwrap();
        let s = 3;
        let samples = f.samples_on(&required_samples(&g, &plan, s).unwrap());
        let moments = anchor_moments(&g, &plan, s, &samples).unwrap();
        let stacked = stacked_hankel(&moments, &plan, s).unwrap();
        let svals = linalg::singular_values(&stacked);
        let rank = svals.iter().filter(|&&x| x > 1e-10 * svals[0]).count();
        assert_eq!(rank, 2, "kernel of the stacked matrix is 2-dimensional");

        match recover_multi(&g, &plan, s, &samples, &tol()) {
            Err(Error::RankDeficient { kernel_dim, .. }) => assert_eq!(kernel_dim, 2),
            other => panic!("expected rank deficiency, got {other:?}"),
        }
    }

    #[test]
    fn corollary_shape_recovers_the_path_example() {
        let g = graph::path(20).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        let sig = SparseSpectralSignal::new(vec![3, 15], vec![1.0, 0.2]).unwrap();
        let f = synthesize(&basis, &sig).unwrap();
        let s = 2;
        let plan = SnapshotPlan::new(vec![(1, 1), (5, 1)]).unwrap();
        // U_{W,S} must be regular for the corollary to apply
        let b = coefficient_matrix_b(&basis, &sig, &plan).unwrap();
        assert!(rank_certificate(&b, &tol()).full_rank);

        let samples = f.samples_on(&required_samples(&g, &plan, s).unwrap());
        let result = recover_multi(&g, &plan, s, &samples, &tol()).unwrap();
        assert!((result.eigenvalues[0] - basis.eigenvalue(3)).abs() < 1e-8);
        assert!((result.eigenvalues[1] - basis.eigenvalue(15)).abs() < 1e-8);
        assert!(result.components.is_empty());
    }

    #[test]
    fn single_anchor_plan_reproduces_algorithm_one_exactly() {
        let g = graph::path(20).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        let sig = SparseSpectralSignal::new(vec![3, 15], vec![1.0, 0.2]).unwrap();
        let f = synthesize(&basis, &sig).unwrap();
        let s = 2;
        let samples = f.samples_on(&g.neighbourhood(1, 2 * s - 1).unwrap());
        let one = recover_one_neighbourhood(&g, 1, s, &samples, &tol()).unwrap();
        let plan = SnapshotPlan::new(vec![(1, s)]).unwrap();
        let multi = recover_multi(&g, &plan, s, &samples, &tol()).unwrap();
        // same code path, bit-identical eigenvalues
        assert_eq!(one.eigenvalues, multi.eigenvalues);
    }

    #[test]
    fn single_anchor_b_is_vandermonde_times_diagonal() {
        let g = graph::circle(9).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        let sig = SparseSpectralSignal::new(vec![1, 4], vec![0.9, 1.1]).unwrap();
        let plan = SnapshotPlan::new(vec![(2, 2)]).unwrap();
        let b = coefficient_matrix_b(&basis, &sig, &plan).unwrap();
        let lambdas: Vec<f64> = sig.support().iter().map(|&j| basis.eigenvalue(j)).collect();
        let vand = vandermonde_rows(&lambdas, 2).transpose();
        let alphas: Vec<f64> = sig
            .support()
            .iter()
            .zip(sig.coefficients())
            .map(|(&j, &beta)| beta * basis.value(j, 2))
            .collect();
        for row in 0..2 {
            for col in 0..2 {
                assert!((b[(row, col)] - vand[(row, col)] * alphas[col]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn khatri_rao_identity_for_equal_radii() {
        let g = graph::erdos_renyi(10, 0.5, 21).unwrap();
        let basis = eigendecompose(&g.laplacian().unwrap(), &tol()).unwrap();
        let sig = SparseSpectralSignal::new(vec![2, 5, 9], vec![1.0, -0.6, 0.4]).unwrap();
        let plan = SnapshotPlan::new(vec![(1, 2), (6, 2)]).unwrap();
        let b = coefficient_matrix_b(&basis, &sig, &plan).unwrap();

        let lambdas: Vec<f64> = sig.support().iter().map(|&j| basis.eigenvalue(j)).collect();
        let b_tilde = DMatrix::from_fn(2, 3, |i, col| {
            let v = [1usize, 6][i];
            sig.coefficients()[col] * basis.value(sig.support()[col], v)
        });
        let lambda_tilde = DMatrix::from_fn(2, 3, |k, col| lambdas[col].powi(k as i32));

        let lhs = b.transpose() * &b;
        let gram_b = b_tilde.transpose() * &b_tilde;
        let gram_l = lambda_tilde.transpose() * &lambda_tilde;
        for i in 0..3 {
            for j in 0..3 {
                assert!((lhs[(i, j)] - gram_b[(i, j)] * gram_l[(i, j)]).abs() < 1e-10);
            }
        }

        // rank bound: rank(B) <= rank(B~) * rank(L~)
        let rank = |m: &DMatrix<f64>| {
            let sv = linalg::singular_values(m);
            sv.iter().filter(|&&x| x > 1e-10 * sv[0].max(1e-300)).count()
        };
        assert!(rank(&b) <= rank(&b_tilde) * rank(&lambda_tilde));
    }

    #[test]
    fn rank_certificate_cases() {
        use rand::{Rng, SeedableRng};
        let t = tol();
        assert!(rank_certificate(&DMatrix::identity(3, 3), &t).full_rank);
        // seeded random 5x3: full column rank with probability one
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let m = DMatrix::from_fn(5, 3, |_, _| rng.gen_range(-1.0..1.0));
        assert!(rank_certificate(&m, &t).full_rank);
        // wide matrices can never have full column rank
        let wide = DMatrix::from_element(2, 3, 1.0);
        let cert = rank_certificate(&wide, &t);
        assert!(!cert.full_rank);
        assert_eq!(cert.smallest_singular_value, 0.0);
    }

    #[test]
    fn vandermonde_kernel_is_one_dimensional_with_the_right_roots() {
        let lambdas = [0.3, 1.1, 2.9];
        let c = vandermonde_rows(&lambdas, 4); // 3x4
        let (_, kernel) = hankel_kernel(&c, &tol());
        assert_eq!(kernel.len(), 1);
        let monic = monic_from_kernel(&kernel[0], &tol()).unwrap();
        let roots = polynomial_roots(&monic, &tol()).unwrap();
        for (got, want) in roots.roots.iter().zip(lambdas) {
            assert!((got - want).abs() < 1e-9);
        }
    }
}
