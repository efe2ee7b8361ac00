//! Sampling-theoretic machinery: brute-force l0 decoding, constructive
//! non-uniqueness below 2s samples, the Chebotarev minor property and
//! exhaustive uniqueness certification.
//!
//! Everything here is deliberately exhaustive (the properties are
//! for-all statements), so hard input-size guards replace unbounded
//! runtimes.

use itertools::Itertools;
use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::{GraphSignal, Vertex};
use crate::linalg;
use crate::spectral::{synthesize, SparseSpectralSignal, SpectralBasis};
use crate::tolerance::Tolerances;

/// Largest sparsity bound accepted by the l0 decoder.
pub const L0_MAX_SPARSITY: usize = 3;
/// Cap on the number of candidate supports the decoder may enumerate.
pub const L0_SUPPORT_BUDGET: usize = 1_000_000;
/// Largest matrix dimension accepted by the minor enumeration.
pub const CHEBOTAREV_MAX_DIM: usize = 8;
/// Largest basis dimension accepted by the uniqueness enumeration.
pub const UNIQUENESS_MAX_DIM: usize = 14;
/// Largest sparsity accepted by the uniqueness enumeration.
pub const UNIQUENESS_MAX_SPARSITY: usize = 2;

/// Outcome of the combinatorial l0 search.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodeResult {
    /// Smallest support (1-based indices, ascending) that interpolates the
    /// samples; ties on size resolved lexicographically.
    pub support: Vec<usize>,
    pub coefficients: Vec<f64>,
    pub residual: f64,
    /// Other supports of the same size that also fit: a nonempty list
    /// witnesses non-uniqueness.
    pub ambiguous_supports: Vec<Vec<usize>>,
}

/// Search the smallest support that interpolates the samples.
///
/// `u_w` holds the basis rows restricted to the sample set (one row per
/// sample); the candidate support's columns are solved against the samples
/// in the least-squares sense and accepted when the residual is below
/// `l0_residual` times the sample norm.
pub fn l0_decode(
    u_w: &DMatrix<f64>,
    samples: &[f64],
    s_max: usize,
    tol: &Tolerances,
) -> Result<DecodeResult> {
    let rows = u_w.nrows();
    let n = u_w.ncols();
    if rows == 0 {
        return Err(Error::EmptySampleSet);
    }
    if samples.len() != rows {
        return Err(Error::SignalLength {
            got: samples.len(),
            expected: rows,
        });
    }
    if s_max > L0_MAX_SPARSITY {
        return Err(Error::SizeGuard {
            what: "l0 sparsity bound",
            actual: s_max,
            limit: L0_MAX_SPARSITY,
        });
    }
    let mut budget: usize = 0;
    for s in 1..=s_max {
        budget = budget.saturating_add(binomial(n, s));
    }
    if budget > L0_SUPPORT_BUDGET {
        return Err(Error::SizeGuard {
            what: "l0 support enumeration",
            actual: budget,
            limit: L0_SUPPORT_BUDGET,
        });
    }

    let b = DVector::from_vec(samples.to_vec());
    let norm = b.norm();
    if norm == 0.0 {
        return Ok(DecodeResult {
            support: Vec::new(),
            coefficients: Vec::new(),
            residual: 0.0,
            ambiguous_supports: Vec::new(),
        });
    }

    for s in 1..=s_max {
        let mut fits: Vec<(Vec<usize>, Vec<f64>, f64)> = Vec::new();
        for support in (1..=n).combinations(s) {
            let a = DMatrix::from_fn(rows, s, |i, j| u_w[(i, support[j] - 1)]);
            let x = linalg::least_squares(&a, &b, tol.rank_rel);
            let residual = (&a * &x - &b).norm();
            if residual <= tol.l0_residual * norm {
                fits.push((support, x.iter().copied().collect(), residual));
            }
        }
        if let Some((support, coefficients, residual)) = fits.first().cloned() {
            let ambiguous_supports = fits.iter().skip(1).map(|(s, _, _)| s.clone()).collect();
            return Ok(DecodeResult {
                support,
                coefficients,
                residual,
                ambiguous_supports,
            });
        }
    }
    Err(Error::NoSupportFits { s_max })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut result: usize = 1;
    for i in 0..k {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}

/// Two distinct sparse signals that agree on the sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct CollisionPair {
    pub f: SparseSpectralSignal,
    pub g: SparseSpectralSignal,
    pub f_signal: GraphSignal,
    pub g_signal: GraphSignal,
    /// `max_{w in W} |f(w) - g(w)|`.
    pub max_sample_difference: f64,
}

/// Construct two different s-sparse signals with identical samples on `w`.
///
/// Works whenever `|W| <= 2s - 1`: the restricted matrix over the union of
/// the given support and a disjoint candidate support has a nontrivial
/// kernel, whose vector splits into the two coefficient sets. Candidates
/// are tried in lexicographic order, skipping splits with a vanishing
/// coefficient, so the output is deterministic.
pub fn colliding_signals(
    basis: &SpectralBasis,
    w: &[Vertex],
    s_f: &[usize],
    tol: &Tolerances,
) -> Result<CollisionPair> {
    let n = basis.dim();
    let s = s_f.len();
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    if s > n / 2 {
        return Err(Error::SparsityTooLarge { s, max: n / 2 });
    }
    let mut support = s_f.to_vec();
    support.sort_unstable();
    support.dedup();
    if support.len() != s {
        return Err(Error::DuplicateSupport(s_f[0]));
    }
    for &j in &support {
        if j < 1 || j > n {
            return Err(Error::SupportOutOfRange { index: j, n });
        }
    }
    let mut sample_set = w.to_vec();
    sample_set.sort_unstable();
    sample_set.dedup();
    for &v in &sample_set {
        if v < 1 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if sample_set.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    if sample_set.len() > 2 * s - 1 {
        return Err(Error::SampleSetTooLarge {
            w: sample_set.len(),
            max: 2 * s - 1,
        });
    }

    let complement: Vec<usize> = (1..=n).filter(|j| !support.contains(j)).collect();
    for s_g in complement.into_iter().combinations(s) {
        let mut columns = support.clone();
        columns.extend(&s_g);
        let restricted = basis.restrict(&sample_set, &columns);
        let (_, kernel) = linalg::kernel(&restricted, tol.rank_rel);
        let Some(vector) = kernel.first() else {
            continue;
        };
        let mut v = vector.clone();
        let scale = v.amax();
        if scale == 0.0 {
            continue;
        }
        v /= scale;
        if let Some(first) = v.iter().find(|x| x.abs() > tol.sign_convention) {
            if *first < 0.0 {
                v.neg_mut();
            }
        }
        let f_coeffs: Vec<f64> = v.iter().take(s).copied().collect();
        let g_coeffs: Vec<f64> = v.iter().skip(s).map(|x| -x).collect();
        if f_coeffs
            .iter()
            .chain(&g_coeffs)
            .any(|c| c.abs() <= tol.collision_coefficient)
        {
            continue;
        }
        let f = SparseSpectralSignal::new(support.clone(), f_coeffs)?;
        let g = SparseSpectralSignal::new(s_g.clone(), g_coeffs)?;
        let f_signal = synthesize(basis, &f)?;
        let g_signal = synthesize(basis, &g)?;
        let max_sample_difference = sample_set
            .iter()
            .map(|&v| (f_signal.value(v) - g_signal.value(v)).abs())
            .fold(0.0_f64, f64::max);
        if max_sample_difference > tol.collision_agreement {
            continue;
        }
        return Ok(CollisionPair {
            f,
            g,
            f_signal,
            g_signal,
            max_sample_difference,
        });
    }
    Err(Error::NoCollision)
}

/// A vanishing minor: 0-based row and column subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Verdict of the exhaustive minor enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebotarevCheck {
    pub chebotarev: bool,
    /// The first vanishing minor (sizes ascending, subsets lexicographic).
    pub witness: Option<MinorWitness>,
}

/// Decide whether every square minor of `m` is nonvanishing.
///
/// A minor counts as vanishing when its determinant modulus is at most
/// `minor_rel` times the product of the row norms of the submatrix (the
/// Hadamard bound), which guards against false negatives on badly scaled
/// inputs. Enumeration is exact and exhaustive; `n <= 8` is enforced.
pub fn is_chebotarev(m: &DMatrix<Complex<f64>>, tol: &Tolerances) -> Result<ChebotarevCheck> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::NotSquare {
            rows: n,
            cols: m.ncols(),
        });
    }
    if n > CHEBOTAREV_MAX_DIM {
        return Err(Error::SizeGuard {
            what: "minor enumeration dimension",
            actual: n,
            limit: CHEBOTAREV_MAX_DIM,
        });
    }
    for size in 1..=n {
        for rows in (0..n).combinations(size) {
            for cols in (0..n).combinations(size) {
                let sub = DMatrix::from_fn(size, size, |i, j| m[(rows[i], cols[j])]);
                let scale: f64 = (0..size).map(|i| sub.row(i).norm()).product();
                let det = sub.determinant().norm();
                if det <= tol.minor_rel * scale {
                    return Ok(ChebotarevCheck {
                        chebotarev: false,
                        witness: Some(MinorWitness { rows, cols }),
                    });
                }
            }
        }
    }
    Ok(ChebotarevCheck {
        chebotarev: true,
        witness: None,
    })
}

/// Real-matrix convenience wrapper around [`is_chebotarev`].
pub fn is_chebotarev_real(m: &DMatrix<f64>, tol: &Tolerances) -> Result<ChebotarevCheck> {
    let complex = m.map(|x| Complex::new(x, 0.0));
    is_chebotarev(&complex, tol)
}

/// Square Vandermonde matrix `V[i][j] = nodes[i]^j`.
pub fn vandermonde(nodes: &[f64]) -> DMatrix<f64> {
    let n = nodes.len();
    DMatrix::from_fn(n, n, |i, j| nodes[i].powi(j as i32))
}

/// Why a sample set fails to determine s-sparse signals uniquely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniquenessFailure {
    /// Fewer than 2s samples: the restricted matrix is structurally wide.
    TooFewSamples { w: usize, needed: usize },
    /// A size-2s column set (0-based for matrix inputs, 1-based for basis
    /// inputs) on which the restricted matrix loses column rank.
    RankDeficientSupport(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessCheck {
    pub unique: bool,
    pub failure: Option<UniquenessFailure>,
}

/// Exhaustively test whether samples at `rows` (0-based) determine every
/// s-sparse signal in the column basis of `u`: every `2s`-column restriction
/// must keep full column rank.
pub fn uniqueness_check_matrix(
    u: &DMatrix<Complex<f64>>,
    rows: &[usize],
    s: usize,
    tol: &Tolerances,
) -> Result<UniquenessCheck> {
    if s == 0 {
        return Err(Error::ZeroSparsity);
    }
    let n = u.ncols();
    let mut row_set = rows.to_vec();
    row_set.sort_unstable();
    row_set.dedup();
    for &r in &row_set {
        if r >= u.nrows() {
            return Err(Error::VertexOutOfRange {
                vertex: r + 1,
                n: u.nrows(),
            });
        }
    }
    // Structural failure comes first: this needs no enumeration, so the
    // size guards below do not apply to it.
    if row_set.len() < 2 * s {
        return Ok(UniquenessCheck {
            unique: false,
            failure: Some(UniquenessFailure::TooFewSamples {
                w: row_set.len(),
                needed: 2 * s,
            }),
        });
    }
    if n > UNIQUENESS_MAX_DIM {
        return Err(Error::SizeGuard {
            what: "uniqueness enumeration dimension",
            actual: n,
            limit: UNIQUENESS_MAX_DIM,
        });
    }
    if s > UNIQUENESS_MAX_SPARSITY {
        return Err(Error::SizeGuard {
            what: "uniqueness sparsity",
            actual: s,
            limit: UNIQUENESS_MAX_SPARSITY,
        });
    }
    for cols in (0..n).combinations(2 * s) {
        let sub = DMatrix::from_fn(row_set.len(), 2 * s, |i, j| u[(row_set[i], cols[j])]);
        let svals = linalg::singular_values_complex(&sub);
        let largest = svals.first().copied().unwrap_or(0.0);
        let smallest = svals.last().copied().unwrap_or(0.0);
        if smallest <= tol.rank_rel * largest || largest == 0.0 {
            return Ok(UniquenessCheck {
                unique: false,
                failure: Some(UniquenessFailure::RankDeficientSupport(cols)),
            });
        }
    }
    Ok(UniquenessCheck {
        unique: true,
        failure: None,
    })
}

/// [`uniqueness_check_matrix`] against a real spectral basis; `w` holds
/// 1-based vertex labels and any failure witness carries 1-based indices.
pub fn uniqueness_check(
    basis: &SpectralBasis,
    w: &[Vertex],
    s: usize,
    tol: &Tolerances,
) -> Result<UniquenessCheck> {
    let u = basis.matrix().map(|x| Complex::new(x, 0.0));
    let rows: Vec<usize> = w
        .iter()
        .map(|&v| {
            if v < 1 || v > basis.dim() {
                Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: basis.dim(),
                })
            } else {
                Ok(v - 1)
            }
        })
        .collect::<Result<_>>()?;
    let mut check = uniqueness_check_matrix(&u, &rows, s, tol)?;
    if let Some(UniquenessFailure::RankDeficientSupport(cols)) = &mut check.failure {
        for c in cols.iter_mut() {
            *c += 1;
        }
    }
    Ok(check)
}
