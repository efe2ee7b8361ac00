//! Error types shared across the crate.

use std::fmt;

use thiserror::Error;

/// Stage of a recovery pipeline an error was raised in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Moments,
    Hankel,
    KernelPolynomial,
    Roots,
    Clustering,
    Components,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Moments => "moments",
            Stage::Hankel => "hankel",
            Stage::KernelPolynomial => "kernel-polynomial",
            Stage::Roots => "roots",
            Stage::Clustering => "clustering",
            Stage::Components => "components",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    // -- construction and input validation -----------------------------------
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{kind} graph needs at least {min} vertices, got {n}")]
    GraphTooSmall { kind: &'static str, min: usize, n: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("no connected graph found after {0} attempts")]
    ConnectivityRetries(usize),
    #[error("signal has {got} values but the graph has {expected} vertices")]
    SignalLength { got: usize, expected: usize },
    #[error("support index {index} out of range 1..={n}")]
    SupportOutOfRange { index: usize, n: usize },
    #[error("duplicate support index {0}")]
    DuplicateSupport(usize),
    #[error("support has {support} indices but {coefficients} coefficients")]
    SupportLengthMismatch { support: usize, coefficients: usize },
    #[error("coefficient for support index {0} is zero")]
    ZeroCoefficient(usize),
    #[error("snapshot plan has no anchors")]
    EmptyPlan,
    #[error("snapshot radius must be at least 1 (anchor {0})")]
    RadiusZero(String),
    #[error("duplicate anchor {0}")]
    DuplicateAnchor(String),
    #[error("plan radii sum to {sum} but sparsity is {s}")]
    PlanSparsityMismatch { sum: usize, s: usize },
    #[error("sparsity must be at least 1")]
    ZeroSparsity,
    #[error("{what} exceeds the brute-force guard: {actual} > {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("sample set has {w} vertices; colliding signals need at most {max}")]
    SampleSetTooLarge { w: usize, max: usize },
    #[error("sample set is empty")]
    EmptySampleSet,
    #[error("sparsity {s} exceeds n/2 = {max}")]
    SparsityTooLarge { s: usize, max: usize },
    #[error("facet list is empty")]
    EmptyFacets,
    #[error("facet {0} has no vertices")]
    EmptyFacet(usize),
    #[error("not a face of the complex: {0}")]
    NotAFace(String),
    #[error("dimension {k} out of range 0..={max}")]
    DimensionOutOfRange { k: usize, max: usize },
    #[error("chain has {got} values but the complex has {expected} faces in dimension {k}")]
    ChainLength { got: usize, expected: usize, k: usize },

    // -- numerical / model violations -----------------------------------------
    #[error("matrix is not symmetric (max asymmetry {0:.3e})")]
    NotSymmetric(f64),
    #[error("eigensolver did not converge: {0}")]
    Convergence(String),
    #[error("dense materialization limited to {limit} vertices, got {n}")]
    TooLargeForDense { n: usize, limit: usize },
    #[error("missing samples at {0:?}")]
    MissingSamples(Vec<String>),
    #[error("need at least {needed} moments, got {got}")]
    InsufficientMoments { needed: usize, got: usize },
    #[error("Hankel matrix has no numerical kernel (smallest singular value {0:.3e})")]
    NoKernel(f64),
    #[error("kernel vector's monic coordinate is too small ({0:.3e})")]
    MonicCoordinate(f64),
    #[error("polynomial has degree zero")]
    EmptyPolynomial,
    #[error("companion matrix produced a genuinely complex root {re:.6e} + {im:.6e}i")]
    ComplexRoot { re: f64, im: f64 },
    #[error("eigenvalues {a} and {b} collide below the clustering tolerance")]
    EigenvalueCollision { a: f64, b: f64 },
    #[error("stacked Hankel kernel has dimension {kernel_dim}, expected 1")]
    RankDeficient {
        kernel_dim: usize,
        singular_values: Vec<f64>,
    },
    #[error("no basis eigenvalue within {tol:.3e} of recovered value {eigenvalue}")]
    NoSupportMatch { eigenvalue: f64, tol: f64 },
    #[error("no support of size at most {s_max} interpolates the samples")]
    NoSupportFits { s_max: usize },
    #[error("no disjoint support produced a collision with nonzero coefficients")]
    NoCollision,
    #[error("operator couples faces {a} and {b} at distance > 1")]
    LocalityViolation { a: String, b: String },
    #[error("recovered eigenvalue {0:.3e} is numerically zero; kernel components are out of reach")]
    ZeroEigenvalue(f64),
    #[error("unexplained residual {residual:.3e}: the signal has a component in the kernel")]
    HarmonicComponent {
        residual: f64,
        up_eigenvalues: Vec<f64>,
        dn_eigenvalues: Vec<f64>,
    },
    #[error("both split branches failed: up: {up}; dn: {dn}")]
    SplitFailed { up: Box<Error>, dn: Box<Error> },

    // -- wrappers --------------------------------------------------------------
    #[error("{stage} stage: {source}")]
    Pipeline {
        stage: Stage,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wrap an error with the pipeline stage it was raised in.
    pub fn at_stage(self, stage: Stage) -> Self {
        Error::Pipeline {
            stage,
            source: Box::new(self),
        }
    }

    /// Short machine-readable identifier for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGraph => "empty-graph",
            Error::SelfLoop(_) => "self-loop",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::GraphTooSmall { .. } => "graph-too-small",
            Error::InvalidProbability(_) => "invalid-probability",
            Error::ConnectivityRetries(_) => "connectivity-retries",
            Error::SignalLength { .. } => "signal-length",
            Error::SupportOutOfRange { .. } => "support-out-of-range",
            Error::DuplicateSupport(_) => "duplicate-support",
            Error::SupportLengthMismatch { .. } => "support-length-mismatch",
            Error::ZeroCoefficient(_) => "zero-coefficient",
            Error::EmptyPlan => "empty-plan",
            Error::RadiusZero(_) => "radius-zero",
            Error::DuplicateAnchor(_) => "duplicate-anchor",
            Error::PlanSparsityMismatch { .. } => "plan-sparsity-mismatch",
            Error::ZeroSparsity => "zero-sparsity",
            Error::SizeGuard { .. } => "size-guard",
            Error::NotSquare { .. } => "not-square",
            Error::SampleSetTooLarge { .. } => "sample-set-too-large",
            Error::EmptySampleSet => "empty-sample-set",
            Error::SparsityTooLarge { .. } => "sparsity-too-large",
            Error::EmptyFacets => "empty-facets",
            Error::EmptyFacet(_) => "empty-facet",
            Error::NotAFace(_) => "not-a-face",
            Error::DimensionOutOfRange { .. } => "dimension-out-of-range",
            Error::ChainLength { .. } => "chain-length",
            Error::NotSymmetric(_) => "not-symmetric",
            Error::Convergence(_) => "convergence",
            Error::TooLargeForDense { .. } => "too-large-for-dense",
            Error::MissingSamples(_) => "missing-samples",
            Error::InsufficientMoments { .. } => "insufficient-moments",
            Error::NoKernel(_) => "no-kernel",
            Error::MonicCoordinate(_) => "monic-coordinate",
            Error::EmptyPolynomial => "empty-polynomial",
            Error::ComplexRoot { .. } => "complex-root",
            Error::EigenvalueCollision { .. } => "eigenvalue-collision",
            Error::RankDeficient { .. } => "rank-deficient",
            Error::NoSupportMatch { .. } => "no-support-match",
            Error::NoSupportFits { .. } => "no-support-fits",
            Error::NoCollision => "no-collision",
            Error::LocalityViolation { .. } => "locality-violation",
            Error::ZeroEigenvalue(_) => "zero-eigenvalue",
            Error::HarmonicComponent { .. } => "harmonic-component",
            Error::SplitFailed { .. } => "split-failed",
            Error::Pipeline { source, .. } => source.kind(),
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }

    /// Process exit code: 1 for model violations discovered by the numerics,
    /// 2 for input and precondition errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotSymmetric(_)
            | Error::Convergence(_)
            | Error::NoKernel(_)
            | Error::MonicCoordinate(_)
            | Error::ComplexRoot { .. }
            | Error::EigenvalueCollision { .. }
            | Error::RankDeficient { .. }
            | Error::NoSupportMatch { .. }
            | Error::NoSupportFits { .. }
            | Error::NoCollision
            | Error::LocalityViolation { .. }
            | Error::ZeroEigenvalue(_)
            | Error::HarmonicComponent { .. }
            | Error::SplitFailed { .. } => 1,
            Error::Pipeline { source, .. } => source.exit_code(),
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
