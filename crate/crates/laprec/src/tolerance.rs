//! Central tolerance configuration.
//!
//! Every rank decision, root test and matching threshold in the crate reads
//! from one [`Tolerances`] value, so a single scale factor (the CLI's
//! `--tol-scale`) rescales the whole pipeline consistently.

/// Numerical tolerances shared by all operations.
///
/// Fields marked *relative* are multiplied by a problem-dependent scale
/// (a matrix norm, the largest singular value, ...) at the point of use.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Jacobi sweep target: off-diagonal Frobenius norm below this times the
    /// input Frobenius norm stops the iteration.
    pub jacobi_offdiagonal: f64,
    /// Maximum entrywise asymmetry accepted by the eigensolver.
    pub symmetry: f64,
    /// Relative residual allowed on eigenpairs and on orthonormality.
    pub eigen_residual: f64,
    /// Entries at or below this magnitude are ignored when fixing the sign
    /// of an eigenvector.
    pub sign_convention: f64,
    /// Relative singular-value threshold for numerical rank and kernels.
    pub rank_rel: f64,
    /// A companion-matrix root is accepted as real when
    /// `|Im| <= root_imag * (1 + |Re|)`.
    pub root_imag: f64,
    /// Roots closer than `root_cluster * (1 + max|root|)` are merged.
    pub root_cluster: f64,
    /// Minimum relative magnitude of the kernel vector's monic coordinate.
    pub monic_coordinate: f64,
    /// Relative least-squares residual accepted by the l0 decoder.
    pub l0_residual: f64,
    /// A minor is considered vanishing when its determinant modulus is at or
    /// below this times the product of row norms of the submatrix.
    pub minor_rel: f64,
    /// Relative eigenvalue threshold separating the numerical kernel
    /// (Betti numbers, harmonic parts) from nonzero spectrum.
    pub null_eigenvalue: f64,
    /// Absolute agreement required of colliding signals on the sample set.
    pub collision_agreement: f64,
    /// Kernel-split coefficients below this (relative to the largest entry)
    /// disqualify a collision candidate.
    pub collision_coefficient: f64,
    /// Default eigenvalue window for matching recovered values to a basis.
    pub support_match: f64,
    /// Relative reconstruction residual above which a recovery is treated as
    /// inconsistent (split negotiation, harmonic detection).
    pub harmonic_residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            jacobi_offdiagonal: 1e-12,
            symmetry: 1e-12,
            eigen_residual: 1e-10,
            sign_convention: 1e-8,
            rank_rel: 1e-10,
            root_imag: 1e-8,
            root_cluster: 1e-8,
            monic_coordinate: 1e-8,
            l0_residual: 1e-9,
            minor_rel: 1e-10,
            null_eigenvalue: 1e-9,
            collision_agreement: 1e-10,
            collision_coefficient: 1e-10,
            support_match: 1e-6,
            harmonic_residual: 1e-8,
        }
    }
}

impl Tolerances {
    /// Multiply every tolerance by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            jacobi_offdiagonal: self.jacobi_offdiagonal * factor,
            symmetry: self.symmetry * factor,
            eigen_residual: self.eigen_residual * factor,
            sign_convention: self.sign_convention * factor,
            rank_rel: self.rank_rel * factor,
            root_imag: self.root_imag * factor,
            root_cluster: self.root_cluster * factor,
            monic_coordinate: self.monic_coordinate * factor,
            l0_residual: self.l0_residual * factor,
            minor_rel: self.minor_rel * factor,
            null_eigenvalue: self.null_eigenvalue * factor,
            collision_agreement: self.collision_agreement * factor,
            collision_coefficient: self.collision_coefficient * factor,
            support_match: self.support_match * factor,
            harmonic_residual: self.harmonic_residual * factor,
        }
    }
}
