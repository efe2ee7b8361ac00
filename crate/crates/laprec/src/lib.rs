//! # laprec
//!
//! Recovery of frequency-sparse signals on graphs and simplicial complexes
//! from samples in small neighbourhoods.
//!
//! A signal `f = sum_{j in S} beta_j u_j` built from few Laplacian
//! eigenvectors is determined by its values near one vertex: the moments
//! `g(k) = (L^k f)(v)` form an exponential sum in the active eigenvalues,
//! so a Hankel kernel vector and a companion matrix recover the
//! eigenvalues, and shifted-operator products recover the local
//! eigencomponents, all without ever computing the eigendecomposition.
//! The same subspace machinery runs on several smaller neighbourhoods
//! (stacked Hankel matrices) and on the up/down Hodge Laplacians of a
//! simplicial complex.
//!
//! ## Modules
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | graphs, Laplacians, distances, neighbourhoods, generators |
//! | [`spectral`] | Jacobi eigendecomposition, sparse synthesis, DFT matrix |
//! | [`prony`] | one-neighbourhood recovery pipeline |
//! | [`multi`] | stacked-Hankel recovery from several neighbourhoods |
//! | [`sampling`] | l0 decoding, collisions, Chebotarev minors, uniqueness |
//! | [`simplicial`] | Hodge Laplacians and recovery on k-faces |
//! | [`io`] | JSON file formats |
//! | [`tolerance`] | the central tolerance configuration |
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p laprec --example path_recovery        # end-to-end worked example
//! cargo run -p laprec --example one_sparse           # one ring, one eigenvalue
//! cargo run -p laprec --example multi_snapshot       # several small neighbourhoods
//! cargo run -p laprec --example umbrella_rank        # a plan that provably fails
//! cargo run -p laprec --example l0_vs_prony          # brute force agrees with subspace
//! cargo run -p laprec --example collide_below_2s     # non-uniqueness under 2s samples
//! cargo run -p laprec --example chebotarev           # DFT minors, prime vs composite
//! cargo run -p laprec --example circle_multiplicity  # multiple eigenvalues
//! cargo run -p laprec --example hodge_split          # up/down recovery on a complex
//! ```
//!
//! The `laprec` binary exposes the same functionality as subcommands
//! (`gen`, `synth`, `recover`, `decode`, `collide`, `chebotarev`,
//! `uniqueness`, `repro-example`); see the repository README.
//!
//! ## Quick start
//!
//! ```rust
//! use laprec::graph;
//! use laprec::prony::recover_one_neighbourhood;
//! use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
//! use laprec::tolerance::Tolerances;
//!
//! let tol = Tolerances::default();
//! let g = graph::path(20).unwrap();
//! let basis = eigendecompose(&g.laplacian().unwrap(), &tol).unwrap();
//! let sig = SparseSpectralSignal::new(vec![3, 15], vec![1.0, 0.2]).unwrap();
//! let f = synthesize(&basis, &sig).unwrap();
//!
//! // two active eigenvalues: four samples around vertex 1 suffice
//! let samples = f.samples_on(&g.neighbourhood(1, 3).unwrap());
//! let result = recover_one_neighbourhood(&g, 1, 2, &samples, &tol).unwrap();
//! assert!((result.eigenvalues[0] - basis.eigenvalue(3)).abs() < 1e-10);
//! assert!((result.eigenvalues[1] - basis.eigenvalue(15)).abs() < 1e-10);
//! ```

pub mod error;
pub mod graph;
pub mod io;
mod linalg;
pub mod multi;
mod operator;
pub mod prony;
pub mod sampling;
pub mod simplicial;
pub mod spectral;
pub mod tolerance;

pub use error::{Error, Result};
pub use graph::{Graph, GraphSignal, Vertex};
pub use prony::{RecoveryResult, SupportMatch};
pub use spectral::{SparseSpectralSignal, SpectralBasis};
pub use tolerance::Tolerances;
