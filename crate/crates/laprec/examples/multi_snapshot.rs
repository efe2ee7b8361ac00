//! Eigenvalue recovery from several small neighbourhoods instead of one
//! large one: s anchors with radius 1 sample s-neighbourhoods, trading one
//! `(2s-1)`-ball for a union of smaller balls.
//!
//! ```bash
//! cargo run -p laprec --example multi_snapshot
//! ```

use laprec::graph;
use laprec::multi::{coefficient_matrix_b, rank_certificate, recover_multi, required_samples, SnapshotPlan};
use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let g = graph::path(30)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;
    let sig = SparseSpectralSignal::new(vec![4, 17], vec![1.0, 0.6])?;
    let f = synthesize(&basis, &sig)?;
    let s = 2;

    // one-neighbourhood sampling for comparison
    let single = g.neighbourhood(12, 2 * s - 1)?;
    println!("one (2s-1)-neighbourhood of vertex 12: {} samples", single.len());

    // two anchors with radius 1 each
    let plan = SnapshotPlan::new(vec![(3, 1), (22, 1)])?;
    let w = required_samples(&g, &plan, s)?;
    println!("plan anchors 3 and 22, radius 1:       {} samples ({w:?})", w.len());

    // the certificate predicts success: B has full column rank
    let b = coefficient_matrix_b(&basis, &sig, &plan)?;
    let cert = rank_certificate(&b, &tol);
    println!(
        "coefficient matrix B: full rank = {}, sigma_min = {:.3e}",
        cert.full_rank, cert.smallest_singular_value
    );

    let samples = f.samples_on(&w);
    let result = recover_multi(&g, &plan, s, &samples, &tol)?;
    println!("recovered eigenvalues: {:?}", result.eigenvalues);
    println!(
        "errors: {:.2e}, {:.2e}",
        (result.eigenvalues[0] - basis.eigenvalue(4)).abs(),
        (result.eigenvalues[1] - basis.eigenvalue(17)).abs()
    );
    Ok(())
}
