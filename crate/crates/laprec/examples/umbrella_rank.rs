//! A sampling plan that provably fails: on the umbrella graph the pendant
//! vertex n has degree one, so every eigenpair satisfies
//! `lambda_j u_j(n) = u_j(n) - u_j(n-1)` and the coefficient matrix of the
//! plan ((n, 2), (n-1, 1)) is singular for every 3-sparse signal, even
//! though the plan samples the whole graph.
//!
//! ```bash
//! cargo run -p laprec --example umbrella_rank
//! ```

use laprec::error::Error;
use laprec::graph;
use laprec::multi::{coefficient_matrix_b, rank_certificate, recover_multi, required_samples, SnapshotPlan};
use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let n = 8;
    let g = graph::umbrella(n)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;

    // the middle row of B is always the difference of the outer two
    let support: Vec<usize> = (1..=n)
        .filter(|&j| basis.value(j, n).abs() > 1e-3)
        .take(3)
        .collect();
    let sig = SparseSpectralSignal::new(support.clone(), vec![1.0, 1.0, 1.0])?;
    let f = synthesize(&basis, &sig)?;
    let s = 3;

    let plan = SnapshotPlan::new(vec![(n, 2), (n - 1, 1)])?;
    let w = required_samples(&g, &plan, s)?;
    println!("support {support:?}, sampling set covers {} of {n} vertices", w.len());

    let b = coefficient_matrix_b(&basis, &sig, &plan)?;
    let cert = rank_certificate(&b, &tol);
    println!(
        "B is {}x3 with sigma_min/sigma_max = {:.3e}  (full rank: {})",
        b.nrows(),
        cert.smallest_singular_value / cert.largest_singular_value,
        cert.full_rank
    );

    match recover_multi(&g, &plan, s, &f.samples_on(&w), &tol) {
        Err(Error::RankDeficient { kernel_dim, singular_values }) => {
            println!("recovery refused: kernel dimension {kernel_dim}, singular values {singular_values:?}");
        }
        other => println!("unexpected outcome: {other:?}"),
    }

    // moving the second anchor off the hub repairs the rank
    let good_plan = SnapshotPlan::new(vec![(n, 2), (2, 1)])?;
    let b = coefficient_matrix_b(&basis, &sig, &good_plan)?;
    if rank_certificate(&b, &tol).full_rank {
        let w = required_samples(&g, &good_plan, s)?;
        let result = recover_multi(&g, &good_plan, s, &f.samples_on(&w), &tol)?;
        println!("plan ((8,2),(2,1)) instead: eigenvalues {:?}", result.eigenvalues);
    }
    Ok(())
}
