//! Multiple eigenvalues: on the circle graph most eigenvalues are doubled,
//! and a signal spanning one eigenspace is seen by the moments as a single
//! exponential term. The pipeline shrinks the detected sparsity and returns
//! the eigenspace projection, not an individual eigenvector split.
//!
//! ```bash
//! cargo run -p laprec --example circle_multiplicity
//! ```

use laprec::graph;
use laprec::prony::{match_support, recover_one_neighbourhood};
use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let g = graph::circle(8)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;
    println!("circle(8) spectrum: {:?}", basis.eigenvalues());

    // indices 2 and 3 share the eigenvalue 2 - sqrt(2)
    let sig = SparseSpectralSignal::new(vec![2, 3], vec![1.0, 1.0])?;
    let f = synthesize(&basis, &sig)?;

    let v = (1..=8)
        .find(|&v| (basis.value(2, v) + basis.value(3, v)).abs() > 0.1)
        .unwrap();
    let samples = f.samples_on(&g.neighbourhood(v, 3)?);

    // asking for sparsity 2 -> the Hankel matrix has rank 1
    let result = recover_one_neighbourhood(&g, v, 2, &samples, &tol)?;
    println!(
        "requested sparsity 2, detected {} (rank shrink)",
        result.diagnostics.effective_sparsity
    );
    println!("recovered eigenvalue: {:.6}", result.eigenvalues[0]);

    let matched = match_support(&result.eigenvalues, &basis, 1e-6)?;
    println!("matched basis indices: {:?} (a doubled eigenvalue)", matched.clusters[0]);
    assert!(matched.plain().is_none());

    // the single component is the projection of f onto the eigenspace,
    // which here is f itself
    let component = &result.components[0];
    let max_gap = component
        .values
        .iter()
        .map(|(&w, &x)| (x - f.value(w)).abs())
        .fold(0.0_f64, f64::max);
    println!("component equals the eigenspace projection of f: max gap {max_gap:.2e}");
    Ok(())
}
