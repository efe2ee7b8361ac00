//! End-to-end recovery of a 2-sparse signal on the path graph with 20
//! vertices from four samples at one end.
//!
//! ```bash
//! cargo run -p laprec --example path_recovery
//! ```

use laprec::graph;
use laprec::prony;
use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let g = graph::path(20)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;

    // f = u_3 + (1/5) u_15: two active eigenvalues out of twenty
    let sig = SparseSpectralSignal::new(vec![3, 15], vec![1.0, 0.2])?;
    let f = synthesize(&basis, &sig)?;

    // sparsity 2 needs the 3-neighbourhood of the base vertex: {1, 2, 3, 4}
    let base = 1;
    let window = g.neighbourhood(base, 3)?;
    let samples = f.samples_on(&window);
    println!("samples on {window:?}:");
    for (&v, &x) in &samples {
        println!("  f({v}) = {x:+.4}");
    }

    let moments = prony::local_moments(&g, &samples, base, 3)?;
    println!("\nmoments g(k) = (L^k f)(1): {:?}", moments.values());

    let hankel = prony::hankel(&moments, 2)?;
    println!("\nHankel matrix:{hankel}");

    let mut result = prony::recover_one_neighbourhood(&g, base, 2, &samples, &tol)?;
    let matched = result.match_against(&basis, 1e-6)?.clone();
    println!("recovered eigenvalues: {:?}", result.eigenvalues);
    println!("matched support:       {:?}", matched.plain().unwrap());

    println!("\nlocal components on the 2-neighbourhood:");
    for component in &result.components {
        println!("  eigenvalue {:.6}:", component.eigenvalue);
        for (&v, &x) in &component.values {
            println!("    vertex {v}: {x:+.6}");
        }
    }

    let err_3 = (result.eigenvalues[0] - basis.eigenvalue(3)).abs();
    let err_15 = (result.eigenvalues[1] - basis.eigenvalue(15)).abs();
    println!("\neigenvalue errors vs the exact spectrum: {err_3:.2e}, {err_15:.2e}");
    Ok(())
}
