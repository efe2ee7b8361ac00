//! The one-sparse case: a single active eigenvalue can be read off from the
//! immediate neighbours of any vertex where the signal does not vanish.
//!
//! With `L = D - A` the closed form is
//! `lambda = (1/f(v)) * sum_{w ~ v} (f(v) - f(w))`.
//!
//! ```bash
//! cargo run -p laprec --example one_sparse
//! ```

use laprec::graph;
use laprec::prony::recover_one_neighbourhood;
use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let g = graph::erdos_renyi(9, 0.45, 3)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;

    let j = 5;
    let sig = SparseSpectralSignal::new(vec![j], vec![1.7])?;
    let f = synthesize(&basis, &sig)?;
    let lambda = basis.eigenvalue(j);
    println!("hidden eigenvalue: lambda_{j} = {lambda:.6}");

    // any vertex with f(v) != 0 works
    let v = (1..=9).find(|&v| f.value(v).abs() > 0.1).unwrap();

    // direct closed form from one ring of neighbours
    let ring_sum: f64 = g
        .neighbours(v)?
        .iter()
        .map(|&w| f.value(v) - f.value(w))
        .sum();
    let direct = ring_sum / f.value(v);
    println!("closed form at vertex {v}:   {direct:.6} (error {:.2e})", (direct - lambda).abs());

    // the general pipeline with s = 1 does the same from N(v, 1)
    let samples = f.samples_on(&g.neighbourhood(v, 1)?);
    let result = recover_one_neighbourhood(&g, v, 1, &samples, &tol)?;
    println!(
        "pipeline with s = 1:       {:.6} (error {:.2e})",
        result.eigenvalues[0],
        (result.eigenvalues[0] - lambda).abs()
    );
    Ok(())
}
