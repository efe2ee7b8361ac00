//! The subspace route and exhaustive l0 decoding find the same signal.
//!
//! ```bash
//! cargo run -p laprec --example l0_vs_prony
//! ```

use laprec::graph;
use laprec::prony::recover_one_neighbourhood;
use laprec::sampling::l0_decode;
use laprec::spectral::{eigendecompose, synthesize, SparseSpectralSignal};
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let g = graph::erdos_renyi(12, 0.4, 8)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;
    let sig = SparseSpectralSignal::new(vec![3, 9], vec![0.8, -1.1])?;
    let f = synthesize(&basis, &sig)?;
    let s = 2;

    // anchor where both eigenvectors are visibly nonzero
    let v = (1..=12)
        .find(|&v| basis.value(3, v).abs() > 0.05 && basis.value(9, v).abs() > 0.05)
        .expect("such a vertex exists");
    let w = g.neighbourhood(v, 2 * s - 1)?;
    let samples = f.samples_on(&w);
    println!("anchor {v}, sampling {} vertices", w.len());

    // route 1: moments, Hankel kernel, companion roots
    let mut result = recover_one_neighbourhood(&g, v, s, &samples, &tol)?;
    let matched = result.match_against(&basis, 1e-6)?.plain().unwrap();
    let coefficients: Vec<f64> = result
        .components
        .iter()
        .zip(&matched)
        .map(|(c, &j)| c.values[&v] / basis.value(j, v))
        .collect();
    println!("subspace route: support {matched:?}, coefficients {coefficients:?}");

    // route 2: brute-force smallest support that interpolates the samples
    let u_w = basis.restrict_rows(&w);
    let values: Vec<f64> = w.iter().map(|&x| f.value(x)).collect();
    let decoded = l0_decode(&u_w, &values, s, &tol)?;
    println!(
        "l0 route:       support {:?}, coefficients {:?}",
        decoded.support, decoded.coefficients
    );

    assert_eq!(matched, decoded.support);
    for (a, b) in coefficients.iter().zip(&decoded.coefficients) {
        assert!((a - b).abs() < 1e-8);
    }
    println!("both routes agree to 1e-8");
    Ok(())
}
