//! Below 2s samples no decoder can work: for any sample set with
//! `|W| <= 2s - 1` there are two different s-sparse signals with identical
//! samples. This example constructs such a pair and shows the l0 decoder
//! noticing the ambiguity.
//!
//! ```bash
//! cargo run -p laprec --example collide_below_2s
//! ```

use laprec::graph;
use laprec::sampling::{colliding_signals, l0_decode};
use laprec::spectral::eigendecompose;
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();
    let g = graph::path(10)?;
    let basis = eigendecompose(&g.laplacian()?, &tol)?;

    // s = 2, so three samples are one short of the 2s needed for uniqueness
    let w = vec![1, 2, 3];
    let pair = colliding_signals(&basis, &w, &[2, 5], &tol)?;
    println!("f: support {:?}, coefficients {:?}", pair.f.support(), pair.f.coefficients());
    println!("g: support {:?}, coefficients {:?}", pair.g.support(), pair.g.coefficients());
    println!("max |f - g| on W = {:?}: {:.2e}", w, pair.max_sample_difference);

    let gap: f64 = (1..=10)
        .map(|v| (pair.f_signal.value(v) - pair.g_signal.value(v)).powi(2))
        .sum::<f64>()
        .sqrt();
    println!("but ||f - g||_2 over all vertices: {gap:.4}");

    // the decoder sees both supports fit the same samples
    let u_w = basis.restrict_rows(&w);
    let values: Vec<f64> = w.iter().map(|&v| pair.f_signal.value(v)).collect();
    let decoded = l0_decode(&u_w, &values, 2, &tol)?;
    println!(
        "l0 picks {:?} and warns about {} other support(s): {:?}",
        decoded.support,
        decoded.ambiguous_supports.len(),
        decoded.ambiguous_supports
    );
    Ok(())
}
