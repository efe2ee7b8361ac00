//! The all-minors-nonvanishing (Chebotarev) property decides whether 2s
//! arbitrary samples determine every s-sparse signal. The DFT matrix has it
//! exactly for prime sizes; positive-node Vandermonde matrices always do.
//!
//! ```bash
//! cargo run -p laprec --example chebotarev
//! ```

use laprec::sampling::{is_chebotarev, is_chebotarev_real, uniqueness_check_matrix, vandermonde};
use laprec::spectral::dft_matrix;
use laprec::tolerance::Tolerances;

fn main() -> laprec::Result<()> {
    let tol = Tolerances::default();

    for n in [3usize, 4, 5, 6, 7] {
        let check = is_chebotarev(&dft_matrix(n), &tol)?;
        match check.witness {
            None => println!("DFT({n}): every minor is nonzero"),
            Some(w) => println!(
                "DFT({n}): vanishing minor at rows {:?} x cols {:?}",
                w.rows, w.cols
            ),
        }
    }

    let v = vandermonde(&[1.0, 2.0, 3.0, 4.0]);
    println!(
        "Vandermonde(1,2,3,4): chebotarev = {}",
        is_chebotarev_real(&v, &tol)?.chebotarev
    );

    // consequence for sampling: on the 5-point DFT basis any 2 samples
    // determine any 1-sparse signal, and any 4 samples any 2-sparse signal
    let u = dft_matrix(5);
    let pairs = [(vec![0usize, 3], 1usize), (vec![0, 1, 2, 4], 2)];
    for (rows, s) in pairs {
        let check = uniqueness_check_matrix(&u, &rows, s, &tol)?;
        println!("DFT(5), rows {rows:?}, s = {s}: unique = {}", check.unique);
    }
    Ok(())
}
