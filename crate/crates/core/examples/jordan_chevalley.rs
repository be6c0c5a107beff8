//! Exact Jordan–Chevalley decomposition with its certificate.

use reductive_slices::lie::{certify, jordan_decompose, LieAlgebraSpec};
use reductive_slices::linalg::RationalMatrix;

fn main() -> reductive_slices::Result<()> {
    let m = RationalMatrix::from_ints(&[&[3, 1, 0, 0], &[-1, 1, 0, 0], &[0, 0, 2, 5], &[0, 0, 0, 2]]);
    let x = LieAlgebraSpec::gl(4).element(m)?;
    let jd = jordan_decompose(&x)?;
    println!("x   =\n{}", x.matrix());
    println!("x_s =\n{}", jd.semisimple.matrix());
    println!("x_n =\n{}", jd.nilpotent.matrix());
    let cert = certify(&x, &jd)?;
    println!("certificate ok: {}", cert.all_ok());
    if let Some(w) = &cert.witness {
        println!("x_s = p(x) for p(t) = {w}");
    }
    Ok(())
}
