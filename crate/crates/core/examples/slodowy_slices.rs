//! Slodowy slices, their contracting weights, and the principal slice as a
//! fundamental domain for regular elements.

use reductive_slices::lie::{jm_complete, LieAlgebraSpec};
use reductive_slices::linalg::RationalMatrix;
use reductive_slices::slices::{contracting_weights, fundamental_rep, poisson_slice_check, principal_triple, slodowy_slice};

fn main() -> reductive_slices::Result<()> {
    let g = LieAlgebraSpec::gl(3);
    let e = g.element(RationalMatrix::unit(3, 0, 1))?;
    let t = jm_complete(&e)?;
    let s = slodowy_slice(&t, g)?;
    println!("slice at the minimal orbit of gl_3: dim {}", s.dim());
    println!("ad h weights on g_f: {:?}", contracting_weights(&t, g)?);
    let v = poisson_slice_check(&s, s.base())?;
    println!("transversal {} / symplectic {}", v.transversal_ok, v.symplectic_ok);

    let principal = slodowy_slice(&principal_triple(g)?, g)?;
    let x = g.element(RationalMatrix::from_ints(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]))?;
    let s = fundamental_rep(&x)?;
    println!("principal slice dim {}; representative of x:\n{}", principal.dim(), s.matrix());
    Ok(())
}
