//! Moment maps on a coadjoint orbit, a symplectic vector space and the
//! cotangent groupoid of GL_n.

use reductive_slices::hamiltonian::{
    groupoid_axiom_suite, orbit_fiber_over_cartan, sp_kernel_certificate, sp_moment, sp_trivial_action,
    CoadjointOrbitSpace, CotangentGroupoid,
};
use reductive_slices::lie::LieAlgebraSpec;
use reductive_slices::linalg::rational::int;
use reductive_slices::linalg::RationalMatrix;

fn main() -> reductive_slices::Result<()> {
    let orbit = CoadjointOrbitSpace::new(LieAlgebraSpec::gl(3).element(RationalMatrix::diag_ints(&[1, 2, 3]))?);
    println!("orbit dim {}, points over the Cartan: {}", orbit.dimension(), orbit_fiber_over_cartan(&orbit)?.len());

    let v = vec![int(1), int(0), int(2), int(-1)];
    println!("mu(v) =\n{}", sp_moment(&v)?);
    println!("kernel certificate complete: {}", sp_kernel_certificate(2)?.complete());
    println!("trivial action report ok: {}", sp_trivial_action(&v)?.ok());

    let report = groupoid_axiom_suite(&CotangentGroupoid::new(2), 0, 25);
    println!("groupoid axioms passed {:?} of {}", report.passed, report.samples);
    Ok(())
}
