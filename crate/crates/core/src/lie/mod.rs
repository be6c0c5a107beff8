//! `gl_n` and `sl_n` as matrix Lie algebras.

pub mod algebra;
pub mod jordan;
pub mod sl2;
pub mod subspace;

pub use algebra::{bracket, trace_form, Family, LieAlgebraSpec, LieElement};
pub use jordan::{certify, jordan_decompose, JordanCertificate, JordanDecomposition};
pub use sl2::{jm_complete, jm_complete_in, Sl2Triple, TripleCheck};
pub use subspace::{bracket_image, bracket_span, centralizer, Subspace};
