//! Combinatorics of shifted simplicial complexes and the wedge decomposition
//! of the polyhedral products `Z_K(CX, X)`, with integral homology and
//! graded Lie algebra oracles for checking it.

pub mod complex;
pub mod construction;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod graded_lie;
pub mod homology;
pub mod interchange;
pub mod permutation;
pub mod proof_replay;
pub mod report;
pub mod sign_poly;
pub mod vertex;
pub mod whitehead;

pub use complex::{boundary_simplex, SimplicialComplex};
pub use decomposition::{decompose, verify_wedge_equivalence, SphereAssignment, WedgeReport, WedgeSummand};
pub use error::{Error, Result};
pub use homology::{reduced_homology, smith_normal_form, sphere_wedge_profile, HomologyProfile};
pub use permutation::{sigma_i, sigma_permutation, Permutation};
pub use sign_poly::SignPolynomial;
pub use vertex::{FSequence, VertexSet};
pub use whitehead::{degree_of, full_pinch_map, jacobi_sum, pinch_expression, WhiteheadExpr};
