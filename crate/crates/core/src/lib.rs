//! Delta-matroids, principal pivots and vertex flips over GF(2), GF(3)
//! and GF(4).
//!
//! The crate connects two pictures of the same combinatorics:
//!
//! * **Matrices.** A square matrix A over a labelled ground set V induces
//!   the set system of nonsingular principal submatrices. The principal
//!   pivot transform [`LabeledMatrix::ppt`] moves between such matrices.
//! * **Set systems.** Twists, loop complementations and dual pivots act on
//!   arbitrary set systems ([`SetSystem`]); delta-matroids are the systems
//!   satisfying the symmetric exchange axiom.
//!
//! [`vf_transport`] carries a matrix representation along any word of
//! flips, [`is_vf_safe`] explores a system's whole flip orbit, and the
//! subspace side ([`Subspace`], [`bicycle_matroid`]) ties kernels and their
//! bicycle spaces to loop complementations of the represented matroid.
//! [`verify`] packages the randomized suites behind the `verify` CLI
//! subcommand.

mod delta;
mod error;
mod field;
mod gauss;
mod ground;
mod matrix;
pub mod sample;
mod setsystem;
mod subspace;
pub mod text;
pub mod verify;

pub use delta::{
    is_delta_matroid, is_matroid_basis_system, is_vf_safe, matrix_delta_matroid, vf_transport,
    DeltaMatroidCheck, ExchangeViolation, Representation, VfSafety, DEFAULT_ORBIT_BUDGET,
};
pub use error::Error;
pub use field::{Automorphism, FieldElement, FieldKind};
pub use ground::{GroundSet, LabelSet, MAX_GROUND};
pub use matrix::LabeledMatrix;
pub use setsystem::{normalize_word, FlipNormalForm, FlipOp, FlipStep, FlipWord, SetSystem};
pub use subspace::{
    bases_parity_check, bicycle_matroid, bicycle_space, build_r_matrix, column_matroid_bases,
    matroid_from_subspace, standardize, twist_matroid_check, ParityReport, StandardRepresentation,
    Subspace, SubspaceMatroid, VECTOR_ENUMERATION_BUDGET,
};
