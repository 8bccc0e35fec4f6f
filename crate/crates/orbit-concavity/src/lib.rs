//! Exact-arithmetic classification of essentially pseudoconcave minimal
//! orbits of simple real Lie algebras in complex flag manifolds.
//!
//! A simple real Lie algebra is described by its Satake diagram; a cross set
//! Phi of simple roots picks a parabolic subalgebra and with it the minimal
//! orbit M in the corresponding complex flag manifold. The orbit is
//! essentially pseudoconcave when some Hermitian metric on its holomorphic
//! tangent bundle makes every Levi form trace-free; homogeneity reduces the
//! question to base-point root combinatorics, where each Levi form becomes
//! an exactly representable Hermitian matrix built from Chevalley structure
//! constants and the conjugation of the real form. The whole decision path
//! is exact: integer root systems, integer structure constants, Gaussian
//! rational matrices, and signatures by congruence diagonalization.
//!
//! The crate decides this question three independent ways — the real-root
//! criterion, the full Hermitian-parts criterion, and a closed-form
//! classification by real type — and ships an exhaustive harness that
//! cross-validates them over the entire catalog of simple real forms up to
//! rank eight.
//!
//! The `examples/` directory demonstrates each capability; the thin
//! `orbit-concavity` binary exposes the same operations as subcommands
//! (classify, inspect, enumerate, catalog, verify-theorem).

// Indexed loops are the clearest way to express the simultaneous row and
// column manipulations in this crate's matrix code.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::type_complexity)]

pub mod chevalley;
pub mod classifier;
pub mod cli;
pub mod cralg;
pub mod error;
pub mod leviform;
pub mod linprog;
pub mod matrix;
pub mod rootsys;
pub mod satake;
pub mod scalar;

pub use classifier::{
    closed_form_table, decide_lemma_iii, decide_proposition, diagonal_certificate,
    enumerate_and_crosscheck, Context, Decision, Verdict,
};
pub use cralg::{build_spec, CrSpec};
pub use error::Error;
pub use leviform::{
    build_real_structure, hermitian_form, hermitian_parts, hermitian_signature, levi_matrix,
    HermitianForm, RealStructure,
};
pub use matrix::{FormClass, Signature};
pub use rootsys::{build_root_system, RootId, RootSystem, TypeLetter};
pub use satake::{catalog, conjugation, omega_set, SatakeDiagram};
