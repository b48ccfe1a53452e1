//! Crystal bases for symmetric Kac-Moody root data.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`RootDatum`] and [`Weight`]: symmetric generalized Cartan matrices, the
//!   loop-free graph they define and exact weight arithmetic,
//! * the crystal contract ([`Crystal`]) with the elementary crystals
//!   `B_k`, `T_λ`, `S_0`, the Kashiwara tensor product rule and the profile
//!   model of `B(w)` built from ranks of three-term complexes,
//! * breadth-first exploration into [`CrystalGraph`]s, axiom/normality/morphism
//!   checkers, decomposition into highest-weight components, isomorphism of
//!   highest-weight crystals and characters,
//! * finite-type oracles: positive roots, Weyl dimension and Freudenthal
//!   multiplicities.
//!
//! Vertex indices are 0-based throughout the API. File formats and the CLI in
//! `crystal-tools` present them 1-based.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod crystal;
pub mod elementary;
pub mod explorer;
pub mod graph;
pub mod linalg;
pub mod oracles;
pub mod quiver_model;
pub mod root_datum;
pub mod tensor;

pub use checks::{
    check_axioms, check_embedding, check_injective, check_normal, check_strict_morphism,
    check_strict_morphism_by_element, Report, UndefinedMap, Violation,
};
pub use crystal::{Crystal, CrystalElement, CrystalOps, ExtInt};
pub use elementary::BkElement;
pub use explorer::{character, decompose, highest_weight_elements, is_isomorphic, Character, DecompositionTable};
pub use graph::{generate, CrystalGraph, GenerateError, Link, Node};
pub use oracles::{finite_type_check, freudenthal_multiplicities, positive_roots, weyl_dim, OracleError};
pub use quiver_model::{embed_psi, ModelElement, WProfile};
pub use root_datum::{RootDatum, RootDatumError, Weight};
