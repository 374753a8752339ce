//! Witness-carrying decision procedures for maps between finite digital
//! images: (k0,k1)-continuity, isomorphism, local and weakly-local
//! isomorphism, the original and revised pseudocovering predicates, and
//! the digital covering predicate, plus exhaustive small-scale search
//! for counterexamples to the implications between them.

pub mod catalog;
pub mod covering;
pub mod error;
pub mod json;
pub mod lattice;
pub mod morphism;
pub mod oracle;

pub use error::DomainError;
pub use lattice::{adjacent, k_value, AdjacencyKind, DigitalImage, Neighborhood, Point};
pub use morphism::{DigitalMap, Verdict, Witness};
