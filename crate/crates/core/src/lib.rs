//! Domination in modular products of graphs.
//!
//! The modular product `G ⋄ H` lives on `V(G) × V(H)`; two distinct pairs are
//! adjacent when they are joined by a Cartesian edge, a direct edge, or a
//! direct edge of the complements. This crate provides:
//!
//! * [`Graph`] and [`VertexSet`], bit-vector backed simple graphs;
//! * generators for the named families ([`families`]);
//! * the modular product and the four standard products ([`products`]);
//! * exact solvers for the domination number, total domination number,
//!   packing number, efficient closed domination and the SDCTD number, plus
//!   `γ(G ⋄ H)` computed directly from the factors ([`domination`]);
//! * constructive lower/upper bounds with verified witnesses ([`bounds`]);
//! * decision procedures for `γ(G ⋄ H) ∈ {1, 2, 3}` ([`characterization`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod bitset;
pub mod bounds;
pub mod characterization;
mod cover;
pub mod domination;
mod error;
pub mod families;
mod graph;
pub mod graph6;
pub mod products;

pub use bitset::VertexSet;
pub use error::{Error, Graph6Error, Result};
pub use graph::{ExtendedNat, Graph, MAX_VERTICES};
pub use products::ProductVertex;
