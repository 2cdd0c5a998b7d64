//! Kazhdan–Lusztig cells of the type `B_n` Weyl group under unequal
//! parameters, computed exactly, together with the combinatorial machinery
//! (generalised Robinson–Schensted, Knuth moves, generalised descent sets,
//! cellular maps and Vogan classes) that characterises them.

pub mod area;
pub mod descent;
pub mod error;
pub mod graph;
pub mod group;
pub mod hecke;
pub mod kl;
pub mod knuth;
pub mod laurent;
pub mod partition;
pub mod report;
pub mod tableau;
pub mod vogan;

pub use error::{Error, Result};
pub use group::{Gen, GenSet, GenWord, Regime, SignedPerm, WeightFunction};
pub use partition::GroupPartition;
