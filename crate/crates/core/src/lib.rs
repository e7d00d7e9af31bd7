//! Triangulated disks in Linial–Meshulam random 2-complexes.

pub mod certifier;
pub mod cli;
pub mod error;
pub mod exact;
pub mod face;
pub mod moments;
pub mod random_complex;
pub mod subset_params;
pub mod sweep;
pub mod tri_enum;

pub use error::{Error, Result};
pub use face::{Edge, Face, Vertex};
