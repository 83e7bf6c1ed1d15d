//! Permutation group engine and verification pipeline for derangements in
//! permutation groups with two orbits of equal length.

pub mod blocks;
pub mod caps;
pub mod classes;
pub mod derangement;
pub mod error;
pub mod group;
pub mod io;
pub mod normal;
pub mod perm;
pub mod pipeline;
pub mod subdirect;
pub mod sylow;

pub use caps::Caps;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
