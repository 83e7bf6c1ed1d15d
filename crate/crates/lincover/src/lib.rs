//! Hyperplanes of `GF(q)^d`: counting vectors with no zero coordinate on a
//! hyperplane, and covering the whole space by hyperplanes whose common
//! intersection is trivial.

pub mod count;
pub mod cover;
pub mod error;
pub mod field;
pub mod hyperplane;

pub use count::{d_sequences, good_count_bruteforce, good_count_formula};
pub use cover::{
    check_cover, min_cover_search, tight_cover_construct, valid_covers, CoverCheck, CoverInstance,
    MinCover,
};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use hyperplane::Hyperplane;

/// Default cap on `q^d` for anything that walks the whole space.
pub const EXHAUSTION_CAP: u64 = 10_000_000;

/// Default number of subsets the cover search may visit.
pub const SEARCH_BUDGET: u64 = 50_000_000;
