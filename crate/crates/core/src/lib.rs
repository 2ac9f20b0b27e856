//! Skew braces, set-theoretic solutions of the Yang-Baxter equation, and the
//! constructions linking them.

pub mod brace;
pub mod caps;
pub mod construct;
pub mod error;
pub mod format;
pub mod group;
pub mod perm;
pub mod solution;

pub use brace::SkewBrace;
pub use caps::Caps;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use solution::Solution;
