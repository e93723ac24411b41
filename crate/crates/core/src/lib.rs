//! Ordinal notations below Γ₀, gap-condition orders on sequences and trees,
//! quasi-embeddings between them, tree reifications, and maximal order types.

pub mod cli;
pub mod embed;
pub mod error;
pub mod gap_seq;
pub mod gap_tree;
pub mod motype;
pub mod harness;
pub mod ord;
pub mod reify;
pub mod text;

pub use error::{Error, Result};
pub use gap_seq::{GapSeq, GapVariant, Realizer};
pub use gap_tree::{LabTree, Leq, UnitTree};
pub use ord::{OrdTerm, Principal};
