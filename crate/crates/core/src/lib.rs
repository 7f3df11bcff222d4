//! Kostka numbers of (skew) Young diagrams, the dominance order on
//! partitions, and exhaustive checks of how the two interact.
//!
//! - [`partition`]: partitions, compositions, dominance, covers, chains
//! - [`tableau`]: skew shapes, tableaux, brute-force SSYT enumeration
//! - [`bounded`]: bounded-composition counts `S(x; a)`
//! - [`class`]: tableaux grouped by their entries outside `{i, i+1}`
//! - [`engine`]: memoized horizontal-strip Kostka numbers and matrices
//! - [`verify`]: exhaustive verification suites and their reports

pub mod bounded;
pub mod class;
pub mod engine;
pub mod error;
pub mod partition;
pub mod tableau;
pub mod verify;

/// Exact non-negative count.
pub type Count = num_bigint::BigUint;

pub use bounded::{s_count, s_split, BoundVector};
pub use class::{
    adjacent_transfer_holds, class_breakdown, count_in_class, signature_of, ClassRow,
    ClassSignature,
};
pub use engine::{kostka, kostka_matrix, KostkaEngine, KostkaKey, KostkaMatrix};
pub use error::{Error, Result};
pub use partition::{
    adjacent_transfer_chain, compositions_of, cover_chain, covers, dominates, partitions_of,
    Composition, CoverMove, MoveKind, Partition,
};
pub use tableau::{content_of, enumerate_ssyt, is_semistandard, Cell, SkewShape, Tableau};
pub use verify::{verify_monotonicity, verify_theorem1, Report, Violation};
