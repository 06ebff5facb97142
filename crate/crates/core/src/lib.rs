//! Computation of ρ-avoided words.
//!
//! A word `w` of length `k > 2` is ρ-avoided in a text `x` when its standardised
//! deviation `std(w) = (f(w) - E(w)) / max(√E(w), 1)` is at most `ρ < 0`, where
//! `E(w) = f(w_p)·f(w_s)/f(w_i)` is estimated from the longest proper prefix,
//! suffix and infix of `w`. Avoided words are either occurring (found by walking
//! the explicit nodes of a suffix tree) or minimal absent words, so the whole
//! set is enumerated in time linear in `n` for a fixed alphabet.
//!
//! The real-valued statistics are generic over [`Real`] (`f32` or `f64`); the
//! aliases at the crate root fix the scalar to `f64`.

pub mod avoided;
pub mod bench;
pub mod dna;
mod error;
pub mod fasta_io;
pub mod maw;
mod num;
pub mod oracle;
mod sequence;
pub mod suffix_index;

pub use error::{Error, Result};
pub use maw::MawTuple;
pub use num::Real;
pub use sequence::{Alphabet, Sequence};
pub use suffix_index::{Locus, NodeId, SuffixIndex};

pub use avoided::WordClass;

/// Search parameters with double-precision threshold.
pub type Params = avoided::Params<f64>;
/// Observed and expected counts with double-precision statistics.
pub type WordStats = avoided::WordStats<f64>;
/// A reported avoided word with double-precision statistics.
pub type AvoidedWord = avoided::AvoidedWord<f64>;

/// Single-precision variants, mainly useful for memory-bound batch runs.
pub type ParamsF32 = avoided::Params<f32>;
pub type WordStatsF32 = avoided::WordStats<f32>;
pub type AvoidedWordF32 = avoided::AvoidedWord<f32>;
