//! Reverse complements and self-complementary words.

use crate::avoided::AvoidedWord;
use crate::error::{Error, Result};
use crate::num::Real;

fn complement(b: u8) -> Option<u8> {
    match b {
        b'A' => Some(b'T'),
        b'T' => Some(b'A'),
        b'C' => Some(b'G'),
        b'G' => Some(b'C'),
        _ => None,
    }
}

pub fn reverse_complement(word: &[u8]) -> Result<Vec<u8>> {
    word.iter()
        .enumerate()
        .rev()
        .map(|(position, &b)| {
            complement(b).ok_or(Error::SymbolNotInAlphabet {
                symbol: b as char,
                position,
            })
        })
        .collect()
}

/// A word equal to its own reverse complement, e.g. the `GAATTC` site.
pub fn is_self_complementary(word: &[u8]) -> Result<bool> {
    Ok(reverse_complement(word)? == word)
}

/// Self-complementarity flag for each word; non-DNA words are never flagged.
pub fn mark_palindromes<F: Real>(words: &[AvoidedWord<F>]) -> Vec<bool> {
    words
        .iter()
        .map(|w| is_self_complementary(&w.word).unwrap_or(false))
        .collect()
}
