//! Brute-force reference implementations.
//!
//! Nothing here touches the suffix tree or the minimal-absent-word code; the
//! only shared type is [`Sequence`]. Everything is computed by scanning the
//! text, so these functions are slow and guarded against large inputs.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Largest `σ^k` enumerated by [`brute_avoided`].
pub const MAX_ENUMERATION: u64 = 10_000_000;
/// Longest text accepted by [`brute_maws`] and [`brute_all_avoided`].
pub const MAX_TEXT: usize = 200;

/// A word with its brute-force statistics.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleWord {
    pub word: Vec<u8>,
    pub f: u64,
    pub fp: u64,
    pub fs: u64,
    pub fi: u64,
    pub expected: f64,
    pub std: f64,
}

/// Number of positions where `w` starts in `x`.
pub fn count_occurrences(x: &[u8], w: &[u8]) -> usize {
    if w.is_empty() {
        return x.len();
    }
    if w.len() > x.len() {
        return 0;
    }
    (0..=x.len() - w.len()).filter(|&i| &x[i..i + w.len()] == w).count()
}

fn stats_from_counts(word: Vec<u8>, f: u64, fp: u64, fs: u64, fi: u64) -> OracleWord {
    let expected = if fi > 0 { (fp * fs) as f64 / fi as f64 } else { 0.0 };
    let std = (f as f64 - expected) / expected.sqrt().max(1.0);
    OracleWord {
        word,
        f,
        fp,
        fs,
        fi,
        expected,
        std,
    }
}

/// Statistics of a single word of length ≥ 2, by direct scanning.
pub fn brute_word_stats(x: &[u8], w: &[u8]) -> OracleWord {
    assert!(w.len() >= 2, "word must have a prefix and a suffix");
    let m = w.len();
    stats_from_counts(
        w.to_vec(),
        count_occurrences(x, w) as u64,
        count_occurrences(x, &w[..m - 1]) as u64,
        count_occurrences(x, &w[1..]) as u64,
        count_occurrences(x, &w[1..m - 1]) as u64,
    )
}

fn window_counts(x: &[u8], len: usize) -> HashMap<&[u8], u64> {
    let mut counts = HashMap::new();
    if len == 0 {
        counts.insert(&x[..0], x.len() as u64);
        return counts;
    }
    if len <= x.len() {
        for w in x.windows(len) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

fn sort_oracle(words: &mut [OracleWord]) {
    words.sort_by(|a, b| {
        a.std
            .total_cmp(&b.std)
            .then(a.word.len().cmp(&b.word.len()))
            .then_with(|| a.word.cmp(&b.word))
    });
}

/// Every word of length `k` over the alphabet of `x` with `std ≤ rho`,
/// found by enumerating all `σ^k` candidates.
pub fn brute_avoided(x: &Sequence, k: usize, rho: f64) -> Result<Vec<OracleWord>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    let symbols = x.alphabet().symbols();
    let sigma = symbols.len() as u64;
    let total = sigma
        .checked_pow(k as u32)
        .filter(|&t| t <= MAX_ENUMERATION)
        .ok_or_else(|| Error::OracleGuard(format!("{sigma}^{k} candidates exceed {MAX_ENUMERATION}")))?;
    let text = x.data();
    let full = window_counts(text, k);
    let outer = window_counts(text, k - 1);
    let inner = window_counts(text, k - 2);
    let get = |m: &HashMap<&[u8], u64>, w: &[u8]| m.get(w).copied().unwrap_or(0);

    let mut out = Vec::new();
    let mut digits = vec![0usize; k];
    let mut word = vec![symbols[0]; k];
    for _ in 0..total {
        let w = stats_from_counts(
            word.clone(),
            get(&full, &word),
            get(&outer, &word[..k - 1]),
            get(&outer, &word[1..]),
            get(&inner, &word[1..k - 1]),
        );
        if w.std <= rho {
            out.push(w);
        }
        for pos in (0..k).rev() {
            digits[pos] += 1;
            if digits[pos] < symbols.len() {
                word[pos] = symbols[digits[pos]];
                break;
            }
            digits[pos] = 0;
            word[pos] = symbols[0];
        }
    }
    sort_oracle(&mut out);
    Ok(out)
}

fn distinct_factors(x: &[u8], len: usize) -> HashSet<&[u8]> {
    if len > x.len() {
        HashSet::new()
    } else {
        x.windows(len).collect()
    }
}

/// Minimal absent words of length ≥ 2, checked against the definition and
/// sorted by length then word.
pub fn brute_maws(x: &Sequence) -> Result<Vec<Vec<u8>>> {
    let text = x.data();
    if text.len() > MAX_TEXT {
        return Err(Error::OracleGuard(format!(
            "text of length {} exceeds {MAX_TEXT}",
            text.len()
        )));
    }
    let symbols = x.alphabet().symbols();
    let mut out = Vec::new();
    for len in 2..=text.len() + 1 {
        let shorter = distinct_factors(text, len - 1);
        let same = distinct_factors(text, len);
        let mut candidates: Vec<Vec<u8>> = Vec::new();
        for u in &shorter {
            for &a in symbols {
                let mut w = u.to_vec();
                w.push(a);
                candidates.push(w);
            }
        }
        candidates.sort();
        for w in candidates {
            if same.contains(w.as_slice()) {
                continue;
            }
            // every proper factor lies inside the prefix or the suffix of length len-1
            let all_occur = shorter.contains(&w[..len - 1]) && shorter.contains(&w[1..]);
            if all_occur {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// Avoided words of every length from 3 to `n + 1`.
///
/// Candidates of length `L` are the occurring factors of length `L - 1`
/// extended by one symbol: any other word has an absent prefix, so `E = 0`
/// and `std ≥ 0`.
pub fn brute_all_avoided(x: &Sequence, rho: f64) -> Result<Vec<OracleWord>> {
    let text = x.data();
    if text.len() > MAX_TEXT {
        return Err(Error::OracleGuard(format!(
            "text of length {} exceeds {MAX_TEXT}",
            text.len()
        )));
    }
    let symbols = x.alphabet().symbols();
    let mut out = Vec::new();
    for len in 3..=text.len() + 1 {
        let mut prefixes: Vec<&[u8]> = distinct_factors(text, len - 1).into_iter().collect();
        prefixes.sort_unstable();
        for u in prefixes {
            for &a in symbols {
                let mut w = u.to_vec();
                w.push(a);
                let s = brute_word_stats(text, &w);
                if s.std <= rho {
                    out.push(s);
                }
            }
        }
    }
    sort_oracle(&mut out);
    Ok(out)
}
