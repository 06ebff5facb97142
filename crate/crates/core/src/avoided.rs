//! Expected frequencies, deviations and ρ-avoided word enumeration.
//!
//! Absent avoided words are necessarily minimal absent words, and an occurring
//! word can only be avoided when its longest proper prefix is an explicit
//! node. The fixed-length search therefore checks the minimal absent words of
//! length `k` and the children of explicit nodes of depth `k - 1`; the
//! all-lengths search drops the length condition on both sides.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::maw::{self, MawTuple};
use crate::num::Real;
use crate::sequence::Sequence;
use crate::suffix_index::{NodeId, SuffixIndex, SENTINEL};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params<F> {
    k: usize,
    rho: F,
}

impl<F: Real> Params<F> {
    /// Requires `k > 2` and `rho < 0`.
    pub fn new(k: usize, rho: F) -> Result<Self> {
        if k <= 2 {
            return Err(Error::InvalidParameter(format!("word length k must exceed 2, got {k}")));
        }
        check_rho(rho)?;
        Ok(Params { k, rho })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rho(&self) -> F {
        self.rho
    }
}

fn check_rho<F: Real>(rho: F) -> Result<()> {
    if rho.is_nan() || rho >= F::zero() {
        return Err(Error::InvalidParameter(format!(
            "threshold rho must be negative, got {rho}"
        )));
    }
    Ok(())
}

/// Counts of a word, its longest proper prefix, suffix and infix, with the
/// derived expectation and deviation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WordStats<F> {
    pub f: u64,
    pub fp: u64,
    pub fs: u64,
    pub fi: u64,
    pub expected: F,
    pub std: F,
}

impl<F: Real> WordStats<F> {
    pub fn new(f: u64, fp: u64, fs: u64, fi: u64) -> Self {
        let expected = expected_frequency(fp, fs, fi);
        WordStats {
            f,
            fp,
            fs,
            fi,
            expected,
            std: std_value(f, expected),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordClass {
    Occurring,
    Absent,
}

impl WordClass {
    pub fn as_str(self) -> &'static str {
        match self {
            WordClass::Occurring => "occurring",
            WordClass::Absent => "absent",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AvoidedWord<F> {
    pub word: Vec<u8>,
    pub stats: WordStats<F>,
    pub class: WordClass,
}

impl<F: Real> AvoidedWord<F> {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.word.len()
    }
}

/// `fp·fs/fi`, or 0 when the infix does not occur. The integer product is
/// formed first.
pub fn expected_frequency<F: Real>(fp: u64, fs: u64, fi: u64) -> F {
    if fi == 0 {
        return F::zero();
    }
    F::from_count(fp * fs) / F::from_count(fi)
}

/// `(f - E) / max(√E, 1)`.
pub fn std_value<F: Real>(f: u64, expected: F) -> F {
    (F::from_count(f) - expected) / expected.sqrt().max(F::one())
}

/// Statistics of the minimal absent word `t`, found from the loci of its
/// longest proper prefix and infix.
fn absent_stats<F: Real>(index: &SuffixIndex, t: &MawTuple) -> Result<WordStats<F>> {
    let (i, j, alpha) = (t.start(), t.end(), t.symbol());
    let up = index.locate_factor(i, j)?;
    if index.child(up, alpha).is_some() {
        return Err(Error::Consistency(format!(
            "tuple ({i}, {j}, {}) spells an occurring word",
            alpha as char
        )));
    }
    let fp = index.frequency(up) as u64;
    if j == i {
        // length-2 word: the infix is empty
        let us = index
            .child(crate::suffix_index::Locus::root(), alpha)
            .ok_or_else(|| Error::Consistency(format!("symbol {} does not occur", alpha as char)))?;
        return Ok(WordStats::new(0, fp, index.frequency(us) as u64, index.len() as u64));
    }
    let ui = index.locate_factor(i + 1, j)?;
    let (fi, fs) = if !index.is_explicit(ui) {
        if index.child(ui, alpha).is_none() {
            return Err(Error::Consistency(format!(
                "suffix of tuple ({i}, {j}, {}) does not occur",
                alpha as char
            )));
        }
        let c = index.frequency(ui) as u64;
        (c, c)
    } else {
        let us = index.child(ui, alpha).ok_or_else(|| {
            Error::Consistency(format!("suffix of tuple ({i}, {j}, {}) does not occur", alpha as char))
        })?;
        (index.frequency(ui) as u64, index.frequency(us) as u64)
    };
    Ok(WordStats::new(0, fp, fs, fi))
}

fn absent_word<F: Real>(index: &SuffixIndex, t: &MawTuple, rho: F) -> Result<Option<AvoidedWord<F>>> {
    let stats = absent_stats::<F>(index, t)?;
    Ok((stats.std <= rho).then(|| AvoidedWord {
        word: t.word(index.text()),
        stats,
        class: WordClass::Absent,
    }))
}

/// Absent ρ-avoided words of length `k`, checked against the minimal absent
/// words of that length.
pub fn absent_avoided<F: Real>(
    index: &SuffixIndex,
    maws: &[MawTuple],
    params: &Params<F>,
) -> Result<Vec<AvoidedWord<F>>> {
    let mut out = Vec::new();
    for t in maws.iter().filter(|t| t.len() == params.k) {
        out.extend(absent_word(index, t, params.rho)?);
    }
    Ok(out)
}

/// Evaluates every child of the explicit node `v`, whose path-label is the
/// longest proper prefix of the candidates.
fn occurring_children<F: Real>(index: &SuffixIndex, v: NodeId, rho: F, out: &mut Vec<AvoidedWord<F>>) -> Result<()> {
    let link = index
        .suffix_link_of(v)
        .map_err(|_| Error::Consistency(format!("node {} has no suffix link", v.index())))?;
    let fp = index.count(v) as u64;
    let fi = index.count(link) as u64;
    let d = index.depth(v);
    let text = index.text_with_sentinel();
    for c in index.children(v) {
        let alpha = index.head(c);
        if alpha == SENTINEL {
            continue;
        }
        let vs = index.find_child(link, alpha).ok_or_else(|| {
            Error::Consistency(format!(
                "suffix link target of node {} lacks child {}",
                v.index(),
                alpha as char
            ))
        })?;
        let stats = WordStats::new(index.count(c) as u64, fp, index.count(vs) as u64, fi);
        if stats.std <= rho {
            let (start, _) = index.edge(c);
            out.push(AvoidedWord {
                word: text[start - d..=start].to_vec(),
                stats,
                class: WordClass::Occurring,
            });
        }
    }
    Ok(())
}

/// Occurring ρ-avoided words of length `k`.
pub fn occurring_avoided<F: Real>(index: &SuffixIndex, params: &Params<F>) -> Result<Vec<AvoidedWord<F>>> {
    occurring_avoided_traced(index, params).map(|(words, _)| words)
}

/// Like [`occurring_avoided`], also returning the number of explicit nodes
/// of depth `k - 1` it examined.
pub fn occurring_avoided_traced<F: Real>(
    index: &SuffixIndex,
    params: &Params<F>,
) -> Result<(Vec<AvoidedWord<F>>, usize)> {
    let target = params.k - 1;
    let mut out = Vec::new();
    let mut considered = 0;
    let mut stack = vec![index.root()];
    while let Some(u) = stack.pop() {
        for v in index.children(u) {
            let d = index.depth(v);
            if d < target {
                if !index.is_leaf(v) {
                    stack.push(v);
                }
            } else if d == target && !index.is_leaf(v) {
                considered += 1;
                occurring_children(index, v, params.rho, &mut out)?;
            }
        }
    }
    Ok((out, considered))
}

/// Ascending deviation, then length, then word.
pub fn sort_words<F: Real>(words: &mut [AvoidedWord<F>]) {
    words.sort_by(|a, b| {
        a.stats
            .std
            .partial_cmp(&b.stats.std)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.word.len().cmp(&b.word.len()))
            .then_with(|| a.word.cmp(&b.word))
    });
}

fn merge<F: Real>(mut words: Vec<AvoidedWord<F>>) -> Result<Vec<AvoidedWord<F>>> {
    sort_words(&mut words);
    let mut seen: Vec<&[u8]> = words.iter().map(|w| w.word.as_slice()).collect();
    seen.sort_unstable();
    if let Some(dup) = seen.windows(2).find(|p| p[0] == p[1]) {
        return Err(Error::Consistency(format!(
            "word {} reported twice",
            String::from_utf8_lossy(dup[0])
        )));
    }
    Ok(words)
}

/// All ρ-avoided words of length `k`, sorted by ascending deviation.
pub fn avoided_words<F: Real>(
    index: &SuffixIndex,
    maws: &[MawTuple],
    params: &Params<F>,
) -> Result<Vec<AvoidedWord<F>>> {
    let mut words = absent_avoided(index, maws, params)?;
    words.extend(occurring_avoided(index, params)?);
    merge(words)
}

/// ρ-avoided words of every length ≥ 3.
pub fn all_avoided<F: Real>(index: &SuffixIndex, maws: &[MawTuple], rho: F) -> Result<Vec<AvoidedWord<F>>> {
    check_rho(rho)?;
    let mut words = Vec::new();
    for t in maws.iter().filter(|t| t.len() >= 3) {
        words.extend(absent_word(index, t, rho)?);
    }
    for v in index.nodes() {
        if v != index.root() && !index.is_leaf(v) && index.depth(v) >= 2 {
            occurring_children(index, v, rho, &mut words)?;
        }
    }
    merge(words)
}

/// Run diagnostics of the fixed-length pipeline.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub explicit_nodes: usize,
    pub maws_of_length_k: usize,
    pub nodes_considered: usize,
    pub index_bytes: usize,
}

/// Builds the index of `seq` and returns its ρ-avoided words of length `k`.
pub fn avoided_words_in<F: Real>(seq: &Sequence, params: &Params<F>) -> Result<Vec<AvoidedWord<F>>> {
    avoided_words_traced(seq, params).map(|(w, _)| w)
}

pub fn avoided_words_traced<F: Real>(seq: &Sequence, params: &Params<F>) -> Result<(Vec<AvoidedWord<F>>, Diagnostics)> {
    let index = SuffixIndex::build(seq)?;
    let maws = maw::compute_maws_of_length(&index, params.k);
    let mut words = absent_avoided(&index, &maws, params)?;
    let (occurring, nodes_considered) = occurring_avoided_traced(&index, params)?;
    words.extend(occurring);
    let diagnostics = Diagnostics {
        explicit_nodes: index.node_count(),
        maws_of_length_k: maws.len(),
        nodes_considered,
        index_bytes: index.heap_bytes() + maws.capacity() * std::mem::size_of::<MawTuple>(),
    };
    Ok((merge(words)?, diagnostics))
}

/// Builds the index of `seq` and returns its ρ-avoided words of all lengths.
pub fn all_avoided_in<F: Real>(seq: &Sequence, rho: F) -> Result<Vec<AvoidedWord<F>>> {
    let index = SuffixIndex::build(seq)?;
    let mut maws = Vec::new();
    maw::compute_maws_with(&index, |t| {
        if t.len() >= 3 {
            maws.push(t)
        }
    });
    all_avoided(&index, &maws, rho)
}
