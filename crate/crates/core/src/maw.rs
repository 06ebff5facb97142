//! Minimal absent words.
//!
//! An absent word is minimal when all of its proper factors occur. Every
//! minimal absent word of length at least 2 has the form `a·y·b` where `y` is
//! the path-label of an explicit internal node, `y·b` continues into one of
//! its children and `a·y` occurs; it is absent exactly when `a` precedes some
//! occurrence of `y` but no occurrence of `y·b`. One post-order pass that
//! carries the set of left-extension symbols of each subtree therefore finds
//! them all in `O(σn)` time.

use std::cmp::Ordering;
use std::io::Write;

use crate::error::Result;
use crate::suffix_index::{NodeId, SuffixIndex, SENTINEL};

/// Minimal absent word `x[start..=end]·symbol`.
///
/// `start..=end` is the leftmost occurrence of the longest proper prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MawTuple {
    start: u32,
    end: u32,
    symbol: u8,
}

impl MawTuple {
    pub fn new(start: usize, end: usize, symbol: u8) -> Self {
        debug_assert!(end >= start);
        MawTuple {
            start: start as u32,
            end: end as u32,
            symbol,
        }
    }

    pub fn start(&self) -> usize {
        self.start as usize
    }

    pub fn end(&self) -> usize {
        self.end as usize
    }

    pub fn symbol(&self) -> u8 {
        self.symbol
    }

    /// Word length, `end - start + 2`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        (self.end - self.start) as usize + 2
    }

    pub fn prefix<'t>(&self, text: &'t [u8]) -> &'t [u8] {
        &text[self.start()..=self.end()]
    }

    pub fn word(&self, text: &[u8]) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.len());
        w.extend_from_slice(self.prefix(text));
        w.push(self.symbol);
        w
    }

    fn cmp_words(&self, other: &Self, text: &[u8]) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.prefix(text).cmp(other.prefix(text)))
            .then_with(|| self.symbol.cmp(&other.symbol))
    }
}

/// All minimal absent words of length ≥ 2, sorted by length then word.
pub fn compute_maws(index: &SuffixIndex) -> Vec<MawTuple> {
    let mut maws = Vec::new();
    compute_maws_with(index, |t| maws.push(t));
    sort_maws(index, &mut maws);
    maws
}

/// Minimal absent words of length exactly `k`, sorted by word.
pub fn compute_maws_of_length(index: &SuffixIndex, k: usize) -> Vec<MawTuple> {
    let mut maws = Vec::new();
    compute_maws_with(index, |t| {
        if t.len() == k {
            maws.push(t)
        }
    });
    sort_maws(index, &mut maws);
    maws
}

/// Order-preserving filter on word length.
pub fn maws_of_length(maws: &[MawTuple], k: usize) -> Vec<MawTuple> {
    maws.iter().copied().filter(|t| t.len() == k).collect()
}

pub fn sort_maws(index: &SuffixIndex, maws: &mut [MawTuple]) {
    let text = index.text();
    maws.sort_unstable_by(|a, b| a.cmp_words(b, text));
}

/// Streams every minimal absent word of length ≥ 2 to `emit`, in tree order.
pub fn compute_maws_with(index: &SuffixIndex, mut emit: impl FnMut(MawTuple)) {
    const UNSET: u32 = u32::MAX;

    struct Frame {
        node: NodeId,
        next: Option<NodeId>,
        mask: u128,
        entries_from: usize,
    }

    let text = index.text_with_sentinel();
    let alphabet = index.alphabet();
    let sigma = alphabet.len();
    let rank_of = |b: u8| alphabet.rank(b).expect("text symbol outside alphabet");

    // per frame: leftmost position of each left-extension symbol
    let mut witness: Vec<u32> = vec![UNSET; sigma];
    // per finished child: (edge head, left-extension mask)
    let mut entries: Vec<(u8, u128)> = Vec::new();
    let mut frames = vec![Frame {
        node: index.root(),
        next: index.children(index.root()).next(),
        mask: 0,
        entries_from: 0,
    }];

    while let Some(top) = frames.last_mut() {
        if let Some(c) = top.next {
            top.next = index.next_sibling_of(c);
            if index.is_leaf(c) {
                let p = index.leaf_label(c).unwrap();
                let mut m = 0u128;
                if p > 0 {
                    let a = rank_of(text[p - 1]);
                    m = 1 << a;
                    let slot = &mut witness[(frames.len() - 1) * sigma + a];
                    *slot = (*slot).min(p as u32 - 1);
                }
                let top = frames.last_mut().unwrap();
                top.mask |= m;
                entries.push((index.head(c), m));
            } else {
                witness.resize(witness.len() + sigma, UNSET);
                frames.push(Frame {
                    node: c,
                    next: index.children(c).next(),
                    mask: 0,
                    entries_from: entries.len(),
                });
            }
            continue;
        }

        let done = frames.pop().unwrap();
        let level = frames.len();
        let base = level * sigma;
        let depth = index.depth(done.node) as u32;
        for &(b, child_mask) in &entries[done.entries_from..] {
            if b == SENTINEL {
                continue;
            }
            let mut missing = done.mask & !child_mask;
            while missing != 0 {
                let a = missing.trailing_zeros() as usize;
                missing &= missing - 1;
                let start = witness[base + a];
                emit(MawTuple {
                    start,
                    end: start + depth,
                    symbol: b,
                });
            }
        }
        entries.truncate(done.entries_from);

        if let Some(parent) = frames.last_mut() {
            parent.mask |= done.mask;
            let mut bits = done.mask;
            while bits != 0 {
                let a = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let w = witness[base + a];
                let slot = &mut witness[base - sigma + a];
                *slot = (*slot).min(w);
            }
            entries.push((index.head(done.node), done.mask));
        }
        witness.truncate(base);
    }
}

/// Debug dump, one word per line: `i<TAB>j<TAB>α<TAB>word`.
pub fn write_maws<W: Write>(index: &SuffixIndex, maws: &[MawTuple], mut out: W) -> Result<()> {
    let text = index.text();
    for t in maws {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            t.start(),
            t.end(),
            t.symbol() as char,
            String::from_utf8_lossy(&t.word(text))
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{Alphabet, Sequence};

    fn words(text: &[u8], alphabet: Alphabet) -> Vec<Vec<u8>> {
        let seq = Sequence::new("t", text, alphabet).unwrap();
        let idx = SuffixIndex::build(&seq).unwrap();
        compute_maws(&idx).iter().map(|t| t.word(text)).collect()
    }

    #[test]
    fn baaab() {
        let got = words(b"baaab", Alphabet::new(*b"ab").unwrap());
        let expected: Vec<Vec<u8>> = vec![
            b"bb".to_vec(),
            b"aba".to_vec(),
            b"bab".to_vec(),
            b"aaaa".to_vec(),
            b"baab".to_vec(),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn homopolymer_has_single_maw() {
        let got = words(b"aaaaa", Alphabet::new(*b"a").unwrap());
        assert_eq!(got, vec![b"aaaaaa".to_vec()]);
    }

    #[test]
    fn declared_but_absent_symbols_add_nothing() {
        let declared = words(b"ACCAAC", Alphabet::dna());
        let present = words(b"ACCAAC", Alphabet::new(*b"AC").unwrap());
        assert_eq!(declared, present);
    }

    #[test]
    fn golden_word_contains_agt() {
        let text = b"AGCGCGACGTCTGTGT";
        let seq = Sequence::new("x", &text[..], Alphabet::dna()).unwrap();
        let idx = SuffixIndex::build(&seq).unwrap();
        let maws = compute_maws(&idx);
        let three = maws_of_length(&maws, 3);
        assert!(three.iter().any(|t| t.word(text) == b"AGT"));
        assert!(maws_of_length(&maws, text.len() + 2).is_empty());
        assert_eq!(compute_maws_of_length(&idx, 3), three);
        for t in &maws {
            assert_eq!(&text[t.start()..=t.end()], t.prefix(text));
        }
    }

    #[test]
    fn baaab_length_four() {
        let text = b"baaab";
        let seq = Sequence::with_inferred_alphabet("t", &text[..]).unwrap();
        let idx = SuffixIndex::build(&seq).unwrap();
        let four: Vec<_> = maws_of_length(&compute_maws(&idx), 4)
            .iter()
            .map(|t| t.word(text))
            .collect();
        assert_eq!(four, vec![b"aaaa".to_vec(), b"baab".to_vec()]);
    }

    #[test]
    fn debug_dump_format() {
        let seq = Sequence::with_inferred_alphabet("t", &b"baaab"[..]).unwrap();
        let idx = SuffixIndex::build(&seq).unwrap();
        let mut out = Vec::new();
        write_maws(&idx, &compute_maws(&idx), &mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        assert_eq!(s.lines().next().unwrap(), "0\t0\tb\tbb");
        assert!(s.contains("0\t1\tb\tbab\n"));
    }
}
