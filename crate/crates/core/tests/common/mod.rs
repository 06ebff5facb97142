#![allow(dead_code)]

use avoided_words::{Alphabet, Sequence};
use proptest::prelude::*;
use rand::Rng;

pub fn letters(sigma: usize) -> Vec<u8> {
    (b'a'..b'a' + sigma as u8).collect()
}

pub fn seq(text: &[u8], sigma: usize) -> Sequence {
    Sequence::new("t", text, Alphabet::new(letters(sigma)).unwrap()).unwrap()
}

pub fn random_text(rng: &mut impl Rng, n: usize, sigma: usize) -> Vec<u8> {
    (0..n).map(|_| b'a' + rng.random_range(0..sigma) as u8).collect()
}

/// `b a^(n-2) b`
pub fn binary_family(n: usize) -> Vec<u8> {
    let mut x = vec![b'b'];
    x.extend(std::iter::repeat_n(b'a', n - 2));
    x.push(b'b');
    x
}

/// `a2 a1^k a3 a1^k ... aσ a1^k a1^(n-(σ-1)(k+1))` with `k = ⌊n/(σ-1)⌋ - 1`.
pub fn multi_family(n: usize, sigma: usize) -> Vec<u8> {
    let k = n / (sigma - 1) - 1;
    let mut x = Vec::with_capacity(n);
    for i in 1..sigma {
        x.push(b'a' + i as u8);
        x.extend(std::iter::repeat_n(b'a', k));
    }
    x.extend(std::iter::repeat_n(b'a', n - (sigma - 1) * (k + 1)));
    x
}

/// A text over the first `sigma` letters with length in `1..=max_len`.
pub fn text_strategy(sigma: usize, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..sigma as u8, 1..=max_len).prop_map(|v| v.into_iter().map(|c| b'a' + c).collect())
}

/// Text together with its alphabet size, σ ∈ {2, 4}.
pub fn text_and_sigma(max_len: usize) -> impl Strategy<Value = (Vec<u8>, usize)> {
    prop_oneof![Just(2usize), Just(4usize)].prop_flat_map(move |s| (text_strategy(s, max_len), Just(s)))
}
