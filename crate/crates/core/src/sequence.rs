use std::fmt;

use crate::error::{Error, Result};

const NO_RANK: u8 = u8::MAX;

/// Ordered set of permitted symbols (graphic ASCII, at most 128 of them).
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    rank: [u8; 256],
}

impl Alphabet {
    pub const MAX_SIZE: usize = 128;

    pub fn new(symbols: impl IntoIterator<Item = u8>) -> Result<Self> {
        let mut symbols: Vec<u8> = symbols.into_iter().collect();
        symbols.sort_unstable();
        symbols.dedup();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if symbols.len() > Self::MAX_SIZE {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols exceed the maximum of {}",
                symbols.len(),
                Self::MAX_SIZE
            )));
        }
        if let Some(&bad) = symbols.iter().find(|b| !b.is_ascii_graphic()) {
            return Err(Error::InvalidAlphabet(format!(
                "symbol 0x{bad:02x} is not a graphic ASCII character"
            )));
        }
        let mut rank = [NO_RANK; 256];
        for (r, &s) in symbols.iter().enumerate() {
            rank[s as usize] = r as u8;
        }
        Ok(Self { symbols, rank })
    }

    pub fn dna() -> Self {
        Self::new(*b"ACGT").unwrap()
    }

    /// The twenty standard amino acids.
    pub fn protein() -> Self {
        Self::new(*b"ACDEFGHIKLMNPQRSTVWY").unwrap()
    }

    /// Distinct symbols of `text`.
    pub fn from_text(text: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &b in text {
            seen[b as usize] = true;
        }
        Self::new((0..=255u8).filter(|&b| seen[b as usize]))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.rank[symbol as usize] != NO_RANK
    }

    /// Position of `symbol` in the ordered alphabet.
    #[inline]
    pub fn rank(&self, symbol: u8) -> Option<usize> {
        match self.rank[symbol as usize] {
            NO_RANK => None,
            r => Some(r as usize),
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", String::from_utf8_lossy(&self.symbols))
    }
}

/// A text over an explicit alphabet, with an identifier.
#[derive(Clone, PartialEq, Eq)]
pub struct Sequence {
    id: String,
    data: Vec<u8>,
    alphabet: Alphabet,
}

impl Sequence {
    /// Fails if some symbol of `data` is outside `alphabet`.
    pub fn new(id: impl Into<String>, data: impl Into<Vec<u8>>, alphabet: Alphabet) -> Result<Self> {
        let data = data.into();
        if let Some(position) = data.iter().position(|&b| !alphabet.contains(b)) {
            return Err(Error::SymbolNotInAlphabet {
                symbol: data[position] as char,
                position,
            });
        }
        Ok(Self {
            id: id.into(),
            data,
            alphabet,
        })
    }

    /// Uses the distinct symbols of `data` as the alphabet.
    pub fn with_inferred_alphabet(id: impl Into<String>, data: impl Into<Vec<u8>>) -> Result<Self> {
        let data = data.into();
        let alphabet = Alphabet::from_text(&data)?;
        Ok(Self {
            id: id.into(),
            data,
            alphabet,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Sequence")
            .field("id", &self.id)
            .field("data", &String::from_utf8_lossy(&self.data))
            .field("alphabet", &self.alphabet)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_is_sorted_and_ranked() {
        let a = Alphabet::new(*b"TGCA").unwrap();
        assert_eq!(a.symbols(), b"ACGT");
        assert_eq!(a.rank(b'G'), Some(2));
        assert_eq!(a.rank(b'N'), None);
    }

    #[test]
    fn alphabet_rejects_empty_and_control_bytes() {
        assert!(Alphabet::new([]).is_err());
        assert!(Alphabet::new([b'A', 0]).is_err());
        assert!(Alphabet::new(*b"A ").is_err());
    }

    #[test]
    fn sequence_checks_membership() {
        let err = Sequence::new("s", *b"ACGN", Alphabet::dna()).unwrap_err();
        assert!(matches!(
            err,
            Error::SymbolNotInAlphabet {
                symbol: 'N',
                position: 3
            }
        ));
        let s = Sequence::with_inferred_alphabet("s", *b"baaab").unwrap();
        assert_eq!(s.alphabet().symbols(), b"ab");
    }
}
