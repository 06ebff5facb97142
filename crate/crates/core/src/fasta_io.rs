//! Multi-FASTA input and tab-separated reports.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::avoided::AvoidedWord;
use crate::dna;
use crate::error::{Error, Result};
use crate::num::Real;
use crate::sequence::{Alphabet, Sequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetMode {
    /// `ACGT`
    Dna,
    /// The twenty standard amino acids.
    Protein,
    /// The distinct symbols of each record.
    Auto,
}

/// What to do with a symbol outside the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguousMode {
    Reject,
    SkipRecord,
    /// Cut the record at every maximal run of ambiguous symbols; segments are
    /// numbered `id_1`, `id_2`, ...
    Split,
}

/// Symbols are always upper-cased.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InputPolicy {
    pub alphabet: AlphabetMode,
    pub ambiguous: AmbiguousMode,
}

impl Default for InputPolicy {
    fn default() -> Self {
        InputPolicy {
            alphabet: AlphabetMode::Dna,
            ambiguous: AmbiguousMode::Split,
        }
    }
}

struct Record {
    id: String,
    line: usize,
    data: Vec<u8>,
    // first ambiguous symbol: (position, line)
    first_ambiguous: Option<(usize, usize)>,
}

pub fn read_fasta_path(path: impl AsRef<Path>, policy: &InputPolicy) -> Result<Vec<Sequence>> {
    read_fasta(BufReader::new(File::open(path)?), policy)
}

pub fn read_fasta<R: BufRead>(mut reader: R, policy: &InputPolicy) -> Result<Vec<Sequence>> {
    let fixed = match policy.alphabet {
        AlphabetMode::Dna => Some(Alphabet::dna()),
        AlphabetMode::Protein => Some(Alphabet::protein()),
        AlphabetMode::Auto => None,
    };
    let mut out = Vec::new();
    let mut current: Option<Record> = None;
    let mut buf = Vec::new();
    let mut line_no = 0;

    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        while matches!(buf.last(), Some(b'\n' | b'\r')) {
            buf.pop();
        }
        if let Some(header) = buf.strip_prefix(b">") {
            if let Some(done) = current.take() {
                finish_record(done, fixed.as_ref(), policy, &mut out)?;
            }
            let header = String::from_utf8_lossy(header);
            let id = header.split_whitespace().next().unwrap_or("");
            if id.is_empty() {
                return Err(Error::Fasta {
                    line: line_no,
                    message: "header has no identifier".into(),
                });
            }
            current = Some(Record {
                id: id.to_string(),
                line: line_no,
                data: Vec::new(),
                first_ambiguous: None,
            });
            continue;
        }
        if buf.starts_with(b";") {
            continue;
        }
        let Some(record) = current.as_mut() else {
            if buf.iter().all(|b| b.is_ascii_whitespace()) {
                continue;
            }
            return Err(Error::Fasta {
                line: line_no,
                message: "sequence data before the first header".into(),
            });
        };
        for &b in buf.iter().filter(|b| !b.is_ascii_whitespace()) {
            if !b.is_ascii_graphic() {
                return Err(Error::Fasta {
                    line: line_no,
                    message: format!("non-printable byte 0x{b:02x}"),
                });
            }
            let b = b.to_ascii_uppercase();
            let allowed = fixed.as_ref().is_none_or(|a| a.contains(b));
            if !allowed && record.first_ambiguous.is_none() {
                record.first_ambiguous = Some((record.data.len(), line_no));
            }
            record.data.push(b);
        }
    }
    if let Some(done) = current.take() {
        finish_record(done, fixed.as_ref(), policy, &mut out)?;
    }
    Ok(out)
}

fn finish_record(
    record: Record,
    fixed: Option<&Alphabet>,
    policy: &InputPolicy,
    out: &mut Vec<Sequence>,
) -> Result<()> {
    if record.data.is_empty() {
        return Err(Error::Fasta {
            line: record.line,
            message: format!("record {} has no sequence data", record.id),
        });
    }
    let Some(alphabet) = fixed else {
        out.push(Sequence::with_inferred_alphabet(record.id, record.data)?);
        return Ok(());
    };
    let Some((position, line)) = record.first_ambiguous else {
        out.push(Sequence::new(record.id, record.data, alphabet.clone())?);
        return Ok(());
    };
    match policy.ambiguous {
        AmbiguousMode::Reject => Err(Error::Fasta {
            line,
            message: format!(
                "symbol {:?} at position {position} of record {} is not in the alphabet",
                record.data[position] as char, record.id
            ),
        }),
        AmbiguousMode::SkipRecord => Ok(()),
        AmbiguousMode::Split => {
            let segments = record.data.split(|&b| !alphabet.contains(b)).filter(|s| !s.is_empty());
            for (ordinal, segment) in segments.enumerate() {
                out.push(Sequence::new(
                    format!("{}_{}", record.id, ordinal + 1),
                    segment,
                    alphabet.clone(),
                )?);
            }
            Ok(())
        }
    }
}

/// Writes records with 60 symbols per line.
pub fn write_fasta<W: Write>(sequences: &[Sequence], mut out: W) -> Result<()> {
    for s in sequences {
        writeln!(out, ">{}", s.id())?;
        for line in s.data().chunks(60) {
            out.write_all(line)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Decimal places of `E` and `std`.
    pub precision: usize,
    /// Append a `palindrome` column (`yes`/`no`); DNA words only.
    pub mark_palindromes: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            precision: 6,
            mark_palindromes: false,
        }
    }
}

pub fn write_report_header<W: Write>(mut out: W, options: &ReportOptions) -> Result<()> {
    out.write_all(b"# word\tlength\tclass\tf\tE\tstd")?;
    if options.mark_palindromes {
        out.write_all(b"\tpalindrome")?;
    }
    out.write_all(b"\n")?;
    Ok(())
}

/// One `>id` line followed by a row per word.
pub fn write_report_block<W: Write, F: Real>(
    mut out: W,
    id: &str,
    words: &[AvoidedWord<F>],
    options: &ReportOptions,
) -> Result<()> {
    writeln!(out, ">{id}")?;
    let p = options.precision;
    for w in words {
        out.write_all(&w.word)?;
        write!(
            out,
            "\t{}\t{}\t{}\t{:.p$}\t{:.p$}",
            w.word.len(),
            w.class.as_str(),
            w.stats.f,
            w.stats.expected,
            w.stats.std,
        )?;
        if options.mark_palindromes {
            let flag = if dna::is_self_complementary(&w.word)? {
                "yes"
            } else {
                "no"
            };
            write!(out, "\t{flag}")?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_report<W: Write, F: Real>(
    results: &[(String, Vec<AvoidedWord<F>>)],
    mut out: W,
    options: &ReportOptions,
) -> Result<()> {
    write_report_header(&mut out, options)?;
    for (id, words) in results {
        write_report_block(&mut out, id, words, options)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(input: &str, alphabet: AlphabetMode, ambiguous: AmbiguousMode) -> Result<Vec<Sequence>> {
        read_fasta(input.as_bytes(), &InputPolicy { alphabet, ambiguous })
    }

    #[test]
    fn canonical_record_is_upper_cased() {
        let s = read(">s1\nacgt\n", AlphabetMode::Dna, AmbiguousMode::Reject).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].id(), "s1");
        assert_eq!(s[0].data(), b"ACGT");
        assert_eq!(s[0].alphabet(), &Alphabet::dna());
    }

    #[test]
    fn split_at_ambiguous() {
        let s = read(">s1\nACGTNNACG\n", AlphabetMode::Dna, AmbiguousMode::Split).unwrap();
        let got: Vec<_> = s.iter().map(|s| (s.id(), s.data())).collect();
        assert_eq!(got, vec![("s1_1", &b"ACGT"[..]), ("s1_2", &b"ACG"[..])]);
        assert!(read(">s\nNNN\n", AlphabetMode::Dna, AmbiguousMode::Split)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn records_keep_file_order_and_multiline_data() {
        let s = read(
            ">b desc\nAC\nGT\n\n>a\r\nTT\r\n",
            AlphabetMode::Dna,
            AmbiguousMode::Reject,
        )
        .unwrap();
        assert_eq!(s[0].id(), "b");
        assert_eq!(s[0].data(), b"ACGT");
        assert_eq!(s[1].id(), "a");
        assert_eq!(s[1].data(), b"TT");
    }

    #[test]
    fn reject_names_symbol_and_position() {
        let err = read(">s\nACGT\nACNT\n", AlphabetMode::Dna, AmbiguousMode::Reject).unwrap_err();
        match err {
            Error::Fasta { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("'N'") && message.contains("position 6"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn skip_and_auto_modes() {
        let s = read(">a\nACNT\n>b\nAC\n", AlphabetMode::Dna, AmbiguousMode::SkipRecord).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].id(), "b");
        let s = read(">p\nmkvl\n", AlphabetMode::Auto, AmbiguousMode::Reject).unwrap();
        assert_eq!(s[0].alphabet().symbols(), b"KLMV");
        let s = read(">p\nMKVLB\n", AlphabetMode::Protein, AmbiguousMode::Split).unwrap();
        assert_eq!(s[0].data(), b"MKVL");
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(
            read("ACGT\n>s\nA\n", AlphabetMode::Dna, AmbiguousMode::Reject),
            Err(Error::Fasta { line: 1, .. })
        ));
        assert!(matches!(
            read(">\nA\n", AlphabetMode::Dna, AmbiguousMode::Reject),
            Err(Error::Fasta { line: 1, .. })
        ));
        assert!(matches!(
            read(">a\n>b\nA\n", AlphabetMode::Dna, AmbiguousMode::Reject),
            Err(Error::Fasta { line: 1, .. })
        ));
    }

    #[test]
    fn empty_block_still_has_id_line() {
        let mut out = Vec::new();
        let results: Vec<(String, Vec<AvoidedWord<f64>>)> = vec![("s".into(), vec![])];
        write_report(&results, &mut out, &ReportOptions::default()).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "# word\tlength\tclass\tf\tE\tstd\n>s\n"
        );
    }
}
