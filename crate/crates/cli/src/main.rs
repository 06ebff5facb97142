//! `avoided-words`: report the ρ-avoided words of every record in a FASTA file.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use avoided_words::avoided::{self, AvoidedWord};
use avoided_words::fasta_io::{self, AlphabetMode, AmbiguousMode, InputPolicy, ReportOptions};
use avoided_words::{maw, Error, Params, Sequence, SuffixIndex};
use clap::{Parser, ValueEnum};
use rayon::prelude::*;

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlphabetArg {
    Dna,
    Protein,
    Auto,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AmbiguousArg {
    Reject,
    Skip,
    Split,
}

#[derive(Debug, Parser)]
#[command(
    name = "avoided-words",
    version,
    about = "Compute rho-avoided words of FASTA records"
)]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Input (Multi)FASTA file
    #[arg(short = 'i', long = "input")]
    input: PathBuf,

    /// Report destination (default: stdout)
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,

    /// Word length, > 2
    #[arg(short = 'k', conflicts_with = "all_lengths")]
    k: Option<usize>,

    /// Threshold, < 0
    #[arg(short = 'r', long = "rho", allow_hyphen_values = true)]
    rho: f64,

    /// Report avoided words of every length >= 3
    #[arg(long)]
    all_lengths: bool,

    #[arg(long, value_enum, default_value = "dna")]
    alphabet: AlphabetArg,

    /// Handling of symbols outside the alphabet
    #[arg(long, value_enum, default_value = "split")]
    ambiguous: AmbiguousArg,

    /// Flag self-complementary words (dna only)
    #[arg(long)]
    mark_palindromes: bool,

    /// Records processed concurrently; output keeps input order
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Decimal places for E and std
    #[arg(long, default_value_t = 6)]
    precision: usize,

    /// Also write every minimal absent word (i, j, symbol, word) to this file
    #[arg(long)]
    dump_maws: Option<PathBuf>,
}

enum Mode {
    Fixed(Params),
    AllLengths(f64),
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Consistency(_) | Error::NoSuffixLink(_) | Error::FactorOutOfRange { .. } => EXIT_INTERNAL,
            Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("avoided-words: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn mode(cli: &Cli) -> Result<Mode, Failure> {
    if cli.rho.is_nan() || cli.rho >= 0.0 {
        return Err(Failure::usage(format!("rho must be negative, got {}", cli.rho)));
    }
    if cli.all_lengths {
        return Ok(Mode::AllLengths(cli.rho));
    }
    let k = cli
        .k
        .ok_or_else(|| Failure::usage("-k is required unless --all-lengths is given"))?;
    if k <= 2 {
        return Err(Failure::usage(format!("k must be greater than 2, got {k}")));
    }
    Ok(Mode::Fixed(Params::new(k, cli.rho)?))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mode = mode(cli)?;
    if cli.threads == 0 {
        return Err(Failure::usage("--threads must be at least 1"));
    }
    let alphabet = match cli.alphabet {
        AlphabetArg::Dna => AlphabetMode::Dna,
        AlphabetArg::Protein => AlphabetMode::Protein,
        AlphabetArg::Auto => AlphabetMode::Auto,
    };
    if cli.mark_palindromes && alphabet != AlphabetMode::Dna {
        return Err(Failure::usage("--mark-palindromes requires --alphabet dna"));
    }
    let policy = InputPolicy {
        alphabet,
        ambiguous: match cli.ambiguous {
            AmbiguousArg::Reject => AmbiguousMode::Reject,
            AmbiguousArg::Skip => AmbiguousMode::SkipRecord,
            AmbiguousArg::Split => AmbiguousMode::Split,
        },
    };
    let options = ReportOptions {
        precision: cli.precision,
        mark_palindromes: cli.mark_palindromes,
    };

    let sequences = fasta_io::read_fasta_path(&cli.input, &policy)?;
    if sequences.is_empty() {
        eprintln!("avoided-words: no sequences in {}", cli.input.display());
    }

    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut maw_out = match &cli.dump_maws {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    fasta_io::write_report_header(&mut out, &options)?;

    if cli.threads == 1 {
        for seq in &sequences {
            let (words, maws) = process(seq, &mode, maw_out.is_some())?;
            if let (Some(w), Some(dump)) = (maw_out.as_mut(), maws) {
                w.write_all(&dump)?;
            }
            fasta_io::write_report_block(&mut out, seq.id(), &words, &options)?;
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build()
            .map_err(|e| Failure::usage(e.to_string()))?;
        for batch in sequences.chunks(cli.threads) {
            let results: Vec<_> = pool.install(|| {
                batch
                    .par_iter()
                    .map(|seq| process(seq, &mode, maw_out.is_some()))
                    .collect()
            });
            for (seq, result) in batch.iter().zip(results) {
                let (words, maws) = result?;
                if let (Some(w), Some(dump)) = (maw_out.as_mut(), maws) {
                    w.write_all(&dump)?;
                }
                fasta_io::write_report_block(&mut out, seq.id(), &words, &options)?;
            }
        }
    }
    out.flush()?;
    if let Some(mut w) = maw_out {
        w.flush()?;
    }
    Ok(())
}

type Processed = (Vec<AvoidedWord<f64>>, Option<Vec<u8>>);

fn process(seq: &Sequence, mode: &Mode, dump_maws: bool) -> Result<Processed, Failure> {
    if !dump_maws {
        let words = match mode {
            Mode::Fixed(params) => avoided::avoided_words_in(seq, params)?,
            Mode::AllLengths(rho) => avoided::all_avoided_in(seq, *rho)?,
        };
        return Ok((words, None));
    }
    let index = SuffixIndex::build(seq)?;
    let maws = maw::compute_maws(&index);
    let mut dump = format!(">{}\n", seq.id()).into_bytes();
    maw::write_maws(&index, &maws, &mut dump)?;
    let words = match mode {
        Mode::Fixed(params) => avoided::avoided_words(&index, &maws, params)?,
        Mode::AllLengths(rho) => avoided::all_avoided(&index, &maws, *rho)?,
    };
    Ok((words, Some(dump)))
}
