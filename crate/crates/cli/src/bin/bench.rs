//! `avoided-bench`: time the fixed-length pipeline on synthetic sequences and
//! print `n sigma k rho seconds peak_bytes nodes_considered` rows.

use std::io::{self, Write};
use std::process::ExitCode;

use avoided_words::bench::{self, TrackingAllocator};
use clap::Parser;

#[global_allocator]
static ALLOC: TrackingAllocator = TrackingAllocator;

#[derive(Debug, Parser)]
#[command(
    name = "avoided-bench",
    version,
    about = "Scaling harness for avoided-word computation"
)]
#[command(allow_negative_numbers = true)]
struct Args {
    /// Text lengths
    #[arg(long, value_delimiter = ',', default_value = "1000000,2000000,4000000,8000000")]
    n: Vec<usize>,

    /// Alphabet sizes
    #[arg(long, value_delimiter = ',', default_value = "4,20")]
    sigma: Vec<usize>,

    /// Word lengths
    #[arg(short = 'k', value_delimiter = ',', default_value = "8")]
    k: Vec<usize>,

    #[arg(short = 'r', long, default_value_t = -10.0)]
    rho: f64,

    /// Repetitions per configuration (median is reported)
    #[arg(long, default_value_t = 3)]
    reps: usize,

    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let _ = writeln!(out, "{}", bench::TSV_HEADER);
    for &sigma in &args.sigma {
        for &n in &args.n {
            for &k in &args.k {
                match bench::time_run(n, sigma, k, args.rho, args.reps, args.seed) {
                    Ok(record) => {
                        if record.write_tsv_row(&mut out).is_err() {
                            return ExitCode::from(2);
                        }
                        let _ = out.flush();
                    }
                    Err(e) => {
                        eprintln!("avoided-bench: {e}");
                        return ExitCode::from(1);
                    }
                }
            }
        }
    }
    ExitCode::SUCCESS
}
