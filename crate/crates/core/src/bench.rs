//! Synthetic data and a timing/memory harness for scaling experiments.
//!
//! Sequences are drawn i.i.d. uniform from the first `sigma` capital letters
//! with the ChaCha8 generator ([`PRNG`]), so a `(n, sigma, seed)` triple gives
//! the same text on every platform.
//!
//! Peak memory comes from [`TrackingAllocator`] when the running binary
//! installs it as its global allocator:
//!
//! ```ignore
//! #[global_allocator]
//! static ALLOC: avoided_words::bench::TrackingAllocator = avoided_words::bench::TrackingAllocator;
//! ```
//!
//! Otherwise a structural estimate (index plus minimal absent words plus
//! output) is reported.

use std::alloc::{GlobalAlloc, Layout, System};
use std::io::Write;
use std::mem::size_of;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::avoided::{self, AvoidedWord, Params};
use crate::error::{Error, Result};
use crate::sequence::{Alphabet, Sequence};

/// Identifier of the generator behind [`generate`].
pub const PRNG: &str = "ChaCha8";

pub fn generate(n: usize, sigma: usize, seed: u64) -> Result<Sequence> {
    if n == 0 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    if !(2..=26).contains(&sigma) {
        return Err(Error::InvalidParameter(format!("sigma must be in 2..=26, got {sigma}")));
    }
    let letters: Vec<u8> = (b'A'..b'A' + sigma as u8).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<u8> = (0..n).map(|_| letters[rng.random_range(0..sigma)]).collect();
    Sequence::new(
        format!("random_n{n}_s{sigma}_seed{seed}"),
        data,
        Alphabet::new(letters)?,
    )
}

static CURRENT: AtomicUsize = AtomicUsize::new(0);
static PEAK: AtomicUsize = AtomicUsize::new(0);
static ACTIVE: AtomicBool = AtomicBool::new(false);

/// System allocator wrapper that records live and peak heap bytes.
pub struct TrackingAllocator;

impl TrackingAllocator {
    fn grow(size: usize) {
        let now = CURRENT.fetch_add(size, Ordering::Relaxed) + size;
        PEAK.fetch_max(now, Ordering::Relaxed);
    }
}

unsafe impl GlobalAlloc for TrackingAllocator {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            ACTIVE.store(true, Ordering::Relaxed);
            Self::grow(layout.size());
        }
        p
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc_zeroed(layout);
        if !p.is_null() {
            ACTIVE.store(true, Ordering::Relaxed);
            Self::grow(layout.size());
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        CURRENT.fetch_sub(layout.size(), Ordering::Relaxed);
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = System.realloc(ptr, layout, new_size);
        if !p.is_null() {
            if new_size >= layout.size() {
                Self::grow(new_size - layout.size());
            } else {
                CURRENT.fetch_sub(layout.size() - new_size, Ordering::Relaxed);
            }
        }
        p
    }
}

pub fn tracking_active() -> bool {
    ACTIVE.load(Ordering::Relaxed)
}

pub fn current_heap_bytes() -> usize {
    CURRENT.load(Ordering::Relaxed)
}

pub fn peak_heap_bytes() -> usize {
    PEAK.load(Ordering::Relaxed)
}

/// Restarts peak tracking from the current live size.
pub fn reset_peak() {
    PEAK.store(CURRENT.load(Ordering::Relaxed), Ordering::Relaxed);
}

#[derive(Clone, Debug, PartialEq)]
pub struct TimingRecord {
    pub n: usize,
    pub sigma: usize,
    pub k: usize,
    pub rho: f64,
    /// Median wall time of the pipeline, generation excluded.
    pub seconds: f64,
    /// Largest heap growth over a repetition, or the structural estimate.
    pub peak_bytes: usize,
    pub nodes_considered: usize,
    pub words_reported: usize,
}

pub const TSV_HEADER: &str = "n\tsigma\tk\trho\tseconds\tpeak_bytes\tnodes_considered";

impl TimingRecord {
    pub fn write_tsv_row<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{:.6}\t{}\t{}",
            self.n, self.sigma, self.k, self.rho, self.seconds, self.peak_bytes, self.nodes_considered
        )?;
        Ok(())
    }
}

/// Runs the fixed-length pipeline `repetitions` times on one generated text.
pub fn time_run(n: usize, sigma: usize, k: usize, rho: f64, repetitions: usize, seed: u64) -> Result<TimingRecord> {
    let params = Params::new(k, rho)?;
    let seq = generate(n, sigma, seed)?;
    let mut times = Vec::with_capacity(repetitions.max(1));
    let mut peak = 0;
    let mut last = None;
    for _ in 0..repetitions.max(1) {
        let baseline = current_heap_bytes();
        reset_peak();
        let started = Instant::now();
        let (words, diag) = avoided::avoided_words_traced(&seq, &params)?;
        times.push(started.elapsed().as_secs_f64());
        let measured = if tracking_active() {
            peak_heap_bytes().saturating_sub(baseline)
        } else {
            diag.index_bytes + words.capacity() * size_of::<AvoidedWord<f64>>()
        };
        peak = peak.max(measured);
        last = Some((words.len(), diag));
    }
    times.sort_by(f64::total_cmp);
    let (words_reported, diag) = last.unwrap();
    Ok(TimingRecord {
        n,
        sigma,
        k,
        rho,
        seconds: times[times.len() / 2],
        peak_bytes: peak,
        nodes_considered: diag.nodes_considered,
        words_reported,
    })
}
