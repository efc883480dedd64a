//! Deterministic range enumeration, optionally across worker threads.
//!
//! The candidate range is cut into fixed-size chunks. Workers claim chunk
//! indices from a shared atomic counter, scan their chunks independently,
//! and send results to the caller's thread, which re-assembles them in
//! chunk order before emitting. Output is therefore a function of the
//! search parameters alone: the same solutions in ascending `N` order for
//! any worker count, including one (which runs inline, with no threads).
//!
//! **Candidate convention.** Enumeration scans integers with at least two
//! digits in the radix, i.e. `N ≥ radix`: digit reversal is the identity on
//! single-digit values, so the equations degenerate there (`2³ − 2·2 = 2²`
//! would otherwise qualify). The pointwise [`classify`] decision has no
//! such restriction; [`SearchRange`] clamps the low bound instead, and the
//! reference tables and density counts all follow this convention.
//!
//! Errors inside a chunk (only [`Error::Capacity`] is possible once the
//! range is validated) abort the search deterministically: the error
//! reported is the one from the earliest chunk, after all solutions before
//! that chunk have been emitted.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use crate::equation::{classify, EquationId, Sign, Solution};
use crate::numerics::{to_digits, ExactInt, Radix};
use crate::Error;

/// Which signs of the left-hand side to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignFilter {
    Plus,
    Minus,
    #[default]
    Both,
}

impl SignFilter {
    pub fn admits(self, sign: Sign) -> bool {
        match self {
            SignFilter::Plus => sign == Sign::Plus,
            SignFilter::Minus => sign == Sign::Minus,
            SignFilter::Both => true,
        }
    }
}

/// Number of candidates each worker claims at a time. Large enough that
/// coordination is negligible, small enough to keep workers busy near the
/// end of a range.
pub const DEFAULT_CHUNK_SIZE: u64 = 65_536;

/// A validated enumeration request over `[lo, hi)`.
#[derive(Clone, Debug)]
pub struct SearchRange {
    equation: EquationId,
    radix: Radix,
    lo: ExactInt,
    hi: ExactInt,
    sign_filter: SignFilter,
    chunk_size: u64,
    eleven_sieve: bool,
}

impl SearchRange {
    /// Validates bounds and capacity.
    ///
    /// Requires `1 ≤ lo < hi`, and that `N^p − N·rev(N)` fits the 128-bit
    /// carrier for every candidate below `hi`: writing `w` for the digit
    /// width of `hi − 1`, the product `N·rev(N)` stays below `radix^(p·w)`,
    /// so that power must be representable. Rejecting the range up front
    /// keeps capacity errors out of the hot loop.
    pub fn new(
        equation: EquationId,
        radix: Radix,
        lo: ExactInt,
        hi: ExactInt,
    ) -> Result<Self, Error> {
        if lo < 1 {
            return Err(Error::InvalidRange(format!(
                "low bound must be at least 1, got {lo}"
            )));
        }
        if lo >= hi {
            return Err(Error::InvalidRange(format!(
                "empty range: lo = {lo}, hi = {hi}"
            )));
        }
        let width = to_digits(hi - 1, radix).width() as u32;
        let needed = equation.lhs_exp() * width;
        if radix.as_int().checked_pow(needed).is_none() {
            return Err(Error::capacity(format!(
                "bound {hi} needs base-{radix} powers up to {radix}^{needed} for {equation}"
            )));
        }
        Ok(SearchRange {
            equation,
            radix,
            lo,
            hi,
            sign_filter: SignFilter::Both,
            chunk_size: DEFAULT_CHUNK_SIZE,
            eleven_sieve: false,
        })
    }

    pub fn with_sign_filter(mut self, filter: SignFilter) -> Self {
        self.sign_filter = filter;
        self
    }

    /// Overrides the chunk size (clamped to at least 1). Results do not
    /// depend on it; only scheduling does.
    pub fn with_chunk_size(mut self, chunk_size: u64) -> Self {
        self.chunk_size = chunk_size.max(1);
        self
    }

    /// Enables the base-10 E1 sieve: three-digit candidates not divisible
    /// by 11 are skipped. Sound because `N − rev(N) = 99(a − c)` for
    /// `N = abc`, so `N·99(a−c)` can only be a nonzero square when 11
    /// divides `N`. The flag is ignored for other equations and radices.
    pub fn with_eleven_sieve(mut self, enabled: bool) -> Self {
        self.eleven_sieve = enabled;
        self
    }

    pub fn equation(&self) -> EquationId {
        self.equation
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    pub fn lo(&self) -> ExactInt {
        self.lo
    }

    pub fn hi(&self) -> ExactInt {
        self.hi
    }

    pub fn sign_filter(&self) -> SignFilter {
        self.sign_filter
    }

    /// First candidate actually scanned: `max(lo, radix)`, per the
    /// multi-digit candidate convention.
    pub fn first_candidate(&self) -> ExactInt {
        self.lo.max(self.radix.as_int())
    }

    fn sieve_active(&self) -> bool {
        self.eleven_sieve && self.radix.get() == 10 && self.equation == EquationId::E1
    }
}

/// Cumulative progress of an enumeration, reported after each emitted chunk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    /// Candidates scanned so far.
    pub scanned: u64,
    /// Solutions emitted so far (after sign filtering).
    pub found: u64,
}

/// Scans one chunk sequentially. This is the entire hot path.
fn scan_chunk(range: &SearchRange, chunk_lo: ExactInt, chunk_hi: ExactInt) -> Result<Vec<Solution>, Error> {
    let sieve = range.sieve_active();
    let mut found = Vec::new();
    let mut n = chunk_lo;
    while n < chunk_hi {
        if sieve && (100..1_000).contains(&n) && n % 11 != 0 {
            n += 1;
            continue;
        }
        if let Some(solution) = classify(n, range.radix, range.equation)? {
            if range.sign_filter.admits(solution.sign) {
                found.push(solution);
            }
        }
        n += 1;
    }
    Ok(found)
}

/// Runs the enumeration, streaming solutions in ascending `N` order into
/// `sink` and cumulative progress into `progress` (once per chunk, in
/// chunk order).
///
/// `workers = 1` scans inline on the calling thread; higher counts use
/// scoped worker threads with ordered re-assembly. The emitted sequence is
/// identical either way.
pub fn enumerate_with(
    range: &SearchRange,
    workers: usize,
    mut sink: impl FnMut(Solution),
    mut progress: impl FnMut(Progress),
) -> Result<(), Error> {
    let start = range.first_candidate();
    if start >= range.hi {
        return Ok(());
    }
    let total = (range.hi - start) as u128;
    let chunk = u128::from(range.chunk_size);
    let chunk_count = usize::try_from(total.div_ceil(chunk))
        .map_err(|_| Error::InvalidRange(format!("range of {total} candidates is too large to chunk")))?;
    let workers = workers.max(1).min(chunk_count);

    let chunk_bounds = |index: usize| {
        let lo = start + (index as ExactInt) * (range.chunk_size as ExactInt);
        let hi = range.hi.min(lo + range.chunk_size as ExactInt);
        (lo, hi)
    };

    let mut scanned: u64 = 0;
    let mut found: u64 = 0;
    let mut emit = |result: Vec<Solution>, lo: ExactInt, hi: ExactInt| {
        scanned += (hi - lo) as u64;
        found += result.len() as u64;
        for solution in result {
            sink(solution);
        }
        progress(Progress { scanned, found });
    };

    if workers == 1 {
        for index in 0..chunk_count {
            let (lo, hi) = chunk_bounds(index);
            emit(scan_chunk(range, lo, hi)?, lo, hi);
        }
        return Ok(());
    }

    let next_chunk = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<(usize, Result<Vec<Solution>, Error>)>();

    thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let next_chunk = &next_chunk;
            let stop = &stop;
            scope.spawn(move || loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let index = next_chunk.fetch_add(1, Ordering::Relaxed);
                if index >= chunk_count {
                    break;
                }
                let (lo, hi) = chunk_bounds(index);
                if tx.send((index, scan_chunk(range, lo, hi))).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // Re-assemble in chunk order; buffer chunks that arrive early. On
        // error, emit everything before the earliest failing chunk, then
        // stop the workers and report that error alone.
        let mut pending: BTreeMap<usize, Result<Vec<Solution>, Error>> = BTreeMap::new();
        let mut next_emit = 0usize;
        let mut failure: Option<Error> = None;
        for (index, result) in rx {
            pending.insert(index, result);
            while let Some(result) = pending.remove(&next_emit) {
                let (lo, hi) = chunk_bounds(next_emit);
                match result {
                    Ok(solutions) => emit(solutions, lo, hi),
                    Err(error) => {
                        failure = Some(error);
                        stop.store(true, Ordering::Relaxed);
                    }
                }
                next_emit += 1;
                if failure.is_some() {
                    break;
                }
            }
            if failure.is_some() {
                break;
            }
        }
        match failure {
            Some(error) => Err(error),
            None => Ok(()),
        }
    })
}

/// Runs the enumeration and collects the solutions, in ascending `N` order.
pub fn enumerate(range: &SearchRange, workers: usize) -> Result<Vec<Solution>, Error> {
    let mut out = Vec::new();
    enumerate_with(range, workers, |solution| out.push(solution), |_| {})?;
    Ok(out)
}
