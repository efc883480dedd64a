//! Subcommand implementations. Each returns the process exit code on
//! success-path completion; library errors bubble up and are mapped to
//! exit codes by the binary.

use std::io::IsTerminal;
use std::time::{Duration, Instant};

use revpow::density::{count_solutions_with, DensityReport};
use revpow::families::FamilySpec;
use revpow::search::{enumerate_with, Progress, SearchRange};
use revpow::{classify, lhs_value, EquationId, Error, ExactInt, Radix, SignFilter, Solution};

use crate::exit_codes;
use crate::output::{Format, OutputRecord, Sink};
use crate::tables::{self, ReferenceTable};

/// Resolves the worker count: explicit flag, then the `REVPOW_WORKERS`
/// environment variable, then available parallelism.
pub fn resolve_workers(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(w) = flag {
        return Ok(w.max(1));
    }
    if let Ok(raw) = std::env::var("REVPOW_WORKERS") {
        let parsed: usize = raw
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("REVPOW_WORKERS=`{raw}` is not a worker count")))?;
        return Ok(parsed.max(1));
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Progress reporter for long scans: writes to standard error only when it
/// is a terminal, at most ~10 updates per second.
fn progress_reporter(total: u64) -> impl FnMut(Progress) {
    let show = std::io::stderr().is_terminal();
    let mut last_print = Instant::now();
    let mut printed = false;
    move |p: Progress| {
        if !show {
            return;
        }
        let done = p.scanned >= total;
        if done || last_print.elapsed() >= Duration::from_millis(100) {
            eprint!("\r{} / {total} scanned, {} found", p.scanned, p.found);
            if done {
                eprintln!();
            }
            last_print = Instant::now();
            printed = true;
        }
        let _ = printed;
    }
}

fn scan_total(range: &SearchRange) -> u64 {
    (range.hi() - range.first_candidate()).max(0) as u64
}

pub struct SearchParams {
    pub equation: EquationId,
    pub radix: Radix,
    pub lo: ExactInt,
    pub hi: ExactInt,
    pub sign: SignFilter,
    pub format: Format,
    pub workers: usize,
    pub sieve: bool,
    pub chunk_size: u64,
}

pub fn run_search(params: &SearchParams) -> Result<i32, Error> {
    let range = SearchRange::new(params.equation, params.radix, params.lo, params.hi)?
        .with_sign_filter(params.sign)
        .with_chunk_size(params.chunk_size)
        .with_eleven_sieve(params.sieve);
    let mut sink = Sink::new(params.format);
    let mut progress = progress_reporter(scan_total(&range));
    enumerate_with(
        &range,
        params.workers,
        |solution| sink.push(OutputRecord::from_solution(&solution)),
        &mut progress,
    )?;
    sink.finish();
    Ok(exit_codes::OK)
}

pub fn run_verify(n: ExactInt, equation: EquationId, radix: Radix) -> Result<i32, Error> {
    if n < 1 {
        return Err(Error::InvalidInput(format!(
            "candidates are positive integers, got {n}"
        )));
    }
    match classify(n, radix, equation)? {
        Some(solution) => {
            println!("{}", OutputRecord::from_solution(&solution).identity());
            Ok(exit_codes::OK)
        }
        None => {
            let lhs = lhs_value(n, radix, equation)?;
            println!(
                "not a solution: {n}^{p} - {n}·rev({n}) = {lhs} is not ±n^{q} for any n ≥ 1 (base {radix})",
                p = equation.lhs_exp(),
                q = equation.rhs_exp(),
            );
            Ok(exit_codes::NOT_A_SOLUTION)
        }
    }
}

pub enum FamilyRequest {
    E1Concat {
        seed: ExactInt,
        copies: std::ops::RangeInclusive<u32>,
        block_width: Option<usize>,
    },
    E2Power { k: std::ops::RangeInclusive<u32> },
    E3PalindromePower { k: std::ops::RangeInclusive<u32> },
}

pub fn run_families(request: &FamilyRequest, radix: Radix, format: Format) -> Result<i32, Error> {
    let mut members: Vec<Solution> = Vec::new();
    match request {
        FamilyRequest::E1Concat {
            seed,
            copies,
            block_width,
        } => {
            for c in copies.clone() {
                members.push(
                    FamilySpec::E1Concat {
                        radix,
                        seed: *seed,
                        block_width: *block_width,
                        copies: c,
                    }
                    .generate()?,
                );
            }
        }
        FamilyRequest::E2Power { k } => {
            for k in k.clone() {
                members.push(FamilySpec::E2Power { radix, k }.generate()?);
            }
        }
        FamilyRequest::E3PalindromePower { k } => {
            for k in k.clone() {
                members.push(FamilySpec::E3PalindromePower { radix, k }.generate()?);
            }
        }
    }
    let mut sink = Sink::new(format);
    for member in &members {
        sink.push(OutputRecord::from_solution(member));
    }
    sink.finish();
    Ok(exit_codes::OK)
}

fn format_float(x: f64) -> String {
    format!("{x:.4}")
}

pub fn run_density(
    equation: EquationId,
    radix: Radix,
    checkpoints: &[ExactInt],
    workers: usize,
    format: Format,
) -> Result<i32, Error> {
    let top = checkpoints.last().copied().unwrap_or(0);
    let total = if top > radix.as_int() {
        (top - radix.as_int()) as u64
    } else {
        0
    };
    let report = count_solutions_with(equation, radix, checkpoints, workers, progress_reporter(total))?;
    print_density(&report, format);
    Ok(exit_codes::OK)
}

fn print_density(report: &DensityReport, format: Format) {
    let rows: Vec<(String, u64, f64, f64)> = report
        .checkpoints
        .iter()
        .map(|c| {
            let ratio = c.observed as f64 / c.predicted;
            (c.bound.to_string(), c.observed, c.predicted, ratio)
        })
        .collect();
    match format {
        Format::Table => {
            println!(
                "solution density: eq {}, base {}",
                report.equation.index(),
                report.radix
            );
            let bound_width = rows
                .iter()
                .map(|r| r.0.len())
                .chain(["bound".len()])
                .max()
                .unwrap();
            println!("{:>bound_width$}  {:>8}  {:>10}  {:>8}", "bound", "observed", "predicted", "ratio");
            for (bound, observed, predicted, ratio) in &rows {
                println!(
                    "{bound:>bound_width$}  {observed:>8}  {:>10}  {:>8}",
                    format_float(*predicted),
                    format_float(*ratio)
                );
            }
            println!("note: {}", report.heuristic_note);
        }
        Format::Tsv => {
            println!("bound\tobserved\tpredicted\tratio");
            for (bound, observed, predicted, ratio) in &rows {
                println!("{bound}\t{observed}\t{}\t{}", format_float(*predicted), format_float(*ratio));
            }
            eprintln!("note: {}", report.heuristic_note);
        }
        Format::Jsonl => {
            #[derive(serde::Serialize)]
            struct DensityRow<'a> {
                eq: u8,
                base: u32,
                bound: &'a str,
                observed: u64,
                predicted: f64,
                ratio: f64,
            }
            for (bound, observed, predicted, ratio) in &rows {
                let row = DensityRow {
                    eq: report.equation.index(),
                    base: report.radix.get(),
                    bound,
                    observed: *observed,
                    predicted: *predicted,
                    ratio: *ratio,
                };
                println!("{}", serde_json::to_string(&row).expect("density rows serialize"));
            }
            eprintln!("note: {}", report.heuristic_note);
        }
    }
}

/// Desk-scale bound cut applied by `reproduce --fast`.
pub const FAST_BOUND: ExactInt = 1_000_000;

pub fn run_reproduce(table_name: &str, fast: bool, workers: usize) -> Result<i32, Error> {
    let Some(table) = tables::find(table_name) else {
        return Err(Error::InvalidInput(format!(
            "unknown table `{table_name}` (expected one of: {})",
            tables::names().join(", ")
        )));
    };
    let bound = if fast {
        table.bound.min(FAST_BOUND)
    } else {
        table.bound
    };
    let expected: Vec<_> = table.rows.iter().filter(|r| r.n < bound).collect();

    let radix = Radix::new(table.base)?;
    let equation = EquationId::from_index(table.equation)?;
    let range = SearchRange::new(equation, radix, 1, bound)?;
    let mut found: Vec<Solution> = Vec::new();
    enumerate_with(
        &range,
        workers,
        |s| found.push(s),
        progress_reporter(scan_total(&range)),
    )?;

    let (matched, problems) = diff_rows(table, &expected, &found);
    let scope = if fast { " (fast cut)" } else { "" };
    if problems == 0 && matched == expected.len() {
        println!(
            "{}: PASS, {matched}/{} rows{scope}",
            table.name,
            expected.len()
        );
        Ok(exit_codes::OK)
    } else {
        println!(
            "{}: FAIL, {matched}/{} rows matched, {problems} problem(s){scope}",
            table.name,
            expected.len()
        );
        Ok(exit_codes::REPRODUCTION_MISMATCH)
    }
}

/// Prints one line per expected row plus lines for any unexpected finds;
/// returns `(matched, problems)`.
fn diff_rows(
    table: &ReferenceTable,
    expected: &[&tables::ExpectedRow],
    found: &[Solution],
) -> (usize, usize) {
    let mut matched = 0usize;
    let mut problems = 0usize;
    let mut found_iter = found.iter().peekable();
    for row in expected {
        // anything the search produced before this expected value is extra
        while found_iter.peek().is_some_and(|s| s.n_value < row.n) {
            let s = found_iter.next().unwrap();
            println!(
                "  UNEXPECTED {} (root {}, sign {})",
                s.n_value,
                s.root,
                s.sign.glyph()
            );
            problems += 1;
        }
        match found_iter.peek() {
            Some(s) if s.n_value == row.n => {
                let s = found_iter.next().unwrap();
                let record = OutputRecord::from_solution(s);
                let digits_ok = row
                    .digits
                    .map_or(true, |digits| record.n_radix == digits);
                if s.reversed == row.rev
                    && s.sign.glyph() == row.sign
                    && s.root == row.root
                    && digits_ok
                {
                    let rendering = row
                        .digits
                        .map(|_| format!(" [{}]", record.annotated_radix()))
                        .unwrap_or_default();
                    println!("  ok {}{rendering}: {}", s.n_value, record.identity());
                    matched += 1;
                } else {
                    println!(
                        "  MISMATCH {}: expected rev {} sign {} root {}{}, found rev {} sign {} root {}",
                        row.n,
                        row.rev,
                        row.sign,
                        row.root,
                        row.digits.map(|d| format!(" digits {d}")).unwrap_or_default(),
                        s.reversed,
                        s.sign.glyph(),
                        s.root,
                    );
                    problems += 1;
                }
            }
            _ => {
                println!(
                    "  MISSING {} (expected rev {} sign {} root {})",
                    row.n, row.rev, row.sign, row.root
                );
                problems += 1;
            }
        }
    }
    for s in found_iter {
        println!(
            "  UNEXPECTED {} (root {}, sign {})",
            s.n_value,
            s.root,
            s.sign.glyph()
        );
        problems += 1;
    }
    let _ = table;
    (matched, problems)
}
