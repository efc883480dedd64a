//! Observed solution counts at checkpoints, next to heuristic predictions.
//!
//! The heuristic treats `N^p − N·rev(N)` as a quasirandom number of size
//! `N^p` and asks how often such a number is a perfect power. For E1 that
//! integrates to `½·ln(bound)` — the logarithm is natural, which the report
//! states explicitly — while for E2 and E3 the integrated counts converge
//! to `1 − bound^(−1/3)` and `1 − bound^(−1/2)` respectively. Observed
//! counts run well above all three predictions: the left-hand sides are far
//! from random (the infinite families alone see to that), which is the
//! point of the comparison.

use crate::equation::EquationId;
use crate::numerics::{ExactInt, Radix};
use crate::search::{enumerate_with, Progress, SearchRange};
use crate::Error;

/// Wording attached to every report so the prediction cannot be misread as
/// base-10 logarithmic.
pub const HEURISTIC_NOTE: &str =
    "E1 prediction is 0.5·ln(bound) with the natural logarithm; E2 and E3 are 1 − bound^(−1/3) and 1 − bound^(−1/2)";

/// Heuristic number of solutions below `bound`, treating left-hand sides
/// as quasirandom. `bound` must be at least 1; the prediction at 1 is 0.
pub fn heuristic_prediction(equation: EquationId, bound: f64) -> f64 {
    assert!(bound >= 1.0, "prediction needs bound ≥ 1, got {bound}");
    match equation {
        EquationId::E1 => 0.5 * bound.ln(),
        EquationId::E2 => 1.0 - bound.powf(-1.0 / 3.0),
        EquationId::E3 => 1.0 - bound.powf(-0.5),
    }
}

/// Exact number of `digit_count`-digit palindromes in the radix (no
/// leading zero): `(r − 1)·r^(⌈d/2⌉ − 1)`. The first `⌈d/2⌉` digits
/// determine a palindrome and the leading one cannot be zero.
pub fn palindrome_density(radix: Radix, digit_count: u32) -> Result<ExactInt, Error> {
    assert!(digit_count >= 1, "palindromes have at least one digit");
    let half = digit_count.div_ceil(2);
    let choices = radix
        .as_int()
        .checked_pow(half - 1)
        .and_then(|p| p.checked_mul(radix.as_int() - 1))
        .ok_or_else(|| {
            Error::capacity(format!("count of {digit_count}-digit base-{radix} palindromes"))
        })?;
    Ok(choices)
}

/// One bound with its observed and predicted counts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityCheckpoint {
    pub bound: ExactInt,
    /// Solutions with `N < bound` (multi-digit candidates, both signs).
    pub observed: u64,
    pub predicted: f64,
}

/// Observed-versus-predicted table for one equation and radix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub equation: EquationId,
    pub radix: Radix,
    pub checkpoints: Vec<DensityCheckpoint>,
    pub heuristic_note: &'static str,
}

/// Counts solutions below each checkpoint in one enumeration pass.
///
/// Checkpoints must be strictly ascending and at least 2; the largest one
/// bounds the scan, so it is subject to the same capacity validation as a
/// search. Observed counts are non-decreasing by construction.
pub fn count_solutions(
    equation: EquationId,
    radix: Radix,
    checkpoints: &[ExactInt],
    workers: usize,
) -> Result<DensityReport, Error> {
    count_solutions_with(equation, radix, checkpoints, workers, |_| {})
}

/// [`count_solutions`] with a progress callback, forwarded from the
/// underlying enumeration.
pub fn count_solutions_with(
    equation: EquationId,
    radix: Radix,
    checkpoints: &[ExactInt],
    workers: usize,
    progress: impl FnMut(Progress),
) -> Result<DensityReport, Error> {
    if checkpoints.is_empty() {
        return Err(Error::InvalidRange("no density checkpoints given".into()));
    }
    if checkpoints[0] < 2 {
        return Err(Error::InvalidRange(format!(
            "density checkpoints start at 2, got {}",
            checkpoints[0]
        )));
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidRange(
            "density checkpoints must be strictly ascending".into(),
        ));
    }

    let top = *checkpoints.last().unwrap();
    let range = SearchRange::new(equation, radix, 1, top)?;
    let mut observed = vec![0u64; checkpoints.len()];
    let mut filled = 0usize;
    let mut seen = 0u64;
    enumerate_with(
        &range,
        workers,
        |solution| {
            while filled < checkpoints.len() && solution.n_value >= checkpoints[filled] {
                observed[filled] = seen;
                filled += 1;
            }
            seen += 1;
        },
        progress,
    )?;
    for slot in observed.iter_mut().skip(filled) {
        *slot = seen;
    }

    let report = checkpoints
        .iter()
        .zip(observed)
        .map(|(&bound, observed)| DensityCheckpoint {
            bound,
            observed,
            predicted: heuristic_prediction(equation, bound as f64),
        })
        .collect();
    Ok(DensityReport {
        equation,
        radix,
        checkpoints: report,
        heuristic_note: HEURISTIC_NOTE,
    })
}
