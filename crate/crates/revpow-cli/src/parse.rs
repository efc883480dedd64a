//! Exact parsing of command-line numbers: plain integers, scientific
//! notation that expands to an integer, and inclusive index ranges.

use std::ops::RangeInclusive;

use revpow::ExactInt;

/// Parses a bound or candidate value. Accepts plain decimal (`530000`) and
/// scientific notation (`1e6`, `5.3e5`), but only when the expansion is an
/// exact integer within 128 bits: `1.25e2` is 125, while `1.25e1` is
/// rejected rather than rounded.
pub fn exact_int(input: &str) -> Result<ExactInt, String> {
    let s = input.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    let lower = s.to_ascii_lowercase();
    let Some((mantissa, exponent)) = lower.split_once('e') else {
        return s
            .parse::<ExactInt>()
            .map_err(|_| format!("`{input}` is not an integer in 128-bit range"));
    };

    let exponent: u32 = exponent
        .parse()
        .map_err(|_| format!("`{input}`: exponent must be a non-negative integer"))?;
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1i128, rest),
        None => (1i128, mantissa),
    };
    let (integer_part, fraction_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if integer_part.is_empty() && fraction_part.is_empty() {
        return Err(format!("`{input}` has no digits"));
    }
    if !integer_part.chars().chain(fraction_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("`{input}` is not a number"));
    }
    let fraction_len = fraction_part.len() as u32;
    if fraction_len > exponent {
        return Err(format!("`{input}` does not expand to an integer"));
    }

    let mut value: ExactInt = 0;
    for c in integer_part.chars().chain(fraction_part.chars()) {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add((c as u8 - b'0') as ExactInt))
            .ok_or_else(|| format!("`{input}` exceeds 128-bit range"))?;
    }
    let shift = 10i128
        .checked_pow(exponent - fraction_len)
        .ok_or_else(|| format!("`{input}` exceeds 128-bit range"))?;
    value
        .checked_mul(shift)
        .map(|v| sign * v)
        .ok_or_else(|| format!("`{input}` exceeds 128-bit range"))
}

/// Comma-separated list of [`exact_int`] values.
pub fn checkpoints(input: &str) -> Result<Vec<ExactInt>, String> {
    input.split(',').map(exact_int).collect()
}

/// A family index: `3` or an inclusive span `1..3`.
pub fn index_range(input: &str) -> Result<RangeInclusive<u32>, String> {
    let parse_one = |part: &str| -> Result<u32, String> {
        part.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{input}`: indices are small positive integers"))
    };
    let (lo, hi) = match input.split_once("..") {
        Some((lo, hi)) => (parse_one(lo)?, parse_one(hi)?),
        None => {
            let k = parse_one(input)?;
            (k, k)
        }
    };
    if lo < 1 {
        return Err(format!("`{input}`: indices start at 1"));
    }
    if lo > hi {
        return Err(format!("`{input}`: range is empty"));
    }
    Ok(lo..=hi)
}
