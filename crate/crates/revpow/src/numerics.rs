//! Digit-expansion arithmetic: radix conversion, digit reversal, palindrome
//! tests, exact integer roots, and block concatenation.
//!
//! All values live in [`ExactInt`] (`i128`). Operations that can exceed its
//! capacity return [`Error::Capacity`]; they never wrap. Floating point
//! appears only as a seed inside [`iroot`], where an integer correction pass
//! makes the final decision.

use std::fmt;

use crate::Error;

/// The exact signed integer carrier for every quantity in this crate.
///
/// `i128` holds values up to 2¹²⁷ − 1 ≈ 1.7·10³⁸, which comfortably covers
/// `N³` for all search bounds of interest (`N` up to ~5.5·10¹²).
pub type ExactInt = i128;

/// Digit glyphs for rendering: `0-9` then `a-z` for digit values 10..36.
const DIGIT_GLYPHS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A positional-notation base, restricted to the supported range 2..=36.
///
/// Constructing a `Radix` validates the range once; every function taking a
/// `Radix` can then rely on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radix(u32);

impl Radix {
    pub const MIN: u32 = 2;
    pub const MAX: u32 = 36;

    /// The common case, available in const contexts.
    pub const DECIMAL: Radix = Radix(10);

    pub fn new(radix: u32) -> Result<Self, Error> {
        if (Self::MIN..=Self::MAX).contains(&radix) {
            Ok(Radix(radix))
        } else {
            Err(Error::RadixOutOfRange(radix))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The base as an [`ExactInt`], for arithmetic.
    pub fn as_int(self) -> ExactInt {
        self.0 as ExactInt
    }
}

impl TryFrom<u32> for Radix {
    type Error = Error;

    fn try_from(radix: u32) -> Result<Self, Error> {
        Radix::new(radix)
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A digit expansion in a fixed radix, most-significant digit first.
///
/// The canonical expansion of a value has no leading zeros (and `0` is the
/// single digit `[0]`), but padded expansions with leading zeros can be
/// built explicitly via [`DigitString::padded`] or
/// [`DigitString::from_digit_vec`]; they are how trailing-zero reversals
/// such as `rev(48000) = 84` are reasoned about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitString {
    radix: Radix,
    digits: Vec<u8>,
}

impl DigitString {
    /// Builds an expansion from explicit digits (most significant first).
    ///
    /// Digits must be valid for the radix and the vector non-empty; leading
    /// zeros are kept as given.
    pub fn from_digit_vec(radix: Radix, digits: Vec<u8>) -> Result<Self, Error> {
        if digits.is_empty() {
            return Err(Error::InvalidInput(
                "digit string must have at least one digit".into(),
            ));
        }
        for &d in &digits {
            if u32::from(d) >= radix.get() {
                return Err(Error::InvalidDigit {
                    digit: d,
                    radix: radix.get(),
                });
            }
        }
        Ok(DigitString { radix, digits })
    }

    /// The canonical (no leading zero) expansion of a non-negative value.
    pub fn canonical(value: ExactInt, radix: Radix) -> Self {
        to_digits(value, radix)
    }

    /// The expansion of `value` left-padded with zeros to exactly `width`
    /// digits. Fails if the canonical expansion is already wider.
    pub fn padded(value: ExactInt, radix: Radix, width: usize) -> Result<Self, Error> {
        let canonical = to_digits(value, radix);
        if canonical.width() > width {
            return Err(Error::BlockWidthTooSmall {
                block_width: width,
                value_width: canonical.width(),
            });
        }
        let mut digits = vec![0u8; width - canonical.width()];
        digits.extend_from_slice(canonical.digits());
        Ok(DigitString { radix, digits })
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of digits, counting any leading zeros.
    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// The integer value `Σ dᵢ·r^(w−1−i)`.
    pub fn value(&self) -> Result<ExactInt, Error> {
        let r = self.radix.as_int();
        let mut acc: ExactInt = 0;
        for &d in &self.digits {
            acc = acc
                .checked_mul(r)
                .and_then(|v| v.checked_add(ExactInt::from(d)))
                .ok_or_else(|| {
                    Error::capacity(format!("value of {}-digit base-{} string", self.width(), self.radix))
                })?;
        }
        Ok(acc)
    }

    /// The same digits in reverse order. Leading zeros of the result are
    /// kept, so the width is preserved; take [`Self::value`] to drop them.
    pub fn reversed(&self) -> Self {
        let mut digits = self.digits.clone();
        digits.reverse();
        DigitString {
            radix: self.radix,
            digits,
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let d = &self.digits;
        (0..d.len() / 2).all(|i| d[i] == d[d.len() - 1 - i])
    }

    /// Rendering with an explicit radix marker, e.g. `11202_b3`. Base-10
    /// strings are rendered bare.
    pub fn annotated(&self) -> String {
        if self.radix.get() == 10 {
            self.to_string()
        } else {
            format!("{}_b{}", self, self.radix)
        }
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(std::str::from_utf8(&[DIGIT_GLYPHS[d as usize]]).unwrap())?;
        }
        Ok(())
    }
}

/// The canonical digit expansion of a non-negative value.
///
/// `to_digits(528, 10)` is `[5, 2, 8]`; zero expands to `[0]`.
///
/// # Panics
///
/// Panics if `value` is negative; digit expansions are defined for
/// non-negative integers only.
pub fn to_digits(value: ExactInt, radix: Radix) -> DigitString {
    assert!(value >= 0, "digit expansion of negative value {value}");
    let r = radix.as_int();
    let mut digits = Vec::new();
    let mut v = value;
    loop {
        digits.push((v % r) as u8);
        v /= r;
        if v == 0 {
            break;
        }
    }
    digits.reverse();
    DigitString { radix, digits }
}

/// The value of a digit expansion; inverse of [`to_digits`] on canonical
/// strings, and a plain base-`r` evaluation on padded ones (leading zeros
/// contribute nothing, so `[0, 0, 8, 4]` in base 10 is `84`).
pub fn from_digits(digits: &DigitString) -> Result<ExactInt, Error> {
    digits.value()
}

/// The digit reversal of `value` in the given radix.
///
/// Computed arithmetically: digits are peeled off the low end of `value`
/// and pushed onto the low end of the result, so trailing zeros of `value`
/// become leading zeros of the reversal and vanish (`reverse(48000, 10) =
/// 84`). Values below the radix are single digits and reverse to
/// themselves.
///
/// Errors with [`Error::Capacity`] if the reversal overflows `i128`, which
/// can happen when `value` is within a factor of `radix` of the capacity
/// limit and its low digits are large.
///
/// # Panics
///
/// Panics if `value` is negative.
pub fn reverse(value: ExactInt, radix: Radix) -> Result<ExactInt, Error> {
    assert!(value >= 0, "digit reversal of negative value {value}");
    let r = radix.as_int();
    let mut v = value;
    let mut out: ExactInt = 0;
    while v > 0 {
        out = out
            .checked_mul(r)
            .and_then(|o| o.checked_add(v % r))
            .ok_or_else(|| Error::capacity(format!("reversal of {value} in base {radix}")))?;
        v /= r;
    }
    Ok(out)
}

/// Whether `value` reads the same forwards and backwards in the radix.
/// Single-digit values (including 0) are palindromes.
pub fn is_palindrome(value: ExactInt, radix: Radix) -> bool {
    to_digits(value, radix).is_palindrome()
}

/// Floor `k`-th root with an exactness flag, for `k` ∈ {2, 3}.
///
/// Returns `(r, exact)` with `r = ⌊value^(1/k)⌋` and `exact` true iff
/// `r^k = value`. A floating-point estimate seeds the search and an integer
/// Newton step tightens it, but the returned root is fixed by the checked
/// integer comparisons at the end — the result is exact over the entire
/// `i128` range regardless of float rounding.
///
/// # Panics
///
/// Panics if `value` is negative or `k` is not 2 or 3.
pub fn iroot(value: ExactInt, k: u32) -> (ExactInt, bool) {
    assert!(k == 2 || k == 3, "iroot supports k = 2 or 3, got {k}");
    assert!(value >= 0, "iroot of negative value {value}");
    if value < 2 {
        return (value, true);
    }
    let v = value as u128;

    // Seed within a few ulps of the true root, clamped so that r^(k-1)
    // cannot overflow u128 in the Newton step below.
    let max_root: u128 = if k == 2 { 1 << 64 } else { 1 << 43 };
    let seed = if k == 2 {
        (v as f64).sqrt()
    } else {
        (v as f64).cbrt()
    };
    let mut r = (seed as u128).clamp(1, max_root);

    // Integer Newton: from above, the iteration decreases monotonically to
    // the floor root; from (slightly) below it stalls immediately and the
    // correction pass finishes the job.
    loop {
        let next = (u128::from(k - 1) * r + v / r.pow(k - 1)) / u128::from(k);
        if next >= r {
            break;
        }
        r = next;
    }

    // Exact correction: these comparisons alone determine the result.
    let too_big = |x: u128| x.checked_pow(k).map_or(true, |p| p > v);
    while too_big(r) {
        r -= 1;
    }
    while !too_big(r + 1) {
        r += 1;
    }

    let exact = r.pow(k) == v;
    (r as ExactInt, exact)
}

/// `copies` copies of `value` concatenated in fixed-width blocks.
///
/// Each block is `block_width` digits wide in the radix, so a value
/// narrower than the block gains leading zeros inside later blocks:
/// `repeat_concat(528, 10, 4, 2) = 5280528`. With `block_width` equal to
/// the value's own width this is plain repetition
/// (`repeat_concat(528, 10, 3, 2) = 528528`). The result equals
/// `value · (r^(w·c) − 1)/(r^w − 1)` for block width `w` and `c` copies,
/// but is built by shift-and-add so no divisibility argument is needed.
///
/// # Panics
///
/// Panics if `value` is not positive or `copies` is zero.
pub fn repeat_concat(
    value: ExactInt,
    radix: Radix,
    block_width: usize,
    copies: u32,
) -> Result<ExactInt, Error> {
    assert!(value > 0, "repeat_concat of non-positive value {value}");
    assert!(copies >= 1, "repeat_concat needs at least one copy");
    let value_width = to_digits(value, radix).width();
    if block_width < value_width {
        return Err(Error::BlockWidthTooSmall {
            block_width,
            value_width,
        });
    }
    let width = u32::try_from(block_width)
        .ok()
        .ok_or_else(|| Error::capacity(format!("block width {block_width}")))?;
    let overflow =
        || Error::capacity(format!("{copies} copies of {value} in base-{radix} blocks of width {block_width}"));
    let shift = radix.as_int().checked_pow(width).ok_or_else(overflow)?;
    let mut acc = value;
    for _ in 1..copies {
        acc = acc
            .checked_mul(shift)
            .and_then(|a| a.checked_add(value))
            .ok_or_else(overflow)?;
    }
    Ok(acc)
}
