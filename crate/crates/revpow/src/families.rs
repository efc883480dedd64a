//! Generators for the known infinite solution families, each re-verified
//! through [`classify`] (or, for the palindrome criterion, through checked
//! arithmetic that tests pin against `classify`).
//!
//! The three families:
//!
//! * **E1 block concatenation.** If `N` solves E1 in radix `r`, so does
//!   `N` repeated `c` times in blocks of width `w ≥ width(N)`. Writing
//!   `K = 1 + r^w + … + r^(w(c−1))`, the member is `M = N·K` with
//!   `rev(M) = rev(N)·K`, so the left-hand side scales by `K²` and the root
//!   by `K`. The identity holds for any block width, including seeds with
//!   trailing zeros: the reversal's dropped digits reappear as interior
//!   zeros of the blocks.
//! * **E2 power family.** `N = r^(3k)·(r^(3k) − 1)` reads as `r^(3k) − 1`
//!   followed by `3k` zeros, so `rev(N) = r^(3k) − 1` and the left-hand
//!   side is `r^(3k)·(r^(3k) − 1)³ = (r^k·(r^(3k) − 1))³`, always with
//!   positive sign.
//! * **E3 palindrome power family.** `N = r^(2k) + 1` is the palindrome
//!   `10…01`, and `N³ − N² = N²·r^(2k) = (N·r^k)²`. More generally any
//!   palindrome `m` solves E3 exactly when `m − 1` is a perfect square —
//!   see [`e3_from_palindrome`].

use crate::equation::{classify, EquationId, Sign, Solution};
use crate::numerics::{self, ExactInt, Radix};
use crate::Error;

/// Checked repunit factor `K = 1 + r^w + … + r^(w(c−1))`: the value whose
/// digit string is `c` ones separated by `w − 1` zeros.
fn block_repunit(radix: Radix, block_width: usize, copies: u32) -> Result<ExactInt, Error> {
    numerics::repeat_concat(1, radix, block_width, copies)
}

/// Extends an E1 solution to the concatenated member with `copies` blocks
/// of width `block_width`.
///
/// The seed is re-verified, the member is built by [`numerics::repeat_concat`]
/// and classified from scratch, and the scaling relations (root and sign)
/// are checked; any failure is a [`Error::FamilyViolation`]. `copies = 1`
/// returns the seed itself.
pub fn e1_concat_member(
    seed: &Solution,
    block_width: usize,
    copies: u32,
) -> Result<Solution, Error> {
    if seed.equation != EquationId::E1 {
        return Err(Error::InvalidInput(format!(
            "concatenation family needs an E1 seed, got {:?}",
            seed.equation
        )));
    }
    seed.verify()?;
    let member = numerics::repeat_concat(seed.n_value, seed.radix, block_width, copies)?;
    let violation = |what: String| {
        Error::FamilyViolation(format!(
            "concatenation of {} (base {}, width {block_width}, copies {copies}): {what}",
            seed.n_value, seed.radix
        ))
    };
    let solution = classify(member, seed.radix, EquationId::E1)?
        .ok_or_else(|| violation(format!("{member} does not solve E1")))?;
    let repunit = block_repunit(seed.radix, block_width, copies)?;
    let expected_root = seed
        .root
        .checked_mul(repunit)
        .ok_or_else(|| Error::capacity(format!("root scaling {} × {repunit}", seed.root)))?;
    if solution.root != expected_root || solution.sign != seed.sign {
        return Err(violation(format!(
            "expected root {expected_root} with sign {}, found {} with sign {}",
            seed.sign, solution.root, solution.sign
        )));
    }
    Ok(solution)
}

/// The `k`-th member of the E2 power family in the radix:
/// `N = r^(3k)·(r^(3k) − 1)` with root `r^k·(r^(3k) − 1)`, sign `+`.
pub fn e2_power_member(radix: Radix, k: u32) -> Result<Solution, Error> {
    assert!(k >= 1, "family members are indexed from k = 1");
    let capacity = || Error::capacity(format!("E2 power member k = {k} in base {radix}"));
    let c = radix.as_int().checked_pow(3 * k).ok_or_else(capacity)?;
    let member = c.checked_mul(c - 1).ok_or_else(capacity)?;
    let expected_root = radix
        .as_int()
        .checked_pow(k)
        .and_then(|p| p.checked_mul(c - 1))
        .ok_or_else(capacity)?;
    let violation = |what: String| {
        Error::FamilyViolation(format!("E2 power member k = {k} in base {radix}: {what}"))
    };
    let solution = classify(member, radix, EquationId::E2)?
        .ok_or_else(|| violation(format!("{member} does not solve E2")))?;
    if solution.root != expected_root || solution.sign != Sign::Plus {
        return Err(violation(format!(
            "expected root {expected_root} with sign +, found {} with sign {}",
            solution.root, solution.sign
        )));
    }
    Ok(solution)
}

/// The `k`-th member of the E3 palindrome power family in the radix:
/// `N = r^(2k) + 1` (the palindrome `10…01`) with root `(r^(2k) + 1)·r^k`,
/// sign `+`.
pub fn e3_palindrome_power_member(radix: Radix, k: u32) -> Result<Solution, Error> {
    assert!(k >= 1, "family members are indexed from k = 1");
    let capacity = || Error::capacity(format!("E3 power member k = {k} in base {radix}"));
    let member = radix
        .as_int()
        .checked_pow(2 * k)
        .and_then(|p| p.checked_add(1))
        .ok_or_else(capacity)?;
    let expected_root = radix
        .as_int()
        .checked_pow(k)
        .and_then(|p| p.checked_mul(member))
        .ok_or_else(capacity)?;
    let violation = |what: String| {
        Error::FamilyViolation(format!("E3 power member k = {k} in base {radix}: {what}"))
    };
    let solution = classify(member, radix, EquationId::E3)?
        .ok_or_else(|| violation(format!("{member} does not solve E3")))?;
    if solution.root != expected_root || solution.sign != Sign::Plus {
        return Err(violation(format!(
            "expected root {expected_root} with sign +, found {} with sign {}",
            solution.root, solution.sign
        )));
    }
    Ok(solution)
}

/// Applies the palindrome criterion for E3: a palindrome `m ≥ 2` solves
/// `m³ − m·rev(m) = +n²` exactly when `m − 1` is a perfect square, with
/// root `n = m·√(m−1)`.
///
/// The solution is constructed directly from the criterion (`rev(m) = m`,
/// so the left-hand side is `m²(m−1)`), independently of [`classify`];
/// tests hold the two routes to exact agreement. Non-palindromic input is
/// an [`Error::NotPalindromic`] precondition failure, not a `None`.
pub fn e3_from_palindrome(m: ExactInt, radix: Radix) -> Result<Option<Solution>, Error> {
    assert!(m >= 1, "palindrome criterion applies to positive integers, got {m}");
    if !numerics::is_palindrome(m, radix) {
        return Err(Error::NotPalindromic(m, radix.get()));
    }
    if m == 1 {
        // lhs = 0; the root must be at least 1
        return Ok(None);
    }
    let (k, exact) = numerics::iroot(m - 1, 2);
    if !exact {
        return Ok(None);
    }
    let capacity = || Error::capacity(format!("palindrome criterion at m = {m} (base {radix})"));
    let root = m.checked_mul(k).ok_or_else(capacity)?;
    let magnitude = root.checked_mul(root).ok_or_else(capacity)?;
    Ok(Some(Solution {
        n_value: m,
        radix,
        reversed: m,
        equation: EquationId::E3,
        sign: Sign::Plus,
        root,
        magnitude,
    }))
}

/// A family member request, as issued by the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Concatenations of an E1 seed solution.
    E1Concat {
        radix: Radix,
        seed: ExactInt,
        /// Block width; defaults to the seed's own width.
        block_width: Option<usize>,
        copies: u32,
    },
    /// `r^(3k)·(r^(3k) − 1)` for E2.
    E2Power { radix: Radix, k: u32 },
    /// `r^(2k) + 1` for E3.
    E3PalindromePower { radix: Radix, k: u32 },
}

impl FamilySpec {
    /// Generates and re-verifies the requested member.
    pub fn generate(&self) -> Result<Solution, Error> {
        match *self {
            FamilySpec::E1Concat {
                radix,
                seed,
                block_width,
                copies,
            } => {
                if seed < 1 {
                    return Err(Error::InvalidInput(format!(
                        "seed must be a positive integer, got {seed}"
                    )));
                }
                let seed_solution = classify(seed, radix, EquationId::E1)?.ok_or_else(|| {
                    Error::InvalidInput(format!("{seed} does not solve E1 in base {radix}"))
                })?;
                let width = block_width
                    .unwrap_or_else(|| numerics::to_digits(seed, radix).width());
                e1_concat_member(&seed_solution, width, copies)
            }
            FamilySpec::E2Power { radix, k } => e2_power_member(radix, k),
            FamilySpec::E3PalindromePower { radix, k } => e3_palindrome_power_member(radix, k),
        }
    }
}
