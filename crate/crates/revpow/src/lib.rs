//! Exact-arithmetic search and verification for digit-reversal power
//! equations.
//!
//! For a positive integer `N` written in radix `b`, let `rev(N)` denote the
//! integer obtained by reversing its digit string (trailing zeros of `N`
//! become leading zeros of the reversal and vanish, so `rev(48000) = 84` in
//! base 10). This crate searches for and verifies solutions of the three
//! equations
//!
//! ```text
//! E1:  N² − N·rev(N) = ±n²
//! E2:  N² − N·rev(N) = ±n³
//! E3:  N³ − N·rev(N) = ±n²
//! ```
//!
//! with `n ≥ 1`, in any radix from 2 to 36. Every decision is made in
//! checked 128-bit integer arithmetic: floating point may seed a root
//! estimate but never decides solutionhood, and arithmetic that would
//! overflow is reported as [`Error::Capacity`] instead of wrapping.
//!
//! Module map:
//!
//! * [`numerics`] — digit expansions, reversal, palindromes, exact integer
//!   roots, block concatenation.
//! * [`equation`] — the three equations, classification of candidates, and
//!   the closed-form reversal-difference identity.
//! * [`families`] — generators for the known infinite solution families and
//!   the palindrome criterion for E3.
//! * [`search`] — deterministic (optionally parallel) range enumeration.
//! * [`density`] — observed solution counts against heuristic predictions.

mod error;

pub mod density;
pub mod equation;
pub mod families;
pub mod numerics;
pub mod search;

pub use error::Error;

pub use equation::{classify, lhs_value, EquationId, Sign, Solution};
pub use numerics::{
    from_digits, iroot, is_palindrome, repeat_concat, reverse, to_digits, DigitString, ExactInt,
    Radix,
};
pub use search::{enumerate, SearchRange, SignFilter};
