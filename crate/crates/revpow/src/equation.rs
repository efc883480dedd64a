//! The three digit-reversal power equations and candidate classification.
//!
//! Each equation compares `N^p − N·rev(N)` against `±n^q`:
//!
//! | id | p | q | reads as                |
//! |----|---|---|-------------------------|
//! | E1 | 2 | 2 | N² − N·rev(N) = ±n²     |
//! | E2 | 2 | 3 | N² − N·rev(N) = ±n³     |
//! | E3 | 3 | 2 | N³ − N·rev(N) = ±n²     |
//!
//! [`classify`] decides solutionhood for a single `N` in checked integer
//! arithmetic. The root `n` must be at least 1, so a left-hand side of zero
//! (every palindrome under E1/E2, and nothing else) is *not* a solution;
//! both signs count, and the sign is recorded rather than filtered here.

use std::fmt;

use crate::numerics::{self, ExactInt, Radix};
use crate::Error;

/// Identifier of one of the three equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquationId {
    /// N² − N·rev(N) = ±n²
    E1,
    /// N² − N·rev(N) = ±n³
    E2,
    /// N³ − N·rev(N) = ±n²
    E3,
}

impl EquationId {
    pub const ALL: [EquationId; 3] = [EquationId::E1, EquationId::E2, EquationId::E3];

    /// Exponent `p` on the left-hand side `N^p − N·rev(N)`.
    pub fn lhs_exp(self) -> u32 {
        match self {
            EquationId::E1 | EquationId::E2 => 2,
            EquationId::E3 => 3,
        }
    }

    /// Exponent `q` on the right-hand side `±n^q`.
    pub fn rhs_exp(self) -> u32 {
        match self {
            EquationId::E1 | EquationId::E3 => 2,
            EquationId::E2 => 3,
        }
    }

    /// Numeric tag used on the command line: 1, 2 or 3.
    pub fn index(self) -> u8 {
        match self {
            EquationId::E1 => 1,
            EquationId::E2 => 2,
            EquationId::E3 => 3,
        }
    }

    pub fn from_index(index: u8) -> Result<Self, Error> {
        match index {
            1 => Ok(EquationId::E1),
            2 => Ok(EquationId::E2),
            3 => Ok(EquationId::E3),
            other => Err(Error::InvalidInput(format!(
                "equation index {other} (expected 1, 2 or 3)"
            ))),
        }
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N^{} - N·rev(N) = ±n^{}", self.lhs_exp(), self.rhs_exp())
    }
}

/// Sign of the left-hand side of a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(value: ExactInt) -> Option<Sign> {
        match value {
            v if v > 0 => Some(Sign::Plus),
            v if v < 0 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `+` or `-`.
    pub fn glyph(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.glyph())
    }
}

/// A verified solution of one equation: `N^p − N·rev(N) = sign·root^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub n_value: ExactInt,
    pub radix: Radix,
    /// `rev(N)` in the radix.
    pub reversed: ExactInt,
    pub equation: EquationId,
    pub sign: Sign,
    /// The root `n ≥ 1` with `root^q = |N^p − N·rev(N)|`.
    pub root: ExactInt,
    /// `|N^p − N·rev(N)| = root^q`.
    pub magnitude: ExactInt,
}

impl Solution {
    /// Recomputes everything from `n_value` and checks each field.
    ///
    /// This is the consistency gate used by tests and by the family
    /// generators; a `Solution` produced by [`classify`] always passes.
    pub fn verify(&self) -> Result<(), Error> {
        let bad = |what: &str| Error::InvalidInput(format!("inconsistent solution: {what}"));
        if self.n_value < 1 {
            return Err(bad("N must be positive"));
        }
        if self.root < 1 {
            return Err(bad("root must be at least 1"));
        }
        let reversed = numerics::reverse(self.n_value, self.radix)?;
        if reversed != self.reversed {
            return Err(bad("recorded reversal does not match rev(N)"));
        }
        let lhs = lhs_value(self.n_value, self.radix, self.equation)?;
        if Sign::of(lhs) != Some(self.sign) {
            return Err(bad("recorded sign does not match the left-hand side"));
        }
        if lhs.unsigned_abs() != self.magnitude.unsigned_abs() || self.magnitude < 0 {
            return Err(bad("recorded magnitude does not match |lhs|"));
        }
        let power = self
            .root
            .checked_pow(self.equation.rhs_exp())
            .ok_or_else(|| Error::capacity(format!("root {} to the power {}", self.root, self.equation.rhs_exp())))?;
        if power != self.magnitude {
            return Err(bad("root^q does not equal the magnitude"));
        }
        Ok(())
    }
}

/// Both sides of the subtraction in one pass: `(N^p − N·rev(N), rev(N))`.
fn lhs_parts(n_value: ExactInt, radix: Radix, eq: EquationId) -> Result<(ExactInt, ExactInt), Error> {
    assert!(n_value >= 1, "candidates are positive integers, got {n_value}");
    let reversed = numerics::reverse(n_value, radix)?;
    let capacity = || Error::capacity(format!("left-hand side of {eq:?} at N = {n_value} (base {radix})"));
    let power = n_value.checked_pow(eq.lhs_exp()).ok_or_else(capacity)?;
    let product = n_value.checked_mul(reversed).ok_or_else(capacity)?;
    let lhs = power.checked_sub(product).ok_or_else(capacity)?;
    Ok((lhs, reversed))
}

/// The exact left-hand side `N^p − N·rev(N)`.
pub fn lhs_value(n_value: ExactInt, radix: Radix, eq: EquationId) -> Result<ExactInt, Error> {
    lhs_parts(n_value, radix, eq).map(|(lhs, _)| lhs)
}

// Reject-only residue filters in front of the root extraction. A square is
// ≡ one of 44 classes mod 256 and a cube ≡ one of 9 classes mod 63, so most
// non-powers never reach `iroot`. The filters are sound: they only ever
// reject values whose residue cannot be a power, and `iroot` alone decides
// the values that pass.
const SQUARES_MOD_256: [bool; 256] = {
    let mut table = [false; 256];
    let mut i = 0usize;
    while i < 256 {
        table[(i * i) % 256] = true;
        i += 1;
    }
    table
};

const CUBES_MOD_63: [bool; 63] = {
    let mut table = [false; 63];
    let mut i = 0usize;
    while i < 63 {
        table[(i * i * i) % 63] = true;
        i += 1;
    }
    table
};

fn could_be_power(magnitude: u128, q: u32) -> bool {
    if q == 2 {
        SQUARES_MOD_256[(magnitude & 255) as usize]
    } else {
        CUBES_MOD_63[(magnitude % 63) as usize]
    }
}

/// Decides whether `N` solves the equation in the radix.
///
/// Returns `Some(solution)` iff `|N^p − N·rev(N)| = n^q` for some integer
/// `n ≥ 1`; the sign is recorded in the solution, never filtered. A zero
/// left-hand side (exactly the palindromes, under E1/E2) yields `None`.
///
/// The decision applies to every positive `N`, including single-digit
/// values, which reverse to themselves: `classify(2, 10, E3)` is a solution
/// since 2³ − 2·2 = 2². Range enumeration in [`crate::search`] deliberately
/// scans multi-digit candidates only; see the note there.
pub fn classify(n_value: ExactInt, radix: Radix, eq: EquationId) -> Result<Option<Solution>, Error> {
    let (lhs, reversed) = lhs_parts(n_value, radix, eq)?;
    let Some(sign) = Sign::of(lhs) else {
        return Ok(None);
    };
    let magnitude = lhs.unsigned_abs();
    if !could_be_power(magnitude, eq.rhs_exp()) {
        return Ok(None);
    }
    let magnitude = ExactInt::try_from(magnitude).map_err(|_| {
        Error::capacity(format!("|lhs| at N = {n_value} (base {radix}) exceeds the signed carrier"))
    })?;
    let (root, exact) = numerics::iroot(magnitude, eq.rhs_exp());
    if !exact {
        return Ok(None);
    }
    Ok(Some(Solution {
        n_value,
        radix,
        reversed,
        equation: eq,
        sign,
        root,
        magnitude,
    }))
}

/// Closed-form reversal difference `N − rev(N) = Σ dᵢ·(r^(w−1−i) − r^i)`,
/// summed over the canonical digits `d₀…d_{w−1}` of `N` (most significant
/// first).
///
/// The sum telescopes to exactly `N − rev(N)`; it is computed here from the
/// digit expansion, independently of [`numerics::reverse`], and tests pin
/// the two routes to each other. In base 10 the identity shows every
/// three-digit difference is a multiple of 99, hence of 11 — the basis of
/// the optional search sieve.
pub fn reversal_difference_identity(n_value: ExactInt, radix: Radix) -> Result<ExactInt, Error> {
    assert!(n_value >= 0, "difference identity of negative value {n_value}");
    let digits = numerics::to_digits(n_value, radix);
    let w = digits.width() as u32;
    let r = radix.as_int();
    let capacity = || Error::capacity(format!("reversal difference of {n_value} in base {radix}"));
    let mut acc: ExactInt = 0;
    for (i, &d) in digits.digits().iter().enumerate() {
        let i = i as u32;
        let rising = r.checked_pow(w - 1 - i).ok_or_else(capacity)?;
        let falling = r.checked_pow(i).ok_or_else(capacity)?;
        let term = ExactInt::from(d)
            .checked_mul(rising - falling)
            .ok_or_else(capacity)?;
        acc = acc.checked_add(term).ok_or_else(capacity)?;
    }
    Ok(acc)
}
