use crate::numerics::ExactInt;

/// Error type shared across the crate.
///
/// Arithmetic that would exceed the 128-bit integer carrier is always
/// surfaced as [`Error::Capacity`]; nothing in this crate wraps silently.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Radix outside the supported range 2..=36.
    #[error("radix {0} is out of range (supported: 2..=36)")]
    RadixOutOfRange(u32),

    /// A checked 128-bit operation overflowed. The message names the
    /// operation and the operands so the offending input can be reported.
    #[error("128-bit capacity exceeded: {0}")]
    Capacity(String),

    /// A digit value is not valid for the radix it claims.
    #[error("digit {digit} is not a valid base-{radix} digit")]
    InvalidDigit { digit: u8, radix: u32 },

    /// A concatenation block is narrower than the value it must hold.
    #[error("block width {block_width} is narrower than the value's {value_width} digits")]
    BlockWidthTooSmall {
        block_width: usize,
        value_width: usize,
    },

    /// A family generator produced a candidate that failed re-verification.
    #[error("family violation: {0}")]
    FamilyViolation(String),

    /// The E3 palindrome criterion was applied to a non-palindrome.
    #[error("{0} is not a palindrome in base {1}")]
    NotPalindromic(ExactInt, u32),

    /// A search or density request with an unusable range.
    #[error("invalid range: {0}")]
    InvalidRange(String),

    /// Malformed input that is not covered by a more specific variant.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Shorthand for a capacity error with a formatted context message.
    pub(crate) fn capacity(context: impl Into<String>) -> Self {
        Error::Capacity(context.into())
    }
}
