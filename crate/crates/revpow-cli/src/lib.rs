//! Implementation crate for the `revpow` binary: argument parsing helpers,
//! output formatting, embedded reference tables, and the subcommand
//! drivers. Kept as a library so integration tests can exercise the pieces
//! directly as well as through the binary.

pub mod commands;
pub mod output;
pub mod parse;
pub mod tables;

/// Process exit codes used by the binary.
pub mod exit_codes {
    /// Success.
    pub const OK: i32 = 0;
    /// `verify` ran cleanly but the candidate is not a solution.
    pub const NOT_A_SOLUTION: i32 = 1;
    /// Usage error: bad flags, bad numbers, unusable ranges.
    pub const USAGE: i32 = 2;
    /// 128-bit capacity exceeded during exact arithmetic.
    pub const CAPACITY: i32 = 3;
    /// A family generator produced a member that failed re-verification.
    pub const FAMILY_VIOLATION: i32 = 4;
    /// `reproduce` found a difference against the embedded expected rows.
    pub const REPRODUCTION_MISMATCH: i32 = 5;
}

/// Maps a library error to the exit code contract.
pub fn error_exit_code(error: &revpow::Error) -> i32 {
    match error {
        revpow::Error::Capacity(_) => exit_codes::CAPACITY,
        revpow::Error::FamilyViolation(_) => exit_codes::FAMILY_VIOLATION,
        _ => exit_codes::USAGE,
    }
}
