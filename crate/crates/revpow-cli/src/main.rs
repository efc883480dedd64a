use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use revpow::search::DEFAULT_CHUNK_SIZE;
use revpow::{EquationId, Error, ExactInt, Radix, SignFilter};
use revpow_cli::commands::{self, FamilyRequest, SearchParams};
use revpow_cli::output::Format;
use revpow_cli::{error_exit_code, parse};

/// Exact search and verification for the digit-reversal power equations
/// N^2 - N·rev(N) = ±n^2, N^2 - N·rev(N) = ±n^3 and N^3 - N·rev(N) = ±n^2.
#[derive(Parser)]
#[command(name = "revpow", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
    Both,
}

impl From<SignArg> for SignFilter {
    fn from(arg: SignArg) -> Self {
        match arg {
            SignArg::Plus => SignFilter::Plus,
            SignArg::Minus => SignFilter::Minus,
            SignArg::Both => SignFilter::Both,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyArg {
    /// Concatenated copies of a known square-difference solution
    E1Concat,
    /// r^(3k)·(r^(3k)-1), a cube-difference solution in base r
    E2Power,
    /// The palindrome r^(2k)+1, a cube/square solution in base r
    E3PalindromePower,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all solutions with N in [min, max)
    Search {
        /// Equation: 1 (squares), 2 (square minus cube) or 3 (cube minus square)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        eq: u8,
        /// Radix of the digit reversal
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
        /// Lower bound, inclusive (plain or exact scientific, e.g. 5.3e5)
        #[arg(long, default_value = "1", value_parser = parse::exact_int)]
        min: ExactInt,
        /// Upper bound, exclusive
        #[arg(long, value_parser = parse::exact_int)]
        max: ExactInt,
        /// Keep only one sign of the right-hand side
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Worker threads (default: REVPOW_WORKERS, then available parallelism)
        #[arg(long)]
        workers: Option<usize>,
        /// Skip base-10 three-digit candidates ruled out by 11-divisibility (eq 1 only)
        #[arg(long)]
        sieve: bool,
        /// Candidates per work unit; output order does not depend on this
        #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE)]
        chunk_size: u64,
    },
    /// Check a single candidate and print its identity
    Verify {
        /// Candidate N (plain or exact scientific)
        #[arg(value_parser = parse::exact_int)]
        n: ExactInt,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        eq: u8,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
    },
    /// Generate members of the known infinite families
    Families {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
        /// Family index or range, e.g. 2 or 1..3 (power families)
        #[arg(long)]
        k: Option<String>,
        /// Seed solution N (e1-concat only)
        #[arg(long, value_parser = parse::exact_int)]
        seed: Option<ExactInt>,
        /// Copy count or range, e.g. 2 or 2..4 (e1-concat only)
        #[arg(long)]
        copies: Option<String>,
        /// Concatenation block width; defaults to the seed's width (e1-concat only)
        #[arg(long)]
        block_width: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Count solutions below checkpoints and compare with the heuristic prediction
    Density {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        eq: u8,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
        base: u32,
        /// Comma-separated ascending bounds, e.g. 1e5,1e6,1e7
        #[arg(long)]
        checkpoints: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Re-derive an embedded reference table and diff it row by row
    Reproduce {
        /// One of: e1-530k, e2-1e8, e3-1e7, base3, base4
        #[arg(long)]
        table: String,
        /// Cut the scan bound to 1e6 for a quick pass
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Search {
            eq,
            base,
            min,
            max,
            sign,
            format,
            workers,
            sieve,
            chunk_size,
        } => {
            let params = SearchParams {
                equation: EquationId::from_index(eq)?,
                radix: Radix::new(base)?,
                lo: min,
                hi: max,
                sign: sign.into(),
                format,
                workers: commands::resolve_workers(workers)?,
                sieve,
                chunk_size,
            };
            commands::run_search(&params)
        }
        Command::Verify { n, eq, base } => {
            commands::run_verify(n, EquationId::from_index(eq)?, Radix::new(base)?)
        }
        Command::Families {
            family,
            base,
            k,
            seed,
            copies,
            block_width,
            format,
        } => {
            let radix = Radix::new(base)?;
            let request = match family {
                FamilyArg::E1Concat => {
                    let seed = seed.ok_or_else(|| {
                        Error::InvalidInput("e1-concat needs --seed".into())
                    })?;
                    let copies = parse::index_range(copies.as_deref().unwrap_or("2"))
                        .map_err(Error::InvalidInput)?;
                    FamilyRequest::E1Concat {
                        seed,
                        copies,
                        block_width,
                    }
                }
                FamilyArg::E2Power => FamilyRequest::E2Power {
                    k: parse::index_range(k.as_deref().unwrap_or("1"))
                        .map_err(Error::InvalidInput)?,
                },
                FamilyArg::E3PalindromePower => FamilyRequest::E3PalindromePower {
                    k: parse::index_range(k.as_deref().unwrap_or("1"))
                        .map_err(Error::InvalidInput)?,
                },
            };
            commands::run_families(&request, radix, format)
        }
        Command::Density {
            eq,
            base,
            checkpoints,
            format,
            workers,
        } => commands::run_density(
            EquationId::from_index(eq)?,
            Radix::new(base)?,
            &parse::checkpoints(&checkpoints).map_err(Error::InvalidInput)?,
            commands::resolve_workers(workers)?,
            format,
        ),
        Command::Reproduce {
            table,
            fast,
            workers,
        } => commands::run_reproduce(&table, fast, commands::resolve_workers(workers)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(error_exit_code(&err) as u8)
        }
    }
}
