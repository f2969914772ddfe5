//! Command-line front end for the minorphi kernel.
//!
//! Subcommands: `minors` prints m_1..m_n, `phi` applies the substitution
//! x_k -> m_k to a polynomial (optionally twice), `verify` checks the
//! involution on every generator, and `colsdet` evaluates the determinant of
//! T(k) with its first column replaced.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing generator, 2 on
//! usage, parse, or range errors. Results go to standard output, errors to
//! standard error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use minorphi::{
    apply_phi, apply_phi_twice, first_column_det, minor_table, verify_involution_with_table,
    MinorTable, Polynomial, RingSpec,
};

#[derive(Parser)]
#[command(
    name = "minorphi",
    version,
    about = "Toeplitz principal minors and the substitution involution x_k -> m_k"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of variables x1..xn.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,

    /// Coefficient ring: `z` or `zmod:M` with M >= 2.
    #[arg(long)]
    ring: String,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Guard against accidentally huge computations; raise to go higher.
    #[arg(long = "max-n", default_value_t = 24, value_name = "N")]
    max_n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print the principal minors m_1..m_n of the Toeplitz matrix T(n).
    Minors {
        #[command(flatten)]
        common: Common,
    },
    /// Apply the substitution x_k -> m_k to a polynomial.
    Phi {
        #[command(flatten)]
        common: Common,

        /// Input polynomial, e.g. "x1^2 - 3*x1*x2 + 7".
        #[arg(long)]
        poly: String,

        /// Apply the substitution twice (the result equals the input).
        #[arg(long)]
        twice: bool,
    },
    /// Check phi(phi(x_k)) = x_k for every generator; exit 1 on failure.
    Verify {
        #[command(flatten)]
        common: Common,

        /// Replace m_K before checking (format `K=POLY`); this is a
        /// negative-control hook that makes the verification fail.
        #[arg(long, value_name = "K=POLY")]
        corrupt: Option<String>,
    },
    /// Determinant of T(k) with its first column replaced by the given
    /// polynomials, where k is the number of column entries.
    Colsdet {
        #[command(flatten)]
        common: Common,

        /// Comma-separated column entries, e.g. "x1,x2" or "1,0".
        #[arg(long)]
        column: String,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Minors { common } => {
            let (ring, n) = common.validate()?;
            let table = minor_table(&ring, n);
            match common.format {
                Format::Text => {
                    for k in 1..=n {
                        println!("m{k} = {}", table.minors()[k]);
                    }
                }
                Format::Json => {
                    let items: Vec<_> = (1..=n)
                        .map(|k| json!({"k": k, "poly": table.minors()[k].to_json()}))
                        .collect();
                    println!("{}", serde_json::Value::Array(items));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi {
            common,
            poly,
            twice,
        } => {
            let (ring, n) = common.validate()?;
            let input = Polynomial::parse(&ring, n, &poly).map_err(|e| e.to_string())?;
            let result = if twice {
                apply_phi_twice(&input, &ring, n)
            } else {
                apply_phi(&input, &ring, n)
            }
            .map_err(|e| e.to_string())?;
            print_poly(&result, common.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, corrupt } => {
            let (ring, n) = common.validate()?;
            let mut table = minor_table(&ring, n);
            if let Some(spec) = &corrupt {
                table = corrupted_table(table, &ring, n, spec)?;
            }
            let report = verify_involution_with_table(&table);
            match common.format {
                Format::Text => {
                    for g in &report.per_generator {
                        println!("x{}: {}", g.k, if g.pass { "PASS" } else { "FAIL" });
                    }
                }
                Format::Json => println!("{}", report.to_json()),
            }
            if report.overall {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Colsdet { common, column } => {
            let (ring, n) = common.validate()?;
            let entries: Vec<Polynomial> = column
                .split(',')
                .map(|s| Polynomial::parse(&ring, n, s).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let det = first_column_det(&ring, n, &entries).map_err(|e| e.to_string())?;
            print_poly(&det, common.format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

impl Common {
    fn validate(&self) -> Result<(RingSpec, usize), String> {
        if self.n > self.max_n {
            return Err(format!(
                "n = {} exceeds the guard --max-n {}; pass a larger --max-n to proceed",
                self.n, self.max_n
            ));
        }
        let ring = RingSpec::parse(&self.ring).map_err(|e| e.to_string())?;
        Ok((ring, self.n as usize))
    }
}

fn print_poly(p: &Polynomial, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!("{}", p.to_json()),
    }
}

fn corrupted_table(
    table: MinorTable,
    ring: &RingSpec,
    n: usize,
    spec: &str,
) -> Result<MinorTable, String> {
    let (k, poly) = spec
        .split_once('=')
        .ok_or_else(|| format!("--corrupt expects K=POLY, got '{spec}'"))?;
    let k: usize = k
        .trim()
        .parse()
        .map_err(|_| format!("--corrupt index '{k}' is not an integer"))?;
    if k < 1 || k > n {
        return Err(format!("--corrupt index {k} out of range 1..={n}"));
    }
    let replacement = Polynomial::parse(ring, n, poly).map_err(|e| e.to_string())?;
    let mut minors = table.minors().to_vec();
    minors[k] = replacement;
    MinorTable::from_minors(ring, n, minors).map_err(|e| e.to_string())
}
