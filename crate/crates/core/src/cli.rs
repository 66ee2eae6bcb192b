//! Command-line front end.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::domain::{IrreducibleStream, Ring};
use crate::error::Result;
use crate::ideal::{krull_dim, parse_ideal, Status};
use crate::lab::{jacobson_witness, verify_theorem, VerifyConfig};
use crate::poly::parse_poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "krull", about = "Maximal ideals of polynomial rings over principal ideal domains")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// First irreducibles of the ring, in stream order.
    Irreducibles {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
        #[arg(long)]
        count: usize,
    },
    /// Pseudo-division a·f = g·q + r.
    PseudoDiv {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Status, height and prime chain of an ideal.
    Classify {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
        #[arg(long)]
        ideal: String,
    },
    /// Ideal membership.
    Member {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
        #[arg(long)]
        ideal: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// A maximal ideal not containing the polynomial.
    Jacobson {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Seeded verification report.
    Verify {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(2..))]
        budget: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Krull dimension of the polynomial ring.
    Dim {
        #[arg(long, value_parser = ring_arg)]
        ring: Ring,
    },
}

fn ring_arg(text: &str) -> std::result::Result<Ring, String> {
    Ring::parse(text).map_err(|e| e.to_string())
}

/// Parses `args` (program name first), writes the result to `out` and
/// diagnostics to `err`. Returns the exit code: 0 on success, 1 on domain
/// errors and 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let json = cli.format == Format::Json;
    let value = match &cli.command {
        Command::Irreducibles { ring, count } => {
            let items: Vec<String> = IrreducibleStream::new(*ring).take(*count).map(|e| e.to_string()).collect();
            if !json {
                return Ok(items.join(", "));
            }
            json!({ "ring": ring.to_string(), "irreducibles": items })
        }
        Command::PseudoDiv { ring, f, g } => {
            let d = parse_poly(*ring, f)?.pseudo_divide(&parse_poly(*ring, g)?)?;
            if !json {
                return Ok(format!("a={} q={} r={}", d.multiplier, d.quotient, d.remainder));
            }
            json!({ "a": d.multiplier.to_string(), "q": d.quotient.to_string(), "r": d.remainder.to_string() })
        }
        Command::Classify { ring, ideal } => {
            let m = parse_ideal(*ring, ideal)?;
            let c = m.classify();
            if !json {
                return Ok(c.to_string());
            }
            let status = match &c.status {
                Status::Undecided(reason) => format!("UNDECIDED({reason})"),
                other => other.to_string(),
            };
            let chain: Vec<String> = c.chain.iter().map(|i| i.to_string()).collect();
            json!({ "ideal": m.to_string(), "status": status, "height": c.height, "chain": chain })
        }
        Command::Member { ring, ideal, poly } => {
            let m = parse_ideal(*ring, ideal)?;
            let f = parse_poly(*ring, poly)?;
            let member = m.member(&f)?;
            if !json {
                return Ok(member.to_string());
            }
            json!({ "ideal": m.to_string(), "poly": f.to_string(), "member": member })
        }
        Command::Jacobson { ring, poly } => {
            let f = parse_poly(*ring, poly)?;
            let m = jacobson_witness(*ring, &f)?;
            if !json {
                return Ok(m.to_string());
            }
            json!({ "poly": f.to_string(), "ideal": m.to_string() })
        }
        Command::Verify { ring, budget, samples, trials, seed } => {
            let report = verify_theorem(VerifyConfig {
                ring: *ring,
                budget: *budget as usize,
                samples: *samples as usize,
                trials: *trials,
                seed: *seed,
            })?;
            return Ok(if json { report.to_json() } else { report.to_text().trim_end().to_string() });
        }
        Command::Dim { ring } => {
            let dim = krull_dim(*ring);
            if !json {
                return Ok(dim.to_string());
            }
            json!({ "ring": ring.to_string(), "dim": dim })
        }
    };
    Ok(serde_json::to_string_pretty(&value).expect("json value serializes"))
}
