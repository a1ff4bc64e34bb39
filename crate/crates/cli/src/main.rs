use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use freeband::transducer::{to_dot, to_fbt};
use freeband::{
    enumerate_fb, equal_in_free_band, interval_transducer, min_word, minimize, multiply, normalize,
    Word,
};
use freeband_bench::{run_suite, write_dat, Grid, Suite, DEFAULT_SCALE, DEFAULT_SEED};

/// Equality, products and least representatives in free bands.
#[derive(Parser)]
#[command(name = "freeband", version)]
struct Cli {
    /// Read and print words as comma-separated letter ids instead of characters.
    #[arg(long, global = true)]
    ints: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print whether two words are equal in the free band.
    Eq {
        u: String,
        v: String,
        /// Exit with status 1 when the words differ.
        #[arg(long)]
        exit_status: bool,
    },
    /// Print the short-lex least word equal to W.
    Min { w: String },
    /// Print the short-lex least word equal to the product of U and V.
    Mul { u: String, v: String },
    /// Print the interval transducer of W.
    Transducer {
        w: String,
        /// Minimize before printing.
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value_t = Format::Fbt)]
        format: Format,
    },
    /// Count the elements of the free band on K generators.
    Enum {
        k: usize,
        /// Give up after this many elements.
        #[arg(long, default_value_t = 1_000_000)]
        max: usize,
    },
    /// Time one algorithm over random words and write `x<TAB>seconds` rows.
    Bench {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        out: String,
        /// Fraction of the full grid; 1.0 is 10 alphabets x 10 lengths x 100 words.
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Fbt,
    Dot,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn parse_word(s: &str, ints: bool) -> Result<Word, Failure> {
    let parsed = if ints {
        Word::parse_ints(s)
    } else {
        Word::parse(s)
    };
    parsed.map_err(|e| Failure::Usage(format!("invalid word '{s}': {e}")))
}

fn show(w: &Word, ints: bool) -> String {
    if ints {
        w.to_ints()
    } else {
        w.to_string()
    }
}

/// Runs a command, returning its stdout and whether `eq --exit-status` should fail.
fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let ints = cli.ints;
    let word = |s: &str| parse_word(s, ints);
    Ok(match cli.command {
        Command::Eq { u, v, exit_status } => {
            let equal = equal_in_free_band(&word(&u)?, &word(&v)?);
            (format!("{equal}\n"), exit_status && !equal)
        }
        Command::Min { w } => (format!("{}\n", show(&normalize(&word(&w)?), ints)), false),
        Command::Mul { u, v } => {
            let tx = interval_transducer(&word(&u)?);
            let ty = interval_transducer(&word(&v)?);
            let product = multiply(&tx, &ty)
                .and_then(|p| minimize(&p))
                .and_then(|m| min_word(&m));
            let w = product.map_err(|e| Failure::Runtime(e.to_string()))?;
            (format!("{}\n", show(&w, ints)), false)
        }
        Command::Transducer { w, minimal, format } => {
            let mut t = interval_transducer(&word(&w)?);
            if minimal {
                t = minimize(&t).map_err(|e| Failure::Runtime(e.to_string()))?;
            }
            let text = match format {
                Format::Fbt => to_fbt(&t),
                Format::Dot => to_dot(&t),
            };
            (text, false)
        }
        Command::Enum { k, max } => {
            let n = enumerate_fb(k, max).map_err(|e| Failure::Runtime(e.to_string()))?;
            (format!("{n}\n"), false)
        }
        Command::Bench {
            suite,
            out,
            scale,
            seed,
        } => {
            if !(scale > 0.0 && scale <= 1.0) {
                return Err(Failure::Usage(format!(
                    "scale must be in (0, 1], got {scale}"
                )));
            }
            let rows = run_suite(suite, &Grid::scaled(scale), seed);
            let io_err = |e: io::Error| Failure::Runtime(format!("{out}: {e}"));
            let file = File::create(&out).map_err(io_err)?;
            let mut w = BufWriter::new(file);
            write_dat(&rows, &mut w).map_err(io_err)?;
            w.flush().map_err(io_err)?;
            (String::new(), false)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, fail)) => {
            print!("{out}");
            if fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
