//! `alcove-kit`: root systems, alcove geometry, Kazhdan-Lusztig polynomials
//! and characters from the command line. Output is JSON.

mod commands;
mod responses;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::Value;

use commands::{batch_slot, Context, Failure};

#[derive(Debug, Clone, Parser)]
#[command(name = "alcove-kit", version, about = "Alcove geometry, KL polynomials and characters for W_p")]
struct Cli {
    /// Cartan type, e.g. A2, C3, G2.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    cartan: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    p: Option<i64>,
    /// Compact JSON (the default).
    #[arg(long, global = true, overrides_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true, overrides_with = "json")]
    pretty: bool,
    /// One weight or partition literal per line, replacing the command's
    /// main argument; `#` starts a comment. Prints a JSON array.
    #[arg(long, global = true, value_name = "FILE")]
    batch: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots, rho and Coxeter number.
    Rootsys,
    /// Alcove, element and base point of a weight.
    Alcove {
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Length and reduced word of an element.
    Length {
        #[arg(long)]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Bruhat comparison y <= x. Elements are words ("s1 s0", "e") or weights.
    Bruhat {
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Kazhdan-Lusztig polynomial P_{y,x}.
    Kl {
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Weyl character of a dominant weight.
    Char {
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Writes a W-invariant character in Weyl characters.
    Decompose {
        /// "a,b=m" (repeatable); a bare weight means multiplicity 1.
        #[arg(long = "term", required = true, allow_hyphen_values = true)]
        terms: Vec<String>,
    },
    /// Frobenius twist of a Weyl character, decomposed.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Lusztig's character formula at a regular dominant weight.
    Lcf {
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Compares the twisted Weyl character of lambda with the formula at p lambda.
    #[command(name = "verify-lemma32")]
    VerifyTwist {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Check every dominant lambda with <p lambda + rho, alpha_0^vee> <= B.
        #[arg(long, value_name = "B")]
        sweep_bound: Option<i64>,
    },
    /// The weight adjacent across the wall labelled by a generator.
    Adjacent {
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Generator label: s0, s1, ...
        #[arg(long = "s", value_name = "GEN")]
        generator: String,
    },
    /// Chains of adjacent dominant weights from 0.
    Path {
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Adjacent pairs inside the ideal generated by some dominant weights.
    Pairs {
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// Truncates a Weyl character to a coset of a Levi root lattice.
    LeviTruncate {
        /// Kept simple roots, 1-based: "2" or "1,3".
        #[arg(long)]
        levi: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Coset representative (defaults to the weight).
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
    },
    /// Truncation of the Weyl character at lambda equals the Levi one.
    DonkinCheck {
        #[arg(long)]
        levi: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Check every dominant lambda with <lambda + rho, alpha_0^vee> <= B.
        #[arg(long, value_name = "B")]
        sweep_bound: Option<i64>,
    },
    /// Partition tools for types A and C.
    Partition {
        #[command(subcommand)]
        tool: PartitionTool,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum PartitionTool {
    ToWeight {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        type_c: bool,
    },
    Dominance {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    Dual {
        #[arg(long)]
        lambda: Option<String>,
    },
    CosetEq {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        type_c: bool,
    },
    Regular {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        n: usize,
    },
    Jantzen {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        n: usize,
    },
    Reflect {
        #[arg(long)]
        nu: String,
        #[arg(long)]
        omega: String,
        #[arg(long)]
        n: usize,
    },
    Split {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        d: usize,
    },
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("JSON values render")
}

fn error_value(f: &Failure) -> Value {
    serde_json::to_value(f.response()).expect("error responses serialize")
}

fn batch_lines(path: &PathBuf) -> Result<Vec<String>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read batch file {}: {e}", path.display())))?;
    Ok(text.lines().map(|l| l.split('#').next().unwrap_or("").trim().to_string()).filter(|l| !l.is_empty()).collect())
}

fn run_batch(ctx: &Context, cli: &Cli, path: &PathBuf) -> (Value, i32) {
    let mut probe = cli.command.clone();
    if batch_slot(&mut probe).is_none() {
        let f = Failure::Usage("this command does not take --batch".into());
        return (error_value(&f), f.exit_code());
    }
    let lines = match batch_lines(path) {
        Ok(l) => l,
        Err(f) => return (error_value(&f), f.exit_code()),
    };
    // Indexed parallel collect keeps file order.
    let results: Vec<(Value, i32)> = lines
        .par_iter()
        .map(|line| {
            let mut cmd = cli.command.clone();
            *batch_slot(&mut cmd).expect("checked above") = Some(line.clone());
            match commands::run(ctx, &cmd) {
                Ok(v) => (v, 0),
                Err(f) => (error_value(&f), f.exit_code()),
            }
        })
        .collect();
    let code = results.iter().map(|(_, c)| *c).max().unwrap_or(0);
    (Value::Array(results.into_iter().map(|(v, _)| v).collect()), code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context::new(cli.cartan.clone(), cli.p);
    let (value, code) = match &cli.batch {
        Some(path) => run_batch(&ctx, &cli, path),
        None => match commands::run(&ctx, &cli.command) {
            Ok(v) => (v, 0),
            Err(f) => (error_value(&f), f.exit_code()),
        },
    };
    let text = render(&value, cli.pretty && !cli.json);
    // Results, including batch arrays, go to stdout; a lone error to stderr.
    // A closed pipe is not worth a panic.
    let _ = if code == 0 || value.is_array() {
        writeln!(std::io::stdout().lock(), "{text}")
    } else {
        writeln!(std::io::stderr().lock(), "{text}")
    };
    ExitCode::from(code as u8)
}
