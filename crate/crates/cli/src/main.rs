use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use ncgb_cli::{execute, OutputFormat, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Strong Gröbner bases of two-sided ideals in free algebras over Z, Q and Z/mZ.
#[derive(Parser, Debug)]
#[command(name = "ncgb", version)]
struct Cli {
    /// Job file; reads standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Print the statistics block.
    #[arg(long)]
    stats: bool,
    /// Drop basis elements with redundant leading terms.
    #[arg(long)]
    reduce: bool,
    /// Reduce the tails of the output basis.
    #[arg(long)]
    tail_reduce: bool,
    /// List the normal words of length at most N.
    #[arg(long, value_name = "N")]
    monomials: Option<usize>,
    /// Compare the result with the basis listed in FILE.
    #[arg(long, value_name = "FILE")]
    equiv: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    output: Format,
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match read_input(cli.input.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    };
    let equiv = match cli.equiv.as_ref().map(std::fs::read_to_string).transpose() {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: cannot read equivalence target: {e}");
            return ExitCode::from(1);
        }
    };
    let ro = RunOptions {
        reduce: cli.reduce,
        tail_reduce: cli.tail_reduce,
        stats: cli.stats,
        monomials: cli.monomials,
        equiv,
        output: match cli.output {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
    };
    let (code, out, err) = execute(&text, &ro);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
