//! Command-line front end. Exit codes: 0 verified, 1 a verification
//! failed, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use picard::commands::{self, Format};
use picard::Error;

#[derive(Parser)]
#[command(name = "picard", version, about = "Exact verification of Picard groups of 2-blocks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Character table and principal block of a family, e.g. `G(1)` or `P(1)xA5`.
    Chartab {
        #[arg(long)]
        family: String,
    },
    /// Group of perfect self-isometries of a principal block.
    Perf {
        #[arg(long)]
        family: String,
    },
    /// Assemble and verify a case such as `thm-main-v,n=1`, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        case: String,
        #[arg(long, default_value_t = 2)]
        max_n: u32,
        #[arg(long, default_value_t = 4)]
        max_p: usize,
    },
    /// `N_{GL_k(Z/2^n)}(S)/S` for `S` one of `C3`, `C7`, `C7:C3`.
    Outgrp {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        subgroup: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let result = match &cli.command {
        Command::Chartab { family } => commands::cmd_chartab(family).and_then(|r| Ok((commands::render(&r, format)?, true))),
        Command::Perf { family } => commands::cmd_perf(family).and_then(|r| Ok((commands::render(&r, format)?, true))),
        Command::Verify { case, max_n, max_p } => commands::cmd_verify(case, *max_n, *max_p)
            .and_then(|r| Ok((commands::render(&r, format)?, r.all_passed))),
        Command::Outgrp { k, n, subgroup } => {
            commands::cmd_outgrp(*k, *n, subgroup).and_then(|r| Ok((commands::render(&r, format)?, true)))
        }
    };
    match result {
        Ok((text, ok)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
