use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use ewm_cli::{run, Format, Mode, Options};

#[derive(Parser)]
#[command(
    name = "ewm",
    version,
    about = "Extended weight monoids of spherical homogeneous spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators from a regular embedding in a parabolic subgroup.
    General(Common),
    /// Generators for a strongly solvable subgroup given by its active roots.
    Solvable(Common),
    /// Positive roots and Cartan matrix of a Cartan type.
    Roots(Common),
    /// Necessary and Lie-algebra checks for individual simple roots.
    Check(Common),
}

#[derive(Args)]
struct Common {
    /// Input document; stdin when omitted.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Treat warnings as errors.
    #[arg(long)]
    strict: bool,
    /// Accept Ξ₃ systems without a unique solution.
    #[arg(long)]
    allow_nonunique: bool,
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let (mode, common) = match cli.command {
        Command::General(c) => (Mode::General, c),
        Command::Solvable(c) => (Mode::Solvable, c),
        Command::Roots(c) => (Mode::Roots, c),
        Command::Check(c) => (Mode::Check, c),
    };
    let opts = Options {
        mode,
        format: common.format,
        strict: common.strict,
        allow_nonunique: common.allow_nonunique,
    };
    let outcome = run(&opts, common.input.as_deref());
    std::io::stdout()
        .write_all(outcome.stdout.as_bytes())
        .context("writing output")?;
    std::io::stderr()
        .write_all(outcome.stderr.as_bytes())
        .context("writing diagnostics")?;
    std::process::exit(outcome.code);
}
