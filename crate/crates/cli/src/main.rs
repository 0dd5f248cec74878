use std::path::PathBuf;
use std::process::ExitCode;

use agl_cli::commands::{self, ManifestSource};
use agl_cli::{exit_code, parse_generators, Format};
use clap::{Args, Parser, Subcommand};

/// Almost Gorenstein numerical semigroup rings, their Ulrich ideals and the
/// defining ideals of monomial curves.
#[derive(Parser)]
#[command(name = "agl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Comma-separated generators such as `3,7,8`.
#[derive(Clone)]
struct Generators(Vec<u64>);

fn generators(text: &str) -> Result<Generators, String> {
    parse_generators(text).map(Generators)
}

#[derive(Args)]
struct Output {
    /// Emit JSON.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long)]
    text: bool,
}

impl Output {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, Sally-module rank and classification.
    Analyze {
        #[arg(value_parser = generators)]
        gens: Generators,
        #[command(flatten)]
        out: Output,
    },
    /// Monomial Ulrich ideals.
    Ulrich {
        #[arg(value_parser = generators)]
        gens: Generators,
        /// Largest minimum value to scan (default 3(F+1)).
        #[arg(long)]
        max_v: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal generators of the defining ideal of the monomial curve.
    Toric {
        #[arg(value_parser = generators)]
        gens: Generators,
        /// Degree bound (default 2(F+1+2 max generator)).
        #[arg(long)]
        max_deg: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Verify a determinantal presentation given in a JSON manifest.
    CheckPresentation {
        /// Path to the manifest.
        #[arg(required_unless_present = "bundled", conflicts_with = "bundled")]
        manifest: Option<PathBuf>,
        /// Use a bundled manifest (curve_5_7_9_13 or curve_4_9_11_14).
        #[arg(long)]
        bundled: Option<String>,
        #[arg(long)]
        max_deg: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Ulrich ideal q x R of the idealization R x R for q = (t^s).
    Idealization {
        #[arg(value_parser = generators)]
        gens: Generators,
        /// The value s of the parameter q = (t^s).
        #[arg(long)]
        q: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Seeded random semigroups and their classes.
    Corpus {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 60)]
        max_frobenius: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Run the bundled worked examples and print a pass/fail table.
    Examples {
        /// Directory holding replacement manifests for the bundled curves.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { gens, out } => commands::analyze(&gens.0, out.format()),
        Command::Ulrich { gens, max_v, out } => commands::ulrich(&gens.0, *max_v, out.format()),
        Command::Toric { gens, max_deg, out } => commands::toric(&gens.0, *max_deg, out.format()),
        Command::CheckPresentation {
            manifest,
            bundled,
            max_deg,
            out,
        } => {
            let source = match (manifest, bundled) {
                (Some(p), _) => ManifestSource::Path(p),
                (None, Some(name)) => ManifestSource::Bundled(name),
                (None, None) => unreachable!("clap requires one of them"),
            };
            commands::check_presentation(source, *max_deg, out.format())
        }
        Command::Idealization { gens, q, out } => commands::idealization(&gens.0, *q, out.format()),
        Command::Corpus {
            count,
            max_frobenius,
            seed,
            out,
        } => commands::corpus(*count, *max_frobenius, *seed, out.format()),
        Command::Examples { fixtures, out } => commands::worked_examples(fixtures.as_deref(), out.format()),
    };
    match &result {
        Ok(outcome) => print!("{}", outcome.output),
        Err(e) => eprintln!("error: {e:#}"),
    }
    ExitCode::from(exit_code(&result))
}
