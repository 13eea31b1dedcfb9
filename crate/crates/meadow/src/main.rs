use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use meadow::commands::{self, Relation};
use meadow::{ModelSelector, OutputFormat, RingSelector, TableKind, Target};
use meadow_core::rewrite::Strategy;
use meadow_core::suite::Sampling;
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "meadow", version, about = "Fracpairs, common meadows and integer term rewriting")]
struct Cli {
    /// text, json or csv
    #[arg(long, global = true, default_value = "text")]
    format: OutputFormat,
    /// Accept non-squarefree moduli for fcm-mod and tables.
    #[arg(long, global = true)]
    allow_non_reduced: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rel {
    Cc,
    Rf,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a meadow expression in qbot, q0, fcm-int or fcm-mod:<n>.
    Eval {
        model: ModelSelector,
        expr: String,
        /// Print the canonical term instead of the value.
        #[arg(long)]
        term_syntax: bool,
    },
    /// Print the cc- or rf-normal form of the integer fracpair p/q.
    Normalize {
        rel: Rel,
        #[arg(allow_hyphen_values = true)]
        p: BigInt,
        #[arg(allow_hyphen_values = true)]
        q: BigInt,
    },
    /// Run a law suite; exits 0 only if every law passes.
    Check {
        /// qbot, q0, fcm-int, fcm-mod:<n>, mod:<n>, int, dual or prod:<a>,<b>
        target: Target,
        /// cr, reduced, bmcr, eqnn, congruence, md-axioms, md-identities, involutive or zero-part
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random tuples per law when the carrier is not enumerated.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Print cc-classes and Cayley tables of the cancellation meadow of Z/nZ.
    Tables {
        /// mod:<n>
        ring: RingSelector,
        /// classes, mul, add, neg-inv or saturated
        which: TableKind,
    },
    /// Normalize a ring expression with the integer rewrite system.
    Rewrite {
        expr: String,
        /// leftmost-innermost, rightmost-innermost, leftmost-outermost, random or random:<seed>
        #[arg(long, default_value = "leftmost-innermost")]
        strategy: String,
        /// Seed for --strategy random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trace: bool,
        /// Print numerals as terms instead of decimals.
        #[arg(long)]
        term_syntax: bool,
    },
    /// Regenerate the table files for Z/nZ in every format.
    Golden {
        #[arg(long, default_value = "mod:6")]
        ring: RingSelector,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn modulus(ring: RingSelector) -> Result<u64> {
    match ring {
        RingSelector::Mod(n) => Ok(n),
        _ => anyhow::bail!("tables are generated for mod:<n> only"),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format = cli.format;
    let out = match cli.command {
        Command::Eval { model, expr, term_syntax } => {
            commands::eval(model, &expr, term_syntax, cli.allow_non_reduced, format)?
        }
        Command::Normalize { rel, p, q } => {
            let rel = match rel {
                Rel::Cc => Relation::Cc,
                Rel::Rf => Relation::Rf,
            };
            commands::normalize(rel, &p, &q, format)?
        }
        Command::Check { target, suite, seed, samples } => {
            let sampling = Sampling::with_seed(seed).with_samples(samples);
            let report = commands::check(target, &suite, &sampling, cli.allow_non_reduced)?;
            if format != OutputFormat::Text && report.seed.is_some() {
                eprintln!("seed: {seed}");
            }
            print!("{}", commands::check_output(&report, format)?);
            return Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Tables { ring, which } => commands::tables(modulus(ring)?, which, cli.allow_non_reduced, format)?,
        Command::Rewrite { expr, strategy, seed, trace, term_syntax } => {
            let strategy = match strategy.as_str() {
                "random" => Strategy::Random(seed),
                s => s.parse::<Strategy>().map_err(anyhow::Error::msg)?,
            };
            commands::rewrite(&expr, strategy, trace, term_syntax, format)?
        }
        Command::Golden { ring, out_dir } => {
            let names = commands::write_golden(modulus(ring)?, &out_dir)?;
            names.iter().map(|n| format!("{}\n", out_dir.join(n).display())).collect()
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
