use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use g2check::cohomology::fiber_demo;
use g2check::suite::{field_dump, structure_dump};
use g2check::{run, PairMode, RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "g2check",
    version,
    about = "Exact finite-field checks for a family of G2 representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pairs {
    All,
    Sample,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Algebra,
    Group,
    Counterexample,
    Cohomology,
    Control,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Group => Suite::Group,
            SuiteArg::Counterexample => Suite::Counterexample,
            SuiteArg::Cohomology => Suite::Cohomology,
            SuiteArg::Control => Suite::Control,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suites and write a JSON report.
    Verify {
        #[arg(long, default_value_t = 7)]
        q: u32,
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// Comma-separated; defaults to every suite valid for q.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<SuiteArg>,
        #[arg(long, value_enum, default_value_t = Pairs::All)]
        pairs: Pairs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random words tried in the sampled non-conjugacy check.
        #[arg(long, default_value_t = g2check::suite::DEFAULT_RANDOM_WORDS)]
        words: u64,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time per check (makes reports differ between runs).
        #[arg(long)]
        timings: bool,
    },
    /// Compare the cocycle classes of the family over the group and over its
    /// Sylow 2-subgroup.
    Fiber {
        #[arg(long, default_value_t = 7)]
        q: u32,
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the Chevalley structure constants.
    Structure {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Describe GF(2^m).
    Field {
        #[arg(long, default_value_t = 3)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            q,
            m,
            suites,
            pairs,
            seed,
            words,
            out,
            timings,
        } => {
            let mut config = RunConfig::new(q, m);
            if !suites.is_empty() {
                config.suites = suites.into_iter().map(Suite::from).collect();
            }
            config.pairs = match pairs {
                Pairs::All => PairMode::All,
                Pairs::Sample => PairMode::Sample,
            };
            config.seed = seed;
            config.random_words = words;
            config.timings = timings;
            let report = run(&config)?;
            eprint!("{}", report.summary());
            emit(&report.to_json(), out.as_ref())?;
            Ok(report.passed())
        }
        Command::Fiber { q, m, out } => {
            let rep = fiber_demo(q, m)?;
            eprintln!(
                "q = {q}, m = {m}: {} classes over the group, {} after restriction, fiber size >= {}",
                rep.upstairs_classes, rep.downstairs_classes, rep.fiber_lower_bound
            );
            emit(&pretty(&rep)?, out.as_ref())?;
            Ok(rep.fiber_lower_bound >= rep.a_values.len() && rep.sqrt_witness_cross_check)
        }
        Command::Structure { out } => {
            emit(&pretty(&structure_dump()?)?, out.as_ref())?;
            Ok(true)
        }
        Command::Field { m, out } => {
            emit(&pretty(&field_dump(m)?)?, out.as_ref())?;
            Ok(true)
        }
    }
}
