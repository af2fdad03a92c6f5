use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lindex::commands;
use lindex::verify::{verify, Suite, VerifyArgs};
use lindex::{CliError, Method, Outcome, RunConfig};

/// Scalar linear index coding over small finite fields.
#[derive(Debug, Parser)]
#[command(name = "lindex", version)]
struct Cli {
    /// Vertex budget when building H_k^q.
    #[arg(long, global = true, env = "LINDEX_MAX_VERTICES", default_value_t = lindex_core::hkq::DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    /// Receiver cap for the exact minrank search; defaults depend on q.
    #[arg(long, global = true, env = "LINDEX_MINRANK_CAP")]
    minrank_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Matrix,
    Hom,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Transitivity,
    Coloring,
    Clique,
    Lcolor,
    Icd,
    Npwitness,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write H_k^q and its vertex labels.
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        /// Label sidecar path, `<out>.labels` by default.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Compute lind_q of a side-information digraph.
    Lind {
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value = "matrix")]
        method: MethodArg,
        input: PathBuf,
    },
    /// Decide whether G maps homomorphically into H.
    Hom {
        g: PathBuf,
        h: PathBuf,
        /// Test the complements instead.
        #[arg(long)]
        complement: bool,
        /// Write the map as JSON.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Lower bounds on lind_q.
    Bounds {
        #[arg(long)]
        q: u32,
        /// Clique sizes for the l-colourable bound, comma separated.
        #[arg(long = "l", value_delimiter = ',')]
        ls: Vec<usize>,
        /// Also compute lind_q exactly and check the bounds against it.
        #[arg(long)]
        exact: bool,
        input: PathBuf,
    },
    /// Exact graph parameters.
    Props { input: PathBuf },
    /// Structural checks on H_k^q.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Vertex count for the exhaustive `icd` suite.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Colour count for the `lcolor` suite.
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = RunConfig::new(cli.max_vertices, cli.minrank_cap)?;
    match cli.command {
        Command::Construct { q, k, out, labels } => commands::construct(q, k, &out, labels.as_deref(), &cfg),
        Command::Lind { q, method, input } => {
            let method = match method {
                MethodArg::Matrix => Method::Matrix,
                MethodArg::Hom => Method::Hom,
                MethodArg::Both => Method::Both,
            };
            commands::lind(q, method, &input, &cfg)
        }
        Command::Hom { g, h, complement, witness } => commands::hom(&g, &h, complement, witness.as_deref()),
        Command::Bounds { q, ls, exact, input } => commands::bounds(q, &ls, exact, &input, &cfg),
        Command::Props { input } => commands::props(&input),
        Command::Verify { suite, q, k, n, l } => {
            let suite = match suite {
                SuiteArg::Transitivity => Suite::Transitivity,
                SuiteArg::Coloring => Suite::Coloring,
                SuiteArg::Clique => Suite::Clique,
                SuiteArg::Lcolor => Suite::LColor,
                SuiteArg::Icd => Suite::Icd,
                SuiteArg::Npwitness => Suite::NpWitness,
            };
            verify(&VerifyArgs { suite, q, k, n, l }, &cfg)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            // a closed pipe downstream is not our failure
            let _ = writeln!(io::stdout().lock(), "{}", out.json_pretty());
            eprintln!("{}", out.summary);
            ExitCode::from(if out.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
