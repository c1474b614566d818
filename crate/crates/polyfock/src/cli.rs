//! Argument parsing and dispatch. Exit codes: 0 success, 1 a verification
//! failed, 2 bad usage or an input over the size caps.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyfock_core::blocks::block_decomposition;
use polyfock_core::crystal::{Crystal, SignatureOrder};
use polyfock_core::exactla::ExactField;
use polyfock_core::fock::{FockVector, OperatorWord};
use polyfock_core::partitions::{p_core, p_weight};
use polyfock_core::weights::wt;
use polyfock_core::{Modulus, Partition, Result};

use crate::{dot, json, suites};

#[derive(Debug, Parser)]
#[command(
    name = "polyfock",
    version,
    about = "Fock space, crystal and tensor-functor computations with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply an operator word such as "f1 f0" (right to left) to s_start.
    Act {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "")]
        start: String,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        args: VerifyArgs,
    },
    /// Crystal graph generated from a seed partition.
    Crystal {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value = "")]
        seed: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Order::RowAsc)]
        signature_order: Order,
    },
    /// Blocks of the partitions of d.
    Blocks {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: usize,
    },
    /// p-core and p-weight of a partition.
    Pcore {
        #[arg(long)]
        p: u32,
        partition: String,
    },
    /// Weight of a partition.
    Wt {
        #[arg(long)]
        p: u32,
        partition: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Casimir,
    Hecke,
    Spectrum,
    Commutators,
    Klesh,
    Crystal,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// q for the rationals, f<prime> for a prime field.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    max_size: Option<usize>,
    /// Run characteristic 2 instances, reporting without asserting.
    #[arg(long)]
    allow_char2: bool,
    #[arg(long, value_enum, default_value_t = Order::RowAsc)]
    signature_order: Order,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    RowAsc,
    RowDesc,
}

impl From<Order> for SignatureOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::RowAsc => SignatureOrder::RowAscending,
            Order::RowDesc => SignatureOrder::RowDescending,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {}\n", e), code: 2 },
    }
}

fn modulus(p: u32) -> Result<Modulus> {
    Modulus::new(p)
}

fn moduli(p: Option<u32>, default: &[u32]) -> Result<Vec<Modulus>> {
    match p {
        Some(p) => Ok(vec![modulus(p)?]),
        None => default.iter().map(|&p| modulus(p)).collect(),
    }
}

fn one_or(value: Option<usize>, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
    value.map_or_else(|| default.into_iter().collect(), |v| vec![v])
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Act { p, word, start } => {
            let p = modulus(p)?;
            let word = OperatorWord::parse(&word, p)?;
            let start: Partition = start.parse()?;
            let v = word.apply(&FockVector::basis(p, start))?;
            Ok(Outcome::ok(json::render(&json::fock_vector(&v))))
        }
        Command::Verify { suite, args } => {
            let format = args.format;
            let report = verify(suite, args)?;
            let stdout = match format {
                ReportFormat::Json => json::render(&report.to_json()),
                ReportFormat::Table => report.to_table(),
            };
            Ok(Outcome { stdout, stderr: String::new(), code: report.exit_code() })
        }
        Command::Crystal { p, depth, seed, format, signature_order } => {
            let seed: Partition = seed.parse()?;
            let graph = Crystal::with_order(modulus(p)?, signature_order.into()).graph(depth, &seed);
            Ok(Outcome::ok(match format {
                Format::Json => json::render(&json::crystal(&graph)),
                Format::Dot => dot::crystal(&graph),
            }))
        }
        Command::Blocks { p, d } => {
            let p = modulus(p)?;
            let blocks = block_decomposition(d, p)?;
            Ok(Outcome::ok(json::render(&json::blocks(p, d, &blocks))))
        }
        Command::Pcore { p, partition } => {
            let p = modulus(p)?;
            let lambda: Partition = partition.parse()?;
            let w = p_weight(&lambda, p)?;
            Ok(Outcome::ok(json::render(&json::core(&p_core(&lambda, p), w))))
        }
        Command::Wt { p, partition } => {
            let lambda: Partition = partition.parse()?;
            Ok(Outcome::ok(json::render(&json::weight(&wt(&lambda, modulus(p)?)))))
        }
    }
}

fn verify(suite: Suite, a: VerifyArgs) -> Result<suites::Report> {
    let field: ExactField = a.field.parse()?;
    match suite {
        Suite::Casimir => {
            let grid: Vec<(usize, usize)> = one_or(a.n, 1..=3)
                .into_iter()
                .flat_map(|n| one_or(a.d, 1..=3).into_iter().map(move |d| (n, d)))
                .collect();
            suites::casimir(field, &grid, a.allow_char2)
        }
        Suite::Hecke => {
            let mut grid = Vec::new();
            for n in one_or(a.n, 0..=2) {
                for m in one_or(a.m, [2, 3]) {
                    for d in one_or(a.d, m..=4) {
                        grid.push((n, m, d));
                    }
                }
            }
            suites::hecke(field, &grid, a.allow_char2)
        }
        Suite::Spectrum => suites::spectrum(field, &one_or(a.n, [2, 3]), &one_or(a.d, 1..=4)),
        Suite::Commutators => Ok(suites::commutators(&moduli(a.p, &[0, 2, 3, 5])?, a.max_size.unwrap_or(12))),
        Suite::Klesh => suites::klesh(&moduli(a.p, &[2, 3, 5])?, a.d.unwrap_or(10)),
        Suite::Crystal => {
            Ok(suites::crystal(&moduli(a.p, &[0, 2, 3, 5])?, a.max_size.unwrap_or(10), a.signature_order.into()))
        }
    }
}
