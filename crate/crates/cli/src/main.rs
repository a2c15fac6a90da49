use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod format;

use commands::{Failure, Report};

#[derive(Parser)]
#[command(
    name = "cyclic-cubic",
    version,
    about = "Exact analysis of cubics with cyclic Galois group"
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Read polynomials as descending coefficient lists ("1,0,-3,1").
    #[arg(long, global = true)]
    coeffs: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certificate, permutation maps, coupled pair and class of a cubic.
    Analyze(PolyArg),
    /// Coupled cubics.
    Couple {
        #[command(flatten)]
        poly: PolyArg,
        /// Only the coupling for this sign of d.
        #[arg(long, value_parser = ["+", "-"], allow_hyphen_values = true)]
        sign: Option<String>,
    },
    /// Class representative, characteristic number and affine witness.
    Rep(PolyArg),
    /// Representative for a characteristic number.
    Char(RationalArg),
    /// phi(k) = 27k/(2k + 27), optionally iterated.
    Phi {
        #[command(flatten)]
        k: RationalArg,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        iter: i64,
    },
    /// psi(k) = 27k/|2k - 27|.
    Psi(RationalArg),
    /// Breadth-first enumeration of the superclass of k.
    Superclass {
        #[command(flatten)]
        k: RationalArg,
        #[arg(long, default_value_t = 16)]
        max_nodes: usize,
        /// Graphviz output.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Canonical generator of the superclass of k.
    Generator(RationalArg),
    /// Whether two Galois cubics generate the same field.
    Samefield {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        /// Denominator bound for root-expression coefficients.
        #[arg(long, default_value = "1e12", value_parser = format::parse_count)]
        max_den: u64,
    },
    /// Family member x^3 - tx - t in the field of x^3 - 3x + 1.
    Family(RationalArg),
    /// Real roots as decimals.
    Roots {
        #[command(flatten)]
        poly: PolyArg,
        /// Digits after the decimal point.
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
}

#[derive(Args)]
struct PolyArg {
    #[arg(allow_hyphen_values = true)]
    poly: String,
}

#[derive(Args)]
struct RationalArg {
    #[arg(allow_hyphen_values = true)]
    value: String,
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let poly = |s: &str| commands::read_poly(s, cli.coeffs);
    let value = |a: &RationalArg| commands::read_rational(&a.value);
    match &cli.command {
        Command::Analyze(p) => commands::analyze(&poly(&p.poly)?),
        Command::Couple { poly: p, sign } => commands::couple(&poly(&p.poly)?, sign.as_deref()),
        Command::Rep(p) => commands::rep(&poly(&p.poly)?),
        Command::Char(k) => commands::char_rep(&value(k)?),
        Command::Phi { k, iter } => commands::phi(&value(k)?, *iter),
        Command::Psi(k) => commands::psi(&value(k)?),
        Command::Superclass { k, max_nodes, dot } => {
            commands::superclass(&value(k)?, *max_nodes, *dot)
        }
        Command::Generator(k) => commands::generator(&value(k)?),
        Command::Samefield {
            first,
            second,
            max_den,
        } => commands::samefield(&poly(first)?, &poly(second)?, *max_den),
        Command::Family(y) => commands::family(&value(y)?),
        Command::Roots { poly: p, digits } => commands::roots(&poly(&p.poly)?, *digits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                );
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
