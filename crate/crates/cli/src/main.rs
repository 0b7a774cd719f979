//! `rank2-fusion`: fusion tables, presentation certificates and the G2
//! two-generator search.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 verification or selftest
//! failure, 4 internal error.

mod render;
mod selftest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rank2_fusion::fusion::cache;
use rank2_fusion::ideal::FusionIdeal;
use rank2_fusion::{Alcove, AlgebraType, Error, FusionTable, IntPolynomial, RepRing, RootSystem};

use render::Format;

const EXIT_USAGE: u8 = 2;
const EXIT_FAILED: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "rank2-fusion", version, about = "Exact fusion rings of A2, C2 and G2 and certified fusion ideal presentations")]
struct Cli {
    /// Directory for cached fusion tables.
    #[arg(long, global = true, env = "RANK2_FUSION_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the fusion structure constants N_{λμ}^ν.
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Certify that the given polynomials generate the fusion ideal.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Generators in `c*X^i*Y^j` syntax; repeat the flag or separate with `;`.
        #[arg(long, conflicts_with_all = ["gens_file", "known"])]
        gens: Vec<String>,
        /// File with one generator per line; blank lines and `#` comments are skipped.
        #[arg(long, conflicts_with = "known")]
        gens_file: Option<PathBuf>,
        /// Use the known generators (two for A2/C2, three for G2 with k ≥ 2).
        #[arg(long)]
        known: bool,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a two-element generating set of the G2 fusion ideal.
    Search {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        level: i64,
        #[arg(long, allow_negative_numbers = true)]
        bound: i64,
        /// Directory receiving the report and, when a pair is found, its certificate.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check ring axioms, duality, the Frobenius identity and the dimension
    /// homomorphism for every algebra up to a level.
    Selftest {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        max_level: i64,
    },
}

#[derive(Args)]
struct Target {
    /// a2, b2 (= c2), c2 or g2.
    #[arg(long, value_parser = parse_algebra)]
    algebra: AlgebraType,
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    level: i64,
}

fn parse_algebra(s: &str) -> Result<AlgebraType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed run: message for standard error and the exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::Parse { .. }
            | Error::UnknownAlgebra(_)
            | Error::InvalidBound(_)
            | Error::NegativeLevel(_)
            | Error::EmptyGenerators
            | Error::LevelOutOfRange { .. }
            | Error::NotG2(_) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Fail(code, e.to_string())
    }
}

fn io_fail(path: &Path, e: std::io::Error) -> Fail {
    Fail(EXIT_INTERNAL, format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    let cache_dir = cli.cache_dir.as_deref();
    match cli.command {
        Command::Table { target, format } => {
            let t = load_table(cache_dir, target.algebra, target.level)?;
            print!("{}", render::table(&t, format));
            Ok(0)
        }
        Command::Verify { target, gens, gens_file, known, out } => {
            let ideal = FusionIdeal::from_table(load_table(cache_dir, target.algebra, target.level)?);
            let polys = if known {
                ideal.known_generators()?
            } else if let Some(path) = gens_file {
                let text = fs::read_to_string(&path).map_err(|e| io_fail(&path, e))?;
                parse_generators(text.lines().map(|l| l.split('#').next().unwrap_or("")))?
            } else {
                parse_generators(gens.iter().flat_map(|g| g.split(';')))?
            };
            let cert = ideal.verify_presentation(&polys)?;
            emit(out.as_deref(), &cert.to_json())?;
            if cert.is_verified() {
                Ok(0)
            } else {
                let reason = cert.to_file().failure_reason.unwrap_or_default();
                eprintln!("not verified: {reason}");
                Ok(EXIT_FAILED)
            }
        }
        Command::Search { level, bound, out_dir } => {
            let ideal = FusionIdeal::from_table(load_table(cache_dir, AlgebraType::G2, level)?);
            let report = ideal.search_two_generators(bound)?;
            let json = report.to_json();
            print!("{json}");
            if let Some(dir) = out_dir {
                let path = dir.join(format!("search-g2-k{level}-b{bound}.json"));
                cache::write_atomic(&path, &json)?;
                eprintln!("report: {}", path.display());
                if let Some(cert) = &report.certificate {
                    let path = dir.join(format!("certificate-g2-k{level}-pair.json"));
                    cache::write_atomic(&path, &cert.to_json())?;
                    eprintln!("certificate: {}", path.display());
                }
            }
            Ok(0)
        }
        Command::Selftest { max_level } => {
            let summary = selftest::run(max_level, cache_dir);
            for line in &summary.lines {
                println!("{line}");
            }
            for f in &summary.failures {
                println!("{f}");
            }
            if summary.failures.is_empty() {
                println!("selftest passed up to level {max_level}");
                Ok(0)
            } else {
                println!("selftest failed: {} properties", summary.failures.len());
                Ok(EXIT_FAILED)
            }
        }
    }
}

fn load_table(cache_dir: Option<&Path>, algebra: AlgebraType, level: i64) -> Result<FusionTable, Fail> {
    match cache_dir {
        Some(dir) => Ok(cache::load_or_compute(dir, algebra, level)?),
        None => {
            let rep = RepRing::new(&RootSystem::new(algebra));
            let alc = Alcove::new(rep.root_system(), level)?;
            Ok(FusionTable::with_rep_ring(&alc, &rep))
        }
    }
}

fn parse_generators<'a>(items: impl Iterator<Item = &'a str>) -> Result<Vec<IntPolynomial>, Fail> {
    let polys = items
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<rank2_fusion::Result<Vec<IntPolynomial>>>()?;
    if polys.is_empty() {
        return Err(Fail(EXIT_USAGE, "no generators given (use --gens, --gens-file or --known)".into()));
    }
    Ok(polys)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(path) => Ok(cache::write_atomic(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
