//! `phi4`: classify, factor, sample and locally test the fourth dynatomic
//! polynomial of a quadratic map from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage error.

mod render;
mod selfcheck;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use phi4_core::classifier::{classify, classify_quadratic, consistency_check_seeded};
use phi4_core::dynatomic::{dynatomic_at, dynatomic_generic, DynatomicError};
use phi4_core::factorizer::DEFAULT_SEED;
use phi4_core::frobenius::{sample_density, FrobeniusError};
use phi4_core::padic_local::CurveModel;
use phi4_core::permgroup::CaseGroup;
use phi4_core::polyring::{format_bpoly, format_upoly, parse_rat, parse_upoly, Rat, UPoly};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "phi4", version, about = "Fourth dynatomic polynomial of x^2 + c over the rationals")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized factorization steps.
    #[arg(long, global = true, env = "PHI4_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Galois case, factorization type and root density for one parameter.
    Classify {
        #[arg(long, value_parser = rational, allow_hyphen_values = true, conflicts_with = "f", required_unless_present = "f")]
        c: Option<Rat>,
        /// Any quadratic over ℚ, reduced to x^2 + c first.
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        f: Option<UPoly>,
        /// Cross-check against direct factorization.
        #[arg(long)]
        verify: bool,
    },
    /// Print the n-th dynatomic polynomial, generic in t or at t = c.
    Dynatomic {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
        n: u32,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Option<Rat>,
    },
    /// Frobenius sampling over all primes up to a bound.
    Sample {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rat,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(100..))]
        bound: u64,
    },
    /// Decide whether d·y^2 = f(x) has a point over the p-adic numbers.
    Localsolve {
        #[arg(long, value_parser = polynomial, allow_hyphen_values = true)]
        f: UPoly,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        twist: BigInt,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        depth_cap: Option<u32>,
    },
    /// Density of primes with a local root, computed from a case group.
    Density {
        #[arg(long, value_enum, ignore_case = true)]
        group: GroupArg,
    },
    /// Recompute every built-in constant and published example.
    Selfcheck,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "verbatim")]
enum GroupArg {
    W,
    G,
    H,
    I,
}

impl From<GroupArg> for CaseGroup {
    fn from(g: GroupArg) -> CaseGroup {
        match g {
            GroupArg::W => CaseGroup::Wreath,
            GroupArg::G => CaseGroup::Lambda,
            GroupArg::H => CaseGroup::Eta,
            GroupArg::I => CaseGroup::Rho,
        }
    }
}

fn rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("not a rational number: {s}"))
}

fn polynomial(s: &str) -> Result<UPoly, String> {
    parse_upoly(s).map_err(|e| e.to_string())
}

/// A failed command and the exit status it maps to.
enum Failure {
    Usage(String),
    Verification(String),
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Classify { c, f, verify } => {
            let report = match (c, f) {
                (Some(c), _) if verify => consistency_check_seeded(&c, cli.seed),
                (Some(c), _) => classify(&c),
                (None, Some(f)) => {
                    let base = classify_quadratic(&f).map_err(|e| match e {
                        phi4_core::classifier::ClassifyError::Dynatomic(e) => Failure::Usage(e.to_string()),
                        other => Failure::Verification(other.to_string()),
                    })?;
                    if verify {
                        consistency_check_seeded(&base.c, cli.seed).map(|mut r| {
                            r.conjugator = base.conjugator;
                            r
                        })
                    } else {
                        Ok(base)
                    }
                }
                (None, None) => unreachable!("clap requires one input"),
            }
            .map_err(|e| Failure::Verification(e.to_string()))?;
            let report = report.with_approx();
            if let Some(check) = &report.cross_check {
                if !check.complement_bound_holds {
                    return Err(Failure::Verification(format!(
                        "complement density {} is below 25/64",
                        check.complement_density
                    )));
                }
            }
            Ok(render::classification(&report, format))
        }
        Command::Dynatomic { n, c } => {
            let text = match &c {
                Some(c) => dynatomic_at(c, n).map(|p| format_upoly(&p, "x")),
                None => dynatomic_generic(n).map(|p| format_bpoly(&p)),
            }
            .map_err(|e: DynatomicError| Failure::Usage(e.to_string()))?;
            Ok(render::dynatomic(n, c.as_ref(), &text, format))
        }
        Command::Sample { c, bound } => {
            let report = sample_density(&c, bound).map_err(|e| match e {
                FrobeniusError::BoundTooSmall(_) => Failure::Usage(e.to_string()),
                other => Failure::Verification(other.to_string()),
            })?;
            Ok(render::sample(&report.with_approx(), format))
        }
        Command::Localsolve { f, twist, p, depth_cap } => {
            let curve = CurveModel::from_upoly(&f)
                .and_then(|c| c.quadratic_twist(&twist))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let report = curve.local_report(p, depth_cap).map_err(|e| match e {
                phi4_core::padic_local::LocalError::DepthExceeded { .. } => {
                    Failure::Verification(e.to_string())
                }
                other => Failure::Usage(other.to_string()),
            })?;
            Ok(render::local(&report, &twist, format))
        }
        Command::Density { group } => Ok(render::density(group.into(), format)),
        Command::Selfcheck => {
            let results = selfcheck::run_all(cli.seed);
            let text = render::selfcheck(&results, format);
            if results.iter().all(|r| r.passed) {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Verification("self-check failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
