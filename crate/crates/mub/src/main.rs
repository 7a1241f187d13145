use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use mub::constructions::{self, Method, MubSet};
use mub::error::Error;
use mub::{fixtures, gauss, schwinger, verify, Tolerance};

#[derive(Parser)]
#[command(
    name = "mub",
    version,
    about = "Mutually unbiased bases from clock-and-shift generators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family of mutually unbiased bases and print it as JSON
    Gen {
        #[arg(long)]
        dim: usize,
        /// One of: generic-triple, even-triple, odd-clique, prime-full,
        /// tensor-combined, d4-complete. Defaults to the best available.
        #[arg(long)]
        method: Option<String>,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a stored family (JSON) and print a report
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Search residue sets whose pairwise differences are coprime to the dimension
    Search {
        #[arg(long)]
        dim: usize,
        /// List every maximum set instead of the first
        #[arg(long)]
        all: bool,
    },
    /// Check the clock/shift/Fourier identities numerically
    Identities {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Quadratic Gauss sums
    Gauss {
        #[command(subcommand)]
        mode: GaussMode,
    },
    /// Compare constructions against hard-coded reference matrices
    Fixtures,
}

#[derive(Subcommand)]
enum GaussMode {
    /// Trace of the k-th power of the quadratic diagonal (odd dimension)
    Trace {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        k: i64,
    },
    /// S(a, b, d) = sum over n of exp(i pi (a n^2 + b n) / d)
    Sum {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        d: i64,
    },
    /// Check the reciprocity law for S(a, b, d)
    Reciprocity {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Even-dimension quadratic sum against its closed form
    Even {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// First-column inner product against the trace formula (odd dimension)
    Consistency {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

/// 0 = pass, 1 = math failure, 2 = usage or input error, 3 = method/dimension
/// mismatch.
fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::NotPrime(_)
        | Error::NotOddPrime(_)
        | Error::OddRequired(_)
        | Error::EvenRequired(_)
        | Error::UnsupportedRelation { .. }
        | Error::MethodMismatch { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn tolerance_from(flag: Option<f64>) -> Tolerance {
    match flag {
        Some(eps) if eps > 0.0 && eps.is_finite() => Tolerance::new(eps),
        _ => Tolerance::from_env(),
    }
}

fn build_with(dim: usize, method: Option<&str>) -> mub::Result<MubSet> {
    let Some(name) = method else {
        return constructions::construct_mubs(dim);
    };
    let mismatch = || Error::MethodMismatch {
        method: name.to_string(),
        dim,
    };
    match name.parse::<Method>()? {
        Method::GenericTriple => {
            if dim % 2 == 0 && dim > 0 {
                // even dimensions use the even-triple branch
                return Err(mismatch());
            }
            constructions::build_generic_triple(dim)
        }
        Method::EvenTriple => {
            if dim % 2 != 0 {
                return Err(mismatch());
            }
            constructions::build_generic_triple(dim)
        }
        Method::OddClique => {
            constructions::build_odd_clique_mub(dim, &constructions::max_coprime_clique(dim)?)
        }
        Method::PrimeFull => constructions::build_prime_full(dim),
        Method::D4Complete => {
            if dim != 4 {
                return Err(mismatch());
            }
            Ok(constructions::build_d4_complete())
        }
        Method::TensorCombined => {
            if let Some(p) = exact_odd_prime_sqrt(dim) {
                constructions::build_prime_square_tensor(p)
            } else if dim % 4 == 0 && dim > 4 {
                Ok(constructions::tensor_combine(
                    &constructions::build_d4_complete(),
                    &constructions::construct_mubs(dim / 4)?,
                ))
            } else {
                Err(mismatch())
            }
        }
        Method::Fixture => Err(mismatch()),
    }
}

fn exact_odd_prime_sqrt(dim: usize) -> Option<usize> {
    let p = (dim as f64).sqrt().round() as usize;
    (p * p == dim && p % 2 == 1 && constructions::is_prime(p)).then_some(p)
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Gen { dim, method, out } => {
            let set = match build_with(dim, method.as_deref()) {
                Ok(set) => set,
                Err(e) => {
                    eprintln!("error: {e}");
                    return exit_for(&e);
                }
            };
            let text = serde_json::to_string_pretty(&set).expect("sets serialize");
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Command::Verify { input, tolerance } => {
            let tol = tolerance_from(tolerance);
            let text = match fs::read_to_string(&input) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", input.display());
                    return ExitCode::from(2);
                }
            };
            let set: MubSet = match serde_json::from_str(&text) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: invalid input: {e}");
                    return ExitCode::from(2);
                }
            };
            let report = verify::verify_mum(&set, tol);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Search { dim, all } => {
            let result = if all {
                constructions::all_max_coprime_cliques(dim).map(|sets| json!(sets))
            } else {
                constructions::max_coprime_clique(dim).map(|set| json!(set))
            };
            match result {
                Ok(value) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&value).expect("cliques serialize")
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_for(&e)
                }
            }
        }
        Command::Identities { dim, tolerance } => {
            let tol = tolerance_from(tolerance);
            match schwinger::check_identities(dim, tol) {
                Ok(report) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report).expect("reports serialize")
                    );
                    if report.passed {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_for(&e)
                }
            }
        }
        Command::Gauss { mode } => run_gauss(mode),
        Command::Fixtures => {
            let checks = fixtures::run_all(Tolerance::from_env());
            let mut ok = true;
            for check in &checks {
                println!("{}: {}", check.name, check.outcome);
                ok &= check.passed();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run_gauss(mode: GaussMode) -> ExitCode {
    let print_value = |label: &str, value: num_complex::Complex64| {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                label: [value.re, value.im],
                "modulus": value.norm(),
            }))
            .expect("values serialize")
        );
    };
    let report_deviation = |dev: f64, tol: Tolerance| {
        let passed = tol.within(dev);
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "max_dev": dev,
                "tolerance": tol.abs_eps,
                "passed": passed,
            }))
            .expect("reports serialize")
        );
        if passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    };
    match mode {
        GaussMode::Trace { dim, k } => match gauss::quadratic_trace(dim, k as i128) {
            Ok(value) => {
                print_value("trace", value);
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit_for(&e)
            }
        },
        GaussMode::Sum { a, b, d } => match gauss::gauss_sum(a, b, d) {
            Ok(value) => {
                print_value("sum", value);
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit_for(&e)
            }
        },
        GaussMode::Reciprocity { a, b, d, tolerance } => {
            match gauss::reciprocity_deviation(a, b, d) {
                Ok(dev) => report_deviation(dev, tolerance_from(tolerance)),
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_for(&e)
                }
            }
        }
        GaussMode::Even { dim, tolerance } => match gauss::even_quadratic_sum(dim) {
            Ok(value) => {
                let dev = (value - gauss::even_quadratic_reference(dim)).norm();
                report_deviation(dev, tolerance_from(tolerance))
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit_for(&e)
            }
        },
        GaussMode::Consistency { dim, k, tolerance } => {
            match gauss::gauss_trace_consistency(dim, k) {
                Ok(dev) => report_deviation(dev, tolerance_from(tolerance)),
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_for(&e)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
