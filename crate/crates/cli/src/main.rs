use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monostar::analysis::{analyze, AnalysisOptions};
use monostar::explorer::{anneal, SearchConfig, SearchError};
use monostar::generators::{affine_colouring, constant_colouring, projective_local_colouring, random_colouring};
use monostar::oracle::{
    exhaustive_theorem_check, CheckMode, EnumerationSpec, ExhaustError, ExhaustParams, DEFAULT_BUDGET,
};
use monostar::prover::ProveError;
use monostar::{parse_colouring, prove_global, prove_local, verify_certificate, EdgeColouring, TripleStarCertificate};

#[derive(Parser)]
#[command(name = "monostar", version, about = "Monochromatic double and triple stars in edge-coloured K_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a colouring.
    #[command(subcommand)]
    Gen(Gen),
    /// Report components, stars and bound comparisons for a colouring.
    Analyze {
        /// Colouring file, or '-' for standard input.
        path: String,
        #[arg(long)]
        json: bool,
        /// Skip the triple-star search.
        #[arg(long)]
        no_triple: bool,
    },
    /// Produce a certified triple star meeting the bound.
    Prove {
        path: String,
        /// Use the local-colouring bound with locality --r.
        #[arg(long, requires = "r")]
        local: bool,
        /// Colour count (default: the header's m) or, with --local, the locality.
        #[arg(long)]
        r: Option<usize>,
        /// Output path for the certificate, or '-'.
        #[arg(long)]
        cert: String,
    },
    /// Independently re-check a certificate against a colouring.
    Verify {
        #[arg(long)]
        cert: String,
        path: String,
    },
    /// Check every colouring of K_n up to colour relabelling.
    Exhaust {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        mode: CheckMode,
        /// Also prove and verify a certificate for every colouring.
        #[arg(long)]
        prove: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Only count colourings of at most this locality and check the local bound.
        #[arg(long)]
        locality: Option<usize>,
    },
    /// Simulated annealing for colourings with small monochromatic maxima.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        objective: CheckMode,
        #[arg(long)]
        iters: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = 2.0)]
        temperature: f64,
        #[arg(long, default_value_t = 0.995)]
        cooling: f64,
        /// Weight of the plateau tie-breaking score; 0 anneals the bare objective.
        #[arg(long, default_value_t = 0.0)]
        plateau_weight: f64,
        /// Where to write the best colouring; the run summary then goes to stdout.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Affine-plane colouring, n = mult·q², q+1 colours.
    Affine(PlaneArgs),
    /// Projective-plane local colouring, n = mult·(q²+q+1).
    Projective(PlaneArgs),
    /// Uniform random colouring.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// All edges colour 1.
    Constant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

#[derive(Args)]
struct PlaneArgs {
    #[arg(long)]
    q: usize,
    #[arg(long)]
    mult: usize,
    #[arg(long, default_value = "-")]
    out: String,
}

/// Maps onto the process exit code.
enum Failure {
    /// Verification failure, theorem violation or exhaust violation.
    Check(String),
    /// Usage, parse or I/O error.
    Usage(String),
}

type CmdResult = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn write_output(path: &str, text: &str) -> CmdResult {
    if path == "-" {
        io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("stdout: {e}")))
    } else {
        fs::write(Path::new(path), text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn load_colouring(path: &str) -> Result<EdgeColouring, Failure> {
    let text = read_input(path)?;
    parse_colouring(&text).map_err(|e| Failure::Usage(format!("{path}:{e}")))
}

fn cmd_gen(gen: Gen) -> CmdResult {
    let (colouring, out) = match gen {
        Gen::Affine(a) => (affine_colouring(a.q, a.mult), a.out),
        Gen::Projective(a) => (projective_local_colouring(a.q, a.mult), a.out),
        Gen::Random { n, r, seed, out } => (random_colouring(n, r, seed), out),
        Gen::Constant { n, r, out } => (constant_colouring(n, r), out),
    };
    write_output(&out, &colouring.map_err(usage)?.to_text())
}

fn cmd_prove(path: &str, local: bool, r: Option<usize>, cert_path: &str) -> CmdResult {
    let colouring = load_colouring(path)?;
    let view = colouring.view();
    let result = if local {
        prove_local(&view, r.expect("clap requires --r with --local"))
    } else {
        prove_global(&view, r.unwrap_or(colouring.m()))
    };
    let cert = match result {
        Ok(cert) => cert,
        Err(e @ ProveError::TheoremViolation { .. }) | Err(e @ ProveError::Inconsistent(_)) => {
            return Err(Failure::Check(e.to_string()))
        }
        Err(e) => return Err(usage(e)),
    };
    write_output(cert_path, &cert.to_json())?;
    eprintln!(
        "certified triple star of order {} in colour {} (bound {}/{})",
        cert.order, cert.colour, cert.bound.num, cert.bound.den
    );
    Ok(())
}

fn cmd_verify(cert_path: &str, path: &str) -> CmdResult {
    let colouring = load_colouring(path)?;
    let text = read_input(cert_path)?;
    let cert = TripleStarCertificate::from_json(&text).map_err(|e| Failure::Usage(format!("{cert_path}: {e}")))?;
    match verify_certificate(&colouring, &cert) {
        Ok(()) => {
            println!("accept");
            Ok(())
        }
        Err(reason) => {
            println!("reject: {reason}");
            Err(Failure::Check(format!("certificate rejected: {reason}")))
        }
    }
}

fn cmd_exhaust(params: ExhaustParams) -> CmdResult {
    match exhaustive_theorem_check(&params) {
        Ok(report) => {
            write_output("-", &report.to_json())?;
            if report.violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(format!("{} violations found", report.violations.len())))
            }
        }
        Err(ExhaustError::BudgetExceeded { required, budget, partial }) => {
            write_output("-", &partial.to_json())?;
            if !partial.violations.is_empty() {
                return Err(Failure::Check(format!(
                    "{} violations found before the budget ran out",
                    partial.violations.len()
                )));
            }
            Err(Failure::Usage(format!(
                "budget of {budget} colourings exhausted ({required} needed); partial report above"
            )))
        }
        Err(e) => Err(usage(e)),
    }
}

fn cmd_search(config: SearchConfig, out: Option<String>) -> CmdResult {
    let outcome = match anneal(&config) {
        Ok(o) => o,
        Err(e @ SearchError::TheoremViolation { .. }) => return Err(Failure::Check(e.to_string())),
        Err(e) => return Err(usage(e)),
    };
    let summary = serde_json::to_string_pretty(&outcome.summary(&config)).map_err(usage)? + "\n";
    match out {
        Some(path) if path != "-" => {
            write_output(&path, &outcome.best.to_text())?;
            write_output("-", &summary)
        }
        _ => {
            write_output("-", &outcome.best.to_text())?;
            eprint!("{summary}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen(gen) => cmd_gen(gen),
        Command::Analyze { path, json, no_triple } => {
            let colouring = load_colouring(&path)?;
            let report = analyze(&colouring, AnalysisOptions { skip_triple: no_triple });
            write_output("-", &if json { report.to_json() } else { report.to_text() })
        }
        Command::Prove { path, local, r, cert } => cmd_prove(&path, local, r, &cert),
        Command::Verify { cert, path } => cmd_verify(&cert, &path),
        Command::Exhaust { n, r, mode, prove, threads, budget, locality } => cmd_exhaust(ExhaustParams {
            spec: EnumerationSpec { threads, budget, ..EnumerationSpec::new(n, r) },
            mode,
            prove,
            local: locality,
        }),
        Command::Search {
            n,
            r,
            objective,
            iters,
            seed,
            restarts,
            threads,
            temperature,
            cooling,
            plateau_weight,
            out,
        } => cmd_search(
            SearchConfig {
                iterations: iters,
                seed,
                restarts,
                threads,
                initial_temperature: temperature,
                cooling,
                plateau_weight,
                ..SearchConfig::new(n, r, objective)
            },
            out,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
