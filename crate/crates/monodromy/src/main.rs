//! Thin command-line front end.
//!
//! Every subcommand runs one verification routine from the library, prints a
//! text report (unless `--quiet`), optionally writes the same report as JSON
//! (`--json PATH`), and exits with
//!
//! * `0` — every check passed,
//! * `1` — at least one check failed (a claim is refuted),
//! * `2` — inconclusive (a depth budget ran out) or unusable arguments.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use monodromy::verify::{self, RunConfig};
use monodromy::wajnryb::AngleFraction;
use monodromy::{Rational, VerificationReport};

#[derive(Parser)]
#[command(
    name = "monodromy",
    version,
    about = "Exact reconstruction and verification of reflection monodromy, \
             its eigenvalue polynomial, and infinite-order certificates"
)]
struct Cli {
    /// Write the full report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Suppress the text report; the exit code still carries the outcome.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the A_{k−1} node lattice and verify its structure
    AkLattice {
        /// Covering degree (at least 2)
        #[arg(long)]
        k: u64,
    },
    /// Build the cusp-suspension lattice and verify its structure
    CuspLattice {
        /// Covering degree (at least 2)
        #[arg(long)]
        k: u64,
    },
    /// Verify the reflection identities on the ζ_k^p-eigenspace
    Eigenspace {
        /// Covering degree (at least 2)
        #[arg(long)]
        k: u64,
        /// Eigenvalue exponent: λ = ζ_k^p, 1 ≤ p ≤ k−1
        #[arg(long)]
        p: u64,
        /// Use the two-branch cusp lattice instead of the node lattice
        #[arg(long)]
        cusp: bool,
    },
    /// Verify the symbolic computation over Q(λ), including the golden
    /// quadratic factor of char_poly(W)
    WajnrybSymbolic,
    /// Decide the order of W at λ = ζ_q^p, with an audited certificate trail
    Wajnryb {
        /// Root-of-unity order (at least 2)
        #[arg(long)]
        q: u64,
        /// Exponent: λ = ζ_q^p with λ ≠ 1
        #[arg(long)]
        p: u64,
    },
    /// Certify infinite order at every admissible angle of a degree-d curve
    CertifyPlaneCurve {
        /// Plane-curve degree (at least 4)
        #[arg(long)]
        d: u64,
    },
    /// Certify sup P(e^(iθ)) < bound on a θ-interval by rigorous bisection
    ScanInterval {
        /// Left endpoint as a rational multiple of π, e.g. 1/2-pi
        #[arg(long, value_name = "NUM/DEN-pi", allow_hyphen_values = true)]
        from: AngleFraction,
        /// Right endpoint as a rational multiple of π, e.g. 4/5-pi
        #[arg(long, value_name = "NUM/DEN-pi", allow_hyphen_values = true)]
        to: AngleFraction,
        /// The strict upper bound to certify, as an exact rational (e.g. -2
        /// or -21/10)
        #[arg(long, allow_hyphen_values = true)]
        bound: Rational,
        /// Bisection depth budget
        #[arg(long, default_value_t = 40)]
        max_depth: u32,
    },
    /// Run the complete verification battery
    VerifyAll {
        /// Largest covering degree for the lattice/eigenspace sections
        #[arg(long, default_value_t = 8)]
        kmax: u64,
        /// Largest root-of-unity order and plane-curve degree
        #[arg(long, default_value_t = 20)]
        qmax: u64,
        /// Bisection depth budget for the interval certificate
        #[arg(long, default_value_t = 40)]
        max_depth: u32,
    },
}

fn build_report(command: &Command) -> Result<VerificationReport, String> {
    Ok(match command {
        Command::AkLattice { k } => {
            let mut report =
                VerificationReport::new(format!("ak-lattice --k {k}"), json!({ "k": k }));
            report.absorb(verify::ak_lattice_report(*k)?);
            report
        }
        Command::CuspLattice { k } => {
            let mut report =
                VerificationReport::new(format!("cusp-lattice --k {k}"), json!({ "k": k }));
            report.absorb(verify::cusp_lattice_report(*k)?);
            report
        }
        Command::Eigenspace { k, p, cusp } => {
            let mut report = VerificationReport::new(
                format!(
                    "eigenspace --k {k} --p {p}{}",
                    if *cusp { " --cusp" } else { "" }
                ),
                json!({ "k": k, "p": p, "cusp": cusp }),
            );
            report.absorb(verify::eigenspace_report(*k, *p, *cusp)?);
            report
        }
        Command::WajnrybSymbolic => {
            let mut report = VerificationReport::new("wajnryb-symbolic", json!({}));
            report.absorb(verify::wajnryb_symbolic_report());
            report
        }
        Command::Wajnryb { q, p } => {
            let mut report = VerificationReport::new(
                format!("wajnryb --q {q} --p {p}"),
                json!({ "q": q, "p": p }),
            );
            report.absorb(verify::wajnryb_at_report(*q, *p)?);
            report
        }
        Command::CertifyPlaneCurve { d } => {
            let mut report = VerificationReport::new(
                format!("certify-plane-curve --d {d}"),
                json!({ "d": d }),
            );
            report.absorb(verify::plane_curve_report(*d)?);
            report
        }
        Command::ScanInterval { from, to, bound, max_depth } => {
            let mut report = VerificationReport::new(
                format!("scan-interval --from {from} --to {to} --bound {bound} --max-depth {max_depth}"),
                json!({
                    "from": from.to_string(),
                    "to": to.to_string(),
                    "bound": bound.to_string(),
                    "max_depth": max_depth,
                }),
            );
            report.absorb(verify::scan_interval_report(from, to, bound, *max_depth)?);
            report
        }
        Command::VerifyAll { kmax, qmax, max_depth } => {
            let cfg = RunConfig { kmax: *kmax, qmax: *qmax, max_depth: *max_depth };
            cfg.validate()?;
            verify::verify_all(&cfg)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match build_report(&cli.command) {
        Ok(report) => report,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    if !cli.quiet {
        print!("{}", report.to_text());
    }
    if let Some(path) = &cli.json {
        if let Err(e) = report.write_json(path) {
            eprintln!("error: cannot write JSON report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
