//! `seifert`: cosmetic crossing obstructions for genus-one knots given by
//! Seifert data, plus S-equivalence certificate tooling.

mod json;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use seifert::families::KnotSpec;
use seifert::pipeline::{analyze, run_table_screen};
use seifert::sequiv::{
    congruence_classifier_2x2, metabolizer_chain_certificate, metabolizer_matrix, shift_witness,
    unit_shift_pair, verify_certificate,
};
use seifert::Int;

#[derive(Parser)]
#[command(
    name = "seifert",
    version,
    about = "Obstructions to cosmetic crossing changes in genus-one knots, from exact Seifert matrix algebra"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze a knot and report which obstructions fire.
    ///
    /// Specifications: "matrix a,b;c,d", "pretzel p,q,r",
    /// "whitehead +|- n", "catalog NAME" (quoting is optional).
    Check {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        spec: Vec<String>,
        /// Assert that the knot has a unique minimal genus Seifert
        /// surface, enabling the nontrivial-Alexander obstruction
        #[arg(long)]
        unique_surface: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Screen the embedded table of genus-one knots up to 12 crossings
    Table {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct and verify S-equivalence certificates
    Certificate {
        #[command(subcommand)]
        kind: CertCmd,
    },
    /// Decide integral congruence of ((a,b),(b+1,0)) and ((c,b),(b+1,0))
    Congruent {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
}

#[derive(Subcommand)]
enum CertCmd {
    /// Explicit chain from ((a,b),(b+1,0)) to ((a*b^2,b),(b+1,0))
    Chain {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// S-equivalent but non-congruent pair ((a,b),(b+1,0)) and
    /// ((a+1,b),(b+1,0)); requires b > 4 with b = 0 or 2 mod 3
    Pair {
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

fn parse_int(label: &str, s: &str) -> Result<Int, String> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| format!("{label} must be an integer, got {s:?}"))
}

/// Build the full output for a command; emitted in one write.
fn run(cli: Cli) -> Result<String, String> {
    use std::fmt::Write;
    let mut out = String:: new();
    match cli.cmd {
        Cmd::Check {
            spec,
            unique_surface,
            format,
        } => {
            let text = spec.join(" ");
            let spec: KnotSpec = text.parse().map_err(|e| format!("{e}"))?;
            let report = analyze(&spec, unique_surface).map_err(|e| format!("{e}"))?;
            match format {
                Format::Text => write!(out, "{report}").unwrap(),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json::report(&report)).expect("serializable")
                )
                .unwrap(),
            }
        }
        Cmd::Table { format } => {
            let screen = run_table_screen();
            match format {
                Format::Text => write!(out, "{screen}").unwrap(),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json::table(&screen)).expect("serializable")
                )
                .unwrap(),
            }
        }
        Cmd::Certificate { kind } => match kind {
            CertCmd::Chain { a, b } => {
                let a = parse_int("a", &a)?;
                let b = parse_int("b", &b)?;
                let cert = metabolizer_chain_certificate(&a, &b);
                let end = &a * &b * &b;
                writeln!(
                    out,
                    "chain: {} ~ {} in {} moves",
                    metabolizer_matrix(&a, &b),
                    metabolizer_matrix(&end, &b),
                    cert.len()
                )
                .unwrap();
                write!(out, "{cert}").unwrap();
                verify_certificate(&cert).map_err(|e| format!("{e}"))?;
                writeln!(out, "verified: true").unwrap();
            }
            CertCmd::Pair { b } => {
                let b = parse_int("b", &b)?;
                let pair = unit_shift_pair(&b).map_err(|e| format!("{e}"))?;
                writeln!(
                    out,
                    "pair: {} ~ {} with a = {}, k = {} (a+1 = a*b^2 + k*(2b+1))",
                    metabolizer_matrix(&pair.a, &b),
                    metabolizer_matrix(&(&pair.a + 1), &b),
                    pair.a,
                    pair.k
                )
                .unwrap();
                write!(out, "{}", pair.certificate).unwrap();
                verify_certificate(&pair.certificate).map_err(|e| format!("{e}"))?;
                writeln!(out, "verified: true").unwrap();
                writeln!(
                    out,
                    "congruent: no (2b+1 = {} does not divide 1)",
                    Int::from(2) * &b + 1
                )
                .unwrap();
            }
        },
        Cmd::Congruent { a, b, c } => {
            let a = parse_int("a", &a)?;
            let b = parse_int("b", &b)?;
            let c = parse_int("c", &c)?;
            match congruence_classifier_2x2(&a, &b, &c) {
                Some(n) => writeln!(
                    out,
                    "congruent: n = {n} with a + n*(2b+1) = c; witness p = {}",
                    shift_witness(&n)
                )
                .unwrap(),
                None => writeln!(
                    out,
                    "not congruent: 2b+1 = {} does not divide c - a = {}",
                    Int::from(2) * &b + 1,
                    &c - &a
                )
                .unwrap(),
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            use std::io::Write;
            // tolerate a closed pipe (e.g. `seifert table | head`)
            let _ = std::io::stdout().write_all(output.as_bytes());
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
