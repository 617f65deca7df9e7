use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qfasym_cli::check::{self, Suite};
use qfasym_cli::commands::compute::{compute, Measure};
use qfasym_cli::commands::qfi::{observable_from_file, qfi_report};
use qfasym_cli::commands::sweep::{self, SweepFamily};
use qfasym_cli::commands::{make, parse_dims, parse_partition};
use qfasym_cli::report::{self, emit, Format, ReportRow};
use qfasym_cli::state_file::StateFile;
use qfasym_cli::{json, CliError};
use qfasym_core::Observable;

/// Quantum Fisher information, asymmetry and correlation measures.
///
/// Exit codes: 0 success, 1 property failure, 2 input error.
#[derive(Parser)]
#[command(name = "qfasym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Output path; stdout when omitted or `-`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Correlation, asymmetry and per-generator QFI of a state file.
    Compute {
        /// State file, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        /// Bipartition `AxB`; defaults to the file's dims when it has two factors.
        #[arg(long, value_parser = partition)]
        partition: Option<[usize; 2]>,
        #[arg(long, value_enum, default_value = "all")]
        measure: Measure,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Write a state file for a named family.
    Make {
        #[command(subcommand)]
        family: MakeFamily,
    },
    /// Sweep a family parameter and cross-check closed forms.
    Sweep {
        #[command(subcommand)]
        family: SweepCommand,
    },
    /// Run the seeded invariant suite.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Text summary when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[command(flatten)]
        output: Output,
    },
    /// QFI of one observable, with SLD residual and variance.
    Qfi {
        #[arg(long)]
        input: PathBuf,
        /// Pauli string such as `XZ`.
        #[arg(
            long,
            conflicts_with = "observable_file",
            required_unless_present = "observable_file"
        )]
        observable: Option<String>,
        /// JSON matrix of `[re, im]` pairs.
        #[arg(long)]
        observable_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum MakeFamily {
    /// `w |Ψ⁻⟩⟨Ψ⁻| + (1 − w) I/4`.
    Werner {
        #[arg(long, allow_hyphen_values = true)]
        w: f64,
        #[command(flatten)]
        output: Output,
    },
    /// `I/4 + Σ c_i σ_i ⊗ σ_i`.
    BellDiagonal {
        /// `c1,c2,c3`.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        c: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// `Σ_k |k…k⟩/√d`.
    Ghz {
        #[arg(long, default_value_t = 3)]
        parties: usize,
        #[arg(long, default_value_t = 2)]
        local_dim: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Random density matrix.
    Random {
        /// Factor dimensions, e.g. `2x3`.
        #[arg(long, value_parser = dims)]
        dims: DimList,
        /// Rank; full rank when omitted.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Range {
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    #[arg(long, default_value_t = 11)]
    steps: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand)]
enum SweepCommand {
    /// Werner weight `w`.
    Werner {
        #[command(flatten)]
        range: Range,
    },
    /// `c = t · (c1, c2, c3)` over `t`.
    BellDiagonal {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        direction: Vec<f64>,
        #[command(flatten)]
        range: Range,
    },
    /// `√λ|00⟩ + √(1−λ)|11⟩` over `λ`.
    Pure {
        #[command(flatten)]
        range: Range,
    },
}

fn partition(s: &str) -> Result<[usize; 2], String> {
    parse_partition(s).map_err(|e| e.to_string())
}

/// Factor list parsed from one `AxB…` token.
#[derive(Clone)]
struct DimList(Vec<usize>);

fn dims(s: &str) -> Result<DimList, String> {
    parse_dims(s).map(DimList).map_err(|e| e.to_string())
}

fn triple(v: &[f64]) -> Result<[f64; 3], CliError> {
    <[f64; 3]>::try_from(v).map_err(|_| {
        CliError::Input(format!(
            "expected three comma-separated values, got {}",
            v.len()
        ))
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Compute {
            input,
            partition,
            measure,
            format,
            output,
        } => {
            let state = StateFile::read(&input)?.to_state()?;
            let rows = compute(&state, partition, measure)?;
            emit(&report::render(&rows, format)?, output.out.as_deref())?;
        }
        Command::Make { family } => {
            let (file, out) = match family {
                MakeFamily::Werner { w, output } => (make::werner(w)?, output.out),
                MakeFamily::BellDiagonal { c, output } => {
                    (make::bell_diagonal(triple(&c)?)?, output.out)
                }
                MakeFamily::Ghz {
                    parties,
                    local_dim,
                    output,
                } => (make::ghz(parties, local_dim)?, output.out),
                MakeFamily::Random {
                    dims,
                    rank,
                    seed,
                    output,
                } => (make::random(&dims.0, rank, seed)?, output.out),
            };
            emit(&file.to_json()?, out.as_deref())?;
        }
        Command::Sweep { family } => {
            let (family, range) = match family {
                SweepCommand::Werner { range } => (SweepFamily::Werner, range),
                SweepCommand::BellDiagonal { direction, range } => (
                    SweepFamily::BellDiagonal {
                        direction: triple(&direction)?,
                    },
                    range,
                ),
                SweepCommand::Pure { range } => (SweepFamily::Pure, range),
            };
            let rows = sweep::sweep(family, range.from, range.to, range.steps)?;
            for r in rows.iter().filter(|r| !r.warning.is_empty()) {
                eprintln!("warning: param {}: {}", r.param, r.warning);
            }
            emit(
                &sweep::render(&rows, range.format)?,
                range.output.out.as_deref(),
            )?;
            if rows.iter().any(|r| r.is_mismatch()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Check {
            suite,
            trials,
            seed,
            format,
            output,
        } => {
            let report = check::run(suite, trials, seed);
            let text = match format {
                None => report.render_text(),
                Some(Format::Json) => json::to_string(&report)?,
                Some(Format::Csv) => {
                    let rows: Vec<ReportRow> = report
                        .properties
                        .iter()
                        .map(|p| {
                            ReportRow::new(format!("{}.{}", p.suite, p.name), p.max_deviation, &[])
                                .with_param("tolerance", p.tolerance)
                                .with_param("passed", f64::from(u8::from(p.passed)))
                                .with_seed(seed)
                        })
                        .collect();
                    report::render(&rows, Format::Csv)?
                }
            };
            emit(&text, output.out.as_deref())?;
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Qfi {
            input,
            observable,
            observable_file,
            format,
            output,
        } => {
            let state = StateFile::read(&input)?.to_state()?;
            let k = match (observable, observable_file) {
                (Some(s), _) => Observable::from_pauli_string(&s)?,
                (None, Some(path)) => observable_from_file(&path)?,
                (None, None) => unreachable!("clap requires one observable source"),
            };
            let r = qfi_report(&state, &k)?;
            let rows = [
                ReportRow::new("qfi", r.qfi, state.dims()),
                ReportRow::new("sld_residual", r.sld_residual, state.dims()),
                ReportRow::new("variance", r.variance, state.dims()),
                ReportRow::new("skipped_pairs", r.skipped_pairs as f64, state.dims()),
            ];
            emit(&report::render(&rows, format)?, output.out.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        super::Cli::command().debug_assert();
    }
}
