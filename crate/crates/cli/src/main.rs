use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use parry_words::verify::{analyze, sweep, VerifyOptions};
use parry_words::{
    branch_central_factor, branch_spec, canonical_substitution, check_parry, classify, defect_series,
    psi_substitution, renyi_digits, Center, ConfluentParams, Letter, Termination,
};
use serde::Serialize;
use thiserror::Error;

use parry_cli::cli::{Cli, Command, Digits, Format};
use parry_cli::report::{self, AnalysisReport, PsiReport, SweepCase, SweepReport, VerdictReport, VerifyReport};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(#[from] parry_words::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Exit status: 0 all checks pass, 1 a check failed, 2 bad input.
enum Outcome {
    Pass,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    emit(&report::to_json(value))
}

fn outcome(passed: bool) -> Outcome {
    if passed {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    }
}

fn confluent(digits: &parry_words::RenyiDigits, what: &str) -> Result<ConfluentParams, CliError> {
    classify(digits)?
        .params()
        .ok_or_else(|| CliError::Usage(format!("{} needs confluent digits t,..,t,s", what)))
}

fn parse_center(s: &str) -> Result<Center, CliError> {
    match s {
        "eps" | "epsilon" | "ε" => Ok(Center::Empty),
        _ => s
            .parse::<Letter>()
            .map(Center::Letter)
            .map_err(|_| CliError::Usage(format!("center must be `eps` or a letter, got {:?}", s))),
    }
}

fn workers() -> usize {
    std::env::var("PARRY_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Analyze { digits: Digits(d), prefix_len, nmax, format, timings, output } => {
            let d = check_parry(&d)?;
            let opts = VerifyOptions { prefix_len, n_max: nmax.unwrap_or(500), ..Default::default() };
            let a = analyze(&d, &opts)?;
            let n_max = nmax.unwrap_or_else(|| a.horizon().min(500));
            let r = AnalysisReport::new(&a, n_max, timings);
            let text = match format {
                Format::Json => r.to_json(),
                Format::Csv => r.to_csv(),
            };
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => emit(&text)?,
            }
            Ok(outcome(r.all_passed()))
        }
        Command::Verify { digits: Digits(d), prefix_len } => {
            let d = check_parry(&d)?;
            let a = analyze(&d, &VerifyOptions { prefix_len, ..Default::default() })?;
            let psi = a.classification.params().and_then(|p| psi_substitution(&p).ok());
            let r = VerifyReport {
                digits: d.digits().to_vec(),
                classification: (&a.classification).into(),
                horizon: a.horizon(),
                passed: a.all_passed(),
                verdicts: a.verdicts.iter().map(VerdictReport::from).collect(),
                psi: psi.as_ref().map(PsiReport::from),
            };
            emit_json(&r)?;
            Ok(outcome(r.passed))
        }
        Command::Sweep { m_max, t_max, nmax, prefix_len } => {
            if m_max < 2 || t_max < 1 {
                return Err(CliError::Usage("need m-max >= 2 and t-max >= 1".into()));
            }
            let cases = ConfluentParams::sweep(2..=m_max, t_max);
            let opts = VerifyOptions { prefix_len, n_max: nmax.unwrap_or(500), ..Default::default() };
            let entries = sweep(&cases, &opts, workers())?;
            let cases: Vec<SweepCase> = entries
                .iter()
                .map(|e| SweepCase {
                    t: e.params.t,
                    s: e.params.s,
                    m: e.params.m,
                    horizon: e.horizon,
                    passed: e.passed(),
                    failures: e.verdicts.iter().filter(|v| !v.passed).map(VerdictReport::from).collect(),
                })
                .collect();
            let r = SweepReport { passed: cases.iter().all(|c| c.passed), cases };
            emit_json(&r)?;
            Ok(outcome(r.passed))
        }
        Command::Generate { digits: Digits(d), len } => {
            let d = check_parry(&d)?;
            let w = canonical_substitution(&d).fixed_point_prefix(0, len)?;
            emit(&format!("{}\n", w))?;
            Ok(Outcome::Pass)
        }
        Command::Branch { digits: Digits(d), center, len, psi } => {
            let p = confluent(&check_parry(&d)?, "branch")?;
            let center = parse_center(&center)?;
            let spec = branch_spec(&p, center);
            let factor = branch_central_factor(&p, center, len)?;
            let psi = if psi { Some(PsiReport::from(&psi_substitution(&p)?)) } else { None };
            #[derive(Serialize)]
            struct BranchReport {
                center: String,
                exists: bool,
                length: usize,
                factor: String,
                psi: Option<PsiReport>,
            }
            emit_json(&BranchReport {
                center: center.to_string(),
                exists: spec.exists,
                length: factor.len(),
                factor: factor.to_string(),
                psi,
            })?;
            Ok(Outcome::Pass)
        }
        Command::Defect { digits: Digits(d), len } => {
            let d = check_parry(&d)?;
            let w = canonical_substitution(&d).fixed_point_prefix(0, len)?;
            let series = defect_series(&w);
            #[derive(Serialize)]
            struct DefectReport {
                len: usize,
                full: bool,
                max_defect: u32,
                first_defective_prefix: Option<usize>,
                final_defect: u32,
            }
            emit_json(&DefectReport {
                len: w.len(),
                full: series.full,
                max_defect: series.max_defect(),
                first_defective_prefix: series.first_defective_prefix(),
                final_defect: series.defects.last().copied().unwrap_or(0),
            })?;
            Ok(Outcome::Pass)
        }
        Command::Expand { beta, max_digits } => {
            let e = renyi_digits(beta, max_digits)?;
            #[derive(Serialize)]
            struct ExpandReport {
                beta: f64,
                digits: Vec<u32>,
                termination: &'static str,
            }
            emit_json(&ExpandReport {
                beta,
                digits: e.digits,
                termination: match e.termination {
                    Termination::Finite => "finite",
                    Termination::Undecided => "undecided",
                },
            })?;
            Ok(Outcome::Pass)
        }
    }
}
