use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::families::AlgebraPresentation;
use crate::rewrite::{count_normal_words, cumulative, gk_estimate, RewriteError};

use super::{build_family, parse_expr_with, parse_presentation, run_suite, CliError, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "jordan-lift", version, about = "Exact rewriting and Hopf checks for liftings of the Jordan plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SuiteName {
    /// Every check.
    #[value(alias = "paper")]
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the verification suite.
    Verify {
        suite: SuiteName,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<String>,
        /// Leave `ms` null so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        /// Only checks whose id starts with this (repeatable), e.g. `c07`.
        #[arg(long)]
        only: Vec<String>,
    },
    /// Print the normal form of an expression.
    Nf {
        /// Presentation file, or `family:NAME`.
        file: String,
        expr: String,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Normal-word counts per length and the fitted growth exponent.
    Growth {
        file: String,
        #[arg(long, default_value_t = 40)]
        maxlen: usize,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
    /// Complete the rewriting system and print rules and certificate.
    Complete {
        file: String,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
    },
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    raw.iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| CliError::Usage(format!("--param expects K=V, got `{kv}`")))
        })
        .collect()
}

/// `family:NAME` or a presentation file path.
pub fn load(file: &str, raw_params: &[String]) -> Result<AlgebraPresentation, CliError> {
    let params = parse_params(raw_params)?;
    if let Some(name) = file.strip_prefix("family:") {
        return build_family(name, &params);
    }
    if !params.is_empty() {
        return Err(CliError::Usage("--param only applies to family:NAME".into()));
    }
    let src = std::fs::read_to_string(file).map_err(|e| CliError::Io(file.to_string(), e))?;
    let name = Path::new(file).file_stem().and_then(|s| s.to_str()).unwrap_or("file");
    parse_presentation(&src, name).map_err(|err| CliError::Parse { path: file.to_string(), err })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io("stdout".into(), e);
    match cli.command {
        Command::Verify { suite: SuiteName::All, degree, seed, json, no_timing, only } => {
            if degree < 2 {
                return Err(CliError::Usage("--degree must be at least 2".into()));
            }
            let report = run_suite(&SuiteConfig { seed, degree, timing: !no_timing }, &only);
            write!(out, "{}", report.to_text()).map_err(io)?;
            if let Some(path) = json {
                std::fs::write(&path, report.to_json() + "\n").map_err(|e| CliError::Io(path, e))?;
            }
            Ok(report.exit_code())
        }
        Command::Nf { file, expr, params, degree } => {
            let p = load(&file, &params)?;
            let x = parse_expr_with(&expr, &p.alphabet, &p.params, 1, 1)
                .map_err(|err| CliError::Parse { path: "<expr>".into(), err })?;
            let (sys, cert) = p.completed(degree)?;
            if !cert.covers(x.degree()) {
                return Err(RewriteError::NoCertificate(x.degree()).into());
            }
            writeln!(out, "{}", sys.render(&sys.normal_form(&x)?)).map_err(io)?;
            Ok(0)
        }
        Command::Growth { file, maxlen, params } => {
            if maxlen < 8 {
                return Err(CliError::Usage("--maxlen must be at least 8".into()));
            }
            let p = load(&file, &params)?;
            let (sys, cert) = p.completed(6)?;
            if !cert.covers(maxlen) {
                return Err(RewriteError::NoCertificate(maxlen).into());
            }
            let counts = count_normal_words(&sys, maxlen);
            let cum = cumulative(&counts);
            writeln!(out, "{:>4} {:>12} {:>14}", "n", "words", "cumulative").map_err(io)?;
            for (n, (c, s)) in counts.iter().zip(&cum).enumerate() {
                writeln!(out, "{n:>4} {c:>12} {s:>14}").map_err(io)?;
            }
            writeln!(out, "slope: {:.4}", gk_estimate(&cum)?).map_err(io)?;
            Ok(0)
        }
        Command::Complete { file, degree, params } => {
            let p = load(&file, &params)?;
            let input = p.system()?;
            let (sys, cert) = p.completed(degree)?;
            writeln!(out, "input rules: {}", input.rules().len()).map_err(io)?;
            for r in input.rules() {
                writeln!(out, "  {}", input.render_rule(r)).map_err(io)?;
            }
            writeln!(out, "added rules: {}", cert.added.len()).map_err(io)?;
            for r in &cert.added {
                writeln!(out, "  {}", sys.render_rule(r)).map_err(io)?;
            }
            writeln!(out, "final rules: {}", sys.rules().len()).map_err(io)?;
            for r in sys.rules() {
                writeln!(out, "  {}", sys.render_rule(r)).map_err(io)?;
            }
            writeln!(out, "overlaps resolved: {}", cert.resolved.len()).map_err(io)?;
            writeln!(out, "verdict: {:?}", cert.verdict).map_err(io)?;
            writeln!(out, "exhaustive: {}", cert.exhaustive).map_err(io)?;
            Ok(i32::from(!cert.covers(degree)))
        }
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
