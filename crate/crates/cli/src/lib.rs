//! Command-line front end for `lyndon-morph`.
//!
//! [`run`] does all the work and returns the text to print together with
//! the process exit code, so the binary is a thin wrapper.

pub mod report;

use std::collections::BTreeMap;

use clap::{Parser, Subcommand};
use lyndon_morph::oracle::{cross_validate_escalating, Agreement};
use lyndon_morph::{
    cfl_factorize, classify, enumerate_morphisms, theorem_report_with_window, Morphism,
    OracleConfig, Outcome, Word,
};
use serde::{Deserialize, Serialize};

use report::{EvidenceDto, MorphismDto, OracleDto, Report, TheoremDto, VerdictDto, FORMAT_VERSION};

pub const EXIT_LYNDON: u8 = 0;
pub const EXIT_NOT_LYNDON: u8 = 1;
pub const EXIT_NOT_APPLICABLE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_RESOURCE: u8 = 69;

/// Most letters `prefix`, `factorize` and the oracle will materialize.
pub const LETTER_CAP: usize = 10_000_000;
/// Largest image length accepted by `enumerate`.
pub const MAX_ENUMERATE_LEN: usize = 5;
pub const DEFAULT_WINDOW: usize = 5000;
pub const DEFAULT_MAX_WINDOW: usize = 40_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] lyndon_morph::Error),
    #[error("{what} of {requested} letters exceeds the cap of {cap}")]
    Resource {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("morphism {0} is not prolongable on a")]
    NotProlongable(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => EXIT_USAGE,
            CliError::Resource { .. } => EXIT_RESOURCE,
            CliError::NotProlongable(_) => EXIT_NOT_APPLICABLE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lyndon-morph",
    version,
    about = "Decide whether a binary morphism generates an infinite Lyndon word"
)]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, overrides_with = "text")]
    pub json: bool,
    /// Emit plain text (default).
    #[arg(long, global = true, overrides_with = "json")]
    pub text: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a morphism given as `a=WORD;b=WORD`.
    Classify {
        spec: String,
        /// Also run the brute-force oracle on this many letters.
        #[arg(long, value_name = "WINDOW")]
        oracle: Option<usize>,
    },
    /// Report the theorem conditions and the periodicity of the fixed point.
    Check {
        spec: String,
        /// Window used to certify a period.
        #[arg(long, value_name = "WINDOW", default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Print the first N letters of the fixed point.
    Prefix { spec: String, n: usize },
    /// Lyndon factorization of a word over {a, b}, or of a fixed-point
    /// prefix when given a spec and a length.
    Factorize { input: String, n: Option<usize> },
    /// Cross-check the classification against the oracle.
    Verify {
        spec: String,
        #[arg(long, value_name = "WINDOW", default_value_t = DEFAULT_WINDOW)]
        oracle: usize,
        /// Keep doubling the window up to this size while inconclusive.
        #[arg(long, value_name = "WINDOW", default_value_t = DEFAULT_MAX_WINDOW)]
        max_window: usize,
    },
    /// Classify every morphism with images of length at most K.
    Enumerate {
        #[arg(long, value_name = "K", default_value_t = 4)]
        max_len: usize,
        /// Cross-check every prolongable morphism with this window.
        #[arg(long, value_name = "WINDOW")]
        verify: Option<usize>,
        #[arg(long, value_name = "WINDOW", default_value_t = DEFAULT_MAX_WINDOW)]
        max_window: usize,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: u8,
}

pub fn parse_morphism(spec: &str) -> Result<Morphism, CliError> {
    Ok(spec.parse()?)
}

fn check_cap(what: &'static str, requested: usize) -> Result<(), CliError> {
    if requested > LETTER_CAP {
        return Err(CliError::Resource {
            what,
            requested,
            cap: LETTER_CAP,
        });
    }
    Ok(())
}

fn outcome_exit(outcome: &Outcome) -> u8 {
    match outcome {
        Outcome::InfiniteLyndon => EXIT_LYNDON,
        Outcome::NotLyndon(_) => EXIT_NOT_LYNDON,
        Outcome::NotApplicable(_) => EXIT_NOT_APPLICABLE,
    }
}

fn agreement_exit(agreement: Agreement) -> u8 {
    match agreement {
        Agreement::Agree => 0,
        Agreement::Disagree => 1,
        Agreement::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

/// Builds the full report; `oracle` runs the cross-check with escalation up
/// to `max_window`.
pub fn build_report(
    f: &Morphism,
    theorem_window: usize,
    oracle: Option<(usize, usize)>,
) -> Result<Report, CliError> {
    let verdict = classify(f);
    let theorem = if f.is_prolongable() {
        check_cap("window", theorem_window)?;
        Some(TheoremDto::new(&theorem_report_with_window(
            f,
            theorem_window,
        )?))
    } else {
        None
    };
    let oracle = match oracle {
        Some((window, max_window)) if f.is_prolongable() => {
            check_cap("window", window.max(max_window))?;
            let (r, agreement) =
                cross_validate_escalating(f, &OracleConfig::with_window(window), max_window)?;
            Some(OracleDto::new(&r, agreement))
        }
        _ => None,
    };
    Ok(Report {
        format_version: FORMAT_VERSION,
        morphism: MorphismDto::new(f),
        verdict: VerdictDto::new(&verdict),
        evidence: EvidenceDto::new(&verdict),
        theorem,
        oracle,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixOutput {
    pub format_version: u32,
    pub morphism: MorphismDto,
    pub n: usize,
    pub prefix: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizeOutput {
    pub format_version: u32,
    pub word: String,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub window: usize,
    pub max_window: usize,
    pub agree: usize,
    pub disagreements: usize,
    pub inconclusive: usize,
    /// Specs of the morphisms that disagreed or stayed inconclusive.
    pub disagreeing: Vec<String>,
    pub inconclusive_specs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub format_version: u32,
    pub max_len: usize,
    pub total: usize,
    /// Counts keyed by outcome name.
    pub outcomes: BTreeMap<String, usize>,
    /// Counts keyed by reason code.
    pub reasons: BTreeMap<String, usize>,
    pub verification: Option<VerificationSummary>,
}

impl EnumerateOutput {
    fn to_text(&self) -> String {
        let mut out = format!("max_len: {}\nmorphisms: {}\n", self.max_len, self.total);
        for (name, count) in &self.outcomes {
            out += &format!("{name}: {count}\n");
        }
        for (code, count) in &self.reasons {
            out += &format!("  reason {code}: {count}\n");
        }
        if let Some(v) = &self.verification {
            out += &format!(
                "verify window: {} (up to {})\nagree: {}\ndisagreements: {}\ninconclusive: {}\n",
                v.window, v.max_window, v.agree, v.disagreements, v.inconclusive
            );
            for spec in &v.disagreeing {
                out += &format!("  disagrees: {spec}\n");
            }
            for spec in &v.inconclusive_specs {
                out += &format!("  inconclusive: {spec}\n");
            }
        }
        out
    }
}

fn enumerate(
    max_len: usize,
    verify: Option<usize>,
    max_window: usize,
) -> Result<EnumerateOutput, CliError> {
    if max_len == 0 || max_len > MAX_ENUMERATE_LEN {
        return Err(CliError::Usage(format!(
            "--max-len must be between 1 and {MAX_ENUMERATE_LEN}, got {max_len}"
        )));
    }
    let morphisms = enumerate_morphisms(max_len);
    let mut outcomes = BTreeMap::new();
    let mut reasons = BTreeMap::new();
    for name in ["infinite_lyndon", "not_lyndon", "not_applicable"] {
        outcomes.insert(name.to_string(), 0);
    }
    let mut summary = match verify {
        Some(window) => {
            check_cap("window", window.max(max_window))?;
            Some(VerificationSummary {
                window,
                max_window,
                agree: 0,
                disagreements: 0,
                inconclusive: 0,
                disagreeing: Vec::new(),
                inconclusive_specs: Vec::new(),
            })
        }
        None => None,
    };
    for f in &morphisms {
        let outcome = classify(f).outcome;
        *outcomes.entry(outcome.name().to_string()).or_insert(0) += 1;
        *reasons
            .entry(outcome.reason_code().to_string())
            .or_insert(0) += 1;
        if let Some(s) = summary.as_mut().filter(|_| f.is_prolongable()) {
            let cfg = OracleConfig::with_window(s.window);
            match cross_validate_escalating(f, &cfg, s.max_window)?.1 {
                Agreement::Agree => s.agree += 1,
                Agreement::Disagree => {
                    s.disagreements += 1;
                    s.disagreeing.push(f.to_string());
                }
                Agreement::Inconclusive => {
                    s.inconclusive += 1;
                    s.inconclusive_specs.push(f.to_string());
                }
            }
        }
    }
    Ok(EnumerateOutput {
        format_version: FORMAT_VERSION,
        max_len,
        total: morphisms.len(),
        outcomes,
        reasons,
        verification: summary,
    })
}

fn prolongable(spec: &str) -> Result<Morphism, CliError> {
    let f = parse_morphism(spec)?;
    if !f.is_prolongable() {
        return Err(CliError::NotProlongable(f.to_string()));
    }
    Ok(f)
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let json = cli.json;
    let (stdout, exit_code) = match &cli.command {
        Command::Classify { spec, oracle } => {
            let f = parse_morphism(spec)?;
            let report = build_report(
                &f,
                oracle.unwrap_or(DEFAULT_WINDOW),
                oracle.map(|w| (w, w.max(DEFAULT_MAX_WINDOW))),
            )?;
            let code = outcome_exit(&classify(&f).outcome);
            (render(json, &report, Report::to_text), code)
        }
        Command::Check { spec, window } => {
            let f = prolongable(spec)?;
            let report = build_report(&f, *window, None)?;
            let code = outcome_exit(&classify(&f).outcome);
            (render(json, &report, Report::to_text), code)
        }
        Command::Prefix { spec, n } => {
            check_cap("prefix", *n)?;
            let f = prolongable(spec)?;
            let out = PrefixOutput {
                format_version: FORMAT_VERSION,
                morphism: MorphismDto::new(&f),
                n: *n,
                prefix: f.fixed_point_prefix(*n)?.to_string(),
            };
            (render(json, &out, |o| format!("{}\n", o.prefix)), 0)
        }
        Command::Factorize { input, n } => {
            let word = match n {
                Some(n) => {
                    check_cap("prefix", *n)?;
                    prolongable(input)?.fixed_point_prefix(*n)?
                }
                None if input.contains('=') => {
                    return Err(CliError::Usage(
                        "factorize with a morphism spec needs a length".into(),
                    ))
                }
                None => Word::binary(input)?,
            };
            let factors = cfl_factorize(&word)?.factors;
            let out = FactorizeOutput {
                format_version: FORMAT_VERSION,
                word: word.to_string(),
                factors: factors.iter().map(Word::to_string).collect(),
            };
            (
                render(json, &out, |o| format!("{}\n", o.factors.join(" "))),
                0,
            )
        }
        Command::Verify {
            spec,
            oracle,
            max_window,
        } => {
            let f = prolongable(spec)?;
            let max_window = (*max_window).max(*oracle);
            let report = build_report(&f, *oracle, Some((*oracle, max_window)))?;
            let code = match report.oracle.as_ref().map(|o| o.agreement.as_str()) {
                Some("agree") => agreement_exit(Agreement::Agree),
                Some("disagree") => agreement_exit(Agreement::Disagree),
                _ => agreement_exit(Agreement::Inconclusive),
            };
            (render(json, &report, Report::to_text), code)
        }
        Command::Enumerate {
            max_len,
            verify,
            max_window,
        } => {
            let max_window = verify.map_or(*max_window, |w| (*max_window).max(w));
            let out = enumerate(*max_len, *verify, max_window)?;
            let code = match &out.verification {
                Some(v) if v.disagreements > 0 => 1,
                Some(v) if v.inconclusive > 0 => EXIT_INCONCLUSIVE,
                _ => 0,
            };
            (render(json, &out, EnumerateOutput::to_text), code)
        }
    };
    Ok(Output { stdout, exit_code })
}

/// Parses `args` (including the program name) and runs the command.
/// Errors go to the returned `stderr` text; help and version requests exit 0.
pub fn run<I, T>(args: I) -> (Output, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (
                    Output {
                        stdout: String::new(),
                        exit_code: code,
                    },
                    text,
                )
            } else {
                (
                    Output {
                        stdout: text,
                        exit_code: code,
                    },
                    String::new(),
                )
            };
        }
    };
    match execute(&cli) {
        Ok(out) => (out, String::new()),
        Err(e) => (
            Output {
                stdout: String::new(),
                exit_code: e.exit_code(),
            },
            format!("error: {e}\n"),
        ),
    }
}
