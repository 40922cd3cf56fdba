//! The `squier` command-line front end. [`run`] holds all of the logic so
//! that tests can drive it without spawning a process.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use squier_core::crossedmod::{self, AxiomConfig};
use squier_core::presentation::{
    parse_presentation, CosetLabeler, CosetTable, GroupOracle, Presentation, TrivialSubgroup, WholeGroup,
    DEFAULT_BUDGET,
};
use squier_core::squier::{enumerate_fragment, export_fragment, EdgePath, ExportFormat};
use squier_core::starone::{self, LambdaWord, StarError};
use squier_core::GroupRingVector;

#[derive(Parser, Debug)]
#[command(name = "squier", version, about = "Edge paths, λ-words and crossed modules of group presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate a bounded fragment of the reduced Squier complex.
    Explore {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        vertex_radius: usize,
        #[arg(long, default_value_t = 1)]
        context_radius: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Print the λ-normal form of a λ-word or of an edge path from 1.
    Normalize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        element: PathOrLambda,
    },
    /// Print the boundary of a λ-word (or crossed word) in F(X).
    Boundary {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Abelianize a λ-word into the free module on the relations.
    Abelianize {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum)]
        oracle: Option<OracleKind>,
    },
    /// Decide equality of two λ-words or crossed words.
    Equal {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum)]
        oracle: Option<OracleKind>,
    },
    /// Report whether a λ-word has trivial boundary.
    IdentityCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Images of identities in the free module over the cosets of a subgroup.
    Cockcroft {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Subgroup::Trivial)]
        subgroup: Subgroup,
        /// Lines `<word> -> <label>`; required with `--subgroup labeler-file`.
        #[arg(long)]
        labeler_file: Option<PathBuf>,
        #[arg(long, required = true, allow_hyphen_values = true)]
        lambda: Vec<String>,
        #[arg(long, value_enum)]
        oracle: Option<OracleKind>,
    },
    /// Randomized check of the crossed-module axioms.
    CheckAxioms {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        oracle: OracleKind,
    },
    /// Critical-pair report for the file's rewriting system.
    VerifyOracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Presentation file.
    presentation: PathBuf,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct PathOrLambda {
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Edge path `edge(p, rel, q); ...` starting at 1.
    #[arg(long, allow_hyphen_values = true)]
    path: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OracleKind {
    /// Free reduction; exact only when the group is free.
    Free,
    /// The `oracle rewriting:` block of the presentation file, validated first.
    Rewriting,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Subgroup {
    Trivial,
    Whole,
    LabelerFile,
}

/// A failure with a short machine-readable kind.
#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
    code: i32,
}

impl Failure {
    fn domain(kind: &'static str, message: impl Display) -> Self {
        Failure {
            kind,
            message: message.to_string(),
            code: 1,
        }
    }

    fn usage(message: impl Display) -> Self {
        Failure {
            kind: "usage",
            message: message.to_string(),
            code: 2,
        }
    }
}

impl From<StarError> for Failure {
    fn from(e: StarError) -> Self {
        let kind = match &e {
            StarError::Syntax(_) => "syntax",
            StarError::Presentation(_) => "presentation",
            StarError::Oracle(_) => "oracle",
            StarError::Label(_) => "label",
            StarError::Path(_) => "path",
            StarError::NotAnIdentity(_) => "not-identity",
            _ => "domain",
        };
        Failure::domain(kind, e)
    }
}

/// Output of a successful command: the text and the exit code (nonzero
/// when a check ran to completion but failed).
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Self {
        Outcome { text: text.into(), code: 0 }
    }
}

/// Runs one invocation. Returns the exit code: 0 on success, 1 on a domain
/// error or failed check, 2 on a usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            // clap's message spans several lines; keep the paragraph before
            // the usage hint, joined onto one line.
            let rendered = e.render().to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            let message = message.join(" ");
            let message = message.strip_prefix("error: ").unwrap_or(&message);
            return report(stderr, &Failure::usage(message));
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let text = if outcome.text.ends_with('\n') {
                outcome.text
            } else {
                format!("{}\n", outcome.text)
            };
            if stdout.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            outcome.code
        }
        Err(f) => report(stderr, &f),
    }
}

fn report(stderr: &mut dyn Write, f: &Failure) -> i32 {
    let message = f.message.replace('\n', " ");
    let _ = writeln!(stderr, "error: {}: {}", f.kind, message.trim_end());
    f.code
}

fn load(input: &Input) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(&input.presentation)
        .map_err(|e| Failure::domain("io", format!("{}: {e}", input.presentation.display())))?;
    parse_presentation(&text).map_err(|e| Failure::domain("presentation", e))
}

fn oracle(p: &Presentation, kind: OracleKind) -> Result<GroupOracle, Failure> {
    match kind {
        OracleKind::Free => Ok(GroupOracle::FreeReduction),
        OracleKind::Rewriting => {
            let system = p
                .rewriting_system()
                .ok_or_else(|| Failure::domain("oracle", "presentation has no `oracle rewriting:` block"))?;
            GroupOracle::validated(system.clone(), DEFAULT_BUDGET).map_err(|e| Failure::domain("oracle", e))
        }
    }
}

fn lambda(p: &Presentation, text: &str) -> Result<LambdaWord, Failure> {
    starone::parse_lambda(p, text).map_err(|e| Failure::domain("syntax", e))
}

/// Accepts either `lam(...)` or `gen(...)` factors; crossed words are moved
/// across the isomorphism with λ-words.
fn lambda_or_crossed(p: &Presentation, text: &str) -> Result<LambdaWord, Failure> {
    if text.trim_start().starts_with("gen") {
        let c = crossedmod::parse_crossed(p, text).map_err(|e| Failure::domain("syntax", e))?;
        Ok(crossedmod::phi(&c))
    } else {
        lambda(p, text)
    }
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Explore {
            input,
            vertex_radius,
            context_radius,
            format,
        } => {
            let p = load(&input)?;
            let fragment = enumerate_fragment(&p, vertex_radius, context_radius);
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
            };
            Ok(Outcome::ok(export_fragment(&p, &fragment, format)))
        }
        Command::Normalize { input, element } => {
            let p = load(&input)?;
            let word = match (element.lambda, element.path) {
                (Some(text), _) => lambda_or_crossed(&p, &text)?,
                (None, Some(text)) => {
                    let path = EdgePath::parse(&p, &text, None).map_err(|e| Failure::domain("path", e))?;
                    starone::lambda_normal_form(&p, &path)?
                }
                (None, None) => return Err(Failure::usage("one of --lambda or --path is required")),
            };
            Ok(Outcome::ok(starone::render_lambda(&p, &word)))
        }
        Command::Boundary { input, lambda } => {
            let p = load(&input)?;
            let a = lambda_or_crossed(&p, &lambda)?;
            let b = starone::boundary(&p, &a).map_err(|e| Failure::domain("presentation", e))?;
            Ok(Outcome::ok(p.render(&b)))
        }
        Command::Abelianize { input, lambda, oracle: kind } => {
            let p = load(&input)?;
            let a = lambda_or_crossed(&p, &lambda)?;
            let o = kind.map(|k| oracle(&p, k)).transpose()?;
            let v = starone::abelianize(&a, o.as_ref()).map_err(|e| Failure::domain("oracle", e))?;
            Ok(Outcome::ok(v.render(&p)))
        }
        Command::Equal {
            input,
            left,
            right,
            oracle: kind,
        } => {
            let p = load(&input)?;
            let a = lambda_or_crossed(&p, &left)?;
            let b = lambda_or_crossed(&p, &right)?;
            let o = kind.map(|k| oracle(&p, k)).transpose()?;
            let verdict = starone::equal(&p, &a, &b, o.as_ref())?;
            Ok(Outcome::ok(verdict.to_string()))
        }
        Command::IdentityCheck { input, lambda } => {
            let p = load(&input)?;
            let a = lambda_or_crossed(&p, &lambda)?;
            let b = starone::boundary(&p, &a).map_err(|e| Failure::domain("presentation", e))?;
            Ok(Outcome::ok(if b.is_identity() {
                "identity".to_string()
            } else {
                format!("not an identity: boundary {}", p.render(&b))
            }))
        }
        Command::Cockcroft {
            input,
            subgroup,
            labeler_file,
            lambda,
            oracle: kind,
        } => {
            if subgroup == Subgroup::LabelerFile && labeler_file.is_none() {
                return Err(Failure::usage("--subgroup labeler-file needs --labeler-file"));
            }
            if subgroup != Subgroup::Whole && kind.is_none() {
                return Err(Failure::usage("--subgroup trivial and labeler-file need --oracle"));
            }
            let p = load(&input)?;
            let words = lambda
                .iter()
                .map(|t| lambda_or_crossed(&p, t))
                .collect::<Result<Vec<_>, _>>()?;
            match subgroup {
                Subgroup::Whole => cockcroft(&p, &words, &WholeGroup, |_| "G".to_string()),
                Subgroup::Trivial => {
                    let o = oracle(&p, kind.expect("checked above"))?;
                    cockcroft(&p, &words, &TrivialSubgroup { oracle: &o }, |w| p.render(w))
                }
                Subgroup::LabelerFile => {
                    let o = oracle(&p, kind.expect("checked above"))?;
                    let path = labeler_file.expect("checked above");
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::domain("io", format!("{}: {e}", path.display())))?;
                    let table = CosetTable::parse(&p, &o, &text).map_err(|e| Failure::domain("label", e))?;
                    cockcroft(&p, &words, &table, |s: &String| s.clone())
                }
            }
        }
        Command::CheckAxioms {
            input,
            trials,
            seed,
            oracle: kind,
        } => {
            let p = load(&input)?;
            let o = oracle(&p, kind)?;
            let config = AxiomConfig {
                trials,
                seed,
                ..AxiomConfig::default()
            };
            let report = crossedmod::check_axioms(&p, &o, config).map_err(|e| Failure::domain("oracle", e))?;
            Ok(Outcome {
                text: report.render(),
                code: if report.all_passed() { 0 } else { 1 },
            })
        }
        Command::VerifyOracle { input, budget } => {
            let p = load(&input)?;
            let system = p
                .rewriting_system()
                .ok_or_else(|| Failure::domain("oracle", "presentation has no `oracle rewriting:` block"))?;
            let report = system.validate(budget);
            Ok(Outcome {
                text: report.render(p.alphabet()),
                code: if report.valid() { 0 } else { 1 },
            })
        }
    }
}

/// One image per identity, then whether every image vanished.
fn cockcroft<L: CosetLabeler>(
    p: &Presentation,
    words: &[LambdaWord],
    labeler: &L,
    key: impl Fn(&L::Label) -> String,
) -> Result<Outcome, Failure> {
    let mut out = String::new();
    let mut all_zero = true;
    for a in words {
        let image: GroupRingVector<L::Label> = starone::cockcroft_image(p, a, labeler)?;
        all_zero &= image.is_zero();
        out.push_str(&image.render_with(p, &key));
        out.push('\n');
    }
    out.push_str(&format!("cockcroft: {all_zero}\n"));
    Ok(Outcome::ok(out))
}
