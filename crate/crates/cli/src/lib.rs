//! Command-line front end for `dblcat-core`.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when the
//! input cannot be read or interpreted. Reports are tab-separated, one
//! record per line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

mod commands;
pub mod format;

pub use format::Document;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Core(#[from] dblcat_core::Error),
}

impl CliError {
    fn io(path: &Path, e: std::io::Error) -> CliError {
        CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dblcat", version, about = "Finite strict double categories and their globularily generated pieces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a document against the axioms of its kind.
    Validate { path: PathBuf },
    /// Compute the globularily generated piece and its vertical filtration.
    Gamma {
        path: PathBuf,
        /// Report the vertical length of every member.
        #[arg(long)]
        lengths: bool,
        /// Report a witness tree for every member.
        #[arg(long)]
        witnesses: bool,
        /// Write the gamma_report document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites on a double category.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Generate a document.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Decorated horizontalization of a double category.
    Hstar {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks on a double functor; all of them when no flag is given.
    FunctorCheck {
        path: PathBuf,
        /// Levelwise preservation of the vertical filtration.
        #[arg(long)]
        lemma51: bool,
        /// Naturality of the inclusion of the globularily generated piece
        /// and the triangle identities.
        #[arg(long)]
        prop36: bool,
        /// Lift through the globularily generated piece of the target.
        #[arg(long)]
        universal: bool,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Prop44,
    Cor45,
    Lemma46,
    Lemma51,
    Prop36,
    Prop64,
    All,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TwoCategorySource {
    /// A two_category document.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    two_cat: Option<PathBuf>,
    /// terminal, idempotent, maxN or truncN.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Commuting squares of a poset: chainN, antichainN, diamond, or
    /// `N:i<j,...`.
    Sq {
        #[arg(long)]
        poset: String,
        #[command(flatten)]
        output: Output,
    },
    /// The trivial double category of a 2-category.
    Trivial {
        #[command(flatten)]
        source: TwoCategorySource,
        #[command(flatten)]
        output: Output,
    },
    /// Quintets of a 2-category.
    Quintet {
        #[command(flatten)]
        source: TwoCategorySource,
        #[command(flatten)]
        output: Output,
    },
    /// Product of two double categories.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// A built-in 2-category.
    TwoCat {
        #[arg(long)]
        builtin: String,
        #[command(flatten)]
        output: Output,
    },
    /// The functor Sq(u) for the monotone map u given by object images.
    SqFunctor {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Images of 0, 1, ... separated by commas.
        #[arg(long)]
        objects: String,
        #[command(flatten)]
        output: Output,
    },
    /// A tagged fragment of algebras and bimodules: scalar, swap,
    /// frobenius or formal.
    Fragment {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        output: Output,
    },
    /// Write every corpus double category to a directory.
    Corpus {
        #[arg(long)]
        dir: PathBuf,
    },
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "dblcat: {e}");
            EXIT_MALFORMED
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Validate { path } => commands::validate(&load(&path)?, out),
        Command::Gamma {
            path,
            lengths,
            witnesses,
            out: dest,
        } => commands::gamma(&load(&path)?, lengths, witnesses, dest.as_deref(), out),
        Command::Check { path, suite } => commands::check(&load(&path)?, suite, out),
        Command::Gen { kind } => commands::gen(kind, out),
        Command::Hstar { path, out: dest } => commands::hstar(&load(&path)?, dest.as_deref(), out),
        Command::FunctorCheck {
            path,
            lemma51,
            prop36,
            universal,
        } => {
            let all = !(lemma51 || prop36 || universal);
            commands::functor_check(&load(&path)?, lemma51 || all, prop36 || all, universal || all, out)
        }
    }
}

/// Reads and parses a document.
pub fn load(path: &Path) -> Result<Document, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    let text = String::from_utf8(bytes).map_err(|_| CliError::Malformed("input is not UTF-8".into()))?;
    Document::parse(&text)
}

/// Writes the canonical text of `doc` to `dest`, or to `out` when no path
/// is given.
fn emit(doc: &Document, dest: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    let text = doc.to_canonical();
    match dest {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}
