//! Command-line front end for `eulercat`.
//!
//! Exit codes: 0 success, 1 a check or expectation failed, 2 bad input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use eulercat::catalogue::{self, Entry};
use eulercat::category::{self, is_category_matrix, random_category_matrix, Category, NoReason, Verdict, DEFAULT_BUDGET};
use eulercat::euler::{build_report, f_series_ratfunc, DEFAULT_SERIES_TERMS};
use eulercat::format::parse_matrix_text;
use eulercat::rational::render_vec;
use eulercat::{CatPresentation, CountMatrix, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "eulercat", version, about = "Euler characteristics of finite categories, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print every invariant of a count matrix or category.
    Report {
        #[arg(short, long)]
        input: PathBuf,
        /// Input format; `.json` files default to `category`.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Number of series coefficients to print.
        #[arg(long, default_value_t = DEFAULT_SERIES_TERMS)]
        terms: usize,
    },
    /// Print the first N nondegenerate simplex counts.
    Series {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short = 'n', long)]
        terms: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run the internal cross-checks; exit 1 if any fails.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check the built-in worked examples against their known values.
    Examples {
        /// Only entries whose name or group contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Write a random count matrix that is realized by some category.
    Gen {
        #[arg(short)]
        m: usize,
        #[arg(long)]
        max_entry: u64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a matrix is the count matrix of some category.
    CheckMatrix {
        #[arg(short, long)]
        input: PathBuf,
        /// Largest total arrow count to search exhaustively.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Where to write the witness category, if one is found.
        #[arg(long)]
        emit_witness: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Matrix,
    Category,
}

enum Input {
    Matrix(CountMatrix),
    Category(CatPresentation),
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

fn read_input(path: &Path, format: Option<Format>) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Format::Category,
        _ => Format::Matrix,
    });
    match format {
        Format::Matrix => parse_matrix_text(&text)
            .map(Input::Matrix)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        Format::Category => serde_json::from_str(&text)
            .map(Input::Category)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
    }
}

/// The count matrix of the input, rejecting invalid categories as bad input.
fn matrix_of(input: Input) -> Result<(CountMatrix, Option<Category>), Failure> {
    match input {
        Input::Matrix(z) => Ok((z, None)),
        Input::Category(p) => {
            let c = category::compile(&p).map_err(|e| Failure::input(e.to_string()))?;
            Ok((c.count_matrix(), Some(c)))
        }
    }
}

fn report(out: &mut dyn Write, path: &Path, format: Option<Format>, terms: usize) -> Result<i32, Failure> {
    let (z, _) = matrix_of(read_input(path, format)?)?;
    let r = build_report(&z, terms);
    write!(out, "{r}").ok();
    Ok(EXIT_OK)
}

fn series(out: &mut dyn Write, path: &Path, format: Option<Format>, terms: usize) -> Result<i32, Failure> {
    let (z, _) = matrix_of(read_input(path, format)?)?;
    let f = f_series_ratfunc(&z);
    writeln!(out, "f(t): {f}").ok();
    let coeffs: Vec<Rational> = match terms {
        0 => Vec::new(),
        n => f.series(n - 1).expect("f has no pole at 0").coefficients,
    };
    writeln!(out, "series: {}", render_vec(&coeffs)).ok();
    Ok(EXIT_OK)
}

fn verify(out: &mut dyn Write, path: &Path, format: Option<Format>) -> Result<i32, Failure> {
    let (z, cat) = match read_input(path, format)? {
        Input::Category(p) => {
            let violations = category::validate(&p);
            if !violations.is_empty() {
                writeln!(out, "FAIL category-axioms: {} violation(s)", violations.len()).ok();
                for v in &violations {
                    writeln!(out, "  {v}").ok();
                }
                return Ok(EXIT_CHECK_FAILED);
            }
            writeln!(out, "PASS category-axioms: presentation is a category").ok();
            let c = category::compile(&p).expect("validated");
            (c.count_matrix(), Some(c))
        }
        Input::Matrix(z) => (z, None),
    };
    let r = build_report(&z, DEFAULT_SERIES_TERMS);
    let mut failed = !r.all_passed();
    for check in &r.checks {
        writeln!(out, "{check}").ok();
    }
    if let Some(c) = cat {
        let chains: Vec<Rational> = (0..DEFAULT_SERIES_TERMS)
            .map(|n| Rational::from_integer(c.count_nondegenerate_chains(n).into()))
            .collect();
        if chains == r.series_prefix.coefficients {
            writeln!(out, "PASS series-vs-chains: first {} coefficients equal the chain counts", chains.len()).ok();
        } else {
            failed = true;
            writeln!(out, "FAIL series-vs-chains: chains {} vs series {}", render_vec(&chains), r.series_prefix).ok();
        }
    }
    writeln!(out, "chi_sigma: {}", chi_sigma_line(&r)).ok();
    Ok(if failed { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn chi_sigma_line(r: &eulercat::EulerReport) -> String {
    let agreed = r.checks.iter().any(|c| c.name == "chi-sigma-two-path" && !c.failed());
    match (&r.chi_sigma, agreed) {
        (Some(v), _) => v.to_string(),
        (None, true) => "undefined, consistent on both paths".to_string(),
        (None, false) => "undefined".to_string(),
    }
}

/// Runs a catalogue and prints its table; exit 1 unless every claim holds.
pub fn run_examples(out: &mut dyn Write, entries: &[Entry], filter: Option<&str>) -> i32 {
    let rows = catalogue::run(entries, filter);
    write!(out, "{}", catalogue::render_table(&rows)).ok();
    if rows.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn gen(out: &mut dyn Write, m: usize, max_entry: u64, seed: u64, output: Option<&Path>) -> Result<i32, Failure> {
    if m == 0 {
        return Err(Failure::input("-m must be at least 1"));
    }
    if max_entry < 2 {
        return Err(Failure::input("--max-entry must be at least 2"));
    }
    let text = random_category_matrix(m, max_entry, seed).to_string();
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        None => {
            write!(out, "{text}").ok();
        }
    }
    Ok(EXIT_OK)
}

fn check_matrix(out: &mut dyn Write, path: &Path, budget: u64, witness: Option<&Path>) -> Result<i32, Failure> {
    let Input::Matrix(z) = read_input(path, Some(Format::Matrix))? else { unreachable!() };
    match is_category_matrix(&z, budget) {
        Verdict::Yes(w) => {
            writeln!(out, "yes: witness with {} arrows", w.arrows.len()).ok();
            if let Some(p) = witness {
                let json = serde_json::to_string_pretty(&w).expect("presentation serializes");
                fs::write(p, json + "\n").map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
            }
        }
        Verdict::No(reason) => {
            let why = match reason {
                NoReason::NotReflexive { index } => format!("diagonal entry {} is 0", index + 1),
                NoReason::NotTransitive { i, j, k } => format!(
                    "Z[{0}][{1}] and Z[{1}][{2}] are positive but Z[{0}][{2}] is 0",
                    i + 1,
                    j + 1,
                    k + 1
                ),
                NoReason::Exhausted => "no associative composition exists".to_string(),
            };
            writeln!(out, "no: {why}").ok();
        }
        Verdict::Inconclusive => {
            writeln!(out, "inconclusive: {} arrows exceed the search budget of {budget}", z.total()).ok();
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Report { input, format, terms } => report(out, input, *format, *terms),
        Command::Series { input, terms, format } => series(out, input, *format, *terms),
        Command::Verify { input, format } => verify(out, input, *format),
        Command::Examples { filter } => Ok(run_examples(out, &catalogue::entries(), filter.as_deref())),
        Command::Gen { m, max_entry, seed, output } => gen(out, *m, *max_entry, *seed, output.as_deref()),
        Command::CheckMatrix { input, budget, emit_witness } => {
            check_matrix(out, input, *budget, emit_witness.as_deref())
        }
    };
    result.unwrap_or_else(|f| {
        writeln!(err, "error: {}", f.message).ok();
        f.code
    })
}
