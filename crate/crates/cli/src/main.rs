//! `artin`: command-line access to the Coxeter kernel, parabolic
//! decompositions, the retraction and the verification suites.
//!
//! Exit status: 0 on success, 1 on a domain error or failed verification,
//! 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use artin_parabolic::artin::{iota, theta, ArtinWord};
use artin_parabolic::par::Execution;
use artin_parabolic::retraction::{self, json, InstanceParams};
use artin_parabolic::verify::{self, Suite, SuiteReport};
use artin_parabolic::{Coxeter, Error, GeneratorSubset, Presentation};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Parabolic subgroups of Artin groups and their Coxeter quotients")]
struct Cli {
    /// Presentation file (text or JSON).
    #[arg(short, long, global = true)]
    presentation: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Braid-move closure cap for the word-problem kernel.
    #[arg(long, global = true)]
    closure_cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical (ShortLex-least reduced) form of a Coxeter word.
    Reduce { word: Vec<String> },
    /// Length of a Coxeter word.
    Length { word: Vec<String> },
    /// Left and right descent sets.
    Descents { word: Vec<String> },
    /// Enumerate the Coxeter group up to a number of elements.
    Enumerate {
        #[arg(long)]
        cap: usize,
    },
    /// Split u = v w with v in W_X and w (X, ∅)-minimal.
    Decompose {
        #[arg(long)]
        x: String,
        word: Vec<String>,
    },
    /// Split u = u1 w0 u2 with w0 the minimal element of W_X u W_Y.
    DoubleCoset {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        word: Vec<String>,
    },
    /// Image of an Artin word in the Coxeter group.
    Theta { word: Vec<String> },
    /// Positive lift of a reduced Coxeter word.
    Iota { word: Vec<String> },
    /// Apply the retraction onto A_X.
    Retract {
        #[arg(long)]
        x: String,
        /// Emit the per-letter trace as JSON.
        #[arg(long)]
        trace: bool,
        word: Vec<String>,
    },
    /// Rewrite iota(w) A_Y iota(w)^-1 as alpha A_Y' alpha^-1 with alpha in A_X.
    Transport {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        word: Vec<String>,
    },
    /// Given alpha A_Y alpha^-1 ⊆ A_X, find Y' ⊆ X and gamma in A_X with the same conjugate.
    Theorem {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        word: Vec<String>,
    },
    /// Generate an input for `theorem` that satisfies its hypothesis.
    Generate {
        #[arg(long)]
        x_size: usize,
        #[arg(long)]
        y_size: usize,
        #[arg(long)]
        pad: usize,
        /// Longest Coxeter element tried as the middle factor.
        #[arg(long, default_value_t = 6)]
        w_len: usize,
    },
    /// Run a verification suite.
    Verify {
        /// coxeter-oracle, lemma21, prop23, lemma22, lemma24, theorem11 or all.
        #[arg(long)]
        suite: String,
        /// Run instances on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn load(cli: &Cli) -> Result<Coxeter, Failure> {
    let path =
        cli.presentation.as_ref().ok_or_else(|| Failure::Usage("this command needs --presentation <FILE>".into()))?;
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let p = Presentation::parse(&text)?;
    Ok(match cli.closure_cap {
        Some(cap) => Coxeter::with_cap(p, cap),
        None => Coxeter::new(p),
    })
}

fn subset(g: &Coxeter, text: &str) -> Result<GeneratorSubset, Failure> {
    Ok(g.presentation().parse_subset(text)?)
}

#[derive(Serialize)]
struct WordJson {
    word: String,
}

#[derive(Serialize)]
struct LengthJson {
    word: String,
    length: usize,
}

#[derive(Serialize)]
struct DescentsJson {
    word: String,
    left: Vec<String>,
    right: Vec<String>,
}

#[derive(Serialize)]
struct EnumerateJson {
    finite: bool,
    count: usize,
    elements: Vec<String>,
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let json_out = cli.output == Output::Json;
    let word_json = |w: String| if json_out { to_json(&WordJson { word: w }) } else { line(w) };

    if let Command::Verify { suite, sequential } = &cli.command {
        let suites = Suite::parse_list(suite).map_err(|e| Failure::Usage(e.to_string()))?;
        let exec = if *sequential { Execution::Sequential } else { Execution::default() };
        let reports: Vec<SuiteReport> = suites.into_iter().map(|s| verify::run(s, exec)).collect();
        let out = if json_out { to_json(&reports) } else { render_reports(&reports) };
        if reports.iter().all(SuiteReport::ok) {
            return Ok(out);
        }
        print!("{out}");
        return Err(Failure::Verification);
    }

    let g = load(cli)?;
    let p = g.presentation();
    let coxeter_word = |w: &[String]| g.parse(&w.join(" "));
    let artin_word = |w: &[String]| ArtinWord::parse(p, &w.join(" "));

    Ok(match &cli.command {
        Command::Reduce { word } => word_json(g.format(&coxeter_word(word)?)),
        Command::Length { word } => {
            let u = coxeter_word(word)?;
            if json_out {
                to_json(&LengthJson { word: g.format(&u), length: u.length() })
            } else {
                line(u.length())
            }
        }
        Command::Descents { word } => {
            let u = coxeter_word(word)?;
            let (left, right) = (g.left_descents(&u)?, g.right_descents(&u)?);
            if json_out {
                to_json(&DescentsJson { word: g.format(&u), left: p.subset_names(left), right: p.subset_names(right) })
            } else {
                format!("left: {}\nright: {}\n", p.format_subset(left), p.format_subset(right))
            }
        }
        Command::Enumerate { cap } => {
            let (elems, finite) = g.enumerate(*cap)?;
            let elements: Vec<String> = elems.iter().map(|e| g.format(e)).collect();
            if json_out {
                to_json(&EnumerateJson { finite, count: elements.len(), elements })
            } else {
                let mut s: String = elements.iter().map(|e| if e.is_empty() { line("1") } else { line(e) }).collect();
                s += &if finite {
                    format!("# order {}\n", elements.len())
                } else {
                    format!("# stopped after {} elements; the group may be infinite\n", elements.len())
                };
                s
            }
        }
        Command::Decompose { x, word } => {
            let d = g.decompose_left(subset(&g, x)?, &coxeter_word(word)?)?;
            to_json(&g.coset_json(&d))
        }
        Command::DoubleCoset { x, y, word } => {
            let d = g.double_coset_decompose(subset(&g, x)?, subset(&g, y)?, &coxeter_word(word)?)?;
            to_json(&g.double_coset_json(&d))
        }
        Command::Theta { word } => word_json(g.format(&theta(&g, &artin_word(word)?)?)),
        Command::Iota { word } => word_json(iota(&coxeter_word(word)?).format(p)),
        Command::Retract { x, trace, word } => {
            let x = subset(&g, x)?;
            let w = artin_word(word)?;
            let r = retraction::pi_hat(&g, x, &w)?;
            if *trace || json_out {
                to_json(&json::retraction(&g, x, &w, &r, *trace))
            } else {
                line(r.word.format(p))
            }
        }
        Command::Transport { x, y, word } => {
            let (x, y) = (subset(&g, x)?, subset(&g, y)?);
            let w = coxeter_word(word)?;
            let t = retraction::transport(&g, x, y, &w)?;
            to_json(&json::transport(&g, x, y, &w, &t))
        }
        Command::Theorem { x, y, word } => {
            let (x, y) = (subset(&g, x)?, subset(&g, y)?);
            let alpha = artin_word(word)?;
            let r = retraction::conjugate_into_parabolic(&g, x, y, &alpha)?;
            let report = retraction::verify_conjugation(&g, x, y, &alpha, &r)?;
            to_json(&json::theorem(&g, x, y, &alpha, &r, Some(report)))
        }
        Command::Generate { x_size, y_size, pad, w_len } => {
            let params = InstanceParams { x_size: *x_size, y_size: *y_size, pad_len: *pad, w_search_len: *w_len };
            let inst = retraction::generate_instance(&g, cli.seed, params)?;
            to_json(&json::instance(&g, cli.seed, &inst))
        }
        Command::Verify { .. } => unreachable!("handled above"),
    })
}

fn render_reports(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.ok() { "PASS" } else { "FAIL" };
        out += &format!("{status} {}\n", r.suite);
        for c in &r.checks {
            let mark = if c.ok() { "ok  " } else { "FAIL" };
            out += &format!("  {mark} {}: {} passed, {} failed", c.name, c.passed, c.failed);
            if c.undecided > 0 {
                out += &format!(", {} undecided", c.undecided);
            }
            out.push('\n');
            for f in &c.failures {
                out += &format!("         {f}\n");
            }
        }
    }
    out
}
