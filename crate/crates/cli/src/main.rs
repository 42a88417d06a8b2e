//! `walks`: count, list, validate, convert and draw restricted lattice walks.
//!
//! Exit codes: 0 success, 1 input error, 2 verification mismatch.

mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use lattice_walks::bijections::{dyck_to_touchard, touchard_to_dyck, DyckPath};
use lattice_walks::catalog::{golden_table3, verify, RowStatus, VerificationReport};
use lattice_walks::closedforms::general_count;
use lattice_walks::oracle::{count_dp, enumerate, sequence_dp, DEFAULT_MAX_BRUTE};
use lattice_walks::walks::{parse_walk, validate, Walk};
use lattice_walks::{Guards, Natural, WalkType};

#[derive(Parser)]
#[command(
    name = "walks",
    version,
    about = "Exact enumeration of restricted lattice walks"
)]
struct Cli {
    /// Largest number of candidate strings brute-force enumeration may scan.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BRUTE)]
    max_brute: u64,

    /// Ceiling on the DP memo table.
    #[arg(long, global = true, env = "WALKS_MAX_STATES")]
    max_states: Option<NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArg {
    /// Walk type as letters a-e, one per dimension (e.g. `ae`).
    #[arg(long = "type", value_name = "LETTERS")]
    walk_type: String,
}

impl TypeArg {
    fn parse(&self) -> anyhow::Result<WalkType> {
        self.walk_type
            .parse()
            .with_context(|| format!("bad walk type {:?}", self.walk_type))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dp,
    Formula,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Plain,
    Bfile,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum DyckMode {
    Encode,
    Decode,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of valid walks of length n.
    Count {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dp")]
        method: Method,
    },
    /// Print counts for n = 0..=max-n.
    Sequence {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: SeqFormat,
    },
    /// List every valid walk of length n.
    Enumerate {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        n: usize,
    },
    /// Check a walk and point at the first illegal step.
    Validate {
        #[command(flatten)]
        ty: TypeArg,
        walk: String,
    },
    /// Convert between type-ae walks and Dyck words.
    Dyck {
        #[arg(value_enum)]
        mode: DyckMode,
        text: String,
    },
    /// Cross-check oracle, formula, closed forms and golden terms.
    Verify {
        #[arg(
            long,
            conflicts_with = "walk_type",
            required_unless_present = "walk_type"
        )]
        table3: bool,
        #[arg(long = "type", value_name = "LETTERS")]
        walk_type: Option<String>,
        #[arg(long = "n-max", alias = "max-n")]
        n_max: usize,
    },
    /// Draw a walk (or a Dyck word with --dyck) as ASCII or SVG.
    Render {
        #[arg(long = "type", value_name = "LETTERS", default_value = "ae")]
        walk_type: String,
        #[arg(long)]
        dyck: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        text: String,
    },
}

/// Text destined for stdout plus the exit code.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Serialize)]
struct JsonTerm<'a> {
    #[serde(rename = "type")]
    walk_type: &'a str,
    n: usize,
    count: String,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let guards = Guards {
        max_brute: cli.max_brute,
        max_states: cli
            .max_states
            .map(NonZeroUsize::get)
            .unwrap_or(Guards::default().max_states),
    };

    match cli.command {
        Command::Count { ty, n, method } => {
            let t = ty.parse()?;
            let count = match method {
                Method::Dp => count_dp(&t, n, &guards)?,
                Method::Formula => general_count(&t, n as u64),
                Method::Brute => Natural::from(enumerate(&t, n, &guards)?.len()),
            };
            Ok(Outcome::ok(format!("{count}\n")))
        }
        Command::Sequence { ty, max_n, format } => {
            let t = ty.parse()?;
            let terms = sequence_dp(&t, max_n, &guards)?;
            let letters = t.letters();
            let mut out = String::new();
            for (n, term) in terms.iter().enumerate() {
                match format {
                    SeqFormat::Plain => writeln!(out, "{term}")?,
                    SeqFormat::Bfile => writeln!(out, "{n} {term}")?,
                    SeqFormat::Json => {
                        let line = JsonTerm {
                            walk_type: &letters,
                            n,
                            count: term.to_string(),
                        };
                        writeln!(out, "{}", serde_json::to_string(&line)?)?;
                    }
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Enumerate { ty, n } => {
            let t = ty.parse()?;
            let mut out = String::new();
            for w in enumerate(&t, n, &guards)? {
                writeln!(out, "{}", w.to_text())?;
            }
            Ok(Outcome::ok(out))
        }
        Command::Validate { ty, walk } => {
            let t = ty.parse()?;
            let w = parse_walk(&walk, &t)?;
            Ok(match validate(&w, &t).violation() {
                None => Outcome::ok("valid\n".into()),
                Some(v) => {
                    let echo = w.to_text();
                    let col: usize = w.steps()[..v.step_index]
                        .iter()
                        .map(|d| d.token().len())
                        .sum();
                    let stdout = format!(
                        "invalid at step {}: {}\n{}\n{}^\n",
                        v.step_index,
                        v.reason,
                        echo,
                        " ".repeat(col)
                    );
                    Outcome { stdout, code: 1 }
                }
            })
        }
        Command::Dyck { mode, text } => {
            let word = match mode {
                DyckMode::Encode => {
                    let w = parse_walk(&text, &"ae".parse()?)?;
                    touchard_to_dyck(&w)?.to_string()
                }
                DyckMode::Decode => {
                    let p: DyckPath = text.parse()?;
                    dyck_to_touchard(&p)?.to_text()
                }
            };
            Ok(Outcome::ok(format!("{word}\n")))
        }
        Command::Verify {
            table3,
            walk_type,
            n_max,
        } => {
            let reports: Vec<VerificationReport> = if table3 {
                golden_table3()
                    .par_iter()
                    .map(|rec| verify(&rec.walk_type, n_max.min(rec.terms.len() - 1), &guards))
                    .collect()
            } else {
                let raw = walk_type.expect("clap requires --type without --table3");
                let t: WalkType = raw
                    .parse()
                    .with_context(|| format!("bad walk type {raw:?}"))?;
                vec![verify(&t, n_max, &guards)]
            };
            Ok(format_reports(&reports))
        }
        Command::Render {
            walk_type,
            dyck,
            format,
            out,
            text,
        } => {
            let picture = if dyck {
                let p: DyckPath = text.parse()?;
                match format {
                    RenderFormat::Ascii => render::dyck_ascii(&p),
                    RenderFormat::Svg => render::dyck_svg(&p),
                }
            } else {
                let t: WalkType = walk_type
                    .parse()
                    .with_context(|| format!("bad walk type {walk_type:?}"))?;
                if t.dimension_count() > 2 {
                    bail!(
                        "can only draw walks with at most 2 dimensions, type {t} has {}",
                        t.dimension_count()
                    );
                }
                let w: Walk = parse_walk(&text, &t)?;
                if let Some(v) = validate(&w, &t).violation() {
                    bail!("invalid at step {}: {}", v.step_index, v.reason);
                }
                match format {
                    RenderFormat::Ascii => render::walk_ascii(&w),
                    RenderFormat::Svg => render::walk_svg(&w),
                }
            };
            match out {
                Some(path) => {
                    fs::write(&path, picture)
                        .with_context(|| format!("writing {}", path.display()))?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(picture)),
            }
        }
    }
}

fn format_reports(reports: &[VerificationReport]) -> Outcome {
    let mut out = String::from("# type n oracle formula closed golden status\n");
    let mut diagnostics = String::new();
    for report in reports {
        for line in report.structured_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        let t = &report.walk_type;
        for row in &report.rows {
            match &row.status {
                RowStatus::Mismatch(detail) => {
                    writeln!(diagnostics, "MISMATCH {t} n={}: {detail}", row.n).unwrap()
                }
                RowStatus::Skipped(reason) => writeln!(
                    diagnostics,
                    "WARN {t} n={}: oracle skipped: {reason}",
                    row.n
                )
                .unwrap(),
                RowStatus::Agree => {}
            }
        }
        for note in &report.notes {
            writeln!(diagnostics, "NOTE {t} {note}").unwrap();
        }
    }
    let failing = reports.iter().filter(|r| r.has_mismatch()).count();
    out.push_str(&diagnostics);
    writeln!(
        out,
        "checked {} type(s): {} agree, {} mismatch",
        reports.len(),
        reports.len() - failing,
        failing
    )
    .unwrap();
    Outcome {
        stdout: out,
        code: if failing > 0 { 2 } else { 0 },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
