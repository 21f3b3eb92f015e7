use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poset_gaps::classify::{gen_doublefull, gen_weird};
use poset_gaps::format::{parse, render};
use poset_gaps::harness::{sweep, SweepConfig, SweepResult, MAX_SWEEP_N};
use poset_gaps::report::{analyze, render_text, AnalyzeOptions};
use poset_gaps::Error;

/// Gap sequences of linear extensions and their equality cases.
#[derive(Parser)]
#[command(name = "poset-gaps", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a marked poset file.
    Analyze {
        path: PathBuf,
        /// Restrict per-index output to this k.
        #[arg(long)]
        k: Option<usize>,
        /// Include the polytope section.
        #[arg(long)]
        geometry: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the theorems on every poset up to a given size.
    Sweep {
        /// Largest poset size.
        #[arg(long)]
        n: usize,
        /// Smallest poset size.
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// One poset per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Comma-separated checks or suites (`main-theorems`, `all`).
        #[arg(long, default_value = "main-theorems", value_delimiter = ',')]
        checks: Vec<String>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Skip posets with more linear extensions than this. Defaults to
        /// 20000 when n >= 7 and no limit otherwise.
        #[arg(long)]
        max_extensions: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a marked poset from a named family.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file (stdout when absent).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The six-element example with N = (1, 2, 4, 6, 6).
    Weird,
    /// Chains x < z_1 < ... < z_r and w_1 < ... < w_s < y with extra
    /// relations controlled by t, u, v.
    Doublefull {
        r: usize,
        s: usize,
        t: usize,
        u: usize,
        v: usize,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MarkViolation(_) | Error::CycleDetected(_) | Error::SelfPair(_) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match cli.command {
        Command::Analyze {
            path,
            k,
            geometry,
            format,
        } => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let m = match parse(&text) {
                Ok(m) => m,
                Err(e) => return fail(&e),
            };
            let report = match analyze(&m, &AnalyzeOptions { k, geometry }) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            match format {
                Format::Text => print!("{}", render_text(&report)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
            ExitCode::SUCCESS
        }
        Command::Sweep {
            n,
            n_min,
            dedup,
            checks,
            jobs,
            max_extensions,
            format,
        } => {
            if !(2..=MAX_SWEEP_N).contains(&n) {
                eprintln!("error: --n must be between 2 and {MAX_SWEEP_N}");
                return ExitCode::from(EXIT_USAGE);
            }
            let cfg = SweepConfig {
                n_min: n_min.min(n),
                n_max: n,
                dedup,
                checks,
                jobs,
                max_extensions: max_extensions.or((n >= 7).then_some(20_000)),
                ..SweepConfig::default()
            };
            let result = match sweep(&cfg) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            match format {
                Format::Text => print!("{}", sweep_text(&result)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&result).unwrap()),
            }
            if result.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Command::Gen { family, out } => {
            let m = match family {
                Family::Weird => gen_weird(),
                Family::Doublefull { r, s, t, u, v } => match gen_doublefull(r, s, t, u, v) {
                    Ok(m) => m,
                    Err(e) => return fail(&e),
                },
            };
            let text = render(&m);
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
    }
}

fn sweep_text(r: &SweepResult) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "posets: {} visited, {} skipped; marked pairs: {}",
        r.posets_visited, r.posets_skipped, r.marked_pairs_visited
    );
    for (name, t) in &r.tallies {
        let _ = writeln!(s, "  {name:<14} pass {:>9}  fail {:>6}", t.pass, t.fail);
    }
    for (name, c) in &r.observations {
        let _ = writeln!(s, "  note: {name}: {c}");
    }
    let _ = writeln!(s, "failures: {}", r.failures);
    for c in &r.counterexamples {
        let _ = writeln!(s, "\n# counterexample ({})", c.check);
        for d in &c.details {
            let _ = writeln!(s, "# {d}");
        }
        s.push_str(&c.poset);
    }
    s
}
