//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed containment check, 2 parse error,
//! 3 semantic error (an infinite singleton interval).

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{run_bench, Workload};
use crate::check::{check_containment_with, check_random_boxes};
use crate::config::EvalConfig;
use crate::error::{IntervalError, ParseError};
use crate::interval::Interval;
use crate::pow::pow_full;
use crate::text::{format_bound, format_hex, parse_bound, parse_interval, BoundStyle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

/// Samples drawn per random box in `check` without `--box`.
const SAMPLES_PER_BOX: usize = 100;

#[derive(Debug, Parser)]
#[command(
    name = "ipow",
    version,
    about = "Interval power x^y for unconstrained intervals"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Render bounds as C99 hex-floats
    #[arg(long, global = true)]
    pub hex: bool,
    /// Outward widening of inexact corner values, in ulps
    #[arg(long, global = true, default_value_t = EvalConfig::DEFAULT_SLACK_ULPS)]
    pub ulps: u32,
    /// Disable the exact-value shortcuts
    #[arg(long = "no-exact", global = true)]
    pub no_exact: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate x^y once
    Eval {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Evaluate `xlo xhi ylo yhi` lines from stdin
    Batch,
    /// Check containment against the exact oracle
    Check {
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// A single box `"<x> <y>"` instead of random boxes
        #[arg(long = "box")]
        boxes: Option<String>,
    },
    /// Time pow_full against the non-negative kernel
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        iters: usize,
        #[arg(long, value_enum, default_value_t = WorkloadArg::Mixed)]
        workload: WorkloadArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WorkloadArg {
    Mixed,
    Nonneg,
}

impl GlobalOpts {
    fn style(&self) -> BoundStyle {
        if self.hex {
            BoundStyle::Hex
        } else {
            BoundStyle::Decimal
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = match EvalConfig::new(cli.opts.ulps, !cli.opts.no_exact) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: --ulps: {e}");
            return EXIT_PARSE;
        }
    };
    let code = match &cli.command {
        Command::Eval { x, y } => cmd_eval(x, y, &cli.opts, &cfg, out, err),
        Command::Batch => cmd_batch(input, &cli.opts, &cfg, out, err),
        Command::Check { n, seed, boxes } => {
            cmd_check(*n, *seed, boxes.as_deref(), &cli.opts, &cfg, out, err)
        }
        Command::Bench {
            iters,
            workload,
            seed,
        } => cmd_bench(*iters, *workload, *seed, &cli.opts, &cfg, out),
    };
    let _ = out.flush();
    code
}

fn exit_code_for(e: &ParseError) -> i32 {
    match e {
        ParseError::Interval {
            source: IntervalError::InfiniteSingleton,
            ..
        } => EXIT_SEMANTIC,
        _ => EXIT_PARSE,
    }
}

fn render(r: &Interval, opts: &GlobalOpts) -> String {
    if opts.json {
        return render_json(r).to_string();
    }
    crate::text::format_interval(r, opts.style())
}

/// `{"lo": "<hex>", "hi": "<hex>"}` or `{"empty": true}`.
pub fn render_json(r: &Interval) -> serde_json::Value {
    match r.bounds() {
        None => json!({ "empty": true }),
        Some((lo, hi)) => json!({ "lo": format_hex(lo), "hi": format_hex(hi) }),
    }
}

pub fn cmd_eval(
    x: &str,
    y: &str,
    opts: &GlobalOpts,
    cfg: &EvalConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let parsed = parse_interval(x).and_then(|x| Ok((x, parse_interval(y)?)));
    let (x, y) = match parsed {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    match pow_full(x, y, cfg) {
        Ok(r) => {
            let _ = writeln!(out, "{}", render(&r, opts));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_SEMANTIC
        }
    }
}

enum LineError {
    Parse,
    Semantic,
}

fn eval_line(line: &str, cfg: &EvalConfig) -> Result<Interval, LineError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(LineError::Parse);
    }
    let mut b = [0.0; 4];
    for (slot, f) in b.iter_mut().zip(&fields) {
        *slot = parse_bound(f).map_err(|_| LineError::Parse)?;
    }
    let interval = |lo, hi| {
        Interval::new(lo, hi).map_err(|e| match e {
            IntervalError::InfiniteSingleton => LineError::Semantic,
            _ => LineError::Parse,
        })
    };
    let x = interval(b[0], b[1])?;
    let y = interval(b[2], b[3])?;
    pow_full(x, y, cfg).map_err(|_| LineError::Semantic)
}

pub fn cmd_batch(
    input: &mut dyn BufRead,
    opts: &GlobalOpts,
    cfg: &EvalConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let style = opts.style();
    let mut parse_failed = false;
    let mut semantic_failed = false;
    for (i, line) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(err, "error: reading input: {e}");
                return EXIT_PARSE;
            }
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let rendered = match eval_line(trimmed, cfg) {
            Ok(r) if opts.json => render_json(&r).to_string(),
            Ok(r) => match r.bounds() {
                None => "empty".to_string(),
                Some((lo, hi)) => {
                    format!("{} {}", format_bound(lo, style), format_bound(hi, style))
                }
            },
            Err(kind) => {
                match kind {
                    LineError::Parse => parse_failed = true,
                    LineError::Semantic => semantic_failed = true,
                }
                let _ = writeln!(err, "error: line {lineno}: cannot evaluate `{trimmed}`");
                if opts.json {
                    json!({ "error": lineno }).to_string()
                } else {
                    format!("error {lineno}")
                }
            }
        };
        let _ = writeln!(out, "{rendered}");
    }
    if parse_failed {
        EXIT_PARSE
    } else if semantic_failed {
        EXIT_SEMANTIC
    } else {
        EXIT_OK
    }
}

/// Splits `"<x> <y>"` into its two interval literals.
pub fn split_box(text: &str) -> Result<(Interval, Interval), ParseError> {
    let s = text.trim();
    let cut = if s.starts_with("empty") {
        "empty".len()
    } else {
        s.find(']')
            .map(|i| i + 1)
            .ok_or_else(|| ParseError::Literal(s.to_string()))?
    };
    let (x, y) = s.split_at(cut);
    if y.trim().is_empty() {
        return Err(ParseError::FieldCount {
            expected: 2,
            found: 1,
        });
    }
    Ok((parse_interval(x)?, parse_interval(y)?))
}

pub fn cmd_check(
    n: usize,
    seed: u64,
    boxes: Option<&str>,
    opts: &GlobalOpts,
    cfg: &EvalConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if n == 0 {
        let _ = writeln!(err, "error: --n must be at least 1");
        return EXIT_PARSE;
    }
    let report = match boxes {
        Some(text) => match split_box(text) {
            Ok((x, y)) => check_containment_with(x, y, n, seed, cfg),
            Err(e) => {
                let _ = writeln!(err, "error: --box: {e}");
                return exit_code_for(&e);
            }
        },
        None => check_random_boxes(n, SAMPLES_PER_BOX, seed, cfg),
    };
    if opts.json {
        let _ = write!(out, "{}", report.to_json_lines());
        let _ = writeln!(
            err,
            "samples: {} defined: {} violations: {}",
            report.samples,
            report.defined,
            report.violations.len()
        );
    } else {
        let _ = write!(out, "{report}");
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn cmd_bench(
    iters: usize,
    workload: WorkloadArg,
    seed: u64,
    opts: &GlobalOpts,
    cfg: &EvalConfig,
    out: &mut dyn Write,
) -> i32 {
    let workload = match workload {
        WorkloadArg::Mixed => Workload::MixedSign,
        WorkloadArg::Nonneg => Workload::NonNegative,
    };
    let report = run_bench(iters, workload, seed, cfg);
    if opts.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        );
    } else {
        let _ = write!(out, "{report}");
    }
    EXIT_OK
}
