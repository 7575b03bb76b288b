//! The `rectcat` command-line front end.
//!
//! Exit codes: `0` success, `2` usage or domain error, `3` verification
//! failure. With `--json` every invocation prints exactly one JSON object
//! carrying `"schema_version": 1`.

use std::ffi::OsString;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bizley::bizley_count;
use crate::christoffel::{delta_profile, q_boxes};
use crate::closed_forms::{
    avoidance_value, ballot_brute_force, ballot_value, binomial, catalan, coprime_catalan,
    fuss_catalan, prime_rect,
};
use crate::comparison::{rule2_terms, theorem_count, theorem_family, Dims, Family};
use crate::decomposition::{decompose, expr_stats, h_value, render, Format};
use crate::diagram::{
    christoffel_diagram, count_paths, count_rect, enumerate_paths, word_to_diagram, Diagram, Rect,
    DEFAULT_ENUM_CAP,
};
use crate::sweep::{self, SweepReport, VerifyOptions};
use crate::{Count, Error};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Counterexamples listed when a sweep fails.
const MAX_LISTED_FAILURES: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "rectcat",
    version,
    about = "Count and enumerate rational Dyck paths"
)]
struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include per-method wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the Dyck paths of an a x b rectangle.
    Count(CountArgs),
    /// Show the Christoffel diagram, its box count and difference profile.
    Christoffel { a: u64, b: u64 },
    /// Decompose a rectangle's (or an explicit) diagram into isosceles leaves.
    Decompose(DecomposeArgs),
    /// Run every oracle-vs-formula sweep.
    Verify(VerifyArgs),
    /// List every Dyck word of a rectangle with its diagram.
    Enumerate(EnumerateArgs),
    /// Run the box-count and difference-function identity sweeps.
    Identities {
        #[arg(long, default_value_t = 12)]
        max_a: u64,
        #[arg(long, default_value_t = 40)]
        max_b: u64,
    },
    /// Print the product-term expansion for an even-height family rectangle.
    Expand { a: u64, b: u64 },
    /// Evaluate a single closed-form expression.
    #[command(subcommand)]
    Formula(FormulaCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Bizley,
    Coprime,
    Fuss,
    Theorem,
    Decompose,
    Auto,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Bizley => "bizley",
            Method::Coprime => "coprime",
            Method::Fuss => "fuss",
            Method::Theorem => "theorem",
            Method::Decompose => "decompose",
            Method::Auto => "auto",
        }
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    a: u64,
    b: u64,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Cross-check against the oracle when a*b is at most this bound.
    #[arg(long, default_value_t = 400)]
    check_bound: u64,
    /// Append the result to a CSV file (a,b,method,count,micros).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    a: Option<u64>,
    b: Option<u64>,
    /// Explicit diagram, comma-separated row lengths bottom-up.
    #[arg(long)]
    diagram: Option<String>,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_a: u64,
    #[arg(long, default_value_t = 10)]
    max_b: u64,
    /// Theorem family bounds: max k and max n.
    #[arg(long, num_args = 2, value_names = ["K", "N"], default_values_t = [4, 3])]
    families: Vec<u64>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    a: u64,
    b: u64,
    #[arg(long, env = "RECTCAT_MAX_ENUM", default_value_t = DEFAULT_ENUM_CAP)]
    limit: u64,
}

#[derive(Debug, Subcommand)]
enum FormulaCmd {
    Binomial {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    Catalan {
        n: u64,
    },
    Fuss {
        a: u64,
        k: u64,
    },
    Coprime {
        a: u64,
        b: u64,
    },
    Prime {
        p: u64,
        b: u64,
    },
    Ballot {
        a: u64,
        b: u64,
        k: u64,
    },
    /// Direct count of paths to (a,b) staying on or above y = kx.
    BallotBrute {
        a: u64,
        b: u64,
        k: u64,
    },
    Avoidance {
        n: u64,
        k: u64,
    },
}

#[derive(Debug, Serialize)]
struct MethodRow {
    method: &'static str,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    micros: Option<u128>,
}

/// Everything one invocation prints.
#[derive(Debug, Serialize)]
struct RunReport {
    schema_version: u32,
    command: String,
    results: Map<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    methods: Vec<MethodRow>,
    failures: Vec<String>,
    #[serde(skip)]
    code: i32,
    #[serde(skip)]
    timings: bool,
}

impl RunReport {
    fn new(command: String, timings: bool) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command,
            results: Map::new(),
            methods: Vec::new(),
            failures: Vec::new(),
            code: EXIT_OK,
            timings,
        }
    }

    fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    fn method(&mut self, method: &'static str, count: &Count, micros: u128) {
        self.methods.push(MethodRow {
            method,
            count: count.to_string(),
            micros: self.timings.then_some(micros),
        });
    }

    fn fail(&mut self, code: i32, msg: impl Into<String>) {
        self.failures.push(msg.into());
        self.code = self.code.max(code);
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for (key, value) in &self.results {
            match value {
                Value::String(s) => writeln!(out, "{key}: {s}")?,
                Value::Array(items) => {
                    writeln!(out, "{key}:")?;
                    for item in items {
                        match item {
                            Value::String(s) => writeln!(out, "  {s}")?,
                            other => writeln!(out, "  {other}")?,
                        }
                    }
                }
                other => writeln!(out, "{key}: {other}")?,
            }
        }
        for row in &self.methods {
            match row.micros {
                Some(us) => writeln!(out, "method {}: {} ({us} us)", row.method, row.count)?,
                None => writeln!(out, "method {}: {}", row.method, row.count)?,
            }
        }
        for f in &self.failures {
            writeln!(out, "FAIL: {f}")?;
        }
        Ok(())
    }
}

/// Parses `args` (program name first), runs the command, and writes its
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = RunReport::new(echo, cli.timings);
    if let Err(e) = dispatch(&cli.command, &mut report) {
        report.fail(EXIT_USAGE, e.to_string());
    }
    let written = if cli.json {
        serde_json::to_string(&report)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}"))
    } else {
        report.write_text(out)
    };
    if let Err(e) = written {
        let _ = writeln!(err, "rectcat: failed to write output: {e}");
    }
    report.code
}

fn dispatch(cmd: &Command, report: &mut RunReport) -> crate::Result<()> {
    match cmd {
        Command::Count(args) => cmd_count(args, report),
        Command::Christoffel { a, b } => cmd_christoffel(*a, *b, report),
        Command::Decompose(args) => cmd_decompose(args, report),
        Command::Verify(args) => cmd_verify(args, report),
        Command::Enumerate(args) => cmd_enumerate(args, report),
        Command::Identities { max_a, max_b } => cmd_identities(*max_a, *max_b, report),
        Command::Expand { a, b } => cmd_expand(*a, *b, report),
        Command::Formula(f) => cmd_formula(f, report),
    }
}

fn resolve_auto(a: u64, b: u64) -> Method {
    if a.gcd(&b) == 1 {
        Method::Coprime
    } else if b.is_multiple_of(a) {
        Method::Fuss
    } else if theorem_family(a, b).is_some() {
        Method::Theorem
    } else {
        Method::Bizley
    }
}

fn count_with(method: Method, rect: Rect) -> crate::Result<Count> {
    let (a, b) = (rect.a(), rect.b());
    match method {
        Method::Oracle => Ok(count_rect(rect)),
        Method::Bizley => bizley_count(a, b),
        Method::Coprime => coprime_catalan(a, b),
        Method::Fuss => {
            if b % a != 0 {
                return Err(Error::Domain(format!("fuss needs a | b, got {a}x{b}")));
            }
            fuss_catalan(a, b / a)
        }
        Method::Theorem => theorem_count(a, b),
        Method::Decompose => Ok(h_value(&decompose(&christoffel_diagram(rect)))),
        Method::Auto => count_with(resolve_auto(a, b), rect),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_micros())
}

fn append_cache(
    path: &Path,
    a: u64,
    b: u64,
    method: &str,
    count: &Count,
    micros: u128,
) -> crate::Result<()> {
    let io = |e: std::io::Error| Error::Input(format!("cache file {}: {e}", path.display()));
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io)?;
    if file.metadata().map_err(io)?.len() == 0 {
        writeln!(file, "a,b,method,count,micros").map_err(io)?;
    }
    writeln!(file, "{a},{b},{method},{count},{micros}").map_err(io)
}

fn cmd_count(args: &CountArgs, report: &mut RunReport) -> crate::Result<()> {
    let rect = Rect::new(args.a, args.b)?;
    let method = match args.method {
        Method::Auto => resolve_auto(args.a, args.b),
        m => m,
    };
    let (count, micros) = timed(|| count_with(method, rect));
    let count = count?;
    report.put("a", args.a);
    report.put("b", args.b);
    report.put("method", method.name());
    report.put("count", count.to_string());
    report.method(method.name(), &count, micros);
    if method != Method::Oracle && args.a.saturating_mul(args.b) <= args.check_bound {
        let (oracle, micros) = timed(|| count_rect(rect));
        report.method("oracle", &oracle, micros);
        if oracle != count {
            report.fail(
                EXIT_VERIFY,
                format!(
                    "{} gives {count} but the oracle gives {oracle}",
                    method.name()
                ),
            );
        }
    }
    if let Some(path) = &args.cache {
        append_cache(path, args.a, args.b, method.name(), &count, micros)?;
    }
    Ok(())
}

fn cmd_christoffel(a: u64, b: u64, report: &mut RunReport) -> crate::Result<()> {
    let rect = Rect::new(a, b)?;
    let mu = christoffel_diagram(rect);
    let profile = delta_profile(a, b)?
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    report.put("rect", rect.to_string());
    report.put("rows", mu.to_string());
    report.put("q", q_boxes(a, b));
    report.put("delta", profile);
    Ok(())
}

fn cmd_decompose(args: &DecomposeArgs, report: &mut RunReport) -> crate::Result<()> {
    let format: Format = args.format.parse()?;
    let mu = match (&args.diagram, args.a, args.b) {
        (Some(text), None, None) => text.parse::<Diagram>()?,
        (None, Some(a), Some(b)) => christoffel_diagram(Rect::new(a, b)?),
        _ => {
            return Err(Error::Input(
                "decompose takes either A B or --diagram ROWS".into(),
            ))
        }
    };
    let expr = decompose(&mu);
    let value = h_value(&expr);
    let oracle = count_paths(&mu);
    let stats = expr_stats(&expr);
    report.put("diagram", mu.to_string());
    match format {
        Format::Text => report.put("expr", render(&expr, format)),
        Format::Json => report.put("expr", serde_json::to_value(&expr).expect("serializable")),
    }
    report.put("value", value.to_string());
    report.put("summands", stats.summands);
    report.put("leaves", stats.leaves);
    report.put("depth", stats.depth);
    report.put("oracle", oracle.to_string());
    if value != oracle {
        report.fail(
            EXIT_VERIFY,
            format!("H(decomposition) = {value}, oracle = {oracle}"),
        );
    }
    Ok(())
}

fn sweep_into(rep: SweepReport, report: &mut RunReport) {
    let table: Vec<Value> = rep
        .checks
        .iter()
        .map(|(name, t)| Value::String(format!("{name}: {} passed, {} failed", t.passed, t.failed)))
        .collect();
    report.put("checks", table);
    report.put("status", if rep.ok() { "pass" } else { "fail" });
    for f in rep.failures.iter().take(MAX_LISTED_FAILURES) {
        report.fail(EXIT_VERIFY, format!("[{}] {}", f.check, f.detail));
    }
    if rep.failures.len() > MAX_LISTED_FAILURES {
        report.fail(
            EXIT_VERIFY,
            format!("... and {} more", rep.failures.len() - MAX_LISTED_FAILURES),
        );
    }
}

fn cmd_verify(args: &VerifyArgs, report: &mut RunReport) -> crate::Result<()> {
    if args.max_a < 2 || args.max_b < 2 {
        return Err(Error::Input("verify bounds must be at least 2".into()));
    }
    let opts = VerifyOptions {
        max_a: args.max_a,
        max_b: args.max_b,
        max_k: args.families[0],
        max_n: args.families[1],
        inject_fault: args.inject_fault,
    };
    sweep_into(sweep::verify(opts), report);
    Ok(())
}

fn cmd_identities(max_a: u64, max_b: u64, report: &mut RunReport) -> crate::Result<()> {
    if max_a < 2 || max_b < 2 {
        return Err(Error::Input("identity bounds must be at least 2".into()));
    }
    sweep_into(sweep::identities(max_a, max_b), report);
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs, report: &mut RunReport) -> crate::Result<()> {
    let rect = Rect::new(args.a, args.b)?;
    let words = enumerate_paths(rect, args.limit)?;
    let lines = words
        .iter()
        .map(|w| {
            let mu = word_to_diagram(rect, w).expect("enumerated words are valid");
            Value::String(format!("{w} ({mu})"))
        })
        .collect::<Vec<_>>();
    report.put("count", words.len());
    report.put("paths", lines);
    Ok(())
}

fn dims_label(d: &Dims) -> String {
    format!("D({},{})", d.a, d.b)
}

fn cmd_expand(a: u64, b: u64, report: &mut RunReport) -> crate::Result<()> {
    let rect = Rect::new(a, b)?;
    let Some((family, k, n)) = theorem_family(a, b) else {
        return Err(Error::Domain(format!(
            "{a}x{b} is in neither family (a = 2k with b = a(n+1)-2 or b = an+2)"
        )));
    };
    let terms = rule2_terms(a, family, n)?;
    let base = Dims {
        a,
        b: family.adjacent_width(a, n),
    };
    let lines: Vec<Value> = terms
        .terms
        .iter()
        .map(|t| {
            let (l, r) = (t.left.closed_count(), t.right.closed_count());
            Value::String(format!(
                "{} * {} = {l} * {r} = {}",
                dims_label(&t.left),
                dims_label(&t.right),
                &l * &r
            ))
        })
        .collect();
    let sign = match family {
        Family::Upper => "-",
        Family::Lower => "+",
    };
    let total = theorem_count(a, b)?;
    report.put("family", family.to_string());
    report.put("k", k);
    report.put("n", n);
    report.put(
        "base",
        format!("{} = {}", dims_label(&base), base.closed_count()),
    );
    report.put("sign", sign);
    report.put("terms", lines);
    report.put("term_sum", terms.closed_sum().to_string());
    report.put("count", total.to_string());
    let oracle = count_rect(rect);
    report.put("oracle", oracle.to_string());
    if oracle != total {
        report.fail(
            EXIT_VERIFY,
            format!("expansion gives {total}, oracle {oracle}"),
        );
    }
    Ok(())
}

fn cmd_formula(f: &FormulaCmd, report: &mut RunReport) -> crate::Result<()> {
    let (name, value): (&str, Value) = match *f {
        FormulaCmd::Binomial { n, k } => ("binomial", binomial(n, k).to_string().into()),
        FormulaCmd::Catalan { n } => ("catalan", catalan(n).to_string().into()),
        FormulaCmd::Fuss { a, k } => ("fuss", fuss_catalan(a, k)?.to_string().into()),
        FormulaCmd::Coprime { a, b } => ("coprime", coprime_catalan(a, b)?.to_string().into()),
        FormulaCmd::Prime { p, b } => ("prime", prime_rect(p, b)?.to_string().into()),
        FormulaCmd::Ballot { a, b, k } => ("ballot", ballot_value(a, b, k)?.to_string().into()),
        FormulaCmd::BallotBrute { a, b, k } => (
            "ballot-brute",
            ballot_brute_force(a, b, k).to_string().into(),
        ),
        FormulaCmd::Avoidance { n, k } => ("avoidance", avoidance_value(n, k)?.to_string().into()),
    };
    report.put("formula", name);
    report.put("value", value);
    if let FormulaCmd::Ballot { a, b, k } = *f {
        report.put(
            "brute_force",
            json!(ballot_brute_force(a, b, k).to_string()),
        );
        report.put(
            "note",
            "informational; the formula and the direct count use different path conventions",
        );
    }
    Ok(())
}
