//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests drive it in-process.
//!
//! Exit codes: 0 success, 1 valid input with a negative answer, 2 usage or
//! input error. JSON goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use multitile_core::admissibility::{
    check_admissible, check_graph_condition, construct_distances, construct_perfect_coloring,
    multitiling_certificate, AdmissibilityError, ParamTriple, Violation,
};
use multitile_core::arith;
use multitile_core::coloring::CirculantSpec;
use multitile_core::cyclotomic::cyclotomic;
use multitile_core::document::{verify_document, ColoringDocument};
use multitile_core::oracle::search_colorings;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json<T: Serialize>(exit_code: i32, payload: &T) -> Self {
        Self {
            exit_code,
            stdout: to_json(payload),
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }

    fn note(mut self, message: &str) -> Self {
        self.stderr.push_str(message);
        self.stderr.push('\n');
        self
    }
}

fn to_json<T: Serialize>(payload: &T) -> String {
    let mut s = serde_json::to_string_pretty(payload).expect("payload serializes");
    s.push('\n');
    s
}

#[derive(Parser, Debug)]
#[command(name = "multitile", version, about = "Perfect 2-colourings of circulant graphs via cyclotomic tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Params {
    #[arg(long)]
    b: u64,
    #[arg(long)]
    c: u64,
    #[arg(long)]
    k: u64,
}

#[derive(clap::Args, Debug, Clone)]
struct GraphArgs {
    #[arg(long = "P")]
    modulus: u64,
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    distances: Vec<u64>,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    c: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameter admissibility.
    Params {
        #[command(subcommand)]
        action: ParamsAction,
    },
    /// Build a circulant graph (and a perfect colouring when b + c is a prime power).
    Construct {
        #[command(flatten)]
        params: Params,
        /// Stop at the multitiling certificate even when a colouring could be built.
        #[arg(long)]
        multitiling_only: bool,
    },
    /// Re-check a colouring document.
    Verify { file: PathBuf },
    /// Exhaustive search for perfect colourings.
    Search {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Coefficients of the n-th cyclotomic polynomial.
    Cyclotomic { n: u64 },
    /// Cyclotomic divisor spectrum of A(x) and the graph condition.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Admissibility table over a (b, c, k) grid.
    Table {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        max_sum: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum ParamsAction {
    Check {
        #[command(flatten)]
        params: Params,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::usage(rendered)
            } else {
                CommandResult {
                    exit_code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match cli.command {
        Command::Params {
            action: ParamsAction::Check { params },
        } => params_check(params),
        Command::Construct {
            params,
            multitiling_only,
        } => construct(params, multitiling_only),
        Command::Verify { file } => verify(&file),
        Command::Search { graph, limit } => search(&graph, limit),
        Command::Cyclotomic { n } => cyclotomic_cmd(n),
        Command::Spectrum { graph } => spectrum(&graph),
        Command::Table { k, max_sum, format } => table(k, max_sum, format),
    }
}

fn triple(p: Params) -> Result<ParamTriple, CommandResult> {
    ParamTriple::new(p.b, p.c, p.k).map_err(|e| CommandResult::usage(e.to_string()))
}

fn graph_spec(g: &GraphArgs) -> Result<CirculantSpec, CommandResult> {
    CirculantSpec::new(g.modulus, g.distances.clone()).map_err(|e| CommandResult::usage(e.to_string()))
}

#[derive(Serialize)]
struct ViolationOut {
    q: u64,
    t: u32,
    bound: u64,
}

impl From<&Violation> for ViolationOut {
    fn from(v: &Violation) -> Self {
        Self {
            q: v.q,
            t: v.t,
            bound: v.bound,
        }
    }
}

#[derive(Serialize)]
struct AdmissibilityOut {
    admissible: bool,
    violations: Vec<ViolationOut>,
}

fn params_check(p: Params) -> CommandResult {
    let params = match triple(p) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let verdict = check_admissible(params);
    let out = AdmissibilityOut {
        admissible: verdict.admissible,
        violations: verdict.violations.iter().map(ViolationOut::from).collect(),
    };
    CommandResult::json(if out.admissible { EXIT_OK } else { EXIT_NEGATIVE }, &out)
}

#[derive(Serialize)]
struct RefusalOut {
    constructed: bool,
    reason: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    violations: Vec<ViolationOut>,
}

fn refusal(err: AdmissibilityError) -> CommandResult {
    let out = match err {
        AdmissibilityError::Inadmissible(v) => RefusalOut {
            constructed: false,
            reason: "inadmissible",
            sum: None,
            bound: None,
            violations: v.violations.iter().map(ViolationOut::from).collect(),
        },
        AdmissibilityError::BoundViolated { sum, bound } => RefusalOut {
            constructed: false,
            reason: "bound-violated",
            sum: Some(sum),
            bound: Some(bound),
            violations: Vec::new(),
        },
        other => return CommandResult::usage(other.to_string()),
    };
    CommandResult::json(EXIT_NEGATIVE, &out)
}

fn construct(p: Params, multitiling_only: bool) -> CommandResult {
    let params = match triple(p) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let prime_power_sum = arith::is_prime_power(params.sum());
    if prime_power_sum && !multitiling_only {
        return match construct_perfect_coloring(params) {
            Ok(w) => CommandResult::json(EXIT_OK, &ColoringDocument::from_witness(&w, None)),
            Err(e) => refusal(e),
        };
    }
    let witness = match construct_distances(params) {
        Ok(w) => w,
        Err(e) => return refusal(e),
    };
    let cert = match multitiling_certificate(&witness) {
        Ok(c) => c,
        Err(e) => return CommandResult::usage(e.to_string()),
    };
    let result = CommandResult::json(EXIT_OK, &ColoringDocument::from_witness(&witness, Some(&cert)));
    if prime_power_sum {
        result
    } else {
        result.note("b + c is not a prime power: emitting a multitiling certificate, no colouring")
    }
}

fn verify(file: &PathBuf) -> CommandResult {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return CommandResult::usage(format!("cannot read {}: {e}", file.display())),
    };
    let doc = match ColoringDocument::parse(&text) {
        Ok(d) => d,
        Err(e) => return CommandResult::usage(e.to_string()),
    };
    match verify_document(&doc) {
        Ok(report) => CommandResult::json(if report.valid { EXIT_OK } else { EXIT_NEGATIVE }, &report),
        Err(e) => CommandResult::usage(e.to_string()),
    }
}

#[derive(Serialize)]
struct SearchOut {
    #[serde(rename = "P")]
    modulus: u64,
    distances: Vec<u64>,
    b: u64,
    c: u64,
    exhausted: bool,
    states_examined: u64,
    count: usize,
    colorings: Vec<String>,
}

fn search(g: &GraphArgs, limit: Option<usize>) -> CommandResult {
    let spec = match graph_spec(g) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let report = match search_colorings(&spec, g.b, g.c, limit) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(e.to_string()),
    };
    let out = SearchOut {
        modulus: spec.modulus(),
        distances: spec.distances().to_vec(),
        b: g.b,
        c: g.c,
        exhausted: report.exhausted,
        states_examined: report.states_examined,
        count: report.found.len(),
        colorings: report.found.iter().map(|c| c.to_string()).collect(),
    };
    CommandResult::json(if out.count > 0 { EXIT_OK } else { EXIT_NEGATIVE }, &out)
}

#[derive(Serialize)]
struct CyclotomicOut {
    n: u64,
    coeffs: Vec<i64>,
}

fn cyclotomic_cmd(n: u64) -> CommandResult {
    if n == 0 {
        return CommandResult::usage("cyclotomic polynomials are indexed from 1");
    }
    CommandResult::json(
        EXIT_OK,
        &CyclotomicOut {
            n,
            coeffs: cyclotomic(n).into_coeffs(),
        },
    )
}

#[derive(Serialize)]
struct SpectrumOut {
    #[serde(rename = "P")]
    modulus: u64,
    distances: Vec<u64>,
    b: u64,
    c: u64,
    divisors: Vec<u64>,
    prime_power_divisors: Vec<u64>,
    #[serde(rename = "S_at_one")]
    s_at_one: i64,
    #[serde(rename = "S_tilde_at_one")]
    s_tilde_at_one: u64,
    #[serde(rename = "N")]
    reduced_sum: u64,
    passes: bool,
    exact: bool,
}

fn spectrum(g: &GraphArgs) -> CommandResult {
    let spec = match graph_spec(g) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let v = match check_graph_condition(&spec, g.b, g.c) {
        Ok(v) => v,
        Err(e) => return CommandResult::usage(e.to_string()),
    };
    let out = SpectrumOut {
        modulus: spec.modulus(),
        distances: spec.distances().to_vec(),
        b: g.b,
        c: g.c,
        divisors: v.spectrum.divisors().iter().copied().collect(),
        prime_power_divisors: v.spectrum.prime_power_subset().iter().copied().collect(),
        s_at_one: v.s_at_one,
        s_tilde_at_one: v.s_tilde_at_one,
        reduced_sum: v.reduced_sum,
        passes: v.passes,
        exact: v.exact,
    };
    CommandResult::json(if out.passes { EXIT_OK } else { EXIT_NEGATIVE }, &out)
}

#[derive(Serialize)]
struct TableRow {
    b: u64,
    c: u64,
    k: u64,
    #[serde(rename = "N")]
    reduced_sum: u64,
    admissible: bool,
    violating_q: Vec<u64>,
    violating_t: Vec<u32>,
    prime_power_sum: bool,
    /// Only meaningful when `b + c` is a prime power.
    constructive: Option<bool>,
}

#[derive(Serialize)]
struct CsvRow {
    b: u64,
    c: u64,
    k: u64,
    #[serde(rename = "N")]
    reduced_sum: u64,
    admissible: bool,
    violating_q: String,
    violating_t: String,
    prime_power_sum: bool,
    constructive: Option<bool>,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

impl From<&TableRow> for CsvRow {
    fn from(r: &TableRow) -> Self {
        Self {
            b: r.b,
            c: r.c,
            k: r.k,
            reduced_sum: r.reduced_sum,
            admissible: r.admissible,
            violating_q: join(&r.violating_q),
            violating_t: join(&r.violating_t),
            prime_power_sum: r.prime_power_sum,
            constructive: r.constructive,
        }
    }
}

fn table_rows(max_k: u64, max_sum: u64) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for k in 1..=max_k {
        for b in 1..max_sum {
            for c in 1..=max_sum - b {
                let params = ParamTriple::new(b, c, k).expect("positive");
                let verdict = check_admissible(params);
                let prime_power_sum = arith::is_prime_power(params.sum());
                rows.push(TableRow {
                    b,
                    c,
                    k,
                    reduced_sum: params.reduced_sum(),
                    admissible: verdict.admissible,
                    violating_q: verdict.violations.iter().map(|v| v.q).collect(),
                    violating_t: verdict.violations.iter().map(|v| v.t).collect(),
                    prime_power_sum,
                    constructive: prime_power_sum.then(|| params.sum() <= 2 * k + params.gcd()),
                });
            }
        }
    }
    rows
}

fn table(max_k: u64, max_sum: u64, format: Format) -> CommandResult {
    if max_k == 0 || max_sum < 2 {
        return CommandResult::usage("table needs --k >= 1 and --max-sum >= 2");
    }
    let rows = table_rows(max_k, max_sum);
    match format {
        Format::Json => CommandResult::json(EXIT_OK, &rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(CsvRow::from(row)).expect("in-memory csv write");
            }
            let bytes = w.into_inner().expect("in-memory csv flush");
            CommandResult {
                exit_code: EXIT_OK,
                stdout: String::from_utf8(bytes).expect("csv is utf-8"),
                stderr: String::new(),
            }
        }
    }
}
