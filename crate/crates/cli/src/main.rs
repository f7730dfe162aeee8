//! `moser`: tables, Moser polynomial evaluation, s-sums, multiset recovery
//! and the verification suites.
//!
//! Exit codes: 0 success, 1 a verification property failed, 2 invalid input
//! or parameters, 3 `s > n` for `sums`, 4 unsolvable `(n, s)`, 5 recovery
//! could not be verified.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use moser::combinatorics::{eulerian, stirling1_unsigned, stirling2};
use moser::io::{parse_multiset, parse_rational};
use moser::moser::{
    moser_value, moser_value_eulerian_form, moser_value_stirling_forms, q_polynomial,
};
use moser::recovery::{recover, solvability, RecoveredMultiset};
use moser::symfun::s_sums;
use moser::verify::{self, Suite, VerifyConfig};
use moser::{BigInt, Error, NumberMultiset, RecoveryMode};

const MAX_TABLE_INDEX: u32 = 64;

#[derive(Parser)]
#[command(
    name = "moser",
    version,
    about = "Moser polynomials and multiset recovery from s-sums"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Tolerance for the floating-point paths.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Eulerian,
    Stirling1,
    Stirling2,
    Moser,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Definition,
    Eulerian,
    Stirling1,
    Stirling2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Oracle,
    Recovery,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle of Eulerian or Stirling numbers, or F_{s,k}(n) for k = 1..k_max.
    Table {
        kind: TableKind,
        #[arg(long, default_value_t = 8)]
        rows: u32,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Evaluate F_{s,k}(x) exactly.
    Eval {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value_t = Form::Definition)]
        form: Form,
    },
    /// Expansion of p_k(A^(s)) in products of power sums of A.
    Qpoly {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// s-sums of a multiset read from a file, or stdin for "-".
    Sums {
        input: String,
        #[arg(long)]
        s: usize,
    },
    /// Recover an n-multiset from its s-sums.
    Recover {
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Run property suites against brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
}

struct Failure {
    code: u8,
    stdout: String,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            stdout: String::new(),
            message: message.into(),
        }
    }
}

fn invalid(err: impl std::fmt::Display) -> Failure {
    Failure::new(2, err.to_string())
}

/// Tabular output shared by every command: a header and string cells.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            print!("{}", failure.stdout);
            if !failure.message.is_empty() {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Table {
            kind,
            rows,
            s,
            k_max,
            n,
        } => table(cli.format, *kind, *rows, *s, *k_max, *n),
        Command::Eval { s, k, x, form } => eval(cli.format, *s, *k, x, *form),
        Command::Qpoly { s, k, n } => qpoly(cli.format, *s, *k, *n),
        Command::Sums { input, s } => sums(cli.format, input, *s),
        Command::Recover { input, n, s, mode } => recover_cmd(cli, input, *n, *s, *mode),
        Command::Verify { suite, trials } => verify_cmd(cli, *suite, *trials),
    }
}

fn bounded(name: &str, value: u32) -> Result<u32, Failure> {
    if value == 0 || value > MAX_TABLE_INDEX {
        Err(invalid(format!(
            "--{name} must be in 1..={MAX_TABLE_INDEX}, got {value}"
        )))
    } else {
        Ok(value)
    }
}

fn table(
    format: Format,
    kind: TableKind,
    rows: u32,
    s: Option<u32>,
    k_max: Option<u32>,
    n: Option<u32>,
) -> Result<String, Failure> {
    let (name, triangle) = match kind {
        TableKind::Moser => return moser_table(format, s, k_max, n),
        TableKind::Eulerian => (
            "eulerian",
            triangle(bounded("rows", rows)?, 0, |n, m| eulerian(n, m as i64)),
        ),
        TableKind::Stirling1 => (
            "stirling1",
            triangle(bounded("rows", rows)?, 1, stirling1_unsigned),
        ),
        TableKind::Stirling2 => ("stirling2", triangle(bounded("rows", rows)?, 1, stirling2)),
    };
    Ok(match format {
        Format::Plain => {
            let mut out = String::new();
            for (n, row) in triangle.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{}: {}", n + 1, cells.join(" "));
            }
            out
        }
        Format::Json => json_text(&json!({
            "kind": name,
            "rows": triangle
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let first = if matches!(kind, TableKind::Eulerian) {
                0
            } else {
                1
            };
            let mut t = Table {
                header: vec!["n", "m", "value"],
                rows: Vec::new(),
            };
            for (i, row) in triangle.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    t.rows.push(vec![
                        (i + 1).to_string(),
                        (j + first).to_string(),
                        v.to_string(),
                    ]);
                }
            }
            t.csv()
        }
    })
}

/// Rows `n = 1..=rows`; row `n` holds columns `first..first+n`, the nonzero
/// entries of both the Eulerian (`m = 0..n-1`) and Stirling (`m = 1..n`) triangles.
fn triangle(rows: u32, first: u32, entry: impl Fn(u32, u32) -> BigInt) -> Vec<Vec<BigInt>> {
    (1..=rows)
        .map(|n| (first..first + n).map(|m| entry(n, m)).collect())
        .collect()
}

fn moser_table(
    format: Format,
    s: Option<u32>,
    k_max: Option<u32>,
    n: Option<u32>,
) -> Result<String, Failure> {
    let need = |name: &str, v: Option<u32>| {
        v.ok_or_else(|| invalid(format!("table moser needs --{name}")))
    };
    let s = bounded("s", need("s", s)?)?;
    let k_max = bounded("k-max", need("k-max", k_max)?)?;
    let n = bounded("n", need("n", n)?)?;
    let x = moser::rat(n as i64);
    let values: Vec<(u32, String)> = (1..=k_max)
        .map(|k| (k, moser_value(s, k, &x).to_string()))
        .collect();
    Ok(match format {
        Format::Plain => values
            .iter()
            .map(|(k, v)| format!("F_{{{s},{k}}}({n}) = {v}\n"))
            .collect(),
        Format::Json => json_text(&json!({
            "kind": "moser",
            "s": s,
            "n": n,
            "values": values.iter().map(|(k, v)| json!({"k": k, "value": v})).collect::<Vec<_>>(),
        })),
        Format::Csv => Table {
            header: vec!["s", "k", "n", "value"],
            rows: values
                .iter()
                .map(|(k, v)| vec![s.to_string(), k.to_string(), n.to_string(), v.clone()])
                .collect(),
        }
        .csv(),
    })
}

fn eval(format: Format, s: u32, k: u32, x: &str, form: Form) -> Result<String, Failure> {
    if s == 0 || k == 0 {
        return Err(invalid("--s and --k must be positive"));
    }
    let x = parse_rational(x).map_err(invalid)?;
    let (form_name, value) = match form {
        Form::Definition => ("definition", moser_value(s, k, &x)),
        Form::Eulerian => ("eulerian", moser_value_eulerian_form(s, k, &x)),
        Form::Stirling1 => ("stirling1", moser_value_stirling_forms(s, k, &x).0),
        Form::Stirling2 => ("stirling2", moser_value_stirling_forms(s, k, &x).1),
    };
    Ok(match format {
        Format::Plain => format!("{value}\n"),
        Format::Json => json_text(&json!({
            "s": s,
            "k": k,
            "x": x.to_string(),
            "form": form_name,
            "value": value.to_string(),
        })),
        Format::Csv => Table {
            header: vec!["s", "k", "x", "form", "value"],
            rows: vec![vec![
                s.to_string(),
                k.to_string(),
                x.to_string(),
                form_name.into(),
                value.to_string(),
            ]],
        }
        .csv(),
    })
}

fn qpoly(format: Format, s: u32, k: u32, n: u32) -> Result<String, Failure> {
    if s == 0 || k == 0 {
        return Err(invalid("--s and --k must be positive"));
    }
    let q = q_polynomial(s, k, n).map_err(invalid)?;
    Ok(match format {
        Format::Json => {
            let mut text = q.to_json();
            text.push('\n');
            text
        }
        Format::Plain => q
            .terms()
            .iter()
            .map(|(lam, c)| format!("{lam}: {c}\n"))
            .collect(),
        Format::Csv => Table {
            header: vec!["partition", "coeff"],
            rows: q
                .terms()
                .iter()
                .map(|(lam, c)| {
                    let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
                    vec![parts.join(" "), c.to_string()]
                })
                .collect(),
        }
        .csv(),
    })
}

fn read_input(path: &str) -> Result<NumberMultiset, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| invalid(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| invalid(format!("reading {path}: {e}")))?
    };
    parse_multiset(&text).map_err(invalid)
}

fn multiset_output(format: Format, values: &[String]) -> String {
    match format {
        Format::Plain => values.iter().map(|v| format!("{v}\n")).collect(),
        Format::Json => json_text(&json!(values)),
        Format::Csv => Table {
            header: vec!["value"],
            rows: values.iter().map(|v| vec![v.clone()]).collect(),
        }
        .csv(),
    }
}

fn sums(format: Format, input: &str, s: usize) -> Result<String, Failure> {
    let a = read_input(input)?;
    if s == 0 {
        return Err(invalid("--s must be positive"));
    }
    let out = s_sums(&a, s).map_err(|e| match e {
        Error::SExceedsN { .. } => Failure::new(3, e.to_string()),
        other => invalid(other),
    })?;
    let values: Vec<String> = out.elements().iter().map(|v| v.to_string()).collect();
    Ok(multiset_output(format, &values))
}

fn recover_cmd(cli: &Cli, input: &str, n: usize, s: usize, mode: Mode) -> Result<String, Failure> {
    let sums = read_input(input)?;
    if s == 0 || s > n {
        return Err(invalid(format!("need 1 <= s <= n, got s = {s}, n = {n}")));
    }
    let report = solvability(n, s).map_err(invalid)?;
    if !report.solvable {
        let stdout = match cli.format {
            Format::Json => json_text(&report.to_json()),
            Format::Plain => format!(
                "unsolvable: F_{{{s},k}}({n}) vanishes for k = {:?}\n",
                report.vanishing_k
            ),
            Format::Csv => Table {
                header: vec!["k", "value"],
                rows: report
                    .values
                    .iter()
                    .zip(1..)
                    .map(|(v, k)| vec![k.to_string(), v.to_string()])
                    .collect(),
            }
            .csv(),
        };
        return Err(Failure {
            code: 4,
            stdout,
            message: format!(
                "(n, s) = ({n}, {s}) is not solvable; vanishing_k = {:?}",
                report.vanishing_k
            ),
        });
    }
    let mode = match mode {
        Mode::Exact => RecoveryMode::Exact,
        Mode::Numeric => RecoveryMode::Numeric,
        Mode::Auto => RecoveryMode::Auto,
    };
    let result = recover(&sums, n, s, mode, cli.tol).map_err(|e| match e {
        Error::SizeMismatch { .. } | Error::EnumerationTooLarge { .. } | Error::Precondition(_) => {
            invalid(e)
        }
        Error::DivisorSearchOverflow { .. } => invalid(e),
        // The input is not the s-sum multiset of any candidate we can confirm.
        other => Failure::new(5, other.to_string()),
    })?;
    Ok(match cli.format {
        Format::Json => json_text(&result.to_json()),
        Format::Plain | Format::Csv => {
            let values: Vec<String> = match &result.multiset {
                RecoveredMultiset::Exact(m) => m.elements().iter().map(|v| v.to_string()).collect(),
                RecoveredMultiset::Numeric(z) => z.iter().map(|c| format!("{c}")).collect(),
            };
            multiset_output(cli.format, &values)
        }
    })
}

fn verify_cmd(cli: &Cli, suite: SuiteArg, trials: usize) -> Result<String, Failure> {
    let suite = match suite {
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Recovery => Suite::Recovery,
        SuiteArg::All => Suite::All,
    };
    let config = VerifyConfig {
        trials,
        seed: cli.seed,
        tol: cli.tol,
    };
    let outcomes = verify::run(suite, &config);
    let all_passed = outcomes.iter().all(|o| o.passed());
    // Timings are left out so that repeated runs print identical bytes.
    let text = match cli.format {
        Format::Json => json_text(&json!({
            "seed": cli.seed,
            "trials": trials,
            "passed": all_passed,
            "properties": outcomes
                .iter()
                .map(|o| json!({
                    "suite": o.suite,
                    "name": o.name,
                    "cases": o.cases,
                    "passed": o.passed(),
                    "counterexample": o.counterexample,
                }))
                .collect::<Vec<_>>(),
        })),
        Format::Plain => outcomes
            .iter()
            .map(|o| match &o.counterexample {
                None => format!("PASS {}/{} ({} cases)\n", o.suite, o.name, o.cases),
                Some(c) => format!("FAIL {}/{}: {c}\n", o.suite, o.name),
            })
            .collect(),
        Format::Csv => Table {
            header: vec!["suite", "name", "cases", "passed", "counterexample"],
            rows: outcomes
                .iter()
                .map(|o| {
                    vec![
                        o.suite.to_string(),
                        o.name.to_string(),
                        o.cases.to_string(),
                        o.passed().to_string(),
                        o.counterexample.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        }
        .csv(),
    };
    if all_passed {
        Ok(text)
    } else {
        Err(Failure {
            code: 1,
            stdout: text,
            message: "verification failed".into(),
        })
    }
}
