//! Command-line front end: enumeration dumps with statistics, oracle
//! expansions, verification suites, and chain demonstrations.

use clap::{Parser, Subcommand, ValueEnum};
use qtpaths::parking::{dinv, schroder_to_parking};
use qtpaths::pathcore::{
    area, bounce, enumerate_paths, numph, PathKind, PathWord,
};
use qtpaths::qtsym::{nabla_oracle_with_limit, oracle_limit, schur_decompose};
use qtpaths::verify::{run_suite, ReportBundle, Status, Suite};
use qtpaths::{bijections, cache};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qtpaths", version, about = "lattice path statistics, parking functions and q,t-Schur expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cache directory (overrides QTPATHS_CACHE)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Rect,
    Dyck,
    Schroder,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    MainFormulas,
    OnePart,
    Dinv,
    Equidistribution,
    Conjecture,
    OverUnder,
    Diagram,
    NablaSchur,
    Brackets,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::MainFormulas => Suite::MainFormulas,
            SuiteArg::OnePart => Suite::OnePart,
            SuiteArg::Dinv => Suite::Dinv,
            SuiteArg::Equidistribution => Suite::Equidistribution,
            SuiteArg::Conjecture => Suite::Conjecture,
            SuiteArg::OverUnder => Suite::OverUnder,
            SuiteArg::Diagram => Suite::Diagram,
            SuiteArg::NablaSchur => Suite::NablaSchur,
            SuiteArg::Brackets => Suite::Brackets,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Stream paths (or labeled paths) with their statistics
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Keep only words whose last two letters are N, E
        #[arg(long, default_value_t = false)]
        ending_ne: bool,
        /// Attach canonical labels and the dinv statistic
        #[arg(long, default_value_t = false)]
        labeled: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print the Schur expansion of the oracle pairing
    Nabla {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Raise the built-in size limit
        #[arg(long)]
        limit: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run verification suites; exits 1 if any check fails
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Show the east-sliding chain of a word with per-step statistics
    Chain {
        word: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache_dir = cache::resolve_dir(cli.cache_dir.as_deref());
    match run(cli.command, cache_dir) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn kind_of(kind: KindArg, n: u32, d: u32, k: u32, m: u32) -> PathKind {
    match kind {
        KindArg::Rect => PathKind::Rect { n, k },
        KindArg::Dyck => PathKind::Dyck { n, m },
        KindArg::Schroder => PathKind::Schroder { n, d, m },
    }
}

fn run(cmd: Command, cache_dir: Option<PathBuf>) -> qtpaths::Result<ExitCode> {
    match cmd {
        Command::Enumerate {
            kind,
            n,
            d,
            k,
            m,
            ending_ne,
            labeled,
            format,
        } => {
            let kind = kind_of(kind, n, d, k, m);
            let paths = if ending_ne {
                qtpaths::pathcore::enumerate_schroder_tilde(n, d)?
            } else {
                enumerate_paths(kind)?
            };
            let mut rows = Vec::new();
            for p in &paths {
                let mut row = serde_json::Map::new();
                row.insert("word".into(), serde_json::json!(p.to_string()));
                row.insert("area".into(), serde_json::json!(area(p)));
                if !matches!(kind, PathKind::Rect { .. }) && m == 1 {
                    row.insert("bounce".into(), serde_json::json!(bounce(p)?));
                    row.insert("numph".into(), serde_json::json!(numph(p)?));
                }
                if labeled && !matches!(kind, PathKind::Rect { .. }) {
                    let pf = schroder_to_parking(p)?;
                    row.insert("labels".into(), serde_json::json!(pf.labels()));
                    row.insert("dinv".into(), serde_json::json!(dinv(&pf).total));
                }
                rows.push(serde_json::Value::Object(row));
            }
            print_rows(&rows, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Nabla { n, m, limit, format } => {
            let limit = limit.unwrap_or_else(|| oracle_limit(m));
            let key = format!("nabla-n{}-m{}", n, m);
            let value = cache::get_or_compute(cache_dir.as_deref(), &key, || {
                let oracle = nabla_oracle_with_limit(n, m, limit)?;
                let mut entries = Vec::new();
                for (shape, poly) in &oracle.coeffs {
                    let exp = schur_decompose(poly)?;
                    entries.push(serde_json::json!({
                        "partition": shape.parts(),
                        "polynomial": poly.to_json(),
                        "schur": exp.to_json(),
                        "pretty_polynomial": poly.to_string(),
                        "pretty_schur": exp.to_string(),
                    }));
                }
                Ok(serde_json::Value::Array(entries))
            })?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
                Format::Latex => {
                    println!("\\begin{{tabular}}{{ll}}");
                    println!("shape & expansion \\\\ \\hline");
                    for e in value.as_array().unwrap() {
                        let parts = e["partition"].as_array().unwrap();
                        let shape: Vec<String> =
                            parts.iter().map(|v| v.to_string()).collect();
                        let schur = e["pretty_schur"].as_str().unwrap();
                        let schur = schur.replace("s[", "s_{").replace(']', "}");
                        println!("$({})$ & ${}$ \\\\", shape.join(","), schur);
                    }
                    println!("\\end{{tabular}}");
                }
                _ => {
                    for e in value.as_array().unwrap() {
                        let parts = e["partition"].as_array().unwrap();
                        let shape: Vec<String> =
                            parts.iter().map(|v| v.to_string()).collect();
                        println!(
                            "({}): {}   [{}]",
                            shape.join(","),
                            e["pretty_schur"].as_str().unwrap(),
                            e["pretty_polynomial"].as_str().unwrap(),
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, m, format } => {
            let bundle = run_suite(suite.into(), n, m)?;
            print_bundle(&bundle, format);
            if bundle.has_fail() {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Chain { word } => {
            let n = word.chars().filter(|c| *c != 'E').count() as u32;
            let d = word.chars().filter(|c| *c == 'D').count() as u32;
            let p = PathWord::parse(&word, PathKind::Schroder { n, d, m: 1 })?;
            let chain = bijections::phi(&p)?;
            let stats = chain.stats();
            let steps: Vec<String> = chain.steps.iter().map(|w| w.to_string()).collect();
            let json = serde_json::json!({
                "start": steps[0],
                "steps": steps,
                "stats": stats,
            });
            println!("{}", serde_json::to_string(&json).unwrap());
            for (w, (b, a)) in chain.steps.iter().zip(&stats) {
                println!("{}  bounce={} area={}", w, b, a);
            }
            if let Ok(o) = bijections::omega(&p) {
                println!("involution partner: {}", o);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_rows(rows: &[serde_json::Value], format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            let mut cols: Vec<String> = Vec::new();
            for r in rows {
                for k in r.as_object().unwrap().keys() {
                    if !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
            sort_columns(&mut cols);
            println!("{}", cols.join(","));
            for r in rows {
                let o = r.as_object().unwrap();
                let cells: Vec<String> = cols
                    .iter()
                    .map(|c| match o.get(c) {
                        Some(serde_json::Value::String(s)) => s.clone(),
                        Some(v) => v.to_string().replace(',', ";"),
                        None => String::new(),
                    })
                    .collect();
                println!("{}", cells.join(","));
            }
        }
        _ => {
            for r in rows {
                let o = r.as_object().unwrap();
                let mut keys: Vec<String> = o.keys().cloned().collect();
                sort_columns(&mut keys);
                let cells: Vec<String> = keys
                    .iter()
                    .map(|k| match &o[k] {
                        serde_json::Value::String(s) => format!("{}={}", k, s),
                        v => format!("{}={}", k, v),
                    })
                    .collect();
                println!("{}", cells.join("  "));
            }
        }
    }
}

/// word, labels, area, bounce, numph, dinv; anything else trails.
fn sort_columns(cols: &mut [String]) {
    const ORDER: [&str; 6] = ["word", "labels", "area", "bounce", "numph", "dinv"];
    cols.sort_by_key(|c| {
        ORDER
            .iter()
            .position(|o| o == c)
            .unwrap_or(ORDER.len())
    });
}

fn print_bundle(bundle: &ReportBundle, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(bundle).unwrap());
        }
        _ => {
            for r in &bundle.reports {
                let status = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Discrepancy => "DISCREPANCY",
                };
                let witness = r
                    .witness
                    .as_deref()
                    .map(|w| format!("  [{}]", w))
                    .unwrap_or_default();
                println!("{:<12} {}  {}{}", status, r.identity, r.parameters, witness);
            }
            let (pass, fail, disc) = bundle.counts();
            println!(
                "summary: {} pass, {} fail, {} discrepancy",
                pass, fail, disc
            );
        }
    }
}
