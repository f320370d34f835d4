use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mrn_core::cert::{certify, Certificate, UpperEvidence};
use mrn_core::construct::{lower_bound_coloring_at, ConstructionRegistry, DEFAULT_INFINITE_T};
use mrn_core::formula::{ramsey_value, ramsey_value_strict, regime_table};
use mrn_core::graph6::{decode_graph6, encode_graph6};
use mrn_core::io::{coloring_from_json, coloring_to_json, shape_from_json, shape_to_json};
use mrn_core::search::{
    decode_model, export_cnf, find_good_coloring, SearchOptions, Symmetry, Verdict, VariableMap,
    DEFAULT_CLAUSE_CAP, DEFAULT_GENERATOR_CAP,
};
use mrn_core::{verify_good, Coloring, Error, PartiteShape, RamseyValue};

const EXIT_NOT_GOOD: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NO_WITNESS: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "mrn", version, about = "Size multipartite Ramsey numbers m_j(nK_2, C_7)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form value and regime of one cell.
    Formula {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        /// Print `ambiguous` for cells with conflicting closed forms.
        #[arg(long)]
        strict: bool,
    },
    /// Grid of values for 2 <= j <= j_max, 2 <= n <= n_max.
    Table {
        #[arg(long)]
        j_max: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Extremal coloring on K_{j x (m-1)}, verified before it is written.
    Construct {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        /// Use this family instead of the one the regime picks.
        #[arg(long)]
        family: Option<String>,
        /// Part size; required with --family, and the K_{2xT} size for j = 2.
        #[arg(long)]
        t: Option<usize>,
        /// Directory for <stem>.json, <stem>.g6 and <stem>.shape.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring (JSON, or graph6 with --shape) or a certificate.
    Verify {
        file: PathBuf,
        /// Not needed for certificates.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 7)]
        length: usize,
        /// Shape descriptor file; marks FILE as graph6.
        #[arg(long)]
        shape: Option<PathBuf>,
    },
    /// Certificate for m_j(nK_2, C_7), exhaustive upper bound where feasible.
    Certify {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        /// Seconds for the upper-bound search.
        #[arg(long, default_value_t = 300.0)]
        budget: f64,
        #[arg(long, default_value_t = 2_000_000_000)]
        node_budget: u64,
        /// Larger hosts are left to the closed form.
        #[arg(long, default_value_t = 60)]
        max_edges: usize,
        #[arg(long, env = "RAMSEY_THREADS", default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a host admits a good coloring.
    Search {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        length: usize,
        #[command(flatten)]
        options: SearchArgs,
        /// Write a found coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// DIMACS CNF whose models are the good colorings.
    ExportCnf {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        length: usize,
        #[arg(long, default_value_t = DEFAULT_CLAUSE_CAP)]
        clause_cap: usize,
        #[arg(long)]
        out: PathBuf,
        /// Variable map; defaults to <out>.map.json.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Turn a solver model back into a coloring and verify it.
    DecodeModel {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Args)]
struct HostArgs {
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["j", "t"])]
    parts: Option<Vec<usize>>,
    #[arg(long, requires = "t")]
    j: Option<usize>,
    #[arg(long, requires = "j")]
    t: Option<usize>,
}

impl HostArgs {
    fn shape(&self) -> mrn_core::Result<PartiteShape> {
        match (&self.parts, self.j, self.t) {
            (Some(p), _, _) => PartiteShape::new(p.clone()),
            (None, Some(j), Some(t)) => PartiteShape::uniform(j, t),
            _ => Err(Error::InvalidShape("give --parts or --j with --t".into())),
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value = "none")]
    symmetry: String,
    #[arg(long)]
    dominance: bool,
    #[arg(long, default_value = "natural")]
    edge_order: String,
    #[arg(long, default_value = "red-first")]
    phase: String,
    #[arg(long)]
    no_portfolio: bool,
    #[arg(long, default_value_t = 2_000_000_000)]
    node_budget: u64,
    /// Seconds.
    #[arg(long, default_value_t = 600.0)]
    time_budget: f64,
    #[arg(long, env = "RAMSEY_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
    generator_cap: usize,
}

impl SearchArgs {
    fn options(&self) -> mrn_core::Result<SearchOptions> {
        Ok(SearchOptions {
            node_budget: self.node_budget,
            time_budget: seconds(self.time_budget)?,
            symmetry: self.symmetry.parse::<Symmetry>()?,
            generator_cap: self.generator_cap,
            dominance: self.dominance,
            edge_order: self.edge_order.clone(),
            phase: self.phase.clone(),
            portfolio: !self.no_portfolio,
            threads: self.threads,
        })
    }
}

fn seconds(s: f64) -> mrn_core::Result<Duration> {
    Duration::try_from_secs_f64(s)
        .map_err(|_| Error::InvalidOptions(format!("bad duration {s}")))
}

/// An error together with the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoWitness(_) => EXIT_NO_WITNESS,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_formula(j: usize, n: usize, strict: bool) -> CmdResult {
    let e = ramsey_value(j, n)?;
    if strict && ramsey_value_strict(j, n)?.is_none() {
        println!("ambiguous");
    } else if e.value == RamseyValue::Infinite {
        println!("infinite");
    } else {
        println!("{} ({})", e.value, e.regime);
    }
    Ok(0)
}

fn cmd_table(j_max: usize, n_max: usize, strict: bool, format: TableFormat) -> CmdResult {
    let table = regime_table(j_max, n_max)?;
    match format {
        TableFormat::Tsv => print!("{}", table.to_tsv(strict)),
        TableFormat::Json => {
            let cells: Vec<_> = table
                .cells
                .iter()
                .map(|e| {
                    let value = if strict && e.ambiguous {
                        json!("ambiguous")
                    } else {
                        serde_json::to_value(e.value).expect("serializable")
                    };
                    json!({"j": e.j, "n": e.n, "value": value, "regime": e.regime, "ambiguous": e.ambiguous})
                })
                .collect();
            print_json(&json!({"j_max": j_max, "n_max": n_max, "cells": cells}));
        }
    }
    Ok(0)
}

fn write_coloring(c: &Coloring, dir: &Path, stem: &str) -> Result<Vec<PathBuf>, Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", dir.display())))?;
    let files = [
        (dir.join(format!("{stem}.json")), coloring_to_json(c) + "\n"),
        (dir.join(format!("{stem}.g6")), encode_graph6(c.red()) + "\n"),
        (dir.join(format!("{stem}.shape.json")), shape_to_json(c.shape()) + "\n"),
    ];
    for (path, text) in &files {
        write(path, text)?;
    }
    Ok(files.into_iter().map(|(p, _)| p).collect())
}

fn cmd_construct(
    j: usize,
    n: usize,
    family: Option<String>,
    t: Option<usize>,
    out: Option<PathBuf>,
) -> CmdResult {
    let registry = ConstructionRegistry::standard();
    let coloring = match family {
        Some(name) => {
            let t = t.ok_or_else(|| Failure(EXIT_USAGE, "--family needs --t".into()))?;
            ramsey_value(j, n)?;
            registry.build_verified(&name, j, n, t)?
        }
        None => lower_bound_coloring_at(&registry, j, n, t.unwrap_or(DEFAULT_INFINITE_T))?
            .ok_or_else(|| Failure(EXIT_NO_WITNESS, "value 1: empty host".into()))?,
    };
    let report = verify_good(&coloring, n, 7);
    match out {
        Some(dir) => {
            let stem = format!("coloring_j{j}_n{n}");
            for path in write_coloring(&coloring, &dir, &stem)? {
                eprintln!("wrote {}", path.display());
            }
            print_json(&json!({
                "shape": coloring.shape(),
                "red_graph6": encode_graph6(coloring.red()),
                "report": report,
            }));
        }
        None => println!("{}", coloring_to_json(&coloring)),
    }
    Ok(0)
}

fn cmd_verify(file: &Path, n: Option<usize>, length: usize, shape: Option<PathBuf>) -> CmdResult {
    let text = read(file)?;
    let coloring = match shape {
        Some(shape_file) => {
            let shape = shape_from_json(&read(&shape_file)?)?;
            Coloring::new(decode_graph6(text.trim(), &shape)?)
        }
        None => {
            let value: serde_json::Value = serde_json::from_str(&text).map_err(Error::from)?;
            if value.get("schema").is_some() {
                return verify_certificate(&text);
            }
            coloring_from_json(&text)?
        }
    };
    let n = n.ok_or_else(|| Failure(EXIT_USAGE, "--n is required for colorings".into()))?;
    if n == 0 || length < 3 {
        return Err(Failure(EXIT_USAGE, "need n >= 1 and length >= 3".into()));
    }
    let report = verify_good(&coloring, n, length);
    print_json(&serde_json::to_value(&report).expect("serializable"));
    Ok(if report.is_good { 0 } else { EXIT_NOT_GOOD })
}

fn verify_certificate(text: &str) -> CmdResult {
    let cert = Certificate::from_json(text)?;
    match cert.validate() {
        Ok(()) if cert.is_refuted() => {
            println!(
                "certificate valid: claimed value {} is refuted by a good coloring on K_{{{}x{}}}",
                cert.claimed_value, cert.j, cert.claimed_value
            );
            Ok(EXIT_NOT_GOOD)
        }
        Ok(()) => {
            println!("certificate valid: m_{}({}K_2, C_7) = {}", cert.j, cert.n, cert.claimed_value);
            Ok(0)
        }
        Err(e) => {
            println!("certificate invalid: {e}");
            Ok(EXIT_NOT_GOOD)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_certify(
    j: usize,
    n: usize,
    budget: f64,
    node_budget: u64,
    max_edges: usize,
    threads: usize,
    out: Option<PathBuf>,
) -> CmdResult {
    let options = SearchOptions {
        time_budget: seconds(budget)?,
        node_budget,
        threads,
        ..SearchOptions::pruned()
    };
    let cert = certify(j, n, &options, Some(max_edges))?;
    let text = cert.to_json();
    match out {
        Some(path) => write(&path, &(text + "\n"))?,
        None => println!("{text}"),
    }
    Ok(match &cert.upper_bound {
        UpperEvidence::Refuted { .. } => {
            eprintln!("claimed value {} is refuted by a good coloring", cert.claimed_value);
            EXIT_NOT_GOOD
        }
        UpperEvidence::FormulaTrusted { reason, .. } if reason.contains("budget") => {
            eprintln!("upper-bound search ran out of budget; certificate relies on the closed form");
            EXIT_BUDGET
        }
        _ => 0,
    })
}

fn cmd_search(
    host: &HostArgs,
    n: usize,
    length: usize,
    args: &SearchArgs,
    out: Option<PathBuf>,
) -> CmdResult {
    let shape = host.shape()?;
    let options = args.options()?;
    match find_good_coloring(&shape, n, length, &options)? {
        Verdict::Good { coloring, stats } => {
            if let Some(path) = out {
                write(&path, &(coloring_to_json(&coloring) + "\n"))?;
            }
            print_json(&json!({
                "verdict": "good",
                "shape": shape,
                "red_graph6": encode_graph6(coloring.red()),
                "red_edges": coloring.red().pairs(),
                "stats": stats,
            }));
            Ok(0)
        }
        Verdict::Exhausted(cert) => {
            print_json(&json!({"verdict": "exhausted", "certificate": cert}));
            Ok(0)
        }
        Verdict::BudgetExceeded(stats) => {
            print_json(&json!({"verdict": "budget-exceeded", "stats": stats}));
            Ok(EXIT_BUDGET)
        }
    }
}

fn cmd_export_cnf(
    host: &HostArgs,
    n: usize,
    length: usize,
    clause_cap: usize,
    out: &Path,
    map: Option<PathBuf>,
) -> CmdResult {
    let shape = host.shape()?;
    let cnf = export_cnf(&shape, n, length, clause_cap)?;
    let map = map.unwrap_or_else(|| {
        let mut name = out.as_os_str().to_owned();
        name.push(".map.json");
        PathBuf::from(name)
    });
    write(out, &cnf.dimacs)?;
    write(&map, &(serde_json::to_string_pretty(&cnf.var_map).expect("serializable") + "\n"))?;
    print_json(&json!({
        "variables": cnf.num_vars,
        "clauses": cnf.num_clauses,
        "cnf": out,
        "map": map,
    }));
    Ok(0)
}

fn cmd_decode_model(map: &Path, model: &Path, out: Option<PathBuf>) -> CmdResult {
    let var_map: VariableMap = serde_json::from_str(&read(map)?).map_err(Error::from)?;
    let coloring = decode_model(&read(model)?, &var_map)?;
    let report = verify_good(&coloring, var_map.n, var_map.cycle_length);
    if let Some(path) = out {
        write(&path, &(coloring_to_json(&coloring) + "\n"))?;
    }
    print_json(&json!({"red_graph6": encode_graph6(coloring.red()), "report": report}));
    Ok(if report.is_good { 0 } else { EXIT_NOT_GOOD })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Formula { j, n, strict } => cmd_formula(j, n, strict),
        Command::Table { j_max, n_max, strict, format } => cmd_table(j_max, n_max, strict, format),
        Command::Construct { j, n, family, t, out } => cmd_construct(j, n, family, t, out),
        Command::Verify { file, n, length, shape } => cmd_verify(&file, n, length, shape),
        Command::Certify { j, n, budget, node_budget, max_edges, threads, out } => {
            cmd_certify(j, n, budget, node_budget, max_edges, threads, out)
        }
        Command::Search { host, n, length, options, out } => {
            cmd_search(&host, n, length, &options, out)
        }
        Command::ExportCnf { host, n, length, clause_cap, out, map } => {
            cmd_export_cnf(&host, n, length, clause_cap, &out, map)
        }
        Command::DecodeModel { map, model, out } => cmd_decode_model(&map, &model, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
