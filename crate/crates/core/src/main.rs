use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use schroder_maj::harness::query::{self, EnumFamily, Formula, Inputs};
use schroder_maj::harness::trace::{self, MapName, TraceLine};
use schroder_maj::harness::{run_sweep, Check, Format, SweepConfig};
use schroder_maj::paths::StepOrder;
use schroder_maj::tableaux::Statistic;
use schroder_maj::Error;

/// Major-index generating functions for Schröder paths and two-row tableaux:
/// enumeration, closed forms, sweeps and bijection traces.
#[derive(Debug, Parser)]
#[command(name = "schroder-maj", version)]
struct Cli {
    /// Output format: table, json or csv.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Flat `key = value` config file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest n for path families and sweep grids.
    #[arg(long, global = true)]
    max_n: Option<u32>,
    /// Largest number of cells of an enumerated tableau family.
    #[arg(long, global = true)]
    max_cells: Option<u32>,
    /// Step order such as "E>D>N" or "E<D<N".
    #[arg(long, global = true)]
    order: Option<StepOrder>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Default)]
struct ParamArgs {
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Partition or skew shape, e.g. "4,3/1".
    #[arg(long)]
    shape: Option<String>,
    /// maj or amaj.
    #[arg(long)]
    stat: Option<Statistic>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate a family: schroeder, catalan, rinc, inc, syt or rt.
    Enumerate {
        family: EnumFamily,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Evaluate a closed form.
    ClosedForm {
        formula: Formula,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare enumerations with closed forms over parameter grids.
    Verify {
        /// Restrict to these checks (repeatable).
        #[arg(long = "check")]
        checks: Vec<Check>,
        /// Report 0 ms for every record so reports are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Push a domain, or one tableau, through a bijection and back.
    Bijection {
        name: MapName,
        #[command(flatten)]
        params: ParamArgs,
        /// A single tableau, rows separated by "/", "." for inner cells.
        #[arg(long)]
        tableau: Option<String>,
        /// Hole for jdt as "row,col".
        #[arg(long)]
        cell: Option<String>,
        /// Slide outward (jdt only).
        #[arg(long)]
        out: bool,
    },
}

fn inputs(p: &ParamArgs, order: Option<StepOrder>) -> Inputs {
    Inputs { r: p.r, n: p.n, m: p.m, k: p.k, shape: p.shape.clone(), stat: p.stat, order }
}

fn config(cli: &Cli) -> Result<SweepConfig, Error> {
    let mut cfg = SweepConfig::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        cfg.apply_kv(&text)?;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        cfg.jobs = Some(j);
    }
    if let Some(n) = cli.max_n {
        cfg.max_n = n;
    }
    if let Some(c) = cli.max_cells {
        cfg.max_cells = c;
    }
    if cli.order.is_some() {
        cfg.order = cli.order;
    }
    Ok(cfg)
}

fn parse_cell(s: &str) -> Result<(usize, usize), Error> {
    let (i, j) = s.split_once(',').ok_or_else(|| Error::Parse(format!("cell {s:?} is not row,col")))?;
    let num = |x: &str| x.trim().parse().map_err(|_| Error::Parse(format!("cell {s:?} is not row,col")));
    Ok((num(i)?, num(j)?))
}

fn render_one<T: Serialize>(format: Format, value: &T, table: String) -> Result<String, Error> {
    match format {
        Format::Table => Ok(table),
        Format::Json => serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Error::Config(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(value).map_err(|e| Error::Config(e.to_string()))?;
            let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Config(e.to_string()))
        }
    }
}

fn render_trace(format: Format, lines: &[TraceLine]) -> Result<String, Error> {
    match format {
        Format::Table => {
            let mut out = String::new();
            for l in lines {
                match &l.error {
                    Some(e) if l.output.is_empty() => out.push_str(&format!("{}  ERROR: {e}\n", l.input)),
                    _ => {
                        out.push_str(&format!("{}  ->  {}\n", l.input, l.output));
                        out.push_str(&format!("    {}  ->  {}", l.stat_in, l.stat_out));
                        out.push_str(if l.round_trip { "  round trip ok\n" } else { "  round trip FAILED\n" });
                        if let Some(e) = &l.error {
                            out.push_str(&format!("    ERROR: {e}\n"));
                        }
                    }
                }
            }
            let bad = lines.iter().filter(|l| !l.ok()).count();
            out.push_str(&format!("{} elements, {} failures\n", lines.len(), bad));
            Ok(out)
        }
        Format::Json => serde_json::to_string_pretty(lines).map(|s| s + "\n").map_err(|e| Error::Config(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for l in lines {
                w.serialize(l).map_err(|e| Error::Config(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Config(e.to_string()))
        }
    }
}

/// Output plus whether a mismatch was found.
fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let mut cfg = config(cli)?;
    match &cli.command {
        Command::Enumerate { family, params } => {
            let a = query::enumerate(*family, &inputs(params, cfg.order), &cfg)?;
            let mut table = format!("family: {}\n", a.family);
            if let Some(p) = &a.polynomial {
                table.push_str(&format!("polynomial: {p}\n"));
            }
            table.push_str(&format!("count: {}\n", a.count));
            Ok((render_one(cfg.format, &a, table)?, false))
        }
        Command::ClosedForm { formula, params } => {
            let a = query::closed_form(*formula, &inputs(params, cfg.order))?;
            let table = format!("polynomial: {}\nfamily_empty: {}\n", a.polynomial, a.family_empty);
            Ok((render_one(cfg.format, &a, table)?, false))
        }
        Command::Verify { checks, no_timing } => {
            if !checks.is_empty() {
                cfg.checks = checks.clone();
            }
            if *no_timing {
                cfg.timing = false;
            }
            let report = run_sweep(&cfg)?;
            Ok((report.render(cfg.format)?, report.has_mismatch()))
        }
        Command::Bijection { name, params, tableau, cell, out } => {
            let cell = cell.as_deref().map(parse_cell).transpose()?;
            let lines = trace::trace(*name, &inputs(params, cfg.order), tableau.as_deref(), cell, *out, &cfg)?;
            let failed = lines.iter().any(|l| !l.ok());
            Ok((render_trace(cfg.format, &lines)?, failed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, failed)) => {
            print!("{out}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NonExactDivision { .. } | Error::DivisionByZero => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
