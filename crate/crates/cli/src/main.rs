use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use chemgraph::families::{atlas_to_csv, atlas_to_json, family_atlas, DEFAULT_NODE_BUDGET};
use chemgraph::index::{all_builtins, BUILTINS};
use chemgraph::oracle::ENUMERATION_LIMIT;
use chemgraph::{
    classify, construct_f1_explicit, enumerate_connected_maxdeg3, family_censuses, named, parse_graph6,
    realize_census, verify_characterization, write_graph6, Direction, EdgeCensus, FamilyId, IndexDefinition,
    Oracle, DEFAULT_EPSILON,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chemgraph", version, about = "Extremal chemical graphs for degree-based topological indices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for enumeration and verification.
    #[arg(long, global = true, env = "CHEMGRAPH_WORKERS")]
    workers: Option<usize>,

    /// Sign tolerance for V-values.
    #[arg(long, global = true, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,

    /// Node limit for the witness realizer.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Args, Clone)]
struct IndexSelector {
    /// Built-in index name, or comma-separated c12,c13,c22,c23,c33.
    #[arg(long, conflicts_with_all = ["coeffs", "index_file"])]
    index: Option<String>,

    /// Custom coefficients c12,c13,c22,c23,c33.
    #[arg(long, conflicts_with = "index_file", allow_hyphen_values = true)]
    coeffs: Option<String>,

    /// JSON file holding {"name": ..., "c": [c12, c13, c22, c23, c33]}.
    #[arg(long)]
    index_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in indices.
    Indices,
    /// Evaluate an index on a census or a graph.
    Eval {
        #[command(flatten)]
        index: IndexSelector,
        #[command(flatten)]
        input: CensusInput,
    },
    /// Edge census, vertex counts and realizability of a graph or census.
    Census {
        #[command(flatten)]
        input: CensusInput,
    },
    /// Enumerate connected graphs of maximum degree 3.
    Enumerate {
        #[arg(long, visible_alias = "n")]
        order: usize,
        /// Keep only graphs of this size.
        #[arg(long)]
        m: Option<usize>,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// Extremal censuses of an index at one order and size.
    Extremal {
        #[command(flatten)]
        index: IndexSelector,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "max")]
        direction: Direction,
    },
    /// Predicted extremal families of an index.
    Classify {
        #[command(flatten)]
        index: IndexSelector,
    },
    /// Censuses of one family at one order and size.
    Family {
        #[arg(long)]
        id: FamilyId,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Cycle-and-chords witness for the F1 census at even n.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Find a chemical graph with a given census.
    Realize {
        #[arg(long, value_name = "X12,X13,X22,X23,X33")]
        census: String,
    },
    /// Check predicted extremal censuses against the enumeration oracle.
    Verify {
        #[command(flatten)]
        index: IndexSelector,
        /// Verify all 33 built-ins.
        #[arg(long)]
        all_builtins: bool,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Family censuses with witness graphs over a range of orders.
    Atlas {
        /// Families to include; all when omitted.
        #[arg(long, value_delimiter = ',')]
        id: Vec<FamilyId>,
        #[arg(long, default_value_t = 7)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct CensusInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Census x12,x13,x22,x23,x33.
    #[arg(long)]
    census: Option<String>,
}

/// Failure classes mapped to exit statuses.
enum Failure {
    Usage(anyhow::Error),
    Disagreement,
    Runtime(anyhow::Error),
}

fn usage<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Usage(e.into())
}

fn runtime<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Runtime(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| anyhow!("invalid {what} entry {s:?}")))
        .collect()
}

fn parse_census(text: &str) -> Result<EdgeCensus> {
    let v: Vec<u64> = parse_list(text, "census")?;
    let arr: [u64; 5] = v.try_into().map_err(|_| anyhow!("a census has exactly 5 entries"))?;
    Ok(EdgeCensus::from(arr))
}

fn parse_coeffs(name: &str, text: &str) -> Result<IndexDefinition> {
    let v: Vec<f64> = parse_list(text, "coefficient")?;
    let arr: [f64; 5] = v.try_into().map_err(|_| anyhow!("an index has exactly 5 coefficients"))?;
    Ok(IndexDefinition::new(name, arr)?)
}

impl IndexSelector {
    fn is_given(&self) -> bool {
        self.index.is_some() || self.coeffs.is_some() || self.index_file.is_some()
    }

    fn resolve(&self) -> Result<IndexDefinition> {
        if let Some(name) = &self.index {
            // built-in names win over a coefficient reading
            return match named(name) {
                Ok(f) => Ok(f),
                Err(e) if name.contains(',') => parse_coeffs("custom", name).context(e.to_string()),
                Err(e) => Err(e.into()),
            };
        }
        if let Some(text) = &self.coeffs {
            return parse_coeffs("custom", text);
        }
        if let Some(path) = &self.index_file {
            let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let f: IndexDefinition =
                serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
            return Ok(IndexDefinition::new(f.name, f.coeffs)?);
        }
        bail!("one of --index, --coeffs or --index-file is required")
    }
}

impl CensusInput {
    fn census(&self) -> Result<EdgeCensus> {
        match (&self.graph6, &self.census) {
            (Some(g), _) => Ok(parse_graph6(g)?.edge_census()?),
            (_, Some(c)) => parse_census(c),
            _ => bail!("one of --graph6 or --census is required"),
        }
    }
}

fn workers(cli: &Cli) -> usize {
    cli.workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn check_format(format: Format, allowed: &[Format]) -> Result<Format, Failure> {
    if allowed.contains(&format) {
        Ok(format)
    } else {
        let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(usage(anyhow!("format {name} is not available for this command")))
    }
}

fn pick(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    check_format(cli.format.unwrap_or(default), allowed)
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut out = String::new();
    let mut disagreement = false;
    match &cli.command {
        Command::Indices => {
            let fmt = pick(cli, Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
            let defs = all_builtins();
            match fmt {
                Format::Json => out = serde_json::to_string_pretty(&defs).expect("serializes") + "\n",
                Format::Csv => {
                    let rows: Vec<Vec<String>> = BUILTINS
                        .iter()
                        .zip(&defs)
                        .map(|(b, d)| {
                            let mut r = vec![b.short_name.to_string(), b.formula.to_string()];
                            r.extend(d.coeffs.iter().map(|c| format!("{c}")));
                            r
                        })
                        .collect();
                    out = csv_text(&["name", "formula", "c12", "c13", "c22", "c23", "c33"], &rows);
                }
                _ => {
                    for b in &BUILTINS {
                        out.push_str(&format!("{:<10} {:<52} {}\n", b.short_name, b.long_name, b.formula));
                    }
                }
            }
        }
        Command::Eval { index, input } => {
            let fmt = pick(cli, Format::Text, &[Format::Text, Format::Json])?;
            let f = index.resolve().map_err(usage)?;
            let x = input.census().map_err(usage)?;
            let value = f.evaluate(&x);
            out = match fmt {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({ "index": f.name, "census": x, "value": value })
                ),
                _ => format!("{value}\n"),
            };
        }
        Command::Census { input } => {
            let fmt = pick(cli, Format::Text, &[Format::Text, Format::Json])?;
            let x = input.census().map_err(usage)?;
            let counts = x.vertex_counts().ok();
            let real = x.realizability(chemgraph::ChemicalGate::On);
            let report = serde_json::json!({
                "census": x,
                "order_size": x.order_size().ok(),
                "vertex_counts": counts.map(|c| [c.n1, c.n2, c.n3]),
                "realizable": real.is_realizable(),
                "violations": real.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            out = match fmt {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializes")),
                _ => {
                    let mut s = format!("census      {x}\n");
                    match x.order_size() {
                        Ok((n, m)) => s.push_str(&format!("order/size  {n} {m}\n")),
                        Err(e) => s.push_str(&format!("order/size  {e}\n")),
                    }
                    if let Some(c) = counts {
                        s.push_str(&format!("n1 n2 n3    {} {} {}\n", c.n1, c.n2, c.n3));
                    }
                    s.push_str(&format!("realizable  {}\n", real.is_realizable()));
                    for v in &real.violations {
                        s.push_str(&format!("violation   {v}\n"));
                    }
                    s
                }
            };
        }
        Command::Enumerate { order, m, count } => {
            let fmt = pick(cli, Format::Graph6, &[Format::Graph6, Format::Json, Format::Text])?;
            if *order == 0 || *order > ENUMERATION_LIMIT {
                return Err(usage(anyhow!("--order must be in 1..={ENUMERATION_LIMIT}")));
            }
            let graphs = enumerate_connected_maxdeg3(*order, workers(cli)).map_err(runtime)?;
            let kept: Vec<_> = graphs.iter().filter(|g| m.is_none_or(|m| g.size() == m)).collect();
            if *count {
                out = format!("{}\n", kept.len());
            } else {
                let codes: Vec<String> = kept.iter().map(|g| write_graph6(g)).collect();
                out = match fmt {
                    Format::Json => serde_json::to_string(&codes).expect("serializes") + "\n",
                    _ => codes.iter().map(|c| format!("{c}\n")).collect(),
                };
            }
        }
        Command::Extremal { index, n, m, direction } => {
            let fmt = pick(cli, Format::Json, &[Format::Json, Format::Csv, Format::Text])?;
            let f = index.resolve().map_err(usage)?;
            if *n > ENUMERATION_LIMIT {
                return Err(usage(anyhow!("--n must be at most {ENUMERATION_LIMIT}")));
            }
            let report = Oracle::new(workers(cli)).extremal_censuses(&f, *n, *m, *direction).map_err(usage)?;
            out = match fmt {
                Format::Csv => report.to_csv(),
                Format::Text => {
                    let mut s = format!(
                        "{} {} n={} m={} optimum={} graphs={}\n",
                        report.index, report.direction, report.n, report.m, report.optimum, report.graph_count
                    );
                    for w in &report.optimal_censuses {
                        s.push_str(&format!("{}  {}  ({} graphs)\n", w.census, w.witness, w.graphs));
                    }
                    s
                }
                _ => report.to_json() + "\n",
            };
        }
        Command::Classify { index } => {
            let fmt = pick(cli, Format::Text, &[Format::Text, Format::Json])?;
            let f = index.resolve().map_err(usage)?;
            if cli.epsilon <= 0.0 || !cli.epsilon.is_finite() {
                return Err(usage(anyhow!("--epsilon must be positive")));
            }
            let r = classify(&f, cli.epsilon);
            out = match fmt {
                Format::Json => r.to_json() + "\n",
                _ => r.to_text(),
            };
        }
        Command::Family { id, n, m } => {
            let fmt = pick(cli, Format::Json, &[Format::Json, Format::Csv, Format::Text])?;
            let set = family_censuses(*id, *n, *m);
            out = match fmt {
                Format::Csv => {
                    let rows: Vec<Vec<String>> = set
                        .censuses
                        .iter()
                        .map(|x| {
                            let mut r = vec![id.to_string(), n.to_string(), m.to_string()];
                            r.extend(x.to_array().iter().map(u64::to_string));
                            r
                        })
                        .collect();
                    csv_text(&["family", "n", "m", "x12", "x13", "x22", "x23", "x33"], &rows)
                }
                Format::Text => {
                    let mut s: String = set.censuses.iter().map(|x| format!("{x}\n")).collect();
                    if let Some(reason) = &set.reason {
                        s.push_str(&format!("# {reason}\n"));
                    }
                    s
                }
                _ => set.to_json() + "\n",
            };
            if let Some(reason) = &set.reason {
                if fmt != Format::Text {
                    eprintln!("note: {reason}");
                }
            }
        }
        Command::Construct { n, m } => {
            let fmt = pick(cli, Format::Graph6, &[Format::Graph6, Format::Json])?;
            let c = construct_f1_explicit(*n, *m, cli.budget).map_err(|e| match e {
                chemgraph::families::ConstructError::OutOfRange { .. } => usage(e),
                _ => runtime(e),
            })?;
            if let Some(why) = &c.fallback {
                eprintln!("note: fell back to the realizer: {why}");
            }
            out = match fmt {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "n": n, "m": m, "census": c.census,
                        "graph6": write_graph6(&c.graph), "fallback": c.fallback,
                    })
                ),
                _ => write_graph6(&c.graph) + "\n",
            };
        }
        Command::Realize { census } => {
            let fmt = pick(cli, Format::Graph6, &[Format::Graph6, Format::Json])?;
            let x = parse_census(census).map_err(usage)?;
            let g = realize_census(&x, cli.budget).map_err(runtime)?;
            let code = g.as_ref().map(write_graph6);
            out = match fmt {
                Format::Json => format!("{}\n", serde_json::json!({ "census": x, "graph6": code })),
                _ => format!("{}\n", code.as_deref().unwrap_or("none")),
            };
        }
        Command::Verify { index, all_builtins: all, n_max } => {
            let fmt = pick(cli, Format::Text, &[Format::Text, Format::Json])?;
            if *n_max < 7 || *n_max > ENUMERATION_LIMIT {
                return Err(usage(anyhow!("--n-max must be in 7..={ENUMERATION_LIMIT}")));
            }
            let indices = match (*all, index.is_given()) {
                (true, false) => all_builtins(),
                (false, true) => vec![index.resolve().map_err(usage)?],
                _ => return Err(usage(anyhow!("give exactly one of --all-builtins or an index selector"))),
            };
            let oracle = Oracle::new(workers(cli));
            let mut reports = Vec::new();
            for f in &indices {
                reports.push(verify_characterization(f, *n_max, &oracle, cli.epsilon).map_err(runtime)?);
            }
            disagreement = reports.iter().any(|r| !r.is_clean());
            out = match fmt {
                Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
                Format::Json => serde_json::to_string_pretty(&reports).expect("serializes") + "\n",
                _ => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n"),
            };
        }
        Command::Atlas { id, n_min, n_max } => {
            let fmt = pick(cli, Format::Csv, &[Format::Csv, Format::Json])?;
            let families = if id.is_empty() { FamilyId::ALL.to_vec() } else { id.clone() };
            let rows = family_atlas(&families, *n_min, *n_max, cli.budget).map_err(runtime)?;
            out = match fmt {
                Format::Json => atlas_to_json(&rows) + "\n",
                _ => atlas_to_csv(&rows),
            };
        }
    }
    emit(cli, &out).map_err(runtime)?;
    if disagreement {
        return Err(Failure::Disagreement);
    }
    Ok(())
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
