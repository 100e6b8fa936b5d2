use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use grpx::cache::LatticeCache;
use grpx::complexes::{
    complex_isomorphism, max_independent_generating, ComplexIsoOutcome, ComplexKind, ComplexOptions,
    SimplicialComplex, DEFAULT_FACE_BUDGET,
};
use grpx::dsl::build_str;
use grpx::graphs::{
    digraph_isomorphism, directed_power_graph, enhanced_power_graph, graph_isomorphism, power_graph, Graph,
    GraphIsoOutcome,
};
use grpx::group::{group_isomorphism, parse_cayley_text, FiniteGroup, GroupIsoOutcome};
use grpx::lattice::{lattice_isomorphism, LatticeIsoOutcome, SubgroupLattice};
use grpx::verify::corpus::CORPUS;
use grpx::verify::runner::{run_corpus, RunOptions, Selection, Suite};
use grpx::{Error, DEFAULT_SEARCH_BUDGET};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "grpx", version, about = "Subgroup lattices, power graphs and independence complexes of finite groups")]
struct Cli {
    /// Node budget for isomorphism searches (overrides GRPX_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Do not read or write the lattice cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a group and print its basic data.
    Build {
        spec: String,
        /// Treat SPEC as a Cayley table file.
        #[arg(long)]
        table: bool,
        /// Print the multiplication table instead of the summary.
        #[arg(long)]
        print_table: bool,
    },
    /// Structural report of a group.
    Analyze {
        spec: String,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Export one of the power-type graphs.
    Graph {
        spec: String,
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long, value_enum, default_value = "dot")]
        out: GraphOut,
        #[arg(long)]
        table: bool,
    },
    /// Enumerate an independence complex.
    Complex {
        spec: String,
        #[arg(long, value_enum)]
        kind: CxKind,
        #[arg(long, value_enum, default_value = "fvector")]
        out: CxOut,
        /// Stop after faces of this size.
        #[arg(long)]
        max_card: Option<usize>,
        #[arg(long)]
        table: bool,
    },
    /// Search for an isomorphism between two groups' structures.
    Iso {
        spec1: String,
        spec2: String,
        #[arg(long, value_enum)]
        on: IsoOn,
        /// Lattice maps must preserve subgroup orders.
        #[arg(long)]
        index_preserving: bool,
        /// Graph kind for `--on graph` (default: all three).
        #[arg(long, value_enum)]
        kind: Option<GraphKind>,
    },
    /// Run corpus checks.
    Verify {
        /// Comma-separated suites, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Restrict to corpus keys (repeatable).
        #[arg(long)]
        group: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Corpus listing.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Power,
    Dpower,
    Enhanced,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CxKind {
    Ind,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum CxOut {
    Faces,
    Fvector,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoOn {
    Complex,
    Graph,
    Lattice,
    Group,
}

struct Env {
    budget: u64,
    cache: Option<LatticeCache>,
}

impl Env {
    fn lattice(&self, g: FiniteGroup) -> SubgroupLattice {
        let g = Arc::new(g);
        match &self.cache {
            Some(c) => c.load_or_compute(&g).0,
            None => grpx::lattice::enumerate_subgroups(&g),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = std::env::var("GRPX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let env_budget = std::env::var("GRPX_BUDGET").ok().and_then(|v| v.parse().ok());
    let env = Env {
        budget: cli.budget.or(env_budget).unwrap_or(DEFAULT_SEARCH_BUDGET),
        cache: (!cli.no_cache).then(LatticeCache::from_env),
    };
    match run(cli.cmd, &env) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::SearchBudgetExceeded { .. } | Error::FaceBudgetExceeded { .. } => EXIT_BUDGET,
                Error::Io(_) => EXIT_USAGE,
                _ => EXIT_PARSE,
            })
        }
    }
}

/// SPEC is construction text, `@path` for text read from a file, or with
/// `table` a Cayley table file.
fn load_group(spec: &str, table: bool) -> grpx::Result<FiniteGroup> {
    if table {
        let text = std::fs::read_to_string(spec)?;
        return FiniteGroup::from_cayley_table(&parse_cayley_text(&text)?);
    }
    match spec.strip_prefix('@') {
        Some(path) => Ok(build_str(&std::fs::read_to_string(PathBuf::from(path))?)?.group),
        None => Ok(build_str(spec)?.group),
    }
}

fn run(cmd: Cmd, env: &Env) -> grpx::Result<u8> {
    let mut out = Stdout(io::stdout().lock());
    match cmd {
        Cmd::Build { spec, table, print_table } => {
            let g = load_group(&spec, table)?;
            if print_table {
                writeln!(out, "{}", g.order())?;
                for row in g.table().chunks(g.order()) {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", cells.join(" "))?;
                }
            } else {
                writeln!(out, "order {}", g.order())?;
                writeln!(out, "fingerprint {}", g.fingerprint())?;
                writeln!(out, "generators {:?}", g.generators())?;
                writeln!(out, "element orders {:?}", g.order_statistics())?;
            }
        }
        Cmd::Analyze { spec, table, json } => {
            let lat = env.lattice(load_group(&spec, table)?);
            let m = max_independent_generating(&lat, DEFAULT_FACE_BUDGET)?;
            let report = lat.structure_report(m[lat.top() as usize]);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())?;
            } else if let serde_json::Value::Object(fields) = serde_json::to_value(&report).unwrap() {
                for (k, v) in fields {
                    writeln!(out, "{k}: {v}")?;
                }
            }
        }
        Cmd::Graph { spec, kind, out: fmt, table } => {
            let g = load_group(&spec, table)?;
            let pg = power_graph(&g);
            let stars = full_degree(&pg);
            let text = match (kind, fmt) {
                (GraphKind::Power, GraphOut::Dot) => pg.to_dot(&stars),
                (GraphKind::Power, GraphOut::Json) => pg.to_json().to_string(),
                (GraphKind::Dpower, GraphOut::Dot) => directed_power_graph(&g).to_dot(&stars),
                (GraphKind::Dpower, GraphOut::Json) => directed_power_graph(&g).to_json().to_string(),
                (GraphKind::Enhanced, f) => {
                    let eg = enhanced_power_graph(&g);
                    match f {
                        GraphOut::Dot => eg.to_dot(&full_degree(&eg)),
                        GraphOut::Json => eg.to_json().to_string(),
                    }
                }
            };
            write!(out, "{}", text.trim_end())?;
            writeln!(out)?;
        }
        Cmd::Complex { spec, kind, out: fmt, max_card, table } => {
            let lat = env.lattice(load_group(&spec, table)?);
            let kind = match kind {
                CxKind::Ind => ComplexKind::Independence,
                CxKind::Strong => ComplexKind::Strong,
            };
            let opts = ComplexOptions { max_cardinality: max_card, ..Default::default() };
            let c = SimplicialComplex::build(&lat, kind, opts)?;
            match fmt {
                CxOut::Faces => c.write_faces(&mut out)?,
                CxOut::Fvector => writeln!(out, "{}{}", c.f_vector(), if c.is_complete() { "" } else { " (truncated)" })?,
                CxOut::Json => writeln!(out, "{}", c.json_report())?,
            }
        }
        Cmd::Iso { spec1, spec2, on, index_preserving, kind } => {
            let (g1, g2) = (load_group(&spec1, false)?, load_group(&spec2, false)?);
            return iso(&mut out, env, g1, g2, on, index_preserving, kind);
        }
        Cmd::Verify { suite, group, json } => {
            let suites = Suite::parse_list(&suite)?;
            let selection = if group.is_empty() { Selection::All } else { Selection::Keys(group) };
            let opts = RunOptions { budget: env.budget, cache: env.cache.clone() };
            let report = run_corpus(&selection, &suites, opts)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).unwrap())?;
            } else {
                write!(out, "{}", report.to_table())?;
            }
            return Ok(if report.passed() { 0 } else { EXIT_VERIFY });
        }
        Cmd::Corpus { cmd: CorpusCmd::List } => {
            for e in CORPUS {
                let tags: Vec<String> = e.tags.iter().map(|t| format!("{t:?}")).collect();
                writeln!(out, "{:<12} {:>5}  {:<40} {}", e.key, e.order, tags.join(","), e.spec)?;
            }
        }
    }
    Ok(0)
}

/// Standard output that ends the process quietly once the reader has gone,
/// as `grpx ... | head` expects.
struct Stdout<'a>(io::StdoutLock<'a>);

fn quiet_pipe<T>(r: io::Result<T>) -> io::Result<T> {
    match r {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => r,
    }
}

impl Write for Stdout<'_> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        quiet_pipe(self.0.write(buf))
    }

    fn flush(&mut self) -> io::Result<()> {
        quiet_pipe(self.0.flush())
    }
}

fn full_degree(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    (0..n as u32).filter(|&x| g.row(x).len() + 1 == n).collect()
}

/// Prints one line per searched structure; UNKNOWN lines turn the exit code
/// into the budget code.
fn iso(
    out: &mut impl Write,
    env: &Env,
    g1: FiniteGroup,
    g2: FiniteGroup,
    on: IsoOn,
    index_preserving: bool,
    kind: Option<GraphKind>,
) -> grpx::Result<u8> {
    let mut unknown = false;
    let mut line = |out: &mut dyn Write, label: &str, r: grpx::Result<Option<Vec<u32>>>, none: String| -> grpx::Result<()> {
        match r {
            Ok(Some(map)) => writeln!(out, "{label}: {}", json!(map))?,
            Ok(None) => writeln!(out, "{label}: {none}")?,
            Err(Error::SearchBudgetExceeded { .. } | Error::FaceBudgetExceeded { .. }) => {
                unknown = true;
                writeln!(out, "{label}: UNKNOWN (budget)")?
            }
            Err(e) => return Err(e),
        }
        Ok(())
    };
    let exhausted = || "NONE (exhausted)".to_string();
    match on {
        IsoOn::Group => {
            let r = group_isomorphism(&g1, &g2, env.budget).map(|o| match o {
                GroupIsoOutcome::Isomorphic(h) => Some(h.images),
                GroupIsoOutcome::NotIsomorphic => None,
            });
            line(out, "group", r, exhausted())?;
        }
        IsoOn::Lattice => {
            let (l1, l2) = (env.lattice(g1), env.lattice(g2));
            let r = lattice_isomorphism(&l1, &l2, index_preserving, env.budget).map(|o| match o {
                LatticeIsoOutcome::Found(m) => Some(m),
                LatticeIsoOutcome::Exhausted => None,
            });
            let label = if index_preserving { "lattice (index-preserving)" } else { "lattice" };
            line(out, label, r, exhausted())?;
        }
        IsoOn::Graph => {
            let graph = |o: grpx::Result<GraphIsoOutcome>| o.map(|o| o.map().map(<[u32]>::to_vec));
            let kinds = match kind {
                Some(k) => vec![k],
                None => vec![GraphKind::Power, GraphKind::Dpower, GraphKind::Enhanced],
            };
            for k in kinds {
                let (label, r) = match k {
                    GraphKind::Power => ("power", graph(graph_isomorphism(&power_graph(&g1), &power_graph(&g2), env.budget))),
                    GraphKind::Dpower => (
                        "directed power",
                        graph(digraph_isomorphism(&directed_power_graph(&g1), &directed_power_graph(&g2), env.budget)),
                    ),
                    GraphKind::Enhanced => (
                        "enhanced power",
                        graph(graph_isomorphism(&enhanced_power_graph(&g1), &enhanced_power_graph(&g2), env.budget)),
                    ),
                };
                line(out, label, r, exhausted())?;
            }
        }
        IsoOn::Complex => {
            let (l1, l2) = (env.lattice(g1), env.lattice(g2));
            for (label, kind) in [("independence", ComplexKind::Independence), ("strong", ComplexKind::Strong)] {
                let r = (|| {
                    let a = SimplicialComplex::build(&l1, kind, ComplexOptions::default())?;
                    let b = SimplicialComplex::build(&l2, kind, ComplexOptions::default())?;
                    complex_isomorphism(&a, &b, env.budget)
                })();
                let none = match &r {
                    Ok(ComplexIsoOutcome::Refuted(why)) => format!("NONE (refuted: {why:?})"),
                    _ => exhausted(),
                };
                line(out, label, r.map(|o| o.map().map(<[u32]>::to_vec)), none)?;
            }
        }
    }
    Ok(if unknown { EXIT_BUDGET } else { 0 })
}
