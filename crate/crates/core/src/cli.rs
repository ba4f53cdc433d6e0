//! The `clutterc` command line: argument parsing, input readers and the
//! json / tsv / human renderers for every report.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census;
use crate::clutter::Clutter;
use crate::complexity::{clutter_complexity_with, ComplexityReport, Method};
use crate::error::Error;
use crate::families::{
    addendum_clutter, addendum_graph, addendum_spec, all_rationals_graph, all_rationals_spec, main_bound_extremal,
    main_bound_spec, rational_witness_search, FamilySpec, WitnessOptions,
};
use crate::graph::{encode_graph6, parse_graph6, EdgeIndexMap, Graph};
use crate::limits::Limits;
use crate::rational::Rational;
use crate::reductions::{
    build_problem1_graph, build_problem2_graph, random_instance, verify_problem1, verify_problem2, ReductionOutput,
    SetCoverInstance,
};
use crate::tree::{construct_full_complexity_mis, label_tree};
use crate::verification::{
    check_clutter_bound, conjecture_scan_builtin, conjecture_scan_graph6, full_report, BoundKind, BoundReport,
    GraphContext, LemmaKind, LemmaReport, ScanReport,
};
use crate::VertexSet;

#[derive(Debug, Parser)]
#[command(name = "clutterc", version, about = "Exact recognizing-set complexity of graph clutters")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Largest accepted vertex count.
    #[arg(long, global = true, env = "CLUTTER_VERTEX_CAP")]
    vertex_cap: Option<usize>,
    /// Most maximal sets one enumeration may produce.
    #[arg(long, global = true, env = "CLUTTER_ENUM_CAP")]
    enum_cap: Option<usize>,
    /// Wall-clock budget for searches and scans.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_limit: Option<f64>,
    /// Seed for every randomized subcommand.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// A single graph in graph6.
    #[arg(long, value_name = "CODE")]
    graph6: Option<String>,
    /// Edge-list file: vertex count, then one `u v` pair per line.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// File of graph6 lines; standard input when no source is given.
    #[arg(long, short = 'i', value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact complexity of the independent-set or matching clutter, or of a clutter file.
    Complexity {
        #[arg(long, conflicts_with_all = ["matching", "clutter"])]
        independent: bool,
        #[arg(long, conflicts_with = "clutter")]
        matching: bool,
        /// Clutter file: ground-set size, then one edge per line.
        #[arg(long, value_name = "FILE")]
        clutter: Option<PathBuf>,
        /// Greedy upper bound instead of the exact value.
        #[arg(long)]
        greedy: bool,
        #[command(flatten)]
        source: GraphInput,
    },
    /// Alpha/beta/gamma/delta labels of a tree.
    LabelTree {
        #[command(flatten)]
        source: GraphInput,
    },
    /// Maximal independent set of complexity one through a given leaf.
    ConstructTreeMis {
        /// Leaf to include; every leaf when omitted.
        #[arg(long)]
        leaf: Option<usize>,
        #[command(flatten)]
        source: GraphInput,
    },
    /// Set Cover gadgets.
    Reduce {
        #[command(subcommand)]
        action: ReduceCommand,
    },
    /// Generators for the extremal families.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Bound and lemma checks.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Conjecture scan over connected regular graphs.
    Scan {
        /// Every labeled graph up to `--max-n` vertices instead of a graph6 stream.
        #[arg(long)]
        builtin: bool,
        #[arg(long, default_value_t = 7, requires = "builtin")]
        max_n: usize,
        /// File of graph6 lines; standard input otherwise.
        #[arg(long, short = 'i', value_name = "FILE", conflicts_with = "builtin")]
        input: Option<PathBuf>,
    },
    /// Statistics, both complexities, bounds and lemmas as one JSON document per graph.
    Report {
        #[command(flatten)]
        source: GraphInput,
    },
    /// Non-isomorphic graphs of one order as graph6 lines.
    Census {
        #[arg(long, value_enum, default_value_t = CensusKind::Connected)]
        kind: CensusKind,
        #[arg(short = 'n', long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusKind {
    All,
    Connected,
    Regular,
    Trees,
}

#[derive(Debug, Args)]
struct InstanceInput {
    /// Instance file: `n m`, then one set per line; standard input otherwise.
    #[arg(long, value_name = "FILE")]
    instance: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum ReduceCommand {
    /// Gadget whose distinguished set needs `l_min` recognizing vertices.
    Problem1 {
        #[command(flatten)]
        source: InstanceInput,
    },
    /// Gadget with complexity `l_min / m`.
    Problem2 {
        /// Copies per element; `(n + m)^2` by default.
        #[arg(long)]
        multiplicity: Option<usize>,
        #[command(flatten)]
        source: InstanceInput,
    },
    /// Exhaustive check of both gadgets on one instance.
    Verify {
        #[arg(long)]
        multiplicity: Option<usize>,
        /// Skip the second gadget.
        #[arg(long)]
        problem1_only: bool,
        #[command(flatten)]
        source: InstanceInput,
    },
    /// Seeded random instance in the text format.
    Random {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyCommand {
    /// Graph attaining the main lower bound with equality at `n^2 + 1` vertices.
    MainBound {
        #[arg(short = 'n', long)]
        n: usize,
    },
    /// Connected bipartite graph of independent-set complexity `m/n`.
    AllRationals {
        #[arg(short = 'm', long)]
        m: usize,
        #[arg(short = 'n', long)]
        n: usize,
    },
    /// Graph whose independent-set clutter, minus one set, sits below the clutter bound.
    Addendum {
        #[arg(short = 'k', long)]
        k: usize,
        /// Emit the clutter instead of the graph.
        #[arg(long)]
        clutter: bool,
    },
    /// Connected graph with a given matching complexity.
    Witness {
        #[arg(long)]
        target: Rational,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CheckCommand {
    /// One bound (or `all`).
    Bound {
        #[arg(long)]
        kind: KindArg<BoundKind>,
        /// Clutter file instead of graphs.
        #[arg(long, value_name = "FILE")]
        clutter: Option<PathBuf>,
        #[command(flatten)]
        source: GraphInput,
    },
    /// One structural lemma (or `all`).
    Lemma {
        #[arg(long)]
        kind: KindArg<LemmaKind>,
        #[command(flatten)]
        source: GraphInput,
    },
}

#[derive(Debug, Clone, Copy)]
enum KindArg<K> {
    All,
    One(K),
}

impl<K: std::str::FromStr<Err = String>> std::str::FromStr for KindArg<K> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(KindArg::All)
        } else {
            s.parse().map(KindArg::One)
        }
    }
}

impl<K: Copy> KindArg<K> {
    fn expand(self, all: &[K]) -> Vec<K> {
        match self {
            KindArg::All => all.to_vec(),
            KindArg::One(k) => vec![k],
        }
    }
}

/// Failures that end the process with exit code 2.
#[derive(Debug)]
enum Fail {
    Input(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Io(e)
    }
}

impl std::fmt::Display for Fail {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fail::Input(s) => f.write_str(s),
            Fail::Core(e) => write!(f, "{e}"),
            Fail::Io(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = Result<i32, Fail>;

struct Ctx<'a> {
    format: Format,
    limits: Limits,
    seed: u64,
    stdin: &'a mut (dyn BufRead + Send),
    out: &'a mut (dyn Write + Send),
}

impl Ctx<'_> {
    fn json(&mut self, value: &impl Serialize) -> io::Result<()> {
        serde_json::to_writer(&mut *self.out, value)?;
        writeln!(self.out)
    }

    fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.out, "{text}")
    }

    fn read_stdin(&mut self) -> io::Result<String> {
        let mut s = String::new();
        io::Read::read_to_string(&mut self.stdin, &mut s)?;
        Ok(s)
    }

    fn read_path(&mut self, path: &Path) -> Result<String, Fail> {
        if path.as_os_str() == "-" {
            return Ok(self.read_stdin()?);
        }
        fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
    }

    fn graphs(&mut self, src: &GraphInput) -> Result<Vec<Graph>, Fail> {
        let graphs = if let Some(code) = &src.graph6 {
            vec![parse_graph6(code.trim())?]
        } else if let Some(path) = &src.edges {
            vec![Graph::parse_edge_list(&self.read_path(path)?)?]
        } else {
            let text = match &src.input {
                Some(path) => self.read_path(path)?,
                None => self.read_stdin()?,
            };
            let mut gs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim().trim_start_matches(">>graph6<<");
                if line.is_empty() {
                    continue;
                }
                gs.push(parse_graph6(line).map_err(|e| Fail::Input(format!("line {}: {e}", i + 1)))?);
            }
            gs
        };
        if graphs.is_empty() {
            return Err(Fail::Input("no graph given".into()));
        }
        for g in &graphs {
            self.limits.check_vertices(g.n())?;
        }
        Ok(graphs)
    }

    fn instance(&mut self, src: &InstanceInput) -> Result<SetCoverInstance, Fail> {
        let text = match &src.instance {
            Some(path) => self.read_path(path)?,
            None => self.read_stdin()?,
        };
        Ok(SetCoverInstance::parse_text(&text)?)
    }
}

/// Runs `clutterc` with the given arguments (program name first) and returns
/// the process exit code: 0 everything holds, 1 a violation was found, 2
/// input or usage error.
pub fn dispatch<I, T>(
    args: I,
    stdin: &mut (dyn BufRead + Send),
    stdout: &mut (dyn Write + Send),
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
                let _ = writeln!(stderr, "{first}");
            }
            return code;
        }
    };
    let mut limits = Limits::default();
    if let Some(cap) = cli.vertex_cap {
        limits.vertex_cap = cap;
    }
    if let Some(cap) = cli.enum_cap {
        limits.enum_cap = cap;
    }
    if let Some(secs) = cli.time_limit {
        if !(secs.is_finite() && secs >= 0.0) {
            let _ = writeln!(stderr, "error: --time-limit must be a non-negative number of seconds");
            return 2;
        }
        limits.time_limit = Some(Duration::from_secs_f64(secs));
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let mut ctx = Ctx { format: cli.format, limits, seed: cli.seed, stdin, out: stdout };
    let result = pool.install(|| run(&mut ctx, cli.command));
    let _ = ctx.out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn run(ctx: &mut Ctx<'_>, command: Command) -> Outcome {
    match command {
        Command::Complexity { independent: _, matching, clutter, greedy, source } => {
            let method = if greedy { Method::Greedy } else { Method::Exact };
            match clutter {
                Some(path) => complexity_of_clutter(ctx, &path, method),
                None => complexity_of_graphs(ctx, &source, matching, method),
            }
        }
        Command::LabelTree { source } => label_trees(ctx, &source),
        Command::ConstructTreeMis { leaf, source } => construct(ctx, &source, leaf),
        Command::Reduce { action } => reduce(ctx, action),
        Command::Family { family } => family_cmd(ctx, family),
        Command::Check { what: CheckCommand::Bound { kind, clutter, source } } => {
            check_bounds(ctx, kind.expand(BoundKind::ALL), clutter.as_deref(), &source)
        }
        Command::Check { what: CheckCommand::Lemma { kind, source } } => {
            check_lemmas(ctx, kind.expand(LemmaKind::ALL), &source)
        }
        Command::Scan { builtin, max_n, input } => scan(ctx, builtin, max_n, input.as_deref()),
        Command::Report { source } => report(ctx, &source),
        Command::Census { kind, n } => census_cmd(ctx, kind, n),
    }
}

#[derive(Serialize)]
struct ComplexityOut<'a> {
    graph6: Option<String>,
    mode: &'static str,
    c: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_map: Option<&'a [(usize, usize)]>,
    report: &'a ComplexityReport,
}

fn complexity_of_graphs(ctx: &mut Ctx<'_>, src: &GraphInput, matching: bool, method: Method) -> Outcome {
    let graphs = ctx.graphs(src)?;
    let several = graphs.len() > 1;
    for g in &graphs {
        let code = encode_graph6(g).ok();
        let id = code.as_deref().unwrap_or("-");
        let (report, map) = if matching {
            if g.edge_count() == 0 {
                return Err(Error::Edgeless.into());
            }
            let (l, map) = crate::enumerate::maximal_matchings_with(g, &ctx.limits)?;
            (clutter_complexity_with(&l, method)?, Some(map))
        } else {
            let l = crate::enumerate::maximal_independent_sets_with(g, &ctx.limits)?;
            (clutter_complexity_with(&l, method)?, None)
        };
        let mode = if matching { "matching" } else { "independent" };
        let show = |s: VertexSet| match &map {
            Some(m) => edge_set(m, s),
            None => s.to_string(),
        };
        match ctx.format {
            Format::Json => ctx.json(&ComplexityOut {
                graph6: code.clone(),
                mode,
                c: report.c,
                edge_map: map.as_ref().map(|m| m.edges()),
                report: &report,
            })?,
            Format::Tsv => {
                let w = &report.per_edge[report.argmax_edge];
                ctx.line(&format!(
                    "{id}\t{mode}\t{}\t{}\t{}\t{}",
                    report.c,
                    w.edge_index,
                    show(w.edge),
                    show(w.min_set)
                ))?
            }
            Format::Human => {
                let prefix = if several { format!("{id}  ") } else { String::new() };
                ctx.line(&format!("{prefix}{}", human_complexity(&report, &show)))?
            }
        }
    }
    Ok(0)
}

fn human_complexity(report: &ComplexityReport, show: &dyn Fn(VertexSet) -> String) -> String {
    let w = &report.per_edge[report.argmax_edge];
    let exact = if w.exact { "" } else { " (greedy upper bound)" };
    format!(
        "c = {}{exact}  over {} edges; argmax edge #{} {} recognized by {}",
        report.c,
        report.edges,
        w.edge_index,
        show(w.edge),
        show(w.min_set)
    )
}

fn edge_set(map: &EdgeIndexMap, s: VertexSet) -> String {
    let parts: Vec<String> = map.edges_of(s).iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", parts.join(","))
}

fn complexity_of_clutter(ctx: &mut Ctx<'_>, path: &Path, method: Method) -> Outcome {
    let l = Clutter::parse_text(&ctx.read_path(path)?)?;
    ctx.limits.check_vertices(l.ground_size())?;
    let report = clutter_complexity_with(&l, method)?;
    match ctx.format {
        Format::Json => {
            ctx.json(&ComplexityOut { graph6: None, mode: "clutter", c: report.c, edge_map: None, report: &report })?
        }
        Format::Tsv => {
            let w = &report.per_edge[report.argmax_edge];
            ctx.line(&format!("-\tclutter\t{}\t{}\t{}\t{}", report.c, w.edge_index, w.edge, w.min_set))?
        }
        Format::Human => ctx.line(&human_complexity(&report, &|s| s.to_string()))?,
    }
    Ok(0)
}

fn label_trees(ctx: &mut Ctx<'_>, src: &GraphInput) -> Outcome {
    for t in ctx.graphs(src)? {
        let lab = label_tree(&t)?;
        let code = encode_graph6(&t).ok();
        let id = code.as_deref().unwrap_or("-");
        match ctx.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Out<'a> {
                    graph6: Option<String>,
                    labeling: &'a crate::tree::TreeLabeling,
                }
                ctx.json(&Out { graph6: code, labeling: &lab })?
            }
            Format::Tsv => {
                for row in lab.rows() {
                    ctx.line(&format!(
                        "{id}\t{}\t{}\t{}\t{}",
                        row.vertex,
                        row.labels.join(","),
                        row.step,
                        row.pure_delta
                    ))?;
                }
            }
            Format::Human => {
                ctx.line(&format!(
                    "tree {id}: alpha {} beta {} gamma {} delta {}",
                    lab.alpha, lab.beta, lab.gamma, lab.delta
                ))?;
                for row in lab.rows() {
                    let pure = if row.pure_delta { "  pure delta" } else { "" };
                    ctx.line(&format!("  {:>3}  {:<24} step {}{pure}", row.vertex, row.labels.join(" "), row.step))?;
                }
            }
        }
    }
    Ok(0)
}

fn construct(ctx: &mut Ctx<'_>, src: &GraphInput, leaf: Option<usize>) -> Outcome {
    for t in ctx.graphs(src)? {
        let code = encode_graph6(&t).ok();
        let id = code.as_deref().unwrap_or("-");
        let leaves: Vec<usize> = match leaf {
            Some(v) => vec![v],
            None => (0..t.n()).filter(|&v| t.degree(v) == 1).collect(),
        };
        for v in leaves {
            let (u, trace) = construct_full_complexity_mis(&t, v)?;
            match ctx.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        graph6: Option<&'a str>,
                        leaf: usize,
                        u: VertexSet,
                        trace: &'a crate::tree::ConstructionTrace,
                    }
                    ctx.json(&Out { graph6: code.as_deref(), leaf: v, u, trace: &trace })?
                }
                Format::Tsv => ctx.line(&format!("{id}\t{v}\t{u}\t{}", trace.spec))?,
                Format::Human => ctx.line(&format!(
                    "tree {id} leaf {v}: U = {u}, specific neighbors {}, {} steps, c(U) = 1 verified",
                    trace.spec,
                    trace.steps.len()
                ))?,
            }
        }
    }
    Ok(0)
}

/// Generator output: graph6 when it fits, edge-list text (what `--edges`
/// reads) past 62 vertices.
fn emit_graph_text(ctx: &mut Ctx<'_>, g: &Graph, code: Option<&str>) -> io::Result<()> {
    match code {
        Some(c) => ctx.line(c),
        None => write!(ctx.out, "{}", g.to_edge_list()),
    }
}

/// Edge list for JSON records whose graph has no graph6 code.
fn edges_if_uncoded(g: &Graph, code: &Option<String>) -> Option<Vec<(usize, usize)>> {
    code.is_none().then(|| g.edges())
}

#[derive(Serialize)]
struct GadgetOut<'a> {
    graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    vertices: usize,
    multiplicity: usize,
    distinguished_mis: VertexSet,
    element_vertices: &'a [Vec<usize>],
    set_vertices: &'a [usize],
}

fn emit_gadget(ctx: &mut Ctx<'_>, red: &ReductionOutput) -> Outcome {
    let code = encode_graph6(&red.graph).ok();
    match ctx.format {
        Format::Json => ctx.json(&GadgetOut {
            edges: edges_if_uncoded(&red.graph, &code),
            graph6: code,
            vertices: red.graph.n(),
            multiplicity: red.multiplicity,
            distinguished_mis: red.distinguished_mis,
            element_vertices: &red.element_vertices,
            set_vertices: &red.set_vertices,
        })?,
        _ => emit_graph_text(ctx, &red.graph, code.as_deref())?,
    }
    Ok(0)
}

fn reduce(ctx: &mut Ctx<'_>, action: ReduceCommand) -> Outcome {
    match action {
        ReduceCommand::Problem1 { source } => {
            let inst = ctx.instance(&source)?;
            emit_gadget(ctx, &build_problem1_graph(&inst)?)
        }
        ReduceCommand::Problem2 { multiplicity, source } => {
            let inst = ctx.instance(&source)?;
            emit_gadget(ctx, &build_problem2_graph(&inst, multiplicity)?)
        }
        ReduceCommand::Random { max_n, max_m } => {
            if max_n == 0 || max_m == 0 || max_m > crate::bitset::MAX_VERTICES || max_n > crate::bitset::MAX_VERTICES {
                return Err(Fail::Input("--max-n and --max-m must be between 1 and 128".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let text = random_instance(&mut rng, max_n, max_m).to_text();
            write!(ctx.out, "{text}")?;
            Ok(0)
        }
        ReduceCommand::Verify { multiplicity, problem1_only, source } => {
            let inst = ctx.instance(&source)?;
            let p1 = verify_problem1(&inst)?;
            let p2 = if problem1_only { None } else { Some(verify_problem2(&inst, multiplicity, &ctx.limits)?) };
            let ok = p1.holds && p2.as_ref().is_none_or(|r| r.holds);
            match ctx.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        problem1: &'a crate::reductions::Problem1Report,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        problem2: Option<&'a crate::reductions::Problem2Report>,
                        holds: bool,
                    }
                    ctx.json(&Out { problem1: &p1, problem2: p2.as_ref(), holds: ok })?
                }
                Format::Tsv => {
                    ctx.line(&format!("problem1\t{}\t{}\t{}", p1.l_min, p1.min_recognizing_size, p1.holds))?;
                    if let Some(r) = &p2 {
                        ctx.line(&format!("problem2\t{}\t{}\t{}\t{}", r.l_min, r.c, r.expected, r.holds))?;
                    }
                }
                Format::Human => {
                    ctx.line(&format!(
                        "problem 1: l_min = {}, minimum recognizing set of the distinguished set = {}, all sizes agree: {}",
                        p1.l_min,
                        p1.min_recognizing_size,
                        p1.per_size.iter().all(|s| s.cover_exists == s.recognizing_exists)
                    ))?;
                    if let Some(r) = &p2 {
                        ctx.line(&format!(
                            "problem 2: {} vertices, multiplicity {}, c = {} (expected l_min/m = {}), holds: {}",
                            r.vertices, r.multiplicity, r.c, r.expected, r.holds
                        ))?;
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn family_cmd(ctx: &mut Ctx<'_>, family: FamilyCommand) -> Outcome {
    let (graph, spec): (Graph, FamilySpec) = match family {
        FamilyCommand::MainBound { n } => (main_bound_extremal(n)?, main_bound_spec(n)),
        FamilyCommand::AllRationals { m, n } => (all_rationals_graph(m, n)?, all_rationals_spec(m, n)),
        FamilyCommand::Addendum { k, clutter } => {
            let spec = addendum_spec(k);
            if clutter {
                let l = addendum_clutter(k)?;
                match ctx.format {
                    Format::Json => {
                        #[derive(Serialize)]
                        struct Out<'a> {
                            spec: &'a FamilySpec,
                            clutter: &'a [VertexSet],
                            ground: usize,
                        }
                        ctx.json(&Out { spec: &spec, clutter: l.edges(), ground: l.ground_size() })?
                    }
                    _ => write!(ctx.out, "{}", l.to_text())?,
                }
                return Ok(0);
            }
            (addendum_graph(k)?, spec)
        }
        FamilyCommand::Witness { target, max_vertices, trials } => {
            let opts = WitnessOptions { seed: ctx.seed, random_trials: trials, limits: ctx.limits };
            let Some(w) = rational_witness_search(target, max_vertices, &opts)? else {
                return Err(Fail::Input(format!("no witness for {target} within {max_vertices} vertices")));
            };
            let code = encode_graph6(&w.graph).ok();
            match ctx.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        graph6: Option<String>,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        edges: Option<Vec<(usize, usize)>>,
                        family: &'a str,
                        c: Rational,
                    }
                    let edges = edges_if_uncoded(&w.graph, &code);
                    ctx.json(&Out { graph6: code, edges, family: &w.family, c: w.c })?
                }
                _ => emit_graph_text(ctx, &w.graph, code.as_deref())?,
            }
            return Ok(0);
        }
    };
    let code = encode_graph6(&graph).ok();
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                graph6: Option<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                edges: Option<Vec<(usize, usize)>>,
                spec: &'a FamilySpec,
            }
            let edges = edges_if_uncoded(&graph, &code);
            ctx.json(&Out { graph6: code, edges, spec: &spec })?
        }
        _ => emit_graph_text(ctx, &graph, code.as_deref())?,
    }
    Ok(0)
}

fn human_bound(r: &BoundReport) -> String {
    let lhs = r.lhs.map_or("undefined".to_string(), |c| c.to_string());
    let mut s = format!("{:<19} {} = {lhs} {} {}", r.kind.name(), r.quantity, r.relation.symbol(), r.rhs);
    match (&r.reason, r.holds) {
        (Some(reason), _) => {
            let _ = write!(s, "  not applicable: {reason}");
            if let Some(sat) = r.satisfied {
                let _ = write!(s, " (comparison {})", if sat { "true" } else { "false" });
            }
        }
        (None, Some(h)) => {
            s.push_str(if h { "  holds" } else { "  VIOLATED" });
            if r.tight == Some(true) {
                s.push_str(" (tight)");
            }
        }
        (None, None) => s.push_str("  undefined"),
    }
    s
}

fn tsv_bound(code: &str, r: &BoundReport) -> String {
    let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
    format!(
        "{code}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.kind,
        r.applicable,
        r.lhs.map_or("-".to_string(), |c| c.to_string()),
        r.relation.symbol(),
        r.rhs,
        opt(r.holds),
        opt(r.tight)
    )
}

fn check_bounds(ctx: &mut Ctx<'_>, kinds: Vec<BoundKind>, clutter: Option<&Path>, src: &GraphInput) -> Outcome {
    let mut violated = false;
    if let Some(path) = clutter {
        let l = Clutter::parse_text(&ctx.read_path(path)?)?;
        ctx.limits.check_vertices(l.ground_size())?;
        for kind in kinds {
            let r = check_clutter_bound(&l, kind)?;
            violated |= r.violated();
            emit_bound(ctx, None, &r)?;
        }
    } else {
        for g in ctx.graphs(src)? {
            let code = encode_graph6(&g).ok();
            let cx = GraphContext::new(&g, &ctx.limits);
            for &kind in &kinds {
                let r = cx.check_bound(kind)?;
                violated |= r.violated();
                emit_bound(ctx, code.as_deref(), &r)?;
            }
        }
    }
    Ok(violated as i32)
}

fn emit_bound(ctx: &mut Ctx<'_>, code: Option<&str>, r: &BoundReport) -> io::Result<()> {
    let id = code.unwrap_or("-");
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                graph6: Option<&'a str>,
                #[serde(flatten)]
                report: &'a BoundReport,
            }
            ctx.json(&Out { graph6: code, report: r })
        }
        Format::Tsv => ctx.line(&tsv_bound(id, r)),
        Format::Human => ctx.line(&format!("{id}  {}", human_bound(r))),
    }
}

fn human_lemma(r: &LemmaReport) -> String {
    let mut s = r.kind.name().to_string();
    if let Some(reason) = &r.reason {
        let _ = write!(s, ": not applicable ({reason})");
        return s;
    }
    let premise = r.premise_holds.unwrap_or(false);
    let verdict = match r.holds {
        Some(true) => "holds",
        Some(false) => "VIOLATED",
        None => "nothing to check",
    };
    let _ = write!(s, ": premise {premise}, {verdict}");
    for c in &r.conclusions {
        let _ = write!(s, "\n    {} on {}: {}", c.name, c.checked, if c.holds { "ok" } else { "FAILED" });
        if let Some(w) = &c.witness {
            let _ = write!(s, " - {}", w.detail);
        }
    }
    s
}

fn check_lemmas(ctx: &mut Ctx<'_>, kinds: Vec<LemmaKind>, src: &GraphInput) -> Outcome {
    let mut violated = false;
    for g in ctx.graphs(src)? {
        let code = encode_graph6(&g).ok();
        let id = code.as_deref().unwrap_or("-");
        let cx = GraphContext::new(&g, &ctx.limits);
        for &kind in &kinds {
            let r = cx.check_lemma(kind)?;
            violated |= r.violated();
            match ctx.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a> {
                        graph6: Option<&'a str>,
                        #[serde(flatten)]
                        report: &'a LemmaReport,
                    }
                    ctx.json(&Out { graph6: code.as_deref(), report: &r })?
                }
                Format::Tsv => {
                    let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
                    ctx.line(&format!("{id}\t{}\t{}\t{}\t{}", kind, r.applicable, opt(r.premise_holds), opt(r.holds)))?
                }
                Format::Human => ctx.line(&format!("{id}  {}", human_lemma(&r)))?,
            }
        }
    }
    Ok(violated as i32)
}

fn scan(ctx: &mut Ctx<'_>, builtin: bool, max_n: usize, input: Option<&Path>) -> Outcome {
    let report = if builtin {
        conjecture_scan_builtin(max_n, &ctx.limits)?
    } else {
        match input {
            Some(path) if path.as_os_str() != "-" => {
                let file = fs::File::open(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
                conjecture_scan_graph6(io::BufReader::new(file), &ctx.limits)?
            }
            _ => conjecture_scan_graph6(&mut *ctx.stdin, &ctx.limits)?,
        }
    };
    emit_scan(ctx, &report)?;
    Ok(report.exit_code())
}

fn emit_scan(ctx: &mut Ctx<'_>, r: &ScanReport) -> io::Result<()> {
    match ctx.format {
        Format::Json => ctx.json(r),
        Format::Tsv => {
            for t in &r.tallies {
                ctx.line(&format!("tally\t{}\t{}\t{}\t{}", t.n, t.degree, t.graphs, t.below_one))?;
            }
            for e in &r.exceptions {
                ctx.line(&format!("exception\t{}\t{}\t{}\t{}", e.class, e.c, e.count, e.graph6))?;
            }
            for e in &r.counterexamples {
                ctx.line(&format!("counterexample\t{}\t{}\t{}\t{}", e.graph6, e.n, e.degree, e.c))?;
            }
            for e in &r.parse_errors {
                ctx.line(&format!("parse_error\t{}\t{}", e.line, e.message))?;
            }
            Ok(())
        }
        Format::Human => {
            ctx.line(&format!(
                "{} graphs read, {} connected regular checked ({} disconnected, {} irregular, {} edgeless skipped)",
                r.graphs, r.checked, r.skipped_disconnected, r.skipped_irregular, r.skipped_edgeless
            ))?;
            for t in &r.tallies {
                ctx.line(&format!(
                    "  n = {:>2}, {}-regular: {} graphs, {} below 1",
                    t.n, t.degree, t.graphs, t.below_one
                ))?;
            }
            for e in &r.exceptions {
                ctx.line(&format!("  exception {} (c = {}), seen {} times", e.class, e.c, e.count))?;
            }
            for e in &r.counterexamples {
                ctx.line(&format!("  COUNTEREXAMPLE {} n = {} {}-regular c = {}", e.graph6, e.n, e.degree, e.c))?;
            }
            for e in &r.parse_errors {
                ctx.line(&format!("  line {}: {}", e.line, e.message))?;
            }
            ctx.line(if r.counterexamples.is_empty() { "no counterexamples" } else { "counterexamples found" })
        }
    }
}

fn report(ctx: &mut Ctx<'_>, src: &GraphInput) -> Outcome {
    let mut violated = false;
    for g in ctx.graphs(src)? {
        let r = full_report(&g, &ctx.limits)?;
        violated |= r.violated();
        match ctx.format {
            Format::Human => {
                let s = &r.stats;
                ctx.line(&format!(
                    "graph {}: n = {}, m = {}, degrees {}..{}, connected {}, bipartite {}",
                    r.graph6.as_deref().unwrap_or("-"),
                    s.n,
                    s.m,
                    s.min_degree,
                    s.max_degree,
                    s.is_connected,
                    s.is_bipartite
                ))?;
                ctx.line(&format!("  independent: {}", human_complexity(&r.independent, &|x| x.to_string())))?;
                if let Some(m) = &r.matching {
                    ctx.line(&format!(
                        "  matching:    {}",
                        human_complexity(&m.report, &|x| edge_set(&m.edge_map, x))
                    ))?;
                }
                for b in &r.bounds {
                    ctx.line(&format!("  {}", human_bound(b)))?;
                }
                for l in &r.lemmas {
                    ctx.line(&format!("  {}", human_lemma(l)))?;
                }
            }
            _ => ctx.json(&r)?,
        }
    }
    Ok(violated as i32)
}

fn census_cmd(ctx: &mut Ctx<'_>, kind: CensusKind, n: usize) -> Outcome {
    let graphs = match kind {
        CensusKind::All => census::all_graphs(n)?,
        CensusKind::Connected => census::connected_graphs(n)?,
        CensusKind::Regular => census::connected_regular_graphs(n)?,
        CensusKind::Trees => census::trees(n)?,
    };
    for g in graphs {
        let code = encode_graph6(&g)?;
        ctx.line(&code)?;
    }
    Ok(0)
}
