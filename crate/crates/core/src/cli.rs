//! The `kdeg` command line.
//!
//! Every subcommand reads its inputs from files (or `--k` / `--t` constants),
//! runs one library call and prints either a short text report or, with
//! `--json`, a single JSON document. Exit status: 0 on success whatever the
//! verdict, 1 on usage and I/O errors (including oracle size caps), 2 when an
//! input file is malformed or violates its invariants.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::assignment::{Assignment, Role};
use crate::bounds::{self, BoundsReport, KappaSpec};
use crate::degeneracy::{self, DegeneracyVerdict, OrderingCheck};
use crate::error::{Error, Inapplicable};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::{format_ids, parse_assignment, parse_graph, parse_id_list, parse_vertex_set};
use crate::monopoly::{self, ActivationSchedule, GreedyRule};
use crate::oracle::{self, SearchOptions};

#[derive(Debug, Parser)]
#[command(
    name = "kdeg",
    version,
    about = "Generalized degeneracy and dynamic monopolies",
    after_help = "Exact searches (`dynamo min`, `maxsub exact`) are limited to graphs with at most 20 vertices."
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the graph is κ-degenerate.
    Check(KappaArgs),
    /// Verify an elimination ordering (of all vertices or of a subset).
    Order {
        #[command(flatten)]
        kappa: KappaArgs,
        /// File of whitespace-separated vertex ids, first to last.
        #[arg(long)]
        ordering: PathBuf,
    },
    /// Smallest k for which the graph is k-degenerate.
    Degeneracy {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Dynamic monopolies.
    #[command(subcommand)]
    Dynamo(DynamoCommand),
    /// Maximal resistant subgraph, or check a given set.
    Resistant {
        #[command(flatten)]
        tau: TauArgs,
        /// Restrict the search to these vertices.
        #[arg(long, conflicts_with = "check")]
        within: Option<PathBuf>,
        /// Check this set instead of searching.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Size bounds for κ-degenerate induced subgraphs.
    Bounds(KappaArgs),
    /// Large κ-degenerate induced subgraphs.
    #[command(subcommand)]
    Maxsub(MaxsubCommand),
}

#[derive(Debug, Subcommand)]
enum DynamoCommand {
    /// Build a dynamo greedily.
    Find {
        #[command(flatten)]
        tau: TauArgs,
        #[arg(long, value_enum, default_value_t = RuleArg::MaxThreshold)]
        rule: RuleArg,
    },
    /// Run the cascade from a seed set.
    Verify {
        #[command(flatten)]
        tau: TauArgs,
        #[arg(long)]
        set: PathBuf,
    },
    /// Exact minimum dynamo (n <= 20).
    Min {
        #[command(flatten)]
        tau: TauArgs,
    },
}

#[derive(Debug, Subcommand)]
enum MaxsubCommand {
    /// Complement of a greedy dynamo of the dual thresholds.
    Greedy {
        #[command(flatten)]
        kappa: KappaArgs,
        #[arg(long, value_enum, default_value_t = RuleArg::MaxThreshold)]
        rule: RuleArg,
    },
    /// Exhaustive search (n <= 20).
    Exact {
        #[command(flatten)]
        kappa: KappaArgs,
        /// Evaluate every subset, without the edge-count filter.
        #[arg(long)]
        no_prune: bool,
    },
}

#[derive(Debug, Args)]
struct KappaArgs {
    #[arg(long)]
    graph: PathBuf,
    /// κ assignment file.
    #[arg(long, required_unless_present = "k", conflicts_with = "k")]
    kappa: Option<PathBuf>,
    /// Constant κ.
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
}

#[derive(Debug, Args)]
struct TauArgs {
    #[arg(long)]
    graph: PathBuf,
    /// τ assignment file.
    #[arg(long, required_unless_present = "t", conflicts_with = "t")]
    tau: Option<PathBuf>,
    /// Constant τ.
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    MaxThreshold,
    MaxDegree,
}

impl From<RuleArg> for GreedyRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::MaxThreshold => GreedyRule::MaxThreshold,
            RuleArg::MaxDegree => GreedyRule::MaxDegree,
        }
    }
}

/// Machine-readable report; field names are part of the published schema.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: Option<&'static str>,
    pub size: Option<usize>,
    pub ordering: Option<Vec<Vertex>>,
    pub certificate: Option<Vec<Vertex>>,
    pub schedule: Option<Vec<Vec<Vertex>>>,
    pub bounds: Option<BoundsJson>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub alon: String,
    pub thm4: IntOrText,
    pub thm6: IntOrText,
    pub thm8: IntOrText,
    pub regular: Option<[String; 2]>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum IntOrText {
    Int(usize),
    Text(&'static str),
}

enum CliError {
    Io(PathBuf, std::io::Error),
    Input(PathBuf, Error),
    Semantic(Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(..) => 1,
            CliError::Semantic(Error::OracleLimit { .. }) => 1,
            CliError::Input(..) | CliError::Semantic(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(path, e) => format!("{}: {e}", path.display()),
            CliError::Input(path, e) => format!("{}: {e}", path.display()),
            CliError::Semantic(e) => e.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Semantic(e)
    }
}

/// Collects report text and JSON side by side.
struct Output {
    report: Report,
    text: String,
}

impl Output {
    fn new(command: &str) -> Self {
        Output {
            report: Report {
                command: command.to_string(),
                ..Report::default()
            },
            text: String::new(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

/// Reads the inputs of one invocation and remembers their digests.
#[derive(Default)]
struct Inputs {
    digests: Vec<String>,
}

impl Inputs {
    fn read(&mut self, what: &str, path: &Path) -> Result<String, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        let digest = Sha256::digest(text.as_bytes());
        self.digests.push(format!("{what} sha256:{}", hex::encode(digest)));
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> Result<Graph, CliError> {
        let text = self.read("graph", path)?;
        parse_graph(&text).map_err(|e| CliError::Input(path.to_path_buf(), e))
    }

    fn kappa(&mut self, graph: &Graph, args: &KappaArgs) -> Result<Assignment, CliError> {
        match (&args.kappa, args.k) {
            (Some(path), _) => {
                let text = self.read("kappa", path)?;
                parse_assignment(&text, graph, Role::Kappa).map_err(|e| CliError::Input(path.clone(), e))
            }
            (None, Some(k)) => Ok(Assignment::constant(graph, Role::Kappa, k).map_err(Error::from)?),
            (None, None) => unreachable!("clap requires --kappa or --k"),
        }
    }

    fn tau(&mut self, graph: &Graph, args: &TauArgs) -> Result<Assignment, CliError> {
        match (&args.tau, args.t) {
            (Some(path), _) => {
                let text = self.read("tau", path)?;
                parse_assignment(&text, graph, Role::Tau).map_err(|e| CliError::Input(path.clone(), e))
            }
            (None, Some(t)) => Ok(Assignment::constant(graph, Role::Tau, t).map_err(Error::from)?),
            (None, None) => unreachable!("clap requires --tau or --t"),
        }
    }

    fn set(&mut self, graph: &Graph, path: &Path) -> Result<VertexSet, CliError> {
        let text = self.read("set", path)?;
        parse_vertex_set(&text, graph).map_err(|e| CliError::Input(path.to_path_buf(), e))
    }

    fn ids(&mut self, graph: &Graph, path: &Path) -> Result<Vec<Vertex>, CliError> {
        let text = self.read("ordering", path)?;
        parse_id_list(&text, graph.n()).map_err(|e| CliError::Input(path.to_path_buf(), e))
    }
}

/// Runs `kdeg` with `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let mut inputs = Inputs::default();
    match execute(&cli.command, &mut inputs) {
        Ok(mut output) => {
            let written = if cli.json {
                output.report.notes.extend(inputs.digests);
                let json = serde_json::to_string(&output.report).expect("report serializes");
                writeln!(out, "{json}")
            } else {
                write!(out, "{}", output.text)
            };
            match written {
                Ok(()) => 0,
                Err(_) => 1,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn execute(command: &Command, inputs: &mut Inputs) -> Result<Output, CliError> {
    match command {
        Command::Check(args) => check(args, inputs),
        Command::Order { kappa, ordering } => order(kappa, ordering, inputs),
        Command::Degeneracy { graph } => classic(graph, inputs),
        Command::Dynamo(DynamoCommand::Find { tau, rule }) => dynamo_find(tau, (*rule).into(), inputs),
        Command::Dynamo(DynamoCommand::Verify { tau, set }) => dynamo_verify(tau, set, inputs),
        Command::Dynamo(DynamoCommand::Min { tau }) => dynamo_min(tau, inputs),
        Command::Resistant { tau, within, check } => resistant(tau, within.as_deref(), check.as_deref(), inputs),
        Command::Bounds(args) => bounds_cmd(args, inputs),
        Command::Maxsub(MaxsubCommand::Greedy { kappa, rule }) => maxsub_greedy(kappa, (*rule).into(), inputs),
        Command::Maxsub(MaxsubCommand::Exact { kappa, no_prune }) => maxsub_exact(kappa, !*no_prune, inputs),
    }
}

fn check(args: &KappaArgs, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let kappa = inputs.kappa(&graph, args)?;
    let mut out = Output::new("check");
    match degeneracy::is_kappa_degenerate(&graph, &kappa)? {
        DegeneracyVerdict::Yes(ordering) => {
            out.line("YES");
            out.line(format!("ordering: {}", format_ids(ordering.as_slice().iter().copied())));
            out.report.verdict = Some("yes");
            out.report.ordering = Some(ordering.into_inner());
        }
        DegeneracyVerdict::No(certificate) => {
            out.line("NO");
            out.line(format!("certificate: {}", format_ids(certificate.iter())));
            out.report.verdict = Some("no");
            out.report.certificate = Some(certificate.to_vec());
        }
    }
    Ok(out)
}

fn order(args: &KappaArgs, path: &Path, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let kappa = inputs.kappa(&graph, args)?;
    let ids = inputs.ids(&graph, path)?;
    let members = VertexSet::from_ids(graph.n(), ids.iter().copied())?;
    if members.len() != ids.len() {
        return Err(Error::NotAPermutation.into());
    }
    let sub = graph.induced_subgraph(&members)?;
    let local_kappa = kappa.restrict(&sub).map_err(Error::from)?;
    let local: Vec<Vertex> = ids.iter().map(|&v| sub.child_of(v).expect("member")).collect();
    let check = degeneracy::verify_ordering(&sub.graph, &local_kappa, &local)?;

    let mut out = Output::new("order");
    out.report.ordering = Some(ids.clone());
    match check {
        OrderingCheck::Valid => {
            out.line("VALID");
            out.report.verdict = Some("yes");
        }
        OrderingCheck::Violation {
            position,
            vertex,
            prefix_degree,
            bound,
        } => {
            let vertex = sub.parent_of(vertex);
            let note = format!(
                "position {}: vertex {vertex} has {prefix_degree} earlier neighbors, bound {bound}",
                position + 1
            );
            out.line("INVALID");
            out.line(&note);
            out.report.verdict = Some("no");
            out.report.notes.push(note);
        }
    }
    Ok(out)
}

fn classic(path: &Path, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(path)?;
    let k = degeneracy::classic_degeneracy(&graph)?;
    let mut out = Output::new("degeneracy");
    out.line(format!("degeneracy: {k}"));
    out.report.size = Some(k);
    Ok(out)
}

fn schedule_lines(out: &mut Output, schedule: &ActivationSchedule) {
    for (i, round) in schedule.rounds().iter().enumerate() {
        out.line(format!("round {i}: {}", format_ids(round.iter().copied())));
    }
    out.report.schedule = Some(schedule.rounds().to_vec());
}

fn inapplicable_text(e: &Inapplicable, label: &str) -> String {
    format!("{label} ({e})")
}

fn dynamo_verify(args: &TauArgs, set: &Path, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let tau = inputs.tau(&graph, args)?;
    let seed = inputs.set(&graph, set)?;
    let result = monopoly::is_dynamo(&graph, &tau, &seed)?;
    let mut out = Output::new("dynamo verify");
    out.line(if result.is_dynamo { "DYNAMO" } else { "NOT A DYNAMO" });
    out.line(format!("size: {}", result.size));
    schedule_lines(&mut out, &result.schedule);
    out.report.verdict = Some(if result.is_dynamo { "yes" } else { "no" });
    out.report.size = Some(result.size);
    if let Some(cert) = &result.certificate {
        out.line(format!("certificate: {}", format_ids(cert.iter())));
        out.report.certificate = Some(cert.to_vec());
    }
    Ok(out)
}

fn dynamo_find(args: &TauArgs, rule: GreedyRule, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let tau = inputs.tau(&graph, args)?;
    let found = monopoly::greedy_dynamo(&graph, &tau, rule)?;
    let mut out = Output::new("dynamo find");
    let bound = match &found.bound {
        Ok(b) => b.to_string(),
        Err(e) => inapplicable_text(e, "undefined"),
    };
    out.line("DYNAMO");
    out.line(format!("rule: {}", rule.name()));
    out.line(format!("size: {}", found.result.size));
    out.line(format!("seed: {}", format_ids(found.result.seed.iter())));
    out.line(format!("bound: {bound}"));
    schedule_lines(&mut out, &found.result.schedule);
    out.report.verdict = Some("yes");
    out.report.size = Some(found.result.size);
    out.report.notes.push(format!("rule: {}", rule.name()));
    out.report.notes.push(format!("size bound: {bound}"));
    if found.within_bound() == Some(false) {
        out.report.notes.push("greedy size exceeds the bound".to_string());
    }
    Ok(out)
}

fn dynamo_min(args: &TauArgs, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let tau = inputs.tau(&graph, args)?;
    let exact = oracle::exact_min_dynamo(&graph, &tau)?;
    let schedule = monopoly::simulate_activation(&graph, &tau, &exact.witness)?;
    let mut out = Output::new("dynamo min");
    out.line(format!("minimum size: {}", exact.optimum));
    out.line(format!("seed: {}", format_ids(exact.witness.iter())));
    out.line(format!("explored: {}", exact.explored));
    schedule_lines(&mut out, &schedule);
    out.report.verdict = Some("yes");
    out.report.size = Some(exact.optimum);
    out.report.notes.push(format!("explored: {}", exact.explored));
    Ok(out)
}

fn resistant(
    args: &TauArgs,
    within: Option<&Path>,
    check: Option<&Path>,
    inputs: &mut Inputs,
) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let tau = inputs.tau(&graph, args)?;
    let mut out = Output::new("resistant");
    if let Some(path) = check {
        let set = inputs.set(&graph, path)?;
        let ok = monopoly::check_resistant(&graph, &tau, &set)?;
        out.line(if ok { "RESISTANT" } else { "NOT RESISTANT" });
        out.report.verdict = Some(if ok { "yes" } else { "no" });
        out.report.certificate = Some(set.to_vec());
        return Ok(out);
    }
    let within = match within {
        Some(path) => inputs.set(&graph, path)?,
        None => VertexSet::full(graph.n()),
    };
    let found = monopoly::maximal_resistant(&graph, &tau, &within)?;
    out.line(format!("resistant: {}", format_ids(found.iter())));
    out.report.size = Some(found.len());
    out.report.certificate = Some(found.to_vec());
    Ok(out)
}

fn kappa_spec_report(graph: &Graph, args: &KappaArgs, inputs: &mut Inputs) -> Result<BoundsReport, CliError> {
    Ok(match args.k {
        Some(k) if args.kappa.is_none() && k >= 0 => bounds::bounds_report(graph, KappaSpec::Constant(k as u64))?,
        _ => {
            let kappa = inputs.kappa(graph, args)?;
            bounds::bounds_report(graph, KappaSpec::Assignment(&kappa))?
        }
    })
}

fn bounds_cmd(args: &KappaArgs, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let report = kappa_spec_report(&graph, args, inputs)?;
    let mut out = Output::new("bounds");
    let opt = |v: Option<i64>| v.map_or("n/a".to_string(), |x| x.to_string());
    out.line(format!("n: {}", report.n));
    out.line(format!("m: {}", report.m));
    out.line(format!("min degree: {}", opt(report.min_degree.map(|d| d as i64))));
    out.line(format!("sum kappa: {}", report.sum_kappa));
    out.line(format!("alpha: {}", opt(report.alpha)));
    out.line(format!("beta: {}", opt(report.beta)));

    let mut notes = Vec::new();
    let mut value = |name: &str, label: &'static str, r: &Result<usize, Inapplicable>| match r {
        Ok(v) => (v.to_string(), IntOrText::Int(*v)),
        Err(e) => {
            notes.push(format!("{name}: {e}"));
            (inapplicable_text(e, label), IntOrText::Text(label))
        }
    };
    let alon = report.alon.as_ref().map_or("n/a".to_string(), |a| a.to_string());
    let (thm4_text, thm4) = value("thm4", "undefined", &report.dynamo_bound);
    let (thm6_text, thm6) = value("thm6", "n/a", &report.lower);
    let (thm8_text, thm8) = value("thm8", "n/a", &report.upper);
    let regular = match &report.regular {
        Some(Ok((lo, hi))) => Some([lo.to_string(), hi.to_string()]),
        Some(Err(e)) => {
            notes.push(format!("regular: {e}"));
            None
        }
        None => None,
    };
    if report.alon.is_none() {
        notes.push("alon: constant k only".to_string());
    }
    out.line(format!("alon: {alon}"));
    out.line(format!("thm4: {thm4_text}"));
    out.line(format!("thm6: {thm6_text}"));
    out.line(format!("thm8: {thm8_text}"));
    let mut regular_text = String::new();
    match (&regular, &report.regular) {
        (Some([lo, hi]), _) => write!(regular_text, "{lo} {hi}").unwrap(),
        (None, Some(Err(e))) => regular_text = inapplicable_text(e, "n/a"),
        (None, _) => regular_text.push_str("n/a (graph is not regular)"),
    }
    out.line(format!("regular: {regular_text}"));
    out.report.bounds = Some(BoundsJson {
        alon,
        thm4,
        thm6,
        thm8,
        regular,
    });
    out.report.notes = notes;
    Ok(out)
}

fn maxsub_greedy(args: &KappaArgs, rule: GreedyRule, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let kappa = inputs.kappa(&graph, args)?;
    let found = bounds::find_kappa_subgraph(&graph, &kappa, rule)?;
    let lower = match &found.lower_bound {
        Ok(b) => b.to_string(),
        Err(e) => inapplicable_text(e, "n/a"),
    };
    let mut out = Output::new("maxsub greedy");
    out.line(format!("size: {}", found.set.len()));
    out.line(format!("set: {}", format_ids(found.set.iter())));
    out.line(format!(
        "ordering: {}",
        format_ids(found.ordering.as_slice().iter().copied())
    ));
    out.line(format!("rule: {}", rule.name()));
    out.line(format!("lower bound: {lower}"));
    out.line(format!("removed: {}", format_ids(found.dynamo.result.seed.iter())));
    out.report.verdict = Some("yes");
    out.report.size = Some(found.set.len());
    out.report.ordering = Some(found.ordering.into_inner());
    out.report.notes.push(format!("rule: {}", rule.name()));
    out.report.notes.push(format!("lower bound: {lower}"));
    Ok(out)
}

fn maxsub_exact(args: &KappaArgs, prune: bool, inputs: &mut Inputs) -> Result<Output, CliError> {
    let graph = inputs.graph(&args.graph)?;
    let kappa = inputs.kappa(&graph, args)?;
    let exact = oracle::exact_max_kappa_subgraph(&graph, &kappa, SearchOptions { prune })?;
    let sub = graph.induced_subgraph(&exact.witness)?;
    let local = kappa.restrict(&sub).map_err(Error::from)?;
    let ordering: Vec<Vertex> = match degeneracy::is_kappa_degenerate(&sub.graph, &local)? {
        DegeneracyVerdict::Yes(o) => o.as_slice().iter().map(|&c| sub.parent_of(c)).collect(),
        DegeneracyVerdict::No(_) => unreachable!("oracle witness is κ-degenerate"),
    };
    let mut out = Output::new("maxsub exact");
    out.line(format!("maximum: {}", exact.optimum));
    out.line(format!("witness: {}", format_ids(exact.witness.iter())));
    out.line(format!("ordering: {}", format_ids(ordering.iter().copied())));
    out.line(format!("explored: {}", exact.explored));
    out.report.verdict = Some("yes");
    out.report.size = Some(exact.optimum);
    out.report.ordering = Some(ordering);
    out.report.notes.push(format!("explored: {}", exact.explored));
    Ok(out)
}
