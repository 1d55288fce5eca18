mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qbgc_core::affine::InversionTable;
use qbgc_core::cartan::{CartanDatum, CartanType, ParabolicSubset, Weight, WeylElement, WeylGroup};
use qbgc_core::charpoly::GradedCharacter;
use qbgc_core::qbg::{EdgeKind, QuantumBruhatGraph};
use qbgc_core::qbpaths::AlcovePaths;
use qbgc_core::qls::QlsContext;
use qbgc_core::{Error, Limits};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "qbgc", version, about = "Quantum Bruhat graphs, quantum alcove paths and QLS paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest alcove path length ℓ(t(w₀λ)) that will be enumerated.
    #[arg(long, global = true, env = "QBGC_MAX_L", default_value_t = 64)]
    max_l: usize,

    /// Largest Weyl group order that will be enumerated.
    #[arg(long, global = true, env = "QBGC_MAX_W", default_value_t = 1152)]
    max_w: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data: Cartan matrix, positive roots, |W|.
    RootSystem(TypeArgs),
    /// The quantum Bruhat graph, or a parabolic one.
    Graph {
        #[command(flatten)]
        ty: TypeArgs,
        /// Parabolic subset S as 1-based indices, e.g. `1,3`; empty for the full graph.
        #[arg(long)]
        parabolic: Option<String>,
    },
    /// The inversion table of t(w₀λ) in its sorted order.
    Table(JobArgs),
    /// List quantum alcove paths or QLS paths.
    Enum {
        kind: EnumKind,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Compute a graded character.
    Char {
        kind: CharKind,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Run a verification suite; exits with status 1 on the first failure.
    Verify {
        suite: Suite,
        #[command(flatten)]
        job: JobArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Qb,
    Qls,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CharKind {
    /// C_w = Σ q^deg e^wt over QB(w; t(w₀λ)).
    Qb,
    /// gch^w QLS(λ).
    QlsUp,
    /// gch_w QLS(λ).
    QlsDown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem,
    Bijection,
    Shellability,
    Involution,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type")]
    cartan_type: String,
}

#[derive(Args)]
pub struct JobArgs {
    /// Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type")]
    cartan_type: String,

    /// Dominant weight in fundamental coordinates, e.g. `1,0,2`.
    #[arg(long)]
    lambda: Option<String>,

    /// Weyl group element: `e`, `w0` or a word such as `s1 s2`.
    #[arg(long, default_value = "e")]
    w: String,

    /// Run for every element of W.
    #[arg(long)]
    all_w: bool,
}

enum Failure {
    Core(Error),
    Check(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// A built root system together with the configured limits.
pub struct Setup {
    pub group: Arc<WeylGroup>,
    pub limits: Limits,
}

impl Setup {
    fn new(cartan_type: &str, cli: &Cli) -> Result<Self, Error> {
        let ct: CartanType = cartan_type.parse()?;
        let limits = Limits { max_weyl_order: cli.max_w, max_alcove_length: cli.max_l, ..Limits::default() };
        let datum = CartanDatum::build(ct, &limits)?;
        let group = Arc::new(WeylGroup::enumerate(datum, &limits)?);
        Ok(Setup { group, limits })
    }

    pub fn lambda(&self, job: &JobArgs) -> Result<Weight, Error> {
        let s = job.lambda.as_deref().ok_or_else(|| Error::Argument("--lambda is required".into()))?;
        let lambda: Weight = s.parse()?;
        if lambda.rank() != self.group.rank() {
            return Err(Error::Argument(format!(
                "λ = {lambda} has {} coordinates but the rank is {}",
                lambda.rank(),
                self.group.rank()
            )));
        }
        if !lambda.is_dominant() {
            return Err(Error::Argument(format!("λ = {lambda} is not dominant")));
        }
        Ok(lambda)
    }

    pub fn elements(&self, job: &JobArgs) -> Result<Vec<WeylElement>, Error> {
        if job.all_w {
            Ok(self.group.elements().collect())
        } else {
            Ok(vec![self.group.parse(&job.w)?])
        }
    }

    /// Builds the inversion table and rejects it if it exceeds the length cap.
    pub fn table(&self, lambda: &Weight) -> Result<InversionTable, Error> {
        let table = InversionTable::new(&self.group, lambda)?;
        if table.len() > self.limits.max_alcove_length {
            return Err(Error::Resource(format!(
                "ℓ(t(w₀λ)) = {} exceeds the cap {} (raise --max-l or QBGC_MAX_L)",
                table.len(),
                self.limits.max_alcove_length
            )));
        }
        Ok(table)
    }
}

fn parse_subset(s: &str, rank: usize) -> Result<ParabolicSubset, Error> {
    let mut members = Vec::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = t.parse().map_err(|_| Error::Argument(format!("malformed subset `{s}`")))?;
        if i == 0 || i > rank {
            return Err(Error::Argument(format!("index {i} out of range for rank {rank}")));
        }
        members.push(i - 1);
    }
    Ok(ParabolicSubset::new(members))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn reject_dot(format: Format) -> Result<(), Error> {
    if format == Format::Dot {
        return Err(Error::Argument("DOT output is only available for `graph`".into()));
    }
    Ok(())
}

fn root_system(cli: &Cli, ty: &TypeArgs) -> Result<String, Failure> {
    reject_dot(cli.format)?;
    let setup = Setup::new(&ty.cartan_type, cli)?;
    let g = &setup.group;
    let summary = g.datum().summary(g.order());
    Ok(match cli.format {
        Format::Json => pretty(&summary),
        _ => {
            let d = g.datum();
            let mut s = format!("type {}\n", d.cartan_type());
            s += "cartan matrix\n";
            for row in d.cartan_matrix() {
                let r: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                s += &format!("{}\n", r.join(""));
            }
            s += &format!("|W| = {}\n", g.order());
            s += &format!("w0 = {}\n", g.format(g.longest()));
            s += &format!("positive roots ({})\n", d.num_positive());
            for r in d.positive_roots() {
                s += &format!("  {r}\n");
            }
            s
        }
    })
}

fn graph(cli: &Cli, ty: &TypeArgs, parabolic: Option<&str>) -> Result<String, Failure> {
    let setup = Setup::new(&ty.cartan_type, cli)?;
    let g = &setup.group;
    let subset = match parabolic {
        Some(s) => parse_subset(s, g.rank())?,
        None => ParabolicSubset::empty(),
    };
    let graph = QuantumBruhatGraph::parabolic(g.clone(), subset);
    Ok(match cli.format {
        Format::Dot => graph.to_dot(),
        Format::Json => pretty(&graph.to_json()),
        Format::Text => {
            let mut s = String::new();
            for e in graph.edges() {
                let kind = match e.kind {
                    EdgeKind::Bruhat => "bruhat",
                    EdgeKind::Quantum => "quantum",
                };
                s += &format!(
                    "{} -> {}  {}  {}\n",
                    g.format(e.source),
                    g.format(e.target),
                    g.datum().root(e.label),
                    kind
                );
            }
            s += &format!(
                "vertices: {}  bruhat: {}  quantum: {}\n",
                graph.num_vertices(),
                graph.count_edges(EdgeKind::Bruhat),
                graph.count_edges(EdgeKind::Quantum)
            );
            s
        }
    })
}

fn table(cli: &Cli, job: &JobArgs) -> Result<String, Failure> {
    reject_dot(cli.format)?;
    let setup = Setup::new(&job.cartan_type, cli)?;
    let lambda = setup.lambda(job)?;
    let table = setup.table(&lambda)?;
    let g = &setup.group;
    Ok(match cli.format {
        Format::Json => pretty(&table.to_json(g)),
        _ => {
            let mut s = String::new();
            for (k, e) in table.entries().iter().enumerate() {
                s += &format!(
                    "{:>3}  {}  a={}  d={}  label={}\n",
                    k + 1,
                    e.root,
                    e.a,
                    e.d,
                    g.datum().root(e.finite_label)
                );
            }
            s += &format!("length: {}\n", table.len());
            s
        }
    })
}

fn enumerate(cli: &Cli, kind: EnumKind, job: &JobArgs) -> Result<String, Failure> {
    reject_dot(cli.format)?;
    let setup = Setup::new(&job.cartan_type, cli)?;
    let g = &setup.group;
    let lambda = setup.lambda(job)?;
    let table = setup.table(&lambda)?;
    let ws = setup.elements(job)?;
    let mut text = String::new();
    let mut records = Vec::new();
    match kind {
        EnumKind::Qb => {
            let graph = QuantumBruhatGraph::new(g.clone());
            let paths = AlcovePaths::new(&graph, &table)?;
            for &w in &ws {
                let qb = paths.enumerate_qb(w, &setup.limits)?;
                let mut list = Vec::new();
                for p in &qb {
                    let steps: String = p
                        .steps()
                        .iter()
                        .map(|s| match s.kind {
                            Some(EdgeKind::Quantum) => 'Q',
                            _ => 'B',
                        })
                        .collect();
                    let j: Vec<String> = p.j().iter().map(|j| (j + 1).to_string()).collect();
                    let flag = if steps.contains('Q') { "  quantum" } else { "" };
                    text += &format!(
                        "w={}  J={{{}}}  steps={}  end={}  deg={}{flag}\n",
                        g.format(w),
                        j.join(","),
                        if steps.is_empty() { "-" } else { &steps },
                        p.end_weight(),
                        p.deg()
                    );
                    list.push(p.to_json(g));
                }
                text += &format!("count: {}\n", qb.len());
                records.push(json!({ "w": g.format(w), "count": qb.len(), "paths": list }));
            }
        }
        EnumKind::Qls => {
            let qls = QlsContext::new(g.clone(), &lambda)?;
            let etas = qls.enumerate();
            for &w in &ws {
                let mut list = Vec::new();
                for eta in &etas {
                    let d = qls.deg_stats(eta, w)?;
                    text += &format!("{}  wt={}  w={}  {d}\n", eta.format(g), qls.wt(eta)?, g.format(w));
                    list.push(qls.to_json(eta, Some(w))?);
                }
                text += &format!("count: {}\n", etas.len());
                records.push(json!({ "w": g.format(w), "count": etas.len(), "paths": list }));
            }
        }
    }
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "type": g.datum().cartan_type().to_string(),
            "lambda": lambda,
            "results": records,
        })),
        _ => text,
    })
}

fn character(cli: &Cli, kind: CharKind, job: &JobArgs) -> Result<String, Failure> {
    reject_dot(cli.format)?;
    let setup = Setup::new(&job.cartan_type, cli)?;
    let g = &setup.group;
    let lambda = setup.lambda(job)?;
    let table = setup.table(&lambda)?;
    let ws = setup.elements(job)?;
    let graph = QuantumBruhatGraph::new(g.clone());
    let chars: Vec<(WeylElement, GradedCharacter)> = match kind {
        CharKind::Qb => {
            let paths = AlcovePaths::new(&graph, &table)?;
            ws.iter().map(|&w| Ok((w, paths.graded_char_c(w, &setup.limits)?))).collect::<Result<_, Error>>()?
        }
        CharKind::QlsUp | CharKind::QlsDown => {
            let qls = QlsContext::new(g.clone(), &lambda)?;
            let etas = qls.enumerate();
            ws.iter()
                .map(|&w| {
                    let c = if kind == CharKind::QlsUp { qls.gch_up(&etas, w)? } else { qls.gch_down(&etas, w)? };
                    Ok((w, c))
                })
                .collect::<Result<_, Error>>()?
        }
    };
    Ok(match cli.format {
        Format::Json => {
            let records: Vec<Value> =
                chars.iter().map(|(w, c)| json!({ "w": g.format(*w), "character": c.to_json() })).collect();
            let mut v = json!({
                "type": g.datum().cartan_type().to_string(),
                "lambda": lambda,
                "kind": format!("{kind:?}").to_lowercase(),
                "results": records,
            });
            if kind == CharKind::Qb {
                v["comment"] = json!("gch W_{wλ}");
            }
            pretty(&v)
        }
        _ if job.all_w => chars.iter().map(|(w, c)| format!("{}: {c}\n", g.format(*w))).collect(),
        _ => format!("{}\n", chars[0].1),
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::RootSystem(ty) => root_system(cli, ty),
        Command::Graph { ty, parabolic } => graph(cli, ty, parabolic.as_deref()),
        Command::Table(job) => table(cli, job),
        Command::Enum { kind, job } => enumerate(cli, *kind, job),
        Command::Char { kind, job } => character(cli, *kind, job),
        Command::Verify { suite, job } => {
            reject_dot(cli.format)?;
            let setup = Setup::new(&job.cartan_type, cli)?;
            let report = verify::run(&setup, *suite, job)?;
            let out = match cli.format {
                Format::Json => pretty(&report.to_json()),
                _ => report.to_text(),
            };
            match report.first_failure() {
                None => Ok(out),
                Some(f) => {
                    emit(cli, &out)?;
                    Err(Failure::Check(f))
                }
            }
        }
    }
}

fn emit(cli: &Cli, out: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, out),
        None => io::stdout().lock().write_all(out.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli).and_then(|out| emit(&cli, &out).map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Config(_) | Error::Argument(_) => 2,
                Error::Resource(_) => 3,
                Error::Invariant(_) => 1,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
