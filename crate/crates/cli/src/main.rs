//! `domval`: domination numbers, γ-set counts and domination values from the
//! command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use domval_core::oracle;
use domval_core::verify::{self, Outcome, Verdict};
use domval_core::{
    DominationReport, Engine, EngineRegistry, Error, Family, FamilyId, Graph, Layout, VertexSet,
};

use output::{Format, Response};

const CAP_VAR: &str = "DOMVAL_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "domval",
    version,
    about = "Exact domination counts for paths, cycles, ladders and prisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number γ.
    Gamma(Target),
    /// Number of minimum dominating sets τ.
    Tau(Target),
    /// Domination value of one vertex, or of every vertex.
    Dv {
        #[command(flatten)]
        target: Target,
        /// `x3` / `y7` on ladders and prisms, a plain integer otherwise.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// γ, τ and the full DV vector.
    Report {
        #[command(flatten)]
        target: Target,
        /// Also list every minimum dominating set (oracle only).
        #[arg(long)]
        list_sets: bool,
    },
    /// List every minimum dominating set with the exhaustive oracle.
    Enumerate(Target),
    /// Compare two engines over a range of orders.
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        /// Engine pair `A:B`.
        #[arg(long, default_value = "formula:oracle")]
        engines: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct Target {
    #[arg(long, value_parser = parse_family, required_unless_present = "input", conflicts_with = "input")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    n: Option<usize>,
    /// Edge-list file; the graph is solved with the oracle.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Dp,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Dp => "dp",
            Method::Oracle => "oracle",
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(Error::Overflow(_)) => 3,
            Failure::Domain(Error::BudgetExceeded { .. }) => 4,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => e.fmt(f),
            Failure::Usage(m) => f.write_str(m),
        }
    }
}

/// What a command runs on: a family instance or a graph read from a file.
struct Subject {
    family: Value,
    n: usize,
    layout: Layout,
    num_vertices: usize,
    id: Option<FamilyId>,
    input: Option<Graph>,
}

impl Subject {
    fn load(target: &Target) -> Result<Self, Failure> {
        if let Some(path) = &target.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let graph = Graph::parse_edge_list(&text)?;
            return Ok(Subject {
                family: Value::Null,
                n: graph.num_vertices(),
                layout: graph.layout(),
                num_vertices: graph.num_vertices(),
                id: None,
                input: Some(graph),
            });
        }
        let id = FamilyId::new(
            target.family.expect("clap enforces --family"),
            target.n.expect("clap enforces --n"),
        );
        if id.n < id.family.min_order() {
            return Err(Error::InvalidOrder {
                family: id.family,
                n: id.n,
                min: id.family.min_order(),
            }
            .into());
        }
        Ok(Subject {
            family: json!(id.family.name()),
            n: id.n,
            layout: id.layout(),
            num_vertices: id.num_vertices()?,
            id: Some(id),
            input: None,
        })
    }

    fn graph(&self) -> Result<Graph, Failure> {
        match (&self.input, self.id) {
            (Some(g), _) => Ok(g.clone()),
            (None, Some(id)) => Ok(id.graph()?),
            (None, None) => unreachable!("a subject has a graph or a family"),
        }
    }

    fn vertex(&self, spec: &str) -> Result<usize, Failure> {
        Ok(self.layout.vertex_id(self.num_vertices, spec.parse()?)?)
    }

    fn label(&self, v: usize) -> String {
        self.layout.vertex_ref(v).to_string()
    }

    fn labels(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.label(v)).collect()
    }

    fn name(&self) -> String {
        match self.id {
            Some(id) => id.to_string(),
            None => format!("input graph on {} vertices", self.n),
        }
    }

    fn envelope(&self, engine: &str) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("family".into(), self.family.clone());
        m.insert("n".into(), json!(self.n));
        m.insert("engine".into(), json!(engine));
        m
    }

    /// DV as a flat array, or as `{"x": [...], "y": [...]}` on strips.
    fn dv_json(&self, dv: &[u64]) -> Value {
        match self.layout.strip_order() {
            None => json!(dv),
            Some(n) => json!({ "x": &dv[..n], "y": &dv[n..] }),
        }
    }

    fn csv_family(&self) -> String {
        self.id
            .map_or_else(String::new, |id| id.family.name().to_string())
    }
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Err(_) => Ok(oracle::DEFAULT_SIZE_CAP),
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{CAP_VAR} must be a non-negative integer, got `{s}`"
            ))
        }),
    }
}

/// The registered engine for a family instance, or `None` when the run must
/// go straight to the oracle (input graphs, listed sets).
fn choose<'r>(
    subject: &Subject,
    method: Option<Method>,
    registry: &'r EngineRegistry,
    keep_sets: bool,
) -> Result<Option<&'r dyn Engine>, Failure> {
    match (subject.id, method) {
        (_, Some(m)) if m != Method::Oracle && (keep_sets || subject.id.is_none()) => {
            let needs = if keep_sets {
                "listing sets"
            } else {
                "an --input graph"
            };
            Err(Failure::Usage(format!(
                "{needs} needs the oracle, not {}",
                m.name()
            )))
        }
        (None, _) => Ok(None),
        _ if keep_sets => Ok(None),
        (Some(id), Some(m)) => {
            let engine = registry.get(m.name())?;
            engine.require(id)?;
            Ok(Some(engine))
        }
        (Some(id), None) => Ok(Some(registry.default_for(id)?)),
    }
}

fn compute(
    subject: &Subject,
    method: Option<Method>,
    registry: &EngineRegistry,
    keep_sets: bool,
) -> Result<(&'static str, DominationReport), Failure> {
    match choose(subject, method, registry, keep_sets)? {
        Some(engine) => Ok((
            engine.name(),
            engine.report(subject.id.expect("engines run on families"))?,
        )),
        None => Ok((
            "oracle",
            oracle::domination_report(&subject.graph()?, keep_sets, Some(oracle_cap()?))?,
        )),
    }
}

fn scalar(
    target: &Target,
    registry: &EngineRegistry,
    quantity: &'static str,
) -> Result<Response, Failure> {
    let subject = Subject::load(target)?;
    let (engine, value) = match choose(&subject, target.method, registry, false)? {
        Some(engine) => {
            let id = subject.id.expect("engines run on families");
            let value = if quantity == "gamma" {
                engine.gamma(id)?
            } else {
                engine.tau(id)?
            };
            (engine.name(), value)
        }
        None => {
            let (engine, r) = compute(&subject, target.method, registry, false)?;
            (engine, if quantity == "gamma" { r.gamma } else { r.tau })
        }
    };
    let mut json = subject.envelope(engine);
    json.insert(quantity.into(), json!(value));
    let mut r = Response::new(json);
    r.csv_header = vec!["family", "n", "engine", quantity];
    r.csv_rows = vec![vec![
        subject.csv_family(),
        subject.n.to_string(),
        engine.into(),
        value.to_string(),
    ]];
    r.text = vec![format!("{quantity}({}) = {value}", subject.name())];
    Ok(r)
}

fn dv(
    target: &Target,
    vertex: Option<&str>,
    registry: &EngineRegistry,
) -> Result<Response, Failure> {
    let subject = Subject::load(target)?;
    let (engine, rows, json_dv): (&str, Vec<(usize, u64)>, Value) = match vertex {
        Some(spec) => {
            let v = subject.vertex(spec)?;
            let (engine, value) = match choose(&subject, target.method, registry, false)? {
                Some(engine) => (
                    engine.name(),
                    engine.dv_of(subject.id.expect("engines run on families"), v)?,
                ),
                None => {
                    let (engine, r) = compute(&subject, target.method, registry, false)?;
                    (engine, r.dv[v - 1])
                }
            };
            (engine, vec![(v, value)], json!(value))
        }
        None => {
            let (engine, r) = compute(&subject, target.method, registry, false)?;
            let json_dv = subject.dv_json(&r.dv);
            (
                engine,
                r.dv.into_iter()
                    .enumerate()
                    .map(|(i, d)| (i + 1, d))
                    .collect(),
                json_dv,
            )
        }
    };
    let mut json = subject.envelope(engine);
    if let [(v, _)] = rows[..] {
        if vertex.is_some() {
            json.insert("vertex".into(), json!(subject.label(v)));
        }
    }
    json.insert("dv".into(), json_dv);
    let mut r = Response::new(json);
    r.csv_header = vec!["vertex", "dv"];
    r.csv_rows = rows
        .iter()
        .map(|&(v, d)| vec![subject.label(v), d.to_string()])
        .collect();
    r.text = rows
        .iter()
        .map(|&(v, d)| format!("DV({}) = {d}", subject.label(v)))
        .collect();
    Ok(r)
}

fn report(
    target: &Target,
    list_sets: bool,
    registry: &EngineRegistry,
) -> Result<Response, Failure> {
    let subject = Subject::load(target)?;
    let (engine, report) = compute(&subject, target.method, registry, list_sets)?;
    Ok(full_report(&subject, engine, &report))
}

fn enumerate(target: &Target, registry: &EngineRegistry) -> Result<Response, Failure> {
    if let Some(m) = target.method.filter(|&m| m != Method::Oracle) {
        return Err(Failure::Usage(format!(
            "enumerate always uses the oracle, not {}",
            m.name()
        )));
    }
    let subject = Subject::load(target)?;
    let (engine, report) = compute(&subject, Some(Method::Oracle), registry, true)?;
    let mut r = full_report(&subject, engine, &report);
    let sets = report.sets.as_deref().unwrap_or_default();
    r.csv_header = vec!["set", "members"];
    r.csv_rows = sets
        .iter()
        .enumerate()
        .map(|(i, d)| vec![(i + 1).to_string(), subject.labels(d).join(" ")])
        .collect();
    Ok(r)
}

fn full_report(subject: &Subject, engine: &str, report: &DominationReport) -> Response {
    let mut json = subject.envelope(engine);
    json.insert("gamma".into(), json!(report.gamma));
    json.insert("tau".into(), json!(report.tau));
    json.insert("dv".into(), subject.dv_json(&report.dv));
    if let Some(sets) = &report.sets {
        json.insert(
            "sets".into(),
            sets.iter()
                .map(|d| subject.labels(d))
                .collect::<Vec<_>>()
                .into(),
        );
    }
    let vertices = 1..=subject.num_vertices;
    let mut r = Response::new(json);
    r.csv_header = vec!["family", "n", "engine", "gamma", "tau", "vertex", "dv"];
    r.csv_rows = vertices
        .clone()
        .map(|v| {
            vec![
                subject.csv_family(),
                subject.n.to_string(),
                engine.to_string(),
                report.gamma.to_string(),
                report.tau.to_string(),
                subject.label(v),
                report.dv[v - 1].to_string(),
            ]
        })
        .collect();
    r.text = vec![
        format!("{} via {engine}", subject.name()),
        format!("gamma = {}", report.gamma),
        format!("tau = {}", report.tau),
    ];
    r.text
        .extend(vertices.map(|v| format!("DV({}) = {}", subject.label(v), report.dv[v - 1])));
    if let Some(sets) = &report.sets {
        r.text.extend(
            sets.iter()
                .map(|d| format!("{{{}}}", subject.labels(d).join(", "))),
        );
    }
    r
}

fn verdict_json(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("check".into(), json!(v.check));
    m.insert("n".into(), json!(v.instance.map(|id| id.n)));
    match &v.outcome {
        Outcome::Pass => {
            m.insert("status".into(), json!("pass"));
        }
        Outcome::Skipped(reason) => {
            m.insert("status".into(), json!("skipped"));
            m.insert("reason".into(), json!(reason));
        }
        Outcome::Fail(mismatch) => {
            m.insert("status".into(), json!("fail"));
            m.insert("quantity".into(), json!(mismatch.quantity));
            m.insert(
                "left".into(),
                json!({ "engine": mismatch.left_source, "value": mismatch.left_value }),
            );
            m.insert(
                "right".into(),
                json!({ "engine": mismatch.right_source, "value": mismatch.right_value }),
            );
        }
    }
    Value::Object(m)
}

fn verify_range(
    family: Family,
    min_n: usize,
    max_n: usize,
    engines: &str,
    registry: &EngineRegistry,
) -> Result<Response, Failure> {
    let (a, b) = engines
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("--engines expects `A:B`, got `{engines}`")))?;
    let (left, right) = (registry.get(a)?, registry.get(b)?);
    if min_n > max_n {
        return Err(Failure::Usage(format!(
            "--min-n {min_n} exceeds --max-n {max_n}"
        )));
    }
    for n in min_n..=max_n {
        let id = FamilyId::new(family, n);
        left.require(id)?;
        right.require(id)?;
    }
    let verdicts = verify::cross_check(family, min_n..=max_n, left, right)?;
    let failed = verdicts.iter().filter(|v| v.is_fail()).count();
    let passed = verdicts.iter().filter(|v| v.is_pass()).count();

    let mut json = Map::new();
    json.insert("family".into(), json!(family.name()));
    json.insert("min_n".into(), json!(min_n));
    json.insert("max_n".into(), json!(max_n));
    json.insert("engines".into(), json!([left.name(), right.name()]));
    json.insert(
        "verdicts".into(),
        verdicts.iter().map(verdict_json).collect::<Vec<_>>().into(),
    );
    json.insert("passed".into(), json!(passed));
    json.insert("failed".into(), json!(failed));
    json.insert("skipped".into(), json!(verdicts.len() - passed - failed));

    let mut r = Response::new(json);
    r.mismatch = failed > 0;
    r.csv_header = vec![
        "check", "family", "n", "status", "quantity", "left", "right",
    ];
    r.csv_rows = verdicts
        .iter()
        .map(|v| {
            let n = v.instance.map_or_else(String::new, |id| id.n.to_string());
            let (status, quantity, l, rt) = match &v.outcome {
                Outcome::Pass => ("pass", String::new(), String::new(), String::new()),
                Outcome::Skipped(reason) => {
                    ("skipped", reason.clone(), String::new(), String::new())
                }
                Outcome::Fail(m) => (
                    "fail",
                    m.quantity.clone(),
                    format!("{}={}", m.left_source, m.left_value),
                    format!("{}={}", m.right_source, m.right_value),
                ),
            };
            vec![
                v.check.clone(),
                family.name().into(),
                n,
                status.into(),
                quantity,
                l,
                rt,
            ]
        })
        .collect();
    r.text = verdicts.iter().map(Verdict::to_string).collect();
    r.text.push(format!(
        "{passed} passed, {failed} failed, {} skipped",
        verdicts.len() - passed - failed
    ));
    Ok(r)
}

fn run(cli: &Cli) -> Result<(Response, Format), Failure> {
    let registry = EngineRegistry::with_oracle_cap(oracle_cap()?);
    Ok(match &cli.command {
        Command::Gamma(t) => (scalar(t, &registry, "gamma")?, t.format),
        Command::Tau(t) => (scalar(t, &registry, "tau")?, t.format),
        Command::Dv { target, vertex } => {
            (dv(target, vertex.as_deref(), &registry)?, target.format)
        }
        Command::Report { target, list_sets } => {
            (report(target, *list_sets, &registry)?, target.format)
        }
        Command::Enumerate(t) => (enumerate(t, &registry)?, t.format),
        Command::Verify {
            family,
            min_n,
            max_n,
            engines,
            format,
        } => (
            verify_range(*family, *min_n, *max_n, engines, &registry)?,
            *format,
        ),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((response, format)) => {
            print!("{}", response.render(format));
            ExitCode::from(u8::from(response.mismatch))
        }
        Err(failure) => {
            eprintln!("domval: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
