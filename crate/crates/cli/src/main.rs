mod catalog;
mod inputs;
mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use acl_lab::builder::{build_approximant, BuildConfig, Sweep};
use acl_lab::cases::{bowtie_closure, knk3_closure};
use acl_lab::closure::{
    acl_witness, cl_family, cl_star, homclosure_verdict, path_basis, proper_subgraph_basis, solidity_basis,
};
use acl_lab::hom::is_hom_closed;
use acl_lab::oracles::{default_params, run_oracle, ORACLES};
use acl_lab::{hom_images, minimal_hom_images, omits, Caps, ClosureReport, ImageSet};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::catalog;
use crate::inputs::{constraint_args, graph_arg, numbers, vertex_set, Labelled};
use crate::report::{describe, edges_text, set_text, InputRecord, ReportDocument, APPROXIMANT_NOTE};

/// Verification oracles whose hosts are approximants.
const APPROXIMANT_ORACLES: &[&str] = &["theorem4", "prop1-bowtie", "lemma12", "lemma13", "ck1-lower", "lemma10", "lemma11"];

#[derive(Parser)]
#[command(name = "acl-lab", version, about = "Closure analyses for graphs omitting finite constraint sets")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// All homomorphic images of a graph, up to isomorphism.
    Images { graph: String },
    /// The weakly minimal homomorphic images.
    MinimalImages { graph: String },
    /// Hom-closure test and universality verdict for a constraint set.
    Homclosed {
        #[arg(required = true)]
        constraints: Vec<String>,
        /// Hom-closed extension set to add to the base.
        #[arg(long, num_args = 1..)]
        extension: Vec<String>,
    },
    /// Build a named graph.
    Construct { graph: String },
    /// Run a closure operator on a host graph.
    Closure(ClosureArgs),
    /// Search for an algebraic-closure witness over a vertex set.
    Aclwitness(HostArgs),
    /// Build a free-amalgam approximant.
    Build(BuildArgs),
    /// Run named verification oracles.
    Verify {
        /// Oracle name; omit with --all.
        name: Option<String>,
        /// Comma-separated parameters; the default parameter sets otherwise.
        #[arg(long)]
        params: Option<String>,
        #[arg(long, conflicts_with_all = ["name", "params"])]
        all: bool,
    },
    /// Known results on universal graphs.
    Catalog { filter: Option<String> },
}

#[derive(Args)]
struct HostArgs {
    /// Host graph: spec or file.
    #[arg(long)]
    host: String,
    /// Constraint specs or files.
    #[arg(long, num_args = 1.., required = true)]
    constraints: Vec<String>,
    /// Comma-separated vertex ids.
    #[arg(long, default_value = "")]
    set: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operator {
    /// Paths of at most --len edges anchored at an endpoint.
    Path,
    /// Solidity basis of the constraints.
    Solidity,
    /// Proper weak subgraphs of the constraints.
    ProperSubgraph,
    /// Path basis with the two triangle clauses, path length --len.
    Star,
    /// `A*` via special edges (bow-tie host).
    Bowtie,
    /// Special sets of cliques, clique order --len.
    Knk3,
}

#[derive(Args)]
struct ClosureArgs {
    #[arg(long)]
    host: String,
    /// Needed by the path, solidity and proper-subgraph operators.
    #[arg(long, num_args = 1..)]
    constraints: Vec<String>,
    #[arg(long, default_value = "")]
    set: String,
    #[arg(long, value_enum, default_value_t = Operator::Path)]
    operator: Operator,
    /// Path length, or clique order for knk3.
    #[arg(long)]
    len: Option<usize>,
    /// Repeat to a fixed point.
    #[arg(long)]
    iterate: bool,
    /// Copies in the finitized freeness test; the largest constraint order
    /// by default.
    #[arg(long)]
    copies: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepArg {
    Snapshot,
    Frontier,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, num_args = 1.., required = true)]
    constraints: Vec<String>,
    #[arg(long, default_value_t = 2)]
    rounds: usize,
    #[arg(long, default_value_t = 2)]
    anchor_budget: usize,
    #[arg(long, default_value_t = 4)]
    ext_budget: usize,
    #[arg(long, default_value_t = 300)]
    cap: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SweepArg::Snapshot)]
    sweep: SweepArg,
    /// Start graph instead of K1.
    #[arg(long)]
    start: Option<String>,
    /// Write the approximant as an edge list.
    #[arg(long)]
    out: Option<String>,
    /// Write the full trace as JSON.
    #[arg(long)]
    trace: Option<String>,
}

/// A finished command: the report plus its text and DOT renderings.
struct Output {
    doc: ReportDocument,
    text: String,
    dot: Option<String>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match Caps::from_env() {
        Ok(caps) => Caps::install(caps),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let echo = argv.into_iter().skip(1).collect();
    match dispatch(cli.command, echo).and_then(|out| emit(out, cli.format)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Prints the report; returns whether every oracle passed.
fn emit(out: Output, format: Format) -> Result<bool> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&out.doc)? + "\n",
        Format::Text => {
            let mut s = String::new();
            for note in &out.doc.notes {
                let _ = writeln!(s, "note: {note}");
            }
            s + &out.text
        }
        Format::Dot => match out.dot {
            Some(d) => d,
            None => bail!("dot output is not available for this command"),
        },
    };
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    Ok(!out.doc.failed())
}

fn dispatch(cmd: Command, echo: Vec<String>) -> Result<Output> {
    let mut doc = ReportDocument::new(echo);
    match cmd {
        Command::Images { graph } => images(doc, &graph, false),
        Command::MinimalImages { graph } => images(doc, &graph, true),
        Command::Homclosed { constraints, extension } => homclosed(doc, &constraints, &extension),
        Command::Construct { graph } => {
            let g = graph_arg(&graph)?;
            doc.inputs.push(InputRecord::new("graph", &g.label, &g.graph));
            doc.result = json!({ "graph": g.graph, "name": describe(&g.graph) });
            Ok(Output {
                text: g.graph.to_edge_list(),
                dot: Some(g.graph.to_dot("G")),
                doc,
            })
        }
        Command::Closure(args) => closure(doc, &args),
        Command::Aclwitness(args) => {
            let host = graph_arg(&args.host)?;
            let (cs, members) = constraint_args(&args.constraints)?;
            let a = vertex_set(&args.set)?;
            record_host(&mut doc, &host, &members);
            let w = acl_witness(&host.graph, &a, &cs)?;
            let text = match &w {
                None => format!("no witness: {} is closed under the free-amalgam criterion\n", set_text(&to_vec(&a))),
                Some(w) => format!(
                    "witness: constraint #{} through quotient {} at {}\n",
                    w.constraint,
                    w.quotient.to_hex(),
                    set_text(&w.occurrence)
                ),
            };
            doc.result = json!({ "set": a, "closed": w.is_none(), "witness": w });
            Ok(Output { doc, text, dot: None })
        }
        Command::Build(args) => build(doc, &args),
        Command::Verify { name, params, all } => verify(doc, name, params, all),
        Command::Catalog { filter } => {
            let entries = catalog(filter.as_deref().unwrap_or(""));
            let mut text = String::new();
            for e in &entries {
                let _ = writeln!(text, "{} | {} | {}", e.family, e.verdict.label(), e.source);
                if let Some(b) = e.bound {
                    let _ = writeln!(text, "    {b}");
                }
            }
            doc.result = json!({ "filter": filter, "count": entries.len() });
            doc.citations = entries.into_iter().cloned().collect();
            Ok(Output { doc, text, dot: None })
        }
    }
}

fn to_vec(a: &acl_lab::VertexSet) -> Vec<usize> {
    a.iter().copied().collect()
}

fn record_host(doc: &mut ReportDocument, host: &Labelled, members: &[Labelled]) {
    doc.inputs.push(InputRecord::new("host", &host.label, &host.graph));
    for m in members {
        doc.inputs.push(InputRecord::new("constraint", &m.label, &m.graph));
    }
}

fn images(mut doc: ReportDocument, spec: &str, minimal: bool) -> Result<Output> {
    let g = graph_arg(spec)?;
    doc.inputs.push(InputRecord::new("graph", &g.label, &g.graph));
    let set: ImageSet = if minimal {
        minimal_hom_images(&g.graph)?
    } else {
        hom_images(&g.graph)?
    };
    let mut text = String::new();
    let mut dot = String::new();
    let mut list = Vec::new();
    for (i, im) in set.images.iter().enumerate() {
        let name = describe(&im.graph);
        let _ = writeln!(
            text,
            "{name} order {} size {}{} {}",
            im.graph.order(),
            im.graph.size(),
            if im.minimal { " minimal" } else { "" },
            edges_text(&im.graph)
        );
        dot.push_str(&im.graph.to_dot(&format!("image{i}")));
        list.push(json!({
            "name": name,
            "graph": im.graph,
            "code": im.code.to_hex(),
            "proper": im.proper,
            "minimal": im.minimal,
        }));
    }
    doc.result = json!({ "count": list.len(), "images": list });
    Ok(Output {
        doc,
        text,
        dot: Some(dot),
    })
}

fn homclosed(mut doc: ReportDocument, base: &[String], extension: &[String]) -> Result<Output> {
    let (cs, members) = constraint_args(base)?;
    for m in &members {
        doc.inputs.push(InputRecord::new("constraint", &m.label, &m.graph));
    }
    let ext = if extension.is_empty() {
        None
    } else {
        let (e, emembers) = constraint_args(extension)?;
        for m in &emembers {
            doc.inputs.push(InputRecord::new("extension", &m.label, &m.graph));
        }
        Some(e)
    };
    let closed = is_hom_closed(cs.members())?;
    let verdict = homclosure_verdict(&cs, ext.as_ref())?;
    let status = serde_json::to_value(verdict.status)?;
    let mut text = format!(
        "hom-closed: {}\nverdict: {} ({})\n",
        if closed.closed { "closed" } else { "not closed" },
        status.as_str().unwrap_or_default(),
        verdict.rule
    );
    if let Some(w) = &verdict.witness {
        let _ = writeln!(
            text,
            "witness: image {} of constraint #{} in {} contains no constraint",
            edges_text(&w.image),
            w.constraint,
            verdict.witness_in.unwrap_or("base")
        );
    }
    doc.citations = catalog("hom-closed").into_iter().cloned().collect();
    doc.result = json!({ "closed": closed.closed, "verdict": verdict });
    Ok(Output { doc, text, dot: None })
}

fn closure(mut doc: ReportDocument, args: &ClosureArgs) -> Result<Output> {
    let host = graph_arg(&args.host)?;
    let a = vertex_set(&args.set)?;
    let needs_cs = matches!(args.operator, Operator::Path | Operator::Solidity | Operator::ProperSubgraph);
    let members = if args.constraints.is_empty() {
        if needs_cs {
            bail!("this operator needs --constraints");
        }
        None
    } else {
        Some(constraint_args(&args.constraints)?)
    };
    record_host(&mut doc, &host, members.as_ref().map_or(&[][..], |m| &m.1));
    let g = &host.graph;
    let report = match args.operator {
        Operator::Path | Operator::Solidity | Operator::ProperSubgraph => {
            let cs = &members.as_ref().expect("checked above").0;
            let fam = match args.operator {
                Operator::Path => path_basis(args.len.unwrap_or(cs.k().saturating_sub(1).max(1)))?,
                Operator::Solidity => solidity_basis(cs)?,
                _ => proper_subgraph_basis(cs)?,
            };
            let copies = args.copies.unwrap_or(cs.k());
            closure_result(cl_family(g, &a, &fam, cs, args.iterate, copies)?)
        }
        Operator::Star => {
            let n = args.len.context("the star operator needs --len")?;
            closure_result(cl_star(g, &a, n, args.iterate)?)
        }
        Operator::Bowtie => {
            let r = bowtie_closure(g, &a)?;
            let text = format!(
                "A* = {}\nA** = A*: {}\n|A*| <= 4|A|: {}\nclaims: {} {} {}\n",
                set_text(&r.a_star),
                r.star_stable,
                r.bound_ok,
                r.claims[0].holds,
                r.claims[1].holds,
                r.claims[2].holds
            );
            doc.citations = catalog("bow-tie").into_iter().cloned().collect();
            (serde_json::to_value(&r)?, text)
        }
        Operator::Knk3 => {
            let n = args.len.context("the knk3 operator needs --len (clique order)")?;
            let r = knk3_closure(g, &a, n)?;
            let value = serde_json::to_value(&r)?;
            let text = format!("{}\n", serde_json::to_string(&value)?);
            (value, text)
        }
    };
    doc.result = report.0;
    Ok(Output {
        doc,
        text: report.1,
        dot: None,
    })
}

fn closure_result(r: ClosureReport) -> (Value, String) {
    let mut text = format!(
        "input {}\nfinal {}\nfixed point: {}\n",
        set_text(&r.input),
        set_text(&r.final_set),
        r.fixed_point
    );
    if r.budget_exhausted {
        text.push_str("budget exhausted\n");
    }
    for s in &r.steps {
        let _ = writeln!(text, "  {} over {} adds {}", s.pattern.to_hex(), set_text(&s.anchor), set_text(&s.added));
    }
    (serde_json::to_value(&r).unwrap_or(Value::Null), text)
}

fn build(mut doc: ReportDocument, args: &BuildArgs) -> Result<Output> {
    let (cs, members) = constraint_args(&args.constraints)?;
    for m in &members {
        doc.inputs.push(InputRecord::new("constraint", &m.label, &m.graph));
    }
    let start = match &args.start {
        Some(s) => {
            let g = graph_arg(s)?;
            doc.inputs.push(InputRecord::new("start", &g.label, &g.graph));
            Some(g.graph)
        }
        None => None,
    };
    let cfg = BuildConfig {
        rounds: args.rounds,
        extension_budget: args.ext_budget,
        anchor_budget: args.anchor_budget,
        vertex_cap: args.cap,
        seed: args.seed,
        start,
        sweep: match args.sweep {
            SweepArg::Snapshot => Sweep::Snapshot,
            SweepArg::Frontier => Sweep::Frontier,
        },
        ..BuildConfig::new(cs.clone())
    };
    let (g, trace) = build_approximant(&cfg)?;
    if let Some(path) = &args.out {
        std::fs::write(path, g.to_edge_list()).with_context(|| format!("writing {path}"))?;
    }
    if let Some(path) = &args.trace {
        std::fs::write(path, serde_json::to_string_pretty(&trace)?).with_context(|| format!("writing {path}"))?;
    }
    doc.notes.push(APPROXIMANT_NOTE.to_string());
    let rounds: Vec<Value> = trace
        .rounds
        .iter()
        .map(|r| {
            json!({
                "start_order": r.start_order,
                "end_order": r.end_order,
                "already_realized": r.already_realized,
                "realized": r.realized.len(),
                "skipped": r.skipped.len(),
                "capped": r.capped,
                "processed": r.processed.len(),
            })
        })
        .collect();
    let mut text = format!("order {} size {} omits constraints: {}\n", g.order(), g.size(), omits(&g, &cs));
    for (i, r) in trace.rounds.iter().enumerate() {
        let _ = writeln!(
            text,
            "round {}: {} -> {} vertices, {} realized, {} skipped, {} processed{}",
            i + 1,
            r.start_order,
            r.end_order,
            r.realized.len(),
            r.skipped.len(),
            r.processed.len(),
            if r.capped { ", capped" } else { "" }
        );
    }
    doc.result = json!({
        "order": g.order(),
        "size": g.size(),
        "omits": omits(&g, &cs),
        "code": acl_lab::canonical_code(&g).ok().map(|c| c.to_hex()),
        "rounds": rounds,
    });
    Ok(Output {
        dot: Some(g.to_dot("approximant")),
        doc,
        text,
    })
}

fn verify(mut doc: ReportDocument, name: Option<String>, params: Option<String>, all: bool) -> Result<Output> {
    let mut jobs: Vec<(&'static str, Vec<usize>)> = Vec::new();
    if all {
        for &o in ORACLES {
            for p in default_params(o)? {
                jobs.push((o, p));
            }
        }
    } else {
        let Some(name) = name else {
            bail!("give an oracle name or --all; known oracles: {}", ORACLES.join(", "));
        };
        let o = ORACLES
            .iter()
            .copied()
            .find(|&o| o == name)
            .with_context(|| format!("unknown oracle `{name}`; known oracles: {}", ORACLES.join(", ")))?;
        match params {
            Some(p) => jobs.push((o, numbers(&p)?)),
            None => jobs.extend(default_params(o)?.into_iter().map(|p| (o, p))),
        }
    }
    let mut text = String::new();
    for (o, p) in jobs {
        let outcome = run_oracle(o, &p)?;
        let _ = writeln!(
            text,
            "{} {o} {:?} checked {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            p,
            outcome.checked
        );
        if let Some(ce) = &outcome.counterexample {
            let _ = writeln!(text, "    counterexample: {ce}");
        }
        doc.oracles.push(outcome);
    }
    if doc.oracles.iter().any(|o| APPROXIMANT_ORACLES.contains(&o.name)) {
        doc.notes.push(APPROXIMANT_NOTE.to_string());
    }
    let passed = doc.oracles.iter().filter(|o| o.pass).count();
    doc.result = json!({ "run": doc.oracles.len(), "passed": passed, "failed": doc.oracles.len() - passed });
    let _ = writeln!(text, "{passed}/{} passed", doc.oracles.len());
    Ok(Output { doc, text, dot: None })
}
