//! Graph and constraint arguments: inline specs or files.

use std::path::Path;

use acl_lab::{parse_graph, ConstraintSet, Graph, VertexSet};
use anyhow::{bail, Context, Result};

/// A parsed graph argument with the text it came from.
pub struct Labelled {
    pub label: String,
    pub graph: Graph,
}

/// An existing file is read as DOT when its name ends in `.dot` and as an
/// edge list otherwise; any other text is a graph spec.
pub fn graph_arg(arg: &str) -> Result<Labelled> {
    let graph = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        if arg.ends_with(".dot") {
            Graph::parse_dot(&text)
        } else {
            Graph::parse_edge_list(&text)
        }
        .with_context(|| format!("parsing {arg}"))?
    } else {
        parse_graph(arg)?
    };
    Ok(Labelled {
        label: arg.to_string(),
        graph,
    })
}

/// Splits on whitespace outside parentheses, so `join(K2, K3) C5` is two
/// specs.
pub fn split_specs(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Constraint members from a list of arguments. Each argument is a file or
/// a space-separated list of specs; a file holds a single graph (edge list
/// or DOT) or spec lines, with `#` comments.
pub fn constraint_args(args: &[String]) -> Result<(ConstraintSet, Vec<Labelled>)> {
    let mut members = Vec::new();
    for arg in args {
        if Path::new(arg).is_file() {
            let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
            let single = if arg.ends_with(".dot") {
                Graph::parse_dot(&text).ok()
            } else {
                Graph::parse_edge_list(&text).ok()
            };
            if let Some(graph) = single {
                members.push(Labelled {
                    label: arg.clone(),
                    graph,
                });
                continue;
            }
            for line in text.lines().map(|l| l.split('#').next().unwrap_or("")) {
                for spec in split_specs(line) {
                    members.push(graph_arg(&spec)?);
                }
            }
        } else {
            for spec in split_specs(arg) {
                members.push(graph_arg(&spec)?);
            }
        }
    }
    if members.is_empty() {
        bail!("no constraints given");
    }
    let cs = ConstraintSet::new(members.iter().map(|m| m.graph.clone()).collect())?;
    Ok((cs, members))
}

/// Comma-separated vertex ids; the empty string is the empty set.
pub fn vertex_set(text: &str) -> Result<VertexSet> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad vertex id `{s}`")))
        .collect()
}

pub fn numbers(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad number `{s}`")))
        .collect()
}
