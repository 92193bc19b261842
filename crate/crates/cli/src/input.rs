//! Reading and writing the JSON and DOT files.

use std::path::Path;

use medianlab::burling::BoxHypergraphJson;
use medianlab::graph::GraphJson;
use medianlab::{BoxHypergraph, Graph, LiftedGraph, LiftedGraphJson, VertexId};
use serde::Serialize;

use crate::{CliResult, Failure};

pub enum Loaded {
    Graph(Graph),
    Boxes(BoxHypergraph),
    Lift(Box<LiftedGraph>, BoxHypergraph),
}

impl Loaded {
    pub fn graph(&self) -> CliResult<Graph> {
        match self {
            Loaded::Graph(g) => Ok(g.clone()),
            Loaded::Lift(lg, _) => Ok(lg.graph.clone()),
            Loaded::Boxes(_) => Err(Failure::new(1, "expected a graph, found a box family")),
        }
    }

    pub fn boxes(&self) -> Option<&BoxHypergraph> {
        match self {
            Loaded::Boxes(bh) | Loaded::Lift(_, bh) => Some(bh),
            Loaded::Graph(_) => None,
        }
    }

    /// `α` for lifted graphs, the first vertex otherwise.
    pub fn basepoint(&self) -> VertexId {
        match self {
            Loaded::Lift(lg, _) => lg.alpha,
            _ => 0,
        }
    }
}

fn read_value(path: &Path) -> CliResult<serde_json::Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}

/// Lifted graph if the file has both vertices and boxes, box family if it
/// has only boxes, plain graph otherwise.
pub fn load(path: &Path) -> CliResult<Loaded> {
    let v = read_value(path)?;
    let has = |k: &str| v.get(k).is_some();
    if has("vertices") && has("boxes") {
        let j: LiftedGraphJson = serde_json::from_value(v).map_err(Failure::schema)?;
        let (lg, bh) = LiftedGraph::from_json(&j)?;
        Ok(Loaded::Lift(Box::new(lg), bh))
    } else if has("boxes") {
        let j: BoxHypergraphJson = serde_json::from_value(v).map_err(Failure::schema)?;
        Ok(Loaded::Boxes(BoxHypergraph::from_json(&j)?))
    } else {
        let j: GraphJson = serde_json::from_value(v).map_err(Failure::schema)?;
        Ok(Loaded::Graph(Graph::from_json(&j)?))
    }
}

pub fn read_boxes(path: &Path) -> CliResult<BoxHypergraph> {
    let j: BoxHypergraphJson = serde_json::from_value(read_value(path)?).map_err(Failure::schema)?;
    Ok(BoxHypergraph::from_json(&j)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(Failure::schema)?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}

pub fn write_dot(path: &Path, lg: &LiftedGraph) -> CliResult<()> {
    let classes = lg.edge_classes();
    let lifted: Vec<bool> = (0..lg.labels().len()).map(|c| c < lg.box_count()).collect();
    write_text(path, &medianlab::to_dot(&lg.graph, Some(&classes), &lifted))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))
}
