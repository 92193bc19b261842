//! Gluing two graphs along gated subgraphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::metric::{is_gated, is_gated_sampled, GatedVerdict};

/// How gatedness of the glued parts is verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateCheck {
    Exact,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct Amalgam {
    pub graph: Graph,
    /// Vertex of the result for each vertex of the second input; vertices
    /// of the first input keep their ids.
    pub second_map: Vec<VertexId>,
}

/// Glues `g1` and `g2` by identifying `identification[k].0 ∈ g1` with
/// `identification[k].1 ∈ g2`. Both sides must induce isomorphic, gated
/// subgraphs under the identification.
pub fn gated_amalgam(g1: &Graph, g2: &Graph, identification: &[(VertexId, VertexId)]) -> Result<Amalgam> {
    gated_amalgam_with(g1, g2, identification, GateCheck::Exact)
}

pub fn gated_amalgam_with(
    g1: &Graph,
    g2: &Graph,
    identification: &[(VertexId, VertexId)],
    check: GateCheck,
) -> Result<Amalgam> {
    if identification.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut to1: HashMap<VertexId, VertexId> = HashMap::new();
    let mut seen1 = vec![false; g1.vertex_count()];
    for &(a, b) in identification {
        g1.check_vertex(a)?;
        g2.check_vertex(b)?;
        if seen1[a] || to1.insert(b, a).is_some() {
            return Err(Error::BadIdentification(format!("pair ({a}, {b}) repeats a vertex")));
        }
        seen1[a] = true;
    }
    for &(a, b) in identification {
        for &(a2, b2) in identification {
            if a < a2 && g1.has_edge(a, a2) != g2.has_edge(b, b2) {
                return Err(Error::BadIdentification(format!(
                    "edge {a}-{a2} in the first graph does not match {b}-{b2} in the second"
                )));
            }
        }
    }
    let side1: Vec<VertexId> = identification.iter().map(|p| p.0).collect();
    let side2: Vec<VertexId> = identification.iter().map(|p| p.1).collect();
    for (side, g, set) in [(1, g1, &side1), (2, g2, &side2)] {
        let verdict = match check {
            GateCheck::Exact => is_gated(g, set)?,
            GateCheck::Sampled { count, seed } => is_gated_sampled(g, set, count, seed)?,
        };
        if let GatedVerdict::NotGated { vertex } = verdict {
            return Err(Error::NotGated { side, vertex });
        }
    }
    let n1 = g1.vertex_count();
    let mut second_map = Vec::with_capacity(g2.vertex_count());
    let mut next = n1;
    for v in g2.vertices() {
        match to1.get(&v) {
            Some(&a) => second_map.push(a),
            None => {
                second_map.push(next);
                next += 1;
            }
        }
    }
    let mut edges: Vec<(VertexId, VertexId)> = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        let (a, b) = (second_map[u], second_map[v]);
        if !(a < n1 && b < n1) {
            edges.push((a, b));
        }
    }
    Ok(Amalgam {
        graph: Graph::new(next, edges)?,
        second_map,
    })
}
