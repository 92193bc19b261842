//! Both directions of the correspondence between pointed median graphs and
//! event structures, checked by explicit bijections.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::Result;
use crate::events::{domain, event_structure_from_pointed, EventStructure};
use crate::theta::{theta_classes, OrientedGraph, ThetaStructure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundtripVerdict {
    pub ok: bool,
    pub detail: Option<String>,
}

impl RoundtripVerdict {
    fn pass() -> Self {
        RoundtripVerdict { ok: true, detail: None }
    }

    fn fail(detail: String) -> Self {
        RoundtripVerdict {
            ok: false,
            detail: Some(detail),
        }
    }
}

/// Pointed graph → event structure → domain. Each vertex `u` goes to the
/// set of classes whose far halfspace contains it; this must be a
/// bijection onto the configurations that maps arcs to arcs.
pub fn roundtrip_pointed(og: &OrientedGraph, t: &ThetaStructure, limit: usize) -> Result<RoundtripVerdict> {
    let es = event_structure_from_pointed(og, t)?;
    let d = domain(&es, limit)?;
    let g = og.base();
    if d.graph().vertex_count() != g.vertex_count() {
        return Ok(RoundtripVerdict::fail(format!(
            "{} vertices but {} configurations",
            g.vertex_count(),
            d.graph().vertex_count()
        )));
    }
    if d.graph().edge_count() != g.edge_count() {
        return Ok(RoundtripVerdict::fail(format!(
            "{} edges but {} covering pairs",
            g.edge_count(),
            d.graph().edge_count()
        )));
    }
    let index = d.vertex_of();
    let m = t.class_count();
    let mut image = Vec::with_capacity(g.vertex_count());
    let mut hit = vec![false; g.vertex_count()];
    for u in g.vertices() {
        let mut c = BitSet::new(m);
        for i in 0..m {
            if t.in_far_side(i, u) {
                c.insert(i);
            }
        }
        let Some(&x) = index.get(&c) else {
            return Ok(RoundtripVerdict::fail(format!("vertex {u} maps to a non-configuration")));
        };
        if hit[x] {
            return Ok(RoundtripVerdict::fail(format!("vertex {u} collides at configuration {x}")));
        }
        hit[x] = true;
        image.push(x);
    }
    if image[og.basepoint()] != 0 {
        return Ok(RoundtripVerdict::fail("basepoint does not map to the empty configuration".into()));
    }
    for e in 0..g.edge_count() {
        let (tail, head) = og.arc(e);
        let (a, b) = (image[tail], image[head]);
        match d.graph().edge_id(a, b) {
            Some(f) if d.oriented.arc(f) == (a, b) => {}
            _ => return Ok(RoundtripVerdict::fail(format!("arc {tail}->{head} is not a covering pair"))),
        }
    }
    Ok(RoundtripVerdict::pass())
}

/// Event structure → domain → event structure. Each class of the domain
/// goes to the event labelling its edges; the map must be a bijection
/// preserving order and conflict in both directions.
pub fn roundtrip_events(es: &EventStructure, limit: usize) -> Result<RoundtripVerdict> {
    let d = domain(es, limit)?;
    let t = theta_classes(d.graph(), 0)?;
    let back = event_structure_from_pointed(&d.oriented, &t)?;
    let n = es.len();
    if back.len() != n {
        return Ok(RoundtripVerdict::fail(format!("{n} events but {} classes", back.len())));
    }
    let mut event_of = vec![usize::MAX; n];
    for (i, class) in t.classes().iter().enumerate() {
        let e = d.edge_event[class[0]];
        if class.iter().any(|&f| d.edge_event[f] != e) {
            return Ok(RoundtripVerdict::fail(format!("class {i} carries several events")));
        }
        event_of[i] = e;
    }
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for (i, &e) in event_of.iter().enumerate() {
        if let Some(j) = seen.insert(e, i) {
            return Ok(RoundtripVerdict::fail(format!("classes {j} and {i} both carry event {e}")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (event_of[i], event_of[j]);
            if back.leq(i, j) != es.leq(a, b) {
                return Ok(RoundtripVerdict::fail(format!("order differs on events {a}, {b}")));
            }
            if back.in_conflict(i, j) != es.in_conflict(a, b) {
                return Ok(RoundtripVerdict::fail(format!("conflict differs on events {a}, {b}")));
            }
        }
    }
    Ok(RoundtripVerdict::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::random_event_structure_seeded;
    use crate::graph::Graph;
    use crate::iso::find_isomorphism;

    #[test]
    fn grids_and_trees_roundtrip() {
        let tree = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        for g in [Graph::grid(&[3, 2, 2]), tree, Graph::hypercube(3)] {
            for bp in [0, g.vertex_count() / 2, g.vertex_count() - 1] {
                let t = theta_classes(&g, bp).unwrap();
                let og = OrientedGraph::new(g.clone(), bp).unwrap();
                let v = roundtrip_pointed(&og, &t, 100_000).unwrap();
                assert!(v.ok, "{v:?}");
                // independent check: the domain is isomorphic with the basepoint fixed
                let es = event_structure_from_pointed(&og, &t).unwrap();
                let d = domain(&es, 100_000).unwrap();
                assert!(find_isomorphism(&g, d.graph(), Some((bp, 0))).is_some());
            }
        }
    }

    #[test]
    fn random_structures_roundtrip() {
        for seed in 0..30 {
            let es = random_event_structure_seeded(7, 0.25, 0.3, seed);
            let v = roundtrip_events(&es, 100_000).unwrap();
            assert!(v.ok, "seed {seed}: {v:?}");
        }
    }
}
