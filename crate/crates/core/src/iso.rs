//! Backtracking graph isomorphism for small connected graphs.

use crate::graph::{Graph, VertexId};

/// An isomorphism `g1 → g2`, optionally sending `anchor.0` to `anchor.1`.
/// Vertices are matched in breadth-first order with degree and distance
/// invariants; only connected graphs are supported.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, anchor: Option<(VertexId, VertexId)>) -> Option<Vec<VertexId>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    if !g1.is_connected() || !g2.is_connected() {
        return None;
    }
    let (r1, roots2): (VertexId, Vec<VertexId>) = match anchor {
        Some((a, b)) => (a, vec![b]),
        None => {
            let r1 = g1.vertices().max_by_key(|&v| (g1.degree(v), std::cmp::Reverse(v))).expect("non-empty");
            (r1, g2.vertices().filter(|&v| g2.degree(v) == g1.degree(r1)).collect())
        }
    };
    let d1 = g1.bfs(r1);
    let mut order: Vec<VertexId> = g1.vertices().collect();
    order.sort_by_key(|&v| (d1[v], v));
    let mut sorted1: Vec<usize> = g1.vertices().map(|v| g1.degree(v)).collect();
    let mut sorted2: Vec<usize> = g2.vertices().map(|v| g2.degree(v)).collect();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }
    for r2 in roots2 {
        let d2 = g2.bfs(r2);
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if extend(g1, g2, &d1, &d2, &order, 0, &mut map, &mut used, r2) {
            return Some(map);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    d1: &[u32],
    d2: &[u32],
    order: &[VertexId],
    pos: usize,
    map: &mut [VertexId],
    used: &mut [bool],
    root2: VertexId,
) -> bool {
    let Some(&v) = order.get(pos) else { return true };
    let mapped_nb: Vec<VertexId> = g1.neighbors(v).filter(|&w| map[w] != usize::MAX).map(|w| map[w]).collect();
    let candidates: Vec<VertexId> = if pos == 0 {
        vec![root2]
    } else {
        // some neighbor of v precedes it in breadth-first order
        g2.neighbors(mapped_nb[0]).collect()
    };
    for c in candidates {
        if used[c] || g2.degree(c) != g1.degree(v) || d2[c] != d1[v] {
            continue;
        }
        let mapped_at_c = g2.neighbors(c).filter(|&w| used[w]).count();
        if mapped_at_c != mapped_nb.len() || !mapped_nb.iter().all(|&w| g2.has_edge(c, w)) {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g1, g2, d1, d2, order, pos + 1, map, used, root2) {
            return true;
        }
        map[v] = usize::MAX;
        used[c] = false;
    }
    false
}

pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[VertexId]) -> bool {
    let n = g1.vertex_count();
    if map.len() != n || g2.vertex_count() != n || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v]))
}
