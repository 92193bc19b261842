//! Finite simple undirected graphs with dense vertex ids.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Sentinel distance for unreachable vertices.
pub const UNREACHABLE: u32 = u32::MAX;

/// A finite simple graph. Vertices are `0..n`; edges are stored once with
/// the smaller endpoint first and sorted, so iteration order is
/// deterministic everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    edges: Vec<(VertexId, VertexId)>,
    coords: Option<Vec<Vec<i64>>>,
    labels: Vec<i64>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects loops, repeated edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges: list,
            coords: None,
            labels: (0..n as i64).collect(),
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    /// Attaches an integer coordinate tuple to every vertex.
    pub fn with_coords(mut self, coords: Vec<Vec<i64>>) -> Result<Self> {
        if coords.len() != self.vertex_count() {
            return Err(Error::Schema(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                self.vertex_count()
            )));
        }
        self.coords = Some(coords);
        Ok(self)
    }

    /// Replaces the external ids used by JSON and DOT output.
    pub fn with_labels(mut self, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Schema("label count mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbors together with the id of the connecting edge.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn coords(&self) -> Option<&[Vec<i64>]> {
        self.coords.as_deref()
    }

    pub fn coord(&self, v: VertexId) -> Option<&[i64]> {
        self.coords.as_ref().map(|c| c[v].as_slice())
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Breadth-first distances from `src`; unreachable vertices get
    /// [`UNREACHABLE`].
    pub fn bfs(&self, src: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u] + 1;
            for &(w, _) in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = du;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Multi-source BFS: distance to the nearest vertex of `sources`.
    pub fn bfs_from_set(&self, sources: &[VertexId]) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u] + 1;
            for &(w, _) in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = du;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Returns a 2-coloring, or an edge closing an odd cycle.
    pub fn bipartition(&self) -> std::result::Result<Vec<bool>, (VertexId, VertexId)> {
        let n = self.vertex_count();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return Err((u.min(w), u.max(w))),
                        _ => {}
                    }
                }
            }
        }
        Ok(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &(w, _) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices` (in the given order); vertex `i` of the
    /// result is `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &(w, _) in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Graph::new(vertices.len(), edges)?;
        if let Some(c) = &self.coords {
            g.coords = Some(vertices.iter().map(|&v| c[v].clone()).collect());
        }
        g.labels = vertices.iter().map(|&v| self.labels[v]).collect();
        Ok(g)
    }

    /// True when every edge of `sub` is an edge of `self` (same vertex count).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    // ---- constructors for standard families ----

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    /// Hypercube Q_d; vertex ids are the bit vectors.
    pub fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        let edges = (0..n).flat_map(|v| {
            (0..d)
                .filter(move |b| v & (1 << b) == 0)
                .map(move |b| (v, v | (1 << b)))
        });
        let coords = (0..n)
            .map(|v| (0..d).map(|b| ((v >> b) & 1) as i64).collect())
            .collect();
        Graph::new(n, edges).unwrap().with_coords(coords).unwrap()
    }

    /// Product grid with `dims[a]` vertices along axis `a`; vertex
    /// coordinates are recorded. Vertex id is the mixed-radix index with the
    /// first axis varying slowest.
    pub fn grid(dims: &[usize]) -> Graph {
        let n: usize = dims.iter().product();
        let mut coords = Vec::with_capacity(n);
        let mut edges = Vec::new();
        let strides: Vec<usize> = (0..dims.len())
            .map(|a| dims[a + 1..].iter().product())
            .collect();
        for v in 0..n {
            let c: Vec<i64> = (0..dims.len())
                .map(|a| ((v / strides[a]) % dims[a]) as i64)
                .collect();
            for a in 0..dims.len() {
                if (c[a] as usize) + 1 < dims[a] {
                    edges.push((v, v + strides[a]));
                }
            }
            coords.push(c);
        }
        Graph::new(n, edges).unwrap().with_coords(coords).unwrap()
    }

    // ---- JSON ----

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self
                .vertices()
                .map(|v| VertexJson {
                    id: self.labels[v],
                    coord: self.coord(v).map(<[i64]>::to_vec),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| [self.labels[u], self.labels[v]])
                .collect(),
        }
    }

    /// Builds a graph from its JSON form. External ids may be arbitrary
    /// distinct integers; they are mapped to dense ids in sorted order.
    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let mut ids: Vec<i64> = json.vertices.iter().map(|v| v.id).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let index = |id: i64| -> Result<usize> {
            ids.binary_search(&id)
                .map_err(|_| Error::Schema(format!("edge endpoint {id} is not a declared vertex")))
        };
        let mut edges = Vec::with_capacity(json.edges.len());
        for [a, b] in &json.edges {
            edges.push((index(*a)?, index(*b)?));
        }
        let mut g = Graph::new(ids.len(), edges)?;
        let any_coord = json.vertices.iter().any(|v| v.coord.is_some());
        if any_coord {
            let mut coords = vec![Vec::new(); ids.len()];
            for v in &json.vertices {
                let c = v
                    .coord
                    .clone()
                    .ok_or_else(|| Error::Schema(format!("vertex {} lacks a coordinate", v.id)))?;
                coords[index(v.id)?] = c;
            }
            g.coords = Some(coords);
        }
        g.labels = ids;
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coord: Option<Vec<i64>>,
}

/// `{"vertices":[{"id":int,"coord":[int,...]?}],"edges":[[int,int]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[i64; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::UnknownVertex(2))));
    }

    #[test]
    fn grid_counts() {
        let g = Graph::grid(&[2, 3, 4]);
        assert_eq!(g.vertex_count(), 24);
        // (k1-1)k2k3 + k1(k2-1)k3 + k1k2(k3-1)
        assert_eq!(g.edge_count(), 12 + 16 + 18);
        assert_eq!(g.coord(23).unwrap(), &[1, 2, 3]);
    }

    #[test]
    fn hypercube_is_regular() {
        let q = Graph::hypercube(4);
        assert_eq!(q.edge_count(), 32);
        assert!(q.vertices().all(|v| q.degree(v) == 4));
    }

    #[test]
    fn json_roundtrip_with_sparse_ids() {
        let json: GraphJson = serde_json::from_str(
            r#"{"vertices":[{"id":10},{"id":-3},{"id":7}],"edges":[[10,7],[-3,7]]}"#,
        )
        .unwrap();
        let g = Graph::from_json(&json).unwrap();
        assert_eq!(g.labels(), &[-3, 7, 10]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_rejects_undeclared_endpoint() {
        let json: GraphJson =
            serde_json::from_str(r#"{"vertices":[{"id":0}],"edges":[[0,1]]}"#).unwrap();
        assert!(Graph::from_json(&json).is_err());
    }

    #[test]
    fn odd_cycle_not_bipartite() {
        assert!(Graph::cycle(5).bipartition().is_err());
        assert!(Graph::cycle(6).is_bipartite());
    }
}
