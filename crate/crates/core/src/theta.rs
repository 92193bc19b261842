//! Θ-classes of median graphs, their halfspaces relative to a basepoint,
//! class relations (crossing, osculation, separation) and the contact
//! graphs built from them.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId, UNREACHABLE};

/// All 4-cycles, each once, as `[v, a, c, b]` in cyclic order with `v` the
/// smallest vertex and `a < b`.
pub fn squares(g: &Graph) -> Vec<[VertexId; 4]> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let nb: Vec<VertexId> = g.neighbors(v).filter(|&w| w > v).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                for c in g.neighbors(a) {
                    if c > v && c != b && g.has_edge(c, b) {
                        out.push([v, a, c, b]);
                    }
                }
            }
        }
    }
    out
}

/// The four edges of a square in cyclic order; edges 0/2 and 1/3 are opposite.
pub fn square_edges(g: &Graph, sq: &[VertexId; 4]) -> [EdgeId; 4] {
    let e = |x, y| g.edge_id(x, y).expect("square edge exists");
    [e(sq[0], sq[1]), e(sq[1], sq[2]), e(sq[2], sq[3]), e(sq[3], sq[0])]
}

/// A graph directed away from a basepoint.
#[derive(Clone, Debug)]
pub struct OrientedGraph {
    base: Graph,
    basepoint: VertexId,
    dist: Vec<u32>,
}

impl OrientedGraph {
    /// Directs each edge `xy` as `x → y` when `x` is closer to `basepoint`.
    /// Requires a connected bipartite graph.
    pub fn new(base: Graph, basepoint: VertexId) -> Result<Self> {
        base.check_vertex(basepoint)?;
        if let Err((u, v)) = base.bipartition() {
            return Err(Error::NotBipartite(u, v));
        }
        let dist = base.bfs(basepoint);
        if dist.contains(&UNREACHABLE) {
            return Err(Error::Disconnected);
        }
        Ok(OrientedGraph { base, basepoint, dist })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    pub fn distance(&self, v: VertexId) -> u32 {
        self.dist[v]
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (u, v) = self.base.edge(e);
        if self.dist[u] < self.dist[v] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let dv = self.dist[v];
        self.base.neighbors(v).filter(move |&w| self.dist[w] > dv)
    }

    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        let dv = self.dist[v];
        self.base
            .incident(v)
            .iter()
            .filter(move |&&(w, _)| self.dist[w] > dv)
            .map(|&(_, e)| e)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn max_out_degree(&self) -> usize {
        self.base.vertices().map(|v| self.out_degree(v)).max().unwrap_or(0)
    }
}

/// How thoroughly [`theta_classes_with`] verifies halfspace convexity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConvexityCheck {
    /// Shortest-path sweep from every vertex.
    Exhaustive,
    /// Sweep from `sources` pseudorandom vertices (plus the basepoint).
    Sampled { sources: usize, seed: u64 },
    Skip,
}

/// Vertex count above which [`theta_classes`] samples the convexity sweep.
pub const EXHAUSTIVE_CONVEXITY_LIMIT: usize = 20_000;

#[derive(Clone, Debug)]
pub struct ThetaStructure {
    graph: Graph,
    basepoint: VertexId,
    class_of: Vec<usize>,
    classes: Vec<Vec<EdgeId>>,
    words: usize,
    // per vertex, bit i set iff the vertex lies in B_i (the side away from the basepoint)
    sides: Vec<u64>,
    crossing: BTreeSet<(usize, usize)>,
}

/// Θ-partition with default checks: exhaustive convexity up to
/// [`EXHAUSTIVE_CONVEXITY_LIMIT`] vertices, 32 sampled sources beyond.
pub fn theta_classes(g: &Graph, basepoint: VertexId) -> Result<ThetaStructure> {
    let check = if g.vertex_count() <= EXHAUSTIVE_CONVEXITY_LIMIT {
        ConvexityCheck::Exhaustive
    } else {
        ConvexityCheck::Sampled { sources: 32, seed: 0 }
    };
    theta_classes_with(g, basepoint, check)
}

/// Partitions the edges by the transitive closure of square opposition,
/// checks every class against the Djoković cut of a representative edge,
/// orients the halfspaces at `basepoint` and checks their convexity.
pub fn theta_classes_with(g: &Graph, basepoint: VertexId, check: ConvexityCheck) -> Result<ThetaStructure> {
    g.check_vertex(basepoint)?;
    if let Err((u, v)) = g.bipartition() {
        return Err(Error::NotBipartite(u, v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    let sq = squares(g);
    let mut uf = UnionFind::new(m);
    let mut square_edge_ids = Vec::with_capacity(sq.len());
    for s in &sq {
        let e = square_edges(g, s);
        uf.union(e[0], e[2]);
        uf.union(e[1], e[3]);
        square_edge_ids.push(e);
    }
    // Number classes by their smallest edge id.
    let mut class_of = vec![usize::MAX; m];
    let mut root_class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    for e in 0..m {
        let r = uf.find(e);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[e] = root_class[r];
        classes[root_class[r]].push(e);
    }
    let n = g.vertex_count();
    let words = classes.len().div_ceil(64).max(1);
    let mut sides = vec![0u64; n * words];
    for (i, class) in classes.iter().enumerate() {
        let (x, y) = g.edge(class[0]);
        let dx = g.bfs(x);
        let dy = g.bfs(y);
        // W(x,y) holds the vertices closer to x.
        let closer_x = |z: usize| dx[z] < dy[z];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let cut = closer_x(u) != closer_x(v);
            if cut != (class_of[e] == i) {
                return Err(Error::ThetaNotTransitive { class: i, u, v });
            }
        }
        // The side containing the basepoint is A_i.
        let base_near_x = closer_x(basepoint);
        for z in 0..n {
            if closer_x(z) != base_near_x {
                sides[z * words + i / 64] |= 1 << (i % 64);
            }
        }
    }
    let mut crossing = BTreeSet::new();
    for e in &square_edge_ids {
        let (a, b) = (class_of[e[0]], class_of[e[1]]);
        if a != b {
            crossing.insert((a.min(b), a.max(b)));
        }
    }
    let t = ThetaStructure {
        graph: g.clone(),
        basepoint,
        class_of,
        classes,
        words,
        sides,
        crossing,
    };
    match check {
        ConvexityCheck::Exhaustive => {
            for s in g.vertices() {
                t.convexity_sweep(s)?;
            }
        }
        ConvexityCheck::Sampled { sources, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            t.convexity_sweep(basepoint)?;
            for _ in 0..sources {
                t.convexity_sweep(rng.gen_range(0..n))?;
            }
        }
        ConvexityCheck::Skip => {}
    }
    Ok(t)
}

impl ThetaStructure {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, e: EdgeId) -> usize {
        self.class_of[e]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_of_pair(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.graph.edge_id(u, v).map(|e| self.class_of[e])
    }

    pub fn classes(&self) -> &[Vec<EdgeId>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[EdgeId] {
        &self.classes[i]
    }

    /// Whether `v` lies in `B_i`, the halfspace of class `i` avoiding the basepoint.
    #[inline]
    pub fn in_far_side(&self, i: usize, v: VertexId) -> bool {
        self.sides[v * self.words + i / 64] & (1 << (i % 64)) != 0
    }

    /// Classes whose far halfspace contains `v`, as a bit mask.
    pub fn side_mask(&self, v: VertexId) -> &[u64] {
        &self.sides[v * self.words..(v + 1) * self.words]
    }

    /// `(A_i, B_i)`; the basepoint lies in `A_i`.
    pub fn halfspaces(&self, i: usize) -> (Vec<VertexId>, Vec<VertexId>) {
        self.graph.vertices().partition(|&v| !self.in_far_side(i, v))
    }

    /// Classes separating `u` from `v`; their number is `d(u,v)` in a median graph.
    pub fn separating(&self, u: VertexId, v: VertexId) -> Vec<usize> {
        let (a, b) = (self.side_mask(u), self.side_mask(v));
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut x = a[w] ^ b[w];
            while x != 0 {
                out.push(w * 64 + x.trailing_zeros() as usize);
                x &= x - 1;
            }
        }
        out
    }

    pub fn crossing_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.crossing
    }

    pub fn crosses(&self, i: usize, j: usize) -> bool {
        self.crossing.contains(&(i.min(j), i.max(j)))
    }

    /// Sorted classes of the edges at `v`.
    pub fn classes_at(&self, v: VertexId) -> Vec<usize> {
        let mut c: Vec<usize> = self.graph.incident(v).iter().map(|&(_, e)| self.class_of[e]).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Shortest paths from `s` may only cross classes that separate their
    /// endpoints; a path crossing some other class leaves and re-enters a
    /// halfspace of it.
    fn convexity_sweep(&self, s: VertexId) -> Result<()> {
        let g = &self.graph;
        let n = g.vertex_count();
        let w = self.words;
        let dist = g.bfs(s);
        let mut order: Vec<VertexId> = (0..n).collect();
        order.sort_by_key(|&v| dist[v]);
        let mut crossed = vec![0u64; n * w];
        let ms = self.side_mask(s).to_vec();
        for &t in order.iter().skip(1) {
            for &(p, e) in g.incident(t) {
                if dist[p] + 1 != dist[t] {
                    continue;
                }
                let c = self.class_of[e];
                for k in 0..w {
                    let mut bits = crossed[p * w + k];
                    if k == c / 64 {
                        bits |= 1 << (c % 64);
                    }
                    crossed[t * w + k] |= bits;
                }
            }
            let mt = self.side_mask(t);
            for k in 0..w {
                let bad = crossed[t * w + k] & !(ms[k] ^ mt[k]);
                if bad != 0 {
                    return Err(Error::HalfspaceNotConvex {
                        class: k * 64 + bad.trailing_zeros() as usize,
                        from: s,
                        to: t,
                    });
                }
            }
        }
        Ok(())
    }

    /// Every edge of class `i` runs from `A_i` to `B_i` in the orientation
    /// away from the basepoint.
    pub fn orientation_is_coherent(&self, og: &OrientedGraph) -> bool {
        (0..self.graph.edge_count()).all(|e| {
            let (t, h) = og.arc(e);
            let c = self.class_of[e];
            !self.in_far_side(c, t) && self.in_far_side(c, h)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RelationKind {
    Crossing,
    Osculating,
    Disjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRelation {
    pub kind: RelationKind,
    /// Set when an orientation was supplied: some vertex is the tail of
    /// directed edges of both classes.
    pub directed_osculation: Option<bool>,
}

pub fn class_relation(t: &ThetaStructure, i: usize, j: usize, orientation: Option<&OrientedGraph>) -> ClassRelation {
    let g = &t.graph;
    let mut touch = vec![0u8; g.vertex_count()];
    for &e in t.class(i) {
        let (u, v) = g.edge(e);
        touch[u] = 1;
        touch[v] = 1;
    }
    let kind = if t.crosses(i, j) {
        RelationKind::Crossing
    } else if t.class(j).iter().any(|&e| {
        let (u, v) = g.edge(e);
        touch[u] == 1 || touch[v] == 1
    }) {
        RelationKind::Osculating
    } else {
        RelationKind::Disjoint
    };
    let directed_osculation = orientation.map(|og| {
        let mut tails = vec![false; g.vertex_count()];
        for &e in t.class(i) {
            tails[og.arc(e).0] = true;
        }
        t.class(j).iter().any(|&e| tails[og.arc(e).0])
    });
    ClassRelation {
        kind,
        directed_osculation,
    }
}

/// `i` separates the basepoint from `j`: the classes do not cross and all
/// of `Θ_j` lies in `B_i`.
pub fn separates(t: &ThetaStructure, i: usize, j: usize) -> bool {
    if i == j || t.crosses(i, j) {
        return false;
    }
    t.class(j).iter().all(|&e| {
        let (u, v) = t.graph.edge(e);
        t.in_far_side(i, u) && t.in_far_side(i, v)
    })
}

fn pair_graph(n: usize, pairs: BTreeSet<(usize, usize)>) -> Graph {
    Graph::new(n, pairs).expect("class pairs are distinct and in range")
}

/// Classes adjacent when some vertex meets edges of both.
pub fn contact_graph(t: &ThetaStructure) -> Graph {
    let mut pairs = BTreeSet::new();
    for v in t.graph.vertices() {
        let c = t.classes_at(v);
        for (k, &a) in c.iter().enumerate() {
            for &b in &c[k + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    pair_graph(t.class_count(), pairs)
}

pub fn crossing_graph(t: &ThetaStructure) -> Graph {
    pair_graph(t.class_count(), t.crossing.clone())
}

/// Classes adjacent when they cross or leave a common vertex in the
/// orientation `og`.
pub fn pointed_contact_graph(og: &OrientedGraph, t: &ThetaStructure) -> Graph {
    let mut pairs = t.crossing.clone();
    for v in og.base().vertices() {
        let mut c: Vec<usize> = og.out_edges(v).map(|e| t.class_of(e)).collect();
        c.sort_unstable();
        c.dedup();
        for (k, &a) in c.iter().enumerate() {
            for &b in &c[k + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    pair_graph(t.class_count(), pairs)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}
