//! Grid subdivision of a box family, the lift that attaches a prism over
//! every box, and the checks on the resulting pointed median graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::amalgam::{gated_amalgam_with, GateCheck};
use crate::burling::{burling_family, compact, intersection_graph, BoxHypergraph, BoxHypergraphJson, Rational};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, GraphJson, VertexId};
use crate::theta::{pointed_contact_graph, squares, square_edges, OrientedGraph, ThetaStructure};

/// The subdivision of the bounding box by the planes through all box corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridComplex {
    planes: [Vec<Rational>; 3],
}

impl GridComplex {
    pub fn planes(&self, axis: usize) -> &[Rational] {
        &self.planes[axis]
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.planes[0].len(), self.planes[1].len(), self.planes[2].len()]
    }

    pub fn vertex_count(&self) -> usize {
        self.dims().iter().product()
    }

    /// Vertex id of the lattice point `idx`; the first axis varies slowest.
    pub fn vertex(&self, idx: [usize; 3]) -> VertexId {
        let d = self.dims();
        (idx[0] * d[1] + idx[1]) * d[2] + idx[2]
    }

    pub fn index(&self, v: VertexId) -> [usize; 3] {
        let d = self.dims();
        [v / (d[1] * d[2]), (v / d[2]) % d[1], v % d[2]]
    }

    /// The 1-skeleton: a product of paths, with lattice indices as coordinates.
    pub fn graph(&self) -> Graph {
        Graph::grid(&self.dims())
    }

    fn plane_index(&self, axis: usize, value: Rational) -> Option<usize> {
        self.planes[axis].binary_search(&value).ok()
    }
}

pub fn build_grid(bh: &BoxHypergraph) -> Result<GridComplex> {
    bh.validate()?;
    let mut planes: [Vec<Rational>; 3] = Default::default();
    for (axis, list) in planes.iter_mut().enumerate() {
        for b in bh.boxes.iter().chain(std::iter::once(&bh.bounding)) {
            list.push(b.lo(axis));
            list.push(b.hi(axis));
        }
        list.sort_unstable();
        list.dedup();
    }
    Ok(GridComplex { planes })
}

/// Every corner of every box lies on grid planes, so each box is a union of cells.
pub fn check_cell_representation(gc: &GridComplex, bh: &BoxHypergraph) -> Result<()> {
    for (i, b) in bh.boxes.iter().enumerate() {
        if !bh.bounding.contains_box(b) {
            return Err(Error::BoxOutsideBounds(i));
        }
        for axis in 0..3 {
            if gc.plane_index(axis, b.lo(axis)).is_none() || gc.plane_index(axis, b.hi(axis)).is_none() {
                return Err(Error::NotCellRepresented { index: i, axis });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ThetaLabel {
    /// Edges joining a box's subgrid to its copy.
    Lifted {
        #[serde(rename = "box")]
        box_index: usize,
    },
    /// Edges parallel to `axis` between planes `plane` and `plane + 1`.
    Grid { axis: usize, plane: usize },
}

/// The grid with one prism `G_i × K₂` attached over the subgrid of every box.
#[derive(Clone, Debug)]
pub struct LiftedGraph {
    pub graph: Graph,
    pub grid: GridComplex,
    /// Per box, the lattice index range `[lo, hi]` on each axis.
    pub box_cells: Vec<[[usize; 2]; 3]>,
    /// Per box, the grid vertices of its subgrid in increasing order.
    pub members: Vec<Vec<VertexId>>,
    /// Copy of `members[i][k]` is `copy_offset[i] + k`.
    pub copy_offset: Vec<VertexId>,
    pub edge_label: Vec<ThetaLabel>,
    pub alpha: VertexId,
    pub beta: VertexId,
}

pub fn lift(gc: &GridComplex, bh: &BoxHypergraph) -> Result<LiftedGraph> {
    check_cell_representation(gc, bh)?;
    let base = gc.graph();
    let ng = base.vertex_count();
    let mut box_cells = Vec::with_capacity(bh.len());
    let mut members = Vec::with_capacity(bh.len());
    let mut copy_offset = Vec::with_capacity(bh.len());
    let mut next = ng;
    for b in &bh.boxes {
        let mut cells = [[0usize; 2]; 3];
        for (axis, c) in cells.iter_mut().enumerate() {
            c[0] = gc.plane_index(axis, b.lo(axis)).expect("checked");
            c[1] = gc.plane_index(axis, b.hi(axis)).expect("checked");
        }
        let mut vs = Vec::new();
        for i in cells[0][0]..=cells[0][1] {
            for j in cells[1][0]..=cells[1][1] {
                for k in cells[2][0]..=cells[2][1] {
                    vs.push(gc.vertex([i, j, k]));
                }
            }
        }
        copy_offset.push(next);
        next += vs.len();
        box_cells.push(cells);
        members.push(vs);
    }
    let grid_label = |u: VertexId, v: VertexId| {
        let (a, b) = (gc.index(u), gc.index(v));
        let axis = (0..3).find(|&k| a[k] != b[k]).expect("grid edge changes one axis");
        ThetaLabel::Grid {
            axis,
            plane: a[axis].min(b[axis]),
        }
    };
    let mut edges: Vec<(VertexId, VertexId, ThetaLabel)> = Vec::new();
    for &(u, v) in base.edges() {
        edges.push((u, v, grid_label(u, v)));
    }
    for (i, vs) in members.iter().enumerate() {
        let pos: HashMap<VertexId, usize> = vs.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        for (k, &v) in vs.iter().enumerate() {
            edges.push((v, copy_offset[i] + k, ThetaLabel::Lifted { box_index: i }));
            for w in base.neighbors(v) {
                if let Some(&kw) = pos.get(&w) {
                    if v < w {
                        edges.push((copy_offset[i] + k, copy_offset[i] + kw, grid_label(v, w)));
                    }
                }
            }
        }
    }
    let graph = Graph::new(next, edges.iter().map(|&(u, v, _)| (u, v)))?;
    let mut edge_label = vec![ThetaLabel::Lifted { box_index: 0 }; graph.edge_count()];
    for &(u, v, l) in &edges {
        edge_label[graph.edge_id(u, v).expect("edge was inserted")] = l;
    }
    let mut coords: Vec<Vec<i64>> = (0..ng)
        .map(|v| {
            let c = gc.index(v);
            vec![c[0] as i64, c[1] as i64, c[2] as i64, 0]
        })
        .collect();
    for (i, vs) in members.iter().enumerate() {
        for &v in vs {
            let c = gc.index(v);
            coords.push(vec![c[0] as i64, c[1] as i64, c[2] as i64, i as i64 + 1]);
        }
    }
    let graph = graph.with_coords(coords)?;
    Ok(LiftedGraph {
        graph,
        grid: gc.clone(),
        box_cells,
        members,
        copy_offset,
        edge_label,
        alpha: 0,
        beta: ng - 1,
    })
}

/// Grid, lift and checks in one call.
pub fn lift_family(bh: &BoxHypergraph) -> Result<LiftedGraph> {
    let gc = build_grid(bh)?;
    lift(&gc, bh)
}

impl LiftedGraph {
    pub fn box_count(&self) -> usize {
        self.members.len()
    }

    /// Class labels in id order: lifted classes by box, then grid classes
    /// by axis and plane.
    pub fn labels(&self) -> Vec<ThetaLabel> {
        let mut out: Vec<ThetaLabel> = (0..self.box_count()).map(|i| ThetaLabel::Lifted { box_index: i }).collect();
        for (axis, d) in self.grid.dims().iter().enumerate() {
            for plane in 0..d.saturating_sub(1) {
                out.push(ThetaLabel::Grid { axis, plane });
            }
        }
        out
    }

    pub fn class_id(&self, label: ThetaLabel) -> usize {
        let d = self.grid.dims();
        match label {
            ThetaLabel::Lifted { box_index } => box_index,
            ThetaLabel::Grid { axis, plane } => {
                self.box_count() + (0..axis).map(|a| d[a] - 1).sum::<usize>() + plane
            }
        }
    }

    /// Class id of every edge under [`LiftedGraph::labels`].
    pub fn edge_classes(&self) -> Vec<usize> {
        self.edge_label.iter().map(|&l| self.class_id(l)).collect()
    }

    /// Grid vertex underlying `v` and the box whose copy holds `v`, if any.
    pub fn base_of(&self, v: VertexId) -> (VertexId, Option<usize>) {
        let ng = self.grid.vertex_count();
        if v < ng {
            return (v, None);
        }
        let i = self.copy_offset.partition_point(|&o| o <= v) - 1;
        (self.members[i][v - self.copy_offset[i]], Some(i))
    }

    /// Tail of every edge by the construction's rule: grid-parallel edges
    /// point to larger coordinates, lifting edges point into the copy.
    pub fn rule_tail(&self, e: EdgeId) -> VertexId {
        let (u, v) = self.graph.edge(e);
        let ((bu, cu), (bv, _)) = (self.base_of(u), self.base_of(v));
        match self.edge_label[e] {
            ThetaLabel::Lifted { .. } => {
                if cu.is_none() {
                    u
                } else {
                    v
                }
            }
            ThetaLabel::Grid { axis, .. } => {
                if self.grid.index(bu)[axis] < self.grid.index(bv)[axis] {
                    u
                } else {
                    v
                }
            }
        }
    }
}

/// Orientation away from `α`, cross-checked edge by edge against the rule
/// of the construction.
pub fn orient_at_alpha(lg: &LiftedGraph) -> Result<OrientedGraph> {
    let og = OrientedGraph::new(lg.graph.clone(), lg.alpha)?;
    for e in 0..lg.graph.edge_count() {
        if og.arc(e).0 != lg.rule_tail(e) {
            let (u, v) = lg.graph.edge(e);
            return Err(Error::ConstructionBug(format!(
                "edge {u}-{v}: distance orientation disagrees with the construction"
            )));
        }
    }
    Ok(og)
}

/// Correspondence between computed Θ-classes and construction labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCensus {
    pub class_count: usize,
    pub expected: usize,
    /// Construction label of each computed class.
    pub label_of_class: Vec<ThetaLabel>,
}

impl ClassCensus {
    pub fn class_of_label(&self) -> HashMap<ThetaLabel, usize> {
        self.label_of_class.iter().enumerate().map(|(c, &l)| (l, c)).collect()
    }

    pub fn lifted_classes(&self) -> Vec<usize> {
        let map = self.class_of_label();
        let m = self
            .label_of_class
            .iter()
            .filter(|l| matches!(l, ThetaLabel::Lifted { .. }))
            .count();
        (0..m).map(|i| map[&ThetaLabel::Lifted { box_index: i }]).collect()
    }
}

/// Each computed class must carry exactly one construction label and each
/// label exactly one class; the count must be boxes plus grid slabs, and
/// each lifted class a perfect matching between a subgrid and its copy.
pub fn class_census(lg: &LiftedGraph, t: &ThetaStructure) -> Result<ClassCensus> {
    let mut label_of_class: Vec<Option<ThetaLabel>> = vec![None; t.class_count()];
    let mut class_of_label: HashMap<ThetaLabel, usize> = HashMap::new();
    for e in 0..lg.graph.edge_count() {
        let (c, l) = (t.class_of(e), lg.edge_label[e]);
        match label_of_class[c] {
            None => label_of_class[c] = Some(l),
            Some(prev) if prev != l => {
                return Err(Error::ConstructionBug(format!("class {c} mixes {prev:?} and {l:?}")));
            }
            _ => {}
        }
        if let Some(&prev) = class_of_label.get(&l) {
            if prev != c {
                return Err(Error::ConstructionBug(format!("{l:?} is split over classes {prev} and {c}")));
            }
        }
        class_of_label.insert(l, c);
    }
    let expected = lg.labels().len();
    if t.class_count() != expected {
        return Err(Error::ConstructionBug(format!(
            "{} classes, expected {expected}",
            t.class_count()
        )));
    }
    for (i, vs) in lg.members.iter().enumerate() {
        let c = class_of_label[&ThetaLabel::Lifted { box_index: i }];
        let class = t.class(c);
        let mut base_ends: Vec<VertexId> = class.iter().map(|&e| lg.graph.edge(e).0).collect();
        base_ends.sort_unstable();
        if class.len() != vs.len() || base_ends != *vs {
            return Err(Error::ConstructionBug(format!("lifted class of box {i} is not a perfect matching")));
        }
    }
    Ok(ClassCensus {
        class_count: t.class_count(),
        expected,
        label_of_class: label_of_class.into_iter().map(|l| l.expect("every class has edges")).collect(),
    })
}

/// A square whose edges belong to two different lifted classes, if any.
pub fn verify_lemma_crossing(lg: &LiftedGraph) -> Option<[VertexId; 4]> {
    squares(&lg.graph).into_iter().find(|sq| {
        let e = square_edges(&lg.graph, sq);
        matches!(
            (lg.edge_label[e[0]], lg.edge_label[e[1]]),
            (ThetaLabel::Lifted { box_index: a }, ThetaLabel::Lifted { box_index: b }) if a != b
        )
    })
}

/// Pointed contact graph restricted to the lifted classes, indexed by box.
pub fn lifted_contact_graph(og: &OrientedGraph, t: &ThetaStructure, census: &ClassCensus) -> Graph {
    let pc = pointed_contact_graph(og, t);
    let lifted = census.lifted_classes();
    pc.induced(&lifted).expect("class ids are valid")
}

/// First box pair on which the lifted pointed contact graph and the box
/// intersection graph disagree.
pub fn verify_lemma_intersection(
    og: &OrientedGraph,
    t: &ThetaStructure,
    census: &ClassCensus,
    bh: &BoxHypergraph,
) -> Option<(usize, usize)> {
    let a = lifted_contact_graph(og, t, census);
    let b = intersection_graph(bh);
    let ea: BTreeSet<(usize, usize)> = a.edges().iter().copied().collect();
    let eb: BTreeSet<(usize, usize)> = b.edges().iter().copied().collect();
    ea.symmetric_difference(&eb).next().copied()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub clique_number: usize,
    pub max_out_degree: usize,
    pub max_degree: usize,
    pub out_degree_bound: usize,
    pub degree_bound: usize,
    pub holds: bool,
    /// Whether some vertex reaches the out-degree bound exactly.
    pub out_bound_attained: bool,
}

/// Measured maxima against `ω + 3` (out-degree at α) and `ω + 6` (degree).
pub fn verify_lemma_degree(lg: &LiftedGraph, og: &OrientedGraph, clique_number: usize) -> DegreeReport {
    let max_out_degree = og.max_out_degree();
    let max_degree = lg.graph.max_degree();
    let out_degree_bound = clique_number + 3;
    let degree_bound = clique_number + 6;
    DegreeReport {
        clique_number,
        max_out_degree,
        max_degree,
        out_degree_bound,
        degree_bound,
        holds: max_out_degree <= out_degree_bound && max_degree <= degree_bound,
        out_bound_attained: max_out_degree == out_degree_bound,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamCertificate {
    pub steps: usize,
    pub exact_gates: bool,
}

/// Rebuilds the lift as a sequence of gated amalgams, gluing the prism
/// `G_i × K₂` onto the graph built so far along `G_i`, starting from the
/// grid. Each gluing is checked gated on both sides and the final graph
/// must equal the lift.
pub fn amalgam_certificate(lg: &LiftedGraph, check: GateCheck) -> Result<AmalgamCertificate> {
    let mut current = lg.grid.graph();
    for (i, vs) in lg.members.iter().enumerate() {
        let k = vs.len();
        let pos: HashMap<VertexId, usize> = vs.iter().enumerate().map(|(j, &v)| (v, j)).collect();
        let sub = lg.grid.graph();
        let mut prism_edges = Vec::new();
        for (j, &v) in vs.iter().enumerate() {
            prism_edges.push((j, k + j));
            for w in sub.neighbors(v) {
                if let Some(&jw) = pos.get(&w) {
                    if j < jw {
                        prism_edges.push((j, jw));
                        prism_edges.push((k + j, k + jw));
                    }
                }
            }
        }
        let prism = Graph::new(2 * k, prism_edges)?;
        let ident: Vec<(VertexId, VertexId)> = vs.iter().enumerate().map(|(j, &v)| (v, j)).collect();
        let step_check = match check {
            GateCheck::Exact => GateCheck::Exact,
            GateCheck::Sampled { count, seed } => GateCheck::Sampled {
                count,
                seed: seed.wrapping_add(i as u64),
            },
        };
        let a = gated_amalgam_with(&current, &prism, &ident, step_check)?;
        if a.second_map[k] != lg.copy_offset[i] {
            return Err(Error::ConstructionBug(format!("copy of box {i} placed at {}", a.second_map[k])));
        }
        current = a.graph;
    }
    if current.edges() != lg.graph.edges() {
        return Err(Error::ConstructionBug("amalgam sequence does not rebuild the lift".into()));
    }
    Ok(AmalgamCertificate {
        steps: lg.box_count(),
        exact_gates: check == GateCheck::Exact,
    })
}

/// Lifts of consecutive families glued corner to corner: `β` of each block
/// is identified with `α` of the next.
#[derive(Clone, Debug)]
pub struct ChainGraph {
    pub graph: Graph,
    pub blocks: Vec<LiftedGraph>,
    /// Chain vertex of every block vertex.
    pub block_maps: Vec<Vec<VertexId>>,
    pub articulations: Vec<VertexId>,
    pub alpha: VertexId,
}

/// Chain of the lifts of compacted families `1..=k`, refusing to exceed
/// `max_vertices`.
pub fn build_chain(k: usize, max_vertices: usize) -> Result<ChainGraph> {
    if k == 0 {
        return Err(Error::Schema("chain length must be at least 1".into()));
    }
    let mut blocks = Vec::with_capacity(k);
    let mut total = 0usize;
    for n in 1..=k {
        let bh = compact(&burling_family(n)?);
        let gc = build_grid(&bh)?;
        if total + gc.vertex_count() > max_vertices {
            return Err(Error::ResourceLimit(format!("chain of {k} blocks exceeds {max_vertices} vertices")));
        }
        let lg = lift(&gc, &bh)?;
        total += lg.graph.vertex_count();
        if total > max_vertices {
            return Err(Error::ResourceLimit(format!("chain of {k} blocks exceeds {max_vertices} vertices")));
        }
        blocks.push(lg);
    }
    glue_chain(blocks)
}

pub fn glue_chain(blocks: Vec<LiftedGraph>) -> Result<ChainGraph> {
    let mut maps: Vec<Vec<VertexId>> = Vec::with_capacity(blocks.len());
    let mut edges = Vec::new();
    let mut next = 0usize;
    let mut articulations = Vec::new();
    let mut prev_beta: Option<VertexId> = None;
    for b in &blocks {
        let mut map = Vec::with_capacity(b.graph.vertex_count());
        for v in b.graph.vertices() {
            if v == b.alpha {
                if let Some(pb) = prev_beta {
                    map.push(pb);
                    continue;
                }
            }
            map.push(next);
            next += 1;
        }
        if let Some(pb) = prev_beta {
            articulations.push(pb);
        }
        for &(u, v) in b.graph.edges() {
            edges.push((map[u], map[v]));
        }
        prev_beta = Some(map[b.beta]);
        maps.push(map);
    }
    let graph = Graph::new(next, edges)?;
    Ok(ChainGraph {
        graph,
        alpha: maps[0][blocks[0].alpha],
        blocks,
        block_maps: maps,
        articulations,
    })
}

/// Cut vertices by the lowpoint method, sorted.
pub fn articulation_points(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack: Vec<(VertexId, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            let inc = g.incident(v);
            if *idx < inc.len() {
                let w = inc[*idx].0;
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    (0..n).filter(|&v| cut[v]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCheck {
    pub articulations: Vec<VertexId>,
    pub articulation_out_degrees: Vec<usize>,
    pub max_out_degree: usize,
    pub block_max_out_degrees: Vec<usize>,
    /// The chain's pointed contact graph is the disjoint union of the blocks'.
    pub contact_is_disjoint_union: bool,
}

/// Checks the chain against its blocks: cut vertices are exactly the glued
/// corners, and the pointed contact graph splits along the blocks.
pub fn verify_chain(chain: &ChainGraph, og: &OrientedGraph, t: &ThetaStructure) -> Result<(ChainCheck, Vec<Graph>, Graph)> {
    let cuts = articulation_points(&chain.graph);
    let mut glued = chain.articulations.clone();
    glued.sort_unstable();
    if cuts != glued {
        return Err(Error::ConstructionBug(format!("cut vertices {cuts:?} differ from glued corners {glued:?}")));
    }
    let pc = pointed_contact_graph(og, t);
    // class of the chain -> (block, class within the block)
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; t.class_count()];
    let mut block_pcs = Vec::new();
    let mut block_max = Vec::new();
    for (bi, b) in chain.blocks.iter().enumerate() {
        let bt = crate::theta::theta_classes(&b.graph, b.alpha)?;
        let bog = OrientedGraph::new(b.graph.clone(), b.alpha)?;
        block_max.push(bog.max_out_degree());
        let map = &chain.block_maps[bi];
        for (e, &(u, v)) in b.graph.edges().iter().enumerate() {
            let ce = chain.graph.edge_id(map[u], map[v]).expect("block edge is a chain edge");
            let c = t.class_of(ce);
            match owner[c] {
                None => owner[c] = Some((bi, bt.class_of(e))),
                Some(o) if o != (bi, bt.class_of(e)) => {
                    return Err(Error::ConstructionBug(format!("chain class {c} spans blocks")));
                }
                _ => {}
            }
        }
        block_pcs.push(pointed_contact_graph(&bog, &bt));
    }
    let mut union_pairs = BTreeSet::new();
    let mut back: HashMap<(usize, usize), usize> = HashMap::new();
    for (c, o) in owner.iter().enumerate() {
        back.insert(o.expect("every class has edges"), c);
    }
    for (bi, bpc) in block_pcs.iter().enumerate() {
        for &(x, y) in bpc.edges() {
            let (a, b) = (back[&(bi, x)], back[&(bi, y)]);
            union_pairs.insert((a.min(b), a.max(b)));
        }
    }
    let chain_pairs: BTreeSet<(usize, usize)> = pc.edges().iter().copied().collect();
    let check = ChainCheck {
        articulation_out_degrees: chain.articulations.iter().map(|&v| og.out_degree(v)).collect(),
        articulations: chain.articulations.clone(),
        max_out_degree: og.max_out_degree(),
        block_max_out_degrees: block_max,
        contact_is_disjoint_union: union_pairs == chain_pairs,
    };
    Ok((check, block_pcs, pc))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedGraphJson {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub theta_labels: BTreeMap<usize, ThetaLabel>,
    pub alpha: i64,
    pub beta: i64,
    pub boxes: BoxHypergraphJson,
}

impl LiftedGraph {
    pub fn to_json(&self, bh: &BoxHypergraph) -> LiftedGraphJson {
        LiftedGraphJson {
            graph: self.graph.to_json(),
            theta_labels: self.labels().into_iter().enumerate().collect(),
            alpha: self.alpha as i64,
            beta: self.beta as i64,
            boxes: bh.to_json(),
        }
    }

    /// Rebuilds the lift from the stored boxes; the stored graph, labels and
    /// corners must match the rebuilt ones.
    pub fn from_json(json: &LiftedGraphJson) -> Result<(Self, BoxHypergraph)> {
        let bh = BoxHypergraph::from_json(&json.boxes)?;
        let lg = lift_family(&bh)?;
        let stored = Graph::from_json(&json.graph)?;
        if stored.edges() != lg.graph.edges() {
            return Err(Error::Schema("stored graph differs from the lift of the stored boxes".into()));
        }
        let labels: BTreeMap<usize, ThetaLabel> = lg.labels().into_iter().enumerate().collect();
        if labels != json.theta_labels || json.alpha != lg.alpha as i64 || json.beta != lg.beta as i64 {
            return Err(Error::Schema("stored labels or corners differ from the lift".into()));
        }
        Ok((lg, bh))
    }
}
