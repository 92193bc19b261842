//! Event structures, their domains of configurations, and the passage
//! between pointed median graphs and event structures.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::coloring::{max_clique, Budget};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::theta::{pointed_contact_graph, separates, squares, square_edges, OrientedGraph, ThetaStructure};

/// Events `0..n` with a causal order and a symmetric conflict relation.
/// The order is given by generating pairs and closed on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventStructure {
    ids: Vec<i64>,
    causal: Vec<(usize, usize)>,
    // up[a] = { b : a ≤ b }, down[b] = { a : a ≤ b }
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    conflict: Vec<BitSet>,
}

impl EventStructure {
    /// Builds the structure; `causal` pairs `(a, b)` mean `a ≤ b`. Axioms
    /// are checked separately by [`validate`].
    pub fn new(n: usize, causal: &[(usize, usize)], conflict: &[(usize, usize)]) -> Result<Self> {
        for &(a, b) in causal.iter().chain(conflict) {
            for e in [a, b] {
                if e >= n {
                    return Err(Error::UnknownEvent(e));
                }
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in causal {
            succ[a].push(b);
        }
        let mut up = Vec::with_capacity(n);
        for a in 0..n {
            let mut seen = BitSet::new(n);
            seen.insert(a);
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if !seen.contains(y) {
                        seen.insert(y);
                        stack.push(y);
                    }
                }
            }
            up.push(seen);
        }
        let mut down = vec![BitSet::new(n); n];
        for (a, s) in up.iter().enumerate() {
            for b in s.iter() {
                down[b].insert(a);
            }
        }
        let mut conf = vec![BitSet::new(n); n];
        for &(a, b) in conflict {
            conf[a].insert(b);
            conf[b].insert(a);
        }
        let mut causal = causal.to_vec();
        causal.sort_unstable();
        causal.dedup();
        Ok(EventStructure {
            ids: (0..n as i64).collect(),
            causal,
            up,
            down,
            conflict: conf,
        })
    }

    pub fn with_ids(mut self, ids: Vec<i64>) -> Result<Self> {
        if ids.len() != self.len() {
            return Err(Error::Schema(format!("{} ids for {} events", ids.len(), self.len())));
        }
        self.ids = ids;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn ids(&self) -> &[i64] {
        &self.ids
    }

    /// `a ≤ b` (reflexive).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn in_conflict(&self, a: usize, b: usize) -> bool {
        self.conflict[a].contains(b)
    }

    pub fn causes(&self) -> &[(usize, usize)] {
        &self.causal
    }

    pub fn down_set(&self, e: usize) -> &BitSet {
        &self.down[e]
    }

    pub fn conflicts_of(&self, e: usize) -> &BitSet {
        &self.conflict[e]
    }

    /// Covering pairs `a < b` with nothing strictly between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.up[a].iter() {
                if a != b && !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn conflict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.conflict[a].iter() {
                if a <= b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn check(&self, e: usize) -> Result<()> {
        if e < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownEvent(e))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AxiomViolation {
    /// `a < b` and `b < a` for distinct events.
    CausalCycle { a: usize, b: usize },
    SelfConflict { e: usize },
    /// `e ⌣ e1` and `e1 ≤ e2` but not `e ⌣ e2`.
    InheritanceViolation { e: usize, e1: usize, e2: usize },
}

/// First violated axiom, or `None` for a valid structure.
pub fn validate(es: &EventStructure) -> Option<AxiomViolation> {
    let n = es.len();
    for a in 0..n {
        for b in es.up[a].iter() {
            if a < b && es.leq(b, a) {
                return Some(AxiomViolation::CausalCycle { a, b });
            }
        }
    }
    for e in 0..n {
        if es.in_conflict(e, e) {
            return Some(AxiomViolation::SelfConflict { e });
        }
    }
    for e in 0..n {
        for e1 in es.conflict[e].iter() {
            for e2 in es.up[e1].iter() {
                if !es.in_conflict(e, e2) {
                    return Some(AxiomViolation::InheritanceViolation { e, e1, e2 });
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairRelation {
    /// First event strictly below the second.
    Before,
    /// Second event strictly below the first.
    After,
    Conflict { minimal: bool },
    Concurrent,
}

impl PairRelation {
    /// Concurrent or in minimal conflict.
    pub fn is_independent(&self) -> bool {
        matches!(self, PairRelation::Concurrent | PairRelation::Conflict { minimal: true })
    }
}

pub fn pair_relation(es: &EventStructure, a: usize, b: usize) -> Result<PairRelation> {
    es.check(a)?;
    es.check(b)?;
    if a == b {
        return Err(Error::SameEvent(a));
    }
    Ok(relation(es, a, b))
}

fn relation(es: &EventStructure, a: usize, b: usize) -> PairRelation {
    if es.leq(a, b) {
        PairRelation::Before
    } else if es.leq(b, a) {
        PairRelation::After
    } else if es.in_conflict(a, b) {
        // minimal unless some other e ≤ a conflicts with b, or e ≤ b with a
        let inherited = |x: usize, y: usize| es.down[x].iter().any(|e| e != x && e != y && es.in_conflict(e, y));
        PairRelation::Conflict {
            minimal: !inherited(a, b) && !inherited(b, a),
        }
    } else {
        PairRelation::Concurrent
    }
}

/// Events adjacent when concurrent or in minimal conflict.
pub fn orthogonality_graph(es: &EventStructure) -> Graph {
    let n = es.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if relation(es, a, b).is_independent() {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("pairs are distinct")
}

/// Largest set of pairwise independent events (clique number of the
/// orthogonality graph; a single event counts as an independent set).
pub fn degree(es: &EventStructure) -> usize {
    if es.is_empty() {
        return 0;
    }
    let r = max_clique(&orthogonality_graph(es), Budget::unlimited());
    r.clique.len()
}

/// Hasse diagram of the configurations, pointed at the empty configuration.
#[derive(Clone, Debug)]
pub struct Domain {
    pub oriented: OrientedGraph,
    /// Configurations by vertex id, in order of size then discovery.
    pub configurations: Vec<BitSet>,
    /// The event added along each edge.
    pub edge_event: Vec<usize>,
}

impl Domain {
    pub fn graph(&self) -> &Graph {
        self.oriented.base()
    }

    pub fn vertex_of(&self) -> HashMap<BitSet, VertexId> {
        self.configurations.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect()
    }
}

/// Enumerates the conflict-free down-closed event sets; fails once more
/// than `limit` exist.
pub fn domain(es: &EventStructure, limit: usize) -> Result<Domain> {
    let n = es.len();
    let mut configs: Vec<BitSet> = vec![BitSet::new(n)];
    let mut index: HashMap<BitSet, VertexId> = HashMap::new();
    index.insert(configs[0].clone(), 0);
    let mut arcs: Vec<(VertexId, VertexId, usize)> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for e in 0..n {
            let cur = &configs[c];
            if cur.contains(e) || cur.intersects(&es.conflict[e]) {
                continue;
            }
            let mut below = es.down[e].clone();
            below.remove(e);
            if !below.is_subset(cur) {
                continue;
            }
            let mut next = cur.clone();
            next.insert(e);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if configs.len() >= limit {
                        return Err(Error::DomainTooLarge(limit));
                    }
                    let id = configs.len();
                    index.insert(next.clone(), id);
                    configs.push(next);
                    queue.push_back(id);
                    id
                }
            };
            arcs.push((c, id, e));
        }
    }
    let graph = Graph::new(configs.len(), arcs.iter().map(|&(a, b, _)| (a, b)))?;
    let mut edge_event = vec![0; graph.edge_count()];
    for &(a, b, e) in &arcs {
        edge_event[graph.edge_id(a, b).expect("arc is an edge")] = e;
    }
    let oriented = OrientedGraph::new(graph, 0)?;
    Ok(Domain {
        oriented,
        configurations: configs,
        edge_event,
    })
}

/// Events are the Θ-classes; `i ≤ j` when `i` separates the basepoint from
/// `j`; conflict between compatible classes neither of which separates the other.
pub fn event_structure_from_pointed(og: &OrientedGraph, t: &ThetaStructure) -> Result<EventStructure> {
    if og.basepoint() != t.basepoint() {
        return Err(Error::Schema(format!(
            "orientation at {} but classes built at {}",
            og.basepoint(),
            t.basepoint()
        )));
    }
    let m = t.class_count();
    let mut sep = vec![vec![false; m]; m];
    for (i, row) in sep.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i != j && separates(t, i, j);
        }
    }
    let mut causal = Vec::new();
    let mut conflict = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if sep[i][j] {
                causal.push((i, j));
            }
            if i < j && !t.crosses(i, j) && !sep[i][j] && !sep[j][i] {
                conflict.push((i, j));
            }
        }
    }
    let es = EventStructure::new(m, &causal, &conflict)?;
    if let Some(v) = validate(&es) {
        return Err(Error::ConstructionBug(format!("event structure of a pointed graph is invalid: {v:?}")));
    }
    Ok(es)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelingVerdict {
    Nice,
    /// Two independent events share a label.
    Clash { a: usize, b: usize },
}

/// Accepts iff independent events carry distinct labels.
pub fn check_nice_labeling(es: &EventStructure, labels: &BTreeMap<usize, usize>) -> Result<LabelingVerdict> {
    for e in 0..es.len() {
        if !labels.contains_key(&e) {
            return Err(Error::PartialLabeling(e));
        }
    }
    for (a, b) in orthogonality_graph(es).edges().iter().copied() {
        if labels[&a] == labels[&b] {
            return Ok(LabelingVerdict::Clash { a, b });
        }
    }
    Ok(LabelingVerdict::Nice)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeVerdict {
    /// Two edges leaving this vertex share a color.
    pub determinism_witness: Option<(VertexId, EdgeId, EdgeId)>,
    /// Opposite edges of this square differ in color.
    pub concurrency_witness: Option<[VertexId; 4]>,
    /// An edge of the pointed contact graph whose classes share a color.
    pub contact_witness: Option<(usize, usize)>,
}

impl BridgeVerdict {
    pub fn edge_rules_hold(&self) -> bool {
        self.determinism_witness.is_none() && self.concurrency_witness.is_none()
    }

    pub fn contact_rule_holds(&self) -> bool {
        self.contact_witness.is_none()
    }

    pub fn agree(&self) -> bool {
        self.edge_rules_hold() == self.contact_rule_holds()
    }
}

/// Colors each edge by the color of its class and runs both tests: the
/// determinism and concurrency rules on the directed graph, and properness
/// on the pointed contact graph.
pub fn labeling_edge_coloring_bridge(og: &OrientedGraph, t: &ThetaStructure, coloring: &[Option<usize>]) -> Result<BridgeVerdict> {
    let m = t.class_count();
    let mut color = Vec::with_capacity(m);
    for i in 0..m {
        match coloring.get(i).copied().flatten() {
            Some(c) => color.push(c),
            None => return Err(Error::PartialColoring(i)),
        }
    }
    let g = og.base();
    let edge_color = |e: EdgeId| color[t.class_of(e)];
    let mut determinism_witness = None;
    'outer: for v in g.vertices() {
        let outs: Vec<EdgeId> = og.out_edges(v).collect();
        for (k, &e) in outs.iter().enumerate() {
            for &f in &outs[k + 1..] {
                if edge_color(e) == edge_color(f) {
                    determinism_witness = Some((v, e, f));
                    break 'outer;
                }
            }
        }
    }
    let mut concurrency_witness = None;
    for sq in squares(g) {
        let e = square_edges(g, &sq);
        if edge_color(e[0]) != edge_color(e[2]) || edge_color(e[1]) != edge_color(e[3]) {
            concurrency_witness = Some(sq);
            break;
        }
    }
    let pc = pointed_contact_graph(og, t);
    let contact_witness = pc.edges().iter().copied().find(|&(a, b)| color[a] == color[b]);
    Ok(BridgeVerdict {
        determinism_witness,
        concurrency_witness,
        contact_witness,
    })
}

/// Random valid event structure on `n` events: a random DAG, conflicts on
/// random incomparable pairs, closed under inheritance; draws that force a
/// conflict between comparable events are rejected.
pub fn random_event_structure(n: usize, causal_p: f64, conflict_p: f64, rng: &mut impl Rng) -> EventStructure {
    loop {
        let mut causal = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(causal_p) {
                    causal.push((a, b));
                }
            }
        }
        let base = EventStructure::new(n, &causal, &[]).expect("events in range");
        let mut seeds = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !base.leq(a, b) && !base.leq(b, a) && rng.gen_bool(conflict_p) {
                    seeds.push((a, b));
                }
            }
        }
        let mut conflict = Vec::new();
        let mut ok = true;
        for &(a, b) in &seeds {
            for x in base.up[a].iter() {
                for y in base.up[b].iter() {
                    if x == y || base.leq(x, y) || base.leq(y, x) {
                        ok = false;
                    }
                    conflict.push((x, y));
                }
            }
        }
        if !ok {
            continue;
        }
        let es = EventStructure::new(n, &causal, &conflict).expect("events in range");
        if validate(&es).is_none() {
            return es;
        }
    }
}

/// Seeded variant of [`random_event_structure`].
pub fn random_event_structure_seeded(n: usize, causal_p: f64, conflict_p: f64, seed: u64) -> EventStructure {
    random_event_structure(n, causal_p, conflict_p, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventStructureJson {
    pub events: Vec<i64>,
    pub causal: Vec<[i64; 2]>,
    pub conflict: Vec<[i64; 2]>,
}

impl EventStructure {
    pub fn to_json(&self) -> EventStructureJson {
        let id = |e: usize| self.ids[e];
        EventStructureJson {
            events: self.ids.clone(),
            causal: self.covering_pairs().into_iter().map(|(a, b)| [id(a), id(b)]).collect(),
            conflict: self
                .conflict_pairs()
                .into_iter()
                .map(|(a, b)| [id(a), id(b)])
                .collect(),
        }
    }

    pub fn from_json(json: &EventStructureJson) -> Result<Self> {
        let mut ids = json.events.clone();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Schema(format!("event {} declared twice", w[0])));
        }
        let index: HashMap<i64, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let look = |e: i64| {
            index
                .get(&e)
                .copied()
                .ok_or_else(|| Error::Schema(format!("undeclared event {e}")))
        };
        let causal = json
            .causal
            .iter()
            .map(|p| Ok((look(p[0])?, look(p[1])?)))
            .collect::<Result<Vec<_>>>()?;
        let conflict = json
            .conflict
            .iter()
            .map(|p| Ok((look(p[0])?, look(p[1])?)))
            .collect::<Result<Vec<_>>>()?;
        EventStructure::new(ids.len(), &causal, &conflict)?.with_ids(ids)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub labels: BTreeMap<String, i64>,
}

/// Reads `{"labels": {id: label}}` into a map from event index to label.
pub fn labeling_from_json(es: &EventStructure, json: &LabelingJson) -> Result<BTreeMap<usize, usize>> {
    let index: HashMap<i64, usize> = es.ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut out = BTreeMap::new();
    for (k, &v) in &json.labels {
        let id: i64 = k.parse().map_err(|_| Error::Schema(format!("event id {k:?} is not an integer")))?;
        let e = *index.get(&id).ok_or_else(|| Error::Schema(format!("undeclared event {id}")))?;
        let label = usize::try_from(v).map_err(|_| Error::Schema(format!("negative label {v}")))?;
        out.insert(e, label);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{is_median, MedianMode};
    use crate::theta::theta_classes;

    #[test]
    fn validation() {
        assert_eq!(validate(&EventStructure::new(0, &[], &[]).unwrap()), None);
        assert_eq!(validate(&EventStructure::new(2, &[], &[]).unwrap()), None);
        // 0 ⌣ 1, 1 ≤ 2, but 0 and 2 are not in conflict
        let es = EventStructure::new(3, &[(1, 2)], &[(0, 1)]).unwrap();
        assert_eq!(
            validate(&es),
            Some(AxiomViolation::InheritanceViolation { e: 0, e1: 1, e2: 2 })
        );
        let cyc = EventStructure::new(2, &[(0, 1), (1, 0)], &[]).unwrap();
        assert_eq!(validate(&cyc), Some(AxiomViolation::CausalCycle { a: 0, b: 1 }));
        assert!(matches!(EventStructure::new(1, &[(0, 3)], &[]), Err(Error::UnknownEvent(3))));
    }

    /// The quantifier over all events, written out literally.
    fn minimal_by_definition(es: &EventStructure, a: usize, b: usize) -> bool {
        es.in_conflict(a, b)
            && !(0..es.len()).any(|e| {
                e != a && e != b && ((es.leq(e, a) && es.in_conflict(e, b)) || (es.leq(e, b) && es.in_conflict(e, a)))
            })
    }

    #[test]
    fn pair_relations() {
        let chain = EventStructure::new(2, &[(0, 1)], &[]).unwrap();
        assert_eq!(pair_relation(&chain, 0, 1).unwrap(), PairRelation::Before);
        assert_eq!(pair_relation(&chain, 1, 0).unwrap(), PairRelation::After);
        let bare = EventStructure::new(2, &[], &[(0, 1)]).unwrap();
        assert_eq!(pair_relation(&bare, 0, 1).unwrap(), PairRelation::Conflict { minimal: true });
        // 0 ⌣ 1 minimal, 1 ≤ 2, so 0 ⌣ 2 is inherited
        let es = EventStructure::new(3, &[(1, 2)], &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(validate(&es), None);
        assert!(!minimal_by_definition(&es, 0, 2));
        assert_eq!(pair_relation(&es, 0, 2).unwrap(), PairRelation::Conflict { minimal: false });
        assert_eq!(pair_relation(&es, 0, 1).unwrap(), PairRelation::Conflict { minimal: minimal_by_definition(&es, 0, 1) });
        assert!(matches!(pair_relation(&es, 1, 1), Err(Error::SameEvent(1))));
        assert!(matches!(pair_relation(&es, 1, 9), Err(Error::UnknownEvent(9))));
    }

    #[test]
    fn orthogonality_graphs_and_degree() {
        let chain = EventStructure::new(3, &[(0, 1), (1, 2)], &[]).unwrap();
        assert_eq!(orthogonality_graph(&chain).edge_count(), 0);
        assert_eq!(degree(&chain), 1);
        let anti = EventStructure::new(4, &[], &[]).unwrap();
        assert_eq!(orthogonality_graph(&anti).edges(), Graph::complete(4).edges());
        assert_eq!(degree(&anti), 4);
        let pair = EventStructure::new(2, &[], &[(0, 1)]).unwrap();
        assert_eq!(orthogonality_graph(&pair).edges(), &[(0, 1)]);
    }

    #[test]
    fn small_domains() {
        let one = EventStructure::new(1, &[], &[]).unwrap();
        let d = domain(&one, 10).unwrap();
        assert_eq!(d.graph().edges(), &[(0, 1)]);
        assert_eq!(d.oriented.arc(0), (0, 1));

        let two = domain(&EventStructure::new(2, &[], &[]).unwrap(), 10).unwrap();
        assert_eq!(two.graph().vertex_count(), 4);
        assert_eq!(two.graph().edge_count(), 4);
        assert_eq!(two.oriented.out_degree(0), 2);

        let conf = domain(&EventStructure::new(2, &[], &[(0, 1)]).unwrap(), 10).unwrap();
        assert_eq!(conf.graph().vertex_count(), 3);
        assert_eq!(conf.oriented.out_degree(0), 2);

        assert!(matches!(
            domain(&EventStructure::new(5, &[], &[]).unwrap(), 31),
            Err(Error::DomainTooLarge(31))
        ));
    }

    #[test]
    fn from_pointed_graphs() {
        let c4 = Graph::cycle(4);
        let t = theta_classes(&c4, 0).unwrap();
        let es = event_structure_from_pointed(&OrientedGraph::new(c4, 0).unwrap(), &t).unwrap();
        assert_eq!(pair_relation(&es, 0, 1).unwrap(), PairRelation::Concurrent);

        let star = Graph::star(2);
        let t = theta_classes(&star, 0).unwrap();
        let es = event_structure_from_pointed(&OrientedGraph::new(star, 0).unwrap(), &t).unwrap();
        assert_eq!(pair_relation(&es, 0, 1).unwrap(), PairRelation::Conflict { minimal: true });

        let p3 = Graph::path(3);
        let t = theta_classes(&p3, 0).unwrap();
        let es = event_structure_from_pointed(&OrientedGraph::new(p3, 0).unwrap(), &t).unwrap();
        assert_eq!(pair_relation(&es, 0, 1).unwrap(), PairRelation::Before);
    }

    #[test]
    fn labelings() {
        let anti = EventStructure::new(2, &[], &[]).unwrap();
        let distinct: BTreeMap<usize, usize> = [(0, 0), (1, 1)].into();
        assert_eq!(check_nice_labeling(&anti, &distinct).unwrap(), LabelingVerdict::Nice);
        let same: BTreeMap<usize, usize> = [(0, 0), (1, 0)].into();
        assert_eq!(check_nice_labeling(&anti, &same).unwrap(), LabelingVerdict::Clash { a: 0, b: 1 });
        let partial: BTreeMap<usize, usize> = [(0, 0)].into();
        assert!(matches!(check_nice_labeling(&anti, &partial), Err(Error::PartialLabeling(1))));
    }

    #[test]
    fn bridge_on_a_square() {
        let c4 = Graph::cycle(4);
        let t = theta_classes(&c4, 0).unwrap();
        let og = OrientedGraph::new(c4, 0).unwrap();
        let same = labeling_edge_coloring_bridge(&og, &t, &[Some(0), Some(0)]).unwrap();
        assert_eq!(same.determinism_witness.map(|w| w.0), Some(0));
        assert!(same.agree() && !same.contact_rule_holds());
        let distinct = labeling_edge_coloring_bridge(&og, &t, &[Some(0), Some(1)]).unwrap();
        assert!(distinct.edge_rules_hold() && distinct.contact_rule_holds());
        assert!(matches!(
            labeling_edge_coloring_bridge(&og, &t, &[Some(0)]),
            Err(Error::PartialColoring(1))
        ));
    }

    #[test]
    fn random_structures_are_valid_and_domains_median() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..8 {
            let es = random_event_structure(n, 0.3, 0.3, &mut rng);
            assert_eq!(validate(&es), None);
            let d = domain(&es, 10_000).unwrap();
            assert!(is_median(d.graph(), MedianMode::Exhaustive).unwrap().is_median());
        }
    }

    #[test]
    fn json_roundtrip() {
        let es = EventStructure::new(3, &[(1, 2)], &[(0, 1), (0, 2)])
            .unwrap()
            .with_ids(vec![10, 20, 30])
            .unwrap();
        let j = es.to_json();
        assert_eq!(j.causal, vec![[20, 30]]);
        assert_eq!(j.conflict, vec![[10, 20], [10, 30]]);
        let back = EventStructure::from_json(&j).unwrap();
        assert_eq!(back.to_json(), j);
        let labels = LabelingJson {
            labels: [("10".to_string(), 0), ("20".to_string(), 1), ("30".to_string(), 1)].into(),
        };
        let map = labeling_from_json(&back, &labels).unwrap();
        assert_eq!(check_nice_labeling(&back, &map).unwrap(), LabelingVerdict::Nice);
    }
}
