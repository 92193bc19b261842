//! Clique number and chromatic number: exact branch-and-bound solvers with
//! node and wall-clock budgets, plus greedy colorings.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Search limits. Exhausting either makes a solver return bounds instead
/// of an exact answer; node limits keep results deterministic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            time_limit: None,
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            time_limit: None,
        }
    }

    pub fn time(limit: Duration) -> Self {
        Budget {
            max_nodes: None,
            time_limit: Some(limit),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(50_000_000)
    }
}

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one search node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        }
        if self.nodes % 4096 == 0 && self.budget.time_limit.is_some_and(|t| self.start.elapsed() > t) {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

pub fn is_clique(g: &Graph, set: &[VertexId]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub clique: Vec<VertexId>,
    pub exact: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringResult {
    /// Best proper coloring found; its color count is an upper bound.
    pub colors: Vec<usize>,
    pub count: usize,
    pub optimal: bool,
    /// Proven lower bound on the chromatic number.
    pub lower_bound: usize,
    /// Largest clique found.
    pub clique: Vec<VertexId>,
    pub nodes: u64,
}

type Bits = Vec<u64>;

fn bits_of(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}

fn adjacency_bits(g: &Graph) -> Vec<Bits> {
    let n = g.vertex_count();
    let mut out = vec![bits_of(n); n];
    for &(u, v) in g.edges() {
        out[u][v / 64] |= 1 << (v % 64);
        out[v][u / 64] |= 1 << (u % 64);
    }
    out
}

fn iter_bits(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(w * 64 + i)
        })
    })
}

/// Maximum clique by branch and bound; candidates are greedily colored and
/// the color classes bound the reachable clique size.
pub fn max_clique(g: &Graph, budget: Budget) -> CliqueResult {
    let n = g.vertex_count();
    let adj = adjacency_bits(g);
    let mut meter = Meter::new(budget);
    let mut best: Vec<VertexId> = if n > 0 { vec![0] } else { vec![] };
    // Seed with a greedy clique so the bound prunes from the start.
    for start in g.vertices() {
        let mut c = vec![start];
        let mut cand: Vec<VertexId> = g.neighbors(start).collect();
        cand.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for v in cand {
            if c.iter().all(|&u| g.has_edge(u, v)) {
                c.push(v);
            }
        }
        if c.len() > best.len() {
            best = c;
        }
    }
    let mut all = bits_of(n);
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut current = Vec::new();
    expand(&adj, &mut current, all, &mut best, &mut meter);
    best.sort_unstable();
    CliqueResult {
        clique: best,
        exact: !meter.exhausted,
        nodes: meter.nodes,
    }
}

fn expand(adj: &[Bits], current: &mut Vec<VertexId>, mut cand: Bits, best: &mut Vec<VertexId>, meter: &mut Meter) {
    if !meter.tick() {
        return;
    }
    // Greedy color classes over the candidates; vertices in order of color.
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut uncolored = cand.clone();
    let mut color = 0;
    while uncolored.iter().any(|&w| w != 0) {
        color += 1;
        let mut avail = uncolored.clone();
        loop {
            let Some(v) = iter_bits(&avail).next() else { break };
            avail[v / 64] &= !(1 << (v % 64));
            uncolored[v / 64] &= !(1 << (v % 64));
            for (a, b) in avail.iter_mut().zip(&adj[v]) {
                *a &= !b;
            }
            order.push((v, color));
        }
    }
    while let Some((v, c)) = order.pop() {
        if current.len() + c <= best.len() {
            return;
        }
        current.push(v);
        let next: Bits = cand.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
        if next.iter().all(|&w| w == 0) {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, current, next, best, meter);
        }
        current.pop();
        cand[v / 64] &= !(1 << (v % 64));
        if meter.exhausted {
            return;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOrder {
    /// Smallest-last order: repeatedly remove a minimum-degree vertex and
    /// color in reverse removal order.
    Degeneracy,
    Given(Vec<VertexId>),
}

fn degeneracy_order(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        removed[v] = true;
        out.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    out.reverse();
    out
}

fn color_in_order(g: &Graph, order: &[VertexId]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.vertex_count()];
    for &v in order {
        let used: Vec<usize> = g.neighbors(v).map(|w| colors[w]).filter(|&c| c != usize::MAX).collect();
        colors[v] = (0..).find(|c| !used.contains(c)).expect("some color is free");
    }
    colors
}

fn count_colors(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

pub fn greedy_coloring(g: &Graph, order: GreedyOrder) -> Result<ColoringResult> {
    let seq = match order {
        GreedyOrder::Degeneracy => degeneracy_order(g),
        GreedyOrder::Given(seq) => {
            let mut seen = vec![false; g.vertex_count()];
            for &v in &seq {
                if v >= seen.len() || seen[v] {
                    return Err(Error::InvalidOrder(format!("vertex {v} is out of range or repeated")));
                }
                seen[v] = true;
            }
            if let Some(v) = seen.iter().position(|&s| !s) {
                return Err(Error::InvalidOrder(format!("vertex {v} is missing")));
            }
            seq
        }
    };
    let colors = color_in_order(g, &seq);
    let count = count_colors(&colors);
    Ok(ColoringResult {
        colors,
        count,
        optimal: false,
        lower_bound: usize::from(g.vertex_count() > 0) + usize::from(g.edge_count() > 0),
        clique: Vec::new(),
        nodes: 0,
    })
}

/// DSATUR greedy: always color the vertex seeing the most distinct colors.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .expect("vertex left");
        let c = (0..).find(|c| !seen[v].contains(c)).expect("some color is free");
        colors[v] = c;
        for w in g.neighbors(v) {
            if !seen[w].contains(&c) {
                seen[w].push(c);
            }
        }
    }
    colors
}

enum Outcome {
    Colorable(Vec<usize>),
    NotColorable,
    OutOfBudget,
}

/// Decides `k`-colorability. Vertices of degree below `k` are peeled off
/// first and colored greedily afterwards.
fn k_colorable(g: &Graph, k: usize, meter: &mut Meter) -> Outcome {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::new();
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| deg[v] < k).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        peeled.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] + 1 == k {
                    stack.push(w);
                }
            }
        }
    }
    let core: Vec<VertexId> = (0..n).filter(|&v| !removed[v]).collect();
    let mut colors = vec![usize::MAX; n];
    if !core.is_empty() {
        let sub = g.induced(&core).expect("core vertices are valid");
        let mut search = Dsatur::new(&sub, k);
        match search.run(meter) {
            Some(true) => {
                for (i, &v) in core.iter().enumerate() {
                    colors[v] = search.color[i];
                }
            }
            Some(false) => return Outcome::NotColorable,
            None => return Outcome::OutOfBudget,
        }
    }
    for &v in peeled.iter().rev() {
        let used: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
        colors[v] = (0..k).find(|c| !used.contains(c)).expect("peeled vertex has a free color");
    }
    Outcome::Colorable(colors)
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // forbid[v * k + c] counts colored neighbors of v with color c
    forbid: Vec<u32>,
    sat: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.vertex_count();
        Dsatur {
            g,
            k,
            color: vec![usize::MAX; n],
            forbid: vec![0; n * k],
            sat: vec![0; n],
        }
    }

    fn assign(&mut self, v: VertexId, c: usize) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for w in self.g.neighbors(v) {
            let slot = &mut self.forbid[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.sat[w] == self.k && self.color[w] == usize::MAX {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: VertexId, c: usize) {
        self.color[v] = usize::MAX;
        for w in self.g.neighbors(v) {
            let slot = &mut self.forbid[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    /// `Some(found)` when the search finished, `None` when out of budget.
    fn run(&mut self, meter: &mut Meter) -> Option<bool> {
        let r = self.search(0, 0, meter);
        if meter.exhausted {
            None
        } else {
            Some(r)
        }
    }

    fn search(&mut self, colored: usize, used: usize, meter: &mut Meter) -> bool {
        let n = self.g.vertex_count();
        if colored == n {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex exists");
        // Colors beyond the first unused one are interchangeable.
        let top = (used + 1).min(self.k);
        for c in 0..top {
            if self.forbid[v * self.k + c] > 0 {
                continue;
            }
            let ok = self.assign(v, c);
            if ok && self.search(colored + 1, used.max(c + 1), meter) {
                return true;
            }
            self.unassign(v, c);
            if meter.exhausted {
                return false;
            }
        }
        false
    }
}

/// Exact chromatic number within `budget`, per connected component:
/// lower bound from a maximum clique, upper bound from DSATUR, then
/// k-colorability tests from the lower bound upward.
pub fn chromatic_number(g: &Graph, budget: Budget) -> ColoringResult {
    let n = g.vertex_count();
    let mut meter = Meter::new(budget);
    let mut colors = vec![0usize; n];
    let mut lower = usize::from(n > 0);
    let mut clique: Vec<VertexId> = Vec::new();
    let mut optimal = true;
    for comp in g.components() {
        let sub = g.induced(&comp).expect("component vertices are valid");
        let remaining = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(meter.nodes)),
            time_limit: budget.time_limit.map(|t| t.saturating_sub(meter.start.elapsed())),
        };
        let cq = max_clique(&sub, remaining);
        meter.nodes += cq.nodes;
        if !cq.exact {
            meter.exhausted = true;
        }
        if cq.clique.len() > clique.len() {
            clique = cq.clique.iter().map(|&i| comp[i]).collect();
        }
        let mut best = dsatur_greedy(&sub);
        let mut hi = count_colors(&best);
        let mut lo = cq.clique.len().max(1);
        while lo < hi {
            if meter.exhausted {
                break;
            }
            match k_colorable(&sub, lo, &mut meter) {
                Outcome::Colorable(c) => {
                    best = c;
                    hi = lo;
                }
                Outcome::NotColorable => lo += 1,
                Outcome::OutOfBudget => break,
            }
        }
        if lo < hi {
            optimal = false;
        }
        lower = lower.max(lo);
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = best[i];
        }
    }
    let count = count_colors(&colors);
    ColoringResult {
        colors,
        count,
        optimal: optimal && lower == count,
        lower_bound: lower,
        clique,
        nodes: meter.nodes,
    }
}
