//! Shortest-path metric: distances, intervals, the triple-interval median
//! test, convexity and gatedness.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, UNREACHABLE};

/// Largest vertex count accepted by the exhaustive median test.
pub const EXHAUSTIVE_MEDIAN_LIMIT: usize = 2500;

pub fn all_distances(g: &Graph, u: VertexId) -> Result<Vec<u32>> {
    g.check_vertex(u)?;
    Ok(g.bfs(u))
}

/// `I(u,v)`, sorted.
pub fn interval(g: &Graph, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let du = g.bfs(u);
    let dv = g.bfs(v);
    let d = du[v];
    if d == UNREACHABLE {
        return Err(Error::Disconnected);
    }
    Ok(g.vertices()
        .filter(|&x| du[x] != UNREACHABLE && du[x] + dv[x] == d)
        .collect())
}

/// Dense all-pairs distance table for small graphs.
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        let mut d = vec![0u16; n * n];
        for s in g.vertices() {
            let row = g.bfs(s);
            for (t, &x) in row.iter().enumerate() {
                if x == UNREACHABLE {
                    return Err(Error::Disconnected);
                }
                d[s * n + t] = x as u16;
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v] as u32
    }

    pub fn row(&self, u: VertexId) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MedianMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MedianVerdict {
    Median { triplets_checked: u64 },
    NotMedian { triplet: [VertexId; 3], intersection_size: usize },
}

impl MedianVerdict {
    pub fn is_median(&self) -> bool {
        matches!(self, MedianVerdict::Median { .. })
    }
}

/// Checks that `I(x,y) ∩ I(y,z) ∩ I(z,x)` is a singleton for every triplet
/// (exhaustive) or for `count` reproducible random triplets (sampled).
pub fn is_median(g: &Graph, mode: MedianMode) -> Result<MedianVerdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match mode {
        MedianMode::Exhaustive => median_exhaustive(g),
        MedianMode::Sampled { count, seed } => median_sampled(g, count, seed),
    }
}

fn median_exhaustive(g: &Graph) -> Result<MedianVerdict> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_MEDIAN_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "exhaustive median test limited to {EXHAUSTIVE_MEDIAN_LIMIT} vertices, got {n}"
        )));
    }
    let dm = DistanceMatrix::new(g)?;
    let words = n.div_ceil(64).max(1);
    // Interval bit sets for all unordered pairs, row-major over u < v.
    let pair_index = |u: usize, v: usize| -> usize { u * n - u * (u + 1) / 2 + (v - u - 1) };
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; pairs * words];
    for u in 0..n {
        let ru = dm.row(u);
        for v in u + 1..n {
            let rv = dm.row(v);
            let d = ru[v];
            let base = pair_index(u, v) * words;
            let slot = &mut bits[base..base + words];
            for w in 0..n {
                if ru[w] + rv[w] == d {
                    slot[w >> 6] |= 1 << (w & 63);
                }
            }
        }
    }
    let contains = |u: usize, v: usize, w: usize| -> bool {
        let base = pair_index(u, v) * words;
        bits[base + (w >> 6)] & (1 << (w & 63)) != 0
    };
    let mut checked = 0u64;
    for x in 0..n {
        for y in x + 1..n {
            let bxy = pair_index(x, y) * words;
            for z in y + 1..n {
                checked += 1;
                // One vertex between the other two is their unique median.
                if contains(x, y, z) || contains(x, z, y) || contains(y, z, x) {
                    continue;
                }
                let bxz = pair_index(x, z) * words;
                let byz = pair_index(y, z) * words;
                let mut count = 0usize;
                for k in 0..words {
                    count += (bits[bxy + k] & bits[bxz + k] & bits[byz + k]).count_ones() as usize;
                    if count > 1 {
                        break;
                    }
                }
                if count != 1 {
                    return Ok(MedianVerdict::NotMedian {
                        triplet: [x, y, z],
                        intersection_size: triple_intersection(&dm, x, y, z).len(),
                    });
                }
            }
        }
    }
    Ok(MedianVerdict::Median {
        triplets_checked: checked,
    })
}

fn triple_intersection(dm: &DistanceMatrix, x: usize, y: usize, z: usize) -> Vec<usize> {
    (0..dm.len())
        .filter(|&w| {
            dm.get(x, w) + dm.get(w, y) == dm.get(x, y)
                && dm.get(y, w) + dm.get(w, z) == dm.get(y, z)
                && dm.get(z, w) + dm.get(w, x) == dm.get(z, x)
        })
        .collect()
}

/// Byte budget for cached distance rows and layer indexes in sampled mode.
pub const SAMPLED_ROW_BUDGET: usize = 768 << 20;

struct SourceRow {
    dist: Vec<u16>,
    /// Vertices sorted by distance from the source.
    order: Vec<u32>,
    /// `order[layer[d]..layer[d + 1]]` are the vertices at distance `d`.
    layer: Vec<u32>,
}

impl SourceRow {
    fn new(g: &Graph, s: VertexId) -> Result<Self> {
        let d = g.bfs(s);
        let max = d.iter().copied().max().unwrap_or(0);
        if max == UNREACHABLE {
            return Err(Error::Disconnected);
        }
        if max >= u16::MAX as u32 {
            return Err(Error::ResourceLimit(format!("diameter {max} too large for sampled mode")));
        }
        let mut layer = vec![0u32; max as usize + 2];
        for &x in &d {
            layer[x as usize + 1] += 1;
        }
        for i in 1..layer.len() {
            layer[i] += layer[i - 1];
        }
        let mut fill = layer.clone();
        let mut order = vec![0u32; d.len()];
        for (w, &x) in d.iter().enumerate() {
            order[fill[x as usize] as usize] = w as u32;
            fill[x as usize] += 1;
        }
        Ok(SourceRow {
            dist: d.iter().map(|&x| x as u16).collect(),
            order,
            layer,
        })
    }

    fn at(&self, r: u32) -> &[u32] {
        let r = r as usize;
        if r + 1 >= self.layer.len() {
            return &[];
        }
        &self.order[self.layer[r] as usize..self.layer[r + 1] as usize]
    }
}

fn median_sampled(g: &Graph, count: u64, seed: u64) -> Result<MedianVerdict> {
    let n = g.vertex_count();
    if n < 3 {
        return median_exhaustive(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Triplets are drawn from a seeded pool of sources whose BFS rows are
    // cached; the pool shrinks on large graphs to stay within the row budget.
    let by_count = 1 + (count as f64).cbrt().ceil() as usize * 4;
    let by_memory = SAMPLED_ROW_BUDGET / (6 * n).max(1);
    let pool_size = n.min(by_count.min(by_memory)).max(3);
    let mut pool: Vec<usize> = Vec::with_capacity(pool_size);
    while pool.len() < pool_size {
        let v = rng.gen_range(0..n);
        if !pool.contains(&v) {
            pool.push(v);
        }
    }
    pool.sort_unstable();
    let rows: Vec<SourceRow> = pool.iter().map(|&v| SourceRow::new(g, v)).collect::<Result<_>>()?;
    for _ in 0..count {
        let mut t = [0usize; 3];
        loop {
            for slot in &mut t {
                *slot = rng.gen_range(0..pool.len());
            }
            if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
                break;
            }
        }
        let (rx, ry, rz) = (&rows[t[0]], &rows[t[1]], &rows[t[2]]);
        let (x, y, z) = (pool[t[0]], pool[t[1]], pool[t[2]]);
        let (dxy, dyz, dzx) = (rx.dist[y] as u32, ry.dist[z] as u32, rz.dist[x] as u32);
        let sum = dxy + dyz + dzx;
        // every vertex of I(x,y) ∩ I(y,z) ∩ I(z,x) lies at distance
        // (dxy + dzx - dyz) / 2 from x; scan the smallest such layer
        let cands = [
            (rx, (dxy + dzx).saturating_sub(dyz) / 2),
            (ry, (dxy + dyz).saturating_sub(dzx) / 2),
            (rz, (dyz + dzx).saturating_sub(dxy) / 2),
        ];
        let (row, r) = cands.iter().min_by_key(|(row, r)| row.at(*r).len()).expect("three candidates");
        let hits = |limit: usize| {
            row.at(*r)
                .iter()
                .filter(|&&w| {
                    let w = w as usize;
                    2 * (rx.dist[w] as u32 + ry.dist[w] as u32 + rz.dist[w] as u32) == sum
                })
                .take(limit)
                .count()
        };
        if sum % 2 != 0 || hits(2) != 1 {
            let mut trip = [x, y, z];
            trip.sort_unstable();
            return Ok(MedianVerdict::NotMedian {
                triplet: trip,
                intersection_size: if sum % 2 != 0 { 0 } else { hits(usize::MAX) },
            });
        }
    }
    Ok(MedianVerdict::Median {
        triplets_checked: count,
    })
}

/// Returns a violating triple `(u, v, w)` with `u, v ∈ set`, `w ∈ I(u,v) \ set`,
/// or `None` when `set` is convex.
pub fn convexity_violation(g: &Graph, set: &[VertexId]) -> Result<Option<[VertexId; 3]>> {
    let n = g.vertex_count();
    let mut member = vec![false; n];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    for &s in set {
        let d = g.bfs(s);
        // `via[v]` is a member whose shortest paths from `s` pass through `v`.
        let mut via: Vec<Option<VertexId>> = (0..n).map(|v| member[v].then_some(v)).collect();
        let mut order: Vec<VertexId> = g.vertices().filter(|&v| d[v] != UNREACHABLE).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(d[v]));
        for &v in &order {
            let Some(t) = via[v] else { continue };
            for w in g.neighbors(v) {
                if d[w] + 1 == d[v] {
                    if !member[w] {
                        return Ok(Some([s, t, w]));
                    }
                    via[w].get_or_insert(t);
                }
            }
        }
    }
    Ok(None)
}

pub fn is_convex(g: &Graph, set: &[VertexId]) -> Result<bool> {
    Ok(convexity_violation(g, set)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GatedVerdict {
    /// `(vertex, gate)` for every checked vertex outside the set.
    Gated { gates: Vec<(VertexId, VertexId)> },
    NotGated { vertex: VertexId },
}

impl GatedVerdict {
    pub fn is_gated(&self) -> bool {
        matches!(self, GatedVerdict::Gated { .. })
    }
}

fn outside_of(g: &Graph, set: &[VertexId]) -> Result<Vec<VertexId>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut member = vec![false; g.vertex_count()];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    Ok(g.vertices().filter(|&v| !member[v]).collect())
}

/// Exact gatedness test: every vertex needs a member lying on a shortest
/// path to each member.
pub fn is_gated(g: &Graph, set: &[VertexId]) -> Result<GatedVerdict> {
    let outside = outside_of(g, set)?;
    gated_on(g, set, &outside)
}

/// Gatedness restricted to `count` pseudorandom outside vertices.
pub fn is_gated_sampled(g: &Graph, set: &[VertexId], count: usize, seed: u64) -> Result<GatedVerdict> {
    let outside = outside_of(g, set)?;
    if outside.len() <= count {
        return gated_on(g, set, &outside);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick: Vec<VertexId> = (0..count).map(|_| outside[rng.gen_range(0..outside.len())]).collect();
    pick.sort_unstable();
    pick.dedup();
    gated_on(g, set, &pick)
}

fn gated_on(g: &Graph, set: &[VertexId], check: &[VertexId]) -> Result<GatedVerdict> {
    let mut gate_rows: HashMap<VertexId, Vec<u32>> = HashMap::new();
    let mut gates = Vec::with_capacity(check.len());
    for &u in check {
        let du = g.bfs(u);
        let near = set.iter().map(|&s| du[s]).min().unwrap_or(UNREACHABLE);
        if near == UNREACHABLE {
            return Err(Error::Disconnected);
        }
        let mut nearest = set.iter().copied().filter(|&s| du[s] == near);
        let gate = nearest.next().expect("set is non-empty");
        if nearest.next().is_some() {
            return Ok(GatedVerdict::NotGated { vertex: u });
        }
        let dg = gate_rows.entry(gate).or_insert_with(|| g.bfs(gate));
        if set.iter().any(|&s| du[s] != du[gate] + dg[s]) {
            return Ok(GatedVerdict::NotGated { vertex: u });
        }
        gates.push((u, gate));
    }
    Ok(GatedVerdict::Gated { gates })
}
