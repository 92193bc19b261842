//! Gromov's cube condition in its vertex-link form for k = 0 and k = 1.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubeVerdict {
    Holds,
    /// Three `(k+2)`-cubes at `vertex` spanned by subsets of `directions`
    /// that do not lie in a common `(k+3)`-cube.
    Violation { k: usize, vertex: VertexId, directions: Vec<VertexId> },
}

impl CubeVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CubeVerdict::Holds)
    }
}

/// Whether the neighbors `dirs` of `v` span a cube at `v`: some assignment
/// of a vertex to every subset of `dirs`, adjacent along each direction.
pub fn spans_cube(g: &Graph, v: VertexId, dirs: &[VertexId]) -> bool {
    let d = dirs.len();
    let mut corner = vec![usize::MAX; 1 << d];
    corner[0] = v;
    for (i, &a) in dirs.iter().enumerate() {
        if !g.has_edge(v, a) {
            return false;
        }
        corner[1 << i] = a;
    }
    let mut order: Vec<usize> = (1..1usize << d).filter(|m| m.count_ones() >= 2).collect();
    order.sort_by_key(|m| (m.count_ones(), *m));
    fill(g, &order, 0, &mut corner)
}

fn fill(g: &Graph, order: &[usize], pos: usize, corner: &mut [VertexId]) -> bool {
    let Some(&mask) = order.get(pos) else { return true };
    let low = mask.trailing_zeros() as usize;
    let anchor = corner[mask & !(1 << low)];
    let candidates: Vec<VertexId> = g
        .neighbors(anchor)
        .filter(|&x| {
            (0..usize::BITS as usize)
                .filter(|b| mask & (1 << b) != 0)
                .all(|b| g.has_edge(x, corner[mask & !(1 << b)]))
                && !corner.contains(&x)
        })
        .collect();
    for x in candidates {
        corner[mask] = x;
        if fill(g, order, pos + 1, corner) {
            return true;
        }
    }
    corner[mask] = usize::MAX;
    false
}

/// For k = 0: three squares at a vertex pairwise sharing edges span a 3-cube.
/// For k = 1: three 3-cubes at a vertex pairwise sharing squares (hence
/// jointly an edge) span a 4-cube. Values of k above 1 are vacuous here.
pub fn cube_condition(g: &Graph, dims: &[usize]) -> CubeVerdict {
    for v in g.vertices() {
        let nb: Vec<VertexId> = g.neighbors(v).collect();
        let d = nb.len();
        let square = |i: usize, j: usize| spans_cube(g, v, &[nb[i], nb[j]]);
        let mut sq = vec![false; d * d];
        for i in 0..d {
            for j in i + 1..d {
                sq[i * d + j] = square(i, j);
                sq[j * d + i] = sq[i * d + j];
            }
        }
        let mut cube3 = std::collections::HashMap::new();
        for i in 0..d {
            for j in i + 1..d {
                if !sq[i * d + j] {
                    continue;
                }
                for k in j + 1..d {
                    if sq[i * d + k] && sq[j * d + k] {
                        let c = spans_cube(g, v, &[nb[i], nb[j], nb[k]]);
                        if !c && dims.contains(&0) {
                            return CubeVerdict::Violation {
                                k: 0,
                                vertex: v,
                                directions: vec![nb[i], nb[j], nb[k]],
                            };
                        }
                        cube3.insert((i, j, k), c);
                    }
                }
            }
        }
        if !dims.contains(&1) {
            continue;
        }
        let is3 = |a: usize, b: usize, c: usize| cube3.get(&(a, b, c)).copied().unwrap_or(false);
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    for e in c + 1..d {
                        let present = [is3(a, b, c), is3(a, b, e), is3(a, c, e), is3(b, c, e)];
                        if present.iter().filter(|&&x| x).count() >= 3
                            && !spans_cube(g, v, &[nb[a], nb[b], nb[c], nb[e]])
                        {
                            return CubeVerdict::Violation {
                                k: 1,
                                vertex: v,
                                directions: vec![nb[a], nb[b], nb[c], nb[e]],
                            };
                        }
                    }
                }
            }
        }
    }
    CubeVerdict::Holds
}
