//! Axis-parallel boxes in 3-space and Burling's triangle-free box families
//! of growing chromatic number.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = Ratio<i128>;

fn q(n: i128, d: i128) -> Rational {
    Ratio::new(n, d)
}

/// Closed box `x[0]..=x[1] × y[0]..=y[1] × z[0]..=z[1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Box3 {
    pub ranges: [[Rational; 2]; 3],
}

impl Box3 {
    pub fn new(x: [Rational; 2], y: [Rational; 2], z: [Rational; 2]) -> Self {
        Box3 { ranges: [x, y, z] }
    }

    pub fn from_ints(x: [i64; 2], y: [i64; 2], z: [i64; 2]) -> Self {
        let r = |a: [i64; 2]| [Rational::from_integer(a[0] as i128), Rational::from_integer(a[1] as i128)];
        Box3::new(r(x), r(y), r(z))
    }

    pub fn lo(&self, axis: usize) -> Rational {
        self.ranges[axis][0]
    }

    pub fn hi(&self, axis: usize) -> Rational {
        self.ranges[axis][1]
    }

    pub fn is_degenerate(&self) -> bool {
        self.ranges.iter().any(|r| r[0] >= r[1])
    }

    pub fn contains_box(&self, other: &Box3) -> bool {
        (0..3).all(|k| self.lo(k) <= other.lo(k) && other.hi(k) <= self.hi(k))
    }

    pub fn contains_point(&self, p: &[Rational; 3]) -> bool {
        (0..3).all(|k| self.lo(k) <= p[k] && p[k] <= self.hi(k))
    }

    /// Integer endpoints, if every coordinate is an integer.
    pub fn int_ranges(&self) -> Option<[[i64; 2]; 3]> {
        let mut out = [[0i64; 2]; 3];
        for k in 0..3 {
            for s in 0..2 {
                let v = self.ranges[k][s];
                if !v.is_integer() {
                    return None;
                }
                out[k][s] = i64::try_from(*v.numer()).ok()?;
            }
        }
        Some(out)
    }
}

/// Closed boxes meet iff their intervals overlap on every axis; touching
/// faces, edges and corners count.
pub fn boxes_intersect(a: &Box3, b: &Box3) -> bool {
    (0..3).all(|k| a.lo(k) <= b.hi(k) && b.lo(k) <= a.hi(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxHypergraph {
    pub boxes: Vec<Box3>,
    pub bounding: Box3,
    /// Construction scaffolding; excluded from the intersection graph.
    pub probes: Vec<Box3>,
}

impl BoxHypergraph {
    pub fn new(boxes: Vec<Box3>, bounding: Box3) -> Result<Self> {
        let bh = BoxHypergraph {
            boxes,
            bounding,
            probes: Vec::new(),
        };
        bh.validate()?;
        Ok(bh)
    }

    /// Boxes non-degenerate and inside the bounding box, which has a corner
    /// at the origin.
    pub fn validate(&self) -> Result<()> {
        if self.bounding.is_degenerate() || (0..3).any(|k| !self.bounding.lo(k).is_zero()) {
            return Err(Error::Schema("bounding box must be non-degenerate with a corner at the origin".into()));
        }
        for (i, b) in self.boxes.iter().enumerate() {
            if b.is_degenerate() {
                return Err(Error::DegenerateBox(i));
            }
            if !self.bounding.contains_box(b) {
                return Err(Error::BoxOutsideBounds(i));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

pub fn intersection_graph(bh: &BoxHypergraph) -> Graph {
    let b = &bh.boxes;
    let mut edges = Vec::new();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if boxes_intersect(&b[i], &b[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(b.len(), edges).expect("pairs are distinct")
}

/// First triangle `i < j < k` of the graph, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for &(i, j) in g.edges() {
        if let Some(k) = g.neighbors(i).find(|&k| k > j && g.has_edge(j, k)) {
            return Some([i, j, k]);
        }
    }
    None
}

/// A probe `[x0, 1] × [y0, y1] × [0, t]`. Every box it meets spans the core
/// `[x0, a]` × `[y0, y1]` in x and y and ends below `f`; the slab `[f, t]`
/// above the probe's footprint is free.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Probe {
    x0: Rational,
    a: Rational,
    y0: Rational,
    y1: Rational,
    f: Rational,
    t: Rational,
}

impl Probe {
    fn to_box(&self) -> Box3 {
        Box3::new([self.x0, Rational::one()], [self.y0, self.y1], [Rational::zero(), self.t])
    }
}

/// Number of boxes and probes at each level `1..=level` of the recursion.
pub fn family_sizes(level: usize) -> Vec<(u128, u128)> {
    let mut out = Vec::new();
    let (mut b, mut p) = (1u128, 1u128);
    for _ in 0..level {
        out.push((b, p));
        (b, p) = (b.saturating_add(p.saturating_mul(b.saturating_add(p))), p.saturating_mul(p).saturating_mul(2));
    }
    out
}

/// Default cap on the number of boxes [`burling_family`] will build.
pub const DEFAULT_MAX_BOXES: usize = 5_000;

/// The family with chromatic number above `n`: level `n + 1` of the
/// recursion. Coordinates are shifted by one so that the bounding box
/// `[0, 3]³` touches no box.
pub fn burling_family(n: usize) -> Result<BoxHypergraph> {
    burling_family_with_limit(n, DEFAULT_MAX_BOXES)
}

pub fn burling_family_with_limit(n: usize, max_boxes: usize) -> Result<BoxHypergraph> {
    if n == 0 {
        return Err(Error::Schema("family index must be at least 1".into()));
    }
    let level = n + 1;
    let (boxes, _) = *family_sizes(level).last().expect("level >= 1");
    if boxes > max_boxes as u128 {
        return Err(Error::ResourceLimit(format!(
            "family {n} has {boxes} boxes, above the limit of {max_boxes}"
        )));
    }
    let (mut family, mut probes) = base_level();
    for _ in 1..level {
        (family, probes) = next_level(&family, &probes);
    }
    let one = Rational::one();
    let shift = |b: &Box3| {
        let mut r = b.ranges;
        for axis in &mut r {
            axis[0] += one;
            axis[1] += one;
        }
        Box3 { ranges: r }
    };
    let three = Rational::from_integer(3);
    let bh = BoxHypergraph {
        boxes: family.iter().map(shift).collect(),
        bounding: Box3::new([Rational::zero(), three], [Rational::zero(), three], [Rational::zero(), three]),
        probes: probes.iter().map(|p| shift(&p.to_box())).collect(),
    };
    bh.validate()?;
    verify_family(&bh, &family, &probes)?;
    Ok(bh)
}

fn base_level() -> (Vec<Box3>, Vec<Probe>) {
    let quarter = q(1, 4);
    let zero = Rational::zero();
    let one = Rational::one();
    let b = Box3::new([zero, quarter], [zero, one], [zero, quarter]);
    let p = Probe {
        x0: zero,
        a: quarter,
        y0: zero,
        y1: one,
        f: q(1, 2),
        t: one,
    };
    (vec![b], vec![p])
}

// Boxes of a level live in x ≤ 3/4 inside the core strips of their
// probes; the columns with x > 1/2 beyond the cores carry no boxes.
fn next_level(family: &[Box3], probes: &[Probe]) -> (Vec<Box3>, Vec<Probe>) {
    let k1 = q(1, 2);
    let k2 = q(3, 4);
    let one = Rational::one();
    let mut boxes = family.to_vec();
    let mut next = Vec::new();
    for p in probes {
        let my = (p.y1 - p.y0) / 8;
        let mz = (p.t - p.f) / 8;
        let lo = p.x0 + (p.a - p.x0) / 8;
        let hi = p.a;
        let (y0, y1) = (p.y0 + my, p.y1 - my);
        let (z0, z1) = (p.f + mz, p.t - mz);
        // Copy coordinates x ≤ 3/4 go into the probe's core, the rest
        // into the box-free columns to the right of 1/2.
        let fx = |x: Rational| {
            if x <= k2 {
                lo + (hi - lo) * x / k2
            } else {
                k1 + (one - k1) * (x - k2) / (one - k2)
            }
        };
        let fy = |y: Rational| y0 + (y1 - y0) * y;
        let fz = |z: Rational| z0 + (z1 - z0) * z;
        for b in family {
            boxes.push(Box3::new(
                [fx(b.lo(0)), fx(b.hi(0))],
                [fy(b.lo(1)), fy(b.hi(1))],
                [fz(b.lo(2)), fz(b.hi(2))],
            ));
        }
        let bx0 = fx(k1 + (k2 - k1) / 3);
        let ab = fx(k1 + (k2 - k1) * 2 / 3);
        for c in probes {
            let (qx0, qa) = (fx(c.x0), fx(c.a));
            let (qy0, qy1) = (fy(c.y0), fy(c.y1));
            let (qf, qt) = (fz(c.f), fz(c.t));
            let h = (qy1 - qy0) / 3;
            let vz1 = (qf + qt) / 2;
            // The new box meets exactly the copy boxes hit by this copy probe.
            boxes.push(Box3::new([qx0, ab], [qy1 - h, qy1], [z0, vz1]));
            // Sees the outer probe's boxes and the copy probe's boxes.
            next.push(Probe {
                x0: qx0,
                a: qa,
                y0: qy0,
                y1: qy0 + h,
                f: qf,
                t: qt,
            });
            // Sees the outer probe's boxes and the new box.
            next.push(Probe {
                x0: bx0,
                a: ab,
                y0: qy1 - h,
                y1: qy1,
                f: vz1,
                t: qt,
            });
        }
    }
    (boxes, next)
}

/// Triangle-freeness and independence of every probe's hit set; a failure
/// here is a bug in the recursion, not bad input.
fn verify_family(bh: &BoxHypergraph, family: &[Box3], probes: &[Probe]) -> Result<()> {
    let g = intersection_graph(bh);
    if let Some(t) = find_triangle(&g) {
        return Err(Error::ConstructionBug(format!("boxes {t:?} form a triangle")));
    }
    for (pi, p) in probes.iter().enumerate() {
        let pb = p.to_box();
        let hit: Vec<usize> = (0..family.len()).filter(|&i| boxes_intersect(&family[i], &pb)).collect();
        for (k, &i) in hit.iter().enumerate() {
            if let Some(&j) = hit[k + 1..].iter().find(|&&j| g.has_edge(i, j)) {
                return Err(Error::ConstructionBug(format!("probe {pi} meets adjacent boxes {i} and {j}")));
            }
        }
    }
    Ok(())
}

/// Rewrites every coordinate as its rank among all distinct coordinates
/// of that axis (boxes, probes and the bounding box together).
pub fn snap_to_grid(bh: &BoxHypergraph) -> BoxHypergraph {
    let all = || bh.boxes.iter().chain(&bh.probes).chain(std::iter::once(&bh.bounding));
    let mut lists: [Vec<Rational>; 3] = Default::default();
    for (axis, list) in lists.iter_mut().enumerate() {
        for b in all() {
            list.push(b.lo(axis));
            list.push(b.hi(axis));
        }
        list.sort_unstable();
        list.dedup();
    }
    let snap = |b: &Box3| {
        let mut r = b.ranges;
        for (axis, range) in r.iter_mut().enumerate() {
            for v in range.iter_mut() {
                let rank = lists[axis].binary_search(v).expect("coordinate is listed");
                *v = Rational::from_integer(rank as i128);
            }
        }
        Box3 { ranges: r }
    };
    BoxHypergraph {
        boxes: bh.boxes.iter().map(snap).collect(),
        bounding: snap(&bh.bounding),
        probes: bh.probes.iter().map(snap).collect(),
    }
}

/// Smallest integer realization of the boxes' interval orders: on each axis
/// a run of left endpoints not separated by a right endpoint shares one
/// slot `p`, left ends become `2p + 1` and right ends `2p + 2`. The bounding
/// box gets one free unit on every side. Probes are dropped.
pub fn compact(bh: &BoxHypergraph) -> BoxHypergraph {
    let m = bh.boxes.len();
    let mut out: Vec<[[i128; 2]; 3]> = vec![[[0; 2]; 3]; m];
    let mut top = [0i128; 3];
    for axis in 0..3 {
        // lefts sort before rights at equal coordinates so touching stays touching
        let mut ends: Vec<(Rational, usize, usize)> = Vec::with_capacity(2 * m);
        for (i, b) in bh.boxes.iter().enumerate() {
            ends.push((b.lo(axis), 0, i));
            ends.push((b.hi(axis), 1, i));
        }
        ends.sort_unstable();
        let mut p = 0i128;
        let mut after_right = false;
        for (_, side, i) in ends {
            if side == 0 && after_right {
                p += 1;
                after_right = false;
            }
            if side == 1 {
                after_right = true;
            }
            out[i][axis][side] = 2 * p + side as i128 + 1;
            top[axis] = top[axis].max(2 * p + 2);
        }
    }
    let r = |v: i128| Rational::from_integer(v);
    BoxHypergraph {
        boxes: out
            .iter()
            .map(|b| Box3::new([r(b[0][0]), r(b[0][1])], [r(b[1][0]), r(b[1][1])], [r(b[2][0]), r(b[2][1])]))
            .collect(),
        bounding: Box3::new([r(0), r(top[0] + 1)], [r(0), r(top[1] + 1)], [r(0), r(top[2] + 1)]),
        probes: Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Frac([i64; 2]),
}

impl RationalJson {
    fn from_rational(v: Rational) -> Self {
        let n = *v.numer() as i64;
        if *v.denom() == 1 {
            RationalJson::Int(n)
        } else {
            RationalJson::Frac([n, *v.denom() as i64])
        }
    }

    fn to_rational(self) -> Result<Rational> {
        match self {
            RationalJson::Int(n) => Ok(Rational::from_integer(n as i128)),
            RationalJson::Frac([_, 0]) => Err(Error::Schema("zero denominator".into())),
            RationalJson::Frac([n, d]) => Ok(Ratio::new(n as i128, d as i128)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub x: [RationalJson; 2],
    pub y: [RationalJson; 2],
    pub z: [RationalJson; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxHypergraphJson {
    pub boxes: Vec<BoxJson>,
    pub bounding: BoxJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<BoxJson>,
}

impl Box3 {
    pub fn to_json(&self) -> BoxJson {
        let f = |k: usize| [RationalJson::from_rational(self.lo(k)), RationalJson::from_rational(self.hi(k))];
        BoxJson { x: f(0), y: f(1), z: f(2) }
    }

    pub fn from_json(j: &BoxJson) -> Result<Self> {
        let f = |a: [RationalJson; 2]| -> Result<[Rational; 2]> { Ok([a[0].to_rational()?, a[1].to_rational()?]) };
        Ok(Box3::new(f(j.x)?, f(j.y)?, f(j.z)?))
    }
}

impl BoxHypergraph {
    pub fn to_json(&self) -> BoxHypergraphJson {
        BoxHypergraphJson {
            boxes: self.boxes.iter().map(Box3::to_json).collect(),
            bounding: self.bounding.to_json(),
            probes: self.probes.iter().map(Box3::to_json).collect(),
        }
    }

    pub fn from_json(j: &BoxHypergraphJson) -> Result<Self> {
        let bh = BoxHypergraph {
            boxes: j.boxes.iter().map(Box3::from_json).collect::<Result<_>>()?,
            bounding: Box3::from_json(&j.bounding)?,
            probes: j.probes.iter().map(Box3::from_json).collect::<Result<_>>()?,
        };
        bh.validate()?;
        Ok(bh)
    }
}
