use std::path::Path;

use medianlab::amalgam::GateCheck;
use medianlab::lifting::{amalgam_certificate, class_census, ClassCensus};
use medianlab::metric::{is_gated, is_gated_sampled, is_median, MedianMode};
use medianlab::theta::{theta_classes_with, ConvexityCheck};
use medianlab::{
    cube_condition, intersection_graph, max_clique, orient_at_alpha, roundtrip_pointed, verify_lemma_crossing,
    verify_lemma_degree, verify_lemma_intersection, Budget, CubeVerdict, Error, Graph, OrientedGraph, ThetaStructure,
};

use crate::input::{self, Loaded};
use crate::{CliResult, Failure, Mode};

const GRAPH_CHECKS: [&str; 5] = ["median", "theta", "gated", "cube", "roundtrip"];
const LIFT_CHECKS: [&str; 6] = ["orientation", "census", "crossing", "intersection", "degree", "amalgam"];

/// Vertex count up to which the roundtrip materializes the domain.
const ROUNDTRIP_LIMIT: usize = 200_000;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn resource(e: &Error) -> bool {
    matches!(e, Error::ResourceLimit(_) | Error::DomainTooLarge(_))
}

pub fn cmd_verify(path: &Path, checks: &str, mode: Mode, samples: u64, seed: u64, dot: Option<&Path>) -> CliResult<()> {
    let loaded = input::load(path)?;
    let g = loaded.graph()?;
    let is_lift = matches!(loaded, Loaded::Lift(..));
    let requested: Vec<&'static str> = if checks == "all" {
        GRAPH_CHECKS
            .iter()
            .chain(if is_lift { &LIFT_CHECKS[..] } else { &[] })
            .copied()
            .collect()
    } else {
        let mut out = Vec::new();
        for c in checks.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            let known = GRAPH_CHECKS.iter().chain(LIFT_CHECKS.iter()).find(|&&k| k == c);
            match known {
                Some(&k) if LIFT_CHECKS.contains(&k) && !is_lift => {
                    return Err(Failure::new(1, format!("check `{k}` needs a lifted graph")));
                }
                Some(&k) => out.push(k),
                None => return Err(Failure::new(1, format!("unknown check `{c}`"))),
            }
        }
        out
    };

    let bp = loaded.basepoint();
    let convexity = match mode {
        Mode::Exhaustive => ConvexityCheck::Exhaustive,
        Mode::Sampled => ConvexityCheck::Sampled {
            sources: samples.clamp(1, 32) as usize,
            seed,
        },
    };
    let theta = theta_classes_with(&g, bp, convexity);
    let og = OrientedGraph::new(g.clone(), bp);
    let mut outcomes = Vec::new();
    for &name in &requested {
        let result = run_check(name, &loaded, &g, &theta, &og, mode, samples, seed);
        match result {
            Ok((pass, detail)) => outcomes.push(Outcome { name, pass, detail }),
            Err(e) if resource(&e) => return Err(e.into()),
            Err(e) => outcomes.push(Outcome {
                name,
                pass: false,
                detail: e.to_string(),
            }),
        }
    }

    if let Some(path) = dot {
        match &loaded {
            Loaded::Lift(lg, _) => input::write_dot(path, lg)?,
            _ => {
                let text = match &theta {
                    Ok(t) => medianlab::to_dot(&g, Some(t.class_map()), &[]),
                    Err(_) => medianlab::to_dot(&g, None, &[]),
                };
                input::write_text(path, &text)?;
            }
        }
    }

    println!("check\tverdict\tdetail");
    for o in &outcomes {
        println!("{}\t{}\t{}", o.name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(3, format!("failed checks: {}", failed.join(", "))))
    }
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    name: &str,
    loaded: &Loaded,
    g: &Graph,
    theta: &medianlab::Result<ThetaStructure>,
    og: &medianlab::Result<OrientedGraph>,
    mode: Mode,
    samples: u64,
    seed: u64,
) -> medianlab::Result<(bool, String)> {
    let t = || theta.as_ref().map_err(|e| Error::Schema(format!("no Θ-classes: {e}")));
    let og = || og.as_ref().map_err(|e| Error::Schema(format!("no orientation: {e}")));
    let lift = || match loaded {
        Loaded::Lift(lg, bh) => Ok((lg.as_ref(), bh)),
        _ => Err(Error::Schema("not a lifted graph".into())),
    };
    let census = || -> medianlab::Result<ClassCensus> { class_census(lift()?.0, t()?) };
    match name {
        "median" => {
            let m = match mode {
                Mode::Exhaustive => MedianMode::Exhaustive,
                Mode::Sampled => MedianMode::Sampled { count: samples, seed },
            };
            let v = is_median(g, m)?;
            Ok(match v {
                medianlab::MedianVerdict::Median { triplets_checked } => (true, format!("{triplets_checked} triplets")),
                medianlab::MedianVerdict::NotMedian {
                    triplet,
                    intersection_size,
                } => (false, format!("triplet {triplet:?} has {intersection_size} medians")),
            })
        }
        "theta" => {
            let t = t()?;
            Ok((true, format!("{} classes, transitive, convex halfspaces", t.class_count())))
        }
        "gated" => {
            let t = t()?;
            for i in 0..t.class_count() {
                let (a, b) = t.halfspaces(i);
                for (s, side) in [a, b].iter().enumerate() {
                    let v = match mode {
                        Mode::Exhaustive => is_gated(g, side)?,
                        Mode::Sampled => is_gated_sampled(g, side, 2, seed.wrapping_add((2 * i + s) as u64))?,
                    };
                    if let medianlab::metric::GatedVerdict::NotGated { vertex } = v {
                        return Ok((false, format!("halfspace {s} of class {i}: vertex {vertex} has no gate")));
                    }
                }
            }
            Ok((true, format!("{} halfspaces gated", 2 * t.class_count())))
        }
        "cube" => Ok(match cube_condition(g, &[0, 1]) {
            CubeVerdict::Holds => (true, "k = 0, 1".into()),
            CubeVerdict::Violation { k, vertex, directions } => {
                (false, format!("k = {k} at vertex {vertex}, directions {directions:?}"))
            }
        }),
        "roundtrip" => {
            let v = roundtrip_pointed(og()?, t()?, ROUNDTRIP_LIMIT)?;
            Ok((v.ok, v.detail.unwrap_or_else(|| "bijection onto the domain".into())))
        }
        "orientation" => {
            orient_at_alpha(lift()?.0)?;
            Ok((true, "distance orientation matches the construction".into()))
        }
        "census" => {
            let c = census()?;
            Ok((c.class_count == c.expected, format!("{} classes, expected {}", c.class_count, c.expected)))
        }
        "crossing" => Ok(match verify_lemma_crossing(lift()?.0) {
            None => (true, "no two lifted classes cross".into()),
            Some(sq) => (false, format!("square {sq:?} crosses two lifted classes")),
        }),
        "intersection" => {
            let bh = lift()?.1;
            Ok(match verify_lemma_intersection(og()?, t()?, &census()?, bh) {
                None => (true, "lifted contact graph equals the intersection graph".into()),
                Some(p) => (false, format!("boxes {p:?} disagree")),
            })
        }
        "degree" => {
            let (lg, bh) = lift()?;
            let omega = max_clique(&intersection_graph(bh), Budget::unlimited()).clique.len();
            let d = verify_lemma_degree(lg, og()?, omega);
            Ok((
                d.holds,
                format!(
                    "out-degree {} <= {}, degree {} <= {}",
                    d.max_out_degree, d.out_degree_bound, d.max_degree, d.degree_bound
                ),
            ))
        }
        "amalgam" => {
            let check = match mode {
                Mode::Exhaustive => GateCheck::Exact,
                Mode::Sampled => GateCheck::Sampled { count: 2, seed },
            };
            let c = amalgam_certificate(lift()?.0, check)?;
            Ok((true, format!("{} gated amalgams rebuild the lift", c.steps)))
        }
        _ => unreachable!("checks are validated"),
    }
}
