//! Full pipeline per family size, written as versioned JSON plus a table.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use medianlab::amalgam::GateCheck;
use medianlab::lifting::{amalgam_certificate, build_chain, class_census, lifted_contact_graph, verify_chain};
use medianlab::metric::{is_median, MedianMode};
use medianlab::theta::{theta_classes_with, ConvexityCheck};
use medianlab::{
    burling_family, chromatic_number, compact, contact_graph, intersection_graph, lift_family, orient_at_alpha,
    pointed_contact_graph, theta_classes, verify_lemma_crossing, verify_lemma_degree, verify_lemma_intersection, Budget,
    Graph, OrientedGraph,
};

use crate::input;
use crate::{CliResult, Failure};

const SCHEMA: &str = "medianlab/1";
const NODE_BUDGET: u64 = 5_000_000;
const EXHAUSTIVE_MAX: usize = 2000;
const CHAIN_MAX_VERTICES: usize = 1_000_000;

#[derive(Clone, Copy, Serialize)]
struct Bounds {
    lower: usize,
    upper: usize,
    exact: bool,
}

fn solve(g: &Graph) -> Bounds {
    let r = chromatic_number(g, Budget::nodes(NODE_BUDGET));
    Bounds {
        lower: r.lower_bound,
        upper: r.count,
        exact: r.optimal,
    }
}

#[derive(Serialize)]
struct Verdicts {
    orientation: bool,
    census: bool,
    crossing: bool,
    intersection: bool,
    degree: bool,
    out_degree_bound_attained: bool,
    median: String,
    amalgam: bool,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    boxes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid_dims: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_out_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clique_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_boxes: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_contact: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_pointed_contact: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_lifted_classes: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdicts: Option<Verdicts>,
    commands: Vec<String>,
}

#[derive(Serialize)]
struct ChainRow {
    blocks: usize,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    articulations: usize,
    articulation_out_degrees: Vec<usize>,
    max_out_degree: usize,
    contact_is_disjoint_union: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_pointed_contact: Option<Bounds>,
    chi_blocks: Vec<Bounds>,
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    seed: u64,
    node_budget: u64,
    rows: Vec<Row>,
    chain: ChainRow,
}

fn empty_row(n: usize, status: String) -> Row {
    Row {
        n,
        status,
        boxes: None,
        grid_dims: None,
        vertices: None,
        edges: None,
        classes: None,
        max_out_degree: None,
        max_degree: None,
        clique_number: None,
        chi_boxes: None,
        chi_contact: None,
        chi_pointed_contact: None,
        chi_lifted_classes: None,
        verdicts: None,
        commands: commands(n),
    }
}

fn commands(n: usize) -> Vec<String> {
    vec![
        format!("medianlab burling --n {n} --compact --out b{n}.json"),
        format!("medianlab lift --boxes b{n}.json --out lift{n}.json"),
        format!(
            "medianlab verify --graph lift{n}.json --mode {}",
            if n <= 2 { "exhaustive" } else { "sampled --samples 1000000 --seed 0" }
        ),
        format!("medianlab chromatic --graph lift{n}.json --target pointed-contact --budget {NODE_BUDGET}"),
    ]
}

fn row(n: usize) -> medianlab::Result<Row> {
    let bh = compact(&burling_family(n)?);
    let lg = lift_family(&bh)?;
    let nv = lg.graph.vertex_count();
    let orientation = orient_at_alpha(&lg);
    let og = match &orientation {
        Ok(og) => og.clone(),
        Err(_) => OrientedGraph::new(lg.graph.clone(), lg.alpha)?,
    };
    let check = if nv <= EXHAUSTIVE_MAX {
        ConvexityCheck::Exhaustive
    } else {
        ConvexityCheck::Sampled { sources: 16, seed: 0 }
    };
    let t = theta_classes_with(&lg.graph, lg.alpha, check)?;
    let census = class_census(&lg, &t);
    let ig = intersection_graph(&bh);
    let omega = medianlab::max_clique(&ig, Budget::unlimited()).clique.len();
    let degree = verify_lemma_degree(&lg, &og, omega);
    let pointed = pointed_contact_graph(&og, &t);
    let (intersection, lifted) = match &census {
        Ok(c) => (
            verify_lemma_intersection(&og, &t, c, &bh).is_none(),
            Some(solve(&lifted_contact_graph(&og, &t, c))),
        ),
        Err(_) => (false, None),
    };
    let median = if nv <= EXHAUSTIVE_MAX {
        match is_median(&lg.graph, MedianMode::Exhaustive)?.is_median() {
            true => "pass (exhaustive)".to_string(),
            false => "fail (exhaustive)".to_string(),
        }
    } else {
        match is_median(&lg.graph, MedianMode::Sampled { count: 1_000_000, seed: 0 })?.is_median() {
            true => "pass (1000000 sampled triplets)".to_string(),
            false => "fail (sampled)".to_string(),
        }
    };
    let gate = if nv <= EXHAUSTIVE_MAX {
        GateCheck::Exact
    } else {
        GateCheck::Sampled { count: 2, seed: 0 }
    };
    Ok(Row {
        n,
        status: "complete".into(),
        boxes: Some(bh.len()),
        grid_dims: Some(lg.grid.dims()),
        vertices: Some(nv),
        edges: Some(lg.graph.edge_count()),
        classes: Some(t.class_count()),
        max_out_degree: Some(degree.max_out_degree),
        max_degree: Some(degree.max_degree),
        clique_number: Some(omega),
        chi_boxes: Some(solve(&ig)),
        chi_contact: Some(solve(&contact_graph(&t))),
        chi_pointed_contact: Some(solve(&pointed)),
        chi_lifted_classes: lifted,
        verdicts: Some(Verdicts {
            orientation: orientation.is_ok(),
            census: census.is_ok(),
            crossing: verify_lemma_crossing(&lg).is_none(),
            intersection,
            degree: degree.holds,
            out_degree_bound_attained: degree.out_bound_attained,
            median,
            amalgam: amalgam_certificate(&lg, gate).is_ok(),
        }),
        commands: commands(n),
    })
}

fn chain_row(k: usize) -> ChainRow {
    let failed = |status: String| ChainRow {
        blocks: k,
        status,
        vertices: None,
        articulations: 0,
        articulation_out_degrees: vec![],
        max_out_degree: 0,
        contact_is_disjoint_union: false,
        chi_pointed_contact: None,
        chi_blocks: vec![],
    };
    let run = || -> medianlab::Result<ChainRow> {
        let chain = build_chain(k, CHAIN_MAX_VERTICES)?;
        let og = OrientedGraph::new(chain.graph.clone(), chain.alpha)?;
        let t = theta_classes(&chain.graph, chain.alpha)?;
        let (check, block_pcs, pc) = verify_chain(&chain, &og, &t)?;
        Ok(ChainRow {
            blocks: k,
            status: "complete".into(),
            vertices: Some(chain.graph.vertex_count()),
            articulations: check.articulations.len(),
            articulation_out_degrees: check.articulation_out_degrees,
            max_out_degree: check.max_out_degree,
            contact_is_disjoint_union: check.contact_is_disjoint_union,
            chi_pointed_contact: Some(solve(&pc)),
            chi_blocks: block_pcs.iter().map(solve).collect(),
        })
    };
    run().unwrap_or_else(|e| failed(e.to_string()))
}

fn fmt_bounds(b: Option<&Bounds>) -> String {
    match b {
        Some(b) if b.exact => b.upper.to_string(),
        Some(b) => format!("[{},{}]", b.lower, b.upper),
        None => "-".into(),
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

pub fn cmd_report(n_max: usize, out: &Path) -> CliResult<()> {
    if n_max == 0 {
        return Err(Failure::new(1, "n-max must be at least 1"));
    }
    let mut rows = Vec::new();
    let mut times = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let r = match row(n) {
            Ok(r) => r,
            Err(e) => empty_row(n, e.to_string()),
        };
        times.push(start.elapsed());
        let stop = r.status != "complete";
        rows.push(r);
        if stop {
            break;
        }
    }
    let start = Instant::now();
    let chain = chain_row(n_max.min(2));
    let chain_time = start.elapsed();
    let report = Report {
        schema: SCHEMA,
        seed: 0,
        node_budget: NODE_BUDGET,
        rows,
        chain,
    };
    input::write_json(out, &report)?;

    println!("n\tboxes\tgrid\tvertices\tclasses\tout\tdeg\tomega\tchi(B)\tchi(contact)\tchi(pointed)\tchecks\ttime\tstatus");
    for (r, t) in report.rows.iter().zip(&times) {
        let checks = r.verdicts.as_ref().map_or("-".into(), |v| {
            let all = v.orientation && v.census && v.crossing && v.intersection && v.degree && v.amalgam && v.median.starts_with("pass");
            if all { "pass" } else { "FAIL" }.to_string()
        });
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.1?}\t{}",
            r.n,
            opt(r.boxes),
            r.grid_dims.map_or("-".into(), |d| format!("{}x{}x{}", d[0], d[1], d[2])),
            opt(r.vertices),
            opt(r.classes),
            opt(r.max_out_degree),
            opt(r.max_degree),
            opt(r.clique_number),
            fmt_bounds(r.chi_boxes.as_ref()),
            fmt_bounds(r.chi_contact.as_ref()),
            fmt_bounds(r.chi_pointed_contact.as_ref()),
            checks,
            t,
            r.status
        );
    }
    let c = &report.chain;
    let blocks: Vec<String> = c.chi_blocks.iter().map(|b| fmt_bounds(Some(b))).collect();
    println!(
        "chain({})\tvertices {}\tcut vertices {} with out-degree {:?}\tmax out-degree {}\tchi(pointed) {} vs blocks [{}]\t{:.1?}\t{}",
        c.blocks,
        opt(c.vertices),
        c.articulations,
        c.articulation_out_degrees,
        c.max_out_degree,
        fmt_bounds(c.chi_pointed_contact.as_ref()),
        blocks.join(","),
        chain_time,
        c.status
    );
    let incomplete = report.rows.iter().any(|r| r.status != "complete") || c.status != "complete";
    if incomplete {
        return Err(Failure::new(2, "report is partial; see per-row status"));
    }
    Ok(())
}
