use criterion::{black_box, criterion_group, criterion_main, Criterion};

use medianlab::metric::{is_median, MedianMode};
use medianlab::{
    burling_family, chromatic_number, intersection_graph, lift_family, pointed_contact_graph, theta_classes, Budget,
    OrientedGraph,
};
use medianlab_bench::{family, lifted};

fn burling(c: &mut Criterion) {
    c.bench_function("burling_family(3)", |b| b.iter(|| burling_family(black_box(3)).unwrap()));
}

fn lift(c: &mut Criterion) {
    let bh = family(2);
    c.bench_function("lift B(2)", |b| b.iter(|| lift_family(black_box(&bh)).unwrap()));
}

fn theta(c: &mut Criterion) {
    let lg = lifted(2);
    c.bench_function("theta classes of lift B(2)", |b| b.iter(|| theta_classes(black_box(&lg.graph), lg.alpha).unwrap()));
    c.bench_function("exhaustive median check of lift B(1)", |b| {
        let g = lifted(1).graph;
        b.iter(|| is_median(black_box(&g), MedianMode::Exhaustive).unwrap())
    });
}

fn chromatic(c: &mut Criterion) {
    let ig = intersection_graph(&burling_family(3).unwrap());
    c.bench_function("chromatic number of B(3) intersection graph", |b| {
        b.iter(|| chromatic_number(black_box(&ig), Budget::unlimited()))
    });
    let lg = lifted(2);
    let t = theta_classes(&lg.graph, lg.alpha).unwrap();
    let og = OrientedGraph::new(lg.graph.clone(), lg.alpha).unwrap();
    let pc = pointed_contact_graph(&og, &t);
    c.bench_function("chromatic number of pointed contact graph of lift B(2)", |b| {
        b.iter(|| chromatic_number(black_box(&pc), Budget::unlimited()))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = burling, lift, theta, chromatic
}
criterion_main!(benches);
