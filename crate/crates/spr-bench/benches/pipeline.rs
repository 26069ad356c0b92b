//! End to end timings for the main pipeline stages: enumeration, both
//! stability routes, filtrations, polygon classification, and the sweep
//! generators backing `verify`.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use spr_bench::{running_poset, running_quiver};
use spr_core::{
    angle_stability_general, build_polygon, classify_segments, connected_posets,
    enumerate_indecomposables, hn_filtration, is_mu_stable, is_theta_stable, poset_of_quiver,
    theta_of, valid_extended_quivers,
};

fn enumeration(c: &mut Criterion) {
    let p = running_poset();
    c.bench_function("enumerate_indecomposables/running", |b| {
        b.iter(|| enumerate_indecomposables(black_box(&p)))
    });
    c.bench_function("connected_posets/5", |b| {
        b.iter(|| connected_posets(black_box(5)))
    });
}

fn stability_routes(c: &mut Criterion) {
    let p = running_poset();
    let objects = enumerate_indecomposables(&p);
    let kappa = vec![1i64; 7];
    c.bench_function("theta_stability/running_all", |b| {
        b.iter(|| {
            for u in &objects {
                let theta = theta_of(&p, u);
                black_box(is_theta_stable(&p, u, &theta));
            }
        })
    });
    c.bench_function("mu_stability/running_all", |b| {
        b.iter(|| {
            for u in &objects {
                let theta = theta_of(&p, u);
                black_box(is_mu_stable(&p, u, &theta, &kappa).unwrap());
            }
        })
    });
    let wiggle: Vec<i64> = (0..7).map(|i| i - 3).collect();
    c.bench_function("hn_filtration/running_all", |b| {
        b.iter(|| {
            for u in &objects {
                black_box(hn_filtration(&p, u, &wiggle, &kappa).unwrap());
            }
        })
    });
}

fn geometry(c: &mut Criterion) {
    let eq = running_quiver();
    let poly = build_polygon(&eq.quiver);
    c.bench_function("classify_segments/running", |b| {
        b.iter(|| classify_segments(black_box(&poly), black_box(&eq)).unwrap())
    });
    let p = poset_of_quiver(&eq);
    let objects = enumerate_indecomposables(&p);
    c.bench_function("angle_stability/running_all", |b| {
        b.iter(|| {
            for u in &objects {
                black_box(angle_stability_general(&poly, &p, u));
            }
        })
    });
}

fn sweep(c: &mut Criterion) {
    c.bench_function("valid_extended_quivers/5", |b| {
        b.iter(|| valid_extended_quivers(black_box(5)))
    });
    c.bench_function("angle_sweep/k4", |b| {
        b.iter(|| {
            for eq in valid_extended_quivers(4) {
                let poly = build_polygon(&eq.quiver);
                let p = poset_of_quiver(&eq);
                for u in enumerate_indecomposables(&p) {
                    black_box(angle_stability_general(&poly, &p, &u));
                }
            }
        })
    });
}

criterion_group!(benches, enumeration, stability_routes, geometry, sweep);
criterion_main!(benches);
