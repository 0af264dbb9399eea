use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use k3mat::curve::{named, WeierstrassModel};
use k3mat::exactnum::{BigRational, QuadElem};
use k3mat::lattice::reduced_forms;
use k3mat::mwlat::HeightContext;
use k3mat::nscat;
use k3mat::surface::search_with_workers;

fn search(c: &mut Criterion) {
    c.bench_function("search 125, one worker", |b| b.iter(|| search_with_workers(black_box(125), 1)));
}

fn group_law(c: &mut Criterion) {
    let e = WeierstrassModel::<BigRational>::generic_fiber();
    let p = named::p();
    c.bench_function("5P over Q(t)", |b| b.iter(|| e.mul(black_box(5), &p).unwrap()));
}

fn heights(c: &mut Criterion) {
    let e = WeierstrassModel::<QuadElem>::generic_fiber();
    let ctx = HeightContext::new(&e).unwrap();
    let p3 = e.add(&e.mul(3, &named::p()).unwrap(), &named::q()).unwrap();
    c.bench_function("height of 3P + Q", |b| b.iter(|| ctx.height(black_box(&p3)).unwrap()));
}

fn lattices(c: &mut Criterion) {
    c.bench_function("reduced forms of det 48", |b| b.iter(|| reduced_forms(black_box(48), true, true).unwrap()));
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    g.bench_function("classes of degree 2", |b| b.iter(|| nscat::enumerate_classes(black_box(2), 0).unwrap()));
    g.finish();
}

criterion_group!(benches, search, group_law, heights, lattices);
criterion_main!(benches);
