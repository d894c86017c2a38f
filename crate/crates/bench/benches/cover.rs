use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use nullcover::cover::{
    build_nullset, cover_padic_slalom, cover_product_slalom, find_translator, plan_blocks_padic,
    plan_blocks_product, random_slalom, verify_cover,
};
use nullcover::groups::CayleyTable;
use nullcover::structure::{dual, niceness_pipeline};
use nullcover::{Caps, FiniteAbelianGroup, GroupDescriptor, IndexSet, PadicContext, WidthFn};

fn translator(c: &mut Criterion) {
    let caps = Caps::default();
    let g = FiniteAbelianGroup::new(vec![2, 12]).unwrap();
    let table = CayleyTable::new(&g).unwrap();
    let a = IndexSet::prefix(24, 20);
    let s = [3, 17, 21, 22, 23];
    c.bench_function("find_translator Z2+Z12 n=3", |b| {
        b.iter(|| find_translator(&table, black_box(&a), black_box(&s), 3, &caps).unwrap())
    });
    let big = FiniteAbelianGroup::cyclic(4096).unwrap();
    let a = IndexSet::prefix(4096, 3800);
    let s = [1, 500, 4000, 4095, 2048, 7, 9];
    c.bench_function("find_translator Z4096 n=5", |b| {
        b.iter(|| find_translator(&big, black_box(&a), black_box(&s), 5, &caps).unwrap())
    });
}

fn covers(c: &mut Criterion) {
    let caps = Caps::default();
    let plan = plan_blocks_product(std::iter::repeat(2), 6).unwrap();
    let spec = build_nullset(&plan).unwrap();
    let slalom = random_slalom(&plan, WidthFn::Linear, 1).unwrap();
    c.bench_function("cover_product_slalom Z2^24 D=6", |b| {
        b.iter(|| cover_product_slalom(&spec, black_box(&slalom), &caps).unwrap())
    });
    let cert = cover_product_slalom(&spec, &slalom, &caps).unwrap();
    c.bench_function("verify_cover product D=6", |b| {
        b.iter(|| verify_cover(&spec, black_box(&cert.translate), &slalom, &caps).unwrap())
    });

    let plan = plan_blocks_padic(3, 6).unwrap();
    let spec = build_nullset(&plan).unwrap();
    let ctx = plan.padic_context().unwrap();
    let slalom = random_slalom(&plan, WidthFn::Half, 1).unwrap();
    c.bench_function("cover_padic_slalom p=3 D=6", |b| {
        b.iter(|| cover_padic_slalom(&ctx, &spec, black_box(&slalom), &caps).unwrap())
    });
}

fn padic_arithmetic(c: &mut Criterion) {
    let ctx = PadicContext::new(7, 256).unwrap();
    let x = ctx.number((0..256).map(|i| (i * 5 % 7) as u32).collect()).unwrap();
    let y = ctx.number((0..256).map(|i| (i * 3 % 7) as u32).collect()).unwrap();
    c.bench_function("padic_add p=7 L=256", |b| {
        b.iter(|| ctx.add(black_box(&x), black_box(&y)).unwrap())
    });
}

fn symbolic(c: &mut Criterion) {
    use GroupDescriptor::*;
    let d = FiniteSum {
        parts: vec![
            Int,
            Torus,
            Padic { p: 3 },
            ProdOmega {
                parts: vec![Cyclic { m: 2 }, Cyclic { m: 6 }],
            },
        ],
    };
    c.bench_function("dual", |b| b.iter(|| dual(black_box(&d))));
    c.bench_function("niceness_pipeline", |b| b.iter(|| niceness_pipeline(black_box(&d))));
}

criterion_group!(benches, translator, covers, padic_arithmetic, symbolic);
criterion_main!(benches);
