use nullcover::cover::{
    build_nullset, cover_product_slalom, cube_cover_check, find_translator, measure_bound,
    measure_upper, padic_cover_with_blocks, plan_blocks_padic, plan_blocks_product,
    random_slalom, size_window, verify_cover,
};
use nullcover::{
    Caps, CoverError, ExactRational, FiniteAbelianGroup, FiniteGroup, IndexSet, NullsetSpec,
    Slalom, Translate, WidthFn,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

/// Residue lists of a few presentations with order at most 200.
fn presentation() -> impl Strategy<Value = Vec<u64>> {
    prop::sample::select(vec![
        vec![2],
        vec![5],
        vec![24],
        vec![2, 2, 2],
        vec![3, 6],
        vec![4, 4, 4],
        vec![2, 3, 4],
        vec![65],
        vec![10, 10],
        vec![7, 27],
        vec![2, 2, 2, 2, 2, 2, 2],
    ])
}

proptest! {
    /// `g ∉ S − (G∖A)` exactly when `S ⊆ g + A`, and the returned `g` is the
    /// least such element.
    #[test]
    fn translator_matches_forbidden_set_definition(
        orders in presentation(),
        n in 0usize..6,
        a_seed in prop::collection::vec(any::<prop::sample::Index>(), 200),
        s_seed in prop::collection::vec(any::<prop::sample::Index>(), 8),
        s_len in 1usize..8,
    ) {
        let g = FiniteAbelianGroup::new(orders).unwrap();
        let order = g.order();
        let (lower, _) = size_window(n, order);
        // Remove `order − lower` elements chosen by the seed.
        let mut members: Vec<u64> = (0..order).collect();
        for idx in a_seed.iter().take((order - lower) as usize) {
            members.remove(idx.index(members.len()));
        }
        let a = IndexSet::from_indices(order, members).unwrap();
        let mut s: Vec<u64> = s_seed.iter().map(|i| i.index(order as usize) as u64).collect();
        s.truncate(s_len.min(n + 2));
        s.sort();
        s.dedup();

        let t = find_translator(&g, &a, &s, n, &caps()).unwrap();
        let forbidden: Vec<u64> = (0..order)
            .filter(|&x| (0..order).filter(|&c| !a.contains(c)).any(|c| s.iter().any(|&y| g.sub_index(y, c) == x)))
            .collect();
        for x in 0..order {
            let fits = s.iter().all(|&y| a.contains(g.sub_index(y, x)));
            prop_assert_eq!(fits, !forbidden.contains(&x));
        }
        prop_assert_eq!(t.forbidden, forbidden.len() as u64);
        prop_assert!(t.forbidden <= s.len() as u64 * (order - a.len()));
        prop_assert!(t.forbidden < order);
        let least = (0..order).find(|x| !forbidden.contains(x));
        prop_assert_eq!(Some(t.translator), least);
    }

    #[test]
    fn product_certificates_pass_verification(
        pattern in prop::sample::select(vec![vec![2u64], vec![3], vec![2, 3], vec![5, 2, 2]]),
        depth in 1usize..5,
        seed in any::<u64>(),
    ) {
        let plan = plan_blocks_product(pattern.into_iter().cycle(), depth).unwrap();
        let spec = build_nullset(&plan).unwrap();
        let slalom = random_slalom(&plan, WidthFn::Linear, seed).unwrap();
        let cert = cover_product_slalom(&spec, &slalom, &caps()).unwrap();
        prop_assert!(cert.verified);
        prop_assert_eq!(cert.checked_count as u128, slalom.point_count());
        let report = verify_cover(&spec, &cert.translate, &slalom, &caps()).unwrap();
        prop_assert!(report.covered);
        prop_assert!(report.counterexample.is_none());
    }

    #[test]
    fn padic_certificates_pass_verification(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        depth in 1usize..5,
        seed in any::<u64>(),
    ) {
        let plan = plan_blocks_padic(p, depth).unwrap();
        let spec = build_nullset(&plan).unwrap();
        let ctx = plan.padic_context().unwrap();
        let slalom = random_slalom(&plan, WidthFn::Half, seed).unwrap();
        let (cert, blocks, report) = padic_cover_with_blocks(&ctx, &spec, &slalom, &caps()).unwrap();
        prop_assert!(cert.verified && report.covered);
        for (n, (block, set)) in blocks.iter().zip(slalom.sets()).enumerate() {
            prop_assert!(block.enlarged.len() <= 2 * set.len());
            prop_assert!(2 * set.len() <= n + 2);
        }
        let carry = report.carry.unwrap();
        prop_assert_eq!(carry.block_checks, carry.carry_free + carry.carried);
        prop_assert_eq!(carry.block_checks, cert.checked_count * depth as u64);
    }
}

#[test]
fn corrupted_product_translate_yields_least_counterexample() {
    let plan = plan_blocks_product(std::iter::repeat(2), 2).unwrap();
    let spec = build_nullset(&plan).unwrap();
    let slalom = Slalom::new(WidthFn::Linear, vec![vec![6], vec![14, 15]]).unwrap();
    let cert = cover_product_slalom(&spec, &slalom, &caps()).unwrap();
    assert!(cert.verified);
    // Oracle: the least translator per block, by scanning every g.
    let blocks = plan.blocks();
    let mut expected = Vec::new();
    for (n, s) in slalom.sets().iter().enumerate() {
        let g = (0..blocks[n].order())
            .find(|&g| s.iter().all(|&x| spec.set(n).contains(blocks[n].sub_index(x, g))))
            .unwrap();
        let len = plan.block_len(n);
        expected.extend((0..len).rev().map(|k| (g >> k) & 1));
    }
    assert_eq!(cert.translate, Translate::Product { residues: expected });

    // Every translate of the 7-coordinate product, against a direct scan
    // that uses XOR as the block subtraction.
    let mut failures = 0;
    for g0 in 0..8u64 {
        for g1 in 0..16u64 {
            let residues: Vec<u64> = (0..3)
                .rev()
                .map(|k| (g0 >> k) & 1)
                .chain((0..4).rev().map(|k| (g1 >> k) & 1))
                .collect();
            let oracle = slalom.sets()[0]
                .iter()
                .flat_map(|&a| slalom.sets()[1].iter().map(move |&b| vec![a, b]))
                .find(|pt| {
                    !(spec.set(0).contains(pt[0] ^ g0) && spec.set(1).contains(pt[1] ^ g1))
                });
            let report =
                verify_cover(&spec, &Translate::Product { residues }, &slalom, &caps()).unwrap();
            assert_eq!(report.covered, oracle.is_none());
            assert_eq!(report.counterexample, oracle);
            failures += usize::from(!report.covered);
        }
    }
    assert!(failures > 0);
}

#[test]
fn padic_single_block_example() {
    let plan = plan_blocks_padic(2, 1).unwrap();
    let spec = build_nullset(&plan).unwrap();
    let ctx = plan.padic_context().unwrap();
    let slalom = Slalom::new(WidthFn::Half, vec![vec![3]]).unwrap();
    let (cert, blocks, report) = padic_cover_with_blocks(&ctx, &spec, &slalom, &caps()).unwrap();
    assert_eq!(blocks[0].enlarged, vec![3, 4]);
    assert_eq!(blocks[0].translator, 0);
    assert_eq!(cert.translate, Translate::Padic { digits: vec![0, 0, 0] });
    assert!(report.covered);

    // x + 1 sends 3 to 4, still inside A_0 = {0..5}.
    let plus_one = Translate::Padic { digits: vec![1, 0, 0] };
    assert!(verify_cover(&spec, &plus_one, &slalom, &caps()).unwrap().covered);
    // x = 3 sends 3 to 6.
    let plus_three = Translate::Padic { digits: vec![1, 1, 0] };
    let report = verify_cover(&spec, &plus_three, &slalom, &caps()).unwrap();
    assert!(!report.covered);
    assert_eq!(report.counterexample, Some(vec![3]));
}

#[test]
fn measure_is_bounded_and_strictly_decreasing() {
    for plan in [
        plan_blocks_padic(2, 40).unwrap(),
        plan_blocks_padic(3, 30).unwrap(),
        plan_blocks_product([3u64, 2].into_iter().cycle(), 30).unwrap(),
    ] {
        let spec = build_nullset(&plan).unwrap();
        let mut previous = ExactRational::from_integer(BigInt::from(1));
        for blocks in 1..=spec.depth() {
            let report = measure_upper(&spec, blocks).unwrap();
            assert!(report.measure <= report.bound);
            assert_eq!(report.bound, measure_bound(blocks));
            assert!(report.measure < previous);
            previous = report.measure;
        }
    }
}

#[test]
fn nullset_json_rejects_undersized_sets() {
    let plan = plan_blocks_padic(2, 1).unwrap();
    let spec = build_nullset(&plan).unwrap();
    let json = serde_json::to_value(&spec).unwrap();
    assert_eq!(json["A"], serde_json::json!([[0, 1, 2, 3, 4, 5]]));
    let mut small = json.clone();
    small["A"] = serde_json::json!([[0, 1, 2, 3, 4]]);
    assert!(serde_json::from_value::<NullsetSpec>(small).is_err());
    assert_eq!(serde_json::from_value::<NullsetSpec>(json).unwrap(), spec);
}

#[test]
fn cube_checks_against_counting() {
    let plan = plan_blocks_product([7u64, 3, 3], 2).unwrap();
    // Width-1 slaloms from the partition of each domain into singletons:
    // exactly the points of the cube, so the family covers it.
    let all: Vec<Slalom> = (0..7)
        .flat_map(|a| (0..9).map(move |b| (a, b)))
        .map(|(a, b)| Slalom::new(WidthFn::Table(vec![1, 1]), vec![vec![a], vec![b]]).unwrap())
        .collect();
    let report = cube_cover_check(&all, &plan, &caps()).unwrap();
    assert!(report.covered);
    assert_eq!(report.checked_count, 63);

    // Drop the slalom of point (4, 2): the least gap is that point.
    let partial: Vec<Slalom> = all
        .iter()
        .filter(|s| s.sets() != [vec![4], vec![2]])
        .cloned()
        .collect();
    let report = cube_cover_check(&partial, &plan, &caps()).unwrap();
    assert_eq!(report.witness, Some(vec![4, 2]));

    let report = cube_cover_check(&[], &plan, &caps()).unwrap();
    assert_eq!(report.witness, Some(vec![0, 0]));

    let full = Slalom::new(WidthFn::Table(vec![7, 9]), vec![(0..7).collect(), (0..9).collect()]).unwrap();
    assert!(cube_cover_check(&[full], &plan, &caps()).unwrap().covered);
}

#[test]
fn caps_abort_instead_of_sampling() {
    let plan = plan_blocks_product(std::iter::repeat(2), 4).unwrap();
    let spec = build_nullset(&plan).unwrap();
    let slalom = random_slalom(&plan, WidthFn::Linear, 1).unwrap();
    assert!(matches!(
        cover_product_slalom(&spec, &slalom, &Caps::new(1 << 20, 10)),
        Err(CoverError::CapExceeded { .. })
    ));
    assert!(matches!(
        cube_cover_check(&[slalom], &plan, &Caps::new(1 << 20, 100)),
        Err(CoverError::CapExceeded { .. })
    ));
}
