mod common;

use std::collections::{BTreeMap, BTreeSet};

use celltransfer::catalogue;
use celltransfer::genfunc::kfunc;
use celltransfer::poset::{convex_subposets, wedge, ConvexSubposet, Poset};
use celltransfer::tableaux::{enumerate, respects, weight, Tableau};
use celltransfer::tlabel::{
    cylindric_labelling, restrict_with_ids, young_labelling, CylindricShape, Extended, SkewShape,
    StepFunction, TLabelledPoset,
};
use celltransfer::ElemSet;
use proptest::prelude::*;

fn complement_check(lp: &TLabelledPoset, ncap: u32) {
    let n = lp.len();
    let listed: Vec<Tableau> = enumerate(lp, ncap).unwrap().collect();
    let mut sorted = listed.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted, listed, "enumeration is strictly increasing");
    let listed: BTreeSet<Vec<u32>> = listed.iter().map(|t| t.values().to_vec()).collect();
    for a in common::assignments(n, ncap) {
        let t = Tableau::new(ElemSet::full(n), a.clone()).unwrap();
        let expected = common::brute_respects(lp, &a);
        assert_eq!(respects(lp, &t), expected, "{a:?}");
        assert_eq!(listed.contains(&a), expected, "{a:?}");
    }
}

#[test]
fn enumeration_is_exactly_the_valid_assignments() {
    for e in catalogue::posets(5) {
        for lp in catalogue::weak_strict_labellings(&e.poset) {
            for ncap in 1..=3 {
                complement_check(&lp, ncap);
            }
        }
        for lp in catalogue::mixed_labellings(&e.poset, 3, 60) {
            complement_check(&lp, 3);
        }
    }
}

#[test]
fn negative_and_infinite_table_entries() {
    let p = Poset::chain(2);
    let f = StepFunction::table(vec![
        Extended::Finite(-1),
        Extended::Finite(0),
        Extended::Infinity,
    ])
    .unwrap();
    let lp = TLabelledPoset::new(p, vec![((0, 1), f)]).unwrap();
    complement_check(&lp, 3);
    let all: Vec<_> = enumerate(&lp, 3).unwrap().collect();
    // Only the top value 3 admits anything below it.
    assert_eq!(all.len(), 3);
    assert!(all.iter().all(|t| t.get(1) == Some(3)));
}

#[test]
fn linear_extensions_follow_the_hook_length_formula() {
    for n in 1..=6 {
        for lam in common::partitions(n) {
            let lp = young_labelling(&SkewShape::from_parts(&lam, &[]).unwrap());
            assert_eq!(
                common::linear_extensions(lp.poset()),
                common::hook_length(&lam),
                "{lam:?}"
            );
        }
    }
}

#[test]
fn restriction_commutes_with_wedge() {
    let lp = young_labelling(&SkewShape::from_parts(&[3, 3], &[]).unwrap());
    let p = lp.poset();
    let subsets = convex_subposets(p).unwrap();
    for &q in &subsets {
        for &r in &subsets {
            let u = q.union(r);
            let hull = p.down_of(u).union(u).intersection(p.up_of(u).union(u));
            let cq = ConvexSubposet::new(p, q).unwrap();
            let cr = ConvexSubposet::new(p, r).unwrap();
            let w = wedge(&cq, &cr).unwrap();
            let (direct, direct_ids) = restrict_with_ids(&lp, &w).unwrap();

            let (sub, ids) = restrict_with_ids(&lp, &ConvexSubposet::new(p, hull).unwrap()).unwrap();
            let local = |s: ElemSet| -> ElemSet {
                ids.iter().enumerate().filter(|(_, &g)| s.contains(g)).map(|(k, _)| k).collect()
            };
            let sq = ConvexSubposet::new(sub.poset(), local(q)).unwrap();
            let sr = ConvexSubposet::new(sub.poset(), local(r)).unwrap();
            let sw = wedge(&sq, &sr).unwrap();
            let (inner, inner_ids) = restrict_with_ids(&sub, &sw).unwrap();

            let edges = |lp: &TLabelledPoset, map: &dyn Fn(usize) -> usize| -> BTreeMap<(usize, usize), StepFunction> {
                lp.labels().map(|((a, b), f)| ((map(a), map(b)), f.clone())).collect()
            };
            let a = edges(&direct, &|i| direct_ids[i]);
            let b = edges(&inner, &|i| ids[inner_ids[i]]);
            assert_eq!(a, b, "Q={q:?} R={r:?}");
        }
    }
}

#[test]
fn cylindric_shape_in_one_domain_is_a_transposed_young_shape() {
    for (outer, inner) in [(&[3, 2, 2][..], &[1][..]), (&[2, 2], &[]), (&[4, 1], &[2])] {
        let shape = SkewShape::from_parts(outer, inner).unwrap();
        let young = young_labelling(&shape);
        // Young cell (row, col) sits at (col - 1, row - 1).
        let cells: Vec<(i64, i64)> =
            shape.cells().iter().map(|&(i, j)| (j as i64 - 1, i as i64 - 1)).collect();
        let cyl = CylindricShape::new(10, 25, &cells).unwrap();
        let lp = cylindric_labelling(&cyl, false).unwrap();
        let cyl_id = |c: (i64, i64)| cyl.cells().iter().position(|&x| x == c).unwrap();
        let map: Vec<usize> = cells.iter().map(|&c| cyl_id(c)).collect();
        let young_edges: BTreeMap<(usize, usize), StepFunction> =
            young.labels().map(|((a, b), f)| ((map[a], map[b]), f.clone())).collect();
        let cyl_edges: BTreeMap<(usize, usize), StepFunction> =
            lp.labels().map(|((a, b), f)| ((a, b), f.clone())).collect();
        assert_eq!(young_edges, cyl_edges, "{shape}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_posets_enumerate_exactly(lp in common::arb_labelled(5), ncap in 1u32..=3) {
        complement_check(&lp, ncap);
    }

    /// Tables are accepted exactly when weakly increasing.
    #[test]
    fn table_monotonicity(v in proptest::collection::vec(-3i64..4, 1..6), inf in any::<bool>()) {
        let mut entries: Vec<Extended> = v.iter().map(|&x| Extended::Finite(x)).collect();
        if inf {
            entries.push(Extended::Infinity);
        }
        let increasing = v.windows(2).all(|w| w[0] <= w[1]);
        prop_assert_eq!(StepFunction::table(entries).is_ok(), increasing);
    }

    /// Relabelling values by an order-preserving injection moves the
    /// coefficients of the generating function accordingly.
    #[test]
    fn weight_is_equivariant(lp in common::arb_labelled(4), n in 1u32..=3, extra in 0u32..=2, seed in any::<u64>()) {
        let big = n + extra;
        // An increasing injection 1..n -> 1..big chosen from the seed.
        let mut image: Vec<u32> = (1..=big).collect();
        let mut s = seed;
        while image.len() > n as usize {
            let k = (s % image.len() as u64) as usize;
            image.remove(k);
            s /= 7;
            s += 1;
        }
        let small = kfunc(&lp, n).unwrap();
        let large = kfunc(&lp, big).unwrap();
        for (e, c) in small.terms() {
            let mut f = vec![0u32; big as usize];
            for (i, &x) in e.iter().enumerate() {
                f[image[i] as usize - 1] = x;
            }
            prop_assert_eq!(&large.coef(&f), c);
        }
        // Every element is counted exactly once.
        for t in enumerate(&lp, n).unwrap() {
            let w = weight(&t, n);
            prop_assert_eq!(w.total() as usize, lp.len());
        }
    }
}
