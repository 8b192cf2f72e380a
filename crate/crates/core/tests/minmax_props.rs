use std::collections::{BTreeSet, HashSet};

use celltransfer::minmax::{all_skew_pairs, minmax, skew_transfer, vset_incomparability_check, SkewPair, SkewSetup};
use celltransfer::tableaux::{respects, weight, EnumBounds, Tableaux};
use proptest::prelude::*;

fn padded(p: &[u32], k: usize) -> Vec<u32> {
    (0..k).map(|i| p.get(i).copied().unwrap_or(0)).collect()
}

/// Cells of a skew shape from its padded rows, 1-based.
fn cells_of(outer: &[u32], inner: &[u32]) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for (i, (&o, &n)) in outer.iter().zip(inner).enumerate() {
        for j in n + 1..=o {
            out.insert((i as u32 + 1, j));
        }
    }
    out
}

fn row_wise(a: &[u32], b: &[u32], f: fn(u32, u32) -> u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

/// Shapes from componentwise max and min of the padded partitions, cell
/// counts conserved, and the difference set empty exactly when min/max are
/// the wedge and vee of the anchored shapes.
fn check_shapes(sp: &SkewPair) {
    let k = sp.k();
    let (l, m, n, r) = (padded(sp.lam(), k), padded(sp.mu(), k), padded(sp.nu(), k), padded(sp.rho(), k));
    let mm = minmax(sp).unwrap();
    let max_cells = cells_of(&row_wise(&l, &n, u32::max), &row_wise(&m, &r, u32::max));
    let min_cells = cells_of(&row_wise(&l, &n, u32::min), &row_wise(&m, &r, u32::min));
    assert_eq!(mm.maxshape.cell_set(), max_cells, "{sp:?}");
    assert_eq!(mm.minshape.cell_set(), min_cells, "{sp:?}");
    assert_eq!(
        max_cells.len() + min_cells.len(),
        cells_of(&l, &m).len() + cells_of(&n, &r).len()
    );
    let setup = SkewSetup::new(sp).unwrap();
    let plan = setup.plan();
    let anchored = plan.wedge() == setup.min_set() && plan.vee() == setup.max_set();
    assert_eq!(anchored, mm.vset.is_empty(), "{sp:?}");
    assert!(vset_incomparability_check(sp).unwrap(), "{sp:?}");
}

#[test]
fn shapes_of_all_small_pairs() {
    let mut nonempty = 0;
    for (k, part) in [(1, 4), (2, 3), (3, 2)] {
        for sp in all_skew_pairs(k, part) {
            check_shapes(&sp);
            nonempty += usize::from(!minmax(&sp).unwrap().vset.is_empty());
        }
    }
    assert!(nonempty > 0);
}

#[test]
fn two_row_transfers_are_injective() {
    let ncap = 3;
    for sp in all_skew_pairs(2, 3) {
        let setup = SkewSetup::new(&sp).unwrap();
        let lp = setup.grid().labelled();
        let us: Vec<_> = Tableaux::new(lp, setup.q(), ncap, EnumBounds::default()).unwrap().collect();
        let ts: Vec<_> = Tableaux::new(lp, setup.r(), ncap, EnumBounds::default()).unwrap().collect();
        let mut seen = HashSet::new();
        for u in &us {
            for t in &ts {
                let (up, lo) = skew_transfer(&sp, u, t).unwrap();
                assert_eq!(up.domain(), setup.max_set());
                assert_eq!(lo.domain(), setup.min_set());
                assert!(respects(lp, &up) && respects(lp, &lo));
                assert_eq!(
                    weight(u, ncap).add(&weight(t, ncap)),
                    weight(&up, ncap).add(&weight(&lo, ncap))
                );
                assert!(seen.insert((up, lo)), "{sp:?} {u:?} {t:?}");
            }
        }
    }
}

fn arb_partition(k: usize, max_part: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..=max_part, k).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn arb_skew(k: usize, max_part: u32) -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (arb_partition(k, max_part), arb_partition(k, max_part)).prop_map(|(a, b)| {
        let outer = row_wise(&a, &b, u32::max);
        let inner = row_wise(&a, &b, u32::min);
        (outer, inner)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_pairs(k in 1usize..=5, a in arb_skew(5, 5), b in arb_skew(5, 5)) {
        let cut = |p: &[u32]| p[..k].to_vec();
        let sp = SkewPair::new(&cut(&a.0), &cut(&a.1), &cut(&b.0), &cut(&b.1), k).unwrap();
        check_shapes(&sp);
    }
}
