mod common;

use celltransfer::catalogue;
use celltransfer::poset::{
    convex_subposets, ideals, is_convex, vee, vee_prime, wedge, wedge_prime, ConvexSubposet, Poset,
};
use celltransfer::ElemSet;
use proptest::prelude::*;

fn cs(p: &Poset, s: ElemSet) -> ConvexSubposet<'_> {
    ConvexSubposet::new(p, s).unwrap()
}

fn check_pair(p: &Poset, q: ElemSet, r: ElemSet) -> Result<(), TestCaseError> {
    let (cq, cr) = (cs(p, q), cs(p, r));
    let w = wedge(&cq, &cr).unwrap();
    let v = vee(&cq, &cr).unwrap();
    prop_assert!(is_convex(p, w.members()));
    prop_assert!(is_convex(p, v.members()));
    prop_assert_eq!(w.members().union(v.members()), q.union(r));
    prop_assert_eq!(w.members().intersection(v.members()), q.intersection(r));
    // Stability.
    prop_assert_eq!(wedge(&w, &v).unwrap().members(), w.members());
    prop_assert_eq!(vee(&w, &v).unwrap().members(), v.members());
    Ok(())
}

fn unique_minimum(p: &Poset) -> bool {
    p.elements().iter().filter(|&x| p.lower_covers(x).is_empty()).count() == 1
}

/// Every convex pair of every catalogue poset with at most six elements.
#[test]
fn wedge_vee_partition_union_and_intersection() {
    let mut extra = vec![
        Poset::grid(2, 3),
        Poset::new(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]).unwrap(),
    ];
    extra.extend(catalogue::posets(6).into_iter().map(|e| e.poset));
    let mut pairs = 0;
    for p in &extra {
        let subsets = convex_subposets(p).unwrap();
        for &q in &subsets {
            for &r in &subsets {
                check_pair(p, q, r).unwrap();
                pairs += 1;
            }
        }
    }
    assert!(pairs > 10_000, "{pairs}");
}

#[test]
fn ideals_with_a_minimum_give_meet_and_join() {
    let posets = [
        Poset::grid(2, 3),
        Poset::boolean(3),
        Poset::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap(),
        Poset::new(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]).unwrap(),
        Poset::chain(4),
    ];
    for p in &posets {
        assert!(unique_minimum(p));
        let all = ideals(p).unwrap();
        for &i in &all {
            for &j in &all {
                let (ci, cj) = (cs(p, i), cs(p, j));
                let (w, v) = (wedge(&ci, &cj).unwrap(), vee(&ci, &cj).unwrap());
                assert!(w.is_ideal() && v.is_ideal());
                if !i.is_empty() && !j.is_empty() {
                    assert_eq!(w.members(), i.intersection(j));
                    assert_eq!(v.members(), i.union(j));
                }
                assert_eq!(wedge_prime(&ci, &cj).unwrap().members(), i.intersection(j));
                assert_eq!(vee_prime(&ci, &cj).unwrap().members(), i.union(j));
            }
        }
    }
}

#[test]
fn empty_ideal_against_a_nonempty_one() {
    let p = Poset::chain(2);
    let (e, i) = (cs(&p, ElemSet::EMPTY), cs(&p, ElemSet::singleton(0)));
    let w = wedge(&e, &i).unwrap();
    let v = vee(&e, &i).unwrap();
    assert_eq!(w.members().union(v.members()), ElemSet::singleton(0));
    assert!(w.members().intersection(v.members()).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_convex_pairs(p in common::arb_poset(6), a in any::<u64>(), b in any::<u64>()) {
        let subsets = convex_subposets(&p).unwrap();
        let q = subsets[(a % subsets.len() as u64) as usize];
        let r = subsets[(b % subsets.len() as u64) as usize];
        check_pair(&p, q, r)?;
    }

    #[test]
    fn primed_operations_on_ideals(p in common::arb_poset(6), a in any::<u64>(), b in any::<u64>()) {
        let all = ideals(&p).unwrap();
        let i = all[(a % all.len() as u64) as usize];
        let j = all[(b % all.len() as u64) as usize];
        let (ci, cj) = (cs(&p, i), cs(&p, j));
        prop_assert_eq!(wedge_prime(&ci, &cj).unwrap().members(), i.intersection(j));
        prop_assert_eq!(vee_prime(&ci, &cj).unwrap().members(), i.union(j));
    }

    #[test]
    fn convexity_matches_definition(p in common::arb_poset(6), mask in any::<u64>()) {
        let s = ElemSet(mask & ((1 << p.len()) - 1));
        let by_def = s.iter().all(|x| {
            s.iter().all(|y| (0..p.len()).all(|z| !(p.lt(x, z) && p.lt(z, y)) || s.contains(z)))
        });
        prop_assert_eq!(is_convex(&p, s), by_def);
    }
}
