//! Finite posets given by their Hasse diagram, convex subposets, order
//! ideals and the four subposet operations used by cell transfer.
//!
//! Elements are the dense ids `0..n`. The strict order relation is
//! precomputed as one bit row per element, so every comparability query is
//! a single mask test.

use crate::error::{Error, Result};
use crate::set::{ElemSet, MAX_ELEMENTS};

/// Default bound on the number of elements for [`ideals`] and
/// [`convex_subposets`].
pub const DEFAULT_IDEAL_BOUND: usize = 20;

/// A finite poset on `0..n` with validated cover relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    below: Vec<ElemSet>,
    above: Vec<ElemSet>,
    lower_covers: Vec<ElemSet>,
    upper_covers: Vec<ElemSet>,
}

impl Poset {
    /// Builds a poset from `(lower, upper)` cover pairs.
    ///
    /// The pairs must form a DAG and each pair must be a genuine cover:
    /// an edge implied by a longer path is rejected, not reduced away.
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::BoundExceeded {
                what: "poset size",
                limit: MAX_ELEMENTS,
                got: n,
            });
        }
        let mut lower_covers = vec![ElemSet::EMPTY; n];
        let mut upper_covers = vec![ElemSet::EMPTY; n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo},{hi}) references an id >= {n}"
                )));
            }
            if lo == hi {
                return Err(Error::InvalidPoset(format!("self-loop at {lo}")));
            }
            if upper_covers[lo].contains(hi) {
                return Err(Error::InvalidPoset(format!("duplicate cover ({lo},{hi})")));
            }
            upper_covers[lo] = upper_covers[lo].with(hi);
            lower_covers[hi] = lower_covers[hi].with(lo);
        }

        // Kahn's algorithm; also detects cycles.
        let mut indeg: Vec<usize> = lower_covers.iter().map(|s| s.len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            order.push(v);
            for w in upper_covers[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }

        let mut below = vec![ElemSet::EMPTY; n];
        for &v in &order {
            let mut b = ElemSet::EMPTY;
            for u in lower_covers[v] {
                b = b.union(below[u]).with(u);
            }
            below[v] = b;
        }
        let mut above = vec![ElemSet::EMPTY; n];
        for (v, b) in below.iter().enumerate() {
            for u in *b {
                above[u] = above[u].with(v);
            }
        }

        // A cover (lo, hi) is redundant when hi has another lower cover
        // lying above lo.
        for &(lo, hi) in covers {
            if lower_covers[hi].without(lo).intersects(above[lo]) {
                return Err(Error::InvalidPoset(format!(
                    "({lo},{hi}) is not a cover relation"
                )));
            }
        }

        let mut covers = covers.to_vec();
        covers.sort_unstable();
        Ok(Poset {
            n,
            covers,
            below,
            above,
            lower_covers,
            upper_covers,
        })
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(n, &covers).expect("chain is a valid poset")
    }

    pub fn antichain(n: usize) -> Self {
        Poset::new(n, &[]).expect("antichain is a valid poset")
    }

    /// The product of chains `rows x cols`, ids in row-major order.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let id = |i: usize, j: usize| i * cols + j;
        let mut covers = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                if j + 1 < cols {
                    covers.push((id(i, j), id(i, j + 1)));
                }
                if i + 1 < rows {
                    covers.push((id(i, j), id(i + 1, j)));
                }
            }
        }
        Poset::new(rows * cols, &covers).expect("grid is a valid poset")
    }

    /// The Boolean lattice of subsets of a `k`-set; element ids are bitmasks.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let mut covers = Vec::new();
        for s in 0..n {
            for b in 0..k {
                if s & (1 << b) == 0 {
                    covers.push((s, s | 1 << b));
                }
            }
        }
        Poset::new(n, &covers).expect("boolean lattice is a valid poset")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    #[inline]
    pub fn lower_covers(&self, s: usize) -> ElemSet {
        self.lower_covers[s]
    }

    #[inline]
    pub fn upper_covers(&self, s: usize) -> ElemSet {
        self.upper_covers[s]
    }

    /// Elements strictly below `s`.
    #[inline]
    pub fn strictly_below(&self, s: usize) -> ElemSet {
        self.below[s]
    }

    /// Elements strictly above `s`.
    #[inline]
    pub fn strictly_above(&self, s: usize) -> ElemSet {
        self.above[s]
    }

    #[inline]
    pub fn lt(&self, s: usize, t: usize) -> bool {
        self.below[t].contains(s)
    }

    #[inline]
    pub fn le(&self, s: usize, t: usize) -> bool {
        s == t || self.lt(s, t)
    }

    #[inline]
    pub fn is_cover(&self, lo: usize, hi: usize) -> bool {
        self.upper_covers[lo].contains(hi)
    }

    pub fn comparable(&self, s: usize, t: usize) -> bool {
        self.le(s, t) || self.le(t, s)
    }

    /// Elements strictly below some member of `set`.
    pub fn down_of(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(ElemSet::EMPTY, |acc, t| acc.union(self.below[t]))
    }

    /// Elements strictly above some member of `set`.
    pub fn up_of(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(ElemSet::EMPTY, |acc, t| acc.union(self.above[t]))
    }

    /// Element ids in an order compatible with the poset.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.n).collect();
        ids.sort_by_key(|&v| (self.below[v].len(), v));
        ids
    }

    pub fn is_convex(&self, members: ElemSet) -> bool {
        is_convex(self, members)
    }

    pub fn is_ideal(&self, members: ElemSet) -> bool {
        members
            .iter()
            .all(|s| self.below[s].is_subset(members))
    }

    fn check_members(&self, members: ElemSet) -> Result<()> {
        if members.is_subset(self.elements()) {
            Ok(())
        } else {
            Err(Error::InvalidPoset(format!(
                "members {:?} exceed the {} elements of the poset",
                members, self.n
            )))
        }
    }
}

/// Where an element sits relative to a convex subposet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparability {
    /// Outside `Q` and below some element of `Q`.
    Below,
    /// Outside `Q` and above some element of `Q`.
    Above,
    /// Inside `Q`, or incomparable with all of `Q`.
    Tilde,
}

pub fn is_convex(parent: &Poset, members: ElemSet) -> bool {
    if !members.is_subset(parent.elements()) {
        return false;
    }
    // r lies in an interval of Q iff it is above and below members of Q.
    let between = parent.up_of(members).intersection(parent.down_of(members));
    between.is_subset(members)
}

/// A convex subset of a poset.
#[derive(Clone, Copy, Debug)]
pub struct ConvexSubposet<'p> {
    parent: &'p Poset,
    members: ElemSet,
}

impl<'p> ConvexSubposet<'p> {
    pub fn new(parent: &'p Poset, members: ElemSet) -> Result<Self> {
        parent.check_members(members)?;
        if !is_convex(parent, members) {
            return Err(Error::NotConvex(members.to_vec()));
        }
        Ok(ConvexSubposet { parent, members })
    }

    pub fn from_ids(parent: &'p Poset, ids: &[usize]) -> Result<Self> {
        if let Some(&bad) = ids.iter().find(|&&i| i >= parent.len()) {
            return Err(Error::InvalidPoset(format!("id {bad} out of range")));
        }
        Self::new(parent, ElemSet::from_ids(ids.iter().copied()))
    }

    pub fn empty(parent: &'p Poset) -> Self {
        ConvexSubposet {
            parent,
            members: ElemSet::EMPTY,
        }
    }

    pub fn full(parent: &'p Poset) -> Self {
        ConvexSubposet {
            parent,
            members: parent.elements(),
        }
    }

    pub fn parent(&self) -> &'p Poset {
        self.parent
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.contains(s)
    }

    /// Induced cover pairs: parent covers with both ends inside.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.members;
        self.parent
            .covers()
            .iter()
            .copied()
            .filter(move |&(a, b)| m.contains(a) && m.contains(b))
    }

    pub fn is_ideal(&self) -> bool {
        self.parent.is_ideal(self.members)
    }

    fn same_parent(&self, other: &ConvexSubposet<'_>) -> Result<()> {
        if std::ptr::eq(self.parent, other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::InvalidPoset(
                "subposets belong to different posets".into(),
            ))
        }
    }

    // Results of the subposet operations are convex by construction; debug
    // builds re-check.
    fn derived(&self, members: ElemSet) -> ConvexSubposet<'p> {
        debug_assert!(is_convex(self.parent, members), "{members:?} not convex");
        ConvexSubposet {
            parent: self.parent,
            members,
        }
    }
}

impl PartialEq for ConvexSubposet<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent == other.parent
    }
}

impl Eq for ConvexSubposet<'_> {}

/// Comparability masks of a subposet: elements outside it that lie below,
/// respectively above, some member.
fn masks(parent: &Poset, q: ElemSet) -> (ElemSet, ElemSet) {
    (
        parent.down_of(q).difference(q),
        parent.up_of(q).difference(q),
    )
}

pub fn classify(s: usize, q: &ConvexSubposet<'_>) -> Result<Comparability> {
    if q.contains(s) {
        return Ok(Comparability::Tilde);
    }
    let p = q.parent;
    let below = p.strictly_above(s).intersects(q.members);
    let above = p.strictly_below(s).intersects(q.members);
    match (below, above) {
        (true, true) => Err(Error::AmbiguousComparability { element: s }),
        (true, false) => Ok(Comparability::Below),
        (false, true) => Ok(Comparability::Above),
        (false, false) => Ok(Comparability::Tilde),
    }
}

fn ensure_unambiguous(elements: ElemSet, below: ElemSet, above: ElemSet) -> Result<()> {
    match elements.intersection(below).intersection(above).iter().next() {
        Some(element) => Err(Error::AmbiguousComparability { element }),
        None => Ok(()),
    }
}

/// Member sets of `Q ∧ R` and `Q ∨ R`.
pub(crate) fn wedge_vee_sets(p: &Poset, q: ElemSet, r: ElemSet) -> Result<(ElemSet, ElemSet)> {
    let (below_q, above_q) = masks(p, q);
    let (below_r, above_r) = masks(p, r);
    ensure_unambiguous(r, below_q, above_q)?;
    ensure_unambiguous(q, below_r, above_r)?;
    // s ~ R or s < R  <=>  not (s > R)
    let wedge = r
        .intersection(below_q)
        .union(q.difference(above_r));
    let vee = q
        .intersection(above_r)
        .union(r.difference(below_q));
    Ok((wedge, vee))
}

/// Member sets of `Q ∧' R` and `Q ∨' R`.
pub(crate) fn wedge_vee_prime_sets(
    p: &Poset,
    q: ElemSet,
    r: ElemSet,
) -> Result<(ElemSet, ElemSet)> {
    let (below_q, above_q) = masks(p, q);
    let (below_r, above_r) = masks(p, r);
    ensure_unambiguous(r, below_q, above_q)?;
    ensure_unambiguous(q, below_r, above_r)?;
    let wedge = r
        .intersection(below_q)
        .union(q.intersection(r.union(below_r)));
    let vee = q
        .difference(below_r)
        .union(r.difference(below_q));
    Ok((wedge, vee))
}

/// `Q ∧ R = {s ∈ R | s < Q} ∪ {s ∈ Q | s ∼ R or s < R}`.
pub fn wedge<'p>(q: &ConvexSubposet<'p>, r: &ConvexSubposet<'p>) -> Result<ConvexSubposet<'p>> {
    q.same_parent(r)?;
    let (w, _) = wedge_vee_sets(q.parent, q.members, r.members)?;
    Ok(q.derived(w))
}

/// `Q ∨ R = {s ∈ Q | s > R} ∪ {s ∈ R | s ∼ Q or s > Q}`.
pub fn vee<'p>(q: &ConvexSubposet<'p>, r: &ConvexSubposet<'p>) -> Result<ConvexSubposet<'p>> {
    q.same_parent(r)?;
    let (_, v) = wedge_vee_sets(q.parent, q.members, r.members)?;
    Ok(q.derived(v))
}

/// `Q ∧' R = {s ∈ R | s < Q} ∪ {s ∈ Q | s ∈ R or s < R}`.
///
/// On order ideals this is the meet of the lattice of ideals.
pub fn wedge_prime<'p>(
    q: &ConvexSubposet<'p>,
    r: &ConvexSubposet<'p>,
) -> Result<ConvexSubposet<'p>> {
    q.same_parent(r)?;
    let (w, _) = wedge_vee_prime_sets(q.parent, q.members, r.members)?;
    Ok(q.derived(w))
}

/// `Q ∨' R = {s ∈ Q | s ∼ R or s > R} ∪ {s ∈ R | s ∼ Q or s > Q}`.
///
/// On order ideals this is the join of the lattice of ideals.
pub fn vee_prime<'p>(
    q: &ConvexSubposet<'p>,
    r: &ConvexSubposet<'p>,
) -> Result<ConvexSubposet<'p>> {
    q.same_parent(r)?;
    let (_, v) = wedge_vee_prime_sets(q.parent, q.members, r.members)?;
    Ok(q.derived(v))
}

/// All order ideals of `p`, in the order produced by a depth-first
/// include/exclude search along a linear extension.
pub fn ideals(p: &Poset) -> Result<Vec<ElemSet>> {
    ideals_bounded(p, DEFAULT_IDEAL_BOUND)
}

pub fn ideals_bounded(p: &Poset, bound: usize) -> Result<Vec<ElemSet>> {
    if p.len() > bound {
        return Err(Error::BoundExceeded {
            what: "poset size for ideal enumeration",
            limit: bound,
            got: p.len(),
        });
    }
    let order = p.linear_extension();
    let mut out = Vec::new();
    fn go(p: &Poset, order: &[usize], k: usize, cur: ElemSet, out: &mut Vec<ElemSet>) {
        if k == order.len() {
            out.push(cur);
            return;
        }
        let v = order[k];
        go(p, order, k + 1, cur, out);
        if p.lower_covers(v).is_subset(cur) {
            go(p, order, k + 1, cur.with(v), out);
        }
    }
    go(p, &order, 0, ElemSet::EMPTY, &mut out);
    Ok(out)
}

/// All convex subsets of `p` (including the empty set), by brute force.
pub fn convex_subposets(p: &Poset) -> Result<Vec<ElemSet>> {
    if p.len() > DEFAULT_IDEAL_BOUND {
        return Err(Error::BoundExceeded {
            what: "poset size for convex-subset enumeration",
            limit: DEFAULT_IDEAL_BOUND,
            got: p.len(),
        });
    }
    Ok(p.elements()
        .subsets()
        .filter(|&s| is_convex(p, s))
        .collect())
}
