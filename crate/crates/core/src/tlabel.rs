//! T-labellings of Hasse diagrams and the shape constructors built on them:
//! skew Young shapes in the plane, cylindric shapes and (P, omega)-partition
//! labellings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::{ConvexSubposet, Poset};
use crate::set::ElemSet;

/// An element of `Z ∪ {+∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(i64),
    Infinity,
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// A weakly increasing function `P -> Z ∪ {+∞}` labelling a Hasse edge.
///
/// `Table` functions are tabulated on `1..=len` only; tableau entries are
/// never evaluated beyond the entry cap, so the table length is the cap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepFunction {
    /// `x ↦ x`
    Weak,
    /// `x ↦ x - 1`
    Strict,
    Table(Vec<Extended>),
}

impl StepFunction {
    pub fn table(values: Vec<Extended>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidLabel("empty table".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidLabel(format!(
                "table {values:?} is not weakly increasing"
            )));
        }
        Ok(StepFunction::Table(values))
    }

    /// Value at `x >= 1`, or `None` when `x` lies beyond a table.
    #[inline]
    pub fn eval(&self, x: u32) -> Option<Extended> {
        match self {
            StepFunction::Weak => Some(Extended::Finite(x as i64)),
            StepFunction::Strict => Some(Extended::Finite(x as i64 - 1)),
            StepFunction::Table(t) => t.get((x as usize).checked_sub(1)?).copied(),
        }
    }

    /// Whether `lower <= f(upper)`.
    #[inline]
    pub fn allows(&self, lower: u32, upper: u32) -> bool {
        match self {
            StepFunction::Weak => lower <= upper,
            StepFunction::Strict => lower < upper,
            StepFunction::Table(_) => match self.eval(upper) {
                Some(bound) => Extended::Finite(lower as i64) <= bound,
                None => false,
            },
        }
    }

    /// Tabulated length, if this is a table.
    pub fn cap(&self) -> Option<usize> {
        match self {
            StepFunction::Table(t) => Some(t.len()),
            _ => None,
        }
    }

    pub fn is_oriented(&self) -> bool {
        matches!(self, StepFunction::Weak | StepFunction::Strict)
    }

    /// Pointwise minimum of two labels.
    pub fn pointwise_min(&self, other: &StepFunction) -> StepFunction {
        use StepFunction::*;
        match (self, other) {
            (Weak, Weak) => Weak,
            (Weak, Strict) | (Strict, Weak) | (Strict, Strict) => Strict,
            _ => {
                let len = match (self.cap(), other.cap()) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => unreachable!(),
                };
                Table(
                    (1..=len as u32)
                        .map(|x| self.eval(x).unwrap().min(other.eval(x).unwrap()))
                        .collect(),
                )
            }
        }
    }
}

/// A poset together with a step function on every Hasse edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLabelledPoset {
    poset: Poset,
    /// Parallel to `poset.covers()`.
    labels: Vec<StepFunction>,
    edge_index: Vec<u32>,
}

const NO_EDGE: u32 = u32::MAX;

impl TLabelledPoset {
    /// Attaches labels; every cover needs exactly one label and only covers
    /// may be labelled.
    pub fn new(poset: Poset, labels: Vec<((usize, usize), StepFunction)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (edge, f) in labels {
            if !poset.is_cover(edge.0, edge.1) {
                return Err(Error::InvalidLabel(format!(
                    "({},{}) is not a cover",
                    edge.0, edge.1
                )));
            }
            if map.insert(edge, f).is_some() {
                return Err(Error::InvalidLabel(format!(
                    "edge ({},{}) labelled twice",
                    edge.0, edge.1
                )));
            }
        }
        let mut ordered = Vec::with_capacity(poset.covers().len());
        for edge in poset.covers() {
            match map.remove(edge) {
                Some(f) => ordered.push(f),
                None => {
                    return Err(Error::InvalidLabel(format!(
                        "edge ({},{}) has no label",
                        edge.0, edge.1
                    )))
                }
            }
        }
        Ok(Self::from_parts(poset, ordered))
    }

    /// Labels every cover with the same function.
    pub fn uniform(poset: Poset, f: StepFunction) -> Self {
        let labels = vec![f; poset.covers().len()];
        Self::from_parts(poset, labels)
    }

    fn from_parts(poset: Poset, labels: Vec<StepFunction>) -> Self {
        let n = poset.len();
        let mut edge_index = vec![NO_EDGE; n * n];
        for (k, &(lo, hi)) in poset.covers().iter().enumerate() {
            edge_index[lo * n + hi] = k as u32;
        }
        TLabelledPoset {
            poset,
            labels,
            edge_index,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, lo: usize, hi: usize) -> Option<&StepFunction> {
        let n = self.poset.len();
        if lo >= n || hi >= n {
            return None;
        }
        match self.edge_index[lo * n + hi] {
            NO_EDGE => None,
            k => Some(&self.labels[k as usize]),
        }
    }

    /// `(edge, label)` pairs in cover order.
    pub fn labels(&self) -> impl Iterator<Item = ((usize, usize), &StepFunction)> {
        self.poset.covers().iter().copied().zip(self.labels.iter())
    }

    /// Whether `lower_value <= O(lo, hi)(upper_value)` on the cover `lo < hi`.
    #[inline]
    pub fn holds(&self, lo: usize, hi: usize, lower_value: u32, upper_value: u32) -> bool {
        let k = self.edge_index[lo * self.poset.len() + hi];
        debug_assert!(k != NO_EDGE);
        self.labels[k as usize].allows(lower_value, upper_value)
    }

    /// Smallest table length, i.e. the largest entry the labels can judge.
    pub fn entry_cap(&self) -> Option<usize> {
        self.labels.iter().filter_map(StepFunction::cap).min()
    }

    /// All labels are `Weak` or `Strict`.
    pub fn is_oriented(&self) -> bool {
        self.labels.iter().all(StepFunction::is_oriented)
    }

    /// Same poset with one label replaced per cover (same cover order).
    pub fn relabel(&self, labels: Vec<StepFunction>) -> Result<Self> {
        if labels.len() != self.labels.len() {
            return Err(Error::InvalidLabel(format!(
                "expected {} labels, got {}",
                self.labels.len(),
                labels.len()
            )));
        }
        Ok(Self::from_parts(self.poset.clone(), labels))
    }
}

/// The induced labelled poset on a convex subset, renumbered by ascending
/// parent id. The second component maps new ids to parent ids.
pub fn restrict_with_ids(
    lp: &TLabelledPoset,
    q: &ConvexSubposet<'_>,
) -> Result<(TLabelledPoset, Vec<usize>)> {
    if !std::ptr::eq(q.parent(), lp.poset()) && q.parent() != lp.poset() {
        return Err(Error::InvalidPoset(
            "subposet does not belong to this labelled poset".into(),
        ));
    }
    let ids = q.members().to_vec();
    let mut new_id = vec![usize::MAX; lp.len()];
    for (k, &i) in ids.iter().enumerate() {
        new_id[i] = k;
    }
    let mut covers = Vec::new();
    let mut labels = Vec::new();
    for ((lo, hi), f) in lp.labels() {
        if q.contains(lo) && q.contains(hi) {
            covers.push((new_id[lo], new_id[hi]));
            labels.push(((new_id[lo], new_id[hi]), f.clone()));
        }
    }
    let poset = Poset::new(ids.len(), &covers)?;
    Ok((TLabelledPoset::new(poset, labels)?, ids))
}

pub fn restrict(lp: &TLabelledPoset, q: &ConvexSubposet<'_>) -> Result<TLabelledPoset> {
    restrict_with_ids(lp, q).map(|(r, _)| r)
}

/// Labels `s < t` Weak when `omega(s) <= omega(t)` and Strict otherwise,
/// so that tableaux are exactly the (P, omega)-partitions. `omega[s]` is the
/// label of element `s` and must be a bijection onto `1..=n`.
pub fn pomega_labelling(p: &Poset, omega: &[usize]) -> Result<TLabelledPoset> {
    let n = p.len();
    let distinct: BTreeSet<_> = omega.iter().copied().collect();
    if omega.len() != n || distinct.len() != n || omega.iter().any(|&w| w == 0 || w > n) {
        return Err(Error::NotBijective(n));
    }
    let labels = p
        .covers()
        .iter()
        .map(|&(s, t)| {
            let f = if omega[s] <= omega[t] {
                StepFunction::Weak
            } else {
                StepFunction::Strict
            };
            ((s, t), f)
        })
        .collect();
    TLabelledPoset::new(p.clone(), labels)
}

/// A skew shape `outer / inner` anchored in the plane. Row `i` holds the
/// cells `(i, inner_i + 1) ..= (i, outer_i)` (1-based).
///
/// Equality compares anchored cell sets, so different partition pairs can
/// be equal shapes.
#[derive(Clone, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    cells: Vec<(u32, u32)>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::MalformedPartitions(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        let mut cells = Vec::new();
        for i in 0..outer.len() {
            for j in inner.part(i) + 1..=outer.part(i) {
                cells.push((i as u32 + 1, j));
            }
        }
        Ok(SkewShape {
            outer,
            inner,
            cells,
        })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape::new(outer, Partition::empty()).expect("empty partition fits")
    }

    pub fn from_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    /// Recovers a partition pair from an anchored cell set, if it is one.
    pub fn from_cells(cells: &BTreeSet<(u32, u32)>) -> Option<Self> {
        let rows = cells.iter().map(|c| c.0).max().unwrap_or(0) as usize;
        let mut outer = vec![0u32; rows];
        let mut inner = vec![0u32; rows];
        let mut filled = vec![false; rows];
        for i in 0..rows {
            let cols: Vec<u32> = cells
                .iter()
                .filter(|c| c.0 as usize == i + 1)
                .map(|c| c.1)
                .collect();
            if let (Some(&a), Some(&b)) = (cols.first(), cols.last()) {
                outer[i] = b;
                inner[i] = a - 1;
                filled[i] = true;
            }
        }
        // Empty rows take the outer value of the next row.
        for i in (0..rows).rev() {
            if !filled[i] {
                let v = if i + 1 < rows { outer[i + 1] } else { 0 };
                outer[i] = v;
                inner[i] = v;
            }
        }
        let shape = SkewShape::from_parts(&outer, &inner).ok()?;
        let got: BTreeSet<_> = shape.cells.iter().copied().collect();
        (got == *cells).then_some(shape)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    pub fn cell_set(&self) -> BTreeSet<(u32, u32)> {
        self.cells.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of rows containing at least one cell.
    pub fn nonempty_rows(&self) -> usize {
        self.cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().len()
    }
}

impl PartialEq for SkewShape {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for SkewShape {}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// The labelled poset of a skew shape: ids follow [`SkewShape::cells`];
/// row edges are Weak and column edges Strict, so tableaux are the
/// semistandard Young tableaux of the shape.
pub fn young_labelling(shape: &SkewShape) -> TLabelledPoset {
    let index: BTreeMap<(u32, u32), usize> = shape
        .cells()
        .iter()
        .enumerate()
        .map(|(k, &c)| (c, k))
        .collect();
    let mut labels = Vec::new();
    for (&(i, j), &k) in &index {
        if let Some(&right) = index.get(&(i, j + 1)) {
            labels.push(((k, right), StepFunction::Weak));
        }
        if let Some(&down) = index.get(&(i + 1, j)) {
            labels.push(((k, down), StepFunction::Strict));
        }
    }
    let covers: Vec<_> = labels.iter().map(|l| l.0).collect();
    let poset = Poset::new(shape.len(), &covers).expect("skew shape adjacency is a Hasse diagram");
    TLabelledPoset::new(poset, labels).expect("one label per cover")
}

/// A `rows x cols` box of the plane, used as the ambient poset for
/// anchored shapes. Ids are row-major: `(i, j) -> (i-1)*cols + (j-1)`.
#[derive(Clone, Debug)]
pub struct Grid {
    rows: u32,
    cols: u32,
    labelled: TLabelledPoset,
}

impl Grid {
    pub fn new(rows: u32, cols: u32) -> Result<Self> {
        let n = (rows * cols) as usize;
        if n > crate::set::MAX_ELEMENTS {
            return Err(Error::BoundExceeded {
                what: "grid size",
                limit: crate::set::MAX_ELEMENTS,
                got: n,
            });
        }
        let rect = Partition::new(vec![cols; rows as usize])?;
        let labelled = young_labelling(&SkewShape::straight(rect));
        Ok(Grid {
            rows,
            cols,
            labelled,
        })
    }

    /// Smallest box containing all the given shapes.
    pub fn enclosing<'a, I: IntoIterator<Item = &'a SkewShape>>(shapes: I) -> Result<Self> {
        let (mut rows, mut cols) = (0, 0);
        for s in shapes {
            for &(i, j) in s.cells() {
                rows = rows.max(i);
                cols = cols.max(j);
            }
        }
        Grid::new(rows.max(1), cols.max(1))
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn labelled(&self) -> &TLabelledPoset {
        &self.labelled
    }

    pub fn poset(&self) -> &Poset {
        self.labelled.poset()
    }

    pub fn id(&self, cell: (u32, u32)) -> Option<usize> {
        let (i, j) = cell;
        (i >= 1 && j >= 1 && i <= self.rows && j <= self.cols)
            .then(|| ((i - 1) * self.cols + (j - 1)) as usize)
    }

    pub fn cell(&self, id: usize) -> (u32, u32) {
        let id = id as u32;
        (id / self.cols + 1, id % self.cols + 1)
    }

    pub fn set_of(&self, shape: &SkewShape) -> Result<ElemSet> {
        shape
            .cells()
            .iter()
            .map(|&c| {
                self.id(c).ok_or_else(|| {
                    Error::InvalidInput(format!("cell {c:?} lies outside the grid"))
                })
            })
            .collect::<Result<ElemSet>>()
    }

    pub fn cells_of(&self, set: ElemSet) -> BTreeSet<(u32, u32)> {
        set.iter().map(|id| self.cell(id)).collect()
    }

    pub fn shape_of(&self, set: ElemSet) -> Option<SkewShape> {
        SkewShape::from_cells(&self.cells_of(set))
    }
}

/// A finite set of cells in the cylinder `Z^2 / (k-n, k)Z`, stored by the
/// representatives with second coordinate in `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylindricShape {
    k: i64,
    n: i64,
    cells: Vec<(i64, i64)>,
}

impl CylindricShape {
    pub fn new(k: i64, n: i64, cells: &[(i64, i64)]) -> Result<Self> {
        if !(1 <= k && k < n) {
            return Err(Error::InvalidInput(format!(
                "cylinder needs 1 <= k < n, got k={k} n={n}"
            )));
        }
        let set: BTreeSet<_> = cells.iter().map(|&c| canonical(k, n, c)).collect();
        Ok(CylindricShape {
            k,
            n,
            cells: set.into_iter().collect(),
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Canonical cells in sorted order; these are the element ids.
    pub fn cells(&self) -> &[(i64, i64)] {
        &self.cells
    }

    pub fn canonical(&self, cell: (i64, i64)) -> (i64, i64) {
        canonical(self.k, self.n, cell)
    }

    /// Whether `s <= t` in the cylinder poset.
    pub fn le(&self, s: (i64, i64), t: (i64, i64)) -> bool {
        self.lifts_above(s, t).next().is_some()
    }

    /// Lifts of `t` lying weakly north-east of `s` in `Z^2`.
    fn lifts_above(&self, s: (i64, i64), t: (i64, i64)) -> impl Iterator<Item = (i64, i64)> {
        let (k, n) = (self.k, self.n);
        let lo = (s.1 - t.1).div_euclid(k) + i64::from((s.1 - t.1).rem_euclid(k) != 0);
        let hi = (t.0 - s.0).div_euclid(n - k);
        (lo..=hi)
            .map(move |m| (t.0 + m * (k - n), t.1 + m * k))
            .filter(move |l| l.0 >= s.0 && l.1 >= s.1)
    }

    pub fn is_convex(&self) -> bool {
        let members: BTreeSet<_> = self.cells.iter().copied().collect();
        for &s in &self.cells {
            for &t in &self.cells {
                for lift in self.lifts_above(s, t) {
                    for a in s.0..=lift.0 {
                        for b in s.1..=lift.1 {
                            if !members.contains(&self.canonical((a, b))) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

fn canonical(k: i64, n: i64, (a, b): (i64, i64)) -> (i64, i64) {
    let m = b.div_euclid(k);
    (a - m * (k - n), b - m * k)
}

/// The labelled poset of a cylindric shape.
///
/// Generating relations are `(i,j) < (i+1,j)` labelled Weak and
/// `(i,j) < (i,j+1)` labelled Strict; `transpose` swaps the two labels.
/// Generators that identify the same pair of classes are combined by
/// pointwise minimum, and generators implied by longer chains are not
/// Hasse edges and carry no label.
pub fn cylindric_labelling(shape: &CylindricShape, transpose: bool) -> Result<TLabelledPoset> {
    if !shape.is_convex() {
        return Err(Error::NotConvexInQuotient);
    }
    let index: BTreeMap<(i64, i64), usize> = shape
        .cells()
        .iter()
        .enumerate()
        .map(|(k, &c)| (c, k))
        .collect();
    let n = index.len();
    if n > crate::set::MAX_ELEMENTS {
        return Err(Error::BoundExceeded {
            what: "cylindric shape size",
            limit: crate::set::MAX_ELEMENTS,
            got: n,
        });
    }
    let (first, second) = if transpose {
        (StepFunction::Strict, StepFunction::Weak)
    } else {
        (StepFunction::Weak, StepFunction::Strict)
    };
    let mut gens: BTreeMap<(usize, usize), StepFunction> = BTreeMap::new();
    for (&(a, b), &s) in &index {
        for (step, f) in [((a + 1, b), &first), ((a, b + 1), &second)] {
            if let Some(&t) = index.get(&shape.canonical(step)) {
                gens.entry((s, t))
                    .and_modify(|g| *g = g.pointwise_min(f))
                    .or_insert_with(|| f.clone());
            }
        }
    }
    // Strict order by reachability over generators.
    let mut up = vec![ElemSet::EMPTY; n];
    for &(s, t) in gens.keys() {
        up[s] = up[s].with(t);
    }
    let mut reach = up.clone();
    loop {
        let mut changed = false;
        for s in 0..n {
            let next = reach[s]
                .iter()
                .fold(reach[s], |acc, t| acc.union(reach[t]));
            if next != reach[s] {
                reach[s] = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<_> = gens
        .into_iter()
        .filter(|&((s, t), _)| !reach[s].without(t).iter().any(|r| reach[r].contains(t)))
        .collect();
    let covers: Vec<_> = labels.iter().map(|l| l.0).collect();
    let poset = Poset::new(n, &covers)?;
    TLabelledPoset::new(poset, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::ConvexSubposet;

    fn shape(outer: &[u32], inner: &[u32]) -> SkewShape {
        SkewShape::from_parts(outer, inner).unwrap()
    }

    fn edges(lp: &TLabelledPoset) -> Vec<((usize, usize), StepFunction)> {
        lp.labels().map(|(e, f)| (e, f.clone())).collect()
    }

    #[test]
    fn step_functions() {
        assert_eq!(StepFunction::Weak.eval(3), Some(Extended::Finite(3)));
        assert_eq!(StepFunction::Strict.eval(1), Some(Extended::Finite(0)));
        assert!(StepFunction::table(vec![Extended::Finite(2), Extended::Finite(1)]).is_err());
        let t = StepFunction::table(vec![
            Extended::Finite(-1),
            Extended::Finite(2),
            Extended::Infinity,
        ])
        .unwrap();
        assert!(!t.allows(1, 1));
        assert!(t.allows(2, 2));
        assert!(t.allows(1000, 3));
        assert!(!t.allows(1, 4));
    }

    #[test]
    fn young_single_cell() {
        let lp = young_labelling(&shape(&[1], &[]));
        assert_eq!(lp.len(), 1);
        assert!(lp.poset().covers().is_empty());
    }

    #[test]
    fn young_21() {
        // cells (1,1)=0 (1,2)=1 (2,1)=2
        let lp = young_labelling(&shape(&[2, 1], &[]));
        assert_eq!(
            edges(&lp),
            vec![((0, 1), StepFunction::Weak), ((0, 2), StepFunction::Strict)]
        );
    }

    #[test]
    fn young_22_over_1() {
        // cells (1,2)=0 (2,1)=1 (2,2)=2
        let s = shape(&[2, 2], &[1]);
        assert_eq!(s.cells(), &[(1, 2), (2, 1), (2, 2)]);
        let lp = young_labelling(&s);
        assert_eq!(
            edges(&lp),
            vec![((0, 2), StepFunction::Strict), ((1, 2), StepFunction::Weak)]
        );
    }

    #[test]
    fn shape_equality_is_anchored() {
        assert_eq!(shape(&[2, 2, 1], &[2, 2]), shape(&[2, 1, 1], &[2, 1]));
        assert_ne!(shape(&[6, 5, 5, 5], &[3, 3]), shape(&[7, 6, 6, 6], &[4, 4, 1, 1]));
        assert!(SkewShape::from_parts(&[1], &[2]).is_err());
    }

    #[test]
    fn shape_from_cells_roundtrip() {
        let s = shape(&[6, 6, 4, 4, 4], &[6, 1, 1, 1, 1]);
        let back = SkewShape::from_cells(&s.cell_set()).unwrap();
        assert_eq!(back, s);
        let not_shape: BTreeSet<_> = [(1, 1), (1, 3)].into_iter().collect();
        assert!(SkewShape::from_cells(&not_shape).is_none());
    }

    #[test]
    fn pomega_examples() {
        let chain = Poset::chain(2);
        let lp = pomega_labelling(&chain, &[1, 2]).unwrap();
        assert_eq!(lp.label(0, 1), Some(&StepFunction::Weak));
        let lp = pomega_labelling(&chain, &[2, 1]).unwrap();
        assert_eq!(lp.label(0, 1), Some(&StepFunction::Strict));
        // a=0, b=1, c=2 with a<c, b<c
        let v = Poset::new(3, &[(0, 2), (1, 2)]).unwrap();
        let lp = pomega_labelling(&v, &[1, 3, 2]).unwrap();
        assert_eq!(lp.label(0, 2), Some(&StepFunction::Weak));
        assert_eq!(lp.label(1, 2), Some(&StepFunction::Strict));
        assert_eq!(pomega_labelling(&v, &[1, 1, 2]), Err(Error::NotBijective(3)));
    }

    #[test]
    fn restrict_examples() {
        let lp = young_labelling(&shape(&[2, 1], &[]));
        let full = ConvexSubposet::full(lp.poset());
        assert_eq!(restrict(&lp, &full).unwrap(), lp);
        let row = ConvexSubposet::from_ids(lp.poset(), &[0, 1]).unwrap();
        let r = restrict(&lp, &row).unwrap();
        assert_eq!(edges(&r), vec![((0, 1), StepFunction::Weak)]);
        let e = restrict(&lp, &ConvexSubposet::empty(lp.poset())).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn labelling_validation() {
        let p = Poset::chain(2);
        assert!(TLabelledPoset::new(p.clone(), vec![]).is_err());
        assert!(TLabelledPoset::new(
            p.clone(),
            vec![((0, 1), StepFunction::Weak), ((0, 1), StepFunction::Weak)]
        )
        .is_err());
        assert!(TLabelledPoset::new(p, vec![((1, 0), StepFunction::Weak)]).is_err());
    }

    #[test]
    fn cylindric_single_cell() {
        let c = CylindricShape::new(2, 3, &[(0, 0)]).unwrap();
        let lp = cylindric_labelling(&c, false).unwrap();
        assert_eq!(lp.len(), 1);
    }

    #[test]
    fn cylindric_canonical_form() {
        let c = CylindricShape::new(2, 3, &[(0, 2)]).unwrap();
        assert_eq!(c.cells(), &[(1, 0)]);
        let c = CylindricShape::new(2, 5, &[(0, -1)]).unwrap();
        assert_eq!(c.cells(), &[(-3, 1)]);
    }

    #[test]
    fn cylindric_k1_n2_merges_generators() {
        // (0,1) is identified with (1,0): both generators give the same
        // pair, and the combined label is the stricter one.
        let c = CylindricShape::new(1, 2, &[(0, 0), (1, 0)]).unwrap();
        let lp = cylindric_labelling(&c, false).unwrap();
        assert_eq!(edges(&lp), vec![((0, 1), StepFunction::Strict)]);
    }

    #[test]
    fn cylindric_k2_n3_wraps() {
        // (0,2) is identified with (1,0), so (0,0) < (0,1) < (1,0) and the
        // generator (0,0) < (1,0) is not a cover.
        let c = CylindricShape::new(2, 3, &[(0, 0), (0, 1), (1, 0)]).unwrap();
        assert_eq!(c.cells(), &[(0, 0), (0, 1), (1, 0)]);
        let lp = cylindric_labelling(&c, false).unwrap();
        assert_eq!(
            edges(&lp),
            vec![((0, 1), StepFunction::Strict), ((1, 2), StepFunction::Strict)]
        );
    }

    #[test]
    fn cylindric_inside_fundamental_domain() {
        let c = CylindricShape::new(3, 7, &[(0, 0), (1, 0), (0, 1)]).unwrap();
        let lp = cylindric_labelling(&c, false).unwrap();
        // ids: (0,0)=0 (0,1)=1 (1,0)=2
        assert_eq!(
            edges(&lp),
            vec![((0, 1), StepFunction::Strict), ((0, 2), StepFunction::Weak)]
        );
        let lp = cylindric_labelling(&c, true).unwrap();
        assert_eq!(
            edges(&lp),
            vec![((0, 1), StepFunction::Weak), ((0, 2), StepFunction::Strict)]
        );
    }

    #[test]
    fn cylindric_convexity() {
        let c = CylindricShape::new(2, 5, &[(0, 0), (2, 0)]).unwrap();
        assert!(c.le((0, 0), (2, 0)));
        assert_eq!(cylindric_labelling(&c, false), Err(Error::NotConvexInQuotient));
    }
}
