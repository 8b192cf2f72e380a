//! (P, O)-tableaux: validity, exhaustive enumeration up to an entry cap,
//! and weights.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::ConvexSubposet;
use crate::set::ElemSet;
use crate::tlabel::TLabelledPoset;

/// Limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBounds {
    pub max_elements: usize,
    pub max_ncap: u32,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            max_elements: 16,
            max_ncap: 9,
        }
    }
}

/// A filling of some subset of a poset's elements with positive integers.
///
/// Values are stored densely by parent element id, with `0` outside the
/// domain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    domain: ElemSet,
    values: Vec<u32>,
}

impl Tableau {
    /// `values` is indexed by parent id and must be positive exactly on
    /// `domain`.
    pub fn new(domain: ElemSet, values: Vec<u32>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if (v > 0) != domain.contains(i) {
                return Err(Error::InvalidTableau(format!(
                    "element {i} has value {v} but domain is {domain:?}"
                )));
            }
        }
        if domain.iter().any(|i| i >= values.len()) {
            return Err(Error::InvalidTableau("domain exceeds value vector".into()));
        }
        Ok(Tableau { domain, values })
    }

    /// From `(id, value)` pairs over a parent with `n` elements.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Result<Self> {
        let mut values = vec![0; n];
        let mut domain = ElemSet::EMPTY;
        for &(i, v) in pairs {
            if i >= n || v == 0 || domain.contains(i) {
                return Err(Error::InvalidTableau(format!("bad entry ({i}, {v})")));
            }
            values[i] = v;
            domain = domain.with(i);
        }
        Ok(Tableau { domain, values })
    }

    /// Takes the values of `source` on `domain`, which must be a subset of
    /// `source`'s domain.
    pub(crate) fn unchecked(domain: ElemSet, values: Vec<u32>) -> Self {
        Tableau { domain, values }
    }

    pub fn domain(&self) -> ElemSet {
        self.domain
    }

    /// Dense values by parent id (`0` outside the domain).
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<u32> {
        self.domain.contains(i).then(|| self.values[i])
    }

    /// `(id, value)` pairs in id order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.domain.iter().map(|i| (i, self.values[i]))
    }

    pub fn max_value(&self) -> u32 {
        self.entries().map(|e| e.1).max().unwrap_or(0)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries()).finish()
    }
}

/// First cover `(lo, hi)` inside the tableau's domain whose inequality
/// fails.
pub fn first_violation(lp: &TLabelledPoset, t: &Tableau) -> Option<(usize, usize)> {
    let d = t.domain;
    lp.poset().covers().iter().copied().find(|&(lo, hi)| {
        d.contains(lo) && d.contains(hi) && !lp.holds(lo, hi, t.values[lo], t.values[hi])
    })
}

/// Whether `t` satisfies `t(s) <= O(s,t)(t(t))` on every cover inside its
/// domain.
pub fn respects(lp: &TLabelledPoset, t: &Tableau) -> bool {
    t.values.len() == lp.len() && first_violation(lp, t).is_none()
}

/// Counts `c_1..c_ncap` of each value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let n = self.0.len().max(other.0.len());
        Weight(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

pub fn weight(t: &Tableau, ncap: u32) -> Weight {
    let mut counts = vec![0u32; ncap as usize];
    for (_, v) in t.entries() {
        debug_assert!(v <= ncap, "value {v} exceeds cap {ncap}");
        if let Some(c) = counts.get_mut(v as usize - 1) {
            *c += 1;
        }
    }
    Weight(counts)
}

/// All tableaux of `lp` with entries in `1..=ncap`.
pub fn enumerate(lp: &TLabelledPoset, ncap: u32) -> Result<Tableaux<'_>> {
    Tableaux::new(lp, lp.poset().elements(), ncap, EnumBounds::default())
}

/// All tableaux of the induced labelled subposet on `q`, keyed by parent ids.
pub fn enumerate_on<'a>(
    lp: &'a TLabelledPoset,
    q: &ConvexSubposet<'_>,
    ncap: u32,
) -> Result<Tableaux<'a>> {
    Tableaux::new(lp, q.members(), ncap, EnumBounds::default())
}

/// Backtracking enumeration in lexicographic order of the value vector.
///
/// Elements are filled in increasing id order; each element's admissible
/// values form an interval determined by its already-filled cover
/// neighbours.
pub struct Tableaux<'a> {
    lp: &'a TLabelledPoset,
    domain: ElemSet,
    order: Vec<usize>,
    // Per position: earlier neighbours below and above.
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    ncap: u32,
    values: Vec<u32>,
    hi: Vec<u32>,
    started: bool,
    done: bool,
}

impl<'a> Tableaux<'a> {
    pub fn new(
        lp: &'a TLabelledPoset,
        domain: ElemSet,
        ncap: u32,
        bounds: EnumBounds,
    ) -> Result<Self> {
        if domain.len() > bounds.max_elements {
            return Err(Error::BoundExceeded {
                what: "elements to enumerate",
                limit: bounds.max_elements,
                got: domain.len(),
            });
        }
        if ncap > bounds.max_ncap {
            return Err(Error::BoundExceeded {
                what: "entry cap",
                limit: bounds.max_ncap as usize,
                got: ncap as usize,
            });
        }
        if !domain.is_subset(lp.poset().elements()) || !lp.poset().is_convex(domain) {
            return Err(Error::NotConvex(domain.to_vec()));
        }
        if let Some(cap) = lp.entry_cap() {
            if (ncap as usize) > cap {
                return Err(Error::BoundExceeded {
                    what: "entry cap against tabulated labels",
                    limit: cap,
                    got: ncap as usize,
                });
            }
        }
        let p = lp.poset();
        let order = domain.to_vec();
        let mut lower = Vec::with_capacity(order.len());
        let mut upper = Vec::with_capacity(order.len());
        let mut seen = ElemSet::EMPTY;
        for &v in &order {
            lower.push(p.lower_covers(v).intersection(seen).to_vec());
            upper.push(p.upper_covers(v).intersection(seen).to_vec());
            seen = seen.with(v);
        }
        Ok(Tableaux {
            lp,
            domain,
            hi: vec![0; order.len()],
            order,
            lower,
            upper,
            ncap,
            values: vec![0; lp.len()],
            started: false,
            done: ncap == 0 && !domain.is_empty(),
        })
    }

    /// Admissible interval for position `k` given positions `< k`.
    fn range(&self, k: usize) -> (u32, u32) {
        let v = self.order[k];
        let mut lo = 1;
        let mut hi = self.ncap;
        for &w in &self.upper[k] {
            // v < w: need x <= f(value(w)), a prefix of 1..=ncap.
            while hi >= lo && !self.lp.holds(v, w, hi, self.values[w]) {
                hi -= 1;
            }
        }
        for &u in &self.lower[k] {
            // u < v: need value(u) <= f(x), a suffix.
            while lo <= hi && !self.lp.holds(u, v, self.values[u], lo) {
                lo += 1;
            }
        }
        (lo, hi)
    }

    fn current(&self) -> Tableau {
        Tableau::unchecked(self.domain, self.values.clone())
    }

    /// Fills positions `k..` with their smallest values, backtracking when
    /// stuck. Returns false when the search space is exhausted.
    fn descend(&mut self, mut k: usize) -> bool {
        let m = self.order.len();
        while k < m {
            let (lo, hi) = self.range(k);
            if lo <= hi {
                self.values[self.order[k]] = lo;
                self.hi[k] = hi;
                k += 1;
            } else {
                match self.advance(k) {
                    Some(next) => k = next,
                    None => return false,
                }
            }
        }
        true
    }

    /// Increments the deepest position below `k` that still has room and
    /// returns the position after it.
    fn advance(&mut self, k: usize) -> Option<usize> {
        let mut j = k;
        while j > 0 {
            j -= 1;
            let v = self.order[j];
            if self.values[v] < self.hi[j] {
                self.values[v] += 1;
                for &later in &self.order[j + 1..] {
                    self.values[later] = 0;
                }
                return Some(j + 1);
            }
        }
        None
    }
}

impl Iterator for Tableaux<'_> {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.descend(0)
        } else {
            match self.advance(self.order.len()) {
                Some(k) => self.descend(k),
                None => false,
            }
        };
        if ok {
            if self.order.is_empty() {
                self.done = true;
            }
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}
