//! Componentwise max/min of two skew shapes given by four partitions, and
//! the injection from pairs of tableaux on `(λ/μ, ν/ρ)` to pairs on
//! `(max, min)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::wedge_vee_sets;
use crate::set::ElemSet;
use crate::tableaux::{respects, Tableau};
use crate::tlabel::{Grid, SkewShape};
use crate::transfer::{TransferPlan, TransferResult};

/// Four partitions `λ, μ, ν, ρ` padded to a common length `k`, with
/// `μ ⊆ λ` and `ρ ⊆ ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPair {
    lam: Vec<u32>,
    mu: Vec<u32>,
    nu: Vec<u32>,
    rho: Vec<u32>,
}

impl SkewPair {
    /// Pads all four to the longest length (at least `k`).
    pub fn new(lam: &[u32], mu: &[u32], nu: &[u32], rho: &[u32], k: usize) -> Result<Self> {
        let k = [lam.len(), mu.len(), nu.len(), rho.len(), k]
            .into_iter()
            .max()
            .unwrap_or(0);
        let pad = |v: &[u32]| -> Result<Vec<u32>> {
            Ok(Partition::new(v.to_vec())?.padded(k))
        };
        let sp = SkewPair {
            lam: pad(lam)?,
            mu: pad(mu)?,
            nu: pad(nu)?,
            rho: pad(rho)?,
        };
        let nested = |outer: &[u32], inner: &[u32]| outer.iter().zip(inner).all(|(o, i)| i <= o);
        if !nested(&sp.lam, &sp.mu) || !nested(&sp.nu, &sp.rho) {
            return Err(Error::MalformedPartitions(format!(
                "inner partition not contained in outer: {:?}/{:?}, {:?}/{:?}",
                sp.lam, sp.mu, sp.nu, sp.rho
            )));
        }
        Ok(sp)
    }

    pub fn k(&self) -> usize {
        self.lam.len()
    }

    pub fn lam(&self) -> &[u32] {
        &self.lam
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn nu(&self) -> &[u32] {
        &self.nu
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    /// `λ/μ`.
    pub fn first(&self) -> SkewShape {
        SkewShape::from_parts(&self.lam, &self.mu).expect("validated")
    }

    /// `ν/ρ`.
    pub fn second(&self) -> SkewShape {
        SkewShape::from_parts(&self.nu, &self.rho).expect("validated")
    }

    fn combine(&self, f: fn(u32, u32) -> u32) -> SkewShape {
        let outer: Vec<u32> = self.lam.iter().zip(&self.nu).map(|(&a, &b)| f(a, b)).collect();
        let inner: Vec<u32> = self.mu.iter().zip(&self.rho).map(|(&a, &b)| f(a, b)).collect();
        SkewShape::from_parts(&outer, &inner).expect("max/min of nested partitions")
    }
}

/// Every `SkewPair` with `k` rows and parts at most `max_part`.
pub fn all_skew_pairs(k: usize, max_part: u32) -> Vec<SkewPair> {
    let parts = crate::partition::partitions_in_box(k, max_part);
    let mut nested = Vec::new();
    for outer in &parts {
        for inner in &parts {
            if inner.is_contained_in(outer) {
                nested.push((outer.clone(), inner.clone()));
            }
        }
    }
    let mut out = Vec::with_capacity(nested.len() * nested.len());
    for (l, m) in &nested {
        for (n, r) in &nested {
            out.push(
                SkewPair::new(l.parts(), m.parts(), n.parts(), r.parts(), k)
                    .expect("nested partitions"),
            );
        }
    }
    out
}

/// The max and min shapes and the cells where `min` differs from the
/// wedge of the anchored shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinMaxShapes {
    pub maxshape: SkewShape,
    pub minshape: SkewShape,
    pub vset: BTreeSet<(u32, u32)>,
}

pub fn minmax(sp: &SkewPair) -> Result<MinMaxShapes> {
    Ok(SkewSetup::new(sp)?.shapes)
}

/// Whether each cell of the difference set lies in exactly one of the two
/// shapes and is incomparable to every cell of the other one.
pub fn vset_incomparability_check(sp: &SkewPair) -> Result<bool> {
    let shapes = minmax(sp)?;
    let a = sp.first().cell_set();
    let b = sp.second().cell_set();
    let comparable =
        |x: (u32, u32), y: (u32, u32)| (x.0 <= y.0 && x.1 <= y.1) || (y.0 <= x.0 && y.1 <= x.1);
    Ok(shapes.vset.iter().all(|&v| match (a.contains(&v), b.contains(&v)) {
        (true, false) => b.iter().all(|&c| !comparable(v, c)),
        (false, true) => a.iter().all(|&c| !comparable(v, c)),
        _ => false,
    }))
}

/// Precomputed data for repeated skew transfers on one `SkewPair`, with all
/// shapes embedded in a common grid.
#[derive(Clone, Debug)]
pub struct SkewSetup {
    grid: Grid,
    q: ElemSet,
    r: ElemSet,
    max: ElemSet,
    min: ElemSet,
    wedge: ElemSet,
    vee: ElemSet,
    vset: ElemSet,
    shapes: MinMaxShapes,
}

impl SkewSetup {
    pub fn new(sp: &SkewPair) -> Result<Self> {
        let rows = sp.k().max(1) as u32;
        let cols = sp.lam.iter().chain(&sp.nu).copied().max().unwrap_or(0).max(1);
        Self::with_grid(sp, Grid::new(rows, cols)?)
    }

    /// Embeds the shapes in a given grid, so that ids agree across pairs.
    pub fn with_grid(sp: &SkewPair, grid: Grid) -> Result<Self> {
        let first = sp.first();
        let second = sp.second();
        let maxshape = sp.combine(u32::max);
        let minshape = sp.combine(u32::min);
        let q = grid.set_of(&first)?;
        let r = grid.set_of(&second)?;
        let max = grid.set_of(&maxshape)?;
        let min = grid.set_of(&minshape)?;
        let (wedge, vee) = wedge_vee_sets(grid.poset(), q, r)?;
        let vset = min
            .difference(wedge)
            .union(wedge.difference(min));
        let shapes = MinMaxShapes {
            maxshape,
            minshape,
            vset: grid.cells_of(vset),
        };
        Ok(SkewSetup {
            grid,
            q,
            r,
            max,
            min,
            wedge,
            vee,
            vset,
            shapes,
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn shapes(&self) -> &MinMaxShapes {
        &self.shapes
    }

    /// Ids of `λ/μ` in the grid.
    pub fn q(&self) -> ElemSet {
        self.q
    }

    /// Ids of `ν/ρ` in the grid.
    pub fn r(&self) -> ElemSet {
        self.r
    }

    pub fn max_set(&self) -> ElemSet {
        self.max
    }

    pub fn min_set(&self) -> ElemSet {
        self.min
    }

    pub fn vset_ids(&self) -> ElemSet {
        self.vset
    }

    pub fn plan(&self) -> TransferPlan<'_> {
        TransferPlan::new(self.grid.labelled(), self.q, self.r).expect("skew shapes are convex")
    }

    /// Turns a transfer output `(alpha on ∧, beta on ∨)` into tableaux on
    /// `(max, min)`.
    ///
    /// On `max`, cells of `∨` keep their `beta` value and cells of the
    /// difference set take their `alpha` value; `min` is filled the other
    /// way round.
    pub fn finish(&self, res: &TransferResult) -> Result<(Tableau, Tableau)> {
        let n = self.grid.poset().len();
        let (a, b) = (res.alpha.values(), res.beta.values());
        let mut upper = vec![0; n];
        for x in self.max {
            upper[x] = if self.vee.contains(x) {
                b[x]
            } else if self.vset.contains(x) && self.wedge.contains(x) {
                a[x]
            } else {
                return Err(self.uncovered(x, "max"));
            };
        }
        let mut lower = vec![0; n];
        for x in self.min {
            lower[x] = if self.wedge.contains(x) {
                a[x]
            } else if self.vset.contains(x) && self.vee.contains(x) {
                b[x]
            } else {
                return Err(self.uncovered(x, "min"));
            };
        }
        Ok((
            Tableau::unchecked(self.max, upper),
            Tableau::unchecked(self.min, lower),
        ))
    }

    fn uncovered(&self, x: usize, which: &str) -> Error {
        Error::Inconsistent(format!(
            "cell {:?} of the {which} shape has no source value",
            self.grid.cell(x)
        ))
    }

    /// `U` on `λ/μ` and `T` on `ν/ρ` (grid ids) to `(U', T')` on
    /// `(max, min)`.
    pub fn transfer(&self, u: &Tableau, t: &Tableau) -> Result<(Tableau, Tableau)> {
        let ctx = self.plan().context(u.clone(), t.clone())?;
        let (up, lo) = self.finish(&crate::transfer::eta(&ctx))?;
        let lp = self.grid.labelled();
        if !respects(lp, &up) || !respects(lp, &lo) {
            return Err(Error::Inconsistent(format!(
                "skew transfer produced a non-semistandard tableau: {up:?}, {lo:?}"
            )));
        }
        Ok((up, lo))
    }
}

/// See [`SkewSetup::transfer`].
pub fn skew_transfer(sp: &SkewPair, u: &Tableau, t: &Tableau) -> Result<(Tableau, Tableau)> {
    SkewSetup::new(sp)?.transfer(u, t)
}
