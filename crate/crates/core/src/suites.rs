//! Exhaustive verification suites over small posets and shapes.
//!
//! Each suite returns a [`SuiteReport`] with instance and check counts and
//! the first counterexample found, if any.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::catalogue::{self, Entry};
use crate::error::{Error, Result};
use crate::genfunc::{self, expand, is_quasisymmetric, lr, Basis, ExponentPolynomial};
use crate::minmax::{all_skew_pairs, vset_incomparability_check, SkewSetup};
use crate::partition::{partitions_of, Partition};
use crate::poset::{convex_subposets, ideals, wedge_vee_prime_sets, wedge_vee_sets};
use crate::set::ElemSet;
use crate::tableaux::{respects, weight, EnumBounds, Tableau, Tableaux, Weight};
use crate::tlabel::{Grid, SkewShape, TLabelledPoset};
use crate::transfer::{
    compute_sets, sdiamond_oracle, TransferContext, TransferPlan, Variant,
};

/// Names accepted by [`run`].
pub const SUITES: [&str; 6] = [
    "celltransfer",
    "ideals",
    "schur",
    "skewschur",
    "oriented",
    "algorithm-oracle",
];

/// Scale parameters shared by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest catalogue poset.
    pub max_poset: usize,
    /// Entry cap for enumeration.
    pub ncap: u32,
    /// Largest partition size for the straight-shape suite.
    pub max_size: u32,
    /// Number of rows for skew pairs.
    pub rows: usize,
    /// Largest part for skew pairs.
    pub max_part: u32,
    /// Largest `S*` handed to the exhaustive oracle.
    pub oracle_limit: usize,
    /// Also check Schur positivity where it applies.
    pub schur: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_poset: 5,
            ncap: 3,
            max_size: 5,
            rows: 3,
            max_part: 3,
            oracle_limit: 12,
            schur: true,
        }
    }
}

/// Outcome of a suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    /// Number of top-level instances (pairs of subposets, shape pairs, ...).
    pub instances: u64,
    /// Number of individual checks performed.
    pub checks: u64,
    /// Number of instances skipped because a bound was exceeded.
    pub skipped: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    /// Human-readable detail lines.
    pub details: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.instances += other.instances;
        self.checks += other.checks;
        self.skipped += other.skipped;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self.details.extend(other.details);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} instances, {} checks, {} skipped, {} failures)",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances,
            self.checks,
            self.skipped,
            self.failures
        )?;
        if let Some(w) = &self.first_failure {
            write!(f, "\n  first counterexample: {w}")?;
        }
        Ok(())
    }
}

/// Runs a suite by name.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    match name {
        "celltransfer" => {
            let mut r = transfer_positivity(cfg)?;
            r.merge(transfer_injection(cfg)?);
            r.name = name.into();
            Ok(r)
        }
        "ideals" => ideal_suite(cfg),
        "schur" => schur_suite(cfg),
        "skewschur" => skew_suite(cfg),
        "oriented" => oriented_suite(cfg),
        "algorithm-oracle" => algorithm_oracle(cfg),
        other => Err(Error::UnknownSuite(other.into())),
    }
}

/// Per-labelling caches of tableaux and generating functions by subset.
struct Cache<'a> {
    lp: &'a TLabelledPoset,
    ncap: u32,
    tableaux: HashMap<ElemSet, Vec<Tableau>>,
    kfuncs: HashMap<ElemSet, ExponentPolynomial>,
}

impl<'a> Cache<'a> {
    fn new(lp: &'a TLabelledPoset, ncap: u32) -> Self {
        Cache {
            lp,
            ncap,
            tableaux: HashMap::new(),
            kfuncs: HashMap::new(),
        }
    }

    fn tableaux(&mut self, s: ElemSet) -> Result<&[Tableau]> {
        if !self.tableaux.contains_key(&s) {
            let all = Tableaux::new(self.lp, s, self.ncap, EnumBounds::default())?.collect();
            self.tableaux.insert(s, all);
        }
        Ok(&self.tableaux[&s])
    }

    fn kfunc(&mut self, s: ElemSet) -> Result<ExponentPolynomial> {
        if let Some(k) = self.kfuncs.get(&s) {
            return Ok(k.clone());
        }
        let k = genfunc::kfunc_on(self.lp, s, self.ncap)?;
        self.kfuncs.insert(s, k.clone());
        Ok(k)
    }

    fn difference(&mut self, plan: &TransferPlan<'_>) -> Result<ExponentPolynomial> {
        genfunc::plan_difference(plan, |s| self.kfunc(s))
    }
}

fn describe_pair(e: &Entry, lp: &TLabelledPoset, q: ElemSet, r: ElemSet) -> String {
    let labels: Vec<String> = lp
        .labels()
        .map(|((a, b), f)| format!("{a}-{b}:{}", if f == &crate::tlabel::StepFunction::Strict { "s" } else { "w" }))
        .collect();
    format!("{} [{}] Q={q:?} R={r:?}", e.name, labels.join(" "))
}

fn for_each_labelled_pair<F>(cfg: &SuiteConfig, pairs: PairKind, mut f: F) -> Result<()>
where
    F: FnMut(&Entry, &TLabelledPoset, &[(ElemSet, ElemSet)]) -> Result<()>,
{
    for e in catalogue::posets(cfg.max_poset) {
        let subsets = match pairs {
            PairKind::Convex => convex_subposets(&e.poset)?,
            PairKind::Ideals => ideals(&e.poset)?,
        };
        let all: Vec<(ElemSet, ElemSet)> = subsets
            .iter()
            .flat_map(|&q| subsets.iter().map(move |&r| (q, r)))
            .collect();
        for lp in catalogue::weak_strict_labellings(&e.poset) {
            f(&e, &lp, &all)?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum PairKind {
    Convex,
    Ideals,
}

fn weights_sum(a: &Tableau, b: &Tableau, ncap: u32) -> Weight {
    weight(a, ncap).add(&weight(b, ncap))
}

/// Monomial positivity of `K_{Q∧R} K_{Q∨R} - K_Q K_R` for every catalogue
/// poset, every Weak/Strict labelling and every pair of convex subsets.
pub fn transfer_positivity(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("celltransfer-positivity");
    for_each_labelled_pair(cfg, PairKind::Convex, |e, lp, pairs| {
        let mut cache = Cache::new(lp, cfg.ncap);
        for &(q, r) in pairs {
            let plan = TransferPlan::new(lp, q, r)?;
            let d = cache.difference(&plan)?;
            rep.instances += 1;
            rep.check(d.is_monomial_positive(), || {
                let (x, c) = d.first_negative().expect("negative term");
                format!("{}: coefficient {c} at {x:?}", describe_pair(e, lp, q, r))
            });
        }
        Ok(())
    })?;
    Ok(rep)
}

/// Checks that the transfer of every pair of tableaux is valid and
/// weight-preserving, that no two pairs share an image, and that the
/// inverse recovers the input.
fn injection_check(
    rep: &mut SuiteReport,
    plan: &TransferPlan<'_>,
    cache: &mut Cache<'_>,
    ncap: u32,
    describe: &dyn Fn() -> String,
    check_inverse: bool,
) -> Result<()> {
    let lp = plan.labelled();
    let ws = cache.tableaux(plan.q())?.to_vec();
    let ss = cache.tableaux(plan.r())?.to_vec();
    let mut seen: HashSet<(Tableau, Tableau)> = HashSet::with_capacity(ws.len() * ss.len());
    rep.instances += 1;
    for w in &ws {
        for s in &ss {
            let res = plan.eta(w, s);
            let valid = respects(lp, &res.alpha) && respects(lp, &res.beta);
            rep.check(valid, || format!("{}: invalid output for {w:?}, {s:?}", describe()));
            rep.check(
                weights_sum(w, s, ncap) == weights_sum(&res.alpha, &res.beta, ncap),
                || format!("{}: weight changed for {w:?}, {s:?}", describe()),
            );
            if check_inverse {
                let back = plan.mu(&res.alpha, &res.beta);
                let ok = matches!(&back, Ok((a, b)) if a == w && b == s);
                rep.check(ok, || format!("{}: inverse fails on {w:?}, {s:?}", describe()));
            }
            let fresh = seen.insert((res.alpha, res.beta));
            rep.check(fresh, || format!("{}: collision at {w:?}, {s:?}", describe()));
        }
    }
    Ok(())
}

/// Injectivity, validity, weight preservation and the inverse of the cell
/// transfer on every catalogue instance.
pub fn transfer_injection(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("celltransfer-injection");
    for_each_labelled_pair(cfg, PairKind::Convex, |e, lp, pairs| {
        let mut cache = Cache::new(lp, cfg.ncap);
        for &(q, r) in pairs {
            let plan = TransferPlan::new(lp, q, r)?;
            injection_check(
                &mut rep,
                &plan,
                &mut cache,
                cfg.ncap,
                &|| describe_pair(e, lp, q, r),
                true,
            )?;
        }
        Ok(())
    })?;
    Ok(rep)
}

/// The iterative transfer swaps exactly the minimal transferrable set found
/// by exhaustive search, and its output equals swapping on that set.
pub fn algorithm_oracle(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("algorithm-oracle");
    for_each_labelled_pair(cfg, PairKind::Convex, |e, lp, pairs| {
        let mut cache = Cache::new(lp, cfg.ncap);
        for &(q, r) in pairs {
            let plan = TransferPlan::new(lp, q, r)?;
            if plan.intersection().is_empty() {
                continue;
            }
            let ws = cache.tableaux(q)?.to_vec();
            let ss = cache.tableaux(r)?.to_vec();
            for w in &ws {
                for s in &ss {
                    let ctx = TransferContext::from_plan(plan, w.clone(), s.clone())?;
                    let sets = compute_sets(&ctx);
                    if sets.s_star.len() > cfg.oracle_limit {
                        rep.skipped += 1;
                        continue;
                    }
                    rep.instances += 1;
                    let oracle = sdiamond_oracle(&ctx);
                    let ok = matches!(&oracle, Ok(o) if *o == sets.s_diamond)
                        && sets.s_diamond.is_subset(sets.s_star);
                    rep.check(ok, || {
                        format!(
                            "{}: omega={w:?} sigma={s:?} algorithm={:?} oracle={oracle:?}",
                            describe_pair(e, lp, q, r),
                            sets.s_diamond
                        )
                    });
                    let res = plan.eta(w, s);
                    let direct = crate::transfer::apply_subset(&ctx, res.transferred)?;
                    rep.check(direct == (res.alpha, res.beta), || {
                        format!(
                            "{}: output differs from swapping on the transferred set",
                            describe_pair(e, lp, q, r)
                        )
                    });
                }
            }
        }
        Ok(())
    })?;
    Ok(rep)
}

/// Order ideals: positivity of the lattice difference, injectivity of the
/// transfer onto `∧'`/`∨'`, and agreement of the subposet operations with
/// meet and join in the lattice of ideals.
pub fn ideal_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("ideals");
    for_each_labelled_pair(cfg, PairKind::Ideals, |e, lp, pairs| {
        let p = lp.poset();
        let unique_min = p.elements().iter().filter(|&x| p.lower_covers(x).is_empty()).count() == 1;
        let mut cache = Cache::new(lp, cfg.ncap);
        for &(i, j) in pairs {
            let (w, v) = wedge_vee_prime_sets(p, i, j)?;
            rep.check(w == i.intersection(j) && v == i.union(j), || {
                format!("{}: primed operations differ from meet/join", describe_pair(e, lp, i, j))
            });
            // With the empty ideal the unprimed operations return the
            // pair in the opposite order, so only nonempty ideals compare.
            if unique_min && !i.is_empty() && !j.is_empty() {
                let (w, v) = wedge_vee_sets(p, i, j)?;
                rep.check(w == i.intersection(j) && v == i.union(j), || {
                    format!("{}: operations differ from meet/join", describe_pair(e, lp, i, j))
                });
            }
            let plan = TransferPlan::with_variant(lp, i, j, Variant::Ideal)?;
            let d = cache.difference(&plan)?;
            rep.check(d.is_monomial_positive(), || {
                let (x, c) = d.first_negative().expect("negative term");
                format!("{}: coefficient {c} at {x:?}", describe_pair(e, lp, i, j))
            });
            injection_check(
                &mut rep,
                &plan,
                &mut cache,
                cfg.ncap,
                &|| describe_pair(e, lp, i, j),
                false,
            )?;
        }
        Ok(())
    })?;
    Ok(rep)
}

/// Generating functions of oriented labellings are quasisymmetric.
pub fn oriented_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("oriented");
    for e in catalogue::posets(cfg.max_poset) {
        for lp in catalogue::weak_strict_labellings(&e.poset) {
            rep.instances += 1;
            debug_assert!(genfunc::oriented_check(&lp));
            let k = genfunc::kfunc(&lp, cfg.ncap)?;
            rep.check(is_quasisymmetric(&k), || {
                format!("{}: not quasisymmetric: {k}", describe_pair(&e, &lp, ElemSet::EMPTY, ElemSet::EMPTY))
            });
        }
    }
    Ok(rep)
}

fn schur_map_string(m: &std::collections::BTreeMap<Partition, BigInt>) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .rev()
        .map(|(p, c)| {
            if c == &BigInt::from(1) {
                format!("s{p}")
            } else {
                format!("{c}*s{p}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
        .replace("+ -", "- ")
}

/// Straight shapes `λ`, `μ` anchored at the origin with
/// `|λ|, |μ| <= max_size`: `s_{λ∧μ} s_{λ∨μ} - s_λ s_μ` is monomial-positive
/// at the entry cap and Schur-positive.
pub fn schur_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("schur");
    let m = cfg.max_size.max(1);
    let grid = Grid::new(m, m)?;
    let lp = grid.labelled();
    let shapes: Vec<Partition> = (1..=cfg.max_size).flat_map(partitions_of).collect();
    let mut cache = Cache::new(lp, cfg.ncap);
    for lam in &shapes {
        for mu in &shapes {
            rep.instances += 1;
            let a = SkewShape::straight(lam.clone());
            let b = SkewShape::straight(mu.clone());
            let (q, r) = (grid.set_of(&a)?, grid.set_of(&b)?);
            let plan = TransferPlan::new(lp, q, r)?;
            let name = || format!("lambda={lam} mu={mu}");
            rep.check(
                plan.wedge() == q.intersection(r) && plan.vee() == q.union(r),
                || format!("{}: wedge/vee differ from intersection/union", name()),
            );
            let d = cache.difference(&plan)?;
            rep.check(d.is_monomial_positive(), || {
                let (x, c) = d.first_negative().expect("negative term");
                format!("{}: coefficient {c} at {x:?}", name())
            });
            if !cfg.schur {
                continue;
            }
            let lo = grid.shape_of(plan.wedge()).expect("straight shape");
            let hi = grid.shape_of(plan.vee()).expect("straight shape");
            let schur = lr::difference(&lr::product_expansion(&lo, &hi), &lr::product_expansion(&a, &b));
            rep.check(schur.values().all(|c| !c.is_negative()), || {
                format!("{}: not Schur-positive: {}", name(), schur_map_string(&schur))
            });
            // Second route when the truncation is large enough.
            if lam.size() + mu.size() <= cfg.ncap {
                let e = expand(&d, Basis::Schur)?;
                let same = e.is_complete()
                    && genfunc::basis::schur_coefficients(&e) == schur;
                rep.check(same, || format!("{}: expansion routes disagree", name()));
            }
            if lam <= mu && !schur.is_empty() {
                rep.details.push(format!(
                    "s{} s{} - s{lam} s{mu} = {}",
                    lo.outer(),
                    hi.outer(),
                    schur_map_string(&schur)
                ));
            }
        }
    }
    Ok(rep)
}

/// Skew pairs with `rows` rows and parts at most `max_part`: positivity of
/// `s_max s_min - s_{λ/μ} s_{ν/ρ}`, the skew transfer is injective,
/// semistandard and weight-preserving, and the difference-set cells are
/// incomparable to the other shape.
pub fn skew_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("skewschur");
    let grid = Grid::new(cfg.rows.max(1) as u32, cfg.max_part.max(1))?;
    let lp = grid.labelled();
    let mut cache = Cache::new(lp, cfg.ncap);
    let mut nonempty_vset = 0u64;
    for sp in all_skew_pairs(cfg.rows, cfg.max_part) {
        rep.instances += 1;
        let name = || {
            format!(
                "{:?}/{:?}, {:?}/{:?}",
                sp.lam(),
                sp.mu(),
                sp.nu(),
                sp.rho()
            )
        };
        let setup = SkewSetup::with_grid(&sp, grid.clone())?;
        if !setup.vset_ids().is_empty() {
            nonempty_vset += 1;
        }
        rep.check(vset_incomparability_check(&sp)?, || {
            format!("{}: difference cell comparable to the other shape", name())
        });
        let lhs = cache.kfunc(setup.max_set())?.mul(&cache.kfunc(setup.min_set())?)?;
        let rhs = cache.kfunc(setup.q())?.mul(&cache.kfunc(setup.r())?)?;
        let d = lhs.sub(&rhs)?;
        rep.check(d.is_monomial_positive(), || {
            let (x, c) = d.first_negative().expect("negative term");
            format!("{}: coefficient {c} at {x:?}", name())
        });
        if cfg.schur {
            let s = lr::difference(
                &lr::product_expansion(&setup.shapes().maxshape, &setup.shapes().minshape),
                &lr::product_expansion(&sp.first(), &sp.second()),
            );
            rep.check(s.values().all(|c| !c.is_negative()), || {
                format!("{}: not Schur-positive: {}", name(), schur_map_string(&s))
            });
        }
        let plan = setup.plan();
        let us = cache.tableaux(setup.q())?.to_vec();
        let ts = cache.tableaux(setup.r())?.to_vec();
        let mut seen: HashSet<(Tableau, Tableau)> = HashSet::with_capacity(us.len() * ts.len());
        let mut ok = true;
        let mut witness = None;
        for u in &us {
            for t in &ts {
                let out = setup.finish(&plan.eta(u, t));
                let good = match out {
                    Ok((up, lo)) => {
                        let valid = respects(lp, &up) && respects(lp, &lo);
                        let same = weights_sum(u, t, cfg.ncap) == weights_sum(&up, &lo, cfg.ncap);
                        valid && same && seen.insert((up, lo))
                    }
                    Err(_) => false,
                };
                if !good && witness.is_none() {
                    witness = Some(format!("{}: U={u:?} T={t:?}", name()));
                }
                ok &= good;
            }
        }
        rep.check(ok, || witness.unwrap_or_default());
    }
    rep.details
        .push(format!("{nonempty_vset} pairs have a nonempty difference set"));
    Ok(rep)
}

/// Two inputs of the all-of-`S*` transfer with the same output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub rows: u32,
    pub cols: u32,
    pub q: ElemSet,
    pub r: ElemSet,
    pub first: (Tableau, Tableau),
    pub second: (Tableau, Tableau),
    pub output: (Tableau, Tableau),
}

/// Searches convex subsets of small grids, smallest union first, for a
/// collision of the all-of-`S*` transfer.
pub fn find_eta_star_collision(max_cells: usize, ncap: u32) -> Result<Option<Collision>> {
    for (rows, cols) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let grid = Grid::new(rows, cols)?;
        let lp = grid.labelled();
        let subsets = convex_subposets(lp.poset())?;
        let mut pairs: Vec<(ElemSet, ElemSet)> = subsets
            .iter()
            .flat_map(|&q| subsets.iter().map(move |&r| (q, r)))
            .filter(|(q, r)| q.union(*r).len() <= max_cells && q.intersects(*r))
            .collect();
        pairs.sort_by_key(|(q, r)| (q.union(*r).len(), q.0, r.0));
        let mut cache = Cache::new(lp, ncap);
        for (q, r) in pairs {
            let plan = TransferPlan::new(lp, q, r)?;
            let ws = cache.tableaux(q)?.to_vec();
            let ss = cache.tableaux(r)?.to_vec();
            let mut seen: HashMap<(Tableau, Tableau), (Tableau, Tableau)> = HashMap::new();
            for w in &ws {
                for s in &ss {
                    let ctx = TransferContext::from_plan(plan, w.clone(), s.clone())?;
                    let out = crate::transfer::eta_star(&ctx);
                    if let Some(prev) = seen.get(&out) {
                        return Ok(Some(Collision {
                            rows,
                            cols,
                            q,
                            r,
                            first: prev.clone(),
                            second: (w.clone(), s.clone()),
                            output: out,
                        }));
                    }
                    seen.insert(out, (w.clone(), s.clone()));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig {
            max_poset: 3,
            ncap: 2,
            max_size: 3,
            rows: 2,
            max_part: 2,
            ..Default::default()
        };
        for name in SUITES {
            let rep = run(name, &cfg).unwrap();
            assert!(rep.passed(), "{rep}");
            assert!(rep.checks > 0, "{name}");
        }
        assert!(matches!(run("nope", &cfg), Err(Error::UnknownSuite(_))));
    }
}
