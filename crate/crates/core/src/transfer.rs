//! Cell transfer between tableaux on two convex subposets.
//!
//! Given tableaux `omega` on `Q` and `sigma` on `R`, the transfer produces
//! tableaux on `Q ∧ R` and `Q ∨ R` with the same combined weight by
//! swapping the two values at a set of cells of `Q ∩ R`. The swapped set is
//! the smallest one that makes both outputs valid; it is found by the
//! iterative critical-cell procedure in [`run_algorithm`] and, for small
//! instances, by exhaustive search in [`sdiamond_oracle`].

use crate::error::{Error, Result};
use crate::poset::{wedge_vee_prime_sets, wedge_vee_sets};
use crate::set::ElemSet;
use crate::tableaux::{first_violation, respects, Tableau};
use crate::tlabel::TLabelledPoset;

/// Subsets of `S*` larger than this are not searched exhaustively.
pub const ORACLE_BOUND: usize = 20;

/// Which pair of output domains to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `Q ∧ R` and `Q ∨ R`.
    Standard,
    /// `Q ∧' R` and `Q ∨' R`; requires both inputs to be order ideals.
    Ideal,
}

/// The shape data of a transfer: the two inputs and the two output domains.
#[derive(Clone, Copy, Debug)]
pub struct TransferPlan<'a> {
    lp: &'a TLabelledPoset,
    q: ElemSet,
    r: ElemSet,
    wedge: ElemSet,
    vee: ElemSet,
    variant: Variant,
}

impl<'a> TransferPlan<'a> {
    pub fn new(lp: &'a TLabelledPoset, q: ElemSet, r: ElemSet) -> Result<Self> {
        Self::with_variant(lp, q, r, Variant::Standard)
    }

    pub fn ideal(lp: &'a TLabelledPoset, q: ElemSet, r: ElemSet) -> Result<Self> {
        Self::with_variant(lp, q, r, Variant::Ideal)
    }

    pub fn with_variant(
        lp: &'a TLabelledPoset,
        q: ElemSet,
        r: ElemSet,
        variant: Variant,
    ) -> Result<Self> {
        let p = lp.poset();
        for s in [q, r] {
            if !s.is_subset(p.elements()) || !p.is_convex(s) {
                return Err(Error::NotConvex(s.to_vec()));
            }
        }
        let (wedge, vee) = match variant {
            Variant::Standard => wedge_vee_sets(p, q, r)?,
            Variant::Ideal => {
                for s in [q, r] {
                    if !p.is_ideal(s) {
                        return Err(Error::NotAnIdeal(s.to_vec()));
                    }
                }
                wedge_vee_prime_sets(p, q, r)?
            }
        };
        Ok(TransferPlan {
            lp,
            q,
            r,
            wedge,
            vee,
            variant,
        })
    }

    pub fn labelled(&self) -> &'a TLabelledPoset {
        self.lp
    }

    pub fn q(&self) -> ElemSet {
        self.q
    }

    pub fn r(&self) -> ElemSet {
        self.r
    }

    pub fn wedge(&self) -> ElemSet {
        self.wedge
    }

    pub fn vee(&self) -> ElemSet {
        self.vee
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn intersection(&self) -> ElemSet {
        self.q.intersection(self.r)
    }

    /// Builds a validated context for a pair of input tableaux.
    pub fn context(&self, omega: Tableau, sigma: Tableau) -> Result<TransferContext<'a>> {
        TransferContext::from_plan(*self, omega, sigma)
    }

    /// Runs the transfer without validating the inputs.
    ///
    /// `omega` and `sigma` must be valid tableaux on `Q` and `R`.
    pub fn eta(&self, omega: &Tableau, sigma: &Tableau) -> TransferResult {
        let run = self.run(omega.values(), sigma.values(), false);
        self.finish(run)
    }

    fn finish(&self, run: Run) -> TransferResult {
        TransferResult {
            alpha: Tableau::unchecked(self.wedge, run.wbar),
            beta: Tableau::unchecked(self.vee, run.sbar),
            transferred: run.transferred,
            iterations: run.count,
            trace: run.rounds,
        }
    }

    /// Glues `omega` and `sigma` onto the output domains.
    fn glue(&self, omega: &[u32], sigma: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let n = self.lp.len();
        let mut wbar = vec![0; n];
        let mut sbar = vec![0; n];
        for x in self.wedge {
            wbar[x] = if self.q.contains(x) { omega[x] } else { sigma[x] };
        }
        for x in self.vee {
            sbar[x] = if self.r.contains(x) { sigma[x] } else { omega[x] };
        }
        (wbar, sbar)
    }

    /// The critical cells of the current state.
    ///
    /// A cell of `Q ∩ R` not yet transferred is critical when the cover
    /// to a lower neighbour in `R` fails in `wbar`, or the cover to an
    /// upper neighbour in `Q` fails in `sbar`. The remaining two conditions
    /// of the procedure range over `Q ∩ R` and are special cases of these.
    fn critical(&self, wbar: &[u32], sbar: &[u32], done: ElemSet) -> ElemSet {
        let p = self.lp.poset();
        let lower_pool = self.r.intersection(self.wedge);
        let upper_pool = self.q.intersection(self.vee);
        let mut out = ElemSet::EMPTY;
        for s in self.intersection().difference(done) {
            let a = p
                .lower_covers(s)
                .intersection(lower_pool)
                .iter()
                .any(|t| !self.lp.holds(t, s, wbar[t], wbar[s]));
            let c = a
                || p
                    .upper_covers(s)
                    .intersection(upper_pool)
                    .iter()
                    .any(|t| !self.lp.holds(s, t, sbar[s], sbar[t]));
            if c {
                out = out.with(s);
            }
        }
        out
    }

    fn run(&self, omega: &[u32], sigma: &[u32], keep_trace: bool) -> Run {
        let (mut wbar, mut sbar) = self.glue(omega, sigma);
        let mut transferred = ElemSet::EMPTY;
        let mut rounds = Vec::new();
        let mut count = 0;
        loop {
            let crit = self.critical(&wbar, &sbar, transferred);
            if crit.is_empty() {
                break;
            }
            if keep_trace {
                rounds.push(Round {
                    critical: crit,
                    omega_bar: Tableau::unchecked(self.wedge, wbar.clone()),
                    sigma_bar: Tableau::unchecked(self.vee, sbar.clone()),
                });
            }
            for s in crit {
                std::mem::swap(&mut wbar[s], &mut sbar[s]);
            }
            transferred = transferred.union(crit);
            count += 1;
        }
        Run {
            wbar,
            sbar,
            transferred,
            rounds,
            count,
        }
    }

    /// Recovers `(omega, sigma)` from an output pair of the transfer.
    pub fn mu(&self, alpha: &Tableau, beta: &Tableau) -> Result<(Tableau, Tableau)> {
        if alpha.domain() != self.wedge || beta.domain() != self.vee {
            return Err(Error::NotInImage);
        }
        let n = self.lp.len();
        let (a, b) = (alpha.values(), beta.values());
        if a.len() != n || b.len() != n {
            return Err(Error::NotInImage);
        }
        let mut w = vec![0; n];
        let mut s = vec![0; n];
        for x in self.q {
            w[x] = if self.wedge.contains(x) { a[x] } else { b[x] };
        }
        for x in self.r {
            s[x] = if self.vee.contains(x) { b[x] } else { a[x] };
        }
        let p = self.lp.poset();
        let mut back = ElemSet::EMPTY;
        loop {
            let mut crit = ElemSet::EMPTY;
            for x in self.intersection().difference(back) {
                let up = p
                    .upper_covers(x)
                    .intersection(self.q)
                    .iter()
                    .any(|t| !self.lp.holds(x, t, w[x], w[t]));
                let down = up
                    || p
                        .lower_covers(x)
                        .intersection(self.r)
                        .iter()
                        .any(|t| !self.lp.holds(t, x, s[t], s[x]));
                if down {
                    crit = crit.with(x);
                }
            }
            if crit.is_empty() {
                break;
            }
            for x in crit {
                std::mem::swap(&mut w[x], &mut s[x]);
            }
            back = back.union(crit);
        }
        let omega = Tableau::unchecked(self.q, w);
        let sigma = Tableau::unchecked(self.r, s);
        if !respects(self.lp, &omega) || !respects(self.lp, &sigma) {
            return Err(Error::NotInImage);
        }
        let again = self.eta(&omega, &sigma);
        if &again.alpha != alpha || &again.beta != beta {
            return Err(Error::NotInImage);
        }
        Ok((omega, sigma))
    }
}

struct Run {
    wbar: Vec<u32>,
    sbar: Vec<u32>,
    transferred: ElemSet,
    rounds: Vec<Round>,
    count: usize,
}

/// One round of the procedure: the state before swapping and the cells
/// swapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub critical: ElemSet,
    pub omega_bar: Tableau,
    pub sigma_bar: Tableau,
}

/// Inputs of a transfer: a plan plus valid tableaux on `Q` and `R`.
#[derive(Clone, Debug)]
pub struct TransferContext<'a> {
    plan: TransferPlan<'a>,
    omega: Tableau,
    sigma: Tableau,
}

impl<'a> TransferContext<'a> {
    pub fn new(
        lp: &'a TLabelledPoset,
        q: ElemSet,
        r: ElemSet,
        omega: Tableau,
        sigma: Tableau,
    ) -> Result<Self> {
        Self::from_plan(TransferPlan::new(lp, q, r)?, omega, sigma)
    }

    /// A context whose output domains are `Q ∧' R` and `Q ∨' R`.
    pub fn ideal(
        lp: &'a TLabelledPoset,
        q: ElemSet,
        r: ElemSet,
        omega: Tableau,
        sigma: Tableau,
    ) -> Result<Self> {
        Self::from_plan(TransferPlan::ideal(lp, q, r)?, omega, sigma)
    }

    pub fn from_plan(plan: TransferPlan<'a>, omega: Tableau, sigma: Tableau) -> Result<Self> {
        let lp = plan.lp;
        for (name, t, dom) in [("omega", &omega, plan.q), ("sigma", &sigma, plan.r)] {
            if t.domain() != dom || t.values().len() != lp.len() {
                return Err(Error::InvalidTableau(format!(
                    "{name} has domain {:?}, expected {dom:?}",
                    t.domain()
                )));
            }
            if let Some((lo, hi)) = first_violation(lp, t) {
                return Err(Error::InvalidTableau(format!(
                    "{name} violates the cover {lo} < {hi} (values {} and {})",
                    t.values()[lo],
                    t.values()[hi]
                )));
            }
        }
        Ok(TransferContext { plan, omega, sigma })
    }

    pub fn plan(&self) -> &TransferPlan<'a> {
        &self.plan
    }

    pub fn omega(&self) -> &Tableau {
        &self.omega
    }

    pub fn sigma(&self) -> &Tableau {
        &self.sigma
    }
}

/// The cell sets attached to a transfer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferSets {
    /// Cells of `Q ∩ R` with `omega < sigma`.
    pub plus: ElemSet,
    /// Cells of `Q ∩ R` covered by a cell of `Q \ R`.
    pub bd_q: ElemSet,
    /// Cells of `Q ∩ R` covering a cell of `R \ Q`.
    pub bd_r: ElemSet,
    pub bd_q_plus: ElemSet,
    pub bd_r_plus: ElemSet,
    pub s_star: ElemSet,
    /// The set actually swapped by [`run_algorithm`].
    pub s_diamond: ElemSet,
}

/// Output of a transfer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferResult {
    pub alpha: Tableau,
    pub beta: Tableau,
    pub transferred: ElemSet,
    /// Number of rounds that swapped at least one cell.
    pub iterations: usize,
    /// Per-round states; empty unless produced by a tracing entry point.
    pub trace: Vec<Round>,
}

/// Union of the connected components of `plus` (under covers inside
/// `plus`) that meet `seeds`.
fn components_meeting(lp: &TLabelledPoset, plus: ElemSet, seeds: ElemSet) -> ElemSet {
    let p = lp.poset();
    let mut reached = seeds.intersection(plus);
    let mut frontier = reached;
    while !frontier.is_empty() {
        let mut next = ElemSet::EMPTY;
        for x in frontier {
            next = next.union(p.lower_covers(x).union(p.upper_covers(x)));
        }
        frontier = next.intersection(plus).difference(reached);
        reached = reached.union(frontier);
    }
    reached
}

/// `plus`, the boundary sets, their components in `plus`, `S*`, and the
/// transferred set.
pub fn compute_sets(ctx: &TransferContext<'_>) -> TransferSets {
    let plan = &ctx.plan;
    let p = plan.lp.poset();
    let inter = plan.intersection();
    let q_only = plan.q.difference(plan.r);
    let r_only = plan.r.difference(plan.q);
    let (w, s) = (ctx.omega.values(), ctx.sigma.values());
    let plus: ElemSet = inter.iter().filter(|&x| w[x] < s[x]).collect();
    let bd_r: ElemSet = inter
        .iter()
        .filter(|&x| p.lower_covers(x).intersects(r_only))
        .collect();
    let bd_q: ElemSet = inter
        .iter()
        .filter(|&x| p.upper_covers(x).intersects(q_only))
        .collect();
    let bd_q_plus = components_meeting(plan.lp, plus, bd_q);
    let bd_r_plus = components_meeting(plan.lp, plus, bd_r);
    TransferSets {
        plus,
        bd_q,
        bd_r,
        bd_q_plus,
        bd_r_plus,
        s_star: bd_q_plus.union(bd_r_plus),
        s_diamond: run_algorithm(ctx).transferred,
    }
}

/// Candidate outputs when swapping exactly on `s`.
///
/// The outputs always preserve weight but need not be valid tableaux.
pub fn apply_subset(ctx: &TransferContext<'_>, s: ElemSet) -> Result<(Tableau, Tableau)> {
    let plan = &ctx.plan;
    if !s.is_subset(plan.intersection()) {
        return Err(Error::SubsetOutOfRange);
    }
    let (w, g) = (ctx.omega.values(), ctx.sigma.values());
    let n = plan.lp.len();
    let mut alpha = vec![0; n];
    let mut beta = vec![0; n];
    for x in plan.wedge {
        alpha[x] = if !plan.q.contains(x) || s.contains(x) { g[x] } else { w[x] };
    }
    for x in plan.vee {
        beta[x] = if !plan.r.contains(x) || s.contains(x) { w[x] } else { g[x] };
    }
    Ok((
        Tableau::unchecked(plan.wedge, alpha),
        Tableau::unchecked(plan.vee, beta),
    ))
}

/// Whether swapping on `s` (a subset of `S*`) yields two valid tableaux.
pub fn is_transferrable(ctx: &TransferContext<'_>, s: ElemSet) -> Result<bool> {
    let sets = compute_sets(ctx);
    if !s.is_subset(sets.s_star) {
        return Err(Error::SubsetOutOfRange);
    }
    Ok(transferrable_unchecked(ctx, s))
}

fn transferrable_unchecked(ctx: &TransferContext<'_>, s: ElemSet) -> bool {
    let (a, b) = apply_subset(ctx, s).expect("subset of the intersection");
    respects(ctx.plan.lp, &a) && respects(ctx.plan.lp, &b)
}

/// Every transferrable subset of `S*`, by exhaustive search.
pub fn transferrable_subsets(ctx: &TransferContext<'_>) -> Result<Vec<ElemSet>> {
    let star = compute_sets(ctx).s_star;
    if star.len() > ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "size of S* for exhaustive search",
            limit: ORACLE_BOUND,
            got: star.len(),
        });
    }
    Ok(star
        .subsets()
        .filter(|&s| transferrable_unchecked(ctx, s))
        .collect())
}

/// The smallest transferrable subset of `S*`, found by exhaustive search.
///
/// The result is the intersection of all transferrable subsets; it is
/// checked to be transferrable itself and to coincide with the first
/// transferrable subset of least cardinality.
pub fn sdiamond_oracle(ctx: &TransferContext<'_>) -> Result<ElemSet> {
    let all = transferrable_subsets(ctx)?;
    let Some(&first) = all.iter().min_by_key(|s| (s.len(), s.0)) else {
        return Err(Error::Inconsistent("S* is not transferrable".into()));
    };
    let meet = all.iter().fold(first, |acc, &s| acc.intersection(s));
    if meet != first {
        return Err(Error::Inconsistent(format!(
            "smallest transferrable set {first:?} differs from the intersection {meet:?}"
        )));
    }
    if !transferrable_unchecked(ctx, meet) {
        return Err(Error::Inconsistent(format!(
            "intersection {meet:?} of transferrable sets is not transferrable"
        )));
    }
    Ok(meet)
}

/// The iterative critical-cell procedure.
pub fn run_algorithm(ctx: &TransferContext<'_>) -> TransferResult {
    ctx.plan.eta(&ctx.omega, &ctx.sigma)
}

/// [`run_algorithm`] with per-round states recorded in `trace`.
pub fn run_algorithm_traced(ctx: &TransferContext<'_>) -> TransferResult {
    let run = ctx.plan.run(ctx.omega.values(), ctx.sigma.values(), true);
    ctx.plan.finish(run)
}

pub fn eta(ctx: &TransferContext<'_>) -> TransferResult {
    run_algorithm(ctx)
}

/// Swaps on all of `S*`. Valid and weight-preserving but not injective.
pub fn eta_star(ctx: &TransferContext<'_>) -> (Tableau, Tableau) {
    apply_subset(ctx, compute_sets(ctx).s_star).expect("S* lies in the intersection")
}

/// The transfer onto `Q ∧' R` and `Q ∨' R` for order ideals `Q`, `R`.
pub fn eta_prime(ctx: &TransferContext<'_>) -> Result<TransferResult> {
    let plan = match ctx.plan.variant {
        Variant::Ideal => ctx.plan,
        Variant::Standard => TransferPlan::ideal(ctx.plan.lp, ctx.plan.q, ctx.plan.r)?,
    };
    Ok(plan.eta(&ctx.omega, &ctx.sigma))
}

/// Inverse of [`eta`] on its image.
pub fn mu(
    lp: &TLabelledPoset,
    q: ElemSet,
    r: ElemSet,
    alpha: &Tableau,
    beta: &Tableau,
) -> Result<(Tableau, Tableau)> {
    TransferPlan::new(lp, q, r)?.mu(alpha, beta)
}
