//! Truncated generating functions of labelled posets and their expansions.
//!
//! `kfunc(LP, n)` is the sum over all tableaux with entries in `1..=n` of
//! `x_1^{c_1} ⋯ x_n^{c_n}`, where `c_i` counts the entries equal to `i`.

pub mod basis;
pub mod lr;
pub mod poly;

use num_bigint::BigInt;

pub use basis::{
    basis_element, expand, fundamental_qsym, is_quasisymmetric, is_symmetric, monomial_qsym,
    monomial_sym, schur_poly, Basis, BasisExpansion,
};
pub use poly::ExponentPolynomial;

use crate::error::Result;
use crate::set::ElemSet;
use crate::tableaux::{weight, EnumBounds, Tableau, Tableaux};
use crate::tlabel::TLabelledPoset;
use crate::transfer::{TransferPlan, Variant};

pub(crate) fn weight_polynomial<I: Iterator<Item = Tableau>>(
    tableaux: I,
    nvars: usize,
) -> ExponentPolynomial {
    let mut counts: std::collections::HashMap<Vec<u32>, u64> = Default::default();
    for t in tableaux {
        *counts.entry(weight(&t, nvars as u32).0).or_default() += 1;
    }
    let mut p = ExponentPolynomial::zero(nvars);
    for (e, c) in counts {
        p.add_term(e, BigInt::from(c));
    }
    p
}

/// The generating function of all tableaux of `lp` with entries at most
/// `ncap`.
pub fn kfunc(lp: &TLabelledPoset, ncap: u32) -> Result<ExponentPolynomial> {
    kfunc_on(lp, lp.poset().elements(), ncap)
}

/// The generating function of the induced labelled subposet on `members`.
pub fn kfunc_on(lp: &TLabelledPoset, members: ElemSet, ncap: u32) -> Result<ExponentPolynomial> {
    let it = Tableaux::new(lp, members, ncap, EnumBounds::default())?;
    Ok(weight_polynomial(it, ncap as usize))
}

/// A positivity report for `K_{Q∧R} K_{Q∨R} - K_Q K_R` (or its
/// order-ideal analogue).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceReport {
    pub difference: ExponentPolynomial,
    pub monomial_positive: bool,
    /// A negative term, when there is one.
    pub witness: Option<(Vec<u32>, BigInt)>,
    pub symmetric: bool,
    pub quasisymmetric: bool,
    /// Evaluated only for symmetric differences whose degree (the total
    /// number of elements in either product) does not exceed the number of
    /// variables.
    pub schur_positive: Option<bool>,
    pub schur: Option<BasisExpansion>,
}

impl DifferenceReport {
    /// `degree` is the homogeneous degree of the difference, which the
    /// truncated polynomial may not show when it vanishes.
    pub fn from_difference(difference: ExponentPolynomial, degree: usize) -> Result<Self> {
        let witness = difference
            .first_negative()
            .map(|(e, c)| (e.clone(), c.clone()));
        let symmetric = is_symmetric(&difference);
        let quasisymmetric = symmetric || is_quasisymmetric(&difference);
        let schur = if symmetric && degree <= difference.nvars() {
            Some(expand(&difference, Basis::Schur)?)
        } else {
            None
        };
        Ok(DifferenceReport {
            monomial_positive: witness.is_none(),
            witness,
            symmetric,
            quasisymmetric,
            schur_positive: schur.as_ref().map(BasisExpansion::is_positive),
            schur,
            difference,
        })
    }

    /// Same as [`from_difference`](Self::from_difference) without the Schur
    /// expansion.
    pub fn quick(difference: ExponentPolynomial) -> Self {
        let witness = difference
            .first_negative()
            .map(|(e, c)| (e.clone(), c.clone()));
        let symmetric = is_symmetric(&difference);
        DifferenceReport {
            monomial_positive: witness.is_none(),
            witness,
            symmetric,
            quasisymmetric: symmetric || is_quasisymmetric(&difference),
            schur_positive: None,
            schur: None,
            difference,
        }
    }
}

/// `K_{lower} K_{upper} - K_q K_r` from a plan, with each factor computed
/// by `k`.
pub fn plan_difference<F>(plan: &TransferPlan<'_>, mut k: F) -> Result<ExponentPolynomial>
where
    F: FnMut(ElemSet) -> Result<ExponentPolynomial>,
{
    let lhs = k(plan.wedge())?.mul(&k(plan.vee())?)?;
    let rhs = k(plan.q())?.mul(&k(plan.r())?)?;
    lhs.sub(&rhs)
}

/// `K_{Q∧R} K_{Q∨R} - K_Q K_R` with verdicts.
pub fn cell_transfer_difference(
    lp: &TLabelledPoset,
    q: ElemSet,
    r: ElemSet,
    ncap: u32,
) -> Result<DifferenceReport> {
    let plan = TransferPlan::with_variant(lp, q, r, Variant::Standard)?;
    let degree = q.len() + r.len();
    DifferenceReport::from_difference(plan_difference(&plan, |s| kfunc_on(lp, s, ncap))?, degree)
}

/// `K_{I∧'J} K_{I∨'J} - K_I K_J` for order ideals `I`, `J`.
pub fn ideal_difference(
    lp: &TLabelledPoset,
    i: ElemSet,
    j: ElemSet,
    ncap: u32,
) -> Result<DifferenceReport> {
    let plan = TransferPlan::with_variant(lp, i, j, Variant::Ideal)?;
    let degree = i.len() + j.len();
    DifferenceReport::from_difference(plan_difference(&plan, |s| kfunc_on(lp, s, ncap))?, degree)
}

/// Whether every label is `Weak` or `Strict`, in which case the generating
/// function is quasisymmetric.
pub fn oriented_check(lp: &TLabelledPoset) -> bool {
    lp.is_oriented()
}
