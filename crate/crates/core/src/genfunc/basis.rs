use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::ExponentPolynomial;
use crate::error::{Error, Result};
use crate::partition::{compositions_of, refines, Partition};
use crate::tableaux::{EnumBounds, Tableaux};
use crate::tlabel::{young_labelling, SkewShape};

/// Bases in which a polynomial can be expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Monomial symmetric functions `m_λ`.
    Monomial,
    /// Monomial quasisymmetric functions `M_α`.
    #[serde(rename = "mqsym")]
    MonomialQSym,
    /// Fundamental quasisymmetric functions `L_α`.
    #[serde(rename = "fqsym")]
    FundamentalQSym,
    /// Schur functions `s_λ`.
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::MonomialQSym => "mqsym",
            Basis::FundamentalQSym => "fqsym",
            Basis::Schur => "schur",
        }
    }

    /// Symbol used when printing an element, e.g. `s` in `s(2,1)`.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::MonomialQSym => "M",
            Basis::FundamentalQSym => "L",
            Basis::Schur => "s",
        }
    }

    fn symmetric(self) -> bool {
        matches!(self, Basis::Monomial | Basis::Schur)
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" | "m" => Ok(Basis::Monomial),
            "mqsym" | "M" => Ok(Basis::MonomialQSym),
            "fqsym" | "L" => Ok(Basis::FundamentalQSym),
            "schur" | "s" => Ok(Basis::Schur),
            other => Err(Error::InvalidInput(format!("unknown basis {other:?}"))),
        }
    }
}

/// Result of expanding a polynomial in a basis.
///
/// `Σ coeffs[key] · element(key) + residual` reconstructs the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub nvars: usize,
    /// Keyed by partition (symmetric bases) or composition.
    pub coeffs: BTreeMap<Vec<u32>, BigInt>,
    pub residual: ExponentPolynomial,
}

impl BasisExpansion {
    /// Whether the input lies in the span of the basis.
    pub fn is_complete(&self) -> bool {
        self.residual.is_zero()
    }

    /// Complete and with no negative coefficient.
    pub fn is_positive(&self) -> bool {
        self.is_complete() && self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn first_negative(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.coeffs.iter().find(|(_, c)| c.is_negative())
    }

    pub fn reconstruct(&self) -> Result<ExponentPolynomial> {
        let mut out = self.residual.clone();
        for (key, c) in &self.coeffs {
            out = out.add(&basis_element(self.basis, key, self.nvars)?.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            f.write_str("0")?;
        }
        // Largest index first.
        for (k, (key, c)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            if !c.abs().is_one() {
                write!(f, "{}*", c.abs())?;
            }
            let parts: Vec<String> = key.iter().map(u32::to_string).collect();
            write!(f, "{}({})", self.basis.symbol(), parts.join(","))?;
        }
        if !self.residual.is_zero() {
            write!(f, " + residual[{}]", self.residual)?;
        }
        Ok(())
    }
}

/// Invariant under every adjacent transposition of variables.
pub fn is_symmetric(p: &ExponentPolynomial) -> bool {
    p.terms().all(|(e, c)| {
        (0..e.len().saturating_sub(1)).all(|i| {
            let mut s = e.clone();
            s.swap(i, i + 1);
            p.coef_ref(&s) == Some(c)
        })
    })
}

/// Coefficients agree across all order-preserving placements of each
/// exponent composition.
pub fn is_quasisymmetric(p: &ExponentPolynomial) -> bool {
    let n = p.nvars();
    let mut seen: HashMap<Vec<u32>, (&BigInt, u64)> = HashMap::new();
    for (e, c) in p.terms() {
        let alpha: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
        let entry = seen.entry(alpha).or_insert((c, 0));
        if entry.0 != c {
            return false;
        }
        entry.1 += 1;
    }
    seen.iter()
        .all(|(alpha, &(_, count))| count == binomial(n as u64, alpha.len() as u64))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing index sequences of length `k` in `0..n`.
fn placements(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `M_α = Σ_{i_1<…<i_k} x_{i_1}^{α_1} ⋯ x_{i_k}^{α_k}`.
pub fn monomial_qsym(alpha: &[u32], nvars: usize) -> ExponentPolynomial {
    let mut p = ExponentPolynomial::zero(nvars);
    for idx in placements(nvars, alpha.len()) {
        let mut e = vec![0; nvars];
        for (&i, &a) in idx.iter().zip(alpha) {
            e[i] = a;
        }
        p.add_term(e, BigInt::one());
    }
    p
}

/// `L_α = Σ M_β` over compositions `β` refining `α`.
pub fn fundamental_qsym(alpha: &[u32], nvars: usize) -> ExponentPolynomial {
    let n: u32 = alpha.iter().sum();
    let mut p = ExponentPolynomial::zero(nvars);
    for beta in compositions_of(n) {
        if refines(&beta, alpha) && beta.len() <= nvars {
            p = p.add(&monomial_qsym(&beta, nvars)).expect("same nvars");
        }
    }
    p
}

/// `m_λ`: the sum of all distinct rearrangements of `λ` padded to `nvars`.
pub fn monomial_sym(lambda: &Partition, nvars: usize) -> ExponentPolynomial {
    let mut p = ExponentPolynomial::zero(nvars);
    if lambda.len() > nvars {
        return p;
    }
    let mut e = lambda.padded(nvars);
    e.sort_unstable();
    loop {
        p.add_term(e.clone(), BigInt::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    p
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The (skew) Schur polynomial in `nvars` variables, by enumerating
/// semistandard tableaux.
pub fn schur_poly(shape: &SkewShape, nvars: usize) -> Result<ExponentPolynomial> {
    let lp = young_labelling(shape);
    let bounds = EnumBounds {
        max_elements: 64,
        max_ncap: u32::MAX,
    };
    let it = Tableaux::new(&lp, lp.poset().elements(), nvars as u32, bounds)?;
    Ok(super::weight_polynomial(it, nvars))
}

/// The basis element indexed by `key`.
pub fn basis_element(basis: Basis, key: &[u32], nvars: usize) -> Result<ExponentPolynomial> {
    match basis {
        Basis::MonomialQSym => Ok(monomial_qsym(key, nvars)),
        Basis::FundamentalQSym => Ok(fundamental_qsym(key, nvars)),
        Basis::Monomial => Ok(monomial_sym(&Partition::new(key.to_vec())?, nvars)),
        Basis::Schur => schur_poly(&SkewShape::straight(Partition::new(key.to_vec())?), nvars),
    }
}

/// Expands `p` by greedy triangular elimination.
///
/// The largest remaining term in graded lexicographic order must be the
/// leading term of some basis element; if it is, that element times the
/// coefficient is subtracted. Otherwise the remainder is returned as the
/// residual.
pub fn expand(p: &ExponentPolynomial, basis: Basis) -> Result<BasisExpansion> {
    let nvars = p.nvars();
    let degree = p.degree();
    if basis.symmetric() && (nvars as u32) < degree {
        return Err(Error::TruncationTooSmall { nvars, degree: degree as usize });
    }
    let mut rem = p.clone();
    let mut coeffs = BTreeMap::new();
    while let Some((e, c)) = rem.leading_term() {
        let leads = if basis.symmetric() {
            e.windows(2).all(|w| w[0] >= w[1])
        } else {
            let used = e.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
            e[..used].iter().all(|&x| x > 0)
        };
        if !leads {
            break;
        }
        let key: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
        let c = c.clone();
        let element = basis_element(basis, &key, nvars)?;
        rem = rem.sub(&element.scale(&c))?;
        coeffs.insert(key, c);
    }
    Ok(BasisExpansion {
        basis,
        nvars,
        coeffs,
        residual: rem,
    })
}

/// Expansion in the Schur basis, as a map from partitions.
pub fn schur_coefficients(e: &BasisExpansion) -> BTreeMap<Partition, BigInt> {
    debug_assert_eq!(e.basis, Basis::Schur);
    e.coeffs
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (Partition::new(k.clone()).expect("leading exponent"), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(outer: &[u32], n: usize) -> ExponentPolynomial {
        schur_poly(&SkewShape::from_parts(outer, &[]).unwrap(), n).unwrap()
    }

    #[test]
    fn symmetry_checks() {
        let m12 = monomial_qsym(&[1, 2], 3);
        assert!(is_quasisymmetric(&m12));
        assert!(!is_symmetric(&m12));
        assert_eq!(m12.coef(&[1, 2, 0]), BigInt::one());
        assert_eq!(m12.coef(&[2, 1, 0]), BigInt::zero());
        assert!(is_symmetric(&s(&[2, 1], 3)));
        let x1 = ExponentPolynomial::variable(2, 0);
        assert!(!is_quasisymmetric(&x1));
    }

    #[test]
    fn schur_examples() {
        let p = s(&[2, 1], 3);
        assert_eq!(p.len(), 7);
        assert_eq!(p.coef(&[1, 1, 1]), BigInt::from(2));
        let s1 = s(&[1], 2);
        let e = expand(&s1.mul(&s1).unwrap(), Basis::Schur).unwrap();
        assert_eq!(
            e.coeffs,
            BTreeMap::from([(vec![2], BigInt::one()), (vec![1, 1], BigInt::one())])
        );
    }

    #[test]
    fn pinned_difference() {
        let n = 4;
        let d = s(&[2, 1], n)
            .mul(&s(&[1], n))
            .unwrap()
            .sub(&s(&[2], n).mul(&s(&[1, 1], n)).unwrap())
            .unwrap();
        let e = expand(&d, Basis::Schur).unwrap();
        assert!(e.is_positive());
        assert_eq!(e.coeffs, BTreeMap::from([(vec![2, 2], BigInt::one())]));
        let d3 = s(&[2, 1], 3)
            .mul(&s(&[1], 3))
            .unwrap()
            .sub(&s(&[2], 3).mul(&s(&[1, 1], 3)).unwrap())
            .unwrap();
        assert!(matches!(
            expand(&d3, Basis::Schur),
            Err(Error::TruncationTooSmall { nvars: 3, degree: 4 })
        ));
    }

    #[test]
    fn fundamental_example() {
        let e = expand(&fundamental_qsym(&[2], 2), Basis::MonomialQSym).unwrap();
        assert_eq!(
            e.coeffs,
            BTreeMap::from([(vec![2], BigInt::one()), (vec![1, 1], BigInt::one())])
        );
        let back = expand(&fundamental_qsym(&[1, 2], 3), Basis::FundamentalQSym).unwrap();
        assert_eq!(back.coeffs, BTreeMap::from([(vec![1, 2], BigInt::one())]));
    }

    #[test]
    fn residual_when_outside_span() {
        let x2 = ExponentPolynomial::variable(2, 1);
        let e = expand(&x2, Basis::MonomialQSym).unwrap();
        assert!(!e.is_complete());
        assert_eq!(e.reconstruct().unwrap(), x2);
        assert_eq!(monomial_sym(&Partition::new(vec![2, 1]).unwrap(), 3).len(), 6);
    }
}
