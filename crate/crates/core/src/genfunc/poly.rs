use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `x_1..x_nvars` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl ExponentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        ExponentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Vec<u32>, coef: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coef);
        p
    }

    /// The variable `x_{i+1}`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(exp, BigInt::one())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::VarMismatch(nvars, exp.len()));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coef(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub(crate) fn coef_ref(&self, exp: &[u32]) -> Option<&BigInt> {
        self.terms.get(exp)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coef: BigInt) {
        debug_assert_eq!(exp.len(), self.nvars);
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest total degree of a term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// The term that is largest in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| {
                let da: u32 = a.0.iter().sum();
                let db: u32 = b.0.iter().sum();
                da.cmp(&db).then_with(|| a.0.cmp(b.0))
            })
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.nvars, other.nvars))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// A term with negative coefficient, if any: the one with the
    /// lexicographically smallest exponent.
    pub fn first_negative(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    pub fn is_monomial_positive(&self) -> bool {
        self.first_negative().is_none()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exp: &[u32]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Terms in decreasing graded lexicographic order, e.g. `x1^2 + 2*x1*x2`.
impl fmt::Display for ExponentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let constant = e.iter().all(|&x| x == 0);
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentPolynomial[{}]({self})", self.nvars)
    }
}

/// Renders an exponent vector as a monomial, e.g. `x1^2*x3`.
pub fn monomial_string(exp: &[u32]) -> String {
    struct M<'a>(&'a [u32]);
    impl fmt::Display for M<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_monomial(f, self.0)
        }
    }
    M(exp).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> ExponentPolynomial {
        ExponentPolynomial::variable(n, i)
    }

    #[test]
    fn arithmetic() {
        let p = x(2, 0).add(&x(2, 1)).unwrap();
        assert_eq!(p.mul(&ExponentPolynomial::one(2)).unwrap(), p);
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!(p.sub(&p).unwrap().is_zero());
        assert!(matches!(p.mul(&x(3, 0)), Err(Error::VarMismatch(2, 3))));
    }

    #[test]
    fn positivity_witness() {
        assert!(ExponentPolynomial::zero(2).is_monomial_positive());
        let d = x(2, 0).sub(&x(2, 1)).unwrap();
        let (e, c) = d.first_negative().unwrap();
        assert_eq!(e, &vec![0, 1]);
        assert_eq!(c, &BigInt::from(-1));
        assert_eq!(d.to_string(), "x1 - x2");
    }

    #[test]
    fn degree_and_leading_term() {
        let p = x(2, 1)
            .mul(&x(2, 1))
            .unwrap()
            .add(&x(2, 0))
            .unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.leading_term().unwrap().0, &vec![0, 2]);
    }
}
