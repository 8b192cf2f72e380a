//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's polynomial arithmetic or tableau checks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use celltransfer::genfunc::ExponentPolynomial;
use celltransfer::poset::Poset;
use celltransfer::tlabel::{Extended, StepFunction, TLabelledPoset};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Sparse integer polynomial keyed by dense exponent vectors.
pub type Poly = BTreeMap<Vec<u32>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add_scaled(acc: &mut Poly, p: &Poly, k: i64) {
    for (e, c) in p {
        *acc.entry(e.clone()).or_default() += k * c;
    }
    acc.retain(|_, c| *c != 0);
}

/// Complete homogeneous symmetric polynomial `h_k(x_1..x_n)`.
pub fn h(k: i64, n: usize) -> Poly {
    let mut out = Poly::new();
    if k < 0 {
        return out;
    }
    fn rec(rest: u32, i: usize, cur: &mut Vec<u32>, out: &mut Poly) {
        if i + 1 == cur.len() {
            cur[i] = rest;
            out.insert(cur.clone(), 1);
            return;
        }
        for v in 0..=rest {
            cur[i] = v;
            rec(rest - v, i + 1, cur, out);
        }
    }
    if n == 0 {
        if k == 0 {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    rec(k as u32, 0, &mut vec![0; n], &mut out);
    out
}

/// `s_{λ/μ}(x_1..x_n) = det[h_{λ_i - μ_j - i + j}]`.
pub fn jacobi_trudi(lam: &[u32], mu: &[u32], n: usize) -> Poly {
    let l = lam.len();
    let mut one = Poly::new();
    one.insert(vec![0; n], 1);
    if l == 0 {
        return one;
    }
    let part = |p: &[u32], i: usize| p.get(i).copied().unwrap_or(0) as i64;
    let m: Vec<Vec<Poly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| h(part(lam, i) - part(mu, j) - i as i64 + j as i64, n))
                .collect()
        })
        .collect();
    // Expansion over permutations, skipping zero entries.
    let mut det = Poly::new();
    let mut used = vec![false; l];
    fn go(
        m: &[Vec<Poly>],
        row: usize,
        used: &mut [bool],
        sign: i64,
        acc: Poly,
        det: &mut Poly,
    ) {
        let l = m.len();
        if row == l {
            poly_add_scaled(det, &acc, sign);
            return;
        }
        for j in 0..l {
            if used[j] || m[row][j].is_empty() {
                continue;
            }
            // Sign of the permutation via the number of used columns to the right.
            let inversions = used[j + 1..].iter().filter(|&&u| u).count() as i64;
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[j] = true;
            go(m, row + 1, used, s, poly_mul(&acc, &m[row][j]), det);
            used[j] = false;
        }
    }
    go(&m, 0, &mut used, 1, one, &mut det);
    det
}

pub fn to_poly(p: &ExponentPolynomial) -> Poly {
    p.terms()
        .map(|(e, c)| (e.clone(), i64::try_from(c.clone()).expect("small coefficient")))
        .collect()
}

pub fn from_poly(n: usize, p: &Poly) -> ExponentPolynomial {
    ExponentPolynomial::from_terms(n, p.iter().map(|(e, &c)| (e.clone(), BigInt::from(c))))
        .expect("well-formed")
}

/// The cover inequality evaluated from the definition of each label kind.
pub fn allowed(f: &StepFunction, lower: u32, upper: u32) -> bool {
    match f {
        StepFunction::Weak => lower <= upper,
        StepFunction::Strict => lower < upper,
        StepFunction::Table(t) => match t.get(upper as usize - 1) {
            None => false,
            Some(Extended::Infinity) => true,
            Some(Extended::Finite(v)) => (lower as i64) <= *v,
        },
    }
}

/// Whether a full assignment (indexed by element) satisfies every cover.
pub fn brute_respects(lp: &TLabelledPoset, values: &[u32]) -> bool {
    lp.labels()
        .all(|((lo, hi), f)| allowed(f, values[lo], values[hi]))
}

/// All vectors in `1..=ncap` of length `n`.
pub fn assignments(n: usize, ncap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=ncap).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// A poset from a strictly upper triangular relation: the transitive
/// closure of the chosen pairs, reduced to covers.
pub fn poset_from_bits(n: usize, bits: &[bool]) -> Poset {
    let mut lt = vec![vec![false; n]; n];
    let mut bits = bits.iter().copied();
    for (i, row) in lt.iter_mut().enumerate() {
        for x in &mut row[i + 1..] {
            *x = bits.next().unwrap_or(false);
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][m] && lt[m][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|m| lt[i][m] && lt[m][j]) {
                covers.push((i, j));
            }
        }
    }
    Poset::new(n, &covers).expect("reduced relation is a Hasse diagram")
}

/// Random posets on `1..=max_n` elements.
pub fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| poset_from_bits(n, &bits))
    })
}

/// A random Weak/Strict labelling of a random poset.
pub fn arb_labelled(max_n: usize) -> impl Strategy<Value = TLabelledPoset> {
    arb_poset(max_n).prop_flat_map(|p| {
        let m = p.covers().len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |strict| {
            let labels = strict
                .iter()
                .map(|&s| if s { StepFunction::Strict } else { StepFunction::Weak })
                .collect();
            TLabelledPoset::uniform(p.clone(), StepFunction::Weak)
                .relabel(labels)
                .expect("one label per cover")
        })
    })
}

/// Number of linear extensions, by dynamic programming over down-sets.
pub fn linear_extensions(p: &Poset) -> u64 {
    let n = p.len();
    let below: Vec<u64> = (0..n)
        .map(|x| (0..n).filter(|&y| p.lt(y, x)).fold(0u64, |m, y| m | 1 << y))
        .collect();
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for mask in 0..(1usize << n) {
        if ways[mask] == 0 {
            continue;
        }
        for x in 0..n {
            if mask >> x & 1 == 0 && below[x] & !(mask as u64) == 0 {
                ways[mask | 1 << x] += ways[mask];
            }
        }
    }
    ways[(1 << n) - 1]
}

/// `n! / prod(hooks)`.
pub fn hook_length(lam: &[u32]) -> u64 {
    let n: u32 = lam.iter().sum();
    let conj: Vec<u32> = (1..=lam.first().copied().unwrap_or(0))
        .map(|j| lam.iter().filter(|&&r| r >= j).count() as u32)
        .collect();
    let mut prod = 1u64;
    for (i, &r) in lam.iter().enumerate() {
        for j in 0..r {
            prod *= (r - j + conj[j as usize] - i as u32 - 1) as u64;
        }
    }
    (1..=n as u64).product::<u64>() / prod
}

/// All partitions of `n`, largest parts first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions contained in `lam` (including the empty one).
pub fn subpartitions(lam: &[u32]) -> Vec<Vec<u32>> {
    fn rec(lam: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if i == lam.len() {
            return;
        }
        for x in 1..=cap.min(lam[i]) {
            cur.push(x);
            rec(lam, i + 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}
