//! Schur expansions of skew Schur functions and their products by counting
//! Littlewood–Richardson fillings.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::partition::Partition;
use crate::tlabel::SkewShape;

/// Coefficients of `s_{λ/μ}` in the Schur basis.
///
/// The coefficient of `s_ν` is the number of semistandard fillings of the
/// shape with content `ν` whose reverse row reading word is a lattice word.
pub fn skew_schur_expansion(shape: &SkewShape) -> BTreeMap<Partition, BigInt> {
    let rows = shape.outer().len();
    // Cells in reading order: rows top to bottom, each right to left.
    let mut order = Vec::with_capacity(shape.len());
    for i in 0..rows {
        let lo = shape.inner().part(i);
        let hi = shape.outer().part(i);
        for j in (lo..hi).rev() {
            order.push((i, j));
        }
    }
    let width = shape.outer().part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut content = vec![0u32; rows + 1];
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    fill(shape, &order, 0, &mut grid, &mut content, &mut out);
    out.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect()
}

fn fill(
    shape: &SkewShape,
    order: &[(usize, u32)],
    k: usize,
    grid: &mut [Vec<u32>],
    content: &mut [u32],
    out: &mut BTreeMap<Partition, u64>,
) {
    if k == order.len() {
        *out.entry(Partition::from_unsorted(content)).or_default() += 1;
        return;
    }
    let (i, j) = order[k];
    let ju = j as usize;
    let mut max = content.len() as u32;
    if j + 1 < shape.outer().part(i) {
        max = max.min(grid[i][ju + 1]);
    }
    let mut min = 1;
    if i > 0 && j >= shape.inner().part(i - 1) && j < shape.outer().part(i - 1) {
        min = grid[i - 1][ju] + 1;
    }
    for v in min..=max {
        let vi = v as usize - 1;
        if vi > 0 && content[vi] + 1 > content[vi - 1] {
            continue;
        }
        content[vi] += 1;
        grid[i][ju] = v;
        fill(shape, order, k + 1, grid, content, out);
        content[vi] -= 1;
    }
    grid[i][ju] = 0;
}

/// A skew shape whose Schur function is `s_a · s_b`: `b` shifted to the
/// upper right of `a` so that no cell of one is comparable to a cell of
/// the other.
pub fn juxtapose(a: &SkewShape, b: &SkewShape) -> SkewShape {
    let shift = a.outer().part(0);
    let rb = b.outer().len();
    let ra = a.outer().len();
    let mut outer = Vec::with_capacity(ra + rb);
    let mut inner = Vec::with_capacity(ra + rb);
    for i in 0..rb {
        outer.push(b.outer().part(i) + shift);
        inner.push(b.inner().part(i) + shift);
    }
    for i in 0..ra {
        outer.push(a.outer().part(i));
        inner.push(a.inner().part(i));
    }
    SkewShape::from_parts(&outer, &inner).expect("juxtaposition of valid shapes")
}

/// Schur coefficients of `s_a · s_b`.
pub fn product_expansion(a: &SkewShape, b: &SkewShape) -> BTreeMap<Partition, BigInt> {
    skew_schur_expansion(&juxtapose(a, b))
}

/// `lhs - rhs` on coefficient maps, dropping zeros.
pub fn difference(
    lhs: &BTreeMap<Partition, BigInt>,
    rhs: &BTreeMap<Partition, BigInt>,
) -> BTreeMap<Partition, BigInt> {
    let mut out = lhs.clone();
    for (k, v) in rhs {
        *out.entry(k.clone()).or_default() -= v;
    }
    out.retain(|_, v| *v != BigInt::from(0));
    out
}
