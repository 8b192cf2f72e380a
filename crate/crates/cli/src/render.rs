//! ASCII rendering in English notation: row 1 at the top, columns left to
//! right.

use std::collections::BTreeMap;

use celltransfer::genfunc::poly::monomial_string;
use celltransfer::genfunc::BasisExpansion;
use celltransfer::tableaux::Tableau;
use celltransfer::tlabel::{StepFunction, TLabelledPoset};
use celltransfer::ElemSet;

/// Plane coordinates `(row, col)` of each element, when the poset came from
/// a shape or a grid.
#[derive(Clone, Debug)]
pub struct Layout {
    coords: Vec<(i64, i64)>,
}

impl Layout {
    pub fn new(coords: Vec<(i64, i64)>) -> Self {
        Layout { coords }
    }

    pub fn from_cells(cells: &[(u32, u32)]) -> Self {
        Layout::new(cells.iter().map(|&(i, j)| (i as i64, j as i64)).collect())
    }

    /// Row-major ids of a `rows x cols` box.
    pub fn grid(rows: u32, cols: u32) -> Self {
        let cells: Vec<(u32, u32)> = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .collect();
        Layout::from_cells(&cells)
    }

    /// Draws one string per element; `None` leaves the cell blank inside the
    /// bounding box.
    fn draw(&self, text: &dyn Fn(usize) -> Option<String>) -> Vec<String> {
        if self.coords.is_empty() {
            return vec!["(empty)".into()];
        }
        let cells: BTreeMap<(i64, i64), String> = self
            .coords
            .iter()
            .enumerate()
            .filter_map(|(id, &c)| text(id).map(|s| (c, s)))
            .collect();
        let width = cells.values().map(|s| s.chars().count()).max().unwrap_or(1);
        let (r0, r1) = minmax(self.coords.iter().map(|c| c.0));
        let (c0, c1) = minmax(self.coords.iter().map(|c| c.1));
        (r0..=r1)
            .map(|i| {
                let row: Vec<String> = (c0..=c1)
                    .map(|j| {
                        let s = cells.get(&(i, j)).map(String::as_str).unwrap_or("");
                        format!("{s:>width$}")
                    })
                    .collect();
                row.join(" ").trim_end().to_string()
            })
            .collect()
    }
}

fn minmax<I: Iterator<Item = i64>>(it: I) -> (i64, i64) {
    it.fold((i64::MAX, i64::MIN), |(a, b), x| (a.min(x), b.max(x)))
}

/// Element ids drawn in place.
pub fn ids(layout: &Layout) -> Vec<String> {
    layout.draw(&|id| Some(id.to_string()))
}

/// A tableau with cells outside its domain shown as `.` and `marked` cells
/// followed by `*`.
pub fn tableau(layout: Option<&Layout>, t: &Tableau, marked: ElemSet) -> Vec<String> {
    let mark = |id: usize| if marked.contains(id) { "*" } else { "" };
    match layout {
        Some(l) => {
            let any_mark = !marked.is_empty();
            l.draw(&|id| {
                let v = match t.get(id) {
                    Some(v) => format!("{v}{}", mark(id)),
                    None => ".".into(),
                };
                Some(if any_mark && !marked.contains(id) { format!("{v} ") } else { v })
            })
        }
        None => {
            let parts: Vec<String> = t.entries().map(|(i, v)| format!("{i}:{v}{}", mark(i))).collect();
            vec![format!("{{{}}}", parts.join(", "))]
        }
    }
}

/// Places blocks next to each other under headings.
pub fn side_by_side(blocks: &[(&str, Vec<String>)]) -> Vec<String> {
    let widths: Vec<usize> = blocks
        .iter()
        .map(|(h, b)| b.iter().map(|l| l.chars().count()).chain([h.chars().count()]).max().unwrap_or(0))
        .collect();
    let height = blocks.iter().map(|(_, b)| b.len()).max().unwrap_or(0);
    let mut out = Vec::with_capacity(height + 1);
    let line = |cells: Vec<String>| -> String {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("   ")
            .trim_end()
            .to_string()
    };
    out.push(line(blocks.iter().map(|(h, _)| h.to_string()).collect()));
    for k in 0..height {
        out.push(line(
            blocks
                .iter()
                .map(|(_, b)| b.get(k).cloned().unwrap_or_default())
                .collect(),
        ));
    }
    out
}

pub fn label_name(f: &StepFunction) -> String {
    match f {
        StepFunction::Weak => "weak".into(),
        StepFunction::Strict => "strict".into(),
        StepFunction::Table(t) => {
            let parts: Vec<String> = t.iter().map(|e| e.to_string()).collect();
            format!("table [{}]", parts.join(", "))
        }
    }
}

pub fn covers(lp: &TLabelledPoset) -> Vec<String> {
    lp.labels()
        .map(|((a, b), f)| format!("  {a} < {b}  {}", label_name(f)))
        .collect()
}

pub fn set(s: ElemSet) -> String {
    format!("{:?}", s.to_vec())
}

/// A two-column table of coefficients and basis indices.
pub fn expansion_table(e: &BasisExpansion) -> Vec<String> {
    let rows: Vec<(String, String)> = e
        .coeffs
        .iter()
        .rev()
        .map(|(k, c)| (c.to_string(), format!("{}{}", e.basis.symbol(), index(k))))
        .collect();
    let w = rows.iter().map(|r| r.0.len()).chain(["coef".len()]).max().unwrap_or(4);
    let mut out = vec![format!("  {:>w$}  element", "coef")];
    if rows.is_empty() {
        out.push(format!("  {:>w$}  -", 0));
    }
    out.extend(rows.into_iter().map(|(c, k)| format!("  {c:>w$}  {k}")));
    if !e.residual.is_zero() {
        out.push(format!("  residual: {}", e.residual));
    }
    out
}

pub fn index(k: &[u32]) -> String {
    let parts: Vec<String> = k.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn monomial(exp: &[u32]) -> String {
    monomial_string(exp)
}
