//! A fixed catalogue of small posets and their labellings, used by the
//! verification suites.

use crate::poset::Poset;
use crate::tlabel::{Extended, StepFunction, TLabelledPoset};

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub poset: Poset,
}

fn entry(name: impl Into<String>, poset: Poset) -> Entry {
    Entry {
        name: name.into(),
        poset,
    }
}

/// Chains and antichains of every size up to `max_size`, plus the V, Λ and
/// N posets, the Boolean lattice `B_2` and the 2x2 grid, when they fit.
pub fn posets(max_size: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.push(entry(format!("chain{n}"), Poset::chain(n)));
    }
    for n in 2..=max_size {
        out.push(entry(format!("antichain{n}"), Poset::antichain(n)));
    }
    let fixed = [
        ("V", Poset::new(3, &[(0, 1), (0, 2)])),
        ("Lambda", Poset::new(3, &[(0, 2), (1, 2)])),
        ("N", Poset::new(4, &[(0, 2), (1, 2), (1, 3)])),
        ("B2", Ok(Poset::boolean(2))),
        ("grid2x2", Ok(Poset::grid(2, 2))),
        ("V+point", Poset::new(4, &[(0, 1), (0, 2)])),
        ("diamond+top", Poset::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)])),
        ("fork", Poset::new(5, &[(0, 1), (1, 2), (1, 3), (1, 4)])),
    ];
    for (name, p) in fixed {
        let p = p.expect("catalogue poset");
        if p.len() <= max_size {
            out.push(entry(name, p));
        }
    }
    out
}

/// Every labelling of `p` with `Weak` and `Strict`, ordered by the bitmask
/// of strict edges in cover order.
pub fn weak_strict_labellings(p: &Poset) -> Vec<TLabelledPoset> {
    let m = p.covers().len();
    let base = TLabelledPoset::uniform(p.clone(), StepFunction::Weak);
    (0u64..1 << m)
        .map(|mask| {
            let labels = (0..m)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        StepFunction::Strict
                    } else {
                        StepFunction::Weak
                    }
                })
                .collect();
            base.relabel(labels).expect("one label per cover")
        })
        .collect()
}

/// A few tabulated step functions of length `len`.
pub fn sample_tables(len: usize) -> Vec<StepFunction> {
    let fin = |f: &dyn Fn(i64) -> i64| {
        StepFunction::table((1..=len as i64).map(|x| Extended::Finite(f(x))).collect())
            .expect("monotone")
    };
    vec![
        fin(&|x| x + 1),
        fin(&|x| x - 2),
        fin(&|x| (x + 1) / 2),
        StepFunction::table(
            (1..=len as i64)
                .map(|x| if x == len as i64 { Extended::Infinity } else { Extended::Finite(x) })
                .collect(),
        )
        .expect("monotone"),
    ]
}

/// Labellings of `p` drawing every edge from `Weak`, `Strict` and
/// [`sample_tables`]; capped at `limit` labellings.
pub fn mixed_labellings(p: &Poset, table_len: usize, limit: usize) -> Vec<TLabelledPoset> {
    let mut choices = vec![StepFunction::Weak, StepFunction::Strict];
    choices.extend(sample_tables(table_len));
    let m = p.covers().len();
    let base = TLabelledPoset::uniform(p.clone(), StepFunction::Weak);
    let total = (choices.len() as u64).saturating_pow(m as u32);
    let mut out = Vec::new();
    for code in 0..total.min(limit as u64) {
        let mut c = code;
        let labels = (0..m)
            .map(|_| {
                let f = choices[(c % choices.len() as u64) as usize].clone();
                c /= choices.len() as u64;
                f
            })
            .collect();
        out.push(base.relabel(labels).expect("one label per cover"));
    }
    out
}
