//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use celltransfer::genfunc::basis::schur_coefficients;
use celltransfer::genfunc::{expand, kfunc, lr, Basis};
use celltransfer::partition::Partition;
use celltransfer::suites::{self, find_eta_star_collision, SuiteConfig, SuiteReport};
use celltransfer::tableaux::{respects, weight, Tableau};
use celltransfer::tlabel::{young_labelling, Grid, SkewShape};
use celltransfer::transfer::{eta, eta_star, TransferContext};
use celltransfer::ElemSet;
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(rep: SuiteReport) -> Outcome {
    if rep.passed() && rep.checks > 0 {
        Ok(format!("{} instances, {} checks, {} skipped", rep.instances, rep.checks, rep.skipped))
    } else {
        Err(rep.to_string())
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
    SkewShape::from_parts(outer, inner).unwrap()
}

fn positivity() -> Outcome {
    suite(suites::transfer_positivity(&SuiteConfig::default()).map_err(|e| e.to_string())?)
}

fn injection() -> Outcome {
    suite(suites::transfer_injection(&SuiteConfig::default()).map_err(|e| e.to_string())?)
}

fn algorithm_oracle() -> Outcome {
    let cfg = SuiteConfig { oracle_limit: 12, ..Default::default() };
    suite(suites::algorithm_oracle(&cfg).map_err(|e| e.to_string())?)
}

fn schur() -> Outcome {
    // (a) generating functions of skew shapes against the determinant formula
    let mut shapes = 0;
    for size in 0..=6 {
        for lam in common::partitions(size) {
            for mu in common::subpartitions(&lam) {
                let lp = young_labelling(&skew(&lam, &mu));
                for n in 1..=5 {
                    let k = kfunc(&lp, n as u32).map_err(|e| e.to_string())?;
                    ensure(common::to_poly(&k) == common::jacobi_trudi(&lam, &mu, n), || {
                        format!("kfunc of {lam:?}/{mu:?} in {n} variables differs from the determinant")
                    })?;
                }
                shapes += 1;
            }
        }
    }
    // (b), (c) monomial and Schur positivity of straight-shape differences
    let cfg = SuiteConfig { max_size: 5, ncap: 4, ..Default::default() };
    let rep = suites::schur_suite(&cfg).map_err(|e| e.to_string())?;
    let summary = suite(rep)?;
    // Pinned: s(2,1) s(1) - s(2) s(1,1) = s(2,2), by Littlewood-Richardson
    // counting and by expanding the polynomial difference in four variables.
    let by_lr = lr::difference(
        &lr::product_expansion(&skew(&[2, 1], &[]), &skew(&[1], &[])),
        &lr::product_expansion(&skew(&[2], &[]), &skew(&[1, 1], &[])),
    );
    let s22 = Partition::new(vec![2, 2]).unwrap();
    let expected = [(s22, BigInt::from(1))].into_iter().collect();
    ensure(by_lr == expected, || format!("LR difference is {by_lr:?}"))?;
    let n = 4;
    let s = |p: &[u32]| common::from_poly(n, &common::jacobi_trudi(p, &[], n));
    let d = s(&[2, 1])
        .mul(&s(&[1]))
        .and_then(|a| a.sub(&s(&[2]).mul(&s(&[1, 1]))?))
        .map_err(|e| e.to_string())?;
    let e = expand(&d, Basis::Schur).map_err(|e| e.to_string())?;
    ensure(e.is_complete() && schur_coefficients(&e) == expected, || {
        format!("Schur expansion of the pinned difference is {:?}", e.coeffs)
    })?;
    Ok(format!("{shapes} skew shapes against the determinant; {summary}; s22 pinned"))
}

fn skew_suite() -> Outcome {
    let cfg = SuiteConfig { rows: 3, max_part: 3, ncap: 4, ..Default::default() };
    suite(suites::skew_suite(&cfg).map_err(|e| e.to_string())?)
}

fn ideals() -> Outcome {
    suite(suites::ideal_suite(&SuiteConfig::default()).map_err(|e| e.to_string())?)
}

fn oriented() -> Outcome {
    let cfg = SuiteConfig { ncap: 4, ..Default::default() };
    suite(suites::oriented_suite(&cfg).map_err(|e| e.to_string())?)
}

fn tableau(domain: &[usize], values: [u32; 4]) -> Tableau {
    Tableau::new(domain.iter().copied().collect(), values.to_vec()).unwrap()
}

fn eta_star_collision() -> Outcome {
    let c = find_eta_star_collision(4, 3)
        .map_err(|e| e.to_string())?
        .ok_or("no collision found")?;
    // On the 2x2 grid, Q = {(1,2)} and R = {(1,1),(1,2)}.
    let q: ElemSet = [1].into_iter().collect();
    let r: ElemSet = [0, 1].into_iter().collect();
    let first = (tableau(&[1], [0, 1, 0, 0]), tableau(&[0, 1], [1, 2, 0, 0]));
    let second = (tableau(&[1], [0, 2, 0, 0]), tableau(&[0, 1], [1, 1, 0, 0]));
    let output = (tableau(&[0, 1], [1, 2, 0, 0]), tableau(&[1], [0, 1, 0, 0]));
    ensure(
        (c.rows, c.cols, c.q, c.r) == (2, 2, q, r)
            && (&c.first, &c.second, &c.output) == (&first, &second, &output),
        || format!("collision moved: {c:?}"),
    )?;
    let grid = Grid::new(2, 2).unwrap();
    let lp = grid.labelled();
    let mut outputs = Vec::new();
    for (w, s) in [&first, &second] {
        ensure(respects(lp, w) && respects(lp, s), || format!("invalid input {w:?} {s:?}"))?;
        let ctx = TransferContext::new(lp, q, r, w.clone(), s.clone()).map_err(|e| e.to_string())?;
        let (a, b) = eta_star(&ctx);
        ensure(respects(lp, &a) && respects(lp, &b), || format!("output {a:?} {b:?} is not a tableau"))?;
        let before = weight(w, 3).add(&weight(s, 3));
        ensure(before == weight(&a, 3).add(&weight(&b, 3)), || "weight changed".into())?;
        ensure((a.clone(), b.clone()) == output, || format!("output {a:?} {b:?}"))?;
        let res = eta(&ctx);
        outputs.push((res.alpha, res.beta));
    }
    ensure(outputs[0] != outputs[1], || "the minimal transfer also collides".into())?;
    Ok("pinned collision on the 2x2 grid; outputs valid and weight-preserving".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("cell transfer positivity", positivity),
        ("injection and inverse", injection),
        ("algorithm matches exhaustive oracle", algorithm_oracle),
        ("Schur polynomials and straight-shape differences", schur),
        ("skew max/min positivity and transfer", skew_suite),
        ("order ideals", ideals),
        ("oriented labellings are quasisymmetric", oriented),
        ("all-of-S* transfer collision", eta_star_collision),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {}: {name} ({msg}) [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
