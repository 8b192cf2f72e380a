//! `celltransfer`: build labelled posets, enumerate tableaux, run the cell
//! transfer with traces, check positivity of product differences and run
//! the exhaustive verification suites.
//!
//! Exit codes: 0 on success or a true verdict, 1 on a false verdict (a
//! witness is printed), 2 on usage or input errors.

mod render;

/// `println!` that exits quietly when stdout is closed, e.g. piped into `head`.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use celltransfer::genfunc::{self, lr, Basis, BasisExpansion, DifferenceReport, ExponentPolynomial};
use celltransfer::json::{
    parse, to_canonical_string, ExpansionJson, LabelledPosetJson, PolynomialJson, RegionJson,
    SubposetJson, TableauJson, TransferBundle, TransferOutput,
};
use celltransfer::minmax::{SkewPair, SkewSetup};
use celltransfer::partition::Partition;
use celltransfer::poset::Poset;
use celltransfer::suites::{self, SuiteConfig, SuiteReport};
use celltransfer::tableaux::{EnumBounds, Tableaux};
use celltransfer::tlabel::{
    cylindric_labelling, young_labelling, CylindricShape, Grid, SkewShape, StepFunction,
    TLabelledPoset,
};
use celltransfer::transfer::{compute_sets, run_algorithm_traced, TransferContext, TransferPlan, Variant};
use celltransfer::ElemSet;

use render::Layout;

#[derive(Parser)]
#[command(name = "celltransfer", version, about = "Exact combinatorics of T-labelled posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labelled poset and print it.
    Build(BuildArgs),
    /// List the tableaux of a labelled poset with entries at most --ncap.
    Tableaux(TableauxArgs),
    /// Run the cell transfer on a JSON bundle {poset|grid, q, r, omega, sigma}.
    Transfer(TransferArgs),
    /// Positivity report for K(Q^R) K(QvR) - K(Q) K(R).
    Diff(DiffArgs),
    /// Positivity report for s(max) s(min) - s(lam/mu) s(nu/rho).
    ///
    /// All four partitions are padded with zeros to a common length before
    /// the componentwise max and min are taken.
    Skewdiff(SkewdiffArgs),
    /// Expand a polynomial (JSON) in a basis.
    Expand(ExpandArgs),
    /// Run an exhaustive verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Label {
    Weak,
    Strict,
}

impl From<Label> for StepFunction {
    fn from(l: Label) -> Self {
        match l {
            Label::Weak => StepFunction::Weak,
            Label::Strict => StepFunction::Strict,
        }
    }
}

/// Where a labelled poset comes from. At most one source may be given.
#[derive(Args, Clone, Debug, Default)]
#[group(multiple = false)]
struct Source {
    /// Skew shape `OUTER[/INNER]`, e.g. `3,2/1`, with rows weak and columns strict.
    #[arg(long, value_parser = parse_shape)]
    shape: Option<SkewShape>,
    /// A `ROWS,COLS` box with rows weak and columns strict.
    #[arg(long, value_parser = parse_pair)]
    grid: Option<(u32, u32)>,
    /// Chain on N elements, labelled by --label.
    #[arg(long)]
    chain: Option<usize>,
    /// Antichain on N elements.
    #[arg(long)]
    antichain: Option<usize>,
    /// Boolean lattice B_K, labelled by --label.
    #[arg(long)]
    boolean: Option<usize>,
    /// Cylindric shape `K,N`; cells come from --cells.
    #[arg(long, value_parser = parse_signed_pair)]
    cylindric: Option<(i64, i64)>,
    /// Labelled poset JSON file (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Clone, Debug)]
struct SourceOptions {
    /// Label of every cover for --chain and --boolean.
    #[arg(long, value_enum, default_value_t = Label::Weak)]
    label: Label,
    /// Cells `a,b;c,d;...` of a cylindric shape.
    #[arg(long, requires = "cylindric")]
    cells: Option<String>,
    /// Swap the weak and strict labels of a cylindric shape.
    #[arg(long, requires = "cylindric")]
    transpose: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    options: SourceOptions,
    /// Emit labelled poset JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableauxArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    options: SourceOptions,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=64))]
    ncap: u32,
    /// Print the count and generating function only.
    #[arg(long)]
    count: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TransferArgs {
    /// Bundle file; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Use the order-ideal variant (outputs on Q^'R and Qv'R).
    #[arg(long)]
    ideal: bool,
    /// Draw the state of every round with its critical cells marked.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DiffArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    options: SourceOptions,
    /// Q: a skew shape placed in the smallest enclosing box, or element ids
    /// `0,1,...` when a poset source is given.
    #[arg(long)]
    q: String,
    /// R, in the same form as Q.
    #[arg(long)]
    r: String,
    /// Use the order-ideal operations.
    #[arg(long)]
    ideal: bool,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=16))]
    ncap: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SkewdiffArgs {
    #[arg(long, value_parser = parse_partition)]
    lam: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    rho: Partition,
    /// Number of variables of the truncation.
    #[arg(long, visible_alias = "ncap", default_value_t = 4,
          value_parser = clap::value_parser!(u32).range(1..=16))]
    nvars: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExpandArgs {
    /// Polynomial JSON file; stdin when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long, default_value = "schur", value_parser = parse_basis)]
    basis: Basis,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of celltransfer, ideals, schur, skewschur, oriented, algorithm-oracle.
    suite: String,
    /// Largest catalogue poset.
    #[arg(long, visible_alias = "max-cells", default_value_t = 5,
          value_parser = clap::value_parser!(u64).range(1..=8))]
    max_poset: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=8))]
    ncap: u32,
    /// Largest partition size for the straight-shape suite.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=7))]
    max_size: u32,
    /// Rows of the skew pairs.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=5))]
    rows: u64,
    /// Largest part of the skew pairs.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=5))]
    max_part: u32,
    /// Largest S* handed to the exhaustive oracle.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(0..=20))]
    oracle_limit: u64,
    /// Skip the Schur-positivity checks.
    #[arg(long)]
    no_schur: bool,
    #[arg(long)]
    json: bool,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_shape(s: &str) -> Result<SkewShape, String> {
    let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
    SkewShape::new(parse_partition(outer)?, parse_partition(inner)?).map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = parse_signed_pair(s)?;
    Ok((
        u32::try_from(a).map_err(|e| e.to_string())?,
        u32::try_from(b).map_err(|e| e.to_string())?,
    ))
}

fn parse_signed_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `A,B`, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_ids(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect()
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse::<Basis>().map_err(|e| e.to_string())
}

/// A failure reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<ExitCode, InputError>;

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, InputError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| InputError(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn print_json(v: &Value) {
    outln!("{}", to_canonical_string(v));
}

fn print_lines(lines: &[String]) {
    for l in lines {
        outln!("{l}");
    }
}

/// A labelled poset with an optional plane layout.
struct Loaded {
    lp: TLabelledPoset,
    layout: Option<Layout>,
}

impl Source {
    fn is_empty(&self) -> bool {
        self.shape.is_none()
            && self.grid.is_none()
            && self.chain.is_none()
            && self.antichain.is_none()
            && self.boolean.is_none()
            && self.cylindric.is_none()
            && self.input.is_none()
    }

    fn load(&self, opt: &SourceOptions) -> Result<Loaded, InputError> {
        let label: StepFunction = opt.label.into();
        let bare = |lp| Loaded { lp, layout: None };
        if let Some(shape) = &self.shape {
            return Ok(Loaded {
                lp: young_labelling(shape),
                layout: Some(Layout::from_cells(shape.cells())),
            });
        }
        if let Some((rows, cols)) = self.grid {
            let g = Grid::new(rows, cols)?;
            return Ok(Loaded {
                lp: g.labelled().clone(),
                layout: Some(Layout::grid(rows, cols)),
            });
        }
        if let Some(n) = self.chain {
            check_size(n)?;
            return Ok(bare(TLabelledPoset::uniform(Poset::chain(n), label)));
        }
        if let Some(n) = self.antichain {
            check_size(n)?;
            return Ok(bare(TLabelledPoset::uniform(Poset::antichain(n), label)));
        }
        if let Some(k) = self.boolean {
            if k > 6 {
                return Err(InputError(format!("boolean lattice B_{k} is too large")));
            }
            return Ok(bare(TLabelledPoset::uniform(Poset::boolean(k), label)));
        }
        if let Some((k, n)) = self.cylindric {
            let cells = opt
                .cells
                .as_deref()
                .ok_or_else(|| InputError("--cylindric needs --cells".into()))?;
            let cells = cells
                .split(';')
                .filter(|c| !c.trim().is_empty())
                .map(parse_signed_pair)
                .collect::<Result<Vec<_>, _>>()?;
            let shape = CylindricShape::new(k, n, &cells)?;
            let lp = cylindric_labelling(&shape, opt.transpose)?;
            return Ok(Loaded {
                layout: Some(Layout::new(shape.cells().to_vec())),
                lp,
            });
        }
        let text = read_input(self.input.as_ref())?;
        let j: LabelledPosetJson = parse("labelled poset", &text)?;
        Ok(bare(j.to_labelled()?))
    }
}

fn check_size(n: usize) -> Result<(), InputError> {
    if n > celltransfer::set::MAX_ELEMENTS {
        return Err(InputError(format!(
            "{n} elements exceed the limit of {}",
            celltransfer::set::MAX_ELEMENTS
        )));
    }
    Ok(())
}

fn cmd_build(a: &BuildArgs) -> Outcome {
    let l = a.source.load(&a.options)?;
    if a.json {
        print_json(&serde_json::to_value(LabelledPosetJson::from_labelled(&l.lp))?);
        return Ok(ExitCode::SUCCESS);
    }
    outln!("labelled poset on {} elements", l.lp.len());
    if let Some(layout) = &l.layout {
        outln!("ids:");
        print_lines(&indent(render::ids(layout)));
    }
    outln!("covers:");
    print_lines(&render::covers(&l.lp));
    outln!("oriented: {}", yes_no(l.lp.is_oriented()));
    Ok(ExitCode::SUCCESS)
}

fn cmd_tableaux(a: &TableauxArgs) -> Outcome {
    let l = a.source.load(&a.options)?;
    let all: Vec<_> =
        Tableaux::new(&l.lp, l.lp.poset().elements(), a.ncap, EnumBounds::default())?.collect();
    let k = genfunc::kfunc(&l.lp, a.ncap)?;
    if a.json {
        let mut v = json!({
            "ncap": a.ncap,
            "count": all.len(),
            "kfunc": PolynomialJson::from_polynomial(&k),
        });
        if !a.count {
            v["tableaux"] = serde_json::to_value(
                all.iter().map(TableauJson::from_tableau).collect::<Vec<_>>(),
            )?;
        }
        print_json(&v);
        return Ok(ExitCode::SUCCESS);
    }
    if !a.count {
        for (n, t) in all.iter().enumerate() {
            outln!("#{}", n + 1);
            print_lines(&indent(render::tableau(l.layout.as_ref(), t, ElemSet::EMPTY)));
        }
    }
    outln!("count: {}", all.len());
    outln!("generating function: {k}");
    Ok(ExitCode::SUCCESS)
}

fn region(r: &RegionJson, n: usize, grid: Option<&Grid>) -> Result<ElemSet, InputError> {
    match r {
        RegionJson::Members(m) => Ok(m.to_set(n)?),
        RegionJson::Shape(s) => {
            let g = grid.ok_or_else(|| InputError("shape regions need a grid".into()))?;
            Ok(g.set_of(&s.to_shape()?)?)
        }
    }
}

fn cmd_transfer(a: &TransferArgs) -> Outcome {
    let text = read_input(a.input.as_ref())?;
    let b: TransferBundle = parse("transfer bundle", &text)?;
    let (lp, grid, layout) = match (&b.poset, &b.grid) {
        (Some(p), None) => (p.to_labelled()?, None, None),
        (None, Some(g)) => {
            let grid = Grid::new(g.rows, g.cols)?;
            (grid.labelled().clone(), Some(grid), Some(Layout::grid(g.rows, g.cols)))
        }
        _ => return Err(InputError("give exactly one of `poset` and `grid`".into())),
    };
    let n = lp.len();
    let q = region(&b.q, n, grid.as_ref())?;
    let r = region(&b.r, n, grid.as_ref())?;
    let variant = if a.ideal { Variant::Ideal } else { Variant::Standard };
    let plan = TransferPlan::with_variant(&lp, q, r, variant)?;
    let omega = b.omega.to_tableau(n)?;
    let sigma = b.sigma.to_tableau(n)?;
    let ctx = TransferContext::from_plan(plan, omega, sigma)?;
    let res = run_algorithm_traced(&ctx);
    let sets = compute_sets(&ctx);
    if a.json {
        print_json(&serde_json::to_value(TransferOutput::new(&res, &sets))?);
        return Ok(ExitCode::SUCCESS);
    }
    let lay = layout.as_ref();
    outln!("Q = {}  R = {}", render::set(q), render::set(r));
    outln!("wedge = {}  vee = {}", render::set(plan.wedge()), render::set(plan.vee()));
    print_lines(&render::side_by_side(&[
        ("omega", render::tableau(lay, ctx.omega(), ElemSet::EMPTY)),
        ("sigma", render::tableau(lay, ctx.sigma(), ElemSet::EMPTY)),
    ]));
    outln!("S* = {}  S<> = {}", render::set(sets.s_star), render::set(sets.s_diamond));
    for (k, round) in res.trace.iter().enumerate() {
        outln!("round {}: critical {}", k + 1, render::set(round.critical));
        if a.trace {
            print_lines(&indent(render::side_by_side(&[
                ("omega-bar", render::tableau(lay, &round.omega_bar, round.critical)),
                ("sigma-bar", render::tableau(lay, &round.sigma_bar, round.critical)),
            ])));
        }
    }
    outln!("{} round(s)", res.iterations);
    print_lines(&render::side_by_side(&[
        ("alpha", render::tableau(lay, &res.alpha, ElemSet::EMPTY)),
        ("beta", render::tableau(lay, &res.beta, ElemSet::EMPTY)),
    ]));
    Ok(ExitCode::SUCCESS)
}

fn report_json(rep: &DifferenceReport) -> Result<Value, InputError> {
    Ok(json!({
        "difference": PolynomialJson::from_polynomial(&rep.difference),
        "monomial_positive": rep.monomial_positive,
        "witness": rep.witness.as_ref().map(|(e, c)| json!({"exp": e, "coef": c.to_string()})),
        "symmetric": rep.symmetric,
        "quasisymmetric": rep.quasisymmetric,
        "schur_positive": rep.schur_positive,
        "schur": rep.schur.as_ref().map(ExpansionJson::from_expansion),
    }))
}

fn report_lines(rep: &DifferenceReport) -> Vec<String> {
    let mut out = vec![format!("difference: {}", rep.difference)];
    out.push(format!("monomial-positive: {}", yes_no(rep.monomial_positive)));
    if let Some((e, c)) = &rep.witness {
        out.push(format!("witness: coefficient {c} at {}", render::monomial(e)));
    }
    out.push(format!(
        "symmetric: {}  quasisymmetric: {}",
        yes_no(rep.symmetric),
        yes_no(rep.quasisymmetric)
    ));
    match &rep.schur {
        Some(e) => {
            out.push(format!("Schur expansion (positive: {}):", yes_no(e.is_positive())));
            out.extend(render::expansion_table(e));
        }
        None if rep.symmetric => {
            out.push("Schur expansion: needs at least as many variables as the degree".into())
        }
        None => {}
    }
    out
}

fn lr_json<C: std::fmt::Display>(m: &BTreeMap<Partition, C>) -> Value {
    m.iter()
        .rev()
        .map(|(p, c)| json!({"index": p.parts(), "coef": c.to_string()}))
        .collect()
}

fn lr_lines<C: std::fmt::Display>(m: &BTreeMap<Partition, C>) -> Vec<String> {
    let rows: Vec<(String, String)> = m
        .iter()
        .rev()
        .map(|(p, c)| (c.to_string(), format!("s{}", render::index(p.parts()))))
        .collect();
    let w = rows.iter().map(|r| r.0.len()).chain([4]).max().unwrap_or(4);
    let mut out = vec![format!("  {:>w$}  element", "coef")];
    if rows.is_empty() {
        out.push(format!("  {:>w$}  -", 0));
    }
    out.extend(rows.into_iter().map(|(c, k)| format!("  {c:>w$}  {k}")));
    out
}

fn lr_positive<C: std::fmt::Display>(m: &BTreeMap<Partition, C>) -> bool {
    m.values().all(|c| !c.to_string().starts_with('-'))
}

fn cmd_diff(a: &DiffArgs) -> Outcome {
    let variant = if a.ideal { Variant::Ideal } else { Variant::Standard };
    let (lp, q, r, grid, shapes) = if a.source.is_empty() {
        let qs = parse_shape(&a.q).map_err(InputError)?;
        let rs = parse_shape(&a.r).map_err(InputError)?;
        let grid = Grid::enclosing([&qs, &rs])?;
        let (q, r) = (grid.set_of(&qs)?, grid.set_of(&rs)?);
        (grid.labelled().clone(), q, r, Some(grid), Some((qs, rs)))
    } else {
        let l = a.source.load(&a.options)?;
        let n = l.lp.len();
        let ids = |s: &str| -> Result<ElemSet, InputError> {
            Ok(SubposetJson { members: parse_ids(s).map_err(InputError)? }.to_set(n)?)
        };
        let (q, r) = (ids(&a.q)?, ids(&a.r)?);
        (l.lp, q, r, None, None)
    };
    let plan = TransferPlan::with_variant(&lp, q, r, variant)?;
    let rep = match variant {
        Variant::Standard => genfunc::cell_transfer_difference(&lp, q, r, a.ncap)?,
        Variant::Ideal => genfunc::ideal_difference(&lp, q, r, a.ncap)?,
    };
    // Schur coefficients of shape products at any degree.
    let mut lr_expansion = None;
    let mut lower_upper = None;
    if let (Some(g), Some((qs, rs))) = (&grid, &shapes) {
        if let (Some(lo), Some(hi)) = (g.shape_of(plan.wedge()), g.shape_of(plan.vee())) {
            lr_expansion = Some(lr::difference(
                &lr::product_expansion(&lo, &hi),
                &lr::product_expansion(qs, rs),
            ));
            lower_upper = Some((lo, hi));
        }
    }
    let ok = rep.monomial_positive
        && rep.schur_positive != Some(false)
        && lr_expansion.as_ref().is_none_or(lr_positive);
    if a.json {
        let mut v = report_json(&rep)?;
        v["ncap"] = json!(a.ncap);
        v["q"] = json!(q.to_vec());
        v["r"] = json!(r.to_vec());
        v["wedge"] = json!(plan.wedge().to_vec());
        v["vee"] = json!(plan.vee().to_vec());
        if let Some(m) = &lr_expansion {
            v["schur_lr"] = lr_json(m);
        }
        print_json(&v);
        return Ok(verdict(ok));
    }
    let name = |s: ElemSet| -> String {
        match grid.as_ref().and_then(|g| g.shape_of(s)) {
            Some(sh) => format!("{} {sh}", render::set(s)),
            None => render::set(s),
        }
    };
    outln!("Q = {}  R = {}", name(q), name(r));
    outln!("wedge = {}  vee = {}", name(plan.wedge()), name(plan.vee()));
    outln!("ncap: {}", a.ncap);
    print_lines(&report_lines(&rep));
    if let (Some(m), Some((lo, hi))) = (&lr_expansion, &lower_upper) {
        let (qs, rs) = shapes.as_ref().expect("shape mode");
        outln!(
            "s{lo} s{hi} - s{qs} s{rs} by Littlewood-Richardson (positive: {}):",
            yes_no(lr_positive(m))
        );
        print_lines(&lr_lines(m));
    }
    Ok(verdict(ok))
}

fn cmd_skewdiff(a: &SkewdiffArgs) -> Outcome {
    let k = [&a.lam, &a.mu, &a.nu, &a.rho].iter().map(|p| p.len()).max().unwrap_or(0);
    let sp = SkewPair::new(a.lam.parts(), a.mu.parts(), a.nu.parts(), a.rho.parts(), k)?;
    let setup = SkewSetup::new(&sp)?;
    let lp = setup.grid().labelled();
    let kf = |s: ElemSet| genfunc::kfunc_on(lp, s, a.nvars);
    let d = kf(setup.max_set())?
        .mul(&kf(setup.min_set())?)?
        .sub(&kf(setup.q())?.mul(&kf(setup.r())?)?)?;
    let degree = setup.q().len() + setup.r().len();
    let rep = DifferenceReport::from_difference(d, degree)?;
    let shapes = setup.shapes();
    let (first, second) = (sp.first(), sp.second());
    let m = lr::difference(
        &lr::product_expansion(&shapes.maxshape, &shapes.minshape),
        &lr::product_expansion(&first, &second),
    );
    let ok = rep.monomial_positive && rep.schur_positive != Some(false) && lr_positive(&m);
    let vset: Vec<[u32; 2]> = shapes.vset.iter().map(|&(i, j)| [i, j]).collect();
    if a.json {
        let mut v = report_json(&rep)?;
        v["nvars"] = json!(a.nvars);
        v["first"] = json!({"outer": sp.lam(), "inner": sp.mu()});
        v["second"] = json!({"outer": sp.nu(), "inner": sp.rho()});
        v["max"] = json!({"outer": shapes.maxshape.outer().padded(k), "inner": shapes.maxshape.inner().padded(k)});
        v["min"] = json!({"outer": shapes.minshape.outer().padded(k), "inner": shapes.minshape.inner().padded(k)});
        v["vset"] = json!(vset);
        v["schur_lr"] = lr_json(&m);
        print_json(&v);
        return Ok(verdict(ok));
    }
    outln!("lam/mu = {first}  nu/rho = {second}  (padded to {k} rows)");
    outln!("max = {}  min = {}", shapes.maxshape, shapes.minshape);
    let cells: Vec<String> = vset.iter().map(|c| format!("({},{})", c[0], c[1])).collect();
    outln!("difference set: {{{}}}", cells.join(", "));
    outln!("nvars: {}", a.nvars);
    print_lines(&report_lines(&rep));
    outln!(
        "s(max) s(min) - s(lam/mu) s(nu/rho) by Littlewood-Richardson (positive: {}):",
        yes_no(lr_positive(&m))
    );
    print_lines(&lr_lines(&m));
    Ok(verdict(ok))
}

fn cmd_expand(a: &ExpandArgs) -> Outcome {
    let text = read_input(a.input.as_ref())?;
    let mut v: Value = parse("polynomial", &text)?;
    // A `diff` or `skewdiff` report carries its polynomial under `difference`.
    if let Some(d) = v.get_mut("difference") {
        v = d.take();
    }
    let p: ExponentPolynomial = serde_json::from_value::<PolynomialJson>(v)
        .map_err(|e| InputError(format!("polynomial: {e}")))?
        .to_polynomial()?;
    let e: BasisExpansion = genfunc::expand(&p, a.basis)?;
    let ok = e.is_positive();
    if a.json {
        print_json(&serde_json::to_value(ExpansionJson::from_expansion(&e))?);
    } else {
        outln!("{p}");
        outln!("= {e}");
        print_lines(&render::expansion_table(&e));
        if let Some((k, c)) = e.first_negative() {
            outln!("witness: coefficient {c} at {}{}", e.basis.symbol(), render::index(k));
        } else if !e.is_complete() {
            outln!("witness: not in the span of the basis, residual {}", e.residual);
        }
    }
    Ok(verdict(ok))
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    if !suites::SUITES.contains(&a.suite.as_str()) {
        return Err(InputError(format!(
            "unknown suite `{}` (expected one of {})",
            a.suite,
            suites::SUITES.join(", ")
        )));
    }
    let cfg = SuiteConfig {
        max_poset: a.max_poset as usize,
        ncap: a.ncap,
        max_size: a.max_size,
        rows: a.rows as usize,
        max_part: a.max_part,
        oracle_limit: a.oracle_limit as usize,
        schur: !a.no_schur,
    };
    let rep: SuiteReport = suites::run(&a.suite, &cfg)?;
    if a.json {
        print_json(&json!({
            "suite": rep.name,
            "passed": rep.passed(),
            "instances": rep.instances,
            "checks": rep.checks,
            "skipped": rep.skipped,
            "failures": rep.failures,
            "first_failure": rep.first_failure,
            "details": rep.details,
        }));
    } else {
        outln!("{rep}");
        print_lines(&indent(rep.details.clone()));
    }
    Ok(verdict(rep.passed()))
}

fn indent(lines: Vec<String>) -> Vec<String> {
    lines.into_iter().map(|l| format!("  {l}")).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Tableaux(a) => cmd_tableaux(a),
        Command::Transfer(a) => cmd_transfer(a),
        Command::Diff(a) => cmd_diff(a),
        Command::Skewdiff(a) => cmd_skewdiff(a),
        Command::Expand(a) => cmd_expand(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match out {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
