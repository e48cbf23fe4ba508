//! Worked examples with known answers, checked against the library.
//!
//! Each [`Entry`] pairs a count matrix with [`Claim`]s about it. [`run`]
//! evaluates every claim and yields one [`Row`] per claim.

use crate::category::{duplicate_object, is_category_matrix, CountMatrix, Verdict, DEFAULT_BUDGET};
use crate::euler::{build_report, is_weighting, EulerReport, Side, DEFAULT_SERIES_TERMS};
use crate::poly::{Poly, Var};
use crate::ratfunc::RatFunc;
use crate::rational::{frac, int, render_opt, render_vec, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Chi(Option<Rational>),
    MobiusChi(Option<Rational>),
    /// Via `e_l / d_l`.
    ChiSigma(Option<Rational>),
    /// Via evaluating `g` at 0.
    GAtZero(Option<Rational>),
    F(RatFunc),
    G(RatFunc),
    HasWeighting(bool),
    HasCoweighting(bool),
    /// The given vector satisfies the equation for this side.
    Solves(Side, Vec<Rational>),
    Diagonalizable(bool),
    /// The matrix equals `base` with object `index` duplicated.
    DuplicateOf { base: CountMatrix, index: usize },
    IsCategoryMatrix(bool),
    /// All internal cross-checks of the report pass.
    ChecksPass,
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub group: &'static str,
    pub matrix: CountMatrix,
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub entry: &'static str,
    pub quantity: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn pu(c: &[i64]) -> Poly {
    Poly::from_ints(c, Var::U)
}

fn pt(c: &[i64]) -> Poly {
    Poly::from_ints(c, Var::T)
}

fn g(num: &[i64], den: &[i64]) -> Claim {
    Claim::G(RatFunc::new(pu(num), pu(den)).expect("nonzero denominator"))
}

pub fn monoid(order: u64) -> Entry {
    let o = order as i64;
    let name: &'static str = Box::leak(format!("monoid-{order}").into_boxed_str());
    Entry {
        name,
        group: "monoids",
        matrix: CountMatrix::from_rows(&[&[order]]),
        claims: vec![
            Claim::F(RatFunc::new(pt(&[1]), pt(&[1, 1 - o])).unwrap()),
            Claim::ChiSigma(Some(frac(1, o))),
            Claim::Chi(Some(frac(1, o))),
            Claim::MobiusChi(Some(frac(1, o))),
            Claim::ChecksPass,
        ],
    }
}

/// The built-in catalogue: the monoids of order 1, 2, 3, 6 and every worked
/// example matrix.
pub fn entries() -> Vec<Entry> {
    let za = CountMatrix::from_rows(&[&[3, 3], &[2, 2]]);
    let mut out: Vec<Entry> = [1, 2, 3, 6].into_iter().map(monoid).collect();
    out.extend([
        Entry {
            name: "four-object",
            group: "four-object",
            matrix: CountMatrix::from_rows(&[&[2, 2, 1, 1], &[2, 2, 1, 2], &[1, 1, 1, 1], &[0, 0, 0, 1]]),
            claims: vec![
                Claim::HasCoweighting(true),
                Claim::HasWeighting(false),
                Claim::Chi(None),
                Claim::Diagonalizable(true),
                Claim::ChiSigma(Some(int(1))),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "new-not-old",
            group: "new-not-old",
            matrix: CountMatrix::from_rows(&[&[6, 6, 15, 9], &[6, 6, 6, 6], &[6, 6, 9, 7], &[6, 30, 9, 15]]),
            claims: vec![
                // 4(1 + u) / (u (36 - u))
                g(&[4, 4], &[0, 36, -1]),
                Claim::Solves(Side::Weighting, vec![frac(1, 6), int(0), int(0), int(0)]),
                Claim::Solves(Side::Coweighting, vec![int(0), frac(1, 6), int(0), int(0)]),
                Claim::Chi(Some(frac(1, 6))),
                Claim::ChiSigma(None),
                Claim::GAtZero(None),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "union-not-everything",
            group: "union",
            matrix: CountMatrix::from_rows(&[&[2, 4], &[1, 2]]),
            claims: vec![
                g(&[1, 2], &[0, 4, -1]),
                Claim::HasWeighting(false),
                Claim::HasCoweighting(false),
                Claim::Chi(None),
                Claim::ChiSigma(None),
                Claim::Diagonalizable(true),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "disagreement",
            group: "disagreement",
            matrix: CountMatrix::from_rows(&[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]]),
            claims: vec![
                Claim::Solves(Side::Weighting, vec![frac(1, 2), int(0), int(0)]),
                Claim::Solves(Side::Coweighting, vec![frac(1, 2), int(0), int(0)]),
                Claim::Chi(Some(frac(1, 2))),
                Claim::ChiSigma(Some(frac(1, 3))),
                g(&[3], &[9, -1]),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "not-invariant-A",
            group: "not-invariant",
            matrix: za.clone(),
            claims: vec![g(&[2], &[5, -1]), Claim::ChiSigma(Some(frac(2, 5))), Claim::ChecksPass],
        },
        Entry {
            name: "not-invariant-B",
            group: "not-invariant",
            matrix: CountMatrix::from_rows(&[&[3, 3, 3], &[2, 2, 2], &[2, 2, 2]]),
            claims: vec![
                Claim::DuplicateOf { base: za, index: 1 },
                g(&[3], &[7, -1]),
                Claim::ChiSigma(Some(frac(3, 7))),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "sharp-diagonalizable",
            group: "sharpness",
            matrix: CountMatrix::from_rows(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]),
            claims: vec![
                Claim::HasWeighting(true),
                Claim::Diagonalizable(false),
                g(&[2, 3], &[0, 8, -1]),
                Claim::ChiSigma(None),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "sharp-total-weight",
            group: "sharpness",
            matrix: CountMatrix::from_rows(&[&[2, 3], &[2, 3]]),
            claims: vec![
                Claim::Diagonalizable(true),
                g(&[2], &[5, -1]),
                Claim::ChiSigma(Some(frac(2, 5))),
                Claim::Solves(Side::Weighting, vec![frac(1, 2), int(0)]),
                // (1/3, 0) does not solve 2a + 3b = 1; (0, 1/3) does
                Claim::Solves(Side::Weighting, vec![int(0), frac(1, 3)]),
                Claim::ChecksPass,
            ],
        },
        Entry {
            name: "non-category",
            group: "non-category",
            matrix: CountMatrix::from_rows(&[&[1, 2], &[1, 2]]),
            claims: vec![Claim::IsCategoryMatrix(false)],
        },
    ]);
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn evaluate(claim: &Claim, z: &CountMatrix, report: &EulerReport) -> (String, String, String) {
    let opt = |v: &Option<Rational>| render_opt(v.as_ref());
    match claim {
        Claim::Chi(e) => ("chi".into(), opt(e), opt(&report.chi)),
        Claim::MobiusChi(e) => ("mobius chi".into(), opt(e), opt(&report.mobius_chi)),
        Claim::ChiSigma(e) => ("chi_sigma (e_l/d_l)".into(), opt(e), opt(&report.chi_sigma)),
        Claim::GAtZero(e) => (
            "chi_sigma (g(0))".into(),
            opt(e),
            opt(&report.g.eval(&Rational::from_integer(0.into())).into_value()),
        ),
        Claim::F(e) => ("f(t)".into(), e.to_string(), report.f.to_string()),
        Claim::G(e) => ("g(u)".into(), e.to_string(), report.g.to_string()),
        Claim::HasWeighting(e) => ("has weighting".into(), yes_no(*e), yes_no(report.weighting.is_some())),
        Claim::HasCoweighting(e) => ("has coweighting".into(), yes_no(*e), yes_no(report.coweighting.is_some())),
        Claim::Solves(side, v) => {
            let label = match side {
                Side::Weighting => "weighting",
                Side::Coweighting => "coweighting",
            };
            (format!("{label} {}", render_vec(v)), "yes".into(), yes_no(is_weighting(z, v, *side)))
        }
        Claim::Diagonalizable(e) => ("diagonalizable".into(), yes_no(*e), yes_no(report.diagonalizable)),
        Claim::DuplicateOf { base, index } => {
            let actual = duplicate_object(base, *index).map_or_else(|e| e.to_string(), |d| flat(&d));
            (format!("duplicate object {} of {}", index + 1, flat(base)), flat(z), actual)
        }
        Claim::IsCategoryMatrix(e) => {
            let actual = match is_category_matrix(z, DEFAULT_BUDGET) {
                Verdict::Yes(_) => "yes",
                Verdict::No(_) => "no",
                Verdict::Inconclusive => "inconclusive",
            };
            ("category matrix".into(), yes_no(*e), actual.into())
        }
        Claim::ChecksPass => {
            let failed: Vec<&str> = report.checks.iter().filter(|c| c.failed()).map(|c| c.name).collect();
            let actual = if failed.is_empty() { "pass".to_string() } else { format!("fail: {}", failed.join(", ")) };
            ("cross-checks".into(), "pass".into(), actual)
        }
    }
}

fn flat(z: &CountMatrix) -> String {
    let rows: Vec<String> = z
        .rows()
        .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Evaluates every claim of the entries whose name or group contains
/// `filter` (all entries when `filter` is `None`).
pub fn run(entries: &[Entry], filter: Option<&str>) -> Vec<Row> {
    let mut rows = Vec::new();
    for entry in entries {
        if let Some(f) = filter {
            if !entry.name.contains(f) && !entry.group.contains(f) {
                continue;
            }
        }
        // the search claim ignores the report, so a short one suffices there
        let only_search = entry.claims.iter().all(|c| matches!(c, Claim::IsCategoryMatrix(_)));
        let terms = if only_search { 1 } else { DEFAULT_SERIES_TERMS };
        let report = build_report(&entry.matrix, terms);
        for claim in &entry.claims {
            let (quantity, expected, actual) = evaluate(claim, &entry.matrix, &report);
            rows.push(Row { entry: entry.name, pass: expected == actual, quantity, expected, actual });
        }
    }
    rows
}

/// Fixed-width table, one line per row, with a final summary line.
pub fn render_table(rows: &[Row]) -> String {
    let w_entry = rows.iter().map(|r| r.entry.len()).max().unwrap_or(0).max(5);
    let w_q = rows.iter().map(|r| r.quantity.chars().count()).max().unwrap_or(0).max(8);
    let mut out = String::new();
    for r in rows {
        let status = if r.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status}  {:<w_entry$}  {:<w_q$}  expected {}  got {}\n",
            r.entry, r.quantity, r.expected, r.actual
        ));
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    out.push_str(&format!("{passed}/{} claims hold\n", rows.len()));
    out
}
