//! Acceptance run: one `PASS` / `FAIL` line per criterion, exact polynomial
//! equality throughout.
//!
//! Runs as a plain binary (`harness = false`) so the lines appear in
//! `cargo test` output unfiltered. The process exits non-zero if any
//! criterion fails, except a criterion whose failure is *expected*: its line
//! still reads `FAIL`, and the binary asserts the failure is exactly the
//! documented one, so a change in behaviour in either direction is caught.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qtcomb::dyck::{
    bounce, dd_qt, dd_qt_table, dinv_decorated, dinv_labelled, enumerate_dd_filtered,
    shuffle_labellings, validate_path, DdFilter,
};
use qtcomb::polyomino::{format_word, parse_path, poly_area_word, rp_qt};
use qtcomb::verify::{f_or_zero, run_suite};
use qtcomb::{
    DecoratedDyckPath, DyckFlavor, FEvaluator, FIndex, LabelledDyckPath, PolyDecorations,
    PolyFlavor, QtPoly, ReducedPolyomino, Suite,
};

enum Outcome {
    Pass(String),
    Fail(String),
    /// A failure that is known, explained, and pinned down exactly.
    ExpectedFail(String),
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    outcome: Outcome,
    elapsed: Duration,
}

/// Every F value seen while checking the enumeration identities, for the
/// positivity criterion.
#[derive(Default)]
struct SeenValues(BTreeMap<FIndex, QtPoly>);

impl SeenValues {
    fn note(&mut self, idx: FIndex, value: &QtPoly) {
        self.0.entry(idx).or_insert_with(|| value.clone());
    }
}

// ---------------------------------------------------------------------------
// Golden objects

fn decorated_golden() -> DecoratedDyckPath {
    DecoratedDyckPath::new(
        validate_path(&[0, 1, 1, 0, 1, 1, 1, 2]).unwrap(),
        vec![2, 5],
        vec![3, 8],
        vec![4, 7],
        DyckFlavor::Ddd,
    )
    .unwrap()
}

fn labelled_golden() -> LabelledDyckPath {
    LabelledDyckPath::new(
        validate_path(&[0, 1, 0, 1, 2, 1, 2, 3]).unwrap(),
        vec![1, 3, 0, 4, 6, 0, 2, 6],
        vec![4, 7],
    )
    .unwrap()
}

fn bounce_golden() -> DecoratedDyckPath {
    DecoratedDyckPath::new(
        validate_path(&[0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3]).unwrap(),
        vec![],
        vec![8, 10],
        vec![4, 5, 6, 9, 11, 12],
        DyckFlavor::DdbStar,
    )
    .unwrap()
}

fn polyomino_golden() -> ReducedPolyomino {
    ReducedPolyomino::from_paths(
        &parse_path("NNENNEENNENNNENNE").unwrap(),
        &parse_path("EENNNENNENNNEENNN").unwrap(),
        PolyFlavor::Star,
        PolyDecorations::default(),
    )
    .unwrap()
}

const POLYOMINO_GOLDEN_AREA_WORD: &str = "0 0̄ 1 1̄ 2 1̄ 1̄ 1 0̄ 0̄ 1 0̄ 0̄ 0̄ 1 1 1̄ 1̄";

/// Area of the labelled golden object straight from its area word: the sum
/// of the letters, less the letters of the two decorated rises.
const LABELLED_GOLDEN_AREA: u64 = (1 + 1 + 2 + 1 + 2 + 3) - (1 + 2);

/// The area quoted for the labelled golden object alongside its original
/// drawing; it disagrees with the computed value and is only recorded.
const LABELLED_GOLDEN_AREA_STATED: u64 = 6;

// ---------------------------------------------------------------------------
// Independent oracles

/// All Dyck area words of a size, by a direct recursion that shares nothing
/// with the library's generator.
fn oracle_area_words(size: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, size: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.last().map_or(0, |&v| v + 1);
        for v in 0..=top {
            prefix.push(v);
            go(prefix, size, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), size, &mut out);
    out
}

/// `Σ q^dinv t^area` over plain Dyck paths of a size, with dinv counted
/// pair by pair from the classical definition.
fn oracle_qt_catalan(size: usize) -> QtPoly {
    let mut total = QtPoly::zero();
    for word in oracle_area_words(size) {
        let area: u32 = word.iter().sum();
        let mut dinv = 0u32;
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] == word[j] || word[i] == word[j] + 1 {
                    dinv += 1;
                }
            }
        }
        total.add_monomial(dinv, area);
    }
    total
}

fn catalan(n: u64) -> BigInt {
    // C(n) = binom(2n, n) / (n + 1), in exact arithmetic.
    let mut binom = BigInt::from(1u32);
    for i in 0..n {
        binom = binom * BigInt::from(2 * n - i) / BigInt::from(i + 1);
    }
    binom / BigInt::from(n + 1)
}

// ---------------------------------------------------------------------------
// Criteria

fn golden_objects() -> Outcome {
    let dinv = dinv_decorated(&decorated_golden()).unwrap();
    let labelled = dinv_labelled(&labelled_golden());
    let bounced = bounce(&bounce_golden()).unwrap();
    let word = format_word(&poly_area_word(&polyomino_golden()));
    let detail = format!(
        "decorated dinv {dinv} (want 6), labelled dinv {labelled} (want 3), \
         bounce {bounced} (want 1), polyomino area word \"{word}\""
    );
    if dinv == 6 && labelled == 3 && bounced == 1 && word == POLYOMINO_GOLDEN_AREA_WORD {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

/// Compares every `(r, a, b)` entry of the enumeration tables with
/// `m + n <= max_size` against `F`, with `superscript(a, b) = (d, ℓ)`.
/// Returns the number of tuples compared and the first mismatch.
fn compare_dyck_tables(
    ev: &FEvaluator,
    flavor: DyckFlavor,
    max_size: usize,
    superscript: impl Fn(usize, usize) -> (usize, usize),
    seen: &mut SeenValues,
) -> (u64, u64, Option<String>) {
    let mut compared = 0;
    let mut mismatches = 0;
    let mut first = None;
    for total in 0..=max_size {
        for m in 0..=total {
            let n = total - m;
            let table = dd_qt_table(m, n, flavor);
            for r in 0..=n {
                for a in 0..=total {
                    for b in 0..=total {
                        let got = table.get(&(r, a, b)).cloned().unwrap_or_default();
                        let (d, l) = superscript(a, b);
                        let idx = FIndex::new(n as u32, r as u32, m as u32, d as u32, l as u32);
                        let want = f_or_zero(ev, idx);
                        seen.note(idx, &want);
                        compared += 1;
                        if got != want {
                            mismatches += 1;
                            first.get_or_insert_with(|| {
                                format!(
                                    "m={m} n={n} r={r} a={a} b={b}: enumeration {} vs {idx} = {}",
                                    got.to_pretty(),
                                    want.to_pretty()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    (compared, mismatches, first)
}

fn dinv_area_identity(ev: &FEvaluator, seen: &mut SeenValues) -> Outcome {
    let (compared, mismatches, first) =
        compare_dyck_tables(ev, DyckFlavor::Ddd, 7, |a, b| (b, a), seen);
    match first {
        None => Outcome::Pass(format!("{compared} tuples with m+n <= 7 agree")),
        Some(first) => Outcome::Fail(format!("{mismatches}/{compared} mismatches; first: {first}")),
    }
}

/// The identity as literally stated pairs decorated falls with `ℓ` and
/// decorated peaks with `d`. It is false; the correct pairing is the reverse
/// (`F^{(a,b)}` for `a` decorated falls and `b` decorated peaks), which is
/// also checked here and must hold everywhere.
const AREA_BOUNCE_LITERAL_MISMATCHES: u64 = 1132;

fn area_bounce_identity(ev: &FEvaluator, seen: &mut SeenValues) -> Outcome {
    let (compared, literal_mismatches, first) =
        compare_dyck_tables(ev, DyckFlavor::DdbStar, 7, |a, b| (b, a), seen);
    let (_, corrected_mismatches, corrected_first) =
        compare_dyck_tables(ev, DyckFlavor::DdbStar, 7, |a, b| (a, b), seen);
    // The smallest witness: one decorated fall, no decorated peak.
    let witness = dd_qt(0, 1, 1, 1, 0, DyckFlavor::DdbStar);
    let witness_f = f_or_zero(ev, FIndex::new(1, 1, 0, 0, 1));
    let witness_holds = witness == QtPoly::one() && witness_f.is_zero();

    if literal_mismatches == 0 {
        return Outcome::Pass(format!("{compared} tuples agree under the literal pairing"));
    }
    let detail = format!(
        "literal pairing: {literal_mismatches}/{compared} mismatches (first: {}); \
         e.g. one decorated fall, m=0 n=1 r=1: enumeration {} but F_{{1,1;0}}^(0,1) = {}; \
         corrected pairing F^(a,b): {corrected_mismatches} mismatches",
        first.unwrap_or_default(),
        witness.to_pretty(),
        witness_f.to_pretty(),
    );
    if corrected_mismatches == 0
        && literal_mismatches == AREA_BOUNCE_LITERAL_MISMATCHES
        && witness_holds
    {
        Outcome::ExpectedFail(detail)
    } else {
        Outcome::Fail(format!("{detail}; corrected first: {}", corrected_first.unwrap_or_default()))
    }
}

fn polyomino_identities(ev: &FEvaluator, seen: &mut SeenValues) -> Outcome {
    let mut compared = 0u64;
    let mut first = None;
    let mut mismatches = 0u64;
    for total in 0..=6usize {
        for m in 0..=total {
            let n = total - m;
            for r in 0..=m + 2 {
                for k in 0..=m + 2 {
                    for j in 0..=n {
                        let star = rp_qt(m, r, n, k, j, PolyFlavor::Star);
                        let circ = rp_qt(m, r, n, k, j, PolyFlavor::Circ);
                        let want = if j > m + 1 {
                            // More decorated barred rises than possible.
                            QtPoly::zero()
                        } else {
                            let idx = FIndex::new(
                                (m + 1) as u32,
                                r as u32,
                                (n - j) as u32,
                                (m + 1 - j) as u32,
                                k as u32,
                            );
                            let value = f_or_zero(ev, idx);
                            seen.note(idx, &value);
                            value
                        };
                        compared += 1;
                        if star != want || circ != want {
                            mismatches += 1;
                            first.get_or_insert_with(|| {
                                format!(
                                    "m={m} r={r} n={n} k={k} j={j}: star {} circ {} F {}",
                                    star.to_pretty(),
                                    circ.to_pretty(),
                                    want.to_pretty()
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    match first {
        None => Outcome::Pass(format!("{compared} tuples with m+n <= 6: circ = star = F")),
        Some(first) => Outcome::Fail(format!("{mismatches}/{compared} mismatches; first: {first}")),
    }
}

fn onestep_residual() -> Outcome {
    let ev = FEvaluator::new();
    let mut checked = 0u64;
    let mut first = None;
    for n in 0..=6u32 {
        for p in 0..=(6 - n) {
            // The one-step recursion covers 1 <= k < n; k = 0 and n = 0 are
            // initial conditions and k = n has no s < k term to recurse on.
            for k in 1..n {
                for l in 0..=(n - k) {
                    for d in 0..=(n + p) {
                        let idx = FIndex::new(n, k, p, d, l);
                        checked += 1;
                        match ev.onestep_residual(idx) {
                            Ok(residual) if residual.is_zero() => {}
                            Ok(residual) => {
                                first.get_or_insert_with(|| {
                                    format!("{idx}: residual {}", residual.to_pretty())
                                });
                            }
                            Err(e) => {
                                first.get_or_insert_with(|| format!("{idx}: {e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    match first {
        None => Outcome::Pass(format!("{checked} admissible indices with 1 <= k < n, n+p <= 6")),
        Some(first) => Outcome::Fail(first),
    }
}

fn bijection_suites() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for suite in [Suite::Sweep, Suite::Zeta, Suite::PolyDyck] {
        let report = run_suite(suite, 7);
        ok &= report.is_pass() && report.checks > 0;
        parts.push(format!("{} {}/{}", report.suite, report.passes, report.checks));
        if let Some(failure) = report.failures.first() {
            parts.push(format!("first failure [{}] {}", failure.check, failure.detail));
        }
    }
    if ok {
        Outcome::Pass(parts.join(", "))
    } else {
        Outcome::Fail(parts.join(", "))
    }
}

fn shuffle_consistency() -> Outcome {
    let mut objects = 0u64;
    let mut first = None;
    for total in 0..=7 {
        for m in 0..=total {
            for d in enumerate_dd_filtered(m, total - m, DdFilter::default(), DyckFlavor::Ddd) {
                objects += 1;
                let direct = dinv_decorated(&d).unwrap();
                let via_labels: Vec<u64> = shuffle_labellings(&d)
                    .map(|ls| ls.iter().map(dinv_labelled).collect())
                    .unwrap_or_default();
                if via_labels != [direct] {
                    first.get_or_insert_with(|| {
                        format!("{:?}: dinv {direct}, labelled {via_labels:?}", d.area_word())
                    });
                }
            }
        }
    }
    match first {
        None => Outcome::Pass(format!("{objects} objects of size <= 7")),
        Some(first) => Outcome::Fail(first),
    }
}

fn catalan_specialization() -> Outcome {
    for n in 0..=8usize {
        let summed = (0..=n).fold(QtPoly::zero(), |acc, r| {
            &acc + &dd_qt(0, n, r, 0, 0, DyckFlavor::Ddd)
        });
        let oracle = oracle_qt_catalan(n);
        if summed != oracle {
            return Outcome::Fail(format!(
                "n={n}: enumeration {} vs oracle {}",
                summed.to_pretty(),
                oracle.to_pretty()
            ));
        }
        if summed.eval_at_one() != catalan(n as u64) {
            return Outcome::Fail(format!("n={n}: value at q=t=1 is {}", summed.eval_at_one()));
        }
    }
    Outcome::Pass("n <= 8 matches the brute-force oracle and the Catalan numbers".into())
}

fn positivity(seen: &SeenValues) -> Outcome {
    let nonzero = seen.0.values().filter(|v| !v.is_zero()).count();
    match seen.0.iter().find(|(_, v)| !v.has_nonnegative_coefficients()) {
        None => Outcome::Pass(format!(
            "{} distinct F values ({nonzero} non-zero), all coefficients >= 0",
            seen.0.len()
        )),
        Some((idx, v)) => Outcome::Fail(format!("{idx} = {}", v.to_pretty())),
    }
}

fn area_record() -> Outcome {
    let report = run_suite(Suite::DinvArea, 1);
    let computed = report.records.get("labelled_golden_area_computed").and_then(|v| v.as_u64());
    let stated = report.records.get("labelled_golden_area_stated").and_then(|v| v.as_u64());
    let consistent = report.is_pass();
    let detail = format!(
        "report records computed area {computed:?}, stated area {stated:?}; \
         oracle {LABELLED_GOLDEN_AREA}; report consistent: {consistent}"
    );
    if computed == Some(LABELLED_GOLDEN_AREA)
        && stated == Some(LABELLED_GOLDEN_AREA_STATED)
        && consistent
    {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn timed(
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: impl FnOnce() -> Outcome,
) -> Criterion {
    let start = Instant::now();
    let outcome = run();
    Criterion {
        id,
        title,
        budget,
        outcome,
        elapsed: start.elapsed(),
    }
}

fn main() -> ExitCode {
    let ev = FEvaluator::new();
    let mut seen = SeenValues::default();
    let criteria = vec![
        timed(1, "golden objects", Some(Duration::from_secs(1)), golden_objects),
        timed(2, "dinv/area enumeration = F (m+n <= 7)", Some(Duration::from_secs(300)), || {
            dinv_area_identity(&ev, &mut seen)
        }),
        timed(3, "area/bounce enumeration = F, literal pairing (m+n <= 7)", None, || {
            area_bounce_identity(&ev, &mut seen)
        }),
        timed(4, "polyomino enumerators = F (m+n <= 6)", None, || {
            polyomino_identities(&ev, &mut seen)
        }),
        timed(5, "one-step recursion residual (n+p <= 6)", None, onestep_residual),
        timed(6, "bijection suites (size <= 7)", None, bijection_suites),
        timed(7, "shuffle-labelling dinv (size <= 7)", None, shuffle_consistency),
        timed(8, "q,t-Catalan specialization (n <= 8)", None, catalan_specialization),
        timed(9, "positivity of F values from criteria 2-4", None, || positivity(&seen)),
        timed(10, "labelled golden area recorded", None, area_record),
    ];

    let mut failed = 0;
    for c in &criteria {
        let over_budget = c.budget.is_some_and(|b| c.elapsed > b);
        let (status, detail) = match &c.outcome {
            Outcome::Pass(d) if !over_budget => ("PASS", d.clone()),
            Outcome::Pass(d) => {
                failed += 1;
                ("FAIL", format!("over budget {:?}; {d}", c.budget.unwrap()))
            }
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d.clone())
            }
            Outcome::ExpectedFail(d) => ("FAIL", format!("(expected, documented) {d}")),
        };
        println!(
            "criterion {:>2} {status} [{:.2?}] {}: {detail}",
            c.id, c.elapsed, c.title
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
