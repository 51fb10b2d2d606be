//! Reproducibility suites: recompute every bundled reference value from
//! scratch and report pass/fail per check.
//!
//! Each suite is a pure function of the knot table (and an optional
//! parameter range for the family suites), so the CLI's `verify-paper`
//! subcommand and the acceptance tests share one implementation.

use crate::algebra::{Cyclo12, GoldenClass, LaurentPoly, OmegaClass};
use crate::bounds::{
    deduce, facts_for_expr, slice_obstruction, FactsError, Mode, Problem, SliceVerdict,
};
use crate::diagram::PlanarDiagram;
use crate::invariants::{
    bracket_recursive, bracket_state_sum, connected_sum_sets, invariants, jones, kauffman_bracket,
    q_polynomial, InvariantError, InvariantSet,
};
use crate::notation::{km_diagram, parse_expr, KnotTable, NotationError};
use crate::par;

/// One recomputed fact, with enough detail to debug a failure.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Suite {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }
}

/// Every suite name, in reporting order.
pub const SUITES: &[&str] = &[
    "jones-closed-forms",
    "km-recurrence",
    "family-lemmas",
    "table-1",
    "jl-family",
    "cross-identities",
    "table-2",
    "named-bounds",
    "slice",
    "properties",
];

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Notation(#[from] NotationError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Facts(#[from] FactsError),
}

/// Run one suite.  `range` overrides the suite's default parameter window
/// where one applies (`km-recurrence`, `family-lemmas`, `table-1`,
/// `jl-family`) and is ignored elsewhere.
pub fn run_suite(
    name: &str,
    table: &KnotTable,
    range: Option<(i64, i64)>,
) -> Result<Suite, VerifyError> {
    let checks = match name {
        "jones-closed-forms" => jones_closed_forms(table)?,
        "km-recurrence" => km_recurrence(range.unwrap_or((-10, 10))),
        "family-lemmas" => family_lemmas(range.unwrap_or((-12, 12)))?,
        "table-1" => table_1(table, range.unwrap_or((-2, 2)))?,
        "jl-family" => jl_family(table, range.unwrap_or((-3, 3)))?,
        "cross-identities" => cross_identities(table)?,
        "table-2" => table_2(table)?,
        "named-bounds" => named_bounds(table)?,
        "slice" => slice_suite(table)?,
        "properties" => properties(table)?,
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    };
    Ok(Suite {
        name: SUITES
            .iter()
            .find(|s| **s == name)
            .expect("matched above"),
        checks,
    })
}

/// Run every suite with its default ranges.
pub fn run_all(table: &KnotTable) -> Result<Vec<Suite>, VerifyError> {
    SUITES
        .iter()
        .map(|name| run_suite(name, table, None))
        .collect()
}

fn ck(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn eq_ck<T: PartialEq + std::fmt::Display>(name: impl Into<String>, got: T, want: T) -> Check {
    let pass = got == want;
    ck(name, pass, format!("got {got}, want {want}"))
}

fn resolve(table: &KnotTable, expr: &str) -> Result<PlanarDiagram, VerifyError> {
    Ok(parse_expr(expr)?.resolve(table)?)
}

// ---------------------------------------------------------------------------
// Closed forms and the twist-family recurrence.

/// `t^-5 - 2t^-4 + 2t^-3 - 2t^-2 + 2t^-1 - 1 + t` in `q` (`q^2 = t`).
fn v_6_2() -> LaurentPoly {
    LaurentPoly::from_terms([
        (-10, 1),
        (-8, -2),
        (-6, 2),
        (-4, -2),
        (-2, 2),
        (0, -1),
        (2, 1),
    ])
}

/// `-t^-3 + 2t^-2 - 2t^-1 + 3 - 2t + 2t^2 - t^3` in `q`.
fn v_6_3() -> LaurentPoly {
    LaurentPoly::from_terms([(-6, -1), (-4, 2), (-2, -2), (0, 3), (2, -2), (4, 2), (6, -1)])
}

fn jones_closed_forms(table: &KnotTable) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    for (name, want) in [("6_2", v_6_2()), ("6_3", v_6_3())] {
        let got = jones(&resolve(table, name)?);
        checks.push(ck(
            format!("closed form of V({name})"),
            got == want,
            format!("got {}, want {}", got.to_string_var("q"), want.to_string_var("q")),
        ));
    }
    for (m, want, anchor) in [(-1i64, v_6_2(), "6_2"), (0, v_6_3(), "6_3")] {
        let got = jones(&km_diagram(m));
        checks.push(ck(
            format!("family member K[{m}] matches {anchor}"),
            got == want,
            format!("got {}", got.to_string_var("q")),
        ));
    }
    Ok(checks)
}

fn km_recurrence((lo, hi): (i64, i64)) -> Vec<Check> {
    let ms: Vec<i64> = (lo..=hi).collect();
    par::map_vec(&ms, |&m| {
        let prev = jones(&km_diagram(m - 2));
        let cur = jones(&km_diagram(m));
        // t^-1 V(K_{m-2}) - t V(K_m), written in q.
        let lhs = &prev.mul_monomial(-2, 1) - &cur.mul_monomial(2, 1);
        let rhs = if m % 2 == 0 {
            // 1 - t + t^2 - t^3
            LaurentPoly::from_terms([(0, 1), (2, -1), (4, 1), (6, -1)])
        } else {
            // t^-3 - t^-2 + t^-1 - 1
            LaurentPoly::from_terms([(-6, 1), (-4, -1), (-2, 1), (0, -1)])
        };
        ck(
            format!("recurrence at m = {m}"),
            lhs == rhs,
            format!("lhs {}", lhs.to_string_var("q")),
        )
    })
}

/// Expected `(signature, arf, V(omega))` of the m-th family member, from the
/// three published lemmas.
fn km_expected(m: i64) -> (i64, u8, Cyclo12) {
    let root3 = Cyclo12::i_sqrt3();
    if m % 2 == 0 {
        let n = m / 2;
        let sigma = if n >= -3 { 0 } else { -2 };
        let arf = ((n + 1).rem_euclid(2)) as u8;
        let v = match n.rem_euclid(3) {
            0 => Cyclo12::from_int(1),
            1 => Cyclo12::from_int(-1),
            _ => root3,
        };
        (sigma, arf, v)
    } else {
        let n = (m + 1) / 2;
        let sigma = if n <= -3 { 0 } else { 2 };
        let arf = ((n + 1).rem_euclid(2)) as u8;
        let v = match n.rem_euclid(3) {
            0 => Cyclo12::from_int(1),
            1 => -root3,
            _ => Cyclo12::from_int(-1),
        };
        (sigma, arf, v)
    }
}

fn family_lemmas((lo, hi): (i64, i64)) -> Result<Vec<Check>, VerifyError> {
    let ms: Vec<i64> = (lo..=hi).collect();
    let per_m = par::map_vec(&ms, |&m| -> Result<Vec<Check>, VerifyError> {
        let inv = invariants(&km_diagram(m))?;
        let (sigma, arf, v) = km_expected(m);
        Ok(vec![
            eq_ck(format!("arf of K[{m}]"), inv.arf.unwrap_or(9), arf),
            eq_ck(format!("signature of K[{m}]"), inv.signature, sigma),
            eq_ck(format!("sixth-root value of K[{m}]"), inv.v_omega, v),
        ])
    });
    let mut checks = Vec::new();
    for group in per_m {
        checks.extend(group?);
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// The two published tables.

fn profile_check(
    name: String,
    inv: &InvariantSet,
    sigma: i64,
    arf: u8,
    v: Cyclo12,
    note: &str,
) -> Check {
    let pass = inv.signature == sigma && inv.arf == Some(arf) && inv.v_omega == v;
    ck(
        name,
        pass,
        format!(
            "signature {} (want {sigma}), arf {:?} (want {arf}), V(omega) {} (want {}){}{}",
            inv.signature,
            inv.arf,
            inv.v_omega,
            v,
            if note.is_empty() { "" } else { "; " },
            note
        ),
    )
}

fn table_1(table: &KnotTable, (lo, hi): (i64, i64)) -> Result<Vec<Check>, VerifyError> {
    let root3 = Cyclo12::i_sqrt3();
    let mut checks = Vec::new();
    for (name, sigma, arf, v) in [
        ("3_1", 2, 1, -root3),
        ("3_1!", -2, 1, root3),
        ("6_1", 0, 0, root3),
        ("6_1!", 0, 0, -root3),
    ] {
        let inv = invariants(&resolve(table, name)?)?;
        checks.push(profile_check(format!("row {name}"), &inv, sigma, arf, v, ""));
    }
    // The four family columns, each valid on one side of l = 0.
    let ls: Vec<i64> = (lo..=hi).collect();
    let per_l = par::map_vec(&ls, |&l| -> Result<Vec<Check>, VerifyError> {
        let mut out = Vec::new();
        if l >= 0 {
            let inv = invariants(&km_diagram(12 * l + 1))?;
            out.push(profile_check(
                format!("column K[12l+1] at l = {l}"),
                &inv,
                2,
                0,
                -root3,
                "",
            ));
            let inv = invariants(&km_diagram(12 * l + 4))?;
            out.push(profile_check(
                format!("column K[12l+4] at l = {l}"),
                &inv,
                0,
                1,
                root3,
                "",
            ));
        } else {
            let inv = invariants(&km_diagram(12 * l + 7))?;
            // The published signature cell reads 0 for the whole column, but
            // at l = -1 the member is K[-5] and the twist-family signature
            // lemma forces +2 there; the recomputation pins the corrected
            // value.
            let (sigma, note) = if l == -1 {
                (2, "published cell reads 0; the family lemma forces +2")
            } else {
                (0, "")
            };
            out.push(profile_check(
                format!("column K[12l+7] at l = {l}"),
                &inv,
                sigma,
                1,
                -root3,
                note,
            ));
            let inv = invariants(&km_diagram(12 * l - 2))?;
            out.push(profile_check(
                format!("column K[12l-2] at l = {l}"),
                &inv,
                -2,
                0,
                root3,
                "",
            ));
        }
        Ok(out)
    });
    for group in per_l {
        checks.extend(group?);
    }
    Ok(checks)
}

/// The composite family whose banding numbers the deduction must settle on
/// its own: member `l` is `K[12l+1] # 3_1!` for `l >= 0` and
/// `K[12l-2] # 3_1` for `l <= -1`.
pub fn jl_expression(l: i64) -> String {
    if l >= 0 {
        format!("K[{}]#3_1!", 12 * l + 1)
    } else {
        format!("K[{}]#3_1", 12 * l - 2)
    }
}

fn jl_family(table: &KnotTable, (lo, hi): (i64, i64)) -> Result<Vec<Check>, VerifyError> {
    let ls: Vec<i64> = (lo..=hi).collect();
    let per_l = par::map_vec(&ls, |&l| -> Result<Vec<Check>, VerifyError> {
        let expr = jl_expression(l);
        let facts = facts_for_expr(&parse_expr(&expr)?, table)?;
        let state = match deduce(&Problem::single(facts, Mode::Derived)) {
            Ok(s) => s,
            Err(c) => {
                return Ok(vec![ck(
                    format!("member l = {l} ({expr})"),
                    false,
                    format!("deduction contradicted itself: {c}"),
                )])
            }
        };
        Ok(vec![
            ck(
                format!("derived bu at l = {l} ({expr})"),
                state.db.is_exactly(2),
                format!("bu interval {}", state.db),
            ),
            ck(
                format!("derived u2 at l = {l} ({expr})"),
                state.d2.is_exactly(3),
                format!("u2 interval {}", state.d2),
            ),
        ])
    });
    let mut checks = Vec::new();
    for group in per_l {
        checks.extend(group?);
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// Whole-table sweeps.

/// Names of the identities re-verified for every table entry.
fn identity_failures(inv: &InvariantSet) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let c = inv.components;
    if inv.jones.eval_at_one() != (-2i128).pow(c as u32 - 1) {
        bad.push("V(1) = (-2)^(c-1)");
    }
    let vm1 = inv.v_minus_one.as_int();
    if vm1.map(|v| v.unsigned_abs() == u128::from(inv.determinant)) != Some(true) {
        bad.push("|V(-1)| = det");
    }
    if !matches!(inv.omega_class, OmegaClass::OfForm { delta, .. } if delta == inv.h1_rank_mod3) {
        bad.push("|V(omega)| = sqrt3^delta");
    }
    if let Some(class) = inv.lambda_class {
        if !matches!(class, GoldenClass::OfForm { n, .. } if n == inv.h1_rank_mod5) {
            bad.push("lambda = +-sqrt5^r");
        }
    }
    if c == 1 {
        if inv.signature % 2 != 0 {
            bad.push("knot signature even");
        }
        if inv.determinant % 2 == 0 {
            bad.push("knot determinant odd");
        }
        let want = if (inv.signature / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        if vm1.map(|v| v.signum() == want) != Some(true) {
            bad.push("sign of V(-1) from signature");
        }
        match (inv.v_i, inv.arf) {
            (Some(1), Some(0)) | (Some(-1), Some(1)) => {}
            _ => bad.push("V(i) = (-1)^arf"),
        }
    }
    bad
}

fn cross_identities(table: &KnotTable) -> Result<Vec<Check>, VerifyError> {
    let entries = table.entries();
    let rows = par::map_vec(entries, |entry| -> Result<Check, VerifyError> {
        let inv = invariants(&resolve(table, &entry.name)?)?;
        let bad = identity_failures(&inv);
        Ok(ck(
            format!("identities for {}", entry.name),
            bad.is_empty(),
            if bad.is_empty() {
                format!(
                    "det {}, signature {}, {} factor(s)",
                    inv.determinant,
                    inv.signature,
                    inv.h1_factors.len()
                )
            } else {
                format!("violated: {}", bad.join(", "))
            },
        ))
    });
    rows.into_iter().collect()
}

fn table_2(table: &KnotTable) -> Result<Vec<Check>, VerifyError> {
    let rows: Vec<(String, u32, u32)> = table
        .entries()
        .iter()
        .filter_map(|e| Some((e.name.clone(), e.bu?, e.u2?)))
        .collect();
    let out = par::map_vec(&rows, |(name, bu, u2)| -> Result<Check, VerifyError> {
        let facts = facts_for_expr(&parse_expr(name)?, table)?;
        let mut bad = Vec::new();
        match deduce(&Problem::single(facts.clone(), Mode::Asserted)) {
            Ok(s) => {
                if !s.db.is_exactly(*bu) || !s.d2.is_exactly(*u2) {
                    bad.push(format!(
                        "asserted run gave bu {} u2 {} instead of [{bu}] [{u2}]",
                        s.db, s.d2
                    ));
                }
            }
            Err(c) => bad.push(format!("asserted run contradicted itself: {c}")),
        }
        match deduce(&Problem::single(facts, Mode::Derived)) {
            Ok(s) => {
                if !s.db.contains(*bu) || !s.d2.contains(*u2) {
                    bad.push(format!(
                        "derived intervals bu {} u2 {} miss the published ({bu}, {u2})",
                        s.db, s.d2
                    ));
                }
            }
            Err(c) => bad.push(format!("derived run contradicted itself: {c}")),
        }
        // Band and H(2) numbers can only combine as (b, b) or, for even
        // b >= 2, as (b, b+1); odd band number pins them equal.
        let feasible = u2 == bu || (*u2 == bu + 1 && bu % 2 == 0 && *bu >= 2);
        if !feasible {
            bad.push(format!("published pair ({bu}, {u2}) breaks the parity relation"));
        }
        Ok(ck(
            format!("row {name}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("collapses to bu {bu}, u2 {u2}")
            } else {
                bad.join("; ")
            },
        ))
    });
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// The individually named bounds.

fn named_bounds(table: &KnotTable) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();

    let facts = facts_for_expr(&parse_expr("9_49")?, table)?;
    match deduce(&Problem::single(facts, Mode::Derived)) {
        Ok(s) => {
            let via_lambda = s.trace.iter().any(|t| t.rule == "lambda");
            checks.push(ck(
                "golden-evaluation floor for 9_49",
                s.db.lo >= 3 && via_lambda,
                format!("bu interval {}, lambda rule fired: {via_lambda}", s.db),
            ));
        }
        Err(c) => checks.push(ck("golden-evaluation floor for 9_49", false, c.to_string())),
    }

    let facts = facts_for_expr(&parse_expr("8_18")?, table)?;
    match deduce(&Problem::single(facts, Mode::Derived)) {
        Ok(s) => {
            let via_ratio = s.trace.iter().any(|t| t.rule == "distance_two");
            checks.push(ck(
                "H(2) floor for 8_18",
                s.d2.lo >= 3 && via_ratio,
                format!("u2 interval {}, ratio rule fired: {via_ratio}", s.d2),
            ));
        }
        Err(c) => checks.push(ck("H(2) floor for 8_18", false, c.to_string())),
    }

    let facts = facts_for_expr(&parse_expr("6_2#9_35")?, table)?;
    match deduce(&Problem::single(facts, Mode::Asserted)) {
        Ok(s) => checks.push(ck(
            "banding number of 6_2#9_35",
            s.db.is_exactly(3),
            format!("bu interval {}, u2 interval {}", s.db, s.d2),
        )),
        Err(c) => checks.push(ck("banding number of 6_2#9_35", false, c.to_string())),
    }

    let j = facts_for_expr(&parse_expr("5_1!")?, table)?;
    let k = facts_for_expr(&parse_expr("3_1#3_1")?, table)?;
    let p = Problem {
        j,
        k,
        known_distance: None,
        mode: Mode::Asserted,
    };
    match deduce(&p) {
        Ok(s) => checks.push(ck(
            "band distance from 5_1! to 3_1#3_1",
            s.db.is_exactly(3),
            format!("db interval {}", s.db),
        )),
        Err(c) => checks.push(ck("band distance from 5_1! to 3_1#3_1", false, c.to_string())),
    }

    let j = facts_for_expr(&parse_expr("5_1")?, table)?;
    let k = facts_for_expr(&parse_expr("3_1#3_1")?, table)?;
    let p = Problem {
        j,
        k,
        known_distance: Some([2, 2]),
        mode: Mode::Derived,
    };
    match deduce(&p) {
        Ok(s) => checks.push(ck(
            "band distance from 5_1 to 3_1#3_1 given Gordian distance 2",
            s.db.hi.is_some_and(|h| h <= 2),
            format!("db interval {}", s.db),
        )),
        Err(c) => checks.push(ck(
            "band distance from 5_1 to 3_1#3_1 given Gordian distance 2",
            false,
            c.to_string(),
        )),
    }

    Ok(checks)
}

fn slice_suite(table: &KnotTable) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    let inv = invariants(&resolve(table, "9_44")?)?;
    checks.push(ck(
        "obstruction for 9_44",
        slice_obstruction(&inv) == SliceVerdict::NotSlice,
        format!("V(omega) = {}", inv.v_omega),
    ));
    let inv = invariants(&PlanarDiagram::unknot())?;
    checks.push(ck(
        "unknot stays inconclusive",
        slice_obstruction(&inv) == SliceVerdict::Inconclusive,
        format!("V(omega) = {}", inv.v_omega),
    ));
    for name in ["3_1", "4_1", "6_1", "8_18"] {
        let inv = invariants(&resolve(table, name)?)?;
        checks.push(ck(
            format!("{name} stays inconclusive"),
            slice_obstruction(&inv) == SliceVerdict::Inconclusive,
            format!("V(omega) = {}", inv.v_omega),
        ));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// Deterministic replay of the property laws.

fn relabel(d: &PlanarDiagram, f: impl Fn(u32) -> u32) -> PlanarDiagram {
    let crossings = d
        .crossings()
        .iter()
        .map(|c| [f(c.0[0]), f(c.0[1]), f(c.0[2]), f(c.0[3])])
        .collect();
    PlanarDiagram::new(crossings, d.free_loops()).expect("relabeling keeps the diagram valid")
}

fn properties(table: &KnotTable) -> Result<Vec<Check>, VerifyError> {
    let names = ["3_1", "4_1", "5_2", "6_2", "7_4", "8_19", "8_20", "9_42"];
    let mut diagrams = vec![("hopf".to_string(), PlanarDiagram::hopf())];
    for name in names {
        diagrams.push((name.to_string(), resolve(table, name)?));
    }

    let skein = par::map_vec(&diagrams, |(name, d)| {
        let whole = kauffman_bracket(d);
        let a = LaurentPoly::monomial(1, 1);
        let a_inv = LaurentPoly::monomial(-1, 1);
        let ok = (0..d.crossing_count()).all(|idx| {
            let sa = kauffman_bracket(&d.smooth(idx, crate::diagram::Smoothing::A));
            let sb = kauffman_bracket(&d.smooth(idx, crate::diagram::Smoothing::B));
            whole == &(&a * &sa) + &(&a_inv * &sb)
        });
        ck(
            format!("bracket skein at every crossing of {name}"),
            ok,
            format!("{} crossings", d.crossing_count()),
        )
    });

    let agree = par::map_vec(&diagrams, |(name, d)| {
        ck(
            format!("state sum matches recursion for {name}"),
            bracket_state_sum(d) == bracket_recursive(d),
            String::new(),
        )
    });

    let mirror = par::map_vec(&diagrams, |(name, d)| {
        let m = d.mirror();
        let v = jones(d);
        let vm = jones(&m);
        let ok = vm == v.invert_variable()
            && q_polynomial(d).ok() == q_polynomial(&m).ok()
            && crate::invariants::signature(d).map(|s| -s).ok()
                == crate::invariants::signature(&m).ok();
        ck(
            format!("mirror behavior of {name}"),
            ok,
            "V inverts, Q and |signature| persist".to_string(),
        )
    });

    let pairs = [("3_1", "4_1"), ("5_2", "3_1"), ("4_1", "4_1"), ("8_19", "3_1")];
    let sums = par::map_vec(&pairs, |(a, b)| -> Result<Check, VerifyError> {
        let da = resolve(table, a)?;
        let db = resolve(table, b)?;
        let direct = invariants(&da.connected_sum(&db))?;
        let combined = connected_sum_sets(&invariants(&da)?, &invariants(&db)?)?;
        Ok(ck(
            format!("connected-sum profile of {a}#{b}"),
            direct == combined,
            "factor-wise combination matches the spliced diagram".to_string(),
        ))
    });

    let labels = par::map_vec(&diagrams, |(name, d)| {
        let renamed = relabel(d, |x| 3 * x + 11);
        let mut reordered: Vec<[u32; 4]> = d.crossings().iter().map(|c| c.0).collect();
        reordered.reverse();
        let reordered = PlanarDiagram::new(reordered, d.free_loops()).expect("reorder is valid");
        ck(
            format!("canonical code of {name} ignores presentation"),
            d.canonical_code() == renamed.canonical_code()
                && d.canonical_code() == reordered.canonical_code(),
            String::new(),
        )
    });

    let simplified = par::map_vec(&diagrams, |(name, d)| {
        let s = d.simplify();
        ck(
            format!("simplification preserves V for {name}"),
            jones(&s) == jones(d) && s.component_count() == d.component_count(),
            format!("{} -> {} crossings", d.crossing_count(), s.crossing_count()),
        )
    });

    let mut checks = Vec::new();
    checks.extend(skein);
    checks.extend(agree);
    checks.extend(mirror);
    for s in sums {
        checks.push(s?);
    }
    checks.extend(labels);
    checks.extend(simplified);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_resolve() {
        let table = crate::notation::catalog::full_table().unwrap();
        assert!(matches!(
            run_suite("no-such-suite", &table, None),
            Err(VerifyError::UnknownSuite(_))
        ));
        let s = run_suite("slice", &table, None).unwrap();
        assert!(s.all_pass(), "{:?}", s.checks);
    }

    #[test]
    fn jl_expressions_alternate_by_sign() {
        assert_eq!(jl_expression(0), "K[1]#3_1!");
        assert_eq!(jl_expression(2), "K[25]#3_1!");
        assert_eq!(jl_expression(-1), "K[-14]#3_1");
    }
}
