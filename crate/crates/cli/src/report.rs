//! Report shapes shared by every subcommand.
//!
//! Each command builds one of these serde-serializable structs; `--json`
//! prints it verbatim, and the text renderers below are pure functions of
//! the same data, so both forms always agree.

use std::collections::BTreeMap;

use serde::Serialize;

use knotband_core::algebra::{GoldenClass, OmegaClass};
use knotband_core::bounds::{BoundState, Contradiction, Interval, TraceEntry};
use knotband_core::diagram::PlanarDiagram;
use knotband_core::invariants::InvariantSet;

/// Closed interval `[lo, hi]`; `hi` is `null` when no upper bound is known.
#[derive(Serialize, Clone, Copy)]
pub struct IntervalJson(pub u32, pub Option<u32>);

impl IntervalJson {
    pub fn of(ivl: Interval) -> Self {
        IntervalJson(ivl.lo, ivl.hi)
    }

    pub fn text(&self) -> String {
        match self.1 {
            Some(hi) => format!("[{}, {hi}]", self.0),
            None => format!("[{}, ∞)", self.0),
        }
    }
}

/// Render `sign · i^(components-1) · (i√3)^delta` symbolically.
pub fn omega_string(class: OmegaClass, components: usize) -> String {
    let OmegaClass::OfForm { sign, delta } = class else {
        return "not of the expected form".into();
    };
    let ipow = (components as u32 - 1 + delta) % 4;
    let mut neg = sign < 0;
    let imag = ipow % 2 == 1;
    if ipow >= 2 {
        neg = !neg;
    }
    let coeff = 3i64.pow(delta / 2);
    let mut parts: Vec<String> = Vec::new();
    if coeff != 1 || (!imag && delta % 2 == 0) {
        parts.push(coeff.to_string());
    }
    if imag {
        parts.push("i".into());
    }
    if delta % 2 == 1 {
        parts.push("sqrt3".into());
    }
    format!("{}{}", if neg { "-" } else { "" }, parts.join("*"))
}

/// Render `sign · √5^n` symbolically, e.g. `-sqrt5^2`.
pub fn lambda_string(class: GoldenClass) -> String {
    let GoldenClass::OfForm { sign, n } = class else {
        return "not of the expected form".into();
    };
    let body = match n {
        0 => "1".to_string(),
        1 => "sqrt5".to_string(),
        n => format!("sqrt5^{n}"),
    };
    format!("{}{body}", if sign < 0 { "-" } else { "" })
}

#[derive(Serialize)]
pub struct InvariantReport {
    pub expr: String,
    pub crossings: usize,
    pub components: usize,
    /// Laurent polynomial in q, where q^2 = t.
    pub jones: String,
    pub v_omega: String,
    pub v_minus_one: String,
    pub v_i: Option<String>,
    pub determinant: u64,
    pub sigma: i64,
    pub arf: Option<u8>,
    /// Laurent polynomial in z, absent above the crossing budget.
    pub q_poly: Option<String>,
    pub lambda: Option<String>,
    pub h1_factors: Vec<String>,
    pub h1_generators: usize,
    pub h1_rank_mod3: u32,
    pub h1_rank_mod5: u32,
    /// Cross-identity marks, recomputed from the fields above.
    pub checks: BTreeMap<&'static str, bool>,
}

pub fn invariant_report(expr: &str, d: &PlanarDiagram, inv: &InvariantSet) -> InvariantReport {
    let mut checks = BTreeMap::new();
    let c = inv.components;
    checks.insert(
        "v_at_one_counts_components",
        inv.jones.eval_at_one() == (-2i128).pow(c as u32 - 1),
    );
    let vm1 = inv.v_minus_one.as_int();
    checks.insert(
        "v_at_minus_one_matches_determinant",
        vm1.map(|v| v.unsigned_abs() == u128::from(inv.determinant)) == Some(true),
    );
    checks.insert(
        "omega_magnitude_matches_h1_rank_mod3",
        matches!(inv.omega_class, OmegaClass::OfForm { delta, .. } if delta == inv.h1_rank_mod3),
    );
    if let Some(class) = inv.lambda_class {
        checks.insert(
            "lambda_matches_h1_rank_mod5",
            matches!(class, GoldenClass::OfForm { n, .. } if n == inv.h1_rank_mod5),
        );
    }
    if c == 1 {
        let want = if (inv.signature / 2).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        checks.insert(
            "v_at_minus_one_sign_matches_signature",
            vm1.map(|v| v.signum() == want) == Some(true),
        );
    }
    InvariantReport {
        expr: expr.to_string(),
        crossings: d.crossing_count(),
        components: c,
        jones: inv.jones.to_string_var("q"),
        v_omega: omega_string(inv.omega_class, c),
        v_minus_one: vm1.map_or_else(|| "not an integer".into(), |v| v.to_string()),
        v_i: inv.v_i.map(|v| v.to_string()),
        determinant: inv.determinant,
        sigma: inv.signature,
        arf: inv.arf,
        q_poly: inv.q_poly.as_ref().map(|p| p.to_string_var("z")),
        lambda: inv.lambda_class.map(lambda_string),
        h1_factors: inv.h1_factors.iter().map(|f| f.to_string()).collect(),
        h1_generators: inv.h1_generators,
        h1_rank_mod3: inv.h1_rank_mod3,
        h1_rank_mod5: inv.h1_rank_mod5,
        checks,
    }
}

pub fn render_invariants(r: &InvariantReport) -> String {
    let mut out = format!(
        "{}  ({} crossings, {} component{})\n",
        r.expr,
        r.crossings,
        r.components,
        if r.components == 1 { "" } else { "s" }
    );
    let mut line = |k: &str, v: String| out.push_str(&format!("  {k:<14} {v}\n"));
    line("jones:", r.jones.clone());
    line("v_omega:", r.v_omega.clone());
    line("v_minus_one:", r.v_minus_one.clone());
    if let Some(v) = &r.v_i {
        line("v_i:", v.clone());
    }
    line("determinant:", r.determinant.to_string());
    line("sigma:", r.sigma.to_string());
    if let Some(a) = r.arf {
        line("arf:", a.to_string());
    }
    match &r.q_poly {
        Some(q) => line("q_poly:", q.clone()),
        None => line("q_poly:", "skipped (crossing budget)".into()),
    }
    if let Some(l) = &r.lambda {
        line("lambda:", l.clone());
    }
    line(
        "h1:",
        format!(
            "[{}]  generators {}, rank mod 3 = {}, rank mod 5 = {}",
            r.h1_factors.join(", "),
            r.h1_generators,
            r.h1_rank_mod3,
            r.h1_rank_mod5
        ),
    );
    let failed: Vec<&str> = r
        .checks
        .iter()
        .filter(|(_, ok)| !**ok)
        .map(|(k, _)| *k)
        .collect();
    if failed.is_empty() {
        line("checks:", format!("{} identities ok", r.checks.len()));
    } else {
        line("checks:", format!("FAILED: {}", failed.join(", ")));
    }
    out
}

#[derive(Serialize)]
pub struct StateJson {
    pub db: IntervalJson,
    pub d2: IntervalJson,
}

#[derive(Serialize)]
pub struct TraceJson {
    pub rule: String,
    pub paper_ref: String,
    pub before: StateJson,
    pub after: StateJson,
    pub asserted: bool,
}

fn trace_json(t: &[TraceEntry]) -> Vec<TraceJson> {
    t.iter()
        .map(|e| TraceJson {
            rule: e.rule.to_string(),
            paper_ref: e.paper_ref.to_string(),
            before: StateJson {
                db: IntervalJson::of(e.before.db),
                d2: IntervalJson::of(e.before.d2),
            },
            after: StateJson {
                db: IntervalJson::of(e.after.db),
                d2: IntervalJson::of(e.after.d2),
            },
            asserted: e.asserted,
        })
        .collect()
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub left: String,
    pub right: String,
    pub mode: String,
    /// Band-Gordian distance interval (named `bu` in text for single knots).
    pub db: IntervalJson,
    /// H(2)-Gordian distance interval (named `u2` in text for single knots).
    pub d2: IntervalJson,
    pub single: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<String>,
    pub trace: Vec<TraceJson>,
}

pub fn bounds_report(left: &str, right: &str, mode: &str, state: &BoundState) -> BoundsReport {
    BoundsReport {
        left: left.to_string(),
        right: right.to_string(),
        mode: mode.to_string(),
        db: IntervalJson::of(state.db),
        d2: IntervalJson::of(state.d2),
        single: right == "U",
        contradiction: None,
        trace: trace_json(&state.trace),
    }
}

pub fn contradiction_report(
    left: &str,
    right: &str,
    mode: &str,
    c: &Contradiction,
) -> BoundsReport {
    BoundsReport {
        left: left.to_string(),
        right: right.to_string(),
        mode: mode.to_string(),
        db: IntervalJson::of(c.db),
        d2: IntervalJson::of(c.d2),
        single: right == "U",
        contradiction: Some(c.rule.to_string()),
        trace: trace_json(&c.trace),
    }
}

pub fn render_bounds(r: &BoundsReport) -> String {
    let mut out = if r.single {
        format!("{}  (mode: {})\n", r.left, r.mode)
    } else {
        format!("{} vs {}  (mode: {})\n", r.left, r.right, r.mode)
    };
    let (db_name, d2_name) = if r.single { ("bu", "u2") } else { ("db", "d2") };
    out.push_str(&format!("  {db_name}: {}\n", r.db.text()));
    out.push_str(&format!("  {d2_name}: {}\n", r.d2.text()));
    if let Some(rule) = &r.contradiction {
        out.push_str(&format!("  CONTRADICTION in rule {rule}\n"));
    }
    out.push_str("  trace:\n");
    for (i, e) in r.trace.iter().enumerate() {
        out.push_str(&format!(
            "    {:>2}. {}{:<22} {} x {} -> {} x {}   ({})\n",
            i + 1,
            if e.asserted { "*" } else { " " },
            e.rule,
            e.before.db.text(),
            e.before.d2.text(),
            e.after.db.text(),
            e.after.d2.text(),
            e.paper_ref,
        ));
    }
    if r.trace.is_empty() {
        out.push_str("    (no rule fired)\n");
    }
    out
}

#[derive(Serialize)]
pub struct TableRow {
    pub name: String,
    pub crossings: usize,
    pub determinant: u64,
    pub sigma: i64,
    pub v_omega: String,
    pub bu: IntervalJson,
    pub u2: IntervalJson,
    pub published_u: [u32; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published_u2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published_bu: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// `--check` verdict: absent when the row is not strictly checkable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
}

#[derive(Serialize)]
pub struct TableReport {
    pub mode: String,
    pub checked: bool,
    pub mismatches: usize,
    pub rows: Vec<TableRow>,
}

pub fn render_table(r: &TableReport) -> String {
    let mut out = format!(
        "{} knots (mode: {})\n{:<13} {:>3} {:>5} {:>4}  {:>9} {:>10} {:>10}  {}\n",
        r.rows.len(),
        r.mode,
        "name",
        "cr",
        "det",
        "sig",
        "v_omega",
        "bu",
        "u2",
        if r.checked { "check" } else { "" }
    );
    for row in &r.rows {
        out.push_str(&format!(
            "{:<13} {:>3} {:>5} {:>4}  {:>9} {:>10} {:>10}  {}\n",
            row.name,
            row.crossings,
            row.determinant,
            row.sigma,
            row.v_omega,
            row.bu.text(),
            row.u2.text(),
            row.check.as_deref().unwrap_or(""),
        ));
    }
    if r.checked {
        out.push_str(&format!("mismatches: {}\n", r.mismatches));
    }
    out
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct SuiteJson {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckJson>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteJson>,
    pub all_passed: bool,
}

pub fn render_verify(r: &VerifyReport) -> String {
    let mut out = String::new();
    for s in &r.suites {
        let mark = if s.failed == 0 { "ok" } else { "FAIL" };
        out.push_str(&format!(
            "{:<22} {mark:>4}  ({} checks, {} failed)\n",
            s.suite,
            s.passed + s.failed,
            s.failed
        ));
        for c in &s.checks {
            if !c.pass {
                out.push_str(&format!("    FAIL {}: {}\n", c.name, c.detail));
            }
        }
    }
    out.push_str(if r.all_passed {
        "all suites passed\n"
    } else {
        "FAILURES above\n"
    });
    out
}
