mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use knotband_core::bounds::{deduce, facts_for_expr, Interval, Mode, Problem};
use knotband_core::invariants::invariants;
use knotband_core::notation::{load_knot_table, parse_expr, KnotTable};
use knotband_core::par;
use knotband_core::verify;

use report::{
    bounds_report, contradiction_report, invariant_report, render_bounds, render_invariants,
    render_table, render_verify, CheckJson, IntervalJson, SuiteJson, TableReport, TableRow,
    VerifyReport,
};

/// Knot invariants and certified band-surgery bounds from planar diagrams.
#[derive(Parser)]
#[command(name = "knotband", version, about)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant profile of a knot or link expression.
    Invariants {
        /// Expression: a table name (`3_1`, `8_19!`), `U`, `K[m]`, `hopf`,
        /// a PD literal, or a connected sum joined with `#`.
        expr: String,
    },
    /// Deduce band-surgery bounds for one expression or a `J vs K` pair.
    Bounds {
        /// Single expression, or two expressions joined by ` vs `.
        expr: String,
        /// Which inputs the deduction may use.
        #[arg(long, value_parser = ["derived", "asserted"], default_value = "derived")]
        mode: String,
        /// Known Gordian distance `d(J, K)`, as `d` or `lo..hi`.
        #[arg(long)]
        known_distance: Option<String>,
    },
    /// Recompute the bundled table and print one row per knot.
    Table {
        /// Keep only rows with at most this many crossings.
        #[arg(long)]
        max_crossings: Option<usize>,
        /// Compare deduced intervals against published values; exit 4 on
        /// any mismatch outside the flagged ambiguous rows.
        #[arg(long)]
        check: bool,
        /// Which inputs the deduction may use.
        #[arg(long, value_parser = ["derived", "asserted"], default_value = "asserted")]
        mode: String,
    },
    /// Replay the published computations and report pass/fail per check.
    VerifyPaper {
        /// Run a single suite instead of all of them.
        #[arg(long)]
        suite: Option<String>,
        /// Parameter range `lo..hi` for family suites.
        #[arg(long)]
        range: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_table() -> Result<KnotTable, String> {
    match std::env::var("KNOTBAND_DATA") {
        Ok(path) => load_knot_table(&path).map_err(|e| e.to_string()),
        Err(_) => KnotTable::parse(include_str!("../../../data/knot_table.jsonl"))
            .map_err(|e| format!("bundled table: {e}")),
    }
}

fn parse_mode(mode: &str) -> Mode {
    match mode {
        "asserted" => Mode::Asserted,
        _ => Mode::Derived,
    }
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("range `{text}` is not of the form lo..hi"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_known_distance(text: &str) -> Result<[u32; 2], String> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| format!("bad distance `{text}`"))?;
        let hi: u32 = hi.trim().parse().map_err(|_| format!("bad distance `{text}`"))?;
        if lo > hi {
            return Err(format!("empty distance interval {lo}..{hi}"));
        }
        Ok([lo, hi])
    } else {
        let d: u32 = text.trim().parse().map_err(|_| format!("bad distance `{text}`"))?;
        Ok([d, d])
    }
}

fn emit<T: serde::Serialize>(json: bool, value: &T, text: String) -> Result<(), String> {
    if json {
        let s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        println!("{s}");
    } else {
        print!("{text}");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Invariants { expr } => cmd_invariants(cli.json, expr),
        Command::Bounds {
            expr,
            mode,
            known_distance,
        } => cmd_bounds(cli.json, expr, mode, known_distance.as_deref()),
        Command::Table {
            max_crossings,
            check,
            mode,
        } => cmd_table(cli.json, *max_crossings, *check, mode),
        Command::VerifyPaper { suite, range } => {
            cmd_verify(cli.json, suite.as_deref(), range.as_deref())
        }
    }
}

fn cmd_invariants(json: bool, expr_text: &str) -> Result<ExitCode, String> {
    let table = load_table()?;
    let expr = parse_expr(expr_text).map_err(|e| e.to_string())?;
    let diagram = expr.resolve(&table).map_err(|e| e.to_string())?;
    let inv = invariants(&diagram).map_err(|e| e.to_string())?;
    let rep = invariant_report(&expr.to_string(), &diagram, &inv);
    emit(json, &rep, render_invariants(&rep))?;
    Ok(if rep.checks.values().all(|ok| *ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    })
}

fn cmd_bounds(
    json: bool,
    expr_text: &str,
    mode_text: &str,
    known_distance: Option<&str>,
) -> Result<ExitCode, String> {
    let table = load_table()?;
    let mode = parse_mode(mode_text);
    let (left_text, right_text) = match expr_text.split_once(" vs ") {
        Some((l, r)) => (l.trim(), Some(r.trim())),
        None => (expr_text.trim(), None),
    };
    let left_expr = parse_expr(left_text).map_err(|e| e.to_string())?;
    let j = facts_for_expr(&left_expr, &table).map_err(|e| e.to_string())?;
    let mut problem = match right_text {
        None => Problem::single(j, mode),
        Some(r) => {
            let right_expr = parse_expr(r).map_err(|e| e.to_string())?;
            let k = facts_for_expr(&right_expr, &table).map_err(|e| e.to_string())?;
            Problem {
                j,
                k,
                known_distance: None,
                mode,
            }
        }
    };
    if let Some(text) = known_distance {
        problem.known_distance = Some(parse_known_distance(text)?);
    }
    let left_name = left_expr.to_string();
    let right_name = right_text.map_or_else(|| "U".to_string(), |r| {
        parse_expr(r).map(|e| e.to_string()).unwrap_or_else(|_| r.to_string())
    });
    match deduce(&problem) {
        Ok(state) => {
            let rep = bounds_report(&left_name, &right_name, mode_text, &state);
            emit(json, &rep, render_bounds(&rep))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(c) => {
            let rep = contradiction_report(&left_name, &right_name, mode_text, &c);
            emit(json, &rep, render_bounds(&rep))?;
            Ok(ExitCode::from(3))
        }
    }
}

fn cmd_table(
    json: bool,
    max_crossings: Option<usize>,
    check: bool,
    mode_text: &str,
) -> Result<ExitCode, String> {
    let table = load_table()?;
    let mode = parse_mode(mode_text);
    let mut names: Vec<String> = table
        .entries()
        .iter()
        .filter(|e| e.name != "0_1")
        .map(|e| e.name.clone())
        .collect();
    names.sort();
    let rows: Vec<Result<TableRow, String>> = par::map_vec(&names, |name| {
        table_row(&table, name, mode, check)
    });
    let mut out_rows = Vec::new();
    for row in rows {
        out_rows.push(row?);
    }
    if let Some(cap) = max_crossings {
        out_rows.retain(|r| r.crossings <= cap);
    }
    let mismatches = out_rows
        .iter()
        .filter(|r| r.check.as_deref() == Some("MISMATCH"))
        .count();
    let rep = TableReport {
        mode: mode_text.to_string(),
        checked: check,
        mismatches,
        rows: out_rows,
    };
    emit(json, &rep, render_table(&rep))?;
    Ok(if check && mismatches > 0 {
        ExitCode::from(4)
    } else {
        ExitCode::SUCCESS
    })
}

fn table_row(
    table: &KnotTable,
    name: &str,
    mode: Mode,
    check: bool,
) -> Result<TableRow, String> {
    let entry = table.get(name).expect("name came from the table");
    let expr = parse_expr(name).map_err(|e| format!("{name}: {e}"))?;
    let diagram = expr.resolve(table).map_err(|e| format!("{name}: {e}"))?;
    let facts = facts_for_expr(&expr, table).map_err(|e| format!("{name}: {e}"))?;
    let inv = facts.inv.clone();
    let state = deduce(&Problem::single(facts, mode)).map_err(|e| format!("{name}: {e}"))?;
    let strict = entry.note.as_deref() == Some("Table 2");
    let verdict = if !check {
        None
    } else if !strict {
        Some("skipped".to_string())
    } else {
        let bu_ok = match (mode, entry.bu) {
            (Mode::Asserted, Some(v)) => state.db.is_exactly(v),
            (Mode::Derived, Some(v)) => state.db.contains(v),
            (_, None) => true,
        };
        let u2_ok = match (mode, entry.u2) {
            (Mode::Asserted, Some(v)) => state.d2.is_exactly(v),
            (Mode::Derived, Some(v)) => state.d2.contains(v),
            (_, None) => true,
        };
        Some(if bu_ok && u2_ok { "ok" } else { "MISMATCH" }.to_string())
    };
    Ok(TableRow {
        name: name.to_string(),
        crossings: diagram.crossing_count(),
        determinant: inv.determinant,
        sigma: inv.signature,
        v_omega: report::omega_string(inv.omega_class, inv.components),
        bu: IntervalJson::of(state.db),
        u2: IntervalJson::of(state.d2),
        published_u: entry.u,
        published_u2: entry.u2,
        published_bu: entry.bu,
        note: entry.note.clone(),
        check: verdict,
    })
}

fn cmd_verify(
    json: bool,
    suite: Option<&str>,
    range: Option<&str>,
) -> Result<ExitCode, String> {
    let range = range.map(parse_range).transpose()?;
    let names: Vec<&str> = match suite {
        Some(s) => {
            if !verify::SUITES.contains(&s) {
                return Err(format!(
                    "unknown suite `{s}`; available: {}",
                    verify::SUITES.join(", ")
                ));
            }
            vec![verify::SUITES[verify::SUITES.iter().position(|x| *x == s).unwrap()]]
        }
        None => verify::SUITES.to_vec(),
    };
    let table = load_table()?;
    let suites: Vec<Result<SuiteJson, String>> = par::map_vec(&names, |name| {
        let s = verify::run_suite(name, &table, range).map_err(|e| e.to_string())?;
        Ok(SuiteJson {
            suite: s.name.to_string(),
            passed: s.checks.iter().filter(|c| c.pass).count(),
            failed: s.checks.iter().filter(|c| !c.pass).count(),
            checks: s
                .checks
                .into_iter()
                .map(|c| CheckJson {
                    name: c.name,
                    pass: c.pass,
                    detail: c.detail,
                })
                .collect(),
        })
    });
    let mut out = Vec::new();
    for s in suites {
        out.push(s?);
    }
    let all_passed = out.iter().all(|s| s.failed == 0);
    let rep = VerifyReport {
        suites: out,
        all_passed,
    };
    emit(json, &rep, render_verify(&rep))?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    })
}
