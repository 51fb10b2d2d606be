//! Interval deduction for band-move distances.
//!
//! A *problem* is a pair of links `(J, K)`; the engine maintains one interval
//! for the band-Gordian distance `bd(J, K)` and one for the H(2)-Gordian
//! distance `d2(J, K)`.  Single-knot questions are the special case where `K`
//! is the unknot, so the same intervals read as `bu(J)` and `u2(J)`.
//!
//! Every rule is a monotone interval refinement: lower bounds only rise,
//! upper bounds only fall, so iterating the fixed rule list terminates.  Each
//! state change is appended to a trace naming the rule, and the two distances
//! are kept jointly feasible after every step (a band surgery toggles the
//! component count, so `bd` and `d2` are locked in a parity relation).
//!
//! Two modes: `Derived` uses invariants and unknotting-number data only;
//! `Asserted` additionally admits published upper-bound certificates for
//! `u2`/`bu`, and marks every conclusion that used one.

use crate::algebra::{Cyclo12, GoldenClass};
use crate::invariants::{connected_sum_sets, invariants, InvariantError, InvariantSet};
use crate::notation::{KnotExpr, KnotTable, NotationError};

/// Internal stand-in for an absent upper bound.
const INF: u32 = u32::MAX;

/// Closed interval of nonnegative integers; `hi = None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl Interval {
    pub const UNBOUNDED: Interval = Interval { lo: 0, hi: None };

    pub fn exact(n: u32) -> Self {
        Interval { lo: n, hi: Some(n) }
    }

    pub fn new(lo: u32, hi: u32) -> Self {
        Interval { lo, hi: Some(hi) }
    }

    fn hi_or_inf(&self) -> u32 {
        self.hi.unwrap_or(INF)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi_or_inf()
    }

    pub fn contains(&self, n: u32) -> bool {
        self.lo <= n && n <= self.hi_or_inf()
    }

    pub fn is_exactly(&self, n: u32) -> bool {
        self.lo == n && self.hi == Some(n)
    }

    /// Raise the lower bound; report whether anything moved.
    fn raise_lo(&mut self, lo: u32) -> bool {
        if lo > self.lo {
            self.lo = lo;
            true
        } else {
            false
        }
    }

    /// Lower the upper bound; report whether anything moved.
    fn lower_hi(&mut self, hi: u32) -> bool {
        if hi < self.hi_or_inf() {
            self.hi = Some(hi);
            true
        } else {
            false
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.hi {
            Some(hi) if hi == self.lo => write!(f, "{}", self.lo),
            Some(hi) => write!(f, "[{}, {}]", self.lo, hi),
            None => write!(f, "[{}, ∞)", self.lo),
        }
    }
}

/// What is known about one connected summand of an operand.
#[derive(Debug, Clone)]
pub struct SummandFacts {
    pub label: String,
    pub inv: InvariantSet,
    /// Unknotting number as an interval, when tabulated.
    pub u: Option<[u32; 2]>,
    /// Published upper bound for `u2`, used only in `Asserted` mode.
    pub u2_cert: Option<u32>,
    /// Published upper bound for `bu`, used only in `Asserted` mode.
    pub bu_cert: Option<u32>,
}

/// One side of a deduction problem: a link given as a connected sum of
/// summands (a single summand for primes, none for the unknot), with the
/// combined invariant profile precomputed.
#[derive(Debug, Clone)]
pub struct OperandFacts {
    pub label: String,
    pub inv: InvariantSet,
    /// Unknotting data for the operand as a whole, when tabulated directly.
    pub u: Option<[u32; 2]>,
    pub u2_cert: Option<u32>,
    pub bu_cert: Option<u32>,
    pub summands: Vec<SummandFacts>,
    /// True only when the operand is literally the unknot; rules whose
    /// hypotheses name the unknot key off this, never off the profile.
    pub unknot: bool,
}

impl OperandFacts {
    /// The unknot operand.
    pub fn unknot() -> Self {
        let inv = crate::invariants::invariants(&crate::diagram::PlanarDiagram::unknot())
            .expect("unknot profile");
        OperandFacts {
            label: "0_1".into(),
            inv,
            u: Some([0, 0]),
            u2_cert: Some(0),
            bu_cert: Some(0),
            summands: Vec::new(),
            unknot: true,
        }
    }

    /// Assemble an operand from its summands, combining invariant profiles
    /// along the connected sum.  Empty input yields the unknot.
    pub fn from_summands(
        label: impl Into<String>,
        summands: Vec<SummandFacts>,
    ) -> Result<Self, InvariantError> {
        let mut base = Self::unknot();
        if summands.is_empty() {
            return Ok(base);
        }
        let mut inv = summands[0].inv.clone();
        for s in &summands[1..] {
            inv = connected_sum_sets(&inv, &s.inv)?;
        }
        base.label = label.into();
        base.inv = inv;
        base.u = None;
        base.u2_cert = None;
        base.bu_cert = None;
        base.summands = summands;
        base.unknot = false;
        Ok(base)
    }

    /// Best upper bound for the operand's unknotting number: tabulated value
    /// if present, else the sum over summands (crossing changes compose along
    /// a connected sum).
    fn u_hi(&self) -> Option<u32> {
        let direct = self.u.map(|[_, hi]| hi);
        let summed = self
            .summands
            .iter()
            .map(|s| s.u.map(|[_, hi]| hi))
            .collect::<Option<Vec<_>>>()
            .filter(|v| !v.is_empty())
            .map(|v| v.iter().sum());
        match (direct, summed) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Certified upper bound for `u2`, combining a whole-operand certificate
    /// with the sum of summand certificates (band moves compose the same
    /// way).  `Asserted` mode only.
    fn u2_cert_hi(&self) -> Option<u32> {
        if self.unknot {
            return Some(0);
        }
        combine_certs(self.u2_cert, self.summands.iter().map(|s| s.u2_cert))
    }

    fn bu_cert_hi(&self) -> Option<u32> {
        if self.unknot {
            return Some(0);
        }
        combine_certs(self.bu_cert, self.summands.iter().map(|s| s.bu_cert))
    }

    fn is_knot(&self) -> bool {
        self.inv.components == 1
    }
}

fn combine_certs(
    whole: Option<u32>,
    parts: impl Iterator<Item = Option<u32>>,
) -> Option<u32> {
    let mut summed: Option<u32> = Some(0);
    let mut any = false;
    for p in parts {
        any = true;
        summed = match (summed, p) {
            (Some(acc), Some(v)) => Some(acc + v),
            _ => None,
        };
    }
    let summed = if any { summed } else { None };
    match (whole, summed) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FactsError {
    #[error(transparent)]
    Notation(#[from] NotationError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// Assemble deduction facts for an expression: per-summand invariant
/// profiles, unknotting data from the table, and (for composite expressions
/// that are themselves table rows) whole-operand data under the expression's
/// printed name.  Family members `K[m]` carry `u = 1`: one crossing change
/// in the twist region undoes them.
pub fn facts_for_expr(expr: &KnotExpr, table: &KnotTable) -> Result<OperandFacts, FactsError> {
    if matches!(expr, KnotExpr::Unknot) {
        return Ok(OperandFacts::unknot());
    }
    let mut summands = Vec::new();
    for term in expr.summands() {
        let inv = invariants(&term.resolve(table)?)?;
        let mut facts = SummandFacts {
            label: term.to_string(),
            inv,
            u: None,
            u2_cert: None,
            bu_cert: None,
        };
        match term {
            KnotExpr::Named { name, .. } => {
                if let Some(entry) = table.get(name) {
                    facts.u = Some(entry.u);
                    facts.u2_cert = entry.u2;
                    facts.bu_cert = entry.bu;
                }
            }
            KnotExpr::Km(_) => facts.u = Some([1, 1]),
            KnotExpr::Unknot => facts.u = Some([0, 0]),
            _ => {}
        }
        summands.push(facts);
    }
    let label = expr.to_string();
    let mut operand = OperandFacts::from_summands(label.clone(), summands)?;
    if let Some(entry) = table.get(&label) {
        operand.u = Some(entry.u);
        operand.u2_cert = entry.u2;
        operand.bu_cert = entry.bu;
    }
    Ok(operand)
}

/// Which inputs the deduction may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Invariants and unknotting-number data only.
    Derived,
    /// Additionally use published `u2`/`bu` upper-bound certificates.
    Asserted,
}

/// A deduction problem over a pair of links.
#[derive(Debug, Clone)]
pub struct Problem {
    pub j: OperandFacts,
    pub k: OperandFacts,
    /// Known Gordian distance `d(J, K)` interval, if supplied.
    pub known_distance: Option<[u32; 2]>,
    pub mode: Mode,
}

impl Problem {
    /// Single-link problem: distances to the unknot.
    pub fn single(j: OperandFacts, mode: Mode) -> Self {
        Problem {
            j,
            k: OperandFacts::unknot(),
            known_distance: None,
            mode,
        }
    }
}

/// The two intervals at one instant, recorded in trace entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Snapshot {
    pub db: Interval,
    pub d2: Interval,
}

/// One state change: which rule fired and what it did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: &'static str,
    pub paper_ref: &'static str,
    pub before: Snapshot,
    pub after: Snapshot,
    pub asserted: bool,
}

/// Final (or, on contradiction, last consistent) deduction state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundState {
    /// Band-Gordian distance `bd(J, K)`; reads as `bu(J)` against the unknot.
    pub db: Interval,
    /// H(2)-Gordian distance `d2(J, K)`; reads as `u2(J)` against the unknot.
    pub d2: Interval,
    pub trace: Vec<TraceEntry>,
}

#[derive(Debug, thiserror::Error)]
#[error("bounds contradict after rule `{rule}`: bd {db}, d2 {d2}")]
pub struct Contradiction {
    pub rule: &'static str,
    pub db: Interval,
    pub d2: Interval,
    /// Trace up to and including the contradicting step.
    pub trace: Vec<TraceEntry>,
}

/// Slice-knot test from the Jones value at the sixth root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceVerdict {
    NotSlice,
    Inconclusive,
}

/// A slice knot never takes the value −1 at the sixth root of unity, so an
/// exact −1 obstructs sliceness; anything else decides nothing.
pub fn slice_obstruction(inv: &InvariantSet) -> SliceVerdict {
    if inv.v_omega == Cyclo12::from_int(-1) {
        SliceVerdict::NotSlice
    } else {
        SliceVerdict::Inconclusive
    }
}

struct Engine<'a> {
    p: &'a Problem,
    db: Interval,
    d2: Interval,
    trace: Vec<TraceEntry>,
}

/// Rule identifiers in firing order.  Deduction applies them round-robin
/// until a full pass changes nothing, so the trace is deterministic.
const RULE_ORDER: &[&str] = &[
    "nontrivial",
    "e2",
    "delta",
    "lambda",
    "moebius",
    "distance_two",
    "upper_from_u",
    "asserted_certificates",
    "signature_gap",
];

fn rule_ref(rule: &str) -> &'static str {
    match rule {
        "nontrivial" => "distinct invariant profiles",
        "e2" => "Hoste–Nakanishi–Taniyama homology jump",
        "delta" => "Lickorish–Millett sixth-root evaluation",
        "lambda" => "Jones–Rong golden evaluation of Q",
        "moebius" => "Yasuhara Möbius-band obstruction",
        "distance_two" => "Arf and signature conditions at Jones ratio 3",
        "upper_from_u" => "band pairs realizing crossing changes",
        "asserted_certificates" => "published band catalog",
        "signature_gap" => "signature steps by at most one per oriented band",
        "parity_closure" => "component count alternates along band surgeries",
        _ => unreachable!("unknown rule"),
    }
}

/// Run every rule to a fixpoint and return the final intervals with trace.
pub fn deduce(p: &Problem) -> Result<BoundState, Contradiction> {
    let mut eng = Engine {
        p,
        db: Interval::UNBOUNDED,
        d2: Interval::UNBOUNDED,
        trace: Vec::new(),
    };
    eng.run()?;
    Ok(BoundState {
        db: eng.db,
        d2: eng.d2,
        trace: eng.trace,
    })
}

impl Engine<'_> {
    fn run(&mut self) -> Result<(), Contradiction> {
        // Seed the parity relation once so even rule-free problems (unknot
        // against itself) settle into a feasible rectangle.
        self.close_parity("parity_closure")?;
        loop {
            let mut changed = false;
            for rule in RULE_ORDER {
                changed |= self.apply(rule)?;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            db: self.db,
            d2: self.d2,
        }
    }

    /// Apply one rule; on change, record it and re-close parity.
    fn apply(&mut self, rule: &'static str) -> Result<bool, Contradiction> {
        let before = self.snapshot();
        let asserted = rule == "asserted_certificates";
        let changed = match rule {
            "nontrivial" => self.rule_nontrivial(),
            "e2" => self.rule_e2(),
            "delta" => self.rule_delta(),
            "lambda" => self.rule_lambda(),
            "moebius" => self.rule_moebius(),
            "distance_two" => self.rule_distance_two(),
            "upper_from_u" => self.rule_upper_from_u(),
            "asserted_certificates" => self.rule_asserted(),
            "signature_gap" => self.rule_signature_gap(),
            _ => unreachable!("unknown rule"),
        };
        if !changed {
            return Ok(false);
        }
        self.trace.push(TraceEntry {
            rule,
            paper_ref: rule_ref(rule),
            before,
            after: self.snapshot(),
            asserted,
        });
        self.check(rule)?;
        self.close_parity(rule)?;
        Ok(true)
    }

    fn check(&self, rule: &'static str) -> Result<(), Contradiction> {
        if self.db.is_empty() || self.d2.is_empty() {
            return Err(Contradiction {
                rule,
                db: self.db,
                d2: self.d2,
                trace: self.trace.clone(),
            });
        }
        Ok(())
    }

    /// Distinguishable links are at positive distance.
    fn rule_nontrivial(&mut self) -> bool {
        if self.p.j.inv != self.p.k.inv {
            self.db.raise_lo(1)
        } else {
            false
        }
    }

    /// A band surgery moves the minimal generator count of the double
    /// branched cover's homology by at most one; an H(2)-move likewise.
    fn rule_e2(&mut self) -> bool {
        let ej = self.p.j.inv.h1_generators as u32;
        let ek = self.p.k.inv.h1_generators as u32;
        let gap = ej.abs_diff(ek);
        let mut changed = self.db.raise_lo(gap);
        if self.p.j.is_knot() && self.p.k.is_knot() {
            changed |= self.d2.raise_lo(gap);
        }
        changed
    }

    /// |V(·;ω)| moves by a factor of at most √3 per band surgery, so the
    /// mod-3 ranks bound the distance.
    fn rule_delta(&mut self) -> bool {
        let dj = self.p.j.inv.h1_rank_mod3;
        let dk = self.p.k.inv.h1_rank_mod3;
        self.db.raise_lo(dj.abs_diff(dk))
    }

    /// λ ratio ±√5^n: `bd ≥ |n|`, one better when the sign is −1.
    fn rule_lambda(&mut self) -> bool {
        let (sj, nj) = match self.p.j.inv.lambda_class {
            Some(GoldenClass::OfForm { sign, n }) => (sign, n as i64),
            _ => return false,
        };
        let (sk, nk) = match self.p.k.inv.lambda_class {
            Some(GoldenClass::OfForm { sign, n }) => (sign, n as i64),
            _ => return false,
        };
        let gap = nj.abs_diff(nk) as u32;
        let bound = if sj * sk < 0 { gap + 1 } else { gap };
        self.db.raise_lo(bound)
    }

    /// A knot one band surgery from the unknot bounds a Möbius band or an
    /// annulus, forcing σ − 4·Arf ≡ 0 or ±2 (mod 8).
    fn rule_moebius(&mut self) -> bool {
        let x = match (self.p.j.unknot, self.p.k.unknot) {
            (false, true) => &self.p.j,
            (true, false) => &self.p.k,
            _ => return false,
        };
        let arf = match (x.is_knot(), x.inv.arf) {
            (true, Some(a)) => a as i64,
            _ => return false,
        };
        let residue = (x.inv.signature - 4 * arf).rem_euclid(8);
        if matches!(residue, 0 | 2 | 6) {
            return false;
        }
        self.db.raise_lo(2)
    }

    /// Jones ratio exactly 3 at ω, with the matching signature/Arf case,
    /// puts two knots at H(2)-distance at least 3.
    fn rule_distance_two(&mut self) -> bool {
        let (j, k) = (&self.p.j, &self.p.k);
        if !j.is_knot() || !k.is_knot() {
            return false;
        }
        let three = Cyclo12::from_int(3);
        let ratio_three = j.inv.v_omega == k.inv.v_omega * three
            || k.inv.v_omega == j.inv.v_omega * three;
        if !ratio_three {
            return false;
        }
        let (Some(aj), Some(ak)) = (j.inv.arf, k.inv.arf) else {
            return false;
        };
        let sig_gap = (j.inv.signature - k.inv.signature).rem_euclid(8);
        let fires = (sig_gap == 0 && aj != ak) || (sig_gap == 4 && aj == ak);
        if fires {
            self.d2.raise_lo(3)
        } else {
            false
        }
    }

    /// Upper bounds from crossing-change data: a crossing change costs two
    /// band moves (via a Hopf band), so `bd ≤ d` for even Gordian distance
    /// `d`, `d + 1` for odd, and `d2 ≤ d + 1` always.  The distance itself
    /// is bounded by the supplied value or through the unknot.
    fn rule_upper_from_u(&mut self) -> bool {
        if !self.p.j.is_knot() || !self.p.k.is_knot() {
            return false;
        }
        let known = self.p.known_distance.map(|[_, hi]| hi);
        let through_unknot = match (self.p.j.u_hi(), self.p.k.u_hi()) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let d = match (known, through_unknot) {
            (Some(a), Some(b)) => a.min(b),
            (a, b) => match a.or(b) {
                Some(v) => v,
                None => return false,
            },
        };
        let mut changed = self.db.lower_hi(d + d % 2);
        changed |= self.d2.lower_hi(d + 1);
        changed
    }

    /// Published `u2`/`bu` upper bounds, composed along connected sums and
    /// across the pair through the unknot.  Only in `Asserted` mode.
    fn rule_asserted(&mut self) -> bool {
        if self.p.mode != Mode::Asserted {
            return false;
        }
        let mut changed = false;
        if let (Some(a), Some(b)) = (self.p.j.bu_cert_hi(), self.p.k.bu_cert_hi()) {
            changed |= self.db.lower_hi(a + b);
        }
        if self.p.j.is_knot() && self.p.k.is_knot() {
            if let (Some(a), Some(b)) = (self.p.j.u2_cert_hi(), self.p.k.u2_cert_hi()) {
                changed |= self.d2.lower_hi(a + b);
            }
        }
        changed
    }

    /// Two band moves through a link shift the signature by at most two, so
    /// knots with `d2 = 3` and a signature gap over 2 cannot be at band
    /// distance 2.  Fires only with `d2` pinned exactly.
    fn rule_signature_gap(&mut self) -> bool {
        if !self.d2.is_exactly(3) {
            return false;
        }
        if !self.p.j.is_knot() || !self.p.k.is_knot() {
            return false;
        }
        let gap = (self.p.j.inv.signature - self.p.k.inv.signature).unsigned_abs();
        if gap > 2 {
            self.db.raise_lo(3)
        } else {
            false
        }
    }

    /// Restore joint feasibility: `bd = d2` or `d2 − 1`, an odd `bd` forces
    /// equality, and the distances vanish together.  The feasible pairs are
    /// therefore `(b, b)` and `(b, b+1)` for even `b ≥ 2`.
    fn close_parity(&mut self, cause: &'static str) -> Result<(), Contradiction> {
        let before = self.snapshot();
        let feasible_b = |b: u32| -> bool {
            self.d2.contains(b) || (b >= 2 && b % 2 == 0 && b < INF && self.d2.contains(b + 1))
        };
        let feasible_h = |h: u32| -> bool {
            self.db.contains(h) || (h >= 3 && (h - 1) % 2 == 0 && self.db.contains(h - 1))
        };

        // Any feasible b sits within one step of the d2 interval, so a short
        // scan from each end finds the tight bounds (or none).
        let mut db = self.db;
        let start = self.db.lo.max(self.d2.lo.saturating_sub(1));
        db.lo = (start..start.saturating_add(3))
            .find(|&b| feasible_b(b))
            .unwrap_or(INF);
        let b_cap = self.db.hi_or_inf().min(self.d2.hi_or_inf());
        if b_cap < INF {
            let floor = b_cap.saturating_sub(3);
            db.hi = (floor..=b_cap).rev().find(|&b| feasible_b(b));
            if db.hi.is_none() {
                db.lo = INF; // empty: no feasible value at all
            }
        }

        let mut d2 = self.d2;
        let start = self.d2.lo.max(self.db.lo);
        d2.lo = (start..start.saturating_add(3))
            .find(|&h| feasible_h(h))
            .unwrap_or(INF);
        let h_cap = self
            .d2
            .hi_or_inf()
            .min(self.db.hi_or_inf().saturating_add(1));
        if h_cap < INF {
            let floor = h_cap.saturating_sub(3);
            d2.hi = (floor..=h_cap).rev().find(|&h| feasible_h(h));
            if d2.hi.is_none() {
                d2.lo = INF;
            }
        }

        if db == self.db && d2 == self.d2 {
            return Ok(());
        }
        self.db = db;
        self.d2 = d2;
        let empty = db.is_empty() || d2.is_empty() || db.lo == INF || d2.lo == INF;
        self.trace.push(TraceEntry {
            rule: "parity_closure",
            paper_ref: rule_ref("parity_closure"),
            before,
            after: self.snapshot(),
            asserted: false,
        });
        if empty {
            return Err(Contradiction {
                rule: cause,
                db: self.db,
                d2: self.d2,
                trace: self.trace.clone(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testpd;
    use crate::invariants::invariants;

    fn knot_facts(label: &str, d: &crate::diagram::PlanarDiagram, u: Option<[u32; 2]>) -> OperandFacts {
        let inv = invariants(d).unwrap();
        OperandFacts::from_summands(
            label,
            vec![SummandFacts {
                label: label.into(),
                inv,
                u,
                u2_cert: None,
                bu_cert: None,
            }],
        )
        .unwrap()
    }

    #[test]
    fn unknot_against_itself_is_zero() {
        let p = Problem::single(OperandFacts::unknot(), Mode::Derived);
        let s = deduce(&p).unwrap();
        assert_eq!(s.db, Interval::exact(0));
        assert_eq!(s.d2, Interval::exact(0));
    }

    #[test]
    fn trefoil_with_unknotting_data() {
        let p = Problem::single(
            knot_facts("3_1", &testpd::trefoil(), Some([1, 1])),
            Mode::Derived,
        );
        let s = deduce(&p).unwrap();
        // λ(3_1) = −1 raises the floor to 1; u = 1 caps bd at 2 and d2 at 2.
        assert_eq!(s.db, Interval::new(1, 2));
        assert_eq!(s.d2, Interval::new(1, 2));
    }

    #[test]
    fn figure_eight_floor_comes_from_lambda_sign() {
        let p = Problem::single(
            knot_facts("4_1", &testpd::figure_eight(), Some([1, 1])),
            Mode::Derived,
        );
        let s = deduce(&p).unwrap();
        // λ(4_1) = −√5: ratio −√5^1 against the unknot gives bd ≥ 2.
        assert_eq!(s.db, Interval::exact(2));
        assert!(s.trace.iter().any(|t| t.rule == "lambda"));
        assert_eq!(s.d2, Interval::exact(2));
    }

    #[test]
    fn asserted_certificates_are_marked_and_mode_gated() {
        let mut facts = knot_facts("3_1", &testpd::trefoil(), Some([1, 1]));
        facts.summands[0].u2_cert = Some(1);
        facts.summands[0].bu_cert = Some(1);
        let derived = deduce(&Problem::single(facts.clone(), Mode::Derived)).unwrap();
        assert!(derived.trace.iter().all(|t| !t.asserted));
        assert_eq!(derived.db, Interval::new(1, 2));

        let asserted = deduce(&Problem::single(facts, Mode::Asserted)).unwrap();
        assert_eq!(asserted.db, Interval::exact(1));
        assert_eq!(asserted.d2, Interval::exact(1));
        assert!(asserted
            .trace
            .iter()
            .any(|t| t.rule == "asserted_certificates" && t.asserted));
    }

    #[test]
    fn granny_pair_floor_from_homology() {
        let granny = testpd::trefoil().connected_sum(&testpd::trefoil());
        let p = Problem {
            j: knot_facts("granny", &granny, None),
            k: OperandFacts::unknot(),
            known_distance: None,
            mode: Mode::Derived,
        };
        let s = deduce(&p).unwrap();
        assert_eq!(s.db.lo, 2);
        assert_eq!(s.db.hi, None); // no unknotting data supplied
        assert!(s.trace.iter().any(|t| t.rule == "e2"));
    }

    #[test]
    fn known_distance_caps_the_pair() {
        let p = Problem {
            j: knot_facts("3_1", &testpd::trefoil(), None),
            k: knot_facts("4_1", &testpd::figure_eight(), None),
            known_distance: Some([2, 2]),
            mode: Mode::Derived,
        };
        let s = deduce(&p).unwrap();
        assert_eq!(s.db.hi, Some(2));
        assert_eq!(s.d2.hi, Some(3));
    }

    #[test]
    fn parity_rectangle_examples() {
        // db pinned even, d2 open above: d2 closes to [b, b+1].
        let mut eng = Engine {
            p: &Problem::single(OperandFacts::unknot(), Mode::Derived),
            db: Interval::exact(2),
            d2: Interval { lo: 3, hi: None },
            trace: Vec::new(),
        };
        eng.close_parity("test").unwrap();
        assert_eq!(eng.d2, Interval::exact(3));

        // Odd db forces equality.
        let mut eng = Engine {
            p: &Problem::single(OperandFacts::unknot(), Mode::Derived),
            db: Interval::exact(3),
            d2: Interval::UNBOUNDED,
            trace: Vec::new(),
        };
        eng.close_parity("test").unwrap();
        assert_eq!(eng.d2, Interval::exact(3));

        // d2 = 1 pins db = 1.
        let mut eng = Engine {
            p: &Problem::single(OperandFacts::unknot(), Mode::Derived),
            db: Interval::UNBOUNDED,
            d2: Interval::exact(1),
            trace: Vec::new(),
        };
        eng.close_parity("test").unwrap();
        assert_eq!(eng.db, Interval::exact(1));

        // Infeasible rectangle: db = 1 with d2 = 2 has no feasible pair.
        let mut eng = Engine {
            p: &Problem::single(OperandFacts::unknot(), Mode::Derived),
            db: Interval::exact(1),
            d2: Interval::exact(2),
            trace: Vec::new(),
        };
        assert!(eng.close_parity("test").is_err());
    }

    #[test]
    fn contradictory_certificate_surfaces_with_trace() {
        // A certificate claiming u2 = 1 for the granny knot contradicts the
        // homology floor of 2.
        let granny = testpd::trefoil().connected_sum(&testpd::trefoil());
        let mut facts = knot_facts("granny", &granny, Some([2, 2]));
        facts.summands[0].u2_cert = Some(1);
        facts.summands[0].bu_cert = Some(1);
        let err = deduce(&Problem::single(facts, Mode::Asserted)).unwrap_err();
        assert!(!err.trace.is_empty());
    }

    #[test]
    fn traces_are_deterministic_and_contiguous() {
        let p = Problem::single(
            knot_facts("4_1", &testpd::figure_eight(), Some([1, 1])),
            Mode::Derived,
        );
        let a = deduce(&p).unwrap();
        let b = deduce(&p).unwrap();
        assert_eq!(a, b);
        for w in a.trace.windows(2) {
            assert_eq!(w[0].after, w[1].before);
        }
        let last = a.trace.last().unwrap();
        assert_eq!((last.after.db, last.after.d2), (a.db, a.d2));
    }

    #[test]
    fn slice_verdicts() {
        let unknot = invariants(&crate::diagram::PlanarDiagram::unknot()).unwrap();
        assert_eq!(slice_obstruction(&unknot), SliceVerdict::Inconclusive);
        let trefoil = invariants(&testpd::trefoil()).unwrap();
        // V(3_1;ω) = −i√3 ≠ −1.
        assert_eq!(slice_obstruction(&trefoil), SliceVerdict::Inconclusive);
    }
}
