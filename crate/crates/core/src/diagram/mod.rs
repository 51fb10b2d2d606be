//! Planar diagrams of knots and links, encoded as PD codes.
//!
//! A crossing stores the four arc labels around it, listed counterclockwise
//! starting from the *incoming under-strand*. Slots 0 and 2 therefore carry
//! the under-strand, slots 1 and 3 the over-strand, and a strand entering a
//! crossing at slot `s` leaves it at slot `(s + 2) % 4`. Free unknotted
//! loops (circles with no crossings) are tracked by a separate counter since
//! they have no arcs to speak of; `PD[]` is the 1-loop unknot.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

mod canonical;
mod faces;
mod moves;

pub use faces::{Checkerboard, Faces};
pub use moves::SimplifyTrace;

/// Arc label in a PD code. Labels are arbitrary (need not be contiguous);
/// each must occur exactly twice across all crossing slots.
pub type Arc = u32;

/// A dart is one of the four arc-ends incident to a crossing.
pub type Dart = (usize, usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arc {0} occurs {1} time(s); every arc must occur exactly twice")]
    BadArcDegree(Arc, usize),
    #[error("a diagram needs at least one crossing or one closed loop")]
    Empty,
    #[error("operation requires a connected diagram")]
    Disconnected,
    #[error("operation requires a diagram with at least one crossing")]
    NoCrossings,
    #[error("diagram is not planar (Euler characteristic {0})")]
    NonPlanar(i64),
}

/// One crossing: arc labels counterclockwise from the incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing(pub [Arc; 4]);

/// Which of the two smoothings to apply at a crossing.
///
/// `A` joins the quadrant pairs (0,1) and (2,3); `B` joins (1,2) and (3,0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    A,
    B,
}

/// Canonical orientation data for a diagram: which darts are strand entry
/// points, the resulting crossing signs, and the strand count.
///
/// Each component is oriented by the rule: find its lowest arc label, take
/// that arc's first occurrence in slot-scan order, and direct the component
/// so the arc points *into* that dart.
#[derive(Debug, Clone)]
pub struct OrientationData {
    /// `entries[c][s]` is true when some strand enters crossing `c` at slot `s`.
    pub entries: Vec<[bool; 4]>,
    /// Sign of each crossing under the canonical orientation.
    pub signs: Vec<i8>,
    /// Number of strand components passing through crossings (free loops not
    /// included).
    pub strand_components: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: u32,
}

impl std::fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PD[")?;
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "X({},{},{},{})", c.0[0], c.0[1], c.0[2], c.0[3])?;
        }
        write!(f, "]")?;
        if self.free_loops > 0 {
            write!(f, "+{}O", self.free_loops)?;
        }
        Ok(())
    }
}

impl PlanarDiagram {
    /// Build a diagram from raw crossing tuples, validating arc degrees.
    pub fn new(crossings: Vec<[Arc; 4]>, free_loops: u32) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let mut degree: BTreeMap<Arc, usize> = BTreeMap::new();
        for c in &crossings {
            for &a in c {
                *degree.entry(a).or_insert(0) += 1;
            }
        }
        for (a, d) in degree {
            if d != 2 {
                return Err(DiagramError::BadArcDegree(a, d));
            }
        }
        Ok(PlanarDiagram {
            crossings: crossings.into_iter().map(Crossing).collect(),
            free_loops,
        })
    }

    /// The 0-crossing unknot diagram `PD[]`.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            free_loops: 1,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    /// All arc labels in ascending order.
    pub fn arc_labels(&self) -> BTreeSet<Arc> {
        self.crossings
            .iter()
            .flat_map(|c| c.0.iter().copied())
            .collect()
    }

    /// Both occurrences of every arc, in slot-scan order.
    pub fn arc_occurrences(&self) -> BTreeMap<Arc, Vec<Dart>> {
        let mut occ: BTreeMap<Arc, Vec<Dart>> = BTreeMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &a) in c.0.iter().enumerate() {
                occ.entry(a).or_default().push((ci, si));
            }
        }
        occ
    }

    /// The dart on the other end of the arc at `d`.
    pub fn arc_partner(&self, occ: &BTreeMap<Arc, Vec<Dart>>, d: Dart) -> Dart {
        let a = self.crossings[d.0].0[d.1];
        let pair = &occ[&a];
        if pair[0] == d {
            pair[1]
        } else {
            pair[0]
        }
    }

    /// Trace every strand once, fixing the canonical orientation.
    pub fn orientation(&self) -> OrientationData {
        let occ = self.arc_occurrences();
        let n = self.crossings.len();
        let mut entries = vec![[false; 4]; n];
        let mut seen_arc: BTreeSet<Arc> = BTreeSet::new();
        let mut strands = 0;

        for (&arc, darts) in &occ {
            if seen_arc.contains(&arc) {
                continue;
            }
            strands += 1;
            // Orient so this arc points into its first-listed occurrence.
            let start = darts[0];
            let mut cur = start;
            loop {
                let (c, s) = cur;
                entries[c][s] = true;
                let exit = (c, (s + 2) % 4);
                let out_arc = self.crossings[c].0[exit.1];
                seen_arc.insert(out_arc);
                cur = self.arc_partner(&occ, exit);
                if cur == start {
                    break;
                }
            }
        }

        let mut signs = Vec::with_capacity(n);
        for (c, e) in entries.iter().enumerate() {
            let under_in = if e[0] { 0 } else { 2 };
            let over_in = if e[1] { 1 } else { 3 };
            debug_assert!(
                e[under_in] && e[over_in] && !e[(under_in + 2) % 4] && !e[(over_in + 2) % 4],
                "crossing {c} must be entered once per strand"
            );
            let positive = (under_in == 0 && over_in == 3) || (under_in == 2 && over_in == 1);
            signs.push(if positive { 1 } else { -1 });
        }

        OrientationData {
            entries,
            signs,
            strand_components: strands,
        }
    }

    /// Writhe under the canonical orientation.
    pub fn writhe(&self) -> i64 {
        self.orientation().signs.iter().map(|&s| s as i64).sum()
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.orientation().strand_components + self.free_loops as usize
    }

    /// Replace crossing `idx` by one of its two smoothings.
    ///
    /// Welding a quadrant pair merges the two arc labels; if they already
    /// coincide, the strand closes into a free loop.
    pub fn smooth(&self, idx: usize, sm: Smoothing) -> Self {
        let mut crossings = self.crossings.clone();
        let mut free_loops = self.free_loops;
        let mut cr = crossings.remove(idx).0;
        let pairs: [(usize, usize); 2] = match sm {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(1, 2), (3, 0)],
        };
        for (x, y) in pairs {
            let a = cr[x];
            let b = cr[y];
            if a == b {
                free_loops += 1;
            } else {
                let keep = a.min(b);
                let drop = a.max(b);
                for c in crossings.iter_mut() {
                    for s in c.0.iter_mut() {
                        if *s == drop {
                            *s = keep;
                        }
                    }
                }
                for s in cr.iter_mut() {
                    if *s == drop {
                        *s = keep;
                    }
                }
            }
        }
        PlanarDiagram {
            crossings,
            free_loops,
        }
    }

    /// Exchange over- and under-strand at crossing `idx`.
    pub fn switch_crossing(&self, idx: usize) -> Self {
        let mut crossings = self.crossings.clone();
        let [a, b, c, d] = crossings[idx].0;
        crossings[idx] = Crossing([b, c, d, a]);
        PlanarDiagram {
            crossings,
            free_loops: self.free_loops,
        }
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|cr| {
                let [a, b, c, d] = cr.0;
                Crossing([b, c, d, a])
            })
            .collect();
        PlanarDiagram {
            crossings,
            free_loops: self.free_loops,
        }
    }

    /// Connected sum, splicing the lowest-numbered arc of each operand.
    ///
    /// Directions are fixed by the canonical orientation of each side so the
    /// joint diagram inherits a coherent rotation system (the result of
    /// summing two planar diagrams stays planar).
    pub fn connected_sum(&self, other: &Self) -> Self {
        if self.crossings.is_empty() {
            let mut out = other.clone();
            out.free_loops += self.free_loops - 1;
            return out;
        }
        if other.crossings.is_empty() {
            let mut out = self.clone();
            out.free_loops += other.free_loops - 1;
            return out;
        }

        let off = self.arc_labels().iter().max().unwrap() + 1;
        let left_or = self.orientation();
        let right_or = other.orientation();

        // Directed ends of the splice arcs: `in` is the occurrence the strand
        // enters, `out` the one it leaves from.
        let pick_ends = |d: &PlanarDiagram, o: &OrientationData| -> (Arc, Dart, Dart) {
            let occ = d.arc_occurrences();
            let (&arc, darts) = occ.iter().next().unwrap();
            let (i, j) = (darts[0], darts[1]);
            if o.entries[i.0][i.1] {
                (arc, i, j)
            } else {
                (arc, j, i)
            }
        };
        let (a1, v_in, _u_out) = pick_ends(self, &left_or);
        let (a2, y_in, _x_out) = pick_ends(other, &right_or);
        let a2 = a2 + off;
        let y_in_slot = y_in;

        let mut crossings = self.crossings.clone();
        // Cut arc a1 at its incoming end; the strand will detour through the
        // other operand and come back on a relabeled arc.
        crossings[v_in.0].0[v_in.1] = a2;
        let base = crossings.len();
        for cr in &other.crossings {
            let mut t = cr.0;
            for s in t.iter_mut() {
                *s += off;
            }
            crossings.push(Crossing(t));
        }
        crossings[base + y_in_slot.0].0[y_in_slot.1] = a1;

        PlanarDiagram {
            crossings,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    /// True when every crossing is reachable from every other and no free
    /// loop floats beside them.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops == 1;
        }
        self.free_loops == 0 && self.crossing_components().1 == 1
    }

    /// Union-find of crossings glued by shared arcs: (representatives, count).
    fn crossing_components(&self) -> (Vec<usize>, usize) {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (_, darts) in self.arc_occurrences() {
            let r0 = find(&mut parent, darts[0].0);
            let r1 = find(&mut parent, darts[1].0);
            if r0 != r1 {
                parent[r0.max(r1)] = r0.min(r1);
            }
        }
        let mut reps: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        let count = {
            let mut r = reps.clone();
            r.sort_unstable();
            r.dedup();
            r.len()
        };
        (std::mem::take(&mut reps), count)
    }

    /// Split into connected pieces: one diagram per crossing-connected block
    /// (original crossing order and labels kept), then one `PD[]` per free
    /// loop.
    pub fn connected_pieces(&self) -> Vec<PlanarDiagram> {
        let mut out = Vec::new();
        if !self.crossings.is_empty() {
            let (reps, _) = self.crossing_components();
            let mut order: Vec<usize> = Vec::new();
            for &r in &reps {
                if !order.contains(&r) {
                    order.push(r);
                }
            }
            for r in order {
                let crossings: Vec<Crossing> = self
                    .crossings
                    .iter()
                    .zip(&reps)
                    .filter(|(_, &rep)| rep == r)
                    .map(|(c, _)| *c)
                    .collect();
                out.push(PlanarDiagram {
                    crossings,
                    free_loops: 0,
                });
            }
        }
        for _ in 0..self.free_loops {
            out.push(PlanarDiagram::unknot());
        }
        out
    }

    /// Stable identifier: equal exactly for diagrams that differ by arc
    /// relabeling, crossing reordering, or cyclic/rotational re-encoding of
    /// the same planar shape. See [`canonical::canonical_code`].
    pub fn canonical_code(&self) -> Vec<u32> {
        canonical::canonical_code(self)
    }

    /// Complementary regions of the diagram. Errors on split or 0-crossing
    /// input.
    pub fn faces(&self) -> Result<Faces, DiagramError> {
        faces::faces(self)
    }

    /// Checkerboard 2-coloring of the faces.
    pub fn checkerboard(&self) -> Result<Checkerboard, DiagramError> {
        faces::checkerboard(self)
    }

    /// Remove all reducing kinks and bigons (Reidemeister I/II).
    pub fn simplify(&self) -> PlanarDiagram {
        moves::simplify(self)
    }

    /// Like [`simplify`](Self::simplify) but also returns the bracket factor
    /// the removed kinks contributed.
    pub fn simplify_tracked(&self) -> SimplifyTrace {
        moves::simplify_tracked(self)
    }
}

#[cfg(test)]
pub(crate) mod testpd {
    use super::PlanarDiagram;

    pub fn trefoil() -> PlanarDiagram {
        PlanarDiagram::new(
            vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
            0,
        )
        .unwrap()
    }

    pub fn figure_eight() -> PlanarDiagram {
        PlanarDiagram::new(
            vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
            0,
        )
        .unwrap()
    }

    pub fn hopf() -> PlanarDiagram {
        PlanarDiagram::new(vec![[1, 3, 2, 4], [4, 2, 3, 1]], 0).unwrap()
    }

    pub fn positive_kink() -> PlanarDiagram {
        PlanarDiagram::new(vec![[1, 1, 2, 2]], 0).unwrap()
    }
}
