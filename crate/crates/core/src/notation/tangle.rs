//! Diagram builders: rational tangles, Montesinos sums, and braid closures.
//!
//! A tangle is a diagram fragment with four loose ends (NW, NE, SW, SE).
//! Twisting appends crossings on the east or south side, `sum` glues two
//! tangles side by side, and the numerator closure joins NW-NE and SW-SE to
//! produce a closed diagram.  Rational tangles are built from the odd-length
//! continued-fraction expansion of their fraction, applied last-digit-first so
//! the construction always starts and ends with horizontal twists.

use super::NotationError;
use crate::diagram::PlanarDiagram;

#[derive(Debug, Clone)]
pub struct Tangle {
    crossings: Vec<[u32; 4]>,
    /// Loose-end arc labels, in the order NW, NE, SW, SE.
    ends: [u32; 4],
    next: u32,
    free_loops: u32,
}

impl Tangle {
    /// Two horizontal strands: NW-NE above, SW-SE below.
    pub fn zero() -> Self {
        Tangle { crossings: Vec::new(), ends: [1, 1, 2, 2], next: 3, free_loops: 0 }
    }

    /// Two vertical strands: NW-SW on the left, NE-SE on the right.
    pub fn infinity() -> Self {
        Tangle { crossings: Vec::new(), ends: [1, 2, 1, 2], next: 3, free_loops: 0 }
    }

    fn fresh(&mut self) -> u32 {
        let v = self.next;
        self.next += 1;
        v
    }

    /// Append `count` crossings between the NE and SE ends (negative count
    /// twists the other way).
    pub fn twist_east(&mut self, count: i64) {
        for _ in 0..count.unsigned_abs() {
            let p = self.fresh();
            let q = self.fresh();
            let (ne, se) = (self.ends[1], self.ends[3]);
            let cr = if count > 0 { [se, q, p, ne] } else { [q, p, ne, se] };
            self.crossings.push(cr);
            self.ends[1] = p;
            self.ends[3] = q;
        }
    }

    /// Append `count` crossings between the SW and SE ends.
    pub fn twist_south(&mut self, count: i64) {
        for _ in 0..count.unsigned_abs() {
            let p = self.fresh();
            let q = self.fresh();
            let (sw, se) = (self.ends[2], self.ends[3]);
            let cr = if count > 0 { [se, sw, p, q] } else { [sw, p, q, se] };
            self.crossings.push(cr);
            self.ends[2] = p;
            self.ends[3] = q;
        }
    }

    /// Replace every occurrence of label `b` with `a`.  Fusing an end with
    /// itself closes that strand; if no crossing touches it, it becomes a
    /// free loop.
    fn fuse(&mut self, a: u32, b: u32) {
        if a == b {
            if !self.crossings.iter().any(|c| c.contains(&a)) {
                self.free_loops += 1;
            }
            return;
        }
        for c in &mut self.crossings {
            for slot in c.iter_mut() {
                if *slot == b {
                    *slot = a;
                }
            }
        }
        for e in &mut self.ends {
            if *e == b {
                *e = a;
            }
        }
    }

    /// Glue `other` onto the east side: NE-NW' and SE-SW' are joined.
    pub fn sum(mut self, mut other: Tangle) -> Tangle {
        let offset = self.next;
        for c in &mut other.crossings {
            for slot in c.iter_mut() {
                *slot += offset;
            }
        }
        for e in &mut other.ends {
            *e += offset;
        }
        self.next = other.next + offset;
        self.free_loops += other.free_loops;
        self.crossings.extend_from_slice(&other.crossings);
        let (ne, se) = (self.ends[1], self.ends[3]);
        self.ends[1] = other.ends[1];
        self.ends[3] = other.ends[3];
        self.fuse(ne, other.ends[0]);
        self.fuse(se, other.ends[2]);
        self
    }

    /// Numerator closure: join NW-NE and SW-SE.
    pub fn numerator(mut self) -> Result<PlanarDiagram, NotationError> {
        let (nw, ne) = (self.ends[0], self.ends[1]);
        self.fuse(nw, ne);
        let (sw, se) = (self.ends[2], self.ends[3]);
        self.fuse(sw, se);
        Ok(PlanarDiagram::new(self.crossings, self.free_loops)?)
    }
}

/// Continued-fraction digits `[b0, b1, ...]` with `p/q = b0 + 1/(b1 + ...)`.
fn continued_fraction(mut p: i64, mut q: i64) -> Vec<i64> {
    assert!(q != 0, "fraction with zero denominator");
    if q < 0 {
        p = -p;
        q = -q;
    }
    let mut digits = Vec::new();
    loop {
        let b = p.div_euclid(q);
        let r = p - b * q;
        digits.push(b);
        if r == 0 {
            break;
        }
        p = q;
        q = r;
    }
    digits
}

/// Realize continued-fraction digits as a tangle.  Digits at even positions
/// are horizontal twist counts, odd positions vertical, applied last first.
/// An odd-length expansion grows from the zero tangle, an even-length one
/// from the infinity tangle, so the final digit is always horizontal and the
/// tangle's fraction is exactly `[b0; b1, ...]`.
fn tangle_from_digits(digits: &[i64]) -> Tangle {
    let k = digits.len();
    let mut t = if k % 2 == 1 { Tangle::zero() } else { Tangle::infinity() };
    for (j, &a) in digits.iter().enumerate().rev() {
        if j % 2 == 0 {
            t.twist_east(a);
        } else {
            t.twist_south(a);
        }
    }
    t
}

/// The rational tangle with fraction `p/q`.
pub fn rational_tangle(p: i64, q: i64) -> Tangle {
    if q == 0 {
        return Tangle::infinity();
    }
    tangle_from_digits(&continued_fraction(p, q))
}

/// The two-bridge diagram `N(p/q)`: numerator closure of the `p/q` tangle.
/// Its determinant is `|p|`.
pub fn rational_knot(p: i64, q: i64) -> Result<PlanarDiagram, NotationError> {
    rational_tangle(p, q).numerator()
}

/// Numerator closure of a left-to-right sum of rational tangles, with
/// `twists` extra horizontal crossings appended on the east end.
pub fn montesinos(fractions: &[(i64, i64)], twists: i64) -> Result<PlanarDiagram, NotationError> {
    let mut iter = fractions.iter();
    let &(p, q) = iter.next().expect("montesinos needs at least one tangle");
    let mut t = rational_tangle(p, q);
    for &(p, q) in iter {
        t = t.sum(rational_tangle(p, q));
    }
    t.twist_east(twists);
    t.numerator()
}

/// The `m`-th member of the twisted family `N(2/(2m+1) + 2/3 - 1/2)`:
/// `7 + |m|` crossings, determinant `|2m + 13|`.  Switching the first
/// crossing (index 0, in the leading tangle's horizontal pair) cancels that
/// pair and collapses the whole diagram to an unknot.
pub fn km_diagram(m: i64) -> PlanarDiagram {
    // Fixed expansions keep the diagram at its template size for negative m,
    // where the generic Euclidean expansion pads extra crossings:
    // 2/(2m+1) = [0; m, 2] for every m, 2/3 = [0; 1, 2], -1/2 = [0; -2].
    let t = tangle_from_digits(&[0, m, 2])
        .sum(tangle_from_digits(&[0, 1, 2]))
        .sum(tangle_from_digits(&[0, -2]));
    // The raw closure realizes the mirror of the intended handedness (its
    // V(K[-1]) comes out exponent-inverted), so flip every crossing.
    t.numerator()
        .expect("the twisted family closure is always a valid diagram")
        .mirror()
}

/// Closure of a braid word on `strands` strands.  Generators are 1-based:
/// `2` means the second and third strands cross positively, `-2` negatively.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PlanarDiagram, NotationError> {
    assert!(strands >= 1);
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut crossings: Vec<[u32; 4]> = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        assert!(g != 0 && i < strands, "generator {g} out of range for {strands} strands");
        let (a, b) = (cur[i - 1], cur[i]);
        let c = next;
        let d = next + 1;
        next += 2;
        crossings.push(if g > 0 { [a, c, d, b] } else { [c, d, b, a] });
        cur[i - 1] = c;
        cur[i] = d;
    }
    // Close up: the label leaving position j rejoins the label that entered it.
    let mut free_loops = 0;
    for (j, &from) in cur.iter().enumerate() {
        let to = j as u32 + 1;
        if from == to {
            if !crossings.iter().any(|c| c.contains(&to)) {
                free_loops += 1;
            }
            continue;
        }
        for c in &mut crossings {
            for slot in c.iter_mut() {
                if *slot == from {
                    *slot = to;
                }
            }
        }
    }
    Ok(PlanarDiagram::new(crossings, free_loops)?)
}

/// A two-crossing Hopf link diagram of either handedness.
pub fn hopf_link(positive: bool) -> PlanarDiagram {
    braid_closure(2, if positive { &[1, 1] } else { &[-1, -1] })
        .expect("two-braid closures are valid diagrams")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{invariants, jones, link_determinant, signature};
    use num_bigint::BigInt;

    #[test]
    fn continued_fractions_are_exact() {
        // Re-evaluate each expansion back into a fraction.
        fn eval(digits: &[i64]) -> (i64, i64) {
            let (mut p, mut q) = (1i64, 0i64);
            for &b in digits.iter().rev() {
                (p, q) = (b * p + q, p);
            }
            (p, q)
        }
        for (p, q) in [(5, 2), (11, 4), (3, 1), (2, -3), (-1, 2), (13, 5), (2, 7), (2, 4)] {
            let digits = continued_fraction(p, q);
            let (ep, eq) = eval(&digits);
            assert_eq!(ep * q, eq * p, "{p}/{q} -> {digits:?}");
        }
    }

    #[test]
    fn trivial_closures() {
        // N(0) is the two-component unlink, N(infinity) the unknot.
        let n0 = Tangle::zero().numerator().unwrap();
        assert_eq!(n0.crossing_count(), 0);
        assert_eq!(n0.component_count(), 2);
        let ninf = Tangle::infinity().numerator().unwrap();
        assert_eq!(ninf.component_count(), 1);
    }

    #[test]
    fn two_bridge_determinants_match_the_fraction() {
        for (p, q) in [(3, 1), (5, 2), (7, 2), (9, 2), (11, 4), (13, 5), (1, 1), (2, 1)] {
            let d = rational_knot(p, q).unwrap();
            assert_eq!(
                link_determinant(&d).unwrap(),
                BigInt::from(p),
                "N({p}/{q})"
            );
        }
    }

    #[test]
    fn two_bridge_closures_are_knots_or_two_component_links() {
        // p odd gives a knot, p even a two-component link.
        assert_eq!(rational_knot(5, 2).unwrap().component_count(), 1);
        assert_eq!(rational_knot(4, 1).unwrap().component_count(), 2);
    }

    #[test]
    fn figure_eight_from_its_fraction() {
        let d = rational_knot(5, 2).unwrap();
        let reference = crate::diagram::testpd::figure_eight();
        assert_eq!(jones(&d), jones(&reference));
        assert_eq!(signature(&d).unwrap(), 0);
    }

    #[test]
    fn montesinos_determinant_adds_fractions() {
        // N(1/3 + 1/3 + 1/3) is the (3,3,3) pretzel: det 27.
        let d = montesinos(&[(1, 3), (1, 3), (1, 3)], 0).unwrap();
        assert_eq!(d.crossing_count(), 9);
        assert_eq!(link_determinant(&d).unwrap(), BigInt::from(27));
    }

    #[test]
    fn twisted_family_size_and_determinant() {
        for m in -4..=4 {
            let d = km_diagram(m);
            assert_eq!(d.crossing_count() as i64, 7 + m.abs(), "m={m}");
            assert_eq!(d.component_count(), 1, "m={m}");
            assert_eq!(
                link_determinant(&d).unwrap(),
                BigInt::from((2 * m + 13).abs()),
                "m={m}"
            );
        }
    }

    #[test]
    fn twisted_family_chirality_anchors() {
        // Frozen values that pin the family's handedness, not just its
        // mirror-blind profile.  K[0] and K[-1] are the 13- and
        // 11-determinant six-crossing knots; K[1] has signature 2.
        let v0 = jones(&km_diagram(0));
        let expected0 = crate::algebra::LaurentPoly::from_terms([
            (-6, -1),
            (-4, 2),
            (-2, -2),
            (0, 3),
            (2, -2),
            (4, 2),
            (6, -1),
        ]);
        assert_eq!(v0, expected0, "V(K[0]) = {}", v0.to_string_var("q"));
        let v1 = jones(&km_diagram(-1));
        let expected1 = crate::algebra::LaurentPoly::from_terms([
            (-10, 1),
            (-8, -2),
            (-6, 2),
            (-4, -2),
            (-2, 2),
            (0, -1),
            (2, 1),
        ]);
        assert_eq!(v1, expected1, "V(K[-1]) = {}", v1.to_string_var("q"));
        let inv = invariants(&km_diagram(1)).unwrap();
        assert_eq!(inv.signature, 2);
        assert_eq!(inv.arf, Some(0));
        assert_eq!(inv.determinant, 15);
    }

    #[test]
    fn twisted_family_unknots_at_the_marked_crossing() {
        for m in [-3, -1, 0, 2] {
            let d = km_diagram(m).switch_crossing(0);
            let v = jones(&d);
            assert_eq!(v, crate::algebra::LaurentPoly::one(), "m={m}: V = {}", v.to_string_var("q"));
        }
    }

    #[test]
    fn braid_closures() {
        // sigma_1^3 on two strands closes to a trefoil.
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.component_count(), 1);
        assert_eq!(link_determinant(&t).unwrap(), BigInt::from(3));
        // An untouched strand closes to a free loop.
        let split = braid_closure(3, &[1]).unwrap();
        assert_eq!(split.free_loops(), 1);
        // (sigma_1 sigma_2^-1)^4 closes to the 45-determinant eight-crossing knot.
        let d = braid_closure(3, &[1, -2, 1, -2, 1, -2, 1, -2]).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(link_determinant(&d).unwrap(), BigInt::from(45));
        assert_eq!(signature(&d).unwrap(), 0);
    }

    #[test]
    fn hopf_handedness() {
        // Positive means linking number +1, hence signature -1.
        let pos = invariants(&hopf_link(true)).unwrap();
        let neg = invariants(&hopf_link(false)).unwrap();
        assert_eq!(pos.components, 2);
        assert_eq!(pos.determinant, 2);
        assert_eq!(neg.determinant, 2);
        assert_eq!(pos.signature, -1);
        assert_eq!(neg.signature, 1);
    }
}
