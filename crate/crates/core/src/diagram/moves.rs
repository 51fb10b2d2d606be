//! Reducing Reidemeister moves.
//!
//! `simplify` removes kinks (R1) and poked bigons (R2) until none remain.
//! Both moves preserve the underlying link; R2 also preserves the Kauffman
//! bracket and writhe on the nose, while each R1 multiplies the bracket by
//! `−A^{±3}`, which `simplify_tracked` records so polynomial computations
//! can shrink diagrams without losing the factor.

use super::{Arc, PlanarDiagram, Smoothing};

/// Result of a tracked simplification: `bracket(original) =
/// (−1)^negate · A^{a_exponent} · bracket(diagram)`.
#[derive(Debug, Clone)]
pub struct SimplifyTrace {
    pub diagram: PlanarDiagram,
    pub negate: bool,
    pub a_exponent: i64,
}

pub fn simplify(d: &PlanarDiagram) -> PlanarDiagram {
    simplify_tracked(d).diagram
}

pub fn simplify_tracked(d: &PlanarDiagram) -> SimplifyTrace {
    let mut cur = d.clone();
    let mut negate = false;
    let mut a_exponent = 0i64;
    loop {
        if let Some((idx, factor)) = find_kink(&cur) {
            cur = remove_kink(&cur, idx, factor);
            negate = !negate;
            a_exponent += factor;
            continue;
        }
        if let Some(b) = find_bigon(&cur) {
            cur = remove_bigon(&cur, b);
            continue;
        }
        break;
    }
    SimplifyTrace {
        diagram: cur,
        negate,
        a_exponent,
    }
}

/// A kink is a crossing with one arc occupying two adjacent slots. Returns
/// the crossing index and the exponent of its bracket factor `−A^{±3}`:
/// +3 when the loop spans an A-smoothing pair ((0,1) or (2,3)), −3 otherwise.
fn find_kink(d: &PlanarDiagram) -> Option<(usize, i64)> {
    for (i, cr) in d.crossings().iter().enumerate() {
        let t = cr.0;
        if t[0] == t[1] || t[2] == t[3] {
            return Some((i, 3));
        }
        if t[1] == t[2] || t[3] == t[0] {
            return Some((i, -3));
        }
    }
    None
}

fn remove_kink(d: &PlanarDiagram, idx: usize, factor: i64) -> PlanarDiagram {
    // Welding the complementary quadrant pair reconnects the strand while the
    // kink circle closes on itself; for a loop on an A-pair the complementary
    // weld is exactly smoothing A. The closed-up kink circle surfaces as one
    // free loop, which the move absorbs.
    let sm = if factor == 3 { Smoothing::A } else { Smoothing::B };
    let out = d.smooth(idx, sm);
    PlanarDiagram {
        crossings: out.crossings,
        free_loops: out.free_loops - 1,
    }
}

/// A reducible bigon between crossings `c` and `e`: arcs `x ≠ y` joining
/// them on adjacent slots at both ends, one strand passing over at both
/// crossings (slot parity of each arc equal at the two ends).
#[derive(Debug, Clone, Copy)]
struct Bigon {
    c: usize,
    e: usize,
    slots_c: [usize; 2],
    slots_e: [usize; 2],
}

fn find_bigon(d: &PlanarDiagram) -> Option<Bigon> {
    let n = d.crossing_count();
    for c in 0..n {
        for e in c + 1..n {
            let tc = d.crossings()[c].0;
            let te = d.crossings()[e].0;
            let mut shared: Vec<(usize, usize)> = Vec::new();
            for (sc, &a) in tc.iter().enumerate() {
                for (se, &b) in te.iter().enumerate() {
                    if a == b {
                        shared.push((sc, se));
                    }
                }
            }
            for &(xc, xe) in &shared {
                for &(yc, ye) in &shared {
                    if tc[xc] == tc[yc] {
                        continue;
                    }
                    let adj_c = (xc + 1) % 4 == yc || (yc + 1) % 4 == xc;
                    let adj_e = (xe + 1) % 4 == ye || (ye + 1) % 4 == xe;
                    let same_strand = xc % 2 == xe % 2;
                    if adj_c && adj_e && same_strand {
                        return Some(Bigon {
                            c,
                            e,
                            slots_c: [xc, yc],
                            slots_e: [xe, ye],
                        });
                    }
                }
            }
        }
    }
    None
}

fn remove_bigon(d: &PlanarDiagram, b: Bigon) -> PlanarDiagram {
    let tc = d.crossings()[b.c].0;
    let te = d.crossings()[b.e].0;
    // Remnant slots (the non-bigon ends) pair up by strand, i.e. by parity.
    let rem_c: Vec<usize> = (0..4).filter(|s| !b.slots_c.contains(s)).collect();
    let mut pairs: Vec<(Arc, Arc)> = Vec::new();
    for &sc in &rem_c {
        let se = (0..4)
            .find(|s| !b.slots_e.contains(s) && s % 2 == sc % 2)
            .expect("remnant slots pair by parity");
        pairs.push((tc[sc], te[se]));
    }

    let mut crossings = d.crossings().to_vec();
    crossings.remove(b.c.max(b.e));
    crossings.remove(b.c.min(b.e));
    let mut free_loops = d.free_loops();

    for k in 0..pairs.len() {
        let (a, bb) = pairs[k];
        if a == bb {
            free_loops += 1;
            continue;
        }
        let keep = a.min(bb);
        let drop = a.max(bb);
        for cr in crossings.iter_mut() {
            for s in cr.0.iter_mut() {
                if *s == drop {
                    *s = keep;
                }
            }
        }
        for p in pairs[k + 1..].iter_mut() {
            if p.0 == drop {
                p.0 = keep;
            }
            if p.1 == drop {
                p.1 = keep;
            }
        }
    }

    PlanarDiagram {
        crossings,
        free_loops,
    }
}

#[cfg(test)]
mod tests {
    use super::super::testpd::*;
    use super::super::{PlanarDiagram, Smoothing};

    #[test]
    fn kinked_unknot_simplifies_away() {
        let k = positive_kink();
        let t = k.simplify_tracked();
        assert_eq!(t.diagram, PlanarDiagram::unknot());
        assert!(t.negate);
        assert_eq!(t.a_exponent, 3);
    }

    #[test]
    fn double_kink_accumulates() {
        // Two positive kinks on one circle.
        let d = PlanarDiagram::new(vec![[1, 1, 2, 3], [3, 2, 4, 4]], 0).unwrap();
        let t = d.simplify_tracked();
        assert_eq!(t.diagram, PlanarDiagram::unknot());
        assert!(!t.negate);
        assert_eq!(t.a_exponent, 6);
    }

    #[test]
    fn poked_loops_come_apart() {
        // One circle slides completely under another: R2 splits them into a
        // 2-component unlink.
        let d = PlanarDiagram::new(vec![[1, 4, 2, 3], [2, 4, 1, 3]], 0).unwrap();
        assert_eq!(d.component_count(), 2);
        let s = d.simplify();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.free_loops(), 2);
    }

    #[test]
    fn hopf_link_does_not_reduce() {
        let d = hopf();
        assert_eq!(d.simplify(), d);
        assert_eq!(trefoil().simplify(), trefoil());
        assert_eq!(figure_eight().simplify(), figure_eight());
    }

    #[test]
    fn smoothing_then_simplifying_keeps_components() {
        for d in [trefoil(), figure_eight(), hopf()] {
            for i in 0..d.crossing_count() {
                for sm in [Smoothing::A, Smoothing::B] {
                    let sd = d.smooth(i, sm);
                    let s = sd.simplify();
                    assert_eq!(s.component_count(), sd.component_count());
                    assert_eq!(s.simplify(), s, "idempotent");
                }
            }
        }
    }
}
