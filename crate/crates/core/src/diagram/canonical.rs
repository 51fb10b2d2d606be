//! Canonical codes: a relabeling-invariant key for diagrams.
//!
//! For each of the `4n` possible start darts of a connected piece we walk the
//! whole piece, renaming arcs in encounter order, and serialize the crossings
//! in first-visit order. The code of the piece is the lexicographic minimum
//! over all starts; the code of a diagram is the sorted concatenation of its
//! pieces' codes. Two diagrams get equal codes exactly when they differ by
//! arc relabeling, crossing reordering, or the choice of start/direction of
//! the encoding walk — mirror images and switched crossings do *not*
//! coincide.
//!
//! Layout per piece: `[n, free_loops, c_0, ..., c_{n-1}]` where each crossing
//! contributes `[under_bit, a_0, a_1, a_2, a_3]`: `under_bit` is 1 when the
//! walk first entered the crossing on the under-strand, and the `a_i` are the
//! renamed arc labels counterclockwise from that entry slot.

use std::collections::BTreeMap;

use super::{Dart, PlanarDiagram};

pub fn canonical_code(d: &PlanarDiagram) -> Vec<u32> {
    let pieces = d.connected_pieces();
    let mut codes: Vec<Vec<u32>> = pieces.iter().map(piece_code).collect();
    codes.sort();
    let mut out = Vec::new();
    for c in codes {
        out.extend(c);
    }
    out
}

fn piece_code(d: &PlanarDiagram) -> Vec<u32> {
    let n = d.crossing_count();
    if n == 0 {
        return vec![0, d.free_loops()];
    }
    let occ = d.arc_occurrences();
    let mut best: Option<Vec<u32>> = None;
    for c in 0..n {
        for s in 0..4 {
            let code = walk_code(d, &occ, (c, s));
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    let mut out = vec![n as u32, d.free_loops()];
    out.extend(best.unwrap());
    out
}

fn walk_code(
    d: &PlanarDiagram,
    occ: &BTreeMap<super::Arc, Vec<Dart>>,
    start: Dart,
) -> Vec<u32> {
    let n = d.crossing_count();
    let mut arc_id: BTreeMap<super::Arc, u32> = BTreeMap::new();
    let mut next_arc = 1u32;
    let mut id_of = |a: super::Arc, arc_id: &mut BTreeMap<super::Arc, u32>| -> u32 {
        *arc_id.entry(a).or_insert_with(|| {
            let v = next_arc;
            next_arc += 1;
            v
        })
    };

    // visit_order[c] = Some(k-th crossing visited, entry slot of first visit)
    let mut first_visit: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut visit_list: Vec<usize> = Vec::new();
    let mut entered = vec![[false; 4]; n];

    let mut trace_strand = |start: Dart,
                            first_visit: &mut Vec<Option<(usize, usize)>>,
                            visit_list: &mut Vec<usize>,
                            entered: &mut Vec<[bool; 4]>,
                            arc_id: &mut BTreeMap<super::Arc, u32>| {
        let mut cur = start;
        loop {
            let (c, s) = cur;
            entered[c][s] = true;
            id_of(d.crossings()[c].0[s], arc_id);
            if first_visit[c].is_none() {
                first_visit[c] = Some((visit_list.len(), s));
                visit_list.push(c);
            }
            let exit = (c, (s + 2) % 4);
            id_of(d.crossings()[c].0[exit.1], arc_id);
            cur = d.arc_partner(occ, exit);
            if cur == start {
                break;
            }
        }
    };

    trace_strand(
        start,
        &mut first_visit,
        &mut visit_list,
        &mut entered,
        &mut arc_id,
    );
    // Cover remaining strands: take the earliest-visited crossing whose cross
    // strand is untraced and enter it just after the first entry slot.
    loop {
        let mut next_start = None;
        for &c in &visit_list {
            let (_, s0) = first_visit[c].unwrap();
            let cross = (s0 + 1) % 4;
            if !entered[c][cross] && !entered[c][(cross + 2) % 4] {
                next_start = Some((c, cross));
                break;
            }
        }
        match next_start {
            Some(d0) => trace_strand(
                d0,
                &mut first_visit,
                &mut visit_list,
                &mut entered,
                &mut arc_id,
            ),
            None => break,
        }
    }
    debug_assert_eq!(visit_list.len(), n, "walk must reach every crossing");

    let mut code = Vec::with_capacity(5 * n);
    for &c in &visit_list {
        let (_, s0) = first_visit[c].unwrap();
        code.push(u32::from(s0 % 2 == 0));
        for k in 0..4 {
            code.push(arc_id[&d.crossings()[c].0[(s0 + k) % 4]]);
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::super::testpd::*;
    use super::super::PlanarDiagram;

    #[test]
    fn relabeling_and_reordering_do_not_change_the_code() {
        let d = trefoil();
        // Same diagram with arcs doubled and crossings listed backwards.
        let e = PlanarDiagram::new(
            vec![[10, 4, 12, 6], [6, 12, 8, 2], [2, 8, 4, 10]],
            0,
        )
        .unwrap();
        assert_eq!(d.canonical_code(), e.canonical_code());
    }

    #[test]
    fn rotating_a_tuple_by_two_is_the_same_crossing() {
        // (a,b,c,d) and (c,d,a,b) encode one crossing entered from the other
        // under-direction.
        let d = PlanarDiagram::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap();
        let e = PlanarDiagram::new(vec![[2, 5, 1, 4], [3, 6, 4, 1], [5, 2, 6, 3]], 0).unwrap();
        assert_eq!(d.canonical_code(), e.canonical_code());
    }

    #[test]
    fn distinct_shapes_get_distinct_codes() {
        assert_ne!(trefoil().canonical_code(), figure_eight().canonical_code());
        assert_ne!(
            trefoil().canonical_code(),
            trefoil().switch_crossing(0).canonical_code()
        );
    }

    #[test]
    fn split_pieces_sort() {
        let mut crossings = vec![[11u32, 13, 12, 14], [14, 12, 13, 11]];
        crossings.extend([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]);
        let d = PlanarDiagram::new(crossings, 1).unwrap();
        let mut crossings = vec![[1u32, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
        crossings.extend([[11, 13, 12, 14], [14, 12, 13, 11]]);
        let e = PlanarDiagram::new(crossings, 1).unwrap();
        assert_eq!(d.canonical_code(), e.canonical_code());
    }

    #[test]
    fn unknot_code() {
        assert_eq!(PlanarDiagram::unknot().canonical_code(), vec![0, 1]);
    }
}
