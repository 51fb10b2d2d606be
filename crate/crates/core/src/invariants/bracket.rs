//! Kauffman bracket, by two engines: a direct state sum over all smoothings
//! for small diagrams, and a memoized skein recursion that leans on curl and
//! bigon reduction for everything larger (twist regions collapse linearly,
//! so long rational-looking diagrams stay cheap).

use std::collections::HashMap;

use crate::algebra::LaurentPoly;
use crate::diagram::{PlanarDiagram, Smoothing};
use crate::par;

/// Largest crossing count fed to the `2^n` state sum.
pub const STATE_SUM_CAP: usize = 14;

/// The value of one closed loop beside a nonempty diagram: `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Bracket polynomial in `A`, normalized to `<unknot> = 1`. Each extra
/// disjoint loop multiplies by `-A^2 - A^-2`; a positive curl carries
/// `-A^3`.
pub fn kauffman_bracket(d: &PlanarDiagram) -> LaurentPoly {
    if d.crossing_count() <= STATE_SUM_CAP {
        bracket_state_sum(d)
    } else {
        bracket_recursive(d)
    }
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        parent[i as usize] = parent[parent[i as usize] as usize];
        i = parent[i as usize];
    }
    i
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb) as usize] = ra.min(rb);
    }
}

/// Sum over all `2^n` smoothing states, counting the loops of each state
/// with a union-find over the `4n` quadrant darts. States are scanned in
/// parallel chunks; only the `(b-count, loop-count)` histogram is kept.
pub fn bracket_state_sum(d: &PlanarDiagram) -> LaurentPoly {
    let n = d.crossing_count();
    assert!(n <= 32, "state sum is 2^n; use bracket_recursive above that");
    if n == 0 {
        return loop_value().pow(d.free_loops() - 1);
    }

    let occ = d.arc_occurrences();
    let joins: Vec<(u32, u32)> = occ
        .values()
        .map(|darts| {
            let a = (darts[0].0 * 4 + darts[0].1) as u32;
            let b = (darts[1].0 * 4 + darts[1].1) as u32;
            (a, b)
        })
        .collect();

    let states = 1u64 << n;
    // A state of a split diagram can reach 2n loops (each uses >= 2 darts).
    let width = 2 * n + 2;
    let chunk = 1u64 << 12;
    let histogram = par::fold_range(
        states.div_ceil(chunk),
        || vec![0u64; (n + 1) * width],
        |ci| {
            let mut local = vec![0u64; (n + 1) * width];
            let mut parent = vec![0u32; 4 * n];
            for s in ci * chunk..states.min((ci + 1) * chunk) {
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i as u32;
                }
                for &(a, b) in &joins {
                    union(&mut parent, a, b);
                }
                for c in 0..n {
                    let q = (4 * c) as u32;
                    if s >> c & 1 == 0 {
                        union(&mut parent, q, q + 1);
                        union(&mut parent, q + 2, q + 3);
                    } else {
                        union(&mut parent, q + 1, q + 2);
                        union(&mut parent, q + 3, q);
                    }
                }
                let mut loops = 0usize;
                for i in 0..4 * n as u32 {
                    if find(&mut parent, i) == i {
                        loops += 1;
                    }
                }
                local[s.count_ones() as usize * width + loops] += 1;
            }
            local
        },
        |mut acc, other| {
            for (x, y) in acc.iter_mut().zip(other) {
                *x += y;
            }
            acc
        },
    );

    let delta = loop_value();
    let mut delta_pow = vec![LaurentPoly::one()];
    for k in 1..=2 * n + d.free_loops() as usize {
        delta_pow.push(&delta_pow[k - 1] * &delta);
    }

    let mut out = LaurentPoly::zero();
    for b in 0..=n {
        for loops in 1..=2 * n {
            let count = histogram[b * width + loops];
            if count != 0 {
                let exp = n as i64 - 2 * b as i64;
                let term = delta_pow[loops - 1 + d.free_loops() as usize]
                    .mul_monomial(exp, count as i128);
                out = &out + &term;
            }
        }
    }
    out
}

/// Skein recursion `<D> = A <D_A> + A^-1 <D_B>`, after pulling out curls and
/// bigons and splitting disjoint pieces. Subdiagrams at or below
/// [`STATE_SUM_CAP`] crossings drop to the state sum; everything reduced is
/// memoized under its canonical code.
pub fn bracket_recursive(d: &PlanarDiagram) -> LaurentPoly {
    let mut memo = HashMap::new();
    bracket_rec(d, &mut memo)
}

fn bracket_rec(d: &PlanarDiagram, memo: &mut HashMap<Vec<u32>, LaurentPoly>) -> LaurentPoly {
    let trace = d.simplify_tracked();
    let reduced = trace.diagram;
    let mut acc = LaurentPoly::monomial(trace.a_exponent, if trace.negate { -1 } else { 1 });

    let pieces = reduced.connected_pieces();
    if pieces.len() > 1 {
        acc = &acc * &loop_value().pow(pieces.len() as u32 - 1);
        for piece in pieces {
            acc = &acc * &bracket_rec(&piece, memo);
        }
        return acc;
    }
    if reduced.crossing_count() == 0 {
        return acc; // a lone loop
    }

    let key = reduced.canonical_code();
    if let Some(v) = memo.get(&key) {
        return &acc * v;
    }
    let val = if reduced.crossing_count() <= STATE_SUM_CAP {
        bracket_state_sum(&reduced)
    } else {
        let a = bracket_rec(&reduced.smooth(0, Smoothing::A), memo).mul_monomial(1, 1);
        let b = bracket_rec(&reduced.smooth(0, Smoothing::B), memo).mul_monomial(-1, 1);
        &a + &b
    };
    memo.insert(key, val.clone());
    &acc * &val
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testpd;

    fn poly(terms: &[(i64, i128)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn positive_curl_is_minus_a_cubed() {
        assert_eq!(bracket_state_sum(&testpd::positive_kink()), poly(&[(3, -1)]));
        assert_eq!(
            bracket_state_sum(&testpd::positive_kink().mirror()),
            poly(&[(-3, -1)])
        );
    }

    #[test]
    fn unlinks_are_delta_powers() {
        let two = PlanarDiagram::new(vec![], 2).unwrap();
        let four = PlanarDiagram::new(vec![], 4).unwrap();
        assert_eq!(bracket_state_sum(&two), loop_value());
        assert_eq!(kauffman_bracket(&four), loop_value().pow(3));
    }

    #[test]
    fn hopf_link_bracket() {
        let want = poly(&[(4, -1), (-4, -1)]);
        assert_eq!(bracket_state_sum(&testpd::hopf()), want);
        assert_eq!(bracket_recursive(&testpd::hopf()), want);
    }

    #[test]
    fn free_loops_multiply_by_delta() {
        let kink = testpd::positive_kink();
        let crossings = kink.crossings().iter().map(|c| c.0).collect();
        let with_loops = PlanarDiagram::new(crossings, 2).unwrap();
        let want = &bracket_state_sum(&kink) * &loop_value().pow(2);
        assert_eq!(bracket_state_sum(&with_loops), want);
        assert_eq!(bracket_recursive(&with_loops), want);
    }

    #[test]
    fn engines_agree_on_small_diagrams() {
        for d in [
            testpd::trefoil(),
            testpd::figure_eight(),
            testpd::hopf(),
            testpd::trefoil().mirror(),
            testpd::trefoil().connected_sum(&testpd::figure_eight()),
        ] {
            assert_eq!(bracket_state_sum(&d), bracket_recursive(&d), "{d:?}");
        }
    }

    #[test]
    fn recursion_handles_disjoint_pieces() {
        let split = PlanarDiagram::new(vec![[1, 1, 2, 2], [3, 3, 4, 4]], 0).unwrap();
        let want = &poly(&[(6, 1)]) * &loop_value();
        assert_eq!(bracket_state_sum(&split), want);
        assert_eq!(bracket_recursive(&split), want);
    }

    #[test]
    fn connected_sum_multiplies_brackets() {
        // 19 crossings forces the recursive path end to end.
        let mut big = testpd::trefoil();
        for _ in 0..4 {
            big = big.connected_sum(&testpd::figure_eight());
        }
        assert_eq!(big.crossing_count(), 19);
        let mut want = bracket_state_sum(&testpd::trefoil());
        for _ in 0..4 {
            want = &want * &bracket_state_sum(&testpd::figure_eight());
        }
        assert_eq!(bracket_recursive(&big), want);
        assert_eq!(kauffman_bracket(&big), want);
    }
}
