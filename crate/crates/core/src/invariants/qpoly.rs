//! The unoriented absolute polynomial `Q(z)` of Brandt–Lickorish–Millett–Ho,
//! computed by descending traversal.
//!
//! A traversal of the diagram is *descending* when every crossing is first
//! met on its over-strand; a descending diagram is an unlink. For anything
//! else, take the first offending crossing along a fixed traversal: the
//! quadruple axiom
//!
//! `Q(L+) + Q(L-) = z (Q(L0) + Q(Loo))`
//!
//! rewrites the diagram against its switched twin, and iterating the switch
//! along the *same* traversal telescopes down to an unlink. Only the two
//! smoothings recurse, so the depth is bounded by the crossing number.

use std::collections::HashMap;

use crate::algebra::LaurentPoly;
use crate::diagram::{PlanarDiagram, Smoothing};

/// Default recursion budget: plenty for every bundled diagram (each level
/// removes at least one crossing).
pub const DEFAULT_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QError {
    #[error("Q-polynomial recursion exceeded its depth budget of {0}")]
    BudgetExceeded(usize),
}

/// `Q(z)` with `Q(unknot) = 1`; each extra split component multiplies by
/// `2z^-1 - 1`.
pub fn q_polynomial(d: &PlanarDiagram) -> Result<LaurentPoly, QError> {
    q_polynomial_with_budget(d, DEFAULT_DEPTH)
}

pub fn q_polynomial_with_budget(
    d: &PlanarDiagram,
    depth: usize,
) -> Result<LaurentPoly, QError> {
    let mut memo = HashMap::new();
    q_rec(d, depth, depth, &mut memo)
}

/// `2z^-1 - 1`, the ratio picked up per split component.
pub fn split_factor() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, 2), (0, -1)])
}

fn q_rec(
    d: &PlanarDiagram,
    depth: usize,
    budget: usize,
    memo: &mut HashMap<Vec<u32>, LaurentPoly>,
) -> Result<LaurentPoly, QError> {
    let reduced = d.simplify();

    let pieces = reduced.connected_pieces();
    if pieces.len() > 1 {
        let mut acc = split_factor().pow(pieces.len() as u32 - 1);
        for piece in pieces {
            acc = &acc * &q_rec(&piece, depth, budget, memo)?;
        }
        return Ok(acc);
    }
    if reduced.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }

    let key = reduced.canonical_code();
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    if depth == 0 {
        return Err(QError::BudgetExceeded(budget));
    }

    let bad = bad_crossings(&reduced);
    let components = reduced.component_count();
    let val = if bad.is_empty() {
        split_factor().pow(components as u32 - 1)
    } else {
        // Telescope the whole switch chain against this one traversal:
        // Q(D_0) = sum_i (-1)^{i-1} z (Q(A_i) + Q(B_i)) + (-1)^k Q(unlink).
        let mut acc = LaurentPoly::zero();
        let mut cur = reduced.clone();
        let mut sign = 1i128;
        for &c in &bad {
            let a = q_rec(&cur.smooth(c, Smoothing::A), depth - 1, budget, memo)?;
            let b = q_rec(&cur.smooth(c, Smoothing::B), depth - 1, budget, memo)?;
            acc = &acc + &(&a + &b).mul_monomial(1, sign);
            cur = cur.switch_crossing(c);
            sign = -sign;
        }
        let tail = split_factor().pow(components as u32 - 1);
        &acc + &tail.scale(sign)
    };
    memo.insert(key, val.clone());
    Ok(val)
}

/// Crossings first met on their under-strand, in traversal order. The
/// traversal starts each component at its lowest arc's first occurrence,
/// matching the canonical orientation walk; switching a listed crossing
/// leaves the list's tail unchanged because the shadow is untouched.
fn bad_crossings(d: &PlanarDiagram) -> Vec<usize> {
    let occ = d.arc_occurrences();
    let n = d.crossing_count();
    let mut first_visit_under: Vec<Option<bool>> = vec![None; n];
    let mut visit_order = Vec::new();
    let mut seen_arc = std::collections::BTreeSet::new();

    for (&arc, darts) in &occ {
        if seen_arc.contains(&arc) {
            continue;
        }
        let start = darts[0];
        let mut cur = start;
        loop {
            let (c, s) = cur;
            if first_visit_under[c].is_none() {
                first_visit_under[c] = Some(s % 2 == 0);
                visit_order.push(c);
            }
            let exit = (c, (s + 2) % 4);
            seen_arc.insert(d.crossings()[c].0[exit.1]);
            cur = d.arc_partner(&occ, exit);
            if cur == start {
                break;
            }
        }
    }

    visit_order
        .into_iter()
        .filter(|&c| first_visit_under[c] == Some(true))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testpd;

    fn zpoly(terms: &[(i64, i128)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(
            q_polynomial(&PlanarDiagram::unknot()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            q_polynomial(&testpd::positive_kink()).unwrap(),
            LaurentPoly::one()
        );
        let unlink2 = PlanarDiagram::new(vec![], 2).unwrap();
        assert_eq!(q_polynomial(&unlink2).unwrap(), split_factor());
        let split = PlanarDiagram::new(vec![[1, 1, 2, 2], [3, 3, 4, 4]], 0).unwrap();
        assert_eq!(q_polynomial(&split).unwrap(), split_factor());
    }

    #[test]
    fn hopf_value() {
        assert_eq!(
            q_polynomial(&testpd::hopf()).unwrap(),
            zpoly(&[(1, 2), (-1, -2), (0, 1)])
        );
    }

    #[test]
    fn trefoil_and_figure_eight_values() {
        let q31 = zpoly(&[(2, 2), (1, 2), (0, -3)]);
        assert_eq!(q_polynomial(&testpd::trefoil()).unwrap(), q31);
        // Q is blind to mirroring.
        assert_eq!(q_polynomial(&testpd::trefoil().mirror()).unwrap(), q31);
        assert_eq!(
            q_polynomial(&testpd::figure_eight()).unwrap(),
            zpoly(&[(3, 2), (2, 4), (1, -2), (0, -3)])
        );
    }

    #[test]
    fn multiplicative_under_connected_sum() {
        let sum = testpd::trefoil().connected_sum(&testpd::trefoil().mirror());
        let q31 = q_polynomial(&testpd::trefoil()).unwrap();
        assert_eq!(q_polynomial(&sum).unwrap(), &q31 * &q31);
    }

    #[test]
    fn budget_failure_is_reported() {
        assert_eq!(
            q_polynomial_with_budget(&testpd::figure_eight(), 0),
            Err(QError::BudgetExceeded(0))
        );
    }

    #[test]
    fn value_at_two_is_squared_determinant() {
        // Q(2) = det^2 across the small zoo (dets 1, 3, 5, 2, 0).
        for (d, det) in [
            (PlanarDiagram::unknot(), 1i128),
            (testpd::trefoil(), 3),
            (testpd::figure_eight(), 5),
            (testpd::hopf(), 2),
            (PlanarDiagram::new(vec![], 2).unwrap(), 0),
        ] {
            let q = q_polynomial(&d).unwrap();
            assert_eq!(eval_at_two(&q), det * det);
        }
    }

    fn eval_at_two(p: &LaurentPoly) -> i128 {
        // exact: multiply through by 2^{-min exponent}
        let (lo, _) = p.span().unwrap_or((0, 0));
        let shift = (-lo).max(0) as u32;
        let scaled: i128 = p
            .terms()
            .into_iter()
            .map(|(e, c)| c * 2i128.pow((e + shift as i64) as u32))
            .sum();
        let denom = 2i128.pow(shift);
        assert_eq!(scaled % denom, 0, "Q(2) should be an integer here");
        scaled / denom
    }
}
