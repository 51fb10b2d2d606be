//! Jones polynomial via the bracket, written in the half-integer variable
//! `q = t^(1/2)`, plus its exact evaluations at the root-of-unity points the
//! banding obstructions read.

use crate::algebra::{Cyclo12, LaurentPoly};
use crate::diagram::PlanarDiagram;

use super::bracket::kauffman_bracket;

/// Jones polynomial of `d` under its canonical orientation, in `q`:
/// `V = (-A)^{-3w} <D>` followed by `A = q^{-1/2}`. Knots land in even
/// powers of `q` (integer powers of `t`); links may use odd ones.
pub fn jones(d: &PlanarDiagram) -> LaurentPoly {
    jones_with_writhe(d, d.writhe())
}

/// Jones polynomial `d` would have if its writhe were `w`.
///
/// The bracket ignores orientation, so the oriented smoothing of a positive
/// crossing is just the A-smoothing with writhe dropped by one, and a
/// crossing switch drops it by two. Skein-relation checks exploit this to
/// evaluate all three terms of the relation on diagrams cut from one
/// picture.
pub fn jones_with_writhe(d: &PlanarDiagram, w: i64) -> LaurentPoly {
    let bracket = kauffman_bracket(d);
    let sign = if w.rem_euclid(2) == 1 { -1 } else { 1 };
    bracket.mul_monomial(-3 * w, sign).map_exponents(|e| {
        assert!(e % 2 == 0, "writhe-normalized bracket has even exponents");
        -e / 2
    })
}

/// Exact evaluations of a Jones polynomial (in `q`) at the lattice points:
/// `t = e^{i pi/3}`, `t = -1`, and (for knots) `t = i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialValues {
    /// `V(e^{i pi/3})`, always of the form `± i^{c-1} (i sqrt3)^d`.
    pub at_omega: Cyclo12,
    /// `V(-1)`, the (possibly Gaussian) determinant evaluation.
    pub at_minus_one: Cyclo12,
    /// `V(i)` for knots (`None` for links), always `±1`.
    pub at_i: Option<Cyclo12>,
}

/// Evaluate an already-computed Jones polynomial.
pub fn evaluate_jones(v: &LaurentPoly, components: usize) -> SpecialValues {
    // q = x maps t to the primitive sixth root; q = x^3 = i maps t to -1.
    let at_omega = Cyclo12::eval_qpoly(v, 1);
    let at_minus_one = Cyclo12::eval_qpoly(v, 3);
    let at_i = (components == 1).then(|| {
        assert!(
            v.exponents_all_even(),
            "a knot's Jones polynomial is integral in t"
        );
        let t_poly = v.map_exponents(|e| e / 2);
        Cyclo12::eval_qpoly(&t_poly, 3)
    });
    SpecialValues {
        at_omega,
        at_minus_one,
        at_i,
    }
}

/// Shorthand: compute the Jones polynomial of `d` and evaluate it.
pub fn special_values(d: &PlanarDiagram) -> SpecialValues {
    evaluate_jones(&jones(d), d.component_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testpd;

    fn tpoly(terms: &[(i64, i128)]) -> LaurentPoly {
        // exponents given in t; double for q
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, c)))
    }

    #[test]
    fn unknot_and_curls_are_trivial() {
        assert_eq!(jones(&PlanarDiagram::unknot()), LaurentPoly::one());
        assert_eq!(jones(&testpd::positive_kink()), LaurentPoly::one());
        assert_eq!(jones(&testpd::positive_kink().mirror()), LaurentPoly::one());
    }

    #[test]
    fn trefoil_matches_table() {
        // The bundled trefoil is the left-handed one.
        assert_eq!(
            jones(&testpd::trefoil()),
            tpoly(&[(-4, -1), (-3, 1), (-1, 1)])
        );
        assert_eq!(
            jones(&testpd::trefoil().mirror()),
            tpoly(&[(4, -1), (3, 1), (1, 1)])
        );
    }

    #[test]
    fn figure_eight_matches_table() {
        let want = tpoly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        assert_eq!(jones(&testpd::figure_eight()), want);
        // Amphichiral: the mirror has the same polynomial.
        assert_eq!(jones(&testpd::figure_eight().mirror()), want);
    }

    #[test]
    fn hopf_orientation_and_value() {
        // The bundled Hopf diagram canonically orients to linking number -1.
        let d = testpd::hopf();
        assert_eq!(d.writhe(), -2);
        assert_eq!(
            jones(&d),
            LaurentPoly::from_terms([(-5, -1), (-1, -1)])
        );
    }

    #[test]
    fn value_at_one_counts_components() {
        for (d, c) in [
            (PlanarDiagram::unknot(), 1),
            (testpd::trefoil(), 1),
            (testpd::hopf(), 2),
            (PlanarDiagram::new(vec![[1, 1, 2, 2], [3, 3, 4, 4]], 0).unwrap(), 2),
        ] {
            assert_eq!(jones(&d).eval_at_one(), (-2i128).pow(c - 1));
        }
    }

    #[test]
    fn special_values_of_small_knots() {
        let tre = special_values(&testpd::trefoil());
        // V(3_1; omega) = -i sqrt3 for the left-handed trefoil.
        assert_eq!(tre.at_omega, -Cyclo12::i_sqrt3());
        assert_eq!(tre.at_minus_one, Cyclo12::from_int(-3));
        assert_eq!(tre.at_i, Some(Cyclo12::from_int(-1)));

        let fig8 = special_values(&testpd::figure_eight());
        assert_eq!(fig8.at_minus_one, Cyclo12::from_int(5));
        assert_eq!(fig8.at_i, Some(Cyclo12::from_int(-1)));

        let hopf = special_values(&testpd::hopf());
        assert_eq!(hopf.at_i, None);
        // -q^-5 - q^-1 at q = i: both terms are -(-i), so the value is 2i
        // and |V(-1)|^2 = 4 matches det(hopf) = 2.
        assert_eq!(hopf.at_minus_one, Cyclo12::im_unit() + Cyclo12::im_unit());
    }

    #[test]
    fn jones_multiplies_under_connected_sum() {
        let sum = testpd::trefoil().connected_sum(&testpd::figure_eight());
        let want = &jones(&testpd::trefoil()) * &jones(&testpd::figure_eight());
        assert_eq!(jones(&sum), want);
    }
}
