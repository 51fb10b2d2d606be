//! Goeritz form of a checkerboard-colored diagram, corrected per
//! Gordon–Litherland so the signature, determinant, and first homology of
//! the double branched cover all come from one small integer matrix.
//!
//! Conventions, pinned by the unit tests below: the white face class is the
//! one containing the region counterclockwise of the first crossing's
//! under-in strand. A crossing whose white quadrants sit clockwise of the
//! under-strand entries gets `eta = +1`, the other kind `-1`; it counts
//! toward the correction term exactly when `eta` agrees with the crossing
//! sign. Then `signature = sig(G') - mu` on the Goeritz matrix `G'` with one
//! white face deleted.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::{determinant, smith_normal_form, symmetric_signature, to_bigint_matrix};
use crate::diagram::{DiagramError, PlanarDiagram};

/// Everything read off the reduced Goeritz matrix.
#[derive(Debug, Clone)]
pub struct GoeritzData {
    /// The reduced (one face deleted) Goeritz matrix over the white faces.
    pub matrix: Vec<Vec<i64>>,
    /// Gordon–Litherland correction term.
    pub correction: i64,
    /// Link signature under the canonical orientation.
    pub signature: i64,
    /// `|det G'|`: the link determinant.
    pub determinant: BigInt,
    /// Invariant factors (non-unit, zeros included) of the first homology of
    /// the double branched cover.
    pub h1_factors: Vec<BigInt>,
}

/// Compute the Goeritz data of a connected diagram (or the 0-crossing
/// unknot).
pub fn goeritz(d: &PlanarDiagram) -> Result<GoeritzData, DiagramError> {
    if d.crossing_count() == 0 {
        if d.free_loops() != 1 {
            return Err(DiagramError::Disconnected);
        }
        return Ok(GoeritzData {
            matrix: vec![],
            correction: 0,
            signature: 0,
            determinant: BigInt::from(1),
            h1_factors: vec![],
        });
    }

    let cb = d.checkerboard()?;
    let orientation = d.orientation();

    let white_faces: Vec<usize> = (0..cb.faces.face_count)
        .filter(|&f| cb.white[f])
        .collect();
    let index_of: HashMap<usize, usize> = white_faces
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();

    let m = white_faces.len();
    let mut g = vec![vec![0i64; m]; m];
    let mut correction = 0i64;

    for c in 0..d.crossing_count() {
        let qf = cb.faces.quadrant_face[c];
        let whites: Vec<usize> = (0..4).filter(|&k| cb.white[qf[k]]).collect();
        let eta: i64 = match whites.as_slice() {
            [0, 2] => 1,
            [1, 3] => -1,
            _ => unreachable!("checkerboard colors alternate around a crossing"),
        };
        if eta == orientation.signs[c] as i64 {
            correction += eta;
        }
        let (f1, f2) = (qf[whites[0]], qf[whites[1]]);
        if f1 != f2 {
            let (i, j) = (index_of[&f1], index_of[&f2]);
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }

    // Delete the last white face.
    g.truncate(m - 1);
    for row in &mut g {
        row.truncate(m - 1);
    }

    let gb = to_bigint_matrix(&g);
    let signature = symmetric_signature(&gb) - correction;
    let det = determinant(&gb).abs();
    let h1_factors = smith_normal_form(&gb).nontrivial_factors();

    Ok(GoeritzData {
        matrix: g,
        correction,
        signature,
        determinant: det,
        h1_factors,
    })
}

/// Signature of the link presented by a connected diagram.
pub fn signature(d: &PlanarDiagram) -> Result<i64, DiagramError> {
    Ok(goeritz(d)?.signature)
}

/// Determinant of the link presented by a connected diagram.
pub fn link_determinant(d: &PlanarDiagram) -> Result<BigInt, DiagramError> {
    Ok(goeritz(d)?.determinant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testpd;

    #[test]
    fn unknot_diagrams_have_zero_signature() {
        for d in [
            PlanarDiagram::unknot(),
            testpd::positive_kink(),
            testpd::positive_kink().mirror(),
        ] {
            let gz = goeritz(&d).unwrap();
            assert_eq!(gz.signature, 0, "{d:?}");
            assert_eq!(gz.determinant, BigInt::from(1));
            assert!(gz.h1_factors.is_empty());
        }
    }

    #[test]
    fn trefoil_signature_matches_chirality() {
        // The bundled trefoil is left-handed (writhe -3): signature +2.
        let left = goeritz(&testpd::trefoil()).unwrap();
        assert_eq!(left.signature, 2);
        assert_eq!(left.determinant, BigInt::from(3));
        assert_eq!(left.h1_factors, vec![BigInt::from(3)]);

        let right = goeritz(&testpd::trefoil().mirror()).unwrap();
        assert_eq!(right.signature, -2);
        assert_eq!(right.determinant, BigInt::from(3));
    }

    #[test]
    fn figure_eight_is_balanced() {
        let gz = goeritz(&testpd::figure_eight()).unwrap();
        assert_eq!(gz.signature, 0);
        assert_eq!(gz.determinant, BigInt::from(5));
        assert_eq!(gz.h1_factors, vec![BigInt::from(5)]);
    }

    #[test]
    fn hopf_signatures() {
        // The bundled Hopf diagram orients to linking number -1.
        assert_eq!(goeritz(&testpd::hopf()).unwrap().signature, 1);
        assert_eq!(goeritz(&testpd::hopf().mirror()).unwrap().signature, -1);
        assert_eq!(
            goeritz(&testpd::hopf()).unwrap().determinant,
            BigInt::from(2)
        );
    }

    #[test]
    fn signature_adds_under_connected_sum() {
        let t = testpd::trefoil();
        let sums = [
            t.connected_sum(&t),
            t.connected_sum(&t.mirror()),
            t.connected_sum(&testpd::figure_eight()),
        ];
        let expect = [4, 0, 2];
        for (d, want) in sums.iter().zip(expect) {
            assert_eq!(goeritz(d).unwrap().signature, want, "{d:?}");
        }
    }

    #[test]
    fn granny_and_square_homology() {
        let t = testpd::trefoil();
        let granny = goeritz(&t.connected_sum(&t)).unwrap();
        assert_eq!(granny.determinant, BigInt::from(9));
        assert_eq!(
            granny.h1_factors,
            vec![BigInt::from(3), BigInt::from(3)]
        );
    }

    #[test]
    fn split_diagrams_are_rejected() {
        let split = PlanarDiagram::new(vec![[1, 1, 2, 2], [3, 3, 4, 4]], 0).unwrap();
        assert!(goeritz(&split).is_err());
        let two_loops = PlanarDiagram::new(vec![], 2).unwrap();
        assert!(goeritz(&two_loops).is_err());
    }
}
