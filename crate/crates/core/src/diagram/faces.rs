//! Complementary regions of a connected diagram and their checkerboard
//! coloring.
//!
//! Faces are computed combinatorially as orbits of the map `dart ↦
//! rotate(partner(dart))`: following an arc to its other end and turning one
//! quadrant counterclockwise walks the boundary of a single region. The
//! Euler characteristic `n - 2n + F = 2` is enforced, so non-planar PD codes
//! (which are expressible in the notation but bound no diagram in the plane)
//! are rejected here rather than producing garbage downstream.

use super::{DiagramError, PlanarDiagram};

/// Faces of a diagram, indexed by the quadrants that meet them.
#[derive(Debug, Clone)]
pub struct Faces {
    /// Face index of the quadrant counterclockwise of each dart:
    /// `quadrant_face[c][k]` is the region between slots `k` and `k+1`.
    pub quadrant_face: Vec<[usize; 4]>,
    pub face_count: usize,
}

/// A checkerboard coloring of the faces. `white` is the color class of face
/// 0 (the region at the first quadrant of the first crossing).
#[derive(Debug, Clone)]
pub struct Checkerboard {
    pub faces: Faces,
    /// Color of each face; `true` = white.
    pub white: Vec<bool>,
}

pub fn faces(d: &PlanarDiagram) -> Result<Faces, DiagramError> {
    if d.crossing_count() == 0 {
        return Err(DiagramError::NoCrossings);
    }
    if !d.is_connected() {
        return Err(DiagramError::Disconnected);
    }
    let n = d.crossing_count();
    let occ = d.arc_occurrences();
    // Orbit of dart (c,s) under rotate∘partner bounds the face that sits
    // counterclockwise of slot s at c, i.e. quadrant (s-1) mod 4... we index
    // quadrant k by the dart (c, (k+1)%4) in its orbit.
    let mut dart_face = vec![[usize::MAX; 4]; n];
    let mut face_count = 0;
    for c0 in 0..n {
        for s0 in 0..4 {
            if dart_face[c0][s0] != usize::MAX {
                continue;
            }
            let id = face_count;
            face_count += 1;
            let (mut c, mut s) = (c0, s0);
            loop {
                dart_face[c][s] = id;
                let (pc, ps) = d.arc_partner(&occ, (c, s));
                c = pc;
                s = (ps + 1) % 4;
                if (c, s) == (c0, s0) {
                    break;
                }
            }
        }
    }
    let chi = n as i64 - 2 * n as i64 + face_count as i64;
    if chi != 2 {
        return Err(DiagramError::NonPlanar(chi));
    }
    let quadrant_face: Vec<[usize; 4]> = dart_face
        .iter()
        .map(|df| [df[1], df[2], df[3], df[0]])
        .collect();
    Ok(Faces {
        quadrant_face,
        face_count,
    })
}

pub fn checkerboard(d: &PlanarDiagram) -> Result<Checkerboard, DiagramError> {
    let faces = faces(d)?;
    let mut color: Vec<Option<bool>> = vec![None; faces.face_count];
    // Adjacent quadrants at a crossing are separated by a strand, so they
    // alternate colors; opposite quadrants agree. BFS from face 0.
    let mut queue = std::collections::VecDeque::new();
    color[faces.quadrant_face[0][0]] = Some(true);
    queue.push_back(faces.quadrant_face[0][0]);
    while let Some(f) = queue.pop_front() {
        let fc = color[f].unwrap();
        for qf in &faces.quadrant_face {
            for k in 0..4 {
                if qf[k] == f {
                    let g = qf[(k + 1) % 4];
                    match color[g] {
                        None => {
                            color[g] = Some(!fc);
                            queue.push_back(g);
                        }
                        Some(gc) => {
                            if gc == fc {
                                return Err(DiagramError::NonPlanar(0));
                            }
                        }
                    }
                }
            }
        }
    }
    let white: Vec<bool> = color.into_iter().map(|c| c.unwrap_or(true)).collect();
    Ok(Checkerboard { faces, white })
}

#[cfg(test)]
mod tests {
    use super::super::testpd::*;
    use super::super::{DiagramError, PlanarDiagram};

    #[test]
    fn kink_has_three_faces() {
        assert_eq!(positive_kink().faces().unwrap().face_count, 3);
    }

    #[test]
    fn trefoil_has_five_faces() {
        assert_eq!(trefoil().faces().unwrap().face_count, 5);
        assert_eq!(figure_eight().faces().unwrap().face_count, 6);
        assert_eq!(hopf().faces().unwrap().face_count, 4);
    }

    #[test]
    fn nonplanar_code_is_rejected() {
        // The "virtual Hopf link" X(1,2,1,2) closes up on a torus, not a
        // sphere.
        let d = PlanarDiagram::new(vec![[1, 2, 1, 2]], 0).unwrap();
        assert!(matches!(d.faces(), Err(DiagramError::NonPlanar(_))));
    }

    #[test]
    fn split_input_is_rejected() {
        let mut crossings = vec![[1u32, 1, 2, 2]];
        crossings.push([3, 3, 4, 4]);
        let d = PlanarDiagram::new(crossings, 0).unwrap();
        assert_eq!(d.faces().unwrap_err(), DiagramError::Disconnected);
        assert_eq!(
            PlanarDiagram::unknot().faces().unwrap_err(),
            DiagramError::NoCrossings
        );
    }

    #[test]
    fn checkerboard_alternates() {
        for d in [trefoil(), figure_eight(), hopf(), positive_kink()] {
            let cb = d.checkerboard().unwrap();
            for qf in &cb.faces.quadrant_face {
                for k in 0..4 {
                    assert_ne!(cb.white[qf[k]], cb.white[qf[(k + 1) % 4]]);
                    assert_eq!(cb.white[qf[k]], cb.white[qf[(k + 2) % 4]]);
                }
            }
        }
    }
}
