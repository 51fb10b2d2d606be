//! Built-in constructions for the prime knots through nine crossings.
//!
//! Each entry records a construction recipe rather than a frozen PD code:
//! a two-bridge fraction, a Montesinos presentation, or a braid word.  The
//! table generator rebuilds every diagram from these recipes, and the
//! identity of each recipe is pinned by the catalog audit test (determinant,
//! Jones class, and homology strata separate every candidate with the same
//! determinant and crossing budget).
//!
//! Chirality: `mirror` is set only where published data forces a specific
//! handedness (signatures or Jones evaluations of particular knots); for
//! every other entry the recipe's natural handedness is kept.

use crate::diagram::PlanarDiagram;

use super::tangle::{braid_closure, montesinos, rational_knot};
use super::{KnotEntry, KnotTable, NotationError};

/// Construction recipe for a catalog diagram.
#[derive(Debug, Clone, Copy)]
pub enum Build {
    /// Two-bridge knot with Schubert fraction p/q.
    Rational(i64, i64),
    /// Montesinos knot: rational tangle fractions plus extra half twists.
    Montesinos(&'static [(i64, i64)], i64),
    /// Closure of a braid word on the given number of strands.
    Braid(usize, &'static [i32]),
}

/// One prime knot: recipe, chirality fix, and published band data.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub build: Build,
    /// Mirror the constructed diagram to match the published handedness.
    pub mirror: bool,
    /// Unknotting number as an interval `[lo, hi]`.
    pub u: [u32; 2],
    /// H(2)-unknotting number, where published.
    pub u2: Option<u32>,
    /// Band-unknotting number, where published.
    pub bu: Option<u32>,
    /// Data note carried into the knot table.
    pub note: &'static str,
}

impl CatalogEntry {
    /// Build the diagram, applying the chirality fix.
    pub fn diagram(&self) -> PlanarDiagram {
        let d = match self.build {
            Build::Rational(p, q) => rational_knot(p, q).expect("catalog fraction"),
            Build::Montesinos(fractions, twists) => {
                montesinos(fractions, twists).expect("catalog tangle sum")
            }
            Build::Braid(strands, word) => braid_closure(strands, word).expect("catalog braid"),
        };
        if self.mirror {
            d.mirror()
        } else {
            d
        }
    }
}

const TABLE: &str = "Table 2";
const EXTRA: &str = "not in Table 2";
const AMBIG: &str = "paper table ambiguity";

macro_rules! row {
    ($name:literal, $build:expr, $mirror:expr, [$lo:literal, $hi:literal], $u2:literal, $bu:literal) => {
        CatalogEntry {
            name: $name,
            build: $build,
            mirror: $mirror,
            u: [$lo, $hi],
            u2: Some($u2),
            bu: Some($bu),
            note: TABLE,
        }
    };
}

use Build::{Braid, Montesinos as Mont, Rational as Rat};

/// Prime knots 3_1 .. 9_49 with band-surgery data.
pub const CATALOG: &[CatalogEntry] = &[
    row!("3_1", Rat(3, 1), true, [1, 1], 1, 1),
    row!("4_1", Rat(5, 2), false, [1, 1], 2, 2),
    row!("5_1", Rat(5, 1), true, [2, 2], 1, 1),
    CatalogEntry {
        name: "5_2",
        build: Rat(7, 3),
        mirror: false,
        u: [1, 1],
        u2: Some(1),
        bu: Some(1),
        note: EXTRA,
    },
    row!("6_1", Rat(9, 4), true, [1, 1], 1, 1),
    row!("6_2", Rat(11, 4), true, [1, 1], 1, 1),
    row!("6_3", Rat(13, 5), false, [1, 1], 2, 2),
    row!("7_1", Rat(7, 1), false, [3, 3], 1, 1),
    row!("7_2", Rat(11, 5), false, [1, 1], 1, 1),
    row!("7_3", Rat(13, 4), false, [2, 2], 1, 1),
    row!("7_4", Rat(15, 4), false, [2, 2], 1, 1),
    row!("7_5", Rat(17, 7), false, [2, 2], 2, 2),
    row!("7_6", Rat(19, 7), false, [1, 1], 1, 1),
    row!("7_7", Rat(21, 8), false, [1, 1], 2, 2),
    row!("8_1", Rat(13, 6), false, [1, 1], 2, 2),
    row!("8_2", Rat(17, 6), false, [2, 2], 2, 2),
    row!("8_3", Rat(17, 4), false, [2, 2], 1, 1),
    row!("8_4", Rat(19, 5), false, [2, 2], 1, 1),
    row!("8_5", Mont(&[(1, 3), (1, 3), (1, 2)], 0), false, [2, 2], 1, 1),
    row!("8_6", Rat(23, 10), false, [2, 2], 1, 1),
    row!("8_7", Rat(23, 9), false, [1, 1], 1, 1),
    row!("8_8", Rat(25, 9), false, [2, 2], 1, 1),
    row!("8_9", Rat(25, 7), false, [1, 1], 2, 2),
    row!("8_10", Mont(&[(1, 3), (2, 3), (1, 2)], 0), false, [2, 2], 1, 1),
    row!("8_11", Rat(27, 10), false, [1, 1], 1, 1),
    row!("8_12", Rat(29, 12), false, [2, 2], 2, 2),
    row!("8_13", Rat(29, 11), false, [1, 1], 2, 2),
    row!("8_14", Rat(31, 12), false, [1, 1], 1, 1),
    row!("8_15", Mont(&[(2, 3), (2, 3), (1, 2)], 0), false, [2, 2], 2, 2),
    row!("8_16", Braid(3, &[-2, 1, -2, 1, 1, -2, 1, 1]), false, [2, 2], 1, 1),
    row!("8_17", Braid(3, &[-2, -2, 1, -2, 1, -2, 1, 1]), false, [1, 1], 2, 2),
    row!("8_18", Braid(3, &[1, -2, 1, -2, 1, -2, 1, -2]), false, [2, 2], 3, 2),
    row!("8_19", Mont(&[(1, 3), (1, 3), (1, 2)], -1), false, [3, 3], 1, 1),
    row!("8_20", Mont(&[(1, 3), (2, 3), (1, 2)], -1), true, [1, 1], 1, 1),
    row!("8_21", Mont(&[(2, 3), (2, 3), (1, 2)], -1), true, [1, 1], 2, 2),
    row!("9_1", Rat(9, 1), false, [4, 4], 1, 1),
    row!("9_2", Rat(15, 7), false, [1, 1], 2, 2),
    row!("9_3", Rat(19, 6), false, [3, 3], 1, 1),
    row!("9_4", Rat(21, 5), false, [2, 2], 1, 1),
    row!("9_5", Rat(23, 6), false, [2, 2], 1, 1),
    row!("9_6", Rat(27, 11), false, [3, 3], 1, 1),
    row!("9_7", Rat(29, 13), false, [2, 2], 1, 1),
    row!("9_8", Rat(31, 11), false, [2, 2], 1, 1),
    row!("9_9", Rat(31, 9), false, [3, 3], 1, 1),
    row!("9_10", Rat(33, 10), false, [3, 3], 2, 2),
    row!("9_11", Rat(33, 14), false, [2, 2], 2, 2),
    row!("9_12", Rat(35, 13), false, [1, 1], 2, 2),
    row!("9_13", Rat(37, 10), false, [3, 3], 1, 1),
    row!("9_14", Rat(37, 14), false, [1, 1], 2, 2),
    row!("9_15", Rat(39, 16), false, [2, 2], 1, 1),
    row!("9_16", Mont(&[(1, 3), (1, 3), (1, 2)], 1), false, [3, 3], 2, 2),
    row!("9_17", Rat(39, 14), false, [2, 2], 1, 1),
    row!("9_18", Rat(41, 17), false, [2, 2], 2, 2),
    row!("9_19", Rat(41, 16), false, [1, 1], 1, 1),
    row!("9_20", Rat(41, 15), false, [2, 2], 2, 2),
    row!("9_21", Rat(43, 18), false, [1, 1], 1, 1),
    row!("9_22", Mont(&[(3, 5), (1, 3), (1, 2)], 0), false, [1, 1], 1, 1),
    CatalogEntry {
        name: "9_23",
        build: Rat(45, 19),
        mirror: false,
        u: [1, 2],
        u2: None,
        bu: None,
        note: AMBIG,
    },
    CatalogEntry {
        name: "9_24",
        build: Mont(&[(1, 3), (2, 3), (1, 2)], 1),
        mirror: false,
        u: [1, 2],
        u2: None,
        bu: None,
        note: AMBIG,
    },
    CatalogEntry {
        name: "9_25",
        build: Mont(&[(2, 5), (2, 3), (1, 2)], 0),
        mirror: false,
        u: [2, 2],
        u2: Some(2),
        bu: Some(2),
        note: EXTRA,
    },
    row!("9_26", Rat(47, 18), false, [1, 1], 1, 1),
    row!("9_27", Rat(49, 19), false, [1, 1], 1, 1),
    row!("9_28", Mont(&[(2, 3), (2, 3), (1, 2)], 1), false, [1, 1], 1, 1),
    row!("9_29", Braid(4, &[-2, 3, -2, 1, -2, 3, -2, -2, 1]), false, [2, 2], 1, 1),
    row!("9_30", Mont(&[(3, 5), (2, 3), (1, 2)], 0), false, [1, 1], 2, 2),
    row!("9_31", Rat(55, 21), false, [2, 2], 1, 1),
    row!("9_32", Braid(4, &[3, -2, 3, 1, -2, 1, -2, 1, 1]), false, [2, 2], 1, 1),
    row!("9_33", Braid(4, &[3, -2, 3, 1, -2, -2, 1, -2, 1]), false, [1, 1], 2, 2),
    row!("9_34", Braid(4, &[3, -2, 1, -2, 3, -2, 1, -2, 1]), false, [1, 1], 2, 2),
    row!("9_35", Mont(&[(1, 3), (1, 3), (1, 3)], 0), true, [3, 3], 2, 2),
    row!("9_36", Mont(&[(2, 5), (1, 3), (1, 2)], 0), false, [2, 2], 1, 1),
    row!("9_37", Mont(&[(2, 3), (2, 3), (1, 3)], 0), false, [2, 2], 2, 2),
    row!(
        "9_38",
        Braid(4, &[-3, -2, -2, -3, -1, -3, 2, -3, -1, -3, 2]),
        false,
        [3, 3],
        2,
        2
    ),
    row!(
        "9_39",
        Braid(4, &[-3, -2, 1, -2, -1, -3, -1, 2, 2, -3, -1]),
        false,
        [1, 1],
        2,
        2
    ),
    row!("9_40", Braid(4, &[3, -2, 3, 1, -2, 3, 1, -2, 1]), true, [2, 2], 2, 2),
    row!("9_42", Mont(&[(2, 5), (1, 3), (1, 2)], -1), true, [1, 1], 1, 1),
    row!("9_43", Mont(&[(3, 5), (1, 3), (1, 2)], -1), false, [2, 2], 1, 1),
    row!("9_44", Mont(&[(2, 5), (2, 3), (1, 2)], -1), false, [1, 1], 1, 1),
    row!("9_45", Mont(&[(3, 5), (2, 3), (1, 2)], -1), false, [1, 1], 1, 1),
    row!("9_46", Mont(&[(1, 3), (1, 3), (2, 3)], -1), false, [2, 2], 2, 2),
    row!("9_47", Braid(4, &[-3, 2, -3, 1, 2, -3, 1, 2, 1]), false, [2, 2], 2, 2),
    row!("9_48", Mont(&[(2, 3), (2, 3), (-1, 3)], 0), false, [2, 2], 2, 2),
    row!(
        "9_49",
        Braid(4, &[-3, -2, -1, -3, -1, -2, 3, -2, -3, 1, -2]),
        false,
        [3, 3],
        3,
        3
    ),
];

/// Composite table rows: expression, unknotting interval, H(2)-unknotting
/// number, band-unknotting number.  All carry the "Table 2" note.
pub const COMPOSITE_ROWS: &[(&str, [u32; 2], u32, u32)] = &[
    ("3_1#3_1", [2, 2], 2, 2),
    ("3_1!#3_1", [2, 2], 2, 2),
    ("3_1!#5_2", [2, 2], 2, 2),
    ("4_1#4_1", [2, 2], 2, 2),
    ("3_1#6_1", [2, 2], 2, 2),
    ("3_1!#6_1", [2, 2], 2, 2),
    ("3_1#6_2", [2, 2], 2, 2),
    ("3_1#6_3", [2, 2], 2, 2),
    ("3_1#5_1", [3, 3], 2, 2),
    ("3_1!#5_1", [2, 3], 2, 2),
    ("3_1#3_1#3_1", [3, 3], 3, 3),
    ("3_1!#3_1#3_1", [3, 3], 3, 3),
    ("4_1#5_1", [3, 3], 3, 3),
];

/// Look up a prime catalog entry by name.
pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Build the complete knot table: the unknot, every prime catalog entry,
/// and the composite rows (spliced from the primes already in the table).
/// The shipped data file is exactly `full_table().to_jsonl()`.
pub fn full_table() -> Result<KnotTable, NotationError> {
    let quads = |d: &PlanarDiagram| d.crossings().iter().map(|c| c.0).collect();
    let mut t = KnotTable::default();
    t.push(KnotEntry {
        name: "0_1".into(),
        pd: Vec::new(),
        components: 1,
        u: [0, 0],
        u2: Some(0),
        bu: Some(0),
        note: None,
    })?;
    for e in CATALOG {
        let d = e.diagram();
        t.push(KnotEntry {
            name: e.name.into(),
            pd: quads(&d),
            components: d.component_count() as u32,
            u: e.u,
            u2: e.u2,
            bu: e.bu,
            note: Some(e.note.into()),
        })?;
    }
    for &(expr, u, u2, bu) in COMPOSITE_ROWS {
        let d = super::parse_expr(expr)?.resolve(&t)?;
        t.push(KnotEntry {
            name: expr.into(),
            pd: quads(&d),
            components: d.component_count() as u32,
            u,
            u2: Some(u2),
            bu: Some(bu),
            note: Some(TABLE.into()),
        })?;
    }
    Ok(t)
}
