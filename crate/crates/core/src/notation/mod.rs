//! Text notations: PD codes, knot expressions, and the bundled knot table.
//!
//! The PD grammar is `PD[X(a,b,c,d), ...]` with arbitrary whitespace; `PD[]`
//! denotes the zero-crossing unknot.  Each `X(a,b,c,d)` lists the four arc
//! labels counterclockwise from the incoming under-strand, matching
//! [`crate::diagram::Crossing`].

mod expr;
mod pd;
mod table;
mod tangle;

pub mod catalog;

pub use expr::{parse_expr, KnotExpr};
pub use pd::{parse_pd, render_pd};
pub use table::{load_knot_table, KnotEntry, KnotTable};
pub use tangle::{braid_closure, hopf_link, km_diagram, montesinos, rational_knot, rational_tangle, Tangle};

use crate::diagram::DiagramError;

#[derive(Debug, thiserror::Error)]
pub enum NotationError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown knot name {0:?}")]
    UnknownName(String),
    #[error("connected sum operands must be knots, but {name} has {components} components")]
    SumOfLink { name: String, components: usize },
    #[error("cannot render: {0}")]
    Unrenderable(String),
    #[error("table line {line}: {msg}")]
    Table { line: usize, msg: String },
    #[error("duplicate table entry {0:?}")]
    DuplicateName(String),
    #[error("reading {path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
