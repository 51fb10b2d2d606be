//! Exact-arithmetic invariants of knots and links, computed from planar
//! diagrams, plus a deduction engine that composes band-surgery obstructions
//! into certified intervals for banding distances.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`] — sparse Laurent polynomials over `i128`, two small quotient
//!   rings used for exact evaluation at roots of unity and at the golden
//!   ratio point, Smith normal form and exact symmetric signatures over the
//!   integers.
//! * [`diagram`] — planar diagrams (PD codes) with free-loop bookkeeping,
//!   orientation tracing, smoothing/switching surgery, Reidemeister
//!   simplification, canonical codes, and checkerboard face structure.
//! * [`notation`] — parsing and rendering of PD literals and knot
//!   expressions, tangle/braid constructions, and the bundled knot table.
//! * [`invariants`] — Kauffman bracket and Jones polynomial, the unoriented
//!   `Q` polynomial, Goeritz forms with the signature correction, and the
//!   derived quantities (determinant, double-cover homology, Arf).
//! * [`bounds`] — obstruction rules and the fixpoint deduction engine that
//!   turns invariants into intervals for banding distances.
//! * [`verify`] — reproducibility suites that recompute every bundled
//!   reference value from scratch.

pub mod algebra;
pub mod bounds;
pub mod diagram;
pub mod invariants;
pub mod notation;
pub mod par;
pub mod verify;
