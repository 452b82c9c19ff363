//! Combinatorial toolkit for knot diagrams and Legendrian fronts.
//!
//! The crate is organized around two object kinds and the operations that
//! connect them:
//!
//! * [`diagram`] — knot/link diagrams as combinatorial maps (darts with a
//!   rotation system), PD-code parsing, canonical keys on the sphere and the
//!   plane, writhe/linking numbers, and the Kauffman bracket.
//! * [`front`] — Legendrian fronts as words of cusp/crossing events, their
//!   classical invariants, canonical forms, and the resolution into smooth
//!   diagrams.
//! * [`ruling`] — normal rulings of fronts: enumeration, the ruling
//!   polynomial, disk graphs, 0-resolutions, and the coloring-based
//!   obstruction helpers (switch candidates, color walks, split checks).
//! * [`moves`] — Reidemeister moves on diagrams and Legendrian moves on
//!   fronts, with deterministic breadth-first hardness searches.
//! * [`blocks`] — half-fronts ("building blocks") whose closures are
//!   move-locked unknots, and the spherical/planar compositions that grow
//!   hard diagrams from them.
//! * [`obstruct`] — tangle templates, tangle matching, switch-forcing
//!   bounds, and the batch screening pipeline for candidate diagrams.
//!
//! Conventions used throughout:
//!
//! * Strand positions in fronts count from the top: position 1 is the
//!   highest strand at a given x-slice.
//! * At a front crossing the strand of more negative slope (descending,
//!   position `i -> i+1`) is the over strand of the resolution.
//! * A crossing is positive when rotating the under-strand direction a
//!   quarter turn counterclockwise aligns it with the over-strand direction;
//!   equivalently `sign = det[v_over, v_under]`.
//! * `tb = writhe - (number of right cusps)`; the rotation number is
//!   reported as an unordered `±r` pair because fronts are stored
//!   unoriented.

pub mod diagram;
pub mod front;
pub mod moves;
pub mod poly;

pub use diagram::{DiagramMap, PdCode, Surface};
pub use front::FrontWord;
pub use poly::LaurentPoly;
