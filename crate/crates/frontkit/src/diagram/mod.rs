//! Knot and link diagrams as combinatorial maps.
//!
//! A diagram is stored as a quadrivalent map: each crossing owns four darts
//! (half-edges) listed counterclockwise, an involution `alpha` pairs darts
//! into edges, a per-crossing flag records which axis passes over, and
//! per-dart orientation flags record the direction of travel. Crossing-free
//! unknot components are kept as a bare count (`free_loops`); their nesting
//! is intentionally not represented.
//!
//! Faces are the orbits of `d -> sigma(alpha(d))`. The face orbit containing
//! dart `d` is the region clockwise-adjacent to the ray of `d`; equivalently
//! the corner between rays `d` and `sigma(d)` belongs to the orbit of
//! `sigma(d)`. Connected planar maps satisfy `V - E + F = 2`, which is
//! checked on construction.
//!
//! Two ambient surfaces are supported. On the sphere all faces are alike; on
//! the plane one face is distinguished as the outer (unbounded) region and is
//! tracked through move surgery.

mod bracket;
mod build;
mod canon;
mod map;
mod pd;

pub use bracket::{kauffman_bracket, kauffman_bracket_raw, BracketPolynomials, BRACKET_CROSSING_LIMIT};
pub use build::{build_map, emit_pd, BuildError};
pub use canon::{canonical_key, CanonicalKey};
pub use map::{Dart, DiagramError, DiagramMap, DiagramResult, Face, Faces, Surface};
pub use pd::{parse_pd, parse_pd_line, parse_pd_lines, PdCode, PdCrossing, PdError};
