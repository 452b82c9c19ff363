//! Legendrian fronts as Morse event words.
//!
//! A front is stored as a left-to-right sequence of events on numbered
//! strand positions, position 1 being the highest strand: `L<i>` opens two
//! new strands at positions `i, i+1` (a left cusp), `R<i>` closes the
//! adjacent strands `i, i+1` (a right cusp), and `X<i>` crosses strands
//! `i` and `i+1`. A valid word starts and ends with zero strands.
//!
//! Fronts are unoriented; operations that need an orientation (rotation
//! number, crossing signs) fix one by tracing components deterministically
//! and report orientation-dependent quantities accordingly — the rotation
//! number as an unordered `±` pair.
//!
//! At a crossing the strand descending from position `i` to `i + 1` is the
//! over-strand; this makes the smoothing of a front fully determined with no
//! stored over/under data. A crossing is positive exactly when its two
//! strands run in the same horizontal direction.

pub mod canonical;
pub mod smooth;
pub mod word;

pub use canonical::front_canonical;
pub use smooth::smooth;
pub use word::{
    parse_front, BlockSide, EventKind, FrontError, FrontEvent, FrontResult, FrontWord, HalfFront,
};
