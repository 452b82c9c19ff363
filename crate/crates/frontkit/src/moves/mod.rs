//! Reidemeister moves on smooth diagrams, Legendrian moves on fronts, and
//! breadth-first search over the states they generate.
//!
//! Two move systems live here:
//!
//! * **Smooth moves** ([`SmoothMove`]) edit a [`DiagramMap`] in place:
//!   kink removal/insertion (R1), clasp removal/insertion (R2), and the
//!   triangle slide (R3). Every move is a local dart surgery; the result is
//!   re-validated from scratch, so a bug in a wiring table surfaces as an
//!   error rather than a corrupt map.
//! * **Legendrian moves** ([`LegendrianMove`]) edit a [`FrontWord`]. These
//!   are the front-level counterparts (cusp kinks, cusp-crossing clasps, and
//!   the triple-crossing slide), applied through commutation transport so
//!   that the three participating events need not be literally adjacent in
//!   the word.
//!
//! The search layer ([`search`](self::search)) runs breadth-first
//! explorations under a [`MovePolicy`]: hardness certification
//! (no simplifying sequence exists under the policy) and triangle-slide
//! closures (every diagram reachable by R3 alone).
//!
//! Planar diagrams (a marked outer face) gate moves that would use the
//! unbounded region: a monogon, bigon, or triangle that *is* the outer face
//! cannot be contracted, while insertions into the outer face carry an extra
//! choice of which new region faces infinity. Spherical diagrams ignore all
//! of that: searches on [`Surface::Sphere`](crate::diagram::Surface) strip
//! the outer marker first.

pub mod leg;
pub mod search;
pub mod smooth;

use serde::Serialize;

use crate::diagram::{Dart, DiagramError};
use crate::front::word::FrontError;

pub use leg::{apply_leg_move, enumerate_leg_moves, is_trivial_front};
pub use search::{
    is_strongly_hard_leg, is_strongly_hard_smooth, is_weakly_hard_leg, is_weakly_hard_smooth,
    riii_closure_leg, riii_closure_smooth, HardnessOutcome, HardnessVerdict, LegClosure,
    SearchLimits, SearchStats, SmoothClosure,
};
pub use smooth::{apply_smooth_move, enumerate_smooth_moves, inverse_smooth_move};

/// Which moves a search or enumeration is allowed to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MovePolicy {
    /// Only moves that do not increase the crossing number: kink and clasp
    /// removals plus triangle slides. (For fronts: the analogous cusp-level
    /// removals plus the crossing slide.)
    NonIncreasing,
    /// Any move whose *result* has at most this many crossings. This admits
    /// insertions as long as they stay under the budget.
    Budget(usize),
}

impl MovePolicy {
    /// Does a move pass the policy, given whether it is an insertion and the
    /// crossing count its result would have?
    pub(crate) fn admits(&self, is_up: bool, result: usize) -> bool {
        match *self {
            MovePolicy::NonIncreasing => !is_up,
            MovePolicy::Budget(b) => result <= b,
        }
    }
}

/// A Reidemeister move site on a smooth diagram.
///
/// Sites are named by darts of the map they were enumerated on; applying a
/// move to any other map (or after another move) is *stale* and is rejected
/// by re-validation rather than silently corrupting the diagram.
///
/// Variant order encodes the preference used when sorting enumerations:
/// removals before the slide before insertions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SmoothMove {
    /// Remove a kink: contract the monogon face whose single dart is given.
    R1Down {
        /// The unique dart of the monogon face.
        monogon: Dart,
    },
    /// Remove a clasp: contract a bigon face whose two strands are parallel
    /// (one passes over the other twice). Named by the smaller dart of the
    /// bigon's two-dart orbit.
    R2Down {
        /// The smaller dart of the bigon face orbit.
        bigon: Dart,
    },
    /// Slide a strand across a crossing: re-route the three edges of a
    /// triangle face whose strand layers permit it. Named by the smallest
    /// dart of the triangle's three-dart orbit. Self-inverse up to the new
    /// triangle's name.
    R3 {
        /// The smallest dart of the triangle face orbit.
        triangle: Dart,
    },
    /// Insert a kink into the edge leaving dart `at`'s corner: the strand
    /// through `at` acquires a small loop bulging into `at`'s face.
    R1Up {
        /// The dart whose edge is subdivided; the loop bulges into this
        /// dart's face.
        at: Dart,
        /// Chirality: `true` inserts a positive (writhe `+1`) kink.
        positive: bool,
        /// Only meaningful when `at`'s face is the marked outer face of a
        /// planar diagram: `false` draws the loop small (the outer face
        /// keeps the unbounded region), `true` throws the loop around the
        /// rest of the diagram (the new monogon becomes the outer face).
        outer_loop: bool,
    },
    /// Insert a kink into a crossing-free circle (a free loop), producing
    /// the one-crossing unknot diagram. This is the only insertion available
    /// on a diagram with no darts, and is restricted to that case.
    R1UpLoop {
        /// Chirality: `true` makes the positive kink.
        positive: bool,
        /// For planar diagrams, which face of the resulting one-crossing
        /// diagram is outer: `Some(0)` the non-kink lobe, `Some(1)` the
        /// two-corner outer-looking region, `Some(2)` the kink monogon.
        /// `None` leaves the result spherical (no outer face).
        outer_slot: Option<u8>,
    },
    /// Push one boundary strand of a face across another: the strand seen
    /// by `push` slides over (or under) the strand seen by `target`,
    /// creating a clasp of two new crossings. `push` and `target` must lie
    /// on the same face orbit; `target == alpha(push)` pushes a strand
    /// across its own other side (a curl). Ordered pairs are distinct sites:
    /// `(a, b)` and `(b, a)` finger from opposite ends.
    R2Up {
        /// Dart on the face whose strand gets pushed.
        push: Dart,
        /// Dart on the same face across whose strand we push.
        target: Dart,
        /// Layering: `true` pushes `push`'s strand over `target`'s.
        over: bool,
        /// Only meaningful when the common face is the marked outer face of
        /// a planar diagram: the insertion splits that face in two, and this
        /// selects which piece stays unbounded — `false` the piece bordered
        /// by `push`, `true` the piece bordered by `target`.
        outer_split: bool,
    },
}

impl SmoothMove {
    /// Is this an insertion (crossing-increasing) move?
    pub fn is_up(&self) -> bool {
        matches!(
            self,
            SmoothMove::R1Up { .. } | SmoothMove::R1UpLoop { .. } | SmoothMove::R2Up { .. }
        )
    }

    /// Crossing count after applying this move to a diagram with `n` crossings.
    pub fn result_crossings(&self, n: usize) -> usize {
        match self {
            SmoothMove::R1Down { .. } => n - 1,
            SmoothMove::R2Down { .. } => n - 2,
            SmoothMove::R3 { .. } => n,
            SmoothMove::R1Up { .. } | SmoothMove::R1UpLoop { .. } => n + 1,
            SmoothMove::R2Up { .. } => n + 2,
        }
    }
}

impl std::fmt::Display for SmoothMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SmoothMove::R1Down { monogon } => write!(f, "R1-(d{monogon})"),
            SmoothMove::R2Down { bigon } => write!(f, "R2-(d{bigon})"),
            SmoothMove::R3 { triangle } => write!(f, "R3(d{triangle})"),
            SmoothMove::R1Up {
                at,
                positive,
                outer_loop,
            } => {
                let s = if *positive { '+' } else { '-' };
                let o = if *outer_loop { ",outer" } else { "" };
                write!(f, "R1{s}(d{at}{o})")
            }
            SmoothMove::R1UpLoop {
                positive,
                outer_slot,
            } => {
                let s = if *positive { '+' } else { '-' };
                match outer_slot {
                    Some(k) => write!(f, "R1{s}(loop,outer{k})"),
                    None => write!(f, "R1{s}(loop)"),
                }
            }
            SmoothMove::R2Up {
                push,
                target,
                over,
                outer_split,
            } => {
                let l = if *over { "over" } else { "under" };
                let o = if *outer_split { ",split" } else { "" };
                write!(f, "R2+(d{push}>{l}>d{target}{o})")
            }
        }
    }
}

/// A Legendrian Reidemeister move site on a front word.
///
/// Removal sites name three event occurrences by index into the word's
/// event list; the events need not be adjacent — application first gathers
/// them by elementary commutations (transporting positions), then rewrites
/// the gathered block. A site is only reported when that gathering succeeds,
/// so `apply` on a freshly enumerated site cannot fail.
///
/// Variant numbering picks one of the finitely many local pictures for each
/// move; see [`leg`](self::leg) for the exact patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LegendrianMove {
    /// Destabilize a front kink: a left cusp, a crossing, and a right cusp
    /// forming a small loop cancel, removing one crossing and one cusp pair.
    /// Variant 0 matches `[L(p), X(p+1), R(p)]`, variant 1 matches
    /// `[L(p+1), X(p), R(p+1)]`.
    Lr1Down {
        /// Ascending occurrence indices of the `L`, `X`, `R` events.
        indices: [usize; 3],
        /// Which local picture (0 or 1).
        variant: u8,
    },
    /// Cancel a cusp-crossing clasp: a cusp slides back through two
    /// crossings. Variants 0–3 match `[L(q+1), X(q), X(q+1)] -> [L(q)]`,
    /// `[L(q), X(q+1), X(q)] -> [L(q+1)]`, `[X(q), X(q+1), R(q)] -> [R(q+1)]`,
    /// `[X(q+1), X(q), R(q+1)] -> [R(q)]`.
    Lr2Down {
        /// Ascending occurrence indices of the three events.
        indices: [usize; 3],
        /// Which local picture (0–3).
        variant: u8,
    },
    /// Slide a strand across a crossing of the other two: rewrites
    /// `[X(a), X(a+1), X(a)]` as `[X(a+1), X(a), X(a+1)]` (variant 0) or the
    /// reverse (variant 1). Crossing count is preserved.
    Lr3 {
        /// Ascending occurrence indices of the three crossings.
        indices: [usize; 3],
        /// Direction (0 or 1).
        variant: u8,
    },
    /// Stabilize: insert a front kink `[L(p), X(p+1), R(p)]` (variant 0) or
    /// `[L(p+1), X(p), R(p+1)]` (variant 1) at a slice. Adds one crossing;
    /// preserves the Thurston–Bennequin number.
    Lr1Up {
        /// Event index before which the three new events are inserted
        /// (`0..=len`).
        slice: usize,
        /// Strand position `p` (requires `p <= ` strand count at the slice).
        strand: usize,
        /// Which local picture (0 or 1).
        variant: u8,
    },
    /// Slide a cusp through an adjacent strand, creating two crossings: the
    /// inverse of [`Lr2Down`](Self::Lr2Down) anchored at an existing cusp
    /// occurrence. Variant `v` inverts `Lr2Down` variant `v`.
    Lr2Up {
        /// Occurrence index of the cusp event being slid.
        index: usize,
        /// Which local picture (0–3).
        variant: u8,
    },
}

impl LegendrianMove {
    /// Is this an insertion (crossing-increasing) move?
    pub fn is_up(&self) -> bool {
        matches!(
            self,
            LegendrianMove::Lr1Up { .. } | LegendrianMove::Lr2Up { .. }
        )
    }

    /// Crossing count after applying this move to a front with `n` crossings.
    pub fn result_crossings(&self, n: usize) -> usize {
        match self {
            LegendrianMove::Lr1Down { .. } => n - 1,
            LegendrianMove::Lr2Down { .. } => n - 2,
            LegendrianMove::Lr3 { .. } => n,
            LegendrianMove::Lr1Up { .. } => n + 1,
            LegendrianMove::Lr2Up { .. } => n + 2,
        }
    }
}

impl std::fmt::Display for LegendrianMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LegendrianMove::Lr1Down { indices, variant } => {
                write!(
                    f,
                    "LR1-(e{},e{},e{};v{variant})",
                    indices[0], indices[1], indices[2]
                )
            }
            LegendrianMove::Lr2Down { indices, variant } => {
                write!(
                    f,
                    "LR2-(e{},e{},e{};v{variant})",
                    indices[0], indices[1], indices[2]
                )
            }
            LegendrianMove::Lr3 { indices, variant } => {
                write!(
                    f,
                    "LR3(e{},e{},e{};v{variant})",
                    indices[0], indices[1], indices[2]
                )
            }
            LegendrianMove::Lr1Up {
                slice,
                strand,
                variant,
            } => write!(f, "LR1+(s{slice},p{strand};v{variant})"),
            LegendrianMove::Lr2Up { index, variant } => {
                write!(f, "LR2+(e{index};v{variant})")
            }
        }
    }
}

/// Errors from applying moves or running searches.
#[derive(Debug, thiserror::Error)]
pub enum MoveError {
    /// The move names darts or events that do not form the required site on
    /// this diagram — usually a site enumerated on a different (earlier)
    /// state.
    #[error("stale or malformed move site: {0}")]
    Stale(String),
    /// The site exists but the move's preconditions fail there.
    #[error("move not applicable: {0}")]
    NotApplicable(&'static str),
    /// A planar move could not carry the outer-face marker to the result.
    #[error("planar move lost track of the outer face")]
    OuterFaceLost,
    /// The surgery produced an invalid diagram (a wiring bug, surfaced by
    /// re-validation).
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// A front rewrite produced an invalid word.
    #[error(transparent)]
    Front(#[from] FrontError),
}

/// Convenience alias for move results.
pub type MoveResult<T> = Result<T, MoveError>;
