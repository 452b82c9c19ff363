//! The front-word type, its parser, and classical invariants.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised by front-word parsing, validation, and invariants.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrontError {
    /// A front must contain at least one event.
    #[error("front word is empty")]
    Empty,
    /// A token is not of the form `L<i>`, `R<i>`, `X<i>`.
    #[error("bad token {token:?} at token index {at}")]
    BadToken {
        /// The offending token text.
        token: String,
        /// 0-based token index.
        at: usize,
    },
    /// An event's position is out of range for the strand count at its time.
    #[error("event {event} at index {at} is out of range with {strands} open strands")]
    BadPosition {
        /// Rendered event text.
        event: String,
        /// 0-based event index.
        at: usize,
        /// Open strand count immediately before the event.
        strands: usize,
    },
    /// The word ends with strands still open.
    #[error("front word ends with {0} strands still open")]
    OpenEnd(usize),
    /// The operation requires a single-component front.
    #[error("operation requires a knot front, but this front has {0} components")]
    MultiComponent(usize),
    /// A half-front must end with exactly two strands open.
    #[error("half-front ends with {0} strands open (exactly 2 required)")]
    BadHalfEnd(usize),
    /// An index argument is out of range.
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),
}

/// Convenience alias for front results.
pub type FrontResult<T> = Result<T, FrontError>;

/// Event kinds in canonical tie-break order (`L < X < R`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EventKind {
    /// Left cusp: opens two strands.
    Left,
    /// Crossing of two adjacent strands.
    Cross,
    /// Right cusp: closes two adjacent strands.
    Right,
}

/// One Morse event of a front at a 1-based strand position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrontEvent {
    /// `L<i>`: a left cusp inserting new strands at positions `i, i+1`.
    Left(usize),
    /// `R<i>`: a right cusp closing strands `i, i+1`.
    Right(usize),
    /// `X<i>`: strands `i` and `i+1` cross.
    Cross(usize),
}

impl FrontEvent {
    /// The event's 1-based strand position.
    pub fn position(&self) -> usize {
        match *self {
            FrontEvent::Left(i) | FrontEvent::Right(i) | FrontEvent::Cross(i) => i,
        }
    }

    /// The event kind.
    pub fn kind(&self) -> EventKind {
        match self {
            FrontEvent::Left(_) => EventKind::Left,
            FrontEvent::Cross(_) => EventKind::Cross,
            FrontEvent::Right(_) => EventKind::Right,
        }
    }

    /// Strand-count change caused by the event.
    pub fn delta(&self) -> isize {
        match self {
            FrontEvent::Left(_) => 2,
            FrontEvent::Right(_) => -2,
            FrontEvent::Cross(_) => 0,
        }
    }

    /// The same kind of event at a different position.
    pub fn with_position(self, p: usize) -> Self {
        match self {
            FrontEvent::Left(_) => FrontEvent::Left(p),
            FrontEvent::Right(_) => FrontEvent::Right(p),
            FrontEvent::Cross(_) => FrontEvent::Cross(p),
        }
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrontEvent::Left(i) => write!(f, "L{i}"),
            FrontEvent::Right(i) => write!(f, "R{i}"),
            FrontEvent::Cross(i) => write!(f, "X{i}"),
        }
    }
}

/// A validated closed front word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrontWord {
    events: Vec<FrontEvent>,
}

/// Checks event positions against the running strand count; returns the
/// terminal strand count.
fn check_events(events: &[FrontEvent]) -> FrontResult<usize> {
    if events.is_empty() {
        return Err(FrontError::Empty);
    }
    let mut k = 0usize;
    for (at, e) in events.iter().enumerate() {
        let i = e.position();
        let ok = match e {
            FrontEvent::Left(_) => i >= 1 && i <= k + 1,
            FrontEvent::Right(_) | FrontEvent::Cross(_) => i >= 1 && i + 1 <= k,
        };
        if !ok {
            return Err(FrontError::BadPosition {
                event: e.to_string(),
                at,
                strands: k,
            });
        }
        k = (k as isize + e.delta()) as usize;
    }
    Ok(k)
}

impl FrontWord {
    /// Validates an event sequence into a front word.
    pub fn new(events: Vec<FrontEvent>) -> FrontResult<Self> {
        match check_events(&events)? {
            0 => Ok(Self { events }),
            open => Err(FrontError::OpenEnd(open)),
        }
    }

    /// The event sequence.
    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    /// Number of events.
    pub fn len(&self) -> usize {
        self.events.len()
    }

    /// Always false: valid fronts are nonempty.
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Number of crossings.
    pub fn n_crossings(&self) -> usize {
        self.events
            .iter()
            .filter(|e| e.kind() == EventKind::Cross)
            .count()
    }

    /// Number of left cusps.
    pub fn n_left_cusps(&self) -> usize {
        self.events
            .iter()
            .filter(|e| e.kind() == EventKind::Left)
            .count()
    }

    /// Number of right cusps.
    pub fn n_right_cusps(&self) -> usize {
        self.events
            .iter()
            .filter(|e| e.kind() == EventKind::Right)
            .count()
    }

    /// Total cusp count (left + right).
    pub fn n_cusps(&self) -> usize {
        self.n_left_cusps() + self.n_right_cusps()
    }

    /// Open strand count immediately before each event (same length as
    /// [`events`](Self::events)).
    pub fn strands_before(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.events.len());
        let mut k = 0isize;
        for e in &self.events {
            out.push(k as usize);
            k += e.delta();
        }
        out
    }

    /// The traced structure: arcs, junctions, orientations, components.
    pub(crate) fn trace(&self) -> Trace {
        Trace::build(self)
    }

    /// Number of link components.
    pub fn n_components(&self) -> usize {
        self.trace().n_components
    }

    /// Sign of each crossing (in event order of the `X` events) under the
    /// traced orientation: positive iff the two strands run the same
    /// horizontal direction.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let tr = self.trace();
        tr.crossings
            .iter()
            .map(|x| {
                if tr.arc_east[x.in_upper] == tr.arc_east[x.in_lower] {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Writhe of the front under the traced orientation (equals the writhe
    /// of the smoothing).
    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    /// The Thurston-Bennequin invariant `writhe - #RightCusp` of a knot
    /// front.
    pub fn tb(&self) -> FrontResult<i64> {
        let comps = self.n_components();
        if comps != 1 {
            return Err(FrontError::MultiComponent(comps));
        }
        Ok(self.writhe() - self.n_right_cusps() as i64)
    }

    /// The rotation number of a knot front as the unordered pair
    /// `(-|r|, |r|)`; fronts are unoriented, so only the pair is defined.
    pub fn rot_pair(&self) -> FrontResult<(i64, i64)> {
        let tr = self.trace();
        if tr.n_components != 1 {
            return Err(FrontError::MultiComponent(tr.n_components));
        }
        let diff = tr.down_cusps as i64 - tr.up_cusps as i64;
        debug_assert!(diff % 2 == 0, "cusp parity");
        let r = (diff / 2).abs();
        Ok((-r, r))
    }

    /// The front rotated by a half turn in the plane: event order reverses,
    /// cusps swap handedness, and positions flip top-to-bottom.
    pub fn rotated(&self) -> FrontWord {
        let counts = self.strands_before();
        let mut events = Vec::with_capacity(self.events.len());
        for (j, e) in self.events.iter().enumerate().rev() {
            let k = counts[j];
            events.push(match *e {
                // The pair born at {i, i+1} of k+2 strands flips to start at
                // (k+2)-i, and is closed by a right cusp in the rotation.
                FrontEvent::Left(i) => FrontEvent::Right(k + 2 - i),
                FrontEvent::Right(i) => FrontEvent::Left(k - i),
                FrontEvent::Cross(i) => FrontEvent::Cross(k - i),
            });
        }
        FrontWord::new(events).expect("rotation preserves validity")
    }

    /// Legendrian stabilization: replaces a point on strand `position`
    /// (just before event `event_index`; pass `len()` for the right end of
    /// the word — only valid when strands remain open there) with a zigzag.
    /// Decreases `tb` by 1 and shifts the rotation number by `±1` (`up`
    /// selects the variant). Not a Legendrian move.
    pub fn stabilized(&self, event_index: usize, position: usize, up: bool) -> FrontResult<Self> {
        if event_index > self.events.len() {
            return Err(FrontError::IndexOutOfRange(event_index));
        }
        let k = if event_index == self.events.len() {
            0
        } else {
            self.strands_before()[event_index]
        };
        if position < 1 || position > k {
            return Err(FrontError::IndexOutOfRange(position));
        }
        let zig = if up {
            // New cusp pair above the strand; the strand dips up.
            [FrontEvent::Left(position), FrontEvent::Right(position + 1)]
        } else {
            [FrontEvent::Left(position + 1), FrontEvent::Right(position)]
        };
        let mut events = self.events.clone();
        events.splice(event_index..event_index, zig);
        FrontWord::new(events)
    }
}

/// Renders events as space-separated tokens.
fn fmt_events(events: &[FrontEvent], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, e) in events.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl fmt::Display for FrontWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_events(&self.events, f)
    }
}

impl std::str::FromStr for FrontWord {
    type Err = FrontError;
    fn from_str(s: &str) -> FrontResult<Self> {
        FrontWord::new(tokenize(s)?)
    }
}

impl Serialize for FrontWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FrontWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Parses a front word from text: whitespace-separated `L<i>`/`R<i>`/`X<i>`
/// tokens; `#` starts a comment running to end of line.
pub fn parse_front(text: &str) -> FrontResult<FrontWord> {
    text.parse()
}

/// Tokenizes front-word text into events (no closure validation).
fn tokenize(text: &str) -> FrontResult<Vec<FrontEvent>> {
    let mut events = Vec::new();
    let mut at = 0usize;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let bad = || FrontError::BadToken {
                token: tok.to_owned(),
                at,
            };
            let (head, digits) = tok.split_at(1);
            let i: usize = digits.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            events.push(match head {
                "L" | "l" => FrontEvent::Left(i),
                "R" | "r" => FrontEvent::Right(i),
                "X" | "x" => FrontEvent::Cross(i),
                _ => return Err(bad()),
            });
            at += 1;
        }
    }
    Ok(events)
}

/// Which side a half-front is meant to occupy in a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockSide {
    /// Opens from nothing on the left; two strands exit to the right.
    Left,
    /// Mirror role: meant to be rotated onto the right side.
    Right,
}

/// A front prefix leaving exactly two open strands at its right boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfFront {
    events: Vec<FrontEvent>,
    side: BlockSide,
}

impl HalfFront {
    /// Validates an event sequence as a half-front.
    pub fn new(events: Vec<FrontEvent>, side: BlockSide) -> FrontResult<Self> {
        match check_events(&events)? {
            2 => Ok(Self { events, side }),
            open => Err(FrontError::BadHalfEnd(open)),
        }
    }

    /// Parses a half-front from front-word text.
    pub fn parse(text: &str, side: BlockSide) -> FrontResult<Self> {
        Self::new(tokenize(text)?, side)
    }

    /// The event sequence.
    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    /// The side tag.
    pub fn side(&self) -> BlockSide {
        self.side
    }

    /// Closes the two open strands with a right cusp.
    pub fn closure(&self) -> FrontWord {
        let mut events = self.events.clone();
        events.push(FrontEvent::Right(1));
        FrontWord::new(events).expect("half-front closure is valid")
    }

    /// Writhe of the closure (cusp closures add no crossings).
    pub fn writhe(&self) -> i64 {
        self.closure().writhe()
    }
}

impl fmt::Display for HalfFront {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_events(&self.events, f)
    }
}

/// One traced crossing: the arcs entering at positions `i` (upper) and
/// `i+1` (lower).
#[derive(Clone, Copy, Debug)]
pub(crate) struct TracedCrossing {
    /// Event index of the `X` event.
    pub event: usize,
    /// Arc entering from the left at the upper position.
    pub in_upper: usize,
    /// Arc entering from the left at the lower position.
    pub in_lower: usize,
    /// Arc leaving to the right at the upper position (continuation of
    /// `in_lower`).
    pub out_upper: usize,
    /// Arc leaving to the right at the lower position (continuation of
    /// `in_upper`).
    pub out_lower: usize,
}

/// One traced cusp.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TracedCusp {
    /// Event index of the cusp event.
    pub event: usize,
    /// True for a left cusp.
    pub left: bool,
    /// The upper arc at the cusp.
    pub upper: usize,
    /// The lower arc at the cusp.
    pub lower: usize,
}

/// Where an arc terminates.
#[derive(Clone, Copy, Debug)]
enum ArcEnd {
    /// Cusp junction: (cusp index, is-upper-arc).
    Cusp(usize, bool),
    /// Crossing junction: (crossing index, is-upper-side).
    Crossing(usize, bool),
    /// Unset sentinel during construction.
    Open,
}

/// The traced structure of a front: arcs with directions, crossings, cusps,
/// and component labels.
pub(crate) struct Trace {
    pub crossings: Vec<TracedCrossing>,
    pub cusps: Vec<TracedCusp>,
    /// Per arc: true if the traversal runs west-to-east along it.
    pub arc_east: Vec<bool>,
    /// Per arc: component index.
    pub arc_comp: Vec<usize>,
    pub n_components: usize,
    /// Cusps traversed downward / upward (summed over all components).
    pub down_cusps: usize,
    pub up_cusps: usize,
    /// Per crossing (event order): component of the upper/lower entering arc.
    pub comp_of_crossing: Vec<(usize, usize)>,
}

impl Trace {
    fn build(word: &FrontWord) -> Trace {
        let mut crossings = Vec::new();
        let mut cusps = Vec::new();
        let mut west_end: Vec<ArcEnd> = Vec::new(); // junction at the arc's west end
        let mut east_end: Vec<ArcEnd> = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        let new_arc = |west_end: &mut Vec<ArcEnd>, east_end: &mut Vec<ArcEnd>| -> usize {
            west_end.push(ArcEnd::Open);
            east_end.push(ArcEnd::Open);
            west_end.len() - 1
        };
        for (at, e) in word.events.iter().enumerate() {
            match *e {
                FrontEvent::Left(i) => {
                    let a = new_arc(&mut west_end, &mut east_end);
                    let b = new_arc(&mut west_end, &mut east_end);
                    let c = cusps.len();
                    cusps.push(TracedCusp {
                        event: at,
                        left: true,
                        upper: a,
                        lower: b,
                    });
                    west_end[a] = ArcEnd::Cusp(c, true);
                    west_end[b] = ArcEnd::Cusp(c, false);
                    cur.splice(i - 1..i - 1, [a, b]);
                }
                FrontEvent::Right(i) => {
                    let (a, b) = (cur[i - 1], cur[i]);
                    let c = cusps.len();
                    cusps.push(TracedCusp {
                        event: at,
                        left: false,
                        upper: a,
                        lower: b,
                    });
                    east_end[a] = ArcEnd::Cusp(c, true);
                    east_end[b] = ArcEnd::Cusp(c, false);
                    cur.drain(i - 1..i + 1);
                }
                FrontEvent::Cross(i) => {
                    let (u, l) = (cur[i - 1], cur[i]);
                    let ou = new_arc(&mut west_end, &mut east_end);
                    let ol = new_arc(&mut west_end, &mut east_end);
                    let x = crossings.len();
                    crossings.push(TracedCrossing {
                        event: at,
                        in_upper: u,
                        in_lower: l,
                        out_upper: ou,
                        out_lower: ol,
                    });
                    east_end[u] = ArcEnd::Crossing(x, true);
                    east_end[l] = ArcEnd::Crossing(x, false);
                    west_end[ou] = ArcEnd::Crossing(x, true);
                    west_end[ol] = ArcEnd::Crossing(x, false);
                    cur[i - 1] = ou;
                    cur[i] = ol;
                }
            }
        }
        debug_assert!(cur.is_empty());

        let n_arcs = west_end.len();
        let mut arc_east = vec![false; n_arcs];
        let mut arc_comp = vec![usize::MAX; n_arcs];
        let (mut down, mut up) = (0usize, 0usize);
        let mut n_components = 0usize;
        for start in 0..n_arcs {
            if arc_comp[start] != usize::MAX {
                continue;
            }
            let comp = n_components;
            n_components += 1;
            // Trace from `start` heading east.
            let (mut arc, mut east) = (start, true);
            loop {
                arc_comp[arc] = comp;
                arc_east[arc] = east;
                if east {
                    match east_end[arc] {
                        ArcEnd::Crossing(x, upper) => {
                            // The upper in-arc continues as the lower
                            // out-arc and vice versa.
                            let xr = &crossings[x];
                            arc = if upper { xr.out_lower } else { xr.out_upper };
                        }
                        ArcEnd::Cusp(c, upper) => {
                            // U-turn at a right cusp; arriving on the upper
                            // branch means the traversal passes downward.
                            if upper {
                                down += 1;
                            } else {
                                up += 1;
                            }
                            let cr = &cusps[c];
                            arc = if upper { cr.lower } else { cr.upper };
                            east = false;
                        }
                        ArcEnd::Open => unreachable!("closed front"),
                    }
                } else {
                    match west_end[arc] {
                        ArcEnd::Crossing(x, upper) => {
                            let xr = &crossings[x];
                            arc = if upper { xr.in_lower } else { xr.in_upper };
                        }
                        ArcEnd::Cusp(c, upper) => {
                            if upper {
                                down += 1;
                            } else {
                                up += 1;
                            }
                            let cr = &cusps[c];
                            arc = if upper { cr.lower } else { cr.upper };
                            east = true;
                        }
                        ArcEnd::Open => unreachable!("closed front"),
                    }
                }
                if arc == start && east {
                    break;
                }
            }
        }
        let comp_of_crossing = crossings
            .iter()
            .map(|x| (arc_comp[x.in_upper], arc_comp[x.in_lower]))
            .collect();
        Trace {
            crossings,
            cusps,
            arc_east,
            arc_comp,
            n_components,
            down_cusps: down,
            up_cusps: up,
            comp_of_crossing,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> FrontWord {
        parse_front(text).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["L1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L2 R2 R1"] {
            assert_eq!(w(text).to_string(), text);
        }
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let word = parse_front("# an eye\n L1\t R1 # trailing\n\n").unwrap();
        assert_eq!(word.to_string(), "L1 R1");
    }

    #[test]
    fn bad_tokens_are_rejected() {
        for text in ["Q1", "L", "L0", "Lx", "1L", "L1 R1 z9"] {
            assert!(matches!(
                parse_front(text),
                Err(FrontError::BadToken { .. })
            ));
        }
        assert_eq!(parse_front(""), Err(FrontError::Empty));
    }

    #[test]
    fn position_violations_are_rejected() {
        assert!(matches!(
            parse_front("L1 R2"),
            Err(FrontError::BadPosition { at: 1, .. })
        ));
        assert!(matches!(
            parse_front("L2"),
            Err(FrontError::BadPosition { at: 0, .. })
        ));
        assert!(matches!(
            parse_front("L1 X2 R1"),
            Err(FrontError::BadPosition { at: 1, .. })
        ));
        assert_eq!(parse_front("L1"), Err(FrontError::OpenEnd(2)));
        assert!(matches!(
            parse_front("L1 R1 R1"),
            Err(FrontError::BadPosition { at: 2, .. })
        ));
    }

    #[test]
    fn standard_unknot_invariants() {
        let u = w("L1 R1");
        assert_eq!(u.n_cusps(), 2);
        assert_eq!(u.n_crossings(), 0);
        assert_eq!(u.n_components(), 1);
        assert_eq!(u.writhe(), 0);
        assert_eq!(u.tb().unwrap(), -1);
        assert_eq!(u.rot_pair().unwrap(), (0, 0));
    }

    #[test]
    fn fish_invariants() {
        // The two branches of a single eye crossing once: the once-stabilized
        // unknot, with one negative (antiparallel) crossing.
        let fish = w("L1 X1 R1");
        assert_eq!(fish.n_components(), 1);
        assert_eq!(fish.crossing_signs(), vec![-1]);
        assert_eq!(fish.writhe(), -1);
        assert_eq!(fish.tb().unwrap(), -2);
        assert_eq!(fish.rot_pair().unwrap(), (-1, 1));
    }

    #[test]
    fn trefoil_invariants() {
        let t = w("L1 L3 X2 X2 X2 R1 R1");
        assert_eq!(t.n_cusps(), 4);
        assert_eq!(t.n_crossings(), 3);
        assert_eq!(t.n_components(), 1);
        assert_eq!(t.crossing_signs(), vec![1, 1, 1]);
        assert_eq!(t.writhe(), 3);
        assert_eq!(t.tb().unwrap(), 1);
        assert_eq!(t.rot_pair().unwrap(), (0, 0));
    }

    #[test]
    fn multi_component_fronts() {
        let stacked = w("L1 L3 R3 R1");
        assert_eq!(stacked.n_components(), 2);
        assert_eq!(stacked.tb(), Err(FrontError::MultiComponent(2)));
        let nested = w("L1 L2 R2 R1");
        assert_eq!(nested.n_components(), 2);
    }

    #[test]
    fn clasp_crossings_are_negative() {
        // Two eyes clasped: both crossings between oppositely-directed
        // strands.
        let clasp = w("L1 L3 X2 X2 R3 R1");
        assert_eq!(clasp.n_components(), 2);
        assert_eq!(clasp.crossing_signs(), vec![-1, -1]);
        assert_eq!(clasp.writhe(), -2);
    }

    #[test]
    fn stabilization_drops_tb() {
        let u = w("L1 R1");
        for up in [true, false] {
            let s = u.stabilized(1, 1, up).unwrap();
            assert_eq!(s.tb().unwrap(), -2);
            assert_eq!(s.rot_pair().unwrap(), (-1, 1));
            let ss = s.stabilized(1, 1, up).unwrap();
            assert_eq!(ss.tb().unwrap(), -3);
        }
    }

    #[test]
    fn stabilization_bounds_checked() {
        let u = w("L1 R1");
        assert!(u.stabilized(9, 1, true).is_err());
        assert!(u.stabilized(1, 3, true).is_err());
        // At the very end of the word no strands are open.
        assert!(u.stabilized(2, 1, true).is_err());
    }

    #[test]
    fn rotation_is_an_involution() {
        for text in ["L1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L2 R2 R1", "L1 L3 X2 X2 R3 R1"] {
            let word = w(text);
            assert_eq!(word.rotated().rotated(), word);
            // Rotation preserves all the counting invariants.
            let r = word.rotated();
            assert_eq!(r.n_crossings(), word.n_crossings());
            assert_eq!(r.n_cusps(), word.n_cusps());
            assert_eq!(r.writhe(), word.writhe());
            assert_eq!(r.n_components(), word.n_components());
        }
    }

    #[test]
    fn trefoil_rotates_to_itself() {
        let t = w("L1 L3 X2 X2 X2 R1 R1");
        assert_eq!(t.rotated(), t);
    }

    #[test]
    fn half_front_closure() {
        let half = HalfFront::parse("L1 L3 X2 X2 X2 R1", BlockSide::Left).unwrap();
        assert_eq!(half.closure(), w("L1 L3 X2 X2 X2 R1 R1"));
        assert_eq!(half.writhe(), 3);
        assert_eq!(
            HalfFront::parse("L1 R1", BlockSide::Left),
            Err(FrontError::BadHalfEnd(0))
        );
    }

    #[test]
    fn serde_round_trip() {
        let t = w("L1 L3 X2 X2 X2 R1 R1");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#""L1 L3 X2 X2 X2 R1 R1""#);
        let back: FrontWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<FrontWord>(r#""L1 R9""#).is_err());
    }
}
