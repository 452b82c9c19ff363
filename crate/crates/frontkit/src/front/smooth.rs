//! Resolution of a front into a smooth diagram.
//!
//! Cusps are smoothed into ordinary turns, so only crossings survive as
//! vertices of the resulting map. At a crossing the descending strand
//! (moving from position `i` down to `i+1`) passes over. Slots are
//! assigned counterclockwise with the over-strand on axis 1:
//!
//! ```text
//!         slot 1 (NW)   slot 0 (NE)
//!                  \     /
//!                   \   /
//!                    \ /      over: NW -> SE (descending)
//!                    / \      under: SW -> NE
//!                   /   \
//!         slot 2 (SW)   slot 3 (SE)
//! ```
//!
//! The outer face is the unbounded region of the front drawing. It is
//! located by sweeping the events while tracking, per gap between adjacent
//! strands, which planar region the gap belongs to (union-find; regions
//! merge around right cusps). Components without any crossing become free
//! loops of the map; since free loops carry no darts, such components are
//! treated as transparent by the region sweep so the face structure of the
//! dart-carrying part comes out right.

use super::word::{FrontEvent, FrontWord};
use crate::diagram::{Dart, DiagramMap};

/// Union-find over planar region ids.
struct Regions {
    parent: Vec<usize>,
}

impl Regions {
    fn new() -> Self {
        Regions { parent: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// An open strand end during the sweep: either a dart of an already-built
/// crossing or one end of a wire created at a left cusp.
#[derive(Clone, Copy)]
enum Token {
    Stub(Dart),
    Wire(usize),
}

/// Smooths `front` into a planar diagram map.
///
/// The result's outer face is the unbounded region of the front; writhe,
/// crossing count, and component count agree with the front's own
/// accounting. Components without crossings become free loops.
pub fn smooth(front: &FrontWord) -> DiagramMap {
    let trace = front.trace();
    let n = trace.crossings.len();

    // Components that own at least one crossing; the rest are free loops.
    let mut has_crossing = vec![false; trace.n_components];
    for &(a, b) in &trace.comp_of_crossing {
        has_crossing[a] = true;
        has_crossing[b] = true;
    }
    let n_free = has_crossing.iter().filter(|h| !**h).count();
    if n == 0 {
        return DiagramMap::trivial(n_free);
    }

    // Left-cusp events of crossing-free components are transparent to the
    // region sweep below.
    let mut transparent = vec![false; front.len()];
    for cusp in &trace.cusps {
        if cusp.left {
            transparent[cusp.event] = !has_crossing[trace.arc_comp[cusp.upper]];
        }
    }

    // --- Edge pairing (alpha) by sweeping open strand ends. ---
    let mut alpha: Vec<Dart> = vec![usize::MAX; 4 * n];
    let mut mate: Vec<usize> = Vec::new();
    let mut attach: Vec<Option<Dart>> = Vec::new();
    let mut cur: Vec<Token> = Vec::new();
    let mut free_seen = 0usize;
    let mut next_crossing = 0usize;

    let join = |alpha: &mut Vec<Dart>, d1: Dart, d2: Dart| {
        alpha[d1] = d2;
        alpha[d2] = d1;
    };
    // Plugging a token into a crossing dart either records a wire
    // attachment or closes an edge between two darts.
    macro_rules! plug {
        ($token:expr, $dart:expr) => {
            match $token {
                Token::Stub(d) => join(&mut alpha, d, $dart),
                Token::Wire(e) => attach[e] = Some($dart),
            }
        };
    }

    for event in front.events() {
        match *event {
            FrontEvent::Left(i) => {
                let e1 = mate.len();
                let e2 = e1 + 1;
                mate.extend([e2, e1]);
                attach.extend([None, None]);
                cur.splice(i - 1..i - 1, [Token::Wire(e1), Token::Wire(e2)]);
            }
            FrontEvent::Right(i) => {
                let (t1, t2) = (cur[i - 1], cur[i]);
                cur.drain(i - 1..i + 1);
                match (t1, t2) {
                    (Token::Stub(d1), Token::Stub(d2)) => join(&mut alpha, d1, d2),
                    (Token::Stub(d), Token::Wire(e)) | (Token::Wire(e), Token::Stub(d)) => {
                        attach[e] = Some(d);
                    }
                    (Token::Wire(e1), Token::Wire(e2)) => {
                        if mate[e1] == e2 {
                            // A wire closing on itself: a crossing-free loop.
                            free_seen += 1;
                        } else {
                            let (m1, m2) = (mate[e1], mate[e2]);
                            mate[m1] = m2;
                            mate[m2] = m1;
                        }
                    }
                }
            }
            FrontEvent::Cross(i) => {
                let c = next_crossing;
                next_crossing += 1;
                plug!(cur[i - 1], 4 * c + 1);
                plug!(cur[i], 4 * c + 2);
                cur[i - 1] = Token::Stub(4 * c);
                cur[i] = Token::Stub(4 * c + 3);
            }
        }
    }
    debug_assert!(cur.is_empty());
    debug_assert_eq!(free_seen, n_free);

    // Resolve wires that got plugged into crossings at both ends.
    for e in 0..mate.len() {
        if let Some(d) = attach[e] {
            let other = attach[mate[e]].expect("closed front leaves no open wire");
            alpha[d] = other;
        }
    }
    debug_assert!(alpha.iter().all(|&d| d != usize::MAX));

    // --- Orientations from the traced traversal. ---
    let mut outgoing = vec![false; 4 * n];
    for (c, x) in trace.crossings.iter().enumerate() {
        outgoing[4 * c] = trace.arc_east[x.out_upper];
        outgoing[4 * c + 1] = !trace.arc_east[x.in_upper];
        outgoing[4 * c + 2] = !trace.arc_east[x.in_lower];
        outgoing[4 * c + 3] = trace.arc_east[x.out_lower];
    }

    // --- Outer face: sweep gaps between adjacent strands, tracking the
    // planar region each gap belongs to. Gap j lies below strand j (gap 0
    // is above everything). Transparent cusps do not split regions.
    let mut regions = Regions::new();
    let far_field = regions.fresh();
    let mut gaps: Vec<usize> = vec![far_field];
    let mut corners: Vec<(usize, Dart)> = Vec::new();
    let mut c = 0usize;
    for (at, event) in front.events().iter().enumerate() {
        match *event {
            FrontEvent::Left(i) => {
                let g = gaps[i - 1];
                let eye = if transparent[at] { g } else { regions.fresh() };
                gaps.splice(i - 1..i, [g, eye, g]);
            }
            FrontEvent::Right(i) => {
                // The middle gap's region is complete; the flanking gaps
                // merge east of the cusp.
                regions.union(gaps[i - 1], gaps[i + 1]);
                let g = gaps[i - 1];
                gaps.splice(i - 1..i + 2, [g]);
            }
            FrontEvent::Cross(i) => {
                let east = regions.fresh();
                corners.push((gaps[i - 1], 4 * c + 1)); // north
                corners.push((gaps[i], 4 * c + 2)); // west
                corners.push((gaps[i + 1], 4 * c + 3)); // south
                corners.push((east, 4 * c)); // east
                gaps[i] = east;
                c += 1;
            }
        }
    }
    let unbounded = regions.find(far_field);
    let outer = corners
        .iter()
        .filter(|(r, _)| regions.find(*r) == unbounded)
        .map(|&(_, d)| d)
        .min()
        .expect("every face of a front with crossings touches a corner");

    DiagramMap::new(alpha, vec![1; n], outgoing, n_free, Some(outer))
        .expect("smoothing a valid front yields a valid planar map")
}

#[cfg(test)]
mod tests {
    use super::super::word::parse_front;
    use super::*;
    use crate::diagram::Surface;

    fn sm(s: &str) -> DiagramMap {
        smooth(&parse_front(s).unwrap())
    }

    #[test]
    fn standard_unknot_smooths_to_a_trivial_loop() {
        let map = sm("L1 R1");
        assert_eq!(map.n_crossings(), 0);
        assert_eq!(map.free_loops(), 1);
        assert!(map.is_trivial_unlink());
    }

    #[test]
    fn nested_and_stacked_eyes_become_unlinks() {
        for s in ["L1 L2 R2 R1", "L1 L3 R3 R1", "L1 R1 L1 R1"] {
            let map = sm(s);
            assert_eq!(map.n_crossings(), 0, "{s}");
            assert_eq!(map.free_loops(), 2, "{s}");
        }
    }

    #[test]
    fn fish_smooths_to_a_negative_kink() {
        let map = sm("L1 X1 R1");
        assert_eq!(map.n_crossings(), 1);
        assert_eq!(map.writhe(), -1);
        assert_eq!(map.n_components(), 1);
        // One-crossing map: the west and east lobes are monogons and the
        // unbounded face has the two wrap edges on its boundary.
        let faces = map.faces();
        assert_eq!(faces.faces.len(), 3);
        let outer = map.outer_dart().unwrap();
        assert_eq!(faces.face_containing(outer).len(), 2);
    }

    #[test]
    fn trefoil_smoothing_matches_hand_resolution() {
        let map = sm("L1 L3 X2 X2 X2 R1 R1");
        assert_eq!(map.n_crossings(), 3);
        assert_eq!(map.n_components(), 1);
        assert_eq!(map.writhe(), 3);
        let faces = map.faces();
        let mut sizes: Vec<usize> = faces.faces.iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        // Two triangular eye faces, two bigons between consecutive
        // crossings, and the outer face bounded by the two wrap edges.
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        let outer = map.outer_dart().unwrap();
        assert_eq!(faces.face_containing(outer).len(), 2);
        // Validates as a planar map on the sphere and the plane.
        assert!(map.validate().is_ok());
    }

    #[test]
    fn writhe_and_component_count_agree_with_the_front() {
        for s in [
            "L1 R1",
            "L1 X1 R1",
            "L1 L3 X2 X2 X2 R1 R1",
            "L1 L3 X2 X2 X2 R2 R1",
            "L1 L3 X2 X2 R3 R1",
            "L1 L2 X3 R3 R1",
            "L1 L3 X2 R1 R1",
        ] {
            let front = parse_front(s).unwrap();
            let map = smooth(&front);
            assert_eq!(map.writhe(), front.writhe(), "writhe of {s}");
            assert_eq!(map.n_components(), front.n_components(), "components of {s}");
            assert_eq!(map.n_crossings(), front.n_crossings(), "crossings of {s}");
        }
    }

    #[test]
    fn tb_recomputes_from_the_smoothing() {
        for s in ["L1 R1", "L1 X1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L3 X2 X2 X2 R2 R1"] {
            let front = parse_front(s).unwrap();
            let map = smooth(&front);
            let independent = map.writhe() - front.n_right_cusps() as i64;
            assert_eq!(front.tb().unwrap(), independent, "tb of {s}");
        }
    }

    #[test]
    fn enclosing_eye_becomes_a_transparent_free_loop() {
        // A trefoil drawn inside a big crossing-free eye: the eye is a free
        // loop and must not affect the dart-level face structure.
        let plain = sm("L1 L3 X2 X2 X2 R1 R1");
        let nested = sm("L1 L2 L4 X3 X3 X3 R2 R2 R1");
        assert_eq!(nested.free_loops(), 1);
        assert_eq!(nested.n_crossings(), 3);
        assert_eq!(nested.writhe(), 3);
        assert_eq!(nested.outer_dart(), plain.outer_dart());
        let key_plain =
            crate::diagram::canonical_key(&plain, Surface::Plane).unwrap();
        let key_nested =
            crate::diagram::canonical_key(&nested, Surface::Plane).unwrap();
        // Keys differ only by the free-loop count in the prefix.
        assert_eq!(key_plain.words()[0], key_nested.words()[0]);
        assert_eq!(key_plain.words()[1] + 1, key_nested.words()[1]);
        assert_eq!(key_plain.words()[3..], key_nested.words()[3..]);
    }

    #[test]
    fn smoothing_respects_the_slope_over_rule() {
        // In the max-tb trefoil all crossings are positive: the descending
        // strand goes over and both strands head the same way.
        let map = sm("L1 L3 X2 X2 X2 R1 R1");
        for c in 0..map.n_crossings() {
            assert_eq!(map.crossing_sign(c), 1);
        }
        // The clasp's two crossings are negative.
        let clasp = sm("L1 L3 X2 X2 R3 R1");
        for c in 0..clasp.n_crossings() {
            assert_eq!(clasp.crossing_sign(c), -1);
        }
    }
}
