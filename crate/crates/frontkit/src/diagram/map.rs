//! The core combinatorial-map representation of a diagram.

use serde::Serialize;
use thiserror::Error;

/// A dart (half-edge) identifier: dart `4c + k` is slot `k` of crossing `c`,
/// slots listed counterclockwise.
pub type Dart = usize;

/// Errors raised by map construction and validation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    /// `alpha` is not a fixed-point-free involution of the dart set.
    #[error("alpha is not a fixed-point-free involution at dart {0}")]
    BadInvolution(Dart),
    /// An orientation flag contradicts strand continuity or edge direction.
    #[error("orientation flags are inconsistent at dart {0}")]
    BadOrientation(Dart),
    /// A connected component of the map fails the planar Euler count.
    #[error("map is not planar: component has {vertices} crossings, {edges} edges, {faces} faces")]
    NotPlanar {
        /// Crossings in the offending connected component.
        vertices: usize,
        /// Edges in the offending connected component.
        edges: usize,
        /// Faces counted in the offending connected component.
        faces: usize,
    },
    /// The operation requires a distinguished outer face but none is set.
    #[error("operation on the plane requires an outer face, but none is set")]
    MissingOuterFace,
    /// A dart index is out of range for this map.
    #[error("dart {0} is out of range")]
    DartOutOfRange(Dart),
    /// A component index is out of range for this map.
    #[error("component index {0} is out of range ({1} components)")]
    ComponentOutOfRange(usize, usize),
    /// The operation is defined only for diagrams with at least one crossing
    /// or one free loop.
    #[error("operation is not defined for the empty diagram")]
    EmptyDiagram,
    /// Crossing count exceeds a guard limit for an expensive operation.
    #[error("diagram has {crossings} crossings, above the {limit}-crossing guard for this operation")]
    TooLarge {
        /// Crossings in the diagram.
        crossings: usize,
        /// Guard limit of the operation.
        limit: usize,
    },
}

/// Convenience alias for diagram results.
pub type DiagramResult<T> = Result<T, DiagramError>;

/// Ambient surface for operations that care about the unbounded region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Surface {
    /// One-point compactification: all faces are interchangeable.
    Sphere,
    /// The plane: the map's distinguished outer face is the unbounded
    /// region, and moves may not sweep through it.
    Plane,
}

impl std::fmt::Display for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Surface::Sphere => write!(f, "sphere"),
            Surface::Plane => write!(f, "plane"),
        }
    }
}

impl std::str::FromStr for Surface {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sphere" | "s2" => Ok(Surface::Sphere),
            "plane" | "r2" | "disk" => Ok(Surface::Plane),
            other => Err(format!("unknown surface {other:?} (expected sphere|plane)")),
        }
    }
}

/// A face of the map: the darts of one orbit of `d -> sigma(alpha(d))`,
/// listed in traversal order starting from the smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts of the orbit in traversal order, rotated so the smallest is
    /// first.
    pub darts: Vec<Dart>,
}

impl Face {
    /// Number of edge-sides on the face boundary.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    /// True for the empty orbit (never produced by [`DiagramMap::faces`]).
    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Distinct crossings met along the boundary.
    pub fn crossings(&self) -> Vec<usize> {
        let mut cs: Vec<usize> = self.darts.iter().map(|d| d / 4).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }
}

/// All faces of a map, plus the dart -> face index lookup table.
#[derive(Clone, Debug)]
pub struct Faces {
    /// Faces sorted by their smallest dart.
    pub faces: Vec<Face>,
    /// `face_of[d]` is the index into `faces` of the orbit containing `d`.
    pub face_of: Vec<usize>,
}

impl Faces {
    /// The face orbit containing dart `d`.
    pub fn face_containing(&self, d: Dart) -> &Face {
        &self.faces[self.face_of[d]]
    }
}

/// A knot or link diagram as a combinatorial map. See the module docs for
/// the dart conventions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramMap {
    /// Edge involution on darts; `alpha[d]` is the other end of the edge.
    alpha: Vec<Dart>,
    /// Per crossing: 0 if slots {0,2} carry the over strand, 1 for {1,3}.
    over_axis: Vec<u8>,
    /// Per dart: true if the strand leaves the crossing through this dart.
    outgoing: Vec<bool>,
    /// Crossing-free unknot components (nesting not represented).
    free_loops: usize,
    /// A dart on the outer face, when a planar embedding is distinguished.
    outer: Option<Dart>,
}

impl DiagramMap {
    /// Assembles a map from raw parts and validates it.
    ///
    /// `alpha` must be a fixed-point-free involution on `4 * over_axis.len()`
    /// darts, `outgoing` must alternate across both edges and strand
    /// passages, and every connected component must be planar.
    pub fn new(
        alpha: Vec<Dart>,
        over_axis: Vec<u8>,
        outgoing: Vec<bool>,
        free_loops: usize,
        outer: Option<Dart>,
    ) -> DiagramResult<Self> {
        let map = Self {
            alpha,
            over_axis,
            outgoing,
            free_loops,
            outer,
        };
        map.validate()?;
        Ok(map)
    }

    /// The diagram with no crossings and `free_loops` circles.
    pub fn trivial(free_loops: usize) -> Self {
        Self {
            alpha: Vec::new(),
            over_axis: Vec::new(),
            outgoing: Vec::new(),
            free_loops,
            outer: None,
        }
    }

    /// Number of crossings.
    pub fn n_crossings(&self) -> usize {
        self.over_axis.len()
    }

    /// Number of darts (`4 *` crossings).
    pub fn n_darts(&self) -> usize {
        self.alpha.len()
    }

    /// Number of edges (half the darts).
    pub fn n_edges(&self) -> usize {
        self.alpha.len() / 2
    }

    /// Crossing-free unknot components.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Sets the free-loop count (used by surgery helpers).
    pub(crate) fn set_free_loops(&mut self, loops: usize) {
        self.free_loops = loops;
    }

    /// A dart on the distinguished outer face, if one is set.
    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    /// Distinguishes the face containing `dart` as the outer face.
    pub fn set_outer_dart(&mut self, dart: Option<Dart>) -> DiagramResult<()> {
        if let Some(d) = dart {
            if d >= self.n_darts() {
                return Err(DiagramError::DartOutOfRange(d));
            }
        }
        self.outer = dart;
        Ok(())
    }

    /// Distinguishes face number `index` (in [`faces`](Self::faces) order) as
    /// the outer face.
    pub fn set_outer_face(&mut self, index: usize) -> DiagramResult<()> {
        let faces = self.faces();
        if index >= faces.faces.len() {
            return Err(DiagramError::DartOutOfRange(index));
        }
        self.outer = Some(faces.faces[index].darts[0]);
        Ok(())
    }

    /// True when the map has neither crossings nor free loops.
    pub fn is_empty(&self) -> bool {
        self.n_crossings() == 0 && self.free_loops == 0
    }

    /// True when the diagram is a disjoint union of crossing-free circles
    /// (at least one).
    pub fn is_trivial_unlink(&self) -> bool {
        self.n_crossings() == 0 && self.free_loops > 0
    }

    /// The other end of the edge through `d`.
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    /// The next dart counterclockwise at the same crossing.
    pub fn sigma(&self, d: Dart) -> Dart {
        4 * (d / 4) + (d % 4 + 1) % 4
    }

    /// The previous dart counterclockwise (= next clockwise).
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        4 * (d / 4) + (d % 4 + 3) % 4
    }

    /// The dart where the strand entering at `d` continues out of the
    /// crossing (the opposite slot).
    pub fn strand_opposite(&self, d: Dart) -> Dart {
        4 * (d / 4) + (d % 4 + 2) % 4
    }

    /// Crossing that owns dart `d`.
    pub fn crossing_of(&self, d: Dart) -> usize {
        d / 4
    }

    /// Slot (0..4, counterclockwise) of dart `d` at its crossing.
    pub fn slot_of(&self, d: Dart) -> usize {
        d % 4
    }

    /// True if dart `d` lies on its crossing's over axis.
    pub fn is_over(&self, d: Dart) -> bool {
        (d % 4) % 2 == self.over_axis[d / 4] as usize
    }

    /// Which axis (0: slots {0,2}; 1: slots {1,3}) is over at crossing `c`.
    pub fn over_axis(&self, c: usize) -> u8 {
        self.over_axis[c]
    }

    /// True if the strand leaves the crossing through dart `d`.
    pub fn is_outgoing(&self, d: Dart) -> bool {
        self.outgoing[d]
    }

    /// Follows the knot: enter the edge at `d` (which must be outgoing),
    /// arrive at `alpha(d)`, pass through that crossing, and return the next
    /// outgoing dart.
    pub fn next_along_strand(&self, d: Dart) -> Dart {
        self.strand_opposite(self.alpha[d])
    }

    /// Validates the structural invariants. See [`DiagramMap::new`].
    pub fn validate(&self) -> DiagramResult<()> {
        let n_darts = self.alpha.len();
        if n_darts != 4 * self.over_axis.len() || n_darts != self.outgoing.len() {
            return Err(DiagramError::BadInvolution(n_darts));
        }
        for ax in &self.over_axis {
            if *ax > 1 {
                return Err(DiagramError::BadOrientation(0));
            }
        }
        for d in 0..n_darts {
            let a = self.alpha[d];
            if a >= n_darts || a == d || self.alpha[a] != d {
                return Err(DiagramError::BadInvolution(d));
            }
        }
        for d in 0..n_darts {
            // Edges have one head and one tail; strands pass through.
            if self.outgoing[d] == self.outgoing[self.alpha[d]] {
                return Err(DiagramError::BadOrientation(d));
            }
            if self.outgoing[d] == self.outgoing[self.strand_opposite(d)] {
                return Err(DiagramError::BadOrientation(d));
            }
        }
        if let Some(d) = self.outer {
            if d >= n_darts {
                return Err(DiagramError::DartOutOfRange(d));
            }
        }
        self.check_planarity()
    }

    /// Per connected component of the map, checks `V - E + F = 2`.
    fn check_planarity(&self) -> DiagramResult<()> {
        let n = self.n_crossings();
        if n == 0 {
            return Ok(());
        }
        // Union crossings joined by edges.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for d in 0..self.n_darts() {
            let (a, b) = (d / 4, self.alpha[d] / 4);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let faces = self.faces();
        let mut v = vec![0usize; n];
        let mut f = vec![0usize; n];
        for c in 0..n {
            v[find(&mut parent, c)] += 1;
        }
        for face in &faces.faces {
            let c = face.darts[0] / 4;
            f[find(&mut parent, c)] += 1;
        }
        for c in 0..n {
            if find(&mut parent, c) != c {
                continue;
            }
            let vertices = v[c];
            let edges = 2 * vertices; // each crossing carries 4 dart-ends
            let fc = f[c];
            if vertices as i64 - edges as i64 + fc as i64 != 2 {
                return Err(DiagramError::NotPlanar {
                    vertices,
                    edges,
                    faces: fc,
                });
            }
        }
        Ok(())
    }

    /// True when all crossings lie in one connected piece of the underlying
    /// 4-valent graph. Vacuously true with fewer than two crossings.
    pub fn is_connected(&self) -> bool {
        let n = self.n_crossings();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for k in 0..4 {
                let nb = self.alpha[4 * c + k] / 4;
                if !seen[nb] {
                    seen[nb] = true;
                    count += 1;
                    stack.push(nb);
                }
            }
        }
        count == n
    }

    /// Computes all faces (orbits of `d -> sigma(alpha(d))`).
    pub fn faces(&self) -> Faces {
        let n_darts = self.n_darts();
        let mut face_of = vec![usize::MAX; n_darts];
        let mut faces = Vec::new();
        for start in 0..n_darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let idx = faces.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = idx;
                orbit.push(d);
                d = self.sigma(self.alpha[d]);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts: orbit });
        }
        Faces { faces, face_of }
    }

    /// The face orbit owning the corner between rays `d` and `sigma(d)`.
    ///
    /// Orbits are labeled so that the orbit of `x` is the region clockwise of
    /// ray `x`; the corner counterclockwise of `d` therefore belongs to the
    /// orbit of `sigma(d)`.
    pub fn corner_face_dart(&self, d: Dart) -> Dart {
        self.sigma(d)
    }

    /// Knot components: each is the cyclic sequence of outgoing darts of one
    /// traversal, listed starting from the component's smallest outgoing
    /// dart. Free loops are not included.
    pub fn components(&self) -> Vec<Vec<Dart>> {
        let n_darts = self.n_darts();
        let mut seen = vec![false; n_darts];
        let mut out = Vec::new();
        for start in 0..n_darts {
            if seen[start] || !self.outgoing[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                comp.push(d);
                d = self.next_along_strand(d);
                if d == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Total number of link components, including free loops.
    pub fn n_components(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Component index (into [`components`](Self::components)) of each
    /// crossing passage: `passage_component()[d]` is defined for every dart
    /// and names the component whose traversal uses the passage through `d`.
    pub fn passage_component(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n_darts()];
        for (i, comp) in self.components().iter().enumerate() {
            for &d in comp {
                // The passage through the crossing uses this outgoing dart
                // and the opposite (incoming) slot.
                label[d] = i;
                label[self.strand_opposite(d)] = i;
            }
        }
        debug_assert!(label.iter().all(|&l| l != usize::MAX));
        label
    }

    /// Sign of crossing `c` (+1 or -1) under the convention
    /// `sign = det[v_over, v_under]` with slots at right angles.
    pub fn crossing_sign(&self, c: usize) -> i8 {
        let over = self.over_axis[c] as usize;
        let o_out = if self.outgoing[4 * c + over] {
            over
        } else {
            over + 2
        };
        let under = (over + 1) % 2;
        let u_out = if self.outgoing[4 * c + under] {
            under
        } else {
            under + 2
        };
        if (4 + u_out - o_out) % 4 == 1 {
            1
        } else {
            -1
        }
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        (0..self.n_crossings())
            .map(|c| self.crossing_sign(c) as i64)
            .sum()
    }

    /// Number of positive crossings.
    pub fn positive_crossings(&self) -> Vec<usize> {
        (0..self.n_crossings())
            .filter(|&c| self.crossing_sign(c) > 0)
            .collect()
    }

    /// Linking number of components `a` and `b` (indices into
    /// [`components`](Self::components)): half the signed count of crossings
    /// between them.
    pub fn linking_number(&self, a: usize, b: usize) -> DiagramResult<i64> {
        let comps = self.components();
        if a >= comps.len() || b >= comps.len() {
            return Err(DiagramError::ComponentOutOfRange(
                a.max(b),
                comps.len(),
            ));
        }
        if a == b {
            return Ok(0);
        }
        let label = self.passage_component();
        let mut total = 0i64;
        for c in 0..self.n_crossings() {
            let l0 = label[4 * c]; // one passage (axis {0,2})
            let l1 = label[4 * c + 1]; // the other (axis {1,3})
            if (l0 == a && l1 == b) || (l0 == b && l1 == a) {
                total += self.crossing_sign(c) as i64;
            }
        }
        debug_assert!(total % 2 == 0, "inter-component crossings pair up");
        Ok(total / 2)
    }

    /// The mirror diagram: same underlying map with every over flag toggled.
    pub fn mirror(&self) -> Self {
        let mut m = self.clone();
        for ax in &mut m.over_axis {
            *ax ^= 1;
        }
        m
    }

    /// Reverses the orientation of every component (flips all direction
    /// flags). Crossing signs are unchanged.
    pub fn reversed(&self) -> Self {
        let mut m = self.clone();
        for flag in &mut m.outgoing {
            *flag = !*flag;
        }
        m
    }

    /// Re-derives orientation flags by tracing each component from its
    /// smallest dart. Produces a deterministic orientation assignment.
    pub fn with_canonical_orientations(&self) -> Self {
        let mut m = self.clone();
        let n_darts = m.n_darts();
        let mut assigned = vec![false; n_darts];
        for start in 0..n_darts {
            if assigned[start] {
                continue;
            }
            // Orient the component so `start` is outgoing.
            let mut d = start;
            loop {
                let arrive = m.alpha[d];
                let leave = m.strand_opposite(arrive);
                let behind = m.strand_opposite(d);
                m.outgoing[d] = true;
                m.outgoing[arrive] = false;
                m.outgoing[leave] = true;
                m.outgoing[behind] = false;
                assigned[d] = true;
                assigned[arrive] = true;
                assigned[leave] = true;
                assigned[behind] = true;
                d = leave;
                if d == start {
                    break;
                }
            }
        }
        m
    }

    /// Raw accessors for surgery code in the `moves` module.
    pub(crate) fn raw_parts(&self) -> (&[Dart], &[u8], &[bool]) {
        (&self.alpha, &self.over_axis, &self.outgoing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The one-crossing positive kink closed into a knot.
    ///
    /// Slots: 0 = exit of first passage, 1 = entry of second, 2 = entry of
    /// first, 3 = exit of second; loop edge {0,1}, far edge {2,3}; over axis
    /// {1,3}.
    pub(crate) fn positive_kink() -> DiagramMap {
        DiagramMap::new(
            vec![1, 0, 3, 2],
            vec![1],
            vec![true, false, false, true],
            0,
            None,
        )
        .unwrap()
    }

    #[test]
    fn kink_is_valid_and_planar() {
        let k = positive_kink();
        assert_eq!(k.n_crossings(), 1);
        assert_eq!(k.n_edges(), 2);
        assert_eq!(k.faces().faces.len(), 3); // 1 - 2 + 3 = 2
    }

    #[test]
    fn kink_faces_have_sizes_1_1_2() {
        let k = positive_kink();
        let mut sizes: Vec<usize> = k.faces().faces.iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2]);
    }

    #[test]
    fn kink_sign_is_positive() {
        let k = positive_kink();
        assert_eq!(k.crossing_sign(0), 1);
        assert_eq!(k.writhe(), 1);
        assert_eq!(k.mirror().writhe(), -1);
    }

    #[test]
    fn kink_has_one_component() {
        let k = positive_kink();
        assert_eq!(k.components().len(), 1);
        assert_eq!(k.n_components(), 1);
    }

    #[test]
    fn reversal_preserves_signs() {
        let k = positive_kink();
        assert_eq!(k.reversed().writhe(), k.writhe());
        let r = k.reversed();
        r.validate().unwrap();
    }

    #[test]
    fn trivial_diagram() {
        let t = DiagramMap::trivial(2);
        assert!(t.is_trivial_unlink());
        assert_eq!(t.n_components(), 2);
        assert_eq!(t.writhe(), 0);
        t.validate().unwrap();
    }

    #[test]
    fn bad_involution_rejected() {
        let err = DiagramMap::new(
            vec![0, 1, 2, 3], // fixed points
            vec![1],
            vec![true, false, false, true],
            0,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::BadInvolution(_)));
    }

    #[test]
    fn bad_orientation_rejected() {
        let err = DiagramMap::new(
            vec![1, 0, 3, 2],
            vec![1],
            vec![true, true, false, false], // edge {0,1} has two tails
            0,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::BadOrientation(_)));
    }

    #[test]
    fn canonical_orientation_is_idempotent() {
        let k = positive_kink();
        let c1 = k.with_canonical_orientations();
        let c2 = c1.with_canonical_orientations();
        assert_eq!(c1, c2);
        c1.validate().unwrap();
    }
}
