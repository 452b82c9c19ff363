//! Reidemeister moves on smooth diagrams: enumeration, application, and
//! inversion.
//!
//! Every move is a dart surgery on a [`DiagramMap`]. Application never
//! mutates its input: it builds the rewired map and re-validates it from
//! scratch, so a wiring mistake surfaces as [`MoveError::Diagram`] instead of
//! a silently corrupt state.
//!
//! # Site naming and staleness
//!
//! Removal sites are named by a face dart (the smallest dart of the monogon,
//! bigon, or triangle orbit); insertion sites by the darts they attach to.
//! Names are only meaningful on the map they were enumerated on. Applying a
//! move re-checks the full site shape first and reports
//! [`MoveError::Stale`] when the named darts no longer form it.
//!
//! # Planar diagrams
//!
//! A map with a marked outer face ([`DiagramMap::outer_dart`]) is treated as
//! planar: a removal whose contracted face *is* the outer face is not
//! applicable (the unbounded region cannot be squeezed shut), and every
//! application transports the marker to the corresponding region of the
//! result. Insertions into the outer face carry an explicit choice of which
//! new region faces infinity ([`SmoothMove::R1Up::outer_loop`],
//! [`SmoothMove::R2Up::outer_split`], [`SmoothMove::R1UpLoop::outer_slot`]).
//! Maps without the marker are spherical and skip all of this.

use std::collections::BTreeSet;

use crate::diagram::{Dart, DiagramMap, Surface};

use super::{MoveError, MovePolicy, MoveResult, SmoothMove};

/// Walks the face orbit (`d -> sigma(alpha(d))`) starting at `start`.
fn face_orbit(map: &DiagramMap, start: Dart) -> Vec<Dart> {
    let mut orbit = vec![start];
    let mut d = map.sigma(map.alpha(start));
    while d != start {
        orbit.push(d);
        d = map.sigma(map.alpha(d));
    }
    orbit
}

/// Over-strand count of the boundary arc entering the face corner at `d`:
/// `is_over(d) + is_over(alpha(d))` counts how often the arc through edge
/// `{d, alpha(d)}` passes over at the two crossings it touches.
fn arc_over_count(map: &DiagramMap, d: Dart) -> u8 {
    map.is_over(d) as u8 + map.is_over(map.alpha(d)) as u8
}

/// Is the two-crossing bigon at `b1` a clasp (one strand passing over the
/// other twice), as opposed to an alternating pair?
fn bigon_is_clasp(map: &DiagramMap, b1: Dart) -> bool {
    map.is_over(b1) == map.is_over(map.alpha(b1))
}

/// Is the triangle face whose orbit starts at `d0` slideable? The three
/// boundary arcs must have over-counts `{0, 1, 2}` (a definite bottom,
/// middle, and top strand). Since the counts always sum to 3, this is
/// equivalent to them not all being 1 (the cyclic, non-slideable pattern).
fn triangle_is_slideable(map: &DiagramMap, orbit: &[Dart]) -> bool {
    orbit.iter().filter(|&&d| arc_over_count(map, d) == 1).count() != 3
}

/// Enumerates every smooth move admitted by `policy`, sorted and
/// duplicate-free.
///
/// On [`Surface::Plane`] the map's outer marker gates removals on the outer
/// face and adds the extra outer-choice variants for insertions into it; a
/// planar map with crossings is expected to carry the marker (maps built by
/// [`crate::front::smooth::smooth`] always do — without it the enumeration
/// falls back to spherical semantics). On [`Surface::Sphere`] the marker is
/// ignored entirely; to *apply* the resulting moves, clear the marker first
/// (search drivers do), since application gates on the map's own marker.
pub fn enumerate_smooth_moves(
    map: &DiagramMap,
    surface: Surface,
    policy: MovePolicy,
) -> Vec<SmoothMove> {
    let n = map.n_crossings();
    let mut out = Vec::new();

    if n == 0 {
        // The only move on a crossing-free diagram: kink one of its circles.
        if map.free_loops() > 0 && policy.admits(true, 1) {
            let slots: &[Option<u8>] = match surface {
                Surface::Sphere => &[None],
                Surface::Plane => &[Some(0), Some(1), Some(2)],
            };
            for &outer_slot in slots {
                for positive in [false, true] {
                    out.push(SmoothMove::R1UpLoop {
                        positive,
                        outer_slot,
                    });
                }
            }
        }
        out.sort_unstable();
        return out;
    }

    let faces = map.faces();
    let outer_face = match surface {
        Surface::Plane => map.outer_dart().map(|d| faces.face_of[d]),
        Surface::Sphere => None,
    };

    for (fi, face) in faces.faces.iter().enumerate() {
        let gated = outer_face == Some(fi);
        match face.len() {
            1 if !gated && policy.admits(false, n - 1) => {
                out.push(SmoothMove::R1Down {
                    monogon: face.darts[0],
                });
            }
            2 if !gated && n >= 2 && policy.admits(false, n - 2) => {
                let b1 = face.darts[0];
                let b2 = face.darts[1];
                if b1 / 4 != b2 / 4 && bigon_is_clasp(map, b1) {
                    out.push(SmoothMove::R2Down { bigon: b1 });
                }
            }
            3 if !gated && policy.admits(false, n) => {
                let d = &face.darts;
                let (c0, c1, c2) = (d[0] / 4, d[1] / 4, d[2] / 4);
                if c0 != c1 && c1 != c2 && c0 != c2 && triangle_is_slideable(map, d) {
                    out.push(SmoothMove::R3 { triangle: d[0] });
                }
            }
            _ => {}
        }
    }

    if policy.admits(true, n + 1) {
        for at in 0..map.n_darts() {
            let outer_here = outer_face == Some(faces.face_of[at]);
            for positive in [false, true] {
                out.push(SmoothMove::R1Up {
                    at,
                    positive,
                    outer_loop: false,
                });
                if outer_here {
                    out.push(SmoothMove::R1Up {
                        at,
                        positive,
                        outer_loop: true,
                    });
                }
            }
        }
    }

    if policy.admits(true, n + 2) {
        for (fi, face) in faces.faces.iter().enumerate() {
            let outer_here = outer_face == Some(fi);
            for &push in &face.darts {
                for &target in &face.darts {
                    if push == target {
                        continue;
                    }
                    for over in [false, true] {
                        out.push(SmoothMove::R2Up {
                            push,
                            target,
                            over,
                            outer_split: false,
                        });
                        if outer_here {
                            out.push(SmoothMove::R2Up {
                                push,
                                target,
                                over,
                                outer_split: true,
                            });
                        }
                    }
                }
            }
        }
    }

    out.sort_unstable();
    out.dedup();
    out
}

/// Applies a smooth move, returning the rewired (and re-validated) map.
///
/// The move must name a live site on *this* map; anything else is rejected
/// as [`MoveError::Stale`] or [`MoveError::NotApplicable`]. Planar gating
/// and outer-face transport happen exactly when the map carries an outer
/// marker.
pub fn apply_smooth_move(map: &DiagramMap, mv: &SmoothMove) -> MoveResult<DiagramMap> {
    match *mv {
        SmoothMove::R1Down { monogon } => apply_r1_down(map, monogon),
        SmoothMove::R2Down { bigon } => apply_r2_down(map, bigon),
        SmoothMove::R3 { triangle } => apply_r3(map, triangle),
        SmoothMove::R1Up {
            at,
            positive,
            outer_loop,
        } => apply_r1_up(map, at, positive, outer_loop),
        SmoothMove::R1UpLoop {
            positive,
            outer_slot,
        } => apply_r1_up_loop(map, positive, outer_slot),
        SmoothMove::R2Up {
            push,
            target,
            over,
            outer_split,
        } => apply_r2_up(map, push, target, over, outer_split),
    }
}

/// What to do with the outer marker after a removal.
enum OuterPlan {
    /// No marker (spherical map).
    None,
    /// The marker survives on this (old-numbering) dart.
    Anchor(Dart),
    /// No boundary dart of the outer region survives: acceptable only when
    /// the result is crossing-free.
    OnlyIfTrivial,
}

impl OuterPlan {
    fn resolve(self, renum: &[Option<Dart>], result_darts: usize) -> MoveResult<Option<Dart>> {
        match self {
            OuterPlan::None => Ok(None),
            OuterPlan::Anchor(a) => Ok(Some(
                renum[a].expect("outer anchor must be a surviving dart"),
            )),
            OuterPlan::OnlyIfTrivial => {
                if result_darts == 0 {
                    Ok(None)
                } else {
                    Err(MoveError::OuterFaceLost)
                }
            }
        }
    }
}

/// Removes the crossings in `dead`, splicing every strand straight through
/// them. Returns the new map's raw parts (alpha, over-axis, outgoing), the
/// number of strand cycles that were closed off into free loops, and the
/// dart renumbering (`None` for darts of removed crossings).
fn excise(
    map: &DiagramMap,
    dead: &BTreeSet<usize>,
) -> (Vec<Dart>, Vec<u8>, Vec<bool>, usize, Vec<Option<Dart>>) {
    let n = map.n_crossings();
    let n_darts = map.n_darts();
    let dying = |d: Dart| dead.contains(&(d / 4));

    let mut new_cr = vec![usize::MAX; n];
    let mut next = 0usize;
    for c in 0..n {
        if !dead.contains(&c) {
            new_cr[c] = next;
            next += 1;
        }
    }
    let renum: Vec<Option<Dart>> = (0..n_darts)
        .map(|d| {
            if dying(d) {
                None
            } else {
                Some(4 * new_cr[d / 4] + d % 4)
            }
        })
        .collect();

    let mut consumed = vec![false; n_darts];
    let mut alpha = vec![usize::MAX; 4 * next];
    for d in 0..n_darts {
        if dying(d) {
            continue;
        }
        // Follow the strand through dead crossings until it resurfaces.
        let mut e = map.alpha(d);
        while dying(e) {
            consumed[e] = true;
            let through = map.strand_opposite(e);
            consumed[through] = true;
            e = map.alpha(through);
        }
        alpha[renum[d].unwrap()] = renum[e].unwrap();
    }

    // Strand cycles trapped entirely inside the dead set close into loops.
    let mut closed = 0usize;
    for d0 in 0..n_darts {
        if !dying(d0) || consumed[d0] {
            continue;
        }
        let mut e = d0;
        loop {
            consumed[e] = true;
            let through = map.strand_opposite(e);
            consumed[through] = true;
            e = map.alpha(through);
            if e == d0 {
                break;
            }
        }
        closed += 1;
    }

    let (_, over_axis_old, _) = map.raw_parts();
    let mut over_axis = Vec::with_capacity(next);
    let mut outgoing = Vec::with_capacity(4 * next);
    for c in 0..n {
        if dead.contains(&c) {
            continue;
        }
        over_axis.push(over_axis_old[c]);
        for k in 0..4 {
            outgoing.push(map.is_outgoing(4 * c + k));
        }
    }
    (alpha, over_axis, outgoing, closed, renum)
}

/// Plans the outer transport for a removal that kills the crossings in
/// `dead`. `merge_partners` lists darts whose faces merge with the outer
/// face when it touches the contracted face from both sides (used by the
/// bigon removal, whose flanking regions fuse).
fn plan_outer_for_removal(
    map: &DiagramMap,
    dead: &BTreeSet<usize>,
    merge_partners: &[Dart],
) -> OuterPlan {
    let o = match map.outer_dart() {
        None => return OuterPlan::None,
        Some(o) => o,
    };
    let alive = |d: &Dart| !dead.contains(&(d / 4));
    let orbit = face_orbit(map, o);
    if let Some(&a) = orbit.iter().find(|&d| alive(d)) {
        return OuterPlan::Anchor(a);
    }
    // Every boundary dart of the outer region dies. If the region fuses with
    // a flanking partner, any surviving partner dart still bounds it.
    let faces = map.faces();
    let ofi = faces.face_of[o];
    for &p in merge_partners {
        if faces.face_of[p] == ofi {
            // The outer face *is* one of the flanking regions; try the other.
            for &q in merge_partners {
                if faces.face_of[q] != ofi {
                    if let Some(&a) = faces.faces[faces.face_of[q]].darts.iter().find(|&d| alive(d))
                    {
                        return OuterPlan::Anchor(a);
                    }
                }
            }
        }
    }
    OuterPlan::OnlyIfTrivial
}

fn apply_r1_down(map: &DiagramMap, m: Dart) -> MoveResult<DiagramMap> {
    if m >= map.n_darts() {
        return Err(MoveError::Stale(format!("dart {m} out of range")));
    }
    if map.sigma(map.alpha(m)) != m {
        return Err(MoveError::Stale(format!("dart {m} is not a monogon face")));
    }
    let c = m / 4;
    if let Some(o) = map.outer_dart() {
        if face_orbit(map, o) == [m] {
            return Err(MoveError::NotApplicable(
                "the monogon is the outer face of a planar diagram",
            ));
        }
    }
    let dead: BTreeSet<usize> = [c].into_iter().collect();
    let plan = plan_outer_for_removal(map, &dead, &[]);
    let (alpha, over_axis, outgoing, closed, renum) = excise(map, &dead);
    let outer = plan.resolve(&renum, alpha.len())?;
    Ok(DiagramMap::new(
        alpha,
        over_axis,
        outgoing,
        map.free_loops() + closed,
        outer,
    )?)
}

fn apply_r2_down(map: &DiagramMap, b1: Dart) -> MoveResult<DiagramMap> {
    if b1 >= map.n_darts() {
        return Err(MoveError::Stale(format!("dart {b1} out of range")));
    }
    let b2 = map.sigma(map.alpha(b1));
    if b2 == b1 || map.sigma(map.alpha(b2)) != b1 {
        return Err(MoveError::Stale(format!("dart {b1} is not a bigon face")));
    }
    let (c1, c2) = (b1 / 4, b2 / 4);
    if c1 == c2 {
        return Err(MoveError::NotApplicable(
            "the bigon visits a single crossing twice",
        ));
    }
    if !bigon_is_clasp(map, b1) {
        return Err(MoveError::NotApplicable(
            "the bigon strands alternate over/under (no clasp)",
        ));
    }
    if let Some(o) = map.outer_dart() {
        let orbit = face_orbit(map, o);
        if orbit.contains(&b1) && orbit.len() == 2 {
            return Err(MoveError::NotApplicable(
                "the bigon is the outer face of a planar diagram",
            ));
        }
    }
    let dead: BTreeSet<usize> = [c1, c2].into_iter().collect();
    // The regions beyond the bigon's two ends fuse with it into one.
    let flank = [
        map.sigma(map.sigma(b1)),
        map.sigma(map.sigma(b2)),
    ];
    let plan = plan_outer_for_removal(map, &dead, &flank);
    let (alpha, over_axis, outgoing, closed, renum) = excise(map, &dead);
    let outer = plan.resolve(&renum, alpha.len())?;
    Ok(DiagramMap::new(
        alpha,
        over_axis,
        outgoing,
        map.free_loops() + closed,
        outer,
    )?)
}

fn apply_r3(map: &DiagramMap, t: Dart) -> MoveResult<DiagramMap> {
    let n_darts = map.n_darts();
    if t >= n_darts {
        return Err(MoveError::Stale(format!("dart {t} out of range")));
    }
    let d = {
        let d1 = map.sigma(map.alpha(t));
        let d2 = map.sigma(map.alpha(d1));
        if d1 == t || d2 == t || map.sigma(map.alpha(d2)) != t {
            return Err(MoveError::Stale(format!("dart {t} is not a triangle face")));
        }
        [t, d1, d2]
    };
    let c = [d[0] / 4, d[1] / 4, d[2] / 4];
    if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
        return Err(MoveError::NotApplicable(
            "the triangle revisits a crossing",
        ));
    }
    if !triangle_is_slideable(map, &d) {
        return Err(MoveError::NotApplicable(
            "the triangle strands are cyclically layered (no top strand)",
        ));
    }
    if let Some(o) = map.outer_dart() {
        let orbit = face_orbit(map, o);
        if orbit.len() == 3 && orbit.contains(&d[0]) {
            return Err(MoveError::NotApplicable(
                "the triangle is the outer face of a planar diagram",
            ));
        }
    }

    // Corner rays: a[i] ends the side arriving at d[i]'s corner, e/f are the
    // exterior rays counterclockwise past d[i].
    let a = [map.alpha(d[2]), map.alpha(d[0]), map.alpha(d[1])];
    let e = [map.sigma(d[0]), map.sigma(d[1]), map.sigma(d[2])];
    let f = [
        map.strand_opposite(d[0]),
        map.strand_opposite(d[1]),
        map.strand_opposite(d[2]),
    ];

    // Each exterior edge slides to the neighboring crossing: the edge at
    // e[i] re-plugs onto d[i-1], the edge at f[i] onto a[i+1]; the old sides
    // dissolve and three new sides appear between the exterior rays.
    let mut rho: Vec<Dart> = (0..n_darts).collect();
    for i in 0..3 {
        rho[e[i]] = d[(i + 2) % 3];
        rho[f[i]] = a[(i + 1) % 3];
    }
    let side: BTreeSet<Dart> = d.iter().chain(a.iter()).copied().collect();
    let mut alpha = vec![usize::MAX; n_darts];
    for u in 0..n_darts {
        if side.contains(&u) {
            continue;
        }
        alpha[rho[u]] = rho[map.alpha(u)];
    }
    for i in 0..3 {
        let (x, y) = (e[i], f[(i + 2) % 3]);
        alpha[x] = y;
        alpha[y] = x;
    }
    debug_assert!(alpha.iter().all(|&x| x != usize::MAX));

    let outer = match map.outer_dart() {
        None => None,
        Some(o) => {
            let orbit = face_orbit(map, o);
            let anchor = orbit.iter().copied().find(|&x| !c.contains(&(x / 4)));
            if let Some(a_) = anchor {
                Some(a_)
            } else if let Some(i) = (0..3).find(|&i| orbit.contains(&e[i])) {
                Some(d[(i + 2) % 3])
            } else if let Some(i) = (0..3).find(|&i| orbit.contains(&f[i])) {
                Some(a[(i + 1) % 3])
            } else {
                return Err(MoveError::OuterFaceLost);
            }
        }
    };

    let (_, over_axis, outgoing) = map.raw_parts();
    Ok(DiagramMap::new(
        alpha,
        over_axis.to_vec(),
        outgoing.to_vec(),
        map.free_loops(),
        outer,
    )?)
}

fn apply_r1_up(map: &DiagramMap, g: Dart, positive: bool, outer_loop: bool) -> MoveResult<DiagramMap> {
    let n_darts = map.n_darts();
    if g >= n_darts {
        return Err(MoveError::Stale(format!("dart {g} out of range")));
    }
    if outer_loop {
        match map.outer_dart() {
            Some(o) if face_orbit(map, o).contains(&g) => {}
            _ => {
                return Err(MoveError::NotApplicable(
                    "outer_loop requires the poked face to be the outer face",
                ))
            }
        }
    }
    let n = map.n_crossings();
    let x = [4 * n, 4 * n + 1, 4 * n + 2, 4 * n + 3];
    let ag = map.alpha(g);

    let (alpha_old, over_axis_old, outgoing_old) = map.raw_parts();
    let mut alpha = alpha_old.to_vec();
    alpha.extend_from_slice(&[0, 0, 0, 0]);
    // Subdivide the edge {g, alpha(g)} and hang the loop into g's face.
    alpha[g] = x[0];
    alpha[x[0]] = g;
    alpha[x[3]] = ag;
    alpha[ag] = x[3];
    alpha[x[1]] = x[2];
    alpha[x[2]] = x[1];

    let mut over_axis = over_axis_old.to_vec();
    over_axis.push(if positive { 0 } else { 1 });

    let mut outgoing = outgoing_old.to_vec();
    if map.is_outgoing(g) {
        outgoing.extend_from_slice(&[false, false, true, true]);
    } else {
        outgoing.extend_from_slice(&[true, true, false, false]);
    }

    let outer = if outer_loop {
        Some(x[2]) // the new monogon becomes the unbounded region
    } else {
        map.outer_dart()
    };
    Ok(DiagramMap::new(
        alpha,
        over_axis,
        outgoing,
        map.free_loops(),
        outer,
    )?)
}

fn apply_r1_up_loop(
    map: &DiagramMap,
    positive: bool,
    outer_slot: Option<u8>,
) -> MoveResult<DiagramMap> {
    if map.n_crossings() != 0 {
        return Err(MoveError::NotApplicable(
            "the free-loop kink applies only to crossing-free diagrams",
        ));
    }
    if map.free_loops() == 0 {
        return Err(MoveError::NotApplicable("no free loop to kink"));
    }
    let outer = match outer_slot {
        None => None,
        Some(s @ 0..=2) => Some(s as Dart),
        Some(s) => {
            return Err(MoveError::Stale(format!(
                "outer slot {s} out of range (0..=2)"
            )))
        }
    };
    Ok(DiagramMap::new(
        vec![3, 2, 1, 0],
        vec![if positive { 0 } else { 1 }],
        vec![true, true, false, false],
        map.free_loops() - 1,
        outer,
    )?)
}

fn apply_r2_up(
    map: &DiagramMap,
    d1: Dart,
    d2: Dart,
    over: bool,
    outer_split: bool,
) -> MoveResult<DiagramMap> {
    let n_darts = map.n_darts();
    if d1 >= n_darts || d2 >= n_darts {
        return Err(MoveError::Stale(format!(
            "darts {d1}, {d2} out of range"
        )));
    }
    if d1 == d2 {
        return Err(MoveError::Stale("push and target coincide".into()));
    }
    let orbit = face_orbit(map, d1);
    if !orbit.contains(&d2) {
        return Err(MoveError::Stale(format!(
            "darts {d1} and {d2} do not bound a common face"
        )));
    }
    let site_is_outer = match map.outer_dart() {
        Some(o) => orbit.contains(&o),
        None => false,
    };
    if outer_split && !site_is_outer {
        return Err(MoveError::NotApplicable(
            "outer_split requires the site face to be the outer face",
        ));
    }

    let n = map.n_crossings();
    // New crossings: x1 next to target's corner, x2 next to push's corner.
    // Slot order at each crossing is E, N, W, S (counterclockwise).
    let (x1e, x1n, x1w, x1s) = (4 * n, 4 * n + 1, 4 * n + 2, 4 * n + 3);
    let (x2e, x2n, x2w, x2s) = (4 * n + 4, 4 * n + 5, 4 * n + 6, 4 * n + 7);

    let (alpha_old, over_axis_old, outgoing_old) = map.raw_parts();
    let mut alpha = alpha_old.to_vec();
    alpha.extend_from_slice(&[0; 8]);
    let mut plug = |u: Dart, v: Dart| {
        alpha[u] = v;
        alpha[v] = u;
    };
    let t1 = map.is_outgoing(d1);
    let t2 = map.is_outgoing(d2);
    let mut outgoing = outgoing_old.to_vec();
    if d2 == map.alpha(d1) {
        // The pushed strand crosses its own edge: a curl of two crossings.
        plug(d2, x1s);
        plug(x2s, x1w);
        plug(x1e, x2w);
        plug(x2e, d1);
        plug(x1n, x2n);
        outgoing.extend_from_slice(&[!t1, !t1, t1, t1]); // x1: E N W S
        outgoing.extend_from_slice(&[!t1, t1, t1, !t1]); // x2: E N W S
    } else {
        // The target's edge threads x1, x2 east-west; the pushed strand
        // fingers north-south through both.
        let a1 = map.alpha(d1);
        let a2 = map.alpha(d2);
        plug(d2, x1w);
        plug(x1e, x2w);
        plug(x2e, a2);
        plug(a1, x1s);
        plug(x2s, d1);
        plug(x1n, x2n);
        outgoing.extend_from_slice(&[t2, !t1, !t2, t1]); // x1: E N W S
        outgoing.extend_from_slice(&[t2, t1, !t2, !t1]); // x2: E N W S
    }

    let mut over_axis = over_axis_old.to_vec();
    // The pushed strand runs along the N/S axis (axis 1) of both crossings.
    let ax = if over { 1 } else { 0 };
    over_axis.push(ax);
    over_axis.push(ax);

    let outer = match map.outer_dart() {
        None => None,
        Some(o) => {
            if site_is_outer {
                // The site face splits in two; the flag picks the unbounded
                // piece: the one bordered by push, or the one by target.
                Some(if outer_split { d2 } else { d1 })
            } else {
                Some(o)
            }
        }
    };
    Ok(DiagramMap::new(
        alpha,
        over_axis,
        outgoing,
        map.free_loops(),
        outer,
    )?)
}

/// The move that undoes `mv` when applied to `apply_smooth_move(pre, mv)`.
///
/// Insertions always invert (the removal site is where the construction put
/// it); removals invert unless the erased material cannot be re-addressed on
/// the result — a kink whose neighbor crossing also died (the one-crossing
/// unknot inverts through the free-loop kink instead) or a clasp whose
/// surviving attachment darts died with it. Returns `None` in those cases.
pub fn inverse_smooth_move(pre: &DiagramMap, mv: &SmoothMove) -> Option<SmoothMove> {
    let n = pre.n_crossings();
    match *mv {
        SmoothMove::R1Up { .. } => Some(SmoothMove::R1Down { monogon: 4 * n + 2 }),
        SmoothMove::R1UpLoop { .. } => Some(SmoothMove::R1Down { monogon: 2 }),
        SmoothMove::R2Up { .. } => Some(SmoothMove::R2Down { bigon: 4 * n + 1 }),
        SmoothMove::R3 { triangle } => {
            let d1 = pre.sigma(pre.alpha(triangle));
            let d2 = pre.sigma(pre.alpha(d1));
            let f = [
                pre.strand_opposite(triangle),
                pre.strand_opposite(d1),
                pre.strand_opposite(d2),
            ];
            Some(SmoothMove::R3 {
                triangle: f.into_iter().min().unwrap(),
            })
        }
        SmoothMove::R1Down { monogon: m } => {
            let c = m / 4;
            let g_old = pre.alpha(pre.strand_opposite(m));
            if g_old / 4 == c {
                // The kink's loop and tail meet the same crossing: the
                // one-crossing unknot (re-kink the freed loop) or a split
                // figure-eight piece (no inverse).
                if n != 1 {
                    return None;
                }
                let positive = pre.crossing_sign(0) == 1;
                let outer_slot = pre.outer_dart().map(|o| {
                    let faces = pre.faces();
                    let ofi = faces.face_of[o];
                    if ofi == faces.face_of[pre.strand_opposite(m)] {
                        0
                    } else if ofi == faces.face_of[pre.sigma(m)] {
                        1
                    } else {
                        2
                    }
                });
                return Some(SmoothMove::R1UpLoop {
                    positive,
                    outer_slot,
                });
            }
            let at = g_old - if g_old / 4 > c { 4 } else { 0 };
            Some(SmoothMove::R1Up {
                at,
                positive: pre.crossing_sign(c) == 1,
                outer_loop: false,
            })
        }
        SmoothMove::R2Down { bigon: b1 } => {
            let b2 = pre.sigma(pre.alpha(b1));
            let (c1, c2) = (b1 / 4, b2 / 4);
            let push_old = pre.alpha(pre.sigma(b2));
            let target_old = pre.alpha(pre.sigma(b1));
            if push_old / 4 == c1 || push_old / 4 == c2 || target_old / 4 == c1 || target_old / 4 == c2
            {
                return None;
            }
            let renum = |d: Dart| {
                let drop = (d / 4 > c1) as usize + (d / 4 > c2) as usize;
                d - 4 * drop
            };
            let outer_split = match pre.outer_dart() {
                None => false,
                Some(o) => {
                    let faces = pre.faces();
                    faces.face_of[o] == faces.face_of[pre.strand_opposite(b1)]
                }
            };
            Some(SmoothMove::R2Up {
                push: renum(push_old),
                target: renum(target_old),
                over: pre.is_over(b1),
                outer_split,
            })
        }
    }
}
