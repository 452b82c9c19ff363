//! The planar-map normal form behind [`front_canonical`].
//!
//! A front word is one of many spellings of a picture: cusped closed curves
//! in the plane, considered up to sliding events horizontally past each
//! other. This module extracts the picture itself — a planar map whose
//! vertices are the cusps (degree 2) and crossings (degree 4) — computes a
//! canonical labeling of it, and lays the labeled picture back out as a
//! word. Because every step depends only on the isomorphism class of the
//! decorated map, spellings related by commutations produce identical
//! output.
//!
//! Three structures are read off a single left-to-right sweep of the word:
//!
//! * the **map**: darts in fixed slots per vertex (cusps hold an upper and
//!   lower dart; crossings hold east-up, east-down, west-up, west-down),
//!   an involution `alpha` pairing the two ends of each edge, and the
//!   counterclockwise rotation `sigma` implied by the slots;
//! * the **regions** of the plane complement, maintained as a union-find
//!   over the corridors between adjacent strands (a right cusp merges the
//!   corridors above and below the pair it closes);
//! * the **nesting forest**: each connected piece of the map hangs inside
//!   one region, namely the corridor its first left cusp opened into.
//!
//! Face orbits of `sigma ∘ alpha` are matched to regions through corner
//! records: the corner swept counterclockwise from dart `d` to `sigma(d)`
//! belongs to the face orbit containing `sigma(d)`.
//!
//! The canonical labeling minimizes, over the darts of a component's
//! exterior face, a breadth-first traversal code (rotation, pairing, vertex
//! kinds, slots, and — per bounded face — the recursively sorted codes of
//! the components nested there). The layout then re-sweeps the plane
//! greedily: among all events whose geometry fits the current strand
//! frontier, emit the least by position, then kind, then canonical rank.
//! An event that would seal off the only corridor of a region still owed a
//! left cusp is deferred.

use std::collections::HashMap;

use super::word::{EventKind, FrontEvent};

type Dart = usize;
type Vert = usize;
type Reg = usize;
type Comp = usize;

const NO_DART: Dart = usize::MAX;

/// Vertex kinds, in the order used by traversal codes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VKind {
    LCusp,
    RCusp,
    Cross,
}

impl VKind {
    fn code(self) -> i64 {
        match self {
            VKind::LCusp => 0,
            VKind::RCusp => 1,
            VKind::Cross => 2,
        }
    }

    fn n_darts(self) -> usize {
        match self {
            VKind::Cross => 4,
            _ => 2,
        }
    }
}

// Dart slots. Cusps: 0 = upper, 1 = lower (east side for L, west for R).
// Crossings: 0 = east-up, 1 = east-down, 2 = west-up, 3 = west-down.
const EUP: usize = 0;
const EDN: usize = 1;
const WUP: usize = 2;
const WDN: usize = 3;

struct CuspMap {
    kinds: Vec<VKind>,
    first_dart: Vec<Dart>,
    vert_of: Vec<Vert>,
    slot_of: Vec<usize>,
    alpha: Vec<Dart>,
    /// Union-find parents over region ids; region 0 is the unbounded one.
    uf_parent: Vec<Reg>,
    /// `(owner dart, region)` records identifying face orbits with regions.
    corners: Vec<(Dart, Reg)>,
    /// Per left cusp, the region its west corner opened into.
    west_of: Vec<Option<Reg>>,
}

impl CuspMap {
    fn new_vert(&mut self, kind: VKind) -> Vert {
        let v = self.kinds.len();
        let f = self.vert_of.len();
        self.kinds.push(kind);
        self.first_dart.push(f);
        self.west_of.push(None);
        for s in 0..kind.n_darts() {
            self.vert_of.push(v);
            self.slot_of.push(s);
            self.alpha.push(NO_DART);
        }
        v
    }

    fn new_region(&mut self) -> Reg {
        let r = self.uf_parent.len();
        self.uf_parent.push(r);
        r
    }

    fn find(&self, mut r: Reg) -> Reg {
        while self.uf_parent[r] != r {
            r = self.uf_parent[r];
        }
        r
    }

    fn union(&mut self, a: Reg, b: Reg) -> Reg {
        let (ra, rb) = (self.find(a), self.find(b));
        let root = ra.min(rb);
        self.uf_parent[ra] = root;
        self.uf_parent[rb] = root;
        root
    }

    fn pair(&mut self, a: Dart, b: Dart) {
        self.alpha[a] = b;
        self.alpha[b] = a;
    }

    fn dart(&self, v: Vert, slot: usize) -> Dart {
        self.first_dart[v] + slot
    }

    /// Counterclockwise next dart around a vertex.
    fn sigma(&self, d: Dart) -> Dart {
        let v = self.vert_of[d];
        let f = self.first_dart[v];
        match self.kinds[v] {
            VKind::LCusp | VKind::RCusp => f + (1 - self.slot_of[d]),
            // East-up -> west-up -> west-down -> east-down -> east-up.
            VKind::Cross => {
                f + match self.slot_of[d] {
                    EUP => WUP,
                    WUP => WDN,
                    WDN => EDN,
                    _ => EUP,
                }
            }
        }
    }

    /// Builds the map, regions, and nesting data in one sweep of the word.
    fn build(events: &[FrontEvent]) -> CuspMap {
        let mut m = CuspMap {
            kinds: Vec::new(),
            first_dart: Vec::new(),
            vert_of: Vec::new(),
            slot_of: Vec::new(),
            alpha: Vec::new(),
            uf_parent: vec![0],
            corners: Vec::new(),
            west_of: Vec::new(),
        };
        let mut frontier: Vec<Dart> = Vec::new();
        let mut gaps: Vec<Reg> = vec![0];
        for &e in events {
            let p = e.position();
            match e.kind() {
                EventKind::Left => {
                    let v = m.new_vert(VKind::LCusp);
                    let (eup, edn) = (m.dart(v, EUP), m.dart(v, EDN));
                    let g = p - 1;
                    let rho = gaps[g];
                    let eye = m.new_region();
                    m.corners.push((edn, rho));
                    m.corners.push((eup, eye));
                    m.west_of[v] = Some(rho);
                    frontier.splice(g..g, [eup, edn]);
                    gaps.splice(g + 1..g + 1, [eye, rho]);
                }
                EventKind::Cross => {
                    let v = m.new_vert(VKind::Cross);
                    m.pair(m.dart(v, WUP), frontier[p - 1]);
                    m.pair(m.dart(v, WDN), frontier[p]);
                    let east = m.new_region();
                    m.corners.push((m.dart(v, WUP), gaps[p - 1]));
                    m.corners.push((m.dart(v, WDN), gaps[p]));
                    m.corners.push((m.dart(v, EDN), gaps[p + 1]));
                    m.corners.push((m.dart(v, EUP), east));
                    frontier[p - 1] = m.dart(v, EUP);
                    frontier[p] = m.dart(v, EDN);
                    gaps[p] = east;
                }
                EventKind::Right => {
                    let v = m.new_vert(VKind::RCusp);
                    m.pair(m.dart(v, 0), frontier[p - 1]);
                    m.pair(m.dart(v, 1), frontier[p]);
                    m.corners.push((m.dart(v, 1), gaps[p]));
                    let merged = m.union(gaps[p - 1], gaps[p + 1]);
                    m.corners.push((m.dart(v, 0), merged));
                    frontier.drain(p - 1..=p);
                    gaps.splice(p - 1..=p + 1, [merged]);
                }
            }
        }
        debug_assert!(frontier.is_empty(), "a valid word closes every strand");
        m
    }
}

/// Everything the layout needs: orbits, regions, components, canonical
/// codes, ranks, and labels.
struct Structure {
    orbit_of: Vec<usize>,
    /// Final region root per face orbit.
    orbit_region: Vec<Reg>,
    comp_of: Vec<Comp>,
    /// Region root each component hangs in.
    ext_region: Vec<Reg>,
    /// Position of each component's code in the global sorted code order.
    code_rank: Vec<usize>,
    /// Canonical within-component dart labels (from the winning root).
    label: Vec<u32>,
    outer: Reg,
}

impl Structure {
    fn analyze(m: &CuspMap) -> Structure {
        let nd = m.alpha.len();

        // Face orbits of sigma ∘ alpha.
        let mut orbit_of = vec![usize::MAX; nd];
        let mut n_orbits = 0;
        for d in 0..nd {
            if orbit_of[d] != usize::MAX {
                continue;
            }
            let mut cur = d;
            loop {
                orbit_of[cur] = n_orbits;
                cur = m.sigma(m.alpha[cur]);
                if cur == d {
                    break;
                }
            }
            n_orbits += 1;
        }

        // Regions per orbit, from the corner records.
        let mut orbit_region = vec![usize::MAX; n_orbits];
        for &(owner, reg) in &m.corners {
            let o = orbit_of[owner];
            let root = m.find(reg);
            debug_assert!(
                orbit_region[o] == usize::MAX || orbit_region[o] == root,
                "corner records must agree on each face orbit"
            );
            orbit_region[o] = root;
        }

        // Connected components over vertices.
        let nv = m.kinds.len();
        let mut comp_of = vec![usize::MAX; nv];
        let mut n_comps = 0;
        for v0 in 0..nv {
            if comp_of[v0] != usize::MAX {
                continue;
            }
            let mut stack = vec![v0];
            comp_of[v0] = n_comps;
            while let Some(v) = stack.pop() {
                for s in 0..m.kinds[v].n_darts() {
                    let w = m.vert_of[m.alpha[m.dart(v, s)]];
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = n_comps;
                        stack.push(w);
                    }
                }
            }
            n_comps += 1;
        }

        // Exterior data: the first vertex swept in each component is a left
        // cusp whose west corner faces the component's containing region.
        let mut ext_region = vec![usize::MAX; n_comps];
        let mut ext_orbit = vec![usize::MAX; n_comps];
        for v in 0..nv {
            let c = comp_of[v];
            if ext_region[c] == usize::MAX {
                debug_assert_eq!(m.kinds[v], VKind::LCusp);
                let west = m.find(m.west_of[v].expect("left cusps record their west region"));
                ext_region[c] = west;
                ext_orbit[c] = orbit_of[m.dart(v, EDN)];
                debug_assert_eq!(orbit_region[ext_orbit[c]], west);
            }
        }

        // Component codes, children-first through the nesting forest.
        let mut children: HashMap<Reg, Vec<Comp>> = HashMap::new();
        for c in 0..n_comps {
            children.entry(ext_region[c]).or_default().push(c);
        }
        let mut codes: Vec<Option<Vec<i64>>> = vec![None; n_comps];
        let mut labels: Vec<Option<Vec<(Dart, u32)>>> = vec![None; n_comps];
        let mut order: Vec<Comp> = (0..n_comps).collect();
        // Deeper components first: a component's children always opened
        // after it in the sweep, so reversed discovery order suffices.
        order.reverse();
        for c in order {
            let (code, label) = component_code(
                m,
                &orbit_of,
                &orbit_region,
                &comp_of,
                &ext_orbit,
                &ext_region,
                &children,
                &codes,
                c,
            );
            codes[c] = Some(code);
            labels[c] = Some(label);
        }

        let mut sorted: Vec<Comp> = (0..n_comps).collect();
        sorted.sort_by(|&a, &b| codes[a].cmp(&codes[b]).then(a.cmp(&b)));
        let mut code_rank = vec![0usize; n_comps];
        for (rank, &c) in sorted.iter().enumerate() {
            code_rank[c] = rank;
            if rank > 0 && codes[sorted[rank - 1]] == codes[c] {
                code_rank[c] = code_rank[sorted[rank - 1]];
            }
        }

        let mut label = vec![0u32; nd];
        for pairs in labels.iter().flatten() {
            for &(d, l) in pairs {
                label[d] = l;
            }
        }

        Structure {
            orbit_of,
            orbit_region,
            comp_of,
            ext_region,
            code_rank,
            label,
            outer: m.find(0),
        }
    }

    /// Lays the canonically labeled picture back out as a word.
    fn layout(&self, m: &CuspMap) -> Vec<FrontEvent> {
        let nv = m.kinds.len();
        let mut emitted = vec![false; nv];
        let mut frontier: Vec<Dart> = Vec::new();
        let mut gaps: Vec<Reg> = vec![self.outer];
        let mut out: Vec<FrontEvent> = Vec::with_capacity(nv);

        // How many unplaced left cusps still need each region.
        let mut need: HashMap<Reg, usize> = HashMap::new();
        for v in 0..nv {
            if m.kinds[v] == VKind::LCusp {
                *need.entry(self.west_root(m, v)).or_insert(0) += 1;
            }
        }

        while out.len() < nv {
            // (position, kind rank, component rank, dart label, vertex)
            let mut best: Option<(usize, u8, usize, u32, Vert)> = None;
            let mut consider = |cand: (usize, u8, usize, u32, Vert), best: &mut Option<_>| {
                if best.map_or(true, |b| cand < b) {
                    *best = Some(cand);
                }
            };
            for v in 0..nv {
                if emitted[v] {
                    continue;
                }
                let rank = self.code_rank[self.comp_of[v]];
                let vl = self.vert_label(m, v);
                match m.kinds[v] {
                    VKind::LCusp => {
                        let west = self.west_root(m, v);
                        for (g, &r) in gaps.iter().enumerate() {
                            if r == west {
                                consider((g + 1, 0, rank, vl, v), &mut best);
                                break; // lower same-region gaps give larger positions
                            }
                        }
                    }
                    VKind::Cross | VKind::RCusp => {
                        let kr = if m.kinds[v] == VKind::Cross { 1 } else { 2 };
                        let (wu, wd) = self.west_darts(m, v);
                        let Some(i) = frontier.iter().position(|&d| d == m.alpha[wu]) else {
                            continue;
                        };
                        if frontier.get(i + 1) != Some(&m.alpha[wd]) {
                            continue;
                        }
                        debug_assert_eq!(gaps[i + 1], self.orbit_region[self.orbit_of[wd]]);
                        // Do not seal off the only corridor of a region a
                        // pending left cusp still needs.
                        let lost = gaps[i + 1];
                        let replacement = if m.kinds[v] == VKind::Cross {
                            Some(self.orbit_region[self.orbit_of[m.dart(v, EUP)]])
                        } else {
                            None
                        };
                        if replacement != Some(lost)
                            && need.get(&lost).copied().unwrap_or(0) > 0
                            && gaps.iter().filter(|&&r| r == lost).count() == 1
                        {
                            continue;
                        }
                        consider((i + 1, kr, rank, vl, v), &mut best);
                    }
                }
            }

            let (pos, _, _, _, v) =
                best.expect("every partial layout of a front picture extends");
            emitted[v] = true;
            match m.kinds[v] {
                VKind::LCusp => {
                    let g = pos - 1;
                    let west = self.west_root(m, v);
                    let eye = self.orbit_region[self.orbit_of[m.dart(v, EUP)]];
                    *need.get_mut(&west).unwrap() -= 1;
                    frontier.splice(g..g, [m.dart(v, EUP), m.dart(v, EDN)]);
                    gaps.splice(g + 1..g + 1, [eye, west]);
                    out.push(FrontEvent::Left(pos));
                }
                VKind::Cross => {
                    frontier[pos - 1] = m.dart(v, EUP);
                    frontier[pos] = m.dart(v, EDN);
                    gaps[pos] = self.orbit_region[self.orbit_of[m.dart(v, EUP)]];
                    out.push(FrontEvent::Cross(pos));
                }
                VKind::RCusp => {
                    debug_assert_eq!(gaps[pos - 1], gaps[pos + 1]);
                    let keep = gaps[pos - 1];
                    frontier.drain(pos - 1..=pos);
                    gaps.splice(pos - 1..=pos + 1, [keep]);
                    out.push(FrontEvent::Right(pos));
                }
            }
        }
        debug_assert!(frontier.is_empty());
        out
    }

    fn west_root(&self, m: &CuspMap, v: Vert) -> Reg {
        m.find(m.west_of[v].expect("left cusp"))
    }

    fn west_darts(&self, m: &CuspMap, v: Vert) -> (Dart, Dart) {
        match m.kinds[v] {
            VKind::Cross => (m.dart(v, WUP), m.dart(v, WDN)),
            _ => (m.dart(v, 0), m.dart(v, 1)),
        }
    }

    fn vert_label(&self, m: &CuspMap, v: Vert) -> u32 {
        (0..m.kinds[v].n_darts())
            .map(|s| self.label[m.dart(v, s)])
            .min()
            .unwrap()
    }
}

/// Breadth-first canonical code of one component, minimized over the darts
/// of its exterior face, together with the winning dart labeling.
#[allow(clippy::too_many_arguments)]
fn component_code(
    m: &CuspMap,
    orbit_of: &[usize],
    orbit_region: &[Reg],
    comp_of: &[Comp],
    ext_orbit: &[usize],
    ext_region: &[Reg],
    children: &HashMap<Reg, Vec<Comp>>,
    codes: &[Option<Vec<i64>>],
    c: Comp,
) -> (Vec<i64>, Vec<(Dart, u32)>) {
    let nd = m.alpha.len();
    let comp_darts: Vec<Dart> = (0..nd).filter(|&d| comp_of[m.vert_of[d]] == c).collect();
    let dart_pos: HashMap<Dart, usize> = comp_darts.iter().copied().zip(0..).collect();
    let roots: Vec<Dart> = comp_darts
        .iter()
        .copied()
        .filter(|&d| orbit_of[d] == ext_orbit[c])
        .collect();
    debug_assert!(!roots.is_empty());

    let mut best: Option<(Vec<i64>, Vec<(Dart, u32)>)> = None;
    for &root in &roots {
        // Label darts breadth-first through sigma and alpha.
        let mut label = vec![u32::MAX; comp_darts.len()];
        let mut order: Vec<Dart> = Vec::with_capacity(comp_darts.len());
        label[dart_pos[&root]] = 0;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            i += 1;
            for nxt in [m.sigma(d), m.alpha[d]] {
                let slot = &mut label[dart_pos[&nxt]];
                if *slot == u32::MAX {
                    *slot = order.len() as u32;
                    order.push(nxt);
                }
            }
        }
        debug_assert_eq!(order.len(), comp_darts.len());

        let mut code: Vec<i64> = Vec::with_capacity(comp_darts.len() * 4 + 8);
        for &d in &order {
            code.push(label[dart_pos[&m.sigma(d)]] as i64);
            code.push(label[dart_pos[&m.alpha[d]]] as i64);
            code.push(m.kinds[m.vert_of[d]].code());
            code.push(m.slot_of[d] as i64);
        }
        // Bounded faces in first-label order, each with the sorted codes of
        // the components nested inside its region.
        let mut orbits: Vec<(u32, usize)> = Vec::new();
        for &d in &order {
            let o = orbit_of[d];
            if o != ext_orbit[c] && !orbits.iter().any(|&(_, oo)| oo == o) {
                orbits.push((label[dart_pos[&d]], o));
            }
        }
        orbits.sort_unstable();
        for (_, o) in orbits {
            let mut kid_codes: Vec<&Vec<i64>> = children
                .get(&orbit_region[o])
                .map(|kids| {
                    kids.iter()
                        .filter(|&&k| k != c && ext_region[k] == orbit_region[o])
                        .map(|&k| codes[k].as_ref().expect("children coded first"))
                        .collect()
                })
                .unwrap_or_default();
            kid_codes.sort();
            code.push(-1 - kid_codes.len() as i64);
            for kc in kid_codes {
                code.push(kc.len() as i64);
                code.extend_from_slice(kc);
            }
        }

        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            let pairs = comp_darts
                .iter()
                .enumerate()
                .map(|(pos, &d)| (d, label[pos]))
                .collect();
            best = Some((code, pairs));
        }
    }
    best.unwrap()
}

/// The canonical spelling of a front word's commutation class.
pub(crate) fn canonical_events(events: &[FrontEvent]) -> Vec<FrontEvent> {
    if events.is_empty() {
        return Vec::new();
    }
    let m = CuspMap::build(events);
    let s = Structure::analyze(&m);
    s.layout(&m)
}
