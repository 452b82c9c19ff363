//! Canonical keys for diagram maps.
//!
//! Two maps get the same key exactly when they are isomorphic as maps on the
//! oriented sphere (respecting crossing slots counterclockwise, over/under
//! data, and knot components up to reversing each component's direction).
//! Mirrors are *not* identified: flipping every over bit changes the key.
//! On the plane the key additionally records which face is the unbounded
//! one, so it distinguishes diagrams that differ only by which region is
//! outermost.
//!
//! The key is computed by breadth-first relabeling: fix a root dart, rotate
//! its crossing so the root is slot 0, and explore edges in slot order,
//! numbering crossings as first reached and rotating each so its discovery
//! dart is slot 0. The resulting crossing records (over bit, two direction
//! bits, four edge targets) are concatenated; the canonical key is the
//! lexicographic minimum over all root darts and over all subsets of knot
//! components reversed. Disconnected maps are keyed piecewise and the piece
//! keys sorted, which deliberately forgets how pieces nest inside each
//! other's faces.

use std::collections::HashSet;

use super::map::{Dart, DiagramError, DiagramMap, DiagramResult, Surface};

/// A canonical key: an opaque word sequence ordered lexicographically.
///
/// Keys are only comparable between maps keyed on the same surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u64>);

impl CanonicalKey {
    /// The raw word sequence (stable across runs; suitable for hashing).
    pub fn words(&self) -> &[u64] {
        &self.0
    }

    /// Hex fingerprint of the key, convenient for logs and frozen tests.
    pub fn fingerprint(&self) -> String {
        // FNV-1a over the word stream: stable, dependency-free.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for w in &self.0 {
            for b in w.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x1_0000_01b3);
            }
        }
        format!("{h:016x}")
    }
}

/// Computes the canonical key of `map` on `surface`.
///
/// On [`Surface::Plane`] the map must have its outer face set (unless it has
/// no crossings at all).
pub fn canonical_key(map: &DiagramMap, surface: Surface) -> DiagramResult<CanonicalKey> {
    let n = map.n_crossings();
    let tag = match surface {
        Surface::Sphere => 0u64,
        Surface::Plane => 1u64,
    };
    let mut words = vec![n as u64, map.free_loops() as u64, tag];
    if n == 0 {
        return Ok(CanonicalKey(words));
    }
    let outer_face: Option<HashSet<Dart>> = match surface {
        Surface::Sphere => None,
        Surface::Plane => {
            let d = map.outer_dart().ok_or(DiagramError::MissingOuterFace)?;
            let faces = map.faces();
            Some(faces.face_containing(d).darts.iter().copied().collect())
        }
    };

    // Split the underlying 4-valent graph into connected pieces.
    let piece_of = piece_labels(map);
    let n_pieces = piece_of.iter().copied().max().unwrap() + 1;
    let comp_of_dart = map.passage_component();
    let n_components = map.components().len();

    // Knot components touching each piece.
    let mut piece_comps: Vec<Vec<usize>> = vec![Vec::new(); n_pieces];
    for c in 0..n {
        let comp0 = comp_of_dart[4 * c];
        let comp1 = comp_of_dart[4 * c + 1];
        let p = piece_of[c];
        for comp in [comp0, comp1] {
            if !piece_comps[p].contains(&comp) {
                piece_comps[p].push(comp);
            }
        }
    }

    let mut piece_keys: Vec<Vec<u64>> = Vec::with_capacity(n_pieces);
    for p in 0..n_pieces {
        let roots: Vec<Dart> = (0..4 * n).filter(|&d| piece_of[d / 4] == p).collect();
        let comps = &piece_comps[p];
        let mut best: Option<Vec<u64>> = None;
        for &root in &roots {
            for mask_bits in 0..(1u64 << comps.len()) {
                let mut reversed = vec![false; n_components];
                for (bit, &comp) in comps.iter().enumerate() {
                    reversed[comp] = mask_bits >> bit & 1 == 1;
                }
                let key = rooted_key(map, root, &comp_of_dart, &reversed, outer_face.as_ref());
                if best.as_ref().map_or(true, |b| key < *b) {
                    best = Some(key);
                }
            }
        }
        piece_keys.push(best.expect("every piece has darts"));
    }
    piece_keys.sort();
    for k in piece_keys {
        words.extend(k);
    }
    Ok(CanonicalKey(words))
}

/// Connected-piece label per crossing (labels are dense from 0, assigned in
/// crossing order).
fn piece_labels(map: &DiagramMap) -> Vec<usize> {
    let n = map.n_crossings();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        label[start] = next;
        while let Some(c) = stack.pop() {
            for k in 0..4 {
                let nb = map.alpha(4 * c + k) / 4;
                if label[nb] == usize::MAX {
                    label[nb] = next;
                    stack.push(nb);
                }
            }
        }
        next += 1;
    }
    label
}

/// The BFS relabeling key of the piece containing `root`, with components
/// flagged in `reversed` traversed backwards. If the outer face belongs to
/// this piece, its minimal relabeled dart is appended.
fn rooted_key(
    map: &DiagramMap,
    root: Dart,
    comp_of_dart: &[usize],
    reversed: &[bool],
    outer_face: Option<&HashSet<Dart>>,
) -> Vec<u64> {
    let n = map.n_crossings();
    let mut index_of = vec![usize::MAX; n];
    let mut entry = vec![usize::MAX; n];
    let mut order = Vec::new();
    index_of[root / 4] = 0;
    entry[root / 4] = root;
    order.push(root / 4);
    let mut qi = 0;
    while qi < order.len() {
        let c = order[qi];
        qi += 1;
        let e = entry[c];
        for k in 0..4 {
            let d = 4 * c + (e % 4 + k) % 4;
            let t = map.alpha(d);
            let tc = t / 4;
            if index_of[tc] == usize::MAX {
                index_of[tc] = order.len();
                entry[tc] = t;
                order.push(tc);
            }
        }
    }

    let dir = |d: Dart| map.is_outgoing(d) ^ reversed[comp_of_dart[d]];
    let mut key = Vec::with_capacity(5 * order.len() + 1);
    for &c in &order {
        let e = entry[c];
        let header = (map.is_over(e) as u64)
            | (dir(e) as u64) << 1
            | (dir(map.sigma(e)) as u64) << 2;
        key.push(header);
        for k in 0..4 {
            let d = 4 * c + (e % 4 + k) % 4;
            let t = map.alpha(d);
            let tc = t / 4;
            let offset = (t % 4 + 4 - entry[tc] % 4) % 4;
            key.push((index_of[tc] * 4 + offset) as u64);
        }
    }
    if let Some(darts) = outer_face {
        let rep = darts
            .iter()
            .filter(|&&d| index_of[d / 4] != usize::MAX)
            .map(|&d| (index_of[d / 4] * 4 + (d % 4 + 4 - entry[d / 4] % 4) % 4) as u64)
            .min();
        if let Some(r) = rep {
            key.push(u64::MAX); // separator so outer info never collides
            key.push(r);
        }
    }
    key
}
