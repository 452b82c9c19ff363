//! Conversion between PD codes and combinatorial maps.

use super::map::{Dart, DiagramError, DiagramMap, DiagramResult};
use super::pd::{successor_table, PdCode, PdCrossing, PdError};

/// Error type of [`build_map`]: either the PD layer or map validation failed.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BuildError {
    /// The PD code itself is malformed.
    #[error(transparent)]
    Pd(#[from] PdError),
    /// The code is well-formed but does not describe a planar map.
    #[error(transparent)]
    Map(#[from] DiagramError),
}

/// Builds the combinatorial map of a PD code.
///
/// Slot `k` of crossing `c` carries arc label `code.0[c].0[k]`; equal labels
/// are glued into edges; the over axis is `{1,3}` (slot 0 is the incoming
/// under-strand by convention); orientations are reconstructed from label
/// succession. `outer_face`, if given, selects the outer face by index in
/// [`DiagramMap::faces`] order, marking the map as planarly embedded.
pub fn build_map(code: &PdCode, outer_face: Option<usize>) -> Result<DiagramMap, BuildError> {
    let n = code.0.len();
    if n == 0 {
        return Err(BuildError::Pd(PdError::Empty));
    }
    let succ = successor_table(code)?;

    // Pair equal labels into edges.
    let mut first_seen: std::collections::BTreeMap<u64, Dart> = std::collections::BTreeMap::new();
    let mut alpha: Vec<Dart> = vec![usize::MAX; 4 * n];
    for (c, x) in code.0.iter().enumerate() {
        for (k, &label) in x.0.iter().enumerate() {
            let d = 4 * c + k;
            match first_seen.remove(&label) {
                None => {
                    first_seen.insert(label, d);
                }
                Some(other) => {
                    alpha[d] = other;
                    alpha[other] = d;
                }
            }
        }
    }
    debug_assert!(first_seen.is_empty(), "labels appear exactly twice");

    // Orientations: trace strand walks and orient each component.
    let over_axis = vec![1u8; n];
    let mut outgoing = vec![false; 4 * n];
    let mut visited = vec![false; 4 * n];
    let label_of = |d: Dart| code.0[d / 4].0[d % 4];
    for start in 0..4 * n {
        if visited[start] {
            continue;
        }
        // Walk the component pretending `start` is outgoing.
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            visited[d] = true;
            visited[4 * (d / 4) + (d % 4 + 2) % 4] = true;
            walk.push(d);
            d = {
                let a = alpha[d];
                4 * (a / 4) + (a % 4 + 2) % 4
            };
            if d == start {
                break;
            }
        }
        // Decide whether the walk runs with or against the orientation.
        // Slot 0 is always incoming (under-strand convention); slot 2 always
        // outgoing.
        let mut with_orientation = None;
        for &w in &walk {
            match w % 4 {
                2 => {
                    if with_orientation == Some(false) {
                        return Err(BuildError::Pd(PdError::BadUnderSuccession(w / 4)));
                    }
                    with_orientation = Some(true);
                }
                0 => {
                    if with_orientation == Some(true) {
                        return Err(BuildError::Pd(PdError::BadUnderSuccession(w / 4)));
                    }
                    with_orientation = Some(false);
                }
                _ => {}
            }
        }
        // Always-over component: fall back to label succession along the
        // walk; when both directions are consistent (two-arc components),
        // prefer the walk direction.
        let aligned = match with_orientation {
            Some(v) => v,
            None => {
                let l0 = label_of(walk[0]);
                let l1 = label_of(walk[1 % walk.len()]);
                if succ(l0) == l1 {
                    true
                } else if succ(l1) == l0 {
                    false
                } else {
                    return Err(BuildError::Pd(PdError::BadOverSuccession(walk[0] / 4)));
                }
            }
        };
        for &w in &walk {
            let opposite = 4 * (w / 4) + (w % 4 + 2) % 4;
            outgoing[w] = aligned;
            outgoing[opposite] = !aligned;
        }
    }

    let mut map = DiagramMap::new(alpha, over_axis, outgoing, 0, None)?;
    if let Some(f) = outer_face {
        map.set_outer_face(f)?;
    }
    Ok(map)
}

/// Emits a PD code for a map (inverse of [`build_map`] up to isomorphism).
///
/// Arc labels are assigned 1, 2, ... along each component in
/// [`DiagramMap::components`] order, and each crossing tuple starts at its
/// incoming under-strand slot. Free loops are not representable in PD form
/// and must be absent.
pub fn emit_pd(map: &DiagramMap) -> DiagramResult<PdCode> {
    if map.n_crossings() == 0 || map.free_loops() > 0 {
        return Err(DiagramError::EmptyDiagram);
    }
    let mut label_of_dart: Vec<u64> = vec![0; map.n_darts()];
    let mut next = 1u64;
    for comp in map.components() {
        for &d in &comp {
            // Edge {d, alpha(d)} gets one label.
            label_of_dart[d] = next;
            label_of_dart[map.alpha(d)] = next;
            next += 1;
        }
    }
    let mut crossings = Vec::with_capacity(map.n_crossings());
    for c in 0..map.n_crossings() {
        let under = ((map.over_axis(c) + 1) % 2) as usize;
        let start = if map.is_outgoing(4 * c + under) {
            under + 2
        } else {
            under
        };
        let mut tuple = [0u64; 4];
        for (k, t) in tuple.iter_mut().enumerate() {
            *t = label_of_dart[4 * c + (start + k) % 4];
        }
        crossings.push(PdCrossing(tuple));
    }
    Ok(PdCode(crossings))
}
