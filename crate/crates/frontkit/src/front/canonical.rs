//! Commutation normal form for front words.
//!
//! Two adjacent events commute when their footprints at the shared time
//! slice are disjoint. Footprints are intervals of strand positions:
//!
//! * a crossing `X(i)` occupies the closed interval `[i, i+1]` on both
//!   sides;
//! * a right cusp `R(i)` occupies `[i, i+1]` before it happens and the open
//!   vacated gap `(i-1, i)` after;
//! * a left cusp `L(p)` occupies the open target gap `(p-1, p)` before it
//!   happens and `[p, p+1]` after.
//!
//! Transposing a pair renumbers positions deterministically: an event
//! passing a cusp that sits above it shifts by ±2, and a cusp acquiring a
//! new cusp above it shifts likewise. One transposition is two-valued: a
//! left cusp opening in the gap vacated by a right cusp may slide past it
//! on either side of the capped pair, landing above (`R(a) L(a)` becomes
//! `L(a) R(a+2)`) or below (`L(a+2) R(a)`). Including both outcomes makes
//! every transposition reversible, so mutual reachability is an
//! equivalence relation on words.
//!
//! The normal form is the lexicographically least word reachable by these
//! transpositions, ordering events by position and then by kind
//! (`L < X < R`). It is computed by repeatedly emitting the least frontier
//! event; ties between distinct frontier occurrences are resolved by
//! comparing the best continuation of each residual, so the result depends
//! only on the equivalence class.

use std::collections::HashMap;

use super::word::{EventKind, FrontEvent, FrontWord};

/// The normal form of `front` under the commutation rewriting system.
///
/// Words related by a sequence of legal transpositions map to the same
/// output, and the function is idempotent.
pub fn front_canonical(front: &FrontWord) -> FrontWord {
    let mut memo = HashMap::new();
    let events = lex_min(front.events(), &mut memo);
    FrontWord::new(events).expect("commutation preserves validity")
}

/// The legal transpositions of the adjacent pair `f` then `e` (with `e`'s
/// position expressed in post-`f` coordinates). Each entry is `(e', f')`,
/// the same two events reordered with positions renumbered. Empty when the
/// footprints interact; two entries in the vacated-gap case.
pub(crate) fn swap_options(f: FrontEvent, e: FrontEvent) -> Vec<(FrontEvent, FrontEvent)> {
    // A left cusp opening exactly in the gap a right cusp vacated can pass
    // it above or below the capped pair.
    if let (FrontEvent::Right(a), FrontEvent::Left(b)) = (f, e) {
        if a == b {
            return vec![
                (FrontEvent::Left(a), FrontEvent::Right(a + 2)),
                (FrontEvent::Left(a + 2), FrontEvent::Right(a)),
            ];
        }
    }
    let i = f.position() as isize;
    let p = e.position() as isize;
    // Footprint of `f` after it happens: closed [i, i+1] for L/X, open
    // (i-1, i) for R. Footprint of `e` before it happens: closed [p, p+1]
    // for X/R, open (p-1, p) for L.
    let f_open = f.kind() == EventKind::Right;
    let e_open = e.kind() == EventKind::Left;
    let above = match (f_open, e_open) {
        (false, false) => p <= i - 2,
        (false, true) => p <= i,
        (true, false) => p <= i - 2,
        (true, true) => p <= i - 1,
    };
    let below = match (f_open, e_open) {
        (false, false) => p >= i + 2,
        (false, true) => p >= i + 2,
        (true, false) => p >= i,
        (true, true) => p >= i + 1,
    };
    if above {
        let fi = i + e.delta();
        debug_assert!(fi >= 1);
        vec![(e, f.with_position(fi as usize))]
    } else if below {
        let ep = p - f.delta();
        debug_assert!(ep >= 1);
        vec![(e.with_position(ep as usize), f)]
    } else {
        Vec::new()
    }
}

/// A frontier occurrence: the event as it reads at the head of the word,
/// plus the rest of the word once it is extracted.
struct Candidate {
    head: FrontEvent,
    rest: Vec<FrontEvent>,
}

/// Bubbles `word[j]` to the front through successive transpositions,
/// following every branch of the two-valued case. Empty if some earlier
/// event blocks it on all branches.
fn extract(word: &[FrontEvent], j: usize) -> Vec<Candidate> {
    let suffix = &word[j + 1..];
    let mut done: Vec<Candidate> = Vec::new();
    let mut stack = vec![(j, word[j], word[..j].to_vec())];
    while let Some((t, e, prefix)) = stack.pop() {
        if t == 0 {
            let mut rest = prefix;
            rest.extend_from_slice(suffix);
            if !done.iter().any(|c| c.head == e && c.rest == rest) {
                done.push(Candidate { head: e, rest });
            }
            continue;
        }
        for (e2, f2) in swap_options(prefix[t - 1], e) {
            let mut p2 = prefix.clone();
            p2[t - 1] = f2;
            stack.push((t - 1, e2, p2));
        }
    }
    done
}

/// Ordering key for the greedy emission: position first, then kind.
fn key(e: FrontEvent) -> (usize, EventKind) {
    (e.position(), e.kind())
}

/// Lexicographic comparison of whole words under `key`.
fn word_lt(a: &[FrontEvent], b: &[FrontEvent]) -> bool {
    let ka = a.iter().map(|&e| key(e));
    let kb = b.iter().map(|&e| key(e));
    ka.cmp(kb) == std::cmp::Ordering::Less
}

/// The least word in the commutation class of `word`.
fn lex_min(
    word: &[FrontEvent],
    memo: &mut HashMap<Vec<FrontEvent>, Vec<FrontEvent>>,
) -> Vec<FrontEvent> {
    if word.len() <= 1 {
        return word.to_vec();
    }
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let mut picks: Vec<Candidate> = Vec::new();
    for j in 0..word.len() {
        for c in extract(word, j) {
            match picks.first() {
                Some(best) if key(c.head) > key(best.head) => {}
                Some(best) if key(c.head) < key(best.head) => picks = vec![c],
                Some(_) => {
                    // Exact tie: keep both unless the residuals coincide.
                    if !picks.iter().any(|p| p.rest == c.rest) {
                        picks.push(c);
                    }
                }
                None => picks.push(c),
            }
        }
    }
    // Every nonempty valid word has at least one frontier event (index 0).
    let head = picks[0].head;
    let mut best: Option<Vec<FrontEvent>> = None;
    for c in &picks {
        let tail = lex_min(&c.rest, memo);
        if best.as_ref().map_or(true, |b| word_lt(&tail, b)) {
            best = Some(tail);
        }
    }
    let mut out = vec![head];
    out.extend(best.unwrap());
    memo.insert(word.to_vec(), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::super::word::parse_front;
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(s: &str) -> FrontWord {
        parse_front(s).unwrap()
    }

    fn canon_str(s: &str) -> String {
        front_canonical(&w(s)).to_string()
    }

    /// All words obtained from `word` by one legal adjacent transposition.
    fn neighbors(word: &[FrontEvent]) -> Vec<Vec<FrontEvent>> {
        let mut out = Vec::new();
        for t in 0..word.len().saturating_sub(1) {
            for (e, f) in swap_options(word[t], word[t + 1]) {
                let mut v = word.to_vec();
                v[t] = e;
                v[t + 1] = f;
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn every_transposition_is_reversible_and_preserves_validity() {
        let samples = [
            "L1 L3 X2 X2 X2 R1 R1",
            "L1 L3 X2 X2 R3 R1",
            "L1 L1 R1 R1",
            "L1 L3 R3 R1",
            "L1 R1 L1 R1",
            "L1 X1 R1",
            "L1 L2 X3 R3 R1",
        ];
        for s in samples {
            let word = w(s);
            for t in 0..word.len() - 1 {
                let (a, b) = (word.events()[t], word.events()[t + 1]);
                for (e, f) in swap_options(a, b) {
                    let mut v = word.events().to_vec();
                    v[t] = e;
                    v[t + 1] = f;
                    FrontWord::new(v).expect("transposition keeps the word valid");
                    assert!(
                        swap_options(e, f).contains(&(a, b)),
                        "step on {s} at {t} not reversible"
                    );
                }
            }
        }
    }

    #[test]
    fn stacked_eyes_interleavings_share_a_normal_form() {
        // Four encodings of the same two disjoint eyes.
        let a = canon_str("L1 L3 R3 R1");
        let b = canon_str("L1 L3 R1 R1");
        let c = canon_str("L1 L1 R1 R1");
        let d = canon_str("L1 R1 L1 R1");
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(c, d);
    }

    #[test]
    fn normal_form_is_idempotent() {
        for s in [
            "L1 R1",
            "L1 X1 R1",
            "L1 L3 X2 X2 X2 R1 R1",
            "L1 L3 X2 X2 R3 R1",
            "L1 L1 R1 R1",
            "L1 L2 X3 R3 R1",
        ] {
            let once = front_canonical(&w(s));
            let twice = front_canonical(&once);
            assert_eq!(once, twice, "idempotence on {s}");
        }
    }

    #[test]
    fn normal_form_preserves_invariants() {
        for s in ["L1 X1 R1", "L1 L3 X2 X2 X2 R1 R1", "L1 L3 X2 X2 R3 R1"] {
            let orig = w(s);
            let canon = front_canonical(&orig);
            assert_eq!(canon.n_components(), orig.n_components());
            assert_eq!(canon.writhe(), orig.writhe());
            assert_eq!(canon.n_cusps(), orig.n_cusps());
            if orig.n_components() == 1 {
                assert_eq!(canon.tb().unwrap(), orig.tb().unwrap());
                assert_eq!(canon.rot_pair().unwrap(), orig.rot_pair().unwrap());
            }
        }
    }

    /// Exhaustive confluence: enumerate the full commutation class of each
    /// sample by breadth-first closure over transpositions, and check every
    /// member canonicalizes to the same word.
    #[test]
    fn normal_form_is_constant_on_small_commutation_classes() {
        use std::collections::{HashSet, VecDeque};
        for s in [
            "L1 L3 R3 R1",
            "L1 L1 R1 R1",
            "L1 L3 X2 X2 R3 R1",
            "L1 L3 X2 X2 X2 R1 R1",
            "L1 L2 X3 R3 R1",
            "L1 L3 L5 R5 R3 R1",
        ] {
            let start = w(s).events().to_vec();
            let mut seen: HashSet<Vec<FrontEvent>> = HashSet::new();
            let mut queue = VecDeque::new();
            seen.insert(start.clone());
            queue.push_back(start.clone());
            while let Some(v) = queue.pop_front() {
                for n in neighbors(&v) {
                    if seen.insert(n.clone()) {
                        queue.push_back(n);
                    }
                }
                assert!(seen.len() < 100_000, "class of {s} unexpectedly large");
            }
            let expect = front_canonical(&w(s));
            assert!(seen.len() > 1, "class of {s} should not be a singleton");
            for v in &seen {
                let word = FrontWord::new(v.clone()).unwrap();
                assert_eq!(
                    front_canonical(&word),
                    expect,
                    "member {word} of the class of {s}"
                );
            }
        }
    }

    #[test]
    fn random_shuffles_do_not_change_the_normal_form() {
        let base = w("L1 L3 L5 X4 X2 X2 X4 R5 X2 R1 R1");
        let expect = front_canonical(&base);
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut v = base.events().to_vec();
        for _ in 0..400 {
            let t = rng.gen_range(0..v.len() - 1);
            let options = swap_options(v[t], v[t + 1]);
            if !options.is_empty() {
                let (e, f) = options[rng.gen_range(0..options.len())];
                v[t] = e;
                v[t + 1] = f;
            }
            let word = FrontWord::new(v.clone()).unwrap();
            assert_eq!(front_canonical(&word), expect);
        }
    }

    #[test]
    fn greedy_order_prefers_low_positions_then_kind() {
        // The lone eye is already canonical.
        assert_eq!(canon_str("L1 R1"), "L1 R1");
        // A cusp below an existing eye is pulled as early as possible.
        assert_eq!(canon_str("L1 L3 R3 R1"), "L1 L1 R1 R1");
    }
}
