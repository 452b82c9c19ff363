//! Legendrian Reidemeister moves on front words.
//!
//! The front-level move system has five move families. Three rewrite a
//! gathered block of three events:
//!
//! * **Kink removal** (`Lr1Down`): `[L(p), X(p+1), R(p)]` or
//!   `[L(p+1), X(p), R(p+1)]` vanishes. The strand wiggles through a small
//!   loop whose two cusps have opposite orientation, so both the
//!   Thurston–Bennequin and rotation numbers survive.
//! * **Cusp-slide removal** (`Lr2Down`): a cusp retreats back through the
//!   two crossings it had pushed through —
//!   `[L(q+1), X(q), X(q+1)] -> [L(q)]`, `[L(q), X(q+1), X(q)] -> [L(q+1)]`,
//!   `[X(q), X(q+1), R(q)] -> [R(q+1)]`, `[X(q+1), X(q), R(q+1)] -> [R(q)]`.
//! * **Crossing slide** (`Lr3`): `[X(a), X(a+1), X(a)]` and
//!   `[X(a+1), X(a), X(a+1)]` trade places.
//!
//! The other two are their insertions: `Lr1Up` plants a kink on any strand
//! at any slice, and `Lr2Up` slides an existing cusp through a neighboring
//! strand.
//!
//! # Gathering
//!
//! A removal site names three event *occurrences* which need not be
//! adjacent: spectator events in between are transported out of the way by
//! the elementary commutations of
//! [`front_canonical`](crate::front::canonical::front_canonical)'s rewriting
//! system. The gatherer tries three schedules (pull the later events
//! leftward, meet in the middle, push the earlier ones rightward), takes
//! only uniquely-valued transpositions, and then explores reorderings
//! *inside* the gathered block (where every branch of a two-valued
//! transposition is safe to follow). A site is enumerated exactly when this
//! procedure exhibits the pattern, so enumeration and application agree by
//! construction. Exhaustiveness over a whole commutation class is guarded
//! by tests that compare against brute-force enumeration over every member
//! of the class.

use std::collections::BTreeSet;

use crate::front::canonical::{front_canonical, swap_options};
use crate::front::word::{EventKind, FrontEvent, FrontWord};

use super::{LegendrianMove, MoveError, MovePolicy, MoveResult};

/// An event plus the occurrence index it had in the original word.
type Tagged = (FrontEvent, usize);

/// Transposes the events at `at-1, at` (tracking tags). Fails when the pair
/// is dependent or the transposition is two-valued — a unique transport is
/// required outside the gathered block.
fn shift_left(w: &mut [Tagged], at: usize) -> bool {
    let (f, tf) = w[at - 1];
    let (e, te) = w[at];
    let opts = swap_options(f, e);
    if opts.len() != 1 {
        return false;
    }
    let (e2, f2) = opts[0];
    w[at - 1] = (e2, te);
    w[at] = (f2, tf);
    true
}

fn slot(w: &[Tagged], tag: usize) -> usize {
    w.iter()
        .position(|&(_, t)| t == tag)
        .expect("tracked occurrence must stay in the word")
}

fn pull_left(w: &mut [Tagged], tag: usize, to: usize) -> bool {
    loop {
        let s = slot(w, tag);
        if s <= to {
            return s == to;
        }
        if !shift_left(w, s) {
            return false;
        }
    }
}

fn push_right(w: &mut [Tagged], tag: usize, to: usize) -> bool {
    loop {
        let s = slot(w, tag);
        if s >= to {
            return s == to;
        }
        if !shift_left(w, s + 1) {
            return false;
        }
    }
}

/// Attempts to make the three occurrences `idx` adjacent (preserving their
/// relative order) by unique-valued commutations. On success returns the
/// transported word and the slot of the block's first event.
fn gather(events: &[FrontEvent], idx: [usize; 3]) -> Option<(Vec<FrontEvent>, usize)> {
    if !(idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < events.len()) {
        return None;
    }
    let base: Vec<Tagged> = events.iter().copied().zip(0..).collect();
    for strategy in 0..3 {
        let mut w = base.clone();
        let ok = match strategy {
            0 => {
                let s0 = slot(&w, idx[0]);
                pull_left(&mut w, idx[1], s0 + 1) && pull_left(&mut w, idx[2], s0 + 2)
            }
            1 => {
                let s1 = slot(&w, idx[1]);
                push_right(&mut w, idx[0], s1 - 1) && pull_left(&mut w, idx[2], s1 + 1)
            }
            _ => {
                let s2 = slot(&w, idx[2]);
                push_right(&mut w, idx[1], s2 - 1) && push_right(&mut w, idx[0], s2 - 2)
            }
        };
        if ok {
            let start = slot(&w, idx[0]);
            debug_assert_eq!(slot(&w, idx[1]), start + 1);
            debug_assert_eq!(slot(&w, idx[2]), start + 2);
            return Some((w.into_iter().map(|(e, _)| e).collect(), start));
        }
    }
    None
}

/// Every arrangement of the adjacent block reachable by legal transpositions
/// within it. Both branches of a two-valued transposition are followed —
/// inside the block each yields a legal equivalent word. Deterministic
/// order; the starting block comes first.
fn block_orderings(g: [FrontEvent; 3]) -> Vec<[FrontEvent; 3]> {
    let mut seen = vec![g];
    let mut stack = vec![g];
    while let Some(b) = stack.pop() {
        for at in 0..2 {
            for (e2, f2) in swap_options(b[at], b[at + 1]) {
                let mut nb = b;
                nb[at] = e2;
                nb[at + 1] = f2;
                if !seen.contains(&nb) {
                    debug_assert!(seen.len() < 64, "block exploration must stay tiny");
                    seen.push(nb);
                    stack.push(nb);
                }
            }
        }
    }
    seen
}

/// Match result: the variant number and the block's replacement.
type Match = (u8, Vec<FrontEvent>);

fn match_lr1(g: [FrontEvent; 3]) -> Option<Match> {
    use FrontEvent::*;
    match g {
        [Left(l), Cross(x), Right(r)] if x == l + 1 && r == l => Some((0, vec![])),
        [Left(l), Cross(x), Right(r)] if x + 1 == l && r == l => Some((1, vec![])),
        _ => None,
    }
}

fn match_lr2(g: [FrontEvent; 3]) -> Option<Match> {
    use FrontEvent::*;
    match g {
        [Left(l), Cross(x1), Cross(x2)] if l >= 2 && x1 + 1 == l && x2 == l => {
            Some((0, vec![Left(l - 1)]))
        }
        [Left(l), Cross(x1), Cross(x2)] if x1 == l + 1 && x2 == l => {
            Some((1, vec![Left(l + 1)]))
        }
        [Cross(x1), Cross(x2), Right(r)] if x2 == x1 + 1 && r == x1 => {
            Some((2, vec![Right(x1 + 1)]))
        }
        [Cross(x1), Cross(x2), Right(r)] if x1 == x2 + 1 && r == x1 => {
            Some((3, vec![Right(x2)]))
        }
        _ => None,
    }
}

fn match_lr3(g: [FrontEvent; 3]) -> Option<Match> {
    use FrontEvent::*;
    match g {
        [Cross(a), Cross(b), Cross(c)] if b == a + 1 && c == a => {
            Some((0, vec![Cross(a + 1), Cross(a), Cross(a + 1)]))
        }
        [Cross(a), Cross(b), Cross(c)] if b + 1 == a && c == a => {
            Some((1, vec![Cross(b), Cross(a), Cross(b)]))
        }
        _ => None,
    }
}

/// Gathers `idx`, searches the block's arrangements for a `matcher` hit with
/// the requested variant, and returns the rewritten word together with the
/// block slot and the matched block.
fn down_rewrite(
    events: &[FrontEvent],
    idx: [usize; 3],
    matcher: fn([FrontEvent; 3]) -> Option<Match>,
    variant: u8,
) -> Option<(Vec<FrontEvent>, usize, [FrontEvent; 3])> {
    let (w, s) = gather(events, idx)?;
    for b in block_orderings([w[s], w[s + 1], w[s + 2]]) {
        if let Some((v, repl)) = matcher(b) {
            if v == variant {
                let mut out = Vec::with_capacity(w.len() - 3 + repl.len());
                out.extend_from_slice(&w[..s]);
                out.extend(repl);
                out.extend_from_slice(&w[s + 3..]);
                return Some((out, s, b));
            }
        }
    }
    None
}

/// The variants a gathered triple offers under `matcher`, in deterministic
/// order.
fn down_variants(
    events: &[FrontEvent],
    idx: [usize; 3],
    matcher: fn([FrontEvent; 3]) -> Option<Match>,
) -> Vec<u8> {
    let Some((w, s)) = gather(events, idx) else {
        return Vec::new();
    };
    let mut vs = Vec::new();
    for b in block_orderings([w[s], w[s + 1], w[s + 2]]) {
        if let Some((v, _)) = matcher(b) {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
    }
    vs.sort_unstable();
    vs
}

/// Ascending occurrence-index triples whose kind multiset matches `want`.
fn kind_triples(events: &[FrontEvent], want: [EventKind; 3]) -> Vec<[usize; 3]> {
    let lists: Vec<Vec<usize>> = want
        .iter()
        .map(|&k| {
            events
                .iter()
                .enumerate()
                .filter(|(_, e)| e.kind() == k)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut out = BTreeSet::new();
    for &a in &lists[0] {
        for &b in &lists[1] {
            if b == a {
                continue;
            }
            for &c in &lists[2] {
                if c == a || c == b {
                    continue;
                }
                let mut t = [a, b, c];
                t.sort_unstable();
                out.insert(t);
            }
        }
    }
    out.into_iter().collect()
}

/// Strand count at every insertion slice (`0..=len`).
fn strands_at_slices(front: &FrontWord) -> Vec<usize> {
    let mut out = Vec::with_capacity(front.len() + 1);
    let mut k = 0isize;
    for e in front.events() {
        out.push(k as usize);
        k += e.delta();
    }
    out.push(k as usize);
    out
}

/// Enumerates every Legendrian move admitted by `policy`, sorted and
/// duplicate-free. Site indices refer to the given word's event list.
pub fn enumerate_leg_moves(front: &FrontWord, policy: MovePolicy) -> Vec<LegendrianMove> {
    use EventKind::*;
    let events = front.events();
    let n = front.n_crossings();
    let mut out = Vec::new();

    if n >= 1 && policy.admits(false, n - 1) {
        for idx in kind_triples(events, [Left, Cross, Right]) {
            for v in down_variants(events, idx, match_lr1) {
                out.push(LegendrianMove::Lr1Down {
                    indices: idx,
                    variant: v,
                });
            }
        }
    }
    if n >= 2 && policy.admits(false, n - 2) {
        let mut seen = BTreeSet::new();
        for idx in kind_triples(events, [Left, Cross, Cross])
            .into_iter()
            .chain(kind_triples(events, [Cross, Cross, Right]))
        {
            if !seen.insert(idx) {
                continue;
            }
            for v in down_variants(events, idx, match_lr2) {
                out.push(LegendrianMove::Lr2Down {
                    indices: idx,
                    variant: v,
                });
            }
        }
    }
    if n >= 3 && policy.admits(false, n) {
        for idx in kind_triples(events, [Cross, Cross, Cross]) {
            for v in down_variants(events, idx, match_lr3) {
                out.push(LegendrianMove::Lr3 {
                    indices: idx,
                    variant: v,
                });
            }
        }
    }

    if policy.admits(true, n + 1) {
        let slices = strands_at_slices(front);
        for (slice, &k) in slices.iter().enumerate() {
            for strand in 1..=k {
                for variant in [0u8, 1] {
                    out.push(LegendrianMove::Lr1Up {
                        slice,
                        strand,
                        variant,
                    });
                }
            }
        }
    }
    if policy.admits(true, n + 2) {
        let slices = strands_at_slices(front);
        for (i, e) in events.iter().enumerate() {
            let k = slices[i];
            let p = e.position();
            match e.kind() {
                Left => {
                    if p <= k {
                        out.push(LegendrianMove::Lr2Up {
                            index: i,
                            variant: 0,
                        });
                    }
                    if p >= 2 {
                        out.push(LegendrianMove::Lr2Up {
                            index: i,
                            variant: 1,
                        });
                    }
                }
                Right => {
                    if p >= 2 {
                        out.push(LegendrianMove::Lr2Up {
                            index: i,
                            variant: 2,
                        });
                    }
                    if k >= p + 2 {
                        out.push(LegendrianMove::Lr2Up {
                            index: i,
                            variant: 3,
                        });
                    }
                }
                Cross => {}
            }
        }
    }

    out.sort_unstable();
    out.dedup();
    out
}

/// Applies a Legendrian move, returning the rewritten (and re-validated)
/// word. Down-moves and slides re-run the gathering, so the site must still
/// be live; insertion sites are checked against the current strand counts.
pub fn apply_leg_move(front: &FrontWord, mv: &LegendrianMove) -> MoveResult<FrontWord> {
    use FrontEvent::*;
    let events = front.events();
    match *mv {
        LegendrianMove::Lr1Down { indices, variant } => {
            finish_down(events, indices, match_lr1, variant)
        }
        LegendrianMove::Lr2Down { indices, variant } => {
            finish_down(events, indices, match_lr2, variant)
        }
        LegendrianMove::Lr3 { indices, variant } => {
            finish_down(events, indices, match_lr3, variant)
        }
        LegendrianMove::Lr1Up {
            slice,
            strand: p,
            variant,
        } => {
            if slice > events.len() {
                return Err(MoveError::Stale(format!("slice {slice} out of range")));
            }
            let k = strands_at_slices(front)[slice];
            if p == 0 || p > k {
                return Err(MoveError::NotApplicable(
                    "no strand at this height to kink",
                ));
            }
            let block = match variant {
                0 => [Left(p), Cross(p + 1), Right(p)],
                1 => [Left(p + 1), Cross(p), Right(p + 1)],
                _ => return Err(MoveError::Stale(format!("kink variant {variant}"))),
            };
            let mut out = Vec::with_capacity(events.len() + 3);
            out.extend_from_slice(&events[..slice]);
            out.extend_from_slice(&block);
            out.extend_from_slice(&events[slice..]);
            Ok(FrontWord::new(out)?)
        }
        LegendrianMove::Lr2Up { index, variant } => {
            if index >= events.len() {
                return Err(MoveError::Stale(format!("event index {index} out of range")));
            }
            let e = events[index];
            let k = strands_at_slices(front)[index];
            let p = e.position();
            let block: [FrontEvent; 3] = match (e.kind(), variant) {
                (EventKind::Left, 0) if p <= k => [Left(p + 1), Cross(p), Cross(p + 1)],
                (EventKind::Left, 1) if p >= 2 => [Left(p - 1), Cross(p), Cross(p - 1)],
                (EventKind::Right, 2) if p >= 2 => [Cross(p - 1), Cross(p), Right(p - 1)],
                (EventKind::Right, 3) if k >= p + 2 => [Cross(p + 1), Cross(p), Right(p + 1)],
                (EventKind::Left | EventKind::Right, 0..=3) => {
                    return Err(MoveError::NotApplicable(
                        "cusp slide preconditions fail at this occurrence",
                    ))
                }
                _ => {
                    return Err(MoveError::Stale(format!(
                        "cusp slide variant {variant} does not fit event {e}"
                    )))
                }
            };
            let mut out = Vec::with_capacity(events.len() + 2);
            out.extend_from_slice(&events[..index]);
            out.extend_from_slice(&block);
            out.extend_from_slice(&events[index + 1..]);
            Ok(FrontWord::new(out)?)
        }
    }
}

fn finish_down(
    events: &[FrontEvent],
    idx: [usize; 3],
    matcher: fn([FrontEvent; 3]) -> Option<Match>,
    variant: u8,
) -> MoveResult<FrontWord> {
    for &ix in &idx {
        if ix >= events.len() {
            return Err(MoveError::Stale(format!("event index {ix} out of range")));
        }
    }
    match down_rewrite(events, idx, matcher, variant) {
        Some((out, _, _)) => Ok(FrontWord::new(out)?),
        None => Err(MoveError::Stale(
            "the named events no longer form this move's pattern".into(),
        )),
    }
}

/// The move that undoes `mv` on `apply_leg_move(pre, mv)`. Results are
/// equal to `pre` as commutation classes (compare canonical forms): a
/// gathered removal reinserts into the transported word, not the original
/// spelling.
pub fn inverse_leg_move(pre: &FrontWord, mv: &LegendrianMove) -> Option<LegendrianMove> {
    let events = pre.events();
    match *mv {
        LegendrianMove::Lr1Up { slice, variant, .. } => Some(LegendrianMove::Lr1Down {
            indices: [slice, slice + 1, slice + 2],
            variant,
        }),
        LegendrianMove::Lr2Up { index, variant } => Some(LegendrianMove::Lr2Down {
            indices: [index, index + 1, index + 2],
            variant,
        }),
        LegendrianMove::Lr1Down { indices, variant } => {
            let (_, s, block) = down_rewrite(events, indices, match_lr1, variant)?;
            let strand = match variant {
                0 => block[1].position() - 1,
                _ => block[1].position(),
            };
            Some(LegendrianMove::Lr1Up {
                slice: s,
                strand,
                variant,
            })
        }
        LegendrianMove::Lr2Down { indices, variant } => {
            let (_, s, _) = down_rewrite(events, indices, match_lr2, variant)?;
            Some(LegendrianMove::Lr2Up {
                index: s,
                variant,
            })
        }
        LegendrianMove::Lr3 { indices, variant } => {
            let (_, s, _) = down_rewrite(events, indices, match_lr3, variant)?;
            Some(LegendrianMove::Lr3 {
                indices: [s, s + 1, s + 2],
                variant: variant ^ 1,
            })
        }
    }
}

/// Is this front's commutation class the two-event unknot front `L1 R1`?
pub fn is_trivial_front(front: &FrontWord) -> bool {
    front_canonical(front).events() == [FrontEvent::Left(1), FrontEvent::Right(1)]
}
