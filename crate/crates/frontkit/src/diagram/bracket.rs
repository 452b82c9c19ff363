//! Kauffman bracket and its writhe-normalized form.
//!
//! The bracket is computed by the full state sum: each crossing is smoothed
//! the `A` way (joining each over-strand ray to the under-strand ray
//! clockwise-before it) or the `B` way (counterclockwise-after), every state
//! contributes `A^(#A - #B) * d^(loops - 1)` with `d = -A^2 - A^-2`, and the
//! contributions are summed. The normalized polynomial multiplies by
//! `(-A^3)^(-writhe)`, which makes it invariant under all three
//! Reidemeister moves and equal to 1 on reduced unknot diagrams.
//!
//! The state sum is exponential in the crossing number, so it refuses
//! diagrams above [`BRACKET_CROSSING_LIMIT`]. Front resolutions have a
//! separate polynomial-space route (a sweep across the front) that is
//! cross-checked against this one on small inputs.

use crate::poly::LaurentPoly;

use super::map::{DiagramError, DiagramMap, DiagramResult};

/// Largest crossing number accepted by the exponential state sum.
pub const BRACKET_CROSSING_LIMIT: usize = 24;

/// Bracket data of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPolynomials {
    /// The raw bracket, which is only a regular-isotopy invariant.
    pub bracket: LaurentPoly,
    /// `(-A^3)^(-writhe) * bracket`: the ambient-isotopy invariant.
    pub normalized: LaurentPoly,
    /// The writhe used for normalization.
    pub writhe: i64,
}

/// The loop value `d = -A^2 - A^-2`.
pub(crate) fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Raw Kauffman bracket of the diagram.
///
/// Errors on the empty diagram (the bracket is normalized so a single loop
/// has bracket 1, so there is no sensible value for nothing at all) and on
/// diagrams above [`BRACKET_CROSSING_LIMIT`] crossings.
pub fn kauffman_bracket_raw(map: &DiagramMap) -> DiagramResult<LaurentPoly> {
    let n = map.n_crossings();
    if map.is_empty() {
        return Err(DiagramError::EmptyDiagram);
    }
    if n > BRACKET_CROSSING_LIMIT {
        return Err(DiagramError::TooLarge {
            crossings: n,
            limit: BRACKET_CROSSING_LIMIT,
        });
    }
    let d = loop_value();
    if n == 0 {
        // Crossing-free loops only.
        return Ok(d.pow(map.free_loops() as u32 - 1));
    }

    // Precompute powers of d up to the maximum possible loop count.
    let max_loops = 2 * n + map.free_loops();
    let mut d_pows = Vec::with_capacity(max_loops + 1);
    d_pows.push(LaurentPoly::one());
    for _ in 0..max_loops {
        d_pows.push(d_pows.last().unwrap().mul(&d));
    }

    let mut total = LaurentPoly::zero();
    for state in 0u64..(1u64 << n) {
        // Union-find over darts: smoothing arcs plus the diagram edges.
        let mut parent: Vec<usize> = (0..4 * n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        fn union(parent: &mut [usize], a: usize, b: usize) {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut a_count = 0i64;
        for c in 0..n {
            let o = map.over_axis(c) as usize;
            let (p, q) = if state >> c & 1 == 0 {
                // A-smoothing: over ray joins the clockwise-previous ray.
                a_count += 1;
                ((o, (o + 3) % 4), ((o + 1) % 4, (o + 2) % 4))
            } else {
                // B-smoothing: over ray joins the counterclockwise-next ray.
                ((o, (o + 1) % 4), ((o + 2) % 4, (o + 3) % 4))
            };
            union(&mut parent, 4 * c + p.0, 4 * c + p.1);
            union(&mut parent, 4 * c + q.0, 4 * c + q.1);
        }
        for d_id in 0..4 * n {
            union(&mut parent, d_id, map.alpha(d_id));
        }
        let mut loops = 0usize;
        for d_id in 0..4 * n {
            if find(&mut parent, d_id) == d_id {
                loops += 1;
            }
        }
        loops += map.free_loops();
        let b_count = n as i64 - a_count;
        total = total.add(&d_pows[loops - 1].shifted(a_count - b_count));
    }
    Ok(total)
}

/// Bracket plus its writhe-normalized form.
pub fn kauffman_bracket(map: &DiagramMap) -> DiagramResult<BracketPolynomials> {
    let bracket = kauffman_bracket_raw(map)?;
    let writhe = map.writhe();
    // (-A^3)^(-w) = (-1)^w * A^(-3w).
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = bracket.shifted(-3 * writhe).scaled(sign);
    Ok(BracketPolynomials {
        bracket,
        normalized,
        writhe,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build::build_map;
    use crate::diagram::parse_pd;

    fn bracket_of(pd: &str) -> BracketPolynomials {
        kauffman_bracket(&build_map(&parse_pd(pd).unwrap(), None).unwrap()).unwrap()
    }

    #[test]
    fn single_loop_has_bracket_one() {
        let m = DiagramMap::trivial(1);
        assert!(kauffman_bracket_raw(&m).unwrap().is_one());
    }

    #[test]
    fn two_loops_have_bracket_d() {
        let m = DiagramMap::trivial(2);
        assert_eq!(kauffman_bracket_raw(&m).unwrap(), loop_value());
    }

    #[test]
    fn empty_diagram_is_an_error() {
        let m = DiagramMap::trivial(0);
        assert_eq!(
            kauffman_bracket_raw(&m).unwrap_err(),
            DiagramError::EmptyDiagram
        );
    }

    #[test]
    fn positive_kink_bracket_is_minus_a_cubed() {
        let b = bracket_of("PD[X[1,2,2,1]]");
        let expected = LaurentPoly::from_terms([(3, -1)]);
        let anti = LaurentPoly::from_terms([(-3, -1)]);
        // The one-crossing PD is a kink of one handedness or the other.
        assert!(b.bracket == expected || b.bracket == anti);
        assert!(b.normalized.is_one(), "kinks normalize to the unknot");
    }

    #[test]
    fn kink_mirror_bracket_swaps_a_and_a_inverse() {
        let m = build_map(&parse_pd("PD[X[1,2,2,1]]").unwrap(), None).unwrap();
        let b = kauffman_bracket_raw(&m).unwrap();
        let bm = kauffman_bracket_raw(&m.mirror()).unwrap();
        assert_eq!(bm, b.inverted());
    }

    #[test]
    fn normalized_bracket_of_trefoils() {
        // The left-handed trefoil (writhe -3) and its mirror.
        let m = build_map(
            &parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap(),
            None,
        )
        .unwrap();
        let left = kauffman_bracket(&m).unwrap();
        assert_eq!(left.writhe, -3);
        assert_eq!(
            left.normalized,
            LaurentPoly::from_terms([(4, 1), (12, 1), (16, -1)])
        );
        let right = kauffman_bracket(&m.mirror()).unwrap();
        assert_eq!(right.writhe, 3);
        assert_eq!(
            right.normalized,
            LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)])
        );
        assert_eq!(right.normalized, left.normalized.inverted());
    }

    #[test]
    fn normalized_bracket_of_hopf_link() {
        let b = bracket_of("PD[X[1,3,2,4],X[3,1,4,2]]");
        assert_eq!(b.writhe.abs(), 2);
        // Raw bracket of the Hopf link in either chirality.
        assert_eq!(
            b.bracket,
            LaurentPoly::from_terms([(4, -1), (-4, -1)])
        );
        let expected = if b.writhe > 0 {
            LaurentPoly::from_terms([(-2, -1), (-10, -1)])
        } else {
            LaurentPoly::from_terms([(2, -1), (10, -1)])
        };
        assert_eq!(b.normalized, expected);
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let b = bracket_of("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
        assert_eq!(b.writhe, 0);
        assert_eq!(b.normalized, b.normalized.inverted());
        assert_eq!(
            b.normalized,
            LaurentPoly::from_terms([(8, 1), (-8, 1), (4, -1), (-4, -1), (0, 1)])
        );
    }

    #[test]
    fn free_loop_multiplies_by_d() {
        let code = parse_pd("PD[X[1,2,2,1]]").unwrap();
        let plain = build_map(&code, None).unwrap();
        let mut with_loop = plain.clone();
        with_loop.set_free_loops(1);
        assert_eq!(
            kauffman_bracket_raw(&with_loop).unwrap(),
            kauffman_bracket_raw(&plain).unwrap().mul(&loop_value())
        );
    }

    #[test]
    fn guard_rejects_oversized_diagrams() {
        // 25 disjoint kinks: a valid map one crossing above the limit.
        let alpha = (0..25 * 4)
            .map(|d| 4 * (d / 4) + [1usize, 0, 3, 2][d % 4])
            .collect::<Vec<_>>();
        let out = (0..25 * 4)
            .map(|d| [true, false, false, true][d % 4])
            .collect::<Vec<_>>();
        let big = DiagramMap::new(alpha, vec![1u8; 25], out, 0, None).unwrap();
        assert_eq!(
            kauffman_bracket_raw(&big).unwrap_err(),
            DiagramError::TooLarge {
                crossings: 25,
                limit: BRACKET_CROSSING_LIMIT
            }
        );
    }
}
