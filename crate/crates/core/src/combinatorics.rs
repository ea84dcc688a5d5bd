//! Balanced integer sets, colored triples, and exact covering oracles.
//!
//! Integers are colored by parity: even is black, odd is white. A triple
//! is black when it has one even and two odd members (the even one is its
//! central element), white when it has one odd and two even members.
//! Coverage questions over a balanced set depend only on how many elements
//! of each parity remain, which keeps exhaustive answers cheap; the test
//! suite cross-checks that reduction against a bitmask search.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::words::Color;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("a triple needs exactly 3 distinct integers, got {got}")]
    BadTripleSize { got: usize },
    #[error("triples and singletons must be pairwise disjoint subsets of their segments")]
    NotDisjoint,
    #[error("triple {index} has the wrong color for its role")]
    WrongColor { index: usize },
    #[error("singleton {value} must be odd")]
    EvenSingleton { value: i64 },
    #[error("piece {index} is not contained in a single segment")]
    NotInSegment { index: usize },
    #[error("set size {size} exceeds the exhaustive bound {bound}")]
    TooLarge { size: usize, bound: usize },
}

/// Parity color of an integer: even is black, odd is white.
pub fn int_color(v: i64) -> Color {
    if v.rem_euclid(2) == 0 {
        Color::Black
    } else {
        Color::White
    }
}

/// A finite integer set with size divisible by 12 and equal parity counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedSet {
    elements: BTreeSet<i64>,
}

impl BalancedSet {
    pub fn new(elements: impl IntoIterator<Item = i64>) -> Option<Self> {
        let elements: BTreeSet<i64> = elements.into_iter().collect();
        validate_balanced(&elements).then_some(BalancedSet { elements })
    }

    /// The contiguous segment `[start, start + 12n)`.
    pub fn segment(start: i64, twelves: usize) -> Self {
        let elements = (start..start + 12 * twelves as i64).collect();
        BalancedSet { elements }
    }

    pub fn elements(&self) -> &BTreeSet<i64> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elements.contains(&v)
    }
}

/// Both balance conditions: size divisible by 12, equal even/odd counts.
pub fn validate_balanced(elements: &BTreeSet<i64>) -> bool {
    if elements.len() % 12 != 0 {
        return false;
    }
    let evens = elements.iter().filter(|&&v| v % 2 == 0).count();
    evens * 2 == elements.len()
}

/// A colored triple with its central (minority-parity) element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredTriple {
    pub elements: [i64; 3],
    pub color: Color,
    pub central: i64,
}

/// Colors a 3-element set, or returns `None` when all three parities agree.
pub fn triple_color(elements: &[i64]) -> Result<Option<ColoredTriple>, CombinatoricsError> {
    let set: BTreeSet<i64> = elements.iter().copied().collect();
    if set.len() != 3 {
        return Err(CombinatoricsError::BadTripleSize { got: set.len() });
    }
    let sorted: Vec<i64> = set.into_iter().collect();
    let evens: Vec<i64> = sorted.iter().copied().filter(|&v| v % 2 == 0).collect();
    let odds: Vec<i64> = sorted.iter().copied().filter(|&v| v % 2 != 0).collect();
    let (color, central) = match (evens.len(), odds.len()) {
        (1, 2) => (Color::Black, evens[0]),
        (2, 1) => (Color::White, odds[0]),
        _ => return Ok(None),
    };
    Ok(Some(ColoredTriple {
        elements: [sorted[0], sorted[1], sorted[2]],
        color,
        central,
    }))
}

fn expect_colored(
    elements: &[i64],
    want: Color,
    index: usize,
) -> Result<ColoredTriple, CombinatoricsError> {
    match triple_color(elements)? {
        Some(t) if t.color == want => Ok(t),
        _ => Err(CombinatoricsError::WrongColor { index }),
    }
}

/// Searches `residue` for any triple of the given color.
fn find_triple(residue: &BTreeSet<i64>, want: Color) -> Option<[i64; 3]> {
    let v: Vec<i64> = residue.iter().copied().collect();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            for k in (j + 1)..v.len() {
                if let Ok(Some(t)) = triple_color(&[v[i], v[j], v[k]]) {
                    if t.color == want {
                        return Some([v[i], v[j], v[k]]);
                    }
                }
            }
        }
    }
    None
}

/// Witnessed verdict for the residue implication: if a black triple
/// survives outside the white triples, a white triple must too.
#[derive(Debug, Clone, Serialize)]
pub struct ResidueWitness {
    pub holds: bool,
    pub black_witness: Option<[i64; 3]>,
    pub white_witness: Option<[i64; 3]>,
}

/// Removes the given disjoint white triples from `set` and checks the
/// implication by exhaustive search of the residue.
pub fn check_lemma_5_2(
    set: &BalancedSet,
    whites: &[[i64; 3]],
) -> Result<ResidueWitness, CombinatoricsError> {
    let mut used: BTreeSet<i64> = BTreeSet::new();
    for (i, triple) in whites.iter().enumerate() {
        expect_colored(triple, Color::White, i)?;
        for &v in triple {
            if !set.contains(v) {
                return Err(CombinatoricsError::NotInSegment { index: i });
            }
            if !used.insert(v) {
                return Err(CombinatoricsError::NotDisjoint);
            }
        }
    }
    let residue: BTreeSet<i64> = set.elements().difference(&used).copied().collect();
    let black_witness = find_triple(&residue, Color::Black);
    let white_witness = find_triple(&residue, Color::White);
    let holds = black_witness.is_none() || white_witness.is_some();
    Ok(ResidueWitness { holds, black_witness, white_witness })
}

/// Disjoint colored triples and white singletons spread over disjoint
/// balanced segments.
#[derive(Debug, Clone, Serialize)]
pub struct TriplePlacement {
    pub segments: Vec<BalancedSet>,
    pub black_triples: Vec<[i64; 3]>,
    pub white_triples: Vec<[i64; 3]>,
    pub white_singletons: Vec<i64>,
}

/// Outcome of checking the covering inequality `|O| >= 3/4 |A| + |I|`
/// under its hypotheses. `I` is the set of segments holding exactly two
/// black triples.
#[derive(Debug, Clone, Serialize)]
pub struct CoverBoundReport {
    pub hypotheses_ok: bool,
    pub hypothesis_failures: Vec<String>,
    pub inequality_ok: bool,
    /// `4 |O|` (scaled to keep everything integral).
    pub lhs_times_4: i64,
    /// `3 |A| + 4 |I|`.
    pub rhs_times_4: i64,
    pub full_segments: usize,
}

impl TriplePlacement {
    fn segment_of(&self, vals: &[i64]) -> Option<usize> {
        self.segments
            .iter()
            .position(|seg| vals.iter().all(|&v| seg.contains(v)))
    }

    fn validate(&self) -> Result<(), CombinatoricsError> {
        for (i, s1) in self.segments.iter().enumerate() {
            for s2 in self.segments.iter().skip(i + 1) {
                if s1.elements().intersection(s2.elements()).next().is_some() {
                    return Err(CombinatoricsError::NotDisjoint);
                }
            }
        }
        let mut used: BTreeSet<i64> = BTreeSet::new();
        for (i, t) in self.black_triples.iter().enumerate() {
            expect_colored(t, Color::Black, i)?;
            if self.segment_of(t).is_none() {
                return Err(CombinatoricsError::NotInSegment { index: i });
            }
            for &v in t {
                if !used.insert(v) {
                    return Err(CombinatoricsError::NotDisjoint);
                }
            }
        }
        for (i, t) in self.white_triples.iter().enumerate() {
            expect_colored(t, Color::White, i)?;
            if self.segment_of(t).is_none() {
                return Err(CombinatoricsError::NotInSegment { index: i });
            }
            for &v in t {
                if !used.insert(v) {
                    return Err(CombinatoricsError::NotDisjoint);
                }
            }
        }
        for (i, &v) in self.white_singletons.iter().enumerate() {
            if v % 2 == 0 {
                return Err(CombinatoricsError::EvenSingleton { value: v });
            }
            if self.segment_of(&[v]).is_none() {
                return Err(CombinatoricsError::NotInSegment { index: i });
            }
            if !used.insert(v) {
                return Err(CombinatoricsError::NotDisjoint);
            }
        }
        Ok(())
    }
}

/// Checks hypotheses and the covering inequality for a placement.
pub fn check_lemma_5_4(p: &TriplePlacement) -> Result<CoverBoundReport, CombinatoricsError> {
    p.validate()?;
    let mut failures: Vec<String> = Vec::new();

    let omega: BTreeSet<i64> = p
        .black_triples
        .iter()
        .chain(p.white_triples.iter())
        .flatten()
        .copied()
        .collect();
    let omega_prime: BTreeSet<i64> = omega
        .iter()
        .copied()
        .chain(p.white_singletons.iter().copied())
        .collect();

    for (s, seg) in p.segments.iter().enumerate() {
        let residue: BTreeSet<i64> = seg
            .elements()
            .iter()
            .copied()
            .filter(|v| !omega_prime.contains(v))
            .collect();
        if let Some(t) = find_triple(&residue, Color::White) {
            failures.push(format!("segment {s}: white triple {t:?} left uncovered"));
        }
        let psi_here = p
            .white_singletons
            .iter()
            .filter(|&&v| seg.contains(v))
            .count();
        if psi_here > 0 {
            if psi_here > 2 {
                failures.push(format!("segment {s}: {psi_here} singletons"));
            }
            let phi_here = p
                .black_triples
                .iter()
                .filter(|t| t.iter().all(|&v| seg.contains(v)))
                .count();
            if phi_here > 0 {
                failures.push(format!(
                    "segment {s}: singletons coexist with {phi_here} black triples"
                ));
            }
        }
    }

    let total: usize = p.segments.iter().map(|s| s.len()).sum();
    let full_segments = p
        .segments
        .iter()
        .filter(|seg| {
            p.black_triples
                .iter()
                .filter(|t| t.iter().all(|&v| seg.contains(v)))
                .count()
                == 2
        })
        .count();
    let lhs_times_4 = 4 * omega.len() as i64;
    let rhs_times_4 = 3 * total as i64 + 4 * full_segments as i64;

    Ok(CoverBoundReport {
        hypotheses_ok: failures.is_empty(),
        hypothesis_failures: failures,
        inequality_ok: lhs_times_4 >= rhs_times_4,
        lhs_times_4,
        rhs_times_4,
        full_segments,
    })
}

/// Which triple colors a covering may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AllowedColors {
    BlackOnly,
    WhiteOnly,
    Both,
}

impl AllowedColors {
    fn black(self) -> bool {
        matches!(self, AllowedColors::BlackOnly | AllowedColors::Both)
    }
    fn white(self) -> bool {
        matches!(self, AllowedColors::WhiteOnly | AllowedColors::Both)
    }
}

/// Exact covering statistics for disjoint colored triples inside a set.
/// `optimal` is the maximum number of covered elements; the maximal-cover
/// distribution ranges over every non-extendable placement.
#[derive(Debug, Clone, Serialize)]
pub struct CoverOracleReport {
    pub size: usize,
    pub allowed: AllowedColors,
    pub optimal: usize,
    /// `(black_triples, white_triples, covered)` for every maximal
    /// placement profile, lexicographically ordered.
    pub maximal_profiles: Vec<(usize, usize, usize)>,
    pub maximal_min: usize,
    pub maximal_max: usize,
}

/// Exhaustive bound for [`max_cover_oracle`].
pub const COVER_ORACLE_BOUND: usize = 24;

/// Exact cover oracle. A placement of `b` black and `c` white disjoint
/// triples exists iff `2b + c <= odds` and `b + 2c <= evens`, since
/// elements of one parity are interchangeable; the oracle enumerates those
/// profiles. Sets larger than [`COVER_ORACLE_BOUND`] are rejected.
pub fn max_cover_oracle(
    set: &BalancedSet,
    allowed: AllowedColors,
) -> Result<CoverOracleReport, CombinatoricsError> {
    let size = set.len();
    if size > COVER_ORACLE_BOUND {
        return Err(CombinatoricsError::TooLarge { size, bound: COVER_ORACLE_BOUND });
    }
    let evens = set.elements().iter().filter(|&&v| v % 2 == 0).count();
    let odds = size - evens;

    let feasible = |b: usize, c: usize| 2 * b + c <= odds && b + 2 * c <= evens;
    let mut optimal = 0usize;
    let mut profiles = Vec::new();
    for b in 0..=(odds / 2) {
        for c in 0..=(evens / 2) {
            if !feasible(b, c) {
                continue;
            }
            if !allowed.black() && b > 0 {
                continue;
            }
            if !allowed.white() && c > 0 {
                continue;
            }
            let covered = 3 * (b + c);
            optimal = optimal.max(covered);
            let rem_odds = odds - 2 * b - c;
            let rem_evens = evens - b - 2 * c;
            let can_black = allowed.black() && rem_odds >= 2 && rem_evens >= 1;
            let can_white = allowed.white() && rem_evens >= 2 && rem_odds >= 1;
            if !can_black && !can_white {
                profiles.push((b, c, covered));
            }
        }
    }
    profiles.sort();
    let maximal_min = profiles.iter().map(|&(_, _, v)| v).min().unwrap_or(0);
    let maximal_max = profiles.iter().map(|&(_, _, v)| v).max().unwrap_or(0);
    Ok(CoverOracleReport {
        size,
        allowed,
        optimal,
        maximal_profiles: profiles,
        maximal_min,
        maximal_max,
    })
}

/// Generates a pseudorandom placement over `k` fresh segments of size 12
/// that satisfies the covering hypotheses, deterministically per seed.
pub fn random_valid_placement(seed: u64, segments: usize) -> TriplePlacement {
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    let mut rng = StdRng::seed_from_u64(seed);
    let mut placement = TriplePlacement {
        segments: Vec::new(),
        black_triples: Vec::new(),
        white_triples: Vec::new(),
        white_singletons: Vec::new(),
    };
    for s in 0..segments {
        let start = 100 * s as i64;
        let seg = BalancedSet::segment(start, 1);
        let mut evens: Vec<i64> = seg.elements().iter().copied().filter(|v| v % 2 == 0).collect();
        let mut odds: Vec<i64> = seg.elements().iter().copied().filter(|v| v % 2 != 0).collect();
        evens.shuffle(&mut rng);
        odds.shuffle(&mut rng);

        // per-segment profile: either triples only (no residual white
        // triple allowed) or singletons without black triples
        let with_singletons = rng.gen_bool(0.3);
        if with_singletons {
            // fill evens with white triples so no white triple remains
            // uncovered: 3 whites use all 6 evens and 3 odds
            for _ in 0..3 {
                let t = [evens.pop().unwrap(), evens.pop().unwrap(), odds.pop().unwrap()];
                placement.white_triples.push(t);
            }
            let singles = rng.gen_range(0..=2usize);
            for _ in 0..singles {
                placement.white_singletons.push(odds.pop().unwrap());
            }
        } else {
            // b black + c white triples killing the residual white triple:
            // residue must not keep 2 evens and 1 odd
            let options: &[(usize, usize)] = &[(2, 2), (3, 1), (0, 3), (1, 2), (2, 1), (3, 0)];
            let &(b, c) = options
                .iter()
                .filter(|&&(b, c)| {
                    let rem_e = 6 - b - 2 * c;
                    let rem_o = 6 - 2 * b - c;
                    !(rem_e >= 2 && rem_o >= 1)
                })
                .collect::<Vec<_>>()
                .choose(&mut rng)
                .expect("some profile closes the segment");
            for _ in 0..b {
                let t = [odds.pop().unwrap(), odds.pop().unwrap(), evens.pop().unwrap()];
                placement.black_triples.push(t);
            }
            for _ in 0..c {
                let t = [evens.pop().unwrap(), evens.pop().unwrap(), odds.pop().unwrap()];
                placement.white_triples.push(t);
            }
        }
        placement.segments.push(seg);
    }
    placement
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balanced_checks() {
        assert!(BalancedSet::new(1..=12).is_some());
        assert!(BalancedSet::new(1..=6).is_none());
        let mixed = BalancedSet::new([1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 14]);
        assert!(mixed.is_some());
        assert!(BalancedSet::new([1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 2]).is_none());
    }

    #[test]
    fn triple_colors() {
        let t = triple_color(&[2, 3, 5]).unwrap().unwrap();
        assert_eq!(t.color, Color::Black);
        assert_eq!(t.central, 2);
        let t = triple_color(&[1, 4, 6]).unwrap().unwrap();
        assert_eq!(t.color, Color::White);
        assert_eq!(t.central, 1);
        assert!(triple_color(&[1, 3, 5]).unwrap().is_none());
        assert!(triple_color(&[1, 1, 3]).is_err());
    }

    #[test]
    fn residue_implication_examples() {
        let set = BalancedSet::new(1..=12).unwrap();
        let w = check_lemma_5_2(&set, &[[1, 2, 4]]).unwrap();
        assert!(w.holds);
        assert!(w.black_witness.is_some() && w.white_witness.is_some());
        let w = check_lemma_5_2(&set, &[]).unwrap();
        assert!(w.holds && w.white_witness.is_some());
        // overlapping whites rejected
        assert!(check_lemma_5_2(&set, &[[1, 2, 4], [1, 6, 8]]).is_err());
    }

    #[test]
    fn residue_implication_exhaustive_small() {
        // every placement of at most 2 disjoint white triples in [1,12]
        let set = BalancedSet::new(1..=12).unwrap();
        let vals: Vec<i64> = set.elements().iter().copied().collect();
        let mut whites: Vec<[i64; 3]> = Vec::new();
        for i in 0..vals.len() {
            for j in (i + 1)..vals.len() {
                for k in (j + 1)..vals.len() {
                    let t = [vals[i], vals[j], vals[k]];
                    if matches!(triple_color(&t), Ok(Some(ref c)) if c.color == Color::White) {
                        whites.push(t);
                    }
                }
            }
        }
        let mut checked = 0usize;
        assert!(check_lemma_5_2(&set, &[]).unwrap().holds);
        for w1 in &whites {
            assert!(check_lemma_5_2(&set, &[*w1]).unwrap().holds);
            checked += 1;
            for w2 in &whites {
                if w1.iter().any(|v| w2.contains(v)) || w2 <= w1 {
                    continue;
                }
                assert!(check_lemma_5_2(&set, &[*w1, *w2]).unwrap().holds);
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn cover_bound_single_full_segment() {
        let seg = BalancedSet::segment(1, 1); // {1..12}
        let p = TriplePlacement {
            segments: vec![seg],
            black_triples: vec![[1, 2, 3], [4, 5, 7]],
            white_triples: vec![[6, 8, 9], [10, 11, 12]],
            white_singletons: vec![],
        };
        let r = check_lemma_5_4(&p).unwrap();
        assert!(r.hypotheses_ok, "{:?}", r.hypothesis_failures);
        assert!(r.inequality_ok);
        assert_eq!(r.full_segments, 1);
        assert_eq!(r.lhs_times_4, 48);
        assert_eq!(r.rhs_times_4, 40);
    }

    #[test]
    fn cover_bound_rejects_overlap_and_triple_singletons() {
        let seg = BalancedSet::segment(1, 1);
        let p = TriplePlacement {
            segments: vec![seg.clone()],
            black_triples: vec![[1, 2, 3], [3, 4, 5]],
            white_triples: vec![],
            white_singletons: vec![],
        };
        assert!(check_lemma_5_4(&p).is_err());
        let p = TriplePlacement {
            segments: vec![seg],
            black_triples: vec![],
            white_triples: vec![],
            white_singletons: vec![1, 3, 5],
        };
        let r = check_lemma_5_4(&p).unwrap();
        assert!(!r.hypotheses_ok);
    }

    #[test]
    fn random_placements_satisfy_bound() {
        for seed in 0..200u64 {
            let p = random_valid_placement(seed, 1 + (seed as usize % 3));
            let r = check_lemma_5_4(&p).unwrap();
            assert!(r.hypotheses_ok, "seed {seed}: {:?}", r.hypothesis_failures);
            assert!(r.inequality_ok, "seed {seed}");
        }
    }

    #[test]
    fn cover_oracle_twelve() {
        let set = BalancedSet::segment(1, 1);
        let black = max_cover_oracle(&set, AllowedColors::BlackOnly).unwrap();
        assert_eq!(black.optimal, 9);
        let both = max_cover_oracle(&set, AllowedColors::Both).unwrap();
        assert_eq!(both.optimal, 12);
        assert!(both.maximal_min >= 9);
        let too_big = BalancedSet::segment(0, 3);
        assert!(max_cover_oracle(&too_big, AllowedColors::Both).is_err());
    }

    /// Bitmask brute force over actual element triples, as an independent
    /// route to the same numbers.
    mod bitmask_oracle {
        use super::*;

        fn triples(vals: &[i64], allowed: AllowedColors) -> Vec<u32> {
            let mut out = Vec::new();
            for i in 0..vals.len() {
                for j in (i + 1)..vals.len() {
                    for k in (j + 1)..vals.len() {
                        if let Ok(Some(t)) = triple_color(&[vals[i], vals[j], vals[k]]) {
                            let ok = match t.color {
                                Color::Black => allowed.black(),
                                Color::White => allowed.white(),
                            };
                            if ok {
                                out.push((1 << i) | (1 << j) | (1 << k));
                            }
                        }
                    }
                }
            }
            out
        }

        fn best(mask: u32, triples: &[u32], memo: &mut Vec<i8>) -> u8 {
            if memo[mask as usize] >= 0 {
                return memo[mask as usize] as u8;
            }
            let mut result = 0u8;
            for &t in triples {
                if t & mask == t {
                    result = result.max(3 + best(mask & !t, triples, memo));
                }
            }
            memo[mask as usize] = result as i8;
            result
        }

        /// Minimum number of elements any maximal placement covers, taking
        /// `mask` as the free set.
        fn min_maximal(mask: u32, triples: &[u32], memo: &mut Vec<i8>) -> u8 {
            if memo[mask as usize] >= 0 {
                return memo[mask as usize] as u8;
            }
            let mut best: Option<u8> = None;
            for &t in triples {
                if t & mask == t {
                    let sub = 3 + min_maximal(mask & !t, triples, memo);
                    best = Some(best.map_or(sub, |b: u8| b.min(sub)));
                }
            }
            let result = best.unwrap_or(0);
            memo[mask as usize] = result as i8;
            result
        }

        #[test]
        fn agrees_with_profile_oracle() {
            let set = BalancedSet::segment(1, 1);
            let vals: Vec<i64> = set.elements().iter().copied().collect();
            for allowed in [AllowedColors::BlackOnly, AllowedColors::WhiteOnly, AllowedColors::Both] {
                let ts = triples(&vals, allowed);
                let mut memo = vec![-1i8; 1 << 12];
                let brute = best((1 << 12) - 1, &ts, &mut memo) as usize;
                let fast = max_cover_oracle(&set, allowed).unwrap();
                assert_eq!(brute, fast.optimal, "optimal mismatch for {allowed:?}");
            }
        }

        #[test]
        fn min_maximal_agrees() {
            let set = BalancedSet::segment(1, 1);
            let vals: Vec<i64> = set.elements().iter().copied().collect();
            let ts = triples(&vals, AllowedColors::Both);
            let mut memo = vec![-1i8; 1 << 12];
            let brute = min_maximal((1 << 12) - 1, &ts, &mut memo) as usize;
            let fast = max_cover_oracle(&set, AllowedColors::Both).unwrap();
            assert_eq!(brute, fast.maximal_min, "min over maximal placements");
            assert!(brute >= 9);
        }
    }
}
