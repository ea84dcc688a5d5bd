//! Classification and enumeration of word classes: odd, semi-odd,
//! unbalanced, and general `(E, A)` constraints on exponents and adjacent
//! subscript differences.

use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::backends::{BackendError, GroupBackend};
use crate::words::{normalize_word, SyllableWord, ThompsonNormalForm};

/// A set of admissible nonzero integers, for exponents or adjacency
/// differences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IntSet {
    /// All nonzero integers.
    NonZero,
    /// All odd integers.
    Odd,
    /// An explicit finite set (must not contain zero).
    Explicit(BTreeSet<i64>),
}

impl IntSet {
    pub fn contains(&self, v: i64) -> bool {
        match self {
            IntSet::NonZero => v != 0,
            IntSet::Odd => v.rem_euclid(2) == 1,
            IntSet::Explicit(s) => s.contains(&v),
        }
    }

    /// Subset test, exact for the variants representable here.
    pub fn subset_of(&self, other: &IntSet) -> bool {
        match (self, other) {
            (_, IntSet::NonZero) => true,
            (IntSet::Odd, IntSet::Odd) => true,
            (IntSet::Explicit(s), _) => s.iter().all(|&v| other.contains(v)),
            _ => false,
        }
    }
}

/// Constraint pair: exponents drawn from `exponents`, adjacent subscript
/// differences from `adjacency`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EaSpec {
    pub exponents: IntSet,
    pub adjacency: IntSet,
}

impl EaSpec {
    pub fn odd() -> Self {
        EaSpec { exponents: IntSet::Odd, adjacency: IntSet::Odd }
    }

    pub fn reduced() -> Self {
        EaSpec { exponents: IntSet::NonZero, adjacency: IntSet::NonZero }
    }
}

/// Flags computed from a reduced word's syllable data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    /// True for every syllable-normal-form input.
    pub is_reduced: bool,
    /// All exponents odd and all adjacent differences odd.
    pub is_odd: bool,
    /// Odd with at most one exception (one exponent or one adjacency).
    pub is_semi_odd: bool,
    /// Membership in the supplied `(E, A)` class.
    pub ea_member: bool,
    /// Violations of the supplied class: off-exponents plus off-adjacencies.
    pub exception_count: usize,
    /// No two exponents sum to zero.
    pub unbalanced: bool,
}

/// Computes the class flags of a reduced word against `spec`. The odd and
/// semi-odd flags are always measured against the odd/odd class.
pub fn classify(w: &SyllableWord, spec: &EaSpec) -> ClassReport {
    let count_exceptions = |s: &EaSpec| -> usize {
        let bad_exp = w.exponents().filter(|&e| !s.exponents.contains(e)).count();
        let bad_adj = w
            .adjacent_differences()
            .filter(|&d| !s.adjacency.contains(d))
            .count();
        bad_exp + bad_adj
    };
    let odd_exceptions = count_exceptions(&EaSpec::odd());
    let exception_count = count_exceptions(spec);

    let exps: Vec<i64> = w.exponents().collect();
    let unbalanced = !exps
        .iter()
        .enumerate()
        .any(|(i, &x)| exps.iter().skip(i + 1).any(|&y| x == -y));

    ClassReport {
        is_reduced: true,
        is_odd: odd_exceptions == 0,
        is_semi_odd: odd_exceptions <= 1,
        ea_member: exception_count == 0,
        exception_count,
        unbalanced,
    }
}

/// Word classes available for enumeration and verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WordClass {
    Odd,
    SemiOdd,
    UnbalancedSemiOdd,
}

impl WordClass {
    pub fn admits(self, report: &ClassReport) -> bool {
        match self {
            WordClass::Odd => report.is_odd,
            WordClass::SemiOdd => report.is_semi_odd,
            WordClass::UnbalancedSemiOdd => report.is_semi_odd && report.unbalanced,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            WordClass::Odd => "odd",
            WordClass::SemiOdd => "semi_odd",
            WordClass::UnbalancedSemiOdd => "unbalanced_semi_odd",
        }
    }
}

/// Finite enumeration bounds: syllable counts in
/// `[min_syllables, max_syllables]`, subscripts in `[0, max_subscript]`,
/// exponents drawn from the given set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumBounds {
    pub min_syllables: usize,
    pub max_syllables: usize,
    pub max_subscript: u32,
    pub exponents: Vec<i64>,
}

impl EnumBounds {
    pub fn new(max_syllables: usize, max_subscript: u32, exponents: Vec<i64>) -> Self {
        EnumBounds { min_syllables: 1, max_syllables, max_subscript, exponents }
    }

    fn validate(&self) -> Result<(), ClassError> {
        if self.exponents.is_empty() || self.exponents.contains(&0) {
            return Err(ClassError::BadExponentSet);
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("exponent set must be nonempty and zero-free")]
    BadExponentSet,
    #[error(transparent)]
    Backend(#[from] BackendError),
}

/// Exhaustively yields every word of `class` within `bounds`, each exactly
/// once, ordered by (syllable count, subscript vector, exponent vector).
pub fn enumerate_class(
    bounds: &EnumBounds,
    class: WordClass,
) -> Result<impl Iterator<Item = SyllableWord>, ClassError> {
    bounds.validate()?;
    let mut exponents = bounds.exponents.clone();
    exponents.sort();
    exponents.dedup();
    let spec = EaSpec::odd();
    let mut out: Vec<SyllableWord> = Vec::new();
    for k in bounds.min_syllables..=bounds.max_syllables {
        let mut subs = vec![0u32; k];
        enumerate_subscripts(&mut subs, 0, bounds.max_subscript, &mut |subs| {
            let mut exps = vec![0i64; k];
            enumerate_exponents(subs, &mut exps, 0, &exponents, &mut |word| {
                if class.admits(&classify(word, &spec)) {
                    out.push(word.clone());
                }
            });
        });
    }
    Ok(out.into_iter())
}

fn enumerate_subscripts(
    subs: &mut Vec<u32>,
    i: usize,
    max_subscript: u32,
    f: &mut impl FnMut(&[u32]),
) {
    if i == subs.len() {
        f(&subs.clone());
        return;
    }
    for s in 0..=max_subscript {
        if i > 0 && subs[i - 1] == s {
            continue;
        }
        subs[i] = s;
        enumerate_subscripts(subs, i + 1, max_subscript, f);
    }
}

fn enumerate_exponents(
    subs: &[u32],
    exps: &mut Vec<i64>,
    i: usize,
    pool: &[i64],
    f: &mut impl FnMut(&SyllableWord),
) {
    if i == subs.len() {
        let word = SyllableWord::from_pairs(
            &subs.iter().copied().zip(exps.iter().copied()).collect::<Vec<_>>(),
        )
        .expect("enumeration yields reduced words");
        f(&word);
        return;
    }
    for &e in pool {
        exps[i] = e;
        enumerate_exponents(subs, exps, i + 1, pool, f);
    }
}

/// Draws `count` distinct-ish random members of `class` within `bounds`,
/// deterministically per seed, by rejection sampling.
pub fn sample_class(
    bounds: &EnumBounds,
    class: WordClass,
    seed: u64,
    count: usize,
) -> Result<Vec<SyllableWord>, ClassError> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    bounds.validate()?;
    let spec = EaSpec::odd();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut guard = 0usize;
    while out.len() < count {
        guard += 1;
        assert!(guard < count * 10_000, "rejection sampling stalled");
        let k = rng.gen_range(bounds.min_syllables..=bounds.max_syllables);
        let mut pairs = Vec::with_capacity(k);
        let mut prev: Option<u32> = None;
        for _ in 0..k {
            let mut s = rng.gen_range(0..=bounds.max_subscript);
            while prev == Some(s) {
                s = rng.gen_range(0..=bounds.max_subscript);
            }
            prev = Some(s);
            let e = bounds.exponents[rng.gen_range(0..bounds.exponents.len())];
            pairs.push((s, e));
        }
        let word = SyllableWord::from_pairs(&pairs).expect("sampler yields reduced words");
        if class.admits(&classify(&word, &spec)) {
            out.push(word);
        }
    }
    Ok(out)
}

/// A word that evaluated to the identity during family verification.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyFailure {
    pub word: String,
    pub normal_form: String,
}

/// Family verification report, serializable as JSON.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub class: &'static str,
    pub backend: &'static str,
    pub bounds: EnumBounds,
    pub checked: usize,
    pub failures: Vec<FamilyFailure>,
}

/// Evaluates every enumerated word of the class in the backend and reports
/// those that collapse to the identity. Backends other than F require all
/// subscripts to be 0 or 1.
pub fn verify_family<B: GroupBackend>(
    class: WordClass,
    bounds: &EnumBounds,
    backend: &B,
) -> Result<FamilyReport, ClassError> {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for word in enumerate_class(bounds, class)? {
        let elem = backend.eval_word(&word.to_letters())?;
        checked += 1;
        if backend.is_identity(&elem) {
            failures.push(FamilyFailure {
                word: word.to_string(),
                normal_form: backend.render(&elem),
            });
        }
    }
    Ok(FamilyReport {
        class: class.key(),
        backend: backend.name(),
        bounds: bounds.clone(),
        checked,
        failures,
    })
}

/// Like [`verify_family`] but over random samples.
pub fn verify_family_sampled<B: GroupBackend>(
    class: WordClass,
    bounds: &EnumBounds,
    backend: &B,
    seed: u64,
    count: usize,
) -> Result<FamilyReport, ClassError> {
    let mut failures = Vec::new();
    let samples = sample_class(bounds, class, seed, count)?;
    for word in &samples {
        let elem = backend.eval_word(&word.to_letters())?;
        if backend.is_identity(&elem) {
            failures.push(FamilyFailure {
                word: word.to_string(),
                normal_form: backend.render(&elem),
            });
        }
    }
    Ok(FamilyReport {
        class: class.key(),
        backend: backend.name(),
        bounds: bounds.clone(),
        checked: samples.len(),
        failures,
    })
}

/// Groups enumerated odd words by their normal form and returns every
/// unordered pair of distinct words naming the same element, in
/// lexicographic order without duplicates.
pub fn find_collisions(
    bounds: &EnumBounds,
) -> Result<Vec<(SyllableWord, SyllableWord)>, ClassError> {
    let mut groups: BTreeMap<ThompsonNormalForm, Vec<SyllableWord>> = BTreeMap::new();
    for word in enumerate_class(bounds, WordClass::Odd)? {
        groups.entry(normalize_word(&word)).or_default().push(word);
    }
    let mut pairs = Vec::new();
    for (_, words) in groups {
        for i in 0..words.len() {
            for j in (i + 1)..words.len() {
                pairs.push((words[i].clone(), words[j].clone()));
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}
