//! Instance and family checkers for the non-amenability conditions: the
//! abelianized-independence test, alternating-word non-vanishing, the
//! cyclic-subgroup avoidance tests, and the height-growth condition with
//! its single-exception structure.

use serde::Serialize;

use crate::backends::GroupBackend;
use crate::util::{parallel_map, thread_cap};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("entry {value} must be odd and nonzero")]
    NotOdd { value: i64 },
    #[error("entry {value} must be nonzero")]
    Zero { value: i64 },
    #[error("delta and epsilon lists must have equal nonzero length")]
    LengthMismatch,
    #[error("p = {p} out of range: need an odd integer with 400 < p < 410")]
    BadP { p: i64 },
    #[error("mode B allows at most one even entry in the eta-exponent list")]
    TooManyEven,
    #[error("interior eta exponents must be nonzero in mode B")]
    InteriorZero,
    #[error("mode E requires every eta exponent odd")]
    EvenInModeE,
    #[error("backend '{backend}' has no height function")]
    NoHeight { backend: &'static str },
    #[error(transparent)]
    Backend(#[from] crate::backends::BackendError),
}

fn require_height<B: GroupBackend>(b: &B, e: &B::Elem) -> Result<u64, CriteriaError> {
    b.height(e).ok_or(CriteriaError::NoHeight { backend: b.name() })
}

fn is_odd(v: i64) -> bool {
    v.rem_euclid(2) == 1
}

/// The abelianized images of `xi` and `eta` generate a rank-2 subgroup.
pub fn check_condition_a<B: GroupBackend>(b: &B) -> bool {
    let (x1, y1) = b.abelian_image(&b.xi());
    let (x2, y2) = b.abelian_image(&b.eta());
    x1.checked_mul(y2)
        .zip(x2.checked_mul(y1))
        .map(|(p, q)| p != q)
        .expect("abelian coordinate overflow")
}

/// Builds `eta^{d_1} xi^{e_1} ... eta^{d_n} xi^{e_n}`.
pub fn alternating_word<B: GroupBackend>(b: &B, deltas: &[i64], epsilons: &[i64]) -> B::Elem {
    let mut out = b.identity();
    for (&d, &e) in deltas.iter().zip(epsilons.iter()) {
        out = b.step_eta(&out, d);
        out = b.step_xi(&out, e);
    }
    out
}

/// Alternating odd words stay off the identity: one instance.
pub fn check_c_instance<B: GroupBackend>(
    b: &B,
    deltas: &[i64],
    epsilons: &[i64],
) -> Result<bool, CriteriaError> {
    if deltas.len() != epsilons.len() || deltas.is_empty() {
        return Err(CriteriaError::LengthMismatch);
    }
    for &v in deltas.iter().chain(epsilons.iter()) {
        if !is_odd(v) {
            return Err(CriteriaError::NotOdd { value: v });
        }
    }
    Ok(!b.is_identity(&alternating_word(b, deltas, epsilons)))
}

/// Parity regime for the mixed-word membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BeMode {
    /// At most one even eta exponent; interior ones nonzero.
    B,
    /// Every eta exponent odd.
    E,
}

/// Tests that `eta^{p_0} xi^{e_1} eta^{p_1} ... xi^{e_k} eta^{p_k}` avoids
/// both cyclic subgroups `<eta>` and `<xi>`.
pub fn check_be_instance<B: GroupBackend>(
    b: &B,
    p_list: &[i64],
    eps_list: &[i64],
    mode: BeMode,
) -> Result<bool, CriteriaError> {
    if p_list.len() != eps_list.len() + 1 || eps_list.is_empty() {
        return Err(CriteriaError::LengthMismatch);
    }
    for &e in eps_list {
        if !is_odd(e) {
            return Err(CriteriaError::NotOdd { value: e });
        }
    }
    match mode {
        BeMode::B => {
            let even = p_list.iter().filter(|&&p| !is_odd(p)).count();
            if even > 1 {
                return Err(CriteriaError::TooManyEven);
            }
            if p_list[1..p_list.len() - 1].contains(&0) {
                return Err(CriteriaError::InteriorZero);
            }
        }
        BeMode::E => {
            if p_list.iter().any(|&p| !is_odd(p)) {
                return Err(CriteriaError::EvenInModeE);
            }
        }
    }
    let mut word = b.eta_pow(p_list[0]);
    for (&e, &p) in eps_list.iter().zip(&p_list[1..]) {
        word = b.step_xi(&word, e);
        word = b.step_eta(&word, p);
    }
    Ok(!b.in_eta_subgroup(&word) && !b.in_xi_subgroup(&word))
}

/// Parameters for the height-growth sweep: threshold radius and the odd
/// step exponent `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionDParams {
    pub p: i64,
    pub delta_radius: i64,
    pub threshold: u64,
}

impl ConditionDParams {
    /// The standard constants: `delta` over `[-100, 100]`, margin 100,
    /// `p` an odd integer strictly between 400 and 410.
    pub fn standard(p: i64) -> Result<Self, CriteriaError> {
        if !is_odd(p) || !(401..=409).contains(&p) {
            return Err(CriteriaError::BadP { p });
        }
        Ok(ConditionDParams { p, delta_radius: 100, threshold: 100 })
    }

    /// Scaled-down constants for small windows; `p` still must be odd.
    pub fn scaled(p: i64, delta_radius: i64, threshold: u64) -> Result<Self, CriteriaError> {
        if !is_odd(p) {
            return Err(CriteriaError::BadP { p });
        }
        Ok(ConditionDParams { p, delta_radius, threshold })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Result of the two-part height-growth sweep around a base element.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionDReport {
    pub p: i64,
    pub delta_radius: i64,
    pub threshold: u64,
    pub base: String,
    pub base_height: u64,
    /// Deltas in `[-R, R]` where `h(g eta^d xi^-p) <= h(g) + T`.
    pub failing_deltas_i: Vec<i64>,
    pub part_ii_checked: bool,
    /// Deltas in `(-R, d_0]` where `h(g eta^d xi^p) <= h(g) + T`.
    pub part_ii_failures: Vec<i64>,
    pub verdict: Verdict,
}

/// Height-growth sweep: part (i) scans `delta` over `[-R, R]` with step
/// `xi^-p` and tolerates at most one failure; when the failure lies
/// strictly inside the interval, part (ii) requires growth with step
/// `xi^p` on `(-R, d_0]`. Failures only at the endpoints exempt part (ii).
pub fn check_d<B: GroupBackend>(
    b: &B,
    g: &B::Elem,
    params: ConditionDParams,
) -> Result<ConditionDReport, CriteriaError> {
    let hg = require_height(b, g)?;
    let bound = hg + params.threshold;
    let radius = params.delta_radius;

    let deltas: Vec<i64> = (-radius..=radius).collect();
    let heights = parallel_map(deltas.clone(), thread_cap(), |&d| {
        let shifted = b.step_xi(&b.step_eta(g, d), -params.p);
        b.height(&shifted).expect("height checked above")
    });
    let failing_deltas_i: Vec<i64> = deltas
        .iter()
        .zip(&heights)
        .filter(|&(_, &h)| h <= bound)
        .map(|(&d, _)| d)
        .collect();

    let mut part_ii_checked = false;
    let mut part_ii_failures = Vec::new();
    if let [d0] = failing_deltas_i.as_slice() {
        if d0.abs() < radius {
            part_ii_checked = true;
            let range: Vec<i64> = ((-radius + 1)..=*d0).collect();
            let ii = parallel_map(range.clone(), thread_cap(), |&d| {
                let shifted = b.step_xi(&b.step_eta(g, d), params.p);
                b.height(&shifted).expect("height checked above")
            });
            part_ii_failures = range
                .iter()
                .zip(&ii)
                .filter(|&(_, &h)| h <= bound)
                .map(|(&d, _)| d)
                .collect();
        }
    }

    let verdict = if failing_deltas_i.len() <= 1 && part_ii_failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(ConditionDReport {
        p: params.p,
        delta_radius: radius,
        threshold: params.threshold,
        base: format!("{g:?}"),
        base_height: hg,
        failing_deltas_i,
        part_ii_checked,
        part_ii_failures,
        verdict,
    })
}

/// The single-inequality variant: grows `g` by one alternating block and
/// asks for any height increase.
pub fn check_dprime_instance<B: GroupBackend>(
    b: &B,
    deltas: &[i64],
    epsilons: &[i64],
    extra_delta: i64,
    extra_epsilon: i64,
) -> Result<bool, CriteriaError> {
    if deltas.len() != epsilons.len() {
        return Err(CriteriaError::LengthMismatch);
    }
    for &v in deltas.iter().chain([&extra_delta]) {
        if v == 0 || v.abs() > 100 {
            return Err(CriteriaError::Zero { value: v });
        }
    }
    for &v in epsilons.iter().chain([&extra_epsilon]) {
        if v == 0 {
            return Err(CriteriaError::Zero { value: v });
        }
    }
    let g = alternating_word(b, deltas, epsilons);
    let hg = require_height(b, &g)?;
    let grown = b.step_xi(&b.step_eta(&g, extra_delta), extra_epsilon);
    Ok(require_height(b, &grown)? > hg)
}

/// `h(z xi^-p) > h(z) + threshold` with the standard constants.
pub fn is_successful<B: GroupBackend>(
    b: &B,
    z: &B::Elem,
    p: i64,
) -> Result<bool, CriteriaError> {
    let params = ConditionDParams::standard(p)?;
    successful_with(b, z, params.p, params.threshold)
}

/// Scaled success test used by window machinery.
pub fn successful_with<B: GroupBackend>(
    b: &B,
    z: &B::Elem,
    p: i64,
    threshold: u64,
) -> Result<bool, CriteriaError> {
    let hz = require_height(b, z)?;
    let hs = require_height(b, &b.step_xi(z, -p))?;
    Ok(hs > hz + threshold)
}

/// Heights along `x xi^{pk}` for `k in [-K, K]`, with the least-index
/// minimizer and any deviations from strict descent-then-ascent. The
/// deviations are diagnostic: reported, never asserted.
#[derive(Debug, Clone, Serialize)]
pub struct SublineProfile {
    pub base: String,
    pub p: i64,
    pub k_radius: i64,
    /// `(k, h(x xi^{pk}))` for `k = -K..=K`.
    pub heights: Vec<(i64, u64)>,
    /// Offset `k` of the least-index minimizer.
    pub argmin: i64,
    /// Adjacent offsets `k` where unimodality fails between `k` and `k+1`.
    pub monotonicity_violations: Vec<i64>,
}

pub fn p_subline_profile<B: GroupBackend>(
    b: &B,
    x: &B::Elem,
    p: i64,
    k_radius: i64,
) -> Result<SublineProfile, CriteriaError> {
    require_height(b, x)?;
    let ks: Vec<i64> = (-k_radius..=k_radius).collect();
    let heights: Vec<(i64, u64)> = ks
        .iter()
        .map(|&k| {
            let e = b.step_xi(x, p.checked_mul(k).expect("offset overflow"));
            Ok((k, require_height(b, &e)?))
        })
        .collect::<Result<_, CriteriaError>>()?;
    let argmin = heights
        .iter()
        .min_by_key(|&&(k, h)| (h, k))
        .map(|&(k, _)| k)
        .expect("nonempty profile");
    let mut violations = Vec::new();
    for pair in heights.windows(2) {
        let (k, h0) = pair[0];
        let (_, h1) = pair[1];
        let ok = if k >= argmin { h1 > h0 } else { h0 > h1 };
        if !ok {
            violations.push(k);
        }
    }
    Ok(SublineProfile {
        base: format!("{x:?}"),
        p,
        k_radius,
        heights,
        argmin,
        monotonicity_violations: violations,
    })
}

/// Which of the paired growth inequalities a trace is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TraceKind {
    /// Rising: `h(x_{k+step}) > h(x_k) + margin` and `h(x_k) > h(x_1) - drop`.
    Black,
    /// Falling: `h(x_{k+step}) < h(x_k) - margin` and `h(x_k) < h(x_1) + drop`.
    White,
}

/// Constants for zigzag trace suitability; `step` is an index offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuitabilityConstants {
    pub step: usize,
    pub margin: i64,
    pub drop: i64,
}

impl SuitabilityConstants {
    pub fn standard() -> Self {
        SuitabilityConstants { step: 14, margin: 100, drop: 600 }
    }

    /// Scales margin and drop by `p / 401`, rounding up; the step count is
    /// unchanged.
    pub fn scaled_for(p: i64) -> Self {
        let scale = |base: i64| -> i64 { (base * p + 400) / 401 };
        SuitabilityConstants { step: 14, margin: scale(100), drop: scale(600) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuitabilityReport {
    pub kind: TraceKind,
    pub constants: SuitabilityConstants,
    pub pass: bool,
    /// 1-based index of the first violated step inequality.
    pub first_step_violation: Option<usize>,
    /// 1-based index of the first violated drift bound.
    pub first_drift_violation: Option<usize>,
}

/// Checks a height trace against the paired inequalities for its color.
pub fn zigzag_height_suitability(
    trace: &[i64],
    kind: TraceKind,
    constants: SuitabilityConstants,
) -> SuitabilityReport {
    assert!(!trace.is_empty(), "trace must be nonempty");
    let n = trace.len();
    let step = constants.step;
    let mut first_step_violation = None;
    if n > step {
        for k in 0..(n - step) {
            let ok = match kind {
                TraceKind::Black => trace[k + step] > trace[k] + constants.margin,
                TraceKind::White => trace[k + step] < trace[k] - constants.margin,
            };
            if !ok {
                first_step_violation = Some(k + 1);
                break;
            }
        }
    }
    let mut first_drift_violation = None;
    for (k, &h) in trace.iter().enumerate() {
        let ok = match kind {
            TraceKind::Black => h > trace[0] - constants.drop,
            TraceKind::White => h < trace[0] + constants.drop,
        };
        if !ok {
            first_drift_violation = Some(k + 1);
            break;
        }
    }
    SuitabilityReport {
        kind,
        constants,
        pass: first_step_violation.is_none() && first_drift_violation.is_none(),
        first_step_violation,
        first_drift_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{FBackend, MetabelianBackend, WreathBackend, Z2Backend};
    use crate::words::ThompsonNormalForm;

    #[test]
    fn condition_a() {
        assert!(check_condition_a(&FBackend));
        assert!(check_condition_a(&Z2Backend));
        assert!(check_condition_a(&WreathBackend));
        assert!(check_condition_a(&MetabelianBackend));
    }

    #[test]
    fn condition_c_instances() {
        let deltas = [1, 1, -1, -1];
        let epsilons = [1, -1, 1, -1];
        assert!(check_c_instance(&FBackend, &deltas, &epsilons).unwrap());
        assert!(!check_c_instance(&WreathBackend, &deltas, &epsilons).unwrap());
        assert!(!check_c_instance(&Z2Backend, &[1, -1], &[1, -1]).unwrap());
        assert!(check_c_instance(&FBackend, &[2, 1], &[1, 1]).is_err());
    }

    #[test]
    fn condition_be_instances() {
        let f = FBackend;
        assert!(check_be_instance(&f, &[1, 1], &[1], BeMode::B).unwrap());
        // eta^0 xi eta^0 = xi lies in the xi subgroup
        assert!(!check_be_instance(&f, &[0, 0], &[1], BeMode::B).unwrap());
        // abelian collapse: eta^2 xi eta xi^-1 eta lands in the eta axis of Z^2
        assert!(!check_be_instance(&Z2Backend, &[2, 1, 1], &[1, -1], BeMode::B).unwrap());
        assert!(check_be_instance(&f, &[2, 2], &[1], BeMode::E).is_err());
        assert!(check_be_instance(&f, &[1, 0, 1], &[1, 1], BeMode::B).is_err());
        assert!(check_be_instance(&f, &[2, 2, 1], &[1, 1], BeMode::B).is_err());
    }

    #[test]
    fn condition_d_trivial_base() {
        let f = FBackend;
        let report = check_d(&f, &ThompsonNormalForm::identity(), ConditionDParams::standard(401).unwrap()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert!(report.failing_deltas_i.is_empty());
        assert!(!report.part_ii_checked);
    }

    #[test]
    fn condition_d_single_interior_exception() {
        let f = FBackend;
        let g = ThompsonNormalForm::single(1, 401);
        let report = check_d(&f, &g, ConditionDParams::standard(401).unwrap()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.failing_deltas_i, vec![0]);
        assert!(report.part_ii_checked);
        assert!(report.part_ii_failures.is_empty());
    }

    #[test]
    fn condition_d_rejects_bad_p() {
        assert!(ConditionDParams::standard(402).is_err());
        assert!(ConditionDParams::standard(399).is_err());
        assert!(ConditionDParams::standard(411).is_err());
        assert!(ConditionDParams::standard(409).is_ok());
    }

    #[test]
    fn successful_elements() {
        let f = FBackend;
        assert!(is_successful(&f, &ThompsonNormalForm::identity(), 401).unwrap());
        assert!(!is_successful(&f, &ThompsonNormalForm::single(1, 401), 401).unwrap());
        assert!(is_successful(&f, &ThompsonNormalForm::identity(), 399).is_err());
    }

    #[test]
    fn dprime_instances() {
        let f = FBackend;
        // identity base: any step grows height above zero
        assert!(check_dprime_instance(&f, &[], &[], 1, 1).unwrap());
        assert!(check_dprime_instance(&f, &[1], &[1], 1, 0).is_err());
    }

    #[test]
    fn subline_profile_identity() {
        let f = FBackend;
        let profile = p_subline_profile(&f, &ThompsonNormalForm::identity(), 401, 3).unwrap();
        let expected: Vec<(i64, u64)> = (-3..=3).map(|k| (k, 401 * k.unsigned_abs())).collect();
        assert_eq!(profile.heights, expected);
        assert_eq!(profile.argmin, 0);
        assert!(profile.monotonicity_violations.is_empty());
    }

    #[test]
    fn subline_profile_z2_cone() {
        let profile = p_subline_profile(&Z2Backend, &(0, 0), 401, 2).unwrap();
        assert_eq!(profile.argmin, 0);
        assert!(profile.monotonicity_violations.is_empty());
        // single-point window
        let single = p_subline_profile(&Z2Backend, &(3, 4), 401, 0).unwrap();
        assert_eq!(single.heights.len(), 1);
        assert!(single.monotonicity_violations.is_empty());
    }

    #[test]
    fn suitability_verdicts() {
        let c = SuitabilityConstants::standard();
        // length 14: the step inequality is vacuous
        let trace: Vec<i64> = (0..14).map(|i| i * 10).collect();
        assert!(zigzag_height_suitability(&trace, TraceKind::Black, c).pass);
        // step inequality satisfied at the only applicable index
        let mut trace: Vec<i64> = vec![0; 15];
        trace[14] = 101;
        assert!(zigzag_height_suitability(&trace, TraceKind::Black, c).pass);
        // step inequality violated
        trace[14] = 50;
        let report = zigzag_height_suitability(&trace, TraceKind::Black, c);
        assert!(!report.pass);
        assert_eq!(report.first_step_violation, Some(1));
    }
}
