//! The contradiction engine.
//!
//! Pick the edge `uw` whose common neighbourhood spans the most edges `m`.
//! The 4-clique bound forces `m` up (the maximum is at least the average
//! `6 K4 / |E|`), the 2x2 Gram determinant of `sum x_t` and `x_u + x_w` forces
//! it down, and for every surviving `m` a 3x3 Gram determinant over a split of
//! the common neighbourhood into its `w` highest-degree vertices and the rest
//! must be negative on every admissible `(alpha, beta)`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cliquebound::{best_k4_lower_bound, K4Bound, DEFAULT_DEGREE};
use crate::error::Result;
use crate::exact::{ceil, floor, int, ratio, serde_rational, serde_rational_opt, Rational};
use crate::params::{classical_feasibility, FeasibilityReport, Spectrum, SpectrumOutcome, SrgParams};
use crate::representation::{gram2, gram3_det, repr_constants, BivariateQuadratic, ReprConstants};

pub const SCHEMA_VERSION: &str = "1";

/// Admissible values of the maximal lambda-subgraph edge count. `upper` is
/// `None` when even `m = 0` violates the 2x2 determinant condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MRange {
    pub lower: u64,
    pub upper: Option<u64>,
}

impl MRange {
    pub fn is_empty(&self) -> bool {
        self.upper.is_none_or(|u| self.lower > u)
    }

    pub fn values(&self) -> std::ops::RangeInclusive<u64> {
        match self.upper {
            Some(u) => self.lower..=u,
            #[allow(clippy::reversed_empty_ranges)]
            None => 1..=0,
        }
    }
}

/// Largest `m` with `det(gram2(m)) >= 0` as an exact rational, or `None` when
/// the determinant does not decrease in `m`.
pub fn m_upper_exact(params: &SrgParams, repr: &ReprConstants) -> Option<Rational> {
    let det = gram2(params, repr).det();
    det.c1.is_negative().then(|| -&det.c0 / &det.c1)
}

/// Integer upper bound on `m`, capped at `C(lambda, 2)`.
pub fn m_upper(params: &SrgParams, repr: &ReprConstants) -> Option<u64> {
    if params.lambda == 0 {
        return Some(0);
    }
    let cap = params.lambda * (params.lambda - 1) / 2;
    match m_upper_exact(params, repr) {
        None => Some(cap),
        Some(root) if root.is_negative() => None,
        Some(root) => Some(floor(&root).to_u64().map_or(cap, |x| x.min(cap))),
    }
}

/// `ceil(6 K4 / |E|)`: the lambda-subgraph edge counts sum to `6 K4`.
pub fn m_lower(params: &SrgParams, k4_lower: u64) -> u64 {
    let avg = ratio(BigInt::from(6u64) * BigInt::from(k4_lower), BigInt::from(params.edges()));
    ceil(&avg).to_u64().expect("m_lower fits u64")
}

/// Lower bound on the degree sum of the `w` highest-degree vertices of a
/// graph with `n` vertices and `m` edges: for each threshold `t`, either all
/// top-`w` degrees are at least `t`, or the other `n - w` are at most `t - 1`.
pub fn alpha_min(n: u64, m: u64, w: u64) -> u64 {
    let (n, m, w) = (n as i128, m as i128, w as i128);
    (1..=n.max(1))
        .map(|t| (t * w).min(2 * m - (t - 1) * (n - w)))
        .max()
        .unwrap_or(0)
        .max(0) as u64
}

/// Integer points `(alpha, beta)` consistent with split size `w` of a
/// `lambda`-vertex graph with `m` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRegion {
    pub lambda: i64,
    pub m: i64,
    pub w: i64,
    pub alpha_lo: i64,
    pub alpha_hi: i64,
}

impl SplitRegion {
    pub fn new(lambda: u64, m: u64, w: u64) -> Self {
        let (l, mi, wi) = (lambda as i64, m as i64, w as i64);
        SplitRegion {
            lambda: l,
            m: mi,
            w: wi,
            alpha_lo: alpha_min(lambda, m, w) as i64,
            alpha_hi: (2 * mi).min(wi * (l - 1)),
        }
    }

    /// Inclusive `beta` range for a fixed `alpha` (possibly empty).
    pub fn beta_range(&self, alpha: i64) -> (i64, i64) {
        let cross_cap = self.w * (self.lambda - self.w);
        let lo = 0.max(alpha - self.m).max(div_ceil_i64(alpha - cross_cap, 2));
        let hi = (self.w * (self.w - 1) / 2).min(alpha.div_euclid(2));
        (lo, hi)
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.alpha_lo..=self.alpha_hi).flat_map(move |a| {
            let (lo, hi) = self.beta_range(a);
            (lo..=hi).map(move |b| (a, b))
        })
    }
}

fn div_ceil_i64(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionOutcome {
    Empty,
    /// A point with non-negative determinant (search stopped there).
    Nonnegative { alpha: i64, beta: i64, value: Rational },
    /// Exact maximum over the region, attained at `(alpha, beta)`; ties go to
    /// the smallest `alpha`, then the smallest `beta`.
    Max { alpha: i64, beta: i64, value: Rational },
}

/// Maximum of `c0 + c1 b + c2 b^2` over integers `b` in `[lo, hi]`.
fn row_max(c: &[Rational; 3], lo: i64, hi: i64) -> (i64, Rational) {
    let eval = |b: i64| {
        let b = int(b);
        &c[0] + &c[1] * &b + &c[2] * &b * &b
    };
    let mut cands = vec![lo, hi];
    if c[2].is_negative() {
        let vertex = -&c[1] / (int(2) * &c[2]);
        for b in [floor(&vertex), ceil(&vertex)] {
            if let Some(b) = b.to_i64() {
                cands.push(b.clamp(lo, hi));
            }
        }
    }
    cands.sort_unstable();
    cands.dedup();
    let mut best: Option<(i64, Rational)> = None;
    for b in cands {
        let v = eval(b);
        if best.as_ref().is_none_or(|(_, bv)| v > *bv) {
            best = Some((b, v));
        }
    }
    best.expect("non-empty candidate set")
}

/// Exact maximization of `det` over the region, row by row in `alpha` with
/// the quadratic in `beta` maximized in closed form. With `stop_on_nonnegative`
/// the scan ends at the first row whose maximum is `>= 0`.
pub fn region_max(det: &BivariateQuadratic, region: &SplitRegion, stop_on_nonnegative: bool) -> RegionOutcome {
    let mut best: Option<(i64, i64, Rational)> = None;
    for alpha in region.alpha_lo..=region.alpha_hi {
        let (lo, hi) = region.beta_range(alpha);
        if lo > hi {
            continue;
        }
        let (beta, value) = row_max(&det.row(alpha), lo, hi);
        if stop_on_nonnegative && !value.is_negative() {
            return RegionOutcome::Nonnegative { alpha, beta, value };
        }
        if best.as_ref().is_none_or(|(_, _, bv)| value > *bv) {
            best = Some((alpha, beta, value));
        }
    }
    match best {
        None => RegionOutcome::Empty,
        Some((alpha, beta, value)) => RegionOutcome::Max { alpha, beta, value },
    }
}

/// Reference maximization by visiting every integer point.
pub fn region_max_bruteforce(det: &BivariateQuadratic, region: &SplitRegion) -> RegionOutcome {
    let mut best: Option<(i64, i64, Rational)> = None;
    for (a, b) in region.points() {
        let v = det.eval_int(a, b);
        if best.as_ref().is_none_or(|(_, _, bv)| v > *bv) {
            best = Some((a, b, v));
        }
    }
    match best {
        None => RegionOutcome::Empty,
        Some((alpha, beta, value)) => RegionOutcome::Max { alpha, beta, value },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WSplitWitness {
    pub w: u64,
    pub m: u64,
    pub alpha_min: u64,
    #[serde(with = "serde_rational")]
    pub region_max_det: Rational,
    pub region_max_at: (u64, u64),
    pub determinant: BivariateQuadratic,
}

/// Result of the split test at one `w`: a witness when the determinant is
/// negative on the whole (non-empty) region.
pub fn wsplit_at(params: &SrgParams, repr: &ReprConstants, m: u64, w: u64) -> Result<Option<WSplitWitness>> {
    let det = gram3_det(params, repr, w, m)?;
    let region = SplitRegion::new(params.lambda, m, w);
    Ok(match region_max(&det, &region, true) {
        RegionOutcome::Max { alpha, beta, value } if value.is_negative() => Some(WSplitWitness {
            w,
            m,
            alpha_min: region.alpha_lo as u64,
            region_max_det: value,
            region_max_at: (alpha as u64, beta as u64),
            determinant: det,
        }),
        _ => None,
    })
}

/// Witness for the smallest split size `w` in `1..lambda` that contradicts
/// `m`, if any.
pub fn wsplit_contradiction(params: &SrgParams, repr: &ReprConstants, m: u64) -> Option<WSplitWitness> {
    if params.lambda <= 1 {
        return None;
    }
    (1..params.lambda)
        .into_par_iter()
        .find_map_first(|w| wsplit_at(params, repr, m, w).ok().flatten())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Nonexistent,
    Inconclusive,
    InfeasibleClassical,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Nonexistent => "Nonexistent",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::InfeasibleClassical => "InfeasibleClassical",
            Verdict::NotApplicable => "NotApplicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MWitness {
    pub m: u64,
    pub witness: Option<WSplitWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub params: SrgParams,
    pub feasibility: FeasibilityReport,
    pub spectrum: Option<Spectrum>,
    pub repr: Option<ReprConstants>,
    pub k4_bound: Option<K4Bound>,
    #[serde(with = "serde_rational_opt")]
    pub m_upper_exact: Option<Rational>,
    pub m_range: Option<MRange>,
    pub witnesses: Vec<MWitness>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl Certificate {
    /// `Nonexistent` must be backed by an empty range or a witness for every
    /// `m` in it.
    pub fn is_consistent(&self) -> bool {
        if self.verdict != Verdict::Nonexistent {
            return true;
        }
        if !self.feasibility.feasible() {
            return false;
        }
        let Some(range) = self.m_range else { return false };
        range.is_empty()
            || range
                .values()
                .all(|m| self.witnesses.iter().any(|x| x.m == m && x.witness.as_ref().is_some_and(|w| w.m == m)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    pub max_gegenbauer_degree: u32,
    pub clique_bound: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { max_gegenbauer_degree: DEFAULT_DEGREE, clique_bound: true }
    }
}

pub fn decide_tuple(v: u64, k: u64, lambda: u64, mu: u64, opts: &DecideOptions) -> Result<Certificate> {
    decide(&SrgParams::new(v, k, lambda, mu)?, opts)
}

pub fn decide(params: &SrgParams, opts: &DecideOptions) -> Result<Certificate> {
    let feasibility = classical_feasibility(params);
    let mut cert = Certificate {
        schema_version: SCHEMA_VERSION.to_string(),
        params: *params,
        spectrum: feasibility.spectrum.integral().copied(),
        feasibility,
        repr: None,
        k4_bound: None,
        m_upper_exact: None,
        m_range: None,
        witnesses: Vec::new(),
        verdict: Verdict::Inconclusive,
        notes: Vec::new(),
    };
    if !cert.feasibility.feasible() {
        cert.verdict = Verdict::InfeasibleClassical;
        return Ok(cert);
    }
    let spectrum = match cert.feasibility.spectrum {
        SpectrumOutcome::Integral(sp) => sp,
        SpectrumOutcome::NotApplicable(reason) => {
            cert.notes.push(format!("spectrum not integral: {reason:?}"));
            cert.verdict = Verdict::NotApplicable;
            return Ok(cert);
        }
    };
    let repr = repr_constants(params, &spectrum);
    cert.repr = Some(repr.clone());
    if cert.feasibility.krein_q22_zero {
        cert.notes.push("Krein parameter q22^2 vanishes".to_string());
    }
    if params.is_complete_multipartite() {
        cert.notes.push("complete multipartite (mu = k): Gram tests skipped".to_string());
        return Ok(cert);
    }

    let k4 = if opts.clique_bound {
        let b = best_k4_lower_bound(params, &repr, opts.max_gegenbauer_degree)?;
        if let Some(d) = &b.diagnostic {
            cert.notes.push(format!("K4 bound: {d}"));
        }
        let lower = b.lower;
        cert.k4_bound = Some(b);
        lower
    } else {
        0
    };

    cert.m_upper_exact = m_upper_exact(params, &repr);
    let range = MRange { lower: m_lower(params, k4), upper: m_upper(params, &repr) };
    cert.m_range = Some(range);
    if range.is_empty() {
        cert.verdict = Verdict::Nonexistent;
        return Ok(cert);
    }

    // ascending m; stop at the first m no split contradicts
    for m in range.values() {
        let witness = wsplit_contradiction(params, &repr, m);
        let done = witness.is_none();
        cert.witnesses.push(MWitness { m, witness });
        if done {
            return Ok(cert);
        }
    }
    cert.verdict = Verdict::Nonexistent;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::repr_constants_for;

    fn setup(v: u64, k: u64, l: u64, m: u64) -> (SrgParams, ReprConstants) {
        let params = SrgParams::new(v, k, l, m).unwrap();
        let (_, repr) = repr_constants_for(&params).unwrap();
        (params, repr)
    }

    #[test]
    fn m_bounds_for_target() {
        let (params, repr) = setup(460, 153, 32, 60);
        assert_eq!(m_upper_exact(&params, &repr), Some(ratio(2416, 61)));
        assert_eq!(m_upper(&params, &repr), Some(39));
        assert_eq!(m_lower(&params, 228111), 39);
        assert_eq!(m_lower(&params, 0), 0);
    }

    #[test]
    fn m_bounds_small() {
        let (params, repr) = setup(10, 3, 0, 1);
        assert_eq!(m_upper(&params, &repr), Some(0));
        let params = SrgParams::new(16, 6, 2, 2).unwrap();
        assert_eq!(m_lower(&params, 8), 1);
    }

    #[test]
    fn alpha_min_examples() {
        assert_eq!(alpha_min(32, 39, 14), 42);
        for (n, m) in [(32, 39), (10, 12), (5, 0), (7, 21)] {
            assert_eq!(alpha_min(n, m, n), 2 * m);
        }
    }

    #[test]
    fn row_max_matches_scan() {
        let c = [int(3), ratio(7, 2), int(-1)];
        let (b, v) = row_max(&c, -5, 9);
        let scan = (-5..=9).map(|b| (&c[0] + &c[1] * int(b) + &c[2] * int(b * b), b)).max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1))).unwrap();
        assert_eq!((b, v), (scan.1, scan.0));
        // convex rows peak at an endpoint
        let c = [int(0), int(-1), int(1)];
        assert_eq!(row_max(&c, -2, 1).0, -2);
    }

    #[test]
    fn target_split_at_fourteen() {
        let (params, repr) = setup(460, 153, 32, 60);
        let w = wsplit_at(&params, &repr, 39, 14).unwrap().unwrap();
        assert_eq!(w.alpha_min, 42);
        assert_eq!(w.region_max_at, (42, 3));
        assert_eq!(w.region_max_det, ratio(-270848, 132651));
    }

    #[test]
    fn target_region_agrees_with_bruteforce() {
        let (params, repr) = setup(460, 153, 32, 60);
        for w in [5, 13, 14, 20, 31] {
            let det = gram3_det(&params, &repr, w, 39).unwrap();
            let region = SplitRegion::new(32, 39, w);
            assert_eq!(region_max(&det, &region, false), region_max_bruteforce(&det, &region), "w={w}");
        }
    }

    #[test]
    fn corner_dominance_for_target() {
        let (params, repr) = setup(460, 153, 32, 60);
        let det = gram3_det(&params, &repr, 14, 39).unwrap();
        for a in 42..78 {
            assert!(det.eval_int(a + 1, 3) < det.eval_int(a, 3));
        }
        for b in 3..40 {
            assert!(det.eval_int(42, b + 1) < det.eval_int(42, b));
        }
    }

    #[test]
    fn decide_target() {
        let cert = decide_tuple(460, 153, 32, 60, &DecideOptions::default()).unwrap();
        assert_eq!(cert.verdict, Verdict::Nonexistent);
        assert_eq!(cert.m_range, Some(MRange { lower: 39, upper: Some(39) }));
        assert!(cert.is_consistent());
        let w = cert.witnesses[0].witness.as_ref().unwrap();
        assert!(w.region_max_det.is_negative());
    }

    #[test]
    fn decide_existing_graphs_inconclusive() {
        for t in [(16, 6, 2, 2), (10, 3, 0, 1), (21, 10, 5, 4), (9, 4, 1, 2)] {
            let cert = decide_tuple(t.0, t.1, t.2, t.3, &DecideOptions::default()).unwrap();
            assert_eq!(cert.verdict, Verdict::Inconclusive, "{t:?}");
        }
    }

    #[test]
    fn decide_other_verdicts() {
        let o = DecideOptions::default();
        assert_eq!(decide_tuple(10, 3, 1, 1, &o).unwrap().verdict, Verdict::InfeasibleClassical);
        assert_eq!(decide_tuple(13, 6, 2, 3, &o).unwrap().verdict, Verdict::NotApplicable);
        let cert = decide_tuple(9, 6, 3, 6, &o).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert!(cert.k4_bound.is_none());
        assert!(decide_tuple(10, 10, 1, 1, &o).is_err());
    }

    #[test]
    fn without_clique_bound_target_is_inconclusive() {
        let o = DecideOptions { clique_bound: false, ..Default::default() };
        let cert = decide_tuple(460, 153, 32, 60, &o).unwrap();
        assert_eq!(cert.m_range.unwrap().lower, 0);
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn nonnegative_point_blocks_witness() {
        // m = 0 on the target: alpha = beta = 0 is admissible
        let (params, repr) = setup(460, 153, 32, 60);
        assert!(wsplit_contradiction(&params, &repr, 0).is_none());
        let det = gram3_det(&params, &repr, 1, 0).unwrap();
        assert!(!det.eval_int(0, 0).is_negative());
    }

    #[test]
    fn split_needs_lambda_two() {
        let (params, repr) = setup(10, 3, 0, 1);
        assert!(wsplit_contradiction(&params, &repr, 0).is_none());
    }
}
