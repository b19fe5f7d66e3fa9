//! Lower bound on the number of 4-cliques.
//!
//! Applying a normalized Gegenbauer polynomial `G_t` entrywise to the Gram
//! matrix of unit vectors on `S^{d-1}` gives a positive semidefinite matrix.
//! Evaluating its quadratic form on the vector that is 1 on vertex vectors and
//! `a` on edge vectors yields `F(a) = A(a) + B(a) K4 >= 0`, and the best `a`
//! turns that into a lower bound on `K4`.

mod gegenbauer;
mod profile;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{ceil_nonneg_u64, int, serde_rational_arr3, serde_rational_opt, Rational};
use crate::params::SrgParams;
use crate::representation::ReprConstants;

pub use gegenbauer::{gegenbauer_eval, GegenbauerEvaluator, MAX_DEGREE};
pub use profile::{class_counts, pair_profile, ClassCounts, CountPoly, PairClass, PairKind, PairProfile};

pub const DEFAULT_DEGREE: u32 = 4;

/// `F(a, K4) = A(a) + B(a) K4` with `A`, `B` quadratic in `a`; coefficients
/// are stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticForm {
    #[serde(with = "serde_rational_arr3")]
    pub a: [Rational; 3],
    #[serde(with = "serde_rational_arr3")]
    pub b: [Rational; 3],
}

impl QuadraticForm {
    pub fn eval(&self, a: &Rational, k4: &Rational) -> Rational {
        let poly = |c: &[Rational; 3]| &c[0] + &c[1] * a + &c[2] * a * a;
        poly(&self.a) + poly(&self.b) * k4
    }
}

pub fn quadratic_form(profile: &PairProfile, g: &GegenbauerEvaluator) -> QuadraticForm {
    let zero = || [Rational::zero(), Rational::zero(), Rational::zero()];
    let (mut a, mut b) = (zero(), zero());
    for class in &profile.classes {
        let (power, factor) = class.kind.form_weight();
        let val = g.eval_squared(&class.value_squared) * int(factor);
        a[power] += &val * int(class.count.constant.clone());
        b[power] += &val * int(class.count.per_k4.clone());
    }
    QuadraticForm { a, b }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4Bound {
    pub lower: u64,
    pub degree: u32,
    /// Maximizing edge weight; `None` when the supremum is approached as
    /// `a -> infinity` or no bound exists.
    #[serde(with = "serde_rational_opt")]
    pub optimal_a: Option<Rational>,
    /// The optimized rational bound before rounding up.
    #[serde(with = "serde_rational_opt")]
    pub exact: Option<Rational>,
    pub quadratic_form: QuadraticForm,
    pub diagnostic: Option<String>,
}

impl K4Bound {
    fn uninformative(degree: u32, form: QuadraticForm, why: &str) -> Self {
        K4Bound { lower: 0, degree, optimal_a: None, exact: None, quadratic_form: form, diagnostic: Some(why.to_string()) }
    }
}

/// Bound with the default degree `t = 4` in dimension `d = g`.
pub fn k4_lower_bound(params: &SrgParams, repr: &ReprConstants) -> Result<K4Bound> {
    k4_lower_bound_with_degree(params, repr, DEFAULT_DEGREE)
}

pub fn k4_lower_bound_with_degree(params: &SrgParams, repr: &ReprConstants, t: u32) -> Result<K4Bound> {
    let g = GegenbauerEvaluator::new(repr.d, t)?;
    let form = quadratic_form(&pair_profile(params, repr), &g);
    Ok(optimize(form, t))
}

/// Best bound over the even degrees `2..=max_degree`; ties go to the lower
/// degree.
pub fn best_k4_lower_bound(params: &SrgParams, repr: &ReprConstants, max_degree: u32) -> Result<K4Bound> {
    let mut best: Option<K4Bound> = None;
    for t in (2..=max_degree.max(2)).step_by(2) {
        let cand = k4_lower_bound_with_degree(params, repr, t)?;
        let better = match &best {
            None => true,
            Some(b) => cand.lower > b.lower,
        };
        if better {
            best = Some(cand);
        }
    }
    Ok(best.expect("at least one degree"))
}

/// Maximizes `-A(a)/B(a)` over `a`. Only edge-edge classes depend on `K4`, so
/// `B(a) = b2 a^2`; with `u = 1/a` the ratio is the concave parabola
/// `-(A0 u^2 + A1 u + A2)/b2`.
fn optimize(form: QuadraticForm, t: u32) -> K4Bound {
    let [a0, a1, a2] = form.a.clone();
    let [b0, b1, b2] = form.b.clone();
    if !b0.is_zero() || !b1.is_zero() {
        return K4Bound::uninformative(t, form, "K4 coefficient not proportional to a^2");
    }
    if !b2.is_positive() {
        return K4Bound::uninformative(t, form, "K4 coefficient is non-positive for every a");
    }
    let (exact, optimal_a) = if a0.is_positive() {
        // u* = -A1/(2 A0), value (A1^2/(4 A0) - A2)/b2
        let exact = (&a1 * &a1 / (int(4) * &a0) - &a2) / &b2;
        let opt = if a1.is_zero() { None } else { Some(-(int(2) * &a0) / &a1) };
        (exact, opt)
    } else if a0.is_zero() && a1.is_zero() {
        (-&a2 / &b2, None)
    } else {
        return K4Bound::uninformative(t, form, "vertex part of the form is degenerate");
    };
    let lower = match ceil_nonneg_u64(&exact) {
        Some(x) => x,
        None => return K4Bound::uninformative(t, form, "bound exceeds u64"),
    };
    K4Bound { lower, degree: t, optimal_a, exact: Some(exact), quadratic_form: form, diagnostic: None }
}
