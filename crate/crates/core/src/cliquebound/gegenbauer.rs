use num_traits::Zero;

use crate::error::{Result, SrgError};
use crate::exact::{int, ratio, Rational};

pub const MAX_DEGREE: u32 = 8;

/// Gegenbauer polynomial `C_t^{(d-2)/2}` normalized to `G_t(1) = 1`.
///
/// Only even degrees are supported: then `G_t` has only even powers and can
/// be evaluated exactly from `x^2`, which is what makes the irrational
/// vertex-edge inner products tractable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GegenbauerEvaluator {
    pub d: u64,
    pub t: u32,
    /// Coefficients of `x^0, x^1, ..., x^t`.
    coeffs: Vec<Rational>,
}

impl GegenbauerEvaluator {
    pub fn new(d: u64, t: u32) -> Result<Self> {
        if d < 3 {
            return Err(SrgError::Gegenbauer(format!("dimension d={d} < 3")));
        }
        if !t.is_multiple_of(2) {
            return Err(SrgError::Gegenbauer(format!("odd degree t={t}")));
        }
        if t > MAX_DEGREE {
            return Err(SrgError::Gegenbauer(format!("degree t={t} > {MAX_DEGREE}")));
        }
        let alpha = ratio(d as i64 - 2, 2);
        // C_0 = 1, C_1 = 2 alpha x,
        // (n+1) C_{n+1} = 2(n+alpha) x C_n - (n + 2 alpha - 1) C_{n-1}
        let mut prev = vec![int(1)];
        let mut cur = vec![Rational::zero(), int(2) * &alpha];
        if t == 0 {
            cur = prev.clone();
        }
        for n in 1..t as i64 {
            let mut next = vec![Rational::zero(); cur.len() + 1];
            let lead = int(2) * (int(n) + &alpha) / int(n + 1);
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] += &lead * c;
            }
            let tail = (int(n - 1) + int(2) * &alpha) / int(n + 1);
            for (i, c) in prev.iter().enumerate() {
                next[i] -= &tail * c;
            }
            prev = cur;
            cur = next;
        }
        let at_one: Rational = cur.iter().cloned().sum();
        let coeffs = cur.into_iter().map(|c| c / &at_one).collect();
        Ok(GegenbauerEvaluator { d, t, coeffs })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `G_t(x)` from `x^2`; the sign of `x` is irrelevant for even `t`.
    pub fn eval_squared(&self, x_squared: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut pow = int(1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                acc += c * &pow;
                pow *= x_squared;
            }
        }
        acc
    }

    /// Float evaluation at a signed `x`, for test-only sanity checks.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Free-function form of [`GegenbauerEvaluator::eval_squared`].
pub fn gegenbauer_eval(d: u64, t: u32, x_squared: &Rational, _negative: bool) -> Result<Rational> {
    Ok(GegenbauerEvaluator::new(d, t)?.eval_squared(x_squared))
}
