//! Euclidean representation constants and symbolic Gram matrices of sums of
//! representation vectors.
//!
//! Vertices map to unit vectors in the `s`-eigenspace (dimension `g`) with
//! inner product `p` across edges and `q` across non-edges. Only these inner
//! products are used here; vectors are never materialized.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SrgError};
use crate::exact::{int, ratio, serde_rational, Rational};
use crate::params::{derive_spectrum, Spectrum, SpectrumOutcome, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReprConstants {
    #[serde(with = "serde_rational")]
    pub p: Rational,
    #[serde(with = "serde_rational")]
    pub q: Rational,
    pub d: u64,
}

/// `p = s/k`, `q = -(1+s)/(v-k-1)`, `d = g`.
pub fn repr_constants(params: &SrgParams, spectrum: &Spectrum) -> ReprConstants {
    let p = ratio(spectrum.s as i128, params.k as i128);
    let q = ratio(-(1 + spectrum.s as i128), (params.v - params.k - 1) as i128);
    ReprConstants { p, q, d: spectrum.g }
}

/// Derives the spectrum first; conference-type tuples are an error here.
pub fn repr_constants_for(params: &SrgParams) -> Result<(Spectrum, ReprConstants)> {
    match derive_spectrum(params)? {
        SpectrumOutcome::Integral(sp) => Ok((sp, repr_constants(params, &sp))),
        SpectrumOutcome::NotApplicable(reason) => Err(SrgError::NotApplicable(format!("{params}: {reason:?}"))),
    }
}

/// `c0 + c1 * m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearPoly {
    #[serde(with = "serde_rational")]
    pub c0: Rational,
    #[serde(with = "serde_rational")]
    pub c1: Rational,
}

impl LinearPoly {
    pub fn eval(&self, m: &Rational) -> Rational {
        &self.c0 + &self.c1 * m
    }
}

/// Gram matrix of `X1 = sum of x_t over a lambda-set` and `X2 = x_u + x_w`,
/// with the edge count `m` inside the lambda-set left symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicGram2 {
    pub a11: LinearPoly,
    #[serde(with = "serde_rational")]
    pub a12: Rational,
    #[serde(with = "serde_rational")]
    pub a22: Rational,
}

impl SymbolicGram2 {
    /// `det` as a polynomial in `m` (linear, since only `a11` depends on it).
    pub fn det(&self) -> LinearPoly {
        LinearPoly {
            c0: &self.a11.c0 * &self.a22 - &self.a12 * &self.a12,
            c1: &self.a11.c1 * &self.a22,
        }
    }
}

pub fn gram2(params: &SrgParams, repr: &ReprConstants) -> SymbolicGram2 {
    let l = int(params.lambda);
    let (p, q) = (&repr.p, &repr.q);
    let two = int(2);
    // lambda + 2mp + (lambda^2 - lambda - 2m) q
    let a11 = LinearPoly {
        c0: &l + (&l * &l - &l) * q,
        c1: &two * p - &two * q,
    };
    SymbolicGram2 {
        a11,
        a12: &two * &l * p,
        a22: &two + &two * p,
    }
}

/// `c0 + ca*alpha + cb*beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine2 {
    pub c0: Rational,
    pub ca: Rational,
    pub cb: Rational,
}

impl Affine2 {
    pub fn constant(c0: Rational) -> Self {
        Affine2 { c0, ca: Rational::zero(), cb: Rational::zero() }
    }

    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        &self.c0 + &self.ca * alpha + &self.cb * beta
    }

    pub fn mul(&self, o: &Affine2) -> BivariateQuadratic {
        BivariateQuadratic {
            constant: &self.c0 * &o.c0,
            alpha: &self.c0 * &o.ca + &self.ca * &o.c0,
            beta: &self.c0 * &o.cb + &self.cb * &o.c0,
            alpha2: &self.ca * &o.ca,
            alpha_beta: &self.ca * &o.cb + &self.cb * &o.ca,
            beta2: &self.cb * &o.cb,
        }
    }

    pub fn scale(&self, c: &Rational) -> Affine2 {
        Affine2 { c0: &self.c0 * c, ca: &self.ca * c, cb: &self.cb * c }
    }
}

/// Exact quadratic polynomial in `(alpha, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BivariateQuadratic {
    #[serde(with = "serde_rational")]
    pub constant: Rational,
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    #[serde(with = "serde_rational")]
    pub beta: Rational,
    #[serde(with = "serde_rational")]
    pub alpha2: Rational,
    #[serde(with = "serde_rational")]
    pub alpha_beta: Rational,
    #[serde(with = "serde_rational")]
    pub beta2: Rational,
}

impl BivariateQuadratic {
    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        &self.constant
            + &self.alpha * alpha
            + &self.beta * beta
            + &self.alpha2 * alpha * alpha
            + &self.alpha_beta * alpha * beta
            + &self.beta2 * beta * beta
    }

    pub fn eval_int(&self, alpha: i64, beta: i64) -> Rational {
        self.eval(&int(alpha), &int(beta))
    }

    /// Restriction to a fixed `alpha`: coefficients `(c0, c1, c2)` of
    /// `c0 + c1*beta + c2*beta^2`.
    pub fn row(&self, alpha: i64) -> [Rational; 3] {
        let a = int(alpha);
        [
            &self.constant + &self.alpha * &a + &self.alpha2 * &a * &a,
            &self.beta + &self.alpha_beta * &a,
            self.beta2.clone(),
        ]
    }

    fn add_assign(&mut self, o: &BivariateQuadratic, sign: i32) {
        let f = |x: &mut Rational, y: &Rational| {
            if sign >= 0 {
                *x += y
            } else {
                *x -= y
            }
        };
        f(&mut self.constant, &o.constant);
        f(&mut self.alpha, &o.alpha);
        f(&mut self.beta, &o.beta);
        f(&mut self.alpha2, &o.alpha2);
        f(&mut self.alpha_beta, &o.alpha_beta);
        f(&mut self.beta2, &o.beta2);
    }
}

/// Gram matrix of `Y1` (sum over the `lambda - w` low-degree common
/// neighbours), `Y2` (sum over the `w` top-degree ones) and `Y3 = x_u + x_w`,
/// affine in `alpha` (degree sum of the top part) and `beta` (edges inside
/// the top part).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicGram3 {
    pub y11: Affine2,
    pub y12: Affine2,
    pub y22: Affine2,
    pub y13: Rational,
    pub y23: Rational,
    pub y33: Rational,
}

impl SymbolicGram3 {
    /// No range check on `w`, so the degenerate `w = lambda` case can be
    /// inspected.
    pub fn new(params: &SrgParams, repr: &ReprConstants, w: u64, m: u64) -> Self {
        let (p, q) = (&repr.p, &repr.q);
        let n1 = int(params.lambda as i64 - w as i64);
        let n2 = int(w);
        let m = int(m);
        let one = int(1);
        let two = int(2);
        let pq = p - q;

        // edges inside the low part: m + beta - alpha
        // <Y1,Y1> = n1 + 2 e p + (n1(n1-1) - 2e) q = n1 + n1(n1-1) q + 2e(p-q)
        let c11 = &n1 + &n1 * (&n1 - &one) * q;
        let e11 = Affine2 { c0: m.clone(), ca: -one.clone(), cb: one.clone() };
        let y11 = Affine2 { c0: c11, ca: Rational::zero(), cb: Rational::zero() };
        let y11 = add_affine(&y11, &e11.scale(&(&two * &pq)));

        // <Y2,Y2> = n2 + n2(n2-1) q + 2 beta (p-q)
        let y22 = Affine2 {
            c0: &n2 + &n2 * (&n2 - &one) * q,
            ca: Rational::zero(),
            cb: &two * &pq,
        };

        // cross edges c = alpha - 2 beta: <Y1,Y2> = c p + (n1 n2 - c) q
        let y12 = Affine2 { c0: &n1 * &n2 * q, ca: pq.clone(), cb: -&two * &pq };

        SymbolicGram3 {
            y11,
            y12,
            y22,
            y13: &two * &n1 * p,
            y23: &two * &n2 * p,
            y33: &two + &two * p,
        }
    }

    /// Cofactor expansion along the first row, exploiting that the third row
    /// and column are constant.
    pub fn det(&self) -> BivariateQuadratic {
        let (a13, a23, a33) = (&self.y13, &self.y23, &self.y33);
        let mut out = BivariateQuadratic::default();
        // a11 (a22 a33 - a23^2)
        out.add_assign(&self.y11.mul(&add_affine(&self.y22.scale(a33), &Affine2::constant(-(a23 * a23)))), 1);
        // - a12 (a12 a33 - a23 a13)
        out.add_assign(
            &self.y12.mul(&add_affine(&self.y12.scale(a33), &Affine2::constant(-(a23 * a13)))),
            -1,
        );
        // + a13 (a12 a23 - a22 a13)
        let tail = add_affine(&self.y12.scale(&(a23 * a13)), &self.y22.scale(&-(a13 * a13)));
        out.add_assign(&Affine2::constant(int(1)).mul(&tail), 1);
        out
    }

    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> [[Rational; 3]; 3] {
        let a11 = self.y11.eval(alpha, beta);
        let a12 = self.y12.eval(alpha, beta);
        let a22 = self.y22.eval(alpha, beta);
        [
            [a11, a12.clone(), self.y13.clone()],
            [a12, a22, self.y23.clone()],
            [self.y13.clone(), self.y23.clone(), self.y33.clone()],
        ]
    }
}

fn add_affine(a: &Affine2, b: &Affine2) -> Affine2 {
    Affine2 { c0: &a.c0 + &b.c0, ca: &a.ca + &b.ca, cb: &a.cb + &b.cb }
}

/// Determinant of the 3x3 Gram matrix for split size `w` (`1 <= w < lambda`)
/// and lambda-subgraph edge count `m`.
pub fn gram3_det(params: &SrgParams, repr: &ReprConstants, w: u64, m: u64) -> Result<BivariateQuadratic> {
    if w == 0 || w >= params.lambda {
        return Err(SrgError::SplitOutOfRange { w, lambda: params.lambda });
    }
    Ok(SymbolicGram3::new(params, repr, w, m).det())
}

pub fn det3(a: &[[Rational; 3]; 3]) -> Rational {
    &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
        - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
        + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
}
