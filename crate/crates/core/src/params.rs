//! Parameter tuples, spectra and the classical feasibility conditions.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SrgError};
use crate::exact::{int, ratio, Surd};

/// A candidate parameter tuple `(v, k, lambda, mu)`.
///
/// Construction only enforces the structural bounds of the primitive,
/// connected case. The counting identity is checked by
/// [`classical_feasibility`] so that a tuple violating it can be reported as
/// infeasible instead of being rejected outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let bad = |reason| SrgError::InvalidParams { v, k, lambda, mu, reason };
        if k == 0 || k >= v {
            return Err(bad("need 0 < k < v"));
        }
        if k == v - 1 {
            return Err(bad("k = v-1 is the complete graph"));
        }
        if lambda >= k {
            return Err(bad("need lambda < k"));
        }
        if mu == 0 {
            return Err(bad("mu = 0 is a disjoint union of cliques"));
        }
        if mu > k {
            return Err(bad("need mu <= k"));
        }
        // keep every product used downstream comfortably inside i128
        if v > 1 << 40 {
            return Err(bad("v too large"));
        }
        Ok(SrgParams { v, k, lambda, mu })
    }

    pub fn identity_holds(&self) -> bool {
        let (v, k, l, m) = self.wide();
        k * (k - l - 1) == (v - k - 1) * m
    }

    /// `|E| = vk/2`.
    pub fn edges(&self) -> u64 {
        self.v * self.k / 2
    }

    /// `mu = k`: complete multipartite graphs.
    pub fn is_complete_multipartite(&self) -> bool {
        self.mu == self.k
    }

    pub(crate) fn wide(&self) -> (i128, i128, i128, i128) {
        (self.v as i128, self.k as i128, self.lambda as i128, self.mu as i128)
    }

    fn require_identity(&self) -> Result<()> {
        if self.identity_holds() {
            Ok(())
        } else {
            Err(SrgError::IdentityViolated { v: self.v, k: self.k, lambda: self.lambda, mu: self.mu })
        }
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Restricted eigenvalues `r >= 0 > s` with multiplicities `f`, `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub r: i64,
    pub s: i64,
    pub f: u64,
    pub g: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotApplicableReason {
    /// Conference-type tuple: the discriminant is not a perfect square.
    IrrationalEigenvalues,
    /// Integral eigenvalues, but the multiplicities are not whole numbers.
    FractionalMultiplicities,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectrumOutcome {
    Integral(Spectrum),
    NotApplicable(NotApplicableReason),
}

impl SpectrumOutcome {
    pub fn integral(&self) -> Option<&Spectrum> {
        match self {
            SpectrumOutcome::Integral(s) => Some(s),
            SpectrumOutcome::NotApplicable(_) => None,
        }
    }
}

fn discriminant(p: &SrgParams) -> i128 {
    let (_, k, l, m) = p.wide();
    (l - m) * (l - m) + 4 * (k - m)
}

fn exact_sqrt(d: i128) -> Option<i128> {
    let r = d.sqrt();
    (r * r == d).then_some(r)
}

pub fn derive_spectrum(params: &SrgParams) -> Result<SpectrumOutcome> {
    params.require_identity()?;
    let (v, k, l, m) = params.wide();
    let disc = discriminant(params);
    let Some(root) = exact_sqrt(disc) else {
        return Ok(SpectrumOutcome::NotApplicable(NotApplicableReason::IrrationalEigenvalues));
    };
    // l - m and root have equal parity since disc = (l-m)^2 mod 4
    let r = (l - m + root) / 2;
    let s = (l - m - root) / 2;
    // g = ((v-1) root + 2k + (v-1)(l-m)) / (2 root)
    let num = (v - 1) * root + 2 * k + (v - 1) * (l - m);
    let den = 2 * root;
    if num % den != 0 {
        return Ok(SpectrumOutcome::NotApplicable(NotApplicableReason::FractionalMultiplicities));
    }
    let g = num / den;
    let f = v - 1 - g;
    if f < 0 || g < 0 {
        return Ok(SpectrumOutcome::NotApplicable(NotApplicableReason::FractionalMultiplicities));
    }
    let to_i64 = |x: i128| i64::try_from(x).map_err(|_| SrgError::Overflow("eigenvalue"));
    let to_u64 = |x: i128| u64::try_from(x).map_err(|_| SrgError::Overflow("multiplicity"));
    Ok(SpectrumOutcome::Integral(Spectrum { r: to_i64(r)?, s: to_i64(s)?, f: to_u64(f)?, g: to_u64(g)? }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub identity_ok: bool,
    pub spectrum: SpectrumOutcome,
    pub integrality_ok: bool,
    pub krein_ok: bool,
    pub absolute_bound_ok: bool,
    /// Equality in the `q22^2 >= 0` Krein condition (only set when all Krein
    /// conditions hold).
    pub krein_q22_zero: bool,
    /// The variant `(s+1)(k+s+rs) = (k+s)(r+1)^2` with a single `rs` term;
    /// it disagrees with the standard form in general.
    pub krein_q22_zero_rs_form: bool,
    pub conference: bool,
    pub complete_multipartite: bool,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.identity_ok && self.integrality_ok && self.krein_ok && self.absolute_bound_ok
    }
}

/// The two non-principal eigenvalues as exact elements of `Q(sqrt(disc))`.
fn eigen_surds(params: &SrgParams) -> (Surd, Surd) {
    let (_, _, l, m) = params.wide();
    let d = BigInt::from(discriminant(params));
    let half = ratio(1, 2);
    let base = ratio(BigInt::from(l - m), BigInt::from(2));
    (
        Surd { a: base.clone(), b: half.clone(), d: d.clone() },
        Surd { a: base, b: -half, d },
    )
}

/// `(k+r)(s+1)^2 - (r+1)(k+r+2rs)`: non-negative iff `q11^1 >= 0`.
fn krein_margin(k: &Surd, r: &Surd, s: &Surd) -> Surd {
    let one = int(1);
    let two = Surd::rational(int(2), &k.d);
    let s1 = s.add_rational(&one);
    let r1 = r.add_rational(&one);
    let lhs = k.add(r).mul(&s1).mul(&s1);
    let rhs = r1.mul(&k.add(r).add(&two.mul(r).mul(s)));
    lhs.sub(&rhs)
}

pub fn classical_feasibility(params: &SrgParams) -> FeasibilityReport {
    let mut report = FeasibilityReport {
        identity_ok: params.identity_holds(),
        spectrum: SpectrumOutcome::NotApplicable(NotApplicableReason::FractionalMultiplicities),
        integrality_ok: false,
        krein_ok: false,
        absolute_bound_ok: false,
        krein_q22_zero: false,
        krein_q22_zero_rs_form: false,
        conference: false,
        complete_multipartite: params.is_complete_multipartite(),
    };
    if !report.identity_ok {
        return report;
    }
    let (v, k, l, m) = params.wide();
    report.spectrum = derive_spectrum(params).expect("identity already checked");

    // multiplicities as (f, g)
    let mult = match report.spectrum {
        SpectrumOutcome::Integral(sp) => Some((sp.f as i128, sp.g as i128)),
        SpectrumOutcome::NotApplicable(NotApplicableReason::IrrationalEigenvalues) => {
            let balanced = 2 * k + (v - 1) * (l - m) == 0 && (v - 1) % 2 == 0;
            report.conference = balanced;
            balanced.then_some(((v - 1) / 2, (v - 1) / 2))
        }
        SpectrumOutcome::NotApplicable(NotApplicableReason::FractionalMultiplicities) => None,
    };
    let Some((f, g)) = mult else {
        return report;
    };
    report.integrality_ok = true;

    let (r, s) = eigen_surds(params);
    let ks = Surd::rational(int(BigInt::from(k)), &r.d);
    let q11 = krein_margin(&ks, &r, &s);
    let q22 = krein_margin(&ks, &s, &r);
    report.krein_ok = q11.signum() >= 0 && q22.signum() >= 0;
    report.krein_q22_zero = report.krein_ok && q22.signum() == 0;
    report.krein_q22_zero_rs_form = rs_form_q22_difference(&ks, &r, &s).signum() == 0;

    // imprimitive (complete multipartite) graphs are exempt
    report.absolute_bound_ok =
        report.complete_multipartite || (2 * v <= f * (f + 3) && 2 * v <= g * (g + 3));
    report
}

/// `(s+1)(k+s+rs) - (k+s)(r+1)^2`
fn rs_form_q22_difference(k: &Surd, r: &Surd, s: &Surd) -> Surd {
    let one = int(1);
    let r1 = r.add_rational(&one);
    let lhs = s.add_rational(&one).mul(&k.add(s).add(&r.mul(s)));
    let rhs = k.add(s).mul(&r1).mul(&r1);
    lhs.sub(&rhs)
}

fn integral_surds(spectrum: &Spectrum, k: u64) -> (Surd, Surd, Surd) {
    let d = BigInt::zero();
    (
        Surd::rational(int(k), &d),
        Surd::rational(int(spectrum.r), &d),
        Surd::rational(int(spectrum.s), &d),
    )
}

/// `q22^2 = 0`, i.e. `(s+1)(k+s+2rs) = (k+s)(r+1)^2`.
pub fn krein_q22_zero(spectrum: &Spectrum, k: u64) -> bool {
    let (k, r, s) = integral_surds(spectrum, k);
    krein_margin(&k, &s, &r).signum() == 0
}

/// The same equality with a single `rs` term, `(s+1)(k+s+rs)`.
pub fn krein_q22_zero_rs_form(spectrum: &Spectrum, k: u64) -> bool {
    let (k, r, s) = integral_surds(spectrum, k);
    rs_form_q22_difference(&k, &r, &s).signum() == 0
}

/// All `(lambda', mu')` with `0 <= lambda' < k1`, `0 < mu' <= k1` for which
/// `(v1, k1, lambda', mu')` passes [`classical_feasibility`], in
/// lexicographic order.
pub fn subconstituent_scan(v1: u64, k1: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for lambda in 0..k1 {
        for mu in 1..=k1 {
            let Ok(p) = SrgParams::new(v1, k1, lambda, mu) else { continue };
            if classical_feasibility(&p).feasible() {
                out.push((lambda, mu));
            }
        }
    }
    out
}
