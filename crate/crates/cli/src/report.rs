use std::fmt::Write;

use num_traits::ToPrimitive;
use srg_core::gramtest::{MWitness, WSplitWitness};
use srg_core::params::{NotApplicableReason, SpectrumOutcome};
use srg_core::Certificate;

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn witness_line(w: &WSplitWitness) -> String {
    format!(
        "w = {}: max det = {} at (alpha, beta) = ({}, {}), alpha >= {}",
        w.w, w.region_max_det, w.region_max_at.0, w.region_max_at.1, w.alpha_min
    )
}

/// Human-readable pipeline transcript.
pub fn transcript(cert: &Certificate, extra_splits: &[(u64, Option<WSplitWitness>)]) -> String {
    let mut out = String::new();
    let f = &cert.feasibility;
    let p = cert.params;
    let _ = writeln!(out, "parameters       {}", p);
    let _ = writeln!(out, "identity         {}", ok(f.identity_ok));
    match f.spectrum {
        _ if !f.identity_ok => {
            let _ = writeln!(out, "spectrum         -");
        }
        SpectrumOutcome::Integral(sp) => {
            let _ = writeln!(out, "spectrum         {}^1 {}^{} ({})^{}", p.k, sp.r, sp.f, sp.s, sp.g);
        }
        SpectrumOutcome::NotApplicable(NotApplicableReason::IrrationalEigenvalues) => {
            let _ = writeln!(out, "spectrum         irrational (conference type: {})", f.conference);
        }
        SpectrumOutcome::NotApplicable(NotApplicableReason::FractionalMultiplicities) => {
            let _ = writeln!(out, "spectrum         fractional multiplicities");
        }
    }
    if f.identity_ok {
        let _ = writeln!(out, "integrality      {}", ok(f.integrality_ok));
        let _ = writeln!(out, "krein            {}{}", ok(f.krein_ok), if f.krein_q22_zero { " (q22^2 = 0)" } else { "" });
        let _ = writeln!(out, "absolute bound   {}", ok(f.absolute_bound_ok));
    }
    if let Some(r) = &cert.repr {
        let _ = writeln!(out, "p, q, d          {}, {}, {}", r.p, r.q, r.d);
    }
    if let Some(b) = &cert.k4_bound {
        let _ = write!(out, "K4 >= {}", b.lower);
        if let Some(x) = &b.exact {
            let _ = write!(out, "  (degree {}, exact bound ~ {:.4}", b.degree, x.to_f64().unwrap_or(f64::NAN));
            if let Some(a) = &b.optimal_a {
                let _ = write!(out, ", a* = {a}");
            }
            let _ = write!(out, ")");
        }
        if let Some(d) = &b.diagnostic {
            let _ = write!(out, "  [{d}]");
        }
        out.push('\n');
    }
    if let Some(r) = &cert.m_range {
        match r.upper {
            Some(u) => {
                let _ = write!(out, "m range          [{}, {}]", r.lower, u);
            }
            None => {
                let _ = write!(out, "m range          [{}, -] (no admissible m)", r.lower);
            }
        }
        if let Some(x) = &cert.m_upper_exact {
            let _ = write!(out, "  (m <= {x})");
        }
        if r.is_empty() {
            let _ = write!(out, "  EMPTY");
        }
        out.push('\n');
    }
    for MWitness { m, witness } in &cert.witnesses {
        match witness {
            Some(w) => {
                let _ = writeln!(out, "{:<17}contradicted, {}", format!("m = {m}"), witness_line(w));
            }
            None => {
                let _ = writeln!(out, "{:<17}no contradicting split", format!("m = {m}"));
            }
        }
    }
    for (w, res) in extra_splits {
        match res {
            Some(x) => {
                let _ = writeln!(out, "split            {}", witness_line(x));
            }
            None => {
                let _ = writeln!(out, "split            w = {w}: no contradiction");
            }
        }
    }
    for n in &cert.notes {
        let _ = writeln!(out, "note             {n}");
    }
    let _ = writeln!(out, "verdict          {}", cert.verdict);
    out
}
