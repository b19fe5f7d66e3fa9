use num_bigint::BigInt;

use super::{census, RefGraph};
use crate::cliquebound::{class_counts, k4_lower_bound};
use crate::gramtest::{decide, m_lower, m_upper, DecideOptions, Verdict};
use crate::params::{derive_spectrum, SpectrumOutcome};
use crate::representation::repr_constants;

#[derive(Debug, Clone)]
pub struct SelfCheckEntry {
    pub graph: String,
    pub failures: Vec<String>,
}

impl SelfCheckEntry {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const REFERENCE_GRAPHS: &[RefGraph] = &[
    RefGraph::Petersen,
    RefGraph::Paley(5),
    RefGraph::Paley(9),
    RefGraph::Paley(13),
    RefGraph::Paley(17),
    RefGraph::Paley(25),
    RefGraph::Triangular(5),
    RefGraph::Triangular(6),
    RefGraph::Triangular(7),
    RefGraph::Rook(3),
    RefGraph::Rook(4),
    RefGraph::Rook(5),
];

/// Validates the closed-form class counts, the averaging identity, the
/// `m` bounds and verdict soundness against each reference graph.
pub fn self_check() -> Vec<SelfCheckEntry> {
    REFERENCE_GRAPHS.iter().map(|g| check_one(*g)).collect()
}

fn check_one(which: RefGraph) -> SelfCheckEntry {
    let mut failures = Vec::new();
    let mut fail = |s: String| failures.push(s);
    let g = match which.construct() {
        Ok(g) => g,
        Err(e) => {
            return SelfCheckEntry { graph: which.to_string(), failures: vec![e.to_string()] };
        }
    };
    let params = which.expected_params().expect("constructed");
    let c = census(&g);
    let counts = class_counts(&params);
    let k4 = c.k4_count;
    let big = |x: u64| BigInt::from(x);

    for j in 0..5 {
        if counts.ee_disjoint[j].at(k4) != big(c.n_j_disjoint[j]) {
            fail(format!("n_{j}: formula {} vs census {}", counts.ee_disjoint[j].at(k4), c.n_j_disjoint[j]));
        }
    }
    for i in 0..4 {
        if counts.ve[i].at(k4) != big(c.vertex_edge_class_counts[i]) {
            fail(format!("vertex-edge class {i} mismatch"));
        }
    }
    for i in 0..2 {
        if counts.ee_shared[i].at(k4) != big(c.shared_edge_class_counts[i]) {
            fail(format!("shared-edge class {i} mismatch"));
        }
    }
    if c.lambda_subgraph_edge_total != 6 * k4 {
        fail(format!("sum m_e = {} != 6 K4 = {}", c.lambda_subgraph_edge_total, 6 * k4));
    }

    if let Ok(SpectrumOutcome::Integral(sp)) = derive_spectrum(&params) {
        let repr = repr_constants(&params, &sp);
        if !params.is_complete_multipartite() {
            match k4_lower_bound(&params, &repr) {
                Ok(b) if b.lower > k4 => fail(format!("K4 bound {} exceeds true count {k4}", b.lower)),
                Ok(b) => {
                    let lo = m_lower(&params, b.lower);
                    if c.max_lambda_subgraph_edges < lo {
                        fail(format!("max m_e {} below m_lower {lo}", c.max_lambda_subgraph_edges));
                    }
                }
                Err(e) => fail(format!("K4 bound: {e}")),
            }
            match m_upper(&params, &repr) {
                Some(hi) if c.max_lambda_subgraph_edges <= hi => {}
                other => fail(format!("max m_e {} above m_upper {other:?}", c.max_lambda_subgraph_edges)),
            }
        }
    }
    match decide(&params, &DecideOptions::default()) {
        Ok(cert) if cert.verdict == Verdict::Nonexistent || cert.verdict == Verdict::InfeasibleClassical => {
            fail(format!("unsound verdict {} for an existing graph", cert.verdict))
        }
        Ok(_) => {}
        Err(e) => fail(format!("decide: {e}")),
    }
    SelfCheckEntry { graph: which.to_string(), failures }
}
