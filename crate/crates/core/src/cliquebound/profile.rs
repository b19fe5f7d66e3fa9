//! Inner-product census of the system `{x_u} ∪ {y_e}`, where
//! `y_e = (x_u + x_w)/|x_u + x_w|` for each edge `e = uw`.
//!
//! Every class count is determined by `(v, k, lambda, mu)` and the number of
//! 4-cliques. Conventions: vertex-vertex pairs are ordered (diagonal
//! included), vertex-edge pairs are `(vertex, edge)` pairs, and edge-edge
//! pairs are unordered with the diagonal kept as its own class.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{binom2, int, serde_bigint, serde_rational, Rational};
use crate::params::SrgParams;
use crate::representation::ReprConstants;

/// `constant + per_k4 * K4`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CountPoly {
    #[serde(with = "serde_bigint")]
    pub constant: BigInt,
    #[serde(with = "serde_bigint")]
    pub per_k4: BigInt,
}

impl CountPoly {
    pub fn fixed(c: BigInt) -> Self {
        CountPoly { constant: c, per_k4: BigInt::zero() }
    }

    pub fn at(&self, k4: u64) -> BigInt {
        &self.constant + &self.per_k4 * BigInt::from(k4)
    }
}

/// Combinatorial class counts, independent of the representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    pub vv_self: CountPoly,
    pub vv_adjacent: CountPoly,
    pub vv_nonadjacent: CountPoly,
    /// vertex is an endpoint / adjacent to both / to exactly one / to neither
    pub ve: [CountPoly; 4],
    pub ee_self: CountPoly,
    /// edges sharing a vertex; third endpoints adjacent / non-adjacent
    pub ee_shared: [CountPoly; 2],
    /// disjoint edges with `j` adjacencies between their endpoints
    pub ee_disjoint: [CountPoly; 5],
}

/// Class counts from the parameters.
///
/// The disjoint-edge counts `n_0..n_4` follow from five identities over
/// pairs of disjoint edges `{ab, cd}`:
///
/// * `sum n_j` is all unordered edge pairs minus those sharing a vertex;
/// * `sum j n_j` counts paths `a-b-c-d` on four vertices, `|E|((k-1)^2 - lambda)`;
/// * `sum C(j,2) n_j` counts two cross edges either meeting at a vertex (a
///   triangle plus a pendant edge, `3T(k-2)`) or forming a 4-cycle with
///   `ab`, `cd` as opposite sides (twice the 4-cycle count);
/// * `sum C(j,3) n_j` is twice the number of diamonds, `2|E|C(lambda,2)`;
/// * `n_4 = 3 K4`.
pub fn class_counts(params: &SrgParams) -> ClassCounts {
    let v = BigInt::from(params.v);
    let k = BigInt::from(params.k);
    let l = BigInt::from(params.lambda);
    let m = BigInt::from(params.mu);
    let e = BigInt::from(params.edges());
    let one = BigInt::from(1);
    let two = BigInt::from(2);

    let triangles_x3: BigInt = &v * &k * &l / 2; // 3T
    let shared_total = &v * binom2(&k);
    let disjoint_total = binom2(&e) - &shared_total;

    let paths3 = &e * ((&k - &one) * (&k - &one) - &l);
    let cherry_pendant = &triangles_x3 * (&k - &two);
    let nonedges = binom2(&v) - &e;
    let four_cycles_x2 = &e * binom2(&l) + &nonedges * binom2(&m);
    let diamonds_x2 = &two * &e * binom2(&l);

    // unknowns as CountPoly in K4
    let n4 = CountPoly { constant: BigInt::zero(), per_k4: BigInt::from(3) };
    // n3 + 4 n4 = diamonds_x2
    let n3 = CountPoly { constant: diamonds_x2, per_k4: BigInt::from(-12) };
    // n2 + 3 n3 + 6 n4 = cherry_pendant + four_cycles_x2
    let n2 = lin(&[(1, &CountPoly::fixed(cherry_pendant + four_cycles_x2)), (-3, &n3), (-6, &n4)]);
    // n1 + 2 n2 + 3 n3 + 4 n4 = paths3
    let n1 = lin(&[(1, &CountPoly::fixed(paths3)), (-2, &n2), (-3, &n3), (-4, &n4)]);
    let n0 = lin(&[(1, &CountPoly::fixed(disjoint_total)), (-1, &n1), (-1, &n2), (-1, &n3), (-1, &n4)]);

    ClassCounts {
        vv_self: CountPoly::fixed(v.clone()),
        vv_adjacent: CountPoly::fixed(&v * &k),
        vv_nonadjacent: CountPoly::fixed(&v * (&v - &one - &k)),
        ve: [
            CountPoly::fixed(&two * &e),
            CountPoly::fixed(&e * &l),
            CountPoly::fixed(&two * &e * (&k - &one - &l)),
            CountPoly::fixed(&e * (&v - &two * &k + &l)),
        ],
        ee_self: CountPoly::fixed(e.clone()),
        ee_shared: [
            CountPoly::fixed(triangles_x3.clone()),
            CountPoly::fixed(&shared_total - &triangles_x3),
        ],
        ee_disjoint: [n0, n1, n2, n3, n4],
    }
}

fn lin(terms: &[(i64, &CountPoly)]) -> CountPoly {
    let mut out = CountPoly::default();
    for (c, p) in terms {
        out.constant += BigInt::from(*c) * &p.constant;
        out.per_k4 += BigInt::from(*c) * &p.per_k4;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairKind {
    VertexVertex,
    VertexEdge,
    EdgeEdgeSelf,
    EdgeEdgeShared,
    EdgeEdgeDisjoint,
}

impl PairKind {
    /// Multiplicity of one counted pair in the quadratic form with weight 1
    /// on vertices and `a` on edges, as `(power of a, factor)`.
    pub fn form_weight(self) -> (usize, i64) {
        match self {
            PairKind::VertexVertex => (0, 1),
            PairKind::VertexEdge => (1, 2),
            PairKind::EdgeEdgeSelf => (2, 1),
            PairKind::EdgeEdgeShared | PairKind::EdgeEdgeDisjoint => (2, 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairClass {
    pub label: String,
    pub kind: PairKind,
    #[serde(with = "serde_rational")]
    pub value_squared: Rational,
    pub negative: bool,
    pub count: CountPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairProfile {
    pub classes: Vec<PairClass>,
}

pub fn pair_profile(params: &SrgParams, repr: &ReprConstants) -> PairProfile {
    let counts = class_counts(params);
    let (p, q) = (&repr.p, &repr.q);
    let one = int(1);
    let two = int(2);
    let norm = &two + &two * p; // |x_u + x_w|^2
    let mut classes = Vec::with_capacity(16);
    // a value x given as a rational numerator over sqrt(norm) (vertex-edge)
    // or over norm (edge-edge); store x^2 and the sign.
    let mut push = |label: &str, kind: PairKind, value_squared: Rational, signed: &Rational, count: &CountPoly| {
        classes.push(PairClass {
            label: label.to_string(),
            kind,
            value_squared,
            negative: signed.is_negative(),
            count: count.clone(),
        });
    };
    let sq = |x: &Rational| x * x;

    push("vertex-self", PairKind::VertexVertex, one.clone(), &one, &counts.vv_self);
    push("vertex-adjacent", PairKind::VertexVertex, sq(p), p, &counts.vv_adjacent);
    push("vertex-nonadjacent", PairKind::VertexVertex, sq(q), q, &counts.vv_nonadjacent);

    let ve_num = [&one + p, &two * p, p + q, &two * q];
    let ve_labels = ["vertex-edge-endpoint", "vertex-edge-both", "vertex-edge-one", "vertex-edge-neither"];
    for ((num, label), count) in ve_num.iter().zip(ve_labels).zip(&counts.ve) {
        push(label, PairKind::VertexEdge, sq(num) / &norm, num, count);
    }

    push("edge-self", PairKind::EdgeEdgeSelf, one.clone(), &one, &counts.ee_self);
    let shared = [(&one + int(3) * p) / &norm, (&one + &two * p + q) / &norm];
    for (i, (x, label)) in shared.iter().zip(["edge-shared-adjacent", "edge-shared-nonadjacent"]).enumerate() {
        push(label, PairKind::EdgeEdgeShared, sq(x), x, &counts.ee_shared[i]);
    }
    for j in 0..5i64 {
        let x = (int(j) * p + int(4 - j) * q) / &norm;
        push(&format!("edge-disjoint-{j}"), PairKind::EdgeEdgeDisjoint, sq(&x), &x, &counts.ee_disjoint[j as usize]);
    }
    PairProfile { classes }
}
