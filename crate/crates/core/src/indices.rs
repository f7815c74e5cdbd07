//! Direct, exact evaluation of the seven degree-based indices.
//!
//! These sums and products are the ground truth every closed form is
//! measured against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactNumber;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IndexKind {
    M1,
    M2,
    F,
    PI1,
    PI2,
    HM,
    SDD,
}

impl IndexKind {
    /// Catalog order, matching items (i)..(vii) of every formula block.
    pub const ALL: [IndexKind; 7] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::F,
        IndexKind::PI1,
        IndexKind::PI2,
        IndexKind::HM,
        IndexKind::SDD,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexKind::M1 => "M1",
            IndexKind::M2 => "M2",
            IndexKind::F => "F",
            IndexKind::PI1 => "PI1",
            IndexKind::PI2 => "PI2",
            IndexKind::HM => "HM",
            IndexKind::SDD => "SDD",
        }
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(self, IndexKind::PI1 | IndexKind::PI2)
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        Ok(match key.as_str() {
            "M1" => IndexKind::M1,
            "M2" => IndexKind::M2,
            "F" => IndexKind::F,
            "PI1" | "Π1" => IndexKind::PI1,
            "PI2" | "Π2" => IndexKind::PI2,
            "HM" => IndexKind::HM,
            // SSD is the spelling used in some of the literature
            "SDD" | "SSD" => IndexKind::SDD,
            _ => return Err(Error::UnknownIndex(s.to_string())),
        })
    }
}

/// All seven indices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexVector {
    pub n: u64,
    pub m: u64,
    #[serde(rename = "M1")]
    pub m1: ExactNumber,
    #[serde(rename = "M2")]
    pub m2: ExactNumber,
    #[serde(rename = "F")]
    pub f: ExactNumber,
    #[serde(rename = "PI1")]
    pub pi1: ExactNumber,
    #[serde(rename = "PI2")]
    pub pi2: ExactNumber,
    #[serde(rename = "HM")]
    pub hm: ExactNumber,
    #[serde(rename = "SDD")]
    pub sdd: ExactNumber,
}

impl IndexVector {
    pub fn get(&self, kind: IndexKind) -> &ExactNumber {
        match kind {
            IndexKind::M1 => &self.m1,
            IndexKind::M2 => &self.m2,
            IndexKind::F => &self.f,
            IndexKind::PI1 => &self.pi1,
            IndexKind::PI2 => &self.pi2,
            IndexKind::HM => &self.hm,
            IndexKind::SDD => &self.sdd,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (IndexKind, &ExactNumber)> {
        IndexKind::ALL.into_iter().map(move |k| (k, self.get(k)))
    }
}

fn warn_isolated(graph: &Graph, degrees: &[usize]) {
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        log::warn!(
            "PI1 of a graph with an isolated vertex ({v} of {}) is 0",
            graph.n()
        );
    }
}

fn sdd_term(du: u64, dv: u64) -> ExactNumber {
    ExactNumber::ratio(du * du + dv * dv, du * dv).expect("edge endpoints have degree >= 1")
}

/// One index, straight from its definition.
pub fn compute_index(graph: &Graph, kind: IndexKind) -> ExactNumber {
    let deg = graph.degree_sequence();
    let d = |v: usize| deg[v] as u64;
    let edges = graph.edges();
    match kind {
        IndexKind::M1 => ExactNumber::from(deg.iter().map(|&x| (x * x) as u64).sum::<u64>()),
        IndexKind::M2 => ExactNumber::from(edges.iter().map(|&(u, v)| d(u) * d(v)).sum::<u64>()),
        IndexKind::F => ExactNumber::from(deg.iter().map(|&x| (x * x * x) as u64).sum::<u64>()),
        IndexKind::PI1 => {
            warn_isolated(graph, &deg);
            let p: BigUint = deg.iter().map(|&x| BigUint::from((x * x) as u64)).product();
            ExactNumber::from_biguint(p)
        }
        IndexKind::PI2 => {
            let p: BigUint = edges
                .iter()
                .map(|&(u, v)| BigUint::from(d(u) * d(v)))
                .product();
            ExactNumber::from_biguint(p)
        }
        IndexKind::HM => ExactNumber::from(
            edges
                .iter()
                .map(|&(u, v)| (d(u) + d(v)) * (d(u) + d(v)))
                .sum::<u64>(),
        ),
        IndexKind::SDD => edges.iter().fold(ExactNumber::zero(), |acc, &(u, v)| {
            acc + sdd_term(d(u), d(v))
        }),
    }
}

/// All seven indices in one pass over vertices and one over edges.
pub fn compute_all(graph: &Graph) -> IndexVector {
    let deg = graph.degree_sequence();
    let mut m1 = 0u64;
    let mut f = 0u64;
    let mut pi1 = BigUint::one();
    for &x in &deg {
        let x = x as u64;
        m1 += x * x;
        f += x * x * x;
        pi1 *= x * x;
    }
    warn_isolated(graph, &deg);

    let mut m2 = 0u64;
    let mut hm = 0u64;
    let mut pi2 = BigUint::one();
    let mut sdd = ExactNumber::zero();
    for &(u, v) in graph.edges() {
        let (du, dv) = (deg[u] as u64, deg[v] as u64);
        m2 += du * dv;
        hm += (du + dv) * (du + dv);
        pi2 *= du * dv;
        sdd = sdd + sdd_term(du, dv);
    }

    IndexVector {
        n: graph.n() as u64,
        m: graph.m() as u64,
        m1: m1.into(),
        m2: m2.into(),
        f: f.into(),
        pi1: ExactNumber::from_biguint(pi1),
        pi2: ExactNumber::from_biguint(pi2),
        hm: hm.into(),
        sdd,
    }
}

/// `M1` via its edge form `sum (d(u) + d(v))`.
pub fn m1_by_edges(graph: &Graph) -> ExactNumber {
    let deg = graph.degree_sequence();
    ExactNumber::from(
        graph
            .edges()
            .iter()
            .map(|&(u, v)| (deg[u] + deg[v]) as u64)
            .sum::<u64>(),
    )
}

/// `ln(x)` as a float, for displaying values too large to print usefully.
pub fn log_value(x: &ExactNumber) -> Result<f64> {
    x.ln()
}
