//! Independent oracle for integration tests.
//!
//! Builds derived graphs as dense adjacency matrices straight from their
//! definitions and evaluates every index from the matrix, using the
//! max/min form of SDD. Shares no code with the library beyond reading the
//! base graph's edge list.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use topo_index::Graph;

pub struct Dense {
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn from_graph(g: &Graph) -> Dense {
        let mut d = Dense::with_vertices(g.n());
        for &(u, v) in g.edges() {
            d.join(u, v);
        }
        d
    }

    fn with_vertices(n: usize) -> Dense {
        Dense {
            adj: vec![vec![false; n]; n],
        }
    }

    fn add_vertex(&mut self) -> usize {
        for row in &mut self.adj {
            row.push(false);
        }
        self.adj.push(vec![false; self.adj.len() + 1]);
        self.adj.len() - 1
    }

    fn join(&mut self, u: usize, v: usize) {
        assert!(u != v && !self.adj[u][v], "oracle built a non-simple graph");
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adj[u][v])
            .collect()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.adj
            .iter()
            .map(|row| row.iter().filter(|&&b| b).count() as i64)
            .collect()
    }
}

/// Each edge replaced by a path with `k` interior vertices.
pub fn oracle_subdivision(g: &Graph, k: usize) -> Dense {
    let mut d = Dense::with_vertices(g.n());
    for &(u, v) in g.edges() {
        let mut path = vec![u];
        for _ in 0..k {
            path.push(d.add_vertex());
        }
        path.push(v);
        for w in path.windows(2) {
            d.join(w[0], w[1]);
        }
    }
    d
}

/// Every edge kept, plus `k` apex vertices adjacent to both ends.
pub fn oracle_semi_total(g: &Graph, k: usize) -> Dense {
    let mut d = Dense::from_graph(g);
    for &(u, v) in g.edges() {
        for _ in 0..k {
            let w = d.add_vertex();
            d.join(u, w);
            d.join(w, v);
        }
    }
    d
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleIndices {
    pub m1: BigRational,
    pub m2: BigRational,
    pub f: BigRational,
    pub pi1: BigRational,
    pub pi2: BigRational,
    pub hm: BigRational,
    pub sdd: BigRational,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn oracle_indices(d: &Dense) -> OracleIndices {
    let deg = d.degrees();
    let mut out = OracleIndices {
        m1: BigRational::zero(),
        m2: BigRational::zero(),
        f: BigRational::zero(),
        pi1: BigRational::one(),
        pi2: BigRational::one(),
        hm: BigRational::zero(),
        sdd: BigRational::zero(),
    };
    for &x in &deg {
        out.m1 += q(x * x);
        out.f += q(x * x * x);
        out.pi1 *= q(x * x);
    }
    for (u, v) in d.edges() {
        let (a, b) = (deg[u], deg[v]);
        out.m2 += q(a * b);
        out.hm += q((a + b) * (a + b));
        out.pi2 *= q(a * b);
        let (hi, lo) = (a.max(b), a.min(b));
        out.sdd += BigRational::new(BigInt::from(hi), BigInt::from(lo))
            + BigRational::new(BigInt::from(lo), BigInt::from(hi));
    }
    out
}

impl OracleIndices {
    pub fn get(&self, kind: topo_index::IndexKind) -> &BigRational {
        use topo_index::IndexKind::*;
        match kind {
            M1 => &self.m1,
            M2 => &self.m2,
            F => &self.f,
            PI1 => &self.pi1,
            PI2 => &self.pi2,
            HM => &self.hm,
            SDD => &self.sdd,
        }
    }
}

pub fn oracle_derived(g: &Graph, transform: topo_index::Transform, k: usize) -> Dense {
    match transform {
        topo_index::Transform::SubdivisionK => oracle_subdivision(g, k),
        topo_index::Transform::SemiTotalK => oracle_semi_total(g, k),
    }
}
