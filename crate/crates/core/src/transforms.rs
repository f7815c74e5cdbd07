//! k-th subdivision graphs `S_k(G)` and k-th semi-total point graphs `R_k(G)`.
//!
//! Both transforms keep the original labels `0..n` and number the new
//! vertices of the `j`-th canonical edge as `n + j*k + t` for `t in 0..k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    /// `S_k(G)`: every edge replaced by a path through `k` new vertices.
    SubdivisionK,
    /// `R_k(G)`: every edge kept, plus `k` new vertices joined to both ends.
    SemiTotalK,
}

impl Transform {
    pub fn apply(self, graph: &Graph, k: usize) -> Graph {
        match self {
            Transform::SubdivisionK => subdivide_k(graph, k),
            Transform::SemiTotalK => semi_total_k(graph, k),
        }
    }

    /// Short flag name (`sk` / `rk`).
    pub fn short(self) -> &'static str {
        match self {
            Transform::SubdivisionK => "sk",
            Transform::SemiTotalK => "rk",
        }
    }

    pub fn vertex_count(self, n: usize, m: usize, k: usize) -> usize {
        n + m * k
    }

    pub fn edge_count(self, m: usize, k: usize) -> usize {
        match self {
            Transform::SubdivisionK => (1 + k) * m,
            Transform::SemiTotalK => (1 + 2 * k) * m,
        }
    }

    /// Degree a vertex of the derived graph must have: original vertices
    /// map to `d` (S) or `(k+1)d` (R), new vertices to 2.
    pub fn expected_degree(self, base_degree: Option<usize>, k: usize) -> usize {
        match (self, base_degree) {
            (_, None) => 2,
            (Transform::SubdivisionK, Some(d)) => d,
            (Transform::SemiTotalK, Some(d)) => (k + 1) * d,
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transform::SubdivisionK => "subdivision_k",
            Transform::SemiTotalK => "semi_total_k",
        })
    }
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sk" | "s" | "subdivision" | "subdivision_k" => Ok(Transform::SubdivisionK),
            "rk" | "r" | "semi_total" | "semi_total_k" | "semitotal" => Ok(Transform::SemiTotalK),
            other => Err(Error::UnknownTransform(other.to_string())),
        }
    }
}

/// A transform together with its parameter `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivedSpec {
    pub transform: Transform,
    pub k: usize,
}

impl DerivedSpec {
    pub fn apply(&self, graph: &Graph) -> Graph {
        self.transform.apply(graph, self.k)
    }
}

pub fn subdivide_k(graph: &Graph, k: usize) -> Graph {
    if k == 0 {
        return graph.clone();
    }
    let n = graph.n();
    let mut edges = Vec::with_capacity((k + 1) * graph.m());
    for (j, &(u, v)) in graph.edges().iter().enumerate() {
        let first = n + j * k;
        edges.push((u, first));
        for t in 1..k {
            edges.push((first + t - 1, first + t));
        }
        edges.push((v, first + k - 1));
    }
    edges.sort_unstable();
    Graph::from_sorted_unchecked(n + k * graph.m(), edges)
}

pub fn semi_total_k(graph: &Graph, k: usize) -> Graph {
    if k == 0 {
        return graph.clone();
    }
    let n = graph.n();
    let mut edges = Vec::with_capacity((2 * k + 1) * graph.m());
    for (j, &(u, v)) in graph.edges().iter().enumerate() {
        edges.push((u, v));
        for t in 0..k {
            let w = n + j * k + t;
            edges.push((u, w));
            edges.push((v, w));
        }
    }
    edges.sort_unstable();
    Graph::from_sorted_unchecked(n + k * graph.m(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn c3() -> Graph {
        generate(&Family::Cycle { a: 3 }).unwrap()
    }

    #[test]
    fn k_zero_is_identity() {
        let g = generate(&Family::Star { a: 4 }).unwrap();
        assert_eq!(subdivide_k(&g, 0), g);
        assert_eq!(semi_total_k(&g, 0), g);
    }

    #[test]
    fn subdivided_triangle_is_hexagon() {
        let s = subdivide_k(&c3(), 1);
        assert_eq!((s.n(), s.m()), (6, 6));
        assert!(s.degree_sequence().iter().all(|&d| d == 2));
        assert!(s.is_connected());
        // edge 0 = (0,1) gets vertex 3, edge 1 = (0,2) gets 4, edge 2 = (1,2) gets 5
        assert_eq!(s.edges(), &[(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)]);
    }

    #[test]
    fn subdivided_triangle_k2() {
        let s = subdivide_k(&c3(), 2);
        assert_eq!((s.n(), s.m()), (9, 9));
        assert!(s.edges().contains(&(3, 4)));
    }

    #[test]
    fn semi_total_of_edge_is_triangle() {
        let k2 = generate(&Family::Path { a: 2 }).unwrap();
        assert_eq!(semi_total_k(&k2, 1), c3());
    }

    #[test]
    fn semi_total_triangle_k2() {
        let r = semi_total_k(&c3(), 2);
        assert_eq!((r.n(), r.m()), (9, 15));
        assert_eq!(&r.degree_sequence()[..3], &[6, 6, 6]);
        assert!(r.degree_sequence()[3..].iter().all(|&d| d == 2));
    }

    #[test]
    fn transform_names_parse() {
        assert_eq!("sk".parse::<Transform>().unwrap(), Transform::SubdivisionK);
        assert_eq!("RK".parse::<Transform>().unwrap(), Transform::SemiTotalK);
        assert!("tk".parse::<Transform>().is_err());
    }
}
