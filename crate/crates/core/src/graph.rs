//! Simple undirected graphs, family generators and the edge-list format.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically and
/// without duplicates. A `Graph` can only be built through validating
/// constructors, so those invariants always hold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from any edge order; rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidEdge { u, v, n });
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    /// Internal constructor for callers that already guarantee the invariants.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degree_sequence();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Connected in the usual sense; the graph with no vertices is not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// Canonical edge-list text: `n <count>` header then one `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 + self.edges.len() * 8);
        writeln!(out, "n {}", self.n).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// Parses the edge-list format.
///
/// Lines are `# comment`, an optional leading `n <count>` header, or `u v`.
/// Without a header, `n` is one more than the largest label seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut seen_edge = false;
    let mut raw: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: line_no,
            text: trimmed.to_string(),
        };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(malformed());
        }
        if tokens[0] == "n" {
            if seen_edge || declared_n.is_some() {
                return Err(Error::LateHeader { line: line_no });
            }
            declared_n = Some(tokens[1].parse().map_err(|_| malformed())?);
            continue;
        }
        let u: usize = tokens[0].parse().map_err(|_| malformed())?;
        let v: usize = tokens[1].parse().map_err(|_| malformed())?;
        seen_edge = true;
        raw.push((line_no, u, v));
    }

    let n = match declared_n {
        Some(n) => n,
        None => raw.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0),
    };

    let mut set = BTreeSet::new();
    for (line, u, v) in raw {
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { line, vertex, n });
            }
        }
        if !set.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
    }
    Ok(Graph::from_sorted_unchecked(n, set.into_iter().collect()))
}

/// Graph families understood by [`generate`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Path {
        a: usize,
    },
    Cycle {
        a: usize,
    },
    Complete {
        a: usize,
    },
    /// `K_{1,a}`: centre 0, leaves `1..=a`.
    Star {
        a: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    RandomRegular {
        n: usize,
        r: usize,
        seed: u64,
    },
    ErdosRenyi {
        n: usize,
        p: f64,
        seed: u64,
    },
    FromFile {
        path: PathBuf,
    },
}

pub const FAMILY_NAMES: [&str; 8] = [
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "random_regular",
    "erdos_renyi",
    "from_file",
];

impl Family {
    /// Builds a family from loosely-typed parameters (CLI flags, JS calls).
    ///
    /// `size` is `a` (or `n` for random kinds), `size2` is `b`.
    pub fn from_parts(
        name: &str,
        size: Option<usize>,
        size2: Option<usize>,
        r: Option<usize>,
        p: Option<f64>,
        seed: u64,
    ) -> Result<Family> {
        let need = |what: &str, v: Option<usize>| {
            v.ok_or_else(|| Error::InvalidFamily(format!("{name} needs {what}")))
        };
        let key = name.trim().to_ascii_lowercase().replace('-', "_");
        Ok(match key.as_str() {
            "path" => Family::Path {
                a: need("--size", size)?,
            },
            "cycle" => Family::Cycle {
                a: need("--size", size)?,
            },
            "complete" => Family::Complete {
                a: need("--size", size)?,
            },
            "star" => Family::Star {
                a: need("--size", size)?,
            },
            "complete_bipartite" | "bipartite" => Family::CompleteBipartite {
                a: need("--size", size)?,
                b: need("--size2", size2)?,
            },
            "random_regular" | "regular" => Family::RandomRegular {
                n: need("--size", size)?,
                r: need("--r", r)?,
                seed,
            },
            "erdos_renyi" | "gnp" => Family::ErdosRenyi {
                n: need("--size", size)?,
                p: p.ok_or_else(|| Error::InvalidFamily(format!("{name} needs --p")))?,
                seed,
            },
            _ => return Err(Error::UnknownFamily(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Star { .. } => "star",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::RandomRegular { .. } => "random_regular",
            Family::ErdosRenyi { .. } => "erdos_renyi",
            Family::FromFile { .. } => "from_file",
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Family::RandomRegular { .. } | Family::ErdosRenyi { .. }
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path { a }
            | Family::Cycle { a }
            | Family::Complete { a }
            | Family::Star { a } => {
                write!(f, "{}({a})", self.name())
            }
            Family::CompleteBipartite { a, b } => write!(f, "complete_bipartite({a},{b})"),
            Family::RandomRegular { n, r, seed } => {
                write!(f, "random_regular(n={n},r={r},seed={seed})")
            }
            Family::ErdosRenyi { n, p, seed } => write!(f, "erdos_renyi(n={n},p={p},seed={seed})"),
            Family::FromFile { path } => write!(f, "file({})", path.display()),
        }
    }
}

const MAX_PAIRING_ATTEMPTS: usize = 100_000;

/// Builds the graph described by `family`.
///
/// Deterministic kinds use the canonical labelling; random kinds are a pure
/// function of their seed.
pub fn generate(family: &Family) -> Result<Graph> {
    let at_least = |a: usize, min: usize, what: &str| {
        if a < min {
            Err(Error::InvalidFamily(format!(
                "{what} needs size >= {min}, got {a}"
            )))
        } else {
            Ok(())
        }
    };
    match *family {
        Family::Path { a } => {
            at_least(a, 1, "path")?;
            Ok(Graph::from_sorted_unchecked(
                a,
                (1..a).map(|i| (i - 1, i)).collect(),
            ))
        }
        Family::Cycle { a } => {
            at_least(a, 3, "cycle")?;
            Graph::new(a, (1..a).map(|i| (i - 1, i)).chain([(0, a - 1)]))
        }
        Family::Complete { a } => {
            at_least(a, 1, "complete")?;
            let edges = (0..a)
                .flat_map(|u| (u + 1..a).map(move |v| (u, v)))
                .collect();
            Ok(Graph::from_sorted_unchecked(a, edges))
        }
        Family::Star { a } => {
            at_least(a, 1, "star")?;
            Ok(Graph::from_sorted_unchecked(
                a + 1,
                (1..=a).map(|v| (0, v)).collect(),
            ))
        }
        Family::CompleteBipartite { a, b } => {
            at_least(a, 1, "complete_bipartite")?;
            at_least(b, 1, "complete_bipartite")?;
            let edges = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Ok(Graph::from_sorted_unchecked(a + b, edges))
        }
        Family::RandomRegular { n, r, seed } => random_regular(n, r, seed),
        Family::ErdosRenyi { n, p, seed } => erdos_renyi(n, p, seed),
        Family::FromFile { ref path } => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            parse_edge_list(&text)
        }
    }
}

/// Pairing (configuration) model, restarted until the pairing is simple.
fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidFamily("random_regular needs n >= 1".into()));
    }
    if r >= n || !(n * r).is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!(
            "random_regular needs r < n and n*r even (n={n}, r={r})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut set = BTreeSet::new();
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !set.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
        }
        return Ok(Graph::from_sorted_unchecked(n, set.into_iter().collect()));
    }
    Err(Error::Generation(format!(
        "no simple {r}-regular pairing on {n} vertices after {MAX_PAIRING_ATTEMPTS} attempts"
    )))
}

/// Independent coin flips over pairs in lexicographic order.
fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidFamily("erdos_renyi needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidFamily(format!(
            "erdos_renyi needs 0 <= p <= 1, got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// Outcome of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub n: usize,
    pub m: usize,
    pub simple: bool,
    pub connected: bool,
    pub components: usize,
    pub isolated_vertices: Vec<usize>,
    /// Overall verdict given the `require_connected` flag.
    pub ok: bool,
    pub messages: Vec<String>,
}

pub fn validate(graph: &Graph, require_connected: bool) -> Diagnostics {
    let mut messages = Vec::new();
    // Re-check simplicity even though constructors enforce it.
    let simple = graph.edges.windows(2).all(|w| w[0] < w[1])
        && graph.edges.iter().all(|&(u, v)| u < v && v < graph.n);
    if !simple {
        messages.push("edge set is not canonical/simple".to_string());
    }
    let components = graph.component_count();
    let connected = graph.is_connected();
    if !connected {
        messages.push(format!("graph is not connected ({components} components)"));
    }
    let isolated_vertices: Vec<usize> = graph
        .degree_sequence()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(v, _)| v)
        .collect();
    if !isolated_vertices.is_empty() {
        messages.push(format!("isolated vertices: {isolated_vertices:?}"));
    }
    Diagnostics {
        n: graph.n,
        m: graph.m(),
        simple,
        connected,
        components,
        isolated_vertices,
        ok: simple && (connected || !require_connected),
        messages,
    }
}
