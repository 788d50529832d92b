//! Simple labeled graphs on `1..=n` and the graph predicates used by the
//! characterizations (forest, complete, components, maximum subgraph density).

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest `n` accepted by [`enumerate_graphs`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

/// Largest `n` for which [`SimpleGraph::max_subgraph_density`] runs its
/// exhaustive vertex-subset search.
pub const DENSITY_LIMIT: usize = 24;

/// A simple undirected graph on the vertex set `{1, ..., n}`.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically,
/// so two graphs with the same edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<SimpleGraph> for GraphJson {
    fn from(g: SimpleGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, GraphError> {
        let mut b = Builder::new(raw.n, "\"n\"".into())?;
        for (k, [u, v]) in raw.edges.into_iter().enumerate() {
            b.push(u, v, format!("edges[{k}]"))?;
        }
        Ok(b.finish())
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl Builder {
    fn new(n: usize, at: String) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices { at });
        }
        Ok(Builder {
            n,
            edges: Vec::new(),
            seen: Default::default(),
        })
    }

    fn push(&mut self, u: usize, v: usize, at: String) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange { at, vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { at, vertex: u });
        }
        let e = (u.min(v), u.max(v));
        if !self.seen.insert(e) {
            return Err(GraphError::DuplicateEdge { at, u: e.0, v: e.1 });
        }
        self.edges.push(e);
        Ok(())
    }

    fn finish(mut self) -> SimpleGraph {
        self.edges.sort_unstable();
        SimpleGraph { n: self.n, edges: self.edges }
    }
}

impl SimpleGraph {
    /// Builds a graph from an edge list; endpoints may be given in either order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = Builder::new(n, "n".into())?;
        for (k, (u, v)) in edges.into_iter().enumerate() {
            b.push(u, v, format!("edge {k}"))?;
        }
        Ok(b.finish())
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graphs need at least one vertex");
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        assert!(n >= 1, "graphs need at least one vertex");
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        SimpleGraph { n, edges }
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "graphs need at least one vertex");
        SimpleGraph { n, edges: (1..n).map(|u| (u, u + 1)).collect() }
    }

    /// The cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        edges.sort_unstable();
        SimpleGraph { n, edges }
    }

    /// The star with center `1` and leaves `2..=n`.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "graphs need at least one vertex");
        SimpleGraph { n, edges: (2..=n).map(|v| (1, v)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Vertices not incident to any edge, in increasing order.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut touched = vec![false; self.n + 1];
        for &(u, v) in &self.edges {
            touched[u] = true;
            touched[v] = true;
        }
        (1..=self.n).filter(|&v| !touched[v]).collect()
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n + 1);
        self.edges.iter().all(|&(u, v)| uf.union(u, v))
    }

    /// A connected forest.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_forest()
    }

    /// True iff every pair of distinct vertices is adjacent; `K_1` is complete.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Maximal connected vertex sets, each sorted, blocks ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n + 1);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut block_of_root: Vec<Option<usize>> = vec![None; self.n + 1];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for v in 1..=self.n {
            let r = uf.find(v);
            match block_of_root[r] {
                Some(b) => blocks[b].push(v),
                None => {
                    block_of_root[r] = Some(blocks.len());
                    blocks.push(vec![v]);
                }
            }
        }
        blocks
    }

    /// `max |E(G[W])| / |W|` over nonempty vertex subsets `W`.
    ///
    /// Induced subgraphs suffice since any subgraph on `W` has at most the
    /// induced edge count. Exhaustive over `2^n - 1` subsets.
    pub fn max_subgraph_density(&self) -> Result<Density, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::Edgeless);
        }
        if self.n > DENSITY_LIMIT {
            return Err(GraphError::TooLarge { n: self.n, limit: DENSITY_LIMIT });
        }
        let mut adj = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        let mut best = Density::new(0, 1);
        for w in 1u32..(1u32 << self.n) {
            let mut twice_edges = 0u64;
            let mut rest = w;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                twice_edges += (adj[v] & w).count_ones() as u64;
            }
            let d = Density::new(twice_edges / 2, w.count_ones() as u64);
            if d > best {
                best = d;
            }
        }
        Ok(best)
    }
}

impl fmt::Display for SimpleGraph {
    /// Line-oriented text format: `n m` followed by one `u v` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind { parent: (0..size).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// An edge-to-vertex ratio kept as an exact rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Density(Ratio<u64>);

impl Density {
    pub fn new(edges: u64, vertices: u64) -> Self {
        Density(Ratio::new(edges, vertices))
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom()
    }
}

impl fmt::Display for Density {
    /// Always `p/q`, including integral values (`1/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

/// Parses either the line-oriented text format or the JSON format.
///
/// Text: a header line `n m`, then `m` lines `u v`. Blank lines and lines
/// starting with `#` are skipped. JSON: `{"n": .., "edges": [[u, v], ..]}`.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, GraphError> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()));
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(GraphError::Header {
        line: 1,
        msg: "empty input".into(),
    })?;
    let [n, m] = parse_pair(header).ok_or_else(|| GraphError::Header {
        line: hline,
        msg: format!("expected `n m`, found `{header}`"),
    })?;
    let mut b = Builder::new(n, format!("line {hline}"))?;
    let mut found = 0;
    for (line, body) in lines {
        let [u, v] = parse_pair(body).ok_or_else(|| GraphError::Syntax {
            line,
            msg: format!("expected `u v`, found `{body}`"),
        })?;
        b.push(u, v, format!("line {line}"))?;
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCount { expected: m, found });
    }
    Ok(b.finish())
}

fn parse_pair(s: &str) -> Option<[usize; 2]> {
    let mut it = s.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some([a, b]),
        _ => None,
    }
}

/// All `2^C(n,2)` labeled graphs on `1..=n`, limited to
/// [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumerate_graphs(n: usize) -> Result<GraphEnumerator, GraphError> {
    enumerate_graphs_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_graphs_with_limit(n: usize, limit: usize) -> Result<GraphEnumerator, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices { at: "n".into() });
    }
    // 2^C(n,2) must fit a u64 counter.
    if n > limit || n > 11 {
        return Err(GraphError::TooLarge { n, limit: limit.min(11) });
    }
    let pairs: Vec<_> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok(GraphEnumerator { n, pairs, next: 0, total })
}

/// Iterator over labeled graphs; the `k`-th graph contains the pair
/// `pairs[b]` iff bit `b` of `k` is set, pairs in lexicographic order.
#[derive(Clone, Debug)]
pub struct GraphEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl GraphEnumerator {
    pub fn total(&self) -> u64 {
        self.total
    }

    /// The graph at position `index` of the enumeration order.
    pub fn graph_at(&self, index: u64) -> SimpleGraph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| index >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SimpleGraph { n: self.n, edges }
    }
}

impl Iterator for GraphEnumerator {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        if self.next >= self.total {
            return None;
        }
        let g = self.graph_at(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.total - self.next) as usize;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for GraphEnumerator {}
