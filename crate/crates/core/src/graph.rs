//! Undirected simple graphs, the named unicyclic families, matching counts,
//! girth, and enumeration of evenly linear subgraphs.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::Coeff;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// Undirected edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint different from `w`; panics if `w` is not an endpoint.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            debug_assert_eq!(self.v, w);
            self.u
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; edges are kept sorted and deduplicated, so
/// equal graphs compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut es: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, order: n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, order: n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            es.push(Edge::new(a, b));
        }
        es.sort();
        for w in es.windows(2) {
            if w[0] == w[1] {
                let (u, v) = w[0].endpoints();
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(Graph { n, edges: es })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&Edge::new(a, b)).is_ok()
    }

    /// Adjacency lists, each sorted increasingly.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            let (u, v) = e.endpoints();
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Sorted degree multiset.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            let (u, v) = e.endpoints();
            d[u] += 1;
            d[v] += 1;
        }
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Same vertex set, one edge removed. No-op if the edge is absent.
    pub fn without_edge(&self, a: usize, b: usize) -> Graph {
        let e = Edge::new(a, b);
        Graph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|f| *f != e).collect(),
        }
    }

    /// Induced subgraph on the complement of `removed`, relabeled
    /// order-preservingly to `0..n-|removed|`.
    pub fn without_vertices(&self, removed: &[usize]) -> Graph {
        let mut keep = vec![true; self.n];
        for &v in removed {
            if v < self.n {
                keep[v] = false;
            }
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.u] && keep[e.v])
            .map(|e| Edge {
                u: relabel[e.u],
                v: relabel[e.v],
            })
            .collect();
        Graph { n: next, edges }
    }
}

/// The named families: path, cycle, and the two standard unicyclic shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Path on `n` vertices.
    Path,
    /// Cycle on `n` vertices.
    Cycle,
    /// Cycle of length `l` joined to a terminal vertex of a path on `n - l` vertices.
    Pnl,
    /// Cycle of length `l` with `n - l` pendant vertices on one cycle vertex.
    Snl,
}

/// Builds a named family with deterministic labels: cycle vertices `0..l`,
/// then attachments in order. The path and the pendants attach at vertex 0.
pub fn make_family(kind: FamilyKind, n: usize, l: Option<usize>) -> Result<Graph, GraphError> {
    match kind {
        FamilyKind::Path => {
            if n < 1 {
                return Err(GraphError::InvalidFamily("path requires n >= 1".into()));
            }
            if l.is_some() {
                return Err(GraphError::InvalidFamily("path takes no girth parameter".into()));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilyKind::Cycle => {
            if n < 3 {
                return Err(GraphError::InvalidFamily("cycle requires n >= 3".into()));
            }
            if l.is_some() && l != Some(n) {
                return Err(GraphError::InvalidFamily(
                    "cycle girth, when given, must equal n".into(),
                ));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilyKind::Pnl | FamilyKind::Snl => {
            let l = l.ok_or_else(|| GraphError::InvalidFamily("family requires a girth".into()))?;
            if l < 3 || l > n {
                return Err(GraphError::InvalidFamily(format!(
                    "girth {l} out of range 3..={n}"
                )));
            }
            let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
            match kind {
                FamilyKind::Pnl => {
                    if n > l {
                        edges.push((0, l));
                        for j in l..n - 1 {
                            edges.push((j, j + 1));
                        }
                    }
                }
                FamilyKind::Snl => {
                    for j in l..n {
                        edges.push((0, j));
                    }
                }
                _ => unreachable!(),
            }
            Graph::new(n, edges)
        }
    }
}

/// Numbers of k-matchings, indexed by `k = 0..=n/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCounts {
    counts: Vec<Coeff>,
}

impl MatchingCounts {
    /// `m(G, k)`; zero beyond the stored range.
    pub fn get(&self, k: usize) -> Coeff {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[Coeff] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

fn checked_add(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("matching count overflow")
}

fn matching_vec(edges: &[Edge], memo: &mut HashMap<Vec<Edge>, Vec<Coeff>>) -> Vec<Coeff> {
    if edges.is_empty() {
        return vec![1];
    }
    if let Some(c) = memo.get(edges) {
        return c.clone();
    }
    let e = edges[0];
    let (u, v) = e.endpoints();
    let rest: Vec<Edge> = edges[1..].to_vec();
    let with_e: Vec<Edge> = rest
        .iter()
        .copied()
        .filter(|f| !f.touches(u) && !f.touches(v))
        .collect();
    let skip = matching_vec(&rest, memo);
    let take = matching_vec(&with_e, memo);
    let mut out = vec![0; skip.len().max(take.len() + 1)];
    for (k, &c) in skip.iter().enumerate() {
        out[k] = checked_add(out[k], c);
    }
    for (k, &c) in take.iter().enumerate() {
        out[k + 1] = checked_add(out[k + 1], c);
    }
    memo.insert(edges.to_vec(), out.clone());
    out
}

/// Counts k-matchings by the edge-deletion recurrence
/// `m(G,k) = m(G-e,k) + m(G-u-v,k-1)`, memoized on the residual edge list.
pub fn matching_counts(g: &Graph) -> MatchingCounts {
    let mut memo = HashMap::new();
    let mut counts = matching_vec(g.edges(), &mut memo);
    let want = g.n() / 2 + 1;
    debug_assert!(counts.len() <= want, "matching exceeds n/2");
    counts.resize(want, 0);
    MatchingCounts { counts }
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let adj = g.adjacency();
    let mut best: Option<usize> = None;
    for root in 0..g.n() {
        // BFS from root; a non-tree edge at depths d(u), d(w) closes a cycle
        // of length d(u) + d(w) + 1. Minimizing over all roots yields the girth.
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// A connected graph with exactly as many edges as vertices.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.n() > 0 && g.edge_count() == g.n() && g.is_connected()
}

/// Vertex-disjoint union of single edges and cycles. Evenly linear when every
/// cycle has even length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubgraph {
    /// The isolated-edge components.
    pub matching_edges: Vec<Edge>,
    /// Cycle components, each listed from its minimum vertex with the
    /// smaller-indexed neighbor second.
    pub cycles: Vec<Vec<usize>>,
    /// Total number of covered vertices.
    pub vertex_count: usize,
}

struct LinearEnum<'a> {
    adj: Vec<Vec<usize>>,
    used: Vec<bool>,
    edges: Vec<Edge>,
    cycles: Vec<Vec<usize>>,
    target: usize,
    out: &'a mut Vec<LinearSubgraph>,
}

impl LinearEnum<'_> {
    fn emit(&mut self) {
        self.out.push(LinearSubgraph {
            matching_edges: self.edges.clone(),
            cycles: self.cycles.clone(),
            vertex_count: self.target,
        });
    }

    /// Components are chosen in increasing order of their minimum vertex,
    /// which is `>= from` here; `remaining` vertices are still to be covered.
    fn rec(&mut self, from: usize, remaining: usize) {
        if remaining == 0 {
            self.emit();
            return;
        }
        let n = self.used.len();
        let Some(v) = (from..n).find(|&v| !self.used[v]) else {
            return;
        };
        // v stays uncovered
        self.rec(v + 1, remaining);
        self.used[v] = true;
        // v matched by an edge; the partner is larger, else the component
        // minimum would have been settled earlier
        if remaining >= 2 {
            let nbrs: Vec<usize> = self.adj[v].iter().copied().filter(|&u| u > v && !self.used[u]).collect();
            for u in nbrs {
                self.used[u] = true;
                self.edges.push(Edge::new(v, u));
                self.rec(v + 1, remaining - 2);
                self.edges.pop();
                self.used[u] = false;
            }
        }
        // v is the minimum vertex of an even cycle
        if remaining >= 4 {
            let mut path = vec![v];
            self.grow_cycle(v, &mut path, remaining);
        }
        self.used[v] = false;
    }

    /// Extends a simple path rooted at `anchor` through unused vertices larger
    /// than the anchor; closing back at even length yields a cycle. Requiring
    /// `path[1] < path.last()` keeps one traversal direction per cycle.
    fn grow_cycle(&mut self, anchor: usize, path: &mut Vec<usize>, remaining: usize) {
        let last = *path.last().expect("path non-empty");
        let candidates: Vec<usize> = self.adj[last]
            .iter()
            .copied()
            .filter(|&u| u > anchor && !self.used[u])
            .collect();
        for u in candidates {
            path.push(u);
            self.used[u] = true;
            let len = path.len();
            if len >= 4 && len % 2 == 0 && path[1] < u && self.adj[u].contains(&anchor) {
                self.cycles.push(path.clone());
                self.rec(anchor + 1, remaining - len);
                self.cycles.pop();
            }
            if len < remaining {
                self.grow_cycle(anchor, path, remaining);
            }
            self.used[u] = false;
            path.pop();
        }
    }
}

/// All evenly linear subgraphs covering exactly `i` vertices. Empty for odd
/// `i`; for `i = 0` the single empty subgraph.
pub fn enumerate_evenly_linear(g: &Graph, i: usize) -> Vec<LinearSubgraph> {
    let mut out = Vec::new();
    if i % 2 != 0 || i > g.n() {
        return out;
    }
    let mut state = LinearEnum {
        adj: g.adjacency(),
        used: vec![false; g.n()],
        edges: Vec::new(),
        cycles: Vec::new(),
        target: i,
        out: &mut out,
    };
    state.rec(0, i);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(kind: FamilyKind, n: usize, l: Option<usize>) -> Graph {
        make_family(kind, n, l).expect("valid family")
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn family_shapes() {
        let c4 = family(FamilyKind::Cycle, 4, None);
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(girth(&c4), Some(4));

        let s64 = family(FamilyKind::Snl, 6, Some(4));
        assert_eq!(s64.degree_sequence(), vec![1, 1, 2, 2, 2, 4]);

        let p64 = family(FamilyKind::Pnl, 6, Some(4));
        assert_eq!(p64.degree_sequence(), vec![1, 2, 2, 2, 2, 3]);

        // degenerate attachments collapse onto the cycle
        assert_eq!(family(FamilyKind::Pnl, 5, Some(5)), family(FamilyKind::Cycle, 5, None));
        assert_eq!(family(FamilyKind::Snl, 5, Some(5)), family(FamilyKind::Cycle, 5, None));
    }

    #[test]
    fn family_rejects_bad_parameters() {
        assert!(make_family(FamilyKind::Cycle, 2, None).is_err());
        assert!(make_family(FamilyKind::Snl, 4, Some(5)).is_err());
        assert!(make_family(FamilyKind::Snl, 4, Some(2)).is_err());
        assert!(make_family(FamilyKind::Snl, 4, None).is_err());
        assert!(make_family(FamilyKind::Path, 0, None).is_err());
        assert!(make_family(FamilyKind::Path, 4, Some(3)).is_err());
    }

    #[test]
    fn matching_counts_examples() {
        let p5 = family(FamilyKind::Path, 5, None);
        assert_eq!(matching_counts(&p5).as_slice(), &[1, 4, 3]);

        let c4 = family(FamilyKind::Cycle, 4, None);
        assert_eq!(matching_counts(&c4).as_slice(), &[1, 4, 2]);

        let s53 = family(FamilyKind::Snl, 5, Some(3));
        assert_eq!(matching_counts(&s53).as_slice(), &[1, 5, 2]);

        assert_eq!(matching_counts(&Graph::empty(0)).as_slice(), &[1]);
        assert_eq!(matching_counts(&Graph::empty(5)).as_slice(), &[1, 0, 0]);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&family(FamilyKind::Cycle, 7, None)), Some(7));
        assert_eq!(girth(&family(FamilyKind::Path, 6, None)), None);
        assert_eq!(girth(&family(FamilyKind::Pnl, 7, Some(5))), Some(5));
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(girth(&k4), Some(3));
    }

    #[test]
    fn unicyclic_examples() {
        assert!(is_unicyclic(&family(FamilyKind::Snl, 6, Some(4))));
        assert!(!is_unicyclic(&family(FamilyKind::Path, 6, None)));
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_unicyclic(&two_triangles));
    }

    #[test]
    fn evenly_linear_examples() {
        let c4 = family(FamilyKind::Cycle, 4, None);
        let got = enumerate_evenly_linear(&c4, 4);
        assert_eq!(got.len(), 3);
        assert_eq!(got.iter().filter(|l| l.cycles.is_empty()).count(), 2);
        assert_eq!(got.iter().filter(|l| l.cycles.len() == 1).count(), 1);

        let c5 = family(FamilyKind::Cycle, 5, None);
        let got = enumerate_evenly_linear(&c5, 4);
        assert_eq!(got.len(), 5);
        assert!(got.iter().all(|l| l.cycles.is_empty()));

        assert!(enumerate_evenly_linear(&c5, 3).is_empty());
        assert_eq!(enumerate_evenly_linear(&c5, 0).len(), 1);
    }

    #[test]
    fn evenly_linear_components_disjoint() {
        let g = family(FamilyKind::Pnl, 8, Some(4));
        for i in (0..=8).step_by(2) {
            for sub in enumerate_evenly_linear(&g, i) {
                let mut seen = vec![false; g.n()];
                let mut count = 0;
                for e in &sub.matching_edges {
                    let (u, v) = e.endpoints();
                    assert!(!seen[u] && !seen[v]);
                    seen[u] = true;
                    seen[v] = true;
                    count += 2;
                }
                for c in &sub.cycles {
                    assert!(c.len() >= 4 && c.len() % 2 == 0);
                    for &v in c {
                        assert!(!seen[v]);
                        seen[v] = true;
                    }
                    count += c.len();
                }
                assert_eq!(count, sub.vertex_count);
                assert_eq!(count, i);
            }
        }
    }

    #[test]
    fn without_vertices_relabels() {
        let g = family(FamilyKind::Snl, 6, Some(4));
        let h = g.without_vertices(&[0, 1, 2, 3]);
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 0);
        let p4 = family(FamilyKind::Path, 4, None);
        let h = p4.without_vertices(&[0]);
        assert_eq!(h, family(FamilyKind::Path, 3, None));
    }
}
