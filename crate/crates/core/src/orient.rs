//! Orientations, the skew-adjacency matrix, cycle parity, switching, and the
//! canonical plus/minus orientations of unicyclic graphs.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{girth, is_unicyclic, Edge, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientError {
    #[error("edge {0}-{1} is not in the base graph")]
    MissingEdge(usize, usize),
    #[error("edge {0}-{1} assigned more than one direction")]
    ConflictingDirection(usize, usize),
    #[error("{0} of {1} edges left undirected")]
    UndirectedEdges(usize, usize),
    #[error("vertex list is not a cycle of the base graph")]
    NotACycle,
    #[error("cycle has odd length {0}; parity is defined for even cycles only")]
    OddCycle(usize),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("orientations have different base graphs")]
    DifferentBase,
}

/// Which of the two canonical orientations of a unicyclic graph.
///
/// `Minus` directs every cycle edge along one traversal; `Plus` reverses
/// exactly one cycle arc. For even girth `Minus` leaves the cycle evenly
/// oriented and `Plus` oddly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrientationSign {
    Plus,
    Minus,
}

impl fmt::Display for OrientationSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientationSign::Plus => write!(f, "plus"),
            OrientationSign::Minus => write!(f, "minus"),
        }
    }
}

/// A graph together with one direction per edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    base: Graph,
    /// `forward[i]` means edge `i` is directed from its smaller endpoint.
    forward: Vec<bool>,
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs={:?})", self.base.n(), self.arcs())
    }
}

impl OrientedGraph {
    /// Pairs every base edge with the arc given as `(tail, head)`.
    pub fn new(base: Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientError> {
        let mut forward: Vec<Option<bool>> = vec![None; base.edge_count()];
        for &(tail, head) in arcs {
            let idx = base
                .edges()
                .binary_search(&Edge::new(tail, head))
                .map_err(|_| OrientError::MissingEdge(tail, head))?;
            let fwd = base.edges()[idx].endpoints().0 == tail;
            match forward[idx] {
                None => forward[idx] = Some(fwd),
                Some(_) => return Err(OrientError::ConflictingDirection(tail, head)),
            }
        }
        let missing = forward.iter().filter(|d| d.is_none()).count();
        if missing > 0 {
            return Err(OrientError::UndirectedEdges(missing, base.edge_count()));
        }
        Ok(OrientedGraph {
            base,
            forward: forward.into_iter().map(|d| d.unwrap()).collect(),
        })
    }

    /// Directs every edge from its smaller endpoint.
    pub fn lexicographic(base: Graph) -> Self {
        let forward = vec![true; base.edge_count()];
        OrientedGraph { base, forward }
    }

    /// Directs edge `i` from its smaller endpoint iff `forward[i]`.
    pub fn from_forward(base: Graph, forward: Vec<bool>) -> Self {
        assert_eq!(base.edge_count(), forward.len());
        OrientedGraph { base, forward }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Arcs as `(tail, head)`, in base edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(e, &fwd)| {
                let (u, v) = e.endpoints();
                if fwd {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect()
    }

    /// `+1` if the arc `a -> b` exists, `-1` for `b -> a`, `0` for no edge.
    pub fn arc_sign(&self, a: usize, b: usize) -> i8 {
        match self.base.edges().binary_search(&Edge::new(a, b)) {
            Err(_) => 0,
            Ok(idx) => {
                let (u, _) = self.base.edges()[idx].endpoints();
                let tail_is_a = (u == a) == self.forward[idx];
                if tail_is_a {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn skew_matrix(&self) -> SkewMatrix {
        let n = self.base.n();
        let mut entries = vec![0i8; n * n];
        for (tail, head) in self.arcs() {
            entries[tail * n + head] = 1;
            entries[head * n + tail] = -1;
        }
        SkewMatrix { n, entries }
    }

    /// Every arc reversed.
    pub fn reversed(&self) -> Self {
        OrientedGraph {
            base: self.base.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    /// Same orientation with one edge deleted.
    pub fn without_edge(&self, a: usize, b: usize) -> OrientedGraph {
        let e = Edge::new(a, b);
        let mut forward = Vec::with_capacity(self.forward.len());
        for (f, &fwd) in self.base.edges().iter().zip(&self.forward) {
            if *f != e {
                forward.push(fwd);
            }
        }
        OrientedGraph {
            base: self.base.without_edge(a, b),
            forward,
        }
    }

    /// Induced orientation on the complement of `removed` (relabeled).
    pub fn without_vertices(&self, removed: &[usize]) -> OrientedGraph {
        let mut keep = vec![true; self.base.n()];
        for &v in removed {
            if v < self.base.n() {
                keep[v] = false;
            }
        }
        let mut forward = Vec::new();
        for (e, &fwd) in self.base.edges().iter().zip(&self.forward) {
            let (u, v) = e.endpoints();
            if keep[u] && keep[v] {
                forward.push(fwd);
            }
        }
        OrientedGraph {
            base: self.base.without_vertices(removed),
            forward,
        }
    }
}

/// Dense skew-adjacency matrix with entries in `{-1, 0, +1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SkewMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// Entries widened to `i64`, row-major.
    pub fn to_i64(&self) -> Vec<i64> {
        self.entries.iter().map(|&x| x as i64).collect()
    }

    /// `S Sᵀ = -S²`, a symmetric positive-semidefinite integer matrix whose
    /// eigenvalues are the squared magnitudes of the skew spectrum.
    pub fn gram(&self) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = 0i64;
                for k in 0..n {
                    acc += (self.entries[i * n + k] as i64) * (self.entries[j * n + k] as i64);
                }
                out[i * n + j] = acc;
                out[j * n + i] = acc;
            }
        }
        out
    }
}

/// Whether an even cycle has an even or odd number of arcs agreeing with a
/// fixed traversal. Even length makes the answer independent of the direction
/// and starting point of the traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleParity {
    Evenly,
    Oddly,
}

/// Classifies an even cycle, given as a vertex traversal, relative to the
/// orientation. Rejects odd cycles and vertex lists that are not cycles.
pub fn cycle_parity(og: &OrientedGraph, cycle: &[usize]) -> Result<CycleParity, OrientError> {
    let len = cycle.len();
    if len < 3 {
        return Err(OrientError::NotACycle);
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|&v| v < og.n() && seen.insert(v)) {
        return Err(OrientError::NotACycle);
    }
    if len % 2 != 0 {
        return Err(OrientError::OddCycle(len));
    }
    let mut agreeing = 0usize;
    for i in 0..len {
        let a = cycle[i];
        let b = cycle[(i + 1) % len];
        match og.arc_sign(a, b) {
            0 => return Err(OrientError::NotACycle),
            1 => agreeing += 1,
            _ => {}
        }
    }
    if agreeing % 2 == 0 {
        Ok(CycleParity::Evenly)
    } else {
        Ok(CycleParity::Oddly)
    }
}

/// The unique cycle of a unicyclic graph, traversed from its minimum vertex
/// toward the smaller-indexed of that vertex's two cycle neighbors.
pub fn unique_cycle(g: &Graph) -> Result<Vec<usize>, OrientError> {
    if !is_unicyclic(g) {
        return Err(OrientError::NotUnicyclic);
    }
    // strip leaves until only the cycle remains
    let adj = g.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut alive = vec![true; g.n()];
    let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let start = (0..g.n()).find(|&v| alive[v]).ok_or(OrientError::NotUnicyclic)?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[start]
        .iter()
        .find(|&&w| alive[w])
        .ok_or(OrientError::NotUnicyclic)?;
    while cur != start {
        cycle.push(cur);
        let next = *adj[cur]
            .iter()
            .find(|&&w| alive[w] && w != prev)
            .ok_or(OrientError::NotUnicyclic)?;
        prev = cur;
        cur = next;
    }
    Ok(cycle)
}

/// Canonical orientation of a unicyclic graph. `Minus` sends every cycle arc
/// along [`unique_cycle`]'s traversal; `Plus` reverses the traversal's first
/// arc. Edges off the cycle point away from it, in breadth-first order; by the
/// switching reduction this choice does not affect the spectrum.
pub fn orient_unicyclic(g: &Graph, sign: OrientationSign) -> Result<OrientedGraph, OrientError> {
    let cycle = unique_cycle(g)?;
    let len = cycle.len();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count());
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        if i == 0 && sign == OrientationSign::Plus {
            arcs.push((b, a));
        } else {
            arcs.push((a, b));
        }
    }
    let adj = g.adjacency();
    let mut on_cycle = vec![false; g.n()];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    let mut visited = on_cycle.clone();
    let mut queue: VecDeque<usize> = cycle.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                arcs.push((v, w));
                queue.push_back(w);
            }
        }
    }
    OrientedGraph::new(g.clone(), &arcs)
}

/// Reverses every arc with exactly one endpoint in `w`. Vertices outside the
/// graph are inert, so any vertex list is acceptable.
pub fn switch(og: &OrientedGraph, w: &[usize]) -> OrientedGraph {
    let n = og.base.n();
    let mut in_w = vec![false; n];
    for &v in w {
        if v < n {
            in_w[v] = true;
        }
    }
    let forward = og
        .base
        .edges()
        .iter()
        .zip(&og.forward)
        .map(|(e, &fwd)| {
            let (u, v) = e.endpoints();
            if in_w[u] != in_w[v] {
                !fwd
            } else {
                fwd
            }
        })
        .collect();
    OrientedGraph {
        base: og.base.clone(),
        forward,
    }
}

/// Whether some switching set transforms one orientation into the other.
///
/// Decided constructively: propagate vertex signs along a spanning forest so
/// that tree arcs agree, then check that every co-tree arc agrees as well.
pub fn switching_equivalent(og1: &OrientedGraph, og2: &OrientedGraph) -> Result<bool, OrientError> {
    if og1.base != og2.base {
        return Err(OrientError::DifferentBase);
    }
    let n = og1.base.n();
    let adj = og1.base.adjacency();
    // flip[e] = true when the arc directions differ; a valid assignment needs
    // in_w[u] != in_w[v] exactly on flipped edges
    let mut in_w: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if in_w[root].is_some() {
            continue;
        }
        in_w[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let side = in_w[u].expect("visited");
            for &v in &adj[u] {
                let flipped = og1.arc_sign(u, v) != og2.arc_sign(u, v);
                let want = side != flipped;
                match in_w[v] {
                    None => {
                        in_w[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(have) => {
                        if have != want {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
