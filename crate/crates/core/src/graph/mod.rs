//! Undirected simple graphs on at most [`MAX_VERTICES`] vertices.

mod graph6;

pub use graph6::{encode_graph6, parse_graph6};

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Adjacency stored as one neighbor bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named generators with a fixed vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    Complete(usize),
    /// Side one is `0..m`, side two is `m..m+n`.
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    /// Center `0`, leaves `1..=k`.
    Star(usize),
    FromEdgeList(usize, Vec<(usize, usize)>),
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexCap { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Rejects loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, reason: "endpoint out of range" });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "loop" });
            }
            if g.adj[u].contains(v) {
                return Err(Error::InvalidEdge { u, v, reason: "duplicate edge" });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from neighbor sets, which must already be symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::VertexCap { n, cap: MAX_VERTICES });
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                let u = nb.difference(all).min().unwrap_or(0);
                return Err(Error::InvalidEdge { u: v, v: u, reason: "endpoint out of range" });
            }
            if nb.contains(v) {
                return Err(Error::InvalidEdge { u: v, v, reason: "loop" });
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidEdge { u: v, v: u, reason: "asymmetric adjacency" });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn generate(kind: &GraphKind) -> Result<Self> {
        match *kind {
            GraphKind::Complete(n) => {
                let all = VertexSet::full(n);
                let mut g = Graph::empty(n)?;
                for v in 0..n {
                    g.adj[v] = all.without(v);
                }
                Ok(g)
            }
            GraphKind::CompleteBipartite(a, b) => {
                let mut g = Graph::empty(a + b)?;
                let left = VertexSet::full(a);
                let right = VertexSet::full(a + b).difference(left);
                for v in 0..a {
                    g.adj[v] = right;
                }
                for v in a..a + b {
                    g.adj[v] = left;
                }
                Ok(g)
            }
            GraphKind::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameters(format!("a cycle needs at least 3 vertices, got {n}")));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            GraphKind::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            GraphKind::Star(k) => {
                let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
                Graph::from_edges(k + 1, &edges)
            }
            GraphKind::FromEdgeList(n, ref edges) => Graph::from_edges(n, edges),
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::generate(&GraphKind::Complete(n)).expect("complete graph within cap")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::generate(&GraphKind::CompleteBipartite(a, b)).expect("K_ab within cap")
    }

    pub fn cycle(n: usize) -> Self {
        Graph::generate(&GraphKind::Cycle(n)).expect("cycle with n >= 3")
    }

    pub fn path(n: usize) -> Self {
        Graph::generate(&GraphKind::Path(n)).expect("path within cap")
    }

    pub fn star(leaves: usize) -> Self {
        Graph::generate(&GraphKind::Star(leaves)).expect("star within cap")
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].above(u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Union of the neighborhoods of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// Some adjacent pair inside `set`, if any.
    pub fn conflicting_pair(&self, set: VertexSet) -> Option<(usize, usize)> {
        set.iter().find_map(|v| self.adj[v].intersection(set).min().map(|u| (v.min(u), v.max(u))))
    }

    pub fn is_maximal_independent(&self, set: VertexSet) -> bool {
        self.is_independent(set) && self.vertices().difference(set).iter().all(|v| self.adj[v].intersects(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph { n: self.n, adj: (0..self.n).map(|v| all.difference(self.adj[v]).without(v)).collect() }
    }

    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts = set.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts.iter().map(|&v| self.adj[v].intersection(set).iter().map(|u| pos[u]).collect()).collect();
        Graph { n: verts.len(), adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph { n: self.n, adj }
    }

    /// Graph on `n + 1` vertices with the new vertex `n` joined to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let mut g = self.clone();
        let v = g.n;
        if v + 1 > MAX_VERTICES {
            return Err(Error::VertexCap { n: v + 1, cap: MAX_VERTICES });
        }
        g.n += 1;
        g.adj.push(nbrs);
        for u in nbrs {
            g.adj[u].insert(v);
        }
        Ok(g)
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn component_of(&self, s: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            frontier = self.neighborhood(frontier).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// `false` for the empty graph on zero vertices.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0) == self.vertices()
    }

    /// A proper 2-coloring as the set of color-0 vertices, if one exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for u in self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some((0..self.n).filter(|&v| side[v] == Some(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn regularity(&self) -> Option<usize> {
        let d = self.min_degree();
        (self.n > 0 && d == self.max_degree()).then_some(d)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regularity() == Some(2) && self.is_connected()
    }

    /// `K_{a,a}` for some `a >= 1`.
    pub fn is_balanced_complete_bipartite(&self) -> bool {
        if self.n < 2 || self.n % 2 == 1 || !self.is_connected() {
            return false;
        }
        let a = self.n / 2;
        self.regularity() == Some(a) && self.bipartition().is_some_and(|s| s.len() == a)
    }

    /// `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        (0..self.n).map(|s| self.distances_from(s).into_iter().map(|d| d.unwrap()).max().unwrap_or(0)).max()
    }

    pub fn stats(&self) -> GraphStats {
        graph_stats(self)
    }

    /// Line graph plus the map from its vertices to edges of `self`.
    pub fn line_graph(&self) -> (Graph, EdgeIndexMap) {
        line_graph(self)
    }

    /// Edge-list text: first line `n`, then one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses edge-list text; blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing vertex count".into() })?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse { line, message: format!("expected a vertex count, got {header:?}") })?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let nums: Vec<&str> = l.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse { line, message: format!("expected a vertex index, got {s:?}") })
            };
            if nums.len() != 2 {
                return Err(Error::Parse { line, message: format!("expected `u v`, got {l:?}") });
            }
            edges.push((parse(nums[0])?, parse(nums[1])?));
        }
        Graph::from_edges(n, &edges)
    }
}

/// `{"n": .., "edges": [[u, v], ..]}`.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr { n: self.n, edges: self.edges() }.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_regular: bool,
    pub regularity: Option<usize>,
    pub is_tree: bool,
    pub diameter: Option<usize>,
    pub is_complete: bool,
    pub is_balanced_complete_bipartite: bool,
    pub is_cycle: bool,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let regularity = g.regularity();
    GraphStats {
        n: g.n(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        is_connected: g.is_connected(),
        is_bipartite: g.is_bipartite(),
        is_regular: regularity.is_some(),
        regularity,
        is_tree: g.is_tree(),
        diameter: g.diameter(),
        is_complete: g.is_complete(),
        is_balanced_complete_bipartite: g.is_balanced_complete_bipartite(),
        is_cycle: g.is_cycle(),
    }
}

/// Original edges `(u, v)`, `u < v`, in lexicographic order; line-graph
/// vertex `i` is `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeIndexMap {
    edges: Vec<(usize, usize)>,
}

impl EdgeIndexMap {
    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The original edges named by a set of line-graph vertices.
    pub fn edges_of(&self, set: VertexSet) -> Vec<(usize, usize)> {
        set.iter().map(|i| self.edges[i]).collect()
    }

    /// Endpoints covered by a set of line-graph vertices.
    pub fn covered(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, i| {
            let (u, v) = self.edges[i];
            acc.with(u).with(v)
        })
    }
}

/// Panics if `g` has more than [`MAX_VERTICES`] edges; callers that accept
/// arbitrary input should go through [`try_line_graph`].
pub fn line_graph(g: &Graph) -> (Graph, EdgeIndexMap) {
    try_line_graph(g).expect("line graph exceeds the vertex cap")
}

pub fn try_line_graph(g: &Graph) -> Result<(Graph, EdgeIndexMap)> {
    let edges = g.edges();
    let mut lg = Graph::empty(edges.len())?;
    // incident[v] = line-graph vertices whose edge touches v
    let mut incident = vec![VertexSet::EMPTY; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].insert(i);
        incident[v].insert(i);
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        lg.adj[i] = incident[u].union(incident[v]).without(i);
    }
    Ok((lg, EdgeIndexMap { edges }))
}
