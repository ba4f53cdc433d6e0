//! Clutters: a ground set plus an antichain of subsets.

use std::fmt::Write as _;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct Clutter {
    ground: usize,
    edges: Vec<VertexSet>,
    /// Set when the edges are exactly the maximal independent sets of this
    /// graph, which enables the domination test for recognizing sets.
    origin: Option<Graph>,
}

impl Clutter {
    /// Validates membership, distinctness and the antichain property, then
    /// sorts edges lexicographically.
    pub fn new(ground: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if ground > MAX_VERTICES {
            return Err(Error::VertexCap { n: ground, cap: MAX_VERTICES });
        }
        let all = VertexSet::full(ground);
        for e in &edges {
            if let Some(v) = e.difference(all).min() {
                return Err(Error::VertexOutOfRange { vertex: v, n: ground });
            }
        }
        for i in 0..edges.len() {
            for j in 0..edges.len() {
                if i == j {
                    continue;
                }
                if edges[i] == edges[j] {
                    return Err(Error::DuplicateEdge { first: i.min(j), second: i.max(j), set: edges[i] });
                }
                if edges[i].is_subset(edges[j]) {
                    return Err(Error::Antichain {
                        contained: i,
                        container: j,
                        contained_set: edges[i],
                        container_set: edges[j],
                    });
                }
            }
        }
        Ok(Self::from_sorted_unchecked(ground, sort_edges(edges), None))
    }

    pub fn from_lists(ground: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            for &v in e {
                if v >= ground || v >= MAX_VERTICES {
                    return Err(Error::VertexOutOfRange { vertex: v, n: ground });
                }
            }
            sets.push(e.iter().copied().collect());
        }
        Clutter::new(ground, sets)
    }

    pub(crate) fn from_sorted_unchecked(ground: usize, edges: Vec<VertexSet>, origin: Option<Graph>) -> Self {
        Clutter { ground, edges, origin }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<VertexSet> {
        self.edges.get(index).copied().ok_or(Error::EdgeIndex { index, count: self.edges.len() })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn origin(&self) -> Option<&Graph> {
        self.origin.as_ref()
    }

    pub fn index_of(&self, edge: VertexSet) -> Option<usize> {
        self.edges.binary_search_by(|e| e.lex_cmp(edge)).ok()
    }

    /// The same edges without the graph origin, forcing containment tests.
    pub fn forget_origin(&self) -> Clutter {
        Clutter { origin: None, ..self.clone() }
    }

    /// Removes one edge; the result is still an antichain but no longer the
    /// full clutter of any graph.
    pub fn without_edge(&self, index: usize) -> Result<Clutter> {
        self.edge(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Clutter::from_sorted_unchecked(self.ground, edges, None))
    }

    pub fn union(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e))
    }

    pub fn intersection(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::full(self.ground), |a, &e| a.intersection(e))
    }

    /// Text form: first line the ground size, then one edge per line as
    /// sorted space-separated indices (an empty line is the empty edge).
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.ground);
        for e in &self.edges {
            let items: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", items.join(" "));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Clutter> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (line, header) = loop {
            match lines.next() {
                Some((_, l)) if l.is_empty() || l.starts_with('#') => continue,
                Some(x) => break x,
                None => return Err(Error::Parse { line: 1, message: "missing ground-set size".into() }),
            }
        };
        let ground: usize = header
            .parse()
            .map_err(|_| Error::Parse { line, message: format!("expected a ground-set size, got {header:?}") })?;
        let mut edges = Vec::new();
        let mut blank_seen = false;
        for (line, l) in lines {
            if l.starts_with('#') {
                continue;
            }
            if l.is_empty() {
                blank_seen = true;
                continue;
            }
            let mut e = Vec::new();
            for tok in l.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse { line, message: format!("expected a vertex index, got {tok:?}") })?;
                if v >= ground {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex {v} outside ground set of size {ground}"),
                    });
                }
                e.push(v);
            }
            edges.push(e);
        }
        // The empty edge can only appear alone, as a single blank line.
        if edges.is_empty() && blank_seen {
            edges.push(Vec::new());
        }
        Clutter::from_lists(ground, &edges)
    }
}

// Equality is on the set system alone; the origin graph is a cache.
impl PartialEq for Clutter {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.edges == other.edges
    }
}

impl Eq for Clutter {}

/// Canonical lexicographic order.
pub(crate) fn sort_edges(mut edges: Vec<VertexSet>) -> Vec<VertexSet> {
    edges.sort_by(|a, b| a.lex_cmp(*b));
    edges
}

/// Graph on the ground set with `u ~ v` exactly when no edge contains both.
pub fn derived_graph(l: &Clutter) -> Graph {
    let n = l.ground_size();
    let mut together = vec![VertexSet::EMPTY; n];
    for &e in l.edges() {
        for v in e {
            together[v] = together[v].union(e);
        }
    }
    let all = VertexSet::full(n);
    let adj = (0..n).map(|v| all.difference(together[v]).without(v)).collect();
    Graph::from_adjacency(adj).expect("derived graph is symmetric and loop-free")
}
