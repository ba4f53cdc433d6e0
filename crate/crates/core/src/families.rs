//! Extremal constructions and a search for graphs of prescribed matching
//! complexity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::clutter::Clutter;
use crate::complexity::matching_complexity_value;
use crate::enumerate::maximal_independent_sets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub kind: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub vertices: usize,
    pub expected: Rational,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::VertexCap { n, cap: MAX_VERTICES });
    }
    Ok(())
}

/// Clique `0..n`, apex `n` joined to the clique, and `n - 1` private
/// pendant vertices on every clique vertex.
pub fn main_bound_extremal(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let total = n * n + 1;
    check_size(total)?;
    let mut g = Graph::empty(total)?;
    for q in 0..n {
        for p in q + 1..n {
            g.add_edge(q, p);
        }
        g.add_edge(q, n);
        for i in 0..n - 1 {
            g.add_edge(q, n + 1 + q * (n - 1) + i);
        }
    }
    Ok(g)
}

pub fn main_bound_spec(n: usize) -> FamilySpec {
    FamilySpec {
        kind: "main_bound_extremal",
        params: vec![("n", n)],
        vertices: n * n + 1,
        expected: Rational::new(1, (n * n + 2 - 2 * n) as u64),
    }
}

/// Vertex `a = 0`; `S` and `T` of size `n - m + 1` joined completely; `X`
/// and `Y` of size `m - 1` matched `x_i y_i`; `a` adjacent to `S ∪ X`.
pub fn all_rationals_graph(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
    }
    let layout = AllRationalsLayout::new(m, n);
    check_size(layout.total)?;
    let mut g = Graph::empty(layout.total)?;
    for &s in &layout.s {
        g.add_edge(0, s);
        for &t in &layout.t {
            g.add_edge(s, t);
        }
    }
    for (&x, &y) in layout.x.iter().zip(&layout.y) {
        g.add_edge(0, x);
        g.add_edge(x, y);
    }
    Ok(g)
}

/// Vertex names of [`all_rationals_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllRationalsLayout {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub total: usize,
}

impl AllRationalsLayout {
    pub fn new(m: usize, n: usize) -> Self {
        let k = n - m + 1;
        let j = m - 1;
        let s: Vec<usize> = (1..=k).collect();
        let t: Vec<usize> = (k + 1..=2 * k).collect();
        let x: Vec<usize> = (2 * k + 1..=2 * k + j).collect();
        let y: Vec<usize> = (2 * k + j + 1..=2 * k + 2 * j).collect();
        AllRationalsLayout { s, t, x, y, total: 1 + 2 * k + 2 * j }
    }
}

pub fn all_rationals_spec(m: usize, n: usize) -> FamilySpec {
    FamilySpec {
        kind: "all_rationals",
        params: vec![("m", m), ("n", n)],
        vertices: 2 * n + 1,
        expected: Rational::new(m as u64, n as u64),
    }
}

/// `k`-clique `0..k` and an independent set `k..k²` split into private
/// blocks of `k - 1` vertices, one block per clique vertex.
pub fn addendum_graph(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("k must be at least 2, got {k}")));
    }
    let total = k * k;
    check_size(total)?;
    let mut g = Graph::empty(total)?;
    for q in 0..k {
        for p in q + 1..k {
            g.add_edge(q, p);
        }
        for i in 0..k - 1 {
            g.add_edge(q, k + q * (k - 1) + i);
        }
    }
    Ok(g)
}

/// The maximal independent sets of [`addendum_graph`] except the
/// independent side itself.
pub fn addendum_clutter(k: usize) -> Result<Clutter> {
    let g = addendum_graph(k)?;
    let u0: VertexSet = (k..k * k).collect();
    let l = maximal_independent_sets(&g)?;
    let idx = l.index_of(u0).expect("the independent side is maximal");
    l.without_edge(idx)
}

pub fn addendum_spec(k: usize) -> FamilySpec {
    let n = k * k;
    FamilySpec {
        kind: "addendum_clutter",
        params: vec![("k", k)],
        vertices: n,
        expected: Rational::new(1, (n + 2 - k - n / k) as u64),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub family: String,
    pub graph: Graph,
    pub c: Rational,
}

#[derive(Debug, Clone)]
pub struct WitnessOptions {
    pub seed: u64,
    pub random_trials: usize,
    pub limits: Limits,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions { seed: 0, random_trials: 2000, limits: Limits::default() }
    }
}

/// Structured connected graphs on `n` vertices, in search order.
fn structured(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![(format!("path {n}"), Graph::path(n))];
    if n >= 3 {
        out.push((format!("cycle {n}"), Graph::cycle(n)));
        out.push((format!("star {}", n - 1), Graph::star(n - 1)));
    }
    // spiders: a center with at least three legs, leg lengths non-increasing
    for legs in partitions(n - 1, 3) {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in &legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        let name = legs.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
        out.push((format!("spider {name}"), Graph::from_edges(n, &edges).expect("valid")));
    }
    // brooms: a path 0..p with extra leaves on its last vertex
    for p in 2..n.saturating_sub(1) {
        let mut edges: Vec<(usize, usize)> = (1..p).map(|i| (i - 1, i)).collect();
        for leaf in p..n {
            edges.push((p - 1, leaf));
        }
        out.push((format!("broom {p},{}", n - p), Graph::from_edges(n, &edges).expect("valid")));
    }
    if n >= 2 {
        out.push((format!("complete {n}"), Graph::complete(n)));
        for a in 1..=n / 2 {
            out.push((format!("complete_bipartite {a},{}", n - a), Graph::complete_bipartite(a, n - a)));
        }
    }
    out
}

/// Partitions of `total` into at least `min_parts` positive parts, each
/// list non-increasing.
fn partitions(total: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, min_parts: usize) {
        if rest == 0 {
            if cur.len() >= min_parts {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out, min_parts);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out, min_parts);
    out
}

/// First connected graph with matching complexity exactly `target`:
/// structured families by increasing order, then seeded random graphs.
pub fn rational_witness_search(
    target: Rational,
    max_vertices: usize,
    opts: &WitnessOptions,
) -> Result<Option<Witness>> {
    if target > Rational::ONE {
        return Err(Error::InvalidParameters(format!("target {target} exceeds 1")));
    }
    let max_vertices = max_vertices.min(opts.limits.vertex_cap).min(MAX_VERTICES);
    let deadline = opts.limits.deadline();
    let value = |g: &Graph| matching_complexity_value(g, &opts.limits);
    for n in 2..=max_vertices {
        for (family, g) in structured(n) {
            deadline.check()?;
            match value(&g) {
                Ok(c) if c == target => return Ok(Some(Witness { family, graph: g, c })),
                Ok(_) | Err(Error::EnumerationCap { .. } | Error::VertexCap { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if max_vertices < 2 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for trial in 0..opts.random_trials {
        deadline.check()?;
        let n = rng.gen_range(2..=max_vertices);
        let p: f64 = rng.gen_range(0.2..0.8);
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if !g.is_connected() {
            continue;
        }
        match value(&g) {
            Ok(c) if c == target => {
                return Ok(Some(Witness { family: format!("random seed {} trial {trial}", opts.seed), graph: g, c }))
            }
            Ok(_) | Err(Error::EnumerationCap { .. } | Error::VertexCap { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::{clutter_complexity, graph_complexity};

    #[test]
    fn main_bound_shapes() {
        assert_eq!(main_bound_extremal(1).unwrap(), Graph::complete(2));
        for n in 1..=5 {
            let g = main_bound_extremal(n).unwrap();
            assert_eq!(g.n(), n * n + 1);
            assert_eq!(g.max_degree(), 2 * n - 1);
            assert!(g.is_connected());
        }
        assert_eq!(main_bound_spec(3).expected, Rational::new(1, 5));
        assert!(main_bound_extremal(0).is_err());
        assert!(main_bound_extremal(12).is_err());
    }

    #[test]
    fn main_bound_values() {
        for n in 1..=3 {
            let g = main_bound_extremal(n).unwrap();
            assert_eq!(graph_complexity(&g).unwrap().c, main_bound_spec(n).expected, "n = {n}");
        }
    }

    #[test]
    fn all_rationals_examples() {
        let g = all_rationals_graph(1, 1).unwrap();
        assert_eq!(g, Graph::path(3));
        let g = all_rationals_graph(2, 3).unwrap();
        assert_eq!(g.n(), 7);
        assert!(g.is_connected() && g.is_bipartite());
        assert_eq!(graph_complexity(&g).unwrap().c, Rational::new(2, 3));
        let g = all_rationals_graph(1, 4).unwrap();
        let r = graph_complexity(&g).unwrap();
        assert_eq!(r.c, Rational::new(1, 4));
        let with_a: Vec<_> = r.per_edge.iter().filter(|e| e.edge.contains(0)).collect();
        assert_eq!(with_a.len(), 1);
        assert_eq!(with_a[0].c, Rational::new(1, 5));
        assert!(all_rationals_graph(3, 2).is_err());
        assert!(all_rationals_graph(0, 2).is_err());
    }

    #[test]
    fn addendum_examples() {
        assert_eq!(addendum_graph(2).unwrap(), Graph::path(4).permuted(&[2, 0, 1, 3]));
        let l = addendum_clutter(2).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(clutter_complexity(&l).unwrap().c, Rational::new(1, 2));
        let l = addendum_clutter(3).unwrap();
        assert_eq!(l.ground_size(), 9);
        assert_eq!(clutter_complexity(&l).unwrap().c, Rational::new(1, 5));
        assert_eq!(addendum_spec(3).expected, Rational::new(1, 5));
        assert!(l.origin().is_none());
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions(4, 3), vec![vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn witness_examples() {
        let opts = WitnessOptions::default();
        let w = rational_witness_search(Rational::ZERO, 4, &opts).unwrap().unwrap();
        assert_eq!(w.graph, Graph::complete(2));
        let w = rational_witness_search(Rational::new(1, 2), 6, &opts).unwrap().unwrap();
        assert_eq!(w.c, Rational::new(1, 2));
        assert!(w.graph.n() <= 4);
        let w = rational_witness_search(Rational::new(2, 3), 8, &opts).unwrap().unwrap();
        assert_eq!(w.c, Rational::new(2, 3));
        assert!(w.graph.is_connected());
    }
}
