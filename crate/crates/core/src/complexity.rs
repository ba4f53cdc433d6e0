//! Minimum recognizing sets and exact complexity values.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::clutter::Clutter;
use crate::enumerate::{maximal_independent_sets_with, maximal_matchings_with};
use crate::error::{Error, Result};
use crate::graph::{EdgeIndexMap, Graph};
use crate::hitting::{ExactStrategy, HittingSet};
use crate::limits::Limits;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Exact,
    /// Upper bound only; results carry `exact = false`.
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognizingResult {
    pub edge_index: usize,
    pub edge: VertexSet,
    pub min_set: VertexSet,
    pub size: usize,
    pub c: Rational,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexityReport {
    pub edges: usize,
    pub per_edge: Vec<RecognizingResult>,
    pub c: Rational,
    pub argmax_edge: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// `|s| / |e|`, with the empty edge counted as complexity zero.
pub fn ratio(s: usize, e: usize) -> Rational {
    Rational::new(s as u64, e.max(1) as u64)
}

/// Containment test: no edge other than `edge_index` contains `subset`.
/// For clutters of maximal independent sets the domination test is run as
/// well and must agree.
pub fn is_recognizing(l: &Clutter, edge_index: usize, subset: VertexSet) -> Result<bool> {
    let e = l.edge(edge_index)?;
    if !subset.is_subset(e) {
        return Err(Error::NotSubset { subset, edge: e });
    }
    let by_containment = l.edges().iter().enumerate().all(|(i, f)| i == edge_index || !subset.is_subset(*f));
    if let Some(g) = l.origin() {
        let by_domination = dominates_outside(g, e, subset);
        assert_eq!(by_containment, by_domination, "recognizing tests disagree on {e} / {subset}");
    }
    Ok(by_containment)
}

/// Every vertex outside `u` has a neighbor in `subset`.
pub fn dominates_outside(g: &Graph, u: VertexSet, subset: VertexSet) -> bool {
    g.vertices().difference(u).iter().all(|v| g.neighbors(v).intersects(subset))
}

/// The hitting-set instance whose solutions are the recognizing subsets of
/// edge `edge_index`.
pub fn recognizing_instance(l: &Clutter, edge_index: usize) -> Result<HittingSet> {
    let e = l.edge(edge_index)?;
    Ok(match l.origin() {
        Some(g) => mis_instance(g, e),
        None => HittingSet::new(
            e,
            l.edges().iter().enumerate().filter(|&(i, _)| i != edge_index).map(|(_, f)| e.difference(*f)),
        ),
    })
}

fn mis_instance(g: &Graph, u: VertexSet) -> HittingSet {
    HittingSet::new(u, g.vertices().difference(u).iter().map(|v| g.neighbors(v).intersection(u)))
}

pub fn min_recognizing_set(l: &Clutter, edge_index: usize, method: Method) -> Result<RecognizingResult> {
    let e = l.edge(edge_index)?;
    let inst = recognizing_instance(l, edge_index)?;
    let min_set = solve(&inst, method);
    Ok(RecognizingResult {
        edge_index,
        edge: e,
        min_set,
        size: min_set.len(),
        c: ratio(min_set.len(), e.len()),
        exact: method == Method::Exact,
    })
}

fn solve(inst: &HittingSet, method: Method) -> VertexSet {
    // e \ f is never empty in an antichain and N(v) ∩ U is never empty for a
    // maximal U, so every instance here is feasible
    match method {
        Method::Exact => inst.minimum(ExactStrategy::Auto),
        Method::Greedy => inst.greedy(),
    }
    .expect("the whole edge always recognizes itself")
}

/// Smallest recognizing subset of a maximal independent set `u` of `g`.
pub fn min_recognizing_in_graph(g: &Graph, u: VertexSet, method: Method) -> Result<VertexSet> {
    if !g.is_maximal_independent(u) {
        return Err(Error::NotMaximalIndependent { set: u });
    }
    Ok(solve(&mis_instance(g, u), method))
}

/// `c(U)` for a maximal independent set `u` of `g`.
pub fn mis_complexity(g: &Graph, u: VertexSet) -> Result<Rational> {
    let s = min_recognizing_in_graph(g, u, Method::Exact)?;
    Ok(ratio(s.len(), u.len()))
}

pub fn clutter_complexity(l: &Clutter) -> Result<ComplexityReport> {
    clutter_complexity_with(l, Method::Exact)
}

pub fn clutter_complexity_with(l: &Clutter, method: Method) -> Result<ComplexityReport> {
    if l.is_empty() {
        return Err(Error::EmptyClutter);
    }
    let start = Instant::now();
    let per_edge: Vec<RecognizingResult> =
        (0..l.len()).into_par_iter().map(|i| min_recognizing_set(l, i, method)).collect::<Result<_>>()?;
    let mut argmax = 0;
    for (i, r) in per_edge.iter().enumerate() {
        if r.c > per_edge[argmax].c {
            argmax = i;
        }
    }
    Ok(ComplexityReport {
        edges: l.len(),
        c: per_edge[argmax].c,
        argmax_edge: argmax,
        per_edge,
        elapsed: start.elapsed(),
    })
}

/// `c(G) = c(U_G)`.
pub fn graph_complexity(g: &Graph) -> Result<ComplexityReport> {
    graph_complexity_with(g, &Limits::default())
}

pub fn graph_complexity_with(g: &Graph, limits: &Limits) -> Result<ComplexityReport> {
    clutter_complexity(&maximal_independent_sets_with(g, limits)?)
}

/// Complexity of the clutter of maximal matchings; edge indices in the
/// report refer to the returned map.
pub fn matching_complexity(g: &Graph) -> Result<(ComplexityReport, EdgeIndexMap)> {
    matching_complexity_with(g, &Limits::default())
}

pub fn matching_complexity_with(g: &Graph, limits: &Limits) -> Result<(ComplexityReport, EdgeIndexMap)> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let (l, map) = maximal_matchings_with(g, limits)?;
    Ok((clutter_complexity(&l)?, map))
}

/// Only the value `c(G)`, computed sequentially; used by the scans, which
/// parallelize over graphs instead.
pub fn graph_complexity_value(g: &Graph, limits: &Limits) -> Result<Rational> {
    let l = maximal_independent_sets_with(g, limits)?;
    Ok(clutter_value(&l))
}

pub fn matching_complexity_value(g: &Graph, limits: &Limits) -> Result<Rational> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let (l, _) = maximal_matchings_with(g, limits)?;
    Ok(clutter_value(&l))
}

fn clutter_value(l: &Clutter) -> Rational {
    let g = l.origin().expect("enumerated clutters keep their graph");
    l.edges()
        .iter()
        .map(|&u| ratio(solve(&mis_instance(g, u), Method::Exact).len(), u.len()))
        .max()
        .unwrap_or(Rational::ZERO)
}
