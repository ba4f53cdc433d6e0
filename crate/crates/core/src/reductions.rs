//! Set cover instances and the two bipartite gadgets built from them.

use rand::Rng;
use serde::Serialize;

use crate::bitset::{find_k_subset, VertexSet, MAX_VERTICES};
use crate::complexity::{dominates_outside, graph_complexity_with, ratio};
use crate::enumerate::maximal_independent_sets_with;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hitting::{ExactStrategy, HittingSet};
use crate::limits::Limits;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetCoverInstance {
    universe: usize,
    sets: Vec<VertexSet>,
}

impl SetCoverInstance {
    pub fn new(universe: usize, sets: Vec<VertexSet>) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::VertexCap { n: universe, cap: MAX_VERTICES });
        }
        if sets.is_empty() {
            return Err(Error::InvalidInstance("no sets".into()));
        }
        if sets.len() > MAX_VERTICES {
            return Err(Error::InvalidInstance(format!("{} sets, at most {MAX_VERTICES} supported", sets.len())));
        }
        let all = VertexSet::full(universe);
        for (j, s) in sets.iter().enumerate() {
            if let Some(x) = s.difference(all).min() {
                return Err(Error::InvalidInstance(format!("set {j} contains element {x} outside 0..{universe}")));
            }
        }
        let covered = sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
        if let Some(x) = all.difference(covered).min() {
            return Err(Error::InvalidInstance(format!("element {x} lies in no set")));
        }
        Ok(SetCoverInstance { universe, sets })
    }

    pub fn from_lists(universe: usize, sets: &[Vec<usize>]) -> Result<Self> {
        if let Some(&x) = sets.iter().flatten().find(|&&x| x >= universe.min(MAX_VERTICES)) {
            return Err(Error::InvalidInstance(format!("element {x} outside 0..{universe}")));
        }
        Self::new(universe, sets.iter().map(|s| s.iter().copied().collect()).collect())
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    /// Indices of the sets containing element `x`.
    pub fn containing(&self, x: usize) -> VertexSet {
        (0..self.m()).filter(|&j| self.sets[j].contains(x)).collect()
    }

    pub fn is_cover(&self, chosen: VertexSet) -> bool {
        chosen.iter().fold(VertexSet::EMPTY, |a, j| a.union(self.sets[j])) == VertexSet::full(self.universe)
    }

    /// First line `n m`, then one line of element indices per set; `-` is
    /// the empty set.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing `n m` header".into() })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse = |tok: &str, line: usize| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse { line, message: format!("expected an integer, got {tok:?}") })
        };
        if nums.len() != 2 {
            return Err(Error::Parse { line, message: "header must be `n m`".into() });
        }
        let (n, m) = (parse(nums[0], line)?, parse(nums[1], line)?);
        let mut sets = Vec::with_capacity(m);
        for (line, l) in lines {
            let mut s = Vec::new();
            if l != "-" {
                for tok in l.split_whitespace() {
                    s.push(parse(tok, line)?);
                }
            }
            sets.push(s);
        }
        if sets.len() != m {
            return Err(Error::Parse { line, message: format!("header announces {m} sets, found {}", sets.len()) });
        }
        Self::from_lists(n, &sets)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.universe, self.m());
        for s in &self.sets {
            let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            out.push_str(if items.is_empty() { "-" } else { "" });
            out.push_str(&items.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Random instance with `1..=max_n` elements and `1..=max_m` sets; every
/// element left uncovered is added to a random set.
pub fn random_instance(rng: &mut impl Rng, max_n: usize, max_m: usize) -> SetCoverInstance {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let mut sets = vec![VertexSet::EMPTY; m];
    for s in sets.iter_mut() {
        for x in 0..n {
            if rng.gen_bool(0.4) {
                s.insert(x);
            }
        }
    }
    for x in 0..n {
        if !sets.iter().any(|s| s.contains(x)) {
            let j = rng.gen_range(0..m);
            sets[j].insert(x);
        }
    }
    SetCoverInstance::new(n, sets).expect("covering by construction")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub size: usize,
    pub cover: VertexSet,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverMethod {
    #[default]
    Exact,
    Greedy,
}

/// Sets are ground elements and each universe element is a constraint
/// listing the sets that contain it.
pub fn min_set_cover(inst: &SetCoverInstance, method: CoverMethod) -> CoverResult {
    let h = HittingSet::new(VertexSet::full(inst.m()), (0..inst.universe).map(|x| inst.containing(x)));
    let cover = match method {
        CoverMethod::Exact => h.minimum(ExactStrategy::BranchAndBound),
        CoverMethod::Greedy => h.greedy(),
    }
    .expect("every element lies in some set");
    CoverResult { size: cover.len(), cover, exact: method == CoverMethod::Exact }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionOutput {
    pub graph: Graph,
    /// The set-side vertices, a maximal independent set.
    pub distinguished_mis: VertexSet,
    /// `element_vertices[i]` lists the copies of element `i`.
    pub element_vertices: Vec<Vec<usize>>,
    pub set_vertices: Vec<usize>,
    pub multiplicity: usize,
}

impl ReductionOutput {
    /// Set indices of a subset of the distinguished side.
    pub fn sets_of(&self, vertices: VertexSet) -> VertexSet {
        (0..self.set_vertices.len()).filter(|&j| vertices.contains(self.set_vertices[j])).collect()
    }

    /// Vertices of the distinguished side for a family of set indices.
    pub fn vertices_of(&self, sets: VertexSet) -> VertexSet {
        sets.iter().map(|j| self.set_vertices[j]).collect()
    }
}

/// Elements `0..n`, sets `n..n+m`, element `i` adjacent to every set
/// containing it.
pub fn build_problem1_graph(inst: &SetCoverInstance) -> Result<ReductionOutput> {
    build_problem2_graph(inst, Some(1))
}

/// Element `i` has copies `i*K .. i*K+K`, set `j` is vertex `n*K + j`.
/// The default multiplicity is `(n + m)^2`.
pub fn build_problem2_graph(inst: &SetCoverInstance, multiplicity: Option<usize>) -> Result<ReductionOutput> {
    let n = inst.universe;
    let m = inst.m();
    let k = multiplicity.unwrap_or((n + m) * (n + m));
    if k == 0 {
        return Err(Error::InvalidParameters("multiplicity must be at least 1".into()));
    }
    let total = n * k + m;
    if total > MAX_VERTICES {
        return Err(Error::VertexCap { n: total, cap: MAX_VERTICES });
    }
    let mut g = Graph::empty(total)?;
    let set_vertices: Vec<usize> = (0..m).map(|j| n * k + j).collect();
    let element_vertices: Vec<Vec<usize>> = (0..n).map(|i| (i * k..(i + 1) * k).collect()).collect();
    for (i, copies) in element_vertices.iter().enumerate() {
        for j in inst.containing(i) {
            for &c in copies {
                g.add_edge(c, set_vertices[j]);
            }
        }
    }
    let distinguished_mis: VertexSet = set_vertices.iter().copied().collect();
    debug_assert!(g.is_maximal_independent(distinguished_mis));
    Ok(ReductionOutput { graph: g, distinguished_mis, element_vertices, set_vertices, multiplicity: k })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCheck {
    pub l: usize,
    pub cover_exists: bool,
    pub recognizing_exists: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Problem1Report {
    pub l_min: usize,
    pub cover: VertexSet,
    /// Smallest recognizing subset of the set side, found by size-ordered
    /// subset search on the gadget.
    pub min_recognizing_size: usize,
    pub per_size: Vec<SizeCheck>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Problem2Report {
    pub l_min: usize,
    pub m: usize,
    pub multiplicity: usize,
    pub vertices: usize,
    pub maximal_independent_sets: usize,
    pub c: Rational,
    pub expected: Rational,
    /// `c(U)` for the set side.
    pub distinguished_c: Rational,
    /// Largest `c(U)` over the other maximal independent sets.
    pub max_other_c: Option<Rational>,
    pub others_below_one_over_m: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "problem", rename_all = "lowercase")]
pub enum ReductionReport {
    Problem1(Problem1Report),
    Problem2(Problem2Report),
}

const PROBLEM1_MAX_SETS: usize = 20;

/// Both sides by exhaustive search: for every `l <= m`, is there a cover
/// with exactly `l` sets, and a recognizing subset of the set side with
/// exactly `l` vertices?
pub fn verify_problem1(inst: &SetCoverInstance) -> Result<Problem1Report> {
    let m = inst.m();
    if m > PROBLEM1_MAX_SETS {
        return Err(Error::TooLarge(format!("{m} sets, exhaustive check limited to {PROBLEM1_MAX_SETS}")));
    }
    let red = build_problem1_graph(inst)?;
    let g = &red.graph;
    let u = red.distinguished_mis;
    let best = min_set_cover(inst, CoverMethod::Exact);
    let mut per_size = Vec::with_capacity(m + 1);
    let mut min_recognizing_size = None;
    for l in 0..=m {
        let cover_exists = find_k_subset(VertexSet::full(m), l, |c| inst.is_cover(c)).is_some();
        let recognizing_exists = find_k_subset(u, l, |s| dominates_outside(g, u, s)).is_some();
        if recognizing_exists && min_recognizing_size.is_none() {
            min_recognizing_size = Some(l);
        }
        per_size.push(SizeCheck { l, cover_exists, recognizing_exists });
    }
    let min_recognizing_size = min_recognizing_size.expect("the whole set side recognizes itself");
    let holds = per_size.iter().all(|s| s.cover_exists == s.recognizing_exists) && min_recognizing_size == best.size;
    Ok(Problem1Report { l_min: best.size, cover: best.cover, min_recognizing_size, per_size, holds })
}

/// Exact `c(G_I)` against `l_min / m`, plus the per-set values behind it.
pub fn verify_problem2(
    inst: &SetCoverInstance,
    multiplicity: Option<usize>,
    limits: &Limits,
) -> Result<Problem2Report> {
    let red = build_problem2_graph(inst, multiplicity)?;
    let m = inst.m();
    let best = min_set_cover(inst, CoverMethod::Exact);
    let l = maximal_independent_sets_with(&red.graph, limits)?;
    let report = graph_complexity_with(&red.graph, limits)?;
    let mut distinguished_c = None;
    let mut max_other_c: Option<Rational> = None;
    for r in &report.per_edge {
        if r.edge == red.distinguished_mis {
            distinguished_c = Some(r.c);
        } else {
            max_other_c = Some(max_other_c.map_or(r.c, |c| c.max(r.c)));
        }
    }
    let expected = ratio(best.size, m);
    let one_over_m = Rational::new(1, m as u64);
    let others_below_one_over_m = max_other_c.is_none_or(|c| c < one_over_m);
    Ok(Problem2Report {
        l_min: best.size,
        m,
        multiplicity: red.multiplicity,
        vertices: red.graph.n(),
        maximal_independent_sets: l.len(),
        c: report.c,
        expected,
        distinguished_c: distinguished_c.expect("the set side is a maximal independent set"),
        max_other_c,
        others_below_one_over_m,
        holds: report.c == expected,
    })
}
