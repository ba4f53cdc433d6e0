//! Checkers for the complexity bounds, the structural lemmas and the
//! conjecture on regular graphs, over single graphs or graph6 streams.

use std::cell::OnceCell;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::census::labeled_graphs;
use crate::clutter::{derived_graph, Clutter};
use crate::complexity::{clutter_complexity, ComplexityReport};
use crate::complexity::{graph_complexity_value, matching_complexity_value};
use crate::enumerate::{maximal_independent_sets_with, maximal_matchings_with, maximum_cliques};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, graph_stats, parse_graph6, EdgeIndexMap, Graph, GraphStats};
use crate::limits::Limits;
use crate::rational::Rational;

macro_rules! named_kinds {
    ($ty:ident { $($variant:ident => $name:literal),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $ty {
            $($variant),+
        }

        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($ty::$variant => $name),+
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                let key = s.replace('-', "_");
                $ty::ALL.iter().copied().find(|k| k.name() == key).ok_or_else(|| {
                    let names: Vec<&str> = $ty::ALL.iter().map(|k| k.name()).collect();
                    format!("unknown kind {s:?} (expected one of {})", names.join(", "))
                })
            }
        }

        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(self.name())
            }
        }
    };
}

named_kinds!(BoundKind {
    Gallai => "gallai",
    Degree => "degree",
    Main => "main",
    MatchingLower => "matching_lower",
    RegularHalf => "regular_half",
    RegularTwoThirds => "regular_two_thirds",
    RegularFour => "regular_four",
    Addendum => "addendum",
});

named_kinds!(LemmaKind {
    MatchingStructure => "matching_structure",
    MinimumMatching => "minimum_matching",
    PerfectMatchingCharact => "perfect_matching_charact",
    AllSingletons => "all_singletons",
});

/// `1 / (t - 2 sqrt(s))`. The denominator is `(sqrt(s) - 1)^2 + 1 + (t - s - 2)`,
/// positive whenever `t >= s + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurdBound {
    pub t: u64,
    pub s: u64,
}

impl SurdBound {
    /// The bound `1 / (1 + n - 2 sqrt(n - 1))` for `n >= 1`.
    pub fn for_order(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        SurdBound { t: n as u64 + 1, s: n as u64 - 1 }
    }

    /// Orders `c` against the bound using integers only:
    /// `p/q >= 1/(t - 2 sqrt s)` iff `p t - q >= 0` and `(p t - q)^2 >= 4 p^2 s`.
    pub fn compare(self, c: Rational) -> Ordering {
        let (p, q) = (c.numer() as i128, c.denom() as i128);
        let d = p * self.t as i128 - q;
        if d < 0 {
            return Ordering::Less;
        }
        let lhs = (d as u128).checked_mul(d as u128).expect("complexity values have small terms");
        let rhs = (4 * p as u128 * p as u128).checked_mul(self.s as u128).expect("complexity values have small terms");
        lhs.cmp(&rhs)
    }

    pub fn approx(self) -> f64 {
        1.0 / (self.t as f64 - 2.0 * (self.s as f64).sqrt())
    }
}

impl fmt::Display for SurdBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/({}-2*sqrt({}))", self.t, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rhs {
    Value(Rational),
    Surd(SurdBound),
}

impl Rhs {
    /// `lhs` against the right-hand side.
    pub fn compare(self, lhs: Rational) -> Ordering {
        match self {
            Rhs::Value(r) => lhs.cmp(&r),
            Rhs::Surd(s) => s.compare(lhs),
        }
    }

    pub fn approx(self) -> f64 {
        match self {
            Rhs::Value(r) => r.to_f64(),
            Rhs::Surd(s) => s.approx(),
        }
    }
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Value(r) => write!(f, "{r}"),
            Rhs::Surd(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for Rhs {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = "<=")]
    AtMost,
}

impl Relation {
    fn accepts(self, ord: Ordering) -> bool {
        match self {
            Relation::AtLeast => ord != Ordering::Less,
            Relation::Greater => ord == Ordering::Greater,
            Relation::AtMost => ord != Ordering::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::Greater => ">",
            Relation::AtMost => "<=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// What `lhs` measures, e.g. `c_matching`.
    pub quantity: &'static str,
    pub lhs: Option<Rational>,
    pub relation: Relation,
    pub rhs: Rhs,
    /// Outcome of the comparison, also filled in for inapplicable inputs
    /// whenever the left-hand side exists.
    pub satisfied: Option<bool>,
    /// `satisfied` for applicable inputs, `None` otherwise.
    pub holds: Option<bool>,
    pub tight: Option<bool>,
}

impl BoundReport {
    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaWitness {
    pub detail: String,
    pub sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub name: &'static str,
    pub holds: bool,
    /// Number of objects the conclusion was checked on.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LemmaWitness>,
}

/// Data behind the clique conclusion when every maximal independent set has a
/// one-vertex recognizing set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingletonClasses {
    pub independent_sets: Vec<VertexSet>,
    pub recognizing: Vec<VertexSet>,
    /// Vertices of each set that lie in no other maximal independent set.
    pub unique_members: Vec<VertexSet>,
    pub clique_number: usize,
    pub maximum_cliques: usize,
    pub transversals: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub kind: LemmaKind,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub premise_holds: Option<bool>,
    pub conclusions: Vec<Conclusion>,
    /// `None` when inapplicable or when the premise fails.
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<SingletonClasses>,
}

impl LemmaReport {
    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }

    fn inapplicable(kind: LemmaKind, reason: impl Into<String>) -> Self {
        LemmaReport {
            kind,
            applicable: false,
            reason: Some(reason.into()),
            premise_holds: None,
            conclusions: Vec::new(),
            holds: None,
            classes: None,
        }
    }

    fn with(kind: LemmaKind, premise: bool, conclusions: Vec<Conclusion>) -> Self {
        let holds = premise.then(|| conclusions.iter().all(|c| c.holds));
        LemmaReport {
            kind,
            applicable: true,
            reason: None,
            premise_holds: Some(premise),
            conclusions,
            holds,
            classes: None,
        }
    }
}

fn cached<T>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

/// One graph plus lazily computed clutters and complexity reports, shared by
/// all checks on it.
pub struct GraphContext<'a> {
    g: &'a Graph,
    limits: Limits,
    mis: OnceCell<Result<Clutter>>,
    indep: OnceCell<Result<ComplexityReport>>,
    matchings: OnceCell<Result<(Clutter, EdgeIndexMap)>>,
    matching: OnceCell<Result<ComplexityReport>>,
}

impl<'a> GraphContext<'a> {
    pub fn new(g: &'a Graph, limits: &Limits) -> Self {
        GraphContext {
            g,
            limits: *limits,
            mis: OnceCell::new(),
            indep: OnceCell::new(),
            matchings: OnceCell::new(),
            matching: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn independent_sets(&self) -> Result<&Clutter> {
        cached(&self.mis, || maximal_independent_sets_with(self.g, &self.limits))
    }

    pub fn independent_report(&self) -> Result<&ComplexityReport> {
        cached(&self.indep, || clutter_complexity(self.independent_sets()?))
    }

    /// Maximal matchings as sets of edge indices into the returned map.
    pub fn matchings(&self) -> Result<&(Clutter, EdgeIndexMap)> {
        cached(&self.matchings, || {
            if self.g.edge_count() == 0 {
                return Err(Error::Edgeless);
            }
            maximal_matchings_with(self.g, &self.limits)
        })
    }

    pub fn matching_report(&self) -> Result<&ComplexityReport> {
        cached(&self.matching, || clutter_complexity(&self.matchings()?.0))
    }

    pub fn c_indep(&self) -> Result<Rational> {
        Ok(self.independent_report()?.c)
    }

    pub fn c_matching(&self) -> Result<Rational> {
        Ok(self.matching_report()?.c)
    }

    pub fn check_bound(&self, kind: BoundKind) -> Result<BoundReport> {
        let g = self.g;
        let n = g.n();
        let regular = g.regularity();
        let not_regular = || format!("graph is not regular (degrees {}..{})", g.min_degree(), g.max_degree());
        let (quantity, relation, rhs, reason) = match kind {
            BoundKind::Gallai => {
                let lhs = self.independent_sets()?.edges().iter().map(|u| u.len()).min().unwrap_or(0) + g.max_degree();
                return Ok(evaluate(
                    kind,
                    "min_independent_set_plus_max_degree",
                    Relation::AtMost,
                    Rhs::Value(Rational::from_int(n as u64)),
                    None,
                    Some(Rational::from_int(lhs as u64)),
                ));
            }
            BoundKind::Degree => {
                let reason = (g.edge_count() == 0).then(|| "graph has no edges".to_string());
                let d = (n - g.max_degree()).max(1);
                ("c_indep", Relation::AtLeast, Rhs::Value(Rational::new(1, d as u64)), reason)
            }
            BoundKind::Main => {
                let reason = if !g.is_connected() {
                    Some("graph is not connected".to_string())
                } else if n < 2 {
                    Some("fewer than 2 vertices".to_string())
                } else if g.is_balanced_complete_bipartite() && matches!(n, 4 | 6 | 8) {
                    Some(format!("listed exception K_{{{h},{h}}}", h = n / 2))
                } else {
                    None
                };
                ("c_indep", Relation::AtLeast, Rhs::Surd(SurdBound::for_order(n.max(1))), reason)
            }
            BoundKind::MatchingLower => {
                let reason = if !g.is_connected() {
                    Some("graph is not connected".to_string())
                } else if n <= 4 {
                    Some("at most 4 vertices".to_string())
                } else {
                    None
                };
                let rhs = Rhs::Value(Rational::new(2, n.saturating_sub(2).max(1) as u64));
                ("c_matching", Relation::AtLeast, rhs, reason)
            }
            BoundKind::RegularHalf | BoundKind::RegularTwoThirds | BoundKind::RegularFour => {
                let (relation, value, wanted): (_, _, fn(usize) -> bool) = match kind {
                    BoundKind::RegularHalf => (Relation::AtLeast, Rational::new(1, 2), |r| r > 1),
                    BoundKind::RegularTwoThirds => (Relation::AtLeast, Rational::new(2, 3), |r| r > 4),
                    _ => (Relation::Greater, Rational::new(3, 5), |r| r == 4),
                };
                let reason = match regular {
                    None => Some(not_regular()),
                    Some(r) if !wanted(r) => Some(format!("{r}-regular, outside the degree range")),
                    Some(_) => None,
                };
                ("c_matching", relation, Rhs::Value(value), reason)
            }
            BoundKind::Addendum => {
                return addendum_report(
                    self.independent_sets()?,
                    self.indep.get().and_then(|r| r.as_ref().ok()).map(|r| r.c),
                );
            }
        };
        let lhs = match quantity {
            "c_indep" => optional(self.c_indep())?,
            _ => optional(self.c_matching())?,
        };
        Ok(evaluate(kind, quantity, relation, rhs, reason, lhs))
    }

    pub fn check_lemma(&self, kind: LemmaKind) -> Result<LemmaReport> {
        match kind {
            LemmaKind::MatchingStructure => self.matching_structure(),
            LemmaKind::MinimumMatching => self.minimum_matching(),
            LemmaKind::PerfectMatchingCharact => self.perfect_matching_charact(),
            LemmaKind::AllSingletons => self.all_singletons(),
        }
    }

    fn matching_structure(&self) -> Result<LemmaReport> {
        let kind = LemmaKind::MatchingStructure;
        if self.g.edge_count() == 0 {
            return Ok(LemmaReport::inapplicable(kind, "graph has no edges"));
        }
        let (clutter, map) = self.matchings()?;
        let report = self.matching_report()?;
        let mut rest_ok = Conclusion::new("rest_adjacent_only_to_recognizing_vertices");
        let mut outside_ok = Conclusion::new("recognizing_edges_reach_outside");
        for (h, r) in clutter.edges().iter().zip(&report.per_edge) {
            let s_vertices = map.covered(r.min_set);
            rest_ok.checked += 1;
            outside_ok.checked += 1;
            for (u, v) in map.edges_of(h.difference(r.min_set)) {
                for (x, mate) in [(u, v), (v, u)] {
                    let stray = self.g.neighbors(x).difference(s_vertices).without(mate);
                    if let Some(y) = stray.min() {
                        rest_ok.fail(
                            format!(
                            "matching {}: vertex {x} of edge ({u},{v}) outside the recognizing set is adjacent to {y}",
                            pairs(map, *h)
                        ),
                            vec![*h, r.min_set, VertexSet::from_iter([x, y])],
                        );
                    }
                }
            }
            for (u, v) in map.edges_of(r.min_set) {
                let reach = self.g.neighbors(u).union(self.g.neighbors(v));
                if reach.is_subset(s_vertices) {
                    outside_ok.fail(
                        format!(
                            "matching {}: recognizing edge ({u},{v}) has no neighbor outside its vertices",
                            pairs(map, *h)
                        ),
                        vec![*h, r.min_set, VertexSet::from_iter([u, v])],
                    );
                }
            }
        }
        Ok(LemmaReport::with(kind, true, vec![rest_ok, outside_ok]))
    }

    fn minimum_matching(&self) -> Result<LemmaReport> {
        let kind = LemmaKind::MinimumMatching;
        if self.g.edge_count() == 0 {
            return Ok(LemmaReport::inapplicable(kind, "graph has no edges"));
        }
        let (clutter, map) = self.matchings()?;
        let report = self.matching_report()?;
        let smallest = clutter.edges().iter().map(|h| h.len()).min().unwrap_or(0);
        let mut c = Conclusion::new("no_edge_reaches_two_rest_edges");
        for (h, r) in clutter.edges().iter().zip(&report.per_edge) {
            if h.len() != smallest {
                continue;
            }
            c.checked += 1;
            let rest = map.edges_of(h.difference(r.min_set));
            let touches = |x: usize, f: (usize, usize)| self.g.has_edge(x, f.0) || self.g.has_edge(x, f.1);
            for e in map.edges_of(*h) {
                let others: Vec<_> = rest.iter().copied().filter(|&f| f != e).collect();
                let found = others.iter().enumerate().find_map(|(i, &f1)| {
                    others
                        .iter()
                        .enumerate()
                        .find(|&(j, &f2)| i != j && touches(e.0, f1) && touches(e.1, f2))
                        .map(|(_, &f2)| (f1, f2))
                });
                if let Some((f1, f2)) = found {
                    c.fail(
                        format!(
                            "minimum matching {}: edge ({},{}) reaches ({},{}) and ({},{})",
                            pairs(map, *h),
                            e.0,
                            e.1,
                            f1.0,
                            f1.1,
                            f2.0,
                            f2.1
                        ),
                        vec![*h, r.min_set],
                    );
                }
            }
        }
        Ok(LemmaReport::with(kind, true, vec![c]))
    }

    fn perfect_matching_charact(&self) -> Result<LemmaReport> {
        let kind = LemmaKind::PerfectMatchingCharact;
        let g = self.g;
        if !g.is_connected() || g.n() < 2 {
            return Ok(LemmaReport::inapplicable(kind, "needs a connected graph with at least 2 vertices"));
        }
        let (clutter, map) = self.matchings()?;
        let imperfect = clutter.edges().iter().find(|h| 2 * h.len() != g.n());
        let premise = imperfect.is_none();
        let shape = (g.is_complete() && g.n().is_multiple_of(2)) || g.is_balanced_complete_bipartite();
        let mut forward = Conclusion::new("all_perfect_implies_complete_or_balanced_bipartite");
        let mut backward = Conclusion::new("complete_or_balanced_bipartite_implies_all_perfect");
        forward.checked = 1;
        backward.checked = 1;
        if premise && !shape {
            forward.fail("every maximal matching is perfect but the graph is neither K_2n nor K_n,n".into(), vec![]);
        }
        if shape && !premise {
            let h = *imperfect.expect("premise failed");
            backward.fail(format!("maximal matching {} is not perfect", pairs(map, h)), vec![h]);
        }
        let mut report = LemmaReport::with(kind, true, vec![forward, backward]);
        report.premise_holds = Some(premise);
        report.holds = Some(report.conclusions.iter().all(|c| c.holds));
        Ok(report)
    }

    fn all_singletons(&self) -> Result<LemmaReport> {
        let kind = LemmaKind::AllSingletons;
        let g = self.g;
        if !g.is_connected() || g.n() == 0 {
            return Ok(LemmaReport::inapplicable(kind, "graph is not connected"));
        }
        let mis = self.independent_sets()?;
        let report = self.independent_report()?;
        let premise = report.per_edge.iter().all(|r| r.size == 1);
        if !premise {
            return Ok(LemmaReport::with(kind, false, Vec::new()));
        }
        let all = g.vertices();

        let mut dominating = Conclusion::new("recognizing_vertex_adjacent_to_all_outside");
        for r in &report.per_edge {
            dominating.checked += 1;
            let x = r.min_set.min().expect("singleton");
            let missed = all.difference(r.edge).difference(g.neighbors(x));
            if !missed.is_empty() {
                dominating.fail(format!("vertex {x} misses {missed} outside {}", r.edge), vec![r.edge, missed]);
            }
        }

        let mut gallai = Conclusion::new("min_independent_set_plus_max_degree_equals_order");
        gallai.checked = 1;
        let smallest = mis.edges().iter().map(|u| u.len()).min().unwrap_or(0);
        if smallest + g.max_degree() != g.n() {
            gallai.fail(format!("{} + {} != {}", smallest, g.max_degree(), g.n()), vec![]);
        }

        let mut membership = vec![0usize; g.n()];
        for u in mis.edges() {
            for v in *u {
                membership[v] += 1;
            }
        }
        let once: VertexSet = (0..g.n()).filter(|&v| membership[v] == 1).collect();
        let unique: Vec<VertexSet> = mis.edges().iter().map(|u| u.intersection(once)).collect();
        let (omega, max_cliques) = maximum_cliques(g)?;
        let transversals = unique.iter().try_fold(1u128, |acc, s| acc.checked_mul(s.len() as u128));
        let mut cliques = Conclusion::new("maximum_cliques_are_unique_member_transversals");
        cliques.checked = max_cliques.len();
        if omega != mis.len() {
            cliques.fail(format!("clique number {omega} but {} maximal independent sets", mis.len()), vec![]);
        } else if let Some(q) = max_cliques.iter().find(|q| unique.iter().any(|s| q.intersection(*s).len() != 1)) {
            cliques.fail(format!("maximum clique {q} is not a transversal of the unique-member classes"), vec![*q]);
        } else if transversals != Some(max_cliques.len() as u128) {
            cliques.fail(
                format!("{} maximum cliques but {:?} transversals", max_cliques.len(), transversals),
                unique.clone(),
            );
        }

        let mut diameter = Conclusion::new("diameter_at_most_3");
        diameter.checked = 1;
        let d = g.diameter().expect("connected");
        if d > 3 {
            let (u, v) = far_pair(g, d);
            diameter.fail(format!("distance between {u} and {v} is {d}"), vec![VertexSet::from_iter([u, v])]);
        }

        let mut out = LemmaReport::with(kind, true, vec![dominating, gallai, cliques, diameter]);
        out.classes = Some(SingletonClasses {
            independent_sets: mis.edges().to_vec(),
            recognizing: report.per_edge.iter().map(|r| r.min_set).collect(),
            unique_members: unique,
            clique_number: omega,
            maximum_cliques: max_cliques.len(),
            transversals,
        });
        Ok(out)
    }
}

impl Conclusion {
    fn new(name: &'static str) -> Self {
        Conclusion { name, holds: true, checked: 0, witness: None }
    }

    /// Records the first failure only.
    fn fail(&mut self, detail: String, sets: Vec<VertexSet>) {
        if self.holds {
            self.holds = false;
            self.witness = Some(LemmaWitness { detail, sets });
        }
    }
}

fn pairs(map: &EdgeIndexMap, h: VertexSet) -> String {
    let parts: Vec<String> = map.edges_of(h).iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", parts.join(","))
}

fn far_pair(g: &Graph, d: usize) -> (usize, usize) {
    (0..g.n())
        .find_map(|u| g.distances_from(u).iter().position(|&x| x == Some(d)).map(|v| (u, v)))
        .expect("diameter is attained")
}

/// Empty clutters and edgeless graphs have no complexity; anything else is a
/// real error.
fn optional(r: Result<Rational>) -> Result<Option<Rational>> {
    match r {
        Ok(c) => Ok(Some(c)),
        Err(Error::Edgeless | Error::EmptyClutter) => Ok(None),
        Err(e) => Err(e),
    }
}

fn evaluate(
    kind: BoundKind,
    quantity: &'static str,
    relation: Relation,
    rhs: Rhs,
    reason: Option<String>,
    lhs: Option<Rational>,
) -> BoundReport {
    let ord = lhs.map(|c| rhs.compare(c));
    let satisfied = ord.map(|o| relation.accepts(o));
    let applicable = reason.is_none();
    BoundReport {
        kind,
        applicable,
        reason,
        quantity,
        lhs,
        relation,
        rhs,
        satisfied,
        holds: if applicable { satisfied } else { None },
        tight: ord.map(|o| o == Ordering::Equal),
    }
}

/// Why the addendum hypotheses fail, if they do.
pub fn addendum_hypotheses(l: &Clutter) -> Option<String> {
    let n = l.ground_size();
    let k = l.len();
    if n == 0 || k == 0 {
        Some("empty clutter".into())
    } else if l.union() != VertexSet::full(n) {
        Some(format!("edges do not cover the ground set (missing {})", VertexSet::full(n).difference(l.union())))
    } else if !l.intersection().is_empty() {
        Some(format!("edges share {}", l.intersection()))
    } else if n.is_multiple_of(k) {
        Some(format!("{k} edges divide the ground set size {n}"))
    } else {
        None
    }
}

fn addendum_report(l: &Clutter, known: Option<Rational>) -> Result<BoundReport> {
    let reason = addendum_hypotheses(l);
    let lhs = match known {
        Some(c) => Some(c),
        None => optional(clutter_complexity(l).map(|r| r.c))?,
    };
    let rhs = Rhs::Surd(SurdBound::for_order(l.ground_size().max(1)));
    Ok(evaluate(BoundKind::Addendum, "c_clutter", Relation::AtLeast, rhs, reason, lhs))
}

pub fn check_bound(g: &Graph, kind: BoundKind, limits: &Limits) -> Result<BoundReport> {
    GraphContext::new(g, limits).check_bound(kind)
}

/// Bounds on a bare clutter; only `addendum` is about clutters, the other
/// kinds come back inapplicable.
pub fn check_clutter_bound(l: &Clutter, kind: BoundKind) -> Result<BoundReport> {
    if kind == BoundKind::Addendum {
        return addendum_report(l, None);
    }
    let rhs = Rhs::Value(Rational::from_int(0));
    Ok(evaluate(kind, "c_clutter", Relation::AtLeast, rhs, Some("bound is stated for graphs".into()), None))
}

pub fn check_lemma(g: &Graph, kind: LemmaKind, limits: &Limits) -> Result<LemmaReport> {
    GraphContext::new(g, limits).check_lemma(kind)
}

/// When every edge of `l` has a one-vertex recognizing set, those vertices
/// form a clique of the derived graph; reports its size against the clique
/// number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedCliqueCheck {
    pub recognizing_vertices: VertexSet,
    pub is_clique: bool,
    pub edges: usize,
    pub clique_number: usize,
}

impl DerivedCliqueCheck {
    pub fn holds(&self) -> bool {
        self.is_clique && self.recognizing_vertices.len() == self.edges && self.clique_number >= self.edges
    }
}

pub fn derived_clique_check(l: &Clutter) -> Result<Option<DerivedCliqueCheck>> {
    let report = clutter_complexity(l)?;
    if report.per_edge.iter().any(|r| r.size != 1) {
        return Ok(None);
    }
    let gl = derived_graph(l);
    let vs: VertexSet = report.per_edge.iter().map(|r| r.min_set.min().expect("singleton")).collect();
    let (omega, _) = maximum_cliques(&gl)?;
    Ok(Some(DerivedCliqueCheck {
        recognizing_vertices: vs,
        is_clique: gl.is_clique(vs),
        edges: l.len(),
        clique_number: omega,
    }))
}

/// Random clutter on `2..=max_n` vertices meeting the addendum hypotheses:
/// edges cover the ground set, share no common vertex, and their number does
/// not divide the ground set size.
pub fn random_addendum_clutter(rng: &mut impl Rng, max_n: usize) -> Clutter {
    assert!(max_n >= 3, "no clutter on fewer than 3 vertices meets the hypotheses");
    loop {
        let n = rng.gen_range(3..=max_n);
        let k = rng.gen_range(2..n.max(3));
        if n % k == 0 {
            continue;
        }
        let p = rng.gen_range(0.2..0.8);
        let mut edges: Vec<VertexSet> = Vec::with_capacity(k);
        for _ in 0..k {
            let e: VertexSet = (0..n).filter(|_| rng.gen_bool(p)).collect();
            if e.is_empty() {
                continue;
            }
            if edges.iter().any(|f| f.is_subset(e) || e.is_subset(*f)) {
                continue;
            }
            edges.push(e);
        }
        if edges.len() != k {
            continue;
        }
        let Ok(l) = Clutter::new(n, edges) else { continue };
        if addendum_hypotheses(&l).is_none() {
            return l;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub graph6: String,
    pub n: usize,
    pub degree: usize,
    pub c: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTally {
    pub n: usize,
    pub degree: usize,
    pub graphs: usize,
    pub below_one: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionTally {
    pub class: String,
    pub n: usize,
    pub c: Rational,
    pub count: usize,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub graphs: usize,
    pub checked: usize,
    pub skipped_disconnected: usize,
    pub skipped_irregular: usize,
    pub skipped_edgeless: usize,
    pub parse_errors: Vec<ScanParseError>,
    pub tallies: Vec<ClassTally>,
    pub exceptions: Vec<ExceptionTally>,
    pub counterexamples: Vec<ScanEntry>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScanReport {
    /// 0 when every graph is consistent, 1 on a counterexample, 2 when only
    /// input errors occurred.
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            1
        } else if !self.parse_errors.is_empty() {
            2
        } else {
            0
        }
    }
}

/// `C_7`, `K_{n,n}` or `K_{2n}`, the regular graphs allowed below one. `K_2`
/// is reported as `K_{1,1}`.
pub fn conjectured_exception(g: &Graph) -> Option<String> {
    let n = g.n();
    if n == 7 && g.is_cycle() {
        Some("C_7".into())
    } else if n >= 2 && g.is_balanced_complete_bipartite() {
        Some(format!("K_{{{h},{h}}}", h = n / 2))
    } else if n >= 2 && n.is_multiple_of(2) && g.is_complete() {
        Some(format!("K_{n}"))
    } else {
        None
    }
}

#[derive(Default)]
struct Scan {
    report: ScanReport,
    candidates: Vec<Graph>,
}

impl Scan {
    fn offer(&mut self, g: Graph) {
        self.report.graphs += 1;
        if !g.is_connected() {
            self.report.skipped_disconnected += 1;
        } else if g.regularity().is_none() {
            self.report.skipped_irregular += 1;
        } else if g.edge_count() == 0 {
            self.report.skipped_edgeless += 1;
        } else {
            self.candidates.push(g);
        }
    }

    fn finish(self, limits: &Limits, start: Instant) -> Result<ScanReport> {
        let Scan { mut report, candidates } = self;
        let deadline = limits.deadline();
        let values: Vec<Rational> = candidates
            .par_iter()
            .map(|g| {
                deadline.check()?;
                matching_complexity_value(g, limits)
            })
            .collect::<Result<_>>()?;
        let mut tallies: BTreeMap<(usize, usize), ClassTally> = BTreeMap::new();
        let mut exceptions: BTreeMap<String, ExceptionTally> = BTreeMap::new();
        for (g, c) in candidates.iter().zip(values) {
            let degree = g.regularity().expect("filtered");
            report.checked += 1;
            let t = tallies.entry((g.n(), degree)).or_insert(ClassTally { n: g.n(), degree, graphs: 0, below_one: 0 });
            t.graphs += 1;
            if c >= Rational::from_int(1) {
                continue;
            }
            t.below_one += 1;
            let graph6 = encode_graph6(g)?;
            match conjectured_exception(g) {
                Some(class) => {
                    exceptions
                        .entry(class.clone())
                        .or_insert(ExceptionTally { class, n: g.n(), c, count: 0, graph6 })
                        .count += 1;
                }
                None => report.counterexamples.push(ScanEntry { graph6, n: g.n(), degree, c, class: None }),
            }
        }
        report.tallies = tallies.into_values().collect();
        report.exceptions = exceptions.into_values().collect();
        report.exceptions.sort_by(|a, b| (a.n, &a.class).cmp(&(b.n, &b.class)));
        report.elapsed = start.elapsed();
        Ok(report)
    }
}

/// Conjecture scan over the given graphs; graphs that are not connected and
/// regular are tallied and skipped.
pub fn conjecture_scan_graphs(graphs: impl IntoIterator<Item = Graph>, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    let mut scan = Scan::default();
    for g in graphs {
        limits.check_vertices(g.n())?;
        scan.offer(g);
    }
    scan.finish(limits, start)
}

/// Every labeled graph on 1..=`max_n` vertices (`max_n <= 7`).
pub fn conjecture_scan_builtin(max_n: usize, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    let mut scan = Scan::default();
    for n in 1..=max_n {
        for g in labeled_graphs(n)? {
            scan.offer(g);
        }
    }
    scan.finish(limits, start)
}

/// One graph6 string per line; blank lines and a `>>graph6<<` header are
/// ignored, unparsable lines are recorded and skipped.
pub fn conjecture_scan_graph6(input: impl BufRead, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    let mut scan = Scan::default();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text).and_then(|g| limits.check_vertices(g.n()).map(|_| g)) {
            Ok(g) => scan.offer(g),
            Err(e) => scan.report.parse_errors.push(ScanParseError { line: i + 1, message: e.to_string() }),
        }
    }
    scan.finish(limits, start)
}

#[derive(Debug, Clone, Serialize)]
pub struct FullReport {
    /// `None` past the 62 vertices graph6 can hold.
    pub graph6: Option<String>,
    pub stats: GraphStats,
    pub independent: ComplexityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchingSummary>,
    pub bounds: Vec<BoundReport>,
    pub lemmas: Vec<LemmaReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchingSummary {
    pub edge_map: EdgeIndexMap,
    #[serde(flatten)]
    pub report: ComplexityReport,
}

impl FullReport {
    pub fn violated(&self) -> bool {
        self.bounds.iter().any(BoundReport::violated) || self.lemmas.iter().any(LemmaReport::violated)
    }
}

/// Statistics, both complexities, every bound and every lemma for one graph.
/// Failures name the stage that hit a budget.
pub fn full_report(g: &Graph, limits: &Limits) -> Result<FullReport> {
    limits.check_vertices(g.n()).map_err(|e| e.in_stage("input"))?;
    let cx = GraphContext::new(g, limits);
    let independent = cx.independent_report().map_err(|e| e.in_stage("independent_complexity"))?.clone();
    let matching = if g.edge_count() == 0 {
        None
    } else {
        let report = cx.matching_report().map_err(|e| e.in_stage("matching_complexity"))?.clone();
        let (_, map) = cx.matchings().expect("computed above");
        Some(MatchingSummary { edge_map: map.clone(), report })
    };
    let bounds =
        BoundKind::ALL.iter().map(|&k| cx.check_bound(k).map_err(|e| e.in_stage("bounds"))).collect::<Result<_>>()?;
    let lemmas =
        LemmaKind::ALL.iter().map(|&k| cx.check_lemma(k).map_err(|e| e.in_stage("lemmas"))).collect::<Result<_>>()?;
    Ok(FullReport { graph6: encode_graph6(g).ok(), stats: graph_stats(g), independent, matching, bounds, lemmas })
}

/// `c(G)` compared with the main bound, for exhaustive scans.
pub fn main_bound_holds(g: &Graph, limits: &Limits) -> Result<bool> {
    let c = graph_complexity_value(g, limits)?;
    Ok(SurdBound::for_order(g.n()).compare(c) != Ordering::Less)
}
