//! Vertex types of trees and complexity-one maximal independent sets.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::complexity::mis_complexity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLabeling {
    pub alpha: VertexSet,
    pub beta: VertexSet,
    pub gamma: VertexSet,
    pub delta: VertexSet,
    /// Per vertex: the pass that first gave it a β or γ label, the terminal
    /// pass for δ-only vertices, 0 otherwise.
    pub step: Vec<usize>,
    /// Index of the δ pass (one more than the last β/γ pass).
    pub terminal_step: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexLabels {
    pub vertex: usize,
    pub labels: Vec<&'static str>,
    pub step: usize,
    pub pure_delta: bool,
}

impl TreeLabeling {
    pub fn pure_delta(&self) -> VertexSet {
        self.delta.difference(self.beta)
    }

    pub fn labels_of(&self, v: usize) -> Vec<&'static str> {
        [(self.alpha, "alpha"), (self.beta, "beta"), (self.gamma, "gamma"), (self.delta, "delta")]
            .into_iter()
            .filter(|(s, _)| s.contains(v))
            .map(|(_, name)| name)
            .collect()
    }

    pub fn rows(&self) -> Vec<VertexLabels> {
        (0..self.step.len())
            .map(|v| VertexLabels {
                vertex: v,
                labels: self.labels_of(v),
                step: self.step[v],
                pure_delta: self.pure_delta().contains(v),
            })
            .collect()
    }
}

impl Serialize for TreeLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.n() == 0 {
        return Err(Error::NotATree("the graph has no vertices".into()));
    }
    if !t.is_connected() {
        return Err(Error::NotATree("the graph is disconnected".into()));
    }
    if t.edge_count() != t.n() - 1 {
        return Err(Error::NotATree(format!("{} edges on {} vertices", t.edge_count(), t.n())));
    }
    Ok(())
}

/// Staged fixed point: α first, then passes that add β-vertices (an α
/// neighbor whose other neighbors are all α or already γ) together with
/// their γ neighbors, until a pass adds nothing; δ last.
pub fn label_tree(t: &Graph) -> Result<TreeLabeling> {
    require_tree(t)?;
    let n = t.n();
    let mut alpha = VertexSet::EMPTY;
    for leaf in (0..n).filter(|&v| t.degree(v) == 1) {
        for p in t.neighbors(leaf) {
            alpha = alpha.union(t.neighbors(p).without(leaf));
        }
    }
    let mut beta = VertexSet::EMPTY;
    let mut gamma = VertexSet::EMPTY;
    let mut step = vec![0; n];
    let mut pass = 0;
    loop {
        pass += 1;
        let known = alpha.union(gamma);
        let new_beta: VertexSet = (0..n)
            .filter(|&v| !beta.contains(v))
            .filter(|&v| t.neighbors(v).intersection(alpha).iter().any(|a| t.neighbors(a).without(v).is_subset(known)))
            .collect();
        let all_beta = beta.union(new_beta);
        let new_gamma = t.neighborhood(all_beta).difference(gamma);
        if new_beta.is_empty() && new_gamma.is_empty() {
            break;
        }
        for v in new_beta.union(new_gamma) {
            if step[v] == 0 {
                step[v] = pass;
            }
        }
        beta = all_beta;
        gamma = gamma.union(new_gamma);
    }
    let known = alpha.union(gamma);
    let delta: VertexSet = (0..n).filter(|&v| t.neighbors(v).is_subset(known)).collect();
    for v in delta.difference(beta).difference(gamma) {
        step[v] = pass;
    }
    Ok(TreeLabeling { alpha, beta, gamma, delta, step, terminal_step: pass })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryCondition {
    pub condition_a_holds: bool,
    pub condition_b_holds: bool,
    /// Vertices that are α or γ and also β or δ.
    pub violations_a: Vec<usize>,
    /// δ-vertices without an α or γ neighbor whose other neighbors avoid β
    /// and δ.
    pub violations_b: Vec<usize>,
}

/// The two conditions every complexity-one tree satisfies.
pub fn check_necessary_condition(t: &Graph) -> Result<NecessaryCondition> {
    let lab = label_tree(t)?;
    let low = lab.alpha.union(lab.gamma);
    let high = lab.beta.union(lab.delta);
    let violations_a = low.intersection(high).to_vec();
    let violations_b: Vec<usize> = lab
        .delta
        .iter()
        .filter(|&d| !t.neighbors(d).intersection(low).iter().any(|y| !t.neighbors(y).without(d).intersects(high)))
        .collect();
    Ok(NecessaryCondition {
        condition_a_holds: violations_a.is_empty(),
        condition_b_holds: violations_b.is_empty(),
        violations_a,
        violations_b,
    })
}

/// Vertices of `u` (a complexity-one maximal independent set) breaking the
/// membership rules: α and γ outside, β and δ inside.
pub fn membership_violations(lab: &TreeLabeling, u: VertexSet) -> Vec<(usize, &'static str)> {
    let mut out = Vec::new();
    for v in lab.alpha.intersection(u) {
        out.push((v, "alpha"));
    }
    for v in lab.beta.difference(u) {
        out.push((v, "beta"));
    }
    for v in lab.gamma.intersection(u) {
        out.push((v, "gamma"));
    }
    for v in lab.delta.difference(u) {
        out.push((v, "delta"));
    }
    out.sort();
    out
}

/// Every vertex of `u_set` has a neighbor in `spec` whose only neighbor in
/// `u_set` is that vertex.
pub fn verify_specific_certificate(g: &Graph, u_set: VertexSet, spec: VertexSet) -> Result<bool> {
    if !g.is_maximal_independent(u_set) {
        return Err(Error::NotMaximalIndependent { set: u_set });
    }
    Ok(u_set.iter().all(|v| {
        g.neighbors(v).intersection(spec).iter().any(|s| g.neighbors(s).intersection(u_set) == VertexSet::singleton(v))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    /// The popped group had no non-α vertex, so nothing could be chosen.
    #[serde(rename = "none")]
    Stuck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subcase {
    /// Grandchild of the chosen vertex whose children form the group.
    pub z: usize,
    pub group: VertexSet,
    /// "2.1" (queued) or "2.2" (`z` joins U).
    pub case: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionStep {
    /// Common parent of the group.
    pub parent: usize,
    pub group: VertexSet,
    pub a: VertexSet,
    pub a_prime: VertexSet,
    pub case: Branch,
    pub added: VertexSet,
    pub subcases: Vec<Subcase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub leaf: usize,
    pub u: VertexSet,
    pub spec: VertexSet,
    pub steps: Vec<ConstructionStep>,
    /// Specific neighbors supplied by the closing rule for vertices where the
    /// search stopped: a pendant vertex takes its neighbor, a vertex next
    /// to a pendant vertex takes that pendant vertex.
    pub closing: Vec<(usize, usize)>,
}

/// Which groups Case 1 queues besides those of `A \ A'` and of the
/// distance-three groups below `A'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CaseOneQueue {
    /// Only the groups named in the prose.
    #[cfg_attr(not(test), allow(dead_code))]
    Literal,
    /// Also the children of the α-vertices of the popped group, as Case 2
    /// does for its unchosen vertices.
    WithAlphaChildren,
}

struct Rooted {
    children: Vec<Vec<usize>>,
}

impl Rooted {
    fn new(t: &Graph, root: usize) -> Self {
        let n = t.n();
        let mut children = vec![Vec::new(); n];
        let mut seen = VertexSet::singleton(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for c in t.neighbors(v).difference(seen) {
                seen.insert(c);
                children[v].push(c);
                queue.push_back(c);
            }
        }
        Rooted { children }
    }

    fn child_set(&self, v: usize) -> VertexSet {
        self.children[v].iter().copied().collect()
    }

    /// Groups of vertices three levels below `v`, one per grandchild.
    fn groups_below(&self, v: usize) -> Vec<(usize, VertexSet)> {
        self.children[v].iter().flat_map(|&c| self.children[c].iter().map(|&g| (g, self.child_set(g)))).collect()
    }
}

/// Builds `U` with `leaf ∈ U` and `c(U) = 1` on trees with no β-vertex and
/// no pure δ-vertex, then checks the result: maximality, the
/// specific-neighbor certificate and the exact value of `c(U)`.
pub fn construct_full_complexity_mis(t: &Graph, leaf: usize) -> Result<(VertexSet, ConstructionTrace)> {
    construct_with(t, leaf, CaseOneQueue::WithAlphaChildren)
}

pub(crate) fn construct_with(
    t: &Graph,
    leaf: usize,
    queue_rule: CaseOneQueue,
) -> Result<(VertexSet, ConstructionTrace)> {
    let lab = label_tree(t)?;
    if leaf >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: leaf, n: t.n() });
    }
    if t.degree(leaf) != 1 {
        return Err(Error::NotALeaf(leaf));
    }
    if !lab.beta.is_empty() {
        return Err(Error::Precondition(format!("the tree has beta-vertices {}", lab.beta)));
    }
    if !lab.pure_delta().is_empty() {
        return Err(Error::Precondition(format!("the tree has pure delta-vertices {}", lab.pure_delta())));
    }
    let trace = run_construction(t, &lab, leaf, queue_rule);
    let u = trace.u;
    if !t.is_maximal_independent(u) {
        return Err(Error::CertificateFailure(format!(
            "leaf {leaf}: constructed set {u} is not a maximal independent set"
        )));
    }
    if !verify_specific_certificate(t, u, trace.spec)? {
        return Err(Error::CertificateFailure(format!(
            "leaf {leaf}: some vertex of {u} has no specific neighbor in {}",
            trace.spec
        )));
    }
    let c = mis_complexity(t, u)?;
    if c != Rational::ONE {
        return Err(Error::CertificateFailure(format!("leaf {leaf}: c({u}) = {c}")));
    }
    Ok((u, trace))
}

fn run_construction(t: &Graph, lab: &TreeLabeling, leaf: usize, queue_rule: CaseOneQueue) -> ConstructionTrace {
    let r = Rooted::new(t, leaf);
    let mut u = VertexSet::singleton(leaf);
    let mut spec = t.neighbors(leaf);
    let mut list: VecDeque<(usize, VertexSet)> = r.groups_below(leaf).into();
    let mut steps = Vec::new();
    let non_alpha = |s: VertexSet| s.difference(lab.alpha);
    while let Some((y, group)) = list.pop_front() {
        let a = non_alpha(group);
        let a_prime: VertexSet = a.iter().filter(|&v| r.child_set(v).is_subset(lab.alpha)).collect();
        let mut step = ConstructionStep {
            parent: y,
            group,
            a,
            a_prime,
            case: Branch::Stuck,
            added: VertexSet::EMPTY,
            subcases: Vec::new(),
        };
        if !a_prime.is_empty() {
            step.case = Branch::One;
            step.added = a_prime;
            u = u.union(a_prime);
            for z in a_prime {
                spec = spec.union(r.child_set(z));
            }
            for w in a.difference(a_prime) {
                list.push_back((w, r.child_set(w)));
            }
            for z in a_prime {
                list.extend(r.groups_below(z));
            }
            if queue_rule == CaseOneQueue::WithAlphaChildren {
                for z in group.difference(a) {
                    list.push_back((z, r.child_set(z)));
                }
            }
        } else if let Some(w) = a.min() {
            step.case = Branch::Two;
            step.added = VertexSet::singleton(w);
            u.insert(w);
            spec.insert(y);
            for other in group.without(w) {
                list.push_back((other, r.child_set(other)));
            }
            for (z, below) in r.groups_below(w) {
                if !non_alpha(below).is_empty() {
                    step.subcases.push(Subcase { z, group: below, case: "2.1" });
                    list.push_back((z, below));
                } else {
                    step.subcases.push(Subcase { z, group: below, case: "2.2" });
                    u.insert(z);
                    step.added.insert(z);
                    spec = spec.union(below);
                    list.extend(r.groups_below(z));
                }
            }
        }
        steps.push(step);
    }
    let mut closing = Vec::new();
    for v in u {
        let has_specific =
            t.neighbors(v).intersection(spec).iter().any(|s| t.neighbors(s).intersection(u) == VertexSet::singleton(v));
        if has_specific {
            continue;
        }
        let pendant =
            if t.degree(v) == 1 { t.neighbors(v).min() } else { t.neighbors(v).iter().find(|&x| t.degree(x) == 1) };
        if let Some(s) = pendant {
            spec.insert(s);
            closing.push((v, s));
        }
    }
    ConstructionTrace { leaf, u, spec, steps, closing }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn labeling_examples() {
        let lab = label_tree(&Graph::path(4)).unwrap();
        assert_eq!(
            (lab.alpha, lab.beta, lab.gamma, lab.delta),
            (set(&[1, 2]), set(&[0, 3]), set(&[1, 2]), set(&[0, 3]))
        );
        assert!(lab.pure_delta().is_empty());
        let lab = label_tree(&Graph::star(3)).unwrap();
        assert_eq!(
            (lab.alpha, lab.beta, lab.gamma, lab.delta),
            (set(&[1, 2, 3]), set(&[0]), set(&[1, 2, 3]), set(&[0]))
        );
        let lab = label_tree(&Graph::path(5)).unwrap();
        assert_eq!(lab.alpha, set(&[2]));
        assert!(lab.beta.union(lab.gamma).union(lab.delta).is_empty());
        assert!(matches!(label_tree(&Graph::cycle(4)), Err(Error::NotATree(_))));
    }

    #[test]
    fn labeling_is_stable_and_serializes() {
        let lab = label_tree(&Graph::path(4)).unwrap();
        assert_eq!(lab.step, vec![1, 1, 1, 1]);
        let json = serde_json::to_value(&lab).unwrap();
        assert_eq!(json[0]["labels"], serde_json::json!(["beta", "delta"]));
        assert_eq!(json[1]["labels"], serde_json::json!(["alpha", "gamma"]));
    }

    #[test]
    fn necessary_condition_examples() {
        let r = check_necessary_condition(&Graph::path(4)).unwrap();
        assert!(r.condition_a_holds && r.condition_b_holds);
        let r = check_necessary_condition(&Graph::path(2)).unwrap();
        assert!(r.condition_a_holds && r.condition_b_holds);
    }

    #[test]
    fn construction_examples() {
        let (u, trace) = construct_full_complexity_mis(&Graph::path(2), 0).unwrap();
        assert_eq!(u, set(&[0]));
        assert_eq!(trace.spec, set(&[1]));
        let (u, _) = construct_full_complexity_mis(&Graph::path(5), 0).unwrap();
        assert_eq!(u, set(&[0, 3]));
        assert!(matches!(construct_full_complexity_mis(&Graph::star(3), 1), Err(Error::Precondition(_))));
        assert!(matches!(construct_full_complexity_mis(&Graph::path(5), 2), Err(Error::NotALeaf(2))));
    }

    #[test]
    fn certificate_examples() {
        assert!(verify_specific_certificate(&Graph::path(5), set(&[0, 3]), set(&[1, 2])).unwrap());
        assert!(!verify_specific_certificate(&Graph::cycle(4), set(&[0, 2]), set(&[1])).unwrap());
        assert!(!verify_specific_certificate(&Graph::path(3), set(&[0, 2]), set(&[1])).unwrap());
        assert!(verify_specific_certificate(&Graph::path(3), set(&[0]), set(&[1])).is_err());
    }

    /// A spider whose last leg is chosen in Case 1 as a lone pendant vertex;
    /// its specific neighbor only comes from the closing rule.
    #[test]
    fn closing_rule_supplies_pendant_neighbors() {
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let (u, trace) = construct_full_complexity_mis(&t, 4).unwrap();
        assert_eq!(u, set(&[2, 4, 6]));
        assert_eq!(trace.closing, vec![(6, 3)]);
    }

    /// Without queueing the children of the α-vertices of a Case 1 group
    /// those children are never reached and the set is not maximal.
    #[test]
    fn literal_case_one_queue_leaves_vertices_undominated() {
        let t = crate::graph::parse_graph6("JqO`?_C?O@?").unwrap();
        let err = construct_with(&t, 9, CaseOneQueue::Literal).unwrap_err();
        assert!(matches!(err, Error::CertificateFailure(_)), "{err}");
        assert!(construct_with(&t, 9, CaseOneQueue::WithAlphaChildren).is_ok());
    }
}
