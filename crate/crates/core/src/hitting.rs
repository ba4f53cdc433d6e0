//! Minimum hitting sets over a bitset ground set.
//!
//! Both minimum recognizing sets and minimum set covers reduce to this: pick
//! the fewest ground elements so that every constraint set contains at least
//! one of them. Among minimum solutions the lexicographically smallest sorted
//! element list is returned, so results are reproducible across strategies.

use crate::bitset::{find_k_subset, VertexSet};

/// Ground sets up to this size are solved by size-ordered subset search.
pub const ITERATIVE_DEEPENING_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExactStrategy {
    /// Iterative deepening for small ground sets, branch and bound otherwise.
    #[default]
    Auto,
    IterativeDeepening,
    BranchAndBound,
}

#[derive(Debug, Clone)]
pub struct HittingSet {
    ground: VertexSet,
    constraints: Vec<VertexSet>,
}

const SUPERSET_PRUNE_LIMIT: usize = 4096;

impl HittingSet {
    /// Constraints are clipped to `ground`. Duplicates and supersets of
    /// other constraints are dropped, which leaves the solution set unchanged.
    pub fn new(ground: VertexSet, constraints: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut cs: Vec<VertexSet> = constraints.into_iter().map(|c| c.intersection(ground)).collect();
        cs.sort_by_key(|c| (c.len(), c.bits()));
        cs.dedup();
        if cs.len() <= SUPERSET_PRUNE_LIMIT {
            let mut kept: Vec<VertexSet> = Vec::with_capacity(cs.len());
            for c in cs {
                if !kept.iter().any(|k| k.is_subset(c)) {
                    kept.push(c);
                }
            }
            cs = kept;
        }
        HittingSet { ground, constraints: cs }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn constraints(&self) -> &[VertexSet] {
        &self.constraints
    }

    pub fn is_feasible(&self) -> bool {
        self.constraints.iter().all(|c| !c.is_empty())
    }

    pub fn is_hitting(&self, s: VertexSet) -> bool {
        self.constraints.iter().all(|c| c.intersects(s))
    }

    /// Repeatedly takes the element hitting the most open constraints,
    /// smallest index on ties. An upper bound only.
    pub fn greedy(&self) -> Option<VertexSet> {
        if !self.is_feasible() {
            return None;
        }
        let mut chosen = VertexSet::EMPTY;
        let mut open: Vec<VertexSet> = self.constraints.clone();
        while !open.is_empty() {
            let mut best = (0usize, usize::MAX);
            for x in self.ground.difference(chosen) {
                let hits = open.iter().filter(|c| c.contains(x)).count();
                if hits > best.0 {
                    best = (hits, x);
                }
            }
            chosen.insert(best.1);
            open.retain(|c| !c.contains(best.1));
        }
        Some(chosen)
    }

    /// Minimum hitting set, lexicographically smallest among minimum ones.
    pub fn minimum(&self, strategy: ExactStrategy) -> Option<VertexSet> {
        if !self.is_feasible() {
            return None;
        }
        if self.constraints.is_empty() {
            return Some(VertexSet::EMPTY);
        }
        let use_id = match strategy {
            ExactStrategy::Auto => self.ground.len() <= ITERATIVE_DEEPENING_LIMIT,
            ExactStrategy::IterativeDeepening => true,
            ExactStrategy::BranchAndBound => false,
        };
        if use_id {
            Some(self.iterative_deepening())
        } else {
            let size = self.branch_and_bound_size();
            Some(self.lex_min_of_size(size))
        }
    }

    /// Is there a hitting set `H` with `required ⊆ H ⊆ required ∪ allowed`
    /// and `|H \ required| <= budget`?
    pub fn exists(&self, required: VertexSet, allowed: VertexSet, budget: usize) -> bool {
        let open: Vec<VertexSet> =
            self.constraints.iter().filter(|c| !c.intersects(required)).map(|c| c.intersection(allowed)).collect();
        decide(&open, budget)
    }

    fn iterative_deepening(&self) -> VertexSet {
        let lower = packing_bound(&self.constraints);
        for k in lower..=self.ground.len() {
            if k <= 3 {
                // shallow levels: plain enumeration is as fast as the search
                if let Some(s) = find_k_subset(self.ground, k, |s| self.is_hitting(s)) {
                    return s;
                }
                continue;
            }
            let mut out = None;
            if self.id_step(VertexSet::EMPTY, None, k, &mut out) {
                return out.unwrap();
            }
        }
        unreachable!("a feasible instance is hit by its whole ground set")
    }

    /// Extends `chosen` (all elements `<= last`) by `remaining` larger
    /// elements, trying candidates in increasing order.
    fn id_step(&self, chosen: VertexSet, last: Option<usize>, remaining: usize, out: &mut Option<VertexSet>) -> bool {
        let future = match last {
            Some(l) => self.ground.above(l),
            None => self.ground,
        };
        let open: Vec<VertexSet> =
            self.constraints.iter().filter(|c| !c.intersects(chosen)).map(|c| c.intersection(future)).collect();
        let Some(first) = open.first() else {
            *out = Some(chosen);
            return true;
        };
        if remaining == 0 || open.iter().any(|c| c.is_empty()) {
            return false;
        }
        if packing_bound(&open) > remaining {
            return false;
        }
        // Every later pick is larger than the next one, so the first open
        // constraint must be hit by a pick no larger than its maximum.
        let limit = first.max().unwrap();
        for x in future {
            if x > limit {
                break;
            }
            if self.id_step(chosen.with(x), Some(x), remaining - 1, out) {
                return true;
            }
        }
        false
    }

    fn branch_and_bound_size(&self) -> usize {
        let upper = self.greedy().expect("feasible").len();
        let mut best = upper;
        bnb(&self.constraints, 0, &mut best);
        best
    }

    fn lex_min_of_size(&self, k: usize) -> VertexSet {
        let mut chosen = VertexSet::EMPTY;
        let mut candidates = self.ground;
        for slot in 0..k {
            let budget = k - slot - 1;
            let x = candidates
                .iter()
                .find(|&x| self.exists(chosen.with(x), self.ground.above(x), budget))
                .expect("a solution of size k exists");
            chosen.insert(x);
            candidates = self.ground.above(x);
        }
        debug_assert!(self.is_hitting(chosen) && chosen.len() == k);
        chosen
    }
}

/// Greedy disjoint packing of constraints: each member needs its own element.
fn packing_bound(open: &[VertexSet]) -> usize {
    let mut used = VertexSet::EMPTY;
    let mut count = 0;
    let mut order: Vec<&VertexSet> = open.iter().collect();
    order.sort_by_key(|c| c.len());
    for c in order {
        if !c.intersects(used) {
            used = used.union(*c);
            count += 1;
        }
    }
    count
}

fn smallest(open: &[VertexSet]) -> VertexSet {
    *open.iter().min_by_key(|c| c.len()).unwrap()
}

/// Shrinks `best` whenever a hitting set with fewer than `best` elements
/// exists below this node.
fn bnb(open: &[VertexSet], depth: usize, best: &mut usize) {
    if open.is_empty() {
        *best = (*best).min(depth);
        return;
    }
    if depth + packing_bound(open) >= *best {
        return;
    }
    let branch = smallest(open);
    let mut excluded = VertexSet::EMPTY;
    for x in branch {
        let next: Vec<VertexSet> = open.iter().filter(|c| !c.contains(x)).map(|c| c.difference(excluded)).collect();
        if next.iter().all(|c| !c.is_empty()) {
            bnb(&next, depth + 1, best);
        }
        excluded.insert(x);
    }
}

fn decide(open: &[VertexSet], budget: usize) -> bool {
    if open.is_empty() {
        return true;
    }
    if budget == 0 || open.iter().any(|c| c.is_empty()) || packing_bound(open) > budget {
        return false;
    }
    let branch = smallest(open);
    let mut excluded = VertexSet::EMPTY;
    for x in branch {
        let next: Vec<VertexSet> = open.iter().filter(|c| !c.contains(x)).map(|c| c.difference(excluded)).collect();
        if decide(&next, budget - 1) {
            return true;
        }
        excluded.insert(x);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Exhaustive oracle: scan every subset of the ground set by size, then
    /// by sorted element list.
    fn brute_force(ground: VertexSet, cs: &[VertexSet]) -> Option<VertexSet> {
        let elems = ground.to_vec();
        let mut all: Vec<VertexSet> = (0u64..1 << elems.len())
            .map(|mask| elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
            .collect();
        all.sort_by(|a: &VertexSet, b| a.len().cmp(&b.len()).then(a.to_vec().cmp(&b.to_vec())));
        all.into_iter().find(|s| cs.iter().all(|c| c.intersects(*s)))
    }

    #[test]
    fn small_examples() {
        let h = HittingSet::new(set(&[0, 1, 2]), [set(&[0, 1]), set(&[1, 2]), set(&[2])]);
        assert_eq!(h.minimum(ExactStrategy::Auto), Some(set(&[0, 2])));
        assert_eq!(h.minimum(ExactStrategy::BranchAndBound), Some(set(&[0, 2])));
        let none = HittingSet::new(set(&[0, 1]), []);
        assert_eq!(none.minimum(ExactStrategy::Auto), Some(VertexSet::EMPTY));
        let infeasible = HittingSet::new(set(&[0, 1]), [set(&[2])]);
        assert_eq!(infeasible.minimum(ExactStrategy::Auto), None);
        assert_eq!(infeasible.greedy(), None);
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // {0,3} and {1,2} both hit; {0,3} sorts first
        let h = HittingSet::new(set(&[0, 1, 2, 3]), [set(&[0, 1]), set(&[2, 3]), set(&[0, 2]), set(&[1, 3])]);
        let want = brute_force(h.ground(), h.constraints());
        assert_eq!(h.minimum(ExactStrategy::IterativeDeepening), want);
        assert_eq!(h.minimum(ExactStrategy::BranchAndBound), want);
    }

    fn arb_instance() -> impl Strategy<Value = (VertexSet, Vec<VertexSet>)> {
        (1usize..=12).prop_flat_map(|n| {
            let ground = VertexSet::full(n);
            let bits = 1u128 << n;
            (Just(ground), proptest::collection::vec((1u128..bits).prop_map(VertexSet::from_bits), 0..10))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn strategies_agree_with_exhaustive_search((ground, cs) in arb_instance()) {
            let h = HittingSet::new(ground, cs.clone());
            let want = brute_force(ground, &cs);
            prop_assert_eq!(h.minimum(ExactStrategy::IterativeDeepening), want);
            prop_assert_eq!(h.minimum(ExactStrategy::BranchAndBound), want);
            if let (Some(g), Some(w)) = (h.greedy(), want) {
                prop_assert!(h.is_hitting(g));
                prop_assert!(g.len() >= w.len());
            }
        }
    }
}
