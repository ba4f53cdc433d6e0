//! Maximal independent sets and maximal matchings.

use crate::bitset::VertexSet;
use crate::clutter::{sort_edges, Clutter};
use crate::error::{Error, Result};
use crate::graph::{try_line_graph, EdgeIndexMap, Graph};
use crate::limits::Limits;

/// The clutter `U_G` of maximal independent sets, in lexicographic order.
pub fn maximal_independent_sets(g: &Graph) -> Result<Clutter> {
    maximal_independent_sets_with(g, &Limits::default())
}

pub fn maximal_independent_sets_with(g: &Graph, limits: &Limits) -> Result<Clutter> {
    limits.check_vertices(g.n())?;
    let all = g.vertices();
    let non_adj: Vec<VertexSet> = (0..g.n()).map(|v| all.difference(g.neighbors(v)).without(v)).collect();
    let mut out = Vec::new();
    expand(&non_adj, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut out, limits.enum_cap)?;
    Ok(Clutter::from_sorted_unchecked(g.n(), sort_edges(out), Some(g.clone())))
}

/// Pivoted Bron–Kerbosch on the complement: `r` is independent, `p` holds
/// vertices that may still join, `x` those already explored.
fn expand(
    non_adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
    cap: usize,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() == cap {
                return Err(Error::EnumerationCap { cap, found: out.len() + 1 });
            }
            out.push(r);
        }
        return Ok(());
    }
    let pivot = p.union(x).iter().max_by_key(|&u| (p.intersection(non_adj[u]).len(), std::cmp::Reverse(u))).unwrap();
    for v in p.difference(non_adj[pivot]) {
        expand(non_adj, r.with(v), p.intersection(non_adj[v]), x.intersection(non_adj[v]), out, cap)?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Adds the smallest-index eligible vertex until `s` is maximal.
pub fn extend_to_maximal_independent(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    if let Some(v) = s.difference(g.vertices()).min() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if let Some((u, v)) = g.conflicting_pair(s) {
        return Err(Error::NotIndependent { set: s, u, v });
    }
    let mut u = s;
    for v in 0..g.n() {
        if !u.contains(v) && !g.neighbors(v).intersects(u) {
            u.insert(v);
        }
    }
    Ok(u)
}

/// Maximal matchings as independent sets of the line graph; edge indices
/// refer to the returned map.
pub fn maximal_matchings(g: &Graph) -> Result<(Clutter, EdgeIndexMap)> {
    maximal_matchings_with(g, &Limits::default())
}

pub fn maximal_matchings_with(g: &Graph, limits: &Limits) -> Result<(Clutter, EdgeIndexMap)> {
    let (lg, map) = try_line_graph(g)?;
    Ok((maximal_independent_sets_with(&lg, limits)?, map))
}

/// Vertex sets of all maximal cliques.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(maximal_independent_sets(&g.complement())?.edges().to_vec())
}

/// All maximum cliques and the clique number.
pub fn maximum_cliques(g: &Graph) -> Result<(usize, Vec<VertexSet>)> {
    let cliques = maximal_cliques(g)?;
    let omega = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
    Ok((omega, cliques.into_iter().filter(|c| c.len() == omega).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lists(l: &Clutter) -> Vec<Vec<usize>> {
        l.edges().iter().map(|e| e.to_vec()).collect()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn mis_examples() {
        assert_eq!(lists(&maximal_independent_sets(&Graph::cycle(4)).unwrap()), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(lists(&maximal_independent_sets(&Graph::complete(3)).unwrap()), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(lists(&maximal_independent_sets(&Graph::path(3)).unwrap()), vec![vec![0, 2], vec![1]]);
        assert_eq!(lists(&maximal_independent_sets(&Graph::empty(0).unwrap()).unwrap()), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn cap_is_an_error() {
        let limits = Limits { enum_cap: 3, ..Limits::default() };
        let err = maximal_independent_sets_with(&Graph::complete(5), &limits).unwrap_err();
        assert_eq!(err, Error::EnumerationCap { cap: 3, found: 4 });
        assert!(maximal_independent_sets_with(&Graph::complete(3), &limits).is_ok());
    }

    #[test]
    fn matching_examples() {
        let (l, map) = maximal_matchings(&Graph::path(3)).unwrap();
        assert_eq!(lists(&l), vec![vec![0], vec![1]]);
        assert_eq!(map.edges(), &[(0, 1), (1, 2)]);
        let (l, map) = maximal_matchings(&Graph::complete(4)).unwrap();
        assert_eq!(l.len(), 3);
        for &m in l.edges() {
            assert_eq!(map.covered(m), VertexSet::full(4));
        }
    }

    /// Brute force over all edge subsets of C_7.
    #[test]
    fn c7_has_seven_maximal_matchings_of_size_three() {
        let g = Graph::cycle(7);
        let edges = g.edges();
        let mut want = Vec::new();
        for mask in 0u32..1 << edges.len() {
            let chosen: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).collect();
            let covered: VertexSet = chosen.iter().flat_map(|&i| [edges[i].0, edges[i].1]).collect();
            if covered.len() != 2 * chosen.len() {
                continue;
            }
            let maximal = edges.iter().all(|&(u, v)| covered.contains(u) || covered.contains(v));
            if maximal {
                want.push(chosen);
            }
        }
        want.sort();
        let (l, _) = maximal_matchings(&g).unwrap();
        assert_eq!(lists(&l), want);
        assert_eq!(want.len(), 7);
        assert!(want.iter().all(|m| m.len() == 3));
    }

    #[test]
    fn extension_examples() {
        assert_eq!(extend_to_maximal_independent(&Graph::cycle(4), set(&[0])).unwrap(), set(&[0, 2]));
        assert_eq!(extend_to_maximal_independent(&Graph::complete(3), set(&[1])).unwrap(), set(&[1]));
        assert_eq!(extend_to_maximal_independent(&Graph::path(5), VertexSet::EMPTY).unwrap(), set(&[0, 2, 4]));
        assert!(Graph::path(5).is_maximal_independent(set(&[0, 2, 4])));
        assert!(matches!(
            extend_to_maximal_independent(&Graph::path(3), set(&[0, 1])),
            Err(Error::NotIndependent { u: 0, v: 1, .. })
        ));
    }

    #[test]
    fn cliques() {
        let (omega, qs) = maximum_cliques(&Graph::cycle(5)).unwrap();
        assert_eq!(omega, 2);
        assert_eq!(qs.len(), 5);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=11, any::<u64>()).prop_map(|(n, seed)| {
            let mut g = Graph::empty(n).unwrap();
            let mut s = seed;
            for u in 0..n {
                for v in u + 1..n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    }

    /// All maximal independent sets by scanning every vertex subset.
    fn brute_mis(g: &Graph) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> =
            (0u128..1 << g.n()).map(VertexSet::from_bits).filter(|&s| g.is_maximal_independent(s)).collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(g in arb_graph()) {
            let l = maximal_independent_sets(&g).unwrap();
            prop_assert_eq!(l.edges(), &brute_mis(&g)[..]);
            // every vertex lies in some maximal independent set
            prop_assert_eq!(l.union(), g.vertices());
        }

        #[test]
        fn extension_lands_in_the_clutter(g in arb_graph(), mask in any::<u128>()) {
            let l = maximal_independent_sets(&g).unwrap();
            // shrink a random set to an independent one
            let mut s = VertexSet::EMPTY;
            for v in VertexSet::from_bits(mask).intersection(g.vertices()) {
                if !g.neighbors(v).intersects(s) {
                    s.insert(v);
                }
            }
            let u = extend_to_maximal_independent(&g, s).unwrap();
            prop_assert!(s.is_subset(u));
            prop_assert!(l.index_of(u).is_some());
        }
    }
}
