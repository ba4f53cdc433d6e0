//! Isomorphism classes of small graphs and trees.
//!
//! Graphs are grown one vertex at a time: every graph on `n` vertices is a
//! graph on `n - 1` vertices plus a vertex of minimum degree, so extending
//! each class by every neighborhood that keeps the new vertex of minimum
//! degree reaches every class. Duplicates are removed by a canonical code
//! computed with colour refinement and individualization.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonical codes pack the upper triangle into a `u128`.
pub const CANONICAL_MAX_VERTICES: usize = 16;

/// An isomorphism invariant that determines the graph up to isomorphism,
/// together with the vertex count.
pub fn canonical_code(g: &Graph) -> (usize, u128) {
    let n = g.n();
    assert!(n <= CANONICAL_MAX_VERTICES, "canonical codes support at most {CANONICAL_MAX_VERTICES} vertices");
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(g, &mut cells);
    let mut best = None;
    search(g, cells, &mut best);
    (n, best.unwrap_or(0))
}

/// The canonical representative: the graph relabeled so its code is read
/// off in vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    let (n, code) = canonical_code(g);
    from_code(n, code)
}

fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn from_code(n: usize, code: u128) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n).expect("within cap");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

/// Splits cells by neighbor counts into every cell until the partition is
/// equitable. New cells are ordered by their count signature, so the result
/// does not depend on vertex names.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| g.neighbors(v).intersection(*m).len()).collect(), v))
                .collect();
            keyed.sort();
            let mut prev: Option<&Vec<usize>> = None;
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for (key, v) in &keyed {
                if prev == Some(key) {
                    groups.last_mut().unwrap().push(*v);
                } else {
                    groups.push(vec![*v]);
                }
                prev = Some(key);
            }
            changed |= groups.len() > 1;
            next.extend(groups);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    let cell = &cells[target];
    for (i, &v) in cell.iter().enumerate() {
        // swapping twins in one cell is an automorphism fixing the
        // partition, so only the first of each twin class is explored
        let twin = cell[..i].iter().any(|&u| g.neighbors(u).without(v) == g.neighbors(v).without(u));
        if twin {
            continue;
        }
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical form, sorted by canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(graph_layers(n)?.pop().unwrap())
}

/// `layers[k]` holds the classes on `k` vertices for `k = 0..=n`.
pub fn graph_layers(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n > 10 {
        return Err(Error::TooLarge(format!("graph census limited to 10 vertices, asked for {n}")));
    }
    let mut layers = vec![vec![Graph::empty(0)?]];
    for _ in 0..n {
        let next = extend_layer(layers.last().unwrap());
        layers.push(next);
    }
    Ok(layers)
}

fn extend_layer(prev: &[Graph]) -> Vec<Graph> {
    let codes: Vec<u128> = prev
        .par_iter()
        .flat_map_iter(|g| {
            let m = g.n();
            let mut found = Vec::new();
            for bits in 0u128..1 << m {
                let s = VertexSet::from_bits(bits);
                let d = s.len();
                // the new vertex must have minimum degree
                if (0..m).any(|x| g.degree(x) + usize::from(s.contains(x)) < d) {
                    continue;
                }
                let h = g.with_vertex(s).expect("within cap");
                found.push(canonical_code(&h).1);
            }
            found
        })
        .collect();
    let n = prev.first().map_or(1, |g| g.n() + 1);
    let mut unique: Vec<u128> = codes.into_iter().collect::<HashSet<_>>().into_iter().collect();
    unique.sort_unstable();
    unique.into_iter().map(|c| from_code(n, c)).collect()
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(|g| g.is_connected()).collect())
}

/// Connected regular graphs on `n <= 10` vertices. Order 10 is built from
/// the order-9 classes: deleting a vertex of an `r`-regular graph leaves `r`
/// vertices of degree `r - 1` and the rest of degree `r`.
pub fn connected_regular_graphs(n: usize) -> Result<Vec<Graph>> {
    if n <= 9 {
        return Ok(connected_graphs(n)?.into_iter().filter(|g| g.regularity().is_some()).collect());
    }
    if n > 10 {
        return Err(Error::TooLarge(format!("regular census limited to 10 vertices, asked for {n}")));
    }
    let base = all_graphs(n - 1)?;
    let mut codes: Vec<u128> = base
        .par_iter()
        .flat_map_iter(|g| {
            let top = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
            // an (n - 1)-regular graph minus a vertex is regular of degree
            // n - 2, so the degree r is either the maximum or one above it
            [top, top + 1].into_iter().filter_map(move |r| {
                let low: VertexSet = (0..g.n()).filter(|&v| g.degree(v) + 1 == r).collect();
                let ok = r > 0 && low.len() == r && (0..g.n()).all(|v| low.contains(v) || g.degree(v) == r);
                if !ok {
                    return None;
                }
                let h = g.with_vertex(low).expect("within cap");
                h.is_connected().then(|| canonical_code(&h).1)
            })
        })
        .collect();
    codes.sort_unstable();
    codes.dedup();
    Ok(codes.into_iter().map(|c| from_code(n, c)).collect())
}

/// Free trees on `n` vertices, one per isomorphism class, in a canonical
/// labeling (breadth-first from a center).
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    Ok(tree_layers(n)?.pop().unwrap())
}

/// `layers[k]` holds the trees on `k` vertices for `k = 0..=n`.
pub fn tree_layers(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n > 20 {
        return Err(Error::TooLarge(format!("tree census limited to 20 vertices, asked for {n}")));
    }
    let mut layers: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)?]];
    if n >= 1 {
        layers.push(vec![Graph::empty(1)?]);
    }
    for _ in 2..=n {
        let prev = layers.last().unwrap();
        let mut seen: Vec<(String, Graph)> = prev
            .iter()
            .flat_map(|t| {
                (0..t.n()).map(move |v| {
                    let grown = t.with_vertex(VertexSet::singleton(v)).expect("within cap");
                    tree_canonical(&grown)
                })
            })
            .collect();
        seen.sort_by(|a, b| a.0.cmp(&b.0));
        seen.dedup_by(|a, b| a.0 == b.0);
        layers.push(seen.into_iter().map(|(_, t)| t).collect());
    }
    Ok(layers)
}

/// Canonical string of a tree (rooted at its center, or the smaller of the
/// two center-rooted strings) and the tree relabeled in breadth-first order
/// of that rooting with children in canonical order.
pub fn tree_canonical(t: &Graph) -> (String, Graph) {
    let centers = tree_centers(t);
    let mut best: Option<(String, usize)> = None;
    for &c in &centers {
        let s = rooted_code(t, c, None);
        if best.as_ref().is_none_or(|(b, _)| s < *b) {
            best = Some((s, c));
        }
    }
    let (code, root) = best.expect("non-empty tree");
    (code, relabel_bfs(t, root))
}

fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for u in t.neighbors(v) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> =
        t.neighbors(v).iter().filter(|&u| Some(u) != parent).map(|u| rooted_code(t, u, Some(v))).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn relabel_bfs(t: &Graph, root: usize) -> Graph {
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; t.n()];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let mut kids: Vec<(String, usize)> =
            t.neighbors(v).iter().filter(|&u| u != parent[v]).map(|u| (rooted_code(t, u, Some(v)), u)).collect();
        kids.sort();
        for (_, u) in kids {
            parent[u] = v;
            order.push(u);
        }
        i += 1;
    }
    let mut perm = vec![0; t.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    t.permuted(&perm)
}

/// All labeled graphs on `n <= 7` vertices in order of their edge masks,
/// without isomorphism reduction.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(Error::TooLarge(format!("labeled enumeration limited to 7 vertices, asked for {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::empty(n).expect("within cap");
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_invariant_under_relabeling() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        assert_ne!(canonical_code(&Graph::path(6)), canonical_code(&g));
        let p = canonical_form(&g);
        assert_eq!(canonical_code(&p), canonical_code(&g));
        assert_eq!(p.edge_count(), g.edge_count());
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = graph_layers(5).unwrap().iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        let counts: Vec<usize> = tree_layers(8).unwrap().iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn trees_are_trees() {
        for t in trees(7).unwrap() {
            assert!(t.is_tree());
        }
    }
}
