//! Class counts against published enumerations (OEIS A000088, A001349,
//! A005177, A000055).

use clutter_complexity::census::{connected_regular_graphs, graph_layers, tree_layers};

#[test]
fn graph_counts_through_nine_vertices() {
    let layers = graph_layers(9).unwrap();
    let all: Vec<usize> = layers[1..].iter().map(|l| l.len()).collect();
    assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044, 12346, 274668]);
    let connected: Vec<usize> = layers[1..].iter().map(|l| l.iter().filter(|g| g.is_connected()).count()).collect();
    assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853, 11117, 261080]);
}

#[test]
fn connected_regular_counts_through_ten_vertices() {
    let counts: Vec<usize> = (1..=10).map(|n| connected_regular_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 2, 5, 4, 17, 22, 167]);
}

#[test]
fn tree_counts_through_fourteen_vertices() {
    let layers = tree_layers(14).unwrap();
    let counts: Vec<usize> = layers[1..].iter().map(|l| l.len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]);
    for t in layers.iter().flatten().skip(1) {
        assert!(t.is_tree());
    }
}
