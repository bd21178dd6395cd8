use std::collections::BTreeSet;

use nsg_core::{enumerate, export_tree, ProblemInstance, TreeOptions};

fn inst(a: &[u64], b: &[u64], x: &[u64], g: u64, r: u64) -> ProblemInstance {
    ProblemInstance::new(a.to_vec(), b.to_vec(), x.to_vec(), g, r).unwrap()
}

fn level(tree: &nsg_core::VarietyTree, k: usize) -> Vec<Vec<u64>> {
    tree.level(k)
        .iter()
        .map(|n| n.semigroup.msg().to_vec())
        .collect()
}

#[test]
fn subtree_below_ordinary_four() {
    let i = inst(&[1, 2], &[4, 1], &[5], 0, 3);
    let tree = enumerate(&i, 6, &TreeOptions::default()).unwrap();
    let got: BTreeSet<Vec<u64>> = tree
        .nodes()
        .iter()
        .map(|n| n.semigroup.msg().to_vec())
        .collect();
    let expected: BTreeSet<Vec<u64>> = [
        &[4, 5, 6, 7][..],
        &[5, 6, 7, 8, 9],
        &[4, 5, 7],
        &[4, 5, 6],
        &[5, 7, 8, 9, 11],
        &[5, 6, 8, 9],
        &[5, 6, 7, 9],
        &[4, 5, 11],
        &[5, 8, 9, 11, 12],
        &[5, 7, 9, 11, 13],
        &[5, 6, 9, 13],
        &[5, 9, 11, 12, 13],
        &[5, 9, 11, 13, 17],
    ]
    .iter()
    .map(|v| v.to_vec())
    .collect();
    assert_eq!(got, expected);
    assert_eq!(tree.node_count(), 13);
    assert_eq!(tree.level_sizes(), vec![1, 3, 4, 3, 1, 1]);

    let dot = export_tree(&i, 6, &TreeOptions::default()).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 12);
    assert!(dot.starts_with("digraph variety {\n  \"<4,5,6,7>\";\n"));
}

#[test]
fn offset_three_levels() {
    let tree = enumerate(
        &inst(&[2, 3], &[4, 2], &[6, 8], 4, 3),
        4,
        &TreeOptions::default(),
    )
    .unwrap();
    assert_eq!(level(&tree, 0), vec![vec![4, 5, 6, 7]]);
    assert_eq!(
        level(&tree, 1),
        vec![vec![5, 6, 7, 8, 9], vec![4, 6, 7, 9], vec![4, 5, 6]]
    );
    assert_eq!(
        level(&tree, 3),
        vec![
            vec![6, 8, 9, 10, 11, 13],
            vec![6, 7, 8, 10, 11],
            vec![6, 7, 8, 9, 11],
            vec![6, 7, 8, 9, 10],
            vec![5, 6, 8],
            vec![4, 6, 11, 13],
            vec![4, 6, 9],
        ]
    );
    assert_eq!(
        level(&tree, 4),
        vec![
            vec![6, 8, 10, 11, 13, 15],
            vec![6, 8, 9, 11, 13],
            vec![6, 8, 9, 10, 13],
            vec![6, 8, 9, 10, 11],
            vec![6, 7, 8, 11],
            vec![6, 7, 8, 10],
            vec![6, 7, 8, 9],
            vec![4, 6, 13, 15],
            vec![4, 6, 11],
        ]
    );
}

#[test]
fn infinite_variety_first_levels() {
    let tree = enumerate(
        &inst(&[2, 3], &[4, 2], &[6, 8], 4, 0),
        4,
        &TreeOptions::default(),
    )
    .unwrap();
    assert_eq!(level(&tree, 2), vec![vec![3, 4, 5], vec![2, 5]]);
    assert_eq!(
        level(&tree, 3),
        vec![vec![4, 5, 6, 7], vec![3, 5, 7], vec![3, 4], vec![2, 7]]
    );
    let leaves: BTreeSet<Vec<u64>> = level(&tree, 4).into_iter().collect();
    let expected: BTreeSet<Vec<u64>> = [
        &[5, 6, 7, 8, 9][..],
        &[4, 6, 7, 9],
        &[4, 5, 6],
        &[3, 7, 8],
        &[3, 5],
        &[2, 9],
    ]
    .iter()
    .map(|v| v.to_vec())
    .collect();
    assert_eq!(leaves, expected);
}
