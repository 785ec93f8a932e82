use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::foundations::{FiniteSet, Label};
use crate::foundations::permutations;
use crate::trees::{PlanarRootedTree, RootedTree, Shape};

/// Every non-planar rooted tree on `vertices`, sorted.
///
/// Pairs (Prüfer sequence, root) are in bijection with rooted trees, so each
/// tree is produced exactly once.
pub fn rooted_trees<V: Ord + Clone + Debug>(vertices: &[V]) -> Vec<RootedTree<V>> {
    let n = vertices.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let codes = n.saturating_sub(2);
    let total = n.pow(codes as u32);
    for code in 0..total {
        let mut c = code;
        let seq: Vec<usize> = (0..codes)
            .map(|_| {
                let d = c % n;
                c /= n;
                d
            })
            .collect();
        let adjacency = prufer_decode(n, &seq);
        for root in 0..n {
            let parent = orient(&adjacency, root)
                .into_iter()
                .map(|(c, p)| (vertices[c].clone(), vertices[p].clone()))
                .collect();
            out.push(RootedTree::from_parts_unchecked(vertices[root].clone(), parent));
        }
    }
    out.sort();
    out
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<Vec<usize>> {
    let mut adjacency = vec![Vec::new(); n];
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut link = |a: usize, b: usize| {
        adjacency[a].push(b);
        adjacency[b].push(a);
    };
    for &x in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("a Prüfer sequence always leaves a leaf");
        link(leaf, x);
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    if let [a, b] = last[..] {
        link(a, b);
    }
    adjacency
}

fn orient(adjacency: &[Vec<usize>], root: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, from)) = stack.pop() {
        for &w in adjacency[v].iter().filter(|&&w| w != from) {
            out.push((w, v));
            stack.push((w, v));
        }
    }
    out
}

/// Every planar rooted shape with `n` vertices, in a fixed order.
pub fn shapes(n: usize) -> Vec<Shape> {
    if n == 0 {
        return Vec::new();
    }
    shape_forests(n - 1).into_iter().map(Shape).collect()
}

fn shape_forests(n: usize) -> Vec<Vec<Shape>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let tails = shape_forests(n - k);
        for first in shapes(k) {
            for tail in &tails {
                let mut f = vec![first.clone()];
                f.extend(tail.iter().cloned());
                out.push(f);
            }
        }
    }
    out
}

/// Every planar rooted tree on `vertices`, sorted.
///
/// Planar trees have no automorphisms, so labeling every shape by every
/// ordering of the vertices gives each tree once.
pub fn planar_rooted_trees<V: Ord + Clone + Debug>(vertices: &[V]) -> Vec<PlanarRootedTree<V>> {
    fn place<V: Ord + Clone>(s: &Shape, labels: &mut std::slice::Iter<'_, V>, children: &mut BTreeMap<V, Vec<V>>) -> V {
        let me = labels.next().expect("one label per vertex").clone();
        let kids = s.0.iter().map(|c| place(c, labels, children)).collect();
        children.insert(me.clone(), kids);
        me
    }
    let mut out = Vec::new();
    let all = shapes(vertices.len());
    for order in permutations(vertices) {
        for shape in &all {
            let mut children = BTreeMap::new();
            let root = place(shape, &mut order.iter(), &mut children);
            out.push(PlanarRootedTree::from_parts_unchecked(root, children));
        }
    }
    out.sort();
    out
}

/// Basis of the rooted-tree species on `set`.
pub fn enumerate_rooted_trees(set: &FiniteSet) -> Result<Vec<RootedTree<Label>>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(rooted_trees(&set.labels()))
}

/// Basis of the planar rooted-tree species on `set`.
pub fn enumerate_planar_rooted_trees(set: &FiniteSet) -> Result<Vec<PlanarRootedTree<Label>>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(planar_rooted_trees(&set.labels()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA: [&str; 6] = ["1", "2", "3", "4", "5", "6"];

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_rooted_trees(&FiniteSet::of(&["1"])).unwrap().len(), 1);
        assert_eq!(enumerate_rooted_trees(&FiniteSet::of(&["1", "2"])).unwrap().len(), 2);
        assert_eq!(enumerate_rooted_trees(&FiniteSet::of(&["1", "2", "3"])).unwrap().len(), 9);
        assert_eq!(enumerate_planar_rooted_trees(&FiniteSet::of(&["1"])).unwrap().len(), 1);
        assert_eq!(enumerate_planar_rooted_trees(&FiniteSet::of(&["1", "2"])).unwrap().len(), 2);
        assert_eq!(enumerate_planar_rooted_trees(&FiniteSet::of(&["1", "2", "3"])).unwrap().len(), 12);
    }

    #[test]
    fn larger_counts() {
        assert_eq!(rooted_trees(&ALPHA).len(), 6usize.pow(5));
        assert_eq!(planar_rooted_trees(&ALPHA[..5]).len(), 120 * 14);
        assert_eq!(shapes(6).len(), 42);
    }

    #[test]
    fn empty_set_is_rejected() {
        assert_eq!(enumerate_rooted_trees(&FiniteSet::empty()), Err(Error::EmptySet));
        assert_eq!(enumerate_planar_rooted_trees(&FiniteSet::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn no_duplicates_up_to_five() {
        for n in 1..=5 {
            let set = FiniteSet::of(&ALPHA[..n]);
            let mut t = enumerate_rooted_trees(&set).unwrap();
            let len = t.len();
            t.dedup();
            assert_eq!(t.len(), len);
            let mut p = enumerate_planar_rooted_trees(&set).unwrap();
            let len = p.len();
            p.dedup();
            assert_eq!(p.len(), len);
        }
    }

    #[test]
    fn three_vertex_display_matches_the_basis_list() {
        let got: Vec<String> = enumerate_rooted_trees(&FiniteSet::of(&["1", "2", "3"]))
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut want = vec![
            "1(2(3))", "2(1(3))", "1(3(2))", "3(1(2))", "2(3(1))", "3(2(1))", "1(2,3)", "2(1,3)", "3(1,2)",
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        want.sort();
        assert_eq!(got_sorted, want);
    }
}
