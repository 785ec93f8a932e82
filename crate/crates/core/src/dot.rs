//! Graphviz output. Roots are drawn at the bottom (`rankdir=BT`); planar
//! trees keep their child order through `ordering=out`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::foundations::LinComb;
use crate::trees::{PlanarRootedTree, RootedTree, Tree};

/// Values that can be drawn as a single DOT digraph.
pub trait ToDot {
    fn to_dot(&self, name: &str, caption: &str) -> String;
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Draws any tree, naming vertices with `label`.
pub fn tree_to_dot<V: Ord + Clone, T: Tree<V>>(tree: &T, name: &str, caption: &str, label: impl Fn(&V) -> String) -> String {
    let vertices = tree.vertex_list();
    let ids: BTreeMap<&V, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
    out.push_str("  rankdir=BT;\n");
    if tree.is_planar() {
        out.push_str("  ordering=out;\n");
    }
    if !caption.is_empty() {
        let _ = writeln!(out, "  label=\"{}\";", escape(caption));
    }
    for v in &vertices {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", ids[v], escape(&label(v)));
    }
    let children = tree.child_lists();
    // edges listed in pre-order so that ordering=out sees the planar order
    let mut stack = vec![tree.root().clone()];
    while let Some(v) = stack.pop() {
        let kids = &children[&v];
        for c in kids {
            let _ = writeln!(out, "  n{} -> n{};", ids[&v], ids[c]);
        }
        stack.extend(kids.iter().rev().cloned());
    }
    out.push_str("}\n");
    out
}

impl<V: Ord + Clone + std::fmt::Debug + std::fmt::Display> ToDot for RootedTree<V> {
    fn to_dot(&self, name: &str, caption: &str) -> String {
        tree_to_dot(self, name, caption, |v| v.to_string())
    }
}

impl<V: Ord + Clone + std::fmt::Debug + std::fmt::Display> ToDot for PlanarRootedTree<V> {
    fn to_dot(&self, name: &str, caption: &str) -> String {
        tree_to_dot(self, name, caption, |v| v.to_string())
    }
}

/// One digraph per term, captioned with the coefficient.
pub fn lincomb_to_dot<B: Ord + Clone + ToDot>(x: &LinComb<B>, prefix: &str) -> String {
    x.iter()
        .enumerate()
        .map(|(i, (b, c))| b.to_dot(&format!("{prefix}{i}"), &c.to_string()))
        .collect()
}
