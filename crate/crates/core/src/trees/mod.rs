//! Non-planar rooted trees, planar rooted trees and planar binary trees.

mod binary;
mod enumerate;
mod expr;
mod planar;
mod rooted;

use std::collections::BTreeMap;

pub use binary::{graft_vee, knuth_phi, knuth_phi_shape, PlanarBinaryTree};
pub use enumerate::{enumerate_planar_rooted_trees, enumerate_rooted_trees, planar_rooted_trees, rooted_trees, shapes};
pub use expr::{parse_planar_tree, parse_rooted_tree, TreeExpr};
pub(crate) use expr::{expr_string, write_expr};
pub use planar::{PlanarRootedTree, Shape};
pub use rooted::RootedTree;

/// Read access shared by both rooted tree kinds.
pub trait Tree<V> {
    fn root(&self) -> &V;
    fn vertex_list(&self) -> Vec<V>;
    /// Children of every vertex, in display order.
    fn child_lists(&self) -> BTreeMap<V, Vec<V>>;
    fn is_planar(&self) -> bool;
}
