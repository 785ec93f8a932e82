use std::fmt;

use crate::foundations::Label;
use crate::trees::{PlanarRootedTree, Shape};

/// A planar binary tree: every internal node has a left and a right branch.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

impl PlanarBinaryTree {
    pub fn leaves(&self) -> usize {
        match self {
            PlanarBinaryTree::Leaf => 1,
            PlanarBinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// All binary trees with `n` leaves (`n >= 1`).
    pub fn enumerate(n: usize) -> Vec<PlanarBinaryTree> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![PlanarBinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            let lefts = Self::enumerate(k);
            let rights = Self::enumerate(n - k);
            for l in &lefts {
                for r in &rights {
                    out.push(graft_vee(l.clone(), r.clone()));
                }
            }
        }
        out
    }
}

/// The magma product `t1 ∨ t2`: the Y-tree with `t1` on the left branch and
/// `t2` on the right.
pub fn graft_vee(t1: PlanarBinaryTree, t2: PlanarBinaryTree) -> PlanarBinaryTree {
    PlanarBinaryTree::Node(Box::new(t1), Box::new(t2))
}

/// Knuth's rotation correspondence, on shapes.
///
/// `Φ(|)` is a single vertex and `Φ(t1 ∨ t2)` is `Φ(t2)` with `Φ(t1)` grafted
/// as the new leftmost child of its root.
pub fn knuth_phi_shape(t: &PlanarBinaryTree) -> Shape {
    match t {
        PlanarBinaryTree::Leaf => Shape(Vec::new()),
        PlanarBinaryTree::Node(l, r) => {
            let mut s = knuth_phi_shape(r);
            s.0.insert(0, knuth_phi_shape(l));
            s
        }
    }
}

/// Knuth's rotation correspondence with post-order labels `1..n`.
pub fn knuth_phi(t: &PlanarBinaryTree) -> PlanarRootedTree<Label> {
    PlanarRootedTree::from_shape(&knuth_phi_shape(t))
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarBinaryTree::Leaf => f.write_str("|"),
            PlanarBinaryTree::Node(l, r) => write!(f, "({l} v {r})"),
        }
    }
}

impl fmt::Debug for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PlanarBinaryTree::Leaf;

    #[test]
    fn vee_builds_y_trees() {
        assert_eq!(graft_vee(Leaf, Leaf).to_string(), "(| v |)");
        assert_eq!(graft_vee(graft_vee(Leaf, Leaf), Leaf).to_string(), "((| v |) v |)");
        assert_ne!(graft_vee(graft_vee(Leaf, Leaf), Leaf), graft_vee(Leaf, graft_vee(Leaf, Leaf)));
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(knuth_phi_shape(&Leaf), Shape(vec![]));
        assert_eq!(knuth_phi(&graft_vee(Leaf, Leaf)).to_string(), "2(1)");
        // left branch becomes the leftmost child of the right branch's root
        let t = graft_vee(graft_vee(Leaf, Leaf), Leaf);
        assert_eq!(knuth_phi_shape(&t), Shape(vec![Shape(vec![Shape(vec![])])]));
        let t = graft_vee(Leaf, graft_vee(Leaf, Leaf));
        assert_eq!(knuth_phi_shape(&t), Shape(vec![Shape(vec![]), Shape(vec![])]));
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 1, 2, 5, 14, 42];
        for n in 1..=6 {
            assert_eq!(PlanarBinaryTree::enumerate(n).len(), catalan[n - 1]);
        }
    }
}
