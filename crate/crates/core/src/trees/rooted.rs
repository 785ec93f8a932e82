use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::foundations::{Bijection, Label};
use crate::trees::{write_expr, PlanarRootedTree, Tree};

/// A non-planar rooted tree stored as a parent map.
///
/// Two trees are equal iff they have the same root and the same parent map,
/// which makes the representation canonical by construction. For display the
/// children of a vertex are ordered by the minimal label of their subtrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree<V: Ord = Label> {
    root: V,
    parent: BTreeMap<V, V>,
}

impl<V: Ord + Clone + fmt::Debug> RootedTree<V> {
    pub fn single(root: V) -> Self {
        RootedTree {
            root,
            parent: BTreeMap::new(),
        }
    }

    /// Validates that `parent` describes a tree hanging from `root`.
    pub fn from_parent_map(root: V, parent: BTreeMap<V, V>) -> Result<Self> {
        if parent.contains_key(&root) {
            return Err(Error::InvalidTree(format!("root {root:?} has a parent")));
        }
        for p in parent.values() {
            if *p != root && !parent.contains_key(p) {
                return Err(Error::InvalidTree(format!("parent {p:?} is not a vertex")));
            }
        }
        let n = parent.len();
        for v in parent.keys() {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = parent.get(cur) {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidTree(format!("cycle through {v:?}")));
                }
            }
        }
        Ok(RootedTree { root, parent })
    }

    pub(crate) fn from_parts_unchecked(root: V, parent: BTreeMap<V, V>) -> Self {
        debug_assert!(Self::from_parent_map(root.clone(), parent.clone()).is_ok());
        RootedTree { root, parent }
    }

    pub fn root(&self) -> &V {
        &self.root
    }

    pub fn parent_map(&self) -> &BTreeMap<V, V> {
        &self.parent
    }

    pub fn parent_of(&self, v: &V) -> Option<&V> {
        self.parent.get(v)
    }

    pub fn contains(&self, v: &V) -> bool {
        *v == self.root || self.parent.contains_key(v)
    }

    pub fn len(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> Vec<V> {
        let mut out: Vec<V> = self.parent.keys().cloned().collect();
        let at = out.partition_point(|v| *v < self.root);
        out.insert(at, self.root.clone());
        out
    }

    /// Children lists in canonical order (by minimal descendant).
    pub fn children_map(&self) -> BTreeMap<V, Vec<V>> {
        let mut children: BTreeMap<V, Vec<V>> = self.vertices().into_iter().map(|v| (v, Vec::new())).collect();
        for (c, p) in &self.parent {
            children.get_mut(p).expect("validated").push(c.clone());
        }
        let mut min_desc: BTreeMap<V, V> = BTreeMap::new();
        fill_min_desc(&self.root, &children, &mut min_desc);
        for list in children.values_mut() {
            list.sort_by(|a, b| min_desc[a].cmp(&min_desc[b]));
        }
        children
    }

    pub fn children(&self, v: &V) -> Vec<V> {
        self.children_map().remove(v).unwrap_or_default()
    }

    /// Relabels vertices through an injective map.
    pub fn map_vertices<W: Ord + Clone + fmt::Debug>(&self, f: impl Fn(&V) -> W) -> Result<RootedTree<W>> {
        let parent: BTreeMap<W, W> = self.parent.iter().map(|(c, p)| (f(c), f(p))).collect();
        let root = f(&self.root);
        if parent.len() != self.parent.len() || parent.contains_key(&root) {
            return Err(Error::InvalidTree("vertex map is not injective".into()));
        }
        Ok(RootedTree { root, parent })
    }

    /// The planar tree listing children in canonical order.
    pub fn to_planar(&self) -> PlanarRootedTree<V> {
        PlanarRootedTree::from_parts_unchecked(self.root.clone(), self.children_map())
    }
}

fn fill_min_desc<V: Ord + Clone>(v: &V, children: &BTreeMap<V, Vec<V>>, out: &mut BTreeMap<V, V>) -> V {
    let mut m = v.clone();
    for c in &children[v] {
        let cm = fill_min_desc(c, children, out);
        if cm < m {
            m = cm;
        }
    }
    out.insert(v.clone(), m.clone());
    m
}

impl RootedTree<Label> {
    /// Pushes labels through `sigma`, whose domain must be the vertex set.
    pub fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        sigma.require_domain(&self.vertices().into_iter().collect())?;
        self.map_vertices(|v| sigma.apply(v).expect("domain checked").clone())
    }
}

impl<V: Ord + Clone + fmt::Debug> Tree<V> for RootedTree<V> {
    fn root(&self) -> &V {
        &self.root
    }

    fn vertex_list(&self) -> Vec<V> {
        self.vertices()
    }

    fn child_lists(&self) -> BTreeMap<V, Vec<V>> {
        self.children_map()
    }

    fn is_planar(&self) -> bool {
        false
    }
}

impl<V: Ord + Clone + fmt::Debug + fmt::Display> fmt::Display for RootedTree<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, &self.root, &self.children_map(), &|v: &V| v.to_string())
    }
}

impl<V: Ord + Clone + fmt::Debug + fmt::Display> fmt::Debug for RootedTree<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_equality_ignores_child_order() {
        assert_eq!(t("1(2(3,4))"), t("1(2(4,3))"));
        assert_eq!(t("1(2(4,3))").to_string(), "1(2(3,4))");
    }

    #[test]
    fn children_sorted_by_min_descendant() {
        // subtree under 5 contains 1, so it precedes 2
        assert_eq!(t("9(2,5(1))").to_string(), "9(5(1),2)");
    }

    #[test]
    fn rejects_cycles_and_dangling_parents() {
        let cyc = BTreeMap::from([(Label::from("a"), Label::from("b")), (Label::from("b"), Label::from("a"))]);
        assert!(RootedTree::from_parent_map(Label::from("r"), cyc).is_err());
        let dangling = BTreeMap::from([(Label::from("a"), Label::from("z"))]);
        assert!(RootedTree::from_parent_map(Label::from("r"), dangling).is_err());
    }

    #[test]
    fn relabel_functor_laws() {
        let x = t("1(2,3(4))");
        let id = Bijection::identity(&crate::foundations::FiniteSet::of(&["1", "2", "3", "4"]));
        assert_eq!(x.relabel(&id).unwrap(), x);
        let s = Bijection::of(&[("1", "a"), ("2", "b"), ("3", "c"), ("4", "d")]);
        let th = Bijection::of(&[("a", "4"), ("b", "3"), ("c", "2"), ("d", "1")]);
        assert_eq!(x.relabel(&s).unwrap().relabel(&s.inverse()).unwrap(), x);
        assert_eq!(
            x.relabel(&s).unwrap().relabel(&th).unwrap(),
            x.relabel(&s.then(&th).unwrap()).unwrap()
        );
        assert!(x.relabel(&Bijection::of(&[("1", "a")])).is_err());
    }
}
