use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::foundations::{Bijection, Label};
use crate::trees::{write_expr, RootedTree, Tree};

/// A rooted tree whose children lists are ordered left to right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarRootedTree<V: Ord = Label> {
    root: V,
    children: BTreeMap<V, Vec<V>>,
}

/// An unlabeled planar rooted tree: the ordered list of child shapes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(pub Vec<Shape>);

impl Shape {
    pub fn size(&self) -> usize {
        1 + self.0.iter().map(Shape::size).sum::<usize>()
    }
}

impl<V: Ord + Clone + fmt::Debug> PlanarRootedTree<V> {
    pub fn single(root: V) -> Self {
        PlanarRootedTree {
            children: BTreeMap::from([(root.clone(), Vec::new())]),
            root,
        }
    }

    /// Validates ordered children lists. Vertices absent as keys are leaves.
    pub fn from_children(root: V, children: BTreeMap<V, Vec<V>>) -> Result<Self> {
        let mut full: BTreeMap<V, Vec<V>> = BTreeMap::new();
        full.insert(root.clone(), Vec::new());
        let mut child_count = 0usize;
        for (p, cs) in &children {
            full.entry(p.clone()).or_default();
            for c in cs {
                child_count += 1;
                if *c == root {
                    return Err(Error::InvalidTree(format!("root {root:?} appears as a child")));
                }
                full.entry(c.clone()).or_default();
            }
        }
        for (p, cs) in children {
            full.insert(p, cs);
        }
        if child_count + 1 != full.len() {
            return Err(Error::InvalidTree("a vertex has several parents or is detached".into()));
        }
        // reachability from the root
        let mut seen = 0usize;
        let mut stack = vec![&root];
        while let Some(v) = stack.pop() {
            seen += 1;
            if seen > full.len() {
                return Err(Error::InvalidTree("cycle".into()));
            }
            stack.extend(full[v].iter());
        }
        if seen != full.len() {
            return Err(Error::InvalidTree("not connected".into()));
        }
        Ok(PlanarRootedTree { root, children: full })
    }

    pub(crate) fn from_parts_unchecked(root: V, children: BTreeMap<V, Vec<V>>) -> Self {
        debug_assert!(Self::from_children(root.clone(), children.clone()).is_ok());
        PlanarRootedTree { root, children }
    }

    pub fn root(&self) -> &V {
        &self.root
    }

    pub fn children(&self, v: &V) -> &[V] {
        self.children.get(v).map_or(&[], Vec::as_slice)
    }

    pub fn children_map(&self) -> &BTreeMap<V, Vec<V>> {
        &self.children
    }

    pub fn contains(&self, v: &V) -> bool {
        self.children.contains_key(v)
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> Vec<V> {
        self.children.keys().cloned().collect()
    }

    pub fn parent_of(&self, v: &V) -> Option<&V> {
        self.children.iter().find(|(_, cs)| cs.contains(v)).map(|(p, _)| p)
    }

    pub fn map_vertices<W: Ord + Clone + fmt::Debug>(&self, f: impl Fn(&V) -> W) -> Result<PlanarRootedTree<W>> {
        let children: BTreeMap<W, Vec<W>> = self
            .children
            .iter()
            .map(|(p, cs)| (f(p), cs.iter().map(&f).collect()))
            .collect();
        if children.len() != self.children.len() {
            return Err(Error::InvalidTree("vertex map is not injective".into()));
        }
        Ok(PlanarRootedTree {
            root: f(&self.root),
            children,
        })
    }

    pub fn shape(&self) -> Shape {
        fn go<V: Ord>(v: &V, children: &BTreeMap<V, Vec<V>>) -> Shape {
            Shape(children[v].iter().map(|c| go(c, children)).collect())
        }
        go(&self.root, &self.children)
    }

    /// Forgets the planar order.
    pub fn to_nonplanar(&self) -> RootedTree<V> {
        let parent = self
            .children
            .iter()
            .flat_map(|(p, cs)| cs.iter().map(move |c| (c.clone(), p.clone())))
            .collect();
        RootedTree::from_parts_unchecked(self.root.clone(), parent)
    }
}

impl PlanarRootedTree<Label> {
    /// Pushes labels through `sigma`, keeping the planar order.
    pub fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        sigma.require_domain(&self.vertices().into_iter().collect())?;
        self.map_vertices(|v| sigma.apply(v).expect("domain checked").clone())
    }

    /// Labels a shape with `1..n` in post-order.
    pub fn from_shape(shape: &Shape) -> Self {
        fn go(s: &Shape, next: &mut usize, children: &mut BTreeMap<Label, Vec<Label>>) -> Label {
            let kids: Vec<Label> = s.0.iter().map(|c| go(c, next, children)).collect();
            *next += 1;
            let me = Label::from(next.to_string().as_str());
            children.insert(me.clone(), kids);
            me
        }
        let mut children = BTreeMap::new();
        let mut next = 0;
        let root = go(shape, &mut next, &mut children);
        PlanarRootedTree::from_parts_unchecked(root, children)
    }
}

impl<V: Ord + Clone + fmt::Debug> Tree<V> for PlanarRootedTree<V> {
    fn root(&self) -> &V {
        &self.root
    }

    fn vertex_list(&self) -> Vec<V> {
        self.vertices()
    }

    fn child_lists(&self) -> BTreeMap<V, Vec<V>> {
        self.children.clone()
    }

    fn is_planar(&self) -> bool {
        true
    }
}

impl<V: Ord + Clone + fmt::Debug + fmt::Display> fmt::Display for PlanarRootedTree<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, &self.root, &self.children, &|v: &V| v.to_string())
    }
}

impl<V: Ord + Clone + fmt::Debug + fmt::Display> fmt::Debug for PlanarRootedTree<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
