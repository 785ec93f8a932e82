use std::collections::BTreeMap;
use std::fmt;

use crate::dot::{tree_to_dot, ToDot};
use crate::error::{Error, Result};
use crate::foundations::{Bijection, FiniteSet, Label, Partition};
use crate::operads::Operad;
use crate::text::Cursor;
use crate::trees::{expr_string, parse_planar_tree, PlanarRootedTree, RootedTree, Tree};

/// Trees whose vertices are the blocks of a partition.
pub trait BlockTree: Tree<FiniteSet> + Clone + Ord + fmt::Debug + Send + Sync + Sized {
    fn single_block(block: FiniteSet) -> Self;
    fn map_blocks(&self, f: impl Fn(&FiniteSet) -> FiniteSet) -> Result<Self>;
    fn from_planar(tree: PlanarRootedTree<FiniteSet>) -> Self;
    /// Every tree of this kind on the given blocks.
    fn all_on(blocks: &[FiniteSet]) -> Vec<Self>;
}

impl BlockTree for RootedTree<FiniteSet> {
    fn single_block(block: FiniteSet) -> Self {
        RootedTree::single(block)
    }

    fn map_blocks(&self, f: impl Fn(&FiniteSet) -> FiniteSet) -> Result<Self> {
        self.map_vertices(f)
    }

    fn from_planar(tree: PlanarRootedTree<FiniteSet>) -> Self {
        tree.to_nonplanar()
    }

    fn all_on(blocks: &[FiniteSet]) -> Vec<Self> {
        crate::trees::rooted_trees(blocks)
    }
}

impl BlockTree for PlanarRootedTree<FiniteSet> {
    fn single_block(block: FiniteSet) -> Self {
        PlanarRootedTree::single(block)
    }

    fn map_blocks(&self, f: impl Fn(&FiniteSet) -> FiniteSet) -> Result<Self> {
        self.map_vertices(f)
    }

    fn from_planar(tree: PlanarRootedTree<FiniteSet>) -> Self {
        tree
    }

    fn all_on(blocks: &[FiniteSet]) -> Vec<Self> {
        crate::trees::planar_rooted_trees(blocks)
    }
}

/// `t ⊗ ⊗_{C ∈ π} γ_C`: a tree on the blocks of a partition `π` with one
/// `q`-basis element per block.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionElement<T, E> {
    tree: T,
    values: BTreeMap<FiniteSet, E>,
}

impl<T: BlockTree, E: Clone> CompositionElement<T, E> {
    /// Checks that the tree's vertices are exactly the blocks carrying values,
    /// that blocks are disjoint, and that each value lives on its block.
    pub fn new<Q: Operad<Elem = E>>(q: &Q, tree: T, values: BTreeMap<FiniteSet, E>) -> Result<Self> {
        let vertices: Vec<FiniteSet> = tree.vertex_list();
        let keys: Vec<FiniteSet> = values.keys().cloned().collect();
        if vertices != keys {
            return Err(Error::InvalidElement(format!(
                "tree vertices {vertices:?} differ from valued blocks {keys:?}"
            )));
        }
        Partition::new(keys)?;
        for (block, v) in &values {
            let g = q.ground(v);
            if &g != block {
                return Err(Error::InvalidElement(format!("value on block {block} lives on {g}")));
            }
        }
        Ok(CompositionElement { tree, values })
    }

    pub(crate) fn from_parts_unchecked(tree: T, values: BTreeMap<FiniteSet, E>) -> Self {
        CompositionElement { tree, values }
    }

    pub fn tree(&self) -> &T {
        &self.tree
    }

    pub fn values(&self) -> &BTreeMap<FiniteSet, E> {
        &self.values
    }

    pub fn value(&self, block: &FiniteSet) -> Option<&E> {
        self.values.get(block)
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.values.keys().cloned().collect()).expect("blocks validated on construction")
    }

    pub fn ground(&self) -> FiniteSet {
        self.values.keys().fold(FiniteSet::empty(), |acc, b| acc.union(b))
    }

    pub fn block_of(&self, label: &Label) -> Option<&FiniteSet> {
        self.values.keys().find(|b| b.contains(label))
    }

    pub fn root_block(&self) -> &FiniteSet {
        self.tree.root()
    }

    /// The species action: blocks, block tree and every block value are
    /// pushed through `sigma`.
    pub fn relabel<Q: Operad<Elem = E>>(&self, q: &Q, sigma: &Bijection) -> Result<Self> {
        sigma.require_domain(&self.ground())?;
        let image = |b: &FiniteSet| sigma.image_set(b).expect("domain checked");
        let tree = self.tree.map_blocks(image)?;
        let values = self
            .values
            .iter()
            .map(|(b, v)| Ok((image(b), q.relabel(v, &sigma.restrict(b)?)?)))
            .collect::<Result<_>>()?;
        Ok(CompositionElement { tree, values })
    }

    fn block_names(&self) -> BTreeMap<&FiniteSet, String> {
        self.values.keys().enumerate().map(|(i, b)| (b, format!("b{i}"))).collect()
    }
}

/// `relabel_composition(x, σ)`.
pub fn relabel_composition<T: BlockTree, Q: Operad>(
    q: &Q,
    x: &CompositionElement<T, Q::Elem>,
    sigma: &Bijection,
) -> Result<CompositionElement<T, Q::Elem>> {
    x.relabel(q, sigma)
}

impl<T: BlockTree, E: Clone + fmt::Display> fmt::Display for CompositionElement<T, E> {
    /// `{blocks: [[1,2],[3]], tree: "b0(b1)", values: {b0: …, b1: …}}`, blocks
    /// listed in partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.block_names();
        f.write_str("{blocks: [")?;
        for (i, b) in self.values.keys().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, l) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str("]")?;
        }
        let tree = expr_string(self.tree.root(), &self.tree.child_lists(), &|b: &FiniteSet| names[b].clone());
        write!(f, "], tree: \"{tree}\", values: {{")?;
        for (i, (b, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {v}", names[b])?;
        }
        f.write_str("}}")
    }
}

impl<T: BlockTree, E: Clone + fmt::Display> fmt::Debug for CompositionElement<T, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: BlockTree, E: Clone + fmt::Display> ToDot for CompositionElement<T, E> {
    fn to_dot(&self, name: &str, caption: &str) -> String {
        tree_to_dot(&self.tree, name, caption, |b| format!("{b}: {}", self.values[b]))
    }
}

/// Parses the text form written by `Display`.
pub fn parse_composition_element<T: BlockTree, Q: Operad>(q: &Q, text: &str) -> Result<CompositionElement<T, Q::Elem>> {
    let mut cur = Cursor::new(text);
    cur.expect('{')?;
    cur.expect_word("blocks")?;
    cur.expect(':')?;
    let blocks: Vec<FiniteSet> = cur
        .label_list_list('[', ']')?
        .into_iter()
        .map(FiniteSet::try_from_labels)
        .collect::<Result<_>>()?;
    cur.expect(',')?;
    cur.expect_word("tree")?;
    cur.expect(':')?;
    let tree_pos = cur.pos();
    let tree_text = cur.quoted()?;
    cur.expect(',')?;
    cur.expect_word("values")?;
    cur.expect(':')?;
    cur.expect('{')?;
    let block_named = |name: &str, pos: usize| -> Result<FiniteSet> {
        name.strip_prefix('b')
            .and_then(|i| i.parse::<usize>().ok())
            .and_then(|i| blocks.get(i).cloned())
            .ok_or_else(|| Error::parse(pos, format!("unknown block name `{name}`")))
    };
    let mut values = BTreeMap::new();
    if !cur.eat('}') {
        loop {
            let pos = cur.pos();
            let block = block_named(cur.atom()?, pos)?;
            cur.expect(':')?;
            let vpos = cur.pos();
            let value = q.parse_elem(cur.balanced_until(&[',', '}'])?).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + vpos, msg },
                other => other,
            })?;
            if values.insert(block.clone(), value).is_some() {
                return Err(Error::InvalidElement(format!("block {block} valued twice")));
            }
            if cur.eat('}') {
                break;
            }
            cur.expect(',')?;
        }
    }
    cur.expect('}')?;
    cur.finish()?;
    let named = parse_planar_tree(tree_text).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + tree_pos + 1, msg },
        other => other,
    })?;
    let by_name: BTreeMap<Label, FiniteSet> = named
        .vertices()
        .into_iter()
        .map(|l| Ok((l.clone(), block_named(l.as_str(), tree_pos)?)))
        .collect::<Result<_>>()?;
    let planar = named.map_vertices(|l| by_name[l].clone());
    CompositionElement::new(q, T::from_planar(planar?), values)
}
