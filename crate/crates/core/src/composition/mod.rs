//! Species composition `P ∘ q` and the partial compositions `□` on
//! `NAP ∘ q` and `◇` on `Mag ∘ q`, generic over the positive operad `q`.

mod element;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::foundations::{set_partitions, Bijection, FiniteSet, Label, LinComb};
use crate::operads::{nap_compose, shuffle_mag_terms, Operad};
use crate::trees::{PlanarRootedTree, RootedTree, Tree};

pub use element::{parse_composition_element, relabel_composition, BlockTree, CompositionElement};

/// Basis element of `NAP ∘ q`.
pub type NapElement<E> = CompositionElement<RootedTree<FiniteSet>, E>;
/// Basis element of `Mag ∘ q`.
pub type MagElement<E> = CompositionElement<PlanarRootedTree<FiniteSet>, E>;

/// `NAP ∘ q` with the composition `□`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NapOver<Q>(pub Q);

/// `Mag ∘ q` with the composition `◇`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MagOver<Q>(pub Q);

/// Shared skeleton of `□` and `◇`.
///
/// With `C_s` the block of `x` holding `s` and `B★` the root block of `y`,
/// the block trees are grafted at `C_s` by `graft`, the vertex `B★` is
/// renamed to the merged block `C_s ⊔_s B★`, and the merged block receives
/// `γ_{C_s} ∘_s β_{B★}` expanded bilinearly. All other block values are kept.
fn compose_blocks<T: BlockTree, Q: Operad>(
    q: &Q,
    x: &CompositionElement<T, Q::Elem>,
    s: &Label,
    y: &CompositionElement<T, Q::Elem>,
    graft: impl Fn(&T, &FiniteSet, &T) -> Result<Vec<T>>,
) -> Result<LinComb<CompositionElement<T, Q::Elem>>> {
    let c_s = x.block_of(s).cloned().ok_or_else(|| Error::LabelNotFound {
        label: s.to_string(),
        context: x.ground().to_string(),
    })?;
    x.ground().glue(s, &y.ground())?;
    let b_star = y.root_block().clone();
    let merged = c_s.without(s).union(&b_star);

    let gamma = x.value(&c_s).ok_or_else(|| Error::InvalidElement(format!("no value on block {c_s}")))?;
    let beta = y.value(&b_star).ok_or_else(|| Error::InvalidElement(format!("no value on block {b_star}")))?;
    let merged_values = q.compose(gamma, s, beta)?;
    if merged_values.is_zero() {
        return Ok(LinComb::zero());
    }

    let mut base: BTreeMap<FiniteSet, Q::Elem> = x.values().clone();
    base.remove(&c_s);
    for (b, v) in y.values() {
        if *b != b_star {
            base.insert(b.clone(), v.clone());
        }
    }
    let rename = |b: &FiniteSet| if *b == b_star { merged.clone() } else { b.clone() };
    let trees = graft(x.tree(), &c_s, y.tree())?
        .into_iter()
        .map(|t| t.map_blocks(rename))
        .collect::<Result<Vec<T>>>()?;

    let mut out = LinComb::zero();
    for tree in &trees {
        for (alpha, c) in merged_values.iter() {
            let mut values = base.clone();
            values.insert(merged.clone(), alpha.clone());
            out.add_term(c.clone(), CompositionElement::from_parts_unchecked(tree.clone(), values));
        }
    }
    Ok(out)
}

/// `x □_s y` on `NAP ∘ q`.
pub fn box_compose<Q: Operad>(
    q: &Q,
    x: &NapElement<Q::Elem>,
    s: &Label,
    y: &NapElement<Q::Elem>,
) -> Result<LinComb<NapElement<Q::Elem>>> {
    compose_blocks(q, x, s, y, |t, c, u| Ok(vec![nap_compose(t, c, u)?]))
}

/// `x ◇_s y` on `Mag ∘ q`: one block tree per shuffle of the branches at
/// `C_s` with the branches at the root of `y`.
pub fn diamond_compose<Q: Operad>(
    q: &Q,
    x: &MagElement<Q::Elem>,
    s: &Label,
    y: &MagElement<Q::Elem>,
) -> Result<LinComb<MagElement<Q::Elem>>> {
    compose_blocks(q, x, s, y, shuffle_mag_terms)
}

/// Every basis element of `(P ∘ q)[I]` where `P` is the species of block trees `T`.
pub fn enumerate_elements<T: BlockTree, Q: Operad>(q: &Q, ground: &FiniteSet) -> Vec<CompositionElement<T, Q::Elem>> {
    let mut out = Vec::new();
    if ground.is_empty() {
        return out;
    }
    for pi in set_partitions(ground) {
        let blocks = pi.blocks().to_vec();
        let per_block: Vec<Vec<Q::Elem>> = blocks.iter().map(|b| q.basis(b)).collect();
        if per_block.iter().any(Vec::is_empty) {
            continue;
        }
        let trees = T::all_on(&blocks);
        // odometer over the product of block bases
        let mut idx = vec![0usize; blocks.len()];
        loop {
            let values: BTreeMap<FiniteSet, Q::Elem> = blocks
                .iter()
                .zip(&idx)
                .zip(&per_block)
                .map(|((b, &i), basis)| (b.clone(), basis[i].clone()))
                .collect();
            for t in &trees {
                out.push(CompositionElement::from_parts_unchecked(t.clone(), values.clone()));
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < per_block[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    out.sort();
    out
}

/// `dim (P ∘ q)[I] = Σ_{π ⊢ I} dim P[π] · Π_{B ∈ π} dim q[B]`, computed from
/// the dimensions alone.
pub fn composition_dimension<P: Operad, Q: Operad>(p: &P, q: &Q, ground: &FiniteSet) -> u128 {
    if ground.is_empty() {
        return 0;
    }
    let mut p_dims = BTreeMap::new();
    set_partitions(ground)
        .iter()
        .map(|pi| {
            let dp = *p_dims.entry(pi.len()).or_insert_with(|| p.dimension(pi.len())) as u128;
            pi.blocks().iter().map(|b| q.basis(b).len() as u128).product::<u128>() * dp
        })
        .sum()
}

/// Places each vertex in its own block carrying the unit of `q`.
pub fn lift_singletons<T: BlockTree, Q: Operad, V: Tree<Label>>(q: &Q, tree: &V) -> Result<CompositionElement<T, Q::Elem>> {
    let children = tree.child_lists();
    let planar = PlanarRootedTree::from_children(
        FiniteSet::singleton(tree.root().clone()),
        children
            .iter()
            .map(|(p, cs)| (FiniteSet::singleton(p.clone()), cs.iter().cloned().map(FiniteSet::singleton).collect()))
            .collect(),
    )?;
    let values = tree.vertex_list().into_iter().map(|l| (FiniteSet::singleton(l.clone()), q.unit(&l))).collect();
    CompositionElement::new(q, T::from_planar(planar), values)
}

/// Inverse of [`lift_singletons`] on elements whose blocks are all
/// singletons carrying units; `None` otherwise.
pub fn lower_singletons<T: BlockTree, Q: Operad>(q: &Q, x: &CompositionElement<T, Q::Elem>) -> Option<PlanarRootedTree<Label>> {
    for (b, v) in x.values() {
        let l = b.min()?;
        if b.len() != 1 || *v != q.unit(l) {
            return None;
        }
    }
    let children: BTreeMap<Label, Vec<Label>> = x
        .tree()
        .child_lists()
        .iter()
        .map(|(p, cs)| (p.min().cloned().unwrap(), cs.iter().map(|c| c.min().cloned().unwrap()).collect()))
        .collect();
    PlanarRootedTree::from_children(x.root_block().min()?.clone(), children).ok()
}

macro_rules! composite_operad {
    ($ty:ident, $tree:ty, $prefix:literal, $compose:ident) => {
        impl<Q: Operad> Operad for $ty<Q> {
            type Elem = CompositionElement<$tree, Q::Elem>;

            fn name(&self) -> String {
                format!("{}:{}", $prefix, self.0.name())
            }

            fn basis(&self, labels: &FiniteSet) -> Vec<Self::Elem> {
                enumerate_elements(&self.0, labels)
            }

            fn ground(&self, x: &Self::Elem) -> FiniteSet {
                x.ground()
            }

            fn compose(&self, x: &Self::Elem, s: &Label, y: &Self::Elem) -> Result<LinComb<Self::Elem>> {
                $compose(&self.0, x, s, y)
            }

            fn relabel(&self, x: &Self::Elem, sigma: &Bijection) -> Result<Self::Elem> {
                x.relabel(&self.0, sigma)
            }

            fn unit(&self, s: &Label) -> Self::Elem {
                let block = FiniteSet::singleton(s.clone());
                CompositionElement::from_parts_unchecked(
                    <$tree>::single_block(block.clone()),
                    BTreeMap::from([(block, self.0.unit(s))]),
                )
            }

            fn parse_elem(&self, text: &str) -> Result<Self::Elem> {
                parse_composition_element(&self.0, text)
            }
        }
    };
}

composite_operad!(NapOver, RootedTree<FiniteSet>, "box", box_compose);
composite_operad!(MagOver, PlanarRootedTree<FiniteSet>, "diamond", diamond_compose);

#[cfg(test)]
mod tests;
