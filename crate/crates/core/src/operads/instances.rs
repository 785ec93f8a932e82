use crate::error::{Error, Result};
use crate::foundations::{Bijection, FiniteSet, Label, LinComb};
use crate::operads::graft::{mag_compose, nap_compose, prelie_compose, shuffle_mag_compose};
use crate::operads::{Operad, RootedOperad};
use crate::trees::{enumerate_planar_rooted_trees, enumerate_rooted_trees, PlanarRootedTree, RootedTree};

/// NAP: graft every branch at `s` onto the root of the inserted tree.
#[derive(Clone, Copy, Debug, Default)]
pub struct Nap;

/// Pre-Lie: sum over all reattachments of the branches at `s`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PreLie;

/// The magmatic operad on planar rooted trees.
#[derive(Clone, Copy, Debug, Default)]
pub struct Mag;

/// The magmatic species with the shuffle composition `△`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShuffleMag;

fn vertex_set<I: IntoIterator<Item = Label>>(labels: I) -> FiniteSet {
    labels.into_iter().collect()
}

macro_rules! rooted_tree_operad {
    ($ty:ty, $name:literal, $compose:expr) => {
        impl Operad for $ty {
            type Elem = RootedTree;

            fn name(&self) -> String {
                $name.into()
            }

            fn basis(&self, labels: &FiniteSet) -> Vec<RootedTree> {
                enumerate_rooted_trees(labels).unwrap_or_default()
            }

            fn ground(&self, x: &RootedTree) -> FiniteSet {
                vertex_set(x.vertices())
            }

            fn compose(&self, x: &RootedTree, s: &Label, y: &RootedTree) -> Result<LinComb<RootedTree>> {
                $compose(x, s, y)
            }

            fn relabel(&self, x: &RootedTree, sigma: &Bijection) -> Result<RootedTree> {
                x.relabel(sigma)
            }

            fn unit(&self, s: &Label) -> RootedTree {
                RootedTree::single(s.clone())
            }

            fn parse_elem(&self, text: &str) -> Result<RootedTree> {
                text.parse()
            }
        }

        impl RootedOperad for $ty {
            fn root_label(&self, x: &RootedTree) -> Label {
                x.root().clone()
            }
        }
    };
}

macro_rules! planar_tree_operad {
    ($ty:ty, $name:literal, $compose:expr) => {
        impl Operad for $ty {
            type Elem = PlanarRootedTree;

            fn name(&self) -> String {
                $name.into()
            }

            fn basis(&self, labels: &FiniteSet) -> Vec<PlanarRootedTree> {
                enumerate_planar_rooted_trees(labels).unwrap_or_default()
            }

            fn ground(&self, x: &PlanarRootedTree) -> FiniteSet {
                vertex_set(x.vertices())
            }

            fn compose(&self, x: &PlanarRootedTree, s: &Label, y: &PlanarRootedTree) -> Result<LinComb<PlanarRootedTree>> {
                $compose(x, s, y)
            }

            fn relabel(&self, x: &PlanarRootedTree, sigma: &Bijection) -> Result<PlanarRootedTree> {
                x.relabel(sigma)
            }

            fn unit(&self, s: &Label) -> PlanarRootedTree {
                PlanarRootedTree::single(s.clone())
            }

            fn parse_elem(&self, text: &str) -> Result<PlanarRootedTree> {
                text.parse()
            }
        }

        impl RootedOperad for $ty {
            fn root_label(&self, x: &PlanarRootedTree) -> Label {
                x.root().clone()
            }
        }
    };
}

rooted_tree_operad!(Nap, "nap", |x, s, y| nap_compose(x, s, y).map(LinComb::basis));
rooted_tree_operad!(PreLie, "prelie", prelie_compose);
planar_tree_operad!(Mag, "mag", |x, s, y| mag_compose(x, s, y).map(LinComb::basis));
planar_tree_operad!(ShuffleMag, "shmag", shuffle_mag_compose);

/// Left and right hand side of an identity.
pub type Sides<E> = (LinComb<E>, LinComb<E>);

/// Both sides of the exchange identity
/// `(t ∘_s u) ∘_{root(u)} v = φ_{uv}((t ∘_s v) ∘_{root(v)} u)`,
/// where `φ_{uv}` renames the root of `u` to the root of `v`.
pub fn eq1_sides<O: RootedOperad>(
    op: &O,
    t: &O::Elem,
    s: &Label,
    u: &O::Elem,
    v: &O::Elem,
) -> Result<Sides<O::Elem>> {
    let (gu, gv) = (op.ground(u), op.ground(v));
    if !gu.is_disjoint(&gv) {
        return Err(Error::NotDisjoint {
            overlap: gu.intersection(&gv).to_string(),
        });
    }
    let (ru, rv) = (op.root_label(u), op.root_label(v));
    let lhs = op.compose_lin(&op.compose(t, s, u)?, &ru, &LinComb::basis(v.clone()))?;
    let rhs_raw = op.compose_lin(&op.compose(t, s, v)?, &rv, &LinComb::basis(u.clone()))?;
    let rhs_ground = op.ground(t).glue(s, &gv)?.glue(&rv, &gu)?;
    let phi = Bijection::new(
        rhs_ground
            .iter()
            .map(|l| (l.clone(), if *l == ru { rv.clone() } else { l.clone() })),
    )?;
    Ok((lhs, op.relabel_lin(&rhs_raw, &phi)?))
}
