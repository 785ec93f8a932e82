//! Partial compositions on trees, generic over the vertex type so that the
//! same code grafts label trees and block trees.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::foundations::{coeff, LinComb};
use crate::operads::shuffle::interleavings;
use crate::trees::{PlanarRootedTree, RootedTree};

fn check_point<V: Debug>(contains_s: bool, s: &V) -> Result<()> {
    if contains_s {
        Ok(())
    } else {
        Err(Error::LabelNotFound {
            label: format!("{s:?}"),
            context: "the vertex set of the outer tree".into(),
        })
    }
}

/// `S ∖ {s}` must be disjoint from `T`; `T` may reuse `s`.
fn check_disjoint<V: PartialEq + Debug>(outer_contains: impl Fn(&V) -> bool, s: &V, inner: &[V]) -> Result<()> {
    let overlap: Vec<&V> = inner.iter().filter(|w| *w != s && outer_contains(w)).collect();
    if overlap.is_empty() {
        Ok(())
    } else {
        Err(Error::NotDisjoint {
            overlap: format!("{overlap:?}"),
        })
    }
}

/// Replaces `s` by `v`: the root of `v` takes the place of `s` and every edge
/// that arrived at `s` now arrives at the root of `v`.
pub fn nap_compose<V: Ord + Clone + Debug>(u: &RootedTree<V>, s: &V, v: &RootedTree<V>) -> Result<RootedTree<V>> {
    check_point(u.contains(s), s)?;
    check_disjoint(|w| u.contains(w), s, &v.vertices())?;
    let r = v.root();
    let mut parent = BTreeMap::new();
    for (c, p) in u.parent_map() {
        if c != s {
            parent.insert(c.clone(), if p == s { r.clone() } else { p.clone() });
        }
    }
    parent.extend(v.parent_map().iter().map(|(c, p)| (c.clone(), p.clone())));
    if let Some(ps) = u.parent_of(s) {
        parent.insert(r.clone(), ps.clone());
    }
    let root = if u.root() == s { r.clone() } else { u.root().clone() };
    Ok(RootedTree::from_parts_unchecked(root, parent))
}

/// Sums, over every map `f` from the children of `s` to the vertices of `v`,
/// the tree where `v` replaces `s` and each child `c` hangs from `f(c)`.
pub fn prelie_compose<V: Ord + Clone + Debug>(
    u: &RootedTree<V>,
    s: &V,
    v: &RootedTree<V>,
) -> Result<LinComb<RootedTree<V>>> {
    check_point(u.contains(s), s)?;
    let targets = v.vertices();
    check_disjoint(|w| u.contains(w), s, &targets)?;
    let incoming = u.children(s);
    let mut base = BTreeMap::new();
    for (c, p) in u.parent_map() {
        if c != s && p != s {
            base.insert(c.clone(), p.clone());
        }
    }
    base.extend(v.parent_map().iter().map(|(c, p)| (c.clone(), p.clone())));
    if let Some(ps) = u.parent_of(s) {
        base.insert(v.root().clone(), ps.clone());
    }
    let root = if u.root() == s { v.root().clone() } else { u.root().clone() };

    let mut out = LinComb::zero();
    // odometer over targets^incoming
    let mut digits = vec![0usize; incoming.len()];
    loop {
        let mut parent = base.clone();
        for (c, &d) in incoming.iter().zip(&digits) {
            parent.insert(c.clone(), targets[d].clone());
        }
        out.add_term(coeff(1), RootedTree::from_parts_unchecked(root.clone(), parent));
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < targets.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn planar_graft<V: Ord + Clone + Debug>(
    u: &PlanarRootedTree<V>,
    s: &V,
    v: &PlanarRootedTree<V>,
) -> Result<(V, BTreeMap<V, Vec<V>>)> {
    check_point(u.contains(s), s)?;
    check_disjoint(|w| u.contains(w), s, &v.vertices())?;
    let r = v.root();
    let mut children: BTreeMap<V, Vec<V>> = BTreeMap::new();
    for (p, cs) in u.children_map() {
        if p != s {
            let cs = cs.iter().map(|c| if c == s { r.clone() } else { c.clone() }).collect();
            children.insert(p.clone(), cs);
        }
    }
    children.extend(v.children_map().iter().map(|(p, cs)| (p.clone(), cs.clone())));
    let root = if u.root() == s { r.clone() } else { u.root().clone() };
    Ok((root, children))
}

/// Magmatic grafting: `v` replaces `s` in its sibling position; the root of
/// `v` keeps its own children leftmost, then receives the children of `s`.
pub fn mag_compose<V: Ord + Clone + Debug>(
    u: &PlanarRootedTree<V>,
    s: &V,
    v: &PlanarRootedTree<V>,
) -> Result<PlanarRootedTree<V>> {
    let (root, mut children) = planar_graft(u, s, v)?;
    let at_root = children.get_mut(v.root()).expect("root of v is a vertex");
    at_root.extend(u.children(s).iter().cloned());
    Ok(PlanarRootedTree::from_parts_unchecked(root, children))
}

/// One planar tree per `(In(s,u), In(root,v))`-shuffle of the branches that
/// meet at the merged vertex.
pub fn shuffle_mag_terms<V: Ord + Clone + Debug>(
    u: &PlanarRootedTree<V>,
    s: &V,
    v: &PlanarRootedTree<V>,
) -> Result<Vec<PlanarRootedTree<V>>> {
    let (root, children) = planar_graft(u, s, v)?;
    let outer = u.children(s);
    let inner = v.children(v.root());
    Ok(interleavings(outer, inner)
        .into_iter()
        .map(|merged| {
            let mut ch = children.clone();
            ch.insert(v.root().clone(), merged);
            PlanarRootedTree::from_parts_unchecked(root.clone(), ch)
        })
        .collect())
}

/// The shuffle composition `u △_s v`.
pub fn shuffle_mag_compose<V: Ord + Clone + Debug>(
    u: &PlanarRootedTree<V>,
    s: &V,
    v: &PlanarRootedTree<V>,
) -> Result<LinComb<PlanarRootedTree<V>>> {
    Ok(shuffle_mag_terms(u, s, v)?.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::Label;

    fn t(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PlanarRootedTree {
        s.parse().unwrap()
    }

    fn l(s: &str) -> Label {
        Label::from(s)
    }

    #[test]
    fn nap_examples() {
        assert_eq!(nap_compose(&t("1(2)"), &l("2"), &t("2")).unwrap(), t("1(2)"));
        assert_eq!(nap_compose(&t("1(2(3,4))"), &l("2"), &t("a(b(c))")).unwrap(), t("1(a(3,4,b(c)))"));
        assert_eq!(nap_compose(&t("s"), &l("s"), &t("a(b)")).unwrap(), t("a(b)"));
    }

    #[test]
    fn nap_at_root() {
        assert_eq!(nap_compose(&t("1(2,3)"), &l("1"), &t("a(b)")).unwrap(), t("a(2,3,b)"));
    }

    #[test]
    fn precondition_errors() {
        assert!(matches!(nap_compose(&t("1(2)"), &l("9"), &t("a")), Err(Error::LabelNotFound { .. })));
        assert!(matches!(nap_compose(&t("1(2)"), &l("2"), &t("1")), Err(Error::NotDisjoint { .. })));
        assert!(prelie_compose(&t("1(2)"), &l("2"), &t("a(1)")).is_err());
        assert!(mag_compose(&p("1(2)"), &l("3"), &p("a")).is_err());
        assert!(shuffle_mag_compose(&p("1(2)"), &l("2"), &p("1")).is_err());
    }

    #[test]
    fn prelie_leaf_substitution() {
        let got = prelie_compose(&t("1(2)"), &l("2"), &t("a(b)")).unwrap();
        assert_eq!(got, LinComb::basis(t("1(a(b))")));
    }

    #[test]
    fn prelie_two_functions() {
        let got = prelie_compose(&t("2(1)"), &l("2"), &t("a(b)")).unwrap();
        let want: LinComb<RootedTree> = [t("a(1,b)"), t("a(b(1))")].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn prelie_term_count_is_a_power() {
        let got = prelie_compose(&t("s(1,2)"), &l("s"), &t("a(b)")).unwrap();
        assert_eq!(got.len(), 4);
        assert_eq!(got.total(), coeff(4));
    }

    #[test]
    fn mag_examples() {
        assert_eq!(mag_compose(&p("1(2(3,4))"), &l("2"), &p("a(b(c))")).unwrap(), p("1(a(b(c),3,4))"));
        assert_eq!(mag_compose(&p("s(1,2)"), &l("s"), &p("a")).unwrap(), p("a(1,2)"));
        assert_ne!(mag_compose(&p("s(1,2)"), &l("s"), &p("a")).unwrap(), p("a(2,1)"));
        // s keeps its position among its siblings
        assert_eq!(mag_compose(&p("r(1,s,2)"), &l("s"), &p("a(b)")).unwrap(), p("r(1,a(b),2)"));
    }

    #[test]
    fn shuffle_example_has_three_terms() {
        let got = shuffle_mag_compose(&p("1(2(3,4))"), &l("2"), &p("a(b(c))")).unwrap();
        let want: LinComb<PlanarRootedTree> =
            [p("1(a(b(c),3,4))"), p("1(a(3,b(c),4))"), p("1(a(3,4,b(c)))")].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn shuffle_at_a_leaf_is_mag() {
        let x = p("1(2,3)");
        let y = p("a(b,c)");
        let got = shuffle_mag_compose(&x, &l("3"), &y).unwrap();
        assert_eq!(got, LinComb::basis(mag_compose(&x, &l("3"), &y).unwrap()));
    }
}
