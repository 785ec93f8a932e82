use super::*;
use crate::foundations::coeff;
use crate::operads::{shuffle::binomial, Com, Mag, Nap, ShuffleMag};
use crate::trees::RootedTree;

fn l(s: &str) -> Label {
    Label::from(s)
}

fn nap_elem<Q: Operad>(q: &Q, text: &str) -> NapElement<Q::Elem> {
    parse_composition_element(q, text).unwrap()
}

fn mag_elem<Q: Operad>(q: &Q, text: &str) -> MagElement<Q::Elem> {
    parse_composition_element(q, text).unwrap()
}

#[test]
fn singleton_units_reduce_box_to_nap() {
    let t: RootedTree = "1(2(3,4))".parse().unwrap();
    let u: RootedTree = "a(b(c))".parse().unwrap();
    let x: NapElement<_> = lift_singletons(&Com, &t).unwrap();
    let y: NapElement<_> = lift_singletons(&Com, &u).unwrap();
    let got = box_compose(&Com, &x, &l("2"), &y).unwrap();
    assert_eq!(got.len(), 1);
    let (elem, c) = got.iter().next().unwrap();
    assert_eq!(*c, coeff(1));
    let lowered = lower_singletons(&Com, elem).unwrap().to_nonplanar();
    assert_eq!(lowered, nap_compose(&t, &l("2"), &u).unwrap());
}

#[test]
fn single_blocks_only_compose_values() {
    let x = nap_elem(&Nap, "{blocks: [[1,2]], tree: \"b0\", values: {b0: 1(2)}}");
    let y = nap_elem(&Nap, "{blocks: [[a]], tree: \"b0\", values: {b0: a}}");
    let got = box_compose(&Nap, &x, &l("1"), &y).unwrap();
    let want = nap_elem(&Nap, "{blocks: [[2,a]], tree: \"b0\", values: {b0: a(2)}}");
    assert_eq!(got, LinComb::basis(want));
}

#[test]
fn box_follows_the_block_picture() {
    // C1 at the root, C2 ∋ s above it carrying C3 and C4; u is a chain Ba - Bb - Bc
    let x = nap_elem(
        &Com,
        "{blocks: [[1],[2,3],[4],[6]], tree: \"b0(b1(b2,b3))\", values: {b0: e{1}, b1: e{2,3}, b2: e{4}, b3: e{6}}}",
    );
    let y = nap_elem(
        &Com,
        "{blocks: [[a],[b,c],[d]], tree: \"b0(b1(b2))\", values: {b0: e{a}, b1: e{b,c}, b2: e{d}}}",
    );
    let got = box_compose(&Com, &x, &l("3"), &y).unwrap();
    let want = nap_elem(
        &Com,
        "{blocks: [[1],[2,a],[4],[6],[b,c],[d]], tree: \"b0(b1(b2,b3,b4(b5)))\", \
         values: {b0: e{1}, b1: e{2,a}, b2: e{4}, b3: e{6}, b4: e{b,c}, b5: e{d}}}",
    );
    assert_eq!(got, LinComb::basis(want));
    let out = got.iter().next().unwrap().0;
    assert_eq!(out.partition(), glue_partitions_of(&x, "3", &y));
}

fn glue_partitions_of<T: BlockTree, E: Clone>(
    x: &CompositionElement<T, E>,
    s: &str,
    y: &CompositionElement<T, E>,
) -> crate::foundations::Partition {
    crate::foundations::glue_partitions(&x.partition(), &l(s), &y.partition(), y.root_block()).unwrap()
}

#[test]
fn box_with_summing_q_expands_bilinearly() {
    let x = nap_elem(&ShuffleMag, "{blocks: [[1,2],[3]], tree: \"b0(b1)\", values: {b0: 1(2), b1: 3}}");
    let y = nap_elem(&ShuffleMag, "{blocks: [[a,b]], tree: \"b0\", values: {b0: a(b)}}");
    let got = box_compose(&ShuffleMag, &x, &l("1"), &y).unwrap();
    // 1(2) △_1 a(b) has two terms, the block tree is forced
    assert_eq!(got.len(), 2);
    for (e, _) in got.iter() {
        assert_eq!(e.partition().to_string(), "{{2,a,b},{3}}");
    }
}

#[test]
fn diamond_term_count_is_binomial_times_q_terms() {
    let x = mag_elem(
        &ShuffleMag,
        "{blocks: [[1,2],[3],[4]], tree: \"b0(b1,b2)\", values: {b0: 1(2), b1: 3, b2: 4}}",
    );
    let y = mag_elem(&ShuffleMag, "{blocks: [[a,b],[c]], tree: \"b0(b1)\", values: {b0: a(b), b1: c}}");
    let got = diamond_compose(&ShuffleMag, &x, &l("1"), &y).unwrap();
    let q_terms = ShuffleMag.compose(&"1(2)".parse().unwrap(), &l("1"), &"a(b)".parse().unwrap()).unwrap().len();
    assert_eq!(q_terms, 2);
    assert_eq!(got.len() as u128, binomial(3, 2) * q_terms as u128);
    assert_eq!(got.total(), coeff(6));
}

#[test]
fn diamond_single_vertices_have_one_shuffle() {
    let x = mag_elem(&Mag, "{blocks: [[1,2]], tree: \"b0\", values: {b0: 2(1)}}");
    let y = mag_elem(&Mag, "{blocks: [[a,b]], tree: \"b0\", values: {b0: a(b)}}");
    let got = diamond_compose(&Mag, &x, &l("2"), &y).unwrap();
    let want = mag_elem(&Mag, "{blocks: [[1,a,b]], tree: \"b0\", values: {b0: a(b,1)}}");
    assert_eq!(got, LinComb::basis(want));
}

#[test]
fn dimensions_match_enumeration() {
    let three = FiniteSet::of(&["1", "2", "3"]);
    assert_eq!(composition_dimension(&Nap, &Nap, &three), 30);
    assert_eq!(enumerate_elements::<RootedTree<FiniteSet>, _>(&Nap, &three).len(), 30);
    let two = FiniteSet::of(&["1", "2"]);
    assert_eq!(composition_dimension(&Mag, &Mag, &two), 4);
    assert_eq!(enumerate_elements::<PlanarRootedTree<FiniteSet>, _>(&Mag, &two).len(), 4);
    assert_eq!(composition_dimension(&Nap, &ShuffleMag, &FiniteSet::of(&["1"])), 1);
    assert_eq!(composition_dimension(&Nap, &Com, &FiniteSet::empty()), 0);
}

#[test]
fn text_round_trip_over_a_whole_basis() {
    let op = MagOver(ShuffleMag);
    for x in op.basis(&FiniteSet::of(&["1", "2", "3"])) {
        assert_eq!(op.parse_elem(&x.to_string()).unwrap(), x);
    }
    let op = NapOver(Com);
    for x in op.basis(&FiniteSet::of(&["1", "2", "3"])) {
        assert_eq!(op.parse_elem(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn parse_rejects_inconsistent_elements() {
    let bad_block = "{blocks: [[1,2]], tree: \"b0\", values: {b0: 1(3)}}";
    assert!(matches!(NapOver(Nap).parse_elem(bad_block), Err(Error::InvalidElement(_))));
    let unknown = "{blocks: [[1]], tree: \"b1\", values: {b0: 1}}";
    assert!(matches!(NapOver(Nap).parse_elem(unknown), Err(Error::Parse { .. })));
    let missing = "{blocks: [[1],[2]], tree: \"b0(b1)\", values: {b0: 1}}";
    assert!(NapOver(Nap).parse_elem(missing).is_err());
    let overlap = "{blocks: [[1],[1]], tree: \"b0(b1)\", values: {b0: 1, b1: 1}}";
    assert!(NapOver(Nap).parse_elem(overlap).is_err());
}

#[test]
fn relabel_identity_and_inverse() {
    let op = NapOver(Nap);
    let x = op.parse_elem("{blocks: [[1,2],[3]], tree: \"b1(b0)\", values: {b0: 2(1), b1: 3}}").unwrap();
    let id = Bijection::identity(&x.ground());
    assert_eq!(relabel_composition(&Nap, &x, &id).unwrap(), x);
    let sigma = Bijection::of(&[("1", "3"), ("2", "1"), ("3", "2")]);
    let y = relabel_composition(&Nap, &x, &sigma).unwrap();
    assert_eq!(y.to_string(), "{blocks: [[1,3],[2]], tree: \"b1(b0)\", values: {b0: 1(3), b1: 2}}");
    assert_eq!(relabel_composition(&Nap, &y, &sigma.inverse()).unwrap(), x);
    assert!(relabel_composition(&Nap, &x, &Bijection::of(&[("1", "1")])).is_err());
}

#[test]
fn composition_errors() {
    let op = NapOver(Com);
    let x = op.unit(&l("1"));
    let y = op.unit(&l("a"));
    assert!(matches!(op.compose(&x, &l("9"), &y), Err(Error::LabelNotFound { .. })));
    let x2 = op.parse_elem("{blocks: [[1,2]], tree: \"b0\", values: {b0: e{1,2}}}").unwrap();
    let y2 = op.unit(&l("2"));
    assert!(matches!(op.compose(&x2, &l("1"), &y2), Err(Error::NotDisjoint { .. })));
}

#[test]
fn units_of_composite_operads() {
    let op = MagOver(ShuffleMag);
    let x = op.parse_elem("{blocks: [[1,2],[3]], tree: \"b0(b1)\", values: {b0: 1(2), b1: 3}}").unwrap();
    for s in ["1", "2", "3"] {
        assert_eq!(op.compose(&x, &l(s), &op.unit(&l(s))).unwrap(), LinComb::basis(x.clone()));
    }
    assert_eq!(op.compose(&op.unit(&l("z")), &l("z"), &x).unwrap(), LinComb::basis(x));
}
