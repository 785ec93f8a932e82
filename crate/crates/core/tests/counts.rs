use std::collections::BTreeSet;

use operadic::operads::{binomial, canonical_set, enumerate_multi_shuffles, enumerate_shuffles, multinomial, Mag, Nap, Operad, PreLie};
use operadic::trees::{knuth_phi, knuth_phi_shape, shapes, Tree};
use operadic::{FiniteSet, Label, PlanarBinaryTree};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

#[test]
fn rooted_trees_number_n_to_the_n_minus_one() {
    for n in 1..=6u32 {
        assert_eq!(Nap.dimension(n as usize), (n as usize).pow(n - 1), "n = {n}");
    }
}

#[test]
fn planar_trees_number_n_factorial_times_catalan() {
    assert_eq!(Mag.dimension(3), 12);
    for n in 1..=5u64 {
        assert_eq!(Mag.dimension(n as usize) as u64, factorial(n) * catalan(n - 1), "n = {n}");
    }
}

#[test]
fn bases_have_no_repeats_and_the_right_ground() {
    let set = canonical_set(4);
    let basis = Nap.basis(&set);
    assert_eq!(basis.iter().collect::<BTreeSet<_>>().len(), basis.len());
    assert!(basis.iter().all(|t| Nap.ground(t) == set));
    let basis = Mag.basis(&set);
    assert_eq!(basis.iter().collect::<BTreeSet<_>>().len(), basis.len());
}

fn labels(prefix: &str, n: usize) -> Vec<Label> {
    (0..n).map(|i| Label::from(format!("{prefix}{i}").as_str())).collect()
}

#[test]
fn shuffles_number_binomial() {
    for a in 0..=5 {
        for b in 0..=5 {
            let sh = enumerate_shuffles(&labels("a", a), &labels("b", b)).unwrap();
            assert_eq!(sh.len() as u128, binomial((a + b) as u64, a as u64));
            let distinct: BTreeSet<Vec<Label>> = sh.iter().map(|s| s.sequence()).collect();
            assert_eq!(distinct.len(), sh.len());
        }
    }
}

#[test]
fn iterated_shuffles_number_multinomial() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let lists = vec![labels("a", a), labels("b", b), labels("c", c)];
                let got = enumerate_multi_shuffles(&lists).unwrap();
                let by_formula = factorial((a + b + c) as u64) / (factorial(a as u64) * factorial(b as u64) * factorial(c as u64));
                assert_eq!(got.len() as u128, multinomial(&[a as u64, b as u64, c as u64]));
                assert_eq!(got.len() as u64, by_formula);
            }
        }
    }
}

#[test]
fn knuth_rotation_is_a_bijection_onto_shapes() {
    for n in 1..=6 {
        let binary = PlanarBinaryTree::enumerate(n);
        assert_eq!(binary.len() as u64, catalan(n as u64 - 1));
        let images: BTreeSet<_> = binary.iter().map(knuth_phi_shape).collect();
        assert_eq!(images.len(), binary.len(), "Φ is injective for {n} leaves");
        assert!(images.iter().all(|s| s.size() == n));
        assert_eq!(images, shapes(n).into_iter().collect(), "Φ is onto for {n} vertices");
    }
    let t = knuth_phi(&PlanarBinaryTree::enumerate(3)[0]);
    assert_eq!(t.vertex_list().len(), 3);
}

#[test]
fn prelie_multiplicity_is_a_power_of_the_inserted_size() {
    for k in 1..=3 {
        for m in 1..=2 {
            let s_set = canonical_set(k);
            let t_set: FiniteSet = ["a", "b"][..m].iter().map(|l| Label::from(*l)).collect();
            for t in PreLie.basis(&s_set) {
                for s in s_set.iter() {
                    for u in PreLie.basis(&t_set) {
                        let arity = t.children(s).len() as u32;
                        let total = PreLie.compose(&t, s, &u).unwrap().total();
                        assert_eq!(total, operadic::foundations::coeff((m as i64).pow(arity)), "{t} ∘_{s} {u}");
                    }
                }
            }
        }
    }
}
