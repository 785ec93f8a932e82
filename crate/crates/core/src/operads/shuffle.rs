use std::fmt::Debug;

use crate::error::{Error, Result};

/// Which input list an entry of a shuffle came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An interleaving of two ordered lists that keeps each list's own order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shuffle<T> {
    items: Vec<(Side, T)>,
}

impl<T: Clone> Shuffle<T> {
    pub fn items(&self) -> &[(Side, T)] {
        &self.items
    }

    /// The merged sequence with the source tags dropped.
    pub fn sequence(&self) -> Vec<T> {
        self.items.iter().map(|(_, x)| x.clone()).collect()
    }

    /// The entries that came from `side`, in merged order.
    pub fn restrict(&self, side: Side) -> Vec<T> {
        self.items.iter().filter(|(s, _)| *s == side).map(|(_, x)| x.clone()).collect()
    }
}

/// All `(A, B)`-shuffles. Left entries are placed first at each branching,
/// so `([x], [y])` yields `xy` before `yx`.
pub fn enumerate_shuffles<T: Clone + PartialEq + Debug>(a: &[T], b: &[T]) -> Result<Vec<Shuffle<T>>> {
    if let Some(x) = a.iter().find(|x| b.contains(x)) {
        return Err(Error::NotDisjoint {
            overlap: format!("{x:?}"),
        });
    }
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(a.len() + b.len());
    interleave(a, b, &mut acc, &mut out);
    Ok(out)
}

fn interleave<T: Clone>(a: &[T], b: &[T], acc: &mut Vec<(Side, T)>, out: &mut Vec<Shuffle<T>>) {
    match (a.split_first(), b.split_first()) {
        (None, None) => out.push(Shuffle { items: acc.clone() }),
        (ha, hb) => {
            if let Some((x, rest)) = ha {
                acc.push((Side::Left, x.clone()));
                interleave(rest, b, acc, out);
                acc.pop();
            }
            if let Some((y, rest)) = hb {
                acc.push((Side::Right, y.clone()));
                interleave(a, rest, acc, out);
                acc.pop();
            }
        }
    }
}

/// Merged sequences of all shuffles of `a` and `b`, skipping the overlap check.
pub(crate) fn interleavings<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(a.len() + b.len());
    interleave(a, b, &mut acc, &mut out);
    out.into_iter().map(|s| s.sequence()).collect()
}

/// All `(A_1, …, A_k)`-shuffles, built by shuffling the lists in one at a time.
pub fn enumerate_multi_shuffles<T: Clone + PartialEq + Debug>(lists: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let mut acc: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::new();
        for merged in &acc {
            for sh in enumerate_shuffles(merged, list)? {
                next.push(sh.sequence());
            }
        }
        acc = next;
    }
    Ok(acc)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// `(n_1 + … + n_k)! / (n_1! ⋯ n_k!)`.
pub fn multinomial(sizes: &[u64]) -> u128 {
    let mut total = 0;
    let mut acc = 1u128;
    for &n in sizes {
        total += n;
        acc *= binomial(total, n);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_singletons() {
        let got: Vec<Vec<&str>> = enumerate_shuffles(&["x"], &["y"]).unwrap().iter().map(Shuffle::sequence).collect();
        assert_eq!(got, [["x", "y"], ["y", "x"]]);
    }

    #[test]
    fn empty_side_gives_one_shuffle() {
        let got = enumerate_shuffles::<&str>(&[], &["b1", "b2"]).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].sequence(), ["b1", "b2"]);
    }

    #[test]
    fn three_shuffles_of_34_and_b() {
        let mut got: Vec<String> = enumerate_shuffles(&["3", "4"], &["b"])
            .unwrap()
            .iter()
            .map(|s| s.sequence().concat())
            .collect();
        got.sort();
        assert_eq!(got, ["34b", "3b4", "b34"]);
    }

    #[test]
    fn overlap_is_an_error() {
        assert!(enumerate_shuffles(&[1, 2], &[2]).is_err());
    }

    #[test]
    fn restrictions_keep_order() {
        for sh in enumerate_shuffles(&[1, 2, 3], &[7, 8]).unwrap() {
            assert_eq!(sh.restrict(Side::Left), [1, 2, 3]);
            assert_eq!(sh.restrict(Side::Right), [7, 8]);
        }
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(multinomial(&[1, 2, 3]), 60);
        assert_eq!(multinomial(&[]), 1);
    }
}
