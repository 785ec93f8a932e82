//! A second implementation of the four tree compositions.
//!
//! Trees are nested terms here and a composition rebuilds the path from the
//! root down to `s`, while the primary implementations edit parent and child
//! maps. Shuffles are enumerated as position subsets instead of interleavings.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundations::{Label, LinComb};
use crate::trees::Tree;

/// Which composition the oracle recomputes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleKind {
    Nap,
    PreLie,
    Mag,
    ShuffleMag,
}

impl OracleKind {
    pub const ALL: [OracleKind; 4] = [OracleKind::Nap, OracleKind::PreLie, OracleKind::Mag, OracleKind::ShuffleMag];

    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Nap => "nap",
            OracleKind::PreLie => "prelie",
            OracleKind::Mag => "mag",
            OracleKind::ShuffleMag => "shmag",
        }
    }

    pub fn is_planar(self) -> bool {
        matches!(self, OracleKind::Mag | OracleKind::ShuffleMag)
    }
}

/// A labeled tree as a nested term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Term {
    pub label: Label,
    pub children: Vec<Term>,
}

impl Term {
    pub fn from_tree<T: Tree<Label>>(tree: &T) -> Term {
        fn build(v: &Label, lists: &std::collections::BTreeMap<Label, Vec<Label>>) -> Term {
            Term {
                label: v.clone(),
                children: lists.get(v).map(|cs| cs.iter().map(|c| build(c, lists)).collect()).unwrap_or_default(),
            }
        }
        build(tree.root(), &tree.child_lists())
    }

    /// Sorts children recursively, giving one representative per non-planar tree.
    pub fn normalized(&self) -> Term {
        let mut children: Vec<Term> = self.children.iter().map(Term::normalized).collect();
        children.sort();
        Term { label: self.label.clone(), children }
    }

    fn labels(&self, out: &mut Vec<Label>) {
        out.push(self.label.clone());
        for c in &self.children {
            c.labels(out);
        }
    }

    fn contains(&self, s: &Label) -> bool {
        self.label == *s || self.children.iter().any(|c| c.contains(s))
    }

    /// Every tree obtained by replacing the subtree at `s` with one of `alternatives(children of s)`.
    fn substitute(&self, s: &Label, alternatives: &dyn Fn(&[Term]) -> Vec<Term>) -> Vec<Term> {
        if self.label == *s {
            return alternatives(&self.children);
        }
        let Some(i) = self.children.iter().position(|c| c.contains(s)) else {
            return Vec::new();
        };
        self.children[i]
            .substitute(s, alternatives)
            .into_iter()
            .map(|replacement| {
                let mut t = self.clone();
                t.children[i] = replacement;
                t
            })
            .collect()
    }

    /// Appends `extra[j]` below the `targets[j]`-th vertex in pre-order.
    fn attach(&self, extra: &[Term], targets: &[usize], next: &mut usize) -> Term {
        let me = *next;
        *next += 1;
        let mut children: Vec<Term> = self.children.iter().map(|c| c.attach(extra, targets, next)).collect();
        children.extend(targets.iter().zip(extra).filter(|(t, _)| **t == me).map(|(_, e)| e.clone()));
        Term { label: self.label.clone(), children }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn with_children(u: &Term, children: Vec<Term>) -> Term {
    Term { label: u.label.clone(), children }
}

fn position_shuffles(first: &[Term], second: &[Term]) -> Vec<Vec<Term>> {
    let n = first.len() + second.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != first.len() {
            continue;
        }
        let (mut a, mut b) = (first.iter(), second.iter());
        let seq = (0..n)
            .map(|p| if mask >> p & 1 == 1 { a.next() } else { b.next() }.unwrap().clone())
            .collect();
        out.push(seq);
    }
    out
}

/// Recomputes `t ∘_s u` for the given operad.
///
/// The result is normalized with [`Term::normalized`] for the non-planar kinds.
pub fn brute_force_oracle_compose(kind: OracleKind, t: &Term, s: &Label, u: &Term) -> Result<LinComb<Term>> {
    let (mut outer, mut inner) = (Vec::new(), Vec::new());
    t.labels(&mut outer);
    u.labels(&mut inner);
    if !outer.contains(s) {
        return Err(Error::LabelNotFound {
            label: s.to_string(),
            context: t.to_string(),
        });
    }
    if let Some(l) = inner.iter().find(|l| *l != s && outer.contains(l)) {
        return Err(Error::NotDisjoint { overlap: l.to_string() });
    }
    let alternatives = |cs: &[Term]| -> Vec<Term> {
        match kind {
            OracleKind::Nap | OracleKind::Mag => {
                vec![with_children(u, u.children.iter().chain(cs).cloned().collect())]
            }
            OracleKind::ShuffleMag => position_shuffles(&u.children, cs)
                .into_iter()
                .map(|seq| with_children(u, seq))
                .collect(),
            OracleKind::PreLie => {
                let m = inner.len();
                let total = m.pow(cs.len() as u32);
                (0..total)
                    .map(|mut code| {
                        let targets: Vec<usize> = cs
                            .iter()
                            .map(|_| {
                                let d = code % m;
                                code /= m;
                                d
                            })
                            .collect();
                        u.attach(cs, &targets, &mut 0)
                    })
                    .collect()
            }
        }
    };
    Ok(t
        .substitute(s, &alternatives)
        .into_iter()
        .map(|r| if kind.is_planar() { r } else { r.normalized() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::coeff;
    use crate::trees::{PlanarRootedTree, RootedTree};

    fn term(s: &str) -> Term {
        Term::from_tree(&s.parse::<PlanarRootedTree>().unwrap())
    }

    #[test]
    fn shuffle_example_has_three_terms() {
        let r = brute_force_oracle_compose(OracleKind::ShuffleMag, &term("1(2(3,4))"), &"2".into(), &term("a(b(c))")).unwrap();
        let shown: Vec<String> = r.basis_elements().map(|t| t.to_string()).collect();
        assert_eq!(shown.len(), 3);
        assert!(shown.contains(&"1(a(b(c),3,4))".to_string()));
        assert!(shown.contains(&"1(a(3,b(c),4))".to_string()));
        assert!(shown.contains(&"1(a(3,4,b(c)))".to_string()));
    }

    #[test]
    fn prelie_multiplicities() {
        let t = Term::from_tree(&"1(2(3,4))".parse::<RootedTree>().unwrap());
        let u = Term::from_tree(&"a(b)".parse::<RootedTree>().unwrap());
        let r = brute_force_oracle_compose(OracleKind::PreLie, &t, &"2".into(), &u).unwrap();
        assert_eq!(r.total(), coeff(4));
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn rejects_bad_points() {
        assert!(brute_force_oracle_compose(OracleKind::Nap, &term("1"), &"2".into(), &term("a")).is_err());
        assert!(brute_force_oracle_compose(OracleKind::Nap, &term("1(2)"), &"2".into(), &term("1")).is_err());
        assert!(brute_force_oracle_compose(OracleKind::Nap, &term("1(2)"), &"2".into(), &term("2(a)")).is_ok());
    }
}
