use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::foundations::{FiniteSet, Label};

/// A bijection between two finite label sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bijection {
    map: BTreeMap<Label, Label>,
}

impl Bijection {
    /// Builds a bijection from `(source, target)` pairs. Fails if a source
    /// repeats or two sources share a target.
    pub fn new<I: IntoIterator<Item = (Label, Label)>>(pairs: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut seen = FiniteSet::empty();
        for (a, b) in pairs {
            if map.contains_key(&a) {
                return Err(Error::InvalidBijection(format!("`{a}` mapped twice")));
            }
            if !seen.insert(b.clone()) {
                return Err(Error::InvalidBijection(format!("`{b}` hit twice")));
            }
            map.insert(a, b);
        }
        Ok(Bijection { map })
    }

    /// Literal pairs; panics on invalid input. Meant for tests and fixtures.
    pub fn of(pairs: &[(&str, &str)]) -> Self {
        Self::new(pairs.iter().map(|(a, b)| (Label::from(*a), Label::from(*b))))
            .expect("invalid bijection literal")
    }

    pub fn identity(set: &FiniteSet) -> Self {
        Bijection {
            map: set.iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    /// The bijection `source[i] -> target[i]`.
    pub fn zip(source: &[Label], target: &[Label]) -> Result<Self> {
        if source.len() != target.len() {
            return Err(Error::InvalidBijection(format!(
                "{} sources for {} targets",
                source.len(),
                target.len()
            )));
        }
        Self::new(source.iter().cloned().zip(target.iter().cloned()))
    }

    pub fn domain(&self) -> FiniteSet {
        self.map.keys().cloned().collect()
    }

    pub fn codomain(&self) -> FiniteSet {
        self.map.values().cloned().collect()
    }

    pub fn apply(&self, label: &Label) -> Option<&Label> {
        self.map.get(label)
    }

    /// Applies the map, reporting a missing label as an error.
    pub fn image(&self, label: &Label) -> Result<Label> {
        self.map.get(label).cloned().ok_or_else(|| Error::LabelNotFound {
            label: label.to_string(),
            context: format!("the domain of {self}"),
        })
    }

    pub fn image_set(&self, set: &FiniteSet) -> Result<FiniteSet> {
        set.iter().map(|l| self.image(l)).collect()
    }

    pub fn inverse(&self) -> Bijection {
        Bijection {
            map: self.map.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// `then ∘ self`: apply `self` first.
    pub fn then(&self, then: &Bijection) -> Result<Bijection> {
        if self.codomain() != then.domain() {
            return Err(Error::DomainMismatch {
                expected: self.codomain().to_string(),
                found: then.domain().to_string(),
            });
        }
        Ok(Bijection {
            map: self
                .map
                .iter()
                .map(|(a, b)| (a.clone(), then.map[b].clone()))
                .collect(),
        })
    }

    pub fn restrict(&self, set: &FiniteSet) -> Result<Bijection> {
        Ok(Bijection {
            map: set
                .iter()
                .map(|l| Ok((l.clone(), self.image(l)?)))
                .collect::<Result<_>>()?,
        })
    }

    /// Disjoint union of two bijections; fails if the result is not injective
    /// or the domains overlap.
    pub fn union(&self, other: &Bijection) -> Result<Bijection> {
        Self::new(self.map.iter().chain(other.map.iter()).map(|(a, b)| (a.clone(), b.clone())))
    }

    /// Checks that the domain is exactly `set`.
    pub fn require_domain(&self, set: &FiniteSet) -> Result<()> {
        let dom = self.domain();
        if &dom != set {
            return Err(Error::DomainMismatch {
                expected: set.to_string(),
                found: dom.to_string(),
            });
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &Label)> {
        self.map.iter()
    }

    /// Every bijection from `source` onto `target`, in lexicographic order of
    /// the image sequence.
    pub fn all(source: &FiniteSet, target: &FiniteSet) -> Vec<Bijection> {
        if source.len() != target.len() {
            return Vec::new();
        }
        let src = source.labels();
        permutations(&target.labels())
            .into_iter()
            .map(|img| Bijection {
                map: src.iter().cloned().zip(img).collect(),
            })
            .collect()
    }
}

/// All orderings of `items`, lexicographic in input position.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (a, b)) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}->{b}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
