use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::foundations::Label;

/// A finite set of labels, iterated in label order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteSet(BTreeSet<Label>);

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet(BTreeSet::new())
    }

    pub fn singleton(label: Label) -> Self {
        FiniteSet(BTreeSet::from([label]))
    }

    /// Builds a set from labels, failing on repeats.
    pub fn try_from_labels<I: IntoIterator<Item = Label>>(labels: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for l in labels {
            if let Some(dup) = set.replace(l) {
                return Err(Error::DuplicateLabel(dup.to_string()));
            }
        }
        Ok(FiniteSet(set))
    }

    /// Convenience constructor for literals; repeats are merged.
    pub fn of(labels: &[&str]) -> Self {
        FiniteSet(labels.iter().map(|s| Label::from(*s)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.0.contains(label)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Label> + ExactSizeIterator {
        self.0.iter()
    }

    pub fn min(&self) -> Option<&Label> {
        self.0.first()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.0.iter().cloned().collect()
    }

    pub fn without(&self, label: &Label) -> FiniteSet {
        let mut out = self.0.clone();
        out.remove(label);
        FiniteSet(out)
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn is_disjoint(&self, other: &FiniteSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// `S ⊔_s T = (S ∖ {s}) ∪ T`.
    ///
    /// `T` may contain `s` itself; only `S ∖ {s}` has to be disjoint from `T`.
    pub fn glue(&self, s: &Label, other: &FiniteSet) -> Result<FiniteSet> {
        if !self.contains(s) {
            return Err(Error::LabelNotFound {
                label: s.to_string(),
                context: self.to_string(),
            });
        }
        let rest = self.without(s);
        let overlap = rest.intersection(other);
        if !overlap.is_empty() {
            return Err(Error::NotDisjoint {
                overlap: overlap.to_string(),
            });
        }
        Ok(rest.union(other))
    }

    /// The labels of `self` that are not in `other`.
    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.difference(&other.0).cloned().collect())
    }

    pub(crate) fn insert(&mut self, label: Label) -> bool {
        self.0.insert(label)
    }
}

/// Glues `S ⊔_s T`; see [`FiniteSet::glue`].
pub fn glue_sets(s_set: &FiniteSet, s: &Label, t_set: &FiniteSet) -> Result<FiniteSet> {
    s_set.glue(s, t_set)
}

impl FromIterator<Label> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        FiniteSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Label;
    type IntoIter = std::collections::btree_set::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
