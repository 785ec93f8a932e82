//! The operad contract and the concrete tree operads.

mod fixtures;
mod graft;
mod instances;
pub mod shuffle;

use std::fmt::{Debug, Display};

use crate::dot::ToDot;
use crate::error::Result;
use crate::foundations::{Bijection, FiniteSet, Label, LinComb};

pub use fixtures::{Com, Corolla, UnitOperad};
pub use graft::{mag_compose, nap_compose, prelie_compose, shuffle_mag_compose, shuffle_mag_terms};
pub use instances::{eq1_sides, Mag, Nap, PreLie, ShuffleMag, Sides};
pub use shuffle::{binomial, enumerate_multi_shuffles, enumerate_shuffles, multinomial, Shuffle, Side};

/// A positive symmetric operad given by partial compositions.
///
/// Elements of `q[S]` are linear combinations of basis elements; `compose`
/// is defined on basis elements and extended bilinearly by [`Operad::compose_lin`].
pub trait Operad: Sync {
    type Elem: Clone + Ord + Debug + Display + ToDot + Send + Sync;

    fn name(&self) -> String;

    /// Basis of `q[S]`; empty when `S` is empty.
    fn basis(&self, labels: &FiniteSet) -> Vec<Self::Elem>;

    /// The label set `S` with `x ∈ q[S]`.
    fn ground(&self, x: &Self::Elem) -> FiniteSet;

    /// `x ∘_s y ∈ q[S ⊔_s T]`.
    fn compose(&self, x: &Self::Elem, s: &Label, y: &Self::Elem) -> Result<LinComb<Self::Elem>>;

    /// The species action `q[σ]`.
    fn relabel(&self, x: &Self::Elem, sigma: &Bijection) -> Result<Self::Elem>;

    /// The unit `u_s ∈ q[{s}]`.
    fn unit(&self, s: &Label) -> Self::Elem;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;

    fn compose_lin(&self, x: &LinComb<Self::Elem>, s: &Label, y: &LinComb<Self::Elem>) -> Result<LinComb<Self::Elem>> {
        x.try_flat_map(|a| y.try_flat_map(|b| self.compose(a, s, b)))
    }

    fn relabel_lin(&self, x: &LinComb<Self::Elem>, sigma: &Bijection) -> Result<LinComb<Self::Elem>> {
        x.try_map(|a| self.relabel(a, sigma))
    }

    fn parse_lincomb(&self, text: &str) -> Result<LinComb<Self::Elem>> {
        LinComb::parse_with(text, |t| self.parse_elem(t))
    }

    /// `dim q[{1..n}]`; a species' dimensions depend only on cardinality.
    fn dimension(&self, n: usize) -> usize {
        self.basis(&canonical_set(n)).len()
    }
}

/// Operads whose basis elements are rooted trees, so `root(u)` is defined.
pub trait RootedOperad: Operad {
    fn root_label(&self, x: &Self::Elem) -> Label;
}

/// `{1, …, n}`.
pub fn canonical_set(n: usize) -> FiniteSet {
    (1..=n).map(|i| Label::from(i.to_string().as_str())).collect()
}
