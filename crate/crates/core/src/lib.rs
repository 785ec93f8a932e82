//! Operads on labeled rooted trees and operad structures on species
//! compositions `P ∘ q`.
//!
//! The crate provides the tree operads NAP, Pre-Lie, Mag and shuffle-Mag,
//! the partial compositions `□` on `NAP ∘ q` and `◇` on `Mag ∘ q` for any
//! positive operad `q`, and an exhaustive checker for the operad axioms.

pub mod composition;
pub mod dot;
mod error;
pub mod foundations;
pub mod lawcheck;
pub mod operads;
mod text;
pub mod trees;

pub use error::{Error, Result};
pub use foundations::{Bijection, Coefficient, FiniteSet, Label, LinComb, Partition};
pub use operads::Operad;
pub use trees::{PlanarBinaryTree, PlanarRootedTree, RootedTree};
