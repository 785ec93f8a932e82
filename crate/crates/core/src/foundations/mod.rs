//! Set-indexing substrate: labels, finite sets, bijections, partitions and
//! exact linear combinations.

mod bijection;
mod finite_set;
pub(crate) mod label;
mod lincomb;
mod partition;

pub use bijection::{permutations, Bijection};
pub use finite_set::{glue_sets, FiniteSet};
pub use label::Label;
pub use lincomb::{coeff, parse_coefficient, Coefficient, LinComb};
pub use partition::{glue_partitions, set_partitions, Partition};
