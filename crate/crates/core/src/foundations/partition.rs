use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::foundations::{FiniteSet, Label};
use crate::text::Cursor;

/// A set partition, blocks sorted by their minimal label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    ground: FiniteSet,
    blocks: Vec<FiniteSet>,
}

impl Partition {
    /// Validates and canonicalizes a list of blocks.
    pub fn new(blocks: Vec<FiniteSet>) -> Result<Self> {
        let mut ground = FiniteSet::empty();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !ground.is_disjoint(b) {
                return Err(Error::InvalidPartition(format!(
                    "blocks overlap on {}",
                    ground.intersection(b)
                )));
            }
            ground = ground.union(b);
        }
        let mut blocks = blocks;
        blocks.sort_by(|a, b| a.min().cmp(&b.min()));
        Ok(Partition { ground, blocks })
    }

    pub fn ground(&self) -> &FiniteSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[FiniteSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, label: &Label) -> Option<&FiniteSet> {
        self.blocks.iter().find(|b| b.contains(label))
    }

    pub fn contains_block(&self, block: &FiniteSet) -> bool {
        self.blocks.iter().any(|b| b == block)
    }
}

/// The partition of `S ⊔_s T` whose blocks are `π ∖ {C_s}`, `ρ ∖ {B★}` and
/// the merged block `C_s ⊔_s B★`, where `C_s` is the block of `π` holding `s`.
pub fn glue_partitions(pi: &Partition, s: &Label, rho: &Partition, designated: &FiniteSet) -> Result<Partition> {
    let c_s = pi.block_of(s).ok_or_else(|| Error::LabelNotFound {
        label: s.to_string(),
        context: pi.ground().to_string(),
    })?;
    if !rho.contains_block(designated) {
        return Err(Error::InvalidPartition(format!("{designated} is not a block of {rho}")));
    }
    // checks disjointness of S ∖ {s} and T
    pi.ground().glue(s, rho.ground())?;
    let merged = c_s.without(s).union(designated);
    let blocks = pi
        .blocks()
        .iter()
        .filter(|b| *b != c_s)
        .chain(rho.blocks().iter().filter(|b| *b != designated))
        .cloned()
        .chain(std::iter::once(merged))
        .collect();
    Partition::new(blocks)
}

/// Every partition of `ground`, enumerated by restricted growth strings.
pub fn set_partitions(ground: &FiniteSet) -> Vec<Partition> {
    let labels = ground.labels();
    let n = labels.len();
    if n == 0 {
        return vec![Partition {
            ground: FiniteSet::empty(),
            blocks: Vec::new(),
        }];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![FiniteSet::empty(); k];
        for (l, &b) in labels.iter().zip(&rgs) {
            blocks[b].insert(l.clone());
        }
        out.push(Partition {
            ground: ground.clone(),
            blocks,
        });
        // next restricted growth string: a[i] <= 1 + max(a[..i])
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in &mut rgs[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `{{1,2},{3}}`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let blocks = cur.label_list_list('{', '}')?;
        cur.finish()?;
        Partition::new(
            blocks
                .into_iter()
                .map(FiniteSet::try_from_labels)
                .collect::<Result<_>>()?,
        )
    }
}
