//! Streaming enumeration of set partitions and embedded coalitions, plus the
//! inclusion order on embedded coalitions.
//!
//! Partitions of {0, …, n-1} are generated from restricted growth strings in
//! lexicographic order: a[0] = 0 and a[i] ≤ 1 + max(a[0..i]). Each string maps
//! to one partition, with block labels in order of first appearance, which is
//! exactly the canonical smallest-member block order. The stream starts at the
//! one-block partition (all zeros) and ends at the all-singletons partition.

use crate::error::{Error, Result};
use crate::model::{Coalition, EmbeddedCoalition, Partition, MAX_PLAYERS};

/// Iterator over all partitions of an `n`-player set; Bell(n) items.
pub fn partitions(n: usize) -> Result<PartitionIter> {
    if n == 0 || n > MAX_PLAYERS {
        return Err(Error::Capacity {
            players: n,
            limit: MAX_PLAYERS,
        });
    }
    Ok(PartitionIter {
        n,
        rgs: vec![0; n],
        // prefix_max[i] = max(rgs[0..=i]); rgs[i+1] may be at most prefix_max[i] + 1
        prefix_max: vec![0; n],
        done: false,
    })
}

pub struct PartitionIter {
    n: usize,
    rgs: Vec<u8>,
    prefix_max: Vec<u8>,
    done: bool,
}

impl PartitionIter {
    fn materialize(&self) -> Partition {
        let block_count = self.prefix_max[self.n - 1] as usize + 1;
        let mut blocks = vec![Coalition::EMPTY; block_count];
        for (player, &label) in self.rgs.iter().enumerate() {
            blocks[label as usize] = blocks[label as usize].with(player);
        }
        Partition::from_canonical_blocks(self.n, blocks)
    }

    /// Advance to the lexicographic successor; false when exhausted.
    fn advance(&mut self) -> bool {
        for i in (1..self.n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = self.materialize();
        if !self.advance() {
            self.done = true;
        }
        Some(current)
    }
}

/// Iterator over all embedded coalitions of an `n`-player set: every block of
/// every partition, actives in canonical block order within each partition.
/// Bell(n+1) - Bell(n) items.
pub fn embedded_coalitions(n: usize) -> Result<EmbeddedCoalitionIter> {
    Ok(EmbeddedCoalitionIter {
        partitions: partitions(n)?,
        current: None,
        next_block: 0,
    })
}

pub struct EmbeddedCoalitionIter {
    partitions: PartitionIter,
    current: Option<Partition>,
    next_block: usize,
}

impl Iterator for EmbeddedCoalitionIter {
    type Item = EmbeddedCoalition;

    fn next(&mut self) -> Option<EmbeddedCoalition> {
        loop {
            if let Some(p) = &self.current {
                if self.next_block < p.block_count() {
                    let active = p.blocks()[self.next_block];
                    self.next_block += 1;
                    let ec = EmbeddedCoalition::new(active, p.clone())
                        .expect("active is drawn from the partition's own blocks");
                    return Some(ec);
                }
            }
            self.current = Some(self.partitions.next()?);
            self.next_block = 0;
        }
    }
}

/// Inclusion on embedded coalitions: (S;P) ⊑ (T;Q) iff S ⊆ T and every block
/// of Q other than T is contained in some block of P. Going up, the active
/// coalition grows while the outside partition refines.
pub fn ec_subset(a: &EmbeddedCoalition, b: &EmbeddedCoalition) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::MalformedInput(format!(
            "embedded coalitions over different player sets ({} vs {})",
            a.n(),
            b.n()
        )));
    }
    if !a.active().is_subset_of(b.active()) {
        return Ok(false);
    }
    let inside = b
        .outside_blocks()
        .all(|t| a.partition().blocks().iter().any(|s| t.is_subset_of(*s)));
    Ok(inside)
}

/// Strict version of [`ec_subset`].
pub fn ec_proper_subset(a: &EmbeddedCoalition, b: &EmbeddedCoalition) -> Result<bool> {
    Ok(ec_subset(a, b)? && a != b)
}
