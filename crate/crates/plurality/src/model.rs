//! Players, coalitions, partitions and game descriptions.
//!
//! Players are dense indices into a [`PlayerTable`]; a [`Coalition`] is a
//! bitset over those indices, which caps the supported player count at
//! [`MAX_PLAYERS`]. A weighted majority game is either characteristic
//! (win = reach a quota) or partition-form (win = outweigh every rival block
//! in the coalition structure, modulo a [`TieRule`]).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard ceiling on the player count; a `Coalition` is a 16-bit set and
/// Bell(15) ≈ 1.4e9 is the largest partition space worth enumerating.
pub const MAX_PLAYERS: usize = 15;

/// Soft ceiling applied when loading game documents; overridable up to
/// [`MAX_PLAYERS`].
pub const DEFAULT_CAPACITY: usize = 12;

/// Player-count limit used when loading documents, `DEFAULT_CAPACITY` unless
/// overridden.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capacity(usize);

impl Capacity {
    pub fn new(limit: usize) -> Result<Self> {
        if limit == 0 || limit > MAX_PLAYERS {
            return Err(Error::Capacity {
                players: limit,
                limit: MAX_PLAYERS,
            });
        }
        Ok(Capacity(limit))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, players: usize) -> Result<()> {
        if players == 0 || players > self.0 {
            return Err(Error::Capacity {
                players,
                limit: self.0,
            });
        }
        Ok(())
    }
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity(DEFAULT_CAPACITY)
    }
}

/// Set of players, stored as a bitmask over table indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coalition(u16);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    /// The grand coalition {0, …, n-1}.
    pub fn full(n: usize) -> Coalition {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(player: usize) -> Coalition {
        debug_assert!(player < MAX_PLAYERS);
        Coalition(1 << player)
    }

    pub fn from_indices(players: impl IntoIterator<Item = usize>) -> Coalition {
        players
            .into_iter()
            .fold(Coalition::EMPTY, |c, p| c.with(p))
    }

    pub(crate) fn from_bits(bits: u16) -> Coalition {
        Coalition(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, player: usize) -> bool {
        player < 16 && self.0 & (1 << player) != 0
    }

    #[must_use]
    pub fn with(self, player: usize) -> Coalition {
        debug_assert!(player < MAX_PLAYERS);
        Coalition(self.0 | (1 << player))
    }

    #[must_use]
    pub fn without(self, player: usize) -> Coalition {
        Coalition(self.0 & !(1 << player))
    }

    #[must_use]
    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member index, if any.
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// Lexicographic order on the ascending member lists, so {0,3} < {1,2}
    /// even though its bit pattern is numerically larger.
    pub fn cmp_members(self, other: Coalition) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Player {
    pub id: String,
    pub weight: u64,
    pub votes: Option<u64>,
}

/// Ordered roster of players with weights and optional election-vote counts.
///
/// Invariants enforced at construction: 1 ≤ n ≤ [`MAX_PLAYERS`], ids unique
/// and non-empty, at least one positive weight, and votes either present for
/// every player or for none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerTable {
    players: Vec<Player>,
}

impl PlayerTable {
    pub fn new(players: Vec<Player>) -> Result<Self> {
        if players.is_empty() || players.len() > MAX_PLAYERS {
            return Err(Error::Capacity {
                players: players.len(),
                limit: MAX_PLAYERS,
            });
        }
        for (i, p) in players.iter().enumerate() {
            if p.id.is_empty() {
                return Err(Error::MalformedInput(format!("player {i} has an empty id")));
            }
            if players[..i].iter().any(|q| q.id == p.id) {
                return Err(Error::MalformedInput(format!("duplicate player id `{}`", p.id)));
            }
        }
        if players.iter().all(|p| p.weight == 0) {
            return Err(Error::MalformedInput(
                "every player has weight 0; at least one positive weight is required".into(),
            ));
        }
        let with_votes = players.iter().filter(|p| p.votes.is_some()).count();
        if with_votes != 0 && with_votes != players.len() {
            return Err(Error::MalformedInput(
                "votes must be given for every player or for none".into(),
            ));
        }
        Ok(PlayerTable { players })
    }

    pub fn len(&self) -> usize {
        self.players.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn players(&self) -> &[Player] {
        &self.players
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.players.iter().map(|p| p.id.as_str())
    }

    pub fn id(&self, player: usize) -> &str {
        &self.players[player].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.players.iter().position(|p| p.id == id)
    }

    pub fn weight(&self, player: usize) -> u64 {
        self.players[player].weight
    }

    pub fn votes(&self, player: usize) -> Option<u64> {
        self.players[player].votes
    }

    pub fn has_votes(&self) -> bool {
        self.players[0].votes.is_some()
    }

    pub fn total_weight(&self) -> u64 {
        self.players.iter().map(|p| p.weight).sum()
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.len())
    }

    /// Summed weight of a block; the empty coalition weighs 0.
    pub fn block_weight(&self, block: Coalition) -> Result<u64> {
        self.check_members(block)?;
        Ok(block.iter().map(|p| self.players[p].weight).sum())
    }

    /// Summed election votes of a block; a configuration error if the table
    /// carries no votes.
    pub fn block_votes(&self, block: Coalition) -> Result<u64> {
        self.check_members(block)?;
        if !self.has_votes() {
            return Err(Error::Configuration(
                "this player table carries no election-vote counts".into(),
            ));
        }
        Ok(block.iter().map(|p| self.players[p].votes.unwrap()).sum())
    }

    pub fn coalition_from_ids<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Result<Coalition> {
        let mut c = Coalition::EMPTY;
        for id in ids {
            match self.index_of(id) {
                Some(p) => c = c.with(p),
                None => return Err(Error::MalformedInput(format!("unknown player id `{id}`"))),
            }
        }
        Ok(c)
    }

    fn check_members(&self, block: Coalition) -> Result<()> {
        if block.is_subset_of(self.grand_coalition()) {
            Ok(())
        } else {
            Err(Error::MalformedInput(format!(
                "coalition {block:?} mentions players outside the {}-player table",
                self.len()
            )))
        }
    }
}

/// Set partition of {0, …, n-1} into non-empty pairwise-disjoint blocks.
/// Canonical block order is by smallest member, so structurally equal
/// partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: u8,
    blocks: Vec<Coalition>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Coalition>) -> Result<Self> {
        if n == 0 || n > MAX_PLAYERS {
            return Err(Error::Capacity {
                players: n,
                limit: MAX_PLAYERS,
            });
        }
        let mut seen = Coalition::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::MalformedInput("partition blocks must be non-empty".into()));
            }
            if !seen.is_disjoint(*b) {
                return Err(Error::MalformedInput(format!(
                    "partition blocks overlap at {:?}",
                    seen.intersection(*b)
                )));
            }
            seen = seen.union(*b);
        }
        if seen != Coalition::full(n) {
            return Err(Error::MalformedInput(format!(
                "blocks cover {seen:?} instead of the full {n}-player set"
            )));
        }
        blocks.sort_by_key(|b| b.lowest());
        Ok(Partition { n: n as u8, blocks })
    }

    /// Constructor for callers that already hold blocks in canonical order
    /// (the partition enumerator).
    pub(crate) fn from_canonical_blocks(n: usize, blocks: Vec<Coalition>) -> Self {
        debug_assert!(Partition::new(n, blocks.clone()).map_or(false, |p| p.blocks == blocks));
        Partition { n: n as u8, blocks }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing `player`.
    pub fn block_containing(&self, player: usize) -> Result<Coalition> {
        self.blocks
            .iter()
            .copied()
            .find(|b| b.contains(player))
            .ok_or_else(|| {
                Error::MalformedInput(format!("player {player} is outside this partition"))
            })
    }

    pub fn singletons(n: usize) -> Result<Self> {
        Partition::new(n, (0..n).map(Coalition::singleton).collect())
    }

    pub fn grand(n: usize) -> Result<Self> {
        Partition::new(n, vec![Coalition::full(n)])
    }

    /// Lexicographic order on canonical block lists; total and deterministic.
    pub fn cmp_canonical(&self, other: &Partition) -> Ordering {
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            match a.cmp_members(*b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.blocks.len().cmp(&other.blocks.len())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "{b:?}")?;
        }
        Ok(())
    }
}

/// A coalition together with the partition it is embedded in. The active
/// coalition is normally one of the partition's blocks; the empty coalition
/// is tolerated so v(∅; P) = 0 can be evaluated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedCoalition {
    active: Coalition,
    partition: Partition,
}

impl EmbeddedCoalition {
    pub fn new(active: Coalition, partition: Partition) -> Result<Self> {
        if !active.is_empty() && !partition.blocks().contains(&active) {
            return Err(Error::MalformedInput(format!(
                "active coalition {active:?} is not a block of {partition:?}"
            )));
        }
        Ok(EmbeddedCoalition { active, partition })
    }

    pub fn grand(n: usize) -> Result<Self> {
        EmbeddedCoalition::new(Coalition::full(n), Partition::grand(n)?)
    }

    pub fn active(&self) -> Coalition {
        self.active
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn outside_blocks(&self) -> impl Iterator<Item = Coalition> + '_ {
        let active = self.active;
        self.partition
            .blocks()
            .iter()
            .copied()
            .filter(move |b| *b != active)
    }
}

impl fmt::Debug for EmbeddedCoalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}; {:?})", self.active, self.partition)
    }
}

/// How a tie for the heaviest block is resolved in partition form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieRule {
    /// A tied top block is not winning; a block wins only by strict majority
    /// over every rival.
    TiesLose,
    /// Every block tied for the top weight wins.
    TiesAllWin,
    /// Among blocks tied for the top weight, the one with strictly the most
    /// aggregated election votes wins; if the votes tie too, nobody wins.
    Votes,
}

impl TieRule {
    pub fn label(self) -> &'static str {
        match self {
            TieRule::TiesLose => "ties-lose",
            TieRule::TiesAllWin => "ties-all-win",
            TieRule::Votes => "votes",
        }
    }
}

/// Which winning rule a game uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleForm {
    /// `[q; w]`: a coalition wins iff its weight reaches the quota.
    Characteristic { quota: u64 },
    /// Plurality rule over a coalition structure, with the given tie rule.
    PartitionForm { tie_rule: TieRule },
}

/// A fully validated weighted majority game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSpec {
    table: PlayerTable,
    form: RuleForm,
}

impl GameSpec {
    pub fn characteristic(table: PlayerTable, quota: u64) -> Result<Self> {
        if quota == 0 || quota > table.total_weight() {
            return Err(Error::Configuration(format!(
                "quota {quota} must be in 1..={}",
                table.total_weight()
            )));
        }
        Ok(GameSpec {
            table,
            form: RuleForm::Characteristic { quota },
        })
    }

    pub fn partition_form(table: PlayerTable, tie_rule: TieRule) -> Result<Self> {
        if tie_rule == TieRule::Votes && !table.has_votes() {
            return Err(Error::Configuration(
                "the votes tie rule needs an election-vote count for every player".into(),
            ));
        }
        Ok(GameSpec {
            table,
            form: RuleForm::PartitionForm { tie_rule },
        })
    }

    pub fn table(&self) -> &PlayerTable {
        &self.table
    }

    pub fn form(&self) -> RuleForm {
        self.form
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn is_partition_form(&self) -> bool {
        matches!(self.form, RuleForm::PartitionForm { .. })
    }

    pub fn quota(&self) -> Option<u64> {
        match self.form {
            RuleForm::Characteristic { quota } => Some(quota),
            RuleForm::PartitionForm { .. } => None,
        }
    }

    pub fn tie_rule(&self) -> Option<TieRule> {
        match self.form {
            RuleForm::Characteristic { .. } => None,
            RuleForm::PartitionForm { tie_rule } => Some(tie_rule),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn player(id: &str, weight: u64, votes: Option<u64>) -> Player {
        Player {
            id: id.into(),
            weight,
            votes,
        }
    }

    /// Six-party table from the May 2021 investiture vote.
    fn may_table() -> PlayerTable {
        PlayerTable::new(vec![
            player("UNES", 49, Some(5_060_922)),
            player("MUPP", 27, Some(2_530_803)),
            player("ID", 18, Some(1_808_867)),
            player("PSC", 18, Some(1_615_833)),
            player("CREO", 12, Some(1_509_436)),
            player("IND", 13, Some(2_061_845)),
        ])
        .unwrap()
    }

    #[test]
    fn coalition_basics() {
        let c = Coalition::from_indices([0, 2, 3]);
        assert_eq!(c.len(), 3);
        assert!(c.contains(2));
        assert!(!c.contains(1));
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(c.without(2), Coalition::from_indices([0, 3]));
        assert!(Coalition::EMPTY.is_subset_of(c));
        assert!(c.is_subset_of(Coalition::full(4)));
        assert_eq!(Coalition::full(3).len(), 3);
        assert_eq!(format!("{c:?}"), "{0,2,3}");
    }

    #[test]
    fn member_order_differs_from_bit_order() {
        let a = Coalition::from_indices([0, 3]); // bits 0b1001 = 9
        let b = Coalition::from_indices([1, 2]); // bits 0b0110 = 6
        assert!(a.bits() > b.bits());
        assert_eq!(a.cmp_members(b), Ordering::Less);
        // prefix comes first
        assert_eq!(
            Coalition::from_indices([0]).cmp_members(Coalition::from_indices([0, 1])),
            Ordering::Less
        );
    }

    #[test]
    fn block_weight_examples() {
        let t = may_table();
        let unes = t.coalition_from_ids(["UNES"]).unwrap();
        assert_eq!(t.block_weight(unes).unwrap(), 49);
        assert_eq!(t.block_weight(Coalition::EMPTY).unwrap(), 0);
        let opposition = t.coalition_from_ids(["ID", "PSC", "IND"]).unwrap();
        assert_eq!(t.block_weight(opposition).unwrap(), 49);
        assert_eq!(t.total_weight(), 137);
    }

    #[test]
    fn block_votes_examples() {
        let t = may_table();
        let unes = t.coalition_from_ids(["UNES"]).unwrap();
        assert_eq!(t.block_votes(unes).unwrap(), 5_060_922);
        assert_eq!(t.block_votes(Coalition::EMPTY).unwrap(), 0);
        let opposition = t.coalition_from_ids(["ID", "PSC", "IND"]).unwrap();
        assert_eq!(t.block_votes(opposition).unwrap(), 5_486_545);
    }

    #[test]
    fn votes_missing_is_a_configuration_error() {
        let t = PlayerTable::new(vec![player("a", 2, None), player("b", 1, None)]).unwrap();
        assert!(matches!(
            t.block_votes(Coalition::singleton(0)),
            Err(Error::Configuration(_))
        ));
    }

    #[test]
    fn unknown_players_are_rejected() {
        let t = may_table();
        assert!(matches!(
            t.block_weight(Coalition::singleton(7)),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            t.coalition_from_ids(["UNES", "nope"]),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn table_invariants() {
        assert!(matches!(PlayerTable::new(vec![]), Err(Error::Capacity { .. })));
        let sixteen: Vec<Player> = (0..16).map(|i| player(&format!("p{i}"), 1, None)).collect();
        assert!(matches!(PlayerTable::new(sixteen), Err(Error::Capacity { .. })));
        assert!(matches!(
            PlayerTable::new(vec![player("a", 1, None), player("a", 2, None)]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            PlayerTable::new(vec![player("", 1, None)]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            PlayerTable::new(vec![player("a", 0, None), player("b", 0, None)]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            PlayerTable::new(vec![player("a", 1, Some(5)), player("b", 1, None)]),
            Err(Error::MalformedInput(_))
        ));
        // zero-weight players are allowed as long as one weight is positive
        assert!(PlayerTable::new(vec![player("a", 0, None), player("b", 1, None)]).is_ok());
    }

    #[test]
    fn partition_canonicalization() {
        let a = Partition::new(
            4,
            vec![
                Coalition::from_indices([1, 3]),
                Coalition::singleton(2),
                Coalition::singleton(0),
            ],
        )
        .unwrap();
        let b = Partition::new(
            4,
            vec![
                Coalition::singleton(0),
                Coalition::from_indices([1, 3]),
                Coalition::singleton(2),
            ],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.blocks(),
            &[
                Coalition::singleton(0),
                Coalition::from_indices([1, 3]),
                Coalition::singleton(2)
            ]
        );
        assert_eq!(a.block_containing(3).unwrap(), Coalition::from_indices([1, 3]));
    }

    #[test]
    fn partition_invariants() {
        let overlap = Partition::new(
            2,
            vec![Coalition::from_indices([0, 1]), Coalition::singleton(1)],
        );
        assert!(matches!(overlap, Err(Error::MalformedInput(_))));
        let gap = Partition::new(3, vec![Coalition::from_indices([0, 2])]);
        assert!(matches!(gap, Err(Error::MalformedInput(_))));
        let empty_block = Partition::new(1, vec![Coalition::singleton(0), Coalition::EMPTY]);
        assert!(matches!(empty_block, Err(Error::MalformedInput(_))));
        assert!(matches!(Partition::new(0, vec![]), Err(Error::Capacity { .. })));
    }

    #[test]
    fn embedded_coalition_requires_a_block() {
        let p = Partition::new(
            3,
            vec![Coalition::from_indices([0, 1]), Coalition::singleton(2)],
        )
        .unwrap();
        assert!(EmbeddedCoalition::new(Coalition::from_indices([0, 1]), p.clone()).is_ok());
        assert!(EmbeddedCoalition::new(Coalition::EMPTY, p.clone()).is_ok());
        assert!(matches!(
            EmbeddedCoalition::new(Coalition::singleton(0), p),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn game_spec_validation() {
        let t = may_table();
        assert!(GameSpec::characteristic(t.clone(), 70).is_ok());
        assert!(matches!(
            GameSpec::characteristic(t.clone(), 0),
            Err(Error::Configuration(_))
        ));
        assert!(matches!(
            GameSpec::characteristic(t.clone(), 138),
            Err(Error::Configuration(_))
        ));
        assert!(GameSpec::partition_form(t, TieRule::Votes).is_ok());
        let no_votes = PlayerTable::new(vec![player("a", 2, None), player("b", 1, None)]).unwrap();
        assert!(matches!(
            GameSpec::partition_form(no_votes.clone(), TieRule::Votes),
            Err(Error::Configuration(_))
        ));
        assert!(GameSpec::partition_form(no_votes, TieRule::TiesLose).is_ok());
    }

    proptest! {
        /// Weight is additive over disjoint blocks.
        #[test]
        fn weight_additivity(bits_a in 0u16..64, bits_b in 0u16..64) {
            let t = may_table();
            let a = Coalition::from_bits(bits_a);
            let b = Coalition::from_bits(bits_b & !bits_a);
            prop_assert!(a.is_disjoint(b));
            prop_assert_eq!(
                t.block_weight(a.union(b)).unwrap(),
                t.block_weight(a).unwrap() + t.block_weight(b).unwrap()
            );
        }
    }
}
