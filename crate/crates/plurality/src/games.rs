//! Winning coalitions and minimal winning sets in both game forms.
//!
//! Characteristic form: a coalition wins iff its weight reaches the quota.
//! Partition form (plurality rule): a block of a partition wins iff no rival
//! block outweighs it, with exact ties settled by the game's [`TieRule`].
//!
//! Both winning notions are monotone in the inclusion order, so a winning
//! element is minimal iff all of its immediate predecessors lose. In
//! partition form the immediate predecessors of (S;P) are obtained by either
//! merging two rival blocks of P (coarsening the outside) or expelling one
//! member of S into a new singleton rival. The minimal-winning sweep below
//! tests exactly those predecessors, which keeps the whole computation at
//! O(partitions × n²) instead of quadratic in the number of winning elements;
//! the pairwise definition is retained in
//! [`PartitionFormGame::minimal_winning`] and serves as the test oracle.

use std::cmp::Ordering;

use crate::enumerate::{ec_proper_subset, ec_subset, embedded_coalitions, partitions};
use crate::error::{Error, Result};
use crate::model::{Coalition, EmbeddedCoalition, GameSpec, Partition, TieRule, MAX_PLAYERS};

/// Marker distinguishing sets and index vectors of the two game forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameForm {
    Characteristic,
    PartitionForm,
}

impl GameForm {
    pub fn label(self) -> &'static str {
        match self {
            GameForm::Characteristic => "characteristic",
            GameForm::PartitionForm => "partition",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Elements {
    Characteristic(Vec<Coalition>),
    PartitionForm(Vec<EmbeddedCoalition>),
}

/// The set M(v) of minimal winning (embedded) coalitions of a simple game.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalWinningSet {
    n: usize,
    elements: Elements,
}

impl MinimalWinningSet {
    pub(crate) fn characteristic(n: usize, elements: Vec<Coalition>) -> Self {
        MinimalWinningSet {
            n,
            elements: Elements::Characteristic(elements),
        }
    }

    pub(crate) fn partition_form(n: usize, elements: Vec<EmbeddedCoalition>) -> Self {
        MinimalWinningSet {
            n,
            elements: Elements::PartitionForm(elements),
        }
    }

    pub fn form(&self) -> GameForm {
        match self.elements {
            Elements::Characteristic(_) => GameForm::Characteristic,
            Elements::PartitionForm(_) => GameForm::PartitionForm,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        match &self.elements {
            Elements::Characteristic(v) => v.len(),
            Elements::PartitionForm(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The plain coalitions, for characteristic sets.
    pub fn coalitions(&self) -> Option<&[Coalition]> {
        match &self.elements {
            Elements::Characteristic(v) => Some(v),
            Elements::PartitionForm(_) => None,
        }
    }

    /// The embedded coalitions, for partition-form sets.
    pub fn embedded(&self) -> Option<&[EmbeddedCoalition]> {
        match &self.elements {
            Elements::Characteristic(_) => None,
            Elements::PartitionForm(v) => Some(v),
        }
    }

    /// Active coalitions of all elements, in stored order. In characteristic
    /// form this is the element itself.
    pub fn active_coalitions(&self) -> impl Iterator<Item = Coalition> + '_ {
        let (plain, embedded) = match &self.elements {
            Elements::Characteristic(v) => (Some(v.iter().copied()), None),
            Elements::PartitionForm(v) => (None, Some(v.iter().map(|e| e.active()))),
        };
        plain
            .into_iter()
            .flatten()
            .chain(embedded.into_iter().flatten())
    }

    /// |M_i| per player: in how many elements each player is active.
    pub fn participation_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n];
        for active in self.active_coalitions() {
            for p in active.iter() {
                counts[p] += 1;
            }
        }
        counts
    }

    /// Pairwise incomparability of the elements; O(len²), meant for tests and
    /// validation at small n.
    pub fn is_antichain(&self) -> Result<bool> {
        match &self.elements {
            Elements::Characteristic(v) => {
                for (i, a) in v.iter().enumerate() {
                    for b in &v[i + 1..] {
                        if a.is_subset_of(*b) || b.is_subset_of(*a) {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            Elements::PartitionForm(v) => {
                for (i, a) in v.iter().enumerate() {
                    for b in &v[i + 1..] {
                        if ec_subset(a, b)? || ec_subset(b, a)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }
}

/// Canonical output order for coalition lists: by size, then by members.
fn cmp_coalitions(a: Coalition, b: Coalition) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp_members(b))
}

/// Canonical output order for embedded coalitions: by active size, then
/// active members, then the partition.
fn cmp_embedded(a: &EmbeddedCoalition, b: &EmbeddedCoalition) -> Ordering {
    cmp_coalitions(a.active(), b.active()).then_with(|| a.partition().cmp_canonical(b.partition()))
}

/// Indices into `ws` of the blocks that win the partition under `rule`.
/// Empty when ties kill the win; more than one only under `TiesAllWin`.
fn winner_indices(
    rule: TieRule,
    blocks: &[Coalition],
    ws: &[u64],
    votes: Option<&[u64]>,
    out: &mut Vec<usize>,
) {
    out.clear();
    let max = *ws.iter().max().expect("partitions have at least one block");
    let mut tied = ws.iter().enumerate().filter(|(_, w)| **w == max);
    match rule {
        TieRule::TiesAllWin => out.extend(tied.map(|(i, _)| i)),
        TieRule::TiesLose => {
            let first = tied.next().expect("the maximum is attained");
            if tied.next().is_none() {
                out.push(first.0);
            }
        }
        TieRule::Votes => {
            let tied: Vec<usize> = tied.map(|(i, _)| i).collect();
            if tied.len() == 1 {
                out.push(tied[0]);
                return;
            }
            let votes = votes.expect("the votes rule requires vote counts");
            let mut best: Option<(usize, u64)> = None;
            let mut contested = false;
            for &i in &tied {
                let v = block_votes(blocks[i], votes);
                match best {
                    None => best = Some((i, v)),
                    Some((_, bv)) if v > bv => {
                        best = Some((i, v));
                        contested = false;
                    }
                    Some((_, bv)) if v == bv => contested = true,
                    _ => {}
                }
            }
            if !contested {
                out.push(best.unwrap().0);
            }
        }
    }
}

fn block_weight(block: Coalition, weights: &[u64]) -> u64 {
    block.iter().map(|p| weights[p]).sum()
}

fn block_votes(block: Coalition, votes: &[u64]) -> u64 {
    block.iter().map(|p| votes[p]).sum()
}

/// Whether the winning block `widx` of `p` stays winning after one
/// immediate-predecessor move; if it does for any move it is not minimal.
fn winner_is_minimal(
    rule: TieRule,
    weights: &[u64],
    votes: Option<&[u64]>,
    p: &Partition,
    ws: &[u64],
    widx: usize,
) -> bool {
    let blocks = p.blocks();
    let k = blocks.len();
    let w_s = ws[widx];

    // Merge two rival blocks: the winner survives iff the merged rival still
    // fails to dethrone it.
    for i in 0..k {
        if i == widx {
            continue;
        }
        for j in i + 1..k {
            if j == widx {
                continue;
            }
            let merged = ws[i] + ws[j];
            let survives = match rule {
                TieRule::TiesAllWin => merged <= w_s,
                TieRule::TiesLose => merged < w_s,
                TieRule::Votes => {
                    merged < w_s || (merged == w_s && {
                        let votes = votes.expect("votes rule");
                        block_votes(blocks[i], votes) + block_votes(blocks[j], votes)
                            < block_votes(blocks[widx], votes)
                    })
                }
            };
            if survives {
                return false;
            }
        }
    }

    // Expel one active member into a singleton rival. A one-member active
    // block would become empty, which always loses, so only larger actives
    // can fail here.
    let active = blocks[widx];
    if active.len() > 1 {
        let rival_max = ws
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != widx)
            .map(|(_, w)| *w)
            .max()
            .unwrap_or(0);
        for x in active.iter() {
            let wx = weights[x];
            let wa = w_s - wx;
            let top = rival_max.max(wx);
            let survives = match rule {
                TieRule::TiesAllWin => wa >= top,
                TieRule::TiesLose => wa > top,
                TieRule::Votes => {
                    if wa != top {
                        wa > top
                    } else {
                        let votes = votes.expect("votes rule");
                        let va = block_votes(active, votes) - votes[x];
                        (0..k)
                            .filter(|&i| i != widx && ws[i] == top)
                            .all(|i| block_votes(blocks[i], votes) < va)
                            && (wx != top || votes[x] < va)
                    }
                }
            };
            if survives {
                return false;
            }
        }
    }

    true
}

impl GameSpec {
    fn quota_or_mismatch(&self) -> Result<u64> {
        self.quota().ok_or(Error::FormMismatch {
            expected: "characteristic",
            actual: "partition",
        })
    }

    fn tie_rule_or_mismatch(&self) -> Result<TieRule> {
        self.tie_rule().ok_or(Error::FormMismatch {
            expected: "partition",
            actual: "characteristic",
        })
    }

    fn weights(&self) -> Vec<u64> {
        (0..self.n()).map(|p| self.table().weight(p)).collect()
    }

    fn votes_vec(&self) -> Option<Vec<u64>> {
        if self.table().has_votes() {
            Some((0..self.n()).map(|p| self.table().votes(p).unwrap()).collect())
        } else {
            None
        }
    }

    /// Characteristic form: does `c` reach the quota?
    pub fn is_winning_coalition(&self, c: Coalition) -> Result<bool> {
        let quota = self.quota_or_mismatch()?;
        Ok(self.table().block_weight(c)? >= quota)
    }

    /// The blocks of `p` that win under the game's tie rule. Empty when the
    /// tie rule leaves the partition winnerless.
    pub fn winning_blocks(&self, p: &Partition) -> Result<Vec<Coalition>> {
        let rule = self.tie_rule_or_mismatch()?;
        if p.n() != self.n() {
            return Err(Error::MalformedInput(format!(
                "partition over {} players in a {}-player game",
                p.n(),
                self.n()
            )));
        }
        let weights = self.weights();
        let votes = self.votes_vec();
        let ws: Vec<u64> = p.blocks().iter().map(|b| block_weight(*b, &weights)).collect();
        let mut out = Vec::new();
        winner_indices(rule, p.blocks(), &ws, votes.as_deref(), &mut out);
        Ok(out.into_iter().map(|i| p.blocks()[i]).collect())
    }

    /// Partition form: v(S;P) = 1? The empty active coalition always loses.
    pub fn is_winning_embedded(&self, ec: &EmbeddedCoalition) -> Result<bool> {
        if ec.n() != self.n() {
            return Err(Error::MalformedInput(format!(
                "embedded coalition over {} players in a {}-player game",
                ec.n(),
                self.n()
            )));
        }
        if ec.active().is_empty() {
            self.tie_rule_or_mismatch()?;
            return Ok(false);
        }
        Ok(self.winning_blocks(ec.partition())?.contains(&ec.active()))
    }

    /// M(v) for a characteristic game, ordered by size then members.
    pub fn minimal_winning_coalitions(&self) -> Result<MinimalWinningSet> {
        let quota = self.quota_or_mismatch()?;
        let n = self.n();
        let weights = self.weights();
        let mut found = Vec::new();
        for bits in 1u32..(1u32 << n) {
            let c = Coalition::from_bits(bits as u16);
            let w = block_weight(c, &weights);
            // weighted games are monotone: minimal iff every one-player
            // removal drops below quota
            if w >= quota && c.iter().all(|p| w - weights[p] < quota) {
                found.push(c);
            }
        }
        found.sort_by(|a, b| cmp_coalitions(*a, *b));
        Ok(MinimalWinningSet::characteristic(n, found))
    }

    /// M(v) for a partition-form game: one streaming pass over all
    /// partitions, keeping each winner whose immediate predecessors all lose.
    /// Output is ordered by active size, then active members, then partition.
    pub fn minimal_winning_embedded_coalitions(&self) -> Result<MinimalWinningSet> {
        let rule = self.tie_rule_or_mismatch()?;
        let n = self.n();
        let weights = self.weights();
        let votes = self.votes_vec();
        let votes = votes.as_deref();
        let mut found = Vec::new();
        let mut ws: Vec<u64> = Vec::with_capacity(n);
        let mut winners: Vec<usize> = Vec::with_capacity(n);
        for p in partitions(n)? {
            ws.clear();
            ws.extend(p.blocks().iter().map(|b| block_weight(*b, &weights)));
            winner_indices(rule, p.blocks(), &ws, votes, &mut winners);
            for k in 0..winners.len() {
                let widx = winners[k];
                if winner_is_minimal(rule, &weights, votes, &p, &ws, widx) {
                    let active = p.blocks()[widx];
                    found.push(
                        EmbeddedCoalition::new(active, p.clone())
                            .expect("winner is a block of its own partition"),
                    );
                }
            }
        }
        found.sort_by(cmp_embedded);
        Ok(MinimalWinningSet::partition_form(n, found))
    }

    /// Every partition whose top weight is shared by two or more blocks,
    /// with per-block seat counts and the tie rule's verdict. Enumeration
    /// order; partition form only.
    pub fn tie_partitions(&self) -> Result<Vec<TiePartition>> {
        let rule = self.tie_rule_or_mismatch()?;
        let n = self.n();
        let weights = self.weights();
        let votes = self.votes_vec();
        let mut out = Vec::new();
        let mut winners: Vec<usize> = Vec::new();
        for p in partitions(n)? {
            let ws: Vec<u64> = p.blocks().iter().map(|b| block_weight(*b, &weights)).collect();
            let max = *ws.iter().max().unwrap();
            if ws.iter().filter(|w| **w == max).count() < 2 {
                continue;
            }
            let outcome = match rule {
                TieRule::TiesLose => TieOutcome::NoWinner,
                TieRule::TiesAllWin => TieOutcome::AllTiedWin,
                TieRule::Votes => {
                    winner_indices(rule, p.blocks(), &ws, votes.as_deref(), &mut winners);
                    match winners.first() {
                        Some(&i) => TieOutcome::WonByVotes(p.blocks()[i]),
                        None => TieOutcome::NoWinner,
                    }
                }
            };
            out.push(TiePartition {
                partition: p,
                seats: ws,
                outcome,
            });
        }
        Ok(out)
    }
}

/// A partition where at least two blocks share the top weight.
#[derive(Clone, Debug, PartialEq)]
pub struct TiePartition {
    pub partition: Partition,
    /// Block weights in the partition's canonical block order.
    pub seats: Vec<u64>,
    pub outcome: TieOutcome,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TieOutcome {
    /// The tie rule leaves the partition with no winner.
    NoWinner,
    /// Under `TiesAllWin`, every top-weight block wins.
    AllTiedWin,
    /// Under `Votes`, this block wins on aggregated election votes.
    WonByVotes(Coalition),
}

/// u_S: the unanimity game predicate, u_S(T) = 1 iff S ⊆ T.
pub fn unanimity_eval(base: Coalition, at: Coalition) -> Result<bool> {
    if base.is_empty() {
        return Err(Error::MalformedInput(
            "the unanimity game needs a non-empty base coalition".into(),
        ));
    }
    Ok(base.is_subset_of(at))
}

/// e_(S;P): the basis game predicate, 1 iff (S;P) ⊑ (T;Q).
pub fn basis_game_eval(base: &EmbeddedCoalition, at: &EmbeddedCoalition) -> Result<bool> {
    if base.active().is_empty() {
        return Err(Error::MalformedInput(
            "the basis game needs a non-empty active coalition".into(),
        ));
    }
    ec_subset(base, at)
}

/// A characteristic simple game as an explicit winning table over all 2^n
/// coalitions. Constructors guarantee monotonicity, v(∅) = 0 and v(N) = 1,
/// so minimal-winning extraction may use the one-removal test.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicGame {
    n: usize,
    winning: Vec<bool>,
}

impl CharacteristicGame {
    pub fn from_spec(spec: &GameSpec) -> Result<Self> {
        let quota = spec.quota().ok_or(Error::FormMismatch {
            expected: "characteristic",
            actual: "partition",
        })?;
        let n = spec.n();
        let weights: Vec<u64> = (0..n).map(|p| spec.table().weight(p)).collect();
        let winning = (0..1u32 << n)
            .map(|bits| block_weight(Coalition::from_bits(bits as u16), &weights) >= quota)
            .collect();
        Ok(CharacteristicGame { n, winning })
    }

    /// The unanimity game u_base over n players.
    pub fn unanimity(n: usize, base: Coalition) -> Result<Self> {
        check_player_count(n)?;
        if base.is_empty() {
            return Err(Error::MalformedInput(
                "the unanimity game needs a non-empty base coalition".into(),
            ));
        }
        if !base.is_subset_of(Coalition::full(n)) {
            return Err(Error::MalformedInput(format!(
                "base {base:?} is outside the {n}-player set"
            )));
        }
        let winning = (0..1u32 << n)
            .map(|bits| base.is_subset_of(Coalition::from_bits(bits as u16)))
            .collect();
        Ok(CharacteristicGame { n, winning })
    }

    /// Build from an explicit winning table, validating that it describes a
    /// monotone simple game.
    pub fn from_winning(n: usize, winning: Vec<bool>) -> Result<Self> {
        check_player_count(n)?;
        if winning.len() != 1 << n {
            return Err(Error::MalformedInput(format!(
                "winning table has {} entries, expected {}",
                winning.len(),
                1 << n
            )));
        }
        if winning[0] {
            return Err(Error::MalformedInput("the empty coalition must lose".into()));
        }
        if !winning[(1usize << n) - 1] {
            return Err(Error::MalformedInput("the grand coalition must win".into()));
        }
        for bits in 0..1usize << n {
            if !winning[bits] {
                continue;
            }
            for p in 0..n {
                if winning[bits] && !winning[bits | (1 << p)] {
                    return Err(Error::MalformedInput(format!(
                        "not monotone: {:?} wins but {:?} loses",
                        Coalition::from_bits(bits as u16),
                        Coalition::from_bits((bits | (1 << p)) as u16)
                    )));
                }
            }
        }
        Ok(CharacteristicGame { n, winning })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_winning(&self, c: Coalition) -> bool {
        assert!(
            c.is_subset_of(Coalition::full(self.n)),
            "coalition outside the player set"
        );
        self.winning[c.bits() as usize]
    }

    /// v ∨ v′: wins where either game wins.
    pub fn union(&self, other: &CharacteristicGame) -> Result<CharacteristicGame> {
        if self.n != other.n {
            return Err(Error::MalformedInput(format!(
                "cannot unite games over {} and {} players",
                self.n, other.n
            )));
        }
        let winning = self
            .winning
            .iter()
            .zip(&other.winning)
            .map(|(a, b)| *a || *b)
            .collect();
        Ok(CharacteristicGame {
            n: self.n,
            winning,
        })
    }

    pub fn minimal_winning(&self) -> MinimalWinningSet {
        let mut found = Vec::new();
        for bits in 1..1usize << self.n {
            if !self.winning[bits] {
                continue;
            }
            let c = Coalition::from_bits(bits as u16);
            if c.iter().all(|p| !self.winning[bits & !(1 << p)]) {
                found.push(c);
            }
        }
        found.sort_by(|a, b| cmp_coalitions(*a, *b));
        MinimalWinningSet::characteristic(self.n, found)
    }

    /// Mergeable: no minimal winning coalition of one game contains or equals
    /// one of the other. Then M(v ∨ v′) = M(v) ⊎ M(v′).
    pub fn is_mergeable(&self, other: &CharacteristicGame) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::MalformedInput(format!(
                "cannot compare games over {} and {} players",
                self.n, other.n
            )));
        }
        let ma = self.minimal_winning();
        let mb = other.minimal_winning();
        let ma = ma.coalitions().unwrap();
        let mb = mb.coalitions().unwrap();
        for a in ma {
            for b in mb {
                if a.is_subset_of(*b) || b.is_subset_of(*a) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Decisive: every coalition wins exactly when its complement loses.
    pub fn is_decisive(&self) -> bool {
        let full = (1usize << self.n) - 1;
        (0..=full).all(|bits| self.winning[bits] != self.winning[full & !bits])
    }
}

fn check_player_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_PLAYERS {
        return Err(Error::Capacity {
            players: n,
            limit: MAX_PLAYERS,
        });
    }
    Ok(())
}

/// The unique simple game in partition form whose minimal winning set is a
/// given antichain: v(T;Q) = 1 iff some antichain element is ⊑ (T;Q).
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionFormGame {
    n: usize,
    minimal: Vec<EmbeddedCoalition>,
}

impl PartitionFormGame {
    pub fn from_antichain(mut elements: Vec<EmbeddedCoalition>) -> Result<Self> {
        let first = elements.first().ok_or_else(|| {
            Error::MalformedInput("the antichain must contain at least one element".into())
        })?;
        let n = first.n();
        for e in &elements {
            if e.n() != n {
                return Err(Error::MalformedInput(
                    "antichain elements range over different player sets".into(),
                ));
            }
            if e.active().is_empty() {
                return Err(Error::MalformedInput(
                    "antichain elements need non-empty active coalitions".into(),
                ));
            }
        }
        for i in 0..elements.len() {
            for j in 0..elements.len() {
                if i != j && ec_subset(&elements[i], &elements[j])? {
                    return Err(Error::AntichainViolation {
                        smaller: format!("{:?}", elements[i]),
                        larger: format!("{:?}", elements[j]),
                    });
                }
            }
        }
        elements.sort_by(cmp_embedded);
        Ok(PartitionFormGame { n, minimal: elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, ec: &EmbeddedCoalition) -> Result<bool> {
        if ec.n() != self.n {
            return Err(Error::MalformedInput(format!(
                "embedded coalition over {} players in a {}-player game",
                ec.n(),
                self.n
            )));
        }
        if ec.active().is_empty() {
            return Ok(false);
        }
        for m in &self.minimal {
            if ec_subset(m, ec)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Recompute M(v) from the evaluation alone: enumerate the winning
    /// elements and filter pairwise. Exponential in n; meant for small games
    /// and as the oracle for the streaming sweep.
    pub fn minimal_winning(&self) -> Result<MinimalWinningSet> {
        let winning: Vec<EmbeddedCoalition> = embedded_coalitions(self.n)?
            .filter(|ec| self.eval(ec).unwrap_or(false))
            .collect();
        let mut minimal = Vec::new();
        for (i, a) in winning.iter().enumerate() {
            let mut is_min = true;
            for (j, b) in winning.iter().enumerate() {
                if i != j && ec_proper_subset(b, a)? {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.push(a.clone());
            }
        }
        minimal.sort_by(cmp_embedded);
        Ok(MinimalWinningSet::partition_form(self.n, minimal))
    }
}

/// Monotonicity of an arbitrary partition-form evaluation: no winning element
/// below a losing one. Exhaustive over all EC pairs, so only viable at small n.
pub fn is_monotone_partition_game(
    n: usize,
    eval: impl Fn(&EmbeddedCoalition) -> bool,
) -> Result<bool> {
    let all: Vec<EmbeddedCoalition> = embedded_coalitions(n)?.collect();
    let values: Vec<bool> = all.iter().map(&eval).collect();
    for (i, a) in all.iter().enumerate() {
        if !values[i] {
            continue;
        }
        for (j, b) in all.iter().enumerate() {
            if !values[j] && ec_subset(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
