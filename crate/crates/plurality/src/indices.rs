//! The four power indices over a minimal winning set, in exact rational
//! arithmetic, plus the player-property detectors built on them.
//!
//! With M the minimal winning set, M_i its elements whose active coalition
//! contains player i, and w the weight vector:
//!
//! - Deegan-Packel:          DP_i  = (1/|M|) · Σ_{S ∈ M_i} 1/|S|
//! - Public Good:            PG_i  = |M_i| / Σ_j |M_j|
//! - Colomer-Martínez:       CM_i  = (1/|M|) · Σ_{S ∈ M_i} w_i / w(S)
//! - Holler-Colomer-Martínez HCM_i = |M_i|·w_i / Σ_j |M_j|·w_j
//!
//! `|S|`, `w(S)` always refer to the *active* coalition of an element, so the
//! same formulas serve both game forms. Every vector sums to exactly 1.
//! Rounding to four decimals happens only at presentation, half away from
//! zero.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::games::{CharacteristicGame, GameForm, MinimalWinningSet};
use crate::model::{Coalition, PlayerTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    DeeganPackel,
    PublicGood,
    ColomerMartinez,
    HollerColomerMartinez,
}

impl IndexKind {
    pub const ALL: [IndexKind; 4] = [
        IndexKind::DeeganPackel,
        IndexKind::PublicGood,
        IndexKind::ColomerMartinez,
        IndexKind::HollerColomerMartinez,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IndexKind::DeeganPackel => "DP",
            IndexKind::PublicGood => "PG",
            IndexKind::ColomerMartinez => "CM",
            IndexKind::HollerColomerMartinez => "HCM",
        }
    }
}

/// One index evaluated for every player, as exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexVector {
    kind: IndexKind,
    form: GameForm,
    values: Vec<BigRational>,
}

impl IndexVector {
    fn new(kind: IndexKind, form: GameForm, values: Vec<BigRational>) -> Self {
        debug_assert!(values.iter().sum::<BigRational>().is_one(), "not efficient");
        IndexVector { kind, form, values }
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn form(&self) -> GameForm {
        self.form
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, player: usize) -> &BigRational {
        &self.values[player]
    }

    /// The value rounded to four decimals, e.g. "0.4510".
    pub fn rounded(&self, player: usize) -> String {
        round_half_up_4dp(&self.values[player])
    }
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn ensure_nonempty(m: &MinimalWinningSet) -> Result<()> {
    if m.is_empty() {
        return Err(Error::Degenerate(
            "the minimal winning set is empty; the indices are undefined".into(),
        ));
    }
    Ok(())
}

fn ensure_table(m: &MinimalWinningSet, t: &PlayerTable) -> Result<()> {
    if t.len() != m.n() {
        return Err(Error::MalformedInput(format!(
            "player table has {} players but the minimal winning set ranges over {}",
            t.len(),
            m.n()
        )));
    }
    Ok(())
}

/// Deegan-Packel: equal credit per element, split equally inside its active
/// coalition.
pub fn deegan_packel(m: &MinimalWinningSet) -> Result<IndexVector> {
    ensure_nonempty(m)?;
    let mut acc = vec![BigRational::zero(); m.n()];
    for active in m.active_coalitions() {
        let share = ratio(1, active.len() as u64);
        for p in active.iter() {
            acc[p] += &share;
        }
    }
    let count = ratio(1, m.len() as u64);
    for v in &mut acc {
        *v *= &count;
    }
    Ok(IndexVector::new(IndexKind::DeeganPackel, m.form(), acc))
}

/// Public Good: participation counts, normalized.
pub fn public_good(m: &MinimalWinningSet) -> Result<IndexVector> {
    ensure_nonempty(m)?;
    let counts = m.participation_counts();
    let total: usize = counts.iter().sum();
    let values = counts
        .into_iter()
        .map(|c| ratio(c as u64, total as u64))
        .collect();
    Ok(IndexVector::new(IndexKind::PublicGood, m.form(), values))
}

/// Colomer-Martínez: like Deegan-Packel, but an element's credit is split in
/// proportion to weight inside its active coalition.
pub fn colomer_martinez(m: &MinimalWinningSet, t: &PlayerTable) -> Result<IndexVector> {
    ensure_nonempty(m)?;
    ensure_table(m, t)?;
    let mut acc = vec![BigRational::zero(); m.n()];
    for active in m.active_coalitions() {
        let total = t.block_weight(active)?;
        if total == 0 {
            return Err(Error::Degenerate(format!(
                "active coalition {active:?} has weight 0; its weight shares are undefined"
            )));
        }
        for p in active.iter() {
            acc[p] += ratio(t.weight(p), total);
        }
    }
    let count = ratio(1, m.len() as u64);
    for v in &mut acc {
        *v *= &count;
    }
    Ok(IndexVector::new(IndexKind::ColomerMartinez, m.form(), acc))
}

/// Holler-Colomer-Martínez: participation counts weighted by seat counts,
/// normalized.
pub fn holler_colomer_martinez(m: &MinimalWinningSet, t: &PlayerTable) -> Result<IndexVector> {
    ensure_nonempty(m)?;
    ensure_table(m, t)?;
    let counts = m.participation_counts();
    let denom: u64 = counts
        .iter()
        .enumerate()
        .map(|(p, c)| *c as u64 * t.weight(p))
        .sum();
    if denom == 0 {
        return Err(Error::Degenerate(
            "every participating player has weight 0; the index is undefined".into(),
        ));
    }
    let values = counts
        .iter()
        .enumerate()
        .map(|(p, c)| ratio(*c as u64 * t.weight(p), denom))
        .collect();
    Ok(IndexVector::new(
        IndexKind::HollerColomerMartinez,
        m.form(),
        values,
    ))
}

/// The same index computed element-wise: player i's numerator accumulates w_i
/// once per element it is active in, and the denominator accumulates the
/// active-coalition weight of every element. Must agree with
/// [`holler_colomer_martinez`] exactly.
pub fn hcm_alternative(m: &MinimalWinningSet, t: &PlayerTable) -> Result<IndexVector> {
    ensure_nonempty(m)?;
    ensure_table(m, t)?;
    let mut numerators = vec![0u64; m.n()];
    let mut denom = 0u64;
    for active in m.active_coalitions() {
        for p in active.iter() {
            numerators[p] += t.weight(p);
            denom += t.weight(p);
        }
    }
    if denom == 0 {
        return Err(Error::Degenerate(
            "every participating player has weight 0; the index is undefined".into(),
        ));
    }
    let values = numerators.into_iter().map(|w| ratio(w, denom)).collect();
    Ok(IndexVector::new(
        IndexKind::HollerColomerMartinez,
        m.form(),
        values,
    ))
}

/// Players that are active in no minimal winning element.
pub fn null_players(m: &MinimalWinningSet) -> Coalition {
    let counts = m.participation_counts();
    Coalition::from_indices(
        counts
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == 0)
            .map(|(p, _)| p),
    )
}

/// Pairs (i, j), i < j, such that swapping i for j preserves winning in every
/// losing context: for every S ⊆ N∖{i,j} with v(S) = 0, v(S∪{i}) = v(S∪{j}).
pub fn symmetric_pairs_characteristic(g: &CharacteristicGame) -> Vec<(usize, usize)> {
    let n = g.n();
    let full = Coalition::full(n);
    let mut pairs = Vec::new();
    for i in 0..n {
        'next: for j in i + 1..n {
            let rest = full.without(i).without(j);
            let mut bits = rest.bits();
            loop {
                let s = Coalition::from_bits(bits);
                if !g.is_winning(s) && g.is_winning(s.with(i)) != g.is_winning(s.with(j)) {
                    continue 'next;
                }
                if bits == 0 {
                    break;
                }
                bits = (bits - 1) & rest.bits();
            }
            pairs.push((i, j));
        }
    }
    pairs
}

/// Outcome of the weighted-symmetry check; the law only constrains games
/// with exactly one minimal winning element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedSymmetry {
    /// |M| ≠ 1: the law imposes nothing.
    NotApplicable,
    /// w_j · f_i = w_i · f_j for all i, j active in the unique element.
    Holds,
    Violated,
}

impl WeightedSymmetry {
    /// Whether the law is satisfied (vacuously or not).
    pub fn as_bool(self) -> bool {
        self != WeightedSymmetry::Violated
    }
}

/// Check w_j·f_i = w_i·f_j over the unique minimal winning element's active
/// coalition, exactly.
pub fn check_weighted_symmetry(
    f: &IndexVector,
    m: &MinimalWinningSet,
    t: &PlayerTable,
) -> Result<WeightedSymmetry> {
    ensure_table(m, t)?;
    if f.len() != m.n() {
        return Err(Error::MalformedInput(format!(
            "index vector has {} entries but the game has {} players",
            f.len(),
            m.n()
        )));
    }
    if m.len() != 1 {
        return Ok(WeightedSymmetry::NotApplicable);
    }
    let active = m.active_coalitions().next().unwrap();
    let members: Vec<usize> = active.iter().collect();
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            let wi = BigRational::from(BigInt::from(t.weight(i)));
            let wj = BigRational::from(BigInt::from(t.weight(j)));
            if f.value(i) * &wj != f.value(j) * &wi {
                return Ok(WeightedSymmetry::Violated);
            }
        }
    }
    Ok(WeightedSymmetry::Holds)
}

fn merge_parts(
    a: &CharacteristicGame,
    b: &CharacteristicGame,
) -> Result<(MinimalWinningSet, MinimalWinningSet, MinimalWinningSet)> {
    if !a.is_mergeable(b)? {
        return Err(Error::NotMergeable(
            "their minimal winning sets contain a comparable pair".into(),
        ));
    }
    let union = a.union(b)?;
    Ok((a.minimal_winning(), b.minimal_winning(), union.minimal_winning()))
}

/// Verify DP(v ∨ v′) = (|M(v)|·DP(v) + |M(v′)|·DP(v′)) / |M(v ∨ v′)| for
/// mergeable games, player by player, exactly.
pub fn dp_merge_check(a: &CharacteristicGame, b: &CharacteristicGame) -> Result<bool> {
    let (ma, mb, mu) = merge_parts(a, b)?;
    let dpa = deegan_packel(&ma)?;
    let dpb = deegan_packel(&mb)?;
    let dpu = deegan_packel(&mu)?;
    let ka = BigRational::from(BigInt::from(ma.len()));
    let kb = BigRational::from(BigInt::from(mb.len()));
    let ku = BigRational::from(BigInt::from(mu.len()));
    Ok((0..a.n()).all(|p| {
        *dpu.value(p) == (&ka * dpa.value(p) + &kb * dpb.value(p)) / &ku
    }))
}

/// Verify the same mixture identity for PG, with total participation counts
/// as the mixture weights.
pub fn pg_merge_check(a: &CharacteristicGame, b: &CharacteristicGame) -> Result<bool> {
    let (ma, mb, mu) = merge_parts(a, b)?;
    let pga = public_good(&ma)?;
    let pgb = public_good(&mb)?;
    let pgu = public_good(&mu)?;
    let total = |m: &MinimalWinningSet| {
        BigRational::from(BigInt::from(m.participation_counts().iter().sum::<usize>()))
    };
    let (ka, kb, ku) = (total(&ma), total(&mb), total(&mu));
    Ok((0..a.n()).all(|p| {
        *pgu.value(p) == (&ka * pga.value(p) + &kb * pgb.value(p)) / &ku
    }))
}

/// Format a non-negative rational to four decimals, rounding half up:
/// floor(10⁴·r + 1/2) / 10⁴.
pub fn round_half_up_4dp(r: &BigRational) -> String {
    assert!(!r.numer().is_negative(), "index values are non-negative");
    let doubled = r.numer() * BigInt::from(20_000) + r.denom();
    let units = doubled.div_floor(&(r.denom() * BigInt::from(2)));
    let (whole, frac) = units.div_rem(&BigInt::from(10_000));
    format!("{whole}.{:04}", frac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::PartitionFormGame;
    use crate::model::{EmbeddedCoalition, GameSpec, Partition, Player, TieRule};

    fn table(weights: &[u64]) -> PlayerTable {
        let names = ["a", "b", "c", "d", "e", "f"];
        PlayerTable::new(
            weights
                .iter()
                .enumerate()
                .map(|(i, w)| Player {
                    id: names[i].into(),
                    weight: *w,
                    votes: None,
                })
                .collect(),
        )
        .unwrap()
    }

    fn char_spec(quota: u64, weights: &[u64]) -> GameSpec {
        GameSpec::characteristic(table(weights), quota).unwrap()
    }

    #[test]
    fn rounding_is_half_up_at_four_decimals() {
        assert_eq!(round_half_up_4dp(&ratio(23, 51)), "0.4510");
        assert_eq!(round_half_up_4dp(&ratio(1, 3)), "0.3333");
        assert_eq!(round_half_up_4dp(&ratio(2, 3)), "0.6667");
        assert_eq!(round_half_up_4dp(&ratio(1, 20000)), "0.0001"); // exactly .00005
        assert_eq!(round_half_up_4dp(&ratio(1, 30000)), "0.0000");
        assert_eq!(round_half_up_4dp(&BigRational::one()), "1.0000");
        assert_eq!(round_half_up_4dp(&BigRational::zero()), "0.0000");
        assert_eq!(round_half_up_4dp(&ratio(10001, 10000)), "1.0001");
    }

    #[test]
    fn indices_on_a_small_weighted_game() {
        let spec = char_spec(3, &[2, 1, 1]);
        let m = spec.minimal_winning_coalitions().unwrap(); // {ab}, {ac}
        let t = spec.table();

        let dp = deegan_packel(&m).unwrap();
        assert_eq!(dp.values(), &[ratio(1, 2), ratio(1, 4), ratio(1, 4)]);

        let pg = public_good(&m).unwrap();
        assert_eq!(pg.values(), &[ratio(1, 2), ratio(1, 4), ratio(1, 4)]);

        let cm = colomer_martinez(&m, t).unwrap();
        assert_eq!(cm.values(), &[ratio(2, 3), ratio(1, 6), ratio(1, 6)]);

        let hcm = holler_colomer_martinez(&m, t).unwrap();
        assert_eq!(hcm.values(), &[ratio(2, 3), ratio(1, 6), ratio(1, 6)]);
        assert_eq!(hcm, hcm_alternative(&m, t).unwrap());
    }

    #[test]
    fn equal_weights_collapse_cm_to_dp_and_hcm_to_pg() {
        let spec = GameSpec::partition_form(table(&[1, 1, 1]), TieRule::TiesLose).unwrap();
        let m = spec.minimal_winning_embedded_coalitions().unwrap();
        let t = spec.table();
        assert_eq!(
            deegan_packel(&m).unwrap().values(),
            colomer_martinez(&m, t).unwrap().values()
        );
        assert_eq!(
            public_good(&m).unwrap().values(),
            holler_colomer_martinez(&m, t).unwrap().values()
        );
    }

    #[test]
    fn null_players_score_zero_everywhere() {
        let spec = GameSpec::partition_form(table(&[2, 1, 1]), TieRule::TiesLose).unwrap();
        let m = spec.minimal_winning_embedded_coalitions().unwrap();
        let t = spec.table();
        assert_eq!(null_players(&m), Coalition::from_indices([1, 2]));
        for f in [
            deegan_packel(&m).unwrap(),
            public_good(&m).unwrap(),
            colomer_martinez(&m, t).unwrap(),
            holler_colomer_martinez(&m, t).unwrap(),
        ] {
            assert!(f.value(1).is_zero());
            assert!(f.value(2).is_zero());
            assert!(f.value(0).is_one());
        }
    }

    #[test]
    fn weighted_symmetry_separates_the_indices() {
        // single minimal winning coalition {a,b,c} with unequal weights
        let spec = char_spec(4, &[2, 1, 1]);
        let m = spec.minimal_winning_coalitions().unwrap();
        let t = spec.table();
        assert_eq!(m.len(), 1);

        let cm = colomer_martinez(&m, t).unwrap();
        assert_eq!(
            check_weighted_symmetry(&cm, &m, t).unwrap(),
            WeightedSymmetry::Holds
        );
        let hcm = holler_colomer_martinez(&m, t).unwrap();
        assert_eq!(
            check_weighted_symmetry(&hcm, &m, t).unwrap(),
            WeightedSymmetry::Holds
        );
        let dp = deegan_packel(&m).unwrap();
        assert_eq!(
            check_weighted_symmetry(&dp, &m, t).unwrap(),
            WeightedSymmetry::Violated
        );
        assert!(!check_weighted_symmetry(&dp, &m, t).unwrap().as_bool());

        // two minimal winning coalitions: out of the law's scope
        let spec = char_spec(3, &[2, 1, 1]);
        let m = spec.minimal_winning_coalitions().unwrap();
        let dp = deegan_packel(&m).unwrap();
        assert_eq!(
            check_weighted_symmetry(&dp, &m, spec.table()).unwrap(),
            WeightedSymmetry::NotApplicable
        );
    }

    #[test]
    fn symmetric_players_share_dp_and_pg() {
        let spec = char_spec(3, &[2, 1, 1]);
        let g = CharacteristicGame::from_spec(&spec).unwrap();
        assert_eq!(symmetric_pairs_characteristic(&g), vec![(1, 2)]);
        let m = spec.minimal_winning_coalitions().unwrap();
        let dp = deegan_packel(&m).unwrap();
        let pg = public_good(&m).unwrap();
        assert_eq!(dp.value(1), dp.value(2));
        assert_eq!(pg.value(1), pg.value(2));

        let sym = CharacteristicGame::from_spec(&char_spec(2, &[1, 1, 1])).unwrap();
        assert_eq!(
            symmetric_pairs_characteristic(&sym),
            vec![(0, 1), (0, 2), (1, 2)]
        );
    }

    #[test]
    fn merge_identities_hold_for_mergeable_games() {
        // two disjoint unanimity pairs over four players
        let uab = CharacteristicGame::unanimity(4, Coalition::from_indices([0, 1])).unwrap();
        let ucd = CharacteristicGame::unanimity(4, Coalition::from_indices([2, 3])).unwrap();
        assert!(dp_merge_check(&uab, &ucd).unwrap());
        assert!(pg_merge_check(&uab, &ucd).unwrap());

        let g = CharacteristicGame::from_spec(&char_spec(3, &[2, 1, 1])).unwrap();
        let bc = CharacteristicGame::unanimity(3, Coalition::from_indices([1, 2])).unwrap();
        assert!(dp_merge_check(&g, &bc).unwrap());
        assert!(pg_merge_check(&g, &bc).unwrap());

        let ab = CharacteristicGame::unanimity(3, Coalition::from_indices([0, 1])).unwrap();
        assert!(matches!(dp_merge_check(&g, &ab), Err(Error::NotMergeable(_))));
        assert!(matches!(pg_merge_check(&g, &ab), Err(Error::NotMergeable(_))));
    }

    #[test]
    fn degenerate_denominators_are_reported() {
        let empty = MinimalWinningSet::characteristic(2, vec![]);
        assert!(matches!(deegan_packel(&empty), Err(Error::Degenerate(_))));
        assert!(matches!(public_good(&empty), Err(Error::Degenerate(_))));

        // zero-weight active coalition, reachable through an antichain game
        let p = Partition::new(2, vec![Coalition::singleton(0), Coalition::singleton(1)]).unwrap();
        let low = EmbeddedCoalition::new(Coalition::singleton(0), p).unwrap();
        let m = PartitionFormGame::from_antichain(vec![low])
            .unwrap()
            .minimal_winning()
            .unwrap();
        let t = table(&[0, 5]);
        assert!(matches!(colomer_martinez(&m, &t), Err(Error::Degenerate(_))));
        assert!(matches!(
            holler_colomer_martinez(&m, &t),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(hcm_alternative(&m, &t), Err(Error::Degenerate(_))));

        // DP and PG stay defined and give the zero-weight player full credit
        assert!(deegan_packel(&m).unwrap().value(0).is_one());
        assert!(public_good(&m).unwrap().value(0).is_one());

        let wrong_table = table(&[1, 1, 1]);
        assert!(matches!(
            colomer_martinez(&m, &wrong_table),
            Err(Error::MalformedInput(_))
        ));
    }
}
