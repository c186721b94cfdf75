//! Analysis reports and their renderings. Each report is built once from a
//! game and can then be rendered as an aligned text table, RFC 4180 CSV, or
//! pretty-printed JSON. Rendering is pure, so equal inputs give byte-equal
//! output in every format.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::games::{GameForm, MinimalWinningSet, TieOutcome};
use crate::indices::{
    colomer_martinez, deegan_packel, holler_colomer_martinez, public_good, IndexKind, IndexVector,
};
use crate::model::{Coalition, GameSpec, PlayerTable, RuleForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl OutputFormat {
    pub fn label(self) -> &'static str {
        match self {
            OutputFormat::Table => "table",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Usage(format!(
                "unknown format `{other}`; choose table, csv or json"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlayerSummary {
    pub id: String,
    pub weight: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub votes: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RuleSummary {
    pub form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quota: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tie_rule: Option<String>,
}

fn player_summaries(t: &PlayerTable) -> Vec<PlayerSummary> {
    t.players()
        .iter()
        .map(|p| PlayerSummary {
            id: p.id.clone(),
            weight: p.weight,
            votes: p.votes,
        })
        .collect()
}

fn rule_summary(spec: &GameSpec) -> RuleSummary {
    match spec.form() {
        RuleForm::Characteristic { quota } => RuleSummary {
            form: "characteristic".into(),
            quota: Some(quota),
            tie_rule: None,
        },
        RuleForm::PartitionForm { tie_rule } => RuleSummary {
            form: "partition".into(),
            quota: None,
            tie_rule: Some(tie_rule.label().into()),
        },
    }
}

/// One-line description used at the top of table output.
fn headline(spec: &GameSpec) -> String {
    let rule = match spec.form() {
        RuleForm::Characteristic { quota } => format!("characteristic form, quota {quota}"),
        RuleForm::PartitionForm { tie_rule } => {
            format!("partition form, tie rule {}", tie_rule.label())
        }
    };
    format!(
        "{rule}, {} players, total weight {}",
        spec.n(),
        spec.table().total_weight()
    )
}

fn block_ids(t: &PlayerTable, block: Coalition) -> Vec<String> {
    block.iter().map(|p| t.id(p).to_string()).collect()
}

/// "UNES+MUPP" for a block of players.
fn join_block(ids: &[String]) -> String {
    ids.join("+")
}

/// "UNES+MUPP | ID | PSC+IND" for a list of blocks.
fn join_blocks(blocks: &[Vec<String>]) -> String {
    blocks
        .iter()
        .map(|b| join_block(b))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Pad every cell to its column width, two spaces between columns, no
/// trailing whitespace.
fn align(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:<width$}", width = widths[i]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_render(rows: &[Vec<String>]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    for row in rows {
        writer.write_record(row).expect("writing to memory");
    }
    let bytes = writer.into_inner().expect("writing to memory");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn json_render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct MwecEntry {
    pub active: Vec<String>,
    /// Rival blocks, partition form only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outside: Option<Vec<Vec<String>>>,
    pub weight: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParticipationEntry {
    pub id: String,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MwecReport {
    pub analysis: &'static str,
    pub rule: RuleSummary,
    pub players: Vec<PlayerSummary>,
    pub count: usize,
    pub coalitions: Vec<MwecEntry>,
    pub participation: Vec<ParticipationEntry>,
    #[serde(skip)]
    headline: String,
}

impl MwecReport {
    pub fn build(spec: &GameSpec) -> Result<MwecReport> {
        let set = minimal_winning_of(spec)?;
        let t = spec.table();
        let coalitions = match set.form() {
            GameForm::Characteristic => set
                .coalitions()
                .expect("characteristic set")
                .iter()
                .map(|c| {
                    Ok(MwecEntry {
                        active: block_ids(t, *c),
                        outside: None,
                        weight: t.block_weight(*c)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            GameForm::PartitionForm => set
                .embedded()
                .expect("partition-form set")
                .iter()
                .map(|ec| {
                    Ok(MwecEntry {
                        active: block_ids(t, ec.active()),
                        outside: Some(ec.outside_blocks().map(|b| block_ids(t, b)).collect()),
                        weight: t.block_weight(ec.active())?,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let participation = set
            .participation_counts()
            .into_iter()
            .enumerate()
            .map(|(p, count)| ParticipationEntry {
                id: t.id(p).to_string(),
                count,
            })
            .collect();
        Ok(MwecReport {
            analysis: "minimal-winning",
            rule: rule_summary(spec),
            players: player_summaries(t),
            count: set.len(),
            coalitions,
            participation,
            headline: headline(spec),
        })
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let partition_form = self.rule.tie_rule.is_some();
        let mut rows = Vec::with_capacity(self.coalitions.len() + 1);
        let mut header = vec!["active".to_string()];
        if partition_form {
            header.push("outside".to_string());
        }
        header.push("weight".to_string());
        rows.push(header);
        for entry in &self.coalitions {
            let mut row = vec![join_block(&entry.active)];
            if partition_form {
                row.push(join_blocks(entry.outside.as_deref().unwrap_or(&[])));
            }
            row.push(entry.weight.to_string());
            rows.push(row);
        }
        rows
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json_render(self),
            OutputFormat::Csv => csv_render(&self.csv_rows()),
            OutputFormat::Table => {
                let mut rows = self.csv_rows();
                rows[0].insert(0, "#".to_string());
                for (i, row) in rows[1..].iter_mut().enumerate() {
                    row.insert(0, (i + 1).to_string());
                }
                let participation = self
                    .participation
                    .iter()
                    .map(|p| format!("{} {}", p.id, p.count))
                    .collect::<Vec<_>>()
                    .join(", ");
                let total: usize = self.participation.iter().map(|p| p.count).sum();
                format!(
                    "{}\nminimal winning coalitions: {}\n\n{}\nparticipation: {} (total {})\n",
                    self.headline,
                    self.count,
                    align(&rows),
                    participation,
                    total
                )
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TieEntry {
    pub blocks: Vec<Vec<String>>,
    /// Block weights, aligned with `blocks`.
    pub seats: Vec<u64>,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winner: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TieReport {
    pub analysis: &'static str,
    pub rule: RuleSummary,
    pub players: Vec<PlayerSummary>,
    pub count: usize,
    pub ties: Vec<TieEntry>,
    #[serde(skip)]
    headline: String,
}

impl TieReport {
    pub fn build(spec: &GameSpec) -> Result<TieReport> {
        let t = spec.table();
        let ties = spec
            .tie_partitions()?
            .into_iter()
            .map(|tie| {
                let blocks = tie
                    .partition
                    .blocks()
                    .iter()
                    .map(|b| block_ids(t, *b))
                    .collect();
                let (outcome, winner) = match tie.outcome {
                    TieOutcome::NoWinner => ("no-winner", None),
                    TieOutcome::AllTiedWin => ("all-tied-win", None),
                    TieOutcome::WonByVotes(block) => ("won-by-votes", Some(block_ids(t, block))),
                };
                TieEntry {
                    blocks,
                    seats: tie.seats,
                    outcome,
                    winner,
                }
            })
            .collect::<Vec<_>>();
        Ok(TieReport {
            analysis: "ties",
            rule: rule_summary(spec),
            players: player_summaries(t),
            count: ties.len(),
            ties,
            headline: headline(spec),
        })
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "blocks".to_string(),
            "seats".to_string(),
            "outcome".to_string(),
            "winner".to_string(),
        ]];
        for tie in &self.ties {
            rows.push(vec![
                join_blocks(&tie.blocks),
                tie.seats
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" | "),
                tie.outcome.to_string(),
                tie.winner.as_deref().map(join_block).unwrap_or_default(),
            ]);
        }
        rows
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json_render(self),
            OutputFormat::Csv => csv_render(&self.csv_rows()),
            OutputFormat::Table => {
                let mut rows = self.csv_rows();
                rows[0].insert(0, "#".to_string());
                for (i, row) in rows[1..].iter_mut().enumerate() {
                    row.insert(0, (i + 1).to_string());
                }
                format!(
                    "{}\ntied partitions: {}\n\n{}",
                    self.headline,
                    self.count,
                    if self.ties.is_empty() {
                        "(none)\n".to_string()
                    } else {
                        align(&rows)
                    }
                )
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexValueEntry {
    pub id: String,
    /// Exact value as a reduced fraction, serialized as decimal strings.
    pub numerator: String,
    pub denominator: String,
    /// Four decimals, ties away from zero.
    pub rounded: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexTableEntry {
    pub index: &'static str,
    pub values: Vec<IndexValueEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicesReport {
    pub analysis: &'static str,
    pub rule: RuleSummary,
    pub players: Vec<PlayerSummary>,
    pub count: usize,
    pub indices: Vec<IndexTableEntry>,
    #[serde(skip)]
    headline: String,
}

fn minimal_winning_of(spec: &GameSpec) -> Result<MinimalWinningSet> {
    if spec.is_partition_form() {
        spec.minimal_winning_embedded_coalitions()
    } else {
        spec.minimal_winning_coalitions()
    }
}

/// The four indices of a game, in [`IndexKind::ALL`] order.
pub fn index_vectors(spec: &GameSpec) -> Result<(MinimalWinningSet, Vec<IndexVector>)> {
    let set = minimal_winning_of(spec)?;
    let t = spec.table();
    let vectors = vec![
        deegan_packel(&set)?,
        public_good(&set)?,
        colomer_martinez(&set, t)?,
        holler_colomer_martinez(&set, t)?,
    ];
    Ok((set, vectors))
}

impl IndicesReport {
    pub fn build(spec: &GameSpec) -> Result<IndicesReport> {
        let (set, vectors) = index_vectors(spec)?;
        let t = spec.table();
        let indices = vectors
            .iter()
            .map(|v| IndexTableEntry {
                index: v.kind().label(),
                values: (0..t.len())
                    .map(|p| IndexValueEntry {
                        id: t.id(p).to_string(),
                        numerator: v.value(p).numer().to_string(),
                        denominator: v.value(p).denom().to_string(),
                        rounded: v.rounded(p),
                    })
                    .collect(),
            })
            .collect();
        Ok(IndicesReport {
            analysis: "indices",
            rule: rule_summary(spec),
            players: player_summaries(t),
            count: set.len(),
            indices,
            headline: headline(spec),
        })
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut header = vec!["player".to_string(), "weight".to_string()];
        header.extend(self.indices.iter().map(|e| e.index.to_string()));
        let mut rows = vec![header];
        for (p, player) in self.players.iter().enumerate() {
            let mut row = vec![player.id.clone(), player.weight.to_string()];
            row.extend(self.indices.iter().map(|e| e.values[p].rounded.clone()));
            rows.push(row);
        }
        rows
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json_render(self),
            OutputFormat::Csv => csv_render(&self.csv_rows()),
            OutputFormat::Table => format!(
                "{}\nminimal winning coalitions: {}\n\n{}",
                self.headline,
                self.count,
                align(&self.csv_rows())
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareRow {
    pub id: String,
    /// Rounded values, one per period.
    pub values: Vec<String>,
    /// Signed change between consecutive periods, computed from the rounded
    /// values so that a reader can reproduce it from the printed columns.
    pub deltas: Vec<String>,
}

// "0.4510" -> 4510 ten-thousandths; rounded values are always 0.0000..=1.0000
fn ten_thousandths(rounded: &str) -> i64 {
    let (whole, frac) = rounded.split_once('.').expect("rounded value");
    whole.parse::<i64>().expect("rounded value") * 10_000
        + frac.parse::<i64>().expect("rounded value")
}

fn delta_string(from: &str, to: &str) -> String {
    let d = ten_thousandths(to) - ten_thousandths(from);
    let sign = if d < 0 { '-' } else { '+' };
    format!("{sign}{}.{:04}", d.abs() / 10_000, d.abs() % 10_000)
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareTableEntry {
    pub index: &'static str,
    pub rows: Vec<CompareRow>,
}

/// Side-by-side rounded indices for several games over the same player set.
#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub analysis: &'static str,
    pub periods: Vec<String>,
    pub players: Vec<String>,
    pub indices: Vec<CompareTableEntry>,
}

impl CompareReport {
    pub fn build(labeled: &[(String, GameSpec)]) -> Result<CompareReport> {
        if labeled.len() < 2 {
            return Err(Error::Usage(
                "compare needs at least two games".into(),
            ));
        }
        let first = &labeled[0].1;
        let ids: Vec<String> = first.table().ids().map(str::to_string).collect();
        for (label, spec) in &labeled[1..] {
            let mut a: Vec<&str> = first.table().ids().collect();
            let mut b: Vec<&str> = spec.table().ids().collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::MalformedInput(format!(
                    "`{label}` has players {{{}}}, which differs from `{}`",
                    b.join(", "),
                    labeled[0].0
                )));
            }
        }

        // per period: the four index vectors, re-addressed by player id
        let mut by_period = Vec::with_capacity(labeled.len());
        for (_, spec) in labeled {
            let (_, vectors) = index_vectors(spec)?;
            let table = spec.table();
            by_period.push(
                vectors
                    .into_iter()
                    .map(|v| {
                        ids.iter()
                            .map(|id| {
                                let p = table.index_of(id).expect("id sets match");
                                v.rounded(p)
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>(),
            );
        }

        let indices = IndexKind::ALL
            .iter()
            .enumerate()
            .map(|(k, kind)| CompareTableEntry {
                index: kind.label(),
                rows: ids
                    .iter()
                    .enumerate()
                    .map(|(p, id)| {
                        let values: Vec<String> =
                            by_period.iter().map(|period| period[k][p].clone()).collect();
                        let deltas = values
                            .windows(2)
                            .map(|w| delta_string(&w[0], &w[1]))
                            .collect();
                        CompareRow { id: id.clone(), values, deltas }
                    })
                    .collect(),
            })
            .collect();

        Ok(CompareReport {
            analysis: "compare",
            periods: labeled.iter().map(|(l, _)| l.clone()).collect(),
            players: ids,
            indices,
        })
    }

    fn delta_headers(&self) -> Vec<String> {
        self.periods
            .windows(2)
            .map(|w| format!("delta({})", w[1]))
            .collect()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut header = vec!["index".to_string(), "player".to_string()];
        header.extend(self.periods.iter().cloned());
        header.extend(self.delta_headers());
        let mut rows = vec![header];
        for entry in &self.indices {
            for row in &entry.rows {
                let mut line = vec![entry.index.to_string(), row.id.clone()];
                line.extend(row.values.iter().cloned());
                line.extend(row.deltas.iter().cloned());
                rows.push(line);
            }
        }
        rows
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json_render(self),
            OutputFormat::Csv => csv_render(&self.csv_rows()),
            OutputFormat::Table => {
                let mut out = format!("periods: {}\n", self.periods.join(", "));
                for entry in &self.indices {
                    let mut rows = vec![{
                        let mut h = vec!["player".to_string()];
                        h.extend(self.periods.iter().cloned());
                        h.extend(self.delta_headers());
                        h
                    }];
                    for row in &entry.rows {
                        let mut line = vec![row.id.clone()];
                        line.extend(row.values.iter().cloned());
                        line.extend(row.deltas.iter().cloned());
                        rows.push(line);
                    }
                    let _ = write!(out, "\n{}\n{}", entry.index, align(&rows));
                }
                out
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidateReport {
    pub analysis: &'static str,
    pub valid: bool,
    pub rule: RuleSummary,
    pub players: Vec<PlayerSummary>,
    pub total_weight: u64,
    #[serde(skip)]
    headline: String,
}

impl ValidateReport {
    pub fn build(spec: &GameSpec) -> ValidateReport {
        ValidateReport {
            analysis: "validate",
            valid: true,
            rule: rule_summary(spec),
            players: player_summaries(spec.table()),
            total_weight: spec.table().total_weight(),
            headline: headline(spec),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => json_render(self),
            OutputFormat::Csv => csv_render(&[
                vec!["field".to_string(), "value".to_string()],
                vec!["valid".to_string(), "true".to_string()],
                vec!["form".to_string(), self.rule.form.clone()],
                vec!["players".to_string(), self.players.len().to_string()],
                vec!["total_weight".to_string(), self.total_weight.to_string()],
            ]),
            OutputFormat::Table => format!("ok: {}\n", self.headline),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Player, PlayerTable, TieRule};

    fn table(weights: &[u64]) -> PlayerTable {
        let names = ["a", "b", "c", "d", "e", "f"];
        PlayerTable::new(
            weights
                .iter()
                .zip(names)
                .map(|(w, id)| Player {
                    id: id.into(),
                    weight: *w,
                    votes: None,
                })
                .collect(),
        )
        .unwrap()
    }

    fn votes_table(weights: &[u64], votes: &[u64]) -> PlayerTable {
        let names = ["a", "b", "c", "d", "e", "f"];
        PlayerTable::new(
            weights
                .iter()
                .zip(votes)
                .zip(names)
                .map(|((w, v), id)| Player {
                    id: id.into(),
                    weight: *w,
                    votes: Some(*v),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn characteristic_mwec_report_renders_in_all_formats() {
        let spec = GameSpec::characteristic(table(&[2, 1, 1]), 3).unwrap();
        let report = MwecReport::build(&spec).unwrap();

        assert_eq!(
            report.render(OutputFormat::Table),
            "characteristic form, quota 3, 3 players, total weight 4\n\
             minimal winning coalitions: 2\n\
             \n\
             #  active  weight\n\
             1  a+b     3\n\
             2  a+c     3\n\
             \n\
             participation: a 2, b 1, c 1 (total 4)\n"
        );
        assert_eq!(
            report.render(OutputFormat::Csv),
            "active,weight\r\na+b,3\r\na+c,3\r\n"
        );
        let json: serde_json::Value =
            serde_json::from_str(&report.render(OutputFormat::Json)).unwrap();
        assert_eq!(json["analysis"], "minimal-winning");
        assert_eq!(json["count"], 2);
        assert_eq!(json["coalitions"][0]["active"][1], "b");
        assert!(json["coalitions"][0].get("outside").is_none());
    }

    #[test]
    fn partition_mwec_report_includes_rival_blocks() {
        let spec = GameSpec::partition_form(table(&[2, 1, 1]), TieRule::TiesLose).unwrap();
        let report = MwecReport::build(&spec).unwrap();
        assert_eq!(report.count, 1);
        assert_eq!(
            report.render(OutputFormat::Csv),
            "active,outside,weight\r\na,b | c,2\r\n"
        );
        let json: serde_json::Value =
            serde_json::from_str(&report.render(OutputFormat::Json)).unwrap();
        assert_eq!(json["coalitions"][0]["outside"][0][0], "b");
    }

    #[test]
    fn tie_report_lists_tied_partitions() {
        let spec = GameSpec::partition_form(table(&[2, 1, 1]), TieRule::TiesAllWin).unwrap();
        let report = TieReport::build(&spec).unwrap();
        assert_eq!(
            report.render(OutputFormat::Table),
            "partition form, tie rule ties-all-win, 3 players, total weight 4\n\
             tied partitions: 1\n\
             \n\
             #  blocks   seats  outcome       winner\n\
             1  a | b+c  2 | 2  all-tied-win\n"
        );

        let spec = GameSpec::partition_form(
            votes_table(&[2, 1, 1], &[10, 30, 20]),
            TieRule::Votes,
        )
        .unwrap();
        let report = TieReport::build(&spec).unwrap();
        assert_eq!(report.ties[0].outcome, "won-by-votes");
        assert_eq!(report.ties[0].winner.as_deref(), Some(&["b".to_string(), "c".to_string()][..]));
        assert_eq!(
            report.render(OutputFormat::Csv),
            "blocks,seats,outcome,winner\r\na | b+c,2 | 2,won-by-votes,b+c\r\n"
        );

        let spec = GameSpec::partition_form(table(&[2, 1, 1]), TieRule::TiesLose).unwrap();
        let report = TieReport::build(&spec).unwrap();
        assert_eq!(report.ties[0].outcome, "no-winner");
    }

    #[test]
    fn empty_tie_report_renders_a_placeholder() {
        // 4 > 2 = 1 + 1, so no partition of these weights ties at the top
        let spec = GameSpec::partition_form(table(&[4, 1, 1]), TieRule::TiesLose).unwrap();
        let report = TieReport::build(&spec).unwrap();
        assert!(report.render(OutputFormat::Table).contains("(none)"));
        assert_eq!(report.count, 0);
    }

    #[test]
    fn indices_report_has_exact_and_rounded_values() {
        let spec = GameSpec::characteristic(table(&[2, 1, 1]), 3).unwrap();
        let report = IndicesReport::build(&spec).unwrap();
        assert_eq!(
            report.render(OutputFormat::Table),
            "characteristic form, quota 3, 3 players, total weight 4\n\
             minimal winning coalitions: 2\n\
             \n\
             player  weight  DP      PG      CM      HCM\n\
             a       2       0.5000  0.5000  0.6667  0.6667\n\
             b       1       0.2500  0.2500  0.1667  0.1667\n\
             c       1       0.2500  0.2500  0.1667  0.1667\n"
        );
        let json: serde_json::Value =
            serde_json::from_str(&report.render(OutputFormat::Json)).unwrap();
        assert_eq!(json["indices"][0]["index"], "DP");
        assert_eq!(json["indices"][0]["values"][0]["numerator"], "1");
        assert_eq!(json["indices"][0]["values"][0]["denominator"], "2");
        assert_eq!(json["indices"][2]["values"][0]["rounded"], "0.6667");
    }

    #[test]
    fn compare_report_joins_periods_by_player_id() {
        let a = ("q3".to_string(), GameSpec::characteristic(table(&[2, 1, 1]), 3).unwrap());
        let b = ("q4".to_string(), GameSpec::characteristic(table(&[2, 1, 1]), 4).unwrap());
        let report = CompareReport::build(&[a, b]).unwrap();
        assert_eq!(report.periods, ["q3", "q4"]);
        // q4 is unanimity: DP and PG split evenly, CM and HCM go by weight
        let csv = report.render(OutputFormat::Csv);
        assert!(csv.starts_with("index,player,q3,q4,delta(q4)\r\n"), "{csv}");
        assert!(csv.contains("DP,a,0.5000,0.3333,-0.1667\r\n"), "{csv}");
        assert!(csv.contains("DP,b,0.2500,0.3333,+0.0833\r\n"), "{csv}");
        let text = report.render(OutputFormat::Table);
        assert!(text.contains("\nHCM\n"), "{text}");
        assert!(text.contains("a       0.6667  0.5000  -0.1667"), "{text}");
    }

    #[test]
    fn compare_rejects_too_few_or_mismatched_inputs() {
        let q3 = GameSpec::characteristic(table(&[2, 1, 1]), 3).unwrap();
        assert!(matches!(
            CompareReport::build(&[("x".to_string(), q3.clone())]),
            Err(Error::Usage(_))
        ));
        let other = GameSpec::characteristic(table(&[1, 1, 1, 1]), 3).unwrap();
        assert!(matches!(
            CompareReport::build(&[("x".to_string(), q3), ("y".to_string(), other)]),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn validate_report_summarizes_the_game() {
        let spec = GameSpec::partition_form(table(&[2, 1, 1]), TieRule::TiesLose).unwrap();
        let report = ValidateReport::build(&spec);
        assert_eq!(
            report.render(OutputFormat::Table),
            "ok: partition form, tie rule ties-lose, 3 players, total weight 4\n"
        );
        let json: serde_json::Value =
            serde_json::from_str(&report.render(OutputFormat::Json)).unwrap();
        assert_eq!(json["valid"], true);
        assert_eq!(json["rule"]["tie_rule"], "ties-lose");
    }
}
