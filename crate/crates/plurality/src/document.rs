//! On-disk game description: a small JSON document (schema version 1), plus a
//! CSV ingestion path for the players table alone.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Capacity, GameSpec, Player, PlayerTable, RuleForm, TieRule};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormTag {
    Characteristic,
    Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieRuleTag {
    TiesLose,
    TiesAllWin,
    Votes,
}

impl From<TieRuleTag> for TieRule {
    fn from(tag: TieRuleTag) -> TieRule {
        match tag {
            TieRuleTag::TiesLose => TieRule::TiesLose,
            TieRuleTag::TiesAllWin => TieRule::TiesAllWin,
            TieRuleTag::Votes => TieRule::Votes,
        }
    }
}

impl From<TieRule> for TieRuleTag {
    fn from(rule: TieRule) -> TieRuleTag {
        match rule {
            TieRule::TiesLose => TieRuleTag::TiesLose,
            TieRule::TiesAllWin => TieRuleTag::TiesAllWin,
            TieRule::Votes => TieRuleTag::Votes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlayerEntry {
    pub id: String,
    pub weight: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub votes: Option<u64>,
}

/// The parsed but not yet validated game document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameSpecDocument {
    pub schema_version: u32,
    pub form: FormTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quota: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tie_rule: Option<TieRuleTag>,
    pub players: Vec<PlayerEntry>,
}

impl GameSpecDocument {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Deterministic serialization: fields in declaration order, players in
    /// file order, two-space indentation, trailing newline.
    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Validate and build the game. Field problems are reported with a path
    /// into the document; an oversized player list is a capacity error.
    pub fn to_game_spec(&self, capacity: Capacity) -> Result<GameSpec> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::validation(
                "schema_version",
                format!("unsupported version {}; this tool reads version {SCHEMA_VERSION}", self.schema_version),
            ));
        }
        if self.players.is_empty() {
            return Err(Error::validation("players", "at least one player is required"));
        }
        capacity.check(self.players.len())?;
        for (i, p) in self.players.iter().enumerate() {
            if p.id.is_empty() {
                return Err(Error::validation(format!("players[{i}].id"), "must not be empty"));
            }
            if self.players[..i].iter().any(|q| q.id == p.id) {
                return Err(Error::validation(
                    format!("players[{i}].id"),
                    format!("duplicate id `{}`", p.id),
                ));
            }
        }
        if self.players.iter().all(|p| p.weight == 0) {
            return Err(Error::validation(
                "players",
                "every weight is 0; at least one player must carry weight",
            ));
        }
        let with_votes = self.players.iter().filter(|p| p.votes.is_some()).count();
        if with_votes != 0 && with_votes != self.players.len() {
            let i = self
                .players
                .iter()
                .position(|p| p.votes.is_none())
                .expect("some player lacks votes");
            return Err(Error::validation(
                format!("players[{i}].votes"),
                "votes must be given for every player or for none",
            ));
        }

        let table = PlayerTable::new(
            self.players
                .iter()
                .map(|p| Player {
                    id: p.id.clone(),
                    weight: p.weight,
                    votes: p.votes,
                })
                .collect(),
        )
        .map_err(|e| Error::validation("players", e.to_string()))?;

        match self.form {
            FormTag::Characteristic => {
                if self.tie_rule.is_some() {
                    return Err(Error::validation(
                        "tie_rule",
                        "only valid for partition-form games",
                    ));
                }
                let quota = self.quota.ok_or_else(|| {
                    Error::validation("quota", "required for characteristic-form games")
                })?;
                GameSpec::characteristic(table, quota)
                    .map_err(|e| Error::validation("quota", e.to_string()))
            }
            FormTag::Partition => {
                if self.quota.is_some() {
                    return Err(Error::validation(
                        "quota",
                        "only valid for characteristic-form games",
                    ));
                }
                let tie_rule = self.tie_rule.ok_or_else(|| {
                    Error::validation("tie_rule", "required for partition-form games")
                })?;
                GameSpec::partition_form(table, tie_rule.into())
                    .map_err(|e| Error::validation("tie_rule", e.to_string()))
            }
        }
    }

    pub fn from_game_spec(spec: &GameSpec) -> Self {
        let players = spec
            .table()
            .players()
            .iter()
            .map(|p| PlayerEntry {
                id: p.id.clone(),
                weight: p.weight,
                votes: p.votes,
            })
            .collect();
        match spec.form() {
            RuleForm::Characteristic { quota } => GameSpecDocument {
                schema_version: SCHEMA_VERSION,
                form: FormTag::Characteristic,
                quota: Some(quota),
                tie_rule: None,
                players,
            },
            RuleForm::PartitionForm { tie_rule } => GameSpecDocument {
                schema_version: SCHEMA_VERSION,
                form: FormTag::Partition,
                quota: None,
                tie_rule: Some(tie_rule.into()),
                players,
            },
        }
    }
}

/// Read a players table from CSV with header `id,weight` or `id,weight,votes`.
pub fn players_from_csv(data: &str) -> Result<Vec<PlayerEntry>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(data.as_bytes());
    let headers: Vec<String> = reader
        .headers()
        .map_err(csv_error)?
        .iter()
        .map(|h| h.to_ascii_lowercase())
        .collect();
    let with_votes = match headers.iter().map(String::as_str).collect::<Vec<_>>()[..] {
        ["id", "weight"] => false,
        ["id", "weight", "votes"] => true,
        _ => {
            return Err(Error::validation(
                "header",
                "expected `id,weight` or `id,weight,votes`",
            ))
        }
    };
    let mut players = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or_default();
        let field = |i: usize| record.get(i).unwrap_or_default();
        let number = |i: usize| -> Result<u64> {
            field(i).parse().map_err(|_| Error::Parse {
                line,
                column: i + 1,
                message: format!("`{}` is not a non-negative integer", field(i)),
            })
        };
        players.push(PlayerEntry {
            id: field(0).to_string(),
            weight: number(1)?,
            votes: if with_votes { Some(number(2)?) } else { None },
        });
    }
    Ok(players)
}

fn csv_error(e: csv::Error) -> Error {
    let line = match e.position() {
        Some(p) => p.line() as usize,
        None => 0,
    };
    Error::Parse {
        line,
        column: 0,
        message: e.to_string(),
    }
}
