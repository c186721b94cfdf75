//! Coalition analysis for weighted majority games, in characteristic form
//! (win by reaching a quota) and in partition function form (win by outweighing
//! every rival block of a coalition structure, under a configurable tie rule).
//!
//! The crate finds minimal winning (embedded) coalitions, lists tied
//! partitions, and computes four power indices from the minimal winning sets:
//! Deegan-Packel (DP), Public Good (PG), Colomer-Martínez (CM) and the
//! Holler-Colomer-Martínez hybrid (HCM). All index arithmetic is exact
//! rational; values are rounded to four decimals only for presentation.
//!
//! Entry points: describe a game with [`model::GameSpec`] or load one through
//! [`document::GameSpecDocument`], then use the sweep methods on the spec or
//! the ready-made reports in [`report`]. Snapshots of the Ecuador National
//! Assembly elected in 2021 ship in [`fixtures`].

pub mod document;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod games;
pub mod indices;
pub mod model;
pub mod report;

pub use document::GameSpecDocument;
pub use error::{Error, Result};
pub use games::{GameForm, MinimalWinningSet, TieOutcome, TiePartition};
pub use indices::{IndexKind, IndexVector};
pub use model::{
    Capacity, Coalition, EmbeddedCoalition, GameSpec, Partition, Player, PlayerTable, RuleForm,
    TieRule,
};
pub use report::OutputFormat;
