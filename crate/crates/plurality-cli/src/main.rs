//! Command-line front end: loads a game from a bundled fixture, a JSON
//! document or a players CSV, runs one analysis and prints it in the chosen
//! format. Exit codes: 0 on success, 2 for usage and validation problems,
//! 3 when a game exceeds the player capacity.

use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use plurality::document::{players_from_csv, FormTag, GameSpecDocument, TieRuleTag, SCHEMA_VERSION};
use plurality::report::{
    CompareReport, IndicesReport, MwecReport, OutputFormat, TieReport, ValidateReport,
};
use plurality::{fixtures, Capacity, Error, GameSpec, Result};

#[derive(Parser)]
#[command(
    name = "plurality",
    version,
    about = "Minimal winning coalitions and power indices for weighted majority games",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, default_value = "table", value_parser = ["table", "csv", "json"])]
    format: String,

    /// Player limit override, up to 15 (default 12)
    #[arg(long, global = true)]
    capacity: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the minimal winning (embedded) coalitions
    Mwec(GameArgs),
    /// List the partitions whose top seat count is shared by several blocks
    Ties(GameArgs),
    /// Compute the DP, PG, CM and HCM power indices
    Indices(GameArgs),
    /// Rounded indices for two or more games, side by side
    Compare(CompareArgs),
    /// Check a game description and summarize it
    Validate(GameArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["fixture", "spec"])))]
struct GameArgs {
    /// Bundled snapshot (see `--fixture help` for the labels)
    #[arg(long)]
    fixture: Option<String>,

    /// Path to a game document (.json) or a players table (.csv)
    #[arg(long)]
    spec: Option<PathBuf>,

    /// Analyze in partition form under this tie rule
    #[arg(long, value_parser = ["ties-lose", "ties-all-win", "votes"], conflicts_with = "quota")]
    tie_rule: Option<String>,

    /// Analyze in characteristic form with this quota
    #[arg(long)]
    quota: Option<u64>,
}

#[derive(Args)]
struct CompareArgs {
    /// Two or more bundled labels or .json document paths
    #[arg(required = true, num_args = 2..)]
    games: Vec<String>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Capacity { .. } => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: Cli) -> Result<String> {
    let format: OutputFormat = cli.format.parse()?;
    let capacity = match cli.capacity {
        Some(limit) => Capacity::new(limit)?,
        None => Capacity::default(),
    };
    match cli.command {
        Command::Mwec(args) => Ok(MwecReport::build(&load_game(&args, capacity)?)?.render(format)),
        Command::Ties(args) => Ok(TieReport::build(&load_game(&args, capacity)?)?.render(format)),
        Command::Indices(args) => {
            Ok(IndicesReport::build(&load_game(&args, capacity)?)?.render(format))
        }
        Command::Validate(args) => {
            Ok(ValidateReport::build(&load_game(&args, capacity)?).render(format))
        }
        Command::Compare(args) => {
            let mut labeled = Vec::with_capacity(args.games.len());
            for name in &args.games {
                labeled.push((display_label(name), load_by_name(name, capacity)?));
            }
            Ok(CompareReport::build(&labeled)?.render(format))
        }
    }
}

fn load_game(args: &GameArgs, capacity: Capacity) -> Result<GameSpec> {
    let doc = match (&args.fixture, &args.spec) {
        (Some(label), None) => fixtures::document(label)?,
        (None, Some(path)) => document_from_path(path)?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    let doc = apply_overrides(doc, args.tie_rule.as_deref(), args.quota)?;
    doc.to_game_spec(capacity)
}

fn document_from_path(path: &Path) -> Result<GameSpecDocument> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::validation(path.display().to_string(), e.to_string()))?;
    if path.extension().is_some_and(|ext| ext.eq_ignore_ascii_case("csv")) {
        let players = players_from_csv(&data)?;
        // rule-less skeleton; --tie-rule or --quota must fill the form in
        Ok(GameSpecDocument {
            schema_version: SCHEMA_VERSION,
            form: FormTag::Partition,
            quota: None,
            tie_rule: None,
            players,
        })
    } else {
        GameSpecDocument::parse(&data)
    }
}

fn apply_overrides(
    mut doc: GameSpecDocument,
    tie_rule: Option<&str>,
    quota: Option<u64>,
) -> Result<GameSpecDocument> {
    if let Some(rule) = tie_rule {
        doc.form = FormTag::Partition;
        doc.quota = None;
        doc.tie_rule = Some(match rule {
            "ties-lose" => TieRuleTag::TiesLose,
            "ties-all-win" => TieRuleTag::TiesAllWin,
            "votes" => TieRuleTag::Votes,
            other => return Err(Error::Usage(format!("unknown tie rule `{other}`"))),
        });
    } else if let Some(q) = quota {
        doc.form = FormTag::Characteristic;
        doc.quota = Some(q);
        doc.tie_rule = None;
    } else if doc.form == FormTag::Partition && doc.tie_rule.is_none() {
        return Err(Error::Usage(
            "a players CSV carries no winning rule; add --tie-rule or --quota".into(),
        ));
    }
    Ok(doc)
}

/// Compare inputs: a bundled label, or a path to a JSON document.
fn load_by_name(name: &str, capacity: Capacity) -> Result<GameSpec> {
    match fixtures::game_spec(name, capacity) {
        Err(Error::UnknownFixture(..)) if Path::new(name).is_file() => {
            if name.to_ascii_lowercase().ends_with(".csv") {
                return Err(Error::Usage(format!(
                    "`{name}`: compare reads only labels and .json documents, \
                     because a players CSV carries no winning rule"
                )));
            }
            document_from_path(Path::new(name))?.to_game_spec(capacity)
        }
        other => other,
    }
}

fn display_label(name: &str) -> String {
    if fixtures::LABELS.contains(&name) {
        name.to_string()
    } else {
        Path::new(name)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| name.to_string())
    }
}
