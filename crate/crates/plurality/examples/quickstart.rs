//! The README's library walkthrough: build a three-player chamber, sweep its
//! minimal winning embedded coalitions, print one index.

use plurality::indices::deegan_packel;
use plurality::{GameSpec, Player, PlayerTable, TieRule};

fn main() -> plurality::Result<()> {
    let table = PlayerTable::new(vec![
        Player { id: "A".into(), weight: 4, votes: None },
        Player { id: "B".into(), weight: 3, votes: None },
        Player { id: "C".into(), weight: 2, votes: None },
    ])?;
    let spec = GameSpec::partition_form(table, TieRule::TiesLose)?;
    let minimal = spec.minimal_winning_embedded_coalitions()?;
    let dp = deegan_packel(&minimal)?;
    println!("A's DP index: {}", dp.rounded(0));
    Ok(())
}
