//! A small seeded campaign written as CSV.
//!
//!     cargo run --release --example campaign > trials.csv

use hamspan::experiments::{run_experiment, write_trials_csv, CampaignConfig};

fn main() -> hamspan::Result<()> {
    let config = CampaignConfig {
        ns: vec![51, 101],
        fs: vec![-1.0, 1.0, 3.0],
        trials: 5,
        master_seed: 2024,
        refute: true,
        ..Default::default()
    };
    let records = run_experiment(&config)?;
    write_trials_csv(std::io::stdout().lock(), &records)?;

    for chunk in records.chunks(config.trials) {
        let d3 = chunk.iter().filter(|r| r.min_degree >= 3).count();
        let spanned = chunk.iter().filter(|r| r.min_degree >= 3 && r.verdict.is_spanned()).count();
        eprintln!("n = {:>3} p = {:.4}: spanned {spanned}/{d3} with min degree >= 3", chunk[0].n, chunk[0].p);
    }
    Ok(())
}
