//! Seeded rank-error channel runs; the same seed gives the same report.

use multirate_mrd::multirate::MultiRateCode;
use multirate_mrd::sim::{simulate, MessageSource, SimulationConfig};

fn main() -> multirate_mrd::Result<()> {
    let code = MultiRateCode::preset("paper-8-3-k1")?;
    for spec in ["0:0.5,1:0.5", "1:1", "2:1"] {
        let cfg = SimulationConfig {
            trials: 500,
            seed: 2024,
            error_ranks: spec.parse()?,
            source: MessageSource::Uniform,
            t_max: None,
        };
        let report = simulate(&code, &cfg)?;
        println!("error ranks {spec}\n{report}\n");
    }
    Ok(())
}
