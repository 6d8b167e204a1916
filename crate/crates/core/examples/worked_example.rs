//! The GF(8³) example checked value by value.

use multirate_mrd::golden::verify_example;
use multirate_mrd::multirate::MultiRateCode;

fn main() -> multirate_mrd::Result<()> {
    let code = MultiRateCode::preset("paper-8-3-k1")?;
    let report = verify_example(&code)?;
    println!("{report}");
    for c in report.errata() {
        println!("\n{}: {}", c.name, c.note.as_deref().unwrap_or(""));
    }
    Ok(())
}
