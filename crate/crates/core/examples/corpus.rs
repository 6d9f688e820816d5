//! A seeded one-singular corpus and its CSV summary.

use toric_reg::analysis::{corpus_csv, AnalyzeOptions};
use toric_reg::generate::{generate, Family, GenParams};
use toric_reg::instance::write_instance;

fn main() -> toric_reg::Result<()> {
    let dir = std::env::temp_dir().join("toric-reg-corpus");
    std::fs::create_dir_all(&dir)?;
    for seed in 0..6 {
        let p = GenParams { d: 2, degree: 6, e: 2, extra: 3, seed };
        write_instance(&dir.join(format!("d2_D6_e2_{seed}.json")), &generate(Family::OneSingular, &p)?)?;
    }
    let opts = AnalyzeOptions { timings: false, ..Default::default() };
    print!("{}", corpus_csv(&dir, &opts)?);
    Ok(())
}
