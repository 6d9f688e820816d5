//! The whole pipeline on one instance, as JSON.

use toric_reg::analysis::{analyze, AnalyzeOptions};
use toric_reg::generate::ex1sing;

fn main() -> toric_reg::Result<()> {
    let bundle = analyze(&ex1sing(), &AnalyzeOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&bundle)?);
    Ok(())
}
