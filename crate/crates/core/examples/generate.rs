//! The instance families, printed in the file format.

use toric_reg::classify::classify;
use toric_reg::generate::{generate, Family, GenParams};
use toric_reg::instance::{instance_hash, instance_json};

fn main() -> toric_reg::Result<()> {
    let p = GenParams { d: 2, degree: 4, e: 2, extra: 2, seed: 42 };
    for f in Family::ALL {
        let a = generate(f, &p)?;
        let r = classify(&a)?;
        println!("# {} ({:?}, {} points, {})", f.name(), r.verdict, a.len(), &instance_hash(&a)[..12]);
        print!("{}", instance_json(&a));
    }
    Ok(())
}
