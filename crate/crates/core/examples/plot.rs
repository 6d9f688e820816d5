//! Writes SVG pictures of `sA` inside `Δ_{s,e}` to the temp directory.

use toric_reg::generate::{ex1sing, ex1sing2};
use toric_reg::plot::sumset_svg;
use toric_reg::SumsetTower;

fn main() -> toric_reg::Result<()> {
    let dir = std::env::temp_dir();
    for (name, a) in [("ex1sing", ex1sing()), ("ex1sing2", ex1sing2())] {
        let mut tower = SumsetTower::new(a);
        for s in 1..=2 {
            let (svg, c) = sumset_svg(&mut tower, s)?;
            let path = dir.join(format!("{name}_s{s}.svg"));
            std::fs::write(&path, svg)?;
            println!("{}: {} filled, {} hollow", path.display(), c.filled, c.hollow);
        }
    }
    Ok(())
}
